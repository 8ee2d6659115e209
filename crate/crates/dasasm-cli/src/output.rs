//! Rendering of results as text, CSV or JSON.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

use dasasm::characters::ProductKind;
use dasasm::objects::{Family, Object};
use dasasm::report::CheckReport;
use dasasm::statistics::DistributionTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

pub struct Writer<'a> {
    format: Format,
    out: &'a mut dyn Write,
}

fn csv_err(e: csv::Error) -> io::Error {
    io::Error::other(e)
}

impl<'a> Writer<'a> {
    pub fn new(format: Format, out: &'a mut dyn Write) -> Self {
        Writer { format, out }
    }

    fn json<T: Serialize + ?Sized>(&mut self, v: &T) -> io::Result<()> {
        serde_json::to_writer_pretty(&mut *self.out, v)?;
        writeln!(self.out)
    }

    fn csv(&mut self, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(&mut *self.out);
        w.write_record(header).map_err(csv_err)?;
        for r in rows {
            w.write_record(&r).map_err(csv_err)?;
        }
        w.flush()
    }

    pub fn objects(&mut self, family: Family, n: usize, objs: &[Object]) -> io::Result<()> {
        match self.format {
            Format::Text => {
                for o in objs {
                    writeln!(self.out, "{}", o.to_text())?;
                }
                Ok(())
            }
            Format::Csv => self.csv(
                &["family", "n", "index", "object"],
                objs.iter()
                    .enumerate()
                    .map(|(k, o)| vec![family.to_string(), n.to_string(), k.to_string(), o.to_text()]),
            ),
            Format::Json => {
                let rows: Vec<Vec<Vec<i8>>> = objs.iter().map(|o| o.rows()).collect();
                self.json(&rows)
            }
        }
    }

    pub fn count(&mut self, family: Family, n: usize, c: u64) -> io::Result<()> {
        #[derive(Serialize)]
        struct Count<'a> {
            family: &'a str,
            n: usize,
            count: u64,
        }
        match self.format {
            Format::Text => writeln!(self.out, "{c}"),
            Format::Csv => self.csv(
                &["family", "n", "count"],
                [vec![family.to_string(), n.to_string(), c.to_string()]],
            ),
            Format::Json => self.json(&Count {
                family: family.name(),
                n,
                count: c,
            }),
        }
    }

    pub fn distribution(&mut self, t: &DistributionTable) -> io::Result<()> {
        match self.format {
            Format::Text => {
                writeln!(self.out, "{}", t.csv_header().join(" "))?;
                for r in t.csv_rows() {
                    writeln!(self.out, "{}", r.join(" "))?;
                }
                Ok(())
            }
            Format::Csv => {
                let header = t.csv_header();
                let header: Vec<&str> = header.iter().map(String::as_str).collect();
                self.csv(&header, t.csv_rows())
            }
            Format::Json => self.json(t),
        }
    }

    pub fn reports(&mut self, reports: &[CheckReport]) -> io::Result<()> {
        let n = |r: &CheckReport| r.n.map_or(String::new(), |n| n.to_string());
        match self.format {
            Format::Text => {
                for r in reports {
                    let at = r.n.map_or(String::new(), |n| format!(" n={n}"));
                    writeln!(self.out, "{}{at}: {} (rejected {})", r.check, r.status, r.rejected_points)?;
                    for d in &r.details {
                        writeln!(self.out, "  {d}")?;
                    }
                }
                Ok(())
            }
            Format::Csv => self.csv(
                &["check", "n", "seed", "points", "status", "rejected_points", "details"],
                reports.iter().map(|r| {
                    vec![
                        r.check.clone(),
                        n(r),
                        r.seed.to_string(),
                        r.points.to_string(),
                        r.status.to_string(),
                        r.rejected_points.to_string(),
                        r.details.join("; "),
                    ]
                }),
            ),
            Format::Json => self.json(reports),
        }
    }

    pub fn products(&mut self, rows: &[(ProductKind, usize, String)]) -> io::Result<()> {
        #[derive(Serialize)]
        struct Row<'a> {
            kind: &'a str,
            n: usize,
            value: &'a str,
        }
        match self.format {
            Format::Text => {
                for (k, n, v) in rows {
                    writeln!(self.out, "{k} {n} {v}")?;
                }
                Ok(())
            }
            Format::Csv => self.csv(
                &["kind", "n", "value"],
                rows.iter().map(|(k, n, v)| vec![k.to_string(), n.to_string(), v.clone()]),
            ),
            Format::Json => {
                let r: Vec<Row> = rows
                    .iter()
                    .map(|(k, n, v)| Row {
                        kind: k.name(),
                        n: *n,
                        value: v,
                    })
                    .collect();
                self.json(&r)
            }
        }
    }
}
