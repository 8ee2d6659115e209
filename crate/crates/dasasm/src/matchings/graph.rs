//! The diamond graph Q_n.

use std::collections::BTreeMap;
use std::fmt::Write;

/// A vertex of Q_n: `V(i, j)` sits below diamond (i, j) and above
/// (i + 1, j); `H(i, j)` is the side corner shared by (i, j) and (i, j + 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    V(usize, usize),
    H(usize, usize),
}

impl Node {
    /// Planar position (x, y) on the doubled integer grid, y growing downward.
    pub fn position(self) -> (i64, i64) {
        match self {
            Node::V(i, j) => (2 * j as i64, 2 * i as i64),
            Node::H(i, j) => (2 * j as i64 + 1, 2 * i as i64 - 1),
        }
    }

    /// The color class; the labeled vertices are all `V`.
    pub fn is_v(self) -> bool {
        matches!(self, Node::V(..))
    }
}

impl std::fmt::Display for Node {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Node::V(i, j) => write!(f, "V{i}.{j}"),
            Node::H(i, j) => write!(f, "H{i}.{j}"),
        }
    }
}

/// Q_n with diamonds (i, j), 1 ≤ i ≤ n, i ≤ j ≤ 2n − i, laid out like the
/// entries of an order-n triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamondGraph {
    n: usize,
    nodes: Vec<Node>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    /// Column label j ∈ {1, …, 2n−1} \ {n} → vertex index.
    labels: BTreeMap<usize, usize>,
    /// Diamond (i, j) → indices of its four edges.
    diamonds: BTreeMap<(usize, usize), [usize; 4]>,
}

pub fn build_qn(n: usize) -> DiamondGraph {
    let mut index: BTreeMap<Node, usize> = BTreeMap::new();
    let mut nodes = Vec::new();
    let mut id = |v: Node, nodes: &mut Vec<Node>| {
        *index.entry(v).or_insert_with(|| {
            nodes.push(v);
            nodes.len() - 1
        })
    };
    let mut edges = Vec::new();
    let mut diamonds = BTreeMap::new();
    for i in 1..=n {
        for j in i..=2 * n - i {
            let t = id(Node::V(i - 1, j), &mut nodes);
            let b = id(Node::V(i, j), &mut nodes);
            let l = id(Node::H(i, j - 1), &mut nodes);
            let r = id(Node::H(i, j), &mut nodes);
            let k = edges.len();
            edges.extend([(t, l), (t, r), (b, l), (b, r)]);
            diamonds.insert((i, j), [k, k + 1, k + 2, k + 3]);
        }
    }
    let labels = (1..2 * n)
        .filter(|&j| j != n)
        .map(|j| (j, id(Node::V(j.min(2 * n - j), j), &mut nodes)))
        .collect();
    let mut adj = vec![Vec::new(); nodes.len()];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    DiamondGraph {
        n,
        nodes,
        edges,
        adj,
        labels,
        diamonds,
    }
}

impl DiamondGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn labels(&self) -> &BTreeMap<usize, usize> {
        &self.labels
    }

    pub fn diamonds(&self) -> &BTreeMap<(usize, usize), [usize; 4]> {
        &self.diamonds
    }

    /// Diamonds per row, top to bottom.
    pub fn row_lengths(&self) -> Vec<usize> {
        (1..=self.n)
            .map(|i| self.diamonds.keys().filter(|&&(r, _)| r == i).count())
            .collect()
    }

    /// |V-class| − |H-class|.
    pub fn color_imbalance(&self) -> i64 {
        self.nodes.iter().map(|v| if v.is_v() { 1 } else { -1 }).sum()
    }

    pub fn is_bipartite(&self) -> bool {
        self.edges.iter().all(|&(a, b)| self.nodes[a].is_v() != self.nodes[b].is_v())
    }

    /// One line per vertex: `name x y [label] : neighbor …`.
    pub fn to_adjacency_text(&self) -> String {
        let by_vertex: BTreeMap<usize, usize> = self.labels.iter().map(|(&j, &v)| (v, j)).collect();
        let mut out = String::new();
        for (k, v) in self.nodes.iter().enumerate() {
            let (x, y) = v.position();
            let _ = write!(out, "{v} {x} {y}");
            if let Some(j) = by_vertex.get(&k) {
                let _ = write!(out, " label={j}");
            }
            out.push_str(" :");
            for &w in &self.adj[k] {
                let _ = write!(out, " {}", self.nodes[w]);
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q1_is_a_square() {
        let g = build_qn(1);
        assert_eq!((g.nodes().len(), g.edges().len()), (4, 4));
        assert!(g.labels().is_empty());
    }

    #[test]
    fn rows_and_colors() {
        assert_eq!(build_qn(5).row_lengths(), vec![9, 7, 5, 3, 1]);
        for n in 1..=6 {
            let g = build_qn(n);
            assert!(g.is_bipartite());
            assert_eq!(g.color_imbalance(), n as i64 - 1);
            assert_eq!(g.labels().len(), 2 * n - 2);
            assert!(g.labels().values().all(|&v| g.nodes()[v].is_v()));
        }
    }

    #[test]
    fn export_lists_every_vertex() {
        let g = build_qn(2);
        let text = g.to_adjacency_text();
        assert_eq!(text.lines().count(), g.nodes().len());
        assert_eq!(text.matches("label=").count(), 2);
    }
}
