use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

use crate::hp::Fixed;
use crate::sum::NeumaierSum;
use crate::weight::weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("adjacency is not symmetric at {0}-{1}")]
    Asymmetric(usize, usize),
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("root {0} is not a vertex")]
    BadRoot(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SwitchError {
    #[error("the two edges must be distinct")]
    SameEdge,
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("{0}-{1} is already an edge")]
    EdgeExists(usize, usize),
    #[error("rewiring does not give a tree: {0}")]
    NotATree(TreeError),
}

/// Rooted tree stored as symmetric adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    adj: Vec<Vec<usize>>,
    root: usize,
}

impl Tree {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(TreeError::OutOfRange(u));
            }
            if v >= n {
                return Err(TreeError::OutOfRange(v));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Self::from_adjacency(adj)
    }

    pub fn from_adjacency(adj: Vec<Vec<usize>>) -> Result<Self, TreeError> {
        Self::with_root(adj, 0)
    }

    pub fn with_root(adj: Vec<Vec<usize>>, root: usize) -> Result<Self, TreeError> {
        let t = Tree { adj, root };
        t.check()?;
        Ok(t)
    }

    /// Re-checks every structural invariant.
    pub fn check(&self) -> Result<(), TreeError> {
        let n = self.adj.len();
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if self.root >= n {
            return Err(TreeError::BadRoot(self.root));
        }
        let mut half_edges = 0usize;
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if v >= n {
                    return Err(TreeError::OutOfRange(v));
                }
                if v == u {
                    return Err(TreeError::SelfLoop(u));
                }
                if !self.adj[v].contains(&u) {
                    return Err(TreeError::Asymmetric(u, v));
                }
            }
            let mut sorted = list.clone();
            sorted.sort_unstable();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    return Err(TreeError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
                }
            }
            half_edges += list.len();
        }
        let found = half_edges / 2;
        if found != n - 1 {
            return Err(TreeError::EdgeCount { expected: n - 1, found });
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([self.root]);
        seen[self.root] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        if reached != n {
            return Err(TreeError::Disconnected);
        }
        Ok(())
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path is a tree")
    }

    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Self::from_edges(n, &edges).expect("star is a tree")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].contains(&v)
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.adj.len().saturating_sub(1));
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Degree → number of vertices with that degree.
    pub fn degree_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for list in &self.adj {
            *census.entry(list.len()).or_insert(0) += 1;
        }
        census
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, TreeError> {
        let n = self.adj.len();
        let mut adj = vec![Vec::new(); n];
        for (u, list) in self.adj.iter().enumerate() {
            let pu = *perm.get(u).ok_or(TreeError::OutOfRange(u))?;
            if pu >= n {
                return Err(TreeError::OutOfRange(pu));
            }
            adj[pu] = list.iter().map(|&v| perm[v]).collect();
        }
        Self::with_root(adj, perm[self.root])
    }
}

pub fn abc_index(t: &Tree) -> f64 {
    let mut acc = NeumaierSum::new();
    for (u, v) in t.edges() {
        acc.add(weight(t.degree(u) as f64, t.degree(v) as f64));
    }
    acc.total()
}

/// ABC index in 256-bit fixed point, grouping edges by degree pair.
pub fn abc_index_hp(t: &Tree) -> Fixed {
    let mut pairs: BTreeMap<(usize, usize), i128> = BTreeMap::new();
    for (u, v) in t.edges() {
        let (a, b) = (t.degree(u), t.degree(v));
        *pairs.entry((a.min(b), a.max(b))).or_insert(0) += 1;
    }
    pairs
        .into_iter()
        .map(|((a, b), c)| Fixed::weight(a as u64, b as u64).mul_int(c))
        .sum()
}

/// Replaces edges `pq` and `rs` by `ps` and `qr`.
pub fn apply_switch(
    t: &Tree,
    pq: (usize, usize),
    rs: (usize, usize),
) -> Result<Tree, SwitchError> {
    let (p, q) = pq;
    let (r, s) = rs;
    let same = |a: (usize, usize), b: (usize, usize)| a == b || a == (b.1, b.0);
    if same(pq, rs) {
        return Err(SwitchError::SameEdge);
    }
    for (a, b) in [pq, rs] {
        if !t.has_edge(a, b) {
            return Err(SwitchError::NotAnEdge(a, b));
        }
    }
    for (a, b) in [(p, s), (q, r)] {
        if a == b {
            return Err(SwitchError::NotATree(TreeError::SelfLoop(a)));
        }
        if t.has_edge(a, b) {
            return Err(SwitchError::EdgeExists(a, b));
        }
    }
    let mut edges: Vec<(usize, usize)> = t
        .edges()
        .into_iter()
        .filter(|&e| !same(e, pq) && !same(e, rs))
        .collect();
    edges.push((p, s));
    edges.push((q, r));
    let n = t.order();
    let mut adj = vec![Vec::new(); n];
    for (u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    Tree::with_root(adj, t.root()).map_err(SwitchError::NotATree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_structures() {
        assert_eq!(Tree::from_edges(0, &[]), Err(TreeError::Empty));
        assert!(matches!(Tree::from_edges(3, &[(0, 1)]), Err(TreeError::EdgeCount { .. })));
        assert!(matches!(
            Tree::from_edges(4, &[(0, 1), (1, 2), (2, 0)]),
            Err(TreeError::Disconnected)
        ));
        assert_eq!(Tree::from_edges(2, &[(0, 2)]), Err(TreeError::OutOfRange(2)));
        assert_eq!(Tree::from_edges(2, &[(1, 1)]), Err(TreeError::SelfLoop(1)));
        assert!(matches!(
            Tree::from_adjacency(vec![vec![1], vec![]]),
            Err(TreeError::Asymmetric(0, 1))
        ));
    }

    #[test]
    fn single_vertex_is_a_tree() {
        let t = Tree::from_edges(1, &[]).unwrap();
        assert_eq!(abc_index(&t), 0.0);
    }

    #[test]
    fn edges_are_sorted() {
        let t = Tree::from_edges(4, &[(3, 0), (2, 0), (1, 0)]).unwrap();
        assert_eq!(t.edges(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn hp_agrees_with_f64() {
        let t = Tree::from_edges(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).unwrap();
        assert!((abc_index_hp(&t).to_f64() - abc_index(&t)).abs() < 1e-14);
    }
}
