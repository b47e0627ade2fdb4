//! Simple undirected graphs on dense labels `0..n` and vertex subsets.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A simple undirected graph: no loops, no multiple edges.
///
/// Edges are stored once as `(u, v)` with `u < v`, sorted. Adjacency lists are
/// sorted and symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from unordered pairs. Repeated pairs (in either
    /// orientation) collapse to one edge; loops are rejected.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges = Vec::new();
        for (u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            edges.push(if u < v { (u, v) } else { (v, u) });
        }
        edges.sort_unstable();
        edges.dedup();

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// The common degree, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adjacency.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).iter().all(|&seen| seen)
    }

    fn component_of(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen
    }

    /// Two-coloring of a connected graph. The class containing vertex 0 comes
    /// first. Returns `Ok(None)` for non-bipartite graphs.
    pub fn bipartition(&self) -> Result<Option<(VertexSet, VertexSet)>> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::from([0]);
        color[0] = Some(false);
        while let Some(v) = queue.pop_front() {
            let c = color[v].unwrap_or(false);
            for &u in &self.adjacency[v] {
                match color[u] {
                    None => {
                        color[u] = Some(!c);
                        queue.push_back(u);
                    }
                    Some(cu) if cu == c => return Ok(None),
                    Some(_) => {}
                }
            }
        }
        let (a, b): (Vec<usize>, Vec<usize>) = (0..self.n).partition(|&v| color[v] == Some(false));
        Ok(Some((
            VertexSet::from_sorted(self.n, a),
            VertexSet::from_sorted(self.n, b),
        )))
    }

    /// Number of edges with exactly one endpoint in `s`.
    pub fn edge_boundary(&self, s: &VertexSet) -> Result<usize> {
        self.check_host(s)?;
        let mask = s.mask();
        Ok(self
            .edges
            .iter()
            .filter(|&&(u, v)| mask[u] != mask[v])
            .count())
    }

    /// Number of edges with both endpoints in `s`.
    pub fn internal_edges(&self, s: &VertexSet) -> Result<usize> {
        self.check_host(s)?;
        let mask = s.mask();
        Ok(self
            .edges
            .iter()
            .filter(|&&(u, v)| mask[u] && mask[v])
            .count())
    }

    pub fn is_independent(&self, s: &VertexSet) -> Result<bool> {
        Ok(self.internal_edges(s)? == 0)
    }

    /// Every vertex outside `s` has a neighbor in `s`.
    pub fn is_dominating(&self, s: &VertexSet) -> Result<bool> {
        self.check_host(s)?;
        let mask = s.mask();
        Ok((0..self.n).all(|v| mask[v] || self.adjacency[v].iter().any(|&u| mask[u])))
    }

    pub(crate) fn check_host(&self, s: &VertexSet) -> Result<()> {
        if s.host_n != self.n {
            return Err(Error::HostMismatch {
                expected: self.n,
                found: s.host_n,
            });
        }
        Ok(())
    }
}

/// A subset of the vertices of a graph on `host_n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    host_n: usize,
    members: Vec<usize>,
}

impl VertexSet {
    /// Members may come in any order; duplicates and out-of-range indices are
    /// errors.
    pub fn new<I>(host_n: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        for pair in members.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DuplicateVertex(pair[0]));
            }
        }
        if let Some(&last) = members.last() {
            if last >= host_n {
                return Err(Error::VertexOutOfRange {
                    vertex: last,
                    n: host_n,
                });
            }
        }
        Ok(VertexSet { host_n, members })
    }

    pub(crate) fn from_sorted(host_n: usize, members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|p| p[0] < p[1]));
        debug_assert!(members.last().is_none_or(|&m| m < host_n));
        VertexSet { host_n, members }
    }

    pub fn empty(host_n: usize) -> Self {
        VertexSet {
            host_n,
            members: Vec::new(),
        }
    }

    pub fn full(host_n: usize) -> Self {
        VertexSet {
            host_n,
            members: (0..host_n).collect(),
        }
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        let members = (0..mask.len()).filter(|&v| mask[v]).collect();
        VertexSet {
            host_n: mask.len(),
            members,
        }
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.host_n
    }

    /// Nonempty and not the whole vertex set.
    pub fn is_proper(&self) -> bool {
        !self.is_empty() && !self.is_full()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn complement(&self) -> VertexSet {
        let mask = self.mask();
        let members = (0..self.host_n).filter(|&v| !mask[v]).collect();
        VertexSet {
            host_n: self.host_n,
            members,
        }
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.host_n];
        for &v in &self.members {
            mask[v] = true;
        }
        mask
    }

    /// The indicator function `1_S` as a real vector.
    pub fn indicator(&self) -> Vec<f64> {
        let mut f = vec![0.0; self.host_n];
        for &v in &self.members {
            f[v] = 1.0;
        }
        f
    }

    /// Applies a vertex relabeling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<VertexSet> {
        if perm.len() != self.host_n {
            return Err(Error::DimensionMismatch {
                expected: self.host_n,
                found: perm.len(),
            });
        }
        VertexSet::new(self.host_n, self.members.iter().map(|&v| perm[v]))
    }
}

impl Graph {
    /// Applies a vertex relabeling `v -> perm[v]`; `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: p,
                    n: self.n,
                });
            }
            if core::mem::replace(&mut seen[p], true) {
                return Err(Error::DuplicateVertex(p));
            }
        }
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}
