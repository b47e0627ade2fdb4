//! Graph families and their named designs.
//!
//! Labelings are fixed so vertex indices are reproducible:
//!
//! * hypercube `Q_n`: vertex `J ⊆ [n]` is the bitmask with bit `e−1` set for
//!   each element `e ∈ J`;
//! * Kneser `KG(n,k)`: `k`-subsets of `[n]` in colexicographic order, which is
//!   increasing order of the same bitmask;
//! * derangement graph: permutations of `[n]` in lexicographic order of their
//!   one-line notation `(σ(1), …, σ(n))`.
//!
//! Elements of `[n]` are 1-based throughout, vertex indices 0-based.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::spectral::MAX_DENSE_VERTICES;
use crate::{Error, Result};

pub const MAX_HYPERCUBE_DIMENSION: usize = 12;
pub const MAX_DERANGEMENT_N: usize = 6;

fn invalid(msg: alloc::string::String) -> Error {
    Error::InvalidParameter(msg)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid(format!("complete graph needs n >= 2, got {n}")));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// `Q_n`: subsets of `[n]`, adjacent when they differ in one element.
pub fn hypercube(n: usize) -> Result<Graph> {
    if !(1..=MAX_HYPERCUBE_DIMENSION).contains(&n) {
        return Err(invalid(format!(
            "hypercube dimension must be in 1..={MAX_HYPERCUBE_DIMENSION}, got {n}"
        )));
    }
    let size = 1usize << n;
    Graph::from_edges(
        size,
        (0..size).flat_map(|v| {
            (0..n)
                .map(move |b| (v, v ^ (1 << b)))
                .filter(|&(v, u)| v < u)
        }),
    )
}

fn subset_mask(n: usize, elements: &[usize]) -> Result<usize> {
    let mut mask = 0usize;
    for &e in elements {
        if !(1..=n).contains(&e) {
            return Err(invalid(format!("element {e} is not in [1, {n}]")));
        }
        if mask & 1 << (e - 1) != 0 {
            return Err(invalid(format!("element {e} repeated")));
        }
        mask |= 1 << (e - 1);
    }
    Ok(mask)
}

/// `±1` eigenfunction `χ_I(J) = (−1)^{|I∩J|}` of `Q_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct HypercubeCharacter {
    pub dimension: usize,
    /// Bitmask of `I`.
    pub subset: usize,
    pub values: Vec<i8>,
    /// `1 − 2|I|/n`
    pub eigenvalue: f64,
}

impl HypercubeCharacter {
    pub fn weight(&self) -> usize {
        self.subset.count_ones() as usize
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.values.iter().map(|&x| f64::from(x)).collect()
    }

    /// `max_J |Σ_{J'∼J} χ(J') − (n − 2|I|)·χ(J)|` in integers, i.e. the
    /// eigen-equation scaled by `d = n`. Zero for a true eigenfunction.
    pub fn exact_residual(&self, g: &Graph) -> i64 {
        let scaled = self.dimension as i64 - 2 * self.weight() as i64;
        (0..g.vertex_count())
            .map(|v| {
                let sum: i64 = g
                    .neighbors(v)
                    .iter()
                    .map(|&u| i64::from(self.values[u]))
                    .sum();
                (sum - scaled * i64::from(self.values[v])).abs()
            })
            .max()
            .unwrap_or(0)
    }
}

pub fn hypercube_character(n: usize, subset: &[usize]) -> Result<HypercubeCharacter> {
    if !(1..=MAX_HYPERCUBE_DIMENSION).contains(&n) {
        return Err(invalid(format!("hypercube dimension {n} out of range")));
    }
    let mask = subset_mask(n, subset)?;
    let values = (0..1usize << n)
        .map(|j| {
            if (mask & j).count_ones() % 2 == 0 {
                1
            } else {
                -1
            }
        })
        .collect();
    Ok(HypercubeCharacter {
        dimension: n,
        subset: mask,
        values,
        eigenvalue: 1.0 - 2.0 * mask.count_ones() as f64 / n as f64,
    })
}

/// `S_I = {J : |I∩J| odd}` and its complement `T_I`, for `∅ ≠ I ⊊ [n]`.
pub fn hypercube_design(n: usize, subset: &[usize]) -> Result<(VertexSet, VertexSet)> {
    let chi = hypercube_character(n, subset)?;
    if chi.subset == 0 || chi.weight() == n {
        return Err(invalid(format!(
            "I must be a nonempty proper subset of [{n}]"
        )));
    }
    let mask: Vec<bool> = chi.values.iter().map(|&x| x < 0).collect();
    let s = VertexSet::from_mask(&mask);
    let t = s.complement();
    Ok((s, t))
}

/// A Kneser graph with its vertex labels.
#[derive(Debug, Clone, PartialEq)]
pub struct KneserGraph {
    pub graph: Graph,
    pub n: usize,
    pub k: usize,
    /// `subsets[v]` is the sorted 1-based `k`-subset at vertex `v`.
    pub subsets: Vec<Vec<usize>>,
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `k`-subset bitmasks of `[n]` in colex (= increasing numeric) order.
fn colex_masks(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(binomial(n, k));
    if k == 0 {
        out.push(0);
        return out;
    }
    let limit = 1u64 << n;
    let mut m: u64 = (1 << k) - 1;
    while m < limit {
        out.push(m);
        // Gosper's hack: next larger integer with the same popcount.
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

fn mask_elements(mask: u64) -> Vec<usize> {
    (0..64)
        .filter(|b| mask >> b & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

/// `KG(n,k)`: `k`-subsets of `[n]`, adjacent when disjoint. Requires
/// `k ≥ 1` and `n ≥ 2k` so there is at least one edge.
pub fn kneser(n: usize, k: usize) -> Result<KneserGraph> {
    if k == 0 || n < 2 * k {
        return Err(invalid(format!(
            "Kneser graph KG({n},{k}) needs k >= 1 and n >= 2k"
        )));
    }
    if n > 63 || binomial(n, k) > MAX_DENSE_VERTICES {
        return Err(Error::TooLarge {
            n: binomial(n.min(63), k),
            cap: MAX_DENSE_VERTICES,
        });
    }
    let masks = colex_masks(n, k);
    let mut edges = Vec::new();
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i, j));
            }
        }
    }
    Ok(KneserGraph {
        graph: Graph::from_edges(masks.len(), edges)?,
        n,
        k,
        subsets: masks.into_iter().map(mask_elements).collect(),
    })
}

/// All `k`-subsets containing `element`, as vertices of `KG(n,k)`.
pub fn kneser_star(n: usize, k: usize, element: usize) -> Result<VertexSet> {
    if k == 0 || n < 2 * k || n > 63 {
        return Err(invalid(format!("invalid Kneser parameters ({n},{k})")));
    }
    if !(1..=n).contains(&element) {
        return Err(invalid(format!("element {element} is not in [1, {n}]")));
    }
    let bit = 1u64 << (element - 1);
    let masks = colex_masks(n, k);
    VertexSet::new(
        masks.len(),
        masks
            .iter()
            .enumerate()
            .filter(|(_, &m)| m & bit != 0)
            .map(|(i, _)| i),
    )
}

/// Derangement graph on `S_n` with its vertex labels.
#[derive(Debug, Clone, PartialEq)]
pub struct DerangementGraph {
    pub graph: Graph,
    pub n: usize,
    /// `permutations[v][i-1] = σ(i)`, 1-based values.
    pub permutations: Vec<Vec<usize>>,
}

fn permutations_lex(n: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (1..=n).collect();
    let mut out = vec![current.clone()];
    loop {
        // next_permutation
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
}

/// Permutations of `[n]`, adjacent when they disagree at every position.
pub fn derangement_graph(n: usize) -> Result<DerangementGraph> {
    if !(2..=MAX_DERANGEMENT_N).contains(&n) {
        return Err(invalid(format!(
            "derangement graph needs 2 <= n <= {MAX_DERANGEMENT_N}, got {n}"
        )));
    }
    let perms = permutations_lex(n);
    let mut edges = Vec::new();
    for (a, p) in perms.iter().enumerate() {
        for (b, q) in perms.iter().enumerate().skip(a + 1) {
            if p.iter().zip(q).all(|(x, y)| x != y) {
                edges.push((a, b));
            }
        }
    }
    Ok(DerangementGraph {
        graph: Graph::from_edges(perms.len(), edges)?,
        n,
        permutations: perms,
    })
}

/// `{σ : σ(i) = j}`, an intersecting family of size `(n−1)!`.
pub fn permutation_stabilizer(n: usize, i: usize, j: usize) -> Result<VertexSet> {
    if !(2..=MAX_DERANGEMENT_N).contains(&n) {
        return Err(invalid(format!("n = {n} out of range")));
    }
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(invalid(format!("({i}, {j}) not in [1, {n}]^2")));
    }
    let perms = permutations_lex(n);
    VertexSet::new(
        perms.len(),
        perms
            .iter()
            .enumerate()
            .filter(|(_, p)| p[i - 1] == j)
            .map(|(v, _)| v),
    )
}

/// Random regular graphs for property sweeps.
#[cfg(feature = "random")]
pub mod random {
    use alloc::vec;
    use alloc::vec::Vec;

    use rand::seq::SliceRandom;
    use rand::Rng;

    use crate::graph::Graph;

    /// Uniform pairing model with rejection of loops and repeated edges.
    /// Returns `None` if no simple graph turned up within `attempts` tries or
    /// `n·d` is odd.
    pub fn regular<R: Rng + ?Sized>(
        n: usize,
        d: usize,
        attempts: usize,
        rng: &mut R,
    ) -> Option<Graph> {
        if n * d % 2 == 1 || d >= n {
            return None;
        }
        let mut points: Vec<usize> = (0..n * d).map(|p| p / d).collect();
        'attempt: for _ in 0..attempts {
            points.shuffle(rng);
            let mut edges: Vec<(usize, usize)> = Vec::with_capacity(n * d / 2);
            for pair in points.chunks(2) {
                let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
                if u == v || edges.contains(&(u, v)) {
                    continue 'attempt;
                }
                edges.push((u, v));
            }
            return Graph::from_edges(n, edges).ok();
        }
        None
    }

    /// Connected `d`-regular graph, retrying until one is found.
    pub fn connected_regular<R: Rng + ?Sized>(n: usize, d: usize, rng: &mut R) -> Option<Graph> {
        (0..1000)
            .filter_map(|_| regular(n, d, 100, rng))
            .find(Graph::is_connected)
    }

    /// Connected `d`-regular bipartite graph on two sides of `half` vertices
    /// (side A is `0..half`), built as a union of random perfect matchings
    /// with no repeated edge. When `d > half/2` the matchings build the
    /// `(half−d)`-regular bipartite complement instead, which keeps the
    /// rejection rate low.
    pub fn connected_bipartite_regular<R: Rng + ?Sized>(
        half: usize,
        d: usize,
        rng: &mut R,
    ) -> Option<Graph> {
        if d > half || d == 0 {
            return None;
        }
        let complement = 2 * d > half;
        let m = if complement { half - d } else { d };
        'attempt: for _ in 0..10_000 {
            let mut taken = vec![false; half * half];
            for _ in 0..m {
                let mut perm: Vec<usize> = (0..half).collect();
                perm.shuffle(rng);
                for (a, &b) in perm.iter().enumerate() {
                    if core::mem::replace(&mut taken[a * half + b], true) {
                        continue 'attempt;
                    }
                }
            }
            let edges = (0..half * half)
                .filter(|&i| taken[i] != complement)
                .map(|i| (i / half, half + i % half));
            let g = Graph::from_edges(2 * half, edges).ok()?;
            if g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_constructions() {
        let k4 = complete(4).unwrap();
        assert_eq!((k4.edge_count(), k4.regular_degree()), (6, Some(3)));
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.edge_count(), c5.regular_degree()), (5, Some(2)));
        assert_eq!(c5.bipartition().unwrap(), None);
        assert!(complete(2).unwrap().bipartition().unwrap().is_some());
        assert!(complete(1).is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn hypercube_constructions() {
        let q4 = hypercube(4).unwrap();
        assert_eq!((q4.vertex_count(), q4.edge_count()), (16, 32));
        assert_eq!(hypercube(1).unwrap(), complete(2).unwrap());
        assert_eq!(hypercube(3).unwrap().neighbors(0), &[1, 2, 4]);
        assert!(hypercube(0).is_err());
        assert!(hypercube(13).is_err());
        let (even, odd) = q4.bipartition().unwrap().unwrap();
        assert!(even.members().iter().all(|v| v.count_ones() % 2 == 0));
        assert_eq!((even.len(), odd.len()), (8, 8));
    }

    #[test]
    fn kneser_constructions() {
        let k62 = kneser(6, 2).unwrap();
        assert_eq!(k62.graph.vertex_count(), 15);
        assert_eq!(k62.graph.regular_degree(), Some(6));
        let k72 = kneser(7, 2).unwrap();
        assert_eq!(
            (k72.graph.vertex_count(), k72.graph.regular_degree()),
            (21, Some(10))
        );
        let petersen = kneser(5, 2).unwrap();
        assert_eq!(petersen.graph.vertex_count(), 10);
        assert_eq!(petersen.graph.regular_degree(), Some(3));
        // colex: {1,2} {1,3} {2,3} {1,4} ...
        assert_eq!(
            k62.subsets[..4],
            [vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 4]]
        );
        assert!(kneser(3, 2).is_err());
        assert!(kneser(5, 0).is_err());
    }

    #[test]
    fn kneser_stars() {
        assert_eq!(kneser_star(6, 2, 1).unwrap().len(), 5);
        assert_eq!(kneser_star(7, 2, 1).unwrap().len(), 6);
        assert_eq!(kneser_star(5, 2, 1).unwrap().len(), 4);
        let k = kneser(7, 3).unwrap();
        let star = kneser_star(7, 3, 4).unwrap();
        assert_eq!(star.len(), binomial(6, 2));
        assert!(k.graph.is_independent(&star).unwrap());
        assert!(star.members().iter().all(|&v| k.subsets[v].contains(&4)));
        assert!(kneser_star(6, 2, 7).is_err());
        assert!(kneser_star(6, 2, 0).is_err());
    }

    fn derangements(n: usize) -> usize {
        permutations_lex(n)
            .iter()
            .filter(|p| p.iter().enumerate().all(|(i, &x)| x != i + 1))
            .count()
    }

    #[test]
    fn derangement_constructions() {
        assert_eq!(derangements(3), 2);
        assert_eq!(derangements(4), 9);
        let d3 = derangement_graph(3).unwrap();
        assert_eq!(
            (d3.graph.vertex_count(), d3.graph.regular_degree()),
            (6, Some(2))
        );
        let d4 = derangement_graph(4).unwrap();
        assert_eq!(
            (d4.graph.vertex_count(), d4.graph.regular_degree()),
            (24, Some(9))
        );
        let d2 = derangement_graph(2).unwrap();
        assert_eq!(d2.graph, complete(2).unwrap());
        assert_eq!(d4.permutations[0], vec![1, 2, 3, 4]);
        assert_eq!(d4.permutations[23], vec![4, 3, 2, 1]);
        assert!(derangement_graph(7).is_err());
    }

    #[test]
    fn stabilizers() {
        assert_eq!(permutation_stabilizer(4, 1, 1).unwrap().len(), 6);
        assert_eq!(permutation_stabilizer(3, 2, 2).unwrap().len(), 2);
        assert_eq!(permutation_stabilizer(2, 1, 2).unwrap().len(), 1);
        let d4 = derangement_graph(4).unwrap();
        for i in 1..=4 {
            for j in 1..=4 {
                let s = permutation_stabilizer(4, i, j).unwrap();
                assert!(d4.graph.is_independent(&s).unwrap());
            }
        }
        assert!(permutation_stabilizer(4, 0, 1).is_err());
        assert!(permutation_stabilizer(4, 1, 5).is_err());
    }

    #[test]
    fn hypercube_designs() {
        let (s, t) = hypercube_design(4, &[1]).unwrap();
        assert_eq!(s.len(), 8);
        assert!(s.members().iter().all(|&j| j & 1 == 1));
        assert_eq!(t, s.complement());
        // Enumerated by hand: subsets of [3] with exactly one of {1,2}.
        let (s, _) = hypercube_design(3, &[1, 2]).unwrap();
        assert_eq!(s.members(), &[0b001, 0b010, 0b101, 0b110]);
        for n in 2..7 {
            for mask in 1..(1usize << n) - 1 {
                let elems: Vec<usize> = (0..n)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| b + 1)
                    .collect();
                assert_eq!(hypercube_design(n, &elems).unwrap().0.len(), 1 << (n - 1));
            }
        }
        assert!(hypercube_design(3, &[]).is_err());
        assert!(hypercube_design(3, &[1, 2, 3]).is_err());
        assert!(hypercube_design(3, &[4]).is_err());
        assert!(hypercube_design(3, &[1, 1]).is_err());
    }

    #[test]
    fn characters() {
        let c = hypercube_character(3, &[]).unwrap();
        assert!(c.values.iter().all(|&x| x == 1));
        assert_eq!(c.eigenvalue, 1.0);
        let parity = hypercube_character(3, &[1, 2, 3]).unwrap();
        assert_eq!(parity.eigenvalue, -1.0);
        assert!(
            (0..8usize).all(|j| parity.values[j] == if j.count_ones() % 2 == 0 { 1 } else { -1 })
        );
        assert_eq!(hypercube_character(4, &[2]).unwrap().eigenvalue, 0.5);
        let q = hypercube(5).unwrap();
        for mask in 0..32usize {
            let elems: Vec<usize> = (0..5)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b + 1)
                .collect();
            assert_eq!(
                hypercube_character(5, &elems).unwrap().exact_residual(&q),
                0
            );
        }
    }
}
