//! Weak (tensor) and cartesian products, and design orders of product sets.
//!
//! Product vertices are indexed row-major: `(v1, v2) ↦ v1·n2 + v2`.

use alloc::vec::Vec;

use crate::design::{self, DesignReport};
use crate::graph::{Graph, VertexSet};
use crate::spectral::{GraphSpectrum, MAX_DENSE_VERTICES};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductLabeling {
    pub n1: usize,
    pub n2: usize,
}

impl ProductLabeling {
    pub fn new(n1: usize, n2: usize) -> Self {
        ProductLabeling { n1, n2 }
    }

    pub fn size(&self) -> usize {
        self.n1 * self.n2
    }

    pub fn index(&self, v1: usize, v2: usize) -> usize {
        v1 * self.n2 + v2
    }

    pub fn pair(&self, index: usize) -> (usize, usize) {
        (index / self.n2, index % self.n2)
    }
}

fn labeling(g1: &Graph, g2: &Graph) -> Result<ProductLabeling> {
    let l = ProductLabeling::new(g1.vertex_count(), g2.vertex_count());
    if l.size() > MAX_DENSE_VERTICES {
        return Err(Error::TooLarge {
            n: l.size(),
            cap: MAX_DENSE_VERTICES,
        });
    }
    Ok(l)
}

/// `(v1,v2) ∼ (u1,u2)` iff `v1 ∼ u1` and `v2 ∼ u2`. Its adjacency matrix is
/// the Kronecker product of the factors'.
pub fn weak_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    if g1.regular_degree().is_none() || g2.regular_degree().is_none() {
        return Err(Error::NotRegular);
    }
    let l = labeling(g1, g2)?;
    let mut edges = Vec::with_capacity(2 * g1.edge_count() * g2.edge_count());
    for &(a, b) in g1.edges() {
        for &(c, d) in g2.edges() {
            edges.push((l.index(a, c), l.index(b, d)));
            edges.push((l.index(a, d), l.index(b, c)));
        }
    }
    Graph::from_edges(l.size(), edges)
}

/// `r`-fold weak power, associated to the left.
pub fn weak_power(g: &Graph, r: usize) -> Result<Graph> {
    if r == 0 {
        return Err(Error::InvalidParameter("weak power needs r >= 1".into()));
    }
    let mut out = g.clone();
    for _ in 1..r {
        out = weak_product(&out, g)?;
    }
    Ok(out)
}

/// `(v1,v2) ∼ (u1,u2)` iff one coordinate agrees and the other is adjacent.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let l = labeling(g1, g2)?;
    let mut edges = Vec::new();
    for v1 in 0..l.n1 {
        for &(c, d) in g2.edges() {
            edges.push((l.index(v1, c), l.index(v1, d)));
        }
    }
    for &(a, b) in g1.edges() {
        for v2 in 0..l.n2 {
            edges.push((l.index(a, v2), l.index(b, v2)));
        }
    }
    Graph::from_edges(l.size(), edges)
}

/// `W1 × W2` under the row-major labeling.
pub fn product_set(w1: &VertexSet, w2: &VertexSet) -> VertexSet {
    let l = ProductLabeling::new(w1.host_n(), w2.host_n());
    let members = w1
        .members()
        .iter()
        .flat_map(|&a| w2.members().iter().map(move |&b| l.index(a, b)))
        .collect();
    VertexSet::from_sorted(l.size(), members)
}

/// `W^{×r}` matching `weak_power`.
pub fn power_set(w: &VertexSet, r: usize) -> VertexSet {
    let mut out = w.clone();
    for _ in 1..r {
        out = product_set(&out, w);
    }
    out
}

/// Relabeling that swaps the factors: `index(v1,v2)` in `G1×G2` goes to
/// `index(v2,v1)` in `G2×G1`.
pub fn swap_permutation(n1: usize, n2: usize) -> Vec<usize> {
    let from = ProductLabeling::new(n1, n2);
    let to = ProductLabeling::new(n2, n1);
    (0..from.size())
        .map(|i| {
            let (a, b) = from.pair(i);
            to.index(b, a)
        })
        .collect()
}

fn refuse_disconnected(product: &Graph, factors: &[&Graph]) -> Result<()> {
    if product.is_connected() {
        return Ok(());
    }
    let bipartite = factors
        .iter()
        .filter(|g| g.is_connected() && matches!(g.bipartition(), Ok(Some(_))))
        .count();
    Err(Error::DisconnectedProduct {
        bipartite_factors: bipartite >= 2,
    })
}

/// Design order of a factor set; the full vertex set has order 0.
fn factor_order(
    spectrum: &GraphSpectrum,
    w: &VertexSet,
    epsilon: f64,
) -> Result<(usize, Vec<f64>)> {
    if w.is_full() {
        return Ok((0, Vec::new()));
    }
    let r = design::design_order(spectrum, w, epsilon)?;
    Ok((r.order, r.active.iter().map(|a| a.eigenvalue).collect()))
}

/// Whether the eigenvalue products `λ·μ` over the active pairs (constant
/// included, the constant pair excluded) are pairwise separated by more than
/// `tau`. When they are, the product order is exactly
/// `(k1+1)(k2+1)−1`: each pair contributes the nonzero component
/// `P_λ 1_{W1} × P_μ 1_{W2}` to its own eigenspace.
fn collision_free(active1: &[f64], active2: &[f64], tau: f64) -> bool {
    let with_constant = |a: &[f64]| {
        let mut v = Vec::with_capacity(a.len() + 1);
        v.push(1.0);
        v.extend_from_slice(a);
        v
    };
    let a = with_constant(active1);
    let b = with_constant(active2);
    let mut products: Vec<f64> = Vec::new();
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if i + j > 0 {
                products.push(x * y);
            }
        }
    }
    products.sort_by(f64::total_cmp);
    products.windows(2).all(|w| w[1] - w[0] > tau) && products.iter().all(|p| (p - 1.0).abs() > tau)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProductOrderRecord {
    pub k1: usize,
    pub k2: usize,
    pub k_product: usize,
    /// `(k1+1)(k2+1) − 1`
    pub bound: usize,
    pub holds: bool,
    /// One of the factor sets is the whole factor.
    pub cylinder: bool,
    pub collision_free: bool,
    /// Present for collision-free cases: whether the order equals the bound.
    pub exact: Option<bool>,
    pub product_report: DesignReport,
}

/// Design orders of `W1`, `W2` and `W1 × W2`, checked against
/// `(k1+1)(k2+1) − 1`. A factor set may be the full vertex set (order 0),
/// which turns the product set into a cylinder whose order must equal the
/// other factor's.
pub fn verify_product_order(
    g1: &Graph,
    w1: &VertexSet,
    g2: &Graph,
    w2: &VertexSet,
    epsilon: f64,
    tau: f64,
) -> Result<ProductOrderRecord> {
    for (g, w) in [(g1, w1), (g2, w2)] {
        g.check_host(w)?;
        if w.is_empty() {
            return Err(Error::ImproperSubset {
                size: 0,
                n: g.vertex_count(),
            });
        }
    }
    let product = weak_product(g1, g2)?;
    let set = product_set(w1, w2);
    if !set.is_proper() {
        return Err(Error::ImproperSubset {
            size: set.len(),
            n: set.host_n(),
        });
    }
    refuse_disconnected(&product, &[g1, g2])?;

    let s1 = GraphSpectrum::compute(g1, tau)?;
    let s2 = GraphSpectrum::compute(g2, tau)?;
    let sp = GraphSpectrum::compute(&product, tau)?;
    let (k1, active1) = factor_order(&s1, w1, epsilon)?;
    let (k2, active2) = factor_order(&s2, w2, epsilon)?;
    let product_report = design::design_order(&sp, &set, epsilon)?;
    let k_product = product_report.order;
    let bound = (k1 + 1) * (k2 + 1) - 1;
    let collision_free = collision_free(&active1, &active2, tau);
    Ok(ProductOrderRecord {
        k1,
        k2,
        k_product,
        bound,
        holds: k_product <= bound,
        cylinder: w1.is_full() || w2.is_full(),
        collision_free,
        exact: collision_free.then_some(k_product == bound),
        product_report,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct PowerOrderRecord {
    pub k: usize,
    pub r: usize,
    pub k_power: usize,
    /// `(k+1)^r − 1`
    pub bound: usize,
    pub holds: bool,
}

/// Order of `W^{×r}` in the weak power `G^{×r}` against `(k+1)^r − 1`.
pub fn verify_power_order(
    g: &Graph,
    w: &VertexSet,
    r: usize,
    epsilon: f64,
    tau: f64,
) -> Result<PowerOrderRecord> {
    let power = weak_power(g, r)?;
    refuse_disconnected(&power, &[g, g])?;
    let set = power_set(w, r);
    let s = GraphSpectrum::compute(g, tau)?;
    let k = design::design_order(&s, w, epsilon)?.order;
    let sp = GraphSpectrum::compute(&power, tau)?;
    let k_power = design::design_order(&sp, &set, epsilon)?.order;
    let bound = (k + 1).pow(r as u32) - 1;
    Ok(PowerOrderRecord {
        k,
        r,
        k_power,
        bound,
        holds: k_power <= bound,
    })
}
