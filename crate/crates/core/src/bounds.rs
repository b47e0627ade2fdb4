//! Hoffman and Cheeger bounds, exact oracles for `α(G)` and `h(G)`, and the
//! two inequality chains behind the bounds evaluated term by term.

use alloc::format;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::linalg::dot;
use crate::spectral::{GraphSpectrum, SpectralDecomposition};
use crate::{Error, Result};

pub const DEFAULT_INDEPENDENCE_CAP: usize = 40;
pub const DEFAULT_CHEEGER_CAP: usize = 24;
pub const DEFAULT_SHARPNESS_TOLERANCE: f64 = 1e-9;

// Both oracles keep vertex sets in a u64.
const BITSET_LIMIT: usize = 64;

/// `−λ_n / (1 − λ_n)`.
pub fn hoffman_bound(dec: &SpectralDecomposition) -> Result<f64> {
    let lambda_min = dec.smallest();
    if lambda_min >= 1.0 - 1e-12 {
        return Err(Error::InvalidParameter(format!(
            "smallest eigenvalue {lambda_min} leaves the Hoffman bound undefined"
        )));
    }
    Ok(-lambda_min / (1.0 - lambda_min))
}

/// `1 − λ₂`.
pub fn cheeger_lower(dec: &SpectralDecomposition) -> Result<f64> {
    dec.second_largest()
        .map(|l| 1.0 - l)
        .ok_or_else(|| Error::InvalidParameter("a single vertex has no second eigenvalue".into()))
}

/// `|V||E(S,V∖S)| / (d|S||V∖S|)` for a nonempty proper `s`.
pub fn cheeger_ratio(g: &Graph, s: &VertexSet) -> Result<f64> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    let n = g.vertex_count();
    if !s.is_proper() {
        return Err(Error::ImproperSubset { size: s.len(), n });
    }
    let b = g.edge_boundary(s)?;
    let k = s.len();
    Ok((n * b) as f64 / (d * k * (n - k)) as f64)
}

/// `|E(S,V∖S)| / min{|S|, |V∖S|}` for a nonempty proper `s`.
pub fn classic_cheeger_ratio(g: &Graph, s: &VertexSet) -> Result<f64> {
    let n = g.vertex_count();
    if !s.is_proper() {
        return Err(Error::ImproperSubset { size: s.len(), n });
    }
    let b = g.edge_boundary(s)?;
    Ok(b as f64 / s.len().min(n - s.len()) as f64)
}

fn adjacency_masks(g: &Graph, cap: usize) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    let cap = cap.min(BITSET_LIMIT);
    if n > cap {
        return Err(Error::TooLarge { n, cap });
    }
    Ok((0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect())
}

fn mask_to_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::new(n, (0..n).filter(|&v| mask >> v & 1 == 1)).expect("mask within range")
}

/// Lexicographic order on the sorted member lists of two bitsets.
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    let low = diff.trailing_zeros();
    let above = |m: u64| if low == 63 { 0 } else { m >> (low + 1) };
    if a >> low & 1 == 1 {
        // a continues with `low`, b with something larger or nothing.
        above(b) != 0
    } else {
        above(a) == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndependenceResult {
    pub size: usize,
    /// `α(G) = size / n`
    pub ratio: f64,
    /// Lexicographically smallest maximum independent set.
    pub witness: VertexSet,
}

/// Exact maximum independent set by branch and bound.
///
/// Branches on the lowest candidate vertex, include before exclude, so the
/// first maximum set reached is the lexicographically smallest one; later
/// sets replace it only when strictly larger. Pruning uses a greedy clique
/// cover of the candidates (a coloring of the complement), which bounds how
/// many of them an independent set can still take.
pub fn independence_ratio_exact(g: &Graph, cap: usize) -> Result<IndependenceResult> {
    let adj = adjacency_masks(g, cap)?;
    let n = g.vertex_count();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut search = MisSearch {
        adj: &adj,
        best: 0,
        best_size: 0,
    };
    search.expand(0, 0, all);
    Ok(IndependenceResult {
        size: search.best_size as usize,
        ratio: search.best_size as f64 / n as f64,
        witness: mask_to_set(n, search.best),
    })
}

struct MisSearch<'a> {
    adj: &'a [u64],
    best: u64,
    best_size: u32,
}

impl MisSearch<'_> {
    fn expand(&mut self, current: u64, size: u32, candidates: u64) {
        if candidates == 0 {
            if size > self.best_size {
                self.best = current;
                self.best_size = size;
            }
            return;
        }
        if size + self.clique_cover(candidates) <= self.best_size {
            return;
        }
        let v = candidates.trailing_zeros();
        let bit = 1u64 << v;
        self.expand(
            current | bit,
            size + 1,
            candidates & !bit & !self.adj[v as usize],
        );
        self.expand(current, size, candidates & !bit);
    }

    fn clique_cover(&self, mut remaining: u64) -> u32 {
        let mut cliques = 0;
        while remaining != 0 {
            let u = remaining.trailing_zeros();
            remaining &= !(1 << u);
            let mut extend = remaining & self.adj[u as usize];
            while extend != 0 {
                let w = extend.trailing_zeros();
                remaining &= !(1 << w);
                extend &= self.adj[w as usize] & !(1 << w);
            }
            cliques += 1;
        }
        cliques
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheegerResult {
    /// `h(G) = min |V||E(S,V∖S)| / (d|S||V∖S|)`
    pub constant: f64,
    /// Lexicographically smallest optimal side; it always contains vertex 0.
    pub witness: VertexSet,
    pub boundary: usize,
    /// `h'(G) = min |E(S,V∖S)| / min{|S|,|V∖S|}`
    pub classic: f64,
    pub classic_witness: VertexSet,
}

#[derive(Clone, Copy)]
struct Candidate {
    boundary: u64,
    size: u64,
    witness: u64,
}

/// Exact `h(G)` and `h'(G)` by enumerating every cut once.
///
/// Vertex `n−1` is pinned to the complement, leaving `2^{n−1} − 1` proper
/// subsets, visited in Gray-code order so each step toggles one vertex and
/// updates the boundary in `O(1)` with a popcount. Optima are compared in
/// exact integer arithmetic.
pub fn cheeger_constant_exact(g: &Graph, cap: usize) -> Result<CheegerResult> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "the Cheeger constant needs at least two vertices".into(),
        ));
    }
    if d == 0 {
        return Err(Error::Disconnected);
    }
    let adj = adjacency_masks(g, cap.min(BITSET_LIMIT - 1))?;
    let full: u64 = (1u64 << n) - 1;
    let nn = n as u64;

    let side_with_zero = |s: u64| if s & 1 == 1 { s } else { full ^ s };
    // `h` numerators/denominators differ from the classic ones but both are
    // ratios of small integers.
    let h_key = |c: &Candidate| (c.boundary, c.size * (nn - c.size));
    let classic_key = |c: &Candidate| (c.boundary, c.size.min(nn - c.size));
    let better = |key: &dyn Fn(&Candidate) -> (u64, u64), a: &Candidate, b: &Candidate| {
        let (an, ad) = key(a);
        let (bn, bd) = key(b);
        let lhs = an as u128 * bd as u128;
        let rhs = bn as u128 * ad as u128;
        lhs < rhs || lhs == rhs && lex_less(a.witness, b.witness)
    };

    let mut s: u64 = 0;
    let mut size: u64 = 0;
    let mut boundary: u64 = 0;
    let mut best_h: Option<Candidate> = None;
    let mut best_classic: Option<Candidate> = None;
    let steps: u64 = 1 << (n - 1);
    for i in 1..steps {
        let v = i.trailing_zeros() as usize;
        let bit = 1u64 << v;
        let inside = (adj[v] & s).count_ones() as u64;
        if s & bit == 0 {
            boundary = boundary + d as u64 - 2 * inside;
            size += 1;
        } else {
            boundary = boundary + 2 * inside - d as u64;
            size -= 1;
        }
        s ^= bit;
        let cand = Candidate {
            boundary,
            size,
            witness: side_with_zero(s),
        };
        if best_h.is_none_or(|b| better(&h_key, &cand, &b)) {
            best_h = Some(cand);
        }
        if best_classic.is_none_or(|b| better(&classic_key, &cand, &b)) {
            best_classic = Some(cand);
        }
    }
    let h = best_h.expect("n >= 2 gives at least one cut");
    let c = best_classic.expect("n >= 2 gives at least one cut");
    Ok(CheegerResult {
        constant: (nn * h.boundary) as f64 / (d as u64 * h.size * (nn - h.size)) as f64,
        witness: mask_to_set(n, h.witness),
        boundary: h.boundary as usize,
        classic: c.boundary as f64 / c.size.min(nn - c.size) as f64,
        classic_witness: mask_to_set(n, c.witness),
    })
}

/// Outcome of comparing an exact (or witnessed) value with a spectral bound.
#[derive(Debug, Clone, PartialEq)]
pub struct Sharpness {
    pub sharp: bool,
    pub bound: f64,
    pub value: f64,
    /// Present when sharp.
    pub witness: Option<VertexSet>,
    /// Only a given witness was checked against the bound; global optimality
    /// was not verified.
    pub witness_only: bool,
}

pub fn hoffman_sharpness(
    g: &Graph,
    spectrum: &GraphSpectrum,
    cap: usize,
    tolerance: f64,
) -> Result<Sharpness> {
    let bound = hoffman_bound(&spectrum.decomposition)?;
    let alpha = independence_ratio_exact(g, cap)?;
    let sharp = (alpha.ratio - bound).abs() <= tolerance;
    Ok(Sharpness {
        sharp,
        bound,
        value: alpha.ratio,
        witness: sharp.then_some(alpha.witness),
        witness_only: false,
    })
}

/// Checks a known independent set against the Hoffman bound when the exact
/// oracle is out of reach. Meeting the bound proves sharpness (the bound caps
/// every independent set) but says nothing otherwise, so a miss reports
/// `sharp = false` with `witness_only` set.
pub fn hoffman_witness_check(
    g: &Graph,
    spectrum: &GraphSpectrum,
    witness: &VertexSet,
    tolerance: f64,
) -> Result<Sharpness> {
    if !g.is_independent(witness)? {
        return Err(Error::NotIndependent);
    }
    let bound = hoffman_bound(&spectrum.decomposition)?;
    let value = witness.len() as f64 / g.vertex_count() as f64;
    let sharp = (value - bound).abs() <= tolerance;
    Ok(Sharpness {
        sharp,
        bound,
        value,
        witness: sharp.then(|| witness.clone()),
        witness_only: true,
    })
}

pub fn cheeger_sharpness(
    g: &Graph,
    spectrum: &GraphSpectrum,
    cap: usize,
    tolerance: f64,
) -> Result<Sharpness> {
    let bound = cheeger_lower(&spectrum.decomposition)?;
    let h = cheeger_constant_exact(g, cap)?;
    let sharp = (h.constant - bound).abs() <= tolerance;
    Ok(Sharpness {
        sharp,
        bound,
        value: h.constant,
        witness: sharp.then_some(h.witness),
        witness_only: false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsOptions {
    pub exact_alpha: bool,
    pub exact_cheeger: bool,
    pub alpha_cap: usize,
    pub cheeger_cap: usize,
    pub sharpness_tolerance: f64,
}

impl Default for BoundsOptions {
    fn default() -> Self {
        BoundsOptions {
            exact_alpha: true,
            exact_cheeger: true,
            alpha_cap: DEFAULT_INDEPENDENCE_CAP,
            cheeger_cap: DEFAULT_CHEEGER_CAP,
            sharpness_tolerance: DEFAULT_SHARPNESS_TOLERANCE,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub degree: usize,
    pub smallest_eigenvalue: f64,
    pub second_eigenvalue: f64,
    pub hoffman_bound: f64,
    pub cheeger_lower: f64,
    pub independence: Option<IndependenceResult>,
    pub hoffman_sharp: Option<bool>,
    pub cheeger: Option<CheegerResult>,
    pub cheeger_sharp: Option<bool>,
}

pub fn bounds_report(
    g: &Graph,
    spectrum: &GraphSpectrum,
    options: &BoundsOptions,
) -> Result<BoundsReport> {
    let dec = &spectrum.decomposition;
    let hoffman = hoffman_bound(dec)?;
    let lower = cheeger_lower(dec)?;
    let tol = options.sharpness_tolerance;
    let independence = options
        .exact_alpha
        .then(|| independence_ratio_exact(g, options.alpha_cap))
        .transpose()?;
    let cheeger = options
        .exact_cheeger
        .then(|| cheeger_constant_exact(g, options.cheeger_cap))
        .transpose()?;
    Ok(BoundsReport {
        degree: spectrum.degree(),
        smallest_eigenvalue: dec.smallest(),
        second_eigenvalue: 1.0 - lower,
        hoffman_bound: hoffman,
        cheeger_lower: lower,
        hoffman_sharp: independence
            .as_ref()
            .map(|a| (a.ratio - hoffman).abs() <= tol),
        cheeger_sharp: cheeger.as_ref().map(|h| (h.constant - lower).abs() <= tol),
        independence,
        cheeger,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// First entry of a chain.
    Start,
    Equal,
    /// The previous value is at least this one.
    AtMost,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainStep {
    pub label: &'static str,
    pub value: f64,
    pub relation: Relation,
    /// `|previous − value|` for equalities, `previous − value` (the slack)
    /// for the inequality step, zero for the start.
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Chain {
    pub steps: Vec<ChainStep>,
}

impl Chain {
    fn from_values(values: &[(&'static str, f64, Relation)]) -> Chain {
        let mut steps = Vec::with_capacity(values.len());
        let mut previous: Option<f64> = None;
        for &(label, value, relation) in values {
            let residual = match (relation, previous) {
                (Relation::Equal, Some(p)) => (p - value).abs(),
                (Relation::AtMost, Some(p)) => p - value,
                _ => 0.0,
            };
            steps.push(ChainStep {
                label,
                value,
                relation,
                residual,
            });
            previous = Some(value);
        }
        Chain { steps }
    }

    pub fn max_equality_residual(&self) -> f64 {
        self.steps
            .iter()
            .filter(|s| s.relation == Relation::Equal)
            .map(|s| s.residual)
            .fold(0.0, f64::max)
    }

    /// Slack of the single inequality step.
    pub fn slack(&self) -> f64 {
        self.steps
            .iter()
            .find(|s| s.relation == Relation::AtMost)
            .map_or(0.0, |s| s.residual)
    }
}

struct Coefficients {
    /// `‖P_λ f‖²` per eigenspace.
    norms: Vec<f64>,
    /// Signed coefficient of `f` on the unit constant function.
    c1: f64,
}

fn coefficients(spectrum: &GraphSpectrum, f: &[f64]) -> Result<Coefficients> {
    let dec = &spectrum.decomposition;
    let n = spectrum.vertex_count() as f64;
    let norms = dec.squared_norms(f)?;
    let constant_part = dec.project(f, 0)?.component;
    let c1 = constant_part.iter().sum::<f64>() / libm::sqrt(n);
    Ok(Coefficients { norms, c1 })
}

fn spectral_form(spectrum: &GraphSpectrum, f: &[f64], g: &[f64]) -> Result<f64> {
    let dec = &spectrum.decomposition;
    let af = dec.apply(f)?;
    let mut g_rebuilt = alloc::vec![0.0; g.len()];
    for index in 0..dec.eigenspaces.len() {
        crate::linalg::axpy(1.0, &dec.project(g, index)?.component, &mut g_rebuilt);
    }
    Ok(dot(&af, &g_rebuilt))
}

/// The Hoffman argument for an independent set `s`, one entry per displayed
/// quantity. The single inequality is `Σ_{i≥2} λ_i c_i² ≥ λ_n Σ_{i≥2} c_i²`;
/// it is tight exactly for Hoffman-sharp sets.
pub fn hoffman_inequality_chain(
    g: &Graph,
    spectrum: &GraphSpectrum,
    s: &VertexSet,
) -> Result<Chain> {
    if !g.is_independent(s)? {
        return Err(Error::NotIndependent);
    }
    let dec = &spectrum.decomposition;
    let f = s.indicator();
    let n = spectrum.vertex_count() as f64;
    let size = s.len() as f64;
    let lambda_n = dec.smallest();
    let Coefficients { norms, c1 } = coefficients(spectrum, &f)?;
    let c1_sq = c1 * c1;
    let tail: f64 = norms.iter().skip(1).sum();
    let weighted_all: f64 = dec
        .eigenspaces
        .iter()
        .zip(&norms)
        .map(|(e, c)| e.eigenvalue * c)
        .sum();
    let weighted_tail: f64 = dec
        .eigenspaces
        .iter()
        .zip(&norms)
        .skip(1)
        .map(|(e, c)| e.eigenvalue * c)
        .sum();

    use Relation::*;
    Ok(Chain::from_values(&[
        ("0", 0.0, Start),
        ("<A 1_S, 1_S>", spectrum.adjacency.rayleigh(&f, &f)?, Equal),
        (
            "<sum c_i l_i phi_i, sum c_i phi_i>",
            spectral_form(spectrum, &f, &f)?,
            Equal,
        ),
        ("sum l_i c_i^2", weighted_all, Equal),
        ("c_1^2 + sum_{i>=2} l_i c_i^2", c1_sq + weighted_tail, Equal),
        (
            "c_1^2 + l_n sum_{i>=2} c_i^2",
            c1_sq + lambda_n * tail,
            AtMost,
        ),
        (
            "c_1^2 + l_n (<1_S,1_S> - c_1^2)",
            c1_sq + lambda_n * (dot(&f, &f) - c1_sq),
            Equal,
        ),
        (
            "(1 - l_n)|S|^2/n + l_n|S|",
            (1.0 - lambda_n) * size * size / n + lambda_n * size,
            Equal,
        ),
    ]))
}

/// The Cheeger argument for the cut `(s, V∖s)`. The inequality replaces every
/// `λ_i`, `i ≥ 2`, by `λ₂`; zero slack means the cut realizes `h = 1−λ₂`.
pub fn cheeger_equality_chain(g: &Graph, spectrum: &GraphSpectrum, s: &VertexSet) -> Result<Chain> {
    let n_usize = spectrum.vertex_count();
    if !s.is_proper() {
        return Err(Error::ImproperSubset {
            size: s.len(),
            n: n_usize,
        });
    }
    let dec = &spectrum.decomposition;
    let lambda2 = dec.second_largest().expect("proper subsets need n >= 2");
    let n = n_usize as f64;
    let root_n = libm::sqrt(n);
    let size = s.len() as f64;
    let f = s.indicator();
    let t = s.complement().indicator();
    let d = spectrum.degree() as f64;
    let Coefficients { norms, c1 } = coefficients(spectrum, &f)?;
    let tail: f64 = norms.iter().skip(1).sum();
    let weighted_tail: f64 = dec
        .eigenspaces
        .iter()
        .zip(&norms)
        .skip(1)
        .map(|(e, c)| e.eigenvalue * c)
        .sum();
    let head = c1 * (root_n - c1);

    use Relation::*;
    Ok(Chain::from_values(&[
        ("(1/d)|E(S,T)|", g.edge_boundary(s)? as f64 / d, Start),
        ("<A 1_S, 1_T>", spectrum.adjacency.rayleigh(&f, &t)?, Equal),
        (
            "<sum c_i l_i phi_i, 1_T in basis>",
            spectral_form(spectrum, &f, &t)?,
            Equal,
        ),
        (
            "c_1(sqrt n - c_1) - sum_{i>=2} l_i c_i^2",
            head - weighted_tail,
            Equal,
        ),
        (
            "c_1(sqrt n - c_1) - l_2 sum_{i>=2} c_i^2",
            head - lambda2 * tail,
            AtMost,
        ),
        (
            "c_1(sqrt n - c_1) - l_2 (sum c_i^2 - c_1^2)",
            head - lambda2 * (dot(&f, &f) - c1 * c1),
            Equal,
        ),
        (
            "|S|(n-|S|)/n - l_2(|S| - |S|^2/n)",
            size / root_n * ((n - size) / root_n) - lambda2 * (size - size * size / n),
            Equal,
        ),
        (
            "|S|(n-|S|)/n (1 - l_2)",
            size * (n - size) / n * (1.0 - lambda2),
            Equal,
        ),
    ]))
}
