//! Design order of a vertex subset and extremality certificates.
//!
//! With uniform weights `1/|W|`, an eigenfunction `φ` satisfies the mean-value
//! identity `(1/|V|)Σ_V φ = (1/|W|)Σ_W φ` exactly when it is constant or
//! orthogonal to `1_W`. The order of `W` is the minimal number `k` of
//! non-constant eigenfunctions that together with the constant span `1_W`.
//!
//! That number is basis independent: it equals the count of non-constant
//! eigenspaces `λ` with `P_λ 1_W ≠ 0`. The projections themselves give one
//! eigenfunction per such eigenspace, and no fewer can work since
//! eigenfunctions of distinct eigenvalues are linearly independent, so every
//! eigenspace carrying a nonzero component of `1_W` needs its own function.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::linalg::{self, dot};
use crate::spectral::GraphSpectrum;
use crate::{Error, Result};

/// Default activity threshold, compared to `‖P_λ 1_W‖² / |W|`.
pub const DEFAULT_ACTIVITY_THRESHOLD: f64 = 1e-8;

/// Tolerance for the Hoffman and Cheeger sharpness preconditions.
pub const SHARPNESS_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ActiveEigenvalue {
    /// Index into `SpectralDecomposition::eigenspaces`.
    pub eigenspace: usize,
    pub eigenvalue: f64,
    /// `‖P_λ 1_W‖²`
    pub squared_norm: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DesignReport {
    pub subset: VertexSet,
    pub order: usize,
    /// Non-constant eigenspaces carrying a nonzero part of `1_W`, in
    /// descending eigenvalue order.
    pub active: Vec<ActiveEigenvalue>,
    /// Basis eigenfunctions (out of `n`) satisfying the mean-value identity.
    pub satisfied_count: usize,
    pub activity_threshold: f64,
}

impl DesignReport {
    pub fn is_extremal(&self) -> bool {
        self.order == 1
    }
}

fn check_subset(spectrum: &GraphSpectrum, w: &VertexSet) -> Result<()> {
    let n = spectrum.vertex_count();
    if w.host_n() != n {
        return Err(Error::HostMismatch {
            expected: n,
            found: w.host_n(),
        });
    }
    if !w.is_proper() {
        return Err(Error::ImproperSubset { size: w.len(), n });
    }
    Ok(())
}

/// Counts the non-constant eigenspaces `λ` with `‖P_λ 1_W‖² > ε·|W|`.
pub fn design_order(spectrum: &GraphSpectrum, w: &VertexSet, epsilon: f64) -> Result<DesignReport> {
    check_subset(spectrum, w)?;
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "activity threshold must be positive, got {epsilon}"
        )));
    }
    let dec = &spectrum.decomposition;
    let norms = dec.squared_norms(&w.indicator())?;
    let size = w.len() as f64;
    let active: Vec<ActiveEigenvalue> = norms
        .iter()
        .enumerate()
        .skip(1)
        .filter(|&(_, &s)| s / size > epsilon)
        .map(|(i, &s)| ActiveEigenvalue {
            eigenspace: i,
            eigenvalue: dec.eigenspaces[i].eigenvalue,
            squared_norm: s,
        })
        .collect();
    let order = active.len();
    Ok(DesignReport {
        subset: w.clone(),
        order,
        active,
        satisfied_count: spectrum.vertex_count() - order,
        activity_threshold: epsilon,
    })
}

pub fn is_extremal(spectrum: &GraphSpectrum, w: &VertexSet, epsilon: f64) -> Result<bool> {
    Ok(design_order(spectrum, w, epsilon)?.is_extremal())
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasisFunction {
    pub values: Vec<f64>,
    pub eigenvalue: f64,
    /// A normalized active projection of `1_W`.
    pub active: bool,
    pub mean_on_subset: f64,
    pub mean_on_graph: f64,
}

impl BasisFunction {
    pub fn mean_gap(&self) -> f64 {
        libm::fabs(self.mean_on_subset - self.mean_on_graph)
    }
}

/// An orthonormal eigenbasis in which `1_W` uses only the constant and the
/// active functions.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessBasis {
    pub report: DesignReport,
    /// Constant function first, then the `order` active functions, then the
    /// rest.
    pub functions: Vec<BasisFunction>,
}

impl WitnessBasis {
    /// Largest mean-value gap over the functions that are supposed to satisfy
    /// the identity (everything but the active ones).
    pub fn max_inactive_gap(&self) -> f64 {
        self.functions
            .iter()
            .filter(|f| !f.active)
            .map(BasisFunction::mean_gap)
            .fold(0.0, f64::max)
    }

    pub fn satisfied(&self, tolerance: f64) -> usize {
        self.functions
            .iter()
            .filter(|f| f.mean_gap() <= tolerance)
            .count()
    }
}

/// Builds the explicit eigenbasis certifying the design order.
///
/// Inside an active eigenspace the basis is the normalized projection of
/// `1_W` completed by an orthonormal basis of its orthogonal complement in
/// that eigenspace; every completing vector is orthogonal to `1_W`, so it has
/// mean zero on `W` as well as on `V`.
pub fn witness_basis(
    spectrum: &GraphSpectrum,
    w: &VertexSet,
    epsilon: f64,
) -> Result<WitnessBasis> {
    let report = design_order(spectrum, w, epsilon)?;
    let dec = &spectrum.decomposition;
    let n = spectrum.vertex_count();
    let indicator = w.indicator();

    let mut constant = vec![1.0 / libm::sqrt(n as f64); n];
    if dot(&constant, &dec.eigenspaces[0].basis[0]) < 0.0 {
        linalg::scale(-1.0, &mut constant);
    }

    let mut leading: Vec<(Vec<f64>, f64)> = vec![(constant, dec.eigenspaces[0].eigenvalue)];
    let mut rest: Vec<(Vec<f64>, f64)> = Vec::new();
    let mut active_iter = report.active.iter().peekable();
    for (index, space) in dec.eigenspaces.iter().enumerate().skip(1) {
        let is_active = active_iter.peek().is_some_and(|a| a.eigenspace == index);
        let mut local: Vec<Vec<f64>> = Vec::new();
        if is_active {
            active_iter.next();
            let mut p = dec.project(&indicator, index)?.component;
            let r = linalg::norm(&p);
            linalg::scale(1.0 / r, &mut p);
            leading.push((p.clone(), space.eigenvalue));
            local.push(p);
        }
        let completion = linalg::orthonormalize(space.basis.clone(), &local, 1e-6);
        let expected = space.multiplicity() - local.len();
        if completion.len() != expected {
            return Err(Error::CertificationFailed(format!(
                "eigenspace {} completed to {} functions, expected {expected}",
                space.eigenvalue,
                completion.len()
            )));
        }
        for v in completion {
            rest.push((v, space.eigenvalue));
        }
    }

    let size = w.len() as f64;
    let functions = leading
        .into_iter()
        .enumerate()
        .map(|(i, (v, l))| (v, l, i > 0))
        .chain(rest.into_iter().map(|(v, l)| (v, l, false)))
        .map(|(values, eigenvalue, active)| {
            let mean_on_graph = values.iter().sum::<f64>() / n as f64;
            let mean_on_subset = w.members().iter().map(|&v| values[v]).sum::<f64>() / size;
            BasisFunction {
                values,
                eigenvalue,
                active,
                mean_on_subset,
                mean_on_graph,
            }
        })
        .collect();
    Ok(WitnessBasis { report, functions })
}

/// Which bound an extremality certificate came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    Hoffman,
    Cheeger,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalCertificate {
    pub kind: CertificateKind,
    /// `|S|/|V|` for Hoffman, `|V||E(S,T)|/(d|S||T|)` for Cheeger.
    pub value: f64,
    /// `−λ_n/(1−λ_n)` for Hoffman, `1−λ₂` for Cheeger.
    pub bound: f64,
    /// `λ_n` for Hoffman, `λ₂` for Cheeger.
    pub expected_eigenvalue: f64,
    pub active_eigenvalue: f64,
    pub report: DesignReport,
}

/// An independent set meeting the Hoffman bound is an extremal design whose
/// single active eigenvalue is the smallest one. The conclusion is
/// re-verified numerically.
pub fn extremal_from_hoffman(
    g: &Graph,
    spectrum: &GraphSpectrum,
    s: &VertexSet,
    epsilon: f64,
) -> Result<ExtremalCertificate> {
    check_subset(spectrum, s)?;
    if !g.is_independent(s)? {
        return Err(Error::NotIndependent);
    }
    let dec = &spectrum.decomposition;
    let lambda_min = dec.smallest();
    let bound = -lambda_min / (1.0 - lambda_min);
    let value = s.len() as f64 / g.vertex_count() as f64;
    if libm::fabs(value - bound) > SHARPNESS_TOLERANCE {
        return Err(Error::NotSharp { value, bound });
    }
    certify(
        CertificateKind::Hoffman,
        spectrum,
        s,
        epsilon,
        dec.eigenspaces.len() - 1,
        value,
        bound,
    )
}

/// A set realizing a sharp Cheeger bound `h = 1−λ₂` is an extremal design
/// whose single active eigenvalue is `λ₂`.
pub fn extremal_from_cheeger(
    g: &Graph,
    spectrum: &GraphSpectrum,
    s: &VertexSet,
    epsilon: f64,
) -> Result<ExtremalCertificate> {
    check_subset(spectrum, s)?;
    let dec = &spectrum.decomposition;
    let lambda2 = dec.second_largest().ok_or(Error::ImproperSubset {
        size: s.len(),
        n: 1,
    })?;
    let bound = 1.0 - lambda2;
    let value = crate::bounds::cheeger_ratio(g, s)?;
    if libm::fabs(value - bound) > SHARPNESS_TOLERANCE {
        return Err(Error::NotSharp { value, bound });
    }
    certify(
        CertificateKind::Cheeger,
        spectrum,
        s,
        epsilon,
        1,
        value,
        bound,
    )
}

fn certify(
    kind: CertificateKind,
    spectrum: &GraphSpectrum,
    s: &VertexSet,
    epsilon: f64,
    expected_index: usize,
    value: f64,
    bound: f64,
) -> Result<ExtremalCertificate> {
    let report = design_order(spectrum, s, epsilon)?;
    let expected_eigenvalue = spectrum.decomposition.eigenspaces[expected_index].eigenvalue;
    match report.active.as_slice() {
        [only] if only.eigenspace == expected_index => Ok(ExtremalCertificate {
            kind,
            value,
            bound,
            expected_eigenvalue,
            active_eigenvalue: only.eigenvalue,
            report,
        }),
        active => Err(Error::CertificationFailed(format!(
            "{kind:?}-sharp set has order {} with active eigenvalues {:?}, expected only {expected_eigenvalue}",
            active.len(),
            active.iter().map(|a| a.eigenvalue).collect::<Vec<_>>()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::spectral::DEFAULT_GROUPING_TOLERANCE;

    fn spectrum_of(g: &Graph) -> GraphSpectrum {
        GraphSpectrum::compute(g, DEFAULT_GROUPING_TOLERANCE).unwrap()
    }

    #[test]
    fn complete_graph_subsets_are_extremal() {
        let g = families::complete(5).unwrap();
        let sp = spectrum_of(&g);
        let r = design_order(&sp, &VertexSet::new(5, [0, 1]).unwrap(), 1e-8).unwrap();
        assert_eq!(r.order, 1);
        assert_eq!(r.satisfied_count, 4);
        assert!((r.active[0].eigenvalue + 0.25).abs() < 1e-12);
    }

    #[test]
    fn c4_single_vertex_has_order_two() {
        // Oracle: C_4 eigenbasis by hand. λ=0 space spanned by
        // (1,0,-1,0)/√2 and (0,1,0,-1)/√2; λ=-1 by (1,-1,1,-1)/2. Projection
        // of e_0 onto λ=0 has squared norm 1/2, onto λ=-1 it is 1/4.
        let g = families::cycle(4).unwrap();
        let sp = spectrum_of(&g);
        let r = design_order(&sp, &VertexSet::new(4, [0]).unwrap(), 1e-8).unwrap();
        assert_eq!(r.order, 2);
        assert!(!r.is_extremal());
        assert!((r.active[0].eigenvalue - 0.0).abs() < 1e-12);
        assert!((r.active[0].squared_norm - 0.5).abs() < 1e-12);
        assert!((r.active[1].eigenvalue + 1.0).abs() < 1e-12);
        assert!((r.active[1].squared_norm - 0.25).abs() < 1e-12);
    }

    #[test]
    fn improper_subsets_rejected() {
        let g = families::complete(4).unwrap();
        let sp = spectrum_of(&g);
        assert!(matches!(
            design_order(&sp, &VertexSet::empty(4), 1e-8),
            Err(Error::ImproperSubset { size: 0, n: 4 })
        ));
        assert!(matches!(
            design_order(&sp, &VertexSet::full(4), 1e-8),
            Err(Error::ImproperSubset { size: 4, n: 4 })
        ));
        assert!(matches!(
            design_order(&sp, &VertexSet::new(3, [0]).unwrap(), 1e-8),
            Err(Error::HostMismatch { .. })
        ));
        assert!(design_order(&sp, &VertexSet::new(4, [0]).unwrap(), 0.0).is_err());
    }

    #[test]
    fn witness_basis_k3_single_vertex() {
        let g = families::complete(3).unwrap();
        let sp = spectrum_of(&g);
        let wb = witness_basis(&sp, &VertexSet::new(3, [0]).unwrap(), 1e-8).unwrap();
        assert_eq!(wb.functions.len(), 3);
        assert_eq!(wb.functions.iter().filter(|f| f.active).count(), 1);
        // constant + one completing function
        assert_eq!(wb.satisfied(1e-8), 2);
        assert!(wb.max_inactive_gap() < 1e-8);
    }

    #[test]
    fn witness_basis_is_orthonormal_eigenbasis() {
        let g = families::cycle(6).unwrap();
        let sp = spectrum_of(&g);
        let w = VertexSet::new(6, [0, 2]).unwrap();
        let wb = witness_basis(&sp, &w, 1e-8).unwrap();
        let n = 6;
        for (i, f) in wb.functions.iter().enumerate() {
            let af = sp.adjacency.apply(&f.values).unwrap();
            for (a, x) in af.iter().zip(&f.values) {
                assert!((a - f.eigenvalue * x).abs() < 1e-10);
            }
            for (j, h) in wb.functions.iter().enumerate() {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((dot(&f.values, &h.values) - expected).abs() < 1e-10);
            }
        }
        assert_eq!(wb.satisfied(1e-8), n - wb.report.order);
    }

    #[test]
    fn hoffman_certificate_on_bipartite_part() {
        let g = families::cycle(8).unwrap();
        let sp = spectrum_of(&g);
        let (a, _) = g.bipartition().unwrap().unwrap();
        let cert = extremal_from_hoffman(&g, &sp, &a, 1e-8).unwrap();
        assert!((cert.active_eigenvalue + 1.0).abs() < 1e-12);
        assert_eq!(cert.kind, CertificateKind::Hoffman);
    }

    #[test]
    fn hoffman_preconditions() {
        let g = families::cycle(8).unwrap();
        let sp = spectrum_of(&g);
        assert_eq!(
            extremal_from_hoffman(&g, &sp, &VertexSet::new(8, [0, 1]).unwrap(), 1e-8),
            Err(Error::NotIndependent)
        );
        assert!(matches!(
            extremal_from_hoffman(&g, &sp, &VertexSet::new(8, [0, 2]).unwrap(), 1e-8),
            Err(Error::NotSharp { .. })
        ));
    }

    #[test]
    fn cheeger_certificate_on_c6_half_is_refused() {
        // h of the half-cycle is 6·2/(2·3·3) = 2/3 while 1−λ₂ = 1/2.
        let g = families::cycle(6).unwrap();
        let sp = spectrum_of(&g);
        let half = VertexSet::new(6, [0, 1, 2]).unwrap();
        match extremal_from_cheeger(&g, &sp, &half, 1e-8) {
            Err(Error::NotSharp { value, bound }) => {
                assert!((value - 2.0 / 3.0).abs() < 1e-12);
                assert!((bound - 0.5).abs() < 1e-12);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cheeger_certificate_on_complete_graph() {
        let g = families::complete(6).unwrap();
        let sp = spectrum_of(&g);
        let cert =
            extremal_from_cheeger(&g, &sp, &VertexSet::new(6, [1, 3]).unwrap(), 1e-8).unwrap();
        assert!((cert.active_eigenvalue + 0.2).abs() < 1e-12);
    }
}
