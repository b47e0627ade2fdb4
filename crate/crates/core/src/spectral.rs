//! The normalized adjacency operator `A = (1/d)·Adj` of a connected regular
//! graph and its eigenspace decomposition.
//!
//! Eigenfunctions inside a repeated eigenvalue are not canonical, so the
//! decomposition exposes eigenspaces (an orthonormal basis per distinct
//! eigenvalue) and projections onto them rather than an ordered list of
//! eigenfunctions.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::linalg::{self, dot};
use crate::{Error, Result};

/// Eigenvalues within this absolute distance of their neighbor are merged.
pub const DEFAULT_GROUPING_TOLERANCE: f64 = 1e-7;

/// Soft guard for dense `n x n` spectra.
pub const MAX_DENSE_VERTICES: usize = 4096;

/// Dense symmetric matrix with entry `1/d` on edges and zero elsewhere.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizedAdjacency {
    n: usize,
    degree: usize,
    entries: Vec<f64>,
}

impl NormalizedAdjacency {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.vertex_count();
        if n > MAX_DENSE_VERTICES {
            return Err(Error::TooLarge {
                n,
                cap: MAX_DENSE_VERTICES,
            });
        }
        let degree = g.regular_degree().ok_or(Error::NotRegular)?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        // A single vertex is 0-regular; its operator is the 1x1 identity on
        // constants, which keeps `A·1 = 1` true.
        if degree == 0 {
            return Ok(NormalizedAdjacency {
                n,
                degree,
                entries: vec![1.0; n * n],
            });
        }
        let w = 1.0 / degree as f64;
        let mut entries = vec![0.0; n * n];
        for &(u, v) in g.edges() {
            entries[u * n + v] = w;
            entries[v * n + u] = w;
        }
        Ok(NormalizedAdjacency { n, degree, entries })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.entries[u * self.n + v]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn apply(&self, f: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(f)?;
        Ok(self.entries.chunks(self.n).map(|row| dot(row, f)).collect())
    }

    /// The bilinear form `⟨A f, g⟩`.
    pub fn rayleigh(&self, f: &[f64], g: &[f64]) -> Result<f64> {
        self.check_dim(g)?;
        Ok(dot(&self.apply(f)?, g))
    }

    fn check_dim(&self, f: &[f64]) -> Result<()> {
        if f.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: f.len(),
            });
        }
        Ok(())
    }
}

/// One distinct eigenvalue with an orthonormal basis of its eigenspace.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenspace {
    /// Mean of the raw eigenvalues merged into this group.
    pub eigenvalue: f64,
    pub basis: Vec<Vec<f64>>,
    /// Largest minus smallest raw eigenvalue in the group.
    pub spread: f64,
}

impl Eigenspace {
    pub fn multiplicity(&self) -> usize {
        self.basis.len()
    }
}

/// A group whose raw eigenvalues spread wider than `τ/10`, which suggests two
/// genuinely distinct eigenvalues were merged.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupingWarning {
    pub eigenspace: usize,
    pub spread: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    n: usize,
    /// Raw eigenvalues, descending.
    pub raw_eigenvalues: Vec<f64>,
    /// Distinct eigenvalues, descending.
    pub eigenspaces: Vec<Eigenspace>,
    pub grouping_tolerance: f64,
    pub warnings: Vec<GroupingWarning>,
    pub sweeps: usize,
}

/// Component of a vector in one eigenspace.
#[derive(Debug, Clone, PartialEq)]
pub struct Projection {
    pub eigenvalue: f64,
    pub component: Vec<f64>,
    pub squared_norm: f64,
}

/// Full eigendecomposition of a normalized adjacency operator with
/// eigenvalues grouped at absolute tolerance `tau`.
pub fn eigendecompose(a: &NormalizedAdjacency, tau: f64) -> Result<SpectralDecomposition> {
    if tau.is_nan() || tau < 0.0 {
        return Err(Error::InvalidParameter(alloc::format!(
            "grouping tolerance must be non-negative, got {tau}"
        )));
    }
    let n = a.dimension();
    let eig = linalg::symmetric_eigen(a.entries(), n)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.values[j].total_cmp(&eig.values[i]).then(i.cmp(&j)));
    let raw_eigenvalues: Vec<f64> = order.iter().map(|&i| eig.values[i]).collect();

    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (pos, &value) in raw_eigenvalues.iter().enumerate() {
        match groups.last_mut() {
            Some(g) if raw_eigenvalues[*g.last().unwrap()] - value <= tau => g.push(pos),
            _ => groups.push(vec![pos]),
        }
    }

    let mut eigenspaces: Vec<Eigenspace> = Vec::with_capacity(groups.len());
    let mut warnings = Vec::new();
    let mut done: Vec<Vec<f64>> = Vec::with_capacity(n);
    for group in groups {
        let values: Vec<f64> = group.iter().map(|&p| raw_eigenvalues[p]).collect();
        let spread = values[0] - values[values.len() - 1];
        let eigenvalue = values.iter().sum::<f64>() / values.len() as f64;
        let vectors = group
            .iter()
            .map(|&p| eig.vectors[order[p]].clone())
            .collect();
        // Jacobi vectors are orthonormal already; this pass only cleans up
        // rounding. Nothing should be dropped.
        let basis = linalg::orthonormalize(vectors, &done, 1e-6);
        if basis.len() != values.len() {
            return Err(Error::CertificationFailed(alloc::format!(
                "eigenspace for {eigenvalue} lost rank during re-orthonormalization"
            )));
        }
        if spread > tau / 10.0 {
            warnings.push(GroupingWarning {
                eigenspace: eigenspaces.len(),
                spread,
                tolerance: tau,
            });
        }
        done.extend(basis.iter().cloned());
        eigenspaces.push(Eigenspace {
            eigenvalue,
            basis,
            spread,
        });
    }

    Ok(SpectralDecomposition {
        n,
        raw_eigenvalues,
        eigenspaces,
        grouping_tolerance: tau,
        warnings,
        sweeps: eig.sweeps,
    })
}

impl SpectralDecomposition {
    pub fn dimension(&self) -> usize {
        self.n
    }

    /// `(eigenvalue, multiplicity)` pairs, descending.
    pub fn distinct(&self) -> impl Iterator<Item = (f64, usize)> + '_ {
        self.eigenspaces
            .iter()
            .map(|e| (e.eigenvalue, e.multiplicity()))
    }

    pub fn smallest(&self) -> f64 {
        self.eigenspaces.last().map_or(1.0, |e| e.eigenvalue)
    }

    /// The largest eigenvalue below the top one; `None` on one vertex.
    pub fn second_largest(&self) -> Option<f64> {
        self.eigenspaces.get(1).map(|e| e.eigenvalue)
    }

    /// Index of the eigenspace whose eigenvalue is closest to `value`.
    pub fn nearest(&self, value: f64) -> Option<usize> {
        (0..self.eigenspaces.len()).min_by(|&i, &j| {
            let di = libm::fabs(self.eigenspaces[i].eigenvalue - value);
            let dj = libm::fabs(self.eigenspaces[j].eigenvalue - value);
            di.total_cmp(&dj)
        })
    }

    /// `P_λ f` for the eigenspace at `index`.
    pub fn project(&self, f: &[f64], index: usize) -> Result<Projection> {
        if f.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: f.len(),
            });
        }
        let space = self.eigenspaces.get(index).ok_or(Error::IndexOutOfRange {
            index,
            len: self.eigenspaces.len(),
        })?;
        let mut component = vec![0.0; self.n];
        let mut squared_norm = 0.0;
        for phi in &space.basis {
            let c = dot(phi, f);
            squared_norm += c * c;
            linalg::axpy(c, phi, &mut component);
        }
        Ok(Projection {
            eigenvalue: space.eigenvalue,
            component,
            squared_norm,
        })
    }

    /// `‖P_λ f‖²` for every eigenspace, without materializing components.
    pub fn squared_norms(&self, f: &[f64]) -> Result<Vec<f64>> {
        if f.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: f.len(),
            });
        }
        Ok(self
            .eigenspaces
            .iter()
            .map(|s| {
                s.basis
                    .iter()
                    .map(|phi| {
                        let c = dot(phi, f);
                        c * c
                    })
                    .sum()
            })
            .collect())
    }

    /// `Σ_λ λ·P_λ f`, the operator applied through its spectrum.
    pub fn apply(&self, f: &[f64]) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.n];
        for index in 0..self.eigenspaces.len() {
            let p = self.project(f, index)?;
            linalg::axpy(p.eigenvalue, &p.component, &mut out);
        }
        Ok(out)
    }

    /// Largest entry of `|A − Σ λ P_λ|`.
    pub fn reconstruction_error(&self, a: &NormalizedAdjacency) -> f64 {
        let n = self.n;
        let mut m = vec![0.0; n * n];
        for space in &self.eigenspaces {
            for phi in &space.basis {
                for i in 0..n {
                    let s = space.eigenvalue * phi[i];
                    if s == 0.0 {
                        continue;
                    }
                    for j in 0..n {
                        m[i * n + j] += s * phi[j];
                    }
                }
            }
        }
        linalg::max_abs_diff(&m, a.entries())
    }

    /// Dense projector matrix (row-major) onto the eigenspace at `index`.
    pub fn projector(&self, index: usize) -> Result<Vec<f64>> {
        let space = self.eigenspaces.get(index).ok_or(Error::IndexOutOfRange {
            index,
            len: self.eigenspaces.len(),
        })?;
        let n = self.n;
        let mut m = vec![0.0; n * n];
        for phi in &space.basis {
            for i in 0..n {
                for j in 0..n {
                    m[i * n + j] += phi[i] * phi[j];
                }
            }
        }
        Ok(m)
    }
}

/// A graph's normalized adjacency operator together with its decomposition.
#[derive(Debug, Clone)]
pub struct GraphSpectrum {
    pub adjacency: NormalizedAdjacency,
    pub decomposition: SpectralDecomposition,
}

impl GraphSpectrum {
    /// Requires a connected regular graph. Fails if the top eigenspace is not
    /// the one-dimensional space of constants.
    pub fn compute(g: &Graph, tau: f64) -> Result<Self> {
        let adjacency = NormalizedAdjacency::new(g)?;
        let decomposition = eigendecompose(&adjacency, tau)?;
        let top = &decomposition.eigenspaces[0];
        if libm::fabs(top.eigenvalue - 1.0) > 1e-9 || top.multiplicity() != 1 {
            return Err(Error::CertificationFailed(alloc::format!(
                "top eigenspace has eigenvalue {} and multiplicity {}",
                top.eigenvalue,
                top.multiplicity()
            )));
        }
        Ok(GraphSpectrum {
            adjacency,
            decomposition,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.dimension()
    }

    pub fn degree(&self) -> usize {
        self.adjacency.degree()
    }
}
