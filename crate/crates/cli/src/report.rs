//! JSON run reports.
//!
//! Every floating-point number is rounded to 12 significant digits before
//! printing so reports are stable across platforms and runs.

use graphdesign_core::bounds::{BoundsReport, Sharpness};
use graphdesign_core::design::{DesignReport, WitnessBasis};
use graphdesign_core::products::ProductOrderRecord;
use graphdesign_core::spectral::SpectralDecomposition;
use graphdesign_core::{Graph, VertexSet};
use serde_json::{json, Map, Value};

pub const SIGNIFICANT_DIGITS: usize = 12;

pub fn round_significant(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    let rounded: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .unwrap();
    // Avoid "-0" in the output.
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

/// Rounds every float in place; integers are left alone.
pub fn round_numbers(value: &mut Value) {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = round_significant(n.as_f64().unwrap());
            *value = serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number);
        }
        Value::Array(items) => items.iter_mut().for_each(round_numbers),
        Value::Object(map) => map.values_mut().for_each(round_numbers),
        _ => {}
    }
}

#[derive(Debug, Clone, Default)]
pub struct RunReport {
    pub command: Vec<String>,
    pub timestamp: Option<u64>,
    pub graph: Option<Value>,
    pub spectrum: Option<Value>,
    /// Named analysis sections such as `design`, `bounds` or `product`.
    pub sections: Map<String, Value>,
    pub warnings: Vec<Value>,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            command,
            ..Default::default()
        }
    }

    pub fn section(&mut self, name: &str, value: Value) {
        self.sections.insert(name.to_string(), value);
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("tool".into(), json!(env!("CARGO_PKG_NAME")));
        out.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        out.insert("command".into(), json!(self.command));
        if let Some(t) = self.timestamp {
            out.insert("timestamp".into(), json!(t));
        }
        if let Some(g) = &self.graph {
            out.insert("graph".into(), g.clone());
        }
        if let Some(s) = &self.spectrum {
            out.insert("spectrum".into(), s.clone());
        }
        for (k, v) in &self.sections {
            out.insert(k.clone(), v.clone());
        }
        out.insert("warnings".into(), json!(self.warnings));
        let mut value = Value::Object(out);
        round_numbers(&mut value);
        value
    }
}

pub fn graph_summary(g: &Graph) -> Value {
    let connected = g.is_connected();
    let bipartite = if connected {
        json!(g.bipartition().ok().flatten().is_some())
    } else {
        Value::Null
    };
    json!({
        "n": g.vertex_count(),
        "edges": g.edge_count(),
        "degree": g.regular_degree(),
        "connected": connected,
        "bipartite": bipartite,
    })
}

pub fn spectrum(dec: &SpectralDecomposition) -> Value {
    let eigenvalues: Vec<Value> = dec
        .eigenspaces
        .iter()
        .map(|e| {
            json!({
                "value": e.eigenvalue,
                "multiplicity": e.multiplicity(),
                "spread": e.spread,
            })
        })
        .collect();
    json!({
        "grouping_tolerance": dec.grouping_tolerance,
        "sweeps": dec.sweeps,
        "eigenvalues": eigenvalues,
    })
}

pub fn grouping_warnings(dec: &SpectralDecomposition) -> Vec<Value> {
    dec.warnings
        .iter()
        .map(|w| {
            json!({
                "kind": "eigenvalue_grouping",
                "message": format!(
                    "eigenvalue group {} spreads {:e}, above tau/10 = {:e}",
                    w.eigenspace, w.spread, w.tolerance / 10.0
                ),
                "eigenvalue": dec.eigenspaces[w.eigenspace].eigenvalue,
                "spread": w.spread,
            })
        })
        .collect()
}

pub fn vertex_set(s: &VertexSet) -> Value {
    json!(s.members())
}

pub fn design(report: &DesignReport, witness: Option<&WitnessBasis>) -> Value {
    let w = report.subset.len() as f64;
    let active: Vec<Value> = report
        .active
        .iter()
        .map(|a| {
            json!({
                "eigenvalue": a.eigenvalue,
                "squared_norm": a.squared_norm,
                "relative_norm": a.squared_norm / w,
            })
        })
        .collect();
    let mut out = json!({
        "subset": vertex_set(&report.subset),
        "size": report.subset.len(),
        "order": report.order,
        "extremal": report.is_extremal(),
        "active_eigenvalues": active,
        "satisfied_count": report.satisfied_count,
        "activity_threshold": report.activity_threshold,
    });
    if let Some(basis) = witness {
        let functions: Vec<Value> = basis
            .functions
            .iter()
            .map(|f| {
                json!({
                    "eigenvalue": f.eigenvalue,
                    "active": f.active,
                    "mean_on_subset": f.mean_on_subset,
                    "mean_on_graph": f.mean_on_graph,
                    "values": f.values,
                })
            })
            .collect();
        out["witness_basis"] = json!({
            "max_inactive_gap": basis.max_inactive_gap(),
            "functions": functions,
        });
    }
    out
}

pub fn bounds(report: &BoundsReport, witness: Option<&Sharpness>) -> Value {
    let mut out = json!({
        "degree": report.degree,
        "smallest_eigenvalue": report.smallest_eigenvalue,
        "second_eigenvalue": report.second_eigenvalue,
        "hoffman_bound": report.hoffman_bound,
        "cheeger_lower": report.cheeger_lower,
        "hoffman_sharp": report.hoffman_sharp,
        "cheeger_sharp": report.cheeger_sharp,
    });
    if let Some(a) = &report.independence {
        out["independence"] = json!({
            "size": a.size,
            "ratio": a.ratio,
            "witness": vertex_set(&a.witness),
        });
    }
    if let Some(h) = &report.cheeger {
        out["cheeger"] = json!({
            "constant": h.constant,
            "witness": vertex_set(&h.witness),
            "boundary": h.boundary,
            "classic": h.classic,
            "classic_witness": vertex_set(&h.classic_witness),
        });
    }
    if let Some(s) = witness {
        out["hoffman_witness"] = sharpness(s);
    }
    out
}

pub fn sharpness(s: &Sharpness) -> Value {
    json!({
        "sharp": s.sharp,
        "bound": s.bound,
        "value": s.value,
        "witness": s.witness.as_ref().map(vertex_set),
        "witness_only": s.witness_only,
    })
}

pub fn product_order(record: &ProductOrderRecord) -> Value {
    json!({
        "k1": record.k1,
        "k2": record.k2,
        "k_product": record.k_product,
        "bound": record.bound,
        "holds": record.holds,
        "cylinder": record.cylinder,
        "collision_free": record.collision_free,
        "exact": record.exact,
        "design": design(&record.product_report, None),
    })
}
