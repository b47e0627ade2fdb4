//! Bundled graphs with their distinguished vertex sets.
//!
//! Each fixture is a pair `<name>.edges` / `<name>.design` compiled into the
//! binary. Setting `GRAPHDESIGN_FIXTURES` to a directory reads the files from
//! there instead.

use std::path::PathBuf;

use graphdesign_core::{Graph, VertexSet};

use crate::io::{self, FormatError, Mode};

pub const FIXTURE_DIR_VAR: &str = "GRAPHDESIGN_FIXTURES";

pub const NAMES: [&str; 2] = ["sylvester", "truncated_tetrahedron"];

const BUNDLED: [(&str, &str, &str); 2] = [
    (
        "sylvester",
        include_str!("../data/sylvester.edges"),
        include_str!("../data/sylvester.design"),
    ),
    (
        "truncated_tetrahedron",
        include_str!("../data/truncated_tetrahedron.edges"),
        include_str!("../data/truncated_tetrahedron.design"),
    ),
];

#[derive(Debug, Clone, PartialEq)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub design: VertexSet,
}

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("unknown fixture {0:?} (known: sylvester, truncated_tetrahedron)")]
    Unknown(String),
    #[error("fixture {name}: {source}")]
    Format {
        name: &'static str,
        source: FormatError,
    },
}

pub fn fixture(name: &str) -> Result<Fixture, FixtureError> {
    let &(name, edges, design) = BUNDLED
        .iter()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| FixtureError::Unknown(name.to_string()))?;
    let wrap = |source| FixtureError::Format { name, source };
    let (graph, design) = match std::env::var_os(FIXTURE_DIR_VAR) {
        Some(dir) => {
            let dir = PathBuf::from(dir);
            let graph =
                io::read_graph(&dir.join(format!("{name}.edges")), Mode::Strict).map_err(wrap)?;
            let design =
                io::read_vertex_set(&dir.join(format!("{name}.design")), graph.vertex_count())
                    .map_err(wrap)?;
            (graph, design)
        }
        None => {
            let graph = io::parse_graph(edges, Mode::Strict).map_err(wrap)?;
            let design = io::parse_vertex_set(design, graph.vertex_count()).map_err(wrap)?;
            (graph, design)
        }
    };
    Ok(Fixture {
        name,
        graph,
        design,
    })
}
