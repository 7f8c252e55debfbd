//! Graphs, drawings and gardens shipped with the crate.

use thiserror::Error;

use crate::garden::{build_garden_geometric, BuildOptions, Embedding, Garden, GardenError};
use crate::graph_core::{CubicPlanarGraph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FixtureError {
    #[error("unknown fixture `{0}`")]
    Unknown(String),
    #[error("fixture `{0}` has no {1}")]
    Missing(String, &'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Garden(#[from] GardenError),
}

pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub graph: &'static str,
    pub embedding: Option<&'static str>,
    pub garden: Option<&'static str>,
}

macro_rules! file {
    ($f:literal) => {
        include_str!(concat!("../fixtures/", $f))
    };
}

pub const FIXTURES: &[Fixture] = &[
    Fixture { name: "k4", description: "complete graph K4 (g=1)", graph: file!("k4.json"), embedding: Some(file!("k4_embedding.json")), garden: None },
    Fixture {
        name: "prism",
        description: "triangular prism (g=2)",
        graph: file!("prism.json"),
        embedding: Some(file!("prism_embedding.json")),
        garden: None,
    },
    Fixture { name: "cube", description: "cube graph (g=3)", graph: file!("cube.json"), embedding: Some(file!("cube_embedding.json")), garden: None },
    Fixture {
        name: "prism5",
        description: "pentagonal prism (g=4)",
        graph: file!("prism5.json"),
        embedding: Some(file!("prism5_embedding.json")),
        garden: None,
    },
    Fixture {
        name: "prism6",
        description: "hexagonal prism (g=5)",
        graph: file!("prism6.json"),
        embedding: Some(file!("prism6_embedding.json")),
        garden: None,
    },
    Fixture {
        name: "g1",
        description: "genus-one graph with a bigon, transcribed garden",
        graph: file!("g1.json"),
        embedding: Some(file!("g1_embedding.json")),
        garden: Some(file!("g1_garden.json")),
    },
    Fixture {
        name: "g2",
        description: "genus-one graph with two bigons, transcribed garden",
        graph: file!("g2.json"),
        embedding: Some(file!("g2_embedding.json")),
        garden: Some(file!("g2_garden.json")),
    },
    Fixture {
        name: "prism4m",
        description: "4-prism with one interior edge added (g=4), transcribed garden, signs unspecified",
        graph: file!("prism4m.json"),
        embedding: None,
        garden: Some(file!("prism4m_garden.json")),
    },
    Fixture {
        name: "dumbbell",
        description: "bridged graph: two loops joined by a bridge (g=0)",
        graph: file!("dumbbell.json"),
        embedding: Some(file!("dumbbell_embedding.json")),
        garden: None,
    },
];

pub fn get(name: &str) -> Result<&'static Fixture, FixtureError> {
    FIXTURES.iter().find(|f| f.name == name).ok_or_else(|| FixtureError::Unknown(name.to_string()))
}

pub fn names() -> Vec<&'static str> {
    FIXTURES.iter().map(|f| f.name).collect()
}

pub fn graph(name: &str) -> Result<CubicPlanarGraph, FixtureError> {
    Ok(CubicPlanarGraph::from_json(get(name)?.graph)?)
}

pub fn embedding(name: &str) -> Result<(CubicPlanarGraph, Embedding), FixtureError> {
    let f = get(name)?;
    let g = CubicPlanarGraph::from_json(f.graph)?;
    let text = f.embedding.ok_or(FixtureError::Missing(name.to_string(), "embedding"))?;
    let e = Embedding::from_json(&g, text)?;
    Ok((g, e))
}

/// The transcribed garden when shipped, else the builder's garden on the shipped drawing.
pub fn garden(name: &str) -> Result<(CubicPlanarGraph, Garden), FixtureError> {
    let f = get(name)?;
    let g = CubicPlanarGraph::from_json(f.graph)?;
    if let Some(text) = f.garden {
        let garden = Garden::from_json(&g, text)?;
        return Ok((g, garden));
    }
    let (g, e) = embedding(name)?;
    let garden = build_garden_geometric(&g, &e, &BuildOptions::default())?;
    Ok((g, garden))
}

/// The builder's garden on the shipped drawing, even when a transcribed garden exists.
pub fn built_garden(name: &str) -> Result<(CubicPlanarGraph, Garden), FixtureError> {
    let (g, e) = embedding(name)?;
    let garden = build_garden_geometric(&g, &e, &BuildOptions::default())?;
    Ok((g, garden))
}

/// Raw file contents: `(kind, text)` for graph, embedding and garden.
pub fn dump(name: &str) -> Result<Vec<(&'static str, &'static str)>, FixtureError> {
    let f = get(name)?;
    let mut out = vec![("graph", f.graph)];
    if let Some(e) = f.embedding {
        out.push(("embedding", e));
    }
    if let Some(g) = f.garden {
        out.push(("garden", g));
    }
    Ok(out)
}
