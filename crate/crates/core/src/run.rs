//! Command dispatch for the command-line tool: input loading, reports and exit codes.

use std::fmt::Write as _;
use std::path::PathBuf;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::augvar::{
    aug_to_coloring, chromatic_polynomial, coloring_to_aug, enumerate_augmentations, enumerate_full_augmentations, mu_from_aug,
    verify_chromatic_theorem, AugvarError,
};
use crate::binseq::{check_d_squared, differential};
use crate::field::{FieldSpec, FiniteField, Ring};
use crate::fixtures::{self, FixtureError};
use crate::garden::random::random_orientation;
use crate::garden::{build_garden_geometric, BuildOptions, Embedding, Garden, GardenError};
use crate::graph_core::{CubicPlanarGraph, GraphError};
use crate::invariant::{basis_matrices, tversal_table, InvariantError};
use crate::moves::{move_battery, MoveError};

#[derive(Debug, Error)]
pub enum RunError {
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("parse error in {what}: {reason}")]
    Parse { what: String, reason: String },
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl RunError {
    fn invalid(e: impl std::fmt::Display) -> Self {
        RunError::Invalid(e.to_string())
    }
}

impl From<FixtureError> for RunError {
    fn from(e: FixtureError) -> Self {
        RunError::invalid(e)
    }
}

impl From<GardenError> for RunError {
    fn from(e: GardenError) -> Self {
        RunError::invalid(e)
    }
}

impl From<InvariantError> for RunError {
    fn from(e: InvariantError) -> Self {
        RunError::invalid(e)
    }
}

impl From<MoveError> for RunError {
    fn from(e: MoveError) -> Self {
        RunError::invalid(e)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Faces,
    Differential,
    D2Check,
    MovesCheck,
    Tversal,
    Augcount,
    Chromatic,
    VerifyTheorem,
    ColorFromAug { index: usize },
    MuIdentity,
    FixturesList,
    FixturesDump { name: String },
}

/// Where the graph and its garden come from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Input {
    pub fixture: Option<String>,
    pub graph: Option<PathBuf>,
    pub embedding: Option<PathBuf>,
    pub garden: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input: Input,
    pub field: String,
    pub root: usize,
    pub seed: Option<u64>,
    pub format: Format,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig { command, input: Input::default(), field: "zz".into(), root: 0, seed: None, format: Format::Text }
    }
}

/// Exit code and the text to print.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    ok: bool,
    text: String,
    json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { ok: true, text, json }
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    match dispatch(cfg) {
        Ok(r) => {
            let mut stdout = match cfg.format {
                Format::Text => r.text,
                Format::Json => serde_json::to_string_pretty(&r.json).expect("json"),
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome { code: if r.ok { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn read(path: &PathBuf) -> Result<String, RunError> {
    std::fs::read_to_string(path).map_err(|e| RunError::Io { path: path.display().to_string(), reason: e.to_string() })
}

fn load_graph(input: &Input) -> Result<CubicPlanarGraph, RunError> {
    match (&input.graph, &input.fixture) {
        (Some(p), _) => {
            CubicPlanarGraph::from_json(&read(p)?).map_err(|e: GraphError| RunError::Parse { what: p.display().to_string(), reason: e.to_string() })
        }
        (None, Some(name)) => Ok(fixtures::graph(name)?),
        (None, None) => Err(RunError::Invalid("give --graph <file> or --fixture <name>".into())),
    }
}

fn load_embedding(graph: &CubicPlanarGraph, input: &Input) -> Result<Option<Embedding>, RunError> {
    if let Some(p) = &input.embedding {
        let text = read(p)?;
        return Embedding::from_json(graph, &text).map(Some).map_err(|e| RunError::Parse { what: p.display().to_string(), reason: e.to_string() });
    }
    match (&input.fixture, &input.graph) {
        (Some(name), None) if fixtures::get(name)?.embedding.is_some() => Ok(Some(fixtures::embedding(name)?.1)),
        _ => Ok(None),
    }
}

/// Garden file, else the builder on the drawing, else the fixture's garden.
fn load_garden(graph: &CubicPlanarGraph, input: &Input) -> Result<(Garden, Option<Embedding>), RunError> {
    let emb = load_embedding(graph, input)?;
    if let Some(p) = &input.garden {
        let text = read(p)?;
        let g = Garden::from_json(graph, &text).map_err(|e| match e {
            GardenError::Json(reason) => RunError::Parse { what: p.display().to_string(), reason },
            other => RunError::invalid(other),
        })?;
        return Ok((g, emb));
    }
    if input.embedding.is_some() || input.graph.is_some() {
        let e = emb.ok_or_else(|| RunError::Invalid("give --garden <file> or --embedding <file>".into()))?;
        let g = build_garden_geometric(graph, &e, &BuildOptions::default())?;
        return Ok((g, Some(e)));
    }
    let name = input.fixture.as_ref().expect("fixture input");
    Ok((fixtures::garden(name)?.1, emb))
}

fn ring_of(spec: &str) -> Result<Ring, RunError> {
    let spec: FieldSpec = spec.parse().map_err(RunError::invalid)?;
    spec.ring().map_err(RunError::invalid)
}

fn field_of(spec: &str) -> Result<FiniteField, RunError> {
    match ring_of(spec)? {
        Ring::Field(f) => Ok((*f).clone()),
        Ring::Integers => Err(RunError::Invalid("this command needs a finite field, e.g. --field fp:3".into())),
    }
}

fn ring_label(ring: &Ring) -> String {
    match ring {
        Ring::Integers => "ℤ".into(),
        r => r.name(),
    }
}

fn dispatch(cfg: &RunConfig) -> Result<Report, RunError> {
    match &cfg.command {
        Command::FixturesList => {
            let mut text = String::new();
            let mut rows = Vec::new();
            for f in fixtures::FIXTURES {
                writeln!(text, "{:<10} {}", f.name, f.description).unwrap();
                rows.push(json!({"name": f.name, "description": f.description}));
            }
            Ok(Report::ok(text, Value::Array(rows)))
        }
        Command::FixturesDump { name } => {
            let files = fixtures::dump(name)?;
            let mut text = String::new();
            let mut obj = serde_json::Map::new();
            for (kind, body) in files {
                writeln!(text, "# {kind}\n{}", body.trim_end()).unwrap();
                obj.insert(kind.into(), serde_json::from_str(body).unwrap_or(Value::String(body.into())));
            }
            Ok(Report::ok(text, Value::Object(obj)))
        }
        cmd => {
            let graph = load_graph(&cfg.input)?;
            graph_command(cmd, &graph, cfg)
        }
    }
}

fn graph_command(cmd: &Command, graph: &CubicPlanarGraph, cfg: &RunConfig) -> Result<Report, RunError> {
    match cmd {
        Command::Faces => Ok(faces(graph)),
        Command::Chromatic => {
            let d = graph.dual_graph();
            let p = chromatic_polynomial(d.n_vertices, &d.edges);
            let values: Vec<(u32, i128)> = [3, 4, 5, 6].iter().map(|&k| (k, p.eval(k as i64))).collect();
            let mut text = format!("chi(k) = {p}\n");
            for (k, v) in &values {
                writeln!(text, "chi({k}) = {v}").unwrap();
            }
            Ok(Report::ok(text, json!({"coefficients": p.coeffs, "values": values})))
        }
        _ => {
            let (garden, emb) = load_garden(graph, &cfg.input)?;
            garden_command(cmd, graph, &garden, emb.as_ref(), cfg)
        }
    }
}

fn faces(graph: &CubicPlanarGraph) -> Report {
    let mut text = format!("genus {} | {} vertices, {} edges, {} bounded faces\n", graph.genus(), graph.n_vertices(), graph.n_edges(), graph.n_bounded_faces());
    let mut rows = Vec::new();
    for f in 0..graph.n_faces() {
        let edges: Vec<String> = graph.face_edges(f).iter().map(|e| format!("e{}", e + 1)).collect();
        let verts: Vec<String> = graph.face_vertices(f).iter().map(|v| format!("v{}", v + 1)).collect();
        let ext = f == graph.exterior_face();
        writeln!(text, "{}{}: edges {} | vertices {}", graph.face_name(f), if ext { " (exterior)" } else { "" }, edges.join(" "), verts.join(" ")).unwrap();
        rows.push(json!({"face": graph.face_name(f), "exterior": ext, "edges": edges, "vertices": verts}));
    }
    let bridges: Vec<String> = graph.find_bridges().iter().map(|e| format!("e{}", e + 1)).collect();
    if !bridges.is_empty() {
        writeln!(text, "bridges: {}", bridges.join(" ")).unwrap();
    }
    Report::ok(text, json!({"genus": graph.genus(), "faces": rows, "bridges": bridges}))
}

fn garden_command(cmd: &Command, graph: &CubicPlanarGraph, garden: &Garden, emb: Option<&Embedding>, cfg: &RunConfig) -> Result<Report, RunError> {
    let basis = || graph.spanning_basis(cfg.root).map_err(RunError::invalid);
    match cmd {
        Command::Differential => {
            let ring = ring_of(&cfg.field)?;
            let t = differential(graph, garden)?.change_ring(&ring);
            let df: Vec<String> = t.df.iter().map(|p| p.to_text()).collect();
            let json = json!({"ring": ring.name(), "dx": t.dx.to_text(), "dy": t.dy.to_text(), "dz": t.dz.to_text(), "df": df});
            Ok(Report::ok(t.to_text(), json))
        }
        Command::D2Check => {
            let ring = ring_of(&cfg.field)?;
            let t = differential(graph, garden)?.change_ring(&ring);
            let r = check_d_squared(&t);
            let label = ring_label(&ring);
            let mut text = if r.is_zero() { format!("∂² = 0 over {label}\n") } else { format!("∂² ≠ 0 over {label}\n") };
            let mut wit = serde_json::Map::new();
            for (g, p) in r.witnesses() {
                writeln!(text, "∂²{} = {}", g.name(), p.to_text()).unwrap();
                wit.insert(g.name(), Value::String(p.to_text()));
            }
            Ok(Report { ok: r.is_zero(), text, json: json!({"ring": ring.name(), "zero": r.is_zero(), "witnesses": wit}) })
        }
        Command::MovesCheck => {
            let opts = match cfg.seed {
                Some(s) => BuildOptions { orientation: Some(random_orientation(graph, &mut ChaCha8Rng::seed_from_u64(s))), ..Default::default() },
                None => BuildOptions::default(),
            };
            let rows = move_battery(graph, garden, emb.map(|e| (e, &opts)))?;
            let ok = rows.iter().all(|r| r.holds());
            let mut text = format!("{:<12} {:>8} {:>8}  result\n", "move", "checked", "failed");
            for r in &rows {
                let verdict = if r.checked == 0 { "n/a" } else if r.holds() { "pass" } else { "FAIL" };
                writeln!(text, "{:<12} {:>8} {:>8}  {verdict}", r.name, r.checked, r.failed).unwrap();
            }
            if emb.is_none() {
                text.push_str("V, anchor: skipped (no embedding)\n");
            }
            Ok(Report { ok, text, json: json!({"moves": rows, "pass": ok}) })
        }
        Command::Tversal => {
            let basis = basis()?;
            let mats = basis_matrices(graph, &basis)?;
            let t = tversal_table(graph, &differential(graph, garden)?, &basis);
            let name = |es: &[usize]| es.iter().map(|e| format!("e{}", e + 1)).collect::<Vec<_>>().join(" ");
            let mut text = format!("root v{} | tree {} | non-tree {}\n{}\n", cfg.root + 1, name(&mats.tree), name(&mats.non_tree), t.to_text());
            for (label, m) in [("A", &mats.a), ("A_T", &mats.a_t), ("A_F", &mats.a_f), ("B", &mats.b)] {
                writeln!(text, "{label} =").unwrap();
                for row in m {
                    writeln!(text, "  {}", row.iter().map(|x| format!("{x:>3}")).collect::<String>()).unwrap();
                }
            }
            writeln!(text, "det A = {}", mats.det).unwrap();
            let json = json!({
                "root": cfg.root, "tree": mats.tree, "non_tree": mats.non_tree,
                "dx": t.dx.to_text(), "dy": t.dy.to_text(), "dz": t.dz.to_text(),
                "a": mats.a, "a_t": mats.a_t, "a_f": mats.a_f, "b": mats.b, "det": mats.det,
            });
            Ok(Report::ok(text, json))
        }
        Command::Augcount => {
            let field = field_of(&cfg.field)?;
            let basis = basis()?;
            let t = tversal_table(graph, &differential(graph, garden)?, &basis);
            let n = enumerate_augmentations(&t, &basis, &field).len();
            let q = field.order();
            Ok(Report::ok(format!("|Aug| = {n} over F_{q}\n"), json!({"q": q, "augmentations": n})))
        }
        Command::VerifyTheorem => {
            let field = field_of(&cfg.field)?;
            let r = verify_chromatic_theorem(graph, garden, &basis()?, &field)?;
            Ok(Report { ok: r.holds(), text: format!("{r}\n"), json: json!({"report": r, "holds": r.holds()}) })
        }
        Command::ColorFromAug { index } => color_from_aug(graph, garden, cfg, *index),
        Command::MuIdentity => {
            let field = field_of(&cfg.field)?;
            let full = enumerate_full_augmentations(&differential(graph, garden)?, &field);
            let (mut sum, mut prod, mut global) = (0, 0, 0);
            for a in &full {
                let mu = mu_from_aug(graph, &garden.orientation, &field, a);
                sum += usize::from(mu.mu_sum_holds(graph, &field));
                prod += usize::from(mu.mu_prod_holds(graph, &field));
                global += usize::from(mu.product_identity_holds(graph, &field));
            }
            let n = full.len();
            let ok = sum == n && prod == n && global == n;
            let text = format!(
                "{n} full augmentations over F_{}\nface sums vanish: {sum}/{n}\nedge products agree: {prod}/{n}\nproduct identity: {global}/{n}\n",
                field.order()
            );
            Ok(Report { ok, text, json: json!({"q": field.order(), "augmentations": n, "mu_sum": sum, "mu_prod": prod, "product_identity": global}) })
        }
        Command::Faces | Command::Chromatic | Command::FixturesList | Command::FixturesDump { .. } => unreachable!("handled earlier"),
    }
}

fn color_from_aug(graph: &CubicPlanarGraph, garden: &Garden, cfg: &RunConfig, index: usize) -> Result<Report, RunError> {
    let field = field_of(&cfg.field)?;
    let basis = graph.spanning_basis(cfg.root).map_err(RunError::invalid)?;
    let t = tversal_table(graph, &differential(graph, garden)?, &basis);
    let augs = enumerate_augmentations(&t, &basis, &field);
    let lambda = augs.get(index).ok_or_else(|| RunError::Invalid(format!("index {index} out of range: {} augmentations", augs.len())))?;
    let coloring = aug_to_coloring(graph, &garden.orientation, &field, lambda, 0).map_err(RunError::invalid)?;
    let mats = basis_matrices(graph, &basis)?;
    let back = coloring_to_aug(graph, &garden.orientation, &field, &coloring, &mats);
    let lam: Vec<String> = lambda.iter().enumerate().map(|(e, &l)| format!("e{}={}", e + 1, field.format(l))).collect();
    let mut text = format!("augmentation {index} of {}: {}\ncoloring: {}\n", augs.len(), lam.join(" "), coloring.format(graph, &field));
    let roundtrip = match &back {
        Ok(a) => {
            let same = a == lambda;
            writeln!(text, "inverse map: {}", if same { "recovers the augmentation" } else { "MISMATCH" }).unwrap();
            Some(same)
        }
        Err(AugvarError::NoFreeColor) => {
            text.push_str("inverse map: not applicable (every color is used)\n");
            None
        }
        Err(e) => return Err(RunError::invalid(e)),
    };
    let ok = roundtrip != Some(false);
    let colors: Vec<String> = coloring.colors.iter().map(|c| c.format(&field)).collect();
    Ok(Report { ok, text, json: json!({"index": index, "lambda": lambda, "coloring": colors, "roundtrip": roundtrip}) })
}
