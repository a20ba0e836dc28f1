use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use lieforge::catalog::{self, GraphSpec};
use lieforge::cohomology::{cohomology, Variety};
use lieforge::deform::{self, check_codim2_hypotheses, deform_codim2, ScenarioResult};
use lieforge::free_nilpotent::free_nilpotent;
use lieforge::lie::{BasisDecomposition, LieAlgebra};
use lieforge::linalg::{vector, Matrix, Rational, Subspace, Vector};
use lieforge::{LieError, Result};

use crate::format::{emit_lie, parse_graph, parse_lie};

#[derive(Parser, Debug)]
#[command(
    name = "lieforge",
    version,
    about = "Exact computations with Lie algebra structure constants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Jacobi identity of a .lie file.
    Check { file: PathBuf },
    /// Isomorphism invariants of a .lie file.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Dimensions of Z², B² and H² in a variety.
    Cohomology {
        file: PathBuf,
        #[arg(long, default_value = "lie")]
        variety: Variety,
    },
    /// CERTIFIED_RIGID when H² vanishes, INCONCLUSIVE otherwise.
    Rigidity {
        file: PathBuf,
        #[arg(long, default_value = "lie")]
        variety: Variety,
    },
    /// Emit a .lie table.
    Gen {
        #[command(subcommand)]
        family: Family,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Deform along a1* ∧ a2* ⊗ y.
    ///
    /// SPEC is "eK" (1-based basis vector) or comma-separated coordinates.
    /// Without --h the complement is spanned by the basis vectors outside
    /// the pivot columns of a1, a2.
    Deform {
        file: PathBuf,
        #[arg(long)]
        a1: String,
        #[arg(long)]
        a2: String,
        #[arg(long)]
        y: String,
        /// Spanning vectors of h (repeatable).
        #[arg(long = "h")]
        h: Vec<String>,
        #[arg(long, default_value = "1")]
        t: Rational,
        #[arg(long)]
        variety: Option<Variety>,
    },
    /// Run a named construction or check (see `scenario --list`).
    Scenario {
        name: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        variety: Option<Variety>,
        /// Graph file for the graph scenario.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Family {
    FreeNilpotent { m: usize, k: usize },
    Heisenberg { m: usize },
    Abelian { l: usize },
    Graph { file: PathBuf },
    Catalog { name: String },
}

/// What a command prints and the process exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

pub fn exit_code(e: &LieError) -> i32 {
    match e {
        LieError::ResourceCap { .. } => 3,
        LieError::Parse { .. } | LieError::UnknownName(_) | LieError::InvalidInput(_) => 2,
        LieError::DimensionMismatch { .. } | LieError::ArityMismatch { .. } => 2,
        _ => 1,
    }
}

fn error_kind(e: &LieError) -> &'static str {
    match e {
        LieError::DimensionMismatch { .. } => "DIMENSION_MISMATCH",
        LieError::ArityMismatch { .. } => "ARITY_MISMATCH",
        LieError::SingularMatrix => "SINGULAR_MATRIX",
        LieError::NotAnIdeal => "NOT_AN_IDEAL",
        LieError::NotInvariant => "NOT_INVARIANT",
        LieError::NotInVariety { .. } => "NOT_IN_VARIETY",
        LieError::ResourceCap { .. } => "RESOURCE_CAP",
        LieError::HypothesisFailed { .. } => "HYPOTHESIS_FAILED",
        LieError::Rejected(_) => "REJECTED",
        LieError::SearchExhausted(_) => "SEARCH_EXHAUSTED",
        LieError::Parse { .. } => "PARSE",
        LieError::UnknownName(_) => "UNKNOWN_NAME",
        LieError::InvalidInput(_) => "INVALID_INPUT",
    }
}

fn error_json(e: &LieError) -> Value {
    json!({"kind": error_kind(e), "message": e.to_string()})
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn report(command: &[String], input: &[u8], status: &str, result: Value) -> String {
    let v = json!({
        "command": command,
        "input_digest": digest(input),
        "status": status,
        "result": result,
    });
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<Vec<u8>> {
    std::fs::read(path).map_err(|e| LieError::invalid(format!("cannot read {}: {e}", path.display())))
}

fn load_lie(path: &Path) -> Result<(Vec<u8>, LieAlgebra)> {
    let bytes = read(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| LieError::invalid("input is not UTF-8"))?;
    Ok((bytes, parse_lie(&text)?))
}

fn load_graph(path: &Path) -> Result<(Vec<u8>, GraphSpec)> {
    let bytes = read(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| LieError::invalid("input is not UTF-8"))?;
    Ok((bytes, parse_graph(&text)?))
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// Runs a parsed command; `argv` is echoed into the report.
pub fn run(cli: Cli, argv: &[String]) -> Outcome {
    let echo: Vec<String> = argv.iter().skip(1).cloned().collect();
    match cli.command {
        Command::Gen { family, out } => gen(family, out),
        Command::Invariants { file, json: false } => match load_lie(&file) {
            Ok((_, l)) => Outcome {
                stdout: invariants_text(&l),
                code: 0,
            },
            Err(e) => fail(&echo, b"", e),
        },
        Command::Scenario {
            name,
            all,
            list,
            m,
            k,
            l,
            base,
            variety,
            graph,
        } => {
            if list {
                return Outcome {
                    stdout: SCENARIOS.iter().map(|s| format!("{s}\n")).collect(),
                    code: 0,
                };
            }
            let params = Params {
                m,
                k,
                l,
                base,
                variety,
                graph,
            };
            scenario_command(&echo, name, all, &params)
        }
        other => {
            let file = match &other {
                Command::Check { file }
                | Command::Invariants { file, .. }
                | Command::Cohomology { file, .. }
                | Command::Rigidity { file, .. }
                | Command::Deform { file, .. } => file.clone(),
                _ => unreachable!("handled above"),
            };
            let (bytes, l) = match load_lie(&file) {
                Ok(x) => x,
                Err(e) => return fail(&echo, b"", e),
            };
            match file_command(other, &l) {
                Ok((status, result, code)) => Outcome {
                    stdout: report(&echo, &bytes, status, result),
                    code,
                },
                Err(e) => fail(&echo, &bytes, e),
            }
        }
    }
}

fn fail(echo: &[String], input: &[u8], e: LieError) -> Outcome {
    Outcome {
        stdout: report(echo, input, "error", json!({"error": error_json(&e)})),
        code: exit_code(&e),
    }
}

fn invariants_text(l: &LieAlgebra) -> String {
    let inv = l.invariant_vector();
    let opt = |x: Option<usize>| x.map_or("none".to_string(), |k| k.to_string());
    let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    format!(
        "dim {}\nlower central {}\nderived {}\ncenter {}\nnilpotency class {}\nsolvability class {}\nperfect {}\nabelian factor {}\nkilling rank {}\n",
        inv.dim,
        list(&inv.lower_central),
        list(&inv.derived),
        inv.center_dim,
        opt(inv.nilpotency_class),
        opt(inv.solvability_class),
        inv.is_perfect,
        inv.has_abelian_factor,
        inv.killing_rank
    )
}

fn file_command(cmd: Command, l: &LieAlgebra) -> Result<(&'static str, Value, i32)> {
    match cmd {
        Command::Check { .. } => {
            let r = l.validate();
            let status = if r.passed { "ok" } else { "failed" };
            Ok((
                status,
                json!({"dim": l.dim(), "jacobi": to_json(&r)}),
                i32::from(!r.passed),
            ))
        }
        Command::Invariants { .. } => Ok(("ok", to_json(&l.invariant_vector()), 0)),
        Command::Cohomology { variety, .. } => {
            let s = cohomology(l, variety)?;
            Ok(("ok", cohomology_json(&s), 0))
        }
        Command::Rigidity { variety, .. } => {
            let s = cohomology(l, variety)?;
            let mut v = cohomology_json(&s);
            v["certificate"] = to_json(&s.certificate());
            Ok(("ok", v, 0))
        }
        Command::Deform {
            a1,
            a2,
            y,
            h,
            t,
            variety,
            ..
        } => deform_command(l, &a1, &a2, &y, &h, &t, variety),
        _ => unreachable!("file commands only"),
    }
}

fn cohomology_json(s: &lieforge::cohomology::CohomologySpace) -> Value {
    json!({
        "variety": s.variety.to_string(),
        "z_dim": s.z_dim,
        "b_dim": s.b_dim,
        "h_dim": s.h_dim,
        "b_in_z": s.b_in_z,
    })
}

/// `eK` (1-based) or comma-separated rational coordinates.
pub fn parse_spec(spec: &str, n: usize) -> Result<Vector> {
    let spec = spec.trim();
    if let Some(k) = spec.strip_prefix('e') {
        let k: usize = k
            .parse()
            .map_err(|_| LieError::invalid(format!("malformed basis spec {spec:?}")))?;
        if k == 0 || k > n {
            return Err(LieError::invalid(format!("basis index {k} out of range 1..={n}")));
        }
        return Ok(vector::unit(n, k - 1));
    }
    let coords: Vec<Rational> = spec
        .split(',')
        .map(|c| {
            c.trim()
                .parse()
                .map_err(|_| LieError::invalid(format!("malformed coordinate {c:?}")))
        })
        .collect::<Result<_>>()?;
    if coords.len() != n {
        return Err(LieError::DimensionMismatch {
            expected: n,
            found: coords.len(),
        });
    }
    Ok(coords)
}

fn deform_command(
    l: &LieAlgebra,
    a1: &str,
    a2: &str,
    y: &str,
    h: &[String],
    t: &Rational,
    variety: Option<Variety>,
) -> Result<(&'static str, Value, i32)> {
    let n = l.dim();
    let (a1, a2, y) = (parse_spec(a1, n)?, parse_spec(a2, n)?, parse_spec(y, n)?);
    let h = if h.is_empty() {
        let pivots = Matrix::from_rows(n, &[a1.clone(), a2.clone()]).reduce().pivots;
        let rest: Vec<Vector> = (0..n)
            .filter(|i| !pivots.contains(i))
            .map(|i| vector::unit(n, i))
            .collect();
        Subspace::span(n, &rest)
    } else {
        let vs = h.iter().map(|s| parse_spec(s, n)).collect::<Result<Vec<_>>>()?;
        Subspace::span(n, &vs)
    };
    let dec = BasisDecomposition::new(a1, a2, h)?;
    let hyp = check_codim2_hypotheses(l, &dec, &y);
    if !hyp.all_pass() {
        return Ok(("failed", json!({"hypotheses": to_json(&hyp)}), 1));
    }
    let mut defm = deform_codim2(l, &dec, &y)?;
    if let Some(v) = variety {
        defm = defm.with_variety(v)?;
    }
    let w = deform::witness(&defm, &deform::default_samples());
    Ok((
        "ok",
        json!({
            "hypotheses": to_json(&hyp),
            "deformation": deformation_json(&defm),
            "witness": to_json(&w),
            "t": t.to_string(),
            "evaluated": emit_lie(&defm.evaluate(t)),
        }),
        0,
    ))
}

fn deformation_json(d: &deform::LinearDeformation) -> Value {
    json!({
        "base": emit_lie(d.base()),
        "direction": emit_lie(&d.direction_algebra()),
        "provenance": to_json(d.provenance()),
        "validation": to_json(d.validation()),
    })
}

fn scenario_json(r: &ScenarioResult) -> Value {
    json!({
        "deformation": deformation_json(&r.deformation),
        "witness": to_json(&r.witness),
        "evaluated_at_1": emit_lie(&r.deformation.evaluate(&Rational::one())),
    })
}

fn gen(family: Family, out: Option<PathBuf>) -> Outcome {
    let built: Result<String> = (|| {
        Ok(match family {
            Family::FreeNilpotent { m, k } => emit_lie(&free_nilpotent(m, k)?),
            Family::Heisenberg { m } => emit_lie(&catalog::heisenberg(m)?),
            Family::Abelian { l } => emit_lie(&catalog::abelian(l)?),
            Family::Graph { file } => emit_lie(&catalog::graph_algebra(&load_graph(&file)?.1)),
            Family::Catalog { name } => emit_lie(&catalog::named(&name)?),
        })
    })();
    match (built, out) {
        (Ok(text), None) => Outcome {
            stdout: text,
            code: 0,
        },
        (Ok(text), Some(path)) => match std::fs::write(&path, text) {
            Ok(()) => Outcome {
                stdout: String::new(),
                code: 0,
            },
            Err(e) => Outcome {
                stdout: format!("cannot write {}: {e}\n", path.display()),
                code: 2,
            },
        },
        (Err(e), _) => Outcome {
            stdout: format!("{e}\n"),
            code: exit_code(&e),
        },
    }
}

pub struct Params {
    pub m: Option<usize>,
    pub k: Option<usize>,
    pub l: Option<usize>,
    pub base: Option<String>,
    pub variety: Option<Variety>,
    pub graph: Option<PathBuf>,
}

/// Scenario names accepted by `scenario NAME`.
pub const SCENARIOS: &[&str] = &[
    "whitehead",
    "semisimple-factor",
    "exceptional-rigid",
    "heis-rigid",
    "heis-nonrigid",
    "free-rigid",
    "free-nonrigid",
    "graph",
    "abelian-factor",
    "exceptional-perfect",
    "contraction",
    "nongh",
];

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T> {
    v.clone()
        .ok_or_else(|| LieError::invalid(format!("missing --{flag}")))
}

fn rigidity_json(l: &LieAlgebra, variety: Variety) -> Result<(Value, bool)> {
    let s = cohomology(l, variety)?;
    let mut v = cohomology_json(&s);
    v["certificate"] = to_json(&s.certificate());
    v["dim"] = json!(l.dim());
    Ok((v, s.h_dim == 0))
}

/// Runs one scenario; `Ok(true)` when its expected outcome holds.
fn run_scenario(name: &str, p: &Params) -> Result<(Value, bool)> {
    let deformed = |r: ScenarioResult| {
        let ok = r.witness.verdict == deform::Verdict::Nontrivial && r.deformation.validation().passed();
        (scenario_json(&r), ok)
    };
    match name {
        "whitehead" => rigidity_json(&catalog::sl2(), Variety::Lie),
        "semisimple-factor" => rigidity_json(&catalog::named("sl2_a1")?, Variety::Lie),
        "exceptional-rigid" => rigidity_json(&catalog::sl2_sd_c2(), Variety::Lie),
        "heis-rigid" => rigidity_json(&catalog::heisenberg(need(&p.m, "m")?)?, Variety::Nil(2)),
        "free-rigid" => {
            let k = need(&p.k, "k")?;
            rigidity_json(&free_nilpotent(need(&p.m, "m")?, k)?, Variety::Nil(k))
        }
        "heis-nonrigid" => Ok(deformed(deform::scenario_heisenberg(need(&p.m, "m")?)?)),
        "free-nonrigid" => Ok(deformed(deform::scenario_free_nilpotent(
            need(&p.m, "m")?,
            need(&p.k, "k")?,
        )?)),
        "graph" => {
            let g = load_graph(&need(&p.graph, "graph")?)?.1;
            Ok(deformed(deform::scenario_graph(&g)?))
        }
        "abelian-factor" => {
            let base = catalog::named(&need(&p.base, "base")?)?;
            let l = need(&p.l, "l")?;
            let v = need(&p.variety, "variety")?;
            Ok(deformed(deform::scenario_abelian_factor(&base, l, v)?))
        }
        "exceptional-perfect" => Ok(deformed(deform::scenario_exceptional_perfect()?)),
        "contraction" => Ok(deformed(deform::scenario_contraction()?)),
        "nongh" => Ok(deformed(deform::scenario_nongh()?)),
        other => Err(LieError::UnknownName(other.to_string())),
    }
}

fn params_json(p: &Params) -> Value {
    json!({
        "m": p.m,
        "k": p.k,
        "l": p.l,
        "base": p.base,
        "variety": p.variety.map(|v| v.to_string()),
        "graph": p.graph.as_ref().map(|g| g.display().to_string()),
    })
}

fn scenario_command(echo: &[String], name: Option<String>, all: bool, p: &Params) -> Outcome {
    let input = echo.join(" ");
    match (name, all) {
        (Some(name), false) => match run_scenario(&name, p) {
            Ok((result, ok)) => Outcome {
                stdout: report(echo, input.as_bytes(), if ok { "ok" } else { "failed" }, result),
                code: i32::from(!ok),
            },
            Err(e) => {
                let code = exit_code(&e);
                let status = if code == 1 { "rejected" } else { "error" };
                Outcome {
                    stdout: report(
                        echo,
                        input.as_bytes(),
                        status,
                        json!({"error": error_json(&e), "params": params_json(p)}),
                    ),
                    code,
                }
            }
        },
        (None, true) => run_all(echo),
        _ => Outcome {
            stdout: "scenario: give exactly one of NAME or --all\n".into(),
            code: 2,
        },
    }
}

fn graph_params(tag: &str, g: &GraphSpec) -> (String, GraphSpec) {
    (tag.to_string(), g.clone())
}

/// The fixed suite behind `scenario --all`, in report order.
fn run_all(echo: &[String]) -> Outcome {
    let none = || Params {
        m: None,
        k: None,
        l: None,
        base: None,
        variety: None,
        graph: None,
    };
    let mut entries: Vec<(String, Params, bool)> = Vec::new();
    for name in ["whitehead", "semisimple-factor", "exceptional-rigid"] {
        entries.push((name.into(), none(), true));
    }
    for m in [1, 2, 3] {
        entries.push(("heis-rigid".into(), Params { m: Some(m), ..none() }, true));
    }
    for (m, k) in [(2, 2), (3, 2), (2, 3), (4, 2), (2, 4)] {
        entries.push((
            "free-rigid".into(),
            Params {
                m: Some(m),
                k: Some(k),
                ..none()
            },
            true,
        ));
        entries.push((
            "free-nonrigid".into(),
            Params {
                m: Some(m),
                k: Some(k),
                ..none()
            },
            (m, k) != (2, 2),
        ));
    }
    for m in [2, 3] {
        entries.push(("heis-nonrigid".into(), Params { m: Some(m), ..none() }, true));
    }
    for (base, l, v, expected) in [
        ("heis1", 1, Variety::Nil(2), false),
        ("heis1", 2, Variety::Nil(2), true),
        ("heis2", 1, Variety::Nil(2), true),
        ("heis2", 2, Variety::Nil(2), true),
        ("free_2_3", 1, Variety::Nil(3), true),
        ("free_2_3", 2, Variety::Nil(3), true),
        ("aff1", 1, Variety::Sol(2), true),
        ("aff1", 2, Variety::Sol(2), true),
        ("solv2", 1, Variety::Sol(2), true),
        ("solv2", 2, Variety::Sol(2), true),
    ] {
        entries.push((
            "abelian-factor".into(),
            Params {
                base: Some(base.into()),
                l: Some(l),
                variety: Some(v),
                ..none()
            },
            expected,
        ));
    }
    for name in ["exceptional-perfect", "contraction", "nongh"] {
        entries.push((name.into(), none(), true));
    }

    let graphs = [
        graph_params("edgeless3", &GraphSpec::edgeless(3).expect("graph")),
        graph_params("edgeless4", &GraphSpec::edgeless(4).expect("graph")),
        graph_params("single_edge3", &GraphSpec::new(3, &[(1, 2)]).expect("graph")),
        graph_params("path3", &GraphSpec::path(3).expect("graph")),
        graph_params("triangle", &GraphSpec::complete(3).expect("graph")),
        graph_params("star4", &GraphSpec::star(4).expect("graph")),
    ];

    let mut results = Vec::new();
    let mut all_ok = true;
    let mut cap_hit = false;
    for (name, params, expected) in &entries {
        let (status, payload) = match run_scenario(name, params) {
            Ok((v, ok)) => (if ok { "ok" } else { "failed" }, v),
            Err(e) => {
                cap_hit |= matches!(e, LieError::ResourceCap { .. });
                ("rejected", json!({"error": error_json(&e)}))
            }
        };
        let matched = (status == "ok") == *expected;
        all_ok &= matched;
        results.push(json!({
            "scenario": name,
            "params": params_json(params),
            "status": status,
            "expected_success": expected,
            "as_expected": matched,
            "result": payload,
        }));
    }
    for (tag, g) in &graphs {
        let (status, payload) = match deform::scenario_graph(g) {
            Ok(r) => {
                let ok = r.witness.verdict == deform::Verdict::Nontrivial;
                (if ok { "ok" } else { "failed" }, scenario_json(&r))
            }
            Err(e) => ("rejected", json!({"error": error_json(&e)})),
        };
        all_ok &= status == "ok";
        results.push(json!({
            "scenario": "graph",
            "params": {"graph": tag},
            "status": status,
            "expected_success": true,
            "as_expected": status == "ok",
            "result": payload,
        }));
    }
    let code = if cap_hit { 3 } else { i32::from(!all_ok) };
    Outcome {
        stdout: report(
            echo,
            echo.join(" ").as_bytes(),
            if all_ok { "ok" } else { "failed" },
            json!({"scenarios": results}),
        ),
        code,
    }
}
