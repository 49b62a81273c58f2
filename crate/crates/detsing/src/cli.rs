use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use detsing_core::clifford::{block_decomposition, presentation, Presentation};
use detsing_core::cohomology::{direct_image, rank_polynomial};
use detsing_core::ext::{ext_dims, simple_resolution_table};
use detsing_core::moduli::{build_rep, reconstruct, ModuliPoint};
use detsing_core::oracle::DEFAULT_DEGREE_BOUND;
use detsing_core::resolutions::{projective_dimension, resolution_shape, SummandShape};
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::json;
use crate::matfile::parse_matrix;
use crate::verify::{run_suite, Suite, VerifyConfig};

#[derive(Debug, Parser)]
#[command(name = "detsing", version, about = "Exact tables and checks for the non-commutative desingularization of maximal-minor determinantal varieties")]
pub struct Cli {
    /// Emit JSON instead of a human-readable table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Triple {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub a: usize,
    #[arg(long)]
    pub b: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The nonvanishing higher direct image of M^b_a(-c) on P^{m-1}.
    Cohomology {
        #[command(flatten)]
        t: Triple,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
    },
    /// The rank polynomial r^b_a(z).
    Rankpoly {
        #[command(flatten)]
        t: Triple,
    },
    /// Shape of the free resolution by the modules P^mu.
    Betti {
        #[command(flatten)]
        t: Triple,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
    },
    /// The minimal presentation of C_ab by Delta-minor blocks.
    Presentation {
        #[command(flatten)]
        t: Triple,
        #[arg(long)]
        n: usize,
        /// Show the decomposition into blocks C^{alpha beta} instead.
        #[arg(long)]
        blocks: bool,
    },
    /// Summands of Ext^t(S_b, S_a).
    Ext {
        #[command(flatten)]
        t: Triple,
        #[arg(long)]
        n: usize,
        #[arg(long = "t")]
        degree: usize,
    },
    /// Terms of the projective resolution of the simple S_a.
    Simples {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        tmax: usize,
    },
    /// The quiver representation attached to a point (alpha, beta).
    Moduli {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_name = "FILE")]
        alpha: PathBuf,
        #[arg(long, value_name = "FILE")]
        beta: PathBuf,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
        max_degree: i32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random samples for randomized checks (default depends on the suite).
        #[arg(long)]
        samples: Option<usize>,
    },
}

/// What a command produced.
pub struct Output {
    pub json: Value,
    pub human: String,
    pub passed: bool,
}

impl Output {
    fn ok(json: Value, human: String) -> Self {
        Output { json, human, passed: true }
    }
}

/// Parse `args`, run, write to `out`/`err`, and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(output) => {
            let text = if cli.json {
                let mut s = serde_json::to_string_pretty(&output.json).expect("serializable");
                s.push('\n');
                s
            } else {
                output.human.clone()
            };
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &text).map_err(|e| CliError::Io { path: path.display().to_string(), source: e }),
                None => out.write_all(text.as_bytes()).map_err(|e| CliError::Io { path: "<stdout>".into(), source: e }),
            };
            if let Err(e) = written {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
            if output.passed {
                0
            } else {
                if !cli.json {
                    let failures: Vec<&Value> = output.json["rows"]
                        .as_array()
                        .map(|rows| rows.iter().filter(|r| r["passed"] == json!(false)).collect())
                        .unwrap_or_default();
                    let _ = writeln!(err, "{}", json!({ "failures": failures }));
                }
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cmd: &Command) -> Result<Output> {
    match cmd {
        Command::Cohomology { t, c } => cohomology(t, *c),
        Command::Rankpoly { t } => rankpoly(t),
        Command::Betti { t, n, c } => betti(t, *n, *c),
        Command::Presentation { t, n, blocks } => {
            if *blocks {
                blocks_cmd(t, *n)
            } else {
                presentation_cmd(t, *n)
            }
        }
        Command::Ext { t, n, degree } => ext(t, *n, *degree),
        Command::Simples { m, n, a, tmax } => simples(*m, *n, *a, *tmax),
        Command::Moduli { m, n, alpha, beta } => moduli(*m, *n, alpha, beta),
        Command::Verify { suite, m, n, max_degree, seed, samples } => {
            let samples = samples.unwrap_or(match suite {
                Suite::Moduli => 500,
                _ => 200,
            });
            let cfg = VerifyConfig { m: *m, n: *n, max_degree: *max_degree, seed: *seed, samples };
            verify(*suite, &cfg)
        }
    }
}

fn cohomology(t: &Triple, c: i64) -> Result<Output> {
    let e = direct_image(t.m, t.a, t.b, c)?;
    let descriptor = e.descriptor.to_string();
    let row = json!({ "nu": e.nu, "rank": e.rank, "descriptor": descriptor });
    let mut v = json::table(json!({ "m": t.m, "a": t.a, "b": t.b, "c": c }), vec![row], "higher direct images on projective space");
    v["nu"] = json!(e.nu);
    v["rank"] = json!(e.rank);
    v["descriptor"] = json!(descriptor);
    let human = match e.nu {
        Some(nu) => format!("R^{nu} π_* M^{}_{}(-({c})) has rank {}: {descriptor}\n", t.b, t.a, e.rank),
        None => format!("all R^ν π_* M^{}_{}(-({c})) vanish\n", t.b, t.a),
    };
    Ok(Output::ok(v, human))
}

fn rankpoly(t: &Triple) -> Result<Output> {
    let p = rank_polynomial(t.m, t.a, t.b)?;
    let rows: Vec<Value> = p.coeffs.iter().enumerate().map(|(k, c)| json!({ "power": k, "coeff": json::rational(c) })).collect();
    let mut v = json::table(json!({ "m": t.m, "a": t.a, "b": t.b }), rows, "rank polynomial by interpolation");
    v["polynomial"] = json!(p.to_string());
    Ok(Output::ok(v, format!("r^{}_{}(z) = {p}\n", t.b, t.a)))
}

fn shape_json(s: &SummandShape) -> Value {
    match *s {
        SummandShape::Exterior { p, q } => json!({ "kind": "exterior", "f_dual": p, "g": q, "text": s.to_string() }),
        SummandShape::DirectImage { nu, c, q } => json!({ "kind": "direct_image", "nu": nu, "c": c, "g": q, "text": s.to_string() }),
    }
}

fn betti(t: &Triple, n: usize, c: i64) -> Result<Output> {
    let table = resolution_shape(t.m, n, t.a, t.b, c)?;
    let pd = projective_dimension(t.m, n, t.a, t.b, c)?;
    let mut rows = Vec::new();
    let mut human = format!("resolution of M^{}_{}(-({c})), m = {}, n = {n}\n", t.b, t.a, t.m);
    human.push_str(&format!("{:>4}  {:>6}  summands\n", "mu", "rank"));
    for (&mu, summands) in table.terms.iter().rev() {
        let rank: u64 = summands.iter().map(|s| s.rank).sum();
        let items: Vec<Value> = summands
            .iter()
            .map(|s| json!({ "rank": s.rank, "shape": shape_json(&s.shape), "twist": s.twist }))
            .collect();
        let text: Vec<String> = summands
            .iter()
            .map(|s| match s.twist {
                Some(tw) => format!("{}·{}(-{tw})", s.rank, s.shape),
                None => format!("{}·{}", s.rank, s.shape),
            })
            .collect();
        human.push_str(&format!("{mu:>4}  {rank:>6}  {}\n", text.join(" ⊕ ")));
        rows.push(json!({ "mu": mu, "rank": rank, "summands": items }));
    }
    human.push_str(&format!("projective dimension {pd}\n"));
    let mut v = json::table(json!({ "m": t.m, "n": n, "a": t.a, "b": t.b, "c": c }), rows, "resolution shape table");
    v["projective_dimension"] = json!(pd);
    Ok(Output::ok(v, human))
}

fn structure(p: &Presentation) -> String {
    let rows: Vec<String> = p
        .p0_summands
        .iter()
        .map(|r| {
            let cells: Vec<String> = p.p1_summands.iter().map(|c| format!("Δ^({})", p.block_degree(r.index, c.index))).collect();
            format!("({})", cells.join(","))
        })
        .collect();
    format!("({})", rows.join(","))
}

fn presentation_cmd(t: &Triple, n: usize) -> Result<Output> {
    let p = presentation(t.m, n, t.a, t.b)?;
    let mut rows = Vec::new();
    for (ri, r) in p.p0_summands.iter().enumerate() {
        for (ci, c) in p.p1_summands.iter().enumerate() {
            let block = p.block(ri, ci);
            rows.push(json!({
                "k": r.index,
                "l": c.index,
                "t": p.block_degree(r.index, c.index),
                "matrix": json::poly_matrix(&block),
            }));
        }
    }
    let summand = |s: &detsing_core::clifford::presentation::Summand| json!({ "index": s.index, "g": s.qg, "f_dual": s.ql, "rank": s.rank });
    let mut v = json::table(json!({ "m": t.m, "n": n, "a": t.a, "b": t.b }), rows, "Δ-minor presentation");
    v["presented_pair"] = json!([p.a_eff, p.b_eff]);
    v["p0"] = Value::Array(p.p0_summands.iter().map(summand).collect());
    v["p1"] = Value::Array(p.p1_summands.iter().map(summand).collect());
    v["structure"] = json!(structure(&p));
    v["rho"] = json::poly_matrix(&p.rho);
    let mut human = format!("C_{}{} (m = {}, n = {n})", t.a, t.b, t.m);
    if p.dualized() {
        human.push_str(&format!(", presented as C_{}{}", p.a_eff, p.b_eff));
    }
    human.push('\n');
    let list = |ss: &[detsing_core::clifford::presentation::Summand]| {
        ss.iter().map(|s| format!("Λ^{}G⊗Λ^{}F^∨", s.qg, s.ql)).collect::<Vec<_>>().join(" ⊕ ")
    };
    human.push_str(&format!("P0 = {}\nP1 = {}\n", list(&p.p0_summands), list(&p.p1_summands)));
    human.push_str(&format!("rho = {}\n", structure(&p)));
    human.push_str(&format!("{} x {} matrix, {} nonzero entries\n", p.rho.rows(), p.rho.cols(), p.rho.triplets().len()));
    Ok(Output::ok(v, human))
}

fn blocks_cmd(t: &Triple, n: usize) -> Result<Output> {
    let bd = block_decomposition(t.m, n, t.a, t.b)?;
    let rows: Vec<Value> = bd
        .blocks
        .iter()
        .map(|b| json!({ "p": b.p, "alpha": b.alpha, "beta": b.beta, "t": b.t, "matrix": json::poly_matrix(&b.map) }))
        .collect();
    let rho_ok = bd.reconstructs_rho()?;
    let a_ok = bd.reconstructs_a()?;
    let mut v = json::table(json!({ "m": t.m, "n": n, "a": t.a, "b": t.b }), rows, "block diagonalization over the rationals");
    v["a_matrix"] = json::q_matrix(&bd.a_matrix);
    v["p"] = json::q_matrix(&bd.p);
    v["d"] = Value::Array(bd.d.iter().map(json::rational).collect());
    v["reconstructs_rho"] = json!(rho_ok);
    v["reconstructs_a"] = json!(a_ok);
    let mut human = format!("C_{}{} = ", t.a, t.b);
    human.push_str(
        &bd.blocks.iter().map(|b| format!("C^{{{},{}}}", b.alpha, b.beta)).collect::<Vec<_>>().join(" ⊕ "),
    );
    human.push('\n');
    for b in &bd.blocks {
        human.push_str(&format!(
            "  C^{{{},{}}} = cok Δ^({}): Λ^{}G⊗Λ^{}F^∨ → Λ^{}G⊗Λ^{}F^∨\n",
            b.alpha,
            b.beta,
            b.t,
            t.m - b.beta,
            t.m - b.alpha,
            b.alpha,
            b.beta
        ));
    }
    let d: Vec<String> = bd.d.iter().map(|q| q.to_string()).collect();
    human.push_str(&format!("D = diag({})\nA = P D Pᵀ: {a_ok}\nρ = P̃ · diag · P̃': {rho_ok}\n", d.join(", ")));
    Ok(Output { json: v, human, passed: rho_ok && a_ok })
}

fn ext(t: &Triple, n: usize, degree: usize) -> Result<Output> {
    let summands = ext_dims(t.m, n, degree, t.a, t.b)?;
    let total: num_bigint::BigInt = summands.iter().map(|s| s.dim()).sum();
    let rows: Vec<Value> = summands
        .iter()
        .map(|s| {
            json!({
                "alpha": s.alpha.parts(),
                "square": [s.square.row, s.square.col],
                "column_dropped": s.column_dropped.parts(),
                "row_dropped_conjugate": s.row_dropped_conjugate.parts(),
                "dim_f": json::int(&s.dim_f),
                "dim_g": json::int(&s.dim_g),
                "dim": json::int(&s.dim()),
                "twist": s.twist(),
            })
        })
        .collect();
    let mut v = json::table(json!({ "m": t.m, "n": n, "a": t.a, "b": t.b, "t": degree }), rows, "convex squares");
    v["dimension"] = json::int(&total);
    let mut human = format!("Ext^{degree}(S_{}, S_{}) has dimension {total}\n", t.b, t.a);
    for s in &summands {
        human.push_str(&format!(
            "  α = {} square ({},{}): L_{} F ⊗ L_{} G^∨, {} · {}\n",
            s.alpha, s.square.row, s.square.col, s.column_dropped, s.row_dropped_conjugate, s.dim_f, s.dim_g
        ));
    }
    Ok(Output::ok(v, human))
}

fn simples(m: usize, n: usize, a: usize, tmax: usize) -> Result<Output> {
    let table = simple_resolution_table(m, n, a, tmax)?;
    let rows: Vec<Value> = table
        .iter()
        .map(|r| {
            json!({
                "t": r.t,
                "vertex": r.vertex,
                "twist": r.twist,
                "descriptor": r.descriptor(),
                "f_shape": r.f_shape.parts(),
                "g_shape": r.g_shape.parts(),
                "rank": json::int(&r.rank),
            })
        })
        .collect();
    let v = json::table(json!({ "m": m, "n": n, "a": a, "tmax": tmax }), rows, "convex squares");
    let mut human = format!("resolution of S_{a} (m = {m}, n = {n})\n");
    for t in 0..=tmax {
        let terms: Vec<String> = table.iter().filter(|r| r.t == t).map(|r| r.to_string()).collect();
        human.push_str(&format!("t = {t}: {}\n", if terms.is_empty() { "0".into() } else { terms.join(" ⊕ ") }));
    }
    Ok(Output::ok(v, human))
}

fn read_matrix(path: &PathBuf) -> Result<detsing_core::QMatrix> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })?;
    Ok(parse_matrix(&text)?)
}

fn moduli(m: usize, n: usize, alpha: &PathBuf, beta: &PathBuf) -> Result<Output> {
    let a = read_matrix(alpha)?;
    let b = read_matrix(beta)?;
    if m < 2 {
        return Err(CliError::Usage("moduli needs m >= 2".into()));
    }
    if (a.rows(), a.cols()) != (m - 1, m) || (b.rows(), b.cols()) != (m - 1, n) {
        return Err(CliError::Usage(format!(
            "alpha must be {} x {m} and beta {} x {n}, got {} x {} and {} x {}",
            m - 1,
            m - 1,
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let pt = ModuliPoint::new(a, b)?;
    if !pt.is_split() {
        return Err(CliError::Usage("alpha is not split (rank < m - 1)".into()));
    }
    let rep = build_rep(&pt)?;
    let violations: Vec<Value> =
        rep.check_relations().iter().map(|v| json!({ "relation": v.relation, "vertex": v.vertex })).collect();
    let scalar_ok = rep.scalar_action_failures().is_empty();
    let assoc = pt.associated_matrix();
    let rank = assoc.rank();
    let simple = rep.is_simple();
    let back = reconstruct(&rep)?;
    let row = json!({
        "dimension_vector": rep.dimension_vector(),
        "violations": violations,
        "scalar_action": scalar_ok,
        "associated_matrix": json::q_matrix(&assoc),
        "associated_rank": rank,
        "beta_rank": pt.beta.rank(),
        "simple": simple,
        "reconstructed_alpha": json::q_matrix(&back.alpha),
        "reconstructed_beta": json::q_matrix(&back.beta),
    });
    let v = json::table(json!({ "m": m, "n": n }), vec![row], "quiver representation of a moduli point");
    let human = format!(
        "dimension vector {:?}\nrelations: {}\nx_ij act by scalars: {scalar_ok}\nassociated matrix rank {rank} (m - 1 = {})\nsimple: {simple}\n",
        rep.dimension_vector(),
        if violations.is_empty() { "all hold".to_string() } else { format!("{} violations", violations.len()) },
        m - 1
    );
    Ok(Output { json: v, human, passed: violations.is_empty() && scalar_ok })
}

fn verify(suite: Suite, cfg: &VerifyConfig) -> Result<Output> {
    let report = run_suite(suite, cfg)?;
    let rows: Vec<Value> = report.checks.iter().map(|c| serde_json::to_value(c).expect("serializable")).collect();
    let mut v = json::table(
        json!({ "suite": report.suite, "m": cfg.m, "n": cfg.n, "max_degree": cfg.max_degree, "seed": cfg.seed, "samples": cfg.samples }),
        rows,
        "verification suite",
    );
    v["passed"] = json!(report.passed());
    let mut human = String::new();
    for c in &report.checks {
        human.push_str(&format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail));
    }
    human.push_str(&format!(
        "{}: {}/{} checks passed\n",
        report.suite,
        report.checks.iter().filter(|c| c.passed).count(),
        report.checks.len()
    ));
    Ok(Output { json: v, human, passed: report.passed() })
}
