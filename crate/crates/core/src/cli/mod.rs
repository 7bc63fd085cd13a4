//! Command-line front end: argument parsing, algebra and field selection,
//! dispatch to the library, and deterministic text or JSON output.

mod suite;

pub use suite::{reidemeister_suite, ReidemeisterCase};

use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{builtin, khovanov_pair_data, Algebra, AlgebraError, Params, CATALOG};
use crate::complex::{
    homology_bigraded, khovanov_link_oracle, normalized_bracket, spectral_page, spectral_sequence, tangle_complex,
    BigradedDims, ComplexError, HomologyReport,
};
use crate::compose::{compose_tangle, composition_report, ComposeError};
use crate::linalg::{Field, Fp, Rationals};
use crate::tangle::{Move, PointSign, TangleDiagram, TangleError};

#[derive(Parser, Debug)]
#[command(name = "tanglehom", version, about = "Tangle homology from knowledgeable Frobenius algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Clone, Debug)]
pub struct AlgebraArgs {
    /// Catalog algebra name.
    #[arg(long, default_value = "barnatan_pair")]
    pub algebra: String,
    /// Field characteristic; 0 selects the rationals.
    #[arg(long = "char", default_value_t = 2)]
    pub characteristic: u64,
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Size parameter of `matrix` or `truncated_poly`.
    #[arg(long)]
    pub m: Option<u64>,
}

impl AlgebraArgs {
    fn params(&self) -> Params {
        let mut p = Params::new();
        for (k, v) in [("h", &self.h), ("t", &self.t), ("alpha", &self.alpha)] {
            if let Some(v) = v {
                p = p.with(k, v);
            }
        }
        if let Some(m) = self.m {
            p = p.with(if self.algebra == "truncated_poly" { "p" } else { "m" }, m);
        }
        p
    }
}

#[derive(Args, Clone, Debug)]
pub struct DiagramArgs {
    #[command(flatten)]
    pub algebra: AlgebraArgs,
    /// Checkerboard colouring, +1 or -1.
    #[arg(long, default_value = "+1", allow_hyphen_values = true, value_parser = parse_epsilon)]
    pub epsilon: i8,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// A slice-word file, or the slice word itself with `/` separating lines.
    pub input: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List catalog algebras.
    AlgebraList {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the axiom suite on a catalog algebra.
    AlgebraCheck {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Bigraded homology rank table.
    Homology(DiagramArgs),
    /// Tangle polynomial `Σ dim H^{k,r} t^r A^k`.
    Polynomial(DiagramArgs),
    /// Graded Euler characteristic of the tangle complex.
    Euler(DiagramArgs),
    /// Spectral-sequence pages of the filtered complex.
    Spectral {
        #[command(flatten)]
        diagram: DiagramArgs,
        #[arg(long)]
        page: Option<i64>,
    },
    /// Local composition by coequalizers, compared with the global complex.
    Compose(DiagramArgs),
    /// Seeded Reidemeister invariance checks.
    Reidemeister {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value = "+1", allow_hyphen_values = true, value_parser = parse_epsilon)]
        epsilon: i8,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated subset of R1, R2, R3.
        #[arg(long, default_value = "R1,R2,R3")]
        moves: String,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        /// Pairs per move.
        #[arg(long, default_value_t = 10)]
        pairs: usize,
    },
    /// Compare a link's homology and Euler characteristic with the
    /// independent state-sum oracle.
    Oracle(DiagramArgs),
}

fn parse_epsilon(s: &str) -> Result<i8, String> {
    match s {
        "+1" | "1" | "+" => Ok(1),
        "-1" | "-" => Ok(-1),
        _ => Err(format!("epsilon must be +1 or -1, got {s}")),
    }
}

/// Failure of a command: input errors exit with 2, computation errors with 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Compute(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Compute(_) => 1,
        }
    }

    /// One line: `error[input]: ...` or `error[compute]: ...`.
    pub fn line(&self) -> String {
        match self {
            CliError::Input(m) => format!("error[input]: {m}"),
            CliError::Compute(m) => format!("error[compute]: {m}"),
        }
    }
}

impl From<TangleError> for CliError {
    fn from(e: TangleError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::UnknownAlgebra(_)
            | AlgebraError::BadParameter(_)
            | AlgebraError::IncompatibleCharacteristic { .. }
            | AlgebraError::Json(_) => CliError::Input(e.to_string()),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        match e {
            ComplexError::NotALink | ComplexError::AlgebraNotKnowledgeable => CliError::Input(e.to_string()),
            ComplexError::Algebra(a) => a.into(),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

impl From<ComposeError> for CliError {
    fn from(e: ComposeError) -> Self {
        match e {
            ComposeError::Complex(c) => c.into(),
            ComposeError::Algebra(a) => a.into(),
            ComposeError::UnknownVariant(_) => CliError::Input(e.to_string()),
            _ => CliError::Compute(e.to_string()),
        }
    }
}

/// Exit status and the bytes written to stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli.command) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.code(), stdout: String::new(), stderr: format!("{}\n", e.line()) },
    }
}

fn execute(cmd: &Command) -> Result<(i32, String), CliError> {
    if let Command::AlgebraList { format } = cmd {
        return Ok((0, algebra_list(*format)));
    }
    let ch = match cmd {
        Command::AlgebraCheck { algebra, .. } | Command::Reidemeister { algebra, .. } => algebra.characteristic,
        Command::Homology(d) | Command::Polynomial(d) | Command::Euler(d) | Command::Compose(d) | Command::Oracle(d) => {
            d.algebra.characteristic
        }
        Command::Spectral { diagram, .. } => diagram.algebra.characteristic,
        Command::AlgebraList { .. } => unreachable!(),
    };
    if ch == 0 {
        execute_in(&Rationals, cmd)
    } else {
        let f = Fp::new(ch).map_err(|e| CliError::Input(e.to_string()))?;
        execute_in(&f, cmd)
    }
}

fn algebra_list(format: Format) -> String {
    match format {
        Format::Text => CATALOG.iter().map(|n| format!("{n}\n")).collect(),
        Format::Json => format!("{}\n", json!({ "algebras": CATALOG })),
    }
}

fn load_diagram(input: &str) -> Result<TangleDiagram, CliError> {
    let text = if Path::new(input).is_file() {
        std::fs::read_to_string(input).map_err(|e| CliError::Input(format!("{input}: {e}")))?
    } else {
        input.to_string()
    };
    Ok(TangleDiagram::parse(&text)?)
}

fn header(cmd: &str, a: &AlgebraArgs, epsilon: i8) -> String {
    let ch = if a.characteristic == 0 { "0 (Q)".to_string() } else { a.characteristic.to_string() };
    format!("# {cmd} algebra={} char={ch} epsilon={}\n", a.algebra, if epsilon > 0 { "+1" } else { "-1" })
}

fn table_json(d: &BigradedDims) -> Value {
    Value::Array(d.entries().map(|(k, r, n)| json!({ "r": r, "k": k, "rank": n })).collect())
}

fn table_text(d: &BigradedDims) -> String {
    let mut s = String::from("r\tk\trank\n");
    for (k, r, n) in d.entries() {
        s.push_str(&format!("{r}\t{k}\t{n}\n"));
    }
    s
}

fn json_line(v: Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
}

fn execute_in<F: Field>(f: &F, cmd: &Command) -> Result<(i32, String), CliError> {
    match cmd {
        Command::AlgebraList { format } => Ok((0, algebra_list(*format))),
        Command::AlgebraCheck { algebra, format } => algebra_check(f, algebra, *format),
        Command::Homology(d) => {
            let (t, alg) = (load_diagram(&d.input)?, builtin(&d.algebra.algebra, f, &d.algebra.params())?);
            let rep = HomologyReport::compute(&t, d.epsilon, &alg, &d.algebra.algebra)?;
            Ok((0, match d.format {
                Format::Json => json_line(rep.to_json()),
                Format::Text => format!(
                    "{}n_plus={} n_minus={}\n{}polynomial: {}\n",
                    header("homology", &d.algebra, d.epsilon),
                    rep.n_plus,
                    rep.n_minus,
                    table_text(&rep.homology),
                    rep.polynomial()
                ),
            }))
        }
        Command::Polynomial(d) => {
            let (t, alg) = (load_diagram(&d.input)?, builtin(&d.algebra.algebra, f, &d.algebra.params())?);
            let p = HomologyReport::compute(&t, d.epsilon, &alg, &d.algebra.algebra)?.polynomial();
            Ok((0, match d.format {
                Format::Json => json_line(json!({ "polynomial": p.to_string() })),
                Format::Text => format!("{p}\n"),
            }))
        }
        Command::Euler(d) => {
            let (t, alg) = (load_diagram(&d.input)?, builtin(&d.algebra.algebra, f, &d.algebra.params())?);
            let chi = tangle_complex(&t, d.epsilon, &alg)?.graded_euler_characteristic();
            Ok((0, match d.format {
                Format::Json => json_line(json!({ "euler": chi.to_string() })),
                Format::Text => format!("{chi}\n"),
            }))
        }
        Command::Spectral { diagram: d, page } => {
            let (t, alg) = (load_diagram(&d.input)?, builtin(&d.algebra.algebra, f, &d.algebra.params())?);
            let c = tangle_complex(&t, d.epsilon, &alg)?;
            let (pages, infinity) = match page {
                Some(r) if *r < 0 => return Err(CliError::Input(format!("page must be non-negative, got {r}"))),
                Some(r) => (vec![spectral_page(&c, *r)], None),
                None => {
                    let (p, inf) = spectral_sequence(&c);
                    (p, Some(inf))
                }
            };
            Ok((0, match d.format {
                Format::Json => {
                    let ps: Vec<Value> = pages
                        .iter()
                        .map(|p| {
                            let diff: Vec<Value> = p
                                .differential
                                .iter()
                                .map(|(((k0, r0), (k1, r1)), n)| json!({ "from": [r0, k0], "to": [r1, k1], "rank": n }))
                                .collect();
                            json!({ "r": p.r, "table": table_json(&p.dims), "differential": diff })
                        })
                        .collect();
                    let mut v = json!({ "algebra": d.algebra.algebra, "epsilon": d.epsilon, "pages": ps });
                    if let Some(inf) = &infinity {
                        v["e_infinity"] = table_json(inf);
                    }
                    json_line(v)
                }
                Format::Text => {
                    let mut s = header("spectral", &d.algebra, d.epsilon);
                    for p in &pages {
                        s.push_str(&format!("E_{}\n{}", p.r, table_text(&p.dims)));
                    }
                    if let Some(inf) = &infinity {
                        s.push_str(&format!("E_inf\n{}", table_text(inf)));
                    }
                    s
                }
            }))
        }
        Command::Compose(d) => {
            let (t, alg) = (load_diagram(&d.input)?, builtin(&d.algebra.algebra, f, &d.algebra.params())?);
            let composed = compose_tangle(&t, d.epsilon, &alg)?;
            let rep = composition_report(&t, d.epsilon, &alg)?;
            let h = homology_bigraded(&composed.complex);
            let points: Vec<Value> = composed
                .points
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    let side = if p.sign == PointSign::Minus { "left" } else { "right" };
                    json!({ "point": i, "sign": p.sign.symbol().to_string(), "level": p.level, "pos": p.pos, "action": side })
                })
                .collect();
            Ok((0, match d.format {
                Format::Json => json_line(json!({
                    "algebra": d.algebra.algebra,
                    "field": { "char": f.characteristic() },
                    "epsilon": d.epsilon,
                    "gluings": composed.gluings,
                    "homology": table_json(&h),
                    "polynomial": h.poincare().to_string(),
                    "verify_composition": rep.holds(),
                    "agrees_ungraded": rep.holds_ungraded(),
                    "boundary_actions": points,
                })),
                Format::Text => format!(
                    "{}gluings={}\n{}polynomial: {}\nverify_composition: {}\nagrees_ungraded: {}\n",
                    header("compose", &d.algebra, d.epsilon),
                    composed.gluings,
                    table_text(&h),
                    h.poincare(),
                    rep.holds(),
                    rep.holds_ungraded()
                ),
            }))
        }
        Command::Reidemeister { algebra, epsilon, format, seed, moves, nmax, pairs } => {
            let moves = moves
                .split(',')
                .map(|m| Move::parse(m.trim()).ok_or_else(|| CliError::Input(format!("unknown move {m}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if *nmax > 10 {
                return Err(CliError::Input(format!("nmax must be at most 10, got {nmax}")));
            }
            let alg = builtin(&algebra.algebra, f, &algebra.params())?;
            let link = alg.knowledgeable().is_none();
            let cases = reidemeister_suite(*seed, &moves, *nmax, *pairs, link, *epsilon, &alg)?;
            let failed = cases.iter().filter(|c| !c.pass).count();
            let out = match format {
                Format::Json => json_line(json!({
                    "algebra": algebra.algebra,
                    "seed": seed,
                    "nmax": nmax,
                    "cases": cases.iter().map(ReidemeisterCase::to_json).collect::<Vec<_>>(),
                    "failed": failed,
                })),
                Format::Text => {
                    let mut s = header("reidemeister", algebra, *epsilon);
                    s.push_str(&format!("seed={seed} nmax={nmax}\n"));
                    for c in &cases {
                        s.push_str(&format!("{} #{} {}: {} | {}\n", c.mv.name(), c.index, if c.pass { "pass" } else { "FAIL" }, c.before, c.after));
                    }
                    s.push_str(&format!("{} cases, {failed} failed\n", cases.len()));
                    s
                }
            };
            Ok((i32::from(failed > 0), out))
        }
        Command::Oracle(d) => {
            let t = load_diagram(&d.input)?;
            let alg = builtin(&d.algebra.algebra, f, &d.algebra.params())?;
            let bracket = normalized_bracket(&t)?;
            let c = tangle_complex(&t, d.epsilon, &alg)?;
            let ours = homology_bigraded(&c);
            let oracle = khovanov_link_oracle(&t, alg.closed())?;
            let chi = c.graded_euler_characteristic();
            let agree = ours == oracle && chi == bracket;
            Ok((i32::from(!agree), match d.format {
                Format::Json => json_line(json!({
                    "bracket": bracket.to_string(),
                    "euler": chi.to_string(),
                    "homology": table_json(&ours),
                    "oracle": table_json(&oracle),
                    "agree": agree,
                })),
                Format::Text => format!(
                    "{}bracket: {bracket}\neuler: {chi}\npipeline\n{}oracle\n{}agree: {agree}\n",
                    header("oracle", &d.algebra, d.epsilon),
                    table_text(&ours),
                    table_text(&oracle)
                ),
            }))
        }
    }
}

/// Axiom report of a catalog algebra. The Khovanov pair is also checked
/// outside characteristic 2 so the failing Cardy condition can be shown.
fn algebra_check<F: Field>(f: &F, a: &AlgebraArgs, format: Format) -> Result<(i32, String), CliError> {
    let (alg, note) = match builtin(&a.algebra, f, &a.params()) {
        Ok(alg) => (alg, None),
        Err(e @ AlgebraError::IncompatibleCharacteristic { .. }) if a.algebra == "khovanov_pair" => {
            (Algebra::Knowledgeable(khovanov_pair_data(f)), Some(e.to_string()))
        }
        Err(e) => return Err(e.into()),
    };
    let mut rep = alg.validate()?;
    let closed = alg.closed();
    let bn = closed.check_barnatan();
    rep.push_property("barnatan.sphere", bn.sphere);
    rep.push_property("barnatan.torus", bn.torus);
    rep.push_property("barnatan.four_tubes", bn.four_tubes);
    if let Some(k) = alg.knowledgeable() {
        if let Ok(deg) = k.check_euler_degrees() {
            rep.extend_prefixed("euler", deg);
        }
        rep.push_property("strongly_separable", k.a.is_strongly_separable()?);
    }
    let passed = rep.passed() && note.is_none();
    let out = match format {
        Format::Json => json_line(json!({
            "algebra": a.algebra,
            "field": { "char": f.characteristic() },
            "passed": passed,
            "note": note,
            "checks": rep.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "witness": c.witness })).collect::<Vec<_>>(),
            "properties": rep.properties.iter().map(|(n, v)| json!({ "name": n, "value": v })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s = format!("# algebra-check algebra={} char={}\n", a.algebra, f.characteristic());
            if let Some(n) = &note {
                s.push_str(&format!("note: {n}\n"));
            }
            s.push_str(&rep.to_string());
            s.push_str(if passed { "result: pass\n" } else { "result: FAIL\n" });
            s
        }
    };
    Ok((i32::from(!passed), out))
}

#[cfg(test)]
mod tests;
