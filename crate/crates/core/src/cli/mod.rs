//! Command-line front end. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code: 0 on success, 1 when a
//! verification fails and 2 on invalid input.

pub mod config;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use crate::degree::{divisor_at, DegreeFunction};
use crate::error::{Error, Result};
use crate::lattice::{
    canonical, euler_characteristic, intersect, negative_curves, PointConfig, COLLINEAR_TRIPLES,
    SPECIAL_PAIRS,
};
use crate::oracle::forms::{i_generators, j_generators};
use crate::oracle::{
    betti_table, first_divergent_prime, quotient_hilbert_function, FieldSpec, GradedBettiTable,
};
use crate::reduce::{zariski_reduce, ReductionTrace};
use crate::series::{
    closed_form, format_numerator, i_phi_generators, series_generic_for, series_geometric,
    series_monomial, series_monomial_by_counting, HilbertSeries,
};
use config::{parse_divisor, parse_phi, Ideal, Method, Output, RunConfig, Target};
use verify::{CheckRow, VerifyOptions, CSV_HEADER};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "FATPOINT_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "fatpoint",
    version,
    about = "Hilbert series of ideals of powers of linear forms"
)]
pub struct Cli {
    /// Shorthand for `--output json`.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, value_enum, global = true, default_value_t = Output::Text)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hilbert series of R/J, R/I or of generic forms.
    Series(SeriesArgs),
    /// Reduction trace of a divisor class.
    Reduce(TargetArgs),
    /// h^0 of a divisor class.
    H0(TargetArgs),
    /// Graded Betti numbers of R/J and R/I.
    Betti(BettiArgs),
    /// Cross-check every method on a grid of degree functions.
    Verify(VerifyArgs),
    /// The seven points and the negative curves.
    Points,
}

#[derive(Args, Debug, Clone)]
pub struct PhiArgs {
    /// Degree function as `phi1,phi2,phi3`.
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<String>,
    /// Linear degree function `phi(r) = l + k(3 - r)`; needs `--k`.
    #[arg(
        long,
        requires = "k",
        conflicts_with = "phi",
        allow_hyphen_values = true
    )]
    pub l: Option<i64>,
    #[arg(long, requires = "l", allow_hyphen_values = true)]
    pub k: Option<i64>,
}

impl PhiArgs {
    fn resolve(&self) -> Result<Option<DegreeFunction>> {
        match (&self.phi, self.l, self.k) {
            (Some(s), _, _) => parse_phi(s).map(Some),
            (None, Some(l), Some(k)) => DegreeFunction::linear(l, k).map(Some),
            _ => Ok(None),
        }
    }

    fn require(&self) -> Result<DegreeFunction> {
        self.resolve()?
            .ok_or_else(|| Error::InvalidArgument("pass --phi or --l and --k".into()))
    }
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub phi: PhiArgs,
    #[arg(long, value_enum, default_value_t = Ideal::J)]
    pub ideal: Ideal,
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    /// `q` for the rationals or `p=N` for a prime field.
    #[arg(long, default_value = "q")]
    pub field: String,
    #[arg(long)]
    pub max_degree: Option<u32>,
}

#[derive(Args, Debug)]
pub struct TargetArgs {
    #[command(flatten)]
    pub phi: PhiArgs,
    /// Degree `j` of `D_j`; used with `--phi`.
    #[arg(long)]
    pub j: Option<u32>,
    /// Coefficients of `E_0..E_7`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["phi", "l"])]
    pub divisor: Option<String>,
}

impl TargetArgs {
    fn resolve(&self) -> Result<(Target, Option<u32>)> {
        if let Some(d) = &self.divisor {
            return Ok((Target::Divisor(parse_divisor(d)?), None));
        }
        let f = self.phi.require()?;
        let j = self
            .j
            .ok_or_else(|| Error::InvalidArgument("pass --j together with --phi".into()))?;
        Ok((Target::Phi(f), Some(j)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum BettiIdeal {
    #[value(name = "J", alias = "j")]
    J,
    #[value(name = "I", alias = "i")]
    I,
    #[value(name = "both")]
    Both,
}

#[derive(Args, Debug)]
pub struct BettiArgs {
    #[command(flatten)]
    pub phi: PhiArgs,
    #[arg(long, value_enum, default_value_t = BettiIdeal::J)]
    pub ideal: BettiIdeal,
    #[arg(long, default_value = "q")]
    pub field: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Grid {
    Linear,
    AlmostLinear,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Predefined grid; ignored when `--phi` values are given.
    #[arg(long, value_enum, default_value_t = Grid::Linear)]
    pub grid: Grid,
    /// Largest `l` (linear) or `phi(3)` (almost linear).
    #[arg(long, default_value_t = 3)]
    pub max_l: u32,
    #[arg(long, default_value_t = 3)]
    pub max_k: u32,
    /// Explicit degree functions, repeatable.
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Vec<String>,
    #[arg(long, default_value = "q")]
    pub field: String,
    /// Skip the rank and fatpoint oracles.
    #[arg(long)]
    pub no_oracle: bool,
    /// Self-test: perturb the closed forms so that verification fails.
    #[arg(long)]
    pub corrupt: bool,
    /// Refuse to run when the estimated work exceeds this many matrix cells.
    #[arg(long, default_value_t = 2_000_000_000)]
    pub budget: u64,
    /// Write discrepancies as CSV to this file.
    #[arg(long)]
    pub csv: Option<std::path::PathBuf>,
    /// Also report the smallest prime below the characteristic bound at
    /// which the Hilbert function of `R/J_phi` changes.
    #[arg(long)]
    pub char_scan: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let output = if cli.json { Output::Json } else { cli.output };
    configure_threads();
    let result = dispatch(&cli.command, output, out, err);
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

/// Sizes the global worker pool from the environment. Only the first call in
/// a process has an effect.
fn configure_threads() {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok());
    if let Some(n) = threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn dispatch(
    cmd: &Command,
    output: Output,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    match cmd {
        Command::Series(a) => cmd_series(a, output, out, err),
        Command::Reduce(a) => cmd_reduce(a, output, out),
        Command::H0(a) => cmd_h0(a, output, out),
        Command::Betti(a) => cmd_betti(a, output, out, err),
        Command::Verify(a) => cmd_verify(a, output, out, err),
        Command::Points => cmd_points(output, out),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("output failed: {e}"))
}

fn emit_json(out: &mut dyn Write, v: &serde_json::Value) -> Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    )
    .map_err(io)
}

fn warn(err: &mut dyn Write, msg: Option<String>) {
    if let Some(m) = msg {
        let _ = writeln!(err, "warning: {m}");
    }
}

/// Computes the series a config asks for.
pub fn compute_series(c: &RunConfig, err: &mut dyn Write) -> Result<HilbertSeries> {
    if c.field != FieldSpec::Rationals && c.method != Method::Oracle {
        warn(
            err,
            Some(format!(
                "--field {} only affects the oracle method",
                c.field
            )),
        );
    }
    match (c.ideal, c.method) {
        (Ideal::J, Method::Geometry) => series_geometric(&c.phi, c.max_degree),
        (Ideal::J, Method::Closed) => closed_form(&c.phi),
        (Ideal::I, Method::Taylor) => Ok(series_monomial(&i_phi_generators(&c.phi))),
        (Ideal::I, Method::Counting) => {
            series_monomial_by_counting(&i_phi_generators(&c.phi), c.max_degree)
        }
        (Ideal::Generic, Method::Generic) => series_generic_for(&c.phi),
        (ideal, Method::Oracle) => {
            warn(err, c.field.hypothesis_warning(&c.phi));
            let gens = match ideal {
                Ideal::J => j_generators(&c.phi, c.field),
                _ => i_generators(&c.phi),
            };
            let hf = quotient_hilbert_function(&gens, c.field, c.max_degree)?;
            let finite = c.max_degree.is_none() || hf.len() <= c.max_degree.unwrap_or(0) as usize;
            let mut s = HilbertSeries::from_poly(hf);
            if !finite {
                s.is_prefix = true;
                s.numerator = None;
            }
            Ok(s)
        }
        (ideal, method) => Err(Error::InvalidArgument(format!(
            "method `{method}` does not apply to ideal {ideal}"
        ))),
    }
}

/// The JSON object printed by `series --json`.
pub fn series_json(c: &RunConfig, s: &HilbertSeries) -> serde_json::Value {
    json!({
        "phi": c.phi.phi,
        "classification": c.phi.kind(),
        "series": s.poly,
        "numerator": s.numerator,
        "method": c.method,
    })
}

fn cmd_series(
    a: &SeriesArgs,
    output: Output,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let field: FieldSpec = a.field.parse()?;
    let c = RunConfig::new(
        a.phi.require()?,
        a.ideal,
        a.method,
        field,
        a.max_degree,
        output,
    )?;
    let s = compute_series(&c, err)?;
    match output {
        Output::Json => emit_json(out, &series_json(&c, &s))?,
        Output::Csv => {
            writeln!(out, "j,coefficient").map_err(io)?;
            for (j, v) in s.poly.iter().enumerate() {
                writeln!(out, "{j},{v}").map_err(io)?;
            }
        }
        Output::Text => {
            let name = match c.ideal {
                Ideal::J => "R/J",
                Ideal::I => "R/I",
                Ideal::Generic => "R/G",
            };
            writeln!(out, "phi = {} ({})", c.phi, c.phi.kind()).map_err(io)?;
            writeln!(out, "P({name}, t) = {s}").map_err(io)?;
            if let Some(n) = &s.numerator {
                writeln!(out, "          = {}", format_numerator(n)).map_err(io)?;
            }
            writeln!(out, "method: {}, field: {}", c.method, c.field).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn target_divisor(a: &TargetArgs) -> Result<crate::lattice::DivisorClass> {
    Ok(match a.resolve()? {
        (Target::Divisor(d), _) => d,
        (Target::Phi(f), Some(j)) => divisor_at(&f, j),
        (Target::Phi(_), None) => unreachable!("resolve pairs phi with j"),
    })
}

fn trace_json(tr: &ReductionTrace) -> serde_json::Value {
    let mut v = serde_json::to_value(tr).expect("traces serialize");
    v["chi"] = json!(tr.final_chi());
    v
}

fn cmd_reduce(a: &TargetArgs, output: Output, out: &mut dyn Write) -> Result<i32> {
    let d = target_divisor(a)?;
    let tr = zariski_reduce(&d);
    match output {
        Output::Json => emit_json(out, &trace_json(&tr))?,
        Output::Csv => {
            writeln!(out, "step,curve,copies,pairing_before,class_after").map_err(io)?;
            for (i, s) in tr.steps.iter().enumerate() {
                let coeffs: Vec<String> = s.class_after.0.iter().map(i64::to_string).collect();
                writeln!(
                    out,
                    "{},{},{},{},\"{}\"",
                    i + 1,
                    s.curve.label,
                    s.copies,
                    s.pairing_before,
                    coeffs.join(",")
                )
                .map_err(io)?;
            }
        }
        Output::Text => {
            writeln!(out, "D = {d}").map_err(io)?;
            writeln!(out, "chi(D) = {}", euler_characteristic(&d)).map_err(io)?;
            for (i, s) in tr.steps.iter().enumerate() {
                writeln!(
                    out,
                    "{:>3}. D.{} = {:<3} subtract {} x {:<6} -> {}",
                    i + 1,
                    s.curve.label,
                    s.pairing_before,
                    s.copies,
                    s.curve.label,
                    s.class_after
                )
                .map_err(io)?;
            }
            let g = tr.final_class();
            if tr.is_effective() {
                writeln!(out, "nef part G = {g}  {:?}", g.0).map_err(io)?;
                writeln!(
                    out,
                    "G^2 = {}, G.K = {}, chi(G) = {}",
                    g.square(),
                    intersect(&g, &canonical()),
                    euler_characteristic(&g)
                )
                .map_err(io)?;
            } else {
                writeln!(out, "not effective: E0 coefficient of {g} is negative").map_err(io)?;
            }
            writeln!(out, "h0 = {}", tr.h0).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_h0(a: &TargetArgs, output: Output, out: &mut dyn Write) -> Result<i32> {
    let d = target_divisor(a)?;
    let h = zariski_reduce(&d).h0;
    match output {
        Output::Json => emit_json(out, &json!({"divisor": d, "h0": h}))?,
        Output::Csv => writeln!(out, "h0\n{h}").map_err(io)?,
        Output::Text => writeln!(out, "{h}").map_err(io)?,
    }
    Ok(EXIT_OK)
}

fn write_table(out: &mut dyn Write, title: &str, t: &GradedBettiTable) -> Result<()> {
    writeln!(out, "{title}").map_err(io)?;
    write!(out, "{t}").map_err(io)?;
    for s in 0..3 {
        let step: Vec<String> = t
            .ideal_step(s)
            .iter()
            .map(|(d, b)| match b {
                1 => format!("R(-{d})"),
                _ => format!("R^{b}(-{d})"),
            })
            .collect();
        if !step.is_empty() {
            writeln!(out, "  step {s}: {}", step.join(" + ")).map_err(io)?;
        }
    }
    Ok(())
}

fn cmd_betti(
    a: &BettiArgs,
    output: Output,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let f = a.phi.require()?;
    let field: FieldSpec = a.field.parse()?;
    warn(err, field.hypothesis_warning(&f));
    let want_j = a.ideal != BettiIdeal::I;
    let want_i = a.ideal != BettiIdeal::J;
    let tj = want_j
        .then(|| betti_table(&j_generators(&f, field), field))
        .transpose()?;
    let ti = want_i
        .then(|| betti_table(&i_generators(&f), field))
        .transpose()?;
    match (tj, ti) {
        (Some(tj), Some(ti)) => {
            let series_equal = tj.euler_numerator() == ti.euler_numerator();
            let betti_differ = tj != ti;
            let flag = series_equal && betti_differ;
            match output {
                Output::Json => emit_json(
                    out,
                    &json!({
                        "phi": f.phi,
                        "J": tj,
                        "I": ti,
                        "series_equal": series_equal,
                        "betti_differ": betti_differ,
                        "series_equal_betti_differ": flag,
                    }),
                )?,
                Output::Csv => {
                    writeln!(out, "ideal,i,j,beta").map_err(io)?;
                    for (name, t) in [("J", &tj), ("I", &ti)] {
                        for ((i, j), b) in &t.entries {
                            writeln!(out, "{name},{i},{j},{b}").map_err(io)?;
                        }
                    }
                }
                Output::Text => {
                    write_table(out, &format!("R/J for phi = {f}"), &tj)?;
                    writeln!(out).map_err(io)?;
                    write_table(out, &format!("R/I for phi = {f}"), &ti)?;
                    writeln!(out).map_err(io)?;
                    writeln!(
                        out,
                        "series {}, Betti {}",
                        if series_equal { "equal" } else { "differ" },
                        if betti_differ { "differ" } else { "equal" }
                    )
                    .map_err(io)?;
                }
            }
        }
        (Some(t), None) | (None, Some(t)) => {
            let name = if want_j { "R/J" } else { "R/I" };
            match output {
                Output::Json => {
                    emit_json(out, &serde_json::to_value(&t).expect("tables serialize"))?
                }
                Output::Csv => {
                    writeln!(out, "i,j,beta").map_err(io)?;
                    for ((i, j), b) in &t.entries {
                        writeln!(out, "{i},{j},{b}").map_err(io)?;
                    }
                }
                Output::Text => {
                    write_table(out, &format!("{name} for phi = {f}, field {field}"), &t)?
                }
            }
        }
        (None, None) => unreachable!("at least one ideal is selected"),
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    a: &VerifyArgs,
    output: Output,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let instances: Vec<DegreeFunction> = if a.phi.is_empty() {
        match a.grid {
            Grid::Linear => verify::linear_grid(a.max_l, a.max_k),
            Grid::AlmostLinear => verify::almost_linear_grid(a.max_l, a.max_k),
        }
    } else {
        a.phi.iter().map(|s| parse_phi(s)).collect::<Result<_>>()?
    };
    let field: FieldSpec = a.field.parse()?;
    let opts = VerifyOptions {
        field,
        oracle: !a.no_oracle,
        corrupt: a.corrupt,
    };
    let estimate = verify::cost_estimate(&instances, &opts);
    writeln!(
        err,
        "estimated work: {estimate} matrix cells over {} instances",
        instances.len()
    )
    .map_err(io)?;
    if estimate > a.budget {
        writeln!(
            err,
            "error: estimate exceeds the budget of {} cells",
            a.budget
        )
        .map_err(io)?;
        return Ok(EXIT_INVALID);
    }
    for f in &instances {
        warn(err, field.hypothesis_warning(f));
    }
    let rows = verify::verify_grid(&instances, &opts)?;
    let failures: Vec<&CheckRow> = rows.iter().filter(|r| !r.pass).collect();
    let scan: Vec<(DegreeFunction, u64, Option<u64>)> = if a.char_scan {
        instances
            .par_iter()
            .map(|f| {
                let bound = u64::from(f.total().saturating_sub(2));
                Ok((*f, bound, first_divergent_prime(f, bound)?))
            })
            .collect::<Result<_>>()?
    } else {
        Vec::new()
    };
    if let Some(path) = &a.csv {
        let mut body = String::from(CSV_HEADER);
        body.push('\n');
        for r in &failures {
            body.push_str(&r.csv());
            body.push('\n');
        }
        std::fs::write(path, body).map_err(io)?;
    }
    match output {
        Output::Json => emit_json(
            out,
            &json!({
                "instances": instances.iter().map(|f| f.phi).collect::<Vec<_>>(),
                "checks": rows.len(),
                "failures": failures,
                "pass": failures.is_empty(),
                "char_scan": scan.iter().map(|(f, bound, p)| json!({
                    "phi": f.phi,
                    "bound": bound,
                    "first_divergent_prime": p,
                })).collect::<Vec<_>>(),
            }),
        )?,
        Output::Csv => {
            writeln!(out, "{CSV_HEADER}").map_err(io)?;
            for r in &rows {
                writeln!(out, "{}", r.csv()).map_err(io)?;
            }
        }
        Output::Text => {
            for f in &instances {
                let [p1, p2, p3] = f.phi;
                let mine: Vec<&CheckRow> = rows
                    .iter()
                    .filter(|r| (r.phi1, r.phi2, r.phi3) == (p1, p2, p3))
                    .collect();
                let bad = mine.iter().filter(|r| !r.pass).count();
                writeln!(
                    out,
                    "{} {f}: {} checks, {bad} failed",
                    if bad == 0 { "ok  " } else { "FAIL" },
                    mine.len()
                )
                .map_err(io)?;
            }
            for r in &failures {
                writeln!(out, "  mismatch: {}", r.csv()).map_err(io)?;
            }
            writeln!(out, "{} checks, {} failures", rows.len(), failures.len()).map_err(io)?;
            for (f, bound, p) in &scan {
                match p {
                    Some(p) => writeln!(out, "char scan {f}: first divergent prime {p}"),
                    None => writeln!(out, "char scan {f}: no divergence for p <= {bound}"),
                }
                .map_err(io)?;
            }
        }
    }
    Ok(if failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAIL
    })
}

fn cmd_points(output: Output, out: &mut dyn Write) -> Result<i32> {
    let pc = PointConfig::standard();
    let curves = negative_curves();
    match output {
        Output::Json => emit_json(
            out,
            &json!({
                "points": pc.points,
                "collinear_triples": COLLINEAR_TRIPLES,
                "special_pairs": SPECIAL_PAIRS,
                "negative_curves": curves,
            }),
        )?,
        Output::Csv => {
            writeln!(out, "point,x,y,z").map_err(io)?;
            for (i, [x, y, z]) in pc.points.iter().enumerate() {
                writeln!(out, "{},{x},{y},{z}", i + 1).map_err(io)?;
            }
        }
        Output::Text => {
            for (i, [x, y, z]) in pc.points.iter().enumerate() {
                writeln!(out, "p{} = ({x}:{y}:{z})", i + 1).map_err(io)?;
            }
            let triples: Vec<String> = pc
                .collinear_triples()
                .iter()
                .map(|t| format!("{{{},{},{}}}", t[0], t[1], t[2]))
                .collect();
            writeln!(out, "collinear triples: {}", triples.join(" ")).map_err(io)?;
            writeln!(out, "negative curves:").map_err(io)?;
            for c in curves {
                writeln!(
                    out,
                    "  {:<6} {:<24} C^2 = {}",
                    c.label,
                    c.class.to_string(),
                    c.self_intersection
                )
                .map_err(io)?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("fatpoint").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn series_text() {
        let (code, out, _) = run_str(&["series", "--l", "3", "--k", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("19t^6 + 18t^7 + 12t^8 + 6t^9"), "{out}");
    }

    #[test]
    fn invalid_combination() {
        let (code, _, err) = run_str(&[
            "series", "--phi", "5,3,1", "--ideal", "I", "--method", "closed",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("does not apply"), "{err}");
        let (code, _, _) = run_str(&["series", "--phi", "5,3"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_str(&["bogus"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn points_listing() {
        let (code, out, _) = run_str(&["points"]);
        assert_eq!(code, 0);
        assert!(out.contains("p7 = (1:1:1)"));
        assert!(out.contains("{1,6,7}"));
    }
}
