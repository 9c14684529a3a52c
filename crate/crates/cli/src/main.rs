//! `bgw`: one deterministic binary over the whole pipeline — finite
//! fields, omega-circulant weighing matrices, the constant-weight codes
//! they generate, Johnson-bound certificates, strength-2 arrays, and
//! mutually suitable Latin squares.
//!
//! Every command prints a human-readable report to stdout. `--format`
//! appends the constructed object to the report (or `--out` writes it to a
//! file instead): canonical single-line JSON, a space-separated text grid,
//! or `+`/`-`/`0` sign notation for group order 2. JSON is the only
//! round-trip format; `verify --in FILE` re-runs the construction-time
//! checks on any exported object.
//!
//! Exit codes: 0 = success/verified, 1 = verification failed (witness on
//! stdout), 2 = invalid input or parameters (message on stderr). Output is
//! byte-identical for identical arguments, independent of `--threads`.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bgw_core::cwcode::{self, ClassicalBgw, ConstructionRequest};
use bgw_core::io::{self, ExportObject};
use bgw_core::{arrays, bgw, gf};
use bgw_core::{BoundReport, Code, CodeParams, GMatrix, LatinSquare, SymbolArray};

#[derive(Parser)]
#[command(
    name = "bgw",
    version,
    about = "Generalized weighing matrices, optimal constant-weight codes, and their arrays"
)]
struct Cli {
    /// Size of the worker pool for verification scans. Results and output
    /// bytes never depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build GF(p^s) and print its table summary.
    Field {
        /// Characteristic (a prime).
        #[arg(long)]
        p: u64,
        /// Extension degree.
        #[arg(long)]
        s: u32,
    },

    /// Build the omega-circulant BGW for (q, m) and certify its balance.
    Bgw {
        /// Subfield order: an odd prime power.
        #[arg(long)]
        q: u64,
        /// Trace extension exponent (the field is GF(q^(m+1))).
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        out: OutOpts,
    },

    /// Build the constant-weight code for (q, m, g), scan its exact
    /// parameters, and certify optimality against the Johnson bounds.
    Code {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        /// Subgroup order; must divide q - 1.
        #[arg(long)]
        g: u32,
        /// Emit the derived (punctured) code instead of the full one.
        #[arg(long)]
        derived: bool,
        #[command(flatten)]
        out: OutOpts,
    },

    /// Evaluate the restricted and unrestricted Johnson bounds at
    /// (n, d, w, a), in exact integer arithmetic.
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        w: u64,
        #[arg(long)]
        a: u64,
    },

    /// Append the zero word to the full code and check the result as an
    /// orthogonal or covering array of strength t.
    Array {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        g: u32,
        /// Which property to verify.
        #[arg(long, value_enum)]
        check: CheckKind,
        /// Strength.
        #[arg(long, default_value_t = 2)]
        t: u32,
        /// Index: rows per t-tuple (oa: exactly, ca: at least). Defaults to
        /// N / a^t for oa and 1 for ca.
        #[arg(long)]
        lambda: Option<u64>,
        #[command(flatten)]
        out: OutOpts,
    },

    /// Cut the complete system of Latin squares out of the (q, 1, q-1)
    /// array and verify mutual suitability.
    Msls {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        out: OutOpts,
    },

    /// Re-verify an exported JSON object.
    Verify {
        /// Path to a JSON export (or a JSON array of Latin squares).
        #[arg(long = "in")]
        input: PathBuf,
        /// Expected kind; mismatches are rejected before verification.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        /// Array check to run when the object is an array.
        #[arg(long, value_enum, default_value_t = CheckKind::Ca)]
        check: CheckKind,
        #[arg(long, default_value_t = 2)]
        t: u32,
        #[arg(long)]
        lambda: Option<u64>,
    },

    /// Tabulate scanned parameters and optimality for every valid
    /// (q, m, g) with q an odd prime power up to qmax and m up to mmax.
    Sweep {
        #[arg(long)]
        qmax: u64,
        #[arg(long)]
        mmax: u32,
        /// Largest matrix order v to include; keeps the scans fast.
        #[arg(long, default_value_t = 1000)]
        vmax: u64,
    },
}

#[derive(Args)]
struct OutOpts {
    /// Append the constructed object to the report in this format.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the object to a file instead (default format: json).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy)]
enum Format {
    /// Canonical single-line JSON; the round-trip format.
    Json,
    /// Space-separated exponent grid, one row per line.
    Text,
    /// +/-/0 sign grid; group order 2 only.
    Pretty,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum CheckKind {
    /// Every t-tuple of symbols appears in exactly lambda rows.
    Oa,
    /// Every t-tuple of symbols appears in at least lambda rows.
    Ca,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum KindArg {
    Gmatrix,
    Code,
    Array,
    Latin,
    Msls,
}

impl KindArg {
    fn as_str(self) -> &'static str {
        match self {
            KindArg::Gmatrix => "gmatrix",
            KindArg::Code => "code",
            KindArg::Array => "array",
            KindArg::Latin => "latin",
            KindArg::Msls => "msls",
        }
    }
}

/// The two observable failure classes of the binary; everything else is
/// success.
enum CliError {
    /// Exit 2: the request itself is malformed.
    Invalid(String),
    /// Exit 1: a verification ran and rejected, witness included.
    Failed(String),
}

fn invalid<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Invalid(e.to_string())
}

fn failed<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Failed(e.to_string())
}

const M1_NOTE: &str =
    "note: m = 1; certificates rely on the exhaustive scans only, not on the m > 1 parameter argument";

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        // Ignore AlreadyInitialized: only possible if set up twice, and the
        // pool size never changes results anyway.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            println!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::Field { p, s } => cmd_field(p, s),
        Cmd::Bgw { q, m, out } => cmd_bgw(q, m, &out),
        Cmd::Code {
            q,
            m,
            g,
            derived,
            out,
        } => cmd_code(q, m, g, derived, &out),
        Cmd::Bounds { n, d, w, a } => cmd_bounds(n, d, w, a),
        Cmd::Array {
            q,
            m,
            g,
            check,
            t,
            lambda,
            out,
        } => cmd_array(q, m, g, check, t, lambda, &out),
        Cmd::Msls { q, out } => cmd_msls(q, &out),
        Cmd::Verify {
            input,
            kind,
            check,
            t,
            lambda,
        } => cmd_verify(&input, kind, check, t, lambda),
        Cmd::Sweep { qmax, mmax, vmax } => cmd_sweep(qmax, mmax, vmax),
    }
}

fn cmd_field(p: u64, s: u32) -> Result<(), CliError> {
    let ctx = gf::build_field(p, s).map_err(invalid)?;
    println!(
        "GF({p}^{s}): order {}, characteristic {}, degree {}",
        ctx.order(),
        ctx.characteristic(),
        ctx.degree()
    );
    println!("modulus: {}", ctx.modulus());
    let beta = ctx.element_from_index(ctx.beta_index());
    println!(
        "beta: index {}, coords {:?}, multiplicative order {}",
        ctx.beta_index(),
        ctx.coords(ctx.beta_index()),
        ctx.multiplicative_order(beta)
            .expect("beta is a unit of the field")
    );
    Ok(())
}

fn cmd_bgw(q: u64, m: u32, out: &OutOpts) -> Result<(), CliError> {
    let row = bgw::trace_row(q, m).map_err(invalid)?;
    let w = bgw::omega_circulant(&row, (q - 1) as u32, 1).map_err(invalid)?;
    let cert = bgw::verify_bgw(&w).map_err(failed)?;
    println!("q = {q}, m = {m}: certificate {cert}");
    println!(
        "omega^1-circulant of order {}, row weight {}, balance {} per group element",
        cert.v,
        cert.k,
        cert.lambda / cert.u as u64
    );
    if m == 1 {
        println!("{M1_NOTE}");
    }
    emit_object(out, |f| render_matrix(&w, f))
}

fn cmd_code(q: u64, m: u32, g: u32, derived: bool, out: &OutOpts) -> Result<(), CliError> {
    let req = ConstructionRequest { q, m, g };
    let (pred_derived, pred_full) = cwcode::predicted_params(req).map_err(invalid)?;
    let pipeline = ClassicalBgw::build(q, m).map_err(invalid)?;
    let code = if derived {
        pipeline.derived_code(g)
    } else {
        pipeline.full_code(g)
    }
    .map_err(invalid)?;
    let claimed = if derived { pred_derived } else { pred_full };

    let analysis = cwcode::analyze(&code).map_err(failed)?;
    let inner = cwcode::derived_inner_bound(claimed);
    let report = cwcode::check_optimal(&analysis, claimed, inner).map_err(failed)?;

    println!(
        "request: q = {q}, m = {m}, g = {g} ({})",
        if derived { "derived" } else { "full" }
    );
    println!("params: {}", analysis.params);
    let profile = analysis
        .distances
        .counts()
        .iter()
        .map(|(d, c)| format!("{d} x{c}"))
        .collect::<Vec<_>>()
        .join(", ");
    println!(
        "distances: {profile}{}",
        if analysis.distances.is_equidistant() {
            " (equidistant)"
        } else {
            ""
        }
    );
    print_bounds(&report, inner);
    println!("optimal: {}", report.optimal);
    if m == 1 {
        println!("{M1_NOTE}");
    }
    emit_object(out, |f| render_code(&code, f))
}

fn print_bounds(report: &BoundReport, inner: Option<u64>) {
    match report.restricted {
        Some(b) => println!("restricted bound: {b} (denominator {})", report.denominator),
        None => println!(
            "restricted bound: n/a (denominator {})",
            report.denominator
        ),
    }
    match (inner, report.unrestricted) {
        (Some(i), Some(u)) => println!("unrestricted bound: {u} (inner {i})"),
        _ => println!("unrestricted bound: n/a"),
    }
}

fn cmd_bounds(n: u64, d: u64, w: u64, a: u64) -> Result<(), CliError> {
    let denom = cwcode::restricted_denominator(n, d, w, a);
    let restricted = cwcode::restricted_johnson(n, d, w, a).map_err(invalid)?;
    println!("n = {n}, d = {d}, w = {w}, a = {a}");
    match restricted {
        Some(b) => println!("restricted bound: {b} (denominator {denom})"),
        None => println!("restricted bound: n/a (denominator {denom})"),
    }
    let p = CodeParams { n, m: 0, d, w, a };
    match cwcode::derived_inner_bound(p) {
        Some(i) => {
            let u = cwcode::unrestricted_johnson(n, d, w, a, i).map_err(invalid)?;
            println!("inner bound at (n-1, d, w-1, a): {i}");
            println!("unrestricted bound: {u}");
        }
        None => println!("unrestricted bound: n/a (no applicable inner bound)"),
    }
    Ok(())
}

fn default_lambda(check: CheckKind, n_rows: u64, a: u64, t: u32) -> Result<u64, CliError> {
    match check {
        CheckKind::Ca => Ok(1),
        CheckKind::Oa => {
            let cells = a.pow(t);
            if cells == 0 || n_rows % cells != 0 {
                return Err(CliError::Invalid(format!(
                    "no integral index: {n_rows} rows over {a}^{t} tuples; give --lambda"
                )));
            }
            Ok(n_rows / cells)
        }
    }
}

fn check_array(
    arr: &SymbolArray,
    check: CheckKind,
    t: u32,
    lambda: Option<u64>,
) -> Result<(), CliError> {
    let lam = match lambda {
        Some(l) => l,
        None => default_lambda(check, arr.nrows() as u64, arr.a() as u64, t)?,
    };
    let cert = match check {
        CheckKind::Oa => arrays::verify_oa(arr, t, lam),
        CheckKind::Ca => arrays::verify_ca(arr, t, lam),
    }
    .map_err(failed)?;
    println!("verified: {cert}");
    Ok(())
}

fn cmd_array(
    q: u64,
    m: u32,
    g: u32,
    check: CheckKind,
    t: u32,
    lambda: Option<u64>,
    out: &OutOpts,
) -> Result<(), CliError> {
    let req = ConstructionRequest { q, m, g };
    req.validate().map_err(invalid)?;
    let pipeline = ClassicalBgw::build(q, m).map_err(invalid)?;
    let code = pipeline.full_code(g).map_err(invalid)?;
    let arr = arrays::append_zero_word(&code).map_err(invalid)?;
    println!(
        "array: {} rows x {} columns over alphabet {}",
        arr.nrows(),
        arr.ncols(),
        arr.a()
    );
    check_array(&arr, check, t, lambda)?;
    if m == 1 {
        println!("{M1_NOTE}");
    }
    emit_object(out, |f| render_array(&arr, f))
}

fn msls_verdict(report: &arrays::MslsReport) -> Result<(), CliError> {
    println!("order: {}, squares: {}", report.order, report.count);
    println!("all pairs suitable: {}", report.all_suitable);
    println!("complete system: {}", report.complete);
    match report.first_latin_violation {
        None => println!("strict latin (rows and columns): true"),
        Some((s, which, idx)) => println!(
            "strict latin (rows and columns): false; first violation: square {s}, {which} {idx}"
        ),
    }
    if report.all_suitable && report.complete {
        Ok(())
    } else {
        Err(CliError::Failed(match report.first_unsuitable {
            Some((i, j)) => format!("squares {i} and {j} are not suitable"),
            None => format!(
                "system incomplete: {} squares for order {}",
                report.count, report.order
            ),
        }))
    }
}

fn cmd_msls(q: u64, out: &OutOpts) -> Result<(), CliError> {
    if q < 3 {
        return Err(CliError::Invalid(format!(
            "q = {q}: need an odd prime power of at least 3"
        )));
    }
    let g = (q - 1) as u32;
    ConstructionRequest { q, m: 1, g }.validate().map_err(invalid)?;
    let pipeline = ClassicalBgw::build(q, 1).map_err(invalid)?;
    let code = pipeline.full_code(g).map_err(invalid)?;
    let arr = arrays::append_zero_word(&code).map_err(invalid)?;
    let squares = arrays::extract_msls(&arr).map_err(failed)?;
    let report = arrays::verify_msls(&squares).map_err(failed)?;
    println!(
        "extracted {} squares of order {} from a {} x {} array",
        report.count,
        report.order,
        arr.nrows(),
        arr.ncols()
    );
    emit_object(out, |f| render_squares(&squares, g, f))?;
    msls_verdict(&report)
}

fn cmd_verify(
    input: &std::path::Path,
    kind: Option<KindArg>,
    check: CheckKind,
    t: u32,
    lambda: Option<u64>,
) -> Result<(), CliError> {
    let raw = std::fs::read_to_string(input)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", input.display())))?;

    // A top-level JSON array is a collection of Latin squares; everything
    // else is a single kind-tagged object.
    if raw.trim_start().starts_with('[') {
        if let Some(k) = kind {
            if k != KindArg::Msls {
                return Err(CliError::Invalid(format!(
                    "expected kind \"{}\", found a square collection",
                    k.as_str()
                )));
            }
        }
        let squares = io::msls_from_json(&raw).map_err(invalid)?;
        let report = arrays::verify_msls(&squares).map_err(failed)?;
        return msls_verdict(&report);
    }

    let obj = io::from_json(&raw).map_err(invalid)?;
    if let Some(k) = kind {
        if k == KindArg::Msls || k.as_str() != obj.kind() {
            return Err(CliError::Invalid(format!(
                "expected kind \"{}\", found \"{}\"",
                k.as_str(),
                obj.kind()
            )));
        }
    }
    match &obj {
        ExportObject::Gmatrix { .. } => {
            let w = obj.into_gmatrix().map_err(invalid)?;
            let cert = bgw::verify_bgw(&w).map_err(failed)?;
            println!("verified: {cert}");
        }
        ExportObject::Code { .. } => {
            let code = obj.into_code().map_err(invalid)?;
            let analysis = cwcode::analyze(&code).map_err(failed)?;
            let inner = cwcode::derived_inner_bound(analysis.params);
            let report =
                cwcode::check_optimal(&analysis, analysis.params, inner).map_err(failed)?;
            println!("verified: constant-weight code, params {}", analysis.params);
            print_bounds(&report, inner);
            println!("optimal: {}", report.optimal);
        }
        ExportObject::Array { .. } => {
            let arr = obj.into_array().map_err(invalid)?;
            println!(
                "array: {} rows x {} columns over alphabet {}",
                arr.nrows(),
                arr.ncols(),
                arr.a()
            );
            check_array(&arr, check, t, lambda)?;
        }
        ExportObject::Latin { .. } => {
            let sq = obj.into_latin().map_err(invalid)?;
            match sq.violation() {
                None => println!("verified: latin square of order {}", sq.order()),
                Some((which, idx)) => {
                    return Err(CliError::Failed(format!(
                        "{which} {idx} of the square is not a permutation"
                    )))
                }
            }
        }
    }
    Ok(())
}

/// Bounds for already-scanned parameters: restricted directly, unrestricted
/// through the shortened-parameter inner bound; optimal iff M matches the
/// best applicable one.
fn bounds_for(p: CodeParams) -> Result<(BoundReport, Option<u64>), CliError> {
    let denominator = cwcode::restricted_denominator(p.n, p.d, p.w, p.a);
    let restricted = cwcode::restricted_johnson(p.n, p.d, p.w, p.a).map_err(invalid)?;
    let inner = cwcode::derived_inner_bound(p);
    let unrestricted = match inner {
        Some(i) => Some(cwcode::unrestricted_johnson(p.n, p.d, p.w, p.a, i).map_err(invalid)?),
        None => None,
    };
    let best = [restricted, unrestricted].into_iter().flatten().min();
    Ok((
        BoundReport {
            restricted,
            unrestricted,
            denominator,
            achieved_m: p.m,
            optimal: best == Some(p.m),
        },
        inner,
    ))
}

fn compact(p: CodeParams) -> String {
    format!("({},{},{},{};{})", p.n, p.m, p.d, p.w, p.a)
}

fn fmt_vals(vals: &[u64]) -> String {
    let inner = vals
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",");
    format!("{{{inner}}}")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// One sweep cell for a full code. Full codes are single shift-and-scale
/// orbits, so the first-word distances are the whole value set and the scan
/// is O(M·n) rather than O(M²·n).
fn sweep_full_cell(code: &Code, predicted: CodeParams) -> Result<(String, bool), CliError> {
    let w0 = code
        .words()
        .first()
        .ok_or_else(|| CliError::Failed("empty full code".into()))?;
    let w = w0.weight();
    if code.words().iter().any(|x| x.weight() != w) {
        return Ok(("full=MISMATCH(mixed weights)".into(), false));
    }
    let dist = cwcode::distances_from_first(code).map_err(failed)?;
    let scanned = CodeParams {
        n: code.n() as u64,
        m: code.len() as u64,
        d: dist[0],
        w: w as u64,
        a: code.a() as u64,
    };
    if scanned != predicted {
        return Ok((
            format!(
                "full=MISMATCH(scanned={},predicted={})",
                compact(scanned),
                compact(predicted)
            ),
            false,
        ));
    }
    let (report, _) = bounds_for(scanned)?;
    Ok((
        format!(
            "full={} dist={} opt={}",
            compact(scanned),
            fmt_vals(&dist),
            yes_no(report.optimal)
        ),
        true,
    ))
}

fn sweep_derived_cell(code: &Code, predicted: CodeParams) -> Result<(String, bool), CliError> {
    let analysis = cwcode::analyze(code).map_err(failed)?;
    if analysis.params != predicted {
        return Ok((
            format!(
                "derived=MISMATCH(scanned={},predicted={})",
                compact(analysis.params),
                compact(predicted)
            ),
            false,
        ));
    }
    let (report, _) = bounds_for(analysis.params)?;
    Ok((
        format!(
            "derived={} dist={} opt={}",
            compact(analysis.params),
            fmt_vals(&analysis.distances.values()),
            yes_no(report.optimal)
        ),
        true,
    ))
}

fn cmd_sweep(qmax: u64, mmax: u32, vmax: u64) -> Result<(), CliError> {
    println!("# sweep qmax={qmax} mmax={mmax} vmax={vmax}");
    let mut mismatches = 0u64;
    for q in 3..=qmax {
        let Some((p, _)) = gf::is_prime_power(q) else {
            continue;
        };
        if p == 2 {
            continue;
        }
        for m in 1..=mmax {
            let Ok((v, _, _)) = bgw::classical_params(q, m) else {
                continue;
            };
            if v > vmax {
                continue;
            }
            let pipeline = ClassicalBgw::build(q, m).map_err(invalid)?;
            for g in (1..=q - 1).filter(|g| (q - 1) % g == 0) {
                let req = ConstructionRequest { q, m, g: g as u32 };
                let (pred_derived, pred_full) = cwcode::predicted_params(req).map_err(invalid)?;
                let full = pipeline.full_code(g as u32).map_err(invalid)?;
                let (full_cell, full_ok) = sweep_full_cell(&full, pred_full)?;
                let derived = pipeline.derived_code(g as u32).map_err(invalid)?;
                let (derived_cell, derived_ok) = sweep_derived_cell(&derived, pred_derived)?;
                if !(full_ok && derived_ok) {
                    mismatches += 1;
                }
                let note = if m == 1 { " note=m1" } else { "" };
                println!("q={q} m={m} v={v} g={g} {full_cell} {derived_cell}{note}");
            }
        }
    }
    if mismatches > 0 {
        return Err(CliError::Failed(format!(
            "{mismatches} cells disagree with the predicted parameters"
        )));
    }
    Ok(())
}

fn emit_object<F>(opts: &OutOpts, render: F) -> Result<(), CliError>
where
    F: Fn(Format) -> Result<String, CliError>,
{
    match (&opts.out, opts.format) {
        (None, None) => Ok(()),
        (None, Some(f)) => {
            print!("{}", render(f)?);
            Ok(())
        }
        (Some(path), f) => {
            let body = render(f.unwrap_or(Format::Json))?;
            std::fs::write(path, body)
                .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
        }
    }
}

fn render_matrix(w: &GMatrix, f: Format) -> Result<String, CliError> {
    match f {
        Format::Json => Ok(io::to_json(&ExportObject::from_gmatrix(w))),
        Format::Text => Ok(io::grid_text(io::matrix_rows(w))),
        Format::Pretty => io::grid_signs(io::matrix_rows(w), w.u()).map_err(invalid),
    }
}

fn render_code(c: &Code, f: Format) -> Result<String, CliError> {
    match f {
        Format::Json => Ok(io::to_json(&ExportObject::from_code(c))),
        Format::Text => Ok(io::grid_text(io::code_rows(c))),
        Format::Pretty => io::grid_signs(io::code_rows(c), c.g()).map_err(invalid),
    }
}

fn render_array(a: &SymbolArray, f: Format) -> Result<String, CliError> {
    match f {
        Format::Json => Ok(io::to_json(&ExportObject::from_array(a))),
        Format::Text => Ok(io::grid_text(io::array_rows(a))),
        Format::Pretty => io::grid_signs(io::array_rows(a), a.a() - 1).map_err(invalid),
    }
}

fn render_squares(squares: &[LatinSquare], g: u32, f: Format) -> Result<String, CliError> {
    match f {
        Format::Json => Ok(io::msls_to_json(squares)),
        Format::Text => Ok(squares
            .iter()
            .map(|s| io::grid_text(io::latin_rows(s)))
            .collect::<Vec<_>>()
            .join("\n")),
        Format::Pretty => {
            let mut parts = Vec::with_capacity(squares.len());
            for s in squares {
                parts.push(io::grid_signs(io::latin_rows(s), g).map_err(invalid)?);
            }
            Ok(parts.join("\n"))
        }
    }
}
