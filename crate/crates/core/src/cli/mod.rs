//! The `congruent` command line.
//!
//! Exit codes: `0` success, `1` internal error, `2` usage error.

mod record;
mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

pub use record::{now_unix, Cache, CacheContents, ResultRecord, CACHE_ENV};
pub use render::{Cell, Format, Report};

use crate::arith::{is_prime, parse_rational, squarefree_split, to_num_den, ExactRational};
use crate::elliptic::{orbit8, point_from_triangle, torsion_points, triangle_from_point, CurveE, CurvePoint};
use crate::error::Error;
use crate::lseries::{characters, tail_bound, zeta_euler, zeta_partial, CharValue};
use crate::modular::{
    delta_qexp, eisenstein_qexp, gamma_index, genus_prime, genus_principal, j_qexp, mu_gamma_n,
    phi, psi, TruncatedQSeries,
};
use crate::triangles::{admissible_pairs, class_of, pythagorean, RationalTriangle};
use crate::tunnell::{kernel_scan, tunnell_counts, CongruenceStatus, KernelRow};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_WITNESS_BOUND: u64 = 200;

#[derive(Debug, Parser)]
#[command(name = "congruent", version, about = "Congruent numbers, E[n] points, L-series and q-expansions")]
pub struct Cli {
    /// Output format; `table` defaults to csv, everything else to human.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify n with Tunnell's criterion and a triangle search.
    Classify {
        n: u64,
        #[arg(long, default_value_t = DEFAULT_WITNESS_BOUND)]
        witness_bound: u64,
        /// Neither read nor write the result cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Classification table for square-free n ≤ limit.
    Table {
        #[arg(long)]
        limit: u64,
        #[arg(long, default_value_t = DEFAULT_WITNESS_BOUND)]
        witness_bound: u64,
    },
    /// The eight points of E[q] attached to a positive triangle and its sign changes.
    Orbit {
        q: String,
        a: String,
        b: String,
        c: String,
    },
    /// Point of E[q] for the triangle [q | a, b, c].
    Point {
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Triangle for the point (x, y) of E[q].
    Triangle {
        q: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Primitive Pythagorean triples with κ ≤ kappa-max and their classes.
    Pyth {
        #[arg(long)]
        kappa_max: u64,
    },
    /// Torsion points of E[n].
    Torsion { n: u64 },
    /// Dirichlet characters modulo κ.
    Characters { kappa: u64 },
    /// ζ(s) by partial sum and by Euler product.
    Zeta {
        s: f64,
        #[arg(long, default_value_t = 10_000)]
        terms: u64,
    },
    /// Index, measure and genus data for Γ(N).
    Genus { n: u64 },
    /// q-expansion of E4, E6, Δ or j.
    Qexp {
        #[arg(value_enum)]
        series: SeriesKind,
        #[arg(long, default_value_t = 10)]
        cutoff: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    #[value(name = "E4", alias = "e4")]
    E4,
    #[value(name = "E6", alias = "e6")]
    E6,
    #[value(name = "delta", alias = "Delta")]
    Delta,
    #[value(name = "j", alias = "J")]
    J,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

/// Parses `args` (program name first), runs the command, and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, err).and_then(|(report, default)| {
        report.write(cli.format.unwrap_or(default), out)?;
        Ok(())
    }) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Internal(m)) => {
            let _ = writeln!(err, "internal error: {m}");
            EXIT_INTERNAL
        }
    }
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Result<(Report, Format), Failure> {
    let human = Format::Human;
    Ok(match &cli.command {
        Command::Classify { n, witness_bound, no_cache } => {
            let cache = (!no_cache).then(Cache::from_env);
            (cmd_classify(*n, *witness_bound, cache.as_ref(), err)?, human)
        }
        Command::Table { limit, witness_bound } => (cmd_table(*limit, *witness_bound)?, Format::Csv),
        Command::Orbit { q, a, b, c } => (cmd_orbit(q, a, b, c)?, human),
        Command::Point { q, a, b, c } => (cmd_point(q, a, b, c)?, human),
        Command::Triangle { q, x, y } => (cmd_triangle(q, x, y)?, human),
        Command::Pyth { kappa_max } => (cmd_pyth(*kappa_max)?, human),
        Command::Torsion { n } => (cmd_torsion(*n)?, human),
        Command::Characters { kappa } => (cmd_characters(*kappa)?, human),
        Command::Zeta { s, terms } => (cmd_zeta(*s, *terms)?, human),
        Command::Genus { n } => (cmd_genus(*n)?, human),
        Command::Qexp { series, cutoff } => (cmd_qexp(*series, *cutoff)?, human),
    })
}

fn rational(s: &str) -> Result<ExactRational, Failure> {
    Ok(parse_rational(s)?)
}

fn sup2(v: u64) -> String {
    format!("{v}²")
}

fn classify_row(n: u64, witness_bound: u64) -> crate::Result<KernelRow> {
    let counts = tunnell_counts(n)?;
    Ok(KernelRow {
        counts,
        l_bullet: counts.l_bullet(),
        status: crate::tunnell::classify(n, witness_bound)?,
    })
}

/// Classifies the square-free class of `n`, reusing a cached record when one
/// was computed with at least this witness bound.
pub fn cmd_classify_record(
    n: u64,
    witness_bound: u64,
    cache: Option<&Cache>,
    err: &mut dyn Write,
) -> crate::Result<(ResultRecord, Option<String>)> {
    let split = squarefree_split(n)?;
    let rep = split.squarefree_part;
    let reduction = (split.square_root_part > 1).then(|| {
        format!("{n} = {}·{rep}", sup2(split.square_root_part))
    });
    if let Some(cache) = cache {
        match cache.get(rep, witness_bound) {
            Ok((hit, warnings)) => {
                for w in warnings {
                    let _ = writeln!(err, "warning: {w}");
                }
                if let Some(r) = hit {
                    return Ok((r, reduction));
                }
            }
            Err(e) => {
                let _ = writeln!(err, "warning: cannot read cache {}: {e}", cache.path().display());
            }
        }
    }
    let row = classify_row(rep, witness_bound)?;
    let record = ResultRecord::new(row, witness_bound, now_unix());
    if let Some(cache) = cache {
        if let Err(e) = cache.put(&record) {
            let _ = writeln!(err, "warning: cannot write cache {}: {e}", cache.path().display());
        }
    }
    Ok((record, reduction))
}

fn cmd_classify(n: u64, witness_bound: u64, cache: Option<&Cache>, err: &mut dyn Write) -> Result<Report, Failure> {
    let (record, reduction) = cmd_classify_record(n, witness_bound, cache, err)?;
    let c = &record.counts;
    let mut human = String::new();
    if let Some(r) = &reduction {
        human.push_str(&format!("{r}; classifying {}\n", record.n()));
    }
    human.push_str(&format!("n = {}\n", record.n()));
    human.push_str(&format!("A = {}  B = {}  C = {}  D = {}\n", c.a, c.b, c.c, c.d));
    human.push_str(&format!("L• = {}\n", record.l_bullet));
    human.push_str(&format!("status: {}\n", record.status.describe()));
    if let Some(w) = record.status.witness() {
        human.push_str(&format!("witness: {} (κ = {}, l = {})\n", w.triangle, w.kappa, w.l));
    }
    human.push_str(&format!("witness bound: {}\n", record.witness_bound));

    let mut rec = serde_json::to_value(&record).map_err(|e| Failure::Internal(e.to_string()))?;
    rec["input"] = json!(n);
    rec["reduction"] = json!(reduction);
    Ok(Report {
        human: Some(human),
        json: Some(vec![rec]),
        ..table_report(std::slice::from_ref(&record))
    })
}

const TABLE_HEADERS: [&str; 12] = ["n", "A", "B", "C", "D", "l_bullet", "status", "kappa", "l", "a", "b", "c"];

fn table_report(records: &[ResultRecord]) -> Report {
    let mut report = Report::new(&TABLE_HEADERS);
    for r in records {
        let c = &r.counts;
        let mut row = vec![
            Cell::int(c.n),
            Cell::int(c.a),
            Cell::int(c.b),
            Cell::int(c.c),
            Cell::int(c.d),
            Cell::int(r.l_bullet),
            Cell::text(r.status.code()),
        ];
        match r.status.witness() {
            Some(w) => row.extend([
                Cell::int(w.kappa),
                Cell::int(w.l),
                Cell::Rat(w.triangle.a.clone()),
                Cell::Rat(w.triangle.b.clone()),
                Cell::Rat(w.triangle.c.clone()),
            ]),
            None => row.extend(std::iter::repeat_n(Cell::Empty, 5)),
        }
        report.push(row);
    }
    report
}

fn cmd_table(limit: u64, witness_bound: u64) -> Result<Report, Failure> {
    if limit < 5 {
        return Err(Failure::Usage(format!("--limit must be at least 5, got {limit}")));
    }
    let stamp = now_unix();
    let records: Vec<ResultRecord> = kernel_scan(limit, witness_bound)?
        .into_iter()
        .map(|row| ResultRecord::new(row, witness_bound, stamp))
        .collect();
    let mut report = table_report(&records);
    report.json = Some(
        records
            .iter()
            .map(|r| serde_json::to_value(r).expect("records always serialize"))
            .collect(),
    );
    // Table 4 style: n in brackets where L• = 0
    let mut human = String::new();
    for r in &records {
        let label = if r.l_bullet == 0 { format!("[{}]", r.n()) } else { r.n().to_string() };
        let detail = match &r.status {
            CongruenceStatus::CongruentWitnessed(w) => w.triangle.to_string(),
            s => s.describe().to_string(),
        };
        human.push_str(&format!("{label:>7}  L•={:<4} {detail}\n", r.l_bullet));
    }
    report.human = Some(human);
    Ok(report)
}

fn parse_triangle(q: &str, a: &str, b: &str, c: &str) -> Result<RationalTriangle, Failure> {
    Ok(RationalTriangle::new(rational(q)?, rational(a)?, rational(b)?, rational(c)?)?)
}

fn point_cells(p: &CurvePoint) -> [Cell; 2] {
    match p {
        CurvePoint::Infinity => [Cell::text("inf"), Cell::text("inf")],
        CurvePoint::Affine { x, y } => [Cell::Rat(x.clone()), Cell::Rat(y.clone())],
    }
}

fn cmd_orbit(q: &str, a: &str, b: &str, c: &str) -> Result<Report, Failure> {
    let t = parse_triangle(q, a, b, c)?;
    let curve = CurveE::new(t.q.clone())?;
    let mut report = Report::new(&["a", "b", "c", "x", "y"]);
    for p in orbit8(&t)? {
        let s = triangle_from_point(&curve, &p)?;
        let [x, y] = point_cells(&p);
        report.push(vec![Cell::Rat(s.a), Cell::Rat(s.b), Cell::Rat(s.c), x, y]);
    }
    Ok(report)
}

fn cmd_point(q: &str, a: &str, b: &str, c: &str) -> Result<Report, Failure> {
    let p = point_from_triangle(&parse_triangle(q, a, b, c)?)?;
    let mut report = Report::new(&["x", "y"]);
    report.push(point_cells(&p).to_vec());
    report.bare = true;
    Ok(report)
}

fn cmd_triangle(q: &str, x: &str, y: &str) -> Result<Report, Failure> {
    let curve = CurveE::new(rational(q)?)?;
    let p = curve.point(rational(x)?, rational(y)?)?;
    let t = triangle_from_point(&curve, &p)?;
    let mut report = Report::new(&["a", "b", "c"]);
    report.push(vec![Cell::Rat(t.a), Cell::Rat(t.b), Cell::Rat(t.c)]);
    report.bare = true;
    Ok(report)
}

fn cmd_pyth(kappa_max: u64) -> Result<Report, Failure> {
    let mut report = Report::new(&["kappa", "l", "leg1", "leg2", "hyp", "area", "n", "m", "class_a", "class_b", "class_c"]);
    for (k, l) in admissible_pairs(kappa_max) {
        let t = pythagorean(k, l, 1)?;
        let class = class_of(&t);
        report.push(vec![
            Cell::int(k),
            Cell::int(l),
            Cell::int(t.legs.0),
            Cell::int(t.legs.1),
            Cell::int(t.hyp),
            Cell::int(t.area),
            Cell::int(class.n),
            Cell::int(class.m),
            Cell::Rat(class.triangle.a),
            Cell::Rat(class.triangle.b),
            Cell::Rat(class.triangle.c),
        ]);
    }
    Ok(report)
}

fn cmd_torsion(n: u64) -> Result<Report, Failure> {
    let mut report = Report::new(&["x", "y"]);
    for p in torsion_points(n)? {
        report.push(point_cells(&p).to_vec());
    }
    Ok(report)
}

fn char_value_label(v: CharValue) -> String {
    let CharValue::Root(t) = v else { return "0".into() };
    match (*t.numer(), *t.denom()) {
        (0, _) => "1".into(),
        (1, 2) => "-1".into(),
        (1, 4) => "i".into(),
        (3, 4) => "-i".into(),
        (a, b) => format!("e({a}/{b})"),
    }
}

fn cmd_characters(kappa: u64) -> Result<Report, Failure> {
    let chars = characters(kappa)?;
    let labels: Vec<String> = (0..kappa).map(|n| n.to_string()).collect();
    let mut headers = vec!["chi"];
    headers.extend(labels.iter().map(String::as_str));
    let mut report = Report::new(&headers);
    for (i, chi) in chars.iter().enumerate() {
        let mut row = vec![Cell::text(format!("chi{}", i + 1))];
        row.extend((0..kappa as i64).map(|n| Cell::text(char_value_label(chi.value(n)))));
        report.push(row);
    }
    Ok(report)
}

fn cmd_zeta(s: f64, terms: u64) -> Result<Report, Failure> {
    let mut report = Report::new(&["s", "terms", "partial_sum", "euler_product", "tail_bound"]);
    report.push(vec![
        Cell::Float(s),
        Cell::int(terms),
        Cell::Float(zeta_partial(s, terms)?),
        Cell::Float(zeta_euler(s, terms)?),
        Cell::Float(tail_bound(s, terms)),
    ]);
    Ok(report)
}

fn cmd_genus(n: u64) -> Result<Report, Failure> {
    let mut report = Report::new(&["N", "index", "mu", "psi", "phi", "genus", "genus_prime_formula"]);
    report.push(vec![
        Cell::int(n),
        Cell::int(gamma_index(n)?),
        if n >= 3 { Cell::int(mu_gamma_n(n)?) } else { Cell::Empty },
        Cell::int(psi(n)?),
        Cell::int(phi(n)?),
        Cell::int(genus_principal(n)?),
        if n >= 5 && is_prime(n) { Cell::int(genus_prime(n)?) } else { Cell::Empty },
    ]);
    Ok(report)
}

fn cmd_qexp(kind: SeriesKind, cutoff: u64) -> Result<Report, Failure> {
    let series: TruncatedQSeries = match kind {
        SeriesKind::E4 => eisenstein_qexp(4, cutoff)?,
        SeriesKind::E6 => eisenstein_qexp(6, cutoff)?,
        SeriesKind::Delta => delta_qexp(cutoff)?,
        SeriesKind::J => j_qexp(cutoff)?,
    };
    let mut report = Report::new(&["exponent", "coefficient"]);
    for (i, c) in series.coefficients().iter().enumerate() {
        report.push(vec![Cell::int(series.lowest_exponent() + i as i64), Cell::Rat(c.clone())]);
    }
    report.json = Some(vec![json!({
        "lowest_exponent": series.lowest_exponent(),
        "coefficients": series.coefficients().iter().map(to_num_den).collect::<Vec<_>>(),
    })]);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["congruent"];
        if !args.contains(&"--format") {
            argv.extend(["--format", "human"]);
        }
        argv.extend_from_slice(args);
        if !args.contains(&"--no-cache") && args.first() == Some(&"classify") {
            argv.push("--no-cache");
        }
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn point_and_triangle() {
        assert_eq!(call(&["point", "5", "3/2", "20/3", "41/6"]), (0, "25/4 75/8\n".into(), String::new()));
        assert_eq!(call(&["triangle", "5", "25/4", "75/8"]).1, "3/2 20/3 41/6\n");
        assert_eq!(call(&["triangle", "5", "25/4", "-75/8"]).1, "-3/2 -20/3 -41/6\n");
        assert_eq!(call(&["triangle", "5", "1", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["point", "5", "3/2", "20/3", "7"]).0, EXIT_USAGE);
    }

    #[test]
    fn classify_reduces() {
        let (code, out, _) = call(&["classify", "45"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("45 = 3²·5; classifying 5\n"), "{out}");
        assert!(out.contains("congruent (witnessed)"));
        assert_eq!(call(&["classify", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["classify", "x"]).0, EXIT_USAGE);
    }

    #[test]
    fn table_limits() {
        assert_eq!(call(&["table", "--limit", "4"]).0, EXIT_USAGE);
        let (code, out, _) = call(&["--format", "csv", "table", "--limit", "7"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 7);
    }

    #[test]
    fn qexp_delta() {
        let (_, out, _) = call(&["--format", "json", "qexp", "delta", "--cutoff", "5"]);
        assert_eq!(
            out,
            "{\"coefficients\":[\"0/1\",\"1/1\",\"-24/1\",\"252/1\",\"-1472/1\",\"4830/1\"],\"lowest_exponent\":0}\n"
        );
    }

    #[test]
    fn character_labels() {
        let (_, out, _) = call(&["characters", "10"]);
        let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split_whitespace().collect()).collect();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[1], ["chi2", "0", "1", "0", "i", "0", "0", "0", "-i", "0", "-1"]);
    }

    #[test]
    fn help_is_success() {
        assert_eq!(call(&["--help"]).0, EXIT_OK);
        assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
    }
}
