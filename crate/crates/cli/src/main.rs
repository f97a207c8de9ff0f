use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use k3auto::arith::{parse_rational, Place};
use k3auto::classifier::{enumerate_cases, render, validate_row, TableFormat};
use k3auto::lefschetz::{
    holo_total, point_count_solutions, point_relations_hold, FixedCurve, FixedLocusConfig, HoloCheck,
};
use k3auto::weierstrass::{
    analyze, check_invariance, fiber_inventory, kodaira_type_at, paper_example, AnalysisReport, Degeneration,
    DiagonalAutomorphism, ExampleReport, Variant, WeierstrassFibration,
};

#[derive(Parser)]
#[command(name = "k3auto", version, about = "Order-8 non-symplectic automorphisms on elliptic K3 surfaces")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, env = "K3AUTO_FORMAT", default_value = "table")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the classification table
    Classify {
        /// Picard rank filter
        #[arg(long, default_value = "all", value_parser = ["10", "14", "18", "all"])]
        pic: String,
    },
    /// Analyze a Weierstrass fibration with a diagonal automorphism
    Analyze {
        /// JSON file with `a`, `b` as `[["coef", exp], ...]` and optional `form`
        #[arg(long)]
        fibration: PathBuf,
        /// JSON file with `ex`, `ey`, `et` and optional `translate`
        #[arg(long)]
        automorphism: PathBuf,
    },
    /// Verify one of the example families
    Examples {
        #[arg(long)]
        id: u8,
        /// generic, a0, i8, i16 or a degeneration name
        #[arg(long, conflicts_with = "degeneration")]
        preset: Option<String>,
        /// none, a=0, h1=0, h1=h2=0, alpha^2=4beta or beta=0
        #[arg(long)]
        degeneration: Option<String>,
        /// Comma-separated rational parameters
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        params: Vec<String>,
        /// Use the second automorphism of the family
        #[arg(long)]
        alt: bool,
    },
    /// Check a fixed-locus configuration or solve for point counts
    Lefschetz {
        /// JSON file with either `n2`, `n3`, `n4`, `curves` or `alpha`
        #[arg(long, required_unless_present = "alpha", conflicts_with = "alpha")]
        config: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<i64>,
        /// Number of fixed rational curves the solutions must be compatible with
        #[arg(long, requires = "alpha")]
        k: Option<u32>,
    },
}

enum Failure {
    Usage(String),
    Invariant(String),
}

type Outcome = Result<String, Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v).map(|s| s + "\n").map_err(usage)
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn classify(pic: &str, format: Format) -> Outcome {
    let rows: Vec<_> = enumerate_cases().into_iter().filter(|r| pic == "all" || r.rk_pic.to_string() == pic).collect();
    let format = match format {
        Format::Table => TableFormat::Table,
        Format::Json => TableFormat::Json,
        Format::Csv => TableFormat::Csv,
    };
    render(&rows, format).map_err(usage)
}

#[derive(Serialize)]
struct CheckLine {
    name: String,
    pass: bool,
}

fn check(out: &mut Vec<CheckLine>, name: impl Into<String>, pass: bool) {
    out.push(CheckLine { name: name.into(), pass });
}

fn transcript(checks: &[CheckLine]) -> String {
    let mut s = String::new();
    for c in checks {
        let _ = writeln!(s, "[{}] {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
    }
    s
}

fn summary(a: &AnalysisReport) -> String {
    let mut s = String::new();
    let g = a.automorphism;
    let _ = writeln!(
        s,
        "automorphism: (ex, ey, et) = ({}, {}, {}){}",
        g.ex,
        g.ey,
        g.et,
        if g.translate { " + T" } else { "" }
    );
    if let Some(from) = a.normalized_from {
        let _ = writeln!(s, "normalized from: ({}, {}, {})", from.ex, from.ey, from.et);
    }
    let _ = writeln!(s, "two-form multiplier: zeta^{}", a.two_form_exponent);
    let counts: Vec<String> = a.inventory.counts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    let _ = writeln!(s, "singular fibers: {} (Euler sum {})", counts.join(", "), a.euler_sum);
    for fa in &a.invariant_fibers {
        let _ = writeln!(
            s,
            "fiber over {}: {}, action {}",
            fa.place,
            fa.report.kodaira,
            fa.action_label.as_deref().unwrap_or("unmodelled")
        );
        for p in &fa.fixed_points {
            let ty = p.point_type.map_or("-".to_string(), |t| t.to_string());
            let _ = writeln!(s, "  fixed: {} x{} type {ty}", p.point, p.count);
        }
    }
    if let Some(n) = a.translation_fixed_points {
        let _ = writeln!(s, "translation fixed points: {n}");
    }
    if let Some(c) = &a.configuration {
        let _ = writeln!(s, "points (n2, n3, n4) = ({}, {}, {}), k = {}", c.n2, c.n3, c.n4, c.k);
    }
    match a.matched_row {
        Some(r) => {
            let _ = writeln!(s, "matched row: {r}");
        }
        None => {
            let _ = writeln!(s, "matched row: none");
        }
    }
    for n in &a.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

fn analyze_files(fibration: &Path, automorphism: &Path, format: Format) -> Outcome {
    let f: WeierstrassFibration = read_json(fibration)?;
    let f = f.validated().map_err(usage)?;
    let g: DiagonalAutomorphism = read_json(automorphism)?;
    let g = DiagonalAutomorphism {
        translate: g.translate,
        ..DiagonalAutomorphism::new(g.ex as i64, g.ey as i64, g.et as i64)
    };
    match analyze(&f, &g) {
        Ok(report) => match format {
            Format::Json => to_json(&report),
            _ => Ok(summary(&report)),
        },
        Err(e) => {
            let mut items = vec![format!("analysis: {e}")];
            if !check_invariance(&f, &g) {
                items.push("invariance: the automorphism does not preserve the surface".into());
            }
            if let Err(e) = fiber_inventory(&f) {
                items.push(format!("fibers: {e}"));
            }
            for place in [Place::zero(), Place::Infinity] {
                if let Err(e) = kodaira_type_at(&f, &place) {
                    items.push(format!("fiber over {place}: {e}"));
                }
            }
            items.dedup();
            Err(Failure::Invariant(items.join("\n")))
        }
    }
}

fn resolve_degeneration(id: u8, preset: Option<&str>, degeneration: Option<&str>) -> Result<Degeneration, Failure> {
    let name = preset.or(degeneration).unwrap_or("generic");
    Ok(match (id, name) {
        (_, "generic") => Degeneration::Generic,
        (_, "a0") => Degeneration::AZero,
        (3, "i8") => Degeneration::H1,
        (3, "i16") => Degeneration::H1H2,
        (4, "i8") => Degeneration::Discriminant,
        (4, "i16") => Degeneration::BetaZero,
        (_, other) => other.parse().map_err(usage)?,
    })
}

#[derive(Serialize)]
struct ExampleOutput<'a> {
    report: &'a ExampleReport,
    checks: &'a [CheckLine],
}

fn examples(
    id: u8,
    preset: Option<&str>,
    degeneration: Option<&str>,
    params: &[String],
    alt: bool,
    format: Format,
) -> Outcome {
    if !(1..=4).contains(&id) {
        return Err(usage(format!("unsupported example {id}; choose 1, 2, 3 or 4")));
    }
    let d = resolve_degeneration(id, preset, degeneration)?;
    let params = if params.is_empty() {
        None
    } else {
        Some(
            params
                .iter()
                .map(|p| parse_rational(p).ok_or_else(|| usage(format!("bad rational {p:?}"))))
                .collect::<Result<Vec<_>, _>>()?,
        )
    };
    let variant = if alt { Variant::Alternate } else { Variant::Primary };
    let report = paper_example(id, params.as_deref(), d, variant).map_err(usage)?;
    let a = &report.analysis;
    let mut checks = Vec::new();
    check(&mut checks, format!("Euler sum {} = 24", a.euler_sum), a.euler_sum == 24);
    check(&mut checks, format!("two-form multiplier zeta^{} = zeta", a.two_form_exponent), a.two_form_exponent == 1);
    check(&mut checks, "analysis raised no notes", a.notes.is_empty());
    match a.matched_row {
        Some(r) => {
            check(&mut checks, format!("matched row {r}"), true);
            let row = enumerate_cases().into_iter().find(|x| x.index == r).expect("row exists");
            for c in validate_row(&row).checks {
                check(&mut checks, format!("row {r}: {}", c.name), c.pass);
            }
        }
        None => check(&mut checks, "matched a classification row", false),
    }
    if let Some(t) = &a.translation {
        check(&mut checks, "translation is an involution", t.involutive);
        check(&mut checks, "translation preserves the surface", t.on_curve);
        check(&mut checks, "translation swaps O and T", t.swaps_sections);
        check(&mut checks, "translation commutes with the diagonal part", t.commutes == Some(true));
    }
    if let Some(n) = a.translation_fixed_points {
        check(&mut checks, format!("translation has {n} = 8 fixed points"), n == 8);
    }
    let ok = checks.iter().all(|c| c.pass);
    let out = match format {
        Format::Json => to_json(&ExampleOutput { report: &report, checks: &checks })?,
        _ => format!(
            "example {id}, degeneration {d}, parameters ({})\n{}{}",
            report.params.join(", "),
            summary(a),
            transcript(&checks)
        ),
    };
    if ok {
        Ok(out)
    } else {
        Err(Failure::Invariant(out))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum LefschetzInput {
    Counts(FixedLocusConfig),
    Unknowns {
        alpha: i64,
        #[serde(default)]
        k: Option<u32>,
        #[serde(default)]
        max_points: Option<i64>,
    },
}

#[derive(Serialize)]
struct CountsReport {
    holomorphic: HoloCheck,
    point_relations: bool,
}

#[derive(Serialize)]
struct Solutions {
    alpha: i64,
    k: Option<u32>,
    solutions: Vec<(u32, u32, u32)>,
}

/// Largest number of isolated fixed points in the table.
const MAX_POINTS: i64 = 14;

fn lefschetz(config: Option<&Path>, alpha: Option<i64>, k: Option<u32>, format: Format) -> Outcome {
    let input = match (config, alpha) {
        (Some(p), _) => read_json(p)?,
        (None, Some(alpha)) => LefschetzInput::Unknowns { alpha, k, max_points: None },
        (None, None) => return Err(usage("either --config or --alpha is required")),
    };
    match input {
        LefschetzInput::Counts(cfg) => {
            let holomorphic = holo_total(&cfg).map_err(usage)?;
            let point_relations = point_relations_hold(cfg.n2 as i64, cfg.n3 as i64, cfg.n4 as i64, cfg.alpha());
            let ok = holomorphic.matches && point_relations;
            let out = match format {
                Format::Json => to_json(&CountsReport { holomorphic: holomorphic.clone(), point_relations })?,
                _ => transcript(&[
                    CheckLine {
                        name: format!(
                            "holomorphic: sum {} vs {} (residual {})",
                            holomorphic.total, holomorphic.target, holomorphic.residual
                        ),
                        pass: holomorphic.matches,
                    },
                    CheckLine { name: "point relations".into(), pass: point_relations },
                ]),
            };
            if ok {
                Ok(out)
            } else {
                Err(Failure::Invariant(out))
            }
        }
        LefschetzInput::Unknowns { alpha, k, max_points } => {
            let mut solutions = point_count_solutions(alpha, max_points.unwrap_or(MAX_POINTS));
            if let Some(k) = k {
                // α = k − (number of fixed elliptic curves), at most one of which is fixed by σ
                let elliptic = k as i64 - alpha;
                if !(0..=1).contains(&elliptic) {
                    return Err(usage(format!("alpha = {alpha} is incompatible with k = {k}")));
                }
                solutions.retain(|&(n2, n3, n4)| {
                    let mut curves = vec![FixedCurve::rational(); k as usize];
                    curves.extend(std::iter::repeat_n(FixedCurve::elliptic(), elliptic as usize));
                    holo_total(&FixedLocusConfig { curves, n2, n3, n4 }).is_ok_and(|h| h.matches)
                });
            }
            match format {
                Format::Json => to_json(&Solutions { alpha, k, solutions }),
                _ => {
                    let mut s = format!("alpha = {alpha}: {} solutions\n", solutions.len());
                    for (n2, n3, n4) in solutions {
                        let _ = writeln!(s, "(n2, n3, n4) = ({n2}, {n3}, {n4})");
                    }
                    Ok(s)
                }
            }
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Classify { pic } => classify(pic, cli.format),
        Command::Analyze { fibration, automorphism } => analyze_files(fibration, automorphism, cli.format),
        Command::Examples { id, preset, degeneration, params, alt } => {
            examples(*id, preset.as_deref(), degeneration.as_deref(), params, *alt, cli.format)
        }
        Command::Lefschetz { config, alpha, k } => lefschetz(config.as_deref(), *alpha, *k, cli.format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invariant(msg)) => {
            print!("{msg}");
            if !msg.ends_with('\n') {
                println!();
            }
            eprintln!("invariant check failed");
            ExitCode::from(2)
        }
    }
}
