use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use wilf_core::invariants::{check_weak_grading_with, wilf_report_with};
use wilf_core::macaulay::SumsetSource;
use wilf_core::semigroup::SemigroupSummary;
use wilf_core::{
    binomial_representation, build, census, check_gcd_left, check_packed_left_primitives, condensed_bounds, decompose,
    hilbert_from_sumsets, macaulay_growth_ok, macaulay_step, scan, ElementSet, EnumerationConfig, GcdCheck,
    GeneratorSpec, GradingCheck, ScanTarget, WilfReport,
};

const EXIT_USAGE: u8 = 2;
const EXIT_WILF_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "wilf",
    version,
    about = "Numerical semigroup invariants and Wilf's inequality"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    #[value(alias = "table")]
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one semigroup given as `g1,g2,...[:cap]`.
    Analyze {
        spec: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Number of semigroups per genus and q.
    Census {
        genus_max: u32,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Semigroups whose W0 (or W with --use-w) is below the threshold.
    #[command(name = "scan-w0")]
    ScanW0 {
        genus_max: u32,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        threshold: i64,
        #[arg(long)]
        use_w: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Binomial representations and Macaulay bounds.
    Macaulay {
        #[command(subcommand)]
        op: MacaulayOp,
        #[arg(long, value_enum, default_value = "text", global = true)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum MacaulayOp {
    /// i-th binomial representation of a.
    Rep { a: u64, i: u32 },
    /// a^<i>.
    Step { a: u64, i: u32 },
    /// Bounds on h_{r-1} and h_{r+1} implied by h_r.
    Bounds { h: u64, r: u32 },
    /// Hilbert function h_0..h_n of the sumset algebra on A.
    Hilbert { generators: String, n: usize },
}

#[derive(Serialize, Deserialize)]
struct LevelJson {
    j: u64,
    members: ElementSet,
    apery: ElementSet,
    alpha: u64,
}

#[derive(Serialize, Deserialize)]
struct AnalyzeJson {
    semigroup: SemigroupSummary,
    report: WilfReport,
    levels: Vec<LevelJson>,
    primitives: ElementSet,
    grading: GradingCheck,
    /// `None` when `q < 4`.
    left_primitives_packed: Option<bool>,
    /// `None` for the naturals.
    gcd: Option<GcdCheck>,
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    a: u64,
    i: u32,
    coeffs: Vec<u64>,
    text: String,
}

#[derive(Serialize, Deserialize)]
struct StepJson {
    a: u64,
    i: u32,
    value: u128,
}

#[derive(Serialize, Deserialize)]
struct BoundsJson {
    h: u64,
    r: u32,
    exact: bool,
    /// Bracket ends as reduced fractions `num/den`.
    x_lo: String,
    x_hi: String,
    lower_prev: u128,
    upper_next: u128,
}

#[derive(Serialize, Deserialize)]
struct HilbertJson {
    values: Vec<u64>,
    source: Option<SumsetSource>,
    growth_ok: bool,
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn config(workers: Option<usize>) -> EnumerationConfig {
    EnumerationConfig {
        workers,
        ..Default::default()
    }
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn analyze(spec: &str, format: Format) -> ExitCode {
    let spec: GeneratorSpec = match spec.parse() {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let s = match build(&spec) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let dec = decompose(&s);
    let report = wilf_report_with(&s, &dec);
    let grading = check_weak_grading_with(&s, &dec);
    let packed = check_packed_left_primitives(&s).ok();
    let gcd = check_gcd_left(&s).ok();
    let m = s.multiplicity();

    let out = match format {
        Format::Csv => format!("{}\n{}\n", WilfReport::CSV_HEADER, report.csv_row()),
        Format::Json => {
            let levels = dec
                .levels
                .iter()
                .zip(&dec.apery_levels)
                .zip(&dec.alpha)
                .enumerate()
                .map(|(j, ((members, apery), &alpha))| LevelJson {
                    j: j as u64,
                    members: members.clone(),
                    apery: apery.clone(),
                    alpha,
                })
                .collect();
            let doc = AnalyzeJson {
                semigroup: s.summary(),
                report: report.clone(),
                levels,
                primitives: s.primitives(),
                grading: grading.clone(),
                left_primitives_packed: packed,
                gcd,
            };
            format!("{}\n", to_json(&doc))
        }
        Format::Text => {
            let mut o = String::new();
            let r = &report;
            writeln!(o, "semigroup   {s}").unwrap();
            writeln!(o, "primitives  {}", join(s.primitives().as_slice(), ",")).unwrap();
            writeln!(o, "m={} c={} F={} genus={}", r.m, r.c, r.frobenius, r.genus).unwrap();
            writeln!(o, "q={} rho={} e={} |L|={}", r.q, r.rho, r.e, r.l_size).unwrap();
            writeln!(o, "profile=({}) p_q={} d_q={}", join(&r.profile, ","), r.p_q, r.d_q).unwrap();
            writeln!(o, "W={} W0={}", r.w, r.w0).unwrap();
            for (j, level) in dec.levels.iter().enumerate() {
                let lo = (j as u64 * m).saturating_sub(dec.rho);
                let hi = (j as u64 + 1) * m - dec.rho;
                writeln!(
                    o,
                    "S_{j} [{lo},{hi}): {{{}}} apery={{{}}} alpha={}",
                    join(level.as_slice(), ","),
                    join(dec.apery_levels[j].as_slice(), ","),
                    dec.alpha[j]
                )
                .unwrap();
            }
            writeln!(
                o,
                "weak grading: {} (bounds {})",
                ok(grading.weak_grading_ok),
                ok(grading.bounds_ok)
            )
            .unwrap();
            writeln!(o, "true grading: {}", ok(grading.true_grading_ok)).unwrap();
            if let Some(p) = packed {
                writeln!(o, "left primitives packed: {}", ok(p)).unwrap();
            }
            if let Some(g) = gcd {
                writeln!(o, "gcd(L)={} 2e>=m: {}", g.gcd, ok(g.e_ge_half_m)).unwrap();
            }
            o
        }
    };
    print!("{out}");
    if report.w < 0 {
        ExitCode::from(EXIT_WILF_VIOLATION)
    } else {
        ExitCode::SUCCESS
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "no"
    }
}

fn run_census(genus_max: u32, format: Format, workers: Option<usize>) -> ExitCode {
    let table = match census(genus_max, &config(workers)) {
        Ok(t) => t,
        Err(e) => return usage_error(e),
    };
    match format {
        Format::Csv => print!("{}", table.to_csv()),
        Format::Text => print!("{}", table.to_table()),
        Format::Json => println!("{}", serde_json::to_string(&table.json_rows()).expect("serializable")),
    }
    ExitCode::SUCCESS
}

fn run_scan(genus_max: u32, threshold: i64, use_w: bool, format: Format, workers: Option<usize>) -> ExitCode {
    let target = if use_w { ScanTarget::W } else { ScanTarget::W0 };
    let hits = match scan(genus_max, threshold, target, &config(workers)) {
        Ok(h) => h,
        Err(e) => return usage_error(e),
    };
    let mut out = String::new();
    if format == Format::Csv && !hits.is_empty() {
        out.push_str("spec,genus,m,W,W0,q,rho,profile\n");
    }
    for h in &hits {
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(h).expect("serializable")).unwrap(),
            Format::Csv => writeln!(
                out,
                "\"{}\",{},{},{},{},{},{},{}",
                h.spec,
                h.genus,
                h.m,
                h.w,
                h.w0,
                h.q,
                h.rho,
                join(&h.profile, ";")
            )
            .unwrap(),
            Format::Text => writeln!(
                out,
                "{} genus={} m={} W={} W0={} q={} rho={} profile=({})",
                h.spec,
                h.genus,
                h.m,
                h.w,
                h.w0,
                h.q,
                h.rho,
                join(&h.profile, ",")
            )
            .unwrap(),
        }
    }
    print!("{out}");
    if hits.iter().any(|h| h.w < 0) {
        ExitCode::from(EXIT_WILF_VIOLATION)
    } else {
        ExitCode::SUCCESS
    }
}

fn run_macaulay(op: MacaulayOp, format: Format) -> ExitCode {
    let json = format == Format::Json;
    let out = match op {
        MacaulayOp::Rep { a, i } => match binomial_representation(a, i) {
            Ok(rep) if json => to_json(&RepJson {
                a,
                i,
                coeffs: rep.coeffs.clone(),
                text: rep.to_string(),
            }),
            Ok(rep) => rep.to_string(),
            Err(e) => return usage_error(e),
        },
        MacaulayOp::Step { a, i } => match macaulay_step(a, i) {
            Ok(value) if json => to_json(&StepJson { a, i, value }),
            Ok(value) => value.to_string(),
            Err(e) => return usage_error(e),
        },
        MacaulayOp::Bounds { h, r } => match condensed_bounds(h, r) {
            Ok(b) if json => to_json(&BoundsJson {
                h,
                r,
                exact: b.x.is_exact(),
                x_lo: b.x.lo.to_string(),
                x_hi: b.x.hi.to_string(),
                lower_prev: b.lower_prev,
                upper_next: b.upper_next,
            }),
            Ok(b) => format!(
                "x in [{}, {}]\nh_{} >= {}\nh_{} <= {}",
                b.x.lo,
                b.x.hi,
                r - 1,
                b.lower_prev,
                r + 1,
                b.upper_next
            ),
            Err(e) => return usage_error(e),
        },
        MacaulayOp::Hilbert { generators, n } => {
            let gens = generators
                .split(',')
                .map(|t| t.trim().parse::<u64>().map_err(|_| t.trim().to_string()))
                .collect::<Result<Vec<_>, _>>();
            let gens = match gens {
                Ok(g) => ElementSet::new(g),
                Err(tok) => return usage_error(format!("bad token '{tok}' in generator list")),
            };
            match hilbert_from_sumsets(&gens, n) {
                Ok(h) if json => to_json(&HilbertJson {
                    values: h.values().to_vec(),
                    source: h.source().cloned(),
                    growth_ok: macaulay_growth_ok(&h),
                }),
                Ok(h) if format == Format::Csv => format!("i,h\n{}", {
                    let mut s = String::new();
                    for (i, v) in h.values().iter().enumerate() {
                        writeln!(s, "{i},{v}").unwrap();
                    }
                    s.trim_end().to_string()
                }),
                Ok(h) => h.to_string(),
                Err(e) => return usage_error(e),
            }
        }
    };
    println!("{out}");
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { spec, format } => analyze(&spec, format),
        Command::Census {
            genus_max,
            format,
            workers,
        } => run_census(genus_max, format, workers),
        Command::ScanW0 {
            genus_max,
            threshold,
            use_w,
            format,
            workers,
        } => run_scan(genus_max, threshold, use_w, format, workers),
        Command::Macaulay { op, format } => run_macaulay(op, format),
    }
}
