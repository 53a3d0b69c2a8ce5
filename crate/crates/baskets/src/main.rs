use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use baskets::enumerate::{self, Config, Filter};
use baskets::golden::{self, GoldenSet, VerifyReport};
use baskets::minimize::{self, global_minimum};
use baskets::report::{self, Format};
use baskets::{canonical_sequence, unpack_to_level, Case, ClassRecord, FormalBasket};

#[derive(Parser)]
#[command(name = "baskets", version, about = "Basket invariants, delta = 12 class tables and minimal volumes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// sigma, sigma', Delta^n, K^3 and chi_m of a basket file
    Invariants {
        file: PathBuf,
        /// Overrides `chi = N` in the file
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<i64>,
        /// Overrides `chi2 = N` in the file
        #[arg(long)]
        chi2: Option<i64>,
        /// Largest m for the chi_m table
        #[arg(long, default_value_t = 13)]
        m_max: i64,
    },
    /// Canonical unpacking of a basket file
    Unpack {
        file: PathBuf,
        /// A single level; default prints levels 0 and 5..=12
        #[arg(long)]
        level: Option<i64>,
    },
    /// Level-12 classes of one case
    Enumerate {
        #[arg(long, default_value = "i")]
        case: Case,
        #[arg(long, default_value = "csv")]
        format: Format,
        #[arg(long)]
        jobs: Option<usize>,
        /// Disable a filter: nonneg, epsilon, regime, product-rule, delta
        #[arg(long = "no-filter")]
        no_filter: Vec<Filter>,
        /// Search a wide parameter box instead of the derived bounds
        #[arg(long)]
        wide_bounds: bool,
    },
    /// Minimal positive descendants and the minimum volume
    Minimize {
        #[arg(long, conflicts_with_all = ["case", "row"])]
        all: bool,
        #[arg(long, conflicts_with = "row")]
        case: Option<Case>,
        /// CASE:N, a reference table row
        #[arg(long)]
        row: Option<String>,
        /// Emit the full descendant table instead of a summary
        #[arg(long)]
        format: Option<Format>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Compare enumerated tables and descendants with the reference files
    Verify {
        /// Directory holding case_i.csv, case_ii.csv, descendants.csv, notes.csv
        dir: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|e| e.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type Res = Result<ExitCode, Box<dyn std::error::Error>>;

fn read_formal(file: &PathBuf) -> Result<FormalBasket, Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(file).map_err(|e| format!("{}: {e}", file.display()))?;
    FormalBasket::parse(&text).map_err(|e| format!("{}: {e}", file.display()).into())
}

fn run(cmd: Cmd) -> Res {
    let mut out = std::io::stdout().lock();
    match cmd {
        Cmd::Invariants { file, chi, chi2, m_max } => {
            let mut f = read_formal(&file)?;
            f.chi = chi.unwrap_or(f.chi);
            f.chi2 = chi2.unwrap_or(f.chi2);
            let f = FormalBasket::new(f.basket, f.chi, f.chi2)?;
            let b = &f.basket;
            writeln!(out, "basket = {b}")?;
            writeln!(out, "chi = {}, chi2 = {}", f.chi, f.chi2)?;
            writeln!(out, "sigma = {}", b.sigma())?;
            writeln!(out, "sigma' = {}", b.sigma_prime())?;
            for n in 2..=m_max.max(2) - 1 {
                writeln!(out, "Delta^{n} = {}", b.delta(n)?)?;
            }
            writeln!(out, "K^3 = {}", f.k_cubed())?;
            for (m, c) in (2..).zip(f.chi_table(m_max)?) {
                writeln!(out, "chi_{m} = {c}")?;
            }
        }
        Cmd::Unpack { file, level } => {
            let f = read_formal(&file)?;
            match level {
                Some(n) => writeln!(out, "B({n}) = {}", unpack_to_level(&f.basket, n)?)?,
                None => {
                    for (n, b) in canonical_sequence(&f.basket, 12)? {
                        writeln!(out, "B({n}) = {b}")?;
                    }
                }
            }
        }
        Cmd::Enumerate { case, format, jobs, no_filter, wide_bounds } => {
            let mut cfg = Config::default();
            cfg.printed_bounds = !wide_bounds;
            cfg.jobs = jobs;
            for f in &no_filter {
                cfg = cfg.without(*f);
            }
            let classes = enumerate::enumerate(case, &cfg);
            if !no_filter.is_empty() || wide_bounds {
                eprintln!("case {case}: {} classes with filters disabled: {:?}", classes.len(), no_filter.iter().map(|f| f.name()).collect::<Vec<_>>());
            }
            report::write_classes(&mut out, format, &classes)?;
        }
        Cmd::Minimize { all, case, row, format, jobs } => {
            let mut cfg = Config::default();
            cfg.jobs = jobs;
            let cases: Vec<Case> = match (all, case, &row) {
                (_, Some(c), _) => vec![c],
                (_, None, Some(r)) => vec![parse_row(r)?.0],
                _ => Case::ALL.to_vec(),
            };
            let mut classes: Vec<ClassRecord> = cases.iter().flat_map(|c| enumerate::enumerate(*c, &cfg)).collect();
            if let Some(r) = &row {
                let (c, n) = parse_row(r)?;
                classes.retain(|k| k.case() == c && k.table_row == Some(n));
                if classes.is_empty() {
                    return Err(format!("no class for row {r}").into());
                }
            }
            let desc = minimize::minimize_all(&classes, jobs);
            if let Some(fmt) = format {
                report::write_descendants(&mut out, fmt, &classes, &desc)?;
            } else {
                for (i, (c, ds)) in classes.iter().zip(&desc).enumerate() {
                    let min = ds.iter().map(|d| &d.k3).min();
                    writeln!(
                        out,
                        "{}: K^3 = {}, {} minimal positive, min {}",
                        c.label(i + 1),
                        c.k3,
                        ds.len(),
                        min.map_or("-".into(), |q| q.to_string())
                    )?;
                }
            }
            let mut summary = Vec::new();
            if let Some(g) = global_minimum(&desc) {
                for (i, d) in &g.witnesses {
                    summary.push(format!("witness basket = {} (chi = {})", d.basket, classes[*i].chi()));
                    summary.push(format!("trace = {}", if d.trace.is_empty() { "-" } else { &d.trace }));
                }
                let at: Vec<String> = g.witnesses.iter().map(|(i, _)| classes[*i].label(*i + 1)).collect();
                summary.push(format!("min K^3 = {} at {}", g.k3, at.join(", ")));
            }
            for line in summary {
                if format == Some(Format::Json) {
                    eprintln!("{line}");
                } else {
                    writeln!(out, "{line}")?;
                }
            }
        }
        Cmd::Verify { dir, jobs } => {
            let dir = dir.unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/golden"));
            let golden = GoldenSet::load_dir(&dir)?;
            let mut cfg = Config::default();
            cfg.jobs = jobs;
            let mut rep = VerifyReport::default();
            for case in Case::ALL {
                let classes = enumerate::enumerate(case, &cfg);
                let desc = minimize::minimize_all(&classes, jobs);
                golden::verify(&golden, case, &classes, Some(&desc), &mut rep);
            }
            for d in &rep.table_diffs {
                writeln!(out, "table: {d}")?;
            }
            for d in &rep.descendant_diffs {
                writeln!(out, "descendants: {d}")?;
            }
            writeln!(
                out,
                "{} table differences, {} descendant differences (informational), {} printed values accepted via notes",
                rep.table_diffs.len(),
                rep.descendant_diffs.len(),
                rep.accepted.len()
            )?;
            writeln!(out, "{}", if rep.passed() { "PASS" } else { "FAIL" })?;
            return Ok(if rep.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_row(s: &str) -> Result<(Case, usize), String> {
    let (c, n) = s.split_once(':').ok_or_else(|| format!("expected CASE:N, got `{s}`"))?;
    Ok((c.parse()?, n.parse().map_err(|_| format!("bad row number `{n}`"))?))
}
