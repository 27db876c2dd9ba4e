//! Command-line front end. Results go to stdout as JSON, a one-line summary goes to stderr.
//!
//! Exit codes: 0 on success, 1 when a checked claim fails, 2 on usage or input errors.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use posetkit::families::{
    check_bounded_bicomparable, check_bounded_cofinally_above, verify_claim, window, Claim, FamilyId,
    NamedSubsetId, WindowSpec,
};
use posetkit::ordertype::{parse_term, OrderTypeReport};
use posetkit::partition::{
    check_spine, find_spine, height_and_max_chain, is_strongly_maximal, mirsky_partition, smc_gap_witness,
    width_and_dilworth, CertificateFile, SpineCertificate,
};
use posetkit::sweep::{run_desk_sweep, CriterionResult, SweepConfig};
use posetkit::verifier;
use posetkit::{FinitePoset, PosetFile, Subset, VerificationReport};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "posetkit", version, about = "Finite posets, order-type terms and bounded checks on example posets")]
struct Cli {
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    /// Stop starting new sweep criteria after this many seconds.
    #[arg(long, global = true)]
    budget_seconds: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operations on a finite poset file.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Order-type terms.
    #[command(subcommand)]
    Ot(OtCmd),
    /// The example families.
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Finite lemmas about the spineless example.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Run the acceptance sweep.
    Sweep,
}

#[derive(Subcommand)]
enum PosetCmd {
    /// A maximum chain with a height partition into antichains meeting it.
    Spine { file: PathBuf },
    /// Check a spine certificate against a poset.
    CheckSpine { file: PathBuf, certificate: PathBuf },
    Height { file: PathBuf },
    Width { file: PathBuf },
    Mirsky { file: PathBuf },
    /// Rewrite the file with its cover relation.
    Covers { file: PathBuf },
    /// Whether a chain is strongly maximal, with a gap witness if not.
    Smc {
        file: PathBuf,
        /// Comma-separated element names.
        #[arg(long)]
        chain: String,
    },
}

#[derive(Subcommand)]
enum OtCmd {
    /// Full report for a term.
    Check { term: String },
    /// Normal form of a term.
    Parse { term: String },
    /// The term for the reversed order.
    Reverse { term: String },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Export a finite window as a poset file.
    Window {
        family: String,
        /// Inclusive ranges, e.g. `0..2,0..2,0..1`.
        #[arg(long, allow_hyphen_values = true)]
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a registered claim check.
    Check {
        family: String,
        #[arg(long)]
        claim: String,
        /// Comma-separated `key=value` pairs.
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Bounded check that `upper` is cofinally above `lower`.
    Cofinal {
        family: String,
        #[arg(long)]
        upper: String,
        #[arg(long)]
        lower: String,
        #[arg(long, allow_hyphen_values = true)]
        bound: String,
        /// Comma-separated extension of each upper bound.
        #[arg(long, default_value = "")]
        slack: String,
    },
    /// Bounded cofinality in both directions.
    Bicomparable {
        family: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        bound: String,
        #[arg(long, default_value = "")]
        slack: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Desk,
}

#[derive(Subcommand)]
enum VerifyCmd {
    Rows {
        #[arg(long)]
        ell: usize,
    },
    Counting {
        #[arg(long)]
        a: u64,
    },
    Mindrop {
        #[arg(long)]
        u: u64,
        #[arg(long)]
        v: u64,
        #[arg(long)]
        bound: u64,
    },
    Levels {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        bound: u64,
    },
    /// Single-level antichain bound.
    Width {
        #[arg(long)]
        bound: u64,
    },
    /// Every acceptance criterion.
    All {
        #[arg(long, value_enum, default_value = "desk")]
        preset: Preset,
    },
}

/// What a command produced: a JSON body and whether the checked statement held.
struct Output {
    body: Value,
    ok: bool,
    summary: String,
}

impl Output {
    fn plain(body: Value, summary: impl Into<String>) -> Self {
        Output { body, ok: true, summary: summary.into() }
    }

    fn report(r: VerificationReport) -> Self {
        let status = serde_json::to_value(r.status).expect("status");
        let summary = format!("{}: {}", r.claim, status.as_str().unwrap_or_default());
        Output { ok: r.passed(), body: serde_json::to_value(&r).expect("report"), summary }
    }

    fn sweep(results: Vec<CriterionResult>) -> Self {
        let failed = results.iter().filter(|r| !r.passed).count();
        let mut summary = String::new();
        for r in &results {
            summary.push_str(&format!(
                "criterion {:>2} {} {}: {}\n",
                r.id,
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.detail
            ));
        }
        summary.push_str(&format!("{} of {} criteria passed", results.len() - failed, results.len()));
        Output { body: serde_json::to_value(&results).expect("results"), ok: failed == 0, summary }
    }
}

fn load_poset(path: &Path) -> Result<FinitePoset> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file: PosetFile = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(FinitePoset::from_file(&file)?)
}

fn names(p: &FinitePoset, s: &Subset) -> Vec<String> {
    p.names_of(s)
}

fn parse_params(text: &str) -> Result<BTreeMap<String, u64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|kv| {
            let (k, v) = kv.split_once('=').ok_or_else(|| anyhow!("parameter `{kv}` is not key=value"))?;
            let v = v.trim().parse().with_context(|| format!("parameter `{k}` is not a natural number"))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn parse_slack(text: &str) -> Result<Vec<u64>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().with_context(|| format!("slack entry `{s}` is not a natural number")))
        .collect()
}

fn poset_cmd(cmd: PosetCmd) -> Result<Output> {
    Ok(match cmd {
        PosetCmd::Spine { file } => {
            let p = load_poset(&file)?;
            let cert = find_spine(&p);
            let summary = format!("spine with {} antichains", cert.antichains.len());
            Output::plain(serde_json::to_value(cert.to_file(&p))?, summary)
        }
        PosetCmd::CheckSpine { file, certificate } => {
            let p = load_poset(&file)?;
            let text = fs::read_to_string(&certificate)
                .with_context(|| format!("reading {}", certificate.display()))?;
            let cf: CertificateFile = serde_json::from_str(&text)?;
            let cert = SpineCertificate::from_file(&p, &cf)?;
            let r = match check_spine(&p, &cert) {
                Ok(()) => VerificationReport::pass("spine", None),
                Err(v) => VerificationReport::fail("spine", json!({ "violation": v.to_string() })),
            };
            Output::report(r)
        }
        PosetCmd::Height { file } => {
            let p = load_poset(&file)?;
            let (h, chain) = height_and_max_chain(&p);
            Output::plain(json!({ "height": h, "chain": names(&p, &chain) }), format!("height {h}"))
        }
        PosetCmd::Width { file } => {
            let p = load_poset(&file)?;
            let (w, cover, antichain) = width_and_dilworth(&p);
            let chains: Vec<_> = cover.parts.iter().map(|c| names(&p, c)).collect();
            Output::plain(
                json!({ "width": w, "chains": chains, "antichain": names(&p, &antichain) }),
                format!("width {w}"),
            )
        }
        PosetCmd::Mirsky { file } => {
            let p = load_poset(&file)?;
            let parts: Vec<_> = mirsky_partition(&p).parts.iter().map(|a| names(&p, a)).collect();
            let summary = format!("{} antichains", parts.len());
            Output::plain(json!({ "antichains": parts }), summary)
        }
        PosetCmd::Covers { file } => {
            let p = load_poset(&file)?;
            let f = p.to_file();
            let summary = format!("{} covers", f.le.len());
            Output::plain(serde_json::to_value(f)?, summary)
        }
        PosetCmd::Smc { file, chain } => {
            let p = load_poset(&file)?;
            let list: Vec<&str> = chain.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let c = p.subset_by_names(&list)?;
            let smc = is_strongly_maximal(&p, &c)?;
            let gap = smc_gap_witness(&p, &c)?;
            let witness = gap.map(|g| json!({ "removed": names(&p, &g.removed), "inserted": names(&p, &g.inserted) }));
            let r = match witness {
                Some(w) if !smc => VerificationReport::fail("strongly_maximal", w),
                _ => VerificationReport::pass("strongly_maximal", None),
            };
            Output::report(r)
        }
    })
}

fn ot_cmd(cmd: OtCmd) -> Result<Output> {
    Ok(match cmd {
        OtCmd::Check { term } => {
            let t = parse_term(&term)?;
            let report = OrderTypeReport::new(&t);
            Output::plain(serde_json::to_value(report)?, format!("checked {t}"))
        }
        OtCmd::Parse { term } => {
            let t = parse_term(&term)?;
            Output::plain(json!({ "term": t.render() }), t.render())
        }
        OtCmd::Reverse { term } => {
            let r = parse_term(&term)?.reverse().normalize();
            Output::plain(json!({ "term": r.render() }), r.render())
        }
    })
}

fn family_cmd(cmd: FamilyCmd) -> Result<Output> {
    Ok(match cmd {
        FamilyCmd::Window { family, spec, out } => {
            let f: FamilyId = family.parse()?;
            let spec: WindowSpec = spec.parse()?;
            let w = window(f, &spec)?;
            let body = serde_json::to_value(w.poset.to_file())?;
            let summary = format!("{f} window {spec} with {} elements", w.poset.len());
            match out {
                Some(path) => {
                    fs::write(&path, serde_json::to_string_pretty(&body)? + "\n")
                        .with_context(|| format!("writing {}", path.display()))?;
                    Output::plain(json!({ "written": path.display().to_string(), "elements": w.poset.len() }), summary)
                }
                None => Output::plain(body, summary),
            }
        }
        FamilyCmd::Check { family, claim, params } => {
            let f: FamilyId = family.parse()?;
            let c = Claim::parse(f, &claim, &parse_params(&params)?)?;
            Output::report(verify_claim(f, &c)?)
        }
        FamilyCmd::Cofinal { family, upper, lower, bound, slack } => {
            let f: FamilyId = family.parse()?;
            let (u, l): (NamedSubsetId, NamedSubsetId) = (upper.parse()?, lower.parse()?);
            Output::report(check_bounded_cofinally_above(f, u, l, &bound.parse()?, &parse_slack(&slack)?)?)
        }
        FamilyCmd::Bicomparable { family, a, b, bound, slack } => {
            let f: FamilyId = family.parse()?;
            let (a, b): (NamedSubsetId, NamedSubsetId) = (a.parse()?, b.parse()?);
            Output::report(check_bounded_bicomparable(f, a, b, &bound.parse()?, &parse_slack(&slack)?)?)
        }
    })
}

fn verify_cmd(cmd: VerifyCmd, cfg: &SweepConfig) -> Result<Output> {
    Ok(match cmd {
        VerifyCmd::Rows { ell } => Output::report(verifier::verify_constant_on_rows(ell)?),
        VerifyCmd::Counting { a } => Output::report(verifier::verify_final_counting(a)?),
        VerifyCmd::Mindrop { u, v, bound } => Output::report(verifier::verify_min_drop(u, v, bound)?),
        VerifyCmd::Levels { n, s, bound } => Output::report(verifier::verify_level_structure(n, s, bound)?),
        VerifyCmd::Width { bound } => Output::report(verifier::verify_single_level_width(bound)?),
        VerifyCmd::All { preset: Preset::Desk } => Output::sweep(run_desk_sweep(cfg)),
    })
}

fn run(cli: Cli) -> Result<Output> {
    let cfg = SweepConfig { seed: cli.seed, budget: cli.budget_seconds.map(Duration::from_secs) };
    match cli.command {
        Command::Poset(c) => poset_cmd(c),
        Command::Ot(c) => ot_cmd(c),
        Command::Family(c) => family_cmd(c),
        Command::Verify(c) => verify_cmd(c, &cfg),
        Command::Sweep => Ok(Output::sweep(run_desk_sweep(&cfg))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(cli) {
        Ok(out) => {
            match serde_json::to_string_pretty(&out.body) {
                Ok(text) => println!("{text}"),
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            eprintln!("{} ({:.2?})", out.summary, start.elapsed());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_parse() {
        let p = parse_params("N=3, m=2").unwrap();
        assert_eq!(p["N"], 3);
        assert_eq!(p["m"], 2);
        assert!(parse_params("m").is_err());
        assert!(parse_params("m=x").is_err());
        assert!(parse_params("").unwrap().is_empty());
        assert_eq!(parse_slack("0, 3,3").unwrap(), vec![0, 3, 3]);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
