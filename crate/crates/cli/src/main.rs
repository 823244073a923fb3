//! Command line interface for the verification suite: conjecture scans,
//! the structure constant scan, the isogeny suite, the counterexample
//! computation and direct Jack expansions.

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use sphmul::harness::{
    check_pair, run_counterexample, run_isogeny_suite, run_stanley_scan, ReportBody, RunReport,
};
use sphmul::jack::JackRing;
use sphmul::partition::Partition;
use sphmul::sphdata::{
    case_ids, default_params, instantiate_case, validate_database, verify_isogeny,
    DictOrientation,
};

#[derive(Parser)]
#[command(
    name = "sphmul",
    about = "Exact verification of decomposition rules for spherical pairs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args)]
struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    /// Maximum symmetric function degree.
    #[arg(long, global = true, default_value_t = 12)]
    degree_cap: u32,

    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Dictionary {
    Default,
    Alt,
}

#[derive(Subcommand)]
enum Command {
    /// Scan the Jack structure constants for negative coefficients.
    CheckStanley {
        /// Largest total degree |lambda| + |mu| scanned.
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
    },
    /// Compare the product oracle against the tensor/order rule for one case.
    CheckPair {
        /// Case id, such as Sym.A1 or Sph.A13.
        #[arg(long = "case")]
        case: String,
        /// Rank parameters, repeatable: --param n=3.
        #[arg(long = "param", value_parser = parse_param)]
        param: Vec<(String, i64)>,
        /// Bound on the total dictionary degree of the pair.
        #[arg(long, default_value_t = 6)]
        bound: i64,
        /// Orientation of the weight dictionary.
        #[arg(long, value_enum, default_value_t = Dictionary::Default)]
        dictionary: Dictionary,
    },
    /// Check the isogeny axioms for one case or the whole default grid.
    VerifyIsogeny {
        #[arg(long = "case")]
        case: Option<String>,
        #[arg(long = "param", value_parser = parse_param)]
        param: Vec<(String, i64)>,
    },
    /// Reproduce the character-level counterexample to the naive rule.
    Counterexample,
    /// Print Jack expansions and the structure constants of a product.
    Jack {
        /// Partition, comma separated parts: --lambda 2,1
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
    },
    /// List the case ids known to the database.
    ListCases,
}

fn parse_param(s: &str) -> Result<(String, i64), String> {
    let (k, v) = s.split_once('=').ok_or("expected key=value")?;
    let v: i64 = v.parse().map_err(|_| "value must be an integer")?;
    Ok((k.to_string(), v))
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    if s.trim().is_empty() || s.trim() == "0" {
        return Ok(Partition::empty());
    }
    let parts: Result<Vec<u32>, _> = s.split(',').map(|x| x.trim().parse::<u32>()).collect();
    let parts = parts.map_err(|_| "parts must be positive integers")?;
    Partition::new(parts).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(ok) => {
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    if cli.global.jobs > 0 {
        rayon_pool(cli.global.jobs)?;
    }
    validate_database().context("case database validation")?;

    let command_echo = std::env::args().collect::<Vec<_>>().join(" ");
    let ring = JackRing::new(cli.global.degree_cap);

    let (report, extra_text): (Option<RunReport>, Option<String>) = match &cli.command {
        Command::CheckStanley { max_degree } => (
            Some(run_stanley_scan(&ring, *max_degree, command_echo)?),
            None,
        ),
        Command::CheckPair {
            case,
            param,
            bound,
            dictionary,
        } => {
            let params: BTreeMap<String, i64> = param.iter().cloned().collect();
            let dict = match dictionary {
                Dictionary::Default => DictOrientation::Default,
                Dictionary::Alt => DictOrientation::Alt,
            };
            let record_all = cli.global.format == Format::Csv;
            (
                Some(check_pair(
                    &ring,
                    case,
                    &params,
                    *bound,
                    dict,
                    record_all,
                    command_echo,
                )?),
                None,
            )
        }
        Command::VerifyIsogeny { case, param } => match case {
            None => (Some(run_isogeny_suite(command_echo)?), None),
            Some(id) => {
                let mut params = default_params(id);
                for (k, v) in param {
                    params.insert(k.clone(), *v);
                }
                let c = instantiate_case(id, &params, DictOrientation::Default)?;
                let entry = verify_isogeny(&c)?;
                let all_pass = entry.pass;
                (
                    Some(RunReport {
                        command: command_echo,
                        config: sphmul::harness::ConfigEcho {
                            case: Some(id.clone()),
                            params,
                            bound: None,
                            max_degree: None,
                            dictionary: "default".into(),
                            degree_cap: cli.global.degree_cap,
                        },
                        body: ReportBody::IsogenySuite {
                            entries: vec![entry],
                            all_pass,
                        },
                        wall_ms: 0,
                    }),
                    None,
                )
            }
        },
        Command::Counterexample => (Some(run_counterexample(command_echo)?), None),
        Command::Jack { lambda, mu } => (None, Some(jack_text(&ring, lambda, mu)?)),
        Command::ListCases => {
            let mut out = String::new();
            for id in case_ids() {
                let defaults = default_params(id);
                if defaults.is_empty() {
                    out.push_str(&format!("{}\n", id));
                } else {
                    let ps: Vec<String> =
                        defaults.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
                    out.push_str(&format!("{} (default {})\n", id, ps.join(" ")));
                }
            }
            (None, Some(out))
        }
    };

    let mut ok = true;
    let rendered = match (&report, extra_text) {
        (Some(r), _) => {
            ok = r.ok();
            match cli.global.format {
                Format::Json => r.to_json(),
                Format::Csv => render_csv(r),
                Format::Text => render_text(r),
            }
        }
        (None, Some(t)) => t,
        _ => unreachable!(),
    };

    match &cli.global.output {
        Some(path) => {
            std::fs::write(path, rendered.as_bytes())
                .with_context(|| format!("writing {}", path.display()))?;
        }
        None => {
            std::io::stdout().write_all(rendered.as_bytes())?;
            if !rendered.ends_with('\n') {
                println!();
            }
        }
    }
    Ok(ok)
}

fn rayon_pool(jobs: usize) -> anyhow::Result<()> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .map_err(|e| anyhow!("thread pool: {}", e))
}

fn jack_text(ring: &JackRing, lambda: &Partition, mu: &Partition) -> anyhow::Result<String> {
    let mut out = String::new();
    for p in [lambda, mu] {
        let j = ring.jack_j(p)?;
        out.push_str(&format!("J_{} =", p));
        let mut first = true;
        for (nu, c) in &j.monomial_coeffs {
            if !first {
                out.push_str(" +");
            }
            out.push_str(&format!(" ({}) m_{}", c, nu));
            first = false;
        }
        out.push('\n');
        out.push_str(&format!("j_{} = {}\n", p, ring.jack_norm_j(p)?));
    }
    out.push('\n');
    out.push_str(&format!(
        "structure constants g for J_{} * J_{}:\n",
        lambda, mu
    ));
    let table = ring.structure_constants(lambda, mu)?;
    for (nu, g) in table.iter() {
        out.push_str(&format!("  g^{} = {}\n", nu, g));
    }
    if table.is_empty() {
        out.push_str("  (empty)\n");
    }
    Ok(out)
}

fn render_text(r: &RunReport) -> String {
    let mut out = String::new();
    match &r.body {
        ReportBody::ConjectureScan {
            counts, witnesses, ..
        } => {
            out.push_str(&format!(
                "case {} {:?}: {} triples, {} agreements, {} disagreements, {} without oracle\n",
                r.config.case.as_deref().unwrap_or("?"),
                r.config.params,
                counts.triples,
                counts.agreements,
                counts.disagreements,
                counts.lhs_unavailable
            ));
            for w in witnesses {
                out.push_str(&format!(
                    "  DISAGREEMENT lam={:?} mu={:?} nu={:?} lhs={:?} tensor={} order={}\n",
                    w.lam, w.mu, w.nu, w.lhs, w.rhs_tensor, w.rhs_order
                ));
            }
            out.push_str(if counts.disagreements == 0 {
                "result: PASS\n"
            } else {
                "result: DISAGREEMENTS FOUND\n"
            });
        }
        ReportBody::StanleyScan {
            pairs,
            constants,
            violations,
        } => {
            out.push_str(&format!(
                "structure constant scan: {} pairs, {} constants checked\n",
                pairs, constants
            ));
            for v in violations {
                out.push_str(&format!(
                    "  NEGATIVE COEFFICIENT g_({},{})^{} = {}\n",
                    v.lam, v.mu, v.nu, v.constant
                ));
            }
            out.push_str(if violations.is_empty() {
                "result: PASS (all coefficients nonnegative integers)\n"
            } else {
                "result: VIOLATIONS FOUND\n"
            });
        }
        ReportBody::IsogenySuite { entries, all_pass } => {
            for e in entries {
                let idx = e
                    .cokernel_index
                    .as_ref()
                    .map(|i| i.to_string())
                    .unwrap_or_else(|| "infinite".into());
                out.push_str(&format!(
                    "{} {:?} -> {:?}: {} (index {})\n",
                    e.case_id,
                    e.params,
                    e.targets,
                    if e.pass { "pass" } else { "FAIL" },
                    idx
                ));
                for w in &e.witnesses {
                    out.push_str(&format!("    {}\n", w));
                }
            }
            out.push_str(if *all_pass {
                "result: PASS\n"
            } else {
                "result: FAILURES FOUND\n"
            });
        }
        ReportBody::Counterexample { checks, all_pass } => {
            for c in checks {
                out.push_str(&format!(
                    "{}: expected {}, got {} [{}]\n",
                    c.name,
                    c.expected,
                    c.got,
                    if c.pass { "ok" } else { "FAIL" }
                ));
            }
            out.push_str(if *all_pass {
                "result: PASS (counterexample to the naive rule reproduced)\n"
            } else {
                "result: FAILURES FOUND\n"
            });
        }
    }
    out.push_str(&format!("wall time: {} ms\n", r.wall_ms));
    out
}

fn render_csv(r: &RunReport) -> String {
    let mut out = String::new();
    match &r.body {
        ReportBody::ConjectureScan {
            witnesses, verdicts, ..
        } => {
            out.push_str("case,params,lam,mu,nu,lhs,rhs_tensor,rhs_order,agree\n");
            let rows = verdicts.as_ref().unwrap_or(witnesses);
            for v in rows {
                let params: Vec<String> =
                    v.params.iter().map(|(k, x)| format!("{}={}", k, x)).collect();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    v.case_id,
                    params.join(";"),
                    join_coords(&v.lam),
                    join_coords(&v.mu),
                    join_coords(&v.nu),
                    opt_bool(&v.lhs),
                    v.rhs_tensor,
                    v.rhs_order,
                    opt_bool(&v.agree),
                ));
            }
        }
        ReportBody::StanleyScan {
            pairs,
            constants,
            violations,
        } => {
            out.push_str("key,value\n");
            out.push_str(&format!("pairs,{}\n", pairs));
            out.push_str(&format!("constants,{}\n", constants));
            out.push_str(&format!("violations,{}\n", violations.len()));
        }
        ReportBody::IsogenySuite { entries, .. } => {
            out.push_str("case,params,targets,injective,index,base_bijection,coroots,pass\n");
            for e in entries {
                let params: Vec<String> =
                    e.params.iter().map(|(k, x)| format!("{}={}", k, x)).collect();
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    e.case_id,
                    params.join(";"),
                    e.targets.join(";"),
                    e.injective,
                    e.cokernel_index
                        .as_ref()
                        .map(|i| i.to_string())
                        .unwrap_or_else(|| "inf".into()),
                    e.base_bijection,
                    e.coroot_compatible,
                    e.pass
                ));
            }
        }
        ReportBody::Counterexample { checks, .. } => {
            out.push_str("name,expected,got,pass\n");
            for c in checks {
                out.push_str(&format!("{},{},{},{}\n", c.name, c.expected, c.got, c.pass));
            }
        }
    }
    out
}

fn join_coords(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn opt_bool(b: &Option<bool>) -> String {
    match b {
        Some(true) => "true".into(),
        Some(false) => "false".into(),
        None => "unavailable".into(),
    }
}
