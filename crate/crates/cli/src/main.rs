//! `jacquet`: Jacquet-module calculus and the case verifier from the shell.
//!
//! Exit status is 0 when every requested check passes, 1 when a check
//! fails and 2 on malformed input.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use jacquet::classical::mu_star;
use jacquet::langlands::{classify_case, concatenated_bound, subquotient_enumerate, tensor_mult_upper_bound};
use jacquet::regular::aubert_dual_param;
use jacquet::syntax::{parse_classical, parse_gl, parse_param, parse_word};
use jacquet::verifier::{sweep, verify, write_golden, VerificationReport, DEFAULT_MAX_N};
use jacquet::{gl, Basis, Case, Combination, CuspidalContext, Exec, Exponent};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "jacquet", version, about = "Jacquet modules on a single cuspidal line")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest rank accepted by enumerate, verify and sweep.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    /// Run data-parallel loops on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Comultiplication m* of a GL expression, or M* with --twisted.
    Mstar {
        expr: String,
        #[arg(long)]
        twisted: bool,
    },
    /// The coaction mu* of a classical expression.
    Mustar {
        expr: String,
        #[arg(long, default_value = "1/2")]
        alpha: String,
    },
    /// Upper bound for the multiplicity of LEFT (x) RIGHT in mu* of EXPR,
    /// computed by the split route and the concatenated-word route.
    Mult {
        left: String,
        right: String,
        expr: String,
        #[arg(long, default_value = "1/2")]
        alpha: String,
    },
    /// Zelevinsky involution of a GL expression, or Aubert dual of a
    /// subquotient parameter.
    Dual {
        expr: String,
        #[arg(long, default_value = "1/2")]
        alpha: String,
    },
    /// Subquotient parameters of rank n with their cases.
    Enumerate {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        n: usize,
    },
    /// Verify every parameter of rank n, or only --gamma.
    Verify {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Verify a grid of (alpha, n) and optionally write the report tree.
    Sweep {
        #[arg(long, value_delimiter = ',', default_value = "1/2,1,3/2")]
        alphas: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        ns: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Outcome of a command: what to print and whether everything passed.
struct Outcome {
    text: String,
    json: Value,
    pass: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, pass: true }
    }
}

fn terms<K: Basis>(x: &Combination<K>) -> Value {
    Value::Array(
        x.iter()
            .map(|(k, c)| json!({ "basis": k.render(), "coeff": c.to_string() }))
            .collect(),
    )
}

fn context(alpha: &str) -> Result<CuspidalContext> {
    CuspidalContext::from_str_alpha(alpha).with_context(|| format!("bad --alpha {alpha}"))
}

fn check_rank(n: usize, max_n: usize) -> Result<()> {
    if n < 1 || n > max_n {
        bail!("n={n} outside 1..={max_n}");
    }
    Ok(())
}

fn report_outcome(reports: Vec<VerificationReport>) -> Outcome {
    let pass = reports.iter().all(|r| r.pass);
    let text = reports
        .iter()
        .map(VerificationReport::render_text)
        .collect::<Vec<_>>()
        .join("\n");
    let json = serde_json::to_value(&reports).expect("reports serialize");
    Outcome { text, json, pass }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    Ok(match &cli.command {
        Command::Mstar { expr, twisted } => {
            let x = parse_gl(expr)?;
            let m = if *twisted { gl::twisted_mstar(&x) } else { gl::mstar(&x) };
            Outcome::ok(
                m.to_string(),
                json!({ "input": x.to_string(), "twisted": twisted, "terms": terms(&m) }),
            )
        }
        Command::Mustar { expr, alpha } => {
            let ctx = context(alpha)?;
            let x = parse_classical(expr, &ctx)?;
            let m = mu_star(&x, &ctx)?;
            Outcome::ok(
                m.to_string(),
                json!({ "input": x.to_string(), "alpha": alpha, "terms": terms(&m) }),
            )
        }
        Command::Mult {
            left,
            right,
            expr,
            alpha,
        } => {
            let ctx = context(alpha)?;
            let (l, r) = (parse_word(left)?, parse_word(right)?);
            let x = parse_classical(expr, &ctx)?;
            let split = tensor_mult_upper_bound(&l, &r, &x, &ctx)?;
            let concat = concatenated_bound(&l, &r, &x, &ctx)?;
            Outcome {
                text: format!("split route {split}, concatenated route {concat}"),
                json: json!({ "left": l.to_string(), "right": r.to_string(), "input": x.to_string(),
                              "split": split.to_string(), "concatenated": concat.to_string() }),
                pass: split == concat,
            }
        }
        Command::Dual { expr, alpha } => match parse_gl(expr) {
            Ok(x) => {
                let d = gl::involution_ring(&x)?;
                Outcome::ok(d.to_string(), json!({ "input": x.to_string(), "terms": terms(&d) }))
            }
            Err(gl_err) => {
                let ctx = context(alpha)?;
                let g = parse_param(expr, &ctx)
                    .map_err(|e| anyhow::anyhow!("not a GL expression ({gl_err}) nor a parameter ({e})"))?;
                let d = aubert_dual_param(&g, &ctx);
                Outcome::ok(d.to_string(), json!({ "input": g.to_string(), "dual": d.to_string() }))
            }
        },
        Command::Enumerate { alpha, n } => {
            check_rank(*n, cli.max_n)?;
            let ctx = context(alpha)?;
            let params = subquotient_enumerate(*n, &ctx);
            let rows: Vec<(String, Case)> = params.iter().map(|g| (g.to_string(), classify_case(g))).collect();
            let text = rows
                .iter()
                .map(|(g, c)| format!("{c:<9} {g}"))
                .collect::<Vec<_>>()
                .join("\n");
            let json = Value::Array(
                rows.iter()
                    .map(|(g, c)| json!({ "gamma": g, "case": c.to_string() }))
                    .collect(),
            );
            Outcome::ok(text, json)
        }
        Command::Verify { alpha, n, gamma } => {
            let ctx = context(alpha)?;
            let todo = match (gamma, n) {
                (Some(g), _) => {
                    let g = parse_param(g, &ctx)?;
                    check_rank(g.n(), cli.max_n)?;
                    if classify_case(&g) == Case::Exception {
                        bail!("{g} is one of the two excluded parameters");
                    }
                    vec![g]
                }
                (None, Some(n)) => {
                    check_rank(*n, cli.max_n)?;
                    subquotient_enumerate(*n, &ctx)
                        .into_iter()
                        .filter(|g| classify_case(g) != Case::Exception)
                        .collect()
                }
                (None, None) => bail!("verify needs --n or --gamma"),
            };
            let reports = exec
                .map(&todo, |g| verify(g, &ctx))
                .into_iter()
                .collect::<jacquet::Result<Vec<_>>>()?;
            report_outcome(reports)
        }
        Command::Sweep { alphas, ns, out } => {
            let alphas = alphas
                .iter()
                .map(|a| Exponent::parse(a).with_context(|| format!("bad alpha {a}")))
                .collect::<Result<Vec<_>>>()?;
            let s = match sweep(&alphas, ns, cli.max_n, exec) {
                Ok(s) => s,
                Err(jacquet::Error::Verification(why)) => {
                    return Ok(Outcome {
                        text: why.clone(),
                        json: json!({ "failure": why }),
                        pass: false,
                    })
                }
                Err(e) => return Err(e.into()),
            };
            if let Some(dir) = out {
                write_golden(dir, &s)?;
            }
            let text = s
                .summaries
                .iter()
                .map(|m| {
                    format!(
                        "alpha={} n={}: {} parameters, {} verified (A={}, B={}, C={}), excluded {}",
                        m.alpha,
                        m.n,
                        m.parameters,
                        m.passed,
                        m.case_a,
                        m.case_b,
                        m.case_c,
                        m.exceptions.join(" and ")
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            Outcome::ok(text, serde_json::to_value(&s.summaries).expect("summaries serialize"))
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json renders"));
            } else {
                println!("{}", out.text);
            }
            if out.pass {
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
