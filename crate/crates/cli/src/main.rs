use clap::{Parser, Subcommand};
use gsmod::corpus::{
    conformal_presentation, conformal_verma, kac_moody_presentation, negative_part,
    sl2_presentation, verma_presentation, CartanData, ConformalConfig,
};
use gsmod::scalar::{int, Scalar};
use gsmod::{
    dimension_oracle, emit_presentation, is_gsb, parse_expr, parse_presentation, red_words,
    shirshov_complete, CheckMode, CompletionStatus, Expr, Presentation, DEFAULT_BUDGET,
    DEFAULT_STEP_CAP,
};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

/// Groebner-Shirshov bases for free algebras and double-free modules.
#[derive(Parser)]
#[command(name = "gsmod", version)]
struct Cli {
    /// Maximum number of elimination steps per normal form.
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_CAP)]
    step_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether the relations form a Groebner-Shirshov basis.
    Check {
        file: PathBuf,
        /// algebra, left-ideal, module or pair; deduced from the file if absent.
        #[arg(long)]
        mode: Option<CheckMode>,
    },
    /// Run the Shirshov completion up to a degree cap.
    Complete {
        file: PathBuf,
        #[arg(long)]
        max_deg: usize,
        #[arg(long)]
        mode: Option<CheckMode>,
    },
    /// Reduce an expression to normal form.
    Nf {
        file: PathBuf,
        #[arg(long)]
        expr: String,
    },
    /// List the reduced words up to a degree cap.
    Basis {
        file: PathBuf,
        #[arg(long)]
        max_deg: usize,
        /// Compare the counts against exact linear algebra.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        mode: Option<CheckMode>,
        #[arg(long, default_value_t = 5 * DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Build a presentation from the built-in corpus.
    Example {
        #[command(subcommand)]
        name: Example,
        /// Print the presentation in the file format instead of checking it.
        #[arg(long, global = true)]
        emit: bool,
    },
}

#[derive(Subcommand)]
enum Example {
    /// Finite-dimensional sl2 module of highest weight lambda.
    Sl2 {
        #[arg(long, default_value_t = 3)]
        m: usize,
        /// Highest weight, an integer or fraction; defaults to m.
        #[arg(long)]
        lambda: Option<Scalar>,
    },
    /// Kac-Moody algebra of a finite Cartan type.
    KacMoody {
        #[arg(long = "type", default_value = "A2")]
        cartan: String,
    },
    /// Serre relations of the negative part.
    Negative {
        #[arg(long = "type", default_value = "A2")]
        cartan: String,
    },
    /// Verma module of a Kac-Moody algebra.
    Verma {
        #[arg(long = "type", default_value = "A2")]
        cartan: String,
        /// Comma-separated highest weights, one per simple root.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weights: Vec<Scalar>,
        #[arg(long, default_value_t = 6)]
        completion_cap: usize,
    },
    /// Coefficient algebra of a conformal algebra on a finite window.
    Conformal {
        #[arg(long, value_delimiter = ',', default_value = "a")]
        symbols: Vec<String>,
        #[arg(long, default_value_t = 1)]
        locality: u32,
        #[arg(long, allow_hyphen_values = true, default_value_t = -3)]
        lo: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 2)]
        hi: i64,
        /// Use the Verma-type module instead of the algebra.
        #[arg(long)]
        verma: bool,
    },
}

struct Report {
    text: String,
    code: u8,
}

fn deduced(p: &Presentation, mode: Option<CheckMode>) -> CheckMode {
    mode.unwrap_or(match p {
        Presentation::Algebra(_) => CheckMode::Algebra,
        Presentation::Module(_) => CheckMode::Pair,
    })
}

fn load(path: &PathBuf) -> Result<Presentation, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_presentation(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn example(name: &Example, step_cap: usize) -> gsmod::Result<Presentation> {
    Ok(match name {
        Example::Sl2 { m, lambda } => {
            let lambda = lambda.clone().unwrap_or_else(|| int(*m as i64));
            sl2_presentation(*m, lambda).into()
        }
        Example::KacMoody { cartan } => {
            kac_moody_presentation(&CartanData::of_type(cartan)?).into()
        }
        Example::Negative { cartan } => negative_part(&CartanData::of_type(cartan)?).into(),
        Example::Verma {
            cartan,
            weights,
            completion_cap,
        } => {
            let c = CartanData::of_type(cartan)?;
            let weights = if weights.is_empty() {
                vec![int(0); c.rank()]
            } else {
                weights.clone()
            };
            verma_presentation(&c, &weights, *completion_cap, step_cap)?.into()
        }
        Example::Conformal {
            symbols,
            locality,
            lo,
            hi,
            verma,
        } => {
            let cfg = ConformalConfig::new(symbols.clone(), *locality, *lo, *hi)?;
            if *verma {
                conformal_verma(&cfg)?.into()
            } else {
                conformal_presentation(&cfg)?.into()
            }
        }
    })
}

fn check(p: &Presentation, mode: CheckMode, step_cap: usize) -> gsmod::Result<Report> {
    let report = is_gsb(p, mode, step_cap)?;
    Ok(Report {
        text: report.render(&p.signature()),
        code: if report.is_gsb() { 0 } else { 1 },
    })
}

fn run(cli: &Cli) -> Result<Report, String> {
    let step_cap = cli.step_cap;
    let e = |e: gsmod::Error| e.to_string();
    match &cli.command {
        Command::Check { file, mode } => {
            let p = load(file)?;
            check(&p, deduced(&p, *mode), step_cap).map_err(e)
        }
        Command::Complete {
            file,
            max_deg,
            mode,
        } => {
            let p = load(file)?;
            let c = shirshov_complete(&p, deduced(&p, *mode), *max_deg, step_cap).map_err(e)?;
            let code = if c.status() == CompletionStatus::Closed {
                0
            } else {
                1
            };
            Ok(Report {
                text: c.render(&p.signature()),
                code,
            })
        }
        Command::Nf { file, expr } => {
            let p = load(file)?;
            let sig = p.signature();
            let text = match parse_expr(expr, &sig).map_err(e)? {
                Expr::Algebra(f) => {
                    let nf = p
                        .algebra()
                        .rule_set()
                        .normal_form(&f, step_cap)
                        .map_err(e)?;
                    nf.value.display(&sig).to_string()
                }
                Expr::Module(f) => {
                    let Presentation::Module(m) = &p else {
                        return Err("module expression needs module generators".into());
                    };
                    let nf = m.rule_set().normal_form(&f, step_cap).map_err(e)?;
                    nf.value.display(&sig).to_string()
                }
            };
            Ok(Report { text, code: 0 })
        }
        Command::Basis {
            file,
            max_deg,
            oracle,
            mode,
            budget,
        } => {
            let p = load(file)?;
            let mode = deduced(&p, *mode);
            let mut basis = red_words(&p, mode, *max_deg).map_err(e)?;
            if *oracle {
                let oracle_mode = if mode == CheckMode::Pair {
                    CheckMode::Module
                } else {
                    mode
                };
                basis.set_oracle(dimension_oracle(&p, oracle_mode, *max_deg, *budget).map_err(e)?);
            }
            Ok(Report {
                text: basis.render(&p.signature()),
                code: 0,
            })
        }
        Command::Example { name, emit } => {
            let p = example(name, step_cap).map_err(e)?;
            if *emit {
                return Ok(Report {
                    text: emit_presentation(&p),
                    code: 0,
                });
            }
            let mode = deduced(&p, None);
            let mut report = check(&p, mode, step_cap).map_err(e)?;
            let mut text = String::new();
            let _ = writeln!(
                text,
                "{} presentation: {} relations",
                p.shape(),
                relation_count(&p)
            );
            text.push_str(&report.text);
            report.text = text;
            Ok(report)
        }
    }
}

fn relation_count(p: &Presentation) -> usize {
    p.algebra().relations().len() + p.as_module().map_or(0, |m| m.module_relations().len())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.text);
            if !report.text.ends_with('\n') {
                println!();
            }
            ExitCode::from(report.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
