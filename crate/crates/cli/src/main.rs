use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use meadow::finite_meadows::{
    classify_minimal, decompose, format_classification, standard_battery,
};
use meadow::logic::{battery_check, encode_conditional, ConditionalEquation, Statement};
use meadow::models::{FiniteModel, Model, ModelOptions, ModelRegistry};
use meadow::structures::{parse_structure, write_structure};
use meadow::terms::parse_term;
use meadow::vnr::RawRing;
use meadow::Error;

#[derive(Parser, Debug)]
#[command(
    name = "meadow",
    version,
    about = "Finite meadows and zero-totalized fields"
)]
struct Cli {
    /// Seed for the rational sampler.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Samples per check in the rationals.
    #[arg(long, global = true, default_value_t = 500)]
    samples: usize,
    /// Largest carrier a model spec may build (default 1000000); for
    /// `classify`, the largest k (default 30).
    #[arg(long, global = true)]
    bound: Option<u128>,
    /// Inverse strategy for `mdk:` models.
    #[arg(long, global = true, default_value = "scan")]
    inverse: String,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Evaluate a term in a model.
    Eval {
        term: String,
        #[arg(long)]
        model: String,
        /// Variable bindings, `x=2,y=1/3`.
        #[arg(long, default_value = "")]
        assign: String,
    },
    /// Check an equation or conditional in each model (default: the standard battery and q).
    Check {
        statement: String,
        #[arg(long)]
        model: Vec<String>,
    },
    /// Print the operation tables of a finite model.
    Table { model: String },
    /// Encode a conditional equation as a single equation.
    Encode { conditional: String },
    /// Expand a finite regular ring (structure file) to a meadow.
    Expand { file: PathBuf },
    /// Embed a finite meadow into a product of fields.
    Decompose { model: String },
    /// List the minimal meadows Md_k for squarefree k up to the bound.
    Classify,
    /// List model specs and inverse strategies.
    Models,
}

enum Outcome {
    Ok(String),
    Invalid(String),
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. }
        | Error::Format { .. }
        | Error::Io(_)
        | Error::UnknownModel(_)
        | Error::UnknownStrategy(_)
        | Error::UnsupportedPremise(_)
        | Error::NotPrime(_)
        | Error::InvalidStructure(_) => 2,
        Error::UnboundVariable(_) | Error::MissingInverseTable(_) => 3,
        Error::SizeOverflow { .. } | Error::SearchBoundExceeded(_) => 4,
        Error::NotRegular { .. } => 5,
        Error::DecompositionNotFound { .. } => 6,
        _ => 1,
    }
}

fn parse_assign(src: &str) -> Result<BTreeMap<String, String>, Error> {
    let mut out = BTreeMap::new();
    for pair in src.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = pair.split_once('=').ok_or_else(|| Error::Syntax {
            pos: 0,
            msg: format!("binding `{pair}` is not of the form name=value"),
        })?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let options = ModelOptions {
        seed: cli.seed,
        samples: cli.samples,
        bound: cli.bound.unwrap_or(1_000_000),
        inverse: cli.inverse.clone(),
    };
    let reg = ModelRegistry::builtin(options);
    match &cli.cmd {
        Cmd::Eval {
            term,
            model,
            assign,
        } => {
            let t = parse_term(term)?;
            let a = parse_assign(assign)?;
            let m = reg.resolve(model)?;
            Ok(Outcome::Ok(format!("{}\n", m.eval(&t, &a)?)))
        }
        Cmd::Check { statement, model } => {
            let st = Statement::parse(statement)?;
            let models: Vec<Box<dyn Model>> = if model.is_empty() {
                let mut ms: Vec<Box<dyn Model>> = standard_battery()?
                    .into_iter()
                    .map(|d| Box::new(FiniteModel::new(d.realized)) as Box<dyn Model>)
                    .collect();
                ms.push(reg.resolve("q")?);
                ms
            } else {
                model
                    .iter()
                    .map(|s| reg.resolve(s))
                    .collect::<Result<_, _>>()?
            };
            let report = battery_check(&st, &models);
            if let Some(e) = report.rows.iter().find_map(|r| r.verdict.as_ref().err()) {
                if exit_code(e) != 1 {
                    return Err(e.clone());
                }
            }
            let text = report.to_string();
            Ok(if report.all_valid() {
                Outcome::Ok(text)
            } else {
                Outcome::Invalid(text)
            })
        }
        Cmd::Table { model } => Ok(Outcome::Ok(write_structure(
            &*reg.resolve_structure(model)?,
        ))),
        Cmd::Encode { conditional } => {
            let ce = ConditionalEquation::parse(conditional)?;
            let eq = encode_conditional(&ce)?;
            let n = ce.premises.len();
            let mut out = String::new();
            let schema = match n {
                0 => "t=0".to_string(),
                _ => {
                    let u = (2..=n).fold("t1".to_string(), |acc, i| format!("U({acc},t{i})"));
                    format!("C({u},t)=0")
                }
            };
            let _ = writeln!(out, "{schema}");
            for (i, p) in ce.premises.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "t{} := {}",
                    i + 1,
                    meadow::logic::normalize_to_zero(&p.equation).lhs
                );
            }
            let _ = writeln!(
                out,
                "t := {}",
                meadow::logic::normalize_to_zero(&ce.conclusion.equation).lhs
            );
            let _ = writeln!(out, "{eq}");
            Ok(Outcome::Ok(out))
        }
        Cmd::Expand { file } => {
            let src = std::fs::read_to_string(file)
                .map_err(|e| Error::Io(format!("{}: {e}", file.display())))?;
            let ring = RawRing::new(parse_structure(&src)?)?;
            Ok(Outcome::Ok(write_structure(&ring.expand_to_meadow()?)))
        }
        Cmd::Decompose { model } => {
            let s = reg.resolve_structure(model)?;
            let d = decompose(&s)?;
            let mut out = String::new();
            for (i, h) in d.components.iter().enumerate() {
                let map: Vec<String> = h.map().iter().map(|e| e.to_string()).collect();
                let _ = writeln!(
                    out,
                    "component {}: onto {}\t{}",
                    i + 1,
                    h.target().name(),
                    map.join(" ")
                );
            }
            let _ = writeln!(
                out,
                "diagonal into {}: injective, {}",
                d.product.name(),
                if d.diagonal.is_surjective() {
                    "onto"
                } else {
                    "not onto"
                }
            );
            Ok(Outcome::Ok(out))
        }
        Cmd::Classify => {
            let up_to = u64::try_from(cli.bound.unwrap_or(30)).unwrap_or(u64::MAX);
            Ok(Outcome::Ok(format_classification(&classify_minimal(
                up_to,
            )?)))
        }
        Cmd::Models => {
            let mut out = String::from("models:\n");
            for f in reg.factories() {
                let _ = writeln!(out, "  {}", f.summary());
            }
            out.push_str("inverse strategies:\n");
            for s in reg.inverses.iter() {
                let _ = writeln!(out, "  {:<12} {}", s.name(), s.description());
            }
            Ok(Outcome::Ok(out))
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Error> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|o| {
        let (text, code) = match o {
            Outcome::Ok(t) => (t, 0),
            Outcome::Invalid(t) => (t, 1),
        };
        emit(&cli, &text).map(|_| code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("meadow: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
