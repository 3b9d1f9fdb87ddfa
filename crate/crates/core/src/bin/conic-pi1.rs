use std::error::Error;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use conic_pi1::catalog::{self, comparison_matrix, family_names, get_entry, matrix_table, report_json, report_table, verify, verify_all};
use conic_pi1::invariants::{bigness_certificate, compare, invariant_bundle, BignessPlan, ComparisonVerdict, Target};
use conic_pi1::local_models::get_model;
use conic_pi1::tracker::{track, ComplexRational, CurvePoly, LoopSpec};
use conic_pi1::van_kampen::{present, Factorization};
use conic_pi1::word::{parse_relations, simplify, Presentation, WordError};

#[derive(Parser)]
#[command(name = "conic-pi1", version, about = "Braid monodromy and fundamental groups of conic-line arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a local model's braid, half braid and relations.
    Local { model: String },
    /// Track the roots of a curve around a circle in the x-plane.
    Track {
        #[arg(long)]
        poly: String,
        /// Parameter range `t0,t1` within [0, 1].
        #[arg(long, default_value = "0,1")]
        range: String,
        /// Circle center `re,im`.
        #[arg(long, default_value = "0,0")]
        center: String,
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        #[arg(long, default_value_t = 256)]
        samples: usize,
    },
    /// Van Kampen presentation of a braid monodromy factorization.
    Present {
        #[arg(long)]
        factorization: PathBuf,
        #[arg(long)]
        projective: bool,
    },
    /// Tietze-simplify a presentation.
    Simplify {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long, default_value_t = catalog::SIMPLIFY_BUDGET)]
        budget: usize,
    },
    /// Abelianization and homomorphism counts.
    Invariants {
        #[arg(long)]
        presentation: PathBuf,
        /// Also count homomorphisms into S5.
        #[arg(long)]
        s5: bool,
    },
    /// Compare two presentations.
    Compare { a: PathBuf, b: PathBuf },
    /// Verify catalog entries against their expected groups.
    VerifyPaper {
        entry: Option<String>,
        #[arg(long, conflicts_with = "entry")]
        all: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Certify a surjection onto Z/2 * Z/3.
    Bigness {
        #[arg(long)]
        presentation: PathBuf,
        /// Generators to kill, e.g. `3,4`.
        #[arg(long, value_delimiter = ',')]
        kill: Vec<u32>,
        /// Relations to add after killing, e.g. `(x1 x2)^2`.
        #[arg(long)]
        extra: Option<String>,
    },
}

fn read_presentation(path: &Path) -> Result<Presentation, Box<dyn Error>> {
    Ok(Presentation::from_text(&fs::read_to_string(path)?)?)
}

fn pair(s: &str) -> Result<(f64, f64), Box<dyn Error>> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected two comma-separated numbers, got {:?}", s))?;
    Ok((a.trim().parse()?, b.trim().parse()?))
}

fn rational(x: f64) -> Result<BigRational, Box<dyn Error>> {
    BigRational::from_float(x).ok_or_else(|| format!("not a finite number: {}", x).into())
}

fn run(cmd: Command) -> Result<bool, Box<dyn Error>> {
    match cmd {
        Command::Local { model } => {
            let m = get_model(&model)?;
            println!("model:      {}", m.id);
            println!("equation:   {}", m.equation);
            println!("braid:      {}", m.braid);
            println!("half braid: {}", m.half_braid);
            println!("relations:  {}", m.published_relations);
            Ok(true)
        }
        Command::Track { poly, range, center, radius, samples } => {
            let p = CurvePoly::parse(&poly)?;
            let (re, im) = pair(&center)?;
            let lp = LoopSpec::new(ComplexRational::new(rational(re)?, rational(im)?), rational(radius)?)?.with_samples(samples)?;
            let t = track(&p, &lp, pair(&range)?)?;
            println!("braid:       {}", t.braid);
            println!("permutation: {}", t.permutation);
            println!("min gap:     {:.3e}", t.min_gap);
            println!("refinements: {}", t.refinements);
            Ok(true)
        }
        Command::Present { factorization, projective } => {
            let f = Factorization::parse(&fs::read_to_string(factorization)?)?;
            print!("{}", present(&f, projective).to_text());
            Ok(true)
        }
        Command::Simplify { presentation, budget } => {
            let p = read_presentation(&presentation)?;
            match simplify(&p, budget) {
                Ok(s) => {
                    print!("{}", s.presentation.to_text());
                    eprintln!("{} moves", s.trace.len());
                    Ok(true)
                }
                Err(WordError::BudgetExhausted { used, best }) => {
                    print!("{}", best.presentation.to_text());
                    eprintln!("budget exhausted after {} moves", used);
                    Ok(false)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Invariants { presentation, s5 } => {
            let p = read_presentation(&presentation)?;
            let mut targets = Target::DEFAULT.to_vec();
            if s5 {
                targets.push(Target::S5);
            }
            println!("{}", invariant_bundle(&p, &targets)?);
            Ok(true)
        }
        Command::Compare { a, b } => {
            let v = compare(&read_presentation(&a)?, &read_presentation(&b)?)?;
            match &v {
                ComparisonVerdict::Equivalent(_) => println!("Equivalent"),
                ComparisonVerdict::Distinct { witness } => println!("Distinct ({})", witness),
                ComparisonVerdict::Inconclusive { reason } => println!("Inconclusive ({})", reason),
            }
            Ok(true)
        }
        Command::VerifyPaper { entry, all, format } => {
            let (reports, matrices) = match (entry, all) {
                (Some(id), _) => (vec![verify(get_entry(&id)?)?], Vec::new()),
                (None, true) => {
                    let ms = family_names().iter().map(|f| comparison_matrix(f)).collect::<Result<Vec<_>, _>>()?;
                    (verify_all()?, ms)
                }
                (None, false) => return Err("give an entry id or --all".into()),
            };
            match format {
                Format::Text => {
                    print!("{}", report_table(&reports));
                    for m in &matrices {
                        print!("\n{}", matrix_table(m));
                    }
                }
                Format::Json => println!("{}", report_json(&reports, &matrices)),
            }
            Ok(reports.iter().all(|r| r.passed()) && matrices.iter().all(|m| m.pairwise_separated()))
        }
        Command::Bigness { presentation, kill, extra } => {
            let p = read_presentation(&presentation)?;
            let extra = extra.as_deref().map(parse_relations).transpose()?.unwrap_or_default();
            match bigness_certificate(&p, &BignessPlan::killing(&kill).adding(extra)) {
                Ok(c) => {
                    println!("{}", c.script());
                    Ok(c.verified)
                }
                Err(e) => {
                    println!("{}", e);
                    Ok(false)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
