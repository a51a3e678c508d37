//! Batch front end over system files.
//!
//! Results go to stdout, diagnostics to stderr. Exit codes: 0 on success,
//! 1 when the invocation or the input system is invalid, 2 when the engine
//! gives up or detects an internal inconsistency.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use canny_core::{
    format_factored, format_poly, gcp, parse_expr, parse_system, planar_oracle, pres,
    random_admissible_perturbation, resultant, system::System, zero_set_equal, Error, OutputDoc,
    PerturbationVector, Provenance, Result, VarSet, DEFAULT_SEED,
};

#[derive(Parser)]
#[command(name = "canny", version, about = "Resultants and perturbed resultants of systems homogeneous in a distinguished variable block")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every seeded subcommand.
#[derive(Args)]
struct SeedArgs {
    /// Master seed for perturbation draws; 0 draws one from system entropy
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Bound on the absolute value of random linear-form coefficients
    #[arg(long, default_value_t = 10)]
    coeff_bound: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the classical resultant of the system with respect to its
    /// x-block (identically zero in the presence of an excess component)
    Res {
        input: PathBuf,
        /// Emit the structured JSON document instead of plain text
        #[arg(long)]
        json: bool,
    },
    /// Perturb the system and print the lowest-order epsilon coefficient of
    /// the perturbed resultant together with its valuation
    Gcp {
        input: PathBuf,
        #[command(flatten)]
        seed: SeedArgs,
        /// Explicit perturbation forms, semicolon-separated, one per
        /// equation, in the x-variables only (overrides the seeded draw)
        #[arg(long)]
        perturbation: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Gcd of the perturbation coefficients over repeated seeded trials,
    /// confirmed by one extra draw
    Pres {
        input: PathBuf,
        #[command(flatten)]
        seed: SeedArgs,
        /// Number of trials before the confirmation draw (at least 2)
        #[arg(long, default_value_t = 2)]
        trials: u32,
        /// Print the squarefree factorization instead of the expanded gcd
        #[arg(long)]
        factored: bool,
        #[arg(long)]
        json: bool,
    },
    /// Zero set of a two-form one-parameter system from the shared factor's
    /// content and the cofactors' resultant, bypassing perturbations
    Planar {
        input: PathBuf,
        /// Also run the perturbation protocol and report whether the two
        /// zero sets agree
        #[arg(long)]
        compare: bool,
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long, default_value_t = 2)]
        trials: u32,
        #[arg(long)]
        json: bool,
    },
    /// Parse and validate a system file, reporting its shape
    Check {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn read_input(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Validate(format!("cannot read {}: {}", path.display(), e)))
}

fn load_system(path: &Path) -> Result<(String, System)> {
    let source = read_input(path)?;
    let sys = System::validate(&parse_system(&source)?)?;
    Ok((source, sys))
}

/// Resolves `--seed 0` to an entropy draw, reporting the draw so the run can
/// be reproduced.
fn effective_seed(requested: u64) -> u64 {
    if requested != 0 {
        return requested;
    }
    let drawn: u64 = rand::random();
    eprintln!("seed 0 requests entropy; using seed {}", drawn);
    drawn
}

/// Parses the `--perturbation` argument over the system's x-variables.
fn parse_perturbation(sys: &System, text: &str) -> Result<PerturbationVector> {
    let x_vs = VarSet::new(sys.x_names().into_iter())?;
    let mut polys = Vec::new();
    for piece in text.split(';') {
        if piece.trim().is_empty() {
            return Err(Error::Validate(
                "empty entry in the perturbation list (check the semicolons)".into(),
            ));
        }
        polys.push(parse_expr(piece, &x_vs)?);
    }
    PerturbationVector::new(sys, polys, Provenance::User)
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Res { input, json } => {
            let (source, sys) = load_system(&input)?;
            let r = resultant(&sys)?;
            if r.coordinate_change.is_some() {
                eprintln!("note: computed after a unimodular change of x-coordinates");
            }
            if json {
                println!("{}", OutputDoc::for_res(&source, &r).to_json());
            } else {
                println!("{}", format_poly(r.poly.as_poly()));
            }
        }
        Command::Gcp { input, seed, perturbation, json } => {
            let (source, sys) = load_system(&input)?;
            let p = match &perturbation {
                Some(text) => parse_perturbation(&sys, text)?,
                None => random_admissible_perturbation(
                    &sys,
                    effective_seed(seed.seed),
                    seed.coeff_bound,
                )?,
            };
            let g = gcp(&sys, &p)?;
            if json {
                println!("{}", OutputDoc::for_gcp(&source, &g).to_json());
            } else {
                println!("s = {}", g.s);
                println!("R_s = {}", format_poly(g.r_s.as_poly()));
            }
        }
        Command::Pres { input, seed, trials, factored, json } => {
            let (source, sys) = load_system(&input)?;
            let r = pres(&sys, trials, effective_seed(seed.seed), seed.coeff_bound)?;
            if !r.agreement {
                eprintln!(
                    "warning: the confirmation draw changed the gcd; rerun with more trials"
                );
            }
            if json {
                println!("{}", OutputDoc::for_pres(&source, &r).to_json());
            } else if factored {
                println!("{}", format_factored(&r.squarefree));
            } else {
                println!("{}", format_poly(r.gcd.as_poly()));
            }
        }
        Command::Planar { input, compare, seed, trials, json } => {
            let (source, sys) = load_system(&input)?;
            let z = planar_oracle(&sys)?;
            let agreement = if compare {
                let r = pres(&sys, trials, effective_seed(seed.seed), seed.coeff_bound)?;
                Some(zero_set_equal(z.poly.as_poly(), r.gcd.as_poly())?)
            } else {
                None
            };
            if json {
                println!("{}", OutputDoc::for_planar(&source, &z, agreement).to_json());
            } else {
                match agreement {
                    Some(true) => println!("zero sets agree: {}", format_poly(z.poly.as_poly())),
                    Some(false) => println!(
                        "zero sets differ: direct computation gives {}",
                        format_poly(z.poly.as_poly())
                    ),
                    None => println!("{}", format_poly(z.poly.as_poly())),
                }
            }
        }
        Command::Check { input, json } => {
            let (source, sys) = load_system(&input)?;
            if json {
                println!("{}", OutputDoc::for_check(&source).to_json());
            } else {
                println!(
                    "ok: {} forms in x-block [{}], x-degrees {:?}, parameters [{}]",
                    sys.n(),
                    sys.x_names().join(", "),
                    sys.degrees(),
                    sys.param_names().join(", ")
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // clap reserves exit code 2 for its own usage errors; fold those into
    // the validation exit code so 2 always means an engine-side failure
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let wants_stderr = e.use_stderr();
            let _ = e.print();
            return if wants_stderr { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            match e {
                Error::Parse { .. } | Error::Validate(_) | Error::Structure(_) => ExitCode::from(1),
                Error::DegenerateLayout(_) | Error::Internal(_) => ExitCode::from(2),
            }
        }
    }
}
