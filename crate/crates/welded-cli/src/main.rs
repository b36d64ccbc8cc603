//! Command-line front end: batch computation of invariants, closures,
//! normal forms and finite-type checks, plus the built-in verification
//! suites (`relations`, `conjecture`, `tables`).
//!
//! Exit codes: 0 ok, 1 usage, 2 parse error, 3 verification failure.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use welded_core::alexander::alphas_of_long_knot;
use welded_core::diagram::{ClosureList, GaussDiagram};
use welded_core::ft::{ft_test, DEFAULT_BUDGET};
use welded_core::gauss_text::{emit_gauss, parse_gauss};
use welded_core::invariants::{invariant_vector_with, Descriptor, MuVariant};
use welded_core::normal_form::{normal_form, realize, verify_roundtrip, NormalFormWord};
use welded_core::verification;
use welded_core::wtree::{parse_wtree, surgery};
use welded_core::Error as CoreError;

mod fixtures;

#[derive(Parser)]
#[command(
    name = "welded",
    version,
    about = "Exact invariants and normal forms of welded string links"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// Gauss code text (`n=2` header, `O a +` tokens).
    Gauss,
    /// w-tree presentation text (`strands 2`, `[1@1/2 2@1/3]` trees).
    Wtree,
    /// Generator word (`Z[1,2]^1 E[2]^-1`).
    Word,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum MuVariantArg {
    /// Length-4 Milnor pair mu(1121)/mu(2212), used directly.
    Direct,
    /// Length-4 Milnor pair mu(1211)/mu(2122), via the evaluation matrix.
    Matrix,
}

impl From<MuVariantArg> for MuVariant {
    fn from(v: MuVariantArg) -> MuVariant {
        match v {
            MuVariantArg::Direct => MuVariant::Direct,
            MuVariantArg::Matrix => MuVariant::Matrix,
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// Read the diagram from a file (`-` for stdin).
    #[arg(long, conflicts_with = "text")]
    input: Option<PathBuf>,
    /// Inline diagram text.
    #[arg(long)]
    text: Option<String>,
    /// Input format.
    #[arg(long, value_enum, default_value = "gauss")]
    format: Format,
    /// Strand count for `--format word` (default: smallest fitting).
    #[arg(long)]
    strands: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the classifying invariant vector at a degree.
    Invariants {
        #[command(flatten)]
        input: InputArgs,
        /// Degree bound: 1, 2 or 3 (3 needs two strands).
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[arg(long, value_enum, default_value = "json")]
        out: OutFormat,
        #[arg(long, value_enum, default_value = "direct")]
        mu_variant: MuVariantArg,
    },
    /// Close the diagram along a list and print the long knot and its
    /// normalized Alexander coefficients.
    Closure {
        #[command(flatten)]
        input: InputArgs,
        /// Closure list, e.g. `1,-2` (negative = overlined).
        #[arg(long)]
        list: String,
        /// Largest alpha coefficient to print.
        #[arg(long, default_value_t = 5)]
        kmax: usize,
        #[arg(long, value_enum, default_value = "text")]
        out: OutFormat,
    },
    /// Compute the normal-form word at a degree.
    NormalForm {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Also realize the word and verify the invariant round-trip.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "direct")]
        mu_variant: MuVariantArg,
        #[arg(long, value_enum, default_value = "text")]
        out: OutFormat,
    },
    /// Alternating-sum finite-type check of one invariant.
    FtCheck {
        #[command(flatten)]
        input: InputArgs,
        /// Invariant descriptor, e.g. `LINK:1,2`, `CLOSE:[1,-2]:2`, `MU:1,2,3`.
        #[arg(long)]
        invariant: String,
        /// Claimed finite-type degree.
        #[arg(long)]
        degree: usize,
        /// Evaluation budget before switching to seeded sampling.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0xACC5_EED)]
        seed: u64,
    },
    /// Run the built-in relation suite and print one line per relation.
    Relations {
        #[arg(long, value_enum, default_value = "direct")]
        mu_variant: MuVariantArg,
    },
    /// Print the degree-3 vectors of the two conjecture-related products
    /// and their difference (evidence, not proof).
    Conjecture {
        #[arg(long, value_enum, default_value = "direct")]
        mu_variant: MuVariantArg,
    },
    /// Regenerate every verification table and diff against the checked-in
    /// fixtures (`WELDEDCALC_FIXTURES` overrides the fixture directory).
    Tables,
}

fn main() -> ExitCode {
    // die quietly on closed pipes (`welded ... | head`) like other unix tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // clap prints help/version through the error path with status 0
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e.downcast_ref::<CoreError>() {
                Some(CoreError::Parse(_)) => 2,
                Some(_) => 1,
                None => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn read_input(input: &InputArgs) -> anyhow::Result<String> {
    match (&input.input, &input.text) {
        (Some(path), None) => {
            if path.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                Ok(s)
            } else {
                Ok(std::fs::read_to_string(path)?)
            }
        }
        (None, Some(text)) => Ok(text.clone()),
        _ => anyhow::bail!("exactly one of --input and --text is required"),
    }
}

fn load_diagram(input: &InputArgs) -> anyhow::Result<GaussDiagram> {
    let text = read_input(input)?;
    let d = match input.format {
        Format::Gauss => parse_gauss(&text)?,
        Format::Wtree => surgery(&parse_wtree(&text)?)?,
        Format::Word => {
            let probe = NormalFormWord::parse(&text, 1, 2)?;
            let min = probe
                .factors
                .iter()
                .map(|f| f.min_strands())
                .max()
                .unwrap_or(1);
            let n = input.strands.unwrap_or(min).max(min);
            realize(&NormalFormWord::parse(&text, n, 2)?)?
        }
    };
    Ok(d)
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Invariants {
            input,
            degree,
            out,
            mu_variant,
        } => {
            let d = load_diagram(&input)?;
            let v = invariant_vector_with(&d, degree, mu_variant.into())?;
            match out {
                OutFormat::Json => println!("{}", v.to_json()),
                OutFormat::Text => {
                    for (desc, value) in &v.entries {
                        println!("{} = {}", desc.key(), value);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Closure {
            input,
            list,
            kmax,
            out,
        } => {
            let d = load_diagram(&input)?;
            let list = ClosureList::parse(&list)?;
            let closed = d.closure(&list)?;
            let alphas = alphas_of_long_knot(&closed, kmax.max(2))?;
            match out {
                OutFormat::Text => {
                    print!("{}", emit_gauss(&closed));
                    for k in 2..=alphas.kmax {
                        println!("alpha_{k} = {}", alphas.alpha(k));
                    }
                }
                OutFormat::Json => {
                    let coeffs: Vec<String> = (2..=alphas.kmax)
                        .map(|k| format!("\"alpha_{k}\":{}", alphas.alpha(k)))
                        .collect();
                    println!(
                        "{{\"gauss\":{:?},\"alphas\":{{{}}}}}",
                        emit_gauss(&closed),
                        coeffs.join(",")
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::NormalForm {
            input,
            degree,
            verify,
            mu_variant,
            out,
        } => {
            let d = load_diagram(&input)?;
            let variant: MuVariant = mu_variant.into();
            if verify {
                let report = verify_roundtrip(&d, degree, variant)?;
                match out {
                    OutFormat::Text => {
                        println!("word: {}", report.word.display());
                        if report.conjecture_dependent {
                            println!("conjecture-dependent: yes");
                        }
                        println!(
                            "round-trip: {}",
                            if report.matches { "ok" } else { "MISMATCH" }
                        );
                        for (desc, a, b) in &report.mismatches {
                            println!("  {} diagram={} realized={}", desc.key(), a, b);
                        }
                    }
                    OutFormat::Json => println!(
                        "{{\"word\":\"{}\",\"conjecture_dependent\":{},\"verified\":{}}}",
                        report.word.display(),
                        report.conjecture_dependent,
                        report.matches
                    ),
                }
                if !report.matches {
                    return Ok(ExitCode::from(3));
                }
            } else {
                let w = normal_form(&d, degree, variant)?;
                match out {
                    OutFormat::Text => {
                        println!("word: {}", w.display());
                        if w.conjecture_dependent {
                            println!("conjecture-dependent: yes");
                        }
                    }
                    OutFormat::Json => println!(
                        "{{\"word\":\"{}\",\"conjecture_dependent\":{}}}",
                        w.display(),
                        w.conjecture_dependent
                    ),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::FtCheck {
            input,
            invariant,
            degree,
            budget,
            seed,
        } => {
            let d = load_diagram(&input)?;
            let nu = Descriptor::parse(&invariant)?;
            let report = ft_test(&d, &nu, degree, budget, seed)?;
            println!("{}", report.to_json());
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Relations { mu_variant } => {
            let mut all = true;
            for r in verification::relation_suite(mu_variant.into())? {
                println!(
                    "{} (degree <= {}): {}",
                    r.name,
                    r.degree,
                    if r.holds { "pass" } else { "FAIL" }
                );
                all &= r.holds;
            }
            Ok(if all {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
        Command::Conjecture { mu_variant } => {
            let (ad, bc, diff) = verification::conjecture_evidence(mu_variant.into())?;
            println!("A3.D3 degree-3 vector: {}", ad.to_json());
            println!("B3.C3 degree-3 vector: {}", bc.to_json());
            if diff.is_empty() {
                println!("difference: none (evidence consistent with the conjectured relation)");
                Ok(ExitCode::SUCCESS)
            } else {
                for (desc, a, b) in diff {
                    println!("difference at {}: {} vs {}", desc.key(), a, b);
                }
                Ok(ExitCode::from(3))
            }
        }
        Command::Tables => {
            let dir = fixtures::fixture_dir();
            let mut all = true;
            for (name, computed) in verification::tables()? {
                match fixtures::compare(&dir, name, &computed) {
                    Ok(None) => println!("table {name}: ok"),
                    Ok(Some(diff)) => {
                        all = false;
                        println!("table {name}: MISMATCH\n{diff}");
                    }
                    Err(e) => {
                        all = false;
                        println!("table {name}: cannot read fixture ({e})");
                    }
                }
            }
            Ok(if all {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            })
        }
    }
}
