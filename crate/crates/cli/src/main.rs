//! `boolfun`: JSON front end to the boolean-function kernel.
//!
//! Every subcommand reads its inputs as JSON (a file path, `-` for standard input, or an
//! inline document starting with `{` or `[`) and writes one JSON document to standard
//! output. Failures go to standard error as `{"error": <code>, "detail": <text>}`.

mod input;

use std::io::Write;
use std::process::ExitCode;

use boolfun::{
    antipode, bits, chromatic_polynomial, contract, coproduct, decompose, gamma, graphic_rank,
    iota, is_counitary, is_hyper_rigid, is_indecomposable, is_matroid_rank, is_modular, is_rigid,
    limits, linear_rank, phi, phi_compat_report, phi_count, random_sample, restrict, restrict_by,
    star_product, strong_equivalences, theta, verify_axioms, weak_equivalences, BooleanFunction,
    Decomposition, Family, Field, Hypergraph, Mask, MultiGraph, QPair, VectorFamily, PRNG_ID,
    RANDOM_VALUE_RANGE,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use input::{parse_partition, parse_subset, read_json, CliError, MaxN};

#[derive(Parser)]
#[command(
    name = "boolfun",
    version,
    about = "Exact computations with boolean functions on finite sets"
)]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct One {
    /// A BooleanFunction: file path, `-` for standard input, or inline JSON.
    input: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "W")]
    W,
    #[value(name = "S")]
    S,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::W => Family::W,
            FamilyArg::S => Family::S,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// The product `f ⋆_{q1,q2} g` on the concatenated ground set.
    Product {
        left: String,
        right: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        q1: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        q2: i64,
    },
    /// `θ_q(f)(A) = Σ_{B⊆A} q^{|A|-|B|} f(B)`.
    Theta {
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
    /// Restriction to a subset, given as a mask or a JSON list of 1-based elements.
    Restrict {
        input: String,
        #[arg(long)]
        subset: String,
    },
    /// Contraction `f/∼` by a partition (`{"n","rgs"}` or a bare restricted-growth list).
    Contract {
        input: String,
        #[arg(long)]
        partition: String,
    },
    /// Restriction `f|∼` to the blocks of a partition.
    RestrictBy {
        input: String,
        #[arg(long)]
        partition: String,
    },
    /// Factorization into `⋆_{q1,q2}`-indecomposable blocks.
    Decompose {
        input: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        q1: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        q2: i64,
    },
    /// Membership in every subclass; `null` where the ground set exceeds a test's cap.
    Classify(One),
    /// The weak equivalences `E^W(f)`.
    WeakEquivs(One),
    /// The strong equivalences `E^S(f)`.
    StrongEquivs(One),
    /// The coproduct `δ` for one equivalence family, as a formal tensor sum of isoclasses.
    Delta {
        input: String,
        #[arg(long, value_enum)]
        family: FamilyArg,
    },
    /// The polynomial invariant `Φ(f)`.
    Phi(One),
    /// The number of maps `[n] → [colors]` whose fibers are all modular.
    PhiCount {
        input: String,
        #[arg(long)]
        colors: u64,
    },
    /// The antipode of the isoclass of `f`; checked mode requires membership in Bool_max.
    Antipode {
        input: String,
        #[arg(long)]
        unchecked: bool,
    },
    /// `γ(H)`, or the edge indicator `ι(H)` with `--indicator`.
    FromHypergraph {
        input: String,
        #[arg(long)]
        indicator: bool,
    },
    /// Rank function of the graphic matroid of a multigraph.
    FromGraph { input: String },
    /// Rank function of a family of rational vectors over `q` or `gf:<p>`.
    FromVectors {
        input: String,
        #[arg(long, default_value = "q")]
        field: String,
    },
    /// Chromatic polynomial of a hypergraph.
    Chromatic { input: String },
    /// Greedy basis of a subset under a matroid rank function.
    Basis {
        input: String,
        #[arg(long)]
        subset: String,
    },
    /// Checks every coalgebra axiom on a sample and reports witnesses for failures.
    VerifyAxioms {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// JSON array of BooleanFunctions.
        #[arg(long, conflicts_with_all = ["random", "max_n", "seed"])]
        sample: Option<String>,
        #[arg(long, requires_all = ["max_n", "seed"])]
        random: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Exit with status 2 when any axiom fails, not only those claimed for the family.
        #[arg(long)]
        strict: bool,
    },
    /// `(Φ⊗Φ)∘δ^W`, `(Φ⊗Φ)∘δ^S` and `δ∘Φ` side by side.
    CompatReport(One),
}

/// A successful run: the JSON document and whether it records a failed verification.
struct Output {
    value: Value,
    verification_failed: bool,
}

impl Output {
    fn of<T: Serialize>(value: &T) -> Result<Output, CliError> {
        Ok(Output {
            value: serde_json::to_value(value).map_err(CliError::serialize)?,
            verification_failed: false,
        })
    }
}

fn elements(mask: Mask) -> Vec<usize> {
    bits::to_elements(mask)
}

fn nullable<T>(
    n: usize,
    cap: usize,
    compute: impl FnOnce() -> boolfun::Result<T>,
) -> Result<Option<T>, CliError> {
    if n > cap {
        Ok(None)
    } else {
        Ok(Some(compute()?))
    }
}

fn run(command: Command, max_n: MaxN) -> Result<Output, CliError> {
    let function = |source: &str| -> Result<BooleanFunction, CliError> {
        let f: BooleanFunction = read_json(source)?;
        max_n.check(f.n())?;
        Ok(f)
    };
    match command {
        Command::Product {
            left,
            right,
            q1,
            q2,
        } => {
            let (f, g) = (function(&left)?, function(&right)?);
            max_n.check(f.n() + g.n())?;
            Output::of(&star_product(&f, &g, QPair::new(q1, q2))?)
        }
        Command::Theta { input, q } => Output::of(&theta(&function(&input)?, q)?),
        Command::Restrict { input, subset } => {
            let f = function(&input)?;
            Output::of(&restrict(&f, parse_subset(&subset)?)?)
        }
        Command::Contract { input, partition } => {
            let f = function(&input)?;
            Output::of(&contract(&f, &parse_partition(&partition)?)?)
        }
        Command::RestrictBy { input, partition } => {
            let f = function(&input)?;
            Output::of(&restrict_by(&f, &parse_partition(&partition)?)?)
        }
        Command::Decompose { input, q1, q2 } => {
            let f = function(&input)?;
            let d: Decomposition = decompose(&f, QPair::new(q1, q2))?;
            let factors = d
                .blocks
                .iter()
                .map(|&b| restrict(&f, b))
                .collect::<boolfun::Result<Vec<_>>>()?;
            let blocks: Vec<Vec<usize>> = d.blocks.iter().map(|&b| elements(b)).collect();
            Output::of(
                &json!({ "blocks": d.blocks, "q": d.q, "elements": blocks, "factors": factors }),
            )
        }
        Command::Classify(One { input }) => {
            let f = function(&input)?;
            let n = f.n();
            let indecomposable = if n == 0 {
                None
            } else {
                Some(is_indecomposable(&f, QPair::ONE)?)
            };
            Output::of(&json!({
                "modular": is_modular(&f),
                "indecomposable": indecomposable,
                "rigid": is_rigid(&f),
                "hyper_rigid": is_hyper_rigid(&f),
                "counitary": nullable(n, limits::PARTITIONS, || is_counitary(&f))?,
                "in_bool_max": nullable(n, limits::BOOL_MAX, || boolfun::in_bool_max(&f))?,
                "is_matroid_rank": is_matroid_rank(&f),
            }))
        }
        Command::WeakEquivs(One { input }) => Output::of(&weak_equivalences(&function(&input)?)?),
        Command::StrongEquivs(One { input }) => {
            Output::of(&strong_equivalences(&function(&input)?)?)
        }
        Command::Delta { input, family } => {
            Output::of(&coproduct(&function(&input)?, family.into())?)
        }
        Command::Phi(One { input }) => Output::of(&phi(&function(&input)?)?),
        Command::PhiCount { input, colors } => {
            let count = phi_count(&function(&input)?, colors)?;
            Output::of(&json!({ "colors": colors, "count": count }))
        }
        Command::Antipode { input, unchecked } => {
            Output::of(&antipode(&function(&input)?, !unchecked)?)
        }
        Command::FromHypergraph { input, indicator } => {
            let h: Hypergraph = read_json(&input)?;
            max_n.check(h.n())?;
            Output::of(&if indicator { iota(&h) } else { gamma(&h) })
        }
        Command::FromGraph { input } => {
            let g: MultiGraph = read_json(&input)?;
            max_n.check(g.n())?;
            Output::of(&graphic_rank(&g))
        }
        Command::FromVectors { input, field } => {
            let field: Field = field.parse()?;
            let v: VectorFamily = read_json(&input)?;
            max_n.check(v.n())?;
            Output::of(&linear_rank(&v, field)?)
        }
        Command::Chromatic { input } => {
            let h: Hypergraph = read_json(&input)?;
            max_n.check(h.n())?;
            Output::of(&chromatic_polynomial(&h)?)
        }
        Command::Basis { input, subset } => {
            let f = function(&input)?;
            let b = boolfun::basis_of(&f, parse_subset(&subset)?)?;
            Output::of(&json!({ "mask": b, "elements": elements(b) }))
        }
        Command::VerifyAxioms {
            family,
            sample,
            random,
            max_n: size,
            seed,
            strict,
        } => {
            let (sample_fns, header) = match (sample, random) {
                (Some(path), _) => {
                    let fns: Vec<BooleanFunction> = read_json(&path)?;
                    for f in &fns {
                        max_n.check(f.n())?;
                    }
                    (fns, json!({ "source": "sample", "sample": path }))
                }
                (None, Some(count)) => {
                    let (size, seed) = (size.unwrap_or_default(), seed.unwrap_or_default());
                    if size == 0 {
                        return Err(CliError::arguments("--max-n must be at least 1"));
                    }
                    max_n.check(size)?;
                    let header = json!({
                        "source": "random",
                        "prng": PRNG_ID,
                        "seed": seed,
                        "count": count,
                        "max_n": size,
                        "value_range": [RANDOM_VALUE_RANGE.0, RANDOM_VALUE_RANGE.1],
                    });
                    (random_sample(count, size, seed), header)
                }
                (None, None) => {
                    return Err(CliError::arguments(
                        "give --sample or --random with --max-n and --seed",
                    ))
                }
            };
            let family: Family = family.into();
            let report = verify_axioms(&sample_fns, family)?;
            let claimed_failures = report.claimed_failures().count();
            let mut header = header;
            header["family"] = json!(family);
            header["claimed_failures"] = json!(claimed_failures);
            let informational_failures = report
                .entries
                .iter()
                .filter(|e| !e.claimed && !e.pass)
                .count();
            header["informational_failures"] = json!(informational_failures);
            header["strict"] = json!(strict);
            Ok(Output {
                value: json!({ "header": header, "entries": report.entries }),
                verification_failed: claimed_failures > 0 || (strict && informational_failures > 0),
            })
        }
        Command::CompatReport(One { input }) => Output::of(&phi_compat_report(&function(&input)?)?),
    }
}

fn emit_error(e: &CliError) {
    let body = json!({ "error": e.code, "detail": e.detail });
    let _ = writeln!(std::io::stderr(), "{body}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            emit_error(&CliError::arguments(e.to_string().trim()));
            return ExitCode::from(1);
        }
    };
    let outcome = MaxN::from_env().and_then(|max_n| run(cli.command, max_n));
    match outcome {
        Ok(out) => {
            let text = if cli.pretty {
                serde_json::to_string_pretty(&out.value)
            } else {
                serde_json::to_string(&out.value)
            }
            .expect("JSON values always serialize");
            let _ = writeln!(std::io::stdout(), "{text}");
            if out.verification_failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            emit_error(&e);
            ExitCode::from(1)
        }
    }
}
