use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;

use csl::criteria;
use csl::families::{dvr_reports, pvd_ideal_report, pvd_report, quad_report, window_ideal_report, window_ring};
use csl::files::{parse_base, preset_tower, read_json, SemigroupSpec, TowerSpec, PRESETS};
use csl::polyparse::parse_poly_list;
use csl::registry;
use csl::report::{class_table_csv, to_json, SemigroupReport};
use csl_core::pvd::PvdRing;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "csl", version, about = "Class semigroups and regularity of integral domains")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Class semigroup of the order of conductor f in an imaginary quadratic field
    Quad {
        /// Fundamental discriminant (negative)
        #[arg(short = 'd', long, allow_hyphen_values = true)]
        dk: i64,
        #[arg(short = 'f', long, default_value_t = 1)]
        f: i64,
        /// Reduced-form search bound; defaults to a value derived from the discriminant
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Print the multiplication table as CSV
        #[arg(long)]
        csv: bool,
    },
    /// Regularity report for an ideal of a window ring {h : h mod c in D}
    Window {
        #[arg(short = 'c', long)]
        conductor: String,
        /// `const`, `full`, or a comma-separated list of polynomials spanning D
        #[arg(short = 'D', long = "subalgebra", default_value = "const")]
        subalgebra: String,
        /// Comma-separated ideal generators
        #[arg(short = 'I', long = "ideal")]
        ideal: String,
        /// `Q` or `F_p`
        #[arg(long, default_value = "Q")]
        field: String,
        #[arg(long)]
        json: bool,
    },
    /// Class analysis of the pullback k + X*K[[X]], or one of its ideals
    Pvd(PvdArgs),
    /// The battery over Z_(p) + X*Q[X]
    Dvr {
        #[arg(short = 'p', long, default_value_t = 3)]
        p: u64,
        #[arg(long)]
        json: bool,
    },
    /// Decompose a finite commutative semigroup read from a JSON table
    Semigroup {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Replay a registered example, or `all`
    Examples {
        id: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct PvdArgs {
    #[arg(long, conflicts_with = "tower", required_unless_present = "tower")]
    preset: Option<String>,
    /// JSON tower description
    #[arg(long)]
    tower: Option<PathBuf>,
    /// Level of a single ideal X^n(W + M); requires --w
    #[arg(long, requires = "w", allow_hyphen_values = true)]
    level: Option<i64>,
    /// Residue generators of W as rows, e.g. "1,0,0,0;0,1,0,0"
    #[arg(long, requires = "level")]
    w: Option<String>,
    #[arg(long)]
    json: bool,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn emit<T: serde::Serialize>(value: &T) -> ExitCode {
    match to_json(value) {
        Ok(s) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => usage(e),
    }
}

fn parse_rows(src: &str, r: &PvdRing) -> Result<Vec<Vec<csl_core::kernel::Scalar>>, String> {
    let field = r.tower().field();
    src.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| {
                    let q = BigRational::from_str(x.trim()).map_err(|_| format!("bad coefficient {x:?}"))?;
                    field.reduce(&q).map_err(|e| e.to_string())
                })
                .collect()
        })
        .collect()
}

fn run_pvd(args: PvdArgs) -> ExitCode {
    let ring = match (&args.preset, &args.tower) {
        (Some(name), _) => match preset_tower(name) {
            Some(r) => r.map_err(|e| e.to_string()),
            None => Err(format!("unknown preset {name:?}; known: {}", PRESETS.join(", "))),
        },
        (None, Some(path)) => read_json::<TowerSpec>(path).and_then(|s| s.build()).map_err(|e| e.to_string()),
        (None, None) => Err("one of --preset or --tower is required".into()),
    };
    let ring = match ring {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    if let (Some(level), Some(w)) = (args.level, &args.w) {
        let ideal = match parse_rows(w, &ring)
            .and_then(|rows| ring.ideal_from_residues(level, rows).map_err(|e| e.to_string()))
        {
            Ok(i) => i,
            Err(e) => return usage(e),
        };
        let (_, report) = pvd_ideal_report(&ring, &ideal);
        return if args.json {
            emit(&report)
        } else {
            print!("{}", report.text());
            ExitCode::SUCCESS
        };
    }
    match pvd_report(&ring) {
        Ok((_, report)) if args.json => emit(&report),
        Ok((_, report)) => {
            print!("{}", report.text());
            ExitCode::SUCCESS
        }
        Err(e) => usage(e),
    }
}

fn run_examples(id: &str, json: bool) -> ExitCode {
    let seed = criteria::seed();
    let outcomes = if id == "all" {
        registry::run_all(seed)
    } else {
        match registry::find(id) {
            Some(e) => vec![e.run(seed)],
            None => {
                let known: Vec<&str> = registry::REGISTRY.iter().map(|e| e.id).collect();
                return usage(format!("unknown example {id:?}; known: all, {}", known.join(", ")));
            }
        }
    };
    let passed = outcomes.iter().all(|o| o.passed());
    if json {
        if let Err(e) = to_json(&outcomes).map(|s| println!("{s}")) {
            return usage(e);
        }
    } else {
        for o in &outcomes {
            print!("{}", o.text());
        }
        let n = outcomes.iter().filter(|o| o.passed()).count();
        println!("{n}/{} passed", outcomes.len());
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Quad { dk, f, bound, json, csv } => match quad_report(dk, f, bound) {
            Ok((table, report)) => {
                if json {
                    emit(&report)
                } else if csv {
                    match class_table_csv(&table) {
                        Ok(s) => {
                            print!("{s}");
                            ExitCode::SUCCESS
                        }
                        Err(e) => usage(e),
                    }
                } else {
                    print!("{}", report.text());
                    ExitCode::SUCCESS
                }
            }
            Err(e) => usage(e),
        },
        Cmd::Window { conductor, subalgebra, ideal, field, json } => {
            let result = parse_base(&field).map_err(|e| e.to_string()).and_then(|k| {
                let r = window_ring(&k, &conductor, &subalgebra).map_err(|e| e.to_string())?;
                let gens = parse_poly_list(&ideal, &k).map_err(|e| e.to_string())?;
                window_ideal_report(&r, &gens).map_err(|e| e.to_string())
            });
            match result {
                Ok((_, _, report)) if json => emit(&report),
                Ok((_, _, report)) => {
                    print!("{}", report.text());
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            }
        }
        Cmd::Pvd(args) => run_pvd(args),
        Cmd::Dvr { p, json } => match dvr_reports(p) {
            Ok((v, reports)) => {
                if json {
                    emit(&reports)
                } else {
                    for r in &reports {
                        print!("{}", r.text());
                    }
                    println!("Clifford: {}  Boolean: {}", v.verdict.clifford, v.verdict.boole);
                    ExitCode::SUCCESS
                }
            }
            Err(e) => usage(e),
        },
        Cmd::Semigroup { file, json } => match read_json::<SemigroupSpec>(&file).and_then(|s| s.build()) {
            Ok(s) => {
                let report = SemigroupReport::build(&s);
                if json {
                    emit(&report)
                } else {
                    print!("{}", report.text());
                    ExitCode::SUCCESS
                }
            }
            Err(e) => usage(e),
        },
        Cmd::Examples { id, json } => run_examples(&id, json),
    }
}
