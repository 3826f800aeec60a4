use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use jetcomplex::error::Error;
use jetcomplex::export;
use jetcomplex::facet::FacetProfile;
use jetcomplex::grid::GridShape;
use jetcomplex::{count, facet, ideal, oracle, shelling};

const EXIT_DOMAIN: u8 = 1;
const EXIT_CAPACITY: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "jetcomplex",
    version,
    about = "Facets, counts, and shelling certificates for the jet-scheme initial complex"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generator families A-E of the monomial ideal
    Generators(Common),
    /// Enumerate all facets in the canonical order
    Facets {
        #[command(flatten)]
        common: Common,
        /// Include the pivot / path decomposition of each facet
        #[arg(long)]
        profile: bool,
    },
    /// Brute-force face census (small grids only)
    Oracle(Common),
    /// Multiplicity by the pivot sum, its closed form, and Krull dimension
    Count(Common),
    /// Compare brute-force facets against the structured enumeration
    Check(Common),
    /// Verify the canonical shelling order and all pair witnesses
    #[command(name = "shelling-verify")]
    ShellingVerify(Common),
    /// h-vector of the canonical shelling
    Hvector(Common),
}

#[derive(Args)]
struct Common {
    /// Number of rows m (at least 2)
    #[arg(short = 'm', long = "rows")]
    rows: u32,
    /// Number of columns n (at least m)
    #[arg(short = 'n', long = "cols")]
    cols: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Capacity { .. } => EXIT_CAPACITY,
            _ => EXIT_DOMAIN,
        };
        Failure::new(code, err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Generators(common) => {
            let shape = shape_of(&common)?;
            let (payload, text) = export::generators_output(&ideal::generators(shape));
            emit(&common, "generators", shape, payload, text)
        }
        Command::Facets { common, profile } => {
            let shape = shape_of(&common)?;
            let facets: Vec<FacetProfile> = facet::enumerate_facets(shape).collect();
            let (payload, text) = export::facets_output(&facets, profile);
            emit(&common, "facets", shape, payload, text)
        }
        Command::Oracle(common) => {
            let shape = shape_of(&common)?;
            let census = oracle::enumerate_faces_bruteforce(shape)?;
            let (payload, text) = export::oracle_output(&census);
            emit(&common, "oracle", shape, payload, text)
        }
        Command::Count(common) => {
            let shape = shape_of(&common)?;
            let (payload, text) = export::count_output(
                &count::multiplicity_sum(shape),
                &count::multiplicity_closed(shape),
                count::krull_dimension(shape),
            );
            emit(&common, "count", shape, payload, text)
        }
        Command::Check(common) => {
            let shape = shape_of(&common)?;
            let brute = oracle::enumerate_facets_bruteforce(shape)?;
            let structured: std::collections::BTreeSet<_> = facet::enumerate_facets(shape)
                .map(|f| f.vertex_set())
                .collect();
            let equal = brute == structured;
            let (payload, text) = export::check_output(brute.len(), structured.len(), equal);
            emit(&common, "check", shape, payload, text)?;
            if equal {
                Ok(())
            } else {
                Err(Failure::new(
                    EXIT_VERIFICATION,
                    "oracle and structured facet sets differ",
                ))
            }
        }
        Command::ShellingVerify(common) => {
            let shape = shape_of(&common)?;
            let order = shelling::shelling_sequence(shape)?;
            let report = shelling::verify_shelling(&order);
            let mut witnesses = Vec::new();
            let mut witnesses_validated = true;
            'outer: for i in 0..order.len() {
                for j in 0..i {
                    match shelling::construct_witness(
                        &order,
                        &order.facets()[j],
                        &order.facets()[i],
                    ) {
                        Ok(w) => witnesses.push((j, i, w)),
                        Err(_) => {
                            witnesses_validated = false;
                            break 'outer;
                        }
                    }
                }
            }
            let (payload, text) =
                export::shelling_output(&order, &report, &witnesses, witnesses_validated);
            emit(&common, "shelling-verify", shape, payload, text)?;
            if report.is_shelling() && witnesses_validated {
                Ok(())
            } else {
                Err(Failure::new(
                    EXIT_VERIFICATION,
                    "shelling verification failed",
                ))
            }
        }
        Command::Hvector(common) => {
            let shape = shape_of(&common)?;
            let order = shelling::shelling_sequence(shape)?;
            let (payload, text) = export::hvector_output(&shelling::h_vector(&order));
            emit(&common, "hvector", shape, payload, text)
        }
    }
}

fn shape_of(common: &Common) -> Result<GridShape, Failure> {
    Ok(GridShape::new(common.rows, common.cols)?)
}

fn emit(
    common: &Common,
    command: &str,
    shape: GridShape,
    payload: Value,
    text: String,
) -> Result<(), Failure> {
    let body = match common.format {
        Format::Json => export::render(&export::document(command, shape, payload)),
        Format::Text => text,
    };
    match &common.out {
        Some(path) => std::fs::File::create(path)
            .and_then(|mut f| f.write_all(body.as_bytes()))
            .map_err(|e| {
                Failure::new(EXIT_DOMAIN, format!("cannot write {}: {e}", path.display()))
            }),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}
