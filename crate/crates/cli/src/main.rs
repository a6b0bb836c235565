mod input;
mod query;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use crh::complexes::{figure_eight_fixture, picard_words_check, whitehead_fixture};
use crh::report::Report;
use crh::scalars::{Backend, DEFAULT_TOL};
use crh::tetra::{faces_disjoint, mesh_obj};
use crh::Error;

#[derive(Parser)]
#[command(name = "crh", version, about = "Exact checks for spherical CR structures on link complements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a fixture verification suite.
    Verify {
        #[arg(value_enum)]
        target: Target,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate one computation on JSON input.
    Query {
        #[arg(value_enum)]
        kind: QueryKind,
        /// Inline JSON, a path to a JSON file, or a bundled name.
        input: String,
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value = "exact")]
        backend: BackendArg,
        /// Comparison tolerance of the float backend.
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Export sampled faces of one or more tetrahedra as OBJ polylines.
    Mesh {
        /// Tetrahedron JSON, a bundled tetrahedron, or a realized scheme.
        input: String,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(short, long)]
        output: PathBuf,
        /// Separation required by the disjointness check printed alongside.
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Fig8,
    Whitehead,
    PicardWords,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum QueryKind {
    Cartan,
    Params,
    Classify,
    Word,
    Glue,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

fn verify(target: Target) -> crh::Result<Report> {
    let fig8 = || figure_eight_fixture().map(|h| h.report);
    let whitehead = || whitehead_fixture().map(|h| h.report);
    match target {
        Target::Fig8 => fig8(),
        Target::Whitehead => whitehead(),
        Target::PicardWords => picard_words_check(),
        Target::All => {
            let (a, b, c) = std::thread::scope(|s| {
                let a = s.spawn(fig8);
                let b = s.spawn(whitehead);
                let c = picard_words_check();
                (a.join().expect("fig8 suite panicked"), b.join().expect("whitehead suite panicked"), c)
            });
            let mut all = Report::new("all");
            for r in [a?, b?, c?] {
                all.merge(r);
            }
            Ok(all.sorted())
        }
    }
}

fn mesh(input: &str, samples: usize, output: &PathBuf, tol: f64) -> crh::Result<Report> {
    if samples == 0 {
        return Err(Error::Invalid("--samples must be at least 1".into()));
    }
    let tets = input::tetrahedra(input)?;
    let approx: Vec<_> = tets.iter().map(|t| t.to_approx()).collect();
    let obj = mesh_obj(&approx, samples)?;
    std::fs::write(output, &obj).map_err(|e| Error::Invalid(format!("cannot write {}: {e}", output.display())))?;
    let mut r = Report::new("mesh");
    r.info(
        "mesh/obj",
        serde_json::json!({
            "path": output.display().to_string(),
            "tetrahedra": tets.len(),
            "vertices": obj.lines().filter(|l| l.starts_with("v ")).count(),
            "polylines": obj.lines().filter(|l| l.starts_with("l ")).count(),
        }),
    );
    if samples >= 16 {
        for (k, t) in approx.iter().enumerate() {
            let d = faces_disjoint(t, samples, tol, 50.0 * tol)?;
            r.check(format!("mesh/disjoint/{k}"), d.pass, serde_json::to_value(&d)?);
        }
    }
    Ok(r)
}

fn emit(r: &Report, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(&r.to_json()).expect("report serializes"));
    } else {
        println!("{r}");
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, json) = match &cli.command {
        Command::Verify { target, json } => (verify(*target), *json),
        Command::Query { kind, input, json, backend, tol } => {
            let backend = match backend {
                BackendArg::Exact => Backend::Exact,
                BackendArg::Float => Backend::Float,
            };
            (query::run(*kind, input, backend, *tol), *json)
        }
        Command::Mesh { input, samples, output, tol, json } => (mesh(input, *samples, output, *tol), *json),
    };
    match result {
        Ok(r) => {
            emit(&r, json);
            ExitCode::from(r.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
