//! `ooc`: build, verify and bound optical orthogonal codes from cyclic subspace codes.
//!
//! Exit status is 0 on success, 1 when a verification fails, 2 on usage or
//! data errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use subspace_ooc::field::Field;
use subspace_ooc::io::{parse_ooc_text, write_ooc_text, CodeFile, FieldDescriptor, OosFile};
use subspace_ooc::ooc::{
    build_ooc, johnson_bound, optimality_ratio, params_table, verify_oos, OocConstruction,
    TableSpec, VerificationReport,
};
use subspace_ooc::subspace::{construct_g, single_orbit, CyclicSubspaceCode, SingleOrbitSource};
use subspace_ooc::Error;

#[derive(Parser)]
#[command(
    name = "ooc",
    version,
    about = "Optical orthogonal codes from cyclic subspace codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code, verify it, and optionally write it out.
    Construct(ConstructArgs),
    /// Check the correlation properties of an OOC or OOS file.
    Verify(VerifyArgs),
    /// Johnson bound J(n, w, lambda), and the ratio size/J with --size.
    Bound(BoundArgs),
    /// Parameters of the paired construction for several (q, k).
    Table(TableArgs),
    /// Describe the canonical field F_{q^m} or F_{p^e}.
    FieldInfo(FieldInfoArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Ground field order.
    #[arg(long, required_unless_present = "code")]
    q: Option<u64>,
    /// Dimension of each orbit representative.
    #[arg(long, required_unless_present = "code")]
    k: Option<u32>,
    /// Frobenius exponent, coprime to k.
    #[arg(long, default_value_t = 1)]
    s: u32,
    /// Extension degree; selects a single Sidon orbit in F_{q^m}.
    #[arg(long, conflicts_with = "code")]
    m: Option<u32>,
    /// Build from a code file instead of a construction.
    #[arg(long, conflicts_with_all = ["q", "k"])]
    code: Option<PathBuf>,
    /// Directory for ooc.txt, oos.json, code.json and report.json.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the summary as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    /// `# n= w= lambda= size=` header, then one 0/1 line per word.
    Bits,
    /// `{"n": .., "sets": [[..], ..]}`.
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    input: PathBuf,
    /// Correlation threshold; defaults to the header value of a bits file.
    #[arg(long)]
    lambda: Option<usize>,
    /// Input format; inferred from the extension when absent.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct BoundArgs {
    n: u64,
    w: u64,
    lambda: u64,
    #[arg(long)]
    size: Option<u64>,
}

#[derive(Args)]
struct TableArgs {
    /// Ground field orders, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    q: Vec<u64>,
    /// Representative dimensions, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    k: Vec<u32>,
    /// Extension degree for every row; 2k when absent.
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FieldInfoArgs {
    #[arg(long, requires = "m", conflicts_with_all = ["p", "e"])]
    q: Option<u64>,
    #[arg(long, requires = "q")]
    m: Option<u32>,
    #[arg(long, requires = "e")]
    p: Option<u32>,
    #[arg(long, requires = "p")]
    e: Option<u32>,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Verification,
    Data(Error),
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Data(e.into())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Bound(a) => bound(a),
        Command::Table(a) => table(a),
        Command::FieldInfo(a) => field_info(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Data(Error::VerificationFailed(report))) => {
            eprintln!("error: verification failed");
            print_report(&report);
            ExitCode::from(1)
        }
        Err(Failure::Data(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn print_report(report: &VerificationReport) {
    print!("{}", pretty(report));
}

fn construct(a: ConstructArgs) -> Outcome {
    let (code, source): (CyclicSubspaceCode, &str) = if let Some(path) = &a.code {
        let file: CodeFile = serde_json::from_str(&fs::read_to_string(path)?)?;
        (file.load()?, "file")
    } else {
        let (q, k) = (
            a.q.expect("required by clap"),
            a.k.expect("required by clap"),
        );
        match a.m {
            Some(m) => {
                let (src, code) = single_orbit(q, k, m, a.s)?;
                let label = match src {
                    SingleOrbitSource::Binomial(_) => "binomial",
                    SingleOrbitSource::Search => "search",
                };
                (code, label)
            }
            None => (construct_g(q, k, a.s)?.code, "g"),
        }
    };

    let out = build_ooc(&code)?;
    if let Some(dir) = &a.out {
        write_outputs(dir, &code, &out)?;
    }

    let p = &out.params;
    if a.json {
        let summary = json!({
            "n": p.n,
            "w": p.w,
            "lambda": p.lambda,
            "size": p.size,
            "johnson": p.johnson.to_string(),
            "ratio": p.ratio.to_string(),
            "pass": out.report.pass,
            "orbits": code.orbit_count(),
            "min_distance": code.min_distance(),
            "construction": source,
        });
        print!("{}", pretty(&summary));
    } else {
        println!("({},{},{}) size={} pass", p.n, p.w, p.lambda, p.size);
        println!("J={} ratio={}", p.johnson, p.ratio);
        println!(
            "orbits={} d={} construction={source}",
            code.orbit_count(),
            code.min_distance()
        );
    }
    Ok(())
}

fn write_outputs(
    dir: &Path,
    code: &CyclicSubspaceCode,
    out: &OocConstruction,
) -> Result<(), Error> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join("ooc.txt"), write_ooc_text(&out.code))?;
    fs::write(dir.join("oos.json"), pretty(&OosFile::of(&out.sets)?))?;
    fs::write(dir.join("code.json"), pretty(&CodeFile::of(code)))?;
    fs::write(dir.join("report.json"), pretty(&out.report))?;
    Ok(())
}

fn verify(a: VerifyArgs) -> Outcome {
    let format = a.format.unwrap_or_else(|| {
        if a.input.extension().is_some_and(|e| e == "json") {
            Format::Json
        } else {
            Format::Bits
        }
    });
    let text = fs::read_to_string(&a.input)?;
    let (sets, lambda) = match format {
        Format::Bits => {
            let code = parse_ooc_text(&text)?;
            (code.supports(), a.lambda.unwrap_or(code.lambda))
        }
        Format::Json => {
            let file: OosFile = serde_json::from_str(&text)?;
            let lambda = a.lambda.ok_or_else(|| {
                Error::InvalidParams("an OOS file carries no lambda; pass --lambda".into())
            })?;
            (file.load()?, lambda)
        }
    };
    let report = verify_oos(&sets, lambda)?;
    print_report(&report);
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn bound(a: BoundArgs) -> Outcome {
    println!("{}", johnson_bound(a.n, a.w, a.lambda)?);
    if let Some(size) = a.size {
        println!("ratio={}", optimality_ratio(size, a.n, a.w, a.lambda)?);
    }
    Ok(())
}

fn table(a: TableArgs) -> Outcome {
    let specs: Vec<TableSpec> =
        a.q.iter()
            .flat_map(|&q| {
                a.k.iter().map(move |&k| TableSpec {
                    q,
                    k,
                    m: a.m.unwrap_or(2 * k),
                    orbits: None,
                })
            })
            .collect();
    let rows = params_table(&specs)?;
    if a.json {
        print!("{}", pretty(&rows));
        return Ok(());
    }
    println!("q\tk\tm\tr\tn\tw\tlambda\tsize\tJ\tratio");
    for r in &rows {
        println!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.q, r.k, r.m, r.r, r.n, r.w, r.lambda, r.size, r.johnson, r.ratio
        );
    }
    Ok(())
}

fn field_info(a: FieldInfoArgs) -> Outcome {
    let (field, ground) = match (a.q, a.m, a.p, a.e) {
        (Some(q), Some(m), _, _) => {
            let amb = subspace_ooc::subspace::Ambient::new(q, m)?;
            (amb.field().clone(), Some(q))
        }
        (_, _, Some(p), Some(e)) => (Field::new(p, e, None)?, None),
        _ => return Err(Error::InvalidParams("give --q and --m, or --p and --e".into()).into()),
    };
    let desc = FieldDescriptor::of(&field);
    let ground_info = ground
        .map(|q| -> Result<Value, Error> {
            let sub = field.subfield(q)?;
            Ok(json!({ "q": q, "generator_log": sub.generator_log() }))
        })
        .transpose()?;
    if a.json {
        let mut v = serde_json::to_value(&desc).expect("serializable");
        v["order"] = json!(field.order());
        if let Some(g) = ground_info {
            v["ground"] = g;
        }
        print!("{}", pretty(&v));
        return Ok(());
    }
    println!("F_{}^{} order={}", desc.p, desc.e, field.order());
    println!("modulus={:?} (low to high)", desc.modulus);
    println!("omega encoding={}", desc.omega_index);
    if let Some(g) = ground_info {
        println!("F_{} = {{0}} ∪ <omega^{}>", g["q"], g["generator_log"]);
    }
    Ok(())
}
