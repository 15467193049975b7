//! `catalan`: enumerate, convert, verify and draw Catalan families.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use catalan_core::family::{self, convert};
use catalan_core::render::{
    lattice_json, render_gapped_ascii, render_gapped_svg, render_lattice_dot, render_torsion_svg,
    render_tree_ascii, render_tree_svg, render_wire_svg, render_young_ascii, render_young_svg,
};
use catalan_core::verify::{self, Suite};
use catalan_core::{build_lattice, count_maximal_chains, CatalanObject, Family};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Largest size enumerated or converted for trees, paths, diagrams and permutations.
const MAX_N: usize = 12;
/// Largest ambient for torsion classes.
const MAX_TORSION_N: usize = 8;
/// Largest size for lattice builds and chain counts.
const MAX_LATTICE_N: usize = 9;
/// Largest size the property suites are run to.
const MAX_VERIFY_N: usize = 7;

#[derive(Parser)]
#[command(
    name = "catalan",
    version,
    about = "Catalan families, their bijections and the Tamari lattice"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Size, when not given positionally; also the ambient for bare ball lists.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Paren,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// Every object of a family at size n, one per line, in canonical order.
    Enumerate { family: String, size: Option<usize> },
    /// Convert an object between families; `-` reads it from stdin.
    Convert {
        from: String,
        to: String,
        input: String,
    },
    /// Run a property suite (roundtrips, commutativity, torsion, tamari, all) for sizes 0..=n.
    Verify { suite: String, size: Option<usize> },
    /// Draw an object. Backends: ascii (tree, young, gapped, dyck); svg (tree, young, gapped,
    /// torsion, and perm213 as its wire diagram); wire (any family); dot and json (lattice, whose
    /// input is n).
    Render {
        family: String,
        input: String,
        backend: String,
    },
    /// Number of maximal chains of the Tamari lattice.
    Chains { size: Option<usize> },
    /// The Tamari lattice as nodes and covers.
    Lattice { size: Option<usize> },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

impl From<catalan_core::Error> for Failure {
    fn from(e: catalan_core::Error) -> Self {
        usage(e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

fn size(positional: Option<usize>, flag: Option<usize>) -> Outcome<usize> {
    match (positional, flag) {
        (Some(a), Some(b)) if a != b => Err(usage(format!("size given twice: {a} and --n {b}"))),
        (Some(a), _) | (None, Some(a)) => Ok(a),
        (None, None) => Err(usage("missing size n")),
    }
}

fn bounded(n: usize, limit: usize, what: &str) -> Outcome<usize> {
    if n > limit {
        Err(usage(format!(
            "n = {n} is out of bounds for {what} (at most {limit})"
        )))
    } else {
        Ok(n)
    }
}

fn family_limit(f: Family) -> usize {
    if f == Family::Torsion {
        MAX_TORSION_N
    } else {
        MAX_N
    }
}

fn parse_family(s: &str) -> Outcome<Family> {
    s.parse().map_err(usage)
}

fn read_input(input: &str) -> Outcome<String> {
    if input != "-" {
        return Ok(input.to_string());
    }
    let mut text = String::new();
    io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| usage(format!("reading stdin: {e}")))?;
    Ok(text)
}

fn parse_object(f: Family, input: &str, n: Option<usize>) -> Outcome<CatalanObject> {
    let obj = CatalanObject::parse(f, &read_input(input)?, n)?;
    bounded(obj.size(), family_limit(f), f.name())?;
    Ok(obj)
}

fn show(obj: &CatalanObject, format: Format) -> String {
    match format {
        Format::Json => obj.to_json() + "\n",
        Format::Paren => obj.to_plain() + "\n",
        Format::Ascii => match obj {
            CatalanObject::Tree(t) => render_tree_ascii(t),
            CatalanObject::Young(y) => render_young_ascii(y),
            CatalanObject::Gapped(g) => render_gapped_ascii(g),
            other => other.to_plain() + "\n",
        },
    }
}

fn emit(out: &Option<PathBuf>, bytes: &str) -> Outcome<()> {
    match out {
        Some(path) => {
            fs::write(path, bytes).map_err(|e| usage(format!("writing {}: {e}", path.display())))
        }
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(bytes.as_bytes())
                .and_then(|()| stdout.flush())
                .or_else(|e| {
                    if e.kind() == io::ErrorKind::BrokenPipe {
                        Ok(())
                    } else {
                        Err(usage(format!("writing stdout: {e}")))
                    }
                })
        }
    }
}

fn render(f: &str, input: &str, backend: &str, n: Option<usize>) -> Outcome<String> {
    if f == "lattice" {
        let size = match read_input(input)?.trim() {
            "" => size(None, n)?,
            s => s
                .parse()
                .map_err(|_| usage(format!("lattice input must be a size, got {s:?}")))?,
        };
        let p = build_lattice(bounded(size, MAX_LATTICE_N, "lattice")?);
        return match backend {
            "dot" => Ok(render_lattice_dot(&p)),
            "json" => Ok(lattice_json(&p).to_string() + "\n"),
            _ => Err(usage(format!(
                "lattice renders to dot or json, not {backend:?}"
            ))),
        };
    }
    let family = parse_family(f)?;
    let obj = parse_object(family, input, n)?;
    let tree_of = |o: &CatalanObject| o.to_tree().map_err(Failure::from);
    match (backend, &obj) {
        ("ascii", CatalanObject::Tree(t)) => Ok(render_tree_ascii(t)),
        ("ascii", CatalanObject::Young(y)) => Ok(render_young_ascii(y)),
        ("ascii", CatalanObject::Gapped(g)) => Ok(render_gapped_ascii(g)),
        ("ascii", CatalanObject::Dyck(_)) => match convert(&obj, Family::Young)? {
            CatalanObject::Young(y) => Ok(render_young_ascii(&y)),
            _ => unreachable!("conversion keeps the target family"),
        },
        ("svg", CatalanObject::Torsion(p)) => Ok(render_torsion_svg(p)),
        ("svg", CatalanObject::Tree(t)) => Ok(render_tree_svg(t)),
        ("svg", CatalanObject::Young(y)) => Ok(render_young_svg(y)),
        ("svg", CatalanObject::Gapped(g)) => Ok(render_gapped_svg(g)),
        ("svg", CatalanObject::Perm213(_)) | ("wire", _) => Ok(render_wire_svg(&tree_of(&obj)?)),
        _ => Err(usage(format!("no {backend:?} rendering for {family}"))),
    }
}

fn run(cli: Cli) -> Outcome<()> {
    let format = cli.format;
    match cli.command {
        Command::Enumerate { family, size: k } => {
            let f = parse_family(&family)?;
            let n = bounded(size(k, cli.n)?, family_limit(f), f.name())?;
            let text: String = family::enumerate(f, n)
                .iter()
                .map(|o| show(o, format))
                .collect();
            emit(&cli.out, &text)
        }
        Command::Convert { from, to, input } => {
            let (from, to) = (parse_family(&from)?, parse_family(&to)?);
            let obj = parse_object(from, &input, cli.n)?;
            bounded(obj.size(), family_limit(to), to.name())?;
            emit(&cli.out, &show(&convert(&obj, to)?, format))
        }
        Command::Verify { suite, size: k } => {
            let suite: Suite = suite.parse().map_err(usage)?;
            let n = bounded(size(k, cli.n)?, MAX_VERIFY_N, "verify")?;
            let report = verify::run(suite, n);
            let text = match format {
                Format::Json => report.to_value().to_string() + "\n",
                _ => report
                    .checks
                    .iter()
                    .map(|c| {
                        let verdict = if c.passed() { "PASS" } else { "FAIL" };
                        format!("{verdict} {} n={} cases={}\n", c.name, c.n, c.cases)
                    })
                    .collect(),
            };
            emit(&cli.out, &text)?;
            if report.passed() {
                Ok(())
            } else {
                let names: Vec<String> = report
                    .failed()
                    .iter()
                    .map(|c| format!("{} (n={})", c.name, c.n))
                    .collect();
                Err(Failure {
                    code: 2,
                    message: format!("verification failed: {}", names.join(", ")),
                })
            }
        }
        Command::Render {
            family,
            input,
            backend,
        } => emit(&cli.out, &render(&family, &input, &backend, cli.n)?),
        Command::Chains { size: k } => {
            let n = bounded(size(k, cli.n)?, MAX_LATTICE_N, "chains")?;
            let count = count_maximal_chains(&build_lattice(n));
            let text = match format {
                Format::Json => match u64::try_from(&count) {
                    Ok(c) => json!({ "n": n, "chains": c }),
                    Err(_) => json!({ "n": n, "chains": count.to_string() }),
                }
                .to_string(),
                _ => count.to_string(),
            };
            emit(&cli.out, &(text + "\n"))
        }
        Command::Lattice { size: k } => {
            let n = bounded(size(k, cli.n)?, MAX_LATTICE_N, "lattice")?;
            let p = build_lattice(n);
            let text = match format {
                Format::Json => lattice_json(&p).to_string() + "\n",
                _ => p
                    .covers
                    .iter()
                    .map(|&(lo, hi)| format!("{} < {}\n", p.nodes[lo], p.nodes[hi]))
                    .collect(),
            };
            emit(&cli.out, &text)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("catalan: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
