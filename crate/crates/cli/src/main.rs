//! `qalg`: complexes, presentations, Hilbert tables, membership queries and
//! the verification suite from the command line.
//!
//! Exit status: 0 on success, 1 when a verification fails or a polynomial is
//! not a member, 2 on usage or input errors.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use qalg_core::presentations::{
    all_triples, rel_10, rel_4, rel_5, rel_9, rel_additive, rel_multiplicative, theorem_relations_labeled,
};
use qalg_core::verifier::REPORT_SCHEMA;
use qalg_core::{
    graph_presentation, parse_polynomial, qf_presentation, run_all, CheckKind, Complex, Graph, NodeSet, Polynomial,
    Presentation, RunConfig, TruncatedIdealBasis,
};

#[derive(Parser, Debug)]
#[command(name = "qalg", version, about = "Quotient algebras of simplicial complexes over the rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the downward closure of a complex file.
    Closure {
        #[arg(long)]
        complex: PathBuf,
    },
    /// Print relation polynomials of one family.
    ///
    /// With every parameter of the family given, prints the single instance.
    /// Otherwise prints all instances matching the given parameters, one per
    /// line with its parameters.
    Relations {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, required_unless_present = "complex")]
        n: Option<usize>,
        /// Set `A` (or `A′` for family 9) as a comma list, e.g. "1,3" or "".
        #[arg(long = "A", allow_hyphen_values = true)]
        a: Option<String>,
        /// Set `B′` for family 9.
        #[arg(long = "B", allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long)]
        i: Option<usize>,
        #[arg(long)]
        j: Option<usize>,
        /// Graph for `--family theorem`; supplies `n` for the other families.
        #[arg(long, conflicts_with = "n")]
        complex: Option<PathBuf>,
    },
    /// Print graded dimensions of the quotient as JSON.
    Hilbert {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = PresentationKind::QF)]
        presentation: PresentationKind,
    },
    /// Decide ideal membership of a polynomial.
    Membership {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = PresentationKind::QF)]
        presentation: PresentationKind,
    },
    /// Run verification checks.
    Verify {
        #[arg(long, conflicts_with = "n")]
        complex: Option<PathBuf>,
        /// Universe size; the graph checks then use the complete graph.
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated check names; all checks when omitted.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Record wall-clock milliseconds in JSON output instead of 0.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "1")]
    Additive,
    #[value(name = "2")]
    Multiplicative,
    #[value(name = "4")]
    Four,
    #[value(name = "5")]
    Five,
    #[value(name = "9")]
    Nine,
    #[value(name = "10")]
    Ten,
    #[value(name = "theorem")]
    Theorem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PresentationKind {
    #[value(name = "qF")]
    QF,
    #[value(name = "graph")]
    Graph,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Success,
    Negative,
}

/// A user-facing input error.
#[derive(Debug)]
struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<qalg_core::Error> for InputError {
    fn from(e: qalg_core::Error) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<Outcome, InputError>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    n: usize,
    facets: Vec<Vec<usize>>,
}

fn parse_complex_file(path: &Path) -> Result<Complex, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read complex file {}: {e}", path.display())))?;
    let raw: ComplexFile = serde_json::from_str(&text)
        .map_err(|e| InputError(format!("malformed complex JSON in {}: {e}", path.display())))?;
    Complex::from_facet_lists(raw.n, &raw.facets)
        .map_err(|e| InputError(format!("invalid complex in {}: {e}", path.display())))
}

fn parse_set(text: &str, n: usize, flag: &str) -> Result<NodeSet, InputError> {
    let body = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut elems = Vec::new();
    for part in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let v: usize = part.parse().map_err(|_| InputError(format!("--{flag}: '{part}' is not a vertex number")))?;
        elems.push(v);
    }
    NodeSet::from_elems(n, &elems).map_err(|e| InputError(format!("--{flag}: {e}")))
}

fn index(v: usize, n: usize, flag: &str) -> Result<u8, InputError> {
    if v == 0 || v > n {
        let e = if v == 0 {
            qalg_core::Error::ZeroVertex
        } else {
            qalg_core::Error::VertexOutOfRange { vertex: v, n: n as u8 }
        };
        return Err(InputError(format!("--{flag}: {e}")));
    }
    Ok(v as u8)
}

#[derive(Serialize)]
struct ClosureJson {
    schema: u32,
    n: u8,
    dimension: usize,
    faces: Vec<Vec<u8>>,
}

fn closure(path: &Path) -> CmdResult {
    let c = parse_complex_file(path)?;
    let out = ClosureJson {
        schema: REPORT_SCHEMA,
        n: c.universe(),
        dimension: c.dimension(),
        faces: c.faces().iter().map(NodeSet::to_vec).collect(),
    };
    println!("{}", serde_json::to_string(&out).expect("serializable"));
    Ok(Outcome::Success)
}

struct RelationArgs {
    family: Family,
    n: Option<usize>,
    a: Option<String>,
    b: Option<String>,
    i: Option<usize>,
    j: Option<usize>,
    complex: Option<PathBuf>,
}

fn relations(args: RelationArgs) -> CmdResult {
    let complex = args.complex.as_deref().map(parse_complex_file).transpose()?;
    let n = match (&complex, args.n) {
        (Some(c), _) => c.universe() as usize,
        (None, Some(n)) => n,
        (None, None) => return Err(InputError("one of --n or --complex is required".into())),
    };
    NodeSet::empty(n)?;

    if args.family == Family::Theorem {
        if args.a.is_some() || args.b.is_some() || args.i.is_some() || args.j.is_some() {
            return Err(InputError("--family theorem takes no --A, --B, --i or --j".into()));
        }
        let g = match &complex {
            Some(c) => Graph::from_complex(c)?,
            None => Graph::complete(n)?,
        };
        for r in theorem_relations_labeled(&g) {
            let idx: Vec<String> = r.indices.iter().map(u8::to_string).collect();
            println!("{} [{}]: {}", r.clause, idx.join(","), r.poly);
        }
        return Ok(Outcome::Success);
    }

    let a = args.a.as_deref().map(|s| parse_set(s, n, "A")).transpose()?;
    let b = args.b.as_deref().map(|s| parse_set(s, n, "B")).transpose()?;
    let i = args.i.map(|v| index(v, n, "i")).transpose()?;
    let j = args.j.map(|v| index(v, n, "j")).transpose()?;
    let nine = args.family == Family::Nine;
    if !nine && b.is_some() {
        return Err(InputError("--B applies only to --family 9".into()));
    }

    let build = |a: NodeSet, b: NodeSet, i: u8, j: u8| -> qalg_core::Result<Polynomial> {
        match args.family {
            Family::Additive => rel_additive(a, i, j),
            Family::Multiplicative => rel_multiplicative(a, i, j),
            Family::Four => rel_4(a, i, j),
            Family::Five => rel_5(a, i, j),
            Family::Nine => rel_9(a, b, i, j),
            Family::Ten => rel_10(a, i, j),
            Family::Theorem => unreachable!(),
        }
    };

    let empty = NodeSet::empty(n)?;
    if let (Some(a), Some(i), Some(j)) = (a, i, j) {
        if !nine || b.is_some() {
            println!("{}", build(a, b.unwrap_or(empty), i, j)?);
            return Ok(Outcome::Success);
        }
    }

    let mut instances: Vec<(NodeSet, Option<NodeSet>, u8, u8)> = Vec::new();
    if nine {
        let full = NodeSet::full(n)?;
        for ii in 1..=n as u8 {
            for jj in (1..=n as u8).filter(|&x| x != ii) {
                for ap in full.without(ii).subsets() {
                    for bp in full.without(jj).subsets() {
                        instances.push((ap, Some(bp), ii, jj));
                    }
                }
            }
        }
    } else {
        instances.extend(all_triples(n)?.into_iter().map(|(a, i, j)| (a, None, i, j)));
    }
    instances.retain(|&(ia, ib, ii, ij)| {
        a.is_none_or(|x| x == ia)
            && b.is_none_or(|x| Some(x) == ib)
            && i.is_none_or(|x| x == ii)
            && j.is_none_or(|x| x == ij)
    });
    if instances.is_empty() {
        return Err(InputError("no valid instance matches the given parameters".into()));
    }
    for (ia, ib, ii, ij) in instances {
        let poly = build(ia, ib.unwrap_or(empty), ii, ij)?;
        match ib {
            Some(ib) => println!("A={ia} B={ib} i={ii} j={ij}: {poly}"),
            None => println!("A={ia} i={ii} j={ij}: {poly}"),
        }
    }
    Ok(Outcome::Success)
}

fn presentation_for(c: &Complex, kind: PresentationKind) -> Result<Presentation, InputError> {
    Ok(match kind {
        PresentationKind::QF => qf_presentation(c)?,
        PresentationKind::Graph => graph_presentation(&Graph::from_complex(c)?)?,
    })
}

#[derive(Serialize)]
struct HilbertJson<'a> {
    schema: u32,
    label: &'a str,
    dims: Vec<usize>,
}

fn hilbert(path: &Path, max_degree: usize, kind: PresentationKind) -> CmdResult {
    let c = parse_complex_file(path)?;
    let p = presentation_for(&c, kind)?;
    let basis = TruncatedIdealBasis::new(&p, max_degree)?;
    let out = HilbertJson { schema: REPORT_SCHEMA, label: p.label(), dims: basis.dimensions() };
    println!("{}", serde_json::to_string(&out).expect("serializable"));
    Ok(Outcome::Success)
}

fn membership(path: &Path, poly: &str, max_degree: usize, kind: PresentationKind) -> CmdResult {
    let c = parse_complex_file(path)?;
    let n = c.universe() as usize;
    let q = parse_polynomial(poly, n).map_err(|e| InputError(format!("--poly: {e}")))?;
    let p = presentation_for(&c, kind)?;
    if let Some(s) = q.symbols().into_iter().find(|s| !p.alphabet().contains(s)) {
        return Err(InputError(format!("--poly: symbol {s} is not a generator of {}", p.label())));
    }
    let degree = q.degree().unwrap_or(0);
    if degree > max_degree {
        return Err(InputError(format!("--poly has degree {degree}, above --max-degree {max_degree}")));
    }
    let basis = TruncatedIdealBasis::new(&p, max_degree)?;
    let mut remainder = Polynomial::zero();
    for (_, component) in q.graded_components() {
        remainder = &remainder + &basis.normal_form(&component)?;
    }
    if remainder.is_zero() {
        println!("member");
        println!("remainder: 0");
        Ok(Outcome::Success)
    } else {
        println!("non-member");
        println!("remainder: {remainder}");
        Ok(Outcome::Negative)
    }
}

struct VerifyArgs {
    complex: Option<PathBuf>,
    n: Option<usize>,
    checks: Vec<String>,
    max_degree: usize,
    format: Format,
    timings: bool,
}

fn verify(args: VerifyArgs) -> CmdResult {
    let mut config = RunConfig { max_degree: args.max_degree, ..RunConfig::default() };
    if let Some(path) = &args.complex {
        let c = parse_complex_file(path)?;
        config.n = c.universe() as usize;
        config.complex = Some(c);
    } else if let Some(n) = args.n {
        NodeSet::empty(n)?;
        config.n = n;
    }
    if !args.checks.is_empty() {
        let names: Vec<&str> = args.checks.iter().map(|s| s.trim()).filter(|s| !s.is_empty()).collect();
        config = config.with_check_names(&names).map_err(|e| {
            let known: Vec<&str> = CheckKind::ALL.iter().map(|k| k.name()).collect();
            InputError(format!("--checks: {e}; known checks: {}", known.join(", ")))
        })?;
    }
    let mut report = run_all(&config)?;
    match args.format {
        Format::Text => print!("{}", report.summary_text()),
        Format::Json => {
            if !args.timings {
                for e in &mut report.entries {
                    e.millis = 0;
                }
            }
            println!("{}", report.to_json());
        }
    }
    Ok(if report.pass { Outcome::Success } else { Outcome::Negative })
}

fn execute(cmd: Command) -> CmdResult {
    match cmd {
        Command::Closure { complex } => closure(&complex),
        Command::Relations { family, n, a, b, i, j, complex } => {
            relations(RelationArgs { family, n, a, b, i, j, complex })
        }
        Command::Hilbert { complex, max_degree, presentation } => hilbert(&complex, max_degree, presentation),
        Command::Membership { complex, poly, max_degree, presentation } => {
            membership(&complex, &poly, max_degree, presentation)
        }
        Command::Verify { complex, n, checks, max_degree, format, timings } => {
            verify(VerifyArgs { complex, n, checks, max_degree, format, timings })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
