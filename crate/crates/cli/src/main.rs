//! Command-line front end for the `lascoux` crate.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lascoux::crystal::{
    enumerate_atom, generate_bn_limited, generate_ssyt, generate_svt, CrystalGraph,
};
use lascoux::poly::{self, generating_function, PolyError};
use lascoux::starkeys::{right_key_oracle, right_key_svt};
use lascoux::verify::{run_all, Bounds, Fault};
use lascoux::{BigInt, Composition, KeyTableau, Partition, Polynomial, SetValuedTableau};

#[derive(Parser, Debug)]
#[command(
    name = "lascoux",
    version,
    about = "Lascoux polynomials and set-valued tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lascoux polynomial of a weak composition.
    Lascoux(PolyArgs),
    /// Key polynomial (the β = 0 specialization).
    Key(PolyArgs),
    /// Lascoux atom.
    Atom(PolyArgs),
    /// Stable Grothendieck polynomial of a partition in n variables.
    Grothendieck(GrothendieckArgs),
    /// List the set-valued tableaux of a composition as JSON lines.
    Svt(SvtArgs),
    /// Right key of a tableau given as JSON (or `-` for stdin).
    Rightkey(RightkeyArgs),
    /// Export the crystal graph on SVT(α) or on all tableaux of shape λ.
    Crystal(CrystalArgs),
    /// Run the bounded cross-check suites.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Latex,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Operator,
    Svt,
    Both,
}

#[derive(Args, Debug)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PolyArgs {
    /// Weak composition, e.g. `1,0,2`.
    #[arg(long, value_parser = parse_composition)]
    alpha: Composition,
    /// Number of variables; defaults to the support of α.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Route used to compute the polynomial; `both` compares the two.
    #[arg(long, value_enum, default_value_t = Method::Operator)]
    method: Method,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct GrothendieckArgs {
    /// Partition, e.g. `2,1`.
    #[arg(long, value_parser = parse_partition)]
    lambda: Partition,
    /// Number of variables; defaults to the number of parts.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long, value_enum, default_value_t = Method::Operator)]
    method: Method,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct SvtArgs {
    #[arg(long, value_parser = parse_composition)]
    alpha: Composition,
    /// Tableaux with right key exactly key(α).
    #[arg(long, conflicts_with = "ssyt")]
    atoms: bool,
    /// Semistandard tableaux only.
    #[arg(long)]
    ssyt: bool,
    /// Print only the number of tableaux.
    #[arg(long)]
    count: bool,
    /// Refuse to enumerate more than this many tableaux.
    #[arg(long, default_value_t = 100_000)]
    limit: u64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct RightkeyArgs {
    /// Tableau JSON such as `{"shape":[2,1],"cells":[[[1],[2,3]],[[3]]]}`, or `-`.
    tableau: String,
    /// Recompute with the selection oracle and fail if it disagrees.
    #[arg(long)]
    oracle: bool,
    /// `json` prints the key as tableau JSON, `plain` prints its rows.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct CrystalArgs {
    /// Use the tableaux of SVT(α) as nodes.
    #[arg(long, value_parser = parse_composition, conflicts_with = "lambda", required_unless_present = "lambda")]
    alpha: Option<Composition>,
    /// Use every tableau of shape λ with entries at most n as nodes.
    #[arg(long, value_parser = parse_partition, requires = "n")]
    lambda: Option<Partition>,
    #[arg(long)]
    n: Option<usize>,
    /// Edge labels to draw, e.g. `2` or `1,2`; defaults to all.
    #[arg(long, value_delimiter = ',')]
    i: Vec<usize>,
    /// Print a component summary instead of the DOT graph.
    #[arg(long)]
    count: bool,
    /// Refuse graphs with more nodes than this.
    #[arg(long, default_value_t = 10_000)]
    limit: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    max_support: usize,
    #[arg(long, default_value_t = 3)]
    max_entry: u32,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    /// Largest shape for the crystal and right-key suites.
    #[arg(long, value_parser = parse_partition, default_value = "3,2,1")]
    shape: Partition,
    /// Random polynomials for the operator suite.
    #[arg(long, default_value_t = 100)]
    samples: usize,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Replace f′ by a deliberately wrong edit.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Mismatch(String),
}

impl<E: Display> From<E> for Failure {
    fn from(err: E) -> Self {
        Failure::Usage(err.to_string())
    }
}

fn parse_numbers(text: &str) -> Result<Vec<u32>, String> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("{p:?}: {e}")))
        .collect()
}

fn parse_composition(text: &str) -> Result<Composition, String> {
    parse_numbers(text).map(Composition::new)
}

fn parse_partition(text: &str) -> Result<Partition, String> {
    let parts = parse_numbers(text)?;
    Partition::new(parts).ok_or_else(|| format!("{text:?} is not weakly decreasing"))
}

fn emit(output: &Output, text: &str) -> Result<(), Failure> {
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn render(p: &Polynomial, format: Format) -> String {
    let body = match format {
        Format::Plain => p.to_plain(),
        Format::Latex => p.to_latex(),
        Format::Json => p.to_json().to_string(),
    };
    body + "\n"
}

fn variables(requested: Option<usize>, support: usize) -> Result<usize, Failure> {
    match requested {
        Some(n) if n < support => Err(PolyError::TooFewVariables { needed: support, n }.into()),
        Some(n) => Ok(n),
        None => Ok(support),
    }
}

fn too_many(count: &BigInt, limit: u64, what: &str) -> Result<(), Failure> {
    if *count > BigInt::from(limit) {
        return Err(Failure::Usage(format!(
            "{what} has {count} elements, above the limit of {limit}; raise --limit"
        )));
    }
    Ok(())
}

fn compare(
    method: Method,
    operator: impl FnOnce() -> Result<Polynomial, Failure>,
    tableaux: impl FnOnce() -> Result<Polynomial, Failure>,
) -> Result<Polynomial, Failure> {
    match method {
        Method::Operator => operator(),
        Method::Svt => tableaux(),
        Method::Both => {
            let lhs = operator()?;
            let rhs = tableaux()?;
            if lhs != rhs {
                return Err(Failure::Mismatch(format!(
                    "operator route gives {lhs}\ntableau route gives {rhs}"
                )));
            }
            Ok(lhs)
        }
    }
}

fn cmd_poly(args: &PolyArgs, which: &str) -> Result<(), Failure> {
    let alpha = &args.alpha;
    let n = variables(args.n, alpha.support())?;
    let p = match which {
        "lascoux" => compare(
            args.method,
            || Ok(poly::lascoux(alpha, n)?),
            || Ok(generating_function(&generate_svt(alpha), n)?),
        )?,
        "key" => compare(
            args.method,
            || Ok(poly::key_poly(alpha, n)?),
            || Ok(generating_function(&generate_ssyt(alpha), n)?),
        )?,
        _ => compare(
            args.method,
            || Ok(poly::atom(alpha, n)?),
            || Ok(generating_function(&enumerate_atom(alpha)?, n)?),
        )?,
    };
    emit(&args.output, &render(&p, args.format))
}

fn cmd_grothendieck(args: &GrothendieckArgs) -> Result<(), Failure> {
    let lambda = &args.lambda;
    let n = variables(args.n, lambda.rows())?;
    let p = compare(
        args.method,
        || Ok(poly::grothendieck(lambda, n)?),
        || {
            let all = generate_bn_limited(lambda, n, 100_000)?;
            Ok(generating_function(&all, n)?)
        },
    )?;
    emit(&args.output, &render(&p, args.format))
}

/// Sort key: excess, then weight with larger exponents of `x_1` first, then JSON.
fn canonical(tableaux: BTreeSet<SetValuedTableau>, n: usize) -> Vec<(SetValuedTableau, String)> {
    let mut keyed: Vec<_> = tableaux
        .into_iter()
        .map(|t| {
            let json = t.to_json();
            let weight: Vec<std::cmp::Reverse<u32>> = t
                .weight()
                .padded(n)
                .into_iter()
                .map(std::cmp::Reverse)
                .collect();
            ((t.excess(), weight, json.clone()), (t, json))
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, v)| v).collect()
}

fn cmd_svt(args: &SvtArgs) -> Result<(), Failure> {
    let alpha = &args.alpha;
    let n = alpha.support();
    let expected = if args.atoms {
        poly::atom(alpha, n)?
    } else if args.ssyt {
        poly::key_poly(alpha, n)?
    } else {
        poly::lascoux(alpha, n)?
    }
    .coefficient_sum();
    if args.count {
        return emit(&args.output, &format!("{expected}\n"));
    }
    too_many(
        &expected,
        args.limit,
        &format!("the tableau set of {alpha}"),
    )?;
    let set = if args.atoms {
        enumerate_atom(alpha)?
    } else if args.ssyt {
        generate_ssyt(alpha)
    } else {
        generate_svt(alpha)
    };
    if BigInt::from(set.len()) != expected {
        return Err(Failure::Mismatch(format!(
            "enumerated {} tableaux, polynomial predicts {expected}",
            set.len()
        )));
    }
    let text: String = canonical(set, n)
        .into_iter()
        .map(|(_, json)| json + "\n")
        .collect();
    emit(&args.output, &text)
}

fn cmd_rightkey(args: &RightkeyArgs) -> Result<(), Failure> {
    let text = if args.tableau == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        args.tableau.clone()
    };
    let t = SetValuedTableau::from_json(text.trim())?;
    let key = right_key_svt(&t);
    if args.oracle {
        let oracle = right_key_oracle(&t)?;
        if oracle != key {
            return Err(Failure::Mismatch(format!(
                "star key {} differs from oracle {}",
                key.as_tableau().to_json(),
                oracle.as_tableau().to_json()
            )));
        }
    }
    emit(&args.output, &render_key(&key, args.format))
}

fn render_key(key: &KeyTableau, format: Format) -> String {
    match format {
        Format::Json => key.as_tableau().to_json() + "\n",
        Format::Plain | Format::Latex => key
            .rows()
            .iter()
            .map(|row| {
                let cells: Vec<String> = row.iter().map(u32::to_string).collect();
                cells.join(" ") + "\n"
            })
            .collect(),
    }
}

fn cmd_crystal(args: &CrystalArgs) -> Result<(), Failure> {
    let (nodes, n) = match (&args.alpha, &args.lambda) {
        (Some(alpha), _) => {
            let n = variables(args.n, alpha.support())?;
            let count = poly::lascoux(alpha, alpha.support())?.coefficient_sum();
            too_many(&count, args.limit as u64, &format!("SVT{alpha}"))?;
            (generate_svt(alpha).into_iter().collect::<Vec<_>>(), n)
        }
        (None, Some(lambda)) => {
            let n = args.n.expect("clap requires --n with --lambda");
            (generate_bn_limited(lambda, n, args.limit)?, n)
        }
        (None, None) => unreachable!("clap requires --alpha or --lambda"),
    };
    let labels: Vec<usize> = if args.i.is_empty() {
        (1..n).collect()
    } else {
        args.i.clone()
    };
    if let Some(&bad) = labels.iter().find(|&&i| i == 0) {
        return Err(Failure::Usage(format!(
            "edge label {bad} must be at least 1"
        )));
    }
    let graph = CrystalGraph::build(nodes, &labels);
    let text = if args.count {
        let sizes = graph.component_sizes();
        let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
        format!(
            "nodes {}\nedges {}\ncomponents {}\nsizes {}\n",
            graph.nodes.len(),
            graph.edges.len(),
            sizes.len(),
            sizes.join(" ")
        )
    } else {
        graph.to_dot()
    };
    emit(&args.output, &text)
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let bounds = Bounds {
        max_support: args.max_support,
        max_entry: args.max_entry,
        max_n: args.max_n,
        shape: args.shape.clone(),
        random_samples: args.samples,
        seed: args.seed,
    };
    let fault = if args.inject_fault {
        Fault::FirstRightForm
    } else {
        Fault::None
    };
    let mut failed = Vec::new();
    for report in run_all(&bounds, fault) {
        let status = if report.passed() { "PASS" } else { "FAIL" };
        println!(
            "{status} {} ({} checks, {} failures)",
            report.name, report.checks, report.failures
        );
        for sample in &report.samples {
            println!("  {sample}");
        }
        if !report.passed() {
            failed.push(report.name);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!(
            "failing suites: {}",
            failed.join(", ")
        )))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Lascoux(args) => cmd_poly(args, "lascoux"),
        Command::Key(args) => cmd_poly(args, "key"),
        Command::Atom(args) => cmd_poly(args, "atom"),
        Command::Grothendieck(args) => cmd_grothendieck(args),
        Command::Svt(args) => cmd_svt(args),
        Command::Rightkey(args) => cmd_rightkey(args),
        Command::Crystal(args) => cmd_crystal(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(2)
        }
    }
}
