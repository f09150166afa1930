use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use leibniz_core::algebra::{catalog, AlgebraDoc};
use leibniz_core::poly::{family, ParamAlgebra, ParamAlgebraDoc, FAMILY_NAMES};
use leibniz_core::{AlgebraSpec, Cochain, CochainScheme, Coefficients, Kind};
use thiserror::Error;

mod report;
mod text;

use report::Report;

/// Largest algebra accepted for degree-3 adjoint requests without `--force`.
const DEGREE3_ADJOINT_CAP: usize = 9;

#[derive(Parser, Debug)]
#[command(name = "leibcoh", version, about = "Exact Lie and Leibniz cohomology over Q(i)")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for the linear algebra.
    #[arg(long, default_value_t = 1, global = true)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Coeff {
    Adjoint,
    Trivial,
}

impl From<Coeff> for Coefficients {
    fn from(c: Coeff) -> Self {
        match c {
            Coeff::Adjoint => Coefficients::Adjoint,
            Coeff::Trivial => Coefficients::Trivial,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check an algebra (or parameterized family) document.
    Validate {
        /// Input document; stdin when omitted or `-`.
        file: Option<PathBuf>,
    },
    /// Cocycles, coboundaries and cohomology in one degree.
    Cohomology {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Coeff::Adjoint)]
        coeff: Coeff,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=3))]
        deg: u8,
        /// Full tensor complex (the default).
        #[arg(long, conflicts_with = "lie")]
        leibniz: bool,
        /// Antisymmetric subcomplex; needs a Lie algebra.
        #[arg(long)]
        lie: bool,
        /// Lift the size guard on degree-3 adjoint requests.
        #[arg(long)]
        force: bool,
    },
    /// Invariant forms, the Koszul map and the uncoupling predicates.
    Koszul { file: Option<PathBuf> },
    /// Split HL^2 into Lie, symmetric and coupled parts.
    Decompose {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Coeff::Adjoint)]
        coeff: Coeff,
    },
    /// Massey product ledger of a multi-parameter deformation.
    Massey {
        file: Option<PathBuf>,
        /// 1-based indices into the canonical HL^2(g,g) basis, e.g. `1,3`.
        #[arg(long, value_delimiter = ',', conflicts_with = "cochains")]
        generators: Option<Vec<usize>>,
        /// JSON array of adjoint 2-cochains (`{"k;i,j": "c"}` maps) to use as generators.
        #[arg(long)]
        cochains: Option<PathBuf>,
        /// Parameter names, one per generator.
        #[arg(long, value_delimiter = ',')]
        params: Option<Vec<String>>,
        #[arg(long, default_value_t = 3)]
        order: u32,
    },
    /// Check a parameterized bracket table against a monomial ideal.
    Versal {
        file: Option<PathBuf>,
        /// Ideal generators, e.g. `tu,tw,t^2s`; empty for the zero ideal.
        #[arg(long, value_delimiter = ',', default_value = "")]
        ideal: Vec<String>,
    },
    /// Print a catalog algebra as a document.
    Catalog {
        /// e.g. `diamond_e`, `heisenberg`, `gl(3)`
        name: String,
        params: Vec<usize>,
    },
    /// Print a built-in parameterized family as a document.
    Family { name: String },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Invalid(_) => 2,
        }
    }
}

fn invalid(e: leibniz_core::Error) -> CliError {
    CliError::Invalid(e.to_string())
}

/// What a command produced, and whether its verdict was negative.
struct Outcome {
    body: Body,
    failed: bool,
}

enum Body {
    Report(Box<Report>),
    Document(serde_json::Value, String),
}

fn read_input(file: &Option<PathBuf>) -> Result<(String, String), CliError> {
    match file {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p)
            .map(|s| (s, p.display().to_string()))
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
            Ok((s, "<stdin>".to_string()))
        }
    }
}

fn parse_doc<T: serde::de::DeserializeOwned>(text: &str, origin: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("{origin}: {e}")))
}

fn load_algebra(file: &Option<PathBuf>) -> Result<AlgebraSpec, CliError> {
    let (text, origin) = read_input(file)?;
    let doc: AlgebraDoc = parse_doc(&text, &origin)?;
    AlgebraSpec::from_document(&doc).map_err(|e| CliError::Invalid(format!("{origin}: {e}")))
}

fn load_family(text: &str, origin: &str) -> Result<ParamAlgebra, CliError> {
    let doc: ParamAlgebraDoc = parse_doc(text, origin)?;
    ParamAlgebra::from_document(&doc).map_err(|e| CliError::Invalid(format!("{origin}: {e}")))
}

/// Commands past `validate` need the claimed identities to hold.
fn require_valid(spec: &AlgebraSpec) -> Result<(), CliError> {
    let r = spec.validate();
    if r.claim_holds {
        Ok(())
    } else {
        let what = match spec.kind() {
            Kind::Lie => "Lie",
            Kind::Leibniz => "Leibniz",
        };
        Err(CliError::Invalid(format!("input fails the {what} identities; run `validate`")))
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let report = |r: Report, failed: bool| Ok(Outcome { body: Body::Report(Box::new(r)), failed });
    match &cli.command {
        Command::Validate { file } => {
            let (text, origin) = read_input(file)?;
            let value: serde_json::Value = parse_doc(&text, &origin)?;
            if value.get("params").is_some() {
                let pa = load_family(&text, &origin)?;
                let (r, ok) = report::validate_family(&pa);
                report(r, !ok)
            } else {
                let doc: AlgebraDoc = parse_doc(&text, &origin)?;
                let spec = AlgebraSpec::from_document(&doc)
                    .map_err(|e| CliError::Invalid(format!("{origin}: {e}")))?;
                let r = report::validate(&spec);
                let ok = spec.validate().claim_holds;
                report(r, !ok)
            }
        }
        Command::Cohomology { file, coeff, deg, leibniz: _, lie, force } => {
            let spec = load_algebra(file)?;
            require_valid(&spec)?;
            let coeff = Coefficients::from(*coeff);
            if *deg == 3 && coeff == Coefficients::Adjoint && spec.dim() > DEGREE3_ADJOINT_CAP && !force {
                return Err(CliError::Usage(format!(
                    "degree-3 adjoint cohomology of a {}-dimensional algebra builds a {}-column system; pass --force to run it anyway",
                    spec.dim(),
                    CochainScheme::new(3, coeff, spec.dim()).total_dim()
                )));
            }
            if *lie && spec.kind() != Kind::Lie {
                return Err(CliError::Invalid("--lie needs a Lie algebra".into()));
            }
            report(report::cohomology(&spec, *deg as usize, coeff, *lie).map_err(invalid)?, false)
        }
        Command::Koszul { file } => {
            let spec = load_algebra(file)?;
            require_valid(&spec)?;
            report(report::koszul(&spec).map_err(invalid)?, false)
        }
        Command::Decompose { file, coeff } => {
            let spec = load_algebra(file)?;
            require_valid(&spec)?;
            report(report::decompose(&spec, (*coeff).into()).map_err(invalid)?, false)
        }
        Command::Massey { file, generators, cochains, params, order } => {
            let spec = load_algebra(file)?;
            require_valid(&spec)?;
            let gens = match cochains {
                Some(path) => {
                    let (text, origin) = read_input(&Some(path.clone()))?;
                    let maps: Vec<BTreeMap<String, String>> = parse_doc(&text, &origin)?;
                    let sc = CochainScheme::new(2, Coefficients::Adjoint, spec.dim());
                    maps.iter()
                        .map(|m| Cochain::from_named_map(sc, spec.names(), m))
                        .collect::<leibniz_core::Result<Vec<_>>>()
                        .map_err(|e| CliError::Invalid(format!("{origin}: {e}")))?
                }
                None => report::hl2_generators(&spec, generators.as_deref()).map_err(|e| match e {
                    report::GeneratorError::Index(msg) => CliError::Usage(msg),
                    report::GeneratorError::Core(e) => invalid(e),
                })?,
            };
            if gens.is_empty() {
                return Err(CliError::Usage("no generators".into()));
            }
            let names = match params {
                Some(p) if p.len() == gens.len() => p.clone(),
                Some(p) => {
                    return Err(CliError::Usage(format!(
                        "{} parameter names for {} generators",
                        p.len(),
                        gens.len()
                    )))
                }
                None => (1..=gens.len()).map(|i| format!("s{i}")).collect(),
            };
            if *order < 2 {
                return Err(CliError::Usage("--order must be at least 2".into()));
            }
            report(report::massey(&spec, names, &gens, *order).map_err(invalid)?, false)
        }
        Command::Versal { file, ideal } => {
            let (text, origin) = read_input(file)?;
            let pa = load_family(&text, &origin)?;
            let ideal: Vec<String> = ideal.iter().filter(|s| !s.trim().is_empty()).cloned().collect();
            let (r, holds) = report::versal(&pa, &ideal).map_err(|e| CliError::Usage(e.to_string()))?;
            report(r, !holds)
        }
        Command::Catalog { name, params } => {
            let spec = catalog(name, params).map_err(|e| CliError::Usage(e.to_string()))?;
            let value = serde_json::to_value(spec.to_document()).expect("documents serialize");
            Ok(Outcome { body: Body::Document(value, text::algebra_table(&spec)), failed: false })
        }
        Command::Family { name } => {
            let pa = family(name).map_err(|_| {
                CliError::Usage(format!("unknown family `{name}`; known: {}", FAMILY_NAMES.join(", ")))
            })?;
            let value = serde_json::to_value(pa.to_document()).expect("documents serialize");
            Ok(Outcome { body: Body::Document(value, text::family_table(&pa)), failed: false })
        }
    }
}

fn emit(cli: &Cli, outcome: &Outcome) -> Result<(), CliError> {
    let rendered = match (&outcome.body, cli.format) {
        (Body::Report(r), Format::Json) => {
            serde_json::to_string_pretty(r.as_ref()).expect("reports serialize") + "\n"
        }
        (Body::Report(r), Format::Text) => {
            text::render(&serde_json::to_value(r.as_ref()).expect("reports serialize"))
        }
        (Body::Document(v, _), Format::Json) => serde_json::to_string_pretty(v).expect("documents serialize") + "\n",
        (Body::Document(_, t), Format::Text) => t.clone(),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, rendered)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(rendered.as_bytes())
            .map_err(|e| CliError::Usage(format!("cannot write stdout: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.threads == 0 {
        eprintln!("leibcoh: --threads must be at least 1");
        return ExitCode::from(1);
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global() {
        eprintln!("leibcoh: {e}");
        return ExitCode::from(1);
    }
    let result = run(&cli).and_then(|o| emit(&cli, &o).map(|_| o.failed));
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(e) => {
            eprintln!("leibcoh: {e}");
            ExitCode::from(e.code())
        }
    }
}
