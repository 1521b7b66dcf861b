//! Command-line interface: deterministic JSON in, deterministic JSON out.
//!
//! Exit codes: 0 on success (including negative verdicts such as
//! `{"is_lie": false}`), 1 on usage errors, 2 on domain errors with a
//! structured error object on stdout. `-` as a file name reads stdin.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use sympalg::classify::{classify, enumerate_tuples};
use sympalg::clebsch::{
    decompose_sym2, decompose_tensor, decompose_wedge2, submodule_basis, Decomposition,
};
use sympalg::derivations::{derivation_space, inner_dimension, is_sympathetic};
use sympalg::equivariant::{build_morphism, compare_up_to_scale, golden};
use sympalg::error::Error;
use sympalg::schema::{matrix_rows, ErrorFile, MorphismFile, ScFile, TableFile};
use sympalg::semidirect::{assemble, build_benayadi25, RadicalSpec};
use sympalg::sl2::{product_space, ProductSpaceKind};

#[derive(Parser)]
#[command(
    name = "sympalg",
    about = "Exact sl2(C) representation workbench and sympathetic Lie algebra classifier",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceKind {
    Tensor,
    Wedge2,
    Sym2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Normalization {
    /// Identity on the lowering chain of V_k.
    Chain,
    /// Rescaled to the stored hand-normalized table when one exists.
    Paper,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a tensor, exterior or symmetric square into simple modules.
    Decompose {
        #[arg(long, value_enum)]
        kind: SpaceKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Print the chain basis of the simple summand V_k of a product space.
    Submodule {
        #[arg(long, value_enum)]
        kind: SpaceKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: usize,
    },
    /// Build the equivariant morphism V_n (x) V_m -> V_k.
    Morphism {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "chain")]
        normalize: Normalization,
    },
    /// Assemble sl2(C) x| h from weights and a bracket-table file.
    Build {
        /// Comma-separated module weights, e.g. 6,4,6,2.
        #[arg(long)]
        weights: String,
        #[arg(long)]
        table: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Verify the Jacobi identity of a structure-constants file.
    Jacobi {
        /// Structure-constants file, or - for stdin.
        file: String,
    },
    /// Compute the derivation algebra of a structure-constants file.
    Derivations {
        file: String,
    },
    /// Report the three sympathy flags of a structure-constants file.
    Sympathy {
        file: String,
    },
    /// Run the elimination pipeline up to a dimension bound.
    Classify {
        #[arg(long, default_value_t = 25)]
        dim_bound: usize,
        /// Number of simple radical modules (3 or 4).
        #[arg(long, default_value_t = 4)]
        s: usize,
        /// Write the full candidate report to this file.
        #[arg(long)]
        report: Option<String>,
    },
    /// Emit the 25-dimensional sympathetic Lie algebra.
    Benayadi25 {
        #[arg(long)]
        out: Option<String>,
    },
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidInput(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))
    }
}

fn parse_sc(path: &str) -> Result<sympalg::lie::StructureConstants, Error> {
    let text = read_input(path)?;
    let file: ScFile = serde_json::from_str(&text)
        .map_err(|e| Error::InvalidInput(format!("invalid structure-constants JSON: {e}")))?;
    file.into_structure_constants()
}

fn emit<T: Serialize>(value: &T, out: Option<&str>) -> Result<(), Error> {
    let json = serde_json::to_string(value).expect("serializable");
    match out {
        Some(path) => fs::write(path, json.as_bytes())
            .map_err(|e| Error::InvalidInput(format!("cannot write {path}: {e}"))),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

fn decomposition_for(kind: SpaceKind, n: usize, m: Option<usize>) -> Result<Decomposition, Error> {
    match kind {
        SpaceKind::Tensor => {
            let m = m.ok_or_else(|| Error::InvalidInput("tensor needs --m".into()))?;
            decompose_tensor(n, m)
        }
        SpaceKind::Wedge2 => Ok(decompose_wedge2(n)),
        SpaceKind::Sym2 => Ok(decompose_sym2(n)),
    }
}

fn space_kind(kind: SpaceKind, n: usize, m: Option<usize>) -> Result<ProductSpaceKind, Error> {
    match kind {
        SpaceKind::Tensor => {
            let m = m.ok_or_else(|| Error::InvalidInput("tensor needs --m".into()))?;
            if n < m {
                return Err(Error::ArgumentOrder { n, m });
            }
            Ok(ProductSpaceKind::Tensor { n, m })
        }
        SpaceKind::Wedge2 => Ok(ProductSpaceKind::Wedge2 { n }),
        SpaceKind::Sym2 => Ok(ProductSpaceKind::Sym2 { n }),
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Decompose { kind, n, m } => {
            let d = decomposition_for(kind, n, m)?;
            emit(&json!({ "weights": d.weights }), None)
        }
        Command::Submodule { kind, n, m, k } => {
            let space = product_space(space_kind(kind, n, m)?);
            let chain = submodule_basis(&space, k)?;
            emit(
                &json!({
                    "k": k,
                    "kind": space.kind.to_string(),
                    "vectors": chain.vectors,
                }),
                None,
            )
        }
        Command::Morphism { n, m, k, normalize } => {
            let built = build_morphism(n, m, k)?;
            let (morphism, label) = match normalize {
                Normalization::Chain => (built, "chain"),
                Normalization::Paper => match golden::lookup(n, m, k) {
                    Some(table) => {
                        let scale = compare_up_to_scale(&table, &built).ok_or_else(|| {
                            Error::InvalidInput(
                                "stored table is not proportional to the construction".into(),
                            )
                        })?;
                        (built.scale(&scale), "paper")
                    }
                    None => (built, "chain"),
                },
            };
            emit(&MorphismFile::from_morphism(&morphism, label), None)
        }
        Command::Build { weights, table, out } => {
            let weights: Vec<usize> = weights
                .split(',')
                .map(|w| {
                    w.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidInput(format!("bad weight {w:?}")))
                })
                .collect::<Result<_, _>>()?;
            let text = read_input(&table)?;
            let table_file: TableFile = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidInput(format!("invalid table JSON: {e}")))?;
            let algebra = assemble(&RadicalSpec::new(weights), &table_file.into_table()?)?;
            emit(
                &ScFile::from_structure_constants(&algebra.sc),
                out.as_deref(),
            )
        }
        Command::Jacobi { file } => {
            let sc = parse_sc(&file)?;
            let (is_lie, witness) = sc.is_lie_algebra();
            match witness {
                None => emit(&json!({ "is_lie": is_lie }), None),
                Some(w) => emit(
                    &json!({
                        "is_lie": is_lie,
                        "witness": {
                            "defect": matrix_rows(&w.defect),
                            "i": w.i,
                            "j": w.j,
                        },
                    }),
                    None,
                ),
            }
        }
        Command::Derivations { file } => {
            let sc = parse_sc(&file)?;
            let der = derivation_space(&sc)?;
            emit(
                &json!({
                    "basis": der.basis.iter().map(matrix_rows).collect::<Vec<_>>(),
                    "dim_ad": inner_dimension(&sc),
                    "dim_der": der.dim_total(),
                }),
                None,
            )
        }
        Command::Sympathy { file } => {
            let sc = parse_sc(&file)?;
            emit(&is_sympathetic(&sc)?, None)
        }
        Command::Classify { dim_bound, s, report } => {
            if s != 3 && s != 4 {
                return Err(Error::InvalidInput("--s must be 3 or 4".into()));
            }
            let outcome = classify(dim_bound, s);
            if let Some(path) = &report {
                emit(
                    &json!({
                        "candidates": outcome.candidates,
                        "dim_bound": outcome.dim_bound,
                        "elapsed_ms": outcome.elapsed_ms,
                        "s": outcome.s,
                        "shape_eliminations": outcome.shape_eliminations,
                        "version": sympalg::schema::SCHEMA_VERSION,
                    }),
                    Some(path),
                )?;
            }
            let survivors: Vec<_> = outcome
                .survivors()
                .iter()
                .map(|c| json!({ "table": c.table, "weights": c.weights }))
                .collect();
            let tuples = if s == 4 {
                enumerate_tuples(dim_bound).len()
            } else {
                outcome.candidates.len()
            };
            emit(
                &json!({
                    "candidates": outcome.candidates.len(),
                    "dim_bound": dim_bound,
                    "enumerated_tuples": tuples,
                    "s": s,
                    "survivors": survivors,
                    "undecided": outcome.undecided().len(),
                }),
                None,
            )
        }
        Command::Benayadi25 { out } => {
            let algebra = build_benayadi25();
            emit(
                &ScFile::from_structure_constants(&algebra.sc),
                out.as_deref(),
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let body = ErrorFile::from_error(&e);
            println!("{}", serde_json::to_string(&body).expect("serializable"));
            ExitCode::from(2)
        }
    }
}
