//! Versioned JSON file formats ("v1").
//!
//! Rationals serialize as reduced `"p/q"` strings (`"p"` when q = 1),
//! matrices as row-major nested arrays, and every file carries a `version`
//! field. Keys are emitted in sorted order so output is canonical.

use serde::{Deserialize, Serialize};

use crate::equivariant::{EquivariantMorphism, Symmetry};
use crate::error::Error;
use crate::lie::StructureConstants;
use crate::matrix::RationalMatrix;
use crate::rational::Rational;
use crate::semidirect::BracketTable;

pub const SCHEMA_VERSION: &str = "v1";

fn default_version() -> String {
    SCHEMA_VERSION.to_string()
}

fn check_version(version: &str) -> Result<(), Error> {
    if version == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "unsupported schema version {version:?}, expected {SCHEMA_VERSION:?}"
        )))
    }
}

/// One nonzero bracket [e_i, e_j] with i < j.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub value: Vec<Rational>,
}

/// Structure-constants file: only the i < j nonzero entries are listed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScFile {
    pub brackets: Vec<BracketJson>,
    pub dim: usize,
    #[serde(default = "default_version")]
    pub version: String,
}

impl ScFile {
    pub fn from_structure_constants(sc: &StructureConstants) -> Self {
        ScFile {
            brackets: sc
                .upper_brackets()
                .into_iter()
                .map(|(i, j, value)| BracketJson { i, j, value })
                .collect(),
            dim: sc.dim(),
            version: default_version(),
        }
    }

    pub fn into_structure_constants(self) -> Result<StructureConstants, Error> {
        check_version(&self.version)?;
        StructureConstants::from_upper_brackets(
            self.dim,
            self.brackets.into_iter().map(|b| (b.i, b.j, b.value)),
        )
    }
}

/// Bracket-table file for `build`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableFile {
    pub entries: Vec<TableEntryJson>,
    #[serde(default = "default_version")]
    pub version: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableEntryJson {
    pub i: usize,
    pub j: usize,
    #[serde(default = "Rational::one")]
    pub scale: Rational,
    pub target: usize,
}

impl TableFile {
    pub fn from_table(table: &BracketTable) -> Self {
        TableFile {
            entries: table
                .entries
                .iter()
                .map(|e| TableEntryJson {
                    i: e.i,
                    j: e.j,
                    scale: e.scale.clone(),
                    target: e.target,
                })
                .collect(),
            version: default_version(),
        }
    }

    pub fn into_table(self) -> Result<BracketTable, Error> {
        check_version(&self.version)?;
        Ok(BracketTable {
            entries: self
                .entries
                .into_iter()
                .map(|e| crate::semidirect::BracketEntry {
                    i: e.i,
                    j: e.j,
                    scale: e.scale,
                    target: e.target,
                })
                .collect(),
        })
    }
}

/// Morphism output of the `morphism` subcommand.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorphismFile {
    pub k: usize,
    pub m: usize,
    pub matrix: Vec<Vec<Rational>>,
    pub n: usize,
    pub normalization: String,
    pub symmetry: Symmetry,
    #[serde(default = "default_version")]
    pub version: String,
}

impl MorphismFile {
    pub fn from_morphism(g: &EquivariantMorphism, normalization: &str) -> Self {
        MorphismFile {
            k: g.k,
            m: g.m,
            matrix: matrix_rows(&g.matrix),
            n: g.n,
            normalization: normalization.to_string(),
            symmetry: g.symmetry,
            version: default_version(),
        }
    }
}

pub fn matrix_rows(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

/// Structured error object printed by the CLI on domain errors.
#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Serialize)]
pub struct ErrorFile {
    pub error: ErrorBody,
}

impl ErrorFile {
    pub fn from_error(e: &Error) -> Self {
        ErrorFile {
            error: ErrorBody {
                kind: e.kind().to_string(),
                message: e.to_string(),
            },
        }
    }
}
