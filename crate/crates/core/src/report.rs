//! Serializable analysis reports.
//!
//! One [`AnalysisReport`] is emitted per command invocation. Every section
//! is optional, and readers ignore fields they do not know, so reports
//! written by a newer version still load. The JSON schema is published
//! alongside the crate as `schema/report.schema.json`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::oracle::WedderburnCheck;
use crate::quasigroup::{loop_structure, LatinSquare, PropertyRecord};
use crate::scheme::Point;
use crate::subconstituent::search::SearchReport;
use crate::subconstituent::{
    module_table, pi_of, Certificate, CycleStructure, ModuleTable, Profile,
    WedderburnSignature,
};

pub const SCHEMA_VERSION: &str = "1.0.0";

/// The published JSON schema for [`AnalysisReport`].
pub const SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl Default for ToolInfo {
    fn default() -> Self {
        ToolInfo {
            name: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    /// File path or `corpus:NAME`.
    pub source: String,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub properties: Option<PropertyRecord>,
}

/// Everything known about `π` at one base point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasePointRecord {
    pub base: Point,
    /// Cycle notation, 1-cycles omitted.
    pub pi: String,
    pub cycle_structure: CycleStructure,
    pub fixed_count: usize,
    /// Absent below order 5.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module_table: Option<ModuleTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signature: Option<WedderburnSignature>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted_dim: Option<usize>,
}

impl BasePointRecord {
    pub fn compute(square: &LatinSquare, base: &Point, with_modules: bool) -> Result<Self> {
        let pi = pi_of(square, base)?;
        let cycle_structure = pi.cycle_structure();
        let table = if with_modules {
            module_table(square.order(), &cycle_structure).ok()
        } else {
            None
        };
        let signature = table.as_ref().map(ModuleTable::signature);
        Ok(BasePointRecord {
            base: *base,
            pi: pi.to_string(),
            fixed_count: cycle_structure.fixed_count(),
            cycle_structure,
            predicted_dim: signature.map(|s| s.algebra_dimension()),
            module_table: table,
            signature,
        })
    }

    pub fn sixes(&self) -> Option<usize> {
        self.signature.map(|s| s.sixes)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileSummary {
    /// Per column, the cycle structure shared by every row, or `None` when
    /// the rows disagree.
    pub column_structures: Vec<Option<CycleStructure>>,
    pub row_constant: bool,
    pub fixed_counts: Vec<Vec<usize>>,
}

impl From<&Profile> for ProfileSummary {
    fn from(profile: &Profile) -> Self {
        ProfileSummary {
            column_structures: (1..=profile.order)
                .map(|c| profile.column_structure(c).cloned())
                .collect(),
            row_constant: profile.row_constant(),
            fixed_counts: profile.fixed_counts(),
        }
    }
}

/// For Moufang loops: `π` fixes exactly `s − 1` columns at every base point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoufangCheck {
    pub self_inverse: usize,
    pub predicted_fixed: usize,
    pub holds: bool,
}

impl MoufangCheck {
    /// `None` unless the square is a Moufang loop.
    pub fn evaluate(square: &LatinSquare, profile: &Profile, properties: &PropertyRecord) -> Option<Self> {
        if !properties.is_moufang {
            return None;
        }
        let s = loop_structure(square)?.self_inverse_count();
        let predicted_fixed = s - 1;
        let holds = profile
            .structures
            .iter()
            .all(|c| c.fixed_count() == predicted_fixed);
        Some(MoufangCheck {
            self_inverse: s,
            predicted_fixed,
            holds,
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moufang: Option<MoufangCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusListing {
    pub name: String,
    pub order: usize,
    pub description: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub boxed: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: String,
    #[serde(default)]
    pub tool: ToolInfo,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<InputDigest>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub base_points: Vec<BasePointRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Verdicts>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub oracle: Vec<WedderburnCheck>,
    /// The transformed square in canonical text form.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub square: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub corpus: Vec<CorpusListing>,
}

impl AnalysisReport {
    pub fn new(command: &str) -> Self {
        AnalysisReport {
            schema_version: SCHEMA_VERSION.to_string(),
            tool: ToolInfo::default(),
            command: command.to_string(),
            seed: None,
            input: None,
            valid: None,
            base_points: Vec::new(),
            profile: None,
            verdicts: None,
            oracle: Vec::new(),
            square: None,
            search: None,
            corpus: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

pub const TSV_HEADER: &str = "row\tcol\tentry\tcycle_structure\tfixed_count\tN\tpredicted_dim";

/// One line per base point; `N` and `predicted_dim` are `-` below order 5.
pub fn profile_tsv(records: &[BasePointRecord]) -> String {
    let mut out = String::new();
    out.push_str(TSV_HEADER);
    out.push('\n');
    let dash = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
    for r in records {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.base.row,
            r.base.column,
            r.base.entry,
            r.cycle_structure,
            r.fixed_count,
            dash(r.sixes()),
            dash(r.predicted_dim),
        );
    }
    out
}
