//! The JSON run configuration.

use std::collections::BTreeMap;

use dgalg_core::group::DEFAULT_WINDOW_CAP;
use dgalg_core::sampling::DEFAULT_CHECK_CAP;
use dgalg_core::{Group, Mode};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GroupSpec {
    Integers {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    FreeAbelian {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    Cyclic {
        n: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    Symmetric {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    Heisenberg {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    DirectProduct {
        factors: Vec<GroupSpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
}

impl GroupSpec {
    pub fn build(&self) -> dgalg_core::Result<Group> {
        let (group, names) = match self {
            GroupSpec::Integers { names } => (Group::integers(), names),
            GroupSpec::FreeAbelian { n, names } => (Group::free_abelian(*n)?, names),
            GroupSpec::Cyclic { n, names } => (Group::cyclic(*n)?, names),
            GroupSpec::Symmetric { n, names } => (Group::symmetric(*n)?, names),
            GroupSpec::Heisenberg { names } => (Group::heisenberg(), names),
            GroupSpec::DirectProduct { factors, names } => {
                let built = factors.iter().map(GroupSpec::build).collect::<dgalg_core::Result<Vec<_>>>()?;
                (Group::direct_product(built)?, names)
            }
        };
        match names {
            Some(names) => group.with_names(names.clone()),
            None => Ok(group),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowConfig {
    /// Maximal word length.
    #[serde(default = "default_length")]
    pub length: u32,
    /// Bounds on the absolute exponent sum, by generator name.
    #[serde(default)]
    pub bounds: BTreeMap<String, i64>,
    #[serde(default = "default_window_cap")]
    pub cap: usize,
    /// Word length of the window searched for preimages when inverting maps;
    /// defaults to `length + 2`.
    #[serde(default)]
    pub search_length: Option<u32>,
}

fn default_length() -> u32 {
    3
}

fn default_window_cap() -> usize {
    DEFAULT_WINDOW_CAP
}

fn default_sample_cap() -> usize {
    DEFAULT_CHECK_CAP
}

impl Default for WindowConfig {
    fn default() -> Self {
        Self { length: default_length(), bounds: BTreeMap::new(), cap: default_window_cap(), search_length: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum ModeName {
    #[default]
    Cochain,
    Chain,
}

impl From<ModeName> for Mode {
    fn from(m: ModeName) -> Self {
        match m {
            ModeName::Cochain => Mode::Cochain,
            ModeName::Chain => Mode::Chain,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// A graded algebra automorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum MapConfig {
    Identity {},
    /// Generator images as words, keyed by generator name.
    Automorphism {
        images: BTreeMap<String, String>,
    },
    /// `g -> lambda^(deg g) g`.
    Scaling {
        lambda: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub group: GroupSpec,
    /// Generator degrees by name; missing generators have degree 0.
    #[serde(default)]
    pub grading: BTreeMap<String, i64>,
    /// Derivation specifications by name.
    #[serde(default)]
    pub derivations: BTreeMap<String, String>,
    #[serde(default)]
    pub window: WindowConfig,
    #[serde(default)]
    pub mode: ModeName,
    #[serde(default)]
    pub output: OutputFormat,
    #[serde(default)]
    pub seed: u64,
    /// Checks with more instances than this are sampled.
    #[serde(default = "default_sample_cap")]
    pub sample_cap: usize,
    #[serde(default)]
    pub maps: BTreeMap<String, MapConfig>,
}

impl RunConfig {
    pub fn from_json(src: &str) -> Result<Self, CliError> {
        serde_json::from_str(src).map_err(|e| CliError::Config {
            line: e.line(),
            column: e.column(),
            message: strip_position(&e.to_string()),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}

/// serde_json appends " at line L column C"; the position is reported
/// separately.
fn strip_position(message: &str) -> String {
    match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message.to_string(),
    }
}
