//! Optional TOML defaults. Keys mirror the long flags; flags take
//! precedence.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::args::Format;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    #[serde(alias = "n_max")]
    pub n_max: Option<u64>,
    pub mode: Option<String>,
    pub precision: Option<u32>,
    pub format: Option<Format>,
    pub output: Option<PathBuf>,
    pub threads: Option<usize>,
    pub selection: Option<String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("bad config {}: {e}", path.display()))
    }
}
