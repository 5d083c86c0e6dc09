//! One JSON document configures every stage. Missing sections and fields
//! fall back to the built-in defaults; unknown fields are rejected.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::modal::{KeywordDetectConfig, MatchConfig, ModalScoreConfig};
use crate::reduce::{DedupConfig, NoiseConfig, ParagraphConfig};
use crate::structure::{ProfileError, ProfileSet, RegionProfile, ThetaConfig};

/// Names a config file to use when no `--config` flag is given.
pub const CONFIG_ENV: &str = "AXCOMPACT_CONFIG";

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub matching: MatchConfig,
    pub modal_score: ModalScoreConfig,
    pub keyword: KeywordDetectConfig,
    pub dedup: DedupConfig,
    pub paragraph: ParagraphConfig,
    pub noise: NoiseConfig,
    pub theta: ThetaConfig,
    /// Replace shipped profiles with the same `app`, or add new ones.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub profiles: Vec<RegionProfile>,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed config: {0}")]
    Parse(String),
    #[error("invalid config: {0}")]
    Invalid(String),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

impl Config {
    pub fn from_json(doc: &str) -> Result<Self, ConfigError> {
        let cfg: Config =
            serde_json::from_str(doc).map_err(|e| ConfigError::Parse(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let doc = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&doc)
    }

    /// Flag path first, then the environment variable, then defaults.
    pub fn resolve(flag: Option<&Path>) -> Result<Self, ConfigError> {
        if let Some(p) = flag {
            return Self::load(p);
        }
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Self::load(Path::new(&p)),
            _ => Ok(Self::default()),
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        [
            self.matching.validate(),
            self.modal_score.validate(),
            self.keyword.validate(),
            self.dedup.validate(),
            self.paragraph.validate(),
            self.theta.validate(),
        ]
        .into_iter()
        .collect::<Result<(), String>>()
        .map_err(ConfigError::Invalid)?;
        self.profile_set()?;
        Ok(())
    }

    pub fn profile_set(&self) -> Result<ProfileSet, ProfileError> {
        ProfileSet::default().with_overrides(&self.profiles)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}
