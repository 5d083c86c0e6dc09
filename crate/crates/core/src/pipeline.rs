//! End-to-end compression of one screen, optionally against the previous
//! step, and a session that remembers that previous step.

use thiserror::Error;

use crate::config::{Config, ConfigError};
use crate::modal::{detect_modal, DetectionMethod, ModalConfigs};
use crate::model::{parse_tree, write_tree, ParseError, ParseWarning, RegionKind, ScreenState};
use crate::observation::CompressedObservation;
use crate::reduce::{extract_keywords, reduce, ReduceConfigs, ReduceStats};
use crate::structure::{
    build_regions, segment, structure_group, ProfileError, ProfileSet, RegionProfile,
};

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
}

/// Copy of `state` whose elements carry the region the profile assigns them,
/// which tells the temporal detector what is static and what is content.
pub fn hint_regions(state: &ScreenState, profile: &RegionProfile) -> ScreenState {
    let seg = segment(state.elements(), profile, state.width(), state.height());
    state.clone().with_hints(seg.hints())
}

/// An observation together with how it was produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Compression {
    pub observation: CompressedObservation,
    pub app: String,
    pub view: Option<String>,
    pub method: DetectionMethod,
    pub notes: Vec<String>,
    pub reduce_stats: ReduceStats,
}

#[derive(Debug, Clone, Default)]
pub struct Compressor {
    config: Config,
    profiles: ProfileSet,
}

impl Compressor {
    pub fn new(config: Config) -> Result<Self, ConfigError> {
        config.validate()?;
        let profiles = config.profile_set()?;
        Ok(Self { config, profiles })
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn profiles(&self) -> &ProfileSet {
        &self.profiles
    }

    pub fn select_profile(
        &self,
        curr: &ScreenState,
        app: Option<&str>,
    ) -> Result<&RegionProfile, ProfileError> {
        match app {
            Some(a) => self.profiles.get(a),
            None => Ok(self.profiles.detect_app(curr.elements())),
        }
    }

    pub fn compress(
        &self,
        prev: Option<&ScreenState>,
        curr: &ScreenState,
        instruction: &str,
        app: Option<&str>,
    ) -> Result<Compression, ProfileError> {
        let cfg = &self.config;
        let profile = self.select_profile(curr, app)?;
        let mut notes = vec![format!(
            "app: {} ({})",
            profile.app,
            if app.is_some() { "given" } else { "detected" }
        )];

        let (w, h) = (curr.width(), curr.height());
        let prev = match prev {
            Some(p) if (p.width(), p.height()) != (w, h) => {
                notes.push(format!(
                    "warning: previous screen is {}x{}, current is {w}x{h}; skipping temporal detection",
                    p.width(),
                    p.height()
                ));
                None
            }
            other => other,
        };
        let view = segment(curr.elements(), profile, w, h).view;
        let curr_hinted = hint_regions(curr, profile);
        let prev_hinted = prev.map(|p| hint_regions(p, profile));

        let decision = detect_modal(
            prev_hinted.as_ref(),
            &curr_hinted,
            ModalConfigs {
                matching: &cfg.matching,
                scoring: &cfg.modal_score,
                keyword: &cfg.keyword,
            },
            Some(&profile.app),
        );
        notes.extend(decision.notes);

        let reduced = reduce(
            &decision.partition,
            curr,
            instruction,
            ReduceConfigs {
                noise: &cfg.noise,
                dedup: &cfg.dedup,
                paragraph: &cfg.paragraph,
            },
        );
        let keywords = extract_keywords(instruction, &cfg.paragraph);
        let modal = (!reduced.modal.is_empty())
            .then(|| structure_group("MODAL", RegionKind::Dynamic, reduced.modal, &cfg.theta));
        let regions = build_regions(reduced.background, profile, w, h, &keywords, &cfg.theta);
        let observation = CompressedObservation::assemble(
            &profile.app,
            modal,
            regions,
            write_tree(curr).chars().count(),
        );
        Ok(Compression {
            observation,
            app: profile.app.clone(),
            view,
            method: decision.partition.method,
            notes,
            reduce_stats: reduced.stats,
        })
    }
}

/// Carries the previous screen between calls. A failed call leaves the
/// session untouched.
#[derive(Debug, Clone, Default)]
pub struct Session {
    compressor: Compressor,
    prev: Option<ScreenState>,
    app: Option<String>,
}

impl Session {
    pub fn new(compressor: Compressor, app: Option<String>) -> Self {
        Self {
            compressor,
            prev: None,
            app,
        }
    }

    pub fn previous(&self) -> Option<&ScreenState> {
        self.prev.as_ref()
    }

    pub fn compress(
        &mut self,
        curr: ScreenState,
        instruction: &str,
    ) -> Result<Compression, PipelineError> {
        let out = self.compressor.compress(
            self.prev.as_ref(),
            &curr,
            instruction,
            self.app.as_deref(),
        )?;
        self.prev = Some(curr);
        Ok(out)
    }

    /// Parses a raw tree document and compresses it.
    pub fn compress_raw(
        &mut self,
        raw: &str,
        instruction: &str,
    ) -> Result<(Compression, Vec<ParseWarning>), PipelineError> {
        let parsed = parse_tree(raw)?;
        let out = self.compress(parsed.state, instruction)?;
        Ok((out, parsed.warnings))
    }

    pub fn reset(&mut self) {
        self.prev = None;
    }
}
