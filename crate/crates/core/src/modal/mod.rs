//! Foreground/background separation.
//!
//! Two detectors cooperate: the temporal one compares the current step with
//! the previous step of the same screen, the keyword one looks for
//! consent/dialog vocabulary when no comparison is possible or the temporal
//! detector finds nothing.

pub mod keyword;
pub mod temporal;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::model::{ScreenState, UiElement};
pub use keyword::{detect_keyword, KeywordDetectConfig};
pub use temporal::{detect_temporal, MatchConfig, ModalScoreConfig, ScreenVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DetectionMethod {
    Temporal,
    Keyword,
    None,
}

/// The (modal, background) split of one screen's elements. Both sides keep
/// the input order.
#[derive(Debug, Clone, PartialEq)]
pub struct ModalPartition {
    pub modal: Vec<UiElement>,
    pub background: Vec<UiElement>,
    pub method: DetectionMethod,
}

impl ModalPartition {
    pub fn from_ids(
        state: &ScreenState,
        modal_ids: &BTreeSet<usize>,
        method: DetectionMethod,
    ) -> Self {
        let (modal, background) = state
            .elements()
            .iter()
            .cloned()
            .partition(|e| modal_ids.contains(&e.id));
        Self {
            modal,
            background,
            method,
        }
    }

    pub fn none(state: &ScreenState) -> Self {
        Self {
            modal: Vec::new(),
            background: state.elements().to_vec(),
            method: DetectionMethod::None,
        }
    }
}

/// Which detector fired and why.
#[derive(Debug, Clone, PartialEq)]
pub struct ModalDecision {
    pub partition: ModalPartition,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Copy)]
pub struct ModalConfigs<'a> {
    pub matching: &'a MatchConfig,
    pub scoring: &'a ModalScoreConfig,
    pub keyword: &'a KeywordDetectConfig,
}

/// Runs the temporal detector when a previous step is given, and the keyword
/// detector whenever the temporal one produced nothing. `app` selects the
/// keyword search region, if one is configured.
pub fn detect_modal(
    prev: Option<&ScreenState>,
    curr: &ScreenState,
    cfgs: ModalConfigs<'_>,
    app: Option<&str>,
) -> ModalDecision {
    let mut notes = Vec::new();
    if let Some(prev) = prev {
        let outcome = temporal::run_temporal(prev, curr, cfgs.matching, cfgs.scoring);
        notes.extend(outcome.comparison.warnings.iter().cloned());
        let ratio = outcome
            .comparison
            .ratio
            .map_or_else(|| "n/a".to_string(), |r| format!("{r:.2}"));
        notes.push(format!(
            "temporal: screen {} (R={ratio}, matched {}), {} candidates, score {}",
            outcome.comparison.verdict,
            outcome.comparison.matched_elements,
            outcome.candidates.len(),
            outcome
                .score
                .as_ref()
                .map_or_else(|| "n/a".to_string(), |s| format!("{:.2}", s.total)),
        ));
        if outcome.accepted {
            let ids: BTreeSet<usize> = outcome.candidates.iter().map(|e| e.id).collect();
            notes.push(format!("modal: temporal path, {} elements", ids.len()));
            return ModalDecision {
                partition: ModalPartition::from_ids(curr, &ids, DetectionMethod::Temporal),
                notes,
            };
        }
    }
    let search = app.and_then(|a| cfgs.keyword.search_regions.get(a));
    if let Some(partition) = keyword::detect_keyword_in(curr, cfgs.keyword, search) {
        notes.push(format!(
            "modal: keyword path, {} elements",
            partition.modal.len()
        ));
        return ModalDecision { partition, notes };
    }
    notes.push("modal: none".to_string());
    ModalDecision {
        partition: ModalPartition::none(curr),
        notes,
    }
}
