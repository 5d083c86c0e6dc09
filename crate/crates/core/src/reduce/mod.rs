//! Redundancy reduction: noise filtering, string cleanup, deduplication,
//! paragraph shortening and attribute compaction.

pub mod dedup;
pub mod paragraph;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::modal::ModalPartition;
use crate::model::{CenterPoint, Px, ScreenState, UiElement};
use crate::text::normalize_strings;
pub use dedup::{dedup, is_duplicate_pair, tag_priority, DedupConfig};
pub use paragraph::{compress_paragraph, extract_keywords, ParagraphConfig};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct NoiseConfig {
    pub os_metadata_tags: BTreeSet<String>,
    /// Unlabeled elements survive compaction only up to this priority score.
    pub max_unlabeled_priority: u32,
}

impl Default for NoiseConfig {
    fn default() -> Self {
        Self {
            os_metadata_tags: ["desktop-frame", "unknown", "filler", "redundant-object"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            max_unlabeled_priority: 10,
        }
    }
}

/// Tunables for every reduction step.
#[derive(Debug, Clone, Copy)]
pub struct ReduceConfigs<'a> {
    pub noise: &'a NoiseConfig,
    pub dedup: &'a DedupConfig,
    pub paragraph: &'a ParagraphConfig,
}

pub fn remove_noise(
    elements: Vec<UiElement>,
    width: Px,
    height: Px,
    cfg: &NoiseConfig,
) -> Vec<UiElement> {
    elements
        .into_iter()
        .filter(|e| {
            let c = e.center();
            let on_screen = (0..=width).contains(&c.cx) && (0..=height).contains(&c.cy);
            let contentless =
                e.bbox.area() == 0 && e.content.name.is_empty() && e.content.text.is_empty();
            on_screen && !contentless && !cfg.os_metadata_tags.contains(e.tag())
        })
        .collect()
}

fn normalize_element(mut e: UiElement) -> UiElement {
    let c = &mut e.content;
    for field in [&mut c.name, &mut c.text, &mut c.cls, &mut c.description] {
        *field = normalize_strings(field);
    }
    e
}

fn shorten_paragraph(
    mut e: UiElement,
    keywords: &BTreeSet<String>,
    cfg: &ParagraphConfig,
) -> UiElement {
    if cfg.paragraph_tags.contains(e.tag()) {
        e.content.name = compress_paragraph(&e.content.name, keywords, cfg);
        e.content.text = compress_paragraph(&e.content.text, keywords, cfg);
    }
    e
}

/// What reaches the observation text for one element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompactElement {
    pub id: usize,
    pub tag: String,
    pub name: String,
    /// Kept only when it adds to a nonempty name (cell values, field contents).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    pub center: CenterPoint,
}

impl CompactElement {
    pub fn label(&self) -> &str {
        &self.name
    }
}

pub fn compress_attributes(e: &UiElement) -> CompactElement {
    let c = &e.content;
    let text =
        (!c.name.is_empty() && !c.text.is_empty() && c.text != c.name).then(|| c.text.clone());
    CompactElement {
        id: e.id,
        tag: c.tag.clone(),
        name: c.label().to_string(),
        text,
        center: e.center(),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReduceStats {
    pub input: usize,
    pub after_noise: usize,
    pub after_dedup: usize,
    pub output: usize,
}

fn reduce_side(
    elements: Vec<UiElement>,
    state: &ScreenState,
    keywords: &BTreeSet<String>,
    cfgs: ReduceConfigs<'_>,
    stats: &mut ReduceStats,
) -> Vec<CompactElement> {
    stats.input += elements.len();
    let kept = remove_noise(elements, state.width(), state.height(), cfgs.noise);
    stats.after_noise += kept.len();
    let kept: Vec<UiElement> = kept.into_iter().map(normalize_element).collect();
    let kept = dedup(kept, cfgs.dedup);
    stats.after_dedup += kept.len();
    let out: Vec<CompactElement> = kept
        .into_iter()
        .map(|e| shorten_paragraph(e, keywords, cfgs.paragraph))
        .filter(|e| {
            !e.content.label().is_empty()
                || tag_priority(e.tag(), &cfgs.dedup.priority_table)
                    <= cfgs.noise.max_unlabeled_priority
        })
        .map(|e| compress_attributes(&e))
        .collect();
    stats.output += out.len();
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct Reduced {
    pub modal: Vec<CompactElement>,
    pub background: Vec<CompactElement>,
    pub stats: ReduceStats,
}

/// Reduces the modal and background sides independently; nothing is merged
/// across the boundary.
pub fn reduce(
    partition: &ModalPartition,
    state: &ScreenState,
    instruction: &str,
    cfgs: ReduceConfigs<'_>,
) -> Reduced {
    let keywords = extract_keywords(instruction, cfgs.paragraph);
    let mut stats = ReduceStats::default();
    let modal = reduce_side(partition.modal.clone(), state, &keywords, cfgs, &mut stats);
    let background = reduce_side(
        partition.background.clone(),
        state,
        &keywords,
        cfgs,
        &mut stats,
    );
    Reduced {
        modal,
        background,
        stats,
    }
}
