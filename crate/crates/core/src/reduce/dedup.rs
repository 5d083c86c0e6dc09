//! Merging of elements that describe the same visual target under
//! different roles.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::model::UiElement;
use crate::text::squash;

pub const LOWEST_PRIORITY: u32 = 30;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DedupConfig {
    pub proximity_threshold: f64,
    pub name_match_y_tolerance: f64,
    pub over_merge_length_ratio: f64,
    /// Lower scores are kept. Tags not listed score [`LOWEST_PRIORITY`].
    pub priority_table: BTreeMap<String, u32>,
}

impl Default for DedupConfig {
    fn default() -> Self {
        let tiers: [(&[&str], u32); 4] = [
            (
                &[
                    "entry",
                    "combo-box",
                    "check-box",
                    "radio-button",
                    "toggle-button",
                    "input",
                ],
                0,
            ),
            (&["push-button", "link", "menu-item", "button"], 10),
            (&["heading"], 20),
            (&["static", "image", "group"], LOWEST_PRIORITY),
        ];
        let priority_table = tiers
            .iter()
            .flat_map(|(tags, score)| tags.iter().map(move |t| (t.to_string(), *score)))
            .collect();
        Self {
            proximity_threshold: 20.0,
            name_match_y_tolerance: 30.0,
            over_merge_length_ratio: 2.0,
            priority_table,
        }
    }
}

impl DedupConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.proximity_threshold >= 0.0 && self.name_match_y_tolerance >= 0.0) {
            return Err("dedup: distances must be non-negative".into());
        }
        if self.over_merge_length_ratio.is_nan() || self.over_merge_length_ratio < 1.0 {
            return Err("dedup: over_merge_length_ratio must be at least 1".into());
        }
        Ok(())
    }
}

pub fn tag_priority(tag: &str, table: &BTreeMap<String, u32>) -> u32 {
    table.get(tag).copied().unwrap_or(LOWEST_PRIORITY)
}

/// Label compared during deduplication: the name, or the text when the name
/// is empty.
fn label(e: &UiElement) -> &str {
    e.content.label()
}

/// Substring similarity on squashed labels, with the length guard applied
/// to the labels as displayed.
fn similar_labels(a: &str, b: &str, ratio: f64) -> bool {
    let (la, lb) = (a.chars().count() as f64, b.chars().count() as f64);
    let (short, long) = if la <= lb { (la, lb) } else { (lb, la) };
    if long > ratio * short {
        return false;
    }
    let (a, b) = (squash(a), squash(b));
    if a.is_empty() || b.is_empty() {
        return false;
    }
    a == b || a.contains(&b) || b.contains(&a)
}

pub fn is_duplicate_pair(a: &UiElement, b: &UiElement, cfg: &DedupConfig) -> bool {
    let (la, lb) = (label(a), label(b));
    if !similar_labels(la, lb, cfg.over_merge_length_ratio) {
        return false;
    }
    let (ca, cb) = (a.center(), b.center());
    ca.distance(&cb) <= cfg.proximity_threshold
        || (squash(la) == squash(lb)
            && ((ca.cy - cb.cy).abs() as f64) <= cfg.name_match_y_tolerance)
}

/// Of a duplicate pair, whether the first element is the one to keep.
pub fn keeps_first(a: &UiElement, b: &UiElement, cfg: &DedupConfig) -> bool {
    match (a.tag(), b.tag()) {
        ("link", "static") => return true,
        ("static", "link") => return false,
        _ => {}
    }
    let (pa, pb) = (
        tag_priority(a.tag(), &cfg.priority_table),
        tag_priority(b.tag(), &cfg.priority_table),
    );
    if pa != pb {
        return pa < pb;
    }
    label(a).chars().count() >= label(b).chars().count()
}

/// Scans pairs in ascending list order, removing the weaker element of each
/// duplicate pair as soon as it is found. Removed elements take part in no
/// later pair.
pub fn dedup(elements: Vec<UiElement>, cfg: &DedupConfig) -> Vec<UiElement> {
    let n = elements.len();
    let mut alive = vec![true; n];
    for i in 0..n {
        if !alive[i] {
            continue;
        }
        for j in i + 1..n {
            if !alive[j] || !is_duplicate_pair(&elements[i], &elements[j], cfg) {
                continue;
            }
            if keeps_first(&elements[i], &elements[j], cfg) {
                alive[j] = false;
            } else {
                alive[i] = false;
                break;
            }
        }
    }
    elements
        .into_iter()
        .zip(alive)
        .filter_map(|(e, keep)| keep.then_some(e))
        .collect()
}
