//! Modal detection from the difference between two consecutive observations.
//!
//! Elements are paired by identical semantic content, positions are checked
//! against a tolerance (after compensating a global scroll for dynamic
//! regions), and whatever in the current step has no surviving partner is a
//! modal candidate. Candidates are then scored by role, label and count.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{DetectionMethod, ModalPartition};
use crate::model::{Px, RegionKind, ScreenState, SemanticContent, UiElement};
use crate::text::words;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MatchConfig {
    pub eps_static: f64,
    pub eps_dynamic: f64,
    pub same_screen_threshold: f64,
    pub large_modal_match_count: usize,
    pub sparse_screen_count: usize,
}

impl Default for MatchConfig {
    fn default() -> Self {
        Self {
            eps_static: 25.0,
            eps_dynamic: 25.0,
            same_screen_threshold: 0.3,
            large_modal_match_count: 10,
            sparse_screen_count: 15,
        }
    }
}

impl MatchConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.eps_static > 0.0 && self.eps_dynamic > 0.0) {
            return Err("matching: position tolerances must be positive".into());
        }
        if !(self.same_screen_threshold > 0.0 && self.same_screen_threshold < 1.0) {
            return Err("matching: same_screen_threshold must lie in (0, 1)".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ModalScoreConfig {
    /// Container roles that signal a modal layer.
    pub interactive_roles: BTreeSet<String>,
    pub decorative_roles: BTreeSet<String>,
    pub tag_bonus: f64,
    pub tag_penalty: f64,
    /// Roles an agent can act on; gates the label score.
    pub actionable_roles: BTreeSet<String>,
    pub w_decide: f64,
    pub w_func: f64,
    pub decide_keywords: BTreeSet<String>,
    pub func_keywords: BTreeSet<String>,
    pub small_count: usize,
    pub small_penalty: f64,
    pub large_count: usize,
    pub large_bonus: f64,
    pub t_modal: f64,
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

impl Default for ModalScoreConfig {
    fn default() -> Self {
        Self {
            interactive_roles: set(&["dialog", "alertdialog", "menu", "listbox", "tree"]),
            decorative_roles: set(&["image", "label", "heading", "paragraph", "generic"]),
            tag_bonus: 2.0,
            tag_penalty: -0.5,
            actionable_roles: set(&[
                "push-button",
                "button",
                "link",
                "menu-item",
                "entry",
                "input",
                "combo-box",
                "check-box",
                "radio-button",
                "toggle-button",
            ]),
            w_decide: 1.0,
            w_func: 0.5,
            decide_keywords: set(&[
                "ok", "cancel", "save", "yes", "no", "login", "agree", "delete",
            ]),
            func_keywords: set(&["sort", "filter", "settings", "search", "find"]),
            small_count: 3,
            small_penalty: -3.0,
            large_count: 6,
            large_bonus: 1.0,
            t_modal: 1.0,
        }
    }
}

impl ModalScoreConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self
            .interactive_roles
            .intersection(&self.decorative_roles)
            .next()
            .is_some()
        {
            return Err("modal_score: interactive and decorative roles overlap".into());
        }
        let finite = [
            self.tag_bonus,
            self.tag_penalty,
            self.w_decide,
            self.w_func,
            self.small_penalty,
            self.large_bonus,
            self.t_modal,
        ];
        if finite.iter().any(|v| !v.is_finite()) {
            return Err("modal_score: weights and threshold must be finite".into());
        }
        Ok(())
    }
}

pub type Pair<'a> = (&'a UiElement, &'a UiElement);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Displacement {
    pub dx: Px,
    pub dy: Px,
}

impl Displacement {
    pub fn new(dx: Px, dy: Px) -> Self {
        Self { dx, dy }
    }
}

impl fmt::Display for Displacement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.dx, self.dy)
    }
}

pub fn displacement(pair: Pair<'_>) -> Displacement {
    let (a, b) = (pair.0.center(), pair.1.center());
    Displacement::new(b.cx - a.cx, b.cy - a.cy)
}

/// Every (prev, curr) pair with field-wise equal content, ordered by prev
/// position then curr position. Many-to-many.
pub fn match_semantic<'a>(prev: &[&'a UiElement], curr: &[&'a UiElement]) -> Vec<Pair<'a>> {
    let mut by_content: HashMap<&SemanticContent, Vec<&'a UiElement>> = HashMap::new();
    for &c in curr {
        by_content.entry(&c.content).or_default().push(c);
    }
    let mut pairs = Vec::new();
    for &p in prev {
        if let Some(cs) = by_content.get(&p.content) {
            pairs.extend(cs.iter().map(|&c| (p, c)));
        }
    }
    pairs
}

pub fn match_static(pair: Pair<'_>, cfg: &MatchConfig) -> bool {
    pair.0.center().distance(&pair.1.center()) <= cfg.eps_static
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("no matched pairs to estimate a displacement from")]
pub struct NoPairs;

/// Componentwise median of pair displacements; lower median on even counts.
pub fn estimate_global_displacement(pairs: &[Pair<'_>]) -> Result<Displacement, NoPairs> {
    if pairs.is_empty() {
        return Err(NoPairs);
    }
    let (mut xs, mut ys): (Vec<Px>, Vec<Px>) = pairs
        .iter()
        .map(|&p| {
            let d = displacement(p);
            (d.dx, d.dy)
        })
        .unzip();
    xs.sort_unstable();
    ys.sort_unstable();
    let mid = (pairs.len() - 1) / 2;
    Ok(Displacement::new(xs[mid], ys[mid]))
}

pub fn match_dynamic(pair: Pair<'_>, global: Displacement, cfg: &MatchConfig) -> bool {
    let (a, b) = (pair.0.center(), pair.1.center());
    let rx = (a.cx + global.dx - b.cx) as f64;
    let ry = (a.cy + global.dy - b.cy) as f64;
    rx.hypot(ry) <= cfg.eps_dynamic
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScreenVerdict {
    Same,
    Different,
    BypassSparse,
}

impl fmt::Display for ScreenVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScreenVerdict::Same => "same",
            ScreenVerdict::Different => "different",
            ScreenVerdict::BypassSparse => "bypass_sparse",
        })
    }
}

/// Everything computed while judging whether two steps show the same screen.
#[derive(Debug, Clone, PartialEq)]
pub struct ScreenComparison {
    pub verdict: ScreenVerdict,
    /// Passing dynamic pairs over prev dynamic count; absent when prev has no
    /// dynamic elements.
    pub ratio: Option<f64>,
    /// Global displacement of dynamic content; absent when nothing matched.
    pub displacement: Option<Displacement>,
    /// Distinct curr dynamic elements with at least one passing match.
    pub matched_elements: usize,
    pub prev_dynamic: usize,
    pub warnings: Vec<String>,
}

fn split_kinds(state: &ScreenState) -> (Vec<&UiElement>, Vec<&UiElement>) {
    state
        .elements()
        .iter()
        .partition(|e| e.kind() == RegionKind::Static)
}

pub fn compare_screens(
    prev: &ScreenState,
    curr: &ScreenState,
    cfg: &MatchConfig,
) -> ScreenComparison {
    let (_, prev_dyn) = split_kinds(prev);
    let (_, curr_dyn) = split_kinds(curr);
    let pairs = match_semantic(&prev_dyn, &curr_dyn);
    let displacement = estimate_global_displacement(&pairs).ok();

    let mut passing = 0usize;
    let mut matched = BTreeSet::new();
    if let Some(d) = displacement {
        for &p in &pairs {
            if match_dynamic(p, d, cfg) {
                passing += 1;
                matched.insert(p.1.id);
            }
        }
    }
    let ratio = (!prev_dyn.is_empty()).then(|| passing as f64 / prev_dyn.len() as f64);

    let mut warnings = Vec::new();
    let verdict = if curr.len() < cfg.sparse_screen_count {
        ScreenVerdict::BypassSparse
    } else if matched.len() > cfg.large_modal_match_count {
        ScreenVerdict::Same
    } else {
        match ratio {
            Some(r) if r > cfg.same_screen_threshold => ScreenVerdict::Same,
            Some(_) => ScreenVerdict::Different,
            None => {
                warnings.push(
                    "previous step has no dynamic-region elements; treating as a screen transition"
                        .to_string(),
                );
                ScreenVerdict::Different
            }
        }
    };

    ScreenComparison {
        verdict,
        ratio,
        displacement,
        matched_elements: matched.len(),
        prev_dynamic: prev_dyn.len(),
        warnings,
    }
}

pub fn same_screen(prev: &ScreenState, curr: &ScreenState, cfg: &MatchConfig) -> ScreenVerdict {
    compare_screens(prev, curr, cfg).verdict
}

/// Elements of `curr` with no positional match against `prev`: static prev
/// elements are checked in place, dynamic ones after the global shift.
pub fn extract_candidates<'a>(
    prev: &ScreenState,
    curr: &'a ScreenState,
    cfg: &MatchConfig,
) -> Vec<&'a UiElement> {
    let (prev_sta, prev_dyn) = split_kinds(prev);
    let (_, curr_dyn) = split_kinds(curr);
    let global =
        estimate_global_displacement(&match_semantic(&prev_dyn, &curr_dyn)).unwrap_or_default();
    let all: Vec<&UiElement> = curr.elements().iter().collect();

    let mut matched = vec![false; curr.len()];
    for (p, c) in match_semantic(&prev_dyn, &all) {
        if match_dynamic((p, c), global, cfg) {
            matched[c.id] = true;
        }
    }
    for (p, c) in match_semantic(&prev_sta, &all) {
        if match_static((p, c), cfg) {
            matched[c.id] = true;
        }
    }
    all.into_iter().filter(|e| !matched[e.id]).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElementScore {
    pub id: usize,
    pub tag: f64,
    pub name: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModalScore {
    pub total: f64,
    pub count: f64,
    pub elements: Vec<ElementScore>,
}

pub fn tag_score(tag: &str, cfg: &ModalScoreConfig) -> f64 {
    if cfg.interactive_roles.contains(tag) {
        cfg.tag_bonus
    } else if cfg.decorative_roles.contains(tag) {
        cfg.tag_penalty
    } else {
        0.0
    }
}

/// Label score; a decision keyword outranks a function keyword.
pub fn name_score(e: &UiElement, cfg: &ModalScoreConfig) -> f64 {
    if !cfg.actionable_roles.contains(e.tag()) {
        return 0.0;
    }
    let tokens: BTreeSet<String> = words(&e.content.name).collect();
    let hits = |ks: &BTreeSet<String>| ks.iter().any(|k| tokens.contains(&k.to_lowercase()));
    if hits(&cfg.decide_keywords) {
        cfg.w_decide
    } else if hits(&cfg.func_keywords) {
        cfg.w_func
    } else {
        0.0
    }
}

pub fn score_modal(candidates: &[&UiElement], cfg: &ModalScoreConfig) -> ModalScore {
    let elements: Vec<ElementScore> = candidates
        .iter()
        .map(|e| ElementScore {
            id: e.id,
            tag: tag_score(e.tag(), cfg),
            name: name_score(e, cfg),
        })
        .collect();
    let n = candidates.len();
    // The empty set is exempt from the small-set penalty.
    let count = if n > 0 && n < cfg.small_count && elements.iter().all(|s| s.tag <= 0.0) {
        cfg.small_penalty
    } else if n >= cfg.large_count {
        cfg.large_bonus
    } else {
        0.0
    };
    let total = elements.iter().map(|s| s.tag + s.name).sum::<f64>() + count;
    ModalScore {
        total,
        count,
        elements,
    }
}

/// Intermediate results of the temporal detector, kept for diagnostics.
#[derive(Debug, Clone)]
pub struct TemporalOutcome<'a> {
    pub comparison: ScreenComparison,
    pub candidates: Vec<&'a UiElement>,
    pub score: Option<ModalScore>,
    pub accepted: bool,
}

pub fn run_temporal<'a>(
    prev: &ScreenState,
    curr: &'a ScreenState,
    match_cfg: &MatchConfig,
    score_cfg: &ModalScoreConfig,
) -> TemporalOutcome<'a> {
    let comparison = compare_screens(prev, curr, match_cfg);
    if comparison.verdict == ScreenVerdict::Different {
        return TemporalOutcome {
            comparison,
            candidates: Vec::new(),
            score: None,
            accepted: false,
        };
    }
    let candidates = extract_candidates(prev, curr, match_cfg);
    let score = score_modal(&candidates, score_cfg);
    let accepted = !candidates.is_empty() && score.total >= score_cfg.t_modal;
    TemporalOutcome {
        comparison,
        candidates,
        score: Some(score),
        accepted,
    }
}

pub fn detect_temporal(
    prev: &ScreenState,
    curr: &ScreenState,
    match_cfg: &MatchConfig,
    score_cfg: &ModalScoreConfig,
) -> Option<ModalPartition> {
    let outcome = run_temporal(prev, curr, match_cfg, score_cfg);
    if !outcome.accepted {
        return None;
    }
    let ids: BTreeSet<usize> = outcome.candidates.iter().map(|e| e.id).collect();
    Some(ModalPartition::from_ids(
        curr,
        &ids,
        DetectionMethod::Temporal,
    ))
}
