//! Keyword-anchored modal detection for steps without a usable predecessor.
//!
//! Anchors are elements whose label mentions consent or dialog-action words.
//! Anchors close to each other form candidate regions; a region is accepted
//! when it is a wide strip along the top or bottom edge, or when its
//! composite score is high both absolutely and relative to the best region
//! on screen. Accepted regions then pass a list of rejection checks.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{DetectionMethod, ModalPartition};
use crate::model::{BoundingBox, ScreenState, UiElement};
use crate::text::contains_word;
use crate::union_find::UnionFind;

/// A rectangle in screen fractions: `[x0, y0, x1, y1]`.
pub type FracRect = [f64; 4];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct KeywordDetectConfig {
    pub content_keywords: Vec<String>,
    pub action_keywords: Vec<String>,
    /// Keywords that must match as a whole word rather than a substring.
    pub whole_word_keywords: Vec<String>,
    pub cluster_delta_fraction: f64,
    pub bottom_edge_fraction: f64,
    pub top_edge_fraction: f64,
    pub aspect_ratio_min: f64,
    pub score_threshold: f64,
    pub relative_floor: f64,
    pub anchor_cap: usize,
    pub anchor_weight: f64,
    pub centrality_max: f64,
    pub structural_bonus: f64,
    pub button_roles: BTreeSet<String>,
    pub input_roles: BTreeSet<String>,
    /// Labels that dismiss a region, matched as whole words on `close_roles`.
    pub close_keywords: Vec<String>,
    pub close_roles: BTreeSet<String>,
    pub min_anchors: usize,
    pub min_area_fraction: f64,
    pub max_area_fraction: f64,
    pub navigation_regions: BTreeSet<String>,
    /// Per-application search rectangle; the whole screen otherwise.
    pub search_regions: BTreeMap<String, FracRect>,
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

impl Default for KeywordDetectConfig {
    fn default() -> Self {
        Self {
            content_keywords: strings(&["cookie", "cookies", "gdpr", "privacy", "consent"]),
            action_keywords: strings(&[
                "accept", "agree", "allow", "reject", "save", "confirm", "close", "×", "ok",
                "policy", "manage", "setting",
            ]),
            whole_word_keywords: strings(&["ok", "×"]),
            cluster_delta_fraction: 0.08,
            bottom_edge_fraction: 0.75,
            top_edge_fraction: 0.15,
            aspect_ratio_min: 2.5,
            score_threshold: 65.0,
            relative_floor: 0.8,
            anchor_cap: 20,
            anchor_weight: 2.0,
            centrality_max: 30.0,
            structural_bonus: 10.0,
            button_roles: set(&["push-button", "button", "link", "menu-item"]),
            input_roles: set(&[
                "entry",
                "input",
                "combo-box",
                "check-box",
                "radio-button",
                "toggle-button",
                "switch",
            ]),
            close_keywords: strings(&[
                "close",
                "cancel",
                "×",
                "dismiss",
                "reject",
                "decline",
                "deny",
                "accept",
                "agree",
                "ok",
                "confirm",
                "got it",
                "no thanks",
                "done",
                "save",
            ]),
            close_roles: set(&[
                "push-button",
                "button",
                "link",
                "menu-item",
                "toggle-button",
                "image",
                "icon",
            ]),
            min_anchors: 2,
            min_area_fraction: 0.01,
            max_area_fraction: 0.90,
            navigation_regions: set(&["ADDRESS_BAR", "TOOLBAR"]),
            search_regions: BTreeMap::new(),
        }
    }
}

impl KeywordDetectConfig {
    pub fn validate(&self) -> Result<(), String> {
        let fractions = [
            ("cluster_delta_fraction", self.cluster_delta_fraction),
            ("bottom_edge_fraction", self.bottom_edge_fraction),
            ("top_edge_fraction", self.top_edge_fraction),
            ("relative_floor", self.relative_floor),
            ("min_area_fraction", self.min_area_fraction),
            ("max_area_fraction", self.max_area_fraction),
        ];
        for (name, v) in fractions {
            if !(v > 0.0 && v < 1.0) {
                return Err(format!("keyword: {name} must lie in (0, 1)"));
            }
        }
        if self.aspect_ratio_min.is_nan() || self.aspect_ratio_min <= 1.0 {
            return Err("keyword: aspect_ratio_min must exceed 1".into());
        }
        for (app, r) in &self.search_regions {
            if !(r[0] < r[2] && r[1] < r[3]) || r.iter().any(|v| !(0.0..=1.0).contains(v)) {
                return Err(format!(
                    "keyword: search region for {app} is not a valid fraction rectangle"
                ));
            }
        }
        Ok(())
    }

    fn matches(&self, label: &str, keyword: &str) -> bool {
        if self.whole_word_keywords.iter().any(|k| k == keyword) {
            contains_word(label, keyword)
        } else {
            label.to_lowercase().contains(&keyword.to_lowercase())
        }
    }

    fn is_anchor_label(&self, label: &str) -> bool {
        self.content_keywords
            .iter()
            .chain(&self.action_keywords)
            .any(|k| self.matches(label, k))
    }

    /// δ in pixels.
    pub fn delta(&self, state: &ScreenState) -> f64 {
        self.cluster_delta_fraction * state.width().min(state.height()) as f64
    }
}

fn is_anchor(e: &UiElement, cfg: &KeywordDetectConfig) -> bool {
    cfg.is_anchor_label(&e.content.name) || cfg.is_anchor_label(&e.content.text)
}

fn in_rect(e: &UiElement, state: &ScreenState, r: &FracRect) -> bool {
    let c = e.center();
    let (w, h) = (state.width() as f64, state.height() as f64);
    let (x, y) = (c.cx as f64, c.cy as f64);
    x >= r[0] * w && x <= r[2] * w && y >= r[1] * h && y <= r[3] * h
}

pub fn extract_anchors<'a>(
    state: &'a ScreenState,
    cfg: &KeywordDetectConfig,
) -> Vec<&'a UiElement> {
    extract_anchors_in(state, cfg, None)
}

pub fn extract_anchors_in<'a>(
    state: &'a ScreenState,
    cfg: &KeywordDetectConfig,
    search: Option<&FracRect>,
) -> Vec<&'a UiElement> {
    state
        .elements()
        .iter()
        .filter(|e| search.is_none_or(|r| in_rect(e, state, r)))
        .filter(|e| is_anchor(e, cfg))
        .collect()
}

/// Connected components of the graph joining anchors closer than δ.
pub fn cluster_anchors<'a>(
    anchors: &[&'a UiElement],
    state: &ScreenState,
    cfg: &KeywordDetectConfig,
) -> Vec<Vec<&'a UiElement>> {
    let delta = cfg.delta(state);
    let centers: Vec<_> = anchors.iter().map(|a| a.center()).collect();
    let mut uf = UnionFind::new(anchors.len());
    for i in 0..anchors.len() {
        for j in i + 1..anchors.len() {
            if centers[i].distance(&centers[j]) < delta {
                uf.union(i, j);
            }
        }
    }
    uf.groups()
        .into_iter()
        .map(|g| g.into_iter().map(|i| anchors[i]).collect())
        .collect()
}

/// Union of the member boxes. Panics on an empty cluster.
pub fn cluster_box(cluster: &[&UiElement]) -> BoundingBox {
    let first = cluster.first().expect("cluster must not be empty").bbox;
    cluster.iter().fold(first, |acc, e| acc.union(&e.bbox))
}

pub fn edge_rule(cluster: &[&UiElement], state: &ScreenState, cfg: &KeywordDetectConfig) -> bool {
    let b = cluster_box(cluster);
    let h = state.height() as f64;
    let cy = b.y as f64 + b.h as f64 / 2.0;
    let at_edge = cy > cfg.bottom_edge_fraction * h || cy < cfg.top_edge_fraction * h;
    let elongated = if b.h == 0 {
        b.w > 0
    } else {
        b.w as f64 / b.h as f64 > cfg.aspect_ratio_min
    };
    at_edge && elongated
}

/// Elements whose centers fall inside the cluster box grown by δ/2 on each
/// side; this is the modal region a cluster stands for.
pub fn region_members<'a>(
    cluster: &[&UiElement],
    state: &'a ScreenState,
    cfg: &KeywordDetectConfig,
) -> Vec<&'a UiElement> {
    let b = cluster_box(cluster);
    let pad = cfg.delta(state) / 2.0;
    let (x0, y0) = (b.x as f64 - pad, b.y as f64 - pad);
    let (x1, y1) = (b.right() as f64 + pad, b.bottom() as f64 + pad);
    state
        .elements()
        .iter()
        .filter(|e| {
            let c = e.center();
            let (x, y) = (c.cx as f64, c.cy as f64);
            x >= x0 && x <= x1 && y >= y0 && y <= y1
        })
        .collect()
}

fn has_close_mechanism(members: &[&UiElement], cfg: &KeywordDetectConfig) -> bool {
    members.iter().any(|e| {
        cfg.close_roles.contains(e.tag())
            && cfg
                .close_keywords
                .iter()
                .any(|k| contains_word(e.content.label(), k))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClusterScore {
    pub anchors: f64,
    pub centrality: f64,
    pub structural: f64,
    pub total: f64,
}

pub fn score_cluster(
    cluster: &[&UiElement],
    state: &ScreenState,
    cfg: &KeywordDetectConfig,
) -> ClusterScore {
    let anchors = cluster.len().min(cfg.anchor_cap) as f64 * cfg.anchor_weight;

    let b = cluster_box(cluster);
    let (w, h) = (state.width() as f64, state.height() as f64);
    let (cx, cy) = (b.x as f64 + b.w as f64 / 2.0, b.y as f64 + b.h as f64 / 2.0);
    let d = (cx - w / 2.0).hypot(cy - h / 2.0);
    let d_max = (w / 2.0).hypot(h / 2.0);
    let centrality = cfg.centrality_max * (1.0 - d / d_max).max(0.0);

    let members = region_members(cluster, state, cfg);
    let mut structural = 0.0;
    if members.iter().any(|e| cfg.button_roles.contains(e.tag())) {
        structural += cfg.structural_bonus;
    }
    if members.iter().any(|e| cfg.input_roles.contains(e.tag())) {
        structural += cfg.structural_bonus;
    }
    if has_close_mechanism(&members, cfg) {
        structural += cfg.structural_bonus;
    }
    ClusterScore {
        anchors,
        centrality,
        structural,
        total: anchors + centrality + structural,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rejection {
    TooFewAnchors,
    TooSmall,
    Navigation,
    NoCloseMechanism,
    FullScreen,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterReport {
    pub anchor_ids: Vec<usize>,
    pub edge: bool,
    pub score: ClusterScore,
    pub passed_threshold: bool,
    pub rejection: Option<Rejection>,
    pub member_ids: Vec<usize>,
}

impl ClusterReport {
    pub fn accepted(&self) -> bool {
        (self.edge || self.passed_threshold) && self.rejection.is_none()
    }
}

fn rejection(
    cluster: &[&UiElement],
    members: &[&UiElement],
    state: &ScreenState,
    cfg: &KeywordDetectConfig,
) -> Option<Rejection> {
    let screen_area = (state.width() * state.height()) as f64;
    let area = cluster_box(cluster).area() as f64;
    if cluster.len() < cfg.min_anchors {
        Some(Rejection::TooFewAnchors)
    } else if area < cfg.min_area_fraction * screen_area {
        Some(Rejection::TooSmall)
    } else if cluster.iter().all(|e| {
        e.region_hint
            .as_ref()
            .is_some_and(|h| cfg.navigation_regions.contains(&h.name))
    }) {
        Some(Rejection::Navigation)
    } else if !has_close_mechanism(members, cfg) {
        Some(Rejection::NoCloseMechanism)
    } else if area > cfg.max_area_fraction * screen_area {
        Some(Rejection::FullScreen)
    } else {
        None
    }
}

/// Scores and judges every anchor cluster on the screen.
pub fn evaluate_clusters(
    state: &ScreenState,
    cfg: &KeywordDetectConfig,
    search: Option<&FracRect>,
) -> Vec<ClusterReport> {
    let anchors = extract_anchors_in(state, cfg, search);
    let clusters = cluster_anchors(&anchors, state, cfg);
    let scored: Vec<(bool, ClusterScore)> = clusters
        .iter()
        .map(|c| (edge_rule(c, state, cfg), score_cluster(c, state, cfg)))
        .collect();
    let s_max = scored
        .iter()
        .filter(|(edge, _)| !edge)
        .map(|(_, s)| s.total)
        .fold(f64::NEG_INFINITY, f64::max);

    clusters
        .iter()
        .zip(scored)
        .map(|(c, (edge, score))| {
            let members = region_members(c, state, cfg);
            let passed_threshold = !edge
                && score.total >= cfg.score_threshold
                && score.total >= cfg.relative_floor * s_max;
            let rejection = if edge || passed_threshold {
                rejection(c, &members, state, cfg)
            } else {
                None
            };
            ClusterReport {
                anchor_ids: c.iter().map(|e| e.id).collect(),
                edge,
                score,
                passed_threshold,
                rejection,
                member_ids: members.iter().map(|e| e.id).collect(),
            }
        })
        .collect()
}

pub fn detect_keyword(state: &ScreenState, cfg: &KeywordDetectConfig) -> Option<ModalPartition> {
    detect_keyword_in(state, cfg, None)
}

pub fn detect_keyword_in(
    state: &ScreenState,
    cfg: &KeywordDetectConfig,
    search: Option<&FracRect>,
) -> Option<ModalPartition> {
    let ids: BTreeSet<usize> = evaluate_clusters(state, cfg, search)
        .into_iter()
        .filter(ClusterReport::accepted)
        .flat_map(|r| r.member_ids)
        .collect();
    if ids.is_empty() {
        return None;
    }
    Some(ModalPartition::from_ids(
        state,
        &ids,
        DetectionMethod::Keyword,
    ))
}
