//! Reading order and adaptive block splitting inside a region.

use serde::{Deserialize, Serialize};

use crate::structure::Placed;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ThetaConfig {
    pub floor_px: f64,
    /// Share of the smallest vertical gaps used for the base gap.
    pub quantile: f64,
    pub multipliers: Vec<f64>,
    pub max_blocks: usize,
    pub frag_block_min: usize,
    pub frag_singleton_ratio: f64,
    /// Tags that always open a new block.
    pub heading_tags: Vec<String>,
}

impl Default for ThetaConfig {
    fn default() -> Self {
        Self {
            floor_px: 40.0,
            quantile: 0.70,
            multipliers: vec![3.0, 4.0, 8.0],
            max_blocks: 50,
            frag_block_min: 10,
            frag_singleton_ratio: 0.5,
            heading_tags: vec!["heading".into()],
        }
    }
}

impl ThetaConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.multipliers.is_empty() {
            return Err("theta: multipliers must not be empty".into());
        }
        if self.multipliers.windows(2).any(|w| w[0] >= w[1]) || self.multipliers[0] <= 0.0 {
            return Err("theta: multipliers must be positive and strictly increasing".into());
        }
        if !(self.quantile > 0.0 && self.quantile <= 1.0) {
            return Err("theta: quantile must lie in (0, 1]".into());
        }
        if self.floor_px.is_nan() || self.floor_px < 0.0 {
            return Err("theta: floor_px must be non-negative".into());
        }
        Ok(())
    }
}

/// Stable sort top to bottom, then left to right.
pub fn reorder<T: Placed>(mut items: Vec<T>) -> Vec<T> {
    items.sort_by_key(|e| {
        let c = e.center();
        (c.cy, c.cx)
    });
    items
}

fn median(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    }
}

/// Typical vertical spacing of a reordered region: the median of the
/// smallest `quantile` share of adjacent gaps, never below the floor.
/// `None` for fewer than two items.
pub fn estimate_base_gap<T: Placed>(items: &[T], cfg: &ThetaConfig) -> Option<f64> {
    if items.len() < 2 {
        return None;
    }
    let mut gaps: Vec<f64> = items
        .windows(2)
        .map(|p| (p[1].center().cy - p[0].center().cy).abs() as f64)
        .collect();
    gaps.sort_by(f64::total_cmp);
    let keep = ((gaps.len() as f64 * cfg.quantile).floor() as usize).max(1);
    Some(median(&gaps[..keep]).max(cfg.floor_px))
}

/// Block lengths for the given threshold.
pub fn block_sizes<T: Placed>(items: &[T], theta: f64, cfg: &ThetaConfig) -> Vec<usize> {
    let mut sizes = Vec::new();
    for (i, e) in items.iter().enumerate() {
        let opens = i == 0
            || cfg.heading_tags.iter().any(|t| t == e.tag())
            || items[i - 1].center().distance(&e.center()) > theta;
        if opens {
            sizes.push(1);
        } else if let Some(last) = sizes.last_mut() {
            *last += 1;
        }
    }
    sizes
}

pub fn split_blocks<T: Placed>(items: Vec<T>, theta: f64, cfg: &ThetaConfig) -> Vec<Vec<T>> {
    let sizes = block_sizes(&items, theta, cfg);
    let mut rest = items.into_iter();
    sizes
        .into_iter()
        .map(|n| rest.by_ref().take(n).collect())
        .collect()
}

pub fn over_segmented(sizes: &[usize], cfg: &ThetaConfig) -> bool {
    let blocks = sizes.len();
    let singletons = sizes.iter().filter(|&&s| s == 1).count();
    blocks > cfg.max_blocks
        || (blocks > cfg.frag_block_min
            && singletons as f64 / blocks as f64 > cfg.frag_singleton_ratio)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaChoice {
    pub base_gap: f64,
    pub theta: f64,
    pub multiplier: f64,
    /// False when every multiplier over-segmented and the largest was used.
    pub accepted: bool,
}

/// Tries the multipliers in increasing order and keeps the first that does
/// not over-segment the region.
pub fn select_theta<T: Placed>(items: &[T], cfg: &ThetaConfig) -> ThetaChoice {
    let base_gap = estimate_base_gap(items, cfg).unwrap_or(cfg.floor_px);
    for &m in &cfg.multipliers {
        let theta = base_gap * m;
        if !over_segmented(&block_sizes(items, theta, cfg), cfg) {
            return ThetaChoice {
                base_gap,
                theta,
                multiplier: m,
                accepted: true,
            };
        }
    }
    let m = cfg.multipliers.last().copied().unwrap_or(1.0);
    ThetaChoice {
        base_gap,
        theta: base_gap * m,
        multiplier: m,
        accepted: false,
    }
}
