//! Rule-driven assignment of elements to semantic regions.

use std::collections::BTreeMap;

use crate::model::{Px, RegionHint};
use crate::structure::profile::{
    Axis, Condition, RegionProfile, RegionSpec, Rule, SplitEstimate, Unit, WindowRule,
};
use crate::structure::Placed;
use crate::text::contains_word;
use crate::union_find::UnionFind;

#[derive(Debug, Clone, PartialEq)]
pub struct Segmentation {
    /// Regions in display order, window placeholders expanded.
    pub regions: Vec<RegionSpec>,
    /// Index into `regions` for every input item.
    pub assignment: Vec<usize>,
    pub view: Option<String>,
    /// Estimated boundary in pixels, when the profile asks for one.
    pub split_px: Option<f64>,
}

impl Segmentation {
    pub fn hints(&self) -> Vec<RegionHint> {
        self.assignment
            .iter()
            .map(|&r| RegionHint {
                name: self.regions[r].name.clone(),
                kind: self.regions[r].kind,
            })
            .collect()
    }

    pub fn members(&self, region: usize) -> impl Iterator<Item = usize> + '_ {
        self.assignment
            .iter()
            .enumerate()
            .filter(move |(_, &r)| r == region)
            .map(|(i, _)| i)
    }
}

struct Frame {
    w: f64,
    h: f64,
    split_px: Option<f64>,
}

impl Frame {
    fn threshold(&self, c: &Condition) -> f64 {
        let dim = match c.axis {
            Axis::X => self.w,
            Axis::Y => self.h,
        };
        match c.unit {
            Unit::Px => c.value,
            Unit::Frac => c.value * dim,
            Unit::Split => self.split_px.unwrap_or(c.value * dim),
        }
    }

    fn holds<T: Placed>(&self, item: &T, c: &Condition) -> bool {
        let p = item.center();
        let v = match c.axis {
            Axis::X => p.cx,
            Axis::Y => p.cy,
        } as f64;
        c.op.holds(v, self.threshold(c))
    }

    fn in_band<T: Placed>(&self, item: &T, rule: &Rule) -> bool {
        rule.when.iter().all(|c| self.holds(item, c))
    }
}

/// Midpoint of the widest horizontal gap between element centers, limited
/// to the band the estimate describes.
pub fn estimate_split<T: Placed>(items: &[T], est: &SplitEstimate, w: Px, h: Px) -> Option<f64> {
    let mut xs: Vec<Px> = items
        .iter()
        .map(|e| e.center())
        .filter(|c| c.cx as f64 >= est.from_x_px && c.cy as f64 >= est.below_y_frac * h as f64)
        .map(|c| c.cx)
        .collect();
    xs.sort_unstable();
    xs.dedup();
    let (lo, hi) = (est.min_frac * w as f64, est.max_frac * w as f64);
    xs.windows(2)
        .map(|p| (p[1] - p[0], (p[0] + p[1]) as f64 / 2.0))
        .filter(|&(_, mid)| mid >= lo && mid <= hi)
        .fold(None, |best: Option<(Px, f64)>, cur| match best {
            Some(b) if b.0 >= cur.0 => Some(b),
            _ => Some(cur),
        })
        .map(|(_, mid)| mid)
}

/// Groups of still-unassigned items that look like windows: proximity
/// clusters holding a close or minimize control.
fn detect_windows<T: Placed>(
    items: &[T],
    open: &[usize],
    rule: &WindowRule,
    w: Px,
    h: Px,
) -> Vec<Vec<usize>> {
    let delta = rule.delta_frac * w.min(h) as f64;
    let mut uf = UnionFind::new(open.len());
    for a in 0..open.len() {
        for b in a + 1..open.len() {
            if items[open[a]].center().distance(&items[open[b]].center()) < delta {
                uf.union(a, b);
            }
        }
    }
    let mut windows: Vec<Vec<usize>> = uf
        .groups()
        .into_iter()
        .map(|g| g.into_iter().map(|i| open[i]).collect::<Vec<_>>())
        .filter(|g| {
            g.iter().any(|&i| {
                rule.close_labels
                    .iter()
                    .any(|l| contains_word(items[i].label(), l))
            })
        })
        .collect();
    let top_left = |g: &Vec<usize>| {
        g.iter()
            .map(|&i| {
                let c = items[i].center();
                (c.cy, c.cx, i)
            })
            .min()
    };
    windows.sort_by_key(top_left);
    windows
}

/// Assigns every item to exactly one region. Rules are tried in order and
/// the first match wins.
pub fn segment<T: Placed>(items: &[T], profile: &RegionProfile, w: Px, h: Px) -> Segmentation {
    let (regions, rules, view) = profile.layout(items);
    let uses_split = rules
        .iter()
        .flat_map(|r| &r.when)
        .any(|c| c.unit == Unit::Split);
    let split_px = match (&profile.split, uses_split) {
        (Some(est), true) => estimate_split(items, est, w, h),
        _ => None,
    };
    let frame = Frame {
        w: w as f64,
        h: h as f64,
        split_px,
    };

    let mut slot: Vec<Option<String>> = vec![None; items.len()];
    let mut windows_at: BTreeMap<String, usize> = BTreeMap::new();
    for rule in rules {
        let open: Vec<usize> = (0..items.len()).filter(|&i| slot[i].is_none()).collect();
        if let Some(wr) = &rule.windows {
            let found = detect_windows(items, &open, wr, w, h);
            windows_at.insert(rule.region.clone(), found.len());
            for (k, members) in found.into_iter().enumerate() {
                for i in members {
                    slot[i] = Some(format!("{}_{}", rule.region, k + 1));
                }
            }
            continue;
        }
        let anchor_rows: Option<Vec<Px>> = rule.row_anchors.as_ref().map(|ra| {
            items
                .iter()
                .filter(|e| frame.in_band(*e, rule))
                .filter(|e| ra.labels.iter().any(|l| contains_word(e.label(), l)))
                .map(|e| e.center().cy)
                .collect()
        });
        for i in open {
            let e = &items[i];
            if !frame.in_band(e, rule) {
                continue;
            }
            if !rule.tags.is_empty() && !rule.tags.iter().any(|t| t == e.tag()) {
                continue;
            }
            if let (Some(rows), Some(ra)) = (&anchor_rows, &rule.row_anchors) {
                let cy = e.center().cy;
                if !rows
                    .iter()
                    .any(|&ay| ((cy - ay).abs() as f64) <= ra.tolerance_px)
                {
                    continue;
                }
            }
            slot[i] = Some(rule.region.clone());
        }
    }

    let mut out_regions = Vec::new();
    for spec in regions {
        match windows_at.get(&spec.name) {
            Some(&n) => out_regions.extend((1..=n).map(|k| RegionSpec {
                name: format!("{}_{k}", spec.name),
                kind: spec.kind,
            })),
            None => out_regions.push(spec.clone()),
        }
    }
    let index: BTreeMap<&str, usize> = out_regions
        .iter()
        .enumerate()
        .map(|(i, r)| (r.name.as_str(), i))
        .collect();
    let fallback = rules.last().map(|r| index[r.region.as_str()]).unwrap_or(0);
    let assignment = slot
        .iter()
        .map(|s| {
            s.as_deref()
                .and_then(|n| index.get(n).copied())
                .unwrap_or(fallback)
        })
        .collect();
    Segmentation {
        regions: out_regions,
        assignment,
        view: view.map(str::to_string),
        split_px,
    }
}
