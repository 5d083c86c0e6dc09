//! Region segmentation and intra-region block structure.

pub mod blocks;
pub mod profile;
pub mod segment;
pub mod sheet;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::model::{CenterPoint, Px, RegionKind, UiElement};
use crate::reduce::CompactElement;
pub use blocks::{
    estimate_base_gap, reorder, select_theta, split_blocks, ThetaChoice, ThetaConfig,
};
pub use profile::{ProfileError, ProfileSet, RegionProfile, APP_ORDER};
pub use segment::{segment, Segmentation};

/// Anything with a position, a role and a label can be segmented.
pub trait Placed {
    fn center(&self) -> CenterPoint;
    fn tag(&self) -> &str;
    fn label(&self) -> &str;
}

impl Placed for UiElement {
    fn center(&self) -> CenterPoint {
        UiElement::center(self)
    }

    fn tag(&self) -> &str {
        UiElement::tag(self)
    }

    fn label(&self) -> &str {
        self.content.label()
    }
}

impl Placed for CompactElement {
    fn center(&self) -> CenterPoint {
        self.center
    }

    fn tag(&self) -> &str {
        &self.tag
    }

    fn label(&self) -> &str {
        &self.name
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemanticRegion {
    pub name: String,
    pub kind: RegionKind,
    pub blocks: Vec<Vec<CompactElement>>,
}

impl SemanticRegion {
    pub fn elements(&self) -> impl Iterator<Item = &CompactElement> {
        self.blocks.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Reorders a group of elements and splits it with an adaptively chosen
/// threshold.
pub fn structure_group(
    name: &str,
    kind: RegionKind,
    items: Vec<CompactElement>,
    cfg: &ThetaConfig,
) -> SemanticRegion {
    let items = reorder(items);
    let theta = select_theta(&items, cfg).theta;
    let blocks = if items.is_empty() {
        Vec::new()
    } else {
        split_blocks(items, theta, cfg)
    };
    SemanticRegion {
        name: name.to_string(),
        kind,
        blocks,
    }
}

/// Segments the reduced background into the profile's regions and structures
/// each one. Empty regions are dropped; the rest keep profile order.
pub fn build_regions(
    items: Vec<CompactElement>,
    profile: &RegionProfile,
    width: Px,
    height: Px,
    keywords: &BTreeSet<String>,
    cfg: &ThetaConfig,
) -> Vec<SemanticRegion> {
    let seg = segment(&items, profile, width, height);
    let mut buckets: Vec<Vec<CompactElement>> = vec![Vec::new(); seg.regions.len()];
    for (e, &r) in items.into_iter().zip(&seg.assignment) {
        buckets[r].push(e);
    }
    let cells = profile.cell_regex();
    seg.regions
        .iter()
        .zip(buckets)
        .filter(|(_, members)| !members.is_empty())
        .filter_map(|(spec, members)| {
            let region = match (&profile.sheet_region, &cells) {
                (Some(sheet), Some(re)) if *sheet == spec.name => SemanticRegion {
                    name: spec.name.clone(),
                    kind: spec.kind,
                    blocks: sheet::optimize_spreadsheet(reorder(members), keywords, re),
                },
                _ => structure_group(&spec.name, spec.kind, members, cfg),
            };
            (!region.is_empty()).then_some(region)
        })
        .collect()
}
