//! Per-application region profiles. Profiles are data: the shipped ones are
//! JSON documents embedded at build time, and a configuration file may
//! replace any of them or add new ones.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::RegionKind;
use crate::structure::Placed;
use crate::text::contains_word;

/// Tie-break order for app detection, and the default profile listing.
pub const APP_ORDER: [&str; 10] = [
    "chrome",
    "vscode",
    "thunderbird",
    "gimp",
    "calc",
    "impress",
    "writer",
    "vlc",
    "os",
    "generic",
];

const EMBEDDED: [&str; 10] = [
    include_str!("../../profiles/chrome.json"),
    include_str!("../../profiles/vscode.json"),
    include_str!("../../profiles/thunderbird.json"),
    include_str!("../../profiles/gimp.json"),
    include_str!("../../profiles/calc.json"),
    include_str!("../../profiles/impress.json"),
    include_str!("../../profiles/writer.json"),
    include_str!("../../profiles/vlc.json"),
    include_str!("../../profiles/os.json"),
    include_str!("../../profiles/generic.json"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Lt,
    Le,
    Gt,
    Ge,
}

impl Op {
    pub fn holds(self, lhs: f64, rhs: f64) -> bool {
        match self {
            Op::Lt => lhs < rhs,
            Op::Le => lhs <= rhs,
            Op::Gt => lhs > rhs,
            Op::Ge => lhs >= rhs,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    #[default]
    Px,
    /// Fraction of the screen width or height.
    Frac,
    /// A fraction that the layout may override with an estimated boundary.
    Split,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Condition {
    pub axis: Axis,
    pub op: Op,
    pub value: f64,
    #[serde(default)]
    pub unit: Unit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RowAnchors {
    pub labels: Vec<String>,
    pub tolerance_px: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowRule {
    pub close_labels: Vec<String>,
    pub delta_frac: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Rule {
    pub region: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub when: Vec<Condition>,
    /// Only elements sharing a row with one of these labels match.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row_anchors: Option<RowAnchors>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
    /// Turns the rule into window detection over the still-unassigned
    /// elements; each window becomes its own numbered region.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub windows: Option<WindowRule>,
}

impl Rule {
    pub fn is_catch_all(&self) -> bool {
        self.when.is_empty()
            && self.row_anchors.is_none()
            && self.tags.is_empty()
            && self.windows.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionSpec {
    pub name: String,
    pub kind: RegionKind,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellPattern {
    pub pattern: String,
    pub min_matches: usize,
}

/// How a `split` boundary is estimated from the layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitEstimate {
    pub from_x_px: f64,
    pub below_y_frac: f64,
    pub min_frac: f64,
    pub max_frac: f64,
}

/// Alternative layout of the same application, active when its anchors are
/// present.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct View {
    pub name: String,
    pub require_any: Vec<String>,
    pub require_min: usize,
    #[serde(default)]
    pub forbid_any: Vec<String>,
    pub regions: Vec<RegionSpec>,
    pub rules: Vec<Rule>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionProfile {
    pub app: String,
    #[serde(default)]
    pub anchors: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cell_pattern: Option<CellPattern>,
    /// Region whose cells are pruned with the spreadsheet rules.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sheet_region: Option<String>,
    pub regions: Vec<RegionSpec>,
    pub rules: Vec<Rule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitEstimate>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub views: Vec<View>,
}

#[derive(Debug, Error, PartialEq)]
pub enum ProfileError {
    #[error("unknown profile `{0}`")]
    UnknownProfile(String),
    #[error("profile `{app}`: {reason}")]
    Invalid { app: String, reason: String },
    #[error("profile document: {0}")]
    Parse(String),
}

fn check_layout(app: &str, regions: &[RegionSpec], rules: &[Rule]) -> Result<(), ProfileError> {
    let invalid = |reason: String| ProfileError::Invalid {
        app: app.to_string(),
        reason,
    };
    match rules.last() {
        Some(r) if r.is_catch_all() => {}
        _ => {
            return Err(invalid(
                "the last rule must be an unconditional catch-all".into(),
            ))
        }
    }
    for rule in rules {
        if !regions.iter().any(|r| r.name == rule.region) {
            return Err(invalid(format!(
                "rule targets undeclared region `{}`",
                rule.region
            )));
        }
        if rule.when.iter().any(|c| !c.value.is_finite()) {
            return Err(invalid(format!(
                "non-finite threshold in `{}`",
                rule.region
            )));
        }
    }
    Ok(())
}

impl RegionProfile {
    pub fn from_json(doc: &str) -> Result<Self, ProfileError> {
        let p: RegionProfile =
            serde_json::from_str(doc).map_err(|e| ProfileError::Parse(e.to_string()))?;
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), ProfileError> {
        check_layout(&self.app, &self.regions, &self.rules)?;
        for v in &self.views {
            check_layout(&self.app, &v.regions, &v.rules)?;
        }
        if let Some(cp) = &self.cell_pattern {
            regex::Regex::new(&cp.pattern).map_err(|e| ProfileError::Invalid {
                app: self.app.clone(),
                reason: e.to_string(),
            })?;
        }
        Ok(())
    }

    /// Number of distinct anchors found among the labels, plus one when
    /// enough labels look like spreadsheet cell names.
    pub fn evidence<T: Placed>(&self, items: &[T]) -> usize {
        let mut score = self
            .anchors
            .iter()
            .filter(|a| items.iter().any(|e| contains_word(e.label(), a)))
            .count();
        if let (Some(cp), Some(re)) = (&self.cell_pattern, self.cell_regex()) {
            let hits = items.iter().filter(|e| re.is_match(e.label())).count();
            if hits >= cp.min_matches {
                score += 1;
            }
        }
        score
    }

    pub fn cell_regex(&self) -> Option<regex::Regex> {
        self.cell_pattern
            .as_ref()
            .and_then(|cp| regex::Regex::new(&cp.pattern).ok())
    }

    /// The active region list and rules, taking views into account.
    pub fn layout<T: Placed>(&self, items: &[T]) -> (&[RegionSpec], &[Rule], Option<&str>) {
        let present = |labels: &[String]| {
            labels
                .iter()
                .filter(|a| items.iter().any(|e| contains_word(e.label(), a)))
                .count()
        };
        for v in &self.views {
            if present(&v.require_any) >= v.require_min && present(&v.forbid_any) == 0 {
                return (&v.regions, &v.rules, Some(&v.name));
            }
        }
        (&self.regions, &self.rules, None)
    }
}

/// All known profiles, in detection order.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileSet {
    profiles: Vec<RegionProfile>,
}

impl Default for ProfileSet {
    fn default() -> Self {
        let profiles = EMBEDDED
            .iter()
            .map(|doc| RegionProfile::from_json(doc).expect("embedded profile"))
            .collect();
        Self { profiles }
    }
}

impl ProfileSet {
    /// Replaces profiles with the same app id; new ids are appended before
    /// `generic`.
    pub fn with_overrides(mut self, overrides: &[RegionProfile]) -> Result<Self, ProfileError> {
        for p in overrides {
            p.validate()?;
            match self.profiles.iter_mut().find(|q| q.app == p.app) {
                Some(slot) => *slot = p.clone(),
                None => {
                    let at = self.profiles.len().saturating_sub(1);
                    self.profiles.insert(at, p.clone());
                }
            }
        }
        Ok(self)
    }

    pub fn get(&self, app: &str) -> Result<&RegionProfile, ProfileError> {
        self.profiles
            .iter()
            .find(|p| p.app == app)
            .ok_or_else(|| ProfileError::UnknownProfile(app.to_string()))
    }

    pub fn apps(&self) -> impl Iterator<Item = &str> {
        self.profiles.iter().map(|p| p.app.as_str())
    }

    /// Profile with the most anchor evidence; earlier profiles win ties and
    /// `generic` is returned when nothing matches.
    pub fn detect_app<T: Placed>(&self, items: &[T]) -> &RegionProfile {
        let mut best: Option<(&RegionProfile, usize)> = None;
        for p in &self.profiles {
            let s = p.evidence(items);
            if s > 0 && best.is_none_or(|(_, b)| s > b) {
                best = Some((p, s));
            }
        }
        match best {
            Some((p, _)) => p,
            None => self
                .get("generic")
                .unwrap_or(&self.profiles[self.profiles.len() - 1]),
        }
    }
}
