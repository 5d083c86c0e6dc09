//! The final observation and its two renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::reduce::CompactElement;
use crate::structure::SemanticRegion;

pub const MODAL_HEADER: &str = "[MODAL]";
pub const BLOCK_TOKEN: &str = "[BLOCK]";
pub const EMPTY_TOKEN: &str = "[EMPTY]";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompressedObservation {
    pub app: String,
    pub modal: Option<SemanticRegion>,
    pub regions: Vec<SemanticRegion>,
    pub source_chars: usize,
    pub output_chars: usize,
    pub output_words: usize,
    pub output_token_estimate: usize,
}

fn element_line(out: &mut String, e: &CompactElement) {
    let _ = write!(out, "({}) \"{}\"", e.tag, e.name);
    if let Some(t) = &e.text {
        let _ = write!(out, " {t}");
    }
    let _ = writeln!(out, " @ {}", e.center);
}

fn region_body(out: &mut String, r: &SemanticRegion) {
    for (i, block) in r.blocks.iter().enumerate() {
        if i > 0 {
            out.push_str(BLOCK_TOKEN);
            out.push('\n');
        }
        for e in block {
            element_line(out, e);
        }
    }
}

fn render(modal: Option<&SemanticRegion>, regions: &[SemanticRegion]) -> String {
    let mut out = String::new();
    if let Some(m) = modal.filter(|m| !m.is_empty()) {
        out.push_str(MODAL_HEADER);
        out.push('\n');
        region_body(&mut out, m);
    }
    for r in regions.iter().filter(|r| !r.is_empty()) {
        let _ = writeln!(out, "[REGION: {}]", r.name);
        region_body(&mut out, r);
    }
    if out.is_empty() {
        out.push_str(EMPTY_TOKEN);
        out.push('\n');
    }
    out
}

impl CompressedObservation {
    /// Drops empty sections and fills in the output statistics.
    pub fn assemble(
        app: &str,
        modal: Option<SemanticRegion>,
        regions: Vec<SemanticRegion>,
        source_chars: usize,
    ) -> Self {
        let modal = modal.filter(|m| !m.is_empty());
        let regions: Vec<SemanticRegion> = regions.into_iter().filter(|r| !r.is_empty()).collect();
        let text = render(modal.as_ref(), &regions);
        let output_chars = text.chars().count();
        Self {
            app: app.to_string(),
            modal,
            regions,
            source_chars,
            output_chars,
            output_words: text.split_whitespace().count(),
            output_token_estimate: output_chars.div_ceil(4),
        }
    }

    pub fn to_text(&self) -> String {
        render(self.modal.as_ref(), &self.regions)
    }

    pub fn to_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("observation serializes");
        s.push('\n');
        s
    }

    pub fn from_structured(doc: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(doc)
    }

    pub fn serialize(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Structured => self.to_structured(),
        }
    }

    pub fn ratio(&self) -> f64 {
        if self.source_chars == 0 {
            0.0
        } else {
            self.output_chars as f64 / self.source_chars as f64
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = &CompactElement> {
        self.modal
            .iter()
            .chain(&self.regions)
            .flat_map(|r| r.elements())
    }
}
