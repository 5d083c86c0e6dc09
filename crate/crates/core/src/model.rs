//! Screen-state domain types and the linearized tree input format.
//!
//! The input is UTF-8 text. The first meaningful line is a header
//! `screen <W> <H>`; every following line describes one element with eight
//! tab-separated columns:
//!
//! ```text
//! tag  name  text  class|description  x  y  w  h
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Inside text columns
//! the escapes `\n`, `\t` and `\\` are recognised.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Integer screen pixels.
pub type Px = i64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoundingBox {
    pub x: Px,
    pub y: Px,
    pub w: Px,
    pub h: Px,
}

impl BoundingBox {
    /// Panics on negative extents.
    pub fn new(x: Px, y: Px, w: Px, h: Px) -> Self {
        assert!(
            w >= 0 && h >= 0,
            "bounding box extents must be non-negative"
        );
        Self { x, y, w, h }
    }

    pub fn center(&self) -> CenterPoint {
        center_of(self)
    }

    pub fn area(&self) -> Px {
        self.w * self.h
    }

    pub fn right(&self) -> Px {
        self.x + self.w
    }

    pub fn bottom(&self) -> Px {
        self.y + self.h
    }

    /// Smallest box covering both.
    pub fn union(&self, other: &BoundingBox) -> BoundingBox {
        let x = self.x.min(other.x);
        let y = self.y.min(other.y);
        let r = self.right().max(other.right());
        let b = self.bottom().max(other.bottom());
        BoundingBox::new(x, y, r - x, b - y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CenterPoint {
    pub cx: Px,
    pub cy: Px,
}

impl CenterPoint {
    pub fn new(cx: Px, cy: Px) -> Self {
        Self { cx, cy }
    }

    pub fn distance(&self, other: &CenterPoint) -> f64 {
        let dx = (self.cx - other.cx) as f64;
        let dy = (self.cy - other.cy) as f64;
        dx.hypot(dy)
    }
}

impl fmt::Display for CenterPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.cx, self.cy)
    }
}

/// Center of a box. Half pixels round toward +inf.
pub fn center_of(b: &BoundingBox) -> CenterPoint {
    CenterPoint {
        cx: b.x + (b.w + 1).div_euclid(2),
        cy: b.y + (b.h + 1).div_euclid(2),
    }
}

/// The semantic payload of an element. Field-wise equality is what temporal
/// matching compares.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SemanticContent {
    pub tag: String,
    pub name: String,
    pub text: String,
    pub cls: String,
    pub description: String,
}

impl SemanticContent {
    pub fn new(tag: &str, name: &str) -> Self {
        Self {
            tag: tag.to_lowercase(),
            name: name.to_string(),
            ..Default::default()
        }
    }

    pub fn with_text(mut self, text: &str) -> Self {
        self.text = text.to_string();
        self
    }

    /// Name when present, otherwise text.
    pub fn label(&self) -> &str {
        if self.name.is_empty() {
            &self.text
        } else {
            &self.name
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegionKind {
    Static,
    Dynamic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionHint {
    pub name: String,
    pub kind: RegionKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UiElement {
    pub id: usize,
    pub content: SemanticContent,
    pub bbox: BoundingBox,
    pub region_hint: Option<RegionHint>,
}

impl UiElement {
    pub fn new(id: usize, content: SemanticContent, bbox: BoundingBox) -> Self {
        Self {
            id,
            content,
            bbox,
            region_hint: None,
        }
    }

    pub fn center(&self) -> CenterPoint {
        center_of(&self.bbox)
    }

    pub fn tag(&self) -> &str {
        &self.content.tag
    }

    /// Elements without a hint are treated as dynamic.
    pub fn kind(&self) -> RegionKind {
        self.region_hint
            .as_ref()
            .map(|h| h.kind)
            .unwrap_or(RegionKind::Dynamic)
    }
}

/// All elements of one observation step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScreenState {
    elements: Vec<UiElement>,
    screen_w: Px,
    screen_h: Px,
    step: u64,
}

impl ScreenState {
    /// Element ids are reassigned to `0..n` in listing order.
    pub fn new(elements: Vec<UiElement>, screen_w: Px, screen_h: Px, step: u64) -> Self {
        assert!(
            screen_w > 0 && screen_h > 0,
            "screen dimensions must be positive"
        );
        let elements = elements
            .into_iter()
            .enumerate()
            .map(|(i, mut e)| {
                e.id = i;
                e
            })
            .collect();
        Self {
            elements,
            screen_w,
            screen_h,
            step,
        }
    }

    pub fn from_parts(
        parts: impl IntoIterator<Item = (SemanticContent, BoundingBox)>,
        screen_w: Px,
        screen_h: Px,
    ) -> Self {
        let elements = parts
            .into_iter()
            .map(|(c, b)| UiElement::new(0, c, b))
            .collect();
        Self::new(elements, screen_w, screen_h, 0)
    }

    pub fn elements(&self) -> &[UiElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn width(&self) -> Px {
        self.screen_w
    }

    pub fn height(&self) -> Px {
        self.screen_h
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn with_step(mut self, step: u64) -> Self {
        self.step = step;
        self
    }

    /// Replaces every element's region hint. `hints` is indexed by element id.
    pub fn with_hints(mut self, hints: Vec<RegionHint>) -> Self {
        assert_eq!(hints.len(), self.elements.len());
        for (e, h) in self.elements.iter_mut().zip(hints) {
            e.region_hint = Some(h);
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("missing `screen <W> <H>` header")]
    MissingHeader,
    #[error("line {line_no}: invalid screen dimensions")]
    InvalidDimensions { line_no: usize },
    #[error("document contains no well-formed element lines")]
    EmptyDocument,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub line_no: usize,
    pub reason: String,
}

impl fmt::Display for ParseWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}: malformed element line: {}",
            self.line_no, self.reason
        )
    }
}

#[derive(Debug, Clone)]
pub struct ParsedTree {
    pub state: ScreenState,
    pub warnings: Vec<ParseWarning>,
}

const COLUMNS: usize = 8;

pub fn parse_tree(raw: &str) -> Result<ParsedTree, ParseError> {
    let mut lines = raw
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (w, h) = parse_header(header_no, header)?;

    let mut elements = Vec::new();
    let mut warnings = Vec::new();
    for (line_no, line) in lines {
        match parse_element_line(line) {
            Ok((content, bbox)) => elements.push(UiElement::new(0, content, bbox)),
            Err(reason) => warnings.push(ParseWarning { line_no, reason }),
        }
    }
    if elements.is_empty() {
        return Err(ParseError::EmptyDocument);
    }
    Ok(ParsedTree {
        state: ScreenState::new(elements, w, h, 0),
        warnings,
    })
}

fn parse_header(line_no: usize, line: &str) -> Result<(Px, Px), ParseError> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some("screen") {
        return Err(ParseError::MissingHeader);
    }
    let dims: Vec<_> = parts.collect();
    let bad = ParseError::InvalidDimensions { line_no };
    if dims.len() != 2 {
        return Err(bad);
    }
    let w = parse_px(dims[0]).ok_or_else(|| bad.clone())?;
    let h = parse_px(dims[1]).ok_or_else(|| bad.clone())?;
    if w <= 0 || h <= 0 {
        return Err(bad);
    }
    Ok((w, h))
}

/// Rounds half-up to an integer pixel.
fn parse_px(s: &str) -> Option<Px> {
    let v: f64 = s.trim().parse().ok()?;
    if !v.is_finite() || v.abs() > 1e12 {
        return None;
    }
    Some((v + 0.5).floor() as Px)
}

fn parse_element_line(line: &str) -> Result<(SemanticContent, BoundingBox), String> {
    let cols: Vec<&str> = line.split('\t').collect();
    if cols.len() != COLUMNS {
        return Err(format!("expected {COLUMNS} columns, found {}", cols.len()));
    }
    let mut geo = [0; 4];
    for (slot, (col, label)) in geo
        .iter_mut()
        .zip(cols[4..].iter().zip(["x", "y", "w", "h"]))
    {
        *slot = parse_px(col).ok_or_else(|| format!("column {label} is not a number"))?;
    }
    let [x, y, w, h] = geo;
    if w < 0 || h < 0 {
        return Err("negative extent".into());
    }
    let tag = unescape(cols[0]).trim().to_lowercase();
    if tag.is_empty() {
        return Err("empty tag".into());
    }
    let class_desc = unescape(cols[3]);
    let (cls, description) = match class_desc.split_once('|') {
        Some((c, d)) => (c.to_string(), d.to_string()),
        None => (class_desc, String::new()),
    };
    let content = SemanticContent {
        tag,
        name: unescape(cols[1]),
        text: unescape(cols[2]),
        cls,
        description,
    };
    Ok((content, BoundingBox::new(x, y, w, h)))
}

fn unescape(s: &str) -> String {
    if !s.contains('\\') {
        return s.to_string();
    }
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match chars.next() {
            Some('n') => out.push('\n'),
            Some('t') => out.push('\t'),
            Some('\\') => out.push('\\'),
            Some(other) => {
                out.push('\\');
                out.push(other);
            }
            None => out.push('\\'),
        }
    }
    out
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => {}
            c => out.push(c),
        }
    }
    out
}

/// Renders a state back into the input format. `parse_tree` of the result
/// yields the same elements.
pub fn write_tree(state: &ScreenState) -> String {
    let mut out = format!("screen {} {}\n", state.width(), state.height());
    for e in state.elements() {
        let c = &e.content;
        // A `|` inside the class would be split back into the description.
        let class_desc = if c.description.is_empty() && !c.cls.contains('|') {
            escape(&c.cls)
        } else {
            format!("{}|{}", escape(&c.cls), escape(&c.description))
        };
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            escape(&c.tag),
            escape(&c.name),
            escape(&c.text),
            class_desc,
            e.bbox.x,
            e.bbox.y,
            e.bbox.w,
            e.bbox.h
        ));
    }
    out
}
