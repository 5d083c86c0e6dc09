//! Instruction-aware shortening of long text.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub const ELLIPSIS: &str = "...";

const STOP_WORDS: &[&str] = &[
    // function words
    "the", "a", "an", "in", "on", "at", "to", "for", "of", "with", "by", "from", "is", "are", "am",
    "be", "this", "that", "it", // task phrasing
    "please", "can", "could", "would", "you", "i", "my", "me", "need", "want", "try", "make", "let",
    // generic UI operations and nouns
    "click", "tap", "press", "hit", "select", "choose", "open", "go", "browse", "navigate", "find",
    "search", "check", "uncheck", "button", "link", "tab", "menu", "window", "page", "website",
    "site", "input", "enter", "type", "fill", "text", "box", "field",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ParagraphConfig {
    pub stop_words: BTreeSet<String>,
    pub window_chars: usize,
    pub max_head_chars: usize,
    pub min_keyword_len: usize,
    pub paragraph_tags: BTreeSet<String>,
}

impl Default for ParagraphConfig {
    fn default() -> Self {
        Self {
            stop_words: STOP_WORDS.iter().map(|s| s.to_string()).collect(),
            window_chars: 50,
            max_head_chars: 100,
            min_keyword_len: 2,
            paragraph_tags: ["paragraph", "text", "document-text"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        }
    }
}

impl ParagraphConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.window_chars == 0 || self.max_head_chars == 0 {
            return Err("paragraph: window_chars and max_head_chars must be positive".into());
        }
        Ok(())
    }
}

pub fn extract_keywords(instruction: &str, cfg: &ParagraphConfig) -> BTreeSet<String> {
    let lowered: String = instruction
        .to_lowercase()
        .chars()
        .map(|c| if c.is_alphanumeric() { c } else { ' ' })
        .collect();
    lowered
        .split_whitespace()
        .filter(|w| w.chars().count() >= cfg.min_keyword_len)
        .filter(|w| !cfg.stop_words.contains(*w))
        .map(str::to_string)
        .collect()
}

fn fold(c: char) -> char {
    let mut lower = c.to_lowercase();
    match (lower.next(), lower.next()) {
        (Some(l), None) => l,
        _ => c,
    }
}

fn find_chars(hay: &[char], needle: &[char]) -> Option<usize> {
    if needle.is_empty() || needle.len() > hay.len() {
        return None;
    }
    hay.windows(needle.len()).position(|w| w == needle)
}

/// Keeps a window of context around the earliest keyword occurrence, or the
/// head of the text when no keyword occurs. Never returns something longer
/// than the input.
pub fn compress_paragraph(
    text: &str,
    keywords: &BTreeSet<String>,
    cfg: &ParagraphConfig,
) -> String {
    let chars: Vec<char> = text.chars().collect();
    let folded: Vec<char> = chars.iter().copied().map(fold).collect();

    // earliest occurrence; at equal positions the longer keyword wins
    let hit = keywords
        .iter()
        .filter_map(|k| {
            let needle: Vec<char> = k.chars().map(fold).collect();
            find_chars(&folded, &needle).map(|i| (i, needle.len()))
        })
        .min_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));

    let out = match hit {
        Some((idx, len)) => {
            let start = idx.saturating_sub(cfg.window_chars);
            let end = (idx + len + cfg.window_chars).min(chars.len());
            let mut s = String::new();
            if start > 0 {
                s.push_str(ELLIPSIS);
                s.push(' ');
            }
            s.extend(&chars[start..end]);
            if end < chars.len() {
                s.push(' ');
                s.push_str(ELLIPSIS);
            }
            s
        }
        None if chars.len() > cfg.max_head_chars => {
            let mut s: String = chars[..cfg.max_head_chars].iter().collect();
            s.push_str(ELLIPSIS);
            s
        }
        None => return text.to_string(),
    };
    if out.chars().count() < chars.len() {
        out
    } else {
        text.to_string()
    }
}
