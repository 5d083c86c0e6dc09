//! Spreadsheet cell pruning: keeps value cells, header cells and cells the
//! instruction mentions, laid out one block per row.

use std::collections::{BTreeMap, BTreeSet};

use regex::Regex;

use crate::reduce::CompactElement;

/// Column letters and row number of a cell name such as `AB12`.
pub fn parse_cell(name: &str) -> Option<(u32, u32)> {
    let split = name.find(|c: char| c.is_ascii_digit())?;
    let (letters, digits) = name.split_at(split);
    if letters.is_empty() || letters.len() > 3 || !letters.chars().all(|c| c.is_ascii_uppercase()) {
        return None;
    }
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let col = letters
        .bytes()
        .fold(0u32, |acc, b| acc * 26 + u32::from(b - b'A' + 1));
    let row = digits.parse().ok()?;
    Some((col, row))
}

fn has_value(e: &CompactElement) -> bool {
    e.text.as_deref().is_some_and(|t| !t.is_empty())
}

fn mentions(e: &CompactElement, keywords: &BTreeSet<String>) -> bool {
    let name = e.name.to_lowercase();
    let text = e.text.as_deref().unwrap_or("").to_lowercase();
    keywords
        .iter()
        .any(|k| name.contains(k.as_str()) || text.contains(k.as_str()))
}

/// Elements whose name parses as a cell reference are cells; anything else
/// is passed through in a trailing block.
pub fn optimize_spreadsheet(
    items: Vec<CompactElement>,
    keywords: &BTreeSet<String>,
    cell_pattern: &Regex,
) -> Vec<Vec<CompactElement>> {
    let mut cells: Vec<((u32, u32), CompactElement)> = Vec::new();
    let mut other = Vec::new();
    for e in items {
        match cell_pattern
            .is_match(&e.name)
            .then(|| parse_cell(&e.name))
            .flatten()
        {
            Some(pos) => cells.push((pos, e)),
            None => other.push(e),
        }
    }
    let valued: Vec<(u32, u32)> = cells
        .iter()
        .filter(|(_, e)| has_value(e))
        .map(|(p, _)| *p)
        .collect();
    let extent = valued
        .iter()
        .fold(None, |acc: Option<(u32, u32, u32, u32)>, &(c, r)| {
            Some(match acc {
                None => (c, c, r, r),
                Some((c0, c1, r0, r1)) => (c0.min(c), c1.max(c), r0.min(r), r1.max(r)),
            })
        });
    let is_header = |(c, r): (u32, u32)| match extent {
        Some((c0, c1, r0, r1)) => {
            (r == r0 && (c0..=c1).contains(&c)) || (c == c0 && (r0..=r1).contains(&r))
        }
        None => false,
    };

    let mut rows: BTreeMap<u32, Vec<(u32, CompactElement)>> = BTreeMap::new();
    for (pos, e) in cells {
        if has_value(&e) || is_header(pos) || mentions(&e, keywords) {
            rows.entry(pos.1).or_default().push((pos.0, e));
        }
    }
    let mut blocks: Vec<Vec<CompactElement>> = rows
        .into_values()
        .map(|mut row| {
            row.sort_by_key(|(c, _)| *c);
            row.into_iter().map(|(_, e)| e).collect()
        })
        .collect();
    if !other.is_empty() {
        blocks.push(other);
    }
    blocks
}
