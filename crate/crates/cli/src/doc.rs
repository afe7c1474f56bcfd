//! Plain-text algebra documents.
//!
//! ```text
//! # comments and blank lines are ignored
//! label: A7
//! source: hand-entered
//! elements: 0 a b c d e 1
//! bottom: 0
//! top: 1
//! join:
//!   0 | 0 a b c d e 1
//!   a | a a b ...
//! meet:
//!   ...
//! prod:
//!   ...
//! impl:
//!   ...
//! ```
//!
//! Fields start in column 1. Matrix rows are indented, begin with the row
//! element's name and a `|`, and list the row's entries by name; rows come
//! in `elements` order and the row element is the left operand. `label` and
//! `source` are optional, everything else is required exactly once.

use std::collections::BTreeMap;
use std::fmt;

use reslat::{Algebra, OpTable, Tables, ValidationError};

const MATRICES: [&str; 4] = ["join", "meet", "prod", "impl"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

/// Every problem found in a document, in source order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseErrors(pub Vec<ParseError>);

impl fmt::Display for ParseErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&lines.join("\n"))
    }
}

impl std::error::Error for ParseErrors {}

/// A parsed document. Names are resolved, axioms are not yet checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub label: Option<String>,
    pub source: Option<String>,
    pub elements: Vec<String>,
    pub bottom: usize,
    pub top: usize,
    pub tables: Tables,
}

/// A token with its 1-based column.
fn words(text: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((offset + text[..s].chars().count() + 1, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((offset + text[..s].chars().count() + 1, &text[s..]));
    }
    out
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.contains(['|', '#', ':'])
}

/// `(line, column, row name, [(column, entry)])`
type RawRow = (usize, usize, String, Vec<(usize, String)>);

struct RawMatrix {
    line: usize,
    rows: Vec<RawRow>,
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<AlgebraDocument, ParseErrors> {
        let mut errors = Vec::new();
        let mut err = |line: usize, col: usize, message: String| errors.push(ParseError { line, col, message });

        let mut scalars: BTreeMap<&str, (usize, usize, String)> = BTreeMap::new();
        let mut matrices: BTreeMap<&str, RawMatrix> = BTreeMap::new();
        let mut current: Option<&str> = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim_end();
            let trimmed = content.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let indent = content.chars().count() - trimmed.chars().count();
            if indent > 0 {
                let Some(m) = current else {
                    err(line, indent + 1, "indented line outside a matrix".into());
                    continue;
                };
                let Some(bar) = trimmed.find('|') else {
                    err(line, indent + 1, "matrix row needs the form `row | entries`".into());
                    continue;
                };
                let head = words(&trimmed[..bar], indent);
                let bar_col = indent + trimmed[..bar].chars().count() + 1;
                let entries = words(&trimmed[bar + 1..], bar_col)
                    .into_iter()
                    .map(|(c, w)| (c, w.to_string()))
                    .collect();
                let (col, row) = match head.as_slice() {
                    [(c, w)] => (*c, w.to_string()),
                    _ => {
                        err(
                            line,
                            indent + 1,
                            "matrix row needs exactly one row name before `|`".into(),
                        );
                        continue;
                    }
                };
                matrices
                    .get_mut(m)
                    .expect("open matrix")
                    .rows
                    .push((line, col, row, entries));
                continue;
            }
            let Some(colon) = trimmed.find(':') else {
                err(line, 1, format!("expected `field: value`, found {trimmed:?}"));
                current = None;
                continue;
            };
            let key = &trimmed[..colon];
            let value_col = trimmed[..=colon].chars().count();
            let value = trimmed[colon + 1..].trim();
            current = None;
            let key = match key {
                "label" | "source" | "elements" | "bottom" | "top" => key,
                "join" | "meet" | "prod" | "impl" => key,
                other => {
                    err(line, 1, format!("unknown field {other:?}"));
                    continue;
                }
            };
            if scalars.contains_key(key) || matrices.contains_key(key) {
                err(line, 1, format!("duplicate field {key:?}"));
                continue;
            }
            if MATRICES.contains(&key) {
                if !value.is_empty() {
                    err(
                        line,
                        value_col + 2,
                        format!("matrix {key:?} takes its rows on the following lines"),
                    );
                }
                matrices.insert(key, RawMatrix { line, rows: Vec::new() });
                current = Some(key);
            } else {
                let col = value_col + 1 + (trimmed[colon + 1..].len() - trimmed[colon + 1..].trim_start().len());
                scalars.insert(key, (line, col, value.to_string()));
            }
        }

        for key in ["elements", "bottom", "top"] {
            if !scalars.contains_key(key) {
                err(0, 0, format!("missing field {key:?}"));
            }
        }
        for key in MATRICES {
            if !matrices.contains_key(key) {
                err(0, 0, format!("missing matrix {key:?}"));
            }
        }

        let mut elements: Vec<String> = Vec::new();
        if let Some((line, col, value)) = scalars.get("elements") {
            for (c, w) in words(value, col - 1) {
                if !valid_name(w) {
                    err(*line, c, format!("invalid element name {w:?}"));
                } else if elements.iter().any(|e| e == w) {
                    err(*line, c, format!("duplicate element name {w:?}"));
                } else {
                    elements.push(w.to_string());
                }
            }
            if elements.is_empty() {
                err(*line, *col, "no elements listed".into());
            }
        }
        let n = elements.len();

        // unknown names are collected and reported together at the end
        let mut unknown: BTreeMap<String, (usize, usize)> = BTreeMap::new();
        let mut resolve = |name: &str, line: usize, col: usize| -> Option<usize> {
            let found = elements.iter().position(|e| e == name);
            if found.is_none() {
                unknown.entry(name.to_string()).or_insert((line, col));
            }
            found
        };

        let mut scalar = |key: &str, resolve: &mut dyn FnMut(&str, usize, usize) -> Option<usize>| {
            scalars
                .get(key)
                .and_then(|(line, col, value)| match words(value, col - 1).as_slice() {
                    [(c, w)] => resolve(w, *line, *c),
                    _ => {
                        err(*line, *col, format!("{key:?} takes exactly one element name"));
                        None
                    }
                })
        };
        let bottom = scalar("bottom", &mut resolve);
        let top = scalar("top", &mut resolve);

        let mut tables: Vec<Option<OpTable>> = Vec::new();
        for key in MATRICES {
            let Some(m) = matrices.get(key) else {
                tables.push(None);
                continue;
            };
            let mut entries = vec![0; n * n];
            let mut ok = n > 0;
            if m.rows.len() != n {
                err(
                    m.line,
                    1,
                    format!("matrix {key:?} has {} rows, expected {n}", m.rows.len()),
                );
                ok = false;
            }
            for (r, (line, col, row, cells)) in m.rows.iter().enumerate() {
                if let Some(expected) = elements.get(r) {
                    if row != expected {
                        err(
                            *line,
                            *col,
                            format!("row {} of {key:?} is labelled {row:?}, expected {expected:?}", r + 1),
                        );
                        ok = false;
                    }
                }
                if cells.len() != n {
                    err(
                        *line,
                        *col,
                        format!("row {row:?} of {key:?} has {} entries, expected {n}", cells.len()),
                    );
                    ok = false;
                }
                for (c, (ccol, cell)) in cells.iter().enumerate() {
                    match resolve(cell, *line, *ccol) {
                        Some(v) if r < n && c < n => entries[r * n + c] = v,
                        Some(_) => {}
                        None => ok = false,
                    }
                }
            }
            tables.push(ok.then(|| OpTable::new(n, entries)));
        }

        if !unknown.is_empty() {
            let listing: Vec<&str> = unknown.keys().map(String::as_str).collect();
            let (line, col) = unknown.values().min().copied().expect("non-empty");
            err(line, col, format!("unknown element name(s): {}", listing.join(", ")));
        }

        if !errors.is_empty() {
            errors.sort_by_key(|e| (e.line, e.col));
            return Err(ParseErrors(errors));
        }
        let mut it = tables.into_iter().map(|t| t.expect("checked above"));
        let tables = Tables {
            join: it.next().expect("join"),
            meet: it.next().expect("meet"),
            prod: it.next().expect("prod"),
            imp: it.next().expect("impl"),
        };
        Ok(AlgebraDocument {
            label: scalars.get("label").map(|v| v.2.clone()).filter(|v| !v.is_empty()),
            source: scalars.get("source").map(|v| v.2.clone()).filter(|v| !v.is_empty()),
            elements,
            bottom: bottom.expect("checked above"),
            top: top.expect("checked above"),
            tables,
        })
    }

    /// Canonical text; `parse(render(d)) == d`.
    pub fn render(&self) -> String {
        let width = self.elements.iter().map(|e| e.chars().count()).max().unwrap_or(1);
        let pad = |s: &str| format!("{s:<width$}");
        let mut out = String::new();
        if let Some(l) = &self.label {
            out.push_str(&format!("label: {l}\n"));
        }
        if let Some(s) = &self.source {
            out.push_str(&format!("source: {s}\n"));
        }
        out.push_str(&format!("elements: {}\n", self.elements.join(" ")));
        out.push_str(&format!("bottom: {}\n", self.elements[self.bottom]));
        out.push_str(&format!("top: {}\n", self.elements[self.top]));
        let t = &self.tables;
        for (key, table) in MATRICES.iter().zip([&t.join, &t.meet, &t.prod, &t.imp]) {
            out.push_str(&format!("{key}:\n"));
            for (r, row) in table.rows().enumerate() {
                let cells: Vec<String> = row.iter().map(|&v| pad(&self.elements[v])).collect();
                let line = format!("  {} | {}", pad(&self.elements[r]), cells.join(" "));
                out.push_str(line.trim_end());
                out.push('\n');
            }
        }
        out
    }

    pub fn to_algebra(&self) -> Result<Algebra, ValidationError> {
        Algebra::new(self.elements.clone(), self.tables.clone(), self.bottom, self.top)
    }

    pub fn from_algebra(alg: &Algebra, label: Option<String>, source: Option<String>) -> AlgebraDocument {
        AlgebraDocument {
            label,
            source,
            elements: alg.names().to_vec(),
            bottom: alg.bottom(),
            top: alg.top(),
            tables: alg.tables().clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use reslat::samples;

    #[test]
    fn round_trip_a7() {
        let d = AlgebraDocument::from_algebra(&samples::a7(), Some("A7".into()), None);
        let text = d.render();
        let back = AlgebraDocument::parse(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.render(), text);
        assert_eq!(back.to_algebra().unwrap(), samples::a7());
    }

    #[test]
    fn unknown_names_are_listed() {
        let text = AlgebraDocument::from_algebra(&samples::chain2(), None, None)
            .render()
            .replace("  0 | 0 0", "  0 | x y")
            .replace("top: 1", "top: z");
        let e = AlgebraDocument::parse(&text).unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("unknown element name(s): x, y, z"), "{msg}");
    }

    #[test]
    fn positions_are_reported() {
        let e = AlgebraDocument::parse("elements: 0 1\nbogus: 3\n").unwrap_err();
        assert_eq!((e.0[0].line, e.0[0].col), (0, 0));
        assert!(e
            .0
            .iter()
            .any(|p| p.line == 2 && p.col == 1 && p.message.contains("bogus")));
        let text = AlgebraDocument::from_algebra(&samples::chain2(), None, None).render();
        let e = AlgebraDocument::parse(&text.replace("  1 | 0 1\nprod", "  1 | 0\nprod")).unwrap_err();
        assert!(e.0[0].message.contains("has 1 entries"), "{e}");
    }
}
