//! Text formats: APX and TGF parsing, deterministic rendering of
//! frameworks and extension sets.
//!
//! Parsing is strict. Attack endpoints must be declared arguments;
//! nothing is created implicitly, so a typo in an input file fails loudly
//! instead of growing the framework.

use serde::Serialize;

use crate::af::{ExtensionSet, Framework};
use crate::error::{Error, Result};

/// Output encoding for frameworks and extension sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Json,
}

fn syntax(line: usize, text: &str, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
        text: text.trim().to_string(),
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses the APX fact format: `arg(NAME).` and `att(NAME,NAME).` lines,
/// one fact per line.
///
/// Names match `[A-Za-z0-9_]+`. Blank lines and lines starting with `%`
/// are ignored, whitespace around tokens is ignored, and attacks may
/// appear before the arguments they mention as long as every name is
/// declared somewhere in the file.
pub fn parse_apx(text: &str) -> Result<Framework> {
    let mut labels = Vec::new();
    let mut attacks = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let line_no = idx + 1;
        // Names contain no whitespace, so stripping all of it leaves the
        // fact's structure intact.
        let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(name) = compact
            .strip_prefix("arg(")
            .and_then(|rest| rest.strip_suffix(")."))
        {
            if !valid_name(name) {
                return Err(syntax(line_no, raw, "argument names match [A-Za-z0-9_]+"));
            }
            labels.push(name.to_string());
        } else if let Some(pair) = compact
            .strip_prefix("att(")
            .and_then(|rest| rest.strip_suffix(")."))
        {
            let (source, target) = pair
                .split_once(',')
                .ok_or_else(|| syntax(line_no, raw, "expected `att(source,target).`"))?;
            if !valid_name(source) || !valid_name(target) {
                return Err(syntax(line_no, raw, "argument names match [A-Za-z0-9_]+"));
            }
            attacks.push((source.to_string(), target.to_string()));
        } else {
            return Err(syntax(
                line_no,
                raw,
                "expected `arg(NAME).` or `att(NAME,NAME).`",
            ));
        }
    }
    Framework::new(labels, attacks)
}

/// Parses the TGF graph format: node lines `ID [LABEL]`, a lone `#`
/// separator, then edge lines `SRC DST` referencing node ids.
///
/// A node's id doubles as its label when no label is given. Blank lines
/// are ignored. A document without the separator is rejected before any
/// line is interpreted.
pub fn parse_tgf(text: &str) -> Result<Framework> {
    if !text.lines().any(|line| line.trim() == "#") {
        return Err(Error::MissingSeparator);
    }
    let mut ids = Vec::new();
    let mut labels = Vec::new();
    let mut attacks = Vec::new();
    let mut seen_separator = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let line_no = idx + 1;
        if line.is_empty() {
            continue;
        }
        if line == "#" {
            if seen_separator {
                return Err(syntax(line_no, raw, "repeated `#` separator"));
            }
            seen_separator = true;
            continue;
        }
        if !seen_separator {
            let (id, label) = match line.split_once(char::is_whitespace) {
                Some((id, label)) => (id, label.trim()),
                None => (line, ""),
            };
            if ids.contains(&id.to_string()) {
                return Err(Error::DuplicateLabel(id.to_string()));
            }
            ids.push(id.to_string());
            labels.push(if label.is_empty() { id } else { label }.to_string());
        } else {
            let mut tokens = line.split_whitespace();
            let (source, target) = match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(source), Some(target), None) => (source, target),
                _ => return Err(syntax(line_no, raw, "expected `source target`")),
            };
            let resolve = |id: &str| -> Result<String> {
                let pos = ids
                    .iter()
                    .position(|known| known == id)
                    .ok_or_else(|| Error::UnknownLabel(id.to_string()))?;
                Ok(labels[pos].clone())
            };
            attacks.push((resolve(source)?, resolve(target)?));
        }
    }
    Framework::new(labels, attacks)
}

#[derive(Serialize)]
struct FrameworkDoc<'a> {
    arguments: &'a [String],
    attacks: Vec<[&'a str; 2]>,
}

/// Renders a framework: APX facts for text, an object with "arguments"
/// and "attacks" keys for JSON. Deterministic: arguments in declaration
/// order, attacks in (source, target) index order.
pub fn render_af(f: &Framework, fmt: RenderFormat) -> String {
    match fmt {
        RenderFormat::Text => {
            let mut out = String::new();
            for label in f.labels() {
                out.push_str(&format!("arg({label}).\n"));
            }
            for &(source, target) in f.attacks() {
                out.push_str(&format!("att({},{}).\n", f.label(source), f.label(target)));
            }
            out
        }
        RenderFormat::Json => {
            let doc = FrameworkDoc {
                arguments: f.labels(),
                attacks: f
                    .attacks()
                    .iter()
                    .map(|&(s, t)| [f.label(s), f.label(t)])
                    .collect(),
            };
            serde_json::to_string(&doc).expect("framework serializes")
        }
    }
}

/// Renders a framework as TGF. Round-trips through `parse_tgf`.
pub fn render_tgf(f: &Framework) -> String {
    let mut out = String::new();
    for label in f.labels() {
        out.push_str(label);
        out.push('\n');
    }
    out.push_str("#\n");
    for &(source, target) in f.attacks() {
        out.push_str(&format!("{} {}\n", f.label(source), f.label(target)));
    }
    out
}

/// Renders extension sets in their canonical order: one brace-wrapped
/// extension per line for text, a list of label lists for JSON.
pub fn render_extensions(f: &Framework, sets: &ExtensionSet, fmt: RenderFormat) -> String {
    match fmt {
        RenderFormat::Text => {
            let mut out = String::new();
            for set in sets {
                let members: Vec<&str> = set.iter().map(|i| f.label(i)).collect();
                out.push_str(&format!("{{{}}}\n", members.join(",")));
            }
            out
        }
        RenderFormat::Json => {
            let doc: Vec<Vec<&str>> = sets
                .iter()
                .map(|set| set.iter().map(|i| f.label(i)).collect())
                .collect();
            serde_json::to_string(&doc).expect("extensions serialize")
        }
    }
}
