use serde::{Deserialize, Serialize};

use crate::block::Block;
use crate::error::{Error, Result};
use crate::family::{infer_universe, Covering};
use crate::inversion::DegreeTable;
use crate::universe::Universe;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses a covering from its text form, or from the JSON form when the
/// input starts with '{'.
///
/// Text form: an optional leading `# universe: e1 e2 ...` header fixing
/// the element order, then one block per nonblank non-comment line as
/// whitespace-separated element names. Without the header, the universe
/// is inferred in first-appearance order.
pub fn parse_covering(text: &str) -> Result<Covering> {
    if text.trim_start().starts_with('{') {
        return parse_covering_json(text);
    }
    let mut universe: Option<Universe> = None;
    let mut raw_blocks: Vec<Vec<String>> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(names) = comment.trim_start().strip_prefix("universe:") {
                if universe.is_some() {
                    return Err(parse_err(lineno, "duplicate universe header"));
                }
                if !raw_blocks.is_empty() {
                    return Err(parse_err(lineno, "universe header must precede the blocks"));
                }
                universe = Some(Universe::new(names.split_whitespace())?);
            }
            continue;
        }
        raw_blocks.push(line.split_whitespace().map(str::to_owned).collect());
    }
    build_from_raw(universe, raw_blocks)
}

#[derive(Serialize, Deserialize)]
struct CoveringDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    universe: Option<Vec<String>>,
    blocks: Vec<Vec<String>>,
}

pub fn parse_covering_json(text: &str) -> Result<Covering> {
    let doc: CoveringDoc =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    let universe = doc.universe.map(Universe::new).transpose()?;
    build_from_raw(universe, doc.blocks)
}

fn build_from_raw(universe: Option<Universe>, raw_blocks: Vec<Vec<String>>) -> Result<Covering> {
    if raw_blocks.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if let Some(index) = raw_blocks.iter().position(Vec::is_empty) {
        return Err(Error::EmptyBlock { index });
    }
    let universe = match universe {
        Some(u) => u,
        None => infer_universe(&raw_blocks)?,
    };
    Covering::from_names(universe, raw_blocks)
}

/// Canonical text rendering: universe header plus one block per line, in
/// canonical block order with members in universe order.
pub fn render_covering(c: &Covering) -> String {
    let mut out = format!("# universe: {}\n", c.universe().elements().join(" "));
    for &b in c.blocks() {
        out.push_str(&c.universe().block_names(b).join(" "));
        out.push('\n');
    }
    out
}

pub fn render_covering_json(c: &Covering) -> String {
    let doc = CoveringDoc {
        universe: Some(c.universe().elements().to_vec()),
        blocks: c
            .blocks()
            .iter()
            .map(|&b| c.universe().block_names(b))
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("plain strings always serialize");
    out.push('\n');
    out
}

/// Parses a degree table. Both headers are mandatory: `# universe:` fixes
/// the element order and `# window:` declares the admitted cardinalities.
/// Each entry line reads `e_i e_j ... : value`.
pub fn parse_degree_table(text: &str) -> Result<DegreeTable> {
    let mut universe: Option<Universe> = None;
    let mut window: Option<Vec<usize>> = None;
    let mut raw_entries: Vec<(usize, Vec<String>, u64)> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim_start();
            if let Some(names) = comment.strip_prefix("universe:") {
                if universe.is_some() {
                    return Err(parse_err(lineno, "duplicate universe header"));
                }
                if !raw_entries.is_empty() {
                    return Err(parse_err(
                        lineno,
                        "universe header must precede the entries",
                    ));
                }
                universe = Some(Universe::new(names.split_whitespace())?);
            } else if let Some(sizes) = comment.strip_prefix("window:") {
                if window.is_some() {
                    return Err(parse_err(lineno, "duplicate window header"));
                }
                if !raw_entries.is_empty() {
                    return Err(parse_err(lineno, "window header must precede the entries"));
                }
                let parsed = sizes
                    .split_whitespace()
                    .map(|tok| {
                        tok.parse::<usize>()
                            .map_err(|_| parse_err(lineno, format!("bad window size {tok:?}")))
                    })
                    .collect::<Result<Vec<usize>>>()?;
                window = Some(parsed);
            }
            continue;
        }
        let (names_part, value_part) = match line.split_once(':') {
            Some(parts) => parts,
            None => return Err(parse_err(lineno, "entry line must read 'names : value'")),
        };
        if value_part.contains(':') {
            return Err(parse_err(lineno, "entry line has more than one ':'"));
        }
        let value = value_part
            .trim()
            .parse::<u64>()
            .map_err(|_| parse_err(lineno, format!("bad degree value {:?}", value_part.trim())))?;
        let names = names_part.split_whitespace().map(str::to_owned).collect();
        raw_entries.push((lineno, names, value));
    }
    let universe =
        universe.ok_or_else(|| parse_err(1, "missing '# universe: e1 e2 ...' header"))?;
    let window = window.ok_or_else(|| parse_err(1, "missing '# window: 1 2 ...' header"))?;
    let mut entries = Vec::with_capacity(raw_entries.len());
    for (_, names, value) in raw_entries {
        let block = universe.block_from_names(&names)?;
        entries.push((block, value));
    }
    DegreeTable::from_entries(universe, &window, entries)
}

/// Canonical text rendering of a degree table: both headers, then one
/// entry per line in canonical subset order. The empty set renders as
/// a bare `: value` line.
pub fn render_degree_table(t: &DegreeTable) -> String {
    let mut out = format!("# universe: {}\n", t.universe().elements().join(" "));
    out.push_str("# window:");
    for w in t.window() {
        out.push_str(&format!(" {w}"));
    }
    out.push('\n');
    for &(b, v) in t.entries() {
        if b.is_empty() {
            out.push_str(&format!(": {v}\n"));
        } else {
            out.push_str(&format!(
                "{} : {v}\n",
                t.universe().block_names(b).join(" ")
            ));
        }
    }
    out
}

/// Space-separated member names of one block, for single-set rendering.
pub fn render_block(universe: &Universe, b: Block) -> String {
    universe.block_names(b).join(" ")
}
