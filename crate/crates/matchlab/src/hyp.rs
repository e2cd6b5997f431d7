//! The `.hyp` text format for set families.
//!
//! Line 1 is the ground-set size `n` in decimal. Every following
//! non-empty line is one member as space-separated, strictly increasing
//! vertex indices. Lines starting with `#` are comments. Printing is
//! canonical and `parse(print(f))` reproduces `print(f)` byte for byte.

use crate::error::{Error, Result};
use crate::family::Family;
use crate::set::VertexSet;

/// Canonical text rendering of a family.
pub fn write_hyp(fam: &Family) -> String {
    let mut out = String::new();
    out.push_str(&fam.n().to_string());
    out.push('\n');
    for m in fam.members() {
        let line: Vec<String> = m.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the `.hyp` format. Uniformity is inferred: a non-empty family
/// whose members share one cardinality is marked uniform.
pub fn parse_hyp(text: &str) -> Result<Family> {
    let mut n: Option<u32> = None;
    let mut members: Vec<VertexSet> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if n.is_none() {
            let parsed = line.parse::<u32>().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: format!("expected ground-set size, got {line:?}"),
            })?;
            n = Some(parsed);
            continue;
        }
        let ground = n.unwrap();
        let mut verts: Vec<u32> = Vec::new();
        for tok in line.split_whitespace() {
            let v = tok.parse::<u32>().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: format!("bad vertex index {tok:?}"),
            })?;
            if let Some(&last) = verts.last() {
                if v <= last {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: format!("vertex indices must be strictly increasing, got {v} after {last}"),
                    });
                }
            }
            verts.push(v);
        }
        members.push(VertexSet::try_from_slice(&verts, ground).map_err(|e| Error::Parse {
            line: idx + 1,
            msg: e.to_string(),
        })?);
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing ground-set size line".into(),
    })?;
    let uniform = infer_uniformity(&members);
    Family::new(n, uniform, members)
}

fn infer_uniformity(members: &[VertexSet]) -> Option<u32> {
    let first = members.first()?.len();
    members.iter().all(|m| m.len() == first).then_some(first)
}

pub fn read_hyp_file(path: &std::path::Path) -> Result<Family> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
    parse_hyp(&text)
}

pub fn write_hyp_file(path: &std::path::Path, fam: &Family) -> Result<()> {
    std::fs::write(path, write_hyp(fam)).map_err(|e| Error::Io(e.to_string()))
}
