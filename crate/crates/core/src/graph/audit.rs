//! Checks stated graph claims against derived edge colors.
//!
//! Claims file, one claim per line (`#` starts a comment line):
//!
//! ```text
//! claim <tag> mono <red|green|any> <v1> <v2> <v3>
//! claim <tag> none [red|green]
//! claim <tag> quad <red|green> <v1> <v2> <v3> <v4>
//! ```
//!
//! `none` without a color means "no monochromatic triangle of either color".
//! `quad` records a "monochromatic quadrangle" statement; a four-cycle says
//! nothing about joint commutation, so such claims are always reported as
//! unverifiable, with the six derived edge colors as evidence.

use std::fmt;

use serde::Serialize;

use super::{monochromatic_triangles, ColoredGraph};
use crate::catalog::{canonical_name, EdgeColor};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("claims line {line}: {message}")]
pub struct ClaimsError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClaimKind {
    /// `color == None` accepts either color.
    Mono { color: Option<EdgeColor>, vertices: [String; 3] },
    NoMono { color: Option<EdgeColor> },
    Quad { color: EdgeColor, vertices: [String; 4] },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub tag: String,
    pub kind: ClaimKind,
}

fn color_word(color: Option<EdgeColor>) -> &'static str {
    color.map(EdgeColor::as_str).unwrap_or("")
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClaimKind::Mono { color, vertices } => {
                let c = color.map(|c| format!(" {c}")).unwrap_or_default();
                write!(f, "triangle ({}) is monochromatic{c}", vertices.join(", "))
            }
            ClaimKind::NoMono { color: None } => write!(f, "graph has no monochromatic triangle"),
            ClaimKind::NoMono { color } => {
                write!(f, "graph has no monochromatic {} triangle", color_word(*color))
            }
            ClaimKind::Quad { color, vertices } => {
                write!(f, "quadrangle ({}) is monochromatic {color}", vertices.join(", "))
            }
        }
    }
}

pub fn parse_claims(text: &str) -> Result<Vec<Claim>, ClaimsError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let err = |message: String| ClaimsError { line, message };
        let fields: Vec<&str> = t.split_whitespace().collect();
        if fields.len() < 3 || fields[0] != "claim" {
            return Err(err("expected `claim <tag> mono|none|quad ...`".into()));
        }
        let tag = fields[1].to_string();
        let names = |vs: &[&str]| -> Result<Vec<String>, ClaimsError> {
            let vs: Vec<String> = vs.iter().map(|v| canonical_name(v)).collect();
            for (i, v) in vs.iter().enumerate() {
                if vs[..i].contains(v) {
                    return Err(err(format!("vertex `{v}` repeated")));
                }
            }
            Ok(vs)
        };
        let kind = match (fields[2], &fields[3..]) {
            ("mono", [color, a, b, c]) => {
                let color = match *color {
                    "any" => None,
                    other => Some(
                        EdgeColor::parse(other).ok_or_else(|| err(format!("unknown color `{other}`")))?,
                    ),
                };
                let v = names(&[a, b, c])?;
                ClaimKind::Mono {
                    color,
                    vertices: [v[0].clone(), v[1].clone(), v[2].clone()],
                }
            }
            ("none", []) => ClaimKind::NoMono { color: None },
            ("none", [color]) => ClaimKind::NoMono {
                color: Some(EdgeColor::parse(color).ok_or_else(|| err(format!("unknown color `{color}`")))?),
            },
            ("quad", [color, a, b, c, d]) => {
                let color = EdgeColor::parse(color).ok_or_else(|| err(format!("unknown color `{color}`")))?;
                let v = names(&[a, b, c, d])?;
                ClaimKind::Quad {
                    color,
                    vertices: [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()],
                }
            }
            (kw, _) => return Err(err(format!("malformed `{kw}` claim"))),
        };
        out.push(Claim { tag, kind });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Confirmed,
    Refuted,
    Unverifiable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
            Verdict::Unverifiable => "unverifiable",
        })
    }
}

/// One audited claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub source: String,
    pub claim: String,
    pub derived: String,
    pub verdict: Verdict,
    /// Derived edge colors supporting the verdict.
    pub evidence: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub claims: Vec<Discrepancy>,
}

impl DiscrepancyReport {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.claims.iter().filter(|c| c.verdict == verdict).count()
    }

    pub fn refuted(&self) -> impl Iterator<Item = &Discrepancy> {
        self.claims.iter().filter(|c| c.verdict == Verdict::Refuted)
    }
}

fn edge_line(g: &ColoredGraph, i: usize, j: usize) -> String {
    let e = g.edge(i, j);
    format!("({}, {}) {}: {}", g.vertices()[i], g.vertices()[j], e.color, e.citation)
}

fn resolve_all(g: &ColoredGraph, vertices: &[String]) -> Result<Vec<usize>, String> {
    vertices
        .iter()
        .map(|v| g.index_of(v).ok_or_else(|| format!("vertex `{v}` is not in the graph")))
        .collect()
}

fn pairs(idx: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            out.push((idx[a], idx[b]));
        }
    }
    out
}

fn audit_one(g: &ColoredGraph, claim: &Claim) -> Discrepancy {
    let mut d = Discrepancy {
        source: claim.tag.clone(),
        claim: claim.kind.to_string(),
        derived: String::new(),
        verdict: Verdict::Unverifiable,
        evidence: Vec::new(),
    };
    match &claim.kind {
        ClaimKind::Mono { color, vertices } => {
            let idx = match resolve_all(g, vertices) {
                Ok(idx) => idx,
                Err(msg) => {
                    d.derived = msg;
                    return d;
                }
            };
            let edges = pairs(&idx);
            let colors: Vec<EdgeColor> = edges.iter().map(|&(a, b)| g.color(a, b)).collect();
            let mono = colors.iter().all(|c| *c == colors[0]);
            d.derived = if mono {
                format!("triangle is monochromatic {}", colors[0])
            } else {
                let reds = colors.iter().filter(|c| **c == EdgeColor::Red).count();
                format!("triangle is bi-colored ({reds} red, {} green)", 3 - reds)
            };
            let holds = mono && color.is_none_or(|c| c == colors[0]);
            d.verdict = if holds { Verdict::Confirmed } else { Verdict::Refuted };
            d.evidence = edges
                .iter()
                .filter(|&&(a, b)| holds || color.is_none() || Some(g.color(a, b)) != *color)
                .map(|&(a, b)| edge_line(g, a, b))
                .collect();
            if !holds && d.evidence.is_empty() {
                d.evidence = edges.iter().map(|&(a, b)| edge_line(g, a, b)).collect();
            }
        }
        ClaimKind::NoMono { color } => {
            let t = monochromatic_triangles(g);
            let mut offending: Vec<(EdgeColor, [usize; 3])> = Vec::new();
            if *color != Some(EdgeColor::Green) {
                offending.extend(t.red.iter().map(|tr| (EdgeColor::Red, *tr)));
            }
            if *color != Some(EdgeColor::Red) {
                offending.extend(t.green.iter().map(|tr| (EdgeColor::Green, *tr)));
            }
            d.derived = format!(
                "{} red and {} green monochromatic triangles",
                t.red.len(),
                t.green.len()
            );
            d.verdict = if offending.is_empty() {
                Verdict::Confirmed
            } else {
                Verdict::Refuted
            };
            d.evidence = offending
                .iter()
                .map(|(c, tr)| {
                    let edges: Vec<String> = pairs(tr).iter().map(|&(a, b)| edge_line(g, a, b)).collect();
                    format!(
                        "monochromatic {c} triangle ({}): {}",
                        tr.map(|i| g.vertices()[i].as_str()).join(", "),
                        edges.join("; ")
                    )
                })
                .collect();
        }
        ClaimKind::Quad { color, vertices } => {
            let idx = match resolve_all(g, vertices) {
                Ok(idx) => idx,
                Err(msg) => {
                    d.derived = msg;
                    return d;
                }
            };
            let edges = pairs(&idx);
            let clique = edges.iter().all(|&(a, b)| g.color(a, b) == *color);
            d.derived = format!(
                "the four vertices {} a {color} 4-clique; a quadrangle alone does not establish joint commutation",
                if clique { "form" } else { "do not form" }
            );
            d.evidence = edges.iter().map(|&(a, b)| edge_line(g, a, b)).collect();
        }
    }
    d
}

/// Audits every claim; the report keeps the input order and drops nothing.
pub fn audit(g: &ColoredGraph, claims: &[Claim]) -> DiscrepancyReport {
    DiscrepancyReport {
        claims: claims.iter().map(|c| audit_one(g, c)).collect(),
    }
}
