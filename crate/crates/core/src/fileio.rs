//! Text formats for complexes, chains, and polynomials.
//!
//! - complex: one facet per line, whitespace-separated vertex tokens; `#`
//!   starts a comment. Base vertices are plain integers; barycenters print as
//!   `(v1.v4)`; primed copies carry a trailing apostrophe.
//! - chain: one term per line, `<coeff> v0 v1 ... vk`; the empty simplex is
//!   written `.`.
//! - polynomial: one monomial per line, `<coeff> : v_i v_j ...` with the
//!   coefficient taken mod 2^m.
//!
//! All writers emit canonical (sorted) order so output is byte-stable, and
//! every format round-trips exactly.

use crate::chain::Chain;
use crate::error::Error;
use crate::phase::{CochainCircuitDescriptor, PhasePolynomial};
use crate::simplex::{Simplex, SimplicialComplex, Vertex};
use crate::Result;

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_vertex(token: &str) -> Result<Vertex> {
    token.parse()
}

/// Parse a whitespace-separated vertex list; `.` (or nothing) is the empty
/// simplex.
pub fn parse_simplex(text: &str) -> Result<Simplex> {
    let body = text.trim();
    if body.is_empty() || body == "." {
        return Ok(Simplex::empty());
    }
    let verts: Vec<Vertex> = body.split_whitespace().map(parse_vertex).collect::<Result<_>>()?;
    Simplex::new(verts)
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let s =
            parse_simplex(line).map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        if s.is_empty() {
            return Err(Error::Parse(format!("line {}: empty facet", lineno + 1)));
        }
        facets.push(s);
    }
    SimplicialComplex::from_facets(&facets)
}

/// Facets only, one per line, canonical order, trailing newline.
pub fn write_complex(complex: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in complex.facets() {
        out.push_str(&f.to_string());
        out.push('\n');
    }
    out
}

/// Parse a chain file. The dimension is inferred from the terms, so at least
/// one term is required; use `Chain::zero` directly for empty chains.
pub fn parse_chain(text: &str, modulus: u32) -> Result<Chain> {
    let mut terms: Vec<(Simplex, i64)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.splitn(2, char::is_whitespace);
        let coeff: i64 = parts
            .next()
            .unwrap_or("")
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad coefficient", lineno + 1)))?;
        let simplex = parse_simplex(parts.next().unwrap_or("."))
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        terms.push((simplex, coeff));
    }
    let Some(dim) = terms.iter().map(|(s, _)| s.dim()).max() else {
        return Err(Error::MalformedInput("empty chain file: cannot infer dimension".into()));
    };
    if terms.iter().any(|(s, _)| s.dim() != dim) {
        return Err(Error::MalformedInput("mixed-dimension chain file".into()));
    }
    Chain::from_terms(dim, modulus, terms)
}

pub fn write_chain(chain: &Chain) -> String {
    let mut out = String::new();
    for (s, c) in chain.terms() {
        out.push_str(&format!("{c} {s}\n"));
    }
    out
}

/// Parse a phase polynomial at precision `m`. Lines read
/// `<coeff> : v_i v_j ...`; the constant monomial uses `.` for its support.
pub fn parse_poly(text: &str, m: u32) -> Result<PhasePolynomial> {
    let mut poly = PhasePolynomial::zero(m)?;
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let Some((coeff_txt, support_txt)) = line.split_once(':') else {
            return Err(Error::Parse(format!(
                "line {}: expected `<coeff> : <vertices>`",
                lineno + 1
            )));
        };
        let coeff: i64 = coeff_txt
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: bad coefficient", lineno + 1)))?;
        let support = parse_simplex(support_txt)
            .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))?;
        poly.add_coeff(support, coeff);
    }
    Ok(poly)
}

pub fn write_poly(poly: &PhasePolynomial) -> String {
    let mut out = String::new();
    for (s, c) in poly.terms() {
        out.push_str(&format!("{c} : {s}\n"));
    }
    out
}

/// Serialize a circuit descriptor: a `precision` line, a `constant` line,
/// then one `[chain k]` section per layer (lowest degree first) holding that
/// layer's mod-2 chain in the chain format.
pub fn write_descriptor(desc: &CochainCircuitDescriptor) -> String {
    let mut out = format!("precision {}\nconstant {}\n", desc.m, desc.constant);
    for (k, chain) in desc.chains.iter().enumerate() {
        out.push_str(&format!("[chain {k}]\n"));
        out.push_str(&write_chain(chain));
    }
    out
}

pub fn parse_descriptor(text: &str) -> Result<CochainCircuitDescriptor> {
    let mut m: Option<u32> = None;
    let mut constant: Option<u32> = None;
    // (declared degree, term lines) per section, in file order.
    let mut sections: Vec<(i64, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let fail = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
        if let Some(rest) = line.strip_prefix("precision") {
            m = Some(rest.trim().parse().map_err(|_| fail("bad precision"))?);
        } else if let Some(rest) = line.strip_prefix("constant") {
            constant = Some(rest.trim().parse().map_err(|_| fail("bad constant"))?);
        } else if let Some(rest) = line.strip_prefix("[chain") {
            let k: i64 =
                rest.trim_end_matches(']').trim().parse().map_err(|_| fail("bad chain header"))?;
            if k != sections.len() as i64 {
                return Err(fail("chain sections must appear as [chain 0], [chain 1], ..."));
            }
            sections.push((k, String::new()));
        } else {
            let Some((_, body)) = sections.last_mut() else {
                return Err(fail("chain term before any [chain k] header"));
            };
            body.push_str(line);
            body.push('\n');
        }
    }
    let m = m.ok_or_else(|| Error::MalformedInput("missing precision line".into()))?;
    let constant = constant.ok_or_else(|| Error::MalformedInput("missing constant line".into()))?;
    let mut chains = Vec::with_capacity(sections.len());
    for (k, body) in sections {
        let chain = if body.is_empty() { Chain::zero(k, 2) } else { parse_chain(&body, 2)? };
        if chain.dim() != k {
            return Err(Error::MalformedInput(format!(
                "[chain {k}] holds terms of dimension {}",
                chain.dim()
            )));
        }
        chains.push(chain);
    }
    Ok(CochainCircuitDescriptor { m, chains, constant })
}
