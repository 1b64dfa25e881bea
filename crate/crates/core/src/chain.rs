//! Simplicial chains with integral or mod-n coefficients.
//!
//! A chain of dimension k is a finite formal sum of k-simplices. Modulus 0
//! means integral coefficients; modulus n > 0 stores coefficients in 0..n.
//! The boundary uses the reduced convention: the boundary of a 0-chain is its
//! coefficient sum placed on the empty simplex (the (−1)-dimensional slot).
//! Homology routines that want the unreduced convention simply ignore that
//! slot; see `homology`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::simplex::Simplex;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chain {
    dim: i64,
    /// 0 for integral coefficients, n for coefficients mod n.
    modulus: u32,
    terms: BTreeMap<Simplex, i64>,
}

impl Chain {
    pub fn zero(dim: i64, modulus: u32) -> Self {
        Chain { dim, modulus, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(dim: i64, modulus: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Simplex, i64)>,
    {
        let mut c = Chain::zero(dim, modulus);
        for (s, coeff) in terms {
            c.add_term(s, coeff)?;
        }
        Ok(c)
    }

    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, i64)> {
        self.terms.iter().map(|(s, &c)| (s, c))
    }

    pub fn coeff(&self, s: &Simplex) -> i64 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    pub fn support(&self) -> Vec<&Simplex> {
        self.terms.keys().collect()
    }

    fn normalize(modulus: u32, coeff: i64) -> i64 {
        if modulus == 0 {
            coeff
        } else {
            coeff.rem_euclid(modulus as i64)
        }
    }

    /// Add `coeff`·`s`, normalizing and pruning zeros. Errors on a dimension
    /// mismatch.
    pub fn add_term(&mut self, s: Simplex, coeff: i64) -> Result<()> {
        if s.dim() != self.dim {
            return Err(Error::ContractViolation(format!(
                "term {s} has dimension {}, chain has dimension {}",
                s.dim(),
                self.dim
            )));
        }
        let new = Self::normalize(self.modulus, self.coeff(&s) + coeff);
        if new == 0 {
            self.terms.remove(&s);
        } else {
            self.terms.insert(s, new);
        }
        Ok(())
    }

    pub fn add(&self, other: &Chain) -> Result<Chain> {
        if self.dim != other.dim || self.modulus != other.modulus {
            return Err(Error::ContractViolation(format!(
                "chain mismatch: dim {} mod {} vs dim {} mod {}",
                self.dim, self.modulus, other.dim, other.modulus
            )));
        }
        let mut out = self.clone();
        for (s, c) in other.terms() {
            out.add_term(s.clone(), c)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Chain {
        let mut out = Chain::zero(self.dim, self.modulus);
        for (s, c) in self.terms() {
            out.add_term(s.clone(), -c).expect("same dimension");
        }
        out
    }

    pub fn sub(&self, other: &Chain) -> Result<Chain> {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: i64) -> Chain {
        let mut out = Chain::zero(self.dim, self.modulus);
        for (s, c) in self.terms() {
            out.add_term(s.clone(), c * factor).expect("same dimension");
        }
        out
    }

    /// Reinterpret with coefficients mod n (n = 0 lifts representatives as
    /// integers).
    pub fn reduce(&self, modulus: u32) -> Chain {
        let mut out = Chain::zero(self.dim, modulus);
        for (s, c) in self.terms() {
            out.add_term(s.clone(), c).expect("same dimension");
        }
        out
    }

    pub fn mod2(&self) -> Chain {
        self.reduce(2)
    }

    /// Reduced boundary. ∂(v₀ < ⋯ < v_k) = Σⱼ (−1)ʲ (omit vⱼ); for a 0-chain
    /// the result is the coefficient sum on the empty simplex. Boundary of a
    /// (−1)-chain is zero (one dimension further down).
    pub fn boundary(&self) -> Chain {
        let mut out = Chain::zero(self.dim - 1, self.modulus);
        for (s, c) in self.terms() {
            for j in 0..s.len() {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                out.add_term(s.face_omitting(j), c * sign).expect("one lower dimension");
            }
        }
        out
    }

    /// Mod-2 pairing with a set of simplices (used to evidence nontriviality
    /// against a certifying cocycle).
    pub fn dot_mod2(&self, cocycle_support: &[Simplex]) -> u8 {
        let mut acc = 0i64;
        for s in cocycle_support {
            acc += self.coeff(s);
        }
        (acc.rem_euclid(2)) as u8
    }
}

impl fmt::Display for Chain {
    /// One term per line: `<coeff> v0 v1 ... vk`; empty simplex prints a `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let lines: Vec<String> = self.terms().map(|(s, c)| format!("{c} {s}")).collect();
        write!(f, "{}", lines.join("\n"))
    }
}
