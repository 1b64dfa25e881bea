//! Phase polynomials: diagonal circuits as multilinear polynomials over
//! ℤ_{2^m}.
//!
//! A diagonal circuit on spin variables x_v ∈ {0,1} is recorded by the
//! polynomial p with p(x) = Σ_A c_A Π_{v∈A} x_v; the operator multiplies a
//! basis state by exp(πi·p(x)/2^{m−1}), so the coefficient π := 2^{m−1}
//! is a half turn. Monomials are keyed by their vertex-set simplex (the
//! empty simplex is the global phase). Composition of diagonal circuits is
//! polynomial addition, so exact polynomial equality is operator equality.
//!
//! The GDS dual disentangler is Σ_σ π·x_σ over all simplices: evaluating on
//! a down-set D gives π·χ(L[D]), the amplitude (−1)^{χ(L[D])}.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::chain::Chain;
use crate::cochain::GroupCochain;
use crate::error::Error;
use crate::simplex::{Simplex, SimplicialComplex, Vertex};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhasePolynomial {
    /// Precision: coefficients live in ℤ_{2^m}; π = 2^{m−1} is a half turn.
    m: u32,
    terms: BTreeMap<Simplex, u32>,
}

impl PhasePolynomial {
    pub fn zero(m: u32) -> Result<Self> {
        if m == 0 || m > 30 {
            return Err(Error::Precision(format!("precision m = {m} out of range 1..=30")));
        }
        Ok(PhasePolynomial { m, terms: BTreeMap::new() })
    }

    pub fn precision(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        1 << self.m
    }

    /// Half turn: the coefficient realizing a (−1) phase.
    pub fn pi(&self) -> u32 {
        1 << (self.m - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Simplex, u32)> {
        self.terms.iter().map(|(s, &c)| (s, c))
    }

    pub fn coeff(&self, s: &Simplex) -> u32 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    /// `Some(c)` if the polynomial is the constant c (including 0).
    pub fn constant_value(&self) -> Option<u32> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&Simplex::empty()).copied(),
            _ => None,
        }
    }

    pub fn add_coeff(&mut self, s: Simplex, c: i64) {
        let cur = self.coeff(&s) as i64;
        let new = (cur + c).rem_euclid(self.modulus() as i64) as u32;
        if new == 0 {
            self.terms.remove(&s);
        } else {
            self.terms.insert(s, new);
        }
    }

    pub fn add_assign(&mut self, other: &PhasePolynomial) -> Result<()> {
        if self.m != other.m {
            return Err(Error::Precision(format!(
                "precision mismatch: m = {} vs {}",
                self.m, other.m
            )));
        }
        for (s, c) in other.terms() {
            self.add_coeff(s.clone(), c as i64);
        }
        Ok(())
    }

    pub fn sub_assign(&mut self, other: &PhasePolynomial) -> Result<()> {
        if self.m != other.m {
            return Err(Error::Precision(format!(
                "precision mismatch: m = {} vs {}",
                self.m, other.m
            )));
        }
        for (s, c) in other.terms() {
            self.add_coeff(s.clone(), -(c as i64));
        }
        Ok(())
    }

    pub fn add(&self, other: &PhasePolynomial) -> Result<PhasePolynomial> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn neg(&self) -> PhasePolynomial {
        let mut out = PhasePolynomial { m: self.m, terms: BTreeMap::new() };
        for (s, c) in self.terms() {
            out.add_coeff(s.clone(), -(c as i64));
        }
        out
    }

    pub fn sub(&self, other: &PhasePolynomial) -> Result<PhasePolynomial> {
        self.add(&other.neg())
    }

    /// Re-express with precision `new_m ≥ m` (coefficients scale by
    /// 2^{new_m − m}, preserving the realized phases).
    pub fn lift_precision(&self, new_m: u32) -> Result<PhasePolynomial> {
        if new_m < self.m {
            return Err(Error::Precision(format!(
                "cannot lower precision from {} to {new_m}",
                self.m
            )));
        }
        let factor = 1i64 << (new_m - self.m);
        let mut out = PhasePolynomial::zero(new_m)?;
        for (s, c) in self.terms() {
            out.add_coeff(s.clone(), c as i64 * factor);
        }
        Ok(out)
    }

    /// Value mod 2^m on the configuration with down-set `down`.
    pub fn evaluate(&self, down: &BTreeSet<Vertex>) -> u32 {
        let mut acc: u32 = 0;
        for (s, c) in self.terms() {
            if s.vertices().iter().all(|v| down.contains(v)) {
                acc = (acc + c) % self.modulus();
            }
        }
        acc
    }

    /// The multi-controlled Z gate on the given vertices: the single
    /// monomial π·x_{v₀}⋯x_{v_k}.
    pub fn ckz(s: &Simplex, m: u32) -> Result<PhasePolynomial> {
        if s.is_empty() {
            return Err(Error::MalformedInput("ckz needs at least one vertex".into()));
        }
        let mut p = PhasePolynomial::zero(m)?;
        p.add_coeff(s.clone(), p.pi() as i64);
        Ok(p)
    }

    /// Substitute x_v ↦ 1 − x_v for every variable (conjugation by the
    /// global spin flip; 1 − x is the multilinear form of NOT, so this is
    /// exact at every precision, not just mod 2).
    pub fn flip_substitute(&self) -> PhasePolynomial {
        let mut out = PhasePolynomial { m: self.m, terms: BTreeMap::new() };
        for (s, c) in self.terms() {
            for (sub, parity) in signed_subsets_of(s) {
                out.add_coeff(sub, if parity { -(c as i64) } else { c as i64 });
            }
        }
        out
    }

    /// flip(p) − p: the phase of X̄U X̄·U⁻¹ as a polynomial. Zero iff the
    /// circuit is flip-symmetric; a constant iff symmetric up to global
    /// phase.
    pub fn flip_commutator(&self) -> PhasePolynomial {
        let mut out = self.flip_substitute();
        for (s, c) in self.terms() {
            out.add_coeff(s.clone(), -(c as i64));
        }
        out
    }
}

/// Each subset of a simplex paired with its size parity (true = odd), the
/// sign data of the substitution x ↦ 1 − x.
fn signed_subsets_of(s: &Simplex) -> Vec<(Simplex, bool)> {
    let verts = s.vertices();
    let n = verts.len();
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        let vs: Vec<Vertex> =
            (0..n).filter(|i| mask >> i & 1 == 1).map(|i| verts[i].clone()).collect();
        out.push((
            Simplex::new(vs).expect("subset of distinct vertices"),
            mask.count_ones() % 2 == 1,
        ));
    }
    out
}

/// The GDS dual disentangler on a complex: π·x_σ for every simplex σ.
pub fn gds_disentangler(complex: &SimplicialComplex, m: u32) -> Result<PhasePolynomial> {
    let mut p = PhasePolynomial::zero(m)?;
    let pi = p.pi() as i64;
    for s in complex.simplices() {
        p.add_coeff(s.clone(), pi);
    }
    Ok(p)
}

fn gate_table_to_poly(f: Vec<i64>, vars: &Simplex, m: u32) -> Result<PhasePolynomial> {
    let n = vars.len();
    debug_assert_eq!(f.len(), 1 << n);
    let mut f = f;
    // Möbius transform over subsets: a_S = Σ_{T⊆S} (−1)^{|S∖T|} f(T)
    for i in 0..n {
        for mask in 0..f.len() {
            if mask >> i & 1 == 1 {
                f[mask] -= f[mask ^ (1 << i)];
            }
        }
    }
    let mut p = PhasePolynomial::zero(m)?;
    for (mask, &coeff) in f.iter().enumerate() {
        if coeff.rem_euclid(1 << m) != 0 {
            let vs: Vec<Vertex> =
                (0..n).filter(|i| mask >> i & 1 == 1).map(|i| vars.vertices()[i].clone()).collect();
            p.add_coeff(Simplex::new(vs)?, coeff);
        }
    }
    Ok(p)
}

fn check_precision(w: &GroupCochain, m: u32) -> Result<i64> {
    let big = 1u64 << m;
    if !big.is_multiple_of(w.modulus() as u64) {
        return Err(Error::Precision(format!(
            "cochain modulus {} does not divide 2^{m}",
            w.modulus()
        )));
    }
    Ok((big / w.modulus() as u64) as i64)
}

/// The standard cochain gate on an oriented simplex: the diagonal circuit
/// with phase coeff·w(e, x₀, …, x_k), where the group arguments follow the
/// canonical vertex order. Needs |σ| + 1 = arity(w); the empty simplex with
/// an arity-1 cochain gives the constant gate w(e).
pub fn cochain_gate_poly(
    w: &GroupCochain,
    simplex: &Simplex,
    coeff: i64,
    m: u32,
) -> Result<PhasePolynomial> {
    if simplex.len() + 1 != w.arity() {
        return Err(Error::ContractViolation(format!(
            "gate on {} vertices needs cochain arity {}, got {}",
            simplex.len(),
            simplex.len() + 1,
            w.arity()
        )));
    }
    let scale = check_precision(w, m)?;
    let n = simplex.len();
    let mut f = vec![0i64; 1 << n];
    let mut args = vec![false; n + 1];
    for (mask, slot) in f.iter_mut().enumerate() {
        args[0] = false; // identity in the leading slot
        for i in 0..n {
            args[i + 1] = mask >> i & 1 == 1;
        }
        *slot = coeff * w.value(&args) as i64 * scale;
    }
    gate_table_to_poly(f, simplex, m)
}

/// The translated gate: phase coeff·w(x₀, …, x_k) with the cochain table
/// applied directly to the simplex spins (no identity slot). Needs
/// |σ| = arity(w). Homogeneity of w makes this gate flip-symmetric.
pub fn translated_gate_poly(
    w: &GroupCochain,
    simplex: &Simplex,
    coeff: i64,
    m: u32,
) -> Result<PhasePolynomial> {
    if simplex.len() != w.arity() {
        return Err(Error::ContractViolation(format!(
            "translated gate on {} vertices needs cochain arity {}, got {}",
            simplex.len(),
            simplex.len(),
            w.arity()
        )));
    }
    let scale = check_precision(w, m)?;
    let n = simplex.len();
    let mut f = vec![0i64; 1 << n];
    let mut args = vec![false; n];
    for (mask, slot) in f.iter_mut().enumerate() {
        for (i, a) in args.iter_mut().enumerate() {
            *a = mask >> i & 1 == 1;
        }
        *slot = coeff * w.value(&args) as i64 * scale;
    }
    gate_table_to_poly(f, simplex, m)
}

/// The cochain circuit of w-gates along a chain: Σ over terms of the gate on
/// the simplex with the term's coefficient.
pub fn cochain_circuit_poly(w: &GroupCochain, chain: &Chain, m: u32) -> Result<PhasePolynomial> {
    let mut p = PhasePolynomial::zero(m)?;
    for (s, c) in chain.terms() {
        p.add_assign(&cochain_gate_poly(w, s, c, m)?)?;
    }
    Ok(p)
}

/// The circuit of translated gates along a chain.
pub fn translated_circuit_poly(w: &GroupCochain, chain: &Chain, m: u32) -> Result<PhasePolynomial> {
    let mut p = PhasePolynomial::zero(m)?;
    for (s, c) in chain.terms() {
        p.add_assign(&translated_gate_poly(w, s, c, m)?)?;
    }
    Ok(p)
}

/// A phase polynomial re-expressed as cochain gate layers: for each k a
/// mod-2 chain of ω_k gate locations, plus a global phase. Recomposing
/// reproduces the input exactly.
#[derive(Debug, Clone, Serialize)]
pub struct CochainCircuitDescriptor {
    pub m: u32,
    /// chains[k] is the mod-2 chain of k-simplices carrying ω_k gates.
    pub chains: Vec<Chain>,
    /// Global phase coefficient (mod 2^m), outside any gate layer.
    pub constant: u32,
}

impl CochainCircuitDescriptor {
    pub fn recompose(&self) -> Result<PhasePolynomial> {
        let mut p = PhasePolynomial::zero(self.m)?;
        p.add_coeff(Simplex::empty(), self.constant as i64);
        for (k, chain) in self.chains.iter().enumerate() {
            let w = GroupCochain::omega(k);
            p.add_assign(&cochain_circuit_poly(&w, chain, self.m)?)?;
        }
        Ok(p)
    }

    /// Reduced boundaries of all layers (for k = 0 the boundary lands on the
    /// empty simplex with the mod-2 weight of the chain).
    pub fn closedness(&self) -> ClosednessReport {
        let boundaries: Vec<Chain> = self.chains.iter().map(|c| c.boundary()).collect();
        let unreduced: Vec<bool> = self
            .chains
            .iter()
            .map(|c| crate::homology::unreduced_boundary_mod2(c).is_zero())
            .collect();
        let reduced: Vec<bool> = boundaries.iter().map(Chain::is_zero).collect();
        let all_unreduced = unreduced.iter().all(|&b| b);
        ClosednessReport {
            boundaries,
            closed_unreduced: unreduced,
            closed_reduced: reduced,
            all_closed_unreduced: all_unreduced,
        }
    }
}

/// Closedness of descriptor layers under both boundary conventions. The
/// unreduced column is the cycle condition; the reduced k = 0 entry records
/// the Euler-characteristic parity as the scalar charge.
#[derive(Debug, Clone, Serialize)]
pub struct ClosednessReport {
    pub boundaries: Vec<Chain>,
    pub closed_unreduced: Vec<bool>,
    pub closed_reduced: Vec<bool>,
    pub all_closed_unreduced: bool,
}

/// Peel a precision-1 polynomial into ω_k gate layers: strictly by degree
/// from the top, in canonical monomial order, each degree-(k+1) monomial
/// becoming an ω_k gate there. Terminates because a gate's top monomial is
/// its location and everything else it touches is strictly lower.
pub fn decompose(p: &PhasePolynomial) -> Result<CochainCircuitDescriptor> {
    if p.precision() != 1 {
        return Err(Error::Precision(format!(
            "decompose expects precision m = 1, got {}",
            p.precision()
        )));
    }
    let mut work = p.clone();
    let max_len = p.terms().map(|(s, _)| s.len()).max().unwrap_or(0);
    let mut chains: Vec<Chain> = (0..max_len as i64).map(|k| Chain::zero(k, 2)).collect();
    for len in (1..=max_len).rev() {
        let locations: Vec<Simplex> =
            work.terms().filter(|(s, _)| s.len() == len).map(|(s, _)| s.clone()).collect();
        let w = GroupCochain::omega(len - 1);
        for s in locations {
            chains[len - 1].add_term(s.clone(), 1)?;
            let gate = cochain_gate_poly(&w, &s, 1, 1)?;
            work.sub_assign(&gate)?;
        }
        debug_assert!(work.terms().all(|(s, _)| s.len() < len));
    }
    let constant = work.coeff(&Simplex::empty());
    Ok(CochainCircuitDescriptor { m: 1, chains, constant })
}

/// Both sides of the commutator identity for a cochain circuit: conjugating
/// the w-circuit on a chain C by the global flip yields the circuit of
/// w(X,·)-gates on ∂C (reduced boundary, so the k = 0 layer contributes the
/// global phase w(X,e) per vertex).
#[derive(Debug, Clone, Serialize)]
pub struct CommutatorChainCheck {
    pub commutator: PhasePolynomial,
    pub boundary_circuit: PhasePolynomial,
    pub equal: bool,
}

pub fn commutator_chain_check(
    w: &GroupCochain,
    chain: &Chain,
    m: u32,
) -> Result<CommutatorChainCheck> {
    let circuit = cochain_circuit_poly(w, chain, m)?;
    let commutator = circuit.flip_commutator();
    let w_x = w.slice_first(true);
    let boundary_circuit = cochain_circuit_poly(&w_x, &chain.boundary(), m)?;
    let equal = commutator == boundary_circuit;
    Ok(CommutatorChainCheck { commutator, boundary_circuit, equal })
}
