//! Mod-2 homology: Betti numbers, null-homology witnesses, and the
//! link-based manifold check.
//!
//! Boundary matrices here use the unreduced convention (∂ of a 0-chain is
//! zero), so b₀ counts connected components. The reduced boundary exposed by
//! `Chain::boundary` is a separate convention used by the phase-polynomial
//! commutator identities; the two meet only in reporting.

use serde::Serialize;

use crate::chain::Chain;
use crate::error::Error;
use crate::f2::{solve, BitMatrix, SolveOutcome};
use crate::simplex::{Simplex, SimplicialComplex};
use crate::Result;

/// The unreduced ∂_{k+1} matrix: rows indexed by k-simplices, columns by
/// (k+1)-simplices. Returns the matrix together with both index lists.
pub fn boundary_matrix(
    complex: &SimplicialComplex,
    k: i64,
) -> (BitMatrix, Vec<Simplex>, Vec<Simplex>) {
    let rows: Vec<Simplex> = complex.k_simplices(k).into_iter().cloned().collect();
    let cols: Vec<Simplex> = complex.k_simplices(k + 1).into_iter().cloned().collect();
    let row_index: std::collections::BTreeMap<&Simplex, usize> =
        rows.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = BitMatrix::zero(rows.len(), cols.len());
    for (c, s) in cols.iter().enumerate() {
        for j in 0..s.len() {
            let face = s.face_omitting(j);
            m.set(row_index[&face], c, true);
        }
    }
    (m, rows, cols)
}

/// Mod-2 Betti numbers b₀..b_d (unreduced, so b₀ = number of components).
pub fn betti_z2(complex: &SimplicialComplex) -> Vec<usize> {
    let d = complex.dim();
    if d < 0 {
        return Vec::new();
    }
    let f = complex.f_vector();
    // rank ∂_k for k = 1..=d (∂_0 = 0)
    let mut ranks = vec![0usize; (d + 2) as usize];
    for k in 1..=d {
        let (m, _, _) = boundary_matrix(complex, k - 1);
        ranks[k as usize] = m.rank();
    }
    (0..=d as usize).map(|k| f[k] - ranks[k] - ranks[k + 1]).collect()
}

/// Outcome of asking whether a mod-2 cycle bounds.
#[derive(Debug, Clone, Serialize)]
pub enum HomologyWitness {
    /// The cycle is a boundary: ∂(witness) equals it.
    Trivial { witness: Chain },
    /// The cycle is essential: the support of a cocycle y with y·∂ = 0 and
    /// y·cycle = 1.
    Nontrivial { cocycle_support: Vec<Simplex> },
}

impl HomologyWitness {
    pub fn is_trivial(&self) -> bool {
        matches!(self, HomologyWitness::Trivial { .. })
    }
}

/// Decide whether the mod-2 cycle `c` bounds in `complex`, producing either a
/// bounding chain or a certifying cocycle.
///
/// Preconditions: `c` has modulus 2, its simplices lie in the complex, and it
/// is a cycle in the unreduced sense (for dim > 0 the reduced and unreduced
/// conditions agree; every 0-chain is unreduced-closed).
pub fn homology_solve(complex: &SimplicialComplex, c: &Chain) -> Result<HomologyWitness> {
    if c.modulus() != 2 {
        return Err(Error::ContractViolation(format!(
            "homology_solve expects modulus 2, got {}",
            c.modulus()
        )));
    }
    if let Some(s) = c.terms().map(|(s, _)| s).find(|s| !complex.contains(s)) {
        return Err(Error::ContractViolation(format!(
            "chain term {s} is not a simplex of the complex"
        )));
    }
    if c.dim() > 0 && !c.boundary().is_zero() {
        return Err(Error::ContractViolation("chain is not a cycle mod 2".into()));
    }
    let k = c.dim();
    if c.is_zero() {
        return Ok(HomologyWitness::Trivial { witness: Chain::zero(k + 1, 2) });
    }
    let (m, rows, cols) = boundary_matrix(complex, k);
    let b: Vec<bool> = rows.iter().map(|s| c.coeff(s) == 1).collect();
    match solve(m, &b) {
        SolveOutcome::Solution(x) => {
            let witness = Chain::from_terms(
                k + 1,
                2,
                cols.iter().zip(x.iter()).filter(|(_, &bit)| bit).map(|(s, _)| (s.clone(), 1)),
            )?;
            debug_assert_eq!(unreduced_boundary_mod2(&witness), c.mod2());
            Ok(HomologyWitness::Trivial { witness })
        }
        SolveOutcome::Inconsistent(y) => {
            let support: Vec<Simplex> =
                rows.iter().zip(y.iter()).filter(|(_, &bit)| bit).map(|(s, _)| s.clone()).collect();
            debug_assert_eq!(c.dot_mod2(&support), 1);
            Ok(HomologyWitness::Nontrivial { cocycle_support: support })
        }
    }
}

/// Boundary without the reduced (−1)-dimensional slot.
pub fn unreduced_boundary_mod2(c: &Chain) -> Chain {
    if c.dim() == 0 {
        return Chain::zero(-1, 2);
    }
    c.boundary().mod2()
}

/// Per-simplex verdict of the manifold check.
#[derive(Debug, Clone, Serialize)]
pub struct LinkVerdict {
    pub simplex: Simplex,
    /// Dimension m of the sphere S^m the link should be a mod-2 homology
    /// sphere of.
    pub expected_sphere_dim: i64,
    pub link_betti: Vec<usize>,
    pub betti_ok: bool,
    pub link_euler: i64,
    pub euler_ok: bool,
    /// For codimension-1 simplices only: the link must be exactly two points.
    pub two_vertex_ok: Option<bool>,
    pub passes: bool,
}

/// Report of the combinatorial-manifold heuristic over all proper simplices.
#[derive(Debug, Clone, Serialize)]
pub struct ManifoldReport {
    pub dim: i64,
    pub verdicts: Vec<LinkVerdict>,
    pub passes: bool,
}

fn sphere_betti(m: i64) -> Vec<usize> {
    // mod-2 homology of S^m, unreduced
    if m == 0 {
        return vec![2];
    }
    let mut b = vec![0usize; (m + 1) as usize];
    b[0] = 1;
    b[m as usize] = 1;
    b
}

fn sphere_euler(m: i64) -> i64 {
    if m % 2 == 0 {
        2
    } else {
        0
    }
}

impl SimplicialComplex {
    /// Check that every proper simplex has the mod-2 homology of the sphere
    /// of complementary dimension, that link Euler characteristics match, and
    /// that codimension-1 links are exactly two vertices. Intended for
    /// all-base complexes; reports per-simplex verdicts rather than erroring.
    pub fn manifold_check(&self) -> ManifoldReport {
        let d = self.dim();
        let mut verdicts = Vec::new();
        let mut passes = true;
        for k in 0..d {
            for s in self.k_simplices(k) {
                let link = self.link(s).expect("simplex from own iteration");
                let m = d - k - 1;
                let link_betti = betti_z2(&link);
                let betti_ok = link_betti == sphere_betti(m);
                let link_euler = link.euler_characteristic();
                let euler_ok = link_euler == sphere_euler(m);
                let two_vertex_ok = if k == d - 1 {
                    Some(link.dim() == 0 && link.simplex_count() == 2)
                } else {
                    None
                };
                let ok = betti_ok && euler_ok && two_vertex_ok.unwrap_or(true);
                passes &= ok;
                verdicts.push(LinkVerdict {
                    simplex: s.clone(),
                    expected_sphere_dim: m,
                    link_betti,
                    betti_ok,
                    link_euler,
                    euler_ok,
                    two_vertex_ok,
                    passes: ok,
                });
            }
        }
        ManifoldReport { dim: d, verdicts, passes }
    }
}
