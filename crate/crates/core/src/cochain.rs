//! Homogeneous group cochains on ℤ₂ with values in ℤ_n, as explicit tables.
//!
//! A degree-k cochain is a function (ℤ₂)^{k+2} → ℤ_n; we store the full
//! table indexed big-endian (the first argument is the top bit). The
//! distinguished cocycles ω_k take the value 1/2 (i.e. 1 mod 2) exactly on
//! the two alternating tuples (0,1,0,…) and (1,0,1,…); they are homogeneous
//! cocycles, not coboundaries of homogeneous cochains, and satisfy the
//! halving identity ω_{2k+1} = ½·δω_{2k} once ω_{2k} is reinterpreted with
//! quarter-turn values (modulus 4).

use serde::Serialize;

use crate::error::Error;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupCochain {
    /// Number of group arguments; the cochain degree is `arity − 2`
    /// (degree −1, arity 1, occurs as a slice of a degree-0 cochain).
    arity: usize,
    /// Value modulus n; the value v represents the phase fraction v/n.
    modulus: u32,
    /// 2^arity values, index Σ gᵢ · 2^{arity−1−i}.
    table: Vec<u32>,
}

impl GroupCochain {
    pub fn from_table(arity: usize, modulus: u32, table: Vec<u32>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::MalformedInput("cochain modulus must be positive".into()));
        }
        if table.len() != 1 << arity {
            return Err(Error::MalformedInput(format!(
                "cochain table needs {} entries, got {}",
                1usize << arity,
                table.len()
            )));
        }
        let table = table.into_iter().map(|v| v % modulus).collect();
        Ok(GroupCochain { arity, modulus, table })
    }

    pub fn zero(arity: usize, modulus: u32) -> Self {
        GroupCochain { arity, modulus, table: vec![0; 1 << arity] }
    }

    /// The distinguished degree-k cocycle ω_k (arity k+2, modulus 2).
    pub fn omega(k: usize) -> Self {
        let arity = k + 2;
        let mut table = vec![0u32; 1 << arity];
        let mut alt = 0usize;
        for i in 0..arity {
            // tuple (0,1,0,1,…) big-endian: odd positions set
            if i % 2 == 1 {
                alt |= 1 << (arity - 1 - i);
            }
        }
        let mask = (1usize << arity) - 1;
        table[alt] = 1;
        table[!alt & mask] = 1;
        GroupCochain { arity, modulus: 2, table }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> i64 {
        self.arity as i64 - 2
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn index_of(args: &[bool]) -> usize {
        args.iter().fold(0usize, |acc, &b| (acc << 1) | usize::from(b))
    }

    pub fn value(&self, args: &[bool]) -> u32 {
        assert_eq!(args.len(), self.arity, "argument count must match arity");
        self.table[Self::index_of(args)]
    }

    pub fn value_at(&self, index: usize) -> u32 {
        self.table[index]
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|&v| v == 0)
    }

    /// Invariance under flipping every argument (multiplication by the
    /// nonidentity group element).
    pub fn is_homogeneous(&self) -> bool {
        let mask = (1usize << self.arity) - 1;
        (0..self.table.len()).all(|i| self.table[i] == self.table[!i & mask])
    }

    /// (δw)(g₀,…,g_{a}) = Σⱼ (−1)ʲ w(…ĝⱼ…) mod n.
    pub fn coboundary(&self) -> GroupCochain {
        let arity = self.arity + 1;
        let mut table = vec![0u32; 1 << arity];
        for (idx, slot) in table.iter_mut().enumerate() {
            let mut acc: i64 = 0;
            for j in 0..arity {
                // drop argument j from the big-endian index
                let hi = idx >> (arity - j); // args before j
                let lo = idx & ((1 << (arity - 1 - j)) - 1); // args after j
                let sub = (hi << (arity - 1 - j)) | lo;
                let sign = if j % 2 == 0 { 1 } else { -1 };
                acc += sign * self.table[sub] as i64;
            }
            *slot = acc.rem_euclid(self.modulus as i64) as u32;
        }
        GroupCochain { arity, modulus: self.modulus, table }
    }

    pub fn is_cocycle(&self) -> bool {
        self.coboundary().is_zero()
    }

    /// Time-reversal action: negate all values mod n.
    pub fn negated(&self) -> GroupCochain {
        let table = self.table.iter().map(|&v| (self.modulus - v) % self.modulus).collect();
        GroupCochain { arity: self.arity, modulus: self.modulus, table }
    }

    /// Reinterpret the same integer values at a larger modulus. Lifting a
    /// mod-2 cochain to modulus 4 turns half-turn values into quarter turns,
    /// the TR-breaking intermediate of the halving identity.
    pub fn reinterpret_modulus(&self, modulus: u32) -> Result<GroupCochain> {
        if self.table.iter().any(|&v| v >= modulus) {
            return Err(Error::Precision(format!("table value exceeds target modulus {modulus}")));
        }
        Ok(GroupCochain { arity: self.arity, modulus, table: self.table.clone() })
    }

    /// Fix the first argument, lowering the arity by one.
    pub fn slice_first(&self, bit: bool) -> GroupCochain {
        assert!(self.arity >= 1, "cannot slice a nullary cochain");
        let half = 1usize << (self.arity - 1);
        let offset = if bit { half } else { 0 };
        GroupCochain {
            arity: self.arity - 1,
            modulus: self.modulus,
            table: self.table[offset..offset + half].to_vec(),
        }
    }
}

/// Report of the halving identity ω_{2k+1} = ½·δ(quarter-lift of ω_{2k}),
/// checked exhaustively over all 2^{2k+3} inputs.
#[derive(Debug, Clone, Serialize)]
pub struct HalfDeltaCheck {
    pub even_degree: usize,
    pub inputs: usize,
    /// δ of the quarter-lift must be even everywhere for halving to be
    /// defined.
    pub all_even: bool,
    /// The halved coboundary equals ω_{2k+1}.
    pub matches: bool,
    pub passes: bool,
}

/// Check ω_{2k+1} = ½·δ(ω_{2k} lifted to quarter turns).
pub fn verify_half_delta(k: usize) -> Result<HalfDeltaCheck> {
    let even = GroupCochain::omega(2 * k);
    let lifted = even.reinterpret_modulus(4)?;
    let delta = lifted.coboundary();
    let all_even = delta.table().iter().all(|&v| v % 2 == 0);
    let matches = if all_even {
        let halved: Vec<u32> = delta.table().iter().map(|&v| (v / 2) % 2).collect();
        halved == GroupCochain::omega(2 * k + 1).table()
    } else {
        false
    };
    Ok(HalfDeltaCheck {
        even_degree: 2 * k,
        inputs: delta.table().len(),
        all_even,
        matches,
        passes: all_even && matches,
    })
}

/// Report of the exhaustive search for a homogeneous primitive of ω_k.
#[derive(Debug, Clone, Serialize)]
pub struct NonCoboundaryReport {
    pub degree: usize,
    pub candidates_tried: u64,
    pub preimage_found: bool,
}

/// Search all homogeneous degree-(k−1) mod-2 cochains λ for δλ = ω_k.
/// Feasible for k ≤ 3 (2^{2^k} candidates); none exists, which is what makes
/// the ω_k layers genuine gates rather than basis changes.
pub fn non_coboundary_search(k: usize) -> Result<NonCoboundaryReport> {
    if k > 3 {
        return Err(Error::ContractViolation(format!(
            "exhaustive primitive search is limited to degree ≤ 3, got {k}"
        )));
    }
    let target = GroupCochain::omega(k);
    let arity = k + 1;
    let size = 1usize << arity;
    let mask = size - 1;
    // homogeneity identifies index i with its complement; fix the orbit
    // representatives with top bit 0
    let reps: Vec<usize> = (0..size).filter(|i| i & (size >> 1) == 0).collect();
    let mut tried = 0u64;
    let mut found = false;
    for assignment in 0u64..(1 << reps.len()) {
        tried += 1;
        let mut table = vec![0u32; size];
        for (bit, &rep) in reps.iter().enumerate() {
            let v = (assignment >> bit & 1) as u32;
            table[rep] = v;
            table[!rep & mask] = v;
        }
        let lambda = GroupCochain { arity, modulus: 2, table };
        if lambda.coboundary() == target {
            found = true;
            break;
        }
    }
    Ok(NonCoboundaryReport { degree: k, candidates_tried: tried, preimage_found: found })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_0_table() {
        let w = GroupCochain::omega(0);
        // arity 2: value 1 exactly on (0,1) and (1,0)
        assert_eq!(w.value(&[false, true]), 1);
        assert_eq!(w.value(&[true, false]), 1);
        assert_eq!(w.value(&[false, false]), 0);
        assert_eq!(w.value(&[true, true]), 0);
    }

    #[test]
    fn omega_is_homogeneous_cocycle() {
        for k in 0..=6 {
            let w = GroupCochain::omega(k);
            assert!(w.is_homogeneous(), "omega_{k} homogeneous");
            assert!(w.is_cocycle(), "omega_{k} closed");
            assert!(!w.is_zero());
            assert_eq!(w.negated(), w, "mod-2 values are TR invariant");
        }
    }

    #[test]
    fn coboundary_squares_to_zero() {
        // a non-homogeneous mod-4 cochain with scattered values
        let w = GroupCochain::from_table(2, 4, vec![1, 3, 0, 2]).unwrap();
        assert!(w.coboundary().coboundary().is_zero());
        let v = GroupCochain::from_table(3, 2, vec![1, 0, 1, 1, 0, 1, 0, 0]).unwrap();
        assert!(v.coboundary().coboundary().is_zero());
    }

    #[test]
    fn coboundary_of_constant() {
        // δ of a constant alternates to 0 or the constant depending on arity
        let c = GroupCochain::from_table(1, 2, vec![1, 1]).unwrap();
        let d = c.coboundary();
        // (δc)(g0,g1) = c(g1) − c(g0) = 0
        assert!(d.is_zero());
    }

    #[test]
    fn halving_identity_holds() {
        for k in 0..=2 {
            let check = verify_half_delta(k).unwrap();
            assert!(check.passes, "halving identity at even degree {}", 2 * k);
            assert_eq!(check.inputs, 1 << (2 * k + 3));
        }
    }

    #[test]
    fn halving_identity_hand_check_at_degree_0() {
        // δ(quarter ω_0)(g0,g1,g2) = ω_0(g1,g2) − ω_0(g0,g2) + ω_0(g0,g1) mod 4
        let lifted = GroupCochain::omega(0).reinterpret_modulus(4).unwrap();
        let d = lifted.coboundary();
        let w1 = GroupCochain::omega(1);
        for idx in 0..8 {
            let args: Vec<bool> = (0..3).map(|i| idx >> (2 - i) & 1 == 1).collect();
            let v = d.value(&args);
            assert_eq!(v % 2, 0, "even at {args:?}");
            assert_eq!((v / 2) % 2, w1.value(&args), "halved matches at {args:?}");
        }
    }

    #[test]
    fn omega_has_no_homogeneous_primitive() {
        for k in 0..=3 {
            let report = non_coboundary_search(k).unwrap();
            assert!(!report.preimage_found, "omega_{k} must not be a coboundary");
            assert_eq!(report.candidates_tried, 1 << (1u64 << k));
        }
    }

    #[test]
    fn slice_first_halves_table() {
        let w = GroupCochain::omega(1);
        let lo = w.slice_first(false);
        let hi = w.slice_first(true);
        assert_eq!(lo.arity(), 2);
        // ω_1(0, g1, g2) = 1 iff (g1,g2) = (1,0)
        assert_eq!(lo.value(&[true, false]), 1);
        assert_eq!(lo.value(&[false, true]), 0);
        // ω_1(1, g1, g2) = 1 iff (g1,g2) = (0,1)
        assert_eq!(hi.value(&[false, true]), 1);
    }

    #[test]
    fn tr_negation_mod4() {
        let w = GroupCochain::from_table(1, 4, vec![1, 3]).unwrap();
        assert_eq!(w.negated().table(), &[3, 1]);
        // quarter-turn values break TR invariance
        assert_ne!(w.negated(), w);
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(GroupCochain::from_table(2, 2, vec![0, 1]).is_err());
        assert!(GroupCochain::from_table(1, 0, vec![0, 0]).is_err());
        assert!(GroupCochain::omega(0).reinterpret_modulus(1).is_err());
    }
}
