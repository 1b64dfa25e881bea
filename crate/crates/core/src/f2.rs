//! Dense 𝔽₂ linear algebra on u64-packed rows.
//!
//! Gaussian elimination with column pivoting, solving A·x = b with witness
//! extraction, and, on inconsistency, a certifying left null vector y with
//! yᵀA = 0 and y·b = 1. The certificate comes from mirroring all row
//! operations on an identity block.

// Elimination loops index several matrices by the same row/column; iterator
// rewrites obscure that symmetry.
#![allow(clippy::needless_range_loop)]

#[derive(Debug, Clone)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        BitMatrix { rows, cols, words, data: vec![0; rows * words.max(1)] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.words + c / 64];
        if bit {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    fn xor_rows(&mut self, target: usize, source: usize) {
        debug_assert_ne!(target, source);
        let w = self.words;
        let (t, s) = (target * w, source * w);
        // split so source and target can be borrowed simultaneously
        let (lo, hi) = self.data.split_at_mut(t.max(s));
        let (trow, srow) =
            if t < s { (&mut lo[t..t + w], &hi[..w]) } else { (&mut hi[..w], &lo[s..s + w]) };
        for (x, y) in trow.iter_mut().zip(srow) {
            *x ^= *y;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words {
            self.data.swap(a * self.words + k, b * self.words + k);
        }
    }

    /// Rank via forward elimination (consumes the copy).
    pub fn rank(mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(rank, pivot);
            for r in rank + 1..self.rows {
                if self.get(r, col) {
                    self.xor_rows(r, rank);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// Result of solving A·x = b over 𝔽₂.
#[derive(Debug, Clone)]
pub enum SolveOutcome {
    /// A solution x (free variables set to 0).
    Solution(Vec<bool>),
    /// A certificate y with yᵀA = 0 and y·b = 1, proving no solution exists.
    Inconsistent(Vec<bool>),
}

/// Solve A·x = b, returning either a solution or a left-null certificate.
///
/// Consumes `a`. Row operations are tracked so the inconsistent row can be
/// expressed in terms of the original rows.
pub fn solve(mut a: BitMatrix, b: &[bool]) -> SolveOutcome {
    assert_eq!(b.len(), a.rows, "rhs length must match row count");
    let rows = a.rows;
    let cols = a.cols;
    // Augment with b and an identity block recording row operations.
    let mut rhs = BitMatrix::zero(rows, 1);
    let mut ops = BitMatrix::zero(rows, rows);
    for r in 0..rows {
        rhs.set(r, 0, b[r]);
        ops.set(r, r, true);
    }

    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a.get(r, col)) else {
            continue;
        };
        a.swap_rows(rank, pivot);
        rhs.swap_rows(rank, pivot);
        ops.swap_rows(rank, pivot);
        for r in rank + 1..rows {
            if a.get(r, col) {
                a.xor_rows(r, rank);
                rhs.xor_rows(r, rank);
                ops.xor_rows(r, rank);
            }
        }
        pivot_col_of_row.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }

    // Inconsistent iff some eliminated row has empty A-part but b-part 1.
    for r in rank..rows {
        if rhs.get(r, 0) {
            let y: Vec<bool> = (0..rows).map(|i| ops.get(r, i)).collect();
            return SolveOutcome::Inconsistent(y);
        }
    }

    // Back-substitute on the echelon form.
    let mut x = vec![false; cols];
    for r in (0..rank).rev() {
        let col = pivot_col_of_row[r];
        let mut v = rhs.get(r, 0);
        // dot of row r (strictly right of its pivot) with x
        for c in col + 1..cols {
            if a.get(r, c) && x[c] {
                v = !v;
            }
        }
        x[col] = v;
    }
    SolveOutcome::Solution(x)
}
