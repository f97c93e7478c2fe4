//! Exhaustive enumeration of multiplicity arrays, deterministic order.

use crate::alphabet::{Alphabet, GType};
use crate::matrix::{root_cells, MatrixElement};

/// All arrays with total multiplicity at most `budget`, in a deterministic
/// order (cells in their natural order, lexicographic multiplicities).
pub fn enumerate_matrices(g: GType, alphabet: Alphabet, budget: u32) -> Vec<MatrixElement> {
    let cells = root_cells(g, &alphabet);
    let mut out = Vec::new();
    let mut cur = MatrixElement::zero(g, alphabet);
    fn go(
        cells: &[(u8, u8)],
        idx: usize,
        left: u32,
        alphabet: &Alphabet,
        cur: &mut MatrixElement,
        out: &mut Vec<MatrixElement>,
    ) {
        if idx == cells.len() {
            out.push(cur.clone());
            return;
        }
        let cell = cells[idx];
        let cap = if alphabet.parity(cell.0) != alphabet.parity(cell.1) {
            left.min(1)
        } else {
            left
        };
        for v in 0..=cap {
            cur.set(cell, v);
            go(cells, idx + 1, left - v, alphabet, cur, out);
        }
        cur.set(cell, 0);
    }
    go(&cells, 0, budget, &alphabet, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_zero_and_one() {
        let a = Alphabet::new(2, 2);
        let zero = enumerate_matrices(GType::D, a, 0);
        assert_eq!(zero.len(), 1);
        assert!(zero[0].is_zero());
        // six off-diagonal pairs plus the two odd diagonals
        let cells = root_cells(GType::D, &a);
        assert_eq!(cells.len(), 8);
        let one = enumerate_matrices(GType::D, a, 1);
        assert_eq!(one.len(), 1 + cells.len());
    }

    #[test]
    fn budget_monotone() {
        let a = Alphabet::new(2, 1);
        let small: std::collections::HashSet<_> =
            enumerate_matrices(GType::C, a, 1).into_iter().collect();
        let big: std::collections::HashSet<_> =
            enumerate_matrices(GType::C, a, 2).into_iter().collect();
        assert!(small.is_subset(&big));
    }
}
