//! Crystal operators on letters, words and tableaux for indices `1..m+n-1`.
//!
//! Three bracketing regimes share the alphabet: indices below `m` use the
//! standard orientation (cancel `+-` pairs, lower at the leftmost surviving
//! `+`), the isotropic index `m` flips the leftmost `m` unless an `m+1`
//! stands strictly left of it, and indices above `m` use the mirrored
//! orientation (cancel `-+` pairs, lower at the rightmost surviving `+`).

use crate::alphabet::{Alphabet, Letter};
use crate::tableau::{NormalTableau, Tableau};
use crate::weight::Weight;

/// Signed positions of a word with respect to index `i`: letter `i` maps to
/// `+`, letter `i+1` to `-`; everything else is skipped.
pub fn signature(word: &[Letter], i: u8) -> Vec<(char, usize)> {
    word.iter()
        .enumerate()
        .filter_map(|(p, &x)| {
            if x == i {
                Some(('+', p))
            } else if x == i + 1 {
                Some(('-', p))
            } else {
                None
            }
        })
        .collect()
}

/// Surviving plus/minus positions after cancellation, in word order.
/// Standard orientation cancels `(+,-)` with the plus on the left; the
/// mirrored orientation cancels `(-,+)` with the minus on the left.
pub fn reduced_signature(sig: &[(char, usize)], mirrored: bool) -> (Vec<usize>, Vec<usize>) {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    if !mirrored {
        let mut stack = Vec::new();
        for &(s, p) in sig {
            if s == '+' {
                stack.push(p);
            } else if let Some(_) = stack.pop() {
            } else {
                minus.push(p);
            }
        }
        plus = stack;
    } else {
        let mut stack = Vec::new();
        for &(s, p) in sig {
            if s == '-' {
                stack.push(p);
            } else if let Some(_) = stack.pop() {
            } else {
                plus.push(p);
            }
        }
        minus = stack;
    }
    (plus, minus)
}

fn first_charged(word: &[Letter], i: u8) -> Option<(usize, Letter)> {
    word.iter()
        .enumerate()
        .find(|&(_, &x)| x == i || x == i + 1)
        .map(|(p, &x)| (p, x))
}

/// Position the lowering operator acts on, if any.
pub fn f_position(alphabet: &Alphabet, word: &[Letter], i: u8) -> Option<usize> {
    assert!(i >= 1 && i < alphabet.size());
    let m = alphabet.m;
    if i == m {
        return match first_charged(word, i) {
            Some((p, x)) if x == i => Some(p),
            _ => None,
        };
    }
    let sig = signature(word, i);
    let (plus, _) = reduced_signature(&sig, i > m);
    if i < m {
        plus.first().copied()
    } else {
        plus.last().copied()
    }
}

/// Position the raising operator acts on, if any.
pub fn e_position(alphabet: &Alphabet, word: &[Letter], i: u8) -> Option<usize> {
    assert!(i >= 1 && i < alphabet.size());
    let m = alphabet.m;
    if i == m {
        return match first_charged(word, i) {
            Some((p, x)) if x == i + 1 => Some(p),
            _ => None,
        };
    }
    let sig = signature(word, i);
    let (_, minus) = reduced_signature(&sig, i > m);
    if i < m {
        minus.last().copied()
    } else {
        minus.first().copied()
    }
}

pub fn apply_f_word(alphabet: &Alphabet, word: &[Letter], i: u8) -> Option<Vec<Letter>> {
    f_position(alphabet, word, i).map(|p| {
        let mut w = word.to_vec();
        w[p] = i + 1;
        w
    })
}

pub fn apply_e_word(alphabet: &Alphabet, word: &[Letter], i: u8) -> Option<Vec<Letter>> {
    e_position(alphabet, word, i).map(|p| {
        let mut w = word.to_vec();
        w[p] = i;
        w
    })
}

pub fn eps_word(alphabet: &Alphabet, word: &[Letter], i: u8) -> u32 {
    let m = alphabet.m;
    if i == m {
        return match first_charged(word, i) {
            Some((_, x)) if x == i + 1 => 1,
            _ => 0,
        };
    }
    let sig = signature(word, i);
    let (_, minus) = reduced_signature(&sig, i > m);
    minus.len() as u32
}

pub fn phi_word(alphabet: &Alphabet, word: &[Letter], i: u8) -> u32 {
    let m = alphabet.m;
    if i == m {
        return match first_charged(word, i) {
            Some((_, x)) if x == i => 1,
            _ => 0,
        };
    }
    let sig = signature(word, i);
    let (plus, _) = reduced_signature(&sig, i > m);
    plus.len() as u32
}

pub fn word_weight(alphabet: &Alphabet, word: &[Letter]) -> Weight {
    let mut w = Weight::zero(alphabet);
    for &x in word {
        w.delta[x as usize - 1] += 1;
    }
    w
}

pub fn apply_f_tableau(t: &Tableau, i: u8) -> Option<Tableau> {
    let w = t.word();
    f_position(&t.alphabet, &w, i).map(|p| {
        t.with_entry(t.word_cell(p), i + 1)
            .unwrap_or_else(|e| panic!("lowering broke semistandardness: {e}"))
    })
}

pub fn apply_e_tableau(t: &Tableau, i: u8) -> Option<Tableau> {
    let w = t.word();
    e_position(&t.alphabet, &w, i).map(|p| {
        t.with_entry(t.word_cell(p), i)
            .unwrap_or_else(|e| panic!("raising broke semistandardness: {e}"))
    })
}

pub fn apply_f_normal(t: &NormalTableau, i: u8) -> Option<NormalTableau> {
    let w = t.word();
    f_position(&t.alphabet, &w, i).map(|p| {
        t.with_entry(t.word_cell(p), i + 1)
            .unwrap_or_else(|e| panic!("lowering broke semistandardness: {e}"))
    })
}

pub fn apply_e_normal(t: &NormalTableau, i: u8) -> Option<NormalTableau> {
    let w = t.word();
    e_position(&t.alphabet, &w, i).map(|p| {
        t.with_entry(t.word_cell(p), i)
            .unwrap_or_else(|e| panic!("raising broke semistandardness: {e}"))
    })
}

/// Static crystal statistics of one tensor factor.
#[derive(Clone, Copy, Debug)]
pub struct FactorStats {
    pub eps: u32,
    pub phi: u32,
}

/// Which factor of a two-fold tensor the lowering operator acts on
/// (`0` = left, `1` = right), or `None` for the zero element. The left factor
/// comes first in the reading word.
pub fn tensor_f_side(alphabet: &Alphabet, i: u8, b1: FactorStats, b2: FactorStats) -> Option<usize> {
    let m = alphabet.m;
    if i == m {
        if b1.eps + b1.phi > 0 {
            return if b1.phi > 0 { Some(0) } else { None };
        }
        return if b2.phi > 0 { Some(1) } else { None };
    }
    if i < m {
        if b1.phi > b2.eps {
            if b1.phi > 0 { Some(0) } else { None }
        } else if b2.phi > 0 {
            Some(1)
        } else {
            None
        }
    } else {
        // mirrored
        if b2.phi > b1.eps {
            if b2.phi > 0 { Some(1) } else { None }
        } else if b1.phi > 0 {
            Some(0)
        } else {
            None
        }
    }
}

/// Which factor the raising operator acts on.
pub fn tensor_e_side(alphabet: &Alphabet, i: u8, b1: FactorStats, b2: FactorStats) -> Option<usize> {
    let m = alphabet.m;
    if i == m {
        if b1.eps + b1.phi > 0 {
            return if b1.eps > 0 { Some(0) } else { None };
        }
        return if b2.eps > 0 { Some(1) } else { None };
    }
    if i < m {
        if b1.phi >= b2.eps {
            if b1.eps > 0 { Some(0) } else { None }
        } else if b2.eps > 0 {
            Some(1)
        } else {
            None
        }
    } else {
        if b2.phi >= b1.eps {
            if b2.eps > 0 { Some(1) } else { None }
        } else if b1.eps > 0 {
            Some(0)
        } else {
            None
        }
    }
}

/// Combined statistics of a two-fold tensor.
pub fn tensor_stats(alphabet: &Alphabet, i: u8, b1: FactorStats, b2: FactorStats) -> FactorStats {
    let m = alphabet.m;
    if i == m {
        if b1.eps + b1.phi > 0 {
            return b1;
        }
        return b2;
    }
    if i < m {
        FactorStats {
            eps: b1.eps + b2.eps.saturating_sub(b1.phi),
            phi: b2.phi + b1.phi.saturating_sub(b2.eps),
        }
    } else {
        FactorStats {
            eps: b2.eps + b1.eps.saturating_sub(b2.phi),
            phi: b1.phi + b2.phi.saturating_sub(b1.eps),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_signature() {
        let sig = signature(&[4, 5], 4);
        assert_eq!(sig, vec![('+', 0), ('-', 1)]);
        assert!(signature(&[], 4).is_empty());
    }

    #[test]
    fn isotropic_index_rules() {
        let a = Alphabet::new(4, 4);
        // leftmost 4 flips when no 5 precedes it
        let w = vec![6, 7, 7, 7, 4, 6, 6, 6, 4, 5, 5, 5];
        assert_eq!(f_position(&a, &w, 4), Some(4));
        // a 5 on the far left blocks everything
        let w = vec![5, 7, 7, 7, 4, 6, 6, 6, 4, 5, 5, 5];
        assert_eq!(f_position(&a, &w, 4), None);
        // and the raising operator is inverse
        let w = apply_f_word(&a, &[6, 7, 7, 7, 4, 6, 6, 6, 4, 5, 5, 5], 4).unwrap();
        assert_eq!(apply_e_word(&a, &w, 4).unwrap(), vec![6, 7, 7, 7, 4, 6, 6, 6, 4, 5, 5, 5]);
    }

    #[test]
    fn mirrored_index_on_column() {
        // single column [i; i+1] with i > m lowers to [i+1; i+1]
        let a = Alphabet::new(2, 3);
        let w = vec![3, 4];
        assert_eq!(apply_f_word(&a, &w, 3), Some(vec![4, 4]));
    }

    #[test]
    fn highest_weight_word_kills_e() {
        let a = Alphabet::new(2, 2);
        for i in a.indices() {
            assert_eq!(e_position(&a, &[1, 1, 1], i), None);
        }
    }

    #[test]
    fn fm_squared_zero_smoke() {
        let a = Alphabet::new(2, 2);
        let mut count = 0;
        for len in 0..=4u32 {
            let mut stack = vec![Vec::new()];
            for _ in 0..len {
                let mut next = Vec::new();
                for w in &stack {
                    for x in a.letters() {
                        let mut v: Vec<Letter> = w.clone();
                        v.push(x);
                        next.push(v);
                    }
                }
                stack = next;
            }
            for w in &stack {
                if let Some(fw) = apply_f_word(&a, w, a.m) {
                    assert_eq!(apply_f_word(&a, &fw, a.m), None, "fm^2 nonzero on {:?}", w);
                    count += 1;
                }
            }
        }
        assert!(count > 0);
    }
}
