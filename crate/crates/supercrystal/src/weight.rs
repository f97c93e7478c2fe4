//! Integral weights: a delta-coefficient vector plus a level tag.

use crate::alphabet::Alphabet;
use crate::partition::{hook_check, Partition};
use serde::{Deserialize, Serialize};
use std::ops::{Add, Neg, Sub};

/// A weight `sum_a delta[a] * delta_a + level * Lambda_0`. The level is plain
/// bookkeeping, no q-algebra semantics.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub delta: Vec<i64>,
    pub level: i64,
}

impl Weight {
    pub fn zero(alphabet: &Alphabet) -> Self {
        Weight {
            delta: vec![0; alphabet.size() as usize],
            level: 0,
        }
    }

    pub fn unit(alphabet: &Alphabet, letter: u8) -> Self {
        let mut w = Weight::zero(alphabet);
        w.delta[letter as usize - 1] = 1;
        w
    }

    pub fn coeff(&self, letter: u8) -> i64 {
        self.delta[letter as usize - 1]
    }

    /// The delta-part of the simple root `alpha_i` for `i >= 1`.
    pub fn simple_root(alphabet: &Alphabet, i: u8) -> Self {
        assert!(i >= 1 && i < alphabet.size());
        let mut w = Weight::zero(alphabet);
        w.delta[i as usize - 1] = 1;
        w.delta[i as usize] = -1;
        w
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        assert_eq!(self.delta.len(), rhs.delta.len());
        Weight {
            delta: self.delta.iter().zip(&rhs.delta).map(|(a, b)| a + b).collect(),
            level: self.level + rhs.level,
        }
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        self + (-rhs)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight {
            delta: self.delta.iter().map(|a| -a).collect(),
            level: -self.level,
        }
    }
}

/// The dominant weight attached to a hook partition: the first `m` rows give
/// the even coefficients, the conjugate of the leftover rows gives the odd
/// ones.
pub fn hook_weight(lambda: &Partition, alphabet: &Alphabet) -> Weight {
    assert!(
        hook_check(lambda, alphabet),
        "{lambda} is not an {}{}{} hook partition",
        alphabet.m,
        '|',
        alphabet.n
    );
    let m = alphabet.m as usize;
    let mut delta = vec![0i64; alphabet.size() as usize];
    for k in 1..=m {
        delta[k - 1] = lambda.part(k) as i64;
    }
    let leftover: Vec<u32> = lambda.parts().iter().skip(m).copied().collect();
    let mu = Partition::new(leftover).conjugate();
    for j in 1..=alphabet.n as usize {
        delta[m + j - 1] = mu.part(j) as i64;
    }
    Weight { delta, level: 0 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook_weight_examples() {
        let a = Alphabet::new(2, 5);
        let w = hook_weight(&Partition::new(vec![3, 2, 1, 1]), &a);
        assert_eq!(w.delta, vec![3, 2, 2, 0, 0, 0, 0]);
        assert_eq!(w.level, 0);

        let w = hook_weight(&Partition::empty(), &a);
        assert_eq!(w, Weight::zero(&a));

        let a = Alphabet::new(4, 4);
        let w = hook_weight(&Partition::new(vec![4, 4, 2]), &a);
        assert_eq!(w.delta, vec![4, 4, 2, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn hook_weight_injective_small() {
        use std::collections::HashSet;
        let a = Alphabet::new(2, 3);
        let mut seen = HashSet::new();
        for n in 0..=12 {
            for p in Partition::all_of_size(n) {
                if hook_check(&p, &a) {
                    assert!(seen.insert(hook_weight(&p, &a)), "collision at {p}");
                }
            }
        }
    }
}
