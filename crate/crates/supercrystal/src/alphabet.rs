//! The graded alphabet and the three orthosymplectic types.
//!
//! Letters are `1..=m+n`; the first `m` are even, the last `n` odd.
//! Crystal operator indices live in `I = {0, 1, ..., m+n-1}`.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A letter of the graded alphabet, `1..=m+n`.
pub type Letter = u8;

/// Parity of a letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Graded alphabet with `m` even letters followed by `n` odd letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Alphabet {
    pub m: u8,
    pub n: u8,
}

impl Alphabet {
    pub fn new(m: u8, n: u8) -> Self {
        assert!(m >= 2, "alphabet needs m >= 2");
        assert!(n >= 1, "alphabet needs n >= 1");
        Alphabet { m, n }
    }

    pub fn size(&self) -> u8 {
        self.m + self.n
    }

    pub fn contains(&self, a: Letter) -> bool {
        1 <= a && a <= self.size()
    }

    pub fn parity(&self, a: Letter) -> Parity {
        assert!(self.contains(a), "letter {} outside alphabet {:?}", a, self);
        if a <= self.m {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self, a: Letter) -> bool {
        self.parity(a) == Parity::Even
    }

    pub fn is_odd(&self, a: Letter) -> bool {
        self.parity(a) == Parity::Odd
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        1..=self.size()
    }

    /// Crystal indices excluding 0, i.e. `1..=m+n-1`.
    pub fn indices(&self) -> impl Iterator<Item = u8> {
        1..=(self.size() - 1)
    }

    /// Row order: may `a` sit weakly left of `b` in a row (`a` in the cell
    /// directly left of `b`)? Rows weakly increase and odd letters are strict.
    pub fn row_ok(&self, a: Letter, b: Letter) -> bool {
        a < b || (a == b && self.is_even(a))
    }

    /// Column order: may `a` sit directly above `b`? Columns weakly increase
    /// and even letters are strict.
    pub fn col_ok(&self, a: Letter, b: Letter) -> bool {
        a < b || (a == b && self.is_odd(a))
    }
}

/// The three families, with the normalization constant `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GType {
    B,
    C,
    D,
}

impl GType {
    pub fn r(&self) -> i64 {
        match self {
            GType::B => 2,
            GType::C | GType::D => 1,
        }
    }

    pub const ALL: [GType; 3] = [GType::B, GType::C, GType::D];
}

impl fmt::Display for GType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GType::B => write!(f, "b"),
            GType::C => write!(f, "c"),
            GType::D => write!(f, "d"),
        }
    }
}

impl std::str::FromStr for GType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "b" | "B" => Ok(GType::B),
            "c" | "C" => Ok(GType::C),
            "d" | "D" => Ok(GType::D),
            other => Err(format!("unknown type `{other}`, expected b, c or d")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_split() {
        let a = Alphabet::new(2, 5);
        assert!(a.is_even(1) && a.is_even(2));
        for x in 3..=7 {
            assert!(a.is_odd(x));
        }
    }

    #[test]
    fn r_constants() {
        assert_eq!(GType::B.r(), 2);
        assert_eq!(GType::C.r(), 1);
        assert_eq!(GType::D.r(), 1);
    }

    #[test]
    fn row_and_column_order() {
        let a = Alphabet::new(2, 2);
        // even letters repeat in rows, not in columns
        assert!(a.row_ok(1, 1));
        assert!(!a.col_ok(1, 1));
        // odd letters repeat in columns, not in rows
        assert!(!a.row_ok(3, 3));
        assert!(a.col_ok(3, 3));
    }
}
