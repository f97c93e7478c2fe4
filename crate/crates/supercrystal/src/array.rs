//! Two-rowed arrays: the encoding of the `i`/`i+1` statistics of a tableau,
//! the doubling transform on them, array signatures with crystal operators,
//! reduced decompositions, and the gluing algorithms that rebuild the
//! insertion tableau from its parts.

use crate::alphabet::{Alphabet, Letter};
use crate::correspondence::{pq_at_index, PQPair};
use crate::matrix::{region_big_triangle, supported_in, MatrixElement};
use crate::partition::Partition;
use crate::tableau::{SkewTableau, Tableau};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub fn half(z: u32) -> u32 {
    z / 2
}

pub fn rem2(z: u32) -> u32 {
    z % 2
}

/// Finitely supported pair of counter rows indexed by `k >= -1`.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct TwoRowedArray {
    x: BTreeMap<i64, u32>,
    y: BTreeMap<i64, u32>,
}

impl TwoRowedArray {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_cols(cols: &[(i64, u32, u32)]) -> Self {
        let mut a = Self::new();
        for &(k, x, y) in cols {
            a.set_x(k, x);
            a.set_y(k, y);
        }
        a
    }

    pub fn x(&self, k: i64) -> u32 {
        self.x.get(&k).copied().unwrap_or(0)
    }

    pub fn y(&self, k: i64) -> u32 {
        self.y.get(&k).copied().unwrap_or(0)
    }

    pub fn set_x(&mut self, k: i64, v: u32) {
        assert!(k >= -1, "column index below -1");
        if v == 0 {
            self.x.remove(&k);
        } else {
            self.x.insert(k, v);
        }
    }

    pub fn set_y(&mut self, k: i64, v: u32) {
        assert!(k >= -1, "column index below -1");
        if v == 0 {
            self.y.remove(&k);
        } else {
            self.y.insert(k, v);
        }
    }

    pub fn max_col(&self) -> i64 {
        self.x
            .keys()
            .chain(self.y.keys())
            .copied()
            .max()
            .unwrap_or(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_empty() && self.y.is_empty()
    }

    pub fn plus(&self, other: &TwoRowedArray) -> TwoRowedArray {
        let mut out = self.clone();
        for (&k, &v) in &other.x {
            out.set_x(k, out.x(k) + v);
        }
        for (&k, &v) in &other.y {
            out.set_y(k, out.y(k) + v);
        }
        out
    }

    /// The block with `a` in the upper row at `k+1` and `a` in the lower row
    /// at `k`.
    pub fn block(k: i64, a: u32) -> TwoRowedArray {
        let mut out = TwoRowedArray::new();
        out.set_x(k + 1, a);
        out.set_y(k, a);
        out
    }
}

/// The array of a support inside the big triangle at `i > m`: columns
/// `k >= 1` count the `i`s and `i+1`s per recording column, column 0 and -1
/// seed the triangle data.
pub fn build_t_array(c: &MatrixElement, i: u8) -> (TwoRowedArray, PQPair) {
    assert!(i > c.alphabet.m, "array encoding applies above the isotropic index");
    assert!(supported_in(c, &region_big_triangle(c, i)));
    let pq = pq_at_index(c, i);
    let mut a = TwoRowedArray::new();
    for k in 1..=pq.q_max_col() {
        a.set_x(k as i64, pq.q_count_in_col(k, i));
        a.set_y(k as i64, pq.q_count_in_col(k, i + 1));
    }
    let b = c.get((i, i + 1));
    a.set_x(0, b + 2 * c.get((i, i)));
    a.set_y(0, 2 * c.get((i + 1, i + 1)) + rem2(b));
    a.set_y(-1, 2 * half(b));
    (a, pq)
}

/// The doubling transform: carries odd remainders of the lower row, matches
/// them against the upper row, and carries the upper remainders in turn.
pub fn f_map(a: &TwoRowedArray) -> TwoRowedArray {
    let hi = a.max_col() + 3;
    let y1 = |k: i64| -> u32 {
        if k < -1 {
            0
        } else {
            let prev = if k - 1 < -1 { 0 } else { a.y(k - 1) };
            rem2(a.y(k)) + 2 * half(prev)
        }
    };
    // z and the intermediate upper row, ascending
    let mut z: BTreeMap<i64, u32> = BTreeMap::new();
    let mut xmid: BTreeMap<i64, u32> = BTreeMap::new();
    let mut ymid: BTreeMap<i64, u32> = BTreeMap::new();
    for k in -1..=hi {
        let zk = a.x(k).min(y1(k));
        let zprev = if k == -1 { 0 } else { *z.get(&(k - 1)).unwrap_or(&0) };
        z.insert(k, zk);
        xmid.insert(k, a.x(k) - zk + zprev);
        ymid.insert(k, y1(k) - zk + zprev);
    }
    let mut out = TwoRowedArray::new();
    for k in -1..=hi {
        let xk = xmid[&k];
        let xprev = if k == -1 { 0 } else { xmid[&(k - 1)] };
        out.set_x(k, rem2(xk) + 2 * half(xprev));
        out.set_y(k, ymid[&k]);
    }
    out
}

/// Signature of the array: columns high to low, minuses before pluses inside
/// a column. Each symbol keeps its source column.
pub fn sigma(a: &TwoRowedArray) -> Vec<(char, i64)> {
    let mut s = Vec::new();
    for k in (-1..=a.max_col()).rev() {
        s.extend(std::iter::repeat(('-', k)).take(a.y(k) as usize));
        s.extend(std::iter::repeat(('+', k)).take(a.x(k) as usize));
    }
    s
}

/// Cancel `(+,-)` pairs with the plus on the left; survivors keep provenance.
pub fn reduce_sigma(s: &[(char, i64)]) -> Vec<(char, i64)> {
    let mut minus = Vec::new();
    let mut plus: Vec<(char, i64)> = Vec::new();
    for &(c, k) in s {
        if c == '+' {
            plus.push((c, k));
        } else if plus.pop().is_none() {
            minus.push((c, k));
        }
    }
    minus.extend(plus);
    minus
}

/// Lowering operator: act at the column of the leftmost surviving plus.
pub fn apply_f_array(a: &TwoRowedArray) -> Option<TwoRowedArray> {
    let red = reduce_sigma(&sigma(a));
    let &(_, k) = red.iter().find(|&&(c, _)| c == '+')?;
    let mut out = a.clone();
    out.set_x(k, out.x(k) - 1);
    out.set_y(k, out.y(k) + 1);
    Some(out)
}

/// Raising operator: act at the column of the rightmost surviving minus.
pub fn apply_e_array(a: &TwoRowedArray) -> Option<TwoRowedArray> {
    let red = reduce_sigma(&sigma(a));
    let &(_, k) = red.iter().rev().find(|&&(c, _)| c == '-')?;
    let mut out = a.clone();
    out.set_x(k, out.x(k) + 1);
    out.set_y(k, out.y(k) - 1);
    Some(out)
}

pub fn eps_array(a: &TwoRowedArray) -> u32 {
    reduce_sigma(&sigma(a)).iter().filter(|&&(c, _)| c == '-').count() as u32
}

pub fn phi_array(a: &TwoRowedArray) -> u32 {
    reduce_sigma(&sigma(a)).iter().filter(|&&(c, _)| c == '+').count() as u32
}

/// An array is reduced when no column pair carries a full block:
/// `min(x_{k+1}, y_k) <= 1` for all `k`.
pub fn is_reduced(a: &TwoRowedArray) -> bool {
    (-1..=a.max_col()).all(|k| a.x(k + 1).min(a.y(k)) <= 1)
}

/// Write the array as a reduced one plus block summands; the reduced part is
/// unique.
pub fn reduced_decompose(a: &TwoRowedArray) -> (TwoRowedArray, Vec<(i64, u32)>) {
    let mut out = a.clone();
    let mut blocks = Vec::new();
    for k in -1..=a.max_col() {
        let mn = out.x(k + 1).min(out.y(k));
        if mn >= 2 {
            let amount = half(mn);
            out.set_x(k + 1, out.x(k + 1) - 2 * amount);
            out.set_y(k, out.y(k) - 2 * amount);
            blocks.push((k, amount));
        }
    }
    debug_assert!(is_reduced(&out));
    (out, blocks)
}

/// Gluing for `i > m`: stack the transformed counters on top of the columns
/// of the insertion part, letters `i` above `i+1`.
pub fn glue_gt_m(p: &Tableau, fx: &TwoRowedArray, i: Letter) -> Tableau {
    let alphabet = p.alphabet;
    let width = (p.width() as i64).max(fx.max_col()).max(0) as usize;
    let mut cols: Vec<Vec<Letter>> = Vec::new();
    for k in 1..=width {
        let mut col = Vec::new();
        col.extend(std::iter::repeat(i).take(fx.x(k as i64) as usize));
        col.extend(std::iter::repeat(i + 1).take(fx.y(k as i64) as usize));
        if k <= p.width() {
            col.extend(p.cols()[k - 1].iter().copied());
        }
        cols.push(col);
    }
    while cols.last().map(|c| c.is_empty()).unwrap_or(false) {
        cols.pop();
    }
    Tableau::from_cols(alphabet, cols)
}

/// One two-row strip of the low-index gluing: right-aligned rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strip {
    /// Row `2l` of the final tableau, left to right.
    pub upper: Vec<Letter>,
    /// Row `2l-1`, left to right.
    pub lower: Vec<Letter>,
}

impl Strip {
    pub fn width(&self) -> usize {
        self.upper.len().max(self.lower.len())
    }

    fn leading_dominoes(&self, i: Letter) -> usize {
        if self.upper.len() != self.lower.len() {
            return 0;
        }
        self.upper
            .iter()
            .zip(&self.lower)
            .take_while(|&(&u, &l)| u == i && l == i + 1)
            .count()
    }
}

/// Gluing for `i < m`. Splits the recording into two-row strips, rectifies
/// each, glues them back onto the matching strips of the insertion part, and
/// migrates the vertical dominoes downward whenever a strip overflows the
/// width allowance coming from the deeper triangle's shape.
/// Returns the chain of partial tableaux, outermost strip first; the last one
/// is the full gluing.
pub fn glue_lt_m(
    p: &Tableau,
    q: &BTreeMap<(usize, usize), Letter>,
    b: u32,
    mu: &Partition,
    i: Letter,
) -> Vec<Tableau> {
    let alphabet = p.alphabet;
    let nrows = p.height(1);
    // the dominoes enter one strip above the insertion part and migrate down
    let levels = nrows / 2 + 1;
    let qbar: Vec<(Vec<Letter>, Vec<Letter>)> = (1..=levels)
        .map(|l| rectify_strip(alphabet, q, 2 * l - 1, 2 * l))
        .collect();
    let pstrip: Vec<(Vec<Letter>, Vec<Letter>)> = (1..=levels)
        .map(|l| {
            let row = |r: usize| -> Vec<Letter> {
                let mut v: Vec<Letter> =
                    (1..=p.width()).filter_map(|k| p.entry(k, r)).collect();
                v.reverse();
                v
            };
            (row(2 * l), row(2 * l - 1))
        })
        .collect();

    let glue_strip = |l: usize, dominoes: usize| -> Strip {
        let (q1, q2) = &qbar[l - 1];
        let (pu, pl) = &pstrip[l - 1];
        let mut upper: Vec<Letter> = std::iter::repeat(i).take(dominoes).collect();
        upper.extend(q1.iter().copied());
        upper.extend(pu.iter().copied());
        let mut lower: Vec<Letter> = std::iter::repeat(i + 1).take(dominoes).collect();
        lower.extend(q2.iter().copied());
        lower.extend(pl.iter().copied());
        Strip { upper, lower }
    };

    let mut strips: Vec<Strip> = Vec::new(); // strips[l-1] for levels l..=levels
    let mut chain = Vec::new();
    strips.push(glue_strip(levels, b as usize));
    chain.push(assemble(alphabet, &strips));
    for l in (1..levels).rev() {
        // move overflow dominoes from the strip above down to this one
        let above = strips.first_mut().unwrap();
        let allowance = mu.part(2 * l - 1).saturating_sub(mu.part(2 * l + 1)) as usize;
        let excess = above.width().saturating_sub(allowance);
        let moved = excess.min(above.leading_dominoes(i));
        above.upper.drain(..moved);
        above.lower.drain(..moved);
        strips.insert(0, glue_strip(l, moved));
        chain.push(assemble(alphabet, &strips));
    }
    chain
}

fn rectify_strip(
    alphabet: Alphabet,
    q: &BTreeMap<(usize, usize), Letter>,
    low_row: usize,
    high_row: usize,
) -> (Vec<Letter>, Vec<Letter>) {
    let select = |r: usize| -> Vec<(usize, Letter)> {
        // cells of the recording in row r, keyed by column from the right
        let mut v: Vec<(usize, Letter)> = q
            .iter()
            .filter(|(&(_, row), _)| row == r)
            .map(|(&(k, _), &x)| (k, x))
            .collect();
        v.sort();
        v
    };
    let hi = select(high_row);
    let lo = select(low_row);
    if hi.is_empty() && lo.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let maxk = hi
        .iter()
        .chain(lo.iter())
        .map(|&(k, _)| k)
        .max()
        .unwrap();
    // plane columns left to right: column from the right k maps to maxk - k
    let to_row = |cells: &[(usize, Letter)]| -> Option<(usize, Vec<Letter>)> {
        if cells.is_empty() {
            return None;
        }
        let mut m: Vec<(usize, Letter)> =
            cells.iter().map(|&(k, x)| (maxk - k, x)).collect();
        m.sort();
        let off = m[0].0;
        assert!(
            m.iter().enumerate().all(|(idx, &(c, _))| c == off + idx),
            "recording strip row is not contiguous"
        );
        Some((off, m.into_iter().map(|(_, x)| x).collect()))
    };
    let mut rows = Vec::new();
    if let Some(r) = to_row(&hi) {
        rows.push(r);
    }
    if let Some(r) = to_row(&lo) {
        rows.push(r);
    }
    let skew = SkewTableau::new(alphabet, rows);
    let normal = skew.rectify();
    let r = normal.rows();
    (
        r.first().cloned().unwrap_or_default(),
        r.get(1).cloned().unwrap_or_default(),
    )
}

fn assemble(alphabet: Alphabet, strips: &[Strip]) -> Tableau {
    let mut rows: Vec<Vec<Letter>> = Vec::new();
    for s in strips {
        rows.push(s.lower.clone());
        rows.push(s.upper.clone());
    }
    while rows.last().map(|r| r.is_empty()).unwrap_or(false) {
        rows.pop();
    }
    assert!(
        rows.iter().all(|r| !r.is_empty()),
        "interior strip row vanished during gluing"
    );
    Tableau::from_rows_bottom_first(alphabet, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_map_worked_example() {
        // x = (3,2), y = (2,1) at k = 1,0
        let a = TwoRowedArray::from_cols(&[(1, 3, 2), (0, 2, 1)]);
        let fa = f_map(&a);
        assert_eq!(
            fa,
            TwoRowedArray::from_cols(&[(2, 4, 2), (1, 0, 1), (0, 1, 0)])
        );
        let s = sigma(&a);
        let compact: String = s.iter().map(|&(c, _)| c).collect();
        assert_eq!(compact, "--+++-++");
        let red = reduce_sigma(&s);
        let compact: String = red.iter().map(|&(c, _)| c).collect();
        assert_eq!(compact, "--++++");
        let f = apply_f_array(&a).unwrap();
        assert_eq!(f, TwoRowedArray::from_cols(&[(1, 2, 3), (0, 2, 1)]));
        // the transform commutes with the operator here
        assert_eq!(f_map(&f), apply_f_array(&fa).unwrap());
    }

    #[test]
    fn f_map_second_example() {
        // x = (1,1), y = (1,-) at k = 1,0 with y_{-1} = 1
        let mut a = TwoRowedArray::from_cols(&[(1, 1, 0), (0, 1, 1)]);
        a.set_y(-1, 1);
        let fa = f_map(&a);
        let mut expect = TwoRowedArray::from_cols(&[(2, 2, 0), (1, 0, 1)]);
        expect.set_y(-1, 1);
        assert_eq!(fa, expect);
        let s: String = sigma(&a).iter().map(|&(c, _)| c).collect();
        assert_eq!(s, "+-+-");
        let sf: String = sigma(&fa).iter().map(|&(c, _)| c).collect();
        assert_eq!(sf, "++--");
        assert!(reduce_sigma(&sigma(&a)).is_empty());
        assert!(reduce_sigma(&sigma(&fa)).is_empty());
    }

    #[test]
    fn zero_array_behavior() {
        let z = TwoRowedArray::new();
        assert!(sigma(&z).is_empty());
        assert_eq!(apply_f_array(&z), None);
        assert!(f_map(&z).is_zero());
    }

    #[test]
    fn block_transport() {
        // F(X_k(2a)) = X_{k+2}(2a)
        for k in -1..4 {
            for a in 1..3 {
                assert_eq!(
                    f_map(&TwoRowedArray::block(k, 2 * a)),
                    TwoRowedArray::block(k + 2, 2 * a)
                );
            }
        }
    }

    #[test]
    fn decompose_roundtrip() {
        let r = TwoRowedArray::from_cols(&[(2, 1, 0), (1, 1, 1)]);
        assert!(is_reduced(&r));
        assert_eq!(reduced_decompose(&r), (r.clone(), vec![]));
        let x = r.plus(&TwoRowedArray::block(3, 4));
        let (red, blocks) = reduced_decompose(&x);
        assert_eq!(red, r);
        assert_eq!(blocks, vec![(3, 2)]);
    }
}
