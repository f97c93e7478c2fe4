//! Matrix crystals: multiplicity arrays over the odd-nilradical root cells,
//! their biword codecs, type-0 operators, the symmetric-matrix word operators
//! for types b and c, and the region decomposition with the direct type-d
//! rules.

use crate::alphabet::{Alphabet, GType, Letter};
use crate::weight::Weight;
use crate::word::{self, FactorStats};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Cell `(i, j)` with `i <= j`.
pub type Cell = (Letter, Letter);

/// The root cells for a given type and alphabet: all pairs `i < j`, plus the
/// diagonal cells allowed by the type (all for b, even letters for c, odd
/// letters for d).
pub fn root_cells(g: GType, alphabet: &Alphabet) -> Vec<Cell> {
    let n = alphabet.size();
    let mut cells = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            if i == j {
                let diag_ok = match g {
                    GType::B => true,
                    GType::C => alphabet.is_even(i),
                    GType::D => alphabet.is_odd(i),
                };
                if !diag_ok {
                    continue;
                }
            }
            cells.push((i, j));
        }
    }
    cells
}

/// A multiplicity array over the root cells.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct MatrixElement {
    pub g: GType,
    pub alphabet: Alphabet,
    entries: BTreeMap<Cell, u32>,
}

impl MatrixElement {
    pub fn zero(g: GType, alphabet: Alphabet) -> Self {
        MatrixElement { g, alphabet, entries: BTreeMap::new() }
    }

    pub fn from_entries(g: GType, alphabet: Alphabet, entries: &[(Letter, Letter, u32)]) -> Self {
        let mut m = MatrixElement::zero(g, alphabet);
        for &(i, j, c) in entries {
            m.set((i, j), c);
        }
        m
    }

    pub fn get(&self, cell: Cell) -> u32 {
        self.entries.get(&cell).copied().unwrap_or(0)
    }

    pub fn set(&mut self, cell: Cell, v: u32) {
        assert!(self.cell_allowed(cell), "cell {:?} not a root cell", cell);
        assert!(
            v <= 1 || self.alphabet.parity(cell.0) == self.alphabet.parity(cell.1),
            "mixed-parity cell {:?} is 0/1",
            cell
        );
        if v == 0 {
            self.entries.remove(&cell);
        } else {
            self.entries.insert(cell, v);
        }
    }

    pub fn add(&mut self, cell: Cell, dv: i64) {
        let v = self.get(cell) as i64 + dv;
        assert!(v >= 0, "negative multiplicity at {:?}", cell);
        self.set(cell, v as u32);
    }

    pub fn cell_allowed(&self, (i, j): Cell) -> bool {
        self.alphabet.contains(i)
            && self.alphabet.contains(j)
            && i <= j
            && (i != j
                || match self.g {
                    GType::B => true,
                    GType::C => self.alphabet.is_even(i),
                    GType::D => self.alphabet.is_odd(i),
                })
    }

    pub fn support(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.entries.iter().map(|(&c, &v)| (c, v))
    }

    pub fn total(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Weight as a sum of root contributions: `-(delta_i + delta_j)` per unit
    /// off the diagonal and `-(2/r) delta_i` on it. Level 0.
    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero(&self.alphabet);
        for (&(i, j), &c) in &self.entries {
            let c = c as i64;
            if i == j {
                w.delta[i as usize - 1] -= c * 2 / self.g.r();
            } else {
                w.delta[i as usize - 1] -= c;
                w.delta[j as usize - 1] -= c;
            }
        }
        w
    }

    /// The cell raised/lowered by the type-0 operators.
    pub fn alpha0_cell(&self) -> Cell {
        match self.g {
            GType::B | GType::C => (1, 1),
            GType::D => (1, 2),
        }
    }

    pub fn f0(&self) -> MatrixElement {
        let mut m = self.clone();
        let cell = m.alpha0_cell();
        m.add(cell, 1);
        m
    }

    pub fn e0(&self) -> Option<MatrixElement> {
        let cell = self.alpha0_cell();
        if self.get(cell) == 0 {
            return None;
        }
        let mut m = self.clone();
        m.add(cell, -1);
        Some(m)
    }

    /// Biword in the biletter order: tops ascending; within an even top the
    /// bottoms descend, within an odd top they ascend.
    pub fn to_biword(&self) -> Biword {
        let mut pairs: Vec<Cell> = Vec::new();
        for (&(i, j), &c) in &self.entries {
            for _ in 0..c {
                pairs.push((i, j));
            }
        }
        pairs.sort_by(|a, b| biletter_cmp(&self.alphabet, *a, *b));
        Biword {
            top: pairs.iter().map(|p| p.0).collect(),
            bottom: pairs.iter().map(|p| p.1).collect(),
        }
    }

    pub fn from_biword(g: GType, alphabet: Alphabet, bw: &Biword) -> Result<MatrixElement, String> {
        if bw.top.len() != bw.bottom.len() {
            return Err("biword rows differ in length".into());
        }
        let pairs: Vec<Cell> = bw.top.iter().zip(&bw.bottom).map(|(&a, &b)| (a, b)).collect();
        for w in pairs.windows(2) {
            if biletter_cmp(&alphabet, w[0], w[1]) == std::cmp::Ordering::Greater {
                return Err(format!("biletters out of order: {:?} before {:?}", w[0], w[1]));
            }
        }
        let mut m = MatrixElement::zero(g, alphabet);
        for (i, j) in pairs {
            if !m.cell_allowed((i, j)) {
                return Err(format!("({i},{j}) is not a root cell for type {g}"));
            }
            if m.get((i, j)) == 1 && alphabet.parity(i) != alphabet.parity(j) {
                return Err(format!("mixed-parity biletter ({i},{j}) repeated"));
            }
            m.add((i, j), 1);
        }
        Ok(m)
    }
}

fn biletter_cmp(alphabet: &Alphabet, a: Cell, b: Cell) -> std::cmp::Ordering {
    a.0.cmp(&b.0).then_with(|| {
        if alphabet.is_even(a.0) {
            b.1.cmp(&a.1)
        } else {
            a.1.cmp(&b.1)
        }
    })
}

/// Two-line encoding of a multiplicity array.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Biword {
    pub top: Vec<Letter>,
    pub bottom: Vec<Letter>,
}

impl Biword {
    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    pub fn pairs(&self) -> Vec<Cell> {
        self.top.iter().zip(&self.bottom).map(|(&a, &b)| (a, b)).collect()
    }
}

/// Full square matrix picture for types b and c, `m_ii = 2 c_ii / r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymMatrix {
    pub alphabet: Alphabet,
    pub entries: Vec<Vec<u32>>,
}

impl SymMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> SymMatrix {
        let n = self.size();
        let mut t = vec![vec![0; n]; n];
        #[allow(clippy::needless_range_loop)]
        for i in 0..n {
            for j in 0..n {
                t[j][i] = self.entries[i][j];
            }
        }
        SymMatrix { alphabet: self.alphabet, entries: t }
    }

    /// The concatenated column word `w^1 ... w^{m+n}` together with the
    /// column index of each letter. Even columns read as one-row tableaux
    /// (letters descending), odd ones as one-column tableaux (ascending).
    pub fn column_word(&self) -> Vec<(Letter, usize)> {
        let n = self.size();
        let mut w = Vec::new();
        for j in 0..n {
            let letters: Box<dyn Iterator<Item = usize>> =
                if self.alphabet.is_even(j as Letter + 1) {
                    Box::new((0..n).rev())
                } else {
                    Box::new(0..n)
                };
            for i in letters {
                for _ in 0..self.entries[i][j] {
                    w.push((i as Letter + 1, j));
                }
            }
        }
        w
    }

    /// Word crystal operator on the matrix through its column word.
    pub fn apply_word_f(&self, i: u8) -> Option<SymMatrix> {
        let tagged = self.column_word();
        let wordvec: Vec<Letter> = tagged.iter().map(|&(x, _)| x).collect();
        word::f_position(&self.alphabet, &wordvec, i).map(|p| {
            let (x, j) = tagged[p];
            let mut m = self.clone();
            m.entries[x as usize - 1][j] -= 1;
            m.entries[x as usize][j] += 1;
            m
        })
    }

    pub fn apply_word_e(&self, i: u8) -> Option<SymMatrix> {
        let tagged = self.column_word();
        let wordvec: Vec<Letter> = tagged.iter().map(|&(x, _)| x).collect();
        word::e_position(&self.alphabet, &wordvec, i).map(|p| {
            let (x, j) = tagged[p];
            let mut m = self.clone();
            m.entries[x as usize - 1][j] -= 1;
            m.entries[x as usize - 2][j] += 1;
            m
        })
    }
}

/// Symmetric picture of a type b or c element.
pub fn symmetrize(c: &MatrixElement) -> SymMatrix {
    assert!(matches!(c.g, GType::B | GType::C), "symmetrize is for types b and c");
    let n = c.alphabet.size() as usize;
    let mut m = vec![vec![0u32; n]; n];
    for (&(i, j), &v) in &c.entries {
        let (i, j) = (i as usize - 1, j as usize - 1);
        if i == j {
            m[i][i] = 2 * v / c.g.r() as u32;
        } else {
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    SymMatrix { alphabet: c.alphabet, entries: m }
}

/// Back from the symmetric picture; fails if a diagonal entry contradicts the
/// type's parity bookkeeping.
pub fn de_symmetrize(g: GType, m: &SymMatrix) -> Result<MatrixElement, String> {
    let mut c = MatrixElement::zero(g, m.alphabet);
    let n = m.size();
    for i in 0..n {
        for j in i..n {
            if m.entries[i][j] != m.entries[j][i] {
                return Err("matrix is not symmetric".into());
            }
            let v = m.entries[i][j];
            if v == 0 {
                continue;
            }
            let cell = (i as Letter + 1, j as Letter + 1);
            if i == j {
                match g {
                    GType::B => c.set(cell, v),
                    GType::C => {
                        if !c.cell_allowed(cell) {
                            return Err(format!("type c forbids diagonal {:?}", cell));
                        }
                        if v % 2 != 0 {
                            return Err(format!("odd diagonal {v} in the type-c picture"));
                        }
                        c.set(cell, v / 2);
                    }
                    GType::D => unreachable!(),
                }
            } else {
                if !c.cell_allowed(cell) {
                    return Err(format!("{:?} is not a root cell", cell));
                }
                if v > 1 && m.alphabet.parity(cell.0) != m.alphabet.parity(cell.1) {
                    return Err(format!("mixed-parity cell {:?} exceeds 1", cell));
                }
                c.set(cell, v);
            }
        }
    }
    Ok(c)
}

/// Lowering operator for types b and c: the word operator followed by its
/// starred (transposed) copy.
pub fn bc_f(c: &MatrixElement, i: u8) -> Option<MatrixElement> {
    assert!(i >= 1 && i < c.alphabet.size());
    let m = symmetrize(c);
    let m = m.apply_word_f(i)?;
    let m = m.transpose().apply_word_f(i)?.transpose();
    Some(de_symmetrize(c.g, &m).unwrap_or_else(|e| panic!("de-symmetrization failed: {e}")))
}

pub fn bc_e(c: &MatrixElement, i: u8) -> Option<MatrixElement> {
    assert!(i >= 1 && i < c.alphabet.size());
    let m = symmetrize(c);
    let m = m.apply_word_e(i)?;
    let m = m.transpose().apply_word_e(i)?.transpose();
    Some(de_symmetrize(c.g, &m).unwrap_or_else(|e| panic!("de-symmetrization failed: {e}")))
}

// ---------------------------------------------------------------------------
// Regions (type d).

/// Cells `(k, l)` with `k >= i`.
pub fn region_big_triangle(c: &MatrixElement, i: u8) -> Vec<Cell> {
    root_cells(c.g, &c.alphabet).into_iter().filter(|&(k, _)| k >= i).collect()
}

/// The small triangle at index `i`.
pub fn region_small_triangle(c: &MatrixElement, i: u8) -> Vec<Cell> {
    let m = c.alphabet.m;
    let mut cells = vec![(i, i + 1)];
    if i >= m {
        cells.push((i + 1, i + 1));
    }
    if i > m {
        cells.push((i, i));
    }
    cells.retain(|&cell| c.cell_allowed(cell));
    cells
}

/// The lozenge: rows `i`, `i+1` with columns at least `i+2`.
pub fn region_lozenge(c: &MatrixElement, i: u8) -> Vec<Cell> {
    root_cells(c.g, &c.alphabet)
        .into_iter()
        .filter(|&(k, l)| (k == i || k == i + 1) && l >= i + 2)
        .collect()
}

/// Restrict the support to the given cells.
pub fn restrict(c: &MatrixElement, cells: &[Cell]) -> MatrixElement {
    let mut out = MatrixElement::zero(c.g, c.alphabet);
    for cell in cells {
        let v = c.get(*cell);
        if v > 0 {
            out.set(*cell, v);
        }
    }
    out
}

pub fn supported_in(c: &MatrixElement, cells: &[Cell]) -> bool {
    c.support().all(|(cell, _)| cells.contains(&cell))
}

/// Split into the complement, small triangle, lozenge, and next big triangle.
pub fn region_split(
    c: &MatrixElement,
    i: u8,
) -> (MatrixElement, MatrixElement, MatrixElement, MatrixElement) {
    let big = region_big_triangle(c, i);
    let tri = region_small_triangle(c, i);
    let loz = region_lozenge(c, i);
    let next = region_big_triangle(c, i + 2);
    let all = root_cells(c.g, &c.alphabet);
    let comp: Vec<Cell> = all.into_iter().filter(|cell| !big.contains(cell)).collect();
    (restrict(c, &comp), restrict(c, &tri), restrict(c, &loz), restrict(c, &next))
}

// ---------------------------------------------------------------------------
// Direct type-d rules on supports inside a big triangle.

/// The `i = m` rule. `k0` is the first column with a mark in row `m`, `k1`
/// the first with one in row `m+1`; the operator moves the `(m, k0)` mark
/// down one row when `k1 >= k0`.
pub fn d_f_m(c: &MatrixElement) -> Option<MatrixElement> {
    assert_eq!(c.g, GType::D);
    let m = c.alphabet.m;
    let n = c.alphabet.size();
    let k0 = ((m + 1)..=n).find(|&k| c.get((m, k)) == 1);
    let k0 = k0?;
    let k1 = ((m + 1)..=n).find(|&k| c.get((m + 1, k)) != 0);
    if let Some(k1) = k1 {
        if k1 < k0 {
            return None;
        }
    }
    let mut out = c.clone();
    out.add((m, k0), -1);
    out.add((m + 1, k0), 1);
    Some(out)
}

/// Inverse of `d_f_m`.
pub fn d_e_m(c: &MatrixElement) -> Option<MatrixElement> {
    assert_eq!(c.g, GType::D);
    let m = c.alphabet.m;
    let n = c.alphabet.size();
    let k0 = ((m + 1)..=n).find(|&k| c.get((m + 1, k)) != 0)?;
    let k1 = ((m + 1)..=n).find(|&k| c.get((m, k)) == 1);
    if let Some(k1) = k1 {
        if k1 <= k0 {
            return None;
        }
    }
    if c.get((m, k0)) != 0 {
        return None;
    }
    let mut out = c.clone();
    out.add((m + 1, k0), -1);
    out.add((m, k0), 1);
    Some(out)
}

/// Triangle data `(a, b, c) = (c_(i,i), c_(i,i+1), c_(i+1,i+1))` for `i > m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangleData {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl TriangleData {
    pub fn f(self) -> Option<TriangleData> {
        let TriangleData { a, b, c } = self;
        if b % 2 == 0 && a >= 1 {
            Some(TriangleData { a: a - 1, b: b + 1, c })
        } else if b % 2 == 1 {
            Some(TriangleData { a, b: b - 1, c: c + 1 })
        } else {
            None
        }
    }

    pub fn e(self) -> Option<TriangleData> {
        let TriangleData { a, b, c } = self;
        if b % 2 == 1 {
            Some(TriangleData { a: a + 1, b: b - 1, c })
        } else if c >= 1 {
            Some(TriangleData { a, b: b + 1, c: c - 1 })
        } else {
            None
        }
    }

    pub fn stats(self) -> FactorStats {
        FactorStats { eps: 2 * self.c + self.b % 2, phi: 2 * self.a + self.b % 2 }
    }
}

fn triangle_of(c: &MatrixElement, i: u8) -> TriangleData {
    TriangleData {
        a: c.get((i, i)),
        b: c.get((i, i + 1)),
        c: c.get((i + 1, i + 1)),
    }
}

fn set_triangle(c: &mut MatrixElement, i: u8, t: TriangleData) {
    c.set((i, i), t.a);
    c.set((i, i + 1), t.b);
    c.set((i + 1, i + 1), t.c);
}

/// Word of the lozenge part: columns `l >= i+2` in increasing order; an odd
/// column contributes its `i`s then its `i+1`s (column reading), an even one
/// the reverse (row reading). Returns `(letter, column)` pairs.
fn lozenge_word(c: &MatrixElement, i: u8) -> Vec<(Letter, Letter)> {
    let n = c.alphabet.size();
    let mut w = Vec::new();
    for l in (i + 2)..=n {
        let xi = c.get((i, l));
        let xi1 = c.get((i + 1, l));
        if c.alphabet.is_odd(l) {
            w.extend(std::iter::repeat((i, l)).take(xi as usize));
            w.extend(std::iter::repeat((i + 1, l)).take(xi1 as usize));
        } else {
            w.extend(std::iter::repeat((i + 1, l)).take(xi1 as usize));
            w.extend(std::iter::repeat((i, l)).take(xi as usize));
        }
    }
    w
}

fn lozenge_stats(c: &MatrixElement, i: u8) -> FactorStats {
    let tagged = lozenge_word(c, i);
    let wv: Vec<Letter> = tagged.iter().map(|&(x, _)| x).collect();
    FactorStats {
        eps: word::eps_word(&c.alphabet, &wv, i),
        phi: word::phi_word(&c.alphabet, &wv, i),
    }
}

fn lozenge_apply(c: &MatrixElement, i: u8, lower: bool) -> Option<MatrixElement> {
    let tagged = lozenge_word(c, i);
    let wv: Vec<Letter> = tagged.iter().map(|&(x, _)| x).collect();
    let pos = if lower {
        word::f_position(&c.alphabet, &wv, i)
    } else {
        word::e_position(&c.alphabet, &wv, i)
    }?;
    let (x, l) = tagged[pos];
    let mut out = c.clone();
    if lower {
        out.add((x, l), -1);
        out.add((x + 1, l), 1);
    } else {
        out.add((x, l), -1);
        out.add((x - 1, l), 1);
    }
    Some(out)
}

/// Direct type-d operator on a support inside the big triangle at `i`, for
/// `i != 0, m`: the triangle, lozenge and deeper-triangle factors combine by
/// the tensor rule with the orientation of the index.
pub fn d_f_on_big_triangle(c: &MatrixElement, i: u8) -> Option<MatrixElement> {
    d_op_on_big_triangle(c, i, true)
}

pub fn d_e_on_big_triangle(c: &MatrixElement, i: u8) -> Option<MatrixElement> {
    d_op_on_big_triangle(c, i, false)
}

fn d_op_on_big_triangle(c: &MatrixElement, i: u8, lower: bool) -> Option<MatrixElement> {
    assert_eq!(c.g, GType::D);
    let m = c.alphabet.m;
    assert!(i >= 1 && i != m && i < c.alphabet.size());
    assert!(
        supported_in(c, &region_big_triangle(c, i)),
        "support escapes the big triangle at {i}"
    );
    let tri = triangle_of(c, i);
    let tri_stats = if i > m { tri.stats() } else { FactorStats { eps: 0, phi: 0 } };
    let loz_stats = lozenge_stats(c, i);
    let rest_stats = FactorStats { eps: 0, phi: 0 };
    let factors = [tri_stats, loz_stats, rest_stats];
    let side = tensor_index(&c.alphabet, i, &factors, lower)?;
    match side {
        0 => {
            assert!(i > m, "trivial triangle factor selected");
            let t = if lower { tri.f() } else { tri.e() }?;
            let mut out = c.clone();
            set_triangle(&mut out, i, t);
            Some(out)
        }
        1 => lozenge_apply(c, i, lower),
        _ => None,
    }
}

/// Acting factor of an n-fold tensor, or `None` for the zero element.
pub fn tensor_index(
    alphabet: &Alphabet,
    i: u8,
    factors: &[FactorStats],
    lower: bool,
) -> Option<usize> {
    match factors {
        [] => None,
        [only] => {
            let can = if lower { only.phi > 0 } else { only.eps > 0 };
            can.then_some(0)
        }
        [head, tail @ ..] => {
            let rest = tail
                .iter()
                .copied()
                .reduce(|a, b| word::tensor_stats(alphabet, i, a, b))
                .unwrap();
            let side = if lower {
                word::tensor_f_side(alphabet, i, *head, rest)
            } else {
                word::tensor_e_side(alphabet, i, *head, rest)
            }?;
            if side == 0 {
                Some(0)
            } else {
                tensor_index(alphabet, i, tail, lower).map(|k| k + 1)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_examples() {
        let a = Alphabet::new(2, 2);
        let z = MatrixElement::zero(GType::C, a);
        assert_eq!(z.weight(), Weight::zero(&a));
        let c = MatrixElement::from_entries(GType::C, a, &[(1, 1, 1)]);
        assert_eq!(c.weight().delta, vec![-2, 0, 0, 0]);
        let b = MatrixElement::from_entries(GType::B, a, &[(1, 1, 1)]);
        assert_eq!(b.weight().delta, vec![-1, 0, 0, 0]);
    }

    #[test]
    fn biword_roundtrip_and_order() {
        let a = Alphabet::new(4, 4);
        let c = MatrixElement::from_entries(
            GType::D,
            a,
            &[(2, 8, 1), (3, 4, 3), (4, 6, 1), (5, 7, 1)],
        );
        let bw = c.to_biword();
        assert_eq!(bw.top, vec![2, 3, 3, 3, 4, 5]);
        assert_eq!(bw.bottom, vec![8, 4, 4, 4, 6, 7]);
        let back = MatrixElement::from_biword(GType::D, a, &bw).unwrap();
        assert_eq!(back, c);

        let single = MatrixElement::from_entries(GType::D, a, &[(2, 8, 1)]);
        let bw = single.to_biword();
        assert_eq!((bw.top, bw.bottom), (vec![2], vec![8]));
    }

    #[test]
    fn f0_examples() {
        let a = Alphabet::new(2, 2);
        let z = MatrixElement::zero(GType::C, a);
        assert_eq!(z.e0(), None);
        let up = z.f0();
        assert_eq!(up.get((1, 1)), 1);
        assert_eq!(up.e0().unwrap(), z);
        let d = MatrixElement::zero(GType::D, a).f0();
        assert_eq!(d.get((1, 2)), 1);
    }

    #[test]
    fn symmetrize_diagonals() {
        let a = Alphabet::new(2, 2);
        let c = MatrixElement::from_entries(GType::C, a, &[(1, 1, 1)]);
        assert_eq!(symmetrize(&c).entries[0][0], 2);
        let b = MatrixElement::from_entries(GType::B, a, &[(1, 1, 3)]);
        assert_eq!(symmetrize(&b).entries[0][0], 3);
        let z = MatrixElement::zero(GType::C, a);
        assert!(symmetrize(&z).entries.iter().flatten().all(|&v| v == 0));
    }

    #[test]
    fn bc_single_entry_check() {
        // c with c_(1,2) = 1, i = 1 lowers to c_(2,2) = 1
        let a = Alphabet::new(2, 1);
        let c = MatrixElement::from_entries(GType::C, a, &[(1, 2, 1)]);
        let f = bc_f(&c, 1).unwrap();
        assert_eq!(f, MatrixElement::from_entries(GType::C, a, &[(2, 2, 1)]));
        assert_eq!(bc_e(&f, 1).unwrap(), c);
    }

    #[test]
    fn region_split_example() {
        // support split at i = 3 over d_{2|4}
        let a = Alphabet::new(2, 4);
        let c = MatrixElement::from_entries(
            GType::D,
            a,
            &[(3, 4, 1), (3, 5, 1), (3, 6, 2), (4, 4, 1), (4, 6, 1), (5, 5, 1)],
        );
        let (comp, tri, loz, next) = region_split(&c, 3);
        assert!(comp.is_zero());
        assert_eq!(triangle_of(&tri, 3), TriangleData { a: 0, b: 1, c: 1 });
        assert_eq!(loz.total(), 4);
        assert_eq!(next.get((5, 5)), 1);
        let back: u32 = comp.total() + tri.total() + loz.total() + next.total();
        assert_eq!(back, c.total());
    }

    #[test]
    fn triangle_rule_branches() {
        assert_eq!(
            TriangleData { a: 1, b: 0, c: 0 }.f(),
            Some(TriangleData { a: 0, b: 1, c: 0 })
        );
        assert_eq!(
            TriangleData { a: 0, b: 1, c: 5 }.f(),
            Some(TriangleData { a: 0, b: 0, c: 6 })
        );
        assert_eq!(TriangleData { a: 0, b: 0, c: 3 }.f(), None);
    }

    #[test]
    fn d_f_m_cases() {
        let a = Alphabet::new(4, 3);
        // k0 = 6, k1 = 5: zero
        let c1 = MatrixElement::from_entries(
            GType::D,
            a,
            &[(4, 7, 1), (4, 6, 1), (5, 5, 1), (5, 7, 2), (6, 6, 1)],
        );
        assert_eq!(d_f_m(&c1), None);
        // k0 = k1 = 6: move the (4,6) mark down
        let c2 = MatrixElement::from_entries(
            GType::D,
            a,
            &[(4, 7, 1), (4, 6, 1), (5, 6, 1), (5, 7, 2), (6, 6, 1)],
        );
        let f = d_f_m(&c2).unwrap();
        assert_eq!(f.get((4, 6)), 0);
        assert_eq!(f.get((5, 6)), 2);
        assert_eq!(d_e_m(&f).unwrap(), c2);
        assert_eq!(d_f_m(&MatrixElement::zero(GType::D, a)), None);
    }
}
