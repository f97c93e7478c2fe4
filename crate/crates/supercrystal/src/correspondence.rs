//! The insertion correspondences between multiplicity arrays and anti-normal
//! tableaux: symmetric-matrix RSK for types b and c, the Burge-style biword
//! insertion for type d, their inverses, and the insertion/recording pair
//! used by the gluing algorithms.

use crate::alphabet::{Alphabet, GType, Letter};
use crate::matrix::{de_symmetrize, symmetrize, Biword, MatrixElement, SymMatrix};
use crate::tableau::Tableau;
use std::collections::BTreeMap;

/// Insertion tableau for types b and c: serialize the symmetric picture into
/// its column word and insert it back to front.
pub fn kappa_bc(c: &MatrixElement) -> Tableau {
    assert!(matches!(c.g, GType::B | GType::C));
    let m = symmetrize(c);
    insert_column_word(&m)
}

fn insert_column_word(m: &SymMatrix) -> Tableau {
    let word: Vec<Letter> = m.column_word().iter().map(|&(x, _)| x).collect();
    let mut t = Tableau::empty(m.alphabet);
    for &x in word.iter().rev() {
        t = t.column_insert(x).0;
    }
    t
}

/// Burge insertion tableau for type d: fold the biword from its last biletter
/// to its first.
pub fn kappa_d(c: &MatrixElement) -> Tableau {
    assert_eq!(c.g, GType::D);
    let bw = c.to_biword();
    kappa_d_biword(&c.alphabet, &bw)
}

pub fn kappa_d_biword(alphabet: &Alphabet, bw: &Biword) -> Tableau {
    let mut t = Tableau::empty(*alphabet);
    for (top, bottom) in bw.pairs().into_iter().rev() {
        t = t.burge_insert(top, bottom);
    }
    t
}

/// Type-agnostic forward map.
pub fn kappa(c: &MatrixElement) -> Tableau {
    match c.g {
        GType::B | GType::C => kappa_bc(c),
        GType::D => kappa_d(c),
    }
}

/// Inverse displacement: the letter returning from the left displaces the
/// topmost entry `w` with `w > y` (`y` odd) or `w >= y` (`y` even).
fn unbump_from(t_cols: &mut Vec<Vec<Letter>>, alphabet: &Alphabet, start_col: usize) -> Letter {
    // extract the top of `start_col` (0-based from the right)
    let mut carry = t_cols[start_col].remove(0);
    if t_cols[start_col].is_empty() {
        t_cols.remove(start_col);
    }
    for k in (0..start_col).rev() {
        let col = &mut t_cols[k];
        let odd = alphabet.is_odd(carry);
        let hit = col
            .iter()
            .position(|&w| if odd { w > carry } else { w >= carry })
            .unwrap_or_else(|| panic!("inverse bumping found no target in column {k}"));
        std::mem::swap(&mut carry, &mut col[hit]);
    }
    carry
}

/// Inverse of the Burge insertion. Repeatedly removes the smallest entry
/// (leftmost occurrence when even, topmost when odd) and unbumps the entry
/// below it, emitting one biletter per round.
pub fn inverse_kappa_d(t: &Tableau) -> Result<MatrixElement, String> {
    let alphabet = t.alphabet;
    let mut cols: Vec<Vec<Letter>> = t.cols().to_vec();
    let mut tops = Vec::new();
    let mut bottoms = Vec::new();
    while !cols.is_empty() {
        let i0 = *cols.iter().flatten().min().unwrap();
        // locate the marker occurrence
        let col_idx = if alphabet.is_even(i0) {
            // leftmost = largest index from the right
            (0..cols.len())
                .rev()
                .find(|&k| cols[k].contains(&i0))
                .ok_or("marker vanished")?
        } else {
            // topmost: smallest distance from the top of the tallest columns;
            // rows from the bottom: maximize height - position
            let mut best: Option<(usize, usize)> = None; // (row from bottom, col)
            for (k, col) in cols.iter().enumerate() {
                if let Some(j) = col.iter().position(|&x| x == i0) {
                    let row = col.len() - j;
                    if best.map(|(r, _)| row > r).unwrap_or(true) {
                        best = Some((row, k));
                    }
                }
            }
            best.ok_or("marker vanished")?.1
        };
        if cols[col_idx][0] != i0 {
            return Err(format!(
                "entry {i0} is not at the top of its column; not in the image"
            ));
        }
        cols[col_idx].remove(0);
        if cols[col_idx].is_empty() {
            // the marker was a lone box: the cell below is missing
            return Err("recording letter had no box below it".into());
        }
        let j = unbump_from(&mut cols, &alphabet, col_idx);
        tops.push(i0);
        bottoms.push(j);
        // shape sanity: heights must still weakly decrease leftward
        for w in cols.windows(2) {
            if w[1].len() > w[0].len() {
                return Err("column heights broke during extraction".into());
            }
        }
    }
    let bw = Biword { top: tops, bottom: bottoms };
    MatrixElement::from_biword(GType::D, alphabet, &bw)
        .map_err(|e| format!("extracted stream is not a valid biword: {e}"))
}

/// Inverse of the symmetric-matrix RSK for types b and c. The recording
/// tableau of a symmetric matrix equals the insertion tableau, so a second
/// copy of the input drives the extraction order.
pub fn inverse_kappa_bc(t: &Tableau, g: GType) -> Result<MatrixElement, String> {
    assert!(matches!(g, GType::B | GType::C));
    let alphabet = t.alphabet;
    let nsz = alphabet.size() as usize;
    let mut m = vec![vec![0u32; nsz]; nsz];
    let mut p_cols: Vec<Vec<Letter>> = t.cols().to_vec();
    let mut q_cols: Vec<Vec<Letter>> = t.cols().to_vec();
    while !q_cols.is_empty() {
        let j0 = *q_cols.iter().flatten().min().unwrap();
        // the most recent box among those recorded j0
        let (col_idx, row) = if alphabet.is_even(j0) {
            // boxes marched southwest: last one is the leftmost
            let k = (0..q_cols.len())
                .rev()
                .find(|&k| q_cols[k].contains(&j0))
                .ok_or("recording letter vanished")?;
            let j = q_cols[k].iter().position(|&x| x == j0).unwrap();
            (k, q_cols[k].len() - j)
        } else {
            // boxes marched northeast: last one is the topmost
            let mut best: Option<(usize, usize)> = None;
            for (k, col) in q_cols.iter().enumerate() {
                if let Some(j) = col.iter().position(|&x| x == j0) {
                    let row = col.len() - j;
                    if best.map(|(r, _)| row > r).unwrap_or(true) {
                        best = Some((row, k));
                    }
                }
            }
            let (row, k) = best.ok_or("recording letter vanished")?;
            (k, row)
        };
        if q_cols[col_idx].len() != row {
            return Err(format!("recording letter {j0} is not a removable corner"));
        }
        q_cols[col_idx].remove(0);
        if q_cols[col_idx].is_empty() {
            q_cols.remove(col_idx);
        }
        if p_cols.get(col_idx).map(|c| c.len()) != Some(row) {
            return Err("insertion and recording shapes diverged".into());
        }
        let i = unbump_from(&mut p_cols, &alphabet, col_idx);
        m[i as usize - 1][j0 as usize - 1] += 1;
    }
    if !p_cols.is_empty() {
        return Err("insertion tableau not exhausted".into());
    }
    let sym = SymMatrix { alphabet, entries: m };
    de_symmetrize(g, &sym)
}

/// Type-agnostic inverse.
pub fn inverse_kappa(t: &Tableau, g: GType) -> Result<MatrixElement, String> {
    match g {
        GType::B | GType::C => inverse_kappa_bc(t, g),
        GType::D => inverse_kappa_d(t),
    }
}

/// Insertion tableau plus recording filling: one recorded box per biletter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PQPair {
    pub p: Tableau,
    /// Recording letters by `(column from right, row from bottom)`.
    pub q: BTreeMap<(usize, usize), Letter>,
}

impl PQPair {
    /// Count of a letter in column `k` (from the right) of the recording.
    pub fn q_count_in_col(&self, k: usize, letter: Letter) -> u32 {
        self.q
            .iter()
            .filter(|(&(c, _), &x)| c == k && x == letter)
            .count() as u32
    }

    pub fn q_max_col(&self) -> usize {
        self.q.keys().map(|&(c, _)| c).max().unwrap_or(0)
    }
}

/// Insert the biword of `part` into `t`, recording each added box.
pub fn pq_pair(t: &Tableau, part: &MatrixElement) -> PQPair {
    let bw = part.to_biword();
    let mut p = t.clone();
    let mut q = BTreeMap::new();
    for (top, bottom) in bw.pairs().into_iter().rev() {
        let (next, rec) = p.column_insert(bottom);
        q.insert(rec.terminal, top);
        p = next;
    }
    PQPair { p, q }
}

/// `P_i` and `Q_i`: the lozenge biword inserted into the image of the deeper
/// triangle.
pub fn pq_at_index(c: &MatrixElement, i: u8) -> PQPair {
    let (_, _, loz, next) = crate::matrix::region_split(c, i);
    let t = kappa(&next);
    pq_pair(&t, &loz)
}

/// Type-d lowering operator defined by transport through the correspondence.
pub fn transported_f(c: &MatrixElement, i: u8) -> Option<MatrixElement> {
    assert_eq!(c.g, GType::D);
    assert!(i >= 1 && i < c.alphabet.size());
    let t = kappa_d(c);
    let ft = crate::word::apply_f_tableau(&t, i)?;
    Some(inverse_kappa_d(&ft).unwrap_or_else(|e| panic!("transport left the image: {e}")))
}

pub fn transported_e(c: &MatrixElement, i: u8) -> Option<MatrixElement> {
    assert_eq!(c.g, GType::D);
    assert!(i >= 1 && i < c.alphabet.size());
    let t = kappa_d(c);
    let et = crate::word::apply_e_tableau(&t, i)?;
    Some(inverse_kappa_d(&et).unwrap_or_else(|e| panic!("transport left the image: {e}")))
}

/// Global lowering operator on a multiplicity array, every index including 0.
pub fn matrix_f(c: &MatrixElement, i: u8) -> Option<MatrixElement> {
    if i == 0 {
        return Some(c.f0());
    }
    match c.g {
        GType::B | GType::C => crate::matrix::bc_f(c, i),
        GType::D => transported_f(c, i),
    }
}

pub fn matrix_e(c: &MatrixElement, i: u8) -> Option<MatrixElement> {
    if i == 0 {
        return c.e0();
    }
    match c.g {
        GType::B | GType::C => crate::matrix::bc_e(c, i),
        GType::D => transported_e(c, i),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn burge_chain_small() {
        let a = Alphabet::new(4, 4);
        let c = MatrixElement::from_entries(GType::D, a, &[(4, 6, 1), (5, 7, 1)]);
        let t = kappa_d(&c);
        assert_eq!(t.cols(), &[vec![6, 7], vec![4, 5]]);
    }

    #[test]
    fn empty_maps() {
        let a = Alphabet::new(2, 2);
        let z = MatrixElement::zero(GType::D, a);
        assert!(kappa_d(&z).is_empty());
        assert_eq!(inverse_kappa_d(&Tableau::empty(a)).unwrap(), z);
        let zc = MatrixElement::zero(GType::C, a);
        assert!(kappa_bc(&zc).is_empty());
        assert_eq!(inverse_kappa_bc(&Tableau::empty(a), GType::C).unwrap(), zc);
    }

    #[test]
    fn pq_empty_part() {
        let a = Alphabet::new(2, 2);
        let t = Tableau::from_cols(a, vec![vec![3, 3]]);
        let pq = pq_pair(&t, &MatrixElement::zero(GType::D, a));
        assert_eq!(pq.p, t);
        assert!(pq.q.is_empty());
    }
}
