//! Spinor-model tuples and the separation algorithm.
//!
//! A tuple is a sequence of two-column pieces positioned against a horizontal
//! baseline: the double-width part of each piece sits above the line, the
//! single-column tail hangs below. Separation settles the configuration by
//! jeu-de-taquin moves until no box below the line can move left, then splits
//! it into an anti-normal body and a normal tail.

use crate::alphabet::{Alphabet, GType, Letter};
use crate::partition::{hook_check, Partition};
use crate::tableau::{NormalTableau, Tableau};
use crate::weight::Weight;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// One two-column piece of shape `(2^{b+c}, 1^a)/(1^b)`: the left column has
/// `c` cells above the line and `a` below, the right column `b + c` above.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinorColumn {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    /// Left column, top to bottom (`c + a` letters).
    pub left: Vec<Letter>,
    /// Right column, top to bottom (`b + c` letters).
    pub right: Vec<Letter>,
}

impl SpinorColumn {
    pub fn validate(&self, alphabet: &Alphabet) -> Result<(), String> {
        if self.left.len() != (self.c + self.a) as usize {
            return Err("left column length disagrees with the shape".into());
        }
        if self.right.len() != (self.b + self.c) as usize {
            return Err("right column length disagrees with the shape".into());
        }
        for col in [&self.left, &self.right] {
            for w in col.windows(2) {
                if !alphabet.col_ok(w[0], w[1]) {
                    return Err(format!("column order broken in {:?}", col));
                }
            }
        }
        // overlap rows: left rows 1..=c of the above part face right rows b+1..=b+c
        for s in 0..self.c as usize {
            let l = self.left[s];
            let r = self.right[self.b as usize + s];
            if !alphabet.row_ok(l, r) {
                return Err(format!("row order broken between columns at overlap row {s}"));
            }
        }
        Ok(())
    }

    pub fn size(&self) -> u32 {
        self.a + self.b + 2 * self.c
    }

    /// Word: right column then left column, top to bottom each.
    pub fn word(&self) -> Vec<Letter> {
        self.right.iter().chain(self.left.iter()).copied().collect()
    }

    /// Anti-rectified pair `(L-column, R-column)`: redistribute the two
    /// columns through the unique anti-normal form of the piece.
    pub fn redistributed(&self, alphabet: &Alphabet) -> (Vec<Letter>, Vec<Letter>) {
        let mut t = Tableau::empty(*alphabet);
        for &x in self.word().iter().rev() {
            t = t.column_insert(x).0;
        }
        assert!(t.width() <= 2, "two-column piece anti-rectified to {} columns", t.width());
        let right = t.cols().first().cloned().unwrap_or_default();
        let left = t.cols().get(1).cloned().unwrap_or_default();
        (left, right)
    }
}

/// Admissibility of an adjacent pair, left piece `prev`, right piece `next`:
/// both glued alignments must be semistandard. The redistributed right column
/// of `prev` is bottom-anchored at its left column's bottom; the
/// redistributed left column of `next` is top-anchored at its right column's
/// top.
pub fn default_admissible(alphabet: &Alphabet, prev: &SpinorColumn, next: &SpinorColumn) -> bool {
    let (_, r_prev) = prev.redistributed(alphabet);
    let (l_next, _) = next.redistributed(alphabet);
    // glue 1: redistributed right of prev (as the left column, top-anchored
    // at prev's left column top) against next's left column in place; the
    // pair must also sit like a two-column piece against the baseline: left
    // cells above the line lie under right cells, right cells below the line
    // lie right of left cells
    let a_rows = anchor_top(-(prev.c as i64) + 1, r_prev);
    let b_rows = anchor_top(-(next.c as i64) + 1, next.left.clone());
    if !glued_ok(alphabet, &a_rows, &b_rows)
        || !covered_above(&a_rows, &b_rows)
        || !covered_below(&a_rows, &b_rows)
    {
        return false;
    }
    // glue 2: prev's right column in place against the redistributed left of
    // next, top-anchored at next's right column top
    let a_rows = anchor_top(-(prev.b as i64 + prev.c as i64) + 1, prev.right.clone());
    let b_rows = anchor_top(-(next.b as i64 + next.c as i64) + 1, l_next);
    glued_ok(alphabet, &a_rows, &b_rows) && covered_below(&a_rows, &b_rows)
}

fn covered_above(left: &[(i64, Letter)], right: &[(i64, Letter)]) -> bool {
    left.iter()
        .filter(|&&(r, _)| r <= 0)
        .all(|&(r, _)| right.iter().any(|&(rr, _)| rr == r))
}

fn covered_below(left: &[(i64, Letter)], right: &[(i64, Letter)]) -> bool {
    right
        .iter()
        .filter(|&&(r, _)| r >= 1)
        .all(|&(r, _)| left.iter().any(|&(rr, _)| rr == r))
}

fn anchor_top(top: i64, col: Vec<Letter>) -> Vec<(i64, Letter)> {
    col.into_iter().enumerate().map(|(s, x)| (top + s as i64, x)).collect()
}

fn glued_ok(alphabet: &Alphabet, left: &[(i64, Letter)], right: &[(i64, Letter)]) -> bool {
    let rm: BTreeMap<i64, Letter> = right.iter().copied().collect();
    left.iter().all(|&(r, x)| rm.get(&r).map(|&y| alphabet.row_ok(x, y)).unwrap_or(true))
}

/// A spinor tuple, leftmost piece first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinorTuple {
    pub g: GType,
    pub alphabet: Alphabet,
    pub lambda: Partition,
    pub ell: u32,
    pub columns: Vec<SpinorColumn>,
}

impl SpinorTuple {
    /// Word of the tuple: rightmost piece first (the tensor order).
    pub fn word(&self) -> Vec<Letter> {
        self.columns.iter().rev().flat_map(|c| c.word()).collect()
    }

    pub fn size(&self) -> u32 {
        self.columns.iter().map(|c| c.size()).sum()
    }

    /// Level `ell` plus one positive unit per box.
    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero(&self.alphabet);
        w.level = self.ell as i64;
        for col in &self.columns {
            for &x in col.left.iter().chain(&col.right) {
                w.delta[x as usize - 1] += 1;
            }
        }
        w
    }
}

/// Family admission for `(lambda, ell)`.
pub fn family_check(g: GType, lambda: &Partition, ell: u32) -> bool {
    match g {
        GType::B => ell >= 2 * lambda.part(1),
        GType::C => ell >= lambda.part(1),
        GType::D => ell >= lambda.part(1) + lambda.part(2),
    }
}

/// Expected single-column parameters left to right, when the tuple consists
/// purely of two-column pieces (no spin factors).
pub fn expected_a_params(g: GType, lambda: &Partition, ell: u32) -> Option<Vec<u32>> {
    let conj = lambda.conjugate();
    match g {
        GType::C => {
            let mut v: Vec<u32> = (1..=ell as usize).map(|k| conj.part(k)).collect();
            v.truncate(ell as usize);
            Some(v)
        }
        GType::B => {
            if (ell as i64 - 2 * lambda.part(1) as i64) % 2 != 0 {
                return None; // a spin factor would be required
            }
            Some((1..=(ell / 2) as usize).map(|k| conj.part(k)).collect())
        }
        GType::D => {
            let slack = ell as i64 - 2 * lambda.part(1) as i64;
            if slack < 0 {
                return None;
            }
            let (q, r) = ((slack / 2) as u32, (slack % 2) as u32);
            if r != 0 {
                return None;
            }
            let m_plus = lambda.part(1) as usize;
            let mut v: Vec<u32> = (1..=m_plus).map(|k| conj.part(k)).collect();
            v.extend(std::iter::repeat(0).take(q as usize));
            Some(v)
        }
    }
}

/// Verify membership: family admission, column shape parameters, and
/// pairwise admissibility through the supplied predicate.
pub fn tuple_check(
    t: &SpinorTuple,
    admissible: &dyn Fn(&Alphabet, &SpinorColumn, &SpinorColumn) -> bool,
) -> bool {
    if !hook_check(&t.lambda, &t.alphabet) || !family_check(t.g, &t.lambda, t.ell) {
        return false;
    }
    let expected = match expected_a_params(t.g, &t.lambda, t.ell) {
        Some(v) => v,
        None => return false,
    };
    if t.columns.len() != expected.len() {
        return false;
    }
    for (col, &a) in t.columns.iter().zip(&expected) {
        if col.a != a || col.validate(&t.alphabet).is_err() {
            return false;
        }
        if t.g == GType::C && col.b != 0 {
            return false;
        }
    }
    t.columns
        .windows(2)
        .all(|w| admissible(&t.alphabet, &w[0], &w[1]))
}

/// Body above the line (anti-normal) and tail below it (normal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BodyTail {
    pub body: Tableau,
    pub tail: NormalTableau,
}

// ---------------------------------------------------------------------------
// The plane configuration and the settle loop.

/// Columns on the plane; rows are absolute with the baseline between row 0
/// and row 1 (above-line rows are <= 0).
struct Plane {
    alphabet: Alphabet,
    cols: Vec<BTreeMap<i64, Letter>>,
}

impl Plane {
    fn entry(&self, p: usize, r: i64) -> Option<Letter> {
        self.cols.get(p).and_then(|c| c.get(&r)).copied()
    }

    fn validate(&self) -> Result<(), String> {
        for (p, col) in self.cols.iter().enumerate() {
            let rows: Vec<i64> = col.keys().copied().collect();
            for w in rows.windows(2) {
                if w[1] == w[0] + 1 && !self.alphabet.col_ok(col[&w[0]], col[&w[1]]) {
                    return Err(format!("column {p} order broken at row {}", w[1]));
                }
            }
            for (&r, &x) in col.iter() {
                if let Some(y) = self.entry(p + 1, r) {
                    if !self.alphabet.row_ok(x, y) {
                        return Err(format!("row {r} order broken between {p} and {}", p + 1));
                    }
                }
            }
        }
        Ok(())
    }

    /// The contiguous above-line run ending at row 0, if any.
    fn above_run(&self, p: usize) -> Vec<(i64, Letter)> {
        let col = &self.cols[p];
        let mut run = Vec::new();
        let mut r = 0;
        while let Some(&x) = col.get(&r) {
            run.push((r, x));
            r -= 1;
        }
        run.reverse();
        run
    }

    /// Maximal below-line runs as `(start row, letters top to bottom)`.
    fn below_runs(&self, p: usize) -> Vec<(i64, Vec<Letter>)> {
        let col = &self.cols[p];
        let mut runs: Vec<(i64, Vec<Letter>)> = Vec::new();
        for (&r, &x) in col.range(1..) {
            match runs.last_mut() {
                Some((start, seg)) if *start + seg.len() as i64 == r => seg.push(x),
                _ => runs.push((r, vec![x])),
            }
        }
        runs
    }

    /// Resolve the topmost-leftmost row violation between adjacent columns.
    fn fix_violation(&mut self) -> Result<bool, String> {
        for p in 0..self.cols.len().saturating_sub(1) {
            let rows: Vec<i64> = self.cols[p].keys().copied().collect();
            for r in rows {
                let u = self.cols[p][&r];
                let v = match self.entry(p + 1, r) {
                    Some(v) => v,
                    None => continue,
                };
                if self.alphabet.row_ok(u, v) {
                    continue;
                }
                let w = self
                    .entry(p + 1, r + 1)
                    .ok_or(format!("row violation at ({p},{r}) with nothing below"))?;
                if self.entry(p, r + 1).is_some() {
                    return Err(format!("row violation at ({p},{r}) with a full cell below"));
                }
                let (lo, hi) = if u <= v { (u, v) } else { (v, u) };
                self.cols[p].insert(r, lo);
                self.cols[p].insert(r + 1, hi);
                self.cols[p + 1].insert(r, w);
                self.cols[p + 1].remove(&(r + 1));
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Shift the above-line runs of columns `p..` right by one, cascading
    /// until a column with empty above-space absorbs the last run. Fails when
    /// the cascade would run off the right edge.
    fn push_chain(&mut self, p: usize) -> bool {
        let mut end = p;
        while end < self.cols.len() && !self.above_run(end).is_empty() {
            end += 1;
        }
        if end >= self.cols.len() {
            return false;
        }
        for j in (p..end).rev() {
            let run = self.above_run(j);
            for &(r, _) in &run {
                self.cols[j].remove(&r);
            }
            for &(r, x) in &run {
                self.cols[j + 1].insert(r, x);
            }
        }
        true
    }

    /// After placing a segment at `target`, repair row conflicts with the
    /// column on its left by the bump-down exchange: the blocked cell moves
    /// into the left column, whose entry drops one row, ejecting what it
    /// lands on back into the segment (or absorbing the vacancy by pulling
    /// the segment up).
    fn exchange_left(&mut self, target: usize, rows: &[i64]) -> bool {
        if target == 0 {
            return false;
        }
        for _ in 0..rows.len() + 2 {
            let conflict = rows.iter().copied().find(|&r| {
                match (self.entry(target - 1, r), self.entry(target, r)) {
                    (Some(u), Some(v)) => !self.alphabet.row_ok(u, v),
                    _ => false,
                }
            });
            let Some(r) = conflict else { return true };
            let u = self.cols[target - 1][&r];
            let v = self.cols[target][&r];
            self.cols[target - 1].insert(r, v);
            match self.cols[target - 1].get(&(r + 1)).copied() {
                Some(e) => {
                    self.cols[target - 1].insert(r + 1, u);
                    self.cols[target].insert(r, e);
                }
                None => {
                    self.cols[target - 1].insert(r + 1, u);
                    // pull the rest of the segment up one row
                    self.cols[target].remove(&r);
                    let below: Vec<(i64, Letter)> = self.cols[target]
                        .range(r + 1..)
                        .map(|(&rr, &x)| (rr, x))
                        .collect();
                    for &(rr, _) in &below {
                        self.cols[target].remove(&rr);
                    }
                    for &(rr, x) in &below {
                        self.cols[target].insert(rr - 1, x);
                    }
                }
            }
        }
        false
    }

    /// Migrate one below-line segment as far left as it can go. Returns true
    /// when anything moved.
    fn migrate_segment(&mut self, q0: usize, start: i64, seg: Vec<Letter>) -> Result<bool, String> {
        let mut q = q0;
        let mut seg = seg;
        loop {
            if q == 0 {
                break;
            }
            let target = q - 1;
            let rows: Vec<i64> = (0..seg.len() as i64).map(|t| start + t).collect();
            if rows.iter().any(|&r| self.entry(target, r).is_some()) {
                break;
            }
            let snapshot = self.cols.clone();
            let mut moved = false;
            // attempt orders: body push first, then the plain slide, each
            // with the bump-down exchange as a fallback
            for (push, exchange) in
                [(true, false), (true, true), (false, false), (false, true)]
            {
                self.cols = snapshot.clone();
                for &r in &rows {
                    self.cols[q].remove(&r);
                }
                if push {
                    if self.above_run(target).is_empty() || !self.push_chain(target) {
                        continue;
                    }
                }
                for (&r, &x) in rows.iter().zip(&seg) {
                    self.cols[target].insert(r, x);
                }
                if exchange && !self.exchange_left(target, &rows) {
                    continue;
                }
                if self.validate().is_ok() {
                    moved = true;
                    break;
                }
            }
            if !moved {
                self.cols = snapshot;
                break;
            }
            // the segment may have changed content or length in an exchange
            seg = self.cols[target]
                .range(start..)
                .take_while({
                    let mut expect = start;
                    move |(&r, _)| {
                        let ok = r == expect;
                        expect += 1;
                        ok
                    }
                })
                .map(|(_, &x)| x)
                .collect();
            q = target;
            if seg.is_empty() {
                break;
            }
        }
        Ok(q != q0)
    }

    /// Slide one whole above-line run right into an empty above-space when
    /// the result stays valid; packs the body toward the right edge.
    fn compact_body_right(&mut self) -> bool {
        for p in (0..self.cols.len().saturating_sub(1)).rev() {
            let run = self.above_run(p);
            if run.is_empty() || !self.above_run(p + 1).is_empty() {
                continue;
            }
            let snapshot = self.cols.clone();
            for &(r, _) in &run {
                self.cols[p].remove(&r);
            }
            for &(r, x) in &run {
                self.cols[p + 1].insert(r, x);
            }
            if self.validate().is_ok() {
                return true;
            }
            self.cols = snapshot;
        }
        false
    }

    fn settle(&mut self) -> Result<(), String> {
        let budget = (self.cols.len() + 2) * (self.cols.len() + 2) * 64;
        for _ in 0..budget {
            if self.fix_violation()? {
                continue;
            }
            let mut acted = false;
            'scan: for q in 0..self.cols.len() {
                for (start, seg) in self.below_runs(q) {
                    if self.migrate_segment(q, start, seg)? {
                        acted = true;
                        break 'scan;
                    }
                }
            }
            if !acted && self.compact_body_right() {
                acted = true;
            }
            if !acted {
                return Ok(());
            }
        }
        Err("separation did not stabilize within its budget".into())
    }

    fn split(&self) -> Result<BodyTail, String> {
        // body: the anti-rectified above-line region (already anti-normal in
        // the settled states, in which case this is the identity)
        let mut body_word: Vec<Letter> = Vec::new();
        for p in (0..self.cols.len()).rev() {
            let above: Vec<(i64, Letter)> = self
                .cols[p]
                .range(..=0)
                .map(|(&r, &x)| (r, x))
                .collect();
            if above.is_empty() {
                continue;
            }
            if above.last().unwrap().0 != 0
                || above.windows(2).any(|w| w[1].0 != w[0].0 + 1)
            {
                return Err("an above-line run is not anchored at the baseline".into());
            }
            body_word.extend(above.into_iter().map(|(_, x)| x));
        }
        let mut body = Tableau::empty(self.alphabet);
        for &x in body_word.iter().rev() {
            body = body.column_insert(x).0;
        }
        let mut tail_cols: Vec<Vec<Letter>> = Vec::new();
        for p in 0..self.cols.len() {
            let below: Vec<(i64, Letter)> =
                self.cols[p].range(1..).map(|(&r, &x)| (r, x)).collect();
            if below.is_empty() {
                continue;
            }
            if below[0].0 != 1 || below.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
                return Err("a below-line run is not anchored under the baseline".into());
            }
            tail_cols.push(below.into_iter().map(|(_, x)| x).collect());
        }
        let nrows = tail_cols.first().map(|c| c.len()).unwrap_or(0);
        let rows: Vec<Vec<Letter>> = (0..nrows)
            .map(|r| tail_cols.iter().filter_map(|c| c.get(r)).copied().collect())
            .collect();
        let tail = NormalTableau::from_rows(self.alphabet, rows);
        Ok(BodyTail { body, tail })
    }
}

/// Separate a tuple into its body and tail.
pub fn separate(t: &SpinorTuple) -> Result<BodyTail, String> {
    let mut plane = Plane { alphabet: t.alphabet, cols: Vec::new() };
    for piece in t.columns.iter().rev() {
        let mut right = BTreeMap::new();
        for (s, &x) in piece.right.iter().enumerate() {
            right.insert(-(piece.right.len() as i64) + 1 + s as i64, x);
        }
        let mut left = BTreeMap::new();
        for (s, &x) in piece.left.iter().enumerate() {
            let r = if (s as u32) < piece.c {
                -(piece.c as i64) + 1 + s as i64
            } else {
                s as i64 - piece.c as i64 + 1
            };
            left.insert(r, x);
        }
        plane.cols.insert(0, right);
        plane.cols.insert(0, left);
        plane.settle()?;
    }
    plane.split()
}

/// The embedding: separate, send the body through the inverse
/// correspondence, and keep the tail. The level bookkeeping drops by `ell`.
pub fn embed(t: &SpinorTuple) -> Result<(crate::matrix::MatrixElement, NormalTableau), String> {
    let bt = separate(t)?;
    let m = crate::correspondence::inverse_kappa(&bt.body, t.g)?;
    Ok((m, bt.tail))
}

pub fn embed_weight(t: &SpinorTuple) -> Weight {
    let mut w = t.weight();
    w.level -= t.ell as i64;
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_column_below_line() {
        let a = Alphabet::new(2, 5);
        let t = SpinorTuple {
            g: GType::C,
            alphabet: a,
            lambda: Partition::new(vec![1, 1]),
            ell: 1,
            columns: vec![SpinorColumn { a: 2, b: 0, c: 0, left: vec![3, 4], right: vec![] }],
        };
        assert!(tuple_check(&t, &default_admissible));
        let bt = separate(&t).unwrap();
        assert!(bt.body.is_empty());
        assert_eq!(bt.tail.rows(), &[vec![3], vec![4]]);
    }

    #[test]
    fn family_boundaries() {
        assert!(!family_check(GType::C, &Partition::new(vec![3]), 2));
        assert!(family_check(GType::C, &Partition::new(vec![3]), 3));
        assert!(family_check(GType::D, &Partition::new(vec![4, 4, 2]), 8));
    }

    #[test]
    fn redistribution_matches_worked_pair() {
        let a = Alphabet::new(2, 5);
        // left (2,3,3,5,6), right (3): redistributes to [2] and [3,3,3,5,6]
        let t3 = SpinorColumn { a: 4, b: 0, c: 1, left: vec![2, 3, 3, 5, 6], right: vec![3] };
        let (l, r) = t3.redistributed(&a);
        assert_eq!(l, vec![2]);
        assert_eq!(r, vec![3, 3, 3, 5, 6]);
        let t2 = SpinorColumn { a: 2, b: 0, c: 3, left: vec![1, 2, 4, 4, 4], right: vec![1, 2, 5] };
        let (l, r) = t2.redistributed(&a);
        assert_eq!(l, vec![1, 2, 4]);
        assert_eq!(r, vec![1, 2, 4, 4, 5]);
        assert!(default_admissible(&a, &t3, &t2));
    }
}
