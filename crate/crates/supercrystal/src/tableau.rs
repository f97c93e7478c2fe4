//! Hook semistandard tableaux.
//!
//! Anti-normal tableaux (`Tableau`) are anchored at the bottom right; columns
//! are indexed from the right and rows from the bottom, so column 1 is the
//! rightmost and row 1 the lowest. Normal tableaux (`NormalTableau`) are
//! anchored top left. Both read their word column by column from the right,
//! top to bottom within a column.

use crate::alphabet::{Alphabet, Letter};
use crate::partition::Partition;
use serde::{Deserialize, Serialize};
use std::fmt;

/// An anti-normal hook semistandard tableau. `cols[0]` is the rightmost
/// column, each stored top to bottom; all columns are bottom-aligned.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    pub alphabet: Alphabet,
    cols: Vec<Vec<Letter>>,
}

/// Result of one reverse column insertion: per visited column the position of
/// the displaced entry, ending with the newly created box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BumpingRecord {
    /// `(column from right, row from bottom)` per visited column, the final
    /// entry being the terminal box.
    pub route: Vec<(usize, usize)>,
    pub terminal: (usize, usize),
}

/// Outcome of comparing two bumping routes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RouteOrder {
    StrictlyBelow,
    WeaklyBelow,
    StrictlyAbove,
    Incomparable,
}

impl Tableau {
    pub fn empty(alphabet: Alphabet) -> Self {
        Tableau { alphabet, cols: Vec::new() }
    }

    /// Build from columns listed rightmost first, each top to bottom.
    pub fn from_cols(alphabet: Alphabet, cols: Vec<Vec<Letter>>) -> Self {
        let t = Tableau { alphabet, cols };
        t.validate().unwrap_or_else(|e| panic!("invalid tableau: {e}"));
        t
    }

    /// Build from rows listed bottom row first, each left to right (the JSON
    /// convention). Rows are right-aligned.
    pub fn from_rows_bottom_first(alphabet: Alphabet, rows: &[Vec<Letter>]) -> Self {
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut cols = vec![Vec::new(); ncols];
        for row in rows.iter().rev() {
            assert!(row.len() <= ncols, "rows must weakly shorten upward");
            for (j, &x) in row.iter().enumerate() {
                // right-aligned: cell j (from the left) sits in column
                // row.len() - j from the right
                cols[row.len() - 1 - j].push(x);
            }
        }
        Tableau::from_cols(alphabet, cols)
    }

    pub fn cols(&self) -> &[Vec<Letter>] {
        &self.cols
    }

    pub fn width(&self) -> usize {
        self.cols.len()
    }

    pub fn size(&self) -> u32 {
        self.cols.iter().map(|c| c.len() as u32).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    /// Column height, 1-indexed from the right; zero past the end.
    pub fn height(&self, k: usize) -> usize {
        if k == 0 || k > self.cols.len() {
            0
        } else {
            self.cols[k - 1].len()
        }
    }

    /// Entry at column `k` from the right, row `r` from the bottom.
    pub fn entry(&self, k: usize, r: usize) -> Option<Letter> {
        if k == 0 || k > self.cols.len() {
            return None;
        }
        let col = &self.cols[k - 1];
        if r == 0 || r > col.len() {
            return None;
        }
        Some(col[col.len() - r])
    }

    /// The shape as a partition (row lengths from the bottom).
    pub fn shape(&self) -> Partition {
        let heights: Vec<u32> = self.cols.iter().map(|c| c.len() as u32).collect();
        Partition::new(heights).conjugate()
    }

    /// Rows bottom-up, each left to right.
    pub fn rows_bottom_first(&self) -> Vec<Vec<Letter>> {
        let nrows = self.height(1);
        (1..=nrows)
            .map(|r| {
                let mut row: Vec<Letter> =
                    (1..=self.width()).filter_map(|k| self.entry(k, r)).collect();
                row.reverse();
                row
            })
            .collect()
    }

    pub fn validate(&self) -> Result<(), String> {
        for w in self.cols.windows(2) {
            if w[1].len() > w[0].len() {
                return Err(format!("column heights increase leftward: {:?}", self.cols));
            }
        }
        for (ci, col) in self.cols.iter().enumerate() {
            if col.is_empty() {
                return Err("empty column".into());
            }
            for w in col.windows(2) {
                if !self.alphabet.col_ok(w[0], w[1]) {
                    return Err(format!("column {} breaks column order: {:?}", ci + 1, col));
                }
            }
        }
        for k in 1..self.cols.len() {
            // column k+1 sits directly left of column k
            for r in 1..=self.height(k + 1) {
                let left = self.entry(k + 1, r).unwrap();
                if let Some(right) = self.entry(k, r) {
                    if !self.alphabet.row_ok(left, right) {
                        return Err(format!(
                            "row {} breaks row order between columns {} and {}",
                            r,
                            k + 1,
                            k
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Reading word: columns right to left, top to bottom each.
    pub fn word(&self) -> Vec<Letter> {
        self.cols.iter().flatten().copied().collect()
    }

    /// The cell of the `pos`-th word letter, as `(column from right, row from
    /// bottom)`.
    pub fn word_cell(&self, pos: usize) -> (usize, usize) {
        let mut seen = 0;
        for (ci, col) in self.cols.iter().enumerate() {
            if pos < seen + col.len() {
                let j = pos - seen;
                return (ci + 1, col.len() - j);
            }
            seen += col.len();
        }
        panic!("word position {} out of range", pos);
    }

    /// Replace the entry at a cell, revalidating.
    pub fn with_entry(&self, cell: (usize, usize), x: Letter) -> Result<Tableau, String> {
        let mut cols = self.cols.clone();
        let col = &mut cols[cell.0 - 1];
        let idx = col.len() - cell.1;
        col[idx] = x;
        let t = Tableau { alphabet: self.alphabet, cols };
        t.validate()?;
        Ok(t)
    }

    /// Reverse column insertion. The incoming letter enters the rightmost
    /// column; in each column it displaces the bottommost entry `y` with
    /// `y < x` (`x` odd) or `y <= x` (`x` even), the displaced entry moving
    /// one column further left; when no entry qualifies the letter is placed
    /// on top of that column and the insertion stops.
    pub fn column_insert(&self, x: Letter) -> (Tableau, BumpingRecord) {
        assert!(self.alphabet.contains(x));
        let mut cols = self.cols.clone();
        let mut route = Vec::new();
        let mut carry = x;
        let mut k = 0;
        let terminal;
        loop {
            if k == cols.len() {
                cols.push(vec![carry]);
                terminal = (k + 1, 1);
                break;
            }
            let col = &mut cols[k];
            let odd = self.alphabet.is_odd(carry);
            let hit = col
                .iter()
                .rposition(|&y| if odd { y < carry } else { y <= carry });
            match hit {
                Some(j) => {
                    let y = col[j];
                    route.push((k + 1, col.len() - j));
                    col[j] = carry;
                    carry = y;
                    k += 1;
                }
                None => {
                    col.insert(0, carry);
                    terminal = (k + 1, col.len());
                    break;
                }
            }
        }
        route.push(terminal);
        let t = Tableau { alphabet: self.alphabet, cols };
        t.validate()
            .unwrap_or_else(|e| panic!("column insertion broke the tableau: {e}"));
        (t, BumpingRecord { route, terminal })
    }

    /// Burge step: insert the bottom letter, then put the top letter in a new
    /// box directly above the terminal box of that insertion.
    pub fn burge_insert(&self, top: Letter, bottom: Letter) -> Tableau {
        let (t, rec) = self.column_insert(bottom);
        let mut cols = t.cols;
        let (k, r) = rec.terminal;
        let col = &mut cols[k - 1];
        assert_eq!(col.len(), r, "terminal box is not the top of its column");
        col.insert(0, top);
        let t = Tableau { alphabet: self.alphabet, cols };
        t.validate()
            .unwrap_or_else(|e| panic!("recording letter broke the tableau: {e}"));
        t
    }

    /// Subtableau of entries `>= k`, re-anchored at the bottom right.
    pub fn restrict_geq(&self, k: Letter) -> Tableau {
        let cols: Vec<Vec<Letter>> = self
            .cols
            .iter()
            .map(|c| c.iter().copied().filter(|&x| x >= k).collect::<Vec<_>>())
            .take_while(|c: &Vec<Letter>| !c.is_empty())
            .collect();
        Tableau::from_cols(self.alphabet, cols)
    }

    /// If `inner` is a subtableau (nested shape, equal entries on the common
    /// region after bottom-right anchoring), return the difference as a list
    /// of `(column, rows-from-bottom range)` column segments with letters.
    pub fn subtableau_diff(&self, inner: &Tableau) -> Option<Vec<(usize, Vec<Letter>)>> {
        if inner.width() > self.width() {
            return None;
        }
        let mut diff = Vec::new();
        for k in 1..=self.width() {
            let hi = self.height(k);
            let lo = inner.height(k);
            if lo > hi {
                return None;
            }
            for r in 1..=lo {
                if self.entry(k, r) != inner.entry(k, r) {
                    return None;
                }
            }
            if lo < hi {
                // top segment of column k, top-to-bottom
                let seg: Vec<Letter> =
                    (lo + 1..=hi).rev().map(|r| self.entry(k, r).unwrap()).collect();
                diff.push((k, seg));
            }
        }
        Some(diff)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.rows_bottom_first();
        for row in rows.iter().rev() {
            writeln!(f, "{:?}", row)?;
        }
        Ok(())
    }
}

/// Compare two bumping routes. `r1` is weakly (strictly) below `r2` when in
/// every column holding a box of `r2`, `r1` has a box weakly (strictly)
/// closer to the bottom; `r1` is strictly above `r2` when in every column
/// holding a box of `r1`, `r2` has a box strictly below it.
pub fn route_compare(r1: &BumpingRecord, r2: &BumpingRecord) -> RouteOrder {
    let pos = |rec: &BumpingRecord, k: usize| -> Option<usize> {
        rec.route.iter().find(|&&(c, _)| c == k).map(|&(_, r)| r)
    };
    let mut below_le = true;
    let mut below_lt = true;
    for &(k, row2) in &r2.route {
        match pos(r1, k) {
            Some(row1) => {
                below_le &= row1 <= row2;
                below_lt &= row1 < row2;
            }
            None => {
                below_le = false;
                below_lt = false;
            }
        }
    }
    if below_lt {
        return RouteOrder::StrictlyBelow;
    }
    if below_le {
        return RouteOrder::WeaklyBelow;
    }
    let mut above_gt = true;
    for &(k, row1) in &r1.route {
        match pos(r2, k) {
            Some(row2) => above_gt &= row1 > row2,
            None => above_gt = false,
        }
    }
    if above_gt {
        RouteOrder::StrictlyAbove
    } else {
        RouteOrder::Incomparable
    }
}

/// Is box `b` weakly southwest of `b2` (columns from the right, rows from the
/// bottom)?
pub fn southwest(b: (usize, usize), b2: (usize, usize)) -> bool {
    b.0 >= b2.0 && b.1 <= b2.1
}

/// Is box `b` weakly northeast of `b2`?
pub fn northeast(b: (usize, usize), b2: (usize, usize)) -> bool {
    b.0 <= b2.0 && b.1 >= b2.1
}

/// A normal (top-left anchored) semistandard tableau; `rows[0]` is the top
/// row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalTableau {
    pub alphabet: Alphabet,
    rows: Vec<Vec<Letter>>,
}

impl NormalTableau {
    pub fn empty(alphabet: Alphabet) -> Self {
        NormalTableau { alphabet, rows: Vec::new() }
    }

    pub fn from_rows(alphabet: Alphabet, rows: Vec<Vec<Letter>>) -> Self {
        let t = NormalTableau { alphabet, rows };
        t.validate().unwrap_or_else(|e| panic!("invalid tableau: {e}"));
        t
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().map(|r| r.len() as u32).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn validate(&self) -> Result<(), String> {
        for w in self.rows.windows(2) {
            if w[1].len() > w[0].len() {
                return Err("row lengths increase downward".into());
            }
        }
        for row in &self.rows {
            if row.is_empty() {
                return Err("empty row".into());
            }
            for w in row.windows(2) {
                if !self.alphabet.row_ok(w[0], w[1]) {
                    return Err(format!("row order broken: {:?}", row));
                }
            }
        }
        for i in 1..self.rows.len() {
            for j in 0..self.rows[i].len() {
                if !self.alphabet.col_ok(self.rows[i - 1][j], self.rows[i][j]) {
                    return Err(format!("column order broken at row {} col {}", i, j));
                }
            }
        }
        Ok(())
    }

    /// Reading word: columns right to left, top to bottom.
    pub fn word(&self) -> Vec<Letter> {
        let ncols = self.rows.first().map(|r| r.len()).unwrap_or(0);
        let mut w = Vec::new();
        for c in (0..ncols).rev() {
            for row in &self.rows {
                if c < row.len() {
                    w.push(row[c]);
                }
            }
        }
        w
    }

    /// Cell of the `pos`-th word letter as `(row index, column index)`,
    /// 0-based from the top left.
    pub fn word_cell(&self, pos: usize) -> (usize, usize) {
        let ncols = self.rows.first().map(|r| r.len()).unwrap_or(0);
        let mut seen = 0;
        for c in (0..ncols).rev() {
            for (ri, row) in self.rows.iter().enumerate() {
                if c < row.len() {
                    if seen == pos {
                        return (ri, c);
                    }
                    seen += 1;
                }
            }
        }
        panic!("word position {} out of range", pos);
    }

    pub fn with_entry(&self, cell: (usize, usize), x: Letter) -> Result<NormalTableau, String> {
        let mut rows = self.rows.clone();
        rows[cell.0][cell.1] = x;
        let t = NormalTableau { alphabet: self.alphabet, rows };
        t.validate()?;
        Ok(t)
    }
}

impl fmt::Debug for NormalTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{:?}", row)?;
        }
        Ok(())
    }
}

/// A skew tableau in normal orientation: row `r` starts at column offset
/// `offsets[r]` (its inner margin). Used for jeu de taquin.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SkewTableau {
    pub alphabet: Alphabet,
    /// `(offset, entries)` per row, top row first.
    pub rows: Vec<(usize, Vec<Letter>)>,
}

impl SkewTableau {
    pub fn new(alphabet: Alphabet, rows: Vec<(usize, Vec<Letter>)>) -> Self {
        let t = SkewTableau { alphabet, rows };
        t.validate().unwrap_or_else(|e| panic!("invalid skew tableau: {e}"));
        t
    }

    pub fn entry(&self, r: usize, c: usize) -> Option<Letter> {
        let (off, row) = self.rows.get(r)?;
        if c < *off || c >= off + row.len() {
            None
        } else {
            Some(row[c - off])
        }
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().map(|(_, r)| r.len() as u32).sum()
    }

    pub fn validate(&self) -> Result<(), String> {
        for (r, (off, row)) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(format!("empty row {r}"));
            }
            for w in row.windows(2) {
                if !self.alphabet.row_ok(w[0], w[1]) {
                    return Err(format!("row {r} order broken"));
                }
            }
            if r > 0 {
                let (poff, prow) = &self.rows[r - 1];
                // shape: offsets weakly decrease, right ends weakly decrease
                if off > poff || off + row.len() > poff + prow.len() {
                    return Err(format!("rows {r} and {} do not stack as a skew shape", r - 1));
                }
                for c in *off..off + row.len() {
                    if let Some(above) = self.entry(r - 1, c) {
                        if !self.alphabet.col_ok(above, row[c - off]) {
                            return Err(format!("column order broken at ({r},{c})"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// One full jeu de taquin slide started at the given inner corner. The
    /// moving rule compares the entry right of the hole (`b`) and below it
    /// (`c`): move `b` if `b < c`, `c` if `b > c`; a tie moves `b` when the
    /// letter is odd and `c` when even; a missing neighbor forces the other
    /// move.
    pub fn jdt_slide(&self, hole: (usize, usize)) -> Result<SkewTableau, String> {
        let mut cells: std::collections::BTreeMap<(usize, usize), Letter> = Default::default();
        for (r, (off, row)) in self.rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                cells.insert((r, off + j), x);
            }
        }
        let (mut hr, mut hc) = hole;
        if cells.contains_key(&(hr, hc)) {
            return Err("hole is occupied".into());
        }
        if !cells.contains_key(&(hr, hc + 1)) && !cells.contains_key(&(hr + 1, hc)) {
            return Err("hole has neither a right nor a below neighbor".into());
        }
        loop {
            let b = cells.get(&(hr, hc + 1)).copied();
            let c = cells.get(&(hr + 1, hc)).copied();
            let move_right = match (b, c) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(b), Some(c)) => {
                    if b < c {
                        true
                    } else if b > c {
                        false
                    } else {
                        self.alphabet.is_odd(b)
                    }
                }
            };
            if move_right {
                let x = cells.remove(&(hr, hc + 1)).unwrap();
                cells.insert((hr, hc), x);
                hc += 1;
            } else {
                let x = cells.remove(&(hr + 1, hc)).unwrap();
                cells.insert((hr, hc), x);
                hr += 1;
            }
        }
        SkewTableau::from_cells(self.alphabet, &cells)
    }

    fn from_cells(
        alphabet: Alphabet,
        cells: &std::collections::BTreeMap<(usize, usize), Letter>,
    ) -> Result<SkewTableau, String> {
        let mut rows: Vec<(usize, Vec<Letter>)> = Vec::new();
        let top = cells.keys().map(|&(r, _)| r).min().unwrap_or(0);
        let bottom = cells.keys().map(|&(r, _)| r).max().unwrap_or(0);
        if cells.is_empty() {
            return Ok(SkewTableau { alphabet, rows });
        }
        for r in top..=bottom {
            let cs: Vec<usize> =
                cells.keys().filter(|&&(rr, _)| rr == r).map(|&(_, c)| c).collect();
            if cs.is_empty() {
                return Err(format!("row {r} became empty mid-shape"));
            }
            let lo = *cs.first().unwrap();
            let hi = *cs.last().unwrap();
            if cs.len() != hi - lo + 1 {
                return Err(format!("row {r} is not contiguous"));
            }
            rows.push((lo, (lo..=hi).map(|c| cells[&(r, c)]).collect()));
        }
        let t = SkewTableau { alphabet, rows };
        t.validate()?;
        Ok(t)
    }

    /// Inner corners: empty cells with an occupied right or below neighbor
    /// that belong to the inner shape region.
    pub fn inner_corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, (off, _)) in self.rows.iter().enumerate() {
            if *off == 0 {
                continue;
            }
            let c = off - 1;
            // the cell left of the row start; it is an inner corner when the
            // row below starts weakly left of it
            let below_ok = match self.rows.get(r + 1) {
                Some((boff, _)) => *boff <= c,
                None => true,
            };
            if below_ok {
                out.push((r, c));
            }
        }
        out
    }

    /// Full rectification to a normal tableau.
    pub fn rectify(&self) -> NormalTableau {
        let mut cur = self.clone();
        loop {
            let corners = cur.inner_corners();
            match corners.last() {
                Some(&hole) => {
                    cur = cur.jdt_slide(hole).expect("inner corner slide failed");
                }
                None => break,
            }
        }
        let rows = cur.rows.into_iter().map(|(_, r)| r).collect();
        NormalTableau::from_rows(self.alphabet, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a44() -> Alphabet {
        Alphabet::new(4, 4)
    }

    #[test]
    fn word_reading() {
        let a = Alphabet::new(2, 2);
        let t = Tableau::from_rows_bottom_first(a, &[vec![1, 2]]);
        assert_eq!(t.word(), vec![2, 1]);
        let t = Tableau::from_cols(a, vec![vec![1, 2]]);
        assert_eq!(t.word(), vec![1, 2]);
    }

    #[test]
    fn insert_into_odd_column() {
        // [5;7] <- 6 gives right column [6,7] and a new left column [5]
        let t = Tableau::from_cols(a44(), vec![vec![5, 7]]);
        let (u, rec) = t.column_insert(6);
        assert_eq!(u.cols(), &[vec![6, 7], vec![5]]);
        assert_eq!(rec.terminal, (2, 1));
    }

    #[test]
    fn insert_descending_odds() {
        let mut t = Tableau::empty(a44());
        for x in [7, 6, 5] {
            t = t.column_insert(x).0;
        }
        assert_eq!(t.cols(), &[vec![5, 6, 7]]);
    }

    #[test]
    fn burge_step() {
        let t = Tableau::from_cols(a44(), vec![vec![5, 7]]);
        let u = t.burge_insert(4, 6);
        assert_eq!(u.cols(), &[vec![6, 7], vec![4, 5]]);
        let e = Tableau::empty(a44()).burge_insert(3, 5);
        assert_eq!(e.cols(), &[vec![3, 5]]);
    }

    #[test]
    fn restrict_and_diff() {
        let a = a44();
        let t = Tableau::from_rows_bottom_first(
            a,
            &[vec![4, 4, 5, 7, 8], vec![2, 3, 3, 4, 6], vec![4], vec![3]],
        );
        let big = t.restrict_geq(1);
        assert_eq!(big, t);
        let r6 = t.restrict_geq(6);
        assert_eq!(r6.cols(), &[vec![6, 8], vec![7]]);

        assert_eq!(t.subtableau_diff(&t), Some(vec![]));
        let smaller = Tableau::from_rows_bottom_first(a, &[vec![4, 4, 5, 7, 8], vec![2, 3, 3, 4, 6]]);
        let d = t.subtableau_diff(&smaller).unwrap();
        assert_eq!(d, vec![(1, vec![3, 4])]);
        let disjoint = Tableau::from_cols(a, vec![vec![1]]);
        assert!(t.subtableau_diff(&disjoint).is_none());
    }

    #[test]
    fn jdt_single_moves() {
        let a = Alphabet::new(2, 2);
        // hole left of a single entry: it moves left
        let s = SkewTableau::new(a, vec![(1, vec![3])]);
        let r = s.jdt_slide((0, 0)).unwrap();
        assert_eq!(r.rows, vec![(0, vec![3])]);
        // tie on an even letter: the lower box rises, leaving one row
        let s = SkewTableau::new(a, vec![(1, vec![1]), (0, vec![1])]);
        let r = s.jdt_slide((0, 0)).unwrap();
        assert_eq!(r.rows, vec![(0, vec![1, 1])]);
        // tie on an odd letter: the right box moves over, leaving one column
        let s = SkewTableau::new(a, vec![(1, vec![3]), (0, vec![3])]);
        let r = s.jdt_slide((0, 0)).unwrap();
        assert_eq!(r.rows, vec![(0, vec![3]), (0, vec![3])]);
    }

    #[test]
    fn rectify_two_row_strip() {
        let a = Alphabet::new(2, 4);
        let s = SkewTableau::new(a, vec![(1, vec![1]), (0, vec![1, 2])]);
        let r = s.rectify();
        assert_eq!(r.rows(), &[vec![1, 1], vec![2]]);
    }
}
