//! JSON schemas for the domain objects. Keys come out sorted (canonical
//! form), all values are integers or strings.

use crate::alphabet::{Alphabet, GType, Letter};
use crate::array::TwoRowedArray;
use crate::matrix::{Biword, MatrixElement};
use crate::partition::Partition;
use crate::spinor::{SpinorColumn, SpinorTuple};
use crate::tableau::{NormalTableau, Tableau};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: ShapeJson,
    /// Rows bottom first, each left to right.
    pub rows: Vec<Vec<Letter>>,
}

#[derive(Serialize, Deserialize)]
pub struct ShapeJson {
    pub outer: Vec<u32>,
    pub inner: Vec<u32>,
    pub rotated: bool,
}

pub fn tableau_to_json(t: &Tableau) -> TableauJson {
    TableauJson {
        shape: ShapeJson {
            outer: t.shape().parts().to_vec(),
            inner: vec![],
            rotated: true,
        },
        rows: t.rows_bottom_first(),
    }
}

pub fn tableau_from_json(alphabet: Alphabet, j: &TableauJson) -> Result<Tableau, String> {
    if !j.rows.is_empty() && !j.shape.rotated {
        return Err("expected a rotated (anti-normal) shape".into());
    }
    Ok(Tableau::from_rows_bottom_first(alphabet, &j.rows))
}

pub fn normal_to_json(t: &NormalTableau) -> TableauJson {
    let mut rows = t.rows().to_vec();
    rows.reverse();
    TableauJson {
        shape: ShapeJson {
            outer: t.shape().parts().to_vec(),
            inner: vec![],
            rotated: false,
        },
        rows,
    }
}

pub fn normal_from_json(alphabet: Alphabet, j: &TableauJson) -> Result<NormalTableau, String> {
    let mut rows = j.rows.clone();
    rows.reverse();
    Ok(NormalTableau::from_rows(alphabet, rows))
}

#[derive(Serialize, Deserialize)]
pub struct MatrixJson {
    pub g: GType,
    pub m: u8,
    pub n: u8,
    pub entries: Vec<MatrixEntryJson>,
}

#[derive(Serialize, Deserialize)]
pub struct MatrixEntryJson {
    pub i: Letter,
    pub j: Letter,
    pub c: u32,
}

pub fn matrix_to_json(c: &MatrixElement) -> MatrixJson {
    MatrixJson {
        g: c.g,
        m: c.alphabet.m,
        n: c.alphabet.n,
        entries: c
            .support()
            .map(|((i, j), v)| MatrixEntryJson { i, j, c: v })
            .collect(),
    }
}

pub fn matrix_from_json(j: &MatrixJson) -> Result<MatrixElement, String> {
    let alphabet = Alphabet::new(j.m, j.n);
    let mut c = MatrixElement::zero(j.g, alphabet);
    for e in &j.entries {
        if !c.cell_allowed((e.i, e.j)) {
            return Err(format!("({},{}) is not a root cell", e.i, e.j));
        }
        c.set((e.i, e.j), e.c);
    }
    Ok(c)
}

#[derive(Serialize, Deserialize)]
pub struct BiwordJson {
    pub top: Vec<Letter>,
    pub bottom: Vec<Letter>,
}

pub fn biword_to_json(b: &Biword) -> BiwordJson {
    BiwordJson { top: b.top.clone(), bottom: b.bottom.clone() }
}

#[derive(Serialize, Deserialize)]
pub struct ArrayJson {
    pub cols: Vec<ArrayColJson>,
}

#[derive(Serialize, Deserialize)]
pub struct ArrayColJson {
    pub k: i64,
    pub x: u32,
    pub y: u32,
}

pub fn array_to_json(a: &TwoRowedArray) -> ArrayJson {
    let cols = (-1..=a.max_col())
        .rev()
        .filter(|&k| a.x(k) != 0 || a.y(k) != 0)
        .map(|k| ArrayColJson { k, x: a.x(k), y: a.y(k) })
        .collect();
    ArrayJson { cols }
}

pub fn array_from_json(j: &ArrayJson) -> TwoRowedArray {
    TwoRowedArray::from_cols(
        &j.cols.iter().map(|c| (c.k, c.x, c.y)).collect::<Vec<_>>(),
    )
}

#[derive(Serialize, Deserialize)]
pub struct TupleJson {
    pub g: GType,
    pub m: u8,
    pub n: u8,
    pub lambda: Vec<u32>,
    pub ell: u32,
    pub columns: Vec<TupleColumnJson>,
}

#[derive(Serialize, Deserialize)]
pub struct TupleColumnJson {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    /// Rows of the two-column piece, bottom row first, each left to right.
    pub rows: Vec<Vec<Letter>>,
    /// Row of the piece's lowest box relative to the baseline.
    pub anchor: i64,
}

pub fn tuple_to_json(t: &SpinorTuple) -> TupleJson {
    TupleJson {
        g: t.g,
        m: t.alphabet.m,
        n: t.alphabet.n,
        lambda: t.lambda.parts().to_vec(),
        ell: t.ell,
        columns: t
            .columns
            .iter()
            .map(|col| {
                let height = (col.b + col.c).max(col.c + col.a) as i64;
                let top = 1 - (col.b + col.c) as i64; // top row of the piece
                let mut rows = Vec::new();
                for r in (top..=col.a.max(0) as i64).rev() {
                    let mut row = Vec::new();
                    // left cell at row r
                    let lidx = r + col.c as i64 - 1;
                    if (0..(col.c + col.a) as i64).contains(&lidx) {
                        row.push(col.left[lidx as usize]);
                    }
                    let ridx = r + (col.b + col.c) as i64 - 1;
                    if (0..(col.b + col.c) as i64).contains(&ridx) {
                        row.push(col.right[ridx as usize]);
                    }
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
                let _ = height;
                TupleColumnJson {
                    a: col.a,
                    b: col.b,
                    c: col.c,
                    rows,
                    anchor: col.a as i64,
                }
            })
            .collect(),
    }
}

pub fn tuple_from_json(j: &TupleJson) -> Result<SpinorTuple, String> {
    let alphabet = Alphabet::new(j.m, j.n);
    let mut columns = Vec::new();
    for cj in &j.columns {
        // rebuild the two columns from the rows
        let top = 1 - (cj.b + cj.c) as i64;
        let mut left = vec![0u8; (cj.c + cj.a) as usize];
        let mut right = vec![0u8; (cj.b + cj.c) as usize];
        let mut rows = cj.rows.clone();
        rows.reverse(); // top row first now
        let mut r = top;
        for row in rows {
            let lidx = r + cj.c as i64 - 1;
            let ridx = r + (cj.b + cj.c) as i64 - 1;
            let mut it = row.into_iter();
            if (0..(cj.c + cj.a) as i64).contains(&lidx) {
                left[lidx as usize] = it.next().ok_or("row too short")?;
            }
            if (0..(cj.b + cj.c) as i64).contains(&ridx) {
                right[ridx as usize] = it.next().ok_or("row too short")?;
            }
            if it.next().is_some() {
                return Err("row too long".into());
            }
            r += 1;
        }
        let col = SpinorColumn { a: cj.a, b: cj.b, c: cj.c, left, right };
        col.validate(&alphabet)?;
        columns.push(col);
    }
    Ok(SpinorTuple {
        g: j.g,
        alphabet,
        lambda: Partition::new(j.lambda.clone()),
        ell: j.ell,
        columns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn tuple_roundtrip() {
        for t in [fixtures::spin_c25_tuple(), fixtures::spin_d44_tuple()] {
            let j = tuple_to_json(&t);
            let s = serde_json::to_string(&j).unwrap();
            let back: TupleJson = serde_json::from_str(&s).unwrap();
            assert_eq!(tuple_from_json(&back).unwrap(), t);
        }
    }

    #[test]
    fn tableau_roundtrip() {
        let t = fixtures::burge_d44_tableau();
        let j = tableau_to_json(&t);
        assert_eq!(tableau_from_json(t.alphabet, &j).unwrap(), t);
    }
}
