//! Frozen worked examples: every fixture re-derives its data from the
//! library and diffs against the expected values recorded here.

use crate::alphabet::{Alphabet, GType};
use crate::array::{apply_f_array, build_t_array, f_map, glue_gt_m, glue_lt_m, reduce_sigma, sigma, TwoRowedArray};
use crate::correspondence::{inverse_kappa, kappa, kappa_d_biword, pq_at_index};
use crate::matrix::{region_split, d_f_m, Biword, MatrixElement};
use crate::partition::Partition;
use crate::spinor::{default_admissible, embed, separate, tuple_check, SpinorColumn, SpinorTuple};
use crate::tableau::{NormalTableau, Tableau};
use crate::word::{apply_e_tableau, apply_f_tableau};

fn tab(alphabet: Alphabet, rows_bottom_first: &[&[u8]]) -> Tableau {
    let rows: Vec<Vec<u8>> = rows_bottom_first.iter().map(|r| r.to_vec()).collect();
    Tableau::from_rows_bottom_first(alphabet, &rows)
}

pub fn a_c25() -> Alphabet {
    Alphabet::new(2, 5)
}
pub fn a_d44() -> Alphabet {
    Alphabet::new(4, 4)
}
pub fn a_d24() -> Alphabet {
    Alphabet::new(2, 4)
}
pub fn a_d43() -> Alphabet {
    Alphabet::new(4, 3)
}

// ---------------------------------------------------------------------------
// Burge chain over d(4|4) and its lowering by the 0-operator.

pub fn burge_d44_biword() -> Biword {
    Biword { top: vec![2, 3, 3, 3, 4, 5], bottom: vec![8, 4, 4, 4, 6, 7] }
}

pub fn burge_d44_matrix() -> MatrixElement {
    MatrixElement::from_biword(GType::D, a_d44(), &burge_d44_biword()).unwrap()
}

pub fn burge_d44_tableau() -> Tableau {
    tab(a_d44(), &[&[4, 4, 5, 7, 8], &[2, 3, 3, 4, 6], &[4], &[3]])
}

pub fn f0_d44_biword() -> Biword {
    Biword { top: vec![1, 2, 3, 3, 3, 4, 5], bottom: vec![2, 8, 4, 4, 4, 6, 7] }
}

pub fn f0_d44_tableau() -> Tableau {
    tab(a_d44(), &[&[4, 4, 5, 7, 8], &[2, 3, 3, 4, 6], &[4], &[3], &[2], &[1]])
}

// ---------------------------------------------------------------------------
// Symmetric RSK over c(2|5).

pub fn rsk_c25_matrix() -> MatrixElement {
    MatrixElement::from_entries(
        GType::C,
        a_c25(),
        &[(1, 2, 2), (2, 3, 1), (2, 4, 1), (2, 7, 1), (3, 4, 1), (3, 6, 1), (4, 5, 1)],
    )
}

pub fn rsk_c25_tableau() -> Tableau {
    tab(a_c25(), &[&[2, 3, 4, 5, 6, 7], &[2, 2, 3, 4], &[1, 1, 3, 4], &[2, 2]])
}

pub fn rsk_c25_f0_tableau() -> Tableau {
    tab(a_c25(), &[&[2, 3, 4, 5, 6, 7], &[1, 1, 2, 2, 3, 4], &[1, 1, 3, 4], &[2, 2]])
}

// ---------------------------------------------------------------------------
// Low-index gluing over d(2|4).

pub fn glue_low_d24_matrix() -> MatrixElement {
    let bw = Biword {
        top: vec![1, 1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 5],
        bottom: vec![6, 5, 4, 2, 2, 6, 4, 3, 4, 5, 6, 6, 4, 6, 5],
    };
    MatrixElement::from_biword(GType::D, a_d24(), &bw).unwrap()
}

pub fn d24_inner_tableau() -> Tableau {
    // the image of the deeper triangle, shared by both gluing examples
    tab(a_d24(), &[&[4, 5, 6], &[3, 5, 6], &[3, 4, 6], &[3, 4, 5], &[4], &[3]])
}

pub fn glue_low_d24_chain() -> Vec<Tableau> {
    let a = a_d24();
    vec![
        tab(a, &[&[2, 2, 4], &[1, 1, 2]]),
        tab(a, &[&[2, 2, 2, 3, 4, 6], &[1, 1, 1, 1, 3, 4], &[4], &[2]]),
        tab(
            a,
            &[&[2, 2, 2, 4, 5, 6], &[1, 1, 1, 3, 5, 6], &[3, 4, 6], &[1, 3, 4], &[4], &[2]],
        ),
        tab(
            a,
            &[
                &[2, 2, 2, 2, 3, 4, 5, 6],
                &[1, 1, 1, 1, 3, 4, 5, 6],
                &[4, 5, 6],
                &[3, 5, 6],
                &[3, 4, 6],
                &[1, 3, 4],
                &[4],
                &[2],
            ],
        ),
    ]
}

// ---------------------------------------------------------------------------
// High-index gluing over d(2|4).

pub fn glue_high_d24_matrix() -> MatrixElement {
    let bw = Biword { top: vec![3, 3, 3, 3, 4, 4, 5], bottom: vec![4, 5, 6, 6, 4, 6, 5] };
    MatrixElement::from_biword(GType::D, a_d24(), &bw).unwrap()
}

pub fn glue_high_d24_array() -> TwoRowedArray {
    TwoRowedArray::from_cols(&[(2, 1, 1), (1, 2, 0), (0, 1, 3)])
}

pub fn glue_high_d24_f_array() -> TwoRowedArray {
    TwoRowedArray::from_cols(&[(3, 3, 1), (2, 0, 2), (1, 1, 1)])
}

// ---------------------------------------------------------------------------
// The isotropic index over d(4|3).

pub fn fm_blocked_d43_matrix() -> MatrixElement {
    let bw = Biword { top: vec![4, 4, 5, 5, 5, 6], bottom: vec![7, 6, 5, 7, 7, 6] };
    MatrixElement::from_biword(GType::D, a_d43(), &bw).unwrap()
}

pub fn fm_blocked_d43_tableau() -> Tableau {
    tab(a_d43(), &[&[5, 6, 7], &[5, 6, 7], &[5, 6, 7], &[4, 4, 5]])
}

pub fn fm_flip_d43_matrix() -> MatrixElement {
    let bw = Biword { top: vec![4, 4, 5, 5, 5, 6], bottom: vec![7, 6, 6, 7, 7, 6] };
    MatrixElement::from_biword(GType::D, a_d43(), &bw).unwrap()
}

pub fn fm_flip_d43_result_matrix() -> MatrixElement {
    let bw = Biword { top: vec![4, 5, 5, 5, 5, 6], bottom: vec![7, 6, 6, 7, 7, 6] };
    MatrixElement::from_biword(GType::D, a_d43(), &bw).unwrap()
}

pub fn fm_flip_d43_tableau() -> Tableau {
    tab(a_d43(), &[&[5, 6, 7], &[5, 6, 7], &[5, 6, 7], &[4, 4, 6]])
}

pub fn fm_flip_d43_result_tableau() -> Tableau {
    tab(a_d43(), &[&[5, 6, 7], &[5, 6, 7], &[5, 6, 7], &[4, 5, 6]])
}

// ---------------------------------------------------------------------------
// Spinor tuples and their separations.

pub fn spin_c25_tuple() -> SpinorTuple {
    SpinorTuple {
        g: GType::C,
        alphabet: a_c25(),
        lambda: Partition::new(vec![3, 2, 1, 1]),
        ell: 3,
        columns: vec![
            SpinorColumn { a: 4, b: 0, c: 1, left: vec![2, 3, 3, 5, 6], right: vec![3] },
            SpinorColumn { a: 2, b: 0, c: 3, left: vec![1, 2, 4, 4, 4], right: vec![1, 2, 5] },
            SpinorColumn { a: 1, b: 0, c: 4, left: vec![2, 3, 3, 5, 6], right: vec![2, 4, 4, 7] },
        ],
    }
}

pub fn sep_c25_tail() -> NormalTableau {
    NormalTableau::from_rows(a_c25(), vec![vec![3, 4, 5], vec![3, 4], vec![5], vec![6]])
}

pub fn spin_d44_tuple() -> SpinorTuple {
    SpinorTuple {
        g: GType::D,
        alphabet: a_d44(),
        lambda: Partition::new(vec![4, 4, 2]),
        ell: 8,
        columns: vec![
            SpinorColumn { a: 3, b: 2, c: 0, left: vec![3, 4, 7], right: vec![2, 4] },
            SpinorColumn { a: 3, b: 2, c: 0, left: vec![4, 5, 8], right: vec![3, 4] },
            SpinorColumn { a: 2, b: 2, c: 0, left: vec![3, 6], right: vec![3, 6] },
            SpinorColumn { a: 2, b: 2, c: 2, left: vec![4, 5, 7, 7], right: vec![3, 4, 6, 8] },
        ],
    }
}

pub fn sep_d44_tail() -> NormalTableau {
    NormalTableau::from_rows(a_d44(), vec![vec![3, 3, 5, 6], vec![4, 4, 6, 7], vec![7, 8]])
}

// ---------------------------------------------------------------------------
// The fixture registry.

pub struct Fixture {
    pub name: &'static str,
    pub provenance: &'static str,
    pub check: fn() -> Result<(), String>,
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: derived\n{got:?}\nexpected\n{want:?}"))
    }
}

fn check_burge_d44() -> Result<(), String> {
    let c = burge_d44_matrix();
    expect("biword round trip", c.to_biword(), burge_d44_biword())?;
    expect("insertion tableau", kappa(&c), burge_d44_tableau())?;
    expect("inverse", inverse_kappa(&burge_d44_tableau(), GType::D)?, c)
}

fn check_f0_d44() -> Result<(), String> {
    let c = burge_d44_matrix();
    let up = c.f0();
    expect("lowered biword", up.to_biword(), f0_d44_biword())?;
    expect("lowered tableau", kappa(&up), f0_d44_tableau())?;
    // the tableau-side lowering matches: the difference is one vertical
    // domino of a 1 over a 2 at a corner
    let diff = f0_d44_tableau().subtableau_diff(&burge_d44_tableau());
    expect("domino difference", diff, Some(vec![(1, vec![1, 2])]))
}

fn check_rsk_c25() -> Result<(), String> {
    let c = rsk_c25_matrix();
    expect("insertion tableau", kappa(&c), rsk_c25_tableau())?;
    expect("lowered tableau", kappa(&c.f0()), rsk_c25_f0_tableau())?;
    expect("inverse", inverse_kappa(&rsk_c25_tableau(), GType::C)?, c)
}

fn check_glue_low_d24() -> Result<(), String> {
    let c = glue_low_d24_matrix();
    let i = 1u8;
    let (comp, tri, _loz, next) = region_split(&c, i);
    if !comp.is_zero() {
        return Err("support escapes the big triangle".into());
    }
    expect("deeper image", kappa(&next), d24_inner_tableau())?;
    let pq = pq_at_index(&c, i);
    let mu = kappa(&next).shape();
    expect("deeper shape", mu.clone(), Partition::new(vec![3, 3, 3, 3, 1, 1]))?;
    let chain = glue_lt_m(&pq.p, &pq.q, tri.get((i, i + 1)), &mu, i);
    expect("gluing chain", chain, glue_low_d24_chain())?;
    expect(
        "glued equals the correspondence",
        glue_low_d24_chain().last().unwrap().clone(),
        kappa(&c),
    )
}

fn check_glue_high_d24() -> Result<(), String> {
    let c = glue_high_d24_matrix();
    let i = 3u8;
    expect("whole image", kappa(&c), d24_inner_tableau())?;
    let (_, tri, _, next) = region_split(&c, i);
    expect(
        "deeper image",
        kappa(&next),
        Tableau::from_cols(a_d24(), vec![vec![5, 5]]),
    )?;
    expect(
        "triangle data",
        (tri.get((3, 3)), tri.get((3, 4)), tri.get((4, 4))),
        (0, 1, 1),
    )?;
    let (arr, pq) = build_t_array(&c, i);
    expect("array", arr.clone(), glue_high_d24_array())?;
    let fx = f_map(&arr);
    expect("transformed array", fx.clone(), glue_high_d24_f_array())?;
    expect("glued", glue_gt_m(&pq.p, &fx, i), d24_inner_tableau())
}

fn check_array_examples() -> Result<(), String> {
    let x = TwoRowedArray::from_cols(&[(1, 3, 2), (0, 2, 1)]);
    let s: String = sigma(&x).iter().map(|&(c, _)| c).collect();
    expect("signature", s, "--+++-++".to_string())?;
    let r: String = reduce_sigma(&sigma(&x)).iter().map(|&(c, _)| c).collect();
    expect("reduced signature", r, "--++++".to_string())?;
    expect(
        "transform",
        f_map(&x),
        TwoRowedArray::from_cols(&[(2, 4, 2), (1, 0, 1), (0, 1, 0)]),
    )?;
    expect(
        "lowering",
        apply_f_array(&x),
        Some(TwoRowedArray::from_cols(&[(1, 2, 3), (0, 2, 1)])),
    )?;
    expect(
        "transform commutes",
        f_map(&apply_f_array(&x).unwrap()),
        apply_f_array(&f_map(&x)).unwrap(),
    )?;
    let mut x2 = TwoRowedArray::from_cols(&[(1, 1, 0), (0, 1, 1)]);
    x2.set_y(-1, 1);
    let s: String = sigma(&x2).iter().map(|&(c, _)| c).collect();
    expect("second signature", s, "+-+-".to_string())?;
    let fx2 = f_map(&x2);
    let mut want = TwoRowedArray::from_cols(&[(2, 2, 0), (1, 0, 1)]);
    want.set_y(-1, 1);
    expect("second transform", fx2.clone(), want)?;
    let s: String = sigma(&fx2).iter().map(|&(c, _)| c).collect();
    expect("second transformed signature", s, "++--".to_string())?;
    expect("both reduce to nothing", reduce_sigma(&sigma(&x2)).len(), 0)?;
    expect("and after transform", reduce_sigma(&sigma(&fx2)).len(), 0)
}

fn check_fm_d43() -> Result<(), String> {
    let c1 = fm_blocked_d43_matrix();
    expect("blocked image", kappa(&c1), fm_blocked_d43_tableau())?;
    expect("blocked matrix side", d_f_m(&c1), None)?;
    expect("blocked tableau side", apply_f_tableau(&fm_blocked_d43_tableau(), 4), None)?;
    let c2 = fm_flip_d43_matrix();
    expect("flip image", kappa(&c2), fm_flip_d43_tableau())?;
    expect("flipped matrix", d_f_m(&c2), Some(fm_flip_d43_result_matrix()))?;
    expect("flipped image", kappa(&fm_flip_d43_result_matrix()), fm_flip_d43_result_tableau())?;
    expect(
        "flip on the tableau side",
        apply_f_tableau(&fm_flip_d43_tableau(), 4),
        Some(fm_flip_d43_result_tableau()),
    )?;
    expect(
        "and its inverse",
        apply_e_tableau(&fm_flip_d43_result_tableau(), 4),
        Some(fm_flip_d43_tableau()),
    )
}

fn check_sep_c25() -> Result<(), String> {
    let t = spin_c25_tuple();
    if !tuple_check(&t, &default_admissible) {
        return Err("tuple fails admissibility".into());
    }
    let bt = separate(&t)?;
    expect("body", bt.body, rsk_c25_tableau())?;
    expect("tail", bt.tail, sep_c25_tail())?;
    let (m, tail) = embed(&t)?;
    expect("embedded matrix", m, rsk_c25_matrix())?;
    expect("embedded tail", tail, sep_c25_tail())
}

fn check_sep_d44() -> Result<(), String> {
    let t = spin_d44_tuple();
    if !tuple_check(&t, &default_admissible) {
        return Err("tuple fails admissibility".into());
    }
    let bt = separate(&t)?;
    expect("body", bt.body, burge_d44_tableau())?;
    expect("tail", bt.tail, sep_d44_tail())?;
    let (m, tail) = embed(&t)?;
    expect("embedded matrix", m, burge_d44_matrix())?;
    expect("embedded tail", tail, sep_d44_tail())
}

fn check_burge_step() -> Result<(), String> {
    // the two-step start of the insertion chain
    let a = a_d44();
    let p6 = kappa_d_biword(&a, &Biword { top: vec![5], bottom: vec![7] });
    expect("first step", p6.clone(), Tableau::from_cols(a, vec![vec![5, 7]]))?;
    let (u, _) = p6.column_insert(6);
    expect("bare insertion", u, Tableau::from_cols(a, vec![vec![6, 7], vec![5]]))?;
    let p5 = kappa_d_biword(&a, &Biword { top: vec![4, 5], bottom: vec![6, 7] });
    expect("recorded step", p5, Tableau::from_cols(a, vec![vec![6, 7], vec![4, 5]]))
}

pub fn registry() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "burge-d44",
            provenance: "worked Burge insertion chain over the (4|4) alphabet",
            check: check_burge_d44,
        },
        Fixture {
            name: "burge-step-d44",
            provenance: "first two steps of the same insertion chain",
            check: check_burge_step,
        },
        Fixture {
            name: "f0-domino-d44",
            provenance: "0-operator compatibility on the same chain",
            check: check_f0_d44,
        },
        Fixture {
            name: "rsk-c25",
            provenance: "symmetric-matrix insertion over the (2|5) alphabet",
            check: check_rsk_c25,
        },
        Fixture {
            name: "glue-low-d24",
            provenance: "low-index gluing chain over the (2|4) alphabet",
            check: check_glue_low_d24,
        },
        Fixture {
            name: "glue-high-d24",
            provenance: "high-index array gluing over the (2|4) alphabet",
            check: check_glue_high_d24,
        },
        Fixture {
            name: "arrays",
            provenance: "two-rowed array signature and transform tables",
            check: check_array_examples,
        },
        Fixture {
            name: "fm-d43",
            provenance: "isotropic-index cases over the (4|3) alphabet",
            check: check_fm_d43,
        },
        Fixture {
            name: "sep-c25",
            provenance: "separation and embedding of the (2|5) spinor tuple",
            check: check_sep_c25,
        },
        Fixture {
            name: "sep-d44",
            provenance: "separation and embedding of the (4|4) spinor tuple",
            check: check_sep_d44,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_reproduce() {
        for f in registry() {
            if let Err(e) = (f.check)() {
                panic!("fixture {} failed: {e}", f.name);
            }
        }
    }
}
