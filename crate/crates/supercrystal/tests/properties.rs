//! Property tests over randomized inputs.

use proptest::prelude::*;
use supercrystal::alphabet::{Alphabet, GType};
use supercrystal::array::{apply_e_array, apply_f_array, TwoRowedArray};
use supercrystal::matrix::{root_cells, MatrixElement};
use supercrystal::partition::Partition;
use supercrystal::tableau::{SkewTableau, Tableau};
use supercrystal::verify::same_crystal_position;
use supercrystal::word::{apply_e_word, apply_f_word};

fn arb_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1u32..8, 0..6).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v)
    })
}

fn arb_word(alphabet: Alphabet, max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(1u8..=alphabet.size(), 0..=max_len)
}

proptest! {
    #[test]
    fn conjugate_is_involutive(p in arb_partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn insertion_grows_by_one_box(w in arb_word(Alphabet::new(2, 2), 8)) {
        let a = Alphabet::new(2, 2);
        let mut t = Tableau::empty(a);
        for &x in &w {
            let before = t.size();
            let (next, rec) = t.column_insert(x);
            prop_assert_eq!(next.size(), before + 1);
            prop_assert!(next.validate().is_ok());
            prop_assert_eq!(*rec.route.last().unwrap(), rec.terminal);
            t = next;
        }
    }

    #[test]
    fn biword_roundtrip(entries in proptest::collection::vec((0usize..8, 1u32..3), 0..6)) {
        let a = Alphabet::new(2, 2);
        let cells = root_cells(GType::D, &a);
        let mut c = MatrixElement::zero(GType::D, a);
        for (idx, v) in entries {
            let cell = cells[idx % cells.len()];
            let cap = if a.parity(cell.0) != a.parity(cell.1) { 1 } else { v };
            c.set(cell, cap);
        }
        let bw = c.to_biword();
        prop_assert_eq!(MatrixElement::from_biword(GType::D, a, &bw).unwrap(), c);
    }

    #[test]
    fn word_operators_are_partial_inverses(
        w in arb_word(Alphabet::new(2, 3), 7),
        i in 1u8..=4,
    ) {
        let a = Alphabet::new(2, 3);
        if let Some(fw) = apply_f_word(&a, &w, i) {
            let back = apply_e_word(&a, &fw, i);
            prop_assert_eq!(back, Some(w.clone()));
        }
        if let Some(ew) = apply_e_word(&a, &w, i) {
            let back = apply_f_word(&a, &ew, i);
            prop_assert_eq!(back, Some(w.clone()));
        }
    }

    #[test]
    fn isotropic_operator_squares_to_zero(w in arb_word(Alphabet::new(3, 2), 7)) {
        let a = Alphabet::new(3, 2);
        if let Some(fw) = apply_f_word(&a, &w, a.m) {
            prop_assert_eq!(apply_f_word(&a, &fw, a.m), None);
        }
    }

    #[test]
    fn array_operators_are_partial_inverses(
        cols in proptest::collection::vec((0u32..4, 0u32..4), 6)
    ) {
        let mut x = TwoRowedArray::new();
        for (k, &(xv, yv)) in cols.iter().enumerate() {
            x.set_x(k as i64 - 1, xv);
            x.set_y(k as i64 - 1, yv);
        }
        if let Some(fx) = apply_f_array(&x) {
            let back = apply_e_array(&fx);
            prop_assert_eq!(back, Some(x.clone()));
        }
        if let Some(ex) = apply_e_array(&x) {
            let back = apply_f_array(&ex);
            prop_assert_eq!(back, Some(x.clone()));
        }
    }
}

/// Sliding a two-row strip preserves the crystal class of its word.
#[test]
fn jdt_slide_preserves_crystal_class() {
    let a = Alphabet::new(2, 2);
    // all two-row skew strips with offset 1..3 and rows up to 3 cells
    let mut checked = 0;
    for off in 1usize..3 {
        for top_len in 1usize..3 {
            for bot_len in 1usize..=(off + top_len).min(3) {
                let mut stack = vec![(Vec::<u8>::new(), Vec::<u8>::new())];
                for _ in 0..top_len + bot_len {
                    let mut next = Vec::new();
                    for (t, b) in &stack {
                        if t.len() < top_len {
                            for x in a.letters() {
                                let mut t2 = t.clone();
                                t2.push(x);
                                next.push((t2, b.clone()));
                            }
                        } else {
                            for x in a.letters() {
                                let mut b2 = b.clone();
                                b2.push(x);
                                next.push((t.clone(), b2));
                            }
                        }
                    }
                    stack = next;
                }
                for (t, b) in stack {
                    let rows = vec![(off, t.clone()), (0, b.clone())];
                    let cand = SkewTableau { alphabet: a, rows };
                    if cand.validate().is_err() {
                        continue;
                    }
                    let word_before: Vec<u8> = {
                        // columns right to left
                        let mut w = Vec::new();
                        for c in (0..off + top_len).rev() {
                            if let Some(x) = cand.entry(0, c) {
                                w.push(x);
                            }
                            if let Some(x) = cand.entry(1, c) {
                                w.push(x);
                            }
                        }
                        w
                    };
                    let rect = cand.rectify();
                    assert!(
                        same_crystal_position(a, &word_before, &rect.word()),
                        "class changed for {:?}",
                        cand
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}
