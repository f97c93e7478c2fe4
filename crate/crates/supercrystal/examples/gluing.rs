//! Rebuilding an insertion tableau from its parts: the recording strips glue
//! back below the isotropic index, the transformed counters above it.
//!
//! Run with: cargo run --example gluing

use supercrystal::alphabet::{Alphabet, GType};
use supercrystal::array::{build_t_array, f_map, glue_gt_m, glue_lt_m};
use supercrystal::correspondence::{kappa, pq_at_index};
use supercrystal::matrix::{region_split, Biword, MatrixElement};

fn main() {
    let alphabet = Alphabet::new(2, 4);

    // low index: strips of the recording rectify and glue back, vertical
    // dominoes migrate down to their final rows
    let c = MatrixElement::from_biword(
        GType::D,
        alphabet,
        &Biword {
            top: vec![1, 1, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3, 4, 4, 5],
            bottom: vec![6, 5, 4, 2, 2, 6, 4, 3, 4, 5, 6, 6, 4, 6, 5],
        },
    )
    .unwrap();
    let i = 1;
    let pq = pq_at_index(&c, i);
    let (_, tri, _, next) = region_split(&c, i);
    let mu = kappa(&next).shape();
    let chain = glue_lt_m(&pq.p, &pq.q, tri.get((i, i + 1)), &mu, i);
    println!("low-index gluing chain (outermost strip first):");
    for (n, t) in chain.iter().enumerate() {
        println!("stage {n}:");
        for row in t.rows_bottom_first().iter().rev() {
            println!("  {:?}", row);
        }
    }
    assert_eq!(chain.last().unwrap(), &kappa(&c));
    println!("final stage equals the insertion image\n");

    // high index: the two-rowed array transform tells how many letters stack
    // on each column
    let c = MatrixElement::from_biword(
        GType::D,
        alphabet,
        &Biword { top: vec![3, 3, 3, 3, 4, 4, 5], bottom: vec![4, 5, 6, 6, 4, 6, 5] },
    )
    .unwrap();
    let i = 3;
    let (arr, pq) = build_t_array(&c, i);
    println!("high-index array x: {:?}", (0..=arr.max_col()).rev().map(|k| arr.x(k)).collect::<Vec<_>>());
    println!("high-index array y: {:?}", (0..=arr.max_col()).rev().map(|k| arr.y(k)).collect::<Vec<_>>());
    let glued = glue_gt_m(&pq.p, &f_map(&arr), i);
    assert_eq!(glued, kappa(&c));
    println!("stacking the transformed counters rebuilds the image");
}
