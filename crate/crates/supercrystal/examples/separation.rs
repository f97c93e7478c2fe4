//! Separate a spinor tuple into its anti-normal body and normal tail, then
//! embed it into the matrix picture.
//!
//! Run with: cargo run --example separation

use supercrystal::fixtures::{spin_c25_tuple, spin_d44_tuple};
use supercrystal::spinor::{default_admissible, embed, separate, tuple_check};

fn main() {
    for tuple in [spin_c25_tuple(), spin_d44_tuple()] {
        println!(
            "tuple over type {} with lambda {} and level {}:",
            tuple.g, tuple.lambda, tuple.ell
        );
        for col in &tuple.columns {
            println!(
                "  piece (a,b,c)=({},{},{}) left {:?} right {:?}",
                col.a, col.b, col.c, col.left, col.right
            );
        }
        assert!(tuple_check(&tuple, &default_admissible));

        let bt = separate(&tuple).unwrap();
        println!("body (shape {}, rows bottom first):", bt.body.shape());
        for row in bt.body.rows_bottom_first() {
            println!("  {:?}", row);
        }
        println!("tail (shape {}):", bt.tail.shape());
        for row in bt.tail.rows() {
            println!("  {:?}", row);
        }

        let (matrix, _) = embed(&tuple).unwrap();
        println!("embedded biword top:    {:?}", matrix.to_biword().top);
        println!("embedded biword bottom: {:?}\n", matrix.to_biword().bottom);
    }
}
