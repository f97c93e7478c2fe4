//! Burge-style biword insertion over a graded alphabet, step by step, and
//! the inverse extraction.
//!
//! Run with: cargo run --example burge_insertion

use supercrystal::alphabet::{Alphabet, GType};
use supercrystal::correspondence::{inverse_kappa_d, kappa_d};
use supercrystal::matrix::{Biword, MatrixElement};
use supercrystal::tableau::Tableau;

fn show(t: &Tableau) {
    for row in t.rows_bottom_first().iter().rev() {
        let pad = t.width() - row.len();
        print!("{}", "  . ".repeat(pad));
        for x in row {
            print!("{x:>3} ");
        }
        println!();
    }
}

fn main() {
    let alphabet = Alphabet::new(4, 4);
    let bw = Biword { top: vec![2, 3, 3, 3, 4, 5], bottom: vec![8, 4, 4, 4, 6, 7] };
    println!("biword (top over bottom):");
    println!("  {:?}", bw.top);
    println!("  {:?}", bw.bottom);

    let mut t = Tableau::empty(alphabet);
    for (step, (top, bottom)) in bw.pairs().into_iter().rev().enumerate() {
        t = t.burge_insert(top, bottom);
        println!("\nafter inserting ({top},{bottom})  [step {}]:", step + 1);
        show(&t);
    }
    println!("\nfinal shape: {} (rotated)", t.shape());

    let c = MatrixElement::from_biword(GType::D, alphabet, &bw).unwrap();
    assert_eq!(kappa_d(&c), t);
    let back = inverse_kappa_d(&t).unwrap();
    assert_eq!(back, c);
    println!("inverse extraction recovers the biword: {:?}", back.to_biword().top);
}
