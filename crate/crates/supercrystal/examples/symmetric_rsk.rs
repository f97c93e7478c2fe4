//! Symmetric-matrix RSK for types b and c: the column word of the symmetric
//! picture is inserted back to front; the 0-operator grows the diagonal.
//!
//! Run with: cargo run --example symmetric_rsk

use supercrystal::alphabet::{Alphabet, GType};
use supercrystal::correspondence::{inverse_kappa_bc, kappa_bc};
use supercrystal::matrix::{symmetrize, MatrixElement};

fn main() {
    let alphabet = Alphabet::new(2, 5);
    let c = MatrixElement::from_entries(
        GType::C,
        alphabet,
        &[(1, 2, 2), (2, 3, 1), (2, 4, 1), (2, 7, 1), (3, 4, 1), (3, 6, 1), (4, 5, 1)],
    );

    println!("symmetric picture:");
    for row in &symmetrize(&c).entries {
        println!("  {:?}", row);
    }

    let p = kappa_bc(&c);
    println!("\ninsertion tableau (rows bottom first): ");
    for row in p.rows_bottom_first() {
        println!("  {:?}", row);
    }
    println!("shape {} with every row even", p.shape());

    let up = kappa_bc(&c.f0());
    println!("\nafter the 0-operator (a horizontal pair of 1s appears):");
    for row in up.rows_bottom_first() {
        println!("  {:?}", row);
    }

    assert_eq!(inverse_kappa_bc(&p, GType::C).unwrap(), c);
    println!("\nreverse insertion recovers the matrix");
}
