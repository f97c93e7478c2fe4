//! Two-rowed arrays: signatures, the doubling transform, crystal operators,
//! and reduced decompositions.
//!
//! Run with: cargo run --example two_rowed_arrays

use supercrystal::array::{
    apply_f_array, f_map, is_reduced, reduce_sigma, reduced_decompose, sigma, TwoRowedArray,
};

fn show(label: &str, a: &TwoRowedArray) {
    let hi = a.max_col();
    print!("{label}: k:");
    for k in (-1..=hi).rev() {
        print!("{k:>3}");
    }
    print!("\n{}  x:", " ".repeat(label.len()));
    for k in (-1..=hi).rev() {
        print!("{:>3}", a.x(k));
    }
    print!("\n{}  y:", " ".repeat(label.len()));
    for k in (-1..=hi).rev() {
        print!("{:>3}", a.y(k));
    }
    println!();
}

fn main() {
    let x = TwoRowedArray::from_cols(&[(1, 3, 2), (0, 2, 1)]);
    show("X", &x);
    let s: String = sigma(&x).iter().map(|&(c, _)| c).collect();
    let r: String = reduce_sigma(&sigma(&x)).iter().map(|&(c, _)| c).collect();
    println!("signature {s}  reduced {r}");

    show("F(X)", &f_map(&x));
    let fx = apply_f_array(&x).unwrap();
    show("lowered X", &fx);
    assert_eq!(f_map(&fx), apply_f_array(&f_map(&x)).unwrap());
    println!("the transform commutes with the lowering operator");

    let with_block = x.plus(&TwoRowedArray::block(3, 4));
    println!("\nreduced? {}", is_reduced(&with_block));
    let (red, blocks) = reduced_decompose(&with_block);
    show("reduced part", &red);
    println!("extracted blocks (column, count): {:?}", blocks);
}
