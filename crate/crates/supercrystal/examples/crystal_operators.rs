//! The three bracketing regimes of the crystal operators on words: standard
//! below the isotropic index, the flip rule at it, mirrored above it.
//!
//! Run with: cargo run --example crystal_operators

use supercrystal::alphabet::Alphabet;
use supercrystal::word::{apply_e_word, apply_f_word, eps_word, phi_word, signature};

fn main() {
    let alphabet = Alphabet::new(2, 3); // letters 1,2 even; 3,4,5 odd

    let w = vec![1, 2, 2, 1];
    println!("word {:?}", w);
    println!("  signature at 1: {:?}", signature(&w, 1));
    for i in alphabet.indices() {
        println!(
            "  i={i}: eps={} phi={} lower -> {:?}",
            eps_word(&alphabet, &w, i),
            phi_word(&alphabet, &w, i),
            apply_f_word(&alphabet, &w, i),
        );
    }

    // the isotropic index flips the leftmost 2 unless a 3 stands before it
    let free = vec![2, 1, 3];
    let blocked = vec![3, 1, 2];
    println!("\nisotropic index {} on {:?}: {:?}", alphabet.m, free, apply_f_word(&alphabet, &free, 2));
    println!("isotropic index {} on {:?}: {:?}", alphabet.m, blocked, apply_f_word(&alphabet, &blocked, 2));

    // above the isotropic index the bracketing mirrors: the rightmost
    // surviving plus is lowered
    let w = vec![3, 4];
    println!("\nmirrored regime: lower {:?} at 3 -> {:?}", w, apply_f_word(&alphabet, &w, 3));
    let fw = apply_f_word(&alphabet, &w, 3).unwrap();
    println!("raising undoes it: {:?}", apply_e_word(&alphabet, &fw, 3));
}
