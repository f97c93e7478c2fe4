//! Enumerate multiplicity arrays and sweep the insertion bijection over them.
//!
//! Run with: cargo run --release --example enumerate_verify

use std::collections::HashSet;
use supercrystal::alphabet::{Alphabet, GType};
use supercrystal::correspondence::{inverse_kappa, kappa};
use supercrystal::enumerate::enumerate_matrices;
use supercrystal::partition::parity_family_check;
use supercrystal::verify::tableau_weight;

fn main() {
    for (g, m, n, budget) in [(GType::B, 2, 1, 3), (GType::C, 2, 1, 3), (GType::D, 2, 2, 4)] {
        let alphabet = Alphabet::new(m, n);
        let all = enumerate_matrices(g, alphabet, budget);
        let mut images = HashSet::new();
        for c in &all {
            let t = kappa(c);
            assert!(parity_family_check(&t.shape(), g));
            assert_eq!(tableau_weight(&t), c.weight());
            assert_eq!(&inverse_kappa(&t, g).unwrap(), c);
            images.insert(t);
        }
        println!(
            "type {g} ({m}|{n}) budget {budget}: {} arrays, {} distinct images, all invertible",
            all.len(),
            images.len()
        );
        assert_eq!(all.len(), images.len());
    }
}
