//! Build the crystal graph of a word closure and print it as DOT.
//!
//! Run with: cargo run --example crystal_graph_dot

use supercrystal::alphabet::Alphabet;
use supercrystal::graph::{crystal_graph, to_dot, GraphElement};
use supercrystal::weight::Weight;
use supercrystal::word::{apply_e_word, apply_f_word, word_weight};

#[derive(Clone)]
struct Word(Alphabet, Vec<u8>);

impl GraphElement for Word {
    fn key(&self) -> String {
        format!("{:?}", self.1)
    }
    fn weight(&self) -> Weight {
        word_weight(&self.0, &self.1)
    }
    fn lower(&self, i: u8) -> Option<Self> {
        apply_f_word(&self.0, &self.1, i).map(|w| Word(self.0, w))
    }
    fn raise(&self, i: u8) -> Option<Self> {
        apply_e_word(&self.0, &self.1, i).map(|w| Word(self.0, w))
    }
}

fn main() {
    let alphabet = Alphabet::new(2, 1);
    // the column of height two: its closure has four vertices, because the
    // odd letter may repeat in a column
    let seed = Word(alphabet, vec![1, 2]);
    let indices: Vec<u8> = alphabet.indices().collect();
    let g = crystal_graph(&[seed], &indices, 1000).unwrap();
    eprintln!(
        "{} vertices, {} edges, {} component(s)",
        g.vertices.len(),
        g.edges.len(),
        g.canonical_components().len()
    );
    println!("{}", to_dot(&g));
}
