//! Thin command-line front end over the library.

use clap::{Parser, Subcommand};
use serde_json::json;
use std::io::Read;
use std::process::ExitCode;
use supercrystal::alphabet::{Alphabet, GType};
use supercrystal::correspondence::{inverse_kappa, kappa, matrix_e, matrix_f};
use supercrystal::graph::{crystal_graph, to_dot, GraphElement};
use supercrystal::json as sj;
use supercrystal::spinor;
use supercrystal::verify::{self, Params};
use supercrystal::weight::Weight;
use supercrystal::word::{apply_e_word, apply_f_word, word_weight};

#[derive(Parser)]
#[command(name = "supercrystal", about = "graded tableau correspondences and crystals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Matrix to tableau through the insertion correspondence (JSON on stdin).
    Kappa,
    /// Tableau to matrix (JSON with g/m/n and tableau rows on stdin).
    Unkappa {
        #[arg(long)]
        g: GType,
        #[arg(long)]
        m: u8,
        #[arg(long)]
        n: u8,
    },
    /// Apply a crystal operator to a matrix, tableau, word or array.
    Apply {
        #[arg(long)]
        i: u8,
        /// raise instead of lower
        #[arg(long)]
        raise: bool,
        /// one of: matrix, tableau, word, array
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 2)]
        m: u8,
        #[arg(long, default_value_t = 2)]
        n: u8,
        #[arg(long, default_value = "d")]
        g: GType,
    },
    /// Apply the doubling transform to a two-rowed array.
    Fmap,
    /// Separate a spinor tuple into its body and tail.
    Separate,
    /// Crystal graph of a word closure.
    Graph {
        #[arg(long, default_value_t = 2)]
        m: u8,
        #[arg(long, default_value_t = 2)]
        n: u8,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long, default_value_t = 10000)]
        budget: usize,
    },
    /// Run a named verification suite (or `all`).
    Verify {
        suite: String,
        #[arg(long, default_value_t = 20240811)]
        seed: u64,
    },
    /// Re-derive every frozen example and diff.
    Examples,
}

fn read_stdin() -> Result<String, String> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s).map_err(|e| e.to_string())?;
    Ok(s)
}

fn run() -> Result<i32, String> {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("SUPERCRYSTAL_THREADS") {
        if let Ok(k) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
        }
    }
    match cli.command {
        Command::Kappa => {
            let j: sj::MatrixJson =
                serde_json::from_str(&read_stdin()?).map_err(|e| e.to_string())?;
            let c = sj::matrix_from_json(&j)?;
            let t = kappa(&c);
            println!("{}", serde_json::to_string(&sj::tableau_to_json(&t)).unwrap());
            Ok(0)
        }
        Command::Unkappa { g, m, n } => {
            let j: sj::TableauJson =
                serde_json::from_str(&read_stdin()?).map_err(|e| e.to_string())?;
            let t = sj::tableau_from_json(Alphabet::new(m, n), &j)?;
            let c = inverse_kappa(&t, g)?;
            println!("{}", serde_json::to_string(&sj::matrix_to_json(&c)).unwrap());
            Ok(0)
        }
        Command::Apply { i, raise, kind, m, n, g } => {
            let input = read_stdin()?;
            let alphabet = Alphabet::new(m, n);
            let out = match kind.as_str() {
                "matrix" => {
                    let j: sj::MatrixJson =
                        serde_json::from_str(&input).map_err(|e| e.to_string())?;
                    let c = sj::matrix_from_json(&j)?;
                    let r = if raise { matrix_e(&c, i) } else { matrix_f(&c, i) };
                    match r {
                        Some(c) => serde_json::to_value(sj::matrix_to_json(&c)).unwrap(),
                        None => json!(null),
                    }
                }
                "tableau" => {
                    let j: sj::TableauJson =
                        serde_json::from_str(&input).map_err(|e| e.to_string())?;
                    let t = sj::tableau_from_json(alphabet, &j)?;
                    let r = if raise {
                        supercrystal::word::apply_e_tableau(&t, i)
                    } else {
                        supercrystal::word::apply_f_tableau(&t, i)
                    };
                    match r {
                        Some(t) => serde_json::to_value(sj::tableau_to_json(&t)).unwrap(),
                        None => json!(null),
                    }
                }
                "word" => {
                    let w: Vec<u8> =
                        serde_json::from_str(&input).map_err(|e| e.to_string())?;
                    let r = if raise {
                        apply_e_word(&alphabet, &w, i)
                    } else {
                        apply_f_word(&alphabet, &w, i)
                    };
                    json!(r)
                }
                "array" => {
                    let j: sj::ArrayJson =
                        serde_json::from_str(&input).map_err(|e| e.to_string())?;
                    let a = sj::array_from_json(&j);
                    let r = if raise {
                        supercrystal::array::apply_e_array(&a)
                    } else {
                        supercrystal::array::apply_f_array(&a)
                    };
                    match r {
                        Some(a) => serde_json::to_value(sj::array_to_json(&a)).unwrap(),
                        None => json!(null),
                    }
                }
                other => {
                    let _ = g;
                    return Err(format!("unknown kind `{other}`"));
                }
            };
            println!("{}", out);
            Ok(0)
        }
        Command::Fmap => {
            let j: sj::ArrayJson =
                serde_json::from_str(&read_stdin()?).map_err(|e| e.to_string())?;
            let a = sj::array_from_json(&j);
            let out = supercrystal::array::f_map(&a);
            println!("{}", serde_json::to_string(&sj::array_to_json(&out)).unwrap());
            Ok(0)
        }
        Command::Separate => {
            let j: sj::TupleJson =
                serde_json::from_str(&read_stdin()?).map_err(|e| e.to_string())?;
            let t = sj::tuple_from_json(&j)?;
            if !spinor::tuple_check(&t, &spinor::default_admissible) {
                return Err("tuple fails admissibility".into());
            }
            let bt = spinor::separate(&t)?;
            let (mat, tail) = spinor::embed(&t)?;
            let out = json!({
                "body": sj::tableau_to_json(&bt.body),
                "tail": sj::normal_to_json(&tail),
                "matrix": sj::matrix_to_json(&mat),
            });
            println!("{}", out);
            Ok(0)
        }
        Command::Graph { m, n, format, budget } => {
            let alphabet = Alphabet::new(m, n);
            let words: Vec<Vec<u8>> =
                serde_json::from_str(&read_stdin()?).map_err(|e| e.to_string())?;
            #[derive(Clone)]
            struct W(Alphabet, Vec<u8>);
            impl GraphElement for W {
                fn key(&self) -> String {
                    format!("{:?}", self.1)
                }
                fn weight(&self) -> Weight {
                    word_weight(&self.0, &self.1)
                }
                fn lower(&self, i: u8) -> Option<Self> {
                    apply_f_word(&self.0, &self.1, i).map(|w| W(self.0, w))
                }
                fn raise(&self, i: u8) -> Option<Self> {
                    apply_e_word(&self.0, &self.1, i).map(|w| W(self.0, w))
                }
            }
            let seeds: Vec<W> = words.into_iter().map(|w| W(alphabet, w)).collect();
            let indices: Vec<u8> = alphabet.indices().collect();
            let g = crystal_graph(&seeds, &indices, budget)
                .map_err(|_| "budget exceeded".to_string())?;
            match format.as_str() {
                "dot" => println!("{}", to_dot(&g)),
                _ => println!("{}", serde_json::to_string(&g).unwrap()),
            }
            Ok(0)
        }
        Command::Verify { suite, seed } => {
            let params = Params { seed };
            let mut failed = false;
            let run_one = |name: &str, failed: &mut bool| {
                match verify::run_suite(name, &params) {
                    Some(Ok(msg)) => println!("{}", json!({"suite": name, "ok": true, "detail": msg})),
                    Some(Err(e)) => {
                        *failed = true;
                        println!("{}", json!({"suite": name, "ok": false, "detail": e}));
                    }
                    None => {
                        *failed = true;
                        println!("{}", json!({"suite": name, "ok": false, "detail": "unknown suite"}));
                    }
                }
            };
            if suite == "all" {
                for s in verify::suites() {
                    run_one(s.name, &mut failed);
                }
            } else {
                run_one(&suite, &mut failed);
            }
            Ok(if failed { 1 } else { 0 })
        }
        Command::Examples => {
            let mut failed = false;
            for f in supercrystal::fixtures::registry() {
                match (f.check)() {
                    Ok(()) => println!("{}", json!({"fixture": f.name, "ok": true, "provenance": f.provenance})),
                    Err(e) => {
                        failed = true;
                        println!("{}", json!({"fixture": f.name, "ok": false, "detail": e}));
                    }
                }
            }
            Ok(if failed { 1 } else { 0 })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(0) => ExitCode::from(0),
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
