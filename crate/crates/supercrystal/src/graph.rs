//! Crystal graph construction and isomorphism testing.

use crate::weight::Weight;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

/// An element that can live in a crystal graph: a canonical key, a weight,
/// and partial lowering/raising maps.
pub trait GraphElement: Clone {
    fn key(&self) -> String;
    fn weight(&self) -> Weight;
    fn lower(&self, i: u8) -> Option<Self>;
    fn raise(&self, i: u8) -> Option<Self>;
}

#[derive(Clone, Debug, Serialize)]
pub struct CrystalGraph {
    /// `(key, weight)` per vertex, sorted by `(weight, key)`.
    pub vertices: Vec<(String, Weight)>,
    /// `(source, index, target)` lowering edges.
    pub edges: Vec<(usize, u8, usize)>,
}

#[derive(Debug)]
pub struct BudgetExceeded {
    pub partial: CrystalGraph,
}

/// BFS closure of the seeds under the lowering and raising operators for the
/// given indices, with deterministic vertex order.
pub fn crystal_graph<T: GraphElement>(
    seeds: &[T],
    indices: &[u8],
    budget: usize,
) -> Result<CrystalGraph, BudgetExceeded> {
    let mut by_key: HashMap<String, T> = HashMap::new();
    let mut queue: VecDeque<String> = VecDeque::new();
    for s in seeds {
        let k = s.key();
        if by_key.insert(k.clone(), s.clone()).is_none() {
            queue.push_back(k);
        }
    }
    let mut exceeded = false;
    while let Some(k) = queue.pop_front() {
        let elt = by_key[&k].clone();
        for &i in indices {
            for next in [elt.lower(i), elt.raise(i)].into_iter().flatten() {
                let nk = next.key();
                if !by_key.contains_key(&nk) {
                    if by_key.len() >= budget {
                        exceeded = true;
                        continue;
                    }
                    by_key.insert(nk.clone(), next);
                    queue.push_back(nk);
                }
            }
        }
    }
    let mut order: Vec<(String, Weight)> =
        by_key.iter().map(|(k, v)| (k.clone(), v.weight())).collect();
    order.sort_by(|a, b| (&a.1, &a.0).cmp(&(&b.1, &b.0)));
    let index: HashMap<&str, usize> =
        order.iter().enumerate().map(|(n, (k, _))| (k.as_str(), n)).collect();
    let mut edges = Vec::new();
    for (k, v) in &by_key {
        for &i in indices {
            if let Some(t) = v.lower(i) {
                let tk = t.key();
                if let (Some(&a), Some(&b)) = (index.get(k.as_str()), index.get(tk.as_str())) {
                    edges.push((a, i, b));
                }
            }
        }
    }
    edges.sort();
    let graph = CrystalGraph { vertices: order, edges };
    if exceeded {
        Err(BudgetExceeded { partial: graph })
    } else {
        Ok(graph)
    }
}

impl CrystalGraph {
    pub fn out_edges(&self, v: usize) -> BTreeMap<u8, usize> {
        self.edges
            .iter()
            .filter(|&&(a, _, _)| a == v)
            .map(|&(_, i, b)| (i, b))
            .collect()
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, _, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for v in 0..n {
            if seen[v] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![v];
            seen[v] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort();
            comps.push(comp);
        }
        comps
    }

    fn in_edges(&self, v: usize) -> BTreeMap<u8, usize> {
        self.edges
            .iter()
            .filter(|&&(_, _, b)| b == v)
            .map(|&(a, i, b2)| {
                let _ = b2;
                (i, a)
            })
            .collect()
    }

    /// Canonical string of the component anchored at `v`. Crystal graphs are
    /// deterministic per color in both directions, so a breadth-first
    /// exploration with a fixed color order assigns every vertex a canonical
    /// discovery index; the encoding lists weights and edges under it.
    fn canon_from(&self, anchor: usize) -> String {
        let mut index: HashMap<usize, usize> = HashMap::new();
        let mut order: Vec<usize> = Vec::new();
        let mut queue = VecDeque::from([anchor]);
        index.insert(anchor, 0);
        order.push(anchor);
        while let Some(v) = queue.pop_front() {
            let out = self.out_edges(v);
            let inn = self.in_edges(v);
            for t in out.values().chain(inn.values()) {
                if !index.contains_key(t) {
                    index.insert(*t, order.len());
                    order.push(*t);
                    queue.push_back(*t);
                }
            }
        }
        let mut s = String::new();
        for &v in &order {
            s.push_str(&format!("w{:?}[", self.vertices[v].1));
            for (i, t) in self.out_edges(v) {
                s.push_str(&format!("{}>{};", i, index[&t]));
            }
            s.push(']');
        }
        s
    }

    /// Canonical multiset over connected components: the minimum anchored
    /// encoding over the component's highest-weight (source) vertices.
    pub fn canonical_components(&self) -> Vec<String> {
        let mut has_in = vec![false; self.vertices.len()];
        for &(_, _, b) in &self.edges {
            has_in[b] = true;
        }
        let mut out = Vec::new();
        for comp in self.components() {
            let sources: Vec<usize> = comp.iter().copied().filter(|&v| !has_in[v]).collect();
            assert!(!sources.is_empty(), "component with no source vertex");
            let canon = sources
                .iter()
                .map(|&sv| self.canon_from(sv))
                .min()
                .unwrap();
            out.push(canon);
        }
        out.sort();
        out
    }
}

/// Label- and weight-preserving digraph isomorphism for crystal graphs, with
/// the vertex matching when the component decomposition is multiplicity-free.
pub fn graphs_isomorphic(
    g1: &CrystalGraph,
    g2: &CrystalGraph,
) -> (bool, Option<Vec<(usize, usize)>>) {
    if g1.vertices.len() != g2.vertices.len() || g1.edges.len() != g2.edges.len() {
        return (false, None);
    }
    let c1 = g1.canonical_components();
    let c2 = g2.canonical_components();
    if c1 != c2 {
        return (false, None);
    }
    // multiplicity-free: all canonical strings distinct
    let set: HashSet<&String> = c1.iter().collect();
    if set.len() != c1.len() {
        return (true, None);
    }
    // rebuild the matching by pairing sources with equal canonical forms and
    // walking the deterministic out-edge structure in lockstep
    let mut matching = Vec::new();
    let sources = |g: &CrystalGraph| -> Vec<usize> {
        let mut has_in = vec![false; g.vertices.len()];
        for &(_, _, b) in &g.edges {
            has_in[b] = true;
        }
        (0..g.vertices.len()).filter(|&v| !has_in[v]).collect()
    };
    let mut by_canon: HashMap<String, Vec<usize>> = HashMap::new();
    for v in sources(g2) {
        by_canon.entry(g2.canon_from(v)).or_default().push(v);
    }
    let mut seen = HashSet::new();
    for v in sources(g1) {
        let canon = g1.canon_from(v);
        let slot = by_canon.get_mut(&canon).and_then(|s| s.pop());
        let Some(w) = slot else { continue };
        let mut stack = vec![(v, w)];
        while let Some((x, y)) = stack.pop() {
            if !seen.insert(x) {
                continue;
            }
            matching.push((x, y));
            let ox = g1.out_edges(x);
            let oy = g2.out_edges(y);
            let ix = g1.in_edges(x);
            let iy = g2.in_edges(y);
            for (i, tx) in ox {
                if let Some(&ty) = oy.get(&i) {
                    stack.push((tx, ty));
                }
            }
            for (i, tx) in ix {
                if let Some(&ty) = iy.get(&i) {
                    stack.push((tx, ty));
                }
            }
        }
    }
    matching.sort();
    if matching.len() != g1.vertices.len() {
        return (true, None);
    }
    (true, Some(matching))
}

/// DOT export with payload labels and edge colors.
pub fn to_dot(g: &CrystalGraph) -> String {
    let mut s = String::from("digraph crystal {\n");
    for (n, (k, w)) in g.vertices.iter().enumerate() {
        s.push_str(&format!("  v{} [label=\"{}\\nwt {:?}\"];\n", n, k.replace('"', "'"), w.delta));
    }
    for &(a, i, b) in &g.edges {
        s.push_str(&format!("  v{} -> v{} [label=\"{}\"];\n", a, b, i));
    }
    s.push_str("}\n");
    s
}
