//! Finite crystal graphs, their components and highest weight decompositions.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap, VecDeque};

use serde_json::json;

use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::stembridge::verify_stembridge;
use crate::tableau::Letter;
use crate::weight::WeightVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub from: usize,
    pub label: Letter,
    pub to: usize,
}

/// Vertices sorted by canonical key. `f_edges` come from the lowering operators, `e_edges` from the
/// raising operators, each pointing from the argument to the image.
#[derive(Clone, Debug)]
pub struct CrystalGraph<T> {
    n: usize,
    vertices: Vec<T>,
    keys: Vec<String>,
    weights: Vec<WeightVector>,
    f_edges: Vec<Edge>,
    e_edges: Vec<Edge>,
}

impl<T: Crystal> CrystalGraph<T> {
    /// The graph on a set closed under every operator.
    pub fn from_vertices(vertices: Vec<T>, n: usize) -> Result<Self> {
        let mut keyed: Vec<(String, T)> = vertices.into_iter().map(|t| (t.key(), t)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        let index: HashMap<&str, usize> = keyed.iter().enumerate().map(|(k, (s, _))| (s.as_str(), k)).collect();
        let mut f_edges = Vec::new();
        let mut e_edges = Vec::new();
        for (from, (key, t)) in keyed.iter().enumerate() {
            for i in 1..n as Letter {
                for (image, edges) in [(t.f(i), &mut f_edges), (t.e(i), &mut e_edges)] {
                    if let Some(u) = image {
                        let to = *index.get(u.key().as_str()).ok_or_else(|| Error::StructuralFailure {
                            key: key.clone(),
                            reason: format!("operator {i} leaves the vertex set"),
                        })?;
                        edges.push(Edge { from, label: i, to });
                    }
                }
            }
        }
        let weights = keyed.iter().map(|(_, t)| t.weight(n)).collect::<Result<Vec<_>>>()?;
        let (keys, vertices) = keyed.into_iter().unzip();
        Ok(CrystalGraph { n, vertices, keys, weights, f_edges, e_edges })
    }

    /// Closure of `seed` under all `e_i` and `f_i`.
    pub fn component(seed: &T, n: usize) -> Result<Self> {
        let mut seen: HashMap<String, T> = HashMap::new();
        let mut queue = VecDeque::from([seed.clone()]);
        seen.insert(seed.key(), seed.clone());
        while let Some(t) = queue.pop_front() {
            for i in 1..n as Letter {
                for u in [t.f(i), t.e(i)].into_iter().flatten() {
                    if let Entry::Vacant(slot) = seen.entry(u.key()) {
                        slot.insert(u.clone());
                        queue.push_back(u);
                    }
                }
            }
        }
        Self::from_vertices(seen.into_values().collect(), n)
    }
}

impl<T> CrystalGraph<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[T] {
        &self.vertices
    }

    pub fn keys(&self) -> &[String] {
        &self.keys
    }

    pub fn weight(&self, v: usize) -> &WeightVector {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[WeightVector] {
        &self.weights
    }

    pub fn f_edges(&self) -> &[Edge] {
        &self.f_edges
    }

    pub fn e_edges(&self) -> &[Edge] {
        &self.e_edges
    }

    /// Vertices without any raising edge.
    pub fn highest_weight_vertices(&self) -> Vec<usize> {
        let mut raisable = vec![false; self.len()];
        for e in &self.e_edges {
            raisable[e.from] = true;
        }
        (0..self.len()).filter(|&v| !raisable[v]).collect()
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.len()).collect();
        fn root(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for e in self.f_edges.iter().chain(&self.e_edges) {
            let (a, b) = (root(&mut parent, e.from), root(&mut parent, e.to));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.len() {
            let r = root(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    /// The induced subgraph on `vs`.
    pub fn subgraph(&self, vs: &[usize]) -> CrystalGraph<T>
    where
        T: Clone,
    {
        let mut renumber = vec![usize::MAX; self.len()];
        for (k, &v) in vs.iter().enumerate() {
            renumber[v] = k;
        }
        let keep = |edges: &[Edge]| -> Vec<Edge> {
            edges
                .iter()
                .filter(|e| renumber[e.from] != usize::MAX && renumber[e.to] != usize::MAX)
                .map(|e| Edge { from: renumber[e.from], label: e.label, to: renumber[e.to] })
                .collect()
        };
        CrystalGraph {
            n: self.n,
            vertices: vs.iter().map(|&v| self.vertices[v].clone()).collect(),
            keys: vs.iter().map(|&v| self.keys[v].clone()).collect(),
            weights: vs.iter().map(|&v| self.weights[v].clone()).collect(),
            f_edges: keep(&self.f_edges),
            e_edges: keep(&self.e_edges),
        }
    }

    /// Negative control: the `k`-th lowering edge turned around.
    pub fn with_reversed_edge(&self, k: usize) -> CrystalGraph<T>
    where
        T: Clone,
    {
        let mut g = self.clone();
        let e = g.f_edges[k];
        g.f_edges[k] = Edge { from: e.to, label: e.label, to: e.from };
        g
    }

    /// Graphviz rendering: nodes labeled by canonical JSON, edges by operator index.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for (v, key) in self.keys.iter().enumerate() {
            s.push_str(&format!("  v{v} [label={}];\n", serde_json::to_string(key).expect("string")));
        }
        for e in &self.f_edges {
            s.push_str(&format!("  v{} -> v{} [label=\"{}\"];\n", e.from, e.to, e.label));
        }
        s.push_str("}\n");
        s
    }
}

/// One irreducible component: its highest weight vertex and size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCertificate<T> {
    pub highest_weight: T,
    pub mu: Partition,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport<T> {
    pub multiplicities: BTreeMap<Partition, usize>,
    pub components: Vec<ComponentCertificate<T>>,
}

impl<T: Crystal + serde::Serialize> DecompositionReport<T> {
    /// One record per highest weight, with the first highest weight element as representative.
    pub fn to_json(&self) -> String {
        let records: Vec<_> = self
            .multiplicities
            .iter()
            .map(|(mu, &mult)| {
                let c = self.components.iter().find(|c| &c.mu == mu).expect("recorded");
                json!({ "mu": mu, "mult": mult, "hw": c.highest_weight, "size": c.size })
            })
            .collect();
        serde_json::to_string(&records).expect("reports serialize")
    }
}

/// Number of semistandard tableaux of shape `mu` with entries at most `n` (hook-content formula).
pub fn ssyt_count(mu: &Partition, n: usize) -> u128 {
    let conj = mu.conjugate();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (r, c) in mu.cells() {
        let content = n as i64 + c as i64 - r as i64;
        if content <= 0 {
            return 0;
        }
        num *= content as u128;
        den *= (mu.get(r) - c + conj.get(c) - r - 1) as u128;
    }
    num / den
}

/// Split a closed set into components and certify each as an irreducible highest weight crystal:
/// one highest weight vertex of partition weight, the Stembridge axioms, and the dimension.
pub fn decompose<T: Crystal>(vertices: Vec<T>, n: usize) -> Result<DecompositionReport<T>> {
    let graph = CrystalGraph::from_vertices(vertices, n)?;
    decompose_graph(&graph)
}

pub fn decompose_graph<T: Crystal>(graph: &CrystalGraph<T>) -> Result<DecompositionReport<T>> {
    let mut multiplicities = BTreeMap::new();
    let mut components = Vec::new();
    for vs in graph.components() {
        let sub = graph.subgraph(&vs);
        let key = sub.keys()[0].clone();
        let failure = |reason: String| Error::StructuralFailure { key: key.clone(), reason };
        let hws = sub.highest_weight_vertices();
        if hws.len() != 1 {
            return Err(failure(format!("{} highest weight vertices", hws.len())));
        }
        let hw = hws[0];
        let mu = sub
            .weight(hw)
            .to_partition()
            .ok_or_else(|| failure(format!("highest weight {:?} is not a partition", sub.weight(hw).exponents())))?;
        let report = verify_stembridge(&sub);
        if let Some(v) = report.violation {
            return Err(failure(format!("axiom {} fails: {}", v.axiom, v.detail)));
        }
        if ssyt_count(&mu, graph.n()) != sub.len() as u128 {
            return Err(failure(format!("{} vertices but highest weight {mu}", sub.len())));
        }
        *multiplicities.entry(mu.clone()).or_insert(0) += 1;
        components.push(ComponentCertificate { highest_weight: sub.vertices()[hw].clone(), mu, size: sub.len() });
    }
    Ok(DecompositionReport { multiplicities, components })
}

/// Elements killed by every raising operator.
pub fn highest_weights<T: Crystal>(all: &[T], n: usize) -> Vec<T> {
    all.iter().filter(|t| t.is_highest_weight(n)).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{SetValuedTableau, Ssyt};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hook_content() {
        assert_eq!(ssyt_count(&p(&[2, 1]), 3), 8);
        assert_eq!(ssyt_count(&p(&[3, 1]), 3), 15);
        assert_eq!(ssyt_count(&p(&[2, 2]), 3), 6);
        assert_eq!(ssyt_count(&p(&[1, 1, 1, 1]), 3), 0);
        assert_eq!(ssyt_count(&Partition::empty(), 3), 1);
    }

    #[test]
    fn figure_one_component() {
        let t = SetValuedTableau::new(vec![vec![vec![1], vec![1]], vec![vec![2], vec![2]]]).unwrap();
        let g = CrystalGraph::component(&t, 3).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g.highest_weight_vertices().len(), 1);
    }

    #[test]
    fn empty_tableau_component() {
        let g = CrystalGraph::component(&Ssyt::empty(), 3).unwrap();
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn dot_has_all_edges() {
        let t = Ssyt::new(vec![vec![1]]).unwrap();
        let g = CrystalGraph::component(&t, 3).unwrap();
        let dot = g.to_dot();
        assert_eq!(dot.matches("->").count(), 2);
        assert!(dot.starts_with("digraph"));
    }
}
