//! Local axioms characterising crystals of highest weight type A representations.

use crate::graph::CrystalGraph;
use crate::tableau::Letter;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: &'static str,
    /// Canonical key of the witness vertex.
    pub vertex: String,
    pub i: Letter,
    pub j: Letter,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StembridgeReport {
    /// First failure in the order P1, P2, P3, P4, P5, P6, P5', P6'.
    pub violation: Option<Violation>,
    pub vertices: usize,
}

impl StembridgeReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

fn cartan(i: Letter, j: Letter) -> i64 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

struct Maps {
    f: Vec<Vec<Vec<usize>>>,
    e: Vec<Vec<Vec<usize>>>,
}

impl Maps {
    fn f(&self, v: usize, i: Letter) -> Option<usize> {
        self.f[v][i as usize - 1].first().copied()
    }

    fn e(&self, v: usize, i: Letter) -> Option<usize> {
        self.e[v][i as usize - 1].first().copied()
    }
}

pub fn verify_stembridge<T>(g: &CrystalGraph<T>) -> StembridgeReport {
    StembridgeReport { violation: check(g).err(), vertices: g.len() }
}

fn check<T>(g: &CrystalGraph<T>) -> Result<(), Violation> {
    let rank = g.n().saturating_sub(1);
    let size = g.len();
    let fail = |axiom, v: usize, i, j, detail: String| Violation { axiom, vertex: g.keys()[v].clone(), i, j, detail };

    let mut maps = Maps { f: vec![vec![Vec::new(); rank]; size], e: vec![vec![Vec::new(); rank]; size] };
    for e in g.f_edges() {
        maps.f[e.from][e.label as usize - 1].push(e.to);
    }
    for e in g.e_edges() {
        maps.e[e.from][e.label as usize - 1].push(e.to);
    }

    for v in 0..size {
        for i in 1..=rank as Letter {
            let mut seen = vec![false; size];
            let mut cur = v;
            while let Some(next) = maps.f(cur, i) {
                if seen[next] {
                    return Err(fail("P1", v, i, i, format!("f{i}-string through vertex {v} cycles")));
                }
                seen[next] = true;
                cur = next;
            }
        }
    }

    for v in 0..size {
        for i in 1..=rank as Letter {
            let k = i as usize - 1;
            if maps.f[v][k].len() > 1 || maps.e[v][k].len() > 1 {
                return Err(fail("P2", v, i, i, format!("vertex {v} has several {i}-edges")));
            }
            if let Some(u) = maps.f(v, i) {
                if maps.e(u, i) != Some(v) {
                    return Err(fail("P2", v, i, i, format!("f{i} sends {v} to {u} but e{i} of {u} is not {v}")));
                }
                let (a, b) = (g.weight(v), g.weight(u));
                if b.get(i as usize) + 1 != a.get(i as usize) || b.get(i as usize + 1) != a.get(i as usize + 1) + 1 {
                    return Err(fail("P2", v, i, i, format!("f{i} from {v} to {u} does not shift the weight by one root")));
                }
            }
            if let Some(u) = maps.e(v, i) {
                if maps.f(u, i) != Some(v) {
                    return Err(fail("P2", v, i, i, format!("e{i} sends {v} to {u} but f{i} of {u} is not {v}")));
                }
            }
        }
    }

    let string_len = |step: &dyn Fn(usize) -> Option<usize>, v: usize| -> i64 {
        let mut k = 0;
        let mut cur = v;
        while let Some(next) = step(cur) {
            cur = next;
            k += 1;
        }
        k
    };
    let mut delta = vec![vec![0i64; rank + 1]; size];
    let mut phi = vec![vec![0i64; rank + 1]; size];
    for v in 0..size {
        for i in 1..=rank as Letter {
            delta[v][i as usize] = -string_len(&|u| maps.e(u, i), v);
            phi[v][i as usize] = string_len(&|u| maps.f(u, i), v);
        }
    }
    let delta = |v: usize, j: Letter| delta[v][j as usize];
    let phi = |v: usize, j: Letter| phi[v][j as usize];
    // Δ_i δ_j, Δ_i φ_j at b (need e_i b), ∇_i δ_j, ∇_i φ_j at b (need f_i b).
    let up_delta = |b: usize, i: Letter, j: Letter| maps.e(b, i).map(|u| delta(u, j) - delta(b, j));
    let up_phi = |b: usize, i: Letter, j: Letter| maps.e(b, i).map(|u| phi(u, j) - phi(b, j));
    let down_phi = |b: usize, i: Letter, j: Letter| maps.f(b, i).map(|u| phi(b, j) - phi(u, j));
    let chain = |b: usize, steps: &[(bool, Letter)]| -> Option<usize> {
        steps.iter().try_fold(b, |v, &(raise, k)| if raise { maps.e(v, k) } else { maps.f(v, k) })
    };

    let pairs: Vec<(Letter, Letter)> = (1..=rank as Letter)
        .flat_map(|i| (1..=rank as Letter).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();

    for b in 0..size {
        for &(i, j) in &pairs {
            if let (Some(d), Some(p)) = (up_delta(b, i, j), up_phi(b, i, j)) {
                if d + p != cartan(i, j) {
                    return Err(fail("P3", b, i, j, format!("Δδ + Δφ = {} at vertex {b}", d + p)));
                }
                if d > 0 || p > 0 {
                    return Err(fail("P4", b, i, j, format!("Δδ = {d}, Δφ = {p} at vertex {b}")));
                }
            }
        }
    }

    for b in 0..size {
        for &(i, j) in &pairs {
            if maps.e(b, i).is_none() || maps.e(b, j).is_none() {
                continue;
            }
            if up_delta(b, i, j) == Some(0) {
                let y = chain(b, &[(true, j), (true, i)]);
                if y.is_none() || y != chain(b, &[(true, i), (true, j)]) || down_phi(y.unwrap(), j, i) != Some(0) {
                    return Err(fail("P5", b, i, j, format!("raising square at vertex {b} does not close")));
                }
            }
            if up_delta(b, i, j) == Some(-1) && up_delta(b, j, i) == Some(-1) {
                let y = chain(b, &[(true, i), (true, j), (true, j), (true, i)]);
                let ok = y.is_some()
                    && y == chain(b, &[(true, j), (true, i), (true, i), (true, j)])
                    && down_phi(y.unwrap(), i, j) == Some(-1)
                    && down_phi(y.unwrap(), j, i) == Some(-1);
                if !ok {
                    return Err(fail("P6", b, i, j, format!("raising octagon at vertex {b} does not close")));
                }
            }
        }
    }

    for b in 0..size {
        for &(i, j) in &pairs {
            if maps.f(b, i).is_none() || maps.f(b, j).is_none() {
                continue;
            }
            if down_phi(b, i, j) == Some(0) {
                let y = chain(b, &[(false, j), (false, i)]);
                if y.is_none() || y != chain(b, &[(false, i), (false, j)]) || up_delta(y.unwrap(), j, i) != Some(0) {
                    return Err(fail("P5'", b, i, j, format!("lowering square at vertex {b} does not close")));
                }
            }
            if down_phi(b, i, j) == Some(-1) && down_phi(b, j, i) == Some(-1) {
                let y = chain(b, &[(false, i), (false, j), (false, j), (false, i)]);
                let ok = y.is_some()
                    && y == chain(b, &[(false, j), (false, i), (false, i), (false, j)])
                    && up_delta(y.unwrap(), i, j) == Some(-1)
                    && up_delta(y.unwrap(), j, i) == Some(-1);
                if !ok {
                    return Err(fail("P6'", b, i, j, format!("lowering octagon at vertex {b} does not close")));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;

    fn all_words(len: usize, n: u32) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out.into_iter().flat_map(|w: Word| (1..=n).map(move |a| [w.clone(), vec![a]].concat())).collect();
        }
        out
    }

    #[test]
    fn words_of_length_three() {
        let g = CrystalGraph::from_vertices(all_words(3, 3), 3).unwrap();
        assert!(verify_stembridge(&g).passed());
    }

    #[test]
    fn reversed_edge_fails_p2() {
        let g = CrystalGraph::from_vertices(all_words(3, 3), 3).unwrap();
        for k in 0..g.f_edges().len() {
            let v = verify_stembridge(&g.with_reversed_edge(k)).violation.expect("corrupted graph fails");
            assert_eq!(v.axiom, "P2");
        }
    }
}
