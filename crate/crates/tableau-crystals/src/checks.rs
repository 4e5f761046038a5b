//! Exhaustive desk-scale sweeps of the structural identities, shared by the acceptance suite and `tabcrys verify`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::counting::{hw_mvt_to_skew, hw_vst_to_conj, hw_vst_to_rpp, psi_column};
use crate::crystal::{e_vst_anchor, f_vst_anchor, mvt_reading, vst_reading, Crystal, ReadingConvention};
use crate::enumerate;
use crate::grothendieck::{character, crystal_expansion, flagged_expansion, gram_expansion, generating_function, Bounds, SchurExpansion};
use crate::graph::{decompose, highest_weights, ssyt_count, CrystalGraph};
use crate::hecke::{factorizations, pw, wg_direct, wg_via_pw, Permutation};
use crate::inflate::{deflate, inflate, inflate_trace};
use crate::partition::{Partition, SkewShape};
use crate::stembridge::verify_stembridge;
use crate::tableau::{
    Family, FlagKind, FlaggedTableau, IntervalSkewTableau, IntervalTarget, Letter, MultisetValuedTableau, Ssyt, Tableau,
    ValuedSetTableau,
};
use crate::uncrowd::{crowd, uncrowd, uncrowd_trace};
use crate::word::parse_word;

/// Failure witness.
pub type Outcome = std::result::Result<(), String>;

pub struct Check {
    pub id: usize,
    pub name: &'static str,
    run: fn() -> Outcome,
}

impl Check {
    pub fn run(&self) -> Outcome {
        (self.run)()
    }
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lib<T>(r: crate::Result<T>, what: &str) -> std::result::Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).expect("literal partition")
}

fn ssyt(rows: &[&[Letter]]) -> Ssyt {
    Ssyt::new(rows.iter().map(|r| r.to_vec()).collect()).expect("literal tableau")
}

fn flagged(kind: FlagKind, outer: &[usize], inner: &[usize], rows: Vec<Vec<Letter>>) -> FlaggedTableau {
    FlaggedTableau::new(SkewShape::new(p(outer), p(inner)).expect("literal shape"), kind, rows).expect("literal flagged")
}

fn shapes_up_to(k: usize) -> Vec<Partition> {
    (1..=k).flat_map(Partition::all_of_size).collect()
}

fn excess(max: usize) -> Bounds {
    Bounds { max_excess: max, ..Bounds::default() }
}

pub fn all() -> Vec<Check> {
    vec![
        Check { id: 1, name: "set-valued (2,2) in 3 letters decomposes as 6+3+3+1", run: set_valued_square },
        Check { id: 2, name: "single columns with extras are irreducible", run: single_columns },
        Check { id: 3, name: "multiset-valued characters equal flagged Schur sums", run: multiset_characters },
        Check { id: 4, name: "uncrowding is an operator-equivariant bijection", run: uncrowding },
        Check { id: 5, name: "every component passes the local axioms", run: local_axioms },
        Check { id: 6, name: "hook-valued expansions are Schur positive", run: hook_positivity },
        Check { id: 7, name: "valued-set (3,3) in 3 letters", run: valued_set_rectangle },
        Check { id: 8, name: "inflation is an operator-equivariant bijection", run: inflation },
        Check { id: 9, name: "highest weight counting bijections", run: counting },
        Check { id: 10, name: "conjugation and substitution identities", run: duality },
        Check { id: 11, name: "Hecke factorizations and permutation series", run: hecke },
    ]
}

/// Checks grouped under a `verify` topic.
pub fn topic(name: &str) -> Option<Vec<Check>> {
    let ids: &[usize] = match name {
        "stembridge" => &[5],
        "bijections" => &[4, 8, 9],
        "identities" => &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
        _ => return None,
    };
    Some(all().into_iter().filter(|c| ids.contains(&c.id)).collect())
}

fn set_valued_square() -> Outcome {
    let r = lib(decompose(enumerate::svt(&p(&[2, 2]), 3, 2), 3), "decompose")?;
    let mut sizes: Vec<usize> = r.components.iter().map(|c| c.size).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    ensure!(sizes == [6, 3, 3, 1], "component sizes {sizes:?}");
    let want: BTreeMap<Partition, usize> = [(p(&[2, 2]), 1), (p(&[2, 2, 1]), 2), (p(&[2, 2, 2]), 1)].into();
    ensure!(r.multiplicities == want, "multiplicities {:?}", r.multiplicities);
    Ok(())
}

fn single_columns() -> Outcome {
    for n in 1..=4 {
        for k in 1..=3.min(n) {
            for a in 0..=3 {
                let all: Vec<MultisetValuedTableau> =
                    enumerate::mvt(&p(&vec![1; k]), n, a).into_iter().filter(|t| t.excess() == a).collect();
                let mut parts = vec![1; k];
                parts[0] += a;
                let mu = p(&parts);
                ensure!(all.len() as u128 == ssyt_count(&mu, n), "k={k} a={a} n={n}: {} elements", all.len());
                let g = lib(CrystalGraph::from_vertices(all.clone(), n), "graph")?;
                ensure!(g.components().len() == 1, "k={k} a={a} n={n}: {} components", g.components().len());
                for t in &all {
                    let s = lib(psi_column(t), "column map")?;
                    let rd: Vec<Letter> = mvt_reading(t).into_iter().map(|(x, _)| x).collect();
                    ensure!(s.shape() == &mu && s.column_word() == rd, "column map of {}", t.key());
                }
            }
        }
    }
    Ok(())
}

fn multiset_characters() -> Outcome {
    for lam in shapes_up_to(4) {
        for n in 1..=4 {
            let all = enumerate::mvt(&lam, n, 2);
            let flagged = lib(flagged_expansion(Family::Mvt, &lam, n, excess(2)), "flagged expansion")?;
            let chi = lib(character(&all, n), "character")?;
            ensure!(chi == flagged.to_polynomial(), "{lam}, n={n}: character differs from flagged sum");
            let crystal = lib(crystal_expansion(all, n), "decomposition")?;
            ensure!(crystal == flagged, "{lam}, n={n}: crystal multiplicities differ from flagged counts");
        }
    }
    let count = FlaggedTableau::count(FlagKind::Fc, &SkewShape::new(p(&[5, 4]), p(&[3, 3])).expect("shape"));
    ensure!(count == 8, "(5,4)/(3,3) has {count} flagged tableaux");
    Ok(())
}

fn uncrowd_examples() -> Outcome {
    let small = MultisetValuedTableau::new(vec![vec![vec![1, 1], vec![1], vec![1]], vec![vec![2], vec![2, 2]], vec![vec![3, 3]]])
        .expect("literal");
    let (b, f) = lib(uncrowd(&small), "uncrowd")?;
    ensure!(b == ssyt(&[&[1, 1, 1, 1], &[2, 2, 2], &[3, 3]]), "small example insertion tableau {}", b.to_json());
    ensure!(f == flagged(FlagKind::Fc, &[4, 3, 2], &[3, 2, 1], vec![vec![3], vec![1], vec![1]]), "small example flagged {}", f.to_json());

    let big = MultisetValuedTableau::new(vec![
        vec![vec![1, 1, 2], vec![2, 2], vec![2, 5, 6]],
        vec![vec![3, 3], vec![4, 4, 4], vec![7]],
        vec![vec![5, 6, 8]],
        vec![vec![9]],
    ])
    .expect("literal");
    let steps = lib(uncrowd_trace(&big), "uncrowd")?;
    let want = [
        (ssyt(&[&[2, 5, 6], &[7]]), flagged(FlagKind::Fc, &[3, 1], &[1, 1], vec![vec![1, 2], vec![]])),
        (ssyt(&[&[2, 2, 2, 4, 5, 6], &[4, 4, 7]]), flagged(FlagKind::Fc, &[6, 3], &[2, 2], vec![vec![1, 2, 4, 5], vec![2]])),
        (
            ssyt(&[&[1, 1, 2, 2, 2, 2, 4, 5, 6], &[3, 3, 4, 4, 7], &[5, 6, 8], &[9]]),
            flagged(FlagKind::Fc, &[9, 5, 3, 1], &[3, 3, 1, 1], vec![vec![1, 2, 4, 5, 7, 8], vec![2, 4], vec![1, 2], vec![]]),
        ),
    ];
    ensure!(steps.len() == want.len(), "{} steps", steps.len());
    for (k, (step, (b, f))) in steps.iter().zip(&want).enumerate() {
        ensure!(&step.ssyt == b && &step.flagged == f, "large example step {k}: {} {}", step.ssyt.to_json(), step.flagged.to_json());
    }
    Ok(())
}

fn uncrowding() -> Outcome {
    uncrowd_examples()?;
    for lam in shapes_up_to(4) {
        for n in lam.len()..=4 {
            let all = enumerate::mvt(&lam, n, 2);
            let mut seen = BTreeSet::new();
            for t in &all {
                let (b, f) = lib(uncrowd(t), "uncrowd")?;
                ensure!(&lib(crowd(&b, &f), "crowd")? == t, "crowd does not invert uncrowd at {}", t.key());
                ensure!(seen.insert((b.clone(), f.clone())), "uncrowd collision at {}", t.key());
                for i in 1..n as Letter {
                    for raise in [false, true] {
                        let (lhs, rhs) = if raise { (t.e(i), b.e(i)) } else { (t.f(i), b.f(i)) };
                        let lhs = lhs.map(|u| uncrowd(&u)).transpose().map_err(|e| e.to_string())?;
                        ensure!(lhs == rhs.map(|r| (r, f.clone())), "operator {i} (raise={raise}) at {}", t.key());
                    }
                }
            }
        }
    }
    Ok(())
}

fn stembridge_sweep<T: Crystal>(all: Vec<T>, n: usize, label: &str) -> Outcome {
    let g = lib(CrystalGraph::from_vertices(all, n), label)?;
    for vs in g.components() {
        let sub = g.subgraph(&vs);
        if let Some(v) = verify_stembridge(&sub).violation {
            return Err(format!("{label}: axiom {} fails at {}: {}", v.axiom, v.vertex, v.detail));
        }
    }
    lib(crate::graph::decompose_graph(&g), label).map(|_| ())
}

fn local_axioms() -> Outcome {
    for lam in shapes_up_to(3) {
        for n in lam.len()..=4 {
            let tag = |f: &str| format!("{f} {lam} n={n}");
            stembridge_sweep(enumerate::svt(&lam, n, 2), n, &tag("svt"))?;
            stembridge_sweep(enumerate::mvt(&lam, n, 2), n, &tag("mvt"))?;
            stembridge_sweep(enumerate::hvt_up_to(&lam, n, 2, 2), n, &tag("hvt"))?;
            stembridge_sweep(enumerate::vst(&lam, n), n, &tag("vst"))?;
        }
    }
    let g = lib(CrystalGraph::from_vertices(enumerate::ssyt(&p(&[2, 1]), 3), 3), "graph")?;
    let report = verify_stembridge(&g.with_reversed_edge(0));
    match report.violation {
        Some(v) if v.axiom == "P2" => Ok(()),
        other => Err(format!("corrupted graph gave {other:?}")),
    }
}

fn hook_positivity() -> Outcome {
    for lam in shapes_up_to(3) {
        for n in lam.len()..=4 {
            let all: Vec<_> = enumerate::hvt_up_to(&lam, n, 2, 2)
                .into_iter()
                .filter(|t| t.arm_excess() + t.leg_excess() <= 2)
                .collect();
            let gram = lib(gram_expansion(&lib(character(&all, n), "character")?), "expansion")?;
            ensure!(gram.is_positive(), "{lam} n={n}: negative coefficient in\n{gram}");
            let crystal = lib(crystal_expansion(all, n), "decomposition")?;
            ensure!(crystal == gram, "{lam} n={n}: crystal and monomial expansions differ");
        }
    }
    let all = enumerate::hvt_up_to(&p(&[2]), 3, 1, 1);
    let e = lib(crystal_expansion(all, 3), "decomposition")?;
    let m = e.multiplicity(&p(&[3, 1]), 1, 1);
    ensure!(m == BigInt::from(2), "alpha beta coefficient of s(3,1) is {m}");
    Ok(())
}

fn valued_set_rectangle() -> Outcome {
    let lam = p(&[3, 3]);
    let all = enumerate::vst(&lam, 3);
    let hws = highest_weights(&all, 3);
    ensure!(hws.len() == 10, "{} highest weights", hws.len());
    let want: BTreeMap<Partition, usize> =
        [(p(&[3, 3]), 1), (p(&[3, 2]), 2), (p(&[3, 1]), 1), (p(&[2, 2]), 3), (p(&[2, 1]), 2), (p(&[1, 1]), 1)].into();
    let r = lib(decompose(all.clone(), 3), "decompose")?;
    ensure!(r.multiplicities == want, "multiplicities {:?}", r.multiplicities);
    let crystal = lib(crystal_expansion(all.clone(), 3), "decomposition")?;
    let gram = lib(gram_expansion(&lib(generating_function(Family::Vst, &lam, 3, Bounds::default()), "character")?), "expansion")?;
    let flagged = lib(flagged_expansion(Family::Vst, &lam, 3, Bounds::default()), "flagged")?;
    ensure!(crystal == gram && gram == flagged, "expansions disagree");
    for (mu, &k) in &want {
        let a = (lam.size() - mu.size()) as u32;
        ensure!(crystal.multiplicity(mu, a, 0) == BigInt::from(k), "coefficient of {mu}");
    }
    for lam in shapes_up_to(4) {
        let n = 4;
        for t in enumerate::vst(&lam, n) {
            for i in 1..n as Letter {
                ensure!(f_vst_anchor(&t, i) == t.f(i) && e_vst_anchor(&t, i) == t.e(i), "conventions differ at {} i={i}", t.key());
            }
        }
    }
    let t = ValuedSetTableau::new(
        vec![
            vec![1, 1, 1, 1, 1, 1, 2, 4, 4, 6],
            vec![2, 2, 2, 3, 3, 4, 5, 5, 5],
            vec![3, 4, 5, 5, 5],
            vec![5, 5, 8],
            vec![7, 7],
        ],
        vec![vec![2, 6, 7, 9], vec![3, 5, 6, 8], vec![1, 2, 3], vec![2], vec![]],
    )
    .expect("literal");
    let rd: Vec<Letter> = vst_reading(&t, ReadingConvention::Buoy).into_iter().map(|(a, _)| a).collect();
    ensure!(rd == parse_word("75321485153452456").expect("literal"), "reading word {rd:?}");
    let wt = lib(Crystal::weight(&t, 8), "weight")?;
    ensure!(wt.exponents() == [2, 2, 2, 3, 5, 1, 1, 1], "weight {:?}", wt.exponents());
    Ok(())
}

fn inflation_example() -> Outcome {
    let t = ValuedSetTableau::new(
        vec![
            vec![1, 1, 1, 1, 1, 1, 2, 4, 4, 6],
            vec![2, 2, 2, 3, 3, 4, 5, 5, 5],
            vec![3, 4, 5, 5, 5],
            vec![5, 5, 8],
            vec![7, 7],
        ],
        vec![vec![2, 6, 7, 9], vec![3, 5, 6, 8], vec![1, 2, 3], vec![2], vec![]],
    )
    .expect("literal");
    let steps = lib(inflate_trace(&t), "inflate")?;
    ensure!(steps.len() == 10, "{} steps", steps.len());
    let at = |i: usize| &steps[10 - i];
    let fcs = |o: &[usize], i: &[usize], rows| flagged(FlagKind::Fcs, o, i, rows);
    let ladder = [
        (10, Some(ssyt(&[&[6]])), None),
        (9, Some(ssyt(&[&[4, 6], &[5]])), None),
        (8, None, Some(fcs(&[3, 2], &[3, 1], vec![vec![], vec![1]]))),
        (7, Some(ssyt(&[&[2, 4, 5, 6], &[5]])), Some(fcs(&[4, 3], &[4, 1], vec![vec![], vec![1, 2]]))),
        (6, None, Some(fcs(&[5, 4], &[5, 2], vec![vec![], vec![2, 3]]))),
        (5, None, Some(fcs(&[6, 5, 1], &[5, 3, 1], vec![vec![1], vec![3, 4], vec![]]))),
        (4, None, Some(fcs(&[7, 6, 2], &[5, 3, 1], vec![vec![1, 2], vec![1, 4, 5], vec![1]]))),
        (
            3,
            Some(ssyt(&[&[1, 2, 4, 4, 5, 6], &[2, 3, 5], &[5, 5], &[8]])),
            Some(fcs(&[8, 7, 3, 1], &[6, 3, 2, 1], vec![vec![2, 3], vec![1, 2, 5, 6], vec![2], vec![]])),
        ),
        (
            2,
            Some(ssyt(&[&[1, 1, 2, 4, 4, 5, 6], &[2, 3, 5, 5], &[4, 5], &[5, 8], &[7]])),
            Some(fcs(&[9, 8, 4, 2, 1], &[7, 4, 2, 2, 1], vec![vec![3, 4], vec![2, 3, 6, 7], vec![1, 3], vec![], vec![]])),
        ),
        (
            1,
            Some(ssyt(&[&[1, 1, 2, 4, 4, 5, 6], &[2, 3, 5, 5, 5], &[3, 4], &[5, 8], &[7]])),
            Some(fcs(&[10, 9, 5, 3, 2], &[7, 5, 2, 2, 1], vec![vec![1, 4, 5], vec![3, 4, 7, 8], vec![1, 2, 4], vec![1], vec![1]])),
        ),
    ];
    for (i, b, f) in ladder {
        if let Some(b) = b {
            ensure!(at(i).ssyt == b, "column {i} insertion tableau {}", at(i).ssyt.to_json());
        }
        if let Some(f) = f {
            ensure!(at(i).flagged == f, "column {i} flagged tableau {}", at(i).flagged.to_json());
        }
    }
    let (b, f) = lib(inflate(&t), "inflate")?;
    ensure!(lib(deflate(&b, &f), "deflate")? == t, "example does not deflate back");
    Ok(())
}

fn inflation() -> Outcome {
    inflation_example()?;
    for lam in shapes_up_to(4) {
        for n in 1..=3 {
            let all = enumerate::vst(&lam, n);
            let mut seen = BTreeSet::new();
            for t in &all {
                let (b, f) = lib(inflate(t), "inflate")?;
                ensure!(&lib(deflate(&b, &f), "deflate")? == t, "deflate does not invert inflate at {}", t.key());
                ensure!(seen.insert((b.clone(), f.clone())), "inflate collision at {}", t.key());
                for i in 1..n as Letter {
                    let lhs = t.f(i).map(|u| inflate(&u)).transpose().map_err(|e| e.to_string())?;
                    ensure!(lhs == b.f(i).map(|r| (r, f.clone())), "operator {i} at {}", t.key());
                }
            }
            let mut hw_counts: BTreeMap<Partition, usize> = BTreeMap::new();
            for t in highest_weights(&all, n) {
                if let Some(mu) = lib(Crystal::weight(&t, n), "weight")?.to_partition() {
                    *hw_counts.entry(mu).or_default() += 1;
                }
            }
            for mu in lam.subpartitions().into_iter().filter(|mu| mu.len() <= n && !mu.is_empty()) {
                let count = FlaggedTableau::count(FlagKind::Fcs, &lib(SkewShape::new(lam.clone(), mu.clone()), "shape")?);
                let got = hw_counts.get(&mu).copied().unwrap_or(0);
                ensure!(got == count, "{lam}/{mu} n={n}: {got} highest weights, {count} flagged");
            }
        }
    }
    Ok(())
}

fn grouped<T: Crystal, K: Ord>(
    hws: Vec<T>,
    n: usize,
    image: impl Fn(&T) -> crate::Result<K>,
) -> std::result::Result<BTreeMap<Partition, BTreeSet<K>>, String> {
    let mut out: BTreeMap<Partition, BTreeSet<K>> = BTreeMap::new();
    for t in hws {
        let mu = lib(t.weight(n), "weight")?.to_partition().ok_or_else(|| format!("non-partition weight at {}", t.key()))?;
        let img = lib(image(&t), "bijection")?;
        ensure!(out.entry(mu).or_default().insert(img), "collision at {}", t.key());
    }
    Ok(out)
}

fn target(kind: IntervalTarget, lam: &Partition, mu: &Partition) -> std::result::Result<BTreeSet<IntervalSkewTableau>, String> {
    IntervalSkewTableau::enumerate_target(kind, lam, mu)
        .map(|v| v.into_iter().collect())
        .ok_or_else(|| format!("no target set for {lam} -> {mu}"))
}

fn counting() -> Outcome {
    for lam in shapes_up_to(4) {
        for n in lam.len().max(2)..=4 {
            let hws = highest_weights(&enumerate::mvt(&lam, n, 2), n);
            for (mu, images) in grouped(hws, n, hw_mvt_to_skew)? {
                ensure!(images == target(IntervalTarget::MvtHighestWeights, &lam, &mu)?, "multiset {lam} -> {mu}, n={n}");
            }
            let all = enumerate::vst(&lam, n);
            let conj = grouped(highest_weights(&all, n), n, hw_vst_to_conj)?;
            let rpp = grouped(highest_weights(&all, n), n, hw_vst_to_rpp)?;
            ensure!(conj.keys().eq(rpp.keys()), "valued-set {lam}: weight sets differ");
            for (mu, images) in conj {
                ensure!(images == target(IntervalTarget::VstGroupPositions, &lam, &mu)?, "conjugate {lam} -> {mu}, n={n}");
                ensure!(rpp[&mu] == target(IntervalTarget::VstNonBuoys, &lam, &mu)?, "plane partition {lam} -> {mu}, n={n}");
            }
        }
    }
    let (lam, mu) = (p(&[3, 2]), p(&[4, 4]));
    let hws = highest_weights(&enumerate::mvt(&lam, 2, 3), 2)
        .into_iter()
        .filter(|t| Crystal::weight(t, 2).ok().and_then(|w| w.to_partition()) == Some(mu.clone()))
        .count();
    let skew = target(IntervalTarget::MvtHighestWeights, &lam, &mu)?.len();
    ensure!(hws == 5 && skew == 5, "(3,2) -> (4,4): {hws} highest weights, {skew} skew tableaux");
    Ok(())
}

fn box_restricted(e: &SchurExpansion, n: usize) -> SchurExpansion {
    let mut out = SchurExpansion::new(n);
    for (mu, c) in e.terms() {
        if mu.len() <= n && mu.first() <= n {
            out.add(mu.clone(), c.clone());
        }
    }
    out
}

fn duality() -> Outcome {
    for lam in shapes_up_to(3) {
        for n in 1..=3 {
            for a in 0..=2 {
                let g = lib(generating_function(Family::Svt, &lam, n, excess(a)), "set-valued")?;
                let w = lib(generating_function(Family::Mvt, &lam, n, excess(a)), "multiset-valued")?;
                let d = (lam.size() + a) as u32;
                ensure!(g.beta_to_alpha().substitute_series(d) == w, "substitution {lam} n={n} excess {a}");
                let wc = lib(generating_function(Family::Mvt, &lam.conjugate(), n, excess(a)), "multiset-valued")?;
                let lhs = lib(gram_expansion(&g.beta_to_alpha()), "expansion")?.omega();
                let rhs = lib(gram_expansion(&wc), "expansion")?;
                ensure!(box_restricted(&lhs, n) == box_restricted(&rhs, n), "conjugation {lam} n={n} excess {a}");
            }
        }
    }
    Ok(())
}

fn hecke() -> Outcome {
    for w in Permutation::all(3) {
        let len = w.length();
        for k in 0..=len + 2 {
            for m in 1..=3 {
                let lhs = factorizations(&w, k, m, false).len();
                let mut rhs = 0;
                for size in 0..=k {
                    for lam in Partition::all_of_size(size) {
                        let tableaux = pw(&w, &lam).len();
                        if tableaux > 0 {
                            let mvt = enumerate::mvt(&lam, m, k - size).into_iter().filter(|t| t.excess() == k - size).count();
                            rhs += tableaux * mvt;
                        }
                    }
                }
                ensure!(lhs == rhs, "w={w} k={k} m={m}: {lhs} factorizations, {rhs} from tableaux");
            }
        }
        for vars in 1..=2 {
            let direct = wg_direct(&w, vars, len + 2);
            let expanded = lib(wg_via_pw(&w, vars, len + 2), "expansion")?;
            ensure!(direct == expanded, "w={w} vars={vars}:\n{direct}\nvs\n{expanded}");
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn topics_cover_known_names() {
        assert_eq!(topic("identities").unwrap().len(), 11);
        assert_eq!(topic("stembridge").unwrap().len(), 1);
        assert!(topic("nothing").is_none());
    }

    #[test]
    fn worked_examples() {
        uncrowd_examples().unwrap();
        inflation_example().unwrap();
    }
}
