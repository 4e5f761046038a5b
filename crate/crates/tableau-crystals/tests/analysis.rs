use std::collections::BTreeMap;

use tableau_crystals::crystal::f_hvt;
use tableau_crystals::enumerate;
use tableau_crystals::graph::{decompose, highest_weights, CrystalGraph};
use tableau_crystals::stembridge::verify_stembridge;
use tableau_crystals::{HookCell, HookValuedTableau, Partition};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn mults(pairs: &[(&[usize], usize)]) -> BTreeMap<Partition, usize> {
    pairs.iter().map(|&(mu, k)| (p(mu), k)).collect()
}

#[test]
fn set_valued_square() {
    let r = decompose(enumerate::svt(&p(&[2, 2]), 3, 2), 3).unwrap();
    assert_eq!(r.multiplicities, mults(&[(&[2, 2], 1), (&[2, 2, 1], 2), (&[2, 2, 2], 1)]));
}

#[test]
fn multiset_valued_column() {
    let r = decompose(enumerate::mvt(&p(&[1, 1]), 3, 2), 3).unwrap();
    assert_eq!(r.multiplicities, mults(&[(&[1, 1], 1), (&[2, 1], 1), (&[3, 1], 1)]));
}

#[test]
fn valued_set_rectangle() {
    let all = enumerate::vst(&p(&[3, 3]), 3);
    let r = decompose(all.clone(), 3).unwrap();
    assert_eq!(
        r.multiplicities,
        mults(&[(&[3, 3], 1), (&[3, 2], 2), (&[3, 1], 1), (&[2, 2], 3), (&[2, 1], 2), (&[1, 1], 1)])
    );
    assert_eq!(highest_weights(&all, 3).len(), 10);
}

#[test]
fn hook_valued_components() {
    let hw = HookValuedTableau::new(vec![vec![HookCell::single(1), HookCell::new(1, vec![1], vec![2])]]).unwrap();
    let g = CrystalGraph::component(&hw, 3).unwrap();
    assert_eq!(g.len(), 15);
    assert!(verify_stembridge(&g).passed());
    let f1 = f_hvt(&HookValuedTableau::new(vec![vec![HookCell::new(1, vec![1], vec![]), HookCell::new(1, vec![], vec![2])]]).unwrap(), 1);
    assert!(f1.is_some());
    let all = enumerate::hvt(&p(&[2]), 3, 1, 1);
    assert!(verify_stembridge(&CrystalGraph::from_vertices(all.clone(), 3).unwrap()).passed());
    decompose(all, 3).unwrap();
}

#[test]
fn every_family_decomposes() {
    for lam in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])] {
        decompose(enumerate::ssyt(&lam, 4), 4).unwrap();
        decompose(enumerate::svt(&lam, 3, 2), 3).unwrap();
        decompose(enumerate::mvt(&lam, 3, 2), 3).unwrap();
        decompose(enumerate::hvt_up_to(&lam, 3, 1, 1), 3).unwrap();
        decompose(enumerate::vst(&lam, 4), 4).unwrap();
    }
}
