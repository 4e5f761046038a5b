use std::collections::BTreeSet;

use tableau_crystals::crystal::{e_mvt, e_vst, f_mvt, f_vst, Crystal};
use tableau_crystals::enumerate;
use tableau_crystals::inflate::{deflate, inflate};
use tableau_crystals::uncrowd::{crowd, uncrowd};
use tableau_crystals::{FlagKind, FlaggedTableau, Partition, SkewShape};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn shapes() -> Vec<Partition> {
    [&[1][..], &[2], &[1, 1], &[2, 1], &[3], &[2, 2], &[3, 1], &[2, 1, 1]].into_iter().map(p).collect()
}

#[test]
fn uncrowding_is_a_bijection() {
    let n = 3;
    for lam in shapes() {
        let all = enumerate::mvt(&lam, n, 2);
        let mut image = BTreeSet::new();
        for t in &all {
            let (b, f) = uncrowd(t).unwrap();
            assert_eq!(f.shape().inner(), &lam);
            assert_eq!(crowd(&b, &f).unwrap(), *t);
            assert!(image.insert((b, f)), "uncrowding {t:?} collides");
        }
        let mut count = 0;
        for mu in lam.superpartitions(2, n) {
            let shape = SkewShape::new(mu.clone(), lam.clone()).unwrap();
            let flags = FlaggedTableau::enumerate(FlagKind::Fc, &shape);
            for b in enumerate::ssyt(&mu, n) {
                for f in &flags {
                    let t = crowd(&b, f).unwrap();
                    assert_eq!(uncrowd(&t).unwrap(), (b.clone(), f.clone()));
                    count += 1;
                }
            }
        }
        assert_eq!(count, all.len(), "shape {lam}");
    }
}

#[test]
fn uncrowding_commutes_with_operators() {
    let n = 3;
    for lam in shapes() {
        for t in enumerate::mvt(&lam, n, 2) {
            let (b, f) = uncrowd(&t).unwrap();
            for i in 1..n as u32 {
                assert_eq!(f_mvt(&t, i).map(|u| uncrowd(&u).unwrap()), b.f(i).map(|c| (c, f.clone())));
                assert_eq!(e_mvt(&t, i).map(|u| uncrowd(&u).unwrap()), b.e(i).map(|c| (c, f.clone())));
            }
        }
    }
}

#[test]
fn inflation_is_a_bijection() {
    let n = 3;
    for lam in shapes() {
        let all = enumerate::vst(&lam, n);
        let mut image = BTreeSet::new();
        for t in &all {
            let (b, f) = inflate(t).unwrap();
            assert_eq!(f.shape().outer(), &lam);
            assert_eq!(deflate(&b, &f).unwrap(), *t);
            assert!(image.insert((b, f)), "inflating {t:?} collides");
        }
        let mut count = 0;
        for mu in lam.subpartitions() {
            let shape = SkewShape::new(lam.clone(), mu.clone()).unwrap();
            let flags = FlaggedTableau::enumerate(FlagKind::Fcs, &shape);
            for b in enumerate::ssyt(&mu, n) {
                for f in &flags {
                    let t = deflate(&b, f).unwrap();
                    assert_eq!(inflate(&t).unwrap(), (b.clone(), f.clone()));
                    count += 1;
                }
            }
        }
        assert_eq!(count, all.len(), "shape {lam}");
    }
}

#[test]
fn inflation_commutes_with_operators() {
    let n = 4;
    for lam in shapes() {
        for t in enumerate::vst(&lam, n) {
            let (b, f) = inflate(&t).unwrap();
            for i in 1..n as u32 {
                assert_eq!(f_vst(&t, i).map(|u| inflate(&u).unwrap()), b.f(i).map(|c| (c, f.clone())));
                assert_eq!(e_vst(&t, i).map(|u| inflate(&u).unwrap()), b.e(i).map(|c| (c, f.clone())));
            }
        }
    }
}
