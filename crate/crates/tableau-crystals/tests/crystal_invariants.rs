use tableau_crystals::crystal::{
    e_vst_anchor, f_hvt_traced, f_vst_anchor, hvt_reading, mvt_reading, vst_reading, Crystal, HvtCase, HvtSlot,
    ReadingConvention,
};
use tableau_crystals::enumerate;
use tableau_crystals::word::{e_word, f_word};
use tableau_crystals::{Letter, Partition, Tableau};

fn shapes() -> Vec<Partition> {
    [vec![1], vec![2], vec![1, 1], vec![2, 1], vec![3], vec![2, 2], vec![3, 1], vec![2, 1, 1]]
        .into_iter()
        .map(|p| Partition::new(p).unwrap())
        .collect()
}

/// Validity, mutual inverses and the weight identity on a finite family.
fn check_operators<T: Crystal + Tableau>(all: &[T], n: usize, grading: impl Fn(&T) -> Vec<usize>) {
    for t in all {
        let wt = Crystal::weight(t, n).unwrap();
        for i in 1..n as Letter {
            let diff = wt.get(i as usize) as i64 - wt.get(i as usize + 1) as i64;
            assert_eq!(t.phi(i) as i64 - t.epsilon(i) as i64, diff, "weight identity at {}", t.key());
            if let Some(u) = t.f(i) {
                assert!(u.is_valid(), "f{i} of {} gives invalid {}: {:?}", t.key(), u.key(), u.check());
                assert_eq!(u.e(i).as_ref(), Some(t), "e{i} f{i} of {}", t.key());
                assert_eq!(grading(&u), grading(t));
            }
            if let Some(u) = t.e(i) {
                assert!(u.is_valid(), "e{i} of {} gives invalid {}", t.key(), u.key());
                assert_eq!(u.f(i).as_ref(), Some(t), "f{i} e{i} of {}", t.key());
            }
        }
    }
}

#[test]
fn set_valued() {
    for lam in shapes() {
        check_operators(&enumerate::svt(&lam, 3, 2), 3, |t| vec![t.excess()]);
    }
}

#[test]
fn multiset_valued_and_word_embedding() {
    for lam in shapes() {
        let all = enumerate::mvt(&lam, 3, 2);
        check_operators(&all, 3, |t| vec![t.excess()]);
        let rd = |t: &_| mvt_reading(t).into_iter().map(|(a, _)| a).collect::<Vec<_>>();
        for t in &all {
            for i in 1..3 {
                assert_eq!(t.f(i).map(|u| rd(&u)), f_word(&rd(t), i));
                assert_eq!(t.e(i).map(|u| rd(&u)), e_word(&rd(t), i));
            }
        }
    }
}

#[test]
fn hook_valued() {
    for lam in shapes() {
        let all = enumerate::hvt_up_to(&lam, 3, 1, 1);
        check_operators(&all, 3, |t| vec![t.arm_excess(), t.leg_excess()]);
        for t in &all {
            for i in 1..3 {
                if let Some((_, step)) = f_hvt_traced(t, i) {
                    if step.case == HvtCase::M {
                        assert_eq!(step.slot, HvtSlot::Arm, "case M off the arm at {}", t.key());
                    }
                }
            }
        }
        let _ = hvt_reading;
    }
}

#[test]
fn valued_set_word_embedding_and_anchor_agreement() {
    for lam in shapes() {
        let all = enumerate::vst(&lam, 4);
        check_operators(&all, 4, |t| vec![t.num_groups()]);
        let rd = |t: &_| vst_reading(t, ReadingConvention::Buoy).into_iter().map(|(a, _)| a).collect::<Vec<_>>();
        for t in &all {
            for i in 1..4 {
                assert_eq!(t.f(i).map(|u| rd(&u)), f_word(&rd(t), i));
                assert_eq!(t.e(i).map(|u| rd(&u)), e_word(&rd(t), i));
                assert_eq!(f_vst_anchor(t, i), t.f(i), "anchor f{i} of {}", t.key());
                assert_eq!(e_vst_anchor(t, i), t.e(i), "anchor e{i} of {}", t.key());
            }
        }
    }
}
