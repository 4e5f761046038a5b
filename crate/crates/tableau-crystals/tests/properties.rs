use std::sync::LazyLock;

use proptest::prelude::*;
use proptest::sample::select;

use tableau_crystals::crystal::Crystal;
use tableau_crystals::enumerate;
use tableau_crystals::grothendieck::gram_expansion;
use tableau_crystals::hecke::{demazure_product, hecke_words};
use tableau_crystals::inflate::{deflate, inflate};
use tableau_crystals::poly::schur;
use tableau_crystals::rsk::{rsk, rsk_inverse};
use tableau_crystals::uncrowd::{crowd, uncrowd};
use tableau_crystals::word::{e_word, f_word, lusztig};
use tableau_crystals::{Letter, MultisetValuedTableau, Partition, ValuedSetTableau};

static MVT: LazyLock<Vec<MultisetValuedTableau>> =
    LazyLock::new(|| [("3,2,1", 4, 2), ("4,2", 3, 3)].iter().flat_map(|&(s, n, a)| enumerate::mvt(&Partition::parse(s).unwrap(), n, a)).collect());

static VST: LazyLock<Vec<ValuedSetTableau>> =
    LazyLock::new(|| ["3,3,1", "4,2,1"].iter().flat_map(|s| enumerate::vst(&Partition::parse(s).unwrap(), 4)).collect());

fn word(n: Letter, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(1..=n, 0..=max_len)
}

fn partition() -> impl Strategy<Value = Partition> {
    (1usize..=3).prop_flat_map(|k| select(Partition::all_of_size(k)))
}

proptest! {
    #[test]
    fn word_operators_are_partial_inverses(w in word(4, 12), i in 1u32..4) {
        if let Some(v) = f_word(&w, i) {
            prop_assert_eq!(e_word(&v, i), Some(w.clone()));
        }
        if let Some(v) = e_word(&w, i) {
            prop_assert_eq!(f_word(&v, i), Some(w.clone()));
        }
    }

    #[test]
    fn lusztig_involution_swaps_operators(w in word(4, 12), i in 1u32..4) {
        prop_assert_eq!(lusztig(&lusztig(&w, 4), 4), w.clone());
        prop_assert_eq!(f_word(&lusztig(&w, 4), i), e_word(&w, 4 - i).map(|v| lusztig(&v, 4)));
    }

    #[test]
    fn insertion_is_invertible(w in word(5, 14)) {
        let pair = rsk(&w);
        prop_assert_eq!(rsk_inverse(&pair.insertion, &pair.recording).unwrap(), w);
    }

    #[test]
    fn uncrowding_inverts_and_intertwines(t in select(MVT.as_slice()), i in 1u32..4) {
        let (b, f) = uncrowd(&t).unwrap();
        prop_assert_eq!(crowd(&b, &f).unwrap(), t.clone());
        prop_assert_eq!(t.f(i).map(|u| uncrowd(&u).unwrap()), b.f(i).map(|c| (c, f.clone())));
        prop_assert_eq!(t.e(i).map(|u| uncrowd(&u).unwrap()), b.e(i).map(|c| (c, f.clone())));
    }

    #[test]
    fn inflation_inverts_and_intertwines(t in select(VST.as_slice()), i in 1u32..4) {
        let (b, f) = inflate(&t).unwrap();
        prop_assert_eq!(deflate(&b, &f).unwrap(), t.clone());
        prop_assert_eq!(t.f(i).map(|u| inflate(&u).unwrap()), b.f(i).map(|c| (c, f.clone())));
    }

    #[test]
    fn schur_products_expand_positively(mu in partition(), nu in partition()) {
        let prod = &schur(&mu, 3) * &schur(&nu, 3);
        prop_assert!(prod.is_symmetric());
        let e = gram_expansion(&prod).unwrap();
        prop_assert!(e.is_positive());
        prop_assert_eq!(e.to_polynomial(), prod);
    }

    #[test]
    fn hecke_words_contain_their_own_product(h in word(3, 6)) {
        let w = demazure_product(&h, 4).unwrap();
        prop_assert!(w.length() <= h.len());
        prop_assert!(hecke_words(&w, h.len()).contains(&h));
    }
}
