//! Raising and lowering operators on each tableau family, with the bracketed signature.

use tableau_crystals::crystal::Crystal;
use tableau_crystals::{HookCell, HookValuedTableau, MultisetValuedTableau, SetValuedTableau, Tableau, ValuedSetTableau};

fn show<T: Crystal + Tableau>(label: &str, t: &T, i: u32) {
    println!("{label}: {}", t.to_json());
    println!("  signature for {i}: {}", t.signature(i).reduced());
    match t.f(i) {
        Some(u) => println!("  f_{i} -> {}", u.to_json()),
        None => println!("  f_{i} -> 0"),
    }
    match t.e(i) {
        Some(u) => println!("  e_{i} -> {}", u.to_json()),
        None => println!("  e_{i} -> 0"),
    }
}

fn main() -> tableau_crystals::Result<()> {
    show("set-valued", &SetValuedTableau::new(vec![vec![vec![1], vec![1, 2], vec![2]], vec![vec![3]]])?, 1);
    show("multiset-valued", &MultisetValuedTableau::new(vec![vec![vec![1, 1], vec![1, 2]], vec![vec![2]]])?, 1);
    show("hook-valued", &HookValuedTableau::new(vec![vec![HookCell::single(1), HookCell::new(1, vec![1], vec![2])]])?, 2);
    show("valued-set", &ValuedSetTableau::new(vec![vec![1, 1, 1], vec![2, 2, 2]], vec![vec![1, 2], vec![]])?, 1);
    Ok(())
}
