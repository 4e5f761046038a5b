//! Truncated Schur expansions of Grothendieck functions by three independent routes.

use tableau_crystals::grothendieck::{generating_function, schur_expand, Bounds, Route};
use tableau_crystals::{Family, Partition};

fn main() -> tableau_crystals::Result<()> {
    let lam = Partition::parse("2,1")?;
    let bounds = Bounds { max_excess: 2, max_arm: 1, max_leg: 1 };
    for (name, family) in [("G", Family::Svt), ("wG", Family::Mvt), ("dwG", Family::Vst)] {
        let crystal = schur_expand(family, &lam, 3, bounds, Route::Crystal)?;
        assert_eq!(crystal, schur_expand(family, &lam, 3, bounds, Route::Flagged)?);
        assert_eq!(crystal, schur_expand(family, &lam, 3, bounds, Route::Gram)?);
        println!("{name}{lam} in 3 variables:\n{crystal}");
    }
    let hook = schur_expand(Family::Hvt, &lam, 3, bounds, Route::Crystal)?;
    println!("hG{lam} with one arm and one leg entry at most:\n{hook}");

    let g = generating_function(Family::Svt, &Partition::parse("1")?, 2, Bounds { max_excess: 2, ..Bounds::default() })?;
    println!("G(1) in 2 variables: {g}");
    println!("after x -> x/(1 - alpha x): {}", g.beta_to_alpha().substitute_series(3));
    Ok(())
}
