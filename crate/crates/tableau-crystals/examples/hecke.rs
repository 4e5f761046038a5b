//! Hecke words, decreasing factorizations, increasing tableaux and the permutation series.

use tableau_crystals::hecke::{demazure_product, factorizations, hecke_words, pw, wg_direct, wg_via_pw, Permutation};
use tableau_crystals::Partition;

fn main() -> tableau_crystals::Result<()> {
    let w0 = Permutation::parse("3,2,1")?;
    println!("{:?} = {}", [1, 1, 2, 1], demazure_product(&[1, 1, 2, 1], 3)?);
    println!("words of length 4 for {w0}: {:?}", hecke_words(&w0, 4));
    for f in factorizations(&w0, 4, 3, false).iter().take(6) {
        println!("  {f}");
    }
    for lam in Partition::all_of_size(3) {
        println!("increasing tableaux of shape {lam}: {:?}", pw(&w0, &lam).iter().map(|t| t.rows().to_vec()).collect::<Vec<_>>());
    }
    let direct = wg_direct(&w0, 2, 5);
    assert_eq!(direct, wg_via_pw(&w0, 2, 5)?);
    println!("series in 2 variables up to length 5: {direct}");
    Ok(())
}
