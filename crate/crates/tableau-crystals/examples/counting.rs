//! Highest weight elements paired with interval-bounded skew tableaux.

use tableau_crystals::counting::{hw_mvt_to_skew, hw_vst_to_conj, hw_vst_to_rpp};
use tableau_crystals::enumerate;
use tableau_crystals::graph::highest_weights;
use tableau_crystals::{Partition, Tableau};

fn main() -> tableau_crystals::Result<()> {
    let lam = Partition::parse("3,2")?;
    for t in highest_weights(&enumerate::mvt(&lam, 2, 3), 2) {
        println!("{} -> {:?}", t.to_json(), hw_mvt_to_skew(&t)?.rows());
    }
    let rect = Partition::parse("3,3")?;
    for t in highest_weights(&enumerate::vst(&rect, 3), 3) {
        println!("{} -> {:?} / {:?}", t.to_json(), hw_vst_to_conj(&t)?.rows(), hw_vst_to_rpp(&t)?.rows());
    }
    Ok(())
}
