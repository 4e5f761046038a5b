//! Split bounded set-valued and valued-set families into irreducible crystals.

use tableau_crystals::enumerate;
use tableau_crystals::graph::decompose;
use tableau_crystals::Partition;

fn main() -> tableau_crystals::Result<()> {
    let square = Partition::parse("2,2")?;
    let report = decompose(enumerate::svt(&square, 3, 2), 3)?;
    println!("set-valued {square}, 3 letters, at most 2 extra entries:");
    for c in &report.components {
        println!("  {:<8} size {:>2}  highest weight {}", c.mu.to_string(), c.size, serde_json::to_string(&c.highest_weight).unwrap());
    }

    let rect = Partition::parse("3,3")?;
    let report = decompose(enumerate::vst(&rect, 3), 3)?;
    println!("valued-set {rect}, 3 letters:");
    for (mu, mult) in &report.multiplicities {
        println!("  {mu:<8} x{mult}");
    }
    Ok(())
}
