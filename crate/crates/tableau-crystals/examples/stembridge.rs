//! Local axiom check on hook-valued components, plus a corrupted graph that must fail.

use tableau_crystals::enumerate;
use tableau_crystals::graph::CrystalGraph;
use tableau_crystals::stembridge::verify_stembridge;
use tableau_crystals::Partition;

fn main() -> tableau_crystals::Result<()> {
    let lam = Partition::parse("2,1")?;
    let g = CrystalGraph::from_vertices(enumerate::hvt_up_to(&lam, 3, 1, 1), 3)?;
    println!("{} vertices, {} components", g.len(), g.components().len());
    let report = verify_stembridge(&g);
    println!("axioms hold: {}", report.passed());

    let bad = g.with_reversed_edge(0);
    match verify_stembridge(&bad).violation {
        Some(v) => println!("reversed edge: {} fails at {} ({})", v.axiom, v.vertex, v.detail),
        None => println!("reversed edge went unnoticed"),
    }
    Ok(())
}
