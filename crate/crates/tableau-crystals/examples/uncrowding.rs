//! Uncrowd a multiset-valued tableau column by column and crowd it back.

use tableau_crystals::uncrowd::{crowd, recording_tableau, uncrowd_trace};
use tableau_crystals::{MultisetValuedTableau, Tableau};

fn main() -> tableau_crystals::Result<()> {
    let t = MultisetValuedTableau::new(vec![
        vec![vec![1, 1, 2], vec![2, 2], vec![2, 5, 6]],
        vec![vec![3, 3], vec![4, 4, 4], vec![7]],
        vec![vec![5, 6, 8]],
        vec![vec![9]],
    ])?;
    println!("input {}", t.to_json());
    let steps = uncrowd_trace(&t)?;
    for s in &steps {
        println!("column {}: ssyt {:?}", s.column, s.ssyt.rows());
        println!("          flagged {:?} on {}/{}", s.flagged.rows(), s.flagged.shape().outer(), s.flagged.shape().inner());
    }
    let last = steps.last().expect("nonempty shape");
    println!("recording tableau {:?}", recording_tableau(&last.flagged)?.rows());
    assert_eq!(crowd(&last.ssyt, &last.flagged)?, t);
    println!("crowd recovers the input");
    Ok(())
}
