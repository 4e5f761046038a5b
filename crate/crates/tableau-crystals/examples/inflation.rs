//! Inflate a valued-set tableau to a semistandard tableau with a flagged companion, then deflate.

use tableau_crystals::inflate::{deflate, inflate_trace};
use tableau_crystals::ValuedSetTableau;

fn main() -> tableau_crystals::Result<()> {
    let t = ValuedSetTableau::new(
        vec![vec![1, 1, 1, 2, 2], vec![2, 2, 3, 3], vec![3, 4]],
        vec![vec![1, 3], vec![2], vec![1]],
    )?;
    let steps = inflate_trace(&t)?;
    for s in steps.iter().rev() {
        println!("column {}: ssyt {:?}  flagged {:?}", s.column, s.ssyt.rows(), s.flagged.rows());
    }
    let last = steps.last().expect("nonempty shape");
    assert_eq!(deflate(&last.ssyt, &last.flagged)?, t);
    println!("deflate recovers the input");
    Ok(())
}
