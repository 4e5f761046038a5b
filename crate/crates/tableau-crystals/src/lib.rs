//! Crystal structures on tableau families and the bijections between them.

pub mod checks;
pub mod cli;
pub mod crystal;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod hecke;
pub mod grothendieck;
pub mod inflate;
pub mod partition;
pub mod poly;
pub mod rsk;
pub mod stembridge;
pub mod tableau;
pub mod uncrowd;
pub mod weight;
pub mod word;

pub use error::{Error, Result};
pub use partition::{Partition, SkewShape};
pub use tableau::*;
pub use weight::WeightVector;
