pub mod cli;
pub mod error;
pub mod growth;
pub mod insertion;
pub mod interlacing;
pub mod partition;
pub mod poly;
pub mod projection;
pub mod render;
pub mod rules;
pub mod schur;
pub mod tableau;
pub mod triangular;

pub use error::{Error, Result};
pub use partition::{Cell, Family, FrobeniusCoords, Partition};
