//! Index of seaweed subalgebras of `gl(n)` computed three ways: by counting
//! cycles and segments of a meander, by a Euclid-style reduction of the
//! block composition, and by the rank of a random Kirillov form over a
//! prime field. Closed forms for several families, an identity checker and
//! renderers sit on top.

pub mod cli;
pub mod composition;
pub mod error;
pub mod formulas;
pub mod kirillov;
pub mod meander;
pub mod reduction;
pub mod render;
pub mod search;

pub use composition::{gcd, Composition};
pub use error::{Error, Result};
pub use meander::{Component, MaximalCycle, Meander};
pub use reduction::{index_of_seaweed, index_sl, index_via_reduction, IndexReport, ReductionTrace};
