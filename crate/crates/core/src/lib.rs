pub mod error;
pub mod gf;
pub mod graphs;
pub mod poly;
pub mod hermitian;
pub mod pgu;
pub mod projplane;
pub mod reference;
pub mod report;
pub mod towers;

pub use error::{Error, Result};
pub use gf::{FieldCtx, Fq2};
