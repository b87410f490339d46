//! Hilbert series of ideals generated by powers of linear forms in three
//! variables, computed by reducing divisor classes on the blow-up of the
//! plane at seven points and cross-checked by exact linear algebra.

pub mod cli;
pub mod degree;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod reduce;
pub mod series;

pub use degree::{classify, DegreeFunction};
pub use error::{Error, Result};
pub use lattice::DivisorClass;
