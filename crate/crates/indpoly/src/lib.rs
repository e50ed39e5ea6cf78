//! Exact-arithmetic toolkit for independence polynomials of threshold
//! and antiregular graphs.
//!
//! Capabilities, each with a runnable example under `examples/`:
//!
//! - [`graph`]: simple graphs up to 64 vertices with complements, unions,
//!   joins, line graphs, and the structural recognizers (antiregular,
//!   simplicial, König–Egerváry).
//! - [`poly`]: dense big-integer polynomials with unimodality and
//!   log-concavity checks.
//! - [`roots`]: Sturm-sequence real-root counting and isolation over
//!   exact rationals.
//! - [`engine`]: I(G;x) by subset enumeration or the memoized deletion
//!   recursion, plus matching polynomials via line graphs.
//! - [`antiregular`]: the A_n family, its closed-form polynomials, and a
//!   verification driver for every family-specific claim.
//! - [`threshold`]: binary building strings, recognition, per-order
//!   census, uniqueness sweeps, and the pattern survey.
//!
//! ```
//! use indpoly::antiregular::{antiregular, antiregular_poly_closed, AntiregularSpec};
//! use indpoly::engine::independence_poly;
//!
//! let a5 = antiregular(5)?;
//! let p = independence_poly(&a5)?;
//! assert_eq!(p.to_string(), "1 + 5x + 4x^2 + x^3");
//! let closed = antiregular_poly_closed(&AntiregularSpec::connected(5)?);
//! assert_eq!(p, closed);
//! # Ok::<(), indpoly::Error>(())
//! ```

pub mod antiregular;
pub mod cli;
pub mod engine;
mod error;
pub mod graph;
pub mod poly;
pub mod report;
pub mod roots;
pub mod threshold;

pub use error::Error;
pub use graph::{DegreeSequence, Graph};
pub use poly::Polynomial;
pub use report::Report;
pub use roots::RootReport;
