//! Exact-arithmetic engine for elliptic-curve counts in K3 surfaces.
//!
//! The crate constructs the generating functions for genus-0 and genus-1
//! curve counts in the elliptic K3 surface E(2) over exact rationals,
//! verifies the identities relating them (a dozen named checks, each
//! certified to a chosen truncation order), evaluates the genus-2
//! topological recursion over an explicit 24-element cohomology basis, and
//! emits N1(d, r) count tables comparing index-1 and index-2 classes.
//!
//! Modules:
//! - [`series`]: truncated power series over arbitrary-precision rationals
//! - [`fastmul`]: sub-quadratic multiplication, exact match to the
//!   reference product
//! - [`qseries`]: divisor sums, G2, the inverse eta-power product, F(t)
//! - [`k3`]: the N/P/M generating-function families and count tables
//! - [`reducer`]: symbolic dual-basis reduction of the genus-2 recursion
//! - [`verify`]: the named identity checks and their reports
//! - [`cli`]: command-line surface

pub mod cli;
pub mod fastmul;
pub mod k3;
pub mod qseries;
pub mod reducer;
pub mod series;
pub mod verify;
