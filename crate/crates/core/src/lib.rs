//! Prime graphs (Gruenberg-Kegel graphs) and degree patterns of alternating
//! and symmetric groups and their direct products.
//!
//! The crate provides:
//!
//! - [`numtheory`]: deterministic 64-bit primality, sieving with prefix
//!   prime counts, Legendre factorial exponents, factored integers, integer
//!   partitions;
//! - [`primegraph`]: GK(A_n) and GK(S_n) from the arithmetic adjacency
//!   criterion, product composition, degree patterns, and O(pi(n))
//!   degree-pattern paths that never materialize an edge set;
//! - [`descriptors`]: symbolic group expressions (Alt, Sym, abelian
//!   p-groups, abstract groups, products), their orders, graphs and OD data,
//!   plus a small text grammar;
//! - [`oracle`]: brute-force element-order spectra from cycle types, the
//!   independent ground truth the criterion is validated against;
//! - [`theorem`]: the search for primes p = 5^alpha - 6 (p+2, p+4
//!   composite), the order/degree-pattern verification engine, and the
//!   same-OD class enumeration that yields lower bounds like
//!   h_OD(A_625) >= 6.
//!
//! Everything is immutable after construction and safe to share across
//! threads.

pub mod descriptors;
mod error;
pub mod numtheory;
pub mod oracle;
pub mod primegraph;
pub mod theorem;

pub use error::{Error, Result};
