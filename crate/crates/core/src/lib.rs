//! Exact computation of chromatic polynomials, their falling-factorial
//! coefficients, and the restricted Stirling families that those
//! coefficients count.
//!
//! Everything runs on arbitrary-precision integers (rationals where a
//! division genuinely arises); nothing here touches floating point.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: simple undirected graphs, the standard families and the
//!   textual graph-spec grammar.
//! * [`poly`]: dense integer / rational polynomials and the change of basis
//!   between monomials and falling factorials.
//! * [`chromatic`]: deletion–contraction engine, `α_k(G)` and `χ(G)`.
//! * [`oracle`]: brute-force set-partition and coloring counts used as
//!   ground truth.
//! * [`stirling`]: classical, `r`-, multi-`r`, `K(r)` and `T(r)` triangles,
//!   Bell polynomial sequences, custom triangular recurrences and the
//!   identity catalog.
//! * [`sequence`]: log-concavity, bounded Pólya-frequency, q-log-convexity,
//!   Newton's inequalities and Sturm root counting.

pub mod chromatic;
mod error;
pub mod graph;
pub mod numbers;
pub mod oracle;
pub mod poly;
pub mod sequence;
mod serde_util;
pub mod stirling;

pub use chromatic::{ChromaticResult, Engine};
pub use error::{Error, Result};
pub use graph::{Graph, GraphSpec};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use oracle::{Oracle, RestrictionMode, RestrictionSpec};
pub use poly::{FallingFactorialForm, IntegerPolynomial, RationalPolynomial};
pub use sequence::{ConditionCertificate, Property, QlcDirection, SequenceVerdict, Witness};
pub use stirling::identities::{IdentityId, IdentityParams, VerificationReport};
pub use stirling::{BellSequence, Family, RecurrenceSpec, TriangleTable};
