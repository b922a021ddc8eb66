//! Exact computation of the invariants `ms(R)` and `cs(R)` for standard graded
//! algebras `R = k[x_1, ..., x_n] / I` with `I` generated by quadrics.
//!
//! `ms(R)` is the least number of generators of an ideal containing `m^2`;
//! `cs(R)` is the least number of generators of an ideal `J` with `J^2 = m^2`.
//! Both are witnessed by linear forms and only depend on the degree-two piece
//! of `I`, so everything here works inside the degree-two graded piece over a
//! prime field `GF(p)`.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the command line and
//! search campaigns live in the companion `msq` crate.

#![no_std]

extern crate alloc;

pub mod constructions;
pub mod error;
pub mod field;
pub mod graph;
pub mod invariants;
pub mod quad;
pub mod veronese;
pub mod wlp;

pub use error::{Error, Result};
pub use field::{FieldCtx, Matrix, Scalar};
pub use graph::{EdgeCover, Graph};
pub use invariants::{
    Certification, InvariantKind, InvariantReport, NamedBound, Ratio, SearchMode, SearchOptions,
};
pub use quad::{LinearForm, Monomial, QuadForm, QuadIdeal};
