//! Decides whether the isotropy action of a circle `S` on `G/S` is
//! equivariantly formal, for `G` compact connected and given in
//! universal-cover normal form `T^k × K_1 × … × K_m`.
//!
//! Everything is exact: root systems live in rational coordinates, Weyl
//! groups are enumerated as permutations of the roots, and Poincaré
//! polynomials have integer coefficients.

pub mod classify;
pub mod cohomo;
pub mod e6;
pub mod error;
pub mod linalg;
pub mod reflect;
pub mod rootsys;
pub mod schema;
pub mod weyl;

pub use classify::{
    classify, classify_with_verification, Case, CircleEmbedding, ClassificationReport, GroupSpec,
};
pub use cohomo::{PoincarePolynomial, PoincareReport};
pub use error::{Error, Result};
pub use reflect::{is_reflected_factor, ReflectionVerdict, WeylRegistry, WeylSource};
pub use rootsys::{Family, RootSystem, SimpleType};
pub use schema::InputDoc;
pub use weyl::{generate_weyl, WeylElement, WeylGroup, WeylSummary, DEFAULT_BUDGET};
