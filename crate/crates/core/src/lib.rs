//! Exact-arithmetic computations around bigraded Segre coordinate algebras:
//! the projective coinvariant algebra, its Young-invariant subalgebras,
//! their two-parameter deformation family, symmetric group characters,
//! and descent-monomial bases. Everything is computed over exact rationals
//! (or cyclotomic fields); there is no floating point anywhere.

pub mod bases;
pub mod characters;
pub mod combinat;
pub mod deform;
pub mod diagonal;
pub mod error;
pub mod exact;
pub mod qseries;
pub mod quotient;
pub mod segre;

pub use error::{Error, Result};
pub use exact::bipoly::{BiPoly, BiSeries};
pub use exact::poly::RatPoly;
