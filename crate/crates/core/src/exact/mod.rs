//! Exact arithmetic substrate: rationals, polynomials, cyclotomic fields
//! and exact linear algebra.

pub mod bipoly;
pub mod cyclo;
pub mod linalg;
pub mod mpoly;
pub mod poly;
