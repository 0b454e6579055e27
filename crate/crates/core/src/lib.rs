//! Exact arithmetic in the abelian closure of the rationals, certification of
//! real-abelian numbers, and a compiler from such numbers to first-order
//! formulas over exponential fields, together with symbolic and high-precision
//! numeric checkers for those formulas.

pub mod cyclotomic;
pub mod error;
pub mod formula;
pub mod lattice;
pub mod nt;
pub mod numeric;
pub mod poly;
pub mod rab;
pub mod rat;
pub mod sk;

pub use cyclotomic::CycNum;
pub use poly::RatPoly;
pub use rat::Rat;
pub use sk::SKElement;
