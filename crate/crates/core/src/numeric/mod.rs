//! Self-contained arbitrary-precision ball arithmetic: dyadic midpoints with
//! explicit error radii, rigorous elementary functions, and the complex balls
//! used for high-precision verification.

pub mod ball;
pub mod cball;
pub mod dyad;

pub use ball::Ball;
pub use cball::CBall;
pub use dyad::Dyad;
