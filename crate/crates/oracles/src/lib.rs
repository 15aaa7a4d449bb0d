//! Brute-force reference computations, independent of the main library.
//!
//! Everything here favours obviousness over speed and is used from tests and the self-test grid.

pub mod diagram;
pub mod gauss;
pub mod homfly;
pub mod kauffman;
pub mod lpoly;
pub mod wirtinger;

pub use lpoly::LPoly;
