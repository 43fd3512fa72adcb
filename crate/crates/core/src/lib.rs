//! Ree groups of type `2G2` over `GF(3^m)`: the group `U`, its norm and
//! involution, the generalized hexagon, and a verification suite.

pub mod error;
pub mod field;
pub mod group;
pub mod hexagon;
pub mod report;
pub mod sampling;
pub mod twisted;
pub mod verify;
