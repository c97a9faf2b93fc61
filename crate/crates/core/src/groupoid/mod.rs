//! The groupoid action on points of `Q^n x Q^m` modulo `S_n x S_m`.

pub mod moves;
pub mod orbit;
pub mod point;

pub use moves::{all_moves, lower_moves, raise_moves, undo, MoveEdge, MoveKind};
pub use orbit::{default_cap, orbit, path_between, path_within, Orbit};
pub use point::{Kappa, Point, UVPoint};
