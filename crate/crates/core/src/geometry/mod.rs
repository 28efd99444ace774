//! Exact rational polyhedral computation.

pub mod convert;
pub mod dd;
pub mod hpoly;
pub mod inequality;
pub mod linalg;
pub mod lp;
pub mod project;
pub mod rational;
pub mod vpoly;

pub use convert::{h_to_v, v_to_h};
pub use hpoly::HPolyhedron;
pub use inequality::LinearInequality;
pub use lp::{LpOutcome, Sense};
pub use rational::{Rational, Vector};
pub use vpoly::{conic_hull, VPolyhedron};
