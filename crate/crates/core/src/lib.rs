//! Finite computational algebra for reflection geometries on involution
//! classes: groups as Cayley tables, line families and their axioms, K-loops
//! from twisted subgroups, quasidirect products, and the Frobenius extension
//! pipeline, all verified by exhaustive computation at desk scale.

pub mod catalog;
pub mod error;
pub mod frobenius;
pub mod geometry;
pub mod group;
pub mod io;
pub mod kloop;
pub mod quasidirect;
pub mod report;

pub use error::{Error, Result};
pub use geometry::{Geometry, Line};
pub use group::{FiniteGroup, InvolutoryAutomorphism, Subgroup};
pub use kloop::{KLoop, LoopAutomorphism};
pub use quasidirect::{AutomorphismGroup, QuasidirectGroup};
pub use report::{AxiomReport, Check, GeometryStats};
