//! Cylinders, multitwists, index and spin parity, invariant supplements.

pub mod cylinders;
pub mod index;
pub mod spin;
pub mod supplement;
pub mod twist;

pub use cylinders::{cylinders, Cylinder, CylinderDecomposition};
pub use index::{index_parity, index_parity_with, simple_loops, turning_number, walk_chain, Turning, WalkStep};
pub use spin::{
    class_index_parity, quadratic_form, spin_parity, spin_parity_with_basis, symplectic_basis, Parity, SpinResult,
};
pub use supplement::{
    invariant_supplement, invariant_supplement_with, Equation, Inconsistency, Reduced, SupplementCertificate,
};
pub use twist::{multitwist, MultiTwist};
