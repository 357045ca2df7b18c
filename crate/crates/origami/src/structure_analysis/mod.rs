//! Invariant splittings, characters, finite images of the affine group, the D4
//! root systems, congruence kernels and growth probes.

pub mod characters;
pub mod congruence;
pub mod cyclic;
pub mod cyclotomic;
pub mod d4;
pub mod decompose;
pub mod group;
pub mod growth;

pub use characters::{isotypic_multiplicities, Character, CharacterTable};
pub use congruence::{block_action, congruence_generators, kernel_is_congruence, CosetGraph, KernelReport};
pub use cyclic::{breve_blocks, tau_character, tau_generator};
pub use cyclotomic::{Cyclo, CycloBlock};
pub use d4::{detect_d4, RootSystemD4};
pub use decompose::{decompose_ew, decompose_orn, DecompositionReport};
pub use group::{finite_closure, finite_closure_with, symplectic_subgroup, Closure, FiniteMatrixGroup};
pub use growth::{cocycle_growth, power_growth_rate, GrowthReport};
