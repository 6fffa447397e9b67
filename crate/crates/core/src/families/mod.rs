//! The coordinate ring of SL2 and the two families of affine extensions.

pub mod family_one;
pub mod family_two;
pub mod gluing;
pub mod sl2;

pub use family_one::{family1_generators, family1_sequence, family1_vars, family1_ideal, family1_psi, verify_family1, FamilyOne};
pub use family_two::{family2_nonnegative_generators, verify_family2, FamilyTwo};
pub use gluing::gluing_checks;
pub use sl2::Sl2Ring;
