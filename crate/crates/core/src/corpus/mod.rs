//! Generators for highest-weight modules over sl₂, Kac–Moody algebras and
//! their Verma modules, and truncated conformal coefficient algebras.

pub mod conformal;
pub mod kac_moody;
pub mod sl2;

pub use conformal::{
    conformal_presentation, conformal_verma, satisfies_locality_bound, ConformalConfig,
};
pub use kac_moody::{kac_moody_presentation, negative_part, verma_presentation, CartanData};
pub use sl2::{sl2_presentation, sl2_vector};
