//! Exact arithmetic for the split exceptional Jordan algebra `J` (the Albert
//! algebra over the split octonions), the prehomogeneous space `V = J ⊕ J`,
//! and two equivariant constructions of isotope products:
//!
//! * the degree-8 map `S : V → Hom(J ⊗ J, J)` whose value at a semistable
//!   point, divided by the discriminant, is the product of an isotope;
//! * the degree-6 map `T : J → Hom(J ⊗ J ⊗ J, k)` which recovers the isotope
//!   `J_a` through the bilinear form `Q_a`.
//!
//! Everything is computed over `ℚ` with arbitrary-precision rationals, so
//! every identity is checked by exact equality.

pub mod albert;
pub mod error;
pub mod gaction;
pub mod isotope;
pub mod json;
pub mod linalg;
pub mod octonion;
pub mod pvs;
pub mod rat;
pub mod sample;
pub mod smap;
pub mod verify;

pub use albert::{AlbertElem, JBasis};
pub use error::{AlbertError, Result};
pub use gaction::GroupElem;
pub use octonion::Oct;
pub use pvs::{BinaryCubic, VPoint};
pub use rat::Rat;
pub use smap::StructureTensor;
