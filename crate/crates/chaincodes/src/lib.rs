//! Cyclic and quasi-cyclic codes over finite chain rings.
//!
//! Rings come in two families, `F_{p^m}[u]/⟨u^s⟩` and `GR(p^s, m)`, wrapped by
//! [`BaseRing`]. Galois extensions and towers are [`ExtRing`]. Codes are built
//! as submodules of `R[x]/⟨x^n − 1⟩^ℓ` and analyzed through their
//! annihilators, canonical decompositions and exact weight enumeration.

pub mod arith;
pub mod chainring;
pub mod crt;
pub mod distance;
pub mod cyclic;
pub mod error;
pub mod extension;
pub mod factor;
pub mod gf;
pub mod linear;
pub mod literal;
pub mod onegen;
pub mod poly;
pub mod qc;
pub mod ring;

pub use chainring::{ArithOp, BaseRing, Family, RingElement, RingSpec};
pub use error::{Error, Result};
pub use extension::{Embedding, ExtElem, ExtRing};
pub use factor::{cyclotomic_cosets, factor_xn_minus_1, CyclotomicCoset, Factorization};
pub use poly::{Poly, PolyOps, ResidueOps};
pub use ring::{ChainRing, CommRing};
