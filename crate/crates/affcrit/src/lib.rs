//! Exact critical-level combinatorics for untwisted affine Kac--Moody algebras.
//!
//! Everything is computed in exact rational arithmetic over finite,
//! explicitly truncated windows of the weight lattice:
//!
//! * [`rootsys`] — finite simple root systems (types A–G), the derived affine
//!   data (highest root, dual Coxeter number, Weyl vector) and the normalized
//!   invariant bilinear form on the affine dual Cartan space.
//! * [`weights`] — the dominance partial order with explicit certificates,
//!   finite windows, the criticality test and the bar projection.
//! * [`weyl`] — linear and dot actions of real-root reflections, integral
//!   roots, orbit enumeration inside a window, and the `alpha_up` step map.
//! * [`linkage`] — Kac--Kazhdan moves, classical and restricted linkage
//!   classes, deformed integral roots and class classification.
//! * [`characters`] — truncated formal characters of Verma and restricted
//!   Verma modules, the colored-partition series p(n) and its inverse q(n),
//!   and the delta-shift convolution relating the two character families.
//! * [`blocks`] — window-scale block partitions, subgeneric projective flags,
//!   BGGH-reciprocity matrices and derived simple characters.
//!
//! Weights are stored in fundamental-weight coordinates, roots in simple-root
//! coordinates; all conversions go through the exact inverse Cartan matrix.

pub mod blocks;
pub mod characters;
mod error;
pub mod linkage;
pub mod rootsys;
pub mod weights;
pub mod weyl;

pub use error::Error;

/// Exact rational scalar used for all weight coordinates and pairings.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for the exact fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

pub(crate) mod serde_rat {
    //! Serialize rationals as `"p/q"` strings (plain `"p"` when q = 1).

    use super::Rat;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

pub(crate) mod serde_rat_vec {
    //! Serialize rational vectors as arrays of `"p/q"` strings.

    use super::Rat;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings
            .into_iter()
            .map(|s| s.parse().map_err(de::Error::custom))
            .collect()
    }
}
