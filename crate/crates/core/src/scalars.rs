//! Scalar arithmetic for diagram algebras.
//!
//! Type-A diagrams only ever pick up powers of the loop parameter `δ`.
//! Type-D diagrams take scalars in the commutative monoid
//! `H = <δ^{±1}>{1, ξ, θ}` with `ξ² = δ²`, `ξθ = δθ`, `θ² = δ²θ`,
//! so every element of `H` has exactly one canonical form
//! `δ^k`, `δ^k·ξ` or `δ^k·θ`.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Mul;

/// A power of the loop parameter: `δ^k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct DeltaPower(pub i32);

impl DeltaPower {
    pub const ONE: DeltaPower = DeltaPower(0);
}

impl Mul for DeltaPower {
    type Output = DeltaPower;

    fn mul(self, rhs: DeltaPower) -> DeltaPower {
        // Exponent overflow is a hard error, never wraparound.
        DeltaPower(self.0.checked_add(rhs.0).expect("delta exponent overflow"))
    }
}

impl fmt::Display for DeltaPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            1 => write!(f, "d"),
            k => write!(f, "d^{}", k),
        }
    }
}

/// The non-invertible part of an `H` element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    One,
    Xi,
    Theta,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::One => write!(f, "1"),
            Tag::Xi => write!(f, "xi"),
            Tag::Theta => write!(f, "theta"),
        }
    }
}

/// A canonical element `δ^k`, `δ^k·ξ` or `δ^k·θ` of `H`.
///
/// Values are kept canonical at all times; multiplication re-normalizes
/// eagerly so that equality is plain structural equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct HScalar {
    pub delta: i32,
    pub tag: Tag,
}

impl HScalar {
    pub const ONE: HScalar = HScalar {
        delta: 0,
        tag: Tag::One,
    };

    pub fn delta_power(k: i32) -> HScalar {
        HScalar {
            delta: k,
            tag: Tag::One,
        }
    }

    pub fn xi(k: i32) -> HScalar {
        HScalar {
            delta: k,
            tag: Tag::Xi,
        }
    }

    pub fn theta(k: i32) -> HScalar {
        HScalar {
            delta: k,
            tag: Tag::Theta,
        }
    }

    pub fn times_delta(self, k: i32) -> HScalar {
        HScalar {
            delta: self.delta.checked_add(k).expect("delta exponent overflow"),
            tag: self.tag,
        }
    }

    /// Equality of the non-invertible part only; rank counts quotient out `δ`.
    pub fn eq_mod_delta(self, other: HScalar) -> bool {
        self.tag == other.tag
    }
}

impl Default for HScalar {
    fn default() -> Self {
        HScalar::ONE
    }
}

impl Mul for HScalar {
    type Output = HScalar;

    fn mul(self, rhs: HScalar) -> HScalar {
        let k = self
            .delta
            .checked_add(rhs.delta)
            .expect("delta exponent overflow");
        // Canonical forms forced by xi^2 = d^2, xi*theta = d*theta, theta^2 = d^2*theta.
        let (shift, tag) = match (self.tag, rhs.tag) {
            (Tag::One, t) | (t, Tag::One) => (0, t),
            (Tag::Xi, Tag::Xi) => (2, Tag::One),
            (Tag::Xi, Tag::Theta) | (Tag::Theta, Tag::Xi) => (1, Tag::Theta),
            (Tag::Theta, Tag::Theta) => (2, Tag::Theta),
        };
        HScalar {
            delta: k.checked_add(shift).expect("delta exponent overflow"),
            tag,
        }
    }
}

impl fmt::Display for HScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.delta, self.tag) {
            (0, Tag::One) => write!(f, "1"),
            (k, Tag::One) => write!(f, "d^{}", k),
            (0, t) => write!(f, "{}", t),
            (k, t) => write!(f, "d^{}*{}", k, t),
        }
    }
}
