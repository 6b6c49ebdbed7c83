//! Euler characteristics on `Q`, by the closed cubic formula and by
//! Hirzebruch–Riemann–Roch.

use num_traits::Zero;

use crate::chow::{ChernData, ChowElement};
use crate::error::{Error, Result};
use crate::Rational;

/// Chern character in `(1, h, l, p)` units.
///
/// `ch2` is measured in `l` because `(c1·h)² = 2c1²·l`, which absorbs the
/// usual factor `1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChernCharacter {
    pub ch0: Rational,
    pub ch1: Rational,
    pub ch2: Rational,
    pub ch3: Rational,
}

impl ChernCharacter {
    pub fn to_chow(&self) -> ChowElement {
        ChowElement::new(self.ch0, self.ch1, self.ch2, self.ch3)
    }

    pub fn from_chow(x: &ChowElement) -> Self {
        Self {
            ch0: x.a0,
            ch1: x.a1,
            ch2: x.a2,
            ch3: x.a3,
        }
    }
}

pub fn chern_character(c: &ChernData) -> ChernCharacter {
    let r = Rational::from(i64::from(c.rank));
    let (c1, c2, c3) = (
        Rational::from(c.c1),
        Rational::from(c.c2),
        Rational::from(c.c3),
    );
    let two = Rational::from(2);
    let three = Rational::from(3);
    ChernCharacter {
        ch0: r,
        ch1: c1,
        ch2: c1 * c1 - c2,
        ch3: (two * c1 * c1 * c1 - three * c1 * c2 + three * c3) / Rational::from(6),
    }
}

pub fn chern_from_character(ch: &ChernCharacter) -> Result<ChernData> {
    let bad = || Error::NonIntegerResult(format!("{}", ch.to_chow()));
    if !ch.ch0.is_integer() || ch.ch0 < Rational::zero() || !ch.ch1.is_integer() {
        return Err(bad());
    }
    let c1 = ch.ch1;
    let c2 = c1 * c1 - ch.ch2;
    let three = Rational::from(3);
    let c3 =
        (Rational::from(6) * ch.ch3 - Rational::from(2) * c1 * c1 * c1 + three * c1 * c2) / three;
    if !c2.is_integer() || !c3.is_integer() {
        return Err(bad());
    }
    let rank = u32::try_from(ch.ch0.to_integer()).map_err(|_| bad())?;
    Ok(ChernData::new(
        rank,
        c1.to_integer(),
        c2.to_integer(),
        c3.to_integer(),
    ))
}

/// Total Chern class of the tangent bundle, `(1 + h)⁵ / (1 + 2h)` from the
/// normal sequence `0 → TQ → TP⁴|_Q → O_Q(2) → 0`.
pub fn tangent_chern() -> ChowElement {
    let ambient = ChowElement::from_ints(1, 1, 0, 0)
        .powi(5)
        .expect("non-negative power");
    let normal = ChowElement::from_ints(1, 2, 0, 0);
    ambient * normal.inverse().expect("unit")
}

/// Todd class `1 + (3/2)h + (13/6)l + p`.
///
/// From `c(TQ) = 1 + 3h + 8l + 4p`: `td1 = c1/2`, `td2 = (c1² + c2)/12`,
/// `td3 = c1·c2/24`.
pub fn todd_class() -> ChowElement {
    ChowElement::new(
        Rational::from(1),
        Rational::new(3, 2),
        Rational::new(13, 6),
        Rational::from(1),
    )
}

/// `(2c1³ − 3c1c2 + 3c3)/6 + 3(c1² − c2)/2 + 13c1/6 + r`.
pub fn chi_formula(c: &ChernData) -> Rational {
    let (c1, c2, c3) = (
        Rational::from(c.c1),
        Rational::from(c.c2),
        Rational::from(c.c3),
    );
    let r = Rational::from(i64::from(c.rank));
    (Rational::from(2) * c1 * c1 * c1 - Rational::from(3) * c1 * c2 + Rational::from(3) * c3)
        / Rational::from(6)
        + Rational::from(3) * (c1 * c1 - c2) / Rational::from(2)
        + Rational::from(13) * c1 / Rational::from(6)
        + r
}

/// Degree-3 part of `ch(E)·td(Q)`.
pub fn chi_hrr(c: &ChernData) -> Rational {
    (chern_character(c).to_chow() * todd_class()).a3
}
