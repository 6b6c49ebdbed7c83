//! Chow ring of the quadric threefold and total-Chern-class calculus.
//!
//! `A(Q) = Z·1 ⊕ Z·h ⊕ Z·l ⊕ Z·p` with `h² = 2l`, `h·l = p` and everything of
//! degree above 3 truncated. The factor 2 in `h² = 2l` is `deg Q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hrr;
use crate::Rational;

/// A class `a0·1 + a1·h + a2·l + a3·p` with exact rational coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChowElement {
    pub a0: Rational,
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
}

impl Default for ChowElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl ChowElement {
    pub fn new(a0: Rational, a1: Rational, a2: Rational, a3: Rational) -> Self {
        Self { a0, a1, a2, a3 }
    }

    pub fn from_ints(a0: i64, a1: i64, a2: i64, a3: i64) -> Self {
        Self::new(a0.into(), a1.into(), a2.into(), a3.into())
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    /// Hyperplane class.
    pub fn h() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    /// Class of a line.
    pub fn l() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    /// Class of a point.
    pub fn p() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn coeffs(&self) -> [Rational; 4] {
        [self.a0, self.a1, self.a2, self.a3]
    }

    /// Coefficient of the degree-`i` basis element (`0 ≤ i ≤ 3`).
    pub fn degree(&self, i: usize) -> Rational {
        self.coeffs()[i]
    }

    pub fn scale(&self, s: Rational) -> Self {
        Self::new(self.a0 * s, self.a1 * s, self.a2 * s, self.a3 * s)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_integer())
    }

    /// Inverse in the truncated ring; exists iff the degree-0 part is nonzero.
    pub fn inverse(&self) -> Option<Self> {
        if self.a0.is_zero() {
            return None;
        }
        // x = a0(1 + u) with u nilpotent of order 4.
        let inv0 = self.a0.recip();
        let u = Self::new(Rational::zero(), self.a1, self.a2, self.a3).scale(inv0);
        let u2 = u * u;
        let u3 = u2 * u;
        Some((Self::one() - u + u2 - u3).scale(inv0))
    }

    /// Integer power; negative exponents go through [`ChowElement::inverse`].
    pub fn powi(&self, n: i64) -> Option<Self> {
        let base = if n < 0 { self.inverse()? } else { *self };
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc * base;
        }
        Some(acc)
    }
}

/// Product under `h² = 2l`, `h·l = p`, `l² = h·p = l·p = p² = 0`.
pub fn chow_mul(x: &ChowElement, y: &ChowElement) -> ChowElement {
    let two = Rational::from_integer(2);
    ChowElement {
        a0: x.a0 * y.a0,
        a1: x.a0 * y.a1 + x.a1 * y.a0,
        a2: x.a0 * y.a2 + x.a2 * y.a0 + two * x.a1 * y.a1,
        a3: x.a0 * y.a3 + x.a3 * y.a0 + x.a1 * y.a2 + x.a2 * y.a1,
    }
}

impl Mul for ChowElement {
    type Output = ChowElement;
    fn mul(self, rhs: ChowElement) -> ChowElement {
        chow_mul(&self, &rhs)
    }
}

impl Add for ChowElement {
    type Output = ChowElement;
    fn add(self, rhs: ChowElement) -> ChowElement {
        ChowElement::new(
            self.a0 + rhs.a0,
            self.a1 + rhs.a1,
            self.a2 + rhs.a2,
            self.a3 + rhs.a3,
        )
    }
}

impl Sub for ChowElement {
    type Output = ChowElement;
    fn sub(self, rhs: ChowElement) -> ChowElement {
        self + (-rhs)
    }
}

impl Neg for ChowElement {
    type Output = ChowElement;
    fn neg(self) -> ChowElement {
        ChowElement::new(-self.a0, -self.a1, -self.a2, -self.a3)
    }
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (c, sym) in self.coeffs().iter().zip(["", "h", "l", "p"]) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (sym, mag.is_one()) {
                ("", _) => format!("{mag}"),
                (s, true) => s.to_string(),
                (s, false) if mag.is_integer() => format!("{mag}{s}"),
                (s, false) => format!("({mag}){s}"),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            terms.push((sign, body));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (sign, body)) in terms.iter().enumerate() {
            match (i, *sign) {
                (0, "-") => write!(f, "-{body}")?,
                (0, _) => write!(f, "{body}")?,
                (_, s) => write!(f, " {s} {body}")?,
            }
        }
        Ok(())
    }
}

/// Rank and Chern classes in `(h, l, p)` units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChernData {
    pub rank: u32,
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
}

impl ChernData {
    pub const fn new(rank: u32, c1: i64, c2: i64, c3: i64) -> Self {
        Self { rank, c1, c2, c3 }
    }

    pub const fn trivial(rank: u32) -> Self {
        Self::new(rank, 0, 0, 0)
    }

    /// `O_Q(k)`.
    pub const fn line(k: i64) -> Self {
        Self::new(1, k, 0, 0)
    }

    pub fn total_chern(&self) -> ChowElement {
        total_chern(self)
    }

    pub fn twist(&self, k: i64) -> Self {
        twist(self, k)
    }

    pub fn dual(&self) -> Self {
        dual(self)
    }

    pub fn tensor(&self, other: &ChernData) -> Result<Self> {
        tensor(self, other)
    }

    /// Rebuild Chern data from a total Chern class; fails unless the class
    /// is `1 + (integral terms)`.
    pub fn from_total(rank: u32, total: &ChowElement) -> Option<Self> {
        if !total.is_integral() || total.a0 != Rational::one() {
            return None;
        }
        Some(Self::new(
            rank,
            total.a1.to_integer(),
            total.a2.to_integer(),
            total.a3.to_integer(),
        ))
    }

    /// Necessary numerical conditions for the data of a vector bundle of
    /// rank ≤ 2: Chern classes above the rank vanish.
    pub fn respects_rank(&self) -> bool {
        match self.rank {
            0 => self.c1 == 0 && self.c2 == 0 && self.c3 == 0,
            1 => self.c2 == 0 && self.c3 == 0,
            2 => self.c3 == 0,
            _ => true,
        }
    }

    /// `(c1, c2, c3)` as a tuple, the form used in the classification tables.
    pub fn classes(&self) -> (i64, i64, i64) {
        (self.c1, self.c2, self.c3)
    }
}

impl fmt::Display for ChernData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.rank, self.c1, self.c2, self.c3)
    }
}

pub fn total_chern(c: &ChernData) -> ChowElement {
    ChowElement::from_ints(1, c.c1, c.c2, c.c3)
}

/// Quotient data in `0 → sub → total → quotient → 0`.
pub fn whitney_third(sub: &ChernData, total: &ChernData) -> Result<ChernData> {
    if sub.rank > total.rank {
        return Err(Error::RankMismatch {
            sub: sub.rank,
            total: total.rank,
        });
    }
    let inv = total_chern(sub)
        .inverse()
        .expect("total Chern class has unit constant term");
    let q = total_chern(total) * inv;
    ChernData::from_total(total.rank - sub.rank, &q)
        .ok_or_else(|| Error::NonIntegerQuotient(format!("{total} / {sub} = {q}")))
}

/// Middle term data in `0 → sub → total → quot → 0`.
pub fn whitney_total(sub: &ChernData, quot: &ChernData) -> ChernData {
    let t = total_chern(sub) * total_chern(quot);
    ChernData::from_total(sub.rank + quot.rank, &t).expect("product of integral classes")
}

/// Chern data of a direct sum of several pieces.
pub fn direct_sum<'a, I>(parts: I) -> ChernData
where
    I: IntoIterator<Item = &'a ChernData>,
{
    parts
        .into_iter()
        .fold(ChernData::trivial(0), |acc, c| whitney_total(&acc, c))
}

/// `E ⊗ O_Q(k)` by the splitting principle: `c(E(k)) = Σ_i c_i(E)·(1 + kh)^{r−i}`.
///
/// For data whose Chern classes exceed the rank, negative exponents expand as
/// power series, which keeps this equal to [`tensor`] with a line bundle.
pub fn twist(c: &ChernData, k: i64) -> ChernData {
    let r = i64::from(c.rank);
    let base = ChowElement::from_ints(1, k, 0, 0);
    let pieces = [
        ChowElement::one(),
        ChowElement::h().scale(c.c1.into()),
        ChowElement::l().scale(c.c2.into()),
        ChowElement::p().scale(c.c3.into()),
    ];
    let total = pieces
        .iter()
        .enumerate()
        .fold(ChowElement::zero(), |acc, (i, ci)| {
            let pow = base.powi(r - i as i64).expect("1 + kh is a unit");
            acc + *ci * pow
        });
    ChernData::from_total(c.rank, &total).expect("twist of integral data is integral")
}

/// The twist formula exactly as printed in the source tables, including its
/// `c3` line `c3 + k(r−2)c2 + 2k²·C(r−1,2) + 2k³·C(r,3)`, which drops the
/// factor `c1` in the `k²` term. Only the report uses this.
pub fn twist_printed_formula(c: &ChernData, k: i64) -> ChernData {
    let r = i64::from(c.rank);
    let choose2 = |n: i64| n * (n - 1) / 2;
    let choose3 = |n: i64| n * (n - 1) * (n - 2) / 6;
    ChernData::new(
        c.rank,
        c.c1 + k * r,
        c.c2 + 2 * k * (r - 1) * c.c1 + 2 * k * k * choose2(r),
        c.c3 + k * (r - 2) * c.c2 + 2 * k * k * choose2(r - 1) + 2 * k * k * k * choose3(r),
    )
}

pub fn dual(c: &ChernData) -> ChernData {
    ChernData::new(c.rank, -c.c1, c.c2, -c.c3)
}

/// Tensor product through Chern characters: `ch(a ⊗ b) = ch(a)·ch(b)`.
pub fn tensor(a: &ChernData, b: &ChernData) -> Result<ChernData> {
    let ch = hrr::chern_character(a).to_chow() * hrr::chern_character(b).to_chow();
    hrr::chern_from_character(&hrr::ChernCharacter::from_chow(&ch))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn basis_products() {
        let h = ChowElement::h();
        assert_eq!(h * h, ChowElement::l().scale(2.into()));
        assert_eq!(h * ChowElement::l(), ChowElement::p());
        assert_eq!(ChowElement::l() * ChowElement::l(), ChowElement::zero());
        assert_eq!(h * ChowElement::p(), ChowElement::zero());
        assert_eq!(h * h * h, ChowElement::p().scale(2.into()));
    }

    #[test]
    fn spinor_plus_hyperplane_product() {
        let x = ChowElement::from_ints(1, 1, 0, 0);
        let y = ChowElement::from_ints(1, 1, 1, 0);
        assert_eq!(x * y, ChowElement::from_ints(1, 2, 3, 1));
    }

    #[test]
    fn total_chern_examples() {
        assert_eq!(total_chern(&ChernData::trivial(1)), ChowElement::one());
        assert_eq!(
            total_chern(&ChernData::new(2, 1, 1, 0)),
            ChowElement::from_ints(1, 1, 1, 0)
        );
        assert_eq!(
            total_chern(&ChernData::new(3, 2, 4, 4)),
            ChowElement::from_ints(1, 2, 4, 4)
        );
    }

    #[test]
    fn inverse_of_one_minus_h() {
        let x = ChowElement::from_ints(1, -1, 0, 0);
        assert_eq!(x.inverse().unwrap(), ChowElement::from_ints(1, 1, 2, 2));
        assert!(ChowElement::h().inverse().is_none());
        let y = ChowElement::new(q(2, 1), q(1, 3), q(-1, 2), q(5, 7));
        assert_eq!(y * y.inverse().unwrap(), ChowElement::one());
    }

    #[test]
    fn whitney_examples() {
        let a = whitney_third(&ChernData::line(-1), &ChernData::trivial(4)).unwrap();
        assert_eq!(a, ChernData::new(3, 1, 2, 2));
        let phi = whitney_third(&ChernData::line(-1), &ChernData::trivial(5)).unwrap();
        assert_eq!(phi, ChernData::new(4, 1, 2, 2));
        let ep = whitney_total(&ChernData::line(1), &ChernData::new(3, 1, 2, 2));
        assert_eq!(ep, ChernData::new(4, 2, 4, 4));
    }

    #[test]
    fn whitney_rejects_rank_and_integrality() {
        assert!(matches!(
            whitney_third(&ChernData::trivial(3), &ChernData::trivial(2)),
            Err(Error::RankMismatch { .. })
        ));
        // Integral inputs always give integral quotients; rational input is
        // where from_total has to refuse.
        let third = ChowElement::new(q(1, 1), q(1, 2), q(0, 1), q(0, 1));
        assert!(ChernData::from_total(2, &third).is_none());
    }

    #[test]
    fn twist_examples() {
        let a = ChernData::new(3, 1, 2, 2);
        assert_eq!(twist(&a, 1), ChernData::new(3, 4, 12, 8));
        assert_eq!(twist(&a, 0), a);
        for c2 in -20..=20 {
            assert_eq!(
                twist(&ChernData::new(2, -1, c2, 0), 1),
                ChernData::new(2, 1, c2, 0)
            );
        }
    }

    #[test]
    fn printed_c3_line_drops_c1_factor() {
        let c = ChernData::new(3, 2, 0, 0);
        assert_eq!(twist(&c, 1).c3, 6);
        assert_eq!(twist_printed_formula(&c, 1).c3, 4);
        // c1, c2 lines agree with the ring computation everywhere.
        for k in -3..=3 {
            let t = twist(&ChernData::new(5, 3, -2, 7), k);
            let p = twist_printed_formula(&ChernData::new(5, 3, -2, 7), k);
            assert_eq!((t.c1, t.c2), (p.c1, p.c2));
        }
    }

    #[test]
    fn dual_examples() {
        assert_eq!(
            dual(&ChernData::new(2, 1, 1, 0)),
            ChernData::new(2, -1, 1, 0)
        );
        assert_eq!(
            dual(&ChernData::new(2, 1, 1, 0)),
            twist(&ChernData::new(2, 1, 1, 0), -1)
        );
        assert_eq!(
            dual(&ChernData::new(3, 1, 2, 2)),
            ChernData::new(3, -1, 2, -2)
        );
    }

    #[test]
    fn tensor_with_trivial_line_is_identity() {
        let a = ChernData::new(4, 1, 2, 2);
        assert_eq!(tensor(&a, &ChernData::trivial(1)).unwrap(), a);
    }

    #[test]
    fn display_forms() {
        assert_eq!(
            ChowElement::from_ints(1, 2, 3, 1).to_string(),
            "1 + 2h + 3l + p"
        );
        assert_eq!(ChowElement::from_ints(0, -1, 0, 2).to_string(), "-h + 2p");
        assert_eq!(
            ChowElement::new(q(1, 1), q(3, 2), q(13, 6), q(1, 1)).to_string(),
            "1 + (3/2)h + (13/6)l + p"
        );
        assert_eq!(ChernData::new(3, 4, 12, 8).to_string(), "(3, 4, 12, 8)");
    }
}
