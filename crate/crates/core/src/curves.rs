//! Curve numerics: `c3` from the curve of a section, trisecant counts, the
//! `α` invariant and divisor classes on a quartic del Pezzo surface.

use std::fmt;

use num_integer::Roots;
use serde::Serialize;

use crate::error::{Error, Result};

/// A possibly disconnected curve, one `(degree, genus)` pair per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CurveData {
    components: Vec<(u32, u32)>,
}

impl CurveData {
    pub fn new(components: Vec<(u32, u32)>) -> Result<Self> {
        if components.is_empty() || components.iter().any(|&(d, _)| d == 0) {
            return Err(Error::IndexOutOfRange(format!(
                "curve components must be nonempty with positive degrees: {components:?}"
            )));
        }
        Ok(Self { components })
    }

    /// Smooth connected curve of degree `d` and genus `g`.
    pub fn connected(d: u32, g: u32) -> Self {
        Self::new(vec![(d, g)]).expect("positive degree")
    }

    pub fn two_conics() -> Self {
        Self::new(vec![(2, 0), (2, 0)]).expect("positive degrees")
    }

    pub fn components(&self) -> &[(u32, u32)] {
        &self.components
    }

    pub fn degree(&self) -> i64 {
        self.components.iter().map(|&(d, _)| i64::from(d)).sum()
    }

    /// `1 − #components + Σ gᵢ`.
    pub fn arithmetic_genus(&self) -> i64 {
        1 - self.components.len() as i64
            + self
                .components
                .iter()
                .map(|&(_, g)| i64::from(g))
                .sum::<i64>()
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }
}

impl fmt::Display for CurveData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(d, g)| format!("({d},{g})"))
            .collect();
        write!(f, "{}", parts.join(" ⊔ "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct C3FromCurve {
    pub c3: i64,
    /// Set when `c1 ∉ {1, 2}`, where the bundles were not classified.
    pub c1_out_of_range: bool,
}

/// `c3 = 2p_a − 2 + d(3 − c1)`.
pub fn c3_from_curve(curve: &CurveData, c1: i64) -> C3FromCurve {
    C3FromCurve {
        c3: 2 * curve.arithmetic_genus() - 2 + curve.degree() * (3 - c1),
        c1_out_of_range: !(1..=2).contains(&c1),
    }
}

/// `(d−2)(d−3)(d−4)/6 − g(d−4)`; negative means infinitely many trisecants.
pub fn trisecant(d: i64, g: i64) -> i64 {
    (d - 2) * (d - 3) * (d - 4) / 6 - g * (d - 4)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum TrisecantCount {
    Finite(i64),
    Infinite,
}

pub fn trisecant_count(d: i64, g: i64) -> TrisecantCount {
    match trisecant(d, g) {
        t if t < 0 => TrisecantCount::Infinite,
        t => TrisecantCount::Finite(t),
    }
}

/// `(3−c1)d + g − 3 ≤ α ≤ (3−c1)d + g − 1`.
pub fn alpha_bounds(curve: &CurveData, c1: i64) -> (i64, i64) {
    let base = (3 - c1) * curve.degree() + curve.arithmetic_genus();
    (base - 3, base - 1)
}

/// A curve type occurring for a globally generated rank-3 bundle, with the
/// number of trivial summands of that bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizedCurve {
    pub c1: i64,
    pub curve: CurveData,
    pub trivial_summands: u32,
}

pub fn realized_curves() -> Vec<RealizedCurve> {
    let r = |c1, curve, trivial_summands| RealizedCurve {
        c1,
        curve,
        trivial_summands,
    };
    vec![
        r(1, CurveData::connected(1, 0), 1),
        r(1, CurveData::connected(2, 0), 0),
        r(2, CurveData::connected(2, 0), 1),
        r(2, CurveData::connected(3, 0), 0),
        r(2, CurveData::two_conics(), 0),
        r(2, CurveData::connected(4, 0), 0),
        r(2, CurveData::connected(4, 1), 0),
        r(2, CurveData::connected(5, 1), 0),
        r(2, CurveData::connected(6, 2), 0),
        r(2, CurveData::connected(8, 5), 0),
    ]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Alpha {
    /// Exact value when the curve type is realized.
    pub value: Option<i64>,
    pub lower: i64,
    pub upper: i64,
}

/// `α = h¹(F^∨)` for the rank-3 quotient `F` attached to the curve.
///
/// By Serre duality and `0 → O² → F → I_C(c1) → 0`,
/// `α = h⁰(ω_C(3−c1)) − 2 + h⁰(F^∨)`, and for `3 − c1 > 0`
/// `h⁰(ω_C(3−c1)) = Σᵢ (gᵢ − 1 + (3−c1)dᵢ)`.
pub fn alpha(curve: &CurveData, c1: i64) -> Alpha {
    let (lower, upper) = alpha_bounds(curve, c1);
    let value = realized_curves()
        .into_iter()
        .find(|r| r.c1 == c1 && &r.curve == curve)
        .map(|r| {
            let m = 3 - c1;
            let sections: i64 = curve
                .components()
                .iter()
                .map(|&(d, g)| i64::from(g) - 1 + m * i64::from(d))
                .sum();
            sections - 2 + i64::from(r.trivial_summands)
        });
    Alpha {
        value,
        lower,
        upper,
    }
}

/// Class `a·ℓ − Σ bᵢ·eᵢ` on the blow-up of `P²` at five points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DelPezzoClass {
    pub a: i64,
    pub b: [i64; 5],
}

impl DelPezzoClass {
    pub fn degree(&self) -> i64 {
        3 * self.a - self.b.iter().sum::<i64>()
    }

    pub fn self_intersection(&self) -> i64 {
        self.a * self.a - self.b.iter().map(|x| x * x).sum::<i64>()
    }

    /// Weakly decreasing non-negative `b`, `a > 0`, `a ≥ b1 + b2 + b3`.
    pub fn is_normalized(&self) -> bool {
        self.a > 0
            && self.b[4] >= 0
            && self.b.windows(2).all(|w| w[0] >= w[1])
            && self.a >= self.b[0] + self.b[1] + self.b[2]
    }

    /// Extra conditions used when the class is the curve of a genus-`g`
    /// smooth connected curve: the plane model needs degree with
    /// `(a−1)(a−2)/2 ≥ g`, the curve is not a plane curve (`b1 > 0`), a
    /// point of multiplicity `a − 1` would make it rational, and
    /// `2a > Σ bᵢ`.
    pub fn passes_curve_filter(&self, g: i64) -> bool {
        let plane_genus = (self.a - 1) * (self.a - 2) / 2;
        plane_genus >= g
            && self.b[0] > 0
            && (g == 0 || self.b[0] <= self.a - 2)
            && 2 * self.a > self.b.iter().sum::<i64>()
    }
}

impl fmt::Display for DelPezzoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.b;
        write!(
            f,
            "({};{},{},{},{},{})",
            self.a, b[0], b[1], b[2], b[3], b[4]
        )
    }
}

/// Every normalized class with `d = 3a − Σbᵢ` and `a² = (2g − 2 + d) + Σbᵢ²`,
/// in lexicographic order.
///
/// Bound on `a`: with `S = Σbᵢ = 3a − d` and `Σbᵢ² = a² − K`, `K = 2g−2+d`,
/// Cauchy–Schwarz `S² ≤ 5Σbᵢ²` gives `4a² − 6ad + d² + 5K ≤ 0`, so
/// `a ≤ (3d + √(5d² − 20K))/4`.
pub fn delpezzo_classes(d: i64, g: i64) -> Vec<DelPezzoClass> {
    let k = 2 * g - 2 + d;
    let disc = 5 * d * d - 20 * k;
    if disc < 0 {
        return Vec::new();
    }
    let a_max = (3 * d + disc.sqrt()) / 4;
    let mut out = Vec::new();
    for a in 1..=a_max {
        let sum = 3 * a - d;
        let squares = a * a - k;
        if sum < 0 || squares < 0 {
            continue;
        }
        let mut b = [0i64; 5];
        fill_b(a, 0, sum, squares, squares.sqrt(), &mut b, &mut out);
    }
    out.sort();
    out
}

/// Place `b[i..]` weakly decreasing, each at most `cap`, with the given
/// remaining sum and sum of squares.
fn fill_b(
    a: i64,
    i: usize,
    sum: i64,
    squares: i64,
    cap: i64,
    b: &mut [i64; 5],
    out: &mut Vec<DelPezzoClass>,
) {
    if i == 5 {
        if sum == 0 && squares == 0 {
            let class = DelPezzoClass { a, b: *b };
            if class.is_normalized() {
                out.push(class);
            }
        }
        return;
    }
    let slots = (5 - i) as i64;
    // Largest entry first; the rest can absorb at most slots−1 copies of it.
    for v in (0..=cap.min(sum)).rev() {
        if v * slots < sum || v * v > squares {
            continue;
        }
        b[i] = v;
        fill_b(a, i + 1, sum - v, squares - v * v, v, b, out);
    }
}

/// [`delpezzo_classes`] restricted by [`DelPezzoClass::passes_curve_filter`].
pub fn delpezzo_classes_filtered(d: i64, g: i64) -> Vec<DelPezzoClass> {
    delpezzo_classes(d, g)
        .into_iter()
        .filter(|c| c.passes_curve_filter(g))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c3_examples() {
        assert_eq!(c3_from_curve(&CurveData::connected(4, 0), 2).c3, 2);
        assert_eq!(c3_from_curve(&CurveData::two_conics(), 2).c3, 0);
        assert_eq!(c3_from_curve(&CurveData::connected(8, 5), 2).c3, 16);
        assert!(c3_from_curve(&CurveData::connected(1, 0), 3).c1_out_of_range);
    }

    #[test]
    fn trisecant_examples() {
        assert_eq!(trisecant(5, 0), 1);
        assert_eq!(trisecant(6, 0), 4);
        assert_eq!(trisecant(6, 1), 2);
        assert_eq!(trisecant(7, 3), 1);
        assert_eq!(trisecant(4, 0), 0);
        assert_eq!(trisecant(5, 1), 0);
        assert_eq!(trisecant(6, 2), 0);
        assert_eq!(trisecant(8, 5), 0);
        assert_eq!(trisecant_count(7, 4), TrisecantCount::Infinite);
    }

    #[test]
    fn alpha_examples() {
        let cases = [
            (CurveData::two_conics(), 0),
            (CurveData::connected(4, 0), 1),
            (CurveData::connected(5, 1), 3),
            (CurveData::connected(6, 2), 5),
            (CurveData::connected(8, 5), 10),
        ];
        for (curve, expect) in cases {
            let a = alpha(&curve, 2);
            assert_eq!(a.value, Some(expect), "{curve}");
            assert!(a.lower <= expect && expect <= a.upper);
        }
        let unknown = alpha(&CurveData::connected(7, 3), 2);
        assert_eq!(unknown.value, None);
        assert_eq!((unknown.lower, unknown.upper), (7, 9));
    }

    #[test]
    fn alpha_within_bounds_for_every_realized_curve() {
        for r in realized_curves() {
            let a = alpha(&r.curve, r.c1);
            let v = a.value.unwrap();
            assert!(a.lower <= v && v <= a.upper, "{} c1={}", r.curve, r.c1);
        }
    }

    #[test]
    fn delpezzo_elliptic_quintic() {
        let got = delpezzo_classes(5, 1);
        assert_eq!(
            got,
            vec![DelPezzoClass {
                a: 3,
                b: [1, 1, 1, 1, 0]
            }]
        );
    }

    #[test]
    fn delpezzo_genus_two_sextic() {
        let got = delpezzo_classes(6, 2);
        assert_eq!(
            got,
            vec![DelPezzoClass {
                a: 4,
                b: [2, 1, 1, 1, 1]
            }]
        );
        // Satisfies both equations but not a ≥ b1 + b2 + b3.
        let other = DelPezzoClass {
            a: 5,
            b: [2, 2, 2, 2, 1],
        };
        assert_eq!(other.degree(), 6);
        assert_eq!(other.self_intersection(), 2 * 2 - 2 + 6);
        assert!(!other.is_normalized());
    }

    #[test]
    fn delpezzo_degree_one() {
        // (1;1,1,0,0,0) solves both equations but has a < b1 + b2 + b3.
        let c = DelPezzoClass {
            a: 1,
            b: [1, 1, 0, 0, 0],
        };
        assert_eq!((c.degree(), c.self_intersection()), (1, -1));
        assert!(!c.is_normalized());
        assert!(delpezzo_classes(1, 0).is_empty());
    }

    #[test]
    fn filter_keeps_the_curve_classes() {
        assert_eq!(delpezzo_classes_filtered(5, 1), delpezzo_classes(5, 1));
        assert_eq!(delpezzo_classes_filtered(6, 2), delpezzo_classes(6, 2));
    }

    #[test]
    fn rejects_empty_curve() {
        assert!(CurveData::new(vec![]).is_err());
        assert!(CurveData::new(vec![(0, 1)]).is_err());
    }
}
