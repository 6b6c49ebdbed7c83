//! Bott's formula for `h^q(Ω^p_{P^n}(t))` and the tangent bundle of `P^n`.

use crate::error::{Error, Result};

/// Largest ambient dimension accepted.
pub const MAX_N: i64 = 6;

/// `h^q(Ω^p_{P^n}(t))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BottQuery {
    pub n: i64,
    pub p: i64,
    pub t: i64,
    pub q: i64,
}

impl BottQuery {
    pub const fn new(n: i64, p: i64, t: i64, q: i64) -> Self {
        Self { n, p, t, q }
    }

    fn validate(&self) -> Result<()> {
        if !(1..=MAX_N).contains(&self.n) {
            return Err(Error::IndexOutOfRange(format!(
                "n = {} not in [1, {MAX_N}]",
                self.n
            )));
        }
        if !(0..=self.n).contains(&self.p) || !(0..=self.n).contains(&self.q) {
            return Err(Error::IndexOutOfRange(format!(
                "p = {}, q = {} must lie in [0, {}]",
                self.p, self.q, self.n
            )));
        }
        Ok(())
    }
}

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as u64
}

pub fn bott(query: &BottQuery) -> Result<u64> {
    query.validate()?;
    let BottQuery { n, p, t, q } = *query;
    let value = if q == 0 && t > p {
        binomial(t + n - p, t) * binomial(t - 1, p)
    } else if q == n && t < p - n {
        binomial(-t + p, -t) * binomial(-t - 1, n - p)
    } else if q == p && t == 0 {
        1
    } else {
        0
    };
    Ok(value)
}

/// `h^q(TP^n(t))` through `TP^n ≅ Ω^{n−1}(n + 1)`.
pub fn tangent_coh(n: i64, t: i64, q: i64) -> Result<u64> {
    bott(&BottQuery::new(n, n - 1, t + n + 1, q))
}

/// `χ(O_{P^n}(t)) = (t+1)(t+2)…(t+n)/n!`, valid for every integer `t`.
pub fn chi_projective_line_bundle(n: i64, t: i64) -> i64 {
    let num: i128 = (1..=n).map(|i| i128::from(t + i)).product();
    let den: i128 = (1..=n).map(i128::from).product();
    (num / den) as i64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: i64, p: i64, t: i64, q: i64) -> u64 {
        bott(&BottQuery::new(n, p, t, q)).unwrap()
    }

    #[test]
    fn omega_p3_values() {
        assert_eq!(h(3, 1, 0, 1), 1);
        assert_eq!(h(3, 1, 2, 1), 0);
        assert_eq!(h(3, 1, 1, 1), 0);
    }

    #[test]
    fn tangent_p3_values() {
        assert_eq!(tangent_coh(3, 0, 0).unwrap(), 15);
        assert_eq!(tangent_coh(3, -1, 0).unwrap(), 4);
        assert_eq!(tangent_coh(3, -2, 1).unwrap(), 0);
        // TP⁴ has 24 sections (dim PGL₅).
        assert_eq!(tangent_coh(4, 0, 0).unwrap(), 24);
    }

    #[test]
    fn line_bundles_count_monomials() {
        for n in 1..=4 {
            for t in 0..=8 {
                assert_eq!(h(n, 0, t, 0), binomial(t + n, n));
            }
        }
    }

    #[test]
    fn rejects_bad_indices() {
        for q in [
            BottQuery::new(0, 0, 0, 0),
            BottQuery::new(7, 0, 0, 0),
            BottQuery::new(3, 4, 0, 0),
            BottQuery::new(3, 1, 0, -1),
        ] {
            assert!(matches!(bott(&q), Err(Error::IndexOutOfRange(_))));
        }
    }

    #[test]
    fn serre_duality_and_single_nonzero_degree() {
        for n in 1..=4 {
            for p in 0..=n {
                for t in -12..=12 {
                    let mut nonzero = 0;
                    for q in 0..=n {
                        assert_eq!(h(n, p, t, q), h(n, n - p, -t, n - q));
                        nonzero += usize::from(h(n, p, t, q) != 0);
                    }
                    assert!(nonzero <= 1);
                }
            }
        }
    }

    #[test]
    fn euler_sequence_characteristic() {
        for n in 1..=4 {
            for t in -12..=12 {
                let alt: i64 = (0..=n)
                    .map(|q| if q % 2 == 0 { 1 } else { -1 } * h(n, 1, t, q) as i64)
                    .sum();
                let expect = (n + 1) * chi_projective_line_bundle(n, t - 1)
                    - chi_projective_line_bundle(n, t);
                assert_eq!(alt, expect, "n = {n}, t = {t}");
            }
        }
    }
}
