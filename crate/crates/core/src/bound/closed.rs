//! Closed-form lower bounds from the real relaxation of the integer program.
//!
//! Every bound has the shape `√A − c·√B` with nonnegative rationals `A, B, c`,
//! which lets ceilings and comparisons be decided exactly: floats are only
//! used for display and as a starting guess.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{rat, ratio, Rational};

/// The real number `√radicand − coeff·√inner`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    radicand: Rational,
    coeff: Rational,
    inner: Rational,
}

/// Sign of `P + Q√R` for `R ≥ 0`.
fn sign_with_root(p: &Rational, q: &Rational, r: &Rational) -> Ordering {
    let zero = Rational::zero();
    if q.is_zero() || r.is_zero() {
        return p.cmp(&zero);
    }
    let p_sign = p.cmp(&zero);
    let q_sign = q.cmp(&zero);
    if p_sign != Ordering::Less && q_sign == Ordering::Greater {
        return Ordering::Greater;
    }
    if p_sign != Ordering::Greater && q_sign == Ordering::Less {
        return Ordering::Less;
    }
    // Opposite signs: compare magnitudes P² and Q²R.
    let lhs = p * p;
    let rhs = q * q * r;
    match lhs.cmp(&rhs) {
        Ordering::Equal => Ordering::Equal,
        Ordering::Greater => p_sign,
        Ordering::Less => q_sign,
    }
}

impl Surd {
    pub fn sqrt(radicand: Rational) -> Self {
        Surd {
            radicand,
            coeff: Rational::zero(),
            inner: Rational::zero(),
        }
    }

    pub fn sqrt_minus(radicand: Rational, coeff: Rational, inner: Rational) -> Self {
        Surd {
            radicand,
            coeff,
            inner,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let f = |q: &Rational| q.to_f64().unwrap_or(f64::NAN);
        f(&self.radicand).sqrt() - f(&self.coeff) * f(&self.inner).sqrt()
    }

    /// Exact test `s ≥ self` for an integer `s ≥ 0`.
    pub fn le_integer(&self, s: u64) -> bool {
        // s + c√B ≥ √A, both sides nonnegative, so square:
        // s² + c²B − A + 2sc·√B ≥ 0
        let s = Rational::from_integer(BigInt::from(s));
        let p = &s * &s + &self.coeff * &self.coeff * &self.inner - &self.radicand;
        let q = rat(2) * &s * &self.coeff;
        sign_with_root(&p, &q, &self.inner) != Ordering::Less
    }

    /// Smallest integer `s ≥ 0` with `s ≥ self`, decided exactly.
    pub fn ceil(&self) -> u64 {
        let guess = self.to_f64();
        let mut s = if guess.is_finite() && guess > 2.0 {
            guess.ceil() as u64 - 2
        } else {
            0
        };
        while !self.le_integer(s) {
            s += 1;
        }
        while s > 0 && self.le_integer(s - 1) {
            s -= 1;
        }
        s
    }

    /// Exact comparison against `√other`.
    pub fn cmp_sqrt(&self, other: &Rational) -> Ordering {
        // √A − c√B vs √C  ⇔  √A vs √C + c√B  ⇔  A − C − c²B vs 2c√(BC)
        let p = &self.radicand - other - &self.coeff * &self.coeff * &self.inner;
        let q = rat(-2) * &self.coeff;
        let r = &self.inner * other;
        sign_with_root(&p, &q, &r)
    }

    /// Decimal text with six digits after the point.
    pub fn decimal(&self) -> String {
        format!("{:.6}", self.to_f64())
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeff.is_zero() || self.inner.is_zero() {
            write!(f, "sqrt({})", self.radicand)
        } else {
            write!(f, "sqrt({}) - {}*sqrt({})", self.radicand, self.coeff, self.inner)
        }
    }
}

/// Which formula produced the second bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SecondCase {
    /// `n_1 ≥ ((p0−1)² + p0²)·n_{p0}`.
    Case1,
    /// The complementary case for `p0 ≥ 3`.
    Case2,
    /// The complementary case for `p0 = 2`.
    P0Equals2,
}

impl SecondCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            SecondCase::Case1 => "case1",
            SecondCase::Case2 => "case2",
            SecondCase::P0Equals2 => "p0_equals_2",
        }
    }
}

/// `√(2(p0+1)/p0 · n_1)`.
pub fn closed_bound_first(p0: usize, n1: u64) -> Result<Surd> {
    if p0 == 0 || n1 == 0 {
        return Err(Error::InvalidParameter(format!(
            "first closed bound needs p0 ≥ 1 and n1 ≥ 1, got p0 = {p0}, n1 = {n1}"
        )));
    }
    let p0 = p0 as i64;
    Ok(Surd::sqrt(ratio(2 * (p0 + 1), p0) * rat(n1 as i64)))
}

/// Two-case bound in terms of `n_1` and `n_{p0}`; needs `p0 ≥ 2`.
pub fn closed_bound_second(p0: usize, n1: u64, np0: u64) -> Result<(Surd, SecondCase)> {
    if p0 < 2 {
        return Err(Error::InvalidParameter(format!(
            "second closed bound needs p0 ≥ 2, got {p0}"
        )));
    }
    if np0 == 0 || n1 < np0 {
        return Err(Error::InvalidParameter(format!(
            "second closed bound needs n1 ≥ n_p0 ≥ 1, got n1 = {n1}, n_p0 = {np0}"
        )));
    }
    let q = p0 as i64;
    let n1 = rat(n1 as i64);
    let np0 = rat(np0 as i64);
    let threshold = rat((q - 1) * (q - 1) + q * q) * &np0;
    if n1 >= threshold {
        let radicand = ratio(2 * q, q - 1) * (&n1 - &np0);
        return Ok((Surd::sqrt(radicand), SecondCase::Case1));
    }
    if q == 2 {
        // (n1 + 3 n2) / (2 √n2) = √((n1 + 3 n2)² / (4 n2))
        let num = &n1 + rat(3) * &np0;
        let radicand = &num * &num / (rat(4) * &np0);
        return Ok((Surd::sqrt(radicand), SecondCase::P0Equals2));
    }
    let radicand = ratio(2 * (q - 1), q - 2) * &n1 + ratio(2 * q * (q - 1), (q - 2) * (q - 2)) * &np0;
    let coeff = ratio(2, q - 2);
    Ok((Surd::sqrt_minus(radicand, coeff, np0), SecondCase::Case2))
}

/// Bound from the nilpotency step `p ≥ 2`, `dim n` and `dim z(n)`; the same
/// formula as [`closed_bound_second`] with `p0 = p`.
pub fn theorem_mainbound(p: usize, dim_n: u64, dim_z: u64) -> Result<(Surd, SecondCase)> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("needs step p ≥ 2, got {p}")));
    }
    closed_bound_second(p, dim_n, dim_z)
}

/// Both closed forms for one `(p0, n_1, n_{p0})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedBounds {
    pub first: Surd,
    pub second: Option<(Surd, SecondCase)>,
}

impl ClosedBounds {
    pub fn compute(p0: usize, n1: u64, np0: u64) -> Result<Self> {
        let first = closed_bound_first(p0, n1)?;
        let second = if p0 >= 2 {
            Some(closed_bound_second(p0, n1, np0)?)
        } else {
            None
        };
        Ok(ClosedBounds { first, second })
    }

    /// `second ≥ first`, decided exactly; vacuous when there is no second bound.
    pub fn second_dominates(&self) -> bool {
        match &self.second {
            Some((s, _)) => s.cmp_sqrt(self.first.radicand()) != Ordering::Less,
            None => true,
        }
    }

    /// The larger ceiling of the two.
    pub fn best_ceil(&self) -> u64 {
        let first = self.first.ceil();
        self.second.as_ref().map_or(first, |(s, _)| s.ceil().max(first))
    }
}

/// Smallest integer `s` with `s² ≥ q` for a nonnegative rational `q`.
pub fn ceil_sqrt(q: &Rational) -> u64 {
    debug_assert!(!q.is_negative());
    Surd::sqrt(q.clone()).ceil()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn first_bound_examples() {
        assert!(close(closed_bound_first(2, 3).unwrap().to_f64(), 3.0));
        assert!(close(closed_bound_first(1, 4).unwrap().to_f64(), 4.0));
        assert!(close(closed_bound_first(3, 6).unwrap().to_f64(), 4.0));
        assert_eq!(closed_bound_first(3, 6).unwrap().ceil(), 4);
        assert!(closed_bound_first(0, 6).is_err());
    }

    #[test]
    fn second_bound_examples() {
        let (s, case) = closed_bound_second(2, 9, 4).unwrap();
        assert_eq!(case, SecondCase::P0Equals2);
        assert!(close(s.to_f64(), 5.25));
        assert_eq!(s.ceil(), 6);

        let (s, case) = closed_bound_second(2, 5, 1).unwrap();
        assert_eq!(case, SecondCase::Case1);
        assert!(close(s.to_f64(), 4.0));
        assert_eq!(s.ceil(), 4);

        let (s, case) = closed_bound_second(3, 26, 1).unwrap();
        assert_eq!(case, SecondCase::Case1);
        assert!(close(s.to_f64(), 75f64.sqrt()));
        assert_eq!(s.ceil(), 9);

        assert!(closed_bound_second(1, 5, 1).is_err());
        assert!(closed_bound_second(2, 1, 2).is_err());
    }

    #[test]
    fn mainbound_spot_values() {
        let (s, case) = theorem_mainbound(2, 5, 1).unwrap();
        assert_eq!((s.ceil(), case), (4, SecondCase::Case1));
        assert!(s.le_integer(4) && !s.le_integer(3));

        let (s, case) = theorem_mainbound(2, 16, 4).unwrap();
        assert_eq!((s.ceil(), case), (7, SecondCase::P0Equals2));
        assert!(close(s.to_f64(), 7.0));

        // √36 − 2 = 4 exactly
        let (s, case) = theorem_mainbound(3, 6, 1).unwrap();
        assert_eq!((s.ceil(), case), (4, SecondCase::Case2));
        assert!(s.le_integer(4) && !s.le_integer(3));

        assert!(theorem_mainbound(1, 4, 1).is_err());
    }

    #[test]
    fn exact_ceiling_at_perfect_squares() {
        for k in 1..40u64 {
            assert_eq!(ceil_sqrt(&rat((k * k) as i64)), k);
            assert_eq!(ceil_sqrt(&rat((k * k + 1) as i64)), k + 1);
            if k > 1 {
                assert_eq!(ceil_sqrt(&rat((k * k - 1) as i64)), k);
            }
        }
        assert_eq!(ceil_sqrt(&ratio(1, 4)), 1);
        assert_eq!(ceil_sqrt(&rat(0)), 0);
    }

    #[test]
    fn boundary_cases_coincide() {
        // At n1 = ((p0-1)² + p0²) n_{p0} both branches give the same value.
        for p0 in 2..6usize {
            for np0 in 1..5u64 {
                let t = (((p0 - 1) * (p0 - 1) + p0 * p0) as u64) * np0;
                let (on, case_on) = closed_bound_second(p0, t, np0).unwrap();
                assert_eq!(case_on, SecondCase::Case1);
                let q = p0 as i64;
                let n1 = rat(t as i64);
                let np = rat(np0 as i64);
                let other = if p0 == 2 {
                    let num = &n1 + rat(3) * &np;
                    Surd::sqrt(&num * &num / (rat(4) * &np))
                } else {
                    Surd::sqrt_minus(
                        ratio(2 * (q - 1), q - 2) * &n1 + ratio(2 * q * (q - 1), (q - 2) * (q - 2)) * &np,
                        ratio(2, q - 2),
                        np.clone(),
                    )
                };
                assert!(close(on.to_f64(), other.to_f64()), "p0={p0} np0={np0}");
                assert_eq!(on.ceil(), other.ceil());
            }
        }
    }

    #[test]
    fn sign_helper() {
        let r = |x: i64| rat(x);
        assert_eq!(sign_with_root(&r(3), &r(-1), &r(9)), Ordering::Equal);
        assert_eq!(sign_with_root(&r(3), &r(-1), &r(8)), Ordering::Greater);
        assert_eq!(sign_with_root(&r(-3), &r(1), &r(10)), Ordering::Greater);
        assert_eq!(sign_with_root(&r(-3), &r(1), &r(8)), Ordering::Less);
        assert_eq!(sign_with_root(&r(0), &r(0), &r(8)), Ordering::Equal);
        assert_eq!(sign_with_root(&r(0), &r(-2), &r(8)), Ordering::Less);
    }

    #[test]
    fn dominance_at_boundary_is_exact() {
        // p0 = 2, n1 = 4 n2: case2 value (7n2)/(2√n2) vs first √(3·4 n2)
        let b = ClosedBounds::compute(2, 8, 2).unwrap();
        assert!(b.second_dominates());
        // Case1 with p0 = 2 and n1 = 5 n2: √(16 n2) vs √(15 n2)
        let b = ClosedBounds::compute(2, 5, 1).unwrap();
        assert!(b.second_dominates());
        assert!(ClosedBounds::compute(1, 5, 5).unwrap().second.is_none());
    }
}
