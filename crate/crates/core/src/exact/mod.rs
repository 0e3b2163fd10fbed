//! Exact scalars, dense matrices and canonical subspaces over the rationals.
//!
//! Everything here is arbitrary precision; there is no floating point path.
//! Rationals serialize as `"num/den"` text, with the denominator omitted when
//! it is one (`"-3/2"`, `"7"`).

mod matrix;
mod subspace;

pub use matrix::{Matrix, Rref};
pub use subspace::Subspace;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar; always stored in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// A coordinate vector.
pub type Vector = Vec<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let parsed = match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad_rational(text))?;
            let d: BigInt = d.trim().parse().map_err(|_| bad_rational(text))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {text:?}")));
            }
            Rational::new(n, d)
        }
        None => Rational::from_integer(text.parse().map_err(|_| bad_rational(text))?),
    };
    Ok(parsed)
}

fn bad_rational(text: &str) -> Error {
    Error::Parse(format!("not a rational number: {text:?}"))
}

/// `num/den` text, `den` omitted when it is one.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn int_vector(values: &[i64]) -> Vector {
    values.iter().map(|&x| rat(x)).collect()
}

/// `acc += scale * v`
pub fn add_scaled(acc: &mut [Rational], scale: &Rational, v: &[Rational]) {
    debug_assert_eq!(acc.len(), v.len());
    if scale.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += scale * x;
        }
    }
}

/// Linear combination `Σ coeffs[i] * vectors[i]`.
pub fn combine(coeffs: &[Rational], vectors: &[Vector], len: usize) -> Vector {
    let mut out = zero_vector(len);
    for (c, v) in coeffs.iter().zip(vectors) {
        add_scaled(&mut out, c, v);
    }
    out
}

/// Serde adapter for a single rational as `"num/den"` text.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }
}

pub fn format_vector(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn parse_vector(v: &[String]) -> Result<Vector> {
    v.iter().map(|s| parse_rational(s)).collect()
}
