//! Dense integer-coefficient polynomials with exact arithmetic.
//!
//! Coefficient index is the degree, so an independence polynomial stores
//! `s_k` at position `k`. Everything here is over `BigInt`; evaluation
//! takes and returns exact rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    /// Build from coefficients (index = degree); trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Polynomial::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; −1 for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Polynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Polynomial::new(coeffs)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn sub_const(&self, c: &BigInt) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(-c);
        } else {
            coeffs[0] -= c;
        }
        Polynomial::new(coeffs)
    }

    /// `(1 + x)^k` with binomial coefficients computed incrementally.
    pub fn binomial_power(k: usize) -> Polynomial {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut c = BigInt::one();
        for i in 0..=k {
            coeffs.push(c.clone());
            if i < k {
                c = c * BigInt::from(k - i) / BigInt::from(i + 1);
            }
        }
        Polynomial::new(coeffs)
    }

    /// Exact Horner evaluation at a rational point.
    pub fn evaluate(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Evaluation at an integer point.
    pub fn evaluate_int(&self, t: i64) -> BigInt {
        let t = BigInt::from(t);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &t + c;
        }
        acc
    }

    /// Unimodality of the coefficient sequence; returns a mode index when
    /// unimodal. Plateaus are fine; only a strict rise after a strict fall
    /// disqualifies.
    pub fn unimodal_mode(&self) -> Result<Option<usize>, Error> {
        self.require_nonnegative()?;
        if self.coeffs.is_empty() {
            return Ok(Some(0));
        }
        let mut falling = false;
        let mut mode = 0;
        for i in 1..self.coeffs.len() {
            match self.coeffs[i].cmp(&self.coeffs[i - 1]) {
                std::cmp::Ordering::Greater => {
                    if falling {
                        return Ok(None);
                    }
                    mode = i;
                }
                std::cmp::Ordering::Less => falling = true,
                std::cmp::Ordering::Equal => {}
            }
        }
        Ok(Some(mode))
    }

    pub fn is_unimodal(&self) -> Result<bool, Error> {
        Ok(self.unimodal_mode()?.is_some())
    }

    /// `a_i^2 >= a_{i-1} * a_{i+1}` at every interior index.
    pub fn is_log_concave(&self) -> Result<bool, Error> {
        self.require_nonnegative()?;
        for i in 1..self.coeffs.len().saturating_sub(1) {
            if &self.coeffs[i] * &self.coeffs[i] < &self.coeffs[i - 1] * &self.coeffs[i + 1] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn require_nonnegative(&self) -> Result<(), Error> {
        for (index, c) in self.coeffs.iter().enumerate() {
            if c.is_negative() {
                return Err(Error::NegativeCoefficient { index });
            }
        }
        Ok(())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        Polynomial::new(coeffs)
    }

    /// Coefficients as decimal strings, for structured-record output.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for Polynomial {
    /// Lowest degree first: `1 + 3x + x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && !(k == 0 && self.coeffs.len() == 1) {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
