//! Dense exact-integer polynomial arithmetic and cyclotomic polynomials.
//!
//! Coefficients are `i64` and every operation detects overflow instead of
//! wrapping: internal accumulation runs in `i128` and results are narrowed
//! back with a checked conversion. Division is supported for divisors whose
//! leading coefficient is a unit, which covers everything needed here
//! (cyclotomic polynomials and semigroup polynomials are monic).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith;
use crate::error::{Error, Result};

/// A polynomial with exact `i64` coefficients, index = exponent.
///
/// Canonical form: no trailing zero coefficients; the zero polynomial is the
/// empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![1] }
    }

    /// Builds a polynomial from coefficients (index = exponent), trimming
    /// trailing zeros.
    pub fn from_coeffs(coeffs: impl Into<Vec<i64>>) -> Self {
        let mut coeffs = coeffs.into();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// The monomial `c * x^k` (zero polynomial if `c == 0`).
    pub fn monomial(c: i64, k: usize) -> Self {
        if c == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![0i64; n + 1];
        coeffs[0] = -1;
        coeffs[n] = 1;
        IntPoly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading_coeff(&self) -> Option<i64> {
        self.coeffs.last().copied()
    }

    /// Exact evaluation at an integer point.
    pub fn eval(&self, x: i64) -> Result<i64> {
        let mut acc: i128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(x as i128).ok_or(Error::Overflow)?;
            acc = acc.checked_add(c as i128).ok_or(Error::Overflow)?;
        }
        narrow(acc)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0i64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self
                .coeff(i)
                .checked_add(other.coeff(i))
                .ok_or(Error::Overflow)?;
        }
        Ok(IntPoly::from_coeffs(out))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0i64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self
                .coeff(i)
                .checked_sub(other.coeff(i))
                .ok_or(Error::Overflow)?;
        }
        Ok(IntPoly::from_coeffs(out))
    }

    /// Exact product; schoolbook multiplication with `i128` accumulators.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPoly::zero());
        }
        let mut acc = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let slot = &mut acc[i + j];
                *slot = slot
                    .checked_add(a as i128 * b as i128)
                    .ok_or(Error::Overflow)?;
            }
        }
        let mut out = Vec::with_capacity(acc.len());
        for v in acc {
            out.push(narrow(v)?);
        }
        Ok(IntPoly::from_coeffs(out))
    }

    /// Division with remainder by a divisor whose leading coefficient is
    /// `+1` or `-1`: returns `(q, r)` with `self = q * g + r` and
    /// `deg r < deg g`, all exact.
    pub fn div_rem(&self, g: &Self) -> Result<(Self, Self)> {
        let lead = match g.leading_coeff() {
            None => return Err(Error::Domain("division by the zero polynomial")),
            Some(c) if c == 1 || c == -1 => c,
            Some(_) => {
                return Err(Error::Domain(
                    "divisor must have leading coefficient 1 or -1",
                ))
            }
        };
        let n = self.coeffs.len();
        let m = g.coeffs.len();
        if n < m {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut work: Vec<i128> = self.coeffs.iter().map(|&c| c as i128).collect();
        let mut quot = vec![0i128; n - m + 1];
        for i in (0..=n - m).rev() {
            let q = work[i + m - 1] * lead as i128; // lead is a unit
            if q != 0 {
                quot[i] = q;
                for (j, &gj) in g.coeffs.iter().enumerate() {
                    if gj == 0 {
                        continue;
                    }
                    let slot = &mut work[i + j];
                    *slot = slot
                        .checked_sub(q.checked_mul(gj as i128).ok_or(Error::Overflow)?)
                        .ok_or(Error::Overflow)?;
                }
            }
        }
        debug_assert!(work[m - 1..].iter().all(|&c| c == 0));
        let mut q_out = Vec::with_capacity(quot.len());
        for v in quot {
            q_out.push(narrow(v)?);
        }
        let mut r_out = Vec::with_capacity(m - 1);
        for &v in &work[..m - 1] {
            r_out.push(narrow(v)?);
        }
        Ok((IntPoly::from_coeffs(q_out), IntPoly::from_coeffs(r_out)))
    }

    /// Substitution `x -> x^r`, i.e. returns `f(x^r)`. Requires `r >= 1`.
    pub fn compose_power(&self, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::Domain("substitution exponent must be at least 1"));
        }
        if r == 1 || self.is_zero() {
            return Ok(self.clone());
        }
        let deg = self.coeffs.len() - 1;
        let new_len = deg
            .checked_mul(r)
            .and_then(|d| d.checked_add(1))
            .ok_or(Error::Overflow)?;
        let mut out = vec![0i64; new_len];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i * r] = c;
        }
        Ok(IntPoly { coeffs: out })
    }

    /// Whether the coefficient sequence is its own reverse. The zero
    /// polynomial is rejected.
    pub fn is_palindromic(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::Domain("palindromy is undefined for the zero polynomial"));
        }
        let c = &self.coeffs;
        Ok((0..c.len() / 2).all(|i| c[i] == c[c.len() - 1 - i]))
    }
}

/// Renders like `1 - x + x^2`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "x")?,
                (1, m) => write!(f, "{m}x")?,
                (_, 1) => write!(f, "x^{k}")?,
                (_, m) => write!(f, "{m}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The n-th cyclotomic polynomial, computed by Möbius inversion of
/// `x^n - 1 = prod_{d|n} Phi_d`: multiply the factors `x^d - 1` with
/// `mu(n/d) = 1`, then divide out those with `mu(n/d) = -1`.
///
/// Each intermediate division is exact (the remaining numerator always
/// carries every cyclotomic factor of the divisor), so the remainder is
/// asserted to vanish.
pub fn cyclotomic(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::Domain("cyclotomic index must be a positive integer"));
    }
    if n == 1 {
        return Ok(IntPoly::from_coeffs(vec![-1, 1]));
    }
    let mut numerator: Vec<usize> = Vec::new();
    let mut denominator: Vec<usize> = Vec::new();
    for d in arith::divisors(n)? {
        match arith::mobius(n / d)? {
            1 => numerator.push(d as usize),
            -1 => denominator.push(d as usize),
            _ => {}
        }
    }
    let mut poly = IntPoly::one();
    for d in numerator {
        poly = poly.mul(&IntPoly::x_pow_minus_one(d))?;
    }
    for d in denominator {
        let (q, r) = poly.div_rem(&IntPoly::x_pow_minus_one(d))?;
        if !r.is_zero() {
            unreachable!("Mobius-inversion division must be exact");
        }
        poly = q;
    }
    debug_assert_eq!(poly.degree(), Some(arith::totient(n)? as usize));
    Ok(poly)
}
