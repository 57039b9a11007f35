//! Semigroup polynomials, cyclotomicity, polynomial length and cyclotomic
//! exponent sequences.
//!
//! The semigroup polynomial of S is `P_S(x) = (1 - x) H_S(x)`, a polynomial
//! of degree `F(S) + 1` with coefficients in `{-1, 0, 1}`. S is *cyclotomic*
//! when `P_S` is a product of cyclotomic polynomials; the *polynomial
//! length* of S is then the number of factors counted with multiplicity.
//!
//! Factoring out the cyclotomic part is done by trial division against a
//! precomputed table of all `Phi_d` that could possibly divide: any divisor
//! `Phi_d` of a degree-n polynomial has `phi(d) <= n`, and
//! `phi(d) >= sqrt(d/2)` bounds the candidates by `d <= 2 n^2`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, Result};
use crate::polynomials::{self, IntPoly};
use crate::semigroup::NumericalSemigroup;

/// Largest polynomial degree the trial-division table will serve. The sieve
/// behind the table is quadratic in this figure, so it is capped.
pub const TABLE_DEGREE_CAP: usize = 2048;

/// `P_S(x) = 1 + (x - 1) sum_{g gap} x^g`: the coefficient of `x^k` for
/// `k >= 1` is `[k-1 is a gap] - [k is a gap]`, and the constant term is 1.
pub fn semigroup_polynomial(s: &NumericalSemigroup) -> IntPoly {
    if s.is_nat() {
        return IntPoly::one();
    }
    let f = s.frobenius() as usize;
    let is_gap = |k: usize| k <= f && !s.contains(k as u64);
    let mut coeffs = vec![0i64; f + 2];
    coeffs[0] = 1;
    for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = i64::from(is_gap(k - 1)) - i64::from(is_gap(k));
    }
    let p = IntPoly::from_coeffs(coeffs);
    debug_assert_eq!(p.degree(), Some(f + 1));
    p
}

/// Truncation of the Hilbert series numerator: `sum_{s in S, s <= bound} x^s`.
pub fn hilbert_numerator_truncated(s: &NumericalSemigroup, bound: usize) -> IntPoly {
    let coeffs: Vec<i64> = (0..=bound).map(|n| i64::from(s.contains(n as u64))).collect();
    IntPoly::from_coeffs(coeffs)
}

/// Factorization of a polynomial into cyclotomic factors `Phi_d^{f_d}`
/// (for `d >= 2`, sorted by `d`) and a remainder with no such factors left.
/// The polynomial is a product of cyclotomics exactly when the remainder
/// is 1. A `Phi_1` factor, if present, stays in the remainder; it cannot
/// divide a semigroup polynomial since `P_S(1) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloFactorization {
    factors: Vec<(u64, u32)>,
    remainder: IntPoly,
}

impl CycloFactorization {
    /// `(d, multiplicity)` pairs, ascending in `d`.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn remainder(&self) -> &IntPoly {
        &self.remainder
    }

    pub fn is_cyclotomic(&self) -> bool {
        self.remainder.is_one()
    }

    /// Total number of factors with multiplicity, when fully cyclotomic.
    pub fn length(&self) -> Option<u64> {
        if self.is_cyclotomic() {
            Some(self.factors.iter().map(|&(_, m)| u64::from(m)).sum())
        } else {
            None
        }
    }

    /// Multiplies everything back together; used to cross-check exactness.
    pub fn reconstruct(&self) -> Result<IntPoly> {
        let mut acc = self.remainder.clone();
        for &(d, mult) in &self.factors {
            let phi = polynomials::cyclotomic(d)?;
            for _ in 0..mult {
                acc = acc.mul(&phi)?;
            }
        }
        Ok(acc)
    }
}

struct TableEntry {
    d: u64,
    degree: usize,
    coeffs: Vec<i64>,
}

/// Precomputed table of every cyclotomic polynomial that can divide a
/// polynomial of degree up to `max_degree`. Build it once and reuse it when
/// factoring many polynomials of similar size.
pub struct CycloTable {
    max_degree: usize,
    entries: Vec<TableEntry>,
}

impl CycloTable {
    pub fn with_max_degree(max_degree: usize) -> Result<Self> {
        if max_degree > TABLE_DEGREE_CAP {
            return Err(Error::Domain("polynomial degree exceeds the trial-division cap"));
        }
        let d_max = (2 * max_degree * max_degree).max(2);
        let phi = totient_sieve(d_max);
        let mut entries = Vec::new();
        for (d, &phi_d) in phi.iter().enumerate().skip(2) {
            if (phi_d as usize) <= max_degree {
                let poly = polynomials::cyclotomic(d as u64)?;
                entries.push(TableEntry {
                    d: d as u64,
                    degree: phi_d as usize,
                    coeffs: poly.coeffs().to_vec(),
                });
            }
        }
        Ok(CycloTable { max_degree, entries })
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Trial division: for each candidate `d` ascending, repeatedly divide
    /// while the division is exact. Requires a nonzero input with constant
    /// term 1 or -1 and degree within the table capacity.
    pub fn factorize(&self, f: &IntPoly) -> Result<CycloFactorization> {
        if f.is_zero() {
            return Err(Error::Domain("cannot factor the zero polynomial"));
        }
        if !matches!(f.coeff(0), 1 | -1) {
            return Err(Error::Domain("constant term must be 1 or -1"));
        }
        if f.degree().unwrap() > self.max_degree {
            return Err(Error::Domain("polynomial degree exceeds table capacity"));
        }
        let mut work: Vec<i128> = f.coeffs().iter().map(|&c| c as i128).collect();
        let mut scratch: Vec<i128> = Vec::with_capacity(work.len());
        let mut factors: Vec<(u64, u32)> = Vec::new();
        for entry in &self.entries {
            let rem_deg = work.len() - 1;
            if rem_deg == 0 {
                break;
            }
            if entry.degree > rem_deg {
                continue;
            }
            let mut mult = 0u32;
            while divide_exact(&mut work, &entry.coeffs, &mut scratch)? {
                mult += 1;
                if work.len() - 1 < entry.degree {
                    break;
                }
            }
            if mult > 0 {
                factors.push((entry.d, mult));
            }
        }
        let mut rem_coeffs = Vec::with_capacity(work.len());
        for v in work {
            rem_coeffs.push(i64::try_from(v).map_err(|_| Error::Overflow)?);
        }
        Ok(CycloFactorization { factors, remainder: IntPoly::from_coeffs(rem_coeffs) })
    }
}

/// Attempts `work / g`; on exact division replaces `work` by the quotient
/// and returns true, otherwise leaves `work` untouched. `g` has unit
/// leading coefficient.
fn divide_exact(work: &mut Vec<i128>, g: &[i64], scratch: &mut Vec<i128>) -> Result<bool> {
    let n = work.len();
    let m = g.len();
    if n < m {
        return Ok(false);
    }
    scratch.clear();
    scratch.extend_from_slice(work);
    let lead = g[m - 1] as i128;
    for i in (0..=n - m).rev() {
        let q = scratch[i + m - 1] * lead;
        if q != 0 {
            for (j, &gj) in g[..m - 1].iter().enumerate() {
                if gj == 0 {
                    continue;
                }
                let slot = &mut scratch[i + j];
                *slot = slot
                    .checked_sub(q.checked_mul(gj as i128).ok_or(Error::Overflow)?)
                    .ok_or(Error::Overflow)?;
            }
        }
        scratch[i + m - 1] = q;
    }
    if scratch[..m - 1].iter().any(|&c| c != 0) {
        return Ok(false);
    }
    work.clear();
    work.extend_from_slice(&scratch[m - 1..]);
    Ok(true)
}

fn totient_sieve(n: usize) -> Vec<u32> {
    let mut phi: Vec<u32> = (0..=n as u32).collect();
    for p in 2..=n {
        if phi[p] == p as u32 {
            let mut m = p;
            while m <= n {
                phi[m] -= phi[m] / p as u32;
                m += p;
            }
        }
    }
    phi
}

/// One-shot cyclotomic factorization with a table sized to the input.
pub fn cyclotomic_factorization(f: &IntPoly) -> Result<CycloFactorization> {
    let deg = f.degree().ok_or(Error::Domain("cannot factor the zero polynomial"))?;
    CycloTable::with_max_degree(deg)?.factorize(f)
}

/// Factorization of `P_S` with a table sized to `F(S) + 1`.
pub fn factor_semigroup_polynomial(s: &NumericalSemigroup) -> Result<CycloFactorization> {
    let p = semigroup_polynomial(s);
    if p.is_one() {
        return Ok(CycloFactorization { factors: Vec::new(), remainder: IntPoly::one() });
    }
    cyclotomic_factorization(&p)
}

/// Whether `P_S` is a product of cyclotomic polynomials.
///
/// Panics if `F(S) + 1` exceeds [`TABLE_DEGREE_CAP`] or on coefficient
/// overflow; neither can occur for semigroups in census range.
pub fn is_cyclotomic(s: &NumericalSemigroup) -> bool {
    factor_semigroup_polynomial(s)
        .expect("cyclotomic trial division failed")
        .is_cyclotomic()
}

/// Number of irreducible factors of `P_S` with multiplicity, defined for
/// cyclotomic semigroups only (the factors are then exactly the `Phi_d`).
pub fn polynomial_length(s: &NumericalSemigroup) -> Result<u64> {
    factor_semigroup_polynomial(s)?.length().ok_or(Error::NotCyclotomic)
}

/// The exponents `e_j` of the formal identity
/// `P_S(x) = prod_{j>=1} (1 - x^j)^{e_j}`, either complete (`exact`, all
/// unlisted exponents are zero) or truncated at `truncation_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentSequence {
    entries: BTreeMap<u64, i64>,
    truncation_bound: Option<u64>,
    exact: bool,
}

impl ExponentSequence {
    pub fn get(&self, j: u64) -> i64 {
        self.entries.get(&j).copied().unwrap_or(0)
    }

    /// Nonzero entries as `(j, e_j)`, ascending in `j`.
    pub fn entries(&self) -> impl Iterator<Item = (u64, i64)> + '_ {
        self.entries.iter().map(|(&j, &e)| (j, e))
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn truncation_bound(&self) -> Option<u64> {
        self.truncation_bound
    }

    pub fn negative_support(&self) -> Vec<u64> {
        self.entries().filter(|&(_, e)| e < 0).map(|(j, _)| j).collect()
    }

    pub fn positive_support(&self) -> Vec<u64> {
        self.entries().filter(|&(_, e)| e > 0).map(|(j, _)| j).collect()
    }

    pub fn sum(&self) -> i64 {
        self.entries.values().sum()
    }
}

/// Default truncation bound `2 (F + 2)`: covers `e_1`, every gap and every
/// minimal generator.
pub fn default_exponent_bound(s: &NumericalSemigroup) -> u64 {
    2 * (s.frobenius() + 2).max(1) as u64
}

/// Iterative peeling of the exponent sequence up to `bound`: maintain the
/// residual `R = P_S * prod_{i<j} (1 - x^i)^{-e_i}` as a truncated series;
/// at step `j` the exponent is `e_j = -[x^j] R`.
pub fn exponent_sequence_truncated(s: &NumericalSemigroup, bound: u64) -> Result<ExponentSequence> {
    if bound == 0 {
        return Err(Error::Domain("truncation bound must be at least 1"));
    }
    let bound = usize::try_from(bound).map_err(|_| Error::Overflow)?;
    let p = semigroup_polynomial(s);
    let mut r = vec![0i128; bound + 1];
    for (k, slot) in r.iter_mut().enumerate() {
        *slot = p.coeff(k) as i128;
    }
    let mut entries = BTreeMap::new();
    for j in 1..=bound {
        let e = -r[j];
        if e == 0 {
            continue;
        }
        entries.insert(j as u64, i64::try_from(e).map_err(|_| Error::Overflow)?);
        if e > 0 {
            // remove (1 - x^j)^e: divide by (1 - x^j), e times
            for _ in 0..e {
                for k in j..=bound {
                    r[k] = r[k].checked_add(r[k - j]).ok_or(Error::Overflow)?;
                }
            }
        } else {
            for _ in 0..-e {
                for k in (j..=bound).rev() {
                    r[k] = r[k].checked_sub(r[k - j]).ok_or(Error::Overflow)?;
                }
            }
        }
        debug_assert_eq!(r[j], 0);
    }
    Ok(ExponentSequence { entries, truncation_bound: Some(bound as u64), exact: false })
}

/// Complete exponent sequence of a cyclotomic semigroup, computed from the
/// cyclotomic factorization via `(1 - x^d) = prod_{j|d} ...` inversion:
/// `e_j = sum_{d in D, j | d} f_d mu(d / j)`. Refuses non-cyclotomic input,
/// for which finite support cannot be certified.
pub fn exponent_sequence_exact(s: &NumericalSemigroup) -> Result<ExponentSequence> {
    let fact = factor_semigroup_polynomial(s)?;
    if !fact.is_cyclotomic() {
        return Err(Error::NotCyclotomic);
    }
    exponent_sequence_from_factors(fact.factors())
}

/// Exact sequence straight from a full cyclotomic factor list.
pub(crate) fn exponent_sequence_from_factors(factors: &[(u64, u32)]) -> Result<ExponentSequence> {
    let mut entries: BTreeMap<u64, i64> = BTreeMap::new();
    for &(d, mult) in factors {
        for j in arith::divisors(d)? {
            let term = i64::from(mult) * i64::from(arith::mobius(d / j)?);
            if term != 0 {
                *entries.entry(j).or_insert(0) += term;
            }
        }
    }
    entries.retain(|_, e| *e != 0);
    Ok(ExponentSequence { entries, truncation_bound: None, exact: true })
}
