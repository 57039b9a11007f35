//! Elementary multiplicative number theory: factorization, divisors,
//! Möbius function, Euler totient, divisor count.
//!
//! Everything here is trial-division based. All inputs in the intended
//! range are small (well below 10^8), so nothing fancier is warranted.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Prime factorization as `(prime, exponent)` pairs with primes strictly
/// increasing and exponents at least one. The factorization of 1 is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// Number of distinct prime factors.
    pub fn distinct_primes(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|&(_, e)| e == 1)
    }

    /// Product of all `p^e` pairs, i.e. the factored integer.
    pub fn value(&self) -> u64 {
        self.pairs
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }
}

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::Domain("argument must be a positive integer"))
    } else {
        Ok(())
    }
}

/// Exact prime factorization of `n >= 1` by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    require_positive(n)?;
    let mut pairs = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0u32;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        pairs.push((m, 1));
    }
    Ok(Factorization { pairs })
}

/// All positive divisors of `n >= 1` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let fact = factorize(n)?;
    let mut divs = alloc::vec![1u64];
    for &(p, e) in fact.pairs() {
        let len = divs.len();
        let mut power = 1u64;
        for _ in 0..e {
            power *= p;
            for i in 0..len {
                divs.push(divs[i] * power);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Möbius function: 1 at n = 1, `(-1)^k` on squarefree n with k prime
/// factors, 0 otherwise.
pub fn mobius(n: u64) -> Result<i32> {
    let fact = factorize(n)?;
    if !fact.is_squarefree() {
        return Ok(0);
    }
    Ok(if fact.distinct_primes() % 2 == 0 { 1 } else { -1 })
}

/// Euler totient via the multiplicative formula over the factorization.
pub fn totient(n: u64) -> Result<u64> {
    let fact = factorize(n)?;
    let mut phi = 1u64;
    for &(p, e) in fact.pairs() {
        phi *= (p - 1) * p.pow(e - 1);
    }
    Ok(phi)
}

/// Number of positive divisors of `n >= 1`.
pub fn divisor_count(n: u64) -> Result<u64> {
    let fact = factorize(n)?;
    Ok(fact.pairs().iter().map(|&(_, e)| u64::from(e) + 1).product())
}

/// Primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return false;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
