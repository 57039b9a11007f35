//! Numerical semigroups: membership, gaps, Frobenius number, Apéry sets,
//! symmetry, factorizations and Betti elements.
//!
//! A numerical semigroup is an additive submonoid of the non-negative
//! integers with finite complement. It is stored as its minimal generators,
//! its gap set, its Frobenius number and a membership bitmap over
//! `0..=F+1`; everything above the Frobenius number is a member.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::gcd;
use crate::error::{Error, Result};

/// Hard cap on how far membership is ever tabulated; generators whose
/// Frobenius number would exceed this are rejected rather than thrashing.
const MEMBERSHIP_CAP: usize = 1 << 24;

/// A numerical semigroup. For the full semigroup of non-negative integers
/// the minimal generator list is `[1]` and the Frobenius number is `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    min_gens: Vec<u64>,
    gaps: Vec<u64>,
    frobenius: i64,
    membership: Vec<bool>,
}

/// Exponent vector of one factorization of an element over the minimal
/// generators: `sum exponents[i] * min_gens[i]` equals the element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FactorizationVector {
    exponents: Vec<u64>,
}

impl FactorizationVector {
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Whether the supports (sets of generators actually used) intersect.
    pub fn supports_intersect(&self, other: &Self) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .any(|(&a, &b)| a > 0 && b > 0)
    }
}

impl NumericalSemigroup {
    /// The semigroup of all non-negative integers.
    pub fn nat() -> Self {
        NumericalSemigroup {
            min_gens: vec![1],
            gaps: Vec::new(),
            frobenius: -1,
            membership: vec![true],
        }
    }

    /// Builds the semigroup generated by `gens`. The gcd of the generators
    /// must be 1, otherwise the complement would be infinite.
    ///
    /// Membership is computed by the closure recurrence
    /// `member(i) = any(member(i - g))`, iterated until `min(gens)`
    /// consecutive members appear; everything beyond that run is in S.
    pub fn from_generators(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Domain("generator list must be nonempty"));
        }
        if gens.contains(&0) {
            return Err(Error::Domain("generators must be positive"));
        }
        if gens.iter().fold(0, |acc, &g| gcd(acc, g)) != 1 {
            return Err(Error::Domain("generators must have gcd 1"));
        }
        if gens.contains(&1) {
            return Ok(Self::nat());
        }
        let stop_run = *gens.iter().min().unwrap() as usize;
        let mut membership = vec![true];
        let mut run = 1usize;
        let mut last_gap = 0usize;
        let mut i = 1usize;
        while run < stop_run {
            if i > MEMBERSHIP_CAP {
                return Err(Error::Domain("generators too large for exact enumeration"));
            }
            let member = gens
                .iter()
                .any(|&g| (g as usize) <= i && membership[i - g as usize]);
            membership.push(member);
            if member {
                run += 1;
            } else {
                run = 0;
                last_gap = i;
            }
            i += 1;
        }
        let frobenius = last_gap as i64;
        membership.truncate(last_gap + 2);
        Ok(Self::from_membership(membership, frobenius))
    }

    /// Builds the semigroup whose gap set is exactly `gaps`, validating that
    /// the complement is closed under addition.
    pub fn from_gap_set(gaps: &[u64]) -> Result<Self> {
        if gaps.is_empty() {
            return Ok(Self::nat());
        }
        if gaps.contains(&0) {
            return Err(Error::Domain("0 belongs to every numerical semigroup"));
        }
        let f = *gaps.iter().max().unwrap() as usize;
        if f >= MEMBERSHIP_CAP {
            return Err(Error::Domain("gap set too large for exact enumeration"));
        }
        let mut membership = vec![true; f + 2];
        for &g in gaps {
            membership[g as usize] = false;
        }
        if let Some((a, b)) = closure_violation(&membership, f) {
            return Err(Error::NotClosed { a, b });
        }
        Ok(Self::from_membership(membership, f as i64))
    }

    /// Internal constructor from an already validated membership bitmap over
    /// `0..=F+1`. The caller guarantees additive closure.
    pub(crate) fn from_membership(membership: Vec<bool>, frobenius: i64) -> Self {
        debug_assert!(frobenius >= -1);
        debug_assert_eq!(membership.len(), (frobenius + 2).max(1) as usize);
        debug_assert!(
            frobenius < 0 || closure_violation(&membership, frobenius as usize).is_none()
        );
        if frobenius < 0 {
            return Self::nat();
        }
        let gaps: Vec<u64> = (1..membership.len())
            .filter(|&i| !membership[i])
            .map(|i| i as u64)
            .collect();
        let min_gens = minimal_generators(&membership, frobenius as usize);
        NumericalSemigroup { min_gens, gaps, frobenius, membership }
    }

    /// Whether this is the full semigroup of non-negative integers.
    pub fn is_nat(&self) -> bool {
        self.frobenius == -1
    }

    pub fn contains(&self, n: u64) -> bool {
        match usize::try_from(n) {
            Ok(i) if i < self.membership.len() => self.membership[i],
            _ => true,
        }
    }

    /// Minimal generators in ascending order (`[1]` for the full semigroup).
    pub fn min_gens(&self) -> &[u64] {
        &self.min_gens
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Largest integer not in S, `-1` for the full semigroup.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        self.gaps.len() as u64
    }

    /// Embedding dimension: number of minimal generators.
    pub fn embedding_dim(&self) -> usize {
        self.min_gens.len()
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.min_gens[0]
    }

    /// Apéry set of S at `m`: the elements `v` of S with `v - m` not in S.
    /// Contains exactly `m` elements, one per residue class mod `m`.
    pub fn apery_set(&self, m: u64) -> Result<Vec<u64>> {
        if m == 0 || !self.contains(m) {
            return Err(Error::Domain("apery point must be a nonzero element of the semigroup"));
        }
        let m = m as usize;
        let mut least = vec![None; m];
        let mut remaining = m;
        let mut n = 0usize;
        while remaining > 0 {
            if self.contains(n as u64) && least[n % m].is_none() {
                least[n % m] = Some(n as u64);
                remaining -= 1;
            }
            n += 1;
        }
        let mut out: Vec<u64> = least.into_iter().map(|v| v.unwrap()).collect();
        out.sort_unstable();
        Ok(out)
    }

    /// Definition-based symmetry check: `n` is in S exactly when `F - n` is
    /// not, for every `0 <= n <= F`. The full semigroup counts as symmetric.
    pub fn is_symmetric(&self) -> bool {
        if self.frobenius < 0 {
            return true;
        }
        let f = self.frobenius as u64;
        (0..=f).all(|n| self.contains(n) != self.contains(f - n))
    }

    /// All factorizations of `s` over the minimal generators, i.e. all
    /// non-negative solutions of `sum x_i * n_i = s`.
    ///
    /// Deterministic order: the exponent of the smallest generator decreases
    /// first, then the next, and so on.
    pub fn factorizations(&self, s: u64) -> Result<Vec<FactorizationVector>> {
        if !self.contains(s) {
            return Err(Error::Domain("element does not belong to the semigroup"));
        }
        let gens = &self.min_gens;
        // gcd of each generator suffix, for pruning unreachable remainders
        let mut suffix_gcd = vec![0u64; gens.len() + 1];
        for i in (0..gens.len()).rev() {
            suffix_gcd[i] = gcd(gens[i], suffix_gcd[i + 1]);
        }
        let mut out = Vec::new();
        let mut current = vec![0u64; gens.len()];
        fn go(
            gens: &[u64],
            suffix_gcd: &[u64],
            idx: usize,
            remaining: u64,
            current: &mut Vec<u64>,
            out: &mut Vec<FactorizationVector>,
        ) {
            if idx == gens.len() - 1 {
                if remaining.is_multiple_of(gens[idx]) {
                    current[idx] = remaining / gens[idx];
                    out.push(FactorizationVector { exponents: current.clone() });
                }
                return;
            }
            if !remaining.is_multiple_of(suffix_gcd[idx]) {
                return;
            }
            let g = gens[idx];
            for count in (0..=remaining / g).rev() {
                current[idx] = count;
                go(gens, suffix_gcd, idx + 1, remaining - count * g, current, out);
            }
            current[idx] = 0;
        }
        go(gens, &suffix_gcd, 0, s, &mut current, &mut out);
        debug_assert!(!out.is_empty());
        Ok(out)
    }

    /// Betti elements with multiplicity, in ascending order.
    ///
    /// For each element `s` up to `F + 2 * max_gen`, the factorizations of
    /// `s` form a graph with edges between factorizations whose supports
    /// intersect; `s` is a Betti element with multiplicity (number of
    /// connected components - 1).
    ///
    /// The scan bound is complete: if factorizations `x, y` of `s` lie in
    /// different components, then `s - n_i - n_j` is outside S for every
    /// `i` in the support of `x` and `j` in the support of `y` (otherwise a
    /// factorization through `n_i + n_j` would bridge them), which forces
    /// `s <= F + n_i + n_j <= F + 2 * max_gen`.
    pub fn betti_elements(&self) -> Vec<u64> {
        if self.is_nat() {
            return Vec::new();
        }
        let max_gen = *self.min_gens.last().unwrap();
        self.betti_scan(self.frobenius as u64 + 2 * max_gen)
    }

    fn betti_scan(&self, bound: u64) -> Vec<u64> {
        let mut betti = Vec::new();
        for s in 1..=bound {
            if !self.contains(s) {
                continue;
            }
            let facs = self.factorizations(s).unwrap();
            if facs.len() < 2 {
                continue;
            }
            let comps = support_components(&facs);
            for _ in 1..comps {
                betti.push(s);
            }
        }
        betti
    }

    /// Cardinality of a minimal presentation: the total number of extra
    /// connected components over all factorization graphs. S is a complete
    /// intersection exactly when this equals `embedding_dim - 1`.
    pub fn minimal_presentation_size(&self) -> u64 {
        self.betti_elements().len() as u64
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.min_gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// First additive-closure violation among members of `0..=f`, if any:
/// a pair of members `(a, b)` with `a + b` marked as a gap.
pub(crate) fn closure_violation(membership: &[bool], f: usize) -> Option<(u64, u64)> {
    let members: Vec<usize> = (1..=f).filter(|&i| membership[i]).collect();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i..] {
            let s = a + b;
            if s > f {
                break;
            }
            if !membership[s] {
                return Some((a as u64, b as u64));
            }
        }
    }
    None
}

/// Minimal generators from a membership bitmap over `0..=F+1`: the members
/// `m <= F + multiplicity` that are not a sum of two nonzero members.
fn minimal_generators(membership: &[bool], f: usize) -> Vec<u64> {
    let contains = |n: usize| n >= membership.len() || membership[n];
    let m1 = (1..).find(|&n| contains(n)).unwrap();
    let mut gens = Vec::new();
    for m in m1..=f + m1 {
        if !contains(m) {
            continue;
        }
        let decomposable = (m1..=m / 2).any(|a| contains(a) && contains(m - a));
        if !decomposable {
            gens.push(m as u64);
        }
    }
    gens
}

/// Connected components of the support-intersection graph on factorizations.
fn support_components(facs: &[FactorizationVector]) -> usize {
    let mut parent: Vec<usize> = (0..facs.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for i in 0..facs.len() {
        for j in i + 1..facs.len() {
            if facs[i].supports_intersect(&facs[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    (0..facs.len()).filter(|&i| find(&mut parent, i) == i).count()
}
