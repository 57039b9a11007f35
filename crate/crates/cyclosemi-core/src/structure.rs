//! Gluings, complete intersections, constructive families and the
//! classification of cyclotomic semigroups of polynomial length at most 2.
//!
//! S is a gluing of S1 and S2 at `a1*a2` when `S = a1 S1 + a2 S2` with
//! `a1, a2` coprime, `a1` an element of S2, `a2` an element of S1, and
//! neither a minimal generator of its semigroup. A semigroup is a complete
//! intersection when it is the full semigroup or a gluing of two complete
//! intersections; the recursion below produces an explicit witness tree.
//!
//! Gluing decompositions correspond to bipartitions (A, B) of the minimal
//! generators with `a1 = gcd(A)`, `a2 = gcd(B)`. The search enumerates the
//! coprime scale pairs that a valid bipartition must have (`a1` divides the
//! smallest generator, `a2` divides the smallest generator outside the
//! `a1`-multiples), which covers every bipartition that can possibly glue
//! without walking all `2^(e-1)` subsets.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::arith::{self, gcd, is_prime};
use crate::cyclotomy::{self, factor_semigroup_polynomial, semigroup_polynomial};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Witness for a complete-intersection decomposition: a leaf is the full
/// semigroup, a node glues `a1 * left + a2 * right` at `a1 * a2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GluingTree {
    Leaf,
    Node {
        a1: u64,
        a2: u64,
        left: Box<GluingTree>,
        right: Box<GluingTree>,
    },
}

impl GluingTree {
    pub fn node(a1: u64, a2: u64, left: GluingTree, right: GluingTree) -> Self {
        GluingTree::Node { a1, a2, left: Box::new(left), right: Box::new(right) }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, GluingTree::Leaf)
    }

    /// `a1 * a2` at the root, if any.
    pub fn glue_point(&self) -> Option<u64> {
        match self {
            GluingTree::Leaf => None,
            GluingTree::Node { a1, a2, .. } => Some(a1 * a2),
        }
    }

    /// Betti multiset read off the tree: a node contributes `a1` times the
    /// left multiset, `a2` times the right multiset, and the glue point.
    pub fn betti_multiset(&self) -> Vec<u64> {
        let mut out = Vec::new();
        self.collect_betti(1, &mut out);
        out.sort_unstable();
        out
    }

    fn collect_betti(&self, scale: u64, out: &mut Vec<u64>) {
        if let GluingTree::Node { a1, a2, left, right } = self {
            out.push(scale * a1 * a2);
            left.collect_betti(scale * a1, out);
            right.collect_betti(scale * a2, out);
        }
    }
}

/// One gluing decomposition of a semigroup: the bipartition of the minimal
/// generators, the scales, and the scaled-down parts.
#[derive(Debug, Clone)]
pub struct Gluing {
    /// Generators on the `a1` side (contains the smallest generator).
    pub left_part: Vec<u64>,
    /// Generators on the `a2` side.
    pub right_part: Vec<u64>,
    pub a1: u64,
    pub a2: u64,
    /// `S1` with `left_part = a1 * min_gens(S1)`.
    pub left: NumericalSemigroup,
    /// `S2` with `right_part = a2 * min_gens(S2)`.
    pub right: NumericalSemigroup,
}

struct Candidate {
    mask: u128,
    a1: u64,
    a2: u64,
    left_part: Vec<u64>,
    right_part: Vec<u64>,
    left: NumericalSemigroup,
    right: NumericalSemigroup,
}

/// All bipartitions of the minimal generators that satisfy the gluing
/// conditions, ordered by the bitmask of the side containing the smallest
/// generator. Structural conditions only; no polynomial identity check.
fn gluing_candidates(s: &NumericalSemigroup) -> Vec<Candidate> {
    let gens = s.min_gens();
    let e = gens.len();
    let mut out = Vec::new();
    if e < 2 || s.is_nat() {
        return out;
    }
    let g0 = gens[0];
    for a1 in arith::divisors(g0).expect("positive generator") {
        if a1 < 2 {
            continue;
        }
        let Some(&g_star) = gens.iter().find(|&&g| g % a1 != 0) else {
            continue; // a1 divides everything: impossible for gcd-1 generators
        };
        for a2 in arith::divisors(g_star).expect("positive generator") {
            if a2 < 2 || gcd(a1, a2) != 1 {
                continue;
            }
            // Partition forced by divisibility; generators divisible by both
            // scales can go either way (the smallest generator stays left).
            let mut left_base = Vec::new();
            let mut right_base = Vec::new();
            let mut free = Vec::new();
            let mut covered = true;
            for (i, &g) in gens.iter().enumerate() {
                match (g % a1 == 0, g % a2 == 0) {
                    (true, true) if i > 0 => free.push(i),
                    (true, _) => left_base.push(i),
                    (false, true) => right_base.push(i),
                    (false, false) => {
                        covered = false;
                        break;
                    }
                }
            }
            if !covered {
                continue;
            }
            for choice in 0u32..1 << free.len() {
                let mut left_idx = left_base.clone();
                let mut right_idx = right_base.clone();
                for (bit, &i) in free.iter().enumerate() {
                    if choice >> bit & 1 == 1 {
                        left_idx.push(i);
                    } else {
                        right_idx.push(i);
                    }
                }
                if right_idx.is_empty() {
                    continue;
                }
                let left_part: Vec<u64> = {
                    left_idx.sort_unstable();
                    left_idx.iter().map(|&i| gens[i]).collect()
                };
                let right_part: Vec<u64> = {
                    right_idx.sort_unstable();
                    right_idx.iter().map(|&i| gens[i]).collect()
                };
                // the scales must be the exact gcds of the two sides
                if left_part.iter().fold(0, |acc, &g| gcd(acc, g)) != a1 {
                    continue;
                }
                if right_part.iter().fold(0, |acc, &g| gcd(acc, g)) != a2 {
                    continue;
                }
                let left_gens: Vec<u64> = left_part.iter().map(|&g| g / a1).collect();
                let right_gens: Vec<u64> = right_part.iter().map(|&g| g / a2).collect();
                let left = NumericalSemigroup::from_generators(&left_gens)
                    .expect("scaled-down side has gcd 1");
                let right = NumericalSemigroup::from_generators(&right_gens)
                    .expect("scaled-down side has gcd 1");
                if !left.contains(a2) || left.min_gens().contains(&a2) {
                    continue;
                }
                if !right.contains(a1) || right.min_gens().contains(&a1) {
                    continue;
                }
                let mask = left_idx
                    .iter()
                    .fold(0u128, |m, &i| m | 1u128.checked_shl(i as u32).unwrap_or(0));
                out.push(Candidate { mask, a1, a2, left_part, right_part, left, right });
            }
        }
    }
    out.sort_by_key(|c| c.mask);
    out
}

/// Every way to write S as a gluing, each additionally verified through the
/// polynomial identity `P_S = P_<a1,a2> * P_S1(x^a1) * P_S2(x^a2)`.
/// Returns an empty list when S admits no gluing.
pub fn detect_gluings(s: &NumericalSemigroup) -> Vec<Gluing> {
    gluing_candidates(s)
        .into_iter()
        .filter(|c| {
            gluing_polynomial_identity_holds(s, c.a1, c.a2, &c.left, &c.right)
                .expect("semigroup polynomial arithmetic stays in range")
        })
        .map(|c| Gluing {
            left_part: c.left_part,
            right_part: c.right_part,
            a1: c.a1,
            a2: c.a2,
            left: c.left,
            right: c.right,
        })
        .collect()
}

fn gluing_polynomial_identity_holds(
    s: &NumericalSemigroup,
    a1: u64,
    a2: u64,
    s1: &NumericalSemigroup,
    s2: &NumericalSemigroup,
) -> Result<bool> {
    let base = NumericalSemigroup::from_generators(&[a1, a2])?;
    let product = semigroup_polynomial(&base)
        .mul(&semigroup_polynomial(s1).compose_power(a1 as usize)?)?
        .mul(&semigroup_polynomial(s2).compose_power(a2 as usize)?)?;
    Ok(product == semigroup_polynomial(s))
}

/// Complete-intersection decision with memoization on minimal-generator
/// tuples; worth reusing across a sweep, where gluing candidates share
/// scaled-down sub-semigroups.
pub struct CiSolver {
    memo: alloc::collections::BTreeMap<Vec<u64>, Option<GluingTree>>,
}

impl CiSolver {
    pub fn new() -> Self {
        CiSolver { memo: alloc::collections::BTreeMap::new() }
    }

    /// Returns a gluing witness tree if S is a complete intersection. The
    /// witness is the first decomposition in bipartition-mask order whose
    /// two sides are themselves complete intersections.
    pub fn decide(&mut self, s: &NumericalSemigroup) -> Option<GluingTree> {
        if s.is_nat() {
            return Some(GluingTree::Leaf);
        }
        if let Some(hit) = self.memo.get(s.min_gens()) {
            return hit.clone();
        }
        let mut found = None;
        for cand in gluing_candidates(s) {
            if let Some(left) = self.decide(&cand.left)
                && let Some(right) = self.decide(&cand.right) {
                    found = Some(GluingTree::node(cand.a1, cand.a2, left, right));
                    break;
                }
        }
        self.memo.insert(s.min_gens().to_vec(), found.clone());
        found
    }
}

impl Default for CiSolver {
    fn default() -> Self {
        Self::new()
    }
}

/// One-shot complete-intersection decision; see [`CiSolver::decide`].
pub fn is_complete_intersection(s: &NumericalSemigroup) -> Option<GluingTree> {
    CiSolver::new().decide(s)
}

/// Classification of a cyclotomic semigroup of polynomial length 1 or 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// `S = <p, q>` with distinct primes, `P_S = Phi_pq`.
    Pq { p: u64, q: u64 },
    /// `S = <p, q^2>` with distinct primes, `P_S = Phi_pq Phi_pq2`.
    Pq2 { p: u64, q: u64 },
    /// `S = <p, q^2, qr>` with distinct primes, `p` in `<q, r>`,
    /// `P_S = Phi_pq Phi_q2r`.
    Pq2Qr { p: u64, q: u64, r: u64 },
    /// Fits none of the shapes above; would falsify the classification.
    Violation,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Pq { p, q } => write!(f, "PQ({p},{q})"),
            Classification::Pq2 { p, q } => write!(f, "PQ2({p},{q})"),
            Classification::Pq2Qr { p, q, r } => write!(f, "PQ2QR({p},{q},{r})"),
            Classification::Violation => write!(f, "VIOLATION"),
        }
    }
}

impl FromStr for Classification {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_args = |body: &str| -> Result<Vec<u64>> {
            body.split(',')
                .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Domain("bad classification tag")))
                .collect()
        };
        if s == "VIOLATION" {
            return Ok(Classification::Violation);
        }
        if let Some(body) = s.strip_prefix("PQ2QR(").and_then(|t| t.strip_suffix(')')) {
            let v = parse_args(body)?;
            if let [p, q, r] = v[..] {
                return Ok(Classification::Pq2Qr { p, q, r });
            }
        } else if let Some(body) = s.strip_prefix("PQ2(").and_then(|t| t.strip_suffix(')')) {
            let v = parse_args(body)?;
            if let [p, q] = v[..] {
                return Ok(Classification::Pq2 { p, q });
            }
        } else if let Some(body) = s.strip_prefix("PQ(").and_then(|t| t.strip_suffix(')')) {
            let v = parse_args(body)?;
            if let [p, q] = v[..] {
                return Ok(Classification::Pq { p, q });
            }
        }
        Err(Error::Domain("bad classification tag"))
    }
}

/// Classifies a cyclotomic semigroup with polynomial length 1 or 2 into its
/// structural shape, or `Violation` when none matches.
pub fn classify_low_length(s: &NumericalSemigroup) -> Result<Classification> {
    let fact = factor_semigroup_polynomial(s)?;
    let length = fact.length().ok_or(Error::NotCyclotomic)?;
    if !(1..=2).contains(&length) {
        return Err(Error::Domain("classification applies to polynomial length 1 or 2"));
    }
    Ok(classify_from_factors(s.min_gens(), fact.factors()))
}

/// Shape matching on the factor list; `min_gens` pins the semigroup itself.
pub(crate) fn classify_from_factors(min_gens: &[u64], factors: &[(u64, u32)]) -> Classification {
    match factors {
        [(d, 1)] => {
            if let Some((p, q)) = two_distinct_primes(*d)
                && min_gens == [p, q] {
                    return Classification::Pq { p, q };
                }
            Classification::Violation
        }
        [(d1, 1), (d2, 1)] => {
            if let Some(tag) = match_pq2(min_gens, *d1, *d2) {
                return tag;
            }
            if let Some(tag) = match_pq2qr(min_gens, *d1, *d2) {
                return tag;
            }
            if let Some(tag) = match_pq2qr(min_gens, *d2, *d1) {
                return tag;
            }
            Classification::Violation
        }
        _ => Classification::Violation,
    }
}

/// `d = p * q` for distinct primes `p < q`.
fn two_distinct_primes(d: u64) -> Option<(u64, u64)> {
    let fact = arith::factorize(d).ok()?;
    match fact.pairs() {
        [(p, 1), (q, 1)] => Some((*p, *q)),
        _ => None,
    }
}

/// `P_S = Phi_pq Phi_pq2` with `S = <p, q^2>`.
fn match_pq2(min_gens: &[u64], d1: u64, d2: u64) -> Option<Classification> {
    if !d2.is_multiple_of(d1) {
        return None;
    }
    let q = d2 / d1;
    if !is_prime(q) || !d1.is_multiple_of(q) {
        return None;
    }
    let p = d1 / q;
    if !is_prime(p) || p == q {
        return None;
    }
    let mut expect = [p, q * q];
    expect.sort_unstable();
    if min_gens == expect {
        Some(Classification::Pq2 { p, q })
    } else {
        None
    }
}

/// `P_S = Phi_pq Phi_q2r` with `S = <p, q^2, qr>` and `p` in `<q, r>`.
fn match_pq2qr(min_gens: &[u64], d_pq: u64, d_q2r: u64) -> Option<Classification> {
    let (u, v) = two_distinct_primes(d_pq)?;
    let fact = arith::factorize(d_q2r).ok()?;
    let (q, r) = match fact.pairs() {
        [(a, 2), (b, 1)] => (*a, *b),
        [(a, 1), (b, 2)] => (*b, *a),
        _ => return None,
    };
    let p = if q == u {
        v
    } else if q == v {
        u
    } else {
        return None;
    };
    if r == p || r == q {
        return None;
    }
    let base = NumericalSemigroup::from_generators(&[q, r]).ok()?;
    if !base.contains(p) {
        return None;
    }
    let mut expect = [p, q * q, q * r];
    expect.sort_unstable();
    if min_gens == expect {
        Some(Classification::Pq2Qr { p, q, r })
    } else {
        None
    }
}

/// A member of the constructive family with embedding dimension `e` and
/// polynomial length `e + k - 2`, together with its witness tree.
#[derive(Debug, Clone)]
pub struct FamilySemigroup {
    pub semigroup: NumericalSemigroup,
    pub primes: Vec<u64>,
    pub tree: GluingTree,
    pub length: u64,
}

/// Builds the family member `S(e, k)`: the base case is `<p1^k, p2>`, and
/// each further step glues `p1 * S + p * N` for a prime `p` in S that is
/// not a minimal generator. When `primes` is not supplied, the smallest
/// admissible prime is chosen at every step.
///
/// Asserts the advertised invariants `e(S) = e` and `length = e + k - 2`.
pub fn build_family_sek(e: u32, k: u32, primes: Option<&[u64]>) -> Result<FamilySemigroup> {
    if e < 2 {
        return Err(Error::Domain("family requires embedding dimension at least 2"));
    }
    if k < 1 {
        return Err(Error::Domain("family requires k at least 1"));
    }
    if let Some(ps) = primes {
        if ps.len() != e as usize {
            return Err(Error::Domain("expected exactly e primes"));
        }
        if !ps.iter().all(|&p| is_prime(p)) {
            return Err(Error::Domain("family parameters must be prime"));
        }
        if !ps.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Domain("family primes must be strictly increasing"));
        }
    }
    let p1 = primes.map_or(2, |ps| ps[0]);
    let p2 = primes.map_or(3, |ps| ps[1]);
    let base = p1.checked_pow(k).ok_or(Error::Overflow)?;
    let mut used = alloc::vec![p1, p2];
    let mut s = NumericalSemigroup::from_generators(&[base, p2])?;
    let mut tree = GluingTree::node(base, p2, GluingTree::Leaf, GluingTree::Leaf);
    for i in 2..e as usize {
        let p = match primes {
            Some(ps) => {
                let p = ps[i];
                if !s.contains(p) || s.min_gens().contains(&p) {
                    return Err(Error::Domain(
                        "each family prime must be a non-generator element of the previous step",
                    ));
                }
                p
            }
            None => smallest_admissible_prime(&s, &used),
        };
        let mut gens: Vec<u64> = s.min_gens().iter().map(|&g| g * p1).collect();
        gens.push(p);
        s = NumericalSemigroup::from_generators(&gens)?;
        tree = GluingTree::node(p1, p, tree, GluingTree::Leaf);
        used.push(p);
    }
    assert_eq!(s.embedding_dim(), e as usize, "family embedding dimension");
    let length = cyclotomy::polynomial_length(&s)?;
    assert_eq!(length, u64::from(e) + u64::from(k) - 2, "family polynomial length");
    Ok(FamilySemigroup { semigroup: s, primes: used, tree, length })
}

/// Smallest unused prime that lies in S without being a minimal generator.
/// Always exists: every prime beyond `F + multiplicity` qualifies.
fn smallest_admissible_prime(s: &NumericalSemigroup, used: &[u64]) -> u64 {
    (2..)
        .find(|&p| {
            is_prime(p) && !used.contains(&p) && s.contains(p) && !s.min_gens().contains(&p)
        })
        .unwrap()
}
