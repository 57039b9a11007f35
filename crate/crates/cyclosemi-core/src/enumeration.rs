//! Exhaustive enumeration of numerical semigroups by Frobenius number and
//! the cyclotomic census pipeline.
//!
//! Two generators are provided. A brute-force enumerator walks every gap
//! subset of `{1..F}` (capped at F = 22) and keeps the additively closed
//! ones; it exists as an oracle. The workhorse is a backtracker over
//! *symmetric* semigroups: symmetry pairs `n` with `F - n`, so only the
//! lower half is free, and unit propagation of the closure rules prunes the
//! tree hard. Restricting the census to symmetric semigroups loses nothing,
//! since every cyclotomic numerical semigroup is symmetric (the semigroup
//! polynomial is then a product of palindromic factors); the restriction is
//! cross-checked against the brute-force oracle in tests.
//!
//! One Frobenius value is one unit of work: [`census_slice`] is pure and
//! callers may fan slices out over threads and merge with
//! [`merge_slices`], which sorts and is order-insensitive.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclotomy::{self, CycloTable};
use crate::error::{Error, Result};
use crate::semigroup::{closure_violation, NumericalSemigroup};
use crate::structure::{self, CiSolver, Classification};

/// Brute-force enumeration is exponential in F; anything beyond this cap is
/// refused.
pub const BRUTE_FORCE_CAP: u64 = 22;

/// Every numerical semigroup with Frobenius number exactly `f`, generated
/// by subset search over gap candidates `{1..f}` (with `f` always a gap)
/// and validated through `from_gap_set`. Deterministic order: ascending
/// gap-set bitmask.
pub fn enumerate_all_with_frobenius(f: u64) -> Result<Vec<NumericalSemigroup>> {
    if !(1..=BRUTE_FORCE_CAP).contains(&f) {
        return Err(Error::Domain("brute-force enumeration supports 1 <= F <= 22"));
    }
    let f = f as usize;
    let full: u64 = (1 << (f + 1)) - 1;
    let mut out = Vec::new();
    for mask in 0u64..1 << (f - 1) {
        let gap_bits = (mask << 1) | (1 << f);
        let members = !gap_bits & full;
        if !closed_under_addition_bits(members, f) {
            continue;
        }
        let gaps: Vec<u64> =
            (1..=f).filter(|&i| gap_bits >> i & 1 == 1).map(|i| i as u64).collect();
        out.push(NumericalSemigroup::from_gap_set(&gaps)?);
    }
    Ok(out)
}

/// Closure check on a membership bitmask over `0..=f`: for every member
/// `a`, shifting the member set by `a` must stay inside the member set.
fn closed_under_addition_bits(members: u64, f: usize) -> bool {
    let full = (1u64 << (f + 1)) - 1;
    for a in 1..=f {
        if members >> a & 1 == 1 && (members << a) & full & !members != 0 {
            return false;
        }
    }
    true
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Cell {
    Und,
    In,
    Out,
}

/// Backtracking search over symmetric semigroups with Frobenius number `f`.
///
/// Membership of `n = 1..=(f-1)/2` is decided in ascending order, the
/// "in S" branch first. Unit propagation enforces the symmetry pairing
/// (`n` in S iff `f - n` out) and both closure directions (members add to
/// members; a gap minus a member is a gap), pruning on contradiction.
struct SymmetricSearch<'a> {
    f: usize,
    status: Vec<Cell>,
    trail: Vec<usize>,
    queue: Vec<usize>,
    membership: Vec<bool>,
    visit: &'a mut dyn FnMut(&[bool]),
}

impl SymmetricSearch<'_> {
    fn set(&mut self, n: usize, v: Cell) -> bool {
        match self.status[n] {
            c if c == v => true,
            Cell::Und => {
                self.status[n] = v;
                self.trail.push(n);
                self.queue.push(n);
                true
            }
            _ => false,
        }
    }

    fn propagate(&mut self) -> bool {
        while let Some(n) = self.queue.pop() {
            let v = self.status[n];
            let pair_value = if v == Cell::In { Cell::Out } else { Cell::In };
            if !self.set(self.f - n, pair_value) {
                return false;
            }
            match v {
                Cell::In => {
                    for a in 1..=self.f - n {
                        if self.status[a] == Cell::In && !self.set(n + a, Cell::In) {
                            return false;
                        }
                    }
                    for m in n + 1..=self.f {
                        if self.status[m] == Cell::Out && !self.set(m - n, Cell::Out) {
                            return false;
                        }
                    }
                }
                Cell::Out => {
                    for a in 1..n {
                        if self.status[a] == Cell::In && !self.set(n - a, Cell::Out) {
                            return false;
                        }
                    }
                }
                Cell::Und => unreachable!(),
            }
        }
        true
    }

    fn dfs(&mut self, from: usize) {
        let half = (self.f - 1) / 2;
        let mut n = from;
        while n <= half && self.status[n] != Cell::Und {
            n += 1;
        }
        if n > half {
            self.emit();
            return;
        }
        for v in [Cell::In, Cell::Out] {
            let mark = self.trail.len();
            self.queue.clear();
            if self.set(n, v) && self.propagate() {
                self.dfs(n + 1);
            }
            while self.trail.len() > mark {
                let i = self.trail.pop().unwrap();
                self.status[i] = Cell::Und;
            }
        }
        self.queue.clear();
    }

    fn emit(&mut self) {
        debug_assert!(self.status.iter().all(|&c| c != Cell::Und));
        for (i, &c) in self.status.iter().enumerate() {
            self.membership[i] = c == Cell::In;
        }
        self.membership[self.f + 1] = true;
        (self.visit)(&self.membership);
    }
}

/// Drives `visit` over the membership bitmap (`0..=f+1`) of every symmetric
/// semigroup with Frobenius number `f`. F must be odd: a symmetric
/// semigroup cannot have even F, since `F/2` would have to be both in and
/// out of S under the defining pairing.
pub(crate) fn walk_symmetric_membership(f: u64, visit: &mut dyn FnMut(&[bool])) -> Result<()> {
    if f == 0 || f.is_multiple_of(2) {
        return Err(Error::Domain("symmetric enumeration requires odd F >= 1"));
    }
    let f = usize::try_from(f).map_err(|_| Error::Overflow)?;
    let mut search = SymmetricSearch {
        f,
        status: vec![Cell::Und; f + 1],
        trail: Vec::new(),
        queue: Vec::new(),
        membership: vec![false; f + 2],
        visit,
    };
    // 0 is always a member; its propagation forces f out.
    let ok = search.set(0, Cell::In) && search.propagate();
    debug_assert!(ok, "the root state cannot be contradictory");
    if ok {
        search.dfs(1);
    }
    Ok(())
}

/// Exactly the symmetric numerical semigroups with Frobenius number `f`
/// (odd), in backtracker discovery order. Each leaf is validated for full
/// additive closure through `from_gap_set`.
pub fn enumerate_symmetric_with_frobenius(f: u64) -> Result<Vec<NumericalSemigroup>> {
    let mut out = Vec::new();
    let mut error = None;
    walk_symmetric_membership(f, &mut |membership| {
        let gaps: Vec<u64> = (1..membership.len() - 1)
            .filter(|&i| !membership[i])
            .map(|i| i as u64)
            .collect();
        match NumericalSemigroup::from_gap_set(&gaps) {
            Ok(s) => {
                debug_assert!(s.is_symmetric());
                debug_assert_eq!(s.frobenius(), f as i64);
                out.push(s);
            }
            Err(e) => error = Some(e),
        }
    })?;
    match error {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Which conjectures to check during a census sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ConjectureSet {
    /// Cyclotomic iff complete intersection (both directions).
    pub complete_intersection: bool,
    /// `e(S) <= l(S) + 1` for cyclotomic S.
    pub length_inequality: bool,
    /// `n` is a minimal generator iff `e_n < 0`, over the exact sequence.
    pub minimal_generators: bool,
    /// `{d >= 2 : e_d > 0}` lies inside the factor set with `e_d <= f_d`.
    pub positive_support: bool,
}

impl ConjectureSet {
    pub fn all() -> Self {
        ConjectureSet {
            complete_intersection: true,
            length_inequality: true,
            minimal_generators: true,
            positive_support: true,
        }
    }

    pub fn none() -> Self {
        ConjectureSet::default()
    }

    pub fn any(&self) -> bool {
        self.complete_intersection
            || self.length_inequality
            || self.minimal_generators
            || self.positive_support
    }

    pub fn list(&self) -> Vec<Conjecture> {
        let mut out = Vec::new();
        if self.complete_intersection {
            out.push(Conjecture::CompleteIntersection);
        }
        if self.length_inequality {
            out.push(Conjecture::LengthInequality);
        }
        if self.minimal_generators {
            out.push(Conjecture::MinimalGenerators);
        }
        if self.positive_support {
            out.push(Conjecture::PositiveSupport);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Conjecture {
    CompleteIntersection,
    LengthInequality,
    MinimalGenerators,
    PositiveSupport,
}

impl core::fmt::Display for Conjecture {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let name = match self {
            Conjecture::CompleteIntersection => "cyclotomic iff complete intersection",
            Conjecture::LengthInequality => "e(S) <= l(S) + 1",
            Conjecture::MinimalGenerators => "minimal generators are exactly the negative exponents",
            Conjecture::PositiveSupport => "positive exponents stay within the factor set",
        };
        write!(f, "{name}")
    }
}

/// One row of the census: a cyclotomic numerical semigroup and everything
/// computed about it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    pub min_gens: Vec<u64>,
    pub frobenius: u64,
    pub genus: u64,
    pub length: u64,
    pub complete_intersection: bool,
    /// Shape tag for length 1 and 2 records.
    pub classification: Option<Classification>,
}

/// Everything the census learns about one Frobenius value.
#[derive(Debug, Clone)]
pub struct FrobeniusSlice {
    pub frobenius: u64,
    pub symmetric_count: u64,
    pub records: Vec<CensusRecord>,
    pub counterexamples: BTreeMap<Conjecture, Vec<Vec<u64>>>,
}

/// Verdict for one conjecture over the census range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureOutcome {
    pub conjecture: Conjecture,
    /// Number of cyclotomic semigroups examined.
    pub checked: u64,
    /// Minimal-generator tuples of the violations found.
    pub counterexamples: Vec<Vec<u64>>,
}

impl ConjectureOutcome {
    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrobeniusSummary {
    pub frobenius: u64,
    pub symmetric: u64,
    pub cyclotomic: u64,
}

/// Aggregated census over all odd Frobenius numbers up to a bound.
#[derive(Debug, Clone)]
pub struct CensusReport {
    pub frobenius_max: u64,
    pub total_symmetric: u64,
    pub total_cyclotomic: u64,
    pub counts_by_length: BTreeMap<u64, u64>,
    pub records: Vec<CensusRecord>,
    pub conjectures: Vec<ConjectureOutcome>,
    pub per_frobenius: Vec<FrobeniusSummary>,
}

/// Trial-division table sized for every polynomial the census can meet.
pub fn census_table(frobenius_max: u64) -> Result<CycloTable> {
    CycloTable::with_max_degree(frobenius_max as usize + 1)
}

/// The census work unit for one odd Frobenius value: enumerate symmetric
/// semigroups, test cyclotomicity, and record length, complete-intersection
/// witness and classification for the cyclotomic ones. With conjecture
/// checks enabled, the complete-intersection decision also sweeps the
/// non-cyclotomic semigroups so that the converse direction is genuinely
/// tested rather than assumed.
pub fn census_slice(
    f: u64,
    table: &CycloTable,
    conjectures: &ConjectureSet,
) -> Result<FrobeniusSlice> {
    let mut slice = FrobeniusSlice {
        frobenius: f,
        symmetric_count: 0,
        records: Vec::new(),
        counterexamples: conjectures.list().into_iter().map(|c| (c, Vec::new())).collect(),
    };
    let mut ci = CiSolver::new();
    let mut failure = None;
    walk_symmetric_membership(f, &mut |membership| {
        slice.symmetric_count += 1;
        assert!(
            closure_violation(membership, f as usize).is_none(),
            "backtracker leaf must be additively closed"
        );
        let p = polynomial_from_membership(membership);
        let fact = match table.factorize(&p) {
            Ok(fact) => fact,
            Err(e) => {
                failure = Some(e);
                return;
            }
        };
        if fact.is_cyclotomic() {
            let s = NumericalSemigroup::from_membership(membership.to_vec(), f as i64);
            let length = fact.length().unwrap();
            let witness = ci.decide(&s);
            let classification = if length <= 2 {
                Some(structure::classify_from_factors(s.min_gens(), fact.factors()))
            } else {
                None
            };
            if conjectures.complete_intersection && witness.is_none() {
                push_counterexample(&mut slice, Conjecture::CompleteIntersection, &s);
            }
            if conjectures.length_inequality && s.embedding_dim() as u64 > length + 1 {
                push_counterexample(&mut slice, Conjecture::LengthInequality, &s);
            }
            if conjectures.minimal_generators || conjectures.positive_support {
                match cyclotomy::exponent_sequence_from_factors(fact.factors()) {
                    Ok(seq) => {
                        if conjectures.minimal_generators
                            && seq.negative_support() != s.min_gens()
                        {
                            push_counterexample(&mut slice, Conjecture::MinimalGenerators, &s);
                        }
                        if conjectures.positive_support {
                            let ok = seq.entries().filter(|&(d, e)| d >= 2 && e > 0).all(
                                |(d, e)| {
                                    fact.factors()
                                        .iter()
                                        .find(|&&(fd, _)| fd == d)
                                        .is_some_and(|&(_, mult)| e <= i64::from(mult))
                                },
                            );
                            if !ok {
                                push_counterexample(&mut slice, Conjecture::PositiveSupport, &s);
                            }
                        }
                    }
                    Err(e) => failure = Some(e),
                }
            }
            slice.records.push(CensusRecord {
                min_gens: s.min_gens().to_vec(),
                frobenius: f,
                genus: s.genus(),
                length,
                complete_intersection: witness.is_some(),
                classification,
            });
        } else if conjectures.complete_intersection {
            // converse direction: a complete intersection that is not
            // cyclotomic would be a counterexample as well
            let s = NumericalSemigroup::from_membership(membership.to_vec(), f as i64);
            if ci.decide(&s).is_some() {
                push_counterexample(&mut slice, Conjecture::CompleteIntersection, &s);
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(slice),
    }
}

fn push_counterexample(slice: &mut FrobeniusSlice, which: Conjecture, s: &NumericalSemigroup) {
    slice
        .counterexamples
        .get_mut(&which)
        .expect("conjecture was requested")
        .push(s.min_gens().to_vec());
}

/// `P_S` straight from a membership bitmap over `0..=F+1`.
fn polynomial_from_membership(membership: &[bool]) -> crate::polynomials::IntPoly {
    let f = membership.len() - 2;
    let is_gap = |k: usize| k <= f && !membership[k];
    let mut coeffs = vec![0i64; f + 2];
    coeffs[0] = 1;
    for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = i64::from(is_gap(k - 1)) - i64::from(is_gap(k));
    }
    crate::polynomials::IntPoly::from_coeffs(coeffs)
}

/// Deterministic aggregation of slices: sorts by Frobenius number, then
/// orders records and counterexamples by generator tuple within each value.
/// The result is independent of the order in which slices were produced.
pub fn merge_slices(
    frobenius_max: u64,
    mut slices: Vec<FrobeniusSlice>,
    conjectures: &ConjectureSet,
) -> CensusReport {
    slices.sort_by_key(|s| s.frobenius);
    let mut report = CensusReport {
        frobenius_max,
        total_symmetric: 0,
        total_cyclotomic: 0,
        counts_by_length: BTreeMap::new(),
        records: Vec::new(),
        conjectures: conjectures
            .list()
            .into_iter()
            .map(|c| ConjectureOutcome { conjecture: c, checked: 0, counterexamples: Vec::new() })
            .collect(),
        per_frobenius: Vec::new(),
    };
    for mut slice in slices {
        slice.records.sort_by(|a, b| a.min_gens.cmp(&b.min_gens));
        report.total_symmetric += slice.symmetric_count;
        report.total_cyclotomic += slice.records.len() as u64;
        report.per_frobenius.push(FrobeniusSummary {
            frobenius: slice.frobenius,
            symmetric: slice.symmetric_count,
            cyclotomic: slice.records.len() as u64,
        });
        for record in &slice.records {
            *report.counts_by_length.entry(record.length).or_insert(0) += 1;
        }
        for outcome in &mut report.conjectures {
            if let Some(mut cx) = slice.counterexamples.remove(&outcome.conjecture) {
                cx.sort();
                outcome.counterexamples.extend(cx);
            }
        }
        report.records.extend(slice.records);
    }
    for outcome in &mut report.conjectures {
        outcome.checked = report.total_cyclotomic;
    }
    debug_assert_eq!(
        report.counts_by_length.values().sum::<u64>(),
        report.total_cyclotomic
    );
    debug_assert!(report.records.iter().all(|r| r.length >= 1));
    report
}

/// Sequential census of all cyclotomic numerical semigroups with Frobenius
/// number at most `frobenius_max`, grouped by polynomial length.
pub fn cyclotomic_census(frobenius_max: u64) -> Result<CensusReport> {
    run_census(frobenius_max, ConjectureSet::none())
}

/// Census plus conjecture verification over the same range.
pub fn verify_conjectures(frobenius_max: u64, which: ConjectureSet) -> Result<CensusReport> {
    run_census(frobenius_max, which)
}

fn run_census(frobenius_max: u64, conjectures: ConjectureSet) -> Result<CensusReport> {
    let table = census_table(frobenius_max)?;
    let mut slices = Vec::new();
    for f in (1..=frobenius_max).step_by(2) {
        slices.push(census_slice(f, &table, &conjectures)?);
    }
    Ok(merge_slices(frobenius_max, slices, &conjectures))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomy::is_cyclotomic;

    fn gap_sets(list: &[NumericalSemigroup]) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = list.iter().map(|s| s.gaps().to_vec()).collect();
        out.sort();
        out
    }

    #[test]
    fn brute_force_examples() {
        let all = enumerate_all_with_frobenius(1).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].min_gens(), &[2, 3]);

        let all = enumerate_all_with_frobenius(2).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].min_gens(), &[3, 4, 5]);

        let all = enumerate_all_with_frobenius(3).unwrap();
        let gens: Vec<&[u64]> = all.iter().map(|s| s.min_gens()).collect();
        assert_eq!(gens, [&[2u64, 5][..], &[4, 5, 6, 7]]);

        assert!(enumerate_all_with_frobenius(0).is_err());
        assert!(enumerate_all_with_frobenius(23).is_err());
    }

    #[test]
    fn brute_force_counts() {
        // number of numerical semigroups by Frobenius number, 1..=12
        let expect = [1, 1, 2, 2, 5, 4, 11, 10, 21, 22, 51, 40];
        for (i, &n) in expect.iter().enumerate() {
            let f = i as u64 + 1;
            assert_eq!(enumerate_all_with_frobenius(f).unwrap().len(), n, "F = {f}");
        }
    }

    #[test]
    fn symmetric_examples() {
        let sym = enumerate_symmetric_with_frobenius(1).unwrap();
        assert_eq!(sym.len(), 1);
        assert_eq!(sym[0].min_gens(), &[2, 3]);

        let sym = enumerate_symmetric_with_frobenius(5).unwrap();
        let mut gens: Vec<&[u64]> = sym.iter().map(|s| s.min_gens()).collect();
        gens.sort();
        assert_eq!(gens, [&[2u64, 7][..], &[3, 4]]);

        let sym = enumerate_symmetric_with_frobenius(9).unwrap();
        assert!(sym.iter().any(|s| s.min_gens() == [4, 6, 7]));

        assert!(enumerate_symmetric_with_frobenius(4).is_err());
        assert!(enumerate_symmetric_with_frobenius(0).is_err());
    }

    #[test]
    fn symmetric_matches_brute_force_filter() {
        for f in (1..=13u64).step_by(2) {
            let fast = enumerate_symmetric_with_frobenius(f).unwrap();
            let brute: Vec<NumericalSemigroup> = enumerate_all_with_frobenius(f)
                .unwrap()
                .into_iter()
                .filter(|s| s.is_symmetric())
                .collect();
            assert_eq!(gap_sets(&fast), gap_sets(&brute), "F = {f}");
        }
    }

    #[test]
    fn census_of_one() {
        let report = cyclotomic_census(1).unwrap();
        assert_eq!(report.total_cyclotomic, 1);
        assert_eq!(report.counts_by_length.get(&1), Some(&1));
        assert_eq!(report.records[0].min_gens, [2, 3]);
        assert!(report.records[0].complete_intersection);
    }

    #[test]
    fn census_records_are_consistent() {
        let report = cyclotomic_census(15).unwrap();
        assert_eq!(
            report.counts_by_length.values().sum::<u64>(),
            report.total_cyclotomic
        );
        for record in &report.records {
            let s = NumericalSemigroup::from_generators(&record.min_gens).unwrap();
            assert!(is_cyclotomic(&s), "{s}");
            assert_eq!(s.frobenius() as u64, record.frobenius);
            assert_eq!(s.genus(), record.genus);
            assert!(record.complete_intersection);
            if record.length <= 2 {
                let tag = record.classification.expect("low length must be classified");
                assert_ne!(tag, Classification::Violation, "{s}");
            } else {
                assert!(record.classification.is_none());
            }
        }
        // records are sorted by Frobenius number, then by generators
        for w in report.records.windows(2) {
            assert!(
                (w[0].frobenius, &w[0].min_gens) < (w[1].frobenius, &w[1].min_gens)
            );
        }
    }

    #[test]
    fn census_monotone_consistency() {
        let small = cyclotomic_census(19).unwrap();
        let large = cyclotomic_census(31).unwrap();
        let restricted: Vec<&CensusRecord> =
            large.records.iter().filter(|r| r.frobenius <= 19).collect();
        assert_eq!(small.records.len(), restricted.len());
        for (a, b) in small.records.iter().zip(restricted) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn census_is_deterministic() {
        let a = cyclotomic_census(13).unwrap();
        let b = cyclotomic_census(13).unwrap();
        assert_eq!(a.records, b.records);
        assert_eq!(a.counts_by_length, b.counts_by_length);
        assert_eq!(a.per_frobenius, b.per_frobenius);
    }

    #[test]
    fn merge_is_order_insensitive() {
        let table = census_table(11).unwrap();
        let set = ConjectureSet::all();
        let mut forward = Vec::new();
        for f in [1u64, 3, 5, 7, 9, 11] {
            forward.push(census_slice(f, &table, &set).unwrap());
        }
        let mut backward = forward.clone();
        backward.reverse();
        let a = merge_slices(11, forward, &set);
        let b = merge_slices(11, backward, &set);
        assert_eq!(a.records, b.records);
        assert_eq!(a.per_frobenius, b.per_frobenius);
    }

    #[test]
    fn conjectures_hold_on_small_range() {
        let report = verify_conjectures(21, ConjectureSet::all()).unwrap();
        assert_eq!(report.conjectures.len(), 4);
        for outcome in &report.conjectures {
            assert!(outcome.verified(), "{}", outcome.conjecture);
            assert_eq!(outcome.checked, report.total_cyclotomic);
        }
    }
}
