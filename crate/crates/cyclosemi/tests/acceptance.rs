//! Acceptance suite: each test is one acceptance criterion, checked at the
//! exact tolerances, and prints a single pass line (visible with
//! `cargo test --test acceptance -- --nocapture`).

use std::sync::OnceLock;
use std::time::Instant;

use cyclosemi::parallel::{default_jobs, run_census};
use cyclosemi_core::arith::{self, is_prime};
use cyclosemi_core::cyclotomy::{
    self, exponent_sequence_exact, factor_semigroup_polynomial, is_cyclotomic,
    polynomial_length, semigroup_polynomial,
};
use cyclosemi_core::enumeration::{
    enumerate_all_with_frobenius, enumerate_symmetric_with_frobenius, CensusReport, Conjecture,
    ConjectureSet,
};
use cyclosemi_core::polynomials::{cyclotomic, IntPoly};
use cyclosemi_core::structure::{self, build_family_sek, CiSolver, Classification};
use cyclosemi_core::NumericalSemigroup;

const TABLE_1: [(u64, u64); 8] =
    [(1, 33), (2, 105), (3, 224), (4, 196), (5, 165), (6, 74), (7, 34), (8, 4)];

fn census_70() -> &'static CensusReport {
    static CENSUS: OnceLock<CensusReport> = OnceLock::new();
    CENSUS.get_or_init(|| {
        run_census(70, default_jobs(), ConjectureSet::none(), Vec::new(), |_| {})
            .expect("census runs")
    })
}

fn symmetric_up_to_40() -> &'static Vec<NumericalSemigroup> {
    static CORPUS: OnceLock<Vec<NumericalSemigroup>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        (1..=39u64)
            .step_by(2)
            .flat_map(|f| enumerate_symmetric_with_frobenius(f).expect("enumeration runs"))
            .collect()
    })
}

fn pass(criterion: u32, what: &str, started: Instant) {
    println!("criterion {criterion} PASS — {what} ({:.2?})", started.elapsed());
}

#[test]
fn criterion_1_census_reproduces_the_length_histogram() {
    let t = Instant::now();
    let report = census_70();
    assert_eq!(report.frobenius_max, 70);
    assert_eq!(report.total_cyclotomic, 835, "total cyclotomic count");
    for (length, expected) in TABLE_1 {
        assert_eq!(
            report.counts_by_length.get(&length).copied().unwrap_or(0),
            expected,
            "count at length {length}"
        );
    }
    assert_eq!(report.counts_by_length.len(), TABLE_1.len(), "no lengths beyond 8");
    pass(1, "census F<=70 counts 33/105/224/196/165/74/34/4, total 835", t);
}

#[test]
fn criterion_2_length_one_cohort_is_the_prime_pair_family() {
    let t = Instant::now();
    // independent oracle: prime pairs p < q with (p-1)(q-1) <= 71
    let primes: Vec<u64> = (2..=72).filter(|&n| is_prime(n)).collect();
    let mut by_p = std::collections::BTreeMap::new();
    let mut expected = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if (p - 1) * (q - 1) <= 71 {
                expected.push(vec![p, q]);
                *by_p.entry(p).or_insert(0u64) += 1;
            }
        }
    }
    expected.sort();
    assert_eq!(by_p.get(&2), Some(&19));
    assert_eq!(by_p.get(&3), Some(&9));
    assert_eq!(by_p.get(&5), Some(&4));
    assert_eq!(by_p.get(&7), Some(&1));
    assert_eq!(expected.len(), 33);

    let mut cohort: Vec<Vec<u64>> = census_70()
        .records
        .iter()
        .filter(|r| r.length == 1)
        .map(|r| r.min_gens.clone())
        .collect();
    cohort.sort();
    assert_eq!(cohort, expected);
    pass(2, "the 33 length-1 semigroups are exactly the <p,q> with (p-1)(q-1) <= 71", t);
}

#[test]
fn criterion_3_conjecture_1_holds_up_to_70() {
    let t = Instant::now();
    let set = ConjectureSet { complete_intersection: true, ..ConjectureSet::none() };
    let report =
        run_census(70, default_jobs(), set, Vec::new(), |_| {}).expect("verification runs");
    let outcome = report
        .conjectures
        .iter()
        .find(|c| c.conjecture == Conjecture::CompleteIntersection)
        .expect("outcome present");
    assert_eq!(outcome.checked, 835);
    assert!(
        outcome.counterexamples.is_empty(),
        "counterexamples: {:?}",
        outcome.counterexamples
    );
    // the record flags double as the witness count
    assert!(report.records.iter().all(|r| r.complete_intersection));
    pass(3, "cyclotomic iff complete intersection at F<=70: 835 checked, 0 counterexamples", t);
}

#[test]
fn criterion_4_low_length_classification_over_the_census() {
    let t = Instant::now();
    let report = census_70();
    let low: Vec<_> = report.records.iter().filter(|r| r.length <= 2).collect();
    assert_eq!(low.len(), 138, "33 + 105 low-length records");
    for record in low {
        let tag = record.classification.expect("low-length record carries a tag");
        assert_ne!(tag, Classification::Violation, "record {:?}", record.min_gens);
        match (record.length, tag) {
            (1, Classification::Pq { .. }) => {}
            (2, Classification::Pq2 { .. }) | (2, Classification::Pq2Qr { .. }) => {}
            other => panic!("record {:?} has unexpected shape {other:?}", record.min_gens),
        }
        // reclassify from scratch and compare
        let s = NumericalSemigroup::from_generators(&record.min_gens).unwrap();
        assert_eq!(structure::classify_low_length(&s).unwrap(), tag);
        if let Classification::Pq2Qr { p, q, r } = tag {
            let base = NumericalSemigroup::from_generators(&[q, r]).unwrap();
            assert!(base.contains(p), "p must lie in <q,r> for {:?}", record.min_gens);
            let fact = factor_semigroup_polynomial(&s).unwrap();
            let mut expected = [(p * q, 1), (q * q * r, 1)];
            expected.sort_unstable();
            assert_eq!(fact.factors(), expected);
        }
    }
    pass(4, "all 138 length<=2 census records classify as <p,q>, <p,q^2> or <p,q^2,qr>", t);
}

#[test]
fn criterion_5_half_open_interval_family_is_not_cyclotomic() {
    let t = Instant::now();
    for k in 5..=20u64 {
        let gens: Vec<u64> = (k..=2 * k - 2).collect();
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let mut expected = vec![0i64; 2 * k as usize + 1];
        expected[0] = 1;
        expected[1] = -1;
        expected[k as usize] = 1;
        expected[2 * k as usize - 1] = -1;
        expected[2 * k as usize] = 1;
        assert_eq!(
            semigroup_polynomial(&s),
            IntPoly::from_coeffs(expected),
            "polynomial of k = {k}"
        );
        assert!(s.is_symmetric(), "k = {k}");
        assert!(!is_cyclotomic(&s), "k = {k}");
    }
    pass(5, "P of <k..2k-2> equals 1 - x + x^k - x^(2k-1) + x^(2k), never cyclotomic, k=5..20", t);
}

#[test]
fn criterion_6_sharpness_fixture() {
    let t = Instant::now();
    let s = NumericalSemigroup::from_generators(&[24, 25, 35, 36]).unwrap();
    let base = NumericalSemigroup::from_generators(&[5, 12]).unwrap();
    let expected = semigroup_polynomial(&base)
        .mul(&cyclotomic(72).unwrap())
        .unwrap()
        .mul(&cyclotomic(175).unwrap())
        .unwrap();
    assert_eq!(semigroup_polynomial(&s), expected);
    assert_eq!(polynomial_length(&s).unwrap(), 7);
    pass(6, "<24,25,35,36> has P_S = P_<12,5> * Phi_72 * Phi_175 and length 7", t);
}

#[test]
fn criterion_7_property_suites() {
    let t = Instant::now();

    // product of Phi_d over d | n is x^n - 1, for every n <= 500
    for n in 1..=500u64 {
        let mut prod = IntPoly::one();
        for d in arith::divisors(n).unwrap() {
            prod = prod.mul(&cyclotomic(d).unwrap()).unwrap();
        }
        assert_eq!(prod, IntPoly::x_pow_minus_one(n as usize), "n = {n}");
    }

    // substitution identity Phi_{n r^2}(x) = Phi_{n r}(x^r) for n r^2 <= 2000
    for r in 2..=44u64 {
        for n in 1..=2000 / (r * r) {
            assert_eq!(
                cyclotomic(n * r * r).unwrap(),
                cyclotomic(n * r).unwrap().compose_power(r as usize).unwrap(),
                "n = {n}, r = {r}"
            );
        }
    }

    // palindromy of Phi_n, and palindromic P_S iff symmetric S over the
    // brute-force enumeration at F <= 19
    for n in 2..=2000u64 {
        assert!(cyclotomic(n).unwrap().is_palindromic().unwrap(), "Phi_{n}");
    }
    for f in 1..=19u64 {
        for s in enumerate_all_with_frobenius(f).unwrap() {
            let p = semigroup_polynomial(&s);
            assert_eq!(p.is_palindromic().unwrap(), s.is_symmetric(), "{s}");
        }
    }

    // complete-intersection suites over every symmetric S with F <= 40
    let mut solver = CiSolver::new();
    let mut ci_count = 0u64;
    let mut cyclotomic_count = 0u64;
    for s in symmetric_up_to_40() {
        assert!(semigroup_polynomial(s).is_palindromic().unwrap(), "{s}");
        let witness = solver.decide(s);
        // the two complete-intersection oracles agree
        let by_presentation = s.minimal_presentation_size() == s.embedding_dim() as u64 - 1;
        assert_eq!(witness.is_some(), by_presentation, "{s}");
        // three symmetric generators always form a complete intersection
        if s.embedding_dim() == 3 {
            assert!(witness.is_some(), "{s}");
        }

        if let Some(tree) = &witness {
            ci_count += 1;
            let betti = tree.betti_multiset();
            assert_eq!(betti, s.betti_elements(), "{s}");
            // length identity and length inequality for complete intersections
            let length = polynomial_length(s).unwrap();
            let sum_b: u64 = betti.iter().map(|&b| arith::divisor_count(b).unwrap()).sum();
            let sum_n: u64 =
                s.min_gens().iter().map(|&n| arith::divisor_count(n).unwrap()).sum();
            assert_eq!(length, sum_b - sum_n + 1, "{s}");
            assert!(s.embedding_dim() as u64 <= length + 1, "{s}");
        }

        // gluing polynomial identity for every detected gluing, and gluing
        // preserves cyclotomicity in both directions
        let s_cyclotomic = is_cyclotomic(s);
        for g in structure::detect_gluings(s) {
            let base = NumericalSemigroup::from_generators(&[g.a1, g.a2]).unwrap();
            let product = semigroup_polynomial(&base)
                .mul(&semigroup_polynomial(&g.left).compose_power(g.a1 as usize).unwrap())
                .unwrap()
                .mul(&semigroup_polynomial(&g.right).compose_power(g.a2 as usize).unwrap())
                .unwrap();
            assert_eq!(product, semigroup_polynomial(s), "{s}");
            assert_eq!(s_cyclotomic, is_cyclotomic(&g.left) && is_cyclotomic(&g.right), "{s}");
        }

        // exponent-sequence behavior over the cyclotomic members
        if s_cyclotomic {
            cyclotomic_count += 1;
            let seq = exponent_sequence_exact(s).unwrap();
            assert_eq!(seq.sum(), 0, "{s}");
            assert_eq!(seq.get(1), 1, "{s}");
            let bound = cyclotomy::default_exponent_bound(s);
            for j in 2..=bound {
                if !s.contains(j) {
                    assert_eq!(seq.get(j), 0, "{s} gap {j}");
                } else if s.min_gens().contains(&j) {
                    assert_eq!(seq.get(j), -1, "{s} generator {j}");
                } else if s.factorizations(j).unwrap().len() == 1 {
                    assert_eq!(seq.get(j), 0, "{s} unique factorization {j}");
                }
            }
            let truncated = cyclotomy::exponent_sequence_truncated(s, bound).unwrap();
            for j in 1..=bound {
                assert_eq!(truncated.get(j), seq.get(j), "{s} at {j}");
            }
        }
    }
    assert!(ci_count >= cyclotomic_count);
    assert!(cyclotomic_count >= 1);
    pass(
        7,
        "identity suites hold (factor product, substitution, palindromy, lengths, gluings, CI oracles)",
        t,
    );
}

#[test]
fn census_at_50_is_the_restriction_of_the_census_at_70() {
    let report_50 =
        run_census(50, default_jobs(), ConjectureSet::none(), Vec::new(), |_| {}).unwrap();
    let restricted: Vec<_> =
        census_70().records.iter().filter(|r| r.frobenius <= 50).collect();
    assert_eq!(report_50.records.len(), restricted.len());
    for (a, b) in report_50.records.iter().zip(restricted) {
        assert_eq!(a, b);
    }
}

#[test]
fn criterion_8_enumeration_oracle_equivalence() {
    let t = Instant::now();
    for f in (1..=19u64).step_by(2) {
        let mut fast: Vec<Vec<u64>> = enumerate_symmetric_with_frobenius(f)
            .unwrap()
            .iter()
            .map(|s| s.gaps().to_vec())
            .collect();
        fast.sort();
        let mut brute: Vec<Vec<u64>> = enumerate_all_with_frobenius(f)
            .unwrap()
            .into_iter()
            .filter(|s| s.is_symmetric())
            .map(|s| s.gaps().to_vec())
            .collect();
        brute.sort();
        assert_eq!(fast, brute, "F = {f}");
    }
    pass(8, "symmetric backtracker equals brute-force filter for every odd F <= 19", t);
}

#[test]
fn criterion_9_family_constructor_invariants() {
    let t = Instant::now();
    for e in 2..=4u32 {
        for k in 1..=3u32 {
            let fam = build_family_sek(e, k, None).expect("family builds");
            assert_eq!(fam.semigroup.embedding_dim(), e as usize, "e = {e}, k = {k}");
            assert_eq!(fam.length, u64::from(e) + u64::from(k) - 2, "e = {e}, k = {k}");
            assert_eq!(fam.length, polynomial_length(&fam.semigroup).unwrap());
        }
    }
    pass(9, "family members satisfy e(S) = e and length e + k - 2 for e in 2..4, k in 1..3", t);
}
