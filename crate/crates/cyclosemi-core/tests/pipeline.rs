//! Cross-module integration: the full pipeline from generators to census
//! records, driven through the public API only.

use cyclosemi_core::arith;
use cyclosemi_core::cyclotomy::{
    default_exponent_bound, exponent_sequence_exact, exponent_sequence_truncated,
    factor_semigroup_polynomial, hilbert_numerator_truncated, is_cyclotomic, polynomial_length,
    semigroup_polynomial,
};
use cyclosemi_core::enumeration::{
    census_slice, census_table, cyclotomic_census, enumerate_symmetric_with_frobenius,
    ConjectureSet,
};
use cyclosemi_core::polynomials::IntPoly;
use cyclosemi_core::structure::{detect_gluings, is_complete_intersection};
use cyclosemi_core::NumericalSemigroup;

#[test]
fn analysis_pipeline_is_internally_consistent() {
    for f in (1..=21u64).step_by(2) {
        for s in enumerate_symmetric_with_frobenius(f).unwrap() {
            let p = semigroup_polynomial(&s);
            assert_eq!(p.degree(), Some(f as usize + 1));
            assert_eq!(p.eval(1).unwrap(), 1);
            assert!(p.is_palindromic().unwrap(), "{s}");

            // P_S = (1 - x) H_trunc + x^(F+2)
            let one_minus_x = IntPoly::from_coeffs(vec![1, -1]);
            let via_hilbert = one_minus_x
                .mul(&hilbert_numerator_truncated(&s, f as usize + 1))
                .unwrap()
                .add(&IntPoly::monomial(1, f as usize + 2))
                .unwrap();
            assert_eq!(via_hilbert, p, "{s}");

            let fact = factor_semigroup_polynomial(&s).unwrap();
            assert_eq!(fact.reconstruct().unwrap(), p, "{s}");
            let factor_degree: usize = fact
                .factors()
                .iter()
                .map(|&(d, m)| arith::totient(d).unwrap() as usize * m as usize)
                .sum();
            assert_eq!(
                factor_degree + fact.remainder().degree().unwrap_or(0),
                f as usize + 1,
                "{s}"
            );

            if is_cyclotomic(&s) {
                let exact = exponent_sequence_exact(&s).unwrap();
                let bound = default_exponent_bound(&s);
                let truncated = exponent_sequence_truncated(&s, bound).unwrap();
                for j in 1..=bound {
                    assert_eq!(exact.get(j), truncated.get(j), "{s} at {j}");
                }
                let length: i64 = exact
                    .entries()
                    .map(|(j, e)| e * arith::divisor_count(j).unwrap() as i64)
                    .sum();
                assert_eq!(length, polynomial_length(&s).unwrap() as i64, "{s}");
            }

            if let Some(tree) = is_complete_intersection(&s) {
                assert_eq!(tree.betti_multiset(), s.betti_elements(), "{s}");
                assert!(is_cyclotomic(&s), "complete intersections are cyclotomic: {s}");
            }

            for g in detect_gluings(&s) {
                assert_eq!(g.left_part.len() + g.right_part.len(), s.embedding_dim(), "{s}");
                assert_eq!(arith::factorize(g.a1).unwrap().value(), g.a1);
                assert!(g.left.contains(g.a2) && g.right.contains(g.a1), "{s}");
            }
        }
    }
}

#[test]
fn census_slices_match_direct_recomputation() {
    let table = census_table(17).unwrap();
    for f in (1..=17u64).step_by(2) {
        let slice = census_slice(f, &table, &ConjectureSet::all()).unwrap();
        let symmetric = enumerate_symmetric_with_frobenius(f).unwrap();
        assert_eq!(slice.symmetric_count, symmetric.len() as u64);
        let cyclotomic: Vec<&NumericalSemigroup> =
            symmetric.iter().filter(|s| is_cyclotomic(s)).collect();
        assert_eq!(slice.records.len(), cyclotomic.len());
        for record in &slice.records {
            let s = NumericalSemigroup::from_generators(&record.min_gens).unwrap();
            assert_eq!(polynomial_length(&s).unwrap(), record.length);
            assert_eq!(is_complete_intersection(&s).is_some(), record.complete_intersection);
        }
        for cx in slice.counterexamples.values() {
            assert!(cx.is_empty());
        }
    }
}

#[test]
fn census_totals_stay_in_step_with_slice_sums() {
    let report = cyclotomic_census(17).unwrap();
    let from_slices: u64 = report.per_frobenius.iter().map(|s| s.cyclotomic).sum();
    assert_eq!(report.total_cyclotomic, from_slices);
    let sym_from_slices: u64 = report.per_frobenius.iter().map(|s| s.symmetric).sum();
    assert_eq!(report.total_symmetric, sym_from_slices);
}
