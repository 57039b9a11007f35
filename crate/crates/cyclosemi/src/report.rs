//! Analysis reports and census output formats (JSON, CSV, text table).

use std::collections::BTreeMap;

use cyclosemi_core::cyclotomy::{
    self, default_exponent_bound, factor_semigroup_polynomial, semigroup_polynomial,
};
use cyclosemi_core::enumeration::CensusReport;
use cyclosemi_core::structure::{self, GluingTree};
use cyclosemi_core::{arith, Error, NumericalSemigroup, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SemigroupSummary {
    pub min_gens: Vec<u64>,
    pub frobenius: i64,
    pub gaps: Vec<u64>,
    pub genus: u64,
    pub embedding_dim: u64,
}

impl SemigroupSummary {
    pub fn new(s: &NumericalSemigroup) -> Self {
        SemigroupSummary {
            min_gens: s.min_gens().to_vec(),
            frobenius: s.frobenius(),
            gaps: s.gaps().to_vec(),
            genus: s.genus(),
            embedding_dim: s.embedding_dim() as u64,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorEntry {
    pub d: u64,
    pub mult: u32,
}

/// Gluing witness rendered as nested JSON; leaves are `{"leaf": true}` and
/// the root carries the Betti multiset.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GluingTreeJson {
    Node {
        a1: u64,
        a2: u64,
        left: Box<GluingTreeJson>,
        right: Box<GluingTreeJson>,
        #[serde(skip_serializing_if = "Option::is_none")]
        betti: Option<Vec<u64>>,
    },
    Leaf { leaf: bool },
}

impl GluingTreeJson {
    pub fn from_tree(tree: &GluingTree) -> Self {
        let mut out = Self::convert(tree);
        if let GluingTreeJson::Node { betti, .. } = &mut out {
            *betti = Some(tree.betti_multiset());
        }
        out
    }

    fn convert(tree: &GluingTree) -> Self {
        match tree {
            GluingTree::Leaf => GluingTreeJson::Leaf { leaf: true },
            GluingTree::Node { a1, a2, left, right } => GluingTreeJson::Node {
                a1: *a1,
                a2: *a2,
                left: Box::new(Self::convert(left)),
                right: Box::new(Self::convert(right)),
                betti: None,
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExponentSequenceJson {
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation_bound: Option<u64>,
    /// `(j, e_j)` pairs, ascending in `j`, zeros omitted.
    pub entries: Vec<(u64, i64)>,
}

/// Everything the `analyze` command reports about one semigroup.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub semigroup: SemigroupSummary,
    pub symmetric: bool,
    /// Coefficients of `P_S`, index = exponent.
    pub poly: Vec<i64>,
    pub cyclotomic: bool,
    pub factors: Vec<FactorEntry>,
    pub remainder: Vec<i64>,
    /// Number of irreducible factors with multiplicity; null when the
    /// polynomial is not a product of cyclotomics.
    pub length: Option<u64>,
    pub betti: Vec<u64>,
    pub complete_intersection: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gluing: Option<GluingTreeJson>,
    pub exponent_sequence: ExponentSequenceJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
}

/// Runs the full analysis pipeline over the semigroup generated by `gens`.
pub fn analyze(gens: &[u64], exp_bound: Option<u64>) -> Result<AnalysisReport> {
    let s = NumericalSemigroup::from_generators(gens)?;
    let p = semigroup_polynomial(&s);
    let fact = factor_semigroup_polynomial(&s)?;
    let symmetric = s.is_symmetric();
    assert_eq!(
        p.is_palindromic().unwrap_or(symmetric),
        symmetric,
        "a semigroup is symmetric exactly when its polynomial is palindromic"
    );
    let factor_degree: u64 = fact
        .factors()
        .iter()
        .map(|&(d, m)| arith::totient(d).unwrap() * u64::from(m))
        .sum();
    let remainder_degree = fact.remainder().degree().unwrap_or(0) as u64;
    assert_eq!(
        factor_degree + remainder_degree,
        (s.frobenius() + 1).max(0) as u64,
        "factor degrees must add up to deg P_S"
    );
    let length = fact.length();
    let witness = structure::is_complete_intersection(&s);
    let exponent_sequence = if fact.is_cyclotomic() {
        let e = cyclotomy::exponent_sequence_exact(&s)?;
        ExponentSequenceJson { exact: true, truncation_bound: None, entries: e.entries().collect() }
    } else {
        let bound = exp_bound.unwrap_or_else(|| default_exponent_bound(&s));
        let e = cyclotomy::exponent_sequence_truncated(&s, bound)?;
        ExponentSequenceJson {
            exact: false,
            truncation_bound: Some(bound),
            entries: e.entries().collect(),
        }
    };
    let classification = match length {
        Some(l) if (1..=2).contains(&l) => {
            Some(structure::classify_low_length(&s)?.to_string())
        }
        _ => None,
    };
    Ok(AnalysisReport {
        semigroup: SemigroupSummary::new(&s),
        symmetric,
        poly: p.coeffs().to_vec(),
        cyclotomic: fact.is_cyclotomic(),
        factors: fact.factors().iter().map(|&(d, mult)| FactorEntry { d, mult }).collect(),
        remainder: fact.remainder().coeffs().to_vec(),
        length,
        betti: s.betti_elements(),
        complete_intersection: witness.is_some(),
        gluing: witness.as_ref().map(GluingTreeJson::from_tree),
        exponent_sequence,
        classification,
    })
}

fn join(values: &[u64]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

fn render_tree(tree: &GluingTree) -> String {
    match tree {
        GluingTree::Leaf => "N".to_string(),
        GluingTree::Node { a1, a2, left, right } => format!(
            "({a1}*{} +_{} {a2}*{})",
            render_tree(left),
            a1 * a2,
            render_tree(right)
        ),
    }
}

impl AnalysisReport {
    /// Multi-line human-readable rendering for `--pretty`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        let s = &self.semigroup;
        let gens = s.min_gens.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        out.push_str(&format!("semigroup <{gens}>\n"));
        out.push_str(&format!("  frobenius number      {}\n", s.frobenius));
        out.push_str(&format!("  gaps (genus {})       {}\n", s.genus, join(&s.gaps)));
        out.push_str(&format!("  embedding dimension   {}\n", s.embedding_dim));
        out.push_str(&format!("  symmetric             {}\n", self.symmetric));
        out.push_str(&format!(
            "  P_S                   {}\n",
            cyclosemi_core::IntPoly::from_coeffs(self.poly.clone())
        ));
        out.push_str(&format!("  cyclotomic            {}\n", self.cyclotomic));
        if !self.factors.is_empty() {
            let factors = self
                .factors
                .iter()
                .map(|f| {
                    if f.mult == 1 {
                        format!("Phi_{}", f.d)
                    } else {
                        format!("Phi_{}^{}", f.d, f.mult)
                    }
                })
                .collect::<Vec<_>>()
                .join(" * ");
            out.push_str(&format!("  cyclotomic factors    {factors}\n"));
        }
        if !self.cyclotomic {
            out.push_str(&format!(
                "  non-cyclotomic part   {}\n",
                cyclosemi_core::IntPoly::from_coeffs(self.remainder.clone())
            ));
        }
        if let Some(l) = self.length {
            out.push_str(&format!("  polynomial length     {l}\n"));
        }
        out.push_str(&format!("  betti elements        {}\n", join(&self.betti)));
        out.push_str(&format!("  complete intersection {}\n", self.complete_intersection));
        if let Some(tag) = &self.classification {
            out.push_str(&format!("  classification        {tag}\n"));
        }
        let entries = self
            .exponent_sequence
            .entries
            .iter()
            .map(|(j, e)| format!("e_{j}={e}"))
            .collect::<Vec<_>>()
            .join(", ");
        let kind = if self.exponent_sequence.exact {
            "exact".to_string()
        } else {
            format!("truncated at {}", self.exponent_sequence.truncation_bound.unwrap_or(0))
        };
        out.push_str(&format!("  exponent sequence     {entries} ({kind})\n"));
        out
    }
}

/// Pretty rendering of a witness tree, e.g. `(2*(2*N +_6 3*N) +_14 7*N)`.
pub fn describe_gluing(tree: &GluingTree) -> String {
    render_tree(tree)
}

/// Histogram summary mirrored into JSON.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CensusSummary {
    pub frobenius_max: u64,
    pub total_symmetric: u64,
    pub total_cyclotomic: u64,
    pub counts_by_length: BTreeMap<u64, u64>,
}

impl CensusSummary {
    pub fn new(report: &CensusReport) -> Self {
        CensusSummary {
            frobenius_max: report.frobenius_max,
            total_symmetric: report.total_symmetric,
            total_cyclotomic: report.total_cyclotomic,
            counts_by_length: report.counts_by_length.clone(),
        }
    }
}

/// Census rows as semicolon-separated CSV with comma-joined generators.
pub fn census_csv(report: &CensusReport) -> String {
    let mut out = String::from("min_gens;frobenius;genus;length;ci;classification\n");
    for r in &report.records {
        let gens =
            r.min_gens.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        let tag = r.classification.map(|c| c.to_string()).unwrap_or_default();
        out.push_str(&format!(
            "{gens};{};{};{};{};{tag}\n",
            r.frobenius, r.genus, r.length, r.complete_intersection
        ));
    }
    out
}

/// Text table of the per-length counts.
pub fn census_histogram(report: &CensusReport) -> String {
    let lengths: Vec<u64> = report.counts_by_length.keys().copied().collect();
    let mut header = String::from("Length               ");
    let mut counts = String::from("Number of semigroups ");
    for l in &lengths {
        let n = report.counts_by_length[l];
        let width = n.to_string().len().max(l.to_string().len()) + 2;
        header.push_str(&format!("{:>width$}", l));
        counts.push_str(&format!("{:>width$}", n));
    }
    format!(
        "Cyclotomic numerical semigroups with Frobenius number at most {}, by polynomial length\n\n{header}\n{counts}\n\nTotal: {} cyclotomic among {} symmetric semigroups\n",
        report.frobenius_max, report.total_cyclotomic, report.total_symmetric
    )
}

/// Verification report lines, one per conjecture.
pub fn verification_lines(report: &CensusReport) -> String {
    let mut out = String::new();
    for outcome in &report.conjectures {
        if outcome.verified() {
            out.push_str(&format!(
                "VERIFIED: {} — {} cyclotomic semigroups checked, 0 counterexamples (F <= {})\n",
                outcome.conjecture, outcome.checked, report.frobenius_max
            ));
        } else {
            out.push_str(&format!(
                "FAILED: {} — {} counterexamples among {} checked (F <= {})\n",
                outcome.conjecture,
                outcome.counterexamples.len(),
                outcome.checked,
                report.frobenius_max
            ));
            for cx in &outcome.counterexamples {
                let gens = cx.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
                out.push_str(&format!("  <{gens}>\n"));
            }
        }
    }
    out
}

/// Coefficients as a compact JSON array, such as `[1,-1,1]`.
pub fn poly_json(coeffs: &[i64]) -> String {
    serde_json::to_string(coeffs).expect("serializing integers cannot fail")
}

/// Whether the report signals an arithmetic (rather than usage) problem.
pub fn is_arithmetic_error(e: &Error) -> bool {
    matches!(e, Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_cyclotomic_example() {
        let report = analyze(&[4, 6, 7], None).unwrap();
        assert!(report.cyclotomic);
        assert_eq!(report.length, Some(2));
        assert_eq!(report.semigroup.frobenius, 9);
        assert_eq!(report.poly, [1, -1, 0, 0, 1, -1, 1, 0, 0, -1, 1]);
        assert_eq!(report.betti, [12, 14]);
        assert!(report.complete_intersection);
        assert_eq!(report.classification.as_deref(), Some("PQ2QR(7,2,3)"));
        let factors: Vec<(u64, u32)> = report.factors.iter().map(|f| (f.d, f.mult)).collect();
        assert_eq!(factors, [(12, 1), (14, 1)]);
        assert!(report.exponent_sequence.exact);
    }

    #[test]
    fn analyze_non_cyclotomic_example() {
        let report = analyze(&[5, 6, 7, 8], None).unwrap();
        assert!(!report.cyclotomic);
        assert_eq!(report.length, None);
        assert_eq!(report.remainder.len(), 11); // degree 10
        assert!(!report.complete_intersection);
        assert!(report.gluing.is_none());
        assert!(!report.exponent_sequence.exact);
        assert_eq!(report.exponent_sequence.truncation_bound, Some(22));
    }

    #[test]
    fn analyze_rejects_bad_generators() {
        assert!(analyze(&[2, 4], None).is_err());
        assert!(analyze(&[], None).is_err());
    }

    #[test]
    fn analyze_full_semigroup() {
        let report = analyze(&[1], None).unwrap();
        assert!(report.cyclotomic);
        assert_eq!(report.length, Some(0));
        assert_eq!(report.poly, [1]);
        assert!(report.complete_intersection);
        assert!(matches!(report.gluing, Some(GluingTreeJson::Leaf { leaf: true })));
    }

    #[test]
    fn gluing_tree_json_shape() {
        let report = analyze(&[4, 6, 7], None).unwrap();
        let json = serde_json::to_value(report.gluing.unwrap()).unwrap();
        assert_eq!(json["a1"], 2);
        assert_eq!(json["a2"], 7);
        assert_eq!(json["left"]["a1"], 2);
        assert_eq!(json["left"]["a2"], 3);
        assert_eq!(json["left"]["left"]["leaf"], true);
        assert_eq!(json["right"]["leaf"], true);
        assert_eq!(json["betti"], serde_json::json!([12, 14]));
        assert!(json["left"].get("betti").is_none());
    }

    #[test]
    fn csv_and_histogram_shapes() {
        let report = cyclosemi_core::enumeration::cyclotomic_census(9).unwrap();
        let csv = census_csv(&report);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("min_gens;frobenius;genus;length;ci;classification"));
        assert_eq!(lines.next(), Some("2,3;1;1;1;true;PQ(2,3)"));
        let hist = census_histogram(&report);
        assert!(hist.contains("at most 9"));

        let summary = CensusSummary::new(&report);
        let round: CensusSummary =
            serde_json::from_str(&serde_json::to_string(&summary).unwrap()).unwrap();
        assert_eq!(round, summary);
    }

    #[test]
    fn pretty_report_mentions_the_basics() {
        let report = analyze(&[4, 6, 7], None).unwrap();
        let text = report.pretty();
        assert!(text.contains("semigroup <4,6,7>"));
        assert!(text.contains("Phi_12 * Phi_14"));
        assert!(text.contains("classification        PQ2QR(7,2,3)"));
    }
}
