//! The verification pipeline for the three kernels and its JSON certificates.
//!
//! A certificate lists machine facts (`checked`), facts obtained from other
//! facts by a stated implication (`derived`), and the external theorems the
//! headline results rest on (`cited`, in `external_premises`).

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cosetenum::{
    identify_small_group, normal_closure_index_with, parity_kernel_table,
    reidemeister_schreier_with_counts, todd_coxeter_with, EnumerationLimits, QuotientReport,
    Strategy, StructureTag,
};
use crate::localgroups::{
    classify_local_group, horizontal_local_group, vertical_local_group, LocalClassification, Side,
};
use crate::presentations::{catalog, CatalogConstants, CatalogName, Presentation};
use crate::squares::{build_square_structure, vh_t_report, SquareStructure};
use crate::words::{invert_word, parity_image, Family, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("no group with index {0}; expected 1, 2 or 3")]
    UnknownGroup(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Checked,
    Derived,
    Cited,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fact {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub passed: bool,
    pub data: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Premise {
    pub citation: String,
    pub quote: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ConsistentWithPaper,
    /// Ids of the facts that failed.
    Discrepancy(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub group: String,
    pub facts: Vec<Fact>,
    pub external_premises: Vec<Premise>,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn fact(&self, id: &str) -> Option<&Fact> {
        self.facts.iter().find(|f| f.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// Shape of an amalgam `F_p *_{F_q} F_p` with `F_q` of index `factor_index`
/// in each factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AmalgamShape {
    pub factor_rank: u64,
    pub edge_rank: u64,
    pub factor_index: u64,
}

impl AmalgamShape {
    /// Splitting along one tree factor of a complete `(2m, 2n)` complex: the
    /// factors have rank `2n - 1` and the edge group has index `2m` in them.
    pub fn for_ranks(m: u64, n: u64) -> AmalgamShape {
        let factor_rank = (2 * n).saturating_sub(1);
        let factor_index = 2 * m;
        AmalgamShape {
            factor_rank,
            edge_rank: 1 + factor_index * factor_rank.saturating_sub(1),
            factor_index,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 * (1 - self.factor_rank as i64) - (1 - self.edge_rank as i64)
    }

    /// Nielsen–Schreier: `q - 1 = index * (p - 1)`.
    pub fn index_consistent(&self) -> bool {
        self.factor_rank > 1
            && self.edge_rank >= 1
            && (self.edge_rank - 1).is_multiple_of(self.factor_rank - 1)
            && (self.edge_rank - 1) / (self.factor_rank - 1) == self.factor_index
    }
}

/// `r1..r12` of `gamma` agree with Wise's relators over the sub-alphabet
/// `a1..a4, b1..b3`, and Wise's presentation is complete on its own.
pub fn embedding_check_w(gamma: &Presentation) -> bool {
    let wise = catalog(CatalogName::WiseW);
    if gamma.relators.len() < wise.relators.len() {
        return false;
    }
    let (m, n) = (wise.alphabet.rank(Family::A), wise.alphabet.rank(Family::B));
    let same = gamma
        .relators
        .iter()
        .zip(&wise.relators)
        .all(|(g, w)| {
            g.letters().iter().all(|l| l.index < if l.family == Family::A { m } else { n })
                && gamma.alphabet.format_word(g) == wise.alphabet.format_word(w)
        });
    same && vh_t_report(&wise).complete
}

pub fn kernel_membership(u: &Word) -> bool {
    parity_image(u).is_zero()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AprimeFailure {
    pub element: String,
    pub conjugator: String,
    pub a_part: String,
    pub b_part: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AprimeReport {
    pub checks: usize,
    pub failures: Vec<AprimeFailure>,
}

impl AprimeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The listed words together with their inverses.
pub fn symmetrize(words: &[Word]) -> Vec<Word> {
    let mut out = words.to_vec();
    out.extend(words.iter().map(invert_word));
    out
}

/// For each `u` in `set` and each signed B-letter `b`, `b^-1 u b` must have
/// empty vertical part and horizontal part in `set`.
pub fn aprime_closure_report(s: &SquareStructure, set: &[Word]) -> AprimeReport {
    let alphabet = s.alphabet();
    let mut checks = 0;
    let mut failures = Vec::new();
    for u in set {
        for b in alphabet.signed_letters(Family::B) {
            checks += 1;
            let ok = match s.conjugate_by_vertical(u, b) {
                Ok(nf) if nf.b_part.is_empty() && set.contains(&nf.a_part) => None,
                Ok(nf) => Some((nf.a_part, nf.b_part)),
                Err(_) => Some((Word::empty(), Word::empty())),
            };
            if let Some((a_part, b_part)) = ok {
                failures.push(AprimeFailure {
                    element: alphabet.format_word(u),
                    conjugator: alphabet.token(b),
                    a_part: alphabet.format_word(&a_part),
                    b_part: alphabet.format_word(&b_part),
                });
            }
        }
    }
    AprimeReport { checks, failures }
}

/// The closure check for the standard `A'` (ten words with inverses).
pub fn aprime_closure_check(s: &SquareStructure) -> bool {
    let set = symmetrize(&CatalogConstants::standard().aprime);
    aprime_closure_report(s, &set).passed()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub presentation: i64,
    pub cover_from_counts: Option<i64>,
    pub schreier_generators: Option<usize>,
    pub subgroup_generators: Option<usize>,
    pub subgroup_relators: Option<usize>,
    pub amalgam: AmalgamShape,
    pub amalgam_transposed: AmalgamShape,
    pub amalgam_euler: i64,
    pub passed: bool,
}

/// Euler characteristic bookkeeping for the index-4 parity kernel.
pub fn euler_report(gamma: &Presentation) -> EulerReport {
    let m = gamma.alphabet.rank(Family::A) as u64;
    let n = gamma.alphabet.rank(Family::B) as u64;
    let chi = gamma.euler_characteristic();
    let rs = parity_kernel_table(gamma)
        .and_then(|t| reidemeister_schreier_with_counts(gamma, &t))
        .ok();
    let amalgam = AmalgamShape::for_ranks(m, n);
    let amalgam_transposed = AmalgamShape::for_ranks(n, m);
    let cover = rs.as_ref().map(|(_, c)| c.cover_euler_characteristic());
    let sub_chi = rs.as_ref().map(|(p, _)| p.euler_characteristic());
    let passed = cover == Some(4 * chi)
        && sub_chi == Some(4 * chi)
        && m >= 1
        && n >= 1
        && amalgam.index_consistent()
        && amalgam_transposed.index_consistent()
        && amalgam.euler_characteristic() == 4 * chi
        && amalgam_transposed.euler_characteristic() == 4 * chi;
    EulerReport {
        presentation: chi,
        cover_from_counts: cover,
        schreier_generators: rs.as_ref().map(|(_, c)| c.schreier_generators),
        subgroup_generators: rs.as_ref().map(|(p, _)| p.alphabet.generator_count()),
        subgroup_relators: rs.as_ref().map(|(_, c)| c.relators),
        amalgam,
        amalgam_transposed,
        amalgam_euler: amalgam.euler_characteristic(),
        passed,
    }
}

pub fn euler_characteristics_check(gamma: &Presentation) -> bool {
    euler_report(gamma).passed
}

/// Local-group classifications claimed for `gamma_i`, horizontal then vertical.
pub fn claimed_local_classification(i: usize) -> Option<[LocalClassification; 2]> {
    let alt = LocalClassification {
        order: 1814400,
        transitive: true,
        two_transitive: true,
        is_alternating: true,
        is_symmetric: false,
        suborbits: 2,
    };
    match i {
        1 | 2 => Some([alt.clone(), alt]),
        3 => Some([
            LocalClassification {
                order: 3840,
                transitive: true,
                two_transitive: false,
                is_alternating: false,
                is_symmetric: false,
                suborbits: 3,
            },
            LocalClassification {
                order: 3628800,
                transitive: true,
                two_transitive: true,
                is_alternating: false,
                is_symmetric: true,
                suborbits: 2,
            },
        ]),
        _ => None,
    }
}

/// Order of `gamma_i / <<w>>`.
pub fn claimed_closure_index(i: usize) -> Option<usize> {
    match i {
        1 | 3 => Some(4),
        2 => Some(8),
        _ => None,
    }
}

fn side_word(side: Side) -> &'static str {
    match side {
        Side::Horizontal => "horizontal",
        Side::Vertical => "vertical",
    }
}

struct Builder {
    facts: Vec<Fact>,
    premises: Vec<Premise>,
}

impl Builder {
    fn fact(&mut self, id: &str, status: Status, passed: bool, statement: String, data: Value) -> bool {
        self.facts.push(Fact {
            id: id.to_string(),
            statement,
            status,
            passed,
            data,
        });
        passed
    }

    fn cite(&mut self, citation: &str, quote: &str) {
        self.premises.push(Premise {
            citation: citation.to_string(),
            quote: quote.to_string(),
        });
    }
}

fn quotient_data(q: &QuotientReport) -> Value {
    json!({
        "order": q.order,
        "structure_tag": q.structure_tag.to_string(),
        "abelian": q.abelian,
        "element_orders": q.element_orders.iter().map(|(k, v)| json!([k, v])).collect::<Vec<_>>(),
    })
}

pub fn theorem_report(i: usize, limits: EnumerationLimits) -> Result<Certificate, AnalysisError> {
    let name = CatalogName::gamma(i).ok_or(AnalysisError::UnknownGroup(i))?;
    let gamma = catalog(name);
    let wise = catalog(CatalogName::WiseW);
    let constants = CatalogConstants::standard();
    let alphabet = gamma.alphabet.clone();
    let mut b = Builder {
        facts: Vec::new(),
        premises: Vec::new(),
    };

    let vht = vh_t_report(&gamma);
    b.fact(
        "vht.complete",
        Status::Checked,
        vht.complete && vht.square_count == 25 && vht.corner_pairs_seen == 100,
        format!("{name}: every pair (a, b) of signed letters is the corner of exactly one of the squares"),
        json!({
            "squares": vht.square_count,
            "corner_pairs": vht.corner_pairs_seen,
            "duplicates": vht.duplicates.len(),
            "missing": vht.missing.len(),
        }),
    );
    let wvht = vh_t_report(&wise);
    b.fact(
        "vht.wise_w",
        Status::Checked,
        wvht.complete && wvht.square_count == 12 && wvht.corner_pairs_seen == 48,
        "wiseW: complete square presentation on 4 + 3 generators".into(),
        json!({"squares": wvht.square_count, "corner_pairs": wvht.corner_pairs_seen}),
    );
    b.fact(
        "embedding.wise_w",
        Status::Checked,
        embedding_check_w(&gamma),
        format!("{name}: relators r1..r12 coincide with Wise's relators over a1..a4, b1..b3"),
        json!({"shared_relators": 12}),
    );

    let relators_even = gamma.relators.iter().all(|r| parity_image(r).is_zero());
    let gens_ok = gamma.alphabet.generators().all(|g| {
        let p = parity_image(&Word::new(vec![g]));
        match g.family {
            Family::A => (p.a_parity, p.b_parity) == (1, 0),
            Family::B => (p.a_parity, p.b_parity) == (0, 1),
        }
    });
    b.fact(
        "parity.homomorphism",
        Status::Checked,
        relators_even && gens_ok,
        format!("{name}: the parity map onto Z/2 x Z/2 kills every relator and is onto"),
        json!({"relators": gamma.relators.len(), "all_relators_even": relators_even}),
    );

    let claims = claimed_local_classification(i).expect("i in range");
    let squares = build_square_structure(&gamma).ok();
    let mut local_ok = [false; 2];
    for (k, side) in [Side::Horizontal, Side::Vertical].into_iter().enumerate() {
        let classification = squares.as_ref().map(|s| {
            let action = match side {
                Side::Horizontal => horizontal_local_group(s),
                Side::Vertical => vertical_local_group(s),
            };
            classify_local_group(&action)
        });
        let claim = &claims[k];
        let (id, sub_id) = match side {
            Side::Horizontal => ("local.horizontal", "suborbits.horizontal"),
            Side::Vertical => ("local.vertical", "suborbits.vertical"),
        };
        let matches = classification.as_ref().is_some_and(|c| {
            c.order == claim.order
                && c.transitive == claim.transitive
                && c.two_transitive == claim.two_transitive
                && c.is_alternating == claim.is_alternating
                && c.is_symmetric == claim.is_symmetric
        });
        local_ok[k] = matches;
        let label = if claim.is_alternating {
            "A10".to_string()
        } else if claim.is_symmetric {
            "S10".to_string()
        } else {
            format!("a transitive, not 2-transitive group of order {}", claim.order)
        };
        b.fact(
            id,
            Status::Checked,
            matches,
            format!("{name}: the {} local group is {label}", side_word(side)),
            serde_json::to_value(&classification).expect("serializable"),
        );
        let sub = classification.as_ref().map(|c| c.suborbits);
        b.fact(
            sub_id,
            Status::Checked,
            sub == Some(claim.suborbits),
            format!(
                "{name}: a point stabilizer of the {} local group has {} orbits",
                side_word(side),
                claim.suborbits
            ),
            json!({"suborbits": sub}),
        );
    }

    let expected_index = claimed_closure_index(i).expect("i in range");
    let indices: Vec<(Strategy, Result<usize, String>)> = [Strategy::HltLookahead, Strategy::Felsch]
        .into_iter()
        .map(|s| {
            (
                s,
                normal_closure_index_with(&gamma, &constants.w, limits, s).map_err(|e| e.to_string()),
            )
        })
        .collect();
    let index_value = match (&indices[0].1, &indices[1].1) {
        (Ok(h), Ok(f)) if h == f => Some(*h),
        _ => None,
    };
    let index_ok = b.fact(
        "closure.index",
        Status::Checked,
        index_value == Some(expected_index),
        format!(
            "{name}: adding w = a2 a1^-1 a3 a4^-1 as a relator gives a group of order {expected_index} (HLT and Felsch agree)"
        ),
        json!({
            "hlt": indices[0].1.as_ref().map_err(Clone::clone).map(|v| json!(v)).unwrap_or_else(|e| json!(e)),
            "felsch": indices[1].1.as_ref().map_err(Clone::clone).map(|v| json!(v)).unwrap_or_else(|e| json!(e)),
            "max_cosets": limits.max_cosets,
        }),
    );

    let quotient = todd_coxeter_with(
        &gamma.with_relator(constants.w.clone()),
        &[],
        limits,
        Strategy::HltLookahead,
    )
    .ok()
    .and_then(|t| identify_small_group(&t).ok());
    let (quotient_ok, quotient_statement) = match i {
        2 => (
            quotient.as_ref().is_some_and(|q| q.order == 8),
            format!("{name}/<<w>> has order 8; its structure is reported as computed"),
        ),
        _ => (
            quotient
                .as_ref()
                .is_some_and(|q| q.structure_tag == StructureTag::KleinFour),
            format!("{name}/<<w>> is the Klein four-group Z/2 x Z/2"),
        ),
    };
    b.fact(
        "closure.quotient",
        Status::Checked,
        quotient_ok,
        quotient_statement,
        quotient.as_ref().map(quotient_data).unwrap_or(Value::Null),
    );

    let w_in = kernel_membership(&constants.w);
    b.fact(
        "kernel.w_in_lambda",
        Status::Checked,
        w_in,
        format!("w has parity (0, 0), so w and its normal closure in {name} lie in the index-4 kernel"),
        json!({"parity": parity_image(&constants.w).to_string()}),
    );

    match i {
        1 | 3 => {
            b.fact(
                "derived.closure_equals_kernel",
                Status::Derived,
                index_ok && w_in,
                format!(
                    "<<w>> is contained in the kernel and both have index 4 in {name}, hence <<w>> equals the kernel"
                ),
                json!({"from": ["closure.index", "kernel.w_in_lambda"]}),
            );
        }
        _ => {
            let ok = index_ok && w_in && index_value.is_some_and(|k| k % 4 == 0 && k / 4 == 2);
            b.fact(
                "derived.kernel_index_two",
                Status::Derived,
                ok,
                "<<w>> has index 8 in gamma2 and lies in the index-4 kernel, so it has index 2 in the kernel; the kernel is not simple".into(),
                json!({"from": ["closure.index", "kernel.w_in_lambda"], "index_in_kernel": index_value.map(|k| k / 4)}),
            );
        }
    }

    let euler = euler_report(&gamma);
    b.fact(
        "euler.characteristic",
        Status::Checked,
        euler.passed
            && euler.cover_from_counts == Some(64)
            && euler.amalgam
                == AmalgamShape {
                    factor_rank: 9,
                    edge_rank: 81,
                    factor_index: 10,
                },
        "the index-4 kernel has Euler characteristic 4 - 40 + 100 = 64 = 4 (1 - 10 + 25), matching (1-9)+(1-9)-(1-81) for F9 *_F81 F9 with 10 = (81-1)/(9-1)".into(),
        serde_json::to_value(&euler).expect("serializable"),
    );

    if i == 3 {
        let s = squares.as_ref();
        let set = symmetrize(&constants.aprime);
        let report = s.map(|s| aprime_closure_report(s, &set));
        b.fact(
            "aprime.closure",
            Status::Checked,
            report.as_ref().is_some_and(|r| r.passed() && r.checks == 100),
            "for every a' in A' (with inverses) and every signed b-letter, b^-1 a' b is again in A'".into(),
            json!({
                "checks": report.as_ref().map(|r| r.checks),
                "failures": report.as_ref().map(|r| r.failures.len()),
            }),
        );
        let a5_4 = constants.aprime[4].clone();
        let nf = s.map(|s| s.normal_form(&a5_4));
        b.fact(
            "nonsimple.a5_4_nontrivial",
            Status::Checked,
            nf.as_ref()
                .is_some_and(|nf| !nf.a_part.is_empty() && nf.b_part.is_empty()),
            "a5^4 has a nonempty pure-A normal form, so it is a nontrivial element".into(),
            json!({"a_part": nf.as_ref().map(|nf| alphabet.format_word(&nf.a_part))}),
        );
        let witness = &constants.witness;
        let wnf = s.map(|s| s.normal_form(witness));
        b.fact(
            "nonsimple.witness",
            Status::Checked,
            kernel_membership(witness) && wnf.as_ref().is_some_and(|nf| !nf.b_part.is_empty()),
            format!(
                "the witness {} lies in the kernel and has a nonempty vertical normal-form part",
                alphabet.format_word(witness)
            ),
            json!({
                "witness": alphabet.format_word(witness),
                "parity": parity_image(witness).to_string(),
                "b_part": wnf.as_ref().map(|nf| alphabet.format_word(&nf.b_part)),
            }),
        );
    }

    b.cite(
        "Wise, Main Theorem 5.5",
        "w is a nontrivial element of W lying in every finite-index subgroup of W",
    );
    b.cite(
        "Bridson-Haefliger, Proposition II.4.14(1)",
        "the inclusion of the W square complex into the complex of gamma_i is locally isometric, so W embeds in gamma_i",
    );
    b.cite(
        "Wise, Theorem I.1.18",
        "with sufficiently transitive local groups the index-4 kernel splits in two ways as F9 *_F81 F9",
    );
    if i == 1 || i == 2 {
        b.cite(
            "Burger-Mozes, Theorem 4.1 and Corollary 5.4",
            "an irreducible cocompact lattice in Aut(T10) x Aut(T10) with 2-transitive local actions has no nontrivial normal subgroup of infinite index",
        );
    }
    if i == 2 {
        b.cite(
            "simplicity of <<w>> in gamma2",
            "<<w>> is a simple group splitting as F17 *_F161 F17; not machine-checked here",
        );
    }
    if i == 3 {
        b.cite(
            "A'-closure implies A' lies in ker(pr2)",
            "a set of horizontal words closed under conjugation by all vertical letters acts trivially on the vertical tree",
        );
        b.cite(
            "ker(pr2) and vertical normal forms",
            "an element with nonempty vertical normal-form part moves the base vertex of the vertical tree, so it is outside ker(pr2); hence the normal closure of a5^4 in the kernel is proper",
        );
        b.cite(
            "Burger-Mozes, Propositions 3.1.2 and 3.3.2",
            "no nontrivial element acts trivially on the first tree factor",
        );
    }

    let failed: Vec<String> = b
        .facts
        .iter()
        .filter(|f| !f.passed && f.status != Status::Cited)
        .map(|f| f.id.clone())
        .collect();
    Ok(Certificate {
        group: name.to_string(),
        facts: b.facts,
        external_premises: b.premises,
        verdict: if failed.is_empty() {
            Verdict::ConsistentWithPaper
        } else {
            Verdict::Discrepancy(failed)
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{parse_word, Alphabet};

    #[test]
    fn amalgam_shape_for_catalog() {
        let s = AmalgamShape::for_ranks(5, 5);
        assert_eq!((s.factor_rank, s.edge_rank, s.factor_index), (9, 81, 10));
        assert!(s.index_consistent());
        assert_eq!(s.euler_characteristic(), 64);
    }

    #[test]
    fn embedding_examples() {
        assert!(embedding_check_w(&catalog(CatalogName::Gamma1)));
        assert!(embedding_check_w(&catalog(CatalogName::Gamma3)));
        let mut g = catalog(CatalogName::Gamma1);
        g.relators[4] = parse_word("a5 b5 A5 B5", &g.alphabet).unwrap();
        assert!(!embedding_check_w(&g));
    }

    #[test]
    fn kernel_examples() {
        let a = Alphabet::standard(5, 5);
        assert!(kernel_membership(&parse_word("a2 A1 a3 A4", &a).unwrap()));
        assert!(!kernel_membership(&parse_word("a1", &a).unwrap()));
        assert!(kernel_membership(&parse_word("b1 B2", &a).unwrap()));
    }

    #[test]
    fn aprime_examples() {
        let g3 = build_square_structure(&catalog(CatalogName::Gamma3)).unwrap();
        assert!(aprime_closure_check(&g3));
        let g1 = build_square_structure(&catalog(CatalogName::Gamma1)).unwrap();
        assert!(!aprime_closure_check(&g1));
        let r = aprime_closure_report(&g1, &symmetrize(&CatalogConstants::standard().aprime));
        assert_eq!(r.checks, 100);
        assert_eq!(r.failures.len(), 44);
        assert!(aprime_closure_report(&g1, &[]).passed());
    }

    #[test]
    fn euler_for_catalog_and_product() {
        for name in CatalogName::GAMMAS {
            let r = euler_report(&catalog(name));
            assert!(r.passed);
            assert_eq!(r.presentation, 16);
            assert_eq!(r.cover_from_counts, Some(64));
            assert_eq!(r.subgroup_generators, Some(37));
        }
        // F3 x F3: 3 + 3 generators, 9 commuting squares
        let a = Alphabet::standard(3, 3);
        let relators = (1..=3)
            .flat_map(|i| (1..=3).map(move |j| format!("a{i} b{j} A{i} B{j}")))
            .map(|s| parse_word(&s, &a).unwrap())
            .collect();
        let p = Presentation::new(a, relators);
        let r = euler_report(&p);
        assert_eq!(r.presentation, 4);
        assert_eq!(r.cover_from_counts, Some(16));
        assert_eq!(
            r.amalgam,
            AmalgamShape {
                factor_rank: 5,
                edge_rank: 25,
                factor_index: 6
            }
        );
        assert!(r.passed);
    }

    #[test]
    fn degenerate_alphabet_does_not_panic() {
        let a = Alphabet::standard(2, 0);
        let p = Presentation::new(a, vec![]);
        assert!(!euler_report(&p).passed);
    }

    #[test]
    fn unknown_group_index() {
        assert_eq!(
            theorem_report(4, EnumerationLimits::default()),
            Err(AnalysisError::UnknownGroup(4))
        );
    }

    #[test]
    fn limit_exceeded_is_a_failed_fact() {
        let c = theorem_report(2, EnumerationLimits { max_cosets: 50, max_steps: 1000 }).unwrap();
        let f = c.fact("closure.index").unwrap();
        assert!(!f.passed);
        assert!(f.data["hlt"].as_str().unwrap().contains("index unknown"));
        assert!(matches!(c.verdict, Verdict::Discrepancy(ref ids) if ids.contains(&"closure.index".to_string())));
    }
}
