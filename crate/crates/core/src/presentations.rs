//! Presentations, the built-in catalog and the `.sqp` text format.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::words::{parse_word, Alphabet, Family, Word, WordError};

#[derive(Debug, Error)]
pub enum PresentationError {
    #[error("unknown catalog name {0:?} (expected gamma1, gamma2, gamma3 or wiseW)")]
    UnknownCatalogName(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unknown generator token {token:?}")]
    UnknownGenerator { line: usize, token: String },
    #[error("line {line}: duplicate generator {name:?}")]
    DuplicateGenerator { line: usize, name: String },
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CatalogName {
    Gamma1,
    Gamma2,
    Gamma3,
    WiseW,
}

impl CatalogName {
    pub const ALL: [CatalogName; 4] = [
        CatalogName::Gamma1,
        CatalogName::Gamma2,
        CatalogName::Gamma3,
        CatalogName::WiseW,
    ];

    pub const GAMMAS: [CatalogName; 3] =
        [CatalogName::Gamma1, CatalogName::Gamma2, CatalogName::Gamma3];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::Gamma1 => "gamma1",
            CatalogName::Gamma2 => "gamma2",
            CatalogName::Gamma3 => "gamma3",
            CatalogName::WiseW => "wiseW",
        }
    }

    pub fn gamma(i: usize) -> Option<CatalogName> {
        match i {
            1 => Some(CatalogName::Gamma1),
            2 => Some(CatalogName::Gamma2),
            3 => Some(CatalogName::Gamma3),
            _ => None,
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = PresentationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CatalogName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| PresentationError::UnknownCatalogName(s.to_string()))
    }
}

/// Relators `r1..r12`, common to all three groups and forming Wise's complex.
pub const SHARED_RELATORS: [&str; 12] = [
    "a1 b1 A2 B2",
    "a1 b2 A1 B1",
    "a1 b3 A2 B3",
    "a1 B3 A2 b2",
    "a1 B1 A2 b3",
    "a2 b2 A2 B1",
    "a3 b1 A4 B2",
    "a3 b2 A3 B1",
    "a3 b3 A4 B3",
    "a3 B3 A4 b2",
    "a3 B1 A4 b3",
    "a4 b2 A4 B1",
];

pub const GAMMA1_RELATORS: [&str; 13] = [
    "a1 b4 a2 B5",
    "a1 b5 A5 b4",
    "a1 B5 a3 B4",
    "a1 B4 a3 b5",
    "a2 b4 A2 b5",
    "a2 b5 a4 B4",
    "a3 b4 a4 b5",
    "a3 B5 a4 b4",
    "a4 B5 A5 B4",
    "a5 b1 A5 b3",
    "a5 b2 A5 B5",
    "a5 b3 A5 B1",
    "a5 b4 A5 B2",
];

pub const GAMMA2_RELATORS: [&str; 13] = [
    "a1 b4 A4 b5",
    "a1 b5 a2 B5",
    "a1 B5 a3 B4",
    "a1 B4 a2 b4",
    "a2 b5 A3 b4",
    "a2 B4 a4 B5",
    "a3 b4 a4 b4",
    "a3 b5 A5 b5",
    "a4 b5 a5 b5",
    "a5 b1 A5 b3",
    "a5 b2 A5 B1",
    "a5 b3 A5 B4",
    "a5 b4 A5 B2",
];

pub const GAMMA3_RELATORS: [&str; 13] = [
    "a1 b4 a1 b5",
    "a1 B5 a2 B5",
    "a1 B4 A4 B4",
    "a2 b4 a2 b5",
    "a2 B4 A3 B4",
    "a3 b5 a4 B4",
    "a3 B5 A5 B5",
    "a3 B4 a4 b5",
    "a4 B5 a5 B5",
    "a5 b1 a5 b4",
    "a5 b2 A5 b3",
    "a5 b3 A5 b2",
    "a5 B4 a5 B1",
];

/// The generating permutations printed for the six local groups, in cycle
/// notation on 10 points. Used only for the strict comparison mode and as
/// permutation-group fixtures.
pub fn printed_local_generators(name: CatalogName, side: Family) -> Option<[&'static str; 5]> {
    use CatalogName::*;
    Some(match (name, side) {
        (Gamma1, Family::A) => [
            "(7,8)(9,10)",
            "(1,2)(3,4)",
            "(1,2)(3,4)(7,8)(9,10)",
            "(1,8,4,5)(2,7,3,10)",
            "(1,9,4,8)(3,10,6,7)",
        ],
        (Gamma2, Family::A) => [
            "(7,8)(9,10)",
            "(1,2)(3,4)",
            "(1,2)(3,4)(7,8)(9,10)",
            "(1,8,4,9)(2,10,7,3)",
            "(1,9,8,6,4)(2,7,5,3,10)",
        ],
        (Gamma3, Family::A) => [
            "(5,6)(7,8)(9,10)",
            "(1,2)(3,4)",
            "(1,2)(3,4)(7,8)(9,10)",
            "(1,4,8,9,2,3,7,10)(5,6)",
            "(1,9,2,10)(3,5,7)(4,6,8)",
        ],
        (Gamma1, Family::B) => [
            "(1,2)(4,6,7,5)(8,10,9)",
            "(1,2,3)(4,5,7,6)(9,10)",
            "(1,2)(4,5,7,6)(8,10,9)",
            "(1,2,3)(4,6,7,5)(9,10)",
            "(1,3,10,8)(2,4,6,9,7,5)",
        ],
        (Gamma2, Family::B) => [
            "(1,2)(4,6)(8,10,9)",
            "(1,2,3)(5,7)(9,10)",
            "(1,2)(4,6,5,7)(8,10,9)",
            "(1,2,3)(4,6,5,7)(9,10)",
            "(1,2,4,3,10,9,7,8)(5,6)",
        ],
        (Gamma3, Family::B) => [
            "(1,2)(4,7,5,6)(8,10,9)",
            "(1,2,3)(4,7,5,6)(9,10)",
            "(1,2)(4,5,6,7)(8,10,9)",
            "(1,2,3)(4,5,6,7)(9,10)",
            "(1,7)(2,8)(3,9)(4,10)(5,6)",
        ],
        (WiseW, _) => return None,
    })
}

/// Raw relator token strings of a catalog entry, in table order.
pub fn catalog_relator_strings(name: CatalogName) -> Vec<&'static str> {
    let extra: &[&str] = match name {
        CatalogName::Gamma1 => &GAMMA1_RELATORS,
        CatalogName::Gamma2 => &GAMMA2_RELATORS,
        CatalogName::Gamma3 => &GAMMA3_RELATORS,
        CatalogName::WiseW => &[],
    };
    SHARED_RELATORS.iter().chain(extra).copied().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub relators: Vec<Word>,
    pub name: Option<CatalogName>,
}

impl Presentation {
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Self {
        Presentation {
            alphabet,
            relators,
            name: None,
        }
    }

    /// The same group with `extra` appended as a relator. Drops the catalog identity.
    pub fn with_relator(&self, extra: Word) -> Self {
        let mut relators = self.relators.clone();
        relators.push(extra);
        Presentation::new(self.alphabet.clone(), relators)
    }

    pub fn euler_characteristic(&self) -> i64 {
        1 - self.alphabet.generator_count() as i64 + self.relators.len() as i64
    }

    /// Serialize in the `.sqp` format.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        out.push_str("a-generators:");
        for n in self.alphabet.a_names() {
            out.push(' ');
            out.push_str(n);
        }
        out.push_str("\nb-generators:");
        for n in self.alphabet.b_names() {
            out.push(' ');
            out.push_str(n);
        }
        out.push('\n');
        for r in &self.relators {
            out.push_str("relator: ");
            out.push_str(&self.alphabet.format_word(r));
            out.push('\n');
        }
        out
    }

    pub fn save(&self, path: &Path) -> Result<(), PresentationError> {
        std::fs::write(path, self.to_file_string()).map_err(|source| PresentationError::Io {
            path: path.display().to_string(),
            source,
        })
    }
}

pub fn builtin_presentation(name: &str) -> Result<Presentation, PresentationError> {
    Ok(catalog(name.parse()?))
}

pub fn catalog(name: CatalogName) -> Presentation {
    let alphabet = match name {
        CatalogName::WiseW => Alphabet::standard(4, 3),
        _ => Alphabet::standard(5, 5),
    };
    let relators = catalog_relator_strings(name)
        .into_iter()
        .map(|s| parse_word(s, &alphabet).expect("catalog relators parse"))
        .collect();
    Presentation {
        alphabet,
        relators,
        name: Some(name),
    }
}

/// Named elements used by the analysis pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogConstants {
    /// `a2 a1^-1 a3 a4^-1`
    pub w: Word,
    /// `(a1 a2^-1)^2, (a2^-1 a1)^2, (a3 a4^-1)^2, (a4^-1 a3)^2, a5^4`
    pub aprime: Vec<Word>,
    /// `b1 b2^-1`
    pub witness: Word,
}

pub const W_TEXT: &str = "a2 A1 a3 A4";
pub const WITNESS_TEXT: &str = "b1 B2";
pub const APRIME_TEXT: [&str; 5] = [
    "a1 A2 a1 A2",
    "A2 a1 A2 a1",
    "a3 A4 a3 A4",
    "A4 a3 A4 a3",
    "a5 a5 a5 a5",
];

impl CatalogConstants {
    /// Constants over the 5+5 alphabet of the three gamma presentations.
    pub fn standard() -> Self {
        let alphabet = Alphabet::standard(5, 5);
        let p = |s: &str| parse_word(s, &alphabet).expect("constant parses");
        CatalogConstants {
            w: p(W_TEXT),
            aprime: APRIME_TEXT.iter().map(|s| p(s)).collect(),
            witness: p(WITNESS_TEXT),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub relator_count: usize,
    pub all_length_four: bool,
    pub all_alternating: bool,
    /// Occurrences of each generator (either sign), keyed by name.
    pub generator_coverage: BTreeMap<String, usize>,
    pub problems: Vec<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.problems.is_empty()
    }
}

fn is_alternating(word: &Word) -> bool {
    let l = word.letters();
    l.len() == 4 && (0..4).all(|i| l[i].family != l[(i + 1) % 4].family)
}

pub fn validate_presentation(p: &Presentation) -> ValidationReport {
    let mut coverage: BTreeMap<String, usize> = BTreeMap::new();
    for g in p.alphabet.generators() {
        coverage.insert(p.alphabet.name(g.family, g.index).to_string(), 0);
    }
    let mut problems = Vec::new();
    let mut all_length_four = true;
    let mut all_alternating = true;
    for (i, r) in p.relators.iter().enumerate() {
        for &l in r.letters() {
            if p.alphabet.contains(l) {
                *coverage
                    .get_mut(p.alphabet.name(l.family, l.index))
                    .expect("covered") += 1;
            } else {
                problems.push(format!("relator r{}: letter out of alphabet", i + 1));
            }
        }
        if r.len() != 4 {
            all_length_four = false;
            all_alternating = false;
            problems.push(format!(
                "relator r{} ({}): length {} is not 4",
                i + 1,
                p.alphabet.format_word(r),
                r.len()
            ));
        } else if !is_alternating(r) {
            all_alternating = false;
            problems.push(format!(
                "relator r{} ({}): letters do not alternate between families",
                i + 1,
                p.alphabet.format_word(r)
            ));
        }
    }
    ValidationReport {
        relator_count: p.relators.len(),
        all_length_four,
        all_alternating,
        generator_coverage: coverage,
        problems,
    }
}

fn parse_names(rest: &str, line: usize) -> Result<Vec<String>, PresentationError> {
    let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(PresentationError::DuplicateGenerator {
                line,
                name: n.clone(),
            });
        }
    }
    Ok(names)
}

pub fn parse_presentation(text: &str) -> Result<Presentation, PresentationError> {
    let mut a_names: Option<(usize, Vec<String>)> = None;
    let mut b_names: Option<(usize, Vec<String>)> = None;
    let mut alphabet: Option<Alphabet> = None;
    let mut relators = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let (key, rest) = content.split_once(':').ok_or_else(|| PresentationError::Parse {
            line,
            message: format!("expected `key: value`, found {content:?}"),
        })?;
        match key.trim() {
            "a-generators" | "b-generators" => {
                if alphabet.is_some() {
                    return Err(PresentationError::Parse {
                        line,
                        message: "generator headers must precede relators".into(),
                    });
                }
                let slot = if key.trim() == "a-generators" {
                    &mut a_names
                } else {
                    &mut b_names
                };
                if slot.is_some() {
                    return Err(PresentationError::Parse {
                        line,
                        message: format!("repeated {} header", key.trim()),
                    });
                }
                *slot = Some((line, parse_names(rest, line)?));
            }
            "relator" => {
                if alphabet.is_none() {
                    alphabet = Some(build_alphabet(&a_names, &b_names, line)?);
                }
                let alpha = alphabet.as_ref().expect("just built");
                let word = parse_word(rest, alpha).map_err(|e| match e {
                    WordError::UnknownGenerator(token) => {
                        PresentationError::UnknownGenerator { line, token }
                    }
                    other => PresentationError::Parse {
                        line,
                        message: other.to_string(),
                    },
                })?;
                if word.is_empty() {
                    return Err(PresentationError::Parse {
                        line,
                        message: "empty relator".into(),
                    });
                }
                relators.push(word);
            }
            other => {
                return Err(PresentationError::Parse {
                    line,
                    message: format!("unknown key {other:?}"),
                })
            }
        }
    }
    let alphabet = match alphabet {
        Some(a) => a,
        None => build_alphabet(&a_names, &b_names, text.lines().count().max(1))?,
    };
    Ok(Presentation::new(alphabet, relators))
}

fn build_alphabet(
    a: &Option<(usize, Vec<String>)>,
    b: &Option<(usize, Vec<String>)>,
    line: usize,
) -> Result<Alphabet, PresentationError> {
    let (a_line, a) = a.as_ref().ok_or_else(|| PresentationError::Parse {
        line,
        message: "missing a-generators header".into(),
    })?;
    let (b_line, b) = b.as_ref().ok_or_else(|| PresentationError::Parse {
        line,
        message: "missing b-generators header".into(),
    })?;
    Alphabet::new(a, b).map_err(|e| match e {
        WordError::DuplicateGenerator(name) => PresentationError::DuplicateGenerator {
            line: *a_line.max(b_line),
            name,
        },
        other => PresentationError::Parse {
            line: *a_line.min(b_line),
            message: other.to_string(),
        },
    })
}

pub fn load_presentation(path: &Path) -> Result<Presentation, PresentationError> {
    let text = std::fs::read_to_string(path).map_err(|source| PresentationError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_presentation(&text)
}

/// Family pattern of a word, e.g. `ABAB`.
pub fn family_pattern(word: &Word) -> String {
    word.letters()
        .iter()
        .map(|l| match l.family {
            Family::A => 'A',
            Family::B => 'B',
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parity_image;

    #[test]
    fn catalog_shapes() {
        for name in CatalogName::GAMMAS {
            let p = catalog(name);
            assert_eq!(p.relators.len(), 25);
            assert_eq!(p.alphabet.rank(Family::A), 5);
            assert_eq!(p.alphabet.rank(Family::B), 5);
        }
        let w = catalog(CatalogName::WiseW);
        assert_eq!(w.relators.len(), 12);
        assert_eq!(w.alphabet.generator_count(), 7);
    }

    #[test]
    fn spot_check_table_entries() {
        let g1 = catalog(CatalogName::Gamma1);
        assert_eq!(g1.alphabet.format_word(&g1.relators[12]), "a1 b4 a2 B5");
        let g3 = catalog(CatalogName::Gamma3);
        assert_eq!(g3.alphabet.format_word(&g3.relators[24]), "a5 B4 a5 B1");
    }

    #[test]
    fn shared_relators_identical() {
        let g: Vec<_> = CatalogName::GAMMAS.iter().map(|&n| catalog(n)).collect();
        for i in 0..12 {
            assert_eq!(g[0].relators[i], g[1].relators[i]);
            assert_eq!(g[0].relators[i], g[2].relators[i]);
        }
    }

    #[test]
    fn catalog_validates_and_has_zero_parity() {
        for name in CatalogName::ALL {
            let p = catalog(name);
            let report = validate_presentation(&p);
            assert!(report.ok(), "{name}: {:?}", report.problems);
            for r in &p.relators {
                assert!(parity_image(r).is_zero());
            }
        }
    }

    #[test]
    fn validation_flags_malformed_relators() {
        let a = Alphabet::standard(5, 5);
        let short = Presentation::new(a.clone(), vec![parse_word("a1 b1 a2", &a).unwrap()]);
        let r = validate_presentation(&short);
        assert!(!r.all_length_four);
        assert!(!r.ok());
        let bad = Presentation::new(a.clone(), vec![parse_word("a1 a2 b1 b2", &a).unwrap()]);
        let r = validate_presentation(&bad);
        assert!(r.all_length_four);
        assert!(!r.all_alternating);
        assert!(r.problems[0].contains("r1"));
        // cyclic rotation starting with a B letter is fine
        let rot = Presentation::new(a.clone(), vec![parse_word("b1 A2 B2 a1", &a).unwrap()]);
        assert!(validate_presentation(&rot).ok());
    }

    #[test]
    fn coverage_counts() {
        let r = validate_presentation(&catalog(CatalogName::Gamma2));
        // an occurrence of a1^{+-1} supplies two of the 20 corners (a1^{+-1}, b)
        assert_eq!(r.generator_coverage.values().sum::<usize>(), 100);
        assert_eq!(r.generator_coverage["a1"], 10);
    }

    #[test]
    fn unknown_catalog_name() {
        assert!(matches!(
            builtin_presentation("gamma4"),
            Err(PresentationError::UnknownCatalogName(_))
        ));
    }

    #[test]
    fn file_round_trip() {
        for name in CatalogName::ALL {
            let p = catalog(name);
            let text = p.to_file_string();
            let back = parse_presentation(&text).unwrap();
            assert_eq!(back.alphabet, p.alphabet);
            assert_eq!(back.relators, p.relators);
            assert_eq!(back.to_file_string(), text);
        }
    }

    #[test]
    fn file_errors_carry_lines() {
        let text = "# comment\na-generators: a1 a2\nb-generators: b1 b2\n\nrelator: a1 b1 A2 B2\nrelator: a1 c9 A1 B1\n";
        match parse_presentation(text) {
            Err(PresentationError::UnknownGenerator { line, token }) => {
                assert_eq!(line, 6);
                assert_eq!(token, "c9");
            }
            other => panic!("unexpected {other:?}"),
        }
        let dup = "a-generators: a1 a1\nb-generators: b1\n";
        assert!(matches!(
            parse_presentation(dup),
            Err(PresentationError::DuplicateGenerator { line: 1, .. })
        ));
        let cross = "a-generators: a1\nb-generators: a1\n";
        assert!(matches!(
            parse_presentation(cross),
            Err(PresentationError::DuplicateGenerator { .. })
        ));
        assert!(matches!(
            parse_presentation("a-generators: a1\nbogus line\n"),
            Err(PresentationError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn headers_only() {
        let p = parse_presentation("a-generators: a1 a2\nb-generators: b1\n  \n").unwrap();
        assert!(p.relators.is_empty());
        assert_eq!(p.alphabet.generator_count(), 3);
    }

    #[test]
    fn comments_and_trailing_whitespace_ignored() {
        let p = catalog(CatalogName::WiseW);
        let mut text = String::from("# Wise's complex\n");
        for line in p.to_file_string().lines() {
            text.push_str(line);
            text.push_str("   \n");
        }
        let back = parse_presentation(&text).unwrap();
        assert_eq!(back.to_file_string(), p.to_file_string());
    }
}
