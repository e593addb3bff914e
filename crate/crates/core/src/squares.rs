//! Complete-squares structure of a square presentation and the
//! `(A-word)(B-word)` normal form.
//!
//! A relator `x1 y1 x2 y2` (x in family A, y in family B) is a square. Reading
//! it from each of its four corners gives an identity `a b = b~ a~`; the
//! presentation is a complete VH-T presentation when every pair `(a, b)` of
//! signed letters occurs at exactly one corner.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::presentations::{validate_presentation, Presentation};
use crate::words::{free_reduce, invert_word, Alphabet, Family, Letter, Sign, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SquareError {
    #[error("presentation is not a square presentation: {0:?}")]
    NotSquarePresentation(Vec<String>),
    #[error("{} corner pairs are not covered by any square", .0.len())]
    IncompleteSquares(Vec<(Letter, Letter)>),
    #[error("{} corner pairs are covered more than once", .0.len())]
    AmbiguousSquares(Vec<((Letter, Letter), Vec<usize>)>),
    #[error("word contains letters of family B")]
    NotPureA,
}

/// One corner reading `a b = b~ a~` of a square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Corner {
    a: Letter,
    b: Letter,
    a_out: Letter,
    b_out: Letter,
}

fn corners(relator: &Word) -> [Corner; 4] {
    let l = relator.letters();
    // rotate so the reading starts with an A letter
    let (x1, y1, x2, y2) = if l[0].family == Family::A {
        (l[0], l[1], l[2], l[3])
    } else {
        (l[1], l[2], l[3], l[0])
    };
    [
        Corner {
            a: x1,
            b: y1,
            a_out: x2.inverse(),
            b_out: y2.inverse(),
        },
        Corner {
            a: x2,
            b: y2,
            a_out: x1.inverse(),
            b_out: y1.inverse(),
        },
        Corner {
            a: x2.inverse(),
            b: y1.inverse(),
            a_out: x1,
            b_out: y2,
        },
        Corner {
            a: x1.inverse(),
            b: y2.inverse(),
            a_out: x2,
            b_out: y1,
        },
    ]
}

type Table = Vec<(Letter, Letter)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareStructure {
    alphabet: Alphabet,
    m: usize,
    n: usize,
    /// `(a, b) -> (a~, b~)` with `a b = b~ a~`
    table_ab: Table,
    /// `(b, a) -> (a', b')` with `b a = a' b'`
    table_ba: Table,
    /// inverse of `table_ab`: `(a~, b~) -> (a, b)`
    table_ab_inv: Table,
    /// inverse of `table_ba`: `(a', b') -> (b, a)`, stored as `(a, b)` key order
    table_ba_inv: Table,
    square_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VhtReport {
    pub complete: bool,
    pub square_count: usize,
    pub corner_pairs_seen: usize,
    pub duplicates: Vec<((Letter, Letter), Vec<usize>)>,
    pub missing: Vec<(Letter, Letter)>,
    /// Validation diagnostics for relators that are not squares.
    pub problems: Vec<String>,
}

struct Coverage {
    m: usize,
    n: usize,
    slots: Vec<Vec<(usize, Corner)>>,
    squares: usize,
}

impl Coverage {
    fn collect(p: &Presentation) -> Coverage {
        let m = p.alphabet.rank(Family::A);
        let n = p.alphabet.rank(Family::B);
        let mut slots = vec![Vec::new(); 4 * m * n];
        let mut squares = 0;
        for (i, r) in p.relators.iter().enumerate() {
            let l = r.letters();
            let is_square = l.len() == 4
                && (0..4).all(|k| l[k].family != l[(k + 1) % 4].family)
                && l.iter().all(|&x| p.alphabet.contains(x));
            if !is_square {
                continue;
            }
            squares += 1;
            for c in corners(r) {
                slots[c.a.point(m) * 2 * n + c.b.point(n)].push((i, c));
            }
        }
        Coverage {
            m,
            n,
            slots,
            squares,
        }
    }

    fn key(&self, slot: usize) -> (Letter, Letter) {
        let two_n = 2 * self.n;
        (
            Letter::from_point(Family::A, slot / two_n, self.m),
            Letter::from_point(Family::B, slot % two_n, self.n),
        )
    }

    fn missing(&self) -> Vec<(Letter, Letter)> {
        (0..self.slots.len())
            .filter(|&s| self.slots[s].is_empty())
            .map(|s| self.key(s))
            .collect()
    }

    fn duplicates(&self) -> Vec<((Letter, Letter), Vec<usize>)> {
        (0..self.slots.len())
            .filter(|&s| self.slots[s].len() > 1)
            .map(|s| (self.key(s), self.slots[s].iter().map(|&(i, _)| i).collect()))
            .collect()
    }
}

pub fn build_square_structure(p: &Presentation) -> Result<SquareStructure, SquareError> {
    let report = validate_presentation(p);
    if !report.ok() {
        return Err(SquareError::NotSquarePresentation(report.problems));
    }
    let cov = Coverage::collect(p);
    let duplicates = cov.duplicates();
    if !duplicates.is_empty() {
        return Err(SquareError::AmbiguousSquares(duplicates));
    }
    let missing = cov.missing();
    if !missing.is_empty() {
        return Err(SquareError::IncompleteSquares(missing));
    }
    let (m, n) = (cov.m, cov.n);
    let size = 4 * m * n;
    let placeholder = (Letter::a(0, Sign::Pos), Letter::b(0, Sign::Pos));
    let mut table_ab = vec![placeholder; size];
    let mut table_ba = vec![placeholder; size];
    let mut table_ab_inv = vec![placeholder; size];
    let mut table_ba_inv = vec![placeholder; size];
    let idx = |a: Letter, b: Letter| a.point(m) * 2 * n + b.point(n);
    for slot in &cov.slots {
        let (_, c) = slot[0];
        table_ab[idx(c.a, c.b)] = (c.a_out, c.b_out);
        table_ab_inv[idx(c.a_out, c.b_out)] = (c.a, c.b);
        // b~ a~ = a b
        table_ba[idx(c.a_out, c.b_out)] = (c.a, c.b);
        table_ba_inv[idx(c.a, c.b)] = (c.a_out, c.b_out);
    }
    Ok(SquareStructure {
        alphabet: p.alphabet.clone(),
        m,
        n,
        table_ab,
        table_ba,
        table_ab_inv,
        table_ba_inv,
        square_count: cov.squares,
    })
}

pub fn vh_t_report(p: &Presentation) -> VhtReport {
    let validation = validate_presentation(p);
    let cov = Coverage::collect(p);
    let duplicates = cov.duplicates();
    let missing = cov.missing();
    let corner_pairs_seen = cov.slots.iter().filter(|s| !s.is_empty()).count();
    let complete = validation.ok()
        && duplicates.is_empty()
        && missing.is_empty()
        && corner_pairs_seen == cov.slots.len();
    VhtReport {
        complete,
        square_count: cov.squares,
        corner_pairs_seen,
        duplicates,
        missing,
        problems: validation.problems,
    }
}

/// A group element written as a reduced A-word followed by a reduced B-word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub a_part: Word,
    pub b_part: Word,
}

impl NormalForm {
    pub fn is_identity(&self) -> bool {
        self.a_part.is_empty() && self.b_part.is_empty()
    }

    pub fn to_word(&self) -> Word {
        self.a_part.concat(&self.b_part)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RewriteStrategy {
    /// Append letters one at a time, pushing each A-letter through the
    /// accumulated B-part.
    Incremental,
    /// Always rewrite the leftmost `b a` redex.
    Leftmost,
    /// Always rewrite the rightmost `b a` redex.
    Rightmost,
}

/// Sum over B-letters of the number of A-letters to their right.
pub fn disorder(word: &Word) -> usize {
    let mut a_seen = 0;
    let mut total = 0;
    for l in word.letters().iter().rev() {
        match l.family {
            Family::A => a_seen += 1,
            Family::B => total += a_seen,
        }
    }
    total
}

impl SquareStructure {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn ranks(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn square_count(&self) -> usize {
        self.square_count
    }

    fn idx(&self, a: Letter, b: Letter) -> usize {
        debug_assert_eq!(a.family, Family::A);
        debug_assert_eq!(b.family, Family::B);
        a.point(self.m) * 2 * self.n + b.point(self.n)
    }

    /// `(a, b) -> (a~, b~)` with `a b = b~ a~`.
    pub fn table_ab(&self, a: Letter, b: Letter) -> (Letter, Letter) {
        self.table_ab[self.idx(a, b)]
    }

    /// `(b, a) -> (a', b')` with `b a = a' b'`.
    pub fn table_ba(&self, b: Letter, a: Letter) -> (Letter, Letter) {
        self.table_ba[self.idx(a, b)]
    }

    /// Inverse of [`SquareStructure::table_ab`].
    pub fn table_ab_inv(&self, a_out: Letter, b_out: Letter) -> (Letter, Letter) {
        self.table_ab_inv[self.idx(a_out, b_out)]
    }

    /// Inverse of [`SquareStructure::table_ba`]: `(a', b') -> (b, a)`.
    pub fn table_ba_inv(&self, a_out: Letter, b_out: Letter) -> (Letter, Letter) {
        let (a, b) = self.table_ba_inv[self.idx(a_out, b_out)];
        (b, a)
    }

    pub fn normal_form(&self, word: &Word) -> NormalForm {
        self.normal_form_with(word, RewriteStrategy::Incremental)
    }

    pub fn normal_form_with(&self, word: &Word, strategy: RewriteStrategy) -> NormalForm {
        match strategy {
            RewriteStrategy::Incremental => self.incremental(word),
            RewriteStrategy::Leftmost => self.rewrite(word, false),
            RewriteStrategy::Rightmost => self.rewrite(word, true),
        }
    }

    fn incremental(&self, word: &Word) -> NormalForm {
        let mut a_part: Vec<Letter> = Vec::new();
        let mut b_part: Vec<Letter> = Vec::new();
        for &x in word.letters() {
            match x.family {
                Family::B => push_reduced(&mut b_part, x),
                Family::A => {
                    let mut cur = x;
                    for b in b_part.iter_mut().rev() {
                        let (a_out, b_out) = self.table_ba(*b, cur);
                        *b = b_out;
                        cur = a_out;
                    }
                    debug_assert!(Word::new(b_part.clone()).is_reduced());
                    push_reduced(&mut a_part, cur);
                }
            }
        }
        NormalForm {
            a_part: Word::new(a_part),
            b_part: Word::new(b_part),
        }
    }

    fn rewrite(&self, word: &Word, rightmost: bool) -> NormalForm {
        let mut w = free_reduce(word).into_letters();
        loop {
            let mut redexes = (0..w.len().saturating_sub(1))
                .filter(|&i| w[i].family == Family::B && w[i + 1].family == Family::A);
            let pos = if rightmost {
                redexes.next_back()
            } else {
                redexes.next()
            };
            let Some(i) = pos else { break };
            let before = if cfg!(debug_assertions) {
                disorder(&Word::new(w.clone()))
            } else {
                0
            };
            let (a_out, b_out) = self.table_ba(w[i], w[i + 1]);
            w[i] = a_out;
            w[i + 1] = b_out;
            w = free_reduce(&Word::new(w)).into_letters();
            debug_assert!(disorder(&Word::new(w.clone())) < before);
        }
        let split = w.iter().position(|l| l.family == Family::B).unwrap_or(w.len());
        let b_part = w.split_off(split);
        NormalForm {
            a_part: Word::new(w),
            b_part: Word::new(b_part),
        }
    }

    /// The `(B-word)(A-word)` factorization, returned as `(b_part, a_part)`.
    pub fn ba_normal_form(&self, word: &Word) -> (Word, Word) {
        let nf = self.normal_form(&invert_word(word));
        (invert_word(&nf.b_part), invert_word(&nf.a_part))
    }

    pub fn is_trivial_element(&self, word: &Word) -> bool {
        self.normal_form(word).is_identity()
    }

    /// Normal form of `b^-1 u b` for a pure A-word `u`.
    pub fn conjugate_by_vertical(&self, u: &Word, b: Letter) -> Result<NormalForm, SquareError> {
        if !u.is_pure(Family::A) || b.family != Family::B {
            return Err(SquareError::NotPureA);
        }
        let mut letters = vec![b.inverse()];
        letters.extend_from_slice(u.letters());
        letters.push(b);
        Ok(self.normal_form(&Word::new(letters)))
    }

    /// Number of distinct `table_ab` entries contributed by each relator.
    pub fn corner_counts(p: &Presentation) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for (i, r) in p.relators.iter().enumerate() {
            if r.len() != 4 {
                continue;
            }
            let cs = corners(r);
            let mut keys: Vec<_> = cs.iter().map(|c| (c.a, c.b)).collect();
            keys.sort();
            keys.dedup();
            out.insert(i, keys.len());
        }
        out
    }
}

fn push_reduced(v: &mut Vec<Letter>, x: Letter) {
    match v.last() {
        Some(&last) if last.is_inverse_of(x) => {
            v.pop();
        }
        _ => v.push(x),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{catalog, CatalogName};
    use crate::words::parse_word;

    fn p(s: &SquareStructure, text: &str) -> Word {
        parse_word(text, s.alphabet()).unwrap()
    }

    #[test]
    fn gamma1_structure() {
        let s = build_square_structure(&catalog(CatalogName::Gamma1)).unwrap();
        assert_eq!(s.square_count(), 25);
        assert_eq!(s.table_ab.len(), 100);
        let (a, b) = s.table_ab(Letter::a(0, Sign::Pos), Letter::b(0, Sign::Pos));
        assert_eq!((a, b), (Letter::a(1, Sign::Pos), Letter::b(1, Sign::Pos)));
    }

    #[test]
    fn wise_structure() {
        let s = build_square_structure(&catalog(CatalogName::WiseW)).unwrap();
        assert_eq!(s.square_count(), 12);
        assert_eq!(s.table_ab.len(), 48);
    }

    #[test]
    fn forced_collision_is_ambiguous() {
        let mut g = catalog(CatalogName::Gamma1);
        g.relators[1] = g.relators[0].clone();
        assert!(matches!(
            build_square_structure(&g),
            Err(SquareError::AmbiguousSquares(_))
        ));
    }

    #[test]
    fn removal_leaves_four_gaps() {
        let mut g = catalog(CatalogName::Gamma1);
        g.relators.pop();
        let r = vh_t_report(&g);
        assert!(!r.complete);
        assert_eq!(r.missing.len(), 4);
        assert_eq!(r.corner_pairs_seen, 96);
        assert!(matches!(
            build_square_structure(&g),
            Err(SquareError::IncompleteSquares(m)) if m.len() == 4
        ));
    }

    #[test]
    fn degenerate_square_rejected() {
        // a1 b1 a1 b1 reads the corner (a1, b1) twice
        let a = Alphabet::standard(1, 1);
        let pres = Presentation::new(a.clone(), vec![parse_word("a1 b1 a1 b1", &a).unwrap()]);
        assert!(matches!(
            build_square_structure(&pres),
            Err(SquareError::AmbiguousSquares(_))
        ));
    }

    #[test]
    fn reports_for_catalog() {
        for name in CatalogName::ALL {
            let r = vh_t_report(&catalog(name));
            assert!(r.complete, "{name}");
        }
        let r = vh_t_report(&catalog(CatalogName::Gamma3));
        assert_eq!((r.square_count, r.corner_pairs_seen), (25, 100));
    }

    #[test]
    fn orientation_tables_consistent() {
        for name in CatalogName::ALL {
            let s = build_square_structure(&catalog(name)).unwrap();
            for a in s.alphabet().signed_letters(Family::A) {
                for b in s.alphabet().signed_letters(Family::B) {
                    let (at, bt) = s.table_ab(a, b);
                    assert_eq!(s.table_ba(bt, at), (a, b));
                    assert_eq!(s.table_ab_inv(at, bt), (a, b));
                    let (bb, aa) = s.table_ba_inv(a, b);
                    assert_eq!(s.table_ba(bb, aa), (a, b));
                }
            }
        }
    }

    #[test]
    fn every_catalog_square_has_four_corners() {
        for name in CatalogName::ALL {
            let counts = SquareStructure::corner_counts(&catalog(name));
            assert!(counts.values().all(|&c| c == 4));
        }
    }

    #[test]
    fn normal_form_examples() {
        let s = build_square_structure(&catalog(CatalogName::Gamma1)).unwrap();
        let nf = s.normal_form(&p(&s, "b2 a2"));
        assert_eq!(s.alphabet().format_word(&nf.a_part), "a1");
        assert_eq!(s.alphabet().format_word(&nf.b_part), "b1");
        assert!(s.normal_form(&p(&s, "a1 A1 b3 B3")).is_identity());
        assert!(s.is_trivial_element(&catalog(CatalogName::Gamma1).relators[0]));
    }

    #[test]
    fn ba_form_round_trip() {
        let s = build_square_structure(&catalog(CatalogName::Gamma2)).unwrap();
        let w = p(&s, "a1 b2 a3 B4 a5 b1");
        let (b, a) = s.ba_normal_form(&w);
        assert!(b.is_pure(Family::B) && a.is_pure(Family::A));
        assert_eq!(s.normal_form(&b.concat(&a)), s.normal_form(&w));
    }

    #[test]
    fn conjugation_rejects_mixed_words() {
        let s = build_square_structure(&catalog(CatalogName::Gamma3)).unwrap();
        let u = p(&s, "a1 b1");
        assert_eq!(
            s.conjugate_by_vertical(&u, Letter::b(0, Sign::Pos)),
            Err(SquareError::NotPureA)
        );
        let nf = s
            .conjugate_by_vertical(&Word::empty(), Letter::b(2, Sign::Neg))
            .unwrap();
        assert!(nf.is_identity());
    }

    #[test]
    fn non_square_presentation_rejected() {
        let a = Alphabet::standard(1, 1);
        let pres = Presentation::new(a.clone(), vec![parse_word("a1 b1 a1", &a).unwrap()]);
        assert!(matches!(
            build_square_structure(&pres),
            Err(SquareError::NotSquarePresentation(_))
        ));
    }
}
