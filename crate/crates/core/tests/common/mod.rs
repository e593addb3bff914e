//! Independent oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use amalgams::words::{Alphabet, Family, Letter, Sign, Word};
use rand::Rng;

/// Every element of the group generated by `gens` (image vectors), by
/// breadth-first closure under right multiplication.
pub fn brute_force_closure(degree: usize, gens: &[Vec<usize>]) -> BTreeSet<Vec<usize>> {
    let identity: Vec<usize> = (0..degree).collect();
    let mut seen = BTreeSet::new();
    seen.insert(identity.clone());
    let mut queue = VecDeque::from([identity]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            // apply g, then s
            let h: Vec<usize> = g.iter().map(|&x| s[x]).collect();
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen
}

pub fn brute_force_orbit(point: usize, gens: &[Vec<usize>]) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([point]);
    let mut queue = VecDeque::from([point]);
    while let Some(x) = queue.pop_front() {
        for s in gens {
            if seen.insert(s[x]) {
                queue.push_back(s[x]);
            }
        }
    }
    seen
}

/// Permutation groups of degree at most 8, as 1-based cycle strings.
pub const FIXTURES: &[(&str, usize, &[&str])] = &[
    ("trivial", 1, &[]),
    ("c2", 2, &["(1,2)"]),
    ("s3", 3, &["(1,2)", "(1,2,3)"]),
    ("c4", 4, &["(1,2,3,4)"]),
    ("klein", 4, &["(1,2)(3,4)", "(1,3)(2,4)"]),
    ("d4", 4, &["(1,2,3,4)", "(1,3)"]),
    ("a4", 4, &["(1,2,3)", "(2,3,4)"]),
    ("s4", 4, &["(1,2)", "(1,2,3,4)"]),
    ("intransitive", 5, &["(1,2)", "(3,4,5)"]),
    ("d5", 5, &["(1,2,3,4,5)", "(2,5)(3,4)"]),
    ("f20", 5, &["(1,2,3,4,5)", "(2,3,5,4)"]),
    ("a5", 5, &["(1,2,3)", "(1,2,3,4,5)"]),
    ("s5", 5, &["(1,2)", "(1,2,3,4,5)"]),
    ("a6", 6, &["(1,2,3)", "(2,3,4,5,6)"]),
    ("s6", 6, &["(1,2)", "(1,2,3,4,5,6)"]),
    ("c7_by_c3", 7, &["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]),
    ("c2_wr_c3", 6, &["(1,2)", "(1,3,5)(2,4,6)"]),
    ("mixed8", 8, &["(2,3,4,5,6,7,8)", "(1,2)(3,5)(4,8)(6,7)"]),
    ("a8", 8, &["(1,2,3)", "(2,3,4,5,6,7,8)"]),
    ("s8", 8, &["(1,2)", "(1,2,3,4,5,6,7,8)"]),
    ("two_orbits", 8, &["(1,2,3,4)", "(5,6)(7,8)", "(5,7)"]),
];

pub fn random_letter<R: Rng>(rng: &mut R, alphabet: &Alphabet, family: Option<Family>) -> Letter {
    let family = family.unwrap_or(if rng.gen_bool(0.5) { Family::A } else { Family::B });
    let index = rng.gen_range(0..alphabet.rank(family));
    let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
    Letter::new(family, index, sign)
}

/// Not necessarily reduced: cancellations are part of what gets tested.
pub fn random_word<R: Rng>(rng: &mut R, alphabet: &Alphabet, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_letter(rng, alphabet, None)).collect()
}

pub fn random_pure_word<R: Rng>(rng: &mut R, alphabet: &Alphabet, family: Family, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_letter(rng, alphabet, Some(family))).collect()
}

/// A cyclic rotation of `r` or of its inverse.
pub fn random_relator_conjugate<R: Rng>(rng: &mut R, relators: &[Word]) -> Word {
    let r = &relators[rng.gen_range(0..relators.len())];
    let mut letters = r.letters().to_vec();
    if rng.gen_bool(0.5) {
        letters = letters.iter().rev().map(|l| l.inverse()).collect();
    }
    let k = rng.gen_range(0..letters.len().max(1));
    letters.rotate_left(k);
    Word::new(letters)
}

/// Image of a word under a homomorphism given by generator images (0-based
/// image vectors for positive generators, listed A then B). Words act left to right.
pub fn word_image(degree: usize, images: &[Vec<usize>], alphabet: &Alphabet, word: &Word) -> Vec<usize> {
    let inverses: Vec<Vec<usize>> = images
        .iter()
        .map(|g| {
            let mut inv = vec![0; g.len()];
            for (i, &x) in g.iter().enumerate() {
                inv[x] = i;
            }
            inv
        })
        .collect();
    let mut current: Vec<usize> = (0..degree).collect();
    for &l in word.letters() {
        let pos = alphabet.generator_position(Letter { sign: Sign::Pos, ..l });
        let s = match l.sign {
            Sign::Pos => &images[pos],
            Sign::Neg => &inverses[pos],
        };
        current = current.iter().map(|&x| s[x]).collect();
    }
    current
}
