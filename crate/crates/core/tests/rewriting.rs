mod common;

use amalgams::cosetenum::{coset_permutation_rep, todd_coxeter, EnumerationLimits};
use amalgams::presentations::{catalog, CatalogConstants, CatalogName};
use amalgams::squares::{build_square_structure, disorder, RewriteStrategy};
use amalgams::words::{free_reduce, invert_word, Family};
use common::{random_relator_conjugate, random_word, word_image};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const WORDS_PER_GROUP: usize = 1000;

#[test]
fn strategies_agree_on_random_words() {
    for name in CatalogName::ALL {
        let p = catalog(name);
        let s = build_square_structure(&p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ name as u64);
        for _ in 0..WORDS_PER_GROUP {
            let u = random_word(&mut rng, &p.alphabet, 40);
            let inc = s.normal_form_with(&u, RewriteStrategy::Incremental);
            let left = s.normal_form_with(&u, RewriteStrategy::Leftmost);
            let right = s.normal_form_with(&u, RewriteStrategy::Rightmost);
            assert_eq!(inc, left, "{name}: {}", p.alphabet.format_word(&u));
            assert_eq!(inc, right, "{name}: {}", p.alphabet.format_word(&u));
            assert!(inc.a_part.is_pure(Family::A) && inc.b_part.is_pure(Family::B));
            assert!(inc.a_part.is_reduced() && inc.b_part.is_reduced());
            assert_eq!(disorder(&inc.to_word()), 0);
        }
    }
}

#[test]
fn word_times_inverse_is_trivial() {
    for name in CatalogName::ALL {
        let p = catalog(name);
        let s = build_square_structure(&p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11 + name as u64);
        for _ in 0..WORDS_PER_GROUP {
            let u = random_word(&mut rng, &p.alphabet, 30);
            assert!(s.normal_form(&u.concat(&invert_word(&u))).is_identity());
            assert!(s.normal_form(&invert_word(&u).concat(&u)).is_identity());
        }
    }
}

#[test]
fn inserting_relators_preserves_normal_form() {
    for name in CatalogName::ALL {
        let p = catalog(name);
        let s = build_square_structure(&p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(23 + name as u64);
        for _ in 0..WORDS_PER_GROUP {
            let u = random_word(&mut rng, &p.alphabet, 30);
            let mut letters = u.letters().to_vec();
            for _ in 0..rng.gen_range(1..=3) {
                let at = rng.gen_range(0..=letters.len());
                let r = random_relator_conjugate(&mut rng, &p.relators);
                letters.splice(at..at, r.letters().iter().copied());
            }
            let v = amalgams::words::Word::new(letters);
            assert_eq!(s.normal_form(&u), s.normal_form(&v), "{name}");
        }
    }
}

#[test]
fn normal_form_is_idempotent_and_equal_to_input() {
    for name in CatalogName::ALL {
        let p = catalog(name);
        let s = build_square_structure(&p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(31 + name as u64);
        for _ in 0..WORDS_PER_GROUP {
            let u = random_word(&mut rng, &p.alphabet, 30);
            let nf = s.normal_form(&u);
            assert_eq!(s.normal_form(&nf.to_word()), nf);
            // u^-1 * nf(u) represents the identity
            assert!(s.normal_form(&invert_word(&u).concat(&nf.to_word())).is_identity());
            assert_eq!(free_reduce(&free_reduce(&u)), free_reduce(&u));
        }
    }
}

/// A finite quotient gives an independent check: a word and its normal form
/// must have the same image.
#[test]
fn normal_forms_agree_in_finite_quotients() {
    let w = CatalogConstants::standard().w;
    for name in CatalogName::GAMMAS {
        let p = catalog(name);
        let s = build_square_structure(&p).unwrap();
        let table = todd_coxeter(&p.with_relator(w.clone()), &[], EnumerationLimits::default()).unwrap();
        let degree = table.index();
        let gens: Vec<Vec<usize>> = coset_permutation_rep(&table)
            .unwrap()
            .iter()
            .map(|g| g.images().to_vec())
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(41 + name as u64);
        for _ in 0..WORDS_PER_GROUP {
            let u = random_word(&mut rng, &p.alphabet, 30);
            let nf = s.normal_form(&u).to_word();
            assert_eq!(
                word_image(degree, &gens, &p.alphabet, &u),
                word_image(degree, &gens, &p.alphabet, &nf)
            );
        }
    }
}

/// The B-side normal form and the A-side normal form describe the same element.
#[test]
fn ba_normal_form_matches() {
    for name in CatalogName::GAMMAS {
        let p = catalog(name);
        let s = build_square_structure(&p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(53 + name as u64);
        for _ in 0..200 {
            let u = random_word(&mut rng, &p.alphabet, 20);
            let (b, a) = s.ba_normal_form(&u);
            assert!(b.is_pure(Family::B) && a.is_pure(Family::A));
            assert_eq!(s.normal_form(&b.concat(&a)), s.normal_form(&u));
        }
    }
}
