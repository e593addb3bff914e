//! Letters, words and the parity map onto `Z/2 x Z/2`.
//!
//! Generators come in two families, `A` (horizontal) and `B` (vertical).
//! A token is a generator name (`a1`), the same name with its first
//! character uppercased (`A1`, the inverse) or the name followed by `^-1`.

use std::fmt;
use std::ops::Add;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown generator token {0:?}")]
    UnknownGenerator(String),
    #[error("invalid generator name {0:?}: expected a lowercase letter followed by digits")]
    InvalidName(String),
    #[error("duplicate generator name {0:?}")]
    DuplicateGenerator(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
}

impl Family {
    pub fn other(self) -> Family {
        match self {
            Family::A => Family::B,
            Family::B => Family::A,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A signed generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub family: Family,
    pub index: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn new(family: Family, index: usize, sign: Sign) -> Self {
        Letter {
            family,
            index,
            sign,
        }
    }

    pub fn a(index: usize, sign: Sign) -> Self {
        Letter::new(Family::A, index, sign)
    }

    pub fn b(index: usize, sign: Sign) -> Self {
        Letter::new(Family::B, index, sign)
    }

    pub fn inverse(self) -> Self {
        Letter {
            sign: self.sign.flip(),
            ..self
        }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.family == other.family && self.index == other.index && self.sign != other.sign
    }

    /// Dense label within the family: `x_j -> j`, `x_j^-1 -> rank + j` (0-based).
    pub fn point(self, rank: usize) -> usize {
        match self.sign {
            Sign::Pos => self.index,
            Sign::Neg => rank + self.index,
        }
    }

    pub fn from_point(family: Family, point: usize, rank: usize) -> Self {
        if point < rank {
            Letter::new(family, point, Sign::Pos)
        } else {
            Letter::new(family, point - rank, Sign::Neg)
        }
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_lowercase() => chars.all(|c| c.is_ascii_digit()),
        _ => false,
    }
}

/// Generator names of the two families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    a_names: Vec<String>,
    b_names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(a_names: &[S], b_names: &[S]) -> Result<Self, WordError> {
        let a_names: Vec<String> = a_names.iter().map(|s| s.as_ref().to_string()).collect();
        let b_names: Vec<String> = b_names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut seen = std::collections::BTreeSet::new();
        for name in a_names.iter().chain(&b_names) {
            if !valid_name(name) {
                return Err(WordError::InvalidName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(WordError::DuplicateGenerator(name.clone()));
            }
        }
        Ok(Alphabet { a_names, b_names })
    }

    /// `a1..a{m}`, `b1..b{n}`.
    pub fn standard(m: usize, n: usize) -> Self {
        let a: Vec<String> = (1..=m).map(|i| format!("a{i}")).collect();
        let b: Vec<String> = (1..=n).map(|i| format!("b{i}")).collect();
        Alphabet::new(&a, &b).expect("standard names are valid")
    }

    pub fn a_names(&self) -> &[String] {
        &self.a_names
    }

    pub fn b_names(&self) -> &[String] {
        &self.b_names
    }

    pub fn rank(&self, family: Family) -> usize {
        match family {
            Family::A => self.a_names.len(),
            Family::B => self.b_names.len(),
        }
    }

    pub fn generator_count(&self) -> usize {
        self.a_names.len() + self.b_names.len()
    }

    pub fn name(&self, family: Family, index: usize) -> &str {
        match family {
            Family::A => &self.a_names[index],
            Family::B => &self.b_names[index],
        }
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index < self.rank(letter.family)
    }

    /// Positive generators in order: all of family A, then all of family B.
    pub fn generators(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.a_names.len())
            .map(|i| Letter::a(i, Sign::Pos))
            .chain((0..self.b_names.len()).map(|i| Letter::b(i, Sign::Pos)))
    }

    /// Position of a positive generator in [`Alphabet::generators`] order.
    pub fn generator_position(&self, letter: Letter) -> usize {
        match letter.family {
            Family::A => letter.index,
            Family::B => self.a_names.len() + letter.index,
        }
    }

    /// Every signed letter of one family, in point order.
    pub fn signed_letters(&self, family: Family) -> Vec<Letter> {
        let rank = self.rank(family);
        (0..2 * rank)
            .map(|p| Letter::from_point(family, p, rank))
            .collect()
    }

    fn lookup(&self, name: &str) -> Option<(Family, usize)> {
        if let Some(i) = self.a_names.iter().position(|n| n == name) {
            return Some((Family::A, i));
        }
        self.b_names
            .iter()
            .position(|n| n == name)
            .map(|i| (Family::B, i))
    }

    pub fn parse_token(&self, token: &str) -> Result<Letter, WordError> {
        let unknown = || WordError::UnknownGenerator(token.to_string());
        if let Some(base) = token.strip_suffix("^-1") {
            return self
                .lookup(base)
                .map(|(f, i)| Letter::new(f, i, Sign::Neg))
                .ok_or_else(unknown);
        }
        if let Some((f, i)) = self.lookup(token) {
            return Ok(Letter::new(f, i, Sign::Pos));
        }
        let mut chars = token.chars();
        match chars.next() {
            Some(c) if c.is_ascii_uppercase() => {
                let lowered: String = std::iter::once(c.to_ascii_lowercase())
                    .chain(chars)
                    .collect();
                self.lookup(&lowered)
                    .map(|(f, i)| Letter::new(f, i, Sign::Neg))
                    .ok_or_else(unknown)
            }
            _ => Err(unknown()),
        }
    }

    pub fn token(&self, letter: Letter) -> String {
        let name = self.name(letter.family, letter.index);
        match letter.sign {
            Sign::Pos => name.to_string(),
            Sign::Neg => {
                let mut chars = name.chars();
                let first = chars.next().expect("names are nonempty");
                std::iter::once(first.to_ascii_uppercase())
                    .chain(chars)
                    .collect()
            }
        }
    }

    pub fn format_word(&self, word: &Word) -> String {
        word.letters()
            .iter()
            .map(|&l| self.token(l))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A finite sequence of letters; not necessarily freely reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| !w[0].is_inverse_of(w[1]))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    pub fn is_pure(&self, family: Family) -> bool {
        self.0.iter().all(|l| l.family == family)
    }

    pub fn count(&self, family: Family) -> usize {
        self.0.iter().filter(|l| l.family == family).count()
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, WordError> {
    text.split_whitespace()
        .map(|tok| alphabet.parse_token(tok))
        .collect()
}

pub fn free_reduce(word: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for &l in word.letters() {
        match out.last() {
            Some(&last) if last.is_inverse_of(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    Word(out)
}

pub fn invert_word(word: &Word) -> Word {
    word.letters().iter().rev().map(|l| l.inverse()).collect()
}

/// Image in `Z/2 x Z/2` under `a_i -> (1,0)`, `b_j -> (0,1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct ParityVector {
    pub a_parity: u8,
    pub b_parity: u8,
}

impl ParityVector {
    pub const ZERO: ParityVector = ParityVector {
        a_parity: 0,
        b_parity: 0,
    };

    pub fn new(a_parity: u8, b_parity: u8) -> Self {
        ParityVector {
            a_parity: a_parity & 1,
            b_parity: b_parity & 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }
}

impl Add for ParityVector {
    type Output = ParityVector;
    fn add(self, rhs: ParityVector) -> ParityVector {
        ParityVector::new(self.a_parity ^ rhs.a_parity, self.b_parity ^ rhs.b_parity)
    }
}

impl fmt::Display for ParityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a_parity, self.b_parity)
    }
}

pub fn parity_image(word: &Word) -> ParityVector {
    // each letter contributes +-1, which is 1 mod 2 either way
    let a = word.count(Family::A) % 2;
    let b = word.count(Family::B) % 2;
    ParityVector::new(a as u8, b as u8)
}
