//! Todd–Coxeter coset enumeration, quotient identification, coset
//! permutation representations and Reidemeister–Schreier rewriting.
//!
//! Columns of a coset table are the signed generators in alphabet order
//! (`a1, A1, a2, A2, .., b1, B1, ..`). Cosets are 0-based in the API, coset
//! 0 being the subgroup itself; the TSV export numbers them from 1.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::permgrp::Permutation;
use crate::presentations::Presentation;
use crate::words::{Alphabet, Family, Letter, Sign, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    /// The enumeration did not close. This says nothing about whether the
    /// index is infinite.
    #[error("coset enumeration did not close within limits ({cosets} cosets defined, {steps} steps); index unknown")]
    LimitExceeded { cosets: usize, steps: usize },
    #[error("coset table is not closed")]
    TableNotClosed,
    #[error("quotient of order {order} exceeds the identification limit {max}")]
    TooLarge { order: usize, max: usize },
    #[error("subgroup is not normal; cosets do not form a group")]
    NotNormal,
    #[error("parity map is not onto Z/2 x Z/2: a generator family is empty")]
    ParityNotOnto,
    #[error("word uses a letter outside the presentation's alphabet")]
    ForeignLetter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_cosets: usize,
    pub max_steps: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_cosets: 1_000_000,
            max_steps: 100_000_000,
        }
    }
}

impl EnumerationLimits {
    pub fn with_max_cosets(max_cosets: usize) -> Self {
        EnumerationLimits {
            max_cosets,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Relator-driven definitions with a lookahead pass when the table fills.
    #[default]
    HltLookahead,
    /// First-undefined-entry definitions with full deduction processing.
    Felsch,
}

/// Column of a signed letter.
pub fn column(alphabet: &Alphabet, letter: Letter) -> usize {
    let g = alphabet.generator_position(Letter {
        sign: Sign::Pos,
        ..letter
    });
    2 * g + usize::from(letter.sign == Sign::Neg)
}

pub fn column_letter(alphabet: &Alphabet, col: usize) -> Letter {
    let g = col / 2;
    let sign = if col.is_multiple_of(2) { Sign::Pos } else { Sign::Neg };
    let m = alphabet.rank(Family::A);
    if g < m {
        Letter::a(g, sign)
    } else {
        Letter::b(g - m, sign)
    }
}

fn word_columns(alphabet: &Alphabet, word: &Word) -> Result<Vec<usize>, EnumerationError> {
    word.letters()
        .iter()
        .map(|&l| {
            if alphabet.contains(l) {
                Ok(column(alphabet, l))
            } else {
                Err(EnumerationError::ForeignLetter)
            }
        })
        .collect()
}

/// Table ran out of rows.
struct Full;

struct Enumerator {
    ncols: usize,
    /// Row-major, 1-based coset numbers, 0 for undefined. Row 0 unused.
    table: Vec<u32>,
    parent: Vec<u32>,
    /// Rows allocated so far (highest coset number).
    n: usize,
    live: usize,
    deductions: Vec<(u32, usize)>,
    coincided: bool,
    max_cosets: usize,
    max_steps: usize,
    steps: usize,
    total_defined: usize,
}

impl Enumerator {
    fn new(ncols: usize, limits: EnumerationLimits) -> Self {
        Enumerator {
            ncols,
            table: vec![0; 2 * ncols],
            parent: vec![0, 1],
            n: 1,
            live: 1,
            deductions: Vec::new(),
            coincided: false,
            max_cosets: limits.max_cosets.max(1),
            max_steps: limits.max_steps,
            steps: 0,
            total_defined: 1,
        }
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.ncols + x] = d;
    }

    #[inline]
    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn limit_error(&self) -> EnumerationError {
        EnumerationError::LimitExceeded {
            cosets: self.total_defined,
            steps: self.steps,
        }
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), Full> {
        if self.n >= self.max_cosets || self.steps >= self.max_steps {
            return Err(Full);
        }
        self.steps += 1;
        self.n += 1;
        self.total_defined += 1;
        let d = self.n as u32;
        self.table.extend(std::iter::repeat_n(0, self.ncols));
        self.parent.push(d);
        self.live += 1;
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        self.deductions.push((c, x));
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut k = c;
        while self.parent[k as usize] != root {
            let next = self.parent[k as usize];
            self.parent[k as usize] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, k: u32, l: u32, queue: &mut Vec<u32>) {
        let k = self.rep(k);
        let l = self.rep(l);
        if k == l {
            return;
        }
        let (keep, drop) = if k < l { (k, l) } else { (l, k) };
        self.parent[drop as usize] = keep;
        self.live -= 1;
        queue.push(drop);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.coincided = true;
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.ncols {
                let f = self.get(e, x);
                if f == 0 {
                    continue;
                }
                self.set(f, x ^ 1, 0);
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.get(e1, x);
                if ex != 0 {
                    self.merge(f1, ex, &mut queue);
                } else {
                    let fx = self.get(f1, x ^ 1);
                    if fx != 0 {
                        self.merge(e1, fx, &mut queue);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, x ^ 1, e1);
                        self.deductions.push((e1, x));
                    }
                }
            }
        }
    }

    /// Trace `word` around coset `c`, defining cosets when `fill` is set.
    fn scan(&mut self, c: u32, word: &[usize], fill: bool) -> Result<(), Full> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut i = 0usize;
        let mut b = c;
        let mut j = word.len() - 1;
        loop {
            while i <= j && self.get(f, word[i]) != 0 {
                f = self.get(f, word[i]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, word[j] ^ 1) != 0 {
                b = self.get(b, word[j] ^ 1);
                if j == 0 {
                    // whole word traced backwards
                    if f != b {
                        self.coincidence(f, b);
                    }
                    return Ok(());
                }
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.set(f, word[i], b);
                self.set(b, word[i] ^ 1, f);
                self.deductions.push((f, word[i]));
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }

    /// Renumber live cosets consecutively in definition order. Returns the
    /// new number of the first live coset at or after `from`.
    fn compact(&mut self, from: u32) -> u32 {
        let mut map = vec![0u32; self.n + 1];
        let mut next = 0u32;
        for c in 1..=self.n as u32 {
            if self.alive(c) {
                next += 1;
                map[c as usize] = next;
            }
        }
        let mut table = vec![0u32; (next as usize + 1) * self.ncols];
        for c in 1..=self.n as u32 {
            let nc = map[c as usize];
            if nc == 0 {
                continue;
            }
            for x in 0..self.ncols {
                let d = self.get(c, x);
                if d != 0 {
                    table[nc as usize * self.ncols + x] = map[d as usize];
                }
            }
        }
        let resume = (from as usize..=self.n)
            .map(|c| map[c])
            .find(|&m| m != 0)
            .unwrap_or(next + 1);
        self.table = table;
        self.n = next as usize;
        self.live = self.n;
        self.parent = (0..=next).collect();
        self.deductions.clear();
        resume
    }

    fn lookahead(&mut self, relators: &[Vec<usize>]) {
        let mut c = 1u32;
        while c as usize <= self.n {
            if self.alive(c) {
                for r in relators {
                    // scanning without fill never defines
                    let _ = self.scan(c, r, false);
                    if !self.alive(c) {
                        break;
                    }
                }
            }
            c += 1;
        }
        self.deductions.clear();
    }

    fn hlt_coset(&mut self, c: u32, relators: &[Vec<usize>]) -> Result<(), Full> {
        for r in relators {
            if !self.alive(c) {
                return Ok(());
            }
            self.scan(c, r, true)?;
        }
        for x in 0..self.ncols {
            if !self.alive(c) {
                return Ok(());
            }
            if self.get(c, x) == 0 {
                self.define(c, x)?;
            }
        }
        Ok(())
    }

    fn run_hlt(
        &mut self,
        relators: &[Vec<usize>],
        subgroup: &[Vec<usize>],
    ) -> Result<(), EnumerationError> {
        for w in subgroup {
            if self.scan(1, w, true).is_err() {
                return Err(self.limit_error());
            }
        }
        self.deductions.clear();
        let mut c = 1u32;
        while c as usize <= self.n {
            if self.alive(c) {
                while self.hlt_coset(c, relators).is_err() {
                    if self.steps >= self.max_steps {
                        return Err(self.limit_error());
                    }
                    self.lookahead(relators);
                    if self.live == self.n {
                        return Err(self.limit_error());
                    }
                    c = self.compact(c);
                    if c as usize > self.n {
                        break;
                    }
                }
                self.deductions.clear();
            }
            c += 1;
        }
        Ok(())
    }

    fn process_deductions(&mut self, by_col: &[Vec<Vec<usize>>]) {
        while let Some((c, x)) = self.deductions.pop() {
            if !self.alive(c) {
                continue;
            }
            for conj in &by_col[x] {
                let _ = self.scan(c, conj, false);
                if !self.alive(c) {
                    break;
                }
            }
            let d = self.get(c, x);
            if d != 0 && self.alive(d) {
                for conj in &by_col[x ^ 1] {
                    let _ = self.scan(d, conj, false);
                    if !self.alive(d) {
                        break;
                    }
                }
            }
        }
    }

    fn run_felsch(
        &mut self,
        relators: &[Vec<usize>],
        subgroup: &[Vec<usize>],
    ) -> Result<(), EnumerationError> {
        let by_col = cyclic_conjugates_by_column(relators, self.ncols);
        for w in subgroup {
            if self.scan(1, w, true).is_err() {
                return Err(self.limit_error());
            }
        }
        self.process_deductions(&by_col);
        let mut ptr = 1u32;
        loop {
            let mut slot = None;
            let mut c = ptr;
            'search: while c as usize <= self.n {
                if self.alive(c) {
                    for x in 0..self.ncols {
                        if self.get(c, x) == 0 {
                            slot = Some((c, x));
                            break 'search;
                        }
                    }
                }
                c += 1;
            }
            let Some((c, x)) = slot else { break };
            ptr = c;
            if self.define(c, x).is_err() {
                if self.steps >= self.max_steps || self.live == self.n {
                    return Err(self.limit_error());
                }
                self.compact(1);
                ptr = 1;
                continue;
            }
            self.coincided = false;
            self.process_deductions(&by_col);
            if self.coincided {
                ptr = 1;
            }
        }
        Ok(())
    }
}

fn cyclic_conjugates_by_column(relators: &[Vec<usize>], ncols: usize) -> Vec<Vec<Vec<usize>>> {
    let mut by_col: Vec<Vec<Vec<usize>>> = vec![Vec::new(); ncols];
    for r in relators {
        let inv: Vec<usize> = r.iter().rev().map(|&x| x ^ 1).collect();
        for word in [r, &inv] {
            for k in 0..word.len() {
                let rot: Vec<usize> = word[k..].iter().chain(&word[..k]).copied().collect();
                let list = &mut by_col[rot[0]];
                if !list.contains(&rot) {
                    list.push(rot);
                }
            }
        }
    }
    by_col
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    pub presentation: Presentation,
    pub subgroup_words: Vec<Word>,
    /// `rows[c][col]` is the image of coset `c` under the column's letter.
    rows: Vec<Vec<usize>>,
    /// Cosets defined during the enumeration, including ones later merged.
    pub cosets_defined: usize,
}

pub fn todd_coxeter(
    p: &Presentation,
    subgroup_words: &[Word],
    limits: EnumerationLimits,
) -> Result<CosetTable, EnumerationError> {
    todd_coxeter_with(p, subgroup_words, limits, Strategy::default())
}

pub fn todd_coxeter_with(
    p: &Presentation,
    subgroup_words: &[Word],
    limits: EnumerationLimits,
    strategy: Strategy,
) -> Result<CosetTable, EnumerationError> {
    let ncols = 2 * p.alphabet.generator_count();
    let relators = p
        .relators
        .iter()
        .map(|r| word_columns(&p.alphabet, r))
        .collect::<Result<Vec<_>, _>>()?;
    let subgroup = subgroup_words
        .iter()
        .map(|w| word_columns(&p.alphabet, w))
        .collect::<Result<Vec<_>, _>>()?;
    let mut e = Enumerator::new(ncols, limits);
    match strategy {
        Strategy::HltLookahead => e.run_hlt(&relators, &subgroup)?,
        Strategy::Felsch => e.run_felsch(&relators, &subgroup)?,
    }
    e.compact(1);
    let rows: Vec<Vec<usize>> = (1..=e.n as u32)
        .map(|c| (0..ncols).map(|x| e.get(c, x) as usize - 1).collect())
        .collect();
    let table = CosetTable {
        presentation: p.clone(),
        subgroup_words: subgroup_words.to_vec(),
        rows,
        cosets_defined: e.total_defined,
    };
    debug_assert!(table.check_closed().is_ok());
    Ok(table)
}

impl CosetTable {
    /// Build a table from explicit rows (0-based images, one column per
    /// signed generator). The result is checked with [`CosetTable::check_closed`].
    pub fn from_rows(
        presentation: Presentation,
        subgroup_words: Vec<Word>,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self, EnumerationError> {
        let t = CosetTable {
            cosets_defined: rows.len(),
            presentation,
            subgroup_words,
            rows,
        };
        t.check_closed()?;
        Ok(t)
    }

    pub fn index(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn image(&self, coset: usize, letter: Letter) -> usize {
        self.rows[coset][column(&self.presentation.alphabet, letter)]
    }

    pub fn trace(&self, coset: usize, word: &Word) -> usize {
        word.letters()
            .iter()
            .fold(coset, |c, &l| self.image(c, l))
    }

    /// Complete, mutually inverse columns, every relator closed at every
    /// coset and every subgroup word fixing coset 0.
    pub fn check_closed(&self) -> Result<(), EnumerationError> {
        let ncols = 2 * self.presentation.alphabet.generator_count();
        let k = self.rows.len();
        if k == 0 {
            return Err(EnumerationError::TableNotClosed);
        }
        for row in &self.rows {
            if row.len() != ncols || row.iter().any(|&d| d >= k) {
                return Err(EnumerationError::TableNotClosed);
            }
        }
        for (c, row) in self.rows.iter().enumerate() {
            for (x, &d) in row.iter().enumerate() {
                if self.rows[d][x ^ 1] != c {
                    return Err(EnumerationError::TableNotClosed);
                }
            }
        }
        for c in 0..k {
            if self.presentation.relators.iter().any(|r| self.trace(c, r) != c) {
                return Err(EnumerationError::TableNotClosed);
            }
        }
        if self.subgroup_words.iter().any(|w| self.trace(0, w) != 0) {
            return Err(EnumerationError::TableNotClosed);
        }
        Ok(())
    }

    /// Renumber cosets in breadth-first order over the columns.
    pub fn standardized(&self) -> CosetTable {
        let k = self.rows.len();
        let mut map = vec![usize::MAX; k];
        let mut order = Vec::with_capacity(k);
        map[0] = 0;
        order.push(0);
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            i += 1;
            for &d in &self.rows[c] {
                if map[d] == usize::MAX {
                    map[d] = order.len();
                    order.push(d);
                }
            }
        }
        let rows = order
            .iter()
            .map(|&c| self.rows[c].iter().map(|&d| map[d]).collect())
            .collect();
        CosetTable {
            rows,
            ..self.clone()
        }
    }

    /// Breadth-first Schreier transversal: for each coset, the tree edge
    /// `(parent coset, column)` it was reached by, `None` for coset 0.
    fn schreier_tree(&self) -> Vec<Option<(usize, usize)>> {
        let k = self.rows.len();
        let mut tree = vec![None; k];
        let mut seen = vec![false; k];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            for (x, &d) in self.rows[c].iter().enumerate() {
                if !seen[d] {
                    seen[d] = true;
                    tree[d] = Some((c, x));
                    queue.push_back(d);
                }
            }
        }
        tree
    }

    /// Transversal words `t_c` with `0 . t_c = c`.
    pub fn transversal(&self) -> Vec<Word> {
        let tree = self.schreier_tree();
        let alphabet = &self.presentation.alphabet;
        (0..self.rows.len())
            .map(|c| {
                let mut letters = Vec::new();
                let mut cur = c;
                while let Some((parent, x)) = tree[cur] {
                    letters.push(column_letter(alphabet, x));
                    cur = parent;
                }
                letters.reverse();
                Word::new(letters)
            })
            .collect()
    }

    pub fn to_tsv(&self) -> String {
        let alphabet = &self.presentation.alphabet;
        let ncols = 2 * alphabet.generator_count();
        let mut out = String::from("coset");
        for x in 0..ncols {
            out.push('\t');
            out.push_str(&alphabet.token(column_letter(alphabet, x)));
        }
        out.push('\n');
        for (c, row) in self.rows.iter().enumerate() {
            write!(out, "{}", c + 1).expect("write to string");
            for &d in row {
                write!(out, "\t{}", d + 1).expect("write to string");
            }
            out.push('\n');
        }
        out
    }
}

pub fn normal_closure_index(
    p: &Presentation,
    u: &Word,
    limits: EnumerationLimits,
) -> Result<usize, EnumerationError> {
    normal_closure_index_with(p, u, limits, Strategy::default())
}

pub fn normal_closure_index_with(
    p: &Presentation,
    u: &Word,
    limits: EnumerationLimits,
    strategy: Strategy,
) -> Result<usize, EnumerationError> {
    let q = p.with_relator(u.clone());
    Ok(todd_coxeter_with(&q, &[], limits, strategy)?.index())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureTag {
    Trivial,
    Cyclic(usize),
    KleinFour,
    OtherWithMultiplicationTable,
}

impl std::fmt::Display for StructureTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StructureTag::Trivial => f.write_str("trivial"),
            StructureTag::Cyclic(n) => write!(f, "cyclic_{n}"),
            StructureTag::KleinFour => f.write_str("klein_four"),
            StructureTag::OtherWithMultiplicationTable => {
                f.write_str("other_with_multiplication_table")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientReport {
    pub order: usize,
    /// element order -> number of elements of that order
    pub element_orders: BTreeMap<usize, usize>,
    pub structure_tag: StructureTag,
    pub abelian: bool,
    /// Present only for the `other_with_multiplication_table` tag.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplication_table: Option<Vec<Vec<usize>>>,
}

pub const MAX_IDENTIFY_ORDER: usize = 64;

/// Multiplication table of the quotient acted on by a closed table whose
/// subgroup is normal, together with element orders and a structure tag.
pub fn identify_small_group(t: &CosetTable) -> Result<QuotientReport, EnumerationError> {
    t.check_closed()?;
    let k = t.index();
    if k > MAX_IDENTIFY_ORDER {
        return Err(EnumerationError::TooLarge {
            order: k,
            max: MAX_IDENTIFY_ORDER,
        });
    }
    if (0..k).any(|c| t.subgroup_words.iter().any(|w| t.trace(c, w) != c)) {
        return Err(EnumerationError::NotNormal);
    }
    let reps = t.transversal();
    let mult: Vec<Vec<usize>> = (0..k)
        .map(|c| reps.iter().map(|w| t.trace(c, w)).collect())
        .collect();
    let mut element_orders = BTreeMap::new();
    let mut max_order = 0;
    for g in 0..k {
        let mut e = g;
        let mut ord = 1;
        while e != 0 {
            e = mult[e][g];
            ord += 1;
        }
        max_order = max_order.max(ord);
        *element_orders.entry(ord).or_insert(0) += 1;
    }
    let abelian = (0..k).all(|x| (0..k).all(|y| mult[x][y] == mult[y][x]));
    let structure_tag = if k == 1 {
        StructureTag::Trivial
    } else if max_order == k {
        StructureTag::Cyclic(k)
    } else if k == 4 && element_orders.get(&2) == Some(&3) {
        StructureTag::KleinFour
    } else {
        StructureTag::OtherWithMultiplicationTable
    };
    Ok(QuotientReport {
        order: k,
        element_orders,
        abelian,
        multiplication_table: (structure_tag == StructureTag::OtherWithMultiplicationTable)
            .then_some(mult),
        structure_tag,
    })
}

/// One permutation of the cosets per positive generator, in alphabet order.
pub fn coset_permutation_rep(t: &CosetTable) -> Result<Vec<Permutation>, EnumerationError> {
    t.check_closed()?;
    let alphabet = &t.presentation.alphabet;
    alphabet
        .generators()
        .map(|g| {
            let x = column(alphabet, g);
            Permutation::from_images(t.rows.iter().map(|row| row[x]).collect())
                .map_err(|_| EnumerationError::TableNotClosed)
        })
        .collect()
}

/// Raw bookkeeping from a Reidemeister–Schreier rewrite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchreierCounts {
    pub index: usize,
    /// `index * generators` Schreier generators before deleting tree edges.
    pub schreier_generators: usize,
    /// `index - 1` tree edges of the transversal.
    pub trivial_generators: usize,
    /// `index * relators` rewritten relators.
    pub relators: usize,
}

impl SchreierCounts {
    /// `V - E + F` of the covering presentation complex.
    pub fn cover_euler_characteristic(&self) -> i64 {
        self.index as i64 - self.schreier_generators as i64 + self.relators as i64
    }
}

/// Subgroup presentation on Schreier generators over the breadth-first
/// transversal. Generators coming from family A are named `s1, s2, ..`,
/// those from family B `t1, t2, ..`. Relators are left unsimplified.
pub fn reidemeister_schreier(
    p: &Presentation,
    t: &CosetTable,
) -> Result<Presentation, EnumerationError> {
    Ok(reidemeister_schreier_with_counts(p, t)?.0)
}

pub fn reidemeister_schreier_with_counts(
    p: &Presentation,
    t: &CosetTable,
) -> Result<(Presentation, SchreierCounts), EnumerationError> {
    if t.presentation.alphabet != p.alphabet {
        return Err(EnumerationError::ForeignLetter);
    }
    t.check_closed()?;
    let k = t.index();
    let alphabet = &p.alphabet;
    let gens: Vec<Letter> = alphabet.generators().collect();
    let tree = t.schreier_tree();

    let is_tree_edge = |c: usize, g: Letter| {
        let x = column(alphabet, g);
        let d = t.rows[c][x];
        tree[d] == Some((c, x)) || tree[c] == Some((d, x ^ 1))
    };

    // (coset, generator position) -> letter of the subgroup alphabet
    let mut assigned: Vec<Vec<Option<Letter>>> = vec![vec![None; gens.len()]; k];
    let mut names = (Vec::new(), Vec::new());
    for (c, slots) in assigned.iter_mut().enumerate() {
        for (gi, &g) in gens.iter().enumerate() {
            if is_tree_edge(c, g) {
                continue;
            }
            let (list, prefix, family) = match g.family {
                Family::A => (&mut names.0, 's', Family::A),
                Family::B => (&mut names.1, 't', Family::B),
            };
            let idx = list.len();
            list.push(format!("{prefix}{}", idx + 1));
            slots[gi] = Some(Letter::new(family, idx, Sign::Pos));
        }
    }
    let sub_alphabet =
        Alphabet::new(&names.0, &names.1).expect("generated names are valid and distinct");

    let mut relators = Vec::with_capacity(k * p.relators.len());
    for c in 0..k {
        for r in &p.relators {
            let mut cur = c;
            let mut letters = Vec::new();
            for &l in r.letters() {
                let gi = alphabet.generator_position(Letter {
                    sign: Sign::Pos,
                    ..l
                });
                match l.sign {
                    Sign::Pos => {
                        if let Some(s) = assigned[cur][gi] {
                            letters.push(s);
                        }
                        cur = t.image(cur, l);
                    }
                    Sign::Neg => {
                        let prev = t.image(cur, l);
                        if let Some(s) = assigned[prev][gi] {
                            letters.push(s.inverse());
                        }
                        cur = prev;
                    }
                }
            }
            debug_assert_eq!(cur, c);
            relators.push(Word::new(letters));
        }
    }
    let counts = SchreierCounts {
        index: k,
        schreier_generators: k * gens.len(),
        trivial_generators: k - 1,
        relators: relators.len(),
    };
    debug_assert_eq!(
        sub_alphabet.generator_count(),
        counts.schreier_generators - counts.trivial_generators
    );
    Ok((Presentation::new(sub_alphabet, relators), counts))
}

/// Coset table of the parity kernel: the action of `p` on `Z/2 x Z/2`
/// with A-letters toggling the first coordinate and B-letters the second.
/// Coset numbering is `0 = (0,0)`, `1 = (1,0)`, `2 = (0,1)`, `3 = (1,1)`.
pub fn parity_kernel_table(p: &Presentation) -> Result<CosetTable, EnumerationError> {
    let alphabet = &p.alphabet;
    if alphabet.rank(Family::A) == 0 || alphabet.rank(Family::B) == 0 {
        return Err(EnumerationError::ParityNotOnto);
    }
    let ncols = 2 * alphabet.generator_count();
    let rows = (0..4usize)
        .map(|c| {
            (0..ncols)
                .map(|x| match column_letter(alphabet, x).family {
                    Family::A => c ^ 1,
                    Family::B => c ^ 2,
                })
                .collect()
        })
        .collect();
    CosetTable::from_rows(p.clone(), Vec::new(), rows)
}
