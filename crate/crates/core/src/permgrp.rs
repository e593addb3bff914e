//! Small-degree permutation groups with a deterministic Schreier–Sims
//! stabilizer chain.
//!
//! Points are `0..n` internally and `1..=n` in cycle notation. Products act
//! on the right: `p.then(q)` applies `p` first.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("malformed cycle notation: {0}")]
    Syntax(String),
    #[error("degree mismatch: group has degree {group}, permutation has degree {perm}")]
    DegreeMismatch { group: usize, perm: usize },
    #[error("group is not transitive")]
    NotTransitive,
    #[error("images do not form a bijection")]
    NotABijection,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return Err(PermError::NotABijection);
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(i, &x)| i != x)
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_even(&self) -> bool {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        transpositions.is_multiple_of(2)
    }

    pub fn order(&self) -> u128 {
        self.cycles()
            .iter()
            .fold(1u128, |acc, c| lcm(acc, c.len() as u128))
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, PermError> {
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = compact.as_str();
    if rest.is_empty() {
        return Err(PermError::Syntax("empty input; use () for the identity".into()));
    }
    while !rest.is_empty() {
        let inner_end = rest
            .strip_prefix('(')
            .and_then(|r| r.find(')'))
            .ok_or_else(|| PermError::Syntax(format!("expected `(...)` at {rest:?}")))?;
        let inner = &rest[1..=inner_end];
        rest = &rest[inner_end + 2..];
        if inner.is_empty() {
            continue;
        }
        let mut points = Vec::new();
        for tok in inner.split(',') {
            let p: usize = tok
                .parse()
                .map_err(|_| PermError::Syntax(format!("bad point {tok:?}")))?;
            if p == 0 || p > degree {
                return Err(PermError::PointOutOfRange { point: p, degree });
            }
            if used[p - 1] {
                return Err(PermError::RepeatedPoint(p));
            }
            used[p - 1] = true;
            points.push(p - 1);
        }
        for (i, &p) in points.iter().enumerate() {
            images[p] = points[(i + 1) % points.len()];
        }
    }
    Ok(Permutation { images })
}

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    /// `transversal[p] = Some(u)` with `base^u = p` for points in the orbit.
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
    generators: Vec<Permutation>,
}

/// Base and strong generating set.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    strong: Vec<Permutation>,
}

impl StabChain {
    /// Deterministic Schreier–Sims. `base_prefix` points come first in the
    /// base; further base points are the least points moved by the residues
    /// that need them.
    pub fn build(degree: usize, generators: &[Permutation], base_prefix: &[usize]) -> StabChain {
        let mut base: Vec<usize> = base_prefix.to_vec();
        let mut strong: Vec<Permutation> = Vec::new();
        for g in generators.iter().filter(|g| !g.is_identity()) {
            if !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        for g in &strong {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved_point().expect("non-identity"));
            }
        }
        loop {
            let levels = Self::levels_for(degree, &base, &strong);
            match Self::first_failing_residue(&levels, degree) {
                None => {
                    return StabChain {
                        degree,
                        levels,
                        strong,
                    }
                }
                Some((residue, depth)) => {
                    if depth == base.len() {
                        base.push(residue.first_moved_point().expect("non-identity residue"));
                    }
                    strong.push(residue);
                }
            }
        }
    }

    fn levels_for(degree: usize, base: &[usize], strong: &[Permutation]) -> Vec<Level> {
        let mut levels = Vec::with_capacity(base.len());
        for (i, &b) in base.iter().enumerate() {
            let generators: Vec<Permutation> = strong
                .iter()
                .filter(|g| base[..i].iter().all(|&p| g.apply(p) == p))
                .cloned()
                .collect();
            let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
            transversal[b] = Some(Permutation::identity(degree));
            let mut orbit = vec![b];
            let mut k = 0;
            while k < orbit.len() {
                let p = orbit[k];
                k += 1;
                for g in &generators {
                    let q = g.apply(p);
                    if transversal[q].is_none() {
                        let u = transversal[p].as_ref().expect("in orbit").then(g);
                        transversal[q] = Some(u);
                        orbit.push(q);
                    }
                }
            }
            levels.push(Level {
                base: b,
                transversal,
                orbit,
                generators,
            });
        }
        levels
    }

    /// Sift `g` through `levels[from..]`; returns the residue and the depth
    /// where sifting stopped (`levels.len()` when it passed every level).
    fn sift_from(levels: &[Level], from: usize, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (depth, level) in levels.iter().enumerate().skip(from) {
            let image = h.apply(level.base);
            match &level.transversal[image] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, depth),
            }
        }
        (h, levels.len())
    }

    fn first_failing_residue(levels: &[Level], _degree: usize) -> Option<(Permutation, usize)> {
        for i in (0..levels.len()).rev() {
            let level = &levels[i];
            for &p in &level.orbit {
                let up = level.transversal[p].as_ref().expect("in orbit");
                for s in &level.generators {
                    let q = s.apply(p);
                    let uq = level.transversal[q].as_ref().expect("orbit closed");
                    let schreier = up.then(s).then(&uq.inverse());
                    let (residue, depth) = Self::sift_from(levels, i + 1, &schreier);
                    if !residue.is_identity() {
                        return Some((residue, depth));
                    }
                }
            }
        }
        None
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().fold(1u128, |acc, l| {
            acc.checked_mul(l.orbit.len() as u128)
                .expect("group order overflows u128")
        })
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && {
            let (residue, _) = Self::sift_from(&self.levels, 0, p);
            residue.is_identity()
        }
    }

    /// Generators of the pointwise stabilizer of the first `depth` base points.
    pub fn level_generators(&self, depth: usize) -> Vec<Permutation> {
        match self.levels.get(depth) {
            Some(l) => l.generators.clone(),
            None => Vec::new(),
        }
    }
}

#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    group: degree,
                    perm: g.degree(),
                });
            }
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn from_cycles(degree: usize, cycles: &[&str]) -> Result<Self, PermError> {
        let gens = cycles
            .iter()
            .map(|c| parse_cycles(c, degree))
            .collect::<Result<Vec<_>, _>>()?;
        PermGroup::new(degree, gens)
    }

    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            let mut t: Vec<usize> = (0..degree).collect();
            t.swap(0, 1);
            gens.push(Permutation { images: t });
            gens.push(Permutation {
                images: (0..degree).map(|i| (i + 1) % degree).collect(),
            });
        }
        PermGroup::new(degree, gens).expect("degrees agree")
    }

    pub fn alternating(degree: usize) -> Self {
        // 3-cycles (1,2,k)
        let gens = (2..degree)
            .map(|k| {
                let mut images: Vec<usize> = (0..degree).collect();
                images[0] = 1;
                images[1] = k;
                images[k] = 0;
                Permutation { images }
            })
            .collect();
        PermGroup::new(degree, gens).expect("degrees agree")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators, &[]))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                group: self.degree,
                perm: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    /// Orbits as sets of 0-based points, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut k = 0;
            while k < orbit.len() {
                let p = orbit[k];
                k += 1;
                for g in &self.generators {
                    let q = g.apply(p);
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn orbit_of(&self, point: usize) -> Vec<usize> {
        self.orbits()
            .into_iter()
            .find(|o| o.contains(&point))
            .unwrap_or_default()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    /// Whether ordered `k`-tuples of distinct points form a single orbit,
    /// decided by walking the orbit of `(0, 1, .., k-1)`. A group of degree
    /// below `k` is not `k`-transitive.
    pub fn is_k_transitive(&self, k: usize) -> bool {
        let n = self.degree;
        if k == 0 {
            return true;
        }
        if k > n {
            return false;
        }
        if k == 1 {
            return self.is_transitive();
        }
        let target: u128 = ((n - k + 1)..=n).map(|x| x as u128).product();
        let encode = |t: &[usize]| t.iter().fold(0usize, |acc, &x| acc * n + x);
        let start: Vec<usize> = (0..k).collect();
        let mut seen = std::collections::HashSet::new();
        seen.insert(encode(&start));
        let mut queue = VecDeque::from([start]);
        while let Some(t) = queue.pop_front() {
            for g in &self.generators {
                let img: Vec<usize> = t.iter().map(|&x| g.apply(x)).collect();
                if seen.insert(encode(&img)) {
                    queue.push_back(img);
                }
            }
        }
        seen.len() as u128 == target
    }

    /// Stabilizer of a 0-based point, from a chain whose base starts there.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup, PermError> {
        if point >= self.degree {
            return Err(PermError::PointOutOfRange {
                point: point + 1,
                degree: self.degree,
            });
        }
        let chain = StabChain::build(self.degree, &self.generators, &[point]);
        PermGroup::new(self.degree, chain.level_generators(1))
    }

    /// Number of orbits of the stabilizer of the first point (suborbits, or
    /// equivalently double cosets of a point stabilizer).
    pub fn suborbit_count(&self) -> Result<usize, PermError> {
        if !self.is_transitive() {
            return Err(PermError::NotTransitive);
        }
        if self.degree == 0 {
            return Ok(0);
        }
        Ok(self.point_stabilizer(0)?.orbits().len())
    }

    pub fn all_generators_even(&self) -> bool {
        self.generators.iter().all(Permutation::is_even)
    }

    pub fn is_alternating_group(&self) -> bool {
        self.degree >= 2
            && self.all_generators_even()
            && Some(self.order()) == factorial(self.degree).map(|f| f / 2)
    }

    pub fn is_symmetric_group(&self) -> bool {
        Some(self.order()) == factorial(self.degree)
    }

    /// Same set of permutations.
    pub fn equals(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && other.generators.iter().all(|g| self.chain().contains(g))
    }
}

pub fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, x| acc.checked_mul(x))
}
