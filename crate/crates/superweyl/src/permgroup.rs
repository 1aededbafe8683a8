//! The super Weyl group as a permutation group on the enumerated Borels:
//! generator permutations, element orders, exact group order via a
//! deterministic Schreier-Sims chain, word evaluation and relation checks.

use crate::catalog::AlgebraCatalog;
use crate::enumerator::BorelSet;
use crate::reflection::{apply_generator, super_simple_reflections, ReflectionKind};
use crate::{Error, Result};
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use std::collections::{BTreeMap, HashSet, VecDeque};

/// A permutation of `{0, .., n-1}` stored by images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    pub images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Self {
        let mut check: Vec<u32> = images.clone();
        check.sort_unstable();
        assert!(
            check.iter().enumerate().all(|(i, &x)| i as u32 == x),
            "images must be a bijection"
        );
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Function composition: `(self . other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Cycle decomposition, fixed points omitted, each cycle starting at its
    /// smallest point, cycles ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths, sorted.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable();
        t
    }

    /// Length of the cycle through `point` (1 for a fixed point).
    pub fn cycle_length_of(&self, point: usize) -> usize {
        let mut len = 1;
        let mut x = self.apply(point);
        while x != point {
            len += 1;
            x = self.apply(x);
        }
        len
    }
}

/// Least `k >= 1` with `p^k = 1`, as the lcm of the cycle lengths.
pub fn element_order(p: &Permutation) -> u64 {
    let mut order: u64 = 1;
    for c in p.cycles() {
        order = order.lcm(&(c.len() as u64));
    }
    order
}

/// Labeled generator permutations in extended-system order.
#[derive(Debug, Clone)]
pub struct GeneratorTable {
    pub labels: Vec<String>,
    pub gens: Vec<Permutation>,
    pub parity: Vec<ReflectionKind>,
    pub points: usize,
}

impl GeneratorTable {
    pub fn gen_by_label(&self, label: &str) -> Option<&Permutation> {
        self.labels.iter().position(|l| l == label).map(|i| &self.gens[i])
    }
}

/// Realize every super simple reflection as a permutation of the Borel ids.
pub fn build_generator_table(cat: &AlgebraCatalog, borels: &BorelSet) -> GeneratorTable {
    let gens = super_simple_reflections(cat);
    let mut labels = Vec::new();
    let mut perms = Vec::new();
    let mut parity = Vec::new();
    for gen in &gens {
        labels.push(cat.generator_label(&gen.root));
        parity.push(gen.kind);
        let images = borels
            .systems()
            .iter()
            .map(|fs| {
                let image = apply_generator(cat, gen, fs);
                borels
                    .id_of_system(&image)
                    .expect("closure incomplete: generator image missing from the Borel set")
                    as u32
            })
            .collect();
        let p = Permutation::from_images(images);
        debug_assert!(p.compose(&p).is_identity(), "generators must be involutions");
        perms.push(p);
    }
    GeneratorTable { labels, gens: perms, parity, points: borels.len() }
}

/// Evaluate a word of generator labels, rightmost letter applied first, so
/// the word `x y` is the product `x . y` acting as `x(y(point))`.
pub fn evaluate_word(table: &GeneratorTable, word: &[String]) -> Result<Permutation> {
    let mut acc = Permutation::identity(table.points);
    for label in word {
        let gen = table
            .gen_by_label(label)
            .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
        acc = acc.compose(gen);
    }
    Ok(acc)
}

/// One relation: a word and the exponent it is raised to.
pub type Relation = (Vec<String>, u64);

/// Check `word^exponent = 1` for each relation.
pub fn check_relations(table: &GeneratorTable, relations: &[Relation]) -> Result<Vec<bool>> {
    relations
        .iter()
        .map(|(word, exp)| {
            let p = evaluate_word(table, word)?;
            Ok(*exp % element_order(&p) == 0)
        })
        .collect()
}

/// Parse one relation line of the form `(<labels separated by spaces>)^<exp>`.
/// Empty lines and `#` comments yield `None`.
pub fn parse_relation_line(line: &str) -> Result<Option<Relation>> {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return Ok(None);
    }
    let err = || Error::ParseRelation(line.to_string());
    let inner = line.strip_prefix('(').ok_or_else(err)?;
    let (word_part, exp_part) = inner.rsplit_once(")^").ok_or_else(err)?;
    let exp: u64 = exp_part.trim().parse().map_err(|_| err())?;
    let word: Vec<String> = word_part.split_whitespace().map(|s| s.to_string()).collect();
    if word.is_empty() {
        return Err(err());
    }
    Ok(Some((word, exp)))
}

/// Parse a relation file: one relation per line, `#` comments allowed.
pub fn parse_relation_file(text: &str) -> Result<Vec<Relation>> {
    let mut out = Vec::new();
    for line in text.lines() {
        if let Some(rel) = parse_relation_line(line)? {
            out.push(rel);
        }
    }
    Ok(out)
}

/// Result of the Schreier-Sims computation.
#[derive(Debug, Clone)]
pub struct GroupOrderResult {
    pub order: BigUint,
    pub base: Vec<usize>,
    pub strong_generator_count: usize,
}

struct StabChain {
    points: usize,
    /// Base point per level.
    base: Vec<usize>,
    /// Generators of the level-`i` group (the stabilizer of `base[..i]`).
    strong: Vec<Vec<Permutation>>,
    /// Transversal per level: point -> group element mapping `base[i]` there.
    transversals: Vec<BTreeMap<usize, Permutation>>,
}

impl StabChain {
    fn rebuild_transversal(&mut self, i: usize) {
        let mut transversal = BTreeMap::new();
        transversal.insert(self.base[i], Permutation::identity(self.points));
        let mut queue = VecDeque::from([self.base[i]]);
        while let Some(x) = queue.pop_front() {
            let tx = transversal[&x].clone();
            for g in &self.strong[i] {
                let y = g.apply(x);
                if !transversal.contains_key(&y) {
                    transversal.insert(y, g.compose(&tx));
                    queue.push_back(y);
                }
            }
        }
        self.transversals[i] = transversal;
    }

    /// Sift `g` through levels `from..`; returns the residue and the level
    /// where sifting stopped (`self.base.len()` when it went all the way).
    fn strip(&self, mut g: Permutation, from: usize) -> (Permutation, usize) {
        for i in from..self.base.len() {
            let x = g.apply(self.base[i]);
            match self.transversals[i].get(&x) {
                Some(t) => g = t.inverse().compose(&g),
                None => return (g, i),
            }
        }
        (g, self.base.len())
    }

    fn push_level(&mut self, point: usize) {
        self.base.push(point);
        self.strong.push(Vec::new());
        self.transversals.push(BTreeMap::new());
    }

    /// Make level `i` complete: every Schreier generator of the level must
    /// lie in the group of level `i+1`. Inserting a residue at deeper
    /// levels re-completes them first, so membership conclusions drawn here
    /// stay valid (generator sets only ever grow).
    fn complete(&mut self, i: usize) {
        self.rebuild_transversal(i);
        let points: Vec<usize> = self.transversals[i].keys().copied().collect();
        for x in points {
            let tx = self.transversals[i][&x].clone();
            for k in 0..self.strong[i].len() {
                let g = self.strong[i][k].clone();
                let y = g.apply(x);
                let ty = self.transversals[i][&y].clone();
                let schreier = ty.inverse().compose(&g.compose(&tx));
                if schreier.is_identity() {
                    continue;
                }
                let (h, j) = self.strip(schreier, i + 1);
                if h.is_identity() {
                    continue;
                }
                if j == self.base.len() {
                    let point = (0..self.points)
                        .find(|&p| h.apply(p) != p)
                        .expect("non-identity permutation moves a point");
                    self.push_level(point);
                }
                for l in (i + 1)..=j {
                    self.strong[l].push(h.clone());
                }
                for l in ((i + 1)..=j).rev() {
                    self.complete(l);
                }
            }
        }
    }
}

/// Exact order of the group generated by `gens`, via a deterministic
/// Schreier-Sims stabilizer chain. Base points are always the first moved
/// points in id order, so base and strong-generator counts are
/// reproducible across runs.
pub fn group_order(gens: &[Permutation]) -> GroupOrderResult {
    assert!(!gens.is_empty(), "group_order needs at least one generator");
    let n = gens[0].len();
    let nontrivial: Vec<Permutation> =
        gens.iter().filter(|g| !g.is_identity()).cloned().collect();
    if nontrivial.is_empty() {
        return GroupOrderResult { order: BigUint::one(), base: vec![], strong_generator_count: 0 };
    }
    let first_moved = (0..n)
        .find(|&p| nontrivial.iter().any(|g| g.apply(p) != p))
        .expect("some generator moves a point");
    let mut chain = StabChain {
        points: n,
        base: vec![first_moved],
        strong: vec![nontrivial],
        transversals: vec![BTreeMap::new()],
    };
    // Generators fixing the first base point really belong to level 1; the
    // completion pass sifts them there via their Schreier generators, which
    // include the generators themselves (x = base, tx = id).
    chain.complete(0);
    let mut order = BigUint::one();
    for t in &chain.transversals {
        order *= BigUint::from(t.len());
    }
    let strong_generator_count = chain
        .strong
        .iter()
        .flatten()
        .collect::<HashSet<_>>()
        .len();
    GroupOrderResult { order, base: chain.base, strong_generator_count }
}

/// Order by brute-force closure: multiply until no new elements appear.
/// Restricted to at most 256 points; the element set is held in memory.
pub fn brute_force_order(gens: &[Permutation]) -> BigUint {
    assert!(!gens.is_empty());
    let n = gens[0].len();
    assert!(n <= 256, "brute-force closure is limited to 256 points");
    let pack = |p: &Permutation| -> Box<[u8]> {
        p.images.iter().map(|&x| x as u8).collect()
    };
    let gens8: Vec<Box<[u8]>> = gens.iter().map(pack).collect();
    let id: Box<[u8]> = (0..n).map(|i| i as u8).collect();
    let mut seen: HashSet<Box<[u8]>> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in &gens8 {
            // g after p.
            let q: Box<[u8]> = p.iter().map(|&x| g[x as usize]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    BigUint::from(seen.len())
}
