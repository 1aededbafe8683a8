//! Breadth-first closure of the standard system under the super simple
//! reflections, with deterministic ids.

use crate::catalog::{AlgebraCatalog, AlgebraSpec, Family};
use crate::reflection::{
    apply_generator, super_simple_reflections, CanonicalKey, FundamentalSystem,
};
use crate::rootspace::{is_isotropic, pairing, RootVector};
use crate::{Error, Result};
use std::collections::{BTreeSet, HashMap, VecDeque};

const ENUMERATION_LIMIT: u128 = 10_000_000;

/// The full set of Borels (fundamental systems) of an algebra.
///
/// Systems are sorted by canonical key; the stored representative of each
/// Borel is the ordered system first reached from the ordered standard one.
#[derive(Debug, Clone)]
pub struct BorelSet {
    systems: Vec<FundamentalSystem>,
    index: HashMap<CanonicalKey, usize>,
}

impl BorelSet {
    fn from_discovered(discovered: Vec<FundamentalSystem>) -> Self {
        let mut systems = discovered;
        systems.sort_by_cached_key(|s| s.canonical_key());
        let index = systems
            .iter()
            .enumerate()
            .map(|(i, s)| (s.canonical_key(), i))
            .collect();
        BorelSet { systems, index }
    }

    pub fn len(&self) -> usize {
        self.systems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.systems.is_empty()
    }

    pub fn systems(&self) -> &[FundamentalSystem] {
        &self.systems
    }

    pub fn id_of(&self, key: &CanonicalKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn id_of_system(&self, fs: &FundamentalSystem) -> Option<usize> {
        self.id_of(&fs.canonical_key())
    }

    /// Keys of all systems, sorted (the iteration order of `systems`).
    pub fn keys(&self) -> Vec<CanonicalKey> {
        self.systems.iter().map(|s| s.canonical_key()).collect()
    }
}

/// Enumerate all fundamental systems by closure under the generator set.
pub fn enumerate_borels(cat: &AlgebraCatalog) -> Result<BorelSet> {
    if let Some(expected) = expected_count(&cat.spec) {
        if expected > ENUMERATION_LIMIT {
            return Err(Error::TooLarge { expected, limit: ENUMERATION_LIMIT });
        }
    }
    let gens = super_simple_reflections(cat);
    let start = FundamentalSystem::new(cat.standard_pi.clone());
    let mut discovered = vec![start.clone()];
    let mut seen: HashMap<CanonicalKey, usize> = HashMap::new();
    seen.insert(start.canonical_key(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let current = discovered[i].clone();
        for gen in &gens {
            let image = apply_generator(cat, gen, &current);
            let key = image.canonical_key();
            if !seen.contains_key(&key) {
                seen.insert(key, discovered.len());
                discovered.push(image);
                queue.push_back(discovered.len() - 1);
            }
        }
    }
    Ok(BorelSet::from_discovered(discovered))
}

/// Independent closure used as an oracle: from every discovered system,
/// reflect at each of its own simple roots (odd reflection at isotropic
/// ones, linear reflection at the rest), working with unordered root sets.
pub fn enumerate_borels_oracle(cat: &AlgebraCatalog) -> Result<BorelSet> {
    if let Some(expected) = expected_count(&cat.spec) {
        if expected > ENUMERATION_LIMIT {
            return Err(Error::TooLarge { expected, limit: ENUMERATION_LIMIT });
        }
    }
    let start: BTreeSet<RootVector> = cat.standard_pi.iter().cloned().collect();
    let mut seen: BTreeSet<BTreeSet<RootVector>> = BTreeSet::new();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start]);
    while let Some(current) = queue.pop_front() {
        for gamma in current.iter().cloned().collect::<Vec<_>>() {
            let image = reflect_set_at_simple(cat, &current, &gamma);
            if !seen.contains(&image) {
                seen.insert(image.clone());
                queue.push_back(image);
            }
        }
    }
    let discovered = seen
        .into_iter()
        .map(|set| FundamentalSystem::new(set.into_iter().collect()))
        .collect();
    Ok(BorelSet::from_discovered(discovered))
}

/// Reflect an unordered fundamental system at one of its own simple roots.
fn reflect_set_at_simple(
    cat: &AlgebraCatalog,
    system: &BTreeSet<RootVector>,
    gamma: &RootVector,
) -> BTreeSet<RootVector> {
    if is_isotropic(&cat.form, gamma) {
        // New system {-gamma} + {a + gamma : (a, gamma) != 0} + {a : (a, gamma) = 0}.
        let mut out = BTreeSet::new();
        out.insert(gamma.negate());
        for a in system {
            if a == gamma {
                continue;
            }
            if pairing(&cat.form, a, gamma).is_zero() {
                out.insert(a.clone());
            } else {
                out.insert(a.add(gamma));
            }
        }
        out
    } else {
        let denom = pairing(&cat.form, gamma, gamma);
        system
            .iter()
            .map(|a| {
                let num = pairing(&cat.form, a, gamma);
                if num.is_zero() {
                    a.clone()
                } else {
                    let coeff = num
                        .div_exact(&denom)
                        .expect("reflection coefficient must be an exact rational")
                        * crate::rootspace::rat(2);
                    a.sub(&gamma.scale(&coeff))
                }
            })
            .collect()
    }
}

/// Closed-form count of fundamental systems, when one exists.
///
/// `gl(m|n)`: `(m+n)!`. `spo(2m|2n)`: systems without a long root number
/// `n/(m+n) * 2^(m+n-1) * (m+n)!` and systems with one
/// `m/(m+n) * 2^(m+n) * (m+n)!`. `spo(2m|2n+1)`: `2^(m+n) * (m+n)!`.
pub fn expected_count(spec: &AlgebraSpec) -> Option<u128> {
    let factorial = |k: usize| -> u128 { (1..=k as u128).product() };
    match spec.family {
        Family::Gl => Some(factorial(spec.m + spec.n)),
        Family::SpoD | Family::SpoC => {
            let (m, n) = (spec.m as u128, spec.n as u128);
            let t = m + n;
            let f = factorial(spec.m + spec.n);
            // Both terms are integers: 2^(t-1) * (t-1)! * n and 2^t * (t-1)! * m.
            let no_long = (1u128 << (t - 1)) * f / t * n;
            let long = (1u128 << t) * f / t * m;
            Some(no_long + long)
        }
        Family::SpoB => {
            let t = spec.m + spec.n;
            Some((1u128 << t) * factorial(t))
        }
        Family::D21Alpha | Family::F4 | Family::G3 => None,
    }
}
