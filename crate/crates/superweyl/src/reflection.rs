//! Even and odd reflections as transforms of ordered fundamental systems.
//!
//! Even reflections act linearly, root by root, preserving the order. The
//! odd reflection at an isotropic root fixes every system that does not
//! contain the root or its negative; otherwise position `k` receives the
//! negated root and each other root moves by the reflecting root when their
//! pairing is nonzero. In the `spo` families of type C/D the two last
//! positions are swapped when the reflected root sits at the end, so that
//! the long root produced by the reflection stays last.

use crate::catalog::{AlgebraCatalog, Family};
use crate::rootspace::{pairing, rank, rat, GramForm, RootVector};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::collections::BTreeSet;

/// An ordered fundamental system together with its unordered identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FundamentalSystem {
    roots: Vec<RootVector>,
}

/// The unordered identity of a Borel: the sorted root set.
pub type CanonicalKey = Vec<RootVector>;

impl FundamentalSystem {
    pub fn new(roots: Vec<RootVector>) -> Self {
        debug_assert_eq!(rank(&roots), roots.len(), "fundamental system must be independent");
        FundamentalSystem { roots }
    }

    pub fn roots(&self) -> &[RootVector] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Order-independent key; two systems are the same Borel iff equal here.
    pub fn canonical_key(&self) -> CanonicalKey {
        let mut k = self.roots.clone();
        k.sort();
        k
    }

    pub fn contains(&self, r: &RootVector) -> bool {
        self.roots.iter().any(|x| x == r)
    }

    pub fn as_set(&self) -> BTreeSet<RootVector> {
        self.roots.iter().cloned().collect()
    }
}

/// Parity of a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReflectionKind {
    Even,
    Odd,
}

/// A super simple reflection, indexed by a member of the extended system.
#[derive(Debug, Clone)]
pub struct SuperReflection {
    pub root: RootVector,
    pub kind: ReflectionKind,
}

impl SuperReflection {
    /// Kind is `Odd` exactly when the root is isotropic.
    pub fn new(cat: &AlgebraCatalog, root: RootVector) -> Self {
        let kind = if cat.is_isotropic_root(&root) {
            ReflectionKind::Odd
        } else {
            ReflectionKind::Even
        };
        SuperReflection { root, kind }
    }
}

/// Generators of the super Weyl group, one per extended-system member.
pub fn super_simple_reflections(cat: &AlgebraCatalog) -> Vec<SuperReflection> {
    cat.extended_pi.iter().map(|r| SuperReflection::new(cat, r.clone())).collect()
}

/// Linear reflection `v - 2 (v, axis)/(axis, axis) * axis`.
///
/// Panics on an isotropic axis: that signals a caller bug, odd roots never
/// go through the linear formula.
pub fn even_reflect_vector(form: &GramForm, axis: &RootVector, v: &RootVector) -> RootVector {
    let denom = pairing(form, axis, axis);
    assert!(!denom.is_zero(), "even reflection at an isotropic axis");
    let num = pairing(form, v, axis);
    if num.is_zero() {
        return v.clone();
    }
    let coeff = num
        .div_exact(&denom)
        .expect("reflection coefficient must be an exact rational")
        * rat(2);
    v.sub(&axis.scale(&coeff))
}

/// Apply one super simple reflection to an ordered fundamental system.
pub fn apply_generator(
    cat: &AlgebraCatalog,
    gen: &SuperReflection,
    fs: &FundamentalSystem,
) -> FundamentalSystem {
    match gen.kind {
        ReflectionKind::Even => {
            let roots = fs
                .roots()
                .iter()
                .map(|r| even_reflect_vector(&cat.form, &gen.root, r))
                .collect();
            FundamentalSystem::new(roots)
        }
        ReflectionKind::Odd => {
            let neg = gen.root.negate();
            let k = fs.roots().iter().position(|r| *r == gen.root || *r == neg);
            let Some(k) = k else {
                return fs.clone();
            };
            let theta = fs.roots()[k].clone();
            let mut out: Vec<RootVector> = fs
                .roots()
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    if i == k {
                        theta.negate()
                    } else if pairing(&cat.form, r, &theta).is_zero() {
                        r.clone()
                    } else {
                        r.add(&theta)
                    }
                })
                .collect();
            let last = fs.len() - 1;
            if k == last && matches!(cat.spec.family, Family::SpoD | Family::SpoC) {
                // The reflected root sat at the end, so the previous position
                // now holds a long root; keep the long root last.
                debug_assert!(is_long(&out[last - 1]), "expected a long root before the end");
                out.swap(last - 1, last);
            }
            debug_assert!(
                out.iter().all(|r| cat.is_root(r)),
                "odd reflection left the root system"
            );
            FundamentalSystem::new(out)
        }
    }
}

fn is_long(v: &RootVector) -> bool {
    let support = v.support();
    if support.len() != 1 {
        return false;
    }
    let c = &v.coords[support[0]];
    c.denom() == &BigInt::one() && c.numer().abs() == BigInt::from(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_catalog, parse_spec, AlgebraSpec};
    use crate::rootspace::RootVector;

    fn fs(cat: &AlgebraCatalog) -> FundamentalSystem {
        FundamentalSystem::new(cat.standard_pi.clone())
    }

    #[test]
    fn even_reflection_examples() {
        let gl12 = build_catalog(&AlgebraSpec::gl(1, 2)).unwrap();
        // s_{e1-e2} exchanges e1 and e2.
        let axis = RootVector::from_ints(&[0, 1, -1]);
        let e1 = RootVector::from_ints(&[0, 1, 0]);
        assert_eq!(
            even_reflect_vector(&gl12.form, &axis, &e1),
            RootVector::from_ints(&[0, 0, 1])
        );
        let spo24 = build_catalog(&parse_spec("spo(2|4)").unwrap()).unwrap();
        // s_{2d1}: d1 -> -d1.
        let axis = RootVector::from_ints(&[2, 0, 0]);
        let v = RootVector::from_ints(&[1, -1, 0]);
        assert_eq!(
            even_reflect_vector(&spo24.form, &axis, &v),
            RootVector::from_ints(&[-1, -1, 0])
        );
        // s_{e1+e2} fixes e1-e2.
        let axis = RootVector::from_ints(&[0, 1, 1]);
        let v = RootVector::from_ints(&[0, 1, -1]);
        assert_eq!(even_reflect_vector(&spo24.form, &axis, &v), v);
    }

    #[test]
    #[should_panic(expected = "isotropic axis")]
    fn even_reflection_rejects_isotropic_axis() {
        let cat = build_catalog(&AlgebraSpec::gl(1, 2)).unwrap();
        let axis = RootVector::from_ints(&[1, -1, 0]);
        let v = RootVector::from_ints(&[0, 1, -1]);
        even_reflect_vector(&cat.form, &axis, &v);
    }

    #[test]
    fn even_reflections_permute_the_root_set() {
        for text in ["gl(2|2)", "spo(2|4)", "spo(2|3)", "G(3)", "F(4)", "D(2,1)"] {
            let cat = build_catalog(&parse_spec(text).unwrap()).unwrap();
            for gen in super_simple_reflections(&cat) {
                if matches!(gen.kind, ReflectionKind::Odd) {
                    continue;
                }
                let mut image: Vec<RootVector> = cat
                    .roots
                    .iter()
                    .map(|r| even_reflect_vector(&cat.form, &gen.root, r))
                    .collect();
                image.sort();
                assert_eq!(image, cat.roots, "{text}");
            }
        }
    }

    #[test]
    fn odd_reflection_on_gl_standard_system() {
        // gl(2|2): reflecting the standard system at d2-e1 gives
        // {d1-e1, e1-d2, d2-e2}.
        let cat = build_catalog(&AlgebraSpec::gl(2, 2)).unwrap();
        let gamma = RootVector::from_ints(&[0, 1, -1, 0]);
        let gen = SuperReflection::new(&cat, gamma);
        assert!(matches!(gen.kind, ReflectionKind::Odd));
        let out = apply_generator(&cat, &gen, &fs(&cat));
        assert_eq!(
            out.roots(),
            &[
                RootVector::from_ints(&[1, 0, -1, 0]),
                RootVector::from_ints(&[0, -1, 1, 0]),
                RootVector::from_ints(&[0, 1, 0, -1]),
            ]
        );
    }

    #[test]
    fn odd_reflection_fixes_systems_without_the_root() {
        let cat = build_catalog(&parse_spec("spo(2|4)").unwrap()).unwrap();
        let gens = super_simple_reflections(&cat);
        let odd = gens.iter().find(|g| matches!(g.kind, ReflectionKind::Odd)).unwrap();
        let start = fs(&cat);
        let once = apply_generator(&cat, odd, &start);
        let twice = apply_generator(&cat, odd, &once);
        assert_eq!(twice.canonical_key(), start.canonical_key());
        // A system far from the root is fixed: reflect the standard system by
        // s_{2d1} first, removing +-(d1-e1).
        let even = &gens[0];
        let moved = apply_generator(&cat, even, &start);
        assert!(!moved.contains(&odd.root) && !moved.contains(&odd.root.negate()));
        assert_eq!(apply_generator(&cat, odd, &moved), moved);
    }

    #[test]
    fn generators_are_involutions_on_borels() {
        for text in ["gl(1|2)", "gl(2|2)", "spo(2|2)", "spo(2|4)", "spo(2|3)", "D(2,1)"] {
            let cat = build_catalog(&parse_spec(text).unwrap()).unwrap();
            let start = fs(&cat);
            for gen in super_simple_reflections(&cat) {
                let once = apply_generator(&cat, &gen, &start);
                let twice = apply_generator(&cat, &gen, &once);
                assert_eq!(twice.canonical_key(), start.canonical_key(), "{text}");
            }
        }
    }

    #[test]
    fn case_one_keeps_the_long_root_last() {
        // spo(2|2): the system (-d1-e1, e1-d1) reflects at e1-d1 into
        // (d1-e1, -2d1).
        let cat = build_catalog(&parse_spec("spo(2|2)").unwrap()).unwrap();
        let sys = FundamentalSystem::new(vec![
            RootVector::from_ints(&[-1, -1]),
            RootVector::from_ints(&[-1, 1]),
        ]);
        let odd = SuperReflection::new(&cat, cat.standard_pi[0].clone());
        let out = apply_generator(&cat, &odd, &sys);
        assert_eq!(
            out.roots(),
            &[RootVector::from_ints(&[1, -1]), RootVector::from_ints(&[-2, 0])]
        );
    }
}
