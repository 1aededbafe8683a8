//! Defining sequences: a bijective encoding of ordered fundamental systems
//! as (signed) index sequences for the `gl` and `spo` families, together
//! with the generator action expressed directly on sequences.
//!
//! An ordered system of these families telescopes: each root reads
//! `s_l e_{i_l} - s_{l+1} e_{i_{l+1}}` and the final root carries its own
//! initial term (a short root in the odd orthogonal case, a long or sum
//! root otherwise). The sequence records the signed initial indices.

use crate::catalog::{AlgebraCatalog, Family};
use crate::enumerator::{enumerate_borels, BorelSet};
use crate::reflection::{FundamentalSystem, SuperReflection};
use crate::rootspace::{all_same_sign_integers, rank, rat, solve_coordinates, RootVector};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Signed index sequence over the basis coordinates.
///
/// An entry `(sign, coord)` stands for the signed index `sign * i` where
/// `i` is barred when `coord < m` (a `delta` index) and plain otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DefiningSequence {
    pub family: Family,
    pub entries: Vec<(i8, usize)>,
}

impl DefiningSequence {
    /// Render entries as strings: `b3` for the third barred index, `-b3`
    /// for its negative, plain indices as `2` / `-2`. Signs are suppressed
    /// for `gl`, whose sequences are unsigned.
    pub fn to_strings(&self, cat: &AlgebraCatalog) -> Vec<String> {
        let m = cat.spec.m;
        self.entries
            .iter()
            .map(|&(s, c)| {
                let body = if c < m {
                    format!("b{}", c + 1)
                } else {
                    format!("{}", c - m + 1)
                };
                if s < 0 && self.family != Family::Gl {
                    format!("-{body}")
                } else {
                    body
                }
            })
            .collect()
    }
}

/// Coefficients of a root as small integers, requiring every entry to be
/// `+-1` or `+-2`. Returns `(coord, coeff)` pairs over the support.
fn small_coeffs(v: &RootVector) -> Option<Vec<(usize, i8)>> {
    let mut out = Vec::new();
    for (i, c) in v.coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.denom() != &BigInt::one() {
            return None;
        }
        let n = c.numer();
        let coeff = if *n == BigInt::one() {
            1
        } else if *n == BigInt::from(-1) {
            -1
        } else if *n == BigInt::from(2) {
            2
        } else if *n == BigInt::from(-2) {
            -2
        } else {
            return None;
        };
        out.push((i, coeff));
    }
    Some(out)
}

fn codec_supported(family: Family) -> bool {
    matches!(family, Family::Gl | Family::SpoD | Family::SpoC | Family::SpoB)
}

/// Read the defining sequence off an ordered fundamental system.
pub fn encode(cat: &AlgebraCatalog, fs: &FundamentalSystem) -> Result<DefiningSequence> {
    let family = cat.spec.family;
    if !codec_supported(family) {
        return Err(Error::NoSequenceCodec(cat.spec.to_string()));
    }
    if family == Family::Gl {
        return encode_gl(cat, fs);
    }
    encode_spo(cat, fs)
}

fn encode_gl(cat: &AlgebraCatalog, fs: &FundamentalSystem) -> Result<DefiningSequence> {
    let shape = |msg: &str| Error::ShapeViolation(format!("{}: {msg}", cat.spec));
    let n_roots = fs.len();
    let mut entries = Vec::with_capacity(n_roots + 1);
    let mut prev_minus: Option<usize> = None;
    for root in fs.roots() {
        let sup = small_coeffs(root).ok_or_else(|| shape("non-unit coefficients"))?;
        let plus = sup.iter().find(|&&(_, c)| c == 1);
        let minus = sup.iter().find(|&&(_, c)| c == -1);
        let (Some(&(p, _)), Some(&(q, _))) = (plus, minus) else {
            return Err(shape("root is not a difference of basis vectors"));
        };
        if sup.len() != 2 {
            return Err(shape("root is not a difference of basis vectors"));
        }
        if let Some(expected) = prev_minus {
            if p != expected {
                return Err(shape("chain does not telescope"));
            }
        } else {
            entries.push((1, p));
        }
        entries.push((1, q));
        prev_minus = Some(q);
    }
    check_permutation(cat, &entries)?;
    Ok(DefiningSequence { family: Family::Gl, entries })
}

fn encode_spo(cat: &AlgebraCatalog, fs: &FundamentalSystem) -> Result<DefiningSequence> {
    let family = cat.spec.family;
    let shape = |msg: &str| Error::ShapeViolation(format!("{}: {msg}", cat.spec));
    let n = fs.len();
    let supports: Vec<Vec<(usize, i8)>> = fs
        .roots()
        .iter()
        .map(|r| small_coeffs(r).ok_or_else(|| shape("bad coefficients")))
        .collect::<Result<_>>()?;
    if supports[0].len() != 2 {
        return Err(shape("first root must involve two indices"));
    }

    let thread = |first: usize| -> Option<Vec<(i8, usize)>> {
        let mut idx = vec![usize::MAX; n];
        let mut sgn = vec![0i8; n];
        idx[0] = first;
        sgn[0] = supports[0].iter().find(|&&(i, _)| i == first)?.1;
        if sgn[0].abs() != 1 {
            return None;
        }
        for l in 0..n - 1 {
            let sup = &supports[l];
            if sup.len() != 2 {
                return None;
            }
            let &(other, oc) = sup.iter().find(|&&(i, _)| i != idx[l])?;
            if oc.abs() != 1 {
                return None;
            }
            // Root l reads s_l e_{i_l} - s_{l+1} e_{i_{l+1}}.
            let next_sign = -oc;
            if idx[..=l].contains(&other) {
                return None;
            }
            idx[l + 1] = other;
            sgn[l + 1] = next_sign;
            let sup_next = &supports[l + 1];
            let initial = sup_next.iter().find(|&&(i, _)| i == other);
            let last = l + 1 == n - 1;
            match initial {
                None => return None,
                Some(&(_, c)) => {
                    if last {
                        match family {
                            Family::SpoB => {
                                if sup_next.len() != 1 || c != next_sign {
                                    return None;
                                }
                            }
                            Family::SpoD | Family::SpoC => {
                                let ok_pair = sup_next.len() == 2 && c == next_sign;
                                let ok_long = sup_next.len() == 1 && c == 2 * next_sign;
                                if !ok_pair && !ok_long {
                                    return None;
                                }
                            }
                            _ => unreachable!(),
                        }
                    } else if sup_next.len() != 2 || c != next_sign {
                        return None;
                    }
                }
            }
        }
        Some(sgn.into_iter().zip(idx).collect())
    };

    let mut found = Vec::new();
    for &(first, _) in &supports[0] {
        if let Some(entries) = thread(first) {
            found.push(entries);
        }
    }
    match found.len() {
        1 => {
            let entries = found.into_iter().next().unwrap();
            check_permutation(cat, &entries)?;
            Ok(DefiningSequence { family, entries })
        }
        0 => Err(shape("no telescoping reading")),
        _ => Err(shape("ambiguous telescoping reading")),
    }
}

fn check_permutation(cat: &AlgebraCatalog, entries: &[(i8, usize)]) -> Result<()> {
    let dim = cat.dimension;
    let mut seen = vec![false; dim];
    if entries.len() != dim {
        return Err(Error::ShapeViolation(format!(
            "{}: sequence length {} does not match rank {dim}",
            cat.spec,
            entries.len()
        )));
    }
    for &(s, c) in entries {
        if c >= dim || seen[c] || s.abs() != 1 {
            return Err(Error::ShapeViolation(format!(
                "{}: sequence is not a signed permutation",
                cat.spec
            )));
        }
        seen[c] = true;
    }
    Ok(())
}

/// True when `roots` is a fundamental system of the catalog: independent,
/// and every catalog root is an all-nonnegative or all-nonpositive integer
/// combination of it.
pub fn is_fundamental_system(cat: &AlgebraCatalog, roots: &[RootVector]) -> bool {
    if rank(roots) != roots.len() {
        return false;
    }
    cat.roots.iter().all(|r| {
        solve_coordinates(roots, r)
            .map(|coords| all_same_sign_integers(&coords))
            .unwrap_or(false)
    })
}

/// Reconstruct the ordered fundamental system of a sequence.
///
/// Enumerates the Borel set internally; use [`decode_with`] to reuse an
/// existing enumeration.
pub fn decode(cat: &AlgebraCatalog, seq: &DefiningSequence) -> Result<FundamentalSystem> {
    let borels = enumerate_borels(cat)?;
    decode_with(cat, &borels, seq)
}

/// Reconstruct the ordered fundamental system of a sequence against a
/// previously enumerated Borel set.
pub fn decode_with(
    cat: &AlgebraCatalog,
    borels: &BorelSet,
    seq: &DefiningSequence,
) -> Result<FundamentalSystem> {
    if !codec_supported(cat.spec.family) {
        return Err(Error::NoSequenceCodec(cat.spec.to_string()));
    }
    if seq.family != cat.spec.family {
        return Err(Error::UnknownSequence);
    }
    check_permutation(cat, &seq.entries).map_err(|_| Error::UnknownSequence)?;
    let fs = reconstruct(cat, seq).ok_or(Error::UnknownSequence)?;
    // The reconstruction must denote an enumerated Borel whose stored
    // representative reads back to the same sequence.
    let id = borels.id_of_system(&fs).ok_or(Error::UnknownSequence)?;
    let stored = &borels.systems()[id];
    let back = encode(cat, stored)?;
    if back != *seq {
        return Err(Error::UnknownSequence);
    }
    debug_assert_eq!(stored.roots(), fs.roots());
    Ok(fs)
}

fn unit(cat: &AlgebraCatalog, coord: usize, sign: i8) -> RootVector {
    let mut v = RootVector::zero(cat.dimension);
    v.coords[coord] = rat(sign as i64);
    v
}

fn reconstruct(cat: &AlgebraCatalog, seq: &DefiningSequence) -> Option<FundamentalSystem> {
    let entries = &seq.entries;
    let n = entries.len();
    let mut roots = Vec::with_capacity(n);
    match cat.spec.family {
        Family::Gl => {
            for l in 0..n - 1 {
                let a = unit(cat, entries[l].1, 1);
                let b = unit(cat, entries[l + 1].1, 1);
                roots.push(a.sub(&b));
            }
        }
        Family::SpoB => {
            for l in 0..n - 1 {
                let a = unit(cat, entries[l].1, entries[l].0);
                let b = unit(cat, entries[l + 1].1, entries[l + 1].0);
                roots.push(a.sub(&b));
            }
            roots.push(unit(cat, entries[n - 1].1, entries[n - 1].0));
        }
        Family::SpoD | Family::SpoC => {
            for l in 0..n - 1 {
                let a = unit(cat, entries[l].1, entries[l].0);
                let b = unit(cat, entries[l + 1].1, entries[l + 1].0);
                roots.push(a.sub(&b));
            }
            // The last root starts with the final signed index; its second
            // term is pinned down by requiring a valid fundamental system.
            let (s, c) = entries[n - 1];
            let mut candidates = Vec::new();
            for r in &cat.roots {
                let sup = small_coeffs(r)?;
                let initial_ok = match sup.len() {
                    1 => sup[0] == (c, 2 * s),
                    2 => sup.iter().any(|&(i, cf)| i == c && cf == s),
                    _ => false,
                };
                if !initial_ok {
                    continue;
                }
                if roots.iter().any(|p| p == r || p.negate() == *r) {
                    continue;
                }
                let mut trial = roots.clone();
                trial.push(r.clone());
                if is_fundamental_system(cat, &trial) {
                    candidates.push(r.clone());
                }
            }
            if candidates.len() != 1 {
                return None;
            }
            roots.push(candidates.pop()?);
        }
        _ => return None,
    }
    if !is_fundamental_system(cat, &roots) {
        return None;
    }
    Some(FundamentalSystem::new(roots))
}

/// Coordinates of the two indices moved by the odd generator.
fn odd_pair(cat: &AlgebraCatalog) -> (usize, usize) {
    let m = cat.spec.m;
    match cat.spec.family {
        // Odd root e1 - d1: indices 1-bar and 1.
        Family::SpoC => (0, m),
        // Odd root d_m - e_1 for gl, B and D.
        _ => (m - 1, m),
    }
}

/// The generator action expressed directly on defining sequences.
pub fn sequence_action(
    cat: &AlgebraCatalog,
    gen: &SuperReflection,
    seq: &DefiningSequence,
) -> Result<DefiningSequence> {
    if !codec_supported(cat.spec.family) {
        return Err(Error::NoSequenceCodec(cat.spec.to_string()));
    }
    let mut entries = seq.entries.clone();
    let sup = small_coeffs(&gen.root)
        .ok_or_else(|| Error::ShapeViolation("generator root has bad coefficients".into()))?;
    let pos_of = |entries: &[(i8, usize)], coord: usize| -> usize {
        entries.iter().position(|&(_, c)| c == coord).expect("sequence covers all indices")
    };
    match sup.as_slice() {
        // Long root +-2 d_p: negate the barred entry p.
        [(c, pm)] if pm.abs() == 2 => {
            let p = pos_of(&entries, *c);
            entries[p].0 = -entries[p].0;
        }
        // Short root +-e_q (odd orthogonal family): negate that entry.
        [(c, pm)] if pm.abs() == 1 => {
            let p = pos_of(&entries, *c);
            entries[p].0 = -entries[p].0;
        }
        [(a, ca), (b, cb)] if ca * cb == -1 => {
            let (oa, ob) = odd_pair(cat);
            let mixed = (*a == oa && *b == ob) || (*a == ob && *b == oa);
            let same_sort = {
                let m = cat.spec.m;
                (*a < m && *b < m) || (*a >= m && *b >= m)
            };
            if same_sort && !mixed {
                // Even transposition: exchange the two values, each position
                // keeps its sign.
                let pa = pos_of(&entries, *a);
                let pb = pos_of(&entries, *b);
                let (ca_, cb_) = (entries[pa].1, entries[pb].1);
                entries[pa].1 = cb_;
                entries[pb].1 = ca_;
            } else {
                odd_action(cat, &mut entries);
            }
        }
        // Sum root e_{n-1} + e_n (type D tail): exchange the two values and
        // negate both signs.
        [(a, _), (b, _)] => {
            let pa = pos_of(&entries, *a);
            let pb = pos_of(&entries, *b);
            let (va, vb) = (entries[pa].1, entries[pb].1);
            entries[pa] = (-entries[pa].0, vb);
            entries[pb] = (-entries[pb].0, va);
        }
        _ => {
            return Err(Error::ShapeViolation("unsupported generator root".into()));
        }
    }
    Ok(DefiningSequence { family: seq.family, entries })
}

fn odd_action(cat: &AlgebraCatalog, entries: &mut [(i8, usize)]) {
    let (vm, v1) = odd_pair(cat);
    let pm = entries.iter().position(|&(_, c)| c == vm).unwrap();
    let p1 = entries.iter().position(|&(_, c)| c == v1).unwrap();
    let n = entries.len();
    let case_cd = matches!(cat.spec.family, Family::SpoD | Family::SpoC);
    if case_cd && p1 == n - 1 && pm == n - 2 && entries[pm].0 == -entries[p1].0 {
        // The system ends with the odd root; exchanging produces the long
        // root, which stays last: (..., -+bar, +-1) -> (..., -+1, -+bar).
        let s = entries[pm].0;
        entries[n - 2] = (s, v1);
        entries[n - 1] = (s, vm);
        return;
    }
    if pm.abs_diff(p1) == 1 && entries[pm].0 == entries[p1].0 {
        entries.swap(pm, p1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_catalog, parse_spec};
    use crate::reflection::{apply_generator, super_simple_reflections};

    fn seq_strings(text: &str, fs: &FundamentalSystem) -> Vec<String> {
        let cat = build_catalog(&parse_spec(text).unwrap()).unwrap();
        encode(&cat, fs).unwrap().to_strings(&cat)
    }

    #[test]
    fn standard_sequences() {
        for (text, expected) in [
            ("gl(2|3)", vec!["b1", "b2", "1", "2", "3"]),
            ("spo(4|4)", vec!["b1", "b2", "1", "2"]),
            ("spo(4|2)", vec!["1", "b1", "b2"]),
            ("spo(4|3)", vec!["b1", "b2", "1"]),
        ] {
            let cat = build_catalog(&parse_spec(text).unwrap()).unwrap();
            let fs = FundamentalSystem::new(cat.standard_pi.clone());
            assert_eq!(seq_strings(text, &fs), expected, "{text}");
        }
    }

    #[test]
    fn long_root_flip_on_the_standard_sequence() {
        // spo(2m|2n) standard under the 2 d1 reflection: (-b1, b2, ..., n).
        let cat = build_catalog(&parse_spec("spo(4|4)").unwrap()).unwrap();
        let gens = super_simple_reflections(&cat);
        let fs = FundamentalSystem::new(cat.standard_pi.clone());
        let seq = encode(&cat, &fs).unwrap();
        let moved = sequence_action(&cat, &gens[0], &seq).unwrap();
        assert_eq!(moved.to_strings(&cat), vec!["-b1", "b2", "1", "2"]);
        // And it matches the root-level reflection.
        let fs_moved = apply_generator(&cat, &gens[0], &fs);
        assert_eq!(encode(&cat, &fs_moved).unwrap(), moved);
    }

    #[test]
    fn odd_swap_on_the_standard_sequence() {
        let cat = build_catalog(&parse_spec("spo(4|4)").unwrap()).unwrap();
        let gens = super_simple_reflections(&cat);
        let odd = gens
            .iter()
            .find(|g| matches!(g.kind, crate::reflection::ReflectionKind::Odd))
            .unwrap();
        let fs = FundamentalSystem::new(cat.standard_pi.clone());
        let seq = encode(&cat, &fs).unwrap();
        let moved = sequence_action(&cat, odd, &seq).unwrap();
        assert_eq!(moved.to_strings(&cat), vec!["b1", "1", "b2", "2"]);
    }

    #[test]
    fn spo23_sequences_cover_the_expected_list() {
        // The eight systems of spo(2|3) carry the sequences
        // b1 1, b1 -1, -b1 1, -b1 -1, -1 -b1, 1 -b1, -1 b1, 1 b1.
        let cat = build_catalog(&parse_spec("spo(2|3)").unwrap()).unwrap();
        let borels = enumerate_borels(&cat).unwrap();
        let mut got: Vec<String> = borels
            .systems()
            .iter()
            .map(|s| encode(&cat, s).unwrap().to_strings(&cat).join(" "))
            .collect();
        got.sort();
        let mut expected: Vec<String> = [
            "b1 1", "b1 -1", "-b1 1", "-b1 -1", "-1 -b1", "1 -b1", "-1 b1", "1 b1",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn decode_roundtrip_and_rejection() {
        let cat = build_catalog(&parse_spec("spo(2|2)").unwrap()).unwrap();
        let borels = enumerate_borels(&cat).unwrap();
        for fs in borels.systems() {
            let seq = encode(&cat, fs).unwrap();
            let back = decode_with(&cat, &borels, &seq).unwrap();
            assert_eq!(back.roots(), fs.roots());
        }
        // (b1, -1) reads like a chain but is no enumerated sequence.
        let bogus = DefiningSequence {
            family: cat.spec.family,
            entries: vec![(1, 0), (-1, 1)],
        };
        assert!(matches!(
            decode_with(&cat, &borels, &bogus),
            Err(Error::UnknownSequence)
        ));
    }

    #[test]
    fn gl_decode_example() {
        // gl(1|2): the sequence (1, b1, 2) decodes to {e1-d1, d1-e2}.
        let cat = build_catalog(&parse_spec("gl(1|2)").unwrap()).unwrap();
        let seq = DefiningSequence {
            family: Family::Gl,
            entries: vec![(1, 1), (1, 0), (1, 2)],
        };
        let fs = decode(&cat, &seq).unwrap();
        assert_eq!(
            fs.roots(),
            &[RootVector::from_ints(&[-1, 1, 0]), RootVector::from_ints(&[1, 0, -1])]
        );
    }

    #[test]
    fn exceptional_families_have_no_codec() {
        let cat = build_catalog(&parse_spec("G(3)").unwrap()).unwrap();
        let fs = FundamentalSystem::new(cat.standard_pi.clone());
        assert!(matches!(encode(&cat, &fs), Err(Error::NoSequenceCodec(_))));
    }
}
