//! Root data for the supported algebras: root sets, parity, the standard
//! fundamental system and its extension by the lowest even root.

use crate::rootspace::{
    all_same_sign_integers, is_isotropic, pairing, rank, rat, solve_coordinates, GramForm,
    Rational, RootVector, Scalar,
};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashSet;
use std::fmt;

/// Supported families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `gl(m|n)`, `m, n >= 1`; `sl(m|n)` shares its root system.
    Gl,
    /// `spo(2m|2n)` with `n >= 2`.
    SpoD,
    /// `spo(2m|2)`.
    SpoC,
    /// `spo(2m|2n+1)` with `n >= 1`.
    SpoB,
    /// `D(2,1;a)`, generic or concrete parameter.
    D21Alpha,
    /// `F(4)`.
    F4,
    /// `G(3)`.
    G3,
}

/// Parsed algebra description.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraSpec {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    /// Concrete parameter for `D(2,1;a)`; `None` means generic.
    pub alpha: Option<Rational>,
}

impl AlgebraSpec {
    pub fn gl(m: usize, n: usize) -> Self {
        AlgebraSpec { family: Family::Gl, m, n, alpha: None }
    }

    /// `spo(2m|l)`; the family tag is derived from `l`.
    pub fn spo(two_m: usize, l: usize) -> Result<Self> {
        if two_m % 2 != 0 || two_m == 0 {
            return Err(Error::InvalidRank {
                family: "spo".into(),
                reason: format!("first argument must be a positive even integer, got {two_m}"),
            });
        }
        let m = two_m / 2;
        match l {
            0 => Err(Error::InvalidRank {
                family: "spo".into(),
                reason: "second argument must be positive".into(),
            }),
            1 => Err(Error::NoIsotropicRoots),
            2 => Ok(AlgebraSpec { family: Family::SpoC, m, n: 1, alpha: None }),
            l if l % 2 == 0 => Ok(AlgebraSpec { family: Family::SpoD, m, n: l / 2, alpha: None }),
            l => Ok(AlgebraSpec { family: Family::SpoB, m, n: (l - 1) / 2, alpha: None }),
        }
    }

    pub fn d21(alpha: Option<Rational>) -> Result<Self> {
        if let Some(a) = &alpha {
            if a.is_zero() || *a == -rat(1) {
                return Err(Error::BadAlpha(a.to_string()));
            }
        }
        Ok(AlgebraSpec { family: Family::D21Alpha, m: 1, n: 2, alpha })
    }

    pub fn f4() -> Self {
        AlgebraSpec { family: Family::F4, m: 1, n: 3, alpha: None }
    }

    pub fn g3() -> Self {
        AlgebraSpec { family: Family::G3, m: 1, n: 2, alpha: None }
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.family, Family::D21Alpha | Family::F4 | Family::G3)
    }

    fn validate(&self) -> Result<()> {
        let bad = |reason: String| Error::InvalidRank {
            family: format!("{}", self),
            reason,
        };
        match self.family {
            Family::Gl => {
                if self.m < 1 || self.n < 1 {
                    return Err(bad("gl(m|n) needs m >= 1 and n >= 1".into()));
                }
            }
            Family::SpoD => {
                if self.m < 1 || self.n < 2 {
                    return Err(bad("spo(2m|2n) of type D needs m >= 1 and n >= 2".into()));
                }
            }
            Family::SpoC => {
                if self.m < 1 || self.n != 1 {
                    return Err(bad("spo(2m|2) needs m >= 1 and n = 1".into()));
                }
            }
            Family::SpoB => {
                if self.m < 1 || self.n < 1 {
                    return Err(bad("spo(2m|2n+1) needs m >= 1 and n >= 1".into()));
                }
            }
            Family::D21Alpha | Family::F4 | Family::G3 => {}
        }
        Ok(())
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Gl => write!(f, "gl({}|{})", self.m, self.n),
            Family::SpoD | Family::SpoC => write!(f, "spo({}|{})", 2 * self.m, 2 * self.n),
            Family::SpoB => write!(f, "spo({}|{})", 2 * self.m, 2 * self.n + 1),
            Family::D21Alpha => match &self.alpha {
                None => write!(f, "D(2,1)"),
                Some(a) => write!(f, "D(2,1;{})", a),
            },
            Family::F4 => write!(f, "F(4)"),
            Family::G3 => write!(f, "G(3)"),
        }
    }
}

/// Parse an algebra description.
///
/// Grammar: `gl(M|N)`, `spo(2M|2N)`, `spo(2M|2N+1)` with literal integers,
/// `D(2,1;P/Q)`, `D(2,1)` for generic parameter, `F(4)`, `G(3)`.
/// Whitespace-insensitive; family names are case-sensitive.
pub fn parse_spec(text: &str) -> Result<AlgebraSpec> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let err = || Error::ParseSpec(text.to_string());
    if s == "F(4)" {
        return Ok(AlgebraSpec::f4());
    }
    if s == "G(3)" {
        return Ok(AlgebraSpec::g3());
    }
    if s == "D(2,1)" {
        return AlgebraSpec::d21(None);
    }
    if let Some(rest) = s.strip_prefix("D(2,1;") {
        let inner = rest.strip_suffix(')').ok_or_else(err)?;
        let alpha = parse_rational(inner).ok_or_else(err)?;
        return AlgebraSpec::d21(Some(alpha));
    }
    for (prefix, is_gl) in [("gl(", true), ("spo(", false)] {
        if let Some(rest) = s.strip_prefix(prefix) {
            let inner = rest.strip_suffix(')').ok_or_else(err)?;
            let (a, b) = inner.split_once('|').ok_or_else(err)?;
            let a: usize = a.parse().map_err(|_| err())?;
            let b: usize = b.parse().map_err(|_| err())?;
            if is_gl {
                let spec = AlgebraSpec::gl(a, b);
                spec.validate()?;
                return Ok(spec);
            }
            return AlgebraSpec::spo(a, b);
        }
    }
    Err(err())
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Complete root data for one algebra.
#[derive(Debug, Clone)]
pub struct AlgebraCatalog {
    pub spec: AlgebraSpec,
    pub dimension: usize,
    pub form: GramForm,
    /// All roots, sorted.
    pub roots: Vec<RootVector>,
    pub odd_roots: HashSet<RootVector>,
    /// Standard fundamental system, in the conventional order.
    pub standard_pi: Vec<RootVector>,
    /// Extended fundamental system indexing the generator set.
    pub extended_pi: Vec<RootVector>,
    /// Display names of the basis vectors.
    pub basis_names: Vec<String>,
    root_set: HashSet<RootVector>,
}

impl AlgebraCatalog {
    pub fn is_root(&self, v: &RootVector) -> bool {
        self.root_set.contains(v)
    }

    pub fn is_odd(&self, v: &RootVector) -> bool {
        self.odd_roots.contains(v)
    }

    pub fn is_isotropic_root(&self, v: &RootVector) -> bool {
        is_isotropic(&self.form, v)
    }

    pub fn rank(&self) -> usize {
        self.standard_pi.len()
    }

    /// Render a root over the named basis, e.g. `d1-e1`, `-2d1`,
    /// `(e1+e2+e3+d)/2`.
    pub fn pretty_root(&self, v: &RootVector) -> String {
        let two = BigInt::from(2);
        let halves = v.coords.iter().any(|c| *c.denom() == two);
        let scaled = if halves { v.scale(&rat(2)) } else { v.clone() };
        let mut out = String::new();
        for (i, c) in scaled.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_positive() && !out.is_empty() {
                out.push('+');
            } else if c.is_negative() {
                out.push('-');
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&self.basis_names[i]);
        }
        if out.is_empty() {
            out.push('0');
        }
        if halves {
            format!("({})/2", out)
        } else {
            out
        }
    }

    /// Stable generator label for a member of the extended system.
    pub fn generator_label(&self, v: &RootVector) -> String {
        format!("r[{}]", self.pretty_root(v))
    }
}

/// Unit vector in coordinate `i`.
fn e(dim: usize, i: usize) -> RootVector {
    let mut v = RootVector::zero(dim);
    v.coords[i] = rat(1);
    v
}

/// Construct the catalog for a validated spec.
pub fn build_catalog(spec: &AlgebraSpec) -> Result<AlgebraCatalog> {
    spec.validate()?;
    let (dim, form, basis_names, even, odd, standard_pi, extended_prefix) = match spec.family {
        Family::Gl => build_gl(spec),
        Family::SpoD | Family::SpoC | Family::SpoB => build_spo(spec),
        Family::D21Alpha => build_d21(spec),
        Family::F4 => build_f4(),
        Family::G3 => build_g3(),
    };

    let mut roots: Vec<RootVector> = even.iter().chain(odd.iter()).cloned().collect();
    roots.sort();
    roots.dedup();
    let root_set: HashSet<RootVector> = roots.iter().cloned().collect();
    let odd_roots: HashSet<RootVector> = odd.into_iter().collect();

    let mut extended_pi = extended_prefix;
    extended_pi.extend(standard_pi.iter().cloned());

    let cat = AlgebraCatalog {
        spec: spec.clone(),
        dimension: dim,
        form,
        roots,
        odd_roots,
        standard_pi,
        extended_pi,
        basis_names,
        root_set,
    };
    validate_catalog(&cat)?;
    Ok(cat)
}

type FamilyData = (
    usize,
    GramForm,
    Vec<String>,
    Vec<RootVector>,
    Vec<RootVector>,
    Vec<RootVector>,
    Vec<RootVector>,
);

/// Basis `(d1..dm, e1..en)`; `(d_i, d_j) = +delta`, `(e_k, e_l) = -delta`.
fn build_gl(spec: &AlgebraSpec) -> FamilyData {
    let (m, n) = (spec.m, spec.n);
    let dim = m + n;
    let mut diag = vec![1i64; m];
    diag.extend(vec![-1i64; n]);
    let form = GramForm::diagonal(&diag);
    let names = spo_basis_names(m, n);
    let d = |i: usize| e(dim, i - 1);
    let eps = |q: usize| e(dim, m + q - 1);
    let mut even = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            if i != j {
                even.push(d(i).sub(&d(j)));
            }
        }
    }
    for k in 1..=n {
        for l in 1..=n {
            if k != l {
                even.push(eps(k).sub(&eps(l)));
            }
        }
    }
    let mut odd = Vec::new();
    for i in 1..=m {
        for q in 1..=n {
            odd.push(d(i).sub(&eps(q)));
            odd.push(eps(q).sub(&d(i)));
        }
    }
    let mut pi = Vec::new();
    for i in 1..m {
        pi.push(d(i).sub(&d(i + 1)));
    }
    pi.push(d(m).sub(&eps(1)));
    for k in 1..n {
        pi.push(eps(k).sub(&eps(k + 1)));
    }
    (dim, form, names, even, odd, pi, Vec::new())
}

fn spo_basis_names(m: usize, n: usize) -> Vec<String> {
    let mut names: Vec<String> = (1..=m).map(|i| format!("d{i}")).collect();
    names.extend((1..=n).map(|q| format!("e{q}")));
    names
}

fn build_spo(spec: &AlgebraSpec) -> FamilyData {
    let (m, n) = (spec.m, spec.n);
    let dim = m + n;
    let mut diag = vec![1i64; m];
    diag.extend(vec![-1i64; n]);
    let form = GramForm::diagonal(&diag);
    let names = spo_basis_names(m, n);
    let d = |i: usize| e(dim, i - 1);
    let eps = |q: usize| e(dim, m + q - 1);

    let mut even = Vec::new();
    for i in 1..=m {
        for j in (i + 1)..=m {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                even.push(d(i).scale(&rat(si)).add(&d(j).scale(&rat(sj))));
            }
        }
    }
    for p in 1..=m {
        even.push(d(p).scale(&rat(2)));
        even.push(d(p).scale(&rat(-2)));
    }
    for k in 1..=n {
        for l in (k + 1)..=n {
            for (sk, sl) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                even.push(eps(k).scale(&rat(sk)).add(&eps(l).scale(&rat(sl))));
            }
        }
    }
    if spec.family == Family::SpoB {
        for q in 1..=n {
            even.push(eps(q));
            even.push(eps(q).negate());
        }
    }

    let mut odd = Vec::new();
    for p in 1..=m {
        for q in 1..=n {
            for (sp, sq) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                odd.push(d(p).scale(&rat(sp)).add(&eps(q).scale(&rat(sq))));
            }
        }
    }
    if spec.family == Family::SpoB {
        for p in 1..=m {
            odd.push(d(p));
            odd.push(d(p).negate());
        }
    }

    let pi = match spec.family {
        Family::SpoD => {
            let mut pi = Vec::new();
            for i in 1..m {
                pi.push(d(i).sub(&d(i + 1)));
            }
            pi.push(d(m).sub(&eps(1)));
            for k in 1..n {
                pi.push(eps(k).sub(&eps(k + 1)));
            }
            pi.push(eps(n).add(&eps(n - 1)));
            pi
        }
        Family::SpoC => {
            let mut pi = vec![eps(1).sub(&d(1))];
            for i in 1..m {
                pi.push(d(i).sub(&d(i + 1)));
            }
            pi.push(d(m).scale(&rat(2)));
            pi
        }
        Family::SpoB => {
            let mut pi = Vec::new();
            for i in 1..m {
                pi.push(d(i).sub(&d(i + 1)));
            }
            pi.push(d(m).sub(&eps(1)));
            for k in 1..n {
                pi.push(eps(k).sub(&eps(k + 1)));
            }
            pi.push(eps(n));
            pi
        }
        _ => unreachable!(),
    };

    let extended_prefix = match spec.family {
        Family::SpoD | Family::SpoB => vec![d(1).scale(&rat(-2))],
        _ => Vec::new(),
    };
    (dim, form, names, even, odd, pi, extended_prefix)
}

/// Basis `(d, e1, e2)` with `(d,d) = -(1+a)`, `(e1,e1) = 1`, `(e2,e2) = a`.
fn build_d21(spec: &AlgebraSpec) -> FamilyData {
    let dim = 3;
    let neg_one_plus_alpha = Scalar::with_alpha(rat(-1), rat(-1));
    let alpha = Scalar::with_alpha(rat(0), rat(1));
    let mut m = vec![vec![Scalar::zero(); 3]; 3];
    m[0][0] = neg_one_plus_alpha;
    m[1][1] = Scalar::from_int(1);
    m[2][2] = alpha;
    let mut form = GramForm::new(m);
    if let Some(a) = &spec.alpha {
        form = form.eval_at(a);
    }
    let names = vec!["d".to_string(), "e1".to_string(), "e2".to_string()];
    let dv = e(dim, 0);
    let e1 = e(dim, 1);
    let e2 = e(dim, 2);
    let mut even = Vec::new();
    for v in [&dv, &e1, &e2] {
        even.push(v.scale(&rat(2)));
        even.push(v.scale(&rat(-2)));
    }
    let mut odd = Vec::new();
    for sd in [1, -1] {
        for s1 in [1, -1] {
            for s2 in [1, -1] {
                odd.push(
                    dv.scale(&rat(sd)).add(&e1.scale(&rat(s1))).add(&e2.scale(&rat(s2))),
                );
            }
        }
    }
    let pi = vec![dv.add(&e1).add(&e2), e1.scale(&rat(-2)), e2.scale(&rat(-2))];
    let prefix = vec![dv.scale(&rat(-2))];
    (dim, form, names, even, odd, pi, prefix)
}

/// Basis `(e1, e2, e3, d)` with `(e_i, e_i) = 1`, `(d, d) = -3`.
fn build_f4() -> FamilyData {
    let dim = 4;
    let form = GramForm::diagonal(&[1, 1, 1, -3]);
    let names = vec!["e1".into(), "e2".into(), "e3".into(), "d".into()];
    let eps = |i: usize| e(dim, i - 1);
    let dv = e(dim, 3);
    let mut even = Vec::new();
    for i in 1..=3 {
        for j in (i + 1)..=3 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                even.push(eps(i).scale(&rat(si)).add(&eps(j).scale(&rat(sj))));
            }
        }
    }
    for i in 1..=3 {
        even.push(eps(i));
        even.push(eps(i).negate());
    }
    even.push(dv.clone());
    even.push(dv.negate());
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let mut odd = Vec::new();
    for s1 in [1, -1] {
        for s2 in [1, -1] {
            for s3 in [1, -1] {
                for sd in [1, -1] {
                    let v = eps(1)
                        .scale(&rat(s1))
                        .add(&eps(2).scale(&rat(s2)))
                        .add(&eps(3).scale(&rat(s3)))
                        .add(&dv.scale(&rat(sd)));
                    odd.push(v.scale(&half));
                }
            }
        }
    }
    let pi = vec![
        eps(1).add(&eps(2)).add(&eps(3)).add(&dv).scale(&half),
        eps(3).negate(),
        eps(3).sub(&eps(1)),
        eps(1).sub(&eps(2)),
    ];
    let prefix = vec![dv.negate()];
    (dim, form, names, even, odd, pi, prefix)
}

/// Basis `(d, e1, e2)` with `e3` eliminated via `e3 = -e1-e2`;
/// `(d,d) = 2`, `(e_i,e_i) = -2`, `(e1,e2) = 1`.
fn build_g3() -> FamilyData {
    let dim = 3;
    let mut m = vec![vec![Scalar::zero(); 3]; 3];
    m[0][0] = Scalar::from_int(2);
    m[1][1] = Scalar::from_int(-2);
    m[2][2] = Scalar::from_int(-2);
    m[1][2] = Scalar::from_int(1);
    m[2][1] = Scalar::from_int(1);
    let form = GramForm::new(m);
    let names = vec!["d".into(), "e1".into(), "e2".into()];
    let dv = e(dim, 0);
    let e1 = e(dim, 1);
    let e2 = e(dim, 2);
    let e3 = e1.negate().sub(&e2);
    let eps = [e1.clone(), e2.clone(), e3.clone()];
    let mut even = Vec::new();
    even.push(dv.scale(&rat(2)));
    even.push(dv.scale(&rat(-2)));
    for v in &eps {
        even.push(v.clone());
        even.push(v.negate());
    }
    for i in 0..3 {
        for j in (i + 1)..3 {
            even.push(eps[i].sub(&eps[j]));
            even.push(eps[j].sub(&eps[i]));
        }
    }
    let mut odd = vec![dv.clone(), dv.negate()];
    for v in &eps {
        odd.push(dv.add(v));
        odd.push(dv.sub(v));
        odd.push(dv.add(v).negate());
        odd.push(dv.sub(v).negate());
    }
    let pi = vec![dv.sub(&e1), e2.sub(&e3), e2.negate()];
    let prefix = vec![dv.scale(&rat(-2))];
    (dim, form, names, even, odd, pi, prefix)
}

fn validate_catalog(cat: &AlgebraCatalog) -> Result<()> {
    let structural = |reason: String| Error::InvalidRank {
        family: format!("{}", cat.spec),
        reason,
    };
    // Roots closed under negation, odd roots are roots, isotropic => odd.
    for r in &cat.roots {
        if !cat.is_root(&r.negate()) {
            return Err(structural("root set is not closed under negation".into()));
        }
        if cat.is_isotropic_root(r) && !cat.is_odd(r) {
            return Err(structural("an isotropic root is not odd".into()));
        }
        if !r.has_small_denominators() {
            return Err(structural("root coordinate denominator exceeds 2".into()));
        }
    }
    for r in &cat.odd_roots {
        if !cat.is_root(r) {
            return Err(structural("odd root missing from root set".into()));
        }
    }
    for r in cat.standard_pi.iter().chain(&cat.extended_pi) {
        if !cat.is_root(r) {
            return Err(structural("fundamental system member is not a root".into()));
        }
    }
    if rank(&cat.standard_pi) != cat.standard_pi.len() {
        return Err(structural("standard fundamental system is linearly dependent".into()));
    }
    // Positivity check at small rank: every root decomposes integrally with a
    // definite sign over the standard system.
    if cat.standard_pi.len() <= 4 {
        for r in &cat.roots {
            let coords = solve_coordinates(&cat.standard_pi, r)
                .ok_or_else(|| structural(format!("root outside span of the standard system")))?;
            if !all_same_sign_integers(&coords) {
                return Err(structural(
                    "a root is not a signed integer combination of the standard system".into(),
                ));
            }
        }
    }
    // The pairing is symmetric on all catalog root pairs.
    debug_assert!(cat.roots.iter().all(|u| cat
        .roots
        .iter()
        .all(|v| pairing(&cat.form, u, v) == pairing(&cat.form, v, u))));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootspace::ratio;

    #[test]
    fn parse_accepts_the_grammar() {
        assert_eq!(parse_spec("gl(2|3)").unwrap(), AlgebraSpec::gl(2, 3));
        let s = parse_spec("spo(4|4)").unwrap();
        assert_eq!((s.family, s.m, s.n), (Family::SpoD, 2, 2));
        let s = parse_spec("spo(4|5)").unwrap();
        assert_eq!((s.family, s.m, s.n), (Family::SpoB, 2, 2));
        let s = parse_spec("spo(6|2)").unwrap();
        assert_eq!((s.family, s.m, s.n), (Family::SpoC, 3, 1));
        let s = parse_spec(" spo( 2 | 3 ) ").unwrap();
        assert_eq!((s.family, s.m, s.n), (Family::SpoB, 1, 1));
        assert_eq!(parse_spec("D(2,1)").unwrap().family, Family::D21Alpha);
        let s = parse_spec("D(2,1;-2/3)").unwrap();
        assert_eq!(s.alpha, Some(ratio(-2, 3)));
        assert_eq!(parse_spec("F(4)").unwrap().family, Family::F4);
        assert_eq!(parse_spec("G(3)").unwrap().family, Family::G3);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(parse_spec("spo(2|1)"), Err(Error::NoIsotropicRoots)));
        assert!(matches!(parse_spec("spo(3|4)"), Err(Error::InvalidRank { .. })));
        assert!(matches!(parse_spec("spo(4|0)"), Err(Error::InvalidRank { .. })));
        assert!(matches!(parse_spec("gl(0|2)"), Err(Error::InvalidRank { .. })));
        assert!(matches!(parse_spec("GL(1|2)"), Err(Error::ParseSpec(_))));
        assert!(matches!(parse_spec("D(2,1;0)"), Err(Error::BadAlpha(_))));
        assert!(matches!(parse_spec("D(2,1;-1)"), Err(Error::BadAlpha(_))));
        assert!(matches!(parse_spec("E(8)"), Err(Error::ParseSpec(_))));
    }

    #[test]
    fn gl12_catalog() {
        let cat = build_catalog(&AlgebraSpec::gl(1, 2)).unwrap();
        assert_eq!(cat.roots.len(), 6);
        assert_eq!(cat.standard_pi.len(), 2);
        assert_eq!(cat.extended_pi, cat.standard_pi);
        // Standard system: d1-e1, e1-e2.
        assert_eq!(cat.standard_pi[0], RootVector::from_ints(&[1, -1, 0]));
        assert_eq!(cat.standard_pi[1], RootVector::from_ints(&[0, 1, -1]));
    }

    #[test]
    fn pairing_examples() {
        let gl12 = build_catalog(&AlgebraSpec::gl(1, 2)).unwrap();
        let d1 = RootVector::from_ints(&[1, 0, 0]);
        assert_eq!(pairing(&gl12.form, &d1, &d1), Scalar::from_int(1));
        let gl22 = build_catalog(&AlgebraSpec::gl(2, 2)).unwrap();
        let iso = RootVector::from_ints(&[0, 1, -1, 0]); // d2 - e1
        assert!(gl22.is_isotropic_root(&iso));
        let spo45 = build_catalog(&parse_spec("spo(4|5)").unwrap()).unwrap();
        let delta1 = RootVector::from_ints(&[1, 0, 0, 0]);
        assert!(spo45.is_odd(&delta1));
        assert!(!spo45.is_isotropic_root(&delta1));
    }

    #[test]
    fn d21_catalog_matches_the_generic_form() {
        let cat = build_catalog(&AlgebraSpec::d21(None).unwrap()).unwrap();
        assert_eq!(cat.roots.len(), 14);
        assert_eq!(cat.odd_roots.len(), 8);
        let top = RootVector::from_ints(&[1, 1, 1]);
        assert!(cat.is_isotropic_root(&top));
        assert_eq!(cat.standard_pi[0], top);
        // (d+e1+e2, d+e1+e2) = (-1-a) + 1 + a = 0 for all a.
        let p = pairing(&cat.form, &top, &top);
        assert!(p.is_zero());
        // 2d is never isotropic in the generic form.
        let twod = RootVector::from_ints(&[2, 0, 0]);
        assert!(!cat.is_isotropic_root(&twod));
    }

    #[test]
    fn generic_alpha_agrees_with_concrete_evaluation() {
        // Pairings of the generic form, evaluated at a rational alpha away
        // from 0 and -1, equal the pairings of the concrete-alpha form.
        let generic = build_catalog(&AlgebraSpec::d21(None).unwrap()).unwrap();
        for alpha in [ratio(2, 3), ratio(-3, 1), ratio(5, 7)] {
            let concrete =
                build_catalog(&AlgebraSpec::d21(Some(alpha.clone())).unwrap()).unwrap();
            for u in &generic.roots {
                for v in &generic.roots {
                    let g = pairing(&generic.form, u, v).eval_at(&alpha);
                    let c = pairing(&concrete.form, u, v);
                    assert_eq!(Scalar::from_rational(g), c);
                }
            }
        }
    }

    #[test]
    fn g3_isotropy() {
        let cat = build_catalog(&AlgebraSpec::g3()).unwrap();
        assert_eq!(cat.roots.len(), 28);
        let d_minus_e1 = RootVector::from_ints(&[1, -1, 0]);
        assert!(cat.is_isotropic_root(&d_minus_e1));
        let delta = RootVector::from_ints(&[1, 0, 0]);
        assert!(cat.is_odd(&delta));
        assert!(!cat.is_isotropic_root(&delta));
    }

    #[test]
    fn spo_root_counts() {
        // |odd| = 4mn for spo(2m|2n), 4mn + 2m for spo(2m|2n+1), 2mn for gl.
        for (text, total, odd) in [
            ("spo(2|4)", 14, 8),
            ("spo(4|4)", 28, 16),
            ("spo(2|2)", 6, 4),
            ("spo(2|3)", 10, 6),
            ("spo(4|3)", 22, 12),
            ("gl(2|2)", 12, 8),
        ] {
            let cat = build_catalog(&parse_spec(text).unwrap()).unwrap();
            assert_eq!(cat.roots.len(), total, "{text}");
            assert_eq!(cat.odd_roots.len(), odd, "{text}");
        }
    }

    #[test]
    fn standard_pi_has_one_isotropic_member_for_spo() {
        for text in ["spo(2|4)", "spo(4|4)", "spo(2|2)", "spo(6|2)", "spo(2|3)", "spo(4|5)"] {
            let cat = build_catalog(&parse_spec(text).unwrap()).unwrap();
            let iso: Vec<_> =
                cat.standard_pi.iter().filter(|r| cat.is_isotropic_root(r)).collect();
            assert_eq!(iso.len(), 1, "{text}");
        }
    }

    #[test]
    fn f4_standard_pi() {
        let cat = build_catalog(&AlgebraSpec::f4()).unwrap();
        assert_eq!(cat.roots.len(), 36);
        assert_eq!(cat.odd_roots.len(), 16);
        assert!(cat.is_isotropic_root(&cat.standard_pi[0]));
        assert_eq!(cat.extended_pi.len(), 5);
        assert_eq!(cat.pretty_root(&cat.standard_pi[0]), "(e1+e2+e3+d)/2");
    }

    #[test]
    fn pretty_roots() {
        let cat = build_catalog(&parse_spec("spo(4|4)").unwrap()).unwrap();
        let v = RootVector::from_ints(&[-2, 0, 0, 0]);
        assert_eq!(cat.pretty_root(&v), "-2d1");
        let w = RootVector::from_ints(&[0, 1, -1, 0]);
        assert_eq!(cat.pretty_root(&w), "d2-e1");
        let u = RootVector::from_ints(&[0, 0, 1, 1]);
        assert_eq!(cat.pretty_root(&u), "e1+e2");
    }
}
