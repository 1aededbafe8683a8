//! Exact scalars and root vectors.
//!
//! All coordinates are arbitrary-precision rationals. A [`Scalar`] is a
//! degree-one polynomial `c + a*alpha` in a formal parameter `alpha`; for
//! every family except `D(2,1;a)` the `alpha` part is identically zero.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Exact rational number used for all coordinates.
pub type Rational = BigRational;

/// Build a rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Build a rational from numerator and denominator.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact value of a bilinear pairing: `const_part + alpha_part * alpha`.
///
/// A scalar is zero iff both parts vanish, which is the generic-parameter
/// semantics: a pairing is treated as nonzero whenever it is nonzero for
/// some admissible value of `alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub const_part: Rational,
    pub alpha_part: Rational,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { const_part: Rational::zero(), alpha_part: Rational::zero() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Scalar { const_part: c, alpha_part: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(rat(n))
    }

    /// `c + a*alpha`.
    pub fn with_alpha(c: Rational, a: Rational) -> Self {
        Scalar { const_part: c, alpha_part: a }
    }

    pub fn is_zero(&self) -> bool {
        self.const_part.is_zero() && self.alpha_part.is_zero()
    }

    /// Multiply by an exact rational.
    pub fn scale(&self, q: &Rational) -> Self {
        Scalar { const_part: &self.const_part * q, alpha_part: &self.alpha_part * q }
    }

    /// Exact quotient `self / other` when it is a plain rational, i.e. when
    /// `self = q * other` for some rational `q`. Returns `None` otherwise.
    pub fn div_exact(&self, other: &Scalar) -> Option<Rational> {
        if other.is_zero() {
            return None;
        }
        let q = if !other.const_part.is_zero() {
            &self.const_part / &other.const_part
        } else {
            &self.alpha_part / &other.alpha_part
        };
        let check = other.scale(&q);
        if check == *self {
            Some(q)
        } else {
            None
        }
    }

    /// Evaluate at a concrete rational `alpha`.
    pub fn eval_at(&self, alpha: &Rational) -> Rational {
        &self.const_part + &self.alpha_part * alpha
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            const_part: &self.const_part + &rhs.const_part,
            alpha_part: &self.alpha_part + &rhs.alpha_part,
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            const_part: &self.const_part - &rhs.const_part,
            alpha_part: &self.alpha_part - &rhs.alpha_part,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { const_part: -&self.const_part, alpha_part: -&self.alpha_part }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alpha_part.is_zero() {
            write!(f, "{}", self.const_part)
        } else if self.const_part.is_zero() {
            write!(f, "{}*a", self.alpha_part)
        } else {
            write!(f, "{} + {}*a", self.const_part, self.alpha_part)
        }
    }
}

/// Exact coordinate vector of a root in the catalog basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    pub coords: Vec<Rational>,
}

impl RootVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        RootVector { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RootVector { coords: coords.iter().map(|&c| rat(c)).collect() }
    }

    pub fn zero(dim: usize) -> Self {
        RootVector { coords: vec![Rational::zero(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in root addition");
        RootVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &RootVector) -> RootVector {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in root subtraction");
        RootVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn negate(&self) -> RootVector {
        RootVector { coords: self.coords.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, q: &Rational) -> RootVector {
        RootVector { coords: self.coords.iter().map(|c| c * q).collect() }
    }

    /// Indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// True when every coordinate denominator is 1 or 2.
    pub fn has_small_denominators(&self) -> bool {
        self.coords.iter().all(|c| {
            let d = c.denom();
            *d == BigInt::one() || *d == BigInt::from(2)
        })
    }
}

/// Symmetric bilinear form on the ambient space, with [`Scalar`] entries so
/// that the generic parameter of `D(2,1;a)` lives inside the form.
#[derive(Debug, Clone)]
pub struct GramForm {
    pub matrix: Vec<Vec<Scalar>>,
}

impl GramForm {
    pub fn new(matrix: Vec<Vec<Scalar>>) -> Self {
        let n = matrix.len();
        for row in &matrix {
            assert_eq!(row.len(), n, "gram matrix must be square");
        }
        for i in 0..n {
            for j in 0..n {
                assert_eq!(matrix[i][j], matrix[j][i], "gram matrix must be symmetric");
            }
        }
        GramForm { matrix }
    }

    /// Diagonal form with integer entries.
    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for (i, &e) in entries.iter().enumerate() {
            m[i][i] = Scalar::from_int(e);
        }
        GramForm::new(m)
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// Evaluate the form at a concrete rational `alpha`, dropping the
    /// formal parameter.
    pub fn eval_at(&self, alpha: &Rational) -> GramForm {
        let m = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|s| Scalar::from_rational(s.eval_at(alpha))).collect())
            .collect();
        GramForm { matrix: m }
    }
}

/// Exact bilinear pairing of two vectors.
pub fn pairing(form: &GramForm, u: &RootVector, v: &RootVector) -> Scalar {
    assert_eq!(u.dim(), form.dim(), "dimension mismatch in pairing");
    assert_eq!(v.dim(), form.dim(), "dimension mismatch in pairing");
    let mut acc = Scalar::zero();
    for (i, ui) in u.coords.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in v.coords.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            let entry = &form.matrix[i][j];
            if entry.is_zero() {
                continue;
            }
            acc = &acc + &entry.scale(&(ui * vj));
        }
    }
    acc
}

/// True iff `(r, r) = 0` as a generic scalar.
pub fn is_isotropic(form: &GramForm, r: &RootVector) -> bool {
    pairing(form, r, r).is_zero()
}

/// Exact rank of a set of vectors, by Gaussian elimination over the
/// rationals. Used for linear-independence checks.
pub fn rank(vectors: &[RootVector]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let dim = vectors[0].dim();
    let mut rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords.clone()).collect();
    let mut r = 0;
    for col in 0..dim {
        let pivot = (r..rows.len()).find(|&i| !rows[i][col].is_zero());
        let Some(p) = pivot else { continue };
        rows.swap(r, p);
        let pv = rows[r][col].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = &rows[i][col] / &pv;
                for c in col..dim {
                    let sub = &rows[r][c] * &f;
                    rows[i][c] = &rows[i][c] - &sub;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Solve `sum_i x_i basis_i = target` exactly. Returns `None` when the
/// target is outside the span or the basis is degenerate along it.
pub fn solve_coordinates(basis: &[RootVector], target: &RootVector) -> Option<Vec<Rational>> {
    let dim = target.dim();
    let k = basis.len();
    // Augmented matrix of the transposed system.
    let mut m: Vec<Vec<Rational>> = (0..dim)
        .map(|row| {
            let mut r: Vec<Rational> = basis.iter().map(|b| b.coords[row].clone()).collect();
            r.push(target.coords[row].clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let pivot = (r..dim).find(|&i| !m[i][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let pv = m[r][col].clone();
        for i in 0..dim {
            if i != r && !m[i][col].is_zero() {
                let f = &m[i][col] / &pv;
                for c in col..=k {
                    let sub = &m[r][c] * &f;
                    m[i][c] = &m[i][c] - &sub;
                }
            }
        }
        pivots.push((r, col));
        r += 1;
        if r == dim {
            break;
        }
    }
    // Inconsistent rows.
    for i in r..dim {
        if !m[i][k].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); k];
    for (row, col) in pivots {
        x[col] = &m[row][k] / &m[row][col];
    }
    // Verify (guards against free variables giving a wrong particular solution).
    let mut acc = RootVector::zero(dim);
    for (xi, b) in x.iter().zip(basis) {
        acc = acc.add(&b.scale(xi));
    }
    if acc == *target {
        Some(x)
    } else {
        None
    }
}

/// True when all entries are integers of the same sign (all `>= 0` or all `<= 0`).
pub fn all_same_sign_integers(xs: &[Rational]) -> bool {
    let integral = xs.iter().all(|x| x.denom() == &BigInt::one());
    if !integral {
        return false;
    }
    let nonneg = xs.iter().all(|x| !x.is_negative());
    let nonpos = xs.iter().all(|x| !x.is_positive());
    nonneg || nonpos
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_rat() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| ratio(n, d))
    }

    fn small_scalar() -> impl Strategy<Value = Scalar> {
        (small_rat(), small_rat()).prop_map(|(c, a)| Scalar::with_alpha(c, a))
    }

    proptest! {
        #[test]
        fn scalar_addition_associates(a in small_scalar(), b in small_scalar(), c in small_scalar()) {
            let left = &(&a + &b) + &c;
            let right = &a + &(&b + &c);
            prop_assert_eq!(left, right);
        }

        #[test]
        fn scaling_distributes(a in small_scalar(), b in small_scalar(), q in small_rat()) {
            let left = (&a + &b).scale(&q);
            let right = &a.scale(&q) + &b.scale(&q);
            prop_assert_eq!(left, right);
        }

        #[test]
        fn eval_commutes_with_arithmetic(a in small_scalar(), b in small_scalar(), q in small_rat(), alpha in small_rat()) {
            let lhs = (&a.scale(&q) + &b).eval_at(&alpha);
            let rhs = &a.eval_at(&alpha) * &q + b.eval_at(&alpha);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn div_exact_roundtrip(s in small_scalar(), q in small_rat()) {
            prop_assume!(!s.is_zero());
            let scaled = s.scale(&q);
            prop_assert_eq!(scaled.div_exact(&s), Some(q));
        }
    }

    #[test]
    fn scalar_zero_needs_both_parts() {
        let s = Scalar::with_alpha(rat(0), rat(1));
        assert!(!s.is_zero());
        let t = Scalar::with_alpha(rat(1), rat(-1));
        assert!(!t.is_zero());
        assert!(Scalar::zero().is_zero());
    }

    #[test]
    fn div_exact_rejects_non_proportional() {
        let s = Scalar::with_alpha(rat(1), rat(1));
        let t = Scalar::with_alpha(rat(1), rat(0));
        assert_eq!(s.div_exact(&t), None);
    }

    #[test]
    fn rank_detects_dependence() {
        let a = RootVector::from_ints(&[1, -1, 0]);
        let b = RootVector::from_ints(&[0, 1, -1]);
        let c = RootVector::from_ints(&[1, 0, -1]);
        assert_eq!(rank(&[a.clone(), b.clone()]), 2);
        assert_eq!(rank(&[a, b, c]), 2);
    }

    #[test]
    fn solve_coordinates_exact() {
        let a = RootVector::from_ints(&[1, -1, 0]);
        let b = RootVector::from_ints(&[0, 1, -1]);
        let t = RootVector::from_ints(&[1, 0, -1]);
        let x = solve_coordinates(&[a, b], &t).unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn pairing_rejects_dimension_mismatch() {
        let form = GramForm::diagonal(&[1, -1]);
        let u = RootVector::from_ints(&[1, 0, 0]);
        let v = RootVector::from_ints(&[1, 0]);
        pairing(&form, &u, &v);
    }
}
