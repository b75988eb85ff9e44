//! Sparse multivariate Laurent polynomials with big-integer coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Q;

/// `Σ c_e x^e` over exponent vectors `e ∈ Z^n`. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    /// The variable `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn monomial(exponents: Vec<i32>, coeff: BigInt) -> Self {
        let nvars = exponents.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponents, coeff);
        }
        LaurentPolynomial { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i32>, BigInt)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    /// Rename variables: `x_{i+1}` of the result is `x_{perm[i]+1}` of `self`.
    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars, "permutation length");
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (perm.iter().map(|&p| e[p]).collect(), c.clone()));
        Self::from_terms(self.nvars, terms)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    /// Index `i` if this is exactly the variable `x_{i+1}`.
    pub fn as_variable(&self) -> Option<usize> {
        let (e, c) = self.terms.iter().next()?;
        if self.terms.len() != 1 || !c.is_one() {
            return None;
        }
        let mut idx = None;
        for (i, &x) in e.iter().enumerate() {
            match x {
                0 => {}
                1 if idx.is_none() => idx = Some(i),
                _ => return None,
            }
        }
        idx
    }

    fn add_term(&mut self, e: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Multiply by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        LaurentPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent; zero vector for the zero polynomial.
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut m: Option<Vec<i32>> = None;
        for e in self.terms.keys() {
            m = Some(match m {
                None => e.clone(),
                Some(m) => m.iter().zip(e).map(|(a, b)| *a.min(b)).collect(),
            });
        }
        m.unwrap_or_else(|| vec![0; self.nvars])
    }

    /// `d_i = max(0, -min exponent of x_i)`: the exponent of `x_i` in the
    /// monomial denominator.
    pub fn denominator_vector(&self) -> Vec<i32> {
        self.min_exponents().into_iter().map(|m| (-m).max(0)).collect()
    }

    /// Numerator after clearing the monomial denominator.
    pub fn numerator(&self) -> Self {
        self.shift(&self.denominator_vector())
    }

    /// The numerator is a polynomial not divisible by any `x_i`.
    pub fn numerator_prime_to_variables(&self) -> bool {
        let num = self.numerator();
        num.min_exponents().iter().all(|&m| m == 0)
    }

    /// Exact division. Errors if `other` does not divide `self` in the
    /// Laurent polynomial ring over the integers.
    pub fn div_exact(&self, other: &Self) -> Result<Self> {
        assert_eq!(self.nvars, other.nvars);
        if other.is_zero() {
            return Err(Error::NonExactDivision);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        if other.is_monomial() {
            let (e, c) = other.terms.iter().next().expect("one term");
            let neg: Vec<i32> = e.iter().map(|x| -x).collect();
            let mut out = Self::zero(self.nvars);
            for (e1, c1) in &self.terms {
                let (quot, rem) = c1.div_rem(c);
                if !rem.is_zero() {
                    return Err(Error::NonExactDivision);
                }
                out.add_term(e1.iter().zip(&neg).map(|(a, b)| a + b).collect(), quot);
            }
            return Ok(out);
        }
        // Clear denominators, then divide polynomials using lexicographic
        // leading terms. Every remainder stays a multiple of the divisor when
        // the division is exact, so each leading term must be divisible.
        let mf = self.min_exponents();
        let mg = other.min_exponents();
        let neg = |v: &[i32]| -> Vec<i32> { v.iter().map(|x| -x).collect() };
        let mut rem = self.shift(&neg(&mf));
        let g = other.shift(&neg(&mg));
        let (lg_e, lg_c) = g.terms.iter().next_back().expect("nonzero");
        let (lg_e, lg_c) = (lg_e.clone(), lg_c.clone());
        let mut quot = Self::zero(self.nvars);
        while let Some((le, lc)) = rem.terms.iter().next_back() {
            let m: Vec<i32> = le.iter().zip(&lg_e).map(|(a, b)| a - b).collect();
            if m.iter().any(|&x| x < 0) {
                return Err(Error::NonExactDivision);
            }
            let (c, r) = lc.div_rem(&lg_c);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            for (ge, gc) in &g.terms {
                let e = ge.iter().zip(&m).map(|(a, b)| a + b).collect();
                rem.add_term(e, -(gc * &c));
            }
            quot.add_term(m, c);
        }
        let shift: Vec<i32> = mf.iter().zip(&mg).map(|(a, b)| a - b).collect();
        Ok(quot.shift(&shift))
    }

    /// Substitute exact rational values for the variables.
    pub fn evaluate(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars);
        let mut total = Q::zero();
        for (e, c) in &self.terms {
            let mut t = Q::from_integer(c.clone());
            for (x, &k) in point.iter().zip(e) {
                t *= num_traits::pow::Pow::pow(x, k);
            }
            total += t;
        }
        total
    }

    /// Terms in graded-lexicographic order: total degree first, then
    /// lexicographic on exponent vectors.
    pub fn graded_terms(&self) -> Vec<(&Vec<i32>, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| graded_cmp(a.0, b.0));
        v
    }
}

fn graded_cmp(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&x| x as i64).sum();
    let db: i64 = b.iter().map(|&x| x as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &[i32]) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if k != 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

/// Renders as `numerator/denominator`, e.g. `(x2 + 1)/x1` or
/// `(x1 + x2 + 1)/(x1*x2)`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let den = self.denominator_vector();
        let num = self.numerator();
        let mut terms = num.graded_terms();
        terms.reverse();
        let has_den = den.iter().any(|&d| d > 0);
        let paren = has_den && terms.len() > 1;
        if paren {
            write!(f, "(")?;
        }
        for (idx, (e, c)) in terms.iter().enumerate() {
            let constant = e.iter().all(|&x| x == 0);
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if constant {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, e)?;
            }
        }
        if paren {
            write!(f, ")")?;
        }
        if has_den {
            let factors = den.iter().filter(|&&d| d > 0).count();
            if factors > 1 {
                write!(f, "/(")?;
                write_monomial(f, &den)?;
                write!(f, ")")?;
            } else {
                write!(f, "/")?;
                write_monomial(f, &den)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exponents: Vec<i32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentJson {
            n: self.nvars,
            terms: self
                .graded_terms()
                .into_iter()
                .map(|(e, c)| TermJson {
                    exponents: e.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = LaurentJson::deserialize(d)?;
        let mut p = LaurentPolynomial::zero(j.n);
        for t in j.terms {
            if t.exponents.len() != j.n {
                return Err(D::Error::custom("exponent vector length mismatch"));
            }
            let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
            p.add_term(t.exponents, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn x(i: usize) -> LaurentPolynomial {
        LaurentPolynomial::var(2, i)
    }

    #[test]
    fn display_a2_variable() {
        let one = LaurentPolynomial::one(2);
        let v = x(1).add(&one).div_exact(&x(0)).unwrap();
        assert_eq!(v.to_string(), "(x2 + 1)/x1");
        let w = LaurentPolynomial::from_terms(
            2,
            [(vec![-1, -1], BigInt::one()), (vec![0, -1], BigInt::one())],
        );
        assert_eq!(w.to_string(), "(x1 + 1)/(x1*x2)");
        assert_eq!(w.permute_variables(&[1, 0]).to_string(), "(x2 + 1)/(x1*x2)");
        assert_eq!(v.denominator_vector(), vec![1, 0]);
        assert!(v.numerator_prime_to_variables());
        assert_eq!(x(0).to_string(), "x1");
        assert_eq!(x(0).as_variable(), Some(0));
        assert_eq!(v.as_variable(), None);
    }

    #[test]
    fn exact_division_by_polynomial() {
        let one = LaurentPolynomial::one(2);
        let a = x(0).add(&one);
        let b = x(1).add(&one).mul(&x(0)).add(&x(1).pow(2));
        let prod = a.mul(&b).shift(&[-2, 1]);
        let back = prod.div_exact(&b).unwrap();
        assert_eq!(back, a.shift(&[-2, 1]));
    }

    #[test]
    fn inexact_division_fails() {
        let one = LaurentPolynomial::one(2);
        assert_eq!(
            x(0).div_exact(&x(1).add(&one)),
            Err(Error::NonExactDivision)
        );
        let two = LaurentPolynomial::monomial(vec![0, 0], BigInt::from(2));
        assert_eq!(x(0).div_exact(&two), Err(Error::NonExactDivision));
    }

    #[test]
    fn evaluation() {
        let one = LaurentPolynomial::one(2);
        let v = x(1).add(&one).div_exact(&x(0)).unwrap();
        assert_eq!(v.evaluate(&[q(2), q(3)]), q(2));
    }

    #[test]
    fn json_is_graded_lex() {
        let one = LaurentPolynomial::one(2);
        let v = x(0).mul(&x(1)).add(&x(0)).add(&one);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"terms":[{"exponents":[0,0],"coeff":"1"},{"exponents":[1,0],"coeff":"1"},{"exponents":[1,1],"coeff":"1"}]}"#
        );
        let back: LaurentPolynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn negative_coefficients_render() {
        let v = x(0).sub(&x(1).shift(&[0, 1]).mul(&LaurentPolynomial::monomial(vec![0, 0], BigInt::from(3))));
        assert_eq!(v.to_string(), "-3*x2^2 + x1");
    }
}
