//! Integer-coefficient multivariate Laurent polynomials, i.e. the group ring
//! ℤ[H] of a free abelian group H ≅ ℤⁿ.

mod cyclotomic;
mod gcd;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub(crate) use cyclotomic::is_prime;
pub use cyclotomic::{
    cyclotomic_polynomial, root_of_unity_norm, CyclotomicElement, CyclotomicRing,
};
pub use parse::parse_poly;

/// Exponents (i₁,…,iₙ) of a monomial t₁^{i₁}⋯tₙ^{iₙ}.
pub type ExponentVector = Vec<i64>;

/// A Laurent polynomial with integer coefficients in `arity` variables.
///
/// Terms are kept in a sorted map with no zero coefficients, so structural
/// equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    arity: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

/// A unit ±t^I of ℤ[H].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialUnit {
    pub sign: i8,
    pub shift: ExponentVector,
}

impl MonomialUnit {
    pub fn one(arity: usize) -> Self {
        Self {
            sign: 1,
            shift: vec![0; arity],
        }
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.shift.clone(), BigInt::from(self.sign))
    }
}

impl fmt::Display for MonomialUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Strength of the symmetry a polynomial enjoys, weakest first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum SymmetryKind {
    Asymmetric,
    ModUnitSymmetric,
    UnitSymmetric,
    Symmetric,
}

impl fmt::Display for SymmetryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SymmetryKind::Asymmetric => "Asymmetric",
            SymmetryKind::ModUnitSymmetric => "ModUnitSymmetric",
            SymmetryKind::UnitSymmetric => "UnitSymmetric",
            SymmetryKind::Symmetric => "Symmetric",
        };
        f.write_str(s)
    }
}

/// The strongest symmetry class of a polynomial together with its witness.
///
/// * `Symmetric`: witness is 1 and ι(f) = f.
/// * `UnitSymmetric`: witness u with ι(u·f) = u·f.
/// * `ModUnitSymmetric`: witness u with ι(f) = u·f.
/// * `Asymmetric`: no witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetryClass {
    pub kind: SymmetryKind,
    pub witness: Option<MonomialUnit>,
}

impl SymmetryClass {
    pub fn is_at_least(&self, kind: SymmetryKind) -> bool {
        self.kind >= kind
    }
}

impl LaurentPoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "arity must be positive");
        Self {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigInt::one())
    }

    pub fn constant(arity: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(vec![0; arity], c)
    }

    pub fn monomial(exponents: ExponentVector, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, c.into());
        p
    }

    /// The variable tᵢ (0-based).
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity);
        let mut e = vec![0; arity];
        e[i] = 1;
        Self::monomial(e, 1)
    }

    /// Builds a polynomial from (exponents, coefficient) pairs, summing
    /// duplicates.
    pub fn from_terms<I, C>(arity: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
        C: Into<BigInt>,
    {
        if arity == 0 {
            return Err(Error::Invalid("arity must be positive".into()));
        }
        let mut p = Self::zero(arity);
        for (e, c) in terms {
            if e.len() != arity {
                return Err(Error::ArityMismatch {
                    left: arity,
                    right: e.len(),
                });
            }
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    /// Univariate polynomial from ascending coefficients c₀ + c₁t + ….
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        let mut p = Self::zero(1);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(vec![i as i64], c.clone().into());
        }
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponents: &[i64]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, exponents: ExponentVector, c: BigInt) {
        debug_assert_eq!(exponents.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
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

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    /// Exact product; fails on arity mismatch.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.arity);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: ExponentVector = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.arity);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.arity);
        }
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Multiplication by the monomial t^shift.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.arity);
        Self {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn mul_unit(&self, u: &MonomialUnit) -> Self {
        let s = self.shift(&u.shift);
        if u.sign < 0 {
            -s
        } else {
            s
        }
    }

    /// The involution ι induced by inversion in H: every exponent negated.
    pub fn involution(&self) -> Self {
        Self {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Sum of the coefficients, i.e. the value at (1,…,1).
    pub fn trace(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Componentwise minimum exponent over the support. `None` for zero.
    pub fn min_exponents(&self) -> Option<ExponentVector> {
        self.exponent_bound(i64::min)
    }

    pub fn max_exponents(&self) -> Option<ExponentVector> {
        self.exponent_bound(i64::max)
    }

    fn exponent_bound(&self, pick: fn(i64, i64) -> i64) -> Option<ExponentVector> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| {
            acc.iter().zip(e).map(|(&a, &b)| pick(a, b)).collect()
        }))
    }

    /// Per-variable width max − min of the support (all zeros for 0).
    pub fn degree_span(&self) -> ExponentVector {
        match (self.min_exponents(), self.max_exponents()) {
            (Some(lo), Some(hi)) => hi.iter().zip(&lo).map(|(h, l)| h - l).collect(),
            _ => vec![0; self.arity],
        }
    }

    /// Total degree span: the sum of the per-variable spans.
    pub fn total_degree_span(&self) -> i64 {
        self.degree_span().iter().sum()
    }

    /// Canonical representative of the orbit {±t^I·f}: minimal exponent 0 in
    /// every variable and a positive coefficient on the lexicographically
    /// smallest term. Zero maps to zero.
    pub fn normalize(&self) -> Self {
        self.normalize_with_unit().0
    }

    /// Like [`normalize`](Self::normalize), also returning the unit `u` with
    /// `normalize(f) = u·f`.
    pub fn normalize_with_unit(&self) -> (Self, MonomialUnit) {
        let Some(lo) = self.min_exponents() else {
            return (self.clone(), MonomialUnit::one(self.arity));
        };
        let shift: ExponentVector = lo.iter().map(|x| -x).collect();
        let shifted = self.shift(&shift);
        let negative = shifted
            .terms
            .values()
            .next()
            .map(|c| c.is_negative())
            .unwrap_or(false);
        let unit = MonomialUnit {
            sign: if negative { -1 } else { 1 },
            shift,
        };
        let out = if negative { -shifted } else { shifted };
        (out, unit)
    }

    /// True when `self` is a unit ±t^I.
    pub fn as_unit(&self) -> Option<MonomialUnit> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if c.is_one() {
            Some(MonomialUnit {
                sign: 1,
                shift: e.clone(),
            })
        } else if (-c).is_one() {
            Some(MonomialUnit {
                sign: -1,
                shift: e.clone(),
            })
        } else {
            None
        }
    }

    /// Classifies f by the strongest of: symmetric, unit symmetric,
    /// mod unit symmetric.
    ///
    /// If ι(f) = ±t^J·f then J is forced: the support of ι(f) is −supp(f),
    /// so Jᵢ = −(minᵢ + maxᵢ). Only that shift and the two signs need
    /// checking.
    pub fn classify_symmetry(&self) -> Result<SymmetryClass> {
        let (Some(lo), Some(hi)) = (self.min_exponents(), self.max_exponents()) else {
            return Err(Error::ZeroPolynomial);
        };
        let inv = self.involution();
        if inv == *self {
            return Ok(SymmetryClass {
                kind: SymmetryKind::Symmetric,
                witness: Some(MonomialUnit::one(self.arity)),
            });
        }
        let j: ExponentVector = lo.iter().zip(&hi).map(|(a, b)| -(a + b)).collect();
        let shifted = self.shift(&j);
        let sign: i8 = if inv == shifted {
            1
        } else if inv == -shifted {
            -1
        } else {
            return Ok(SymmetryClass {
                kind: SymmetryKind::Asymmetric,
                witness: None,
            });
        };
        if sign == 1 && j.iter().all(|x| x % 2 == 0) {
            // ι(t^{J/2} f) = t^{-J/2} t^J f = t^{J/2} f
            return Ok(SymmetryClass {
                kind: SymmetryKind::UnitSymmetric,
                witness: Some(MonomialUnit {
                    sign: 1,
                    shift: j.iter().map(|x| x / 2).collect(),
                }),
            });
        }
        Ok(SymmetryClass {
            kind: SymmetryKind::ModUnitSymmetric,
            witness: Some(MonomialUnit { sign, shift: j }),
        })
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` if `d` does
    /// not divide `self`.
    ///
    /// Quotient terms are produced in decreasing lex order; each variable's
    /// exponent is confined to the box [minᵢ(f) − minᵢ(d), maxᵢ(f) − maxᵢ(d)],
    /// which bounds the loop.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert_eq!(self.arity, d.arity, "arity mismatch in division");
        let (dlead_e, dlead_c) = d.terms.last_key_value()?;
        if self.is_zero() {
            return Some(Self::zero(self.arity));
        }
        let (flo, fhi) = (self.min_exponents()?, self.max_exponents()?);
        let (dlo, dhi) = (d.min_exponents()?, d.max_exponents()?);
        let lo: ExponentVector = flo.iter().zip(&dlo).map(|(a, b)| a - b).collect();
        let hi: ExponentVector = fhi.iter().zip(&dhi).map(|(a, b)| a - b).collect();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return None;
        }
        let mut rem = self.terms.clone();
        let mut quot = Self::zero(self.arity);
        while let Some((e, c)) = rem.last_key_value().map(|(e, c)| (e.clone(), c.clone())) {
            let qe: ExponentVector = e.iter().zip(dlead_e).map(|(a, b)| a - b).collect();
            if qe
                .iter()
                .zip(lo.iter().zip(&hi))
                .any(|(x, (l, h))| x < l || x > h)
            {
                return None;
            }
            let (qc, r) = c.div_rem(dlead_c);
            if !r.is_zero() {
                return None;
            }
            for (de, dc) in &d.terms {
                let e2: ExponentVector = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                let vanished = {
                    let v = rem.entry(e2.clone()).or_default();
                    *v -= &qc * dc;
                    v.is_zero()
                };
                if vanished {
                    rem.remove(&e2);
                }
            }
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Leading term in lexicographic order.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &BigInt)> {
        self.terms.last_key_value()
    }

    /// Evaluates with integer arguments; every argument must be ±1 when the
    /// exponent is negative, otherwise the value is not an integer.
    pub fn eval_integers(&self, point: &[BigInt]) -> Option<BigInt> {
        assert_eq!(point.len(), self.arity);
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k >= 0 {
                    term *= num_traits::pow(x.clone(), k as usize);
                } else if x.abs().is_one() {
                    term *= num_traits::pow(x.clone(), k.unsigned_abs() as usize);
                } else {
                    return None;
                }
            }
            total += term;
        }
        Some(total)
    }

    fn var_name(&self, i: usize) -> String {
        if self.arity == 1 {
            "t".to_string()
        } else {
            format!("t{}", i + 1)
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending lexicographic exponent order, e.g.
    /// `t^2 - 4*t + 1`, `t1*t2^-1 + 1`. Zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.var_name(i)
                    } else {
                        format!("{}^{}", self.var_name(i), k)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

// Operator impls panic on arity mismatch; use `try_add`/`multiply` for a
// checked variant.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("arity mismatch in addition")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.arity, rhs.arity, "arity mismatch in subtraction");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.multiply(rhs)
            .expect("arity mismatch in multiplication")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, arity: usize) -> LaurentPoly {
        parse_poly(s, arity).unwrap()
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(p("t-1", 1).multiply(&p("t+1", 1)).unwrap(), p("t^2-1", 1));
        assert_eq!(
            p("t1+t2", 2).multiply(&p("t1-t2", 2)).unwrap(),
            p("t1^2-t2^2", 2)
        );
        assert!(matches!(
            p("t", 1).multiply(&p("t1", 2)),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn involution_examples() {
        assert_eq!(p("t", 1).involution(), p("t^-1", 1));
        assert_eq!(p("t^2-4*t+1", 1).involution(), p("t^-2-4*t^-1+1", 1));
    }

    #[test]
    fn trace_examples() {
        assert_eq!(p("t^2+t+1", 1).trace(), BigInt::from(3));
        assert_eq!(p("t-1", 1).trace(), BigInt::from(0));
        assert_eq!(p("t^2-4*t+1", 1).trace(), BigInt::from(-2));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(p("t^-1-4+t", 1).normalize(), p("t^2-4*t+1", 1));
        assert_eq!(p("-t1*t2", 2).normalize(), LaurentPoly::one(2));
        assert_eq!(LaurentPoly::zero(2).normalize(), LaurentPoly::zero(2));
        // lex-smallest term is the constant 1 here, and it must be positive
        assert_eq!(p("-t^2+4*t-1", 1).normalize(), p("t^2-4*t+1", 1));
    }

    #[test]
    fn classify_examples() {
        let c = p("t^2+t+1", 1).classify_symmetry().unwrap();
        assert_eq!(c.kind, SymmetryKind::UnitSymmetric);
        assert_eq!(
            c.witness,
            Some(MonomialUnit {
                sign: 1,
                shift: vec![-1]
            })
        );

        let c = p("t-1", 1).classify_symmetry().unwrap();
        assert_eq!(c.kind, SymmetryKind::ModUnitSymmetric);
        let u = c.witness.unwrap();
        assert_eq!(
            u,
            MonomialUnit {
                sign: -1,
                shift: vec![-1]
            }
        );
        assert_eq!(p("t-1", 1).involution(), p("t-1", 1).mul_unit(&u));

        assert_eq!(
            p("t+t^-1", 1).classify_symmetry().unwrap().kind,
            SymmetryKind::Symmetric
        );
        assert_eq!(
            p("t^2-t+2", 1).classify_symmetry().unwrap().kind,
            SymmetryKind::Asymmetric
        );
        assert_eq!(
            LaurentPoly::zero(1).classify_symmetry(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn asymmetric_oracle_all_shifts() {
        // t^2 - t + 2: check every candidate unit ±t^j with |j| ≤ 6 by brute force.
        let f = p("t^2-t+2", 1);
        for j in -6..=6 {
            for s in [1i8, -1] {
                let u = MonomialUnit {
                    sign: s,
                    shift: vec![j],
                };
                assert_ne!(f.involution(), f.mul_unit(&u));
            }
        }
    }

    #[test]
    fn div_exact_cases() {
        let f = p("t1^2-t2^2", 2);
        assert_eq!(f.div_exact(&p("t1-t2", 2)), Some(p("t1+t2", 2)));
        assert_eq!(f.div_exact(&p("t1+2", 2)), None);
        assert_eq!(p("t", 1).div_exact(&p("t-1", 1)), None);
        assert_eq!(p("t^-3", 1).div_exact(&p("-t^2", 1)), Some(p("-t^-5", 1)));
    }

    #[test]
    fn display_order() {
        assert_eq!(p("1 - 4*t + t^2", 1).to_string(), "t^2 - 4*t + 1");
        assert_eq!(p("1 + t1*t2^-1", 2).to_string(), "t1*t2^-1 + 1");
        assert_eq!(p("-t+1", 1).to_string(), "-t + 1");
        assert_eq!(LaurentPoly::zero(3).to_string(), "0");
    }

    #[test]
    fn eval_integers_at_minus_one() {
        let f = p("t^2-4*t+1", 1);
        assert_eq!(f.eval_integers(&[BigInt::from(-1)]), Some(BigInt::from(6)));
        assert_eq!(p("t^-1", 1).eval_integers(&[BigInt::from(2)]), None);
    }
}
