//! GCD in ℤ[t₁^±1,…,tₙ^±1].
//!
//! Monomial content is cleared by shifting every minimum exponent to zero,
//! which lands both inputs in ℤ[t₁,…,tₙ] with no monomial factor. From there
//! a recursive primitive-PRS GCD runs over ℤ[t₁,…,tₖ₋₁][tₖ], recursing into
//! the coefficient ring for contents.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{ExponentVector, LaurentPoly};
use crate::error::Result;

impl LaurentPoly {
    /// A greatest common divisor, returned normalized. `gcd(f, 0)` is
    /// `normalize(f)` and `gcd(0, 0)` is 0.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        if self.is_zero() {
            return Ok(other.normalize());
        }
        if other.is_zero() {
            return Ok(self.normalize());
        }
        let f = clear_monomial_content(self);
        let g = clear_monomial_content(other);
        Ok(gcd_rec(&f, &g, Some(self.arity - 1)).normalize())
    }

    /// GCD of a collection; zero for an empty collection.
    pub fn gcd_all<'a, I>(arity: usize, polys: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a LaurentPoly>,
    {
        let mut acc = LaurentPoly::zero(arity);
        for p in polys {
            acc = acc.gcd(p)?;
            if acc.is_one() {
                break;
            }
        }
        Ok(acc)
    }
}

fn clear_monomial_content(f: &LaurentPoly) -> LaurentPoly {
    let lo = f.min_exponents().expect("nonzero");
    let neg: ExponentVector = lo.iter().map(|x| -x).collect();
    f.shift(&neg)
}

/// Degree in variable `v`; −1 for zero.
fn degree(f: &LaurentPoly, v: usize) -> i64 {
    f.terms.keys().map(|e| e[v]).max().unwrap_or(-1)
}

/// Coefficients of f as a polynomial in t_v, keyed by degree, each with the
/// t_v exponent zeroed.
fn coefficients(f: &LaurentPoly, v: usize) -> BTreeMap<i64, LaurentPoly> {
    let mut out: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
    for (e, c) in &f.terms {
        let mut e2 = e.clone();
        e2[v] = 0;
        out.entry(e[v])
            .or_insert_with(|| LaurentPoly::zero(f.arity))
            .add_term(e2, c.clone());
    }
    out
}

fn leading_coefficient(f: &LaurentPoly, v: usize) -> LaurentPoly {
    let d = degree(f, v);
    let mut out = LaurentPoly::zero(f.arity);
    for (e, c) in &f.terms {
        if e[v] == d {
            let mut e2 = e.clone();
            e2[v] = 0;
            out.add_term(e2, c.clone());
        }
    }
    out
}

/// Content with respect to t_v: the GCD of the coefficients, computed in the
/// ring over variables below v.
fn content(f: &LaurentPoly, v: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero(f.arity);
    for c in coefficients(f, v).values() {
        acc = gcd_rec(&acc, c, v.checked_sub(1));
        if is_unit_constant(&acc) {
            break;
        }
    }
    acc
}

fn is_unit_constant(f: &LaurentPoly) -> bool {
    f.as_unit().is_some_and(|u| u.shift.iter().all(|&x| x == 0))
}

fn primitive_part(f: &LaurentPoly, v: usize) -> LaurentPoly {
    let c = content(f, v);
    f.div_exact(&c).expect("content divides")
}

/// Pseudo-remainder of a by b in t_v; the result has t_v-degree below b's.
fn pseudo_remainder(a: &LaurentPoly, b: &LaurentPoly, v: usize) -> LaurentPoly {
    let db = degree(b, v);
    let lcb = leading_coefficient(b, v);
    let mut r = a.clone();
    while !r.is_zero() && degree(&r, v) >= db {
        let dr = degree(&r, v);
        let mut shift = vec![0; a.arity];
        shift[v] = dr - db;
        let lcr = leading_coefficient(&r, v).shift(&shift);
        r = &(&r * &lcb) - &(&lcr * b);
    }
    r
}

/// GCD of polynomials in ℤ[t₀,…,t_v] (variables above v are absent). The
/// sign of the result is unspecified.
fn gcd_rec(f: &LaurentPoly, g: &LaurentPoly, v: Option<usize>) -> LaurentPoly {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    let Some(v) = v else {
        let a = f.coeff(&vec![0; f.arity]);
        let b = g.coeff(&vec![0; g.arity]);
        return LaurentPoly::constant(f.arity, a.gcd(&b));
    };
    let (df, dg) = (degree(f, v), degree(g, v));
    if df == 0 {
        return gcd_rec(f, &content(g, v), v.checked_sub(1));
    }
    if dg == 0 {
        return gcd_rec(&content(f, v), g, v.checked_sub(1));
    }
    let cf = content(f, v);
    let cg = content(g, v);
    let c = gcd_rec(&cf, &cg, v.checked_sub(1));
    let pf = f.div_exact(&cf).expect("content divides");
    let pg = g.div_exact(&cg).expect("content divides");
    let (a, b) = if df >= dg { (pf, pg) } else { (pg, pf) };
    let bound = degree_bound(&a, &b, v);
    let g = if bound == Some(0) {
        LaurentPoly::one(f.arity)
    } else if bound == Some(degree(&b, v)) && a.div_exact(&b).is_some() {
        b
    } else {
        heuristic(&a, &b, v).unwrap_or_else(|| prs(a, b, v))
    };
    let g = primitive_part(&g, v);
    let mut out = &c * &g;
    if out.leading_term().is_some_and(|(_, c)| c < &BigInt::zero()) {
        out = -out;
    }
    out
}

/// Primitive PRS on primitive inputs with deg a ≥ deg b in t_v.
fn prs(mut a: LaurentPoly, mut b: LaurentPoly, v: usize) -> LaurentPoly {
    loop {
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            return b;
        }
        if degree(&r, v) == 0 {
            return LaurentPoly::one(a.arity);
        }
        a = b;
        b = primitive_part(&r, v);
    }
}

fn max_norm(f: &LaurentPoly) -> BigInt {
    f.terms.values().map(Signed::abs).max().unwrap_or_default()
}

/// f with t_v replaced by x.
fn eval_at(f: &LaurentPoly, v: usize, x: &BigInt) -> LaurentPoly {
    let mut out = LaurentPoly::zero(f.arity);
    for (e, c) in &f.terms {
        let mut e2 = e.clone();
        e2[v] = 0;
        out.add_term(e2, c * num_traits::pow(x.clone(), e[v] as usize));
    }
    out
}

/// Inverts eval_at through the balanced x-adic expansion of every
/// coefficient; None if more than `max_deg + 1` digits are needed.
fn interpolate(mut gamma: LaurentPoly, v: usize, x: &BigInt, max_deg: i64) -> Option<LaurentPoly> {
    let half = x / 2;
    let mut out = LaurentPoly::zero(gamma.arity);
    let mut i = 0;
    while !gamma.is_zero() {
        if i > max_deg {
            return None;
        }
        let mut next = LaurentPoly::zero(gamma.arity);
        for (e, c) in &gamma.terms {
            let mut digit = c.mod_floor(x);
            if digit > half {
                digit -= x;
            }
            let mut e2 = e.clone();
            e2[v] = i;
            out.add_term(e2, digit.clone());
            next.add_term(e.clone(), (c - digit) / x);
        }
        gamma = next;
        i += 1;
    }
    Some(out)
}

/// Heuristic GCD of primitive a, b in t_v: evaluate t_v at a large integer,
/// take the gcd of the images, and lift it back. Any lift that divides both
/// inputs is the gcd, so a wrong guess only costs time.
fn heuristic(a: &LaurentPoly, b: &LaurentPoly, v: usize) -> Option<LaurentPoly> {
    let max_deg = degree(a, v).min(degree(b, v));
    let mut x: BigInt = max_norm(a).min(max_norm(b)) * 2 + 29;
    for _ in 0..6 {
        if x.bits() * (degree(a, v).max(degree(b, v)) as u64 + 1) > 40_000 {
            return None;
        }
        let gamma = gcd_rec(&eval_at(a, v, &x), &eval_at(b, v, &x), v.checked_sub(1));
        if let Some(h) = interpolate(gamma, v, &x, max_deg) {
            if degree(&h, v) > 0 {
                let h = primitive_part(&h, v);
                if a.div_exact(&h).is_some() && b.div_exact(&h).is_some() {
                    return Some(h);
                }
            }
        }
        x = x * 73794u32 / 27011u32;
    }
    None
}

/// Substitutes integers for every variable other than t_v.
fn specialize(f: &LaurentPoly, v: usize, point: &[i64]) -> LaurentPoly {
    let mut out = LaurentPoly::zero(f.arity);
    for (e, c) in &f.terms {
        let mut x = c.clone();
        for (u, &k) in e.iter().enumerate() {
            if u != v && k != 0 {
                x *= num_traits::pow(BigInt::from(point[u]), k as usize);
            }
        }
        let mut e2 = vec![0; f.arity];
        e2[v] = e[v];
        out.add_term(e2, x);
    }
    out
}

/// An upper bound on deg_v gcd(a, b) from univariate images at a few integer
/// points that keep both degrees. None when the inputs are already univariate
/// or no point qualified.
fn degree_bound(a: &LaurentPoly, b: &LaurentPoly, v: usize) -> Option<i64> {
    let other = |f: &LaurentPoly| {
        f.terms
            .keys()
            .any(|e| e.iter().enumerate().any(|(u, &k)| u != v && k != 0))
    };
    if !other(a) && !other(b) {
        return None;
    }
    let mut best: Option<i64> = None;
    for attempt in 0..3i64 {
        let point: Vec<i64> = (0..a.arity as i64)
            .map(|u| 2 + (5 * u + 3 * attempt) % 13)
            .collect();
        let (sa, sb) = (specialize(a, v, &point), specialize(b, v, &point));
        if degree(&sa, v) != degree(a, v) || degree(&sb, v) != degree(b, v) {
            continue;
        }
        let d = degree(&gcd_rec(&sa, &sb, Some(v)), v);
        best = Some(best.map_or(d, |x| x.min(d)));
        if d == 0 {
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::super::parse_poly;
    use super::*;

    fn p(s: &str, arity: usize) -> LaurentPoly {
        parse_poly(s, arity).unwrap()
    }

    #[test]
    fn univariate_common_factor() {
        assert_eq!(
            p("t-1", 1).gcd(&p("t^2-1", 1)).unwrap(),
            p("t-1", 1).normalize()
        );
    }

    #[test]
    fn bivariate_example() {
        let f = p("(t1-1)*(t2+1)", 2);
        let g = p("(t1-1)*t2", 2);
        let d = f.gcd(&g).unwrap();
        assert_eq!(d, p("t1-1", 2).normalize());
        assert!(f.div_exact(&d).is_some());
        assert!(g.div_exact(&d).is_some());
    }

    #[test]
    fn zero_conventions() {
        let f = p("t^-1-4+t", 1);
        assert_eq!(f.gcd(&LaurentPoly::zero(1)).unwrap(), f.normalize());
        assert_eq!(LaurentPoly::zero(1).gcd(&f).unwrap(), f.normalize());
        assert!(LaurentPoly::zero(2)
            .gcd(&LaurentPoly::zero(2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn integer_content_survives() {
        let f = p("6*t^2 - 6", 1);
        let g = p("4*t - 4", 1);
        assert_eq!(f.gcd(&g).unwrap(), p("2*t-2", 1).normalize());
    }

    #[test]
    fn monomial_factors_are_units() {
        let f = p("t1^3*t2^-2*(t1+t2)", 2);
        let g = p("t2^5*(t1+t2)*(t1-3)", 2);
        assert_eq!(f.gcd(&g).unwrap(), p("t1+t2", 2));
    }

    #[test]
    fn trivariate_with_content_in_lower_variables() {
        let h = p("t1*t2 - t3 + 2", 3);
        let f = &p("(t1+1)*(t3^2+t2)", 3) * &h;
        let g = &p("(t1+1)*(t3 - t1*t2)", 3) * &h;
        let expected = (&p("t1+1", 3) * &h).normalize();
        assert_eq!(f.gcd(&g).unwrap(), expected);
    }

    #[test]
    fn dense_trivariate_common_factor() {
        let h = p("t1*t2 - t3 + 2*t1^2*t3 - 1", 3);
        let a = p(
            "-6*t1^3 + 2*t1^2*t2 + 6*t1^2 - t1*t2^2*t3 + t1*t2*t3^2 - 3*t1*t2 + 5*t3 - 2",
            3,
        );
        let b = p(
            "2*t1^4*t2*t3 - 2*t1^3*t2^2 + 2*t1^3*t3^2 + t1^2*t2^3 - 2*t2*t3^3 + t3^2 + 2*t3",
            3,
        );
        assert_eq!((&h * &a).gcd(&(&h * &b)).unwrap(), h.normalize());
    }

    #[test]
    fn prs_agrees_with_heuristic() {
        let h = p("t1*t2 - 3", 2);
        let a = &h * &p("t2^2 + t1", 2);
        let b = &h * &p("t1*t2 + 2", 2);
        let via_prs = primitive_part(&prs(a.clone(), b.clone(), 1), 1);
        let via_heu = heuristic(&a, &b, 1).unwrap();
        assert_eq!(via_prs.normalize(), h.normalize());
        assert_eq!(via_heu.normalize(), h.normalize());
    }

    #[test]
    fn arity_mismatch() {
        assert!(p("t", 1).gcd(&p("t1", 2)).is_err());
    }
}
