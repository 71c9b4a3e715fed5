//! Independent reference computations shared by the integration tests. None
//! of these call the library routine they are used to check.
#![allow(dead_code)]

use alexander_core::presentation::{fox_derivative, FreeGroupRingElement, Letter, Word};
use alexander_core::LaurentPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn poly(arity: usize, terms: &[(Vec<i64>, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(arity, terms.iter().cloned()).unwrap()
}

pub fn random_poly(
    rng: &mut ChaCha8Rng,
    arity: usize,
    lo: i64,
    hi: i64,
    max_terms: usize,
) -> LaurentPoly {
    let n = rng.gen_range(1..=max_terms);
    let terms: Vec<(Vec<i64>, i64)> = (0..n)
        .map(|_| {
            let e = (0..arity).map(|_| rng.gen_range(lo..=hi)).collect();
            let c = [-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
            (e, c)
        })
        .collect();
    poly(arity, &terms)
}

pub fn random_nonzero_poly(
    rng: &mut ChaCha8Rng,
    arity: usize,
    lo: i64,
    hi: i64,
    max_terms: usize,
) -> LaurentPoly {
    loop {
        let f = random_poly(rng, arity, lo, hi, max_terms);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn random_word(rng: &mut ChaCha8Rng, gens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| Letter::new(rng.gen_range(0..gens), rng.gen_bool(0.5)))
        .collect();
    Word::from_letters(letters)
}

/// Cofactor expansion along the first row.
pub fn laplace_poly(m: &[Vec<LaurentPoly>], arity: usize) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(arity);
    }
    let mut acc = LaurentPoly::zero(arity);
    for j in 0..n {
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * &laplace_poly(&minor, arity);
        acc = if j % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

pub fn laplace_int(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * laplace_int(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Fraction-free integer determinant; the last pivot is the determinant.
pub fn bareiss_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Nonzero invariant factors as ratios D_k / D_{k−1}, where D_k is the gcd
/// of all k×k minors.
pub fn invariant_factors_by_minors(m: &[Vec<i64>], cols: usize) -> Vec<BigInt> {
    let rows = m.len();
    let big: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| big[i][j].clone()).collect())
                    .collect();
                g = g.gcd(&laplace_int(&sub));
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

/// det of multiplication by f on ℤ[ℤ/p₁ ⊕ ⋯ ⊕ ℤ/p_k], which equals the
/// product of f over all tuples of p-th roots of unity.
pub fn group_determinant(f: &LaurentPoly, primes: &[u64]) -> BigInt {
    let n: usize = primes.iter().map(|&p| p as usize).product();
    let index = |e: &[i64]| -> usize {
        e.iter().zip(primes).rev().fold(0, |acc, (&x, &p)| {
            acc * p as usize + x.rem_euclid(p as i64) as usize
        })
    };
    let digits = |mut i: usize| -> Vec<i64> {
        primes
            .iter()
            .map(|&p| {
                let d = (i % p as usize) as i64;
                i /= p as usize;
                d
            })
            .collect()
    };
    // column g holds f·g; the determinant is unchanged by transposing
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (col, line) in m.iter_mut().enumerate() {
        let g = digits(col);
        for (e, c) in f.terms() {
            let s: Vec<i64> = g.iter().zip(e).map(|(a, b)| a + b).collect();
            line[index(&s)] += c;
        }
    }
    bareiss_int(m)
}

/// Sylvester resultant of two integer polynomials given by ascending
/// coefficients.
pub fn resultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let da = a.len() - 1;
    let db = b.len() - 1;
    let n = da + db;
    if n == 0 {
        return BigInt::one();
    }
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for i in 0..db {
        for (j, c) in a.iter().rev().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..da {
        for (j, c) in b.iter().rev().enumerate() {
            m[db + i][i + j] = c.clone();
        }
    }
    bareiss_int(m)
}

/// ∏_{ζ^p = 1} f(ζ) for univariate Laurent f through Res(x^p − 1, t^k f).
pub fn norm_by_resultant(f: &LaurentPoly, p: u64) -> BigInt {
    let lo = f.min_exponents().map_or(0, |e| e[0]);
    let hi = f.max_exponents().map_or(0, |e| e[0]);
    let coeffs: Vec<BigInt> = (lo..=hi).map(|k| f.coeff(&[k])).collect();
    let mut cyc = vec![BigInt::zero(); p as usize + 1];
    cyc[0] = -BigInt::one();
    cyc[p as usize] = BigInt::one();
    let r = resultant(&cyc, &coeffs);
    // ∏ ζ^{lo} = ((−1)^{p+1})^{lo}
    if (p + 1) % 2 == 1 && lo.rem_euclid(2) == 1 {
        -r
    } else {
        r
    }
}

/// Σⱼ (∂w/∂xⱼ)(xⱼ − 1) − (w − 1), which must vanish.
pub fn fox_identity_defect(w: &Word, gens: usize) -> FreeGroupRingElement {
    let one = FreeGroupRingElement::from_word(Word::empty());
    let mut acc = FreeGroupRingElement::zero();
    for j in 0..gens {
        let xj = FreeGroupRingElement::from_word(Word::generator(j)).sub(&one);
        acc = acc.add(&fox_derivative(w, j).mul(&xj));
    }
    acc.sub(&FreeGroupRingElement::from_word(w.clone()).sub(&one))
}

/// det(A − tI) by cofactor expansion.
pub fn char_poly(a: &[Vec<i64>]) -> LaurentPoly {
    let n = a.len();
    let m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = LaurentPoly::constant(1, a[i][j]);
                    if i == j {
                        &c - &LaurentPoly::var(1, 0)
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    laplace_poly(&m, 1)
}

/// Random unimodular integer matrix as a product of elementary moves.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    let mut a: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..rng.gen_range(2..=5) {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        if i == j {
            j = (j + 1) % n;
        }
        let k = rng.gen_range(-2..=2);
        let src = a[j].clone();
        for (x, y) in a[i].iter_mut().zip(&src) {
            *x += k * y;
        }
    }
    a
}

pub fn det_i64(a: &[Vec<i64>]) -> BigInt {
    laplace_int(
        &a.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect::<Vec<_>>(),
    )
}

pub fn abs(x: &BigInt) -> BigInt {
    x.abs()
}
