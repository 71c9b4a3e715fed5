//! Exact arithmetic at roots of unity.
//!
//! Two pieces live here: the ring ℤ[ζ_m] = ℤ[x]/Φ_m(x), used to evaluate
//! polynomial matrices at characters of finite abelian groups, and the
//! norm ∏ f(ρ₁^{e₁},…,ρₙ^{eₙ}) over all exponent tuples, computed in the
//! group ring ℤ[x₁,…,xₙ]/(x₁^{p₁}−1,…,xₙ^{pₙ}−1).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LaurentPoly;
use crate::error::{Error, Result};
use crate::par;

/// Dense coefficients of Φ_m, ascending. Φ_1 = x − 1.
pub fn cyclotomic_polynomial(m: u64) -> Vec<BigInt> {
    assert!(m >= 1);
    // x^m - 1 divided by Φ_d for every proper divisor d of m
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = divide_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Quotient of `a` by the monic `b`, asserting the remainder is zero.
fn divide_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (db..a.len()).rev() {
        let c = std::mem::take(&mut rem[i]);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(db) {
            rem[i - db + j] -= &c * bj;
        }
        q[i - db] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

/// The ring of integers ℤ[ζ_m], elements stored as dense coefficient
/// vectors of length φ(m) in the power basis.
#[derive(Clone, Debug)]
pub struct CyclotomicRing {
    order: u64,
    modulus: Vec<BigInt>,
}

pub type CyclotomicElement = Vec<BigInt>;

impl CyclotomicRing {
    pub fn new(order: u64) -> Self {
        Self {
            order,
            modulus: cyclotomic_polynomial(order),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(&self) -> CyclotomicElement {
        vec![BigInt::zero(); self.degree()]
    }

    pub fn is_zero(&self, a: &CyclotomicElement) -> bool {
        a.iter().all(Zero::is_zero)
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> CyclotomicElement {
        let d = self.degree();
        for i in (d..v.len()).rev() {
            let c = std::mem::take(&mut v[i]);
            if c.is_zero() {
                continue;
            }
            for (j, mj) in self.modulus.iter().enumerate().take(d) {
                v[i - d + j] -= &c * mj;
            }
        }
        v.resize(d, BigInt::zero());
        v
    }

    /// ζ_m^k.
    pub fn zeta_power(&self, k: i64) -> CyclotomicElement {
        let k = k.rem_euclid(self.order as i64) as usize;
        let mut v = vec![BigInt::zero(); k.max(self.degree()) + 1];
        v[k] = BigInt::one();
        self.reduce(v)
    }

    pub fn mul(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        let mut v = vec![BigInt::zero(); a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        self.reduce(v)
    }

    pub fn sub(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    /// Value of `f` at tᵢ = ζ_m^{powers[i]}.
    pub fn evaluate(&self, f: &LaurentPoly, powers: &[i64]) -> CyclotomicElement {
        assert_eq!(f.arity(), powers.len());
        let m = self.order as i64;
        let mut v = vec![BigInt::zero(); self.order as usize];
        for (e, c) in f.terms() {
            let k = e.iter().zip(powers).fold(0i64, |acc, (&a, &b)| {
                (acc + (a.rem_euclid(m)) * b.rem_euclid(m)) % m
            });
            v[k as usize] += c;
        }
        self.reduce(v)
    }

    /// Rank of a matrix over ℚ(ζ_m).
    ///
    /// Division-free elimination in the domain ℤ[ζ_m]: each row below the
    /// pivot is replaced by pivot·row − entry·pivot_row, then divided by the
    /// integer content of its coefficients. Pivot is the first nonzero entry.
    pub fn rank(&self, matrix: &[Vec<CyclotomicElement>]) -> usize {
        let mut rows: Vec<Vec<CyclotomicElement>> = matrix.to_vec();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..ncols {
            let Some(p) = (rank..rows.len()).find(|&i| !self.is_zero(&rows[i][col])) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot_row = rows[rank].clone();
            let pivot = pivot_row[col].clone();
            for row in rows.iter_mut().skip(rank + 1) {
                if self.is_zero(&row[col]) {
                    continue;
                }
                let factor = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x = self.sub(&self.mul(&pivot, x), &self.mul(&factor, y));
                }
                remove_content(row);
            }
            rank += 1;
        }
        rank
    }
}

fn remove_content(row: &mut [CyclotomicElement]) {
    use num_integer::Integer;
    let g = row
        .iter()
        .flatten()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g > BigInt::one() {
        for c in row.iter_mut().flatten() {
            *c /= &g;
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense element of ℤ[G] for G = ℤ/p₁ ⊕ ⋯ ⊕ ℤ/pₙ, mixed-radix indexed with
/// the first coordinate varying slowest.
struct GroupRing {
    moduli: Vec<usize>,
    strides: Vec<usize>,
    size: usize,
}

impl GroupRing {
    fn new(moduli: &[u64]) -> Self {
        let moduli: Vec<usize> = moduli.iter().map(|&p| p as usize).collect();
        let mut strides = vec![1; moduli.len()];
        for i in (0..moduli.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * moduli[i + 1];
        }
        let size = moduli.iter().product();
        Self {
            moduli,
            strides,
            size,
        }
    }

    fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.moduli.len()];
        for (i, s) in self.strides.iter().enumerate() {
            out[i] = index / s;
            index %= s;
        }
        out
    }

    fn index(&self, digits: impl IntoIterator<Item = usize>) -> usize {
        digits
            .into_iter()
            .zip(&self.strides)
            .map(|(d, s)| d * s)
            .sum()
    }

    /// f(x₁^{e₁},…,xₙ^{eₙ}) in ℤ[G].
    fn conjugate(&self, f: &LaurentPoly, e: &[usize]) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.size];
        for (exps, c) in f.terms() {
            let idx = self.index(
                exps.iter()
                    .zip(e)
                    .zip(&self.moduli)
                    .map(|((&a, &k), &p)| ((a.rem_euclid(p as i64) as usize) * k) % p),
            );
            v[idx] += c;
        }
        v
    }

    fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.size];
        let db: Vec<(Vec<usize>, &BigInt)> = b
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (self.digits(j), c))
            .collect();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let di = self.digits(i);
            for (dj, y) in &db {
                let k = self.index(
                    di.iter()
                        .zip(dj)
                        .zip(&self.moduli)
                        .map(|((a, b), p)| (a + b) % p),
                );
                out[k] += x * *y;
            }
        }
        out
    }

    fn one(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.size];
        v[0] = BigInt::one();
        v
    }

    /// Reduces modulo Φ_{pᵢ}(xᵢ) in every coordinate (pᵢ prime, so
    /// Φ_{pᵢ} = 1 + x + ⋯ + x^{pᵢ−1}). Returns the constant term if the result
    /// is constant.
    fn reduce_to_constant(&self, mut v: Vec<BigInt>) -> Option<BigInt> {
        for (axis, &p) in self.moduli.iter().enumerate() {
            let stride = self.strides[axis];
            for base in 0..self.size {
                if (base / stride) % p != p - 1 {
                    continue;
                }
                let top = std::mem::take(&mut v[base]);
                if top.is_zero() {
                    continue;
                }
                for j in 0..p - 1 {
                    v[base - (p - 1 - j) * stride] -= &top;
                }
            }
        }
        if v.iter().skip(1).all(Zero::is_zero) {
            Some(v.swap_remove(0))
        } else {
            None
        }
    }
}

/// The exact integer ∏ f(ρ₁^{e₁},…,ρₙ^{eₙ}) over all 0 ≤ eᵢ < pᵢ, with ρᵢ a
/// primitive pᵢ-th root of unity.
///
/// The product of all conjugates f(x₁^{e₁},…,xₙ^{eₙ}) is formed in
/// ℤ[x]/(xᵢ^{pᵢ}−1); evaluated at any tuple of primitive roots it gives the
/// norm, so reducing it modulo every Φ_{pᵢ} leaves a constant.
pub fn root_of_unity_norm(f: &LaurentPoly, primes: &[u64]) -> Result<BigInt> {
    if f.arity() != primes.len() {
        return Err(Error::ArityMismatch {
            left: f.arity(),
            right: primes.len(),
        });
    }
    if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
        return Err(Error::NotPrime(p));
    }
    let ring = GroupRing::new(primes);
    let conjugates = par::map_range(ring.size, |i| ring.conjugate(f, &ring.digits(i)));
    let product = par::reduce(conjugates, || ring.one(), |a, b| ring.mul(&a, &b));
    ring.reduce_to_constant(product)
        .ok_or_else(|| Error::Invalid("conjugate product did not reduce to an integer".into()))
}
