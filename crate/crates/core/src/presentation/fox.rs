//! Fox free differential calculus.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::word::{Letter, Word};
use super::{abelianize, Presentation};
use crate::alexander::AlexanderMatrix;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// An element of the integral group ring ℤ[F] of the free group.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreeGroupRingElement {
    terms: BTreeMap<Word, BigInt>,
}

impl FreeGroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_word(w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(w, BigInt::from(1));
        e
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// Image under the ring map sending generator j to t^{images[j]}.
    pub fn map_to_laurent(&self, images: &[Vec<i64>], arity: usize) -> LaurentPoly {
        let mut out = LaurentPoly::zero(arity);
        for (w, c) in &self.terms {
            let mut e = vec![0i64; arity];
            for l in w.letters() {
                for (x, y) in e.iter_mut().zip(&images[l.gen]) {
                    *x += l.sign() * y;
                }
            }
            out.add_term(e, c.clone());
        }
        out
    }
}

/// ∂w/∂x_gen via ∂(uv) = ∂u + u·∂v, ∂x/∂x = 1, ∂x⁻¹/∂x = −x⁻¹.
pub fn fox_derivative(w: &Word, gen: usize) -> FreeGroupRingElement {
    let mut out = FreeGroupRingElement::zero();
    let mut prefix: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if l.gen == gen {
            if l.inverse {
                let mut p = prefix.clone();
                p.push(l);
                out.add_term(Word::from_letters(p), BigInt::from(-1));
            } else {
                out.add_term(Word::from_letters(prefix.clone()), BigInt::from(1));
            }
        }
        prefix.push(l);
    }
    out
}

/// Fox Jacobian pushed through x_j ↦ t^{images[j]} into ℤ[t₁^±1,…,t_k^±1]:
/// entry (i, j) is the image of ∂rᵢ/∂xⱼ.
pub fn fox_matrix_under(p: &Presentation, images: &[Vec<i64>], arity: usize) -> AlexanderMatrix {
    let n = p.generator_count();
    assert_eq!(images.len(), n);
    let mut rows = Vec::with_capacity(p.relators().len());
    for r in p.relators() {
        let mut row: Vec<LaurentPoly> = (0..n).map(|_| LaurentPoly::zero(arity)).collect();
        let mut prefix = vec![0i64; arity];
        for l in r.letters() {
            let img = &images[l.gen];
            if l.inverse {
                for (x, y) in prefix.iter_mut().zip(img) {
                    *x -= y;
                }
                row[l.gen].add_term(prefix.clone(), BigInt::from(-1));
            } else {
                row[l.gen].add_term(prefix.clone(), BigInt::from(1));
                for (x, y) in prefix.iter_mut().zip(img) {
                    *x += y;
                }
            }
        }
        rows.push(row);
    }
    AlexanderMatrix::from_rows(arity, n, rows).expect("uniform arity")
}

/// The Fox matrix under the free abelianization ψ: π → H₁/Tor ≅ ℤʳ.
pub fn fox_matrix(p: &Presentation) -> Result<AlexanderMatrix> {
    let ab = abelianize(p);
    if ab.rank == 0 {
        return Err(Error::Precondition(
            "first Betti number is 0; there is no free abelian cover".into(),
        ));
    }
    Ok(fox_matrix_under(p, &ab.gen_images_i64()?, ab.rank))
}

#[cfg(test)]
mod tests {
    use super::super::parse_presentation;
    use super::*;
    use crate::laurent::parse_poly;

    #[test]
    fn commutator_derivative() {
        let w = Word::from_signed(&[1, 2, -1, -2]);
        let d = fox_derivative(&w, 0);
        let mut expected = FreeGroupRingElement::from_word(Word::empty());
        expected.add_term(Word::from_signed(&[1, 2, -1]), BigInt::from(-1));
        assert_eq!(d, expected);
    }

    #[test]
    fn cube_derivative() {
        let w = Word::from_signed(&[1, 1, 1]);
        let d = fox_derivative(&w, 0);
        let mut expected = FreeGroupRingElement::zero();
        for k in 0..3 {
            expected.add_term(Word::generator(0).pow(k), BigInt::from(1));
        }
        assert_eq!(d, expected);
        assert!(fox_derivative(&Word::generator(1), 0).is_zero());
    }

    #[test]
    fn direct_image_matches_ring_map() {
        let p = parse_presentation("<x,y | xyxYXY, x^3 Y^2 x>").unwrap();
        let images = vec![vec![1, 2], vec![-1, 0]];
        let m = fox_matrix_under(&p, &images, 2);
        for (i, r) in p.relators().iter().enumerate() {
            for j in 0..2 {
                assert_eq!(
                    m.get(i, j),
                    &fox_derivative(r, j).map_to_laurent(&images, 2)
                );
            }
        }
    }

    #[test]
    fn z2_row() {
        let p = parse_presentation("<x,y | xyXY>").unwrap();
        let m = fox_matrix(&p).unwrap();
        assert_eq!(m.get(0, 0), &parse_poly("1 - t2", 2).unwrap());
        assert_eq!(m.get(0, 1), &parse_poly("t1 - 1", 2).unwrap());
    }

    #[test]
    fn trefoil_entry() {
        let p = parse_presentation("<x,y | xyxYXY>").unwrap();
        let m = fox_matrix(&p).unwrap();
        assert_eq!(m.get(0, 0), &parse_poly("1 - t + t^2", 1).unwrap());
    }

    #[test]
    fn empty_and_rank_zero() {
        let m = fox_matrix(&parse_presentation("<x | >").unwrap()).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 1));
        assert!(matches!(
            fox_matrix(&parse_presentation("<x | x^2>").unwrap()),
            Err(Error::Precondition(_))
        ));
    }
}
