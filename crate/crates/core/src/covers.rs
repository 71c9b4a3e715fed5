//! Finite abelian covers: deck groups, Reidemeister–Schreier presentations of
//! the kernel, mod-p Betti numbers, and the cover-level theorem checks.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::alexander::{alexander_polynomial, AlexanderMatrix};
use crate::error::{Error, Result};
use crate::json;
use crate::laurent::{is_prime, root_of_unity_norm, CyclotomicRing, LaurentPoly};
use crate::par;
use crate::presentation::{
    abelianize, fox_matrix_under, AbelianizationData, Letter, Presentation, Word,
};

/// Default cap on the number of cosets of any cover we build.
pub const DEFAULT_MAX_INDEX: u64 = 256;

/// 𝔽_{p₁} ⊕ ⋯ ⊕ 𝔽_{p_k}. Elements are indexed in mixed radix with the first
/// coordinate least significant.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DeckGroup {
    primes: Vec<u64>,
}

impl DeckGroup {
    pub fn new(primes: Vec<u64>) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::Precondition(
                "deck group needs at least one factor".into(),
            ));
        }
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { primes })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn dimension(&self) -> usize {
        self.primes.len()
    }

    /// |G|, or None if it overflows.
    pub fn order(&self) -> Option<u128> {
        self.primes
            .iter()
            .try_fold(1u128, |acc, &p| acc.checked_mul(u128::from(p)))
    }

    fn check_index(&self, limit: u64) -> Result<usize> {
        match self.order() {
            Some(n) if n <= u128::from(limit) => Ok(n as usize),
            n => Err(Error::IndexLimit {
                index: n.unwrap_or(u128::MAX),
                limit,
            }),
        }
    }

    pub fn element(&self, mut index: usize) -> Vec<u64> {
        self.primes
            .iter()
            .map(|&p| {
                let d = (index as u64) % p;
                index /= p as usize;
                d
            })
            .collect()
    }

    pub fn index_of(&self, g: &[u64]) -> usize {
        self.primes
            .iter()
            .zip(g)
            .rev()
            .fold(0usize, |acc, (&p, &d)| acc * p as usize + d as usize)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.primes
            .iter()
            .zip(a.iter().zip(b))
            .map(|(&p, (&x, &y))| (x + y) % p)
            .collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.primes
            .iter()
            .zip(a.iter().zip(b))
            .map(|(&p, (&x, &y))| (x + p - y) % p)
            .collect()
    }

    /// Image of a word under generator j ↦ assignment[j].
    fn word_image(&self, w: &Word, assignment: &[Vec<u64>]) -> Vec<u64> {
        let mut g = vec![0; self.dimension()];
        for l in w.letters() {
            g = if l.inverse {
                self.sub(&g, &assignment[l.gen])
            } else {
                self.add(&g, &assignment[l.gen])
            };
        }
        g
    }
}

/// A surjection from a finitely presented group onto a deck group, given on
/// generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverMap {
    base: Presentation,
    deck: DeckGroup,
    assignment: Vec<Vec<u64>>,
}

impl CoverMap {
    /// Checks that every relator dies and the images generate the deck group.
    pub fn new(base: Presentation, deck: DeckGroup, assignment: Vec<Vec<u64>>) -> Result<Self> {
        if assignment.len() != base.generator_count() {
            return Err(Error::Invalid(format!(
                "{} generator images for {} generators",
                assignment.len(),
                base.generator_count()
            )));
        }
        for a in &assignment {
            if a.len() != deck.dimension() || a.iter().zip(&deck.primes).any(|(x, p)| x >= p) {
                return Err(Error::Invalid(format!("bad deck element {a:?}")));
            }
        }
        if let Some(r) = base
            .relators()
            .iter()
            .find(|r| deck.word_image(r, &assignment).iter().any(|&x| x != 0))
        {
            return Err(Error::Invalid(format!(
                "relator {} does not map to the identity",
                r.display_with(base.generator_names())
            )));
        }
        let order =
            deck.order()
                .filter(|&n| n <= usize::MAX as u128)
                .ok_or_else(|| Error::Invalid("deck group too large".into()))? as usize;
        let mut seen = vec![false; order];
        seen[0] = true;
        let mut queue = VecDeque::from([vec![0u64; deck.dimension()]]);
        let mut reached = 1;
        while let Some(g) = queue.pop_front() {
            for a in &assignment {
                let h = deck.add(&g, a);
                let k = deck.index_of(&h);
                if !seen[k] {
                    seen[k] = true;
                    reached += 1;
                    queue.push_back(h);
                }
            }
        }
        if reached != order {
            return Err(Error::Invalid(format!(
                "generator images span {reached} of {order} deck elements"
            )));
        }
        Ok(Self {
            base,
            deck,
            assignment,
        })
    }

    pub fn base(&self) -> &Presentation {
        &self.base
    }

    pub fn deck(&self) -> &DeckGroup {
        &self.deck
    }

    pub fn assignment(&self) -> &[Vec<u64>] {
        &self.assignment
    }

    fn assignment_i64(&self) -> Vec<Vec<i64>> {
        self.assignment
            .iter()
            .map(|a| a.iter().map(|&x| x as i64).collect())
            .collect()
    }
}

/// Presentation of the kernel of a cover map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverPresentation {
    pub presentation: Presentation,
    /// Coset representatives indexed like the deck group elements.
    pub transversal: Vec<Word>,
}

/// A character of 𝔽_{p₁} ⊕ ⋯ ⊕ 𝔽_{p_k}: the i-th basis vector goes to
/// ρᵢ^{eᵢ} with ρᵢ = exp(2πi/pᵢ).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Character {
    pub exponents: Vec<u64>,
}

impl Character {
    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// All characters of `deck`, indexed like its elements.
    pub fn all(deck: &DeckGroup) -> Vec<Character> {
        let n = deck.order().expect("deck group order fits") as usize;
        (0..n)
            .map(|i| Character {
                exponents: deck.element(i),
            })
            .collect()
    }
}

/// d_p = n − rank_{𝔽_p}(relation matrix).
pub fn mod_p_betti(p: &Presentation, prime: u64) -> Result<usize> {
    if !is_prime(prime) {
        return Err(Error::NotPrime(prime));
    }
    Ok(p.generator_count() - p.relation_matrix().rank_mod(prime))
}

/// H₁(P) → H₁(P; 𝔽_p) ≅ 𝔽_p^{d_p}, read off the Smith basis: the coordinates
/// whose modulus is divisible by p (0 included) survive mod p.
pub fn mod_p_cover(p: &Presentation, prime: u64) -> Result<CoverMap> {
    if !is_prime(prime) {
        return Err(Error::NotPrime(prime));
    }
    let ab = abelianize(p);
    let pb = BigInt::from(prime);
    let coords: Vec<usize> = (0..ab.moduli.len())
        .filter(|&k| ab.moduli[k].is_multiple_of(&pb))
        .collect();
    if coords.is_empty() {
        return Err(Error::Precondition(format!(
            "d_{prime} is 0; there is no mod {prime} cover"
        )));
    }
    let assignment = ab
        .basis_images
        .iter()
        .map(|row| coords.iter().map(|&k| residue(&row[k], prime)).collect())
        .collect();
    CoverMap::new(
        p.clone(),
        DeckGroup::new(vec![prime; coords.len()])?,
        assignment,
    )
}

/// The cover with deck group ⊕ 𝔽_{pᵢ} obtained by reducing the i-th free
/// coordinate of H₁ mod pᵢ; it lies below the universal free abelian cover.
pub fn free_abelian_cover(p: &Presentation, primes: &[u64]) -> Result<CoverMap> {
    let ab = abelianize(p);
    if ab.rank != primes.len() {
        return Err(Error::Precondition(format!(
            "b1 is {} but {} primes were given",
            ab.rank,
            primes.len()
        )));
    }
    let deck = DeckGroup::new(primes.to_vec())?;
    let assignment = ab
        .gen_images
        .iter()
        .map(|img| {
            img.iter()
                .zip(primes)
                .map(|(x, &q)| residue(x, q))
                .collect()
        })
        .collect();
    CoverMap::new(p.clone(), deck, assignment)
}

fn residue(x: &BigInt, p: u64) -> u64 {
    u64::try_from(x.mod_floor(&BigInt::from(p))).expect("residue fits")
}

/// Reidemeister–Schreier with cosets identified with deck elements.
///
/// The transversal is a breadth-first spanning tree of the coset graph,
/// exploring generators in order from the identity coset, so it is prefix
/// closed. Every non-tree edge (c, xⱼ) is a Schreier generator, giving
/// n|G| − (|G| − 1) of them, and every relator is rewritten from every coset.
pub fn reidemeister_schreier(cm: &CoverMap) -> CoverPresentation {
    let deck = &cm.deck;
    let n = cm.base.generator_count();
    let order = deck.order().expect("validated deck order") as usize;
    let step: Vec<Vec<usize>> = (0..order)
        .map(|c| {
            let g = deck.element(c);
            cm.assignment
                .iter()
                .map(|a| deck.index_of(&deck.add(&g, a)))
                .collect()
        })
        .collect();

    let mut transversal: Vec<Option<Word>> = vec![None; order];
    let mut tree = vec![false; order * n];
    transversal[0] = Some(Word::empty());
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for (j, &d) in step[c].iter().enumerate() {
            if transversal[d].is_none() {
                let w = transversal[c]
                    .as_ref()
                    .expect("visited")
                    .concat(&Word::generator(j));
                transversal[d] = Some(w);
                tree[c * n + j] = true;
                queue.push_back(d);
            }
        }
    }
    let transversal: Vec<Word> = transversal
        .into_iter()
        .map(|w| w.expect("cover map is surjective"))
        .collect();

    let mut schreier = vec![None; order * n];
    let mut count = 0;
    for (slot, is_tree) in schreier.iter_mut().zip(&tree) {
        if !is_tree {
            *slot = Some(count);
            count += 1;
        }
    }

    let back: Vec<Vec<usize>> = (0..order)
        .map(|c| {
            let g = deck.element(c);
            cm.assignment
                .iter()
                .map(|a| deck.index_of(&deck.sub(&g, a)))
                .collect()
        })
        .collect();
    let rewrite = |start: usize, w: &Word| -> Word {
        let mut c = start;
        let mut out = Vec::new();
        for l in w.letters() {
            if l.inverse {
                c = back[c][l.gen];
                if let Some(s) = schreier[c * n + l.gen] {
                    out.push(Letter::new(s, true));
                }
            } else {
                if let Some(s) = schreier[c * n + l.gen] {
                    out.push(Letter::new(s, false));
                }
                c = step[c][l.gen];
            }
        }
        debug_assert_eq!(c, start, "relators close up in the cover");
        Word::from_letters(out)
    };
    let relators: Vec<Word> = par::map_range(order, |c| {
        cm.base
            .relators()
            .iter()
            .map(|r| rewrite(c, r))
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();

    CoverPresentation {
        presentation: Presentation::with_indexed_names("s", count, relators)
            .expect("generated names are valid"),
        transversal,
    }
}

pub fn cover_homology(cp: &CoverPresentation) -> AbelianizationData {
    abelianize(&cp.presentation)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TorsionCoverStatus {
    Equal,
    Unequal,
    /// Δ vanishes at some root-of-unity tuple.
    HypothesisViolated,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TorsionCoverReport {
    pub primes: Vec<u64>,
    pub delta: LaurentPoly,
    pub cover_b1: usize,
    /// |Tor H₁| of the cover, from its presentation.
    #[serde(serialize_with = "json::big_int")]
    pub lhs: BigInt,
    /// |∏ Δ(ρ₁^{e₁},…,ρₙ^{eₙ})|.
    #[serde(serialize_with = "json::big_int")]
    pub rhs: BigInt,
    pub status: TorsionCoverStatus,
}

/// Compares the torsion of the ⊕𝔽_{pᵢ} cover below the universal free
/// abelian cover with the root-of-unity norm of Δ.
pub fn verify_torsion_cover_formula(
    p: &Presentation,
    primes: &[u64],
    max_index: u64,
) -> Result<TorsionCoverReport> {
    let cm = free_abelian_cover(p, primes)?;
    cm.deck.check_index(max_index)?;
    let delta = alexander_polynomial(p)?;
    let rhs = root_of_unity_norm(delta.poly(), primes)?.abs();
    let cover = cover_homology(&reidemeister_schreier(&cm));
    let lhs = cover.torsion_order();
    let status = if rhs.is_zero() {
        TorsionCoverStatus::HypothesisViolated
    } else if lhs == rhs {
        TorsionCoverStatus::Equal
    } else {
        TorsionCoverStatus::Unequal
    };
    Ok(TorsionCoverReport {
        primes: primes.to_vec(),
        delta: delta.poly().clone(),
        cover_b1: cover.rank,
        lhs,
        rhs,
        status,
    })
}

/// Rank of A with tᵢ ↦ ρᵢ^{eᵢ}, exactly over ℚ(ζ_m) where m is the lcm of
/// the orders of the ρᵢ^{eᵢ}.
pub fn char_rank(a: &AlexanderMatrix, chi: &Character, deck: &DeckGroup) -> Result<usize> {
    if a.arity() != deck.dimension() || chi.exponents.len() != deck.dimension() {
        return Err(Error::ArityMismatch {
            left: a.arity(),
            right: deck.dimension(),
        });
    }
    let m = deck
        .primes
        .iter()
        .zip(&chi.exponents)
        .filter(|(_, &e)| e != 0)
        .fold(1u64, |acc, (&p, _)| acc.lcm(&p));
    let powers: Vec<i64> = deck
        .primes
        .iter()
        .zip(&chi.exponents)
        .map(|(&p, &e)| {
            if e == 0 {
                0
            } else {
                ((e % p) * (m / p)) as i64
            }
        })
        .collect();
    let ring = CyclotomicRing::new(m);
    let evaluated: Vec<Vec<_>> = (0..a.rows())
        .map(|i| a.row(i).iter().map(|f| ring.evaluate(f, &powers)).collect())
        .collect();
    Ok(ring.rank(&evaluated))
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct HironakaReport {
    pub base_b1: usize,
    pub generators: usize,
    pub characters: usize,
    /// Entry i − 1 counts nontrivial characters χ with rank P(χ) < r − i.
    pub v_counts: Vec<usize>,
    pub predicted: usize,
}

/// b₁ of the cover predicted from twisted ranks of the Fox matrix.
///
/// The Fox matrix is taken under x_j ↦ t^{assignment[j]}, so a character of
/// the deck group evaluates it directly; r is the generator count.
pub fn hironaka_predicted_betti(p: &Presentation, cm: &CoverMap) -> Result<HironakaReport> {
    let base_b1 = abelianize(p).rank;
    let deck = &cm.deck;
    let r = p.generator_count();
    let a = fox_matrix_under(p, &cm.assignment_i64(), deck.dimension());
    let chars: Vec<Character> = Character::all(deck)
        .into_iter()
        .filter(|c| !c.is_trivial())
        .collect();
    let ranks = par::map(&chars, |chi| char_rank(&a, chi, deck));
    let ranks: Vec<usize> = ranks.into_iter().collect::<Result<_>>()?;
    let v_counts: Vec<usize> = (1..r)
        .map(|i| ranks.iter().filter(|&&k| k < r - i).count())
        .collect();
    Ok(HironakaReport {
        base_b1,
        generators: r,
        characters: chars.len(),
        predicted: base_b1 + v_counts.iter().sum::<usize>(),
        v_counts,
    })
}

pub fn binom2(r: usize) -> usize {
    r * r.saturating_sub(1) / 2
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ShalenWagreichReport {
    pub prime: u64,
    /// d_p of the base.
    pub r: usize,
    pub bound: usize,
    pub index: u64,
    pub cover_dp: usize,
    pub bound_satisfied: bool,
    /// When p divides |Tor H₁|, d_p exceeds b₁ and the b₁ ≥ 4 argument does
    /// not apply; the bound itself is still checked.
    pub p_divides_torsion: bool,
}

/// d_p(cover) ≥ binom(d_p, 2) for the mod-p cover.
pub fn shalen_wagreich_check(
    p: &Presentation,
    prime: u64,
    max_index: u64,
) -> Result<ShalenWagreichReport> {
    let cm = mod_p_cover(p, prime)?;
    let index = cm.deck.check_index(max_index)? as u64;
    let r = cm.deck.dimension();
    let cover = reidemeister_schreier(&cm);
    let cover_dp = mod_p_betti(&cover.presentation, prime)?;
    let pb = BigInt::from(prime);
    let p_divides_torsion = abelianize(p).torsion.iter().any(|t| t.is_multiple_of(&pb));
    Ok(ShalenWagreichReport {
        prime,
        r,
        bound: binom2(r),
        index,
        cover_dp,
        bound_satisfied: cover_dp >= binom2(r),
        p_divides_torsion,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct B1Ge4Report {
    pub b1: usize,
    pub delta: LaurentPoly,
    pub delta_is_one: bool,
    pub binom: usize,
    pub r_lt_binom: bool,
    pub consistent: bool,
}

pub fn b1_ge_4_consistency(p: &Presentation) -> Result<B1Ge4Report> {
    let b1 = abelianize(p).rank;
    if b1 < 4 {
        return Err(Error::Precondition(format!("b1 is {b1}, need at least 4")));
    }
    let delta = alexander_polynomial(p)?.poly().clone();
    let delta_is_one = delta.is_one();
    let binom = binom2(b1);
    Ok(B1Ge4Report {
        b1,
        delta,
        delta_is_one,
        binom,
        r_lt_binom: b1 < binom,
        consistent: !delta_is_one && b1 < binom,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    const T3: &str = "<x,y,z | [x,y],[x,z],[y,z]>";
    const HEIS: &str = "<x,y,z | z^-1[x,y], [x,z], [y,z]>";
    const MT: &str = "<x,y,h | [x,y], h x H (x^3 y^2)^-1, h y H (x y)^-1>";

    fn pres(s: &str) -> Presentation {
        parse_presentation(s).unwrap()
    }

    #[test]
    fn mod_p_betti_examples() {
        assert_eq!(mod_p_betti(&pres(T3), 5).unwrap(), 3);
        assert_eq!(mod_p_betti(&pres(MT), 2).unwrap(), 2);
        assert_eq!(mod_p_betti(&pres(MT), 3).unwrap(), 1);
        assert_eq!(mod_p_betti(&pres(T3), 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn mod_p_cover_examples() {
        let c = mod_p_cover(&pres("<x | >"), 3).unwrap();
        assert_eq!(c.assignment(), &[vec![1]]);
        let c = mod_p_cover(&pres(T3), 2).unwrap();
        assert_eq!(
            c.assignment(),
            &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]
        );
        let c = mod_p_cover(&pres(MT), 3).unwrap();
        assert_eq!(c.deck().primes(), &[3]);
        assert_eq!(c.assignment(), &[vec![0], vec![0], vec![1]]);
        assert!(mod_p_cover(&pres("<x | x^2>"), 3).is_err());
    }

    #[test]
    fn cover_map_validation() {
        let deck = DeckGroup::new(vec![2, 2]).unwrap();
        assert!(CoverMap::new(pres("<x | >"), deck.clone(), vec![vec![1, 0]]).is_err());
        assert!(
            CoverMap::new(pres("<x,y | >"), deck.clone(), vec![vec![1, 0], vec![1, 1]]).is_ok()
        );
        let cyc = DeckGroup::new(vec![3]).unwrap();
        assert!(CoverMap::new(pres("<x | x^2>"), cyc, vec![vec![1]]).is_err());
        assert_eq!(DeckGroup::new(vec![6]), Err(Error::NotPrime(6)));
    }

    #[test]
    fn deck_indexing_round_trip() {
        let d = DeckGroup::new(vec![2, 3, 5]).unwrap();
        for i in 0..30 {
            assert_eq!(d.index_of(&d.element(i)), i);
        }
    }

    #[test]
    fn free_group_cover() {
        let cm = mod_p_cover(&pres("<x | >"), 3).unwrap();
        let cp = reidemeister_schreier(&cm);
        assert_eq!(cp.presentation.generator_count(), 1);
        assert!(cp.presentation.relators().is_empty());
        assert_eq!(cover_homology(&cp).rank, 1);
        assert_eq!(cp.transversal.len(), 3);
    }

    #[test]
    fn t3_cover() {
        let cm = mod_p_cover(&pres(T3), 2).unwrap();
        let cp = reidemeister_schreier(&cm);
        assert_eq!(cp.presentation.generator_count(), 3 * 8 - 7);
        assert_eq!(cp.presentation.relators().len(), 24);
        let h = cover_homology(&cp);
        assert_eq!(h.rank, 3);
        assert!(h.torsion.is_empty());
    }

    #[test]
    fn mapping_torus_cube_cover() {
        let cm = mod_p_cover(&pres(MT), 3).unwrap();
        let h = cover_homology(&reidemeister_schreier(&cm));
        assert_eq!(h.rank, 1);
        assert_eq!(h.torsion_order(), BigInt::from(50));
    }

    #[test]
    fn torsion_formula() {
        for (primes, expected) in [([3u64], 50), ([2], 12)] {
            let r = verify_torsion_cover_formula(&pres(MT), &primes, 256).unwrap();
            assert_eq!(r.lhs, BigInt::from(expected));
            assert_eq!(r.rhs, BigInt::from(expected));
            assert_eq!(r.status, TorsionCoverStatus::Equal);
        }
        let r = verify_torsion_cover_formula(&pres(T3), &[2, 2, 2], 256).unwrap();
        assert_eq!(
            (r.lhs.clone(), r.rhs.clone()),
            (BigInt::from(1), BigInt::from(1))
        );
        assert!(verify_torsion_cover_formula(&pres(T3), &[2], 256).is_err());
        assert!(matches!(
            verify_torsion_cover_formula(&pres(T3), &[5, 5, 5], 100),
            Err(Error::IndexLimit {
                index: 125,
                limit: 100
            })
        ));
    }

    #[test]
    fn torsion_formula_zero_norm() {
        // monodromy of order 3, Δ = t^2 + t + 1
        let p = pres("<x,y,h | [x,y], h x H Y, h y H y x>");
        let r = verify_torsion_cover_formula(&p, &[3], 256).unwrap();
        assert_eq!(r.delta.to_string(), "t^2 + t + 1");
        assert_eq!(r.status, TorsionCoverStatus::HypothesisViolated);
        assert_eq!(r.cover_b1, 3);
    }

    #[test]
    fn char_rank_examples() {
        let p = pres(MT);
        let cm = mod_p_cover(&p, 3).unwrap();
        let a = fox_matrix_under(&p, &cm.assignment_i64(), 1);
        let deck = cm.deck();
        let rank = |e| char_rank(&a, &Character { exponents: vec![e] }, deck).unwrap();
        assert_eq!(rank(1), 2);
        assert_eq!(rank(2), 2);
        assert_eq!(rank(0), 2);

        let z = AlexanderMatrix::from_rows(
            2,
            2,
            vec![
                vec![LaurentPoly::zero(2), LaurentPoly::zero(2)],
                vec![LaurentPoly::var(2, 0), LaurentPoly::one(2)],
            ],
        )
        .unwrap();
        let d = DeckGroup::new(vec![2, 3]).unwrap();
        for chi in Character::all(&d) {
            assert!(char_rank(&z, &chi, &d).unwrap() < 2);
        }
        let bad = Character { exponents: vec![1] };
        assert!(char_rank(&z, &bad, &d).is_err());
    }

    #[test]
    fn hironaka_examples() {
        for (text, prime) in [(T3, 2), (T3, 3), (HEIS, 2), (MT, 3), (MT, 2), ("<x | >", 5)] {
            let p = pres(text);
            let cm = mod_p_cover(&p, prime).unwrap();
            let h = hironaka_predicted_betti(&p, &cm).unwrap();
            let actual = cover_homology(&reidemeister_schreier(&cm)).rank;
            assert_eq!(h.predicted, actual, "{text} p={prime}");
        }
        let p = pres(MT);
        let h = hironaka_predicted_betti(&p, &mod_p_cover(&p, 3).unwrap()).unwrap();
        assert_eq!(h.predicted, 1);
    }

    #[test]
    fn shalen_wagreich_examples() {
        let r = shalen_wagreich_check(&pres(T3), 2, 256).unwrap();
        assert_eq!(
            (r.r, r.bound, r.cover_dp, r.bound_satisfied),
            (3, 3, 3, true)
        );
        let r = shalen_wagreich_check(&pres(HEIS), 2, 256).unwrap();
        assert_eq!((r.r, r.bound), (2, 1));
        assert!(r.cover_dp >= 1 && r.bound_satisfied);
        let r = shalen_wagreich_check(&pres("<x | >"), 5, 256).unwrap();
        assert_eq!(
            (r.r, r.bound, r.cover_dp, r.bound_satisfied),
            (1, 0, 1, true)
        );
        let r = shalen_wagreich_check(&pres(MT), 2, 256).unwrap();
        assert!(r.p_divides_torsion);
        assert!(matches!(
            shalen_wagreich_check(&pres(T3), 7, 256),
            Err(Error::IndexLimit {
                index: 343,
                limit: 256
            })
        ));
    }

    #[test]
    fn b1_ge_4_examples() {
        let r = b1_ge_4_consistency(&pres("<a,b,c,d | >")).unwrap();
        assert!(r.delta.is_zero() && r.consistent);
        assert_eq!(r.binom, 6);
        assert!(
            b1_ge_4_consistency(&pres("<a,b,c,d,e | >"))
                .unwrap()
                .consistent
        );
        assert!(b1_ge_4_consistency(&pres(T3)).is_err());
    }
}
