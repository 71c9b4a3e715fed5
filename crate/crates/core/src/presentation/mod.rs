//! Finitely presented groups: words, parsing, abelianization and Fox calculus.

mod fox;
mod parse;
mod smith;
mod word;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json;

pub use fox::{fox_derivative, fox_matrix, fox_matrix_under, FreeGroupRingElement};
pub use parse::parse_presentation;
pub use smith::{smith_normal_form, IntMatrix, SmithDecomposition};
pub use word::{reduce_word, Letter, Word};

/// ⟨generators | relators⟩.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    generator_names: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    /// Validates names (nonempty, unique, lowercase letter then digits) and
    /// relator generator indices.
    pub fn new(generator_names: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for (i, name) in generator_names.iter().enumerate() {
            let mut chars = name.chars();
            let ok = chars.next().is_some_and(|c| c.is_ascii_lowercase())
                && chars.all(|c| c.is_ascii_digit());
            if !ok {
                return Err(Error::Invalid(format!("bad generator name '{name}'")));
            }
            if generator_names[..i].contains(name) {
                return Err(Error::Invalid(format!("duplicate generator '{name}'")));
            }
        }
        let n = generator_names.len();
        if let Some(bad) = relators
            .iter()
            .find(|w| w.max_generator().is_some_and(|g| g >= n))
        {
            return Err(Error::Invalid(format!(
                "relator uses generator {} but only {n} exist",
                bad.max_generator().unwrap_or(0)
            )));
        }
        let relators = relators
            .into_iter()
            .map(|w| reduce_word(w.letters()))
            .collect();
        Ok(Self {
            generator_names,
            relators,
        })
    }

    /// Generators named with `prefix` followed by 1-based indices.
    pub fn with_indexed_names(prefix: &str, n: usize, relators: Vec<Word>) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")).collect(), relators)
    }

    pub fn generator_count(&self) -> usize {
        self.generator_names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generator_names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Rows are relators, columns generators.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.generator_count();
        let rows: Vec<Vec<i64>> = self.relators.iter().map(|w| w.exponent_sums(n)).collect();
        IntMatrix::from_rows(n, &rows)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{} |", self.generator_names.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{}", r.display_with(&self.generator_names))?;
        }
        if self.relators.is_empty() {
            f.write_str(" ")?;
        }
        f.write_str(">")
    }
}

/// H₁ of a presentation in a Smith basis.
///
/// Coordinate k of ℤⁿ is cyclic of order `moduli[k]` (0 = infinite cyclic).
/// `basis_images[j]` is generator j in these coordinates and `gen_images[j]`
/// its image under the projection onto the free part ℤʳ.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AbelianizationData {
    pub rank: usize,
    #[serde(serialize_with = "json::big_ints")]
    pub torsion: Vec<BigInt>,
    #[serde(serialize_with = "json::big_ints")]
    pub moduli: Vec<BigInt>,
    #[serde(serialize_with = "json::big_int_rows")]
    pub basis_images: Vec<Vec<BigInt>>,
    #[serde(serialize_with = "json::big_int_rows")]
    pub gen_images: Vec<Vec<BigInt>>,
}

impl AbelianizationData {
    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    /// Free-part images as machine integers, for use as exponents.
    pub fn gen_images_i64(&self) -> Result<Vec<Vec<i64>>> {
        self.gen_images
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| {
                        i64::try_from(x)
                            .map_err(|_| Error::Invalid("free-part image overflows i64".into()))
                    })
                    .collect()
            })
            .collect()
    }
}

/// Abelianization through the Smith form of the relation matrix.
///
/// With U·R·V = D, the map v ↦ v·V carries the relation lattice onto the row
/// lattice of D, so generator j lands on row j of V. The sign of each free
/// basis vector is fixed so that the first nonzero generator image along it
/// is positive.
pub fn abelianize(p: &Presentation) -> AbelianizationData {
    let n = p.generator_count();
    let snf = smith_normal_form(&p.relation_matrix());
    let diag = snf.invariant_factors();
    let rel_rank = diag.iter().filter(|d| !d.is_zero()).count();
    let moduli: Vec<BigInt> = (0..n)
        .map(|k| diag.get(k).cloned().unwrap_or_default())
        .collect();
    let mut basis_images: Vec<Vec<BigInt>> = (0..n).map(|j| snf.v.row(j).to_vec()).collect();
    for k in rel_rank..n {
        let flip = basis_images
            .iter()
            .map(|row| &row[k])
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_negative());
        if flip {
            for row in basis_images.iter_mut() {
                row[k] = -std::mem::take(&mut row[k]);
            }
        }
    }
    let gen_images = basis_images
        .iter()
        .map(|row| row[rel_rank..].to_vec())
        .collect();
    let torsion = moduli
        .iter()
        .filter(|d| **d > BigInt::one())
        .cloned()
        .collect();
    AbelianizationData {
        rank: n - rel_rank,
        torsion,
        moduli,
        basis_images,
        gen_images,
    }
}
