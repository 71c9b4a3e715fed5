//! Elementary ideals and Alexander polynomials, the block-diagonal
//! multiplication construction, and the b₁ = 1 checks.

mod matrix;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::json;
use crate::laurent::{LaurentPoly, SymmetryClass, SymmetryKind};
use crate::presentation::{abelianize, fox_matrix, Presentation};

pub use matrix::AlexanderMatrix;

/// Which minors produced a polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Convention {
    /// GCD of the (n−1)×(n−1) minors of an n-column Fox matrix.
    RelativeFirstMinors,
    /// GCD of the n×n minors of an n-column module presentation matrix.
    OrderZeroDirect,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::RelativeFirstMinors => "RelativeFirstMinors",
            Convention::OrderZeroDirect => "OrderZeroDirect",
        })
    }
}

/// A normalized Alexander polynomial tagged with its convention.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlexanderPolynomial {
    poly: LaurentPoly,
    convention: Convention,
}

impl AlexanderPolynomial {
    pub fn new(poly: &LaurentPoly, convention: Convention) -> Self {
        Self {
            poly: poly.normalize(),
            convention,
        }
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn arity(&self) -> usize {
        self.poly.arity()
    }
}

impl fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// The size×size minors of `a` (the generators of an elementary ideal).
pub fn elementary_minors(a: &AlexanderMatrix, size: usize) -> Vec<LaurentPoly> {
    a.minors(size)
}

/// Δ of a finitely presented group: GCD of the (n−1)×(n−1) minors of the
/// Fox matrix under the free abelianization, where n is the number of
/// generators.
pub fn alexander_polynomial(p: &Presentation) -> Result<AlexanderPolynomial> {
    let fox = fox_matrix(p)?;
    let size = p.generator_count() - 1;
    Ok(AlexanderPolynomial::new(
        &fox.minors_gcd(size),
        Convention::RelativeFirstMinors,
    ))
}

/// Order of a module presented directly by `a`: GCD of the n×n minors. With
/// fewer rows than columns there are none and the order is 0.
pub fn order_zero_direct(a: &AlexanderMatrix) -> AlexanderPolynomial {
    AlexanderPolynomial::new(&a.minors_gcd(a.cols()), Convention::OrderZeroDirect)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LevineHypotheses {
    pub is_symmetric: bool,
    #[serde(serialize_with = "json::big_int")]
    pub trace: BigInt,
    pub trace_nonzero: bool,
}

impl LevineHypotheses {
    pub fn hold(&self) -> bool {
        self.is_symmetric && self.trace_nonzero
    }
}

/// λ must satisfy ι(λ) = λ and λ(1,…,1) ≠ 0.
pub fn check_levine_hypotheses(lambda: &LaurentPoly) -> LevineHypotheses {
    let trace = lambda.trace();
    LevineHypotheses {
        is_symmetric: lambda.involution() == *lambda,
        trace_nonzero: !trace.is_zero(),
        trace,
    }
}

/// The presentation matrix (P 0; 0 λ) of the module extended by Λ/(λ).
pub fn levine_extend(a: &AlexanderMatrix, lambda: &LaurentPoly) -> Result<AlexanderMatrix> {
    let h = check_levine_hypotheses(lambda);
    match (h.is_symmetric, h.trace_nonzero) {
        (true, true) => a.block_diagonal(lambda),
        (false, true) => Err(Error::HypothesisViolated(format!(
            "{lambda} is not symmetric"
        ))),
        (true, false) => Err(Error::HypothesisViolated(format!("{lambda} has trace 0"))),
        (false, false) => Err(Error::HypothesisViolated(format!(
            "{lambda} is not symmetric and has trace 0"
        ))),
    }
}

/// Verdict on whether a one-variable polynomial is the Alexander polynomial
/// of a closed 3-manifold with b₁ = 1.
#[derive(Clone, Debug)]
pub struct B1Characterization {
    pub realizable: bool,
    pub symmetry: SymmetryClass,
    pub trace: BigInt,
    /// (1 0; 0 u·λ) with u·λ symmetric; present when realizable.
    pub witness: Option<AlexanderMatrix>,
}

/// λ is realizable iff it is unit symmetric with nonzero trace. The witness
/// matrix extends the seed diag(1) (the presentation of ℤ, Δ = 1) by the
/// symmetrized λ.
pub fn characterize_b1_one(lambda: &LaurentPoly) -> Result<B1Characterization> {
    if lambda.arity() != 1 {
        return Err(Error::Precondition(format!(
            "expected a one-variable polynomial, got arity {}",
            lambda.arity()
        )));
    }
    let symmetry = lambda.classify_symmetry()?;
    let trace = lambda.trace();
    let realizable = symmetry.is_at_least(SymmetryKind::UnitSymmetric) && !trace.is_zero();
    let witness = if realizable {
        let u = symmetry
            .witness
            .as_ref()
            .expect("unit symmetric has a witness");
        let symmetric = lambda.mul_unit(u);
        let seed = AlexanderMatrix::diagonal(1, vec![LaurentPoly::one(1)])?;
        Some(levine_extend(&seed, &symmetric)?)
    } else {
        None
    };
    Ok(B1Characterization {
        realizable,
        symmetry,
        trace,
        witness,
    })
}

/// True iff Δ is at least mod unit symmetric.
pub fn check_blanchfield(delta: &AlexanderPolynomial) -> Result<bool> {
    Ok(delta
        .poly()
        .classify_symmetry()?
        .is_at_least(SymmetryKind::ModUnitSymmetric))
}

/// |Δ(1)|, which for b₁ = 1 is the order of the torsion of H₁.
pub fn torsion_order_b1_one(delta: &AlexanderPolynomial) -> Result<BigInt> {
    if delta.arity() != 1 {
        return Err(Error::Precondition(format!(
            "expected a one-variable polynomial, got arity {}",
            delta.arity()
        )));
    }
    Ok(delta.poly().trace().abs())
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct ReportChecks {
    pub delta_nonzero: bool,
    /// Δ is at least mod unit symmetric (skipped for Δ = 0).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mod_unit_symmetric: Option<bool>,
    /// b₁ = 1 only: |Δ(1)| equals the torsion order from the Smith form.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion_matches_trace: Option<bool>,
    /// b₁ = 1 only: Δ is unit symmetric.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit_symmetric: Option<bool>,
    /// b₁ = 1 only: the degree span of Δ is even.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub even_degree: Option<bool>,
}

/// Everything computed for one presentation. Serializes to the stable JSON
/// object emitted by `compute`.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub b1: usize,
    #[serde(serialize_with = "json::big_ints")]
    pub torsion: Vec<BigInt>,
    #[serde(serialize_with = "json::big_int")]
    pub torsion_order: BigInt,
    pub delta: LaurentPoly,
    pub convention: Convention,
    pub normalized: bool,
    pub symmetry: String,
    #[serde(serialize_with = "json::big_int")]
    pub trace: BigInt,
    pub checks: ReportChecks,
    #[serde(skip)]
    pub symmetry_class: Option<SymmetryClass>,
}

impl InvariantReport {
    /// True when every recorded check passed.
    pub fn all_checks_pass(&self) -> bool {
        let c = &self.checks;
        [
            c.mod_unit_symmetric,
            c.torsion_matches_trace,
            c.unit_symmetric,
            c.even_degree,
        ]
        .iter()
        .all(|x| x.unwrap_or(true))
    }
}

pub fn full_report(p: &Presentation) -> Result<InvariantReport> {
    let ab = abelianize(p);
    if ab.rank == 0 {
        return Err(Error::Precondition("first Betti number is 0".into()));
    }
    let delta = alexander_polynomial(p)?;
    let torsion_order = ab.torsion_order();
    let mut checks = ReportChecks {
        delta_nonzero: !delta.poly().is_zero(),
        ..Default::default()
    };
    let (symmetry_class, symmetry, trace) = if delta.poly().is_zero() {
        (None, "Undefined".to_string(), BigInt::zero())
    } else {
        let class = delta.poly().classify_symmetry()?;
        checks.mod_unit_symmetric = Some(class.is_at_least(SymmetryKind::ModUnitSymmetric));
        if ab.rank == 1 {
            checks.torsion_matches_trace = Some(torsion_order_b1_one(&delta)? == torsion_order);
            checks.unit_symmetric = Some(class.is_at_least(SymmetryKind::UnitSymmetric));
            checks.even_degree = Some(delta.poly().total_degree_span() % 2 == 0);
        }
        let s = class.kind.to_string();
        (Some(class), s, delta.poly().trace())
    };
    Ok(InvariantReport {
        b1: ab.rank,
        torsion: ab.torsion,
        torsion_order,
        delta: delta.poly().clone(),
        convention: delta.convention(),
        normalized: true,
        symmetry,
        trace,
        checks,
        symmetry_class,
    })
}
