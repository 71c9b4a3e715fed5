//! Seeded verification suites, one per theorem, over the corpus and random
//! instances. Inputs are generated sequentially from the seed, then checked
//! in parallel; reports keep case order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::alexander::{
    alexander_polynomial, characterize_b1_one, levine_extend, order_zero_direct, AlexanderMatrix,
};
use crate::corpus::{self, CorpusEntry};
use crate::covers::{
    b1_ge_4_consistency, cover_homology, hironaka_predicted_betti, mod_p_betti, mod_p_cover,
    reidemeister_schreier, shalen_wagreich_check, verify_torsion_cover_formula, TorsionCoverStatus,
    DEFAULT_MAX_INDEX,
};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, SymmetryKind};
use crate::par;
use crate::presentation::{abelianize, Presentation};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Theorem {
    Levine,
    Blanchfield,
    B1OneCharacterization,
    TorsionCover,
    ShalenWagreich,
    Hironaka,
    B1Ge4,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::Levine,
        Theorem::Blanchfield,
        Theorem::B1OneCharacterization,
        Theorem::TorsionCover,
        Theorem::ShalenWagreich,
        Theorem::Hironaka,
        Theorem::B1Ge4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Levine => "levine",
            Theorem::Blanchfield => "blanchfield",
            Theorem::B1OneCharacterization => "b1-one-characterization",
            Theorem::TorsionCover => "torsion-cover",
            Theorem::ShalenWagreich => "shalen-wagreich",
            Theorem::Hironaka => "hironaka",
            Theorem::B1Ge4 => "b1-ge-4",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown theorem '{s}'")))
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerifyOptions {
    pub seed: u64,
    pub cases: usize,
    /// A corpus name or "all"; None means the suite's default.
    pub corpus: Option<String>,
    pub primes: Option<Vec<u64>>,
    pub max_index: u64,
    /// Cap on the degree span of randomly generated polynomials.
    pub max_degree: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            cases: 50,
            corpus: None,
            primes: None,
            max_index: DEFAULT_MAX_INDEX,
            max_degree: 12,
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CaseReport {
    pub theorem: &'static str,
    pub inputs: Value,
    pub lhs: Value,
    pub rhs: Value,
    pub status: String,
    #[serde(skip)]
    pub pass: bool,
}

impl CaseReport {
    fn new(
        theorem: Theorem,
        inputs: Value,
        lhs: Value,
        rhs: Value,
        status: &str,
        pass: bool,
    ) -> Self {
        Self {
            theorem: theorem.name(),
            inputs,
            lhs,
            rhs,
            status: status.into(),
            pass,
        }
    }
}

/// For a single case, lhs/rhs/status are that case's; otherwise lhs counts
/// passing cases and rhs counts all cases.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct SuiteReport {
    pub theorem: &'static str,
    pub inputs: Value,
    pub lhs: Value,
    pub rhs: Value,
    pub status: String,
    pub cases: Vec<CaseReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CaseReport>,
}

impl SuiteReport {
    fn from_cases(theorem: Theorem, opts: &VerifyOptions, cases: Vec<CaseReport>) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        let counterexample = cases.iter().find(|c| !c.pass).cloned();
        let (lhs, rhs, status) = match cases.as_slice() {
            [one] => (one.lhs.clone(), one.rhs.clone(), one.status.clone()),
            _ => (
                json!(passed),
                json!(cases.len()),
                if counterexample.is_none() {
                    "all_pass"
                } else {
                    "failed"
                }
                .to_string(),
            ),
        };
        Self {
            theorem: theorem.name(),
            inputs: serde_json::to_value(opts).expect("options serialize"),
            lhs,
            rhs,
            status,
            cases,
            counterexample,
        }
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

pub fn run(theorem: Theorem, opts: &VerifyOptions) -> Result<SuiteReport> {
    let cases = match theorem {
        Theorem::Levine => levine_suite(opts)?,
        Theorem::Blanchfield => blanchfield_suite(opts)?,
        Theorem::B1OneCharacterization => b1_one_suite(opts)?,
        Theorem::TorsionCover => torsion_cover_suite(opts)?,
        Theorem::ShalenWagreich => shalen_wagreich_suite(opts)?,
        Theorem::Hironaka => hironaka_suite(opts)?,
        Theorem::B1Ge4 => b1_ge_4_suite(opts)?,
    };
    Ok(SuiteReport::from_cases(theorem, opts, cases))
}

/// The selected corpus members; an explicit name that does not exist is an
/// error.
fn selected(opts: &VerifyOptions) -> Result<Vec<CorpusEntry>> {
    match opts.corpus.as_deref() {
        None | Some("all") => Ok(corpus::list()),
        Some(name) => corpus::by_name(name)
            .map(|e| vec![e])
            .ok_or_else(|| Error::Invalid(format!("unknown corpus entry '{name}'"))),
    }
}

fn named(opts: &VerifyOptions) -> bool {
    opts.corpus.as_deref().is_some_and(|c| c != "all")
}

fn rng(opts: &VerifyOptions) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(opts.seed)
}

fn coeff(rng: &mut ChaCha8Rng) -> i64 {
    loop {
        let c = rng.gen_range(-3..=3);
        if c != 0 {
            return c;
        }
    }
}

/// Random polynomial with exponents in [lo, hi]^arity and up to `terms` terms.
pub fn random_poly(
    rng: &mut ChaCha8Rng,
    arity: usize,
    lo: i64,
    hi: i64,
    terms: usize,
) -> LaurentPoly {
    let mut f = LaurentPoly::zero(arity);
    for _ in 0..rng.gen_range(1..=terms) {
        let e: Vec<i64> = (0..arity).map(|_| rng.gen_range(lo..=hi)).collect();
        f.add_term(e, BigInt::from(coeff(rng)));
    }
    f
}

/// Random λ with ι(λ) = λ, exponents in [−half, half]^arity and λ(1) ≠ 0.
pub fn random_symmetric(rng: &mut ChaCha8Rng, arity: usize, half: i64) -> LaurentPoly {
    loop {
        let g = random_poly(rng, arity, -half, half, 3);
        let f = &g + &g.involution();
        if !f.trace().is_zero() {
            return f;
        }
    }
}

/// c₀ + Σ c_k (t^k + t^{−k}) for k ≤ half.
fn palindrome(rng: &mut ChaCha8Rng, half: i64, zero_trace: bool) -> LaurentPoly {
    loop {
        let d = rng.gen_range(0..=half);
        let mut f = LaurentPoly::zero(1);
        let mut wings = 0i64;
        for k in 1..=d {
            let c = rng.gen_range(-3..=3);
            wings += c;
            f.add_term(vec![k], BigInt::from(c));
            f.add_term(vec![-k], BigInt::from(c));
        }
        let c0 = if zero_trace {
            -2 * wings
        } else {
            rng.gen_range(-5..=5)
        };
        f.add_term(vec![0], BigInt::from(c0));
        if !f.is_zero() && f.trace().is_zero() == zero_trace {
            return f;
        }
    }
}

fn random_unit(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    LaurentPoly::monomial(vec![rng.gen_range(-3..=3)], BigInt::from(sign))
}

/// Random A ∈ SL₂(ℤ) with det(A − I) ≠ 0, as a product of elementary
/// matrices. Determinant −1 would give a non-orientable mapping torus.
pub fn random_monodromy(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    loop {
        let mut a = [[1i64, 0], [0, 1]];
        for _ in 0..rng.gen_range(1..=4) {
            let k = rng.gen_range(-2..=2);
            a = if rng.gen_bool(0.5) {
                [[a[0][0] + k * a[1][0], a[0][1] + k * a[1][1]], a[1]]
            } else {
                [a[0], [a[1][0] + k * a[0][0], a[1][1] + k * a[0][1]]]
            };
        }
        let det_a_minus_i = (a[0][0] - 1) * (a[1][1] - 1) - a[0][1] * a[1][0];
        if det_a_minus_i != 0 {
            return a.iter().map(|r| r.to_vec()).collect();
        }
    }
}

fn levine_suite(opts: &VerifyOptions) -> Result<Vec<CaseReport>> {
    let mut rng = rng(opts);
    let half = i64::from(opts.max_degree.min(4) / 2);
    let mut inputs: Vec<(String, AlexanderMatrix, LaurentPoly)> = Vec::new();
    if opts.corpus.is_some() {
        for e in selected(opts)? {
            let Ok(fox) = crate::presentation::fox_matrix(&e.presentation) else {
                continue;
            };
            let lambda = random_symmetric(&mut rng, fox.arity(), half);
            inputs.push((e.name.to_string(), fox, lambda));
        }
    } else {
        for i in 0..opts.cases {
            let arity = rng.gen_range(1..=3);
            let size = rng.gen_range(1..=2);
            let rows = (0..size)
                .map(|_| {
                    (0..size)
                        .map(|_| random_poly(&mut rng, arity, -1, 1, 3))
                        .collect()
                })
                .collect();
            let p = AlexanderMatrix::from_rows(arity, size, rows)?;
            let lambda = random_symmetric(&mut rng, arity, half);
            inputs.push((format!("case {i}"), p, lambda));
        }
    }
    let fox_mode = opts.corpus.is_some();
    par::map(&inputs, |(label, p, lambda)| -> Result<CaseReport> {
        let extended = levine_extend(p, lambda)?;
        let (before, after) = if fox_mode {
            let k = p.cols() - 1;
            (p.minors_gcd(k), extended.minors_gcd(k + 1))
        } else {
            (
                order_zero_direct(p).poly().clone(),
                order_zero_direct(&extended).poly().clone(),
            )
        };
        let expected = (lambda * &before).normalize();
        let ok = after == expected;
        Ok(CaseReport::new(
            Theorem::Levine,
            json!({"input": label, "lambda": lambda.to_string(), "delta": before.to_string()}),
            json!(after.to_string()),
            json!(expected.to_string()),
            if ok { "equal" } else { "unequal" },
            ok,
        ))
    })
    .into_iter()
    .collect()
}

fn blanchfield_case(label: &str, p: &Presentation) -> Result<Option<CaseReport>> {
    let b1 = abelianize(p).rank;
    if b1 == 0 {
        return Ok(None);
    }
    let delta = alexander_polynomial(p)?;
    let f = delta.poly();
    if f.is_zero() {
        return Ok(None);
    }
    let class = f.classify_symmetry()?;
    let mut ok = class.is_at_least(SymmetryKind::ModUnitSymmetric);
    let strong = b1 == 1 && !f.trace().is_zero();
    if strong {
        ok &= class.is_at_least(SymmetryKind::UnitSymmetric) && f.total_degree_span() % 2 == 0;
    }
    let required = if strong {
        "UnitSymmetric"
    } else {
        "ModUnitSymmetric"
    };
    Ok(Some(CaseReport::new(
        Theorem::Blanchfield,
        json!({"input": label, "delta": f.to_string(), "b1": b1}),
        json!(class.kind.to_string()),
        json!(required),
        if ok { "holds" } else { "violated" },
        ok,
    )))
}

fn blanchfield_suite(opts: &VerifyOptions) -> Result<Vec<CaseReport>> {
    let mut inputs: Vec<(String, Presentation)> = selected(opts)?
        .into_iter()
        .map(|e| (e.name.to_string(), e.presentation))
        .collect();
    if opts.corpus.is_none() {
        let mut rng = rng(opts);
        for _ in 0..opts.cases {
            let a = random_monodromy(&mut rng);
            inputs.push((format!("mapping torus {a:?}"), corpus::mapping_torus(&a)?));
        }
    }
    let reports: Vec<Option<CaseReport>> = par::map(&inputs, |(l, p)| blanchfield_case(l, p))
        .into_iter()
        .collect::<Result<_>>()?;
    Ok(reports.into_iter().flatten().collect())
}

fn b1_one_suite(opts: &VerifyOptions) -> Result<Vec<CaseReport>> {
    let mut rng = rng(opts);
    let half = i64::from(opts.max_degree / 2).max(1);
    let mut inputs: Vec<(LaurentPoly, bool)> = Vec::new();
    for _ in 0..opts.cases {
        let f = palindrome(&mut rng, half, false) * random_unit(&mut rng);
        inputs.push((f, true));
    }
    for i in 0..opts.cases {
        let f = match i % 3 {
            0 => palindrome(&mut rng, half, true) * random_unit(&mut rng),
            1 => {
                &palindrome(&mut rng, half.max(2) - 1, false) * &LaurentPoly::from_coeffs(&[-1, 1])
            }
            _ => loop {
                let f = random_poly(&mut rng, 1, 0, i64::from(opts.max_degree.max(1)), 4);
                let unit = f
                    .classify_symmetry()?
                    .is_at_least(SymmetryKind::UnitSymmetric);
                if !f.is_zero() && !unit {
                    break f;
                }
            },
        };
        inputs.push((f, false));
    }
    par::map(&inputs, |(f, realizable)| -> Result<CaseReport> {
        let c = characterize_b1_one(f)?;
        let recovered = c.witness.as_ref().map(|w| order_zero_direct(w).poly().clone());
        let ok = c.realizable == *realizable
            && recovered.as_ref().is_none_or(|r| *r == f.normalize());
        Ok(CaseReport::new(
            Theorem::B1OneCharacterization,
            json!({"polynomial": f.to_string(), "symmetry": c.symmetry.kind.to_string(), "trace": c.trace.to_string()}),
            json!({"realizable": c.realizable, "witness_order": recovered.map(|r| r.to_string())}),
            json!({"realizable": realizable, "normalized": f.normalize().to_string()}),
            if ok { "agrees" } else { "disagrees" },
            ok,
        ))
    })
    .into_iter()
    .collect()
}

fn torsion_cover_suite(opts: &VerifyOptions) -> Result<Vec<CaseReport>> {
    let mut jobs: Vec<(String, Presentation, Vec<u64>)> = Vec::new();
    for e in selected(opts)? {
        let b1 = abelianize(&e.presentation).rank;
        match &opts.primes {
            Some(primes) if named(opts) || primes.len() == b1 => {
                jobs.push((e.name.to_string(), e.presentation, primes.clone()))
            }
            Some(_) => {}
            None if b1 == 1 => {
                for p in [2, 3] {
                    jobs.push((e.name.to_string(), e.presentation.clone(), vec![p]));
                }
            }
            None => {}
        }
    }
    let mut out = Vec::new();
    for (name, p, primes) in jobs {
        let r = verify_torsion_cover_formula(&p, &primes, opts.max_index)?;
        let ok = r.status != TorsionCoverStatus::Unequal;
        let status = serde_json::to_value(r.status).expect("status serializes");
        out.push(CaseReport::new(
            Theorem::TorsionCover,
            json!({"input": name, "primes": primes, "delta": r.delta.to_string(), "cover_b1": r.cover_b1}),
            big(&r.lhs),
            big(&r.rhs),
            status.as_str().unwrap_or("unknown"),
            ok,
        ));
    }
    Ok(out)
}

fn big(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn primes_or(opts: &VerifyOptions, default: &[u64]) -> Vec<u64> {
    opts.primes.clone().unwrap_or_else(|| default.to_vec())
}

fn shalen_wagreich_suite(opts: &VerifyOptions) -> Result<Vec<CaseReport>> {
    let mut out = Vec::new();
    for e in selected(opts)? {
        for prime in primes_or(opts, &[2, 3]) {
            if mod_p_betti(&e.presentation, prime)? == 0 && !named(opts) {
                continue;
            }
            let r = shalen_wagreich_check(&e.presentation, prime, opts.max_index)?;
            let status = match (r.bound_satisfied, r.p_divides_torsion) {
                (true, false) => "bound_holds",
                (true, true) => "bound_holds_p_divides_torsion",
                (false, _) => "bound_violated",
            };
            out.push(CaseReport::new(
                Theorem::ShalenWagreich,
                json!({"input": e.name, "prime": prime, "r": r.r, "index": r.index}),
                json!(r.cover_dp),
                json!(r.bound),
                status,
                r.bound_satisfied,
            ));
        }
    }
    Ok(out)
}

fn hironaka_suite(opts: &VerifyOptions) -> Result<Vec<CaseReport>> {
    let mut jobs = Vec::new();
    if opts.corpus.is_none() && opts.primes.is_none() {
        for c in corpus::covers(opts.max_index)? {
            jobs.push((c.name.to_string(), c.prime, c.cover));
        }
    } else {
        for e in selected(opts)? {
            for prime in primes_or(opts, &[2, 3, 5]) {
                if mod_p_betti(&e.presentation, prime)? == 0 && !named(opts) {
                    continue;
                }
                let cm = mod_p_cover(&e.presentation, prime)?;
                let order = cm.deck().order().unwrap_or(u128::MAX);
                if order > u128::from(opts.max_index) {
                    return Err(Error::IndexLimit {
                        index: order,
                        limit: opts.max_index,
                    });
                }
                jobs.push((e.name.to_string(), prime, cm));
            }
        }
    }
    let mut out = Vec::new();
    for (name, prime, cm) in jobs {
        let h = hironaka_predicted_betti(cm.base(), &cm)?;
        let actual = cover_homology(&reidemeister_schreier(&cm)).rank;
        let ok = h.predicted == actual;
        out.push(CaseReport::new(
            Theorem::Hironaka,
            json!({"input": name, "prime": prime, "deck": cm.deck().primes(), "base_b1": h.base_b1, "v_counts": h.v_counts}),
            json!(h.predicted),
            json!(actual),
            if ok { "equal" } else { "unequal" },
            ok,
        ));
    }
    Ok(out)
}

fn b1_ge_4_suite(opts: &VerifyOptions) -> Result<Vec<CaseReport>> {
    let mut inputs: Vec<(String, Presentation)> = Vec::new();
    for e in selected(opts)? {
        if named(opts) || abelianize(&e.presentation).rank >= 4 {
            inputs.push((e.name.to_string(), e.presentation));
        }
    }
    if opts.corpus.is_none() {
        for k in 4..4 + opts.cases.min(5) {
            inputs.push((
                format!("free group of rank {k}"),
                corpus::connected_sum_s1s2(k)?,
            ));
        }
    }
    inputs
        .iter()
        .map(|(name, p)| {
            let r = b1_ge_4_consistency(p)?;
            Ok(CaseReport::new(
                Theorem::B1Ge4,
                json!({"input": name, "b1": r.b1, "binom": r.binom, "r_lt_binom": r.r_lt_binom}),
                json!(r.delta.to_string()),
                json!("not 1"),
                if r.consistent {
                    "consistent"
                } else {
                    "inconsistent"
                },
                r.consistent,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> VerifyOptions {
        VerifyOptions::default()
    }

    #[test]
    fn names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
        }
        assert!("nope".parse::<Theorem>().is_err());
    }

    #[test]
    fn every_suite_passes_by_default() {
        for t in Theorem::ALL {
            let r = run(t, &opts()).unwrap();
            assert!(r.passed(), "{t}: {:?}", r.counterexample);
            assert!(!r.cases.is_empty(), "{t}");
        }
    }

    #[test]
    fn torsion_cover_single_case() {
        let o = VerifyOptions {
            corpus: Some("mapping-torus-A".into()),
            primes: Some(vec![3]),
            ..opts()
        };
        let r = run(Theorem::TorsionCover, &o).unwrap();
        assert_eq!((r.lhs.clone(), r.rhs.clone()), (json!(50), json!(50)));
        assert_eq!(r.status, "equal");
    }

    #[test]
    fn reports_are_deterministic() {
        let o = VerifyOptions { seed: 7, ..opts() };
        let a = serde_json::to_string(&run(Theorem::Levine, &o).unwrap()).unwrap();
        let b = serde_json::to_string(&run(Theorem::Levine, &o).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn errors_surface() {
        let o = VerifyOptions {
            corpus: Some("t3".into()),
            primes: Some(vec![7]),
            ..opts()
        };
        assert!(matches!(
            run(Theorem::ShalenWagreich, &o),
            Err(Error::IndexLimit { .. })
        ));
        let o = VerifyOptions {
            corpus: Some("t3".into()),
            ..opts()
        };
        assert!(matches!(
            run(Theorem::B1Ge4, &o),
            Err(Error::Precondition(_))
        ));
        let o = VerifyOptions {
            corpus: Some("nope".into()),
            ..opts()
        };
        assert!(run(Theorem::Blanchfield, &o).is_err());
    }
}
