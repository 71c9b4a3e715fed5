//! Built-in example manifolds (as presentations of their fundamental groups)
//! and the parameterized families they come from.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use crate::alexander::full_report;
use crate::covers::{mod_p_betti, mod_p_cover, CoverMap};
use crate::error::{Error, Result};
use crate::presentation::{IntMatrix, Presentation, Word};

/// Where an expected value comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// Stated in the literature for this manifold.
    Literature,
    /// Worked out by hand (a short determinant or Smith form).
    HandComputed,
    /// Forced by the shape of the presentation.
    Structural,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Fragment {
    B1(usize),
    Torsion(Vec<u64>),
    Delta(String),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Expected {
    pub fragment: Fragment,
    pub source: Source,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub presentation: Presentation,
    pub expected: Vec<Expected>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct FragmentCheck {
    pub expected: Expected,
    pub actual: Fragment,
    pub ok: bool,
}

impl CorpusEntry {
    /// Recomputes every expected fragment.
    pub fn check(&self) -> Result<Vec<FragmentCheck>> {
        let report = full_report(&self.presentation)?;
        Ok(self
            .expected
            .iter()
            .map(|e| {
                let actual = match e.fragment {
                    Fragment::B1(_) => Fragment::B1(report.b1),
                    Fragment::Torsion(_) => Fragment::Torsion(
                        report
                            .torsion
                            .iter()
                            .map(|t| u64::try_from(t).unwrap_or(u64::MAX))
                            .collect(),
                    ),
                    Fragment::Delta(_) => Fragment::Delta(report.delta.to_string()),
                };
                FragmentCheck {
                    ok: actual == e.fragment,
                    expected: e.clone(),
                    actual,
                }
            })
            .collect())
    }
}

/// The generator-free product x₁^{v₁}⋯xₙ^{vₙ}.
fn abelian_word(v: &[i64]) -> Word {
    v.iter().enumerate().fold(Word::empty(), |w, (i, &e)| {
        w.concat(&Word::generator(i).pow(e))
    })
}

fn fiber_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// π₁ of the mapping torus of the torus map A: the fiber generators commute
/// and h xᵢ h⁻¹ is the image of xᵢ, read from row i of A.
pub fn mapping_torus(a: &[Vec<i64>]) -> Result<Presentation> {
    let n = a.len();
    if n == 0 || a.iter().any(|r| r.len() != n) {
        return Err(Error::Invalid(
            "monodromy must be a nonempty square matrix".into(),
        ));
    }
    let det = IntMatrix::from_rows(n, a).determinant();
    if det.abs() != BigInt::from(1) {
        return Err(Error::Precondition(format!(
            "monodromy has determinant {det}, not ±1"
        )));
    }
    let h = Word::generator(n);
    let mut relators = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            relators.push(Word::commutator(&Word::generator(i), &Word::generator(j)));
        }
    }
    for (i, row) in a.iter().enumerate() {
        let conj = h.concat(&Word::generator(i)).concat(&h.inverse());
        relators.push(conj.concat(&abelian_word(row).inverse()));
    }
    let mut names = fiber_names(n);
    names.push("h".into());
    Presentation::new(names, relators)
}

/// π₁ of #ₖ(S¹×S²), the free group of rank k.
pub fn connected_sum_s1s2(k: usize) -> Result<Presentation> {
    if k == 0 {
        return Err(Error::Precondition("need at least one summand".into()));
    }
    Presentation::with_indexed_names("x", k, Vec::new())
}

fn expect(fragment: Fragment, source: Source) -> Expected {
    Expected { fragment, source }
}

fn delta(s: &str) -> Fragment {
    Fragment::Delta(s.into())
}

fn entry(name: &'static str) -> Option<CorpusEntry> {
    use Fragment::{Torsion, B1};
    use Source::{HandComputed, Literature, Structural};
    let x = |i| Word::generator(i);
    let (description, presentation, expected) = match name {
        "s1xs2" => (
            "S^1 x S^2",
            Presentation::new(vec!["x".into()], vec![]).ok()?,
            vec![
                expect(B1(1), Literature),
                expect(delta("1"), Literature),
                expect(Torsion(vec![]), Structural),
            ],
        ),
        "heisenberg" => (
            "Heisenberg nilmanifold",
            Presentation::new(
                fiber_names(3),
                vec![
                    x(2).inverse().concat(&Word::commutator(&x(0), &x(1))),
                    Word::commutator(&x(0), &x(2)),
                    Word::commutator(&x(1), &x(2)),
                ],
            )
            .ok()?,
            vec![
                expect(B1(2), Literature),
                expect(delta("1"), Literature),
                expect(Torsion(vec![]), HandComputed),
            ],
        ),
        "t3" => (
            "3-torus",
            Presentation::new(
                fiber_names(3),
                vec![
                    Word::commutator(&x(0), &x(1)),
                    Word::commutator(&x(0), &x(2)),
                    Word::commutator(&x(1), &x(2)),
                ],
            )
            .ok()?,
            vec![
                expect(B1(3), Literature),
                expect(delta("1"), Literature),
                expect(Torsion(vec![]), Structural),
            ],
        ),
        "mapping-torus-A" => (
            "torus bundle with monodromy [[3,2],[1,1]]",
            mapping_torus(&[vec![3, 2], vec![1, 1]]).ok()?,
            vec![
                expect(B1(1), Literature),
                expect(delta("t^2 - 4*t + 1"), Literature),
                expect(Torsion(vec![2]), Literature),
            ],
        ),
        "mapping-torus-B" => (
            "torus bundle with monodromy [[2,1],[1,1]]",
            mapping_torus(&[vec![2, 1], vec![1, 1]]).ok()?,
            vec![
                expect(B1(1), HandComputed),
                expect(delta("t^2 - 3*t + 1"), HandComputed),
                expect(Torsion(vec![]), HandComputed),
            ],
        ),
        "connected-sum-2" | "connected-sum-4" | "connected-sum-5" => {
            let k = name.trim_start_matches("connected-sum-").parse().ok()?;
            (
                match k {
                    2 => "#2 S^1 x S^2",
                    4 => "#4 S^1 x S^2",
                    _ => "#5 S^1 x S^2",
                },
                connected_sum_s1s2(k).ok()?,
                vec![
                    expect(B1(k), Structural),
                    expect(delta("0"), Structural),
                    expect(Torsion(vec![]), Structural),
                ],
            )
        }
        _ => return None,
    };
    Some(CorpusEntry {
        name,
        description,
        presentation,
        expected,
    })
}

pub const NAMES: &[&str] = &[
    "s1xs2",
    "heisenberg",
    "t3",
    "mapping-torus-A",
    "mapping-torus-B",
    "connected-sum-2",
    "connected-sum-4",
    "connected-sum-5",
];

pub fn by_name(name: &str) -> Option<CorpusEntry> {
    NAMES.iter().find(|&&n| n == name).and_then(|&n| entry(n))
}

pub fn list() -> Vec<CorpusEntry> {
    NAMES.iter().filter_map(|&n| entry(n)).collect()
}

/// A mod-p cover of a corpus member.
#[derive(Clone, Debug)]
pub struct CorpusCover {
    pub name: &'static str,
    pub prime: u64,
    pub cover: CoverMap,
}

/// Mod-p covers of every member for p ∈ {2, 3, 5} with index at most
/// `max_index`.
pub fn covers(max_index: u64) -> Result<Vec<CorpusCover>> {
    let mut out = Vec::new();
    for e in list() {
        for prime in [2u64, 3, 5] {
            let d = mod_p_betti(&e.presentation, prime)?;
            let index = u32::try_from(d)
                .ok()
                .and_then(|d| prime.checked_pow(d))
                .unwrap_or(u64::MAX);
            if d == 0 || index > max_index {
                continue;
            }
            out.push(CorpusCover {
                name: e.name,
                prime,
                cover: mod_p_cover(&e.presentation, prime)?,
            });
        }
    }
    Ok(out)
}
