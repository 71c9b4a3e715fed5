use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::par;

/// A matrix over ℤ[t₁^±1,…,t_r^±1]; all entries share the arity r.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlexanderMatrix {
    arity: usize,
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl AlexanderMatrix {
    pub fn zeros(arity: usize, rows: usize, cols: usize) -> Self {
        Self {
            arity,
            rows,
            cols,
            entries: vec![LaurentPoly::zero(arity); rows * cols],
        }
    }

    pub fn from_rows(arity: usize, cols: usize, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Invalid("ragged matrix".into()));
            }
            for e in r {
                if e.arity() != arity {
                    return Err(Error::ArityMismatch {
                        left: arity,
                        right: e.arity(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(Self {
            arity,
            rows: nrows,
            cols,
            entries,
        })
    }

    pub fn diagonal(arity: usize, diag: Vec<LaurentPoly>) -> Result<Self> {
        let n = diag.len();
        let rows = diag
            .into_iter()
            .enumerate()
            .map(|(i, d)| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            d.clone()
                        } else {
                            LaurentPoly::zero(arity)
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(arity, n, rows)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// (self 0; 0 λ).
    pub fn block_diagonal(&self, lambda: &LaurentPoly) -> Result<Self> {
        if lambda.arity() != self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: lambda.arity(),
            });
        }
        let cols = self.cols + 1;
        let mut rows: Vec<Vec<LaurentPoly>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(LaurentPoly::zero(self.arity));
                r
            })
            .collect();
        let mut last = vec![LaurentPoly::zero(self.arity); self.cols];
        last.push(lambda.clone());
        rows.push(last);
        Self::from_rows(self.arity, cols, rows)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        Self {
            arity: self.arity,
            rows: rows.len(),
            cols: cols.len(),
            entries,
        }
    }

    /// Determinant by Bareiss elimination with exact division in the
    /// Laurent ring. The empty matrix has determinant 1.
    pub fn determinant(&self) -> LaurentPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return LaurentPoly::one(self.arity);
        }
        let mut m: Vec<Vec<LaurentPoly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one(self.arity);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return LaurentPoly::zero(self.arity);
                };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// All size×size minors, rows-major over index subsets. The 0×0 minor is
    /// 1; a size larger than either dimension yields no minors.
    pub fn minors(&self, size: usize) -> Vec<LaurentPoly> {
        if size > self.rows || size > self.cols {
            return Vec::new();
        }
        let row_sets: Vec<Vec<usize>> = (0..self.rows).combinations(size).collect();
        let col_sets: Vec<Vec<usize>> = (0..self.cols).combinations(size).collect();
        let pairs: Vec<(&Vec<usize>, &Vec<usize>)> =
            row_sets.iter().cartesian_product(col_sets.iter()).collect();
        par::map(&pairs, |(r, c)| self.submatrix(r, c).determinant())
    }

    /// GCD of all size×size minors, normalized; 0 when there are none.
    pub fn minors_gcd(&self, size: usize) -> LaurentPoly {
        let minors = self.minors(size);
        let nonzero: Vec<LaurentPoly> = minors.into_iter().filter(|m| !m.is_zero()).collect();
        let arity = self.arity;
        // gcd is commutative and associative up to units, and normalize is
        // canonical on unit orbits, so the reduction order is irrelevant
        par::reduce(
            nonzero,
            || LaurentPoly::zero(arity),
            |a, b| a.gcd(&b).expect("uniform arity"),
        )
        .normalize()
    }
}

impl fmt::Display for AlexanderMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", r.join(", "))?;
        }
        Ok(())
    }
}
