//! Exact integer linear algebra: dense matrices with Bareiss determinants,
//! and a sparse fraction-free nullspace solver.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix over the integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, BigInt::one());
        }
        m
    }

    /// # Panics
    ///
    /// If the rows have differing lengths.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().cloned().map(Into::into).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Determinant by Bareiss fraction-free elimination.
    ///
    /// # Panics
    ///
    /// If the matrix is not square.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| self.row(r).to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(BigInt::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A linear equation `Σ coeff · x_col = 0`, keyed by column.
pub type SparseRow = BTreeMap<usize, BigInt>;

fn normalize(row: &mut SparseRow) {
    row.retain(|_, v| !v.is_zero());
    let Some(g) = row.values().cloned().reduce(|a, b| a.gcd(&b)) else {
        return;
    };
    let lead_negative = row.values().next().is_some_and(Signed::is_negative);
    let g = if lead_negative { -g } else { g };
    if !g.is_one() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
}

/// `row ← lead(pivot) · row − row[col] · pivot`, clearing `row[col]`.
fn eliminate(row: &mut SparseRow, col: usize, pivot: &SparseRow) {
    let Some(factor) = row.get(&col).cloned() else {
        return;
    };
    let lead = &pivot[&col];
    if !lead.is_one() {
        for v in row.values_mut() {
            *v *= lead;
        }
    }
    for (&c, pv) in pivot {
        let entry = row.entry(c).or_insert_with(BigInt::zero);
        *entry -= &factor * pv;
    }
    normalize(row);
}

/// Basis of `{x : A x = 0}` for the sparse system `equations` in
/// `unknowns` variables, computed without fractions until the final
/// back-substitution.
///
/// Each basis vector has a 1 in exactly one free coordinate and 0 in the
/// other free coordinates. Its remaining nonzero entries sit at pivot
/// coordinates with smaller indices, so the free coordinate is the last
/// nonzero one.
pub fn nullspace(equations: &[SparseRow], unknowns: usize) -> Vec<Vec<BigRational>> {
    // Echelon form, keyed by leading column.
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for eq in equations {
        let mut row = eq.clone();
        normalize(&mut row);
        let mut cursor = 0;
        loop {
            let next = row
                .range(cursor..)
                .map(|(&c, _)| c)
                .find(|c| pivots.contains_key(c));
            let Some(col) = next else { break };
            eliminate(&mut row, col, &pivots[&col]);
            cursor = col + 1;
        }
        if let Some((&lead, _)) = row.iter().next() {
            assert!(lead < unknowns, "equation mentions unknown {lead}");
            pivots.insert(lead, row);
        }
    }

    // Reduce each pivot row against the pivots to its right.
    let leads: Vec<usize> = pivots.keys().rev().copied().collect();
    for &lead in &leads {
        let mut row = pivots.remove(&lead).expect("pivot present");
        let others: Vec<usize> = row
            .keys()
            .copied()
            .filter(|&c| c != lead && pivots.contains_key(&c))
            .collect();
        for col in others {
            eliminate(&mut row, col, &pivots[&col]);
        }
        pivots.insert(lead, row);
    }

    let free: Vec<usize> = (0..unknowns).filter(|c| !pivots.contains_key(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); unknowns];
            v[f] = BigRational::one();
            for (&lead, row) in &pivots {
                if let Some(coeff) = row.get(&f) {
                    v[lead] = -BigRational::new(coeff.clone(), row[&lead].clone());
                }
            }
            v
        })
        .collect()
}
