//! Fillings of composition diagrams.
//!
//! Diagrams are drawn in French notation: row 1 is the bottom row, rows are
//! left-justified, and row `i` has `α_i` boxes. A [`Tableau`] is always a
//! standard row-increasing filling (entries `1..=n`, each once, increasing
//! left to right along rows). Standard extended tableaux additionally have
//! columns increasing from bottom to top.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::composition::{Composition, DescentSubset};
use crate::error::{Error, Result};

/// A box of a diagram, 1-based. Row 1 is the bottom row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// Partial sums of row sums, bottom row first: entry `j` is the sum of all
/// entries in rows `1..=j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RowSumVector(pub Vec<usize>);

impl RowSumVector {
    /// True iff every entry of `self` is at least the matching entry of
    /// `other`.
    pub fn dominates(&self, other: &RowSumVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

/// A standard row-increasing tableau.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    shape: Composition,
    /// Bottom row first.
    rows: Vec<Vec<usize>>,
    /// `cells[v - 1]` is the box holding `v`.
    cells: Vec<Cell>,
}

impl Tableau {
    /// Builds a tableau from its rows, bottom row first.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        let shape = Composition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.weight();
        let mut cells = vec![None; n];
        for (r, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} is not increasing",
                    r + 1
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(Error::InvalidTableau(format!("entry {v} outside 1..={n}")));
                }
                if cells[v - 1]
                    .replace(Cell {
                        row: r + 1,
                        col: c + 1,
                    })
                    .is_some()
                {
                    return Err(Error::InvalidTableau(format!("entry {v} repeated")));
                }
            }
        }
        // n distinct entries in 1..=n, so every slot is filled.
        let cells = cells.into_iter().map(Option::unwrap).collect();
        Ok(Tableau { shape, rows, cells })
    }

    /// Builds a tableau from its rows and checks it has the given shape.
    pub fn with_shape(shape: &Composition, rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau::from_rows(rows)?;
        if &t.shape != shape {
            return Err(Error::ShapeMismatch {
                left: shape.to_string(),
                right: t.shape.to_string(),
            });
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    /// Rows, bottom row first.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.cells.len()
    }

    /// The box containing `v`.
    ///
    /// # Panics
    ///
    /// If `v` is not in `1..=n`.
    pub fn cell_of(&self, v: usize) -> Cell {
        self.cells[v - 1]
    }

    pub fn entry(&self, cell: Cell) -> Option<usize> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    /// Concatenation of the rows, bottom row first.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.concat()
    }

    /// Entries of column `col` (1-based), bottom to top.
    pub fn column(&self, col: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows
            .iter()
            .filter_map(move |r| r.get(col.wrapping_sub(1)).copied())
    }

    /// True iff every column strictly increases from bottom to top.
    pub fn is_standard_extended(&self) -> bool {
        let width = self.shape.parts().iter().copied().max().unwrap_or(0);
        (1..=width).all(|c| {
            let col: Vec<usize> = self.column(c).collect();
            col.windows(2).all(|w| w[0] < w[1])
        })
    }

    /// The descent set: `i` is a descent iff `i` lies weakly right of `i+1`.
    pub fn descents(&self) -> DescentSubset {
        let members = (1..self.n())
            .filter(|&i| self.cell_of(i).col >= self.cell_of(i + 1).col)
            .collect();
        DescentSubset::new(self.n(), members).expect("descents lie in [n-1]")
    }

    pub fn descent_composition(&self) -> Composition {
        self.descents().composition()
    }

    pub fn row_sum_vector(&self) -> RowSumVector {
        let mut acc = 0;
        RowSumVector(
            self.rows
                .iter()
                .map(|r| {
                    acc += r.iter().sum::<usize>();
                    acc
                })
                .collect(),
        )
    }

    /// `s_i(T)`: exchange the entries `i` and `i + 1`.
    ///
    /// The caller guarantees `i` and `i + 1` are in different rows, so the
    /// result is again row-increasing.
    pub(crate) fn swapped(&self, i: usize) -> Tableau {
        let a = self.cell_of(i);
        let b = self.cell_of(i + 1);
        debug_assert_ne!(a.row, b.row);
        let mut rows = self.rows.clone();
        rows[a.row - 1][a.col - 1] = i + 1;
        rows[b.row - 1][b.col - 1] = i;
        let mut cells = self.cells.clone();
        cells.swap(i - 1, i);
        Tableau {
            shape: self.shape.clone(),
            rows,
            cells,
        }
    }

    /// Multi-line rendering, top row first.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

/// Rows from top to bottom, entries space-separated, one row per line.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().rev().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            let line: Vec<String> = row.iter().map(usize::to_string).collect();
            f.write_str(&line.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|tok| {
                        tok.parse::<usize>()
                            .map_err(|_| Error::InvalidTableau(format!("bad entry {tok:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        rows.reverse();
        Tableau::from_rows(rows)
    }
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    shape: Composition,
    rows: Vec<Vec<usize>>,
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr {
            shape: t.shape,
            rows: t.rows,
        }
    }
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;

    fn try_from(r: TableauRepr) -> Result<Self> {
        Tableau::with_shape(&r.shape, r.rows)
    }
}

/// The super-standard tableau: row `i` holds the `α_i` integers following
/// `α_1 + ... + α_{i-1}`.
pub fn super_standard(alpha: &Composition) -> Tableau {
    let mut next = 1;
    let rows = alpha
        .parts()
        .iter()
        .map(|&p| {
            let row: Vec<usize> = (next..next + p).collect();
            next += p;
            row
        })
        .collect();
    Tableau::from_rows(rows).expect("super-standard filling is row-increasing")
}

/// All standard row-increasing tableaux of shape `alpha`, ordered
/// lexicographically by reading word.
pub fn enumerate_srit(alpha: &Composition) -> Vec<Tableau> {
    fn go(parts: &[usize], avail: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        let Some((&k, rest)) = parts.split_first() else {
            out.push(Tableau::from_rows(rows.clone()).expect("valid filling"));
            return;
        };
        for_each_combination(avail, k, &mut |chosen| {
            let remaining: Vec<usize> = avail
                .iter()
                .copied()
                .filter(|v| chosen.binary_search(v).is_err())
                .collect();
            rows.push(chosen.to_vec());
            go(rest, &remaining, rows, out);
            rows.pop();
        });
    }
    let avail: Vec<usize> = (1..=alpha.weight()).collect();
    let mut out = Vec::new();
    go(alpha.parts(), &avail, &mut Vec::new(), &mut out);
    out
}

/// Visits the `k`-subsets of the sorted slice `items` in lexicographic order.
fn for_each_combination(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(
        items: &[usize],
        start: usize,
        k: usize,
        buf: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if buf.len() == k {
            f(buf);
            return;
        }
        let need = k - buf.len();
        if items.len() < start + need {
            return;
        }
        for idx in start..=items.len() - need {
            buf.push(items[idx]);
            go(items, idx + 1, k, buf, f);
            buf.pop();
        }
    }
    go(items, 0, k, &mut Vec::with_capacity(k), f);
}

/// All standard extended tableaux of shape `alpha`, ordered
/// lexicographically by reading word.
pub fn enumerate_set(alpha: &Composition) -> Vec<Tableau> {
    // Place 1, 2, ..., n in turn. The next value may go at the end of row r
    // provided every box below it in the same column is already filled.
    fn go(parts: &[usize], v: usize, n: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if v > n {
            out.push(Tableau::from_rows(rows.clone()).expect("valid filling"));
            return;
        }
        for r in 0..parts.len() {
            let c = rows[r].len();
            if c == parts[r] {
                continue;
            }
            let supported = (0..r).all(|below| parts[below] <= c || rows[below].len() > c);
            if supported {
                rows[r].push(v);
                go(parts, v + 1, n, rows, out);
                rows[r].pop();
            }
        }
    }
    let parts = alpha.parts();
    let mut rows = vec![Vec::new(); parts.len()];
    let mut out = Vec::new();
    go(parts, 1, alpha.weight(), &mut rows, &mut out);
    out.sort();
    out
}

pub fn is_standard_extended(t: &Tableau) -> bool {
    t.is_standard_extended()
}

pub fn descent_composition(t: &Tableau) -> Composition {
    t.descent_composition()
}

pub fn row_sum_vector(t: &Tableau) -> RowSumVector {
    t.row_sum_vector()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::compositions_of;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    // The three standard extended tableaux of shape (2,1,3), bottom row first.
    fn t1() -> Tableau {
        t(&[&[1, 2], &[3], &[4, 5, 6]])
    }
    fn t2() -> Tableau {
        t(&[&[1, 3], &[2], &[4, 5, 6]])
    }
    fn t3() -> Tableau {
        t(&[&[1, 4], &[2], &[3, 5, 6]])
    }

    #[test]
    fn rejects_bad_fillings() {
        assert!(Tableau::from_rows(vec![vec![2, 1]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1, 1]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1, 3]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1], vec![]]).is_err());
        assert!(Tableau::with_shape(&c(&[1, 1]), vec![vec![1, 2]]).is_err());
    }

    #[test]
    fn srit_examples() {
        assert_eq!(enumerate_srit(&c(&[1, 1])).len(), 2);
        assert_eq!(enumerate_srit(&c(&[2])), vec![t(&[&[1, 2]])]);
        let all = enumerate_srit(&c(&[2, 2]));
        assert_eq!(all.len(), 6);
        assert!(all
            .windows(2)
            .all(|w| w[0].reading_word() < w[1].reading_word()));
    }

    #[test]
    fn srit_22_matches_brute_force() {
        let mut brute = Vec::new();
        for perm in permutations(4) {
            let rows = vec![perm[0..2].to_vec(), perm[2..4].to_vec()];
            if let Ok(t) = Tableau::from_rows(rows) {
                brute.push(t);
            }
        }
        brute.sort();
        assert_eq!(brute.len(), 6);
        assert_eq!(enumerate_srit(&c(&[2, 2])), brute);
    }

    #[test]
    fn set_examples() {
        assert_eq!(enumerate_set(&c(&[2, 1, 3])), vec![t1(), t2(), t3()]);
        assert_eq!(enumerate_set(&c(&[1, 1, 1])), vec![t(&[&[1], &[2], &[3]])]);
        assert_eq!(enumerate_set(&c(&[1, 2])), vec![t(&[&[1], &[2, 3]])]);
        assert_eq!(enumerate_set(&Composition::empty()).len(), 1);
    }

    #[test]
    fn gapped_columns_count() {
        // Column 2 of shape (2,1,2) has boxes in rows 1 and 3 only.
        let good = t(&[&[1, 4], &[2], &[3, 5]]);
        assert!(good.is_standard_extended());
        let bad = t(&[&[1, 5], &[2], &[3, 4]]);
        assert!(!bad.is_standard_extended());
    }

    #[test]
    fn standard_extended_examples() {
        assert!(t1().is_standard_extended());
        assert!(!t(&[&[2], &[1]]).is_standard_extended());
        assert!(t(&[&[1, 2, 3, 4]]).is_standard_extended());
    }

    #[test]
    fn descent_examples() {
        assert_eq!(t1().descent_composition(), c(&[2, 1, 3]));
        assert_eq!(t2().descent_composition(), c(&[1, 2, 3]));
        assert_eq!(t3().descent_composition(), c(&[1, 1, 2, 2]));
        assert_eq!(t1().descents().members(), &[2, 3]);
        assert_eq!(t2().descents().members(), &[1, 3]);
        assert_eq!(t3().descents().members(), &[1, 2, 4]);
    }

    #[test]
    fn super_standard_examples() {
        assert_eq!(super_standard(&c(&[2, 1, 3])), t1());
        assert_eq!(super_standard(&c(&[4])), t(&[&[1, 2, 3, 4]]));
        assert_eq!(super_standard(&c(&[1, 1, 1])), t(&[&[1], &[2], &[3]]));
    }

    #[test]
    fn row_sum_examples() {
        assert_eq!(t1().row_sum_vector().0, vec![3, 6, 21]);
        assert_eq!(t3().row_sum_vector().0, vec![5, 7, 21]);
        assert_eq!(t(&[&[1, 2, 3, 4, 5]]).row_sum_vector().0, vec![15]);
    }

    #[test]
    fn text_round_trip() {
        let text = t1().to_string();
        assert_eq!(text, "4 5 6\n3\n1 2");
        assert_eq!(text.parse::<Tableau>().unwrap(), t1());
    }

    #[test]
    fn json_form_is_bottom_up() {
        let json = serde_json::to_string(&t1()).unwrap();
        assert_eq!(json, r#"{"shape":[2,1,3],"rows":[[1,2],[3],[4,5,6]]}"#);
        let back: Tableau = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t1());
        assert!(serde_json::from_str::<Tableau>(r#"{"shape":[3],"rows":[[1,2]]}"#).is_err());
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        heap(n, &mut cur, &mut out);
        out
    }

    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, cur, out);
            if k.is_multiple_of(2) {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
        heap(k - 1, cur, out);
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    // Brute force over all n! fillings of the diagram.
    fn brute_srit(alpha: &Composition) -> Vec<Tableau> {
        let mut out: Vec<Tableau> = permutations(alpha.weight())
            .into_iter()
            .filter_map(|p| {
                let mut rows = Vec::new();
                let mut at = 0;
                for &len in alpha.parts() {
                    rows.push(p[at..at + len].to_vec());
                    at += len;
                }
                Tableau::from_rows(rows).ok()
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn srit_counts_match_multinomial_and_brute_force() {
        for n in 0..=7 {
            for alpha in compositions_of(n) {
                let srit = enumerate_srit(&alpha);
                let multinomial = factorial(n)
                    / alpha
                        .parts()
                        .iter()
                        .map(|&p| factorial(p))
                        .product::<usize>();
                assert_eq!(srit.len(), multinomial, "{alpha}");
                if n <= 6 {
                    assert_eq!(srit, brute_srit(&alpha), "{alpha}");
                }
            }
        }
    }

    #[test]
    fn set_is_the_column_strict_part_of_srit() {
        for n in 0..=7 {
            for alpha in compositions_of(n) {
                let filtered: Vec<Tableau> = enumerate_srit(&alpha)
                    .into_iter()
                    .filter(Tableau::is_standard_extended)
                    .collect();
                assert_eq!(enumerate_set(&alpha), filtered, "{alpha}");
            }
        }
    }

    #[test]
    fn super_standard_descents() {
        for n in 0..=8 {
            for alpha in compositions_of(n) {
                let sup = super_standard(&alpha);
                assert!(sup.is_standard_extended());
                assert_eq!(sup.descent_composition(), alpha);
            }
        }
    }

    #[test]
    fn descent_compositions_have_weight_n() {
        for n in 0..=7 {
            for alpha in compositions_of(n) {
                for t in enumerate_set(&alpha) {
                    assert_eq!(t.descent_composition().weight(), n);
                }
            }
        }
    }

    #[test]
    fn row_sums_are_monotone_and_total() {
        for alpha in compositions_of(5) {
            for t in enumerate_srit(&alpha) {
                let d = t.row_sum_vector().0;
                assert!(d.windows(2).all(|w| w[0] <= w[1]));
                assert_eq!(*d.last().unwrap(), 15);
            }
        }
    }
}
