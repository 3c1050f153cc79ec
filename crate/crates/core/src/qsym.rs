//! Homogeneous quasisymmetric functions in the monomial and fundamental
//! bases, and the extended Schur functions.
//!
//! The fundamental function is `F_α = Σ_{β refines α} M_β`. The extended
//! Schur function is `E_α = Σ_{T ∈ SET(α)} F_{Des(T)}`, and its coefficient
//! matrix `K_{α,β} = #{T ∈ SET(α) : Des(T) = β}` is unitriangular up to
//! reordering, so the `E_α` form a basis. Columns of `K` are the expansion
//! coefficients of ribbon functions in the dual (shin) basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::composition::{compositions_of, Composition};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::tableau::enumerate_set;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Basis {
    #[serde(rename = "M")]
    Monomial,
    #[serde(rename = "F")]
    Fundamental,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Monomial => "M",
            Basis::Fundamental => "F",
        })
    }
}

/// A homogeneous quasisymmetric function written in one basis.
///
/// Zero coefficients are never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSymElement {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Composition, BigInt>,
}

impl QSymElement {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        QSymElement {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// `M_α` or `F_α`.
    pub fn basis_element(basis: Basis, alpha: &Composition) -> Self {
        let mut x = QSymElement::zero(alpha.weight(), basis);
        x.coeffs.insert(alpha.clone(), BigInt::one());
        x
    }

    pub fn from_terms<I, C>(degree: usize, basis: Basis, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Composition, C)>,
        C: Into<BigInt>,
    {
        let mut x = QSymElement::zero(degree, basis);
        for (alpha, c) in terms {
            x.add_term(&alpha, c.into())?;
        }
        Ok(x)
    }

    /// Adds `coeff` times the basis element indexed by `alpha`.
    pub fn add_term(&mut self, alpha: &Composition, coeff: BigInt) -> Result<()> {
        if alpha.weight() != self.degree {
            return Err(Error::DegreeMismatch {
                composition: alpha.to_string(),
                expected: self.degree,
                found: alpha.weight(),
            });
        }
        let entry = self
            .coeffs
            .entry(alpha.clone())
            .or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(alpha);
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coefficient(&self, alpha: &Composition) -> BigInt {
        self.coeffs.get(alpha).cloned().unwrap_or_default()
    }

    /// Nonzero terms, in lexicographic order of composition.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &BigInt)> {
        self.coeffs.iter()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    fn expect_basis(&self, expected: Basis) -> Result<()> {
        if self.basis != expected {
            return Err(Error::BasisMismatch {
                expected,
                found: self.basis,
            });
        }
        Ok(())
    }
}

/// `F(2,1,3) + 2 F(1,2,3) - F(1,1,2,2)`; the zero element prints as `0`.
impl fmt::Display for QSymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (alpha, c)) in self.coeffs.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            write!(f, "{}({alpha})", self.basis)?;
        }
        Ok(())
    }
}

/// Coefficients that fit in an `i64` serialize as JSON numbers, larger ones
/// as decimal strings.
fn coefficient_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

#[derive(Serialize)]
struct TermRepr<'a> {
    composition: &'a Composition,
    coefficient: serde_json::Value,
}

impl Serialize for QSymElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr<'_>> = self
            .coeffs
            .iter()
            .map(|(composition, c)| TermRepr {
                composition,
                coefficient: coefficient_json(c),
            })
            .collect();
        let mut st = s.serialize_struct("QSymElement", 3)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Rewrites an `F`-expansion in the monomial basis.
pub fn fundamental_to_monomial(x: &QSymElement) -> Result<QSymElement> {
    x.expect_basis(Basis::Fundamental)?;
    let mut out = QSymElement::zero(x.degree, Basis::Monomial);
    for (alpha, c) in x.terms() {
        for beta in alpha.refinements() {
            out.add_term(&beta, c.clone())?;
        }
    }
    Ok(out)
}

/// Rewrites an `M`-expansion in the fundamental basis.
///
/// `F_α` contains `M_α` once plus monomials of strictly greater length, so
/// peeling off the shortest remaining monomial term is a triangular solve.
pub fn monomial_to_fundamental(x: &QSymElement) -> Result<QSymElement> {
    x.expect_basis(Basis::Monomial)?;
    let mut residual = x.clone();
    let mut out = QSymElement::zero(x.degree, Basis::Fundamental);
    while let Some(alpha) = residual
        .coeffs
        .keys()
        .min_by_key(|a| (a.len(), (*a).clone()))
        .cloned()
    {
        let c = residual.coefficient(&alpha);
        for beta in alpha.refinements() {
            residual.add_term(&beta, -c.clone())?;
        }
        out.add_term(&alpha, c)?;
    }
    Ok(out)
}

/// The polynomial in `x_1, ..., x_k` obtained from an `M`-expansion, keyed
/// by exponent vector.
pub fn specialize(x: &QSymElement, k: usize) -> Result<BTreeMap<Vec<usize>, BigInt>> {
    x.expect_basis(Basis::Monomial)?;
    let mut out: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    for (alpha, c) in x.terms() {
        let len = alpha.len();
        if len > k {
            continue;
        }
        for_each_increasing(k, len, &mut |idx| {
            let mut exps = vec![0; k];
            for (&i, &a) in idx.iter().zip(alpha.parts()) {
                exps[i] = a;
            }
            *out.entry(exps).or_insert_with(BigInt::zero) += c;
        });
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Visits every strictly increasing `len`-tuple from `0..k`.
fn for_each_increasing(k: usize, len: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(k: usize, len: usize, start: usize, buf: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if buf.len() == len {
            f(buf);
            return;
        }
        for i in start..k {
            buf.push(i);
            go(k, len, i + 1, buf, f);
            buf.pop();
        }
    }
    go(k, len, 0, &mut Vec::with_capacity(len), f);
}

/// `E_α = Σ_{T ∈ SET(α)} F_{Des(T)}`.
pub fn extended_schur_in_fundamental(alpha: &Composition) -> QSymElement {
    let mut out = QSymElement::zero(alpha.weight(), Basis::Fundamental);
    for t in enumerate_set(alpha) {
        out.add_term(&t.descent_composition(), BigInt::one())
            .expect("descent compositions have weight n");
    }
    out
}

pub fn extended_schur_in_monomial(alpha: &Composition) -> QSymElement {
    fundamental_to_monomial(&extended_schur_in_fundamental(alpha))
        .expect("input is in the fundamental basis")
}

/// The Schur function `s_λ` in the fundamental basis, from standard Young
/// tableaux.
///
/// Tableaux are generated by growing the shape one box at a time
/// (Young's lattice) and `i` is a descent when `i + 1` lands in a strictly
/// higher row. This shares no code with the extended tableau machinery and
/// serves as a cross-check for it.
pub fn schur_in_fundamental(lambda: &Composition) -> Result<QSymElement> {
    if !lambda.is_partition() {
        return Err(Error::NotAPartition(lambda.to_string()));
    }
    let shape = lambda.parts();
    let n = lambda.weight();
    let mut out = QSymElement::zero(n, Basis::Fundamental);
    // row_of[v-1] is the row holding v.
    let mut row_of = Vec::with_capacity(n);
    let mut filled = vec![0; shape.len()];
    fn grow(
        shape: &[usize],
        n: usize,
        filled: &mut [usize],
        row_of: &mut Vec<usize>,
        out: &mut QSymElement,
    ) {
        if row_of.len() == n {
            let descents: Vec<usize> = (1..n).filter(|&i| row_of[i] > row_of[i - 1]).collect();
            let mut parts = Vec::new();
            let mut prev = 0;
            for d in descents.into_iter().chain((n > 0).then_some(n)) {
                parts.push(d - prev);
                prev = d;
            }
            let beta = Composition::new(parts).expect("positive parts");
            out.add_term(&beta, BigInt::one()).expect("weight n");
            return;
        }
        for r in 0..shape.len() {
            let fits = filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r]);
            if fits {
                filled[r] += 1;
                row_of.push(r);
                grow(shape, n, filled, row_of, out);
                row_of.pop();
                filled[r] -= 1;
            }
        }
    }
    grow(shape, n, &mut filled, &mut row_of, &mut out);
    Ok(out)
}

/// `K_{α,β}` over all compositions of `n`, rows and columns in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMatrix {
    n: usize,
    labels: Vec<Composition>,
    entries: Vec<Vec<u64>>,
}

impl KMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[Composition] {
        &self.labels
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    fn position(&self, alpha: &Composition) -> Option<usize> {
        self.labels.binary_search(alpha).ok()
    }

    /// `K_{α,β}`, or `None` if either index is not a composition of `n`.
    pub fn get(&self, alpha: &Composition, beta: &Composition) -> Option<u64> {
        Some(self.entries[self.position(alpha)?][self.position(beta)?])
    }

    pub fn has_unit_diagonal(&self) -> bool {
        (0..self.labels.len()).all(|k| self.entries[k][k] == 1)
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.entries)
    }

    pub fn determinant(&self) -> BigInt {
        self.to_int_matrix().determinant()
    }

    /// Header row and column of composition strings.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header =
            std::iter::once(String::new()).chain(self.labels.iter().map(|l| l.to_string()));
        w.write_record(header).expect("in-memory write");
        for (label, row) in self.labels.iter().zip(&self.entries) {
            let record = std::iter::once(label.to_string()).chain(row.iter().map(u64::to_string));
            w.write_record(record).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

impl fmt::Display for KMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label_width = self
            .labels
            .iter()
            .map(|l| l.to_string().len())
            .max()
            .unwrap_or(0);
        for (label, row) in self.labels.iter().zip(&self.entries) {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            writeln!(
                f,
                "{:>label_width$} | {}",
                label.to_string(),
                cells.join(" ")
            )?;
        }
        Ok(())
    }
}

impl Serialize for KMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("KMatrix", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("labels", &self.labels)?;
        st.serialize_field("entries", &self.entries)?;
        st.end()
    }
}

pub fn k_matrix(n: usize) -> Result<KMatrix> {
    if n < 1 {
        return Err(Error::InvalidDegree(n));
    }
    let labels = compositions_of(n);
    let entries = labels
        .iter()
        .map(|alpha| {
            let e = extended_schur_in_fundamental(alpha);
            labels
                .iter()
                .map(|beta| e.coefficient(beta).to_u64().expect("counts are small"))
                .collect()
        })
        .collect();
    Ok(KMatrix { n, labels, entries })
}

/// Shin-basis coefficients of the ribbon function `r_β`: the nonzero values
/// of `α ↦ K_{α,β}`.
pub fn ribbon_in_shin(beta: &Composition) -> BTreeMap<Composition, u64> {
    compositions_of(beta.weight())
        .into_iter()
        .filter_map(|alpha| {
            let count = enumerate_set(&alpha)
                .iter()
                .filter(|t| &t.descent_composition() == beta)
                .count() as u64;
            (count > 0).then_some((alpha, count))
        })
        .collect()
}
