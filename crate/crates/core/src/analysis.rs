//! Matrix realization of the quotient module `X_α`, its composition series,
//! quasisymmetric characteristic, and endomorphism algebra.
//!
//! Everything is expressed in the basis of standard extended tableaux taken
//! in [`Filtration`] order, so each action matrix maps basis vector `j` to
//! zero or to a basis vector with index `<= j`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::composition::Composition;
use crate::hecke::{filtration, pi_full, pi_quotient, ActionResult, Filtration, Relation};
use crate::linalg::{nullspace, IntMatrix, SparseRow};
use crate::qsym::{Basis, QSymElement};
use crate::tableau::enumerate_srit;

/// A 0/1 matrix with at most one nonzero entry per column, stored as the
/// row index of that entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActionMatrix {
    images: Vec<Option<usize>>,
}

impl ActionMatrix {
    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Where basis vector `col` goes; `None` for zero.
    pub fn image(&self, col: usize) -> Option<usize> {
        self.images[col]
    }

    pub fn entry(&self, row: usize, col: usize) -> u8 {
        u8::from(self.images[col] == Some(row))
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        let m = self.size();
        let mut out = IntMatrix::zeros(m, m);
        for (col, img) in self.images.iter().enumerate() {
            if let Some(row) = img {
                out.set(*row, col, BigInt::one());
            }
        }
        out
    }
}

/// The action of `π_1, ..., π_{n-1}` on `X_α`.
#[derive(Debug, Clone)]
pub struct ModuleMatrices {
    order: Filtration,
    mats: Vec<ActionMatrix>,
}

impl ModuleMatrices {
    pub fn alpha(&self) -> &Composition {
        self.order.alpha()
    }

    pub fn order(&self) -> &Filtration {
        &self.order
    }

    /// Module dimension `|SET(α)|`.
    pub fn dim(&self) -> usize {
        self.order.len()
    }

    /// All action matrices; `mats()[i - 1]` realizes `π_i`.
    pub fn mats(&self) -> &[ActionMatrix] {
        &self.mats
    }

    /// The matrix of `π_i`.
    ///
    /// # Panics
    ///
    /// If `i` is not in `1..n`.
    pub fn generator(&self, i: usize) -> &ActionMatrix {
        &self.mats[i - 1]
    }

    /// True iff every image index is at most its source index.
    pub fn is_triangular(&self) -> bool {
        self.mats.iter().all(|p| {
            p.images
                .iter()
                .enumerate()
                .all(|(j, img)| img.is_none_or(|k| k <= j))
        })
    }

    /// Checks the 0-Hecke relations as exact integer matrix identities and
    /// returns the failing `(relation, i, j)` triples.
    pub fn relation_failures(&self) -> Vec<(Relation, usize, usize)> {
        let dense: Vec<IntMatrix> = self.mats.iter().map(ActionMatrix::to_int_matrix).collect();
        let p = |i: usize| &dense[i - 1];
        let n = self.alpha().weight();
        let mut failures = Vec::new();
        for i in 1..n {
            if &(p(i) * p(i)) != p(i) {
                failures.push((Relation::Idempotent, i, i));
            }
            for j in i + 2..n {
                if p(i) * p(j) != p(j) * p(i) {
                    failures.push((Relation::Commute, i, j));
                }
            }
            if i + 1 < n {
                let lhs = &(p(i) * p(i + 1)) * p(i);
                let rhs = &(p(i + 1) * p(i)) * p(i + 1);
                if lhs != rhs {
                    failures.push((Relation::Braid, i, i + 1));
                }
            }
        }
        failures
    }

    /// Number of basis vectors reachable from basis vector `start` under
    /// products of the action matrices. Since images are basis vectors or
    /// zero, this is the dimension of the submodule `start` generates.
    pub fn generated_dimension(&self, start: usize) -> usize {
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(j) = stack.pop() {
            for p in &self.mats {
                if let Some(k) = p.image(j) {
                    if seen.insert(k) {
                        stack.push(k);
                    }
                }
            }
        }
        seen.len()
    }
}

/// Builds the action matrices column by column from the quotient action.
pub fn matrices(alpha: &Composition) -> ModuleMatrices {
    let order = filtration(alpha);
    let n = alpha.weight();
    let mats = (1..n)
        .map(|i| {
            let images = order
                .order()
                .iter()
                .enumerate()
                .map(
                    |(j, t)| match pi_quotient(i, t).expect("basis is standard extended") {
                        ActionResult::Fixed => Some(j),
                        ActionResult::Zero => None,
                        ActionResult::Swapped(s) => {
                            Some(order.index_of(&s).expect("image is a basis tableau"))
                        }
                    },
                )
                .collect();
            ActionMatrix { images }
        })
        .collect();
    ModuleMatrices { order, mats }
}

/// The factors `F_{β_1}, ..., F_{β_m}` of the composition series
/// `0 = X_0 ⊂ X_1 ⊂ ... ⊂ X_m = X_α`, in filtration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CompositionFactorList {
    pub factors: Vec<Composition>,
}

impl CompositionFactorList {
    /// True iff each factor equals the descent composition of the basis
    /// tableau spanning that quotient.
    pub fn matches_descents(&self, order: &Filtration) -> bool {
        self.factors.len() == order.len()
            && self
                .factors
                .iter()
                .zip(order.order())
                .all(|(beta, t)| beta == &t.descent_composition())
    }
}

/// Reads each one-dimensional quotient `X_j / X_{j-1}` off the matrices:
/// `π_i` acts on it as 1 when it fixes `T_j` and as 0 otherwise, so `β_j` is
/// the composition whose descent set is `{i : π_i T_j ≠ T_j}`.
pub fn factors_of(mats: &ModuleMatrices) -> CompositionFactorList {
    let n = mats.alpha().weight();
    let factors = (0..mats.dim())
        .map(|j| {
            let members = (1..n)
                .filter(|&i| mats.generator(i).image(j) != Some(j))
                .collect();
            crate::composition::DescentSubset::new(n, members)
                .expect("generators lie in [n-1]")
                .composition()
        })
        .collect();
    CompositionFactorList { factors }
}

pub fn composition_factors(alpha: &Composition) -> CompositionFactorList {
    factors_of(&matrices(alpha))
}

/// `ch([X_α]) = Σ_j F_{β_j}`.
pub fn characteristic_of(factors: &CompositionFactorList, degree: usize) -> QSymElement {
    let mut out = QSymElement::zero(degree, Basis::Fundamental);
    for beta in &factors.factors {
        out.add_term(beta, BigInt::one())
            .expect("factors have weight n");
    }
    out
}

pub fn characteristic(alpha: &Composition) -> QSymElement {
    characteristic_of(&composition_factors(alpha), alpha.weight())
}

pub type RationalMatrix = Vec<Vec<BigRational>>;

/// A basis of `{E : E π_i = π_i E for all i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndomorphismSpace {
    pub alpha: Composition,
    pub size: usize,
    pub basis: Vec<RationalMatrix>,
}

impl EndomorphismSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Exact check that every basis matrix commutes with every generator.
    pub fn commutes_with(&self, mats: &ModuleMatrices) -> bool {
        let m = self.size;
        self.basis.iter().all(|e| {
            mats.mats().iter().all(|p| {
                (0..m).all(|r| {
                    (0..m).all(|c| {
                        // (E P)[r][c] and (P E)[r][c]
                        let ep = p
                            .image(c)
                            .map_or_else(BigRational::zero, |k| e[r][k].clone());
                        let pe: BigRational = (0..m)
                            .filter(|&k| p.image(k) == Some(r))
                            .map(|k| e[k][c].clone())
                            .sum();
                        ep == pe
                    })
                })
            })
        })
    }

    /// True iff the identity matrix is a linear combination of the basis.
    pub fn contains_identity(&self) -> bool {
        let m = self.size;
        let mut combo = vec![vec![BigRational::zero(); m]; m];
        // Each basis matrix is 1 at its own free coordinate and 0 at the
        // others, so the coefficients are the identity's free entries.
        for e in &self.basis {
            let (fr, fc) = free_coordinate(e);
            let coeff = if fr == fc {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            for r in 0..m {
                for c in 0..m {
                    combo[r][c] += &coeff * &e[r][c];
                }
            }
        }
        (0..m).all(|r| (0..m).all(|c| combo[r][c] == BigRational::from_integer((r == c).into())))
    }
}

fn free_coordinate(e: &RationalMatrix) -> (usize, usize) {
    // The solver's free coordinate is the last nonzero one in row-major
    // order, and holds exactly 1.
    let m = e.len();
    let (r, c) = (0..m * m)
        .rev()
        .map(|k| (k / m, k % m))
        .find(|&(r, c)| !e[r][c].is_zero())
        .expect("basis vector is nonzero");
    debug_assert!(e[r][c].is_one());
    (r, c)
}

/// Solves `E P_i − P_i E = 0` for all generators in `m²` unknowns.
pub fn commutant_of(mats: &ModuleMatrices) -> EndomorphismSpace {
    let m = mats.dim();
    let var = |r: usize, c: usize| r * m + c;
    let mut equations: Vec<SparseRow> = Vec::new();
    for p in mats.mats() {
        for r in 0..m {
            for c in 0..m {
                let mut eq = SparseRow::new();
                if let Some(k) = p.image(c) {
                    *eq.entry(var(r, k)).or_insert_with(BigInt::zero) += 1;
                }
                for k in (0..m).filter(|&k| p.image(k) == Some(r)) {
                    *eq.entry(var(k, c)).or_insert_with(BigInt::zero) -= 1;
                }
                eq.retain(|_, v| !v.is_zero());
                if !eq.is_empty() {
                    equations.push(eq);
                }
            }
        }
    }
    equations.sort();
    equations.dedup();
    let basis = nullspace(&equations, m * m)
        .into_iter()
        .map(|v| v.chunks(m.max(1)).map(<[_]>::to_vec).collect())
        .collect();
    EndomorphismSpace {
        alpha: mats.alpha().clone(),
        size: m,
        basis,
    }
}

pub fn commutant_basis(alpha: &Composition) -> EndomorphismSpace {
    commutant_of(&matrices(alpha))
}

/// Outcome of the indecomposability certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// The endomorphism algebra is the scalars, so the only idempotents are
    /// 0 and the identity.
    Indecomposable,
    /// The endomorphism algebra has this dimension (> 1); no claim is made.
    Inconclusive(usize),
}

impl Verdict {
    pub fn from_dimension(dim: usize) -> Self {
        if dim == 1 {
            Verdict::Indecomposable
        } else {
            Verdict::Inconclusive(dim)
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Verdict::Indecomposable => s.serialize_bool(true),
            Verdict::Inconclusive(_) => s.serialize_str("inconclusive"),
        }
    }
}

pub fn is_indecomposable(alpha: &Composition) -> Verdict {
    Verdict::from_dimension(commutant_basis(alpha).dimension())
}

/// True iff every `π_i` maps the non-extended row-increasing tableaux into
/// themselves.
pub fn verify_submodule_closure(alpha: &Composition) -> bool {
    let n = alpha.weight();
    enumerate_srit(alpha)
        .iter()
        .filter(|t| !t.is_standard_extended())
        .all(|t| {
            (1..n).all(|i| {
                !pi_full(i, t)
                    .expect("generator in range")
                    .is_standard_extended()
            })
        })
}

/// Everything computed about one module, in report form.
#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub alpha: Composition,
    pub dim: usize,
    pub factors: CompositionFactorList,
    pub characteristic: QSymElement,
    pub commutant_dimension: usize,
    pub verdict: Verdict,
}

impl Serialize for AnalysisReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AnalysisReport", 6)?;
        st.serialize_field("alpha", &self.alpha)?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("factors", &self.factors)?;
        st.serialize_field("characteristic", &self.characteristic)?;
        st.serialize_field("commutant_dimension", &self.commutant_dimension)?;
        st.serialize_field("indecomposable", &self.verdict)?;
        st.end()
    }
}

pub fn analyze(alpha: &Composition) -> AnalysisReport {
    let mats = matrices(alpha);
    let factors = factors_of(&mats);
    let characteristic = characteristic_of(&factors, alpha.weight());
    let commutant_dimension = commutant_of(&mats).dimension();
    AnalysisReport {
        alpha: alpha.clone(),
        dim: mats.dim(),
        factors,
        characteristic,
        commutant_dimension,
        verdict: Verdict::from_dimension(commutant_dimension),
    }
}
