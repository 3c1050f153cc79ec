//! Compositions, their descent sets, and refinement.
//!
//! A composition of `n` is a finite sequence of positive integers summing to
//! `n`. Compositions of `n` are in bijection with subsets of `{1, ..., n-1}`
//! via partial sums, and refinement corresponds to subset inclusion.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite sequence of positive parts.
///
/// Ordering is lexicographic on the part sequence, so
/// `(1,1,1) < (1,2) < (2,1) < (3)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(Composition(parts))
    }

    /// The empty composition, the unique composition of 0.
    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff the parts are weakly decreasing.
    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// The partial sums `{α_1, α_1+α_2, ..., α_1+...+α_{k-1}}`.
    pub fn descent_subset(&self) -> DescentSubset {
        let mut members = Vec::with_capacity(self.len().saturating_sub(1));
        let mut acc = 0;
        for &p in self.0.iter().take(self.len().saturating_sub(1)) {
            acc += p;
            members.push(acc);
        }
        DescentSubset {
            n: self.weight(),
            members,
        }
    }

    /// True iff `self` is obtained from `finer` by summing consecutive parts.
    pub fn is_refined_by(&self, finer: &Composition) -> bool {
        refines(finer, self)
    }

    /// Every composition refining `self`, in lexicographic order.
    pub fn refinements(&self) -> Vec<Composition> {
        // Refinements of α ⟷ supersets of S(α) inside [n-1].
        let n = self.weight();
        if n == 0 {
            return vec![Composition::empty()];
        }
        let base = self.descent_subset();
        let free: Vec<usize> = (1..n).filter(|i| !base.contains(*i)).collect();
        let mut out = Vec::with_capacity(1 << free.len());
        for mask in 0u64..(1u64 << free.len()) {
            let mut members = base.members.clone();
            members.extend(
                free.iter()
                    .enumerate()
                    .filter(|(b, _)| mask >> b & 1 == 1)
                    .map(|(_, &i)| i),
            );
            members.sort_unstable();
            out.push(DescentSubset { n, members }.composition());
        }
        out.sort();
        out
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

/// Comma-separated parts, e.g. `2,1,3`; the empty string is the empty
/// composition.
impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&p| p > 0)
                    .ok_or_else(|| Error::ParseComposition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Composition(parts))
    }
}

/// A subset of `{1, ..., n-1}`, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DescentSubset {
    n: usize,
    members: Vec<usize>,
}

impl DescentSubset {
    pub fn new(n: usize, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        let in_range = members.iter().all(|&i| i >= 1 && i < n);
        let distinct = members.windows(2).all(|w| w[0] < w[1]);
        if !in_range || !distinct {
            return Err(Error::InvalidSubset { n, members });
        }
        Ok(DescentSubset { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &DescentSubset) -> bool {
        self.n == other.n && self.members.iter().all(|&i| other.contains(i))
    }

    /// The unique composition of `n` whose descent subset is `self`.
    pub fn composition(&self) -> Composition {
        if self.n == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::with_capacity(self.members.len() + 1);
        let mut prev = 0;
        for &i in self.members.iter().chain(std::iter::once(&self.n)) {
            parts.push(i - prev);
            prev = i;
        }
        Composition(parts)
    }
}

pub fn descent_subset(alpha: &Composition) -> DescentSubset {
    alpha.descent_subset()
}

pub fn composition_of_subset(s: &DescentSubset) -> Composition {
    s.composition()
}

/// True iff `alpha` is obtained by summing consecutive entries of `beta`.
pub fn refines(beta: &Composition, alpha: &Composition) -> bool {
    let mut coarse = alpha.parts().iter().copied();
    let mut need = coarse.next();
    let mut acc = 0;
    for &b in beta.parts() {
        let Some(a) = need else { return false };
        acc += b;
        if acc == a {
            acc = 0;
            need = coarse.next();
        } else if acc > a {
            return false;
        }
    }
    need.is_none()
}

pub fn is_partition(alpha: &Composition) -> bool {
    alpha.is_partition()
}

/// All compositions of `n` in lexicographic order; `[()]` for `n = 0`.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn go(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            go(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(if n == 0 { 1 } else { 1 << (n - 1) });
    go(n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of weight `0..=n`, grouped by weight, each group in
/// lexicographic order.
pub fn compositions_up_to(n: usize) -> Vec<Composition> {
    (0..=n).flat_map(compositions_of).collect()
}
