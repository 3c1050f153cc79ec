//! The operators `π_i` on tableau bases.
//!
//! On the span of all standard row-increasing tableaux, `π_i` fixes `T` when
//! `i` sits weakly above `i + 1` and otherwise swaps the two entries. The
//! span of the tableaux that are *not* standard extended is a submodule, and
//! on the quotient (basis: standard extended tableaux) the action becomes
//! three-valued: fix, kill, or swap, according to the relative columns of
//! `i` and `i + 1`.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::tableau::{enumerate_set, enumerate_srit, super_standard, Tableau};

/// Which module the operators act on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionKind {
    /// All row-increasing tableaux.
    Full,
    /// Standard extended tableaux, modulo the non-extended ones.
    Quotient,
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ActionKind::Full => "full",
            ActionKind::Quotient => "quotient",
        })
    }
}

/// Outcome of one quotient operator on a basis tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ActionResult {
    Fixed,
    Zero,
    Swapped(Tableau),
}

impl ActionResult {
    /// The image as a basis element, `None` for zero.
    pub fn image(self, source: &Tableau) -> Option<Tableau> {
        match self {
            ActionResult::Fixed => Some(source.clone()),
            ActionResult::Zero => None,
            ActionResult::Swapped(t) => Some(t),
        }
    }
}

fn check_generator(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::GeneratorOutOfRange { i, n });
    }
    Ok(())
}

fn full_step(i: usize, t: &Tableau) -> Tableau {
    if t.cell_of(i).row >= t.cell_of(i + 1).row {
        t.clone()
    } else {
        t.swapped(i)
    }
}

fn quotient_step(i: usize, t: &Tableau) -> ActionResult {
    let left = t.cell_of(i).col;
    let right = t.cell_of(i + 1).col;
    match left.cmp(&right) {
        std::cmp::Ordering::Less => ActionResult::Fixed,
        std::cmp::Ordering::Equal => ActionResult::Zero,
        std::cmp::Ordering::Greater => ActionResult::Swapped(t.swapped(i)),
    }
}

/// `π_i` on a row-increasing tableau.
pub fn pi_full(i: usize, t: &Tableau) -> Result<Tableau> {
    check_generator(i, t.n())?;
    Ok(full_step(i, t))
}

/// `π_i` on a standard extended tableau, read in the quotient module.
pub fn pi_quotient(i: usize, t: &Tableau) -> Result<ActionResult> {
    check_generator(i, t.n())?;
    if !t.is_standard_extended() {
        return Err(Error::NotStandardExtended);
    }
    Ok(quotient_step(i, t))
}

fn step(kind: ActionKind, i: usize, t: Tableau) -> Option<Tableau> {
    match kind {
        ActionKind::Full => Some(full_step(i, &t)),
        ActionKind::Quotient => quotient_step(i, &t).image(&t),
    }
}

/// Applies `π_{w_1}`, then `π_{w_2}`, and so on. `None` means the result is
/// zero in the quotient; zero absorbs all later letters.
pub fn apply_word(word: &[usize], t: &Tableau, kind: ActionKind) -> Result<Option<Tableau>> {
    for &i in word {
        check_generator(i, t.n())?;
    }
    if kind == ActionKind::Quotient && !t.is_standard_extended() {
        return Err(Error::NotStandardExtended);
    }
    Ok(word
        .iter()
        .try_fold(t.clone(), |acc, &i| step(kind, i, acc)))
}

/// A 0-Hecke relation family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `π_i π_i = π_i`
    Idempotent,
    /// `π_i π_j = π_j π_i` for `|i - j| >= 2`
    Commute,
    /// `π_i π_{i+1} π_i = π_{i+1} π_i π_{i+1}`
    Braid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub relation: Relation,
    pub i: usize,
    pub j: usize,
    pub tableau: Tableau,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub alpha: Composition,
    pub kind: ActionKind,
    /// Number of (relation, tableau) instances checked.
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl RelationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    /// The violation list as JSON; `[]` means every relation held.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(&self.violations).expect("violations serialize")
    }
}

/// Checks every 0-Hecke relation on every basis tableau of the chosen
/// module.
pub fn verify_relations(alpha: &Composition, kind: ActionKind) -> RelationReport {
    let basis = match kind {
        ActionKind::Full => enumerate_srit(alpha),
        ActionKind::Quotient => enumerate_set(alpha),
    };
    let n = alpha.weight();
    let word = |letters: &[usize], t: &Tableau| {
        letters
            .iter()
            .rev()
            .try_fold(t.clone(), |acc, &i| step(kind, i, acc))
    };
    let mut checked = 0;
    let mut violations = Vec::new();
    for t in &basis {
        let mut check = |relation, i, j, lhs: &[usize], rhs: &[usize]| {
            checked += 1;
            if word(lhs, t) != word(rhs, t) {
                violations.push(Violation {
                    relation,
                    i,
                    j,
                    tableau: t.clone(),
                });
            }
        };
        for i in 1..n {
            check(Relation::Idempotent, i, i, &[i, i], &[i]);
            for j in i + 2..n {
                check(Relation::Commute, i, j, &[i, j], &[j, i]);
            }
            if i + 1 < n {
                check(
                    Relation::Braid,
                    i,
                    i + 1,
                    &[i, i + 1, i],
                    &[i + 1, i, i + 1],
                );
            }
        }
    }
    RelationReport {
        alpha: alpha.clone(),
        kind,
        checked,
        violations,
    }
}

/// Every standard extended tableau reachable from `t` by quotient operators
/// (zero results discarded), including `t` itself.
pub fn quotient_closure(t: &Tableau) -> BTreeSet<Tableau> {
    let mut seen = BTreeSet::from([t.clone()]);
    let mut stack = vec![t.clone()];
    while let Some(cur) = stack.pop() {
        for i in 1..cur.n() {
            if let ActionResult::Swapped(next) = quotient_step(i, &cur) {
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    seen
}

/// `s ⪯ t`: `s` is obtained from `t` by a (possibly empty) sequence of
/// quotient operators.
pub fn preceq(s: &Tableau, t: &Tableau) -> Result<bool> {
    if s.shape() != t.shape() {
        return Err(Error::ShapeMismatch {
            left: s.shape().to_string(),
            right: t.shape().to_string(),
        });
    }
    if !s.is_standard_extended() || !t.is_standard_extended() {
        return Err(Error::NotStandardExtended);
    }
    Ok(quotient_closure(t).contains(s))
}

/// A word `w` with `apply_word(w, super_standard(shape), Quotient) == s`.
///
/// Works box by box in reading order (rows bottom-up, each left to right):
/// at the first box where the target disagrees with the super-standard
/// tableau, its entry `j` is walked down to the super-standard value by
/// undoing `π_{j-1}` one step at a time.
pub fn generation_path(s: &Tableau) -> Result<Vec<usize>> {
    if !s.is_standard_extended() {
        return Err(Error::NotStandardExtended);
    }
    let sup = super_standard(s.shape());
    let target = sup.reading_word();
    let mut cur = s.clone();
    let mut letters = Vec::new();
    loop {
        let word = cur.reading_word();
        let Some(pos) = word.iter().zip(&target).position(|(a, b)| a != b) else {
            break;
        };
        let j = word[pos];
        debug_assert!(j > target[pos]);
        cur = cur.swapped(j - 1);
        letters.push(j - 1);
    }
    letters.reverse();
    Ok(letters)
}

/// A linear extension `T_1, ..., T_m` of `⪯` on the standard extended
/// tableaux of one shape.
///
/// Tableaux are sorted by row-sum vector in descending lexicographic order,
/// ties broken by ascending reading word. Operators never decrease the
/// row-sum vector entrywise, so every image `π_i(T_j)` is either zero,
/// `T_j`, or some `T_k` with `k < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filtration {
    alpha: Composition,
    order: Vec<Tableau>,
    index: HashMap<Tableau, usize>,
}

impl Filtration {
    pub fn alpha(&self) -> &Composition {
        &self.alpha
    }

    /// The basis in filtration order (0-based: `order()[0]` is `T_1`).
    pub fn order(&self) -> &[Tableau] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// 0-based position of `t` in the order.
    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// The basis index of the super-standard tableau.
    pub fn super_standard_index(&self) -> usize {
        self.index[&super_standard(&self.alpha)]
    }
}

pub fn filtration(alpha: &Composition) -> Filtration {
    let mut keyed: Vec<_> = enumerate_set(alpha)
        .into_iter()
        .map(|t| (Reverse(t.row_sum_vector()), t))
        .collect();
    keyed.sort();
    let order: Vec<Tableau> = keyed.into_iter().map(|(_, t)| t).collect();
    let index = order
        .iter()
        .enumerate()
        .map(|(k, t)| (t.clone(), k))
        .collect();
    Filtration {
        alpha: alpha.clone(),
        order,
        index,
    }
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
    fn full_action_examples() {
        let x = t(&[&[2, 3, 8, 9], &[1, 5], &[4, 6, 7]]);
        assert_eq!(pi_full(4, &x).unwrap(), x);
        assert_eq!(pi_full(8, &x).unwrap(), x);
        assert_eq!(
            pi_full(5, &x).unwrap(),
            t(&[&[2, 3, 8, 9], &[1, 6], &[4, 5, 7]])
        );
        assert!(matches!(
            pi_full(9, &x),
            Err(Error::GeneratorOutOfRange { i: 9, n: 9 })
        ));
        assert!(pi_full(0, &x).is_err());
    }

    #[test]
    fn quotient_action_examples() {
        let x = t(&[&[1, 2, 5, 6], &[3, 7], &[4, 8, 9]]);
        assert_eq!(pi_quotient(5, &x).unwrap(), ActionResult::Fixed);
        assert_eq!(pi_quotient(7, &x).unwrap(), ActionResult::Zero);
        assert_eq!(
            pi_quotient(6, &x).unwrap(),
            ActionResult::Swapped(t(&[&[1, 2, 5, 7], &[3, 6], &[4, 8, 9]]))
        );
        let not_set = t(&[&[2], &[1]]);
        assert_eq!(pi_quotient(1, &not_set), Err(Error::NotStandardExtended));
        assert!(pi_quotient(10, &x).is_err());
    }

    #[test]
    fn word_examples() {
        assert_eq!(
            apply_word(&[], &t1(), ActionKind::Quotient).unwrap(),
            Some(t1())
        );
        assert_eq!(
            apply_word(&[2, 3], &t1(), ActionKind::Quotient).unwrap(),
            Some(t3())
        );
        // (1,1): π_1 kills the only basis element; zero then absorbs.
        let col = t(&[&[1], &[2]]);
        assert_eq!(
            apply_word(&[1, 1], &col, ActionKind::Quotient).unwrap(),
            None
        );
        assert!(apply_word(&[1, 6], &t1(), ActionKind::Full).is_err());
        for i in 1..6 {
            for kind in [ActionKind::Full, ActionKind::Quotient] {
                assert_eq!(
                    apply_word(&[i, i], &t2(), kind).unwrap(),
                    apply_word(&[i], &t2(), kind).unwrap()
                );
            }
        }
    }

    #[test]
    fn relation_examples() {
        let r = verify_relations(&c(&[2, 1, 3]), ActionKind::Quotient);
        assert!(r.is_ok());
        assert_eq!(r.to_json(), serde_json::json!([]));
        assert!(verify_relations(&c(&[4, 2, 3]), ActionKind::Full).is_ok());
        for kind in [ActionKind::Full, ActionKind::Quotient] {
            assert!(verify_relations(&c(&[5]), kind).is_ok());
        }
        let row = t(&[&[1, 2, 3, 4, 5]]);
        for i in 1..5 {
            assert_eq!(pi_full(i, &row).unwrap(), row);
            assert_eq!(pi_quotient(i, &row).unwrap(), ActionResult::Fixed);
        }
    }

    #[test]
    fn violation_json_shape() {
        let v = Violation {
            relation: Relation::Braid,
            i: 1,
            j: 2,
            tableau: t(&[&[1, 2, 3]]),
        };
        assert_eq!(
            serde_json::to_value(&v).unwrap(),
            serde_json::json!({
                "relation": "braid", "i": 1, "j": 2,
                "tableau": {"shape": [3], "rows": [[1, 2, 3]]}
            })
        );
    }

    #[test]
    fn order_examples() {
        assert!(preceq(&t3(), &t1()).unwrap());
        assert!(!preceq(&t1(), &t3()).unwrap());
        assert!(preceq(&t2(), &t2()).unwrap());
        assert!(preceq(&t1(), &t(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn generation_path_examples() {
        assert!(generation_path(&t1()).unwrap().is_empty());
        assert_eq!(generation_path(&t2()).unwrap(), vec![2]);
        assert_eq!(generation_path(&t3()).unwrap(), vec![2, 3]);
    }

    #[test]
    fn filtration_examples() {
        let f = filtration(&c(&[2, 1, 3]));
        assert_eq!(f.order(), &[t3(), t2(), t1()]);
        assert_eq!(f.super_standard_index(), 2);
        assert_eq!(filtration(&c(&[4])).order(), &[t(&[&[1, 2, 3, 4]])]);
        assert_eq!(
            filtration(&c(&[1, 1, 1])).order(),
            &[t(&[&[1], &[2], &[3]])]
        );
    }

    #[test]
    fn closure_properties() {
        for n in 0..=7 {
            for alpha in compositions_of(n) {
                let srit = enumerate_srit(&alpha);
                for x in &srit {
                    let set = x.is_standard_extended();
                    for i in 1..n {
                        let y = pi_full(i, x).unwrap();
                        assert_eq!(y.shape(), &alpha);
                        // Y_α is a submodule.
                        if !set {
                            assert!(!y.is_standard_extended(), "{alpha} {x:?} {i}");
                        }
                        if set {
                            if let ActionResult::Swapped(z) = pi_quotient(i, x).unwrap() {
                                assert!(z.is_standard_extended());
                                assert_eq!(z, y);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn row_sums_never_decrease() {
        for n in 0..=7 {
            for alpha in compositions_of(n) {
                for x in enumerate_srit(&alpha) {
                    let d = x.row_sum_vector();
                    for i in 1..n {
                        let y = pi_full(i, &x).unwrap();
                        let dy = y.row_sum_vector();
                        assert!(dy.dominates(&d));
                        if y != x {
                            let k = x.cell_of(i).row - 1;
                            assert!(dy.0[k] > d.0[k]);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn preceq_is_antisymmetric() {
        for n in 0..=6 {
            for alpha in compositions_of(n) {
                let set = enumerate_set(&alpha);
                let closures: Vec<_> = set.iter().map(quotient_closure).collect();
                for (a, ca) in set.iter().zip(&closures) {
                    for (b, cb) in set.iter().zip(&closures) {
                        if ca.contains(b) && cb.contains(a) {
                            assert_eq!(a, b);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn generation_paths_replay() {
        for n in 0..=7 {
            for alpha in compositions_of(n) {
                let sup = super_standard(&alpha);
                for s in enumerate_set(&alpha) {
                    let w = generation_path(&s).unwrap();
                    let mut cur = sup.clone();
                    for &i in &w {
                        cur = match pi_quotient(i, &cur).unwrap() {
                            ActionResult::Swapped(next) => next,
                            other => panic!("{alpha}: π_{i} gave {other:?}"),
                        };
                    }
                    assert_eq!(cur, s);
                }
            }
        }
    }

    #[test]
    fn super_standard_is_characterized_by_fixed_points() {
        for n in 0..=7 {
            for alpha in compositions_of(n) {
                let boundaries = alpha.descent_subset();
                let fixed: Vec<Tableau> = enumerate_set(&alpha)
                    .into_iter()
                    .filter(|x| {
                        (1..n)
                            .filter(|&i| !boundaries.contains(i))
                            .all(|i| pi_quotient(i, x).unwrap() == ActionResult::Fixed)
                    })
                    .collect();
                assert_eq!(fixed, vec![super_standard(&alpha)], "{alpha}");
            }
        }
    }

    #[test]
    fn filtration_is_a_linear_extension() {
        for n in 0..=7 {
            for alpha in compositions_of(n) {
                let f = filtration(&alpha);
                assert_eq!(f.len(), enumerate_set(&alpha).len());
                for (j, x) in f.order().iter().enumerate() {
                    assert_eq!(f.index_of(x), Some(j));
                    for i in 1..n {
                        if let Some(y) = quotient_step(i, x).image(x) {
                            assert!(f.index_of(&y).unwrap() <= j);
                        }
                    }
                    if n <= 6 {
                        for s in quotient_closure(x) {
                            assert!(f.index_of(&s).unwrap() <= j);
                        }
                    }
                }
            }
        }
    }
}
