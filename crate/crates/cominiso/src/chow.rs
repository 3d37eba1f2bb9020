//! The Chow side: a degree-lowering product on the Schubert basis, and
//! reconstruction of the labeled poset from that product alone.
//!
//! The Chow group of a Schubert variety is modeled by fiat as the free
//! graded module on the ideals contained in `λ`, with the divisor class
//! acting by [`chevalley_lower`]: remove one maximal box at a time, with
//! coefficient 1 for a long box and 2 for a short one. These are the
//! axioms here, not derived facts. [`reconstruct_labeled_poset`] then
//! rebuilds the labeled poset from nothing but the resulting coefficient
//! table; [`build_mult_table`] shuffles the basis behind a seed so that any
//! accidental use of basis identities would be caught by tests.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::comin_poset::{CominPoset, Ideal};
use crate::error::{Error, Result};
use crate::labeled_poset::LabeledPoset;
use crate::root_system::LengthClass;

/// A non-negative integer combination of ideal classes.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FormalSum {
    terms: BTreeMap<Ideal, u64>,
}

impl FormalSum {
    pub fn terms(&self) -> &BTreeMap<Ideal, u64> {
        &self.terms
    }

    fn add(&mut self, ideal: Ideal, coeff: u64) {
        if coeff != 0 {
            *self.terms.entry(ideal).or_insert(0) += coeff;
        }
    }

    pub fn coeff(&self, ideal: Ideal) -> u64 {
        self.terms.get(&ideal).copied().unwrap_or(0)
    }

    /// Renders the sum with ideal literals, e.g. `2*[0,1] + 1*[0,2]`.
    pub fn display(&self, p: &CominPoset) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(ideal, c)| format!("{c}*{}", p.ideal_literal(*ideal)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Multiplies the divisor class into the class of `mu` inside the Chow
/// module of `lambda`: one term per maximal box of `mu`, with coefficient 2
/// exactly when the removed box is short.
pub fn chevalley_lower(p: &CominPoset, lambda: Ideal, mu: Ideal) -> Result<FormalSum> {
    if !mu.is_subset(lambda) {
        return Err(Error::NotContained {
            lambda: p.ideal_literal(lambda),
            mu: p.ideal_literal(mu),
        });
    }
    let mut sum = FormalSum::default();
    for e in p.maximal_elements(mu) {
        let coeff = match p.label(e) {
            LengthClass::Long => 1,
            LengthClass::Short => 2,
        };
        sum.add(mu.without(e), coeff);
    }
    Ok(sum)
}

/// The divisor multiplication table over an opaque, shuffled basis.
///
/// `coeff[i][j]` is the coefficient of class `j` in the product of the
/// divisor with class `i`. Nothing else about the classes is recorded;
/// reconstruction must work from this data alone.
#[derive(Debug, Clone)]
pub struct MultTable {
    classes: usize,
    coeff: Vec<Vec<u64>>,
}

impl MultTable {
    pub fn classes(&self) -> usize {
        self.classes
    }

    pub fn coeff(&self, i: usize, j: usize) -> u64 {
        self.coeff[i][j]
    }
}

/// Builds the multiplication table of all ideals `⊆ lambda`, relabeled by a
/// seed-determined permutation. The returned map gives the ideal behind
/// each opaque class index; it exists for tests and diagnostics only and is
/// never consulted by [`reconstruct_labeled_poset`].
pub fn build_mult_table(
    p: &CominPoset,
    lambda: Ideal,
    shuffle_seed: u64,
) -> (MultTable, Vec<Ideal>) {
    let mut basis: Vec<Ideal> = p
        .enumerate_ideals()
        .into_iter()
        .filter(|i| i.is_subset(lambda))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(shuffle_seed);
    basis.shuffle(&mut rng);

    let index_of: BTreeMap<Ideal, usize> = basis
        .iter()
        .enumerate()
        .map(|(k, &i)| (i, k))
        .collect();
    let n = basis.len();
    let mut coeff = vec![vec![0u64; n]; n];
    for (i, &mu) in basis.iter().enumerate() {
        let product = chevalley_lower(p, lambda, mu).expect("mu is a subideal");
        for (&nu, &c) in product.terms() {
            coeff[i][index_of[&nu]] = c;
        }
    }
    (MultTable { classes: n, coeff }, basis)
}

/// Rebuilds the labeled poset from a multiplication table.
///
/// Classes are ordered by taking `j < i` whenever `coeff[i][j] != 0` and
/// closing transitively; the join-irreducible classes (covering exactly one
/// class) form the poset. The unique minimal join-irreducible is labeled
/// long; any other is long exactly when its single coefficient is 1.
pub fn reconstruct_labeled_poset(t: &MultTable) -> Result<LabeledPoset> {
    let n = t.classes;
    if n == 0 {
        return Err(Error::MalformedTable("no classes".into()));
    }

    let mut zero_rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = t.coeff[i][j];
            if c != 0 && c != 1 && c != 2 {
                return Err(Error::MalformedTable(format!(
                    "coefficient {c} at ({i},{j}) exceeds the doubly-laced bound"
                )));
            }
        }
        if t.coeff[i].iter().all(|&c| c == 0) {
            zero_rows.push(i);
        }
    }
    if zero_rows.len() != 1 {
        return Err(Error::MalformedTable(format!(
            "expected exactly one class with a zero row (the point class), found {}",
            zero_rows.len()
        )));
    }
    let bottom = zero_rows[0];

    // Reachability downward along nonzero entries.
    let mut reach = vec![false; n * n];
    for i in 0..n {
        reach[i * n + i] = true;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if t.coeff[i][j] == 0 || reach[j * n + i] {
                    continue;
                }
                for k in 0..n {
                    if reach[j * n + k] && !reach[i * n + k] {
                        reach[i * n + k] = true;
                        changed = true;
                    }
                }
                if !reach[i * n + j] {
                    reach[i * n + j] = true;
                    changed = true;
                }
            }
        }
    }
    for i in 0..n {
        if !reach[i * n + bottom] {
            return Err(Error::MalformedTable(format!(
                "class {i} does not lie above the point class"
            )));
        }
        if i != bottom && reach[bottom * n + i] {
            return Err(Error::MalformedTable("cycle through the point class".into()));
        }
    }

    // Grading: rank by longest path from the bottom; every nonzero entry
    // must step down exactly one rank, making the entries the cover pairs.
    let mut rank = vec![0usize; n];
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if t.coeff[i][j] != 0 && rank[j] + 1 > rank[i] {
                    rank[i] = rank[j] + 1;
                    changed = true;
                    if rank[i] > n {
                        return Err(Error::MalformedTable("cyclic covers".into()));
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if t.coeff[i][j] != 0 && rank[i] != rank[j] + 1 {
                return Err(Error::MalformedTable(format!(
                    "entry ({i},{j}) violates the grading"
                )));
            }
        }
    }

    // Join-irreducible classes: exactly one nonzero entry in the row.
    let join_irreducibles: Vec<usize> = (0..n)
        .filter(|&i| t.coeff[i].iter().filter(|&&c| c != 0).count() == 1)
        .collect();

    let minimal: Vec<usize> = join_irreducibles
        .iter()
        .copied()
        .filter(|&i| {
            join_irreducibles
                .iter()
                .all(|&j| j == i || !reach[i * n + j])
        })
        .collect();
    if !join_irreducibles.is_empty() && minimal.len() != 1 {
        return Err(Error::MalformedTable(format!(
            "expected a unique minimal join-irreducible, found {}",
            minimal.len()
        )));
    }

    let mut labels = Vec::with_capacity(join_irreducibles.len());
    for &i in &join_irreducibles {
        let label = if minimal.first() == Some(&i) {
            // The minimal join-irreducible corresponds to the cominuscule
            // simple root and is long by definition.
            LengthClass::Long
        } else {
            let c = *t.coeff[i].iter().find(|&&c| c != 0).expect("one entry");
            if c == 1 {
                LengthClass::Long
            } else {
                LengthClass::Short
            }
        };
        labels.push(label);
    }

    let m = join_irreducibles.len();
    let mut leq = vec![false; m * m];
    for (a, &ia) in join_irreducibles.iter().enumerate() {
        for (b, &ib) in join_irreducibles.iter().enumerate() {
            leq[a * m + b] = reach[ib * n + ia];
        }
    }
    Ok(LabeledPoset::new(m, leq, labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layout::Layout;
    use crate::root_system::{DynkinType, Family, RootSystem};

    fn poset(f: Family, n: usize, gamma: usize) -> CominPoset {
        let rs = RootSystem::build(DynkinType::new(f, n).unwrap());
        CominPoset::build(rs, gamma).unwrap()
    }

    fn ideal_of_boxes(p: &CominPoset, layout: &Layout, boxes: &[(usize, usize)]) -> Ideal {
        layout.ideal_from_boxes(p, boxes).unwrap()
    }

    #[test]
    fn lg36_displayed_products() {
        // The three products of the LG(3,6) walkthrough, with their exact
        // coefficients.
        let p = poset(Family::C, 3, 3);
        let layout = Layout::of(&p);
        let full = p.full_ideal();

        let row3 = ideal_of_boxes(&p, &layout, &[(1, 1), (1, 2), (1, 3)]);
        let row2 = ideal_of_boxes(&p, &layout, &[(1, 1), (1, 2)]);
        let hook = ideal_of_boxes(&p, &layout, &[(1, 1), (1, 2), (2, 2)]);
        let four = ideal_of_boxes(&p, &layout, &[(1, 1), (1, 2), (1, 3), (2, 2)]);
        let point = Ideal::EMPTY.with(0);

        let first = chevalley_lower(&p, full, four).unwrap();
        assert_eq!(first.terms().len(), 2);
        assert_eq!(first.coeff(hook), 2);
        assert_eq!(first.coeff(row3), 1);

        let second = chevalley_lower(&p, full, hook).unwrap();
        assert_eq!(second.terms().len(), 1);
        assert_eq!(second.coeff(row2), 1);

        let third = chevalley_lower(&p, full, row2).unwrap();
        assert_eq!(third.terms().len(), 1);
        assert_eq!(third.coeff(point), 2);
    }

    #[test]
    fn gamma_lowers_to_the_point_with_coefficient_one() {
        let p = poset(Family::C, 4, 4);
        let sum = chevalley_lower(&p, p.full_ideal(), Ideal::EMPTY.with(0)).unwrap();
        assert_eq!(sum.coeff(Ideal::EMPTY), 1);
        assert_eq!(sum.terms().len(), 1);
    }

    #[test]
    fn empty_class_lowers_to_nothing() {
        let p = poset(Family::A, 2, 1);
        let sum = chevalley_lower(&p, p.full_ideal(), Ideal::EMPTY).unwrap();
        assert!(sum.terms().is_empty());
    }

    #[test]
    fn rejects_classes_outside_lambda() {
        let p = poset(Family::A, 3, 2);
        let small = Ideal::EMPTY.with(0);
        assert!(matches!(
            chevalley_lower(&p, small, p.full_ideal()),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn coefficient_two_exactly_for_short_removals() {
        for (f, n, g) in [(Family::B, 3, 1), (Family::C, 4, 4), (Family::D, 5, 5)] {
            let p = poset(f, n, g);
            let full = p.full_ideal();
            for mu in p.enumerate_ideals() {
                let sum = chevalley_lower(&p, full, mu).unwrap();
                for e in p.maximal_elements(mu) {
                    let expected = match p.label(e) {
                        LengthClass::Short => 2,
                        LengthClass::Long => 1,
                    };
                    assert_eq!(sum.coeff(mu.without(e)), expected);
                }
            }
        }
    }

    #[test]
    fn table_entries_lower_the_grading_by_one() {
        let p = poset(Family::C, 3, 3);
        let (table, basis) = build_mult_table(&p, p.full_ideal(), 11);
        for i in 0..table.classes() {
            for j in 0..table.classes() {
                if table.coeff(i, j) != 0 {
                    assert_eq!(basis[j].size() + 1, basis[i].size());
                }
            }
        }
    }

    #[test]
    fn trivial_tables() {
        let p = poset(Family::A, 2, 1);
        let (t0, _) = build_mult_table(&p, Ideal::EMPTY, 0);
        assert_eq!(t0.classes(), 1);
        assert_eq!(t0.coeff(0, 0), 0);
        let rec = reconstruct_labeled_poset(&t0).unwrap();
        assert!(rec.is_empty());

        let (t1, basis) = build_mult_table(&p, Ideal::EMPTY.with(0), 0);
        assert_eq!(t1.classes(), 2);
        let atom = basis.iter().position(|i| i.size() == 1).unwrap();
        let point = basis.iter().position(|i| i.is_empty()).unwrap();
        assert_eq!(t1.coeff(atom, point), 1);
        let rec = reconstruct_labeled_poset(&t1).unwrap();
        assert_eq!(rec.len(), 1);
        assert_eq!(rec.label(0), LengthClass::Long);
    }

    #[test]
    fn gr24_table_matches_the_bruhat_interval() {
        // Unshuffled view of the 6-class table of Gr(2,4): the nonzero
        // pattern is the cover relation of the ideal lattice, all entries 1.
        let p = poset(Family::A, 3, 2);
        let (table, basis) = build_mult_table(&p, p.full_ideal(), 5);
        assert_eq!(table.classes(), 6);
        for (i, &mu) in basis.iter().enumerate() {
            for (j, &nu) in basis.iter().enumerate() {
                let covers = nu.is_subset(mu) && nu.size() + 1 == mu.size();
                assert_eq!(table.coeff(i, j) != 0, covers);
                if covers {
                    assert_eq!(table.coeff(i, j), 1);
                }
            }
        }
        // Four join-irreducible classes, matching the principal ideals.
        let rec = reconstruct_labeled_poset(&table).unwrap();
        assert_eq!(rec.len(), 4);
        let direct = LabeledPoset::from_ideal(&p, p.full_ideal());
        assert!(rec.find_isomorphism(&direct).is_some());
    }

    #[test]
    fn reconstructs_the_quadric_divisor_labels() {
        let p = poset(Family::B, 2, 1); // Q^3
        let divisor = p.ideal_from_indices(&[0, 1]).unwrap();
        let (table, _) = build_mult_table(&p, divisor, 3);
        let rec = reconstruct_labeled_poset(&table).unwrap();
        assert_eq!(rec.len(), 2);
        let mut labels = rec.labels().to_vec();
        labels.sort();
        assert_eq!(labels, vec![LengthClass::Long, LengthClass::Short]);
        let direct = LabeledPoset::from_ideal(&p, divisor);
        assert!(rec.find_isomorphism(&direct).is_some());
    }

    #[test]
    fn reconstruction_is_seed_independent() {
        let p = poset(Family::D, 4, 1);
        for ideal in p.enumerate_ideals() {
            let direct = LabeledPoset::from_ideal(&p, ideal);
            for seed in [0, 1, 42] {
                let (table, _) = build_mult_table(&p, ideal, seed);
                let rec = reconstruct_labeled_poset(&table).unwrap();
                assert!(rec.find_isomorphism(&direct).is_some());
            }
        }
    }

    #[test]
    fn malformed_tables_are_rejected() {
        // Coefficient out of range.
        let t = MultTable {
            classes: 2,
            coeff: vec![vec![0, 0], vec![3, 0]],
        };
        assert!(matches!(
            reconstruct_labeled_poset(&t),
            Err(Error::MalformedTable(_))
        ));
        // Two zero rows.
        let t = MultTable {
            classes: 2,
            coeff: vec![vec![0, 0], vec![0, 0]],
        };
        assert!(matches!(
            reconstruct_labeled_poset(&t),
            Err(Error::MalformedTable(_))
        ));
        // Graded violation: an entry skipping a rank.
        let t = MultTable {
            classes: 3,
            coeff: vec![vec![0, 0, 0], vec![1, 0, 0], vec![1, 1, 0]],
        };
        assert!(matches!(
            reconstruct_labeled_poset(&t),
            Err(Error::MalformedTable(_))
        ));
    }
}
