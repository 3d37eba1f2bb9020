//! Reduced words and inversion sets for the minimal coset representatives.
//!
//! Every ideal `λ` of `P_X` determines a Weyl element `w_λ`; reading the box
//! assignments of `λ` along the canonical linear extension spells a reduced
//! word for it. Words store simple-reflection indices only and are applied
//! first-letter-first, so the inversion set of `reduced_word(λ)` recovers
//! exactly the roots of `λ`. That round trip is the executable form of the
//! ideal/coset bijection and would fail under any wrong order convention.

use crate::comin_poset::{CominPoset, Ideal};
use crate::root_system::{Root, RootSystem};

/// A word in the simple reflections, letters in application order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// The word `[δ(β_1), ..., δ(β_ℓ)]` over the canonical linear extension of
/// `λ`; reduced, with length `|λ|`.
pub fn reduced_word(p: &CominPoset, ideal: Ideal) -> Word {
    Word {
        letters: ideal.indices().map(|e| p.delta(e)).collect(),
    }
}

/// Applies `w` to a root, one simple reflection per letter.
pub fn act(rs: &RootSystem, w: &Word, a: &Root) -> Root {
    let mut out = a.clone();
    for &i in &w.letters {
        out = rs.reflect(&out, i);
    }
    out
}

/// The positive roots sent negative by `w`, in canonical root order.
pub fn inversion_set(rs: &RootSystem, w: &Word) -> Vec<Root> {
    rs.positive_roots()
        .iter()
        .filter(|a| !act(rs, w, a).is_positive())
        .cloned()
        .collect()
}

/// Parses a word literal: comma- or space-separated node indices.
pub fn parse_word(rs: &RootSystem, literal: &str) -> crate::error::Result<Word> {
    let mut letters = Vec::new();
    for part in literal.split(|c: char| c == ',' || c.is_whitespace()) {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let i: usize = part
            .parse()
            .map_err(|_| crate::error::Error::Parse(format!("bad letter `{part}`")))?;
        if i == 0 || i > rs.rank() {
            return Err(crate::error::Error::Parse(format!(
                "letter {i} out of range 1..={}",
                rs.rank()
            )));
        }
        letters.push(i);
    }
    Ok(Word { letters })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{DynkinType, Family};
    use std::collections::BTreeSet;

    fn poset(f: Family, n: usize, gamma: usize) -> CominPoset {
        let rs = RootSystem::build(DynkinType::new(f, n).unwrap());
        CominPoset::build(rs, gamma).unwrap()
    }

    fn roots_of(p: &CominPoset, ideal: Ideal) -> BTreeSet<Root> {
        ideal.indices().map(|e| p.element(e).clone()).collect()
    }

    #[test]
    fn empty_ideal_gives_identity() {
        let p = poset(Family::A, 3, 2);
        let w = reduced_word(&p, Ideal::EMPTY);
        assert!(w.is_empty());
        assert!(inversion_set(p.root_system(), &w).is_empty());
        for a in p.root_system().positive_roots() {
            assert_eq!(&act(p.root_system(), &w, a), a);
        }
    }

    #[test]
    fn singleton_gamma_gives_one_letter() {
        let p = poset(Family::C, 3, 3);
        let w = reduced_word(&p, Ideal::EMPTY.with(0));
        assert_eq!(w.letters(), &[3]);
        // s_γ negates only α_γ among positive roots when γ is cominuscule.
        let inv = inversion_set(p.root_system(), &w);
        assert_eq!(inv, vec![Root::simple(3, 3)]);
    }

    #[test]
    fn single_letter_negates_own_simple_root() {
        let p = poset(Family::A, 2, 1);
        let w = Word::new(vec![1]);
        let a1 = Root::simple(2, 1);
        assert_eq!(act(p.root_system(), &w, &a1), Root::new(vec![-1, 0]));
    }

    #[test]
    fn lg48_top_row_word() {
        let p = poset(Family::C, 4, 4);
        let corner = p
            .elements()
            .iter()
            .position(|r| r.coeffs() == [1, 1, 1, 1])
            .unwrap();
        let w = reduced_word(&p, p.principal_ideal(corner));
        assert_eq!(w.letters(), &[4, 3, 2, 1]);
    }

    #[test]
    fn word_sends_ideal_roots_negative() {
        let p = poset(Family::A, 3, 2); // Gr(2,4)
        for ideal in p.enumerate_ideals() {
            let w = reduced_word(&p, ideal);
            for e in ideal.indices() {
                assert!(!act(p.root_system(), &w, p.element(e)).is_positive());
            }
        }
    }

    #[test]
    fn inversion_set_round_trip_on_lg36() {
        // All 8 ideals of LG(3,6): the inversion set of the reduced word is
        // exactly the root set of the ideal, and lengths match.
        let p = poset(Family::C, 3, 3);
        let ideals = p.enumerate_ideals();
        assert_eq!(ideals.len(), 8);
        for ideal in ideals {
            let w = reduced_word(&p, ideal);
            assert_eq!(w.len(), ideal.size());
            let inv: BTreeSet<Root> =
                inversion_set(p.root_system(), &w).into_iter().collect();
            assert_eq!(inv, roots_of(&p, ideal));
        }
    }

    #[test]
    fn removing_a_maximal_box_shortens_the_inversion_set() {
        let p = poset(Family::D, 4, 1);
        for ideal in p.enumerate_ideals() {
            for e in p.maximal_elements(ideal) {
                let smaller = ideal.without(e);
                let w = reduced_word(&p, smaller);
                let inv: BTreeSet<Root> =
                    inversion_set(p.root_system(), &w).into_iter().collect();
                assert_eq!(inv, roots_of(&p, smaller));
            }
        }
    }

    #[test]
    fn containment_matches_inversion_containment() {
        let p = poset(Family::B, 3, 1);
        let ideals = p.enumerate_ideals();
        for &a in &ideals {
            for &b in &ideals {
                let inv_a: BTreeSet<Root> =
                    inversion_set(p.root_system(), &reduced_word(&p, a))
                        .into_iter()
                        .collect();
                let inv_b: BTreeSet<Root> =
                    inversion_set(p.root_system(), &reduced_word(&p, b))
                        .into_iter()
                        .collect();
                assert_eq!(a.is_subset(b), inv_a.is_subset(&inv_b));
            }
        }
    }

    #[test]
    fn parse_word_literals() {
        let rs = RootSystem::build(DynkinType::new(Family::C, 3).unwrap());
        assert_eq!(parse_word(&rs, "3,2,1").unwrap().letters(), &[3, 2, 1]);
        assert_eq!(parse_word(&rs, "3 2 1").unwrap().letters(), &[3, 2, 1]);
        assert!(parse_word(&rs, "0").is_err());
        assert!(parse_word(&rs, "4").is_err());
    }
}
