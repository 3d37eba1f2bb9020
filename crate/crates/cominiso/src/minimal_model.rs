//! Minimal cominuscule models: the smallest cominuscule flag variety
//! containing a given Schubert variety, found by classifying the marked
//! subdiagram on the ideal's support.
//!
//! The classification works on the abstract shape of the support diagram
//! (degrees plus edge weights), never on inherited node numbering, and
//! canonicalizes the coincidences between families: a rank-3 fork-free
//! "D" shape is just a path, dual Grassmannian markings fold onto the
//! smaller node, the two spinor markings of D agree, the two end markings
//! of E6 agree, and any tip of D4 is equivalent to node 1. Each of those
//! identifications is confirmed by a labeled-poset isomorphism in tests.

use std::collections::BTreeMap;

use crate::comin_poset::{CominPoset, Ideal};
use crate::error::{Error, Result};
use crate::root_system::Family;
use crate::space::{Space, SpaceId};

/// An edge-weighted tree with one distinguished vertex: the support
/// subdiagram of an ideal with the cominuscule node marked. `norms` carries
/// the squared length of each vertex's simple root so that double bonds
/// know their orientation.
#[derive(Debug, Clone)]
pub struct MarkedDiagram {
    vertices: Vec<usize>,
    edges: Vec<(usize, usize, u8)>,
    norms: BTreeMap<usize, i64>,
    marked: usize,
}

impl MarkedDiagram {
    pub fn new(
        vertices: Vec<usize>,
        edges: Vec<(usize, usize, u8)>,
        norms: BTreeMap<usize, i64>,
        marked: usize,
    ) -> Self {
        assert!(vertices.contains(&marked));
        MarkedDiagram {
            vertices,
            edges,
            norms,
            marked,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize, u8)] {
        &self.edges
    }

    pub fn marked(&self) -> usize {
        self.marked
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b, _) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out.sort();
        out
    }

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// Walks a path starting at a degree-<=1 vertex.
    fn walk_from(&self, start: usize) -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = None;
        let mut at = start;
        loop {
            let next: Vec<usize> = self
                .neighbors(at)
                .into_iter()
                .filter(|&v| Some(v) != prev)
                .collect();
            match next.as_slice() {
                [] => return order,
                [v] => {
                    order.push(*v);
                    prev = Some(at);
                    at = *v;
                }
                _ => panic!("walk_from used on a non-path"),
            }
        }
    }

    /// Walks away from `from` through `start` until a tip.
    fn arm(&self, from: usize, start: usize) -> Vec<usize> {
        let mut order = vec![start];
        let mut prev = from;
        let mut at = start;
        loop {
            let next: Vec<usize> = self
                .neighbors(at)
                .into_iter()
                .filter(|&v| v != prev)
                .collect();
            match next.as_slice() {
                [] => return order,
                [v] => {
                    order.push(*v);
                    prev = at;
                    at = *v;
                }
                _ => panic!("nested fork"),
            }
        }
    }
}

/// The full subdiagram of the ambient Dynkin diagram on the support of
/// `ideal`, with the cominuscule node marked.
pub fn restricted_diagram(p: &CominPoset, ideal: Ideal) -> Result<MarkedDiagram> {
    if ideal.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let rs = p.root_system();
    let support: Vec<usize> = p.support(ideal).into_iter().collect();
    let mut edges = Vec::new();
    for (k, &u) in support.iter().enumerate() {
        for &v in &support[k + 1..] {
            if rs.adjacent(u, v) {
                let weight = (rs.cartan(u, v) * rs.cartan(v, u)) as u8;
                edges.push((u, v, weight));
            }
        }
    }
    let norms: BTreeMap<usize, i64> = support
        .iter()
        .map(|&v| {
            let a = crate::root_system::Root::simple(rs.rank(), v);
            (v, rs.inner_product(&a, &a))
        })
        .collect();
    let diagram = MarkedDiagram::new(support, edges, norms, p.gamma());
    debug_assert!(diagram.edges.len() + 1 == diagram.vertices.len());
    Ok(diagram)
}

/// A recognized diagram: the canonical space plus the vertex relabeling
/// into its Bourbaki numbering.
#[derive(Debug, Clone)]
pub struct Classified {
    pub space: SpaceId,
    pub relabel: BTreeMap<usize, usize>,
}

/// Recognizes the family, rank, and marked node of a marked diagram and
/// maps it onto the canonical representative. When the diagram has a
/// symmetry the lexicographically least relabeling is returned.
pub fn classify_marked(d: &MarkedDiagram) -> Result<Classified> {
    let n = d.vertices.len();
    let fail = |msg: &str| Error::NotCominusculeDiagram(msg.to_string());

    if d.edges.len() + 1 != n {
        return Err(fail("diagram is not a tree"));
    }
    if d.vertices.iter().any(|&v| d.degree(v) > 3) {
        return Err(fail("vertex of degree greater than three"));
    }
    for &(u, v, w) in &d.edges {
        let (nu, nv) = (d.norms[&u], d.norms[&v]);
        let consistent = match w {
            1 => nu == nv,
            2 => nu == 2 * nv || nv == 2 * nu,
            _ => false,
        };
        if !consistent {
            return Err(fail("edge weight inconsistent with root lengths"));
        }
    }

    let forks: Vec<usize> = d
        .vertices
        .iter()
        .copied()
        .filter(|&v| d.degree(v) == 3)
        .collect();
    let doubles: Vec<(usize, usize)> = d
        .edges
        .iter()
        .filter(|&&(_, _, w)| w == 2)
        .map(|&(u, v, _)| (u, v))
        .collect();
    if doubles.len() > 1 {
        return Err(fail("more than one double bond"));
    }

    if let Some(&(u, v)) = doubles.first() {
        if !forks.is_empty() {
            return Err(fail("double bond on a forked diagram"));
        }
        let (long_end, short_end) = if d.norms[&u] > d.norms[&v] {
            (u, v)
        } else {
            (v, u)
        };
        if n == 2 {
            // A two-vertex double bond marked at the long end is the
            // three-dimensional quadric; the flipped reading is the same
            // marked diagram, canonicalized here.
            if d.marked != long_end {
                return Err(fail("marked node of a doubly-laced pair must be long"));
            }
            let space = SpaceId::new(Family::B, 2, 1)?;
            let relabel = BTreeMap::from([(long_end, 1), (short_end, 2)]);
            return Ok(Classified { space, relabel });
        }
        let tip = if d.degree(u) == 1 {
            u
        } else if d.degree(v) == 1 {
            v
        } else {
            return Err(fail("double bond must sit at the end of the path"));
        };
        let order = d.walk_from(tip);
        let far = *order.last().expect("path of length >= 3");
        if d.marked == tip && tip == long_end {
            // Lagrangian shape: short path body, long marked end on the
            // double bond.
            let space = SpaceId::new(Family::C, n, n)?;
            let relabel = order
                .iter()
                .enumerate()
                .map(|(k, &v)| (v, n - k))
                .collect();
            return Ok(Classified { space, relabel });
        }
        if d.marked == far && tip == short_end {
            // Odd-quadric shape: long path body ending in a short root.
            let space = SpaceId::new(Family::B, n, 1)?;
            let relabel = order
                .iter()
                .enumerate()
                .map(|(k, &v)| (v, n - k))
                .collect();
            return Ok(Classified { space, relabel });
        }
        return Err(fail("marking not cominuscule for a doubly-laced path"));
    }

    match forks.as_slice() {
        [] => {
            // Simply-laced path: a Grassmannian, marked node folded to the
            // smaller side.
            if n == 1 {
                let space = SpaceId::new(Family::A, 1, 1)?;
                let relabel = BTreeMap::from([(d.marked, 1)]);
                return Ok(Classified { space, relabel });
            }
            let ends: Vec<usize> = d
                .vertices
                .iter()
                .copied()
                .filter(|&v| d.degree(v) == 1)
                .collect();
            let order = d.walk_from(ends[0]);
            let pos = order.iter().position(|&v| v == d.marked).unwrap() + 1;
            let node = pos.min(n + 1 - pos);
            let forward: BTreeMap<usize, usize> =
                order.iter().enumerate().map(|(k, &v)| (v, k + 1)).collect();
            let backward: BTreeMap<usize, usize> =
                order.iter().enumerate().map(|(k, &v)| (v, n - k)).collect();
            let relabel = if pos < n + 1 - pos {
                forward
            } else if pos > n + 1 - pos {
                backward
            } else {
                lexicographically_least(vec![forward, backward])
            };
            let space = SpaceId::new(Family::A, n, node)?;
            Ok(Classified { space, relabel })
        }
        [fork] => {
            let fork = *fork;
            let mut arms: Vec<Vec<usize>> = d
                .neighbors(fork)
                .into_iter()
                .map(|nb| d.arm(fork, nb))
                .collect();
            arms.sort_by_key(|arm| std::cmp::Reverse(arm.len()));
            let (a, b, c) = (arms[0].len(), arms[1].len(), arms[2].len());
            if c != 1 {
                return Err(fail("three arms of length at least two"));
            }
            if b == 1 {
                // D shape of rank a + 3.
                let rank = a + 3;
                let long_tip = *arms[0].last().unwrap();
                let short_tips = [arms[1][0], arms[2][0]];
                if a > 1 && d.marked == long_tip {
                    // Even quadric: mark the end of the long arm.
                    let mut relabel = BTreeMap::new();
                    for (k, &v) in arms[0].iter().rev().enumerate() {
                        relabel.insert(v, k + 1);
                    }
                    relabel.insert(fork, rank - 2);
                    let choices = vec![
                        with_entries(&relabel, &[(short_tips[0], rank - 1), (short_tips[1], rank)]),
                        with_entries(&relabel, &[(short_tips[0], rank), (short_tips[1], rank - 1)]),
                    ];
                    let space = SpaceId::new(Family::D, rank, 1)?;
                    return Ok(Classified {
                        space,
                        relabel: lexicographically_least(choices),
                    });
                }
                if a == 1 && [long_tip, short_tips[0], short_tips[1]].contains(&d.marked) {
                    // Any tip of the triality diagram canonicalizes to the
                    // quadric marking.
                    let others: Vec<usize> = [long_tip, short_tips[0], short_tips[1]]
                        .into_iter()
                        .filter(|&v| v != d.marked)
                        .collect();
                    let base = BTreeMap::from([(d.marked, 1), (fork, 2)]);
                    let choices = vec![
                        with_entries(&base, &[(others[0], 3), (others[1], 4)]),
                        with_entries(&base, &[(others[0], 4), (others[1], 3)]),
                    ];
                    let space = SpaceId::new(Family::D, 4, 1)?;
                    return Ok(Classified {
                        space,
                        relabel: lexicographically_least(choices),
                    });
                }
                if short_tips.contains(&d.marked) {
                    // Maximal orthogonal Grassmannian: both spinor markings
                    // fold onto node `rank`.
                    let other_short = short_tips
                        .into_iter()
                        .find(|&v| v != d.marked)
                        .unwrap();
                    let mut relabel =
                        BTreeMap::from([(d.marked, rank), (other_short, rank - 1), (fork, rank - 2)]);
                    for (k, &v) in arms[0].iter().enumerate() {
                        relabel.insert(v, rank - 3 - k);
                    }
                    let space = SpaceId::new(Family::D, rank, rank)?;
                    return Ok(Classified { space, relabel });
                }
                return Err(fail("marking not cominuscule for a D-shaped diagram"));
            }
            // b == 2: the exceptional shapes.
            match a {
                2 => {
                    // E6: marked at the tip of one of the two long arms.
                    let marked_arm = arms[..2]
                        .iter()
                        .find(|arm| *arm.last().unwrap() == d.marked)
                        .ok_or_else(|| fail("marking not cominuscule for an E6 diagram"))?;
                    let other_arm = arms[..2]
                        .iter()
                        .find(|arm| *arm.last().unwrap() != d.marked)
                        .unwrap();
                    let relabel = BTreeMap::from([
                        (marked_arm[1], 6),
                        (marked_arm[0], 5),
                        (fork, 4),
                        (other_arm[0], 3),
                        (other_arm[1], 1),
                        (arms[2][0], 2),
                    ]);
                    let space = SpaceId::new(Family::E, 6, 6)?;
                    Ok(Classified { space, relabel })
                }
                3 => {
                    // E7: marked at the tip of the long arm.
                    if *arms[0].last().unwrap() != d.marked {
                        return Err(fail("marking not cominuscule for an E7 diagram"));
                    }
                    let relabel = BTreeMap::from([
                        (arms[0][2], 7),
                        (arms[0][1], 6),
                        (arms[0][0], 5),
                        (fork, 4),
                        (arms[1][0], 3),
                        (arms[1][1], 1),
                        (arms[2][0], 2),
                    ]);
                    let space = SpaceId::new(Family::E, 7, 7)?;
                    Ok(Classified { space, relabel })
                }
                _ => Err(fail("forked diagram outside the classification")),
            }
        }
        _ => Err(fail("more than one fork")),
    }
}

fn with_entries(
    base: &BTreeMap<usize, usize>,
    extra: &[(usize, usize)],
) -> BTreeMap<usize, usize> {
    let mut out = base.clone();
    out.extend(extra.iter().copied());
    out
}

/// Smallest map under comparison of outputs in input order.
fn lexicographically_least(choices: Vec<BTreeMap<usize, usize>>) -> BTreeMap<usize, usize> {
    choices
        .into_iter()
        .min_by_key(|m| m.values().copied().collect::<Vec<_>>())
        .expect("at least one choice")
}

/// Where a Schubert variety minimally lives: the distinguished point space
/// for the empty ideal, otherwise a canonical space with the transported
/// ideal.
#[derive(Debug, Clone)]
pub struct MinimalModel {
    /// `None` exactly for the point (empty ideal).
    pub space: Option<Space>,
    /// Support node of the ambient space -> node of the minimal space.
    pub relabel: BTreeMap<usize, usize>,
    /// The ideal transported into the minimal space; empty for the point.
    pub ideal: Ideal,
}

/// Comparable fingerprint of a minimal model, with the transported ideal
/// canonicalized over the marked diagram's self-symmetries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModelKey {
    pub space: Option<SpaceId>,
    pub mask: u32,
}

impl MinimalModel {
    pub fn model_string(&self) -> String {
        match &self.space {
            None => "point".to_string(),
            Some(space) => format!("{}:{}", space.id, space.poset.ideal_literal(self.ideal)),
        }
    }

    /// Canonical string: like [`model_string`](Self::model_string) but with
    /// the ideal minimized over diagram symmetries.
    pub fn canonical_string(&self) -> String {
        match &self.space {
            None => "point".to_string(),
            Some(space) => {
                let key = self.key();
                format!(
                    "{}:{}",
                    space.id,
                    space.poset.ideal_literal(Ideal::from_mask_unchecked(key.mask))
                )
            }
        }
    }

    pub fn key(&self) -> ModelKey {
        match &self.space {
            None => ModelKey {
                space: None,
                mask: 0,
            },
            Some(space) => {
                let mask = marked_automorphisms(space.id)
                    .iter()
                    .map(|perm| apply_node_permutation(space, perm, self.ideal).mask())
                    .min()
                    .expect("identity is always present");
                ModelKey {
                    space: Some(space.id),
                    mask,
                }
            }
        }
    }
}

impl Ideal {
    /// Only for reassembling a mask that came out of [`ModelKey`].
    pub(crate) fn from_mask_unchecked(mask: u32) -> Ideal {
        let mut out = Ideal::EMPTY;
        for e in 0..32 {
            if mask & (1 << e) != 0 {
                out = out.with(e);
            }
        }
        out
    }
}

/// Computes the minimal cominuscule model of `(p, ideal)` and transports
/// the ideal into it through the support relabeling.
pub fn minimal_embedding(p: &CominPoset, ideal: Ideal) -> Result<MinimalModel> {
    if ideal.is_empty() {
        return Ok(MinimalModel {
            space: None,
            relabel: BTreeMap::new(),
            ideal: Ideal::EMPTY,
        });
    }
    let diagram = restricted_diagram(p, ideal)?;
    let classified = classify_marked(&diagram)?;
    let space = classified.space.build()?;
    let target = &space.poset;
    let rank = target.root_system().rank();

    let mut transported = Ideal::EMPTY;
    for e in ideal.indices() {
        let root = p.element(e);
        let mut coeffs = vec![0i64; rank];
        for i in 1..=p.root_system().rank() {
            let c = root.coeff(i);
            if c != 0 {
                let mapped = *classified.relabel.get(&i).ok_or_else(|| {
                    Error::InternalInconsistency(format!(
                        "root {root} uses node {i} outside the support"
                    ))
                })?;
                coeffs[mapped - 1] = c;
            }
        }
        let idx = target
            .elements()
            .iter()
            .position(|r| r.coeffs() == coeffs)
            .ok_or_else(|| {
                Error::InternalInconsistency(format!(
                    "transported root {coeffs:?} missing from the minimal poset"
                ))
            })?;
        transported = transported.with(idx);
    }

    if transported.size() != ideal.size() || !target.is_ideal(transported) {
        return Err(Error::InternalInconsistency(
            "transport did not produce an ideal of equal size".into(),
        ));
    }
    if target.support(transported).len() != rank {
        return Err(Error::InternalInconsistency(
            "transported ideal does not have full support in its minimal space".into(),
        ));
    }

    Ok(MinimalModel {
        space: Some(space),
        relabel: classified.relabel,
        ideal: transported,
    })
}

/// Node permutations generating the symmetries of a marked diagram: the
/// flip of a middle-marked Grassmannian and the spinor swap of an even
/// quadric; everything else is rigid. `perm[i-1]` is the image of node `i`.
pub fn marked_automorphisms(id: SpaceId) -> Vec<Vec<usize>> {
    let n = id.rank;
    let identity: Vec<usize> = (1..=n).collect();
    let mut perms = vec![identity.clone()];
    match id.family {
        Family::A if n + 1 == 2 * id.node => {
            perms.push((1..=n).map(|i| n + 1 - i).collect());
        }
        Family::D if id.node == 1 => {
            let mut swap = identity;
            swap.swap(n - 2, n - 1);
            perms.push(swap);
        }
        _ => {}
    }
    perms
}

/// Transports an ideal through a node permutation of its own space.
pub fn apply_node_permutation(space: &Space, perm: &[usize], ideal: Ideal) -> Ideal {
    let p = &space.poset;
    let rank = p.root_system().rank();
    let mut out = Ideal::EMPTY;
    for e in ideal.indices() {
        let root = p.element(e);
        let mut coeffs = vec![0i64; rank];
        for i in 1..=rank {
            coeffs[perm[i - 1] - 1] = root.coeff(i);
        }
        let idx = p
            .elements()
            .iter()
            .position(|r| r.coeffs() == coeffs)
            .expect("node permutation must preserve the poset");
        out = out.with(idx);
    }
    out
}
