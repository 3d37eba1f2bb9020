//! Root systems of types A, B, C, D, E6, E7 in Bourbaki numbering.
//!
//! Roots are stored as integer coefficient vectors over the simple roots, so
//! every computation in the crate is exact. The inner product comes from the
//! symmetrized Cartan matrix: `(α_i, α_j) = d_i * A[i][j]` with the minimal
//! positive integer symmetrizer `d`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// The five Dynkin families carrying cominuscule nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
        }
    }

    /// Admissible rank range, matching the classification table.
    pub fn rank_bounds(self) -> &'static str {
        match self {
            Family::A => "n >= 1",
            Family::B => "n >= 2",
            Family::C => "n >= 3",
            Family::D => "n >= 4",
            Family::E => "n in {6, 7}",
        }
    }

    fn admits_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => rank == 6 || rank == 7,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A Dynkin type: family plus rank, validated against the admissible bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.admits_rank(rank) {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                expected: family.rank_bounds(),
            });
        }
        Ok(DynkinType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots, from the classical count.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E if n == 6 => 36,
            Family::E => 63,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root, written as `Σ coeffs[i-1] · α_i` over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    /// i-th simple root (1-based node index).
    pub fn simple(rank: usize, node: usize) -> Self {
        let mut coeffs = vec![0; rank];
        coeffs[node - 1] = 1;
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `α_node` (1-based).
    pub fn coeff(&self, node: usize) -> i64 {
        self.coeffs[node - 1]
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    /// Coefficientwise comparison: `self <= other` in the root order,
    /// i.e. `other - self` is a non-negative sum of simple roots.
    pub fn leq(&self, other: &Root) -> bool {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| a <= b)
    }

    fn minus(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Long/short length class of a root. In simply-laced types every root is
/// `Long`; in B and C exactly two squared lengths occur, with ratio 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LengthClass {
    Long,
    Short,
}

impl fmt::Display for LengthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthClass::Long => write!(f, "long"),
            LengthClass::Short => write!(f, "short"),
        }
    }
}

/// A root system with its Cartan data and the derived positive roots.
///
/// `cartan[i][j]` is the pairing `<α_j, α_i> = 2(α_j, α_i)/(α_i, α_i)`
/// (0-based storage, 1-based accessors). `positive_roots` is sorted by
/// (height, lexicographic coefficients); this ordering is what makes every
/// downstream canonical linear extension reproducible.
#[derive(Debug, Clone)]
pub struct RootSystem {
    dynkin_type: DynkinType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    highest_root: Root,
    cominuscule_nodes: Vec<usize>,
    max_norm: i64,
}

impl RootSystem {
    /// Builds the root system for `t`, generating positive roots by closure
    /// from the simple roots via root strings.
    pub fn build(t: DynkinType) -> Self {
        let rank = t.rank();
        let cartan = cartan_matrix(t);
        let symmetrizer = symmetrizer(&cartan);

        let mut rs = RootSystem {
            dynkin_type: t,
            cartan,
            symmetrizer,
            positive_roots: Vec::new(),
            highest_root: Root::new(vec![0; rank]),
            cominuscule_nodes: Vec::new(),
            max_norm: 0,
        };
        rs.generate_positive_roots();

        rs.max_norm = rs
            .positive_roots
            .iter()
            .map(|a| rs.inner_product(a, a))
            .max()
            .expect("non-empty root system");
        rs.highest_root = rs.positive_roots.last().cloned().expect("non-empty");
        assert!(
            rs.positive_roots.iter().all(|a| a.leq(&rs.highest_root)),
            "highest root must dominate all positive roots"
        );
        rs.cominuscule_nodes = (1..=rank)
            .filter(|&i| rs.highest_root.coeff(i) == 1)
            .collect();
        assert_eq!(
            rs.positive_roots.len(),
            t.positive_root_count(),
            "positive root count must match the classical formula for {t}"
        );
        rs
    }

    fn generate_positive_roots(&mut self) {
        let rank = self.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut level: Vec<Root> = (1..=rank).map(|i| Root::simple(rank, i)).collect();
        for r in &level {
            seen.insert(r.coeffs.clone());
        }
        let mut all = level.clone();

        while !level.is_empty() {
            let mut next = Vec::new();
            for beta in &level {
                for i in 1..=rank {
                    // Walk the α_i-string downward from β to find p, then
                    // β + α_i is a root iff p - <β, α_i> >= 1.
                    let mut p = 0i64;
                    let mut down = beta.clone();
                    loop {
                        down.coeffs[i - 1] -= 1;
                        if seen.contains(&down.coeffs) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - self.pairing(beta, i) >= 1 {
                        let mut up = beta.clone();
                        up.coeffs[i - 1] += 1;
                        if seen.insert(up.coeffs.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            level = next;
        }

        all.sort_by(|a, b| (a.height(), &a.coeffs).cmp(&(b.height(), &b.coeffs)));
        self.positive_roots = all;
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.dynkin_type
    }

    pub fn rank(&self) -> usize {
        self.dynkin_type.rank()
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn symmetrizer_entry(&self, i: usize) -> i64 {
        self.symmetrizer[i - 1]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    /// Nodes whose simple root has coefficient 1 in the highest root.
    pub fn cominuscule_nodes(&self) -> &[usize] {
        &self.cominuscule_nodes
    }

    /// Whether nodes `i` and `j` are joined in the Dynkin diagram.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan(i, j) != 0
    }

    /// `(a, b) = Σ a_i b_j d_i A[i][j]`, the symmetrized bilinear form.
    pub fn inner_product(&self, a: &Root, b: &Root) -> i64 {
        let rank = self.rank();
        let mut total = 0;
        for i in 0..rank {
            if a.coeffs[i] == 0 {
                continue;
            }
            for j in 0..rank {
                total += a.coeffs[i] * b.coeffs[j] * self.symmetrizer[i] * self.cartan[i][j];
            }
        }
        total
    }

    /// `<a, α_i> = 2(a, α_i)/(α_i, α_i)`, linear in `a`.
    pub fn pairing(&self, a: &Root, i: usize) -> i64 {
        self.cartan[i - 1]
            .iter()
            .zip(&a.coeffs)
            .map(|(c, x)| c * x)
            .sum()
    }

    /// Simple reflection `s_i(a) = a - <a, α_i> α_i`; an involution.
    pub fn reflect(&self, a: &Root, i: usize) -> Root {
        let mut out = a.clone();
        out.coeffs[i - 1] -= self.pairing(a, i);
        out
    }

    /// `Long` iff the squared length of `a` is maximal among all roots.
    pub fn length_class(&self, a: &Root) -> Result<LengthClass> {
        if !self.is_root(a) {
            return Err(Error::NotARoot(a.coeffs.clone()));
        }
        Ok(self.length_class_unchecked(a))
    }

    pub(crate) fn length_class_unchecked(&self, a: &Root) -> LengthClass {
        if self.inner_product(a, a) == self.max_norm {
            LengthClass::Long
        } else {
            LengthClass::Short
        }
    }

    pub fn is_root(&self, a: &Root) -> bool {
        if a.coeffs.len() != self.rank() {
            return false;
        }
        self.positive_roots.contains(a) || self.positive_roots.contains(&a.minus())
    }

    /// Locates a positive root in the canonical ordering.
    pub fn positive_root_index(&self, a: &Root) -> Option<usize> {
        self.positive_roots.iter().position(|r| r == a)
    }
}

fn cartan_matrix(t: DynkinType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let edges: Vec<(usize, usize)> = match t.family() {
        Family::A | Family::B | Family::C => (1..n).map(|i| (i, i + 1)).collect(),
        Family::D => (1..n - 1)
            .map(|i| (i, i + 1))
            .chain(std::iter::once((n - 2, n)))
            .collect(),
        Family::E => {
            let mut e: Vec<(usize, usize)> = (3..n).map(|i| (i, i + 1)).collect();
            e.push((1, 3));
            e.push((2, 4));
            e
        }
    };

    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    for &(u, v) in &edges {
        a[u - 1][v - 1] = -1;
        a[v - 1][u - 1] = -1;
    }
    // Double bonds: in B_n the short root α_n gives <α_{n-1}, α_n> = -2,
    // in C_n the long root α_n gives <α_n, α_{n-1}> = -2.
    match t.family() {
        Family::B => a[n - 1][n - 2] = -2,
        Family::C => a[n - 2][n - 1] = -2,
        _ => {}
    }
    a
}

/// Minimal positive integers `d` with `d_i A[i][j] = d_j A[j][i]`.
///
/// All admissible types are at most doubly laced, so the ratios along edges
/// are powers of two and can be propagated as exponents.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut exp = vec![i32::MIN; n];
    exp[0] = 0;
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        for j in 0..n {
            if i != j && cartan[i][j] != 0 && exp[j] == i32::MIN {
                // d_j = d_i * A[i][j] / A[j][i]
                let (aij, aji) = (cartan[i][j], cartan[j][i]);
                let delta = match (aij, aji) {
                    (-1, -1) => 0,
                    (-2, -1) => 1,
                    (-1, -2) => -1,
                    _ => panic!("unexpected Cartan entries ({aij}, {aji})"),
                };
                exp[j] = exp[i] + delta;
                queue.push(j);
            }
        }
    }
    let min = *exp.iter().min().expect("connected diagram");
    assert!(exp.iter().all(|&e| e != i32::MIN), "diagram must be connected");
    exp.iter().map(|&e| 1i64 << (e - min)).collect()
}
