//! Space identifiers `<Family><rank>/P<node>` and their parsed form.

use std::fmt;
use std::str::FromStr;

use crate::comin_poset::CominPoset;
use crate::error::{Error, Result};
use crate::root_system::{DynkinType, Family, RootSystem};

/// A cominuscule flag variety named by Dynkin type and marked node,
/// e.g. `A5/P2`, `D5/P5`, `E7/P7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpaceId {
    pub family: Family,
    pub rank: usize,
    pub node: usize,
}

impl SpaceId {
    /// Validates the rank bounds and the cominuscule condition on the node.
    pub fn new(family: Family, rank: usize, node: usize) -> Result<Self> {
        let t = DynkinType::new(family, rank)?;
        let rs = RootSystem::build(t);
        if !rs.cominuscule_nodes().contains(&node) {
            let valid = rs
                .cominuscule_nodes()
                .iter()
                .map(|n| format!("P{n}"))
                .collect::<Vec<_>>()
                .join(", ");
            return Err(Error::NotCominuscule {
                space: t.to_string(),
                node,
                valid,
            });
        }
        Ok(SpaceId { family, rank, node })
    }

    /// Classical name of the space, when it has one.
    pub fn common_name(&self) -> String {
        let n = self.rank;
        match self.family {
            Family::A if self.node == 1 || self.node == n => format!("P^{n}"),
            Family::A => format!("Gr({},{})", self.node, n + 1),
            Family::B => format!("Q^{}", 2 * n - 1),
            Family::C => format!("LG({n},{})", 2 * n),
            Family::D if self.node == 1 => format!("Q^{}", 2 * n - 2),
            Family::D => format!("OG({n},{})", 2 * n),
            Family::E if n == 6 => "Cayley plane".to_string(),
            Family::E => "Freudenthal variety".to_string(),
        }
    }

    pub fn build(&self) -> Result<Space> {
        let rs = RootSystem::build(DynkinType::new(self.family, self.rank)?);
        let poset = CominPoset::build(rs, self.node)?;
        Ok(Space { id: *self, poset })
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}/P{}", self.family, self.rank, self.node)
    }
}

impl FromStr for SpaceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "space id must look like `A5/P2`, `D5/P5`, `E7/P7`; got `{s}`"
            ))
        };
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().ok_or_else(bad)? {
            'A' | 'a' => Family::A,
            'B' | 'b' => Family::B,
            'C' | 'c' => Family::C,
            'D' | 'd' => Family::D,
            'E' | 'e' => Family::E,
            _ => return Err(bad()),
        };
        let rest: &str = chars.as_str();
        let (rank_str, node_str) = rest.split_once("/P").ok_or_else(bad)?;
        let rank: usize = rank_str.parse().map_err(|_| bad())?;
        let node: usize = node_str.parse().map_err(|_| bad())?;
        SpaceId::new(family, rank, node)
    }
}

/// A built space: identifier plus its labeled poset.
#[derive(Debug, Clone)]
pub struct Space {
    pub id: SpaceId,
    pub poset: CominPoset,
}

impl Space {
    pub fn parse(s: &str) -> Result<Space> {
        s.parse::<SpaceId>()?.build()
    }

    pub fn dimension(&self) -> usize {
        self.poset.len()
    }
}
