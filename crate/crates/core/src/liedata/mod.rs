//! Simple types, exponents, Kac-basis coordinate frames and Weyl-invariant
//! generators.

mod frame;
mod invariants;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

pub use frame::{
    canonical_frame, cartan_of, explicit_second_category, free_coordinates, kac_basis_matrix, CoordinateFrame, Twist,
};
pub use invariants::{invariant_generators, GeneratorSet, InvariantGenerator, Shape, Variant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// A simple Lie type such as `A5` or `F4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    family: Family,
    rank: u32,
}

impl SimpleType {
    /// Ambient-style bounds: `A_n n≥1, B_n n≥2, C_n n≥3, D_n n≥4`.
    pub fn new(family: Family, rank: u32) -> Result<SimpleType> {
        let min = match family {
            Family::A => 1,
            Family::B => 2,
            Family::C => 3,
            Family::D => 4,
            _ => 0,
        };
        SimpleType::checked(family, rank, min)
    }

    /// Bounds for a simple summand of a fixed-point algebra, where the
    /// low-rank coincidences (`B1 = C1 = A1`, `C2 = B2`, `D3 = A3`, and the
    /// non-simple `D2 = A1 ⊕ A1`) keep their classical coordinates.
    pub fn summand(family: Family, rank: u32) -> Result<SimpleType> {
        let min = match family {
            Family::D => 2,
            Family::A | Family::B | Family::C => 1,
            _ => 0,
        };
        SimpleType::checked(family, rank, min)
    }

    fn checked(family: Family, rank: u32, min: u32) -> Result<SimpleType> {
        let fixed = match family {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        };
        let ok = match fixed {
            Some(r) => rank == r,
            None => rank >= min,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: format!("{family:?}"),
                rank,
            })
        }
    }

    pub fn a(n: u32) -> SimpleType {
        SimpleType::summand(Family::A, n).expect("A_n rank")
    }
    pub fn b(n: u32) -> SimpleType {
        SimpleType::summand(Family::B, n).expect("B_n rank")
    }
    pub fn c(n: u32) -> SimpleType {
        SimpleType::summand(Family::C, n).expect("C_n rank")
    }
    pub fn d(n: u32) -> SimpleType {
        SimpleType::summand(Family::D, n).expect("D_n rank")
    }
    pub const G2: SimpleType = SimpleType {
        family: Family::G2,
        rank: 2,
    };
    pub const F4: SimpleType = SimpleType {
        family: Family::F4,
        rank: 4,
    };
    pub const E6: SimpleType = SimpleType {
        family: Family::E6,
        rank: 6,
    };
    pub const E7: SimpleType = SimpleType {
        family: Family::E7,
        rank: 7,
    };
    pub const E8: SimpleType = SimpleType {
        family: Family::E8,
        rank: 8,
    };

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> u32 {
        self.rank
    }

    /// Satisfies the ambient bounds of [`SimpleType::new`].
    pub fn is_ambient_rank(self) -> bool {
        SimpleType::new(self.family, self.rank).is_ok()
    }

    /// Dimension of the Lie algebra.
    pub fn dim(self) -> u32 {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 2),
            Family::B | Family::C => n * (2 * n + 1),
            Family::D => n * (2 * n - 1),
            Family::G2 => 14,
            Family::F4 => 52,
            Family::E6 => 78,
            Family::E7 => 133,
            Family::E8 => 248,
        }
    }

    pub fn exponents(self) -> ExponentMultiset {
        exponents(self)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::C => write!(f, "C{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::G2 => write!(f, "G2"),
            Family::F4 => write!(f, "F4"),
            Family::E6 => write!(f, "E6"),
            Family::E7 => write!(f, "E7"),
            Family::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    /// Parses `A5`, `d4`, `G2`, … with summand-level rank bounds.
    fn from_str(s: &str) -> Result<SimpleType> {
        let s = s.trim();
        let bad = || Error::InvalidDescriptor(format!("unknown simple type `{s}`"));
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rank: u32 = chars.as_str().parse().map_err(|_| bad())?;
        let family = match (head, rank) {
            ('A', _) => Family::A,
            ('B', _) => Family::B,
            ('C', _) => Family::C,
            ('D', _) => Family::D,
            ('G', 2) => Family::G2,
            ('F', 4) => Family::F4,
            ('E', 6) => Family::E6,
            ('E', 7) => Family::E7,
            ('E', 8) => Family::E8,
            _ => return Err(bad()),
        };
        SimpleType::summand(family, rank)
    }
}

/// Exponents `k` with multiplicities `ν(k)`, sorted by `k`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExponentMultiset {
    entries: Vec<(u32, u32)>,
}

impl ExponentMultiset {
    pub fn from_list(ks: &[u32]) -> ExponentMultiset {
        let mut m = ExponentMultiset::default();
        for &k in ks {
            m.add(k, 1);
        }
        m
    }

    pub fn add(&mut self, k: u32, mult: u32) {
        if mult == 0 {
            return;
        }
        match self.entries.binary_search_by_key(&k, |e| e.0) {
            Ok(i) => self.entries[i].1 += mult,
            Err(i) => self.entries.insert(i, (k, mult)),
        }
    }

    /// Multiset union.
    pub fn union(&self, other: &ExponentMultiset) -> ExponentMultiset {
        let mut out = self.clone();
        for &(k, m) in &other.entries {
            out.add(k, m);
        }
        out
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    pub fn nu(&self, k: u32) -> u32 {
        self.entries
            .binary_search_by_key(&k, |e| e.0)
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn contains(&self, k: u32) -> bool {
        self.nu(k) > 0
    }

    /// Σ ν(k), i.e. the rank.
    pub fn total(&self) -> u32 {
        self.entries.iter().map(|e| e.1).sum()
    }

    /// Every exponent repeated by its multiplicity.
    pub fn flatten(&self) -> Vec<u32> {
        self.entries
            .iter()
            .flat_map(|&(k, m)| core::iter::repeat(k).take(m as usize))
            .collect()
    }
}

impl fmt::Display for ExponentMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.flatten().iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn exponents(t: SimpleType) -> ExponentMultiset {
    let n = t.rank;
    let list: Vec<u32> = match t.family {
        Family::A => (2..=n + 1).collect(),
        Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
        Family::D => {
            let mut v: Vec<u32> = (1..n).map(|i| 2 * i).collect();
            v.push(n);
            v
        }
        Family::G2 => alloc::vec![2, 6],
        Family::F4 => alloc::vec![2, 6, 8, 12],
        Family::E6 => alloc::vec![2, 5, 6, 8, 9, 12],
        Family::E7 => alloc::vec![2, 6, 8, 10, 12, 14, 18],
        Family::E8 => alloc::vec![2, 8, 12, 14, 18, 20, 24, 30],
    };
    ExponentMultiset::from_list(&list)
}
