//! Dynkin diagrams and Cartan pairings for the finite types.
//!
//! Root indices are 1-based everywhere in the public surface, following the
//! usual vertex labels (in the E series vertex 2 hangs off vertex 4).
//! `RootData::pairing(i, j)` is `<alpha_i, alpha_j^vee>`, the row-`i`,
//! column-`j` entry of the Cartan matrix as tabulated below: in type B the
//! entry at `(r-1, r)` is `-2`, in type C the entry at `(r, r-1)` is `-2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{check_index, Error, Result};

/// Ranks above this are rejected unless a caller raises the cap.
pub const DEFAULT_MAX_RANK: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn bound_text(self) -> &'static str {
        match self {
            Family::A => "r >= 1",
            Family::B => "r >= 2",
            Family::C => "r >= 3",
            Family::D => "r >= 4",
            Family::E => "r in {6, 7, 8}",
            Family::F => "r = 4",
            Family::G => "r = 2",
        }
    }

    fn admits(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// A finite Lie type such as `A5` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<LieType> {
        Self::with_max_rank(family, rank, DEFAULT_MAX_RANK)
    }

    pub fn with_max_rank(family: Family, rank: usize, max_rank: usize) -> Result<LieType> {
        if !family.admits(rank) {
            return Err(Error::RankOutOfRange {
                family: family.letter(),
                rank,
                bound: family.bound_text().to_string(),
            });
        }
        if rank > max_rank {
            return Err(Error::RankOutOfRange {
                family: family.letter(),
                rank,
                bound: format!("r <= {max_rank} (configured cap)"),
            });
        }
        Ok(LieType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Builds the Cartan table for this type.
    pub fn root_data(&self) -> RootData {
        RootData::new(*self)
    }
}

/// Checks a `(family, rank)` pair against the admissible ranks of each family.
pub fn validate_lie_type(family: Family, rank: usize) -> Result<LieType> {
    LieType::new(family, rank)
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<LieType> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::Parse("empty Lie type".into()))?;
        let family = Family::from_letter(letter)
            .ok_or_else(|| Error::Parse(format!("unknown Lie family in {s:?}")))?;
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("malformed Lie type {s:?}")));
        }
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("malformed rank in {s:?}")))?;
        LieType::new(family, rank)
    }
}

impl Serialize for LieType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LieType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A Dynkin edge `{a, b}` together with the two off-diagonal Cartan entries
/// `entry(a, b)` and `entry(b, a)`.
#[derive(Debug, Clone, Copy)]
struct Edge {
    a: usize,
    b: usize,
    ab: i64,
    ba: i64,
}

impl Edge {
    fn simple(a: usize, b: usize) -> Edge {
        Edge { a, b, ab: -1, ba: -1 }
    }
}

fn dynkin_edges(t: LieType) -> Vec<Edge> {
    let r = t.rank;
    let path = |from: usize, to: usize| (from..to).map(|i| Edge::simple(i, i + 1));
    match t.family {
        Family::A => path(1, r).collect(),
        Family::B => {
            let mut edges: Vec<Edge> = path(1, r - 1).collect();
            edges.push(Edge { a: r - 1, b: r, ab: -2, ba: -1 });
            edges
        }
        Family::C => {
            let mut edges: Vec<Edge> = path(1, r - 1).collect();
            edges.push(Edge { a: r - 1, b: r, ab: -1, ba: -2 });
            edges
        }
        Family::D => {
            let mut edges: Vec<Edge> = path(1, r - 1).collect();
            edges.push(Edge::simple(r - 2, r));
            edges
        }
        Family::E => {
            let mut edges = vec![Edge::simple(1, 3), Edge::simple(2, 4)];
            edges.extend(path(3, r));
            edges
        }
        Family::F => vec![
            Edge::simple(1, 2),
            Edge { a: 2, b: 3, ab: -2, ba: -1 },
            Edge::simple(3, 4),
        ],
        Family::G => vec![Edge { a: 1, b: 2, ab: -1, ba: -3 }],
    }
}

/// Cartan table of one Lie type; immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootData {
    lie_type: LieType,
    entries: Vec<i64>,
}

impl RootData {
    pub fn new(lie_type: LieType) -> RootData {
        let r = lie_type.rank;
        let mut entries = vec![0; r * r];
        for i in 0..r {
            entries[i * r + i] = 2;
        }
        for e in dynkin_edges(lie_type) {
            entries[(e.a - 1) * r + (e.b - 1)] = e.ab;
            entries[(e.b - 1) * r + (e.a - 1)] = e.ba;
        }
        RootData { lie_type, entries }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    /// `<alpha_i, alpha_j^vee>`.
    pub fn pairing(&self, i: usize, j: usize) -> Result<i64> {
        let r = self.rank();
        check_index(i, r)?;
        check_index(j, r)?;
        Ok(self.entry(i, j))
    }

    pub fn adjacent(&self, i: usize, j: usize) -> Result<bool> {
        Ok(i != j && self.pairing(i, j)? < 0)
    }

    /// Unchecked 1-based access for hot loops over validated words.
    #[inline]
    pub(crate) fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.rank() + (j - 1)]
    }

    #[inline]
    pub(crate) fn is_adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.entry(i, j) < 0
    }

    /// Rows of the table, each a 1-based row read left to right.
    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.rank())
    }

    /// Dynkin edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let r = self.rank();
        let mut out = Vec::with_capacity(r.saturating_sub(1));
        for i in 1..=r {
            for j in i + 1..=r {
                if self.is_adjacent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

pub fn cartan_pairing(t: LieType, i: usize, j: usize) -> Result<i64> {
    RootData::new(t).pairing(i, j)
}

pub fn adjacent(t: LieType, i: usize, j: usize) -> Result<bool> {
    RootData::new(t).adjacent(i, j)
}

/// Every admissible type with rank at most `max_rank`, in family order.
pub fn all_types_up_to(max_rank: usize) -> Vec<LieType> {
    use Family::*;
    let mut out = Vec::new();
    for family in [A, B, C, D, E, F, G] {
        for rank in 1..=max_rank {
            if let Ok(t) = LieType::with_max_rank(family, rank, max_rank) {
                out.push(t);
            }
        }
    }
    out
}
