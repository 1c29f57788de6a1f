//! Vertex and diagonal arithmetic on the `N`-gon model.
//!
//! The polygon has vertices `0..N` numbered clockwise, with
//! `N = (w + 1)(e + 1) - 2`. Indecomposable objects of the negative cluster
//! category are the admissible diagonals, suspension rotates a diagonal by one
//! vertex and the Auslander-Reiten translate rotates it back by `w + 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The pair `(e, w)` fixing the ambient category, plus the derived polygon size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CategoryParams {
    rank: u32,
    weight: u32,
    polygon_size: u32,
}

impl CategoryParams {
    pub fn new(rank: u32, weight: u32) -> Result<Self> {
        if rank < 1 {
            return Err(Error::Parameter(format!(
                "rank must be at least 1, got {rank}"
            )));
        }
        if weight < 1 {
            return Err(Error::Parameter(format!(
                "weight must be at least 1, got {weight}"
            )));
        }
        let polygon_size = (weight as u64 + 1) * (rank as u64 + 1) - 2;
        let polygon_size = u32::try_from(polygon_size).map_err(|_| {
            Error::Parameter(format!(
                "polygon for rank {rank}, weight {weight} is too large"
            ))
        })?;
        Ok(CategoryParams {
            rank,
            weight,
            polygon_size,
        })
    }

    /// Number of simples, `e`.
    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// The weight `w`; the category is `(-w)`-Calabi-Yau.
    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Number of polygon vertices, `N`.
    pub fn polygon_size(&self) -> u32 {
        self.polygon_size
    }

    /// Errors unless the weight is at least 2.
    pub fn require_weight_two(&self) -> Result<()> {
        if self.weight < 2 {
            Err(Error::UnsupportedWeight(self.weight))
        } else {
            Ok(())
        }
    }

    /// Reduces an arbitrary integer to a vertex in `0..N`.
    pub fn vertex(&self, v: i64) -> u32 {
        v.rem_euclid(self.polygon_size as i64) as u32
    }

    /// Builds the normalized diagonal with endpoints `a` and `b` (taken mod `N`).
    pub fn diagonal(&self, a: i64, b: i64) -> Result<Diagonal> {
        let (a, b) = (self.vertex(a), self.vertex(b));
        if a == b {
            return Err(Error::DegenerateDiagonal(a));
        }
        Ok(Diagonal {
            lo: a.min(b),
            hi: a.max(b),
        })
    }

    /// Checks that `d` lives on this polygon.
    pub fn contains(&self, d: Diagonal) -> bool {
        d.hi < self.polygon_size
    }

    pub fn is_admissible(&self, d: Diagonal) -> bool {
        self.contains(d) && (d.hi - d.lo) % (self.weight + 1) == self.weight
    }

    /// Admissibility stated on subpolygons: both pieces cut off by `d` have a
    /// vertex count divisible by `w + 1`.
    pub fn is_admissible_by_subpolygons(&self, d: Diagonal) -> bool {
        let m = self.weight + 1;
        let inside = d.hi - d.lo + 1;
        let outside = self.polygon_size - (d.hi - d.lo) + 1;
        self.contains(d) && inside.is_multiple_of(m) && outside.is_multiple_of(m)
    }

    pub fn require_admissible(&self, d: Diagonal) -> Result<()> {
        if self.is_admissible(d) {
            Ok(())
        } else {
            Err(Error::NotAdmissible(d))
        }
    }

    /// Rotates both endpoints by `steps` (negative steps rotate backwards).
    /// `suspend(d, 1)` is the suspension functor.
    pub fn suspend(&self, d: Diagonal, steps: i64) -> Diagonal {
        let (a, b) = (
            self.vertex(d.lo as i64 + steps),
            self.vertex(d.hi as i64 + steps),
        );
        Diagonal {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    /// The Auslander-Reiten translate, `Σ^{-(w+1)}`.
    pub fn ar_translate(&self, d: Diagonal) -> Diagonal {
        self.suspend(d, -(self.weight as i64 + 1))
    }

    pub fn ar_translate_inverse(&self, d: Diagonal) -> Diagonal {
        self.suspend(d, self.weight as i64 + 1)
    }

    /// Number of applications of the translate after which every diagonal
    /// returns to itself.
    pub fn translate_order(&self) -> u32 {
        self.polygon_size / gcd(self.polygon_size, self.weight + 1)
    }

    /// All vertex pairs, admissible or not.
    pub fn all_diagonals(&self) -> impl Iterator<Item = Diagonal> + '_ {
        let n = self.polygon_size;
        (0..n).flat_map(move |lo| (lo + 1..n).map(move |hi| Diagonal { lo, hi }))
    }

    /// All admissible diagonals in canonical `(lo, hi)` order.
    pub fn admissible_diagonals(&self) -> Vec<Diagonal> {
        self.all_diagonals()
            .filter(|&d| self.is_admissible(d))
            .collect()
    }
}

impl fmt::Display for CategoryParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "C_-{}(A_{}) on a {}-gon",
            self.weight, self.rank, self.polygon_size
        )
    }
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An unordered pair of distinct polygon vertices, stored sorted.
///
/// Ordering is lexicographic on `(lo, hi)`. On the wire a diagonal is the
/// two-element array `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[u32; 2]", try_from = "[u32; 2]")]
pub struct Diagonal {
    lo: u32,
    hi: u32,
}

impl Diagonal {
    /// Builds a diagonal from two distinct vertices without reducing mod `N`.
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateDiagonal(a));
        }
        Ok(Diagonal {
            lo: a.min(b),
            hi: a.max(b),
        })
    }

    pub fn lo(&self) -> u32 {
        self.lo
    }

    pub fn hi(&self) -> u32 {
        self.hi
    }

    pub fn endpoints(&self) -> [u32; 2] {
        [self.lo, self.hi]
    }

    pub fn has_endpoint(&self, v: u32) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other_endpoint(&self, v: u32) -> Option<u32> {
        if v == self.lo {
            Some(self.hi)
        } else if v == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }

    pub fn shares_endpoint(&self, other: Diagonal) -> bool {
        other.has_endpoint(self.lo) || other.has_endpoint(self.hi)
    }

    /// Whether the two diagonals interleave cyclically. Diagonals sharing an
    /// endpoint never cross.
    pub fn crosses(&self, other: Diagonal) -> bool {
        if self.shares_endpoint(other) {
            return false;
        }
        let inside = |v: u32| self.lo < v && v < self.hi;
        inside(other.lo) != inside(other.hi)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

impl From<Diagonal> for [u32; 2] {
    fn from(d: Diagonal) -> Self {
        [d.lo, d.hi]
    }
}

impl TryFrom<[u32; 2]> for Diagonal {
    type Error = Error;

    fn try_from([a, b]: [u32; 2]) -> Result<Self> {
        Diagonal::new(a, b)
    }
}
