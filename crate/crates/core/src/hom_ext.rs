//! Hom dimensions and extension triangles on the polygon.
//!
//! Everything reduces to one question: for admissible `quotient = s'` and
//! `sub = s`, is `C(Σ^{-1}s', s)` nonzero? It is one dimensional in three
//! configurations (see [`ExtCase`]) and zero otherwise. In the nonzero case
//! the triangle `Σ^{-1}s' -> s -> E -> s'` has a middle term with 0, 1 or 2
//! indecomposable summands that can be read off the polygon.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::polygon::{CategoryParams, Diagonal};

/// How `C(Σ^{-1}s', s)` becomes nonzero, if it does.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum ExtCase {
    None,
    /// `s` and `s'` neither cross nor touch, and `s` has the endpoint
    /// `abutted - 1` where `abutted` is an endpoint of `s'`.
    Adjacent {
        sub_endpoint: u32,
        abutted: u32,
    },
    /// `s` and `s'` cross and each endpoint of `s` sits a positive multiple of
    /// `w + 1` behind the next endpoint of `s'`:
    /// `pairs[k] = (endpoint of s, endpoint of s', multiple)`.
    Crossing {
        pairs: [(u32, u32, u32); 2],
    },
    /// `s = Σ^{-1}s'`; the morphism is an isomorphism.
    Shift,
}

impl ExtCase {
    pub fn is_none(&self) -> bool {
        matches!(self, ExtCase::None)
    }

    pub fn summand_count(&self) -> usize {
        match self {
            ExtCase::None | ExtCase::Shift => 0,
            ExtCase::Adjacent { .. } => 1,
            ExtCase::Crossing { .. } => 2,
        }
    }
}

/// The triangle `Σ^{-1}s' -> s -> E -> s'` on the nonzero morphism, with
/// the summands of `E`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtTriangle {
    pub shifted_source: Diagonal,
    pub through: Diagonal,
    pub middle: Vec<Diagonal>,
    pub target: Diagonal,
    pub case: ExtCase,
}

fn require_pair(p: &CategoryParams, quotient: Diagonal, sub: Diagonal) -> Result<()> {
    p.require_admissible(quotient)?;
    p.require_admissible(sub)
}

/// The endpoint of `s'` reached first when walking clockwise from `x`.
fn next_endpoint(p: &CategoryParams, from: u32, quotient: Diagonal) -> (u32, u32) {
    let n = p.polygon_size();
    let dist = |y: u32| (y + n - from) % n;
    let [a, b] = quotient.endpoints();
    if dist(a) < dist(b) {
        (a, dist(a))
    } else {
        (b, dist(b))
    }
}

/// Classifies the pair. `Shift` is checked first: a shifted copy always
/// crosses the original, and its middle term is empty.
pub fn ext_case(p: &CategoryParams, quotient: Diagonal, sub: Diagonal) -> Result<ExtCase> {
    require_pair(p, quotient, sub)?;
    if sub == p.suspend(quotient, -1) {
        return Ok(ExtCase::Shift);
    }
    let step = p.weight() + 1;
    if sub.crosses(quotient) {
        let pair = |x: u32| {
            let (y, dist) = next_endpoint(p, x, quotient);
            (x, y, dist)
        };
        let pairs = [pair(sub.lo()), pair(sub.hi())];
        return Ok(if pairs.iter().all(|&(_, _, dist)| dist % step == 0) {
            ExtCase::Crossing {
                pairs: pairs.map(|(x, y, dist)| (x, y, dist / step)),
            }
        } else {
            ExtCase::None
        });
    }
    if sub.shares_endpoint(quotient) {
        return Ok(ExtCase::None);
    }
    for abutted in quotient.endpoints() {
        let before = p.vertex(abutted as i64 - 1);
        if sub.has_endpoint(before) {
            return Ok(ExtCase::Adjacent {
                sub_endpoint: before,
                abutted,
            });
        }
    }
    Ok(ExtCase::None)
}

/// `dim C(Σ^{-1}s', s)`, which is 0 or 1.
pub fn hom_dim_neg1(p: &CategoryParams, quotient: Diagonal, sub: Diagonal) -> Result<usize> {
    Ok(usize::from(!ext_case(p, quotient, sub)?.is_none()))
}

/// `dim C(x, Σ^shift y)`, via `C(x, Σ^ℓ y) = C(Σ^{-1}(Σx), Σ^ℓ y)`.
pub fn hom_dim(p: &CategoryParams, x: Diagonal, shift: i64, y: Diagonal) -> Result<usize> {
    require_pair(p, x, y)?;
    hom_dim_neg1(p, p.suspend(x, 1), p.suspend(y, shift))
}

/// Summands of the middle term `E` in `Σ^{-1}s' -> s -> E -> s'`.
pub fn middle_term(p: &CategoryParams, quotient: Diagonal, sub: Diagonal) -> Result<Vec<Diagonal>> {
    match ext_case(p, quotient, sub)? {
        ExtCase::None => Err(Error::NoExtension {
            target: quotient,
            through: sub,
        }),
        ExtCase::Shift => Ok(Vec::new()),
        ExtCase::Adjacent {
            sub_endpoint,
            abutted,
        } => {
            let kept = sub.other_endpoint(sub_endpoint).expect("endpoint of sub");
            let replacement = quotient
                .other_endpoint(abutted)
                .expect("endpoint of quotient");
            let d = p.diagonal(kept as i64, replacement as i64)?;
            p.require_admissible(d)?;
            Ok(vec![d])
        }
        ExtCase::Crossing { .. } => {
            let [a, b] = sub.endpoints();
            let [c, d] = quotient.endpoints();
            let resolutions = [[(a, c), (b, d)], [(a, d), (b, c)]];
            let admissible: Vec<Vec<Diagonal>> = resolutions
                .iter()
                .filter_map(|res| {
                    let pieces: Vec<Diagonal> = res
                        .iter()
                        .filter_map(|&(u, v)| p.diagonal(u as i64, v as i64).ok())
                        .collect();
                    (pieces.len() == 2 && pieces.iter().all(|&x| p.is_admissible(x)))
                        .then_some(pieces)
                })
                .collect();
            match admissible.as_slice() {
                [only] => {
                    let mut out = only.clone();
                    out.sort();
                    Ok(out)
                }
                _ => Err(Error::Inconsistent(format!(
                    "crossing {quotient} and {sub} has {} admissible resolutions",
                    admissible.len()
                ))),
            }
        }
    }
}

pub fn ext_triangle(p: &CategoryParams, quotient: Diagonal, sub: Diagonal) -> Result<ExtTriangle> {
    let case = ext_case(p, quotient, sub)?;
    let middle = middle_term(p, quotient, sub)?;
    Ok(ExtTriangle {
        shifted_source: p.suspend(quotient, -1),
        through: sub,
        middle,
        target: quotient,
        case,
    })
}

/// `(dim C(x, Σ^{-w}y), dim C(y, x))`; the two agree since the category is
/// `(-w)`-Calabi-Yau.
pub fn cy_pairing_dims(p: &CategoryParams, x: Diagonal, y: Diagonal) -> Result<(usize, usize)> {
    Ok((
        hom_dim(p, x, -(p.weight() as i64), y)?,
        hom_dim(p, y, 0, x)?,
    ))
}
