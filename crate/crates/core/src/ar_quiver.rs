//! The Auslander-Reiten quiver of the category, read off the polygon: there is
//! an irreducible morphism `{a, b} -> {a, b + w + 1}` whenever the target is
//! again admissible.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;
use crate::polygon::{CategoryParams, Diagonal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArQuiver {
    pub params: CategoryParams,
    pub vertices: Vec<Diagonal>,
    pub arrows: Vec<(Diagonal, Diagonal)>,
    #[serde(serialize_with = "translate_as_pairs")]
    pub translate: BTreeMap<Diagonal, Diagonal>,
}

fn translate_as_pairs<S: serde::Serializer>(
    map: &BTreeMap<Diagonal, Diagonal>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(map.iter())
}

/// All admissible diagonals, sorted by `(lo, hi)`.
pub fn enumerate_indecomposables(p: &CategoryParams) -> Vec<Diagonal> {
    p.admissible_diagonals()
}

/// Targets of the irreducible morphisms starting at `d`: rotate one endpoint
/// forward by `w + 1` and keep the result if it is admissible.
pub fn irreducible_targets(p: &CategoryParams, d: Diagonal) -> Result<Vec<Diagonal>> {
    p.require_admissible(d)?;
    let step = p.weight() as i64 + 1;
    let mut out: Vec<Diagonal> = d
        .endpoints()
        .iter()
        .filter_map(|&moving| {
            let fixed = d.other_endpoint(moving).expect("endpoint");
            p.diagonal(fixed as i64, moving as i64 + step).ok()
        })
        .filter(|&t| p.is_admissible(t))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn build_ar_quiver(p: &CategoryParams) -> ArQuiver {
    let vertices = enumerate_indecomposables(p);
    let mut arrows = Vec::new();
    let mut translate = BTreeMap::new();
    for &v in &vertices {
        for t in irreducible_targets(p, v).expect("vertices are admissible") {
            arrows.push((v, t));
        }
        translate.insert(v, p.ar_translate(v));
    }
    arrows.sort();
    ArQuiver {
        params: *p,
        vertices,
        arrows,
        translate,
    }
}

impl ArQuiver {
    pub fn successors(&self, v: Diagonal) -> impl Iterator<Item = Diagonal> + '_ {
        self.arrows.iter().filter(move |a| a.0 == v).map(|a| a.1)
    }

    pub fn predecessors(&self, v: Diagonal) -> impl Iterator<Item = Diagonal> + '_ {
        self.arrows.iter().filter(move |a| a.1 == v).map(|a| a.0)
    }

    pub fn has_arrow(&self, from: Diagonal, to: Diagonal) -> bool {
        self.arrows.binary_search(&(from, to)).is_ok()
    }
}
