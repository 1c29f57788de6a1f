//! Left and right tilts of simple-minded systems, Gabriel quivers and the
//! tilting graph.
//!
//! Left tilting at a pivot subset `P` sends each pivot `s'` to `Σ^{-1}s'` and
//! each other simple `s` to the cone of its `Σ^{-1}<P>`-cover. For a single
//! pivot this moves an endpoint `v` of `s` to the far end of the pivot when
//! the pivot has endpoint `v + 1`. Right tilting mirrors this with envelopes
//! and `Σ`. Every move is checked after the fact: the result must be a
//! simple-minded system and the opposite tilt must undo it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hom_ext::{hom_dim, hom_dim_neg1, middle_term};
use crate::polygon::{CategoryParams, Diagonal};
use crate::sms::{
    enumerate_sms, extension_closure, orthogonality_failures, sms_violation, sub_closure,
    torsion_pair, SimpleMindedSystem,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Left,
    Right,
}

impl Direction {
    /// Rotation applied to pivots: `-1` for left, `+1` for right.
    pub fn step(self) -> i64 {
        match self {
            Direction::Left => -1,
            Direction::Right => 1,
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Left => "left",
            Direction::Right => "right",
        })
    }
}

/// One endpoint move of a non-pivot simple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EndpointReplacement {
    pub old: u32,
    pub new: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "action", rename_all = "snake_case")]
pub enum TiltAction {
    Unchanged {
        simple: Diagonal,
    },
    Shifted {
        from: Diagonal,
        to: Diagonal,
    },
    /// `to` is the cone of the cover `Σ^{-1}t -> from` (left) or the cocone
    /// of the envelope `from -> Σt` (right), `t` the sum of `cover`.
    Replaced {
        from: Diagonal,
        to: Diagonal,
        cover: Vec<Diagonal>,
        replacements: Vec<EndpointReplacement>,
    },
}

impl TiltAction {
    pub fn image(&self) -> Diagonal {
        match self {
            TiltAction::Unchanged { simple } => *simple,
            TiltAction::Shifted { to, .. } | TiltAction::Replaced { to, .. } => *to,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TiltMove {
    pub direction: Direction,
    pub pivot: Vec<Diagonal>,
    pub source: SimpleMindedSystem,
    pub result: SimpleMindedSystem,
    /// One entry per source simple, in source order.
    pub actions: Vec<TiltAction>,
}

/// Approximation data for one direction. For a left tilt a summand `t` of
/// the cover contributes `Σ^{-1}t -> x -> cone -> t`; for a right tilt
/// `t -> cocone -> x -> Σt`.
struct Approximation<'a> {
    p: &'a CategoryParams,
    dir: Direction,
    /// Indecomposables of the extension closure of the pivot.
    class: Vec<Diagonal>,
}

impl Approximation<'_> {
    fn maps(&self, t: Diagonal, x: Diagonal) -> Result<bool> {
        Ok(match self.dir {
            Direction::Left => hom_dim_neg1(self.p, t, x)?,
            Direction::Right => hom_dim_neg1(self.p, x, t)?,
        } != 0)
    }

    /// The indecomposable cone (left) or cocone (right) of the nonzero map
    /// between `x` and the shift of `t`, if there is one.
    fn cone(&self, t: Diagonal, x: Diagonal) -> Result<Option<Diagonal>> {
        if !self.maps(t, x)? {
            return Ok(None);
        }
        let middle = match self.dir {
            Direction::Left => middle_term(self.p, t, x)?,
            Direction::Right => middle_term(self.p, x, t)?,
        };
        Ok(match middle[..] {
            [e] => Some(e),
            _ => None,
        })
    }

    /// Every map between `e` and the shifted class vanishes, so the map
    /// producing `e` was an approximation.
    fn is_orthogonal(&self, e: Diagonal) -> Result<bool> {
        for &t in &self.class {
            if self.maps(t, e)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(image, cover summands)` for a non-pivot simple.
    fn image(&self, x: Diagonal) -> Result<(Diagonal, Vec<Diagonal>)> {
        let mut touching = Vec::new();
        for &t in &self.class {
            if self.maps(t, x)? {
                touching.push(t);
            }
        }
        if touching.is_empty() {
            return Ok((x, Vec::new()));
        }
        let mut found: Vec<(Diagonal, Vec<Diagonal>)> = Vec::new();
        for &t in &touching {
            if let Some(e) = self.cone(t, x)? {
                if self.is_orthogonal(e)? {
                    found.push((e, vec![t]));
                }
            }
        }
        if found.is_empty() {
            for &t1 in &touching {
                let Some(e1) = self.cone(t1, x)? else {
                    continue;
                };
                for &t2 in &touching {
                    if t2 == t1 {
                        continue;
                    }
                    if let Some(e) = self.cone(t2, e1)? {
                        if self.is_orthogonal(e)? {
                            found.push((e, vec![t1, t2]));
                        }
                    }
                }
            }
        }
        found.sort();
        found.dedup_by_key(|(e, _)| *e);
        match found.len() {
            1 => {
                let (e, mut cover) = found.remove(0);
                cover.sort();
                Ok((e, cover))
            }
            0 => Err(Error::TiltRuleIncomplete(format!(
                "no approximation of {x} by the shifted pivot closure"
            ))),
            _ => Err(Error::TiltRuleIncomplete(format!(
                "{x} has {} candidate images",
                found.len()
            ))),
        }
    }
}

fn apply_rule(
    s: &SimpleMindedSystem,
    pivot: &BTreeSet<Diagonal>,
    dir: Direction,
) -> Result<Vec<TiltAction>> {
    let p = s.params();
    let seed: Vec<Diagonal> = pivot.iter().copied().collect();
    let approx = Approximation {
        p,
        dir,
        class: extension_closure(p, &seed)?.diagonals(),
    };
    s.simples()
        .iter()
        .map(|&d| {
            if pivot.contains(&d) {
                return Ok(TiltAction::Shifted {
                    from: d,
                    to: p.suspend(d, dir.step()),
                });
            }
            let (to, cover) = approx.image(d)?;
            if cover.is_empty() {
                return Ok(TiltAction::Unchanged { simple: d });
            }
            let old: Vec<u32> = d
                .endpoints()
                .into_iter()
                .filter(|&v| !to.has_endpoint(v))
                .collect();
            let new: Vec<u32> = to
                .endpoints()
                .into_iter()
                .filter(|&v| !d.has_endpoint(v))
                .collect();
            let replacements = old
                .into_iter()
                .zip(new)
                .map(|(old, new)| EndpointReplacement { old, new })
                .collect();
            Ok(TiltAction::Replaced {
                from: d,
                to,
                cover,
                replacements,
            })
        })
        .collect()
}

fn images(s: &SimpleMindedSystem, actions: &[TiltAction]) -> Result<SimpleMindedSystem> {
    let p = s.params();
    let out: Vec<Diagonal> = actions.iter().map(TiltAction::image).collect();
    let mut sorted = out.clone();
    sorted.sort();
    if let Some(v) = sms_violation(p, &sorted) {
        return Err(Error::TiltRuleIncomplete(format!(
            "tilt of {s} is not a simple-minded system: {v}"
        )));
    }
    if let Some(f) = orthogonality_failures(p, &sorted)?.first() {
        return Err(Error::TiltRuleIncomplete(format!(
            "tilt of {s} is not orthogonal: dim C({}, Σ^{} {}) = {}",
            f.x, f.shift, f.y, f.found
        )));
    }
    SimpleMindedSystem::new(p, out)
}

/// Tilts `s` at `pivot` in direction `dir`, then checks the opposite tilt
/// at the shifted pivot restores `s`.
pub fn tilt(s: &SimpleMindedSystem, pivot: &[Diagonal], dir: Direction) -> Result<TiltMove> {
    let p = *s.params();
    p.require_weight_two()?;
    let pivot_set: BTreeSet<Diagonal> = pivot.iter().copied().collect();
    if let Some(d) = pivot_set.iter().find(|d| !s.contains(**d)) {
        return Err(Error::Parameter(format!(
            "pivot {d} is not a simple of {s}"
        )));
    }
    let actions = apply_rule(s, &pivot_set, dir)?;
    let result = images(s, &actions)?;

    let shifted: BTreeSet<Diagonal> = pivot_set
        .iter()
        .map(|&d| p.suspend(d, dir.step()))
        .collect();
    let back = apply_rule(&result, &shifted, dir.opposite())
        .and_then(|a| images(&result, &a))
        .map_err(|e| Error::TiltRuleIncomplete(format!("inverse tilt of {result} fails: {e}")))?;
    if back != *s {
        return Err(Error::TiltRuleIncomplete(format!(
            "inverse tilt of {result} gives {back}, not {s}"
        )));
    }
    Ok(TiltMove {
        direction: dir,
        pivot: pivot_set.into_iter().collect(),
        source: s.clone(),
        result,
        actions,
    })
}

pub fn left_tilt(s: &SimpleMindedSystem, pivot: &[Diagonal]) -> Result<TiltMove> {
    tilt(s, pivot, Direction::Left)
}

pub fn right_tilt(s: &SimpleMindedSystem, pivot: &[Diagonal]) -> Result<TiltMove> {
    tilt(s, pivot, Direction::Right)
}

/// Outcome of checking that a tilt exchanges torsion pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TiltReport {
    pub direction: Direction,
    pub source: SimpleMindedSystem,
    pub pivot: Vec<Diagonal>,
    pub result: Option<SimpleMindedSystem>,
    /// Torsion class of the tilted closure.
    pub torsion: Vec<Diagonal>,
    /// Torsion-free class of the tilted closure.
    pub torsion_free: Vec<Diagonal>,
    pub tilted_closure: Vec<Diagonal>,
    pub failures: Vec<String>,
}

impl TiltReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that the tilt is a simple-minded system and that its closure
/// carries the exchanged torsion pair.
///
/// For a left tilt with `T = <P>` and `F = T^⊥ ∩ <S>` the tilted closure must
/// contain `F` and `Σ^{-1}T`, have `C(F, Σ^{-1}T) = 0`, and every other member
/// must be built from them as in [`unresolved_members`]. For a right tilt with `F = <P>` and
/// `T = ⊥F ∩ <S>` the roles are `ΣF` (torsion) and `T` (torsion-free).
pub fn verify_torsion_exchange(
    s: &SimpleMindedSystem,
    pivot: &[Diagonal],
    dir: Direction,
) -> Result<TiltReport> {
    let p = *s.params();
    p.require_weight_two()?;
    let mut report = TiltReport {
        direction: dir,
        source: s.clone(),
        pivot: pivot.to_vec(),
        result: None,
        torsion: Vec::new(),
        torsion_free: Vec::new(),
        tilted_closure: Vec::new(),
        failures: Vec::new(),
    };
    let mv = match tilt(s, pivot, dir) {
        Ok(mv) => mv,
        Err(e @ Error::TiltRuleIncomplete(_)) => {
            report.failures.push(e.to_string());
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    report.pivot = mv.pivot.clone();
    let closure = extension_closure(&p, s.simples())?;
    let (torsion, torsion_free) = match dir {
        Direction::Left => {
            let tp = torsion_pair(&closure, &mv.pivot)?;
            let shifted: Vec<Diagonal> = tp.torsion.iter().map(|&t| p.suspend(t, -1)).collect();
            (tp.torsion_free, shifted)
        }
        Direction::Right => {
            let free = sub_closure(&closure, &mv.pivot)?;
            let mut tors = Vec::new();
            for m in closure.diagonals() {
                if free.contains(&m) {
                    continue;
                }
                let mut maps_out = false;
                for &f in &free {
                    maps_out |= hom_dim(&p, m, 0, f)? != 0;
                }
                if !maps_out {
                    tors.push(m);
                }
            }
            (free.iter().map(|&f| p.suspend(f, 1)).collect(), tors)
        }
    };
    let mut torsion = torsion;
    let mut torsion_free = torsion_free;
    torsion.sort();
    torsion_free.sort();

    let tilted = extension_closure(&p, mv.result.simples())?.diagonals();
    for &x in torsion.iter().chain(&torsion_free) {
        if !tilted.contains(&x) {
            report
                .failures
                .push(format!("{x} is missing from the tilted closure"));
        }
    }
    for &t in &torsion {
        for &f in &torsion_free {
            if hom_dim(&p, t, 0, f)? != 0 {
                report.failures.push(format!(
                    "nonzero map {t} -> {f} from torsion to torsion-free"
                ));
            }
        }
    }
    for m in unresolved_members(&p, &tilted, &torsion, &torsion_free)? {
        report.failures.push(format!(
            "{m} is not an extension of a torsion-free by a torsion object"
        ));
    }
    report.result = Some(mv.result);
    report.torsion = torsion;
    report.torsion_free = torsion_free;
    report.tilted_closure = tilted;
    Ok(report)
}

/// Members of `closure` not shown to sit in a sequence `t -> m -> f` with
/// `t` in add(torsion) and `f` in add(torsion_free).
///
/// Starting from the two classes, `m` is accepted as the indecomposable
/// middle term of `x -> m -> y` when `x` is accepted and `y` torsion-free, or
/// `x` torsion and `y` accepted. Both steps preserve the property because
/// each class is closed under extensions.
pub fn unresolved_members(
    p: &CategoryParams,
    closure: &[Diagonal],
    torsion: &[Diagonal],
    torsion_free: &[Diagonal],
) -> Result<Vec<Diagonal>> {
    let mut accepted: BTreeSet<Diagonal> = torsion.iter().chain(torsion_free).copied().collect();
    loop {
        let mut grew = false;
        for &x in closure {
            for &y in closure {
                let usable = (accepted.contains(&x) && torsion_free.contains(&y))
                    || (torsion.contains(&x) && accepted.contains(&y));
                if !usable || hom_dim_neg1(p, y, x)? == 0 {
                    continue;
                }
                if let [m] = middle_term(p, y, x)?[..] {
                    if closure.contains(&m) {
                        grew |= accepted.insert(m);
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    Ok(closure
        .iter()
        .copied()
        .filter(|m| !accepted.contains(m))
        .collect())
}

/// Arrow counts between simples: `arrows[i][j] = dim C(s_j, Σ s_i)` arrows
/// from `simples[i]` to `simples[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GabrielQuiver {
    pub simples: Vec<Diagonal>,
    pub arrows: Vec<Vec<usize>>,
}

impl GabrielQuiver {
    /// Nonzero entries as `(from, to, count)`.
    pub fn arrow_list(&self) -> Vec<(Diagonal, Diagonal, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.arrows.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                if k > 0 {
                    out.push((self.simples[i], self.simples[j], k));
                }
            }
        }
        out
    }
}

pub fn gabriel_quiver(s: &SimpleMindedSystem) -> Result<GabrielQuiver> {
    let p = s.params();
    p.require_weight_two()?;
    let simples = s.simples().to_vec();
    let arrows = simples
        .iter()
        .map(|&si| {
            simples
                .iter()
                .map(|&sj| hom_dim(p, sj, 1, si))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GabrielQuiver { simples, arrows })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TiltingNode {
    pub id: String,
    pub simples: Vec<Diagonal>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TiltingEdge {
    pub source: String,
    pub target: String,
    pub direction: Direction,
    pub pivot: Diagonal,
}

/// Simple-minded systems joined by their singleton left tilts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TiltingGraph {
    pub params: CategoryParams,
    pub nodes: Vec<TiltingNode>,
    pub edges: Vec<TiltingEdge>,
}

impl TiltingGraph {
    /// Number of weakly connected components.
    pub fn component_count(&self) -> usize {
        let index: BTreeMap<&str, usize> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.id.as_str(), i))
            .collect();
        let mut parent: Vec<usize> = (0..self.nodes.len()).collect();
        fn root(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for e in &self.edges {
            let (a, b) = (
                root(&mut parent, index[e.source.as_str()]),
                root(&mut parent, index[e.target.as_str()]),
            );
            parent[a] = b;
        }
        (0..self.nodes.len())
            .filter(|&i| root(&mut parent, i) == i)
            .count()
    }

    pub fn is_weakly_connected(&self) -> bool {
        self.component_count() <= 1
    }
}

pub fn tilting_graph(p: &CategoryParams) -> Result<TiltingGraph> {
    p.require_weight_two()?;
    let systems = enumerate_sms(p);
    let mut edges = Vec::new();
    for s in &systems {
        for &pivot in s.simples() {
            let mv = left_tilt(s, &[pivot])?;
            edges.push(TiltingEdge {
                source: s.id(),
                target: mv.result.id(),
                direction: Direction::Left,
                pivot,
            });
        }
    }
    let nodes = systems
        .iter()
        .map(|s| TiltingNode {
            id: s.id(),
            simples: s.simples().to_vec(),
        })
        .collect();
    Ok(TiltingGraph {
        params: *p,
        nodes,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: u32, b: u32) -> Diagonal {
        Diagonal::new(a, b).unwrap()
    }

    fn example() -> SimpleMindedSystem {
        let p = CategoryParams::new(3, 2).unwrap();
        SimpleMindedSystem::new(&p, [d(3, 5), d(1, 6), d(7, 9)]).unwrap()
    }

    fn sms(simples: &[(u32, u32)]) -> SimpleMindedSystem {
        let p = CategoryParams::new(3, 2).unwrap();
        SimpleMindedSystem::new(&p, simples.iter().map(|&(a, b)| d(a, b))).unwrap()
    }

    #[test]
    fn left_tilt_examples() {
        let s = example();
        assert_eq!(
            left_tilt(&s, &[d(3, 5)]).unwrap().result,
            sms(&[(2, 4), (1, 6), (7, 9)])
        );
        let mv = left_tilt(&s, &[d(1, 6)]).unwrap();
        assert_eq!(mv.result, sms(&[(1, 3), (0, 5), (7, 9)]));
        assert_eq!(
            mv.actions,
            vec![
                TiltAction::Shifted {
                    from: d(1, 6),
                    to: d(0, 5)
                },
                TiltAction::Replaced {
                    from: d(3, 5),
                    to: d(1, 3),
                    cover: vec![d(1, 6)],
                    replacements: vec![EndpointReplacement { old: 5, new: 1 }]
                },
                TiltAction::Unchanged { simple: d(7, 9) },
            ]
        );
        assert_eq!(left_tilt(&s, s.simples()).unwrap().result, s.suspend(-1));
    }

    /// The singleton rule read directly off the polygon: the pivot rotates
    /// by one step and an endpoint `v` of another simple with `v - step` an
    /// endpoint of the pivot moves to the pivot's far end.
    fn singleton_rule(
        s: &SimpleMindedSystem,
        pivot: Diagonal,
        dir: Direction,
    ) -> SimpleMindedSystem {
        let p = s.params();
        let out = s.simples().iter().map(|&x| {
            if x == pivot {
                return p.suspend(x, dir.step());
            }
            let [mut a, mut b] = x.endpoints();
            for v in [&mut a, &mut b] {
                let touched = p.vertex(*v as i64 - dir.step());
                if let Some(far) = pivot.other_endpoint(touched) {
                    *v = far;
                }
            }
            p.diagonal(a as i64, b as i64).unwrap()
        });
        SimpleMindedSystem::new(p, out).unwrap()
    }

    #[test]
    fn singleton_tilts_follow_the_polygon_rule() {
        for (e, w) in [(3, 2), (2, 3), (2, 2), (4, 2), (3, 3)] {
            let p = CategoryParams::new(e, w).unwrap();
            for s in enumerate_sms(&p) {
                for &x in s.simples() {
                    for dir in [Direction::Left, Direction::Right] {
                        assert_eq!(
                            tilt(&s, &[x], dir).unwrap().result,
                            singleton_rule(&s, x, dir),
                            "{s} {dir} {x}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn subset_tilt_uses_the_pivot_closure() {
        // <{35,68}> contains 38, and Σ^{-1}38 -> 02 is the cover of 02
        let s = sms(&[(0, 2), (3, 5), (6, 8)]);
        let mv = left_tilt(&s, &[d(3, 5), d(6, 8)]).unwrap();
        assert_eq!(mv.result, sms(&[(0, 8), (2, 4), (5, 7)]));
        assert_eq!(
            mv.actions[0],
            TiltAction::Replaced {
                from: d(0, 2),
                to: d(0, 8),
                cover: vec![d(3, 8)],
                replacements: vec![EndpointReplacement { old: 2, new: 8 }]
            }
        );
    }

    #[test]
    fn right_tilt_examples() {
        assert_eq!(
            right_tilt(&sms(&[(1, 3), (0, 5), (7, 9)]), &[d(0, 5)])
                .unwrap()
                .result,
            example()
        );
        assert_eq!(
            right_tilt(&sms(&[(2, 4), (1, 6), (7, 9)]), &[d(2, 4)])
                .unwrap()
                .result,
            example()
        );
        let s = example();
        assert_eq!(right_tilt(&s, s.simples()).unwrap().result, s.suspend(1));
    }

    #[test]
    fn tilt_errors() {
        let s = example();
        assert!(matches!(
            left_tilt(&s, &[d(0, 2)]),
            Err(Error::Parameter(_))
        ));
        let p = CategoryParams::new(2, 1).unwrap();
        let one = enumerate_sms(&p).remove(0);
        assert!(matches!(
            left_tilt(&one, &[]),
            Err(Error::UnsupportedWeight(1))
        ));
    }

    #[test]
    fn gabriel_quiver_of_example() {
        let g = gabriel_quiver(&example()).unwrap();
        assert_eq!(
            g.arrow_list(),
            vec![(d(1, 6), d(7, 9), 1), (d(3, 5), d(1, 6), 1)]
        );
        assert!((0..3).all(|i| g.arrows[i][i] == 0));
        let p = CategoryParams::new(1, 2).unwrap();
        let g1 = gabriel_quiver(&enumerate_sms(&p)[0]).unwrap();
        assert_eq!(g1.arrows, vec![vec![0]]);
    }

    #[test]
    fn gabriel_quiver_rotation_invariant() {
        for (e, w) in [(3, 2), (2, 3), (2, 2)] {
            let p = CategoryParams::new(e, w).unwrap();
            for s in enumerate_sms(&p) {
                let a = gabriel_quiver(&s).unwrap().arrow_list();
                let b = gabriel_quiver(&s.suspend(1)).unwrap().arrow_list();
                let rotated: BTreeSet<_> = a
                    .iter()
                    .map(|&(x, y, k)| (p.suspend(x, 1), p.suspend(y, 1), k))
                    .collect();
                assert_eq!(rotated, b.into_iter().collect());
            }
        }
    }

    #[test]
    fn torsion_exchange_example() {
        let r = verify_torsion_exchange(&example(), &[d(3, 5)], Direction::Left).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.torsion, vec![d(1, 6), d(1, 9), d(7, 9)]);
        assert_eq!(r.torsion_free, vec![d(2, 4)]);
        assert_eq!(
            r.tilted_closure,
            vec![d(1, 6), d(1, 9), d(2, 4), d(4, 6), d(4, 9), d(7, 9)]
        );
    }

    #[test]
    fn tilting_graph_e2_w3() {
        let p = CategoryParams::new(2, 3).unwrap();
        let g = tilting_graph(&p).unwrap();
        assert_eq!(g.nodes.len(), 15);
        assert_eq!(g.edges.len(), 30);
        assert!(g.is_weakly_connected());
    }

    #[test]
    fn graph_edges_pair_with_right_tilts() {
        for (e, w) in [(3, 2), (2, 3), (2, 2)] {
            let p = CategoryParams::new(e, w).unwrap();
            let g = tilting_graph(&p).unwrap();
            let systems: BTreeMap<String, SimpleMindedSystem> =
                enumerate_sms(&p).into_iter().map(|s| (s.id(), s)).collect();
            for edge in &g.edges {
                let back =
                    right_tilt(&systems[&edge.target], &[p.suspend(edge.pivot, -1)]).unwrap();
                assert_eq!(back.result.id(), edge.source);
            }
            for n in &g.nodes {
                assert_eq!(
                    g.edges.iter().filter(|x| x.source == n.id).count(),
                    e as usize
                );
            }
        }
    }

    #[test]
    fn exhaustive_exchange_of_torsion_pairs() {
        for (e, w) in [(3, 2), (2, 3), (2, 2)] {
            let p = CategoryParams::new(e, w).unwrap();
            for s in enumerate_sms(&p) {
                for &x in s.simples() {
                    for dir in [Direction::Left, Direction::Right] {
                        let r = verify_torsion_exchange(&s, &[x], dir).unwrap();
                        assert!(r.passed(), "{s} at {x} {dir}: {:?}", r.failures);
                    }
                }
            }
        }
    }

    #[test]
    fn subset_tilts_exchange_torsion_pairs() {
        for (e, w) in [(3, 2), (2, 3), (2, 2)] {
            let p = CategoryParams::new(e, w).unwrap();
            for s in enumerate_sms(&p) {
                for mask in 0..1u32 << e {
                    let pivot: Vec<Diagonal> = (0..e as usize)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| s.simples()[i])
                        .collect();
                    for dir in [Direction::Left, Direction::Right] {
                        let r = verify_torsion_exchange(&s, &pivot, dir).unwrap();
                        assert!(r.passed(), "{s} {dir} {pivot:?}: {:?}", r.failures);
                    }
                }
            }
        }
    }
}
