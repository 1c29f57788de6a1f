//! Simple-minded systems, their extension closures and torsion pairs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hom_ext::{hom_dim, hom_dim_neg1, middle_term};
use crate::polygon::{CategoryParams, Diagonal};

/// Why a set of diagonals fails to be a simple-minded system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SmsViolation {
    WrongCardinality {
        expected: u32,
        found: usize,
    },
    OffPolygon {
        diagonal: Diagonal,
    },
    NotAdmissible {
        diagonal: Diagonal,
    },
    Duplicate {
        diagonal: Diagonal,
    },
    Crossing {
        first: Diagonal,
        second: Diagonal,
    },
    SharedEndpoint {
        first: Diagonal,
        second: Diagonal,
        vertex: u32,
    },
}

impl fmt::Display for SmsViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmsViolation::WrongCardinality { expected, found } => {
                write!(f, "expected {expected} diagonals, found {found}")
            }
            SmsViolation::OffPolygon { diagonal } => {
                write!(f, "{diagonal} is not a diagonal of the polygon")
            }
            SmsViolation::NotAdmissible { diagonal } => write!(f, "{diagonal} is not admissible"),
            SmsViolation::Duplicate { diagonal } => write!(f, "{diagonal} appears twice"),
            SmsViolation::Crossing { first, second } => write!(f, "{first} crosses {second}"),
            SmsViolation::SharedEndpoint {
                first,
                second,
                vertex,
            } => {
                write!(f, "{first} and {second} share endpoint {vertex}")
            }
        }
    }
}

/// The first violation found, or `None` if `simples` is a simple-minded system.
pub fn sms_violation(p: &CategoryParams, simples: &[Diagonal]) -> Option<SmsViolation> {
    if simples.len() != p.rank() as usize {
        return Some(SmsViolation::WrongCardinality {
            expected: p.rank(),
            found: simples.len(),
        });
    }
    for &d in simples {
        if !p.contains(d) {
            return Some(SmsViolation::OffPolygon { diagonal: d });
        }
        if !p.is_admissible(d) {
            return Some(SmsViolation::NotAdmissible { diagonal: d });
        }
    }
    for (i, &a) in simples.iter().enumerate() {
        for &b in &simples[i + 1..] {
            if a == b {
                return Some(SmsViolation::Duplicate { diagonal: a });
            }
            if a.crosses(b) {
                return Some(SmsViolation::Crossing {
                    first: a,
                    second: b,
                });
            }
            if let Some(&vertex) = a.endpoints().iter().find(|&&v| b.has_endpoint(v)) {
                return Some(SmsViolation::SharedEndpoint {
                    first: a,
                    second: b,
                    vertex,
                });
            }
        }
    }
    None
}

pub fn is_sms(p: &CategoryParams, simples: &[Diagonal]) -> bool {
    sms_violation(p, simples).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SimpleMindedSystem {
    params: CategoryParams,
    simples: Vec<Diagonal>,
}

impl SimpleMindedSystem {
    pub fn new(p: &CategoryParams, simples: impl IntoIterator<Item = Diagonal>) -> Result<Self> {
        let mut simples: Vec<Diagonal> = simples.into_iter().collect();
        simples.sort();
        if let Some(v) = sms_violation(p, &simples) {
            return Err(Error::NotSms(v.to_string()));
        }
        Ok(SimpleMindedSystem {
            params: *p,
            simples,
        })
    }

    pub fn params(&self) -> &CategoryParams {
        &self.params
    }

    /// The simples in ascending `(lo, hi)` order.
    pub fn simples(&self) -> &[Diagonal] {
        &self.simples
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.simples.binary_search(&d).is_ok()
    }

    /// Stable identifier built from the sorted endpoints, e.g. `sms_1_6_3_5_7_9`.
    pub fn id(&self) -> String {
        let mut id = String::from("sms");
        for d in &self.simples {
            id.push_str(&format!("_{}_{}", d.lo(), d.hi()));
        }
        id
    }

    pub fn suspend(&self, steps: i64) -> Self {
        let mut simples: Vec<Diagonal> = self
            .simples
            .iter()
            .map(|&d| self.params.suspend(d, steps))
            .collect();
        simples.sort();
        SimpleMindedSystem {
            params: self.params,
            simples,
        }
    }
}

impl fmt::Display for SimpleMindedSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.simples.iter().map(|d| d.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// All simple-minded systems, sorted lexicographically by their simples.
pub fn enumerate_sms(p: &CategoryParams) -> Vec<SimpleMindedSystem> {
    fn extend(
        p: &CategoryParams,
        pool: &[Diagonal],
        start: usize,
        chosen: &mut Vec<Diagonal>,
        out: &mut Vec<SimpleMindedSystem>,
    ) {
        if chosen.len() == p.rank() as usize {
            out.push(SimpleMindedSystem {
                params: *p,
                simples: chosen.clone(),
            });
            return;
        }
        for (i, &d) in pool.iter().enumerate().skip(start) {
            if chosen
                .iter()
                .all(|&c| !c.crosses(d) && !c.shares_endpoint(d))
            {
                chosen.push(d);
                extend(p, pool, i + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    let pool = p.admissible_diagonals();
    let mut out = Vec::new();
    extend(p, &pool, 0, &mut Vec::new(), &mut out);
    out
}

/// A failed orthogonality condition: `dim C(x, Σ^shift y)` should be
/// `expected` but is `found`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthogonalityFailure {
    pub x: Diagonal,
    pub shift: i64,
    pub y: Diagonal,
    pub expected: usize,
    pub found: usize,
}

/// Checks `dim C(s_i, s_j) = δ_ij` and `C(s_i, Σ^ℓ s_j) = 0` for
/// `ℓ = -w+1, ..., -1` over the given pairs. Cardinality is not checked.
pub fn orthogonality_failures(
    p: &CategoryParams,
    simples: &[Diagonal],
) -> Result<Vec<OrthogonalityFailure>> {
    p.require_weight_two()?;
    let w = p.weight() as i64;
    let mut out = Vec::new();
    for &x in simples {
        for &y in simples {
            for shift in (-w + 1)..=0 {
                let expected = usize::from(shift == 0 && x == y);
                let found = hom_dim(p, x, shift, y)?;
                if found != expected {
                    out.push(OrthogonalityFailure {
                        x,
                        shift,
                        y,
                        expected,
                        found,
                    });
                }
            }
        }
    }
    Ok(out)
}

pub fn check_orthogonality(p: &CategoryParams, simples: &[Diagonal]) -> Result<bool> {
    Ok(orthogonality_failures(p, simples)?.is_empty())
}

/// How a non-seed member was first produced: `sub -> member -> quotient`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtensionRecord {
    pub sub: Diagonal,
    pub quotient: Diagonal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureMember {
    pub diagonal: Diagonal,
    /// Round of discovery; seeds have depth 0.
    pub depth: u32,
    pub record: Option<ExtensionRecord>,
    /// Composition factors as `(simple, multiplicity)`, sorted by simple.
    pub factors: Vec<(Diagonal, u32)>,
}

impl ClosureMember {
    pub fn length(&self) -> u32 {
        self.factors.iter().map(|&(_, k)| k).sum()
    }

    pub fn is_supported_on(&self, simples: &BTreeSet<Diagonal>) -> bool {
        self.factors.iter().all(|(s, _)| simples.contains(s))
    }
}

/// The indecomposable members of the extension closure of a seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureResult {
    pub params: CategoryParams,
    pub seed: Vec<Diagonal>,
    /// Sorted by diagonal.
    pub members: Vec<ClosureMember>,
}

impl ClosureResult {
    pub fn diagonals(&self) -> Vec<Diagonal> {
        self.members.iter().map(|m| m.diagonal).collect()
    }

    pub fn member(&self, d: Diagonal) -> Option<&ClosureMember> {
        self.members
            .binary_search_by_key(&d, |m| m.diagonal)
            .ok()
            .map(|i| &self.members[i])
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.member(d).is_some()
    }

    pub fn max_depth(&self) -> u32 {
        self.members.iter().map(|m| m.depth).max().unwrap_or(0)
    }
}

type Multiset = BTreeMap<Diagonal, u32>;

fn union(a: &Multiset, b: &Multiset) -> Multiset {
    let mut out = a.clone();
    for (&k, &v) in b {
        *out.entry(k).or_insert(0) += v;
    }
    out
}

fn difference(total: &Multiset, part: &Multiset) -> Option<Multiset> {
    let mut rest = total.clone();
    for (k, &v) in part {
        let e = rest.get_mut(k).filter(|e| **e >= v)?;
        *e -= v;
    }
    rest.retain(|_, v| *v > 0);
    (!rest.is_empty()).then_some(rest)
}

/// Assigns factors to one half of a decomposable middle term once the other
/// half is known; checks the sum where both are known.
fn settle_split_factors(
    pending: &mut Vec<([Diagonal; 2], Multiset)>,
    factors: &mut BTreeMap<Diagonal, Multiset>,
) -> Result<()> {
    let mut progress = true;
    while progress {
        progress = false;
        let mut open = Vec::new();
        for ([a, b], total) in pending.drain(..) {
            match (factors.get(&a).cloned(), factors.get(&b).cloned()) {
                (None, None) => open.push(([a, b], total)),
                (Some(fa), Some(fb)) => {
                    if union(&fa, &fb) != total {
                        return Err(Error::Inconsistent(format!(
                            "factors of {a} and {b} do not add up"
                        )));
                    }
                }
                (Some(known), None) | (None, Some(known)) => {
                    let unknown = if factors.contains_key(&a) { b } else { a };
                    let rest = difference(&total, &known).ok_or_else(|| {
                        Error::Inconsistent(format!(
                            "factors of {unknown} would be negative or empty"
                        ))
                    })?;
                    factors.insert(unknown, rest);
                    progress = true;
                }
            }
        }
        *pending = open;
    }
    Ok(())
}

/// Closes the seed under middle terms of extensions between members.
///
/// Each round takes every ordered pair `(x, y)` of current members with
/// `C(Σ^{-1}y, x) != 0` and adds the summands of the middle term of
/// `x -> E -> y`. A new member produced as an indecomposable middle term
/// gets factors `factors(x) + factors(y)`; one produced as half of a
/// decomposable middle term gets the difference with its sibling once the
/// sibling's factors are known. Records are kept only for members that occur
/// as an indecomposable middle term.
pub fn extension_closure(p: &CategoryParams, seed: &[Diagonal]) -> Result<ClosureResult> {
    for &s in seed {
        p.require_admissible(s)?;
    }
    let failures = orthogonality_failures(p, seed)?;
    if let Some(f) = failures.first() {
        return Err(Error::NotSms(format!(
            "seed is not orthogonal: dim C({}, Σ^{} {}) = {}",
            f.x, f.shift, f.y, f.found
        )));
    }

    let mut depth: BTreeMap<Diagonal, u32> = BTreeMap::new();
    let mut record: BTreeMap<Diagonal, ExtensionRecord> = BTreeMap::new();
    let mut factors: BTreeMap<Diagonal, Multiset> = BTreeMap::new();
    for &s in seed {
        depth.insert(s, 0);
        factors.insert(s, Multiset::from([(s, 1)]));
    }
    // decomposable middle terms whose factor split is still open
    let mut pending: Vec<([Diagonal; 2], Multiset)> = Vec::new();

    let mut round = 0;
    loop {
        round += 1;
        let current: Vec<Diagonal> = depth.keys().copied().collect();
        let mut found: Vec<(Diagonal, ExtensionRecord, Vec<Diagonal>)> = Vec::new();
        for &x in &current {
            for &y in &current {
                if hom_dim_neg1(p, y, x)? == 0 {
                    continue;
                }
                let middle = middle_term(p, y, x)?;
                for &m in &middle {
                    found.push((
                        m,
                        ExtensionRecord {
                            sub: x,
                            quotient: y,
                        },
                        middle.clone(),
                    ));
                }
            }
        }
        let mut grew = false;
        for (m, rec, middle) in found {
            let (Some(fx), Some(fy)) = (factors.get(&rec.sub), factors.get(&rec.quotient)) else {
                continue;
            };
            let total = union(fx, fy);
            if middle.len() == 1 {
                match factors.get(&m) {
                    Some(existing) if *existing != total => {
                        return Err(Error::Inconsistent(format!(
                            "{m} has two different composition series via {} -> {m} -> {}",
                            rec.sub, rec.quotient
                        )));
                    }
                    Some(_) => {}
                    None => {
                        factors.insert(m, total);
                    }
                }
                record.entry(m).or_insert(rec);
            } else if middle[0] == m {
                pending.push(([middle[0], middle[1]], total));
            }
            if let std::collections::btree_map::Entry::Vacant(slot) = depth.entry(m) {
                slot.insert(round);
                grew = true;
            }
        }
        settle_split_factors(&mut pending, &mut factors)?;
        if !grew {
            break;
        }
    }

    let members = depth
        .iter()
        .map(|(&d, &k)| {
            let f = factors.get(&d).ok_or_else(|| {
                Error::Inconsistent(format!("composition factors of {d} are not determined"))
            })?;
            Ok(ClosureMember {
                diagonal: d,
                depth: k,
                record: record.get(&d).copied(),
                factors: f.iter().map(|(&s, &n)| (s, n)).collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut seed = seed.to_vec();
    seed.sort();
    Ok(ClosureResult {
        params: *p,
        seed,
        members,
    })
}

/// Members with a single composition factor.
pub fn simples_of_closure(c: &ClosureResult) -> Vec<Diagonal> {
    c.members
        .iter()
        .filter(|m| m.length() == 1)
        .map(|m| m.diagonal)
        .collect()
}

/// Members whose composition factors all lie in `sub_seed`.
pub fn sub_closure(c: &ClosureResult, sub_seed: &[Diagonal]) -> Result<Vec<Diagonal>> {
    let support = require_sub_seed(c, sub_seed)?;
    Ok(c.members
        .iter()
        .filter(|m| m.is_supported_on(&support))
        .map(|m| m.diagonal)
        .collect())
}

fn require_sub_seed(c: &ClosureResult, sub_seed: &[Diagonal]) -> Result<BTreeSet<Diagonal>> {
    if let Some(d) = sub_seed.iter().find(|d| c.seed.binary_search(d).is_err()) {
        return Err(Error::Parameter(format!("{d} is not one of the simples")));
    }
    Ok(sub_seed.iter().copied().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MixedMember {
    pub diagonal: Diagonal,
    /// `t -> m -> f` with `t` torsion and `f` torsion-free, preferring the
    /// closure record; `None` means no such sequence with indecomposable ends.
    pub sequence: Option<ExtensionRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionPair {
    pub torsion: Vec<Diagonal>,
    pub torsion_free: Vec<Diagonal>,
    pub mixed: Vec<MixedMember>,
}

/// The first `sub -> m -> quotient` with indecomposable middle term `m`,
/// `sub` drawn from `subs` and `quotient` from `quotients`.
pub fn short_exact_through(
    p: &CategoryParams,
    m: Diagonal,
    subs: &[Diagonal],
    quotients: &[Diagonal],
) -> Result<Option<ExtensionRecord>> {
    for &sub in subs {
        for &quotient in quotients {
            if hom_dim_neg1(p, quotient, sub)? == 1 && middle_term(p, quotient, sub)? == [m] {
                return Ok(Some(ExtensionRecord { sub, quotient }));
            }
        }
    }
    Ok(None)
}

/// `T = <S'>` and `F = T^⊥ ∩ <S>` at the level of indecomposable members.
pub fn torsion_pair(c: &ClosureResult, sub_seed: &[Diagonal]) -> Result<TorsionPair> {
    c.params.require_weight_two()?;
    let torsion = sub_closure(c, sub_seed)?;
    let p = &c.params;
    let mut torsion_free = Vec::new();
    let mut mixed = Vec::new();
    for m in &c.members {
        if torsion.contains(&m.diagonal) {
            continue;
        }
        let mut maps_in = false;
        for &t in &torsion {
            if hom_dim(p, t, 0, m.diagonal)? != 0 {
                maps_in = true;
                break;
            }
        }
        if !maps_in {
            torsion_free.push(m.diagonal);
        } else {
            mixed.push(m);
        }
    }
    let mut resolved = Vec::with_capacity(mixed.len());
    for m in mixed {
        let sequence = match m
            .record
            .filter(|r| torsion.contains(&r.sub) && torsion_free.contains(&r.quotient))
        {
            Some(r) => Some(r),
            None => short_exact_through(p, m.diagonal, &torsion, &torsion_free)?,
        };
        resolved.push(MixedMember {
            diagonal: m.diagonal,
            sequence,
        });
    }
    let mixed = resolved;
    Ok(TorsionPair {
        torsion,
        torsion_free,
        mixed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: u32, b: u32) -> Diagonal {
        Diagonal::new(a, b).unwrap()
    }

    fn p(e: u32, w: u32) -> CategoryParams {
        CategoryParams::new(e, w).unwrap()
    }

    fn example() -> Vec<Diagonal> {
        vec![d(3, 5), d(1, 6), d(7, 9)]
    }

    #[test]
    fn recognition() {
        let p = p(3, 2);
        assert!(is_sms(&p, &example()));
        assert_eq!(
            sms_violation(&p, &[d(3, 5), d(3, 8), d(7, 9)]),
            Some(SmsViolation::SharedEndpoint {
                first: d(3, 5),
                second: d(3, 8),
                vertex: 3
            })
        );
        assert_eq!(
            sms_violation(&p, &[d(3, 5), d(1, 6)]),
            Some(SmsViolation::WrongCardinality {
                expected: 3,
                found: 2
            })
        );
        assert!(matches!(
            sms_violation(&p, &[d(0, 5), d(3, 8), d(7, 9)]),
            Some(SmsViolation::Crossing { .. })
        ));
        assert!(matches!(
            sms_violation(&p, &[d(0, 4), d(5, 7), d(6, 9)]),
            Some(SmsViolation::NotAdmissible { .. })
        ));
        assert!(
            matches!(SimpleMindedSystem::new(&p, example()), Ok(s) if s.simples() == [d(1, 6), d(3, 5), d(7, 9)])
        );
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_sms(&p(2, 3)).len(), 15);
        assert_eq!(enumerate_sms(&p(1, 2)).len(), 2);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (e, w) in [(3, 2), (2, 2), (2, 3)] {
            let p = p(e, w);
            let pool = p.admissible_diagonals();
            let mut brute = Vec::new();
            let n = pool.len();
            // all subsets of size e via bitmasks
            for mask in 0u32..(1 << n) {
                if mask.count_ones() != e {
                    continue;
                }
                let set: Vec<Diagonal> = (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| pool[i])
                    .collect();
                if is_sms(&p, &set) {
                    brute.push(set);
                }
            }
            brute.sort();
            let fast: Vec<Vec<Diagonal>> =
                enumerate_sms(&p).into_iter().map(|s| s.simples).collect();
            assert_eq!(fast, brute, "{p}");
        }
    }

    #[test]
    fn orthogonality() {
        let p3 = p(3, 2);
        assert!(check_orthogonality(&p3, &example()).unwrap());
        assert!(check_orthogonality(&p3, &[d(0, 2), d(3, 5)]).unwrap());
        assert!(matches!(
            check_orthogonality(&p(2, 1), &[]),
            Err(Error::UnsupportedWeight(1))
        ));
        for s in enumerate_sms(&p(2, 3)) {
            assert!(check_orthogonality(&p(2, 3), s.simples()).unwrap(), "{s}");
        }
    }

    #[test]
    fn closure_of_example_system() {
        let p = p(3, 2);
        let c = extension_closure(&p, &example()).unwrap();
        assert_eq!(
            c.diagonals(),
            vec![d(1, 3), d(1, 6), d(1, 9), d(3, 5), d(7, 9)]
        );
        let m13 = c.member(d(1, 3)).unwrap();
        assert_eq!(
            m13.record,
            Some(ExtensionRecord {
                sub: d(3, 5),
                quotient: d(1, 6)
            })
        );
        assert_eq!(m13.depth, 1);
        assert_eq!(m13.factors, vec![(d(1, 6), 1), (d(3, 5), 1)]);
        assert_eq!(simples_of_closure(&c), vec![d(1, 6), d(3, 5), d(7, 9)]);
    }

    #[test]
    fn tilted_closure() {
        let p = p(3, 2);
        let c = extension_closure(&p, &[d(2, 4), d(1, 6), d(7, 9)]).unwrap();
        // 16 -> 46 -> 24 and 16 -> 19 -> 79 first, then 19 -> 49 -> 24
        assert_eq!(
            c.diagonals(),
            vec![d(1, 6), d(1, 9), d(2, 4), d(4, 6), d(4, 9), d(7, 9)]
        );
        assert_eq!(simples_of_closure(&c), vec![d(1, 6), d(2, 4), d(7, 9)]);
        assert_eq!(
            c.member(d(4, 6)).unwrap().record,
            Some(ExtensionRecord {
                sub: d(1, 6),
                quotient: d(2, 4)
            })
        );
        let m49 = c.member(d(4, 9)).unwrap();
        assert_eq!(m49.depth, 2);
        assert_eq!(
            m49.record,
            Some(ExtensionRecord {
                sub: d(1, 9),
                quotient: d(2, 4)
            })
        );
        assert_eq!(m49.length(), 3);
    }

    #[test]
    fn closure_edge_cases() {
        let p = p(3, 2);
        let single = extension_closure(&p, &[d(3, 5)]).unwrap();
        assert_eq!(single.diagonals(), vec![d(3, 5)]);
        assert!(matches!(
            extension_closure(&p, &[d(3, 5), d(4, 6)]),
            Err(Error::NotSms(_))
        ));
        assert!(matches!(
            extension_closure(&p, &[d(0, 4)]),
            Err(Error::NotAdmissible(_))
        ));
    }

    #[test]
    fn closures_of_every_system() {
        for (e, w) in [(3, 2), (2, 3), (2, 2), (4, 2)] {
            let p = p(e, w);
            for s in enumerate_sms(&p) {
                let c = extension_closure(&p, s.simples()).unwrap();
                assert_eq!(simples_of_closure(&c), s.simples(), "{s}");
                let members = c.diagonals();
                for &x in &members {
                    for &y in &members {
                        if hom_dim_neg1(&p, y, x).unwrap() == 1 {
                            for m in middle_term(&p, y, x).unwrap() {
                                assert!(c.contains(m), "{s}: {m} missing");
                            }
                        }
                    }
                }
                for m in &c.members {
                    if let Some(r) = m.record {
                        let fs = union(
                            &c.member(r.sub).unwrap().factors.iter().copied().collect(),
                            &c.member(r.quotient)
                                .unwrap()
                                .factors
                                .iter()
                                .copied()
                                .collect(),
                        );
                        let mine: Multiset = m.factors.iter().copied().collect();
                        if middle_term(&p, r.quotient, r.sub).unwrap().len() == 1 {
                            assert_eq!(mine, fs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn torsion_examples() {
        let p = p(3, 2);
        let c = extension_closure(&p, &example()).unwrap();
        let tp = torsion_pair(&c, &[d(3, 5)]).unwrap();
        assert_eq!(tp.torsion, vec![d(3, 5)]);
        assert_eq!(tp.torsion_free, vec![d(1, 6), d(1, 9), d(7, 9)]);
        assert_eq!(
            tp.mixed,
            vec![MixedMember {
                diagonal: d(1, 3),
                sequence: Some(ExtensionRecord {
                    sub: d(3, 5),
                    quotient: d(1, 6)
                })
            }]
        );
        let all = torsion_pair(&c, &example()).unwrap();
        assert_eq!(all.torsion, c.diagonals());
        assert!(all.torsion_free.is_empty() && all.mixed.is_empty());
        let none = torsion_pair(&c, &[]).unwrap();
        assert!(none.torsion.is_empty());
        assert_eq!(none.torsion_free, c.diagonals());
        assert!(matches!(
            sub_closure(&c, &[d(0, 2)]),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn torsion_hom_vanishing_everywhere() {
        for (e, w) in [(3, 2), (2, 3), (2, 2)] {
            let p = p(e, w);
            for s in enumerate_sms(&p) {
                let c = extension_closure(&p, s.simples()).unwrap();
                for k in 0..(1u32 << e) {
                    let sub: Vec<Diagonal> = s
                        .simples()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| k >> i & 1 == 1)
                        .map(|(_, &x)| x)
                        .collect();
                    let tp = torsion_pair(&c, &sub).unwrap();
                    for &t in &tp.torsion {
                        for &f in &tp.torsion_free {
                            assert_eq!(hom_dim(&p, t, 0, f).unwrap(), 0);
                        }
                    }
                }
            }
        }
    }
}
