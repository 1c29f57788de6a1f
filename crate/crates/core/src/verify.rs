//! Named verification suites run by the `verify` command and endpoint.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::ar_quiver::build_ar_quiver;
use crate::error::{Error, Result};
use crate::hom_ext::{cy_pairing_dims, hom_dim, hom_dim_neg1, middle_term};
use crate::oracle::{
    hom_mismatches, match_to_diagonals, middle_term_mismatches, oracle_closure, DerivedCategory,
    Matching,
};
use crate::polygon::{CategoryParams, Diagonal};
use crate::sms::{
    enumerate_sms, extension_closure, orthogonality_failures, simples_of_closure,
    SimpleMindedSystem,
};
use crate::tilting::{tilt, verify_torsion_exchange, Direction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Orthogonality,
    CyDuality,
    ClosureGolden,
    TiltRoundTrip,
    TorsionExchange,
    OracleAgreement,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Orthogonality,
        Suite::CyDuality,
        Suite::ClosureGolden,
        Suite::TiltRoundTrip,
        Suite::TorsionExchange,
        Suite::OracleAgreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orthogonality => "orthogonality",
            Suite::CyDuality => "cy-duality",
            Suite::ClosureGolden => "closure-golden",
            Suite::TiltRoundTrip => "tilt-round-trip",
            Suite::TorsionExchange => "torsion-exchange",
            Suite::OracleAgreement => "oracle-agreement",
        }
    }

    /// Parses a suite name, with `all` expanding to every suite.
    pub fn parse_list(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        name.split(',').map(|n| n.trim().parse()).collect()
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown suite '{s}'")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const MAX_REPORTED: usize = 10;

/// One named check: how many cases were examined and the first failures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(suite: Suite, name: &str) -> Self {
        CheckResult {
            suite,
            name: name.to_string(),
            checked: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED {
                self.failures.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub params: CategoryParams,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

/// Oracle state shared by the suites that need it.
struct OracleContext {
    cat: DerivedCategory,
    matchings: Vec<Matching>,
}

impl OracleContext {
    fn new(p: &CategoryParams) -> Result<Self> {
        let (cat, matchings) = match_to_diagonals(p, &build_ar_quiver(p));
        if matchings.is_empty() {
            return Err(Error::Inconsistent(format!(
                "no suspension-compatible matching for {p}"
            )));
        }
        Ok(OracleContext { cat, matchings })
    }
}

pub fn verify(p: &CategoryParams, suites: &[Suite]) -> Result<VerifyReport> {
    p.require_weight_two()?;
    let mut suites = suites.to_vec();
    suites.sort();
    suites.dedup();
    let needs_oracle = suites
        .iter()
        .any(|s| matches!(s, Suite::CyDuality | Suite::OracleAgreement));
    let oracle = if needs_oracle {
        Some(OracleContext::new(p)?)
    } else {
        None
    };
    let systems = enumerate_sms(p);
    let mut checks = Vec::new();
    for suite in suites {
        match suite {
            Suite::Orthogonality => checks.push(orthogonality(p, &systems)?),
            Suite::CyDuality => checks.extend(cy_duality(p, oracle.as_ref().expect("oracle"))?),
            Suite::ClosureGolden => checks.extend(closure_golden(p, &systems)?),
            Suite::TiltRoundTrip => checks.push(tilt_round_trip(p, &systems)?),
            Suite::TorsionExchange => checks.push(torsion_exchange(&systems)?),
            Suite::OracleAgreement => checks.extend(oracle_agreement(
                p,
                &systems,
                oracle.as_ref().expect("oracle"),
            )?),
        }
    }
    let passed = checks.iter().all(CheckResult::passed);
    Ok(VerifyReport {
        params: *p,
        passed,
        checks,
    })
}

fn orthogonality(p: &CategoryParams, systems: &[SimpleMindedSystem]) -> Result<CheckResult> {
    let mut c = CheckResult::new(Suite::Orthogonality, "every system is orthogonal");
    for s in systems {
        let failures = orthogonality_failures(p, s.simples())?;
        c.record(failures.is_empty(), || {
            let f = &failures[0];
            format!(
                "{s}: dim C({}, Σ^{} {}) = {}, expected {}",
                f.x, f.shift, f.y, f.found, f.expected
            )
        });
    }
    Ok(c)
}

fn cy_duality(p: &CategoryParams, o: &OracleContext) -> Result<Vec<CheckResult>> {
    let all = p.admissible_diagonals();
    let w = p.weight() as i32;
    let mut ours = CheckResult::new(Suite::CyDuality, "C(x, Σ^-w y) = C(y, x) by polygon rules");
    let mut theirs = CheckResult::new(
        Suite::CyDuality,
        "C(x, Σ^-w y) = C(y, x) in the orbit category",
    );
    let m = &o.matchings[0];
    for &x in &all {
        for &y in &all {
            let (a, b) = cy_pairing_dims(p, x, y)?;
            ours.record(a == b, || format!("{x}, {y}: {a} vs {b}"));
            let (ox, oy) = (m.object(x), m.object(y));
            let (a, b) = (o.cat.orbit_hom(ox, oy.shifted(-w)), o.cat.orbit_hom(oy, ox));
            theirs.record(a == b, || format!("{x}, {y}: {a} vs {b}"));
        }
    }
    Ok(vec![ours, theirs])
}

fn closure_golden(p: &CategoryParams, systems: &[SimpleMindedSystem]) -> Result<Vec<CheckResult>> {
    let mut simples = CheckResult::new(
        Suite::ClosureGolden,
        "simples of each closure are the system",
    );
    let mut fixpoint = CheckResult::new(Suite::ClosureGolden, "closures contain all middle terms");
    for s in systems {
        let c = extension_closure(p, s.simples())?;
        let found = simples_of_closure(&c);
        simples.record(found == s.simples(), || format!("{s}: simples {found:?}"));
        let members = c.diagonals();
        let mut missing = Vec::new();
        for &x in &members {
            for &y in &members {
                if hom_dim_neg1(p, y, x)? == 1 {
                    missing.extend(
                        middle_term(p, y, x)?
                            .into_iter()
                            .filter(|m| !c.contains(*m)),
                    );
                }
            }
        }
        fixpoint.record(missing.is_empty(), || format!("{s}: missing {missing:?}"));
    }
    let mut out = vec![simples, fixpoint];
    if (p.rank(), p.weight()) == (3, 2) {
        let mut golden = CheckResult::new(Suite::ClosureGolden, "closure of [{1,6}, {3,5}, {7,9}]");
        let d = |a, b| Diagonal::new(a, b).expect("fixture");
        let got = extension_closure(p, &[d(3, 5), d(1, 6), d(7, 9)])?.diagonals();
        let want = vec![d(1, 3), d(1, 6), d(1, 9), d(3, 5), d(7, 9)];
        golden.record(got == want, || format!("got {got:?}"));
        out.push(golden);
    }
    Ok(out)
}

fn subsets(s: &SimpleMindedSystem) -> impl Iterator<Item = Vec<Diagonal>> + '_ {
    let n = s.simples().len();
    (0..1u64 << n).map(move |mask| {
        s.simples()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &d)| d)
            .collect()
    })
}

fn tilt_round_trip(p: &CategoryParams, systems: &[SimpleMindedSystem]) -> Result<CheckResult> {
    let mut c = CheckResult::new(
        Suite::TiltRoundTrip,
        "opposite tilt at the shifted pivot restores the system",
    );
    for s in systems {
        for pivot in subsets(s) {
            for dir in [Direction::Left, Direction::Right] {
                let shifted: Vec<Diagonal> =
                    pivot.iter().map(|&d| p.suspend(d, dir.step())).collect();
                let back =
                    tilt(s, &pivot, dir).and_then(|mv| tilt(&mv.result, &shifted, dir.opposite()));
                match back {
                    Ok(mv) => c.record(mv.result == *s, || {
                        format!("{s} {dir} at {pivot:?}: got {}", mv.result)
                    }),
                    Err(e) => c.record(false, || format!("{s} {dir} at {pivot:?}: {e}")),
                }
            }
        }
    }
    Ok(c)
}

fn torsion_exchange(systems: &[SimpleMindedSystem]) -> Result<CheckResult> {
    let mut c = CheckResult::new(
        Suite::TorsionExchange,
        "singleton tilts are systems exchanging torsion pairs",
    );
    for s in systems {
        for &x in s.simples() {
            for dir in [Direction::Left, Direction::Right] {
                let r = verify_torsion_exchange(s, &[x], dir)?;
                c.record(r.passed(), || {
                    format!("{s} {dir} at {x}: {}", r.failures.join("; "))
                });
            }
        }
    }
    Ok(c)
}

fn oracle_agreement(
    p: &CategoryParams,
    systems: &[SimpleMindedSystem],
    o: &OracleContext,
) -> Result<Vec<CheckResult>> {
    let w = p.weight() as i64;
    let mut hom = CheckResult::new(Suite::OracleAgreement, "Hom dimensions match the oracle");
    for (i, m) in o.matchings.iter().enumerate() {
        let bad = hom_mismatches(&o.cat, m, -w - 1..=w + 1, |x, l, y| hom_dim(p, x, l, y));
        hom.record(bad.is_empty(), || {
            format!("matching {i}: {} mismatches, first {:?}", bad.len(), bad[0])
        });
    }
    let m = &o.matchings[0];
    let mut middle = CheckResult::new(Suite::OracleAgreement, "middle terms match the oracle");
    let bad = middle_term_mismatches(&o.cat, m, |t, s| middle_term(p, t, s).ok());
    middle.record(bad.is_empty(), || {
        format!("{} mismatches, first {:?}", bad.len(), bad[0])
    });
    let mut closure = CheckResult::new(Suite::OracleAgreement, "closures match the oracle");
    for s in systems {
        let ours = extension_closure(p, s.simples())?.diagonals();
        let theirs = oracle_closure(&o.cat, m, s.simples());
        closure.record(ours == theirs, || format!("{s}: {ours:?} vs {theirs:?}"));
    }
    Ok(vec![hom, middle, closure])
}
