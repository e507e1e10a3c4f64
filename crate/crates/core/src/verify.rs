//! Self-check suite: closed forms against both brute-force oracles,
//! bijection round trips, symmetry, strict inequalities and (optionally)
//! the bundled reference sequences.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::bijections::{from_graph, from_linear, from_necklace, reflect, to_graph, to_linear, to_necklace};
use crate::counting::{count_circular, count_fixed_crosscuts, count_maximal, count_necklace};
use crate::enumeration::{enumerate_matchings, oracle_count, state_oracle_count, EnumerationBudget};
use crate::numtheory::{catalan, ExactInt};
use crate::refdata::bundled;

pub type Triple = (u64, u64, u64);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub group: &'static str,
    pub triple: Option<Triple>,
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Largest endpoint count on either boundary.
    pub max_endpoints: u64,
    pub sequences: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { max_endpoints: 12, sequences: false }
    }
}

/// Every `(n, m, k)` except `(0, 0, 0)` with `2n+k` and `2m+k` at most `max`.
pub fn feasible_triples(max: u64) -> Vec<Triple> {
    let mut out = Vec::new();
    for k in 0..=max {
        let half = (max - k) / 2;
        for n in 0..=half {
            for m in 0..=half {
                if n + m + k > 0 {
                    out.push((n, m, k));
                }
            }
        }
    }
    out
}

fn check(group: &'static str, triple: Option<Triple>, label: String, result: Result<(), String>) -> Check {
    let (passed, detail) = match result {
        Ok(()) => (true, String::new()),
        Err(e) => (false, e),
    };
    Check { group, triple, label, passed, detail }
}

fn equal(what: &str, expected: &ExactInt, got: crate::Result<ExactInt>) -> Result<(), String> {
    match got {
        Ok(v) if &v == expected => Ok(()),
        Ok(v) => Err(format!("{what}: formula {expected}, got {v}")),
        Err(e) => Err(format!("{what}: {e}")),
    }
}

fn round_trips((n, m, k): Triple, budget: &EnumerationBudget) -> Result<(), String> {
    let set = enumerate_matchings(n, m, k, budget).map_err(|e| e.to_string())?;
    let mirror = enumerate_matchings(m, n, k, budget).map_err(|e| e.to_string())?;
    let image: BTreeSet<_> = set.iter().map(reflect).collect();
    if image != mirror {
        return Err("reflection image differs from the mirrored class".into());
    }
    for x in &set {
        let fail = |what: &str| Err(format!("{what} fails on {x}"));
        if &reflect(&reflect(x)) != x {
            return fail("reflection involution");
        }
        if m == 0 && to_necklace(x).and_then(|nk| from_necklace(&nk)).as_ref() != Ok(x) {
            return fail("necklace round trip");
        }
        if k == 1 && m == 0 && to_linear(x).map(|w| from_linear(&w)).as_ref() != Ok(x) {
            return fail("linear round trip");
        }
        if k > 0 || m == 0 {
            let graph = to_graph(x).map_err(|e| e.to_string())?;
            if from_graph(&graph).as_ref() != Ok(x) {
                return fail("graph round trip");
            }
            if k > 0 && graph.side_edge_counts() != Some((n as usize, m as usize)) {
                return fail("graph side counts");
            }
        }
    }
    Ok(())
}

/// Run the suite with the library's closed form.
pub fn verify(config: &VerifyConfig) -> VerifyReport {
    verify_with(config, &count_fixed_crosscuts)
}

/// Run the suite with `formula` standing in for the fixed cross-cut count.
pub fn verify_with(config: &VerifyConfig, formula: &(dyn Fn(u64, u64, u64) -> ExactInt + Sync)) -> VerifyReport {
    let e = config.max_endpoints;
    let budget = EnumerationBudget {
        max_outer_endpoints: e,
        max_inner_endpoints: e,
        ..EnumerationBudget::default()
    };
    let triples = feasible_triples(e);
    let mut checks: Vec<Check> = triples
        .par_iter()
        .flat_map_iter(|&t| {
            let (n, m, k) = t;
            let expected = formula(n, m, k);
            let label = format!("({n},{m},{k})");
            [
                check("formula=oracle", Some(t), label.clone(), equal("gap-cell oracle", &expected, oracle_count(n, m, k, &budget))),
                check("formula=states", Some(t), label.clone(), equal("state oracle", &expected, state_oracle_count(n, m, k, &budget))),
                check("symmetry", Some(t), label.clone(), {
                    let other = formula(m, n, k);
                    if other == expected {
                        Ok(())
                    } else {
                        Err(format!("({m},{n},{k}) gives {other}, ({n},{m},{k}) gives {expected}"))
                    }
                }),
                check("round trips", Some(t), label, round_trips(t, &budget)),
            ]
        })
        .collect();

    for n in 3..=e {
        let (circ, ann, cat) = (count_circular(n).expect("n >= 1"), formula(n, 0, 0), catalan(n as i64));
        let ok = circ < ann && ann < cat;
        checks.push(check(
            "strictness",
            None,
            format!("n={n}"),
            if ok { Ok(()) } else { Err(format!("{circ} < {ann} < {cat} fails")) },
        ));
    }

    if config.sequences {
        checks.extend(sequence_checks(formula));
    }
    VerifyReport { checks }
}

fn sequence_checks(formula: &(dyn Fn(u64, u64, u64) -> ExactInt + Sync)) -> Vec<Check> {
    let mut out = Vec::new();
    let mut column = |id: &'static str, value: &dyn Fn(u64) -> crate::Result<ExactInt>, shift: i64| {
        let seq = match bundled(id) {
            Ok(s) => s,
            Err(e) => {
                out.push(check("sequences", None, id.to_string(), Err(e.to_string())));
                return;
            }
        };
        for n in 0..=seq.last_index() {
            let Some(expected) = seq.get(n + shift) else { continue };
            let label = format!("{id}[{}] n={n}", n + shift);
            out.push(check("sequences", None, label, equal(id, expected, value(n as u64))));
        }
    };
    column("A003239", &|n| Ok(formula(n, 0, 0)), 0);
    column("A007595", &|n| Ok(formula(n, 0, 2)), 0);
    column("A003441", &|n| Ok(formula(n, 0, 3)), 0);
    column("A002995", &|n| if n == 0 { Ok(ExactInt::from(1u32)) } else { count_circular(n) }, 1);

    if let Ok(tri) = bundled("A047996") {
        let mut index = 0;
        for row in 0u64.. {
            if tri.get(index + row as i64).is_none() {
                break;
            }
            for black in 0..=row {
                let expected = tri.get(index).expect("row present");
                let got = if row == 0 { Ok(ExactInt::from(1u32)) } else { count_necklace(row - black, black) };
                out.push(check("sequences", None, format!("A047996 T({row},{black})"), equal("A047996", expected, got)));
                let (n, k) = (black, row.saturating_sub(2 * black));
                if 2 * black <= row {
                    let via = count_maximal(n, k);
                    if &via != expected {
                        out.push(check("sequences", None, format!("A047996 T({row},{black}) maximal"), Err(format!("count_maximal({n},{k}) = {via}"))));
                    }
                }
                index += 1;
            }
        }
    }
    out
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// Triples with at least one failing check in `group`.
    pub fn failing_triples(&self, group: &str) -> BTreeSet<Triple> {
        self.checks
            .iter()
            .filter(|c| !c.passed && c.group == group)
            .filter_map(|c| c.triple)
            .collect()
    }

    /// Per-group totals and, for each `k`, an `n` by `m` grid of `.` (all
    /// checks pass) and `X` (some check fails).
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut groups: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        let mut grid: BTreeMap<Triple, bool> = BTreeMap::new();
        for c in &self.checks {
            let entry = groups.entry(c.group).or_default();
            entry.0 += 1;
            entry.1 += usize::from(c.passed);
            if let Some(t) = c.triple {
                *grid.entry(t).or_insert(true) &= c.passed;
            }
        }
        for (group, (total, ok)) in &groups {
            let status = if ok == total { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{status} {group}: {ok}/{total}");
        }
        let ks: BTreeSet<u64> = grid.keys().map(|t| t.2).collect();
        for k in ks {
            let cells: Vec<_> = grid.iter().filter(|(t, _)| t.2 == k).collect();
            let top = cells.iter().map(|(t, _)| t.0.max(t.1)).max().unwrap_or(0);
            let _ = writeln!(out, "k={k} (rows n, columns m)");
            for n in 0..=top {
                let row: String = (0..=top)
                    .map(|m| match grid.get(&(n, m, k)) {
                        Some(true) => '.',
                        Some(false) => 'X',
                        None => ' ',
                    })
                    .collect();
                let _ = writeln!(out, "  {n:>2} {}", row.trim_end());
            }
        }
        for c in self.failures() {
            let _ = writeln!(out, "FAIL {} {}: {}", c.group, c.label, c.detail);
        }
        let _ = writeln!(
            out,
            "{} checks, {} failed",
            self.checks.len(),
            self.checks.iter().filter(|c| !c.passed).count()
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = verify(&VerifyConfig { max_endpoints: 6, sequences: true });
        assert!(report.passed(), "{}", report.render());
        assert!(report.checks.iter().any(|c| c.group == "sequences"));
    }

    #[test]
    fn corrupted_formula_is_localized() {
        let corrupt = |n, m, k| {
            let v = count_fixed_crosscuts(n, m, k);
            if (n, m, k) == (2, 1, 2) {
                v + 1u32
            } else {
                v
            }
        };
        let report = verify_with(&VerifyConfig { max_endpoints: 6, sequences: false }, &corrupt);
        assert!(!report.passed());
        let bad = BTreeSet::from([(2, 1, 2)]);
        assert_eq!(report.failing_triples("formula=oracle"), bad);
        assert_eq!(report.failing_triples("formula=states"), bad);
        assert!(report.render().contains("FAIL formula=oracle (2,1,2)"));
    }

    #[test]
    fn triple_count() {
        assert_eq!(feasible_triples(12).len(), 230);
    }
}
