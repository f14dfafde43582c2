//! Cross-semantics verification: inclusion of cogent sets among weakly
//! admissible ones, strict dominance of weakly admissible attackers, and
//! structured comparison reports over single frameworks and sweeps.
//!
//! Both checked claims hold for every framework, so any recorded
//! violation indicates an implementation bug; callers treat a nonempty
//! violation list as a failure.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::af::{ArgSet, ExtensionSet, Framework};
use crate::error::{Error, Result};
use crate::gen::{enumerate_all_afs, random_af, GenConfig};
use crate::io::{render_af, RenderFormat};
use crate::semantics::{gt_cog, maximal_by_inclusion, Solver};

/// Outcome of a checking run over one framework or a whole sweep.
///
/// Serialized field names are stable: `framework`, `semantics`,
/// `violations`, `summary`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    /// Identity of what was checked: an APX rendering for a single
    /// framework, a sweep description otherwise.
    pub framework: String,
    /// Extension sets by semantics name, as label lists in canonical
    /// order. Empty for sweeps.
    pub semantics: BTreeMap<String, Vec<Vec<String>>>,
    pub violations: Vec<Violation>,
    pub summary: Summary,
}

/// A falsified claim, carrying everything needed to re-check it without
/// the surrounding report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub claim: String,
    /// APX rendering of the framework the claim failed on.
    pub framework: String,
    /// The argument set falsifying the claim, as labels.
    pub witness: Vec<String>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub frameworks_checked: usize,
    pub claims_checked: usize,
    pub violations: usize,
    /// Whether maximal cogent and maximal weakly admissible sets agree;
    /// only set by semantics comparison.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximal_agreement: Option<bool>,
    /// Base seed of a random sweep, for exact replay.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Report {
    fn single(f: &Framework) -> Report {
        Report {
            framework: render_af(f, RenderFormat::Text),
            semantics: BTreeMap::new(),
            violations: Vec::new(),
            summary: Summary {
                frameworks_checked: 1,
                claims_checked: 0,
                violations: 0,
                maximal_agreement: None,
                seed: None,
            },
        }
    }

    /// Deterministic plain-text form of the report.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str("== framework ==\n");
        out.push_str(&self.framework);
        if !self.framework.ends_with('\n') {
            out.push('\n');
        }
        if !self.semantics.is_empty() {
            out.push_str("\n== semantics ==\n");
            for (name, sets) in &self.semantics {
                let rendered: Vec<String> = sets
                    .iter()
                    .map(|labels| format!("{{{}}}", labels.join(",")))
                    .collect();
                out.push_str(&format!("{name}: {}\n", rendered.join(" ")));
            }
        }
        out.push_str("\n== violations ==\n");
        if self.violations.is_empty() {
            out.push_str("(none)\n");
        } else {
            for v in &self.violations {
                out.push_str(&format!(
                    "claim {}: witness {{{}}}: {}\n  on: {}\n",
                    v.claim,
                    v.witness.join(","),
                    v.detail,
                    v.framework.replace('\n', " ").trim_end()
                ));
            }
        }
        out.push_str("\n== summary ==\n");
        out.push_str(&format!(
            "frameworks checked: {}\n",
            self.summary.frameworks_checked
        ));
        out.push_str(&format!("claims checked: {}\n", self.summary.claims_checked));
        out.push_str(&format!("violations: {}\n", self.summary.violations));
        if let Some(agreement) = self.summary.maximal_agreement {
            out.push_str(&format!("maximal agreement: {agreement}\n"));
        }
        if let Some(seed) = self.summary.seed {
            out.push_str(&format!("seed: {seed}\n"));
        }
        out
    }
}

fn labels_of(f: &Framework, set: ArgSet) -> Vec<String> {
    set.iter().map(|i| f.label(i).to_string()).collect()
}

fn label_sets(f: &Framework, sets: &ExtensionSet) -> Vec<Vec<String>> {
    sets.iter().map(|s| labels_of(f, s)).collect()
}

/// Checks that every cogent set of `f` is weakly admissible.
///
/// Holds for every framework; a violation means the solver is wrong.
pub fn check_inclusion(solver: &Solver, f: &Framework) -> Result<Report> {
    let cogent = solver.enumerate_cogent(f)?;
    let weak = solver.enumerate_weakly_admissible(f)?;
    let mut report = Report::single(f);
    report
        .semantics
        .insert("cogent".to_string(), label_sets(f, &cogent));
    report
        .semantics
        .insert("weakly-admissible".to_string(), label_sets(f, &weak));
    for e in &cogent {
        report.summary.claims_checked += 1;
        if !weak.contains(e) {
            report.violations.push(Violation {
                claim: "cogent-implies-weakly-admissible".to_string(),
                framework: report.framework.clone(),
                witness: labels_of(f, e),
                detail: "cogent set is not weakly admissible".to_string(),
            });
        }
    }
    report.summary.violations = report.violations.len();
    Ok(report)
}

/// Checks that whenever a weakly admissible set of the reduct by a
/// conflict-free `E` attacks `E`, it is strictly more cogent than `E`.
///
/// This is the step that forces the inclusion of cogent sets among
/// weakly admissible ones; it holds for every framework.
pub fn check_attacker_dominance(solver: &Solver, f: &Framework) -> Result<Report> {
    let conflict_free = solver.enumerate_conflict_free(f)?;
    let mut report = Report::single(f);
    report
        .semantics
        .insert("conflict-free".to_string(), label_sets(f, &conflict_free));
    for e in &conflict_free {
        let (reduct, weak_sets) = solver.weakly_admissible_in_reduct(f, e)?;
        for w in &weak_sets {
            // Reduct labels come from f, so sets translate by label.
            let rooted: ArgSet = w
                .iter()
                .map(|i| f.index_of(reduct.label(i)).expect("carried label"))
                .collect();
            if !f.targets_of(rooted).intersects(e) {
                continue;
            }
            report.summary.claims_checked += 1;
            if !gt_cog(f, rooted, e) {
                report.violations.push(Violation {
                    claim: "reduct-attacker-dominance".to_string(),
                    framework: report.framework.clone(),
                    witness: labels_of(f, rooted),
                    detail: format!(
                        "weakly admissible reduct set attacks {{{}}} without being \
                         strictly more cogent",
                        labels_of(f, e).join(",")
                    ),
                });
            }
        }
    }
    report.summary.violations = report.violations.len();
    Ok(report)
}

/// The weakly admissible sets of `f` that are not cogent, in canonical
/// order. Nonempty results show the inclusion is strict.
pub fn find_strictness_witnesses(solver: &Solver, f: &Framework) -> Result<ExtensionSet> {
    let weak = solver.enumerate_weakly_admissible(f)?;
    let cogent = solver.enumerate_cogent(f)?;
    Ok(weak.difference(&cogent))
}

/// Side-by-side report of admissible, cogent, and weakly admissible
/// sets, their maximal members, and whether the maximal members agree.
pub fn compare_semantics(solver: &Solver, f: &Framework) -> Result<Report> {
    let admissible = solver.enumerate_admissible(f)?;
    let cogent = solver.enumerate_cogent(f)?;
    let weak = solver.enumerate_weakly_admissible(f)?;
    let max_cogent = maximal_by_inclusion(&cogent);
    let max_weak = maximal_by_inclusion(&weak);
    let mut report = Report::single(f);
    report.summary.maximal_agreement = Some(max_cogent == max_weak);
    let entries = [
        ("admissible", &admissible),
        ("cogent", &cogent),
        ("weakly-admissible", &weak),
        ("maximal-cogent", &max_cogent),
        ("maximal-weakly-admissible", &max_weak),
    ];
    for (name, sets) in entries {
        report
            .semantics
            .insert(name.to_string(), label_sets(f, sets));
    }
    Ok(report)
}

/// Parameters for a randomized sweep. Framework `i` of the sweep uses
/// `min_args + (i mod span)` arguments, the attack probability cycles
/// through `attack_probs` once per span, and the generator seed is
/// `seed + i`.
#[derive(Debug, Clone, PartialEq)]
pub struct RandomSweepConfig {
    pub count: usize,
    pub min_args: usize,
    pub max_args: usize,
    pub attack_probs: Vec<f64>,
    pub seed: u64,
    pub allow_self_attacks: bool,
}

impl RandomSweepConfig {
    fn validate(&self) -> Result<()> {
        if self.min_args > self.max_args {
            return Err(Error::InvalidConfig(format!(
                "empty argument range {}..={}",
                self.min_args, self.max_args
            )));
        }
        if self.attack_probs.is_empty() {
            return Err(Error::InvalidConfig(
                "at least one attack probability is required".to_string(),
            ));
        }
        Ok(())
    }

    fn framework(&self, i: usize) -> Result<Framework> {
        let span = self.max_args - self.min_args + 1;
        random_af(GenConfig {
            n: self.min_args + i % span,
            p: self.attack_probs[(i / span) % self.attack_probs.len()],
            seed: self.seed.wrapping_add(i as u64),
            allow_self_attacks: self.allow_self_attacks,
        })
    }
}

fn merge_into(total: &mut Report, part: Report) {
    total.summary.claims_checked += part.summary.claims_checked;
    total.violations.extend(part.violations);
}

fn sweep_report(description: String, seed: Option<u64>) -> Report {
    Report {
        framework: description,
        semantics: BTreeMap::new(),
        violations: Vec::new(),
        summary: Summary {
            frameworks_checked: 0,
            claims_checked: 0,
            violations: 0,
            maximal_agreement: None,
            seed,
        },
    }
}

/// Runs both checks on every labeled framework whose argument count
/// lies in `min_n..=max_n`.
pub fn sweep_exhaustive(solver: &Solver, min_n: usize, max_n: usize) -> Result<Report> {
    if min_n > max_n {
        return Err(Error::InvalidConfig(format!(
            "empty argument range {min_n}..={max_n}"
        )));
    }
    let total: usize = (min_n..=max_n).map(|n| 1usize << (n * n)).sum();
    let mut report = sweep_report(
        format!(
            "exhaustive sweep: all labeled frameworks with {min_n}..={max_n} arguments \
             ({total} frameworks)"
        ),
        None,
    );
    for n in min_n..=max_n {
        for f in enumerate_all_afs(n)? {
            report.summary.frameworks_checked += 1;
            merge_into(&mut report, check_inclusion(solver, &f)?);
            merge_into(&mut report, check_attacker_dominance(solver, &f)?);
        }
    }
    report.summary.violations = report.violations.len();
    Ok(report)
}

/// Runs both checks on `cfg.count` seeded random frameworks.
pub fn sweep_random(solver: &Solver, cfg: &RandomSweepConfig) -> Result<Report> {
    cfg.validate()?;
    let mut report = sweep_report(
        format!(
            "random sweep: {} frameworks, {}..={} arguments, attack probabilities \
             {:?}, base seed {}",
            cfg.count, cfg.min_args, cfg.max_args, cfg.attack_probs, cfg.seed
        ),
        Some(cfg.seed),
    );
    for i in 0..cfg.count {
        let f = cfg.framework(i)?;
        report.summary.frameworks_checked += 1;
        merge_into(&mut report, check_inclusion(solver, &f)?);
        merge_into(&mut report, check_attacker_dominance(solver, &f)?);
    }
    report.summary.violations = report.violations.len();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::{chain_three, cycle_with_tail, self_attack_pair, set};

    fn solver() -> Solver {
        Solver::new()
    }

    #[test]
    fn inclusion_holds_on_fixtures() {
        for f in [
            self_attack_pair(),
            chain_three(),
            cycle_with_tail(),
            Framework::empty(),
        ] {
            let report = check_inclusion(&solver(), &f).unwrap();
            assert!(report.violations.is_empty());
            assert_eq!(report.summary.violations, 0);
            assert!(report.summary.claims_checked >= 1);
        }
    }

    #[test]
    fn inclusion_report_carries_both_semantics() {
        let report = check_inclusion(&solver(), &chain_three()).unwrap();
        assert_eq!(
            report.semantics["cogent"],
            vec![vec![], vec!["a".to_string()], vec!["a".to_string(), "c".to_string()]]
        );
        assert_eq!(report.semantics["weakly-admissible"].len(), 4);
        assert_eq!(report.summary.claims_checked, 3);
    }

    #[test]
    fn attacker_dominance_holds_on_fixtures() {
        for f in [
            self_attack_pair(),
            chain_three(),
            cycle_with_tail(),
            Framework::empty(),
        ] {
            let report = check_attacker_dominance(&solver(), &f).unwrap();
            assert!(report.violations.is_empty(), "on {f:?}");
        }
    }

    #[test]
    fn strictness_witnesses_match_expectations() {
        let s = solver();
        assert_eq!(
            find_strictness_witnesses(&s, &chain_three()).unwrap(),
            [set(&[2])].into_iter().collect()
        );
        assert_eq!(
            find_strictness_witnesses(&s, &self_attack_pair()).unwrap(),
            ExtensionSet::empty()
        );
        assert_eq!(
            find_strictness_witnesses(&s, &cycle_with_tail()).unwrap(),
            [set(&[3])].into_iter().collect()
        );
    }

    #[test]
    fn comparison_agreement_flags() {
        let s = solver();
        let agree = compare_semantics(&s, &chain_three()).unwrap();
        assert_eq!(agree.summary.maximal_agreement, Some(true));
        assert_eq!(
            agree.semantics["maximal-weakly-admissible"],
            vec![vec!["a".to_string(), "c".to_string()]]
        );

        let disagree = compare_semantics(&s, &cycle_with_tail()).unwrap();
        assert_eq!(disagree.summary.maximal_agreement, Some(false));
        assert_eq!(
            disagree.semantics["maximal-weakly-admissible"],
            vec![vec!["d".to_string()]]
        );
        assert_eq!(disagree.semantics["maximal-cogent"], vec![Vec::<String>::new()]);

        let empty = compare_semantics(&s, &Framework::empty()).unwrap();
        assert_eq!(empty.summary.maximal_agreement, Some(true));
    }

    #[test]
    fn small_exhaustive_sweep_is_clean() {
        let report = sweep_exhaustive(&solver(), 0, 2).unwrap();
        assert_eq!(report.summary.frameworks_checked, 19);
        assert!(report.violations.is_empty());
        assert!(report.summary.claims_checked > 19);

        let only_two = sweep_exhaustive(&solver(), 2, 2).unwrap();
        assert_eq!(only_two.summary.frameworks_checked, 16);
        assert!(sweep_exhaustive(&solver(), 3, 2).is_err());
    }

    #[test]
    fn random_sweep_is_deterministic_and_clean() {
        let cfg = RandomSweepConfig {
            count: 40,
            min_args: 1,
            max_args: 5,
            attack_probs: vec![0.2, 0.5],
            seed: 7,
            allow_self_attacks: true,
        };
        let s = solver();
        let first = sweep_random(&s, &cfg).unwrap();
        let second = sweep_random(&s, &cfg).unwrap();
        assert_eq!(first, second);
        assert!(first.violations.is_empty());
        assert_eq!(first.summary.frameworks_checked, 40);
        assert_eq!(first.summary.seed, Some(7));
    }

    #[test]
    fn sweep_config_validation() {
        let bad_range = RandomSweepConfig {
            count: 1,
            min_args: 5,
            max_args: 2,
            attack_probs: vec![0.5],
            seed: 0,
            allow_self_attacks: false,
        };
        assert!(matches!(
            sweep_random(&solver(), &bad_range),
            Err(Error::InvalidConfig(_))
        ));
        let no_probs = RandomSweepConfig {
            attack_probs: vec![],
            min_args: 1,
            max_args: 2,
            ..bad_range
        };
        assert!(matches!(
            sweep_random(&solver(), &no_probs),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn report_serialization_uses_stable_keys() {
        let report = compare_semantics(&solver(), &chain_three()).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        for key in ["\"framework\"", "\"semantics\"", "\"violations\"", "\"summary\""] {
            assert!(json.contains(key), "missing {key} in {json}");
        }
        assert!(json.contains("\"maximal_agreement\":true"));
    }

    #[test]
    fn text_rendering_is_complete_and_deterministic() {
        let s = solver();
        let report = compare_semantics(&s, &chain_three()).unwrap();
        let text = report.render_text();
        assert!(text.contains("== framework =="));
        assert!(text.contains("cogent: {} {a} {a,c}"));
        assert!(text.contains("maximal agreement: true"));
        assert!(text.contains("violations: 0"));
        assert_eq!(text, compare_semantics(&s, &chain_three()).unwrap().render_text());
    }
}
