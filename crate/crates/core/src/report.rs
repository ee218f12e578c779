//! Law-check reports.
//!
//! All axiom checkers in this crate produce [`Report`] values: one
//! [`LawReport`] per law, each carrying its status, the witnesses of any
//! violations (index tuple plus the full residual), and timing.

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;

use crate::probe::Probe;
use crate::tensor::Idx;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawStatus {
    Pass,
    Fail,
    /// No violations among the probed tuples, but some tuples were skipped
    /// because the backend cannot represent their intermediates exactly.
    Unprobed,
}

impl fmt::Display for LawStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LawStatus::Pass => write!(f, "pass"),
            LawStatus::Fail => write!(f, "fail"),
            LawStatus::Unprobed => write!(f, "unprobed"),
        }
    }
}

/// A violating tuple together with the rendered residual.
#[derive(Clone, Debug)]
pub struct Witness {
    pub tuple: Vec<Idx>,
    pub labels: Vec<String>,
    pub residual: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) residual {}", self.labels.join(", "), self.residual)
    }
}

#[derive(Clone, Debug)]
pub struct LawReport {
    pub law: String,
    pub status: LawStatus,
    pub witnesses: Vec<Witness>,
    pub checked: usize,
    pub skipped: usize,
    pub millis: u128,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.status != LawStatus::Fail
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<28} {:<8} ({} tuple(s), {} skipped, {} ms)",
            self.law, self.status, self.checked, self.skipped, self.millis
        )?;
        if let Some(w) = self.witnesses.first() {
            write!(f, " first witness: {w}")?;
        }
        Ok(())
    }
}

/// A bundle of law reports about one object.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub subject: String,
    pub laws: Vec<LawReport>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), laws: Vec::new() }
    }

    pub fn push(&mut self, law: LawReport) {
        self.laws.push(law);
    }

    pub fn merge(&mut self, other: Report) {
        self.laws.extend(other.laws);
    }

    /// True when no law failed (unprobed tuples do not fail).
    pub fn passed(&self) -> bool {
        self.laws.iter().all(LawReport::passed)
    }

    pub fn law(&self, name: &str) -> Option<&LawReport> {
        self.laws.iter().find(|l| l.law == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for law in &self.laws {
            writeln!(f, "  {law}")?;
        }
        Ok(())
    }
}

/// Maximum number of witnesses kept per law; the first one is always the
/// first violating tuple in enumeration order.
const MAX_WITNESSES: usize = 3;

/// Runs a residual check over every `arity`-tuple of probe points.
///
/// `residual` returns `None` for a satisfied tuple and a rendered residual
/// otherwise. Tuples whose total degree exceeds the probe's exactness cap are
/// skipped and reported as unprobed. Probed tuples are evaluated in parallel.
pub fn check_law(
    law: &str,
    probe: &Probe,
    arity: usize,
    residual: impl Fn(&[Idx]) -> Option<String> + Sync,
) -> LawReport {
    let start = Instant::now();
    let tuples = probe.tuples(arity);
    let (probed, skipped): (Vec<_>, Vec<_>) = tuples.into_iter().partition(|t| probe.exact(t));
    run_partitioned(law, probe, probed, skipped, start, residual)
}

/// Like [`check_law`] but with one probe per tuple slot, for laws mixing an
/// algebra basis with a module basis. Exactness gating applies the first
/// probe's cap to the slots it owns.
pub fn check_law_multi(
    law: &str,
    probes: &[&Probe],
    residual: impl Fn(&[Idx]) -> Option<String> + Sync,
) -> LawReport {
    let start = Instant::now();
    let mut tuples = vec![Vec::new()];
    for probe in probes {
        tuples = tuples
            .into_iter()
            .flat_map(|t: Vec<Idx>| {
                probe.points().iter().map(move |&p| {
                    let mut t2 = t.clone();
                    t2.push(p);
                    t2
                })
            })
            .collect();
    }
    let exact = |t: &Vec<Idx>| {
        probes
            .iter()
            .zip(t.iter())
            .all(|(probe, &i)| probe.exact(&[i]))
    };
    let (probed, skipped): (Vec<_>, Vec<_>) = tuples.into_iter().partition(exact);
    let labeler = MultiLabeler { probes: probes.to_vec() };
    let mut report = run_partitioned_with(law, probed, skipped, start, residual, |t| {
        labeler.labels(t)
    });
    report.law = law.to_string();
    report
}

struct MultiLabeler<'a> {
    probes: Vec<&'a Probe>,
}

impl MultiLabeler<'_> {
    fn labels(&self, t: &[Idx]) -> Vec<String> {
        t.iter()
            .zip(&self.probes)
            .map(|(&i, p)| p.label(i))
            .collect()
    }
}

fn run_partitioned(
    law: &str,
    probe: &Probe,
    probed: Vec<Vec<Idx>>,
    skipped: Vec<Vec<Idx>>,
    start: Instant,
    residual: impl Fn(&[Idx]) -> Option<String> + Sync,
) -> LawReport {
    run_partitioned_with(law, probed, skipped, start, residual, |t| {
        t.iter().map(|&i| probe.label(i)).collect()
    })
}

fn run_partitioned_with(
    law: &str,
    probed: Vec<Vec<Idx>>,
    skipped: Vec<Vec<Idx>>,
    start: Instant,
    residual: impl Fn(&[Idx]) -> Option<String> + Sync,
    labels: impl Fn(&[Idx]) -> Vec<String>,
) -> LawReport {
    let mut violations: Vec<(Vec<Idx>, String)> = probed
        .par_iter()
        .filter_map(|t| residual(t).map(|r| (t.clone(), r)))
        .collect();
    violations.sort();
    let status = if !violations.is_empty() {
        LawStatus::Fail
    } else if !skipped.is_empty() {
        LawStatus::Unprobed
    } else {
        LawStatus::Pass
    };
    LawReport {
        law: law.to_string(),
        status,
        witnesses: violations
            .iter()
            .take(MAX_WITNESSES)
            .map(|(t, r)| Witness {
                tuple: t.clone(),
                labels: labels(t),
                residual: r.clone(),
            })
            .collect(),
        checked: probed.len(),
        skipped: skipped.len(),
        millis: start.elapsed().as_millis(),
    }
}
