//! Probe windows for law checking.
//!
//! A probe fixes the finite set of basis indices a checker enumerates. On
//! dense backends it is the whole basis. On the ℤ-indexed backend it is a
//! symmetric window of exponents; the closed-form structure rules are exact
//! on every probed tuple, so nothing is skipped. Truncated backends declare
//! a degree cap: a law instance is asserted only when the total degree of
//! its inputs keeps every intermediate inside the stored basis, and is
//! reported as unprobed otherwise.

use std::collections::HashMap;
use std::sync::Arc;

use crate::tensor::Idx;

#[derive(Clone)]
pub struct Probe {
    points: Vec<Idx>,
    degrees: HashMap<Idx, i64>,
    degree_cap: Option<i64>,
    labeler: Arc<dyn Fn(Idx) -> String + Send + Sync>,
}

impl Probe {
    pub fn new(
        points: Vec<Idx>,
        degrees: HashMap<Idx, i64>,
        degree_cap: Option<i64>,
        labeler: Arc<dyn Fn(Idx) -> String + Send + Sync>,
    ) -> Self {
        Probe { points, degrees, degree_cap, labeler }
    }

    /// Probe over `0..dim` with no truncation, labelled by index.
    pub fn dense(dim: usize) -> Self {
        Probe {
            points: (0..dim as Idx).collect(),
            degrees: HashMap::new(),
            degree_cap: None,
            labeler: Arc::new(|i| format!("e{i}")),
        }
    }

    /// Symmetric exponent window `-n..=n`.
    pub fn window(n: i64) -> Self {
        Probe {
            points: (-n..=n).collect(),
            degrees: HashMap::new(),
            degree_cap: None,
            labeler: Arc::new(|i| {
                if i < 0 {
                    format!("x^({i})")
                } else {
                    format!("x^{i}")
                }
            }),
        }
    }

    pub fn with_labels(mut self, labeler: Arc<dyn Fn(Idx) -> String + Send + Sync>) -> Self {
        self.labeler = labeler;
        self
    }

    pub fn points(&self) -> &[Idx] {
        &self.points
    }

    pub fn label(&self, i: Idx) -> String {
        (self.labeler)(i)
    }

    pub fn degree(&self, i: Idx) -> i64 {
        self.degrees.get(&i).copied().unwrap_or(0)
    }

    /// Whether a law instance at this tuple is exactly representable.
    pub fn exact(&self, tuple: &[Idx]) -> bool {
        match self.degree_cap {
            None => true,
            Some(cap) => tuple.iter().map(|i| self.degree(*i)).sum::<i64>() <= cap,
        }
    }

    /// All `arity`-tuples of probe points.
    pub fn tuples(&self, arity: usize) -> Vec<Vec<Idx>> {
        let mut out = vec![Vec::new()];
        for _ in 0..arity {
            out = out
                .into_iter()
                .flat_map(|t| {
                    self.points.iter().map(move |&p| {
                        let mut t2 = t.clone();
                        t2.push(p);
                        t2
                    })
                })
                .collect();
        }
        out
    }
}
