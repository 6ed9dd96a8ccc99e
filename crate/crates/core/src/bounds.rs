//! Eigenvalue bound evaluators.
//!
//! Each evaluator checks its applicability conditions, evaluates its bound
//! from an [`InvariantSet`], and compares against the observed eigenvalue(s)
//! of a [`Spectrum`]. The resulting [`BoundReport`] carries a signed gap that
//! is non-negative exactly when the bound holds, whichever side it bounds.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::InvariantSet;
use crate::spectra::{build_a_alpha, sym_eigenvalues, Spectrum};

/// Relative tolerance for declaring a bound attained.
pub const EQUALITY_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    T31,
    T32,
    T33,
    T34,
    C35,
    T36,
    T37,
    C38,
    T39Lo,
    T39Hi,
    P210,
    MeanLo,
}

impl BoundId {
    pub const ALL: [BoundId; 12] = [
        BoundId::T31,
        BoundId::T32,
        BoundId::T33,
        BoundId::T34,
        BoundId::C35,
        BoundId::T36,
        BoundId::T37,
        BoundId::C38,
        BoundId::T39Lo,
        BoundId::T39Hi,
        BoundId::P210,
        BoundId::MeanLo,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::T31 => "T31",
            BoundId::T32 => "T32",
            BoundId::T33 => "T33",
            BoundId::T34 => "T34",
            BoundId::C35 => "C35",
            BoundId::T36 => "T36",
            BoundId::T37 => "T37",
            BoundId::C38 => "C38",
            BoundId::T39Lo => "T39_LO",
            BoundId::T39Hi => "T39_HI",
            BoundId::P210 => "P210",
            BoundId::MeanLo => "MEAN_LO",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameters(format!("unknown bound id {s:?}")))
    }
}

impl Serialize for BoundId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// Which quantity a bound constrains, and from which direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// bound ≥ λ₁
    UpperLargest,
    /// bound ≤ λ₁
    LowerLargest,
    /// bound ≤ λₙ
    LowerSmallest,
    /// bound ≥ λₙ
    UpperSmallest,
    /// bound ≤ λ₁ + λₙ
    LowerSum,
    /// λ_k ≤ d_k for every k; the report carries the tightest index.
    PerIndex,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Outcome {
    Applicable {
        bound_value: f64,
        observed: f64,
        /// Non-negative iff the bound holds.
        gap: f64,
        equality: bool,
    },
    Inapplicable {
        reason: String,
    },
    /// The bound could not be evaluated on an input where it should apply.
    Failed {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub id: BoundId,
    pub side: Side,
    pub strict: bool,
    pub outcome: Outcome,
}

impl BoundReport {
    pub fn is_applicable(&self) -> bool {
        matches!(self.outcome, Outcome::Applicable { .. })
    }

    pub fn gap(&self) -> Option<f64> {
        match self.outcome {
            Outcome::Applicable { gap, .. } => Some(gap),
            _ => None,
        }
    }

    pub fn bound_value(&self) -> Option<f64> {
        match self.outcome {
            Outcome::Applicable { bound_value, .. } => Some(bound_value),
            _ => None,
        }
    }

    pub fn observed(&self) -> Option<f64> {
        match self.outcome {
            Outcome::Applicable { observed, .. } => Some(observed),
            _ => None,
        }
    }

    pub fn equality(&self) -> bool {
        matches!(self.outcome, Outcome::Applicable { equality: true, .. })
    }

    /// Applicable with `gap < −tol`, or failed to evaluate.
    pub fn is_violation(&self, tol: f64) -> bool {
        match self.outcome {
            Outcome::Applicable { gap, .. } => gap < -tol,
            Outcome::Inapplicable { .. } => false,
            Outcome::Failed { .. } => true,
        }
    }
}

fn side_of(id: BoundId) -> Side {
    match id {
        BoundId::T31 | BoundId::T32 | BoundId::T33 | BoundId::T34 | BoundId::C35 | BoundId::T36 => {
            Side::UpperLargest
        }
        BoundId::T37 | BoundId::T39Lo => Side::LowerSmallest,
        BoundId::T39Hi => Side::UpperSmallest,
        BoundId::C38 => Side::LowerSum,
        BoundId::P210 => Side::PerIndex,
        BoundId::MeanLo => Side::LowerLargest,
    }
}

fn report(id: BoundId, outcome: Outcome) -> BoundReport {
    BoundReport {
        id,
        side: side_of(id),
        strict: matches!(id, BoundId::T31 | BoundId::T32),
        outcome,
    }
}

fn inapplicable(id: BoundId, reason: &str) -> BoundReport {
    report(
        id,
        Outcome::Inapplicable {
            reason: reason.to_string(),
        },
    )
}

fn failed(id: BoundId, reason: String) -> BoundReport {
    report(id, Outcome::Failed { reason })
}

/// Report from the bound and observed values; `gap` is oriented by the side.
fn compared(id: BoundId, bound_value: f64, observed: f64) -> BoundReport {
    let gap = match side_of(id) {
        Side::UpperLargest | Side::UpperSmallest | Side::PerIndex => bound_value - observed,
        Side::LowerLargest | Side::LowerSmallest | Side::LowerSum => observed - bound_value,
    };
    report(
        id,
        Outcome::Applicable {
            bound_value,
            observed,
            gap,
            equality: gap.abs() <= EQUALITY_TOLERANCE * observed.abs().max(1.0),
        },
    )
}

/// Square root that absorbs rounding-level negatives (relative to `scale`)
/// and rejects genuinely negative radicands.
fn checked_sqrt(radicand: f64, scale: f64) -> Result<f64> {
    if radicand >= 0.0 {
        Ok(radicand.sqrt())
    } else if radicand >= -1e-9 * scale.abs().max(1.0) {
        Ok(0.0)
    } else {
        Err(Error::NegativeDiscriminant(radicand))
    }
}

fn irregular_connected_below_one(inv: &InvariantSet, alpha: f64) -> Option<&'static str> {
    if !inv.connected {
        Some("connected graph required")
    } else if !inv.irregular {
        Some("irregular graph required")
    } else if alpha >= 1.0 {
        Some("alpha < 1 required")
    } else {
        None
    }
}

/// λ₁ < Δ − (1 − α)(nΔ − 2m) / (n·(diam·(nΔ − 2m) + 1)).
pub fn bound_t31(inv: &InvariantSet, s: &Spectrum) -> BoundReport {
    let id = BoundId::T31;
    if let Some(reason) = irregular_connected_below_one(inv, s.alpha) {
        return inapplicable(id, reason);
    }
    let (n, m, delta) = (inv.n as f64, inv.m as f64, inv.max_degree as f64);
    let diam = inv.diameter.expect("connected graphs have a diameter") as f64;
    let excess = n * delta - 2.0 * m;
    let value = delta - (1.0 - s.alpha) * excess / (n * (diam * excess + 1.0));
    compared(id, value, s.largest())
}

/// λ₁ < Δ − (1 − α) / (2n(nΔ − 1)Δ²).
pub fn bound_t32(inv: &InvariantSet, s: &Spectrum) -> BoundReport {
    let id = BoundId::T32;
    if let Some(reason) = irregular_connected_below_one(inv, s.alpha) {
        return inapplicable(id, reason);
    }
    let (n, delta) = (inv.n as f64, inv.max_degree as f64);
    let value = delta - (1.0 - s.alpha) / (2.0 * n * (n * delta - 1.0) * delta * delta);
    compared(id, value, s.largest())
}

/// λ₁(A_α(H_{n−1,Δ₂})): the larger root of
/// `λ² + (1 − αn − Δ₂)λ + (n − 1)(αΔ₂ + α − 1)`.
pub fn closed_form_lambda1_h(n: usize, second_max: usize, alpha: f64) -> Result<f64> {
    if second_max == 0 || second_max + 1 >= n {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= d2 < n - 1, got n = {n}, d2 = {second_max}"
        )));
    }
    let (n, d2) = (n as f64, second_max as f64);
    let radicand = alpha * alpha * n * n + (d2 - 1.0).powi(2)
        - 2.0 * alpha * ((n - 2.0) * d2 + 3.0 * n - 2.0)
        + 4.0 * (n - 1.0);
    if radicand < 0.0 {
        return Err(Error::NegativeDiscriminant(radicand));
    }
    Ok((alpha * n + d2 - 1.0 + radicand.sqrt()) / 2.0)
}

/// The Das-type bound
/// `(α(Δ+1) + d − 1 + √(α²(Δ+1)² + (d−1)² − 2α((Δ−1)d + 3Δ + 1) + 4Δ)) / 2`
/// with `d` the second degree parameter.
pub fn t33_value(max_degree: usize, second: usize, alpha: f64) -> Result<f64> {
    let (delta, d) = (max_degree as f64, second as f64);
    let radicand = alpha * alpha * (delta + 1.0).powi(2) + (d - 1.0).powi(2)
        - 2.0 * alpha * ((delta - 1.0) * d + 3.0 * delta + 1.0)
        + 4.0 * delta;
    let root = checked_sqrt(radicand, (delta + 1.0).powi(2))?;
    Ok((alpha * (delta + 1.0) + d - 1.0 + root) / 2.0)
}

/// Upper bound on λ₁ from Δ and the second-largest degree, attained exactly by
/// regular graphs and the H_{n−1,Δ₂} family.
///
/// The second parameter is d₂, the second entry of the sorted degree
/// sequence. It equals Δ₂ whenever the maximum degree is attained once (or the
/// graph is regular); when two or more vertices have degree Δ the bound with
/// the distinct-value Δ₂ is false (K₄ minus an edge at α = 0), while with d₂ it
/// degenerates to Δ.
pub fn bound_t33(inv: &InvariantSet, s: &Spectrum) -> BoundReport {
    let id = BoundId::T33;
    if !inv.connected {
        return inapplicable(id, "connected graph required");
    }
    match t33_value(inv.max_degree, inv.second_degree, s.alpha) {
        Ok(value) => compared(id, value, s.largest()),
        Err(e) => failed(id, e.to_string()),
    }
}

/// λ₁ ≤ (2αm + √((n−1)(α²(−4m² + 2mn + nZ₁) − 4αmn + 2mn))) / n.
pub fn bound_t34(inv: &InvariantSet, s: &Spectrum) -> BoundReport {
    let id = BoundId::T34;
    let a = s.alpha;
    let (n, m, z1) = (inv.n as f64, inv.m as f64, inv.zagreb1 as f64);
    let radicand =
        (n - 1.0) * (a * a * (-4.0 * m * m + 2.0 * m * n + n * z1) - 4.0 * a * m * n + 2.0 * m * n);
    match checked_sqrt(radicand, (n - 1.0) * n * (z1 + 2.0 * m)) {
        Ok(root) => compared(id, (2.0 * a * m + root) / n, s.largest()),
        Err(e) => failed(id, e.to_string()),
    }
}

/// The previous bound with Z₁ replaced by its upper bound for connected graphs.
pub fn bound_c35(inv: &InvariantSet, s: &Spectrum) -> BoundReport {
    let id = BoundId::C35;
    if !inv.connected {
        return inapplicable(id, "connected graph required");
    }
    let a = s.alpha;
    let (n, m, d) = (inv.n as f64, inv.m as f64, inv.min_degree as f64);
    let radicand = (n - 1.0)
        * (-4.0 * a * a * m * m + 2.0 * m * n * ((n + d) * a * a - 2.0 * a + 1.0)
            - n * n * a * a * (n - 1.0) * d);
    match checked_sqrt(radicand, (n - 1.0) * n * n * n * (d + 2.0 * m)) {
        Ok(root) => compared(id, (2.0 * a * m + root) / n, s.largest()),
        Err(e) => failed(id, e.to_string()),
    }
}

/// λ₁ ≤ αΔ + (1 − α)(1 − 1/ω)n.
pub fn bound_t36(inv: &InvariantSet, s: &Spectrum) -> BoundReport {
    let a = s.alpha;
    let omega = inv.clique_number as f64;
    let value = a * inv.max_degree as f64 + (1.0 - a) * (1.0 - 1.0 / omega) * inv.n as f64;
    compared(BoundId::T36, value, s.largest())
}

fn odd_cycle_margin(inv: &InvariantSet, alpha: f64) -> f64 {
    let diam = inv.diameter.expect("connected graphs have a diameter") as f64;
    (1.0 + alpha) / (inv.n as f64 * (diam + 1.0))
}

/// λₙ ≥ −Δ + (1 + α) / (n(diam + 1)) for connected non-bipartite graphs.
pub fn bound_t37(inv: &InvariantSet, s: &Spectrum) -> BoundReport {
    let id = BoundId::T37;
    if !inv.connected {
        return inapplicable(id, "connected graph required");
    }
    if inv.bipartite {
        return inapplicable(id, "non-bipartite graph required");
    }
    let value = -(inv.max_degree as f64) + odd_cycle_margin(inv, s.alpha);
    compared(id, value, s.smallest())
}

/// λ₁ + λₙ ≥ (1 + α) / (n(diam + 1)) for connected non-bipartite regular graphs.
pub fn bound_c38(inv: &InvariantSet, s: &Spectrum) -> BoundReport {
    let id = BoundId::C38;
    if !inv.connected {
        return inapplicable(id, "connected graph required");
    }
    if inv.irregular {
        return inapplicable(id, "regular graph required");
    }
    if inv.bipartite {
        return inapplicable(id, "non-bipartite graph required");
    }
    compared(
        id,
        odd_cycle_margin(inv, s.alpha),
        s.largest() + s.smallest(),
    )
}

/// αδ ∓ √(2m(1 − α)(1 − 1/ω)) bracket λₙ; returns (lower, upper).
pub fn bound_t39(inv: &InvariantSet, s: &Spectrum) -> (BoundReport, BoundReport) {
    let a = s.alpha;
    let omega = inv.clique_number as f64;
    let center = a * inv.min_degree as f64;
    let radius = (2.0 * inv.m as f64 * (1.0 - a) * (1.0 - 1.0 / omega)).sqrt();
    (
        compared(BoundId::T39Lo, center - radius, s.smallest()),
        compared(BoundId::T39Hi, center + radius, s.smallest()),
    )
}

/// λ_k ≤ d_k for every k; reports the index with the smallest slack.
pub fn bound_p210(degrees: &[usize], s: &Spectrum) -> BoundReport {
    let (k, _) = degrees
        .iter()
        .zip(&s.eigenvalues)
        .map(|(&d, &l)| d as f64 - l)
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("graphs have at least one vertex");
    compared(BoundId::P210, degrees[k] as f64, s.eigenvalues[k])
}

/// d̄ ≤ λ₁ (Rayleigh quotient of the all-ones vector).
pub fn bound_mean_lower(inv: &InvariantSet, s: &Spectrum) -> BoundReport {
    compared(BoundId::MeanLo, inv.mean_degree, s.largest())
}

/// All evaluators, ordered by [`BoundId`].
pub fn evaluate_bounds(inv: &InvariantSet, s: &Spectrum) -> Vec<BoundReport> {
    let (t39_lo, t39_hi) = bound_t39(inv, s);
    vec![
        bound_t31(inv, s),
        bound_t32(inv, s),
        bound_t33(inv, s),
        bound_t34(inv, s),
        bound_c35(inv, s),
        bound_t36(inv, s),
        bound_t37(inv, s),
        bound_c38(inv, s),
        t39_lo,
        t39_hi,
        bound_p210(&inv.degree_sequence, s),
        bound_mean_lower(inv, s),
    ]
}

/// A graph with its invariants computed once, for evaluation at many α.
#[derive(Clone, Debug)]
pub struct GraphAnalysis {
    pub graph: Graph,
    pub invariants: InvariantSet,
}

#[derive(Clone, Debug, Serialize)]
pub struct Evaluation {
    pub invariants: InvariantSet,
    pub spectrum: Spectrum,
    pub reports: Vec<BoundReport>,
}

impl GraphAnalysis {
    pub fn new(graph: Graph) -> Self {
        let invariants = InvariantSet::compute(&graph);
        Self { graph, invariants }
    }

    pub fn spectrum(&self, alpha: f64) -> Result<Spectrum> {
        sym_eigenvalues(&build_a_alpha(&self.graph, alpha)?)
    }

    pub fn evaluate(&self, alpha: f64) -> Result<(Spectrum, Vec<BoundReport>)> {
        let spectrum = self.spectrum(alpha)?;
        let reports = evaluate_bounds(&self.invariants, &spectrum);
        Ok((spectrum, reports))
    }
}

/// Invariants, spectrum and every bound report for `g` at `alpha`.
pub fn evaluate_all(g: &Graph, alpha: f64) -> Result<Evaluation> {
    let analysis = GraphAnalysis::new(g.clone());
    let (spectrum, reports) = analysis.evaluate(alpha)?;
    Ok(Evaluation {
        invariants: analysis.invariants,
        spectrum,
        reports,
    })
}
