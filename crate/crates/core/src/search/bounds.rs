use serde::{Deserialize, Serialize};

use super::greedy::greedy_precondition_holds;
use crate::arith::binomial;
use crate::constructions::{closed_form, powers_construction, three_free_construct};
use crate::error::{Error, Result};

/// Where a bound on `s(Z_n, t)` comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    /// The empty set.
    Trivial,
    /// `{1..n-1}` for t = 1, `{1..floor((n-1)/2)}` for t = 2.
    ClosedForm,
    /// The explicit 3-free constructions.
    ThreeFree,
    /// `{1, t, ..., t^(m-1)}`.
    Powers,
    /// Largest `m` with `t * 3^t * m^t <= n` (or `1` when `n > t`).
    GreedyFeasible,
    /// `0` is never a member.
    NonzeroResidues,
    /// `a` and `n - a` never both belong when `t >= 2`.
    HalfRange,
    /// `floor(n/4)` for 3-free sets, inherited by every `t >= 3`.
    QuarterN,
    /// Distinct sums of at most `floor(t/2)` members: `C(m + h, h) <= n`.
    MultisetCount,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub value: u64,
    pub source: BoundSource,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: u64,
    pub t: u32,
    pub lower: u64,
    pub upper: u64,
    pub lower_bounds: Vec<BoundEntry>,
    pub upper_bounds: Vec<BoundEntry>,
    pub asymptotic_note: String,
}

impl BoundsReport {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }
}

/// Largest `m` with `t * 3^t * m^t <= n`; `1` if only the base case `n > t` holds.
fn greedy_feasible(n: u64, t: u32) -> u64 {
    if !greedy_precondition_holds(n, t, 1) {
        return 0;
    }
    let mut m = 1;
    while greedy_precondition_holds(n, t, m + 1) {
        m += 1;
    }
    m
}

/// Largest `m` with `C(m + h, h) <= n`.
fn multiset_count_bound(n: u64, h: u32) -> Result<u64> {
    let h = u64::from(h);
    let mut m = 0;
    while binomial(m + 1 + h, h)? <= u128::from(n) {
        m += 1;
    }
    Ok(m)
}

pub fn bounds(n: u64, t: u32) -> Result<BoundsReport> {
    if n == 0 || t == 0 {
        return Err(Error::InvalidParameter("need n >= 1 and t >= 1".into()));
    }
    let entry = |value, source| BoundEntry { value, source };

    let mut lower_bounds = vec![entry(0, BoundSource::Trivial)];
    if t <= 2 {
        lower_bounds.push(entry(closed_form(n, t)?.guaranteed_size as u64, BoundSource::ClosedForm));
    }
    if t == 3 {
        lower_bounds.push(entry(three_free_construct(n)?.guaranteed_size as u64, BoundSource::ThreeFree));
    }
    if t >= 2 && n > u64::from(t) {
        lower_bounds.push(entry(powers_construction(n, t)?.guaranteed_size as u64, BoundSource::Powers));
    }
    lower_bounds.push(entry(greedy_feasible(n, t), BoundSource::GreedyFeasible));

    let mut upper_bounds = vec![entry(n - 1, BoundSource::NonzeroResidues)];
    if t >= 2 {
        upper_bounds.push(entry((n - 1) / 2, BoundSource::HalfRange));
        upper_bounds.push(entry(multiset_count_bound(n, t / 2)?, BoundSource::MultisetCount));
    }
    if t >= 3 {
        upper_bounds.push(entry(n / 4, BoundSource::QuarterN));
    }

    let lower = lower_bounds.iter().map(|e| e.value).max().unwrap_or(0);
    let upper = upper_bounds.iter().map(|e| e.value).min().unwrap_or(n - 1);
    debug_assert!(lower <= upper, "n={n} t={t}: {lower} > {upper}");

    let h = t / 2;
    let asymptotic_note = if h == 0 {
        format!("t = {t}: s(Z_n,1) = n - 1 exactly")
    } else {
        format!(
            "c1(t) n^(1/t) <= s(Z_n,t) <= c2(t) n^(1/{h}); here c1 = (t*3^t)^(-1/t) = {:.6} \
             from t*3^t*m^t <= n, and c2 = ({h}!)^(1/{h}) = {:.6} from C(m+{h},{h}) <= n",
            (f64::from(t) * 3f64.powi(t as i32)).powf(-1.0 / f64::from(t)),
            (1..=h).map(f64::from).product::<f64>().powf(1.0 / f64::from(h)),
        )
    };

    Ok(BoundsReport { n, t, lower, upper, lower_bounds, upper_bounds, asymptotic_note })
}
