//! Numerical design checks.
//!
//! Strength mode sums every harmonic basis polynomial of degree `<= t` over the
//! points; a `t`-design makes each sum vanish. Index mode compares the mean of
//! every degree-`k` monomial with its exact average over the sphere.
//!
//! Each residual is a left-to-right sum over the points in file order, so
//! results do not depend on how the polynomials are spread over threads.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::basis::harmonic_basis;
use super::polynomial::Monomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "mode", content = "degree")]
pub enum VerificationMode {
    Strength(u32),
    Index(u32),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Residual {
    pub label: String,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub mode: VerificationMode,
    pub points: usize,
    pub dimension: usize,
    pub tolerance: f64,
    pub residuals: Vec<Residual>,
    pub max_residual: f64,
    pub pass: bool,
    /// `sum_i x_i[j]^2` for each coordinate `j` (strength mode only).
    pub second_moments: Option<Vec<f64>>,
    /// `max - min` of the second moments.
    pub second_moment_spread: Option<f64>,
}

/// `1e-9 * n`, the default residual tolerance for `n` points.
pub fn default_tolerance(n: usize) -> f64 {
    1e-9 * n as f64
}

/// Exact average of a monomial over the unit sphere `S^d` (`d + 1` variables):
/// zero if any exponent is odd, otherwise
/// `prod_j (a_j - 1)!! / prod_{r=1}^{s} (d + 2r - 1)` with `s = |a| / 2`.
pub fn sphere_average(m: &Monomial) -> f64 {
    if m.has_odd_exponent() {
        return 0.0;
    }
    let d = m.vars() as f64 - 1.0;
    let double_factorial = |e: u32| (1..e).step_by(2).map(f64::from).product::<f64>();
    let numer: f64 = m.0.iter().map(|&e| double_factorial(e)).product();
    let s = m.degree() / 2;
    let denom: f64 = (1..=s).map(|r| d + 2.0 * f64::from(r) - 1.0).product();
    numer / denom
}

fn check_points(points: &[Vec<f64>], tol: f64) -> Result<usize> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    let vars = points.first().map(Vec::len).ok_or_else(|| {
        Error::InvalidParameter("point set is empty".into())
    })?;
    if vars < 2 {
        return Err(Error::InvalidParameter("points need at least two coordinates".into()));
    }
    if points.iter().any(|p| p.len() != vars) {
        return Err(Error::InvalidParameter("points have differing dimensions".into()));
    }
    Ok(vars)
}

fn finish(
    mode: VerificationMode,
    points: &[Vec<f64>],
    vars: usize,
    tol: f64,
    residuals: Vec<Residual>,
) -> VerificationReport {
    let max_residual = residuals.iter().map(|r| r.value).fold(0.0, f64::max);
    // NaN residuals never pass
    let pass = residuals.iter().all(|r| r.value <= tol);
    VerificationReport {
        mode,
        points: points.len(),
        dimension: vars - 1,
        tolerance: tol,
        residuals,
        max_residual,
        pass,
        second_moments: None,
        second_moment_spread: None,
    }
}

/// Checks that `sum_x f(x) = 0` for every basis polynomial of degree `1..=t`.
pub fn verify_strength(points: &[Vec<f64>], t: u32, tol: f64) -> Result<VerificationReport> {
    if !(1..=3).contains(&t) {
        return Err(Error::Unsupported(format!(
            "strength checks cover t in 1..=3 (got {t}); use the index check instead"
        )));
    }
    let vars = check_points(points, tol)?;
    let d = (vars - 1) as u32;
    let mut basis = Vec::new();
    for k in 1..=t {
        basis.extend(harmonic_basis(d, k)?);
    }
    let residuals = basis
        .par_iter()
        .map(|f| Residual {
            label: f.to_string(),
            value: points.iter().map(|x| f.eval(x)).sum::<f64>().abs(),
        })
        .collect();
    let mut report = finish(VerificationMode::Strength(t), points, vars, tol, residuals);
    let moments: Vec<f64> =
        (0..vars).map(|j| points.iter().map(|x| x[j] * x[j]).sum()).collect();
    let hi = moments.iter().copied().fold(f64::MIN, f64::max);
    let lo = moments.iter().copied().fold(f64::MAX, f64::min);
    report.second_moment_spread = Some(hi - lo);
    report.second_moments = Some(moments);
    Ok(report)
}

/// Checks `|mean_X f - average_sphere f| <= tol` for every monomial of degree `k`.
pub fn verify_index(points: &[Vec<f64>], k: u32, tol: f64) -> Result<VerificationReport> {
    if k < 1 {
        return Err(Error::InvalidParameter("degree k must be at least 1".into()));
    }
    let vars = check_points(points, tol)?;
    let n = points.len() as f64;
    let residuals = Monomial::all_of_degree(vars, k)
        .par_iter()
        .map(|f| {
            let mean = points.iter().map(|x| f.eval(x)).sum::<f64>() / n;
            Residual { label: f.to_string(), value: (mean - sphere_average(f)).abs() }
        })
        .collect();
    Ok(finish(VerificationMode::Index(k), points, vars, tol, residuals))
}

/// `sum_x f(x)` for a single monomial.
pub fn monomial_sum(points: &[Vec<f64>], f: &Monomial) -> f64 {
    points.iter().map(|x| f.eval(x)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::build::{build_design, GeneratorSet};

    fn design(n: u64, a: &[u64]) -> Vec<Vec<f64>> {
        build_design(&GeneratorSet::new(n, a.to_vec()).unwrap()).points
    }

    #[test]
    fn circle_averages() {
        let m = |e: &[u32]| Monomial(e.to_vec());
        assert_eq!(sphere_average(&m(&[2, 0])), 0.5);
        assert_eq!(sphere_average(&m(&[4, 0])), 3.0 / 8.0);
        assert_eq!(sphere_average(&m(&[2, 2])), 1.0 / 8.0);
        assert_eq!(sphere_average(&m(&[1, 1])), 0.0);
        assert_eq!(sphere_average(&m(&[0, 2, 0])), 1.0 / 3.0);
        assert_eq!(sphere_average(&m(&[0, 0])), 1.0);
    }

    #[test]
    fn circle_averages_match_quadrature() {
        // a regular 64-gon integrates trigonometric polynomials of degree < 64 exactly
        let pts = design(64, &[1]);
        for e in [[2, 0], [4, 0], [2, 2], [6, 2], [3, 1]] {
            let f = Monomial(e.to_vec());
            let mean = monomial_sum(&pts, &f) / 64.0;
            assert!((mean - sphere_average(&f)).abs() < 1e-14, "{f}");
        }
    }

    #[test]
    fn square_is_a_one_design() {
        let sq = design(4, &[1]);
        let r = verify_strength(&sq, 1, 1e-9).unwrap();
        assert!(r.pass);
        assert!(r.max_residual < 1e-15);
        let r = verify_index(&sq, 2, 1e-9).unwrap();
        assert!(r.pass);
    }

    #[test]
    fn three_free_generators_give_a_three_design() {
        let pts = design(10, &[1, 3]);
        let r = verify_strength(&pts, 3, 1e-8).unwrap();
        assert!(r.pass, "{:?}", r.max_residual);
        for m in r.second_moments.unwrap() {
            assert!((m - 10.0 / 4.0).abs() < 1e-10 * 10.0);
        }
    }

    #[test]
    fn one_three_mod_8() {
        // {1,3} is 3-free mod 8, so degree <= 3 vanishes; 1 - 3*3 ≡ 0 (mod 8)
        // leaves a surviving degree-4 term.
        let pts = design(8, &[1, 3]);
        assert!(verify_strength(&pts, 3, 1e-8).unwrap().pass);
        let f = Monomial::product(4, &[1, 3, 3, 3]);
        assert!((monomial_sum(&pts, &f) + 0.25).abs() < 1e-12);
        assert!(!verify_index(&pts, 4, 1e-8).unwrap().pass);
    }

    #[test]
    fn non_free_generators_fail() {
        // 1 + 1 ≡ 2 (mod 7): {1, 2} is not 3-free
        let pts = design(7, &[1, 2]);
        let r = verify_strength(&pts, 3, 1e-8).unwrap();
        assert!(!r.pass);
        assert!(r.max_residual > 1e-3);
    }

    #[test]
    fn argument_errors() {
        let sq = design(4, &[1]);
        assert!(matches!(verify_strength(&sq, 4, 1e-9), Err(Error::Unsupported(_))));
        assert!(verify_strength(&sq, 1, 0.0).is_err());
        assert!(verify_strength(&[], 1, 1e-9).is_err());
        assert!(verify_index(&sq, 0, 1e-9).is_err());
        assert!(verify_index(&[vec![1.0, 0.0], vec![1.0]], 1, 1e-9).is_err());
    }
}
