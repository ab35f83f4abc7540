//! Harmonic polynomial bases and counting formulas.

use super::polynomial::{Monomial, Polynomial};
use crate::arith::{binomial, binomial_signed};
use crate::error::{Error, Result};

/// `C(d+k, k) - C(d+k-2, k-2)`: the dimension of homogeneous harmonic
/// polynomials of degree `k` in `d + 1` variables.
pub fn dim_harm(d: u32, k: u32) -> Result<u128> {
    if k < 1 {
        return Err(Error::InvalidParameter("degree k must be at least 1".into()));
    }
    let (d, k) = (i64::from(d), i64::from(k));
    Ok(binomial_signed(d + k, k)? - binomial_signed(d + k - 2, k - 2)?)
}

/// Minimum size of a spherical `t`-design on `S^d`:
/// `C(d + floor(t/2), floor(t/2)) + C(d + floor((t-1)/2), floor((t-1)/2))`.
pub fn dgs_bound(t: u32, d: u32) -> Result<u128> {
    if t < 1 || d < 1 {
        return Err(Error::InvalidParameter("need t >= 1 and d >= 1".into()));
    }
    let (d, a, b) = (u64::from(d), u64::from(t / 2), u64::from((t - 1) / 2));
    binomial(d + a, a)?
        .checked_add(binomial(d + b, b)?)
        .ok_or(Error::Overflow("dgs bound"))
}

/// Basis of harmonic homogeneous polynomials of degree `k` in `x_0..x_d`:
///
/// - `k = 1`: `x_i`;
/// - `k = 2`: `x_i x_j` (`i < j`) and `x_i^2 - x_{i+1}^2`;
/// - `k = 3`: `x_i x_j x_k` (`i < j < k`) and `x_i^3 - 3 x_i x_j^2` (`i != j`).
pub fn harmonic_basis(d: u32, k: u32) -> Result<Vec<Polynomial>> {
    if d < 1 {
        return Err(Error::InvalidParameter("sphere dimension d must be at least 1".into()));
    }
    let v = d as usize + 1;
    let mono = |idx: &[usize]| Monomial::product(v, idx);
    let mut out = Vec::new();
    match k {
        1 => {
            for i in 0..v {
                out.push(Polynomial::from_terms(v, [(1, mono(&[i]))]));
            }
        }
        2 => {
            for i in 0..v {
                for j in i + 1..v {
                    out.push(Polynomial::from_terms(v, [(1, mono(&[i, j]))]));
                }
            }
            for i in 0..v - 1 {
                out.push(Polynomial::from_terms(v, [(1, mono(&[i, i])), (-1, mono(&[i + 1, i + 1]))]));
            }
        }
        3 => {
            for i in 0..v {
                for j in i + 1..v {
                    for l in j + 1..v {
                        out.push(Polynomial::from_terms(v, [(1, mono(&[i, j, l]))]));
                    }
                }
            }
            for i in 0..v {
                for j in (0..v).filter(|&j| j != i) {
                    out.push(Polynomial::from_terms(
                        v,
                        [(1, mono(&[i, i, i])), (-3, mono(&[i, j, j]))],
                    ));
                }
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "harmonic bases are provided for degrees 1..=3, not {k}"
            )))
        }
    }
    Ok(out)
}
