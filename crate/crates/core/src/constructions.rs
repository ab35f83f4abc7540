//! Explicit t-free sets with guaranteed sizes.

use serde::{Deserialize, Serialize};

use crate::arith::smallest_prime_divisor_5_mod_6;
use crate::error::{Error, Result};
use crate::zn::ResidueSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Powers,
    ClosedFormT1,
    ClosedFormT2,
    OddBelowHalf,
    OddBelowThird,
    PMod6,
    Greedy,
}

impl Method {
    pub fn tag(&self) -> &'static str {
        match self {
            Method::Powers => "powers",
            Method::ClosedFormT1 => "closed-form-t1",
            Method::ClosedFormT2 => "closed-form-t2",
            Method::OddBelowHalf => "odd-below-half",
            Method::OddBelowThird => "odd-below-third",
            Method::PMod6 => "p-mod-6",
            Method::Greedy => "greedy",
        }
    }
}

/// The prime `p = 6q + 5` behind the [`Method::PMod6`] construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeCase {
    pub p: u64,
    pub q: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionResult {
    pub set: ResidueSet,
    pub method: Method,
    /// Strength the set is advertised for.
    pub t: u32,
    pub guaranteed_size: usize,
    pub case: Option<PrimeCase>,
}

/// `{1, t, t^2, ..., t^(m-1)}` with `m` the largest integer such that `t^m <= n - 1`.
pub fn powers_construction(n: u64, t: u32) -> Result<ConstructionResult> {
    if t < 2 {
        return Err(Error::InvalidParameter("powers construction needs t >= 2".into()));
    }
    let base = u64::from(t);
    if n <= base {
        return Err(Error::Precondition(format!(
            "no powers construction for n = {n} <= t = {t}"
        )));
    }
    let mut elems = Vec::new();
    let mut power: u64 = 1;
    // t^i joins the set exactly when t^(i+1) <= n - 1
    while let Some(next) = power.checked_mul(base).filter(|&v| v < n) {
        elems.push(power);
        power = next;
    }
    let guaranteed_size = elems.len();
    Ok(ConstructionResult {
        set: ResidueSet::new(n, elems)?,
        method: Method::Powers,
        t,
        guaranteed_size,
        case: None,
    })
}

/// The maximum sets for `t = 1` (`{1..n-1}`) and `t = 2` (`{1..floor((n-1)/2)}`).
pub fn closed_form(n: u64, t: u32) -> Result<ConstructionResult> {
    if n == 0 {
        return Err(Error::InvalidParameter("modulus n must be at least 1".into()));
    }
    let (top, method) = match t {
        1 => (n - 1, Method::ClosedFormT1),
        2 => ((n - 1) / 2, Method::ClosedFormT2),
        _ => return Err(Error::Unsupported(format!("closed form only for t in {{1,2}}, got {t}"))),
    };
    Ok(ConstructionResult {
        set: ResidueSet::new(n, 1..=top)?,
        method,
        t,
        guaranteed_size: top as usize,
        case: None,
    })
}

/// A 3-free set of the size guaranteed for each residue class of `n`:
///
/// - `n` even: odd residues below `n/2`, size `floor(n/4)`;
/// - `n` odd with smallest prime divisor `p = 6q + 5`:
///   `{ i*p + 2j + 1 : 0 <= i < n/p, 0 <= j <= q }`, size `n(p+1)/(6p)`;
/// - otherwise: odd residues below `n/3`, size `floor(n/6)`.
pub fn three_free_construct(n: u64) -> Result<ConstructionResult> {
    if n == 0 {
        return Err(Error::InvalidParameter("modulus n must be at least 1".into()));
    }
    let odd_below = |bound_num: u64, bound_den: u64| {
        // odd x with x * den < num
        (1..n).step_by(2).take_while(move |&x| x * bound_den < bound_num)
    };
    let result = if n % 2 == 0 {
        ConstructionResult {
            set: ResidueSet::new(n, odd_below(n, 2))?,
            method: Method::OddBelowHalf,
            t: 3,
            guaranteed_size: (n / 4) as usize,
            case: None,
        }
    } else if let Some(p) = smallest_prime_divisor_5_mod_6(n) {
        let q = (p - 5) / 6;
        let elems = (0..n / p).flat_map(|i| (0..=q).map(move |j| i * p + 2 * j + 1));
        ConstructionResult {
            set: ResidueSet::new(n, elems)?,
            method: Method::PMod6,
            t: 3,
            guaranteed_size: ((n / p) * (q + 1)) as usize,
            case: Some(PrimeCase { p, q }),
        }
    } else {
        ConstructionResult {
            set: ResidueSet::new(n, odd_below(n, 3))?,
            method: Method::OddBelowThird,
            t: 3,
            guaranteed_size: (n / 6) as usize,
            case: None,
        }
    };
    debug_assert_eq!(result.set.len(), result.guaranteed_size);
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zn::{is_t_free, CyclicContext};

    fn certified(r: &ConstructionResult) -> bool {
        let ctx = CyclicContext::new(r.set.modulus(), r.t).unwrap();
        is_t_free(&ctx, &r.set).unwrap().is_t_free()
    }

    #[test]
    fn powers_examples() {
        let r = powers_construction(28, 3).unwrap();
        assert_eq!(r.set.elements(), &[1, 3, 9]);
        let r = powers_construction(82, 3).unwrap();
        assert_eq!(r.set.elements(), &[1, 3, 9, 27]);
        let r = powers_construction(17, 2).unwrap();
        assert_eq!(r.set.elements(), &[1, 2, 4, 8]);
        assert!(certified(&r));
        assert!(powers_construction(3, 3).is_err());
        assert!(powers_construction(10, 1).is_err());
    }

    #[test]
    fn powers_boundary_is_exact() {
        // t^m = n - 1 exactly: m includes that power
        assert_eq!(powers_construction(244, 3).unwrap().guaranteed_size, 5);
        assert_eq!(powers_construction(243, 3).unwrap().guaranteed_size, 4);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(9, 2).unwrap().set.elements(), &[1, 2, 3, 4]);
        assert!(closed_form(2, 2).unwrap().set.is_empty());
        assert_eq!(closed_form(5, 1).unwrap().set.elements(), &[1, 2, 3, 4]);
        assert!(closed_form(1, 1).unwrap().set.is_empty());
        assert!(closed_form(5, 3).is_err());
    }

    #[test]
    fn three_free_examples() {
        let r = three_free_construct(12).unwrap();
        assert_eq!(r.set.elements(), &[1, 3, 5]);
        assert_eq!(r.method, Method::OddBelowHalf);

        let r = three_free_construct(25).unwrap();
        assert_eq!(r.set.elements(), &[1, 6, 11, 16, 21]);
        assert_eq!(r.case, Some(PrimeCase { p: 5, q: 0 }));

        let r = three_free_construct(99).unwrap();
        let expect: Vec<u64> =
            (0..9).flat_map(|i| [11 * i + 1, 11 * i + 3]).collect();
        assert_eq!(r.set.elements(), expect.as_slice());
        assert_eq!(r.guaranteed_size, 18);
        assert_eq!(r.case, Some(PrimeCase { p: 11, q: 1 }));

        let r = three_free_construct(21).unwrap();
        assert_eq!(r.set.elements(), &[1, 3, 5]);
        assert_eq!(r.method, Method::OddBelowThird);

        assert!(three_free_construct(1).unwrap().set.is_empty());
        for r in [12, 25, 99, 21].map(|n| three_free_construct(n).unwrap()) {
            assert!(certified(&r));
        }
    }
}
