use crate::error::{Error, Result};
use crate::zn::{mul_mod, GammaLayers, ResidueSet};

/// `t * 3^t * m^t`, or `None` if it does not fit in 128 bits.
fn greedy_threshold(t: u32, m: u64) -> Option<u128> {
    let three_t = 3u128.checked_pow(t)?;
    let m_t = u128::from(m).checked_pow(t)?;
    u128::from(t).checked_mul(three_t)?.checked_mul(m_t)
}

/// Whether Z_n is guaranteed a t-free set of size `m` by the greedy argument:
/// `n > t` for `m = 1`, `n >= t * 3^t * m^t` beyond that.
pub fn greedy_precondition_holds(n: u64, t: u32, m: u64) -> bool {
    match m {
        0 => true,
        1 => n > u64::from(t),
        _ => greedy_threshold(t, m).is_some_and(|bound| u128::from(n) >= bound),
    }
}

/// Builds a t-free set of size `m` one element at a time.
///
/// Starting from `{1}`, each step adjoins the smallest `j` such that none of
/// `j, 2j, ..., tj` is a signed sum of at most `t` current members. Such a `j`
/// exists among `1..=3^t |S|^t + 1` whenever the size precondition holds.
pub fn greedy_t_free(n: u64, t: u32, m: u64) -> Result<ResidueSet> {
    if n == 0 || t == 0 {
        return Err(Error::InvalidParameter("need n >= 1 and t >= 1".into()));
    }
    if !greedy_precondition_holds(n, t, m) {
        return Err(Error::Precondition(format!(
            "greedy construction of size {m} needs n >= t*3^t*m^t (or n > t for m = 1); got n = {n}, t = {t}"
        )));
    }
    if m == 0 {
        return ResidueSet::empty(n);
    }
    let depth = t as usize;
    let mut layers = GammaLayers::new(n, depth);
    let mut members = vec![1u64];
    layers.adjoin(1);
    while (members.len() as u64) < m {
        let scan_limit = 3u128.pow(t) * (members.len() as u128).pow(t) + 1;
        let gamma = layers.layer(depth);
        let j = (1..=scan_limit.min(u128::from(n - 1)) as u64)
            .find(|&j| (1..=u64::from(t)).all(|c| !gamma.contains(mul_mod(c, j, n))))
            .unwrap_or_else(|| {
                panic!("greedy step found no admissible j for n={n}, t={t}, S={members:?}")
            });
        members.push(j);
        layers.adjoin(j);
    }
    ResidueSet::new(n, members)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zn::{is_t_free, CyclicContext};

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_t_free(10, 1, 3).unwrap().elements(), &[1, 2, 3]);
        assert_eq!(greedy_t_free(72, 2, 2).unwrap().elements(), &[1, 3]);
        assert_eq!(greedy_t_free(5, 4, 1).unwrap().elements(), &[1]);
    }

    #[test]
    fn greedy_refuses_below_threshold() {
        assert!(matches!(greedy_t_free(71, 2, 2), Err(Error::Precondition(_))));
        assert!(matches!(greedy_t_free(4, 4, 1), Err(Error::Precondition(_))));
        assert!(greedy_t_free(10, 0, 1).is_err());
    }

    #[test]
    fn greedy_output_is_t_free() {
        for t in 1..=3u32 {
            for m in 1..=3u64 {
                let n = (u64::from(t) * 3u64.pow(t) * m.pow(t)).max(u64::from(t) + 1);
                let s = greedy_t_free(n, t, m).unwrap();
                assert_eq!(s.len() as u64, m);
                let ctx = CyclicContext::new(n, t).unwrap();
                assert!(is_t_free(&ctx, &s).unwrap().is_t_free(), "n={n} t={t} {s}");
            }
        }
    }
}
