//! Signed-sum and multiset-sum sets of a residue set.

use serde::{Deserialize, Serialize};

use super::{add_mod, mul_mod, CyclicContext, ResidueBitset, ResidueSet};
use crate::arith::binomial;
use crate::error::{Error, Result};

/// All signed sums `e_1 s_1 + ... + e_t s_t` with `e_i` in `{0, +1, -1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedSumSet {
    pub n: u64,
    pub values: Vec<u64>,
}

impl SignedSumSet {
    pub fn contains(&self, v: u64) -> bool {
        self.values.binary_search(&(v % self.n)).is_ok()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_negation_closed(&self) -> bool {
        self.values.iter().all(|&v| self.contains((self.n - v) % self.n))
    }
}

/// Layered signed-sum sets: `layer(r)` holds all signed sums of at most `r`
/// members. Adjoining an element updates every layer in place.
#[derive(Debug, Clone)]
pub struct GammaLayers {
    n: u64,
    layers: Vec<ResidueBitset>,
}

impl GammaLayers {
    /// Layers `0..=depth` for the empty set: each is `{0}`.
    pub fn new(n: u64, depth: usize) -> Self {
        let mut zero = ResidueBitset::new(n);
        zero.insert(0);
        Self { n, layers: vec![zero; depth + 1] }
    }

    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layer(&self, r: usize) -> &ResidueBitset {
        &self.layers[r]
    }

    /// Adds `x` to the underlying set:
    /// `new[r] = union over |c| <= r of old[r - |c|] + c*x`.
    pub fn adjoin(&mut self, x: u64) {
        let n = self.n;
        let x = x % n;
        for r in (1..self.layers.len()).rev() {
            let mut acc = self.layers[r].clone();
            for c in 1..=r {
                let step = mul_mod(c as u64, x, n);
                let back = (n - step) % n;
                for v in self.layers[r - c].iter() {
                    acc.insert(add_mod(v, step, n));
                    acc.insert(add_mod(v, back, n));
                }
            }
            self.layers[r] = acc;
        }
    }

    /// Given that the current set is t-free, is it still t-free after adding
    /// `y`? Equivalent to `c*y` not lying in layer `t - c` for `c = 1..=t`.
    pub fn admits(&self, y: u64, t: usize) -> bool {
        debug_assert!(t <= self.layers.len());
        (1..=t).all(|c| !self.layers[t - c].contains(mul_mod(c as u64, y, self.n)))
    }
}

/// Signed sums of up to `t` members of `s` (the empty sum included).
pub fn gamma_sums(ctx: &CyclicContext, s: &ResidueSet) -> Result<SignedSumSet> {
    ctx.check(s)?;
    let mut layers = GammaLayers::new(ctx.n(), ctx.t() as usize);
    for &x in s.elements() {
        layers.adjoin(x);
    }
    Ok(SignedSumSet { n: ctx.n(), values: layers.layer(ctx.t() as usize).iter().collect() })
}

/// Sums of between 1 and `h` members of `s`, repetition allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultisetSumSet {
    pub n: u64,
    pub h: u32,
    pub values: Vec<u64>,
    /// Number of formal sums, `C(m + h, h) - 1`.
    pub formal_count: u128,
    /// Every formal sum is nonzero and no two coincide mod `n`.
    pub distinct_and_nonzero: bool,
}

pub fn sigma_sums(n: u64, h: u32, s: &ResidueSet) -> Result<MultisetSumSet> {
    if h < 1 {
        return Err(Error::InvalidParameter("summand count h must be at least 1".into()));
    }
    if s.modulus() != n {
        return Err(Error::ModulusMismatch { expected: n, found: s.modulus() });
    }
    if s.is_empty() {
        return Err(Error::InvalidParameter("multiset sums need a nonempty set".into()));
    }
    let m = s.len() as u64;
    let formal_count = binomial(m + u64::from(h), u64::from(h))? - 1;

    // k-fold sumsets by layering
    let mut layer = ResidueBitset::new(n);
    layer.insert(0);
    let mut union = ResidueBitset::new(n);
    for _ in 0..h {
        let mut next = ResidueBitset::new(n);
        for v in layer.iter() {
            for &x in s.elements() {
                next.insert(add_mod(v, x, n));
            }
        }
        for v in next.iter() {
            union.insert(v);
        }
        layer = next;
    }
    let values: Vec<u64> = union.iter().collect();

    // Distinctness needs room for formal_count nonzero residues.
    let distinct_and_nonzero = formal_count < u128::from(n) && {
        let mut hit = ResidueBitset::new(n);
        hit.insert(0);
        let mut ok = true;
        let elems = s.elements();
        let mut stack: Vec<(usize, u32, u64)> = vec![(0, 0, 0)];
        // each formal multiset visited once: nondecreasing member index
        while let Some((start, size, sum)) = stack.pop() {
            if size > 0 {
                if hit.contains(sum) {
                    ok = false;
                    break;
                }
                hit.insert(sum);
            }
            if size < h {
                for (i, &x) in elems.iter().enumerate().skip(start) {
                    stack.push((i, size + 1, add_mod(sum, x, n)));
                }
            }
        }
        ok
    };
    Ok(MultisetSumSet { n, h, values, formal_count, distinct_and_nonzero })
}
