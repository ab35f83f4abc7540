//! The t-free predicate.
//!
//! Three independent routes decide it:
//!
//! - [`multiset_pair_violation`] searches `(k, l)` multiset pairs directly, in
//!   order of increasing `k + l`, and yields the canonical witness;
//! - [`meet_in_middle_violation`] hashes reduced signed multisets of size at most
//!   `ceil(t/2)` and looks for two distinct representations of one residue;
//! - [`signed_sum_violation`] enumerates `e_1 x_1 + ... + e_t x_t = 0` with
//!   `e_i` in `{0, +1, -1}` and looks for a solution that does not cancel out.
//!
//! [`is_t_free`] uses the pair search for `t <= 3` and the hashed route for larger
//! `t`, falling back to the pair search only to canonicalize a witness.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{add_mod, CyclicContext, ResidueSet};
use crate::error::Result;

/// Two multisets of members with `|left| + |right| <= t`, `|left| >= |right|`
/// and equal sums mod `n`, not identical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationWitness {
    pub n: u64,
    pub left: Vec<u64>,
    pub right: Vec<u64>,
}

impl ViolationWitness {
    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn left_sum(&self) -> u64 {
        self.left.iter().fold(0, |acc, &x| add_mod(acc, x, self.n))
    }

    pub fn right_sum(&self) -> u64 {
        self.right.iter().fold(0, |acc, &x| add_mod(acc, x, self.n))
    }

    /// Checks the witness invariants against `ctx` and the tested set.
    pub fn is_valid_for(&self, ctx: &CyclicContext, s: &ResidueSet) -> bool {
        let mut l = self.left.clone();
        let mut r = self.right.clone();
        l.sort_unstable();
        r.sort_unstable();
        self.n == ctx.n()
            && self.len() <= ctx.t() as usize
            && self.left.len() >= self.right.len()
            && self.left_sum() == self.right_sum()
            && !(l == r)
            && self.left.iter().chain(&self.right).all(|&x| s.contains(x))
    }
}

impl fmt::Display for ViolationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |xs: &[u64]| {
            if xs.is_empty() {
                "0".to_string()
            } else {
                xs.iter().map(u64::to_string).collect::<Vec<_>>().join("+")
            }
        };
        write!(f, "{}≡{} (mod {})", side(&self.left), side(&self.right), self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Certificate {
    TFree,
    Violation(ViolationWitness),
}

impl Certificate {
    pub fn is_t_free(&self) -> bool {
        matches!(self, Certificate::TFree)
    }

    pub fn witness(&self) -> Option<&ViolationWitness> {
        match self {
            Certificate::TFree => None,
            Certificate::Violation(w) => Some(w),
        }
    }
}

/// Decides whether `s` is t-free in Z_n.
///
/// A violation is reported canonically: smallest `k + l`, then the
/// lexicographically smallest `(left, right)` with both sides sorted.
pub fn is_t_free(ctx: &CyclicContext, s: &ResidueSet) -> Result<Certificate> {
    ctx.check(s)?;
    if !meet_in_middle_violation(ctx, s)? {
        return Ok(Certificate::TFree);
    }
    Ok(match multiset_pair_violation(ctx, s)? {
        Some(w) => Certificate::Violation(w),
        None => Certificate::TFree,
    })
}

/// All multisets of size `k` over `0..m`, as nondecreasing index vectors in
/// lexicographic order, with their sums mod `n`.
fn multisets(elems: &[u64], n: u64, k: usize) -> Vec<(Vec<usize>, u64)> {
    fn rec(
        elems: &[u64],
        n: u64,
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        sum: u64,
        out: &mut Vec<(Vec<usize>, u64)>,
    ) {
        if cur.len() == k {
            out.push((cur.clone(), sum));
            return;
        }
        for i in start..elems.len() {
            cur.push(i);
            rec(elems, n, k, i, cur, add_mod(sum, elems[i], n), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(elems, n, k, 0, &mut Vec::with_capacity(k), 0, &mut out);
    out
}

/// Direct search over `(k, l)` multiset pairs; returns the canonical witness.
pub fn multiset_pair_violation(
    ctx: &CyclicContext,
    s: &ResidueSet,
) -> Result<Option<ViolationWitness>> {
    ctx.check(s)?;
    let n = ctx.n();
    let elems = s.elements();
    let t = ctx.t() as usize;
    for total in 1..=t {
        let mut best: Option<(Vec<u64>, Vec<u64>)> = None;
        for k in total.div_ceil(2)..=total {
            let l = total - k;
            // first two right-hand multisets per residue, in lex order
            let mut by_sum: HashMap<u64, Vec<Vec<usize>>> = HashMap::new();
            for (idx, sum) in multisets(elems, n, l) {
                let slot = by_sum.entry(sum).or_default();
                if slot.len() < 2 {
                    slot.push(idx);
                }
            }
            let found = multisets(elems, n, k).into_iter().find_map(|(left, sum)| {
                by_sum
                    .get(&sum)?
                    .iter()
                    .find(|right| !(k == l && **right == left))
                    .map(|right| (left.clone(), right.clone()))
            });
            if let Some((left, right)) = found {
                let cand = (
                    left.iter().map(|&i| elems[i]).collect::<Vec<_>>(),
                    right.iter().map(|&i| elems[i]).collect::<Vec<_>>(),
                );
                if best.as_ref().is_none_or(|b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
        if let Some((left, right)) = best {
            return Ok(Some(ViolationWitness { n, left, right }));
        }
    }
    Ok(None)
}

/// Visits every reduced signed multiset of at most `max_size` members once:
/// each member gets one signed multiplicity. Stops early when `visit` returns
/// `true`.
fn for_each_signed(
    elems: &[u64],
    n: u64,
    max_size: usize,
    visit: &mut impl FnMut(u64, usize) -> bool,
) -> bool {
    fn rec(
        elems: &[u64],
        n: u64,
        start: usize,
        budget: usize,
        size: usize,
        value: u64,
        visit: &mut impl FnMut(u64, usize) -> bool,
    ) -> bool {
        if visit(value, size) {
            return true;
        }
        if budget == 0 {
            return false;
        }
        for i in start..elems.len() {
            let x = elems[i];
            let neg = (n - x) % n;
            let (mut up, mut down) = (value, value);
            for c in 1..=budget {
                up = add_mod(up, x, n);
                down = add_mod(down, neg, n);
                if rec(elems, n, i + 1, budget - c, size + c, up, visit)
                    || rec(elems, n, i + 1, budget - c, size + c, down, visit)
                {
                    return true;
                }
            }
        }
        false
    }
    rec(elems, n, 0, max_size, 0, 0, visit)
}

/// Residues up to this modulus get a dense table in the hashed route.
const DENSE_LIMIT: u64 = 1 << 24;

/// Meet-in-the-middle test: a violation exists iff some residue has two
/// distinct reduced signed representations of sizes `a <= b` with
/// `b <= ceil(t/2)` and `a <= floor(t/2)`.
///
/// Only the smallest representation size per residue needs remembering: a new
/// representation completes a violation iff it or the smallest earlier one has
/// size at most `floor(t/2)`.
pub fn meet_in_middle_violation(ctx: &CyclicContext, s: &ResidueSet) -> Result<bool> {
    ctx.check(s)?;
    let t = ctx.t() as usize;
    let (lo, hi) = (t / 2, t.div_ceil(2));
    let collides = |seen: Option<usize>, size: usize| seen.is_some_and(|old| old.min(size) <= lo);
    let found = if ctx.n() <= DENSE_LIMIT {
        let mut smallest: Vec<usize> = vec![usize::MAX; ctx.n() as usize];
        for_each_signed(s.elements(), ctx.n(), hi, &mut |value, size| {
            let slot = &mut smallest[value as usize];
            let seen = (*slot != usize::MAX).then_some(*slot);
            *slot = (*slot).min(size);
            collides(seen, size)
        })
    } else {
        let mut smallest: HashMap<u64, usize> = HashMap::new();
        for_each_signed(s.elements(), ctx.n(), hi, &mut |value, size| {
            let seen = smallest.get(&value).copied();
            smallest.insert(value, seen.map_or(size, |old| old.min(size)));
            collides(seen, size)
        })
    };
    Ok(found)
}

/// Signed-coefficient test: does `e_1 x_1 + ... + e_t x_t = 0` have a solution
/// in `s` that does not cancel to nothing?
///
/// Equations are enumerated as nondecreasing sequences over the alphabet
/// `+x_1, -x_1, +x_2, ...`; a sequence using both `+x` and `-x` reduces to a
/// shorter one and is skipped.
pub fn signed_sum_violation(ctx: &CyclicContext, s: &ResidueSet) -> Result<bool> {
    ctx.check(s)?;
    let n = ctx.n();
    let alphabet: Vec<(usize, u64)> = s
        .elements()
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| [(i, x), (i, (n - x) % n)])
        .collect();
    let mut signs: Vec<Option<usize>> = vec![None; s.len()];

    fn rec(
        alphabet: &[(usize, u64)],
        n: u64,
        start: usize,
        left: usize,
        depth: usize,
        sum: u64,
        signs: &mut [Option<usize>],
    ) -> bool {
        if depth > 0 && sum == 0 {
            return true;
        }
        if left == 0 {
            return false;
        }
        for pos in start..alphabet.len() {
            let (elem, term) = alphabet[pos];
            let sign = pos % 2;
            match signs[elem] {
                Some(other) if other != sign => continue,
                _ => {}
            }
            let prev = signs[elem];
            signs[elem] = Some(sign);
            if rec(alphabet, n, pos, left - 1, depth + 1, add_mod(sum, term, n), signs) {
                return true;
            }
            signs[elem] = prev;
        }
        false
    }
    Ok(rec(&alphabet, n, 0, ctx.t() as usize, 0, 0, &mut signs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: u64, t: u32) -> CyclicContext {
        CyclicContext::new(n, t).unwrap()
    }

    fn set(n: u64, xs: &[u64]) -> ResidueSet {
        ResidueSet::new(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn odd_below_half_is_3_free_mod_10() {
        assert!(is_t_free(&ctx(10, 3), &set(10, &[1, 3])).unwrap().is_t_free());
    }

    #[test]
    fn doubling_violation() {
        let cert = is_t_free(&ctx(7, 3), &set(7, &[1, 2])).unwrap();
        let w = cert.witness().unwrap();
        assert_eq!((w.left.as_slice(), w.right.as_slice()), (&[1, 1][..], &[2][..]));
        assert_eq!(w.to_string(), "1+1≡2 (mod 7)");
    }

    #[test]
    fn zero_element_is_a_one_term_violation() {
        let cert = is_t_free(&ctx(5, 1), &set(5, &[0, 2])).unwrap();
        let w = cert.witness().unwrap();
        assert_eq!(w.left, vec![0]);
        assert!(w.right.is_empty());
    }

    #[test]
    fn one_three_mod_8() {
        // 3-free (odd residues below n/2); the first failure is at four terms,
        // where 1+1+1 = 3 is lexicographically first among 1+1+3+3 = 0 and
        // 3+3+3 = 1.
        assert!(is_t_free(&ctx(8, 3), &set(8, &[1, 3])).unwrap().is_t_free());
        let cert = is_t_free(&ctx(8, 4), &set(8, &[1, 3])).unwrap();
        let w = cert.witness().unwrap();
        assert_eq!((w.left.clone(), w.right.clone()), (vec![1, 1, 1], vec![3]));
    }

    #[test]
    fn empty_set_is_t_free() {
        for t in 1..8 {
            assert!(is_t_free(&ctx(3, t), &set(3, &[])).unwrap().is_t_free());
        }
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        assert!(is_t_free(&ctx(7, 3), &set(8, &[1])).is_err());
    }

    #[test]
    fn routes_agree_on_large_t() {
        // {1,4,16,64} is 4-free once n > 256; at n = 256, 64+64+64+64 ≡ 0.
        for (n, expect) in [(1000, false), (257, false), (256, true), (100, true)] {
            let c = ctx(n, 4);
            let s = set(n, &[1, 4, 16, 64]);
            assert_eq!(meet_in_middle_violation(&c, &s).unwrap(), expect, "n={n}");
            assert_eq!(signed_sum_violation(&c, &s).unwrap(), expect, "n={n}");
            assert_eq!(multiset_pair_violation(&c, &s).unwrap().is_some(), expect);
        }
    }
}
