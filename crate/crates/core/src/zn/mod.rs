//! Residue sets in Z_n and the t-free predicate.
//!
//! Elements are stored as least nonnegative residues in increasing order.

mod bitset;
mod predicate;
mod sums;

pub use bitset::ResidueBitset;
pub use predicate::{
    is_t_free, meet_in_middle_violation, multiset_pair_violation, signed_sum_violation,
    Certificate, ViolationWitness,
};
pub use sums::{gamma_sums, sigma_sums, GammaLayers, MultisetSumSet, SignedSumSet};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The group Z_n together with the strength `t` being tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicContext {
    n: u64,
    t: u32,
}

impl CyclicContext {
    pub fn new(n: u64, t: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("modulus n must be at least 1".into()));
        }
        if t == 0 {
            return Err(Error::InvalidParameter("strength t must be at least 1".into()));
        }
        Ok(Self { n, t })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub(crate) fn check(&self, s: &ResidueSet) -> Result<()> {
        if s.n != self.n {
            return Err(Error::ModulusMismatch { expected: self.n, found: s.n });
        }
        Ok(())
    }
}

/// A set of distinct residues modulo `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ResidueSet {
    n: u64,
    elements: Vec<u64>,
}

/// Outcome of building a [`ResidueSet`] from arbitrary integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ingested {
    pub set: ResidueSet,
    /// Some input lay outside `[0, n)` and was reduced.
    pub reduced: bool,
    /// Two inputs landed on the same residue.
    pub collapsed: bool,
}

impl ResidueSet {
    /// Builds a set from residues; values are reduced mod `n` and deduplicated.
    pub fn new(n: u64, values: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("modulus n must be at least 1".into()));
        }
        let mut elements: Vec<u64> = values.into_iter().map(|v| v % n).collect();
        elements.sort_unstable();
        elements.dedup();
        Ok(Self { n, elements })
    }

    pub fn empty(n: u64) -> Result<Self> {
        Self::new(n, [])
    }

    /// Reduces signed integers into `[0, n)`, flagging any that needed it.
    pub fn from_integers(n: u64, values: &[i64]) -> Result<Ingested> {
        if n == 0 {
            return Err(Error::InvalidParameter("modulus n must be at least 1".into()));
        }
        let modulus = i128::from(n);
        let reduced = values.iter().any(|&v| v < 0 || v as i128 >= modulus);
        let residues: Vec<u64> = values
            .iter()
            .map(|&v| i128::from(v).rem_euclid(modulus) as u64)
            .collect();
        let set = Self::new(n, residues)?;
        let collapsed = set.len() != values.len();
        Ok(Ingested { set, reduced, collapsed })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.elements.binary_search(&(x % self.n)).is_ok()
    }

    /// `{ -a mod n : a in S }`.
    pub fn negated(&self) -> Self {
        Self::new(self.n, self.elements.iter().map(|&a| (self.n - a) % self.n))
            .expect("modulus already validated")
    }

    /// `{ u*a mod n : a in S }`.
    pub fn scaled(&self, u: u64) -> Self {
        let n = u128::from(self.n);
        Self::new(
            self.n,
            self.elements.iter().map(|&a| (u128::from(a) * u128::from(u) % n) as u64),
        )
        .expect("modulus already validated")
    }

    /// Replaces each element by `min(a, n - a)`; keeps the set's sign class.
    pub fn folded(&self) -> Self {
        Self::new(self.n, self.elements.iter().map(|&a| a.min(self.n - a)))
            .expect("modulus already validated")
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}} mod {}", self.n)
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(n)) as u64
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, n: u64) -> u64 {
    ((u128::from(a) + u128::from(b)) % u128::from(n)) as u64
}
