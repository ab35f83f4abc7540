use std::f64::consts::TAU;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::zn::ResidueSet;

/// Integers `a_1, ..., a_m` placed into the cosine/sine coordinate pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    n: u64,
    a: Vec<u64>,
}

impl GeneratorSet {
    pub fn new(n: u64, a: Vec<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("point count n must be at least 1".into()));
        }
        if a.is_empty() {
            return Err(Error::InvalidParameter("need at least one generator".into()));
        }
        if a.contains(&0) {
            return Err(Error::InvalidParameter("generators must be positive integers".into()));
        }
        Ok(Self { n, a })
    }

    pub fn from_residues(s: &ResidueSet) -> Result<Self> {
        Self::new(s.modulus(), s.elements().to_vec())
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn generators(&self) -> &[u64] {
        &self.a
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    /// Sphere dimension `2m - 1`.
    pub fn dimension(&self) -> usize {
        2 * self.a.len() - 1
    }

    /// The generators as residues mod `n`, if they are pairwise distinct.
    pub fn residues(&self) -> Option<ResidueSet> {
        let s = ResidueSet::new(self.n, self.a.iter().copied()).ok()?;
        (s.len() == self.a.len()).then_some(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum DesignWarning {
    /// `a_index ≡ 0 (mod n)`: that coordinate pair is constant.
    ZeroGenerator { index: usize },
    /// `a_first ≡ a_second (mod n)`.
    RepeatedResidue { first: usize, second: usize },
    /// `gcd(n, a_1, ..., a_m) > 1`, so the points repeat with this period.
    CoincidentPoints { period: u64 },
}

impl fmt::Display for DesignWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesignWarning::ZeroGenerator { index } => {
                write!(f, "generator a_{} is divisible by n; its coordinate pair is constant", index + 1)
            }
            DesignWarning::RepeatedResidue { first, second } => {
                write!(f, "generators a_{} and a_{} agree mod n", first + 1, second + 1)
            }
            DesignWarning::CoincidentPoints { period } => {
                write!(f, "points repeat with period {period}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DesignPointSet {
    pub d: usize,
    pub points: Vec<Vec<f64>>,
    pub generator: GeneratorSet,
    pub warnings: Vec<DesignWarning>,
}

impl DesignPointSet {
    pub fn n(&self) -> usize {
        self.points.len()
    }
}

/// Point `i` (for `i = 1..=n`) has coordinate pair `nu` equal to
/// `(cos(2 pi i a_nu / n), sin(2 pi i a_nu / n)) / sqrt(m)`.
///
/// `i * a_nu` is reduced mod `n` before scaling to an angle.
pub fn build_design(g: &GeneratorSet) -> DesignPointSet {
    let n = g.n;
    let m = g.m();
    let scale = 1.0 / (m as f64).sqrt();
    let points = (1..=n)
        .map(|i| {
            g.a.iter()
                .flat_map(|&a| {
                    let r = (u128::from(i) * u128::from(a) % u128::from(n)) as f64;
                    let angle = TAU * r / n as f64;
                    [angle.cos() * scale, angle.sin() * scale]
                })
                .collect()
        })
        .collect();

    let mut warnings = Vec::new();
    for (idx, &a) in g.a.iter().enumerate() {
        if a % n == 0 {
            warnings.push(DesignWarning::ZeroGenerator { index: idx });
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            if g.a[i] % n == g.a[j] % n {
                warnings.push(DesignWarning::RepeatedResidue { first: i, second: j });
            }
        }
    }
    let common = g.a.iter().fold(n, |acc, &a| gcd(acc, a));
    if common > 1 {
        warnings.push(DesignWarning::CoincidentPoints { period: n / common });
    }

    DesignPointSet { d: g.dimension(), points, generator: g.clone(), warnings }
}

/// As [`build_design`], for a requested sphere dimension. Only odd `d = 2m - 1`
/// is constructed here.
pub fn build_design_in_dimension(d: usize, g: &GeneratorSet) -> Result<DesignPointSet> {
    if d % 2 == 0 {
        return Err(Error::Unsupported(format!(
            "even sphere dimension d = {d}: only odd d = 2m - 1 is constructed; \
             even d needs a separate reduction"
        )));
    }
    if d != g.dimension() {
        return Err(Error::InvalidParameter(format!(
            "{} generators give dimension {}, not {d}",
            g.m(),
            g.dimension()
        )));
    }
    Ok(build_design(g))
}

/// `(sum_{i=1}^n sin(2 pi i a / n), sum_{i=1}^n cos(2 pi i a / n))`.
pub fn trig_zero_sum(n: u64, a: i64) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let a = i128::from(a).rem_euclid(i128::from(n)) as u128;
    let (mut s, mut c) = (0.0, 0.0);
    for i in 1..=u128::from(n) {
        let angle = TAU * ((i * a) % u128::from(n)) as f64 / n as f64;
        s += angle.sin();
        c += angle.cos();
    }
    Ok((s, c))
}
