//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;

/// Exponent vector `(a_0, ..., a_d)` of `x_0^a_0 * ... * x_d^a_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(vars: usize) -> Self {
        Monomial(vec![0; vars])
    }

    /// `x_i * x_j * ...` for the given variable indices (repeats allowed).
    pub fn product(vars: usize, indices: &[usize]) -> Self {
        let mut e = vec![0; vars];
        for &i in indices {
            e[i] += 1;
        }
        Monomial(e)
    }

    pub fn vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn has_odd_exponent(&self) -> bool {
        self.0.iter().any(|e| e % 2 == 1)
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.0.iter().zip(x).map(|(&e, &v)| v.powi(e as i32)).product()
    }

    /// All monomials of total degree `k` in `vars` variables, in lexicographic
    /// order of the variable-index multiset.
    pub fn all_of_degree(vars: usize, k: u32) -> Vec<Monomial> {
        fn rec(vars: usize, start: usize, left: u32, cur: &mut Vec<usize>, out: &mut Vec<Monomial>) {
            if left == 0 {
                out.push(Monomial::product(vars, cur));
                return;
            }
            for i in start..vars {
                cur.push(i);
                rec(vars, i, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(vars, 0, k, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate().filter(|(_, &e)| e > 0) {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{i}")?,
                _ => write!(f, "x{i}^{e}")?,
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: usize,
    terms: BTreeMap<Monomial, Rational64>,
}

impl Polynomial {
    pub fn zero(vars: usize) -> Self {
        Self { vars, terms: BTreeMap::new() }
    }

    pub fn from_terms(vars: usize, terms: impl IntoIterator<Item = (i64, Monomial)>) -> Self {
        let mut p = Self::zero(vars);
        for (c, m) in terms {
            p.add_term(Rational64::from_integer(c), m);
        }
        p
    }

    pub fn add_term(&mut self, coeff: Rational64, m: Monomial) {
        assert_eq!(m.vars(), self.vars, "monomial has the wrong number of variables");
        let entry = self.terms.entry(m).or_insert_with(|| Rational64::from_integer(0));
        *entry += coeff;
        let zero = *entry == Rational64::from_integer(0);
        if zero {
            self.terms.retain(|_, c| *c != Rational64::from_integer(0));
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every term has total degree `k`.
    pub fn is_homogeneous(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == k)
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| (*c.numer() as f64 / *c.denom() as f64) * m.eval(x))
            .sum()
    }

    /// `sum_j d^2 p / d x_j^2`.
    pub fn laplacian(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.vars);
        for (m, c) in &self.terms {
            for j in 0..self.vars {
                let e = m.0[j];
                if e >= 2 {
                    let mut lowered = m.clone();
                    lowered.0[j] -= 2;
                    out.add_term(*c * Rational64::from_integer(i64::from(e * (e - 1))), lowered);
                }
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // positive terms first, each group from the highest monomial down
        let zero = Rational64::from_integer(0);
        let ordered = self
            .terms
            .iter()
            .rev()
            .filter(|(_, c)| **c > zero)
            .chain(self.terms.iter().rev().filter(|(_, c)| **c < zero));
        for (i, (m, c)) in ordered.enumerate() {
            let neg = *c < Rational64::from_integer(0);
            let mag = if neg { -*c } else { *c };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mag != Rational64::from_integer(1) {
                write!(f, "{mag}*")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}
