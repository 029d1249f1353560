//! Polynomials in finitely many commuting variables with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rational::Q;
use crate::sparse::add_term;

/// Exponent vector of a monomial; its length is the number of variables.
pub type Monomial = Vec<u32>;

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        add_term(&mut p.terms, vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    /// The variable `x_i` (0-indexed).
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::monomial(exps, Q::one())
    }

    pub fn monomial(exponents: Monomial, coeff: Q) -> Self {
        let mut p = Self::zero(exponents.len());
        add_term(&mut p.terms, exponents, coeff);
        p
    }

    /// `x_1^k + ... + x_N^k`; for `k = 0` this is the constant `N`.
    pub fn power_sum(nvars: usize, k: u32) -> Self {
        let mut p = Self::zero(nvars);
        for i in 0..nvars {
            let mut exps = vec![0; nvars];
            exps[i] = k;
            add_term(&mut p.terms, exps, Q::one());
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Q {
        self.terms.get(exponents).cloned().unwrap_or_else(Q::zero)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_term(&mut out.terms, m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        for (m, x) in &self.terms {
            add_term(&mut out.terms, m.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                add_term(&mut out.terms, m, ca * cb);
            }
        }
        out
    }

    /// Substitutes `x_i -> x_i^k` for every variable.
    pub fn frobenius(&self, k: u32) -> Polynomial {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            add_term(&mut out.terms, m.iter().map(|e| e * k).collect(), c.clone());
        }
        out
    }

    /// Drops all monomials of total degree above `max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.iter().sum::<u32>() <= max_degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Invariant under every permutation of the variables.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(m, c)| {
            let mut sorted = m.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            self.terms.get(&sorted) == Some(c)
                && (0..m.len().saturating_sub(1)).all(|i| {
                    let mut swapped = m.clone();
                    swapped.swap(i, i + 1);
                    self.terms.get(&swapped) == Some(c)
                })
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let mono: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn arithmetic_and_display() {
        let x1 = Polynomial::variable(2, 0);
        let x2 = Polynomial::variable(2, 1);
        let s = x1.add(&x2);
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(&[1, 1]), q(2));
        assert_eq!(sq.to_string(), "x1^2 + 2*x1*x2 + x2^2");
        assert!(sq.is_symmetric());
        assert!(!x1.is_symmetric());
        assert_eq!(Polynomial::power_sum(2, 2), x1.frobenius(2).add(&x2.frobenius(2)));
        assert_eq!(sq.truncate(1), Polynomial::zero(2));
    }
}
