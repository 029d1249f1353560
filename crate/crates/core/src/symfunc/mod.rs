//! The ring Λ of symmetric functions over the rationals.
//!
//! Elements carry a [`BasisTag`] and a sparse coefficient map. All
//! arithmetic runs in the power-sum basis, where multiplication is
//! concatenation of cycle types; results are converted back to the basis of
//! the left operand. The [`Lambda`] context carries the degree cap that every
//! operation enforces.

mod poly;
pub(crate) mod transition;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rational::{self, Q};
use crate::sparse::{add_scaled, add_term, p_mul, Terms};

pub use poly::{Monomial, Polynomial};
use transition::transition;

/// The five classical bases of Λ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisTag {
    /// Monomial symmetric functions.
    M,
    /// Elementary.
    E,
    /// Complete homogeneous.
    H,
    /// Power sums.
    P,
    /// Schur functions.
    S,
}

impl BasisTag {
    pub const ALL: [BasisTag; 5] = [BasisTag::M, BasisTag::E, BasisTag::H, BasisTag::P, BasisTag::S];

    pub fn symbol(self) -> char {
        match self {
            BasisTag::M => 'm',
            BasisTag::E => 'e',
            BasisTag::H => 'h',
            BasisTag::P => 'p',
            BasisTag::S => 's',
        }
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for BasisTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(BasisTag::M),
            "e" => Ok(BasisTag::E),
            "h" => Ok(BasisTag::H),
            "p" => Ok(BasisTag::P),
            "s" => Ok(BasisTag::S),
            other => Err(Error::UnknownBasis {
                tag: other.to_string(),
                offset: 0,
            }),
        }
    }
}

/// An element of Λ in a fixed basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: BasisTag,
    terms: Terms,
}

impl SymFunc {
    pub fn zero(basis: BasisTag) -> Self {
        SymFunc {
            basis,
            terms: Terms::new(),
        }
    }

    pub fn constant(basis: BasisTag, c: Q) -> Self {
        let mut f = Self::zero(basis);
        add_term(&mut f.terms, Partition::empty(), c);
        f
    }

    pub fn one(basis: BasisTag) -> Self {
        Self::constant(basis, Q::one())
    }

    pub fn basis_element(basis: BasisTag, shape: Partition) -> Self {
        SymFunc {
            basis,
            terms: Terms::from([(shape, Q::one())]),
        }
    }

    pub fn from_terms(basis: BasisTag, terms: impl IntoIterator<Item = (Partition, Q)>) -> Self {
        let mut f = Self::zero(basis);
        for (k, c) in terms {
            add_term(&mut f.terms, k, c);
        }
        f
    }

    /// Shorthand for `s_λ`; panics on a malformed partition.
    pub fn s(parts: &[usize]) -> Self {
        Self::basis_element(BasisTag::S, Partition::new(parts.to_vec()).expect("valid partition"))
    }

    /// Shorthand for `p_μ`; panics on a malformed partition.
    pub fn p(parts: &[usize]) -> Self {
        Self::basis_element(BasisTag::P, Partition::new(parts.to_vec()).expect("valid partition"))
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn into_terms(self) -> Terms {
        self.terms
    }

    pub fn coeff(&self, shape: &Partition) -> Q {
        self.terms.get(shape).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest size among the stored partitions; 0 for constants and zero.
    pub fn degree(&self) -> usize {
        crate::sparse::degree(&self.terms)
    }

    pub fn constant_term(&self) -> Q {
        // Every basis element of degree 0 is the constant 1.
        self.coeff(&Partition::empty())
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(rational::is_integer)
    }

    /// Restriction to the terms of degree exactly `n`.
    pub fn homogeneous_part(&self, n: usize) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.size() == n)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> SymFunc {
        let mut out = Self::zero(self.basis);
        for (k, x) in &self.terms {
            add_term(&mut out.terms, k.clone(), x * c);
        }
        out
    }
}

impl std::ops::Neg for SymFunc {
    type Output = SymFunc;

    fn neg(self) -> SymFunc {
        SymFunc {
            basis: self.basis,
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

/// Renders in the expression grammar, e.g. `3*s[2,1] - p[4] + 1`, terms in
/// ascending degree and reverse-lexicographic order within a degree.
impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (shape, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if shape.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}{shape}", self.basis)?;
            } else {
                write!(f, "{abs}*{}{shape}", self.basis)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc({self})")
    }
}

/// The ring Λ with a degree cap. Operations reject inputs or results whose
/// degree would exceed the cap instead of truncating.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lambda {
    cap: usize,
}

impl Default for Lambda {
    fn default() -> Self {
        Self::new()
    }
}

impl Lambda {
    pub const DEFAULT_CAP: usize = 12;

    pub fn new() -> Self {
        Lambda {
            cap: Self::DEFAULT_CAP,
        }
    }

    pub fn with_cap(cap: usize) -> Self {
        Lambda { cap }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn check_degree(&self, degree: usize) -> Result<()> {
        if degree > self.cap {
            Err(Error::CapExceeded {
                degree,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check(&self, f: &SymFunc) -> Result<()> {
        self.check_degree(f.degree())
    }

    /// Power-sum coefficients of `f`.
    pub(crate) fn p_terms(&self, f: &SymFunc) -> Result<Terms> {
        self.check(f)?;
        Ok(to_p_terms(f))
    }

    /// Builds an element of `target` from power-sum coefficients.
    pub(crate) fn from_p_terms(&self, terms: &Terms, target: BasisTag) -> Result<SymFunc> {
        self.check_degree(crate::sparse::degree(terms))?;
        Ok(from_p_terms(terms, target))
    }

    pub fn to_basis(&self, f: &SymFunc, target: BasisTag) -> Result<SymFunc> {
        self.check(f)?;
        if f.basis == target {
            return Ok(f.clone());
        }
        let out = from_p_terms(&to_p_terms(f), target);
        if target != BasisTag::P && f.has_integer_coefficients() && !out.has_integer_coefficients() {
            return Err(Error::Internal(format!(
                "integral input {f} produced non-integral {target}-expansion {out}"
            )));
        }
        Ok(out)
    }

    /// Equality in Λ, independent of the bases the operands are stored in.
    pub fn equal(&self, f: &SymFunc, g: &SymFunc) -> Result<bool> {
        if f.basis == g.basis {
            return Ok(f.terms == g.terms);
        }
        Ok(self.p_terms(f)? == self.p_terms(g)?)
    }

    /// Sum in the basis of `f`.
    pub fn add(&self, f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
        self.check(f)?;
        let g = self.to_basis(g, f.basis)?;
        let mut out = f.clone();
        for (k, c) in g.terms {
            add_term(&mut out.terms, k, c);
        }
        Ok(out)
    }

    pub fn sub(&self, f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
        self.add(f, &-g.clone())
    }

    pub fn scale(&self, c: &Q, f: &SymFunc) -> Result<SymFunc> {
        self.check(f)?;
        Ok(f.scale(c))
    }

    /// Product in the basis of `f`.
    pub fn mul(&self, f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
        self.check_degree(f.degree() + g.degree())?;
        let prod = p_mul(&self.p_terms(f)?, &self.p_terms(g)?);
        self.from_p_terms(&prod, f.basis)
    }

    /// Coefficient of `s_λ` in `s_μ s_ν`.
    pub fn lr_coeff(&self, mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<u64> {
        if mu.size() + nu.size() != lambda.size() {
            return Err(Error::Domain(format!(
                "Littlewood-Richardson coefficient needs |{mu}| + |{nu}| = |{lambda}|"
            )));
        }
        let prod = self.mul(
            &SymFunc::basis_element(BasisTag::S, mu.clone()),
            &SymFunc::basis_element(BasisTag::S, nu.clone()),
        )?;
        let c = prod.coeff(lambda);
        rational::to_u64(&c)
            .ok_or_else(|| Error::Internal(format!("negative or fractional LR coefficient {c}")))
    }

    /// Image of `f` under the ring map `Λ -> Q` sending `p_n` to `phi(n)`.
    pub fn eval_adams(&self, f: &SymFunc, phi: impl Fn(usize) -> Option<Q>) -> Result<Q> {
        let terms = self.p_terms(f)?;
        let mut cache: BTreeMap<usize, Q> = BTreeMap::new();
        let mut total = Q::zero();
        for (ty, c) in &terms {
            let mut value = c.clone();
            for &n in ty.parts() {
                if !cache.contains_key(&n) {
                    let v = phi(n).ok_or_else(|| {
                        Error::Domain(format!("no value supplied for p_{n}"))
                    })?;
                    cache.insert(n, v);
                }
                value *= &cache[&n];
            }
            total += value;
        }
        Ok(total)
    }

    /// `f(1, ..., 1)` with `d` ones, computed from the Schur expansion with
    /// the hook-content product.
    pub fn eval_principal(&self, f: &SymFunc, d: usize) -> Result<Q> {
        let s = self.to_basis(f, BasisTag::S)?;
        Ok(s.terms
            .iter()
            .map(|(shape, c)| c * hook_content(shape, d))
            .sum())
    }

    /// Realizes `f` as a polynomial in `nvars` variables.
    pub fn expand_polynomial(&self, f: &SymFunc, nvars: usize) -> Result<Polynomial> {
        if nvars < f.degree() {
            return Err(Error::Domain(format!(
                "{nvars} variables cannot faithfully realize degree {}",
                f.degree()
            )));
        }
        let terms = self.p_terms(f)?;
        let max_part = terms.keys().filter_map(|k| k.parts().first().copied()).max().unwrap_or(0);
        let power_sums: Vec<Polynomial> = (0..=max_part)
            .map(|k| Polynomial::power_sum(nvars, k as u32))
            .collect();
        let mut out = Polynomial::zero(nvars);
        for (ty, c) in &terms {
            let mono = ty
                .parts()
                .iter()
                .fold(Polynomial::constant(nvars, c.clone()), |acc, &k| {
                    acc.mul(&power_sums[k])
                });
            out = out.add(&mono);
        }
        Ok(out)
    }
}

/// `s_λ(1^d) = Π (d + content) / hook` over the cells of λ.
pub fn hook_content(shape: &Partition, d: usize) -> Q {
    let mut value = Q::one();
    for (hook, content) in shape.hooks_and_contents() {
        value *= Q::new(BigInt::from(d as i64 + content), BigInt::from(hook));
    }
    value
}

pub(crate) fn to_p_terms(f: &SymFunc) -> Terms {
    if f.basis == BasisTag::P {
        return f.terms.clone();
    }
    let mut out = Terms::new();
    for (shape, c) in &f.terms {
        let t = transition(f.basis, shape.size());
        add_scaled(&mut out, t.to_p(shape), c);
    }
    out
}

pub(crate) fn from_p_terms(terms: &Terms, target: BasisTag) -> SymFunc {
    if target == BasisTag::P {
        return SymFunc {
            basis: target,
            terms: terms.clone(),
        };
    }
    let mut out = Terms::new();
    for (ty, c) in terms {
        let t = transition(target, ty.size());
        add_scaled(&mut out, t.from_p(ty), c);
    }
    SymFunc {
        basis: target,
        terms: out,
    }
}
