//! Plethysm (substitution product) on Λ, Adams operations, the monomial
//! substitution oracle, and the plethory-axiom verifier.
//!
//! `f • g` is computed by writing `f` in power sums and replacing each
//! `p_n` by `g` with every `p_k` replaced by `p_{nk}`. Constant terms of
//! `g` are left unchanged by that substitution.

use num_traits::One;
use rayon::prelude::*;

use crate::birig::{GeneratorMap, PTensor, COADDITION, COMULTIPLICATION};
use crate::error::{Error, Result};
use crate::partitions::partitions_up_to;
use crate::rational::{self, Q};
use crate::report::{aggregate, Counterexample, Outcome, Report};
use crate::sparse::{add_term, Terms};
use crate::symfunc::{BasisTag, Lambda, Polynomial, SymFunc};

/// `ψ^n` applied slotwise: every part of every slot multiplied by `n`.
fn adams_tensor(t: &PTensor, n: usize) -> PTensor {
    let mut out = PTensor::zero(t.arity);
    for (key, c) in &t.terms {
        add_term(&mut out.terms, key.iter().map(|p| p.scale(n)).collect(), c.clone());
    }
    out
}

/// `f • T` for `T` in a tensor power of Λ, with `p_n` acting on `T` by `ψ^n`
/// in every slot at once.
fn plethysm_tensor(f: &Terms, t: &PTensor) -> PTensor {
    let image = |n: usize| adams_tensor(t, n);
    let map = GeneratorMap {
        arity: t.arity,
        image: &image,
    };
    PTensor::single(f).apply(0, &map)
}

fn plethysm_terms(f: &Terms, g: &Terms) -> Terms {
    plethysm_tensor(f, &PTensor::single(g)).into_single()
}

/// Bounds for the plethory verifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlethoryBounds {
    /// Schur generators `s_λ` with `1 <= |λ| <= generator_degree` are used.
    pub generator_degree: usize,
    /// Only tuples whose composite plethysm degree stays within this bound
    /// are checked.
    pub composite_degree: usize,
}

#[derive(Clone)]
enum Case {
    Associativity(SymFunc, SymFunc, SymFunc),
    LeftUnit(SymFunc),
    RightUnit(SymFunc),
    Additivity(SymFunc, SymFunc, SymFunc),
    Multiplicativity(SymFunc, SymFunc, SymFunc),
    Constants(SymFunc),
    CoZero(SymFunc, SymFunc),
    CoOne(SymFunc, SymFunc),
    Coaddition(SymFunc, SymFunc),
    Comultiplication(SymFunc, SymFunc),
}

pub const PLETHORY_LAWS: [&str; 10] = [
    "associativity",
    "left unit s[1]",
    "right unit s[1]",
    "left additivity",
    "left multiplicativity",
    "constants (1 • h = 1, 0 • h = 0)",
    "co-zero compatibility",
    "co-one compatibility",
    "coaddition compatibility",
    "comultiplication compatibility",
];

impl Lambda {
    /// The substitution product `f • g`, in the basis of `f`.
    pub fn plethysm(&self, f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
        self.check_degree(f.degree() * g.degree())?;
        let out = plethysm_terms(&self.p_terms(f)?, &self.p_terms(g)?);
        self.from_p_terms(&out, f.basis())
    }

    /// The Adams operation `ψ^n f = p_n • f`, in the basis of `f`.
    pub fn adams(&self, n: usize, f: &SymFunc) -> Result<SymFunc> {
        if n == 0 {
            return Err(Error::Domain("Adams operations are indexed from 1".into()));
        }
        self.check_degree(n * f.degree())?;
        let out = adams_tensor(&PTensor::single(&self.p_terms(f)?), n).into_single();
        self.from_p_terms(&out, f.basis())
    }

    /// Brute-force plethysm: `f` evaluated on the multiset of monomials of
    /// `g` in `nvars` variables. Requires `g` to expand with nonnegative
    /// integer coefficients.
    ///
    /// The evaluation goes through the elementary basis: the generating
    /// function `Π_y (1 + y t)` over the monomial alphabet gives every
    /// `e_k`, and `f` is a polynomial in those.
    pub fn plethysm_oracle(&self, f: &SymFunc, g: &SymFunc, nvars: usize) -> Result<Polynomial> {
        let composite = f.degree() * g.degree();
        if nvars < composite {
            return Err(Error::Domain(format!(
                "{nvars} variables cannot faithfully realize degree {composite}"
            )));
        }
        self.check_degree(composite)?;
        let expanded = self.expand_polynomial(g, nvars)?;
        let mut alphabet = Vec::new();
        for (mono, c) in expanded.terms() {
            let mult = rational::to_u64(c).ok_or_else(|| {
                Error::OracleInapplicable(format!("{g} has coefficient {c} on a monomial"))
            })?;
            alphabet.push((mono.clone(), mult));
        }

        let top = f.degree();
        let mut elementary: Vec<Polynomial> = vec![Polynomial::zero(nvars); top + 1];
        elementary[0] = Polynomial::one(nvars);
        for (mono, mult) in &alphabet {
            let letter = Polynomial::monomial(mono.clone(), Q::one());
            for _ in 0..*mult {
                for k in (1..=top).rev() {
                    let shifted = elementary[k - 1].mul(&letter);
                    elementary[k] = elementary[k].add(&shifted);
                }
            }
        }

        let f_e = self.to_basis(f, BasisTag::E)?;
        let mut out = Polynomial::zero(nvars);
        for (shape, c) in f_e.terms() {
            let term = shape
                .parts()
                .iter()
                .fold(Polynomial::constant(nvars, c.clone()), |acc, &k| {
                    acc.mul(&elementary[k])
                });
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Runs the plethory suite with generators of degree at most
    /// `max_degree` and composite degree at most `max_degree²`.
    pub fn verify_plethory(&self, max_degree: usize) -> Result<Report> {
        self.verify_plethory_with(PlethoryBounds {
            generator_degree: max_degree,
            composite_degree: max_degree * max_degree,
        })
    }

    pub fn verify_plethory_with(&self, bounds: PlethoryBounds) -> Result<Report> {
        let PlethoryBounds {
            generator_degree,
            composite_degree,
        } = bounds;
        if composite_degree > self.cap() {
            return Err(Error::Domain(format!(
                "plethory suite at composite degree {composite_degree} exceeds cap {}",
                self.cap()
            )));
        }
        let generators: Vec<SymFunc> = partitions_up_to(generator_degree)
            .into_iter()
            .filter(|p| !p.is_empty())
            .map(|p| SymFunc::basis_element(BasisTag::S, p))
            .collect();
        // Right arguments with a constant term exercise constant carrying.
        let shifted: Vec<SymFunc> = generators
            .iter()
            .map(|g| self.add(g, &SymFunc::one(BasisTag::S)))
            .collect::<Result<_>>()?;
        let fits = |degrees: &[usize]| degrees.iter().product::<usize>() <= composite_degree;

        let mut cases = Vec::new();
        for f in &generators {
            for g in &generators {
                for h in &generators {
                    if fits(&[f.degree(), g.degree(), h.degree()]) {
                        cases.push(Case::Associativity(f.clone(), g.clone(), h.clone()));
                    }
                }
            }
        }
        for shape in partitions_up_to(composite_degree) {
            let f = SymFunc::basis_element(BasisTag::S, shape);
            cases.push(Case::LeftUnit(f.clone()));
            cases.push(Case::RightUnit(f));
        }
        for (i, f) in generators.iter().enumerate() {
            for g in &generators[i..] {
                for h in &generators {
                    if f.degree().max(g.degree()) * h.degree() <= composite_degree {
                        cases.push(Case::Additivity(f.clone(), g.clone(), h.clone()));
                    }
                    if (f.degree() + g.degree()) * h.degree() <= composite_degree {
                        cases.push(Case::Multiplicativity(f.clone(), g.clone(), h.clone()));
                    }
                }
            }
        }
        for h in generators.iter().chain(&shifted) {
            cases.push(Case::Constants(h.clone()));
        }
        for f in &generators {
            for g in generators.iter().chain(&shifted) {
                if fits(&[f.degree(), g.degree()]) {
                    cases.push(Case::CoZero(f.clone(), g.clone()));
                    cases.push(Case::CoOne(f.clone(), g.clone()));
                    cases.push(Case::Coaddition(f.clone(), g.clone()));
                    cases.push(Case::Comultiplication(f.clone(), g.clone()));
                }
            }
        }

        let outcomes: Vec<Outcome> = cases
            .par_iter()
            .map(|case| self.check_case(case))
            .collect::<Result<_>>()?;
        Ok(aggregate("plethory", composite_degree, &PLETHORY_LAWS, outcomes))
    }

    fn check_case(&self, case: &Case) -> Result<Outcome> {
        let s = |f: &SymFunc| -> Result<String> { Ok(self.to_basis(f, BasisTag::S)?.to_string()) };
        let symfunc_outcome = |law: &'static str, input: String, lhs: SymFunc, rhs: SymFunc| -> Result<Outcome> {
            let (l, r) = (self.to_basis(&lhs, BasisTag::S)?, self.to_basis(&rhs, BasisTag::S)?);
            Ok(Outcome::new(law, &l, &r, || Counterexample {
                input,
                lhs: l.to_string(),
                rhs: r.to_string(),
            }))
        };
        let unit = SymFunc::s(&[1]);
        match case {
            Case::Associativity(f, g, h) => {
                let lhs = self.plethysm(&self.plethysm(f, g)?, h)?;
                let rhs = self.plethysm(f, &self.plethysm(g, h)?)?;
                symfunc_outcome(PLETHORY_LAWS[0], format!("({f}, {g}, {h})"), lhs, rhs)
            }
            Case::LeftUnit(f) => {
                symfunc_outcome(PLETHORY_LAWS[1], s(f)?, self.plethysm(&unit, f)?, f.clone())
            }
            Case::RightUnit(f) => {
                symfunc_outcome(PLETHORY_LAWS[2], s(f)?, self.plethysm(f, &unit)?, f.clone())
            }
            Case::Additivity(f, g, h) => {
                let lhs = self.plethysm(&self.add(f, g)?, h)?;
                let rhs = self.add(&self.plethysm(f, h)?, &self.plethysm(g, h)?)?;
                symfunc_outcome(PLETHORY_LAWS[3], format!("({f}, {g}, {h})"), lhs, rhs)
            }
            Case::Multiplicativity(f, g, h) => {
                let lhs = self.plethysm(&self.mul(f, g)?, h)?;
                let rhs = self.mul(&self.plethysm(f, h)?, &self.plethysm(g, h)?)?;
                symfunc_outcome(PLETHORY_LAWS[4], format!("({f}, {g}, {h})"), lhs, rhs)
            }
            Case::Constants(h) => {
                let one = SymFunc::one(BasisTag::S);
                let zero = SymFunc::zero(BasisTag::S);
                let lhs = (self.plethysm(&one, h)?, self.plethysm(&zero, h)?);
                let rhs = (one, zero);
                Ok(Outcome::new(PLETHORY_LAWS[5], &lhs, &rhs, || Counterexample {
                    input: h.to_string(),
                    lhs: format!("{}, {}", lhs.0, lhs.1),
                    rhs: format!("{}, {}", rhs.0, rhs.1),
                }))
            }
            Case::CoZero(f, g) | Case::CoOne(f, g) => {
                let (law, co): (&'static str, fn(&Lambda, &SymFunc) -> Result<Q>) = match case {
                    Case::CoZero(..) => (PLETHORY_LAWS[6], Lambda::co_zero),
                    _ => (PLETHORY_LAWS[7], Lambda::co_one),
                };
                let lhs = co(self, &self.plethysm(f, g)?)?;
                let at = co(self, g)?;
                let rhs = self.eval_adams(f, |_| Some(at.clone()))?;
                Ok(Outcome::new(law, &lhs, &rhs, || Counterexample {
                    input: format!("({f}, {g})"),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                }))
            }
            Case::Coaddition(f, g) | Case::Comultiplication(f, g) => {
                let (law, map) = match case {
                    Case::Coaddition(..) => (PLETHORY_LAWS[8], &COADDITION),
                    _ => (PLETHORY_LAWS[9], &COMULTIPLICATION),
                };
                let composite = PTensor::single(&self.p_terms(&self.plethysm(f, g)?)?);
                let lhs = composite.apply(0, map);
                let co_g = PTensor::single(&self.p_terms(g)?).apply(0, map);
                let rhs = plethysm_tensor(&self.p_terms(f)?, &co_g);
                Ok(Outcome::new(law, &lhs, &rhs, || Counterexample {
                    input: format!("({f}, {g})"),
                    lhs: lhs.render_schur(),
                    rhs: rhs.render_schur(),
                }))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::rational::q;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn schur(entries: &[(&[usize], i64)]) -> SymFunc {
        SymFunc::from_terms(BasisTag::S, entries.iter().map(|(p, c)| (part(p), q(*c))))
    }

    #[test]
    fn unit_examples() {
        let l = Lambda::new();
        let g = schur(&[(&[2, 1], 2), (&[3], -1), (&[], 4)]);
        assert_eq!(l.plethysm(&SymFunc::s(&[1]), &g).unwrap(), g);
        let f = schur(&[(&[2, 1], 1), (&[1, 1], 3)]);
        assert_eq!(l.plethysm(&f, &SymFunc::s(&[1])).unwrap(), f);
    }

    #[test]
    fn power_sum_composition() {
        let l = Lambda::new();
        assert_eq!(l.plethysm(&SymFunc::p(&[2]), &SymFunc::p(&[3])).unwrap(), SymFunc::p(&[6]));
    }

    #[test]
    fn square_of_square() {
        let l = Lambda::new();
        let out = l.plethysm(&SymFunc::s(&[2]), &SymFunc::s(&[2])).unwrap();
        assert_eq!(out, schur(&[(&[4], 1), (&[2, 2], 1)]));
    }

    #[test]
    fn adams_examples() {
        let l = Lambda::new();
        let f = schur(&[(&[2, 1], 1), (&[1], 2)]);
        assert_eq!(l.adams(1, &f).unwrap(), f);
        assert_eq!(
            l.to_basis(&l.adams(2, &SymFunc::s(&[1])).unwrap(), BasisTag::P).unwrap(),
            SymFunc::p(&[2])
        );
        assert_eq!(
            l.adams(2, &SymFunc::s(&[2])).unwrap(),
            schur(&[(&[4], 1), (&[3, 1], -1), (&[2, 2], 1)])
        );
        assert!(l.adams(0, &f).is_err());
        assert!(l
            .equal(&l.adams(3, &f).unwrap(), &l.plethysm(&SymFunc::p(&[3]), &f).unwrap())
            .unwrap());
    }

    #[test]
    fn constant_terms_are_carried() {
        let l = Lambda::new();
        // p_2 • (s_1 + 3) = p_2 + 3
        let g = schur(&[(&[1], 1), (&[], 3)]);
        let out = l.plethysm(&SymFunc::p(&[2]), &g).unwrap();
        let expected = SymFunc::from_terms(BasisTag::P, [(part(&[2]), q(1)), (part(&[]), q(3))]);
        assert_eq!(out, expected);
    }

    #[test]
    fn oracle_examples() {
        let l = Lambda::new();
        let x = |n, i| Polynomial::variable(n, i);
        let sq = |p: Polynomial| p.mul(&p);
        assert_eq!(
            l.plethysm_oracle(&SymFunc::p(&[2]), &SymFunc::s(&[1]), 2).unwrap(),
            sq(x(2, 0)).add(&sq(x(2, 1)))
        );
        let e2 = SymFunc::basis_element(BasisTag::E, part(&[2]));
        let expected = x(3, 0).mul(&x(3, 1)).add(&x(3, 0).mul(&x(3, 2))).add(&x(3, 1).mul(&x(3, 2)));
        assert_eq!(l.plethysm_oracle(&e2, &SymFunc::s(&[1]), 3).unwrap(), expected);
        let oracle = l.plethysm_oracle(&SymFunc::s(&[2]), &SymFunc::s(&[2]), 4).unwrap();
        let target = l.expand_polynomial(&schur(&[(&[4], 1), (&[2, 2], 1)]), 4).unwrap();
        assert_eq!(oracle, target);
    }

    #[test]
    fn oracle_rejects_signed_inner() {
        let l = Lambda::new();
        let err = l.plethysm_oracle(&SymFunc::s(&[2]), &SymFunc::p(&[2]), 4);
        assert!(err.is_ok(), "p_2 is monomial-positive");
        let signed = schur(&[(&[2], 1), (&[1, 1], -1)]).scale(&q(-1));
        assert!(matches!(
            l.plethysm_oracle(&SymFunc::s(&[2]), &signed, 4),
            Err(Error::OracleInapplicable(_))
        ));
    }

    #[test]
    fn small_plethory_suite() {
        let l = Lambda::new();
        let report = l
            .verify_plethory_with(PlethoryBounds {
                generator_degree: 2,
                composite_degree: 4,
            })
            .unwrap();
        assert!(report.passed(), "{report}");
        assert!(report.laws.iter().all(|law| law.cases > 0));
    }

    #[test]
    fn associativity_on_power_sums() {
        let l = Lambda::new();
        let p2 = SymFunc::p(&[2]);
        let lhs = l.plethysm(&l.plethysm(&p2, &p2).unwrap(), &p2).unwrap();
        let rhs = l.plethysm(&p2, &l.plethysm(&p2, &p2).unwrap()).unwrap();
        assert_eq!(lhs, SymFunc::p(&[8]));
        assert_eq!(rhs, SymFunc::p(&[8]));
    }

    #[test]
    fn cap_is_enforced() {
        let l = Lambda::with_cap(6);
        assert!(matches!(
            l.plethysm(&SymFunc::s(&[3]), &SymFunc::s(&[3])),
            Err(Error::CapExceeded { degree: 9, cap: 6 })
        ));
        assert!(l.adams(4, &SymFunc::s(&[2])).is_err());
        assert!(l.verify_plethory(3).is_err());
    }
}
