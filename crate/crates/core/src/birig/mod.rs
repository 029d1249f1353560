//! Co-operations on Λ and the checks that they form a biring.
//!
//! Each co-operation is a ring map determined by where it sends the power
//! sums `p_n`:
//!
//! | co-operation     | target | `p_n` maps to         |
//! |------------------|--------|-----------------------|
//! | coaddition α     | Λ⊗Λ    | `p_n⊗1 + 1⊗p_n`       |
//! | co-zero o        | Q      | `0`                   |
//! | comultiplication | Λ⊗Λ    | `p_n⊗p_n`             |
//! | co-one ε         | Q      | `1`                   |
//! | antipode ν       | Λ      | `-p_n`                |

mod tensor;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{partitions_up_to, Partition};
use crate::rational::Q;
use crate::report::{aggregate, Counterexample, Outcome, Report};
use crate::symfunc::{BasisTag, Lambda, SymFunc};

pub use tensor::TensorElem;
pub(crate) use tensor::{GeneratorMap, PTensor};

pub(crate) fn coaddition_image(n: usize) -> PTensor {
    PTensor::generator_in_slot(2, 0, n).add(&PTensor::generator_in_slot(2, 1, n))
}

pub(crate) fn comultiplication_image(n: usize) -> PTensor {
    let mut t = PTensor::zero(2);
    t.terms.insert(vec![Partition::row(n), Partition::row(n)], Q::one());
    t
}

fn co_zero_image(_: usize) -> PTensor {
    PTensor::zero(0)
}

fn co_one_image(_: usize) -> PTensor {
    PTensor::one(0)
}

fn antipode_image(n: usize) -> PTensor {
    PTensor::generator_in_slot(1, 0, n).scale(&-Q::one())
}

pub(crate) const COADDITION: GeneratorMap<'static> = GeneratorMap {
    arity: 2,
    image: &coaddition_image,
};
pub(crate) const COMULTIPLICATION: GeneratorMap<'static> = GeneratorMap {
    arity: 2,
    image: &comultiplication_image,
};
pub(crate) const CO_ZERO: GeneratorMap<'static> = GeneratorMap {
    arity: 0,
    image: &co_zero_image,
};
pub(crate) const CO_ONE: GeneratorMap<'static> = GeneratorMap {
    arity: 0,
    image: &co_one_image,
};
pub(crate) const ANTIPODE: GeneratorMap<'static> = GeneratorMap {
    arity: 1,
    image: &antipode_image,
};

fn scalar_of(t: &PTensor) -> Q {
    debug_assert_eq!(t.arity, 0);
    t.terms.values().next().cloned().unwrap_or_else(Q::zero)
}

impl Lambda {
    fn lift(&self, f: &SymFunc) -> Result<PTensor> {
        Ok(PTensor::single(&self.p_terms(f)?))
    }

    /// `f(X + Y)`, in the basis of `f` on both slots.
    pub fn coaddition(&self, f: &SymFunc) -> Result<TensorElem> {
        let t = self.lift(f)?.apply(0, &COADDITION);
        Ok(TensorElem::from_ptensor(&t, (f.basis(), f.basis())))
    }

    /// `f(XY)`, in the basis of `f` on both slots.
    pub fn comultiplication(&self, f: &SymFunc) -> Result<TensorElem> {
        let t = self.lift(f)?.apply(0, &COMULTIPLICATION);
        Ok(TensorElem::from_ptensor(&t, (f.basis(), f.basis())))
    }

    /// The constant term.
    pub fn co_zero(&self, f: &SymFunc) -> Result<Q> {
        Ok(scalar_of(&self.lift(f)?.apply(0, &CO_ZERO)))
    }

    /// `f` evaluated at a single variable equal to 1.
    pub fn co_one(&self, f: &SymFunc) -> Result<Q> {
        Ok(scalar_of(&self.lift(f)?.apply(0, &CO_ONE)))
    }

    /// The co-negation `p_n ↦ -p_n`, in the basis of `f`.
    pub fn antipode(&self, f: &SymFunc) -> Result<SymFunc> {
        let t = self.lift(f)?.apply(0, &ANTIPODE).into_single();
        self.from_p_terms(&t, f.basis())
    }

    /// Checks the dualized ring axioms and the co-negation equation on every
    /// `s_λ` with `|λ| <= max_degree`.
    pub fn verify_birig_axioms(&self, max_degree: usize) -> Result<Report> {
        if max_degree > self.cap() {
            return Err(Error::Domain(format!(
                "birig suite at degree {max_degree} exceeds cap {}",
                self.cap()
            )));
        }
        let shapes = partitions_up_to(max_degree);
        let per_shape: Vec<Vec<Outcome>> = shapes
            .par_iter()
            .map(|shape| self.birig_laws_at(shape))
            .collect::<Result<_>>()?;
        Ok(aggregate(
            "birig",
            max_degree,
            &BIRIG_LAWS,
            per_shape.into_iter().flatten(),
        ))
    }

    fn birig_laws_at(&self, shape: &Partition) -> Result<Vec<Outcome>> {
        let f = SymFunc::basis_element(BasisTag::S, shape.clone());
        let base = self.lift(&f)?;
        let input = f.to_string();
        let check = |law: &'static str, lhs: &PTensor, rhs: &PTensor| {
            Outcome::new(law, lhs, rhs, || Counterexample {
                input: input.clone(),
                lhs: lhs.render_schur(),
                rhs: rhs.render_schur(),
            })
        };
        // η∘o: the constant term as an element of Λ.
        let unit_of_counit = base.apply(0, &CO_ZERO).insert_unit(0);

        let alpha = base.apply(0, &COADDITION);
        let mu = base.apply(0, &COMULTIPLICATION);

        let mut out = Vec::with_capacity(BIRIG_LAWS.len());
        out.push(check(
            BIRIG_LAWS[0],
            &alpha.apply(0, &COADDITION),
            &alpha.apply(1, &COADDITION),
        ));
        out.push(check(BIRIG_LAWS[1], &alpha.swap(0, 1), &alpha));
        out.push(check(BIRIG_LAWS[2], &alpha.apply(0, &CO_ZERO), &base));
        out.push(check(
            BIRIG_LAWS[3],
            &mu.apply(0, &COMULTIPLICATION),
            &mu.apply(1, &COMULTIPLICATION),
        ));
        out.push(check(BIRIG_LAWS[4], &mu.swap(0, 1), &mu));
        out.push(check(BIRIG_LAWS[5], &mu.apply(0, &CO_ONE), &base));

        let codistributive_lhs = mu.apply(1, &COADDITION);
        let codistributive_rhs = alpha
            .apply(0, &COMULTIPLICATION)
            .apply(2, &COMULTIPLICATION)
            .swap(1, 2)
            .codiagonal(0);
        out.push(check(BIRIG_LAWS[6], &codistributive_lhs, &codistributive_rhs));
        out.push(check(BIRIG_LAWS[7], &mu.apply(0, &CO_ZERO), &unit_of_counit));

        let pentagon = alpha.apply(1, &ANTIPODE).codiagonal(0);
        out.push(check(BIRIG_LAWS[8], &pentagon, &unit_of_counit));
        Ok(out)
    }
}

pub const BIRIG_LAWS: [&str; 9] = [
    "coaddition coassociativity",
    "coaddition cocommutativity",
    "coaddition counit (co-zero)",
    "comultiplication coassociativity",
    "comultiplication cocommutativity",
    "comultiplication counit (co-one)",
    "co-distributivity",
    "co-absorption",
    "co-negation pentagon",
];
