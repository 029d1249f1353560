//! Tensor powers of Λ.
//!
//! [`TensorElem`] is the public two-fold tensor. Internally the verifiers
//! work with [`PTensor`], an element of Λ^{⊗k} in the power-sum basis of
//! every slot, where ring maps out of Λ are determined by the images of the
//! generators `p_n` and multiplication is slotwise concatenation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::partitions::Partition;
use crate::rational::Q;
use crate::sparse::{add_term, Terms};
use crate::symfunc::transition::transition;
use crate::symfunc::{BasisTag, Lambda};

/// An element of Λ⊗Λ with a basis tag per tensor slot.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElem {
    bases: (BasisTag, BasisTag),
    terms: BTreeMap<(Partition, Partition), Q>,
}

impl TensorElem {
    pub fn zero(bases: (BasisTag, BasisTag)) -> Self {
        TensorElem {
            bases,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        bases: (BasisTag, BasisTag),
        terms: impl IntoIterator<Item = ((Partition, Partition), Q)>,
    ) -> Self {
        let mut t = Self::zero(bases);
        for (k, c) in terms {
            add_term(&mut t.terms, k, c);
        }
        t
    }

    pub fn bases(&self) -> (BasisTag, BasisTag) {
        self.bases
    }

    pub fn terms(&self) -> &BTreeMap<(Partition, Partition), Q> {
        &self.terms
    }

    pub fn coeff(&self, left: &Partition, right: &Partition) -> Q {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn to_ptensor(&self) -> PTensor {
        let general = GeneralTensor {
            bases: vec![self.bases.0, self.bases.1],
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| (vec![a.clone(), b.clone()], c.clone()))
                .collect(),
        };
        general.to_p()
    }

    pub(crate) fn from_ptensor(t: &PTensor, bases: (BasisTag, BasisTag)) -> Self {
        assert_eq!(t.arity, 2, "TensorElem needs a two-fold tensor");
        let general = t.to_basis(&[bases.0, bases.1]);
        TensorElem {
            bases,
            terms: general
                .terms
                .into_iter()
                .map(|(mut k, c)| {
                    let b = k.pop().expect("two slots");
                    let a = k.pop().expect("two slots");
                    ((a, b), c)
                })
                .collect(),
        }
    }
}

impl fmt::Display for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let general = GeneralTensor {
            bases: vec![self.bases.0, self.bases.1],
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| (vec![a.clone(), b.clone()], c.clone()))
                .collect(),
        };
        fmt::Display::fmt(&general, f)
    }
}

impl fmt::Debug for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElem({self})")
    }
}

impl Lambda {
    pub fn tensor_to_basis(&self, t: &TensorElem, bases: (BasisTag, BasisTag)) -> Result<TensorElem> {
        for (a, b) in t.terms.keys() {
            self.check_degree(a.size().max(b.size()))?;
        }
        if t.bases == bases {
            return Ok(t.clone());
        }
        Ok(TensorElem::from_ptensor(&t.to_ptensor(), bases))
    }
}

/// A k-fold tensor with a basis per slot; used for conversion and display.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct GeneralTensor {
    pub(crate) bases: Vec<BasisTag>,
    pub(crate) terms: BTreeMap<Vec<Partition>, Q>,
}

impl GeneralTensor {
    fn to_p(&self) -> PTensor {
        let mut out = PTensor::zero(self.bases.len());
        for (key, c) in &self.terms {
            let mut partial: BTreeMap<Vec<Partition>, Q> = BTreeMap::from([(Vec::new(), c.clone())]);
            for (slot, shape) in key.iter().enumerate() {
                let t = transition(self.bases[slot], shape.size());
                partial = extend_slot(&partial, t.to_p(shape));
            }
            for (k, v) in partial {
                add_term(&mut out.terms, k, v);
            }
        }
        out
    }
}

fn extend_slot(partial: &BTreeMap<Vec<Partition>, Q>, expansion: &Terms) -> BTreeMap<Vec<Partition>, Q> {
    let mut next = BTreeMap::new();
    for (prefix, c) in partial {
        for (shape, d) in expansion {
            let mut k = prefix.clone();
            k.push(shape.clone());
            add_term(&mut next, k, c * d);
        }
    }
    next
}

/// Renders `2*s[2] # s[1] - 1 # s[3]`; an empty partition slot prints as `1`.
impl fmt::Display for GeneralTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut entries: Vec<_> = self.terms.iter().collect();
        entries.sort_by(|(a, _), (b, _)| {
            let da: usize = a.iter().map(Partition::size).sum();
            let db: usize = b.iter().map(Partition::size).sum();
            let left = |k: &Vec<Partition>| k.first().map_or(0, Partition::size);
            da.cmp(&db)
                .then_with(|| left(b).cmp(&left(a)))
                .then_with(|| a.cmp(b))
        });
        for (i, (key, c)) in entries.into_iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            if key.is_empty() {
                write!(f, "1")?;
            }
            for (slot, shape) in key.iter().enumerate() {
                if slot > 0 {
                    write!(f, " # ")?;
                }
                if shape.is_empty() {
                    write!(f, "1")?;
                } else {
                    write!(f, "{}{shape}", self.bases[slot])?;
                }
            }
        }
        Ok(())
    }
}

/// An element of Λ^{⊗arity} in the power-sum basis of every slot. Arity 0
/// is the scalars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct PTensor {
    pub(crate) arity: usize,
    pub(crate) terms: BTreeMap<Vec<Partition>, Q>,
}

/// A ring map `Λ -> Λ^{⊗arity}` given by the images of the generators `p_n`.
pub(crate) struct GeneratorMap<'a> {
    pub(crate) arity: usize,
    pub(crate) image: &'a dyn Fn(usize) -> PTensor,
}

impl PTensor {
    pub(crate) fn zero(arity: usize) -> Self {
        PTensor {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn one(arity: usize) -> Self {
        Self::scalar(arity, Q::one())
    }

    pub(crate) fn scalar(arity: usize, c: Q) -> Self {
        let mut t = Self::zero(arity);
        add_term(&mut t.terms, vec![Partition::empty(); arity], c);
        t
    }

    pub(crate) fn single(terms: &Terms) -> Self {
        PTensor {
            arity: 1,
            terms: terms.iter().map(|(k, c)| (vec![k.clone()], c.clone())).collect(),
        }
    }

    /// `p_n` placed in one slot, `1` elsewhere.
    pub(crate) fn generator_in_slot(arity: usize, slot: usize, n: usize) -> Self {
        let mut key = vec![Partition::empty(); arity];
        key[slot] = Partition::row(n);
        PTensor {
            arity,
            terms: BTreeMap::from([(key, Q::one())]),
        }
    }

    pub(crate) fn into_single(self) -> Terms {
        assert_eq!(self.arity, 1);
        self.terms
            .into_iter()
            .map(|(mut k, c)| (k.pop().expect("one slot"), c))
            .collect()
    }

    pub(crate) fn add(&self, other: &PTensor) -> PTensor {
        debug_assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_term(&mut out.terms, k.clone(), c.clone());
        }
        out
    }

    pub(crate) fn scale(&self, c: &Q) -> PTensor {
        let mut out = Self::zero(self.arity);
        for (k, x) in &self.terms {
            add_term(&mut out.terms, k.clone(), x * c);
        }
        out
    }

    /// Slotwise product.
    pub(crate) fn mul(&self, other: &PTensor) -> PTensor {
        debug_assert_eq!(self.arity, other.arity);
        let mut out = Self::zero(self.arity);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let key = ka.iter().zip(kb).map(|(a, b)| a.union(b)).collect();
                add_term(&mut out.terms, key, ca * cb);
            }
        }
        out
    }

    /// Applies a ring map to one slot, which is replaced by `map.arity`
    /// slots in its place.
    pub(crate) fn apply(&self, slot: usize, map: &GeneratorMap<'_>) -> PTensor {
        let mut generator_images: HashMap<usize, PTensor> = HashMap::new();
        let mut shape_images: HashMap<Partition, PTensor> = HashMap::new();
        let mut out = Self::zero(self.arity - 1 + map.arity);
        for (key, c) in &self.terms {
            let shape = &key[slot];
            if !shape_images.contains_key(shape) {
                let mut img = PTensor::one(map.arity);
                for &n in shape.parts() {
                    let g = generator_images.entry(n).or_insert_with(|| (map.image)(n));
                    img = img.mul(g);
                }
                shape_images.insert(shape.clone(), img);
            }
            for (ik, ic) in &shape_images[shape].terms {
                let mut k = Vec::with_capacity(out.arity);
                k.extend_from_slice(&key[..slot]);
                k.extend(ik.iter().cloned());
                k.extend_from_slice(&key[slot + 1..]);
                add_term(&mut out.terms, k, c * ic);
            }
        }
        out
    }

    pub(crate) fn swap(&self, i: usize, j: usize) -> PTensor {
        let mut out = Self::zero(self.arity);
        for (k, c) in &self.terms {
            let mut k = k.clone();
            k.swap(i, j);
            add_term(&mut out.terms, k, c.clone());
        }
        out
    }

    /// Multiplies slots `slot` and `slot + 1` together (the codiagonal).
    pub(crate) fn codiagonal(&self, slot: usize) -> PTensor {
        let mut out = Self::zero(self.arity - 1);
        for (k, c) in &self.terms {
            let mut k = k.clone();
            let right = k.remove(slot + 1);
            k[slot] = k[slot].union(&right);
            add_term(&mut out.terms, k, c.clone());
        }
        out
    }

    /// Inserts the unit `1` as a new slot at `slot`.
    pub(crate) fn insert_unit(&self, slot: usize) -> PTensor {
        let mut out = Self::zero(self.arity + 1);
        for (k, c) in &self.terms {
            let mut k = k.clone();
            k.insert(slot, Partition::empty());
            add_term(&mut out.terms, k, c.clone());
        }
        out
    }

    /// Converts every slot out of the power-sum basis.
    pub(crate) fn to_basis(&self, bases: &[BasisTag]) -> GeneralTensor {
        let mut out = GeneralTensor {
            bases: bases.to_vec(),
            terms: BTreeMap::new(),
        };
        for (key, c) in &self.terms {
            let mut partial: BTreeMap<Vec<Partition>, Q> = BTreeMap::from([(Vec::new(), c.clone())]);
            for (slot, ty) in key.iter().enumerate() {
                if bases[slot] == BasisTag::P {
                    partial = extend_slot(&partial, &Terms::from([(ty.clone(), Q::one())]));
                } else {
                    let t = transition(bases[slot], ty.size());
                    partial = extend_slot(&partial, t.from_p(ty));
                }
            }
            for (k, v) in partial {
                add_term(&mut out.terms, k, v);
            }
        }
        out
    }

    /// Renders with every slot in the Schur basis.
    pub(crate) fn render_schur(&self) -> String {
        if self.arity == 0 {
            return self
                .terms
                .values()
                .next()
                .map_or_else(|| "0".to_string(), ToString::to_string);
        }
        self.to_basis(&vec![BasisTag::S; self.arity]).to_string()
    }
}
