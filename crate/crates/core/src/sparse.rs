//! Sparse linear combinations keyed by ordered indices.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::partitions::Partition;
use crate::rational::Q;

/// Coefficients indexed by partitions, without stored zeros.
pub type Terms = BTreeMap<Partition, Q>;

/// Adds `coeff` at `key`, dropping the entry if it cancels to zero.
pub fn add_term<K: Ord>(map: &mut BTreeMap<K, Q>, key: K, coeff: Q) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub fn add_scaled<K: Ord + Clone>(acc: &mut BTreeMap<K, Q>, other: &BTreeMap<K, Q>, scale: &Q) {
    if scale.is_zero() {
        return;
    }
    for (k, c) in other {
        add_term(acc, k.clone(), c * scale);
    }
}

/// Product of two power-sum expansions: `p_a p_b = p_{a ∪ b}`.
pub fn p_mul(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            add_term(&mut out, ka.union(kb), ca * cb);
        }
    }
    out
}

pub fn p_pow(base: &Terms, exp: usize) -> Terms {
    let mut acc = Terms::from([(Partition::empty(), Q::from_integer(1.into()))]);
    for _ in 0..exp {
        acc = p_mul(&acc, base);
    }
    acc
}

pub fn degree(terms: &Terms) -> usize {
    terms.keys().map(Partition::size).max().unwrap_or(0)
}
