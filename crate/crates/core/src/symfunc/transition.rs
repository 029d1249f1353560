//! Change-of-basis data between the power sums and the other four bases,
//! one homogeneous degree at a time.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::BasisTag;
use crate::characters::CharacterTable;
use crate::linalg::Matrix;
use crate::partitions::{partitions_of, Partition};
use crate::rational::Q;
use crate::sparse::{add_term, p_mul, Terms};

/// Expansions of `B_λ` in power sums and of `p_μ` in `B`, for one degree.
#[derive(Debug)]
pub(crate) struct Transition {
    to_p: HashMap<Partition, Terms>,
    from_p: HashMap<Partition, Terms>,
}

impl Transition {
    pub(crate) fn to_p(&self, shape: &Partition) -> &Terms {
        &self.to_p[shape]
    }

    pub(crate) fn from_p(&self, cycle_type: &Partition) -> &Terms {
        &self.from_p[cycle_type]
    }
}

pub(crate) fn transition(basis: BasisTag, n: usize) -> Arc<Transition> {
    static CACHE: OnceLock<Mutex<HashMap<(BasisTag, usize), Arc<Transition>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("transition cache poisoned").get(&(basis, n)) {
        return Arc::clone(t);
    }
    let built = Arc::new(build(basis, n));
    let mut guard = cache.lock().expect("transition cache poisoned");
    Arc::clone(guard.entry((basis, n)).or_insert(built))
}

fn build(basis: BasisTag, n: usize) -> Transition {
    let shapes = partitions_of(n);
    match basis {
        BasisTag::P => {
            let id: HashMap<Partition, Terms> = shapes
                .iter()
                .map(|p| (p.clone(), Terms::from([(p.clone(), Q::one())])))
                .collect();
            Transition {
                to_p: id.clone(),
                from_p: id,
            }
        }
        BasisTag::S => {
            let table = CharacterTable::get(n);
            let mut to_p = HashMap::new();
            let mut from_p: HashMap<Partition, Terms> =
                shapes.iter().map(|p| (p.clone(), Terms::new())).collect();
            for shape in &shapes {
                let mut row = Terms::new();
                for ty in &shapes {
                    let chi = table.chi(shape, ty);
                    add_term(
                        &mut row,
                        ty.clone(),
                        Q::new(BigInt::from(chi), BigInt::from(table.z(ty))),
                    );
                    add_term(
                        from_p.get_mut(ty).expect("cycle type present"),
                        shape.clone(),
                        Q::from_integer(BigInt::from(chi)),
                    );
                }
                to_p.insert(shape.clone(), row);
            }
            Transition { to_p, from_p }
        }
        BasisTag::H | BasisTag::E => {
            let sign = basis == BasisTag::E;
            let generators: Vec<Terms> = (0..=n).map(|k| complete_or_elementary(k, sign)).collect();
            let to_p: HashMap<Partition, Terms> = shapes
                .iter()
                .map(|shape| {
                    let expansion = shape
                        .parts()
                        .iter()
                        .fold(Terms::from([(Partition::empty(), Q::one())]), |acc, &k| {
                            p_mul(&acc, &generators[k])
                        });
                    (shape.clone(), expansion)
                })
                .collect();
            let from_p = invert(&shapes, &to_p);
            Transition { to_p, from_p }
        }
        BasisTag::M => {
            let from_p: HashMap<Partition, Terms> = shapes
                .iter()
                .map(|ty| {
                    let mut row = Terms::new();
                    for shape in &shapes {
                        let c = monomial_coefficient(ty.parts(), shape.parts());
                        add_term(&mut row, shape.clone(), Q::from_integer(BigInt::from(c)));
                    }
                    (ty.clone(), row)
                })
                .collect();
            let to_p = invert(&shapes, &from_p);
            Transition { to_p, from_p }
        }
    }
}

/// `h_k = Σ_μ p_μ / z_μ`, and `e_k` with the extra factor `sign(μ)`.
fn complete_or_elementary(k: usize, signed: bool) -> Terms {
    let mut out = Terms::new();
    for ty in partitions_of(k) {
        let s = if signed { ty.sign() } else { 1 };
        add_term(&mut out, ty.clone(), Q::new(BigInt::from(s), BigInt::from(ty.z())));
    }
    out
}

/// Inverts a square change of basis given as rows indexed by `shapes`.
fn invert(shapes: &[Partition], rows: &HashMap<Partition, Terms>) -> HashMap<Partition, Terms> {
    let n = shapes.len();
    let mut a = Matrix::zeros(n, n);
    for (i, si) in shapes.iter().enumerate() {
        for (j, sj) in shapes.iter().enumerate() {
            if let Some(c) = rows[si].get(sj) {
                a[(i, j)] = c.clone();
            }
        }
    }
    let inv = a.inverse().expect("basis transition matrices are invertible");
    shapes
        .iter()
        .enumerate()
        .map(|(i, si)| {
            let mut row = Terms::new();
            for (j, sj) in shapes.iter().enumerate() {
                let c = &inv[(i, j)];
                if !c.is_zero() {
                    row.insert(sj.clone(), c.clone());
                }
            }
            (si.clone(), row)
        })
        .collect()
}

/// Coefficient of `x^exponents` in `p_{parts}(x_1, ..., x_l)`: the number of
/// ways to distribute the parts among the variables with the given sums.
fn monomial_coefficient(parts: &[usize], exponents: &[usize]) -> u64 {
    fn go(parts: &[usize], remaining: &mut Vec<usize>, memo: &mut HashMap<(usize, Vec<usize>), u64>) -> u64 {
        if parts.is_empty() {
            return u64::from(remaining.iter().all(|&r| r == 0));
        }
        let key = (parts.len(), remaining.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for j in 0..remaining.len() {
            if remaining[j] >= parts[0] {
                remaining[j] -= parts[0];
                total += go(&parts[1..], remaining, memo);
                remaining[j] += parts[0];
            }
        }
        memo.insert(key, total);
        total
    }
    let mut remaining = exponents.to_vec();
    go(parts, &mut remaining, &mut HashMap::new())
}
