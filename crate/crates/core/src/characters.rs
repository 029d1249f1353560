//! Irreducible characters of the symmetric groups via the
//! Murnaghan–Nakayama rule, with a process-wide cache of completed tables.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::rational::Q;
use crate::symfunc::Lambda;

/// Character table of `S_n`. Rows (irreducibles) and columns (cycle types)
/// are both listed in canonical partition order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
    z: Vec<u128>,
}

impl CharacterTable {
    fn compute(n: usize) -> Self {
        let partitions = partitions_of(n);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|shape| {
                partitions
                    .iter()
                    .map(|ty| mn_character(shape, ty.parts(), &mut memo))
                    .collect()
            })
            .collect();
        let z = partitions.iter().map(Partition::z).collect();
        CharacterTable {
            n,
            partitions,
            index,
            values,
            z,
        }
    }

    /// Shared table for `S_n`, built on first use. Has no cap check; see
    /// [`Lambda::char_table`] for the capped entry point.
    pub fn get(n: usize) -> Arc<CharacterTable> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(t) = cache.lock().expect("character cache poisoned").get(&n) {
            return Arc::clone(t);
        }
        // Built outside the lock; a racing builder produces an identical table.
        let table = Arc::new(CharacterTable::compute(n));
        let mut guard = cache.lock().expect("character cache poisoned");
        Arc::clone(guard.entry(n).or_insert(table))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `chi^shape(cycle_type)`. Panics if either is not a partition of `n`.
    pub fn chi(&self, shape: &Partition, cycle_type: &Partition) -> i64 {
        self.values[self.index[shape]][self.index[cycle_type]]
    }

    pub fn row(&self, shape: &Partition) -> &[i64] {
        &self.values[self.index[shape]]
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn z(&self, cycle_type: &Partition) -> u128 {
        self.z[self.index[cycle_type]]
    }

    pub fn z_values(&self) -> &[u128] {
        &self.z
    }
}

/// Murnaghan–Nakayama: strip a rim hook of length `cycle[0]` in all possible
/// ways and recurse on the remaining cycles.
fn mn_character(
    shape: &Partition,
    cycle: &[usize],
    memo: &mut HashMap<(Partition, Vec<usize>), i64>,
) -> i64 {
    if cycle.is_empty() {
        return if shape.is_empty() { 1 } else { 0 };
    }
    let key = (shape.clone(), cycle.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = cycle[0];
    let len = shape.len();
    let beta: Vec<usize> = (0..len).map(|i| shape.part(i) + (len - 1 - i)).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut moved = beta.clone();
        moved[i] = target;
        total += sign * mn_character(&from_beta(moved), &cycle[1..], memo);
    }
    memo.insert(key, total);
    total
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    Partition::from_unsorted(
        beta.iter()
            .enumerate()
            .map(|(i, &b)| b - (len - 1 - i))
            .collect(),
    )
}

/// The irreducible `nu` with `chi^nu = chi^shape * sign`, found by matching
/// character rows.
pub fn tensor_with_sign(shape: &Partition) -> Partition {
    let table = CharacterTable::get(shape.size());
    let twisted: Vec<i64> = table
        .partitions()
        .iter()
        .map(|ty| table.chi(shape, ty) * ty.sign())
        .collect();
    table
        .partitions()
        .iter()
        .find(|nu| table.row(nu) == twisted.as_slice())
        .cloned()
        .expect("sign twist of an irreducible character is irreducible")
}

/// Multiplicity of the trivial representation in `V_a ⊗ V_b ⊗ V_c`.
pub fn kronecker_coeff(a: &Partition, b: &Partition, c: &Partition) -> Result<u64> {
    let n = a.size();
    if b.size() != n || c.size() != n {
        return Err(Error::Domain(format!(
            "Kronecker coefficient needs equal sizes, got {a}, {b}, {c}"
        )));
    }
    let table = CharacterTable::get(n);
    let mut sum = Q::zero();
    for ty in table.partitions() {
        let prod = table.chi(a, ty) * table.chi(b, ty) * table.chi(c, ty);
        sum += Q::new(BigInt::from(prod), BigInt::from(table.z(ty)));
    }
    crate::rational::to_u64(&sum)
        .ok_or_else(|| Error::Internal(format!("non-integral Kronecker coefficient {sum}")))
}

impl Lambda {
    /// Character table of `S_n` for `1 <= n <= cap`.
    pub fn char_table(&self, n: usize) -> Result<Arc<CharacterTable>> {
        if n == 0 {
            return Err(Error::Domain("character tables start at n = 1".into()));
        }
        if n > self.cap() {
            return Err(Error::SizeLimit(format!(
                "character table for n = {n} exceeds cap {}",
                self.cap()
            )));
        }
        Ok(CharacterTable::get(n))
    }

    pub fn tensor_with_sign(&self, shape: &Partition) -> Result<Partition> {
        self.check_degree(shape.size())?;
        Ok(tensor_with_sign(shape))
    }

    pub fn kronecker_coeff(&self, a: &Partition, b: &Partition, c: &Partition) -> Result<u64> {
        self.check_degree(a.size())?;
        kronecker_coeff(a, b, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_tables() {
        let t1 = CharacterTable::get(1);
        assert_eq!(t1.chi(&p(&[1]), &p(&[1])), 1);
        assert_eq!(t1.z(&p(&[1])), 1);

        let t2 = CharacterTable::get(2);
        assert_eq!(t2.chi(&p(&[1, 1]), &p(&[2])), -1);

        let t3 = CharacterTable::get(3);
        assert_eq!(t3.z(&p(&[2, 1])), 2);
        assert_eq!(t3.z(&p(&[1, 1, 1])), 6);
        assert_eq!(t3.row(&p(&[2, 1])), &[-1, 0, 2]);
    }

    #[test]
    fn trivial_and_sign_rows() {
        for n in 1..=8 {
            let t = CharacterTable::get(n);
            for ty in t.partitions() {
                assert_eq!(t.chi(&Partition::row(n), ty), 1);
                assert_eq!(t.chi(&Partition::column(n), ty), ty.sign());
            }
        }
    }

    #[test]
    fn sign_twist_examples() {
        assert_eq!(tensor_with_sign(&p(&[4])), Partition::column(4));
        assert_eq!(tensor_with_sign(&p(&[2, 1])), p(&[2, 1]));
        assert_eq!(tensor_with_sign(&p(&[3, 1])), p(&[2, 1, 1]));
        assert_eq!(tensor_with_sign(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker_coeff(&p(&[1, 1]), &p(&[1, 1]), &p(&[2])).unwrap(), 1);
        assert_eq!(kronecker_coeff(&p(&[2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(), 1);
        for a in partitions_of(4) {
            for c in partitions_of(4) {
                let expected = u64::from(a == c);
                assert_eq!(kronecker_coeff(&a, &p(&[4]), &c).unwrap(), expected);
            }
        }
        assert!(matches!(
            kronecker_coeff(&p(&[2]), &p(&[1]), &p(&[2])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn capped_table_access() {
        let lambda = Lambda::with_cap(4);
        assert!(lambda.char_table(4).is_ok());
        assert!(matches!(lambda.char_table(5), Err(Error::SizeLimit(_))));
        assert!(lambda.char_table(0).is_err());
    }
}
