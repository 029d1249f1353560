//! Brute-force ground truth: the group algebra of Sₙ, Young symmetrizers,
//! and their action on tensor powers of a `d`-dimensional space.
//!
//! Nothing here touches symmetric functions. Ranks of Young symmetrizer
//! images are computed from explicit matrices, so they can be compared with
//! the hook-content values produced by the symmetric-function side.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::rational::{self, Q};

pub use crate::linalg::Matrix as ExactMatrix;

/// Largest `n` accepted by the symmetrizer constructions.
pub const MAX_SYMMETRIZER_N: usize = 5;
/// Largest tensor-power dimension `dⁿ` accepted by [`action_matrix`].
pub const MAX_TENSOR_DIM: usize = 10_000;

/// A permutation of `{0..n-1}` in one-line notation.
pub type Perm = Vec<u8>;

/// An element of `Q[Sₙ]`. Multiplication composes right to left:
/// `(ab)(i) = a(b(i))`.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Perm, Q>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        GroupAlgebraElement { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_perm(identity_perm(n), Q::one()).expect("identity is a permutation")
    }

    pub fn from_perm(perm: Perm, coeff: Q) -> Result<Self> {
        if !is_permutation(&perm) {
            return Err(Error::Domain(format!("{perm:?} is not a permutation")));
        }
        let mut out = Self::zero(perm.len());
        out.add_term(perm, coeff);
        Ok(out)
    }

    /// Builds an element from 1-based one-line permutations.
    pub fn from_one_line(n: usize, terms: &[(&[usize], Q)]) -> Result<Self> {
        let mut out = Self::zero(n);
        for (perm, c) in terms {
            if perm.len() != n || perm.iter().any(|&x| x == 0 || x > n) {
                return Err(Error::Domain(format!("{perm:?} is not a permutation of 1..{n}")));
            }
            let p: Perm = perm.iter().map(|&x| (x - 1) as u8).collect();
            if !is_permutation(&p) {
                return Err(Error::Domain(format!("{perm:?} is not a permutation of 1..{n}")));
            }
            out.add_term(p, c.clone());
        }
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Perm, Q> {
        &self.terms
    }

    pub fn coeff(&self, perm: &[u8]) -> Q {
        self.terms.get(perm).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, perm: Perm, c: Q) {
        let entry = self.terms.entry(perm).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        GroupAlgebraElement {
            n: self.n,
            terms: self.terms.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Domain(format!(
                "cannot multiply elements of S{} and S{}",
                self.n, other.n
            )));
        }
        let mut acc: BTreeMap<Perm, Q> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                *acc.entry(compose(a, b)).or_insert_with(Q::zero) += ca * cb;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(GroupAlgebraElement { n: self.n, terms: acc })
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (perm, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let one_line: Vec<String> = perm.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "{}*[{}]", rational::render_q(c), one_line.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S{}({self})", self.n)
    }
}

pub fn identity_perm(n: usize) -> Perm {
    (0..n as u8).collect()
}

fn is_permutation(p: &[u8]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        match seen.get_mut(x as usize) {
            Some(s) if !*s => *s = true,
            _ => return false,
        }
    }
    true
}

/// `(a∘b)(i) = a(b(i))`.
pub fn compose(a: &[u8], b: &[u8]) -> Perm {
    b.iter().map(|&i| a[i as usize]).collect()
}

pub fn inverse(p: &[u8]) -> Perm {
    let mut inv = vec![0u8; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

pub fn cycle_type(p: &[u8]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut lengths = Vec::new();
    for start in 0..p.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    Partition::from_unsorted(lengths)
}

fn perm_sign(p: &[u8]) -> i64 {
    let ct = cycle_type(p);
    if (p.len() - ct.len()) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All permutations of `{0..n-1}` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current = identity_perm(n);
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..current.len()).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

/// Permutations preserving each block of `blocks` setwise.
fn block_stabilizer(n: usize, blocks: &[Vec<u8>]) -> Vec<Perm> {
    let mut out = vec![identity_perm(n)];
    for block in blocks {
        let local = all_permutations(block.len());
        let mut next = Vec::with_capacity(out.len() * local.len());
        for base in &out {
            for sigma in &local {
                let mut p = base.clone();
                for (k, &target) in sigma.iter().enumerate() {
                    p[block[k] as usize] = block[target as usize];
                }
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Rows and columns of the row-major filling of `shape` by `0..n-1`.
fn canonical_filling(shape: &Partition) -> (Vec<Vec<u8>>, Vec<Vec<u8>>) {
    let mut rows = Vec::new();
    let mut next = 0u8;
    for &len in shape.parts() {
        rows.push((next..next + len as u8).collect::<Vec<_>>());
        next += len as u8;
    }
    let conj = shape.conjugate();
    let cols = (0..conj.len())
        .map(|j| (0..conj.part(j)).map(|i| rows[i][j]).collect())
        .collect();
    (rows, cols)
}

fn guard_symmetrizer(shape: &Partition) -> Result<()> {
    if shape.size() > MAX_SYMMETRIZER_N {
        return Err(Error::SizeLimit(format!(
            "symmetrizers are limited to n <= {MAX_SYMMETRIZER_N}, got {}",
            shape.size()
        )));
    }
    Ok(())
}

/// Unnormalized row sum `Σ_{σ∈R} σ` and signed column sum `Σ_{τ∈C} sgn(τ) τ`.
fn raw_symmetrizers(shape: &Partition) -> (GroupAlgebraElement, GroupAlgebraElement) {
    let n = shape.size();
    let (rows, cols) = canonical_filling(shape);
    let mut s = GroupAlgebraElement::zero(n);
    for p in block_stabilizer(n, &rows) {
        s.add_term(p, Q::one());
    }
    let mut a = GroupAlgebraElement::zero(n);
    for p in block_stabilizer(n, &cols) {
        let sign = rational::q(perm_sign(&p));
        a.add_term(p, sign);
    }
    (s, a)
}

/// The idempotent row symmetrizer `p^S` and column antisymmetrizer `p^A` of
/// the row-major tableau of `shape`.
pub fn row_column_symmetrizers(
    shape: &Partition,
) -> Result<(GroupAlgebraElement, GroupAlgebraElement)> {
    guard_symmetrizer(shape)?;
    let (s, a) = raw_symmetrizers(shape);
    let s_norm = s.scale(&Q::new(One::one(), s.terms.len().into()));
    let a_norm = a.scale(&Q::new(One::one(), a.terms.len().into()));
    Ok((s_norm, a_norm))
}

/// The scalar `c` making `c·A·S` idempotent, where `A` and `S` are the
/// unnormalized column and row sums.
pub fn young_symmetrizer_constant(shape: &Partition) -> Result<Q> {
    guard_symmetrizer(shape)?;
    let (s, a) = raw_symmetrizers(shape);
    let q = a.mul(&s)?;
    idempotent_scalar(&q)
}

fn idempotent_scalar(q: &GroupAlgebraElement) -> Result<Q> {
    let sq = q.mul(q)?;
    let (perm, c) = q
        .terms
        .iter()
        .next()
        .ok_or_else(|| Error::Internal("Young symmetrizer vanished".into()))?;
    let kappa = sq.coeff(perm) / c;
    if kappa.is_zero() || sq != q.scale(&kappa) {
        return Err(Error::Internal("Young symmetrizer is not quasi-idempotent".into()));
    }
    Ok(kappa.recip())
}

/// The Young symmetrizer `e_λ = c·p^A·p^S`, scaled so that `e_λ² = e_λ`.
pub fn young_symmetrizer(shape: &Partition) -> Result<GroupAlgebraElement> {
    guard_symmetrizer(shape)?;
    let (s, a) = raw_symmetrizers(shape);
    let q = a.mul(&s)?;
    let c = idempotent_scalar(&q)?;
    Ok(q.scale(&c))
}

fn tensor_dim(n: usize, d: usize) -> Result<usize> {
    let mut dim: usize = 1;
    for _ in 0..n {
        dim = dim
            .checked_mul(d)
            .filter(|&x| x <= MAX_TENSOR_DIM)
            .ok_or_else(|| {
                Error::SizeLimit(format!("tensor power {d}^{n} exceeds {MAX_TENSOR_DIM}"))
            })?;
    }
    Ok(dim)
}

/// Decodes a basis index into the indices of its tensor factors; factor 0
/// is the most significant digit.
fn digits(mut index: usize, n: usize, d: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in (0..n).rev() {
        out[slot] = index % d;
        index /= d;
    }
    out
}

fn encode(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * d + x)
}

/// The matrix of `a` on `V^{⊗n}`, `dim V = d`. A permutation `σ` moves the
/// factor in position `i` to position `σ(i)`.
pub fn action_matrix(a: &GroupAlgebraElement, d: usize) -> Result<ExactMatrix> {
    let n = a.n();
    let dim = tensor_dim(n, d)?;
    let mut m = ExactMatrix::zeros(dim, dim);
    if dim == 0 {
        return Ok(m);
    }
    for (perm, c) in a.terms() {
        for col in 0..dim {
            let src = digits(col, n, d);
            let mut dst = vec![0; n];
            for (i, &x) in src.iter().enumerate() {
                dst[perm[i] as usize] = x;
            }
            m[(encode(&dst, d), col)] += c;
        }
    }
    Ok(m)
}

/// `dim S_λ(k^d)` as the rank of the Young symmetrizer on `(k^d)^{⊗n}`.
pub fn schur_image_dim(shape: &Partition, d: usize) -> Result<usize> {
    tensor_dim(shape.size(), d)?;
    let e = young_symmetrizer(shape)?;
    Ok(action_matrix(&e, d)?.rank())
}

/// Trace of a single permutation on `(k^d)^{⊗n}`, read off the explicit
/// matrix.
pub fn permutation_trace(perm: &[u8], d: usize) -> Result<Q> {
    let a = GroupAlgebraElement::from_perm(perm.to_vec(), Q::one())?;
    Ok(action_matrix(&a, d)?.trace())
}
