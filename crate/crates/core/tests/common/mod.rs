//! Reference computations that share no code paths with the library's
//! symmetric-function machinery: tableau enumeration, the pentagonal
//! recurrence and brute-force permutation counts.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use plethory::rational::q;
use plethory::{BasisTag, Partition, Polynomial, Q, SymFunc};
use rand::Rng;

pub fn shape(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn cells(shape: &Partition) -> Vec<(usize, usize)> {
    shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect()
}

/// Visits every filling of `shape` by `0..letters` accepted by `allowed`,
/// which sees the value, the left neighbour and the upper neighbour.
fn fillings(
    shape: &Partition,
    letters: usize,
    allowed: &dyn Fn(usize, Option<usize>, Option<usize>) -> bool,
    visit: &mut dyn FnMut(&[usize]),
) {
    let cells = cells(shape);
    let width = shape.part(0);
    let mut grid = vec![usize::MAX; shape.len() * width.max(1)];
    let mut values = Vec::with_capacity(cells.len());
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        width: usize,
        letters: usize,
        grid: &mut [usize],
        values: &mut Vec<usize>,
        allowed: &dyn Fn(usize, Option<usize>, Option<usize>) -> bool,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if k == cells.len() {
            visit(values);
            return;
        }
        let (i, j) = cells[k];
        let left = (j > 0).then(|| grid[i * width + j - 1]);
        let up = (i > 0).then(|| grid[(i - 1) * width + j]);
        for v in 0..letters {
            if allowed(v, left, up) {
                grid[i * width + j] = v;
                values.push(v);
                go(k + 1, cells, width, letters, grid, values, allowed, visit);
                values.pop();
            }
        }
    }
    go(0, &cells, width, letters, &mut grid, &mut values, allowed, visit);
}

fn semistandard(v: usize, left: Option<usize>, up: Option<usize>) -> bool {
    left.is_none_or(|l| v >= l) && up.is_none_or(|u| v > u)
}

/// The Schur polynomial `s_λ(x₁..x_N)` as a sum over semistandard tableaux.
pub fn ssyt_schur(shape: &Partition, nvars: usize) -> Polynomial {
    let mut acc: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    fillings(shape, nvars, &semistandard, &mut |vals| {
        let mut exps = vec![0u32; nvars];
        for &v in vals {
            exps[v] += 1;
        }
        *acc.entry(exps).or_insert(0) += 1;
    });
    let mut out = Polynomial::zero(nvars);
    for (exps, c) in acc {
        out = out.add(&Polynomial::monomial(exps, Q::from_integer(c.into())));
    }
    out
}

/// Memoized [`ssyt_schur`].
#[derive(Default)]
pub struct SchurCache {
    polys: HashMap<(Partition, usize), Polynomial>,
}

impl SchurCache {
    pub fn get(&mut self, shape: &Partition, nvars: usize) -> Polynomial {
        self.polys
            .entry((shape.clone(), nvars))
            .or_insert_with(|| ssyt_schur(shape, nvars))
            .clone()
    }

    /// Expands an element given in the Schur basis.
    pub fn expand(&mut self, f: &SymFunc, nvars: usize) -> Polynomial {
        assert_eq!(f.basis(), BasisTag::S);
        let mut out = Polynomial::zero(nvars);
        for (shape, c) in f.terms() {
            out = out.add(&self.get(shape, nvars).scale(c));
        }
        out
    }
}

/// Kostka number: semistandard tableaux of `shape` with the given content.
pub fn kostka(shape: &Partition, content: &[usize]) -> u64 {
    if shape.size() != content.iter().sum::<usize>() {
        return 0;
    }
    let mut count = 0;
    fillings(shape, content.len(), &semistandard, &mut |vals| {
        let mut seen = vec![0; content.len()];
        for &v in vals {
            seen[v] += 1;
        }
        if seen == content {
            count += 1;
        }
    });
    count
}

/// Number of `(d0|d1)` super tableaux of `shape`: letters `0..d0` are even
/// and behave semistandardly, letters `d0..d0+d1` are odd and are strict
/// along rows and weak down columns.
pub fn super_tableaux(shape: &Partition, d0: usize, d1: usize) -> u64 {
    let even = move |v: usize| v < d0;
    let allowed = move |v: usize, left: Option<usize>, up: Option<usize>| {
        let row_ok = left.is_none_or(|l| v > l || (v == l && even(v)));
        let col_ok = up.is_none_or(|u| v > u || (v == u && !even(v)));
        row_ok && col_ok
    };
    let mut count = 0;
    fillings(shape, d0 + d1, &allowed, &mut |_| count += 1);
    count
}

/// `f • g` for `f = s_μ` and `g` a polynomial with nonnegative integer
/// coefficients: `s_μ` evaluated on the multiset of monomials of `g`.
pub fn plethysm_by_tableaux(mu: &Partition, g: &Polynomial) -> Polynomial {
    let nvars = g.nvars();
    let mut alphabet: Vec<Vec<u32>> = Vec::new();
    for (exps, c) in g.terms() {
        let k: u64 = c.to_integer().try_into().expect("nonnegative integer coefficient");
        assert!(c.is_integer());
        for _ in 0..k {
            alphabet.push(exps.clone());
        }
    }
    let mut acc: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    fillings(mu, alphabet.len(), &semistandard, &mut |vals| {
        let mut exps = vec![0u32; nvars];
        for &v in vals {
            for (e, a) in exps.iter_mut().zip(&alphabet[v]) {
                *e += a;
            }
        }
        *acc.entry(exps).or_insert(0) += 1;
    });
    let mut out = Polynomial::zero(nvars);
    for (exps, c) in acc {
        out = out.add(&Polynomial::monomial(exps, Q::from_integer(c.into())));
    }
    out
}

/// p(n) by Euler's pentagonal recurrence.
pub fn partition_count(n: usize) -> u64 {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        for k in 1.. {
            let k = k as i64;
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    p[n] as u64
}

/// All permutations of `0..n`, built by insertion.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k);
                next.push(q);
            }
        }
        perms = next;
    }
    perms
}

/// A permutation with the given cycle lengths, cycles on consecutive points.
pub fn perm_of_type(cycle_type: &Partition) -> Vec<usize> {
    let mut perm = Vec::new();
    let mut start = 0;
    for &len in cycle_type.parts() {
        for i in 0..len {
            perm.push(start + (i + 1) % len);
        }
        start += len;
    }
    perm
}

/// The number of permutations commuting with one of the given type.
pub fn centralizer_size(cycle_type: &Partition) -> u64 {
    let sigma = perm_of_type(cycle_type);
    permutations(sigma.len())
        .iter()
        .filter(|tau| (0..sigma.len()).all(|i| tau[sigma[i]] == sigma[tau[i]]))
        .count() as u64
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * k)
}

/// A random Schur-positive integer element with at most `max_terms` terms
/// of degree at most `max_degree`, coefficients in `1..=3`.
pub fn random_schur_positive<R: Rng>(rng: &mut R, max_degree: usize, max_terms: usize) -> SymFunc {
    let shapes = plethory::partitions::partitions_up_to(max_degree);
    let terms = rng.gen_range(1..=max_terms);
    SymFunc::from_terms(
        BasisTag::S,
        (0..terms).map(|_| {
            let s = shapes[rng.gen_range(0..shapes.len())].clone();
            (s, q(rng.gen_range(1..=3)))
        }),
    )
}

/// True when every Schur coefficient is a nonnegative integer.
pub fn schur_positive_integral(f: &SymFunc) -> bool {
    assert_eq!(f.basis(), BasisTag::S);
    f.terms().values().all(|c| c.is_integer() && *c >= q(0))
}
