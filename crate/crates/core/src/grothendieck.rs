//! The positive cone Λ₊ of Schur-positive elements, its group completion,
//! the sign-rule construction of the co-negation, and ℤ/2-graded two-term
//! complexes of Schur objects.
//!
//! A complex is stored one irreducible at a time: for each partition λ the
//! even and odd parts contain `V_λ` with multiplicities `m0`, `m1`, and the
//! differentials are plain `m1 x m0` and `m0 x m1` matrices.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::characters::tensor_with_sign;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::partitions::{partitions_up_to, Partition};
use crate::rational::{self, Q};
use crate::symfunc::{BasisTag, Lambda, SymFunc};

/// A Schur-positive element: multiplicities of irreducibles.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PosElement {
    terms: BTreeMap<Partition, u64>,
}

impl PosElement {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, u64)>) -> Self {
        let mut out = Self::new();
        for (shape, m) in terms {
            out.add(shape, m);
        }
        out
    }

    pub fn add(&mut self, shape: Partition, multiplicity: u64) {
        if multiplicity > 0 {
            *self.terms.entry(shape).or_insert(0) += multiplicity;
        }
    }

    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn multiplicity(&self, shape: &Partition) -> u64 {
        self.terms.get(shape).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The class in Λ, in the Schur basis.
    pub fn to_symfunc(&self) -> SymFunc {
        SymFunc::from_terms(
            BasisTag::S,
            self.terms
                .iter()
                .map(|(k, &m)| (k.clone(), Q::from_integer(BigInt::from(m)))),
        )
    }
}

impl fmt::Display for PosElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_symfunc(), f)
    }
}

impl fmt::Debug for PosElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PosElement({self})")
    }
}

impl Lambda {
    /// The multiplicities of `f` when it lies in Λ₊, `None` otherwise.
    pub fn schur_positive_part(&self, f: &SymFunc) -> Result<Option<PosElement>> {
        let s = self.to_basis(f, BasisTag::S)?;
        let mut out = PosElement::new();
        for (shape, c) in s.terms() {
            match rational::to_u64(c) {
                Some(m) => out.add(shape.clone(), m),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    pub fn is_schur_positive(&self, f: &SymFunc) -> Result<bool> {
        Ok(self.schur_positive_part(f)?.is_some())
    }

    /// Writes an integral `f` as `f₊ - f₋` with disjoint supports.
    pub fn split_pos_neg(&self, f: &SymFunc) -> Result<(PosElement, PosElement)> {
        let s = self.to_basis(f, BasisTag::S)?;
        let mut pos = PosElement::new();
        let mut neg = PosElement::new();
        for (shape, c) in s.terms() {
            let v = rational::to_i64(c).ok_or_else(|| {
                Error::Domain(format!("coefficient {c} of s{shape} is not an integer"))
            })?;
            if v > 0 {
                pos.add(shape.clone(), v.unsigned_abs());
            } else {
                neg.add(shape.clone(), v.unsigned_abs());
            }
        }
        Ok((pos, neg))
    }

    /// `ν[ρ] = Σ_n (-1)^n [ρ(n)]·[det(n)]`: each irreducible `V_λ` in degree
    /// `n` is twisted by the sign representation and weighted by `(-1)^n`.
    pub fn conegation_sign_rule(&self, rho: &PosElement) -> Result<SymFunc> {
        let mut terms = Vec::with_capacity(rho.terms.len());
        for (shape, &m) in &rho.terms {
            self.check_degree(shape.size())?;
            let sign: i64 = if shape.size() % 2 == 0 { 1 } else { -1 };
            terms.push((
                tensor_with_sign(shape),
                Q::from_integer(BigInt::from(sign) * BigInt::from(m)),
            ));
        }
        Ok(SymFunc::from_terms(BasisTag::S, terms))
    }

    /// `[C₀] - [C₁]`, in the Schur basis.
    pub fn euler_char(&self, complex: &TwoTermComplex) -> Result<SymFunc> {
        let mut terms = Vec::new();
        for (shape, c) in &complex.components {
            self.check_degree(shape.size())?;
            terms.push((shape.clone(), Q::from_integer(BigInt::from(c.m0 as i64 - c.m1 as i64))));
        }
        Ok(SymFunc::from_terms(BasisTag::S, terms))
    }
}

/// The block of a two-term complex at one irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub m0: usize,
    pub m1: usize,
    /// `C₀ -> C₁`, an `m1 x m0` matrix.
    pub d0: Matrix,
    /// `C₁ -> C₀`, an `m0 x m1` matrix.
    pub d1: Matrix,
}

impl Component {
    pub fn new(m0: usize, m1: usize, d0: Matrix, d1: Matrix) -> Result<Self> {
        if (d0.rows(), d0.cols()) != (m1, m0) || (d1.rows(), d1.cols()) != (m0, m1) {
            return Err(Error::Domain(format!(
                "differentials of shape {}x{} and {}x{} do not match multiplicities ({m0}, {m1})",
                d0.rows(),
                d0.cols(),
                d1.rows(),
                d1.cols()
            )));
        }
        if !d1.mul(&d0)?.is_zero() || !d0.mul(&d1)?.is_zero() {
            return Err(Error::Domain("differentials do not compose to zero".into()));
        }
        Ok(Component { m0, m1, d0, d1 })
    }

    fn zero_differentials(m0: usize, m1: usize) -> Self {
        Component {
            m0,
            m1,
            d0: Matrix::zeros(m1, m0),
            d1: Matrix::zeros(m0, m1),
        }
    }
}

/// A ℤ/2-graded complex `(C₀, C₁, d₀, d₁)` with `d₁d₀ = 0` and `d₀d₁ = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TwoTermComplex {
    components: BTreeMap<Partition, Component>,
}

impl TwoTermComplex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_components(components: impl IntoIterator<Item = (Partition, Component)>) -> Self {
        let mut c = Self::new();
        for (shape, comp) in components {
            c.insert(shape, comp);
        }
        c
    }

    /// Replaces the block at `shape`; all-zero blocks are dropped.
    pub fn insert(&mut self, shape: Partition, component: Component) {
        if component.m0 == 0 && component.m1 == 0 {
            self.components.remove(&shape);
        } else {
            self.components.insert(shape, component);
        }
    }

    pub fn components(&self) -> &BTreeMap<Partition, Component> {
        &self.components
    }

    /// Complex with zero differentials on the given graded pieces.
    pub fn with_zero_differentials(c0: &PosElement, c1: &PosElement) -> Self {
        let mut out = Self::new();
        let shapes: std::collections::BTreeSet<&Partition> =
            c0.terms.keys().chain(c1.terms.keys()).collect();
        for shape in shapes {
            let m0 = c0.multiplicity(shape) as usize;
            let m1 = c1.multiplicity(shape) as usize;
            out.insert(shape.clone(), Component::zero_differentials(m0, m1));
        }
        out
    }

    /// The cone on the identity of the generator: `x --1--> x`, `x --0--> x`.
    pub fn mapping_cone_mx() -> Self {
        let one = Matrix::identity(1);
        let zero = Matrix::zeros(1, 1);
        let comp = Component::new(1, 1, one, zero).expect("cone differentials compose to zero");
        Self::from_components([(Partition::row(1), comp)])
    }

    pub fn graded_pieces(&self) -> (PosElement, PosElement) {
        let c0 = PosElement::from_terms(self.components.iter().map(|(k, c)| (k.clone(), c.m0 as u64)));
        let c1 = PosElement::from_terms(self.components.iter().map(|(k, c)| (k.clone(), c.m1 as u64)));
        (c0, c1)
    }

    /// Rechecks shapes and `d₁d₀ = d₀d₁ = 0` on every block.
    pub fn validate(&self) -> Result<()> {
        for (shape, c) in &self.components {
            Component::new(c.m0, c.m1, c.d0.clone(), c.d1.clone())
                .map_err(|e| Error::Domain(format!("block {shape}: {e}")))?;
        }
        Ok(())
    }

    /// `(H₀, H₁)` with `H₀ = ker d₀ / im d₁` and `H₁ = ker d₁ / im d₀`.
    pub fn homology(&self) -> Result<(PosElement, PosElement)> {
        self.validate()?;
        let mut h0 = PosElement::new();
        let mut h1 = PosElement::new();
        for (shape, c) in &self.components {
            let r0 = c.d0.rank();
            let r1 = c.d1.rank();
            let (Some(a), Some(b)) = (
                c.m0.checked_sub(r0 + r1),
                c.m1.checked_sub(r0 + r1),
            ) else {
                return Err(Error::Internal(format!("negative homology at {shape}")));
            };
            h0.add(shape.clone(), a as u64);
            h1.add(shape.clone(), b as u64);
        }
        Ok((h0, h1))
    }

    /// A random valid complex over shapes of size at most `max_size`, with
    /// multiplicities at most `max_mult`.
    ///
    /// `d₀` is a random product of rank at most `min(m0, m1)`; then
    /// `d₁ = K·M·L` where the columns of `K` span `ker d₀`, the rows of `L`
    /// span the left kernel of `d₀`, and `M` is random. Both compositions
    /// vanish by construction.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, max_size: usize, max_mult: usize) -> Self {
        let mut out = Self::new();
        for shape in partitions_up_to(max_size) {
            if rng.gen_bool(0.5) {
                continue;
            }
            let m0 = rng.gen_range(0..=max_mult);
            let m1 = rng.gen_range(0..=max_mult);
            let rank = rng.gen_range(0..=m0.min(m1));
            let d0 = random_matrix(rng, m1, rank)
                .mul(&random_matrix(rng, rank, m0))
                .expect("compatible shapes");
            let kernel = d0.kernel();
            let left_kernel = d0.transpose().kernel().transpose();
            let middle = random_matrix(rng, kernel.cols(), left_kernel.rows());
            let d1 = kernel
                .mul(&middle)
                .and_then(|km| km.mul(&left_kernel))
                .expect("compatible shapes");
            let comp = Component::new(m0, m1, d0, d1).expect("construction satisfies d² = 0");
            out.insert(shape, comp);
        }
        out
    }

    pub fn to_json(&self) -> String {
        let entries: Vec<ComplexEntry> = self
            .components
            .iter()
            .map(|(shape, c)| ComplexEntry {
                partition: shape.clone(),
                m0: c.m0,
                m1: c.m1,
                d0: render_matrix(&c.d0),
                d1: render_matrix(&c.d1),
            })
            .collect();
        serde_json::to_string_pretty(&entries).expect("complex serializes")
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let entries: Vec<ComplexEntry> =
            serde_json::from_str(src).map_err(|e| Error::Domain(format!("invalid complex JSON: {e}")))?;
        let mut out = Self::new();
        for e in entries {
            if out.components.contains_key(&e.partition) {
                return Err(Error::Domain(format!("partition {} listed twice", e.partition)));
            }
            let d0 = parse_matrix(e.m1, e.m0, &e.d0)?;
            let d1 = parse_matrix(e.m0, e.m1, &e.d1)?;
            let comp = Component::new(e.m0, e.m1, d0, d1)
                .map_err(|err| Error::Domain(format!("block {}: {err}", e.partition)))?;
            out.insert(e.partition, comp);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexEntry {
    partition: Partition,
    m0: usize,
    m1: usize,
    #[serde(rename = "D0")]
    d0: Vec<Vec<String>>,
    #[serde(rename = "D1")]
    d1: Vec<Vec<String>>,
}

fn render_matrix(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows()
        .iter()
        .map(|row| row.iter().map(rational::render_q).collect())
        .collect()
}

/// Empty row lists are accepted for any shape with zero rows or columns.
fn parse_matrix(rows: usize, cols: usize, data: &[Vec<String>]) -> Result<Matrix> {
    if data.is_empty() && (rows == 0 || cols == 0) {
        return Ok(Matrix::zeros(rows, cols));
    }
    let parsed = data
        .iter()
        .map(|row| row.iter().map(|x| rational::parse_q(x)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows_shaped(rows, cols, parsed)
}

fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            let num: i64 = rng.gen_range(-3..=3);
            let den: i64 = rng.gen_range(1..=3);
            m[(i, j)] = rational::q_frac(num, den);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use rand::SeedableRng;

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn pos(entries: &[(&[usize], u64)]) -> PosElement {
        PosElement::from_terms(entries.iter().map(|(p, m)| (part(p), *m)))
    }

    #[test]
    fn positivity_examples() {
        let l = Lambda::new();
        let h2 = SymFunc::basis_element(BasisTag::H, part(&[2]));
        assert_eq!(l.schur_positive_part(&h2).unwrap(), Some(pos(&[(&[2], 1)])));
        assert!(!l.is_schur_positive(&SymFunc::p(&[2])).unwrap());
        assert_eq!(
            l.schur_positive_part(&SymFunc::zero(BasisTag::S)).unwrap(),
            Some(PosElement::new())
        );
        // fractional coefficients are not in the cone
        assert!(!l.is_schur_positive(&SymFunc::s(&[1]).scale(&rational::q_frac(1, 2))).unwrap());
    }

    #[test]
    fn split_examples() {
        let l = Lambda::new();
        assert_eq!(
            l.split_pos_neg(&SymFunc::p(&[2])).unwrap(),
            (pos(&[(&[2], 1)]), pos(&[(&[1, 1], 1)]))
        );
        assert_eq!(l.split_pos_neg(&SymFunc::s(&[3])).unwrap(), (pos(&[(&[3], 1)]), PosElement::new()));
        assert_eq!(
            l.split_pos_neg(&SymFunc::zero(BasisTag::S)).unwrap(),
            (PosElement::new(), PosElement::new())
        );
        // p[3] = s[3] - s[2,1] + s[1,1,1]
        assert_eq!(
            l.split_pos_neg(&SymFunc::p(&[3])).unwrap(),
            (pos(&[(&[3], 1), (&[1, 1, 1], 1)]), pos(&[(&[2, 1], 1)]))
        );
        assert!(matches!(
            l.split_pos_neg(&SymFunc::p(&[2]).scale(&rational::q_frac(1, 2))),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn sign_rule_examples() {
        let l = Lambda::new();
        assert_eq!(l.conegation_sign_rule(&pos(&[(&[1], 1)])).unwrap(), -SymFunc::s(&[1]));
        assert_eq!(l.conegation_sign_rule(&pos(&[(&[2], 1)])).unwrap(), SymFunc::s(&[1, 1]));
        assert_eq!(l.conegation_sign_rule(&PosElement::new()).unwrap(), SymFunc::zero(BasisTag::S));
    }

    #[test]
    fn homology_examples() {
        let l = Lambda::new();
        let c0 = pos(&[(&[2], 1), (&[1], 2)]);
        let c1 = pos(&[(&[1, 1], 3)]);
        let zero = TwoTermComplex::with_zero_differentials(&c0, &c1);
        assert_eq!(zero.homology().unwrap(), (c0.clone(), c1.clone()));

        let cone = TwoTermComplex::mapping_cone_mx();
        assert_eq!(cone.homology().unwrap(), (PosElement::new(), PosElement::new()));
        assert!(l.euler_char(&cone).unwrap().is_zero());

        let d0 = Matrix::from_rows(vec![vec![q(1), q(0)]]).unwrap();
        let d1 = Matrix::zeros(2, 1);
        let c = TwoTermComplex::from_components([(part(&[1]), Component::new(2, 1, d0, d1).unwrap())]);
        assert_eq!(c.homology().unwrap(), (pos(&[(&[1], 1)]), PosElement::new()));
        assert_eq!(l.euler_char(&c).unwrap(), SymFunc::s(&[1]));

        let only_even = TwoTermComplex::with_zero_differentials(&pos(&[(&[2], 1)]), &PosElement::new());
        assert_eq!(l.euler_char(&only_even).unwrap(), SymFunc::s(&[2]));
    }

    #[test]
    fn rejects_invalid_blocks() {
        let one = Matrix::identity(1);
        assert!(Component::new(1, 1, one.clone(), one.clone()).is_err());
        assert!(Component::new(2, 1, one.clone(), Matrix::zeros(1, 1)).is_err());
    }

    #[test]
    fn random_complexes_are_valid() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let c = TwoTermComplex::random(&mut rng, 3, 3);
            c.validate().unwrap();
            c.homology().unwrap();
        }
    }

    #[test]
    fn json_round_trip() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let c = TwoTermComplex::random(&mut rng, 3, 3);
        assert_eq!(TwoTermComplex::from_json(&c.to_json()).unwrap(), c);
        let cone = TwoTermComplex::from_json(
            r#"[{"partition":[1],"m0":1,"m1":1,"D0":[["1"]],"D1":[["0"]]}]"#,
        )
        .unwrap();
        assert_eq!(cone, TwoTermComplex::mapping_cone_mx());
        let bad = r#"[{"partition":[1],"m0":1,"m1":1,"D0":[["1"]],"D1":[["1"]]}]"#;
        assert!(TwoTermComplex::from_json(bad).is_err());
    }
}
