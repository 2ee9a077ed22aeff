//! Multi-indices and the Clifford algebra `Cl(0,n)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// A multi-index `α = (α_1, …, α_n)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        MultiIndex(entries)
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// The unit multi-index `e_axis` (axes are 1-based).
    pub fn unit(n: usize, axis: usize) -> Self {
        let mut v = vec![0; n];
        v[axis - 1] = 1;
        MultiIndex(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// Entry for a 1-based axis.
    pub fn get(&self, axis: usize) -> u32 {
        self.0[axis - 1]
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    /// `α! = α_1!⋯α_n!`
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&a| rational::factorial(a as usize)).product()
    }

    pub fn with_axis(&self, axis: usize, value: u32) -> Self {
        let mut v = self.0.clone();
        v[axis - 1] = value;
        MultiIndex(v)
    }

    pub fn raised(&self, axis: usize, by: u32) -> Self {
        self.with_axis(axis, self.get(axis) + by)
    }

    /// `α − e_axis`, or `None` if that entry is already zero.
    pub fn lowered(&self, axis: usize) -> Option<Self> {
        let a = self.get(axis);
        (a > 0).then(|| self.with_axis(axis, a - 1))
    }

    pub fn scaled(&self, factor: u32) -> Self {
        MultiIndex(self.0.iter().map(|a| a * factor).collect())
    }

    /// All multi-indices of length `n` and degree `k`, in lexicographic order.
    pub fn all_of_degree(n: usize, k: usize) -> Vec<MultiIndex> {
        fn rec(n: usize, k: usize, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if prefix.len() + 1 == n {
                prefix.push(k as u32);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for a in 0..=k {
                prefix.push(a as u32);
                rec(n, k - a, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if k == 0 {
                out.push(MultiIndex(Vec::new()));
            }
            return out;
        }
        rec(n, k, &mut Vec::with_capacity(n), &mut out);
        out.sort();
        out
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// A basis blade `e_A`, stored as a bitset: bit `i-1` set iff `i ∈ A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub const fn from_bits(bits: u32) -> Self {
        Blade(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// The generator `e_i` (1-based).
    pub fn generator(i: usize) -> Self {
        Blade(1 << (i - 1))
    }

    /// Normalises an ordered product `e_{i_1}⋯e_{i_r}` into a sorted blade and a sign.
    /// Repeated indices contract with `e_i² = −1`.
    pub fn from_indices(indices: &[usize]) -> (bool, Blade) {
        indices.iter().fold((false, Blade::SCALAR), |(neg, acc), &i| {
            let (n2, b) = acc.product(Blade::generator(i));
            (neg ^ n2, b)
        })
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Sorted 1-based indices.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// `e_A e_B = ±e_{A△B}`; returns `(negative, blade)`.
    pub fn product(self, other: Blade) -> (bool, Blade) {
        let a = self.0;
        let mut swaps = 0u32;
        let mut b = other.0;
        while b != 0 {
            let j = b.trailing_zeros();
            swaps += (a >> (j + 1)).count_ones();
            b &= b - 1;
        }
        let squares = (a & other.0).count_ones();
        ((swaps + squares) % 2 == 1, Blade(a ^ other.0))
    }

    /// Sign of the conjugation `ē_A = (−1)^r (−1)^{r(r−1)/2} e_A`.
    pub fn conjugate_negates(self) -> bool {
        let r = self.grade();
        (r + r * r.saturating_sub(1) / 2) % 2 == 1
    }

    /// All `2ⁿ` blades in bitset order.
    pub fn all(n: usize) -> Vec<Blade> {
        (0..(1u32 << n)).map(Blade).collect()
    }

    /// Text key used by the JSON form: `"0"` for the scalar blade, else sorted digits.
    pub fn key(self) -> String {
        if self.0 == 0 {
            "0".to_string()
        } else {
            self.indices().iter().map(|i| i.to_string()).collect()
        }
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.key())
    }
}

/// An element `Σ_A a_A e_A` of `Cl(0,n)`. Only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    dim: usize,
    coeffs: BTreeMap<Blade, Rational>,
}

impl CliffordElement {
    pub fn zero(dim: usize) -> Self {
        CliffordElement { dim, coeffs: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, value: Rational) -> Self {
        Self::blade(dim, Blade::SCALAR, value)
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, Rational::one())
    }

    pub fn blade(dim: usize, blade: Blade, value: Rational) -> Self {
        assert!(blade.max_index() <= dim, "blade {blade} exceeds dimension {dim}");
        let mut e = Self::zero(dim);
        e.add_assign_term(blade, value);
        e
    }

    pub fn generator(dim: usize, i: usize) -> Self {
        Self::blade(dim, Blade::generator(i), Rational::one())
    }

    /// The vector `Σ x_i e_i`.
    pub fn vector(components: &[Rational]) -> Self {
        let dim = components.len();
        let mut e = Self::zero(dim);
        for (i, x) in components.iter().enumerate() {
            e.add_assign_term(Blade::generator(i + 1), x.clone());
        }
        e
    }

    /// `1^± = ±Σ e_i`.
    pub fn ones_vector(dim: usize, negative: bool) -> Self {
        let unit = if negative { -Rational::one() } else { Rational::one() };
        Self::vector(&vec![unit; dim])
    }

    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Blade, Rational)>) -> Self {
        let mut e = Self::zero(dim);
        for (b, v) in terms {
            e.add_assign_term(b, v);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> Rational {
        self.coeffs.get(&blade).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rational)> {
        self.coeffs.iter()
    }

    pub fn add_assign_term(&mut self, blade: Blade, value: Rational) {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(blade) {
            Entry::Vacant(v) => {
                v.insert(value);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += value;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Clifford product with a dimension check.
    pub fn clifford_product(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim);
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                let (neg, blade) = a.product(*b);
                let v = x * y;
                out.add_assign_term(blade, if neg { -v } else { v });
            }
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.dim);
        }
        CliffordElement { dim: self.dim, coeffs: self.coeffs.iter().map(|(b, v)| (*b, v * factor)).collect() }
    }

    /// The bar involution: reversion composed with the grade involution.
    pub fn conjugate(&self) -> Self {
        CliffordElement {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|(b, v)| (*b, if b.conjugate_negates() { -v } else { v.clone() })).collect(),
        }
    }

    /// `Sc a = a_∅`.
    pub fn scalar_part(&self) -> Rational {
        self.coefficient(Blade::SCALAR)
    }

    /// The grade-1 part `Σ a_i e_i`.
    pub fn vector_part(&self) -> Self {
        self.grade_part(1)
    }

    pub fn grade_part(&self, grade: usize) -> Self {
        CliffordElement {
            dim: self.dim,
            coeffs: self.coeffs.iter().filter(|(b, _)| b.grade() == grade).map(|(b, v)| (*b, v.clone())).collect(),
        }
    }

    /// `Sc(ā a) = Σ a_A²`.
    pub fn norm_squared(&self) -> Rational {
        self.coeffs.values().map(|v| v * v).sum()
    }

    /// Same coefficients embedded in a larger algebra.
    pub fn with_dim(&self, dim: usize) -> Result<Self> {
        if let Some(b) = self.coeffs.keys().find(|b| b.max_index() > dim) {
            return Err(Error::InvalidArgument(format!("blade {b} exceeds dimension {dim}")));
        }
        Ok(CliffordElement { dim, coeffs: self.coeffs.clone() })
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, v)) in self.coeffs.iter().enumerate() {
            let negative = v.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = v.abs();
            if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{mag} {b}")?;
            }
        }
        Ok(())
    }
}

impl Add for &CliffordElement {
    type Output = CliffordElement;
    fn add(self, rhs: &CliffordElement) -> CliffordElement {
        assert_eq!(self.dim, rhs.dim, "Clifford dimension mismatch");
        let mut out = self.clone();
        for (b, v) in &rhs.coeffs {
            out.add_assign_term(*b, v.clone());
        }
        out
    }
}

impl Sub for &CliffordElement {
    type Output = CliffordElement;
    fn sub(self, rhs: &CliffordElement) -> CliffordElement {
        self + &(-rhs)
    }
}

impl Neg for &CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        CliffordElement { dim: self.dim, coeffs: self.coeffs.iter().map(|(b, v)| (*b, -v)).collect() }
    }
}

/// Clifford product.
///
/// # Panics
///
/// Panics on a dimension mismatch; use [`CliffordElement::clifford_product`] for a checked product.
impl Mul for &CliffordElement {
    type Output = CliffordElement;
    fn mul(self, rhs: &CliffordElement) -> CliffordElement {
        assert_eq!(self.dim, rhs.dim, "Clifford dimension mismatch");
        self.mul_unchecked(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn e(n: usize, idx: &[usize]) -> CliffordElement {
        let (neg, b) = Blade::from_indices(idx);
        CliffordElement::blade(n, b, if neg { int(-1) } else { int(1) })
    }

    #[test]
    fn generator_squares_to_minus_one() {
        let e1 = CliffordElement::generator(3, 1);
        assert_eq!(&e1 * &e1, CliffordElement::scalar(3, int(-1)));
    }

    #[test]
    fn identity_element() {
        let a = CliffordElement::from_terms(3, [(Blade::SCALAR, rat(1, 2)), (Blade::from_bits(0b101), int(-3))]);
        assert_eq!(&CliffordElement::one(3) * &a, a);
    }

    #[test]
    fn sum_of_two_generators_squares_to_minus_two() {
        let v = &CliffordElement::generator(2, 1) + &CliffordElement::generator(2, 2);
        assert_eq!(&v * &v, CliffordElement::scalar(2, int(-2)));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(CliffordElement::generator(2, 1).conjugate(), e(2, &[1]).scale(&int(-1)));
        // (e1 e2)‾ = ē2 ē1 = e2 e1 = −e1 e2
        let e12 = e(2, &[1, 2]);
        assert_eq!(e12.conjugate(), -&e12);
        assert_eq!(&e(2, &[2]) * &e(2, &[1]), -&e12);
        let a = CliffordElement::from_terms(1, [(Blade::SCALAR, int(2)), (Blade::generator(1), int(3))]);
        assert_eq!((&a.conjugate() * &a).scalar_part(), int(13));
    }

    #[test]
    fn grade_projections() {
        let a = CliffordElement::from_terms(
            2,
            [(Blade::SCALAR, int(3)), (Blade::generator(1), int(1)), (Blade::from_bits(0b11), int(1))],
        );
        assert_eq!(a.scalar_part(), int(3));
        assert_eq!(a.vector_part(), CliffordElement::generator(2, 1));
        assert_eq!(e(2, &[1, 2]).scalar_part(), int(0));
    }

    #[test]
    fn unsorted_indices_normalise_with_sign() {
        let (neg, b) = Blade::from_indices(&[2, 1]);
        assert!(neg);
        assert_eq!(b, Blade::from_bits(0b11));
        let (neg, b) = Blade::from_indices(&[1, 1]);
        assert!(neg);
        assert_eq!(b, Blade::SCALAR);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let a = CliffordElement::one(2);
        let b = CliffordElement::one(3);
        assert!(matches!(a.clifford_product(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn multi_indices_enumerate_lexicographically() {
        let all = MultiIndex::all_of_degree(2, 2);
        let v: Vec<_> = all.iter().map(|m| m.entries().to_vec()).collect();
        assert_eq!(v, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        assert_eq!(MultiIndex::all_of_degree(3, 4).len(), 15);
        assert_eq!(MultiIndex::new(vec![2, 3]).factorial(), BigInt::from(12));
    }
}
