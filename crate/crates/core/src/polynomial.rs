//! Clifford-valued polynomials in the factorial-power basis, plus an ordinary
//! monomial representation used for conversions and as an evaluation oracle.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::clifford::{Blade, CliffordElement, MultiIndex};
use crate::error::{Error, Result};
use crate::factorial::{self, FamilySign};
use crate::rational::{self, Rational};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 8;

/// `Σ_α (mh)^{(α)}_∓ a_α` with Clifford coefficients `a_α`, over a fixed `(n, h, family)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePolynomial {
    n: usize,
    h: Rational,
    family: FamilySign,
    terms: BTreeMap<MultiIndex, CliffordElement>,
}

impl LatticePolynomial {
    pub fn new(n: usize, h: Rational, family: FamilySign) -> Result<Self> {
        if n == 0 || n > MAX_DIM {
            return Err(Error::InvalidArgument(format!("dimension must be in 1..={MAX_DIM}, got {n}")));
        }
        if !h.is_positive() {
            return Err(Error::InvalidArgument(format!("mesh width must be positive, got {h}")));
        }
        Ok(LatticePolynomial { n, h, family, terms: BTreeMap::new() })
    }

    pub fn constant(n: usize, h: Rational, family: FamilySign, value: CliffordElement) -> Result<Self> {
        let mut p = Self::new(n, h, family)?;
        p.add_term(MultiIndex::zero(n), value);
        Ok(p)
    }

    /// A single term `(mh)^{(α)} a`.
    pub fn monomial(
        n: usize,
        h: Rational,
        family: FamilySign,
        alpha: MultiIndex,
        coeff: CliffordElement,
    ) -> Result<Self> {
        let mut p = Self::new(n, h, family)?;
        if alpha.dim() != n || coeff.dim() != n {
            return Err(Error::DimensionMismatch { left: n, right: alpha.dim().max(coeff.dim()) });
        }
        p.add_term(alpha, coeff);
        Ok(p)
    }

    /// Empty polynomial over the same context.
    pub fn zero_like(&self) -> Self {
        LatticePolynomial { n: self.n, h: self.h.clone(), family: self.family, terms: BTreeMap::new() }
    }

    /// The constant `value` over the same context.
    pub fn constant_like(&self, value: CliffordElement) -> Self {
        let mut p = self.zero_like();
        p.add_term(MultiIndex::zero(self.n), value);
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> &Rational {
        &self.h
    }

    pub fn family(&self) -> FamilySign {
        self.family
    }

    /// The same coefficients reinterpreted in another family (used by the mixed quaternionic layer).
    pub fn with_family(&self, family: FamilySign) -> Self {
        LatticePolynomial { family, ..self.clone() }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &CliffordElement)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, alpha: &MultiIndex) -> CliffordElement {
        self.terms.get(alpha).cloned().unwrap_or_else(|| CliffordElement::zero(self.n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|α|` among stored terms; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(MultiIndex::degree).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(MultiIndex::degree).min()
    }

    /// Homogeneous degree if every term has the same `|α|`. The zero polynomial is
    /// homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.degree()?;
        (self.min_degree() == Some(d)).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn add_term(&mut self, alpha: MultiIndex, coeff: CliffordElement) {
        assert_eq!(alpha.dim(), self.n, "multi-index dimension mismatch");
        assert_eq!(coeff.dim(), self.n, "coefficient dimension mismatch");
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(alpha) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn same_context(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        if self.h != other.h {
            return Err(Error::ContextMismatch(format!("mesh {} vs {}", self.h, other.h)));
        }
        if self.family != other.family {
            return Err(Error::ContextMismatch(format!("family {} vs {}", self.family, other.family)));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_context(other)?;
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        self.map_coefficients(|c| c.scale(factor))
    }

    /// `a · p`, multiplying every coefficient on the left.
    pub fn left_multiply(&self, a: &CliffordElement) -> Result<Self> {
        if a.dim() != self.n {
            return Err(Error::DimensionMismatch { left: a.dim(), right: self.n });
        }
        Ok(self.map_coefficients(|c| a * c))
    }

    /// `p · a`, multiplying every coefficient on the right.
    pub fn right_multiply(&self, a: &CliffordElement) -> Result<Self> {
        if a.dim() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: a.dim() });
        }
        Ok(self.map_coefficients(|c| c * a))
    }

    pub fn map_coefficients(&self, f: impl Fn(&CliffordElement) -> CliffordElement) -> Self {
        let mut out = self.zero_like();
        for (a, c) in &self.terms {
            out.add_term(a.clone(), f(c));
        }
        out
    }

    /// Coefficient-wise conjugation.
    pub fn conjugate(&self) -> Self {
        self.map_coefficients(CliffordElement::conjugate)
    }

    /// Terms with `|α| = k`.
    pub fn graded_component(&self, k: usize) -> Self {
        let mut out = self.zero_like();
        for (a, c) in self.terms.iter().filter(|(a, _)| a.degree() == k) {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    /// Terms with `|α| ≥ k`.
    pub fn truncate_below(&self, k: usize) -> Self {
        let mut out = self.zero_like();
        for (a, c) in self.terms.iter().filter(|(a, _)| a.degree() >= k) {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    /// Value at an arbitrary rational point.
    pub fn evaluate(&self, x: &[Rational]) -> Result<CliffordElement> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: x.len() });
        }
        let max: Vec<u32> = (1..=self.n).map(|i| self.terms.keys().map(|a| a.get(i)).max().unwrap_or(0)).collect();
        let powers: Vec<Vec<Rational>> = (0..self.n)
            .map(|i| {
                (0..=max[i] as usize).map(|s| factorial::factorial_power_eval(s, self.family, &self.h, &x[i])).collect()
            })
            .collect();
        let mut out = CliffordElement::zero(self.n);
        for (a, c) in &self.terms {
            let w: Rational = a.entries().iter().enumerate().map(|(i, &s)| powers[i][s as usize].clone()).product();
            if w.is_zero() {
                continue;
            }
            for (b, v) in c.terms() {
                out.add_assign_term(*b, v * &w);
            }
        }
        Ok(out)
    }

    /// Value at the lattice point `mh`.
    pub fn evaluate_lattice(&self, m: &[i64]) -> Result<CliffordElement> {
        let x: Vec<Rational> = m.iter().map(|&k| Rational::from_integer(BigInt::from(k)) * &self.h).collect();
        self.evaluate(&x)
    }

    /// `(Σ_i m_ih e_i) · p`.
    pub fn multiply_by_vector_variable(&self) -> Self {
        let mut out = self.zero_like();
        for i in 1..=self.n {
            let e = CliffordElement::generator(self.n, i);
            let xi = factorial::multiply_by_coordinate(self, i);
            for (a, c) in xi.terms() {
                out.add_term(a.clone(), &e * c);
            }
        }
        out
    }

    /// `|mh|² · p = Σ_i (m_ih)² p`.
    pub fn multiply_by_norm_squared(&self) -> Self {
        let mut out = self.zero_like();
        for i in 1..=self.n {
            let once = factorial::multiply_by_coordinate(self, i);
            out = &out + &factorial::multiply_by_coordinate(&once, i);
        }
        out
    }

    /// Coefficients along every basis element of `basis`; fails if a term lies outside it.
    pub fn coordinates(&self, basis: &GradedComponentBasis) -> Result<Vec<Rational>> {
        basis.coordinates(self)
    }

    /// Rewrites the polynomial in ordinary monomials `(mh)^β`.
    pub fn to_monomial(&self) -> Result<MonomialPolynomial> {
        let mut out = MonomialPolynomial::new(self.n);
        for (a, c) in &self.terms {
            for (b, w) in factorial::factorial_to_monomial(a, self.family, &self.h)? {
                out.add_term(b, c.scale(&w));
            }
        }
        Ok(out)
    }
}

impl Add for &LatticePolynomial {
    type Output = LatticePolynomial;
    /// # Panics
    ///
    /// Panics on a context mismatch; see [`LatticePolynomial::checked_add`].
    fn add(self, rhs: &LatticePolynomial) -> LatticePolynomial {
        self.checked_add(rhs).expect("polynomial context mismatch")
    }
}

impl Sub for &LatticePolynomial {
    type Output = LatticePolynomial;
    fn sub(self, rhs: &LatticePolynomial) -> LatticePolynomial {
        self.checked_sub(rhs).expect("polynomial context mismatch")
    }
}

impl Neg for &LatticePolynomial {
    type Output = LatticePolynomial;
    fn neg(self) -> LatticePolynomial {
        self.map_coefficients(|c| -c)
    }
}

/// Ordered coordinates `(α, blade)` of a direct sum of homogeneous spaces `Π_k`.
///
/// Order: degree ascending, then `α` lexicographically, then blade bitset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComponentBasis {
    n: usize,
    h: Rational,
    family: FamilySign,
    degrees: Vec<usize>,
    blades: Vec<Blade>,
    elements: Vec<(MultiIndex, Blade)>,
    index: BTreeMap<(MultiIndex, Blade), usize>,
}

impl GradedComponentBasis {
    /// Full Clifford-valued `Π_k`.
    pub fn homogeneous(n: usize, h: &Rational, family: FamilySign, k: usize) -> Self {
        Self::with_blades(n, h, family, vec![k], Blade::all(n))
    }

    /// `Π_0 ⊕ ⋯ ⊕ Π_k`.
    pub fn up_to(n: usize, h: &Rational, family: FamilySign, k: usize) -> Self {
        Self::with_blades(n, h, family, (0..=k).collect(), Blade::all(n))
    }

    /// Restricted to the given coefficient blades (e.g. the four quaternion slots).
    pub fn with_blades(n: usize, h: &Rational, family: FamilySign, degrees: Vec<usize>, blades: Vec<Blade>) -> Self {
        let mut degrees = degrees;
        degrees.sort_unstable();
        degrees.dedup();
        let mut blades = blades;
        blades.sort();
        blades.dedup();
        let mut elements = Vec::new();
        for &k in &degrees {
            for alpha in MultiIndex::all_of_degree(n, k) {
                for &b in &blades {
                    elements.push((alpha.clone(), b));
                }
            }
        }
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        GradedComponentBasis { n, h: h.clone(), family, degrees, blades, elements, index }
    }

    /// Same shape over the context of `p`.
    pub fn like(p: &LatticePolynomial, degrees: Vec<usize>, blades: Vec<Blade>) -> Self {
        Self::with_blades(p.n, &p.h, p.family, degrees, blades)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h(&self) -> &Rational {
        &self.h
    }

    pub fn family(&self) -> FamilySign {
        self.family
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn blades(&self) -> &[Blade] {
        &self.blades
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[(MultiIndex, Blade)] {
        &self.elements
    }

    pub fn index_of(&self, alpha: &MultiIndex, blade: Blade) -> Option<usize> {
        self.index.get(&(alpha.clone(), blade)).copied()
    }

    pub fn zero_polynomial(&self) -> LatticePolynomial {
        LatticePolynomial { n: self.n, h: self.h.clone(), family: self.family, terms: BTreeMap::new() }
    }

    /// The `i`-th basis polynomial `(mh)^{(α)} e_A`.
    pub fn element(&self, i: usize) -> LatticePolynomial {
        let (alpha, blade) = &self.elements[i];
        let mut p = self.zero_polynomial();
        p.add_term(alpha.clone(), CliffordElement::blade(self.n, *blade, Rational::one()));
        p
    }

    pub fn reconstruct(&self, coords: &[Rational]) -> LatticePolynomial {
        assert_eq!(coords.len(), self.len(), "coordinate vector length mismatch");
        let mut p = self.zero_polynomial();
        for ((alpha, blade), v) in self.elements.iter().zip(coords) {
            if !v.is_zero() {
                p.add_term(alpha.clone(), CliffordElement::blade(self.n, *blade, v.clone()));
            }
        }
        p
    }

    pub fn coordinates(&self, p: &LatticePolynomial) -> Result<Vec<Rational>> {
        if p.n != self.n || p.h != self.h || p.family != self.family {
            return Err(Error::ContextMismatch(format!(
                "basis over (n={}, h={}, family {}) cannot hold a polynomial over (n={}, h={}, family {})",
                self.n, self.h, self.family, p.n, p.h, p.family
            )));
        }
        let mut out = vec![Rational::zero(); self.len()];
        for (alpha, c) in p.terms() {
            if !self.degrees.contains(&alpha.degree()) {
                return Err(Error::NotHomogeneous(alpha.degree()));
            }
            for (b, v) in c.terms() {
                let i = self.index_of(alpha, *b).ok_or_else(|| Error::ClosureViolation {
                    basis: format!("degrees {:?}", self.degrees),
                    term: format!("{} {}", alpha, b),
                })?;
                out[i] = v.clone();
            }
        }
        Ok(out)
    }
}

/// `Σ_β (mh)^β b_β` in ordinary powers of the coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPolynomial {
    n: usize,
    terms: BTreeMap<MultiIndex, CliffordElement>,
}

impl MonomialPolynomial {
    pub fn new(n: usize) -> Self {
        MonomialPolynomial { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &CliffordElement)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, beta: MultiIndex, coeff: CliffordElement) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(beta).or_insert_with(|| CliffordElement::zero(coeff.dim()));
        *entry = &*entry + &coeff;
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<CliffordElement> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: x.len() });
        }
        let mut out = CliffordElement::zero(self.n);
        for (b, c) in &self.terms {
            let w: Rational = b.entries().iter().zip(x).map(|(&e, xi)| rational::pow(xi, e as usize)).product();
            out = &out + &c.scale(&w);
        }
        Ok(out)
    }

    /// Exact translation `p(x + t e_axis)` by the binomial theorem.
    pub fn translate(&self, axis: usize, t: &Rational) -> Self {
        let mut out = MonomialPolynomial::new(self.n);
        for (b, c) in &self.terms {
            let s = b.get(axis) as usize;
            for j in 0..=s {
                let w = Rational::from_integer(rational::binomial(s, j)) * rational::pow(t, s - j);
                out.add_term(b.with_axis(axis, j as u32), c.scale(&w));
            }
        }
        out
    }

    /// Rewrites in the factorial basis of the given family and mesh.
    pub fn to_lattice(&self, h: &Rational, family: FamilySign) -> Result<LatticePolynomial> {
        let mut out = LatticePolynomial::new(self.n, h.clone(), family)?;
        for (b, c) in &self.terms {
            for (a, w) in factorial::monomial_to_factorial(b, family, h)? {
                out.add_term(a, c.scale(&w));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ctx(n: usize) -> LatticePolynomial {
        LatticePolynomial::new(n, int(1), FamilySign::Minus).unwrap()
    }

    fn mono(n: usize, alpha: &[u32], blade: u32, c: Rational) -> LatticePolynomial {
        let mut p = ctx(n);
        p.add_term(MultiIndex::new(alpha.to_vec()), CliffordElement::blade(n, Blade::from_bits(blade), c));
        p
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(mono(1, &[2], 0, int(1)).evaluate(&[int(3)]).unwrap(), CliffordElement::scalar(1, int(6)));
        assert!(ctx(2).evaluate(&[int(1), int(2)]).unwrap().is_zero());
        let p = mono(2, &[1, 1], 0b11, int(1));
        assert_eq!(p.evaluate(&[int(2), int(5)]).unwrap(), CliffordElement::blade(2, Blade::from_bits(0b11), int(10)));
    }

    #[test]
    fn arithmetic_examples() {
        let p = mono(2, &[1, 0], 1, rat(2, 3));
        assert!((&p + &p.scale(&int(-1))).is_zero());
        assert!(p.scale(&int(0)).is_zero());
        let e1 = CliffordElement::generator(1, 1);
        let q = mono(1, &[1], 1, int(1)).left_multiply(&e1).unwrap();
        assert_eq!(q, mono(1, &[1], 0, int(-1)));
        let other = LatticePolynomial::new(2, rat(1, 2), FamilySign::Minus).unwrap();
        assert!(matches!(p.checked_add(&other), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn vector_variable_examples() {
        let one = ctx(2).constant_like(CliffordElement::one(2));
        let v = one.multiply_by_vector_variable();
        assert_eq!(v, &mono(2, &[1, 0], 1, int(1)) + &mono(2, &[0, 1], 2, int(1)));
        let x = mono(1, &[1], 0, int(1)).multiply_by_vector_variable();
        assert_eq!(x, &mono(1, &[2], 1, int(1)) + &mono(1, &[1], 1, int(1)));
        assert_eq!(x.graded_component(1), mono(1, &[1], 1, int(1)));
        let sq = v.multiply_by_vector_variable();
        assert_eq!(sq.evaluate(&[int(1), int(1)]).unwrap(), CliffordElement::scalar(2, int(-2)));
    }

    #[test]
    fn basis_round_trip() {
        let b = GradedComponentBasis::homogeneous(2, &int(1), FamilySign::Minus, 2);
        assert_eq!(b.len(), 3 * 4);
        let p = &mono(2, &[2, 0], 0b10, int(3)) + &mono(2, &[1, 1], 0, rat(-1, 2));
        let c = b.coordinates(&p).unwrap();
        assert_eq!(b.reconstruct(&c), p);
        assert!(b.coordinates(&ctx(2)).unwrap().iter().all(Zero::is_zero));
        assert!(b.coordinates(&mono(2, &[1, 0], 0, int(1))).is_err());
    }

    #[test]
    fn monomial_round_trip_and_translation() {
        let p = &mono(2, &[2, 1], 0b01, rat(1, 3)) + &mono(2, &[0, 3], 0, int(2));
        let p = p.with_family(FamilySign::Plus);
        let m = p.to_monomial().unwrap();
        assert_eq!(m.to_lattice(p.h(), p.family()).unwrap(), p);
        let x = [rat(3, 2), int(-2)];
        assert_eq!(m.evaluate(&x).unwrap(), p.evaluate(&x).unwrap());
        let t = m.translate(1, &int(1));
        assert_eq!(t.evaluate(&[int(0), int(1)]).unwrap(), m.evaluate(&[int(1), int(1)]).unwrap());
    }
}
