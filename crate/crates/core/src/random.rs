//! Seeded generators for random exact test data.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::{Blade, CliffordElement, MultiIndex};
use crate::factorial::FamilySign;
use crate::polynomial::LatticePolynomial;
use crate::rational::{rat, Rational};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mixes a seed with a label so that independent streams do not overlap.
pub fn derive_seed(seed: u64, label: &str) -> u64 {
    // FNV-1a over the label, folded into the seed.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    for b in label.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// A nonzero rational with numerator in ±1..=5 and denominator in 1..=3.
pub fn nonzero_rational(rng: &mut TestRng) -> Rational {
    let mut num: i64 = rng.gen_range(1..=5);
    if rng.gen_bool(0.5) {
        num = -num;
    }
    rat(num, rng.gen_range(1..=3))
}

pub fn clifford(rng: &mut TestRng, n: usize, blades: &[Blade], max_terms: usize) -> CliffordElement {
    let count = rng.gen_range(1..=max_terms.max(1));
    let mut out = CliffordElement::zero(n);
    for _ in 0..count {
        let b = *blades.choose(rng).expect("at least one blade");
        out.add_assign_term(b, nonzero_rational(rng));
    }
    out
}

pub fn multi_index(rng: &mut TestRng, n: usize, degree: usize) -> MultiIndex {
    let mut entries = vec![0u32; n];
    for _ in 0..degree {
        entries[rng.gen_range(0..n)] += 1;
    }
    MultiIndex::new(entries)
}

/// Parameters for random polynomials.
#[derive(Clone, Debug)]
pub struct PolySpec {
    pub n: usize,
    pub h: Rational,
    pub family: FamilySign,
    pub blades: Vec<Blade>,
    pub terms: usize,
}

impl PolySpec {
    pub fn new(n: usize, h: Rational, family: FamilySign) -> Self {
        PolySpec { n, h, family, blades: Blade::all(n), terms: 3 }
    }

    pub fn blades(mut self, blades: Vec<Blade>) -> Self {
        self.blades = blades;
        self
    }

    pub fn terms(mut self, terms: usize) -> Self {
        self.terms = terms;
        self
    }
}

/// Random polynomial of degree at most `max_degree`, never zero.
pub fn polynomial(rng: &mut TestRng, spec: &PolySpec, max_degree: usize) -> LatticePolynomial {
    loop {
        let mut p = LatticePolynomial::new(spec.n, spec.h.clone(), spec.family).expect("valid context");
        for _ in 0..rng.gen_range(1..=spec.terms.max(1)) {
            let d = rng.gen_range(0..=max_degree);
            p.add_term(multi_index(rng, spec.n, d), clifford(rng, spec.n, &spec.blades, 2));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random nonzero polynomial homogeneous of degree `k`.
pub fn homogeneous(rng: &mut TestRng, spec: &PolySpec, k: usize) -> LatticePolynomial {
    loop {
        let mut p = LatticePolynomial::new(spec.n, spec.h.clone(), spec.family).expect("valid context");
        for _ in 0..rng.gen_range(1..=spec.terms.max(1)) {
            p.add_term(multi_index(rng, spec.n, k), clifford(rng, spec.n, &spec.blades, 2));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random lattice point with coordinates in `-radius..=radius`.
pub fn lattice_point(rng: &mut TestRng, n: usize, radius: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-radius..=radius)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn deterministic_for_a_seed() {
        let spec = PolySpec::new(2, int(1), FamilySign::Minus);
        let a = polynomial(&mut rng(7), &spec, 3);
        let b = polynomial(&mut rng(7), &spec, 3);
        assert_eq!(a, b);
        let h = homogeneous(&mut rng(1), &spec, 3);
        assert_eq!(h.homogeneous_degree(), Some(3));
        assert_ne!(derive_seed(0, "a"), derive_seed(0, "b"));
    }
}
