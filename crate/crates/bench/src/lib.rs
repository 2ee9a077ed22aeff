//! Fixtures shared by the benchmarks.

use dcliff::random::{self, PolySpec};
use dcliff::rational::rat;
use dcliff::{FamilySign, LatticePolynomial, QuaternionLatticePolynomial};

/// A fixed random homogeneous polynomial of degree `k` in `n` variables, `h = 1/2`.
pub fn homogeneous(n: usize, k: usize) -> LatticePolynomial {
    let spec = PolySpec::new(n, rat(1, 2), FamilySign::Minus).terms(6);
    random::homogeneous(&mut random::rng(42), &spec, k)
}

/// A fixed quaternion polynomial of degree at most `k` on `h = 1/2`.
pub fn quaternion(k: usize, family: FamilySign) -> QuaternionLatticePolynomial {
    let spec =
        PolySpec::new(3, rat(1, 2), family).blades(dcliff::quaternion_dirac::QUATERNION_BLADES.to_vec()).terms(6);
    QuaternionLatticePolynomial::new(random::polynomial(&mut random::rng(43), &spec, k))
        .expect("quaternion blades only")
}
