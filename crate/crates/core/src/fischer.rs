//! The Fischer inner product and Fischer decompositions for `D_h^±`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::clifford::{Blade, MultiIndex};
use crate::decompose::{self, Decomposition, Problem};
use crate::error::{Error, Result};
use crate::factorial::{self, FamilySign, Sign};
use crate::linalg::Matrix;
use crate::operators::{self, assemble_matrix, OperatorMatrix};
use crate::polynomial::{GradedComponentBasis, LatticePolynomial};
use crate::rational::Rational;

pub use crate::decompose::Strategy;

pub type FischerResult = Decomposition;

/// `[P, Q]_h = Σ_α α! Sc(ā_α b_α)`, pairing equal multi-indices across all degrees.
pub fn inner_product(p: &LatticePolynomial, q: &LatticePolynomial) -> Result<Rational> {
    p.same_context(q)?;
    let mut total = Rational::zero();
    for (alpha, a) in p.terms() {
        let b = q.coefficient(alpha);
        if b.is_zero() {
            continue;
        }
        let sc = (&a.conjugate() * &b).scalar_part();
        total += sc * Rational::from_integer(alpha.factorial());
    }
    Ok(total)
}

/// `Sc(P̄(∂_h) Q)(0)`: each `(mh)^{(α)} a_α` in `P` becomes `ā_α ∂_h^α` with matched differences.
pub fn operator_inner_product(p: &LatticePolynomial, q: &LatticePolynomial) -> Result<Rational> {
    p.same_context(q)?;
    let origin = vec![Rational::zero(); p.n()];
    let mut total = Rational::zero();
    for (alpha, a) in p.terms() {
        let mut d = q.clone();
        for axis in 1..=p.n() {
            for _ in 0..alpha.get(axis) {
                d = factorial::matched_difference(&d, axis);
            }
        }
        let applied = d.left_multiply(&a.conjugate())?;
        total += applied.evaluate(&origin)?.scalar_part();
    }
    Ok(total)
}

/// A basis of `ℳ_k = Π_k ∩ ker D`, with the matrix it was computed from.
#[derive(Clone, Debug)]
pub struct MonogenicBasis {
    pub degree: usize,
    pub sign: Sign,
    pub elements: Vec<LatticePolynomial>,
    pub matrix: OperatorMatrix,
}

impl MonogenicBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }
}

/// Kernel of a map restricted to `Π_k` (with the given coefficient blades), via exact
/// elimination into the full lower-degree target `Π_0 ⊕ ⋯ ⊕ Π_k`.
pub fn kernel_of(
    op: impl Fn(&LatticePolynomial) -> Result<LatticePolynomial>,
    n: usize,
    h: &Rational,
    family: FamilySign,
    k: usize,
    blades: Vec<Blade>,
) -> Result<(Vec<LatticePolynomial>, OperatorMatrix)> {
    let source = GradedComponentBasis::with_blades(n, h, family, vec![k], blades.clone());
    let target = GradedComponentBasis::with_blades(n, h, family, (0..=k).collect(), blades);
    let m = assemble_matrix(op, &source, &target)?;
    Ok((m.kernel(), m))
}

pub fn monogenic_kernel(k: usize, n: usize, h: &Rational, family: FamilySign, sign: Sign) -> Result<MonogenicBasis> {
    let (elements, matrix) = kernel_of(|p| Ok(operators::dirac(p, sign)), n, h, family, k, Blade::all(n))?;
    Ok(MonogenicBasis { degree: k, sign, elements, matrix })
}

/// The decomposition problem for `D_h^±` with lifts by `(mh)`.
pub fn dirac_problem<'a>(
    n: usize,
    h: &Rational,
    family: FamilySign,
    sign: Sign,
    max_power: Option<usize>,
) -> Problem<'a> {
    let h2 = h.clone();
    Problem {
        n,
        h: h.clone(),
        family,
        blades: Blade::all(n),
        step: 1,
        kernel: Box::new(move |d| Ok(monogenic_kernel(d, n, &h2, family, sign)?.elements)),
        lift: Box::new(|p| Ok(p.multiply_by_vector_variable())),
        annihilator: Box::new(move |p| Ok(operators::dirac(p, sign))),
        max_power,
    }
}

/// Fischer decomposition of a homogeneous `P` with respect to the matched Dirac operator.
pub fn fischer_decompose(p: &LatticePolynomial, strategy: Strategy) -> Result<FischerResult> {
    let sign = p.family().matched_sign();
    decompose::decompose(&dirac_problem(p.n(), p.h(), p.family(), sign, None), p, strategy)
}

/// Gram blocks between `ℳ_k` and the lift `(mh)Π_{k−1}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrthogonalityCertificate {
    pub degree: usize,
    pub kernel_dim: usize,
    pub lift_dim: usize,
    /// Against the top-degree part of `(mh)·b`.
    pub top_gram_zero: bool,
    /// Against the full `(mh)·b`.
    pub literal_gram_zero: bool,
    pub top_gram: Vec<Vec<String>>,
}

pub fn orthogonality_certificate(
    k: usize,
    n: usize,
    h: &Rational,
    family: FamilySign,
) -> Result<OrthogonalityCertificate> {
    let kernel = monogenic_kernel(k, n, h, family, family.matched_sign())?;
    let lifts: Vec<(LatticePolynomial, LatticePolynomial)> = if k == 0 {
        Vec::new()
    } else {
        let lower = GradedComponentBasis::homogeneous(n, h, family, k - 1);
        (0..lower.len())
            .map(|i| {
                let l = lower.element(i).multiply_by_vector_variable();
                (l.graded_component(k), l)
            })
            .collect()
    };
    let mut top = Matrix::zeros(kernel.dim(), lifts.len());
    let mut literal_zero = true;
    for (i, m) in kernel.elements.iter().enumerate() {
        for (j, (t, l)) in lifts.iter().enumerate() {
            top.set(i, j, inner_product(m, t)?);
            literal_zero &= inner_product(m, l)?.is_zero();
        }
    }
    let top_gram = (0..top.rows()).map(|i| top.row(i).iter().map(ToString::to_string).collect()).collect();
    Ok(OrthogonalityCertificate {
        degree: k,
        kernel_dim: kernel.dim(),
        lift_dim: lifts.len(),
        top_gram_zero: top.is_zero(),
        literal_gram_zero: literal_zero,
        top_gram,
    })
}

/// `dim Π_k = C(k+n−1, n−1)·2ⁿ`.
pub fn homogeneous_dimension(n: usize, k: usize) -> usize {
    MultiIndex::all_of_degree(n, k).len() << n
}

/// Checks homogeneity and the matched family before a decomposition.
pub fn require_homogeneous(p: &LatticePolynomial) -> Result<usize> {
    match p.homogeneous_degree() {
        Some(k) => Ok(k),
        None if p.is_zero() => Ok(0),
        None => Err(Error::NotHomogeneous(p.degree().unwrap_or(0))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::CliffordElement;
    use crate::rational::{int, rat};

    fn mono(n: usize, alpha: &[u32], blade: u32, c: Rational) -> LatticePolynomial {
        LatticePolynomial::monomial(
            n,
            int(1),
            FamilySign::Minus,
            MultiIndex::new(alpha.to_vec()),
            CliffordElement::blade(n, Blade::from_bits(blade), c),
        )
        .unwrap()
    }

    #[test]
    fn inner_product_examples() {
        let p = mono(1, &[1], 1, int(1));
        assert_eq!(inner_product(&p, &p).unwrap(), int(1));
        let q = mono(1, &[2], 0, int(1));
        assert_eq!(inner_product(&q, &q).unwrap(), int(2));
        assert_eq!(inner_product(&p, &q).unwrap(), int(0));
        assert_eq!(operator_inner_product(&q, &q).unwrap(), int(2));
    }

    #[test]
    fn kernel_dimensions() {
        let k0 = monogenic_kernel(0, 2, &int(1), FamilySign::Minus, Sign::Plus).unwrap();
        assert_eq!(k0.dim(), 4);
        let k1 = monogenic_kernel(1, 2, &int(1), FamilySign::Minus, Sign::Plus).unwrap();
        assert_eq!(k1.dim(), 4);
        assert_eq!(k1.matrix.rank(), 4);
        // ½(m₁h e₀ + m₂h e₂e₁) = ½ m₁h − ½ m₂h e₁₂
        let m = &mono(2, &[1, 0], 0, rat(1, 2)) + &mono(2, &[0, 1], 0b11, rat(-1, 2));
        assert!(operators::dirac(&m, Sign::Plus).is_zero());
        let basis = GradedComponentBasis::homogeneous(2, &int(1), FamilySign::Minus, 1);
        let cols: Vec<_> = k1.elements.iter().map(|e| basis.coordinates(e).unwrap()).collect();
        let a = Matrix::from_columns(basis.len(), &cols);
        assert!(a.solve(&basis.coordinates(&m).unwrap()).is_some());
    }

    #[test]
    fn hand_checked_decomposition() {
        let p = mono(2, &[1, 0], 0, int(1));
        for strategy in [Strategy::Exact, Strategy::Graded] {
            let r = fischer_decompose(&p, strategy).unwrap();
            assert!(r.feasible && r.annihilated && r.residual.is_zero());
            let m1 = &mono(2, &[1, 0], 0, rat(1, 2)) + &mono(2, &[0, 1], 0b11, rat(-1, 2));
            assert_eq!(r.component(0).unwrap(), &m1);
            assert_eq!(r.component(1).unwrap(), &mono(2, &[0, 0], 0b01, rat(-1, 2)));
        }
    }

    #[test]
    fn orthogonality_small() {
        let c = orthogonality_certificate(1, 2, &int(1), FamilySign::Minus).unwrap();
        assert!(c.top_gram_zero);
        assert_eq!(c.kernel_dim, 4);
        let c0 = orthogonality_certificate(0, 2, &int(1), FamilySign::Minus).unwrap();
        assert_eq!(c0.lift_dim, 0);
    }
}
