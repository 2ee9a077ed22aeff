//! Difference operators acting exactly on [`LatticePolynomial`]s.
//!
//! A difference whose direction matches the polynomial's family acts diagonally on
//! factorial powers; the other direction is computed through the exact shift
//! identities `∂⁺ = (S₊ − I)/h` and `∂⁻ = (I − S₋)/h`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::clifford::{Blade, CliffordElement};
use crate::error::{Error, Result};
use crate::factorial::{self, FamilySign, Sign};
use crate::linalg::Matrix;
use crate::polynomial::{GradedComponentBasis, LatticePolynomial};
use crate::quaternion_dirac::QuaternionOperator;
use crate::rational::{self, Rational};

fn signed(sign: Sign) -> Rational {
    Rational::from_integer(BigInt::from(sign.value()))
}

/// `∂_h^{±i}`.
pub fn partial(p: &LatticePolynomial, axis: usize, sign: Sign) -> LatticePolynomial {
    if p.family().matched_sign() == sign {
        return factorial::matched_difference(p, axis);
    }
    let shifted = factorial::shift(p, axis, sign);
    (&shifted - p).scale(&(signed(sign) / p.h()))
}

pub fn shift(p: &LatticePolynomial, axis: usize, dir: Sign) -> LatticePolynomial {
    factorial::shift(p, axis, dir)
}

/// Multiplication by the scalar coordinate `m_ih`.
pub fn coordinate(p: &LatticePolynomial, axis: usize) -> LatticePolynomial {
    factorial::multiply_by_coordinate(p, axis)
}

fn left_generator(p: &LatticePolynomial, axis: usize) -> LatticePolynomial {
    let e = CliffordElement::generator(p.n(), axis);
    p.map_coefficients(|c| &e * c)
}

fn sum(p: &LatticePolynomial, parts: impl IntoIterator<Item = LatticePolynomial>) -> LatticePolynomial {
    parts.into_iter().fold(p.zero_like(), |acc, q| &acc + &q)
}

/// `D_h^± = Σ e_i ∂_h^{±i}`.
pub fn dirac(p: &LatticePolynomial, sign: Sign) -> LatticePolynomial {
    sum(p, (1..=p.n()).map(|i| left_generator(&partial(p, i, sign), i)))
}

/// `Δ_h = Σ ∂_h^{+i} ∂_h^{−i}`.
pub fn laplacian(p: &LatticePolynomial) -> LatticePolynomial {
    sum(p, (1..=p.n()).map(|i| partial(&partial(p, i, Sign::Minus), i, Sign::Plus)))
}

/// `E_h^± f = Σ (m_ih)(∂_h^{±i} f)(· ∓ he_i)`.
pub fn euler(p: &LatticePolynomial, sign: Sign) -> LatticePolynomial {
    sum(p, (1..=p.n()).map(|i| coordinate(&shift(&partial(p, i, sign), i, sign.opposite()), i)))
}

/// `L_{jk}^± = (m_jh)∂_h^{±k} − (m_kh)∂_h^{±j}`.
pub fn l_jk(p: &LatticePolynomial, sign: Sign, j: usize, k: usize) -> LatticePolynomial {
    &coordinate(&partial(p, k, sign), j) - &coordinate(&partial(p, j, sign), k)
}

/// `A_h^± = ∓h Σ (m_ih) ∂_h^{±i} ∂_h^{∓i}`.
pub fn op_a(p: &LatticePolynomial, sign: Sign) -> LatticePolynomial {
    let inner = sum(p, (1..=p.n()).map(|i| coordinate(&partial(&partial(p, i, sign.opposite()), i, sign), i)));
    inner.scale(&(-signed(sign) * p.h()))
}

/// `Γ_h^± = −Σ_{j<k} e_je_k L_{jk}^± − A_h^±`.
pub fn gamma(p: &LatticePolynomial, sign: Sign) -> LatticePolynomial {
    let n = p.n();
    let mut out = -&op_a(p, sign);
    for j in 1..=n {
        for k in j + 1..=n {
            let ejk = CliffordElement::blade(n, Blade::generator(j).product(Blade::generator(k)).1, Rational::one());
            let l = l_jk(p, sign, j, k);
            out = &out - &l.map_coefficients(|c| &ejk * c);
        }
    }
    out
}

/// `B_h^± = ±h Σ ∂_h^{±i}`.
pub fn op_b(p: &LatticePolynomial, sign: Sign) -> LatticePolynomial {
    sum(p, (1..=p.n()).map(|i| partial(p, i, sign))).scale(&(signed(sign) * p.h()))
}

/// `C_h^± f = Σ (m_ih) e_i f(· ∓ he_i)`.
pub fn op_c(p: &LatticePolynomial, sign: Sign) -> LatticePolynomial {
    sum(p, (1..=p.n()).map(|i| left_generator(&coordinate(&shift(p, i, sign.opposite()), i), i)))
}

/// `R_{h,r}^± = rI + E_h^± − A_h^±`.
pub fn op_r(p: &LatticePolynomial, sign: Sign, r: &Rational) -> LatticePolynomial {
    &(&p.scale(r) + &euler(p, sign)) - &op_a(p, sign)
}

/// `V_{h,r}^± = R_{h,r}^± + B_h^±/2`.
pub fn op_v(p: &LatticePolynomial, sign: Sign, r: &Rational) -> LatticePolynomial {
    &op_r(p, sign, r) + &op_b(p, sign).scale(&rational::rat(1, 2))
}

/// `(mh)·p`.
pub fn vector_variable(p: &LatticePolynomial) -> LatticePolynomial {
    p.multiply_by_vector_variable()
}

/// `J_{h,r}^± = (R_{h,r}^±)^{-1}` by graded back-substitution.
///
/// `R_{h,r}` acts as `(r + d)` on the top degree-`d` component plus terms of lower
/// degree, so dividing off the top component and recursing terminates.
pub fn invert_r(p: &LatticePolynomial, sign: Sign, r: &Rational) -> Result<LatticePolynomial> {
    if !r.is_positive() {
        return Err(Error::InvalidArgument(format!("R is only inverted for r > 0, got {r}")));
    }
    let mut q = p.zero_like();
    let mut residual = p.clone();
    while let Some(d) = residual.degree() {
        let top =
            residual.graded_component(d).scale(&(Rational::one() / (r + Rational::from_integer(BigInt::from(d)))));
        residual = &residual - &op_r(&top, sign, r);
        if residual.degree() >= Some(d) && !residual.graded_component(d).is_zero() {
            return Err(Error::InvalidArgument(format!("R is not triangular on degree {d} for this family and sign")));
        }
        q = &q + &top;
    }
    Ok(q)
}

/// The dilation integrand shared by the `J` and `W` summation formulas: the grid
/// `[0,1]_h^±`, the weight polynomial and the lattice point.
fn dilation_sum(
    p: &LatticePolynomial,
    sign: Sign,
    r: &Rational,
    point: &[i64],
    weight_offset: bool,
) -> Result<CliffordElement> {
    let n_steps = rational::reciprocal_integer(p.h())
        .ok_or_else(|| Error::InvalidArgument(format!("the dilation grid needs h = 1/N, got h = {}", p.h())))?;
    if point.len() != p.n() {
        return Err(Error::DimensionMismatch { left: p.n(), right: point.len() });
    }
    let degree = r - Rational::one();
    if !degree.is_integer() || degree.is_negative() {
        return Err(Error::InvalidArgument(format!(
            "the factorial weight needs r − 1 to be a non-negative integer, got r = {r}"
        )));
    }
    let degree: usize =
        degree.to_integer().try_into().map_err(|_| Error::InvalidArgument(format!("r = {r} is too large")))?;
    let h = p.h().clone();
    let s = signed(sign);
    let family = sign.matched_family();
    let x: Vec<Rational> = point.iter().map(|&m| Rational::from_integer(BigInt::from(m)) * &h).collect();
    // g(τ) = w(τ) f(τ·mh), with w(τ) = (τ ∓ h)^{(r−1)}_∓ for J and (τ)^{(r−1)}_∓ for W.
    let g = |tau: &Rational| -> Result<CliffordElement> {
        let base = if weight_offset { tau - &s * &h } else { tau.clone() };
        let w = factorial::factorial_power_eval(degree, family, &h, &base);
        let dilated: Vec<Rational> = x.iter().map(|xi| xi * tau).collect();
        Ok(p.evaluate(&dilated)?.scale(&w))
    };
    // d_h^± g(τ) = ∓(g(τ) − g(τ ± h))/h; the grid is [0,1)_h for + and (0,1]_h for −.
    let ticks: Vec<u64> = match sign {
        Sign::Plus => (0..n_steps).collect(),
        Sign::Minus => (1..=n_steps).collect(),
    };
    let mut total = CliffordElement::zero(p.n());
    for t in ticks {
        let tau = Rational::new(BigInt::from(t), BigInt::from(n_steps));
        let here = g(&tau)?;
        let there = g(&(&tau + &s * &h))?;
        let d = (&here - &there).scale(&(-&s / &h));
        total = &total + &d.scale(&h);
    }
    Ok(total)
}

/// The summation formula for `J_{h,r}^±` evaluated literally at the lattice point `point·h`.
pub fn eval_j_summation(p: &LatticePolynomial, sign: Sign, r: &Rational, point: &[i64]) -> Result<CliffordElement> {
    dilation_sum(p, sign, r, point, true)
}

/// The summation formula for `W_{h,r}^±` (same as `J` without the offset in the weight).
pub fn eval_w_summation(p: &LatticePolynomial, sign: Sign, r: &Rational, point: &[i64]) -> Result<CliffordElement> {
    dilation_sum(p, sign, r, point, false)
}

/// A named operator, as used by matrix assembly and the command line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DifferenceOperator {
    Identity,
    Partial {
        axis: usize,
        sign: Sign,
    },
    Shift {
        axis: usize,
        dir: Sign,
    },
    Dirac(Sign),
    Laplacian,
    Euler(Sign),
    Gamma(Sign),
    A(Sign),
    B(Sign),
    C(Sign),
    R(Sign, #[serde(with = "rational::serde_str")] Rational),
    V(Sign, #[serde(with = "rational::serde_str")] Rational),
    J(Sign, #[serde(with = "rational::serde_str")] Rational),
    Ljk {
        sign: Sign,
        j: usize,
        k: usize,
    },
    VectorVariable,
    /// A quaternionic operator on `n = 3`.
    Quaternion(QuaternionOperator),
    /// Applied right to left: `Compose([a, b])` is `a ∘ b`.
    Compose(Vec<DifferenceOperator>),
}

impl DifferenceOperator {
    pub fn apply(&self, p: &LatticePolynomial) -> Result<LatticePolynomial> {
        use DifferenceOperator::*;
        let check_axis = |a: usize| {
            if a == 0 || a > p.n() {
                Err(Error::InvalidArgument(format!("axis {a} exceeds dimension {}", p.n())))
            } else {
                Ok(())
            }
        };
        Ok(match self {
            Identity => p.clone(),
            Partial { axis, sign } => {
                check_axis(*axis)?;
                partial(p, *axis, *sign)
            }
            Shift { axis, dir } => {
                check_axis(*axis)?;
                shift(p, *axis, *dir)
            }
            Dirac(s) => dirac(p, *s),
            Laplacian => laplacian(p),
            Euler(s) => euler(p, *s),
            Gamma(s) => gamma(p, *s),
            A(s) => op_a(p, *s),
            B(s) => op_b(p, *s),
            C(s) => op_c(p, *s),
            R(s, r) => op_r(p, *s, r),
            V(s, r) => op_v(p, *s, r),
            J(s, r) => invert_r(p, *s, r)?,
            Ljk { sign, j, k } => {
                check_axis(*j)?;
                check_axis(*k)?;
                l_jk(p, *sign, *j, *k)
            }
            VectorVariable => vector_variable(p),
            Quaternion(q) => q.apply(p)?,
            Compose(ops) => {
                let mut q = p.clone();
                for op in ops.iter().rev() {
                    q = op.apply(&q)?;
                }
                q
            }
        })
    }

    /// The family on which this operator's differences act diagonally, if it has a direction.
    pub fn matched_family(&self) -> Option<FamilySign> {
        use DifferenceOperator::*;
        match self {
            Partial { sign, .. } | Dirac(sign) | Euler(sign) | Gamma(sign) | A(sign) | B(sign) | C(sign) => {
                Some(sign.matched_family())
            }
            R(s, _) | V(s, _) | J(s, _) => Some(s.matched_family()),
            Ljk { sign, .. } => Some(sign.matched_family()),
            Quaternion(q) => Some(q.matched_family()),
            _ => None,
        }
    }
}

fn sign_suffix(text: &str) -> Option<(&str, Sign)> {
    if let Some(stem) = text.strip_suffix('+') {
        Some((stem, Sign::Plus))
    } else {
        text.strip_suffix('-').map(|stem| (stem, Sign::Minus))
    }
}

impl FromStr for DifferenceOperator {
    type Err = Error;

    /// Names: `dh±`, `d±:i`, `lap`, `euler±`, `gamma±`, `A±`, `B±`, `C±`, `R±:r`, `V±:r`,
    /// `J±:r`, `shift:±i`, `L±:j,k`, `mh`, `id`, and on `n = 3` `D∓±`, `E∓±`, `Gamma∓±`,
    /// `div±`, `grad±`, `curl±`; `a.b` composes (`b` first).
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let unknown = || Error::UnknownOperator(text.to_string());
        if text.contains('.') {
            let ops = text.split('.').map(str::parse).collect::<Result<Vec<_>>>()?;
            return Ok(DifferenceOperator::Compose(ops));
        }
        match text {
            "lap" => return Ok(DifferenceOperator::Laplacian),
            "mh" => return Ok(DifferenceOperator::VectorVariable),
            "id" => return Ok(DifferenceOperator::Identity),
            _ => {}
        }
        if let Some(q) = QuaternionOperator::parse(text) {
            return Ok(DifferenceOperator::Quaternion(q));
        }
        let (head, arg) = match text.split_once(':') {
            Some((h, a)) => (h, Some(a.trim())),
            None => (text, None),
        };
        if head == "shift" {
            let arg = arg.ok_or_else(unknown)?;
            let (dir, axis) = arg.split_at(1);
            let dir = Sign::parse(dir).map_err(|_| unknown())?;
            let axis = axis.parse().map_err(|_| unknown())?;
            return Ok(DifferenceOperator::Shift { axis, dir });
        }
        let (stem, sign) = sign_suffix(head).ok_or_else(unknown)?;
        let rational_arg = || -> Result<Rational> { rational::parse_rational(arg.ok_or_else(unknown)?) };
        Ok(match (stem, arg) {
            ("dh", None) => DifferenceOperator::Dirac(sign),
            ("euler", None) => DifferenceOperator::Euler(sign),
            ("gamma", None) => DifferenceOperator::Gamma(sign),
            ("A", None) => DifferenceOperator::A(sign),
            ("B", None) => DifferenceOperator::B(sign),
            ("C", None) => DifferenceOperator::C(sign),
            ("R", Some(_)) => DifferenceOperator::R(sign, rational_arg()?),
            ("V", Some(_)) => DifferenceOperator::V(sign, rational_arg()?),
            ("J", Some(_)) => DifferenceOperator::J(sign, rational_arg()?),
            ("d", Some(a)) => DifferenceOperator::Partial { axis: a.parse().map_err(|_| unknown())?, sign },
            ("L", Some(a)) => {
                let (j, k) = a.split_once(',').ok_or_else(unknown)?;
                DifferenceOperator::Ljk {
                    sign,
                    j: j.trim().parse().map_err(|_| unknown())?,
                    k: k.trim().parse().map_err(|_| unknown())?,
                }
            }
            _ => return Err(unknown()),
        })
    }
}

impl fmt::Display for DifferenceOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DifferenceOperator::*;
        match self {
            Identity => write!(f, "id"),
            Partial { axis, sign } => write!(f, "d{sign}:{axis}"),
            Shift { axis, dir } => write!(f, "shift:{dir}{axis}"),
            Dirac(s) => write!(f, "dh{s}"),
            Laplacian => write!(f, "lap"),
            Euler(s) => write!(f, "euler{s}"),
            Gamma(s) => write!(f, "gamma{s}"),
            A(s) => write!(f, "A{s}"),
            B(s) => write!(f, "B{s}"),
            C(s) => write!(f, "C{s}"),
            R(s, r) => write!(f, "R{s}:{r}"),
            V(s, r) => write!(f, "V{s}:{r}"),
            J(s, r) => write!(f, "J{s}:{r}"),
            Ljk { sign, j, k } => write!(f, "L{sign}:{j},{k}"),
            VectorVariable => write!(f, "mh"),
            Quaternion(q) => write!(f, "{q}"),
            Compose(ops) => {
                let names: Vec<String> = ops.iter().map(ToString::to_string).collect();
                write!(f, "{}", names.join("."))
            }
        }
    }
}

/// Exact matrix of a linear map between two coordinate systems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix {
    pub source: GradedComponentBasis,
    pub target: GradedComponentBasis,
    pub matrix: Matrix,
}

impl OperatorMatrix {
    pub fn apply(&self, p: &LatticePolynomial) -> Result<LatticePolynomial> {
        let x = self.source.coordinates(p)?;
        Ok(self.target.reconstruct(&self.matrix.mul_vec(&x)))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Kernel basis as polynomials over the source.
    pub fn kernel(&self) -> Vec<LatticePolynomial> {
        self.matrix.nullspace().iter().map(|v| self.source.reconstruct(v)).collect()
    }
}

/// Columns are images of the source basis elements; any image term outside the
/// target span is reported with the offending basis element.
pub fn assemble_matrix(
    op: impl Fn(&LatticePolynomial) -> Result<LatticePolynomial>,
    source: &GradedComponentBasis,
    target: &GradedComponentBasis,
) -> Result<OperatorMatrix> {
    let mut columns = Vec::with_capacity(source.len());
    for i in 0..source.len() {
        let image = op(&source.element(i))?;
        let col = target.coordinates(&image).map_err(|e| {
            let (alpha, blade) = &source.elements()[i];
            let term = match e {
                Error::ClosureViolation { term, .. } => term,
                Error::NotHomogeneous(d) => format!("a term of degree {d}"),
                other => other.to_string(),
            };
            Error::ClosureViolation { basis: format!("{alpha} {blade}"), term }
        })?;
        columns.push(col);
    }
    Ok(OperatorMatrix {
        source: source.clone(),
        target: target.clone(),
        matrix: Matrix::from_columns(target.len(), &columns),
    })
}

/// Matrix of a named operator between full Clifford-valued graded spaces.
pub fn assemble_named(
    op: &DifferenceOperator,
    n: usize,
    h: &Rational,
    family: FamilySign,
    source_degrees: Vec<usize>,
    target_degrees: Vec<usize>,
) -> Result<OperatorMatrix> {
    let source = GradedComponentBasis::with_blades(n, h, family, source_degrees, Blade::all(n));
    let target = GradedComponentBasis::with_blades(n, h, family, target_degrees, Blade::all(n));
    assemble_matrix(|p| op.apply(p), &source, &target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::MultiIndex;
    use crate::rational::{int, rat};

    fn mono(n: usize, h: Rational, fam: FamilySign, alpha: &[u32], blade: u32, c: Rational) -> LatticePolynomial {
        LatticePolynomial::monomial(
            n,
            h,
            fam,
            MultiIndex::new(alpha.to_vec()),
            CliffordElement::blade(n, Blade::from_bits(blade), c),
        )
        .unwrap()
    }

    fn minus(n: usize, alpha: &[u32], blade: u32, c: i64) -> LatticePolynomial {
        mono(n, int(1), FamilySign::Minus, alpha, blade, int(c))
    }

    #[test]
    fn matched_and_mismatched_partials() {
        let p = minus(1, &[2], 0, 1);
        assert_eq!(partial(&p, 1, Sign::Plus), minus(1, &[1], 0, 2));
        assert!(partial(&minus(1, &[0], 0, 5), 1, Sign::Plus).is_zero());
        // ∂⁻ x^{(2)} = 2(x − h) = 2x^{(1)} − 2h
        let h = rat(1, 3);
        let p = mono(1, h.clone(), FamilySign::Minus, &[2], 0, int(1));
        let expect = &mono(1, h.clone(), FamilySign::Minus, &[1], 0, int(2))
            - &mono(1, h.clone(), FamilySign::Minus, &[0], 0, &h * int(2));
        assert_eq!(partial(&p, 1, Sign::Minus), expect);
    }

    #[test]
    fn shift_examples() {
        let c = minus(1, &[0], 0, 4);
        assert_eq!(shift(&c, 1, Sign::Plus), c);
        let x = minus(1, &[1], 0, 1);
        assert_eq!(shift(&x, 1, Sign::Plus), &x + &minus(1, &[0], 0, 1));
        let sq = shift(&minus(1, &[2], 0, 1), 1, Sign::Minus);
        assert_eq!(sq.evaluate(&[int(3)]).unwrap(), CliffordElement::scalar(1, int(2)));
    }

    #[test]
    fn dirac_euler_and_friends() {
        assert_eq!(dirac(&minus(2, &[1, 0], 0, 1), Sign::Plus), minus(2, &[0, 0], 1, 1));
        let p = minus(1, &[2], 0, 1);
        assert_eq!(euler(&p, Sign::Plus), p.scale(&int(2)));
        assert!(op_a(&minus(1, &[1], 0, 1), Sign::Plus).is_zero());
        let h = rat(1, 2);
        let p = mono(1, h.clone(), FamilySign::Minus, &[2], 0, int(1));
        let expect = mono(1, h.clone(), FamilySign::Minus, &[1], 0, -&h * int(2));
        assert_eq!(op_a(&p, Sign::Plus), expect);
    }

    #[test]
    fn vector_variable_dirac_identity() {
        let p = &minus(2, &[2, 1], 0b01, 3) + &minus(2, &[0, 1], 0b11, -2);
        for sign in [Sign::Plus, Sign::Minus] {
            let lhs = vector_variable(&dirac(&p, sign));
            let rhs = -&(&euler(&p, sign) + &gamma(&p, sign));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn inverse_of_r() {
        let r = int(2);
        let x = minus(1, &[1], 0, 1);
        assert_eq!(invert_r(&x, Sign::Plus, &r).unwrap(), x.scale(&rat(1, 3)));
        let c = minus(2, &[0, 0], 0b10, 7);
        assert_eq!(invert_r(&c, Sign::Plus, &int(1)).unwrap(), c);
        let p = &minus(2, &[3, 1], 0b01, 3) + &minus(2, &[0, 2], 0b11, -2);
        for sign in [Sign::Plus, Sign::Minus] {
            let q = invert_r(&p, sign, &r).unwrap();
            assert_eq!(op_r(&q, sign, &r), p);
            assert_eq!(invert_r(&op_r(&p, sign, &r), sign, &r).unwrap(), p);
        }
        assert!(invert_r(&p, Sign::Plus, &int(0)).is_err());
    }

    #[test]
    fn summation_formula_telescopes() {
        let h = rat(1, 4);
        let x = mono(1, h.clone(), FamilySign::Minus, &[1], 0, int(1));
        let literal = eval_j_summation(&x, Sign::Plus, &int(1), &[4]).unwrap();
        assert_eq!(literal, CliffordElement::scalar(1, int(1)));
        let inverse = invert_r(&x, Sign::Plus, &int(1)).unwrap().evaluate_lattice(&[4]).unwrap();
        assert_eq!(inverse, CliffordElement::scalar(1, rat(1, 2)));
        let zero = x.zero_like();
        assert!(eval_j_summation(&zero, Sign::Plus, &int(1), &[3]).unwrap().is_zero());
        let coarse = mono(1, rat(2, 3), FamilySign::Minus, &[1], 0, int(1));
        assert!(eval_j_summation(&coarse, Sign::Plus, &int(1), &[1]).is_err());
    }

    #[test]
    fn operator_names_round_trip() {
        for name in [
            "dh+", "dh-", "lap", "euler+", "gamma-", "A+", "B-", "C+", "R+:3/2", "V-:1", "J+:2", "shift:+1", "L+:1,2",
            "d-:2", "mh", "dh+.mh", "D-+", "Gamma+-", "curl-", "D+-.E-+",
        ] {
            let op: DifferenceOperator = name.parse().unwrap();
            assert_eq!(op.to_string(), name);
        }
        assert!(matches!("foo+".parse::<DifferenceOperator>(), Err(Error::UnknownOperator(_))));
    }

    #[test]
    fn matrix_assembly() {
        let m = assemble_named(&DifferenceOperator::Dirac(Sign::Plus), 2, &int(1), FamilySign::Minus, vec![1], vec![0])
            .unwrap();
        assert_eq!((m.matrix.rows(), m.matrix.cols()), (4, 8));
        assert_eq!(m.rank(), 4);
        let id =
            assemble_named(&DifferenceOperator::Identity, 2, &int(1), FamilySign::Minus, vec![2], vec![2]).unwrap();
        assert_eq!(id.matrix, Matrix::identity(12));
        let lap =
            assemble_named(&DifferenceOperator::Laplacian, 1, &int(1), FamilySign::Minus, vec![2], vec![0]).unwrap();
        assert_eq!(lap.matrix.get(0, 0), &int(2));
        let bad = assemble_named(
            &DifferenceOperator::Partial { axis: 1, sign: Sign::Minus },
            1,
            &int(1),
            FamilySign::Minus,
            vec![2],
            vec![1],
        );
        assert!(matches!(bad, Err(Error::ClosureViolation { .. })));
    }
}
