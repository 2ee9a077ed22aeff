//! Quaternion-valued lattice polynomials on `ℝ³_h` and the mixed difference Dirac
//! operators `D^{−+}`, `D^{+−}`.
//!
//! A quaternion polynomial is stored as an `n = 3` [`LatticePolynomial`] whose
//! coefficients only use the blades `e0, e1, e2` and the generator `e3`; the
//! Clifford product is never used on them. All products go through the Hamilton
//! table below.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::clifford::{Blade, CliffordElement};
use crate::decompose::{self, Decomposition, Problem, Strategy};
use crate::error::{Error, Result};
use crate::factorial::{FamilySign, Sign};
use crate::fischer::kernel_of;
use crate::linalg::Matrix;
use crate::operators::{self, OperatorMatrix};
use crate::polynomial::{GradedComponentBasis, LatticePolynomial};
use crate::quaternion::Quaternion;
use crate::rational::Rational;

/// Storage blades of the four quaternion slots.
pub const QUATERNION_BLADES: [Blade; 4] =
    [Blade::SCALAR, Blade::from_bits(0b001), Blade::from_bits(0b010), Blade::from_bits(0b100)];

fn quaternion_blades() -> Vec<Blade> {
    QUATERNION_BLADES.to_vec()
}

/// `e_a e_b = sign · e_c` for quaternion units `0..=3`.
pub const fn unit_product(a: usize, b: usize) -> (i8, usize) {
    match (a, b) {
        (0, b) => (1, b),
        (a, 0) => (1, a),
        (a, b) if a == b => (-1, 0),
        (1, 2) => (1, 3),
        (2, 3) => (1, 1),
        (3, 1) => (1, 2),
        (2, 1) => (-1, 3),
        (3, 2) => (-1, 1),
        _ => (-1, 2),
    }
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `f = f⁰e₀ + f¹e₁ + f²e₂ + f³e₃` with scalar lattice polynomial components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QuaternionLatticePolynomial {
    inner: LatticePolynomial,
}

impl QuaternionLatticePolynomial {
    pub fn new(inner: LatticePolynomial) -> Result<Self> {
        if inner.n() != 3 {
            return Err(Error::InvalidArgument(format!(
                "quaternion polynomials live on a 3-dimensional lattice, got n = {}",
                inner.n()
            )));
        }
        for (alpha, c) in inner.terms() {
            for (b, _) in c.terms() {
                if !QUATERNION_BLADES.contains(b) {
                    return Err(Error::InvalidArgument(format!("term {alpha} {b} is not one of e0, e1, e2, e3")));
                }
            }
        }
        Ok(QuaternionLatticePolynomial { inner })
    }

    pub fn zero(h: &Rational, family: FamilySign) -> Result<Self> {
        Ok(QuaternionLatticePolynomial { inner: LatticePolynomial::new(3, h.clone(), family)? })
    }

    /// From four scalar-valued polynomials over the same context.
    pub fn from_components(components: &[LatticePolynomial; 4]) -> Result<Self> {
        let first = &components[0];
        let mut inner = first.zero_like();
        for (slot, c) in components.iter().enumerate() {
            c.same_context(first)?;
            if c.n() != 3 {
                return Err(Error::DimensionMismatch { left: c.n(), right: 3 });
            }
            for (alpha, v) in c.terms() {
                let s = v.scalar_part();
                if v.terms().any(|(b, _)| *b != Blade::SCALAR) {
                    return Err(Error::InvalidArgument(format!("component {slot} is not scalar-valued")));
                }
                inner.add_term(alpha.clone(), CliffordElement::blade(3, QUATERNION_BLADES[slot], s));
            }
        }
        Self::new(inner)
    }

    fn assemble(&self, components: [LatticePolynomial; 4]) -> Self {
        Self::from_components(&components).expect("components share the context")
    }

    /// The scalar polynomial `f^slot`.
    pub fn component(&self, slot: usize) -> LatticePolynomial {
        let blade = QUATERNION_BLADES[slot];
        let mut out = self.inner.zero_like();
        for (alpha, c) in self.inner.terms() {
            let v = c.coefficient(blade);
            if !v.is_zero() {
                out.add_term(alpha.clone(), CliffordElement::scalar(3, v));
            }
        }
        out
    }

    pub fn components(&self) -> [LatticePolynomial; 4] {
        std::array::from_fn(|i| self.component(i))
    }

    pub fn scalar_part(&self) -> LatticePolynomial {
        self.component(0)
    }

    /// `Vec f = f¹e₁ + f²e₂ + f³e₃`.
    pub fn vector_part(&self) -> Self {
        let mut c = self.components();
        c[0] = c[0].zero_like();
        self.assemble(c)
    }

    pub fn as_polynomial(&self) -> &LatticePolynomial {
        &self.inner
    }

    pub fn into_polynomial(self) -> LatticePolynomial {
        self.inner
    }

    pub fn h(&self) -> &Rational {
        self.inner.h()
    }

    pub fn family(&self) -> FamilySign {
        self.inner.family()
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn homogeneous_degree(&self) -> Option<usize> {
        self.inner.homogeneous_degree()
    }

    pub fn map_components(&self, f: impl Fn(usize, &LatticePolynomial) -> LatticePolynomial) -> Self {
        let c = self.components();
        self.assemble(std::array::from_fn(|i| f(i, &c[i])))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QuaternionLatticePolynomial { inner: self.inner.scale(c) }
    }

    /// `(mh) f` under the Hamilton product, `x = Σ m_ih e_i`.
    pub fn multiply_by_variable(&self) -> Self {
        let c = self.components();
        let mut out: [LatticePolynomial; 4] = std::array::from_fn(|_| self.inner.zero_like());
        for j in 1..=3 {
            for (slot, f) in c.iter().enumerate() {
                let (sign, target) = unit_product(j, slot);
                let term = operators::coordinate(f, j).scale(&int(sign.into()));
                out[target] = &out[target] + &term;
            }
        }
        self.assemble(out)
    }

    /// `|mh|² f`.
    pub fn multiply_by_norm_squared(&self) -> Self {
        QuaternionLatticePolynomial { inner: self.inner.multiply_by_norm_squared() }
    }

    pub fn evaluate(&self, x: &[Rational]) -> Result<Quaternion> {
        Quaternion::from_clifford(&self.inner.evaluate(x)?)
    }
}

impl std::ops::Add for &QuaternionLatticePolynomial {
    type Output = QuaternionLatticePolynomial;
    fn add(self, rhs: &QuaternionLatticePolynomial) -> QuaternionLatticePolynomial {
        QuaternionLatticePolynomial { inner: &self.inner + &rhs.inner }
    }
}

impl std::ops::Sub for &QuaternionLatticePolynomial {
    type Output = QuaternionLatticePolynomial;
    fn sub(self, rhs: &QuaternionLatticePolynomial) -> QuaternionLatticePolynomial {
        QuaternionLatticePolynomial { inner: &self.inner - &rhs.inner }
    }
}

impl std::ops::Neg for &QuaternionLatticePolynomial {
    type Output = QuaternionLatticePolynomial;
    fn neg(self) -> QuaternionLatticePolynomial {
        QuaternionLatticePolynomial { inner: -&self.inner }
    }
}

impl fmt::Display for QuaternionLatticePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::io::print_polynomial(&self.inner))
    }
}

/// `D^{−+}` (divergence and gradient backward, curl forward) or `D^{+−}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MixedVariant {
    #[serde(rename = "-+")]
    MinusPlus,
    #[serde(rename = "+-")]
    PlusMinus,
}

impl MixedVariant {
    pub const ALL: [MixedVariant; 2] = [MixedVariant::MinusPlus, MixedVariant::PlusMinus];

    /// Direction of the divergence and gradient blocks.
    pub fn outer(self) -> Sign {
        match self {
            MixedVariant::MinusPlus => Sign::Minus,
            MixedVariant::PlusMinus => Sign::Plus,
        }
    }

    /// Direction of the curl block.
    pub fn inner(self) -> Sign {
        self.outer().opposite()
    }

    /// The family on which the scalar row acts diagonally.
    pub fn family(self) -> FamilySign {
        self.outer().matched_family()
    }

    pub fn opposite(self) -> Self {
        match self {
            MixedVariant::MinusPlus => MixedVariant::PlusMinus,
            MixedVariant::PlusMinus => MixedVariant::MinusPlus,
        }
    }
}

impl fmt::Display for MixedVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MixedVariant::MinusPlus => "-+",
            MixedVariant::PlusMinus => "+-",
        })
    }
}

impl FromStr for MixedVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "-+" => Ok(MixedVariant::MinusPlus),
            "+-" => Ok(MixedVariant::PlusMinus),
            other => Err(Error::InvalidArgument(format!("mixed variant must be -+ or +-, got `{other}`"))),
        }
    }
}

/// Which of the two directions of a variant a table entry uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Dir {
    Outer,
    Inner,
}

impl Dir {
    fn sign(self, v: MixedVariant) -> Sign {
        match self {
            Dir::Outer => v.outer(),
            Dir::Inner => v.inner(),
        }
    }
}

use Dir::{Inner as I, Outer as O};

/// `coef · ∂^{dir, axis}`.
type Entry = Option<(i8, Dir, usize)>;

const DIRAC_TABLE: [[Entry; 4]; 4] = [
    [None, Some((-1, O, 1)), Some((-1, O, 2)), Some((-1, O, 3))],
    [Some((1, O, 1)), None, Some((-1, I, 3)), Some((1, I, 2))],
    [Some((1, O, 2)), Some((1, I, 3)), None, Some((-1, I, 1))],
    [Some((1, O, 3)), Some((-1, I, 2)), Some((1, I, 1)), None],
];

fn require_n3(p: &LatticePolynomial) -> Result<()> {
    if p.n() == 3 {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("quaternionic operators need n = 3, got n = {}", p.n())))
    }
}

/// Literal 4×4 matrix action of `D^{−+}` or `D^{+−}`.
pub fn mixed_dirac(variant: MixedVariant, f: &QuaternionLatticePolynomial) -> QuaternionLatticePolynomial {
    let c = f.components();
    let out = std::array::from_fn(|row| {
        let mut acc = f.inner.zero_like();
        for (col, entry) in DIRAC_TABLE[row].iter().enumerate() {
            if let Some((coef, dir, axis)) = entry {
                let d = operators::partial(&c[col], *axis, dir.sign(variant));
                acc = &acc + &d.scale(&int((*coef).into()));
            }
        }
        acc
    });
    f.assemble(out)
}

/// `div^± Vec f = Σ ∂^{±i} f^i`.
pub fn div(sign: Sign, f: &QuaternionLatticePolynomial) -> LatticePolynomial {
    (1..=3).fold(f.inner.zero_like(), |acc, i| &acc + &operators::partial(&f.component(i), i, sign))
}

/// `grad^± f⁰`, as a pure vector quaternion.
pub fn grad(sign: Sign, f0: &LatticePolynomial) -> Result<QuaternionLatticePolynomial> {
    require_n3(f0)?;
    QuaternionLatticePolynomial::from_components(&[
        f0.zero_like(),
        operators::partial(f0, 1, sign),
        operators::partial(f0, 2, sign),
        operators::partial(f0, 3, sign),
    ])
}

/// `curl^± Vec f` via the formal determinant with rows `(e₁,e₂,e₃)`, `(∂^{±1},∂^{±2},∂^{±3})`, `(f¹,f²,f³)`.
pub fn curl(sign: Sign, f: &QuaternionLatticePolynomial) -> QuaternionLatticePolynomial {
    let c = f.components();
    let d = |comp: usize, axis: usize| operators::partial(&c[comp], axis, sign);
    f.assemble([f.inner.zero_like(), &d(3, 2) - &d(2, 3), &d(1, 3) - &d(3, 1), &d(2, 1) - &d(1, 2)])
}

/// `(−div Vec f, grad f⁰ + curl Vec f)` with the directions of the variant.
pub fn mixed_dirac_blocks(variant: MixedVariant, f: &QuaternionLatticePolynomial) -> QuaternionLatticePolynomial {
    let scalar = -&div(variant.outer(), f);
    let g = grad(variant.outer(), &f.scalar_part()).expect("n = 3");
    let vector = &g + &curl(variant.inner(), f);
    let mut c = vector.components();
    c[0] = scalar;
    f.assemble(c)
}

/// Componentwise `Δ_h`.
pub fn laplacian(f: &QuaternionLatticePolynomial) -> QuaternionLatticePolynomial {
    f.map_components(|_, c| operators::laplacian(c))
}

/// The three sides of the factorization of `−Δ_h` by the mixed operators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationReport {
    pub plus_minus_after_minus_plus: QuaternionLatticePolynomial,
    pub minus_plus_after_plus_minus: QuaternionLatticePolynomial,
    pub negative_laplacian: QuaternionLatticePolynomial,
    pub holds: bool,
}

pub fn verify_laplacian_factorization(f: &QuaternionLatticePolynomial) -> FactorizationReport {
    let a = mixed_dirac(MixedVariant::PlusMinus, &mixed_dirac(MixedVariant::MinusPlus, f));
    let b = mixed_dirac(MixedVariant::MinusPlus, &mixed_dirac(MixedVariant::PlusMinus, f));
    let c = -&laplacian(f);
    let holds = a == c && b == c;
    FactorizationReport { plus_minus_after_minus_plus: a, minus_plus_after_plus_minus: b, negative_laplacian: c, holds }
}

/// Difference direction of entry `(row, axis)` in the Euler, Gamma and product tables:
/// outer on the scalar row and the diagonal, inner elsewhere.
fn pattern(row: usize, axis: usize) -> Dir {
    if row == 0 || row == axis {
        O
    } else {
        I
    }
}

/// `E f`: component `r` is `Σ_j m_jh (∂^{d,j} f^r)(mh − d·h e_j)`.
pub fn euler(variant: MixedVariant, f: &QuaternionLatticePolynomial) -> QuaternionLatticePolynomial {
    f.map_components(|row, c| {
        (1..=3).fold(c.zero_like(), |acc, j| {
            let d = pattern(row, j).sign(variant);
            let shifted = operators::shift(&operators::partial(c, j, d), j, d.opposite());
            &acc + &operators::coordinate(&shifted, j)
        })
    })
}

/// Which reading of the printed product and Gamma tables to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Transcription {
    /// Every entry as printed.
    Printed,
    /// The fourth determinant of the `−+` product uses the header `e₀, e₁, e₂` of its twin.
    HeaderFixed,
    /// Header fix, second-difference block with the opposite prefactor and the middle
    /// cofactor of the `f¹` and `f³` determinants with the opposite sign.
    Corrected,
}

impl Transcription {
    pub const ALL: [Transcription; 3] = [Transcription::Printed, Transcription::HeaderFixed, Transcription::Corrected];
}

/// One formal 3×3 determinant acting on `f^component`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DetTerm {
    pub component: usize,
    pub headers: [usize; 3],
    /// `sign · m_axis h`.
    pub m_row: [(i8, usize); 3],
    /// `sign · ∂^{dir, axis}`.
    d_row: [(i8, Dir, usize); 3],
    /// Signs of the three cofactors, `(+, −, +)` for a determinant.
    pub cofactors: [i8; 3],
}

const DET: [i8; 3] = [1, -1, 1];

const PRODUCT_DETS: [DetTerm; 4] = [
    DetTerm {
        component: 0,
        headers: [1, 2, 3],
        m_row: [(1, 1), (1, 2), (1, 3)],
        d_row: [(1, O, 1), (1, O, 2), (1, O, 3)],
        cofactors: DET,
    },
    DetTerm {
        component: 1,
        headers: [0, 2, 3],
        m_row: [(1, 1), (1, 3), (1, 2)],
        d_row: [(1, O, 1), (1, I, 3), (1, I, 2)],
        cofactors: DET,
    },
    DetTerm {
        component: 2,
        headers: [0, 1, 3],
        m_row: [(-1, 2), (-1, 3), (1, 1)],
        d_row: [(-1, O, 2), (-1, I, 3), (1, I, 1)],
        cofactors: DET,
    },
    DetTerm {
        component: 3,
        headers: [0, 1, 2],
        m_row: [(1, 3), (1, 2), (1, 1)],
        d_row: [(1, O, 3), (1, I, 2), (1, I, 1)],
        cofactors: DET,
    },
];

/// The determinant terms of the `(mh)D` product, in the requested reading.
pub fn product_determinants(variant: MixedVariant, t: Transcription) -> [DetTerm; 4] {
    let mut dets = PRODUCT_DETS;
    if t == Transcription::Printed && variant == MixedVariant::MinusPlus {
        dets[3].headers = [0, 1, 3];
    }
    if t == Transcription::Corrected {
        dets[1].cofactors = [1, 1, 1];
        dets[3].cofactors = [1, 1, 1];
    }
    dets
}

/// The determinant terms inside `Γ`; both printed Gamma operators use the header `e₀, e₁, e₂`.
pub fn gamma_determinants(t: Transcription) -> [DetTerm; 4] {
    let mut dets = PRODUCT_DETS;
    if t == Transcription::Corrected {
        dets[1].cofactors = [1, 1, 1];
        dets[3].cofactors = [1, 1, 1];
    }
    dets
}

fn apply_det(variant: MixedVariant, det: &DetTerm, f: &QuaternionLatticePolynomial) -> QuaternionLatticePolynomial {
    let fc = f.component(det.component);
    // M_a D_b f = (s_a m_a h)(t_b ∂_b f)
    let md = |a: usize, b: usize| {
        let (sm, am) = det.m_row[a];
        let (sd, dir, ad) = det.d_row[b];
        let d = operators::partial(&fc, ad, dir.sign(variant));
        operators::coordinate(&d, am).scale(&int(i64::from(sm) * i64::from(sd)))
    };
    let minors = [&md(1, 2) - &md(2, 1), &md(0, 2) - &md(2, 0), &md(0, 1) - &md(1, 0)];
    let mut out: [LatticePolynomial; 4] = std::array::from_fn(|_| fc.zero_like());
    for (i, minor) in minors.iter().enumerate() {
        let slot = det.headers[i];
        out[slot] = &out[slot] + &minor.scale(&int(det.cofactors[i].into()));
    }
    f.assemble(out)
}

/// `Σ_j m_jh ∂^{d,j} f^r` with the product-table directions.
fn product_matrix_part(variant: MixedVariant, f: &QuaternionLatticePolynomial) -> QuaternionLatticePolynomial {
    f.map_components(|row, c| {
        (1..=3).fold(c.zero_like(), |acc, j| {
            let d = operators::partial(c, j, pattern(row, j).sign(variant));
            &acc + &operators::coordinate(&d, j)
        })
    })
}

/// Right-hand side of the printed `(mh)D` expansion: `−(matrix)·(mh) + Σ det · f^i`.
pub fn product_expansion(
    variant: MixedVariant,
    t: Transcription,
    f: &QuaternionLatticePolynomial,
) -> QuaternionLatticePolynomial {
    product_determinants(variant, t)
        .iter()
        .fold(-&product_matrix_part(variant, f), |acc, det| &acc + &apply_det(variant, det, f))
}

/// `(mh) D f` computed by the Hamilton product.
pub fn variable_times_dirac(variant: MixedVariant, f: &QuaternionLatticePolynomial) -> QuaternionLatticePolynomial {
    mixed_dirac(variant, f).multiply_by_variable()
}

/// `Γ f = c·h Σ_j ±m_jh ∂^{−j}∂^{+j} f^r − Σ det · f^i`, with `c = +1` for `−+`
/// and `−1` for `+−` as printed.
pub fn gamma(variant: MixedVariant, t: Transcription, f: &QuaternionLatticePolynomial) -> QuaternionLatticePolynomial {
    let mut prefactor = match variant {
        MixedVariant::MinusPlus => f.h().clone(),
        MixedVariant::PlusMinus => -f.h(),
    };
    if t == Transcription::Corrected {
        prefactor = -prefactor;
    }
    let second = f.map_components(|row, c| {
        (1..=3).fold(c.zero_like(), |acc, j| {
            let dd = operators::partial(&operators::partial(c, j, Sign::Plus), j, Sign::Minus);
            let s = if pattern(row, j) == O { Rational::one() } else { -Rational::one() };
            &acc + &operators::coordinate(&dd, j).scale(&s)
        })
    });
    gamma_determinants(t).iter().fold(second.scale(&prefactor), |acc, det| &acc - &apply_det(variant, det, f))
}

/// `(mh)D f + E f + Γ f`, which vanishes when the Gamma reading is consistent.
pub fn euler_gamma_defect(
    variant: MixedVariant,
    t: Transcription,
    f: &QuaternionLatticePolynomial,
) -> QuaternionLatticePolynomial {
    let lhs = &variable_times_dirac(variant, f) + &euler(variant, f);
    &lhs + &gamma(variant, t, f)
}

/// First reading under which `(mh)D = −E − Γ` holds on every sample.
pub fn select_transcription(variant: MixedVariant, samples: &[QuaternionLatticePolynomial]) -> Option<Transcription> {
    Transcription::ALL.into_iter().find(|t| samples.iter().all(|f| euler_gamma_defect(variant, *t, f).is_zero()))
}

/// A quaternionic basis restricted to the four slots.
pub fn quaternion_basis(h: &Rational, family: FamilySign, degrees: Vec<usize>) -> GradedComponentBasis {
    GradedComponentBasis::with_blades(3, h, family, degrees, quaternion_blades())
}

fn wrap(p: &LatticePolynomial) -> Result<QuaternionLatticePolynomial> {
    QuaternionLatticePolynomial::new(p.clone())
}

/// `Π_k ∩ ker D^{∓±}` over the variant's family.
#[derive(Clone, Debug)]
pub struct MixedMonogenicBasis {
    pub degree: usize,
    pub variant: MixedVariant,
    pub elements: Vec<QuaternionLatticePolynomial>,
    pub matrix: OperatorMatrix,
}

impl MixedMonogenicBasis {
    pub fn dim(&self) -> usize {
        self.elements.len()
    }
}

pub fn mixed_monogenic_kernel(k: usize, h: &Rational, variant: MixedVariant) -> Result<MixedMonogenicBasis> {
    let op = move |p: &LatticePolynomial| Ok(mixed_dirac(variant, &wrap(p)?).into_polynomial());
    let (elements, matrix) = kernel_of(op, 3, h, variant.family(), k, quaternion_blades())?;
    let elements = elements.iter().map(wrap).collect::<Result<_>>()?;
    Ok(MixedMonogenicBasis { degree: k, variant, elements, matrix })
}

/// Decomposition problem for `D^{∓±}` with Hamilton lifts by `(mh)`.
pub fn mixed_dirac_problem<'a>(h: &Rational, variant: MixedVariant, max_power: Option<usize>) -> Problem<'a> {
    let h2 = h.clone();
    Problem {
        n: 3,
        h: h.clone(),
        family: variant.family(),
        blades: quaternion_blades(),
        step: 1,
        kernel: Box::new(move |d| {
            Ok(mixed_monogenic_kernel(d, &h2, variant)?.elements.into_iter().map(|e| e.into_polynomial()).collect())
        }),
        lift: Box::new(|p| Ok(wrap(p)?.multiply_by_variable().into_polynomial())),
        annihilator: Box::new(move |p| Ok(mixed_dirac(variant, &wrap(p)?).into_polynomial())),
        max_power,
    }
}

/// Fischer decomposition of a homogeneous quaternion polynomial for `D^{∓±}`.
pub fn quaternionic_fischer_decompose(
    p: &QuaternionLatticePolynomial,
    variant: MixedVariant,
    strategy: Strategy,
) -> Result<Decomposition> {
    if p.family() != variant.family() {
        return Err(Error::ContextMismatch(format!(
            "D{variant} decomposes polynomials of family {}, got family {}",
            variant.family(),
            p.family()
        )));
    }
    decompose::decompose(&mixed_dirac_problem(p.h(), variant, None), p.as_polynomial(), strategy)
}

/// `Π_k ∩ ker Δ_h` with the given coefficient blades.
pub fn harmonic_kernel(
    k: usize,
    n: usize,
    h: &Rational,
    family: FamilySign,
    blades: Vec<Blade>,
) -> Result<(Vec<LatticePolynomial>, OperatorMatrix)> {
    kernel_of(|p| Ok(operators::laplacian(p)), n, h, family, k, blades)
}

/// Decomposition problem for `Δ_h` with lifts by `|mh|²`.
pub fn harmonic_problem<'a>(
    n: usize,
    h: &Rational,
    family: FamilySign,
    blades: Vec<Blade>,
    max_power: Option<usize>,
) -> Problem<'a> {
    let (h2, b2) = (h.clone(), blades.clone());
    Problem {
        n,
        h: h.clone(),
        family,
        blades,
        step: 2,
        kernel: Box::new(move |d| Ok(harmonic_kernel(d, n, &h2, family, b2.clone())?.0)),
        lift: Box::new(|p| Ok(p.multiply_by_norm_squared())),
        annihilator: Box::new(|p| Ok(operators::laplacian(p))),
        max_power,
    }
}

/// `Σ (m_ih)²` in the factorial basis of the family, via monomial conversion.
pub fn norm_squared_polynomial(n: usize, h: &Rational, family: FamilySign) -> Result<LatticePolynomial> {
    let mut out = LatticePolynomial::new(n, h.clone(), family)?;
    for i in 1..=n {
        let alpha = crate::clifford::MultiIndex::unit(n, i).scaled(2);
        for (beta, c) in crate::factorial::monomial_to_factorial(&alpha, family, h)? {
            out.add_term(beta, CliffordElement::scalar(n, c));
        }
    }
    Ok(out)
}

/// Harmonic Fischer decomposition of a homogeneous `P`, over the blades `P` uses.
/// `Δ_h` and `|mh|²` act on each blade separately, so nothing is lost by the restriction.
pub fn harmonic_fischer_decompose(p: &LatticePolynomial, strategy: Strategy) -> Result<Decomposition> {
    let mut blades: BTreeSet<Blade> =
        p.terms().flat_map(|(_, c)| c.terms().map(|(b, _)| *b).collect::<Vec<_>>()).collect();
    if blades.is_empty() {
        blades.insert(Blade::SCALAR);
    }
    let problem = harmonic_problem(p.n(), p.h(), p.family(), blades.into_iter().collect(), None);
    decompose::decompose(&problem, p, strategy)
}

/// Whether each harmonic element of degree `k` splits as `M_k + (mh)M_{k−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonicSplitReport {
    pub degree: usize,
    pub variant: MixedVariant,
    pub harmonic_dim: usize,
    pub monogenic_dims: (usize, usize),
    /// Per harmonic basis element.
    pub splits: Vec<bool>,
    /// A harmonic element that does not split, if any.
    pub witness: Option<QuaternionLatticePolynomial>,
}

pub fn harmonic_monogenic_split(k: usize, h: &Rational, variant: MixedVariant) -> Result<HarmonicSplitReport> {
    let family = variant.family();
    let (harmonic, _) = harmonic_kernel(k, 3, h, family, quaternion_blades())?;
    let top = mixed_monogenic_kernel(k, h, variant)?;
    let lower = if k > 0 { mixed_monogenic_kernel(k - 1, h, variant)?.elements } else { Vec::new() };
    let mut columns: Vec<LatticePolynomial> = top.elements.iter().map(|e| e.as_polynomial().clone()).collect();
    columns.extend(lower.iter().map(|e| e.multiply_by_variable().into_polynomial()));
    let max_deg = columns.iter().chain(&harmonic).filter_map(LatticePolynomial::degree).max().unwrap_or(0);
    let basis = quaternion_basis(h, family, (0..=max_deg).collect());
    let coords = columns.iter().map(|c| basis.coordinates(c)).collect::<Result<Vec<_>>>()?;
    let a = Matrix::from_columns(basis.len(), &coords);
    let mut splits = Vec::new();
    let mut witness = None;
    for hk in &harmonic {
        let ok = a.solve(&basis.coordinates(hk)?).is_some();
        if !ok && witness.is_none() {
            witness = Some(wrap(hk)?);
        }
        splits.push(ok);
    }
    Ok(HarmonicSplitReport {
        degree: k,
        variant,
        harmonic_dim: harmonic.len(),
        monogenic_dims: (top.dim(), lower.len()),
        splits,
        witness,
    })
}

/// Named quaternionic operators accepted on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuaternionOperator {
    Dirac(MixedVariant),
    Div(Sign),
    Grad(Sign),
    Curl(Sign),
    Euler(MixedVariant),
    /// Uses the corrected reading.
    Gamma(MixedVariant),
}

impl QuaternionOperator {
    pub fn apply(&self, p: &LatticePolynomial) -> Result<LatticePolynomial> {
        let f = wrap(p)?;
        let out = match *self {
            QuaternionOperator::Dirac(v) => mixed_dirac(v, &f),
            QuaternionOperator::Div(s) => return Ok(div(s, &f)),
            QuaternionOperator::Grad(s) => grad(s, &f.scalar_part())?,
            QuaternionOperator::Curl(s) => curl(s, &f),
            QuaternionOperator::Euler(v) => euler(v, &f),
            QuaternionOperator::Gamma(v) => gamma(v, Transcription::Corrected, &f),
        };
        Ok(out.into_polynomial())
    }

    pub fn matched_family(&self) -> FamilySign {
        match *self {
            QuaternionOperator::Dirac(v) | QuaternionOperator::Euler(v) | QuaternionOperator::Gamma(v) => v.family(),
            QuaternionOperator::Div(s) | QuaternionOperator::Grad(s) | QuaternionOperator::Curl(s) => {
                s.matched_family()
            }
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        let variant = |stem: &str| {
            let (head, tail) = text.split_at(text.len().checked_sub(2)?);
            (head == stem).then(|| tail.parse().ok()).flatten()
        };
        let sign = |stem: &str| text.strip_prefix(stem).and_then(|s| Sign::parse(s).ok());
        if let Some(v) = variant("D") {
            return Some(QuaternionOperator::Dirac(v));
        }
        if let Some(v) = variant("E") {
            return Some(QuaternionOperator::Euler(v));
        }
        if let Some(v) = variant("Gamma") {
            return Some(QuaternionOperator::Gamma(v));
        }
        sign("div")
            .map(QuaternionOperator::Div)
            .or_else(|| sign("grad").map(QuaternionOperator::Grad))
            .or_else(|| sign("curl").map(QuaternionOperator::Curl))
    }
}

impl fmt::Display for QuaternionOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuaternionOperator::Dirac(v) => write!(f, "D{v}"),
            QuaternionOperator::Div(s) => write!(f, "div{s}"),
            QuaternionOperator::Grad(s) => write!(f, "grad{s}"),
            QuaternionOperator::Curl(s) => write!(f, "curl{s}"),
            QuaternionOperator::Euler(v) => write!(f, "E{v}"),
            QuaternionOperator::Gamma(v) => write!(f, "Gamma{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::MultiIndex;
    use crate::random::{self, PolySpec};
    use crate::rational::rat;

    fn scalar_mono(
        h: Rational,
        family: FamilySign,
        alpha: [u32; 3],
        slot: usize,
        c: i64,
    ) -> QuaternionLatticePolynomial {
        let mut p = LatticePolynomial::new(3, h, family).unwrap();
        p.add_term(MultiIndex::new(alpha.to_vec()), CliffordElement::blade(3, QUATERNION_BLADES[slot], int(c)));
        QuaternionLatticePolynomial::new(p).unwrap()
    }

    fn samples(family: FamilySign, h: Rational, count: u64, degree: usize) -> Vec<QuaternionLatticePolynomial> {
        let spec = PolySpec::new(3, h, family).blades(quaternion_blades()).terms(4);
        (0..count).map(|s| wrap(&random::polynomial(&mut random::rng(s), &spec, degree)).unwrap()).collect()
    }

    #[test]
    fn hamilton_table() {
        assert_eq!(unit_product(1, 2), (1, 3));
        assert_eq!(unit_product(3, 2), (-1, 1));
        assert_eq!(unit_product(1, 3), (-1, 2));
        assert_eq!(unit_product(2, 2), (-1, 0));
    }

    #[test]
    fn dirac_examples() {
        let f = scalar_mono(int(1), FamilySign::Plus, [2, 0, 0], 0, 1);
        let d = mixed_dirac(MixedVariant::MinusPlus, &f);
        assert_eq!(d, scalar_mono(int(1), FamilySign::Plus, [1, 0, 0], 1, 2));
        let dd = mixed_dirac(MixedVariant::PlusMinus, &d);
        assert_eq!(dd, scalar_mono(int(1), FamilySign::Plus, [0, 0, 0], 0, -2));
        assert!(verify_laplacian_factorization(&f).holds);
    }

    #[test]
    fn matrix_form_matches_blocks_and_factorizes() {
        for family in [FamilySign::Minus, FamilySign::Plus] {
            for f in samples(family, rat(1, 2), 10, 3) {
                for v in MixedVariant::ALL {
                    assert_eq!(mixed_dirac(v, &f), mixed_dirac_blocks(v, &f));
                }
                assert!(verify_laplacian_factorization(&f).holds);
                for s in [Sign::Plus, Sign::Minus] {
                    assert!(div(s, &curl(s, &f)).is_zero());
                    assert!(curl(s, &grad(s, &f.scalar_part()).unwrap()).is_zero());
                }
            }
        }
    }

    #[test]
    fn hamilton_lift_matches_quaternion_product() {
        let f = samples(FamilySign::Minus, int(1), 1, 2).remove(0);
        let x = [int(2), int(-1), int(3)];
        let lhs = f.multiply_by_variable().evaluate(&x).unwrap();
        let rhs = &Quaternion::vector(&x) * &f.evaluate(&x).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn only_the_corrected_reading_survives() {
        for v in MixedVariant::ALL {
            let fs = samples(v.family(), rat(1, 2), 6, 3);
            assert_eq!(select_transcription(v, &fs), Some(Transcription::Corrected));
            for f in &fs {
                assert_eq!(product_expansion(v, Transcription::Corrected, f), variable_times_dirac(v, f));
            }
        }
    }

    #[test]
    fn euler_on_scalar_example() {
        let f = scalar_mono(int(1), FamilySign::Plus, [2, 0, 0], 0, 1);
        assert_eq!(euler(MixedVariant::MinusPlus, &f), f.scale(&int(2)));
    }

    #[test]
    fn kernels_and_norm_polynomial() {
        let k1 = mixed_monogenic_kernel(1, &int(1), MixedVariant::MinusPlus).unwrap();
        assert!(k1.elements.iter().all(|e| mixed_dirac(MixedVariant::MinusPlus, e).is_zero()));
        let one = LatticePolynomial::constant(3, int(1), FamilySign::Minus, CliffordElement::one(3)).unwrap();
        assert_eq!(norm_squared_polynomial(3, &int(1), FamilySign::Minus).unwrap(), one.multiply_by_norm_squared());
    }

    #[test]
    fn operator_names_round_trip() {
        for name in ["D-+", "D+-", "div+", "curl-", "grad+", "E-+", "Gamma+-"] {
            assert_eq!(QuaternionOperator::parse(name).unwrap().to_string(), name);
        }
        assert!(QuaternionOperator::parse("D").is_none());
    }
}
