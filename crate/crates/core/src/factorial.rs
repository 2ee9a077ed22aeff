//! Factorial powers `(x)^{(s)}_∓ = Π_{k<s}(x ∓ kh)`, their difference calculus and
//! the Stirling conversions to and from ordinary monomials.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::clifford::{Blade, CliffordElement, MultiIndex};
use crate::error::{Error, Result};
use crate::polynomial::LatticePolynomial;
use crate::rational::{self, Rational};

/// Which family of factorial powers a polynomial is written in.
///
/// `Minus` is the falling family `x(x−h)(x−2h)⋯`, acted on diagonally by forward
/// differences; `Plus` is the rising family, diagonal for backward differences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilySign {
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "+")]
    Plus,
}

/// Direction of a difference operator: `Plus` is forward, `Minus` is backward.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl FamilySign {
    /// The sign in each factor `x ∓ kh`: −1 for the falling family, +1 for the rising one.
    pub fn step(self) -> i64 {
        match self {
            FamilySign::Minus => -1,
            FamilySign::Plus => 1,
        }
    }

    pub fn matched_sign(self) -> Sign {
        match self {
            FamilySign::Minus => Sign::Plus,
            FamilySign::Plus => Sign::Minus,
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            FamilySign::Minus => FamilySign::Plus,
            FamilySign::Plus => FamilySign::Minus,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "-" | "minus" => Ok(FamilySign::Minus),
            "+" | "plus" => Ok(FamilySign::Plus),
            other => Err(Error::InvalidArgument(format!("family must be `+` or `-`, got `{other}`"))),
        }
    }
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn matched_family(self) -> FamilySign {
        match self {
            Sign::Plus => FamilySign::Minus,
            Sign::Minus => FamilySign::Plus,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "+" | "+1" | "plus" => Ok(Sign::Plus),
            "-" | "-1" | "minus" => Ok(Sign::Minus),
            other => Err(Error::InvalidArgument(format!("sign must be `+` or `-`, got `{other}`"))),
        }
    }
}

impl fmt::Display for FamilySign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FamilySign::Minus => "-",
            FamilySign::Plus => "+",
        })
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `Π_{k=0}^{s−1}(x ∓ kh)`; the empty product is 1.
pub fn factorial_power_eval(s: usize, family: FamilySign, h: &Rational, x: &Rational) -> Rational {
    let step = Rational::from_integer(BigInt::from(family.step())) * h;
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for _ in 0..s {
        acc *= &factor;
        factor += &step;
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StirlingKind {
    /// Signed numbers `s(n,k)` with `x(x−1)⋯(x−n+1) = Σ s(n,k) x^k`.
    First,
    /// `S(n,k)` with `x^n = Σ S(n,k) x(x−1)⋯(x−k+1)`.
    Second,
}

/// Lazily extended table of Stirling numbers, safe for concurrent readers.
pub struct StirlingTable {
    kind: StirlingKind,
    rows: RwLock<Vec<Vec<BigInt>>>,
}

impl StirlingTable {
    pub const CAP: usize = 32;

    pub fn new(kind: StirlingKind) -> Self {
        StirlingTable { kind, rows: RwLock::new(vec![vec![BigInt::one()]]) }
    }

    pub fn first() -> &'static StirlingTable {
        static T: OnceLock<StirlingTable> = OnceLock::new();
        T.get_or_init(|| StirlingTable::new(StirlingKind::First))
    }

    pub fn second() -> &'static StirlingTable {
        static T: OnceLock<StirlingTable> = OnceLock::new();
        T.get_or_init(|| StirlingTable::new(StirlingKind::Second))
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    pub fn get(&self, n: usize, k: usize) -> Result<BigInt> {
        if n > Self::CAP {
            return Err(Error::InvalidArgument(format!(
                "Stirling table capped at degree {}, requested {n}",
                Self::CAP
            )));
        }
        if k > n {
            return Ok(BigInt::zero());
        }
        {
            let rows = self.rows.read().expect("stirling table poisoned");
            if let Some(row) = rows.get(n) {
                return Ok(row[k].clone());
            }
        }
        let mut rows = self.rows.write().expect("stirling table poisoned");
        while rows.len() <= n {
            let m = rows.len() - 1;
            let prev = &rows[m];
            let mut next = vec![BigInt::zero()];
            next.extend((1..=m + 1).map(|j| {
                let left = &prev.get(j - 1).cloned().unwrap_or_default();
                let here = prev.get(j).cloned().unwrap_or_default();
                match self.kind {
                    StirlingKind::First => left - BigInt::from(m) * here,
                    StirlingKind::Second => left + BigInt::from(j) * here,
                }
            }));
            rows.push(next);
        }
        Ok(rows[n][k].clone())
    }
}

/// Coefficients `c_k` with `(x)^{(s)}_∓ = Σ_k c_k x^k` at mesh `h`.
pub fn factorial_to_monomial_1d(s: usize, family: FamilySign, h: &Rational) -> Result<Vec<Rational>> {
    let table = StirlingTable::first();
    (0..=s)
        .map(|k| {
            let mut c = Rational::from_integer(table.get(s, k)?) * rational::pow(h, s - k);
            if family == FamilySign::Plus && (s - k) % 2 == 1 {
                c = -c;
            }
            Ok(c)
        })
        .collect()
}

/// Coefficients `c_k` with `x^s = Σ_k c_k (x)^{(k)}_∓` at mesh `h`.
pub fn monomial_to_factorial_1d(s: usize, family: FamilySign, h: &Rational) -> Result<Vec<Rational>> {
    let table = StirlingTable::second();
    (0..=s)
        .map(|k| {
            let mut c = Rational::from_integer(table.get(s, k)?) * rational::pow(h, s - k);
            if family == FamilySign::Plus && (s - k) % 2 == 1 {
                c = -c;
            }
            Ok(c)
        })
        .collect()
}

/// The same relations without any mesh factors and with one Stirling symbol per kind
/// (signed first kind for the falling family, unsigned for the rising family).
/// Agrees with the scaled conversions exactly when `h = 1`.
pub fn unscaled_stirling_1d(s: usize, family: FamilySign, kind: StirlingKind) -> Result<Vec<Rational>> {
    match kind {
        StirlingKind::First => factorial_to_monomial_1d(s, family, &Rational::one()),
        StirlingKind::Second => monomial_to_factorial_1d(s, family, &Rational::one()),
    }
}

fn coordinatewise(
    alpha: &MultiIndex,
    one_d: impl Fn(usize) -> Result<Vec<Rational>>,
) -> Result<BTreeMap<MultiIndex, Rational>> {
    let mut acc: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    acc.insert(Vec::new(), Rational::one());
    for &a in alpha.entries() {
        let coeffs = one_d(a as usize)?;
        let mut next = BTreeMap::new();
        for (prefix, v) in &acc {
            for (k, c) in coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut key = prefix.clone();
                key.push(k as u32);
                next.insert(key, v * c);
            }
        }
        acc = next;
    }
    Ok(acc.into_iter().map(|(k, v)| (MultiIndex::new(k), v)).collect())
}

/// `(mh)^α = Σ_β c_β (mh)^{(β)}_∓` by coordinate-wise convolution of the one-dimensional conversions.
pub fn monomial_to_factorial(
    alpha: &MultiIndex,
    family: FamilySign,
    h: &Rational,
) -> Result<BTreeMap<MultiIndex, Rational>> {
    coordinatewise(alpha, |s| monomial_to_factorial_1d(s, family, h))
}

/// `(mh)^{(α)}_∓ = Σ_β c_β (mh)^β`.
pub fn factorial_to_monomial(
    alpha: &MultiIndex,
    family: FamilySign,
    h: &Rational,
) -> Result<BTreeMap<MultiIndex, Rational>> {
    coordinatewise(alpha, |s| factorial_to_monomial_1d(s, family, h))
}

/// The nested-sum coefficient `Σ_{l_1 ≤ … ≤ l_{n−1} ≤ |β|} S^{α_1}_{l_1} S^{α_2}_{l_2−l_1} ⋯ S^{α_n}_{|β|−l_{n−1}}`,
/// which depends on `β` only through `|β|`.
pub fn nested_sum_coefficient(
    alpha: &MultiIndex,
    beta_degree: usize,
    family: FamilySign,
    kind: StirlingKind,
) -> Result<Rational> {
    let n = alpha.dim();
    let rows: Vec<Vec<Rational>> =
        alpha.entries().iter().map(|&a| unscaled_stirling_1d(a as usize, family, kind)).collect::<Result<_>>()?;
    let mut total = Rational::zero();
    for parts in MultiIndex::all_of_degree(n, beta_degree) {
        let mut term = Rational::one();
        for (i, &p) in parts.entries().iter().enumerate() {
            term *= rows[i].get(p as usize).cloned().unwrap_or_else(Rational::zero);
        }
        total += term;
    }
    Ok(total)
}

/// ∂ along `axis` in the direction matched to the polynomial's family: `α ↦ α_i (mh)^{(α−e_i)}`.
pub fn matched_difference(p: &LatticePolynomial, axis: usize) -> LatticePolynomial {
    let mut out = p.zero_like();
    for (alpha, c) in p.terms() {
        let a = alpha.get(axis);
        if let Some(lower) = alpha.lowered(axis) {
            out.add_term(lower, c.scale(&Rational::from_integer(BigInt::from(a))));
        }
    }
    out
}

/// Multiplication by the coordinate `m_i h`:
/// `x·(x)^{(s)}_∓ = (x)^{(s+1)}_∓ ± s h (x)^{(s)}_∓`.
pub fn multiply_by_coordinate(p: &LatticePolynomial, axis: usize) -> LatticePolynomial {
    let mut out = p.zero_like();
    let step = -Rational::from_integer(BigInt::from(p.family().step())) * p.h();
    for (alpha, c) in p.terms() {
        let s = alpha.get(axis);
        out.add_term(alpha.raised(axis, 1), c.clone());
        if s > 0 {
            out.add_term(alpha.clone(), c.scale(&(&step * Rational::from_integer(BigInt::from(s)))));
        }
    }
    out
}

/// Translation `p(· + dir·h e_axis)`.
///
/// In the matched direction this is `I ± h∂`; in the other direction it is the
/// (terminating) inverse series `Σ_j (∓h∂)^j` of the matched shift.
pub fn shift(p: &LatticePolynomial, axis: usize, dir: Sign) -> LatticePolynomial {
    let matched = p.family().matched_sign();
    let sigma = Rational::from_integer(BigInt::from(matched.value())) * p.h();
    if dir == matched {
        return p + &matched_difference(p, axis).scale(&sigma);
    }
    let factor = -sigma;
    let mut out = p.clone();
    let mut term = p.clone();
    loop {
        term = matched_difference(&term, axis).scale(&factor);
        if term.is_zero() {
            break;
        }
        out = &out + &term;
    }
    out
}

/// The discrete homogeneous power `H_s` in the given family.
pub fn homogeneous_power(s: usize, n: usize, family: FamilySign, h: &Rational) -> Result<LatticePolynomial> {
    let mut out = LatticePolynomial::new(n, h.clone(), family)?;
    let k = s / 2;
    let sign = if k.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let kfact = Rational::from_integer(rational::factorial(k));
    for alpha in MultiIndex::all_of_degree(n, k) {
        let weight = &sign * &kfact / Rational::from_integer(alpha.factorial());
        let doubled = alpha.scaled(2);
        if s.is_multiple_of(2) {
            out.add_term(doubled, CliffordElement::scalar(n, weight));
        } else {
            for i in 1..=n {
                out.add_term(doubled.raised(i, 1), CliffordElement::blade(n, Blade::generator(i), weight.clone()));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn factorial_power_values() {
        assert_eq!(factorial_power_eval(2, FamilySign::Minus, &int(1), &int(3)), int(6));
        assert_eq!(factorial_power_eval(0, FamilySign::Plus, &rat(1, 3), &int(7)), int(1));
        assert_eq!(factorial_power_eval(3, FamilySign::Plus, &rat(1, 2), &int(1)), int(3));
    }

    #[test]
    fn stirling_tables_satisfy_boundary_conditions() {
        let first = StirlingTable::first();
        let second = StirlingTable::second();
        for s in 0..=10 {
            assert_eq!(first.get(s, s).unwrap(), BigInt::one());
            assert_eq!(second.get(s, s).unwrap(), BigInt::one());
            let delta = if s == 0 { BigInt::one() } else { BigInt::zero() };
            assert_eq!(first.get(s, 0).unwrap(), delta);
            assert_eq!(second.get(s, 0).unwrap(), delta);
        }
        assert_eq!(first.get(4, 2).unwrap(), BigInt::from(11));
        assert_eq!(first.get(3, 1).unwrap(), BigInt::from(2));
        assert_eq!(first.get(3, 2).unwrap(), BigInt::from(-3));
        assert_eq!(second.get(5, 3).unwrap(), BigInt::from(25));
        assert!(first.get(StirlingTable::CAP + 1, 1).is_err());
    }

    #[test]
    fn square_in_falling_family() {
        let c = monomial_to_factorial(&MultiIndex::new(vec![2]), FamilySign::Minus, &int(1)).unwrap();
        assert_eq!(c[&MultiIndex::new(vec![2])], int(1));
        assert_eq!(c[&MultiIndex::new(vec![1])], int(1));
        let c = monomial_to_factorial(&MultiIndex::new(vec![2]), FamilySign::Minus, &rat(1, 2)).unwrap();
        assert_eq!(c[&MultiIndex::new(vec![1])], rat(1, 2));
        let c = monomial_to_factorial(&MultiIndex::new(vec![1, 1]), FamilySign::Minus, &int(1)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[&MultiIndex::new(vec![1, 1])], int(1));
    }

    #[test]
    fn falling_square_expands_to_monomials() {
        let c = factorial_to_monomial(&MultiIndex::new(vec![2]), FamilySign::Minus, &int(1)).unwrap();
        assert_eq!(c[&MultiIndex::new(vec![2])], int(1));
        assert_eq!(c[&MultiIndex::new(vec![1])], int(-1));
        assert!(!c.contains_key(&MultiIndex::new(vec![0])));
        let c = factorial_to_monomial(&MultiIndex::zero(3), FamilySign::Plus, &int(1)).unwrap();
        assert_eq!(c.into_iter().collect::<Vec<_>>(), vec![(MultiIndex::zero(3), int(1))]);
    }

    #[test]
    fn nested_sum_counts_all_compositions() {
        // α = (1,1), |β| = 2: compositions (0,2),(1,1),(2,0) contribute 0 + 1 + 0.
        let k =
            nested_sum_coefficient(&MultiIndex::new(vec![1, 1]), 2, FamilySign::Minus, StirlingKind::First).unwrap();
        assert_eq!(k, int(1));
    }
}
