//! Pointwise lattice-function operators.
//!
//! These evaluate every operator from its literal stencil definition at a single
//! point, with no knowledge of factorial powers. They serve as the independent
//! oracle against which the polynomial-level operators are checked.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::clifford::{Blade, CliffordElement};
use crate::factorial::Sign;
use crate::polynomial::LatticePolynomial;
use crate::rational::Rational;

/// A Clifford-valued function of a rational point.
pub type Field = Arc<dyn Fn(&[Rational]) -> CliffordElement + Send + Sync>;

pub fn from_polynomial(p: &LatticePolynomial) -> Field {
    let p = p.clone();
    Arc::new(move |x| p.evaluate(x).expect("point dimension matches the polynomial"))
}

fn moved(x: &[Rational], axis: usize, by: &Rational) -> Vec<Rational> {
    let mut y = x.to_vec();
    y[axis - 1] += by;
    y
}

fn s(sign: Sign) -> Rational {
    Rational::from_integer(BigInt::from(sign.value()))
}

/// `f(x ± h e_axis)`.
pub fn shift(f: &Field, axis: usize, dir: Sign, h: &Rational) -> Field {
    let (f, step) = (f.clone(), s(dir) * h);
    Arc::new(move |x| f(&moved(x, axis, &step)))
}

/// `∓(f(x) − f(x ± h e_axis))/h`.
pub fn partial(f: &Field, axis: usize, sign: Sign, h: &Rational) -> Field {
    let (f, step, scale) = (f.clone(), s(sign) * h, -s(sign) / h);
    Arc::new(move |x| (&f(x) - &f(&moved(x, axis, &step))).scale(&scale))
}

pub fn add(f: &Field, g: &Field) -> Field {
    let (f, g) = (f.clone(), g.clone());
    Arc::new(move |x| &f(x) + &g(x))
}

pub fn sub(f: &Field, g: &Field) -> Field {
    let (f, g) = (f.clone(), g.clone());
    Arc::new(move |x| &f(x) - &g(x))
}

pub fn scale(f: &Field, c: &Rational) -> Field {
    let (f, c) = (f.clone(), c.clone());
    Arc::new(move |x| f(x).scale(&c))
}

/// `a · f(x)` for a constant `a`.
pub fn left_constant(f: &Field, a: &CliffordElement) -> Field {
    let (f, a) = (f.clone(), a.clone());
    Arc::new(move |x| &a * &f(x))
}

/// `x_axis · f(x)`.
pub fn coordinate(f: &Field, axis: usize) -> Field {
    let f = f.clone();
    Arc::new(move |x| f(x).scale(&x[axis - 1]))
}

/// `(Σ x_i e_i) · f(x)`.
pub fn vector_variable(f: &Field) -> Field {
    let f = f.clone();
    Arc::new(move |x| &CliffordElement::vector(x) * &f(x))
}

fn sum_axes(n: usize, term: impl Fn(usize) -> Field) -> Field {
    let parts: Vec<Field> = (1..=n).map(term).collect();
    Arc::new(move |x| parts.iter().fold(CliffordElement::zero(x.len()), |acc, g| &acc + &g(x)))
}

pub fn dirac(f: &Field, n: usize, sign: Sign, h: &Rational) -> Field {
    sum_axes(n, |i| left_constant(&partial(f, i, sign, h), &CliffordElement::generator(n, i)))
}

/// `Σ (f(x + he_i) + f(x − he_i) − 2f(x))/h²`.
pub fn laplacian(f: &Field, n: usize, h: &Rational) -> Field {
    let (f, h) = (f.clone(), h.clone());
    Arc::new(move |x| {
        let mut acc = CliffordElement::zero(n);
        for i in 1..=n {
            let up = f(&moved(x, i, &h));
            let down = f(&moved(x, i, &-&h));
            acc = &acc + &(&(&up + &down) - &f(x).scale(&Rational::from_integer(BigInt::from(2))));
        }
        acc.scale(&(Rational::one() / (&h * &h)))
    })
}

pub fn euler(f: &Field, n: usize, sign: Sign, h: &Rational) -> Field {
    sum_axes(n, |i| coordinate(&shift(&partial(f, i, sign, h), i, sign.opposite(), h), i))
}

pub fn l_jk(f: &Field, sign: Sign, j: usize, k: usize, h: &Rational) -> Field {
    sub(&coordinate(&partial(f, k, sign, h), j), &coordinate(&partial(f, j, sign, h), k))
}

pub fn op_a(f: &Field, n: usize, sign: Sign, h: &Rational) -> Field {
    let inner = sum_axes(n, |i| coordinate(&partial(&partial(f, i, sign.opposite(), h), i, sign, h), i));
    scale(&inner, &(-s(sign) * h))
}

pub fn gamma(f: &Field, n: usize, sign: Sign, h: &Rational) -> Field {
    let mut out = scale(&op_a(f, n, sign, h), &-Rational::one());
    for j in 1..=n {
        for k in j + 1..=n {
            let ejk = CliffordElement::blade(n, Blade::generator(j).product(Blade::generator(k)).1, Rational::one());
            out = sub(&out, &left_constant(&l_jk(f, sign, j, k, h), &ejk));
        }
    }
    out
}

pub fn op_b(f: &Field, n: usize, sign: Sign, h: &Rational) -> Field {
    scale(&sum_axes(n, |i| partial(f, i, sign, h)), &(s(sign) * h))
}

pub fn op_c(f: &Field, n: usize, sign: Sign, h: &Rational) -> Field {
    sum_axes(n, |i| left_constant(&coordinate(&shift(f, i, sign.opposite(), h), i), &CliffordElement::generator(n, i)))
}

pub fn op_r(f: &Field, n: usize, sign: Sign, r: &Rational, h: &Rational) -> Field {
    sub(&add(&scale(f, r), &euler(f, n, sign, h)), &op_a(f, n, sign, h))
}

pub fn op_v(f: &Field, n: usize, sign: Sign, r: &Rational, h: &Rational) -> Field {
    add(&op_r(f, n, sign, r, h), &scale(&op_b(f, n, sign, h), &Rational::new(1.into(), 2.into())))
}

/// Lattice points `m` with `|m_i| ≤ radius`, as rational coordinates `mh`.
pub fn lattice_points(n: usize, radius: i64, h: &Rational) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (-radius..=radius).map(move |m| {
                    let mut p = prefix.clone();
                    p.push(m);
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|m: Vec<i64>| m.into_iter().map(|k| Rational::from_integer(BigInt::from(k)) * h).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::MultiIndex;
    use crate::factorial::FamilySign;
    use crate::operators;
    use crate::rational::{int, rat};

    #[test]
    fn stencils_agree_with_polynomial_operators() {
        let h = rat(1, 2);
        let mut p = LatticePolynomial::new(2, h.clone(), FamilySign::Plus).unwrap();
        p.add_term(MultiIndex::new(vec![2, 1]), CliffordElement::blade(2, Blade::from_bits(1), int(3)));
        p.add_term(MultiIndex::new(vec![0, 2]), CliffordElement::blade(2, Blade::from_bits(3), rat(-1, 3)));
        let f = from_polynomial(&p);
        for sign in [Sign::Plus, Sign::Minus] {
            let pairs: Vec<(LatticePolynomial, Field)> = vec![
                (operators::dirac(&p, sign), dirac(&f, 2, sign, &h)),
                (operators::euler(&p, sign), euler(&f, 2, sign, &h)),
                (operators::gamma(&p, sign), gamma(&f, 2, sign, &h)),
                (operators::op_c(&p, sign), op_c(&f, 2, sign, &h)),
                (operators::op_v(&p, sign, &int(1)), op_v(&f, 2, sign, &int(1), &h)),
                (operators::laplacian(&p), laplacian(&f, 2, &h)),
            ];
            for x in lattice_points(2, 2, &h) {
                for (poly, field) in &pairs {
                    assert_eq!(poly.evaluate(&x).unwrap(), field(&x));
                }
            }
        }
    }
}
