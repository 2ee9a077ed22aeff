//! Real quaternions `q = q⁰e₀ + q¹e₁ + q²e₂ + q³e₃` with `e₁e₂ = e₃`.
//!
//! Components are identified with the column vector `(q⁰, q¹, q², q³)`, and the
//! vector variable `x = Σ x_i e_i` acts by left multiplication through a 4×4 matrix.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::clifford::{Blade, CliffordElement};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quaternion(pub [Rational; 4]);

impl Quaternion {
    pub fn zero() -> Self {
        Quaternion(std::array::from_fn(|_| Rational::zero()))
    }

    pub fn new(c: [Rational; 4]) -> Self {
        Quaternion(c)
    }

    pub fn vector(x: &[Rational; 3]) -> Self {
        Quaternion([Rational::zero(), x[0].clone(), x[1].clone(), x[2].clone()])
    }

    pub fn components(&self) -> &[Rational; 4] {
        &self.0
    }

    pub fn conjugate(&self) -> Self {
        let [a, b, c, d] = &self.0;
        Quaternion([a.clone(), -b, -c, -d])
    }

    /// Hamilton product.
    pub fn hamilton(&self, rhs: &Self) -> Self {
        let [a0, a1, a2, a3] = &self.0;
        let [b0, b1, b2, b3] = &rhs.0;
        Quaternion([
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        ])
    }

    /// Places `q^i` on the blade `e_i` of `Cl(0,3)` (storage convention only; the
    /// product is not the Clifford product).
    pub fn to_clifford(&self) -> CliffordElement {
        CliffordElement::from_terms(
            3,
            self.0.iter().enumerate().map(|(i, v)| {
                let blade = if i == 0 { Blade::SCALAR } else { Blade::generator(i) };
                (blade, v.clone())
            }),
        )
    }

    pub fn from_clifford(e: &CliffordElement) -> Result<Self> {
        if e.dim() != 3 {
            return Err(Error::InvalidArgument(format!("quaternion view needs dimension 3, got {}", e.dim())));
        }
        let mut q = Self::zero();
        for (b, v) in e.terms() {
            let slot = match b.bits() {
                0 => 0,
                1 => 1,
                2 => 2,
                4 => 3,
                _ => return Err(Error::InvalidArgument(format!("blade {b} is not one of e0, e1, e2, e3"))),
            };
            q.0[slot] = v.clone();
        }
        Ok(q)
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        self.hamilton(rhs)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_clifford())
    }
}

/// One entry of a 4×4 matrix that is linear in `x = (x₁, x₂, x₃)`: `sign · x_axis`, or zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearEntry {
    pub sign: i8,
    /// 1-based coordinate, or 0 for the zero entry.
    pub axis: usize,
}

const fn le(sign: i8, axis: usize) -> LinearEntry {
    LinearEntry { sign, axis }
}

/// The 4×4 identification of the vector variable exactly as it is commonly printed,
/// with `+x₁` in row 2, column 3.
pub const PRINTED_VARIABLE_MATRIX: [[LinearEntry; 4]; 4] = [
    [le(0, 0), le(-1, 1), le(-1, 2), le(-1, 3)],
    [le(1, 1), le(0, 0), le(-1, 3), le(1, 2)],
    [le(1, 2), le(1, 3), le(0, 0), le(1, 1)],
    [le(1, 3), le(-1, 2), le(1, 1), le(0, 0)],
];

/// Left multiplication by `x` under `e₁e₂ = e₃`. Differs from the printed table only at (2,3).
pub const LEFT_MULTIPLICATION_MATRIX: [[LinearEntry; 4]; 4] = [
    [le(0, 0), le(-1, 1), le(-1, 2), le(-1, 3)],
    [le(1, 1), le(0, 0), le(-1, 3), le(1, 2)],
    [le(1, 2), le(1, 3), le(0, 0), le(-1, 1)],
    [le(1, 3), le(-1, 2), le(1, 1), le(0, 0)],
];

pub fn instantiate(table: &[[LinearEntry; 4]; 4], x: &[Rational; 3]) -> [[Rational; 4]; 4] {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            let LinearEntry { sign, axis } = table[r][c];
            match (sign, axis) {
                (_, 0) | (0, _) => Rational::zero(),
                (s, a) if s > 0 => x[a - 1].clone(),
                (_, a) => -&x[a - 1],
            }
        })
    })
}

pub fn mat_vec(m: &[[Rational; 4]; 4], q: &Quaternion) -> Quaternion {
    Quaternion(std::array::from_fn(|r| (0..4).map(|c| &m[r][c] * &q.0[c]).fold(Rational::zero(), |a, b| a + b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn q(v: [i64; 4]) -> Quaternion {
        Quaternion(v.map(int))
    }

    #[test]
    fn hamilton_units() {
        let i = q([0, 1, 0, 0]);
        let j = q([0, 0, 1, 0]);
        let k = q([0, 0, 0, 1]);
        assert_eq!(&i * &j, k);
        assert_eq!(&j * &k, i);
        assert_eq!(&k * &i, j);
        assert_eq!(&i * &i, q([-1, 0, 0, 0]));
    }

    #[test]
    fn left_multiplication_matrix_matches_product() {
        let x = [int(2), int(-3), int(5)];
        let p = q([1, 4, -2, 7]);
        let m = instantiate(&LEFT_MULTIPLICATION_MATRIX, &x);
        assert_eq!(mat_vec(&m, &p), &Quaternion::vector(&x) * &p);
    }

    #[test]
    fn printed_matrix_disagrees_in_the_third_row() {
        let x = [int(1), int(0), int(0)];
        let p = q([0, 0, 0, 1]);
        let printed = mat_vec(&instantiate(&PRINTED_VARIABLE_MATRIX, &x), &p);
        let product = &Quaternion::vector(&x) * &p;
        assert_ne!(printed, product);
        assert_eq!(printed.0[2], int(1));
        assert_eq!(product.0[2], int(-1));
    }

    #[test]
    fn clifford_view_round_trips() {
        let a = q([1, -2, 3, 4]);
        assert_eq!(Quaternion::from_clifford(&a.to_clifford()).unwrap(), a);
    }
}
