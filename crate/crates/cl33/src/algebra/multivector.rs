//! Dense multivectors over a generic coefficient ring.

use super::blade::{Blade, BLADE_COUNT, SIGN_TABLE};
use crate::error::{Error, Result};
use crate::scalar::{Coeff, Ring};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A multivector: one coefficient per canonical basis blade.
///
/// The coefficient ring `R` is chosen per instance type — exact rationals,
/// `f64`, or trig-polynomials over either — and ring mixing is impossible
/// by construction.
#[derive(Clone, PartialEq)]
pub struct Multivector<R> {
    coeffs: Box<[R; BLADE_COUNT]>,
}

impl<R: Ring> Multivector<R> {
    pub fn zero() -> Self {
        Multivector {
            coeffs: Box::new(std::array::from_fn(|_| R::zero())),
        }
    }

    pub fn one() -> Self {
        Multivector::scalar(R::one())
    }

    /// A pure scalar.
    pub fn scalar(value: R) -> Self {
        let mut mv = Multivector::zero();
        mv.coeffs[0] = value;
        mv
    }

    /// A signed basis blade with coefficient one.
    pub fn basis(blade: Blade) -> Self {
        let mut mv = Multivector::zero();
        mv.coeffs[blade.mask() as usize] = if blade.sign() < 0 {
            -R::one()
        } else {
            R::one()
        };
        mv
    }

    /// One coefficient on the canonical blade of `mask`.
    pub fn term(mask: u8, value: R) -> Self {
        let mut mv = Multivector::zero();
        mv.coeffs[mask as usize] = value;
        mv
    }

    pub fn coeff(&self, mask: u8) -> &R {
        &self.coeffs[mask as usize]
    }

    pub fn coeff_mut(&mut self, mask: u8) -> &mut R {
        &mut self.coeffs[mask as usize]
    }

    pub fn scalar_part(&self) -> &R {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Nonzero components as `(mask, coefficient)` pairs in mask order.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (u8, &R)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m as u8, c))
    }

    /// Geometric product.
    pub fn geometric(&self, other: &Multivector<R>) -> Multivector<R> {
        let mut out = Multivector::zero();
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let prod = ca.clone() * cb.clone();
                let target = &mut out.coeffs[a ^ b];
                *target = if SIGN_TABLE[a][b] < 0 {
                    std::mem::replace(target, R::zero()) - prod
                } else {
                    std::mem::replace(target, R::zero()) + prod
                };
            }
        }
        out
    }

    /// Projection onto one grade. `grade` must be 0–6.
    pub fn grade_project(&self, grade: u32) -> Result<Multivector<R>> {
        if grade > 6 {
            return Err(Error::domain(format!("grade {grade} outside 0..=6")));
        }
        let mut out = Multivector::zero();
        for (m, c) in self.iter_nonzero() {
            if m.count_ones() == grade {
                out.coeffs[m as usize] = c.clone();
            }
        }
        Ok(out)
    }

    /// The grades present, ascending.
    pub fn grades(&self) -> Vec<u32> {
        let mut gs: Vec<u32> = self.iter_nonzero().map(|(m, _)| m.count_ones()).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// Even-grade part.
    pub fn even_part(&self) -> Multivector<R> {
        self.parity_part(0)
    }

    /// Odd-grade part.
    pub fn odd_part(&self) -> Multivector<R> {
        self.parity_part(1)
    }

    fn parity_part(&self, parity: u32) -> Multivector<R> {
        let mut out = Multivector::zero();
        for (m, c) in self.iter_nonzero() {
            if m.count_ones() % 2 == parity {
                out.coeffs[m as usize] = c.clone();
            }
        }
        out
    }

    /// Reversal (generators of every blade written backwards).
    pub fn reverse(&self) -> Multivector<R> {
        let mut out = Multivector::zero();
        for (m, c) in self.iter_nonzero() {
            let g = m.count_ones();
            let flip = (g * g.wrapping_sub(1) / 2) % 2 == 1;
            out.coeffs[m as usize] = if flip { -c.clone() } else { c.clone() };
        }
        out
    }

    /// Multiply every coefficient by a ring element.
    pub fn scale(&self, factor: &R) -> Multivector<R> {
        self.map(|c| c.clone() * factor.clone())
    }

    /// Apply a coefficient-wise map.
    pub fn map<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> Multivector<S> {
        let mut out = Multivector::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i] = f(c);
        }
        out
    }

    /// `n`-th geometric power (`n = 0` gives the scalar one).
    pub fn power(&self, n: u32) -> Multivector<R> {
        let mut acc = Multivector::one();
        for _ in 0..n {
            acc = acc.geometric(self);
        }
        acc
    }

    /// True when `self * other == other * self`.
    pub fn commutes_with(&self, other: &Multivector<R>) -> bool {
        self.geometric(other) == other.geometric(self)
    }

    /// Restrict to the components whose masks are in `masks`.
    pub fn project_masks(&self, masks: &[u8]) -> Multivector<R> {
        let mut out = Multivector::zero();
        for &m in masks {
            out.coeffs[m as usize] = self.coeffs[m as usize].clone();
        }
        out
    }
}

impl<R: Coeff> Multivector<R> {
    /// Componentwise numeric view.
    pub fn to_f64(&self) -> Multivector<f64> {
        self.map(|c| c.to_f64())
    }

    /// Largest absolute coefficient, numerically.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs_f64()).fold(0.0, f64::max)
    }

    /// Componentwise comparison within an absolute tolerance.
    pub fn approx_eq(&self, other: &Multivector<R>, tol: f64) -> bool {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .all(|(a, b)| (a.to_f64() - b.to_f64()).abs() <= tol)
    }
}

impl<R: Ring> Add for &Multivector<R> {
    type Output = Multivector<R>;
    fn add(self, rhs: &Multivector<R>) -> Multivector<R> {
        let mut out = self.clone();
        for (i, c) in rhs.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let sum = std::mem::replace(&mut out.coeffs[i], R::zero()) + c.clone();
                out.coeffs[i] = sum;
            }
        }
        out
    }
}

impl<R: Ring> Sub for &Multivector<R> {
    type Output = Multivector<R>;
    fn sub(self, rhs: &Multivector<R>) -> Multivector<R> {
        let mut out = self.clone();
        for (i, c) in rhs.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let diff = std::mem::replace(&mut out.coeffs[i], R::zero()) - c.clone();
                out.coeffs[i] = diff;
            }
        }
        out
    }
}

impl<R: Ring> Neg for &Multivector<R> {
    type Output = Multivector<R>;
    fn neg(self) -> Multivector<R> {
        self.map(|c| -c.clone())
    }
}

impl<R: Ring> Mul for &Multivector<R> {
    type Output = Multivector<R>;
    fn mul(self, rhs: &Multivector<R>) -> Multivector<R> {
        self.geometric(rhs)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Multivector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.iter_nonzero() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({})*{}", c, Blade::new(m).text())?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for Multivector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .iter_nonzero()
            .map(|(m, c)| format!("{}: {:?}", Blade::new(m).text(), c))
            .collect();
        write!(f, "Multivector{{{}}}", parts.join(", "))
    }
}
