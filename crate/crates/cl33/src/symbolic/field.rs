//! Multivector-valued fields and the first-order differential operators.
//!
//! A field is a multivector whose coefficients are trig-polynomials. The
//! operators below multiply basis blades from the left, so they act on
//! fields of any grade mix.

use super::trig::{coord, Point, TrigPoly, COORD_COUNT};
use crate::algebra::{basis, s_gen, t_gen, Multivector, I_TRANSVERSE, VOLUME_TEMPORAL};
use crate::error::{Error, Result};
use crate::scalar::{Coeff, Rat};
use num::traits::Zero;

/// A multivector field over coefficient ring `C`.
pub type Field<C> = Multivector<TrigPoly<C>>;

impl<C: Coeff> Field<C> {
    /// Evaluate every component at a point.
    pub fn eval(&self, pt: &Point) -> Multivector<f64> {
        self.map(|p| p.eval(pt))
    }

    /// Largest coefficient-sum over the components: bounds the field's
    /// magnitude on the unit box and serves as an exact-cancellation
    /// residual measure.
    pub fn coeff_norm(&self) -> f64 {
        let mut acc: f64 = 0.0;
        for (_, p) in self.iter_nonzero() {
            acc = acc.max(p.coeff_l1());
        }
        acc
    }
}

/// Exact evaluation of a polynomial rational field at a rational point.
pub fn eval_rat(field: &Field<Rat>, pt: &CoordinateVector) -> Result<Multivector<Rat>> {
    let coords = pt.coords();
    let mut out = Multivector::zero();
    for (m, p) in field.iter_nonzero() {
        let value = p.eval_exact(&coords).ok_or_else(|| {
            Error::domain("exact evaluation requires a polynomial field")
        })?;
        *out.coeff_mut(m) = value;
    }
    Ok(out)
}

/// Partial derivative of a field, componentwise.
pub fn diff<C: Coeff>(field: &Field<C>, k: usize) -> Field<C> {
    field.map(|p| p.diff(k))
}

/// The first-order vector derivative: plus-signature generators times
/// their time derivatives minus the minus-signature generators times the
/// space derivatives, each blade multiplying from the left.
pub fn vector_derivative<C: Coeff>(field: &Field<C>) -> Field<C> {
    let mut out = Field::zero();
    for m in 0..3 {
        let d = field.map(|p| p.diff(coord::T1 + m));
        out = &out + &basis::<TrigPoly<C>>(t_gen(m)).geometric(&d);
        let d = field.map(|p| p.diff(coord::X1 + m));
        out = &out - &basis::<TrigPoly<C>>(s_gen(m)).geometric(&d);
    }
    out
}

/// Transverse derivative: `∂/∂t1 − i ∂/∂t2` with `i` the transverse unit
/// bivector acting by left multiplication.
pub fn nabla_t<C: Coeff>(field: &Field<C>) -> Field<C> {
    let d1 = field.map(|p| p.diff(coord::T1));
    let d2 = field.map(|p| p.diff(coord::T2));
    &d1 - &basis::<TrigPoly<C>>(I_TRANSVERSE).geometric(&d2)
}

/// Conjugate transverse derivative: `∂/∂t1 + i ∂/∂t2`.
pub fn nabla_t_star<C: Coeff>(field: &Field<C>) -> Field<C> {
    let d1 = field.map(|p| p.diff(coord::T1));
    let d2 = field.map(|p| p.diff(coord::T2));
    &d1 + &basis::<TrigPoly<C>>(I_TRANSVERSE).geometric(&d2)
}

/// Split the second-order operator into its wave part (principal time and
/// space) and its transverse mass part. The two parts sum to the square
/// of [`vector_derivative`].
pub fn klein_gordon_split<C: Coeff>(field: &Field<C>) -> (Field<C>, Field<C>) {
    let tt = field.map(|p| p.diff(coord::T3).diff(coord::T3));
    let mut wave = tt;
    for k in [coord::X1, coord::X2, coord::X3] {
        wave = &wave - &field.map(|p| p.diff(k).diff(k));
    }
    let mass = nabla_t_star(&nabla_t(field));
    (wave, mass)
}

/// Sandwich by the temporal volume trivector: fixes the plus-signature
/// generators and flips the sign of the minus-signature ones.
pub fn spatial_reflect<R: crate::scalar::Ring>(a: &Multivector<R>) -> Multivector<R> {
    let pi = Multivector::<R>::basis(VOLUME_TEMPORAL);
    let pi_inv = pi.reverse();
    pi.geometric(a).geometric(&pi_inv)
}

/// A rational evaluation point, kept as a vector and its reflection.
#[derive(Clone, PartialEq, Debug)]
pub struct CoordinateVector {
    pub t: [Rat; 3],
    pub x: [Rat; 3],
}

impl CoordinateVector {
    pub fn new(t: [Rat; 3], x: [Rat; 3]) -> Self {
        CoordinateVector { t, x }
    }

    /// The grade-one position multivector `γ_t·t + γ_s·x`.
    pub fn as_vector(&self) -> Multivector<Rat> {
        let mut out = Multivector::zero();
        for m in 0..3 {
            out = &out + &Multivector::basis(t_gen(m)).scale(&self.t[m]);
            out = &out + &Multivector::basis(s_gen(m)).scale(&self.x[m]);
        }
        out
    }

    /// The reflected position `γ_t·t − γ_s·x`.
    pub fn as_vector_reflected(&self) -> Multivector<Rat> {
        let mut out = Multivector::zero();
        for m in 0..3 {
            out = &out + &Multivector::basis(t_gen(m)).scale(&self.t[m]);
            out = &out - &Multivector::basis(s_gen(m)).scale(&self.x[m]);
        }
        out
    }

    /// Exact interval: `t·t − x·x`.
    pub fn interval(&self) -> Rat {
        let mut acc = Rat::zero();
        for m in 0..3 {
            acc += self.t[m].clone() * self.t[m].clone();
            acc -= self.x[m].clone() * self.x[m].clone();
        }
        acc
    }

    pub fn is_null(&self) -> bool {
        self.interval().is_zero()
    }

    pub fn coords(&self) -> [Rat; COORD_COUNT] {
        [
            self.t[0].clone(),
            self.t[1].clone(),
            self.t[2].clone(),
            self.x[0].clone(),
            self.x[1].clone(),
            self.x[2].clone(),
        ]
    }

    pub fn to_point(&self) -> Point {
        let c = self.coords();
        std::array::from_fn(|i| c[i].to_f64())
    }
}

/// The identity field: coordinates riding on their generators,
/// `γ_t·t + γ_s·x` as a field.
pub fn coordinate_field() -> Field<Rat> {
    let mut out = Field::zero();
    for m in 0..3 {
        *out.coeff_mut(t_gen(m).mask()) = TrigPoly::coordinate(coord::T1 + m);
        *out.coeff_mut(s_gen(m).mask()) = TrigPoly::coordinate(coord::X1 + m);
    }
    out
}

/// The reflected identity field `γ_t·t − γ_s·x`.
pub fn coordinate_field_reflected() -> Field<Rat> {
    let mut out = Field::zero();
    for m in 0..3 {
        *out.coeff_mut(t_gen(m).mask()) = TrigPoly::coordinate(coord::T1 + m);
        *out.coeff_mut(s_gen(m).mask()) = -TrigPoly::coordinate(coord::X1 + m);
    }
    out
}

/// Geometric powers of the reflected position field. `n` must be ≥ 1.
pub fn lightcone_candidate(n: u32) -> Result<Field<Rat>> {
    if n == 0 {
        return Err(Error::domain("lightcone candidate needs n >= 1"));
    }
    Ok(coordinate_field_reflected().power(n))
}
