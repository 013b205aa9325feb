//! Slot arithmetic for even-sector field contents.
//!
//! The units 1, i, I and S = iI commute pairwise, square to +1, -1, -1,
//! +1 respectively, and close under multiplication, so the content
//! attached to a fixed base blade lives in a commutative ring with four
//! trig-polynomial slots. A pair over i alone is what a '3+1' observer
//! reads as one complex component; the I and S slots carry the pseudo
//! sector, and multiplying by S swaps the two sectors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::complex::Complex;

use crate::algebra::{I_SPACETIME, I_TRANSVERSE, PSEUDOSCALAR};
use crate::scalar::Coeff;
use crate::symbolic::{coord, Field, Point, TrigPoly};

/// Element `re + im·i + jm·I + km·S` of the commuting-unit ring.
#[derive(Clone, PartialEq, Debug)]
pub struct Bicomplex<C> {
    pub re: TrigPoly<C>,
    pub im: TrigPoly<C>,
    pub jm: TrigPoly<C>,
    pub km: TrigPoly<C>,
}

/// Complex pair `re + im·i`, the single-sector reading of a slot.
#[derive(Clone, PartialEq, Debug)]
pub struct Cx<C> {
    pub re: TrigPoly<C>,
    pub im: TrigPoly<C>,
}

impl<C: Coeff> Bicomplex<C> {
    pub fn zero() -> Self {
        Bicomplex {
            re: TrigPoly::zero(),
            im: TrigPoly::zero(),
            jm: TrigPoly::zero(),
            km: TrigPoly::zero(),
        }
    }

    pub fn new(re: TrigPoly<C>, im: TrigPoly<C>, jm: TrigPoly<C>, km: TrigPoly<C>) -> Self {
        Bicomplex { re, im, jm, km }
    }

    pub fn real(re: TrigPoly<C>) -> Self {
        Bicomplex {
            re,
            ..Bicomplex::zero()
        }
    }

    pub fn complex(re: TrigPoly<C>, im: TrigPoly<C>) -> Self {
        Bicomplex {
            re,
            im,
            ..Bicomplex::zero()
        }
    }

    pub fn constant(c: C) -> Self {
        Bicomplex::real(TrigPoly::constant(c))
    }

    pub fn one() -> Self {
        Bicomplex::real(TrigPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero() && self.jm.is_zero() && self.km.is_zero()
    }

    /// True when the pseudo slots are empty.
    pub fn is_complex(&self) -> bool {
        self.jm.is_zero() && self.km.is_zero()
    }

    pub fn slots(&self) -> [&TrigPoly<C>; 4] {
        [&self.re, &self.im, &self.jm, &self.km]
    }

    pub fn map_slots(&self, mut f: impl FnMut(&TrigPoly<C>) -> TrigPoly<C>) -> Self {
        Bicomplex {
            re: f(&self.re),
            im: f(&self.im),
            jm: f(&self.jm),
            km: f(&self.km),
        }
    }

    /// Multiply by the unit i. Slot shuffle (a, b, c, d) -> (-b, a, -d, c).
    pub fn mul_i(&self) -> Self {
        Bicomplex {
            re: -self.im.clone(),
            im: self.re.clone(),
            jm: -self.km.clone(),
            km: self.jm.clone(),
        }
    }

    /// Multiply by the unit I. Slot shuffle (a, b, c, d) -> (-c, -d, a, b).
    pub fn mul_spacetime(&self) -> Self {
        Bicomplex {
            re: -self.jm.clone(),
            im: -self.km.clone(),
            jm: self.re.clone(),
            km: self.im.clone(),
        }
    }

    /// Multiply by the unit S. Slot shuffle (a, b, c, d) -> (d, -c, -b, a).
    pub fn mul_pseudo(&self) -> Self {
        Bicomplex {
            re: self.km.clone(),
            im: -self.jm.clone(),
            jm: -self.im.clone(),
            km: self.re.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = |x: &TrigPoly<C>, y: &TrigPoly<C>| x.clone() * y.clone();
        Bicomplex {
            re: p(&self.re, &o.re) - p(&self.im, &o.im) - p(&self.jm, &o.jm)
                + p(&self.km, &o.km),
            im: p(&self.re, &o.im) + p(&self.im, &o.re)
                - p(&self.jm, &o.km)
                - p(&self.km, &o.jm),
            jm: p(&self.re, &o.jm) + p(&self.jm, &o.re)
                - p(&self.im, &o.km)
                - p(&self.km, &o.im),
            km: p(&self.re, &o.km) + p(&self.km, &o.re) + p(&self.im, &o.jm)
                + p(&self.jm, &o.im),
        }
    }

    pub fn scale(&self, factor: &TrigPoly<C>) -> Self {
        self.map_slots(|s| s.clone() * factor.clone())
    }

    pub fn diff(&self, k: usize) -> Self {
        self.map_slots(|s| s.diff(k))
    }

    /// The operator d/dt1 - i d/dt2 applied slot-wise.
    pub fn nabla_t(&self) -> Self {
        let d2 = self.diff(coord::T2).mul_i();
        &self.diff(coord::T1) - &d2
    }

    /// The conjugate operator d/dt1 + i d/dt2.
    pub fn nabla_t_star(&self) -> Self {
        let d2 = self.diff(coord::T2).mul_i();
        &self.diff(coord::T1) + &d2
    }

    /// The (re, im) pair: the single-sector complex reading.
    pub fn complex_part(&self) -> Cx<C> {
        Cx {
            re: self.re.clone(),
            im: self.im.clone(),
        }
    }

    /// The (jm, km) pair read as a complex quantity behind one factor of I.
    pub fn space_part(&self) -> Cx<C> {
        Cx {
            re: self.jm.clone(),
            im: self.km.clone(),
        }
    }

    /// Complex reading of S times self: the pseudo-sector counterpart of
    /// [`Self::complex_part`].
    pub fn primed_complex_part(&self) -> Cx<C> {
        Cx {
            re: self.km.clone(),
            im: -self.jm.clone(),
        }
    }

    /// Pseudo-sector counterpart of [`Self::space_part`].
    pub fn primed_space_part(&self) -> Cx<C> {
        Cx {
            re: -self.im.clone(),
            im: self.re.clone(),
        }
    }

    /// Embed into the even subalgebra on the four unit blades.
    pub fn as_field(&self) -> Field<C> {
        let mut f = Field::zero();
        *f.coeff_mut(0) = self.re.clone();
        *f.coeff_mut(I_TRANSVERSE.mask()) = self.im.clone();
        *f.coeff_mut(I_SPACETIME.mask()) = self.jm.clone();
        *f.coeff_mut(PSEUDOSCALAR.mask()) = self.km.clone();
        f
    }

    /// Slot values at a point, in (re, im, jm, km) order.
    pub fn eval(&self, pt: &Point) -> [f64; 4] {
        [
            self.re.eval(pt),
            self.im.eval(pt),
            self.jm.eval(pt),
            self.km.eval(pt),
        ]
    }

    pub fn coeff_norm(&self) -> f64 {
        self.slots().iter().map(|s| s.coeff_l1()).sum()
    }
}

impl<C: Coeff> Add for &Bicomplex<C> {
    type Output = Bicomplex<C>;
    fn add(self, rhs: &Bicomplex<C>) -> Bicomplex<C> {
        Bicomplex {
            re: self.re.clone() + rhs.re.clone(),
            im: self.im.clone() + rhs.im.clone(),
            jm: self.jm.clone() + rhs.jm.clone(),
            km: self.km.clone() + rhs.km.clone(),
        }
    }
}

impl<C: Coeff> Sub for &Bicomplex<C> {
    type Output = Bicomplex<C>;
    fn sub(self, rhs: &Bicomplex<C>) -> Bicomplex<C> {
        self + &(-rhs)
    }
}

impl<C: Coeff> Neg for &Bicomplex<C> {
    type Output = Bicomplex<C>;
    fn neg(self) -> Bicomplex<C> {
        self.map_slots(|s| -s.clone())
    }
}

impl<C: Coeff> Mul for &Bicomplex<C> {
    type Output = Bicomplex<C>;
    fn mul(self, rhs: &Bicomplex<C>) -> Bicomplex<C> {
        Bicomplex::mul(self, rhs)
    }
}

fn fmt_slots<C: Coeff>(
    f: &mut fmt::Formatter<'_>,
    slots: &[(&TrigPoly<C>, &str)],
) -> fmt::Result {
    let mut wrote = false;
    for (poly, unit) in slots {
        if poly.is_zero() {
            continue;
        }
        if wrote {
            f.write_str(" + ")?;
        }
        if unit.is_empty() {
            write!(f, "{poly}")?;
        } else {
            write!(f, "({poly})*{unit}")?;
        }
        wrote = true;
    }
    if !wrote {
        f.write_str("0")?;
    }
    Ok(())
}

impl<C: Coeff> fmt::Display for Bicomplex<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_slots(
            f,
            &[
                (&self.re, ""),
                (&self.im, "i"),
                (&self.jm, "I"),
                (&self.km, "S"),
            ],
        )
    }
}

impl<C: Coeff> Cx<C> {
    pub fn zero() -> Self {
        Cx {
            re: TrigPoly::zero(),
            im: TrigPoly::zero(),
        }
    }

    pub fn new(re: TrigPoly<C>, im: TrigPoly<C>) -> Self {
        Cx { re, im }
    }

    pub fn real(re: TrigPoly<C>) -> Self {
        Cx {
            re,
            im: TrigPoly::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Cx {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn mul_i(&self) -> Self {
        Cx {
            re: -self.im.clone(),
            im: self.re.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Cx {
            re: self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone(),
            im: self.re.clone() * o.im.clone() + self.im.clone() * o.re.clone(),
        }
    }

    pub fn scale(&self, factor: &TrigPoly<C>) -> Self {
        Cx {
            re: self.re.clone() * factor.clone(),
            im: self.im.clone() * factor.clone(),
        }
    }

    pub fn diff(&self, k: usize) -> Self {
        Cx {
            re: self.re.diff(k),
            im: self.im.diff(k),
        }
    }

    pub fn as_bicomplex(&self) -> Bicomplex<C> {
        Bicomplex::complex(self.re.clone(), self.im.clone())
    }

    pub fn eval(&self, pt: &Point) -> Complex<f64> {
        Complex::new(self.re.eval(pt), self.im.eval(pt))
    }

    pub fn coeff_norm(&self) -> f64 {
        self.re.coeff_l1() + self.im.coeff_l1()
    }
}

impl<C: Coeff> Add for &Cx<C> {
    type Output = Cx<C>;
    fn add(self, rhs: &Cx<C>) -> Cx<C> {
        Cx {
            re: self.re.clone() + rhs.re.clone(),
            im: self.im.clone() + rhs.im.clone(),
        }
    }
}

impl<C: Coeff> Sub for &Cx<C> {
    type Output = Cx<C>;
    fn sub(self, rhs: &Cx<C>) -> Cx<C> {
        Cx {
            re: self.re.clone() - rhs.re.clone(),
            im: self.im.clone() - rhs.im.clone(),
        }
    }
}

impl<C: Coeff> Neg for &Cx<C> {
    type Output = Cx<C>;
    fn neg(self) -> Cx<C> {
        Cx {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl<C: Coeff> Mul for &Cx<C> {
    type Output = Cx<C>;
    fn mul(self, rhs: &Cx<C>) -> Cx<C> {
        Cx::mul(self, rhs)
    }
}

impl<C: Coeff> fmt::Display for Cx<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_slots(f, &[(&self.re, ""), (&self.im, "i")])
    }
}

/// Divergence of a spatial 3-vector of scalars.
pub fn div3<C: Coeff>(v: &[TrigPoly<C>; 3]) -> TrigPoly<C> {
    v[0].diff(coord::X1) + v[1].diff(coord::X2) + v[2].diff(coord::X3)
}

/// Spatial gradient of a scalar.
pub fn grad3<C: Coeff>(s: &TrigPoly<C>) -> [TrigPoly<C>; 3] {
    [s.diff(coord::X1), s.diff(coord::X2), s.diff(coord::X3)]
}

/// Curl of a spatial 3-vector of scalars.
pub fn curl3<C: Coeff>(v: &[TrigPoly<C>; 3]) -> [TrigPoly<C>; 3] {
    [
        v[2].diff(coord::X2) - v[1].diff(coord::X3),
        v[0].diff(coord::X3) - v[2].diff(coord::X1),
        v[1].diff(coord::X1) - v[0].diff(coord::X2),
    ]
}

macro_rules! slotwise_vec_calculus {
    ($ty:ident, $div:ident, $grad:ident, $curl:ident, [$($slot:ident),+]) => {
        /// Divergence, acting on each slot independently.
        pub fn $div<C: Coeff>(v: &[$ty<C>; 3]) -> $ty<C> {
            $ty {
                $($slot: div3(&[v[0].$slot.clone(), v[1].$slot.clone(), v[2].$slot.clone()]),)+
            }
        }

        /// Spatial gradient, acting on each slot independently.
        pub fn $grad<C: Coeff>(s: &$ty<C>) -> [$ty<C>; 3] {
            std::array::from_fn(|n| s.diff(coord::X1 + n))
        }

        /// Curl, acting on each slot independently.
        pub fn $curl<C: Coeff>(v: &[$ty<C>; 3]) -> [$ty<C>; 3] {
            $(
                let $slot = curl3(&[v[0].$slot.clone(), v[1].$slot.clone(), v[2].$slot.clone()]);
            )+
            std::array::from_fn(|n| $ty {
                $($slot: $slot[n].clone(),)+
            })
        }
    };
}

slotwise_vec_calculus!(Bicomplex, bc_div, bc_grad, bc_curl, [re, im, jm, km]);
slotwise_vec_calculus!(Cx, cx_div, cx_grad, cx_curl, [re, im]);
