//! Rotors and sandwich transformations.
//!
//! A rotor acts on any multivector as R A R^-1. The constructions here
//! cover rotations in a spatial plane, rotations in the transverse
//! temporal plane, Lorentz boosts, and the conjugation rotor that
//! reverses space together with one transverse time axis. The latter
//! flips the sign of both imaginary units while preserving the full
//! grade-6 orientation, which is what turns right-handed plane waves
//! into left-handed ones.

use num::complex::Complex;

use crate::algebra::{basis, gen_idx, Blade, Multivector, I_TRANSVERSE};
use crate::error::{Error, Result};
use crate::maxwell::{family_content, family_masks, space_time_base, unit_blades, Bicomplex};
use crate::scalar::Ring;
use crate::symbolic::{coord, Field, LinearForm, Point, TrigPoly};

/// A unit even multivector together with its inverse.
#[derive(Clone, PartialEq, Debug)]
pub struct Rotor<R: Ring> {
    pub value: Multivector<R>,
    pub inverse: Multivector<R>,
}

impl<R: Ring> Rotor<R> {
    pub fn identity() -> Self {
        Rotor {
            value: Multivector::one(),
            inverse: Multivector::one(),
        }
    }

    /// The two-sided action R A R^-1.
    pub fn sandwich(&self, a: &Multivector<R>) -> Multivector<R> {
        &(&self.value * a) * &self.inverse
    }

    /// The inverse rotor.
    pub fn reversed(&self) -> Rotor<R> {
        Rotor {
            value: self.inverse.clone(),
            inverse: self.value.clone(),
        }
    }

    /// The rotor R' with R' = outer R outer^-1, which satisfies
    /// sandwich(R', X) = outer(sandwich(R, outer^-1(X))).
    pub fn conjugated_by(&self, outer: &Rotor<R>) -> Rotor<R> {
        Rotor {
            value: outer.sandwich(&self.value),
            inverse: outer.sandwich(&self.inverse),
        }
    }
}

impl Rotor<f64> {
    /// Residual of the defining property R R^-1 = 1.
    pub fn unit_residual(&self) -> f64 {
        let prod = &self.value * &self.inverse;
        (&prod - &Multivector::one()).max_abs()
    }

    /// The same rotor with constant trig-polynomial coefficients, for
    /// sandwiching symbolic fields.
    pub fn field_rotor(&self) -> Rotor<TrigPoly<f64>> {
        let lift = |mv: &Multivector<f64>| mv.map(|c| TrigPoly::constant(*c));
        Rotor {
            value: lift(&self.value),
            inverse: lift(&self.inverse),
        }
    }

    pub fn sandwich_field(&self, field: &Field<f64>) -> Field<f64> {
        self.field_rotor().sandwich(field)
    }
}

/// Closed-form exponential of a bivector with scalar square ±1, scaled
/// by `half_angle`: circular functions for square -1, hyperbolic for
/// square +1. The inverse is the exponential of the negated argument.
pub fn rotor_exp(bivector: &Multivector<f64>, half_angle: f64) -> Result<Rotor<f64>> {
    if bivector.is_zero() || bivector.grades() != vec![2] {
        return Err(Error::domain("rotor generator must be a nonzero pure bivector"));
    }
    let square = bivector * bivector;
    let s0 = *square.scalar_part();
    if (&square - &Multivector::scalar(s0)).max_abs() > 1e-9 {
        return Err(Error::domain("rotor generator must square to a scalar"));
    }
    let (c, s) = if (s0 - 1.0).abs() <= 1e-9 {
        (half_angle.cosh(), half_angle.sinh())
    } else if (s0 + 1.0).abs() <= 1e-9 {
        (half_angle.cos(), half_angle.sin())
    } else {
        return Err(Error::domain(format!(
            "rotor generator squares to {s0}, need +1 or -1"
        )));
    };
    Ok(Rotor {
        value: &Multivector::scalar(c) + &bivector.scale(&s),
        inverse: &Multivector::scalar(c) - &bivector.scale(&s),
    })
}

/// Rotation by `theta` in the plane of spatial axes `m` and `n` (0-based).
pub fn spatial_rotation(m: usize, n: usize, theta: f64) -> Result<Rotor<f64>> {
    if m >= 3 || n >= 3 || m == n {
        return Err(Error::domain("rotation plane needs two distinct spatial axes"));
    }
    let plane = Blade::from_generators(&[gen_idx::S1 + m, gen_idx::S1 + n]);
    rotor_exp(&basis(plane), theta / 2.0)
}

/// Rotation by `theta` in the transverse temporal plane, exp(-i theta/2).
/// Mixes the first two temporal axes and fixes everything orthogonal to
/// their plane.
pub fn transverse_rotation(theta: f64) -> Rotor<f64> {
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    Rotor {
        value: &Multivector::scalar(c) - &basis::<f64>(I_TRANSVERSE).scale(&s),
        inverse: &Multivector::scalar(c) + &basis::<f64>(I_TRANSVERSE).scale(&s),
    }
}

/// The conjugation rotor: the second transverse time axis times the
/// spatial volume. Exact in any ring; fixes the first and third temporal
/// axes, negates the second and all spatial axes, and hence sends both
/// imaginary units to their negatives while preserving the grade-6 unit.
pub fn conjugation_rotor<R: Ring>() -> Rotor<R> {
    let forward = Blade::from_generators(&[gen_idx::T2, gen_idx::S1, gen_idx::S2, gen_idx::S3]);
    let backward = Blade::from_generators(&[gen_idx::S1, gen_idx::S2, gen_idx::S3, gen_idx::T2]);
    Rotor {
        value: basis(forward),
        inverse: basis(backward),
    }
}

/// Boost rotor exp(alpha/2 (gamma_s . b) gamma_t3) for a unit spatial
/// direction `b`. Fixes every 1-vector orthogonal to the boost plane.
pub fn lorentz_boost(alpha: f64, direction: [f64; 3]) -> Result<Rotor<f64>> {
    let norm = dot_r(direction, direction).sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::domain(format!(
            "boost direction must be a unit vector, |b| = {norm}"
        )));
    }
    let mut generator = Multivector::zero();
    for n in 0..3 {
        let scaled = basis::<f64>(space_time_base(n)).scale(&(direction[n] / norm));
        generator = &generator + &scaled;
    }
    rotor_exp(&generator, alpha / 2.0)
}

pub(crate) fn dot_r(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross_r(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn cross_rc(a: [f64; 3], b: &[Complex<f64>; 3]) -> [Complex<f64>; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Pack sampled complex field vectors into the numeric bivector
/// sum_n gamma_sn gamma_t3 (E_n + I B_n), the complex unit realised as
/// the transverse bivector.
pub fn field_bivector(e: &[Complex<f64>; 3], b: &[Complex<f64>; 3]) -> Multivector<f64> {
    let mut out = Multivector::zero();
    for n in 0..3 {
        let base = space_time_base(n);
        let slots = [e[n].re, e[n].im, b[n].re, b[n].im];
        for (unit, value) in unit_blades().iter().zip(slots) {
            let blade = base.product(unit);
            *out.coeff_mut(blade.mask()) = f64::from(blade.sign()) * value;
        }
    }
    out
}

/// Recover the complex field vectors from a bivector produced by
/// [`field_bivector`] or by a sandwich of one.
pub fn split_bivector(f: &Multivector<f64>) -> Result<([Complex<f64>; 3], [Complex<f64>; 3])> {
    let mut claimed = [false; 64];
    let mut slots = [[0.0f64; 4]; 3];
    for n in 0..3 {
        let base = space_time_base(n);
        for (j, unit) in unit_blades().iter().enumerate() {
            let blade = base.product(unit);
            slots[n][j] = f64::from(blade.sign()) * f.coeff(blade.mask());
            claimed[blade.mask() as usize] = true;
        }
    }
    for (mask, _) in f.iter_nonzero() {
        if !claimed[mask as usize] {
            return Err(Error::domain(format!(
                "component {} does not belong to a field bivector",
                Blade::new(mask).text()
            )));
        }
    }
    let e = std::array::from_fn(|n| Complex::new(slots[n][0], slots[n][1]));
    let b = std::array::from_fn(|n| Complex::new(slots[n][2], slots[n][3]));
    Ok((e, b))
}

/// Closed-form boost of plane-wave field vectors for a wave propagating
/// along the boost direction: E and B mix through cosh and sinh with the
/// cross products against the propagation direction.
pub fn boost_closed_form(
    alpha: f64,
    e: &[Complex<f64>; 3],
    b: &[Complex<f64>; 3],
    k_hat: [f64; 3],
) -> ([Complex<f64>; 3], [Complex<f64>; 3]) {
    let (ch, sh) = (alpha.cosh(), alpha.sinh());
    let kxb = cross_rc(k_hat, b);
    let kxe = cross_rc(k_hat, e);
    let e_l = std::array::from_fn(|n| ch * e[n] - sh * kxb[n]);
    let b_l = std::array::from_fn(|n| ch * b[n] + sh * kxe[n]);
    (e_l, b_l)
}

/// Which way the real field triple winds around the propagation
/// direction.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Handedness {
    Right,
    Left,
}

/// Handedness of a single plane wave.
#[derive(Clone, PartialEq, Debug)]
pub struct ChiralityVerdict {
    pub handedness: Handedness,
    /// Signed triple product (Re E x Re B) . k_hat at the sampled phase.
    pub orientation: f64,
    /// Angular frequency (always positive; the propagation direction
    /// carries the sign information).
    pub angular_frequency: f64,
    /// Spatial wave vector, oriented along the direction of propagation.
    pub wave_vector: [f64; 3],
}

/// Classify a plane-wave field bivector as right- or left-handed by the
/// orientation of (Re E, Re B, k_hat). The field must be a single wave:
/// one shared phase, no polynomial or constant parts, no transverse-time
/// dependence. The triple product is sampled over one period and the
/// largest-magnitude sample decides.
pub fn chirality_of(field: &Field<f64>) -> Result<ChiralityVerdict> {
    if field.is_zero() {
        return Err(Error::domain("zero field has no handedness"));
    }
    let mut allowed = [false; 64];
    for n in 0..3 {
        for mask in family_masks(space_time_base(n)) {
            allowed[mask as usize] = true;
        }
    }
    for (mask, _) in field.iter_nonzero() {
        if !allowed[mask as usize] {
            return Err(Error::domain(format!(
                "component {} does not belong to a field bivector",
                Blade::new(mask).text()
            )));
        }
    }

    let contents: [Bicomplex<f64>; 3] =
        std::array::from_fn(|n| family_content(field, space_time_base(n)));
    let mut phase: Option<LinearForm<f64>> = None;
    for content in &contents {
        for slot in content.slots() {
            if !slot.is_pure_trig() {
                return Err(Error::domain(
                    "field has polynomial or constant parts; not a plane wave",
                ));
            }
            for l in slot.phases() {
                match &phase {
                    None => phase = Some(l),
                    Some(p) if *p == l => {}
                    Some(_) => {
                        return Err(Error::domain(
                            "field mixes several phases; not a single plane wave",
                        ))
                    }
                }
            }
        }
    }
    let phase = phase.expect("nonzero pure-trig field has a phase");
    if phase.coeffs[coord::T1] != 0.0 || phase.coeffs[coord::T2] != 0.0 {
        return Err(Error::domain("plane-wave phase must not involve transverse time"));
    }
    let omega = phase.coeffs[coord::T3];
    let k = [
        -phase.coeffs[coord::X1],
        -phase.coeffs[coord::X2],
        -phase.coeffs[coord::X3],
    ];
    let k_norm = dot_r(k, k).sqrt();
    if omega == 0.0 || k_norm == 0.0 {
        return Err(Error::domain(
            "plane-wave phase must advance in both principal time and space",
        ));
    }
    // Crest velocity is along omega * k, invariant under negating the
    // normalised phase.
    let k_hat = k.map(|c| c * omega.signum() / k_norm);

    let mut best = (0.0f64, 0.0f64);
    for j in 0..8 {
        let theta = f64::from(j) * std::f64::consts::FRAC_PI_4;
        let mut pt: Point = [0.0; 6];
        pt[coord::T3] = (theta - phase.constant) / omega;
        let re_e: [f64; 3] = std::array::from_fn(|n| contents[n].re.eval(&pt));
        let re_b: [f64; 3] = std::array::from_fn(|n| contents[n].jm.eval(&pt));
        let orientation = dot_r(cross_r(re_e, re_b), k_hat);
        if orientation.abs() > best.0 {
            best = (orientation.abs(), orientation);
        }
    }
    let scale: f64 = contents.iter().map(Bicomplex::coeff_norm).sum();
    if best.0 <= 1e-9 * scale * scale {
        return Err(Error::domain(
            "degenerate wave: the real field vectors never span a plane",
        ));
    }
    Ok(ChiralityVerdict {
        handedness: if best.1 > 0.0 {
            Handedness::Right
        } else {
            Handedness::Left
        },
        orientation: best.1,
        angular_frequency: omega.abs(),
        wave_vector: k.map(|c| c * omega.signum()),
    })
}
