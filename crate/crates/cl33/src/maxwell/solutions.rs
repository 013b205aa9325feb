//! Named specs whose derivative vanishes identically.
//!
//! The general recipe lifts a '3+1' potential in Lorentz gauge: the
//! observable fields go into W with a factor of -t1, and the sources are
//! absorbed into U and K with a factor of -t1^2/2. The lift closes
//! exactly when the charge gradient cancels the current's time
//! derivative and the current is curl-free; every constructor here
//! satisfies that, and tests assert all four bracket contents vanish.

use crate::scalar::{rat, Rat};
use crate::symbolic::{coord, LinearForm, TrigPoly, COORD_COUNT};

use super::bicomplex::{cx_curl, cx_div, cx_grad, Bicomplex, Cx};
use super::spec::OddFieldSpec;

/// Lift a '3+1' potential into an odd spec.
///
/// The caller is responsible for the closure conditions: Lorentz gauge
/// (div a_s + dt3 a_t = 0), grad rho + dt3 J = 0, and curl J = 0.
/// [`super::brackets::bracket_contents`] on the result makes the check
/// cheap, and the named constructors below are all exact.
pub fn spec_from_sta_potentials(a_t: &Cx<Rat>, a_s: &[Cx<Rat>; 3]) -> OddFieldSpec<Rat> {
    let grad_at = cx_grad(a_t);
    let e: [Cx<Rat>; 3] =
        std::array::from_fn(|n| -&(&grad_at[n] + &a_s[n].diff(coord::T3)));
    let b = cx_curl(a_s);
    let rho = cx_div(&e);
    let curl_b = cx_curl(&b);
    let j: [Cx<Rat>; 3] = std::array::from_fn(|n| &curl_b[n] - &e[n].diff(coord::T3));

    let t1 = TrigPoly::<Rat>::coordinate(coord::T1);
    let neg_half_t1_sq = TrigPoly::monomial(rat(-1, 2), {
        let mut exps = [0u8; COORD_COUNT];
        exps[coord::T1] = 2;
        exps
    });

    let u = &a_t.as_bicomplex() + &rho.as_bicomplex().scale(&neg_half_t1_sq);
    let k_s = std::array::from_fn(|n| {
        &a_s[n].as_bicomplex() + &j[n].as_bicomplex().scale(&neg_half_t1_sq)
    });
    let w_st = std::array::from_fn(|n| {
        let field_n = &e[n].as_bicomplex() + &b[n].as_bicomplex().mul_spacetime();
        -&field_n.scale(&t1)
    });

    OddFieldSpec {
        k_s,
        u,
        v_t: Bicomplex::zero(),
        w_st,
    }
}

/// Transverse plane wave along x3: complex amplitude (a1, a2, 0), phase
/// k(t3 - x3), written as amplitude times e^{-i phase}.
pub fn plane_wave_spec(a1: (Rat, Rat), a2: (Rat, Rat), k: Rat) -> OddFieldSpec<Rat> {
    let mut phase = LinearForm::zero();
    phase.coeffs[coord::T3] = k.clone();
    phase.coeffs[coord::X3] = -k;
    let cos = TrigPoly::cos(phase.clone());
    let sin = TrigPoly::sin(phase);
    // (p + q i)(cos - i sin) = (p cos + q sin) + i (q cos - p sin)
    let wave = |(p, q): (Rat, Rat)| {
        let re = cos.scale(&p) + sin.scale(&q);
        let im = cos.scale(&q) - sin.scale(&p);
        Cx::new(re, im)
    };
    let a_s = [wave(a1), wave(a2), Cx::zero()];
    spec_from_sta_potentials(&Cx::zero(), &a_s)
}

/// Uniform unit charge density: E = (x1, 0, 0), B = 0, rho = 1.
pub fn static_charge_spec() -> OddFieldSpec<Rat> {
    let mut exps = [0u8; COORD_COUNT];
    exps[coord::X1] = 2;
    let a_t = Cx::real(TrigPoly::monomial(rat(-1, 2), exps));
    spec_from_sta_potentials(&a_t, &[Cx::zero(), Cx::zero(), Cx::zero()])
}

/// Uniform magnetic field from a linear vector potential:
/// B = (0, 0, -1), E = 0, no sources.
pub fn magnetostatic_spec() -> OddFieldSpec<Rat> {
    let a_s = [
        Cx::real(TrigPoly::coordinate(coord::X2)),
        Cx::zero(),
        Cx::zero(),
    ];
    spec_from_sta_potentials(&Cx::zero(), &a_s)
}

/// Spec with non-zero transverse scalar V = t1 + i t2 balanced by
/// K = (-2 x1, 0, 0); all fields and sources vanish, exercising the
/// gauge machinery. wave_op(x1^2) = 2 = nabla_T V.
pub fn harmonic_v_spec() -> OddFieldSpec<Rat> {
    let mut spec = OddFieldSpec::zero();
    spec.v_t = Bicomplex::complex(
        TrigPoly::coordinate(coord::T1),
        TrigPoly::coordinate(coord::T2),
    );
    spec.k_s[0] = Bicomplex::real(TrigPoly::coordinate(coord::X1).scale(&rat(-2, 1)));
    spec
}

/// The gauge function solving the wave equation for [`harmonic_v_spec`].
pub fn harmonic_v_gauge() -> Bicomplex<Rat> {
    let mut exps = [0u8; COORD_COUNT];
    exps[coord::X1] = 2;
    Bicomplex::real(TrigPoly::monomial(rat(1, 1), exps))
}
