//! Field extraction and the classic field-equation checks.
//!
//! The mixed slots W determine the observable field F = -nabla_T W; the
//! transverse Laplacian of U and K gives the wave sources u and k; the
//! combined charge and current carry a plain sector on (re, im) and a
//! pseudo sector behind S. Every check below works on exact symbolic
//! residuals and reports them without rounding.

use crate::algebra::{s_gen, Blade, I_SPACETIME, T3};
use crate::error::{Error, Result};
use crate::report::CheckEntry;
use crate::scalar::{rat, Coeff, Rat};
use crate::symbolic::{coord, vector_derivative, Field, TrigPoly};

use super::bicomplex::{
    bc_curl, bc_div, bc_grad, curl3, cx_curl, cx_div, cx_grad, div3, grad3, Bicomplex, Cx,
};
use super::brackets::space_time_base;
use super::spec::OddFieldSpec;

/// Observable fields and sources extracted from an odd spec.
#[derive(Clone, PartialEq, Debug)]
pub struct MaxwellFields<C: Coeff> {
    pub spec: OddFieldSpec<C>,
    /// F = -nabla_T W, one ring element per spatial direction.
    pub f_s: [Bicomplex<C>; 3],
    /// Combined charge: plain sector on (re, im), pseudo sector behind S.
    pub charge: Bicomplex<C>,
    /// Combined current.
    pub current: [Bicomplex<C>; 3],
    /// Transverse Laplacian of U.
    pub u: Bicomplex<C>,
    /// Transverse Laplacian of K.
    pub k_s: [Bicomplex<C>; 3],
}

/// Extract fields and sources from a spec by applying the transverse
/// operators to its slots.
pub fn extract_fields<C: Coeff>(spec: &OddFieldSpec<C>) -> MaxwellFields<C> {
    let f_s = std::array::from_fn(|n| -&spec.w_st[n].nabla_t());
    let u = spec.u.nabla_t_star().nabla_t();
    let k_s: [Bicomplex<C>; 3] = std::array::from_fn(|n| spec.k_s[n].nabla_t_star().nabla_t());
    let ntv = spec.v_t.nabla_t();
    let charge = &ntv.diff(coord::T3) - &u;
    let grad_ntv = bc_grad(&ntv);
    let current = std::array::from_fn(|n| -&(&k_s[n] + &grad_ntv[n]));
    MaxwellFields {
        spec: spec.clone(),
        f_s,
        u,
        k_s,
        charge,
        current,
    }
}

impl<C: Coeff> MaxwellFields<C> {
    /// Electric field: the (re, im) sectors of F.
    pub fn e(&self) -> [Cx<C>; 3] {
        std::array::from_fn(|n| self.f_s[n].complex_part())
    }

    /// Magnetic field: the sectors of F behind one factor of I.
    pub fn b(&self) -> [Cx<C>; 3] {
        std::array::from_fn(|n| self.f_s[n].space_part())
    }

    pub fn rho(&self) -> Cx<C> {
        self.charge.complex_part()
    }

    pub fn j(&self) -> [Cx<C>; 3] {
        std::array::from_fn(|n| self.current[n].complex_part())
    }

    /// Pseudo-sector electric field, read through a factor of S.
    pub fn e_primed(&self) -> [Cx<C>; 3] {
        std::array::from_fn(|n| self.f_s[n].mul_pseudo().complex_part())
    }

    pub fn b_primed(&self) -> [Cx<C>; 3] {
        std::array::from_fn(|n| self.f_s[n].mul_pseudo().space_part())
    }

    pub fn rho_primed(&self) -> Cx<C> {
        self.charge.mul_pseudo().complex_part()
    }

    pub fn j_primed(&self) -> [Cx<C>; 3] {
        std::array::from_fn(|n| self.current[n].mul_pseudo().complex_part())
    }

    /// F as a multivector field on the space/principal-time families.
    pub fn f_multivector(&self) -> Field<C> {
        let mut total = Field::zero();
        for n in 0..3 {
            total = &total
                + &super::brackets::content_field(space_time_base(n), &self.f_s[n]);
        }
        total
    }
}

/// Residuals of the four field equations for one sector's readings.
#[derive(Clone, PartialEq, Debug)]
pub struct MaxwellResiduals<C: Coeff> {
    /// div E - rho.
    pub gauss: Cx<C>,
    /// div B.
    pub monopole: Cx<C>,
    /// curl E + dt3 B.
    pub faraday: [Cx<C>; 3],
    /// curl B - dt3 E - J.
    pub ampere: [Cx<C>; 3],
}

/// Compute the four residuals from explicit readings.
pub fn maxwell_residuals<C: Coeff>(
    e: &[Cx<C>; 3],
    b: &[Cx<C>; 3],
    rho: &Cx<C>,
    j: &[Cx<C>; 3],
) -> MaxwellResiduals<C> {
    let curl_e = cx_curl(e);
    let curl_b = cx_curl(b);
    MaxwellResiduals {
        gauss: &cx_div(e) - rho,
        monopole: cx_div(b),
        faraday: std::array::from_fn(|n| &curl_e[n] + &b[n].diff(coord::T3)),
        ampere: std::array::from_fn(|n| &(&curl_b[n] - &e[n].diff(coord::T3)) - &j[n]),
    }
}

impl<C: Coeff> MaxwellResiduals<C> {
    pub fn is_zero(&self) -> bool {
        self.gauss.is_zero()
            && self.monopole.is_zero()
            && self.faraday.iter().all(Cx::is_zero)
            && self.ampere.iter().all(Cx::is_zero)
    }

    pub fn coeff_norm(&self) -> f64 {
        self.gauss.coeff_norm()
            + self.monopole.coeff_norm()
            + self
                .faraday
                .iter()
                .chain(self.ampere.iter())
                .map(Cx::coeff_norm)
                .sum::<f64>()
    }

    /// One exactness entry per equation; `suffix` distinguishes sectors.
    pub fn entries(&self, suffix: &str) -> Vec<CheckEntry> {
        let vec_zero = |v: &[Cx<C>; 3]| v.iter().all(Cx::is_zero);
        let vec_text = |v: &[Cx<C>; 3]| format!("({}, {}, {})", v[0], v[1], v[2]);
        let mut entries = Vec::new();
        let mut push = |name: String, ok: bool, detail: String| {
            let entry = CheckEntry::exact(name, ok);
            entries.push(if ok {
                entry
            } else {
                entry.with_detail(format!("residual {detail}"))
            });
        };
        push(
            format!("gauss-law{suffix}"),
            self.gauss.is_zero(),
            self.gauss.to_string(),
        );
        push(
            format!("no-monopole{suffix}"),
            self.monopole.is_zero(),
            self.monopole.to_string(),
        );
        push(
            format!("faraday{suffix}"),
            vec_zero(&self.faraday),
            vec_text(&self.faraday),
        );
        push(
            format!("ampere{suffix}"),
            vec_zero(&self.ampere),
            vec_text(&self.ampere),
        );
        entries
    }
}

/// Field-equation residuals for the plain-sector readings.
pub fn check_maxwell<C: Coeff>(fields: &MaxwellFields<C>) -> (MaxwellResiduals<C>, Vec<CheckEntry>) {
    let residuals = maxwell_residuals(&fields.e(), &fields.b(), &fields.rho(), &fields.j());
    let entries = residuals.entries("");
    (residuals, entries)
}

/// Field-equation residuals for the pseudo-sector readings.
pub fn check_maxwell_primed<C: Coeff>(
    fields: &MaxwellFields<C>,
) -> (MaxwellResiduals<C>, Vec<CheckEntry>) {
    let residuals = maxwell_residuals(
        &fields.e_primed(),
        &fields.b_primed(),
        &fields.rho_primed(),
        &fields.j_primed(),
    );
    let entries = residuals.entries("-primed");
    (residuals, entries)
}

/// Charge conservation in both sectors: dt3 rho + div J.
pub fn check_continuity<C: Coeff>(fields: &MaxwellFields<C>) -> Vec<CheckEntry> {
    let plain = &fields.rho().diff(coord::T3) + &cx_div(&fields.j());
    let primed = &fields.rho_primed().diff(coord::T3) + &cx_div(&fields.j_primed());
    let entry = |name: &str, r: &Cx<C>| {
        let e = CheckEntry::exact(name, r.is_zero());
        if r.is_zero() {
            e
        } else {
            e.with_detail(format!("residual {r}"))
        }
    };
    vec![
        entry("continuity", &plain),
        entry("continuity-primed", &primed),
    ]
}

/// Potentials derived from a spec and a gauge function.
#[derive(Clone, PartialEq, Debug)]
pub struct Potentials<C: Coeff> {
    pub a_s: [Bicomplex<C>; 3],
    pub a_t: Bicomplex<C>,
    pub psi: Bicomplex<C>,
}

/// A_s = K + grad psi, A_t = U - dt3 psi.
pub fn potentials_from<C: Coeff>(spec: &OddFieldSpec<C>, psi: &Bicomplex<C>) -> Potentials<C> {
    let grad_psi = bc_grad(psi);
    Potentials {
        a_s: std::array::from_fn(|n| &spec.k_s[n] + &grad_psi[n]),
        a_t: &spec.u - &psi.diff(coord::T3),
        psi: psi.clone(),
    }
}

/// Spatial wave operator div grad - dt3^2 on ring elements.
pub fn wave_op<C: Coeff>(s: &Bicomplex<C>) -> Bicomplex<C> {
    &bc_div(&bc_grad(s)) - &s.diff(coord::T3).diff(coord::T3)
}

/// Verify the gauge equation, the divergence condition on the
/// potentials, and that the potentials regenerate the fields.
///
/// The gauge function must satisfy wave_op(psi) = nabla_T V; a failure is
/// reported as a failing first entry rather than an error, and the
/// remaining residuals are still computed.
pub fn check_potentials<C: Coeff>(
    spec: &OddFieldSpec<C>,
    psi: &Bicomplex<C>,
) -> (Potentials<C>, Vec<CheckEntry>) {
    let mut entries = Vec::new();
    let exact = |name: &str, r_zero: bool, detail: String| {
        let e = CheckEntry::exact(name, r_zero);
        if r_zero {
            e
        } else {
            e.with_detail(detail)
        }
    };

    let gauge_residual = &wave_op(psi) - &spec.v_t.nabla_t();
    entries.push(exact(
        "gauge-equation",
        gauge_residual.is_zero(),
        format!("precondition violated: residual {gauge_residual}"),
    ));

    let fields = extract_fields(spec);
    let pots = potentials_from(spec, psi);

    let lorentz = &bc_div(&pots.a_s) + &pots.a_t.diff(coord::T3);
    entries.push(exact(
        "lorentz-condition",
        lorentz.is_zero(),
        format!("residual {lorentz}"),
    ));

    // Full ring identity F = I curl A_s - grad A_t - dt3 A_s.
    let curl_a = bc_curl(&pots.a_s);
    let grad_at = bc_grad(&pots.a_t);
    let identity: [Bicomplex<C>; 3] = std::array::from_fn(|n| {
        let rhs = &(&curl_a[n].mul_spacetime() - &grad_at[n]) - &pots.a_s[n].diff(coord::T3);
        &fields.f_s[n] - &rhs
    });
    let id_zero = identity.iter().all(Bicomplex::is_zero);
    entries.push(exact(
        "field-potential-identity",
        id_zero,
        format!(
            "residual ({}, {}, {})",
            identity[0], identity[1], identity[2]
        ),
    ));

    // Sector readings: B = curl A_s and E = -grad A_t - dt3 A_s.
    let a_s_cx: [Cx<C>; 3] = std::array::from_fn(|n| pots.a_s[n].complex_part());
    let a_t_cx = pots.a_t.complex_part();
    let b_res: [Cx<C>; 3] = {
        let curl = cx_curl(&a_s_cx);
        let b = fields.b();
        std::array::from_fn(|n| &b[n] - &curl[n])
    };
    let e_res: [Cx<C>; 3] = {
        let grad_t = cx_grad(&a_t_cx);
        let e = fields.e();
        std::array::from_fn(|n| &(&e[n] + &grad_t[n]) + &a_s_cx[n].diff(coord::T3))
    };
    let b_zero = b_res.iter().all(Cx::is_zero);
    let e_zero = e_res.iter().all(Cx::is_zero);
    entries.push(exact(
        "magnetic-potential",
        b_zero,
        format!("residual ({}, {}, {})", b_res[0], b_res[1], b_res[2]),
    ));
    entries.push(exact(
        "electric-potential",
        e_zero,
        format!("residual ({}, {}, {})", e_res[0], e_res[1], e_res[2]),
    ));

    let div_a = bc_div(&pots.a_s);
    if div_a.is_zero() {
        entries.push(CheckEntry::exact("transverse-gauge", true));
    } else {
        entries.push(CheckEntry::info(
            "transverse-gauge",
            format!("div A_s = {div_a} (not in transverse gauge)"),
        ));
    }

    (pots, entries)
}

/// Solve wave_op(psi) = nabla_T V for polynomial data by recursion on
/// the x1 degree: the x1-free and x1-linear layers are set to zero and
/// each higher layer is determined by the one two steps below.
pub fn solve_gauge(v_t: &Bicomplex<Rat>) -> Result<Bicomplex<Rat>> {
    let g = v_t.nabla_t();
    let slots = [&g.re, &g.im, &g.jm, &g.km].map(|s| solve_wave_poly(s));
    let [re, im, jm, km] = slots;
    Ok(Bicomplex::new(re?, im?, jm?, km?))
}

fn solve_wave_poly(g: &TrigPoly<Rat>) -> Result<TrigPoly<Rat>> {
    if g.is_zero() {
        return Ok(TrigPoly::zero());
    }
    if !g.is_polynomial() {
        return Err(Error::domain(
            "gauge recursion needs polynomial data; trigonometric source terms are not supported",
        ));
    }
    // Transverse part of the wave operator once d/dx1^2 is split off.
    let lateral = |p: &TrigPoly<Rat>| {
        p.diff(coord::X2).diff(coord::X2) + p.diff(coord::X3).diff(coord::X3)
            - p.diff(coord::T3).diff(coord::T3)
    };
    let g_slices = g.slices_in(coord::X1);
    let slice = |j: u8| -> TrigPoly<Rat> {
        g_slices
            .iter()
            .find(|(e, _)| *e == j)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(TrigPoly::zero)
    };
    let degree = g_slices.last().map(|(e, _)| *e).unwrap_or(0);

    let mut layers: Vec<TrigPoly<Rat>> = vec![TrigPoly::zero(), TrigPoly::zero()];
    let cap = degree as usize + 2 * (g.degree() as usize + 2);
    for j in 0..=cap {
        let need = slice(j as u8) - lateral(&layers[j]);
        let next = need.scale(&rat(1, ((j + 1) * (j + 2)) as i64));
        layers.push(next);
    }
    let mut psi = TrigPoly::zero();
    for (j, layer) in layers.iter().enumerate() {
        psi = psi + layer.mul_coord_power(coord::X1, j as u8);
    }
    let residual = bicomplex_free_wave(&psi) - g.clone();
    if !residual.is_zero() {
        return Err(Error::NonConvergence(format!(
            "gauge recursion left residual {residual}"
        )));
    }
    Ok(psi)
}

fn bicomplex_free_wave(p: &TrigPoly<Rat>) -> TrigPoly<Rat> {
    div3(&grad3(p)) - p.diff(coord::T3).diff(coord::T3)
}

/// Build the pseudo copy of the spec, re-extract, and verify the
/// pseudo-sector readings reproduce the plain-sector physics.
pub fn check_pseudo_duality<C: Coeff>(spec: &OddFieldSpec<C>) -> Vec<CheckEntry> {
    let fields = extract_fields(spec);
    let pseudo = extract_fields(&spec.pseudo());
    let mut entries = Vec::new();

    let cx_vec_eq = |a: &[Cx<C>; 3], b: &[Cx<C>; 3]| a == b;
    entries.push(CheckEntry::exact(
        "pseudo-electric-match",
        cx_vec_eq(&pseudo.e_primed(), &fields.e()),
    ));
    entries.push(CheckEntry::exact(
        "pseudo-magnetic-match",
        cx_vec_eq(&pseudo.b_primed(), &fields.b()),
    ));
    entries.push(CheckEntry::exact(
        "pseudo-charge-match",
        pseudo.rho_primed() == fields.rho(),
    ));
    entries.push(CheckEntry::exact(
        "pseudo-current-match",
        cx_vec_eq(&pseudo.j_primed(), &fields.j()),
    ));

    let (_, primed_entries) = check_maxwell_primed(&pseudo);
    entries.extend(primed_entries);

    let div_b = cx_div(&fields.b());
    let div_b_primed = cx_div(&pseudo.b_primed());
    let exact = |name: &str, r: &Cx<C>| {
        let e = CheckEntry::exact(name, r.is_zero());
        if r.is_zero() {
            e
        } else {
            e.with_detail(format!("residual {r}"))
        }
    };
    entries.push(exact("monopole-free", &div_b));
    entries.push(exact("monopole-free-primed", &div_b_primed));
    entries
}

/// The '3+1' fields produced by the embedded-algebra regression.
#[derive(Clone, PartialEq, Debug)]
pub struct StaFields<C: Coeff> {
    pub e: [TrigPoly<C>; 3],
    pub b: [TrigPoly<C>; 3],
    pub rho: TrigPoly<C>,
    pub j: [TrigPoly<C>; 3],
    /// Scalar part of the first derivative of the potential.
    pub lorenz_scalar: TrigPoly<C>,
}

/// Regression against the embedded '3+1' construction: build the
/// potential on gamma_t3 and gamma_sn, derive F and the sources with the
/// restricted first-order operator, and check the classic equations.
pub fn sta_regression<C: Coeff>(
    a_t: &TrigPoly<C>,
    a_s: &[TrigPoly<C>; 3],
) -> Result<(StaFields<C>, Vec<CheckEntry>)> {
    for (name, p) in std::iter::once(("a_t", a_t)).chain((0..3).map(|n| ("a_s", &a_s[n]))) {
        if !p.diff(coord::T1).is_zero() || !p.diff(coord::T2).is_zero() {
            return Err(Error::domain(format!(
                "{name} depends on transverse time; the regression is restricted to '3+1' data"
            )));
        }
    }

    let mut potential: Field<C> = Field::zero();
    *potential.coeff_mut(T3.mask()) = a_t.clone();
    for n in 0..3 {
        *potential.coeff_mut(s_gen(n).mask()) = a_s[n].clone();
    }

    let mut entries = Vec::new();
    let first = vector_derivative(&potential);
    let grades = first.grades();
    let grade_ok = grades.iter().all(|g| *g == 0 || *g == 2);
    entries.push(
        CheckEntry::exact("derivative-grade-split", grade_ok).with_detail(format!(
            "first derivative has grades {grades:?}; expected subset of {{0, 2}}"
        )),
    );

    let lorenz_scalar = first.scalar_part().clone();
    let lorenz_oracle = a_t.diff(coord::T3) + div3(a_s);
    entries.push(CheckEntry::exact(
        "lorenz-scalar",
        lorenz_scalar == lorenz_oracle,
    ));

    let f_mv = first.grade_project(2)?;
    let signed = |field: &Field<C>, blade: Blade| -> TrigPoly<C> {
        let c = field.coeff(blade.mask()).clone();
        if blade.sign() < 0 {
            -c
        } else {
            c
        }
    };
    let e: [TrigPoly<C>; 3] = std::array::from_fn(|n| signed(&f_mv, space_time_base(n)));
    let b: [TrigPoly<C>; 3] =
        std::array::from_fn(|n| signed(&f_mv, space_time_base(n).product(&I_SPACETIME)));

    let grad_at = grad3(a_t);
    let e_oracle: [TrigPoly<C>; 3] =
        std::array::from_fn(|n| -(grad_at[n].clone() + a_s[n].diff(coord::T3)));
    let b_oracle = curl3(a_s);
    entries.push(CheckEntry::exact("electric-from-potential", e == e_oracle));
    entries.push(CheckEntry::exact("magnetic-from-potential", b == b_oracle));

    let source_mv = vector_derivative(&f_mv);
    let trivector = source_mv.grade_project(3)?;
    entries.push(
        CheckEntry::exact("source-grade-one", trivector.is_zero()).with_detail(
            "second derivative of the field must have no trivector part".to_string(),
        ),
    );
    let rho = signed(&source_mv, T3);
    let j: [TrigPoly<C>; 3] = std::array::from_fn(|n| signed(&source_mv, s_gen(n)));

    let residuals = [
        ("gauss-law", div3(&e) - rho.clone()),
        ("no-monopole", div3(&b)),
    ];
    for (name, r) in residuals {
        let entry = CheckEntry::exact(name, r.is_zero());
        entries.push(if r.is_zero() {
            entry
        } else {
            entry.with_detail(format!("residual {r}"))
        });
    }
    let curl_e = curl3(&e);
    let curl_b = curl3(&b);
    let faraday: [TrigPoly<C>; 3] =
        std::array::from_fn(|n| curl_e[n].clone() + b[n].diff(coord::T3));
    let ampere: [TrigPoly<C>; 3] = std::array::from_fn(|n| {
        curl_b[n].clone() - e[n].diff(coord::T3) - j[n].clone()
    });
    entries.push(CheckEntry::exact(
        "faraday",
        faraday.iter().all(TrigPoly::is_zero),
    ));
    entries.push(CheckEntry::exact(
        "ampere",
        ampere.iter().all(TrigPoly::is_zero),
    ));

    Ok((
        StaFields {
            e,
            b,
            rho,
            j,
            lorenz_scalar,
        },
        entries,
    ))
}

/// Largest sampled magnitude of a complex vector field over a grid.
pub fn max_sampled_norm<C: Coeff>(v: &[Cx<C>; 3], points: &[crate::symbolic::Point]) -> f64 {
    let mut max = 0.0f64;
    for pt in points {
        for comp in v {
            let val = comp.eval(pt);
            max = max.max(val.norm());
        }
    }
    max
}
