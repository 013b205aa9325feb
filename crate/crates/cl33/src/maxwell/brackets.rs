//! Decomposition of the first-order derivative into four blade families.
//!
//! Applying the vector derivative to an assembled odd field lands in the
//! even subalgebra, whose 32 blades split into four disjoint cosets of
//! the unit group {1, i, I, S}: the scalar family, the three
//! space/principal-time families, the transverse/principal-time family,
//! and the three transverse/space families. Each family's ring content
//! can be computed independently with ordinary vector calculus on the
//! source slots, which is the oracle the engine is tested against.

use crate::algebra::{basis, gen_idx, s_gen, Blade, I_SPACETIME, I_TRANSVERSE, PSEUDOSCALAR, T1, T2, T3};
use crate::error::{Error, Result};
use crate::scalar::Coeff;
use crate::symbolic::{coord, diff, Field};

use super::bicomplex::{bc_curl, bc_div, bc_grad, Bicomplex};
use super::spec::OddFieldSpec;

/// The four commuting unit blades spanning each family.
pub fn unit_blades() -> [Blade; 4] {
    [Blade::ONE, I_TRANSVERSE, I_SPACETIME, PSEUDOSCALAR]
}

pub fn scalar_base() -> Blade {
    Blade::ONE
}

/// Base blade of the n-th space/principal-time family, written order sn, t3.
pub fn space_time_base(n: usize) -> Blade {
    Blade::from_generators(&[gen_idx::S1 + n, gen_idx::T3])
}

/// Base blade of the transverse/principal-time family, written order t1, t3.
pub fn time_time_base() -> Blade {
    Blade::from_generators(&[gen_idx::T1, gen_idx::T3])
}

/// Base blade of the n-th transverse/space family, written order t1, sn.
pub fn time_space_base(n: usize) -> Blade {
    Blade::from_generators(&[gen_idx::T1, gen_idx::S1 + n])
}

/// The four blade masks making up the family of `base`.
pub fn family_masks(base: Blade) -> [u8; 4] {
    unit_blades().map(|u| base.mask() ^ u.mask())
}

/// Masks of all four families in order scalar, space-time, time-time,
/// time-space; together they cover the 32 even masks exactly once.
pub fn all_family_masks() -> [Vec<u8>; 4] {
    let space_time: Vec<u8> = (0..3)
        .flat_map(|n| family_masks(space_time_base(n)))
        .collect();
    let time_space: Vec<u8> = (0..3)
        .flat_map(|n| family_masks(time_space_base(n)))
        .collect();
    [
        family_masks(scalar_base()).to_vec(),
        space_time,
        family_masks(time_time_base()).to_vec(),
        time_space,
    ]
}

/// An even field split along the four families.
#[derive(Clone, PartialEq, Debug)]
pub struct BracketDecomposition<C: Coeff> {
    pub scalar: Field<C>,
    pub space_time: Field<C>,
    pub time_time: Field<C>,
    pub time_space: Field<C>,
}

impl<C: Coeff> BracketDecomposition<C> {
    /// Sum of the four projections; equals the decomposed field.
    pub fn total(&self) -> Field<C> {
        &(&self.scalar + &self.space_time) + &(&self.time_time + &self.time_space)
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
            && self.space_time.is_zero()
            && self.time_time.is_zero()
            && self.time_space.is_zero()
    }

    pub fn scalar_content(&self) -> Bicomplex<C> {
        family_content(&self.scalar, scalar_base())
    }

    pub fn space_time_content(&self) -> [Bicomplex<C>; 3] {
        std::array::from_fn(|n| family_content(&self.space_time, space_time_base(n)))
    }

    pub fn time_time_content(&self) -> Bicomplex<C> {
        family_content(&self.time_time, time_time_base())
    }

    pub fn time_space_content(&self) -> [Bicomplex<C>; 3] {
        std::array::from_fn(|n| family_content(&self.time_space, time_space_base(n)))
    }
}

/// Split an even field along the four families.
///
/// Fails when the field has odd-grade content, which means it was not
/// produced by differentiating an odd field.
pub fn bracket_decompose<C: Coeff>(dv: &Field<C>) -> Result<BracketDecomposition<C>> {
    let odd = dv.odd_part();
    if !odd.is_zero() {
        let masks: Vec<String> = odd
            .iter_nonzero()
            .map(|(m, _)| Blade::new(m).text())
            .collect();
        return Err(Error::Parity(format!(
            "derivative has odd-grade content on {}; the source field was not odd",
            masks.join(", ")
        )));
    }
    let [scalar, space_time, time_time, time_space] = all_family_masks();
    Ok(BracketDecomposition {
        scalar: dv.project_masks(&scalar),
        space_time: dv.project_masks(&space_time),
        time_time: dv.project_masks(&time_time),
        time_space: dv.project_masks(&time_space),
    })
}

/// Ring content of one family of `field`, read off relative to `base`.
pub fn family_content<C: Coeff>(field: &Field<C>, base: Blade) -> Bicomplex<C> {
    let [re, im, jm, km] = unit_blades().map(|u| {
        let prod = base.product(&u);
        let coeff = field.coeff(prod.mask()).clone();
        if prod.sign() < 0 {
            -coeff
        } else {
            coeff
        }
    });
    Bicomplex::new(re, im, jm, km)
}

/// The field `base * content` with the content on the unit blades.
pub fn content_field<C: Coeff>(base: Blade, content: &Bicomplex<C>) -> Field<C> {
    &basis(base) * &content.as_field()
}

/// The four family contents computed from the spec slots by vector
/// calculus alone, without any blade products.
#[derive(Clone, PartialEq, Debug)]
pub struct BracketContents<C: Coeff> {
    pub scalar: Bicomplex<C>,
    pub space_time: [Bicomplex<C>; 3],
    pub time_time: Bicomplex<C>,
    pub time_space: [Bicomplex<C>; 3],
}

impl<C: Coeff> BracketContents<C> {
    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
            && self.space_time.iter().all(Bicomplex::is_zero)
            && self.time_time.is_zero()
            && self.time_space.iter().all(Bicomplex::is_zero)
    }

    /// Assemble the contents back onto their family bases.
    pub fn assemble(&self) -> Field<C> {
        let mut total = content_field(scalar_base(), &self.scalar);
        for n in 0..3 {
            total = &total + &content_field(space_time_base(n), &self.space_time[n]);
            total = &total + &content_field(time_space_base(n), &self.time_space[n]);
        }
        &total + &content_field(time_time_base(), &self.time_time)
    }

    /// Coefficient mass of all contents, for residual reporting.
    pub fn coeff_norm(&self) -> f64 {
        self.scalar.coeff_norm()
            + self.time_time.coeff_norm()
            + self
                .space_time
                .iter()
                .chain(self.time_space.iter())
                .map(Bicomplex::coeff_norm)
                .sum::<f64>()
    }
}

/// Vector-calculus oracle for the family contents of the derivative of
/// the assembled spec:
///
/// - scalar:      div K + dt3 U + nabla_T V
/// - space-time:  curl(I K) - grad U - dt3 K + nabla_T W
/// - time-time:   nabla_T* U - div W - dt3 V
/// - time-space:  nabla_T* K + curl(I W) + grad V + dt3 W
pub fn bracket_contents<C: Coeff>(spec: &OddFieldSpec<C>) -> BracketContents<C> {
    let ik: [Bicomplex<C>; 3] = std::array::from_fn(|n| spec.k_s[n].mul_spacetime());
    let iw: [Bicomplex<C>; 3] = std::array::from_fn(|n| spec.w_st[n].mul_spacetime());
    let curl_ik = bc_curl(&ik);
    let curl_iw = bc_curl(&iw);
    let grad_u = bc_grad(&spec.u);
    let grad_v = bc_grad(&spec.v_t);

    let scalar = &(&bc_div(&spec.k_s) + &spec.u.diff(coord::T3)) + &spec.v_t.nabla_t();
    let space_time = std::array::from_fn(|n| {
        &(&curl_ik[n] - &grad_u[n]) - &(&spec.k_s[n].diff(coord::T3) - &spec.w_st[n].nabla_t())
    });
    let time_time =
        &(&spec.u.nabla_t_star() - &bc_div(&spec.w_st)) - &spec.v_t.diff(coord::T3);
    let time_space = std::array::from_fn(|n| {
        &(&spec.k_s[n].nabla_t_star() + &curl_iw[n])
            + &(&grad_v[n] + &spec.w_st[n].diff(coord::T3))
    });

    BracketContents {
        scalar,
        space_time,
        time_time,
        time_space,
    }
}

/// Left-multiply by the transverse gradient vector operator
/// (gamma_t1 dt1 + gamma_t2 dt2).
///
/// On the time-time and time-space families this contracts the leading
/// gamma_t1 away: the results sit on gamma_t3 and gamma_sn with the
/// original contents mapped through nabla_T.
pub fn transverse_gradient_op<C: Coeff>(field: &Field<C>) -> Field<C> {
    let dt1 = diff(field, coord::T1);
    let dt2 = diff(field, coord::T2);
    &(&basis(T1) * &dt1) + &(&basis(T2) * &dt2)
}

/// The reduced constraint contents after the transverse gradient has been
/// applied: the time-time content on base gamma_t3 and the time-space
/// contents on bases gamma_sn, each original term mapped through nabla_T.
pub fn reduced_contents<C: Coeff>(spec: &OddFieldSpec<C>) -> (Bicomplex<C>, [Bicomplex<C>; 3]) {
    let ntv = spec.v_t.nabla_t();
    let ntw: [Bicomplex<C>; 3] = std::array::from_fn(|n| spec.w_st[n].nabla_t());
    let intw: [Bicomplex<C>; 3] = std::array::from_fn(|n| ntw[n].mul_spacetime());
    let curl_intw = bc_curl(&intw);
    let grad_ntv = bc_grad(&ntv);

    let time = &(&spec.u.nabla_t_star().nabla_t() - &bc_div(&ntw)) - &ntv.diff(coord::T3);
    let space = std::array::from_fn(|n| {
        &(&spec.k_s[n].nabla_t_star().nabla_t() + &curl_intw[n])
            + &(&grad_ntv[n] + &ntw[n].diff(coord::T3))
    });
    (time, space)
}

/// Assemble reduced contents onto their odd bases gamma_t3 and gamma_sn.
pub fn reduced_field<C: Coeff>(time: &Bicomplex<C>, space: &[Bicomplex<C>; 3]) -> Field<C> {
    let mut total = &basis(T3) * &time.as_field();
    for n in 0..3 {
        total = &total + &(&basis(s_gen(n)) * &space[n].as_field());
    }
    total
}
