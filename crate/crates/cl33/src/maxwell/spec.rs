//! Odd-grade source data and its assembly into a multivector field.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{basis, gen_idx, s_gen, Blade, T1, T3};
use crate::scalar::{rat, Coeff, Rat};
use crate::symbolic::{coord, Field, LinearForm, TrigFactor, TrigPoly, COORD_COUNT};

use super::bicomplex::Bicomplex;

/// Ring-valued content on the four odd base families: three spatial
/// vector slots, the principal-time scalar, the transverse-time scalar,
/// and three mixed trivector slots.
#[derive(Clone, PartialEq, Debug)]
pub struct OddFieldSpec<C> {
    pub k_s: [Bicomplex<C>; 3],
    pub u: Bicomplex<C>,
    pub v_t: Bicomplex<C>,
    pub w_st: [Bicomplex<C>; 3],
}

/// Base blade for the n-th mixed slot, in written order t1, sn, t3.
pub fn w_base(n: usize) -> Blade {
    Blade::from_generators(&[gen_idx::T1, gen_idx::S1 + n, gen_idx::T3])
}

impl<C: Coeff> OddFieldSpec<C> {
    pub fn zero() -> Self {
        OddFieldSpec {
            k_s: std::array::from_fn(|_| Bicomplex::zero()),
            u: Bicomplex::zero(),
            v_t: Bicomplex::zero(),
            w_st: std::array::from_fn(|_| Bicomplex::zero()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.k_s.iter().all(Bicomplex::is_zero)
            && self.u.is_zero()
            && self.v_t.is_zero()
            && self.w_st.iter().all(Bicomplex::is_zero)
    }

    /// The odd multivector field carrying this data on its base blades.
    pub fn assemble(&self) -> Field<C> {
        let mut total = Field::zero();
        for n in 0..3 {
            total = &total + &(&basis(s_gen(n)) * &self.k_s[n].as_field());
            total = &total + &(&basis(w_base(n)) * &self.w_st[n].as_field());
        }
        total = &total + &(&basis(T3) * &self.u.as_field());
        total = &total + &(&basis(T1) * &self.v_t.as_field());
        total
    }

    /// The spec with every slot multiplied by S. Assembles to the
    /// original field times the grade-6 unit, and swaps the roles of the
    /// plain and pseudo sectors.
    pub fn pseudo(&self) -> Self {
        self.map_slots(Bicomplex::mul_pseudo)
    }

    pub fn map_slots(&self, f: impl Fn(&Bicomplex<C>) -> Bicomplex<C>) -> Self {
        OddFieldSpec {
            k_s: std::array::from_fn(|n| f(&self.k_s[n])),
            u: f(&self.u),
            v_t: f(&self.v_t),
            w_st: std::array::from_fn(|n| f(&self.w_st[n])),
        }
    }

    /// Largest slot coefficient magnitude, for reporting.
    pub fn coeff_norm(&self) -> f64 {
        self.k_s.iter().map(Bicomplex::coeff_norm).sum::<f64>()
            + self.u.coeff_norm()
            + self.v_t.coeff_norm()
            + self.w_st.iter().map(Bicomplex::coeff_norm).sum::<f64>()
    }
}

impl OddFieldSpec<Rat> {
    /// Deterministic pseudo-random spec with degree at most two per slot
    /// and occasional trig factors with small integer phases.
    pub fn random(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut slot = || random_bicomplex(&mut rng);
        OddFieldSpec {
            k_s: std::array::from_fn(|_| slot()),
            u: slot(),
            v_t: slot(),
            w_st: std::array::from_fn(|_| slot()),
        }
    }
}

fn random_bicomplex(rng: &mut ChaCha8Rng) -> Bicomplex<Rat> {
    Bicomplex::new(
        random_poly(rng),
        random_poly(rng),
        random_poly(rng),
        random_poly(rng),
    )
}

fn random_poly(rng: &mut ChaCha8Rng) -> TrigPoly<Rat> {
    if rng.gen_bool(0.45) {
        return TrigPoly::zero();
    }
    let mut acc = TrigPoly::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let mut num: i64 = rng.gen_range(-4..=4);
        if num == 0 {
            num = 1;
        }
        let c = rat(num, rng.gen_range(1..=3));
        if rng.gen_bool(0.2) {
            let mut phase = LinearForm::zero();
            for _ in 0..rng.gen_range(1..=2) {
                let k = rng.gen_range(0..COORD_COUNT);
                phase.coeffs[k] = rat(rng.gen_range(1..=2), 1);
            }
            if phase.is_zero() {
                phase.coeffs[coord::T3] = rat(1, 1);
            }
            let factor = if rng.gen_bool(0.5) {
                TrigFactor::Cos(phase)
            } else {
                TrigFactor::Sin(phase)
            };
            acc = acc + TrigPoly::term(c, [0; COORD_COUNT], factor);
        } else {
            let mut exps = [0u8; COORD_COUNT];
            for _ in 0..rng.gen_range(0..=2) {
                exps[rng.gen_range(0..COORD_COUNT)] += 1;
            }
            acc = acc + TrigPoly::monomial(c, exps);
        }
    }
    acc
}
