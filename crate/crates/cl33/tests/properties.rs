//! Randomized laws. The blade algebra and the symbolic coefficients are
//! exercised over exact rationals, so these assert equality outright;
//! the floating-point pipelines get scaled tolerances instead.

use num::complex::Complex64;
use proptest::prelude::*;

use cl33::algebra::{Multivector, GEN_COUNT};
use cl33::contour::{argument_integral, conjugate_charge, ContourSpec, RationalFunctionSpec};
use cl33::maxwell::{all_family_masks, curl3, div3, grad3};
use cl33::scalar::{rat, Rat};
use cl33::symbolic::{
    klein_gordon_split, spatial_reflect, vector_derivative, Field, LinearForm, TrigPoly,
    COORD_COUNT,
};
use cl33::transforms::{
    lorentz_boost, spatial_rotation, transverse_rotation, Handedness, Rotor,
};
use cl33::wavepacket::{
    boost_packet, check_plane_wave, packet_energy_quantum, plane_wave_field, window_frequency,
    PacketSpec, PlaneWaveSpec,
};

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn rat_multivector() -> impl Strategy<Value = Multivector<Rat>> {
    proptest::collection::vec((0u8..64, small_rat()), 0..5).prop_map(|terms| {
        let mut m = Multivector::zero();
        for (mask, c) in terms {
            *m.coeff_mut(mask) = c;
        }
        m
    })
}

fn masked_multivector(parity: u32) -> impl Strategy<Value = Multivector<Rat>> {
    let masks: Vec<u8> = (0u8..64).filter(|m| m.count_ones() % 2 == parity).collect();
    proptest::collection::vec((proptest::sample::select(masks), small_rat()), 1..5).prop_map(
        |terms| {
            let mut m = Multivector::zero();
            for (mask, c) in terms {
                *m.coeff_mut(mask) = c;
            }
            m
        },
    )
}

fn small_form() -> impl Strategy<Value = LinearForm<Rat>> {
    (proptest::array::uniform6(-2i64..=2), -2i64..=2).prop_map(|(coeffs, constant)| LinearForm {
        coeffs: coeffs.map(|n| rat(n, 1)),
        constant: rat(constant, 1),
    })
}

fn trig_poly() -> impl Strategy<Value = TrigPoly<Rat>> {
    let term = prop_oneof![
        (small_rat(), proptest::array::uniform6(0u8..=2))
            .prop_map(|(c, exps)| TrigPoly::monomial(c, exps)),
        small_form().prop_map(TrigPoly::cos),
        small_form().prop_map(TrigPoly::sin),
    ];
    proptest::collection::vec(term, 1..3)
        .prop_map(|terms| terms.into_iter().fold(TrigPoly::zero(), |acc, t| acc + t))
}

fn trig_triple() -> impl Strategy<Value = [TrigPoly<Rat>; 3]> {
    (trig_poly(), trig_poly(), trig_poly()).prop_map(|(a, b, c)| [a, b, c])
}

fn odd_trig_field() -> impl Strategy<Value = Field<Rat>> {
    let masks: Vec<u8> = (0u8..64).filter(|m| m.count_ones() % 2 == 1).collect();
    proptest::collection::vec((proptest::sample::select(masks), trig_poly()), 1..3).prop_map(
        |terms| {
            let mut f = Field::zero();
            for (mask, p) in terms {
                *f.coeff_mut(mask) = p;
            }
            f
        },
    )
}

proptest! {
    #[test]
    fn multivector_product_associates(
        a in rat_multivector(),
        b in rat_multivector(),
        c in rat_multivector(),
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multivector_product_distributes(
        a in rat_multivector(),
        b in rat_multivector(),
        c in rat_multivector(),
    ) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn grade_parity_multiplies_like_signs(
        even in masked_multivector(0),
        odd in masked_multivector(1),
        other_even in masked_multivector(0),
        other_odd in masked_multivector(1),
    ) {
        prop_assert!((&even * &other_even).odd_part().is_zero());
        prop_assert!((&odd * &other_odd).odd_part().is_zero());
        prop_assert!((&even * &odd).even_part().is_zero());
    }

    #[test]
    fn reversal_is_an_antiautomorphism(a in rat_multivector(), b in rat_multivector()) {
        prop_assert_eq!((&a * &b).reverse(), &b.reverse() * &a.reverse());
    }

    #[test]
    fn spatial_reflection_is_an_automorphism(a in rat_multivector(), b in rat_multivector()) {
        prop_assert_eq!(
            spatial_reflect(&(&a * &b)),
            &spatial_reflect(&a) * &spatial_reflect(&b)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trig_product_associates(f in trig_poly(), g in trig_poly(), h in trig_poly()) {
        prop_assert_eq!(
            (f.clone() * g.clone()) * h.clone(),
            f * (g * h)
        );
    }

    #[test]
    fn trig_product_commutes(f in trig_poly(), g in trig_poly()) {
        prop_assert_eq!(f.clone() * g.clone(), g * f);
    }

    #[test]
    fn differentiation_obeys_leibniz(
        f in trig_poly(),
        g in trig_poly(),
        k in 0..COORD_COUNT,
    ) {
        prop_assert_eq!(
            (f.clone() * g.clone()).diff(k),
            f.diff(k) * g.clone() + f * g.diff(k)
        );
    }

    #[test]
    fn mixed_partials_commute(f in trig_poly(), a in 0..COORD_COUNT, b in 0..COORD_COUNT) {
        prop_assert_eq!(f.diff(a).diff(b), f.diff(b).diff(a));
    }

    #[test]
    fn evaluation_respects_products(
        f in trig_poly(),
        g in trig_poly(),
        pt in proptest::array::uniform6(-1.0f64..1.0),
    ) {
        let lhs = (f.clone() * g.clone()).eval(&pt);
        let rhs = f.eval(&pt) * g.eval(&pt);
        let scale = 1.0 + f.coeff_l1() * g.coeff_l1();
        prop_assert!((lhs - rhs).abs() <= 1e-9 * scale);
    }

    #[test]
    fn curl_of_a_gradient_vanishes(s in trig_poly()) {
        prop_assert!(curl3(&grad3(&s)).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn divergence_of_a_curl_vanishes(v in trig_triple()) {
        prop_assert!(div3(&curl3(&v)).is_zero());
    }

    #[test]
    fn second_derivative_splits_into_wave_and_mass(field in odd_trig_field()) {
        let twice = vector_derivative(&vector_derivative(&field));
        let (wave, mass) = klein_gordon_split(&field);
        prop_assert_eq!(&twice, &(&wave + &mass));

        let mut boxed = Field::zero();
        for k in 0..COORD_COUNT {
            let second = field.map(|p| p.diff(k).diff(k));
            boxed = if k < 3 { &boxed + &second } else { &boxed - &second };
        }
        prop_assert_eq!(&twice, &boxed);
    }
}

fn f64_multivector() -> impl Strategy<Value = Multivector<f64>> {
    proptest::collection::vec((0u8..64, -1.0f64..1.0), 1..4).prop_map(|terms| {
        let mut m = Multivector::zero();
        for (mask, c) in terms {
            *m.coeff_mut(mask) = c;
        }
        m
    })
}

fn unit_direction() -> impl Strategy<Value = [f64; 3]> {
    proptest::array::uniform3(-1.0f64..1.0).prop_map(|v| {
        let norm = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
        if norm > 0.3 {
            v.map(|c| c / norm)
        } else {
            [0.0, 0.0, 1.0]
        }
    })
}

fn sandwich_gap(r: &Rotor<f64>, a: &Multivector<f64>, b: &Multivector<f64>) -> f64 {
    let joint = r.sandwich(&(a * b));
    let split = &r.sandwich(a) * &r.sandwich(b);
    (&joint - &split).max_abs()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rotors_invert_and_act_multiplicatively(
        theta in -3.1f64..3.1,
        phi in -3.1f64..3.1,
        alpha in -1.0f64..1.0,
        axes in proptest::sample::subsequence(vec![0usize, 1, 2], 2),
        b in unit_direction(),
        x in f64_multivector(),
        y in f64_multivector(),
    ) {
        let rotors = [
            transverse_rotation(theta),
            spatial_rotation(axes[0], axes[1], phi).unwrap(),
            lorentz_boost(alpha, b).unwrap(),
        ];
        for r in &rotors {
            prop_assert!(r.unit_residual() < 1e-12);
            prop_assert!(sandwich_gap(r, &x, &y) < 1e-10);
            let moved = r.sandwich(&x);
            prop_assert!((moved.coeff(0) - x.coeff(0)).abs() < 1e-10);
        }
    }
}

fn lattice_points() -> Vec<Complex64> {
    let mut pts = Vec::new();
    for i in -2i32..=2 {
        for j in -2i32..=2 {
            pts.push(Complex64::new(0.55 * i as f64, 0.55 * j as f64));
        }
    }
    pts
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn contour_counts_are_exact_on_lattice_configurations(
        (positions, split) in proptest::sample::subsequence(lattice_points(), 0..=6)
            .prop_flat_map(|v| {
                let len = v.len();
                (Just(v), 0..=len)
            }),
        re in 0.5f64..2.0,
        im in -1.0f64..1.0,
    ) {
        let zeros = positions[..split].to_vec();
        let poles = positions[split..].to_vec();
        let q = RationalFunctionSpec::new(zeros.clone(), poles.clone(), Complex64::new(re, im))
            .unwrap();
        let contour = ContourSpec::new(Complex64::new(0.0, 0.0), 2.0, 2048).unwrap();

        let counted = argument_integral(&q, &contour).unwrap();
        prop_assert_eq!(counted.zeros_inside as usize, zeros.len());
        prop_assert_eq!(counted.poles_inside as usize, poles.len());
        prop_assert_eq!(counted.net, poles.len() as i64 - zeros.len() as i64);
        prop_assert!(counted.residual < 1e-6);

        let mirrored = conjugate_charge(&q, &contour).unwrap();
        prop_assert_eq!(mirrored.net, -counted.net);
    }
}

fn transverse_wave() -> impl Strategy<Value = PlaneWaveSpec> {
    (
        unit_direction(),
        0.5f64..3.0,
        proptest::array::uniform3((-1.0f64..1.0, -1.0f64..1.0)),
    )
        .prop_map(|(direction, magnitude, raw)| {
            let raw: [Complex64; 3] = raw.map(|(re, im)| Complex64::new(re, im));
            let along: Complex64 = (0..3).map(|n| raw[n] * direction[n]).sum();
            let mut amp: [Complex64; 3] =
                std::array::from_fn(|n| raw[n] - along * direction[n]);
            if amp.iter().map(|a| a.norm()).sum::<f64>() < 0.3 {
                let fallback = if direction[0].abs() < 0.9 {
                    [1.0, 0.0, 0.0]
                } else {
                    [0.0, 1.0, 0.0]
                };
                let along_f: f64 = (0..3).map(|n| fallback[n] * direction[n]).sum();
                amp = std::array::from_fn(|n| {
                    Complex64::new(fallback[n] - along_f * direction[n], 0.0)
                });
            }
            let k = direction.map(|c| c * magnitude);
            PlaneWaveSpec::new(amp, k, Handedness::Right).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn conjugating_a_wave_twice_restores_it(spec in transverse_wave()) {
        prop_assert_eq!(spec.conjugated().conjugated(), spec);
    }

    #[test]
    fn random_right_handed_waves_verify(spec in transverse_wave()) {
        let report = check_plane_wave(&plane_wave_field(&spec), 1e-9).unwrap();
        prop_assert!(report.passed());
    }

    #[test]
    fn energy_quanta_count_the_rung(tau0 in 0.25f64..4.0, rung in 1u32..=5) {
        let spec = PacketSpec::resonant(rung, tau0, [1.0, 0.0, 0.0], Complex64::new(1.0, 0.0))
            .unwrap();
        let quantum = packet_energy_quantum(&spec).unwrap();
        prop_assert!((quantum - rung as f64).abs() < 1e-12 * (1.0 + rung as f64));
    }

    #[test]
    fn boosts_rescale_but_keep_the_quantum(
        tau0 in 0.25f64..4.0,
        rung in 1u32..=5,
        alpha in -1.0f64..1.0,
    ) {
        let spec = PacketSpec::resonant(rung, tau0, [1.0, 0.0, 0.0], Complex64::new(1.0, 0.0))
            .unwrap();
        let boosted = boost_packet(&spec, alpha);
        let doppler = alpha.exp();
        prop_assert!((boosted.f_n - spec.f_n * doppler).abs() < 1e-12 * spec.f_n * doppler);
        prop_assert!((boosted.f_g - spec.f_g * doppler).abs() < 1e-12 * spec.f_g * doppler);

        let before = (spec.f_n - spec.f_g) * spec.tau0;
        let after = (boosted.f_n - boosted.f_g) * boosted.tau0;
        prop_assert!((before - after).abs() < 1e-12 * (1.0 + before.abs()));

        let possible = window_frequency(boosted.tau0).unwrap();
        prop_assert!((boosted.f_g - possible).abs() < 1e-12 * possible);
    }
}

#[test]
fn bracket_families_partition_the_even_masks() {
    let families = all_family_masks();
    let mut seen = [false; 64];
    let mut count = 0;
    for family in &families {
        for &mask in family {
            assert_eq!(mask.count_ones() % 2, 0, "family mask {mask} is odd");
            assert!(!seen[mask as usize], "mask {mask} claimed twice");
            seen[mask as usize] = true;
            count += 1;
        }
    }
    assert_eq!(count, 32);
    assert_eq!(families[0].len(), 4);
    assert_eq!(families[1].len(), 12);
    assert_eq!(families[2].len(), 4);
    assert_eq!(families[3].len(), 12);
}

#[test]
fn generator_count_is_fixed() {
    assert_eq!(GEN_COUNT, 6);
    assert_eq!(COORD_COUNT, 6);
}
