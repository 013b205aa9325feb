//! From one vanishing first-order derivative to the classic field
//! equations.
//!
//! An odd multivector field carries slot data (K, U, V, W); its vector
//! derivative lands in the even subalgebra and splits into four blade
//! families whose contents are plain vector-calculus expressions in the
//! slots. Demanding that each family vanishes yields, after applying the
//! transverse operators, the divergence and curl equations with charge
//! and current, a conserved continuity relation, potentials with a gauge
//! freedom, and a pseudo sector that mirrors the plain one behind the
//! grade-6 unit.

mod bicomplex;
mod brackets;
mod fields;
mod solutions;
mod spec;

pub use bicomplex::{
    bc_curl, bc_div, bc_grad, curl3, cx_curl, cx_div, cx_grad, div3, grad3, Bicomplex, Cx,
};
pub use brackets::{
    all_family_masks, bracket_contents, bracket_decompose, content_field, family_content,
    family_masks, reduced_contents, reduced_field, scalar_base, space_time_base,
    time_space_base, time_time_base, transverse_gradient_op, unit_blades,
    BracketContents, BracketDecomposition,
};
pub use fields::{
    check_continuity, check_maxwell, check_maxwell_primed, check_potentials,
    check_pseudo_duality, extract_fields, max_sampled_norm, maxwell_residuals,
    potentials_from, solve_gauge, sta_regression, wave_op, MaxwellFields, MaxwellResiduals,
    Potentials, StaFields,
};
pub use solutions::{
    harmonic_v_gauge, harmonic_v_spec, magnetostatic_spec, plane_wave_spec,
    spec_from_sta_potentials, static_charge_spec,
};
pub use spec::{w_base, OddFieldSpec};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{basis, Blade, PSEUDOSCALAR, T1};
    use crate::report::Status;
    use crate::scalar::{rat, rint, Rat};
    use crate::symbolic::{coord, vector_derivative, TrigPoly, COORD_COUNT};

    fn xp(k: usize) -> TrigPoly<Rat> {
        TrigPoly::coordinate(k)
    }

    fn mono(c: Rat, spec: &[(usize, u8)]) -> TrigPoly<Rat> {
        let mut exps = [0u8; COORD_COUNT];
        for (k, e) in spec {
            exps[*k] = *e;
        }
        TrigPoly::monomial(c, exps)
    }

    #[test]
    fn ring_multiplication_matches_the_blade_embedding() {
        let p = Bicomplex::new(
            xp(coord::T1),
            mono(rat(2, 1), &[(coord::X1, 1)]),
            TrigPoly::constant(rat(-1, 2)),
            xp(coord::T3),
        );
        let q = Bicomplex::new(
            TrigPoly::one(),
            xp(coord::X2),
            xp(coord::T2),
            TrigPoly::constant(rat(3, 1)),
        );
        let direct = (&p * &q).as_field();
        let embedded = &p.as_field() * &q.as_field();
        assert_eq!(direct, embedded);
        assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn unit_shuffles_match_full_multiplication() {
        let p = Bicomplex::new(xp(coord::T1), xp(coord::T2), xp(coord::X1), xp(coord::X2));
        let i = Bicomplex::<Rat>::new(
            TrigPoly::zero(),
            TrigPoly::one(),
            TrigPoly::zero(),
            TrigPoly::zero(),
        );
        let cap_i = Bicomplex::<Rat>::new(
            TrigPoly::zero(),
            TrigPoly::zero(),
            TrigPoly::one(),
            TrigPoly::zero(),
        );
        let s = Bicomplex::<Rat>::new(
            TrigPoly::zero(),
            TrigPoly::zero(),
            TrigPoly::zero(),
            TrigPoly::one(),
        );
        assert_eq!(p.mul_i(), &p * &i);
        assert_eq!(p.mul_spacetime(), &p * &cap_i);
        assert_eq!(p.mul_pseudo(), &p * &s);
        assert_eq!(s.mul_pseudo(), Bicomplex::one());
        assert_eq!(i.mul_spacetime(), s);
    }

    #[test]
    fn assembled_spec_is_odd_and_base_cases_hold() {
        assert!(OddFieldSpec::<Rat>::zero().assemble().is_zero());

        let mut unit_u = OddFieldSpec::<Rat>::zero();
        unit_u.u = Bicomplex::one();
        assert_eq!(unit_u.assemble(), basis(crate::algebra::T3));

        let spec = OddFieldSpec::random(7);
        let assembled = spec.assemble();
        assert!(assembled.even_part().is_zero());
        assert!(!assembled.is_zero());
    }

    #[test]
    fn pseudo_spec_assembles_to_the_field_times_the_grade_six_unit() {
        let spec = OddFieldSpec::random(11);
        let lhs = spec.pseudo().assemble();
        let rhs = &spec.assemble() * &basis(PSEUDOSCALAR);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn family_masks_partition_the_even_subalgebra() {
        let mut seen = std::collections::BTreeSet::new();
        for family in all_family_masks() {
            for mask in family {
                assert_eq!(Blade::new(mask).grade() % 2, 0);
                assert!(seen.insert(mask), "mask {mask:#08b} assigned twice");
            }
        }
        assert_eq!(seen.len(), 32);
    }

    #[test]
    fn derivative_decomposition_matches_the_vector_calculus_oracle() {
        for seed in [0u64, 1, 2, 3, 17] {
            let spec = OddFieldSpec::random(seed);
            let dv = vector_derivative(&spec.assemble());
            let parts = bracket_decompose(&dv).unwrap();
            assert_eq!(parts.total(), dv, "partition incomplete for seed {seed}");

            let oracle = bracket_contents(&spec);
            assert_eq!(parts.scalar_content(), oracle.scalar, "seed {seed}");
            assert_eq!(parts.time_time_content(), oracle.time_time, "seed {seed}");
            for n in 0..3 {
                assert_eq!(parts.space_time_content()[n], oracle.space_time[n]);
                assert_eq!(parts.time_space_content()[n], oracle.time_space[n]);
            }
            assert_eq!(oracle.assemble(), dv, "content reassembly for seed {seed}");
        }
    }

    #[test]
    fn decomposing_an_odd_field_is_a_parity_error() {
        let err = bracket_decompose(&basis::<TrigPoly<Rat>>(T1)).unwrap_err();
        assert!(matches!(err, crate::error::Error::Parity(_)));
    }

    #[test]
    fn transverse_gradient_contracts_the_time_families() {
        let spec = OddFieldSpec::random(23);
        let dv = vector_derivative(&spec.assemble());
        let parts = bracket_decompose(&dv).unwrap();
        let time_families = &parts.time_time + &parts.time_space;
        let mechanical = transverse_gradient_op(&time_families);
        let (time, space) = reduced_contents(&spec);
        assert_eq!(mechanical, reduced_field(&time, &space));
    }

    #[test]
    fn single_slot_specs_land_in_the_expected_families() {
        // Principal-time slot with pure t3 dependence.
        let mut spec = OddFieldSpec::<Rat>::zero();
        spec.u = Bicomplex::real(mono(rat(1, 1), &[(coord::T3, 2)]));
        let parts = bracket_decompose(&vector_derivative(&spec.assemble())).unwrap();
        assert_eq!(
            parts.scalar_content(),
            Bicomplex::real(mono(rat(2, 1), &[(coord::T3, 1)]))
        );
        assert!(parts.space_time.is_zero());
        assert!(parts.time_space.is_zero());

        // Spatial slot (x2, 0, 0): only the curl survives.
        let mut spec = OddFieldSpec::<Rat>::zero();
        spec.k_s[0] = Bicomplex::real(xp(coord::X2));
        let parts = bracket_decompose(&vector_derivative(&spec.assemble())).unwrap();
        assert!(parts.scalar.is_zero(), "div (x2, 0, 0) = 0");
        let content = parts.space_time_content();
        assert!(content[0].is_zero());
        assert!(content[1].is_zero());
        assert_eq!(content[2], -&Bicomplex::real(TrigPoly::one()).mul_spacetime());
        assert!(parts.time_time.is_zero());
    }

    #[test]
    fn extraction_examples() {
        // Constant W has no transverse dependence, so F vanishes.
        let mut spec = OddFieldSpec::<Rat>::zero();
        spec.w_st[1] = Bicomplex::real(xp(coord::X1));
        let fields = extract_fields(&spec);
        assert!(fields.f_s.iter().all(Bicomplex::is_zero));

        // U = t1^2 has transverse Laplacian 2, so the charge reads -2.
        let mut spec = OddFieldSpec::<Rat>::zero();
        spec.u = Bicomplex::real(mono(rat(1, 1), &[(coord::T1, 2)]));
        let fields = extract_fields(&spec);
        assert_eq!(fields.u, Bicomplex::constant(rat(2, 1)));
        assert_eq!(fields.rho(), Cx::real(TrigPoly::constant(rat(-2, 1))));

        // V = t1 + i t2 is annihilated by the transverse Laplacian.
        let v = Bicomplex::complex(xp(coord::T1), xp(coord::T2));
        assert!(v.nabla_t().nabla_t_star().is_zero());
        assert!(v.nabla_t_star().nabla_t().is_zero());
    }

    #[test]
    fn named_solutions_have_vanishing_brackets() {
        let specs = [
            ("plane-wave", plane_wave_spec((rat(1, 1), rat(0, 1)), (rat(0, 1), rat(1, 2)), rat(2, 1))),
            ("static-charge", static_charge_spec()),
            ("magnetostatic", magnetostatic_spec()),
            ("harmonic-v", harmonic_v_spec()),
        ];
        for (name, spec) in &specs {
            let contents = bracket_contents(spec);
            assert!(contents.is_zero(), "{name} bracket contents non-zero");
            let dv = vector_derivative(&spec.assemble());
            assert!(dv.is_zero(), "{name} derivative non-zero");
        }
    }

    #[test]
    fn static_solution_reads_the_textbook_fields() {
        let fields = extract_fields(&static_charge_spec());
        let e = fields.e();
        assert_eq!(e[0], Cx::real(xp(coord::X1)));
        assert!(e[1].is_zero() && e[2].is_zero());
        assert!(fields.b().iter().all(Cx::is_zero));
        assert_eq!(fields.rho(), Cx::real(TrigPoly::one()));
        assert!(fields.j().iter().all(Cx::is_zero));

        let (residuals, entries) = check_maxwell(&fields);
        assert!(residuals.is_zero());
        assert!(entries.iter().all(|e| e.status == Status::Pass));
        assert!(check_continuity(&fields)
            .iter()
            .all(|e| e.status == Status::Pass));
    }

    #[test]
    fn magnetostatic_solution_reads_a_uniform_negative_b3() {
        let fields = extract_fields(&magnetostatic_spec());
        assert!(fields.e().iter().all(Cx::is_zero));
        let b = fields.b();
        assert!(b[0].is_zero() && b[1].is_zero());
        assert_eq!(b[2], Cx::real(TrigPoly::constant(rat(-1, 1))));
        let (residuals, _) = check_maxwell(&fields);
        assert!(residuals.is_zero());
    }

    #[test]
    fn plane_wave_satisfies_all_equations_without_sources() {
        let spec = plane_wave_spec((rat(1, 1), rat(0, 1)), (rat(0, 1), rat(0, 1)), rat(1, 1));
        let fields = extract_fields(&spec);
        assert!(fields.rho().is_zero());
        assert!(fields.j().iter().all(Cx::is_zero));
        assert!(!fields.e()[0].is_zero());
        assert!(!fields.b()[1].is_zero());
        let (residuals, _) = check_maxwell(&fields);
        assert!(residuals.is_zero());
    }

    #[test]
    fn perturbed_field_is_flagged() {
        let fields = extract_fields(&static_charge_spec());
        let doubled: [Cx<Rat>; 3] =
            std::array::from_fn(|n| &fields.e()[n] + &fields.e()[n]);
        let residuals = maxwell_residuals(&doubled, &fields.b(), &fields.rho(), &fields.j());
        assert_eq!(residuals.gauss, fields.rho());
        let entries = residuals.entries("");
        assert_eq!(entries[0].status, Status::Fail);
        assert!(entries[1..].iter().all(|e| e.status == Status::Pass));
    }

    #[test]
    fn continuity_of_handmade_sources() {
        let rho = Cx::real(xp(coord::T3));
        let j = [Cx::real(-xp(coord::X1)), Cx::zero(), Cx::zero()];
        let residual = &rho.diff(coord::T3) + &cx_div(&j);
        assert!(residual.is_zero());
    }

    #[test]
    fn potentials_with_zero_gauge_reduce_to_the_slots() {
        let spec = static_charge_spec();
        let (pots, entries) = check_potentials(&spec, &Bicomplex::zero());
        assert_eq!(pots.a_s, spec.k_s);
        assert_eq!(pots.a_t, spec.u);
        assert!(entries.iter().all(|e| e.status != Status::Fail));
    }

    #[test]
    fn harmonic_v_needs_its_quadratic_gauge() {
        let spec = harmonic_v_spec();
        let (_, entries) = check_potentials(&spec, &harmonic_v_gauge());
        assert!(
            entries.iter().all(|e| e.status != Status::Fail),
            "entries: {entries:?}"
        );

        let (_, bad) = check_potentials(&spec, &Bicomplex::zero());
        assert_eq!(bad[0].name, "gauge-equation");
        assert_eq!(bad[0].status, Status::Fail);
    }

    #[test]
    fn gauge_solver_reproduces_the_quadratic_solution() {
        let spec = harmonic_v_spec();
        let psi = solve_gauge(&spec.v_t).unwrap();
        assert_eq!(psi, harmonic_v_gauge());

        // A richer polynomial source: V = t1 x2^2 so nabla_T V = x2^2.
        let v = Bicomplex::real(mono(rat(1, 1), &[(coord::T1, 1), (coord::X2, 2)]));
        let psi = solve_gauge(&v).unwrap();
        let residual = &wave_op(&psi) - &v.nabla_t();
        assert!(residual.is_zero(), "residual {residual}");

        // Principal-time dependence exercises the opposite-sign term.
        let v = Bicomplex::real(mono(rat(3, 2), &[(coord::T1, 1), (coord::T3, 2)]));
        let psi = solve_gauge(&v).unwrap();
        assert!((&wave_op(&psi) - &v.nabla_t()).is_zero());
    }

    #[test]
    fn pseudo_duality_round_trips_every_named_solution() {
        for spec in [
            plane_wave_spec((rat(1, 1), rat(0, 1)), (rat(0, 1), rat(1, 1)), rat(1, 1)),
            static_charge_spec(),
            magnetostatic_spec(),
        ] {
            let entries = check_pseudo_duality(&spec);
            assert!(
                entries.iter().all(|e| e.status == Status::Pass),
                "entries: {entries:?}"
            );
        }
    }

    #[test]
    fn injected_monopole_is_flagged() {
        let b = [Cx::real(xp(coord::X1)), Cx::zero(), Cx::zero()];
        let e = [Cx::zero(), Cx::zero(), Cx::zero()];
        let residuals = maxwell_residuals(&e, &b, &Cx::zero(), &e.clone());
        assert!(!residuals.monopole.is_zero());
        let entries = residuals.entries("");
        assert_eq!(entries[1].name, "no-monopole");
        assert_eq!(entries[1].status, Status::Fail);
    }

    #[test]
    fn wave_identities_for_the_extracted_sources() {
        // For any spec: box u = -div B9 - dt3 A9 and
        // box k_n = (dt3 B9 + grad A9 + I curl B9)_n, where A9 and B9 are
        // the scalar and vector constraints evaluated on (u, k).
        for seed in [5u64, 9] {
            let fields = extract_fields(&OddFieldSpec::random(seed));
            let (u, k) = (&fields.u, &fields.k_s);
            let a9 = &bc_div(k) + &u.diff(coord::T3);
            let ik: [Bicomplex<Rat>; 3] = std::array::from_fn(|n| k[n].mul_spacetime());
            let curl_ik = bc_curl(&ik);
            let grad_u = bc_grad(u);
            let b9: [Bicomplex<Rat>; 3] = std::array::from_fn(|n| {
                &(&curl_ik[n] - &grad_u[n]) - &k[n].diff(coord::T3)
            });

            let box_u = wave_op(u);
            let rhs_u = -&(&bc_div(&b9) + &a9.diff(coord::T3));
            assert_eq!(box_u, rhs_u, "seed {seed}");

            let grad_a9 = bc_grad(&a9);
            let ib9: [Bicomplex<Rat>; 3] = std::array::from_fn(|n| b9[n].mul_spacetime());
            let curl_ib9 = bc_curl(&ib9);
            for n in 0..3 {
                let box_k = wave_op(&k[n]);
                let rhs = &(&b9[n].diff(coord::T3) + &grad_a9[n]) + &curl_ib9[n];
                assert_eq!(box_k, rhs, "seed {seed} component {n}");
            }
        }
    }

    #[test]
    fn sta_regression_examples() {
        // Linear scalar potential.
        let (fields, entries) =
            sta_regression(&xp(coord::X1), &[TrigPoly::zero(), TrigPoly::zero(), TrigPoly::zero()])
                .unwrap();
        assert!(entries.iter().all(|e| e.status == Status::Pass));
        assert_eq!(fields.e[0], TrigPoly::constant(rat(-1, 1)));
        assert!(fields.e[1].is_zero() && fields.e[2].is_zero());
        assert!(fields.b.iter().all(TrigPoly::is_zero));
        assert!(fields.rho.is_zero());

        // Linear vector potential: the regression constant B = (0, 0, -1).
        let (fields, entries) = sta_regression(
            &TrigPoly::zero(),
            &[xp(coord::X2), TrigPoly::zero(), TrigPoly::zero()],
        )
        .unwrap();
        assert!(entries.iter().all(|e| e.status == Status::Pass));
        assert_eq!(fields.b[2], TrigPoly::constant(rat(-1, 1)));
        assert!(fields.b[0].is_zero() && fields.b[1].is_zero());

        // Plane wave along x1 in the third vector slot.
        let mut phase = crate::symbolic::LinearForm::zero();
        phase.coeffs[coord::T3] = rint(1);
        phase.coeffs[coord::X1] = rat(-1, 1);
        let (fields, entries) = sta_regression(
            &TrigPoly::zero(),
            &[TrigPoly::zero(), TrigPoly::zero(), TrigPoly::cos(phase)],
        )
        .unwrap();
        assert!(entries.iter().all(|e| e.status == Status::Pass));
        assert!(!fields.e[2].is_zero());
        assert!(!fields.b[1].is_zero());
        assert!(fields.rho.is_zero() && fields.j.iter().all(TrigPoly::is_zero));

        // Transverse-time dependence is out of scope.
        assert!(sta_regression(
            &xp(coord::T1),
            &[TrigPoly::zero(), TrigPoly::zero(), TrigPoly::zero()]
        )
        .is_err());
    }

    #[test]
    fn f_multivector_lives_on_the_space_time_families() {
        let fields = extract_fields(&plane_wave_spec(
            (rat(1, 1), rat(0, 1)),
            (rat(0, 1), rat(0, 1)),
            rat(1, 1),
        ));
        let f = fields.f_multivector();
        let allowed: Vec<u8> = (0..3).flat_map(|n| family_masks(space_time_base(n))).collect();
        for (mask, _) in f.iter_nonzero() {
            assert!(allowed.contains(&mask), "unexpected blade {mask:#08b}");
        }
        for n in 0..3 {
            assert_eq!(family_content(&f, space_time_base(n)), fields.f_s[n]);
        }
    }
}
