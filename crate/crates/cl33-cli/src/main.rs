//! Command-line front end: each subcommand runs one verification
//! pipeline and prints its report as JSON on stdout.
//!
//! Exit codes are fixed: 0 when every judged check passes, 1 on a
//! verification failure, 2 on usage or input errors. Reports contain no
//! timestamps or host state, so the same seed and flags reproduce the
//! same bytes. `CL33_TOLERANCE` overrides the default numeric tolerance
//! of 1e-12.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_complex::Complex64;

use cl33::algebra::{
    axiom_entries, basis, s_gen, t_gen, Multivector, GEN_COUNT, I_SPACETIME, I_TRANSVERSE,
    METRIC_SIGNS, PSEUDOSCALAR, T3,
};
use cl33::contour::{argument_integral, conjugate_charge, parse_q, xi_integral, ContourSpec};
use cl33::maxwell::{
    bracket_contents, bracket_decompose, check_continuity, check_maxwell, check_maxwell_primed,
    check_potentials, cx_div, extract_fields, reduced_contents, reduced_field, solve_gauge,
    transverse_gradient_op, OddFieldSpec,
};
use cl33::parse::parse_odd_spec;
use cl33::report::{CheckEntry, VerificationReport};
use cl33::scalar::Rat;
use cl33::symbolic::{coord, vector_derivative};
use cl33::transforms::{
    boost_closed_form, conjugation_rotor, field_bivector, lorentz_boost, spatial_rotation,
    transverse_rotation, Handedness,
};
use cl33::wavepacket::{
    check_plane_wave, plane_wave_field, resonant_packet, resonant_packet_sampled,
    window_frequency, PacketSpec, PlaneWaveSpec,
};
use cl33::Error;

#[derive(Parser)]
#[command(name = "cl33", version, about = "Verification pipelines for the six-generator algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Also write the JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json_out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the generator multiplication rules and the named constants
    Axioms {
        /// Self-test: run the squares against an all-plus signature
        #[arg(long, hide = true)]
        corrupt_metric: bool,
    },
    /// Decompose the derivative of an odd field and check the field equations
    DeriveMaxwell {
        /// Seed for the random field specification
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Field specification file, one `blade := trig-poly` per line
        #[arg(long, value_name = "PATH")]
        spec_file: Option<PathBuf>,
    },
    /// Check rotor sandwiches against their closed forms
    Rotors {
        /// Rotation angle in radians
        #[arg(long, default_value_t = std::f64::consts::FRAC_PI_3)]
        theta: f64,
        /// Boost rapidity
        #[arg(long, default_value_t = 0.3)]
        alpha: f64,
        /// Unit boost direction
        #[arg(long, default_value = "0,0,1", value_name = "X,Y,Z")]
        b: String,
    },
    /// Count the charges of a rational function around a circular contour
    Charges {
        /// The function, e.g. "(t-1)*(t+i)/(t-2*i)"
        #[arg(long)]
        q: String,
        /// Contour center
        #[arg(long, default_value = "0,0", value_name = "RE,IM")]
        center: String,
        /// Contour radius
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        /// Quadrature sample count
        #[arg(long, default_value_t = 4096)]
        samples: usize,
    },
    /// Check a single plane wave against the travelling-wave identities
    Planewave {
        /// Spatial wave vector
        #[arg(long, default_value = "0,0,6.283185307179586", value_name = "X,Y,Z")]
        k: String,
        /// Complex transverse amplitude
        #[arg(long, default_value = "1,0,0,1,0,0", value_name = "RE1,IM1,RE2,IM2,RE3,IM3")]
        amp: String,
        /// Build the left-handed branch instead of the right-handed one
        #[arg(long)]
        left: bool,
    },
    /// Sample a counter-chiral packet and check its edge structure
    Wavepacket {
        /// Left-handed frequency; defaults to the half-window value 1/(2 tau0)
        #[arg(long)]
        fg: Option<f64>,
        /// Ladder rung of the right-handed member
        #[arg(long = "N", default_value_t = 1)]
        n: u32,
        /// Window length
        #[arg(long, default_value_t = 1.0)]
        tau0: f64,
        /// Grid size override
        #[arg(long)]
        samples: Option<usize>,
        /// Write the sampled readings as CSV
        #[arg(long, value_name = "PATH")]
        csv_out: Option<PathBuf>,
        /// Accept an off-window fg and run the packet detuned
        #[arg(long)]
        allow_detuned: bool,
    },
}

/// Failures split by exit code: bad input (2) versus a verification
/// that ran and did not converge (1).
enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::NonConvergence(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let tol = match ambient_tolerance() {
        Ok(tol) => tol,
        Err(msg) => return usage_error(&msg),
    };
    let result = match &cli.command {
        Command::Axioms { corrupt_metric } => cmd_axioms(*corrupt_metric, tol),
        Command::DeriveMaxwell { seed, spec_file } => {
            cmd_derive_maxwell(*seed, spec_file.as_deref(), tol)
        }
        Command::Rotors { theta, alpha, b } => cmd_rotors(*theta, *alpha, b, tol),
        Command::Charges {
            q,
            center,
            radius,
            samples,
        } => cmd_charges(q, center, *radius, *samples, tol),
        Command::Planewave { k, amp, left } => cmd_planewave(k, amp, *left, tol),
        Command::Wavepacket {
            fg,
            n,
            tau0,
            samples,
            csv_out,
            allow_detuned,
        } => cmd_wavepacket(*fg, *n, *tau0, *samples, csv_out.as_deref(), *allow_detuned, tol),
    };
    match result {
        Ok(report) => emit(&report, cli.json_out.as_deref()),
        Err(Failure::Input(msg)) => usage_error(&msg),
        Err(Failure::Verification(msg)) => {
            eprintln!("cl33: {msg}");
            1
        }
    }
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("cl33: {msg}");
    2
}

fn emit(report: &VerificationReport, json_out: Option<&Path>) -> i32 {
    let json = report.to_json();
    if let Some(path) = json_out {
        if let Err(e) = fs::write(path, format!("{json}\n")) {
            return usage_error(&format!("cannot write {}: {e}", path.display()));
        }
    }
    println!("{json}");
    if report.passed() {
        0
    } else {
        1
    }
}

fn ambient_tolerance() -> Result<f64, String> {
    let text = match std::env::var("CL33_TOLERANCE") {
        Ok(text) => text,
        Err(std::env::VarError::NotPresent) => return Ok(cl33::DEFAULT_TOLERANCE),
        Err(e) => return Err(format!("CL33_TOLERANCE: {e}")),
    };
    let value: f64 = text
        .trim()
        .parse()
        .map_err(|_| format!("CL33_TOLERANCE must be a number, got `{text}`"))?;
    if !value.is_finite() || value <= 0.0 {
        return Err(format!("CL33_TOLERANCE must be positive and finite, got {value}"));
    }
    Ok(value)
}

fn parse_list<const N: usize>(text: &str, flag: &str) -> Result<[f64; N], Failure> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != N {
        return Err(Failure::Input(format!(
            "{flag} needs {N} comma-separated numbers, got `{text}`"
        )));
    }
    let mut out = [0.0; N];
    for (slot, part) in out.iter_mut().zip(parts) {
        *slot = part.trim().parse().map_err(|_| {
            Failure::Input(format!("{flag}: `{}` is not a number", part.trim()))
        })?;
    }
    Ok(out)
}

fn cmd_axioms(corrupt_metric: bool, tol: f64) -> Result<VerificationReport, Failure> {
    let mut report = VerificationReport::new("axioms", tol);
    if corrupt_metric {
        report.push(CheckEntry::info(
            "corrupted-metric-self-test",
            "squares checked against an all-plus signature; the suite must fail",
        ));
    }
    let metric = if corrupt_metric { [1; GEN_COUNT] } else { METRIC_SIGNS };
    report.extend(axiom_entries(&metric));
    Ok(report)
}

fn cmd_derive_maxwell(
    seed: u64,
    spec_file: Option<&Path>,
    tol: f64,
) -> Result<VerificationReport, Failure> {
    let mut report = VerificationReport::new("derive-maxwell", tol);
    let spec: OddFieldSpec<Rat> = match spec_file {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| {
                Failure::Input(format!("cannot read {}: {e}", path.display()))
            })?;
            let spec = parse_odd_spec(&text)?;
            report.push(CheckEntry::info(
                "field-spec",
                format!("file {}", path.display()),
            ));
            spec
        }
        None => {
            report = report.with_seed(seed);
            report.push(CheckEntry::info(
                "field-spec",
                format!("random spec of degree <= 2 from seed {seed}"),
            ));
            OddFieldSpec::random(seed)
        }
    };

    let field = spec.assemble();
    report.push(CheckEntry::exact(
        "odd-parity",
        field.even_part().is_zero(),
    ));

    let dv = vector_derivative(&field);
    let parts = bracket_decompose(&dv)?;
    report.push(CheckEntry::exact(
        "partition-completeness",
        parts.total() == dv,
    ));

    let oracle = bracket_contents(&spec);
    report.push(CheckEntry::exact(
        "bracket-oracle",
        parts.scalar_content() == oracle.scalar
            && parts.space_time_content() == oracle.space_time
            && parts.time_time_content() == oracle.time_time
            && parts.time_space_content() == oracle.time_space,
    ));

    let time_families = &parts.time_time + &parts.time_space;
    let (time, space) = reduced_contents(&spec);
    report.push(CheckEntry::exact(
        "transverse-reduction",
        transverse_gradient_op(&time_families) == reduced_field(&time, &space),
    ));

    let fields = extract_fields(&spec);
    let (residuals, maxwell_entries) = check_maxwell(&fields);
    report.push(CheckEntry::exact(
        "gauss-residual-matches-brackets",
        residuals.gauss == time.complex_part(),
    ));
    report.push(CheckEntry::exact(
        "ampere-residual-matches-brackets",
        (0..3).all(|n| residuals.ampere[n] == space[n].complex_part()),
    ));

    let pseudo = extract_fields(&spec.pseudo());
    report.push(CheckEntry::exact(
        "pseudo-electric-match",
        pseudo.e_primed() == fields.e(),
    ));
    report.push(CheckEntry::exact(
        "pseudo-magnetic-match",
        pseudo.b_primed() == fields.b(),
    ));
    report.push(CheckEntry::exact(
        "pseudo-charge-match",
        pseudo.rho_primed() == fields.rho(),
    ));
    report.push(CheckEntry::exact(
        "pseudo-current-match",
        pseudo.j_primed() == fields.j(),
    ));

    if oracle.is_zero() {
        report.push(CheckEntry::structural("vanishing-brackets", true));
        report.extend(maxwell_entries);
        let (_, primed) = check_maxwell_primed(&pseudo);
        report.extend(primed);
        report.extend(check_continuity(&fields));
        match solve_gauge(&spec.v_t) {
            Ok(psi) => {
                let (_, entries) = check_potentials(&spec, &psi);
                report.extend(entries);
            }
            Err(e) => report.push(CheckEntry::info("gauge-solver", e.to_string())),
        }
    } else {
        report.push(CheckEntry::info(
            "vanishing-brackets",
            format!(
                "bracket coefficient norm {:.6e}; not a solution, so the field \
                 equations keep their extracted sources",
                oracle.coeff_norm()
            ),
        ));
        report.push(CheckEntry::info(
            "field-equation-residual",
            format!("coefficient norm {:.6e}", residuals.coeff_norm()),
        ));
        let continuity = &fields.rho().diff(coord::T3) + &cx_div(&fields.j());
        report.push(CheckEntry::info(
            "continuity-residual",
            format!("coefficient norm {:.6e}", continuity.coeff_norm()),
        ));
    }
    Ok(report)
}

fn mv_gap(a: &Multivector<f64>, b: &Multivector<f64>) -> f64 {
    (0u8..64).map(|m| (a.coeff(m) - b.coeff(m)).abs()).sum()
}

fn cmd_rotors(theta: f64, alpha: f64, b_text: &str, tol: f64) -> Result<VerificationReport, Failure> {
    let b: [f64; 3] = parse_list(b_text, "--b")?;
    let norm = (b[0] * b[0] + b[1] * b[1] + b[2] * b[2]).sqrt();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Failure::Input(format!(
            "--b must be a unit vector, |b| = {norm}"
        )));
    }
    let mut report = VerificationReport::new("rotors", tol);
    report.push(CheckEntry::info(
        "parameters",
        format!("theta = {theta}, alpha = {alpha}, b = ({}, {}, {})", b[0], b[1], b[2]),
    ));

    let from_pairs = |pairs: &[(Multivector<f64>, f64)]| {
        let mut acc = Multivector::zero();
        for (blade, c) in pairs {
            acc = &acc + &blade.scale(c);
        }
        acc
    };

    // Rotation in the transverse temporal plane against its cos/sin mix.
    let rot_t = transverse_rotation(theta);
    report.push(CheckEntry::residual(
        "transverse-rotation-unit",
        rot_t.unit_residual(),
        tol,
    ));
    let (a1, a2, a3) = (1.5, -0.4, 0.8);
    let probe = from_pairs(&[
        (basis(t_gen(0)), a1),
        (basis(t_gen(1)), a2),
        (basis(t_gen(2)), a3),
    ]);
    let expected = from_pairs(&[
        (basis(t_gen(0)), a1 * theta.cos() - a2 * theta.sin()),
        (basis(t_gen(1)), a2 * theta.cos() + a1 * theta.sin()),
        (basis(t_gen(2)), a3),
    ]);
    report.push(CheckEntry::residual(
        "transverse-rotation-closed-form",
        mv_gap(&rot_t.sandwich(&probe), &expected),
        tol * 8.0,
    ));

    // Rotation in a spatial plane.
    let rot_s = spatial_rotation(0, 1, theta)?;
    report.push(CheckEntry::residual(
        "spatial-rotation-unit",
        rot_s.unit_residual(),
        tol,
    ));
    let (p1, p2, p3) = (0.3, -1.1, 0.7);
    let probe = from_pairs(&[
        (basis(s_gen(0)), p1),
        (basis(s_gen(1)), p2),
        (basis(s_gen(2)), p3),
    ]);
    let expected = from_pairs(&[
        (basis(s_gen(0)), p1 * theta.cos() - p2 * theta.sin()),
        (basis(s_gen(1)), p2 * theta.cos() + p1 * theta.sin()),
        (basis(s_gen(2)), p3),
    ]);
    report.push(CheckEntry::residual(
        "spatial-rotation-closed-form",
        mv_gap(&rot_s.sandwich(&probe), &expected),
        tol * 8.0,
    ));

    // Boost against the hyperbolic mix of the principal time axis.
    let boost = lorentz_boost(alpha, b)?;
    report.push(CheckEntry::residual("boost-unit", boost.unit_residual(), tol));
    let expected = from_pairs(&[
        (basis(T3), alpha.cosh()),
        (basis(s_gen(0)), alpha.sinh() * b[0]),
        (basis(s_gen(1)), alpha.sinh() * b[1]),
        (basis(s_gen(2)), alpha.sinh() * b[2]),
    ]);
    report.push(CheckEntry::residual(
        "boost-principal-time",
        mv_gap(&boost.sandwich(&basis(T3)), &expected),
        tol * (1.0 + alpha.cosh()),
    ));

    // Boost of a field bivector for a wave along b against the closed
    // cosh/sinh form.
    let p = unit_perpendicular(b);
    let q = [
        b[1] * p[2] - b[2] * p[1],
        b[2] * p[0] - b[0] * p[2],
        b[0] * p[1] - b[1] * p[0],
    ];
    let e: [Complex64; 3] = std::array::from_fn(|n| Complex64::new(p[n], q[n]));
    let bv: [Complex64; 3] = std::array::from_fn(|n| Complex64::new(q[n], -p[n]));
    let boosted = boost.sandwich(&field_bivector(&e, &bv));
    let (e_want, b_want) = boost_closed_form(alpha, &e, &bv, b);
    let gap = mv_gap(&boosted, &field_bivector(&e_want, &b_want));
    report.push(CheckEntry::residual(
        "boost-field-closed-form",
        gap,
        tol * (1.0 + alpha.cosh()) * 8.0,
    ));

    // Conjugation sign table, exact in the rational ring.
    let rc = conjugation_rotor::<Rat>();
    report.push(CheckEntry::exact(
        "conjugation-transverse-flip",
        rc.sandwich(&basis(I_TRANSVERSE)) == -&basis::<Rat>(I_TRANSVERSE),
    ));
    report.push(CheckEntry::exact(
        "conjugation-spacetime-flip",
        rc.sandwich(&basis(I_SPACETIME)) == -&basis::<Rat>(I_SPACETIME),
    ));
    report.push(CheckEntry::exact(
        "conjugation-pseudoscalar-fix",
        rc.sandwich(&basis(PSEUDOSCALAR)) == basis::<Rat>(PSEUDOSCALAR),
    ));

    // Conjugating the boost rotor reverses its rapidity.
    let reversed = boost.conjugated_by(&conjugation_rotor::<f64>());
    let backward = lorentz_boost(-alpha, b)?;
    let gap = mv_gap(
        &reversed.sandwich(&basis(T3)),
        &backward.sandwich(&basis(T3)),
    );
    report.push(CheckEntry::residual(
        "conjugated-boost-reverses",
        gap,
        tol * (1.0 + alpha.cosh()),
    ));

    // Conjugation flips the complex exponential.
    let exp_neg = &Multivector::scalar(theta.cos())
        - &basis::<f64>(I_TRANSVERSE).scale(&theta.sin());
    let exp_pos = &Multivector::scalar(theta.cos())
        + &basis::<f64>(I_TRANSVERSE).scale(&theta.sin());
    report.push(CheckEntry::residual(
        "conjugation-flips-the-exponential",
        mv_gap(&conjugation_rotor::<f64>().sandwich(&exp_neg), &exp_pos),
        tol,
    ));

    Ok(report)
}

/// A deterministic unit vector perpendicular to a unit vector.
fn unit_perpendicular(b: [f64; 3]) -> [f64; 3] {
    let axis = if b[0].abs() <= b[1].abs() && b[0].abs() <= b[2].abs() {
        [1.0, 0.0, 0.0]
    } else if b[1].abs() <= b[2].abs() {
        [0.0, 1.0, 0.0]
    } else {
        [0.0, 0.0, 1.0]
    };
    let dot = axis[0] * b[0] + axis[1] * b[1] + axis[2] * b[2];
    let raw = [
        axis[0] - dot * b[0],
        axis[1] - dot * b[1],
        axis[2] - dot * b[2],
    ];
    let norm = (raw[0] * raw[0] + raw[1] * raw[1] + raw[2] * raw[2]).sqrt();
    raw.map(|c| c / norm)
}

fn cmd_charges(
    q_text: &str,
    center_text: &str,
    radius: f64,
    samples: usize,
    tol: f64,
) -> Result<VerificationReport, Failure> {
    let q = parse_q(q_text)?;
    let c: [f64; 2] = parse_list(center_text, "--center")?;
    let contour = ContourSpec::new(Complex64::new(c[0], c[1]), radius, samples)?;
    let counted = argument_integral(&q, &contour)?;

    let mut report = VerificationReport::new("charges", tol);
    report.push(CheckEntry::info(
        "configuration",
        format!(
            "q = {q_text}, center ({}, {}), radius {radius}, {samples} samples",
            c[0], c[1]
        ),
    ));
    report.push(CheckEntry::info(
        "enclosed",
        format!(
            "{} zeros, {} poles",
            counted.zeros_inside, counted.poles_inside
        ),
    ));
    report.push(CheckEntry::info("net-charge", counted.net.to_string()));
    report.push(CheckEntry::residual(
        "count-quadrature",
        counted.residual,
        1e-6,
    ));

    let conjugated = conjugate_charge(&q, &contour)?;
    report.push(CheckEntry::structural(
        "conjugation-flips-the-count",
        conjugated.net == -counted.net,
    ));

    let xi = xi_integral(&q, &contour)?;
    report.push(CheckEntry::info(
        "xi-integral",
        format!(
            "value ({}, {}), branch winding {}",
            xi.value.re, xi.value.im, xi.winding
        ),
    ));
    let gap = (xi.value - Complex64::new(counted.net as f64, 0.0)).norm();
    report.push(CheckEntry::info(
        "xi-vs-net-charge",
        format!("|xi - net| = {gap:.6e}; the logarithmic integral is reported, not asserted, as a charge count"),
    ));
    Ok(report)
}

fn cmd_planewave(
    k_text: &str,
    amp_text: &str,
    left: bool,
    tol: f64,
) -> Result<VerificationReport, Failure> {
    let k: [f64; 3] = parse_list(k_text, "--k")?;
    let a: [f64; 6] = parse_list(amp_text, "--amp")?;
    let amplitude: [Complex64; 3] =
        std::array::from_fn(|n| Complex64::new(a[2 * n], a[2 * n + 1]));
    let handedness = if left {
        Handedness::Left
    } else {
        Handedness::Right
    };
    let spec = PlaneWaveSpec::new(amplitude, k, handedness)?;
    Ok(check_plane_wave(&plane_wave_field(&spec), tol)?)
}

fn cmd_wavepacket(
    fg: Option<f64>,
    rung: u32,
    tau0: f64,
    samples: Option<usize>,
    csv_out: Option<&Path>,
    allow_detuned: bool,
    tol: f64,
) -> Result<VerificationReport, Failure> {
    let window = window_frequency(tau0)?;
    let polarization = [1.0, 0.0, 0.0];
    let amplitude = Complex64::new(1.0, 0.0);

    let mut detuned_note = None;
    let spec = match fg {
        None => PacketSpec::resonant(rung, tau0, polarization, amplitude)?,
        Some(f) => {
            let off_window = (f - window).abs() > 1e-12;
            if off_window && !allow_detuned {
                return Err(Failure::Input(format!(
                    "--fg {f} is off the half-window frequency {window} for --tau0 {tau0}; \
                     pass --allow-detuned to run it anyway"
                )));
            }
            if off_window {
                detuned_note = Some(format!(
                    "fg {f} replaces the half-window frequency {window}; the packet runs marked non-resonant"
                ));
            }
            let f_n = (f64::from(rung) + 0.5) * 2.0 * f;
            PacketSpec::with_frequencies(f, f_n, rung, tau0, polarization, amplitude)?
        }
    };

    let (sampled, mut report) = match samples {
        Some(s) => resonant_packet_sampled(&spec, s, tol)?,
        None => resonant_packet(&spec, tol)?,
    };
    if let Some(note) = detuned_note {
        report.push(CheckEntry::info("non-resonant-override", note));
    }
    if let Some(path) = csv_out {
        fs::write(path, sampled.csv()).map_err(|e| {
            Failure::Input(format!("cannot write {}: {e}", path.display()))
        })?;
        report.push(CheckEntry::info(
            "csv",
            format!("{} data rows written", sampled.len()),
        ));
    }
    Ok(report)
}
