//! Pole and zero counting in the transverse-time plane.
//!
//! A rational function q of the complex transverse time tau carries
//! charge data: its poles count as positive charge, its zeros as
//! negative. The classical argument principle (the log-derivative
//! integral) is the oracle for the counts; the integral of the
//! logarithm itself is computed alongside with continuous branch
//! tracking, since the two are different integrals and only the first
//! is an integer counter. All of this lives on the two transverse time
//! axes, which principal-axis boosts fix pointwise, so the counts are
//! boost invariants by construction.

use num::complex::Complex;

use crate::error::{Error, Result};

type Cplx = Complex<f64>;

const TWO_PI: f64 = std::f64::consts::TAU;

/// Singularity data for q(tau): simple zeros and poles plus a leading
/// constant.
#[derive(Clone, PartialEq, Debug)]
pub struct RationalFunctionSpec {
    pub zeros: Vec<Cplx>,
    pub poles: Vec<Cplx>,
    pub leading: Cplx,
}

fn nearly_equal(a: Cplx, b: Cplx) -> bool {
    (a - b).norm() <= 1e-12 * a.norm().max(b.norm()).max(1.0)
}

impl RationalFunctionSpec {
    /// Validated constructor: the leading constant must be nonzero and
    /// all singularities pairwise distinct (simple zeros and poles).
    pub fn new(zeros: Vec<Cplx>, poles: Vec<Cplx>, leading: Cplx) -> Result<Self> {
        if leading.norm() == 0.0 {
            return Err(Error::domain("leading coefficient must be nonzero"));
        }
        let all: Vec<Cplx> = zeros.iter().chain(poles.iter()).copied().collect();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                if nearly_equal(*a, *b) {
                    return Err(Error::domain(format!(
                        "simple zeros and poles only: {a} repeats"
                    )));
                }
            }
        }
        Ok(RationalFunctionSpec {
            zeros,
            poles,
            leading,
        })
    }

    /// The constant function `leading`.
    pub fn constant(leading: Cplx) -> Self {
        RationalFunctionSpec {
            zeros: Vec::new(),
            poles: Vec::new(),
            leading,
        }
    }

    pub fn eval(&self, tau: Cplx) -> Cplx {
        let num: Cplx = self.zeros.iter().map(|z| tau - *z).product();
        let den: Cplx = self.poles.iter().map(|p| tau - *p).product();
        self.leading * num / den
    }

    /// q'(tau)/q(tau), the sum of simple-pole terms.
    pub fn log_derivative(&self, tau: Cplx) -> Cplx {
        let from_zeros: Cplx = self.zeros.iter().map(|z| (tau - *z).inv()).sum();
        let from_poles: Cplx = self.poles.iter().map(|p| (tau - *p).inv()).sum();
        from_zeros - from_poles
    }

    /// The function tau -> conj(q(conj tau)): zeros, poles and leading
    /// constant all conjugated.
    pub fn conjugated(&self) -> Self {
        RationalFunctionSpec {
            zeros: self.zeros.iter().map(|z| z.conj()).collect(),
            poles: self.poles.iter().map(|p| p.conj()).collect(),
            leading: self.leading.conj(),
        }
    }
}

/// A circle in the transverse-time plane, traversed counterclockwise
/// with uniformly spaced samples.
#[derive(Clone, PartialEq, Debug)]
pub struct ContourSpec {
    pub center: Cplx,
    pub radius: f64,
    pub samples: usize,
}

impl ContourSpec {
    pub fn new(center: Cplx, radius: f64, samples: usize) -> Result<Self> {
        if !(radius > 0.0) {
            return Err(Error::domain("contour radius must be positive"));
        }
        if samples < 64 {
            return Err(Error::domain("contour needs at least 64 samples"));
        }
        Ok(ContourSpec {
            center,
            radius,
            samples,
        })
    }

    /// Sample point and the tangent dtau/dtheta at index j.
    fn point(&self, j: usize) -> (Cplx, Cplx) {
        let theta = TWO_PI * (j as f64) / (self.samples as f64);
        let dir = Cplx::new(theta.cos(), theta.sin());
        (
            self.center + self.radius * dir,
            Cplx::i() * self.radius * dir,
        )
    }

    /// Reject singularities on or too close to the path.
    fn validate_against(&self, q: &RationalFunctionSpec) -> Result<()> {
        for s in q.zeros.iter().chain(q.poles.iter()) {
            let gap = ((*s - self.center).norm() - self.radius).abs();
            if gap < self.radius * 1e-6 {
                return Err(Error::InvalidContour(format!(
                    "singularity {s} lies within {:e} of the path",
                    self.radius * 1e-6
                )));
            }
        }
        Ok(())
    }

    fn encloses(&self, point: Cplx) -> bool {
        (point - self.center).norm() < self.radius
    }

    fn enclosed_counts(&self, q: &RationalFunctionSpec) -> (u32, u32) {
        let zeros = q.zeros.iter().filter(|z| self.encloses(**z)).count() as u32;
        let poles = q.poles.iter().filter(|p| self.encloses(**p)).count() as u32;
        (zeros, poles)
    }
}

/// Deterministic pairwise summation, independent of evaluation order.
fn pairwise_sum(values: &[Cplx]) -> Cplx {
    match values.len() {
        0 => Cplx::new(0.0, 0.0),
        1 => values[0],
        n => {
            let (a, b) = values.split_at(n / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}

/// Counting result for one contour.
#[derive(Clone, PartialEq, Debug)]
pub struct ChargeReport {
    /// Poles enclosed (positive charges).
    pub poles_inside: u32,
    /// Zeros enclosed (negative charges).
    pub zeros_inside: u32,
    /// Net charge under the active sign convention: poles minus zeros
    /// for plain counting, negated by conjugation.
    pub net: i64,
    /// Raw contour integral of q'/q.
    pub integral: Cplx,
    /// Distance from integral/(2 pi i) to the nearest integer.
    pub residual: f64,
}

/// Count zeros minus poles by the argument principle: the trapezoid
/// quadrature of q'/q around the contour, divided by 2 pi i, rounded to
/// the nearest integer. The net charge is the negation of the count.
pub fn argument_integral(
    q: &RationalFunctionSpec,
    contour: &ContourSpec,
) -> Result<ChargeReport> {
    contour.validate_against(q)?;
    let step = TWO_PI / (contour.samples as f64);
    let samples: Vec<Cplx> = (0..contour.samples)
        .map(|j| {
            let (tau, dtau) = contour.point(j);
            q.log_derivative(tau) * dtau
        })
        .collect();
    let integral = pairwise_sum(&samples) * step;
    let normalized = integral / (Cplx::i() * TWO_PI);
    let count = normalized.re.round();
    let residual = (normalized - count).norm();
    if residual > 1e-6 {
        return Err(Error::NonConvergence(format!(
            "count residual {residual:e} at {} samples; increase the sample count",
            contour.samples
        )));
    }

    let (zeros_inside, poles_inside) = contour.enclosed_counts(q);
    if count as i64 != i64::from(zeros_inside) - i64::from(poles_inside) {
        return Err(Error::NonConvergence(format!(
            "quadrature count {count} disagrees with the enclosed singularities"
        )));
    }
    Ok(ChargeReport {
        poles_inside,
        zeros_inside,
        net: i64::from(poles_inside) - i64::from(zeros_inside),
        integral,
        residual,
    })
}

/// Integral of the logarithmic charge density around a contour.
#[derive(Clone, PartialEq, Debug)]
pub struct XiIntegral {
    /// Quadrature value of the closed contour integral.
    pub value: Cplx,
    /// Net branch turns accumulated by log q around the contour.
    pub winding: i64,
}

/// Integrate -log(q)/(2 pi i) around the contour with continuous branch
/// tracking. The accumulated winding is returned alongside; it must
/// come out equal to zeros minus poles enclosed or the sampling was too
/// coarse to follow the branch. This is a different integral from the
/// argument principle and its value is reported, not asserted, against
/// the charge interpretation.
pub fn xi_integral(q: &RationalFunctionSpec, contour: &ContourSpec) -> Result<XiIntegral> {
    contour.validate_against(q)?;
    let m = contour.samples;
    let step = TWO_PI / (m as f64);

    // Unwrapped log q at each sample, continued around the full circle.
    let mut logs = Vec::with_capacity(m + 1);
    let mut prev_value = q.eval(contour.point(0).0);
    let mut phase = prev_value.arg();
    logs.push(Cplx::new(prev_value.norm().ln(), phase));
    for j in 1..=m {
        let value = q.eval(contour.point(j % m).0);
        let jump = (value / prev_value).arg();
        if jump.abs() > std::f64::consts::PI * (1.0 - 1e-3) {
            return Err(Error::NonConvergence(format!(
                "phase jump {jump:.3} rad between samples {} and {j}; undersampled contour",
                j - 1
            )));
        }
        phase += jump;
        logs.push(Cplx::new(value.norm().ln(), phase));
        prev_value = value;
    }
    let total_turns = (logs[m].im - logs[0].im) / TWO_PI;
    let winding_f = total_turns.round();
    if (total_turns - winding_f).abs() > 1e-9 {
        return Err(Error::NonConvergence(format!(
            "branch winding {total_turns} is not an integer"
        )));
    }
    let winding = winding_f as i64;
    let (zeros_inside, poles_inside) = contour.enclosed_counts(q);
    if winding != i64::from(zeros_inside) - i64::from(poles_inside) {
        return Err(Error::NonConvergence(format!(
            "branch winding {winding} disagrees with the enclosed singularities; \
             undersampled contour"
        )));
    }

    // Split off the linear-in-angle part so the remaining integrand is
    // periodic and the trapezoid rule converges spectrally. The linear
    // part integrates in closed form:
    //   integral of theta tau'(theta) dtheta = 2 pi (tau_start - center).
    let samples: Vec<Cplx> = (0..m)
        .map(|j| {
            let (_, dtau) = contour.point(j);
            let theta = step * (j as f64);
            (logs[j] - Cplx::i() * (winding_f * theta)) * dtau
        })
        .collect();
    let periodic_part = pairwise_sum(&samples) * step;
    let linear_part = Cplx::i() * winding_f * TWO_PI * (contour.point(0).0 - contour.center);
    let value = -(periodic_part + linear_part) / (Cplx::i() * TWO_PI);
    Ok(XiIntegral { value, winding })
}

/// Counting for the conjugated data: conjugating tau maps the contour to
/// a clockwise circle around the conjugated center, which negates the
/// integral and with it the net charge.
pub fn conjugate_charge(
    q: &RationalFunctionSpec,
    contour: &ContourSpec,
) -> Result<ChargeReport> {
    let mirrored = ContourSpec {
        center: contour.center.conj(),
        radius: contour.radius,
        samples: contour.samples,
    };
    let plain = argument_integral(&q.conjugated(), &mirrored)?;
    Ok(ChargeReport {
        poles_inside: plain.poles_inside,
        zeros_inside: plain.zeros_inside,
        net: -plain.net,
        integral: -plain.integral,
        residual: plain.residual,
    })
}

/// Parse the factored mini-language for q(tau).
///
/// Grammar, whitespace-insensitive:
///   expr    := product ('/' product)?
///   product := ['-'] factor ('*' factor)*
///   factor  := '(' 't' (('+'|'-') term)* ')' | term
///   term    := number ['*'] 'i' | number | 'i'
/// where number is a plain decimal literal. Zeros come from numerator
/// factors, poles from denominator factors, constants multiply into the
/// leading coefficient.
pub fn parse_q(expr: &str) -> Result<RationalFunctionSpec> {
    let mut parser = Parser {
        bytes: expr.as_bytes(),
        pos: 0,
    };
    let mut zeros: Vec<(Cplx, usize)> = Vec::new();
    let mut poles: Vec<(Cplx, usize)> = Vec::new();
    let mut leading = Cplx::new(1.0, 0.0);

    parser.product(&mut zeros, &mut leading)?;
    parser.skip_ws();
    if parser.peek() == Some(b'/') {
        parser.pos += 1;
        let mut divisor = Cplx::new(1.0, 0.0);
        parser.product(&mut poles, &mut divisor)?;
        if divisor.norm() == 0.0 {
            return Err(Error::parse(parser.pos, "division by a zero constant"));
        }
        leading /= divisor;
    }
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(Error::parse(parser.pos, "unexpected trailing input"));
    }
    if leading.norm() == 0.0 {
        return Err(Error::parse(0, "leading coefficient must be nonzero"));
    }

    let all: Vec<(Cplx, usize)> = zeros.iter().chain(poles.iter()).copied().collect();
    for (i, (a, _)) in all.iter().enumerate() {
        for (b, offset) in &all[i + 1..] {
            if nearly_equal(*a, *b) {
                return Err(Error::parse(
                    *offset,
                    "simple zeros and poles only: repeated factor",
                ));
            }
        }
    }
    RationalFunctionSpec::new(
        zeros.into_iter().map(|(r, _)| r).collect(),
        poles.into_iter().map(|(r, _)| r).collect(),
        leading,
    )
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn product(&mut self, roots: &mut Vec<(Cplx, usize)>, leading: &mut Cplx) -> Result<()> {
        self.skip_ws();
        let mut sign = Cplx::new(1.0, 0.0);
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        }
        loop {
            self.factor(roots, leading)?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        *leading *= sign;
        Ok(())
    }

    fn factor(&mut self, roots: &mut Vec<(Cplx, usize)>, leading: &mut Cplx) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                if self.peek() != Some(b't') {
                    return Err(Error::parse(self.pos, "expected 't' in a linear factor"));
                }
                self.pos += 1;
                let mut offset = Cplx::new(0.0, 0.0);
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        Some(b'+') => {
                            self.pos += 1;
                            offset += self.term()?;
                        }
                        Some(b'-') => {
                            self.pos += 1;
                            offset -= self.term()?;
                        }
                        _ => {
                            return Err(Error::parse(
                                self.pos,
                                "expected '+', '-' or ')' in a linear factor",
                            ))
                        }
                    }
                }
                roots.push((-offset, start));
                Ok(())
            }
            Some(b) if b == b'i' || b.is_ascii_digit() || b == b'.' => {
                let value = self.term()?;
                *leading *= value;
                Ok(())
            }
            _ => Err(Error::parse(
                self.pos,
                "expected '(' or a numeric constant",
            )),
        }
    }

    fn term(&mut self) -> Result<Cplx> {
        self.skip_ws();
        if self.peek() == Some(b'i') {
            self.pos += 1;
            return Ok(Cplx::i());
        }
        let value = self.number()?;
        if self.peek() == Some(b'*') && self.bytes.get(self.pos + 1) == Some(&b'i') {
            self.pos += 2;
            return Ok(Cplx::new(0.0, value));
        }
        if self.peek() == Some(b'i') {
            self.pos += 1;
            Ok(Cplx::new(0.0, value))
        } else {
            Ok(Cplx::new(value, 0.0))
        }
    }

    fn number(&mut self) -> Result<f64> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.peek() == Some(b'.') {
            self.pos += 1;
            while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        if self.pos == start || self.bytes[start..self.pos] == *b"." {
            return Err(Error::parse(start, "expected a decimal number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::parse(start, "malformed decimal number"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Cplx {
        Cplx::new(re, im)
    }

    fn unit_contour() -> ContourSpec {
        ContourSpec::new(c(0.0, 0.0), 1.0, 512).unwrap()
    }

    #[test]
    fn parser_reads_the_grammar() {
        let q = parse_q("(t-1)").unwrap();
        assert_eq!(q.zeros, vec![c(1.0, 0.0)]);
        assert!(q.poles.is_empty());

        let q = parse_q("(t-1-2i)*(t+0.5i)/(t-3)").unwrap();
        assert_eq!(q.zeros, vec![c(1.0, 2.0), c(0.0, -0.5)]);
        assert_eq!(q.poles, vec![c(3.0, 0.0)]);

        let q = parse_q("1/(t)").unwrap();
        assert!(q.zeros.is_empty());
        assert_eq!(q.poles, vec![c(0.0, 0.0)]);

        let q = parse_q(" 2.5 * ( t + i ) ").unwrap();
        assert_eq!(q.leading, c(2.5, 0.0));
        assert_eq!(q.zeros, vec![c(0.0, -1.0)]);

        let q = parse_q("(t-1-2*i)").unwrap();
        assert_eq!(q.zeros, vec![c(1.0, 2.0)]);

        let q = parse_q("-3*(t-1)/2*(t+2)").unwrap();
        assert_eq!(q.leading, c(-1.5, 0.0));
        assert_eq!(q.poles, vec![c(-2.0, 0.0)]);
    }

    #[test]
    fn parser_rejects_malformed_input() {
        for (expr, offset) in [
            ("(x-1)", 1),
            ("(t-1", 4),
            ("(t-1)(t-2)", 5),
            ("(t-)", 3),
            ("", 0),
            ("(t-1)/", 6),
            ("(t-1)*", 6),
        ] {
            match parse_q(expr) {
                Err(Error::Parse { offset: o, .. }) => {
                    assert_eq!(o, offset, "offset for {expr:?}")
                }
                other => panic!("expected parse error for {expr:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn parser_rejects_repeated_factors() {
        assert!(matches!(
            parse_q("(t-1)*(t-1)"),
            Err(Error::Parse { offset: 6, .. })
        ));
        assert!(parse_q("(t-1)/(t-1)").is_err());
        assert!(parse_q("(t-1)*(t-1.0)").is_err());
    }

    #[test]
    fn single_zero_counts_as_negative_charge() {
        let q = parse_q("(t)").unwrap();
        let report = argument_integral(&q, &unit_contour()).unwrap();
        assert_eq!(report.zeros_inside, 1);
        assert_eq!(report.poles_inside, 0);
        assert_eq!(report.net, -1);
        assert!(report.residual < 1e-9);
        let count = report.integral / (Cplx::i() * TWO_PI);
        assert!((count - c(1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn single_pole_counts_as_positive_charge() {
        let q = parse_q("1/(t)").unwrap();
        let report = argument_integral(&q, &unit_contour()).unwrap();
        assert_eq!(report.net, 1);
        let count = report.integral / (Cplx::i() * TWO_PI);
        assert!((count - c(-1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn only_enclosed_singularities_count() {
        let q = parse_q("(t-1-2i)/(t-1-2i+10)").unwrap();
        assert_eq!(q.poles, vec![c(-9.0, 2.0)]);
        let contour = ContourSpec::new(c(1.0, 2.0), 1.0, 512).unwrap();
        let report = argument_integral(&q, &contour).unwrap();
        assert_eq!(report.zeros_inside, 1);
        assert_eq!(report.poles_inside, 0);
        assert_eq!(report.net, -1);
    }

    #[test]
    fn counting_is_additive_and_deformation_invariant() {
        let q = RationalFunctionSpec::new(
            vec![c(0.3, 0.1), c(-0.4, 0.2), c(5.0, 5.0)],
            vec![c(0.1, -0.5), c(-6.0, 0.0)],
            c(2.0, 1.0),
        )
        .unwrap();
        let small = argument_integral(&q, &unit_contour()).unwrap();
        assert_eq!(small.zeros_inside, 2);
        assert_eq!(small.poles_inside, 1);
        assert_eq!(small.net, -1);

        let shifted = ContourSpec::new(c(0.05, -0.05), 1.1, 768).unwrap();
        let again = argument_integral(&q, &shifted).unwrap();
        assert_eq!(again.net, small.net);
        let na = small.integral / (Cplx::i() * TWO_PI);
        let nb = again.integral / (Cplx::i() * TWO_PI);
        assert!((na - nb).norm() < 1e-6);
    }

    #[test]
    fn contour_through_a_singularity_is_rejected() {
        let q = parse_q("(t-1)").unwrap();
        assert!(matches!(
            argument_integral(&q, &unit_contour()),
            Err(Error::InvalidContour(_))
        ));
    }

    #[test]
    fn conjugation_flips_the_net_charge() {
        let contour = unit_contour();
        for expr in ["(t-0.2-0.3i)", "1/(t+0.1i)", "(t-0.5)*(t+0.5)/(t-0.1i)"] {
            let q = parse_q(expr).unwrap();
            let plain = argument_integral(&q, &contour).unwrap();
            let conj = conjugate_charge(&q, &contour).unwrap();
            assert_eq!(conj.net, -plain.net, "for {expr}");
            assert_eq!(conj.zeros_inside, plain.zeros_inside);
            assert_eq!(conj.poles_inside, plain.poles_inside);
        }
        let constant = RationalFunctionSpec::constant(c(3.0, 0.0));
        assert_eq!(conjugate_charge(&constant, &contour).unwrap().net, 0);
    }

    #[test]
    fn log_integral_matches_the_analytic_value() {
        // Integration by parts per enclosed singularity s gives
        //   closed integral of log(tau - s) dtau = 2 pi i (tau_start - s)
        // and zero for s outside, so the branch-tracked value is
        //   (sum of enclosed zeros - sum of enclosed poles)
        //   + tau_start (poles - zeros enclosed).
        let q = RationalFunctionSpec::new(
            vec![c(0.3, 0.1), c(-0.2, -0.4)],
            vec![c(0.0, 0.5), c(7.0, 0.0)],
            c(1.0, -2.0),
        )
        .unwrap();
        let contour = ContourSpec::new(c(0.1, 0.0), 1.0, 2048).unwrap();
        let xi = xi_integral(&q, &contour).unwrap();
        assert_eq!(xi.winding, 1);

        let tau_start = contour.center + contour.radius;
        let expected = c(0.3, 0.1) + c(-0.2, -0.4) - c(0.0, 0.5) + tau_start * (1.0 - 2.0);
        assert!((xi.value - expected).norm() < 1e-10, "value {}", xi.value);

        let constant = RationalFunctionSpec::constant(c(2.0, 0.0));
        let trivial = xi_integral(&constant, &contour).unwrap();
        assert_eq!(trivial.winding, 0);
        assert!(trivial.value.norm() < 1e-12);
    }

    #[test]
    fn log_integral_quadrature_is_spectrally_converged() {
        let q = parse_q("(t)").unwrap();
        let coarse = xi_integral(&q, &ContourSpec::new(c(0.0, 0.0), 1.0, 2048).unwrap()).unwrap();
        let fine = xi_integral(&q, &ContourSpec::new(c(0.0, 0.0), 1.0, 4096).unwrap()).unwrap();
        assert!((coarse.value - fine.value).norm() < 1e-8);

        // One zero at the origin, unit contour: the value lands on the
        // net charge of the counting convention for this contour.
        assert!((fine.value - c(-1.0, 0.0)).norm() < 1e-10);
        assert_eq!(fine.winding, 1);
    }

    #[test]
    fn undersampled_branch_tracking_is_detected() {
        // A zero a hair inside the path, angularly straddled by two
        // samples, swings the phase by more than half a turn in one
        // step; the lost turn must be reported, not absorbed.
        let half_step = std::f64::consts::PI / 64.0;
        let s = 0.9999 * Cplx::new(half_step.cos(), half_step.sin());
        let q = RationalFunctionSpec::new(vec![s], vec![], c(1.0, 0.0)).unwrap();
        let contour = ContourSpec::new(c(0.0, 0.0), 1.0, 64).unwrap();
        assert!(matches!(
            xi_integral(&q, &contour),
            Err(Error::NonConvergence(_))
        ));
    }

    #[test]
    fn rejects_duplicate_roots_and_bad_contours() {
        assert!(RationalFunctionSpec::new(
            vec![c(1.0, 0.0)],
            vec![c(1.0, 0.0)],
            c(1.0, 0.0)
        )
        .is_err());
        assert!(ContourSpec::new(c(0.0, 0.0), 0.0, 512).is_err());
        assert!(ContourSpec::new(c(0.0, 0.0), 1.0, 32).is_err());
    }
}
