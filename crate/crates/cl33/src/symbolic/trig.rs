//! Trigonometric polynomials over six coordinates.
//!
//! A value is a finite sum of terms `c · m · f` where `c` is a scalar
//! coefficient, `m` a monomial in the coordinates `(t1, t2, t3, x1, x2,
//! x3)`, and `f` either 1 or `cos(L)`/`sin(L)` of an affine form `L`.
//! Products rewrite trig pairs by the product-to-sum identities, so the
//! class is closed under sum, product and partial differentiation, and a
//! canonical form exists: terms sorted by monomial and phase, phases
//! sign-normalised, zero coefficients dropped. With rational coefficients
//! the canonical form of the zero function is the empty sum, so equality
//! testing is exact.

use crate::scalar::Coeff;
use num::traits::{One, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Number of coordinates.
pub const COORD_COUNT: usize = 6;

/// Coordinate names in index order.
pub const COORD_NAMES: [&str; COORD_COUNT] = ["t1", "t2", "t3", "x1", "x2", "x3"];

/// Coordinate indices, named.
pub mod coord {
    pub const T1: usize = 0;
    pub const T2: usize = 1;
    pub const T3: usize = 2;
    pub const X1: usize = 3;
    pub const X2: usize = 4;
    pub const X3: usize = 5;
}

/// An evaluation point.
pub type Point = [f64; COORD_COUNT];

/// An affine form `a·coords + b` used as a trig phase.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearForm<C> {
    pub coeffs: [C; COORD_COUNT],
    pub constant: C,
}

impl<C: Coeff> LinearForm<C> {
    pub fn zero() -> Self {
        LinearForm {
            coeffs: std::array::from_fn(|_| C::zero()),
            constant: C::zero(),
        }
    }

    /// The bare coordinate `k`.
    pub fn coordinate(k: usize) -> Self {
        let mut lf = LinearForm::zero();
        lf.coeffs[k] = C::one();
        lf
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero()) && self.constant.is_zero()
    }

    pub fn eval(&self, pt: &Point) -> f64 {
        let mut acc = self.constant.to_f64();
        for (c, x) in self.coeffs.iter().zip(pt.iter()) {
            acc += c.to_f64() * x;
        }
        acc
    }

    fn negated(&self) -> Self {
        LinearForm {
            coeffs: std::array::from_fn(|i| -self.coeffs[i].clone()),
            constant: -self.constant.clone(),
        }
    }

    fn add(&self, other: &Self) -> Self {
        LinearForm {
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() + other.coeffs[i].clone()),
            constant: self.constant.clone() + other.constant.clone(),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        LinearForm {
            coeffs: std::array::from_fn(|i| self.coeffs[i].clone() - other.coeffs[i].clone()),
            constant: self.constant.clone() - other.constant.clone(),
        }
    }

    /// Sign-normalise: flip so the leading nonzero entry is positive.
    /// Returns the normalised form and whether a flip happened.
    fn normalized(&self) -> (Self, bool) {
        for c in self.coeffs.iter().chain(std::iter::once(&self.constant)) {
            if c.is_zero() {
                continue;
            }
            return if c.is_negative_coeff() {
                (self.negated(), true)
            } else {
                (self.clone(), false)
            };
        }
        (self.clone(), false)
    }

    fn key_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.coeffs.iter().zip(other.coeffs.iter()) {
            let ord = a.key_cmp(b);
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.constant.key_cmp(&other.constant)
    }
}

impl<C: Coeff> fmt::Display for LinearForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{}", COORD_NAMES[i])?;
            } else {
                write!(f, "{}*{}", c, COORD_NAMES[i])?;
            }
        }
        if !self.constant.is_zero() || first {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "{}", self.constant)?;
        }
        Ok(())
    }
}

/// The trig part of a term.
#[derive(Clone, PartialEq, Debug)]
pub enum TrigFactor<C> {
    One,
    Cos(LinearForm<C>),
    Sin(LinearForm<C>),
}

impl<C: Coeff> TrigFactor<C> {
    fn rank(&self) -> u8 {
        match self {
            TrigFactor::One => 0,
            TrigFactor::Cos(_) => 1,
            TrigFactor::Sin(_) => 2,
        }
    }

    fn key_cmp(&self, other: &Self) -> Ordering {
        match self.rank().cmp(&other.rank()) {
            Ordering::Equal => match (self, other) {
                (TrigFactor::Cos(a), TrigFactor::Cos(b))
                | (TrigFactor::Sin(a), TrigFactor::Sin(b)) => a.key_cmp(b),
                _ => Ordering::Equal,
            },
            ord => ord,
        }
    }

    fn eval(&self, pt: &Point) -> f64 {
        match self {
            TrigFactor::One => 1.0,
            TrigFactor::Cos(l) => l.eval(pt).cos(),
            TrigFactor::Sin(l) => l.eval(pt).sin(),
        }
    }
}

/// Exponent vector of a monomial.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub exps: [u8; COORD_COUNT],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; COORD_COUNT],
    };

    pub fn coordinate(k: usize) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[k] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: std::array::from_fn(|i| {
                self.exps[i]
                    .checked_add(other.exps[i])
                    .expect("monomial exponent overflow")
            }),
        }
    }

    fn eval(&self, pt: &Point) -> f64 {
        let mut acc = 1.0;
        for (e, x) in self.exps.iter().zip(pt.iter()) {
            acc *= x.powi(*e as i32);
        }
        acc
    }
}

#[derive(Clone, PartialEq, Debug)]
struct Term<C> {
    coeff: C,
    mono: Monomial,
    factor: TrigFactor<C>,
}

/// A trigonometric polynomial in canonical form.
#[derive(Clone, PartialEq, Debug)]
pub struct TrigPoly<C> {
    terms: Vec<Term<C>>,
}

impl<C: Coeff> TrigPoly<C> {
    pub fn zero() -> Self {
        TrigPoly { terms: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        TrigPoly::from_terms(vec![Term {
            coeff: c,
            mono: Monomial::ONE,
            factor: TrigFactor::One,
        }])
    }

    pub fn one() -> Self {
        TrigPoly::constant(C::one())
    }

    /// The bare coordinate `k`.
    pub fn coordinate(k: usize) -> Self {
        TrigPoly::from_terms(vec![Term {
            coeff: C::one(),
            mono: Monomial::coordinate(k),
            factor: TrigFactor::One,
        }])
    }

    /// `c · monomial`.
    pub fn monomial(c: C, exps: [u8; COORD_COUNT]) -> Self {
        TrigPoly::from_terms(vec![Term {
            coeff: c,
            mono: Monomial { exps },
            factor: TrigFactor::One,
        }])
    }

    /// `cos` of an affine phase.
    pub fn cos(phase: LinearForm<C>) -> Self {
        TrigPoly::from_terms(vec![Term {
            coeff: C::one(),
            mono: Monomial::ONE,
            factor: TrigFactor::Cos(phase),
        }])
    }

    /// `sin` of an affine phase.
    pub fn sin(phase: LinearForm<C>) -> Self {
        TrigPoly::from_terms(vec![Term {
            coeff: C::one(),
            mono: Monomial::ONE,
            factor: TrigFactor::Sin(phase),
        }])
    }

    /// A single term `c · monomial · factor`.
    pub fn term(c: C, exps: [u8; COORD_COUNT], factor: TrigFactor<C>) -> Self {
        TrigPoly::from_terms(vec![Term {
            coeff: c,
            mono: Monomial { exps },
            factor,
        }])
    }

    fn from_terms(terms: Vec<Term<C>>) -> Self {
        let mut out = TrigPoly { terms };
        out.canonicalize();
        out
    }

    /// Normalise phases, sort, merge, drop zeros.
    fn canonicalize(&mut self) {
        let mut kept: Vec<Term<C>> = Vec::with_capacity(self.terms.len());
        for term in self.terms.drain(..) {
            if term.coeff.is_zero() {
                continue;
            }
            let (coeff, factor) = match term.factor {
                TrigFactor::One => (term.coeff, TrigFactor::One),
                TrigFactor::Cos(l) => {
                    if l.is_zero() {
                        (term.coeff, TrigFactor::One)
                    } else {
                        let (norm, _) = l.normalized();
                        (term.coeff, TrigFactor::Cos(norm))
                    }
                }
                TrigFactor::Sin(l) => {
                    if l.is_zero() {
                        continue;
                    }
                    let (norm, flipped) = l.normalized();
                    let coeff = if flipped { -term.coeff } else { term.coeff };
                    (coeff, TrigFactor::Sin(norm))
                }
            };
            kept.push(Term {
                coeff,
                mono: term.mono,
                factor,
            });
        }
        kept.sort_by(|a, b| {
            a.mono
                .cmp(&b.mono)
                .then_with(|| a.factor.key_cmp(&b.factor))
        });
        let mut merged: Vec<Term<C>> = Vec::with_capacity(kept.len());
        for term in kept {
            if let Some(last) = merged.last_mut() {
                if last.mono == term.mono && last.factor == term.factor {
                    last.coeff = last.coeff.clone() + term.coeff;
                    continue;
                }
            }
            merged.push(term);
        }
        merged.retain(|t| !t.coeff.is_zero());
        self.terms = merged;
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every term has trig factor 1.
    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|t| t.factor == TrigFactor::One)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Largest monomial degree over the terms.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    /// Partial derivative with respect to coordinate `k`.
    pub fn diff(&self, k: usize) -> TrigPoly<C> {
        let mut out: Vec<Term<C>> = Vec::new();
        for term in &self.terms {
            // Power-rule part.
            let e = term.mono.exps[k];
            if e > 0 {
                let mut mono = term.mono;
                mono.exps[k] = e - 1;
                let mut scale = C::zero();
                for _ in 0..e {
                    scale = scale + C::one();
                }
                out.push(Term {
                    coeff: term.coeff.clone() * scale,
                    mono,
                    factor: term.factor.clone(),
                });
            }
            // Phase part.
            match &term.factor {
                TrigFactor::One => {}
                TrigFactor::Cos(l) => {
                    if !l.coeffs[k].is_zero() {
                        out.push(Term {
                            coeff: -(term.coeff.clone() * l.coeffs[k].clone()),
                            mono: term.mono,
                            factor: TrigFactor::Sin(l.clone()),
                        });
                    }
                }
                TrigFactor::Sin(l) => {
                    if !l.coeffs[k].is_zero() {
                        out.push(Term {
                            coeff: term.coeff.clone() * l.coeffs[k].clone(),
                            mono: term.mono,
                            factor: TrigFactor::Cos(l.clone()),
                        });
                    }
                }
            }
        }
        TrigPoly::from_terms(out)
    }

    pub fn eval(&self, pt: &Point) -> f64 {
        self.terms
            .iter()
            .map(|t| t.coeff.to_f64() * t.mono.eval(pt) * t.factor.eval(pt))
            .sum()
    }

    /// Sum of absolute coefficient values: an upper bound for |value| on
    /// any point where every |coordinate| ≤ 1, and a residual measure for
    /// cancellation checks.
    pub fn coeff_l1(&self) -> f64 {
        self.terms.iter().map(|t| t.coeff.abs_f64()).sum()
    }

    /// Evaluate exactly in the coefficient ring. `None` if a trig factor
    /// is present (only polynomials evaluate ring-exactly).
    pub fn eval_exact(&self, coords: &[C; COORD_COUNT]) -> Option<C> {
        let mut acc = C::zero();
        for t in &self.terms {
            if !matches!(t.factor, TrigFactor::One) {
                return None;
            }
            let mut v = t.coeff.clone();
            for (k, &e) in t.mono.exps.iter().enumerate() {
                for _ in 0..e {
                    v = v * coords[k].clone();
                }
            }
            acc = acc + v;
        }
        Some(acc)
    }

    pub fn scale(&self, c: &C) -> TrigPoly<C> {
        TrigPoly::from_terms(
            self.terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone() * c.clone(),
                    mono: t.mono,
                    factor: t.factor.clone(),
                })
                .collect(),
        )
    }

    /// Map the coefficient ring (e.g. rational to f64), preserving phases.
    pub fn map_coeff<D: Coeff>(&self, mut f: impl FnMut(&C) -> D) -> TrigPoly<D> {
        TrigPoly::from_terms(
            self.terms
                .iter()
                .map(|t| Term {
                    coeff: f(&t.coeff),
                    mono: t.mono,
                    factor: match &t.factor {
                        TrigFactor::One => TrigFactor::One,
                        TrigFactor::Cos(l) => TrigFactor::Cos(LinearForm {
                            coeffs: std::array::from_fn(|i| f(&l.coeffs[i])),
                            constant: f(&l.constant),
                        }),
                        TrigFactor::Sin(l) => TrigFactor::Sin(LinearForm {
                            coeffs: std::array::from_fn(|i| f(&l.coeffs[i])),
                            constant: f(&l.constant),
                        }),
                    },
                })
                .collect(),
        )
    }

    /// Write as a polynomial in coordinate `k`: pairs `(exponent, slice)`
    /// where each slice has no `k` dependence in its monomials (phases may
    /// still carry `k`; the caller checks [`Self::is_polynomial`] first
    /// when that matters).
    pub fn slices_in(&self, k: usize) -> Vec<(u8, TrigPoly<C>)> {
        let mut buckets: Vec<(u8, Vec<Term<C>>)> = Vec::new();
        for term in &self.terms {
            let e = term.mono.exps[k];
            let mut stripped = term.clone();
            stripped.mono.exps[k] = 0;
            match buckets.binary_search_by_key(&e, |(d, _)| *d) {
                Ok(i) => buckets[i].1.push(stripped),
                Err(i) => buckets.insert(i, (e, vec![stripped])),
            }
        }
        buckets
            .into_iter()
            .map(|(e, terms)| (e, TrigPoly::from_terms(terms)))
            .collect()
    }

    /// Multiply by `coordinate(k)^e`.
    pub fn mul_coord_power(&self, k: usize, e: u8) -> TrigPoly<C> {
        let mut shift = Monomial::ONE;
        shift.exps[k] = e;
        TrigPoly::from_terms(
            self.terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    mono: t.mono.mul(&shift),
                    factor: t.factor.clone(),
                })
                .collect(),
        )
    }

    /// True when every term is a plain cosine or sine with no polynomial
    /// prefactor, the shape of a superposition of travelling waves.
    pub fn is_pure_trig(&self) -> bool {
        self.terms
            .iter()
            .all(|t| t.mono == Monomial::ONE && !matches!(t.factor, TrigFactor::One))
    }

    /// All distinct phases appearing in trig factors (sign-normalised).
    pub fn phases(&self) -> Vec<LinearForm<C>> {
        let mut out: Vec<LinearForm<C>> = Vec::new();
        for term in &self.terms {
            let l = match &term.factor {
                TrigFactor::One => continue,
                TrigFactor::Cos(l) | TrigFactor::Sin(l) => l.clone(),
            };
            if !out.iter().any(|p| *p == l) {
                out.push(l);
            }
        }
        out
    }

    fn mul_impl(&self, other: &TrigPoly<C>) -> TrigPoly<C> {
        let mut out: Vec<Term<C>> = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                let coeff = a.coeff.clone() * b.coeff.clone();
                let mono = a.mono.mul(&b.mono);
                for (scale, factor) in factor_product(&a.factor, &b.factor) {
                    out.push(Term {
                        coeff: coeff.clone() * scale,
                        mono,
                        factor,
                    });
                }
            }
        }
        TrigPoly::from_terms(out)
    }
}

/// Product-to-sum rewrite of a pair of trig factors.
fn factor_product<C: Coeff>(
    a: &TrigFactor<C>,
    b: &TrigFactor<C>,
) -> Vec<(C, TrigFactor<C>)> {
    let half = C::one().halve();
    match (a, b) {
        (TrigFactor::One, f) | (f, TrigFactor::One) => vec![(C::one(), f.clone())],
        (TrigFactor::Cos(p), TrigFactor::Cos(q)) => vec![
            (half.clone(), TrigFactor::Cos(p.sub(q))),
            (half, TrigFactor::Cos(p.add(q))),
        ],
        (TrigFactor::Sin(p), TrigFactor::Sin(q)) => vec![
            (half.clone(), TrigFactor::Cos(p.sub(q))),
            (-half, TrigFactor::Cos(p.add(q))),
        ],
        (TrigFactor::Sin(p), TrigFactor::Cos(q)) => vec![
            (half.clone(), TrigFactor::Sin(p.add(q))),
            (half, TrigFactor::Sin(p.sub(q))),
        ],
        (TrigFactor::Cos(p), TrigFactor::Sin(q)) => vec![
            (half.clone(), TrigFactor::Sin(p.add(q))),
            (half, TrigFactor::Sin(q.sub(p))),
        ],
    }
}

impl<C: Coeff> Zero for TrigPoly<C> {
    fn zero() -> Self {
        TrigPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coeff> One for TrigPoly<C> {
    fn one() -> Self {
        TrigPoly::one()
    }
}

impl<C: Coeff> Add for TrigPoly<C> {
    type Output = TrigPoly<C>;
    fn add(self, rhs: TrigPoly<C>) -> TrigPoly<C> {
        let mut terms = self.terms;
        terms.extend(rhs.terms);
        TrigPoly::from_terms(terms)
    }
}

impl<C: Coeff> Sub for TrigPoly<C> {
    type Output = TrigPoly<C>;
    fn sub(self, rhs: TrigPoly<C>) -> TrigPoly<C> {
        self + (-rhs)
    }
}

impl<C: Coeff> Neg for TrigPoly<C> {
    type Output = TrigPoly<C>;
    fn neg(mut self) -> TrigPoly<C> {
        for t in &mut self.terms {
            t.coeff = -t.coeff.clone();
        }
        self
    }
}

impl<C: Coeff> Mul for TrigPoly<C> {
    type Output = TrigPoly<C>;
    fn mul(self, rhs: TrigPoly<C>) -> TrigPoly<C> {
        self.mul_impl(&rhs)
    }
}

impl<C: Coeff> fmt::Display for TrigPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, term) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let mut pieces: Vec<String> = Vec::new();
            let mono_empty = term.mono == Monomial::ONE;
            let factor_empty = matches!(term.factor, TrigFactor::One);
            if !term.coeff.is_one() || (mono_empty && factor_empty) {
                pieces.push(format!("{}", term.coeff));
            }
            for (k, &e) in term.mono.exps.iter().enumerate() {
                if e == 1 {
                    pieces.push(COORD_NAMES[k].to_string());
                } else if e > 1 {
                    pieces.push(format!("{}^{}", COORD_NAMES[k], e));
                }
            }
            match &term.factor {
                TrigFactor::One => {}
                TrigFactor::Cos(l) => pieces.push(format!("cos({})", l)),
                TrigFactor::Sin(l) => pieces.push(format!("sin({})", l)),
            }
            f.write_str(&pieces.join("*"))?;
        }
        Ok(())
    }
}
