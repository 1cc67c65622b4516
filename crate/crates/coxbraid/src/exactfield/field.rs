//! The real cyclotomic fields Q(c), c = 2cos(2π/N), and their elements.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{self, Poly};

pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug)]
pub struct RealCyclotomicField {
    modulus: u64,
    minpoly: Poly,
    /// Half-open isolating interval (lo, hi] for the designated root.
    interval: (Rational, Rational),
}

impl RealCyclotomicField {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn minpoly(&self) -> &Poly {
        &self.minpoly
    }

    pub fn isolating_interval(&self) -> &(Rational, Rational) {
        &self.interval
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    fn is_rational(&self) -> bool {
        self.degree() == 1
    }
}

fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

fn build_field(n: u64) -> RealCyclotomicField {
    assert!(n >= 1, "field modulus must be positive");
    if n <= 2 {
        let root: i64 = if n == 1 { 2 } else { -2 };
        let r = Rational::from_integer(BigInt::from(root));
        return RealCyclotomicField {
            modulus: n,
            minpoly: poly::from_ints(&[-root, 1]),
            interval: (r.clone(), r),
        };
    }
    let phi = poly::cyclotomic(n);
    let k = (phi.len() - 1) / 2;
    let mut psi = vec![phi[k].clone()];
    for j in 1..=k {
        psi = poly::add(&psi, &poly::scale(&poly::chebyshev_sum(j), &phi[k + j]));
    }
    let deg = psi.len() - 1;
    debug_assert_eq!(deg as u64, euler_phi(n) / 2);
    if deg == 1 {
        let r = -&psi[0];
        return RealCyclotomicField { modulus: n, minpoly: psi, interval: (r.clone(), r) };
    }
    // The designated root is the largest one; the next largest is 2cos(2πk₂/N).
    let angle = |k: u64| 2.0 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos();
    let k2 = (2..n).find(|k| k.gcd(&n) == 1).expect("a second conjugate exists");
    let guess = 0.5 * (angle(1) + angle(k2));
    let mut lo = BigRational::from_float(guess).expect("finite");
    let mut hi = Rational::from_integer(BigInt::from(2));
    assert_eq!(poly::sturm_count(&psi, &lo, &hi), 1, "isolating interval must hold one root");
    let sign_lo = poly::eval(&psi, &lo).signum();
    let width = Rational::new(BigInt::one(), BigInt::one() << 48);
    while &hi - &lo > width {
        let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
        if poly::eval(&psi, &mid).signum() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RealCyclotomicField { modulus: n, minpoly: psi, interval: (lo, hi) }
}

/// Returns the shared field Q(2cos(2π/N)); fields are built once and cached.
pub fn field_create(n: u64) -> Arc<RealCyclotomicField> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<RealCyclotomicField>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(&n) {
        return f.clone();
    }
    let f = Arc::new(build_field(n));
    cache.lock().unwrap().entry(n).or_insert(f).clone()
}

/// 2cos(2πk/N) as an element of the field.
pub fn cos_value(field: &Arc<RealCyclotomicField>, k: i64) -> FieldElement {
    let n = field.modulus as i64;
    let k = k.rem_euclid(n) as usize;
    let c = FieldElement::generator(field);
    let mut prev = FieldElement::from_int(field, 2);
    if k == 0 {
        return prev;
    }
    let mut cur = c.clone();
    for _ in 1..k {
        let next = &(&c * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[derive(Clone)]
pub struct FieldElement {
    field: Arc<RealCyclotomicField>,
    coeffs: Poly,
}

impl FieldElement {
    fn make(field: &Arc<RealCyclotomicField>, mut coeffs: Poly) -> Self {
        if coeffs.len() >= field.minpoly.len() {
            coeffs = poly::rem(&coeffs, &field.minpoly);
        }
        poly::trim(&mut coeffs);
        FieldElement { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Arc<RealCyclotomicField>) -> Self {
        FieldElement { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Arc<RealCyclotomicField>) -> Self {
        Self::from_int(field, 1)
    }

    pub fn from_int(field: &Arc<RealCyclotomicField>, n: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(field: &Arc<RealCyclotomicField>, q: Rational) -> Self {
        Self::make(field, vec![q])
    }

    /// Element given by a polynomial in c (lowest degree first).
    pub fn from_coeffs(field: &Arc<RealCyclotomicField>, coeffs: Poly) -> Self {
        Self::make(field, coeffs)
    }

    /// The designated generator c = 2cos(2π/N).
    pub fn generator(field: &Arc<RealCyclotomicField>) -> Self {
        if field.is_rational() {
            return Self::from_rational(field, field.interval.0.clone());
        }
        Self::make(field, poly::from_ints(&[0, 1]))
    }

    pub fn field(&self) -> &Arc<RealCyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &Poly {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Exact sign at the designated real embedding.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if self.coeffs.len() == 1 {
            return if self.coeffs[0].is_positive() { 1 } else { -1 };
        }
        let (mut lo, mut hi) = self.field.interval.clone();
        let sign_lo = poly::eval(&self.field.minpoly, &lo).signum();
        loop {
            let (a, b) = eval_interval(&self.coeffs, &lo, &hi);
            if a.is_positive() {
                return 1;
            }
            if b.is_negative() {
                return -1;
            }
            let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
            if poly::eval(&self.field.minpoly, &mid).signum() == sign_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        if self.coeffs.len() == 1 {
            return Self::from_rational(&self.field, self.coeffs[0].recip());
        }
        let s = poly::inverse_mod(&self.coeffs, &self.field.minpoly).expect("minpoly is irreducible");
        Self::make(&self.field, s)
    }

    /// Image under the inclusion Q(2cos(2π/n)) ⊆ Q(2cos(2π/m)) for n | m.
    pub fn embed(&self, target: &Arc<RealCyclotomicField>) -> Self {
        if Arc::ptr_eq(&self.field, target) || self.field.modulus == target.modulus {
            return FieldElement { field: target.clone(), coeffs: self.coeffs.clone() };
        }
        if self.coeffs.len() <= 1 {
            return Self::make(target, self.coeffs.clone());
        }
        let (n, m) = (self.field.modulus, target.modulus);
        assert!(m % n == 0, "cannot embed Q(2cos(2π/{n})) into Q(2cos(2π/{m}))");
        let c = cos_value(target, (m / n) as i64);
        let mut acc = FieldElement::zero(target);
        for q in self.coeffs.iter().rev() {
            acc = &(&acc * &c) + &FieldElement::from_rational(target, q.clone());
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        let (lo, hi) = &self.field.interval;
        let c = ((lo + hi) / Rational::from_integer(BigInt::from(2))).to_f64().unwrap_or(0.0);
        self.coeffs.iter().rev().fold(0.0, |acc, q| acc * c + q.to_f64().unwrap_or(0.0))
    }
}

/// Interval Horner evaluation of a polynomial on [lo, hi].
fn eval_interval(p: &Poly, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut a = Rational::zero();
    let mut b = Rational::zero();
    for c in p.iter().rev() {
        let prods = [&a * lo, &a * hi, &b * lo, &b * hi];
        let mut mn = prods[0].clone();
        let mut mx = prods[0].clone();
        for x in &prods[1..] {
            if *x < mn {
                mn = x.clone();
            }
            if *x > mx {
                mx = x.clone();
            }
        }
        a = mn + c;
        b = mx + c;
    }
    (a, b)
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.modulus == other.field.modulus && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.modulus.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, q) in self.coeffs.iter().enumerate().rev() {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let a = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}c", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}c^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

fn same_field(a: &FieldElement, b: &FieldElement) {
    debug_assert_eq!(a.field.modulus, b.field.modulus, "mixed-field arithmetic");
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        same_field(self, rhs);
        FieldElement { field: self.field.clone(), coeffs: poly::add(&self.coeffs, &rhs.coeffs) }
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        same_field(self, rhs);
        FieldElement { field: self.field.clone(), coeffs: poly::sub(&self.coeffs, &rhs.coeffs) }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        same_field(self, rhs);
        if self.is_zero() || rhs.is_zero() {
            return FieldElement::zero(&self.field);
        }
        FieldElement::make(&self.field, poly::mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Div for &FieldElement {
    type Output = FieldElement;
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self * &rhs.inv()
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field.clone(), coeffs: poly::neg(&self.coeffs) }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}
