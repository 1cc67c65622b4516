//! Dense univariate polynomials over Q, coefficients stored lowest degree first.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Poly = Vec<BigRational>;

pub fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &Poly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn from_ints(coeffs: &[i64]) -> Poly {
    let mut p: Poly = coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
    trim(&mut p);
    p
}

pub fn add(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        };
        out.push(x);
    }
    trim(&mut out);
    out
}

pub fn neg(a: &Poly) -> Poly {
    a.iter().map(|c| -c).collect()
}

pub fn sub(a: &Poly, b: &Poly) -> Poly {
    add(a, &neg(b))
}

pub fn scale(a: &Poly, k: &BigRational) -> Poly {
    if k.is_zero() {
        return Vec::new();
    }
    a.iter().map(|c| c * k).collect()
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead = b[db].clone();
    let mut r = a.clone();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        let shift = dr - db;
        for (j, y) in b.iter().enumerate().take(db + 1) {
            r[shift + j] -= &c * y;
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub fn rem(a: &Poly, b: &Poly) -> Poly {
    divrem(a, b).1
}

/// Inverse of `a` modulo `m`, or `None` when they share a factor.
pub fn inverse_mod(a: &Poly, m: &Poly) -> Option<Poly> {
    let (mut r0, mut r1) = (m.clone(), rem(a, m));
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![BigRational::one()]);
    degree(&r1)?;
    while degree(&r1).is_some() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if degree(&r0) != Some(0) {
        return None;
    }
    let inv = r0[0].recip();
    Some(rem(&scale(&s0, &inv), m))
}

pub fn eval(p: &Poly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn derivative(p: &Poly) -> Poly {
    let mut out: Poly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut out);
    out
}

fn sign_changes(seq: &[Poly], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let v = eval(p, x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots of a squarefree `p` in the half-open interval (a, b].
pub fn sturm_count(p: &Poly, a: &BigRational, b: &BigRational) -> usize {
    let mut seq = vec![p.clone(), derivative(p)];
    loop {
        let n = seq.len();
        let r = rem(&seq[n - 2], &seq[n - 1]);
        if degree(&r).is_none() {
            break;
        }
        seq.push(neg(&r));
    }
    sign_changes(&seq, a) - sign_changes(&seq, b)
}

/// The N-th cyclotomic polynomial, by dividing x^N - 1 by the Φ_d of its proper divisors.
pub fn cyclotomic(n: u64) -> Poly {
    let mut p = vec![BigRational::zero(); n as usize + 1];
    p[0] = -BigRational::one();
    p[n as usize] = BigRational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = divrem(&p, &cyclotomic(d)).0;
        }
    }
    p
}

/// Chebyshev-style polynomials P_k(y) with x^k + x^{-k} = P_k(x + 1/x).
pub fn chebyshev_sum(k: usize) -> Poly {
    let two = from_ints(&[2]);
    let y = from_ints(&[0, 1]);
    let mut prev = two.clone();
    if k == 0 {
        return prev;
    }
    let mut cur = y.clone();
    for _ in 1..k {
        let next = sub(&mul(&y, &cur), &prev);
        prev = cur;
        cur = next;
    }
    cur
}
