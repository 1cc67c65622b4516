//! Exact linear algebra over a real cyclotomic field.

use std::sync::Arc;

use super::field::{FieldElement, RealCyclotomicField};

pub type Vector = Vec<FieldElement>;
pub type Matrix = Vec<Vec<FieldElement>>;

pub fn zero_vector(field: &Arc<RealCyclotomicField>, n: usize) -> Vector {
    vec![FieldElement::zero(field); n]
}

pub fn identity(field: &Arc<RealCyclotomicField>, n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| FieldElement::from_int(field, (i == j) as i64))
                .collect()
        })
        .collect()
}

pub fn dot(u: &[FieldElement], v: &[FieldElement]) -> FieldElement {
    assert_eq!(u.len(), v.len());
    let mut acc = match u.first() {
        Some(x) => FieldElement::zero(x.field()),
        None => panic!("dot of empty vectors has no field"),
    };
    for (a, b) in u.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc = &acc + &(a * b);
        }
    }
    acc
}

/// u^T G v.
pub fn bilinear(u: &[FieldElement], g: &Matrix, v: &[FieldElement]) -> FieldElement {
    dot(u, &mat_vec(g, v))
}

pub fn mat_vec(m: &Matrix, v: &[FieldElement]) -> Vector {
    m.iter().map(|row| dot(row, v)).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    let col: Vector = b.iter().map(|r| r[j].clone()).collect();
                    dot(row, &col)
                })
                .collect()
        })
        .collect()
}

pub fn mat_sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect())
        .collect()
}

pub fn mat_add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q).collect())
        .collect()
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn is_zero_vector(v: &[FieldElement]) -> bool {
    v.iter().all(FieldElement::is_zero)
}

/// Bareiss fraction-free forward elimination. Returns the echelon matrix and pivot columns.
fn bareiss(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    if rows == 0 || cols == 0 {
        return (a, pivots);
    }
    let field = a[0][0].field().clone();
    let mut prev = FieldElement::one(&field);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            let factor = a[i][c].clone();
            for j in c..cols {
                let num = &(&a[r][c] * &a[i][j]) - &(&factor * &a[r][j]);
                a[i][j] = if prev.is_one() { num } else { &num / &prev };
            }
            for j in 0..c {
                a[i][j] = FieldElement::zero(&field);
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix) -> usize {
    bareiss(m).1.len()
}

/// Basis of the right kernel; each vector has its free coordinate equal to 1.
pub fn kernel(field: &Arc<RealCyclotomicField>, m: &Matrix, cols: usize) -> Vec<Vector> {
    if m.is_empty() {
        return (0..cols)
            .map(|j| {
                let mut v = zero_vector(field, cols);
                v[j] = FieldElement::one(field);
                v
            })
            .collect();
    }
    let (a, pivots) = bareiss(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = zero_vector(field, cols);
        v[f] = FieldElement::one(field);
        for (r, &pc) in pivots.iter().enumerate().rev() {
            let mut s = FieldElement::zero(field);
            for j in pc + 1..cols {
                if !v[j].is_zero() && !a[r][j].is_zero() {
                    s = &s + &(&a[r][j] * &v[j]);
                }
            }
            v[pc] = -&(&s / &a[r][pc]);
        }
        basis.push(v);
    }
    basis
}

/// A basis of the span of the given vectors, chosen among them.
pub fn span_basis(vectors: &[Vector]) -> Vec<Vector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    // Columns of the matrix are the vectors; pivot columns index a basis.
    let n = vectors[0].len();
    let m: Matrix = (0..n).map(|i| vectors.iter().map(|v| v[i].clone()).collect()).collect();
    bareiss(&m).1.into_iter().map(|c| vectors[c].clone()).collect()
}

/// Basis of the column space.
pub fn column_space(m: &Matrix) -> Vec<Vector> {
    span_basis(&transpose(m))
}

/// Orthogonal complement of span(basis) with respect to the form `gram`.
pub fn orthogonal_complement(
    field: &Arc<RealCyclotomicField>,
    basis: &[Vector],
    gram: &Matrix,
    dim: usize,
) -> Vec<Vector> {
    let rows: Matrix = basis.iter().map(|b| mat_vec(gram, b)).collect();
    kernel(field, &rows, dim)
}

/// Some x with m·x = b, if one exists.
pub fn solve(field: &Arc<RealCyclotomicField>, m: &Matrix, b: &[FieldElement]) -> Option<Vector> {
    let cols = m.first().map_or(0, |r| r.len());
    let aug: Matrix = m
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(-x);
            r
        })
        .collect();
    let ker = kernel(field, &aug, cols + 1);
    let v = ker.into_iter().find(|v| !v[cols].is_zero())?;
    let scale = v[cols].inv();
    Some(v[..cols].iter().map(|x| x * &scale).collect())
}

pub fn embed_vector(v: &[FieldElement], target: &Arc<RealCyclotomicField>) -> Vector {
    v.iter().map(|x| x.embed(target)).collect()
}

pub fn embed_matrix(m: &Matrix, target: &Arc<RealCyclotomicField>) -> Matrix {
    m.iter().map(|r| embed_vector(r, target)).collect()
}
