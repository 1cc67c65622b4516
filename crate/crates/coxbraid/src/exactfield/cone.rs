//! Strict feasibility of homogeneous cones restricted to a subspace.

use std::sync::Arc;

use super::field::{FieldElement, RealCyclotomicField};
use super::linalg::{dot, Vector};

#[derive(Clone, Debug)]
pub struct ConeProblem {
    pub field: Arc<RealCyclotomicField>,
    pub ambient_dim: usize,
    pub subspace_basis: Vec<Vector>,
    pub strict: Vec<Vector>,
    pub weak: Vec<Vector>,
}

impl ConeProblem {
    pub fn new(field: &Arc<RealCyclotomicField>, ambient_dim: usize, subspace_basis: Vec<Vector>) -> Self {
        ConeProblem {
            field: field.clone(),
            ambient_dim,
            subspace_basis,
            strict: Vec::new(),
            weak: Vec::new(),
        }
    }

    pub fn satisfied_by(&self, v: &[FieldElement]) -> bool {
        self.strict.iter().all(|f| dot(f, v).sign() > 0) && self.weak.iter().all(|g| dot(g, v).sign() >= 0)
    }

    fn point(&self, coords: &[FieldElement]) -> Vector {
        let mut v = vec![FieldElement::zero(&self.field); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.subspace_basis) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                *x = &*x + &(c * y);
            }
        }
        v
    }
}

/// Decides whether some v in the subspace satisfies every strict and weak constraint,
/// returning a witness when it does.
pub fn cone_strictly_feasible(p: &ConeProblem) -> (bool, Option<Vector>) {
    let k = p.subspace_basis.len();
    if k == 0 {
        return if p.strict.is_empty() {
            (true, Some(vec![FieldElement::zero(&p.field); p.ambient_dim]))
        } else {
            (false, None)
        };
    }
    // Constraint rows in subspace coordinates: a·y >= 1 (strict) or g·y >= 0 (weak).
    let mut rows: Vec<(Vector, i64)> = Vec::new();
    for f in &p.strict {
        rows.push((p.subspace_basis.iter().map(|b| dot(f, b)).collect(), 1));
    }
    for g in &p.weak {
        rows.push((p.subspace_basis.iter().map(|b| dot(g, b)).collect(), 0));
    }
    let coords = match phase_one(&p.field, k, &rows) {
        Some(y) => y,
        None => return (false, None),
    };
    let witness = p.point(&coords);
    assert!(p.satisfied_by(&witness), "simplex produced an invalid witness");
    (true, Some(witness))
}

/// Phase I simplex with Bland's rule for { y free : rows[i].0 · y >= rows[i].1 }.
fn phase_one(field: &Arc<RealCyclotomicField>, k: usize, rows: &[(Vector, i64)]) -> Option<Vector> {
    let m = rows.len();
    if m == 0 {
        return Some(vec![FieldElement::zero(field); k]);
    }
    // Columns: y+ (k), y- (k), surplus (m), artificial (m), rhs.
    let ncols = 2 * k + 2 * m;
    let zero = FieldElement::zero(field);
    let one = FieldElement::one(field);
    let mut t: Vec<Vec<FieldElement>> = Vec::with_capacity(m + 1);
    for (i, (a, b)) in rows.iter().enumerate() {
        let mut row = vec![zero.clone(); ncols + 1];
        for j in 0..k {
            row[j] = a[j].clone();
            row[k + j] = -&a[j];
        }
        row[2 * k + i] = -&one;
        row[2 * k + m + i] = one.clone();
        row[ncols] = FieldElement::from_int(field, *b);
        t.push(row);
    }
    // Objective row: minimize the sum of artificials, stored as reduced costs.
    let mut obj = vec![zero.clone(); ncols + 1];
    for row in &t {
        for j in 0..2 * k + m {
            obj[j] = &obj[j] - &row[j];
        }
        obj[ncols] = &obj[ncols] - &row[ncols];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (0..m).map(|i| 2 * k + m + i).collect();

    while let Some(enter) = (0..ncols).find(|&j| t[m][j].sign() < 0) {
        let mut leave: Option<(usize, FieldElement)> = None;
        for i in 0..m {
            if t[i][enter].sign() <= 0 {
                continue;
            }
            let ratio = &t[i][ncols] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => {
                    let s = (&ratio - lr).sign();
                    s < 0 || (s == 0 && basis[i] < basis[*li])
                }
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((r, _)) = leave else {
            // Unbounded Phase I cannot happen since the objective is bounded below by zero.
            unreachable!("phase one objective is bounded");
        };
        pivot(&mut t, r, enter);
        basis[r] = enter;
    }
    if !t[m][ncols].is_zero() {
        return None;
    }
    let mut y = vec![zero.clone(); k];
    for (i, &b) in basis.iter().enumerate() {
        if b < k {
            y[b] = &y[b] + &t[i][ncols];
        } else if b < 2 * k {
            y[b - k] = &y[b - k] - &t[i][ncols];
        }
    }
    Some(y)
}

fn pivot(t: &mut [Vec<FieldElement>], r: usize, c: usize) {
    let inv = t[r][c].inv();
    for x in t[r].iter_mut() {
        if !x.is_zero() {
            *x = &*x * &inv;
        }
    }
    let prow = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (x, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *x = &*x - &(&f * p);
            }
        }
    }
}
