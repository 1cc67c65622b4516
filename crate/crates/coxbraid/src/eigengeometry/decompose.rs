//! Real eigenspaces, fixed and moved spaces of an element.

use std::sync::Arc;

use num_integer::Integer;
use num_rational::Ratio;

use crate::coxeter::GroupElement;
use crate::exactfield::linalg::{column_space, embed_matrix, embed_vector, identity, mat_add, mat_sub};
use crate::exactfield::{cos_value, field_create, kernel, FieldElement, Matrix, RealCyclotomicField, Vector};
use crate::rootsystem::RootSystem;

/// Normalised rotation angle θ ∈ [0, 1/2].
pub type Angle = Ratio<i64>;

/// The reflection representation over a field containing every eigenvalue cosine of interest.
#[derive(Clone, Debug)]
pub struct Ambient {
    pub field: Arc<RealCyclotomicField>,
    pub rank: usize,
    /// Functionals of the positive roots, embedded into `field`.
    pub functionals: Vec<Vector>,
}

impl Ambient {
    /// The ambient field Q(2cos(2π/N)) with N = lcm(n, base modulus).
    pub fn new(rs: &RootSystem, n: u64) -> Self {
        let field = field_create(n.max(1).lcm(&rs.base_modulus()));
        let functionals = (0..rs.npos()).map(|r| embed_vector(rs.functional(r), &field)).collect();
        Ambient { field, rank: rs.rank(), functionals }
    }

    pub fn for_element(rs: &RootSystem, w: &GroupElement) -> Self {
        Self::new(rs, w.order() as u64)
    }

    /// Mask of positive roots orthogonal to every vector of `basis`.
    pub fn orthogonal_roots(&self, basis: &[Vector]) -> u128 {
        let mut m = 0u128;
        for (r, f) in self.functionals.iter().enumerate() {
            if basis.iter().all(|v| crate::exactfield::linalg::dot(f, v).is_zero()) {
                m |= 1 << r;
            }
        }
        m
    }

    pub fn embed(&self, v: &[FieldElement]) -> Vector {
        embed_vector(v, &self.field)
    }
}

/// One real eigenspace V_λ with λ = exp(2πiθ).
#[derive(Clone, Debug)]
pub struct EigenComponent {
    pub theta: Angle,
    pub basis: Vec<Vector>,
}

impl EigenComponent {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub order: usize,
    pub ambient: Ambient,
    /// Components sorted by increasing θ; the θ = 0 component is present even when trivial.
    pub components: Vec<EigenComponent>,
    pub fixed_basis: Vec<Vector>,
    pub moved_basis: Vec<Vector>,
}

impl EigenDecomposition {
    pub fn is_elliptic(&self) -> bool {
        self.fixed_basis.is_empty()
    }

    pub fn component(&self, theta: Angle) -> Option<&EigenComponent> {
        self.components.iter().find(|c| c.theta == theta)
    }

    /// The nonzero components, i.e. the eigenvalues that actually occur.
    pub fn nonzero_components(&self) -> impl Iterator<Item = (usize, &EigenComponent)> {
        self.components.iter().enumerate().filter(|(_, c)| c.dim() > 0)
    }
}

/// Splits V into the real eigenspaces of w, computed exactly over Q(2cos(2π/N)).
pub fn eigen_decompose(rs: &RootSystem, w: &GroupElement) -> EigenDecomposition {
    let order = w.order();
    let ambient = Ambient::for_element(rs, w);
    let field = &ambient.field;
    let n = rs.rank();
    let m = embed_matrix(&w.matrix(rs), field);
    let minv = embed_matrix(&w.inverse(rs).matrix(rs), field);
    let sum = mat_add(&m, &minv);
    let id = identity(field, n);
    let big_n = field.modulus() as i64;
    let mut components = Vec::new();
    for k in 0..=order / 2 {
        let theta = Angle::new(k as i64, order as i64);
        let c = cos_value(field, theta.numer() * big_n / theta.denom());
        let shifted: Matrix = mat_sub(&sum, &scale(&id, &c));
        let basis = kernel(field, &shifted, n);
        if !basis.is_empty() || theta == Angle::from_integer(0) {
            components.push(EigenComponent { theta, basis });
        }
    }
    let fixed_basis = components[0].basis.clone();
    let moved_basis = moved_space(rs, w).iter().map(|v| embed_vector(v, field)).collect();
    EigenDecomposition { order, ambient, components, fixed_basis, moved_basis }
}

fn scale(m: &Matrix, c: &FieldElement) -> Matrix {
    m.iter().map(|row| row.iter().map(|x| x * c).collect()).collect()
}

/// Basis of V_w = im(id − w) over the base field.
pub fn moved_space(rs: &RootSystem, w: &GroupElement) -> Vec<Vector> {
    let id = identity(rs.field(), rs.rank());
    column_space(&mat_sub(&id, &w.matrix(rs)))
}

/// Basis of V^w = ker(w − id) over the base field.
pub fn fixed_space(rs: &RootSystem, w: &GroupElement) -> Vec<Vector> {
    let id = identity(rs.field(), rs.rank());
    kernel(rs.field(), &mat_sub(&w.matrix(rs), &id), rs.rank())
}
