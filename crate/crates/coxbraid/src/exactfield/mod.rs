//! Exact scalars: rationals, real cyclotomic fields, linear algebra and cone feasibility.

pub mod cone;
pub mod field;
pub mod linalg;
pub mod poly;

pub use cone::{cone_strictly_feasible, ConeProblem};
pub use field::{cos_value, field_create, rational, FieldElement, Rational, RealCyclotomicField};
pub use linalg::{kernel, Matrix, Vector};
