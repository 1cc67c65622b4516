//! Coxeter types, their Gram matrices and type-string parsing.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;

use crate::exactfield::{field_create, rational, FieldElement, Matrix, RealCyclotomicField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterType {
    pub family: Family,
    pub rank: usize,
    /// Dihedral order, only for I2(m).
    pub m: Option<u64>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TypeError {
    #[error("illegal Coxeter type {0}")]
    Illegal(String),
    #[error("cannot parse Coxeter type `{0}`")]
    Syntax(String),
    #[error("root system has {0} positive roots; at most 128 are supported")]
    TooLarge(usize),
}

impl CoxeterType {
    pub fn new(family: Family, rank: usize) -> Result<Self, TypeError> {
        let t = CoxeterType { family, rank, m: None };
        t.validate()?;
        Ok(t)
    }

    pub fn dihedral(m: u64) -> Result<Self, TypeError> {
        let t = CoxeterType { family: Family::I, rank: 2, m: Some(m) };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<(), TypeError> {
        let n = self.rank;
        let ok = match self.family {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 4,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
            Family::H => n == 3 || n == 4,
            Family::I => n == 2 && self.m.is_some_and(|m| m >= 3),
        };
        if ok && (self.family == Family::I) == self.m.is_some() {
            Ok(())
        } else {
            Err(TypeError::Illegal(self.to_string()))
        }
    }

    pub fn is_crystallographic(&self) -> bool {
        match self.family {
            Family::H => false,
            Family::I => matches!(self.m, Some(3 | 4 | 6)),
            _ => true,
        }
    }

    /// Modulus of the field holding the Gram matrix.
    pub fn base_modulus(&self) -> u64 {
        match self.family {
            Family::H => 5,
            Family::I => 2 * self.m.unwrap(),
            _ => 1,
        }
    }

    /// Gram matrix over `field` (whose modulus must be a multiple of the base modulus).
    pub fn gram(&self, field: &Arc<RealCyclotomicField>) -> Matrix {
        let n = self.rank;
        let q = |a: i64, b: i64| FieldElement::from_rational(field, rational(a, b));
        let mut g = vec![vec![q(0, 1); n]; n];
        let link = |g: &mut Matrix, i: usize, j: usize, v: FieldElement| {
            g[i][j] = v.clone();
            g[j][i] = v;
        };
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = q(2, 1);
        }
        match self.family {
            Family::A => (0..n - 1).for_each(|i| link(&mut g, i, i + 1, q(-1, 1))),
            Family::B => {
                (0..n - 1).for_each(|i| link(&mut g, i, i + 1, q(-1, 1)));
                g[n - 1][n - 1] = q(1, 1);
            }
            Family::C => {
                for i in 0..n - 1 {
                    g[i][i] = q(1, 1);
                }
                (0..n - 2).for_each(|i| link(&mut g, i, i + 1, q(-1, 2)));
                link(&mut g, n - 2, n - 1, q(-1, 1));
            }
            Family::D => {
                (0..n - 2).for_each(|i| link(&mut g, i, i + 1, q(-1, 1)));
                link(&mut g, n - 3, n - 1, q(-1, 1));
            }
            Family::E => {
                link(&mut g, 0, 2, q(-1, 1));
                link(&mut g, 1, 3, q(-1, 1));
                (2..n - 1).for_each(|i| link(&mut g, i, i + 1, q(-1, 1)));
            }
            Family::F => {
                g[2][2] = q(1, 1);
                g[3][3] = q(1, 1);
                link(&mut g, 0, 1, q(-1, 1));
                link(&mut g, 1, 2, q(-1, 1));
                link(&mut g, 2, 3, q(-1, 2));
            }
            Family::G => {
                g[1][1] = q(6, 1);
                link(&mut g, 0, 1, q(-3, 1));
            }
            Family::H => {
                // -2cos(π/5) = -(c + 1) with c = 2cos(2π/5).
                let f5 = field_create(5);
                let phi = FieldElement::from_coeffs(&f5, crate::exactfield::poly::from_ints(&[1, 1]));
                link(&mut g, 0, 1, -phi.embed(field));
                (1..n - 1).for_each(|i| link(&mut g, i, i + 1, q(-1, 1)));
            }
            Family::I => {
                let base = field_create(2 * self.m.unwrap());
                link(&mut g, 0, 1, -FieldElement::generator(&base).embed(field));
            }
        }
        g
    }

    /// The dual Coxeter number, with the conventional values 8, 24 and ⌈m/2⌉+1 for H3, H4, I2(m).
    pub fn dual_coxeter_number_table(&self) -> Option<u64> {
        match self.family {
            Family::H => Some(if self.rank == 3 { 8 } else { 24 }),
            Family::I => Some(self.m.unwrap().div_ceil(2) + 1),
            _ => None,
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            Some(m) => write!(f, "I2({m})"),
            None => write!(f, "{:?}{}", self.family, self.rank),
        }
    }
}

/// A product of irreducible types, e.g. `A2xA1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanType(pub Vec<CoxeterType>);

impl CartanType {
    pub fn rank(&self) -> usize {
        self.0.iter().map(|t| t.rank).sum()
    }

    pub fn base_modulus(&self) -> u64 {
        self.0.iter().fold(1, |acc, t| acc.lcm(&t.base_modulus()))
    }

    pub fn is_irreducible(&self) -> bool {
        self.0.len() == 1
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

fn parse_family(c: char) -> Option<Family> {
    Some(match c.to_ascii_uppercase() {
        'A' => Family::A,
        'B' => Family::B,
        'C' => Family::C,
        'D' => Family::D,
        'E' => Family::E,
        'F' => Family::F,
        'G' => Family::G,
        'H' => Family::H,
        'I' => Family::I,
        _ => return None,
    })
}

impl FromStr for CoxeterType {
    type Err = TypeError;
    fn from_str(s: &str) -> Result<Self, TypeError> {
        let s = s.trim();
        let syntax = || TypeError::Syntax(s.to_string());
        let mut chars = s.chars();
        let family = chars.next().and_then(parse_family).ok_or_else(syntax)?;
        let rest = chars.as_str();
        if family == Family::I {
            let inner = rest
                .strip_prefix("2(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(syntax)?;
            let m: u64 = inner.trim().parse().map_err(|_| syntax())?;
            return CoxeterType::dihedral(m);
        }
        let rank: usize = rest.parse().map_err(|_| syntax())?;
        CoxeterType::new(family, rank)
    }
}

impl FromStr for CartanType {
    type Err = TypeError;
    fn from_str(s: &str) -> Result<Self, TypeError> {
        let parts: Result<Vec<CoxeterType>, TypeError> =
            s.split(['x', 'X', '*']).map(str::parse).collect();
        let parts = parts?;
        if parts.is_empty() {
            return Err(TypeError::Syntax(s.to_string()));
        }
        Ok(CartanType(parts))
    }
}

impl From<CoxeterType> for CartanType {
    fn from(t: CoxeterType) -> Self {
        CartanType(vec![t])
    }
}
