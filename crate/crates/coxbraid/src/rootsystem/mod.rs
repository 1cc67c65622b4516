//! Root systems of finite Coxeter types: roots, Gram data, weights, twists, parabolic subsystems.

mod cartan;
mod rootset;

use std::collections::HashMap;
use std::sync::Arc;

use crate::exactfield::{field_create, linalg, FieldElement, Matrix, RealCyclotomicField, Vector};

pub use cartan::{CartanType, CoxeterType, Family, TypeError};
pub use rootset::{all_positive, bits, RootSet, SignedRoot};

/// A set of simple-root indices as a bitmask.
pub type ParabolicIndex = u64;

#[derive(Debug)]
pub struct RootSystem {
    cartan: CartanType,
    field: Arc<RealCyclotomicField>,
    rank: usize,
    gram: Matrix,
    roots: Vec<Vector>,
    index: HashMap<Vector, usize>,
    heights: Vec<usize>,
    supports: Vec<ParabolicIndex>,
    functionals: Vec<Vector>,
    refl: Vec<Vec<SignedRoot>>,
    block_of: Vec<usize>,
    twists: Vec<Vec<usize>>,
    twist_act: Vec<Vec<SignedRoot>>,
    twist_mul: Vec<Vec<usize>>,
    twist_inv: Vec<usize>,
}

impl RootSystem {
    pub fn build(cartan: &CartanType) -> Result<Arc<RootSystem>, TypeError> {
        let field = field_create(cartan.base_modulus());
        let rank = cartan.rank();
        let mut gram = vec![vec![FieldElement::zero(&field); rank]; rank];
        let mut block_of = Vec::with_capacity(rank);
        let mut offset = 0;
        for (b, t) in cartan.0.iter().enumerate() {
            let g = t.gram(&field);
            for i in 0..t.rank {
                for j in 0..t.rank {
                    gram[offset + i][offset + j] = g[i][j].clone();
                }
                block_of.push(b);
            }
            offset += t.rank;
        }
        let mut rs = RootSystem {
            cartan: cartan.clone(),
            field,
            rank,
            gram,
            roots: Vec::new(),
            index: HashMap::new(),
            heights: Vec::new(),
            supports: Vec::new(),
            functionals: Vec::new(),
            refl: Vec::new(),
            block_of,
            twists: Vec::new(),
            twist_act: Vec::new(),
            twist_mul: Vec::new(),
            twist_inv: Vec::new(),
        };
        rs.close_roots()?;
        rs.build_reflections();
        rs.build_twists();
        Ok(Arc::new(rs))
    }

    pub fn from_str(s: &str) -> Result<Arc<RootSystem>, TypeError> {
        RootSystem::build(&s.parse()?)
    }

    fn close_roots(&mut self) -> Result<(), TypeError> {
        let n = self.rank;
        for i in 0..n {
            let mut v = linalg::zero_vector(&self.field, n);
            v[i] = FieldElement::one(&self.field);
            self.push_root(v);
        }
        let mut next = 0;
        while next < self.roots.len() {
            let beta = self.roots[next].clone();
            for s in 0..n {
                let img = self.reflect(s, &beta);
                if img.iter().all(|x| x.sign() >= 0) && !self.index.contains_key(&img) {
                    self.push_root(img);
                    if self.roots.len() > 128 {
                        return Err(TypeError::TooLarge(self.roots.len()));
                    }
                }
            }
            next += 1;
        }
        Ok(())
    }

    fn push_root(&mut self, v: Vector) {
        let idx = self.roots.len();
        let support = v.iter().enumerate().filter(|(_, x)| !x.is_zero()).fold(0, |m, (i, _)| m | 1 << i);
        let height = height_of(&v);
        self.functionals.push(linalg::mat_vec(&self.gram, &v));
        self.supports.push(support);
        self.heights.push(height);
        self.index.insert(v.clone(), idx);
        self.roots.push(v);
    }

    /// s_i(v) in simple-root coordinates.
    pub fn reflect(&self, s: usize, v: &[FieldElement]) -> Vector {
        let pairing = linalg::dot(v, &self.gram_column(s));
        let coeff = &(&pairing + &pairing) / &self.gram[s][s];
        let mut out = v.to_vec();
        out[s] = &out[s] - &coeff;
        out
    }

    fn gram_column(&self, s: usize) -> Vector {
        self.gram.iter().map(|r| r[s].clone()).collect()
    }

    fn build_reflections(&mut self) {
        let n = self.rank;
        let p = self.npos();
        self.refl = (0..n)
            .map(|s| {
                let mut table = vec![0 as SignedRoot; 2 * p];
                for r in 0..p {
                    let img = self.lookup(&self.reflect(s, &self.roots[r])).expect("roots are closed");
                    table[r] = img;
                    table[r + p] = self.negate(img);
                }
                table
            })
            .collect();
    }

    fn build_twists(&mut self) {
        let n = self.rank;
        let mut found = Vec::new();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.twist_search(0, &mut perm, &mut used, &mut found);
        let order = |p: &Vec<usize>| {
            let mut q: Vec<usize> = (0..n).collect();
            let mut k = 0;
            loop {
                q = q.iter().map(|&i| p[i]).collect();
                k += 1;
                if q.iter().enumerate().all(|(i, &x)| i == x) {
                    return k;
                }
            }
        };
        found.sort_by(|a, b| {
            let ia = a.iter().enumerate().all(|(i, &x)| i == x);
            let ib = b.iter().enumerate().all(|(i, &x)| i == x);
            ib.cmp(&ia).then(order(b).cmp(&order(a))).then(a.cmp(b))
        });
        let p = self.npos();
        self.twist_act = found
            .iter()
            .map(|perm| {
                let mut table = vec![0 as SignedRoot; 2 * p];
                for r in 0..p {
                    let mut v = linalg::zero_vector(&self.field, n);
                    for i in 0..n {
                        v[perm[i]] = self.roots[r][i].clone();
                    }
                    let img = self.lookup(&v).expect("twists permute roots");
                    table[r] = img;
                    table[r + p] = self.negate(img);
                }
                table
            })
            .collect();
        let pos = |q: &Vec<usize>| found.iter().position(|f| f == q).expect("twists form a group");
        self.twist_mul = found
            .iter()
            .map(|a| found.iter().map(|b| pos(&b.iter().map(|&i| a[i]).collect())).collect())
            .collect();
        self.twist_inv = (0..found.len())
            .map(|a| (0..found.len()).find(|&b| self.twist_mul[a][b] == 0).unwrap())
            .collect();
        self.twists = found;
    }

    fn twist_search(&self, i: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = self.rank;
        if i == n {
            out.push(perm.clone());
            return;
        }
        for j in 0..n {
            if used[j] || self.block_of[j] != self.block_of[i] {
                continue;
            }
            let ok = (0..i).all(|k| self.gram[perm[k]][j] == self.gram[k][i]) && self.gram[j][j] == self.gram[i][i];
            if ok {
                perm[i] = j;
                used[j] = true;
                self.twist_search(i + 1, perm, used, out);
                used[j] = false;
            }
        }
        perm[i] = usize::MAX;
    }

    pub fn cartan(&self) -> &CartanType {
        &self.cartan
    }

    pub fn field(&self) -> &Arc<RealCyclotomicField> {
        &self.field
    }

    /// Modulus of the base field.
    pub fn base_modulus(&self) -> u64 {
        self.field.modulus()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn npos(&self) -> usize {
        self.roots.len()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn positive_roots(&self) -> &[Vector] {
        &self.roots
    }

    pub fn root(&self, r: usize) -> &Vector {
        &self.roots[r]
    }

    /// Coordinates of a signed root.
    pub fn signed_root_vector(&self, r: SignedRoot) -> Vector {
        let p = self.npos();
        let r = r as usize;
        if r < p {
            self.roots[r].clone()
        } else {
            self.roots[r - p].iter().map(|x| -x).collect()
        }
    }

    /// The functional v ↦ (β_r, v) in simple-root coordinates.
    pub fn functional(&self, r: usize) -> &Vector {
        &self.functionals[r]
    }

    pub fn height(&self, r: usize) -> usize {
        self.heights[r]
    }

    pub fn support(&self, r: usize) -> ParabolicIndex {
        self.supports[r]
    }

    pub fn lookup(&self, v: &[FieldElement]) -> Option<SignedRoot> {
        if let Some(&i) = self.index.get(v) {
            return Some(i as SignedRoot);
        }
        let neg: Vector = v.iter().map(|x| -x).collect();
        self.index.get(&neg).map(|&i| (i + self.npos()) as SignedRoot)
    }

    pub fn negate(&self, r: SignedRoot) -> SignedRoot {
        let p = self.npos() as SignedRoot;
        if r < p {
            r + p
        } else {
            r - p
        }
    }

    pub fn is_positive(&self, r: SignedRoot) -> bool {
        (r as usize) < self.npos()
    }

    /// Image of a signed root under s_i.
    pub fn simple_reflection(&self, s: usize, r: SignedRoot) -> SignedRoot {
        self.refl[s][r as usize]
    }

    pub fn simple_reflection_table(&self, s: usize) -> &[SignedRoot] {
        &self.refl[s]
    }

    /// Images of the positive roots under the reflection in β_r.
    pub fn reflection_images(&self, r: usize) -> Vec<SignedRoot> {
        let beta = &self.roots[r];
        let norm = linalg::dot(beta, &self.functionals[r]);
        (0..self.npos())
            .map(|g| {
                let pairing = linalg::dot(&self.roots[g], &self.functionals[r]);
                let c = &(&pairing + &pairing) / &norm;
                let v: Vector = self.roots[g].iter().zip(beta).map(|(x, b)| x - &(&c * b)).collect();
                self.lookup(&v).expect("reflections permute roots")
            })
            .collect()
    }

    pub fn twists(&self) -> &[Vec<usize>] {
        &self.twists
    }

    pub fn twist_count(&self) -> usize {
        self.twists.len()
    }

    pub fn twist_action(&self, t: usize, r: SignedRoot) -> SignedRoot {
        self.twist_act[t][r as usize]
    }

    /// Index of the twist a∘b.
    pub fn twist_compose(&self, a: usize, b: usize) -> usize {
        self.twist_mul[a][b]
    }

    pub fn twist_inverse(&self, a: usize) -> usize {
        self.twist_inv[a]
    }

    pub fn twist_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.twist_mul[a][x];
            k += 1;
        }
        k
    }

    /// Image of the simple-index set J under a twist.
    pub fn twist_parabolic(&self, t: usize, j: ParabolicIndex) -> ParabolicIndex {
        bits(j as u128).fold(0, |m, i| m | 1 << self.twists[t][i])
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    pub fn full_index(&self) -> ParabolicIndex {
        (1u64 << self.rank) - 1
    }

    /// Mask of positive roots supported on J.
    pub fn parabolic_positive(&self, j: ParabolicIndex) -> u128 {
        (0..self.npos())
            .filter(|&r| self.supports[r] & !j == 0)
            .fold(0, |m, r| m | 1 << r)
    }

    /// Positive roots orthogonal to every vector in `basis`.
    pub fn orthogonal_roots(&self, basis: &[Vector]) -> u128 {
        let mut m = 0u128;
        for r in 0..self.npos() {
            let f = &self.functionals[r];
            if basis.iter().all(|v| linalg::dot(f, v).is_zero()) {
                m |= 1 << r;
            }
        }
        m
    }

    /// Fundamental weights in simple-root coordinates: (ω_i, α_j^∨) = δ_ij.
    pub fn fundamental_weights(&self) -> Vec<Vector> {
        let n = self.rank;
        (0..n)
            .map(|i| {
                let mut rhs = linalg::zero_vector(&self.field, n);
                let half = FieldElement::from_rational(&self.field, crate::exactfield::rational(1, 2));
                rhs[i] = &self.gram[i][i] * &half;
                linalg::solve(&self.field, &self.gram, &rhs).expect("Gram matrix is nondegenerate")
            })
            .collect()
    }

    /// The highest root of an irreducible crystallographic system.
    pub fn highest_root(&self) -> Option<usize> {
        if !self.cartan.is_irreducible() || !self.cartan.0[0].is_crystallographic() {
            return None;
        }
        (0..self.npos()).max_by_key(|&r| self.heights[r])
    }

    /// J if L is exactly the root subsystem ±R_J, otherwise `None`.
    pub fn standard_parabolic_set(&self, l: &RootSet) -> Option<ParabolicIndex> {
        let j = (0..self.rank).filter(|&i| l.pos >> i & 1 == 1).fold(0, |m, i| m | 1 << i);
        let rj = self.parabolic_positive(j);
        (*l == RootSet::symmetric(rj)).then_some(j)
    }

    /// Closure test: every root that is a positive combination of two members lies in L.
    pub fn convex_root_set(&self, l: &RootSet) -> bool {
        let p = self.npos();
        let members: Vec<Vector> = l.iter(p).map(|r| self.signed_root_vector(r)).collect();
        let all: Vec<(SignedRoot, Vector)> =
            (0..2 * p).map(|r| (r as SignedRoot, self.signed_root_vector(r as SignedRoot))).collect();
        for (a, u) in members.iter().enumerate() {
            for v in &members[a + 1..] {
                let Some((i, k, det)) = independent_pair(u, v) else {
                    continue;
                };
                for (g, gv) in &all {
                    if l.contains(p, *g) {
                        continue;
                    }
                    // Cramer's rule on coordinates i, k.
                    let x = &(&(&gv[i] * &v[k]) - &(&gv[k] * &v[i])) / &det;
                    let y = &(&(&u[i] * &gv[k]) - &(&u[k] * &gv[i])) / &det;
                    if x.sign() <= 0 || y.sign() <= 0 {
                        continue;
                    }
                    if gv.iter().zip(u.iter().zip(v)).all(|(c, (a, b))| *c == &(&x * a) + &(&y * b)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The dual Coxeter number of an irreducible system.
    pub fn dual_coxeter_number(&self) -> Option<u64> {
        if !self.cartan.is_irreducible() {
            return None;
        }
        if let Some(h) = self.cartan.0[0].dual_coxeter_number_table() {
            return Some(h);
        }
        let theta = self.highest_root()?;
        let len = self.reflection_images(theta).iter().filter(|&&r| !self.is_positive(r)).count();
        Some((len as u64 + 3) / 2)
    }
}

/// Sum of the coordinates (the height for crystallographic types; scaled by 1000 otherwise).
fn height_of(v: &[FieldElement]) -> usize {
    let rational: Option<Vec<_>> = v.iter().map(FieldElement::as_rational).collect();
    match rational {
        Some(qs) if qs.iter().all(|q| q.is_integer()) => {
            qs.iter().map(|q| q.to_integer().try_into().unwrap_or(0usize)).sum()
        }
        _ => (v.iter().map(FieldElement::to_f64).sum::<f64>() * 1000.0).round() as usize,
    }
}

fn independent_pair(u: &[FieldElement], v: &[FieldElement]) -> Option<(usize, usize, FieldElement)> {
    let n = u.len();
    for i in 0..n {
        for k in i + 1..n {
            let det = &(&u[i] * &v[k]) - &(&u[k] * &v[i]);
            if !det.is_zero() {
                return Some((i, k, det));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> Arc<RootSystem> {
        RootSystem::from_str(s).unwrap()
    }

    #[test]
    fn root_counts() {
        let cases = [
            ("A1", 1), ("A2", 3), ("A4", 10), ("B2", 4), ("B3", 9), ("C3", 9), ("B4", 16), ("D4", 12),
            ("D5", 20), ("E6", 36), ("E7", 63), ("E8", 120), ("F4", 24), ("G2", 6), ("H3", 15),
            ("H4", 60), ("I2(5)", 5), ("I2(7)", 7), ("I2(8)", 8), ("A2xA1", 4),
        ];
        for (t, n) in cases {
            assert_eq!(rs(t).npos(), n, "{t}");
        }
    }

    #[test]
    fn illegal_types() {
        for t in ["E5", "F3", "B1", "I2(2)", "Q3", "H5", "D3"] {
            assert!(RootSystem::from_str(t).is_err(), "{t}");
        }
    }

    #[test]
    fn twist_groups() {
        assert_eq!(rs("A3").twists(), &[vec![0, 1, 2], vec![2, 1, 0]]);
        let d4 = rs("D4");
        assert_eq!(d4.twist_count(), 6);
        assert_eq!(d4.twists()[1], vec![2, 1, 3, 0]);
        assert_eq!(rs("B3").twist_count(), 1);
        assert_eq!(rs("E6").twist_count(), 2);
        assert_eq!(rs("I2(5)").twist_count(), 2);
    }

    #[test]
    fn dual_coxeter_numbers() {
        assert_eq!(rs("H3").dual_coxeter_number(), Some(8));
        assert_eq!(rs("H4").dual_coxeter_number(), Some(24));
        assert_eq!(rs("B3").dual_coxeter_number(), Some(5));
        assert_eq!(rs("A3").dual_coxeter_number(), Some(4));
        assert_eq!(rs("E8").dual_coxeter_number(), Some(30));
        assert_eq!(rs("G2").dual_coxeter_number(), Some(4));
        assert_eq!(rs("F4").dual_coxeter_number(), Some(9));
        assert_eq!(rs("C3").dual_coxeter_number(), Some(4));
    }
}
