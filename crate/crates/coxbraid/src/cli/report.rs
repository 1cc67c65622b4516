//! Element, class and normal-form reports.

use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{braid_equation, braid_power_normal_form, left_normal_form, power_normal_form, BraidEquation, BraidWord};
use crate::coxeter::{conjugacy_classes, power_bound, squares_to_twist_class, GroupElement, GroupError};
use crate::eigengeometry::{eigen_decompose, is_dominant, is_quasiregular_with, is_regular_with};
use crate::rootsystem::{bits, ParabolicIndex, RootSet, RootSystem, SignedRoot};

/// Simple-root coordinates of a signed root, e.g. `[0,1,1]` or `-[1,1,0]`.
pub fn root_label(rs: &RootSystem, r: SignedRoot) -> String {
    let p = rs.npos();
    let (sign, idx) = if (r as usize) < p { ("", r as usize) } else { ("-", r as usize - p) };
    let coords: Vec<String> = rs.root(idx).iter().map(|x| x.to_string()).collect();
    format!("{sign}[{}]", coords.join(","))
}

fn labels(rs: &RootSystem, set: &RootSet) -> Vec<String> {
    set.iter(rs.npos()).map(|r| root_label(rs, r)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenReport {
    pub theta: String,
    pub dimension: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ElementReport {
    pub word: String,
    pub twist: usize,
    pub length: usize,
    pub order: usize,
    pub inversions: Vec<String>,
    pub fixed: Vec<String>,
    pub stable: Vec<String>,
    pub fixed_count: usize,
    pub convex: bool,
    pub firmly_convex: bool,
    pub power_bound: Option<String>,
    pub involution: bool,
    pub elliptic: bool,
    pub eigenvalues: Vec<EigenReport>,
    pub dominant: bool,
    pub quasiregular: bool,
    pub regular: bool,
    pub braid_equation: BraidEquation,
}

pub fn element_report(rs: &RootSystem, w: &GroupElement) -> ElementReport {
    let data = w.inversion_data(rs);
    let decomp = eigen_decompose(rs, w);
    ElementReport {
        word: w.word_string(rs),
        twist: w.twist(),
        length: w.length(),
        order: w.order(),
        inversions: labels(rs, &RootSet::from_positive(data.inversions)),
        fixed: labels(rs, &data.fixed),
        stable: labels(rs, &data.stable),
        fixed_count: data.fixed_count(),
        convex: data.is_convex(rs),
        firmly_convex: data.is_firmly_convex(rs),
        power_bound: power_bound(rs, w).ok().map(|pb| pb.word_string(rs)),
        involution: squares_to_twist_class(rs, w),
        elliptic: decomp.is_elliptic(),
        eigenvalues: decomp
            .nonzero_components()
            .map(|(_, c)| EigenReport { theta: c.theta.to_string(), dimension: c.dim() })
            .collect(),
        dominant: is_dominant(rs, w),
        quasiregular: is_quasiregular_with(rs, w, &decomp),
        regular: is_regular_with(&decomp),
        braid_equation: braid_equation(rs, w),
    }
}

/// Per-length counts inside one class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LayerReport {
    pub length: usize,
    pub count: usize,
    pub convex: usize,
    pub firmly_convex: usize,
    pub dominant: usize,
    /// Elements satisfying DG(b_w^d) = pb(w) for some d.
    pub braid_equation: usize,
    /// Largest least witness d among them.
    pub max_witness: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub representative: String,
    pub twist: usize,
    pub size: usize,
    pub min_length: usize,
    pub max_length: usize,
    pub dominant_min_length: Option<usize>,
    pub dominant_max_length: Option<usize>,
    pub fixed_count: usize,
    pub order: usize,
    pub elliptic: bool,
    pub quasiregular: bool,
    pub layers: Vec<LayerReport>,
}

#[derive(Clone, Copy, Default)]
struct ElementFlags {
    convex: bool,
    firmly_convex: bool,
    dominant: bool,
    witness: Option<usize>,
}

fn element_flags(rs: &RootSystem, w: &GroupElement) -> ElementFlags {
    let data = w.inversion_data(rs);
    let convex = data.is_convex(rs);
    ElementFlags {
        convex,
        firmly_convex: data.is_firmly_convex(rs),
        dominant: is_dominant(rs, w),
        witness: if convex { braid_equation(rs, w).witness } else { None },
    }
}

/// Summary of one class (elements sorted by length); element checks run in parallel.
pub fn class_report(rs: &RootSystem, class: &[GroupElement]) -> ClassReport {
    let rep = &class[0];
    let decomp = eigen_decompose(rs, rep);
    let flags: Vec<ElementFlags> = class.par_iter().map(|w| element_flags(rs, w)).collect();
    let mut layers: Vec<LayerReport> = Vec::new();
    for (w, f) in class.iter().zip(&flags) {
        if layers.last().is_none_or(|l| l.length != w.length()) {
            layers.push(LayerReport { length: w.length(), ..Default::default() });
        }
        let l = layers.last_mut().unwrap();
        l.count += 1;
        l.convex += f.convex as usize;
        l.firmly_convex += f.firmly_convex as usize;
        l.dominant += f.dominant as usize;
        if let Some(d) = f.witness {
            l.braid_equation += 1;
            l.max_witness = l.max_witness.max(Some(d));
        }
    }
    let dominant_lengths: Vec<usize> = layers.iter().filter(|l| l.dominant > 0).map(|l| l.length).collect();
    ClassReport {
        representative: rep.word_string(rs),
        twist: rep.twist(),
        size: class.len(),
        min_length: rep.length(),
        max_length: class.last().unwrap().length(),
        dominant_min_length: dominant_lengths.first().copied(),
        dominant_max_length: dominant_lengths.last().copied(),
        fixed_count: rep.inversion_data(rs).fixed_count(),
        order: rep.order(),
        elliptic: decomp.is_elliptic(),
        quasiregular: is_quasiregular_with(rs, rep, &decomp),
        layers,
    }
}

/// One report per W_J-orbit of the coset δW̃, ordered by (ℓ(O_min), representative word).
pub fn classify(rs: &RootSystem, twist: usize, j: ParabolicIndex, cap: usize) -> Result<Vec<ClassReport>, GroupError> {
    let classes = conjugacy_classes(rs, twist, j, cap)?;
    let mut reports: Vec<ClassReport> = classes.iter().map(|c| class_report(rs, c)).collect();
    reports.sort_by(|a, b| (a.min_length, &a.representative).cmp(&(b.min_length, &b.representative)));
    Ok(reports)
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorReport {
    pub word: String,
    pub length: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct DgnReport {
    pub input: String,
    pub power: usize,
    pub twist: usize,
    pub factors: Vec<FactorReport>,
    pub length: usize,
    pub left_factors: Option<Vec<FactorReport>>,
}

fn factor_reports(rs: &RootSystem, b: &BraidWord) -> Vec<FactorReport> {
    b.factors.iter().map(|x| FactorReport { word: x.word_string(rs), length: x.length() }).collect()
}

/// DGN(b^d); a single reduced factor uses the incremental power algorithm.
pub fn dgn_report(rs: &RootSystem, b: &BraidWord, d: usize, left: bool) -> DgnReport {
    let nf = if b.len() <= 1 {
        let w = b.image(rs);
        power_normal_form(rs, &w, d)
    } else {
        braid_power_normal_form(rs, b, d)
    };
    let left_factors = left.then(|| {
        let full = (0..d).fold(BraidWord::identity(), |acc, _| acc.product(rs, b));
        factor_reports(rs, &left_normal_form(rs, &full))
    });
    DgnReport {
        input: b.display(rs),
        power: d,
        twist: nf.twist,
        length: nf.length(),
        factors: factor_reports(rs, &nf),
        left_factors,
    }
}

/// Parses `"1,3"` (1-based) into a parabolic index mask.
pub fn parse_parabolic(rank: usize, text: &str) -> Result<ParabolicIndex, String> {
    let mut j: ParabolicIndex = 0;
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        let i: usize = tok.parse().map_err(|_| format!("cannot parse parabolic index `{tok}`"))?;
        if i < 1 || i > rank {
            return Err(format!("parabolic index {i} is out of range 1..={rank}"));
        }
        j |= 1 << (i - 1);
    }
    Ok(j)
}

/// 1-based indices of a parabolic mask, for display.
pub fn parabolic_string(j: ParabolicIndex) -> String {
    bits(j as u128).map(|s| (s + 1).to_string()).collect::<Vec<_>>().join(",")
}
