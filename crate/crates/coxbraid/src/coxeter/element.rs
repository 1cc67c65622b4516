//! Group elements δw̃ stored as signed permutations of the positive roots.

use std::fmt;

use num_integer::Integer;

use crate::exactfield::{FieldElement, Matrix};
use crate::rootsystem::{bits, RootSet, RootSystem, SignedRoot};

/// An element δw̃ of Ω ⋉ W̃. `images[r]` is the signed image of the positive root β_r.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    twist: usize,
    images: Box<[SignedRoot]>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("simple index {index} at position {position} is out of range 1..={rank}")]
    BadIndex { index: i64, position: usize, rank: usize },
    #[error("unknown twist d{0}")]
    BadTwist(usize),
    #[error("cannot parse `{token}` at position {position}")]
    Syntax { token: String, position: usize },
}

impl GroupElement {
    pub fn identity(rs: &RootSystem) -> Self {
        Self::twist_element(rs, 0)
    }

    /// The pure diagram automorphism `rs.twists()[t]`.
    pub fn twist_element(rs: &RootSystem, t: usize) -> Self {
        let images = (0..rs.npos()).map(|r| rs.twist_action(t, r as SignedRoot)).collect();
        GroupElement { twist: t, images }
    }

    pub fn simple(rs: &RootSystem, s: usize) -> Self {
        let images = rs.simple_reflection_table(s)[..rs.npos()].into();
        GroupElement { twist: 0, images }
    }

    /// δ·s_{word[0]}⋯s_{word[l-1]} with 0-based indices; the word need not be reduced.
    pub fn from_word(rs: &RootSystem, twist: usize, word: &[usize]) -> Result<Self, WordError> {
        if twist >= rs.twist_count() {
            return Err(WordError::BadTwist(twist));
        }
        let mut w = Self::twist_element(rs, twist);
        for (position, &s) in word.iter().enumerate() {
            if s >= rs.rank() {
                return Err(WordError::BadIndex { index: s as i64 + 1, position, rank: rs.rank() });
            }
            w = w.mul_simple_right(rs, s);
        }
        Ok(w)
    }

    /// Parses `"d1: 3 1 2 1"` (1-based indices, optional twist prefix).
    pub fn parse(rs: &RootSystem, text: &str) -> Result<Self, WordError> {
        let (twist, word) = parse_word(rs.rank(), text)?;
        Self::from_word(rs, twist, &word)
    }

    pub fn twist(&self) -> usize {
        self.twist
    }

    pub fn images(&self) -> &[SignedRoot] {
        &self.images
    }

    pub fn npos(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.twist == 0 && self.images.iter().enumerate().all(|(r, &x)| r == x as usize)
    }

    /// Image of a signed root.
    pub fn apply(&self, r: SignedRoot) -> SignedRoot {
        let p = self.images.len();
        let r = r as usize;
        if r < p {
            self.images[r]
        } else {
            let x = self.images[r - p] as usize;
            (if x < p { x + p } else { x - p }) as SignedRoot
        }
    }

    /// The product self·other (other acts first).
    pub fn mul(&self, rs: &RootSystem, other: &GroupElement) -> GroupElement {
        let images = other.images.iter().map(|&r| self.apply(r)).collect();
        GroupElement { twist: rs.twist_compose(self.twist, other.twist), images }
    }

    pub fn inverse(&self, rs: &RootSystem) -> GroupElement {
        let p = self.images.len();
        let mut images = vec![0 as SignedRoot; p].into_boxed_slice();
        for (r, &x) in self.images.iter().enumerate() {
            let x = x as usize;
            if x < p {
                images[x] = r as SignedRoot;
            } else {
                images[x - p] = (r + p) as SignedRoot;
            }
        }
        GroupElement { twist: rs.twist_inverse(self.twist), images }
    }

    pub fn mul_simple_right(&self, rs: &RootSystem, s: usize) -> GroupElement {
        let table = rs.simple_reflection_table(s);
        let images = (0..self.npos()).map(|r| self.apply(table[r])).collect();
        GroupElement { twist: self.twist, images }
    }

    pub fn mul_simple_left(&self, rs: &RootSystem, s: usize) -> GroupElement {
        let table = rs.simple_reflection_table(s);
        let images = self.images.iter().map(|&x| table[x as usize]).collect();
        // s·δw̃ = δ·(δ⁻¹sδ)w̃ keeps the twist label.
        GroupElement { twist: self.twist, images }
    }

    /// s·w·s.
    pub fn conjugate_simple(&self, rs: &RootSystem, s: usize) -> GroupElement {
        self.mul_simple_left(rs, s).mul_simple_right(rs, s)
    }

    /// τ·w·τ⁻¹.
    pub fn conjugate_by(&self, rs: &RootSystem, tau: &GroupElement) -> GroupElement {
        tau.mul(rs, self).mul(rs, &tau.inverse(rs))
    }

    pub fn power(&self, rs: &RootSystem, d: usize) -> GroupElement {
        let mut out = GroupElement::identity(rs);
        for _ in 0..d {
            out = out.mul(rs, self);
        }
        out
    }

    pub fn length(&self) -> usize {
        let p = self.images.len();
        self.images.iter().filter(|&&x| x as usize >= p).count()
    }

    /// R_w as a mask of positive roots.
    pub fn inversion_mask(&self) -> u128 {
        let p = self.images.len();
        self.images
            .iter()
            .enumerate()
            .filter(|(_, &x)| x as usize >= p)
            .fold(0, |m, (r, _)| m | 1 << r)
    }

    /// ℓ(ws) < ℓ(w).
    pub fn is_right_descent(&self, s: usize) -> bool {
        self.images[s] as usize >= self.images.len()
    }

    /// ℓ(sw) < ℓ(w).
    pub fn is_left_descent(&self, s: usize) -> bool {
        let target = (s + self.images.len()) as SignedRoot;
        self.images.contains(&target)
    }

    pub fn right_descents(&self, rank: usize) -> u64 {
        (0..rank).filter(|&s| self.is_right_descent(s)).fold(0, |m, s| m | 1 << s)
    }

    pub fn left_descents(&self, rank: usize) -> u64 {
        let p = self.images.len();
        let mut m = 0u64;
        for &x in self.images.iter() {
            let x = x as usize;
            if x >= p && x - p < rank {
                m |= 1 << (x - p);
            }
        }
        m
    }

    /// δ⁻¹·w, the element of W̃ with the same action up to the twist.
    pub fn untwisted(&self, rs: &RootSystem) -> GroupElement {
        if self.twist == 0 {
            return self.clone();
        }
        let inv = rs.twist_inverse(self.twist);
        let images = self.images.iter().map(|&x| rs.twist_action(inv, x)).collect();
        GroupElement { twist: 0, images }
    }

    /// Lexicographically smallest reduced word of the untwisted part (0-based).
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut x = self.untwisted(rs);
        let mut word = Vec::with_capacity(x.length());
        while let Some(s) = (0..rs.rank()).find(|&s| x.is_left_descent(s)) {
            word.push(s);
            x = x.mul_simple_left(rs, s);
        }
        word
    }

    /// Word in the CLI syntax, e.g. `d1: 3 1 2 1`.
    pub fn word_string(&self, rs: &RootSystem) -> String {
        format_word(self.twist, &self.reduced_word(rs))
    }

    /// Compact word without separators (ranks below 10), e.g. `12321`.
    pub fn compact_word(&self, rs: &RootSystem) -> String {
        let w: String = self.reduced_word(rs).iter().map(|s| (s + 1).to_string()).collect();
        if self.twist == 0 {
            w
        } else {
            format!("d{}:{w}", self.twist)
        }
    }

    /// Order in W, from the cycle structure on the signed roots.
    pub fn order(&self) -> usize {
        let p = self.images.len();
        let mut seen = vec![false; 2 * p];
        let mut ord = 1usize;
        for start in 0..2 * p {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut r = start as SignedRoot;
            while !seen[r as usize] {
                seen[r as usize] = true;
                r = self.apply(r);
                len += 1;
            }
            ord = ord.lcm(&len);
        }
        ord
    }

    pub fn inversion_data(&self, rs: &RootSystem) -> InversionData {
        let p = self.images.len();
        let mut fixed = RootSet::EMPTY;
        let mut negated = RootSet::EMPTY;
        let mut stable = RootSet::EMPTY;
        let mut seen = vec![false; 2 * p];
        for start in 0..2 * p {
            let r = start as SignedRoot;
            let img = self.apply(r);
            if img == r {
                fixed.insert(p, r);
            } else if img == rs.negate(r) {
                negated.insert(p, r);
            }
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = r;
            while !seen[x as usize] {
                seen[x as usize] = true;
                orbit.push(x);
                x = self.apply(x);
            }
            let sign = rs.is_positive(orbit[0]);
            if orbit.iter().all(|&y| rs.is_positive(y) == sign) {
                for y in orbit {
                    stable.insert(p, y);
                }
            }
        }
        InversionData { inversions: self.inversion_mask(), fixed, stable, negated }
    }

    /// Matrix of the action on V in simple-root coordinates (column i is w(α_i)).
    pub fn matrix(&self, rs: &RootSystem) -> Matrix {
        let n = rs.rank();
        let cols: Vec<_> = (0..n).map(|i| rs.signed_root_vector(self.images[i])).collect();
        (0..n).map(|r| (0..n).map(|c| cols[c][r].clone()).collect::<Vec<FieldElement>>()).collect()
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement(d{}, {:?})", self.twist, &self.images[..])
    }
}

/// R_w, R^w, R_st^w and R_{-1}^w of an element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionData {
    pub inversions: u128,
    pub fixed: RootSet,
    pub stable: RootSet,
    pub negated: RootSet,
}

impl InversionData {
    pub fn length(&self) -> usize {
        self.inversions.count_ones() as usize
    }

    /// ℓ_f(w) = |R^w|.
    pub fn fixed_count(&self) -> usize {
        self.fixed.len()
    }

    pub fn is_convex(&self, rs: &RootSystem) -> bool {
        rs.standard_parabolic_set(&self.stable).is_some()
    }

    pub fn is_firmly_convex(&self, rs: &RootSystem) -> bool {
        self.fixed == self.stable && self.is_convex(rs)
    }

    /// Positive stable roots.
    pub fn stable_positive(&self) -> u128 {
        self.stable.pos
    }
}

pub fn format_word(twist: usize, word: &[usize]) -> String {
    let body: Vec<String> = word.iter().map(|s| (s + 1).to_string()).collect();
    let body = body.join(" ");
    if twist == 0 {
        body
    } else {
        format!("d{twist}: {body}").trim_end().to_string()
    }
}

/// Splits `"d<k>: i j ..."` into the twist index and 0-based letters.
pub fn parse_word(rank: usize, text: &str) -> Result<(usize, Vec<usize>), WordError> {
    let trimmed = text.trim_start();
    let offset = text.len() - trimmed.len();
    let (twist, rest, rest_offset) = match trimmed.split_once(':') {
        Some((head, tail)) => {
            let head_t = head.trim();
            let k = head_t
                .strip_prefix('d')
                .or_else(|| head_t.strip_prefix('D'))
                .and_then(|k| k.parse::<usize>().ok())
                .ok_or_else(|| WordError::Syntax { token: head_t.to_string(), position: offset })?;
            (k, tail, offset + head.len() + 1)
        }
        None => (0, trimmed, offset),
    };
    let mut word = Vec::new();
    let mut pos = rest_offset;
    for piece in rest.split_inclusive(|c: char| c.is_whitespace() || c == ',') {
        let token = piece.trim_end_matches(|c: char| c.is_whitespace() || c == ',');
        if !token.is_empty() {
            let i: i64 =
                token.parse().map_err(|_| WordError::Syntax { token: token.to_string(), position: pos })?;
            if i < 1 || i as usize > rank {
                return Err(WordError::BadIndex { index: i, position: pos, rank });
            }
            word.push(i as usize - 1);
        }
        pos += piece.len();
    }
    Ok((twist, word))
}

/// Positive roots of a mask, as indices.
pub fn mask_roots(mask: u128) -> Vec<usize> {
    bits(mask).collect()
}
