//! Positive braids δ·b_{w_m}⋯b_{w_1} given by a twist and a list of reduced factors.

use std::fmt;

use crate::coxeter::{parse_word, GroupElement, WordError};
use crate::rootsystem::RootSystem;

/// δ·b_{w_m}⋯b_{w_1}; `factors[0]` is w_m (leftmost), the last entry is w_1.
///
/// Factors are untwisted and never the identity. The same type holds normal forms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub twist: usize,
    pub factors: Vec<GroupElement>,
}

/// A braid in right-greedy (or, where stated, left-greedy) normal form.
pub type NormalForm = BraidWord;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("twist prefix is only allowed on the first factor")]
    MisplacedTwist,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("edge {0} of the shift path is not a valid conjugation step")]
    InvalidPath(usize),
}

/// δ^k(x) = δ^k x δ^{−k} for an untwisted x, with δ = twists[t].
pub fn twist_apply(rs: &RootSystem, t: usize, x: &GroupElement) -> GroupElement {
    if t == 0 {
        return x.clone();
    }
    let d = GroupElement::twist_element(rs, t);
    d.mul(rs, x).mul(rs, &d.inverse(rs))
}

impl BraidWord {
    pub fn identity() -> Self {
        BraidWord { twist: 0, factors: Vec::new() }
    }

    /// Drops identity factors.
    pub fn new(twist: usize, factors: Vec<GroupElement>) -> Self {
        BraidWord { twist, factors: factors.into_iter().filter(|x| !x.is_identity()).collect() }
    }

    /// The reduced braid b_w of a (possibly twisted) element.
    pub fn from_element(rs: &RootSystem, w: &GroupElement) -> Self {
        Self::new(w.twist(), vec![w.untwisted(rs)])
    }

    /// b_{s_{i_1}}⋯b_{s_{i_l}} for an arbitrary word, grouped into as few reduced factors as the
    /// word allows when read left to right.
    pub fn from_letters(rs: &RootSystem, twist: usize, letters: &[usize]) -> Self {
        let mut factors: Vec<GroupElement> = Vec::new();
        let mut cur = GroupElement::identity(rs);
        for &s in letters {
            if cur.is_right_descent(s) {
                factors.push(std::mem::replace(&mut cur, GroupElement::identity(rs)));
            }
            cur = cur.mul_simple_right(rs, s);
        }
        factors.push(cur);
        Self::new(twist, factors)
    }

    /// Parses `"d1: 1 2 | 2 1"`: factors separated by `|`, 1-based letters, optional twist prefix.
    /// A non-reduced factor word is read as the product of its letters.
    pub fn parse(rs: &RootSystem, text: &str) -> Result<Self, BraidError> {
        let mut twist = 0;
        let mut factors = Vec::new();
        for (i, part) in text.split('|').enumerate() {
            let (t, letters) = parse_word(rs.rank(), part)?;
            if i == 0 {
                if t >= rs.twist_count() {
                    return Err(WordError::BadTwist(t).into());
                }
                twist = t;
            } else if t != 0 {
                return Err(BraidError::MisplacedTwist);
            }
            factors.extend(Self::from_letters(rs, 0, &letters).factors);
        }
        Ok(Self::new(twist, factors))
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of simple generators.
    pub fn length(&self) -> usize {
        self.factors.iter().map(GroupElement::length).sum()
    }

    /// The image δ·w_m⋯w_1 in Ω ⋉ W̃.
    pub fn image(&self, rs: &RootSystem) -> GroupElement {
        self.factors.iter().fold(GroupElement::twist_element(rs, self.twist), |acc, x| acc.mul(rs, x))
    }

    /// Monoid product self·other; the twist of `other` is moved to the left.
    pub fn product(&self, rs: &RootSystem, other: &BraidWord) -> BraidWord {
        let back = rs.twist_inverse(other.twist);
        let mut factors: Vec<GroupElement> = self.factors.iter().map(|x| twist_apply(rs, back, x)).collect();
        factors.extend(other.factors.iter().cloned());
        BraidWord { twist: rs.twist_compose(self.twist, other.twist), factors }
    }

    /// The letters of the lex-min reduced words of the factors, left to right.
    pub fn letters(&self, rs: &RootSystem) -> Vec<usize> {
        self.factors.iter().flat_map(|x| x.reduced_word(rs)).collect()
    }

    /// Word reversal b ↦ rev(b), factors inverted and reversed (untwisted braids only).
    pub fn reversed(&self, rs: &RootSystem) -> BraidWord {
        debug_assert_eq!(self.twist, 0);
        BraidWord { twist: 0, factors: self.factors.iter().rev().map(|x| x.inverse(rs)).collect() }
    }

    /// `"d1: 1 2 | 2 1"`; the empty braid is `"e"`.
    pub fn display(&self, rs: &RootSystem) -> String {
        let body: Vec<String> = self.factors.iter().map(|x| x.word_string(rs)).collect();
        let body = if body.is_empty() { "e".to_string() } else { body.join(" | ") };
        if self.twist == 0 {
            body
        } else {
            format!("d{}: {body}", self.twist)
        }
    }

    /// Factors as compact words, `"32 | 121321"` style.
    pub fn compact(&self, rs: &RootSystem) -> String {
        let body: Vec<String> = self.factors.iter().map(|x| x.compact_word(rs)).collect();
        let body = if body.is_empty() { "e".to_string() } else { body.join(" | ") };
        if self.twist == 0 {
            body
        } else {
            format!("d{}: {body}", self.twist)
        }
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BraidWord").field("twist", &self.twist).field("factors", &self.factors).finish()
    }
}
