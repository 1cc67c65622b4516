//! Root inversion sequences of words in the simple generators.

use crate::rootsystem::{RootSet, RootSystem, SignedRoot};

use super::word::BraidWord;

/// Signed roots attached to the letters c_1, …, c_l of a simple decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionSequence {
    pub roots: Vec<SignedRoot>,
}

impl InversionSequence {
    /// The underlying set R_b.
    pub fn as_set(&self, npos: usize) -> RootSet {
        RootSet::from_signed(npos, self.roots.iter().copied())
    }

    /// All entries positive and pairwise distinct, as for a reduced braid.
    pub fn is_reduced(&self, rs: &RootSystem) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.roots.iter().all(|&r| rs.is_positive(r) && seen.insert(r))
    }
}

/// Entry t is s_{c_l}⋯s_{c_{t+1}}(α_{c_t}); for a reduced word of w these are the roots w sends negative.
pub fn inversion_sequence_of_letters(rs: &RootSystem, letters: &[usize]) -> InversionSequence {
    let mut roots = vec![0 as SignedRoot; letters.len()];
    let mut g: Vec<SignedRoot> = Vec::new();
    for (t, &c) in letters.iter().enumerate().rev() {
        let mut r = c as SignedRoot;
        for &s in g.iter().rev() {
            r = rs.simple_reflection(s as usize, r);
        }
        roots[t] = r;
        g.push(c as SignedRoot);
    }
    InversionSequence { roots }
}

/// The inversion sequence of a braid read through the lex-min reduced words of its factors.
pub fn inversion_sequence(rs: &RootSystem, b: &BraidWord) -> InversionSequence {
    inversion_sequence_of_letters(rs, &b.letters(rs))
}
