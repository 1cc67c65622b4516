//! Sets of signed roots as bitmasks.

/// Signed root index: `r < P` is the positive root β_r, `r >= P` is -β_{r-P}.
pub type SignedRoot = u16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSet {
    pub pos: u128,
    pub neg: u128,
}

impl RootSet {
    pub const EMPTY: RootSet = RootSet { pos: 0, neg: 0 };

    pub fn from_positive(mask: u128) -> Self {
        RootSet { pos: mask, neg: 0 }
    }

    /// ±mask.
    pub fn symmetric(mask: u128) -> Self {
        RootSet { pos: mask, neg: mask }
    }

    pub fn full(npos: usize) -> Self {
        RootSet::symmetric(all_positive(npos))
    }

    pub fn from_signed(npos: usize, roots: impl IntoIterator<Item = SignedRoot>) -> Self {
        let mut s = RootSet::EMPTY;
        for r in roots {
            s.insert(npos, r);
        }
        s
    }

    pub fn insert(&mut self, npos: usize, r: SignedRoot) {
        let r = r as usize;
        if r < npos {
            self.pos |= 1 << r;
        } else {
            self.neg |= 1 << (r - npos);
        }
    }

    pub fn contains(&self, npos: usize, r: SignedRoot) -> bool {
        let r = r as usize;
        if r < npos {
            self.pos >> r & 1 == 1
        } else {
            self.neg >> (r - npos) & 1 == 1
        }
    }

    pub fn len(&self) -> usize {
        (self.pos.count_ones() + self.neg.count_ones()) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.pos == 0 && self.neg == 0
    }

    pub fn is_symmetric(&self) -> bool {
        self.pos == self.neg
    }

    pub fn negate(&self) -> Self {
        RootSet { pos: self.neg, neg: self.pos }
    }

    pub fn union(&self, o: &Self) -> Self {
        RootSet { pos: self.pos | o.pos, neg: self.neg | o.neg }
    }

    pub fn intersection(&self, o: &Self) -> Self {
        RootSet { pos: self.pos & o.pos, neg: self.neg & o.neg }
    }

    pub fn difference(&self, o: &Self) -> Self {
        RootSet { pos: self.pos & !o.pos, neg: self.neg & !o.neg }
    }

    pub fn is_subset(&self, o: &Self) -> bool {
        self.pos & !o.pos == 0 && self.neg & !o.neg == 0
    }

    pub fn iter(&self, npos: usize) -> impl Iterator<Item = SignedRoot> + '_ {
        bits(self.pos)
            .map(|r| r as SignedRoot)
            .chain(bits(self.neg).map(move |r| (r + npos) as SignedRoot))
    }
}

pub fn all_positive(npos: usize) -> u128 {
    if npos == 128 {
        u128::MAX
    } else {
        (1u128 << npos) - 1
    }
}

/// Indices of the set bits, ascending.
pub fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let i = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(i)
    })
}
