use std::fmt;

use crate::graph::NodeId;

/// A subset of the players `[0, n)`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coalition {
    n: usize,
    words: Vec<u64>,
}

impl Coalition {
    pub fn empty(n: usize) -> Self {
        Coalition {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut c = Coalition::empty(n);
        for i in 0..n {
            c.insert(NodeId(i));
        }
        c
    }

    /// # Panics
    /// If a member is `>= n`.
    pub fn from_members<I, T>(n: usize, members: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<NodeId>,
    {
        let mut c = Coalition::empty(n);
        for m in members {
            c.insert(m.into());
        }
        c
    }

    /// Coalition whose members are the set bits of `mask`.
    ///
    /// # Panics
    /// If `mask` has a bit at or above `n`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n >= 64 || mask >> n == 0, "mask {mask:#x} exceeds {n} players");
        let mut c = Coalition::empty(n);
        if n > 0 {
            c.words[0] = mask;
        }
        c
    }

    /// The coalition as a bitmask, if every member fits in 64 bits.
    pub fn to_mask(&self) -> Option<u64> {
        if self.words.iter().skip(1).any(|&w| w != 0) {
            None
        } else {
            Some(self.words.first().copied().unwrap_or(0))
        }
    }

    /// Size of the player universe.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, i: NodeId) -> bool {
        i.0 < self.n && self.words[i.0 / 64] & (1 << (i.0 % 64)) != 0
    }

    /// # Panics
    /// If `i` is outside the universe.
    pub fn insert(&mut self, i: NodeId) -> bool {
        assert!(i.0 < self.n, "player {} outside universe of {}", i.0, self.n);
        let bit = 1u64 << (i.0 % 64);
        let w = &mut self.words[i.0 / 64];
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, i: NodeId) -> bool {
        if i.0 >= self.n {
            return false;
        }
        let bit = 1u64 << (i.0 % 64);
        let w = &mut self.words[i.0 / 64];
        let present = *w & bit != 0;
        *w &= !bit;
        present
    }

    pub fn with(&self, i: NodeId) -> Self {
        let mut c = self.clone();
        c.insert(i);
        c
    }

    pub fn without(&self, i: NodeId) -> Self {
        let mut c = self.clone();
        c.remove(i);
        c
    }

    pub fn is_subset(&self, other: &Coalition) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(std::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &Coalition) -> Coalition {
        let n = self.n.max(other.n);
        let mut c = Coalition::empty(n);
        for (k, w) in c.words.iter_mut().enumerate() {
            *w = self.words.get(k).copied().unwrap_or(0) | other.words.get(k).copied().unwrap_or(0);
        }
        c
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(NodeId(k * 64 + b))
            })
        })
    }
}

impl fmt::Debug for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|i| i.0)).finish()
    }
}
