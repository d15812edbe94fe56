//! Small subsets of the ground set `{1, …, n}` stored as bitmasks.

use std::fmt;

/// Largest ground set supported by [`ElementSet`].
pub const MAX_ELEMENTS: usize = 31;

/// A subset of `{1, …, n}`; bit `i - 1` marks element `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSet(u32);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u32) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// The full ground set `{1, …, n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "ground set too large: {n}");
        if n == 0 {
            ElementSet(0)
        } else {
            ElementSet(u32::MAX >> (32 - n))
        }
    }

    pub fn singleton(element: usize) -> Self {
        debug_assert!((1..=MAX_ELEMENTS).contains(&element));
        ElementSet(1 << (element - 1))
    }

    pub fn contains(self, element: usize) -> bool {
        (1..=MAX_ELEMENTS).contains(&element) && self.0 & (1 << (element - 1)) != 0
    }

    pub fn insert(&mut self, element: usize) {
        *self = self.with(element);
    }

    #[must_use]
    pub fn with(self, element: usize) -> Self {
        ElementSet(self.0 | ElementSet::singleton(element).0)
    }

    #[must_use]
    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (1..=MAX_ELEMENTS).filter(move |&i| bits & (1 << (i - 1)) != 0)
    }

    /// The largest element, if any.
    pub fn max_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(32 - self.0.leading_zeros() as usize)
        }
    }

    /// Applies the relabelling `i ↦ perm[i - 1]`.
    #[must_use]
    pub fn relabel(self, perm: &[usize]) -> Self {
        self.iter().map(|i| perm[i - 1]).collect()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = ElementSet::EMPTY;
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl fmt::Display for ElementSet {
    /// Elements concatenated in increasing order (`{1,2,4}` prints as `124`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in self.iter() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_operations() {
        let s: ElementSet = [2, 3, 4, 7].into_iter().collect();
        let t: ElementSet = [1, 2, 4, 5, 6, 7].into_iter().collect();
        assert_eq!(s.len(), 4);
        assert_eq!(s.intersection(t).to_string(), "247");
        assert_eq!(s.difference(t).to_string(), "3");
        assert_eq!(s.union(t), ElementSet::full(7));
        assert_eq!(s.max_element(), Some(7));
        assert!(ElementSet::EMPTY.is_subset(s));
        assert!(!s.contains(1) && s.contains(3));
    }

    #[test]
    fn relabel_permutes_elements() {
        let s: ElementSet = [1, 3].into_iter().collect();
        assert_eq!(s.relabel(&[2, 3, 1]).to_string(), "12");
    }
}
