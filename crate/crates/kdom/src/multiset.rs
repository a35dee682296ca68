//! Finite multisets over nonnegative integer element ids.
//!
//! Elements are dense ids; callers own the mapping between ids and whatever
//! they denote (graph vertices, product vertices). Iteration is always in
//! ascending id order, so every algorithm built on top is deterministic.

use std::collections::BTreeMap;
use std::fmt;

/// A finite multiset: a map from element id to a positive multiplicity.
///
/// Elements with multiplicity zero are never stored, and the cardinality is
/// the sum of all stored multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Multiset {
    counts: BTreeMap<usize, usize>,
}

impl Multiset {
    /// The empty multiset.
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a multiset by counting the elements of `iter`.
    pub fn from_elements<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut ms = Self::new();
        for x in iter {
            ms.insert(x);
        }
        ms
    }

    /// Builds a multiset from `(element, multiplicity)` pairs, summing
    /// repeated elements and dropping zero multiplicities.
    pub fn from_counts<I: IntoIterator<Item = (usize, usize)>>(iter: I) -> Self {
        let mut ms = Self::new();
        for (x, m) in iter {
            ms.insert_copies(x, m);
        }
        ms
    }

    /// Adds one copy of `element`.
    pub fn insert(&mut self, element: usize) {
        *self.counts.entry(element).or_insert(0) += 1;
    }

    /// Adds `copies` copies of `element`. Adding zero copies is a no-op.
    pub fn insert_copies(&mut self, element: usize, copies: usize) {
        if copies > 0 {
            *self.counts.entry(element).or_insert(0) += copies;
        }
    }

    /// Removes one copy of `element`; returns false if it was absent.
    pub fn remove(&mut self, element: usize) -> bool {
        match self.counts.get_mut(&element) {
            Some(m) if *m > 1 => {
                *m -= 1;
                true
            }
            Some(_) => {
                self.counts.remove(&element);
                true
            }
            None => false,
        }
    }

    /// Number of occurrences of `element`, zero when absent.
    pub fn count(&self, element: usize) -> usize {
        self.counts.get(&element).copied().unwrap_or(0)
    }

    /// Total occurrences over a plain set of element ids: the sum of
    /// `count(b)` for each `b` in the set.
    pub fn count_over_set<'a, I: IntoIterator<Item = &'a usize>>(&self, set: I) -> usize {
        set.into_iter().map(|&b| self.count(b)).sum()
    }

    /// Multiset union: per-element multiplicities add.
    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut out = self.clone();
        for (&x, &m) in &other.counts {
            out.insert_copies(x, m);
        }
        out
    }

    /// Union of the multiset with itself `t` times: every multiplicity is
    /// scaled by `t`. Panics when `t` is zero.
    pub fn power_union(&self, t: usize) -> Multiset {
        assert!(t >= 1, "power_union requires t >= 1, got {t}");
        Multiset {
            counts: self.counts.iter().map(|(&x, &m)| (x, m * t)).collect(),
        }
    }

    /// True iff every element of `self` occurs in `of` at least as often.
    pub fn is_submultiset(&self, of: &Multiset) -> bool {
        self.counts.iter().all(|(&x, &m)| m <= of.count(x))
    }

    /// Per-element minimum of the two multiplicities.
    pub fn intersect(&self, other: &Multiset) -> Multiset {
        let mut out = Multiset::new();
        for (&x, &m) in &self.counts {
            out.insert_copies(x, m.min(other.count(x)));
        }
        out
    }

    /// Sum of all multiplicities.
    pub fn cardinality(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Distinct elements with their multiplicities, ascending by id.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&x, &m)| (x, m))
    }

    /// Every copy of every element, ascending by id, repeated per
    /// multiplicity. `{1,2,2}` yields `1, 2, 2`.
    pub fn expanded(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts
            .iter()
            .flat_map(|(&x, &m)| std::iter::repeat_n(x, m))
    }

    /// Distinct elements, ascending.
    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts.keys().copied()
    }

    /// Largest element id, if any.
    pub fn max_element(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }
}

impl FromIterator<usize> for Multiset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_elements(iter)
    }
}

/// Renders as a sorted element list with repetition, e.g. `{1,2,2}`.
impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for x in self.expanded() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(elems: &[usize]) -> Multiset {
        Multiset::from_elements(elems.iter().copied())
    }

    #[test]
    fn count_counts_occurrences() {
        let a = ms(&[1, 2, 2]);
        assert_eq!(a.count(2), 2);
        assert_eq!(a.count(4), 0);
        assert_eq!(Multiset::new().count(7), 0);
    }

    #[test]
    fn count_over_set_sums_member_counts() {
        let a = ms(&[1, 1, 2, 5, 6, 6]);
        assert_eq!(a.count_over_set(&[1, 4, 6]), 4);
        assert_eq!(a.count_over_set(&[]), 0);
        assert_eq!(ms(&[1, 2, 2]).count_over_set(&[2]), 2);
    }

    #[test]
    fn union_adds_multiplicities() {
        assert_eq!(
            ms(&[1, 2, 2]).union(&ms(&[1, 2, 3])),
            ms(&[1, 1, 2, 2, 2, 3])
        );
        let a = ms(&[3, 9]);
        assert_eq!(a.union(&Multiset::new()), a);
        assert_eq!(ms(&[5]).union(&ms(&[5])), ms(&[5, 5]));
    }

    #[test]
    fn power_union_scales_multiplicities() {
        assert_eq!(ms(&[1, 2, 2]).power_union(2), ms(&[1, 1, 2, 2, 2, 2]));
        let a = ms(&[4, 4, 7]);
        assert_eq!(a.power_union(1), a);
        assert_eq!(ms(&[3]).power_union(4), ms(&[3, 3, 3, 3]));
    }

    #[test]
    #[should_panic(expected = "t >= 1")]
    fn power_union_rejects_zero() {
        ms(&[1]).power_union(0);
    }

    #[test]
    fn submultiset_compares_per_element() {
        assert!(ms(&[1, 2, 2]).is_submultiset(&ms(&[1, 2, 2, 2])));
        assert!(!ms(&[1, 2, 2]).is_submultiset(&ms(&[1, 2])));
        assert!(Multiset::new().is_submultiset(&ms(&[1, 2])));
    }

    #[test]
    fn intersect_takes_minima() {
        assert_eq!(
            ms(&[1, 1, 1, 2, 2, 3]).intersect(&ms(&[1, 1, 2, 4])),
            ms(&[1, 1, 2])
        );
        let a = ms(&[1, 2, 2]);
        assert_eq!(a.intersect(&Multiset::new()), Multiset::new());
        assert_eq!(a.intersect(&a), a);
    }

    #[test]
    fn cardinality_sums_multiplicities() {
        assert_eq!(ms(&[1, 2, 2]).cardinality(), 3);
        assert_eq!(Multiset::new().cardinality(), 0);
        let a = ms(&[0, 3, 3, 8]);
        assert_eq!(a.power_union(5).cardinality(), 5 * a.cardinality());
    }

    #[test]
    fn display_renders_sorted_with_repetition() {
        assert_eq!(ms(&[2, 1, 2]).to_string(), "{1,2,2}");
        assert_eq!(Multiset::new().to_string(), "{}");
    }

    #[test]
    fn remove_drops_single_copies() {
        let mut a = ms(&[4, 4, 9]);
        assert!(a.remove(9));
        assert_eq!(a.count(9), 0);
        assert!(a.remove(4));
        assert_eq!(a.count(4), 1);
        assert!(!a.remove(9));
    }
}
