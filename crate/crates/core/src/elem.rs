//! Element indices, element sets and tuple enumeration.

use std::fmt;
use std::ops::ControlFlow;

/// Index of an element in its carrier (declaration order).
pub type Elem = usize;

/// Largest carrier the engine accepts. Element sets are single `u128` words.
pub const MAX_ELEMENTS: usize = 128;

/// A subset of a carrier of at most [`MAX_ELEMENTS`] elements.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElemSet(u128);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(e: Elem) -> Self {
        debug_assert!(e < MAX_ELEMENTS);
        ElemSet(1u128 << e)
    }

    /// `{0, 1, ..., size - 1}`.
    pub fn full(size: usize) -> Self {
        debug_assert!(size <= MAX_ELEMENTS);
        if size == MAX_ELEMENTS {
            ElemSet(u128::MAX)
        } else {
            ElemSet((1u128 << size) - 1)
        }
    }

    pub fn from_bits(bits: u128) -> Self {
        ElemSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, e: Elem) -> bool {
        e < MAX_ELEMENTS && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: Elem) {
        debug_assert!(e < MAX_ELEMENTS);
        self.0 |= 1u128 << e;
    }

    pub fn remove(&mut self, e: Elem) {
        self.0 &= !(1u128 << e);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<Elem> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Elem)
    }

    pub fn iter(self) -> ElemSetIter {
        ElemSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<Elem> {
        self.iter().collect()
    }

    /// Ordering used wherever families of sets are listed: cardinality first,
    /// then the sorted member lists lexicographically.
    pub fn canonical_cmp(self, other: ElemSet) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.to_vec().cmp(&other.to_vec()))
    }
}

impl FromIterator<Elem> for ElemSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl IntoIterator for ElemSet {
    type Item = Elem;
    type IntoIter = ElemSetIter;

    fn into_iter(self) -> ElemSetIter {
        self.iter()
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct ElemSetIter(u128);

impl Iterator for ElemSetIter {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as Elem;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for ElemSetIter {}

/// Calls `f` on every tuple in `{0..size}^len`, in lexicographic order, until
/// `f` breaks. Returns the break value, if any.
pub fn for_each_tuple<B>(
    size: usize,
    len: usize,
    mut f: impl FnMut(&[Elem]) -> ControlFlow<B>,
) -> Option<B> {
    if size == 0 && len > 0 {
        return None;
    }
    let mut t = vec![0; len];
    loop {
        if let ControlFlow::Break(b) = f(&t) {
            return Some(b);
        }
        let mut pos = len;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            t[pos] += 1;
            if t[pos] < size {
                break;
            }
            t[pos] = 0;
        }
    }
}

/// Calls `f` on every tuple whose i-th entry is drawn from `sets[i]`, in
/// lexicographic order, until `f` breaks.
pub fn for_each_choice<B>(
    sets: &[ElemSet],
    mut f: impl FnMut(&[Elem]) -> ControlFlow<B>,
) -> Option<B> {
    if sets.iter().any(|s| s.is_empty()) {
        return None;
    }
    let members: Vec<Vec<Elem>> = sets.iter().map(|s| s.to_vec()).collect();
    let mut idx = vec![0usize; sets.len()];
    let mut t: Vec<Elem> = members.iter().map(|m| m[0]).collect();
    loop {
        if let ControlFlow::Break(b) = f(&t) {
            return Some(b);
        }
        let mut pos = sets.len();
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < members[pos].len() {
                t[pos] = members[pos][idx[pos]];
                break;
            }
            idx[pos] = 0;
            t[pos] = members[pos][0];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_basics() {
        let s: ElemSet = [3, 1, 7].into_iter().collect();
        assert_eq!(s.to_vec(), vec![1, 3, 7]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(7) && !s.contains(2));
        assert_eq!(s.first(), Some(1));
        assert!(ElemSet::singleton(3).is_subset(s));
        assert_eq!(ElemSet::full(MAX_ELEMENTS).len(), MAX_ELEMENTS);
        assert_eq!(ElemSet::full(0), ElemSet::EMPTY);
    }

    #[test]
    fn tuples_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_tuple::<()>(3, 2, |t| {
            seen.push(t.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[0], vec![0, 0]);
        assert_eq!(seen[1], vec![0, 1]);
        assert_eq!(seen[8], vec![2, 2]);
        let mut empty_len = 0;
        for_each_tuple::<()>(4, 0, |_| {
            empty_len += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(empty_len, 1);
    }

    #[test]
    fn choices_follow_member_order() {
        let sets = [ElemSet::from_iter([2, 0]), ElemSet::singleton(5)];
        let mut seen = Vec::new();
        for_each_choice::<()>(&sets, |t| {
            seen.push(t.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(seen, vec![vec![0, 5], vec![2, 5]]);
        let hit = for_each_choice(&sets, |t| {
            if t[0] == 2 {
                ControlFlow::Break(t.to_vec())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!(hit, Some(vec![2, 5]));
    }
}
