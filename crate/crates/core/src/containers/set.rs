use std::collections::BTreeSet;
use std::fmt;

/// A finite, duplicate-free, immutable set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteSet<E: Ord> {
    elems: BTreeSet<E>,
}

impl<E: Ord + Clone> FiniteSet<E> {
    pub fn empty() -> Self {
        Self {
            elems: BTreeSet::new(),
        }
    }

    pub fn singleton(e: E) -> Self {
        Self::empty().insert(e)
    }

    /// `null`: is the set empty?
    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elems.contains(e)
    }

    pub fn card(&self) -> usize {
        self.elems.len()
    }

    pub fn insert(&self, e: E) -> Self {
        let mut elems = self.elems.clone();
        elems.insert(e);
        Self { elems }
    }

    pub fn remove(&self, e: &E) -> Self {
        let mut elems = self.elems.clone();
        elems.remove(e);
        Self { elems }
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            elems: self.elems.union(&other.elems).cloned().collect(),
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        Self {
            elems: self.elems.intersection(&other.elems).cloned().collect(),
        }
    }

    /// Does some element satisfy `pred`?
    pub fn exists(&self, pred: impl Fn(&E) -> bool) -> bool {
        self.elems.iter().any(pred)
    }

    /// Image of the set under `f`; the result shrinks when `f` is not injective.
    pub fn map<F: Ord + Clone>(&self, f: impl Fn(&E) -> F) -> FiniteSet<F> {
        FiniteSet {
            elems: self.elems.iter().map(f).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &E> + '_ {
        self.elems.iter()
    }
}

impl<E: Ord + Clone> Default for FiniteSet<E> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<E: Ord + Clone> FromIterator<E> for FiniteSet<E> {
    fn from_iter<I: IntoIterator<Item = E>>(iter: I) -> Self {
        Self {
            elems: iter.into_iter().collect(),
        }
    }
}

impl<E: Ord + Clone, const N: usize> From<[E; N]> for FiniteSet<E> {
    fn from(items: [E; N]) -> Self {
        items.into_iter().collect()
    }
}

impl<E: Ord> IntoIterator for FiniteSet<E> {
    type Item = E;
    type IntoIter = std::collections::btree_set::IntoIter<E>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.into_iter()
    }
}

impl<'a, E: Ord> IntoIterator for &'a FiniteSet<E> {
    type Item = &'a E;
    type IntoIter = std::collections::btree_set::Iter<'a, E>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}

impl<E: Ord + fmt::Debug> fmt::Debug for FiniteSet<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elems.iter()).finish()
    }
}
