use std::collections::BTreeMap;
use std::fmt;

use super::FiniteSet;
use crate::error::{Result, Unspecified};

/// A finite function from `D` to `R`, kept as an immutable value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteMap<D: Ord, R> {
    bindings: BTreeMap<D, R>,
}

impl<D: Ord + Clone, R: Clone> FiniteMap<D, R> {
    /// The function with empty domain.
    pub fn empty() -> Self {
        Self {
            bindings: BTreeMap::new(),
        }
    }

    /// The map with `d` bound to `r`, overwriting any previous binding of `d`.
    pub fn upd(&self, d: D, r: R) -> Self {
        let mut bindings = self.bindings.clone();
        bindings.insert(d, r);
        Self { bindings }
    }

    /// Fails with [`Unspecified`] when `d` is not in the domain.
    pub fn apply(&self, d: &D) -> Result<&R>
    where
        D: fmt::Debug,
    {
        self.bindings
            .get(d)
            .ok_or_else(|| Unspecified::new("apply", format!("{d:?} is not in the domain")))
    }

    pub fn get(&self, d: &D) -> Option<&R> {
        self.bindings.get(d)
    }

    pub fn rem(&self, d: &D) -> Self {
        let mut bindings = self.bindings.clone();
        bindings.remove(d);
        Self { bindings }
    }

    pub fn contains_key(&self, d: &D) -> bool {
        self.bindings.contains_key(d)
    }

    pub fn dom(&self) -> FiniteSet<D> {
        self.bindings.keys().cloned().collect()
    }

    pub fn ran(&self) -> FiniteSet<R>
    where
        R: Ord,
    {
        self.bindings.values().cloned().collect()
    }

    /// Preimage of `r`: every domain element mapped to it.
    pub fn revapply(&self, r: &R) -> FiniteSet<D>
    where
        R: PartialEq,
    {
        self.bindings
            .iter()
            .filter(|(_, v)| *v == r)
            .map(|(k, _)| k.clone())
            .collect()
    }

    /// Union of both maps; `self` wins where the domains overlap.
    pub fn compose(&self, other: &Self) -> Self {
        let mut bindings = other.bindings.clone();
        for (k, v) in &self.bindings {
            bindings.insert(k.clone(), v.clone());
        }
        Self { bindings }
    }

    /// Applies `f` to every range element, keeping the domain.
    pub fn concat(&self, f: impl Fn(&R) -> R) -> Self {
        Self {
            bindings: self
                .bindings
                .iter()
                .map(|(k, v)| (k.clone(), f(v)))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bindings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bindings.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&D, &R)> + '_ {
        self.bindings.iter()
    }
}

impl<D: Ord + Clone, R: Clone> Default for FiniteMap<D, R> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<D: Ord + Clone, R: Clone> FromIterator<(D, R)> for FiniteMap<D, R> {
    /// Later pairs overwrite earlier ones, as repeated `upd` would.
    fn from_iter<I: IntoIterator<Item = (D, R)>>(iter: I) -> Self {
        Self {
            bindings: iter.into_iter().collect(),
        }
    }
}

impl<D: Ord + fmt::Debug, R: fmt::Debug> fmt::Debug for FiniteMap<D, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.bindings.iter()).finish()
    }
}
