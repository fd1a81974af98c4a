//! Finite groups with a dense, canonically ordered element indexing.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::{Error, Result};

/// A finite group whose elements are numbered `0..order()` consistently with
/// the element type's `Ord`: `index_of(a) < index_of(b)` iff `a < b`.
pub trait FiniteGroup {
    type Elem: Clone + Ord + Debug;

    fn order(&self) -> usize;
    fn element(&self, index: usize) -> Self::Elem;
    fn index_of(&self, e: &Self::Elem) -> usize;
    fn contains(&self, e: &Self::Elem) -> bool;
    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// A generating set, used as the default Schreier generator battery base.
    fn generators(&self) -> Vec<Self::Elem>;

    /// `g a g^{-1}`.
    fn conjugate(&self, g: &Self::Elem, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(g, a), &self.inv(g))
    }

    fn elements(&self) -> ElementIter<'_, Self>
    where
        Self: Sized,
    {
        ElementIter {
            group: self,
            next: 0,
        }
    }
}

pub struct ElementIter<'a, G: FiniteGroup> {
    group: &'a G,
    next: usize,
}

impl<G: FiniteGroup> Iterator for ElementIter<'_, G> {
    type Item = G::Elem;

    fn next(&mut self) -> Option<G::Elem> {
        if self.next < self.group.order() {
            self.next += 1;
            Some(self.group.element(self.next - 1))
        } else {
            None
        }
    }
}

/// A subgroup as its canonically sorted, duplicate-free element list.
/// Equality of subgroups is equality of these lists.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup<E> {
    elements: Vec<E>,
}

impl<E: Clone + Ord + Debug> Subgroup<E> {
    /// Sorts and deduplicates `elements`, then checks that they form a
    /// subgroup of `group`.
    pub fn new<G: FiniteGroup<Elem = E>>(group: &G, mut elements: Vec<E>) -> Result<Self> {
        if elements.iter().any(|e| !group.contains(e)) {
            return Err(Error::NotInGroup);
        }
        elements.sort();
        elements.dedup();
        let sub = Subgroup { elements };
        if !sub.is_subgroup_of(group) {
            return Err(Error::NotASubgroup);
        }
        Ok(sub)
    }

    /// Wraps an already sorted, duplicate-free list known to be a subgroup.
    pub(crate) fn from_sorted(elements: Vec<E>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Subgroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    /// Identity, inverses and closure, checked exhaustively.
    pub fn is_subgroup_of<G: FiniteGroup<Elem = E>>(&self, group: &G) -> bool {
        if !self.contains(&group.identity()) {
            return false;
        }
        if !group.order().is_multiple_of(self.order()) {
            return false;
        }
        self.elements.iter().all(|a| {
            self.contains(&group.inv(a))
                && self.elements.iter().all(|b| self.contains(&group.mul(a, b)))
        })
    }

    /// `g H g^{-1}`.
    pub fn conjugate<G: FiniteGroup<Elem = E>>(&self, group: &G, g: &E) -> Self {
        let mut els: Vec<E> = self.elements.iter().map(|h| group.conjugate(g, h)).collect();
        els.sort();
        Subgroup { elements: els }
    }
}

/// One conjugacy class: least member, size and the sorted member list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass<E> {
    pub representative: E,
    pub members: Vec<E>,
}

impl<E> ConjugacyClass<E> {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Partition of a group into conjugacy classes, ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTable<E> {
    classes: Vec<ConjugacyClass<E>>,
    /// Class id of each element, by element index.
    class_of: Vec<u32>,
}

impl<E: Clone + Ord + Debug> ClassTable<E> {
    /// Exact partition by conjugating every element by every group element.
    pub fn brute_force<G: FiniteGroup<Elem = E>>(group: &G) -> Self {
        let n = group.order();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        let all: Vec<E> = group.elements().collect();
        let inverses: Vec<E> = all.iter().map(|g| group.inv(g)).collect();
        for i in 0..n {
            if class_of[i] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            let a = &all[i];
            let mut members = Vec::new();
            for (g, g_inv) in all.iter().zip(&inverses) {
                let c = group.mul(&group.mul(g, a), g_inv);
                let j = group.index_of(&c);
                if class_of[j] == u32::MAX {
                    class_of[j] = id;
                    members.push(c);
                }
            }
            members.sort();
            classes.push(ConjugacyClass {
                representative: a.clone(),
                members,
            });
        }
        ClassTable { classes, class_of }
    }

    /// Builds a table from explicit classes, which must partition `group`.
    pub fn from_classes<G: FiniteGroup<Elem = E>>(
        group: &G,
        mut classes: Vec<ConjugacyClass<E>>,
    ) -> Result<Self> {
        for c in classes.iter_mut() {
            c.members.sort();
            c.representative = c.members.first().cloned().ok_or(Error::NotInGroup)?;
        }
        classes.sort_by(|a, b| a.representative.cmp(&b.representative));
        let mut class_of = vec![u32::MAX; group.order()];
        for (id, c) in classes.iter().enumerate() {
            for m in &c.members {
                if !group.contains(m) {
                    return Err(Error::NotInGroup);
                }
                let j = group.index_of(m);
                if class_of[j] != u32::MAX {
                    return Err(Error::NotInGroup);
                }
                class_of[j] = id as u32;
            }
        }
        if class_of.contains(&u32::MAX) {
            return Err(Error::NotInGroup);
        }
        Ok(ClassTable { classes, class_of })
    }

    pub fn classes(&self) -> &[ConjugacyClass<E>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn ambient_order(&self) -> usize {
        self.class_of.len()
    }

    /// Class id of the element with the given index.
    pub fn class_index(&self, element_index: usize) -> usize {
        self.class_of[element_index] as usize
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size()).collect()
    }

    /// Every class is stable under conjugation by each of `gens`.
    pub fn is_conjugation_closed<G: FiniteGroup<Elem = E>>(&self, group: &G, gens: &[E]) -> bool {
        self.classes.iter().enumerate().all(|(id, c)| {
            c.members.iter().all(|m| {
                gens.iter()
                    .all(|g| self.class_index(group.index_of(&group.conjugate(g, m))) == id)
            })
        })
    }
}
