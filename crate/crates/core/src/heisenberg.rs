//! The Heisenberg group `H(F_q)` of 3×3 upper unitriangular matrices,
//! the subgroup family `H_T`, and finite direct products of Heisenberg groups.
//!
//! `(x, y, z)` stands for the matrix
//!
//! ```text
//! | 1 x y |
//! | 0 1 z |
//! | 0 0 1 |
//! ```
//!
//! so `(x,y,z)·(x',y',z') = (x+x', y+y'+x·z', z+z')`.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::finfield::{enumerate_additive_maps, AdditiveMap, FieldDescriptor, FqElem};
use crate::group::{ClassTable, ConjugacyClass, FiniteGroup, Subgroup};
use crate::{Caps, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HeisElem {
    pub x: FqElem,
    pub y: FqElem,
    pub z: FqElem,
}

impl HeisElem {
    pub const IDENTITY: HeisElem = HeisElem {
        x: FqElem::ZERO,
        y: FqElem::ZERO,
        z: FqElem::ZERO,
    };

    pub fn new(x: FqElem, y: FqElem, z: FqElem) -> Self {
        HeisElem { x, y, z }
    }

    fn key(&self) -> (FqElem, FqElem, FqElem) {
        (self.z, self.x, self.y)
    }
}

// Canonical order compares (z, x, y): the center {(0,y,0)} comes first and the
// z = 0 subgroup occupies the first q^2 indices.
impl Ord for HeisElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for HeisElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeisenbergGroup {
    field: FieldDescriptor,
}

impl HeisenbergGroup {
    pub fn new(field: FieldDescriptor, caps: &Caps) -> Result<Self> {
        let q = field.order() as u128;
        caps.check("Heisenberg group order", q * q * q, caps.enumeration)?;
        Ok(HeisenbergGroup { field })
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn q(&self) -> usize {
        self.field.order() as usize
    }

    /// Group law with operand validation.
    pub fn try_mul(&self, a: &HeisElem, b: &HeisElem) -> Result<HeisElem> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.mul(a, b))
    }

    pub fn elem(&self, x: u32, y: u32, z: u32) -> Result<HeisElem> {
        let e = HeisElem::new(FqElem(x), FqElem(y), FqElem(z));
        if self.contains(&e) {
            Ok(e)
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// The 3×3 matrix of `g`, row-major.
    pub fn matrix(&self, g: &HeisElem) -> [[FqElem; 3]; 3] {
        let (o, l) = (self.field.zero(), self.field.one());
        [[l, g.x, g.y], [o, l, g.z], [o, o, l]]
    }

    /// `H_1 = {(x, 0, 0)}`.
    pub fn h1(&self) -> Subgroup<HeisElem> {
        self.subgroup_from_map(&AdditiveMap::zero(&self.field))
    }

    /// The center `{(0, y, 0)}`.
    pub fn center(&self) -> Subgroup<HeisElem> {
        let z = self.field.zero();
        Subgroup::from_sorted(self.field.elements().map(|y| HeisElem::new(z, y, z)).collect())
    }

    /// The automorphism `(x, y, z) ↦ (x, y + T(x), z)`.
    pub fn map_automorphism(&self, t: &AdditiveMap, g: &HeisElem) -> HeisElem {
        HeisElem::new(g.x, self.field.add(g.y, t.eval(&self.field, g.x)), g.z)
    }

    /// `H_T = {(x, T(x), 0)}`, the image of `H_1` under [`Self::map_automorphism`].
    pub fn subgroup_from_map(&self, t: &AdditiveMap) -> Subgroup<HeisElem> {
        let z = self.field.zero();
        let mut els: Vec<HeisElem> = self
            .field
            .elements()
            .map(|x| HeisElem::new(x, t.eval(&self.field, x), z))
            .collect();
        els.sort();
        Subgroup::from_sorted(els)
    }

    /// The parameters of [`Self::bgg_family`], in the same order.
    pub fn bgg_maps(&self, caps: &Caps) -> Result<Vec<AdditiveMap>> {
        enumerate_additive_maps(&self.field, true, caps)
    }

    /// `{H_T : T additive with a_0 = 0}`: `p^{n(n-1)}` subgroups of order `q`,
    /// pairwise almost conjugate and pairwise nonconjugate.
    pub fn bgg_family(&self, caps: &Caps) -> Result<Vec<Subgroup<HeisElem>>> {
        Ok(self
            .bgg_maps(caps)?
            .iter()
            .map(|t| self.subgroup_from_map(t))
            .collect())
    }

    /// Conjugacy classes from the closed form: `q` central singletons
    /// `{(0,y,0)}` and, for each `(x,z) ≠ (0,0)`, the class `{(x,*,z)}`.
    pub fn class_table_closed_form(&self) -> ClassTable<HeisElem> {
        let f = &self.field;
        let mut classes = Vec::with_capacity(Self::class_count(self.q()));
        for y in f.elements() {
            let e = HeisElem::new(f.zero(), y, f.zero());
            classes.push(ConjugacyClass {
                representative: e,
                members: alloc::vec![e],
            });
        }
        for x in f.elements() {
            for z in f.elements() {
                if x.is_zero() && z.is_zero() {
                    continue;
                }
                let members: Vec<_> = f.elements().map(|y| HeisElem::new(x, y, z)).collect();
                classes.push(ConjugacyClass {
                    representative: members[0],
                    members,
                });
            }
        }
        ClassTable::from_classes(self, classes).expect("closed-form classes partition H(F_q)")
    }

    pub fn class_table(&self, mode: ClassMode) -> ClassTable<HeisElem> {
        match mode {
            ClassMode::BruteForce => ClassTable::brute_force(self),
            ClassMode::ClosedForm => self.class_table_closed_form(),
        }
    }

    /// `q^2 + q - 1`.
    pub fn class_count(q: usize) -> usize {
        q * q + q - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassMode {
    BruteForce,
    ClosedForm,
}

impl FiniteGroup for HeisenbergGroup {
    type Elem = HeisElem;

    fn order(&self) -> usize {
        let q = self.q();
        q * q * q
    }

    fn element(&self, index: usize) -> HeisElem {
        let q = self.q();
        let y = index % q;
        let x = (index / q) % q;
        let z = index / (q * q);
        HeisElem::new(FqElem(x as u32), FqElem(y as u32), FqElem(z as u32))
    }

    fn index_of(&self, e: &HeisElem) -> usize {
        let q = self.q();
        (e.z.index() as usize * q + e.x.index() as usize) * q + e.y.index() as usize
    }

    fn contains(&self, e: &HeisElem) -> bool {
        self.field.contains(e.x) && self.field.contains(e.y) && self.field.contains(e.z)
    }

    fn identity(&self) -> HeisElem {
        HeisElem::IDENTITY
    }

    fn mul(&self, a: &HeisElem, b: &HeisElem) -> HeisElem {
        let f = &self.field;
        HeisElem::new(
            f.add(a.x, b.x),
            f.add(f.add(a.y, b.y), f.mul(a.x, b.z)),
            f.add(a.z, b.z),
        )
    }

    /// `(x,y,z)^{-1} = (-x, -y + x·z, -z)`.
    fn inv(&self, a: &HeisElem) -> HeisElem {
        let f = &self.field;
        HeisElem::new(f.neg(a.x), f.add(f.neg(a.y), f.mul(a.x, a.z)), f.neg(a.z))
    }

    /// `(x^i, 0, 0)` and `(0, 0, x^i)` for the power basis `x^i` of `F_q / F_p`.
    fn generators(&self) -> Vec<HeisElem> {
        let f = &self.field;
        let mut gens = Vec::new();
        for i in 0..f.degree() {
            gens.push(HeisElem::new(f.basis(i), f.zero(), f.zero()));
        }
        for i in 0..f.degree() {
            gens.push(HeisElem::new(f.zero(), f.zero(), f.basis(i)));
        }
        gens
    }
}

/// `H(F_{q_1}) × ⋯ × H(F_{q_r})`, elements as tuples ordered
/// lexicographically (first factor most significant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGroup {
    factors: Vec<HeisenbergGroup>,
}

pub type ProdElem = Vec<HeisElem>;

impl ProductGroup {
    pub fn new(fields: &[FieldDescriptor], caps: &Caps) -> Result<Self> {
        if fields.is_empty() {
            return Err(Error::InvalidParameter("product needs at least one factor"));
        }
        let mut total: u128 = 1;
        for f in fields {
            let q = f.order() as u128;
            total = total.saturating_mul(q * q * q);
        }
        caps.check("product group order", total, caps.enumeration)?;
        let factors = fields
            .iter()
            .map(|f| HeisenbergGroup::new(f.clone(), caps))
            .collect::<Result<_>>()?;
        Ok(ProductGroup { factors })
    }

    pub fn factors(&self) -> &[HeisenbergGroup] {
        &self.factors
    }

    /// Classes of a direct product are the products of factor classes.
    pub fn class_table_from_factors(&self, tables: &[ClassTable<HeisElem>]) -> Result<ClassTable<ProdElem>> {
        if tables.len() != self.factors.len() {
            return Err(Error::InvalidParameter("one class table per factor"));
        }
        let mut classes: Vec<Vec<ProdElem>> = alloc::vec![alloc::vec![Vec::new()]];
        for t in tables {
            let mut next = Vec::with_capacity(classes.len() * t.len());
            for partial in &classes {
                for c in t.classes() {
                    let mut members = Vec::with_capacity(partial.len() * c.size());
                    for prefix in partial {
                        for m in &c.members {
                            let mut e = prefix.clone();
                            e.push(*m);
                            members.push(e);
                        }
                    }
                    next.push(members);
                }
            }
            classes = next;
        }
        let classes = classes
            .into_iter()
            .map(|members| ConjugacyClass {
                representative: members[0].clone(),
                members,
            })
            .collect();
        ClassTable::from_classes(self, classes)
    }

    /// All products `Π H_{i,T_i}` of one subgroup per factor.
    pub fn product_family(
        &self,
        factor_families: &[Vec<Subgroup<HeisElem>>],
        caps: &Caps,
    ) -> Result<Vec<Subgroup<ProdElem>>> {
        if factor_families.len() != self.factors.len() {
            return Err(Error::InvalidParameter("one family per factor"));
        }
        let count = factor_families
            .iter()
            .fold(1u128, |acc, f| acc.saturating_mul(f.len() as u128));
        caps.check("product family size", count, caps.enumeration)?;
        for (fam, g) in factor_families.iter().zip(&self.factors) {
            if fam.iter().any(|h| h.elements().iter().any(|e| !g.contains(e))) {
                return Err(Error::NotInGroup);
            }
        }
        let mut out: Vec<Vec<&Subgroup<HeisElem>>> = alloc::vec![Vec::new()];
        for fam in factor_families {
            out = out
                .iter()
                .flat_map(|prefix| {
                    fam.iter().map(move |h| {
                        let mut v = prefix.clone();
                        v.push(h);
                        v
                    })
                })
                .collect();
        }
        Ok(out.into_iter().map(|parts| Self::direct_product(&parts)).collect())
    }

    fn direct_product(parts: &[&Subgroup<HeisElem>]) -> Subgroup<ProdElem> {
        let mut els: Vec<ProdElem> = alloc::vec![Vec::new()];
        for h in parts {
            els = els
                .iter()
                .flat_map(|prefix| {
                    h.elements().iter().map(move |e| {
                        let mut v = prefix.clone();
                        v.push(*e);
                        v
                    })
                })
                .collect();
        }
        Subgroup::from_sorted(els)
    }
}

impl FiniteGroup for ProductGroup {
    type Elem = ProdElem;

    fn order(&self) -> usize {
        self.factors.iter().map(|g| g.order()).product()
    }

    fn element(&self, mut index: usize) -> ProdElem {
        let mut out = alloc::vec![HeisElem::IDENTITY; self.factors.len()];
        for (slot, g) in out.iter_mut().zip(&self.factors).rev() {
            let n = g.order();
            *slot = g.element(index % n);
            index /= n;
        }
        out
    }

    fn index_of(&self, e: &ProdElem) -> usize {
        e.iter()
            .zip(&self.factors)
            .fold(0, |acc, (x, g)| acc * g.order() + g.index_of(x))
    }

    fn contains(&self, e: &ProdElem) -> bool {
        e.len() == self.factors.len() && e.iter().zip(&self.factors).all(|(x, g)| g.contains(x))
    }

    fn identity(&self) -> ProdElem {
        alloc::vec![HeisElem::IDENTITY; self.factors.len()]
    }

    fn mul(&self, a: &ProdElem, b: &ProdElem) -> ProdElem {
        self.factors
            .iter()
            .zip(a.iter().zip(b))
            .map(|(g, (x, y))| g.mul(x, y))
            .collect()
    }

    fn inv(&self, a: &ProdElem) -> ProdElem {
        self.factors.iter().zip(a).map(|(g, x)| g.inv(x)).collect()
    }

    fn generators(&self) -> Vec<ProdElem> {
        let mut gens = Vec::new();
        for (i, g) in self.factors.iter().enumerate() {
            for s in g.generators() {
                let mut e = self.identity();
                e[i] = s;
                gens.push(e);
            }
        }
        gens
    }
}
