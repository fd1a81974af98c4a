//! Almost-conjugacy certificates and their isospectral consequence.
//!
//! Two subgroups are almost conjugate when they meet every conjugacy class of
//! the ambient group in the same number of elements. For such a pair the
//! Schreier coset graphs built from any fixed generator multiset have the same
//! adjacency spectrum; we check that through exact integer characteristic
//! polynomials. Nonconjugacy is certified separately by exhaustive search,
//! since equal spectra say nothing about it.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;

use crate::charpoly::{self, IntMatrix};
use crate::group::{ClassTable, FiniteGroup, Subgroup};
use crate::{Caps, Error, Result};

/// `counts[i] = |H ∩ class_i|` in the class table's order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub counts: Vec<usize>,
    pub subgroup_order: usize,
    pub ambient_order: usize,
}

pub fn fingerprint<G: FiniteGroup>(
    group: &G,
    table: &ClassTable<G::Elem>,
    h: &Subgroup<G::Elem>,
) -> Result<Fingerprint> {
    if table.ambient_order() != group.order() {
        return Err(Error::TableMismatch);
    }
    let mut counts = vec![0; table.len()];
    for e in h.elements() {
        if !group.contains(e) {
            return Err(Error::NotInGroup);
        }
        counts[table.class_index(group.index_of(e))] += 1;
    }
    Ok(Fingerprint {
        counts,
        subgroup_order: h.order(),
        ambient_order: group.order(),
    })
}

pub fn almost_conjugate(a: &Fingerprint, b: &Fingerprint) -> Result<bool> {
    if a.counts.len() != b.counts.len() || a.ambient_order != b.ambient_order {
        return Err(Error::TableMismatch);
    }
    Ok(a.counts == b.counts)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyVerdict<E> {
    pub conjugate: bool,
    /// Least `g` (canonical order) with `g H1 g^{-1} = H2`.
    pub witness: Option<E>,
    /// The verdict is final: either a witness was found, or every candidate
    /// was examined (or the orders differ).
    pub search_exhausted: bool,
    pub order_mismatch: bool,
    pub elements_scanned: usize,
}

/// Exhaustive scan of the ambient group in canonical order.
pub fn find_conjugator<G: FiniteGroup>(
    group: &G,
    h1: &Subgroup<G::Elem>,
    h2: &Subgroup<G::Elem>,
    caps: &Caps,
) -> Result<ConjugacyVerdict<G::Elem>> {
    caps.check("conjugator search", group.order() as u128, caps.enumeration)?;
    if h1.order() != h2.order() {
        return Ok(ConjugacyVerdict {
            conjugate: false,
            witness: None,
            search_exhausted: true,
            order_mismatch: true,
            elements_scanned: 0,
        });
    }
    for (i, g) in group.elements().enumerate() {
        let g_inv = group.inv(&g);
        // conjugation is injective and |H1| = |H2|, so inclusion is equality
        if h1
            .elements()
            .iter()
            .all(|h| h2.contains(&group.mul(&group.mul(&g, h), &g_inv)))
        {
            return Ok(ConjugacyVerdict {
                conjugate: true,
                witness: Some(g),
                search_exhausted: true,
                order_mismatch: false,
                elements_scanned: i + 1,
            });
        }
    }
    Ok(ConjugacyVerdict {
        conjugate: false,
        witness: None,
        search_exhausted: true,
        order_mismatch: false,
        elements_scanned: group.order(),
    })
}

/// Dense multiplication table on element indices.
struct MulTable {
    n: usize,
    table: Vec<u32>,
}

impl MulTable {
    fn new<G: FiniteGroup>(group: &G) -> Self {
        let n = group.order();
        let els: Vec<G::Elem> = group.elements().collect();
        let mut table = Vec::with_capacity(n * n);
        for a in &els {
            for b in &els {
                table.push(group.index_of(&group.mul(a, b)) as u32);
            }
        }
        MulTable { n, table }
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    /// Subgroup generated by `gens`, or `None` once it exceeds `limit`.
    fn closure(&self, identity: usize, gens: &[usize], limit: usize) -> Option<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut members = vec![identity];
        seen[identity] = true;
        let mut head = 0;
        while head < members.len() {
            let e = members[head];
            head += 1;
            for &s in gens {
                let t = self.mul(e, s);
                if !seen[t] {
                    seen[t] = true;
                    members.push(t);
                    if members.len() > limit {
                        return None;
                    }
                }
            }
        }
        members.sort_unstable();
        Some(members)
    }
}

/// Every subgroup of order `m`, each in canonical form, sorted.
///
/// Grows subgroups one generator at a time through intermediate subgroups
/// whose orders divide `m`; every subgroup of order `m` is reached that way.
pub fn enumerate_subgroups_of_order<G: FiniteGroup>(
    group: &G,
    m: usize,
    caps: &Caps,
) -> Result<Vec<Subgroup<G::Elem>>> {
    let n = group.order();
    caps.check("subgroup enumeration", n as u128, caps.subgroup_oracle)?;
    if m == 0 || !n.is_multiple_of(m) {
        return Ok(Vec::new());
    }
    let table = MulTable::new(group);
    let identity = group.index_of(&group.identity());

    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let trivial = vec![identity];
    seen.insert(trivial.clone());
    let mut work: Vec<(Vec<usize>, Vec<usize>)> = vec![(trivial, Vec::new())];
    while let Some((members, gens)) = work.pop() {
        if members.len() == m {
            continue;
        }
        let mut inside = vec![false; n];
        for &e in &members {
            inside[e] = true;
        }
        for g in 0..n {
            if inside[g] {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(g);
            let Some(sub) = table.closure(identity, &next_gens, m) else {
                continue;
            };
            if !m.is_multiple_of(sub.len()) || seen.contains(&sub) {
                continue;
            }
            seen.insert(sub.clone());
            work.push((sub, next_gens));
        }
    }
    let mut out: Vec<Subgroup<G::Elem>> = seen
        .into_iter()
        .filter(|s| s.len() == m)
        .map(|s| Subgroup::from_sorted(s.into_iter().map(|i| group.element(i)).collect()))
        .collect();
    out.sort();
    Ok(out)
}

/// Ids grouping `subgroups` into conjugacy classes of subgroups, computed by
/// conjugating each one by every ambient element.
pub fn subgroup_conjugacy_ids<G: FiniteGroup>(group: &G, subgroups: &[Subgroup<G::Elem>]) -> Vec<usize> {
    let mut ids = vec![usize::MAX; subgroups.len()];
    let mut next = 0;
    for i in 0..subgroups.len() {
        if ids[i] != usize::MAX {
            continue;
        }
        let orbit: BTreeSet<Subgroup<G::Elem>> =
            group.elements().map(|g| subgroups[i].conjugate(group, &g)).collect();
        for (j, s) in subgroups.iter().enumerate() {
            if ids[j] == usize::MAX && orbit.contains(s) {
                ids[j] = next;
            }
        }
        next += 1;
    }
    ids
}

/// A named generator multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet<E> {
    pub name: String,
    pub elements: Vec<E>,
}

impl<E: Clone + Ord> GeneratorSet<E> {
    /// `S ∪ S^{-1}` as a multiset: each `s` followed by its inverse.
    pub fn symmetrized<G: FiniteGroup<Elem = E>>(group: &G, name: &str, base: &[E]) -> Self {
        let mut elements = Vec::with_capacity(2 * base.len());
        for s in base {
            elements.push(s.clone());
            elements.push(group.inv(s));
        }
        GeneratorSet {
            name: String::from(name),
            elements,
        }
    }

    /// Closed under inversion with multiplicity.
    pub fn is_symmetric<G: FiniteGroup<Elem = E>>(&self, group: &G) -> bool {
        let mut a = self.elements.clone();
        let mut b: Vec<E> = self.elements.iter().map(|s| group.inv(s)).collect();
        a.sort();
        b.sort();
        a == b
    }
}

/// The fixed battery: the group's standard generators with inverses, and the
/// same set enriched by the given central elements with inverses.
pub fn generator_battery<G: FiniteGroup>(group: &G, central: &[G::Elem]) -> Vec<GeneratorSet<G::Elem>> {
    let base = group.generators();
    let mut enriched = base.clone();
    enriched.extend_from_slice(central);
    vec![
        GeneratorSet::symmetrized(group, "standard", &base),
        GeneratorSet::symmetrized(group, "enriched", &enriched),
    ]
}

/// Coset graph on right cosets `Hg`, ordered by least element, with one edge
/// `Hg → Hgs` for each `s` in the multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchreierGraph {
    pub vertices: usize,
    /// Row-major edge multiplicities.
    pub adjacency: Vec<u32>,
    pub degree: usize,
    pub symmetric: bool,
    pub connected: bool,
}

impl SchreierGraph {
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.adjacency[i * self.vertices + j]
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::new(self.vertices, self.adjacency.iter().map(|&v| v as i64).collect())
    }
}

pub fn schreier_graph<G: FiniteGroup>(
    group: &G,
    h: &Subgroup<G::Elem>,
    gens: &GeneratorSet<G::Elem>,
) -> Result<SchreierGraph> {
    if gens.elements.iter().any(|s| !group.contains(s)) || h.elements().iter().any(|e| !group.contains(e)) {
        return Err(Error::NotInGroup);
    }
    if !gens.is_symmetric(group) {
        return Err(Error::NotSymmetric);
    }
    let n = group.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps: Vec<G::Elem> = Vec::new();
    for (i, g) in group.elements().enumerate() {
        if coset_of[i] != usize::MAX {
            continue;
        }
        let id = reps.len();
        for x in h.elements() {
            coset_of[group.index_of(&group.mul(x, &g))] = id;
        }
        reps.push(g);
    }
    let v = reps.len();
    let mut adjacency = vec![0u32; v * v];
    for (i, g) in reps.iter().enumerate() {
        for s in &gens.elements {
            let j = coset_of[group.index_of(&group.mul(g, s))];
            adjacency[i * v + j] += 1;
        }
    }
    let symmetric = (0..v).all(|i| (0..i).all(|j| adjacency[i * v + j] == adjacency[j * v + i]));
    let mut seen = vec![false; v];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..v {
            if adjacency[i * v + j] > 0 && !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    Ok(SchreierGraph {
        vertices: v,
        adjacency,
        degree: gens.elements.len(),
        symmetric,
        connected: seen.iter().all(|&s| s),
    })
}

/// Exact characteristic polynomial of the adjacency matrix, low degree first.
pub fn char_poly(graph: &SchreierGraph, caps: &Caps) -> Result<Vec<BigInt>> {
    caps.check("characteristic polynomial", graph.vertices as u128, caps.charpoly_vertices as u64)?;
    Ok(charpoly::char_poly(&graph.to_matrix()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairVerdict<E> {
    pub i: usize,
    pub j: usize,
    pub almost_conjugate: bool,
    pub conjugacy: ConjugacyVerdict<E>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumCheck {
    pub generator_set: String,
    pub vertices: usize,
    pub connected: bool,
    /// One polynomial per family member.
    pub polys: Vec<Vec<BigInt>>,
    pub all_equal: bool,
}

/// Everything checked about one subgroup family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport<E> {
    pub ambient_order: usize,
    pub class_count: usize,
    pub fingerprints: Vec<Fingerprint>,
    pub pairs: Vec<PairVerdict<E>>,
    pub generator_sets: Vec<GeneratorSet<E>>,
    pub spectra: Vec<SpectrumCheck>,
}

impl<E> FamilyReport<E> {
    pub fn all_almost_conjugate(&self) -> bool {
        self.pairs.iter().all(|p| p.almost_conjugate)
    }

    pub fn all_nonconjugate(&self) -> bool {
        self.pairs
            .iter()
            .all(|p| !p.conjugacy.conjugate && p.conjugacy.search_exhausted)
    }

    pub fn spectra_equal(&self) -> bool {
        self.spectra.iter().all(|s| s.all_equal)
    }

    pub fn verified(&self) -> bool {
        self.all_almost_conjugate() && self.all_nonconjugate() && self.spectra_equal()
    }
}

/// Fingerprints, all pairwise conjugator searches, and (optionally) Schreier
/// spectra for every generator set in `battery`.
pub fn certify_family<G: FiniteGroup>(
    group: &G,
    table: &ClassTable<G::Elem>,
    family: &[Subgroup<G::Elem>],
    battery: &[GeneratorSet<G::Elem>],
    with_spectra: bool,
    caps: &Caps,
) -> Result<FamilyReport<G::Elem>> {
    let fingerprints = family
        .iter()
        .map(|h| fingerprint(group, table, h))
        .collect::<Result<Vec<_>>>()?;
    let n = family.len() as u128;
    caps.check("pairwise conjugator search", n * n.saturating_sub(1) / 2 * group.order() as u128, caps.pair_work)?;
    let mut pairs = Vec::new();
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            pairs.push(PairVerdict {
                i,
                j,
                almost_conjugate: almost_conjugate(&fingerprints[i], &fingerprints[j])?,
                conjugacy: find_conjugator(group, &family[i], &family[j], caps)?,
            });
        }
    }
    let mut spectra = Vec::new();
    if with_spectra {
        for set in battery {
            let mut polys = Vec::with_capacity(family.len());
            let mut vertices = 0;
            let mut connected = true;
            for h in family {
                let graph = schreier_graph(group, h, set)?;
                vertices = graph.vertices;
                connected &= graph.connected;
                polys.push(char_poly(&graph, caps)?);
            }
            let all_equal = polys.windows(2).all(|w| w[0] == w[1]);
            spectra.push(SpectrumCheck {
                generator_set: set.name.clone(),
                vertices,
                connected,
                polys,
                all_equal,
            });
        }
    }
    Ok(FamilyReport {
        ambient_order: group.order(),
        class_count: table.len(),
        fingerprints,
        pairs,
        generator_sets: battery.to_vec(),
        spectra,
    })
}

/// Result of recomputing a family's verdicts from the full subgroup lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub subgroups_of_order: usize,
    pub family_contained: bool,
    pub discrepancies: usize,
}

/// Enumerates every subgroup of the family's order, recomputes almost
/// conjugacy (fresh brute-force class table) and conjugacy (subgroup orbits)
/// for the family members, and counts disagreements with `report`.
pub fn oracle_cross_check<G: FiniteGroup>(
    group: &G,
    family: &[Subgroup<G::Elem>],
    report: &FamilyReport<G::Elem>,
    caps: &Caps,
) -> Result<OracleReport> {
    let m = family.first().map(|h| h.order()).unwrap_or(1);
    let all = enumerate_subgroups_of_order(group, m, caps)?;
    let positions: Vec<Option<usize>> = family.iter().map(|h| all.binary_search(h).ok()).collect();
    let family_contained = positions.iter().all(|p| p.is_some());
    let table = ClassTable::brute_force(group);
    let prints = all
        .iter()
        .map(|h| fingerprint(group, &table, h))
        .collect::<Result<Vec<_>>>()?;
    let conj_ids = subgroup_conjugacy_ids(group, &all);
    let mut discrepancies = 0;
    for p in &report.pairs {
        match (positions[p.i], positions[p.j]) {
            (Some(a), Some(b)) => {
                if (prints[a] == prints[b]) != p.almost_conjugate {
                    discrepancies += 1;
                }
                if (conj_ids[a] == conj_ids[b]) != p.conjugacy.conjugate {
                    discrepancies += 1;
                }
            }
            _ => discrepancies += 1,
        }
    }
    Ok(OracleReport {
        subgroups_of_order: all.len(),
        family_contained,
        discrepancies,
    })
}
