//! Root subgroups of `SL_3(F_q)` and `Sp_4(F_q)`, the Heisenberg group they
//! generate, and orders of split Chevalley groups.
//!
//! Root elements are `x(t) = I + t·X` with `X` square-zero. For `A_2` the
//! roots are `a`, `b` with `X_a = E12`, `X_b = E23` and center `X_{a+b} = E13`.
//! For `B_2` (symplectic form `J` antidiagonal with signs `+,+,-,-` by row)
//! the short roots are `X_a = E12 - E34`, `X_{a+b} = E13 + E24` and the long
//! center root is `X_{2a+b} = E14`; there `[X_a, X_{a+b}] = 2·E14`.
//!
//! The Heisenberg map is `(x, y, z) ↦ x_c(N·y)·x_2(z)·x_1(x)` where `N` is the
//! commutator coefficient (1 for `A_2`, 2 for `B_2`); with this factor order
//! it is a homomorphism for `(x,y,z)(x',y',z') = (x+x', y+y'+xz', z+z')`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigUint;
use num_traits::One;

use crate::arith::prime_power;
use crate::finfield::{FieldDescriptor, FqElem};
use crate::heisenberg::HeisElem;
use crate::{Caps, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ambient {
    SpecialLinear,
    Symplectic,
}

/// The rank-2 root systems whose unipotent radicals are realized here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootPair {
    A2,
    B2,
}

impl RootPair {
    pub fn ambient(self) -> Ambient {
        match self {
            RootPair::A2 => Ambient::SpecialLinear,
            RootPair::B2 => Ambient::Symplectic,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            RootPair::A2 => 3,
            RootPair::B2 => 4,
        }
    }

    /// Coefficient `N` in `[x_1(s), x_2(t)] = x_c(N·s·t)`.
    pub fn structure_constant(self) -> i64 {
        match self {
            RootPair::A2 => 1,
            RootPair::B2 => 2,
        }
    }
}

impl fmt::Display for RootPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootPair::A2 => "A2",
            RootPair::B2 => "B2",
        })
    }
}

/// A square matrix over `F_q`, row-major, tagged with its ambient group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatrixElem {
    pub ambient: Ambient,
    pub dim: usize,
    pub entries: Vec<FqElem>,
}

impl MatrixElem {
    pub fn identity(field: &FieldDescriptor, ambient: Ambient, dim: usize) -> Self {
        let mut entries = vec![field.zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = field.one();
        }
        MatrixElem { ambient, dim, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> FqElem {
        self.entries[i * self.dim + j]
    }

    pub fn mul(&self, field: &FieldDescriptor, other: &Self) -> Self {
        let n = self.dim;
        let mut entries = vec![field.zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let e = &mut entries[i * n + j];
                    *e = field.add(*e, field.mul(a, other.get(k, j)));
                }
            }
        }
        MatrixElem {
            ambient: self.ambient,
            dim: n,
            entries,
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = self.entries.clone();
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.get(i, j);
            }
        }
        MatrixElem {
            ambient: self.ambient,
            dim: n,
            entries,
        }
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self, field: &FieldDescriptor) -> FqElem {
        let n = self.dim;
        let mut m = self.entries.clone();
        let mut det = field.one();
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| !m[r * n + c].is_zero()) else {
                return field.zero();
            };
            if piv != c {
                for j in 0..n {
                    m.swap(piv * n + j, c * n + j);
                }
                det = field.neg(det);
            }
            let p = m[c * n + c];
            det = field.mul(det, p);
            let p_inv = field.inv(p).expect("nonzero pivot");
            for r in c + 1..n {
                let f = field.mul(m[r * n + c], p_inv);
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let t = field.mul(f, m[c * n + j]);
                    m[r * n + j] = field.sub(m[r * n + j], t);
                }
            }
        }
        det
    }

    /// `Mᵀ J M = J` for the fixed 4×4 form.
    pub fn is_symplectic(&self, field: &FieldDescriptor) -> bool {
        if self.dim != 4 {
            return false;
        }
        let j = symplectic_form(field);
        self.transpose().mul(field, &j).mul(field, self) == j
    }

    /// Determinant 1, plus the symplectic identity for symplectic matrices.
    pub fn is_valid(&self, field: &FieldDescriptor) -> bool {
        self.det(field) == field.one()
            && (self.ambient != Ambient::Symplectic || self.is_symplectic(field))
    }
}

/// `J = [[0,0,0,1],[0,0,1,0],[0,-1,0,0],[-1,0,0,0]]`.
pub fn symplectic_form(field: &FieldDescriptor) -> MatrixElem {
    let mut j = MatrixElem {
        ambient: Ambient::Symplectic,
        dim: 4,
        entries: vec![field.zero(); 16],
    };
    let (one, minus) = (field.one(), field.neg(field.one()));
    j.entries[3] = one;
    j.entries[4 + 2] = one;
    j.entries[2 * 4 + 1] = minus;
    j.entries[3 * 4] = minus;
    j
}

/// `I + t·X` where `X` is given by signed unit entries `(i, j, ±1)`.
fn root_element(
    field: &FieldDescriptor,
    ambient: Ambient,
    dim: usize,
    pattern: &[(usize, usize, i64)],
    t: FqElem,
) -> MatrixElem {
    let mut m = MatrixElem::identity(field, ambient, dim);
    for &(i, j, s) in pattern {
        let v = field.mul(field.from_int(s), t);
        m.entries[i * dim + j] = field.add(m.entries[i * dim + j], v);
    }
    m
}

const A2_ROOTS: [&[(usize, usize, i64)]; 3] = [&[(0, 1, 1)], &[(1, 2, 1)], &[(0, 2, 1)]];
const B2_ROOTS: [&[(usize, usize, i64)]; 3] = [&[(0, 1, 1), (2, 3, -1)], &[(0, 2, 1), (1, 3, 1)], &[(0, 3, 1)]];

/// The root subgroups of one rank-2 pair over a fixed field.
#[derive(Debug, Clone)]
pub struct RootSubgroups {
    pair: RootPair,
    field: FieldDescriptor,
}

impl RootSubgroups {
    pub fn new(pair: RootPair, field: FieldDescriptor) -> Result<Self> {
        if pair == RootPair::B2 && field.characteristic() == 2 {
            return Err(Error::Characteristic {
                required: "odd characteristic",
                p: 2,
            });
        }
        Ok(RootSubgroups { pair, field })
    }

    pub fn pair(&self) -> RootPair {
        self.pair
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    fn pattern(&self, which: usize) -> &'static [(usize, usize, i64)] {
        match self.pair {
            RootPair::A2 => A2_ROOTS[which],
            RootPair::B2 => B2_ROOTS[which],
        }
    }

    fn element(&self, which: usize, t: FqElem) -> MatrixElem {
        root_element(&self.field, self.pair.ambient(), self.pair.dim(), self.pattern(which), t)
    }

    /// First generating root element `x_1(t)` (`x_a`).
    pub fn x1(&self, t: FqElem) -> MatrixElem {
        self.element(0, t)
    }

    /// Second generating root element `x_2(t)` (`x_b` or `x_{a+b}`).
    pub fn x2(&self, t: FqElem) -> MatrixElem {
        self.element(1, t)
    }

    /// Central root element (`x_{a+b}` or `x_{2a+b}`).
    pub fn center(&self, t: FqElem) -> MatrixElem {
        self.element(2, t)
    }

    /// Both one-parameter families, `x_1(t)` for all `t` then `x_2(t)`.
    pub fn generators(&self) -> Vec<MatrixElem> {
        let f = &self.field;
        f.elements().map(|t| self.x1(t)).chain(f.elements().map(|t| self.x2(t))).collect()
    }

    pub fn identity(&self) -> MatrixElem {
        MatrixElem::identity(&self.field, self.pair.ambient(), self.pair.dim())
    }

    /// `x_c(N·y)·x_2(z)·x_1(x)`.
    pub fn heisenberg_map(&self, g: &HeisElem) -> MatrixElem {
        let f = &self.field;
        let ny = f.mul(f.from_int(self.pair.structure_constant()), g.y);
        self.center(ny).mul(f, &self.x2(g.z)).mul(f, &self.x1(g.x))
    }
}

/// `{I + t·E12} ∪ {I + t·E23}` over `F_q`.
pub fn sl3_root_generators(field: &FieldDescriptor) -> Vec<MatrixElem> {
    RootSubgroups {
        pair: RootPair::A2,
        field: field.clone(),
    }
    .generators()
}

/// `{I + t(E12 - E34)} ∪ {I + t(E13 + E24)}`; characteristic 2 is rejected.
pub fn sp4_root_generators(field: &FieldDescriptor) -> Result<Vec<MatrixElem>> {
    Ok(RootSubgroups::new(RootPair::B2, field.clone())?.generators())
}

/// Breadth-first closure of `gens` under multiplication, sorted.
pub fn generate_closure(field: &FieldDescriptor, gens: &[MatrixElem], cap: u64) -> Result<Vec<MatrixElem>> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidParameter("empty generator set"));
    };
    let id = MatrixElem::identity(field, first.ambient, first.dim);
    let mut seen: BTreeSet<MatrixElem> = BTreeSet::new();
    seen.insert(id.clone());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for e in &frontier {
            for s in gens {
                let t = e.mul(field, s);
                if !seen.contains(&t) {
                    if seen.len() as u64 >= cap {
                        return Err(Error::CapExceeded {
                            what: "matrix closure",
                            size: seen.len() as u128 + 1,
                            cap,
                        });
                    }
                    seen.insert(t.clone());
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.into_iter().collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// `φ(a)·φ(b) ≠ φ(a·b)`.
    NotHomomorphism { a: HeisElem, b: HeisElem },
    NotInjective { a: HeisElem, b: HeisElem },
    /// `φ(g)` is not an element of `U`.
    ImageOutsideU { g: HeisElem },
    /// A central element maps outside the center of `U`.
    CenterNotCentral { g: HeisElem, u: MatrixElem },
    /// An image fails the ambient group's invariant.
    NotInAmbient { g: HeisElem },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingCertificate {
    pub pair: RootPair,
    pub ambient: Ambient,
    pub q: usize,
    pub generated_order: usize,
    pub exhaustive: bool,
    pub pairs_checked: usize,
    pub homomorphism: bool,
    pub bijective: bool,
    pub center_to_center: bool,
    pub isomorphism: bool,
    pub counterexample: Option<Counterexample>,
    /// `(x, y, z) ↦ φ(x, y, z)` in canonical Heisenberg order.
    pub map_table: Vec<(HeisElem, MatrixElem)>,
}

const EXHAUSTIVE_Q: usize = 9;
const SAMPLED_PAIRS: usize = 4096;

/// Checks that `φ` is a bijective homomorphism `H(F_q) → U`, exhaustively on
/// pairs for `q ≤ 9` and on a fixed pseudo-random pair sample above.
pub fn heisenberg_iso_check(roots: &RootSubgroups, u: &[MatrixElem]) -> Result<EmbeddingCertificate> {
    let f = roots.field();
    let q = f.order() as usize;
    let n = q * q * q;
    if u.len() != n {
        return Err(Error::OrderMismatch {
            expected: n,
            found: u.len(),
        });
    }
    let elems: Vec<HeisElem> = (0..n)
        .map(|i| {
            let (zx, y) = (i / q, i % q);
            HeisElem::new(f.element((zx % q) as u32), f.element(y as u32), f.element((zx / q) as u32))
        })
        .collect();
    let heis_mul = |a: &HeisElem, b: &HeisElem| {
        HeisElem::new(
            f.add(a.x, b.x),
            f.add(f.add(a.y, b.y), f.mul(a.x, b.z)),
            f.add(a.z, b.z),
        )
    };
    let index = |g: &HeisElem| ((g.z.index() as usize * q) + g.x.index() as usize) * q + g.y.index() as usize;
    let images: Vec<MatrixElem> = elems.iter().map(|g| roots.heisenberg_map(g)).collect();

    let mut counterexample = None;
    if let Some(i) = images.iter().position(|m| !m.is_valid(f)) {
        counterexample = Some(Counterexample::NotInAmbient { g: elems[i] });
    }

    let exhaustive = q <= EXHAUSTIVE_Q;
    let mut pairs_checked = 0;
    let mut homomorphism = true;
    let mut check_pair = |i: usize, j: usize| -> bool {
        pairs_checked += 1;
        let k = index(&heis_mul(&elems[i], &elems[j]));
        images[i].mul(f, &images[j]) == images[k]
    };
    let mut failed_pair = None;
    if exhaustive {
        'outer: for i in 0..n {
            for j in 0..n {
                if !check_pair(i, j) {
                    failed_pair = Some((i, j));
                    break 'outer;
                }
            }
        }
    } else {
        let mut s: u64 = 0x9E37_79B9_7F4A_7C15;
        for _ in 0..SAMPLED_PAIRS {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let i = ((s >> 33) as usize) % n;
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = ((s >> 33) as usize) % n;
            if !check_pair(i, j) {
                failed_pair = Some((i, j));
                break;
            }
        }
    }
    if let Some((i, j)) = failed_pair {
        homomorphism = false;
        counterexample.get_or_insert(Counterexample::NotHomomorphism { a: elems[i], b: elems[j] });
    }

    let mut bijective = true;
    let mut first_preimage: BTreeMap<&MatrixElem, usize> = BTreeMap::new();
    for (i, m) in images.iter().enumerate() {
        if let Some(&j) = first_preimage.get(m) {
            bijective = false;
            counterexample.get_or_insert(Counterexample::NotInjective { a: elems[j], b: elems[i] });
            break;
        }
        first_preimage.insert(m, i);
    }
    let u_set: BTreeSet<&MatrixElem> = u.iter().collect();
    if let Some(i) = images.iter().position(|m| !u_set.contains(m)) {
        bijective = false;
        counterexample.get_or_insert(Counterexample::ImageOutsideU { g: elems[i] });
    }

    // central elements (0, y, 0) against all of U (small q) or its generators
    let testers: Vec<MatrixElem> = if exhaustive { u.to_vec() } else { roots.generators() };
    let mut center_to_center = true;
    'center: for y in f.elements() {
        let g = HeisElem::new(f.zero(), y, f.zero());
        let c = &images[index(&g)];
        for t in &testers {
            if c.mul(f, t) != t.mul(f, c) {
                center_to_center = false;
                counterexample.get_or_insert(Counterexample::CenterNotCentral { g, u: t.clone() });
                break 'center;
            }
        }
    }

    let isomorphism = homomorphism && bijective && center_to_center && counterexample.is_none();
    Ok(EmbeddingCertificate {
        pair: roots.pair(),
        ambient: roots.pair().ambient(),
        q,
        generated_order: u.len(),
        exhaustive,
        pairs_checked,
        homomorphism,
        bijective,
        center_to_center,
        isomorphism,
        counterexample,
        map_table: elems.into_iter().zip(images).collect(),
    })
}

/// Closure of the root generators followed by [`heisenberg_iso_check`].
pub fn certify_embedding(pair: RootPair, field: &FieldDescriptor, caps: &Caps) -> Result<EmbeddingCertificate> {
    let roots = RootSubgroups::new(pair, field.clone())?;
    let u = generate_closure(field, &roots.generators(), caps.enumeration)?;
    heisenberg_iso_check(&roots, &u)
}

/// Split simple types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl LieType {
    pub fn new(family: char, rank: usize) -> Result<Self> {
        let t = match (family.to_ascii_uppercase(), rank) {
            ('A', r) if r >= 1 => LieType::A(r),
            ('B', r) if r >= 2 => LieType::B(r),
            ('C', r) if r >= 2 => LieType::C(r),
            ('D', r) if r >= 3 => LieType::D(r),
            ('E', 6) => LieType::E6,
            ('E', 7) => LieType::E7,
            ('E', 8) => LieType::E8,
            ('F', 4) => LieType::F4,
            ('G', 2) => LieType::G2,
            (family, rank) => return Err(Error::UnsupportedType { family, rank }),
        };
        Ok(t)
    }

    /// Parses labels such as `A2`, `d4`, `E8`.
    pub fn parse(label: &str) -> Result<Self> {
        let mut chars = label.trim().chars();
        let family = chars.next().ok_or(Error::InvalidParameter("empty Lie type"))?;
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::InvalidParameter("Lie type must look like A2 or E6"))?;
        Self::new(family, rank)
    }

    pub fn family(self) -> char {
        match self {
            LieType::A(_) => 'A',
            LieType::B(_) => 'B',
            LieType::C(_) => 'C',
            LieType::D(_) => 'D',
            LieType::E6 | LieType::E7 | LieType::E8 => 'E',
            LieType::F4 => 'F',
            LieType::G2 => 'G',
        }
    }

    pub fn rank(self) -> usize {
        match self {
            LieType::A(r) | LieType::B(r) | LieType::C(r) | LieType::D(r) => r,
            LieType::E6 => 6,
            LieType::E7 => 7,
            LieType::E8 => 8,
            LieType::F4 => 4,
            LieType::G2 => 2,
        }
    }

    pub fn exponents(self) -> Vec<u32> {
        match self {
            LieType::A(r) => (1..=r as u32).collect(),
            LieType::B(r) | LieType::C(r) => (1..=r as u32).map(|i| 2 * i - 1).collect(),
            LieType::D(r) => {
                let mut e: Vec<u32> = (1..r as u32).map(|i| 2 * i - 1).collect();
                e.push(r as u32 - 1);
                e.sort_unstable();
                e
            }
            LieType::E6 => vec![1, 4, 5, 7, 8, 11],
            LieType::E7 => vec![1, 5, 7, 9, 11, 13, 17],
            LieType::E8 => vec![1, 7, 11, 13, 17, 19, 23, 29],
            LieType::F4 => vec![1, 5, 7, 11],
            LieType::G2 => vec![1, 5],
        }
    }

    /// Number of positive roots, the sum of the exponents.
    pub fn positive_roots(self) -> u32 {
        self.exponents().iter().sum()
    }

    pub fn dimension(self) -> u32 {
        self.rank() as u32 + 2 * self.positive_roots()
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family(), self.rank())
    }
}

/// `q^N · Π (q^{m_i+1} - 1)`, the order of the simply connected split group.
pub fn chevalley_order(ty: LieType, q: u64) -> Result<BigUint> {
    if prime_power(q).is_none() {
        return Err(Error::InvalidParameter("q must be a prime power"));
    }
    let q = BigUint::from(q);
    let mut order = q.pow(ty.positive_roots());
    for m in ty.exponents() {
        order *= q.pow(m + 1) - BigUint::one();
    }
    Ok(order)
}
