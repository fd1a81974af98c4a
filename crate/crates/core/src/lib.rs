//! Exact finite-group and number-theoretic machinery for building and
//! certifying families of isospectral quotients.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure and
//! deterministic: no IO, no randomness, no global state.
//!
//! - [`finfield`]: arithmetic in `F_{p^n}` and linearized polynomials.
//! - [`heisenberg`]: the Heisenberg group `H(F_q)`, its class table, the
//!   `H_T` subgroup family and finite direct products.
//! - [`sunada`]: fingerprints, exhaustive conjugator search, subgroup
//!   enumeration and Schreier coset graphs.
//! - [`charpoly`]: exact integer characteristic polynomials.
//! - [`lietype`]: root subgroups of `SL_3` and `Sp_4`, Heisenberg
//!   embeddings and Chevalley group orders.
//! - [`cyclofields`]: primitive roots, real cyclotomic fields and inert
//!   conductors.
//! - [`bounds`]: the covolume / lattice-count constants in log space.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod bounds;
pub mod charpoly;
pub mod cyclofields;
mod error;
pub mod finfield;
pub mod group;
pub mod heisenberg;
pub mod lietype;
pub mod sunada;

pub use error::{Error, Result};
pub use finfield::{AdditiveMap, FieldDescriptor, FqElem};
pub use group::{ClassTable, FiniteGroup, Subgroup};
pub use heisenberg::{HeisElem, HeisenbergGroup, ProductGroup};

/// Size limits for the exhaustive operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest field order `q` accepted by [`FieldDescriptor::new`].
    pub field_order: u64,
    /// Largest number of items any exhaustive enumeration may produce
    /// (ambient group orders, additive-map lists, closures).
    pub enumeration: u64,
    /// Largest ambient order for the full subgroup-enumeration oracle.
    pub subgroup_oracle: u64,
    /// Largest vertex count for exact characteristic polynomials.
    pub charpoly_vertices: usize,
    /// Largest `pairs × |G|` for the pairwise conjugator searches.
    pub pair_work: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            field_order: 1 << 16,
            enumeration: 1 << 20,
            subgroup_oracle: 1024,
            charpoly_vertices: 2048,
            pair_work: 1 << 26,
        }
    }
}

impl Caps {
    pub(crate) fn check(&self, what: &'static str, size: u128, cap: u64) -> Result<()> {
        if size > cap as u128 {
            Err(Error::CapExceeded { what, size, cap })
        } else {
            Ok(())
        }
    }
}
