use serde::Serialize;
use serde_json::{json, Value};

use isospec_core::bounds::index_bound;
use isospec_core::lietype::{certify_embedding, chevalley_order, Counterexample, LieType, MatrixElem, RootPair};
use isospec_core::{Caps, FieldDescriptor, HeisElem};

use crate::args::{EmbedArgs, OrderArgs};
use crate::error::{CliError, CliResult};
use crate::verify::FieldInfo;

#[derive(Debug, Serialize)]
pub struct MapEntry {
    pub heisenberg: [u32; 3],
    /// Row-major entries as element codes.
    pub matrix: Vec<Vec<u32>>,
}

#[derive(Debug, Serialize)]
pub struct EmbedReport {
    pub lie_type: String,
    pub ambient: &'static str,
    pub field: FieldInfo,
    pub generated_order: usize,
    pub expected_order: String,
    pub exhaustive: bool,
    pub pairs_checked: usize,
    pub homomorphism: bool,
    pub bijective: bool,
    pub center_to_center: bool,
    pub isomorphism: bool,
    pub counterexample: Option<Value>,
    pub map_table: Option<Vec<MapEntry>>,
}

#[derive(Debug, Serialize)]
pub struct OrderReport {
    pub lie_type: String,
    pub q: u64,
    pub rank: usize,
    pub dimension: u32,
    pub positive_roots: u32,
    pub exponents: Vec<u32>,
    pub order: String,
    pub index_bound: Option<IndexBound>,
}

#[derive(Debug, Serialize)]
pub struct IndexBound {
    pub inertia_degrees: Vec<u32>,
    pub value: String,
}

fn heis(e: &HeisElem) -> [u32; 3] {
    [e.x.index(), e.y.index(), e.z.index()]
}

fn rows(m: &MatrixElem) -> Vec<Vec<u32>> {
    let n = m.dim;
    (0..n).map(|i| (0..n).map(|j| m.get(i, j).index()).collect()).collect()
}

fn counterexample_json(c: &Counterexample) -> Value {
    match c {
        Counterexample::NotHomomorphism { a, b } => {
            json!({ "kind": "not_homomorphism", "a": heis(a), "b": heis(b) })
        }
        Counterexample::NotInjective { a, b } => json!({ "kind": "not_injective", "a": heis(a), "b": heis(b) }),
        Counterexample::ImageOutsideU { g } => json!({ "kind": "image_outside_u", "g": heis(g) }),
        Counterexample::CenterNotCentral { g, u } => {
            json!({ "kind": "center_not_central", "g": heis(g), "u": rows(u) })
        }
        Counterexample::NotInAmbient { g } => json!({ "kind": "not_in_ambient", "g": heis(g) }),
    }
}

pub fn run_embed(args: &EmbedArgs, caps: &Caps) -> CliResult<EmbedReport> {
    let pair = match args.lie_type.trim().to_ascii_uppercase().as_str() {
        "A2" => RootPair::A2,
        "B2" => RootPair::B2,
        other => return Err(CliError::Usage(format!("embed supports A2 and B2, got {other}"))),
    };
    let field = FieldDescriptor::of_order(args.q, caps)?;
    let cert = certify_embedding(pair, &field, caps)?;
    let map_table = (!args.no_map_table).then(|| {
        cert.map_table
            .iter()
            .map(|(h, m)| MapEntry {
                heisenberg: heis(h),
                matrix: rows(m),
            })
            .collect()
    });
    Ok(EmbedReport {
        lie_type: pair.to_string(),
        ambient: match pair {
            RootPair::A2 => "SL3",
            RootPair::B2 => "Sp4",
        },
        field: FieldInfo::of(&field),
        generated_order: cert.generated_order,
        expected_order: (args.q as u128).pow(3).to_string(),
        exhaustive: cert.exhaustive,
        pairs_checked: cert.pairs_checked,
        homomorphism: cert.homomorphism,
        bijective: cert.bijective,
        center_to_center: cert.center_to_center,
        isomorphism: cert.isomorphism,
        counterexample: cert.counterexample.as_ref().map(counterexample_json),
        map_table,
    })
}

pub fn run_order(args: &OrderArgs) -> CliResult<OrderReport> {
    let ty = LieType::parse(&args.lie_type)?;
    let order = chevalley_order(ty, args.q)?;
    let index_bound = match &args.inertia_degrees {
        None => None,
        Some(degrees) => Some(IndexBound {
            inertia_degrees: degrees.clone(),
            value: index_bound(ty, args.q, degrees)?.to_string(),
        }),
    };
    Ok(OrderReport {
        lie_type: ty.to_string(),
        q: args.q,
        rank: ty.rank(),
        dimension: ty.dimension(),
        positive_roots: ty.positive_roots(),
        exponents: ty.exponents(),
        order: order.to_string(),
        index_bound,
    })
}
