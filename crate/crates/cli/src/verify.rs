use serde::Serialize;
use serde_json::{json, Value};

use isospec_core::arith::prime_power;
use isospec_core::group::{ClassTable, FiniteGroup, Subgroup};
use isospec_core::heisenberg::{ProdElem, ProductGroup};
use isospec_core::sunada::{certify_family, generator_battery, oracle_cross_check, FamilyReport, GeneratorSet};
use isospec_core::{AdditiveMap, Caps, FieldDescriptor, HeisElem, HeisenbergGroup};

use crate::args::{SpectraMode, VerifyArgs};
use crate::error::{CliError, CliResult};

const AUTO_SPECTRA_VERTICES: usize = 256;

#[derive(Debug, Serialize)]
pub struct FieldInfo {
    pub q: u64,
    pub p: u32,
    pub n: u32,
    /// Coefficients low degree first.
    pub modulus: Vec<u32>,
}

impl FieldInfo {
    pub fn of(f: &FieldDescriptor) -> Self {
        FieldInfo {
            q: f.order() as u64,
            p: f.characteristic(),
            n: f.degree(),
            modulus: f.modulus().to_vec(),
        }
    }
}

#[derive(Debug, Serialize)]
struct Member {
    index: usize,
    /// Per factor, the coefficients `a_0..a_{n-1}` of `T` as element codes;
    /// `null` for the negative control.
    parameters: Option<Vec<Vec<u32>>>,
    order: usize,
    fingerprint: Vec<usize>,
}

#[derive(Debug, Serialize)]
struct Pair {
    i: usize,
    j: usize,
    almost_conjugate: bool,
    conjugate: bool,
    witness: Option<Value>,
    elements_scanned: usize,
    order_mismatch: bool,
}

#[derive(Debug, Serialize)]
struct Spectrum {
    generator_set: String,
    multiset: Vec<Value>,
    vertices: usize,
    connected: bool,
    all_equal: bool,
    distinct_polynomials: usize,
    /// One characteristic polynomial per member, low degree first.
    char_polys: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
struct Spectra {
    status: &'static str,
    sets: Vec<Spectrum>,
}

#[derive(Debug, Serialize)]
struct Oracle {
    subgroups_of_order: usize,
    family_contained: bool,
    discrepancies: usize,
}

#[derive(Debug, Serialize)]
struct Verdict {
    count_matches: bool,
    almost_conjugate: bool,
    nonconjugate: bool,
    spectra_equal: Option<bool>,
    oracle_agrees: Option<bool>,
    verified: bool,
}

#[derive(Debug, Serialize)]
pub struct Certificate {
    factors: Vec<FieldInfo>,
    ambient_order: String,
    class_count: usize,
    expected_family_size: String,
    family_size: usize,
    subgroup_order: usize,
    members: Vec<Member>,
    pairs: Vec<Pair>,
    spectra: Spectra,
    oracle: Option<Oracle>,
    verdict: Verdict,
    counterexample: Option<Value>,
}

impl Certificate {
    pub fn verified(&self) -> bool {
        self.verdict.verified
    }
}

fn heis_json(e: &HeisElem) -> Value {
    json!([e.x.index(), e.y.index(), e.z.index()])
}

fn prod_json(e: &ProdElem) -> Value {
    Value::Array(e.iter().map(heis_json).collect())
}

/// Parameters of product member `k`: mixed radix, first factor most significant.
fn member_parameters(maps: &[Vec<AdditiveMap>], mut k: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new(); maps.len()];
    for (slot, m) in out.iter_mut().zip(maps).rev() {
        let t = &m[k % m.len()];
        *slot = t.coeffs().iter().map(|c| c.index()).collect();
        k /= m.len();
    }
    out
}

pub fn run(args: &VerifyArgs, caps: &Caps) -> CliResult<Certificate> {
    let mut fields = Vec::with_capacity(args.q.len());
    for &q in &args.q {
        if prime_power(q).is_none() {
            return Err(CliError::Usage(format!("{q} is not a prime power")));
        }
        fields.push(FieldDescriptor::of_order(q, caps)?);
    }
    if fields.is_empty() {
        return Err(CliError::Usage("--q needs at least one field order".into()));
    }
    precheck(&fields, args.negative_control, caps)?;
    if fields.len() == 1 {
        let g = HeisenbergGroup::new(fields[0].clone(), caps)?;
        let maps = vec![g.bgg_maps(caps)?];
        let family = g.bgg_family(caps)?;
        let table = g.class_table_closed_form();
        let control = args.negative_control.then(|| g.center());
        let central = [g.elem(0, 1, 0)?];
        certify(&g, &table, family, control, &maps, &central, &fields, args, caps, &heis_json)
    } else {
        let g = ProductGroup::new(&fields, caps)?;
        let mut maps = Vec::new();
        let mut fams = Vec::new();
        let mut tables = Vec::new();
        for h in g.factors() {
            maps.push(h.bgg_maps(caps)?);
            fams.push(h.bgg_family(caps)?);
            tables.push(h.class_table_closed_form());
        }
        let family = g.product_family(&fams, caps)?;
        let table = g.class_table_from_factors(&tables)?;
        let control = if args.negative_control {
            let centers: Vec<Vec<Subgroup<HeisElem>>> = g.factors().iter().map(|h| vec![h.center()]).collect();
            g.product_family(&centers, caps)?.pop()
        } else {
            None
        };
        let mut central = g.identity();
        central[0] = g.factors()[0].elem(0, 1, 0)?;
        certify(&g, &table, family, control, &maps, &[central], &fields, args, caps, &prod_json)
    }
}

fn expected_family_size(fields: &[FieldDescriptor]) -> u128 {
    fields
        .iter()
        .map(|f| (f.characteristic() as u128).pow(f.degree() * (f.degree() - 1)))
        .product()
}

/// Rejects families whose pairwise search would blow `pair_work` before any
/// of them is built.
fn precheck(fields: &[FieldDescriptor], control: bool, caps: &Caps) -> CliResult<()> {
    let n = expected_family_size(fields) + control as u128;
    let order: u128 = fields.iter().map(|f| (f.order() as u128).pow(3)).product();
    let work = (n * n.saturating_sub(1) / 2).saturating_mul(order);
    if work > caps.pair_work as u128 {
        return Err(CliError::Cap(format!(
            "pairwise conjugator search: size {work} exceeds cap {}",
            caps.pair_work
        )));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn certify<G: FiniteGroup>(
    g: &G,
    table: &ClassTable<G::Elem>,
    mut family: Vec<Subgroup<G::Elem>>,
    control: Option<Subgroup<G::Elem>>,
    maps: &[Vec<AdditiveMap>],
    central: &[G::Elem],
    fields: &[FieldDescriptor],
    args: &VerifyArgs,
    caps: &Caps,
    elem_json: &dyn Fn(&G::Elem) -> Value,
) -> CliResult<Certificate> {
    let expected = expected_family_size(fields);
    let family_size = family.len();
    let subgroup_order = family.first().map_or(0, |h| h.order());
    let count_matches = family_size as u128 == expected;
    let has_control = control.is_some();
    family.extend(control);

    let vertices = g.order().checked_div(subgroup_order).unwrap_or(0);
    let with_spectra = match args.spectra {
        SpectraMode::On => true,
        SpectraMode::Off => false,
        SpectraMode::Auto => vertices <= AUTO_SPECTRA_VERTICES,
    };
    let battery: Vec<GeneratorSet<G::Elem>> = generator_battery(g, central);
    let report = certify_family(g, table, &family, &battery, with_spectra, caps)?;

    let oracle = if args.exhaustive_oracle {
        let o = oracle_cross_check(g, &family, &report, caps)?;
        Some(Oracle {
            subgroups_of_order: o.subgroups_of_order,
            family_contained: o.family_contained,
            discrepancies: o.discrepancies,
        })
    } else {
        None
    };

    let members = family
        .iter()
        .enumerate()
        .map(|(i, h)| Member {
            index: i,
            parameters: (i < family_size).then(|| member_parameters(maps, i)),
            order: h.order(),
            fingerprint: report.fingerprints[i].counts.clone(),
        })
        .collect();
    let pairs = report
        .pairs
        .iter()
        .map(|p| Pair {
            i: p.i,
            j: p.j,
            almost_conjugate: p.almost_conjugate,
            conjugate: p.conjugacy.conjugate,
            witness: p.conjugacy.witness.as_ref().map(elem_json),
            elements_scanned: p.conjugacy.elements_scanned,
            order_mismatch: p.conjugacy.order_mismatch,
        })
        .collect();
    let spectra = spectra_section(&report, elem_json, with_spectra);
    let counterexample = find_counterexample(&report, oracle.as_ref());

    let spectra_equal = with_spectra.then(|| report.spectra_equal());
    let oracle_agrees = oracle.as_ref().map(|o| o.family_contained && o.discrepancies == 0);
    let verdict = Verdict {
        count_matches,
        almost_conjugate: report.all_almost_conjugate(),
        nonconjugate: report.all_nonconjugate(),
        spectra_equal,
        oracle_agrees,
        verified: count_matches
            && report.all_almost_conjugate()
            && report.all_nonconjugate()
            && spectra_equal != Some(false)
            && oracle_agrees != Some(false)
            && !has_control,
    };
    Ok(Certificate {
        factors: fields.iter().map(FieldInfo::of).collect(),
        ambient_order: g.order().to_string(),
        class_count: report.class_count,
        expected_family_size: expected.to_string(),
        family_size,
        subgroup_order,
        members,
        pairs,
        spectra,
        oracle,
        verdict,
        counterexample,
    })
}

fn spectra_section<E>(report: &FamilyReport<E>, elem_json: &dyn Fn(&E) -> Value, computed: bool) -> Spectra {
    if !computed {
        return Spectra {
            status: "skipped",
            sets: Vec::new(),
        };
    }
    let sets = report
        .spectra
        .iter()
        .zip(&report.generator_sets)
        .map(|(s, set)| {
            let mut distinct: Vec<_> = s.polys.iter().collect();
            distinct.sort();
            distinct.dedup();
            Spectrum {
                generator_set: s.generator_set.clone(),
                multiset: set.elements.iter().map(elem_json).collect(),
                vertices: s.vertices,
                connected: s.connected,
                all_equal: s.all_equal,
                distinct_polynomials: distinct.len(),
                char_polys: s.polys.iter().map(|p| p.iter().map(|c| c.to_string()).collect()).collect(),
            }
        })
        .collect();
    Spectra { status: "checked", sets }
}

fn find_counterexample<E>(report: &FamilyReport<E>, oracle: Option<&Oracle>) -> Option<Value> {
    if let Some(p) = report.pairs.iter().find(|p| !p.almost_conjugate) {
        return Some(json!({
            "kind": "not_almost_conjugate",
            "i": p.i,
            "j": p.j,
            "fingerprint_i": report.fingerprints[p.i].counts,
            "fingerprint_j": report.fingerprints[p.j].counts,
        }));
    }
    if let Some(p) = report.pairs.iter().find(|p| p.conjugacy.conjugate) {
        return Some(json!({ "kind": "conjugate", "i": p.i, "j": p.j }));
    }
    for s in &report.spectra {
        if let Some(k) = s.polys.iter().position(|p| *p != s.polys[0]) {
            return Some(json!({
                "kind": "spectra_differ",
                "generator_set": s.generator_set,
                "i": 0,
                "j": k,
            }));
        }
    }
    if let Some(o) = oracle.filter(|o| o.discrepancies > 0 || !o.family_contained) {
        return Some(json!({ "kind": "oracle_disagrees", "discrepancies": o.discrepancies }));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u64) -> FieldDescriptor {
        FieldDescriptor::of_order(q, &Caps::default()).unwrap()
    }

    #[test]
    fn family_size_formula() {
        assert_eq!(expected_family_size(&[field(9)]), 9);
        assert_eq!(expected_family_size(&[field(4), field(9)]), 36);
        assert_eq!(expected_family_size(&[field(8)]), 64);
        assert_eq!(expected_family_size(&[field(7)]), 1);
    }

    #[test]
    fn precheck_work() {
        let caps = Caps::default();
        assert!(precheck(&[field(9)], false, &caps).is_ok());
        assert!(matches!(precheck(&[field(16)], false, &caps), Err(CliError::Cap(_))));
        let tight = Caps { pair_work: 36 * 729 - 1, ..caps };
        assert!(precheck(&[field(9)], false, &tight).is_err());
    }

    #[test]
    fn product_parameters_are_mixed_radix() {
        let caps = Caps::default();
        let maps: Vec<Vec<AdditiveMap>> = [4, 9]
            .iter()
            .map(|&q| HeisenbergGroup::new(field(q), &caps).unwrap().bgg_maps(&caps).unwrap())
            .collect();
        let p = member_parameters(&maps, 10);
        let expect0: Vec<u32> = maps[0][1].coeffs().iter().map(|c| c.index()).collect();
        let expect1: Vec<u32> = maps[1][1].coeffs().iter().map(|c| c.index()).collect();
        assert_eq!(p, vec![expect0, expect1]);
    }
}
