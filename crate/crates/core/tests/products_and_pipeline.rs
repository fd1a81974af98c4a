use isospec_core::bounds::{bound_report, growth_table, BoundParams};
use isospec_core::cyclofields::{conductor_table, pipeline_degree};
use isospec_core::heisenberg::ProductGroup;
use isospec_core::sunada::{almost_conjugate, certify_family, find_conjugator, fingerprint, generator_battery};
use isospec_core::{Caps, ClassTable, FieldDescriptor, FiniteGroup, HeisElem, HeisenbergGroup};

fn fields(orders: &[u64], caps: &Caps) -> Vec<FieldDescriptor> {
    orders.iter().map(|&q| FieldDescriptor::of_order(q, caps).unwrap()).collect()
}

fn product(orders: &[u64], caps: &Caps) -> (ProductGroup, Vec<Vec<isospec_core::Subgroup<HeisElem>>>, Vec<ClassTable<HeisElem>>) {
    let fs = fields(orders, caps);
    let g = ProductGroup::new(&fs, caps).unwrap();
    let fams = g.factors().iter().map(|h| h.bgg_family(caps).unwrap()).collect();
    let tables = g.factors().iter().map(|h| h.class_table_closed_form()).collect();
    (g, fams, tables)
}

#[test]
fn product_orders() {
    let caps = Caps::default();
    assert_eq!(ProductGroup::new(&fields(&[2], &caps), &caps).unwrap().order(), 8);
    assert_eq!(ProductGroup::new(&fields(&[2, 3], &caps), &caps).unwrap().order(), 216);
    assert!(ProductGroup::new(&[], &caps).is_err());
}

#[test]
fn product_family_f4_f9() {
    let caps = Caps::default();
    let (g, fams, tables) = product(&[4, 9], &caps);
    let fam = g.product_family(&fams, &caps).unwrap();
    assert_eq!(fam.len(), 36);
    assert!(fam.iter().all(|h| h.order() == 36));
    let table = g.class_table_from_factors(&tables).unwrap();
    assert_eq!(table.len(), 19 * 89);
    let prints: Vec<_> = fam.iter().map(|h| fingerprint(&g, &table, h).unwrap()).collect();
    assert!(prints.windows(2).all(|w| almost_conjugate(&w[0], &w[1]).unwrap()));
    for h in &fam[1..] {
        let v = find_conjugator(&g, &fam[0], h, &caps).unwrap();
        assert!(!v.conjugate && v.search_exhausted);
    }
}

#[test]
fn product_class_table_matches_brute_force() {
    let caps = Caps::default();
    let (g, _, tables) = product(&[2, 3], &caps);
    assert_eq!(g.class_table_from_factors(&tables).unwrap(), ClassTable::brute_force(&g));
}

#[test]
fn product_sunada_certificate() {
    let caps = Caps::default();
    let (g, fams, tables) = product(&[4, 3], &caps);
    let fam = g.product_family(&fams, &caps).unwrap();
    assert_eq!(fam.len(), 4);
    let table = g.class_table_from_factors(&tables).unwrap();
    let mut central = g.identity();
    central[0] = g.factors()[0].elem(0, 1, 0).unwrap();
    let battery = generator_battery(&g, &[central]);
    let report = certify_family(&g, &table, &fam, &battery, true, &caps).unwrap();
    assert!(report.verified());
    assert_eq!(report.spectra[0].vertices, 1728 / 12);
}

#[test]
fn single_factor_product_agrees_with_group() {
    let caps = Caps::default();
    let (g, fams, _) = product(&[4], &caps);
    let h = HeisenbergGroup::new(FieldDescriptor::new(2, 2).unwrap(), &caps).unwrap();
    assert_eq!(g.order(), h.order());
    for i in 0..h.order() {
        assert_eq!(g.element(i), vec![h.element(i)]);
    }
    assert_eq!(g.product_family(&fams, &caps).unwrap().len(), 4);
}

#[test]
fn conductors_feed_bounds() {
    let rows = conductor_table(&[5, 7, 11], 500).unwrap();
    let params = BoundParams::default_a2();
    let mut last = 0.0;
    for r in rows.iter().filter(|r| r.field.conductor > 150) {
        let deg = pipeline_degree(r.field.degree, true);
        assert_eq!(deg.degree, r.field.conductor - 1);
        let report = bound_report(&params, deg.degree).unwrap();
        assert!(report.log_nonconjugate_count > 0.0);
        assert!(report.log_nonconjugate_count >= last);
        last = report.log_nonconjugate_count;
    }
    assert!(last > 0.0);
    let table = growth_table(&params, 150, 400).unwrap();
    assert_eq!(table.reports.len(), 251);
    assert!(table.a.unwrap() > 0.0);
}
