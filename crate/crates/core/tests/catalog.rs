use superlab_core::catalog::{conformance_entries, derived_checks, jord_bn, malc_bar_an, DerivedMode};

#[test]
fn every_entry_conforms() {
    let mut bad = Vec::new();
    for e in conformance_entries() {
        let c = e.conformance();
        if !c.is_ok() {
            bad.push(format!("{}: {:?}", e.name, c));
        }
    }
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn derived_identities_hold() {
    let mut entries = vec![
        superlab_core::catalog::alt_a(),
        superlab_core::catalog::alt_b(),
        superlab_core::catalog::alt_bp(),
        superlab_core::catalog::jord_a(),
        superlab_core::catalog::malc_a(),
    ];
    entries.extend((1..=3).map(jord_bn));
    entries.extend((1..=4).map(superlab_core::catalog::malc_an));
    entries.extend((1..=3).map(superlab_core::catalog::malc_super_an));
    entries.extend((1..=3).map(malc_bar_an));
    let mut bad = Vec::new();
    let mut literal_runs = 0;
    for check in derived_checks() {
        let mut ran = 0;
        for e in entries.iter().filter(|e| check.applies_to(e)) {
            ran += 1;
            if let Some(w) = check.run(e).witness() {
                bad.push(format!("{} on {}: {:?}", check.name, e.name, w));
            }
        }
        assert!(ran > 0, "{} ran on no entry", check.name);
        if matches!(check.mode, DerivedMode::Literal { .. }) {
            literal_runs += ran;
        }
    }
    assert!(literal_runs >= 9);
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn identities_separate_varieties() {
    use superlab_core::algebra::is_superidentity;
    use superlab_core::poly::LibraryIdentity;
    let fails = |e: &superlab_core::catalog::CatalogEntry, lib: LibraryIdentity| {
        lib.identities().iter().any(|f| !is_superidentity(&e.algebra, f).holds())
    };
    let jord = superlab_core::catalog::jord_a();
    let malc = superlab_core::catalog::malc_a();
    assert!(fails(&jord, LibraryIdentity::Malcev));
    assert!(fails(&malc, LibraryIdentity::Jordan));
    assert!(fails(&jord_bn(2), LibraryIdentity::Alternative));
    assert!(fails(&malc_bar_an(2), LibraryIdentity::Jordan));
    let alt = superlab_core::catalog::alt_b();
    assert!(fails(&alt, LibraryIdentity::Nil3));
    // the literal odd relations only apply to entries with odd generators
    let sup = superlab_core::catalog::malc_super_an(2);
    let lit: Vec<_> = derived_checks()
        .into_iter()
        .filter(|c| matches!(c.mode, DerivedMode::Literal { .. }))
        .collect();
    assert!(lit.iter().all(|c| !c.applies_to(&sup)));
}
