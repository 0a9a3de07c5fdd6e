mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nw_core::equivalence::{apply_transform, canonical_form, classify, units, EquivalenceGroup, EquivalenceTransform};
use nw_core::format::{parse_catalog, serialize_catalog, Catalog, QuadrupleRecord};
use nw_core::{paf, search, spectrum, CirculantRow, CosTable, SearchConfig};

fn row_strategy(max_n: usize) -> impl Strategy<Value = Vec<i8>> {
    (0..=(max_n - 1) / 2)
        .prop_map(|h| 2 * h + 1)
        .prop_flat_map(|n| prop::collection::vec(prop::bool::ANY.prop_map(|b| if b { 1i8 } else { -1 }), n))
}

proptest! {
    #[test]
    fn paf_identities(x in row_strategy(40)) {
        let n = x.len() as i64;
        let row = CirculantRow::new(x.clone()).unwrap();
        let p = paf(&row);
        let v = p.values();
        prop_assert_eq!(v[0], n);
        prop_assert_eq!(v.iter().sum::<i64>(), row.row_sum() * row.row_sum());
        for k in 1..x.len() {
            prop_assert_eq!(v[k], v[x.len() - k]);
            // the products x_j x_{j+k} multiply to 1, so an even number are -1
            prop_assert_eq!((n - v[k]).rem_euclid(4), 0);
        }
        prop_assert_eq!(v.to_vec(), common::paf(&x));
    }

    #[test]
    fn paf_is_invariant_under_shift_and_negation(x in row_strategy(30), j in 0usize..30) {
        let row = CirculantRow::new(x).unwrap();
        let base = paf(&row);
        prop_assert_eq!(&paf(&row.shifted(j % row.order())), &base);
        prop_assert_eq!(&paf(&row.negated()), &base);
    }

    #[test]
    fn spectrum_matches_naive_dft(x in row_strategy(35)) {
        let row = CirculantRow::new(x.clone()).unwrap();
        let p = paf(&row);
        let fast = spectrum(&p);
        let table = CosTable::new(x.len()).spectrum(p.values());
        let naive = common::dft_power(&x);
        for ((f, t), want) in fast.values().iter().zip(table.values()).zip(&naive) {
            prop_assert!((f - want).abs() < 1e-6);
            prop_assert!((t - want).abs() < 1e-6);
            prop_assert!(*f > -1e-6);
        }
    }
}

fn random_transform(rng: &mut ChaCha8Rng, n: usize) -> EquivalenceTransform {
    let us = units(n);
    let unit = if us.is_empty() {
        1
    } else {
        us[rng.gen_range(0..us.len())]
    };
    let mut slots = [0, 1, 2, 3];
    for i in (1..4).rev() {
        slots.swap(i, rng.gen_range(0..=i));
    }
    EquivalenceTransform {
        unit,
        a_shift: rng.gen_range(0..n),
        slots,
    }
}

#[test]
fn canonical_form_is_constant_on_orbits() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in [3, 5, 7, 9, 11, 13] {
        let solutions = search(&SearchConfig::new(n)).unwrap().solutions;
        let mut applied = 0;
        while applied < 1000 {
            let q = &solutions[rng.gen_range(0..solutions.len())];
            let t = random_transform(&mut rng, n);
            // moving an asymmetric A into a symmetric slot is not an equivalence
            let Ok(image) = apply_transform(q, &t) else { continue };
            applied += 1;
            assert!(nw_core::verify_additivity(&image), "n = {n}, {t:?}");
            let mut before: Vec<i64> = q.row_sums().iter().map(|s| s.abs()).collect();
            let mut after: Vec<i64> = image.row_sums().iter().map(|s| s.abs()).collect();
            before.sort();
            after.sort();
            assert_eq!(before, after);
            assert_eq!(
                canonical_form(&image, EquivalenceGroup::Unordered),
                canonical_form(q, EquivalenceGroup::Unordered),
                "n = {n}, {t:?}"
            );
            if t.slots == [0, 1, 2, 3] {
                assert_eq!(
                    canonical_form(&image, EquivalenceGroup::SlotFixed),
                    canonical_form(q, EquivalenceGroup::SlotFixed)
                );
            }
        }
    }
}

#[test]
fn classify_is_idempotent_and_order_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [7, 9, 13] {
        let mut solutions = search(&SearchConfig::new(n)).unwrap().solutions;
        for group in [EquivalenceGroup::Unordered, EquivalenceGroup::SlotFixed] {
            let classes = classify(&solutions, group);
            assert_eq!(classify(&classes, group), classes);
            // the canonical representative is a fixed point of canonical_form
            for c in &classes {
                assert_eq!(canonical_form(c, group).to_quadruple(), *c);
                assert!(nw_core::verify_additivity(c));
            }
            for i in (1..solutions.len()).rev() {
                solutions.swap(i, rng.gen_range(0..=i));
            }
            assert_eq!(classify(&solutions, group), classes);
        }
    }
}

#[test]
fn catalog_round_trip_is_byte_exact() {
    for n in [1, 3, 7, 11] {
        let solutions = search(&SearchConfig::new(n)).unwrap().solutions;
        let catalog = Catalog {
            header: vec![("order".into(), n.to_string())],
            records: solutions
                .into_iter()
                .enumerate()
                .map(|(i, q)| QuadrupleRecord::new(q).with("index", i))
                .collect(),
        };
        let text = serialize_catalog(&catalog);
        let parsed = parse_catalog(&text).unwrap();
        assert_eq!(parsed, catalog);
        assert_eq!(serialize_catalog(&parsed), text);
    }
}
