//! Computed conjugacy classes against the closed-form class tables.

use std::collections::BTreeMap;

use ydscreen_core::grp2::group_order;
use ydscreen_core::{ClassType, Field, Group, GroupKind};

const QS: [u64; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];

/// (class size, number of classes) per row, written out from the tables.
fn closed_form(kind: GroupKind, q: u64) -> BTreeMap<ClassType, (u64, u64)> {
    use ClassType::*;
    let rows: Vec<(ClassType, u64, u64)> = match kind {
        GroupKind::Sl2 if q.is_multiple_of(2) => {
            vec![(C1, 1, 1), (C2, q * q - 1, 1), (C3, q * (q + 1), (q - 2) / 2), (C4, q * (q - 1), q / 2)]
        }
        GroupKind::Sl2 => vec![
            (C1, 1, 1),
            (C2, 1, 1),
            (C3, (q * q - 1) / 2, 1),
            (C4, (q * q - 1) / 2, 1),
            (C5, (q * q - 1) / 2, 1),
            (C6, (q * q - 1) / 2, 1),
            (C7, q * (q + 1), (q - 3) / 2),
            (C8, q * (q - 1), (q - 1) / 2),
        ],
        GroupKind::Gl2 => vec![
            (C1, 1, q - 1),
            (C2, q * q - 1, q - 1),
            (C3, q * (q + 1), (q - 1) * (q - 2) / 2),
            (C4, q * (q - 1), q * (q - 1) / 2),
        ],
    };
    rows.into_iter().filter(|r| r.2 > 0).map(|(r, s, n)| (r, (s, n))).collect()
}

fn check(kind: GroupKind, q: u64) {
    let g = Group::new(kind, Field::for_order(q, None).unwrap()).unwrap();
    let order = match kind {
        GroupKind::Sl2 => q * (q * q - 1),
        GroupKind::Gl2 => (q * q - 1) * (q * q - q),
    };
    assert_eq!(g.order() as u64, order);
    assert_eq!(group_order(kind, q), order);

    let classes = g.conjugacy_classes().unwrap();
    let expected = closed_form(kind, q);
    let count: u64 = expected.values().map(|v| v.1).sum();
    let target = match (kind, q % 2) {
        (GroupKind::Sl2, 0) => q + 1,
        (GroupKind::Sl2, _) => q + 4,
        (GroupKind::Gl2, _) => q * q - 1,
    };
    assert_eq!(count, target, "{kind} q={q}: closed-form count");
    assert_eq!(classes.len() as u64, target, "{kind} q={q}: class count");

    let mut per_row: BTreeMap<ClassType, u64> = BTreeMap::new();
    for c in &classes {
        let (size, _) = expected[&c.tag.row];
        assert_eq!(c.size() as u64, size, "{kind} q={q} {}", c.label());
        // orbit-stabilizer
        assert_eq!(c.size() * c.centralizer.len(), g.order(), "{kind} q={q} {}", c.label());
        assert_eq!(c.centralizer.len() as u64, order / size);
        for z in &c.centralizer {
            assert!(g.commute(z, &c.representative));
        }
        for (h, x) in c.elements.iter().zip(&c.coset_reps) {
            assert_eq!(g.conj(x, &c.representative), *h);
        }
        *per_row.entry(c.tag.row).or_insert(0) += 1;
    }
    let numbers: BTreeMap<ClassType, u64> = expected.iter().map(|(r, v)| (*r, v.1)).collect();
    assert_eq!(per_row, numbers, "{kind} q={q}: classes per row");

    // the labelled classes are exactly the conjugation orbits
    let mut ours: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let mut v: Vec<usize> = c.elements.iter().map(|m| g.index_of(m).unwrap()).collect();
            v.sort_unstable();
            v
        })
        .collect();
    ours.sort();
    let mut orbits = g.brute_force_partition();
    orbits.sort();
    assert_eq!(ours, orbits, "{kind} q={q}: partition");
}

#[test]
fn sl2_tables() {
    for q in QS {
        check(GroupKind::Sl2, q);
    }
}

#[test]
fn gl2_tables() {
    for q in QS {
        check(GroupKind::Gl2, q);
    }
}

#[test]
fn centralizers_are_abelian_off_the_centre() {
    for kind in [GroupKind::Sl2, GroupKind::Gl2] {
        for q in [4, 5, 7, 9] {
            let g = Group::new(kind, Field::for_order(q, None).unwrap()).unwrap();
            for c in g.conjugacy_classes().unwrap().iter().filter(|c| !c.is_central()) {
                let z = &c.centralizer;
                for a in z {
                    for b in z {
                        assert!(g.commute(a, b), "{kind} q={q} {}", c.label());
                    }
                }
            }
        }
    }
}
