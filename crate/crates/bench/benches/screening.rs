//! Timings for class enumeration, rack isomorphism and full screening.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use ydscreen_core::racks::{named_rack, rack_from_class, rack_iso, NamedRack};
use ydscreen_core::{screen_group, ClassType, Field, Group, GroupKind};

fn group(kind: GroupKind, q: u64) -> Group {
    Group::new(kind, Field::for_order(q, None).unwrap()).unwrap()
}

fn classes(c: &mut Criterion) {
    let g = group(GroupKind::Gl2, 7);
    c.bench_function("conjugacy_classes gl2 q=7", |b| b.iter(|| black_box(g.conjugacy_classes().unwrap())));
}

fn screening(c: &mut Criterion) {
    let mut grp = c.benchmark_group("screen_group");
    grp.sample_size(20);
    for (kind, q) in [(GroupKind::Sl2, 7), (GroupKind::Sl2, 13), (GroupKind::Gl2, 5)] {
        let g = group(kind, q);
        grp.bench_function(format!("{kind} q={q}"), |b| b.iter(|| black_box(screen_group(&g).unwrap())));
    }
    grp.finish();
}

fn racks(c: &mut Criterion) {
    let g = group(GroupKind::Sl2, 5);
    let class = g.conjugacy_classes().unwrap().into_iter().find(|c| c.tag.row == ClassType::C8).unwrap();
    let r = rack_from_class(&g, &class);
    let icosa = named_rack(NamedRack::IcosahedronFaces);
    c.bench_function("rack_iso C8 q=5", |b| b.iter(|| black_box(rack_iso(&r, &icosa))));
}

criterion_group!(benches, classes, screening, racks);
criterion_main!(benches);
