//! Properties of the screening pipeline that hold for every class and character.

use ydscreen_core::braid::{braiding_matrix, commuting_cliques, dynkin};
use ydscreen_core::classify::{screen_class, screen_classes, ClassContext};
use ydscreen_core::criteria::{rank2_symmetric, recheck};
use ydscreen_core::{screen_group, Field, Group, GroupKind, Report, Verdict};

fn group(kind: GroupKind, q: u64) -> Group {
    Group::new(kind, Field::for_order(q, None).unwrap()).unwrap()
}

#[test]
fn every_witness_reproduces_its_verdict() {
    for (kind, q) in [(GroupKind::Sl2, 5), (GroupKind::Sl2, 8), (GroupKind::Gl2, 4), (GroupKind::Gl2, 5)] {
        let g = group(kind, q);
        for s in screen_classes(&g).unwrap() {
            for v in &s.verdicts {
                if let Verdict::RuledOut { verdict } = &v.verdict {
                    let w = verdict.witness.as_ref().expect("ruled-out verdicts carry a witness");
                    assert_eq!(&recheck(w).unwrap(), verdict, "{kind} q={q} {}", s.class.label());
                }
            }
        }
    }
}

/// A pair of clique vertices ruled out on its own rules out the whole module.
#[test]
fn sub_braidings_are_monotone() {
    for (kind, q) in [(GroupKind::Sl2, 7), (GroupKind::Gl2, 5)] {
        let g = group(kind, q);
        for c in g.conjugacy_classes().unwrap().iter().filter(|c| !c.is_central()) {
            let ctx = ClassContext::new(&g, c).unwrap();
            let cliques = commuting_cliques(&g, c).unwrap();
            for chi in ctx.zg.characters() {
                let full = ydscreen_core::classify::screen_pair(&ctx, &chi).unwrap();
                for t in &cliques {
                    let d = dynkin(&braiding_matrix(&g, c, &ctx.zg, &chi, t).unwrap());
                    for i in 0..d.vertices.len() {
                        for j in i + 1..d.vertices.len() {
                            if rank2_symmetric(d.vertices[i], d.edge(i, j)).is_ruled_out() {
                                assert!(
                                    matches!(full.verdict, Verdict::RuledOut { .. }),
                                    "{kind} q={q} {} χ{:?}",
                                    c.label(),
                                    chi.exponents
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn class_screens_cover_every_character() {
    let g = group(GroupKind::Gl2, 5);
    for c in g.conjugacy_classes().unwrap() {
        let s = screen_class(&g, &c).unwrap();
        let expected = if c.is_central() { 24 } else { c.centralizer.len() };
        assert_eq!(s.verdicts.len(), expected, "{}", c.label());
    }
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let g = group(GroupKind::Sl2, 7);
    let a = serde_json::to_string(&screen_group(&g).unwrap()).unwrap();
    let b = serde_json::to_string(&screen_group(&g).unwrap()).unwrap();
    assert_eq!(a, b);
    let back: Report = serde_json::from_str(&a).unwrap();
    assert_eq!(serde_json::to_string(&back).unwrap(), a);
    assert_eq!(back.field.modulus, g.field().spec().modulus);
}

#[test]
fn alternate_modulus_for_f25_gives_the_same_survivor_counts() {
    let default = screen_group(&group(GroupKind::Sl2, 25)).unwrap();
    let f = Field::with_modulus(5, 2, &[3, 0, 1]).unwrap();
    let other = screen_group(&Group::new(GroupKind::Sl2, f).unwrap()).unwrap();
    assert!(default.all_checks_pass() && other.all_checks_pass());
    let counts = |r: &Report| {
        let mut v: Vec<(String, usize)> = r.classes.iter().map(|c| (c.tag.clone(), c.survivors.len())).collect();
        v.sort();
        v
    };
    assert_eq!(counts(&default), counts(&other));
}
