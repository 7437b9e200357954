//! Field axioms and Galois structure, checked on random elements.

use proptest::prelude::*;
use ydscreen_core::Field;

fn fields() -> Vec<Field> {
    let mut out: Vec<Field> = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 121, 169]
        .into_iter()
        .map(|q| Field::for_order(q, None).unwrap())
        .collect();
    out.push(Field::with_modulus(5, 2, &[3, 0, 1]).unwrap());
    out.push(Field::with_modulus(2, 2, &[1, 1, 1]).unwrap());
    out.push(Field::for_order(9, None).unwrap().quadratic_extension().unwrap());
    out
}

fn pick(f: &Field, seed: u64) -> u32 {
    (seed % f.order() as u64) as u32
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn ring_axioms(k in 0usize..17, a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let fs = fields();
        let f = &fs[k % fs.len()];
        let (a, b, c) = (pick(f, a), pick(f, b), pick(f, c));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        prop_assert_eq!(f.mul(a, 1), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            let ord = f.order_of(a).unwrap();
            prop_assert_eq!((f.order() as u64 - 1) % ord, 0);
            prop_assert_eq!(f.pow(a, ord), 1);
        } else {
            prop_assert_eq!(f.inv(0), None);
        }
    }

    #[test]
    fn frobenius_is_additive_and_multiplicative(k in 0usize..17, a in any::<u64>(), b in any::<u64>()) {
        let fs = fields();
        let f = &fs[k % fs.len()];
        let p = f.characteristic() as u64;
        let (a, b) = (pick(f, a), pick(f, b));
        let fr = |x: u32| f.pow(x, p);
        prop_assert_eq!(fr(f.add(a, b)), f.add(fr(a), fr(b)));
        prop_assert_eq!(fr(f.mul(a, b)), f.mul(fr(a), fr(b)));
        prop_assert_eq!(f.pow(a, f.order() as u64), a);
    }

    #[test]
    fn trace_and_norm_are_galois_fixed(q in prop::sample::select(vec![2u64, 3, 4, 5, 7, 9, 11]), a in any::<u64>()) {
        let base = Field::for_order(q, None).unwrap();
        let e = base.quadratic_extension().unwrap();
        let x = e.elem(pick(&e, a));
        let t = x.trace().unwrap();
        let n = x.norm().unwrap();
        prop_assert!(t.raw() < base.order());
        prop_assert!(n.raw() < base.order());
        // t and n are fixed by x ↦ x^q inside E
        prop_assert_eq!(e.pow(t.raw(), q), t.raw());
        prop_assert_eq!(e.pow(n.raw(), q), n.raw());
        prop_assert_eq!(x.conjugate().unwrap().conjugate().unwrap(), x);
    }
}

#[test]
fn base_elements_keep_their_index() {
    for q in [3u64, 4, 5, 9] {
        let base = Field::for_order(q, None).unwrap();
        let e = base.quadratic_extension().unwrap();
        for a in 0..base.order() {
            for b in 0..base.order() {
                assert_eq!(e.add(a, b), base.add(a, b));
                assert_eq!(e.mul(a, b), base.mul(a, b));
            }
        }
    }
}

#[test]
fn multiplicative_group_is_cyclic() {
    for f in fields() {
        let g = f.primitive_element().raw();
        assert_eq!(f.order_of(g), Some(f.order() as u64 - 1));
    }
}
