//! Finite abelian groups, their characters, and exact roots of unity.
//!
//! Character values are elements of `Q/Z`: the root of unity `exp(2πi·a/m)`
//! is stored as the reduced fraction `a/m` with `0 ≤ a < m`.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest group handled by [`abelian_structure`].
pub const MAX_ABELIAN_ORDER: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("the elements do not form an abelian group: {0}")]
    NonAbelian(String),
    #[error("the element set is not closed under multiplication")]
    NotClosed,
    #[error("no identity element among the inputs")]
    NoIdentity,
    #[error("element is not in the group")]
    NotInGroup,
    #[error("group of order {0} exceeds the bound {MAX_ABELIAN_ORDER}")]
    BoundExceeded(usize),
    #[error("character has {got} exponents, the group has {expected} factors")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("malformed root of unity {0:?}")]
    Parse(String),
}

/// A root of unity `exp(2πi·num/den)`, kept as a reduced fraction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    /// `exp(2πi·a/m)`; `a` is reduced modulo `m`.
    pub fn new(a: i64, m: u64) -> Self {
        assert!(m > 0, "root of unity with zero denominator");
        let a = a.rem_euclid(m as i64) as u64;
        let g = a.gcd(&m);
        if a == 0 {
            RootOfUnity { num: 0, den: 1 }
        } else {
            RootOfUnity { num: a / g, den: m / g }
        }
    }

    pub const fn one() -> Self {
        RootOfUnity { num: 0, den: 1 }
    }

    pub const fn minus_one() -> Self {
        RootOfUnity { num: 1, den: 2 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// Multiplicative order; equals the reduced denominator.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.den == 1
    }

    pub fn is_minus_one(&self) -> bool {
        self.den == 2
    }

    /// Membership in the primitive `n`-th roots of unity.
    pub fn in_r(&self, n: u64) -> bool {
        self.den == n
    }

    pub fn pow(&self, k: i64) -> Self {
        let m = self.den as i128;
        let a = (self.num as i128 * k as i128).rem_euclid(m);
        RootOfUnity::new(a as i64, self.den)
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    pub fn neg(&self) -> Self {
        *self * RootOfUnity::minus_one()
    }

    /// All roots of unity of order dividing `m`, in increasing fraction order.
    pub fn all_of_order_dividing(m: u64) -> Vec<Self> {
        let mut v: Vec<Self> = (0..m).map(|a| RootOfUnity::new(a as i64, m)).collect();
        v.sort_by(|x, y| (x.num as u128 * y.den as u128).cmp(&(y.num as u128 * x.den as u128)));
        v
    }
}

impl std::ops::Mul for RootOfUnity {
    type Output = RootOfUnity;
    fn mul(self, rhs: Self) -> Self {
        let l = self.den.lcm(&rhs.den);
        let a = self.num * (l / self.den) + rhs.num * (l / rhs.den);
        RootOfUnity::new((a % l) as i64, l)
    }
}

impl std::ops::Div for RootOfUnity {
    type Output = RootOfUnity;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv()
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e({}/{})", self.num, self.den)
    }
}

impl FromStr for RootOfUnity {
    type Err = CharError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, m) = s.split_once('/').ok_or_else(|| CharError::Parse(s.into()))?;
        let a: i64 = a.trim().parse().map_err(|_| CharError::Parse(s.into()))?;
        let m: u64 = m.trim().parse().map_err(|_| CharError::Parse(s.into()))?;
        if m == 0 {
            return Err(CharError::Parse(s.into()));
        }
        Ok(RootOfUnity::new(a, m))
    }
}

impl Serialize for RootOfUnity {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RootOfUnity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite abelian group decomposed as `Z_{d_1} ⊕ … ⊕ Z_{d_m}` with
/// `d_1 | d_2 | … | d_m`.
#[derive(Debug, Clone)]
pub struct AbelianStruct<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    generators: Vec<usize>,
    factors: Vec<u64>,
    coords: Vec<Vec<u64>>,
}

/// Decomposes the abelian group formed by `elements` under `mul` into cyclic
/// factors. Each new generator is an element of maximal order modulo the
/// subgroup found so far, corrected so that its cyclic group meets that
/// subgroup trivially.
pub fn abelian_structure<T, F>(elements: Vec<T>, mul: F) -> Result<AbelianStruct<T>, CharError>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let n = elements.len();
    if n > MAX_ABELIAN_ORDER {
        return Err(CharError::BoundExceeded(n));
    }
    let index: HashMap<T, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..n {
            let p = mul(&elements[i], &elements[j]);
            table[i * n + j] = *index.get(&p).ok_or(CharError::NotClosed)?;
        }
    }
    for i in 0..n {
        for j in 0..i {
            if table[i * n + j] != table[j * n + i] {
                return Err(CharError::NonAbelian(format!("elements {i} and {j} do not commute")));
            }
        }
    }
    let id = (0..n).find(|&e| (0..n).all(|x| table[e * n + x] == x)).ok_or(CharError::NoIdentity)?;
    let m = |a: usize, b: usize| table[a * n + b];
    let pow = |a: usize, mut k: u64| {
        let (mut acc, mut base) = (id, a);
        while k > 0 {
            if k & 1 == 1 {
                acc = m(acc, base);
            }
            base = m(base, base);
            k >>= 1;
        }
        acc
    };

    // coordinates of the current subgroup H, over the generators found so far
    let mut sub: Vec<Option<Vec<u64>>> = vec![None; n];
    sub[id] = Some(vec![]);
    let mut sub_size = 1usize;
    let mut gens: Vec<usize> = Vec::new();
    let mut orders: Vec<u64> = Vec::new();

    while sub_size < n {
        // element of maximal order modulo H, first in input order
        let (mut best, mut best_ord) = (id, 1u64);
        for x in 0..n {
            let mut y = x;
            let mut k = 1u64;
            while sub[y].is_none() {
                y = m(y, x);
                k += 1;
            }
            if k > best_ord {
                best = x;
                best_ord = k;
            }
        }
        let e = sub[pow(best, best_ord)].clone().expect("power lies in H");
        let mut h = best;
        for (i, &ei) in e.iter().enumerate() {
            if ei % best_ord != 0 {
                return Err(CharError::NonAbelian("peel-off divisibility failed".into()));
            }
            let back = (orders[i] - ei / best_ord) % orders[i];
            h = m(h, pow(gens[i], back));
        }
        debug_assert_eq!(pow(h, best_ord), id);
        // extend H by <h>
        let old: Vec<(usize, Vec<u64>)> = (0..n).filter_map(|x| sub[x].clone().map(|c| (x, c))).collect();
        for c in sub.iter_mut().flatten() {
            c.push(0);
        }
        let mut hk = id;
        for k in 1..best_ord {
            hk = m(hk, h);
            for (x, c) in &old {
                let y = m(*x, hk);
                let mut cy = c.clone();
                cy.push(k);
                debug_assert!(sub[y].is_none());
                sub[y] = Some(cy);
            }
        }
        sub_size *= best_ord as usize;
        gens.push(h);
        orders.push(best_ord);
    }

    // orders were found in non-increasing divisibility order; reverse them
    gens.reverse();
    orders.reverse();
    let coords: Vec<Vec<u64>> = sub
        .into_iter()
        .map(|c| {
            let mut c = c.expect("all elements covered");
            c.reverse();
            c
        })
        .collect();
    Ok(AbelianStruct { elements, index, generators: gens, factors: orders, coords })
}

impl<T: Clone + Eq + Hash> AbelianStruct<T> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    /// Invariant factors `d_1 | d_2 | … | d_m`.
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn generators(&self) -> Vec<&T> {
        self.generators.iter().map(|&i| &self.elements[i]).collect()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn contains(&self, g: &T) -> bool {
        self.index.contains_key(g)
    }

    pub fn coords(&self, g: &T) -> Result<&[u64], CharError> {
        self.index.get(g).map(|&i| self.coords[i].as_slice()).ok_or(CharError::NotInGroup)
    }

    /// Every character, exponent tuples in lexicographic order (trivial first).
    pub fn characters(&self) -> Vec<Character> {
        enumerate_characters(&self.factors)
    }

    /// `χ(g)` for `g` in the group.
    pub fn eval(&self, chi: &Character, g: &T) -> Result<RootOfUnity, CharError> {
        chi.eval_coords(self.coords(g)?)
    }
}

/// A character of `Z_{d_1} ⊕ … ⊕ Z_{d_m}`, sending the `i`-th generator to
/// `exp(2πi·k_i/d_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Character {
    pub factors: Vec<u64>,
    pub exponents: Vec<u64>,
}

impl Character {
    pub fn trivial(factors: &[u64]) -> Self {
        Character { factors: factors.to_vec(), exponents: vec![0; factors.len()] }
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&k| k == 0)
    }

    /// Evaluation on a coordinate vector, as `Σ k_i·c_i·(L/d_i) / L` with `L`
    /// the largest factor.
    pub fn eval_coords(&self, coords: &[u64]) -> Result<RootOfUnity, CharError> {
        if coords.len() != self.factors.len() || self.exponents.len() != self.factors.len() {
            return Err(CharError::ShapeMismatch { expected: self.factors.len(), got: coords.len() });
        }
        let l = self.factors.last().copied().unwrap_or(1);
        let mut acc = 0u64;
        for ((&k, &c), &d) in self.exponents.iter().zip(coords).zip(&self.factors) {
            acc = (acc + (k * c % d) * (l / d)) % l;
        }
        Ok(RootOfUnity::new(acc as i64, l))
    }
}

/// All `∏ d_i` characters of `⊕ Z_{d_i}`, exponent tuples in lexicographic order.
pub fn enumerate_characters(factors: &[u64]) -> Vec<Character> {
    let total: u64 = factors.iter().product();
    (0..total)
        .map(|mut t| {
            let mut exps = vec![0u64; factors.len()];
            for (e, &d) in exps.iter_mut().zip(factors).rev() {
                *e = t % d;
                t /= d;
            }
            Character { factors: factors.to_vec(), exponents: exps }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zn_product(ds: &[u64]) -> (Vec<Vec<u64>>, impl Fn(&Vec<u64>, &Vec<u64>) -> Vec<u64> + '_) {
        let mut els = vec![vec![]];
        for &d in ds {
            els = els
                .into_iter()
                .flat_map(|e: Vec<u64>| {
                    (0..d).map(move |k| {
                        let mut e = e.clone();
                        e.push(k);
                        e
                    })
                })
                .collect();
        }
        let mul = move |a: &Vec<u64>, b: &Vec<u64>| a.iter().zip(b).zip(ds).map(|((x, y), d)| (x + y) % d).collect();
        (els, mul)
    }

    #[test]
    fn invariant_factors_of_products() {
        for (ds, expected) in [
            (vec![2, 5], vec![10]),
            (vec![4, 6], vec![2, 12]),
            (vec![2, 2, 3], vec![2, 6]),
            (vec![12], vec![12]),
            (vec![4, 4], vec![4, 4]),
            (vec![8, 12, 18], vec![2, 12, 72]),
        ] {
            let (els, mul) = zn_product(&ds);
            let a = abelian_structure(els, mul).unwrap();
            assert_eq!(a.factors(), expected.as_slice(), "for {ds:?}");
        }
    }

    #[test]
    fn coordinates_are_an_isomorphism() {
        let ds = [6u64, 4];
        let (els, mul) = zn_product(&ds);
        let a = abelian_structure(els.clone(), &mul).unwrap();
        for x in &els {
            for y in &els {
                let cx = a.coords(x).unwrap();
                let cy = a.coords(y).unwrap();
                let cxy = a.coords(&mul(x, y)).unwrap();
                for i in 0..cx.len() {
                    assert_eq!((cx[i] + cy[i]) % a.factors()[i], cxy[i]);
                }
            }
        }
    }

    #[test]
    fn rejects_non_abelian() {
        // S_3 as permutations of 0..3
        let perms: Vec<[u8; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let compose = |a: &[u8; 3], b: &[u8; 3]| [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]];
        assert!(matches!(abelian_structure(perms, compose), Err(CharError::NonAbelian(_))));
    }

    #[test]
    fn characters_and_separation() {
        let ds = [2u64, 6];
        let (els, mul) = zn_product(&ds);
        let a = abelian_structure(els.clone(), &mul).unwrap();
        let chars = a.characters();
        assert_eq!(chars.len(), 12);
        assert!(chars[0].is_trivial());
        for chi in &chars {
            for x in &els {
                for y in &els {
                    let v = a.eval(chi, &mul(x, y)).unwrap();
                    assert_eq!(v, a.eval(chi, x).unwrap() * a.eval(chi, y).unwrap());
                }
            }
        }
        for x in &els {
            for y in &els {
                if x != y {
                    assert!(chars.iter().any(|c| a.eval(c, x).unwrap() != a.eval(c, y).unwrap()));
                }
            }
        }
    }

    #[test]
    fn root_of_unity_basics() {
        let m = RootOfUnity::minus_one();
        assert!((m * m).is_one());
        let w = RootOfUnity::new(1, 3);
        assert!(w.in_r(3));
        assert!(w.pow(3).is_one());
        assert_eq!(RootOfUnity::new(4, 8), m);
        assert_eq!(RootOfUnity::new(-1, 4), RootOfUnity::new(3, 4));
        assert_eq!("2/6".parse::<RootOfUnity>().unwrap(), w);
        assert_eq!(w.to_string(), "1/3");
        assert_eq!(serde_json::to_string(&m).unwrap(), "\"1/2\"");
        // alpha in R_12: -alpha^{-2} lies in R_3
        for k in [1, 5, 7, 11] {
            let a = RootOfUnity::new(k, 12);
            assert!(a.pow(-2).neg().in_r(3));
        }
    }

    proptest! {
        #[test]
        fn order_of_power(a in 0i64..500, m in 1u64..200, k in -300i64..300) {
            let x = RootOfUnity::new(a, m);
            let expected = x.order() / x.order().gcd(&(k.unsigned_abs()));
            let expected = if k == 0 { 1 } else { expected };
            prop_assert_eq!(x.pow(k).order(), expected);
        }

        #[test]
        fn product_matches_exponent_sum(a in 0i64..100, b in 0i64..100, m in 1u64..60) {
            let x = RootOfUnity::new(a, m);
            let y = RootOfUnity::new(b, m);
            prop_assert_eq!(x * y, RootOfUnity::new(a + b, m));
            prop_assert_eq!(x / x, RootOfUnity::one());
        }
    }
}
