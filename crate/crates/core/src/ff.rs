//! Exact arithmetic in finite fields.
//!
//! A [`Field`] is a residue ring `B[X]/(m)` over a base field `B`, with the
//! prime field `Z/p` at the bottom of every tower. An element is stored as the
//! raw index `c_0 + c_1·|B| + … + c_{n-1}·|B|^{n-1}` of its coefficient vector
//! over `B`. A base-field element therefore keeps the same raw index in every
//! field above it, which makes the embedding `F_q ⊂ F_{q^2}` the identity on
//! raw indices. Every operation is a table lookup; the tables are built once
//! when the field is constructed.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default enumeration bound on `q` for user-facing field enumeration.
pub const DEFAULT_FIELD_BOUND: u64 = 32;

/// Largest field order for which operation tables are built.
pub const MAX_TABLE_ORDER: u32 = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus {0:?} is reducible over the base field")]
    ReducibleModulus(Vec<u32>),
    #[error("field of order {order} exceeds the bound {bound}")]
    BoundExceeded { order: u64, bound: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative order")]
    ZeroOrder,
    #[error("element does not live in a quadratic extension")]
    NotQuadratic,
    #[error("base field is not a subfield in the element's tower")]
    NotSubfield,
}

/// Serializable description of a field: `F_p[X]/(modulus)` of degree `n`,
/// or, when `base` is present, `base[X]/(modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub n: u32,
    pub modulus: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<FieldSpec>>,
}

impl FieldSpec {
    pub fn q(&self) -> u64 {
        let base_order = match &self.base {
            Some(b) => b.q(),
            None => self.p as u64,
        };
        base_order.pow(self.n)
    }
}

struct FieldData {
    p: u32,
    order: u32,
    degree: u32,
    abs_degree: u32,
    depth: u32,
    base: Option<Field>,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// A finite field with tabulated arithmetic. Cheap to clone.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.order == other.0.order
                && self.0.modulus == other.0.modulus
                && self.0.base == other.0.base)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.order())?;
        if self.0.base.is_some() {
            write!(f, "[mod {:?}]", self.0.modulus)?;
        }
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^n`, failing when `q` is not a prime power.
pub fn prime_power(q: u64) -> Result<(u32, u32), FieldError> {
    if q < 2 {
        return Err(FieldError::NotPrimePower(q));
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let mut rest = q;
    let mut n = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        n += 1;
    }
    if rest != 1 {
        return Err(FieldError::NotPrimePower(q));
    }
    Ok((p as u32, n))
}

/// The lexicographically least monic irreducible polynomial of degree `n`
/// over `Z/p`, comparing coefficient sequences from the constant term upward.
pub fn default_modulus(p: u32, n: u32) -> Result<Vec<u32>, FieldError> {
    let prime = Field::prime(p)?;
    least_irreducible(&prime, n)
}

/// Least monic irreducible polynomial of degree `n` over `base`, in the same
/// order as [`default_modulus`] with base elements ordered by raw index.
pub fn least_irreducible(base: &Field, n: u32) -> Result<Vec<u32>, FieldError> {
    if n == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let b = base.order() as u64;
    let total = b.checked_pow(n).ok_or(FieldError::BoundExceeded { order: u64::MAX, bound: u64::MAX })?;
    for counter in 0..total {
        // c0 is the most significant digit of the counter
        let mut poly = vec![0u32; n as usize + 1];
        let mut rest = counter;
        for i in (0..n as usize).rev() {
            poly[i] = (rest % b) as u32;
            rest /= b;
        }
        poly[n as usize] = 1;
        if is_irreducible(base, &poly) {
            return Ok(poly);
        }
    }
    unreachable!("every finite field has irreducible polynomials of each degree")
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

fn poly_mul(f: &Field, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(out)
}

/// Remainder of `a` modulo the monic polynomial `m`.
fn poly_rem(f: &Field, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm && !(r.len() == 1 && r[0] == 0) {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            let t = f.mul(lead, c);
            r[shift + i] = f.sub(r[shift + i], t);
        }
        r = trim(r);
        if r.len() - 1 < dm {
            break;
        }
    }
    r
}

/// Trial division by every monic polynomial of degree at most `deg/2`.
pub fn is_irreducible(base: &Field, m: &[u32]) -> bool {
    let d = m.len().saturating_sub(1);
    if d == 0 {
        return false;
    }
    let b = base.order() as u64;
    for k in 1..=d / 2 {
        for counter in 0..b.pow(k as u32) {
            let mut g = vec![0u32; k + 1];
            let mut rest = counter;
            for c in g.iter_mut().take(k) {
                *c = (rest % b) as u32;
                rest /= b;
            }
            g[k] = 1;
            let r = poly_rem(base, m, &g);
            if r.len() == 1 && r[0] == 0 {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// The prime field `Z/p`, with modulus `X`.
    pub fn prime(p: u32) -> Result<Self, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        if p > MAX_TABLE_ORDER {
            return Err(FieldError::BoundExceeded { order: p as u64, bound: MAX_TABLE_ORDER as u64 });
        }
        let n = p as usize;
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ((a + b) % n) as u32;
                mul[a * n + b] = ((a * b) % n) as u32;
            }
        }
        let (neg, inv) = negs_and_invs(n, &add, &mul);
        Ok(Field(Arc::new(FieldData {
            p,
            order: p,
            degree: 1,
            abs_degree: 1,
            depth: 0,
            base: None,
            modulus: vec![0, 1],
            add,
            mul,
            neg,
            inv,
        })))
    }

    /// `F_{p^n}` with the default modulus.
    pub fn new(p: u32, n: u32) -> Result<Self, FieldError> {
        if n == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let prime = Field::prime(p)?;
        if n == 1 {
            return Ok(prime);
        }
        let m = least_irreducible(&prime, n)?;
        prime.extend(&m)
    }

    /// `F_p[X]/(modulus)`; the modulus is validated as monic irreducible of degree `n`.
    pub fn with_modulus(p: u32, n: u32, modulus: &[u32]) -> Result<Self, FieldError> {
        if n == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let prime = Field::prime(p)?;
        if modulus.len() != n as usize + 1 {
            return Err(FieldError::InvalidModulus(format!(
                "expected {} coefficients for degree {n}, got {}",
                n + 1,
                modulus.len()
            )));
        }
        if n == 1 {
            if modulus[1] != 1 || modulus[0] >= p {
                return Err(FieldError::InvalidModulus(format!("{modulus:?} is not monic linear")));
            }
            return Ok(prime);
        }
        prime.extend(modulus)
    }

    /// Builds `F_q` for `q = p^n`, with an optional modulus override.
    pub fn for_order(q: u64, modulus: Option<&[u32]>) -> Result<Self, FieldError> {
        let (p, n) = prime_power(q)?;
        match modulus {
            Some(m) => Field::with_modulus(p, n, m),
            None => Field::new(p, n),
        }
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Self, FieldError> {
        match &spec.base {
            None => Field::with_modulus(spec.p, spec.n, &spec.modulus),
            Some(b) => Field::from_spec(b)?.extend(&spec.modulus),
        }
    }

    /// The extension `self[X]/(modulus)`.
    pub fn extend(&self, modulus: &[u32]) -> Result<Self, FieldError> {
        let degree = modulus.len().saturating_sub(1);
        if degree == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if modulus[degree] != 1 {
            return Err(FieldError::InvalidModulus(format!("{modulus:?} is not monic")));
        }
        if modulus.iter().any(|&c| c >= self.order()) {
            return Err(FieldError::InvalidModulus(format!(
                "coefficients of {modulus:?} must be below {}",
                self.order()
            )));
        }
        let order = (self.order() as u64).pow(degree as u32);
        if order > MAX_TABLE_ORDER as u64 {
            return Err(FieldError::BoundExceeded { order, bound: MAX_TABLE_ORDER as u64 });
        }
        if !is_irreducible(self, modulus) {
            return Err(FieldError::ReducibleModulus(modulus.to_vec()));
        }
        let order = order as u32;
        let b = self.order();
        let n = order as usize;
        let digits: Vec<Vec<u32>> = (0..order)
            .map(|mut raw| {
                (0..degree)
                    .map(|_| {
                        let c = raw % b;
                        raw /= b;
                        c
                    })
                    .collect()
            })
            .collect();
        let encode = |coeffs: &[u32]| -> u32 { coeffs.iter().rev().fold(0u32, |acc, &c| acc * b + c) };
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let s: Vec<u32> = digits[x].iter().zip(&digits[y]).map(|(&u, &v)| self.add(u, v)).collect();
                add[x * n + y] = encode(&s);
                let mut r = poly_rem(self, &poly_mul(self, &digits[x], &digits[y]), modulus);
                r.resize(degree, 0);
                mul[x * n + y] = encode(&r);
            }
        }
        let (neg, inv) = negs_and_invs(n, &add, &mul);
        Ok(Field(Arc::new(FieldData {
            p: self.0.p,
            order,
            degree: degree as u32,
            abs_degree: self.0.abs_degree * degree as u32,
            depth: self.0.depth + 1,
            base: Some(self.clone()),
            modulus: modulus.to_vec(),
            add,
            mul,
            neg,
            inv,
        })))
    }

    /// `self[t]/(m(t))` with `m` the least irreducible quadratic over `self`.
    pub fn quadratic_extension(&self) -> Result<Self, FieldError> {
        let m = least_irreducible(self, 2)?;
        self.extend(&m)
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// Degree over the immediate base field.
    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    /// Degree over the prime field.
    pub fn absolute_degree(&self) -> u32 {
        self.0.abs_degree
    }

    pub fn base(&self) -> Option<&Field> {
        self.0.base.as_ref()
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn spec(&self) -> FieldSpec {
        match &self.0.base {
            None => FieldSpec { p: self.0.p, n: 1, modulus: vec![0, 1], base: None },
            Some(b) if b.0.base.is_none() => {
                FieldSpec { p: self.0.p, n: self.0.degree, modulus: self.0.modulus.clone(), base: None }
            }
            Some(b) => FieldSpec {
                p: self.0.p,
                n: self.0.degree,
                modulus: self.0.modulus.clone(),
                base: Some(Box::new(b.spec())),
            },
        }
    }

    /// True when `sub` is this field or sits below it in the tower.
    pub fn has_subfield(&self, sub: &Field) -> bool {
        let mut cur = Some(self);
        while let Some(f) = cur {
            if f == sub {
                return true;
            }
            cur = f.base();
        }
        false
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.0.add[(a * self.0.order + b) as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.0.mul[(a * self.0.order + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.0.neg[a as usize]
    }

    /// Multiplicative inverse, `None` for zero.
    #[inline]
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.0.inv[a as usize])
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero raw element.
    pub fn order_of(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let group = self.order() as u64 - 1;
        divisors(group).into_iter().find(|&d| self.pow(a, d) == 1)
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || (0..self.order()).any(|y| self.mul(y, y) == a)
    }

    /// Coefficients over the immediate base field, constant term first.
    pub fn coeffs(&self, raw: u32) -> Vec<u32> {
        let b = self.0.base.as_ref().map_or(self.0.p, |b| b.order());
        let mut rest = raw;
        (0..self.0.degree)
            .map(|_| {
                let c = rest % b;
                rest /= b;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FqElem, FieldError> {
        let b = self.0.base.as_ref().map_or(self.0.p, |b| b.order());
        if coeffs.len() > self.0.degree as usize || coeffs.iter().any(|&c| c >= b) {
            return Err(FieldError::InvalidModulus(format!("{coeffs:?} is not a coefficient vector of {self:?}")));
        }
        let raw = coeffs.iter().rev().fold(0u32, |acc, &c| acc * b + c);
        Ok(self.elem(raw))
    }

    pub fn elem(&self, raw: u32) -> FqElem {
        assert!(raw < self.order(), "raw index {raw} out of range for {self:?}");
        FqElem { field: self.clone(), raw }
    }

    pub fn zero(&self) -> FqElem {
        self.elem(0)
    }

    pub fn one(&self) -> FqElem {
        self.elem(1)
    }

    /// Integer `k` mapped into the field through the prime subfield.
    pub fn from_int(&self, k: i64) -> FqElem {
        let p = self.0.p as i64;
        self.elem(k.rem_euclid(p) as u32)
    }

    /// Elements in canonical (raw index) order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.order()).map(move |raw| self.elem(raw))
    }

    /// First element of full multiplicative order.
    pub fn primitive_element(&self) -> FqElem {
        let full = self.order() as u64 - 1;
        let raw = (1..self.order())
            .find(|&a| self.order_of(a) == Some(full))
            .expect("multiplicative group of a finite field is cyclic");
        self.elem(raw)
    }

    /// Human-readable form of a raw element: integers for prime fields,
    /// polynomials in `s` (first extension) or `t` (second) above that.
    pub fn format(&self, raw: u32) -> String {
        let Some(base) = &self.0.base else {
            return raw.to_string();
        };
        if raw == 0 {
            return "0".into();
        }
        let var = if self.0.depth == 1 { "s" } else { "t" };
        let mut terms = Vec::new();
        for (i, c) in self.coeffs(raw).into_iter().enumerate() {
            if c == 0 {
                continue;
            }
            let cs = base.format(c);
            let cs = if cs.contains('+') && i > 0 { format!("({cs})") } else { cs };
            terms.push(match (i, cs.as_str()) {
                (0, _) => cs,
                (1, "1") => var.to_string(),
                (1, _) => format!("{cs}{var}"),
                (_, "1") => format!("{var}^{i}"),
                _ => format!("{cs}{var}^{i}"),
            });
        }
        terms.join("+")
    }
}

fn negs_and_invs(n: usize, add: &[u32], mul: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut neg = vec![0u32; n];
    let mut inv = vec![0u32; n];
    for a in 0..n {
        for b in 0..n {
            if add[a * n + b] == 0 {
                neg[a] = b as u32;
            }
            if mul[a * n + b] == 1 {
                inv[a] = b as u32;
            }
        }
    }
    (neg, inv)
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// All `q` elements of a field in canonical order, refusing fields above `bound`.
pub fn enumerate_field(field: &Field, bound: u64) -> Result<Vec<FqElem>, FieldError> {
    if field.order() as u64 > bound {
        return Err(FieldError::BoundExceeded { order: field.order() as u64, bound });
    }
    Ok(field.elements().collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(a: &FqElem, b: &FqElem, op: ArithOp) -> Result<FqElem, FieldError> {
    if a.field != b.field {
        return Err(FieldError::FieldMismatch);
    }
    let f = &a.field;
    let raw = match op {
        ArithOp::Add => f.add(a.raw, b.raw),
        ArithOp::Sub => f.sub(a.raw, b.raw),
        ArithOp::Mul => f.mul(a.raw, b.raw),
        ArithOp::Div => f.mul(a.raw, f.inv(b.raw).ok_or(FieldError::DivisionByZero)?),
    };
    Ok(f.elem(raw))
}

/// An element of a [`Field`].
#[derive(Clone)]
pub struct FqElem {
    field: Field,
    raw: u32,
}

impl FqElem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn raw(&self) -> u32 {
        self.raw
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.raw)
    }

    pub fn is_zero(&self) -> bool {
        self.raw == 0
    }

    pub fn is_one(&self) -> bool {
        self.raw == 1
    }

    pub fn pow(&self, e: u64) -> FqElem {
        self.field.elem(self.field.pow(self.raw, e))
    }

    pub fn inverse(&self) -> Result<FqElem, FieldError> {
        self.field.inv(self.raw).map(|r| self.field.elem(r)).ok_or(FieldError::DivisionByZero)
    }

    /// Least `m ≥ 1` with `self^m = 1`.
    pub fn order(&self) -> Result<u64, FieldError> {
        self.field.order_of(self.raw).ok_or(FieldError::ZeroOrder)
    }

    /// The same element viewed in a field of the tower above or below this one.
    /// Fails when the element does not lie in `target`.
    pub fn in_field(&self, target: &Field) -> Result<FqElem, FieldError> {
        if target.has_subfield(&self.field) || (self.field.has_subfield(target) && self.raw < target.order()) {
            Ok(target.elem(self.raw))
        } else {
            Err(FieldError::NotSubfield)
        }
    }

    fn quadratic_base(&self) -> Result<&Field, FieldError> {
        match self.field.base() {
            Some(b) if self.field.degree() == 2 => Ok(b),
            _ => Err(FieldError::NotQuadratic),
        }
    }

    /// Galois conjugate `x^q` over the base of a quadratic extension.
    pub fn conjugate(&self) -> Result<FqElem, FieldError> {
        let base = self.quadratic_base()?;
        Ok(self.pow(base.order() as u64))
    }

    /// `x + x̄`, as an element of the base field.
    pub fn trace(&self) -> Result<FqElem, FieldError> {
        let base = self.quadratic_base()?;
        let t = self.field.add(self.raw, self.conjugate()?.raw);
        debug_assert!(t < base.order());
        Ok(base.elem(t))
    }

    /// `x · x̄`, as an element of the base field.
    pub fn norm(&self) -> Result<FqElem, FieldError> {
        let base = self.quadratic_base()?;
        let n = self.field.mul(self.raw, self.conjugate()?.raw);
        debug_assert!(n < base.order());
        Ok(base.elem(n))
    }

    pub fn minimal_polynomial(&self, base: &Field) -> Result<Poly, FieldError> {
        minimal_polynomial(self, base)
    }
}

/// Monic minimal polynomial of `z` over a field `base` of its tower, built as
/// the product of `X − z^{|base|^i}` over the Frobenius orbit of `z`.
pub fn minimal_polynomial(z: &FqElem, base: &Field) -> Result<Poly, FieldError> {
    let field = &z.field;
    if !field.has_subfield(base) {
        return Err(FieldError::NotSubfield);
    }
    let b = base.order() as u64;
    let mut orbit = vec![z.raw];
    let mut y = field.pow(z.raw, b);
    while y != z.raw {
        orbit.push(y);
        y = field.pow(y, b);
    }
    let mut coeffs = vec![1u32];
    for root in orbit {
        coeffs = poly_mul(field, &coeffs, &[field.neg(root), 1]);
    }
    debug_assert!(coeffs.iter().all(|&c| c < base.order()));
    Ok(Poly { field: base.clone(), coeffs })
}

/// A polynomial over a field, constant term first.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    pub field: Field,
    pub coeffs: Vec<u32>,
}

impl Poly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Evaluates at `x`, which may live in any field above `self.field`.
    pub fn eval(&self, x: &FqElem) -> Result<FqElem, FieldError> {
        if !x.field.has_subfield(&self.field) {
            return Err(FieldError::NotSubfield);
        }
        let f = &x.field;
        let v = self.coeffs.iter().rev().fold(0u32, |acc, &c| f.add(f.mul(acc, x.raw), c));
        Ok(f.elem(v))
    }

    pub fn is_irreducible(&self) -> bool {
        is_irreducible(&self.field, &self.coeffs)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let cs = self.field.format(c);
            let cs = if cs.contains('+') { format!("({cs})") } else { cs };
            terms.push(match (i, cs.as_str()) {
                (0, _) => cs,
                (1, "1") => "X".to_string(),
                (1, _) => format!("{cs}X"),
                (_, "1") => format!("X^{i}"),
                _ => format!("{cs}X^{i}"),
            });
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl PartialEq for FqElem {
    fn eq(&self, other: &Self) -> bool {
        self.raw == other.raw && self.field == other.field
    }
}

impl Eq for FqElem {}

impl Hash for FqElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order().hash(state);
        self.raw.hash(state);
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(self.raw))
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self, self.field)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr<&FqElem> for &FqElem {
            type Output = FqElem;
            fn $method(self, rhs: &FqElem) -> FqElem {
                arith(self, rhs, $op).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<FqElem> for FqElem {
            type Output = FqElem;
            fn $method(self, rhs: FqElem) -> FqElem {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);
binop!(Div, div, ArithOp::Div);

impl Neg for &FqElem {
    type Output = FqElem;
    fn neg(self) -> FqElem {
        self.field.elem(self.field.neg(self.raw))
    }
}

impl Neg for FqElem {
    type Output = FqElem;
    fn neg(self) -> FqElem {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Field {
        Field::with_modulus(2, 2, &[1, 1, 1]).unwrap()
    }

    fn f25_alt() -> Field {
        // s^2 - 2
        Field::with_modulus(5, 2, &[3, 0, 1]).unwrap()
    }

    #[test]
    fn default_moduli() {
        assert_eq!(default_modulus(2, 1).unwrap(), vec![0, 1]);
        assert_eq!(default_modulus(2, 2).unwrap(), vec![1, 1, 1]);
        // brute force: least (c0, c1) with X^2 + c1 X + c0 having no root mod 5
        let expected = (0..25u32)
            .map(|k| (k / 5, k % 5))
            .find(|&(c0, c1)| (0..5u32).all(|x| (x * x + c1 * x + c0) % 5 != 0))
            .unwrap();
        assert_eq!(default_modulus(5, 2).unwrap(), vec![expected.0, expected.1, 1]);
        assert_eq!(default_modulus(5, 2).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert_eq!(Field::with_modulus(5, 2, &[4, 0, 1]).unwrap_err(), FieldError::ReducibleModulus(vec![4, 0, 1]));
        assert!(matches!(Field::with_modulus(5, 2, &[3, 0, 2]), Err(FieldError::InvalidModulus(_))));
        assert!(matches!(Field::prime(9), Err(FieldError::NotPrime(9))));
        assert!(matches!(prime_power(33), Err(FieldError::NotPrimePower(33))));
    }

    #[test]
    fn f4_inverse_sum() {
        let f = f4();
        let s = f.from_coeffs(&[0, 1]).unwrap();
        let sum = &s + &s.inverse().unwrap();
        assert!(sum.is_one());
        assert_eq!(s.order().unwrap(), 3);
    }

    #[test]
    fn f25_alt_values() {
        let f = f25_alt();
        let a = f.from_coeffs(&[1, 1]).unwrap();
        let a2 = a.pow(2);
        let am2 = a2.inverse().unwrap();
        assert_eq!(a2, f.from_coeffs(&[3, 2]).unwrap());
        assert_eq!(am2, f.from_coeffs(&[3, 3]).unwrap());
        assert_eq!(-(&a2 + &am2), f.from_int(4));
        assert_eq!(a.order().unwrap(), 12);
        let b = f.from_coeffs(&[1, 2]).unwrap();
        assert_eq!(b.order().unwrap(), 24);
        let b2 = b.pow(2);
        assert_eq!(-(&b2 + &b2.inverse().unwrap()), f.from_coeffs(&[0, 2]).unwrap());
    }

    #[test]
    fn errors_on_zero_and_mismatch() {
        let f = f4();
        assert_eq!(arith(&f.one(), &f.zero(), ArithOp::Div).unwrap_err(), FieldError::DivisionByZero);
        let g = Field::prime(2).unwrap();
        assert_eq!(arith(&f.one(), &g.one(), ArithOp::Add).unwrap_err(), FieldError::FieldMismatch);
        assert_eq!(f.zero().order().unwrap_err(), FieldError::ZeroOrder);
        assert_eq!(f.one().order().unwrap(), 1);
    }

    #[test]
    fn conjugation_in_f25() {
        let f5 = Field::prime(5).unwrap();
        let e = f5.extend(&[3, 0, 1]).unwrap();
        let x = e.from_coeffs(&[1, 1]).unwrap();
        // oracle: x^5 by repeated multiplication
        let mut x5 = e.one();
        for _ in 0..5 {
            x5 = &x5 * &x;
        }
        assert_eq!(x.conjugate().unwrap(), x5);
        assert_eq!(x5, e.from_coeffs(&[1, 4]).unwrap());
        assert_eq!(x.trace().unwrap(), f5.from_int(2));
        assert_eq!(x.norm().unwrap(), f5.from_int(-1));
        assert_eq!(f5.one().conjugate().unwrap_err(), FieldError::NotQuadratic);
    }

    #[test]
    fn minimal_polynomials() {
        let f = f4();
        let f2 = f.base().unwrap().clone();
        let s = f.from_coeffs(&[0, 1]).unwrap();
        let m = s.minimal_polynomial(&f2).unwrap();
        assert_eq!(m.coeffs, vec![1, 1, 1]);
        assert!(m.eval(&s).unwrap().is_zero());
        let one = f.one().minimal_polynomial(&f2).unwrap();
        assert_eq!(one.coeffs, vec![1, 1]);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(s.minimal_polynomial(&f3).unwrap_err(), FieldError::NotSubfield);
    }

    #[test]
    fn minimal_polynomial_degree_is_prime_extension_degree() {
        for r in [3u32, 5] {
            let f = Field::new(3, r).unwrap();
            let f3 = f.base().unwrap().clone();
            for z in f.elements().filter(|z| z.raw() >= 3) {
                let m = z.minimal_polynomial(&f3).unwrap();
                assert_eq!(m.degree(), r as usize);
                assert!(m.is_irreducible());
            }
        }
    }

    #[test]
    fn enumeration() {
        let f2 = Field::prime(2).unwrap();
        let all: Vec<u32> = enumerate_field(&f2, 32).unwrap().iter().map(|e| e.raw()).collect();
        assert_eq!(all, vec![0, 1]);
        let f4 = f4();
        let nz: Vec<FqElem> = enumerate_field(&f4, 32).unwrap().into_iter().filter(|e| !e.is_zero()).collect();
        assert_eq!(nz.len(), 3);
        assert!(nz.iter().any(|e| e.order().unwrap() == 3));
        let f9 = Field::new(3, 2).unwrap();
        let squares: std::collections::BTreeSet<u32> =
            f9.elements().filter(|e| !e.is_zero()).map(|e| e.pow(2).raw()).collect();
        assert_eq!(squares.len(), 4);
        let f64_ = Field::new(2, 6).unwrap();
        assert!(matches!(enumerate_field(&f64_, 32), Err(FieldError::BoundExceeded { .. })));
    }

    #[test]
    fn formatting() {
        let f = f25_alt();
        assert_eq!(f.from_coeffs(&[1, 2]).unwrap().to_string(), "1+2s");
        assert_eq!(f.from_coeffs(&[0, 1]).unwrap().to_string(), "s");
        let e = Field::prime(5).unwrap().quadratic_extension().unwrap();
        assert_eq!(e.from_coeffs(&[3, 1]).unwrap().to_string(), "3+s");
        let e25 = f.quadratic_extension().unwrap();
        assert_eq!(e25.from_coeffs(&[0, 1]).unwrap().to_string(), "t");
    }
}
