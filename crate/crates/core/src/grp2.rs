//! `SL(2,q)` and `GL(2,q)`: enumeration, conjugacy classes with their table
//! labels, centralizers and conjugation witnesses.
//!
//! Matrices hold raw field indices, so the canonical element order is the
//! lexicographic order on `(a, b, c, d)`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chars::{abelian_structure, AbelianStruct, CharError};
use crate::ff::{Field, FieldError, FieldSpec, FqElem};

/// Default bound on the number of group elements enumerated.
pub const DEFAULT_GROUP_BOUND: u64 = 50_000;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Char(#[from] CharError),
    #[error("group of order {order} exceeds the bound {bound}")]
    BoundExceeded { order: u64, bound: u64 },
    #[error("matrix {0} is not in the group")]
    NotInGroup(Mat2),
    #[error("invalid parameters for {row}: {reason}")]
    InvalidParams { row: ClassType, reason: String },
    #[error("element {0} lies in no class produced by a table row")]
    UnmatchedClass(Mat2),
    #[error("class of {element} is hit by rows {first} and {second}")]
    AmbiguousClass { element: Mat2, first: ClassType, second: ClassType },
    #[error("no solution to u^2 + t·uv + v^2 = {0}")]
    NoSolution(String),
    #[error("operation needs odd characteristic")]
    EvenCharacteristic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupKind {
    Sl2,
    Gl2,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Sl2 => "sl2",
            GroupKind::Gl2 => "gl2",
        })
    }
}

impl std::str::FromStr for GroupKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "sl2" => Ok(GroupKind::Sl2),
            "gl2" => Ok(GroupKind::Gl2),
            other => Err(format!("unknown group {other:?}, expected sl2 or gl2")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub field: FieldSpec,
}

/// Group order from the closed formulas.
pub fn group_order(kind: GroupKind, q: u64) -> u64 {
    match kind {
        GroupKind::Sl2 => (q - 1) * q * (q + 1),
        GroupKind::Gl2 => (q - 1) * (q - 1) * q * (q + 1),
    }
}

/// A 2×2 matrix `[[a, b], [c, d]]` with raw field entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mat2 {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl Mat2 {
    pub const fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn entries(&self) -> [u32; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// Row labels of the class tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassType {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
}

impl ClassType {
    pub const ALL: [ClassType; 8] = [
        ClassType::C1,
        ClassType::C2,
        ClassType::C3,
        ClassType::C4,
        ClassType::C5,
        ClassType::C6,
        ClassType::C7,
        ClassType::C8,
    ];

    pub fn number(self) -> u32 {
        self as u32 + 1
    }
}

impl fmt::Display for ClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.number())
    }
}

impl std::str::FromStr for ClassType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let n: usize =
            s.strip_prefix(['C', 'c']).and_then(|r| r.parse().ok()).ok_or_else(|| format!("bad class type {s:?}"))?;
        ClassType::ALL.get(n.wrapping_sub(1)).copied().ok_or_else(|| format!("bad class type {s:?}"))
    }
}

/// Table row plus parameters, such as `C7(2)` or `C3(1,2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTag {
    pub row: ClassType,
    pub params: Vec<FqElem>,
}

impl ClassTag {
    pub fn label(&self) -> String {
        if self.params.is_empty() {
            self.row.to_string()
        } else {
            let ps: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
            format!("{}({})", self.row, ps.join(","))
        }
    }

    pub fn param_strings(&self) -> Vec<String> {
        self.params.iter().map(|p| p.to_string()).collect()
    }
}

/// Closed-form table data for a row: class size, number of classes, centralizer order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowShape {
    pub size: u64,
    pub number: u64,
    pub centralizer: u64,
}

/// Size, count and centralizer order of a table row, or `None` when the row
/// does not exist for this group.
pub fn row_shape(kind: GroupKind, q: u64, row: ClassType) -> Option<RowShape> {
    let order = group_order(kind, q);
    let shape = |size: u64, number: u64| Some(RowShape { size, number, centralizer: order / size });
    use ClassType::*;
    match (kind, q.is_multiple_of(2), row) {
        (GroupKind::Sl2, true, C1) => shape(1, 1),
        (GroupKind::Sl2, true, C2) => shape(q * q - 1, 1),
        (GroupKind::Sl2, true, C3) => shape(q * (q + 1), (q - 2) / 2),
        (GroupKind::Sl2, true, C4) => shape((q - 1) * q, q / 2),
        (GroupKind::Sl2, false, C1 | C2) => shape(1, 1),
        (GroupKind::Sl2, false, C3 | C4 | C5 | C6) => shape((q * q - 1) / 2, 1),
        (GroupKind::Sl2, false, C7) => shape(q * (q + 1), (q - 3) / 2),
        (GroupKind::Sl2, false, C8) => shape((q - 1) * q, (q - 1) / 2),
        (GroupKind::Gl2, _, C1) => shape(1, q - 1),
        (GroupKind::Gl2, _, C2) => shape(q * q - 1, q - 1),
        (GroupKind::Gl2, _, C3) => shape(q * (q + 1), (q - 1) * (q - 2) / 2),
        (GroupKind::Gl2, _, C4) => shape((q - 1) * q, q * (q - 1) / 2),
        _ => None,
    }
}

/// Rows of the table for this group, in table order.
pub fn table_rows(kind: GroupKind, q: u64) -> Vec<ClassType> {
    ClassType::ALL.into_iter().filter(|&r| row_shape(kind, q, r).is_some()).collect()
}

/// Number of conjugacy classes from the tables: `q+1`, `q+4` or `q²−1`.
pub fn expected_class_count(kind: GroupKind, q: u64) -> u64 {
    match (kind, q.is_multiple_of(2)) {
        (GroupKind::Sl2, true) => q + 1,
        (GroupKind::Sl2, false) => q + 4,
        (GroupKind::Gl2, _) => q * q - 1,
    }
}

/// `SL(2,q)` or `GL(2,q)` with its elements enumerated in canonical order.
pub struct Group {
    kind: GroupKind,
    field: Field,
    ext: Field,
    elements: Vec<Mat2>,
    index: Vec<u32>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, self.q())
    }
}

const ABSENT: u32 = u32::MAX;

impl Group {
    pub fn new(kind: GroupKind, field: Field) -> Result<Self, GroupError> {
        Group::with_bound(kind, field, DEFAULT_GROUP_BOUND)
    }

    pub fn with_bound(kind: GroupKind, field: Field, bound: u64) -> Result<Self, GroupError> {
        let q = field.order() as u64;
        let order = group_order(kind, q);
        if order > bound {
            return Err(GroupError::BoundExceeded { order, bound });
        }
        let ext = field.quadratic_extension()?;
        let qq = q as u32;
        let mut elements = Vec::with_capacity(order as usize);
        let mut index = vec![ABSENT; (q * q * q * q) as usize];
        for a in 0..qq {
            for b in 0..qq {
                for c in 0..qq {
                    for d in 0..qq {
                        let det = field.sub(field.mul(a, d), field.mul(b, c));
                        let member = match kind {
                            GroupKind::Sl2 => det == 1,
                            GroupKind::Gl2 => det != 0,
                        };
                        if member {
                            index[(((a * qq + b) * qq + c) * qq + d) as usize] = elements.len() as u32;
                            elements.push(Mat2::new(a, b, c, d));
                        }
                    }
                }
            }
        }
        debug_assert_eq!(elements.len() as u64, order);
        Ok(Group { kind, field, ext, elements, index })
    }

    pub fn from_spec(spec: &GroupSpec) -> Result<Self, GroupError> {
        Group::new(spec.kind, Field::from_spec(&spec.field)?)
    }

    pub fn spec(&self) -> GroupSpec {
        GroupSpec { kind: self.kind, field: self.field.spec() }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The quadratic extension `E` of the base field.
    pub fn ext(&self) -> &Field {
        &self.ext
    }

    pub fn q(&self) -> u64 {
        self.field.order() as u64
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Mat2] {
        &self.elements
    }

    pub fn index_of(&self, m: &Mat2) -> Option<usize> {
        let q = self.field.order();
        if m.entries().iter().any(|&e| e >= q) {
            return None;
        }
        let i = self.index[(((m.a * q + m.b) * q + m.c) * q + m.d) as usize];
        (i != ABSENT).then_some(i as usize)
    }

    pub fn contains(&self, m: &Mat2) -> bool {
        self.index_of(m).is_some()
    }

    pub fn identity(&self) -> Mat2 {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn scalar(&self, x: u32) -> Mat2 {
        Mat2::new(x, 0, 0, x)
    }

    pub fn det(&self, m: &Mat2) -> u32 {
        let f = &self.field;
        f.sub(f.mul(m.a, m.d), f.mul(m.b, m.c))
    }

    #[inline]
    pub fn mul(&self, x: &Mat2, y: &Mat2) -> Mat2 {
        let f = &self.field;
        Mat2 {
            a: f.add(f.mul(x.a, y.a), f.mul(x.b, y.c)),
            b: f.add(f.mul(x.a, y.b), f.mul(x.b, y.d)),
            c: f.add(f.mul(x.c, y.a), f.mul(x.d, y.c)),
            d: f.add(f.mul(x.c, y.b), f.mul(x.d, y.d)),
        }
    }

    #[inline]
    pub fn inv(&self, m: &Mat2) -> Mat2 {
        let f = &self.field;
        let di = f.inv(self.det(m)).expect("group elements are invertible");
        Mat2 { a: f.mul(di, m.d), b: f.mul(di, f.neg(m.b)), c: f.mul(di, f.neg(m.c)), d: f.mul(di, m.a) }
    }

    pub fn pow(&self, m: &Mat2, k: i64) -> Mat2 {
        let mut base = if k < 0 { self.inv(m) } else { *m };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, m: &Mat2) -> u64 {
        let id = self.identity();
        let mut x = *m;
        let mut k = 1;
        while x != id {
            x = self.mul(&x, m);
            k += 1;
        }
        k
    }

    /// `x·g·x⁻¹`.
    #[inline]
    pub fn conj(&self, x: &Mat2, g: &Mat2) -> Mat2 {
        self.mul(&self.mul(x, g), &self.inv(x))
    }

    pub fn commute(&self, x: &Mat2, y: &Mat2) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn is_central(&self, g: &Mat2) -> bool {
        g.b == 0 && g.c == 0 && g.a == g.d
    }

    /// Brute-force centralizer `{x : xg = gx}` in canonical order.
    pub fn centralizer(&self, g: &Mat2) -> Vec<Mat2> {
        self.elements.iter().filter(|x| self.commute(x, g)).copied().collect()
    }

    /// First `w` in canonical order with `w·g·w⁻¹ = h`.
    pub fn find_conjugator(&self, g: &Mat2, h: &Mat2) -> Option<Mat2> {
        self.elements.iter().find(|w| self.conj(w, g) == *h).copied()
    }

    /// `diag(x,1)·g·diag(x,1)⁻¹`, an outer automorphism of `SL(2,q)` for `x` non-square.
    pub fn outer_switch(&self, g: &Mat2, x: u32) -> Result<Mat2, GroupError> {
        let f = &self.field;
        let xi = f.inv(x).ok_or(FieldError::DivisionByZero)?;
        Ok(Mat2 { a: g.a, b: f.mul(x, g.b), c: f.mul(xi, g.c), d: g.d })
    }

    /// Abelian structure of a centralizer list.
    pub fn abelian(&self, elements: Vec<Mat2>) -> Result<AbelianStruct<Mat2>, GroupError> {
        Ok(abelian_structure(elements, |x, y| self.mul(x, y))?)
    }

    fn invalid(row: ClassType, reason: impl Into<String>) -> GroupError {
        GroupError::InvalidParams { row, reason: reason.into() }
    }

    /// The literal table representative of `row` at `params`. Parameters in
    /// `F_q` are base-field elements; parameters in `E \ F_q` are elements of
    /// [`Group::ext`].
    pub fn table_representative(&self, row: ClassType, params: &[FqElem]) -> Result<Mat2, GroupError> {
        use ClassType::*;
        let q = self.q();
        if row_shape(self.kind, q, row).is_none() {
            return Err(Group::invalid(row, format!("no such row for {self:?}")));
        }
        let f = &self.field;
        let want = |n: usize| -> Result<(), GroupError> {
            if params.len() != n {
                return Err(Group::invalid(row, format!("expected {n} parameters, got {}", params.len())));
            }
            Ok(())
        };
        let base_param = |i: usize| -> Result<u32, GroupError> {
            let p = &params[i];
            if p.field() != f {
                return Err(Group::invalid(row, format!("{p} is not in F_{q}")));
            }
            Ok(p.raw())
        };
        // x ∈ E \ F_q, returning (trace, norm)
        let ext_param = |i: usize, unit_norm: bool| -> Result<(u32, u32), GroupError> {
            let p = &params[i];
            if p.field() != &self.ext || p.raw() < q as u32 {
                return Err(Group::invalid(row, format!("{p} is not in E \\ F_{q}")));
            }
            let t = p.trace()?.raw();
            let n = p.norm()?.raw();
            if unit_norm && n != 1 {
                return Err(Group::invalid(row, format!("{p} does not have norm 1")));
            }
            Ok((t, n))
        };
        let one = 1;
        let m1 = f.neg(1);
        let even = q.is_multiple_of(2);
        let m = match (self.kind, row) {
            (GroupKind::Sl2, C1) => {
                want(0)?;
                self.identity()
            }
            (GroupKind::Sl2, C2) if even => {
                want(0)?;
                Mat2::new(1, 1, 0, 1)
            }
            (GroupKind::Sl2, C2) => {
                want(0)?;
                self.scalar(m1)
            }
            (GroupKind::Sl2, C3) if even => {
                want(1)?;
                let x = base_param(0)?;
                if x == 0 || x == one {
                    return Err(Group::invalid(row, "x must differ from 0 and 1"));
                }
                Mat2::new(x, 0, 0, f.inv(x).unwrap())
            }
            (GroupKind::Sl2, C4) if even => {
                want(1)?;
                let (t, _) = ext_param(0, true)?;
                Mat2::new(0, 1, 1, t)
            }
            (GroupKind::Sl2, C3) => {
                want(0)?;
                Mat2::new(1, 1, 0, 1)
            }
            (GroupKind::Sl2, C4) => {
                want(1)?;
                let x = base_param(0)?;
                if f.is_square(x) {
                    return Err(Group::invalid(row, "x must be a non-square"));
                }
                Mat2::new(1, x, 0, 1)
            }
            (GroupKind::Sl2, C5) => {
                want(0)?;
                Mat2::new(m1, 1, 0, m1)
            }
            (GroupKind::Sl2, C6) => {
                want(1)?;
                let x = base_param(0)?;
                if f.is_square(x) {
                    return Err(Group::invalid(row, "x must be a non-square"));
                }
                Mat2::new(m1, x, 0, m1)
            }
            (GroupKind::Sl2, C7) => {
                want(1)?;
                let x = base_param(0)?;
                if x == 0 || x == one || x == m1 {
                    return Err(Group::invalid(row, "x must differ from 0 and ±1"));
                }
                Mat2::new(x, 0, 0, f.inv(x).unwrap())
            }
            (GroupKind::Sl2, C8) => {
                want(1)?;
                let (t, _) = ext_param(0, true)?;
                Mat2::new(0, m1, 1, t)
            }
            (GroupKind::Gl2, C1) => {
                want(1)?;
                let x = base_param(0)?;
                if x == 0 {
                    return Err(Group::invalid(row, "x must be nonzero"));
                }
                self.scalar(x)
            }
            (GroupKind::Gl2, C2) => {
                want(1)?;
                let x = base_param(0)?;
                if x == 0 {
                    return Err(Group::invalid(row, "x must be nonzero"));
                }
                Mat2::new(x, 1, 0, x)
            }
            (GroupKind::Gl2, C3) => {
                want(2)?;
                let (x, y) = (base_param(0)?, base_param(1)?);
                if x == 0 || y == 0 || x == y {
                    return Err(Group::invalid(row, "x, y must be nonzero and distinct"));
                }
                Mat2::new(x, 0, 0, y)
            }
            (GroupKind::Gl2, C4) => {
                want(1)?;
                let (t, n) = ext_param(0, false)?;
                Mat2::new(0, f.neg(n), 1, t)
            }
            _ => return Err(Group::invalid(row, format!("no such row for {self:?}"))),
        };
        Ok(m)
    }

    /// Every valid parameter tuple of a row, in canonical order.
    pub fn row_params(&self, row: ClassType) -> Vec<Vec<FqElem>> {
        use ClassType::*;
        let f = &self.field;
        let q = self.q() as u32;
        let even = q.is_multiple_of(2);
        let m1 = f.neg(1);
        let base = |pred: &dyn Fn(u32) -> bool| -> Vec<Vec<FqElem>> {
            (0..q).filter(|&x| pred(x)).map(|x| vec![f.elem(x)]).collect()
        };
        let ext = |unit: bool| -> Vec<Vec<FqElem>> {
            (q..self.ext.order())
                .map(|x| self.ext.elem(x))
                .filter(|x| !unit || x.norm().map(|n| n.raw() == 1).unwrap_or(false))
                .map(|x| vec![x])
                .collect()
        };
        match (self.kind, row) {
            (_, _) if row_shape(self.kind, q as u64, row).is_none() => vec![],
            (GroupKind::Sl2, C1 | C2 | C5) => vec![vec![]],
            (GroupKind::Sl2, C3) if !even => vec![vec![]],
            (GroupKind::Sl2, C3) => base(&|x| x > 1),
            (GroupKind::Sl2, C4) if even => ext(true),
            (GroupKind::Sl2, C4 | C6) => base(&|x| !f.is_square(x)),
            (GroupKind::Sl2, C7) => base(&|x| x != 0 && x != 1 && x != m1),
            (GroupKind::Sl2, C8) => ext(true),
            (GroupKind::Gl2, C1 | C2) => base(&|x| x != 0),
            (GroupKind::Gl2, C3) => {
                let mut v = Vec::new();
                for x in 1..q {
                    for y in 1..q {
                        if x != y {
                            v.push(vec![f.elem(x), f.elem(y)]);
                        }
                    }
                }
                v
            }
            (GroupKind::Gl2, C4) => ext(false),
            _ => vec![],
        }
    }

    /// Orbits of the conjugation action, each started from the first
    /// unvisited element in canonical order. Returns element indices.
    pub fn brute_force_partition(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut parts = Vec::new();
        for i in 0..self.order() {
            if seen[i] {
                continue;
            }
            let g = self.elements[i];
            let mut part = Vec::new();
            for x in &self.elements {
                let j = self.index_of(&self.conj(x, &g)).expect("closed under conjugation");
                if !seen[j] {
                    seen[j] = true;
                    part.push(j);
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    /// Conjugacy classes, each labelled by the unique table row whose
    /// representatives it contains. Classes come in table order, then by
    /// their first parameter.
    pub fn conjugacy_classes(&self) -> Result<Vec<ConjClass>, GroupError> {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<ConjClass> = Vec::new();
        for row in table_rows(self.kind, self.q()) {
            for params in self.row_params(row) {
                let rep = self.table_representative(row, &params)?;
                let ri = self.index_of(&rep).ok_or(GroupError::NotInGroup(rep))?;
                if class_of[ri] != usize::MAX {
                    let cls = &mut classes[class_of[ri]];
                    if cls.tag.row != row {
                        return Err(GroupError::AmbiguousClass { element: rep, first: cls.tag.row, second: row });
                    }
                    cls.equivalent_params.push(params);
                    continue;
                }
                let id = classes.len();
                let mut pairs: Vec<(Mat2, Mat2)> = Vec::new();
                let mut centralizer = Vec::new();
                for x in &self.elements {
                    let y = self.conj(x, &rep);
                    let yi = self.index_of(&y).expect("closed under conjugation");
                    if y == rep {
                        centralizer.push(*x);
                    }
                    if class_of[yi] == usize::MAX {
                        class_of[yi] = id;
                        pairs.push((y, *x));
                    } else if class_of[yi] != id {
                        let other = classes[class_of[yi]].tag.row;
                        return Err(GroupError::AmbiguousClass { element: y, first: other, second: row });
                    }
                }
                pairs.sort_unstable();
                let (elements, coset_reps) = pairs.into_iter().unzip();
                classes.push(ConjClass {
                    tag: ClassTag { row, params: params.clone() },
                    representative: rep,
                    elements,
                    coset_reps,
                    centralizer,
                    equivalent_params: vec![params],
                });
            }
        }
        if let Some(i) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(GroupError::UnmatchedClass(self.elements[i]));
        }
        Ok(classes)
    }

    /// Pairs `(u, v)` over `F_q` with `u² + t·uv + v² = target`, first in canonical order.
    pub fn solve_binary_quadratic(&self, trace: u32, target: u32) -> Result<(u32, u32), GroupError> {
        let f = &self.field;
        if f.characteristic() == 2 {
            return Err(GroupError::EvenCharacteristic);
        }
        let q = f.order();
        for u in 0..q {
            for v in 0..q {
                let val = f.add(f.add(f.mul(u, u), f.mul(trace, f.mul(u, v))), f.mul(v, v));
                if val == target {
                    return Ok((u, v));
                }
            }
        }
        Err(GroupError::NoSolution(f.format(target)))
    }
}

/// A conjugacy class with its table label.
#[derive(Debug, Clone)]
pub struct ConjClass {
    pub tag: ClassTag,
    /// Table representative for the first parameter of the class.
    pub representative: Mat2,
    /// Class elements in canonical order.
    pub elements: Vec<Mat2>,
    /// `coset_reps[i]` is the first `x` in canonical order with `x·rep·x⁻¹ = elements[i]`.
    pub coset_reps: Vec<Mat2>,
    /// Centralizer of the representative, in canonical order.
    pub centralizer: Vec<Mat2>,
    /// Every parameter tuple whose table representative lies in this class.
    pub equivalent_params: Vec<Vec<FqElem>>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn is_central(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn position(&self, g: &Mat2) -> Option<usize> {
        self.elements.binary_search(g).ok()
    }

    pub fn contains(&self, g: &Mat2) -> bool {
        self.position(g).is_some()
    }

    /// Index of the representative within `elements`.
    pub fn rep_index(&self) -> usize {
        self.position(&self.representative).expect("representative lies in its class")
    }

    pub fn label(&self) -> String {
        self.tag.label()
    }
}
