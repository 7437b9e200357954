//! Conjugacy-class racks and rack isomorphism.
//!
//! A rack here is a finite set `{0, …, n−1}` with an operation table
//! `t[i][j] = i ▷ j`. Conjugacy classes give racks via `x ▷ y = x·y·x⁻¹`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::grp2::{ClassType, ConjClass, Group};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rack {
    pub table: Vec<Vec<usize>>,
}

/// Cycle type of a row permutation `j ↦ i ▷ j`, lengths in decreasing order.
pub type CycleType = Vec<usize>;

impl Rack {
    pub fn new(table: Vec<Vec<usize>>) -> Self {
        Rack { table }
    }

    /// The rack with `i ▷ j = j`.
    pub fn trivial(n: usize) -> Self {
        Rack { table: (0..n).map(|_| (0..n).collect()).collect() }
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn op(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    /// Rows are permutations and `i ▷ (j ▷ k) = (i ▷ j) ▷ (i ▷ k)`. Racks with
    /// more than 200 elements are checked on a deterministic sample of triples.
    pub fn is_rack(&self) -> bool {
        let n = self.len();
        for row in &self.table {
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return false;
                }
            }
        }
        let step = if n <= 200 { 1 } else { n / 97 + 1 };
        for i in (0..n).step_by(step) {
            for j in 0..n {
                for k in (0..n).step_by(step) {
                    if self.op(i, self.op(j, k)) != self.op(self.op(i, j), self.op(i, k)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Cycle type of the row permutation of `i`.
    pub fn cycle_type(&self, i: usize) -> CycleType {
        let n = self.len();
        let row = &self.table[i];
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = row[x];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Sizes of the orbits of the inner group generated by all rows, per element.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut sizes = vec![0; n];
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            let mut members = vec![s];
            comp[s] = s;
            while let Some(x) = stack.pop() {
                for row in &self.table {
                    let y = row[x];
                    if comp[y] == usize::MAX {
                        comp[y] = s;
                        members.push(y);
                        stack.push(y);
                    }
                }
            }
            for &m in &members {
                sizes[m] = members.len();
            }
        }
        sizes
    }

    /// Per-element invariant: row cycle type and orbit size.
    pub fn element_invariants(&self) -> Vec<(CycleType, usize)> {
        let orbits = self.orbit_sizes();
        (0..self.len()).map(|i| (self.cycle_type(i), orbits[i])).collect()
    }

    /// Multiset of element invariants; isomorphic racks have equal profiles.
    pub fn profile(&self) -> RackProfile {
        let mut counts: BTreeMap<(CycleType, usize), usize> = BTreeMap::new();
        for inv in self.element_invariants() {
            *counts.entry(inv).or_insert(0) += 1;
        }
        RackProfile {
            size: self.len(),
            entries: counts
                .into_iter()
                .map(|((cycle_type, orbit), count)| ProfileEntry { cycle_type, orbit, count })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileEntry {
    pub cycle_type: CycleType,
    pub orbit: usize,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RackProfile {
    pub size: usize,
    pub entries: Vec<ProfileEntry>,
}

/// The rack of a conjugacy class, in the class's canonical element order.
pub fn rack_from_class(group: &Group, class: &ConjClass) -> Rack {
    let els = &class.elements;
    let table = els
        .iter()
        .map(|gi| {
            els.iter()
                .map(|gj| class.position(&group.conj(gi, gj)).expect("class is closed under conjugation"))
                .collect()
        })
        .collect();
    Rack { table }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedRack {
    TetrahedronVertices,
    DodecahedronFaces,
    IcosahedronFaces,
}

impl NamedRack {
    pub const ALL: [NamedRack; 3] =
        [NamedRack::TetrahedronVertices, NamedRack::DodecahedronFaces, NamedRack::IcosahedronFaces];

    pub fn as_str(self) -> &'static str {
        match self {
            NamedRack::TetrahedronVertices => "tetrahedron_vertices",
            NamedRack::DodecahedronFaces => "dodecahedron_faces",
            NamedRack::IcosahedronFaces => "icosahedron_faces",
        }
    }
}

type Perm = Vec<u8>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    b.iter().map(|&x| a[x as usize]).collect()
}

fn invert(a: &Perm) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

fn is_even(a: &Perm) -> bool {
    let mut seen = vec![false; a.len()];
    let mut transpositions = 0;
    for s in 0..a.len() {
        let mut x = s;
        let mut len = 0;
        while !seen[x] {
            seen[x] = true;
            x = a[x] as usize;
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

fn alternating_group(n: u8) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p: Perm = (0..n).collect();
    loop {
        if is_even(&p) {
            out.push(p.clone());
        }
        // next lexicographic permutation
        let Some(i) = (0..p.len().saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else { break };
        let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    out
}

/// Permutation of `{0, …, n−1}` with the given cycle (0-based points).
fn cycle(n: u8, points: &[u8]) -> Perm {
    let mut p: Perm = (0..n).collect();
    for w in 0..points.len() {
        p[points[w] as usize] = points[(w + 1) % points.len()];
    }
    p
}

/// Conjugation rack of the class of `g` in the permutation group `group`.
fn permutation_class_rack(group: &[Perm], g: &Perm) -> Rack {
    let mut class: Vec<Perm> = group.iter().map(|x| compose(&compose(x, g), &invert(x))).collect();
    class.sort();
    class.dedup();
    let table = class
        .iter()
        .map(|a| {
            let ai = invert(a);
            class.iter().map(|b| class.binary_search(&compose(&compose(a, b), &ai)).unwrap()).collect()
        })
        .collect();
    Rack { table }
}

/// The polyhedral racks as alternating-group classes: the `A_4` class of
/// `(1 2 3)`, the `A_5` class of `(1 2 3 4 5)` and the `A_5` class of 3-cycles.
pub fn named_rack(name: NamedRack) -> Rack {
    match name {
        NamedRack::TetrahedronVertices => permutation_class_rack(&alternating_group(4), &cycle(4, &[0, 1, 2])),
        NamedRack::DodecahedronFaces => permutation_class_rack(&alternating_group(5), &cycle(5, &[0, 1, 2, 3, 4])),
        NamedRack::IcosahedronFaces => permutation_class_rack(&alternating_group(5), &cycle(5, &[0, 1, 2])),
    }
}

/// A bijection `f` with `f(i ▷ j) = f(i) ▷ f(j)`, or `None` if the racks are
/// not isomorphic. Candidates are restricted to elements with equal
/// invariants and every choice is propagated through the operation table.
pub fn rack_iso(r1: &Rack, r2: &Rack) -> Option<Vec<usize>> {
    let n = r1.len();
    if n != r2.len() || r1.profile() != r2.profile() {
        return None;
    }
    let inv1 = r1.element_invariants();
    let inv2 = r2.element_invariants();
    let state = IsoState { map: vec![None; n], image: vec![None; n], assigned: vec![] };
    search(r1, r2, &inv1, &inv2, state)
}

#[derive(Clone)]
struct IsoState {
    map: Vec<Option<usize>>,
    image: Vec<Option<usize>>,
    assigned: Vec<usize>,
}

impl IsoState {
    /// Assigns `i ↦ a` and closes under the operation; false on a contradiction.
    fn assign(&mut self, r1: &Rack, r2: &Rack, i: usize, a: usize) -> bool {
        let mut queue = vec![(i, a)];
        while let Some((i, a)) = queue.pop() {
            match (self.map[i], self.image[a]) {
                (Some(b), _) if b == a => continue,
                (None, None) => {}
                _ => return false,
            }
            self.map[i] = Some(a);
            self.image[a] = Some(i);
            self.assigned.push(i);
            for k in 0..self.assigned.len() {
                let j = self.assigned[k];
                let b = self.map[j].unwrap();
                queue.push((r1.op(i, j), r2.op(a, b)));
                queue.push((r1.op(j, i), r2.op(b, a)));
            }
        }
        true
    }
}

fn search(
    r1: &Rack,
    r2: &Rack,
    inv1: &[(CycleType, usize)],
    inv2: &[(CycleType, usize)],
    state: IsoState,
) -> Option<Vec<usize>> {
    let Some(i) = state.map.iter().position(Option::is_none) else {
        return Some(state.map.into_iter().map(Option::unwrap).collect());
    };
    for a in 0..r2.len() {
        if state.image[a].is_some() || inv1[i] != inv2[a] {
            continue;
        }
        let mut next = state.clone();
        if next.assign(r1, r2, i, a) {
            if let Some(f) = search(r1, r2, inv1, inv2, next) {
                return Some(f);
            }
        }
    }
    None
}

/// Whether `f` is a rack isomorphism `r1 → r2`.
pub fn is_rack_iso(r1: &Rack, r2: &Rack, f: &[usize]) -> bool {
    let n = r1.len();
    if n != r2.len() || f.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &x in f {
        if x >= n || std::mem::replace(&mut hit[x], true) {
            return false;
        }
    }
    (0..n).all(|i| (0..n).all(|j| f[r1.op(i, j)] == r2.op(f[i], f[j])))
}

/// Named racks isomorphic to `r`.
pub fn identify(r: &Rack) -> Vec<NamedRack> {
    NamedRack::ALL.into_iter().filter(|&name| rack_iso(r, &named_rack(name)).is_some()).collect()
}

/// How the unipotent classes `C3…C6` of `SL(2,q)` behave under `SL(2,q) → PSL(2,q)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PslProjection {
    pub q: u64,
    pub minus_one_square: bool,
    /// Pairs of labels whose classes differ by the sign `−I`, i.e. map to the same class.
    pub same_image: Vec<(String, String)>,
    /// Every pair of the four racks is isomorphic.
    pub all_isomorphic: bool,
    /// Restricted to each class the projection is injective.
    pub injective: bool,
}

/// Two classes map to the same `PSL(2,q)` class exactly when `C_j = −C_i`.
pub fn psl_projection(group: &Group, classes: &[ConjClass]) -> PslProjection {
    let f = group.field();
    let minus = group.scalar(f.neg(1));
    let unip: Vec<&ConjClass> = classes
        .iter()
        .filter(|c| matches!(c.tag.row, ClassType::C3 | ClassType::C4 | ClassType::C5 | ClassType::C6))
        .collect();
    let mut same_image = Vec::new();
    for (a, ci) in unip.iter().enumerate() {
        for cj in &unip[a + 1..] {
            let mut neg: Vec<_> = ci.elements.iter().map(|g| group.mul(&minus, g)).collect();
            neg.sort();
            if neg == cj.elements {
                same_image.push((ci.label(), cj.label()));
            }
        }
    }
    let racks: Vec<Rack> = unip.iter().map(|c| rack_from_class(group, c)).collect();
    let all_isomorphic = racks.iter().all(|r| rack_iso(&racks[0], r).is_some());
    let injective = unip.iter().all(|c| c.elements.iter().all(|g| !c.contains(&group.mul(&minus, g))));
    PslProjection { q: group.q(), minus_one_square: f.is_square(f.neg(1)), same_image, all_isomorphic, injective }
}
