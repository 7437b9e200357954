//! Diagonal braidings on commuting subsets of a conjugacy class.
//!
//! For a class `C = {g_1, …, g_N}` with `g_i = x_i·g·x_i⁻¹` and a character `χ`
//! of the centralizer `Z_g`, a pairwise commuting subset `T` carries the braiding
//! `q_ij = χ(x_j⁻¹·g_i·x_j)`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chars::{AbelianStruct, CharError, Character, RootOfUnity};
use crate::grp2::{ConjClass, Group, Mat2};

#[derive(Debug, Error)]
pub enum BraidError {
    #[error("the centralizer of {0} is not abelian")]
    NonAbelianCentralizer(Mat2),
    #[error("class {0} is central; use the central scalar instead")]
    CentralClass(String),
    #[error("class {0} is not central")]
    NotCentral(String),
    #[error("x_j⁻¹·g_i·x_j = {0} is outside the centralizer")]
    NotInCentralizer(Mat2),
    #[error("elements {0} and {1} of the subset do not commute")]
    NotCommuting(usize, usize),
    #[error("index {0} is out of range for the class")]
    BadIndex(usize),
    #[error("expected {expected} coset representatives, got {got}")]
    RepCount { expected: usize, got: usize },
    #[error(transparent)]
    Char(#[from] CharError),
}

/// Indices into a class's element list naming pairwise commuting elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CommutingSubset {
    pub indices: Vec<usize>,
}

impl CommutingSubset {
    pub fn new(group: &Group, class: &ConjClass, mut indices: Vec<usize>) -> Result<Self, BraidError> {
        indices.sort_unstable();
        indices.dedup();
        for &i in &indices {
            if i >= class.size() {
                return Err(BraidError::BadIndex(i));
            }
        }
        for (a, &i) in indices.iter().enumerate() {
            for &j in &indices[a + 1..] {
                if !group.commute(&class.elements[i], &class.elements[j]) {
                    return Err(BraidError::NotCommuting(i, j));
                }
            }
        }
        Ok(CommutingSubset { indices })
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn elements(&self, class: &ConjClass) -> Vec<Mat2> {
        self.indices.iter().map(|&i| class.elements[i]).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }
}

/// The sets `C ∩ Z(h)` for `h ∈ C`, deduplicated, in order of first appearance
/// along the class. With abelian centralizers these are the maximal cliques of
/// the commuting graph on `C`. Each is computed as a conjugate of `C ∩ Z(g)`.
pub fn commuting_cliques(group: &Group, class: &ConjClass) -> Result<Vec<CommutingSubset>, BraidError> {
    if class.is_central() {
        return Err(BraidError::CentralClass(class.label()));
    }
    let g = class.representative;
    let zg = &class.centralizer;
    for (i, x) in zg.iter().enumerate() {
        for y in &zg[..i] {
            if !group.commute(x, y) {
                return Err(BraidError::NonAbelianCentralizer(g));
            }
        }
    }
    let base: Vec<Mat2> = class.elements.iter().filter(|h| group.commute(h, &g)).copied().collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in &class.coset_reps {
        let mut idx: Vec<usize> =
            base.iter().map(|h| class.position(&group.conj(x, h)).expect("conjugate stays in the class")).collect();
        idx.sort_unstable();
        if seen.insert(idx.clone()) {
            out.push(CommutingSubset { indices: idx });
        }
    }
    Ok(out)
}

/// The clique `C ∩ Z(g_i)` containing class element `i`.
pub fn clique_through(group: &Group, class: &ConjClass, i: usize) -> Result<CommutingSubset, BraidError> {
    let h = class.elements.get(i).ok_or(BraidError::BadIndex(i))?;
    let idx = (0..class.size()).filter(|&j| group.commute(&class.elements[j], h)).collect();
    CommutingSubset::new(group, class, idx)
}

/// A braiding matrix `q_ij` on a commuting subset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidingMatrix {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character: Option<Character>,
    pub indices: Vec<usize>,
    pub entries: Vec<Vec<RootOfUnity>>,
}

impl BraidingMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> RootOfUnity {
        self.entries[i][j]
    }

    /// Restriction to the given positions (positions in this matrix, not class indices).
    pub fn restrict(&self, positions: &[usize]) -> BraidingMatrix {
        BraidingMatrix {
            character: self.character.clone(),
            indices: positions.iter().map(|&p| self.indices[p]).collect(),
            entries: positions.iter().map(|&i| positions.iter().map(|&j| self.entries[i][j]).collect()).collect(),
        }
    }
}

/// `q_ij = χ(x_j⁻¹·g_i·x_j)` with the class's own coset representatives.
pub fn braiding_matrix(
    group: &Group,
    class: &ConjClass,
    zg: &AbelianStruct<Mat2>,
    chi: &Character,
    subset: &CommutingSubset,
) -> Result<BraidingMatrix, BraidError> {
    braiding_matrix_with_reps(group, class, zg, chi, subset, &class.coset_reps)
}

/// As [`braiding_matrix`], with explicit coset representatives `reps[i]`
/// satisfying `reps[i]·g·reps[i]⁻¹ = g_i`.
pub fn braiding_matrix_with_reps(
    group: &Group,
    class: &ConjClass,
    zg: &AbelianStruct<Mat2>,
    chi: &Character,
    subset: &CommutingSubset,
    reps: &[Mat2],
) -> Result<BraidingMatrix, BraidError> {
    if reps.len() != class.size() {
        return Err(BraidError::RepCount { expected: class.size(), got: reps.len() });
    }
    let mut entries = Vec::with_capacity(subset.len());
    for &i in &subset.indices {
        let gi = class.elements[i];
        let mut row = Vec::with_capacity(subset.len());
        for &j in &subset.indices {
            let xj = reps[j];
            let h = group.mul(&group.mul(&group.inv(&xj), &gi), &xj);
            if !zg.contains(&h) {
                return Err(BraidError::NotInCentralizer(h));
            }
            row.push(zg.eval(chi, &h)?);
        }
        entries.push(row);
    }
    Ok(BraidingMatrix { character: Some(chi.clone()), indices: subset.indices.clone(), entries })
}

/// The braiding `scalar·flip` of a central class, as a 1×1 matrix.
pub fn central_scalar_braiding(class: &ConjClass, scalar: RootOfUnity) -> Result<BraidingMatrix, BraidError> {
    if !class.is_central() {
        return Err(BraidError::NotCentral(class.label()));
    }
    Ok(BraidingMatrix { character: None, indices: vec![0], entries: vec![vec![scalar]] })
}

/// Vertex labels `q_ii` and edges `{i, j}` labelled `q_ij·q_ji ≠ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinDiagram {
    pub vertices: Vec<RootOfUnity>,
    pub edges: Vec<(usize, usize, RootOfUnity)>,
}

impl DynkinDiagram {
    pub fn edge(&self, i: usize, j: usize) -> Option<RootOfUnity> {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.edges.iter().find(|e| e.0 == i && e.1 == j).map(|e| e.2)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(i, j, _) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> DynkinDiagram {
        let mut vertices = self.vertices.clone();
        for (i, &p) in perm.iter().enumerate() {
            vertices[p] = self.vertices[i];
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(i, j, l)| {
                let (a, b) = (perm[i], perm[j]);
                if a < b {
                    (a, b, l)
                } else {
                    (b, a, l)
                }
            })
            .collect();
        edges.sort();
        DynkinDiagram { vertices, edges }
    }
}

pub fn dynkin(q: &BraidingMatrix) -> DynkinDiagram {
    let n = q.dim();
    let vertices = (0..n).map(|i| q.get(i, i)).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let l = q.get(i, j) * q.get(j, i);
            if !l.is_one() {
                edges.push((i, j, l));
            }
        }
    }
    DynkinDiagram { vertices, edges }
}

/// An exponent `n` with `gⁿ` in the class of `g` and `gⁿ ≠ g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerPair {
    pub n: u64,
    pub order: u64,
    /// `g^{n²} ≠ g`.
    pub squares_distinct: bool,
    /// `gⁿ = g⁻¹`.
    pub inverse: bool,
}

/// All `n` in `[0, |g|)` with `gⁿ ∈ C` and `gⁿ ≠ g`, for `g` the class representative.
pub fn power_pairs(group: &Group, class: &ConjClass) -> Vec<PowerPair> {
    let g = class.representative;
    let order = group.element_order(&g);
    let ginv = group.inv(&g);
    let mut out = Vec::new();
    let mut gn = group.identity();
    for n in 0..order {
        if gn != g && class.contains(&gn) {
            let n2 = (n * n) % order;
            out.push(PowerPair { n, order, squares_distinct: group.pow(&g, n2 as i64) != g, inverse: gn == ginv });
        }
        gn = group.mul(&gn, &g);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::Field;
    use crate::grp2::{ClassType, GroupKind};

    fn setup(kind: GroupKind, q: u64) -> (Group, Vec<ConjClass>) {
        let g = Group::new(kind, Field::for_order(q, None).unwrap()).unwrap();
        let cs = g.conjugacy_classes().unwrap();
        (g, cs)
    }

    #[test]
    fn cliques_match_brute_force() {
        for (kind, q) in [(GroupKind::Sl2, 2), (GroupKind::Sl2, 5), (GroupKind::Gl2, 4), (GroupKind::Sl2, 9)] {
            let (g, cs) = setup(kind, q);
            for c in cs.iter().filter(|c| !c.is_central()) {
                let cliques: BTreeSet<Vec<usize>> =
                    commuting_cliques(&g, c).unwrap().into_iter().map(|t| t.indices).collect();
                let brute: BTreeSet<Vec<usize>> = (0..c.size())
                    .map(|i| (0..c.size()).filter(|&j| g.commute(&c.elements[i], &c.elements[j])).collect())
                    .collect();
                assert_eq!(cliques, brute, "{kind} q={q} {}", c.label());
            }
        }
    }

    #[test]
    fn transposition_cliques_are_singletons() {
        let (g, cs) = setup(GroupKind::Sl2, 2);
        let c2 = cs.iter().find(|c| c.tag.row == ClassType::C2).unwrap();
        let cl = commuting_cliques(&g, c2).unwrap();
        assert_eq!(cl.len(), 3);
        assert!(cl.iter().all(|t| t.len() == 1));
    }

    #[test]
    fn unipotent_family_in_c5_clique() {
        let (g, cs) = setup(GroupKind::Sl2, 7);
        let f = g.field().clone();
        let c5 = cs.iter().find(|c| c.tag.row == ClassType::C5).unwrap();
        let t = clique_through(&g, c5, c5.rep_index()).unwrap();
        let m1 = f.neg(1);
        for a in 1..7u32 {
            let ga = Mat2::new(m1, f.mul(a, a), 0, m1);
            assert!(t.contains(c5.position(&ga).unwrap()));
        }
    }

    #[test]
    fn c7_clique_is_the_inverse_pair() {
        let (g, cs) = setup(GroupKind::Sl2, 5);
        let c7 = cs.iter().find(|c| c.tag.row == ClassType::C7).unwrap();
        let t = clique_through(&g, c7, c7.rep_index()).unwrap();
        let els = t.elements(c7);
        assert_eq!(els.len(), 2);
        assert!(els.contains(&c7.representative));
        assert!(els.contains(&g.inv(&c7.representative)));
    }

    #[test]
    fn power_pair_matrix_shape() {
        let (g, cs) = setup(GroupKind::Sl2, 7);
        for c in cs.iter().filter(|c| !c.is_central()) {
            let zg = g.abelian(c.centralizer.clone()).unwrap();
            let rep = c.representative;
            for pp in power_pairs(&g, c) {
                let gn = g.pow(&rep, pp.n as i64);
                let t = CommutingSubset::new(&g, c, vec![c.rep_index(), c.position(&gn).unwrap()]).unwrap();
                let ninv = (1..pp.order).find(|k| (k * pp.n) % pp.order == 1).unwrap();
                for chi in zg.characters() {
                    let m = braiding_matrix(&g, c, &zg, &chi, &t).unwrap();
                    let alpha = zg.eval(&chi, &rep).unwrap();
                    let (r, s) = if rep < gn { (0, 1) } else { (1, 0) };
                    assert_eq!(m.get(r, r), alpha);
                    assert_eq!(m.get(r, s), alpha.pow(ninv as i64));
                    assert_eq!(m.get(s, r), alpha.pow(pp.n as i64));
                }
            }
        }
    }

    #[test]
    fn central_classes_have_no_power_pairs() {
        let (g, cs) = setup(GroupKind::Sl2, 5);
        for c in cs.iter().filter(|c| c.is_central()) {
            assert!(power_pairs(&g, c).is_empty());
            assert!(matches!(commuting_cliques(&g, c), Err(BraidError::CentralClass(_))));
        }
        let c8 = cs.iter().find(|c| c.tag.row == ClassType::C8).unwrap();
        assert!(power_pairs(&g, c8).iter().any(|p| p.inverse));
    }

    #[test]
    fn dynkin_examples() {
        let m = RootOfUnity::minus_one();
        let q = BraidingMatrix { character: None, indices: vec![0, 1], entries: vec![vec![m, m], vec![m, m]] };
        let d = dynkin(&q);
        assert_eq!(d.vertices, vec![m, m]);
        assert!(d.edges.is_empty());
        let a = RootOfUnity::new(1, 5);
        let q =
            BraidingMatrix { character: None, indices: vec![0, 1], entries: vec![vec![a, a.inv()], vec![a.inv(), a]] };
        assert_eq!(dynkin(&q).edges, vec![(0, 1, a.pow(-2))]);
        let j = serde_json::to_string(&dynkin(&q)).unwrap();
        assert_eq!(j, r#"{"vertices":["1/5","1/5"],"edges":[[0,1,"3/5"]]}"#);
    }
}
