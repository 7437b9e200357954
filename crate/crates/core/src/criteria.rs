//! Finiteness criteria for diagonal braidings.
//!
//! Each rule inspects exact braiding data and either rules the braiding out
//! (its Nichols algebra is infinite-dimensional), lets it through as a
//! candidate, or, for configurations the rules do not cover, leaves it
//! unresolved. A verdict that rules something out carries a [`Witness`] from
//! which the same verdict can be recomputed with [`recheck`].

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::DynkinDiagram;
use crate::chars::RootOfUnity;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("n = {n} is 1 modulo the order {order}, so gⁿ = g")]
    TrivialPower { n: u64, order: u64 },
    #[error("g has order {0}, so g = g⁻¹")]
    SelfInverse(u64),
}

/// Stable criterion identifiers, as they appear in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    VertexOne,
    Rank2Table,
    PotinvPower,
    PotinvInverse,
    Triangle,
    LongCycle,
    CentralScalar,
}

impl Criterion {
    pub fn as_str(self) -> &'static str {
        match self {
            Criterion::VertexOne => "vertex-one",
            Criterion::Rank2Table => "rank2-table",
            Criterion::PotinvPower => "potinv-power",
            Criterion::PotinvInverse => "potinv-inverse",
            Criterion::Triangle => "triangle",
            Criterion::LongCycle => "long-cycle",
            Criterion::CentralScalar => "central-scalar",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    RuledOut,
    Candidate,
    Unresolved,
}

/// The data a criterion fired on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Vertex { alpha: RootOfUnity },
    Pair { zeta: RootOfUnity, mu: Option<RootOfUnity> },
    Power { alpha: RootOfUnity, n: u64, order: u64, squares_distinct: bool },
    Inverse { alpha: RootOfUnity, order: u64 },
    Triangle { alpha: RootOfUnity, edges: [RootOfUnity; 3] },
    Cycle { diagram: DynkinDiagram, cycle: Vec<usize> },
    Scalar { scalar: RootOfUnity },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionVerdict {
    pub outcome: Outcome,
    pub criterion: Criterion,
    pub detail: String,
    pub witness: Option<Witness>,
}

impl CriterionVerdict {
    fn new(outcome: Outcome, criterion: Criterion, detail: impl Into<String>, witness: Witness) -> Self {
        CriterionVerdict { outcome, criterion, detail: detail.into(), witness: Some(witness) }
    }

    pub fn is_ruled_out(&self) -> bool {
        self.outcome == Outcome::RuledOut
    }

    pub fn is_candidate(&self) -> bool {
        self.outcome == Outcome::Candidate
    }
}

/// Rules out any diagonal braiding with a vertex labelled 1.
pub fn vertex_one_rule(vertices: &[RootOfUnity]) -> CriterionVerdict {
    match vertices.iter().find(|v| v.is_one()) {
        Some(&alpha) => CriterionVerdict::new(
            Outcome::RuledOut,
            Criterion::VertexOne,
            "a vertex is labelled 1",
            Witness::Vertex { alpha },
        ),
        None => CriterionVerdict {
            outcome: Outcome::Candidate,
            criterion: Criterion::VertexOne,
            detail: "no vertex labelled 1".into(),
            witness: None,
        },
    }
}

/// Rows of the rank-two table for two vertices with equal labels `ζ` and edge `μ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rank2Row {
    /// No edge.
    Disconnected,
    /// `μ = ζ⁻¹`, `ζ ≠ 1`.
    InverseEdge,
    /// `ζ = −1`, `μ ≠ ±1`.
    MinusOneVertices,
    /// `ζ = −α⁻²`, `μ = −α³`, `α ∈ R_12`.
    R12Cube,
    /// `ζ = −α⁻²`, `μ = α`, `α ∈ R_12`.
    R12Plain,
}

/// The table row matched by `(ζ, μ)`, ignoring the vertex-one condition.
pub fn rank2_row(zeta: RootOfUnity, mu: Option<RootOfUnity>) -> Option<Rank2Row> {
    let Some(mu) = mu else {
        return Some(Rank2Row::Disconnected);
    };
    if mu.is_one() {
        return Some(Rank2Row::Disconnected);
    }
    if !zeta.is_one() && mu == zeta.inv() {
        return Some(Rank2Row::InverseEdge);
    }
    if zeta.is_minus_one() && !mu.is_minus_one() {
        return Some(Rank2Row::MinusOneVertices);
    }
    for k in [1, 5, 7, 11] {
        let a = RootOfUnity::new(k, 12);
        if zeta == a.pow(-2).neg() {
            if mu == a.pow(3).neg() {
                return Some(Rank2Row::R12Cube);
            }
            if mu == a {
                return Some(Rank2Row::R12Plain);
            }
        }
    }
    None
}

/// Two vertices labelled `ζ` joined by an edge labelled `μ` (`None` for no edge).
pub fn rank2_symmetric(zeta: RootOfUnity, mu: Option<RootOfUnity>) -> CriterionVerdict {
    let mu = mu.filter(|m| !m.is_one());
    let witness = Witness::Pair { zeta, mu };
    if zeta.is_one() {
        return CriterionVerdict::new(Outcome::RuledOut, Criterion::VertexOne, "vertex labelled 1", witness);
    }
    match rank2_row(zeta, mu) {
        Some(row) => CriterionVerdict::new(Outcome::Candidate, Criterion::Rank2Table, format!("{row:?}"), witness),
        None => CriterionVerdict::new(
            Outcome::RuledOut,
            Criterion::Rank2Table,
            format!("(ζ, μ) = ({zeta}, {}) matches no row", mu.map_or("none".into(), |m| m.to_string())),
            witness,
        ),
    }
}

/// `g` conjugate to `gⁿ ≠ g`, with `α = χ(g)`. When `g^{n²} ≠ g` only `α = −1`
/// survives; otherwise `α = −1` or `α ∈ R_3`. An exponent with `gⁿ = g⁻¹`
/// is handed to [`inverse_rule`].
pub fn potinv_power(
    alpha: RootOfUnity,
    n: u64,
    order_g: u64,
    squares_distinct: bool,
) -> Result<CriterionVerdict, CriteriaError> {
    let r = n % order_g;
    if r == 1 % order_g {
        return Err(CriteriaError::TrivialPower { n, order: order_g });
    }
    if r == order_g - 1 {
        return inverse_rule(alpha, order_g);
    }
    let witness = Witness::Power { alpha, n, order: order_g, squares_distinct };
    let ok = alpha.is_minus_one() || (!squares_distinct && alpha.in_r(3));
    let detail = if squares_distinct { "g^(n^2) != g requires α = −1" } else { "requires α = −1 or α ∈ R_3" };
    let outcome = if ok { Outcome::Candidate } else { Outcome::RuledOut };
    Ok(CriterionVerdict::new(outcome, Criterion::PotinvPower, detail, witness))
}

/// `g` conjugate to `g⁻¹ ≠ g`: survives only with `|g|` even and `α = −1`.
pub fn inverse_rule(alpha: RootOfUnity, order_g: u64) -> Result<CriterionVerdict, CriteriaError> {
    if order_g <= 2 {
        return Err(CriteriaError::SelfInverse(order_g));
    }
    let witness = Witness::Inverse { alpha, order: order_g };
    let ok = order_g.is_multiple_of(2) && alpha.is_minus_one();
    let detail = match (order_g.is_multiple_of(2), alpha.is_minus_one()) {
        (true, true) => "q = (−1,−1;−1,−1) with |g| even",
        (false, _) => "|g| is odd",
        (true, false) => "α ≠ −1",
    };
    let outcome = if ok { Outcome::Candidate } else { Outcome::RuledOut };
    Ok(CriterionVerdict::new(outcome, Criterion::PotinvInverse, detail, witness))
}

/// A triangle with all vertices labelled `α`. Uniform edge labels `β` survive
/// only for `α = −1`, `β ∈ R_3`; mixed edge labels are left unresolved.
pub fn triangle_rule(alpha: RootOfUnity, edges: [RootOfUnity; 3]) -> CriterionVerdict {
    let witness = Witness::Triangle { alpha, edges };
    if alpha.is_one() {
        return CriterionVerdict::new(Outcome::RuledOut, Criterion::VertexOne, "vertex labelled 1", witness);
    }
    let beta = edges[0];
    if edges.iter().any(|&e| e != beta) {
        return CriterionVerdict::new(Outcome::Unresolved, Criterion::Triangle, "edge labels differ", witness);
    }
    if alpha.is_minus_one() && beta.in_r(3) {
        CriterionVerdict::new(Outcome::Candidate, Criterion::Triangle, "α = −1, β ∈ R_3", witness)
    } else {
        CriterionVerdict::new(
            Outcome::RuledOut,
            Criterion::Triangle,
            format!("triangle with α = {alpha}, β = {beta}"),
            witness,
        )
    }
}

/// A simple cycle with at least four vertices, each started at its smallest vertex.
pub fn find_long_cycle(d: &DynkinDiagram) -> Option<Vec<usize>> {
    let adj = d.adjacency();
    let n = adj.len();
    fn dfs(adj: &[Vec<usize>], s: usize, path: &mut Vec<usize>, on: &mut [bool]) -> bool {
        let v = *path.last().unwrap();
        for &w in &adj[v] {
            if w == s && path.len() >= 4 {
                return true;
            }
            if w > s && !on[w] {
                on[w] = true;
                path.push(w);
                if dfs(adj, s, path, on) {
                    return true;
                }
                path.pop();
                on[w] = false;
            }
        }
        false
    }
    for s in 0..n {
        let mut on = vec![false; n];
        on[s] = true;
        let mut path = vec![s];
        if dfs(&adj, s, &mut path, &mut on) {
            return Some(path);
        }
    }
    None
}

/// Rules out any diagram containing a cycle of length at least four.
pub fn long_cycle_rule(d: &DynkinDiagram) -> CriterionVerdict {
    match find_long_cycle(d) {
        Some(cycle) => CriterionVerdict::new(
            Outcome::RuledOut,
            Criterion::LongCycle,
            format!("cycle of length {}", cycle.len()),
            Witness::Cycle { diagram: d.clone(), cycle },
        ),
        None => CriterionVerdict {
            outcome: Outcome::Candidate,
            criterion: Criterion::LongCycle,
            detail: "no cycle of length ≥ 4".into(),
            witness: None,
        },
    }
}

/// A central class braided by `scalar·flip`: 1 is ruled out by the vertex
/// rule, −1 survives (exterior algebra), any other scalar is ruled out.
pub fn central_scalar_rule(scalar: RootOfUnity) -> CriterionVerdict {
    let witness = Witness::Scalar { scalar };
    if scalar.is_one() {
        CriterionVerdict::new(Outcome::RuledOut, Criterion::VertexOne, "scalar 1: symmetric algebra", witness)
    } else if scalar.is_minus_one() {
        CriterionVerdict::new(Outcome::Candidate, Criterion::CentralScalar, "exterior algebra", witness)
    } else {
        CriterionVerdict::new(
            Outcome::RuledOut,
            Criterion::CentralScalar,
            format!("central scalar {scalar} is neither 1 nor −1"),
            witness,
        )
    }
}

/// Recomputes a verdict from its witness.
pub fn recheck(witness: &Witness) -> Result<CriterionVerdict, CriteriaError> {
    Ok(match witness {
        Witness::Vertex { alpha } => vertex_one_rule(&[*alpha]),
        Witness::Pair { zeta, mu } => rank2_symmetric(*zeta, *mu),
        Witness::Power { alpha, n, order, squares_distinct } => potinv_power(*alpha, *n, *order, *squares_distinct)?,
        Witness::Inverse { alpha, order } => inverse_rule(*alpha, *order)?,
        Witness::Triangle { alpha, edges } => triangle_rule(*alpha, *edges),
        Witness::Cycle { diagram, .. } => long_cycle_rule(diagram),
        Witness::Scalar { scalar } => central_scalar_rule(*scalar),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ru(a: i64, m: u64) -> RootOfUnity {
        RootOfUnity::new(a, m)
    }

    fn diagram(n: usize, edges: &[(usize, usize)]) -> DynkinDiagram {
        let m = RootOfUnity::minus_one();
        DynkinDiagram { vertices: vec![m; n], edges: edges.iter().map(|&(i, j)| (i, j, m)).collect() }
    }

    #[test]
    fn rank2_examples() {
        let m = RootOfUnity::minus_one();
        assert!(rank2_symmetric(m, Some(ru(1, 5))).is_candidate());
        assert_eq!(rank2_row(m, Some(ru(1, 5))), Some(Rank2Row::MinusOneVertices));
        let a = ru(2, 7);
        assert_eq!(rank2_row(a, Some(a.inv())), Some(Rank2Row::InverseEdge));
        let v = rank2_symmetric(ru(1, 5), Some(ru(1, 7)));
        assert!(v.is_ruled_out());
        assert_eq!(v.criterion, Criterion::Rank2Table);
        assert_eq!(rank2_symmetric(RootOfUnity::one(), None).criterion, Criterion::VertexOne);
        assert!(rank2_symmetric(ru(1, 3), Some(ru(1, 12))).is_candidate());
        assert!(rank2_symmetric(ru(1, 3), Some(ru(1, 4))).is_candidate());
    }

    #[test]
    fn potinv_examples() {
        let m = RootOfUnity::minus_one();
        // gⁿ = g⁻¹ with α ≠ −1
        assert!(potinv_power(ru(1, 3), 5, 6, false).unwrap().is_ruled_out());
        assert!(potinv_power(ru(1, 3), 3, 8, false).unwrap().is_candidate());
        assert!(potinv_power(ru(1, 3), 4, 5, false).unwrap().is_ruled_out());
        assert!(potinv_power(ru(1, 3), 2, 7, true).unwrap().is_ruled_out());
        assert!(potinv_power(m, 2, 7, true).unwrap().is_candidate());
        assert!(potinv_power(m, 3, 8, false).unwrap().is_candidate());
        assert_eq!(potinv_power(m, 7, 6, false).unwrap_err(), CriteriaError::TrivialPower { n: 7, order: 6 });
    }

    #[test]
    fn inverse_examples() {
        let m = RootOfUnity::minus_one();
        for a in RootOfUnity::all_of_order_dividing(30) {
            assert!(inverse_rule(a, 5).unwrap().is_ruled_out());
        }
        assert!(inverse_rule(m, 4).unwrap().is_candidate());
        assert!(inverse_rule(ru(1, 3), 6).unwrap().is_ruled_out());
        let a = ru(1, 3);
        assert!(rank2_symmetric(a, Some(a.inv() * a.inv())).is_ruled_out());
        assert_eq!(inverse_rule(m, 2).unwrap_err(), CriteriaError::SelfInverse(2));
    }

    #[test]
    fn triangle_examples() {
        let m = RootOfUnity::minus_one();
        assert!(triangle_rule(m, [ru(1, 3); 3]).is_candidate());
        assert!(triangle_rule(m, [m; 3]).is_ruled_out());
        assert_eq!(triangle_rule(RootOfUnity::one(), [m; 3]).criterion, Criterion::VertexOne);
        assert_eq!(triangle_rule(m, [m, m, ru(1, 3)]).outcome, Outcome::Unresolved);
    }

    #[test]
    fn cycle_examples() {
        assert!(long_cycle_rule(&diagram(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])).is_ruled_out());
        assert!(!long_cycle_rule(&diagram(5, &[(0, 1), (1, 2), (1, 3), (3, 4)])).is_ruled_out());
        assert!(!long_cycle_rule(&diagram(3, &[(0, 1), (1, 2), (0, 2)])).is_ruled_out());
        let six: Vec<(usize, usize)> = (0..6).map(|i| (i.min((i + 1) % 6), i.max((i + 1) % 6))).collect();
        let v = long_cycle_rule(&diagram(6, &six));
        assert!(v.is_ruled_out());
        let Some(Witness::Cycle { cycle, .. }) = &v.witness else { panic!() };
        assert_eq!(cycle.len(), 6);
    }

    #[test]
    fn witnesses_recheck() {
        let verdicts = [
            rank2_symmetric(ru(1, 5), Some(ru(1, 7))),
            potinv_power(ru(1, 3), 2, 7, true).unwrap(),
            inverse_rule(ru(1, 4), 8).unwrap(),
            triangle_rule(RootOfUnity::minus_one(), [RootOfUnity::minus_one(); 3]),
            long_cycle_rule(&diagram(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])),
            central_scalar_rule(ru(1, 3)),
        ];
        for v in verdicts {
            assert!(v.is_ruled_out());
            assert_eq!(recheck(v.witness.as_ref().unwrap()).unwrap(), v);
        }
    }
}
