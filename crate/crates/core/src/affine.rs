//! Cheng colorings, crossing weights and the affine index polynomial.
//!
//! A Cheng coloring assigns an integer to every edge so that passing a
//! crossing to the left increments the label and passing to the right
//! decrements it: at a crossing with left input `a` and right input
//! `b`, the right output carries `a - 1` and the left output `b + 1`.
//! Each crossing then gets the weight `W_+ = a - (b + 1)` (negated when
//! the crossing is negative), and the affine index polynomial is
//! `P = sum over crossings of sgn(c) (t^W(c) - 1)`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::diagram::{Diagram, EdgeId, InputRole, Sign};
use crate::laurent::{LaurentPoly, Monomial};

/// An integer edge labeling satisfying the crossing rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChengColoring {
    pub labels: BTreeMap<EdgeId, i64>,
    pub base_edge: EdgeId,
    pub base_label: i64,
}

impl ChengColoring {
    pub fn label(&self, e: &EdgeId) -> i64 {
        self.labels[e]
    }
}

/// Weight data for one crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingWeight {
    pub sign: Sign,
    pub w_plus: i64,
    pub w_minus: i64,
    /// `w_plus` or `w_minus` according to the crossing sign.
    pub w: i64,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum AffineError {
    #[error("edge {0} is not part of the diagram")]
    UnknownEdge(EdgeId),
    #[error("diagram has no crossings")]
    EmptyDiagram,
    /// Unreachable for validated knots; raised if label propagation
    /// fails to close around the cycle.
    #[error("coloring does not close up around the knot")]
    InconsistentColoring,
}

/// Propagates the unique Cheng coloring with `base_label` on
/// `base_edge` along the traversal.
pub fn cheng_coloring(
    d: &Diagram,
    base_edge: &EdgeId,
    base_label: i64,
) -> Result<ChengColoring, AffineError> {
    if d.crossing_count() == 0 {
        return Err(AffineError::EmptyDiagram);
    }
    if d.forward_crossing(base_edge).is_none() {
        return Err(AffineError::UnknownEdge(base_edge.clone()));
    }
    let mut labels = BTreeMap::new();
    let mut cur = base_edge.clone();
    let mut label = base_label;
    let total = 2 * d.crossing_count();
    for _ in 0..total {
        labels.insert(cur.clone(), label);
        let (idx, role) = d
            .forward_crossing(&cur)
            .ok_or(AffineError::InconsistentColoring)?;
        let crossing = &d.crossings()[idx];
        // crossing to the right decrements, to the left increments
        label += match role {
            InputRole::Left => -1,
            InputRole::Right => 1,
        };
        cur = crossing.continuation(role).clone();
    }
    if cur != *base_edge || label != base_label {
        return Err(AffineError::InconsistentColoring);
    }
    Ok(ChengColoring {
        labels,
        base_edge: base_edge.clone(),
        base_label,
    })
}

/// Per-crossing weights, in crossing order. Differences of labels are
/// independent of the base choice, so the coloring based at the
/// smallest edge with label 0 is used throughout.
pub fn crossing_weights(d: &Diagram) -> Vec<CrossingWeight> {
    if d.crossing_count() == 0 {
        return Vec::new();
    }
    let base = d.edges().into_iter().next().unwrap();
    let coloring = cheng_coloring(d, &base, 0).expect("valid knots always admit a coloring");
    d.crossings()
        .iter()
        .map(|c| {
            let w_plus = coloring.label(&c.l_in) - (coloring.label(&c.r_in) + 1);
            let w_minus = -w_plus;
            let w = match c.sign {
                Sign::Pos => w_plus,
                Sign::Neg => w_minus,
            };
            CrossingWeight {
                sign: c.sign,
                w_plus,
                w_minus,
                w,
            }
        })
        .collect()
}

/// The affine index polynomial `P(t)`, an exact Laurent polynomial in
/// `t` (no unit ambiguity). The 0-crossing unknot gives the empty sum.
pub fn affine_index_polynomial(d: &Diagram) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for cw in crossing_weights(d) {
        let sgn = cw.sign.value();
        p += &LaurentPoly::term(Monomial::new(0, 0, cw.w), sgn);
        p += &LaurentPoly::constant(-sgn);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_knot;

    const VIRTUAL_TREFOIL: &str = "+ a c b d\n+ b d c a\n";
    const CLASSICAL_TREFOIL: &str = "+ e6 e3 e1 e4\n+ e4 e1 e5 e2\n+ e2 e5 e3 e6\n";

    fn p(src: &str) -> LaurentPoly {
        src.parse().unwrap()
    }

    #[test]
    fn virtual_trefoil_coloring() {
        let d = parse_knot(VIRTUAL_TREFOIL).unwrap();
        let c = cheng_coloring(&d, &"a".into(), 0).unwrap();
        let want: Vec<(EdgeId, i64)> = [("a", 0), ("b", -1), ("c", -2), ("d", -1)]
            .into_iter()
            .map(|(e, l)| (EdgeId::new(e), l))
            .collect();
        assert_eq!(c.labels.clone().into_iter().collect::<Vec<_>>(), want);
    }

    #[test]
    fn classical_trefoil_coloring() {
        let d = parse_knot(CLASSICAL_TREFOIL).unwrap();
        let c = cheng_coloring(&d, &"e6".into(), 0).unwrap();
        for (e, l) in [("e1", -1), ("e2", 0), ("e3", -1), ("e4", 0), ("e5", -1), ("e6", 0)] {
            assert_eq!(c.label(&e.into()), l, "label of {e}");
        }
    }

    #[test]
    fn base_shift_translates_labels() {
        let d = parse_knot(VIRTUAL_TREFOIL).unwrap();
        let c0 = cheng_coloring(&d, &"a".into(), 0).unwrap();
        let c7 = cheng_coloring(&d, &"a".into(), 7).unwrap();
        for (e, l) in &c0.labels {
            assert_eq!(c7.label(e), l + 7);
        }
        // base independence of the polynomial
        let cb = cheng_coloring(&d, &"c".into(), -3).unwrap();
        let w_from = |col: &ChengColoring| {
            d.crossings()
                .iter()
                .map(|c| col.label(&c.l_in) - col.label(&c.r_in) - 1)
                .collect::<Vec<_>>()
        };
        assert_eq!(w_from(&c0), w_from(&cb));
    }

    #[test]
    fn virtual_trefoil_weights_and_polynomial() {
        let d = parse_knot(VIRTUAL_TREFOIL).unwrap();
        let ws = crossing_weights(&d);
        assert_eq!(ws.iter().map(|w| w.w).collect::<Vec<_>>(), vec![1, -1]);
        assert!(ws.iter().all(|w| w.w_minus == -w.w_plus));
        assert_eq!(affine_index_polynomial(&d), p("t + t^-1 - 2"));
    }

    #[test]
    fn classical_trefoil_vanishes() {
        let d = parse_knot(CLASSICAL_TREFOIL).unwrap();
        assert!(crossing_weights(&d).iter().all(|w| w.w == 0));
        assert_eq!(affine_index_polynomial(&d), LaurentPoly::zero());
    }

    #[test]
    fn kinks_have_weight_zero() {
        for code in ["+ e1 e2 e2 e1", "- e1 e2 e2 e1", "+ e2 e1 e1 e2", "- e2 e1 e1 e2"] {
            let d = parse_knot(code).unwrap();
            assert_eq!(crossing_weights(&d)[0].w, 0, "{code}");
            assert_eq!(affine_index_polynomial(&d), LaurentPoly::zero());
        }
    }

    #[test]
    fn unknot_polynomial_is_zero() {
        assert_eq!(affine_index_polynomial(&Diagram::unknot()), LaurentPoly::zero());
    }

    #[test]
    fn mirror_and_reverse_laws_on_trefoil() {
        let d = parse_knot(VIRTUAL_TREFOIL).unwrap();
        assert_eq!(affine_index_polynomial(&d.mirror()), p("2 - t - t^-1"));
        assert_eq!(affine_index_polynomial(&d.reverse()), p("t + t^-1 - 2"));
    }

    #[test]
    fn reverse_label_duality() {
        let d = parse_knot(VIRTUAL_TREFOIL).unwrap();
        let c = cheng_coloring(&d, &"a".into(), 0).unwrap();
        let r = d.reverse();
        let negated: BTreeMap<EdgeId, i64> =
            c.labels.iter().map(|(e, l)| (e.clone(), -l)).collect();
        let base = negated.keys().next().unwrap().clone();
        let rc = cheng_coloring(&r, &base, negated[&base]).unwrap();
        assert_eq!(rc.labels, negated);
    }

    #[test]
    fn coloring_errors() {
        let d = parse_knot(VIRTUAL_TREFOIL).unwrap();
        assert_eq!(
            cheng_coloring(&d, &"zz".into(), 0),
            Err(AffineError::UnknownEdge("zz".into()))
        );
        assert_eq!(
            cheng_coloring(&Diagram::unknot(), &"a".into(), 0),
            Err(AffineError::EmptyDiagram)
        );
    }
}
