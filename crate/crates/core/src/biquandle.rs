//! The Alexander biquandle relation matrix and the invariants read off
//! its determinant.
//!
//! At a positive crossing the biquandle sends the incoming pair
//! `(left, right) = (a, b)` to `(b_a, a^b)` with
//!
//! ```text
//! a^b = t a + G b      (G is kept formal; G = 1 - st under substitution)
//! b_a = s b
//! ```
//!
//! and at a negative crossing the inverse maps apply, with
//! `Gbar = 1 - 1/(st)` stored as `-G/(st)` so that the whole matrix
//! stays polynomial in `G`. Listing one relation per edge (the relation
//! created at the forward end of the edge, rows and columns in
//! traversal order) gives the `2m x 2m` relation matrix `M(K)`.
//!
//! `Det(M)` is the three-variable `ASawollek` polynomial. Substituting
//! `G = 1 - st` and normalizing units yields the Sawollek polynomial;
//! expanding in powers of `G` yields `c_0 = (st)^writhe - 1`, the
//! quotient `Delta = c_0/(1-st) + c_1` whose value at `s = 1/t`
//! recovers the affine index polynomial, and the higher coefficients.

mod det;

pub use det::PolyMatrix;

use thiserror::Error;

use crate::affine::{affine_index_polynomial, crossing_weights};
use crate::diagram::{Diagram, EdgeId, InputRole, Sign};
use crate::laurent::{LaurentPoly, Monomial, PolyError, Var};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BiquandleError {
    #[error("the 0-crossing unknot has no relation matrix")]
    EmptyDiagram,
    /// A structural theorem failed on concrete data; this means the
    /// implementation (or its input) is corrupt, not the theorem.
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The biquandle relation matrix of a diagram, rows and columns indexed
/// by edges in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationMatrix {
    edges: Vec<EdgeId>,
    matrix: PolyMatrix,
}

impl RelationMatrix {
    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    /// `N(K)`: the matrix with every `G`-entry replaced by 0.
    pub fn at_g_zero(&self) -> PolyMatrix {
        self.matrix.map(|e| e.coeff_of_power(Var::G, 0))
    }
}

/// Builds `M(K)` for a valid knot with at least one crossing.
pub fn relation_matrix(d: &Diagram) -> Result<RelationMatrix, BiquandleError> {
    if d.crossing_count() == 0 {
        return Err(BiquandleError::EmptyDiagram);
    }
    let edges = d.traversal_order();
    let index: std::collections::BTreeMap<&EdgeId, usize> =
        edges.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let n = edges.len();
    let mut m = PolyMatrix::zero(n);
    let mut add = |row: usize, col: usize, val: LaurentPoly| {
        let e = m.at_mut(row, col);
        *e = &*e + &val;
    };
    let t = Monomial::var(Var::T);
    let s = Monomial::var(Var::S);
    for c in d.crossings() {
        let (li, ri, ro, lo) = (
            index[&c.l_in],
            index[&c.r_in],
            index[&c.r_out],
            index[&c.l_out],
        );
        match c.sign {
            Sign::Pos => {
                // row l_in: t*l_in - r_out + G*r_in = 0
                add(li, li, LaurentPoly::term(t, 1));
                add(li, ro, LaurentPoly::constant(-1));
                add(li, ri, LaurentPoly::variable(Var::G));
                // row r_in: s*r_in - l_out = 0
                add(ri, ri, LaurentPoly::term(s, 1));
                add(ri, lo, LaurentPoly::constant(-1));
            }
            Sign::Neg => {
                // row r_in: (1/t)*r_in - l_out + Gbar*l_in = 0,
                // Gbar = -G/(st)
                add(ri, ri, LaurentPoly::term(t.inv(), 1));
                add(ri, lo, LaurentPoly::constant(-1));
                add(ri, li, LaurentPoly::term(Monomial::new(1, -1, -1), -1));
                // row l_in: (1/s)*l_in - r_out = 0
                add(li, li, LaurentPoly::term(s.inv(), 1));
                add(li, ro, LaurentPoly::constant(-1));
            }
        }
    }
    debug_assert!(
        (0..n).all(|i| (0..n).all(|j| m.at(i, j).max_exponent(Var::G).unwrap_or(0) <= 1)),
        "relation matrix entries must be G-linear"
    );
    Ok(RelationMatrix { edges, matrix: m })
}

/// Exact determinant of the relation matrix (or any square
/// Laurent-polynomial matrix) via fraction-free Bareiss elimination.
pub fn det(m: &PolyMatrix) -> LaurentPoly {
    m.det_bareiss()
}

/// Naive cofactor determinant, the cross-check oracle for small orders.
pub fn det_cofactor(m: &PolyMatrix) -> LaurentPoly {
    m.det_cofactor()
}

/// The three-variable polynomial `Det(M(K))` in `(G, s, t)`. By
/// convention the 0-crossing unknot maps to 0.
pub fn asawollek(d: &Diagram) -> LaurentPoly {
    match relation_matrix(d) {
        Ok(rm) => det(rm.matrix()),
        Err(BiquandleError::EmptyDiagram) => LaurentPoly::zero(),
        Err(e) => unreachable!("relation_matrix: {e}"),
    }
}

/// `Det(M(K))` with `G := 1 - st`, before unit normalization.
pub fn sawollek_raw(d: &Diagram) -> LaurentPoly {
    let g = "1 - s*t".parse::<LaurentPoly>().unwrap();
    asawollek(d)
        .substitute(Var::G, &g)
        .expect("G-exponents are never negative")
}

/// The Sawollek polynomial: `Det(M(K))` at `G = 1 - st`, normalized to
/// the canonical representative of its unit class.
pub fn sawollek(d: &Diagram) -> LaurentPoly {
    sawollek_raw(d).normalize_unit()
}

/// Coefficients of `ASawollek` as a polynomial in `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GExpansion {
    coefficients: Vec<LaurentPoly>,
    writhe: i64,
}

impl GExpansion {
    /// `c_k(s, t)`, zero beyond the `G`-degree.
    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn coefficients(&self) -> &[LaurentPoly] {
        &self.coefficients
    }

    pub fn writhe(&self) -> i64 {
        self.writhe
    }
}

/// Expands `ASawollek` in powers of `G` and checks the structural
/// identity `c_0 = (st)^writhe - 1` on the way out.
pub fn g_expansion(d: &Diagram) -> Result<GExpansion, BiquandleError> {
    if d.crossing_count() == 0 {
        return Err(BiquandleError::EmptyDiagram);
    }
    let asaw = asawollek(d);
    let degree = asaw.max_exponent(Var::G).unwrap_or(0).max(0) as usize;
    let coefficients: Vec<LaurentPoly> = (0..=degree as i64)
        .map(|k| asaw.coeff_of_power(Var::G, k))
        .collect();
    let writhe = d.writhe();
    let expected_c0 =
        &LaurentPoly::term(Monomial::new(0, writhe, writhe), 1) - &LaurentPoly::one();
    if coefficients[0] != expected_c0 {
        return Err(BiquandleError::InternalInvariantViolation(format!(
            "c_0 = {} but (st)^{writhe} - 1 = {expected_c0}",
            coefficients[0]
        )));
    }
    Ok(GExpansion {
        coefficients,
        writhe,
    })
}

/// `Delta = c_0 / (1 - st) + c_1`. The division is Laurent-exact for
/// either sign of the writhe.
pub fn delta(d: &Diagram) -> Result<LaurentPoly, BiquandleError> {
    let exp = g_expansion(d)?;
    let g = "1 - s*t".parse::<LaurentPoly>().unwrap();
    let quotient = exp.coeff(0).div_exact(&g).map_err(|_| {
        BiquandleError::InternalInvariantViolation(format!(
            "1 - st does not divide c_0 = {}",
            exp.coeff(0)
        ))
    })?;
    Ok(&quotient + &exp.coeff(1))
}

/// Outcome of comparing `Delta(1/t, t)` against the affine index
/// polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MellorReport {
    pub delta_at_unity: LaurentPoly,
    pub affine: LaurentPoly,
    pub equal_exact: bool,
    pub equal_up_to_unit: bool,
}

/// Evaluates `Delta` at `s = 1/t` and compares with the affine index
/// polynomial. `equal_up_to_unit` must hold for every valid knot;
/// `equal_exact` is informational (it holds on everything this crate
/// has computed, but only the unit-class statement is asserted).
pub fn mellor_check(d: &Diagram) -> Result<MellorReport, BiquandleError> {
    let delta = delta(d)?;
    let t_inv = LaurentPoly::term(Monomial::new(0, 0, -1), 1);
    let delta_at_unity = delta.substitute(Var::S, &t_inv)?;
    let affine = affine_index_polynomial(d);
    Ok(MellorReport {
        equal_exact: delta_at_unity == affine,
        equal_up_to_unit: delta_at_unity.eq_up_to_unit(&affine),
        delta_at_unity,
        affine,
    })
}

/// `c_2` at `s = 1/t`, unit-normalized: the secondary invariant left
/// over after the affine index polynomial is extracted.
pub fn gamma_at_unity(d: &Diagram) -> Result<LaurentPoly, BiquandleError> {
    higher_coefficient_at_unity(d, 2)
}

/// `c_k` at `s = 1/t`, unit-normalized, for `k >= 2`. Values for
/// `k > 2` are exploratory output.
pub fn higher_coefficient_at_unity(d: &Diagram, k: usize) -> Result<LaurentPoly, BiquandleError> {
    assert!(k >= 2, "higher coefficients start at k = 2");
    let exp = g_expansion(d)?;
    let t_inv = LaurentPoly::term(Monomial::new(0, 0, -1), 1);
    Ok(exp.coeff(k).substitute(Var::S, &t_inv)?.normalize_unit())
}

/// Weight of a crossing read off the matrix mechanism instead of a
/// Cheng coloring: starting at the row edge carrying the crossing's
/// `G`-entry, walk successor edges up to (excluding) the co-input
/// column edge and sum each intermediate edge's diagonal exponent at
/// `st = 1` (`t, 1/s` count +1; `s, 1/t` count -1).
///
/// Equals the affine crossing weight `W(c)`; the fuzz suite holds the
/// two implementations against each other.
pub fn circuit_weight(d: &Diagram, crossing: usize) -> i64 {
    let c = &d.crossings()[crossing];
    let (start, target) = match c.sign {
        Sign::Pos => (&c.l_in, &c.r_in),
        Sign::Neg => (&c.r_in, &c.l_in),
    };
    let succ = d.successor_map();
    let mut weight = 0;
    let mut cur = &succ[start];
    while cur != target {
        let (idx, role) = d.forward_crossing(cur).expect("validated knot");
        weight += match (d.crossings()[idx].sign, role) {
            (Sign::Pos, InputRole::Left) => 1,   // diagonal t
            (Sign::Pos, InputRole::Right) => -1, // diagonal s
            (Sign::Neg, InputRole::Right) => -1, // diagonal 1/t
            (Sign::Neg, InputRole::Left) => 1,   // diagonal 1/s
        };
        cur = &succ[cur];
    }
    weight
}

/// Convenience: affine weights next to circuit weights, per crossing.
pub fn weight_pairs(d: &Diagram) -> Vec<(i64, i64)> {
    crossing_weights(d)
        .iter()
        .enumerate()
        .map(|(i, cw)| (cw.w, circuit_weight(d, i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_knot;

    const VIRTUAL_TREFOIL: &str = "+ a c b d\n+ b d c a\n";
    const CLASSICAL_TREFOIL: &str = "+ e6 e3 e1 e4\n+ e4 e1 e5 e2\n+ e2 e5 e3 e6\n";
    const POSITIVE_KINK: &str = "+ e1 e2 e2 e1\n";
    const NEGATIVE_KINK: &str = "- e1 e2 e2 e1\n";

    fn p(src: &str) -> LaurentPoly {
        src.parse().unwrap()
    }

    fn rows(rm: &RelationMatrix) -> Vec<Vec<String>> {
        rm.matrix()
            .rows()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect()
    }

    #[test]
    fn trefoil_relation_matrix_matches_hand_computation() {
        let d = parse_knot(VIRTUAL_TREFOIL).unwrap();
        let rm = relation_matrix(&d).unwrap();
        assert_eq!(
            rm.edges().iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            ["a", "b", "c", "d"]
        );
        let want = [
            ["t", "-1", "G", "0"],
            ["0", "t", "-1", "G"],
            ["0", "0", "s", "-1"],
            ["-1", "0", "0", "s"],
        ];
        for (i, row) in rows(&rm).iter().enumerate() {
            assert_eq!(row.as_slice(), want[i], "row {i}");
        }
    }

    #[test]
    fn trefoil_n_matrix() {
        let d = parse_knot(VIRTUAL_TREFOIL).unwrap();
        let n = relation_matrix(&d).unwrap().at_g_zero();
        assert_eq!(det(&n), p("s^2*t^2 - 1"));
    }

    #[test]
    fn positive_kink_matrix() {
        let d = parse_knot(POSITIVE_KINK).unwrap();
        let rm = relation_matrix(&d).unwrap();
        assert_eq!(
            rows(&rm),
            vec![vec!["t", "-1 + G"], vec!["-1", "s"]]
        );
    }

    #[test]
    fn determinants_match_paper_values() {
        let d = parse_knot(VIRTUAL_TREFOIL).unwrap();
        let rm = relation_matrix(&d).unwrap();
        let want = p("-1 + s^2*t^2 + G*s + G*t");
        assert_eq!(det(rm.matrix()), want);
        assert_eq!(det_cofactor(rm.matrix()), want);
    }

    #[test]
    fn asawollek_examples() {
        assert_eq!(
            asawollek(&parse_knot(VIRTUAL_TREFOIL).unwrap()),
            p("G*s + G*t + s^2*t^2 - 1")
        );
        assert_eq!(
            asawollek(&parse_knot(POSITIVE_KINK).unwrap()),
            p("s*t - 1 + G")
        );
        assert_eq!(
            asawollek(&parse_knot(NEGATIVE_KINK).unwrap()),
            p("s^-1*t^-1 - 1 - G*s^-1*t^-1")
        );
        assert_eq!(asawollek(&Diagram::unknot()), LaurentPoly::zero());
    }

    #[test]
    fn sawollek_examples() {
        let trefoil = parse_knot(VIRTUAL_TREFOIL).unwrap();
        let want = p("s - 1 + t - s^2*t + s^2*t^2 - s*t^2");
        assert!(sawollek(&trefoil).eq_up_to_unit(&want));
        assert_eq!(sawollek(&parse_knot(POSITIVE_KINK).unwrap()), LaurentPoly::zero());
        assert_eq!(sawollek(&parse_knot(NEGATIVE_KINK).unwrap()), LaurentPoly::zero());
        assert_eq!(sawollek(&Diagram::unknot()), LaurentPoly::zero());
    }

    #[test]
    fn g_expansion_examples() {
        let trefoil = parse_knot(VIRTUAL_TREFOIL).unwrap();
        let exp = g_expansion(&trefoil).unwrap();
        assert_eq!(exp.coeff(0), p("s^2*t^2 - 1"));
        assert_eq!(exp.coeff(1), p("s + t"));
        assert_eq!(exp.coeff(2), LaurentPoly::zero());
        assert_eq!(exp.coeff(7), LaurentPoly::zero());
        assert_eq!(exp.writhe(), 2);

        let kink = g_expansion(&parse_knot(POSITIVE_KINK).unwrap()).unwrap();
        assert_eq!(kink.coeff(0), p("s*t - 1"));
        assert_eq!(kink.coeff(1), LaurentPoly::one());

        // writhe 0: a cancelling +/- pair
        let flat = parse_knot("+ x1 x3 x2 x4\n- x4 x2 x1 x3").unwrap();
        assert_eq!(flat.writhe(), 0);
        assert_eq!(g_expansion(&flat).unwrap().coeff(0), LaurentPoly::zero());
    }

    #[test]
    fn delta_examples() {
        assert_eq!(
            delta(&parse_knot(VIRTUAL_TREFOIL).unwrap()).unwrap(),
            p("-1 - s*t + s + t")
        );
        assert_eq!(
            delta(&parse_knot(POSITIVE_KINK).unwrap()).unwrap(),
            LaurentPoly::zero()
        );
        assert_eq!(
            delta(&parse_knot(NEGATIVE_KINK).unwrap()).unwrap(),
            LaurentPoly::zero()
        );
    }

    #[test]
    fn mellor_check_trefoil_is_exact() {
        let report = mellor_check(&parse_knot(VIRTUAL_TREFOIL).unwrap()).unwrap();
        assert_eq!(report.delta_at_unity, p("-2 + t + t^-1"));
        assert_eq!(report.affine, p("t + t^-1 - 2"));
        assert!(report.equal_exact);
        assert!(report.equal_up_to_unit);
    }

    #[test]
    fn mellor_check_kink() {
        let report = mellor_check(&parse_knot(POSITIVE_KINK).unwrap()).unwrap();
        assert_eq!(report.delta_at_unity, LaurentPoly::zero());
        assert_eq!(report.affine, LaurentPoly::zero());
        assert!(report.equal_exact);
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(
            gamma_at_unity(&parse_knot(VIRTUAL_TREFOIL).unwrap()).unwrap(),
            LaurentPoly::zero()
        );
        assert_eq!(
            gamma_at_unity(&parse_knot(POSITIVE_KINK).unwrap()).unwrap(),
            LaurentPoly::zero()
        );
        assert_eq!(
            higher_coefficient_at_unity(&parse_knot(VIRTUAL_TREFOIL).unwrap(), 5).unwrap(),
            LaurentPoly::zero()
        );
    }

    #[test]
    fn circuit_weights_match_affine_weights_on_trefoil() {
        let d = parse_knot(VIRTUAL_TREFOIL).unwrap();
        assert_eq!(circuit_weight(&d, 0), 1);
        assert_eq!(circuit_weight(&d, 1), -1);
        assert!(weight_pairs(&d).iter().all(|(a, b)| a == b));
        let classical = parse_knot(CLASSICAL_TREFOIL).unwrap();
        assert!(weight_pairs(&classical).iter().all(|(a, b)| a == b && *a == 0));
    }

    #[test]
    fn empty_diagram_errors() {
        assert_eq!(
            relation_matrix(&Diagram::unknot()).unwrap_err(),
            BiquandleError::EmptyDiagram
        );
        assert_eq!(
            g_expansion(&Diagram::unknot()).unwrap_err(),
            BiquandleError::EmptyDiagram
        );
    }
}
