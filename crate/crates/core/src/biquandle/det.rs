//! Exact determinants of Laurent-polynomial matrices.
//!
//! The production algorithm is fraction-free Bareiss elimination. Rows
//! are first scaled by monomials to clear negative `s`/`t` exponents
//! (the accumulated unit is divided back out at the end), so every
//! intermediate entry is an ordinary polynomial and every division the
//! recurrence performs is exact. A naive cofactor expansion is kept as
//! an independent cross-check oracle for small orders.

use crate::laurent::{LaurentPoly, Monomial, Var};

/// A dense square matrix of Laurent polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zero(n: usize) -> Self {
        PolyMatrix {
            n,
            entries: vec![LaurentPoly::zero(); n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        PolyMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.n + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut LaurentPoly {
        &mut self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[LaurentPoly]> {
        self.entries.chunks(self.n)
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> PolyMatrix {
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Exact determinant via fraction-free Bareiss elimination.
    ///
    /// Deterministic: pivots are chosen as the first nonzero entry in
    /// each column. A failed interior division would mean the Bareiss
    /// divisibility guarantee was violated, which can only be an
    /// implementation bug, so it aborts rather than approximating.
    pub fn det_bareiss(&self) -> LaurentPoly {
        let n = self.n;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut m = self.clone();
        // Clear negative s/t exponents row by row, tracking the factor.
        let mut row_unit = Monomial::ONE;
        for i in 0..n {
            let row = &m.entries[i * n..(i + 1) * n];
            let mut min_s = 0;
            let mut min_t = 0;
            for e in row {
                if let Some(v) = e.min_exponent(Var::S) {
                    min_s = min_s.min(v);
                }
                if let Some(v) = e.min_exponent(Var::T) {
                    min_t = min_t.min(v);
                }
            }
            if min_s < 0 || min_t < 0 {
                let scale = Monomial::new(0, -min_s, -min_t);
                for j in 0..n {
                    let e = m.at_mut(i, j);
                    *e = e.mul_monomial(&scale);
                }
                row_unit = row_unit.mul(&scale);
            }
        }
        let mut negated = false;
        let mut prev_pivot = LaurentPoly::one();
        for k in 0..n - 1 {
            let pivot_row = match (k..n).find(|&r| !m.at(r, k).is_zero()) {
                Some(r) => r,
                None => return LaurentPoly::zero(),
            };
            if pivot_row != k {
                for j in 0..n {
                    let a = pivot_row * n + j;
                    let b = k * n + j;
                    m.entries.swap(a, b);
                }
                negated = !negated;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(m.at(k, k) * m.at(i, j)) - &(m.at(i, k) * m.at(k, j));
                    *m.at_mut(i, j) = num
                        .div_exact(&prev_pivot)
                        .expect("Bareiss divisibility violated: determinant entries corrupt");
                }
                *m.at_mut(i, k) = LaurentPoly::zero();
            }
            prev_pivot = m.at(k, k).clone();
        }
        let det = m.at(n - 1, n - 1).mul_monomial(&row_unit.inv());
        if negated {
            -det
        } else {
            det
        }
    }

    /// Naive Laplace expansion along the first row. Exponential; meant
    /// as an independent oracle for small orders.
    pub fn det_cofactor(&self) -> LaurentPoly {
        fn go(rows: &[Vec<LaurentPoly>]) -> LaurentPoly {
            let n = rows.len();
            if n == 0 {
                return LaurentPoly::one();
            }
            if n == 1 {
                return rows[0][0].clone();
            }
            let mut acc = LaurentPoly::zero();
            for (j, entry) in rows[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<LaurentPoly>> = rows[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, e)| e.clone())
                            .collect()
                    })
                    .collect();
                let term = entry * &go(&minor);
                if j % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
        let rows: Vec<Vec<LaurentPoly>> = self.rows().map(|r| r.to_vec()).collect();
        go(&rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(src: &str) -> LaurentPoly {
        src.parse().unwrap()
    }

    fn matrix(rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| p(s)).collect())
                .collect(),
        )
    }

    #[test]
    fn one_by_one() {
        let m = matrix(&[&["t"]]);
        assert_eq!(m.det_bareiss(), p("t"));
        assert_eq!(m.det_cofactor(), p("t"));
    }

    #[test]
    fn empty_matrix_has_unit_determinant() {
        assert_eq!(PolyMatrix::zero(0).det_bareiss(), LaurentPoly::one());
    }

    #[test]
    fn singular_matrix() {
        let m = matrix(&[&["s", "t"], &["s", "t"]]);
        assert_eq!(m.det_bareiss(), LaurentPoly::zero());
        assert_eq!(m.det_cofactor(), LaurentPoly::zero());
    }

    #[test]
    fn needs_row_swap() {
        let m = matrix(&[&["0", "t"], &["s", "0"]]);
        assert_eq!(m.det_bareiss(), p("-s*t"));
        assert_eq!(m.det_cofactor(), p("-s*t"));
    }

    #[test]
    fn laurent_entries_are_cleared_exactly() {
        let m = matrix(&[&["t^-1", "-1"], &["-1", "s^-1"]]);
        let want = p("s^-1*t^-1 - 1");
        assert_eq!(m.det_bareiss(), want);
        assert_eq!(m.det_cofactor(), want);
    }

    #[test]
    fn four_by_four_agrees_with_cofactor() {
        let m = matrix(&[
            &["t", "-1", "G", "0"],
            &["0", "t", "-1", "G"],
            &["0", "0", "s", "-1"],
            &["-1", "0", "0", "s"],
        ]);
        let want = p("-1 + s^2*t^2 + G*s + G*t");
        assert_eq!(m.det_bareiss(), want);
        assert_eq!(m.det_cofactor(), want);
    }
}
