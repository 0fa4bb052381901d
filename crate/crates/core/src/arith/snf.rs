//! Smith normal form over Z and linear systems over Q/Z.

use num_integer::Integer as _;

use super::integer::Integer;
use super::matrix::IntMatrix;
use super::unity::UnityRoot;
use crate::error::{Error, Result};

/// `A = U * S * V` with `S` diagonal, `d1 | d2 | ... | dr >= 1` followed by
/// zeros, and `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// `U^-1`, the accumulated row operations.
    pub u_inv: IntMatrix,
    /// `V^-1`, the accumulated column operations.
    pub v_inv: IntMatrix,
}

impl SnfDecomposition {
    pub fn diagonal(&self) -> Vec<Integer> {
        diagonal_of(&self.s)
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|d| !d.is_zero()).count()
    }
}

fn diagonal_of(s: &IntMatrix) -> Vec<Integer> {
    (0..s.rows().min(s.cols())).map(|i| s[(i, i)].clone()).collect()
}

struct Reducer {
    w: IntMatrix,
    // (P, P^-1) with P * A * Q = W
    rows: Option<(IntMatrix, IntMatrix)>,
    // (Q, Q^-1)
    cols: Option<(IntMatrix, IntMatrix)>,
}

impl Reducer {
    fn row_add(&mut self, target: usize, src: usize, k: &Integer) {
        self.w.add_row_multiple(target, src, k);
        if let Some((p, p_inv)) = &mut self.rows {
            p.add_row_multiple(target, src, k);
            p_inv.add_col_multiple(src, target, &-k);
        }
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        self.w.swap_rows(a, b);
        if let Some((p, p_inv)) = &mut self.rows {
            p.swap_rows(a, b);
            p_inv.swap_cols(a, b);
        }
    }

    fn row_negate(&mut self, i: usize) {
        self.w.negate_row(i);
        if let Some((p, p_inv)) = &mut self.rows {
            p.negate_row(i);
            p_inv.negate_col(i);
        }
    }

    fn col_add(&mut self, target: usize, src: usize, k: &Integer) {
        self.w.add_col_multiple(target, src, k);
        if let Some((q, q_inv)) = &mut self.cols {
            q.add_col_multiple(target, src, k);
            q_inv.add_row_multiple(src, target, &-k);
        }
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        self.w.swap_cols(a, b);
        if let Some((q, q_inv)) = &mut self.cols {
            q.swap_cols(a, b);
            q_inv.swap_rows(a, b);
        }
    }

    fn reduce(&mut self) {
        let (r, c) = (self.w.rows(), self.w.cols());
        for t in 0..r.min(c) {
            let Some((pi, pj)) = self.smallest_in_block(t) else {
                break;
            };
            self.row_swap(t, pi);
            self.col_swap(t, pj);
            loop {
                // clear column t below the pivot
                for i in t + 1..r {
                    if !self.w[(i, t)].is_zero() {
                        let q = self.w[(i, t)].quot(&self.w[(t, t)]);
                        self.row_add(i, t, &-q);
                    }
                }
                if let Some(i) = self.smallest_in_col(t) {
                    self.row_swap(t, i);
                    continue;
                }
                // clear row t right of the pivot
                for j in t + 1..c {
                    if !self.w[(t, j)].is_zero() {
                        let q = self.w[(t, j)].quot(&self.w[(t, t)]);
                        self.col_add(j, t, &-q);
                    }
                }
                if let Some(j) = self.smallest_in_row(t) {
                    self.col_swap(t, j);
                    continue;
                }
                // the pivot must divide the remaining block
                let pivot = self.w[(t, t)].clone();
                let offender = (t + 1..r).find(|&i| {
                    (t + 1..c).any(|j| !self.w[(i, j)].is_multiple_of(&pivot))
                });
                match offender {
                    Some(i) => self.row_add(t, i, &Integer::ONE),
                    None => break,
                }
            }
            if self.w[(t, t)].is_negative() {
                self.row_negate(t);
            }
        }
    }

    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.w.rows() {
            for j in t..self.w.cols() {
                let v = &self.w[(i, j)];
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.cmp_abs(&self.w[(bi, bj)]).is_lt()) {
                    best = Some((i, j));
                    if v.to_i64().is_some_and(|x| x.abs() == 1) {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn smallest_in_col(&self, t: usize) -> Option<usize> {
        (t + 1..self.w.rows())
            .filter(|&i| !self.w[(i, t)].is_zero())
            .min_by(|&a, &b| self.w[(a, t)].cmp_abs(&self.w[(b, t)]))
    }

    fn smallest_in_row(&self, t: usize) -> Option<usize> {
        (t + 1..self.w.cols())
            .filter(|&j| !self.w[(t, j)].is_zero())
            .min_by(|&a, &b| self.w[(t, a)].cmp_abs(&self.w[(t, b)]))
    }
}

/// Full decomposition `A = U * S * V`.
pub fn smith_normal_form(a: &IntMatrix) -> SnfDecomposition {
    let (r, c) = (a.rows(), a.cols());
    let mut red = Reducer {
        w: a.clone(),
        rows: Some((IntMatrix::identity(r), IntMatrix::identity(r))),
        cols: Some((IntMatrix::identity(c), IntMatrix::identity(c))),
    };
    red.reduce();
    let (p, p_inv) = red.rows.expect("tracked");
    let (q, q_inv) = red.cols.expect("tracked");
    SnfDecomposition {
        s: red.w,
        u: p_inv,
        v: q_inv,
        u_inv: p,
        v_inv: q,
    }
}

/// Diagonal of the Smith form only (no transforms are accumulated).
pub fn invariant_factors(a: &IntMatrix) -> Vec<Integer> {
    let mut red = Reducer {
        w: a.clone(),
        rows: None,
        cols: None,
    };
    red.reduce();
    diagonal_of(&red.w)
}

/// A fixed integer matrix `A`, pre-factored so that `A x = b (mod 1)` can be
/// solved for many right-hand sides.
///
/// With `P A Q = S`, the system becomes `S y = P b`, `x = Q y`. Rows of `S`
/// with a nonzero diagonal entry are always solvable because Q/Z is
/// divisible; zero rows require the transformed right-hand side to vanish.
#[derive(Clone, Debug)]
pub struct Mod1System {
    snf: SnfDecomposition,
    diag: Vec<u64>,
}

impl Mod1System {
    pub fn new(a: &IntMatrix) -> Result<Mod1System> {
        let snf = smith_normal_form(a);
        let diag = snf
            .diagonal()
            .iter()
            .take_while(|d| !d.is_zero())
            .map(|d| {
                d.to_i64().map(|v| v as u64).ok_or(Error::SizeLimit {
                    what: "invariant factor",
                    size: u64::MAX,
                    limit: u64::MAX,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Mod1System { snf, diag })
    }

    pub fn decomposition(&self) -> &SnfDecomposition {
        &self.snf
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// Some `x` with `A x = b (mod 1)`, or `None` when no solution exists.
    pub fn solve(&self, b: &[UnityRoot]) -> Result<Option<Vec<UnityRoot>>> {
        let p = &self.snf.u_inv;
        let q = &self.snf.v_inv;
        if b.len() != p.rows() {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} entries, system has {} rows",
                b.len(),
                p.rows()
            )));
        }
        let den = b.iter().fold(1u64, |acc, x| acc.lcm(&x.den()));
        let support: Vec<(usize, u64)> = b
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_one())
            .map(|(j, x)| (j, x.numerator_over(den)))
            .collect();

        // c = P b, as numerators over `den`
        let mut y = vec![UnityRoot::ONE; q.rows()];
        #[allow(clippy::needless_range_loop)]
        for i in 0..p.rows() {
            let row = p.row(i);
            let mut acc: u128 = 0;
            for &(j, num) in &support {
                let pij = &row[j];
                if !pij.is_zero() {
                    acc = (acc + pij.rem_u64(den) as u128 * num as u128) % den as u128;
                }
            }
            match self.diag.get(i) {
                Some(&d) => {
                    let full = den.checked_mul(d).expect("denominator overflow");
                    y[i] = UnityRoot::new(acc as i128, full);
                }
                None if acc != 0 => return Ok(None),
                None => {}
            }
        }

        let x = (0..q.rows())
            .map(|k| {
                let row = q.row(k);
                y.iter()
                    .zip(row)
                    .filter(|(yi, _)| !yi.is_one())
                    .map(|(yi, qki)| yi.times(qki.rem_u64(yi.den()) as i64))
                    .sum()
            })
            .collect();
        Ok(Some(x))
    }
}

/// One solution of `A x = b (mod 1)`, or `None`.
pub fn solve_mod1(a: &IntMatrix, b: &[UnityRoot]) -> Result<Option<Vec<UnityRoot>>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side has {} entries, matrix has {} rows",
            b.len(),
            a.rows()
        )));
    }
    Mod1System::new(a)?.solve(b)
}

/// `A x (mod 1)` for an integer matrix and a vector over Q/Z.
pub fn apply_mod1(a: &IntMatrix, x: &[UnityRoot]) -> Result<Vec<UnityRoot>> {
    if x.len() != a.cols() {
        return Err(Error::DimensionMismatch(format!(
            "vector has {} entries, matrix has {} columns",
            x.len(),
            a.cols()
        )));
    }
    Ok((0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .zip(x)
                .map(|(aij, xj)| xj.times(aij.rem_u64(xj.den()) as i64))
                .sum()
        })
        .collect())
}
