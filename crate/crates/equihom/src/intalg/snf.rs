//! Smith normal form over the integers, with unimodular transform tracking.

use super::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Result of `smith_normal_form`: `u * m * v = d` with `u`, `v` unimodular,
/// `d` diagonal with nonnegative entries satisfying `d[0] | d[1] | ...`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// Number of nonzero diagonal entries.
    pub rank: usize,
}

#[derive(Clone, Copy, Default)]
pub(crate) struct SnfNeed {
    pub u: bool,
    pub v: bool,
    pub u_inv: bool,
}

pub(crate) struct RawSnf {
    pub d: IntMatrix,
    pub rank: usize,
    pub u: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub u_inv: Option<IntMatrix>,
}

struct Work {
    d: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
    u_inv: Option<IntMatrix>,
}

impl Work {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
    }

    /// row[dst] += c * row[src]
    fn add_mul_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.d.add_mul_row(dst, src, c);
        if let Some(u) = &mut self.u {
            u.add_mul_row(dst, src, c);
        }
        if let Some(ui) = &mut self.u_inv {
            let neg = -c;
            ui.add_mul_col(src, dst, &neg);
        }
    }

    /// col[dst] += c * col[src]
    fn add_mul_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.d.add_mul_col(dst, src, c);
        if let Some(v) = &mut self.v {
            v.add_mul_col(dst, src, c);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(i);
        }
    }
}

/// Pivot choice: smallest nonzero absolute value in the trailing submatrix,
/// ties broken by row-major position.
fn find_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = d.get(i, j);
            if x.is_zero() {
                continue;
            }
            let a = x.abs();
            if a.is_one() {
                return Some((i, j));
            }
            match &best {
                Some((_, _, b)) if *b <= a => {}
                _ => best = Some((i, j, a)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Monomial matrices (at most one nonzero per row and per column) whose
/// values sort into a divisibility chain are already in Smith form up to
/// signed permutations. Relation matrices of direct sums are diagonal, so
/// large chain groups hit this shape constantly.
fn monomial_fast_path(m: &IntMatrix, need: SnfNeed) -> Option<RawSnf> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut row_col = vec![None; rows];
    let mut col_taken = vec![false; cols];
    let mut entries: Vec<(BigInt, usize, usize, bool)> = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let x = m.get(i, j);
            if x.is_zero() {
                continue;
            }
            if row_col[i].is_some() || col_taken[j] {
                return None;
            }
            row_col[i] = Some(j);
            col_taken[j] = true;
            entries.push((x.abs(), i, j, x.is_negative()));
        }
    }
    entries.sort();
    for pair in entries.windows(2) {
        if !pair[1].0.mod_floor(&pair[0].0).is_zero() {
            return None;
        }
    }
    let rank = entries.len();
    let mut d = IntMatrix::zeros(rows, cols);
    for (k, (a, _, _, _)) in entries.iter().enumerate() {
        d.set(k, k, a.clone());
    }
    let row_order: Vec<usize> = entries
        .iter()
        .map(|&(_, i, _, _)| i)
        .chain((0..rows).filter(|i| row_col[*i].is_none()))
        .collect();
    let col_order: Vec<usize> = entries
        .iter()
        .map(|&(_, _, j, _)| j)
        .chain((0..cols).filter(|j| !col_taken[*j]))
        .collect();
    let sign = |k: usize| {
        if k < rank && entries[k].3 {
            BigInt::from(-1)
        } else {
            BigInt::one()
        }
    };
    let build = |wanted: bool, n: usize, f: &dyn Fn(&mut IntMatrix, usize)| {
        wanted.then(|| {
            let mut t = IntMatrix::zeros(n, n);
            for k in 0..n {
                f(&mut t, k);
            }
            t
        })
    };
    let u = build(need.u, rows, &|t, k| t.set(k, row_order[k], sign(k)));
    let u_inv = build(need.u_inv, rows, &|t, k| t.set(row_order[k], k, sign(k)));
    let v = build(need.v, cols, &|t, k| t.set(col_order[k], k, BigInt::one()));
    Some(RawSnf {
        d,
        rank,
        u,
        v,
        u_inv,
    })
}

pub(crate) fn snf_engine(m: &IntMatrix, need: SnfNeed) -> RawSnf {
    if let Some(raw) = monomial_fast_path(m, need) {
        return raw;
    }
    let rows = m.rows();
    let cols = m.cols();
    let mut w = Work {
        d: m.clone(),
        u: need.u.then(|| IntMatrix::identity(rows)),
        v: need.v.then(|| IntMatrix::identity(cols)),
        u_inv: need.u_inv.then(|| IntMatrix::identity(rows)),
    };

    let mut t = 0;
    while t < rows && t < cols {
        let Some((pi, pj)) = find_pivot(&w.d, t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        'outer: loop {
            // Clear column t below the pivot.
            for i in t + 1..rows {
                if w.d.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = w.d.get(i, t).div_mod_floor(w.d.get(t, t));
                let neg_q = -q;
                w.add_mul_row(i, t, &neg_q);
                if !r.is_zero() {
                    // Remainder is strictly smaller than the pivot; promote it.
                    w.swap_rows(t, i);
                    continue 'outer;
                }
            }
            // Clear row t to the right of the pivot.
            for j in t + 1..cols {
                if w.d.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = w.d.get(t, j).div_mod_floor(w.d.get(t, t));
                let neg_q = -q;
                w.add_mul_col(j, t, &neg_q);
                if !r.is_zero() {
                    w.swap_cols(t, j);
                    continue 'outer;
                }
            }
            // Enforce divisibility of the trailing submatrix by the pivot.
            let pivot = w.d.get(t, t).clone();
            let mut culprit = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !w.d.get(i, j).mod_floor(&pivot).is_zero() {
                        culprit = Some(i);
                        break 'scan;
                    }
                }
            }
            match culprit {
                Some(i) => {
                    let one = BigInt::one();
                    w.add_mul_row(t, i, &one);
                }
                None => break,
            }
        }

        if w.d.get(t, t).is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }

    RawSnf {
        d: w.d,
        rank: t,
        u: w.u,
        v: w.v,
        u_inv: w.u_inv,
    }
}

/// Smith normal form with full transforms: `u * m * v = d`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let raw = snf_engine(
        m,
        SnfNeed {
            u: true,
            v: true,
            u_inv: false,
        },
    );
    SmithForm {
        d: raw.d,
        u: raw.u.unwrap(),
        v: raw.v.unwrap(),
        rank: raw.rank,
    }
}

/// The nonzero diagonal entries of the Smith form, in divisibility order.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let raw = snf_engine(m, SnfNeed::default());
    (0..raw.rank).map(|i| raw.d.get(i, i).clone()).collect()
}

/// Basis of the integer kernel `{x : m x = 0}`, as matrix columns.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let raw = snf_engine(
        m,
        SnfNeed {
            v: true,
            ..SnfNeed::default()
        },
    );
    let v = raw.v.unwrap();
    let idx: Vec<usize> = (raw.rank..m.cols()).collect();
    v.select_columns(&idx)
}

/// Precomputed Smith data for solving `m x = b` repeatedly.
pub struct SnfSolver {
    u: IntMatrix,
    v: IntMatrix,
    diag: Vec<BigInt>,
    rows: usize,
    cols: usize,
    rank: usize,
}

impl SnfSolver {
    pub fn new(m: &IntMatrix) -> Self {
        let raw = snf_engine(
            m,
            SnfNeed {
                u: true,
                v: true,
                ..SnfNeed::default()
            },
        );
        let diag = (0..raw.rank).map(|i| raw.d.get(i, i).clone()).collect();
        SnfSolver {
            u: raw.u.unwrap(),
            v: raw.v.unwrap(),
            diag,
            rows: m.rows(),
            cols: m.cols(),
            rank: raw.rank,
        }
    }

    /// Solves `m x = b` over the integers, columnwise; `None` if any column
    /// has no integral solution.
    pub fn solve(&self, b: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(b.rows(), self.rows, "rhs row mismatch");
        let ub = self.u.mul(b);
        let mut y = IntMatrix::zeros(self.cols, b.cols());
        for j in 0..b.cols() {
            for i in 0..self.rows {
                let e = ub.get(i, j);
                if i < self.rank {
                    let (q, r) = e.div_mod_floor(&self.diag[i]);
                    if !r.is_zero() {
                        return None;
                    }
                    if i < self.cols {
                        y.set(i, j, q);
                    }
                } else if !e.is_zero() {
                    return None;
                }
            }
        }
        Some(self.v.mul(&y))
    }
}

/// True when `m` is square with `|det| = 1`.
pub fn is_unimodular(m: &IntMatrix) -> bool {
    if m.rows() != m.cols() {
        return false;
    }
    let factors = invariant_factors(m);
    factors.len() == m.rows() && factors.iter().all(One::is_one)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_form(m: &IntMatrix) -> SmithForm {
        let f = smith_normal_form(m);
        assert_eq!(f.u.mul(m).mul(&f.v), f.d, "u*m*v != d");
        assert!(is_unimodular(&f.u), "u not unimodular");
        assert!(is_unimodular(&f.v), "v not unimodular");
        // Diagonal, nonnegative, divisibility chain.
        for i in 0..f.d.rows() {
            for j in 0..f.d.cols() {
                if i != j {
                    assert!(f.d.get(i, j).is_zero());
                }
            }
        }
        for i in 1..f.rank {
            let prev = f.d.get(i - 1, i - 1);
            let cur = f.d.get(i, i);
            assert!(cur.mod_floor(prev).is_zero(), "divisibility chain broken");
        }
        f
    }

    #[test]
    fn diag_2_3_gives_1_6() {
        let f = check_form(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(f.d, IntMatrix::from_rows(&[vec![1, 0], vec![0, 6]]));
    }

    #[test]
    fn two_by_two_with_content() {
        let f = check_form(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(f.d, IntMatrix::from_rows(&[vec![2, 0], vec![0, 4]]));
    }

    #[test]
    fn zero_and_empty() {
        let f = check_form(&IntMatrix::zeros(2, 3));
        assert_eq!(f.rank, 0);
        let f = check_form(&IntMatrix::zeros(0, 4));
        assert_eq!(f.rank, 0);
        assert_eq!(f.v.rows(), 4);
    }

    #[test]
    fn kernel_of_sum_map() {
        // ker(x + y) on Z^2 is generated by (1, -1).
        let k = kernel_basis(&IntMatrix::from_rows(&[vec![1, 1]]));
        assert_eq!(k.cols(), 1);
        let m = IntMatrix::from_rows(&[vec![1, 1]]);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn solver_roundtrip() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        let s = SnfSolver::new(&m);
        let b = IntMatrix::col_vec(&[6.into(), 14.into()]);
        let x = s.solve(&b).unwrap();
        assert_eq!(m.mul(&x), b);
        // 2x + 4y = 1 has no integer solution.
        let b = IntMatrix::col_vec(&[1.into(), 0.into()]);
        assert!(s.solve(&b).is_none());
    }
}
