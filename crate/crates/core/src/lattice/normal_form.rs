use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{IntMatrix, LatticeError};

/// Row Hermite normal form `transform · A = form`.
///
/// The first `pivots.len()` rows of `form` are nonzero, each pivot is
/// positive, pivot columns strictly increase, and entries above a pivot lie
/// in `[0, pivot)`. The remaining rows are zero and the matching rows of
/// `transform` span the left kernel of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowEchelon {
    pub form: IntMatrix,
    pub transform: IntMatrix,
    pub pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn hermite_normal_form(a: &IntMatrix) -> RowEchelon {
    let (m, n) = a.shape();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut pivots = Vec::new();
    let mut r = 0;

    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            // smallest nonzero |entry| in column c at or below row r
            let best = (r..m)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&i, &j| h[(i, c)].abs().cmp(&h[(j, c)].abs()));
            let Some(best) = best else { break };
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            let mut clean = true;
            for i in r + 1..m {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = h[(i, c)].div_floor(&h[(r, c)]);
                h.add_row_multiple(i, r, &-&q);
                u.add_row_multiple(i, r, &-&q);
                if !h[(i, c)].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            h.add_row_multiple(i, r, &-&q);
            u.add_row_multiple(i, r, &-&q);
        }
        pivots.push(c);
        r += 1;
    }

    RowEchelon {
        form: h,
        transform: u,
        pivots,
    }
}

/// Basis (as rows) of the integer kernel `{z : A z = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let echelon = hermite_normal_form(&a.transpose());
    (echelon.rank()..a.cols())
        .map(|i| echelon.transform.row(i).to_vec())
        .collect()
}

/// One integer solution of `A z = b`, or `None` when no integer solution exists.
pub fn solve_integer_system(a: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<BigInt>>, LatticeError> {
    if b.len() != a.rows() {
        return Err(LatticeError::DimensionMismatch(format!(
            "right-hand side of length {} against {} rows",
            b.len(),
            a.rows()
        )));
    }
    // U·Aᵀ = H  ⇒  A·Uᵀ = Hᵀ, a column echelon form C with pivots from H.
    let echelon = hermite_normal_form(&a.transpose());
    let c = echelon.form.transpose();
    let v = echelon.transform.transpose();
    let rank = echelon.rank();

    let mut w = vec![BigInt::zero(); a.cols()];
    for j in 0..rank {
        let p = echelon.pivots[j];
        let mut rest = b[p].clone();
        for (l, wl) in w.iter().enumerate().take(j) {
            rest -= &c[(p, l)] * wl;
        }
        let (q, rem) = rest.div_rem(&c[(p, j)]);
        if !rem.is_zero() {
            return Ok(None);
        }
        w[j] = q;
    }
    if c.mul_vec(&w)? != b {
        return Ok(None);
    }
    Ok(Some(v.mul_vec(&w)?))
}

/// Smith normal form `left · A · right = diag(diagonal)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmithForm {
    #[serde(with = "crate::serde_dec::vec")]
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|x| !x.is_zero()).count()
    }

    /// Invariant factors different from 1, i.e. the torsion part of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|x| !x.is_zero() && *x != &BigInt::from(1))
            .cloned()
            .collect()
    }

    /// Free rank of the cokernel `Z^rows / A·Z^cols`.
    pub fn free_rank(&self) -> usize {
        self.left.rows() - self.rank()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Result<SmithForm, LatticeError> {
    if a.is_empty() {
        return Err(LatticeError::Empty);
    }
    let (m, n) = a.shape();
    let mut d = a.clone();
    let mut left = IntMatrix::identity(m);
    let mut right = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        let Some((pi, pj)) = min_abs_entry(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        left.swap_rows(t, pi);
        d.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row_multiple(i, t, &-&q);
                left.add_row_multiple(i, t, &-&q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col_multiple(j, t, &-&q);
                right.add_col_multiple(j, t, &-&q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                // a smaller remainder is left in row or column t; make it the pivot
                let (bi, bj) = min_abs_cross(&d, t);
                d.swap_rows(t, bi);
                left.swap_rows(t, bi);
                d.swap_cols(t, bj);
                right.swap_cols(t, bj);
                continue;
            }
            // divisibility: fold an offending row into row t and repeat
            let offending = (t + 1..m).find(|&i| {
                (t + 1..n).any(|j| !d[(i, j)].mod_floor(&d[(t, t)]).is_zero())
            });
            match offending {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::from(1));
                    left.add_row_multiple(t, i, &BigInt::from(1));
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
    }

    let diagonal = (0..m.min(n)).map(|i| d[(i, i)].clone()).collect();
    Ok(SmithForm {
        diagonal,
        left,
        right,
    })
}

fn min_abs_entry(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let (m, n) = d.shape();
    let mut best: Option<(usize, usize)> = None;
    for i in t..m {
        for j in t..n {
            if d[(i, j)].is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row t or column t (beyond the pivot).
fn min_abs_cross(d: &IntMatrix, t: usize) -> (usize, usize) {
    let (m, n) = d.shape();
    let candidates = (t + 1..m)
        .map(|i| (i, t))
        .chain((t + 1..n).map(|j| (t, j)))
        .filter(|&(i, j)| !d[(i, j)].is_zero());
    candidates
        .min_by(|&a, &b| d[a].abs().cmp(&d[b].abs()))
        .unwrap_or((t, t))
}
