use super::matrix::Matrix;
use super::ring::EuclideanRing;
use crate::error::{Error, Result};

/// Smith form `left * a * right = diag` with both transforms and their inverses.
#[derive(Clone, Debug)]
pub struct Smith<T> {
    pub diag: Matrix<T>,
    pub left: Matrix<T>,
    pub left_inv: Matrix<T>,
    pub right: Matrix<T>,
    pub right_inv: Matrix<T>,
    pub rank: usize,
}

impl<T: Clone + PartialEq> Smith<T> {
    /// Nonzero diagonal entries, each dividing the next, in canonical associate form.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.diag.get(i, i).clone()).collect()
    }
}

pub fn require_capable<R: EuclideanRing>(ring: &R) -> Result<()> {
    if ring.snf_capable() {
        Ok(())
    } else {
        Err(Error::Capability(format!(
            "Smith reduction is unavailable over {ring:?}"
        )))
    }
}

struct Reduction<'r, R: EuclideanRing> {
    ring: &'r R,
    a: Matrix<R::Elem>,
    track: bool,
    p: Matrix<R::Elem>,
    p_inv: Matrix<R::Elem>,
    q: Matrix<R::Elem>,
    q_inv: Matrix<R::Elem>,
}

impl<'r, R: EuclideanRing> Reduction<'r, R> {
    fn row_add(&mut self, target: usize, source: usize, c: &R::Elem) {
        let ring = self.ring;
        self.a.add_row_multiple(ring, target, source, c);
        if self.track {
            self.p.add_row_multiple(ring, target, source, c);
            self.p_inv.add_col_multiple(ring, source, target, &ring.neg(c));
        }
    }

    fn col_add(&mut self, target: usize, source: usize, c: &R::Elem) {
        let ring = self.ring;
        self.a.add_col_multiple(ring, target, source, c);
        if self.track {
            self.q.add_col_multiple(ring, target, source, c);
            self.q_inv.add_row_multiple(ring, source, target, &ring.neg(c));
        }
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if self.track {
            self.p.swap_rows(i, j);
            self.p_inv.swap_cols(i, j);
        }
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if self.track {
            self.q.swap_cols(i, j);
            self.q_inv.swap_rows(i, j);
        }
    }

    fn row_scale(&mut self, i: usize, unit: &R::Elem) {
        let ring = self.ring;
        self.a.scale_row(ring, i, unit);
        if self.track {
            let inv = ring.unit_inverse(unit).expect("scaling by a unit");
            self.p.scale_row(ring, i, unit);
            self.p_inv.scale_col(ring, i, &inv);
        }
    }

    /// Smallest Euclidean size in the trailing block; ties go to the lowest row, then column.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let ring = self.ring;
        let mut best: Option<(R::Size, usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a.get(i, j);
                if ring.is_zero(x) {
                    continue;
                }
                let s = ring.size(x);
                if best.as_ref().map_or(true, |(b, _, _)| s < *b) {
                    best = Some((s, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn run(&mut self) -> usize {
        let ring = self.ring;
        let (m, n) = self.a.shape();
        let mut t = 0;
        while t < m.min(n) {
            let Some((pi, pj)) = self.find_pivot(t) else { break };
            self.row_swap(t, pi);
            self.col_swap(t, pj);
            loop {
                let mut swapped = false;
                for i in t + 1..m {
                    if ring.is_zero(self.a.get(i, t)) {
                        continue;
                    }
                    let (q, r) = ring.div_rem(self.a.get(i, t), self.a.get(t, t));
                    self.row_add(i, t, &ring.neg(&q));
                    if !ring.is_zero(&r) {
                        self.row_swap(t, i);
                        swapped = true;
                    }
                }
                if swapped {
                    continue;
                }
                for j in t + 1..n {
                    if ring.is_zero(self.a.get(t, j)) {
                        continue;
                    }
                    let (q, r) = ring.div_rem(self.a.get(t, j), self.a.get(t, t));
                    self.col_add(j, t, &ring.neg(&q));
                    if !ring.is_zero(&r) {
                        self.col_swap(t, j);
                        swapped = true;
                    }
                }
                if swapped {
                    continue;
                }
                let offender = (t + 1..m).find(|&i| {
                    (t + 1..n).any(|j| !ring.divides(self.a.get(t, t), self.a.get(i, j)))
                });
                match offender {
                    Some(i) => self.row_add(t, i, &ring.one()),
                    None => break,
                }
            }
            let u = ring.normalizing_unit(self.a.get(t, t));
            if !ring.is_one(&u) {
                self.row_scale(t, &u);
            }
            t += 1;
        }
        t
    }
}

fn reduce<R: EuclideanRing>(ring: &R, a: &Matrix<R::Elem>, track: bool) -> Result<Smith<R::Elem>> {
    require_capable(ring)?;
    let (m, n) = a.shape();
    let ident = |k| if track { Matrix::identity(ring, k) } else { Matrix::zero(ring, 0, 0) };
    let mut red = Reduction {
        ring,
        a: a.clone(),
        track,
        p: ident(m),
        p_inv: ident(m),
        q: ident(n),
        q_inv: ident(n),
    };
    let rank = red.run();
    Ok(Smith { diag: red.a, left: red.p, left_inv: red.p_inv, right: red.q, right_inv: red.q_inv, rank })
}

/// Full Smith decomposition with transforms.
pub fn smith<R: EuclideanRing>(ring: &R, a: &Matrix<R::Elem>) -> Result<Smith<R::Elem>> {
    reduce(ring, a, true)
}

/// Invariant factors only (no transform bookkeeping).
pub fn invariant_factors<R: EuclideanRing>(ring: &R, a: &Matrix<R::Elem>) -> Result<Vec<R::Elem>> {
    Ok(reduce(ring, a, false)?.invariant_factors())
}

pub fn rank<R: EuclideanRing>(ring: &R, a: &Matrix<R::Elem>) -> Result<usize> {
    Ok(reduce(ring, a, false)?.rank)
}

/// Some `x` with `a * x = b`, or `None` when no solution exists over the ring.
pub fn solve<R: EuclideanRing>(
    ring: &R,
    a: &Matrix<R::Elem>,
    b: &Matrix<R::Elem>,
) -> Result<Option<Matrix<R::Elem>>> {
    if a.rows() != b.rows() {
        return Err(Error::Shape(format!("solve: {} rows vs {}", a.rows(), b.rows())));
    }
    let s = smith(ring, a)?;
    let pb = s.left.mul(ring, b);
    let mut y = Matrix::zero(ring, a.cols(), b.cols());
    for col in 0..b.cols() {
        for i in 0..a.rows() {
            let v = pb.get(i, col);
            if i < s.rank {
                match ring.exact_div(v, s.diag.get(i, i)) {
                    Some(q) => y.set(i, col, q),
                    None => return Ok(None),
                }
            } else if !ring.is_zero(v) {
                return Ok(None);
            }
        }
    }
    Ok(Some(s.right.mul(ring, &y)))
}

/// Columns form a basis of the kernel of `a` (a free module over a PID).
pub fn kernel_basis<R: EuclideanRing>(ring: &R, a: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    let s = smith(ring, a)?;
    let cols: Vec<usize> = (s.rank..a.cols()).collect();
    Ok(s.right.select_columns(&cols))
}

/// Columns form a basis of the column span of `a`.
pub fn image_basis<R: EuclideanRing>(ring: &R, a: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    let s = smith(ring, a)?;
    let mut out = s.left_inv.select_columns(&(0..s.rank).collect::<Vec<_>>());
    for j in 0..s.rank {
        out.scale_col(ring, j, s.diag.get(j, j));
    }
    Ok(out)
}

/// Inverse of a square matrix over the ring, `None` if it is not invertible.
pub fn inverse<R: EuclideanRing>(ring: &R, a: &Matrix<R::Elem>) -> Result<Option<Matrix<R::Elem>>> {
    if a.rows() != a.cols() {
        return Ok(None);
    }
    let s = smith(ring, a)?;
    if s.rank < a.rows() {
        return Ok(None);
    }
    let mut d_inv = Matrix::zero(ring, a.rows(), a.rows());
    for i in 0..a.rows() {
        match ring.unit_inverse(s.diag.get(i, i)) {
            Some(u) => d_inv.set(i, i, u),
            None => return Ok(None),
        }
    }
    Ok(Some(s.right.mul(ring, &d_inv).mul(ring, &s.left)))
}
