use super::ring::Ring;

/// Dense row-major matrix. Arithmetic takes the ring as an explicit context.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Self { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        Self { rows: r, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }
}

impl<T: Clone + PartialEq> Matrix<T> {
    pub fn zero<R: Ring<Elem = T>>(ring: &R, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, ring.zero())
    }

    pub fn identity<R: Ring<Elem = T>>(ring: &R, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn scalar<R: Ring<Elem = T>>(ring: &R, n: usize, c: &T) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { c.clone() } else { ring.zero() })
    }

    pub fn column_vector(v: Vec<T>) -> Self {
        let n = v.len();
        Self { rows: n, cols: 1, data: v }
    }

    pub fn is_zero<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.data.iter().all(|x| ring.is_zero(x))
    }

    pub fn mul<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zero(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = ring.add(&out.data[idx], &ring.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| ring.add(a, b)).collect(),
        }
    }

    pub fn sub<R: Ring<Elem = T>>(&self, ring: &R, other: &Self) -> Self {
        self.add(ring, &other.neg(ring))
    }

    pub fn neg<R: Ring<Elem = T>>(&self, ring: &R) -> Self {
        self.map(|x| ring.neg(x))
    }

    pub fn scale<R: Ring<Elem = T>>(&self, ring: &R, c: &T) -> Self {
        self.map(|x| ring.mul(c, x))
    }

    pub fn apply<R: Ring<Elem = T>>(&self, ring: &R, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = ring.zero();
                for (j, x) in v.iter().enumerate() {
                    if !ring.is_zero(x) {
                        acc = ring.add(&acc, &ring.mul(self.get(i, j), x));
                    }
                }
                acc
            })
            .collect()
    }

    /// `row[target] += c * row[source]`.
    pub fn add_row_multiple<R: Ring<Elem = T>>(&mut self, ring: &R, target: usize, source: usize, c: &T) {
        if ring.is_zero(c) {
            return;
        }
        for j in 0..self.cols {
            let s = self.get(source, j);
            if ring.is_zero(s) {
                continue;
            }
            let v = ring.add(self.get(target, j), &ring.mul(c, s));
            self.set(target, j, v);
        }
    }

    /// `col[target] += c * col[source]`.
    pub fn add_col_multiple<R: Ring<Elem = T>>(&mut self, ring: &R, target: usize, source: usize, c: &T) {
        if ring.is_zero(c) {
            return;
        }
        for i in 0..self.rows {
            let s = self.get(i, source);
            if ring.is_zero(s) {
                continue;
            }
            let v = ring.add(self.get(i, target), &ring.mul(s, c));
            self.set(i, target, v);
        }
    }

    pub fn scale_row<R: Ring<Elem = T>>(&mut self, ring: &R, i: usize, c: &T) {
        for j in 0..self.cols {
            let v = ring.mul(c, self.get(i, j));
            self.set(i, j, v);
        }
    }

    pub fn scale_col<R: Ring<Elem = T>>(&mut self, ring: &R, j: usize, c: &T) {
        for i in 0..self.rows {
            let v = ring.mul(self.get(i, j), c);
            self.set(i, j, v);
        }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        Self::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                other.get(i - self.rows, j).clone()
            }
        })
    }

    pub fn block_diag<R: Ring<Elem = T>>(ring: &R, blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zero(ring, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Block matrix from a grid of blocks; all blocks in a row share a height and
    /// all blocks in a column share a width.
    pub fn from_blocks<R: Ring<Elem = T>>(ring: &R, grid: &[Vec<Self>]) -> Self {
        let heights: Vec<usize> = grid.iter().map(|row| row[0].rows).collect();
        let widths: Vec<usize> = grid[0].iter().map(|b| b.cols).collect();
        let mut out = Self::zero(ring, heights.iter().sum(), widths.iter().sum());
        let mut r0 = 0;
        for (bi, row) in grid.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                assert_eq!(b.shape(), (heights[bi], widths[bj]), "block grid shape mismatch");
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(r0 + i, c0 + j, b.get(i, j).clone());
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        out
    }

    pub fn render<R: Ring<Elem = T>>(&self, ring: &R) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| ring.render(self.get(i, j))).collect())
            .collect()
    }
}
