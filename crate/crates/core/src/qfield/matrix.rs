use super::field::FieldElem;

/// Dense row-major matrix over Q(s).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<FieldElem>,
}

impl FMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FMatrix {
            rows,
            cols,
            entries: vec![FieldElem::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, FieldElem::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldElem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix rows");
        FMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElem {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElem) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        FMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&o.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul_vec(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = FieldElem::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows);
        let mut out = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + &(a * b);
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    /// Applies `f` entrywise.
    pub fn map<E>(&self, f: impl Fn(&FieldElem) -> Result<FieldElem, E>) -> Result<Self, E> {
        Ok(FMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Reduced row echelon form with pivots searched in `col_order`.
    /// Returns the reduced matrix (zero rows dropped) and the pivot columns.
    pub fn rref_with_order(&self, col_order: &[usize]) -> (Self, Vec<usize>) {
        let mut rows: Vec<Vec<FieldElem>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut next = 0;
        for &c in col_order {
            if next == rows.len() {
                break;
            }
            let Some(p) = (next..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
                continue;
            };
            rows.swap(next, p);
            let inv = rows[next][c].inv().expect("nonzero pivot");
            for v in rows[next].iter_mut() {
                if !v.is_zero() {
                    *v = &*v * &inv;
                }
            }
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || row[c].is_zero() {
                    continue;
                }
                let factor = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *v = &*v - &(&factor * p);
                    }
                }
            }
            pivots.push(c);
            next += 1;
        }
        rows.truncate(next);
        let cols = self.cols;
        let m = if rows.is_empty() {
            FMatrix::zeros(0, cols)
        } else {
            FMatrix::from_rows(rows)
        };
        (m, pivots)
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_with_order(&order)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

/// Canonical basis of the right null space: one vector per free column,
/// with a 1 in that column and zeros in the other free columns.
pub fn kernel_basis(m: &FMatrix) -> Vec<Vec<FieldElem>> {
    let (r, pivots) = m.rref();
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![FieldElem::zero(); m.cols()];
            v[fc] = FieldElem::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, fc);
            }
            v
        })
        .collect()
}

/// Rank of a list of vectors of equal length.
pub fn span_rank(vectors: &[Vec<FieldElem>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    FMatrix::from_rows(vectors.to_vec()).rank()
}

/// True when `v` lies in the span of `basis`.
pub fn in_span(basis: &[Vec<FieldElem>], v: &[FieldElem]) -> bool {
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    span_rank(&all) == span_rank(basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_zero_kernels() {
        assert!(kernel_basis(&FMatrix::identity(2)).is_empty());
        assert_eq!(kernel_basis(&FMatrix::zeros(2, 2)).len(), 2);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let q = FieldElem::q();
        let m = FMatrix::from_rows(vec![
            vec![FieldElem::one(), q.clone(), FieldElem::zero()],
            vec![q.clone(), &q * &q, FieldElem::one()],
        ]);
        let k = kernel_basis(&m);
        assert_eq!(k.len() + m.rank(), 3);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }
}
