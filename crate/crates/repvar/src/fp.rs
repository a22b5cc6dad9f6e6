//! Dense exact linear algebra over a prime field, sized for the small
//! per-vertex blocks that arise from quiver representations.

/// Arithmetic context for `Z/p`. The modulus is assumed prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct PrimeField {
    pub p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> PrimeField {
        assert!(p >= 2, "modulus must be at least 2");
        PrimeField { p }
    }

    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "division by zero");
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        base %= self.p;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

/// A dense row-major matrix over `Z/p`. Entries are kept reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct FpMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u64>,
}

impl FpMat {
    pub fn zeros(rows: usize, cols: usize) -> FpMat {
        FpMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> FpMat {
        let mut m = FpMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &PrimeField, rows: &[Vec<i64>], cols: usize) -> FpMat {
        let mut m = FpMat::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged row");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, field.reduce(x));
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> FpMat {
        let mut t = FpMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn matmul(&self, other: &FpMat, field: &PrimeField) -> FpMat {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = FpMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, field.add(cur, field.mul(a, other.get(k, j))));
                }
            }
        }
        out
    }

    pub fn vstack(mats: &[&FpMat], cols: usize) -> FpMat {
        let rows = mats.iter().map(|m| m.rows).sum();
        let mut out = FpMat::zeros(rows, cols);
        let mut at = 0;
        for m in mats {
            assert_eq!(m.cols, cols, "shape mismatch");
            for i in 0..m.rows {
                for j in 0..cols {
                    out.set(at + i, j, m.get(i, j));
                }
            }
            at += m.rows;
        }
        out
    }

    /// In-place reduction to reduced row echelon form; returns the pivot
    /// columns (one per nonzero row, in order).
    pub fn rref(&mut self, field: &PrimeField) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = field.inv(self.get(r, c));
            for j in c..self.cols {
                self.set(r, j, field.mul(self.get(r, j), inv));
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) != 0 {
                    let f = self.get(i, c);
                    for j in c..self.cols {
                        let x = field.sub(self.get(i, j), field.mul(f, self.get(r, j)));
                        self.set(i, j, x);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let x = self.get(a, j);
            let y = self.get(b, j);
            self.set(a, j, y);
            self.set(b, j, x);
        }
    }

    pub fn rank(&self, field: &PrimeField) -> usize {
        let mut m = self.clone();
        m.rref(field).len()
    }

    /// A basis for `{x : M x = 0}`, returned as rows of the output matrix.
    pub fn nullspace(&self, field: &PrimeField) -> FpMat {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = FpMat::zeros(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                let coeff = m.get(r, fc);
                if coeff != 0 {
                    out.set(k, pc, field.sub(0, coeff));
                }
            }
        }
        out
    }

    /// Row-space basis in reduced echelon form (zero rows dropped).
    pub fn row_basis(&self, field: &PrimeField) -> FpMat {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let mut out = FpMat::zeros(pivots.len(), self.cols);
        for i in 0..pivots.len() {
            for j in 0..self.cols {
                out.set(i, j, m.get(i, j));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: PrimeField = PrimeField { p: 2_147_483_647 };

    #[test]
    fn field_ops() {
        assert_eq!(F.reduce(-1), F.p - 1);
        assert_eq!(F.mul(F.p - 1, F.p - 1), 1);
        let a = 123_456_789;
        assert_eq!(F.mul(a, F.inv(a)), 1);
    }

    #[test]
    fn rank_and_nullspace() {
        let m = FpMat::from_rows(&F, &[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]], 3);
        assert_eq!(m.rank(&F), 2);
        let ns = m.nullspace(&F);
        assert_eq!(ns.rows, 1);
        // every kernel row is annihilated
        let prod = m.matmul(&ns.transpose(), &F);
        assert!((0..prod.rows).all(|i| (0..prod.cols).all(|j| prod.get(i, j) == 0)));
    }

    #[test]
    fn rref_identity() {
        let mut m = FpMat::from_rows(&F, &[vec![2, 0], vec![1, 1]], 2);
        let pivots = m.rref(&F);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(m, FpMat::identity(2));
    }

    #[test]
    fn row_basis_drops_dependent_rows() {
        let m = FpMat::from_rows(&F, &[vec![1, 1], vec![2, 2], vec![1, 0]], 2);
        let b = m.row_basis(&F);
        assert_eq!(b.rows, 2);
        assert_eq!(b, FpMat::identity(2));
    }

    #[test]
    fn nullspace_of_zero_map_is_everything() {
        let m = FpMat::zeros(0, 3);
        let ns = m.nullspace(&F);
        assert_eq!(ns.rows, 3);
        assert_eq!(ns, FpMat::identity(3));
    }
}
