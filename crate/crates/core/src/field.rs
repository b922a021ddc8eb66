//! Arithmetic in `GF(p)`, dense matrices, row reduction and seeded randomness.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A field element, always reduced into `[0, p)`.
pub type Scalar = u32;

/// A prime field together with the master seed of every random draw made
/// against it. Immutable once built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldCtx {
    p: u32,
    seed: u64,
}

impl FieldCtx {
    pub const DEFAULT_PRIME: u32 = 32003;

    /// Builds `GF(p)`; `p = 2` is refused.
    pub fn new(p: u64, seed: u64) -> Result<Self> {
        Self::with_options(p, seed, false)
    }

    /// Like [`FieldCtx::new`] but with the characteristic-2 override exposed.
    pub fn with_options(p: u64, seed: u64, allow_char_two: bool) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p == 2 && !allow_char_two {
            return Err(Error::CharTwoDisallowed);
        }
        if p >= 1 << 31 {
            return Err(Error::PrimeTooLarge(p));
        }
        Ok(FieldCtx { p: p as u32, seed })
    }

    pub fn default_with_seed(seed: u64) -> Self {
        FieldCtx { p: Self::DEFAULT_PRIME, seed }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Same field, different master seed.
    pub fn reseeded(&self, seed: u64) -> Self {
        FieldCtx { p: self.p, seed }
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as Scalar
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        if a >= b {
            a - b
        } else {
            a + (self.p - b)
        }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u64 * b as u64) % self.p as u64) as Scalar
    }

    pub fn pow(&self, mut base: Scalar, mut exp: u64) -> Scalar {
        let mut acc: Scalar = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: Scalar) -> Scalar {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// Reduces an arbitrary integer into `[0, p)`.
    pub fn reduce(&self, v: i64) -> Scalar {
        v.rem_euclid(self.p as i64) as Scalar
    }

    /// `a + c * b`, the row-operation kernel.
    #[inline]
    pub fn mul_add(&self, a: Scalar, c: Scalar, b: Scalar) -> Scalar {
        ((a as u64 + c as u64 * b as u64) % self.p as u64) as Scalar
    }

    /// Deterministic generator for one stream of the master seed.
    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        let key = splitmix64(splitmix64(self.seed) ^ stream.wrapping_mul(0xD1B5_4A32_D192_ED03));
        ChaCha8Rng::seed_from_u64(key)
    }

    /// `n` uniform scalars, a pure function of `(seed, stream)`.
    pub fn random_vector(&self, n: usize, stream: u64) -> Vec<Scalar> {
        let mut rng = self.rng(stream);
        (0..n).map(|_| rng.gen_range(0..self.p)).collect()
    }

    /// A uniform nonzero scalar drawn from `rng`.
    pub fn random_nonzero<R: Rng>(&self, rng: &mut R) -> Scalar {
        rng.gen_range(1..self.p)
    }
}

/// The SplitMix64 finalizer; used to derive independent per-trial streams.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense row-major matrix over `GF(p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Entries must already be reduced mod `p`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(cols: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { rows: rows.len(), cols, data })
    }

    /// Builds from signed integers, reducing each entry mod `p`.
    pub fn from_i64(ctx: &FieldCtx, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        let data = entries.iter().map(|&v| ctx.reduce(v)).collect();
        Self::from_vec(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn push_row(&mut self, row: &[Scalar]) -> Result<()> {
        if row.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: row.len() });
        }
        self.data.extend_from_slice(row);
        self.rows += 1;
        Ok(())
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }
}

/// Reduced row-echelon form with the zero rows dropped.
///
/// Pivots are chosen as the first nonzero entry while scanning columns left to
/// right, so the result is canonical for the row space.
pub fn rref(ctx: &FieldCtx, m: &Matrix) -> (usize, Matrix) {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.data.clone();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if piv != rank {
            for c in 0..cols {
                a.swap(piv * cols + c, rank * cols + c);
            }
        }
        let inv = ctx.inv(a[rank * cols + col]);
        for c in col..cols {
            a[rank * cols + c] = ctx.mul(a[rank * cols + c], inv);
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let f = a[r * cols + col];
            if f == 0 {
                continue;
            }
            let f = ctx.neg(f);
            for c in col..cols {
                let v = a[rank * cols + c];
                if v != 0 {
                    a[r * cols + c] = ctx.mul_add(a[r * cols + c], f, v);
                }
            }
        }
        rank += 1;
    }
    a.truncate(rank * cols);
    (rank, Matrix { rows: rank, cols, data: a })
}

/// Incrementally built row space: every stored row is normalized at its pivot
/// (its first nonzero entry) and vanishes at the pivots of all earlier rows.
///
/// Reducing a vector against the rows in insertion order clears every pivot
/// column, which is what both the rank tests and the normal forms need.
#[derive(Debug, Clone)]
pub struct RowSpace {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
    is_pivot: Vec<bool>,
}

impl RowSpace {
    pub fn new(cols: usize) -> Self {
        RowSpace { cols, rows: Vec::new(), pivots: Vec::new(), is_pivot: vec![false; cols] }
    }

    /// Wraps a matrix already in reduced row-echelon form (no zero rows).
    pub fn from_rref(m: &Matrix) -> Self {
        let mut rs = RowSpace::new(m.cols());
        for row in m.row_iter() {
            let piv = row.iter().position(|&x| x != 0).expect("rref rows are nonzero");
            debug_assert_eq!(row[piv], 1);
            rs.rows.push(row.to_vec());
            rs.pivots.push(piv);
            rs.is_pivot[piv] = true;
        }
        rs
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.is_pivot[col]
    }

    /// Clears the pivot columns of `v` in place.
    pub fn reduce(&self, ctx: &FieldCtx, v: &mut [Scalar]) {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let f = v[piv];
            if f == 0 {
                continue;
            }
            let f = ctx.neg(f);
            for (x, &y) in v[piv..].iter_mut().zip(&row[piv..]) {
                if y != 0 {
                    *x = ctx.mul_add(*x, f, y);
                }
            }
        }
    }

    /// Adds `v` to the space; returns whether the rank grew.
    pub fn insert(&mut self, ctx: &FieldCtx, mut v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        self.reduce(ctx, &mut v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = ctx.inv(v[piv]);
        for x in v[piv..].iter_mut() {
            *x = ctx.mul(*x, inv);
        }
        self.rows.push(v);
        self.pivots.push(piv);
        self.is_pivot[piv] = true;
        true
    }

    /// Canonical reduced row-echelon basis of the space.
    pub fn to_rref(&self, ctx: &FieldCtx) -> Matrix {
        let m = Matrix::from_rows(self.cols, &self.rows).expect("rows have uniform width");
        rref(ctx, &m).1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldCtx {
        FieldCtx::new(p, 7).unwrap()
    }

    #[test]
    fn make_field_accepts_default_prime() {
        let ctx = FieldCtx::new(32003, 7).unwrap();
        assert_eq!(ctx.p(), 32003);
        assert_eq!(ctx.seed(), 7);
    }

    #[test]
    fn make_field_rejects_composites_and_char_two() {
        assert_eq!(FieldCtx::new(6, 0), Err(Error::NotPrime(6)));
        assert_eq!(FieldCtx::new(1, 0), Err(Error::NotPrime(1)));
        assert_eq!(FieldCtx::new(2, 0), Err(Error::CharTwoDisallowed));
        assert!(FieldCtx::with_options(2, 0, true).is_ok());
    }

    #[test]
    fn rref_examples() {
        let ctx = gf(32003);
        let (r, b) = rref(&ctx, &Matrix::identity(3));
        assert_eq!(r, 3);
        assert_eq!(b, Matrix::identity(3));

        let (r, b) = rref(&ctx, &Matrix::zeros(2, 4));
        assert_eq!(r, 0);
        assert_eq!(b.rows(), 0);

        let ctx5 = gf(5);
        let m = Matrix::from_i64(&ctx5, 2, 2, &[1, 2, 2, 4]).unwrap();
        let (r, b) = rref(&ctx5, &m);
        assert_eq!(r, 1);
        assert_eq!(b.row(0), &[1, 2]);
    }

    #[test]
    fn rref_of_negative_entries() {
        let ctx = gf(7);
        let m = Matrix::from_i64(&ctx, 2, 3, &[0, 2, -1, 3, 1, 1]).unwrap();
        let (r, b) = rref(&ctx, &m);
        assert_eq!(r, 2);
        // y = -3z from the second row, then 3x = -y - z = 2z, so x = 3z.
        assert_eq!(b.row(0), &[1, 0, 4]);
        assert_eq!(b.row(1), &[0, 1, 3]);
    }

    #[test]
    fn random_vector_is_deterministic_per_stream() {
        let ctx = gf(32003);
        assert_eq!(ctx.random_vector(8, 3), ctx.random_vector(8, 3));
        assert_ne!(ctx.random_vector(8, 3), ctx.random_vector(8, 4));
        assert_ne!(ctx.random_vector(8, 3), ctx.reseeded(8).random_vector(8, 3));
        let small = gf(3);
        for s in 0..50 {
            assert!(small.random_vector(1, s)[0] < 3);
        }
    }

    #[test]
    fn random_streams_rarely_collide() {
        // Collisions between distinct streams happen with probability p^-n.
        let ctx = gf(3);
        let draws: Vec<_> = (0..400).map(|s| ctx.random_vector(12, s)).collect();
        let mut distinct = draws.clone();
        distinct.sort();
        distinct.dedup();
        assert!(distinct.len() >= 399);
    }

    #[test]
    fn row_space_matches_rref() {
        let ctx = gf(11);
        let rows = [vec![0, 1, 1, 2], vec![1, 1, 0, 3], vec![1, 2, 1, 5], vec![0, 0, 0, 0]];
        let mut rs = RowSpace::new(4);
        for r in &rows {
            rs.insert(&ctx, r.clone());
        }
        let (rank, basis) = rref(&ctx, &Matrix::from_rows(4, &rows).unwrap());
        assert_eq!(rs.rank(), rank);
        assert_eq!(rs.to_rref(&ctx), basis);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
            (1usize..6, 1usize..7).prop_flat_map(|(r, c)| {
                (Just(r), Just(c), proptest::collection::vec(-20i64..20, r * c))
            })
        }

        proptest! {
            #[test]
            fn rref_is_idempotent((r, c, e) in small_matrix()) {
                let ctx = FieldCtx::new(13, 0).unwrap();
                let m = Matrix::from_i64(&ctx, r, c, &e).unwrap();
                let (rank, basis) = rref(&ctx, &m);
                let (rank2, basis2) = rref(&ctx, &basis);
                prop_assert_eq!(rank, rank2);
                prop_assert_eq!(basis, basis2);
            }

            #[test]
            fn row_space_invariance((r, c, e) in small_matrix(), coeffs in proptest::collection::vec(0u32..13, 6)) {
                let ctx = FieldCtx::new(13, 0).unwrap();
                let m = Matrix::from_i64(&ctx, r, c, &e).unwrap();
                let mut combo = vec![0u32; c];
                for (i, row) in m.row_iter().enumerate() {
                    for (x, &y) in combo.iter_mut().zip(row) {
                        *x = ctx.mul_add(*x, coeffs[i], y);
                    }
                }
                let mut aug = m.clone();
                aug.push_row(&combo).unwrap();
                prop_assert_eq!(rref(&ctx, &m), rref(&ctx, &aug));
            }

            #[test]
            fn inverses(a in 1u32..32003) {
                let ctx = FieldCtx::new(32003, 0).unwrap();
                prop_assert_eq!(ctx.mul(a, ctx.inv(a)), 1);
            }
        }
    }
}
