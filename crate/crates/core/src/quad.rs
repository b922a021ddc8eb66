//! Linear and quadratic forms, quadratic ideals and the graded pieces of
//! `k[x_1, ..., x_n] / I`.
//!
//! Variables are 1-based in every public signature. Degree-two monomials
//! `x_i x_j` (`i <= j`) are indexed in lexicographic pair order
//! `(1,1), (1,2), ..., (1,n), (2,2), ..., (n,n)`, and a quadratic form stores
//! the full coefficient of each monomial (so `(x_1 + x_2)^2` has a `2` at
//! `x_1 x_2`).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{rref, FieldCtx, Matrix, RowSpace, Scalar};

/// Largest graded piece (in monomials) that will be materialized.
pub const MAX_PIECE_DIM: usize = 6000;

/// Number of degree-two monomials in `n` variables, `n(n+1)/2`.
pub fn quad_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Position of `x_i x_j` (1-based, `i <= j`) among the `n(n+1)/2` degree-two
/// monomials.
pub fn pair_index(i: usize, j: usize, n: usize) -> Result<usize> {
    if i < 1 || i > j || j > n {
        return Err(Error::OutOfRange(format!("pair ({i}, {j}) with n = {n}")));
    }
    Ok((i - 1) * n - (i - 1) * (i.saturating_sub(2)) / 2 + (j - i))
}

// 0-based, no checks; hot path.
#[inline]
fn pair_idx0(i: usize, j: usize, n: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * n - i * (i + 1) / 2 + j
}

/// The pair `(i, j)` (1-based) at a given degree-two index.
pub fn pair_at(index: usize, n: usize) -> (usize, usize) {
    let mut start = 0;
    for i in 0..n {
        let len = n - i;
        if index < start + len {
            return (i + 1, i + 1 + index - start);
        }
        start += len;
    }
    panic!("pair index {index} out of range for n = {n}");
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LinearForm {
    coeffs: Vec<Scalar>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        LinearForm { coeffs }
    }

    /// Reduces signed integer coefficients into the field.
    pub fn from_i64(ctx: &FieldCtx, coeffs: &[i64]) -> Self {
        LinearForm { coeffs: coeffs.iter().map(|&c| ctx.reduce(c)).collect() }
    }

    pub fn zero(n: usize) -> Self {
        LinearForm { coeffs: vec![0; n] }
    }

    /// The coordinate form `x_j`.
    pub fn var(n: usize, j: usize) -> Result<Self> {
        if j < 1 || j > n {
            return Err(Error::OutOfRange(format!("variable {j} with n = {n}")));
        }
        let mut f = Self::zero(n);
        f.coeffs[j - 1] = 1;
        Ok(f)
    }

    /// `sum of x_j` over the given 1-based variables, each with coefficient one.
    pub fn sum_of(n: usize, vars: &[usize]) -> Result<Self> {
        let mut f = Self::zero(n);
        for &j in vars {
            if j < 1 || j > n {
                return Err(Error::OutOfRange(format!("variable {j} with n = {n}")));
            }
            f.coeffs[j - 1] = 1;
        }
        Ok(f)
    }

    pub fn random(ctx: &FieldCtx, n: usize, stream: u64) -> Self {
        LinearForm { coeffs: ctx.random_vector(n, stream) }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Scalar {
        self.coeffs[j - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, ctx: &FieldCtx, other: &LinearForm) -> Result<LinearForm> {
        same_n(self.n(), other.n())?;
        Ok(LinearForm {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| ctx.add(a, b)).collect(),
        })
    }

    pub fn scale(&self, ctx: &FieldCtx, c: Scalar) -> LinearForm {
        LinearForm { coeffs: self.coeffs.iter().map(|&a| ctx.mul(a, c)).collect() }
    }

    /// Support as 1-based variable indices.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&j| self.coeffs[j - 1] != 0).collect()
    }

    /// Concatenates coefficient blocks: `self` on the first variables, `other`
    /// on the following ones.
    pub fn concat(&self, other: &LinearForm) -> LinearForm {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend_from_slice(&other.coeffs);
        LinearForm { coeffs }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c == 1 {
                write!(f, "x{}", j + 1)?;
            } else {
                write!(f, "{c}*x{}", j + 1)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadForm {
    n: usize,
    coeffs: Vec<Scalar>,
}

impl QuadForm {
    pub fn zero(n: usize) -> Self {
        QuadForm { n, coeffs: vec![0; quad_dim(n)] }
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != quad_dim(n) {
            return Err(Error::DimensionMismatch { expected: quad_dim(n), found: coeffs.len() });
        }
        Ok(QuadForm { n, coeffs })
    }

    /// The monomial `x_i x_j` (1-based, any order).
    pub fn monomial(n: usize, i: usize, j: usize) -> Result<Self> {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        let mut q = Self::zero(n);
        q.coeffs[pair_index(i, j, n)?] = 1;
        Ok(q)
    }

    /// Sum of `c * x_i x_j` terms; coefficients are reduced mod `p` and
    /// repeated monomials accumulate.
    pub fn from_terms(ctx: &FieldCtx, n: usize, terms: &[(usize, usize, i64)]) -> Result<Self> {
        let mut q = Self::zero(n);
        for &(i, j, c) in terms {
            let (i, j) = if i <= j { (i, j) } else { (j, i) };
            let k = pair_index(i, j, n)?;
            q.coeffs[k] = ctx.add(q.coeffs[k], ctx.reduce(c));
        }
        Ok(q)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    /// Coefficient of `x_i x_j` (1-based, `i <= j`).
    pub fn coeff(&self, i: usize, j: usize) -> Scalar {
        self.coeffs[pair_index(i, j, self.n).expect("valid pair")]
    }

    /// Nonzero terms `(i, j, c)`, 1-based.
    pub fn terms(&self) -> Vec<(usize, usize, Scalar)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| {
                let (i, j) = pair_at(k, self.n);
                (i, j, c)
            })
            .collect()
    }
}

fn same_n(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// The product of two linear forms as a quadratic form.
pub fn mul_lin_lin(ctx: &FieldCtx, a: &LinearForm, b: &LinearForm) -> Result<QuadForm> {
    same_n(a.n(), b.n())?;
    let mut q = QuadForm::zero(a.n());
    mul_lin_lin_into(ctx, a.coeffs(), b.coeffs(), &mut q.coeffs);
    Ok(q)
}

pub(crate) fn mul_lin_lin_into(ctx: &FieldCtx, a: &[Scalar], b: &[Scalar], out: &mut [Scalar]) {
    let n = a.len();
    let mut k = 0;
    for i in 0..n {
        out[k] = ctx.mul(a[i], b[i]);
        k += 1;
        for j in i + 1..n {
            let v = (a[i] as u64 * b[j] as u64 + a[j] as u64 * b[i] as u64) % ctx.p() as u64;
            out[k] = v as Scalar;
            k += 1;
        }
    }
}

/// `l * x_j` for the 1-based variable `j`.
pub fn mul_lin_var(_ctx: &FieldCtx, l: &LinearForm, j: usize) -> Result<QuadForm> {
    let n = l.n();
    if j < 1 || j > n {
        return Err(Error::OutOfRange(format!("variable {j} with n = {n}")));
    }
    let mut q = QuadForm::zero(n);
    mul_lin_var_into(l.coeffs(), j - 1, &mut q.coeffs);
    Ok(q)
}

pub(crate) fn mul_lin_var_into(l: &[Scalar], j: usize, out: &mut [Scalar]) {
    let n = l.len();
    for (i, &c) in l.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        out[pair_idx0(a, b, n)] = c;
    }
}

/// A monomial as its sorted list of 0-based variable indices (with
/// repetition); the list length is the degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Exponent vector of length `n`.
    pub fn exponents(&self, n: usize) -> Vec<u32> {
        let mut e = vec![0; n];
        for &v in &self.0 {
            e[v as usize] += 1;
        }
        e
    }

    pub fn times_var(&self, var: usize) -> Monomial {
        let mut v = self.0.clone();
        let pos = v.partition_point(|&x| (x as usize) <= var);
        v.insert(pos, var as u16);
        Monomial(v)
    }

    fn times_pair(&self, a: usize, b: usize) -> Monomial {
        self.times_var(a).times_var(b)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() {
            if j == other.0.len() {
                return false;
            }
            match self.0[i].cmp(&other.0[j]) {
                core::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Less => return false,
            }
        }
        true
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        while i < self.0.len() {
            let v = self.0[i];
            let mut e = 0;
            while i < self.0.len() && self.0[i] == v {
                e += 1;
                i += 1;
            }
            if e == 1 {
                write!(f, "x{}", v + 1)?;
            } else {
                write!(f, "x{}^{e}", v + 1)?;
            }
        }
        Ok(())
    }
}

/// All monomials of degree `d` in `n` variables, largest first in
/// lexicographic order (`x_1^d` comes first).
pub fn monomials(n: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    let mut cur = Vec::with_capacity(d);
    fn rec(n: usize, d: usize, start: usize, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if cur.len() == d {
            out.push(Monomial(cur.clone()));
            return;
        }
        for v in start..n {
            cur.push(v as u16);
            rec(n, d, v, cur, out);
            cur.pop();
        }
    }
    rec(n, d, 0, &mut cur, &mut out);
    out
}

/// The degree-two piece `I_2` of a quadratic ideal, kept as a reduced
/// row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadIdeal {
    n: usize,
    basis: Matrix,
}

impl QuadIdeal {
    /// The zero ideal (polynomial ring).
    pub fn zero(n: usize) -> Self {
        QuadIdeal { n, basis: Matrix::zeros(0, quad_dim(n)) }
    }

    /// `I_2 = m^2`: every quadratic monomial.
    pub fn full(n: usize) -> Self {
        QuadIdeal { n, basis: Matrix::identity(quad_dim(n)) }
    }

    /// The span of the given forms.
    pub fn span(ctx: &FieldCtx, n: usize, forms: &[QuadForm]) -> Result<Self> {
        let mut m = Matrix::zeros(0, quad_dim(n));
        for q in forms {
            same_n(n, q.n())?;
            m.push_row(q.coeffs())?;
        }
        let (_, basis) = rref(ctx, &m);
        Ok(QuadIdeal { n, basis })
    }

    /// Monomial ideal generated by `x_i x_j` for the given 1-based pairs.
    pub fn from_monomials(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut idx = Vec::with_capacity(pairs.len());
        for &(i, j) in pairs {
            let (i, j) = if i <= j { (i, j) } else { (j, i) };
            idx.push(pair_index(i, j, n)?);
        }
        idx.sort_unstable();
        idx.dedup();
        let cols = quad_dim(n);
        let mut basis = Matrix::zeros(0, cols);
        let mut row = vec![0; cols];
        for k in idx {
            row[k] = 1;
            basis.push_row(&row)?;
            row[k] = 0;
        }
        Ok(QuadIdeal { n, basis })
    }

    /// `(x_1^2, ..., x_n^2)`.
    pub fn squares(n: usize) -> Self {
        let pairs: Vec<_> = (1..=n).map(|i| (i, i)).collect();
        Self::from_monomials(n, &pairs).expect("valid pairs")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `t = dim I_2`.
    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// `N = n(n+1)/2`.
    pub fn ambient_dim(&self) -> usize {
        quad_dim(self.n)
    }

    /// `mu(m^2)` of the quotient: `N - t`.
    pub fn quotient_dim(&self) -> usize {
        self.ambient_dim() - self.rank()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn generators(&self) -> Vec<QuadForm> {
        self.basis
            .row_iter()
            .map(|r| QuadForm { n: self.n, coeffs: r.to_vec() })
            .collect()
    }

    /// Whether every generator is a monomial.
    pub fn is_monomial(&self) -> bool {
        self.basis.row_iter().all(|r| r.iter().filter(|&&c| c != 0).count() == 1)
    }

    pub(crate) fn row_space(&self) -> RowSpace {
        RowSpace::from_rref(&self.basis)
    }

    pub fn contains(&self, ctx: &FieldCtx, q: &QuadForm) -> bool {
        if q.n() != self.n {
            return false;
        }
        let mut v = q.coeffs().to_vec();
        self.row_space().reduce(ctx, &mut v);
        v.iter().all(|&c| c == 0)
    }

    /// Image of the ideal in `k[x_1..x_n] / (l)`, presented on the `n - 1`
    /// variables left after solving `l = 0` for its first variable with a
    /// nonzero coefficient. Returns the new ideal and the eliminated
    /// (1-based) variable.
    pub fn quotient_by_linear_form(&self, ctx: &FieldCtx, l: &LinearForm) -> Result<(QuadIdeal, usize)> {
        same_n(self.n, l.n())?;
        let lead = l
            .coeffs()
            .iter()
            .position(|&c| c != 0)
            .ok_or_else(|| Error::BadParams(String::from("cannot quotient by the zero form")))?;
        let n = self.n;
        let m = n - 1;
        // Each old variable becomes a linear form in the new variables.
        let inv = ctx.inv(l.coeffs()[lead]);
        let images: Vec<Vec<Scalar>> = (0..n)
            .map(|v| {
                let mut img = vec![0; m];
                if v == lead {
                    for (w, &c) in l.coeffs().iter().enumerate() {
                        if w != lead && c != 0 {
                            let nw = if w < lead { w } else { w - 1 };
                            img[nw] = ctx.neg(ctx.mul(c, inv));
                        }
                    }
                } else {
                    img[if v < lead { v } else { v - 1 }] = 1;
                }
                img
            })
            .collect();
        let mut space = RowSpace::new(quad_dim(m));
        let mut prod = vec![0; quad_dim(m)];
        for row in self.basis.row_iter() {
            let mut acc = vec![0; quad_dim(m)];
            for (k, &c) in row.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let (i, j) = pair_at(k, n);
                mul_lin_lin_into(ctx, &images[i - 1], &images[j - 1], &mut prod);
                for (a, &b) in acc.iter_mut().zip(&prod) {
                    *a = ctx.mul_add(*a, c, b);
                }
            }
            space.insert(ctx, acc);
        }
        Ok((QuadIdeal { n: m, basis: space.to_rref(ctx) }, lead + 1))
    }
}

/// The degree-`d` piece of the quotient: all monomials of degree `d`, the
/// degree-`d` part of the ideal as a row space over them, and the standard
/// monomials (non-pivot columns) whose images form a basis of `[R]_d`.
#[derive(Debug, Clone)]
pub struct GradedPiece {
    degree: usize,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    ideal: RowSpace,
    standard: Vec<usize>,
}

impl GradedPiece {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `dim [R]_d`.
    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn standard_monomials(&self) -> Vec<Monomial> {
        self.standard.iter().map(|&c| self.monomials[c].clone()).collect()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a degree-`d` polynomial (given on all monomials) in the
    /// standard-monomial basis of `[R]_d`.
    pub fn coordinates(&self, ctx: &FieldCtx, mut v: Vec<Scalar>) -> Vec<Scalar> {
        self.ideal.reduce(ctx, &mut v);
        self.standard.iter().map(|&c| v[c]).collect()
    }
}

/// Builds `[R]_d`; the ideal part is `span{ m q : deg m = d - 2, q in I_2 }`.
pub fn graded_piece(ctx: &FieldCtx, ideal: &QuadIdeal, d: usize) -> Result<GradedPiece> {
    let n = ideal.n();
    let cols = if n == 0 { usize::from(d == 0) } else { binomial(n + d - 1, d) };
    if cols > MAX_PIECE_DIM {
        return Err(Error::TooLarge(format!(
            "degree {d} piece in {n} variables has {cols} monomials (guard {MAX_PIECE_DIM})"
        )));
    }
    let monos = monomials(n, d);
    debug_assert_eq!(monos.len(), cols);
    let index: BTreeMap<Monomial, usize> =
        monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut space = RowSpace::new(cols);
    if d >= 2 && ideal.rank() > 0 {
        let gens: Vec<Vec<(usize, usize, Scalar)>> = ideal
            .basis()
            .row_iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(k, &c)| {
                        let (i, j) = pair_at(k, n);
                        (i - 1, j - 1, c)
                    })
                    .collect()
            })
            .collect();
        'outer: for m in monomials(n, d - 2) {
            for g in &gens {
                let mut row = vec![0; cols];
                for &(i, j, c) in g {
                    row[index[&m.times_pair(i, j)]] = c;
                }
                space.insert(ctx, row);
                if space.is_full() {
                    break 'outer;
                }
            }
        }
    }
    let standard = (0..cols).filter(|&c| !space.is_pivot(c)).collect();
    Ok(GradedPiece { degree: d, monomials: monos, index, ideal: space, standard })
}

/// Standard monomials of degree `d`: their images form a basis of `[R]_d`.
pub fn graded_piece_basis(ctx: &FieldCtx, ideal: &QuadIdeal, d: usize) -> Result<Vec<Monomial>> {
    Ok(graded_piece(ctx, ideal, d)?.standard_monomials())
}

/// `(h_0, ..., h_dmax)`. Once some `h_d` vanishes every later entry does too,
/// so those are filled in without building the pieces.
pub fn hilbert_function(ctx: &FieldCtx, ideal: &QuadIdeal, dmax: usize) -> Result<Vec<usize>> {
    let mut h = Vec::with_capacity(dmax + 1);
    for d in 0..=dmax {
        if h.last() == Some(&0) {
            h.push(0);
            continue;
        }
        h.push(graded_piece(ctx, ideal, d)?.dim());
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> FieldCtx {
        FieldCtx::new(32003, 1).unwrap()
    }

    fn edge_ideal(n: usize, edges: &[(usize, usize)]) -> QuadIdeal {
        QuadIdeal::from_monomials(n, edges).unwrap()
    }

    #[test]
    fn pair_index_examples() {
        assert_eq!(pair_index(1, 1, 3).unwrap(), 0);
        assert_eq!(pair_index(2, 2, 3).unwrap(), 3);
        assert_eq!(pair_index(3, 3, 3).unwrap(), 5);
        assert!(matches!(pair_index(2, 1, 3), Err(Error::OutOfRange(_))));
        assert!(matches!(pair_index(1, 4, 3), Err(Error::OutOfRange(_))));
        assert!(matches!(pair_index(0, 1, 3), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn pair_index_is_a_bijection() {
        for n in 1..9 {
            let mut seen = vec![false; quad_dim(n)];
            for i in 1..=n {
                for j in i..=n {
                    let k = pair_index(i, j, n).unwrap();
                    assert!(!seen[k]);
                    seen[k] = true;
                    assert_eq!(pair_at(k, n), (i, j));
                    assert_eq!(pair_idx0(i - 1, j - 1, n), k);
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn degree_two_monomials_follow_pair_order() {
        let m = monomials(4, 2);
        for (k, mono) in m.iter().enumerate() {
            let (i, j) = pair_at(k, 4);
            assert_eq!(mono.0, vec![(i - 1) as u16, (j - 1) as u16]);
        }
    }

    #[test]
    fn products_of_linear_forms() {
        let c = ctx();
        let x1 = LinearForm::var(2, 1).unwrap();
        let sq = mul_lin_lin(&c, &x1, &x1).unwrap();
        assert_eq!(sq, QuadForm::monomial(2, 1, 1).unwrap());

        let s = LinearForm::sum_of(2, &[1, 2]).unwrap();
        assert_eq!(mul_lin_lin(&c, &s, &s).unwrap().coeffs(), &[1, 2, 1]);

        let a = LinearForm::random(&c, 5, 1);
        let b = LinearForm::random(&c, 5, 2);
        assert_eq!(mul_lin_lin(&c, &a, &b).unwrap(), mul_lin_lin(&c, &b, &a).unwrap());
        assert!(matches!(
            mul_lin_lin(&c, &a, &LinearForm::zero(4)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn products_with_variables() {
        let c = ctx();
        let s = LinearForm::sum_of(3, &[1, 2]).unwrap();
        let q = mul_lin_var(&c, &s, 1).unwrap();
        assert_eq!(q, QuadForm::from_terms(&c, 3, &[(1, 1, 1), (1, 2, 1)]).unwrap());
        let x3 = LinearForm::var(3, 3).unwrap();
        assert_eq!(mul_lin_var(&c, &x3, 3).unwrap(), QuadForm::monomial(3, 3, 3).unwrap());
        for seed in 0..20 {
            let l = LinearForm::random(&c, 6, seed);
            for j in 1..=6 {
                let e = LinearForm::var(6, j).unwrap();
                assert_eq!(mul_lin_var(&c, &l, j).unwrap(), mul_lin_lin(&c, &l, &e).unwrap());
            }
        }
        assert!(matches!(mul_lin_var(&c, &s, 4), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn span_examples() {
        let c = ctx();
        let k3 = edge_ideal(3, &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!((k3.rank(), k3.quotient_dim()), (3, 3));
        let forms: Vec<_> = k3.generators();
        assert_eq!(QuadIdeal::span(&c, 3, &forms).unwrap(), k3);

        let z = QuadIdeal::span(&c, 3, &[]).unwrap();
        assert_eq!((z.rank(), z.quotient_dim()), (0, 6));

        let all: Vec<_> = (1..=3)
            .flat_map(|i| (i..=3).map(move |j| QuadForm::monomial(3, i, j).unwrap()))
            .collect();
        let full = QuadIdeal::span(&c, 3, &all).unwrap();
        assert_eq!((full.rank(), full.quotient_dim()), (6, 0));
        assert_eq!(full, QuadIdeal::full(3));

        assert!(matches!(
            QuadIdeal::span(&c, 3, &[QuadForm::zero(2)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn graded_piece_examples() {
        let c = ctx();
        let sq = QuadIdeal::squares(3);
        let b3 = graded_piece_basis(&c, &sq, 3).unwrap();
        assert_eq!(b3, vec![Monomial(vec![0, 1, 2])]);
        assert!(graded_piece_basis(&c, &sq, 4).unwrap().is_empty());

        let c4 = edge_ideal(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        let mut b2: Vec<String> =
            graded_piece_basis(&c, &c4, 2).unwrap().iter().map(|m| format!("{m}")).collect();
        b2.sort();
        assert_eq!(b2, ["x1^2", "x1x3", "x2^2", "x2x4", "x3^2", "x4^2"]);

        assert_eq!(graded_piece_basis(&c, &c4, 0).unwrap().len(), 1);
        assert_eq!(graded_piece_basis(&c, &c4, 1).unwrap().len(), 4);
    }

    #[test]
    fn hilbert_function_examples() {
        let c = ctx();
        assert_eq!(hilbert_function(&c, &QuadIdeal::squares(3), 5).unwrap(), [1, 3, 3, 1, 0, 0]);
        // Degree 3 of k(C4): standard monomials are the x1,x3 and x2,x4
        // monomials of degree 3, four each.
        let c4 = edge_ideal(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert_eq!(hilbert_function(&c, &c4, 3).unwrap(), [1, 4, 6, 8]);
        assert_eq!(hilbert_function(&c, &QuadIdeal::full(2), 4).unwrap(), [1, 2, 0, 0, 0]);
    }

    #[test]
    fn size_guard() {
        let c = ctx();
        assert!(matches!(graded_piece(&c, &QuadIdeal::zero(20), 6), Err(Error::TooLarge(_))));
    }

    #[test]
    fn quotient_by_variable_drops_it() {
        let c = ctx();
        // k[x1,x2,x3]/(x1^2,x2^2,x3^2) modulo x3 is k[x1,x2]/(x1^2,x2^2).
        let (q, lead) = QuadIdeal::squares(3)
            .quotient_by_linear_form(&c, &LinearForm::var(3, 3).unwrap())
            .unwrap();
        assert_eq!(lead, 3);
        assert_eq!(q, QuadIdeal::squares(2));
    }

    #[test]
    fn quotient_by_sum_form() {
        let c = ctx();
        // Modulo x1 + x2: x1 = -x2, so x1^2 -> x2^2 and the image of
        // (x1^2, x2^2) in k[x2] is (x2^2).
        let l = LinearForm::sum_of(2, &[1, 2]).unwrap();
        let (q, lead) = QuadIdeal::squares(2).quotient_by_linear_form(&c, &l).unwrap();
        assert_eq!(lead, 1);
        assert_eq!(q, QuadIdeal::full(1));
    }

    #[test]
    fn monomial_divisibility() {
        let a = Monomial(vec![0, 1]);
        assert!(a.divides(&Monomial(vec![0, 1, 1])));
        assert!(!a.divides(&Monomial(vec![0, 0, 2])));
        assert!(Monomial(vec![]).divides(&a));
        assert_eq!(a.times_var(0), Monomial(vec![0, 0, 1]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn brute_force_standard(n: usize, d: usize, gens: &[(usize, usize)]) -> Vec<Monomial> {
            let gens: Vec<Monomial> = gens
                .iter()
                .map(|&(i, j)| Monomial(vec![(i - 1) as u16, (j - 1) as u16]))
                .collect();
            monomials(n, d).into_iter().filter(|m| !gens.iter().any(|g| g.divides(m))).collect()
        }

        fn monomial_ideal() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
            (1usize..=5).prop_flat_map(|n| {
                let pairs: Vec<(usize, usize)> =
                    (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
                (Just(n), proptest::sample::subsequence(pairs.clone(), 0..=pairs.len()))
            })
        }

        proptest! {
            #[test]
            fn bilinearity(seed in 0u64..1000) {
                let c = FieldCtx::new(32003, seed).unwrap();
                let a = LinearForm::random(&c, 6, 0);
                let b = LinearForm::random(&c, 6, 1);
                let d = LinearForm::random(&c, 6, 2);
                let lhs = mul_lin_lin(&c, &a.add(&c, &b).unwrap(), &d).unwrap();
                let ad = mul_lin_lin(&c, &a, &d).unwrap();
                let bd = mul_lin_lin(&c, &b, &d).unwrap();
                let rhs: Vec<_> = ad.coeffs().iter().zip(bd.coeffs()).map(|(&x, &y)| c.add(x, y)).collect();
                prop_assert_eq!(lhs.coeffs(), &rhs[..]);
            }

            #[test]
            fn monomial_pieces_match_brute_force((n, gens) in monomial_ideal(), d in 0usize..=5) {
                let c = FieldCtx::new(32003, 0).unwrap();
                let ideal = QuadIdeal::from_monomials(n, &gens).unwrap();
                prop_assert_eq!(ideal.quotient_dim(), quad_dim(n) - gens.len());
                let got = graded_piece_basis(&c, &ideal, d).unwrap();
                prop_assert_eq!(got, brute_force_standard(n, d, &gens));
            }

            #[test]
            fn hilbert_bounded_by_monomial_count((n, gens) in monomial_ideal()) {
                let c = FieldCtx::new(32003, 0).unwrap();
                let ideal = QuadIdeal::from_monomials(n, &gens).unwrap();
                let h = hilbert_function(&c, &ideal, 5).unwrap();
                prop_assert_eq!(h[0], 1);
                for (d, &hd) in h.iter().enumerate() {
                    prop_assert!(hd <= binomial(n + d - 1, d));
                }
            }
        }
    }
}
