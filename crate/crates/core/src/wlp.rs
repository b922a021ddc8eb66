//! Multiplication maps on Artinian quotients, the weak Lefschetz property,
//! and the chain `R_i = R / (l_1, ..., l_i)` whose degree-two Hilbert
//! coefficients compute `ms` when every step has the property.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldCtx, RowSpace, Scalar};
use crate::quad::{graded_piece, GradedPiece, LinearForm, Monomial, QuadIdeal};

pub const DEFAULT_WLP_TRIALS: usize = 5;

const WLP_STREAM: u64 = 0x574c_5000_0000_0000;
const CHAIN_STREAM: u64 = 0x4348_4149_0000_0000;

/// The graded pieces `[R]_0, ..., [R]_s, [R]_{s+1} = 0` of an Artinian
/// quotient.
pub struct ArtinianPieces {
    pieces: Vec<GradedPiece>,
}

impl ArtinianPieces {
    /// Fails with `NotArtinian` when `[R]_{n+1} != 0`. An Artinian quotient
    /// by quadrics contains a complete intersection of `n` quadrics (over the
    /// algebraic closure, which does not change dimensions), so its pieces
    /// vanish from degree `n + 1` on.
    pub fn new(ctx: &FieldCtx, ideal: &QuadIdeal) -> Result<Self> {
        let mut pieces = Vec::new();
        for d in 0..=ideal.n() + 1 {
            let p = graded_piece(ctx, ideal, d)?;
            let done = p.dim() == 0;
            pieces.push(p);
            if done {
                return Ok(ArtinianPieces { pieces });
            }
        }
        Err(Error::NotArtinian)
    }

    pub fn hilbert(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.dim()).collect()
    }

    /// Rank of `l : [R]_d -> [R]_{d+1}`; zero past the socle.
    pub fn multiplication_rank(&self, ctx: &FieldCtx, l: &LinearForm, d: usize) -> usize {
        if d + 1 >= self.pieces.len() {
            return 0;
        }
        map_rank(ctx, &self.pieces[d], &self.pieces[d + 1], l.coeffs(), usize::MAX)
    }

    /// Whether `l` has maximal rank in every degree.
    pub fn is_lefschetz(&self, ctx: &FieldCtx, l: &LinearForm) -> bool {
        (0..self.pieces.len() - 1).all(|d| {
            let target = self.pieces[d].dim().min(self.pieces[d + 1].dim());
            map_rank(ctx, &self.pieces[d], &self.pieces[d + 1], l.coeffs(), target) == target
        })
    }
}

/// Rank of multiplication by `l` from `src` to `dst`, stopping once `stop`
/// is reached.
fn map_rank(ctx: &FieldCtx, src: &GradedPiece, dst: &GradedPiece, l: &[Scalar], stop: usize) -> usize {
    let mut image = RowSpace::new(dst.dim());
    if dst.dim() == 0 {
        return 0;
    }
    for m in src.standard_monomials() {
        let mut v = vec![0; dst.monomials().len()];
        for (j, &c) in l.iter().enumerate() {
            if c != 0 {
                let k = dst.index_of(&m.times_var(j)).expect("degree d + 1 monomial");
                v[k] = ctx.add(v[k], c);
            }
        }
        image.insert(ctx, dst.coordinates(ctx, v));
        if image.rank() >= stop || image.is_full() {
            break;
        }
    }
    image.rank()
}

/// Rank of `l : [R]_d -> [R]_{d+1}` together with `(dim [R]_d, dim [R]_{d+1})`.
pub fn multiplication_rank(
    ctx: &FieldCtx,
    ideal: &QuadIdeal,
    l: &LinearForm,
    d: usize,
) -> Result<(usize, (usize, usize))> {
    if l.n() != ideal.n() {
        return Err(Error::DimensionMismatch { expected: ideal.n(), found: l.n() });
    }
    let src = graded_piece(ctx, ideal, d)?;
    let dst = graded_piece(ctx, ideal, d + 1)?;
    let r = map_rank(ctx, &src, &dst, l.coeffs(), usize::MAX);
    Ok((r, (src.dim(), dst.dim())))
}

/// Whether some random form among `trials` has maximal rank in every
/// degree. `false` means the property was not observed, which is evidence
/// rather than proof.
pub fn has_wlp(ctx: &FieldCtx, ideal: &QuadIdeal, trials: usize) -> Result<bool> {
    let pieces = ArtinianPieces::new(ctx, ideal)?;
    for t in 0..trials {
        let l = LinearForm::random(ctx, ideal.n(), WLP_STREAM | t as u64);
        if pieces.is_lefschetz(ctx, &l) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub i: usize,
    /// Variables left in `R_i`.
    pub vars: usize,
    /// `h_0(i), h_1(i), ...` up to and including the first zero.
    pub hilbert: Vec<usize>,
    /// The form `l_i` (in the variables of `R_{i-1}`); absent at step 0.
    pub form: Option<LinearForm>,
    /// `l_i` has maximal rank on `R_{i-1}` in every degree. Step 0 has no
    /// form and is marked verified.
    pub wlp_verified: bool,
}

impl ChainStep {
    pub fn h(&self, j: usize) -> usize {
        self.hilbert.get(j).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertChain {
    pub steps: Vec<ChainStep>,
}

impl HilbertChain {
    /// The `h_2` column.
    pub fn h2(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.h(2)).collect()
    }

    pub fn all_verified(&self) -> bool {
        self.steps.iter().all(|s| s.wlp_verified)
    }
}

/// Quotients by random forms until `h_2` vanishes and returns the number of
/// forms used. This equals `ms` when every flag in the chain is set.
pub fn ms_via_wlp_chain(ctx: &FieldCtx, ideal: &QuadIdeal) -> Result<(usize, HilbertChain)> {
    let mut pieces = ArtinianPieces::new(ctx, ideal)?;
    let mut current = ideal.clone();
    let mut steps = vec![ChainStep {
        i: 0,
        vars: ideal.n(),
        hilbert: pieces.hilbert(),
        form: None,
        wlp_verified: true,
    }];
    while steps.last().expect("nonempty").h(2) != 0 {
        let i = steps.len();
        let mut stream = CHAIN_STREAM | ((i as u64) << 16);
        let l = loop {
            let l = LinearForm::random(ctx, current.n(), stream);
            if !l.is_zero() {
                break l;
            }
            stream += 1;
        };
        let verified = pieces.is_lefschetz(ctx, &l);
        let (next, _) = current.quotient_by_linear_form(ctx, &l)?;
        pieces = ArtinianPieces::new(ctx, &next)?;
        steps.push(ChainStep {
            i,
            vars: next.n(),
            hilbert: pieces.hilbert(),
            form: Some(l),
            wlp_verified: verified,
        });
        current = next;
    }
    Ok((steps.len() - 1, HilbertChain { steps }))
}

/// `ceil((2n + 1 - sqrt(8n + 1)) / 2)` in integer arithmetic.
pub fn squares_ms_formula(n: usize) -> usize {
    let n = n as u64;
    let s = (8 * n + 1).isqrt();
    let v = if s * s == 8 * n + 1 || s % 2 == 1 { (2 * n + 1 - s) / 2 } else { (2 * n + 2 - s) / 2 };
    v as usize
}

/// Standard monomials of each degree, for display.
pub fn standard_monomials(ctx: &FieldCtx, ideal: &QuadIdeal) -> Result<Vec<Vec<Monomial>>> {
    Ok(ArtinianPieces::new(ctx, ideal)?.pieces.iter().map(|p| p.standard_monomials()).collect())
}
