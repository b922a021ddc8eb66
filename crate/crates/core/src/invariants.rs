//! Witness checks for `ms` and `cs`, the analytic bounds, and the search that
//! turns them into certified reports.
//!
//! A list of linear forms `L` witnesses `ms` when `I_2 + (L) m` fills the
//! degree-two piece, and `cs` when `I_2 + (L)^2` does. Witnesses are proofs
//! of upper bounds. A failed randomized level is only evidence: generic
//! tuples witness whenever any tuple does, and each random tuple misses a
//! nonzero maximal minor with probability at most `deg / p`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldCtx, RowSpace, Scalar};
use crate::quad::{mul_lin_lin_into, mul_lin_var_into, quad_dim, LinearForm, QuadIdeal};

pub const DEFAULT_TRIALS: usize = 50;

/// Exhaustive mode is limited to `n <= 5` over fields with at most this many
/// elements.
pub const EXHAUSTIVE_MAX_PRIME: u32 = 13;
pub const EXHAUSTIVE_MAX_N: usize = 5;
const EXHAUSTIVE_MAX_SUBSPACES: u128 = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvariantKind {
    Ms,
    Cs,
}

impl InvariantKind {
    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::Ms => "ms",
            InvariantKind::Cs => "cs",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SearchMode {
    #[serde(rename = "randomized")]
    Randomized,
    #[serde(rename = "exact-exhaustive")]
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Random tuples tried per level.
    pub trials: usize,
    /// `dim R` when known (`alpha(G)` for edge rings); a valid lower bound.
    pub alpha_hint: Option<usize>,
    pub mode: SearchMode,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { trials: DEFAULT_TRIALS, alpha_hint: None, mode: SearchMode::Randomized }
    }
}

impl SearchOptions {
    pub fn with_alpha(alpha: usize) -> Self {
        SearchOptions { alpha_hint: Some(alpha), ..Self::default() }
    }
}

/// An exact fraction `num / den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// A bound below one carries information; at or above one it is vacuous.
    pub fn is_informative(self) -> bool {
        self.num < self.den
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certification {
    pub mode: SearchMode,
    pub p: u32,
    #[serde(rename = "T")]
    pub trials_per_level: usize,
    /// Per-trial probability that a random tuple misses an existing witness
    /// (`N/p` for ms, `2N/p` for cs). Absent in exhaustive mode.
    pub bound: Option<Ratio>,
    /// Levels searched without success, with the number of trials each.
    pub levels_excluded: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedBound {
    pub name: String,
    pub value: usize,
}

fn named(name: &str, value: usize) -> NamedBound {
    NamedBound { name: String::from(name), value }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub kind: InvariantKind,
    pub n: usize,
    /// Set only when the bounds closed: a witness at the analytic lower
    /// bound, or an exhaustive search.
    pub value: Option<usize>,
    pub lo: usize,
    pub hi: usize,
    pub witness: Option<Vec<LinearForm>>,
    pub certification: Certification,
    pub bounds_used: Vec<NamedBound>,
}

impl InvariantReport {
    pub fn is_exact(&self) -> bool {
        self.value.is_some()
    }

    /// The exact value, or the witnessed level when every level below it
    /// (down to the analytic lower bound) was searched without success.
    /// The latter is probabilistic; see [`Certification::bound`].
    pub fn settled(&self) -> Option<usize> {
        if let Some(v) = self.value {
            return Some(v);
        }
        let excluded = |r| self.certification.levels_excluded.iter().any(|&(l, t)| l == r && t > 0);
        (self.lo..self.hi).all(excluded).then_some(self.hi)
    }

    /// Whether `[lo, hi]` sits inside `[a, b]`.
    pub fn within(&self, a: usize, b: usize) -> bool {
        a <= self.lo && self.hi <= b
    }
}

fn check_forms(n: usize, forms: &[LinearForm]) -> Result<()> {
    for f in forms {
        if f.n() != n {
            return Err(Error::DimensionMismatch { expected: n, found: f.n() });
        }
    }
    Ok(())
}

/// Does `(L)` contain `m^2` modulo `I`? Checks `I_2 + span{ l x_j }` is
/// everything.
pub fn ms_check(ctx: &FieldCtx, ideal: &QuadIdeal, forms: &[LinearForm]) -> Result<bool> {
    check_forms(ideal.n(), forms)?;
    let coeffs: Vec<&[Scalar]> = forms.iter().map(|f| f.coeffs()).collect();
    Ok(ms_check_raw(ctx, ideal.n(), &ideal.row_space(), &coeffs))
}

/// Does `(L)^2 = m^2` modulo `I`? Checks `I_2 + span{ l_a l_b }` is
/// everything.
pub fn cs_check(ctx: &FieldCtx, ideal: &QuadIdeal, forms: &[LinearForm]) -> Result<bool> {
    check_forms(ideal.n(), forms)?;
    let coeffs: Vec<&[Scalar]> = forms.iter().map(|f| f.coeffs()).collect();
    Ok(cs_check_raw(ctx, ideal.n(), &ideal.row_space(), &coeffs))
}

/// Dispatches on the invariant kind.
pub fn check(ctx: &FieldCtx, kind: InvariantKind, ideal: &QuadIdeal, forms: &[LinearForm]) -> Result<bool> {
    match kind {
        InvariantKind::Ms => ms_check(ctx, ideal, forms),
        InvariantKind::Cs => cs_check(ctx, ideal, forms),
    }
}

pub(crate) fn ms_check_raw(ctx: &FieldCtx, n: usize, base: &RowSpace, forms: &[&[Scalar]]) -> bool {
    let big_n = quad_dim(n);
    if base.is_full() {
        return true;
    }
    if base.rank() + forms.len() * n < big_n {
        return false;
    }
    let mut space = base.clone();
    for f in forms {
        for j in 0..n {
            let mut row = vec![0; big_n];
            mul_lin_var_into(f, j, &mut row);
            space.insert(ctx, row);
            if space.is_full() {
                return true;
            }
        }
    }
    false
}

pub(crate) fn cs_check_raw(ctx: &FieldCtx, n: usize, base: &RowSpace, forms: &[&[Scalar]]) -> bool {
    let big_n = quad_dim(n);
    if base.is_full() {
        return true;
    }
    let r = forms.len();
    if base.rank() + r * (r + 1) / 2 < big_n {
        return false;
    }
    let mut space = base.clone();
    for a in 0..r {
        for b in a..r {
            let mut row = vec![0; big_n];
            mul_lin_lin_into(ctx, forms[a], forms[b], &mut row);
            space.insert(ctx, row);
            if space.is_full() {
                return true;
            }
        }
    }
    false
}

fn ceil_div(a: usize, b: usize) -> usize {
    if b == 0 {
        0
    } else {
        a.div_ceil(b)
    }
}

/// Least `r` with `r(r+1)/2 >= mu`, i.e. `ceil((sqrt(8 mu + 1) - 1) / 2)`.
pub fn triangular_ceiling(mu: usize) -> usize {
    let mut r = 0;
    while r * (r + 1) / 2 < mu {
        r += 1;
    }
    r
}

/// `max(ceil(mu(m^2) / mu(m)), dim R)` with `mu(m^2) = N - t`, `mu(m) = n`.
pub fn ms_lower_bound(ideal: &QuadIdeal, alpha_hint: Option<usize>) -> (usize, Vec<NamedBound>) {
    let mu2 = ideal.quotient_dim();
    if mu2 == 0 {
        return (0, vec![named("m^2 contained in I", 0)]);
    }
    let ratio = ceil_div(mu2, ideal.n());
    let mut used = vec![named("ceil(mu(m^2)/mu(m))", ratio)];
    let mut lo = ratio;
    if let Some(a) = alpha_hint {
        used.push(named("dim R", a));
        lo = lo.max(a);
    }
    (lo, used)
}

/// The ms bound, the triangular ceiling on `mu(m^2)`, and `n` when at most
/// `n - 1` quadrics are imposed.
pub fn cs_lower_bound(ideal: &QuadIdeal, alpha_hint: Option<usize>) -> (usize, Vec<NamedBound>) {
    let (mut lo, mut used) = ms_lower_bound(ideal, alpha_hint);
    if ideal.quotient_dim() == 0 {
        return (lo, used);
    }
    let tri = triangular_ceiling(ideal.quotient_dim());
    used.push(named("triangular ceiling of mu(m^2)", tri));
    lo = lo.max(tri);
    let n = ideal.n();
    if n >= 1 && ideal.rank() < n {
        used.push(named("t <= n - 1", n));
        lo = lo.max(n);
    }
    (lo, used)
}

/// Least `r` with `mu(m^2) < C(r+2, 2)`, capped at `n`. Holds over infinite
/// fields, so it describes what a generic search should reach.
pub fn ms_upper_bound(ideal: &QuadIdeal) -> (usize, Vec<NamedBound>) {
    let mu2 = ideal.quotient_dim();
    let mut r = 0;
    while r < ideal.n() && mu2 >= (r + 1) * (r + 2) / 2 {
        r += 1;
    }
    (r, vec![named("mu(m^2) < C(r+2,2)", r)])
}

fn trial_stream(level: usize, trial: usize) -> u64 {
    ((level as u64) << 40) | trial as u64
}

/// The random forms used for one trial; a pure function of the seed, the
/// level and the trial index.
pub fn trial_forms(ctx: &FieldCtx, n: usize, level: usize, trial: usize) -> Vec<LinearForm> {
    let flat = ctx.random_vector(level * n, trial_stream(level, trial));
    flat.chunks(n.max(1)).take(level).map(|c| LinearForm::new(c.to_vec())).collect()
}

/// Per-trial failure bound: `N/p` for ms, `2N/p` for cs.
pub fn failure_bound(kind: InvariantKind, n: usize, p: u32) -> Ratio {
    let big_n = quad_dim(n) as u64;
    let num = match kind {
        InvariantKind::Ms => big_n,
        InvariantKind::Cs => 2 * big_n,
    };
    Ratio { num, den: p as u64 }
}

pub fn compute_ms(ctx: &FieldCtx, ideal: &QuadIdeal, opts: &SearchOptions) -> Result<InvariantReport> {
    compute(ctx, InvariantKind::Ms, ideal, opts)
}

pub fn compute_cs(ctx: &FieldCtx, ideal: &QuadIdeal, opts: &SearchOptions) -> Result<InvariantReport> {
    compute(ctx, InvariantKind::Cs, ideal, opts)
}

/// Computes `ms` or `cs`.
///
/// Randomized mode walks the levels upward from the analytic lower bound and
/// stops at the first level where a random tuple witnesses. Levels past the
/// generic upper bound are still searched (that bound assumes an infinite
/// field); at level `n` the coordinate forms always witness.
///
/// Exhaustive mode enumerates every subspace of linear forms of each
/// dimension from 0 upward, which decides the value over `GF(p)` itself.
pub fn compute(
    ctx: &FieldCtx,
    kind: InvariantKind,
    ideal: &QuadIdeal,
    opts: &SearchOptions,
) -> Result<InvariantReport> {
    let n = ideal.n();
    if let Some(a) = opts.alpha_hint {
        if a > n {
            return Err(Error::BadParams(format!("dim R hint {a} exceeds n = {n}")));
        }
    }
    if opts.trials == 0 {
        return Err(Error::BadParams(String::from("at least one trial per level is required")));
    }
    let (lo, mut bounds_used) = match kind {
        InvariantKind::Ms => ms_lower_bound(ideal, opts.alpha_hint),
        InvariantKind::Cs => cs_lower_bound(ideal, opts.alpha_hint),
    };
    if kind == InvariantKind::Ms {
        bounds_used.extend(ms_upper_bound(ideal).1);
    }
    let base = ideal.row_space();
    let passes = |forms: &[&[Scalar]]| match kind {
        InvariantKind::Ms => ms_check_raw(ctx, n, &base, forms),
        InvariantKind::Cs => cs_check_raw(ctx, n, &base, forms),
    };

    match opts.mode {
        SearchMode::Randomized => {
            let mut cert = Certification {
                mode: SearchMode::Randomized,
                p: ctx.p(),
                trials_per_level: opts.trials,
                bound: Some(failure_bound(kind, n, ctx.p())),
                levels_excluded: Vec::new(),
            };
            for r in lo..=n {
                for trial in 0..opts.trials {
                    let forms = trial_forms(ctx, n, r, trial);
                    let raw: Vec<&[Scalar]> = forms.iter().map(|f| f.coeffs()).collect();
                    if passes(&raw) {
                        return Ok(InvariantReport {
                            kind,
                            n,
                            value: (r == lo).then_some(r),
                            lo,
                            hi: r,
                            witness: Some(forms),
                            certification: cert,
                            bounds_used,
                        });
                    }
                }
                cert.levels_excluded.push((r, opts.trials));
            }
            // Unreachable in practice: the n coordinate forms span m.
            let coords: Vec<LinearForm> =
                (1..=n).map(|j| LinearForm::var(n, j).expect("in range")).collect();
            Ok(InvariantReport {
                kind,
                n,
                value: None,
                lo,
                hi: n,
                witness: Some(coords),
                certification: cert,
                bounds_used,
            })
        }
        SearchMode::Exhaustive => {
            if ctx.p() > EXHAUSTIVE_MAX_PRIME || n > EXHAUSTIVE_MAX_N {
                return Err(Error::TooLarge(format!(
                    "exhaustive search needs p <= {EXHAUSTIVE_MAX_PRIME} and n <= {EXHAUSTIVE_MAX_N}"
                )));
            }
            let total: u128 = (0..=n).map(|r| gaussian_binomial(n, r, ctx.p())).sum();
            if total > EXHAUSTIVE_MAX_SUBSPACES {
                return Err(Error::TooLarge(format!("{total} subspaces to enumerate")));
            }
            let mut cert = Certification {
                mode: SearchMode::Exhaustive,
                p: ctx.p(),
                trials_per_level: 0,
                bound: None,
                levels_excluded: Vec::new(),
            };
            for r in 0..=n {
                let mut found = None;
                for_each_subspace(ctx.p(), n, r, |rows| {
                    let raw: Vec<&[Scalar]> = rows.iter().map(|v| v.as_slice()).collect();
                    if passes(&raw) {
                        found = Some(rows.iter().map(|v| LinearForm::new(v.clone())).collect());
                        return false;
                    }
                    true
                });
                if let Some(forms) = found {
                    return Ok(InvariantReport {
                        kind,
                        n,
                        value: Some(r),
                        lo: r,
                        hi: r,
                        witness: Some(forms),
                        certification: cert,
                        bounds_used,
                    });
                }
                cert.levels_excluded.push((r, gaussian_binomial(n, r, ctx.p()) as usize));
            }
            unreachable!("the full space of linear forms always witnesses")
        }
    }
}

/// Number of `r`-dimensional subspaces of `GF(q)^n`.
pub fn gaussian_binomial(n: usize, r: usize, q: u32) -> u128 {
    if r > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..r {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Calls `visit` with a basis (in reduced row-echelon form) of every
/// `r`-dimensional subspace of `GF(p)^n`; stops early when `visit` returns
/// false.
pub fn for_each_subspace<F: FnMut(&[Vec<Scalar>]) -> bool>(p: u32, n: usize, r: usize, mut visit: F) {
    if r > n {
        return;
    }
    let mut pivots: Vec<usize> = (0..r).collect();
    loop {
        // Free slots: row k, column c > pivots[k], c not a pivot.
        let free: Vec<(usize, usize)> = (0..r)
            .flat_map(|k| {
                let pivots = &pivots;
                (pivots[k] + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (k, c))
            })
            .collect();
        let mut rows = vec![vec![0 as Scalar; n]; r];
        for (k, &c) in pivots.iter().enumerate() {
            rows[k][c] = 1;
        }
        let mut digits = vec![0u32; free.len()];
        loop {
            for (&(k, c), &d) in free.iter().zip(&digits) {
                rows[k][c] = d;
            }
            if !visit(&rows) {
                return;
            }
            let mut i = 0;
            while i < digits.len() {
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == digits.len() {
                break;
            }
        }
        // Next pivot combination.
        let mut k = r;
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            if pivots[k] < n - r + k {
                pivots[k] += 1;
                for j in k + 1..r {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::QuadForm;

    fn ctx() -> FieldCtx {
        FieldCtx::new(32003, 11).unwrap()
    }

    fn edges(n: usize, e: &[(usize, usize)]) -> QuadIdeal {
        QuadIdeal::from_monomials(n, e).unwrap()
    }

    fn sum(n: usize, v: &[usize]) -> LinearForm {
        LinearForm::sum_of(n, v).unwrap()
    }

    fn complete(n: usize) -> QuadIdeal {
        let e: Vec<_> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        edges(n, &e)
    }

    fn star(n: usize) -> QuadIdeal {
        let e: Vec<_> = (2..=n).map(|j| (1, j)).collect();
        edges(n, &e)
    }

    #[test]
    fn ms_check_examples() {
        let c = ctx();
        let s4 = star(4);
        let l = [sum(4, &[1, 2]), sum(4, &[1, 3]), sum(4, &[1, 4])];
        assert!(ms_check(&c, &s4, &l).unwrap());
        assert!(ms_check(&c, &QuadIdeal::full(3), &[]).unwrap());
        let c4 = edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]);
        assert!(ms_check(&c, &c4, &[sum(4, &[1, 2]), sum(4, &[3, 4])]).unwrap());
        assert!(!ms_check(&c, &c4, &[sum(4, &[1, 2])]).unwrap());
        assert!(matches!(ms_check(&c, &c4, &[sum(3, &[1])]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn cs_check_examples() {
        let c = ctx();
        let sq = QuadIdeal::squares(3);
        assert!(cs_check(&c, &sq, &[sum(3, &[1, 2]), sum(3, &[2, 3])]).unwrap());
        // Example 6.3's g1..g4 for K10.
        let g = [
            sum(10, &[1, 2, 3, 7]),
            sum(10, &[1, 4, 5, 8]),
            sum(10, &[2, 4, 6, 9]),
            sum(10, &[3, 5, 6, 10]),
        ];
        assert!(cs_check(&c, &complete(10), &g).unwrap());
        assert!(!cs_check(&c, &complete(10), &g[..3]).unwrap());
        let coords: Vec<_> = (1..=5).map(|j| LinearForm::var(5, j).unwrap()).collect();
        assert!(cs_check(&c, &QuadIdeal::zero(5), &coords).unwrap());
        assert!(cs_check(&c, &star(5), &coords).unwrap());
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(ms_lower_bound(&complete(5), None).0, 1);
        assert_eq!(ms_lower_bound(&QuadIdeal::full(4), None).0, 0);
        assert_eq!(cs_lower_bound(&star(7), None).0, 7);
        assert_eq!(cs_lower_bound(&complete(10), None).0, 4);
        // Petersen-sized: n = 10, t = 15, mu(m^2) = 40.
        let mut e: Vec<(usize, usize)> = (1..=5).map(|i| (i, i + 5)).collect();
        e.extend([(1, 3), (2, 4), (3, 5), (1, 4), (2, 5), (6, 7), (7, 8), (8, 9), (9, 10), (6, 10)]);
        let p = edges(10, &e);
        assert_eq!(p.quotient_dim(), 40);
        assert_eq!(ms_lower_bound(&p, Some(4)).0, 4);
        assert_eq!(cs_lower_bound(&p, None).0, 9);
    }

    #[test]
    fn triangular_ceiling_matches_closed_form() {
        // Compare with ceil((sqrt(8 mu + 1) - 1) / 2) computed in floating point.
        for mu in 0..2000usize {
            let f = (((8 * mu + 1) as f64).sqrt() - 1.0) / 2.0;
            let expect = (f - 1e-9).ceil().max(0.0) as usize;
            assert_eq!(triangular_ceiling(mu), expect, "mu = {mu}");
        }
    }

    #[test]
    fn upper_bound_examples() {
        // mu(m^2) = 2 -> 1
        let i = QuadIdeal::from_monomials(2, &[(1, 2)]).unwrap();
        assert_eq!(ms_upper_bound(&i).0, 1);
        assert_eq!(ms_upper_bound(&QuadIdeal::full(3)).0, 0);
        // Wheel W6: hub 1, rim 2..6.
        let mut e: Vec<_> = (2..=6).map(|j| (1, j)).collect();
        e.extend([(2, 3), (3, 4), (4, 5), (5, 6), (2, 6)]);
        let w6 = edges(6, &e);
        assert_eq!(w6.quotient_dim(), 11);
        assert_eq!(ms_upper_bound(&w6).0, 4);
    }

    #[test]
    fn compute_examples() {
        let c = ctx();
        let r = compute_ms(&c, &complete(4), &SearchOptions::default()).unwrap();
        assert_eq!(r.value, Some(1));
        let r = compute_ms(&c, &star(5), &SearchOptions::with_alpha(4)).unwrap();
        assert_eq!(r.value, Some(4));
        // K_{2,3}: parts {1,2} and {3,4,5}.
        let k23 = edges(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        let r = compute_ms(&c, &k23, &SearchOptions::with_alpha(3)).unwrap();
        assert_eq!(r.value, Some(3));

        let r = compute_cs(&c, &QuadIdeal::squares(4), &SearchOptions::default()).unwrap();
        assert_eq!(r.value, Some(3));
        let r = compute_cs(&c, &complete(6), &SearchOptions::default()).unwrap();
        assert_eq!(r.value, Some(3));
        let i = QuadIdeal::from_monomials(3, &[(1, 1), (2, 2), (1, 2)]).unwrap();
        let r = compute_cs(&c, &i, &SearchOptions::default()).unwrap();
        assert_eq!(r.value, None);
        assert_eq!((r.lo, r.hi), (2, 3));
        assert_eq!(r.settled(), Some(3));
        assert_eq!(r.certification.levels_excluded, vec![(2, DEFAULT_TRIALS)]);
    }

    #[test]
    fn degenerate_full_ideal() {
        let c = ctx();
        for kind in [InvariantKind::Ms, InvariantKind::Cs] {
            let r = compute(&c, kind, &QuadIdeal::full(3), &SearchOptions::default()).unwrap();
            assert_eq!(r.value, Some(0));
            assert_eq!(r.witness.as_deref(), Some(&[][..]));
        }
    }

    #[test]
    fn report_witness_passes_its_check() {
        let c = ctx();
        let i = QuadIdeal::span(
            &c,
            4,
            &[
                QuadForm::from_terms(&c, 4, &[(1, 2, 3), (3, 4, -1)]).unwrap(),
                QuadForm::from_terms(&c, 4, &[(1, 1, 1), (2, 3, 5)]).unwrap(),
            ],
        )
        .unwrap();
        for kind in [InvariantKind::Ms, InvariantKind::Cs] {
            let r = compute(&c, kind, &i, &SearchOptions::default()).unwrap();
            let w = r.witness.clone().unwrap();
            assert_eq!(w.len(), r.hi);
            assert!(check(&c, kind, &i, &w).unwrap());
            assert!(r.lo <= r.hi && r.hi <= 4);
        }
    }

    #[test]
    fn bad_options() {
        let c = ctx();
        let opts = SearchOptions { trials: 0, ..SearchOptions::default() };
        assert!(matches!(compute_ms(&c, &star(3), &opts), Err(Error::BadParams(_))));
        assert!(matches!(compute_ms(&c, &star(3), &SearchOptions::with_alpha(4)), Err(Error::BadParams(_))));
        let ex = SearchOptions { mode: SearchMode::Exhaustive, ..SearchOptions::default() };
        assert!(matches!(compute_ms(&c, &star(3), &ex), Err(Error::TooLarge(_))));
        let c3 = FieldCtx::new(3, 0).unwrap();
        assert!(matches!(compute_ms(&c3, &star(6), &ex), Err(Error::TooLarge(_))));
    }

    #[test]
    fn subspace_enumeration_counts() {
        for (n, p) in [(3usize, 3u32), (4, 3), (4, 5), (5, 2)] {
            for r in 0..=n {
                let mut count = 0u128;
                let mut seen = alloc::collections::BTreeSet::new();
                for_each_subspace(p, n, r, |rows| {
                    count += 1;
                    seen.insert(rows.to_vec());
                    true
                });
                assert_eq!(count, gaussian_binomial(n, r, p), "n={n} r={r} p={p}");
                assert_eq!(seen.len() as u128, count);
            }
        }
    }

    #[test]
    fn exhaustive_mode_small_cases() {
        let c = FieldCtx::new(3, 0).unwrap();
        let ex = SearchOptions { mode: SearchMode::Exhaustive, ..SearchOptions::default() };
        let r = compute_ms(&c, &complete(3), &ex).unwrap();
        assert_eq!(r.value, Some(1));
        assert!(r.certification.bound.is_none());
        let r = compute_ms(&c, &QuadIdeal::zero(3), &ex).unwrap();
        assert_eq!(r.value, Some(3));
        let r = compute_cs(&c, &QuadIdeal::squares(3), &ex).unwrap();
        assert_eq!(r.value, Some(2));
    }

    #[test]
    fn failure_bounds() {
        assert_eq!(failure_bound(InvariantKind::Ms, 12, 32003), Ratio { num: 78, den: 32003 });
        assert_eq!(failure_bound(InvariantKind::Cs, 12, 32003), Ratio { num: 156, den: 32003 });
        assert!(failure_bound(InvariantKind::Cs, 12, 32003).is_informative());
        assert!(!failure_bound(InvariantKind::Ms, 4, 3).is_informative());
    }
}
