//! Doubling sets: `S` inside `{0, ..., n}` with `S + S = {0, ..., 2n}`. The
//! smallest such set bounds `cs` of the `n`-th Veronese subring of `k[x, y]`
//! from above; square-root bounds bracket it.

use alloc::format;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `min_doubling_set` refuses `n` beyond this.
pub const MAX_DOUBLING_N: usize = 40;

/// `ms` of every Veronese subring of `k[x, y]`.
pub const VERONESE_MS: usize = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublingSet {
    pub n: usize,
    /// Sorted, distinct, all at most `n`.
    pub members: Vec<usize>,
}

impl DoublingSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        is_complete(self.n, &self.members)
    }
}

/// Whether `S + S` is all of `{0, ..., 2n}` (members above `n` are rejected).
pub fn is_complete(n: usize, members: &[usize]) -> bool {
    if members.iter().any(|&s| s > n) {
        return false;
    }
    let mut hit = alloc::vec![false; 2 * n + 1];
    for &a in members {
        for &b in members {
            hit[a + b] = true;
        }
    }
    hit.into_iter().all(|h| h)
}

/// `S(n, d) = {0, ..., d} U {n - d, ..., n} U {kd : d <= kd <= n - d}`.
pub fn snd_construction(n: usize, d: usize) -> Result<DoublingSet> {
    if d == 0 || d > n {
        return Err(Error::BadParams(format!("need 1 <= d <= n, got n = {n}, d = {d}")));
    }
    let mut members: Vec<usize> = (0..=d).chain(n - d..=n).collect();
    let mut k = d;
    while k + d <= n {
        members.push(k);
        k += d;
    }
    members.sort_unstable();
    members.dedup();
    Ok(DoublingSet { n, members })
}

/// The smallest `S(n, d)` over `1 <= d <= n` (the first one on ties).
pub fn best_snd(n: usize) -> Result<DoublingSet> {
    if n == 0 {
        return Ok(DoublingSet { n, members: alloc::vec![0] });
    }
    let mut best: Option<DoublingSet> = None;
    for d in 1..=n {
        let s = snd_construction(n, d)?;
        if best.as_ref().is_none_or(|b| s.len() < b.len()) {
            best = Some(s);
        }
    }
    Ok(best.expect("n >= 1"))
}

/// `ceil(2 sqrt(n + 9/16) - 1/2)`: the least `L` with `(2L + 1)^2 >= 16n + 9`.
pub fn doubling_lower_bound(n: usize) -> usize {
    let target = 16 * n + 9;
    let mut l = 0;
    while (2 * l + 1) * (2 * l + 1) < target {
        l += 1;
    }
    l
}

/// `ceil(2 sqrt(2n) + 1)`: the least `U >= 1` with `(U - 1)^2 >= 8n`.
pub fn doubling_upper_formula(n: usize) -> usize {
    let mut u = 1;
    while (u - 1) * (u - 1) < 8 * n {
        u += 1;
    }
    u
}

type Sums = u128;

struct Search {
    n: usize,
    target: Sums,
    best: Vec<usize>,
}

impl Search {
    fn add(set: Sums, sums: Sums, y: usize) -> Sums {
        sums | (set << y) | (1 << (2 * y))
    }

    /// Elements `n, n - 1, ..., x + 1` are decided; decide `x`.
    fn go(&mut self, x: usize, chosen: &mut Vec<usize>, set: Sums, sums: Sums) {
        if sums == self.target {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        if chosen.len() + 1 >= self.best.len() {
            return;
        }
        // With j more elements at most j|S| + j(j+1)/2 new sums appear.
        let missing = (self.target & !sums).count_ones() as usize;
        let s = chosen.len();
        let mut j = 0;
        while j * s + j * (j + 1) / 2 < missing {
            j += 1;
        }
        if s + j >= self.best.len() || j > x + 1 {
            return;
        }
        for include in [true, false] {
            let (set2, sums2) = if include {
                (set | (1 << x), Self::add(set, sums, x))
            } else {
                (set, sums)
            };
            // Sum x + n only uses elements >= x, all decided now.
            if sums2 & (1 << (x + self.n)) == 0 {
                continue;
            }
            if x == 0 {
                if sums2 == self.target && chosen.len() + usize::from(include) < self.best.len() {
                    let mut s = chosen.clone();
                    if include {
                        s.push(0);
                    }
                    self.best = s;
                }
                continue;
            }
            if include {
                chosen.push(x);
            }
            self.go(x - 1, chosen, set2, sums2);
            if include {
                chosen.pop();
            }
        }
    }
}

/// A smallest doubling set for `n`, by branch and bound over elements in
/// decreasing order. Ties are broken by that order (larger elements are
/// tried in first).
pub fn min_doubling_set(n: usize) -> Result<(usize, DoublingSet)> {
    if n > MAX_DOUBLING_N {
        return Err(Error::TooLarge(format!("doubling set search for n = {n} (at most {MAX_DOUBLING_N})")));
    }
    if n == 0 {
        return Ok((1, DoublingSet { n, members: alloc::vec![0] }));
    }
    let incumbent = best_snd(n)?;
    let target: Sums = (1 << (2 * n + 1)) - 1;
    // The incumbent is only improved on strictly, so seed it one larger and
    // let the search rediscover it when nothing smaller exists.
    let mut search = Search { n, target, best: Vec::new() };
    search.best = (0..=incumbent.len()).collect();
    let mut chosen = Vec::new();
    search.go(n, &mut chosen, 0, 0);
    let mut members = search.best;
    members.sort_unstable();
    debug_assert!(is_complete(n, &members));
    if n >= 2 {
        for f in [0, 1, n - 1, n] {
            debug_assert!(members.contains(&f));
        }
    }
    let set = DoublingSet { n, members };
    Ok((set.len(), set))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeroneseBounds {
    pub n: usize,
    /// `ceil(2 sqrt(n + 9/16) - 1/2)`, a lower bound on any doubling set.
    pub lower: usize,
    /// `min_d |S(n, d)|`.
    pub upper: usize,
    /// `ceil(2 sqrt(2n) + 1)`.
    pub upper_formula: usize,
    /// Size of a smallest doubling set, when `n` is within the search guard.
    pub exact: Option<usize>,
    /// A smallest doubling set, or the best `S(n, d)` beyond the guard.
    pub set: Vec<usize>,
    pub ms: usize,
}

pub fn veronese_cs_bounds(n: usize) -> Result<VeroneseBounds> {
    if n == 0 {
        return Err(Error::BadParams(alloc::string::String::from("n must be positive")));
    }
    let snd = best_snd(n)?;
    let (exact, set) = if n <= MAX_DOUBLING_N {
        let (k, s) = min_doubling_set(n)?;
        (Some(k), s.members)
    } else {
        (None, snd.members.clone())
    };
    Ok(VeroneseBounds {
        n,
        lower: doubling_lower_bound(n),
        upper: snd.len(),
        upper_formula: doubling_upper_formula(n),
        exact,
        set,
        ms: VERONESE_MS,
    })
}
