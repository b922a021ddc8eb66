//! Explicit witnesses for `ms` and `cs` of particular ideals. Each builder
//! returns linear forms; the tests check every one against
//! [`ms_check`](crate::invariants::ms_check) or
//! [`cs_check`](crate::invariants::cs_check).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::graph::{EdgeCover, Graph};
use crate::invariants::ms_check;
use crate::quad::LinearForm;

fn unit_sum(n: usize, vars: &[usize]) -> LinearForm {
    LinearForm::sum_of(n, vars).expect("variables in range")
}

/// Forms `g_1, ..., g_r` on `t = r(r+1)/2` variables with `(g_i)^2 = m^2`
/// modulo `I(K_t)`.
///
/// Variables `1..=C(r,2)` are the pair variables `m_{i,j}` in lexicographic
/// order of `(i, j)`, and variable `C(r,2) + i` is `m_i`. The form `g_i` sums
/// `m_i` and every `m_{j,k}` with `i` in `{j, k}`, so two forms share exactly
/// one variable.
pub fn triangular_complete_witness(r: usize) -> Result<(usize, Vec<LinearForm>)> {
    if r == 0 {
        return Err(Error::BadParams(String::from("r must be positive")));
    }
    let t = r * (r + 1) / 2;
    let pairs = r * (r - 1) / 2;
    let pair_var = |i: usize, j: usize| -> usize {
        // 1-based i < j
        let before: usize = (1..i).map(|a| r - a).sum();
        before + (j - i)
    };
    let forms = (1..=r)
        .map(|i| {
            let mut vars: Vec<usize> = (1..=r).filter(|&j| j != i).map(|j| pair_var(i.min(j), i.max(j))).collect();
            vars.push(pairs + i);
            vars.sort_unstable();
            unit_sum(t, &vars)
        })
        .collect();
    Ok((t, forms))
}

/// `x_i + x_{i+1}` for `1 <= i < n`; a `cs` witness for `(x_1^2, ..., x_n^2)`
/// in odd characteristic.
pub fn squares_chain_witness(n: usize) -> Result<Vec<LinearForm>> {
    if n < 2 {
        return Err(Error::BadParams(String::from("n must be at least 2")));
    }
    Ok((1..n).map(|i| unit_sum(n, &[i, i + 1])).collect())
}

/// `x_1 + x_i` for `2 <= i <= 2m + 1`; a `cs` witness for `I(C_{2m+1})` in odd
/// characteristic.
pub fn odd_cycle_cs_witness(m: usize) -> Result<Vec<LinearForm>> {
    if m == 0 {
        return Err(Error::BadParams(String::from("m must be positive")));
    }
    let n = 2 * m + 1;
    Ok((2..=n).map(|i| unit_sum(n, &[1, i])).collect())
}

/// The forms `y_1, ..., y_{n-3}` for `I(C_n)`:
/// `y_i = x_i + s_1 x_{n-2} + s_2 x_{n-1} + s_3 x_n` with signs by `i mod 4`:
/// `(+,+,+)`, `(-,-,-)`, `(-,-,+)`, `(-,+,+)` for residues 0, 1, 2, 3.
pub fn cycle_structured_witness(ctx: &FieldCtx, n: usize) -> Result<Vec<LinearForm>> {
    if n < 8 {
        return Err(Error::BadParams(format!("n must be at least 8, got {n}")));
    }
    let signs: [[i64; 3]; 4] = [[1, 1, 1], [-1, -1, -1], [-1, -1, 1], [-1, 1, 1]];
    Ok((1..=n - 3)
        .map(|i| {
            let mut c = vec![0i64; n];
            c[i - 1] = 1;
            let s = signs[i % 4];
            c[n - 3] = s[0];
            c[n - 2] = s[1];
            c[n - 1] = s[2];
            LinearForm::from_i64(ctx, &c)
        })
        .collect())
}

/// `x_r + x_s` for each edge `{r, s}` of a pairwise clique-adjacent edge
/// cover; an `ms` witness for `I(G)`.
pub fn edge_cover_witness(graph: &Graph, cover: &EdgeCover) -> Result<Vec<LinearForm>> {
    graph.validate_connected_cover(cover)?;
    Ok(cover.edges.iter().map(|&(r, s)| unit_sum(graph.n(), &[r, s])).collect())
}

/// Combines `ms` witnesses of `I(G)` and `I(H)` into one for `I(G * H)`: the
/// `i`-th output concatenates the `i`-th form of each list, the shorter list
/// padded with zero forms.
pub fn join_witness(
    ctx: &FieldCtx,
    g: &Graph,
    forms_g: &[LinearForm],
    h: &Graph,
    forms_h: &[LinearForm],
) -> Result<Vec<LinearForm>> {
    if !ms_check(ctx, &g.edge_ideal(), forms_g)? {
        return Err(Error::WitnessInvalid(String::from("first list does not witness ms")));
    }
    if !ms_check(ctx, &h.edge_ideal(), forms_h)? {
        return Err(Error::WitnessInvalid(String::from("second list does not witness ms")));
    }
    let a = forms_g.len().max(forms_h.len());
    let zg = LinearForm::zero(g.n());
    let zh = LinearForm::zero(h.n());
    Ok((0..a)
        .map(|i| forms_g.get(i).unwrap_or(&zg).concat(forms_h.get(i).unwrap_or(&zh)))
        .collect())
}

/// `x_1, ..., x_{m-1}, x_m + ... + x_{m+n-1}` for `K_m` wedged to `K_n` at
/// vertex `m` (see [`families::wedge_complete`](crate::graph::families::wedge_complete)).
pub fn wedge_complete_witness(m: usize, n: usize) -> Result<Vec<LinearForm>> {
    if m == 0 || m > n {
        return Err(Error::BadParams(format!("need 1 <= m <= n, got m = {m}, n = {n}")));
    }
    let total = m + n - 1;
    let mut forms: Vec<LinearForm> = (1..m).map(|i| unit_sum(total, &[i])).collect();
    let tail: Vec<usize> = (m..=total).collect();
    forms.push(unit_sum(total, &tail));
    Ok(forms)
}

/// The single form `x_1 + ... + x_n`.
pub fn sum_all_vars_witness(n: usize) -> Result<Vec<LinearForm>> {
    if n == 0 {
        return Err(Error::BadParams(String::from("n must be positive")));
    }
    let all: Vec<usize> = (1..=n).collect();
    Ok(vec![unit_sum(n, &all)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::invariants::cs_check;
    use crate::quad::QuadIdeal;

    fn ctx() -> FieldCtx {
        FieldCtx::new(32003, 5).unwrap()
    }

    #[test]
    fn triangular_matches_example() {
        let (t, g) = triangular_complete_witness(4).unwrap();
        assert_eq!(t, 10);
        let expect = [[1, 2, 3, 7], [1, 4, 5, 8], [2, 4, 6, 9], [3, 5, 6, 10]];
        for (f, e) in g.iter().zip(expect) {
            assert_eq!(f.support(), e.to_vec());
        }
    }

    #[test]
    fn triangular_structure_and_check() {
        let c = ctx();
        for r in 1..=6 {
            let (t, g) = triangular_complete_witness(r).unwrap();
            assert_eq!(g.len(), r);
            for (a, f) in g.iter().enumerate() {
                assert_eq!(f.support().len(), r);
                assert!(f.coeffs().iter().all(|&x| x <= 1));
                for h in &g[a + 1..] {
                    let shared = f.support().iter().filter(|v| h.support().contains(v)).count();
                    assert_eq!(shared, 1);
                }
            }
            assert!(cs_check(&c, &complete(t).unwrap().edge_ideal(), &g).unwrap(), "r = {r}");
        }
    }

    #[test]
    fn squares_chain() {
        let c = ctx();
        assert_eq!(squares_chain_witness(3).unwrap(), vec![unit_sum(3, &[1, 2]), unit_sum(3, &[2, 3])]);
        for n in 2..=10 {
            let w = squares_chain_witness(n).unwrap();
            assert_eq!(w.len(), n - 1);
            assert!(cs_check(&c, &QuadIdeal::squares(n), &w).unwrap());
        }
        assert!(squares_chain_witness(1).is_err());
    }

    #[test]
    fn odd_cycles() {
        let c = ctx();
        for m in 1..=10 {
            let w = odd_cycle_cs_witness(m).unwrap();
            assert_eq!(w.len(), 2 * m);
            assert!(cs_check(&c, &cycle(2 * m + 1).unwrap().edge_ideal(), &w).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn structured_cycle_forms() {
        let c = ctx();
        let w = cycle_structured_witness(&c, 8).unwrap();
        assert_eq!(w.len(), 5);
        // y_1 = x_1 - x_6 - x_7 - x_8
        assert_eq!(w[0], LinearForm::from_i64(&c, &[1, 0, 0, 0, 0, -1, -1, -1]));
        // y_4 = x_4 + x_6 + x_7 + x_8
        assert_eq!(w[3], LinearForm::from_i64(&c, &[0, 0, 0, 1, 0, 1, 1, 1]));
        for n in [8, 12, 20] {
            let w = cycle_structured_witness(&c, n).unwrap();
            assert_eq!(w.len(), n - 3);
            assert!(ms_check(&c, &cycle(n).unwrap().edge_ideal(), &w).unwrap(), "n = {n}");
        }
        assert!(cycle_structured_witness(&c, 7).is_err());
    }

    #[test]
    fn edge_covers() {
        let c = ctx();
        let c6 = cycle(6).unwrap();
        let cover = EdgeCover { edges: vec![(1, 2), (3, 4), (5, 6)] };
        let w = edge_cover_witness(&c6, &cover).unwrap();
        assert_eq!(w.len(), 3);
        assert!(ms_check(&c, &c6.edge_ideal(), &w).unwrap());

        let s5 = star(5).unwrap();
        let cover = EdgeCover { edges: (2..=5).map(|j| (1, j)).collect() };
        assert!(ms_check(&c, &s5.edge_ideal(), &edge_cover_witness(&s5, &cover).unwrap()).unwrap());

        let p = petersen();
        let spokes = EdgeCover { edges: (1..=5).map(|i| (i, i + 5)).collect() };
        assert!(ms_check(&c, &p.edge_ideal(), &edge_cover_witness(&p, &spokes).unwrap()).unwrap());

        let bad = EdgeCover { edges: vec![(1, 2), (4, 5), (3, 4), (5, 6)] };
        assert!(matches!(edge_cover_witness(&c6, &bad), Err(Error::CoverInvalid(_))));
    }

    #[test]
    fn joins() {
        let c = ctx();
        let e2 = empty(2).unwrap();
        let e3 = empty(3).unwrap();
        let coords = |n: usize| (1..=n).map(|j| LinearForm::var(n, j).unwrap()).collect::<Vec<_>>();
        let w = join_witness(&c, &e2, &coords(2), &e3, &coords(3)).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w[0].support(), vec![1, 3]);
        assert_eq!(w[2].support(), vec![5]);
        assert!(ms_check(&c, &e2.join(&e3).unwrap().edge_ideal(), &w).unwrap());

        let k2 = complete(2).unwrap();
        let k3 = complete(3).unwrap();
        let w = join_witness(&c, &k2, &sum_all_vars_witness(2).unwrap(), &k3, &sum_all_vars_witness(3).unwrap())
            .unwrap();
        assert_eq!(w.len(), 1);
        assert!(ms_check(&c, &complete(5).unwrap().edge_ideal(), &w).unwrap());

        let k1 = complete(1).unwrap();
        let c6 = cycle(6).unwrap();
        let c6w = edge_cover_witness(&c6, &EdgeCover { edges: vec![(1, 2), (3, 4), (5, 6)] }).unwrap();
        let w = join_witness(&c, &k1, &sum_all_vars_witness(1).unwrap(), &c6, &c6w).unwrap();
        assert_eq!(w.len(), 3);
        assert!(ms_check(&c, &wheel(7).unwrap().edge_ideal(), &w).unwrap());

        assert!(matches!(
            join_witness(&c, &e2, &coords(2)[..1], &e3, &coords(3)),
            Err(Error::WitnessInvalid(_))
        ));
    }

    #[test]
    fn wedges() {
        let c = ctx();
        for n in 1..=8 {
            for m in 1..=n {
                let w = wedge_complete_witness(m, n).unwrap();
                assert_eq!(w.len(), m);
                let g = wedge_complete(m, n).unwrap();
                assert!(ms_check(&c, &g.edge_ideal(), &w).unwrap(), "m = {m}, n = {n}");
            }
        }
        assert!(wedge_complete_witness(3, 2).is_err());
    }

    #[test]
    fn sum_all_vars() {
        let c = ctx();
        for n in 1..8 {
            assert!(ms_check(&c, &complete(n).unwrap().edge_ideal(), &sum_all_vars_witness(n).unwrap()).unwrap());
        }
        let i = QuadIdeal::from_monomials(2, &[(1, 1), (1, 2)]).unwrap();
        assert!(cs_check(&c, &i, &sum_all_vars_witness(2).unwrap()).unwrap());
        let all_but: Vec<(usize, usize)> =
            (1..=4).flat_map(|i| (i..=4).map(move |j| (i, j))).filter(|&p| p != (1, 2)).collect();
        let i = QuadIdeal::from_monomials(4, &all_but).unwrap();
        assert!(cs_check(&c, &i, &sum_all_vars_witness(4).unwrap()).unwrap());
    }
}
