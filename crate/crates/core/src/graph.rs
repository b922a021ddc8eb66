//! Finite simple graphs on `1..=n` (at most 64 vertices), the families and
//! operations used for edge rings, and the exact combinatorial invariants
//! that feed the `ms` bounds.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quad::QuadIdeal;

pub const MAX_VERTICES: usize = 64;
pub const MAX_ALPHA_VERTICES: usize = 50;
pub const MAX_ENUM_VERTICES: usize = 20;
pub const MAX_COVER_VERTICES: usize = 16;

type Mask = u64;

fn bit(v: usize) -> Mask {
    1 << v
}

fn full_mask(n: usize) -> Mask {
    if n == 64 {
        !0
    } else {
        (1 << n) - 1
    }
}

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Mask>,
    name: Option<String>,
}

/// Equality ignores the name tag.
pub fn same_graph(a: &Graph, b: &Graph) -> bool {
    a.n == b.n && a.adj == b.adj
}

/// A set of edges meant to cover every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCover {
    pub edges: Vec<(usize, usize)>,
}

impl EdgeCover {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(format!("{n} vertices (at most {MAX_VERTICES})")));
        }
        Ok(Graph { n, adj: vec![0; n], name: None })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(i, j) in edges {
            g.insert_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::OutOfRange(format!("vertex {v} not in 1..={}", self.n)));
        }
        Ok(())
    }

    fn insert_edge(&mut self, i: usize, j: usize) -> Result<()> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(Error::BadParams(format!("loop at vertex {i}")));
        }
        self.adj[i - 1] |= bit(j - 1);
        self.adj[j - 1] |= bit(i - 1);
        Ok(())
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.n && j <= self.n && self.adj[i - 1] & bit(j - 1) != 0
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in bits(self.adj[i] & !full_mask(i + 1)) {
                out.push((i + 1, j + 1));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    /// Neighbours of `v`, 1-based and sorted.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        bits(self.adj[v - 1]).map(|u| u + 1).collect()
    }

    pub fn add_edge(&self, i: usize, j: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_edge(i, j)?;
        Ok(g)
    }

    pub fn remove_edge(&self, i: usize, j: usize) -> Result<Graph> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        let mut g = self.clone();
        g.adj[i - 1] &= !bit(j - 1);
        g.adj[j - 1] &= !bit(i - 1);
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !bit(v)).collect();
        Graph { n: self.n, adj, name: None }
    }

    /// `G + H`: `H`'s vertices become `n_G + 1, ..., n_G + n_H`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::empty(self.n + other.n)?;
        for (i, j) in self.edges() {
            g.insert_edge(i, j)?;
        }
        for (i, j) in other.edges() {
            g.insert_edge(i + self.n, j + self.n)?;
        }
        Ok(g)
    }

    /// `G * H`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for i in 1..=self.n {
            for j in 1..=other.n {
                g.insert_edge(i, self.n + j)?;
            }
        }
        Ok(g)
    }

    /// Glues `H` onto `G` by identifying `v in H` with `u in G`. `G` keeps
    /// its labels; the other vertices of `H` follow in their original order.
    pub fn wedge(&self, u: usize, other: &Graph, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        other.check_vertex(v)?;
        let map = |w: usize| -> usize {
            match w.cmp(&v) {
                core::cmp::Ordering::Equal => u,
                core::cmp::Ordering::Less => self.n + w,
                core::cmp::Ordering::Greater => self.n + w - 1,
            }
        };
        let mut g = Graph::empty(self.n + other.n - 1)?;
        for (i, j) in self.edges() {
            g.insert_edge(i, j)?;
        }
        for (i, j) in other.edges() {
            g.insert_edge(map(i), map(j))?;
        }
        Ok(g)
    }

    /// `G[V]`, relabelled `1..=|V|` in increasing order of the original labels.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut vs: Vec<usize> = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        for &v in &vs {
            self.check_vertex(v)?;
        }
        let mut g = Graph::empty(vs.len())?;
        for (a, &i) in vs.iter().enumerate() {
            for (b, &j) in vs.iter().enumerate().skip(a + 1) {
                if self.has_edge(i, j) {
                    g.insert_edge(a + 1, b + 1)?;
                }
            }
        }
        Ok(g)
    }

    pub fn add_isolated(&self, d: usize) -> Result<Graph> {
        self.disjoint_union(&Graph::empty(d)?)
    }

    /// Renames vertex `i` to `perm[i - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: perm.len() });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p == 0 || p > self.n || core::mem::replace(&mut seen[p - 1], true) {
                return Err(Error::BadParams(String::from("not a permutation")));
            }
        }
        let mut g = Graph::empty(self.n)?;
        for (i, j) in self.edges() {
            g.insert_edge(perm[i - 1], perm[j - 1])?;
        }
        Ok(g)
    }

    /// `I(G) = (x_i x_j : {i, j} in E(G))`.
    pub fn edge_ideal(&self) -> QuadIdeal {
        QuadIdeal::from_monomials(self.n, &self.edges()).expect("edges are in range")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_layers(0).iter().map(|l| l.count_ones() as usize).sum::<usize>() == self.n
    }

    fn bfs_layers(&self, start: usize) -> Vec<Mask> {
        let mut seen = bit(start);
        let mut frontier = bit(start);
        let mut layers = vec![frontier];
        loop {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= !seen;
            if next == 0 {
                return layers;
            }
            seen |= next;
            layers.push(next);
            frontier = next;
        }
    }

    /// Largest distance between two vertices.
    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok((0..self.n).map(|v| self.bfs_layers(v).len() - 1).max().unwrap_or(0))
    }

    /// `alpha(G)`, the size of a largest independent set.
    pub fn independence_number(&self) -> Result<usize> {
        Ok(self.maximum_independent_set()?.len())
    }

    /// A largest independent set (1-based, sorted).
    pub fn maximum_independent_set(&self) -> Result<Vec<usize>> {
        if self.n > MAX_ALPHA_VERTICES {
            return Err(Error::TooLarge(format!(
                "independence number on {} vertices (at most {MAX_ALPHA_VERTICES})",
                self.n
            )));
        }
        let comp = self.complement();
        let mut best = Vec::new();
        let mut current = Vec::new();
        comp.expand_clique(full_mask(self.n), &mut current, &mut best);
        best.sort_unstable();
        Ok(best.into_iter().map(|v| v + 1).collect())
    }

    /// `tau(G) = n - alpha(G)`.
    pub fn vertex_cover_number(&self) -> Result<usize> {
        Ok(self.n - self.independence_number()?)
    }

    /// `omega(G) = alpha(complement G)`.
    pub fn clique_number(&self) -> Result<usize> {
        self.complement().independence_number()
    }

    /// Maximum-clique branch and bound with a greedy colouring bound.
    fn expand_clique(&self, cand: Mask, current: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cand == 0 {
            if current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        // Greedy colour classes give, for each candidate, an upper bound on
        // the clique it can still complete.
        let mut order: Vec<(usize, usize)> = Vec::new();
        let mut uncoloured = cand;
        let mut colour = 0;
        while uncoloured != 0 {
            colour += 1;
            let mut avail = uncoloured;
            while avail != 0 {
                let v = avail.trailing_zeros() as usize;
                avail &= !bit(v) & !self.adj[v];
                uncoloured &= !bit(v);
                order.push((v, colour));
            }
        }
        let mut cand = cand;
        for &(v, c) in order.iter().rev() {
            if current.len() + c <= best.len() {
                return;
            }
            current.push(v);
            self.expand_clique(cand & self.adj[v], current, best);
            current.pop();
            cand &= !bit(v);
        }
    }

    /// Lexicographic breadth-first search; returns the visit order.
    pub fn lex_bfs(&self) -> Vec<usize> {
        let n = self.n;
        let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut visited = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for step in 0..n {
            let v = (0..n)
                .filter(|&v| !visited[v])
                .fold(None, |best: Option<usize>, v| match best {
                    Some(b) if labels[b] >= labels[v] => Some(b),
                    _ => Some(v),
                })
                .expect("unvisited vertex");
            visited[v] = true;
            order.push(v + 1);
            for u in bits(self.adj[v]) {
                if !visited[u] {
                    labels[u].push(n - step);
                }
            }
        }
        order
    }

    /// No induced cycle of length at least four. Checked by verifying that
    /// the reverse of a LexBFS order is a perfect elimination ordering.
    pub fn is_chordal(&self) -> bool {
        let order = self.lex_bfs();
        let mut earlier: Mask = 0;
        for &v in &order {
            let back = self.adj[v - 1] & earlier;
            for u in bits(back) {
                if back & !bit(u) & !self.adj[u] != 0 {
                    return false;
                }
            }
            earlier |= bit(v - 1);
        }
        true
    }

    /// Length of a shortest induced cycle of length at least four, if any.
    pub fn shortest_hole(&self) -> Result<Option<usize>> {
        if self.n > MAX_ENUM_VERTICES {
            return Err(Error::TooLarge(format!(
                "hole search on {} vertices (at most {MAX_ENUM_VERTICES})",
                self.n
            )));
        }
        let mut best = usize::MAX;
        for v0 in 0..self.n {
            let allowed = !full_mask(v0 + 1) & full_mask(self.n);
            let mut path = vec![v0];
            self.extend_hole(&mut path, 0, allowed, &mut best);
        }
        Ok((best != usize::MAX).then_some(best))
    }

    /// Extends the induced path `path` (starting at its minimum vertex). A
    /// vertex is usable if it is above `path[0]` and not adjacent to any
    /// path vertex other than the last (adjacency to `path[0]` closes).
    fn extend_hole(&self, path: &mut Vec<usize>, blocked: Mask, allowed: Mask, best: &mut usize) {
        let k = path.len();
        if k + 1 >= *best {
            return;
        }
        let last = path[k - 1];
        let v0 = path[0];
        let nexts = self.adj[last] & allowed & !blocked;
        for w in bits(nexts) {
            if path.contains(&w) {
                continue;
            }
            if k >= 2 && self.adj[w] & bit(v0) != 0 {
                if k >= 3 {
                    *best = (*best).min(k + 1);
                }
                continue;
            }
            // `last` becomes interior: later vertices must avoid its
            // neighbourhood.
            let newly_blocked = if k >= 2 { self.adj[last] | bit(last) } else { 0 };
            path.push(w);
            let b = blocked | newly_blocked;
            self.extend_hole(path, b, allowed, best);
            path.pop();
        }
    }

    /// `mcn(G)`: the shortest induced cycle of length at least four in the
    /// complement, absent when the complement is chordal.
    pub fn mcn(&self) -> Result<Option<usize>> {
        self.complement().shortest_hole()
    }

    /// `theta(G)`, the least number of cliques covering the vertices; the
    /// chromatic number of the complement.
    pub fn clique_cover_number(&self) -> Result<usize> {
        if self.n > MAX_ENUM_VERTICES {
            return Err(Error::TooLarge(format!(
                "clique cover on {} vertices (at most {MAX_ENUM_VERTICES})",
                self.n
            )));
        }
        Ok(self.complement().chromatic_number())
    }

    pub fn chromatic_number(&self) -> usize {
        let n = self.n;
        if n == 0 {
            return 0;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| core::cmp::Reverse(self.adj[v].count_ones()));
        // Greedy colouring for the initial incumbent.
        let mut colours = vec![usize::MAX; n];
        let mut best = 0;
        for &v in &order {
            let used: Vec<usize> = bits(self.adj[v]).map(|u| colours[u]).collect();
            let c = (0..).find(|c| !used.contains(c)).expect("some colour");
            colours[v] = c;
            best = best.max(c + 1);
        }
        let lower = self.clique_number().unwrap_or(1).max(1);
        if best == lower {
            return best;
        }
        let mut classes: Vec<Mask> = Vec::new();
        self.colour_search(&order, 0, &mut classes, &mut best, lower);
        best
    }

    fn colour_search(&self, order: &[usize], i: usize, classes: &mut Vec<Mask>, best: &mut usize, lower: usize) {
        if *best == lower {
            return;
        }
        if i == order.len() {
            *best = (*best).min(classes.len());
            return;
        }
        let v = order[i];
        for c in 0..classes.len() {
            if classes[c] & self.adj[v] == 0 {
                classes[c] |= bit(v);
                self.colour_search(order, i + 1, classes, best, lower);
                classes[c] &= !bit(v);
            }
        }
        if classes.len() + 1 < *best {
            classes.push(bit(v));
            self.colour_search(order, i + 1, classes, best, lower);
            classes.pop();
        }
    }

    /// Two edges are clique-adjacent when they share a vertex or an edge of
    /// the graph joins them.
    pub fn clique_adjacent(&self, e: (usize, usize), f: (usize, usize)) -> bool {
        let ends = |x: (usize, usize)| bit(x.0 - 1) | bit(x.1 - 1);
        let (a, b) = (ends(e), ends(f));
        if a & b != 0 {
            return true;
        }
        bits(a).any(|v| self.adj[v] & b != 0)
    }

    /// Checks that `cover` lists edges of the graph, covers every vertex, and
    /// that its edges are pairwise clique-adjacent.
    pub fn validate_connected_cover(&self, cover: &EdgeCover) -> Result<()> {
        let mut covered: Mask = 0;
        for &(i, j) in &cover.edges {
            if !self.has_edge(i, j) {
                return Err(Error::CoverInvalid(format!("{{{i}, {j}}} is not an edge")));
            }
            covered |= bit(i - 1) | bit(j - 1);
        }
        if covered != full_mask(self.n) {
            let missing = bits(full_mask(self.n) & !covered).next().expect("uncovered") + 1;
            return Err(Error::CoverInvalid(format!("vertex {missing} is not covered")));
        }
        for (a, &e) in cover.edges.iter().enumerate() {
            for &f in &cover.edges[a + 1..] {
                if !self.clique_adjacent(e, f) {
                    return Err(Error::CoverInvalid(format!(
                        "{{{}, {}}} and {{{}, {}}} are not clique-adjacent",
                        e.0, e.1, f.0, f.1
                    )));
                }
            }
        }
        Ok(())
    }

    fn cover_guard(&self) -> Result<()> {
        if self.n > MAX_COVER_VERTICES {
            return Err(Error::TooLarge(format!(
                "edge cover search on {} vertices (at most {MAX_COVER_VERTICES})",
                self.n
            )));
        }
        Ok(())
    }

    /// Every pairwise clique-adjacent edge cover with at most `l` edges that
    /// is irredundant in the search order (each edge covers the lowest
    /// vertex left uncovered when it was chosen).
    pub fn k_connected_edge_covers(&self, l: usize) -> Result<Vec<EdgeCover>> {
        self.cover_guard()?;
        let mut found = BTreeSet::new();
        self.cover_search(l, &mut |chosen: &[(usize, usize)]| {
            let mut e = chosen.to_vec();
            e.sort_unstable();
            found.insert(e);
            true
        });
        Ok(found.into_iter().map(|edges| EdgeCover { edges }).collect())
    }

    /// A pairwise clique-adjacent edge cover with at most `l` edges.
    pub fn k_connected_edge_cover(&self, l: usize) -> Result<Option<EdgeCover>> {
        self.cover_guard()?;
        let mut out = None;
        self.cover_search(l, &mut |chosen: &[(usize, usize)]| {
            out = Some(EdgeCover { edges: chosen.to_vec() });
            false
        });
        Ok(out)
    }

    /// The smallest pairwise clique-adjacent edge cover, searching sizes
    /// upward from `ceil(n / 2)`.
    pub fn min_k_connected_edge_cover(&self) -> Result<Option<(usize, EdgeCover)>> {
        self.cover_guard()?;
        for l in self.n.div_ceil(2)..=self.n {
            if let Some(c) = self.k_connected_edge_cover(l)? {
                return Ok(Some((c.len(), c)));
            }
        }
        Ok(None)
    }

    fn cover_search<F: FnMut(&[(usize, usize)]) -> bool>(&self, l: usize, visit: &mut F) {
        if (0..self.n).any(|v| self.adj[v] == 0) {
            return;
        }
        let mut chosen = Vec::new();
        self.cover_step(l, 0, &mut chosen, visit);
    }

    fn cover_step<F: FnMut(&[(usize, usize)]) -> bool>(
        &self,
        l: usize,
        covered: Mask,
        chosen: &mut Vec<(usize, usize)>,
        visit: &mut F,
    ) -> bool {
        let uncovered = full_mask(self.n) & !covered;
        if uncovered == 0 {
            return visit(chosen);
        }
        let remaining = l - chosen.len();
        if remaining == 0 || (uncovered.count_ones() as usize).div_ceil(2) > remaining {
            return true;
        }
        let u = uncovered.trailing_zeros() as usize;
        for w in bits(self.adj[u]) {
            let e = if u < w { (u + 1, w + 1) } else { (w + 1, u + 1) };
            if chosen.iter().all(|&f| self.clique_adjacent(e, f)) {
                chosen.push(e);
                let go_on = self.cover_step(l, covered | bit(u) | bit(w), chosen, visit);
                chosen.pop();
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
}

/// All labelled graphs on `n` vertices (`2^C(n,2)` of them); `n <= 7`.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 7 {
        return Err(Error::TooLarge(format!("all graphs on {n} vertices")));
    }
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    let mut out = Vec::with_capacity(1 << pairs.len());
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &e)| e).collect();
        out.push(Graph::from_edges(n, &edges)?);
    }
    Ok(out)
}

/// Named graph families.
pub mod families {
    use super::*;

    fn need(ok: bool, what: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::BadParams(String::from(what)))
        }
    }

    /// `P_n`: edges `{i, i+1}`.
    pub fn path(n: usize) -> Result<Graph> {
        need(n >= 1, "path needs n >= 1")?;
        let e: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Ok(Graph::from_edges(n, &e)?.with_name(format!("P{n}")))
    }

    /// `C_n`: the path plus `{1, n}`.
    pub fn cycle(n: usize) -> Result<Graph> {
        need(n >= 3, "cycle needs n >= 3")?;
        let mut e: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        e.push((1, n));
        Ok(Graph::from_edges(n, &e)?.with_name(format!("C{n}")))
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let e: Vec<_> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        Ok(Graph::from_edges(n, &e)?.with_name(format!("K{n}")))
    }

    pub fn empty(n: usize) -> Result<Graph> {
        Ok(Graph::empty(n)?.with_name(format!("E{n}")))
    }

    /// `S_n`: hub `1`, leaves `2..=n`.
    pub fn star(n: usize) -> Result<Graph> {
        need(n >= 2, "star needs n >= 2")?;
        let e: Vec<_> = (2..=n).map(|j| (1, j)).collect();
        Ok(Graph::from_edges(n, &e)?.with_name(format!("S{n}")))
    }

    /// `W_n`: hub `1` joined to the cycle `2, ..., n`.
    pub fn wheel(n: usize) -> Result<Graph> {
        need(n >= 4, "wheel needs n >= 4")?;
        let mut e: Vec<_> = (2..=n).map(|j| (1, j)).collect();
        e.extend((2..n).map(|i| (i, i + 1)));
        e.push((2, n));
        Ok(Graph::from_edges(n, &e)?.with_name(format!("W{n}")))
    }

    /// `K_{n_1, ..., n_t}`, parts numbered consecutively.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
        need(!parts.is_empty() && parts.iter().all(|&p| p >= 1), "parts must be positive")?;
        let mut g = Graph::empty(0)?;
        for &p in parts {
            g = g.join(&Graph::empty(p)?)?;
        }
        let tag: Vec<String> = parts.iter().map(|p| format!("{p}")).collect();
        Ok(g.with_name(format!("K{{{}}}", tag.join(","))))
    }

    /// Outer pentagram on `1..=5`, inner pentagon on `6..=10`, spokes
    /// `{i, i+5}`.
    pub fn petersen() -> Graph {
        let mut e = vec![(1, 3), (2, 4), (3, 5), (1, 4), (2, 5)];
        e.extend([(6, 7), (7, 8), (8, 9), (9, 10), (6, 10)]);
        e.extend((1..=5).map(|i| (i, i + 5)));
        Graph::from_edges(10, &e).expect("valid").with_name("Petersen")
    }

    /// The Möbius ladder `M_8`: the 8-cycle plus the long diagonals.
    pub fn wagner() -> Graph {
        let mut e: Vec<_> = (1..8).map(|i| (i, i + 1)).collect();
        e.push((1, 8));
        e.extend((1..=4).map(|i| (i, i + 4)));
        Graph::from_edges(8, &e).expect("valid").with_name("M8")
    }

    /// `K_m` and `K_n` glued at a vertex: `K_m` on `1..=m`, `K_n` on
    /// `m..=m+n-1`.
    pub fn wedge_complete(m: usize, n: usize) -> Result<Graph> {
        need(m >= 1 && n >= 1, "wedge needs positive sizes")?;
        Ok(complete(m)?.wedge(m, &complete(n)?, 1)?.with_name(format!("K{m}vK{n}")))
    }

    /// The kite `T_n`, the wedge of `K_{n-2}` and `K_2`.
    pub fn kite(n: usize) -> Result<Graph> {
        need(n >= 5, "kite needs n >= 5")?;
        Ok(wedge_complete(n - 2, 2)?.with_name(format!("T{n}")))
    }

    /// `J_{m,n}`: `K_m` on `1..=m` with tentacles `{1, m + j}`.
    pub fn jellyfish(m: usize, n: usize) -> Result<Graph> {
        need(m >= 1 && n >= 1, "jellyfish needs positive m and n")?;
        let mut e: Vec<_> = (1..=m).flat_map(|i| (i + 1..=m).map(move |j| (i, j))).collect();
        e.extend((1..=n).map(|j| (1, m + j)));
        Ok(Graph::from_edges(m + n, &e)?.with_name(format!("J{m},{n}")))
    }

    /// Builds a family by name: `path`, `cycle`, `complete`, `empty`, `star`,
    /// `wheel`, `multipartite`, `petersen`, `wagner`, `kite`, `jellyfish`,
    /// `wedge`.
    pub fn build(family: &str, params: &[usize]) -> Result<Graph> {
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::BadParams(format!("{family} takes {k} parameter(s), got {}", params.len())))
            }
        };
        match family {
            "path" => arity(1).and_then(|_| path(params[0])),
            "cycle" => arity(1).and_then(|_| cycle(params[0])),
            "complete" => arity(1).and_then(|_| complete(params[0])),
            "empty" => arity(1).and_then(|_| empty(params[0])),
            "star" => arity(1).and_then(|_| star(params[0])),
            "wheel" => arity(1).and_then(|_| wheel(params[0])),
            "kite" => arity(1).and_then(|_| kite(params[0])),
            "multipartite" => complete_multipartite(params),
            "petersen" => arity(0).map(|_| petersen()),
            "wagner" => arity(0).map(|_| wagner()),
            "jellyfish" => arity(2).and_then(|_| jellyfish(params[0], params[1])),
            "wedge" => arity(2).and_then(|_| wedge_complete(params[0], params[1])),
            _ => Err(Error::BadParams(format!("unknown graph family '{family}'"))),
        }
    }
}
