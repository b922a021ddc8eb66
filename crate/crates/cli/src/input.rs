//! Input specs and the JSON file formats for graphs and quadratic ideals.
//!
//! A spec is either `file:PATH` or an expression over graph families:
//!
//! ```text
//! cycle:8   jellyfish:3,2   petersen   squares:5
//! union(cycle:4, complete:3)   join(empty:2, empty:3)   complement(star:6)
//! ```

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use msq_core::graph::families;
use msq_core::{FieldCtx, Graph, QuadForm, QuadIdeal};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// `{"n": 4, "edges": [[1, 2], [2, 3]]}`, vertices 1-based with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile { n: g.n(), edges: g.edges().into_iter().map(|(i, j)| [i, j]).collect() }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Ok(Graph::from_edges(self.n, &edges)?)
    }
}

/// `{"n": 3, "quadrics": [[[1, 1, 1], [2, 3, -2]], ...]}`: each quadric is a
/// list of `[i, j, c]` terms meaning `c x_i x_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub n: usize,
    pub quadrics: Vec<Vec<(usize, usize, i64)>>,
}

impl IdealFile {
    pub fn to_ideal(&self, ctx: &FieldCtx) -> Result<QuadIdeal> {
        let forms = self
            .quadrics
            .iter()
            .map(|terms| QuadForm::from_terms(ctx, self.n, terms))
            .collect::<msq_core::Result<Vec<_>>>()?;
        Ok(QuadIdeal::span(ctx, self.n, &forms)?)
    }

    /// Monomial ideals only need the monomials; other ideals are written
    /// from their reduced basis.
    pub fn from_ideal(ideal: &QuadIdeal) -> Self {
        let quadrics = ideal
            .generators()
            .iter()
            .map(|q| q.terms().into_iter().map(|(i, j, c)| (i, j, c as i64)).collect())
            .collect();
        IdealFile { n: ideal.n(), quadrics }
    }
}

/// Where an input came from: the spec string, plus the SHA-256 of every
/// file it read.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDescriptor {
    pub spec: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub sha256: Vec<String>,
}

#[derive(Debug, Clone)]
pub enum Target {
    Graph(Graph),
    Ideal(QuadIdeal),
}

#[derive(Debug, Clone)]
pub struct Input {
    pub descriptor: InputDescriptor,
    pub target: Target,
}

impl Input {
    pub fn from_graph(spec: impl Into<String>, g: Graph) -> Self {
        Input { descriptor: InputDescriptor { spec: spec.into(), sha256: Vec::new() }, target: Target::Graph(g) }
    }

    pub fn ideal(&self) -> QuadIdeal {
        match &self.target {
            Target::Graph(g) => g.edge_ideal(),
            Target::Ideal(i) => i.clone(),
        }
    }

    pub fn n(&self) -> usize {
        match &self.target {
            Target::Graph(g) => g.n(),
            Target::Ideal(i) => i.n(),
        }
    }

    pub fn graph(&self) -> Option<&Graph> {
        match &self.target {
            Target::Graph(g) => Some(g),
            Target::Ideal(_) => None,
        }
    }

    /// `dim R = alpha(G)` for edge rings small enough to compute it.
    pub fn alpha_hint(&self) -> Option<usize> {
        self.graph().and_then(|g| g.independence_number().ok())
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Parses a spec into a graph or an ideal.
pub fn parse_input(ctx: &FieldCtx, spec: &str) -> Result<Input> {
    let mut parser = Parser { src: spec.trim(), pos: 0, hashes: Vec::new() };
    let target = parser.expr(ctx)?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        bail!("unexpected trailing input at byte {} of '{spec}'", parser.pos);
    }
    Ok(Input { descriptor: InputDescriptor { spec: spec.trim().to_string(), sha256: parser.hashes }, target })
}

/// Like [`parse_input`] but insists on a graph.
pub fn parse_graph(ctx: &FieldCtx, spec: &str) -> Result<Graph> {
    match parse_input(ctx, spec)?.target {
        Target::Graph(g) => Ok(g),
        Target::Ideal(_) => bail!("'{spec}' describes an ideal, not a graph"),
    }
}

/// Reads a graph or ideal JSON file, telling them apart by their keys.
pub fn read_target_file(ctx: &FieldCtx, path: &Path) -> Result<(Target, String)> {
    let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let hash = sha256_hex(&bytes);
    let value: serde_json::Value =
        serde_json::from_slice(&bytes).with_context(|| format!("parsing {}", path.display()))?;
    let target = if value.get("quadrics").is_some() {
        let f: IdealFile = serde_json::from_value(value)?;
        Target::Ideal(f.to_ideal(ctx)?)
    } else if value.get("edges").is_some() {
        let f: GraphFile = serde_json::from_value(value)?;
        Target::Graph(f.to_graph()?)
    } else {
        bail!("{}: expected an object with \"edges\" or \"quadrics\"", path.display());
    };
    Ok((target, hash))
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    hashes: Vec<String>,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            bail!("expected '{c}' at byte {} of '{}'", self.pos, self.src)
        }
    }

    fn ident(&mut self) -> Result<&str> {
        self.skip_ws();
        let len = self.rest().find(|c: char| !(c.is_ascii_alphanumeric() || c == '_' || c == '-')).unwrap_or(self.rest().len());
        if len == 0 {
            bail!("expected a name at byte {} of '{}'", self.pos, self.src);
        }
        let start = self.pos;
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    /// Integers separated by commas. A comma not followed by a digit ends
    /// the list (it separates arguments of an enclosing operation).
    fn params(&mut self) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
            if len == 0 {
                bail!("expected a number at byte {} of '{}'", self.pos, self.src);
            }
            out.push(self.rest()[..len].parse()?);
            self.pos += len;
            let save = self.pos;
            if self.eat(',') {
                self.skip_ws();
                if self.rest().starts_with(|c: char| c.is_ascii_digit()) {
                    continue;
                }
                self.pos = save;
            }
            return Ok(out);
        }
    }

    fn graph_arg(&mut self, ctx: &FieldCtx) -> Result<Graph> {
        match self.expr(ctx)? {
            Target::Graph(g) => Ok(g),
            Target::Ideal(_) => bail!("graph operations need graph arguments"),
        }
    }

    fn expr(&mut self, ctx: &FieldCtx) -> Result<Target> {
        let name = self.ident()?.to_string();
        if name == "file" {
            self.expect(':')?;
            self.skip_ws();
            let len = self.rest().find([',', ')']).unwrap_or(self.rest().len());
            let path = self.rest()[..len].trim().to_string();
            self.pos += len;
            let (target, hash) = read_target_file(ctx, Path::new(&path))?;
            self.hashes.push(hash);
            return Ok(target);
        }
        if self.eat('(') {
            let out = match name.as_str() {
                "complement" => self.graph_arg(ctx)?.complement(),
                "union" | "join" => {
                    let a = self.graph_arg(ctx)?;
                    self.expect(',')?;
                    let b = self.graph_arg(ctx)?;
                    if name == "union" {
                        a.disjoint_union(&b)?
                    } else {
                        a.join(&b)?
                    }
                }
                _ => bail!("unknown operation '{name}'"),
            };
            self.expect(')')?;
            return Ok(Target::Graph(out));
        }
        let params = if self.eat(':') { self.params()? } else { Vec::new() };
        if name == "squares" {
            let [n] = params[..] else { bail!("squares takes one parameter") };
            return Ok(Target::Ideal(QuadIdeal::squares(n)));
        }
        families::build(&name, &params).map(Target::Graph).map_err(|e| anyhow!(e))
    }
}
