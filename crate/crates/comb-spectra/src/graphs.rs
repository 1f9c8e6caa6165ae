//! Construction of paths, comb products, bridge couplings and truncated
//! tail graphs, together with their adjacency matrices.
//!
//! Vertices are labeled 1..order. The comb product uses the "level" labeling:
//! backbone vertices first, then all vertices of finger level 1, level 2, and
//! so on, so that the adjacency matrix has the block (inflation) structure
//! used by the spectral formulas.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Simple undirected graph with vertex labels 1..order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    order: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    pub fn new(order: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        if order == 0 {
            return Err(Error::InvalidArgument("graph order must be >= 1".into()));
        }
        let mut edges = BTreeSet::new();
        for &(a, b) in edge_list {
            if a == b {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {a}")));
            }
            if a < 1 || a > order || b < 1 || b > order {
                return Err(Error::InvalidArgument(format!(
                    "edge ({a},{b}) out of range 1..{order}"
                )));
            }
            edges.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { order, edges })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges with i < j, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order + 1];
        let mut stack = vec![1usize];
        seen[1] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.order
    }

    pub fn to_json(&self) -> String {
        let json = GraphJson {
            order: self.order,
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&json).expect("graph serialization")
    }

    pub fn from_json(s: &str) -> Result<Graph> {
        let json: GraphJson = serde_json::from_str(s)
            .map_err(|e| Error::InvalidArgument(format!("bad graph JSON: {e}")))?;
        let edges: Vec<(usize, usize)> = json.edges.iter().map(|&[a, b]| (a, b)).collect();
        Graph::new(json.order, &edges)
    }
}

/// Symmetric 0/1 matrix of a graph.
#[derive(Debug, Clone)]
pub struct AdjacencyMatrix {
    dim: usize,
    mat: Matrix,
}

impl AdjacencyMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.mat[(i, j)]
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn into_matrix(self) -> Matrix {
        self.mat
    }

    /// Test hook: flip the pair of entries (i,j)/(j,i), 0-based.
    pub fn flip_entry(&mut self, i: usize, j: usize) {
        self.mat[(i, j)] = 1.0 - self.mat[(i, j)];
        self.mat[(j, i)] = 1.0 - self.mat[(j, i)];
    }
}

/// Comb graph parameters: backbone path order `n`, finger path order `k`.
/// The contact vertex of the finger is its first endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CombSpec {
    pub n: usize,
    pub k: usize,
}

impl CombSpec {
    pub fn new(n: usize, k: usize) -> Result<CombSpec> {
        if n == 0 || k == 0 {
            return Err(Error::InvalidArgument("comb orders must be >= 1".into()));
        }
        Ok(CombSpec { n, k })
    }

    /// The comb graph itself, of order n*k.
    pub fn graph(&self) -> Graph {
        comb_product(&path(self.n).unwrap(), &path(self.k).unwrap(), 1).unwrap()
    }
}

/// Path graph with edges {i, i+1}.
pub fn path(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidArgument("path order must be >= 1".into()));
    }
    let edges: Vec<(usize, usize)> = (1..m).map(|i| (i, i + 1)).collect();
    Graph::new(m, &edges)
}

fn check_contact(finger: &Graph, contact: usize) -> Result<()> {
    if contact < 1 || contact > finger.order() {
        return Err(Error::InvalidArgument(format!(
            "contact vertex {contact} out of range 1..{}",
            finger.order()
        )));
    }
    // All spectral formulas assume the finger is grafted at an endpoint.
    if finger.degree(contact) > 1 {
        return Err(Error::InvalidArgument(format!(
            "contact vertex {contact} has degree {} > 1; only endpoint grafting is supported",
            finger.degree(contact)
        )));
    }
    Ok(())
}

/// Finger vertex labels with the contact vertex moved to position 1.
fn finger_relabel(finger: &Graph, contact: usize) -> Vec<usize> {
    // map old label -> new label; contact -> 1, others keep relative order
    let mut new_label = vec![0usize; finger.order() + 1];
    new_label[contact] = 1;
    let mut next = 2;
    for v in 1..=finger.order() {
        if v != contact {
            new_label[v] = next;
            next += 1;
        }
    }
    new_label
}

/// Comb product: a copy of `finger` is grafted at `contact` into every vertex
/// of `backbone`. Level labeling: the `bn` grafting vertices come first, then
/// the `bn` vertices of the next finger level, and so on.
pub fn comb_product(backbone: &Graph, finger: &Graph, contact: usize) -> Result<Graph> {
    check_contact(finger, contact)?;
    let bn = backbone.order();
    let fk = finger.order();
    let relabel = finger_relabel(finger, contact);
    // vertex (x1, level l in 1..=fk) -> (l-1)*bn + x1
    let label = |x1: usize, l: usize| (l - 1) * bn + x1;
    let mut edges = Vec::new();
    for (u, v) in backbone.edges() {
        edges.push((label(u, 1), label(v, 1)));
    }
    for (a, b) in finger.edges() {
        let (la, lb) = (relabel[a], relabel[b]);
        for x1 in 1..=bn {
            edges.push((label(x1, la), label(x1, lb)));
        }
    }
    Graph::new(bn * fk, &edges)
}

/// Same comb product under the copy-by-copy labeling: the vertices of the
/// first finger copy come first, then the second copy, and so on. Spectrally
/// identical to [`comb_product`]; kept for permutation-similarity checks.
pub fn comb_product_copy_labeling(
    backbone: &Graph,
    finger: &Graph,
    contact: usize,
) -> Result<Graph> {
    check_contact(finger, contact)?;
    let bn = backbone.order();
    let fk = finger.order();
    let relabel = finger_relabel(finger, contact);
    let label = |x1: usize, l: usize| (x1 - 1) * fk + l;
    let mut edges = Vec::new();
    for (u, v) in backbone.edges() {
        edges.push((label(u, 1), label(v, 1)));
    }
    for (a, b) in finger.edges() {
        let (la, lb) = (relabel[a], relabel[b]);
        for x1 in 1..=bn {
            edges.push((label(x1, la), label(x1, lb)));
        }
    }
    Graph::new(bn * fk, &edges)
}

/// Disjoint union of `g1` and `g2` plus the single bridge edge {v1, v2};
/// labels of `g2` are shifted by `g1.order()`.
pub fn couple_with_bridge(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph> {
    if v1 < 1 || v1 > g1.order() {
        return Err(Error::InvalidArgument(format!(
            "bridge vertex {v1} out of range in first graph"
        )));
    }
    if v2 < 1 || v2 > g2.order() {
        return Err(Error::InvalidArgument(format!(
            "bridge vertex {v2} out of range in second graph"
        )));
    }
    let shift = g1.order();
    let mut edges: Vec<(usize, usize)> = g1.edges().collect();
    edges.extend(g2.edges().map(|(a, b)| (a + shift, b + shift)));
    edges.push((v1, v2 + shift));
    Graph::new(g1.order() + g2.order(), &edges)
}

/// Finite approximant of the comb graph with an infinite tail: a path of
/// length `tail_len` bridged to backbone vertex `n`.
pub fn truncated_tail(spec: CombSpec, tail_len: usize) -> Result<Graph> {
    if tail_len == 0 {
        return Err(Error::InvalidArgument("tail length must be >= 1".into()));
    }
    couple_with_bridge(&spec.graph(), spec.n, &path(tail_len)?, 1)
}

pub fn adjacency(g: &Graph) -> AdjacencyMatrix {
    let n = g.order();
    let mut mat = Matrix::zeros(n, n);
    for (a, b) in g.edges() {
        mat[(a - 1, b - 1)] = 1.0;
        mat[(b - 1, a - 1)] = 1.0;
    }
    AdjacencyMatrix { dim: n, mat }
}
