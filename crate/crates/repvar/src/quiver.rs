//! Quiver data model: a finite directed multigraph with named arrows,
//! its adjacency matrices, directed-path enumeration, acyclicity, and the
//! opposite quiver.
//!
//! Vertices are numbered `1..=n` in every input file and report; internally
//! all indices are 0-based.

use std::collections::HashSet;
use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::layers::DimVector;

/// A single named arrow. `source` and `target` are 0-based vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Orientation tag for an adjacency matrix: `B[i][j]` counts arrows `i -> j`,
/// and `A` is the transpose of `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    B,
    A,
}

/// Vertex-by-vertex arrow counts, acting on dimension vectors from the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjMatrix {
    n: usize,
    entries: Vec<i64>,
    orientation: Orientation,
}

impl AdjMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn transpose(&self) -> AdjMatrix {
        let mut entries = vec![0; self.n * self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                entries[j * self.n + i] = self.entry(i, j);
            }
        }
        AdjMatrix {
            n: self.n,
            entries,
            orientation: match self.orientation {
                Orientation::B => Orientation::A,
                Orientation::A => Orientation::B,
            },
        }
    }

    /// Row vector times matrix: `(v * M)_j = sum_i v_i M[i][j]`.
    pub fn apply(&self, v: &DimVector) -> DimVector {
        assert_eq!(v.len(), self.n, "dimension vector length mismatch");
        let mut out = vec![0i64; self.n];
        for i in 0..self.n {
            let vi = v[i];
            if vi == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += vi * self.entry(i, j);
            }
        }
        DimVector::from(out)
    }

    /// True iff some power of the matrix vanishes (checked up to the n-th).
    pub fn is_nilpotent(&self) -> bool {
        let mut rows: Vec<DimVector> =
            (0..self.n).map(|i| DimVector::unit(self.n, i)).collect();
        for _ in 0..self.n {
            rows = rows.iter().map(|r| self.apply(r)).collect();
        }
        rows.iter().all(|r| r.is_zero())
    }
}

#[derive(Deserialize)]
struct ArrowSpec {
    name: String,
    source: usize,
    target: usize,
}

#[derive(Deserialize)]
struct QuiverSpec {
    vertices: usize,
    arrows: Vec<ArrowSpec>,
}

/// A quiver. Immutable after construction; the acyclicity flag and the
/// per-vertex arrow lists (sorted by arrow name, for deterministic path
/// enumeration) are computed once.
#[derive(Debug, Clone)]
pub struct Quiver {
    vertices: usize,
    arrows: Vec<Arrow>,
    out_arrows: Vec<Vec<usize>>,
    acyclic: bool,
}

impl Quiver {
    /// Builds a quiver from 1-based vertex numbering, matching the input file
    /// convention. Arrow names must be unique and endpoints in range.
    pub fn from_arrows<S: Into<String>>(
        vertices: usize,
        arrows: Vec<(S, usize, usize)>,
    ) -> Result<Quiver> {
        if vertices == 0 {
            return Err(Error::InvalidQuiver("vertex count must be positive".into()));
        }
        let mut seen = HashSet::new();
        let mut list = Vec::with_capacity(arrows.len());
        for (name, source, target) in arrows {
            let name = name.into();
            if !seen.insert(name.clone()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow name `{name}`")));
            }
            if source == 0 || source > vertices || target == 0 || target > vertices {
                return Err(Error::InvalidQuiver(format!(
                    "arrow `{name}` has endpoint out of range 1..={vertices}"
                )));
            }
            list.push(Arrow { name, source: source - 1, target: target - 1 });
        }

        let mut out_arrows = vec![Vec::new(); vertices];
        for (id, a) in list.iter().enumerate() {
            out_arrows[a.source].push(id);
        }
        for ids in &mut out_arrows {
            ids.sort_by(|&a, &b| list[a].name.cmp(&list[b].name));
        }

        let acyclic = topological_order(vertices, &list).is_some();
        Ok(Quiver { vertices, arrows: list, out_arrows, acyclic })
    }

    /// Parses the JSON quiver format:
    /// `{"vertices": n, "arrows": [{"name", "source", "target"}, ...]}`.
    pub fn parse(text: &str) -> Result<Quiver> {
        let spec: QuiverSpec = serde_json::from_str(text)?;
        Quiver::from_arrows(
            spec.vertices,
            spec.arrows.into_iter().map(|a| (a.name, a.source, a.target)).collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: usize) -> &Arrow {
        &self.arrows[id]
    }

    /// Arrow ids leaving `v`, sorted by arrow name.
    pub fn out_arrows(&self, v: usize) -> &[usize] {
        &self.out_arrows[v]
    }

    pub fn is_acyclic(&self) -> bool {
        self.acyclic
    }

    /// The adjacency matrix `B` with `B[i][j]` = number of arrows `i -> j`.
    pub fn adjacency(&self) -> AdjMatrix {
        let n = self.vertices;
        let mut entries = vec![0i64; n * n];
        for a in &self.arrows {
            entries[a.source * n + a.target] += 1;
        }
        AdjMatrix { n, entries, orientation: Orientation::B }
    }

    /// The transposed adjacency matrix `A`.
    pub fn transposed_adjacency(&self) -> AdjMatrix {
        self.adjacency().transpose()
    }

    /// Length of the longest directed path, by DP over a topological order.
    pub fn max_path_length(&self) -> Result<usize> {
        let order = topological_order(self.vertices, &self.arrows).ok_or(Error::CyclicQuiver)?;
        let mut longest = vec![0usize; self.vertices];
        for &v in order.iter().rev() {
            for &id in &self.out_arrows[v] {
                let t = self.arrows[id].target;
                longest[v] = longest[v].max(longest[t] + 1);
            }
        }
        Ok(longest.into_iter().max().unwrap_or(0))
    }

    /// All directed paths starting at `v` (0-based) of length at most
    /// `max_len`, including the trivial path, in depth-first order extending
    /// by arrows in name order.
    pub fn paths_from(&self, v: usize, max_len: usize) -> Vec<QPath> {
        assert!(v < self.vertices, "vertex out of range");
        let mut out = Vec::new();
        let mut current = QPath { start: v, end: v, arrows: Vec::new() };
        self.collect_paths(&mut current, max_len, &mut out);
        out
    }

    fn collect_paths(&self, current: &mut QPath, max_len: usize, out: &mut Vec<QPath>) {
        out.push(current.clone());
        if current.len() == max_len {
            return;
        }
        for &id in &self.out_arrows[current.end] {
            let saved_end = current.end;
            current.arrows.push(id);
            current.end = self.arrows[id].target;
            self.collect_paths(current, max_len, out);
            current.arrows.pop();
            current.end = saved_end;
        }
    }

    /// The opposite quiver: every arrow reversed, names preserved.
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| (a.name.clone(), a.target + 1, a.source + 1))
            .collect();
        Quiver::from_arrows(self.vertices, arrows)
            .expect("reversing a valid quiver stays valid")
    }

    /// GraphViz rendering: one node per vertex, one labeled edge per arrow.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph quiver {\n  rankdir=LR;\n");
        for v in 0..self.vertices {
            s.push_str(&format!("  v{0} [label=\"{0}\", shape=circle];\n", v + 1));
        }
        for a in &self.arrows {
            s.push_str(&format!(
                "  v{} -> v{} [label=\"{}\"];\n",
                a.source + 1,
                a.target + 1,
                a.name
            ));
        }
        s.push_str("}\n");
        s
    }
}

fn topological_order(n: usize, arrows: &[Arrow]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    for a in arrows {
        indeg[a.target] += 1;
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop() {
        order.push(v);
        for a in arrows.iter().filter(|a| a.source == v) {
            indeg[a.target] -= 1;
            if indeg[a.target] == 0 {
                queue.push(a.target);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// A directed path: a composable arrow sequence stored in application order
/// (first arrow applied first). The empty sequence is the trivial path at a
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPath {
    start: usize,
    end: usize,
    arrows: Vec<usize>,
}

impl QPath {
    pub fn trivial(v: usize) -> QPath {
        QPath { start: v, end: v, arrows: Vec::new() }
    }

    /// Builds a path from arrow ids in application order, checking that
    /// consecutive arrows compose.
    pub fn from_arrow_ids(q: &Quiver, start: usize, arrows: Vec<usize>) -> Result<QPath> {
        let mut end = start;
        for &id in &arrows {
            let a = q
                .arrows()
                .get(id)
                .ok_or_else(|| Error::InvalidInput(format!("arrow id {id} out of range")))?;
            if a.source != end {
                return Err(Error::InvalidInput(format!(
                    "arrow `{}` does not compose at vertex {}",
                    a.name,
                    end + 1
                )));
            }
            end = a.target;
        }
        Ok(QPath { start, end, arrows })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrow_ids(&self) -> &[usize] {
        &self.arrows
    }

    /// Extends the path by one arrow leaving its end vertex.
    pub fn extended(&self, q: &Quiver, arrow_id: usize) -> QPath {
        let a = q.arrow(arrow_id);
        debug_assert_eq!(a.source, self.end, "arrow does not compose");
        let mut arrows = self.arrows.clone();
        arrows.push(arrow_id);
        QPath { start: self.start, end: a.target, arrows }
    }

    /// The initial subpath obtained by dropping the last arrow.
    pub fn parent(&self, q: &Quiver) -> Option<QPath> {
        let (&last, rest) = self.arrows.split_last()?;
        let _ = last;
        let mut end = self.start;
        for &id in rest {
            end = q.arrow(id).target;
        }
        Some(QPath { start: self.start, end, arrows: rest.to_vec() })
    }

    /// Arrow names in application order.
    pub fn arrow_names<'q>(&self, q: &'q Quiver) -> Vec<&'q str> {
        self.arrows.iter().map(|&id| q.arrow(id).name.as_str()).collect()
    }

    /// Product notation, read right to left: the path applying `a` then `b`
    /// from vertex 3 prints as `b a e_3`; the trivial path prints as `e_3`.
    pub fn format(&self, q: &Quiver) -> String {
        let mut parts: Vec<&str> = self.arrow_names(q);
        parts.reverse();
        let head = format!("e_{}", self.start + 1);
        if parts.is_empty() {
            head
        } else {
            format!("{} {}", parts.join(" "), head)
        }
    }
}

impl fmt::Display for QPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            write!(f, "e_{}", self.start + 1)
        } else {
            write!(f, "path({} arrows from {})", self.arrows.len(), self.start + 1)
        }
    }
}
