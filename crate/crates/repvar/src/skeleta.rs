//! Skeleta and generic minimal projective presentations.
//!
//! A skeleton with layering `S` is a set of paths in the distinguished
//! projective cover `P` of `S_0`, closed under initial subpaths, whose
//! length-`l` paths ending at a vertex match the multiplicities of `S_l`.
//! Each path not in the skeleton whose proper initial subpaths all belong to
//! it ("critical") contributes one relation tying it to a generic linear
//! combination of longer-or-equal skeleton paths into the same vertex; the
//! quotient of `P` by these relations is the generic module for the layering.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fp::{FpMat, PrimeField};
use crate::layers::{DimVector, SemisimpleSequence};
use crate::quiver::{QPath, Quiver};
use crate::repcalc::Representation;

/// A path in the projective cover: a quiver path prefixed to one of the top
/// elements `z_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkeletonPath {
    /// 0-based index of the top element.
    pub top: usize,
    /// The quiver path, starting at the top's vertex.
    pub path: QPath,
}

impl SkeletonPath {
    fn key(&self) -> (usize, Vec<usize>) {
        (self.top, self.path.arrow_ids().to_vec())
    }

    /// Sort key: length first, then top element, then arrow names.
    fn order_key<'q>(&self, q: &'q Quiver) -> (usize, usize, Vec<&'q str>) {
        (self.path.len(), self.top, self.path.arrow_names(q))
    }

    /// Product notation read right to left, e.g. `a8 b6 b5 a3 z_2`; a top
    /// element alone prints as `z_2`.
    pub fn format(&self, q: &Quiver) -> String {
        let mut names = self.path.arrow_names(q);
        names.reverse();
        let z = format!("z_{}", self.top + 1);
        if names.is_empty() {
            z
        } else {
            format!("{} {}", names.join(" "), z)
        }
    }
}

/// A skeleton: top elements plus the chosen path basis, with its layering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    /// Vertex (0-based) of each top element, index = top id.
    tops: Vec<usize>,
    /// All paths including the length-zero tops, in canonical order.
    paths: Vec<SkeletonPath>,
    layering: SemisimpleSequence,
}

impl Skeleton {
    /// Validates and canonicalizes an explicit path set. `tops` lists the
    /// vertex of each top element (1-based, as in reports); `paths` gives
    /// (1-based top id, arrow names in application order). Trivial paths for
    /// the tops are implied and may be omitted.
    pub fn from_named_paths(
        q: &Quiver,
        truncation: usize,
        tops: &[usize],
        paths: &[(usize, Vec<&str>)],
    ) -> Result<Skeleton> {
        let name_to_id: HashMap<&str, usize> =
            q.arrows().iter().enumerate().map(|(i, a)| (a.name.as_str(), i)).collect();
        let mut tops0 = Vec::with_capacity(tops.len());
        for &v in tops {
            if v == 0 || v > q.vertex_count() {
                return Err(Error::InvalidInput(format!("top vertex {v} out of range")));
            }
            tops0.push(v - 1);
        }
        let mut list: Vec<SkeletonPath> = tops0
            .iter()
            .enumerate()
            .map(|(r, &v)| SkeletonPath { top: r, path: QPath::trivial(v) })
            .collect();
        for (top_id, names) in paths {
            if *top_id == 0 || *top_id > tops0.len() {
                return Err(Error::InvalidInput(format!("top id {top_id} out of range")));
            }
            if names.is_empty() {
                continue; // trivial paths are already present
            }
            let ids = names
                .iter()
                .map(|n| {
                    name_to_id
                        .get(*n)
                        .copied()
                        .ok_or_else(|| Error::InvalidInput(format!("unknown arrow `{n}`")))
                })
                .collect::<Result<Vec<usize>>>()?;
            let path = QPath::from_arrow_ids(q, tops0[top_id - 1], ids)?;
            list.push(SkeletonPath { top: top_id - 1, path });
        }
        Skeleton::assemble(q, truncation, tops0, list)
    }

    fn assemble(
        q: &Quiver,
        truncation: usize,
        tops: Vec<usize>,
        mut paths: Vec<SkeletonPath>,
    ) -> Result<Skeleton> {
        paths.sort_by(|a, b| a.order_key(q).cmp(&b.order_key(q)));
        paths.dedup_by_key(|p| p.key());

        let mut seen = HashMap::new();
        for p in &paths {
            if p.path.len() > truncation {
                return Err(Error::InvalidInput(format!(
                    "path {} exceeds the truncation level {truncation}",
                    p.format(q)
                )));
            }
            if p.path.start() != tops[p.top] {
                return Err(Error::Internal("path does not start at its top".into()));
            }
            seen.insert(p.key(), ());
        }
        for p in &paths {
            if let Some(parent) = p.path.parent(q) {
                let parent_key = (p.top, parent.arrow_ids().to_vec());
                if !seen.contains_key(&parent_key) {
                    return Err(Error::InvalidInput(format!(
                        "skeleton is not closed under initial subpaths at {}",
                        p.format(q)
                    )));
                }
            }
        }

        let n = q.vertex_count();
        let mut layers = vec![DimVector::zeros(n); truncation + 1];
        for p in &paths {
            let mut raw: Vec<i64> = layers[p.path.len()].iter().copied().collect();
            raw[p.path.end()] += 1;
            layers[p.path.len()] = DimVector::from(raw);
        }
        let layering = SemisimpleSequence::new(layers)?;
        Ok(Skeleton { tops, paths, layering })
    }

    /// Vertex (0-based) of each top element.
    pub fn tops(&self) -> &[usize] {
        &self.tops
    }

    /// All paths in canonical order (length, top, arrow names).
    pub fn paths(&self) -> &[SkeletonPath] {
        &self.paths
    }

    pub fn layering(&self) -> &SemisimpleSequence {
        &self.layering
    }

    pub fn truncation(&self) -> usize {
        self.layering.truncation()
    }

    pub fn contains(&self, p: &SkeletonPath) -> bool {
        self.paths.iter().any(|x| x == p)
    }

    /// All paths of length `<= L` in the projective cover outside the
    /// skeleton whose proper initial subpaths all lie in it. Every critical
    /// path is a one-arrow extension of a skeleton path.
    pub fn critical_paths(&self, q: &Quiver) -> Vec<SkeletonPath> {
        let top = self.truncation();
        let member: HashMap<(usize, Vec<usize>), ()> =
            self.paths.iter().map(|p| (p.key(), ())).collect();
        let mut out = Vec::new();
        for p in &self.paths {
            if p.path.len() == top {
                continue;
            }
            for &id in q.out_arrows(p.path.end()) {
                let ext = SkeletonPath { top: p.top, path: p.path.extended(q, id) };
                if !member.contains_key(&ext.key()) {
                    out.push(ext);
                }
            }
        }
        out.sort_by(|a, b| {
            (a.top, a.path.len(), a.path.arrow_names(q))
                .cmp(&(b.top, b.path.len(), b.path.arrow_names(q)))
        });
        out
    }

    /// The skeleton paths at least as long as the critical path `crit` that
    /// end in the same vertex — the candidate terms of its relation.
    pub fn sigma_of(&self, q: &Quiver, crit: &SkeletonPath) -> Result<Vec<SkeletonPath>> {
        if !self.is_critical(q, crit) {
            return Err(Error::NotCritical);
        }
        Ok(self
            .paths
            .iter()
            .filter(|p| p.path.len() >= crit.path.len() && p.path.end() == crit.path.end())
            .cloned()
            .collect())
    }

    fn is_critical(&self, q: &Quiver, p: &SkeletonPath) -> bool {
        if p.top >= self.tops.len()
            || p.path.is_empty()
            || p.path.len() > self.truncation()
            || p.path.start() != self.tops[p.top]
            || self.contains(p)
        {
            return false;
        }
        match p.path.parent(q) {
            Some(parent) => self.contains(&SkeletonPath { top: p.top, path: parent }),
            None => false,
        }
    }

    /// GraphViz rendering in the layered style of the module graphs: solid
    /// edges inside the skeleton, dashed edges to critical paths, one rank
    /// per path length, nodes labeled by end vertex.
    pub fn to_dot(&self, q: &Quiver) -> String {
        let mut s = String::from("digraph skeleton {\n  rankdir=TB;\n  node [shape=plaintext];\n");
        let index: HashMap<(usize, Vec<usize>), usize> =
            self.paths.iter().enumerate().map(|(i, p)| (p.key(), i)).collect();
        let mut ranks: Vec<Vec<String>> = vec![Vec::new(); self.truncation() + 2];
        for (i, p) in self.paths.iter().enumerate() {
            let label = if p.path.is_empty() {
                format!("z_{}: {}", p.top + 1, p.path.end() + 1)
            } else {
                format!("{}", p.path.end() + 1)
            };
            s.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
            ranks[p.path.len()].push(format!("n{i}"));
        }
        for (i, p) in self.paths.iter().enumerate() {
            if let Some(parent) = p.path.parent(q) {
                let pk = (p.top, parent.arrow_ids().to_vec());
                let j = index[&pk];
                let name = &q.arrow(*p.path.arrow_ids().last().unwrap()).name;
                s.push_str(&format!("  n{j} -> n{i} [label=\"{name}\"];\n"));
            }
        }
        for (k, c) in self.critical_paths(q).iter().enumerate() {
            let parent = c.path.parent(q).expect("critical paths have positive length");
            let pk = (c.top, parent.arrow_ids().to_vec());
            let j = index[&pk];
            let name = &q.arrow(*c.path.arrow_ids().last().unwrap()).name;
            s.push_str(&format!(
                "  c{k} [label=\"{}\", fontcolor=gray];\n",
                c.path.end() + 1
            ));
            s.push_str(&format!("  n{j} -> c{k} [style=dashed, label=\"{name}\"];\n"));
            ranks[c.path.len()].push(format!("c{k}"));
        }
        for nodes in ranks.iter().filter(|r| !r.is_empty()) {
            s.push_str(&format!("  {{ rank=same; {}; }}\n", nodes.join("; ")));
        }
        s.push_str("}\n");
        s
    }
}

/// One generic relation: a critical path equated with a scalar combination
/// of skeleton paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub critical: SkeletonPath,
    /// (skeleton path, scalar symbol id) pairs; symbol ids are indices into
    /// the scalar assignment.
    pub terms: Vec<(SkeletonPath, usize)>,
}

/// The generic minimal projective presentation attached to a skeleton: one
/// relation per critical path, with a fresh scalar symbol per term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericPresentation {
    skeleton: Skeleton,
    relations: Vec<Relation>,
    scalar_count: usize,
}

impl GenericPresentation {
    pub fn skeleton(&self) -> &Skeleton {
        &self.skeleton
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn scalar_count(&self) -> usize {
        self.scalar_count
    }

    /// Builds the concrete representation over `F_p` obtained by substituting
    /// `scalars[i]` for the i-th symbol. The skeleton paths become a basis;
    /// an arrow sends a basis path to its extension when that stays in the
    /// skeleton, to the relation combination when the extension is critical,
    /// and to zero past the truncation level.
    pub fn instantiate(&self, q: &Quiver, scalars: &[u64], prime: u64) -> Result<Representation> {
        if scalars.len() < self.scalar_count {
            return Err(Error::MissingScalar(scalars.len()));
        }
        let field = PrimeField::new(prime);
        let sk = &self.skeleton;
        let truncation = sk.truncation();
        let n = q.vertex_count();

        // basis layout: per-vertex index of every skeleton path
        let mut dims = vec![0usize; n];
        let mut slot: HashMap<(usize, Vec<usize>), (usize, usize)> = HashMap::new();
        for p in sk.paths() {
            let v = p.path.end();
            slot.insert(p.key(), (v, dims[v]));
            dims[v] += 1;
        }
        let relation_of: HashMap<(usize, Vec<usize>), &Relation> =
            self.relations.iter().map(|r| (r.critical.key(), r)).collect();

        let mut mats: Vec<FpMat> = q
            .arrows()
            .iter()
            .map(|a| FpMat::zeros(dims[a.target], dims[a.source]))
            .collect();

        for p in sk.paths() {
            let (src_vertex, col) = slot[&p.key()];
            for &id in q.out_arrows(src_vertex) {
                if p.path.len() + 1 > truncation {
                    continue;
                }
                let ext = SkeletonPath { top: p.top, path: p.path.extended(q, id) };
                if let Some(&(_, row)) = slot.get(&ext.key()) {
                    mats[id].set(row, col, 1);
                } else if let Some(rel) = relation_of.get(&ext.key()) {
                    for (term, sym) in &rel.terms {
                        let (_, row) = slot[&term.key()];
                        let cur = mats[id].get(row, col);
                        mats[id].set(row, col, field.add(cur, scalars[*sym] % prime));
                    }
                } else {
                    // closure says any one-arrow extension is in the skeleton
                    // or critical — anything else is a construction bug
                    return Err(Error::Internal(format!(
                        "extension {} is neither in the skeleton nor critical",
                        ext.format(q)
                    )));
                }
            }
        }

        Representation::from_parts(prime, dims, mats)
    }

    /// Relations rendered as `critical = x1 p1 + x2 p2 + ...` strings.
    pub fn format_relations(&self, q: &Quiver) -> Vec<String> {
        self.relations
            .iter()
            .map(|r| {
                let rhs = if r.terms.is_empty() {
                    "0".to_string()
                } else {
                    r.terms
                        .iter()
                        .map(|(p, sym)| format!("x{} {}", sym + 1, p.format(q)))
                        .collect::<Vec<_>>()
                        .join(" + ")
                };
                format!("{} = {}", r.critical.format(q), rhs)
            })
            .collect()
    }
}

/// One relation per critical path, scalar symbols numbered consecutively in
/// relation order.
pub fn build_presentation(sk: &Skeleton, q: &Quiver) -> GenericPresentation {
    let mut relations = Vec::new();
    let mut next_symbol = 0usize;
    for crit in sk.critical_paths(q) {
        let terms = sk
            .sigma_of(q, &crit)
            .expect("paths from critical_paths are critical")
            .into_iter()
            .map(|p| {
                let sym = next_symbol;
                next_symbol += 1;
                (p, sym)
            })
            .collect();
        relations.push(Relation { critical: crit, terms });
    }
    GenericPresentation { skeleton: sk.clone(), relations, scalar_count: next_symbol }
}

/// Enumerates skeleta with layering `s`, at most `limit` of them (all when
/// `None`), extending layer by layer in lexicographic order.
pub fn enumerate_skeleta(
    s: &SemisimpleSequence,
    q: &Quiver,
    limit: Option<usize>,
) -> Result<Vec<Skeleton>> {
    if s.vertex_count() != q.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: q.vertex_count(),
            found: s.vertex_count(),
        });
    }
    if !s.is_realizable(q) {
        return Err(Error::NotRealizable);
    }
    let cap = limit.unwrap_or(usize::MAX);
    if cap == 0 {
        return Ok(Vec::new());
    }

    let mut tops = Vec::new();
    for v in 0..q.vertex_count() {
        for _ in 0..s.layer(0)[v] {
            tops.push(v);
        }
    }
    let layer0: Vec<SkeletonPath> = tops
        .iter()
        .enumerate()
        .map(|(r, &v)| SkeletonPath { top: r, path: QPath::trivial(v) })
        .collect();

    let mut out = Vec::new();
    let mut chosen = vec![layer0];
    extend_layers(q, s, &tops, &mut chosen, cap, &mut out)?;
    if out.is_empty() {
        return Err(Error::Internal(
            "no skeleton found for a realizable layering".into(),
        ));
    }
    Ok(out)
}

/// The lexicographically first skeleton for a layering.
pub fn first_skeleton(s: &SemisimpleSequence, q: &Quiver) -> Result<Skeleton> {
    let mut found = enumerate_skeleta(s, q, Some(1))?;
    found.pop().ok_or_else(|| Error::Internal("skeleton enumeration returned nothing".into()))
}

fn extend_layers(
    q: &Quiver,
    s: &SemisimpleSequence,
    tops: &[usize],
    chosen: &mut Vec<Vec<SkeletonPath>>,
    cap: usize,
    out: &mut Vec<Skeleton>,
) -> Result<bool> {
    let level = chosen.len();
    if level > s.truncation() {
        let paths: Vec<SkeletonPath> = chosen.iter().flatten().cloned().collect();
        let sk = Skeleton::assemble(q, s.truncation(), tops.to_vec(), paths)?;
        debug_assert_eq!(sk.layering(), s, "assembled skeleton must realize the layering");
        out.push(sk);
        return Ok(out.len() < cap);
    }

    // candidates per target vertex, in (parent order, arrow name) order
    let n = q.vertex_count();
    let mut candidates: Vec<Vec<SkeletonPath>> = vec![Vec::new(); n];
    for parent in chosen.last().expect("at least the top layer") {
        for &id in q.out_arrows(parent.path.end()) {
            let ext = SkeletonPath { top: parent.top, path: parent.path.extended(q, id) };
            candidates[ext.path.end()].push(ext);
        }
    }
    let need: Vec<usize> = (0..n).map(|v| s.layer(level)[v] as usize).collect();
    if (0..n).any(|v| candidates[v].len() < need[v]) {
        return Ok(true); // dead branch; realizable layerings never hit this
    }

    let mut selectors: Vec<Vec<usize>> = (0..n).map(|v| (0..need[v]).collect()).collect();
    loop {
        let layer: Vec<SkeletonPath> = (0..n)
            .flat_map(|v| selectors[v].iter().map(move |&i| (v, i)))
            .map(|(v, i)| candidates[v][i].clone())
            .collect();
        chosen.push(layer);
        let keep_going = extend_layers(q, s, tops, chosen, cap, out)?;
        chosen.pop();
        if !keep_going {
            return Ok(false);
        }
        if !advance_selectors(&mut selectors, &candidates) {
            return Ok(true);
        }
    }
}

/// Advances the per-vertex combination selectors in lexicographic order
/// (last vertex fastest); returns false when exhausted.
fn advance_selectors(selectors: &mut [Vec<usize>], candidates: &[Vec<SkeletonPath>]) -> bool {
    for v in (0..selectors.len()).rev() {
        if next_combination(&mut selectors[v], candidates[v].len()) {
            for later in selectors.iter_mut().skip(v + 1) {
                let k = later.len();
                *later = (0..k).collect();
            }
            return true;
        }
        let k = selectors[v].len();
        selectors[v] = (0..k).collect();
    }
    false
}

/// Next k-subset of `0..m` in lexicographic order; false when exhausted.
fn next_combination(indices: &mut [usize], m: usize) -> bool {
    let k = indices.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if indices[i] < m - (k - i) {
            indices[i] += 1;
            for j in i + 1..k {
                indices[j] = indices[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
