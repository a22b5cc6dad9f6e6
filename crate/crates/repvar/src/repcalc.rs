//! Concrete representations over a prime field: the brute-force oracle for
//! radical and socle layerings, endomorphism dimensions, and duality checks.
//!
//! A representation assigns each vertex a coordinate space and each arrow a
//! matrix from its source block to its target block. All invariants are
//! computed by exact Gaussian elimination, so there are no tolerances.

use std::collections::HashMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fp::{FpMat, PrimeField};
use crate::layers::{DimVector, SemisimpleSequence};
use crate::quiver::Quiver;

/// Primes below this bound make random draws too collision-prone to act as
/// generic scalars.
pub const MIN_PRIME: u64 = 1 << 20;

#[derive(Debug, Clone)]
pub struct Representation {
    prime: u64,
    dims: Vec<usize>,
    matrices: Vec<FpMat>,
}

#[derive(Deserialize)]
struct RepresentationSpec {
    prime: Option<u64>,
    dims: Vec<usize>,
    #[serde(default)]
    matrices: HashMap<String, Vec<Vec<i64>>>,
}

impl Representation {
    pub(crate) fn from_parts(
        prime: u64,
        dims: Vec<usize>,
        matrices: Vec<FpMat>,
    ) -> Result<Representation> {
        if prime <= MIN_PRIME {
            return Err(Error::InvalidInput(format!(
                "prime {prime} is too small; need p > {MIN_PRIME}"
            )));
        }
        Ok(Representation { prime, dims, matrices })
    }

    /// Builds a representation from per-arrow integer matrices (reduced mod
    /// p), keyed by arrow name. Omitted arrows act as zero. Each matrix must
    /// have shape `dims[target] x dims[source]`.
    pub fn from_matrices(
        q: &Quiver,
        prime: u64,
        dims: Vec<usize>,
        named: &HashMap<String, Vec<Vec<i64>>>,
    ) -> Result<Representation> {
        if dims.len() != q.vertex_count() {
            return Err(Error::LengthMismatch {
                expected: q.vertex_count(),
                found: dims.len(),
            });
        }
        let field = PrimeField::new(prime);
        let mut matrices = Vec::with_capacity(q.arrows().len());
        for a in q.arrows() {
            let rows = dims[a.target];
            let cols = dims[a.source];
            match named.get(&a.name) {
                None => matrices.push(FpMat::zeros(rows, cols)),
                Some(raw) => {
                    if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
                        return Err(Error::InvalidInput(format!(
                            "matrix for `{}` must be {rows} x {cols}",
                            a.name
                        )));
                    }
                    matrices.push(FpMat::from_rows(&field, raw, cols));
                }
            }
        }
        for name in named.keys() {
            if !q.arrows().iter().any(|a| &a.name == name) {
                return Err(Error::InvalidInput(format!("matrix for unknown arrow `{name}`")));
            }
        }
        Representation::from_parts(prime, dims, matrices)
    }

    /// Parses the JSON form
    /// `{"prime": p?, "dims": [...], "matrices": {"name": [[...], ...]}}`.
    pub fn parse(q: &Quiver, text: &str) -> Result<Representation> {
        let spec: RepresentationSpec = serde_json::from_str(text)?;
        Representation::from_matrices(
            q,
            spec.prime.unwrap_or(crate::DEFAULT_PRIME),
            spec.dims,
            &spec.matrices,
        )
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> DimVector {
        DimVector::from(self.dims.iter().map(|&d| d as i64).collect::<Vec<_>>())
    }

    /// Raw entries of an arrow matrix, row-major.
    pub fn matrix_entries(&self, arrow_id: usize) -> Vec<Vec<u64>> {
        let m = &self.matrices[arrow_id];
        (0..m.rows).map(|i| m.row(i).to_vec()).collect()
    }

    fn field(&self) -> PrimeField {
        PrimeField::new(self.prime)
    }

    /// Row bases of the radical chain `M = J^0 M, J^1 M, ..., J^(steps) M`,
    /// one matrix per vertex per step.
    fn radical_chain(&self, q: &Quiver, steps: usize) -> Vec<Vec<FpMat>> {
        let field = self.field();
        let full: Vec<FpMat> = self.dims.iter().map(|&d| FpMat::identity(d)).collect();
        let mut chain = vec![full];
        for _ in 0..steps {
            let prev = chain.last().expect("chain starts nonempty");
            let mut next = Vec::with_capacity(self.dims.len());
            for v in 0..self.dims.len() {
                let mut pieces = Vec::new();
                for (id, a) in q.arrows().iter().enumerate() {
                    if a.target != v {
                        continue;
                    }
                    // rows of prev[source] are vectors; their images are
                    // rows of basis * M^t
                    pieces.push(prev[a.source].matmul(&self.matrices[id].transpose(), &field));
                }
                let refs: Vec<&FpMat> = pieces.iter().collect();
                let stacked = FpMat::vstack(&refs, self.dims[v]);
                next.push(stacked.row_basis(&field));
            }
            chain.push(next);
        }
        chain
    }

    /// The radical layering `(J^l M / J^(l+1) M)` as dimension vectors.
    /// Fails when `J^(L+1) M` is nonzero, i.e. the input is not a module for
    /// the requested truncation level.
    pub fn radical_layering(&self, q: &Quiver, truncation: usize) -> Result<SemisimpleSequence> {
        self.check_quiver(q)?;
        let chain = self.radical_chain(q, truncation + 1);
        if chain[truncation + 1].iter().any(|m| m.rows > 0) {
            return Err(Error::NotTruncated { level: truncation });
        }
        let n = self.dims.len();
        let layers = (0..=truncation)
            .map(|l| {
                DimVector::from(
                    (0..n)
                        .map(|v| chain[l][v].rows as i64 - chain[l + 1][v].rows as i64)
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        Ok(SemisimpleSequence::new(layers).expect("layer count fixed"))
    }

    /// The socle layering, from the annihilator chain: `K_0` is annihilated
    /// by every arrow, and `K_(j+1)` is everything mapped into `K_j`.
    pub fn socle_layering(&self, q: &Quiver, truncation: usize) -> Result<SemisimpleSequence> {
        self.check_quiver(q)?;
        let field = self.field();
        let n = self.dims.len();
        let mut chain: Vec<Vec<FpMat>> = Vec::with_capacity(truncation + 1);
        for step in 0..=truncation {
            let mut next = Vec::with_capacity(n);
            for v in 0..n {
                let mut conditions = Vec::new();
                for (id, a) in q.arrows().iter().enumerate() {
                    if a.source != v {
                        continue;
                    }
                    if step == 0 {
                        conditions.push(self.matrices[id].clone());
                    } else {
                        // annihilator functionals of the previous layer at
                        // the target, composed with the arrow action
                        let ann = chain[step - 1][a.target].nullspace(&field);
                        conditions.push(ann.matmul(&self.matrices[id], &field));
                    }
                }
                let refs: Vec<&FpMat> = conditions.iter().collect();
                let stacked = FpMat::vstack(&refs, self.dims[v]);
                next.push(stacked.nullspace(&field));
            }
            chain.push(next);
        }
        let layers = (0..=truncation)
            .map(|l| {
                DimVector::from(
                    (0..n)
                        .map(|v| {
                            let cur = chain[l][v].rows as i64;
                            let prev = if l == 0 { 0 } else { chain[l - 1][v].rows as i64 };
                            cur - prev
                        })
                        .collect::<Vec<_>>(),
                )
            })
            .collect();
        Ok(SemisimpleSequence::new(layers).expect("layer count fixed"))
    }

    /// Dimension of the endomorphism space: the nullity of the homogeneous
    /// system `f_target * M_a = M_a * f_source` over all arrows, with one
    /// square unknown block per vertex.
    pub fn endo_dim(&self, q: &Quiver) -> usize {
        let field = self.field();
        let n = self.dims.len();
        let mut offsets = vec![0usize; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + self.dims[v] * self.dims[v];
        }
        let unknowns = offsets[n];
        if unknowns == 0 {
            return 0;
        }

        let mut rows: Vec<Vec<u64>> = Vec::new();
        for (id, a) in q.arrows().iter().enumerate() {
            let (s, t) = (a.source, a.target);
            let (ds, dt) = (self.dims[s], self.dims[t]);
            let m = &self.matrices[id];
            for i in 0..dt {
                for j in 0..ds {
                    let mut row = vec![0u64; unknowns];
                    // (f_t M)_ij picks up f_t[i][k] * M[k][j]
                    for k in 0..dt {
                        let c = m.get(k, j);
                        if c != 0 {
                            let idx = offsets[t] + i * dt + k;
                            row[idx] = field.add(row[idx], c);
                        }
                    }
                    // (M f_s)_ij picks up M[i][k] * f_s[k][j], subtracted
                    for k in 0..ds {
                        let c = m.get(i, k);
                        if c != 0 {
                            let idx = offsets[s] + k * ds + j;
                            row[idx] = field.sub(row[idx], c);
                        }
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }

        if rows.is_empty() {
            return unknowns;
        }
        let raw: Vec<Vec<i64>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x as i64).collect())
            .collect();
        let system = FpMat::from_rows(&field, &raw, unknowns);
        unknowns - system.rank(&field)
    }

    /// The dual representation over the opposite quiver: every arrow matrix
    /// transposed, attached to the reversed arrow (same arrow order).
    pub fn dualize(&self, _q: &Quiver) -> Representation {
        Representation {
            prime: self.prime,
            dims: self.dims.clone(),
            matrices: self.matrices.iter().map(|m| m.transpose()).collect(),
        }
    }

    fn check_quiver(&self, q: &Quiver) -> Result<()> {
        if q.vertex_count() != self.dims.len() || q.arrows().len() != self.matrices.len() {
            return Err(Error::LengthMismatch {
                expected: q.vertex_count(),
                found: self.dims.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{dv, kronecker, seq, six_vertex};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn kronecker_projective() -> (Quiver, Representation) {
        let q = kronecker();
        let mut named = HashMap::new();
        named.insert("a1".to_string(), vec![vec![1], vec![0]]);
        named.insert("a2".to_string(), vec![vec![0], vec![1]]);
        let rep = Representation::from_matrices(&q, crate::DEFAULT_PRIME, vec![1, 2], &named)
            .unwrap();
        (q, rep)
    }

    #[test]
    fn kronecker_layerings() {
        let (q, rep) = kronecker_projective();
        assert_eq!(rep.radical_layering(&q, 1).unwrap(), seq(&[&[1, 0], &[0, 2]]));
        assert_eq!(rep.socle_layering(&q, 1).unwrap(), seq(&[&[0, 2], &[1, 0]]));
        assert_eq!(rep.endo_dim(&q), 1);
    }

    #[test]
    fn zero_module() {
        let q = kronecker();
        let rep =
            Representation::from_matrices(&q, crate::DEFAULT_PRIME, vec![0, 0], &HashMap::new())
                .unwrap();
        assert!(rep.radical_layering(&q, 1).unwrap().is_zero());
        assert!(rep.socle_layering(&q, 1).unwrap().is_zero());
        assert_eq!(rep.endo_dim(&q), 0);
    }

    #[test]
    fn semisimple_module_is_its_own_socle() {
        let q = six_vertex();
        let rep = Representation::from_matrices(
            &q,
            crate::DEFAULT_PRIME,
            vec![1, 2, 0, 1, 0, 3],
            &HashMap::new(),
        )
        .unwrap();
        let d = dv(&[1, 2, 0, 1, 0, 3]);
        let rad = rep.radical_layering(&q, 2).unwrap();
        assert_eq!(rad.layer(0), &d);
        assert!(rad.layer(1).is_zero());
        let soc = rep.socle_layering(&q, 2).unwrap();
        assert_eq!(soc.layer(0), &d);
    }

    #[test]
    fn truncation_violation_reported() {
        let (q, rep) = kronecker_projective();
        assert!(matches!(
            rep.radical_layering(&q, 0),
            Err(Error::NotTruncated { level: 0 })
        ));
    }

    #[test]
    fn simple_module_endo() {
        let q = six_vertex();
        let rep = Representation::from_matrices(
            &q,
            crate::DEFAULT_PRIME,
            vec![0, 0, 1, 0, 0, 0],
            &HashMap::new(),
        )
        .unwrap();
        assert_eq!(rep.endo_dim(&q), 1);
    }

    #[test]
    fn small_prime_rejected() {
        let q = kronecker();
        assert!(Representation::from_matrices(&q, 101, vec![1, 1], &HashMap::new()).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let q = kronecker();
        let rep = Representation::parse(
            &q,
            r#"{"dims":[1,2],"matrices":{"a1":[[1],[0]],"a2":[[0],[1]]}}"#,
        )
        .unwrap();
        assert_eq!(rep.prime(), crate::DEFAULT_PRIME);
        assert_eq!(rep.radical_layering(&q, 1).unwrap(), seq(&[&[1, 0], &[0, 2]]));
        assert!(Representation::parse(&q, r#"{"dims":[1],"matrices":{}}"#).is_err());
        assert!(Representation::parse(
            &q,
            r#"{"dims":[1,2],"matrices":{"zz":[[0],[0]]}}"#
        )
        .is_err());
        assert!(Representation::parse(
            &q,
            r#"{"dims":[1,2],"matrices":{"a1":[[1,1],[0,0]]}}"#
        )
        .is_err());
    }

    fn random_representation(
        q: &Quiver,
        dims: &[usize],
        rng: &mut ChaCha8Rng,
    ) -> Representation {
        let mut named = HashMap::new();
        for a in q.arrows() {
            let rows = dims[a.target];
            let cols = dims[a.source];
            let mat: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(0..8) as i64).collect())
                .collect();
            named.insert(a.name.clone(), mat);
        }
        Representation::from_matrices(q, crate::DEFAULT_PRIME, dims.to_vec(), &named).unwrap()
    }

    #[test]
    fn duality_and_connection_on_random_modules() {
        let q = six_vertex();
        let truncation = q.max_path_length().unwrap();
        let op = q.opposite();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..25 {
            let dims: Vec<usize> = (0..6).map(|_| rng.gen_range(0..4)).collect();
            let rep = random_representation(&q, &dims, &mut rng);
            let rad = rep.radical_layering(&q, truncation).unwrap();
            let soc = rep.socle_layering(&q, truncation).unwrap();
            let d = rep.dim_vector();
            assert_eq!(rad.total(), d);
            assert_eq!(soc.total(), d);

            // duality swaps the two layerings exactly
            let dual = rep.dualize(&q);
            assert_eq!(dual.radical_layering(&op, truncation).unwrap(), soc);
            assert_eq!(dual.socle_layering(&op, truncation).unwrap(), rad);
            let double = dual.dualize(&op);
            for id in 0..q.arrows().len() {
                assert_eq!(double.matrix_entries(id), rep.matrix_entries(id));
            }

            // connection: J^l M sits inside soc_(L-l) M
            for l in 0..=truncation {
                let mut suffix = DimVector::zeros(6);
                for k in l..=truncation {
                    suffix = suffix.add(rad.layer(k));
                }
                let mut prefix = DimVector::zeros(6);
                for k in 0..=(truncation - l) {
                    prefix = prefix.add(soc.layer(k));
                }
                assert!(suffix.leq(&prefix), "connection at l={l}");
            }

            // monotone sanity: the concrete socle layering dominates the
            // generic one for the observed radical layering
            let generic = crate::socle::generic_socle_layering(&rad, &q).unwrap();
            assert!(generic.dominance_leq(&soc).unwrap());
        }
    }

    /// Restriction of a representation to `J^m M`, for the submodule
    /// genericity spot-check below.
    fn restrict_to_radical_power(
        rep: &Representation,
        q: &Quiver,
        m: usize,
    ) -> Representation {
        let field = PrimeField::new(rep.prime);
        let chain = rep.radical_chain(q, m);
        let bases = &chain[m];
        let pivots: Vec<Vec<usize>> = bases
            .iter()
            .map(|b| {
                (0..b.rows)
                    .map(|i| (0..b.cols).find(|&j| b.get(i, j) != 0).expect("nonzero row"))
                    .collect()
            })
            .collect();
        let dims: Vec<usize> = bases.iter().map(|b| b.rows).collect();
        let matrices: Vec<FpMat> = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(id, a)| {
                let images = bases[a.source].matmul(&rep.matrices[id].transpose(), &field);
                // coordinates in the reduced target basis: read off pivots
                let mut out = FpMat::zeros(dims[a.target], dims[a.source]);
                for j in 0..images.rows {
                    for (i, &pc) in pivots[a.target].iter().enumerate() {
                        out.set(i, j, images.get(j, pc));
                    }
                }
                out
            })
            .collect();
        Representation { prime: rep.prime, dims, matrices }
    }

    #[test]
    fn radical_power_of_generic_module_is_generic() {
        // instantiate a generic presentation, restrict to J^m, and compare
        // with the truncated layering
        let q = six_vertex();
        let truncation = 2;
        let s = seq(&[
            &[1, 1, 0, 1, 0, 0],
            &[0, 1, 1, 0, 2, 0],
            &[0, 0, 1, 0, 0, 2],
        ]);
        assert!(s.is_realizable(&q));
        let sk = crate::skeleta::first_skeleton(&s, &q).unwrap();
        let pres = crate::skeleta::build_presentation(&sk, &q);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let scalars: Vec<u64> = (0..pres.scalar_count())
            .map(|_| rng.gen_range(1..crate::DEFAULT_PRIME))
            .collect();
        let rep = pres.instantiate(&q, &scalars, crate::DEFAULT_PRIME).unwrap();
        assert_eq!(rep.radical_layering(&q, truncation).unwrap(), s);

        for m in 0..=truncation {
            let sub = restrict_to_radical_power(&rep, &q, m);
            let expected_layers: Vec<DimVector> = (0..=truncation)
                .map(|l| {
                    if l + m <= truncation {
                        s.layer(l + m).clone()
                    } else {
                        DimVector::zeros(6)
                    }
                })
                .collect();
            let expected = SemisimpleSequence::new(expected_layers).unwrap();
            assert_eq!(sub.radical_layering(&q, truncation).unwrap(), expected, "m = {m}");
        }
    }
}
