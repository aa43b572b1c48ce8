//! Constructors for the graph families used throughout the crate.
//!
//! Every generated DVDR graph has its distinguished vertex at label 0.

use super::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyKind {
    /// Complete multipartite graph with the given part sizes.
    CompleteMultipartite(Vec<usize>),
    /// A hub joined to every vertex of a regular base graph.
    DvdrFromRegular(Graph),
    Path,
    Cycle,
    Complete,
    Star,
    /// Equality graphs of the gap bound: `K_{1,2,...,2}` for odd order, all
    /// `(n-4)`-DVDR graphs for even order.
    Extremal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: usize) -> Self {
        FamilySpec { kind, n }
    }

    /// Builds every graph described by this spec.
    pub fn build(&self) -> Result<Vec<Graph>, GraphError> {
        let n = self.n;
        let one = |g: Graph| Ok(vec![g]);
        match &self.kind {
            FamilyKind::CompleteMultipartite(parts) => {
                let total: usize = parts.iter().sum();
                if total != n {
                    return Err(GraphError::InvalidFamily(format!(
                        "part sizes sum to {total}, expected {n}"
                    )));
                }
                one(make_complete_multipartite(parts)?)
            }
            FamilyKind::DvdrFromRegular(base) => {
                if base.order() + 1 != n {
                    return Err(GraphError::InvalidFamily(format!(
                        "base graph has {} vertices, expected {}",
                        base.order(),
                        n.saturating_sub(1)
                    )));
                }
                one(make_dvdr(base)?)
            }
            FamilyKind::Path => one(make_path(n)?),
            FamilyKind::Cycle => one(make_cycle(n)?),
            FamilyKind::Complete => one(make_complete(n)?),
            FamilyKind::Star => one(make_star(n)?),
            FamilyKind::Extremal => extremal_family(n),
        }
    }
}

/// `K_{1,2,...,2}` for odd `n >= 3`, every `(n-4)`-DVDR graph for even `n >= 4`.
pub fn extremal_family(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidFamily(format!(
            "extremal graphs need order at least 3, got {n}"
        )));
    }
    if n % 2 == 1 {
        let mut parts = vec![2; (n - 1) / 2];
        parts.insert(0, 1);
        Ok(vec![make_complete_multipartite(&parts)?])
    } else {
        enumerate_n4_dvdr(n)
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n == 0 || n > MAX_ORDER {
        Err(GraphError::UnsupportedOrder(n))
    } else {
        Ok(())
    }
}

pub fn make_complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(GraphError::InvalidFamily(
            "part sizes must be a nonempty list of positive integers".into(),
        ));
    }
    let n: usize = parts.iter().sum();
    check_order(n)?;
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(p, size));
    }
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

pub fn make_path(n: usize) -> Result<Graph, GraphError> {
    check_order(n)?;
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

pub fn make_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidFamily(format!(
            "cycles need at least 3 vertices, got {n}"
        )));
    }
    check_order(n)?;
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn make_complete(n: usize) -> Result<Graph, GraphError> {
    check_order(n)?;
    Ok(Graph::empty(n)?.complement())
}

/// `K_{1,n-1}` with the centre at vertex 0.
pub fn make_star(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidFamily(format!(
            "stars need at least 2 vertices, got {n}"
        )));
    }
    check_order(n)?;
    Graph::from_edges(n, (1..n).map(|v| (0, v)))
}

/// `K_{2,2,...,2}` on `n` vertices (n even).
pub fn cocktail_party(n: usize) -> Result<Graph, GraphError> {
    if n < 2 || n % 2 == 1 {
        return Err(GraphError::InvalidFamily(format!(
            "cocktail-party graphs need a positive even order, got {n}"
        )));
    }
    make_complete_multipartite(&vec![2; n / 2])
}

/// Adds a distinguished vertex (label 0) adjacent to every vertex of a
/// regular `base`; base vertex `i` becomes `i + 1`.
pub fn make_dvdr(base: &Graph) -> Result<Graph, GraphError> {
    if base.regular_degree().is_none() {
        let degrees = base.degree_sequence();
        return Err(GraphError::NotRegular {
            min: *degrees.iter().min().unwrap(),
            max: *degrees.iter().max().unwrap(),
        });
    }
    let n = base.order() + 1;
    check_order(n)?;
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(0, v)?;
    }
    for (u, v) in base.edges() {
        g.add_edge(u + 1, v + 1)?;
    }
    Ok(g)
}

/// Partitions of `total` into parts `>= min_part`, each sorted ascending.
/// Ordered by number of parts, then lexicographically.
pub(crate) fn partitions_min_part(total: usize, min_part: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in lo..=rest {
            if rest - p != 0 && rest - p < p {
                continue;
            }
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if total >= min_part {
        go(total, min_part, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Disjoint union of cycles with the given lengths on consecutive labels.
fn cycle_union(lengths: &[usize]) -> Result<Graph, GraphError> {
    let n: usize = lengths.iter().sum();
    let mut g = Graph::empty(n)?;
    let mut offset = 0;
    for &len in lengths {
        for i in 0..len {
            g.add_edge(offset + i, offset + (i + 1) % len)?;
        }
        offset += len;
    }
    Ok(g)
}

/// One representative of every `(n-4)`-DVDR graph of even order `n`.
///
/// An `(n-4)`-regular graph on `n-1` vertices is the complement of a
/// 2-regular one, i.e. of a disjoint union of cycles, so the classes are
/// indexed by partitions of `n-1` into parts of size at least 3.
pub fn enumerate_n4_dvdr(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n < 4 || n % 2 == 1 {
        return Err(GraphError::InvalidFamily(format!(
            "(n-4)-DVDR graphs need an even order n >= 4, got {n}"
        )));
    }
    check_order(n)?;
    partitions_min_part(n - 1, 3)
        .iter()
        .map(|lengths| make_dvdr(&cycle_union(lengths)?.complement()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multipartite_examples() {
        let k122 = make_complete_multipartite(&[1, 2, 2]).unwrap();
        assert_eq!(k122.degree_sequence(), vec![4, 3, 3, 3, 3]);
        assert_eq!(
            make_complete_multipartite(&[1, 2]).unwrap(),
            make_path(3).unwrap().permuted(&[1, 0, 2])
        );
        assert_eq!(
            make_complete_multipartite(&[1, 1, 1, 1]).unwrap(),
            make_complete(4).unwrap()
        );
        assert!(make_complete_multipartite(&[]).is_err());
        assert!(make_complete_multipartite(&[1, 0]).is_err());
    }

    #[test]
    fn dvdr_examples() {
        let wheel = make_dvdr(&make_cycle(5).unwrap()).unwrap();
        assert_eq!(wheel.degree_sequence(), vec![5, 3, 3, 3, 3, 3]);
        let star = make_dvdr(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(star, make_star(4).unwrap());
        let matching = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let g = make_dvdr(&matching).unwrap();
        assert_eq!(g.degree_sequence(), vec![4, 2, 2, 2, 2]);
        assert!(g.is_connected());
        assert_eq!(g.delete_vertex(0).unwrap(), matching);
    }

    #[test]
    fn dvdr_rejects_irregular_base() {
        assert_eq!(
            make_dvdr(&make_path(3).unwrap()),
            Err(GraphError::NotRegular { min: 1, max: 2 })
        );
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_min_part(3, 3), vec![vec![3]]);
        assert_eq!(partitions_min_part(5, 3), vec![vec![5]]);
        assert_eq!(partitions_min_part(7, 3), vec![vec![7], vec![3, 4]]);
        assert_eq!(
            partitions_min_part(9, 3),
            vec![vec![9], vec![3, 6], vec![4, 5], vec![3, 3, 3]]
        );
    }

    #[test]
    fn n4_dvdr_sizes() {
        assert_eq!(enumerate_n4_dvdr(4).unwrap(), vec![make_star(4).unwrap()]);
        let six = enumerate_n4_dvdr(6).unwrap();
        assert_eq!(six.len(), 1);
        assert_eq!(six[0].degree_sequence(), vec![5, 3, 3, 3, 3, 3]);
        assert_eq!(enumerate_n4_dvdr(8).unwrap().len(), 2);
        assert_eq!(enumerate_n4_dvdr(10).unwrap().len(), 4);
        assert!(enumerate_n4_dvdr(5).is_err());
        assert!(enumerate_n4_dvdr(2).is_err());
    }

    #[test]
    fn n4_dvdr_structure() {
        for n in (4..=20).step_by(2) {
            let family = enumerate_n4_dvdr(n).unwrap();
            let mut signatures = Vec::new();
            for g in &family {
                assert_eq!(g.degree(0), n - 1);
                let rest = g.delete_vertex(0).unwrap();
                assert_eq!(rest.regular_degree(), Some(n - 4));
                signatures.push(rest.complement().cycle_lengths().unwrap());
            }
            let before = signatures.len();
            signatures.dedup();
            assert_eq!(signatures.len(), before, "duplicate class at n={n}");
        }
    }

    #[test]
    fn odd_extremal_complement_signature() {
        for n in (3..=21).step_by(2) {
            let g = &extremal_family(n).unwrap()[0];
            let c = g.complement();
            let mut degrees = c.degree_sequence();
            degrees.sort_unstable();
            let mut expected = vec![1; n - 1];
            expected.insert(0, 0);
            assert_eq!(degrees, expected);
        }
    }

    #[test]
    fn family_spec_validation() {
        let spec = FamilySpec::new(FamilyKind::CompleteMultipartite(vec![1, 2]), 4);
        assert!(spec.build().is_err());
        assert_eq!(
            FamilySpec::new(FamilyKind::Extremal, 8)
                .build()
                .unwrap()
                .len(),
            2
        );
        assert!(FamilySpec::new(FamilyKind::Extremal, 2).build().is_err());
        assert_eq!(
            FamilySpec::new(FamilyKind::Cycle, 5).build().unwrap()[0],
            make_cycle(5).unwrap()
        );
        let base = make_cycle(5).unwrap();
        assert!(
            FamilySpec::new(FamilyKind::DvdrFromRegular(base.clone()), 7)
                .build()
                .is_err()
        );
        assert_eq!(
            FamilySpec::new(FamilyKind::DvdrFromRegular(base), 6)
                .build()
                .unwrap()
                .len(),
            1
        );
    }
}
