use super::{BitIter, Graph, GraphError};

/// Shortest-path distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    diameter: u32,
}

impl DistanceMatrix {
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.d[i * self.n..(i + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// Row-major entries.
    pub fn as_slice(&self) -> &[u32] {
        &self.d
    }
}

/// All-pairs distances via one level-synchronous BFS per source.
pub fn apsp(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    let n = g.order();
    let all = g.vertex_mask();
    let mut d = vec![0u32; n * n];
    let mut diameter = 0;
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut level = 0u32;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= g.neighbor_mask(v);
            }
            next &= !seen;
            if next == 0 {
                break;
            }
            level += 1;
            for v in BitIter(next) {
                row[v] = level;
            }
            seen |= next;
            frontier = next;
        }
        if seen != all {
            return Err(GraphError::Disconnected);
        }
        diameter = diameter.max(level);
    }
    Ok(DistanceMatrix { n, d, diameter })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{graph_from_edges, make_cycle, make_path, make_star};

    #[test]
    fn path_distances() {
        let d = apsp(&make_path(4).unwrap()).unwrap();
        assert_eq!(d.row(0), &[0, 1, 2, 3]);
        assert_eq!(d.diameter(), 3);
    }

    #[test]
    fn star_distances() {
        let d = apsp(&make_star(4).unwrap()).unwrap();
        assert_eq!(d.get(1, 2), 2);
        assert!((1..4).all(|j| d.get(0, j) == 1));
        assert_eq!(d.diameter(), 2);
    }

    #[test]
    fn cycle_rows_are_permutations() {
        let d = apsp(&make_cycle(5).unwrap()).unwrap();
        for i in 0..5 {
            let mut row = d.row(i).to_vec();
            row.sort_unstable();
            assert_eq!(row, vec![0, 1, 1, 2, 2]);
        }
        assert_eq!(d.diameter(), 2);
    }

    #[test]
    fn single_vertex() {
        let d = apsp(&graph_from_edges(1, &[]).unwrap()).unwrap();
        assert_eq!(d.get(0, 0), 0);
        assert_eq!(d.diameter(), 0);
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = graph_from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(apsp(&g), Err(GraphError::Disconnected));
    }
}
