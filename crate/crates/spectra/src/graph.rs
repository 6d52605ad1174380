use models::KSubset;

use crate::SpectraError;

/// A simple graph as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Sorts and checks the lists: no loops, no repeats, symmetric.
    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Graph, SpectraError> {
        let n = adj.len();
        for (x, row) in adj.iter_mut().enumerate() {
            row.sort_unstable();
            if row.windows(2).any(|w| w[0] == w[1]) || row.iter().any(|&y| y >= n || y == x) {
                return Err(SpectraError::Parameter(format!("adjacency of vertex {x} has a loop, repeat or bad index")));
            }
        }
        let g = Graph { adj };
        for x in 0..n {
            if let Some(&y) = g.adj[x].iter().find(|&&y| !g.has_edge(y, x)) {
                return Err(SpectraError::Parameter(format!("edge ({x}, {y}) is not symmetric")));
            }
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph, SpectraError> {
        let mut adj = vec![Vec::new(); n];
        for (a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        Graph::from_adjacency(adj)
    }

    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn complete(n: usize) -> Graph {
        Graph { adj: (0..n).map(|x| (0..n).filter(|&y| y != x).collect()).collect() }
    }

    /// Vertices `KSubset::all(n, k)`; `A ~ B` iff `|A ∩ B| = k - i`.
    pub fn johnson_distance(n: usize, k: usize, i: usize) -> Graph {
        let v = KSubset::all(n, k);
        let adj = v
            .iter()
            .map(|a| (0..v.len()).filter(|&j| i > 0 && a.meet(v[j]).len() + i == k).collect())
            .collect();
        Graph { adj }
    }

    pub fn kneser(n: usize, k: usize) -> Graph {
        Graph::johnson_distance(n, k, k)
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbours(&self, x: usize) -> &[usize] {
        &self.adj[x]
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.adj[x].binary_search(&y).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|r| r.len() == d).then_some(d)
    }

    /// Component index of every vertex, numbered by smallest vertex.
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut comp = vec![usize::MAX; self.len()];
        let mut c = 0;
        for s in 0..self.len() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = c;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = c;
                        stack.push(y);
                    }
                }
            }
            c += 1;
        }
        (c, comp)
    }

    /// A proper 2-colouring, or `None` when an odd cycle exists.
    pub fn two_colouring(&self) -> Option<Vec<u8>> {
        let mut col = vec![u8::MAX; self.len()];
        for s in 0..self.len() {
            if col[s] != u8::MAX {
                continue;
            }
            col[s] = 0;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adj[x] {
                    if col[y] == u8::MAX {
                        col[y] = 1 - col[x];
                        stack.push(y);
                    } else if col[y] == col[x] {
                        return None;
                    }
                }
            }
        }
        Some(col)
    }

    /// Subgraph induced on `vertices`, relabelled by position.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut r: Vec<usize> = self.adj[v].iter().filter(|&&y| pos[y] != usize::MAX).map(|&y| pos[y]).collect();
                r.sort_unstable();
                r
            })
            .collect();
        Graph { adj }
    }

    /// `K2 ⋈ X`: vertices `(a, v)` at `a * n + v`, adjacency `J2 ⊗ A`.
    pub fn bowtie_k2(&self) -> Graph {
        let n = self.len();
        let adj = (0..2 * n)
            .map(|x| {
                let v = x % n;
                let mut r: Vec<usize> = self.adj[v].iter().copied().chain(self.adj[v].iter().map(|&w| w + n)).collect();
                r.sort_unstable();
                r
            })
            .collect();
        Graph { adj }
    }

    /// `K2 × X`: `(a, v) ~ (b, w)` iff `a != b` and `v ~ w`.
    pub fn direct_k2(&self) -> Graph {
        let n = self.len();
        let adj = (0..2 * n)
            .map(|x| {
                let (a, v) = (x / n, x % n);
                self.adj[v].iter().map(|&w| (1 - a) * n + w).collect()
            })
            .collect();
        Graph { adj }
    }

    /// Two disjoint copies.
    pub fn doubled(&self) -> Graph {
        let n = self.len();
        let adj = (0..2 * n).map(|x| self.adj[x % n].iter().map(|&w| w + (x / n) * n).collect()).collect();
        Graph { adj }
    }

    pub fn is_coclique(&self, set: &[usize]) -> bool {
        set.iter().enumerate().all(|(i, &x)| set[i + 1..].iter().all(|&y| !self.has_edge(x, y)))
    }

    /// An edge with both ends in `set`, if any.
    pub fn edge_inside(&self, set: &[usize]) -> Option<(usize, usize)> {
        let mut inside = vec![false; self.len()];
        for &x in set {
            inside[x] = true;
        }
        set.iter().find_map(|&x| self.adj[x].iter().find(|&&y| inside[y]).map(|&y| (x, y)))
    }
}

/// Checks that `map` is a bijection carrying the edges of `g` exactly onto those of `h`.
pub fn verify_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> Result<usize, SpectraError> {
    let n = g.len();
    if h.len() != n || map.len() != n {
        return Err(SpectraError::Consistency(format!("sizes differ: {n}, {}, map {}", h.len(), map.len())));
    }
    let mut hit = vec![false; n];
    for &m in map {
        if m >= n || std::mem::replace(&mut hit[m], true) {
            return Err(SpectraError::Consistency(format!("map is not a bijection at image {m}")));
        }
    }
    for x in 0..n {
        let mut img: Vec<usize> = g.neighbours(x).iter().map(|&y| map[y]).collect();
        img.sort_unstable();
        if img != h.neighbours(map[x]) {
            return Err(SpectraError::Consistency(format!("neighbourhood of vertex {x} is not carried onto that of {}", map[x])));
        }
    }
    Ok(g.edge_count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_basics() {
        let p = Graph::kneser(5, 2);
        assert_eq!((p.len(), p.regular_degree(), p.edge_count()), (10, Some(3), 15));
        assert_eq!(p.components().0, 1);
        assert!(p.two_colouring().is_none());
        let d = p.direct_k2();
        assert!(d.two_colouring().is_some());
        assert_eq!(p.bowtie_k2().regular_degree(), Some(6));
        assert_eq!(p.doubled().components().0, 2);
    }

    #[test]
    fn isomorphism_checker_rejects_wrong_maps() {
        let c = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(verify_isomorphism(&c, &c, &[1, 2, 3, 0]).is_ok());
        assert!(verify_isomorphism(&c, &c, &[0, 2, 1, 3]).is_err());
        assert!(verify_isomorphism(&c, &c, &[0, 0, 1, 3]).is_err());
    }
}
