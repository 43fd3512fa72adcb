//! The full graph `Γ` (small fields only) and its incidence invariants.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use super::{HexVertex, Hexagon};

/// Vertex count above which [`HexGraph::build`] refuses to run.
pub const MAX_VERTICES: usize = 1 << 16;

#[derive(Clone, Debug)]
pub struct HexGraph {
    pub vertices: Vec<HexVertex>,
    pub index: HashMap<HexVertex, u32>,
    pub adj: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
    pub class_sizes: [usize; 10],
    pub sides: (usize, usize),
    pub bipartite: bool,
    pub degree: Option<usize>,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
}

impl HexGraph {
    /// All vertices reachable from `•`, in BFS order.
    pub fn build(hex: &Hexagon) -> Result<HexGraph, String> {
        let q = hex.field().order() as usize;
        let expected = 2 * (1..=5).map(|i| q.pow(i)).sum::<usize>() + 2;
        if expected > MAX_VERTICES {
            return Err(format!(
                "Γ has {expected} vertices at q = {q}; full construction is limited to q = 3"
            ));
        }
        let mut vertices = vec![HexVertex::Bullet];
        let mut index = HashMap::from([(HexVertex::Bullet, 0u32)]);
        let mut adj = Vec::new();
        let mut head = 0;
        while head < vertices.len() {
            let v = vertices[head];
            let mut row = Vec::new();
            for w in hex.neighbors(&v) {
                let id = *index.entry(w).or_insert_with(|| {
                    vertices.push(w);
                    vertices.len() as u32 - 1
                });
                row.push(id);
            }
            adj.push(row);
            head += 1;
        }
        Ok(HexGraph {
            vertices,
            index,
            adj,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(v, ns)| {
            ns.iter()
                .filter(move |&&w| (v as u32) < w)
                .map(move |&w| (v as u32, w))
        })
    }

    /// The neighbour lists must be symmetric for the graph to be undirected.
    pub fn is_symmetric(&self) -> bool {
        self.adj.iter().enumerate().all(|(v, ns)| {
            ns.iter()
                .all(|&w| self.adj[w as usize].contains(&(v as u32)))
        })
    }

    /// Distances from `src`, and the length of the shortest cycle through it.
    fn bfs(&self, src: usize) -> (Vec<u32>, Option<usize>) {
        let n = self.len();
        let mut dist = vec![u32::MAX; n];
        let mut parent = vec![u32::MAX; n];
        let mut cycle: Option<usize> = None;
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                let w = w as usize;
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v as u32;
                    queue.push_back(w);
                } else if parent[v] != w as u32 {
                    let len = (dist[v] + dist[w] + 1) as usize;
                    cycle = Some(cycle.map_or(len, |c| c.min(len)));
                }
            }
        }
        (dist, cycle)
    }

    pub fn stats(&self) -> GraphStats {
        let mut class_sizes = [0; 10];
        let mut sides = (0, 0);
        for v in &self.vertices {
            if let Some(c) = v.class() {
                class_sizes[c as usize - 1] += 1;
            }
            if v.side() {
                sides.1 += 1;
            } else {
                sides.0 += 1;
            }
        }
        let bipartite = self
            .edges()
            .all(|(a, b)| self.vertices[a as usize].side() != self.vertices[b as usize].side());
        let d0 = self.adj.first().map(Vec::len);
        let degree = d0.filter(|&d| self.adj.iter().all(|ns| ns.len() == d));
        let mut girth: Option<usize> = None;
        let mut diameter = Some(0usize);
        for v in 0..self.len() {
            let (dist, cycle) = self.bfs(v);
            if let Some(c) = cycle {
                girth = Some(girth.map_or(c, |g| g.min(c)));
            }
            match dist.iter().max() {
                Some(&u32::MAX) => diameter = None,
                Some(&d) => diameter = diameter.map(|x| x.max(d as usize)),
                None => {}
            }
        }
        GraphStats {
            vertices: self.len(),
            edges: self.edges().count(),
            class_sizes,
            sides,
            bipartite,
            degree,
            girth,
            diameter,
        }
    }

    /// Adjacency list: a `# id name` header line per vertex, then one
    /// `id: neighbour neighbour …` line per vertex.
    pub fn export(&self, hex: &Hexagon) -> String {
        let mut out = String::new();
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "# {i} {}", hex.word(v));
        }
        for (i, ns) in self.adj.iter().enumerate() {
            let mut ns = ns.clone();
            ns.sort_unstable();
            let list: Vec<String> = ns.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{i}: {}", list.join(" "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use std::sync::Arc;

    #[test]
    fn generalized_hexagon_of_order_three() {
        let hex = Hexagon::new(Arc::new(make_field(1).unwrap()));
        let g = HexGraph::build(&hex).unwrap();
        assert!(g.is_symmetric());
        let s = g.stats();
        assert_eq!(s.vertices, 728);
        assert_eq!(s.class_sizes, [3, 9, 27, 81, 243, 243, 81, 27, 9, 3]);
        assert_eq!(s.sides, (364, 364));
        assert!(s.bipartite);
        assert_eq!(s.degree, Some(4));
        assert_eq!(s.girth, Some(12));
        assert_eq!(s.diameter, Some(6));
        assert_eq!(s.edges, 728 * 2);
    }

    #[test]
    fn refuses_large_fields() {
        let hex = Hexagon::new(Arc::new(make_field(3).unwrap()));
        assert!(HexGraph::build(&hex).is_err());
    }

    #[test]
    fn export_lists_every_vertex() {
        let hex = Hexagon::new(Arc::new(make_field(1).unwrap()));
        let g = HexGraph::build(&hex).unwrap();
        let text = g.export(&hex);
        assert!(text.starts_with("# 0 •\n"));
        assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 728);
    }
}
