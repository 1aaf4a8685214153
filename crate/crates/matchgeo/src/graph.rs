//! Explicit materialization of the flip graph for brute-force verification
//! and DOT export. Vertices are all `(2m-1)!!` matchings in canonical order;
//! edges follow the symmetric-difference-is-a-4-cycle relation.

use std::collections::VecDeque;

use crate::error::Error;
use crate::matching::{AllMatchings, Matching};

pub struct MatchingGraph {
    m: usize,
    vertices: Vec<Matching>,
    adj: Vec<Vec<u32>>,
}

impl MatchingGraph {
    /// Materializes the graph; refuses when `(2m-1)!!` exceeds `cap`.
    pub fn build(m: usize, cap: u64) -> Result<Self, Error> {
        let vertices: Vec<Matching> = AllMatchings::new(m, cap)?.collect();
        let adj = vertices
            .iter()
            .map(|v| {
                v.neighbors()
                    .iter()
                    .map(|n| {
                        vertices
                            .binary_search(n)
                            .expect("neighbor is a perfect matching") as u32
                    })
                    .collect()
            })
            .collect();
        Ok(MatchingGraph { m, vertices, adj })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Matching] {
        &self.vertices
    }

    pub fn neighbors_of(&self, index: usize) -> &[u32] {
        &self.adj[index]
    }

    pub fn degree(&self, index: usize) -> usize {
        self.adj[index].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Index of a matching among the sorted vertices.
    pub fn index_of(&self, m: &Matching) -> Option<usize> {
        self.vertices.binary_search(m).ok()
    }

    /// Breadth-first distances from the vertex `src`; `u32::MAX` marks
    /// unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertices.len()];
        dist[src] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(src);
        while let Some(cur) = queue.pop_front() {
            let d = dist[cur];
            for &next in &self.adj[cur] {
                if dist[next as usize] == u32::MAX {
                    dist[next as usize] = d + 1;
                    queue.push_back(next as usize);
                }
            }
        }
        dist
    }

    /// Induced subgraph on the vertices satisfying `keep`, preserving order.
    pub fn induced<F>(&self, keep: F) -> MatchingGraph
    where
        F: Fn(&Matching) -> bool,
    {
        let mut remap = vec![u32::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if keep(v) {
                remap[i] = vertices.len() as u32;
                vertices.push(v.clone());
            }
        }
        let adj = self
            .adj
            .iter()
            .enumerate()
            .filter(|(i, _)| remap[*i] != u32::MAX)
            .map(|(_, ns)| {
                ns.iter()
                    .filter(|&&n| remap[n as usize] != u32::MAX)
                    .map(|&n| remap[n as usize])
                    .collect()
            })
            .collect();
        MatchingGraph {
            m: self.m,
            vertices,
            adj,
        }
    }

    /// Renders the graph in DOT format: vertices carry their canonical
    /// literal as the node id, edges are unlabeled, order is deterministic.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph matchings {\n");
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for (i, ns) in self.adj.iter().enumerate() {
            for &j in ns {
                if (j as usize) > i {
                    out.push_str(&format!(
                        "  \"{}\" -- \"{}\";\n",
                        self.vertices[i], self.vertices[j as usize]
                    ));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}
