//! The linear dependence graph Γ(V) and its matrices.
//!
//! Vertices are laid out in a canonical order: θ first, then the classes of
//! the subspace partition (by representative index), members ascending within
//! a class. In that order the adjacency matrix takes a block shape — a full
//! first row and column for θ, and one (q-1)×(q-1) all-ones-minus-identity
//! block per 1-dimensional subspace — which makes matrix layouts reproducible
//! bit for bit across runs.
//!
//! [`build_windmill`] constructs the same shape directly from `(q, N)` with
//! no field arithmetic at all; agreement between the two constructors is one
//! of the structural cross-checks the verifier relies on.

use crate::gf::FieldSpec;
use crate::vspace::{enumerate_vectors, is_dependent, partition_subspaces};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Family parameters of a built graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMeta {
    pub p: u64,
    pub k: u32,
    pub n: u32,
    pub q: u64,
    #[serde(rename = "N")]
    pub num_subspaces: u64,
}

/// A simple undirected graph with a fixed vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepGraph {
    order: usize,
    /// position -> vector index; identity for synthetic graphs.
    vertex_order: Vec<u64>,
    adj: Vec<bool>,
    meta: Option<GraphMeta>,
}

impl DepGraph {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertex_order(&self) -> &[u64] {
        &self.vertex_order
    }

    pub fn meta(&self) -> Option<&GraphMeta> {
        self.meta.as_ref()
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.order + j]
    }

    pub fn degree(&self, i: usize) -> usize {
        (0..self.order).filter(|&j| self.is_edge(i, j)).count()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&j| self.is_edge(i, j))
    }

    /// Edges as position pairs (i, j) with i < j, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.order {
            for j in (i + 1)..self.order {
                if self.is_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Build a graph from an explicit edge list (test scaffolding and
    /// counterexample graphs). Vertex order is the identity, no meta.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> DepGraph {
        let mut adj = vec![false; order * order];
        for &(i, j) in edges {
            assert!(i != j && i < order && j < order, "bad edge ({i}, {j})");
            adj[i * order + j] = true;
            adj[j * order + i] = true;
        }
        DepGraph {
            order,
            vertex_order: (0..order as u64).collect(),
            adj,
            meta: None,
        }
    }

    /// Graph JSON export; requires family meta.
    pub fn to_json(&self) -> Result<String> {
        let meta = self.meta.as_ref().ok_or_else(|| {
            Error::InvalidInput("graph export requires family meta; build from a field".into())
        })?;
        #[derive(Serialize)]
        struct Export<'a> {
            meta: &'a GraphMeta,
            vertex_order: &'a [u64],
            edges: Vec<(usize, usize)>,
        }
        let export = Export {
            meta,
            vertex_order: &self.vertex_order,
            edges: self.edges(),
        };
        Ok(serde_json::to_string_pretty(&export).expect("export serialises"))
    }

    /// DOT export: node ids are canonical positions, labels carry the vector
    /// coordinates (θ is labelled "theta").
    pub fn to_dot(&self) -> Result<String> {
        let meta = self.meta.as_ref().ok_or_else(|| {
            Error::InvalidInput("DOT export requires family meta; build from a field".into())
        })?;
        let mut out = String::from("graph gamma {\n");
        for (pos, &vidx) in self.vertex_order.iter().enumerate() {
            let label = if vidx == 0 {
                "theta".to_string()
            } else {
                let mut rem = vidx;
                let mut digits = Vec::with_capacity(meta.n as usize);
                for _ in 0..meta.n {
                    digits.push((rem % meta.q).to_string());
                    rem /= meta.q;
                }
                format!("({})", digits.join(","))
            };
            out.push_str(&format!("  {pos} [label=\"{label}\"];\n"));
        }
        for (i, j) in self.edges() {
            out.push_str(&format!("  {i} -- {j};\n"));
        }
        out.push_str("}\n");
        Ok(out)
    }
}

/// Construct Γ(V) for V = F_q^n over the given field presentation.
///
/// The edge set is exactly the pairwise-dependence relation; the vertex
/// order is canonical (θ, then subspace classes by representative).
pub fn build_graph(spec: &FieldSpec, n: u32, max_vertices: u64) -> Result<DepGraph> {
    let vectors = enumerate_vectors(spec, n, max_vertices)?;
    let partition = partition_subspaces(spec, &vectors);
    let order = vectors.len();

    let mut vertex_order = Vec::with_capacity(order);
    vertex_order.push(0u64);
    for class in &partition.classes {
        vertex_order.extend_from_slice(&class.members);
    }
    debug_assert_eq!(vertex_order.len(), order);

    let mut adj = vec![false; order * order];
    for i in 0..order {
        let u = &vectors[vertex_order[i] as usize];
        for j in (i + 1)..order {
            let v = &vectors[vertex_order[j] as usize];
            if is_dependent(spec, u, v) {
                adj[i * order + j] = true;
                adj[j * order + i] = true;
            }
        }
    }

    Ok(DepGraph {
        order,
        vertex_order,
        adj,
        meta: Some(GraphMeta {
            p: spec.p(),
            k: spec.k(),
            n,
            q: spec.q(),
            num_subspaces: partition.num_classes(),
        }),
    })
}

/// A windmill: hub vertex 0 joined to everything, plus `num_blades` disjoint
/// cliques of size `q - 1`. Built with no field arithmetic; serves as the
/// structural oracle for [`build_graph`].
pub fn build_windmill(q: u64, num_blades: u64) -> DepGraph {
    assert!(q >= 2 && num_blades >= 1, "windmill needs q >= 2, N >= 1");
    let block = (q - 1) as usize;
    let order = 1 + num_blades as usize * block;
    let mut adj = vec![false; order * order];
    for v in 1..order {
        adj[v] = true; // hub row
        adj[v * order] = true;
    }
    for b in 0..num_blades as usize {
        let start = 1 + b * block;
        for i in start..start + block {
            for j in (i + 1)..start + block {
                adj[i * order + j] = true;
                adj[j * order + i] = true;
            }
        }
    }
    DepGraph {
        order,
        vertex_order: (0..order as u64).collect(),
        adj,
        meta: None,
    }
}

/// A dense square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> i64) -> IntMatrix {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        IntMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Row-major CSV with a leading `order,<n>` header line.
    pub fn to_csv(&self) -> String {
        let mut out = format!("order,{}\n", self.order);
        for i in 0..self.order {
            let row: Vec<String> = (0..self.order)
                .map(|j| self.get(i, j).to_string())
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// 0/1 adjacency matrix in canonical vertex order.
pub fn adjacency_matrix(g: &DepGraph) -> IntMatrix {
    IntMatrix::from_fn(g.order(), |i, j| i64::from(g.is_edge(i, j)))
}

/// Laplacian L = D - A: degree diagonal minus adjacency.
pub fn laplacian_matrix(g: &DepGraph) -> IntMatrix {
    let degrees: Vec<i64> = (0..g.order()).map(|i| g.degree(i) as i64).collect();
    IntMatrix::from_fn(g.order(), |i, j| {
        if i == j {
            degrees[i]
        } else {
            -i64::from(g.is_edge(i, j))
        }
    })
}

/// BFS distances from every vertex; errors on a disconnected graph.
pub fn distance_matrix(g: &DepGraph) -> Result<IntMatrix> {
    let n = g.order();
    let mut dist = vec![-1i64; n * n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        dist[s * n + s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = dist[s * n + u];
            for v in g.neighbors(u) {
                if dist[s * n + v] < 0 {
                    dist[s * n + v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        if dist[s * n..(s + 1) * n].iter().any(|&d| d < 0) {
            return Err(Error::Disconnected);
        }
    }
    Ok(IntMatrix {
        order: n,
        entries: dist,
    })
}
