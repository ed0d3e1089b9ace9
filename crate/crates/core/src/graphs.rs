//! Graph construction, random generation, text-file I/O and the
//! adjacency/Laplacian matrices that every Hamiltonian here is built from.

use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::{Result, WalkError};

/// Simple undirected graph: a symmetric 0/1 adjacency matrix with zero
/// diagonal. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<u8>>,
}

/// Named graph families used throughout the experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle,
    Path,
    Complete,
    Star,
}

impl std::str::FromStr for Family {
    type Err = WalkError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cycle" => Ok(Family::Cycle),
            "path" => Ok(Family::Path),
            "complete" => Ok(Family::Complete),
            "star" => Ok(Family::Star),
            other => Err(WalkError::Validation(format!("unknown family `{other}`"))),
        }
    }
}

impl Graph {
    /// Builds a graph from an explicit adjacency matrix, validating
    /// symmetry and zero diagonal.
    pub fn from_adjacency(adj: Vec<Vec<u8>>) -> Result<Self> {
        let n = adj.len();
        if n == 0 {
            return Err(WalkError::Size { family: "graph", n: 0 });
        }
        for (i, row) in adj.iter().enumerate() {
            if row.len() != n {
                return Err(WalkError::Dimension { expected: n, got: row.len() });
            }
            for (j, &v) in row.iter().enumerate() {
                if v > 1 {
                    return Err(WalkError::Validation(format!(
                        "adjacency entry ({i},{j}) = {v} not in {{0,1}}"
                    )));
                }
                if i == j && v != 0 {
                    return Err(WalkError::Validation(format!("nonzero diagonal at {i}")));
                }
                if adj[j][i] != v {
                    return Err(WalkError::Validation(format!(
                        "asymmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_adjacency(vec![vec![0; n]; n])
    }

    /// One of the named families. Cycles need n >= 3, everything else n >= 2.
    pub fn family(kind: Family, n: usize) -> Result<Self> {
        let min = match kind {
            Family::Cycle => 3,
            _ => 2,
        };
        if n < min {
            let family = match kind {
                Family::Cycle => "cycle",
                Family::Path => "path",
                Family::Complete => "complete",
                Family::Star => "star",
            };
            return Err(WalkError::Size { family, n });
        }
        let mut adj = vec![vec![0u8; n]; n];
        let mut add = |i: usize, j: usize| {
            adj[i][j] = 1;
            adj[j][i] = 1;
        };
        match kind {
            Family::Cycle => {
                for i in 0..n {
                    add(i, (i + 1) % n);
                }
            }
            Family::Path => {
                for i in 0..n - 1 {
                    add(i, i + 1);
                }
            }
            Family::Complete => {
                for i in 0..n {
                    for j in i + 1..n {
                        add(i, j);
                    }
                }
            }
            Family::Star => {
                for i in 1..n {
                    add(0, i);
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Erdős–Rényi style generator: each unordered pair gets an edge with
    /// probability `edge_prob`, drawn from a seeded ChaCha12 stream so the
    /// result is reproducible across platforms.
    pub fn random(n: usize, edge_prob: f64, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(WalkError::Size { family: "random", n });
        }
        if !(0.0..=1.0).contains(&edge_prob) {
            return Err(WalkError::Validation(format!(
                "edge probability {edge_prob} not in [0, 1]"
            )));
        }
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut adj = vec![vec![0u8; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen::<f64>() < edge_prob {
                    adj[i][j] = 1;
                    adj[j][i] = 1;
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Parses the adjacency text format: n rows of n whitespace-separated
    /// 0/1 entries, `#` lines ignored, trailing whitespace tolerated.
    pub fn parse_adjacency(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<u8>> = Vec::new();
        let mut row_lines: Vec<usize> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                let v: i64 = tok.parse().map_err(|_| WalkError::Format {
                    line: lineno + 1,
                    msg: format!("`{tok}` is not an integer"),
                })?;
                if v != 0 && v != 1 {
                    return Err(WalkError::Value {
                        line: lineno + 1,
                        msg: format!("entry {v} not in {{0,1}}"),
                    });
                }
                row.push(v as u8);
            }
            rows.push(row);
            row_lines.push(lineno + 1);
        }
        let n = rows.len();
        if n == 0 {
            return Err(WalkError::Format { line: 0, msg: "no matrix rows".into() });
        }
        for (k, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(WalkError::Format {
                    line: row_lines[k],
                    msg: format!("row has {} entries, expected {n}", row.len()),
                });
            }
        }
        Graph::from_adjacency(rows)
    }

    /// Canonical serialization: single spaces, `\n` endings.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for row in &self.adj {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i][j] == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].iter().map(|&v| v as usize).sum()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[i]
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 1)
            .map(|(j, _)| j)
    }

    /// Adjacency as a dense real matrix.
    pub fn adjacency_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| self.adj[i][j] as f64)
    }

    /// Degree matrix diagonal D[i] = row sum of A.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.degree(i)).collect()
    }

    /// Laplacian in the sign convention L = A - D.
    pub fn laplacian(&self) -> DMatrix<f64> {
        let mut l = self.adjacency_matrix();
        for i in 0..self.n {
            l[(i, i)] -= self.degree(i) as f64;
        }
        l
    }
}
