//! Cluster tilting objects as maximal families of pairwise non-intertwining
//! indecomposables.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclic_model::{enumerate_indecomposables, intertwines, is_admissible, shift, IndObj, ModelParams};
use crate::hom_engine::hom_dim;

/// Undirected graph on the indecomposables; `x -- y` iff `x != y` and they do not intertwine.
#[derive(Clone, Debug)]
pub struct CompatibilityGraph {
    objects: Vec<IndObj>,
    adjacency: Vec<FixedBitSet>,
}

impl CompatibilityGraph {
    pub fn objects(&self) -> &[IndObj] {
        &self.objects
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    /// Edges `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.objects.len())
            .flat_map(|a| self.adjacency[a].ones().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    /// Graphviz rendering with vertices labelled in subset notation.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph compatibility {\n");
        for o in &self.objects {
            out.push_str(&format!("  \"{o}\";\n"));
        }
        for (a, b) in self.edges() {
            out.push_str(&format!("  \"{}\" -- \"{}\";\n", self.objects[a], self.objects[b]));
        }
        out.push_str("}\n");
        out
    }

    /// All maximal cliques, each sorted, listed in lexicographic order.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let m = self.objects.len();
        let mut candidates = FixedBitSet::with_capacity(m);
        candidates.insert_range(..);
        let mut cliques = Vec::new();
        let mut current = Vec::new();
        self.pivot_search(&mut current, candidates, FixedBitSet::with_capacity(m), &mut cliques);
        for c in &mut cliques {
            c.sort_unstable();
        }
        cliques.sort();
        cliques
    }

    // Bron–Kerbosch with Tomita pivoting.
    fn pivot_search(
        &self,
        current: &mut Vec<usize>,
        mut candidates: FixedBitSet,
        mut excluded: FixedBitSet,
        out: &mut Vec<Vec<usize>>,
    ) {
        if candidates.is_clear() {
            if excluded.is_clear() {
                out.push(current.clone());
            }
            return;
        }
        let pivot = candidates
            .ones()
            .chain(excluded.ones())
            .max_by_key(|&u| self.adjacency[u].intersection(&candidates).count())
            .expect("candidates is non-empty");
        let mut branch = candidates.clone();
        branch.difference_with(&self.adjacency[pivot]);
        for v in branch.ones() {
            let mut next_candidates = candidates.clone();
            next_candidates.intersect_with(&self.adjacency[v]);
            let mut next_excluded = excluded.clone();
            next_excluded.intersect_with(&self.adjacency[v]);
            current.push(v);
            self.pivot_search(current, next_candidates, next_excluded, out);
            current.pop();
            candidates.set(v, false);
            excluded.insert(v);
        }
    }
}

pub fn compatibility_graph(params: &ModelParams) -> CompatibilityGraph {
    let objects = enumerate_indecomposables(params);
    let m = objects.len();
    let adjacency = (0..m)
        .map(|a| {
            let mut row = FixedBitSet::with_capacity(m);
            for b in 0..m {
                if a != b && !intertwines(&objects[a], &objects[b], params) {
                    row.insert(b);
                }
            }
            row
        })
        .collect();
    CompatibilityGraph { objects, adjacency }
}

/// A validated basic cluster tilting object, summands in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TiltingObject {
    summands: Vec<IndObj>,
}

impl TiltingObject {
    pub fn summands(&self) -> &[IndObj] {
        &self.summands
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn position(&self, x: &IndObj) -> Option<usize> {
        self.summands.binary_search(x).ok()
    }

    pub fn contains(&self, x: &IndObj) -> bool {
        self.position(x).is_some()
    }

    /// The summands of `Σ^d T`, in the order of the corresponding summands of `T`.
    pub fn shifted(&self, params: &ModelParams) -> Vec<IndObj> {
        self.summands.iter().map(|t| shift(t, 1, params)).collect()
    }
}

impl fmt::Display for TiltingObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.summands.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Why a candidate family is not a cluster tilting object.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TiltingError {
    #[error("{0} is not an admissible object for these parameters")]
    NotAnObject(IndObj),
    #[error("{0} is listed more than once")]
    Duplicate(IndObj),
    #[error("{0} and {1} intertwine")]
    Intertwining(IndObj, IndObj),
    #[error("expected {expected} summands, found {found}")]
    Size { expected: usize, found: usize },
    #[error("Hom({0}, Σ^d {1}) is nonzero")]
    ShiftedHom(IndObj, IndObj),
    #[error("not maximal: {0} intertwines with no summand")]
    NotMaximal(IndObj),
}

pub fn validate_tilting(candidate: &[IndObj], params: &ModelParams) -> Result<TiltingObject, TiltingError> {
    for x in candidate {
        if !is_admissible(x.elements(), params) {
            return Err(TiltingError::NotAnObject(x.clone()));
        }
    }
    let mut summands = candidate.to_vec();
    summands.sort();
    if let Some(w) = summands.windows(2).find(|w| w[0] == w[1]) {
        return Err(TiltingError::Duplicate(w[0].clone()));
    }
    for (i, a) in summands.iter().enumerate() {
        for b in &summands[i + 1..] {
            if intertwines(a, b, params) {
                return Err(TiltingError::Intertwining(a.clone(), b.clone()));
            }
        }
    }
    let expected = params.tilting_size();
    if summands.len() != expected {
        return Err(TiltingError::Size { expected, found: summands.len() });
    }
    for a in &summands {
        for b in &summands {
            if hom_dim(a, &shift(b, 1, params), params).is_nonzero() {
                return Err(TiltingError::ShiftedHom(a.clone(), b.clone()));
            }
        }
    }
    for x in enumerate_indecomposables(params) {
        if summands.binary_search(&x).is_err() && summands.iter().all(|t| !intertwines(&x, t, params)) {
            return Err(TiltingError::NotMaximal(x));
        }
    }
    Ok(TiltingObject { summands })
}

/// Result of enumerating maximal non-intertwining families.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingEnumeration {
    /// Maximal families of the expected size, in canonical order.
    pub tilting: Vec<TiltingObject>,
    /// Maximal families of any other size; expected to be empty.
    pub anomalies: Vec<Vec<IndObj>>,
}

pub fn enumerate_tilting(params: &ModelParams) -> TiltingEnumeration {
    let graph = compatibility_graph(params);
    let expected = params.tilting_size();
    let mut result = TiltingEnumeration::default();
    for clique in graph.maximal_cliques() {
        let summands: Vec<IndObj> = clique.iter().map(|&i| graph.objects[i].clone()).collect();
        if summands.len() == expected {
            result.tilting.push(TiltingObject { summands });
        } else {
            result.anomalies.push(summands);
        }
    }
    result.tilting.sort();
    result
}
