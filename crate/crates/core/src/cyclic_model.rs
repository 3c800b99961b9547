//! Cyclic vertex model of the higher cluster category of type `A_n`.
//!
//! Indecomposable objects are `(d+1)`-subsets of the vertices `1..=N` of an
//! `N`-gon, `N = n + 2d + 1`, containing no two cyclically adjacent vertices.
//! Vertices are labelled clockwise and are 1-based throughout.
//!
//! Cyclic inequalities are always evaluated relative to a basepoint: each
//! vertex in a chain is mapped to its clockwise offset from the first vertex
//! of the chain, which turns the cyclic chain into an ordinary monotonicity
//! check.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The pair `(n, d)` with derived cycle length `N = n + 2d + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct ModelParams {
    n: usize,
    d: usize,
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    n: usize,
    d: usize,
}

impl TryFrom<RawParams> for ModelParams {
    type Error = Error;
    fn try_from(raw: RawParams) -> Result<Self> {
        ModelParams::new(raw.n, raw.d)
    }
}

impl From<ModelParams> for RawParams {
    fn from(p: ModelParams) -> Self {
        RawParams { n: p.n, d: p.d }
    }
}

impl ModelParams {
    pub fn new(n: usize, d: usize) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::InvalidParams(format!("need n >= 1 and d >= 1, got n={n}, d={d}")));
        }
        let params = ModelParams { n, d };
        // Room for d+1 pairwise non-adjacent vertices.
        assert!(params.cycle_len() >= 2 * (d + 1));
        Ok(params)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of polygon vertices, `n + 2d + 1`.
    pub fn cycle_len(&self) -> usize {
        self.n + 2 * self.d + 1
    }

    /// Number of summands of a basic cluster tilting object, `C(n+d-1, d)`.
    pub fn tilting_size(&self) -> usize {
        binomial(self.n + self.d - 1, self.d)
    }

    /// Closed-form count of indecomposables, `N/(N-d-1) * C(N-d-1, d+1)`.
    pub fn object_count(&self) -> usize {
        let big_n = self.cycle_len();
        let m = big_n - self.d - 1;
        big_n * binomial(m, self.d + 1) / m
    }

    /// `(-1)^d`.
    pub fn sign(&self) -> i64 {
        if self.d.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if (1..=self.cycle_len()).contains(&v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, cycle_len: self.cycle_len() })
        }
    }
}

impl fmt::Display for ModelParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}, d={}", self.n, self.d)
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// A polygon vertex in `1..=N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vertex(usize);

impl Vertex {
    pub fn new(value: usize, params: &ModelParams) -> Result<Self> {
        params.check_vertex(value)?;
        Ok(Vertex(value))
    }

    pub fn value(self) -> usize {
        self.0
    }
}

/// Clockwise distance from `base` to `v` on the `cycle_len`-gon.
pub(crate) fn offset(base: usize, v: usize, cycle_len: usize) -> usize {
    (v + cycle_len - base) % cycle_len
}

/// Moves `v` by `steps` places anticlockwise (negative `steps` moves clockwise).
fn rotate(v: usize, steps: i64, cycle_len: usize) -> usize {
    let n = cycle_len as i64;
    ((v as i64 - 1 - steps).rem_euclid(n) + 1) as usize
}

/// The vertex one step anticlockwise of `v`.
pub fn predecessor(v: Vertex, params: &ModelParams) -> Result<Vertex> {
    params.check_vertex(v.0)?;
    Ok(Vertex(rotate(v.0, 1, params.cycle_len())))
}

/// True iff walking clockwise from `a` meets `b` no later than `c`.
pub fn cyclically_between(a: Vertex, b: Vertex, c: Vertex, params: &ModelParams) -> Result<bool> {
    for v in [a, b, c] {
        params.check_vertex(v.0)?;
    }
    let len = params.cycle_len();
    Ok(offset(a.0, b.0, len) <= offset(a.0, c.0, len))
}

/// Strict variant of [`cyclically_between`].
pub fn strictly_cyclically_between(a: Vertex, b: Vertex, c: Vertex, params: &ModelParams) -> Result<bool> {
    for v in [a, b, c] {
        params.check_vertex(v.0)?;
    }
    let len = params.cycle_len();
    Ok(offset(a.0, b.0, len) < offset(a.0, c.0, len))
}

/// Checks a cyclic chain `items[0] R_0 items[1] R_1 ...` where `R_k` is `<`
/// when `strict[k]` and `<=` otherwise. Offsets are measured clockwise from
/// `items[0]`, so the whole chain must fit in a single lap.
pub(crate) fn chain_holds(cycle_len: usize, items: &[usize], strict: &[bool]) -> bool {
    debug_assert_eq!(strict.len() + 1, items.len());
    let base = items[0];
    let offsets: Vec<usize> = items.iter().map(|&v| offset(base, v, cycle_len)).collect();
    offsets.windows(2).zip(strict).all(|(w, &s)| if s { w[0] < w[1] } else { w[0] <= w[1] })
}

/// An indecomposable object: an admissible `(d+1)`-subset, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndObj(Vec<usize>);

impl IndObj {
    pub fn new(elements: impl Into<Vec<usize>>, params: &ModelParams) -> Result<Self> {
        let mut elements = elements.into();
        for &v in &elements {
            params.check_vertex(v)?;
        }
        if !is_admissible(&elements, params) {
            return Err(Error::Inadmissible(elements));
        }
        elements.sort_unstable();
        Ok(IndObj(elements))
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    /// Element `i` of the labelling that starts at rotation `r`.
    pub(crate) fn labelled(&self, r: usize, i: usize) -> usize {
        self.0[(r + i) % self.0.len()]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl fmt::Display for IndObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Applies `Σ^d` to `x` `steps` times; negative `steps` applies `Σ^{-d}`.
pub fn shift(x: &IndObj, steps: i64, params: &ModelParams) -> IndObj {
    let len = params.cycle_len();
    let mut moved: Vec<usize> = x.0.iter().map(|&v| rotate(v, steps, len)).collect();
    moved.sort_unstable();
    IndObj(moved)
}

/// True iff `set` has `d+1` distinct in-range elements, no two cyclically adjacent.
pub fn is_admissible(set: &[usize], params: &ModelParams) -> bool {
    let len = params.cycle_len();
    if set.len() != params.d + 1 || set.iter().any(|&v| v == 0 || v > len) {
        return false;
    }
    let mut sorted = set.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[1] - w[0] < 2) {
        return false;
    }
    sorted[0] + len - sorted[sorted.len() - 1] >= 2
}

/// All indecomposables in lexicographic order.
pub fn enumerate_indecomposables(params: &ModelParams) -> Vec<IndObj> {
    fn extend(params: &ModelParams, prefix: &mut Vec<usize>, out: &mut Vec<IndObj>) {
        let len = params.cycle_len();
        if prefix.len() == params.d + 1 {
            if prefix[0] + len - prefix[prefix.len() - 1] >= 2 {
                out.push(IndObj(prefix.clone()));
            }
            return;
        }
        let start = prefix.last().map_or(1, |&v| v + 2);
        for v in start..=len {
            prefix.push(v);
            extend(params, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::with_capacity(params.object_count());
    extend(params, &mut Vec::with_capacity(params.d + 1), &mut out);
    out
}

/// True iff the elements of `x` and `y` strictly alternate around the cycle.
///
/// Equivalently each open gap between cyclically consecutive elements of `x`
/// holds exactly one element of `y`. Objects sharing a vertex never intertwine.
pub fn intertwines(x: &IndObj, y: &IndObj, _params: &ModelParams) -> bool {
    let (a, b) = (&x.0, &y.0);
    if a.len() != b.len() {
        return false;
    }
    // Merge both sorted sequences, tagging each element with its origin; with
    // equal sizes, alternation along the line is alternation around the cycle.
    let (mut i, mut j) = (0, 0);
    let mut last: Option<bool> = None;
    while i < a.len() || j < b.len() {
        let from_x = match (a.get(i), b.get(j)) {
            (Some(p), Some(q)) if p == q => return false,
            (Some(p), Some(q)) => p < q,
            (Some(_), None) => true,
            _ => false,
        };
        if last == Some(from_x) {
            return false;
        }
        last = Some(from_x);
        if from_x {
            i += 1;
        } else {
            j += 1;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, d: usize) -> ModelParams {
        ModelParams::new(n, d).unwrap()
    }

    fn obj(v: &[usize], params: &ModelParams) -> IndObj {
        IndObj::new(v.to_vec(), params).unwrap()
    }

    #[test]
    fn rejects_degenerate_params() {
        assert!(ModelParams::new(0, 1).is_err());
        assert!(ModelParams::new(2, 0).is_err());
        assert_eq!(p(2, 2).cycle_len(), 7);
    }

    #[test]
    fn predecessor_wraps() {
        let params = p(2, 2);
        let v = |k| Vertex::new(k, &params).unwrap();
        assert_eq!(predecessor(v(3), &params).unwrap().value(), 2);
        assert_eq!(predecessor(v(1), &params).unwrap().value(), 7);
        let twice = predecessor(predecessor(v(1), &params).unwrap(), &params).unwrap();
        assert_eq!(twice.value(), 6);
        let mut w = v(4);
        for _ in 0..7 {
            w = predecessor(w, &params).unwrap();
        }
        assert_eq!(w.value(), 4);
        assert!(Vertex::new(8, &params).is_err());
        assert!(Vertex::new(0, &params).is_err());
    }

    #[test]
    fn betweenness() {
        let params = p(1, 1); // N = 4
        let params5 = p(2, 1); // N = 5
        let v = |k| Vertex(k);
        assert!(cyclically_between(v(1), v(2), v(3), &params5).unwrap());
        assert!(cyclically_between(v(4), v(5), v(2), &params5).unwrap());
        assert!(!cyclically_between(v(4), v(2), v(5), &params5).unwrap());
        assert!(cyclically_between(v(2), v(2), v(2), &params).unwrap());
        assert!(!strictly_cyclically_between(v(2), v(3), v(3), &params).unwrap());
        assert!(cyclically_between(v(1), v(2), v(9), &params).is_err());
    }

    #[test]
    fn shift_examples() {
        let params = p(2, 2);
        let u = obj(&[1, 3, 5], &params);
        assert_eq!(shift(&u, 1, &params), obj(&[2, 4, 7], &params));
        assert_eq!(shift(&u, 0, &params), u);
        assert_eq!(shift(&obj(&[2, 4, 7], &params), -1, &params), u);
        assert_eq!(shift(&u, 7, &params), u);
    }

    #[test]
    fn admissibility_examples() {
        let params = p(2, 2);
        assert!(is_admissible(&[1, 3, 5], &params));
        assert!(!is_admissible(&[1, 2, 4], &params));
        assert!(!is_admissible(&[1, 3, 7], &params));
        assert!(!is_admissible(&[1, 3], &params));
        assert!(!is_admissible(&[1, 3, 3], &params));
        assert!(!is_admissible(&[0, 3, 5], &params));
        assert!(!is_admissible(&[1, 3, 50], &params));
        assert!(is_admissible(&[5, 1, 3], &params));
    }

    #[test]
    fn pentagon_diagonals() {
        let params = p(2, 1);
        let all: Vec<Vec<usize>> =
            enumerate_indecomposables(&params).into_iter().map(|x| x.0).collect();
        assert_eq!(all, vec![vec![1, 3], vec![1, 4], vec![2, 4], vec![2, 5], vec![3, 5]]);
    }

    #[test]
    fn intertwining_examples() {
        let p21 = p(2, 1);
        assert!(intertwines(&obj(&[1, 4], &p21), &obj(&[3, 5], &p21), &p21));
        assert!(!intertwines(&obj(&[1, 3], &p21), &obj(&[1, 4], &p21), &p21));
        let p22 = p(2, 2);
        assert!(intertwines(&obj(&[1, 3, 5], &p22), &obj(&[2, 4, 6], &p22), &p22));
        assert!(!intertwines(&obj(&[1, 3, 5], &p22), &obj(&[1, 3, 5], &p22), &p22));
    }

    #[test]
    fn chain_offsets() {
        // 6 <= 1 < 3 on a 7-gon, read from basepoint 6.
        assert!(chain_holds(7, &[6, 1, 3], &[false, true]));
        assert!(!chain_holds(7, &[6, 3, 1], &[false, true]));
        assert!(chain_holds(7, &[2, 2, 2], &[false, false]));
        assert!(!chain_holds(7, &[2, 2], &[true]));
    }
}
