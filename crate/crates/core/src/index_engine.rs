//! The index `Ind_T(c)` in the split Grothendieck group of `add T`.
//!
//! Two independent routes:
//!
//! * resolution: `Σ_i (-1)^i [P_i]` over the truncated minimal projective
//!   resolution of `Hom(T, c)`; objects of `Σ^d T` get `(-1)^d [Σ^{-d} c]`.
//! * linear system: the index `a` is the unique solution of
//!   `Σ_j a_j dim Hom(t_j, x) = dim Hom_{C/[Σ^d T]}(c, x) + (-1)^d dim Hom^{[Σ^d T]}(c, Σ^d x)`
//!   over all indecomposables `x`. Only hom dimensions enter this route.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra_engine::{build_algebra, minimal_resolution, AlgebraPresentation};
use crate::cyclic_model::IndObj;
use crate::error::{Error, Result};
use crate::hom_engine::HomTable;
use crate::linalg::Matrix;
use crate::scalar::{Field, IntegerLift};
use crate::tilting::TiltingObject;

/// An element of `K_0^split(add T)` in the basis of summand classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexVector(Vec<i64>);

impl IndexVector {
    pub fn new(coefficients: Vec<i64>) -> Self {
        IndexVector(coefficients)
    }

    pub fn unit(len: usize, position: usize, sign: i64) -> Self {
        let mut v = vec![0; len];
        v[position] = sign;
        IndexVector(v)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Add for &IndexVector {
    type Output = IndexVector;
    fn add(self, rhs: &IndexVector) -> IndexVector {
        IndexVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for IndexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Which computation routes to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    #[default]
    Both,
    Resolution,
    System,
}

/// Precomputed solver for the overdetermined system `G a = b`.
#[derive(Clone, Debug)]
pub struct SystemSolver<F> {
    coefficients: Matrix<F>,
    rows: Vec<usize>,
    inverse: Matrix<F>,
}

impl<F: IntegerLift> SystemSolver<F> {
    /// Solves `G a = b`, checking consistency on every row and integrality of `a`.
    pub fn solve(&self, rhs: &[i64], label: &dyn Fn() -> String) -> Result<IndexVector> {
        let b_sub: Vec<F> = self.rows.iter().map(|&i| F::from_int(rhs[i])).collect();
        let a = self.inverse.apply(&b_sub);
        let b: Vec<F> = rhs.iter().map(|&v| F::from_int(v)).collect();
        if self.coefficients.apply(&a) != b {
            return Err(Error::Invariant(format!("index system for {} is inconsistent", label())));
        }
        let ints = a
            .iter()
            .map(|v| v.as_i64())
            .collect::<Option<Vec<i64>>>()
            .ok_or_else(|| Error::Invariant(format!("index system for {} has a non-integer solution", label())))?;
        Ok(IndexVector(ints))
    }
}

/// Index computations for one tilting object.
#[derive(Debug)]
pub struct IndexEngine<'a> {
    table: &'a HomTable,
    tilting: TiltingObject,
    algebra: AlgebraPresentation,
    summand_ids: Vec<usize>,
    shifted_ids: Vec<usize>,
}

impl<'a> IndexEngine<'a> {
    pub fn new(tilting: &TiltingObject, table: &'a HomTable) -> Result<Self> {
        let algebra = build_algebra(tilting, table)?;
        let summand_ids = algebra.summand_ids().to_vec();
        let shifted_ids = summand_ids.iter().map(|&t| table.shift(t, 1)).collect();
        Ok(IndexEngine { table, tilting: tilting.clone(), algebra, summand_ids, shifted_ids })
    }

    pub fn table(&self) -> &HomTable {
        self.table
    }

    pub fn tilting(&self) -> &TiltingObject {
        &self.tilting
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    /// Table indices of the summands of `Σ^d T`.
    pub fn shifted_ids(&self) -> &[usize] {
        &self.shifted_ids
    }

    /// Position of `Σ^{-d} c` among the summands when `c ∈ Σ^d T`.
    pub fn shifted_summand(&self, c: usize) -> Option<usize> {
        self.shifted_ids.iter().position(|&s| s == c)
    }

    /// Index by the resolution route.
    pub fn index_of<F: Field>(&self, c: &IndObj) -> Result<IndexVector> {
        let ci = self.table.index_of(c)?;
        let r = self.algebra.rank();
        if let Some(pos) = self.shifted_summand(ci) {
            return Ok(IndexVector::unit(r, pos, self.table.params().sign()));
        }
        let resolution = minimal_resolution::<F>(c, &self.algebra, self.table)?;
        Ok(IndexVector(resolution.alternating_sum(r)))
    }

    /// `dim Hom_{C/[Σ^d T]}(c, x) + (-1)^d dim Hom^{[Σ^d T]}(c, Σ^d x)` for every object `x`.
    pub fn system_rhs(&self, c: usize) -> Vec<i64> {
        let sign = self.table.params().sign();
        (0..self.table.len())
            .map(|x| {
                let quotient = self.table.quotient(c, x, &self.shifted_ids).value();
                let ideal = self.table.ideal(c, self.table.shift(x, 1), &self.shifted_ids).value();
                quotient + sign * ideal
            })
            .collect()
    }

    /// `G[x][j] = dim Hom(t_j, x)` over all objects `x`.
    pub fn system_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.table.len())
            .map(|x| self.summand_ids.iter().map(|&t| self.table.hom(t, x).value()).collect())
            .collect()
    }

    pub fn system_solver<F: IntegerLift>(&self) -> Result<SystemSolver<F>> {
        let r = self.algebra.rank();
        let m = self.table.len();
        let flat: Vec<i64> = self.system_matrix().into_iter().flatten().collect();
        let coefficients = Matrix::<F>::from_i64(m, r, &flat);
        let rows = coefficients.transpose().rref().1;
        if rows.len() < r {
            return Err(Error::RankDeficient { tilting: self.tilting.to_string(), rank: rows.len(), expected: r });
        }
        let inverse = coefficients.select_rows(&rows).inverse().expect("independent rows form an invertible block");
        Ok(SystemSolver { coefficients, rows, inverse })
    }

    /// Index by the linear-system route.
    pub fn index_via_system<F: IntegerLift>(&self, c: &IndObj) -> Result<IndexVector> {
        let ci = self.table.index_of(c)?;
        self.system_solver::<F>()?.solve(&self.system_rhs(ci), &|| c.to_string())
    }

    /// Additive extension to direct sums of indecomposables.
    pub fn index_of_sum<F: Field>(&self, summands: &[IndObj]) -> Result<IndexVector> {
        let mut total = IndexVector(vec![0; self.algebra.rank()]);
        for c in summands {
            total = &total + &self.index_of::<F>(c)?;
        }
        Ok(total)
    }

    /// Indices of every indecomposable. With [`Route::Both`] the routes must agree.
    pub fn index_table<F: IntegerLift>(&self, route: Route) -> Result<IndexTable> {
        let solver = match route {
            Route::Resolution => None,
            _ => Some(self.system_solver::<F>()?),
        };
        let rows = self
            .table
            .objects()
            .par_iter()
            .enumerate()
            .map(|(ci, c)| {
                let resolution = match route {
                    Route::System => None,
                    _ => Some(self.index_of::<F>(c)?),
                };
                let system = match &solver {
                    Some(s) => Some(s.solve(&self.system_rhs(ci), &|| c.to_string())?),
                    None => None,
                };
                if let (Some(a), Some(b)) = (&resolution, &system) {
                    if a != b {
                        return Err(Error::Invariant(format!(
                            "index routes disagree for {c} w.r.t. {}: resolution {a}, system {b}",
                            self.tilting
                        )));
                    }
                }
                let index = resolution.or(system).expect("at least one route runs");
                Ok(IndexRow { object: c.clone(), index })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IndexTable { verified: route == Route::Both, rows })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexRow {
    pub object: IndObj,
    pub index: IndexVector,
}

/// Index of every indecomposable, in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexTable {
    /// True when both routes ran and agreed.
    pub verified: bool,
    pub rows: Vec<IndexRow>,
}

impl IndexTable {
    pub fn get(&self, c: &IndObj) -> Option<&IndexVector> {
        self.rows.iter().find(|r| &r.object == c).map(|r| &r.index)
    }

    /// All unordered pairs of distinct objects with equal index, in enumeration order.
    pub fn collisions(&self) -> Vec<(IndObj, IndObj)> {
        let mut groups: BTreeMap<&IndexVector, Vec<&IndObj>> = BTreeMap::new();
        for row in &self.rows {
            groups.entry(&row.index).or_default().push(&row.object);
        }
        let mut pairs: Vec<(IndObj, IndObj)> = groups
            .values()
            .flat_map(|objs| {
                objs.iter()
                    .enumerate()
                    .flat_map(move |(i, a)| objs[i + 1..].iter().map(move |b| ((*a).clone(), (*b).clone())))
            })
            .collect();
        pairs.sort();
        pairs
    }

    pub fn is_injective(&self) -> bool {
        self.collisions().is_empty()
    }
}

/// Resolution-route index of `c` with respect to `tilting`.
pub fn index_of<F: Field>(c: &IndObj, tilting: &TiltingObject, table: &HomTable) -> Result<IndexVector> {
    IndexEngine::new(tilting, table)?.index_of::<F>(c)
}

/// Linear-system-route index of `c` with respect to `tilting`.
pub fn index_via_system<F: IntegerLift>(c: &IndObj, tilting: &TiltingObject, table: &HomTable) -> Result<IndexVector> {
    IndexEngine::new(tilting, table)?.index_via_system::<F>(c)
}

/// Cross-validated index table for `tilting`.
pub fn index_table<F: IntegerLift>(tilting: &TiltingObject, table: &HomTable) -> Result<IndexTable> {
    IndexEngine::new(tilting, table)?.index_table::<F>(Route::Both)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic_model::{shift, ModelParams};
    use crate::tilting::validate_tilting;
    use crate::Rational;

    fn setup(n: usize, d: usize, summands: &[&[usize]]) -> (HomTable, TiltingObject) {
        let params = ModelParams::new(n, d).unwrap();
        let table = HomTable::new(params);
        let t: Vec<IndObj> = summands.iter().map(|v| IndObj::new(v.to_vec(), &params).unwrap()).collect();
        (table, validate_tilting(&t, &params).unwrap())
    }

    #[test]
    fn pentagon_indices() {
        let (table, t) = setup(2, 1, &[&[1, 3], &[1, 4]]);
        let engine = IndexEngine::new(&t, &table).unwrap();
        let c = IndObj::new(vec![2, 4], table.params()).unwrap();
        assert_eq!(engine.index_of::<Rational>(&c).unwrap(), IndexVector::new(vec![-1, 1]));
        assert_eq!(engine.index_via_system::<Rational>(&c).unwrap(), IndexVector::new(vec![-1, 1]));
        for (j, s) in t.summands().iter().enumerate() {
            assert_eq!(engine.index_of::<Rational>(s).unwrap(), IndexVector::unit(2, j, 1));
            assert_eq!(engine.index_via_system::<Rational>(s).unwrap(), IndexVector::unit(2, j, 1));
            let shifted = shift(s, 1, table.params());
            assert_eq!(engine.index_of::<Rational>(&shifted).unwrap(), IndexVector::unit(2, j, -1));
        }
        let full = engine.index_table::<Rational>(Route::Both).unwrap();
        assert!(full.verified);
        assert_eq!(full.rows.len(), 5);
        assert!(full.is_injective());
    }

    #[test]
    fn even_d_shift_collision() {
        let (table, t) = setup(2, 2, &[&[1, 3, 5], &[1, 3, 6], &[1, 4, 6]]);
        let engine = IndexEngine::new(&t, &table).unwrap();
        let u = IndObj::new(vec![1, 3, 5], table.params()).unwrap();
        let su = IndObj::new(vec![2, 4, 7], table.params()).unwrap();
        let unit = IndexVector::unit(3, 0, 1);
        assert_eq!(engine.index_of::<Rational>(&u).unwrap(), unit);
        assert_eq!(engine.index_of::<Rational>(&su).unwrap(), unit);
        assert_eq!(engine.index_via_system::<Rational>(&su).unwrap(), unit);
    }

    #[test]
    fn single_route_tables_are_unverified() {
        let (table, t) = setup(2, 1, &[&[1, 3], &[1, 4]]);
        let engine = IndexEngine::new(&t, &table).unwrap();
        let a = engine.index_table::<Rational>(Route::Resolution).unwrap();
        let b = engine.index_table::<Rational>(Route::System).unwrap();
        assert!(!a.verified && !b.verified);
        assert_eq!(a.rows, b.rows);
    }

    #[test]
    fn sums_are_additive() {
        let (table, t) = setup(2, 1, &[&[1, 3], &[1, 4]]);
        let engine = IndexEngine::new(&t, &table).unwrap();
        let objs: Vec<IndObj> = table.objects().to_vec();
        let total = engine.index_of_sum::<Rational>(&objs).unwrap();
        let expected = objs.iter().fold(IndexVector::new(vec![0, 0]), |acc, c| &acc + &engine.index_of::<Rational>(c).unwrap());
        assert_eq!(total, expected);
    }
}
