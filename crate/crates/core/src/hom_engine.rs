//! Hom spaces, factorization and composition in the cyclic model.
//!
//! Every hom space between indecomposables is `0` or one-dimensional, so a
//! hom space is described by a [`HomDim`] and each nonzero space carries one
//! fixed basis morphism. Composition of basis morphisms then has structure
//! constants in `{0, 1}`: `g ∘ f` is the basis morphism `X -> Z` when that
//! space is nonzero and the morphism factors through `Y`, and zero otherwise.
//!
//! Factoring through an additive subcategory `add S` reduces to factoring
//! through a single object of `S`. If a nonzero `h: X -> Y` equals
//! `Σ_k b_k ∘ a_k` with each summand passing through some `s_k ∈ S`, at least
//! one composite `b_k ∘ a_k` is nonzero, and it is a scalar multiple of `h`
//! because `Hom(X, Y)` is one-dimensional.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclic_model::{chain_holds, enumerate_indecomposables, intertwines, offset, shift, IndObj, ModelParams};
use crate::error::{Error, Result};

/// Dimension of a hom space between indecomposables: 0 or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomDim(u8);

impl HomDim {
    pub const ZERO: HomDim = HomDim(0);
    pub const ONE: HomDim = HomDim(1);

    pub fn from_bool(nonzero: bool) -> Self {
        HomDim(nonzero as u8)
    }

    pub fn value(self) -> i64 {
        self.0 as i64
    }

    pub fn is_nonzero(self) -> bool {
        self.0 != 0
    }
}

/// `Hom(X, Y) = K` iff `X` and `Σ^{-d} Y` intertwine.
pub fn hom_dim(x: &IndObj, y: &IndObj, params: &ModelParams) -> HomDim {
    HomDim::from_bool(intertwines(x, &shift(y, -1, params), params))
}

/// Labellings `(rx, ry)` of `x` and `y` (as rotation offsets) satisfying
/// `x_0 <= y_0 <= x_1^{--} < x_1 <= y_1 <= ... < x_d <= y_d <= x_0^{--}`.
fn hom_labellings(x: &IndObj, y: &IndObj, params: &ModelParams) -> Vec<(usize, usize)> {
    let len = params.cycle_len();
    let k = params.d() + 1;
    let twice_back = |v: usize| (v + len - 3) % len + 1;
    let mut found = Vec::new();
    let mut items = Vec::with_capacity(3 * k);
    let mut strict = Vec::with_capacity(3 * k);
    for rx in 0..k {
        for ry in 0..k {
            items.clear();
            strict.clear();
            for i in 0..k {
                if i > 0 {
                    strict.push(true);
                }
                items.push(x.labelled(rx, i));
                items.push(y.labelled(ry, i));
                items.push(twice_back(x.labelled(rx, i + 1)));
                strict.push(false);
                strict.push(false);
            }
            if chain_holds(len, &items, &strict) {
                found.push((rx, ry));
            }
        }
    }
    found
}

/// The same criterion as [`hom_dim`], evaluated through the explicit labelling chain.
pub fn hom_dim_by_chain(x: &IndObj, y: &IndObj, params: &ModelParams) -> HomDim {
    HomDim::from_bool(!hom_labellings(x, y, params).is_empty())
}

fn factors_unchecked(x: &IndObj, y: &IndObj, z: &IndObj, params: &ModelParams) -> bool {
    let len = params.cycle_len();
    let k = params.d() + 1;
    hom_labellings(x, y, params).into_iter().any(|(rx, ry)| {
        (0..k).any(|rz| {
            (0..k).all(|i| {
                let (xi, yi, zi) = (x.labelled(rx, i), y.labelled(ry, i), z.labelled(rz, i));
                offset(xi, zi, len) <= offset(xi, yi, len)
            })
        })
    })
}

/// Whether the nonzero morphism `x -> y` factors through `z`.
///
/// Holds iff some labelling of `z` has each `z_i` on the clockwise arc from
/// `x_i` to `y_i`, for labellings of `x`, `y` satisfying the hom chain.
pub fn factors_through(x: &IndObj, y: &IndObj, z: &IndObj, params: &ModelParams) -> Result<bool> {
    if !hom_dim(x, y, params).is_nonzero() {
        return Err(Error::Contract(format!("Hom({x}, {y}) = 0, there is no nonzero morphism to factor")));
    }
    Ok(factors_unchecked(x, y, z, params))
}

/// Dimension of the subspace of `Hom(x, y)` factoring through `add(ideal)`.
pub fn ideal_hom_dim(x: &IndObj, y: &IndObj, ideal: &[IndObj], params: &ModelParams) -> HomDim {
    HomDim::from_bool(hom_dim(x, y, params).is_nonzero() && ideal.iter().any(|s| factors_unchecked(x, y, s, params)))
}

/// Dimension of `Hom(x, y)` in the quotient by the ideal `[add(ideal)]`.
pub fn quotient_hom_dim(x: &IndObj, y: &IndObj, ideal: &[IndObj], params: &ModelParams) -> HomDim {
    HomDim(hom_dim(x, y, params).0 - ideal_hom_dim(x, y, ideal, params).0)
}

/// Structure constant of `g ∘ f` for the basis morphisms `f: x -> y`, `g: y -> z`.
pub fn compose_nonzero(x: &IndObj, y: &IndObj, z: &IndObj, params: &ModelParams) -> Result<HomDim> {
    if !hom_dim(x, y, params).is_nonzero() || !hom_dim(y, z, params).is_nonzero() {
        return Err(Error::Contract(format!("composition {x} -> {y} -> {z} needs both hom spaces nonzero")));
    }
    Ok(HomDim::from_bool(hom_dim(x, z, params).is_nonzero() && factors_unchecked(x, z, y, params)))
}

/// A hom-space query, optionally restricted to an ideal or taken modulo one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomQuery {
    pub source: IndObj,
    pub target: IndObj,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulo: Option<Vec<IndObj>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub through: Option<Vec<IndObj>>,
}

impl HomQuery {
    pub fn new(source: IndObj, target: IndObj) -> Self {
        HomQuery { source, target, modulo: None, through: None }
    }

    pub fn modulo(mut self, ideal: Vec<IndObj>) -> Self {
        self.modulo = Some(ideal);
        self
    }

    pub fn through(mut self, ideal: Vec<IndObj>) -> Self {
        self.through = Some(ideal);
        self
    }

    pub fn evaluate(&self, params: &ModelParams) -> Result<HomDim> {
        match (&self.modulo, &self.through) {
            (Some(_), Some(_)) => Err(Error::Contract("a hom query takes either modulo or through, not both".into())),
            (Some(s), None) => Ok(quotient_hom_dim(&self.source, &self.target, s, params)),
            (None, Some(s)) => Ok(ideal_hom_dim(&self.source, &self.target, s, params)),
            (None, None) => Ok(hom_dim(&self.source, &self.target, params)),
        }
    }
}

/// Eagerly computed hom and factorization tables for one model.
///
/// Objects are addressed by their position in [`enumerate_indecomposables`]
/// order. Tables are immutable after construction and can be shared across
/// threads.
#[derive(Clone, Debug)]
pub struct HomTable {
    params: ModelParams,
    objects: Vec<IndObj>,
    index: HashMap<IndObj, usize>,
    hom: FixedBitSet,
    // factors[x * m + y] holds the z through which the basis map x -> y factors.
    factors: Vec<FixedBitSet>,
    shifted: Vec<usize>,
    unshifted: Vec<usize>,
}

impl HomTable {
    pub fn new(params: ModelParams) -> Self {
        let objects = enumerate_indecomposables(&params);
        let m = objects.len();
        let index: HashMap<IndObj, usize> = objects.iter().cloned().enumerate().map(|(i, o)| (o, i)).collect();
        let rows: Vec<Vec<bool>> = objects
            .par_iter()
            .map(|x| objects.iter().map(|y| hom_dim(x, y, &params).is_nonzero()).collect())
            .collect();
        let mut hom = FixedBitSet::with_capacity(m * m);
        for (i, row) in rows.iter().enumerate() {
            for (j, &nonzero) in row.iter().enumerate() {
                hom.set(i * m + j, nonzero);
            }
        }
        let factors: Vec<FixedBitSet> = (0..m * m)
            .into_par_iter()
            .map(|xy| {
                let (i, j) = (xy / m, xy % m);
                let mut through = FixedBitSet::with_capacity(m);
                if rows[i][j] {
                    for (k, z) in objects.iter().enumerate() {
                        if factors_unchecked(&objects[i], &objects[j], z, &params) {
                            through.insert(k);
                        }
                    }
                }
                through
            })
            .collect();
        let shifted = objects.iter().map(|o| index[&shift(o, 1, &params)]).collect();
        let unshifted = objects.iter().map(|o| index[&shift(o, -1, &params)]).collect();
        HomTable { params, objects, index, hom, factors, shifted, unshifted }
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn objects(&self) -> &[IndObj] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn object(&self, i: usize) -> &IndObj {
        &self.objects[i]
    }

    pub fn index_of(&self, x: &IndObj) -> Result<usize> {
        self.index.get(x).copied().ok_or_else(|| Error::UnknownObject(x.clone()))
    }

    /// Index of `Σ^{d·steps}` applied to object `i`.
    pub fn shift(&self, i: usize, steps: i64) -> usize {
        let mut i = i;
        let map = if steps >= 0 { &self.shifted } else { &self.unshifted };
        for _ in 0..steps.unsigned_abs() {
            i = map[i];
        }
        i
    }

    pub fn hom(&self, x: usize, y: usize) -> HomDim {
        HomDim::from_bool(self.hom.contains(x * self.len() + y))
    }

    /// Whether the basis map `x -> y` factors through `z`; false when `Hom(x, y) = 0`.
    pub fn factors(&self, x: usize, y: usize, z: usize) -> bool {
        self.factors[x * self.len() + y].contains(z)
    }

    pub fn compose(&self, x: usize, y: usize, z: usize) -> Result<HomDim> {
        if !self.hom(x, y).is_nonzero() || !self.hom(y, z).is_nonzero() {
            return Err(Error::Contract(format!(
                "composition {} -> {} -> {} needs both hom spaces nonzero",
                self.objects[x], self.objects[y], self.objects[z]
            )));
        }
        Ok(HomDim::from_bool(self.factors(x, z, y)))
    }

    pub fn ideal(&self, x: usize, y: usize, ideal: &[usize]) -> HomDim {
        HomDim::from_bool(ideal.iter().any(|&s| self.factors(x, y, s)))
    }

    pub fn quotient(&self, x: usize, y: usize, ideal: &[usize]) -> HomDim {
        HomDim(self.hom(x, y).0 - self.ideal(x, y, ideal).0)
    }
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
    fn hom_examples() {
        let p21 = p(2, 1);
        assert_eq!(hom_dim(&obj(&[1, 3], &p21), &obj(&[1, 4], &p21), &p21), HomDim::ONE);
        assert_eq!(hom_dim(&obj(&[1, 3], &p21), &obj(&[2, 4], &p21), &p21), HomDim::ZERO);
        let p22 = p(2, 2);
        let u = obj(&[1, 3, 5], &p22);
        assert_eq!(hom_dim(&u, &u, &p22), HomDim::ONE);
        assert_eq!(hom_dim_by_chain(&u, &u, &p22), HomDim::ONE);
    }

    #[test]
    fn factorization_examples() {
        let params = p(2, 1);
        let (x, y) = (obj(&[1, 3], &params), obj(&[1, 4], &params));
        assert!(factors_through(&x, &y, &x, &params).unwrap());
        assert!(factors_through(&x, &y, &y, &params).unwrap());
        assert!(!factors_through(&x, &y, &obj(&[2, 5], &params), &params).unwrap());
        let zero_map = factors_through(&x, &obj(&[2, 4], &params), &x, &params);
        assert!(matches!(zero_map, Err(Error::Contract(_))));
    }

    #[test]
    fn ideal_and_quotient_examples() {
        let params = p(2, 1);
        let o = |v: &[usize]| obj(v, &params);
        assert_eq!(ideal_hom_dim(&o(&[1, 3]), &o(&[1, 4]), &[o(&[1, 3])], &params), HomDim::ONE);
        assert_eq!(ideal_hom_dim(&o(&[1, 3]), &o(&[1, 4]), &[], &params), HomDim::ZERO);
        assert_eq!(ideal_hom_dim(&o(&[2, 4]), &o(&[2, 5]), &[o(&[1, 3])], &params), HomDim::ZERO);
        let shifted_t = [o(&[2, 5]), o(&[3, 5])];
        assert_eq!(quotient_hom_dim(&o(&[2, 4]), &o(&[2, 4]), &shifted_t, &params), HomDim::ONE);

        let p22 = p(2, 2);
        let t: Vec<IndObj> = [[1, 3, 5], [1, 3, 6], [1, 4, 6]].iter().map(|v| shift(&obj(v, &p22), 1, &p22)).collect();
        let (x, y) = (obj(&[1, 3, 5], &p22), obj(&[2, 4, 7], &p22));
        assert_eq!(quotient_hom_dim(&x, &y, &t, &p22), HomDim::ZERO);
        // Hom(X, Σ^d X) always vanishes, so the quotient is zero before any factoring.
        assert_eq!(hom_dim(&x, &y, &p22), HomDim::ZERO);
    }

    #[test]
    fn composition_examples() {
        let params = p(2, 1);
        let o = |v: &[usize]| obj(v, &params);
        // Hom({1,3},{2,4}) = 0 forces a zero composite.
        assert_eq!(hom_dim(&o(&[1, 3]), &o(&[2, 4]), &params), HomDim::ZERO);
        assert_eq!(compose_nonzero(&o(&[1, 3]), &o(&[1, 4]), &o(&[2, 4]), &params).unwrap(), HomDim::ZERO);
        // Identity law.
        assert_eq!(compose_nonzero(&o(&[1, 3]), &o(&[1, 3]), &o(&[1, 4]), &params).unwrap(), HomDim::ONE);
        assert!(compose_nonzero(&o(&[1, 3]), &o(&[2, 4]), &o(&[2, 4]), &params).is_err());
    }

    #[test]
    fn query_modes_are_exclusive() {
        let params = p(2, 1);
        let o = |v: &[usize]| obj(v, &params);
        let q = HomQuery::new(o(&[1, 3]), o(&[1, 4]));
        assert_eq!(q.evaluate(&params).unwrap(), HomDim::ONE);
        assert_eq!(q.clone().through(vec![o(&[1, 3])]).evaluate(&params).unwrap(), HomDim::ONE);
        assert_eq!(q.clone().modulo(vec![o(&[1, 3])]).evaluate(&params).unwrap(), HomDim::ZERO);
        assert!(q.modulo(vec![]).through(vec![]).evaluate(&params).is_err());
    }

    #[test]
    fn table_matches_free_functions() {
        let params = p(3, 2);
        let table = HomTable::new(params);
        let objs = table.objects().to_vec();
        for (i, x) in objs.iter().enumerate() {
            assert_eq!(table.object(table.shift(i, 1)), &shift(x, 1, &params));
            assert_eq!(table.shift(table.shift(i, 3), -3), i);
            for (j, y) in objs.iter().enumerate() {
                assert_eq!(table.hom(i, j), hom_dim(x, y, &params));
                if table.hom(i, j).is_nonzero() {
                    for (k, z) in objs.iter().enumerate() {
                        assert_eq!(table.factors(i, j, k), factors_through(x, y, z, &params).unwrap());
                    }
                }
            }
        }
    }
}
