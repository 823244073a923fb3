//! The database of spherical pair cases: weight monoids, spherical roots,
//! based root data, the projection maps onto symmetric factor cases, the
//! product-support oracle and the tensor/order predicate.
//!
//! Everything a case needs is materialized at instantiation time and
//! immutable afterwards: the ambient root system, the generators of the
//! weight monoid, the normalized spherical roots with their restricted
//! coroots, the recognized Cartan type of the attached based root datum, a
//! representation context for the reductive group it defines, and the
//! oracle tree for the spherical function side.

mod cases;
mod db;

pub use cases::{case_ids, default_params, instantiate_case, DictOrientation};
pub use db::validate_database;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use crate::datum::{BasedRootDatum, RecognizedComponent};
use crate::error::{Error, Result};
use crate::jack::JackRing;
use crate::lattice::{self, Cokernel};
use crate::linalg;
use crate::param::Rat;
use crate::partition::Partition;
use crate::repcalc::RepCtx;
use crate::rootsys::{format_types, CartanType, Root, RootSystem, Weight};

/// Product-support oracle for the spherical function side, evaluated on
/// weight monoid coordinates. Linear maps compose the oracle of a case out
/// of the oracles of its symmetric factors.
#[derive(Debug, Clone)]
pub enum Oracle {
    /// Symmetric case with restricted root system of type A: membership in
    /// the support of a specialized Jack product, through the column
    /// dictionary.
    TypeA {
        k: Rat,
        nvars: usize,
        heights: Vec<u32>,
    },
    /// Lattice of characters of a torus: exact additivity.
    Torus,
    /// Conjunction of factor oracles after integer linear maps.
    Product(Vec<(Vec<Vec<i64>>, Oracle)>),
    /// No oracle known; only the tensor/order side can be evaluated.
    Unavailable(String),
}

impl Oracle {
    pub fn is_available(&self) -> bool {
        match self {
            Oracle::Unavailable(_) => false,
            Oracle::Product(fs) => fs.iter().all(|(_, o)| o.is_available()),
            _ => true,
        }
    }
}

/// One factor of the isogeny onto symmetric cases: a target case and the
/// integer matrix of the projection on monoid generator coordinates.
#[derive(Debug, Clone)]
pub struct IsogenyFactor {
    pub case: Arc<SphericalPairCase>,
    pub matrix: Vec<Vec<i64>>,
}

#[derive(Debug, Clone)]
pub struct IsogenyData {
    pub hat: Vec<IsogenyFactor>,
    pub bar: Vec<IsogenyFactor>,
}

/// One spherical pair at fixed parameters.
pub struct SphericalPairCase {
    pub id: String,
    pub params: BTreeMap<String, i64>,
    pub label: String,
    /// Ambient root system (rank zero for torus factor cases).
    pub ambient: Arc<RootSystem>,
    /// Fundamental spherical weights in ambient coordinates; the lattice
    /// basis of the case.
    pub gens: Vec<Weight>,
    /// Coordinates indexing the free monoid part; `false` marks unit
    /// directions where the monoid is the whole lattice.
    pub free_coords: Vec<bool>,
    /// Spherical roots in ambient simple-root coordinates.
    pub delta_n: Vec<Root>,
    /// Indices of the halved spherical roots.
    pub dagger: Vec<usize>,
    /// Normalized spherical roots.
    pub delta_x: Vec<Root>,
    /// Normalized spherical roots in generator coordinates.
    pub base_gen: Vec<Vec<i64>>,
    /// Spherical roots (unnormalized) in generator coordinates.
    pub delta_n_gen: Vec<Vec<i64>>,
    /// Restricted coroots as covectors on the generator basis.
    pub coroots_gen: Vec<Vec<i64>>,
    /// Restricted-root multiplicity, for the symmetric type A cases.
    pub mult_m: Option<i64>,
    /// Jack parameter `2/m` where defined.
    pub jack_k: Option<Rat>,
    pub oracle: Oracle,
    pub isogeny: Option<IsogenyData>,
    pub datum: BasedRootDatum,
    pub recognized: Vec<RecognizedComponent>,
    /// Calculator for the reductive group of the datum.
    rx_ctx: RepCtx,
}

impl std::fmt::Debug for SphericalPairCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SphericalPairCase({} {:?})", self.id, self.params)
    }
}

impl SphericalPairCase {
    /// Number of monoid generators; the rank of the case lattice.
    pub fn lattice_rank(&self) -> usize {
        self.gens.len()
    }

    pub fn rx_types(&self) -> Vec<CartanType> {
        self.recognized.iter().map(|c| c.ctype).collect()
    }

    pub fn rx_type_string(&self) -> String {
        format_types(&self.rx_types())
    }

    /// Ambient weight of a monoid element given in generator coordinates.
    pub fn weight_fw(&self, coords: &[i64]) -> Result<Weight> {
        self.check_coords(coords)?;
        let rank = self.ambient.rank();
        let mut w = Weight::zero(rank);
        for (t, &c) in coords.iter().enumerate() {
            if c != 0 {
                w = w.add(&self.gens[t].scale(c));
            }
        }
        Ok(w)
    }

    fn check_coords(&self, coords: &[i64]) -> Result<()> {
        if coords.len() != self.lattice_rank() {
            return Err(Error::OutsideMonoid(format!(
                "expected {} coordinates, got {}",
                self.lattice_rank(),
                coords.len()
            )));
        }
        Ok(())
    }

    /// Membership in the weight monoid: nonnegative on free coordinates.
    pub fn in_monoid(&self, coords: &[i64]) -> Result<bool> {
        self.check_coords(coords)?;
        Ok(coords
            .iter()
            .zip(&self.free_coords)
            .all(|(&c, &free)| !free || c >= 0))
    }

    fn require_monoid(&self, coords: &[i64]) -> Result<()> {
        if !self.in_monoid(coords)? {
            return Err(Error::OutsideMonoid(format!("{:?}", coords)));
        }
        Ok(())
    }

    /// Images of a weight under the monoid projections onto the overgroup
    /// factor cases, as (case id, generator coordinates) pairs.
    pub fn phi_hat(&self, coords: &[i64]) -> Result<Vec<(String, Vec<i64>)>> {
        self.require_monoid(coords)?;
        let iso = self
            .isogeny
            .as_ref()
            .ok_or_else(|| Error::Precondition(format!("{} has no isogeny data", self.id)))?;
        Ok(iso
            .hat
            .iter()
            .map(|f| (f.case.id.clone(), apply_matrix(&f.matrix, coords)))
            .collect())
    }

    /// Images under the projections onto the subgroup factor cases.
    pub fn phi_bar(&self, coords: &[i64]) -> Result<Vec<(String, Vec<i64>)>> {
        self.require_monoid(coords)?;
        let iso = self
            .isogeny
            .as_ref()
            .ok_or_else(|| Error::Precondition(format!("{} has no isogeny data", self.id)))?;
        Ok(iso
            .bar
            .iter()
            .map(|f| (f.case.id.clone(), apply_matrix(&f.matrix, coords)))
            .collect())
    }

    /// Weight of the recognized reductive group attached to a lattice
    /// element: coroot pairings arranged in Bourbaki order per component.
    pub fn rx_weight(&self, coords: &[i64]) -> Weight {
        let mut out = Vec::new();
        for comp in &self.recognized {
            for &node in &comp.nodes {
                out.push(self.datum.pairing(node, coords));
            }
        }
        Weight(out)
    }

    /// Multiplicity of `V_X(nu)` in `V_X(lam) (x) V_X(mu)` for the group of
    /// the based root datum. The central characters must match exactly; the
    /// semisimple part is decided by the recognized root system.
    pub fn rx_tensor_multiplicity(
        &self,
        lam: &[i64],
        mu: &[i64],
        nu: &[i64],
    ) -> Result<i64> {
        self.require_monoid(lam)?;
        self.require_monoid(mu)?;
        self.require_monoid(nu)?;
        let diff: Vec<i64> = (0..self.lattice_rank())
            .map(|t| lam[t] + mu[t] - nu[t])
            .collect();
        // central torus: the difference must lie in the span of the base
        if linalg::coordinates_in_span(&self.base_gen, &diff).is_none() {
            return Ok(0);
        }
        let wl = self.rx_weight(lam);
        let wm = self.rx_weight(mu);
        let wn = self.rx_weight(nu);
        if !wl.is_dominant() || !wm.is_dominant() || !wn.is_dominant() {
            return Err(Error::NonDominant(format!(
                "monoid element pairs negatively with a spherical coroot in {}",
                self.id
            )));
        }
        self.rx_ctx.tensor_multiplicity(&wl, &wm, &wn)
    }

    /// The order condition: `lam + mu - nu` is a nonnegative integer
    /// combination of the spherical roots.
    pub fn order_leq_x(&self, lam: &[i64], mu: &[i64], nu: &[i64]) -> Result<bool> {
        self.check_coords(lam)?;
        self.check_coords(mu)?;
        self.check_coords(nu)?;
        let diff: Vec<i64> = (0..self.lattice_rank())
            .map(|t| lam[t] + mu[t] - nu[t])
            .collect();
        Ok(linalg::nonneg_integer_coordinates(&self.delta_n_gen, &diff).is_some())
    }

    /// Dictionary degree of a monoid element: the largest Jack degree the
    /// oracle would touch, and the grading used for scan bounds.
    pub fn degree(&self, coords: &[i64]) -> Result<i64> {
        self.check_coords(coords)?;
        Ok(oracle_degree(&self.oracle, coords).unwrap_or_else(|| {
            coords.iter().map(|c| c.abs()).sum()
        }))
    }

    /// All monoid elements of dictionary degree at most `bound`, in a fixed
    /// deterministic order.
    pub fn monoid_elements(&self, bound: i64) -> Result<Vec<Vec<i64>>> {
        let rank = self.lattice_rank();
        let mut per_coord: Vec<(i64, i64)> = Vec::with_capacity(rank);
        for t in 0..rank {
            let mut hi = 0i64;
            loop {
                let mut probe = vec![0i64; rank];
                probe[t] = hi + 1;
                if self.degree(&probe)? > bound {
                    break;
                }
                hi += 1;
            }
            let lo = if self.free_coords[t] {
                0
            } else {
                let mut lo = 0i64;
                loop {
                    let mut probe = vec![0i64; rank];
                    probe[t] = lo - 1;
                    if self.degree(&probe)? > bound {
                        break;
                    }
                    lo -= 1;
                }
                lo
            };
            per_coord.push((lo, hi));
        }
        let mut out = Vec::new();
        let mut coords: Vec<i64> = per_coord.iter().map(|&(lo, _)| lo).collect();
        loop {
            if self.degree(&coords)? <= bound {
                out.push(coords.clone());
            }
            let mut pos = 0;
            loop {
                if pos == rank {
                    break;
                }
                coords[pos] += 1;
                if coords[pos] <= per_coord[pos].1 {
                    break;
                }
                coords[pos] = per_coord[pos].0;
                pos += 1;
            }
            if pos == rank {
                break;
            }
        }
        out.sort();
        Ok(out)
    }
}

fn apply_matrix(m: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

fn oracle_degree(oracle: &Oracle, coords: &[i64]) -> Option<i64> {
    match oracle {
        Oracle::TypeA { heights, .. } => Some(
            coords
                .iter()
                .zip(heights)
                .map(|(&c, &h)| c.abs() * h as i64)
                .sum(),
        ),
        Oracle::Torus => Some(coords.iter().map(|c| c.abs()).sum()),
        Oracle::Product(factors) => {
            let mut best: Option<i64> = None;
            for (m, sub) in factors {
                let image = apply_matrix(m, coords);
                let d = oracle_degree(sub, &image)?;
                best = Some(best.map_or(d, |b: i64| b.max(d)));
            }
            best
        }
        Oracle::Unavailable(_) => None,
    }
}

/// The column dictionary: generator coordinates to a partition with
/// `c_t` columns of height `heights[t]`.
pub fn dictionary_partition(heights: &[u32], coords: &[i64]) -> Result<Partition> {
    let mut columns: Vec<u32> = Vec::new();
    for (t, &c) in coords.iter().enumerate() {
        if c < 0 {
            return Err(Error::OutsideMonoid(format!(
                "negative coordinate {} in dictionary image",
                c
            )));
        }
        for _ in 0..c {
            columns.push(heights[t]);
        }
    }
    Ok(Partition::from_unsorted(columns).conjugate())
}

/// Left hand side of the decomposition rule: does the spherical function
/// product contain the given component? Evaluated through the case's
/// oracle tree.
pub fn jack_oracle_lhs(
    ring: &JackRing,
    case: &SphericalPairCase,
    lam: &[i64],
    mu: &[i64],
    nu: &[i64],
) -> Result<bool> {
    case.require_monoid(lam)?;
    case.require_monoid(mu)?;
    case.require_monoid(nu)?;
    oracle_eval(ring, &case.oracle, &case.id, lam, mu, nu)
}

fn oracle_eval(
    ring: &JackRing,
    oracle: &Oracle,
    case_id: &str,
    lam: &[i64],
    mu: &[i64],
    nu: &[i64],
) -> Result<bool> {
    match oracle {
        Oracle::TypeA { k, nvars, heights } => {
            let pl = dictionary_partition(heights, lam)?;
            let pm = dictionary_partition(heights, mu)?;
            let pn = dictionary_partition(heights, nu)?;
            // the support consists of classes modulo full columns, so the
            // sizes must agree modulo the number of variables
            let total = pl.size() + pm.size();
            if total < pn.size() || (total - pn.size()) as usize % nvars != 0 {
                return Ok(false);
            }
            let support = ring.product_support_at(&pl, &pm, k, *nvars)?;
            Ok(support.contains(&pn))
        }
        Oracle::Torus => Ok((0..lam.len()).all(|t| lam[t] + mu[t] == nu[t])),
        Oracle::Product(factors) => {
            for (m, sub) in factors {
                let il = apply_matrix(m, lam);
                let im = apply_matrix(m, mu);
                let inu = apply_matrix(m, nu);
                if !oracle_eval(ring, sub, case_id, &il, &im, &inu)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }
        Oracle::Unavailable(reason) => Err(Error::OracleUnavailable(format!(
            "{}: {}",
            case_id, reason
        ))),
    }
}

/// Right hand side of the decomposition rule: the tensor condition on the
/// group of the based root datum together with the order condition.
pub fn conjecture_rhs(
    case: &SphericalPairCase,
    lam: &[i64],
    mu: &[i64],
    nu: &[i64],
) -> Result<(bool, bool)> {
    let mult = case.rx_tensor_multiplicity(lam, mu, nu)?;
    let order = case.order_leq_x(lam, mu, nu)?;
    Ok((mult > 0, order))
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct IsogenyReport {
    pub case_id: String,
    pub params: BTreeMap<String, i64>,
    pub targets: Vec<String>,
    pub injective: bool,
    pub cokernel_index: Option<BigInt>,
    pub base_bijection: bool,
    pub coroot_compatible: bool,
    pub pass: bool,
    pub witnesses: Vec<String>,
}

/// Verify that the stacked projection matrices define an isogeny of based
/// root data: injective with finite cokernel, base maps bijectively to the
/// disjoint union of the factor bases, and coroots pull back to coroots.
pub fn verify_isogeny(case: &SphericalPairCase) -> Result<IsogenyReport> {
    let iso = case
        .isogeny
        .as_ref()
        .ok_or_else(|| Error::Precondition(format!("{} has no isogeny data", case.id)))?;
    let factors: Vec<&IsogenyFactor> = iso.hat.iter().chain(iso.bar.iter()).collect();
    let mut witnesses = Vec::new();

    // stacked lattice map on generator coordinates
    let mut stacked: Vec<Vec<i64>> = Vec::new();
    for f in &factors {
        for row in &f.matrix {
            stacked.push(row.clone());
        }
    }
    let diag = lattice::lattice_map_diagnostics(&lattice::imat_from_i64(&stacked));
    let injective = diag.injective;
    let cokernel_index = match &diag.cokernel {
        Cokernel::Finite(n) => Some(n.clone()),
        Cokernel::Infinite => None,
    };
    if !injective {
        witnesses.push("lattice map is not injective".to_string());
    }
    if cokernel_index.is_none() {
        witnesses.push("cokernel is infinite".to_string());
    }

    // the base must map bijectively onto the union of the factor bases
    let mut base_bijection = true;
    let total_target_base: usize = factors.iter().map(|f| f.case.base_gen.len()).sum();
    if total_target_base != case.base_gen.len() {
        base_bijection = false;
        witnesses.push(format!(
            "base sizes differ: {} vs {}",
            case.base_gen.len(),
            total_target_base
        ));
    }
    let mut hits: Vec<Vec<bool>> = factors
        .iter()
        .map(|f| vec![false; f.case.base_gen.len()])
        .collect();
    // matched[i] = (factor index, target base index) for sigma_i
    let mut matched: Vec<Option<(usize, usize)>> = vec![None; case.base_gen.len()];
    for (si, sigma) in case.base_gen.iter().enumerate() {
        let mut found: Option<(usize, usize)> = None;
        let mut clean = true;
        for (fi, f) in factors.iter().enumerate() {
            let image = apply_matrix(&f.matrix, sigma);
            if image.iter().all(|&c| c == 0) {
                continue;
            }
            match f.case.base_gen.iter().position(|b| *b == image) {
                Some(ti) if found.is_none() => found = Some((fi, ti)),
                _ => {
                    clean = false;
                }
            }
        }
        match found {
            Some((fi, ti)) if clean && !hits[fi][ti] => {
                hits[fi][ti] = true;
                matched[si] = Some((fi, ti));
            }
            _ => {
                base_bijection = false;
                witnesses.push(format!(
                    "spherical root {} does not map to exactly one factor base element",
                    si
                ));
            }
        }
    }
    if base_bijection && hits.iter().any(|h| h.iter().any(|&x| !x)) {
        base_bijection = false;
        witnesses.push("some factor base element is not hit".to_string());
    }

    // coroot compatibility: the pullback of the matched coroot equals the
    // source coroot
    let mut coroot_compatible = base_bijection;
    if base_bijection {
        for (si, m) in matched.iter().enumerate() {
            let (fi, ti) = m.expect("matched above");
            let f = factors[fi];
            let target_cov = &f.case.coroots_gen[ti];
            let pullback: Vec<i64> = (0..case.lattice_rank())
                .map(|col| {
                    (0..f.matrix.len())
                        .map(|row| target_cov[row] * f.matrix[row][col])
                        .sum()
                })
                .collect();
            if pullback != case.coroots_gen[si] {
                coroot_compatible = false;
                witnesses.push(format!(
                    "coroot of spherical root {} does not pull back: {:?} vs {:?}",
                    si, pullback, case.coroots_gen[si]
                ));
            }
        }
    }

    let pass = injective && cokernel_index.is_some() && base_bijection && coroot_compatible;
    Ok(IsogenyReport {
        case_id: case.id.clone(),
        params: case.params.clone(),
        targets: factors.iter().map(|f| f.case.id.clone()).collect(),
        injective,
        cokernel_index,
        base_bijection,
        coroot_compatible,
        pass,
        witnesses,
    })
}

#[cfg(test)]
mod tests;
