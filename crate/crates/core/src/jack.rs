//! Jack symmetric functions in the J-normalization, their norms, structure
//! constants, the Pieri support and rational specializations.
//!
//! `J_lambda` is computed from its defining properties: it is triangular over
//! the monomial basis with respect to dominance, orthogonal under the
//! deformed scalar product, and has `m_{(1^n)}` coefficient `n!`. The
//! triangular expansion is obtained by solving the eigenvector recurrence of
//! the Sekiguchi-Debiard operator degree by degree; orthogonality and the
//! hook norm formula then serve as independent cross-checks.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::param::{ParamPoly, ParamRat, Rat};
use crate::partition::{horizontal_strips, partitions_of, Partition};
use crate::symfunc::{Basis, SymExpr, SymRing};

/// Monomial expansion of one Jack symmetric function.
///
/// Invariants: support only on partitions dominated by `partition`, every
/// coefficient a polynomial in `k`, and the `m_{(1^n)}` coefficient equal to
/// `n!`.
#[derive(Debug, Clone)]
pub struct JackExpansion {
    pub partition: Partition,
    pub monomial_coeffs: BTreeMap<Partition, ParamPoly>,
}

impl JackExpansion {
    pub fn coeff(&self, mu: &Partition) -> ParamPoly {
        self.monomial_coeffs
            .get(mu)
            .cloned()
            .unwrap_or_else(ParamPoly::zero)
    }

    pub fn as_sym_expr(&self) -> SymExpr {
        let terms = self
            .monomial_coeffs
            .iter()
            .map(|(p, c)| (p.clone(), ParamRat::from_poly(c.clone())))
            .collect();
        SymExpr::from_terms(Basis::Monomial, self.partition.size(), terms)
            .expect("expansion is homogeneous")
    }
}

type GTable = BTreeMap<Partition, ParamPoly>;

/// Context for Jack computations: wraps a [`SymRing`] and memoizes Jack
/// expansions, their power-sum forms and structure constant tables. All
/// caches are read-mostly; concurrent readers never block after the first
/// computation of an entry.
pub struct JackRing {
    sym: SymRing,
    expansions: RwLock<HashMap<Partition, Arc<JackExpansion>>>,
    p_forms: RwLock<HashMap<Partition, Arc<SymExpr>>>,
    g_tables: RwLock<HashMap<(Partition, Partition), Arc<GTable>>>,
}

impl Default for JackRing {
    fn default() -> Self {
        JackRing::new(SymRing::DEFAULT_CAP)
    }
}

impl JackRing {
    pub fn new(cap: u32) -> Self {
        JackRing {
            sym: SymRing::new(cap),
            expansions: RwLock::new(HashMap::new()),
            p_forms: RwLock::new(HashMap::new()),
            g_tables: RwLock::new(HashMap::new()),
        }
    }

    pub fn sym(&self) -> &SymRing {
        &self.sym
    }

    pub fn cap(&self) -> u32 {
        self.sym.cap()
    }

    /// The Jack symmetric function `J_lambda` expanded over monomials.
    pub fn jack_j(&self, lam: &Partition) -> Result<Arc<JackExpansion>> {
        self.sym.check_degree(lam.size())?;
        if let Some(e) = self.expansions.read().unwrap().get(lam) {
            return Ok(e.clone());
        }
        self.compute_degree(lam.size())?;
        self.expansions
            .read()
            .unwrap()
            .get(lam)
            .cloned()
            .ok_or_else(|| Error::Internal(format!("Jack expansion missing for {}", lam)))
    }

    /// `J_lambda` in the power-sum basis.
    pub fn jack_in_p(&self, lam: &Partition) -> Result<Arc<SymExpr>> {
        if let Some(e) = self.p_forms.read().unwrap().get(lam) {
            return Ok(e.clone());
        }
        let j = self.jack_j(lam)?;
        let p = Arc::new(self.sym.change_basis(&j.as_sym_expr(), Basis::PowerSum)?);
        let mut w = self.p_forms.write().unwrap();
        Ok(w.entry(lam.clone()).or_insert(p).clone())
    }

    /// Solve the triangular eigenvector systems for every partition of `n`
    /// at once and memoize the J-normalized expansions.
    fn compute_degree(&self, n: u32) -> Result<()> {
        let parts = partitions_of(n);
        let index: HashMap<&Partition, usize> =
            parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let count = parts.len();

        // off-diagonal action of the operator on monomial symmetric functions
        let mut action = vec![vec![BigInt::zero(); count]; count];
        for (j, mu) in parts.iter().enumerate() {
            for (source, coeff) in monomial_action_sources(mu) {
                let i = index[&source];
                action[i][j] += coeff;
            }
        }

        // eigenvalue data: 2*(d_lam - d_mu) = k*(sum lam_i^2 - sum mu_i^2)
        //                                     + 2*(n(mu) - n(lam))
        let sq: Vec<i64> = parts
            .iter()
            .map(|p| p.parts().iter().map(|&x| (x as i64) * (x as i64)).sum())
            .collect();
        let wt: Vec<i64> = parts
            .iter()
            .map(|p| {
                p.parts()
                    .iter()
                    .enumerate()
                    .map(|(i, &x)| (i as i64 + 1) * (x as i64))
                    .sum()
            })
            .collect();

        let factorial: BigInt = (1..=n.max(1) as u64).map(BigInt::from).product();

        let mut new_entries: Vec<(Partition, Arc<JackExpansion>)> = Vec::new();
        for (li, lam) in parts.iter().enumerate() {
            if self.expansions.read().unwrap().contains_key(lam) {
                continue;
            }
            let mut v: Vec<ParamRat> = vec![ParamRat::zero(); count];
            v[li] = ParamRat::one();
            for mi in li + 1..count {
                let mut acc = ParamRat::zero();
                for (ni, vn) in v.iter().enumerate().take(mi).skip(li) {
                    if vn.is_zero() || action[ni][mi].is_zero() {
                        continue;
                    }
                    let a = ParamRat::constant(Rat::from_integer(action[ni][mi].clone()));
                    acc = &acc + &(vn * &a);
                }
                if acc.is_zero() {
                    continue;
                }
                let denom = ParamPoly::from_coeffs(vec![
                    Rat::from_integer(BigInt::from(2 * (wt[mi] - wt[li]))),
                    Rat::from_integer(BigInt::from(sq[li] - sq[mi])),
                ]);
                let scale =
                    ParamRat::new(ParamPoly::constant(Rat::from_integer(2.into())), denom);
                v[mi] = &acc * &scale;
            }
            // rescale so that the m_{(1^n)} coefficient is n!
            let tail = v[count - 1].clone();
            if tail.is_zero() {
                return Err(Error::Internal(format!(
                    "vanishing m_(1^n) coefficient for {}",
                    lam
                )));
            }
            let scale =
                &ParamRat::constant(Rat::from_integer(factorial.clone())) * &tail.recip();
            let mut coeffs = BTreeMap::new();
            for (mi, val) in v.into_iter().enumerate() {
                if val.is_zero() {
                    continue;
                }
                let val = &val * &scale;
                let poly = val.to_poly().ok_or_else(|| {
                    Error::Internal(format!("non-polynomial monomial coefficient in J_{}", lam))
                })?;
                coeffs.insert(parts[mi].clone(), poly);
            }
            new_entries.push((
                lam.clone(),
                Arc::new(JackExpansion {
                    partition: lam.clone(),
                    monomial_coeffs: coeffs,
                }),
            ));
        }
        let mut w = self.expansions.write().unwrap();
        for (p, e) in new_entries {
            w.entry(p).or_insert(e);
        }
        Ok(())
    }

    /// The squared norm `j_nu(k)` as a hook product, cross-checked against
    /// the scalar product of the computed expansion.
    pub fn jack_norm_j(&self, nu: &Partition) -> Result<ParamPoly> {
        self.sym.check_degree(nu.size())?;
        let mut hook = ParamPoly::one();
        for (row, &len) in nu.parts().iter().enumerate() {
            for col in 0..len as usize {
                let a = nu.arm(row, col) as i64;
                let l = nu.leg(row, col) as i64;
                // (k a + l + 1)(k a + k + l)
                let f1 = ParamPoly::from_coeffs(vec![
                    Rat::from_integer(BigInt::from(l + 1)),
                    Rat::from_integer(BigInt::from(a)),
                ]);
                let f2 = ParamPoly::from_coeffs(vec![
                    Rat::from_integer(BigInt::from(l)),
                    Rat::from_integer(BigInt::from(a + 1)),
                ]);
                hook = &(&hook * &f1) * &f2;
            }
        }
        let jp = self.jack_in_p(nu)?;
        let gram = self.sym.inner_product_k(&jp, &jp)?;
        if gram != ParamRat::from_poly(hook.clone()) {
            return Err(Error::Internal(format!(
                "hook product and Gram norm disagree for {}",
                nu
            )));
        }
        Ok(hook)
    }

    /// All structure constants `g_{lam,mu}^nu(k)` for fixed `lam`, `mu`,
    /// keyed by `nu`. Entries are exact polynomials; partitions `nu` with
    /// vanishing constant are absent.
    pub fn structure_constants(&self, lam: &Partition, mu: &Partition) -> Result<Arc<GTable>> {
        let (a, b) = if lam <= mu {
            (lam.clone(), mu.clone())
        } else {
            (mu.clone(), lam.clone())
        };
        if let Some(t) = self.g_tables.read().unwrap().get(&(a.clone(), b.clone())) {
            return Ok(t.clone());
        }
        let n = lam.size() + mu.size();
        self.sym.check_degree(n)?;
        let pa = self.jack_in_p(&a)?;
        let pb = self.jack_in_p(&b)?;
        let product = self.sym.multiply(&pa, &pb)?;
        let mut table = BTreeMap::new();
        for nu in partitions_of(n) {
            let pn = self.jack_in_p(&nu)?;
            let pairing = self.sym.inner_product_k(&product, &pn)?;
            if pairing.is_zero() {
                continue;
            }
            let poly = pairing.to_poly().ok_or_else(|| {
                Error::Internal(format!(
                    "structure constant g_({},{})^{} is not a polynomial",
                    a, b, nu
                ))
            })?;
            table.insert(nu, poly);
        }
        let table = Arc::new(table);
        let mut w = self.g_tables.write().unwrap();
        Ok(w.entry((a, b)).or_insert(table).clone())
    }

    /// `g_{lam,mu}^nu(k) = <J_lam J_mu, J_nu>_k`. Zero when the sizes do
    /// not balance.
    pub fn structure_constant_g(
        &self,
        lam: &Partition,
        mu: &Partition,
        nu: &Partition,
    ) -> Result<ParamPoly> {
        if lam.size() + mu.size() != nu.size() {
            return Ok(ParamPoly::zero());
        }
        Ok(self
            .structure_constants(lam, mu)?
            .get(nu)
            .cloned()
            .unwrap_or_else(ParamPoly::zero))
    }

    /// Partitions obtained from `lam` by a horizontal strip of size `r`;
    /// equal to the support of `J_lam * J_(r)` by the Pieri rule.
    pub fn pieri_support(&self, lam: &Partition, r: u32) -> Result<BTreeSet<Partition>> {
        self.sym.check_degree(lam.size() + r)?;
        Ok(horizontal_strips(lam, r).into_iter().collect())
    }

    /// Support of `J_lam * J_mu` specialized at `k0`, truncated to `nvars`
    /// variables. Every partition in the result is reduced modulo columns of
    /// height `nvars` (full columns removed), which identifies partitions
    /// that restrict to the same function on the determinant-one torus.
    pub fn product_support_at(
        &self,
        lam: &Partition,
        mu: &Partition,
        k0: &Rat,
        nvars: usize,
    ) -> Result<BTreeSet<Partition>> {
        if k0 <= &Rat::zero() {
            return Err(Error::Precondition(format!(
                "specialization parameter must be positive, got {}",
                k0
            )));
        }
        if lam.len() > nvars || mu.len() > nvars {
            return Err(Error::Precondition(format!(
                "partition length exceeds {} variables",
                nvars
            )));
        }
        let table = self.structure_constants(lam, mu)?;
        let mut out = BTreeSet::new();
        for (nu, g) in table.iter() {
            if nu.len() > nvars {
                continue;
            }
            if g.eval(k0).is_zero() {
                continue;
            }
            out.insert(reduce_columns(nu, nvars));
        }
        Ok(out)
    }

    /// Express `f` in the Jack basis: `f = sum <f, J_nu>/j_nu J_nu`.
    pub fn to_jack_basis(&self, f: &SymExpr) -> Result<SymExpr> {
        let degree = f.degree();
        let mut terms = BTreeMap::new();
        for nu in partitions_of(degree) {
            let pn = self.jack_in_p(&nu)?;
            let pairing = self.sym.inner_product_k(f, &pn)?;
            if pairing.is_zero() {
                continue;
            }
            let norm = ParamRat::from_poly(self.jack_norm_j(&nu)?);
            terms.insert(nu, &pairing * &norm.recip());
        }
        SymExpr::from_terms(Basis::Jack, degree, terms)
    }
}

/// Remove full columns of height `nvars`: subtract the `nvars`-th part from
/// every part.
pub fn reduce_columns(nu: &Partition, nvars: usize) -> Partition {
    if nu.len() < nvars {
        return nu.clone();
    }
    let base = nu.part(nvars - 1);
    Partition::from_unsorted(nu.parts().iter().map(|&p| p - base).collect())
}

/// Exact evaluation of a parameter polynomial at a rational point.
pub fn specialize(p: &ParamPoly, k0: &Rat) -> Rat {
    p.eval(k0)
}

/// Sources and integer coefficients of the off-diagonal monomial action:
/// all pairs `(nu, c)` such that the operator maps `m_nu` to `... + c m_mu`.
/// A source arises by replacing a pair of entries `(mu_i, mu_j)` of the
/// target with `(r, s)`, `r + s = mu_i + mu_j`, `r > max(mu_i, mu_j)`; the
/// coefficient is `r - s`.
fn monomial_action_sources(mu: &Partition) -> Vec<(Partition, BigInt)> {
    let parts = mu.parts();
    let l = parts.len();
    let mut out: HashMap<Partition, BigInt> = HashMap::new();
    for i in 0..l {
        for j in i + 1..l {
            let (p, q) = (parts[i], parts[j]);
            let total = p + q;
            for r in p.max(q) + 1..=total {
                let s = total - r;
                let mut source: Vec<u32> = parts.to_vec();
                source[i] = r;
                source[j] = s;
                let nu = Partition::from_unsorted(source);
                *out.entry(nu).or_insert_with(BigInt::zero) += BigInt::from((r - s) as i64);
            }
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{rat, rat_int};
    use crate::partition::dominance_leq;
    use crate::ptn;

    fn poly(coeffs: &[i64]) -> ParamPoly {
        ParamPoly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn small_expansions() {
        let ring = JackRing::new(8);
        let j1 = ring.jack_j(&ptn![1]).unwrap();
        assert_eq!(j1.coeff(&ptn![1]), poly(&[1]));

        // J_2 = (k+1) m_2 + 2 m_{1,1}
        let j2 = ring.jack_j(&ptn![2]).unwrap();
        assert_eq!(j2.coeff(&ptn![2]), poly(&[1, 1]));
        assert_eq!(j2.coeff(&ptn![1, 1]), poly(&[2]));

        // J_{1,1} = 2 m_{1,1}
        let j11 = ring.jack_j(&ptn![1, 1]).unwrap();
        assert_eq!(j11.coeff(&ptn![1, 1]), poly(&[2]));
        assert!(j11.coeff(&ptn![2]).is_zero());

        // J_{2,1} = (k+2) m_{2,1} + 6 m_{1,1,1}
        let j21 = ring.jack_j(&ptn![2, 1]).unwrap();
        assert_eq!(j21.coeff(&ptn![2, 1]), poly(&[2, 1]));
        assert_eq!(j21.coeff(&ptn![1, 1, 1]), poly(&[6]));
    }

    #[test]
    fn triangular_support() {
        let ring = JackRing::new(8);
        for n in 1..=6u32 {
            for lam in partitions_of(n) {
                let j = ring.jack_j(&lam).unwrap();
                for mu in j.monomial_coeffs.keys() {
                    assert!(dominance_leq(mu, &lam).unwrap(), "{} in J_{}", mu, lam);
                }
            }
        }
    }

    #[test]
    fn norms_match_hooks() {
        let ring = JackRing::new(8);
        assert_eq!(ring.jack_norm_j(&ptn![1]).unwrap(), poly(&[0, 1]));
        // j_2 = 2k^2(k+1) = 2k^3 + 2k^2
        assert_eq!(ring.jack_norm_j(&ptn![2]).unwrap(), poly(&[0, 0, 2, 2]));
        // j_{1,1} = 2k(k+1)
        assert_eq!(ring.jack_norm_j(&ptn![1, 1]).unwrap(), poly(&[0, 2, 2]));
    }

    #[test]
    fn orthogonality_small() {
        let ring = JackRing::new(8);
        for n in 1..=5u32 {
            let parts = partitions_of(n);
            for a in &parts {
                for b in &parts {
                    if a == b {
                        continue;
                    }
                    let pa = ring.jack_in_p(a).unwrap();
                    let pb = ring.jack_in_p(b).unwrap();
                    let ip = ring.sym().inner_product_k(&pa, &pb).unwrap();
                    assert!(ip.is_zero(), "<J_{}, J_{}> != 0: {}", a, b, ip);
                }
            }
        }
    }

    #[test]
    fn structure_constant_examples() {
        let ring = JackRing::new(8);
        // g_{(1),(1)}^{(2)} = g_{(1),(1)}^{(1,1)} = 2k^2
        assert_eq!(
            ring.structure_constant_g(&ptn![1], &ptn![1], &ptn![2])
                .unwrap(),
            poly(&[0, 0, 2])
        );
        assert_eq!(
            ring.structure_constant_g(&ptn![1], &ptn![1], &ptn![1, 1])
                .unwrap(),
            poly(&[0, 0, 2])
        );
        assert!(ring
            .structure_constant_g(&ptn![1], &ptn![1], &ptn![3])
            .unwrap()
            .is_zero());
    }

    #[test]
    fn pieri_matches_structure_constants() {
        let ring = JackRing::new(8);
        for n in 0..=4u32 {
            for lam in partitions_of(n) {
                for r in 1..=(8 - n).min(4) {
                    let combinatorial = ring.pieri_support(&lam, r).unwrap();
                    let table = ring.structure_constants(&lam, &ptn![r]).unwrap();
                    let algebraic: BTreeSet<Partition> = table.keys().cloned().collect();
                    assert_eq!(combinatorial, algebraic, "lam={} r={}", lam, r);
                }
            }
        }
    }

    #[test]
    fn specialization_examples() {
        assert_eq!(specialize(&poly(&[0, 0, 2]), &rat_int(1)), rat_int(2));
        // 2k^2(k+1) at 1/2 -> 3/4
        assert_eq!(specialize(&poly(&[0, 0, 2, 2]), &rat(1, 2)), rat(3, 4));
        assert_eq!(specialize(&ParamPoly::zero(), &rat_int(2)), rat_int(0));
    }

    #[test]
    fn product_support_examples() {
        let ring = JackRing::new(8);
        // zonal case: J_1 J_1 supported on (2) and (1,1);
        // the latter is a full column in two variables
        let s = ring
            .product_support_at(&ptn![1], &ptn![1], &rat_int(2), 2)
            .unwrap();
        let expect: BTreeSet<Partition> = [ptn![2], ptn![]].into_iter().collect();
        assert_eq!(s, expect);

        let s = ring
            .product_support_at(&ptn![1], &ptn![1], &rat_int(1), 3)
            .unwrap();
        let expect: BTreeSet<Partition> = [ptn![2], ptn![1, 1]].into_iter().collect();
        assert_eq!(s, expect);

        // one variable: (1,1) is discarded for its length and (2) is a full
        // column stack, so only the trivial class remains
        let s = ring
            .product_support_at(&ptn![1], &ptn![1], &rat_int(2), 1)
            .unwrap();
        let expect: BTreeSet<Partition> = [ptn![]].into_iter().collect();
        assert_eq!(s, expect);
    }

    #[test]
    fn knop_sahi_positivity_small() {
        let ring = JackRing::new(8);
        for n in 1..=6u32 {
            for lam in partitions_of(n) {
                let j = ring.jack_j(&lam).unwrap();
                for (mu, c) in &j.monomial_coeffs {
                    assert!(
                        c.has_nonneg_integer_coeffs(),
                        "coefficient of m_{} in J_{} is {}",
                        mu,
                        lam,
                        c
                    );
                }
            }
        }
    }

    #[test]
    fn jack_basis_expansion_of_product() {
        let ring = JackRing::new(8);
        // J_1 * J_1 = 1/(k+1) J_2 + k/(k+1) J_{1,1}
        let p1 = ring.jack_in_p(&ptn![1]).unwrap();
        let prod = ring.sym().multiply(&p1, &p1).unwrap();
        let in_j = ring.to_jack_basis(&prod).unwrap();
        let c2 = in_j.coeff(&ptn![2]);
        let c11 = in_j.coeff(&ptn![1, 1]);
        assert_eq!(c2.eval(&rat_int(1)).unwrap(), rat(1, 2));
        assert_eq!(c11.eval(&rat_int(1)).unwrap(), rat(1, 2));
        assert_eq!(c2.eval(&rat_int(3)).unwrap(), rat(1, 4));
    }
}
