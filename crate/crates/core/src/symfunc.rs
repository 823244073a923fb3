//! The graded ring of symmetric functions in infinitely many variables over
//! `Q(k)`, with exact conversions between the monomial, power-sum, elementary
//! and complete homogeneous bases and the deformed scalar product
//! `<p_lambda, p_mu>_k = delta z_lambda k^{l(lambda)}`.
//!
//! Power sums are the internal canonical basis: multiplication is the
//! multiset union of index partitions there and the scalar product is
//! diagonal. Transition matrices are computed lazily per degree and cached
//! behind a read-mostly lock.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::param::{ParamPoly, ParamRat, Rat};
use crate::partition::{partitions_of, z_factor, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    PowerSum,
    Elementary,
    Homogeneous,
    Jack,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
            Basis::Elementary => "e",
            Basis::Homogeneous => "h",
            Basis::Jack => "J",
        };
        write!(f, "{}", tag)
    }
}

/// A homogeneous symmetric function: finitely many `(partition -> Q(k))`
/// terms in a fixed basis. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymExpr {
    basis: Basis,
    degree: u32,
    terms: BTreeMap<Partition, ParamRat>,
}

impl SymExpr {
    pub fn zero(basis: Basis, degree: u32) -> Self {
        SymExpr {
            basis,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element indexed by `p`.
    pub fn basis_element(basis: Basis, p: Partition) -> Self {
        let degree = p.size();
        let mut terms = BTreeMap::new();
        terms.insert(p, ParamRat::one());
        SymExpr {
            basis,
            degree,
            terms,
        }
    }

    pub fn from_terms(
        basis: Basis,
        degree: u32,
        terms: BTreeMap<Partition, ParamRat>,
    ) -> Result<Self> {
        for (p, c) in &terms {
            if p.size() != degree {
                return Err(Error::SizeMismatch(p.size(), degree));
            }
            if c.is_zero() {
                return Err(Error::Internal("stored zero coefficient".into()));
            }
        }
        Ok(SymExpr {
            basis,
            degree,
            terms,
        })
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Partition, ParamRat> {
        &self.terms
    }

    pub fn coeff(&self, p: &Partition) -> ParamRat {
        self.terms.get(p).cloned().unwrap_or_else(ParamRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, p: Partition, c: &ParamRat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p.clone()).or_insert_with(ParamRat::zero);
        let v = &*entry + c;
        if v.is_zero() {
            self.terms.remove(&p);
        } else {
            *entry = v;
        }
    }

    pub fn scale(&self, c: &ParamRat) -> SymExpr {
        if c.is_zero() {
            return SymExpr::zero(self.basis, self.degree);
        }
        let terms = self
            .terms
            .iter()
            .map(|(p, v)| (p.clone(), v * c))
            .collect();
        SymExpr {
            basis: self.basis,
            degree: self.degree,
            terms,
        }
    }

    pub fn add(&self, other: &SymExpr) -> Result<SymExpr> {
        if self.basis != other.basis || self.degree != other.degree {
            return Err(Error::Internal(
                "sum of expressions in different bases or degrees".into(),
            ));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*{}_{}", c, self.basis, p)?;
        }
        Ok(())
    }
}

/// Per-degree transition data, computed once and shared.
struct DegreeTables {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `p_to_m[i][j]` = coefficient of `m_{parts[j]}` in `p_{parts[i]}`.
    p_to_m: Vec<Vec<BigInt>>,
    m_to_p: OnceLock<Vec<Vec<Rat>>>,
    e_to_p: OnceLock<Vec<Vec<Rat>>>,
    h_to_p: OnceLock<Vec<Vec<Rat>>>,
    p_to_e: OnceLock<Vec<Vec<Rat>>>,
    p_to_h: OnceLock<Vec<Vec<Rat>>>,
}

/// Context for symmetric function arithmetic. Holds the degree cap and the
/// per-degree transition caches; cheap to share behind an `Arc`.
pub struct SymRing {
    cap: u32,
    tables: RwLock<BTreeMap<u32, Arc<DegreeTables>>>,
}

impl SymRing {
    pub const DEFAULT_CAP: u32 = 12;

    pub fn new(cap: u32) -> Self {
        SymRing {
            cap,
            tables: RwLock::new(BTreeMap::new()),
        }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn check_degree(&self, degree: u32) -> Result<()> {
        if degree > self.cap {
            Err(Error::DegreeCapExceeded {
                degree,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    fn tables(&self, degree: u32) -> Result<Arc<DegreeTables>> {
        self.check_degree(degree)?;
        if let Some(t) = self.tables.read().unwrap().get(&degree) {
            return Ok(t.clone());
        }
        let built = Arc::new(build_degree_tables(degree));
        let mut w = self.tables.write().unwrap();
        Ok(w.entry(degree).or_insert(built).clone())
    }

    /// Partitions of `degree` in the fixed internal order.
    pub fn partitions(&self, degree: u32) -> Result<Vec<Partition>> {
        Ok(self.tables(degree)?.parts.clone())
    }

    /// Re-express `f` in `target`. Round trips are exact identities.
    pub fn change_basis(&self, f: &SymExpr, target: Basis) -> Result<SymExpr> {
        if f.basis == target {
            return Ok(f.clone());
        }
        if f.basis == Basis::Jack || target == Basis::Jack {
            return Err(Error::UnsupportedBasis(
                "Jack basis conversions live in the jack module".into(),
            ));
        }
        let in_p = self.to_power_sums(f)?;
        if target == Basis::PowerSum {
            return Ok(in_p);
        }
        let t = self.tables(f.degree)?;
        let mat: &Vec<Vec<Rat>> = match target {
            Basis::Monomial => {
                // p -> m is the integer matrix; wrap on the fly
                return self.p_vector_to_basis_int(&in_p, &t, Basis::Monomial);
            }
            Basis::Elementary => p_to_e_matrix(&t),
            Basis::Homogeneous => p_to_h_matrix(&t),
            _ => unreachable!(),
        };
        self.p_vector_to_basis(&in_p, &t, mat, target)
    }

    fn p_vector_to_basis_int(
        &self,
        in_p: &SymExpr,
        t: &DegreeTables,
        target: Basis,
    ) -> Result<SymExpr> {
        let mut out = SymExpr::zero(target, in_p.degree);
        for (lam, c) in &in_p.terms {
            let i = t.index[lam];
            for (j, entry) in t.p_to_m[i].iter().enumerate() {
                if !entry.is_zero() {
                    let coeff = c * &ParamRat::constant(Rat::from_integer(entry.clone()));
                    out.add_term(t.parts[j].clone(), &coeff);
                }
            }
        }
        Ok(out)
    }

    fn p_vector_to_basis(
        &self,
        in_p: &SymExpr,
        t: &DegreeTables,
        mat: &[Vec<Rat>],
        target: Basis,
    ) -> Result<SymExpr> {
        let mut out = SymExpr::zero(target, in_p.degree);
        for (lam, c) in &in_p.terms {
            let i = t.index[lam];
            for (j, entry) in mat[i].iter().enumerate() {
                if !entry.is_zero() {
                    let coeff = c * &ParamRat::constant(entry.clone());
                    out.add_term(t.parts[j].clone(), &coeff);
                }
            }
        }
        Ok(out)
    }

    /// Canonical form: the expression in the power-sum basis.
    pub fn to_power_sums(&self, f: &SymExpr) -> Result<SymExpr> {
        if f.basis == Basis::PowerSum {
            return Ok(f.clone());
        }
        if f.basis == Basis::Jack {
            return Err(Error::UnsupportedBasis(
                "Jack basis conversions live in the jack module".into(),
            ));
        }
        let t = self.tables(f.degree)?;
        let mat: &Vec<Vec<Rat>> = match f.basis {
            Basis::Monomial => m_to_p_matrix(&t),
            Basis::Elementary => e_to_p_matrix(&t),
            Basis::Homogeneous => h_to_p_matrix(&t),
            _ => unreachable!(),
        };
        self.p_vector_to_basis(f, &t, mat, Basis::PowerSum)
            .map(|mut e| {
                e.basis = Basis::PowerSum;
                e
            })
    }

    /// Product of two homogeneous expressions, in the power-sum basis.
    pub fn multiply(&self, f: &SymExpr, g: &SymExpr) -> Result<SymExpr> {
        let degree = f.degree + g.degree;
        self.check_degree(degree)?;
        let fp = self.to_power_sums(f)?;
        let gp = self.to_power_sums(g)?;
        let mut out = SymExpr::zero(Basis::PowerSum, degree);
        for (lam, a) in &fp.terms {
            for (mu, b) in &gp.terms {
                out.add_term(lam.union(mu), &(a * b));
            }
        }
        Ok(out)
    }

    /// The deformed scalar product. Expressions of different degrees pair
    /// to zero by convention.
    pub fn inner_product_k(&self, f: &SymExpr, g: &SymExpr) -> Result<ParamRat> {
        if f.degree != g.degree {
            return Ok(ParamRat::zero());
        }
        let fp = self.to_power_sums(f)?;
        let gp = self.to_power_sums(g)?;
        let mut acc = ParamRat::zero();
        for (lam, a) in &fp.terms {
            if let Some(b) = gp.terms.get(lam) {
                let z = ParamPoly::constant(Rat::from_integer(z_factor(lam)));
                let weight = &z * &ParamPoly::monomial(Rat::one(), lam.len() as u32);
                acc = &acc + &(&(a * b) * &ParamRat::from_poly(weight));
            }
        }
        Ok(acc)
    }
}

fn build_degree_tables(degree: u32) -> DegreeTables {
    let parts = partitions_of(degree);
    let index: HashMap<Partition, usize> = parts
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let n = parts.len();
    let mut p_to_m = vec![vec![BigInt::zero(); n]; n];
    for (i, lam) in parts.iter().enumerate() {
        for (j, mu) in parts.iter().enumerate() {
            // support of p_lambda in the monomial basis is dominance-upward,
            // hence descending-lex upward: j <= i
            if j > i {
                continue;
            }
            p_to_m[i][j] = distribution_count(lam.parts(), mu.parts());
        }
    }
    DegreeTables {
        parts,
        index,
        p_to_m,
        m_to_p: OnceLock::new(),
        e_to_p: OnceLock::new(),
        h_to_p: OnceLock::new(),
        p_to_e: OnceLock::new(),
        p_to_h: OnceLock::new(),
    }
}

/// Number of ways to distribute the (distinguishable) parts of `lam` onto the
/// labeled slots of `mu` so that slot `j` receives total exactly `mu_j`.
/// This is the coefficient of `m_mu` in `p_lam`.
fn distribution_count(lam: &[u32], mu: &[u32]) -> BigInt {
    fn rec(
        parts: &[u32],
        idx: usize,
        caps: &mut Vec<u32>,
        memo: &mut HashMap<(usize, Vec<u32>), BigInt>,
    ) -> BigInt {
        if idx == parts.len() {
            return if caps.iter().all(|&c| c == 0) {
                BigInt::one()
            } else {
                BigInt::zero()
            };
        }
        let mut key_caps = caps.clone();
        key_caps.sort_unstable();
        let key = (idx, key_caps);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let part = parts[idx];
        let mut total = BigInt::zero();
        let mut seen: Vec<u32> = Vec::new();
        for s in 0..caps.len() {
            let c = caps[s];
            if c < part || seen.contains(&c) {
                continue;
            }
            seen.push(c);
            let count = caps.iter().filter(|&&x| x == c).count();
            caps[s] -= part;
            let sub = rec(parts, idx + 1, caps, memo);
            caps[s] += part;
            total += sub * BigInt::from(count);
        }
        memo.insert(key, total.clone());
        total
    }
    let mut caps = mu.to_vec();
    let mut memo = HashMap::new();
    rec(lam, 0, &mut caps, &mut memo)
}

fn m_to_p_matrix(t: &DegreeTables) -> &Vec<Vec<Rat>> {
    t.m_to_p.get_or_init(|| {
        // p_to_m is lower triangular with nonzero diagonal in the fixed
        // descending-lex order; invert by forward substitution.
        let n = t.parts.len();
        let a: Vec<Vec<Rat>> = t
            .p_to_m
            .iter()
            .map(|row| row.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        let mut inv = vec![vec![Rat::zero(); n]; n];
        for col in 0..n {
            // solve A x = e_col; x is the col-th column of the inverse
            let mut x = vec![Rat::zero(); n];
            for i in col..n {
                let mut acc = if i == col { Rat::one() } else { Rat::zero() };
                for (j, xj) in x.iter().enumerate().take(i).skip(col) {
                    acc -= &a[i][j] * xj;
                }
                x[i] = acc / &a[i][i];
            }
            for (i, xi) in x.into_iter().enumerate() {
                inv[i][col] = xi;
            }
        }
        inv
    })
}

fn e_to_p_matrix(t: &DegreeTables) -> &Vec<Vec<Rat>> {
    t.e_to_p
        .get_or_init(|| product_basis_to_p(&t.parts, &t.index, true))
}

fn h_to_p_matrix(t: &DegreeTables) -> &Vec<Vec<Rat>> {
    t.h_to_p
        .get_or_init(|| product_basis_to_p(&t.parts, &t.index, false))
}

fn p_to_e_matrix(t: &DegreeTables) -> &Vec<Vec<Rat>> {
    t.p_to_e
        .get_or_init(|| invert_full(e_to_p_matrix(t)))
}

fn p_to_h_matrix(t: &DegreeTables) -> &Vec<Vec<Rat>> {
    t.p_to_h
        .get_or_init(|| invert_full(h_to_p_matrix(t)))
}

/// Expansion of `e_lambda` (or `h_lambda`) in power sums, one row per
/// partition. Newton's identities in closed form: for a single row
/// `e_r = sum_{|mu|=r} eps_mu p_mu / z_mu` and `h_r = sum p_mu / z_mu`;
/// products of rows are multiset unions.
fn product_basis_to_p(
    parts: &[Partition],
    index: &HashMap<Partition, usize>,
    signed: bool,
) -> Vec<Vec<Rat>> {
    let n = parts.len();
    let degree: u32 = parts.first().map(|p| p.size()).unwrap_or(0);
    // single-row expansions per r
    let mut single: Vec<BTreeMap<Partition, Rat>> = Vec::with_capacity(degree as usize + 1);
    for r in 0..=degree {
        let mut row = BTreeMap::new();
        for mu in partitions_of(r) {
            let mut c = Rat::one() / Rat::from_integer(z_factor(&mu));
            if signed && (r as i64 - mu.len() as i64) % 2 != 0 {
                c = -c;
            }
            row.insert(mu, c);
        }
        single.push(row);
    }
    let mut out = vec![vec![Rat::zero(); n]; n];
    for (i, lam) in parts.iter().enumerate() {
        let mut acc: BTreeMap<Partition, Rat> = BTreeMap::new();
        acc.insert(Partition::empty(), Rat::one());
        for &part in lam.parts() {
            let mut next: BTreeMap<Partition, Rat> = BTreeMap::new();
            for (p1, c1) in &acc {
                for (p2, c2) in &single[part as usize] {
                    let key = p1.union(p2);
                    let v = c1 * c2;
                    *next.entry(key).or_insert_with(Rat::zero) += v;
                }
            }
            acc = next;
        }
        for (mu, c) in acc {
            if !c.is_zero() {
                out[i][index[&mu]] = c;
            }
        }
    }
    out
}

fn invert_full(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut aug: Vec<Vec<Rat>> = a.to_vec();
    let mut inv: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .expect("transition matrix is invertible");
        aug.swap(col, pivot);
        inv.swap(col, pivot);
        let d = aug[col][col].clone();
        for j in 0..n {
            aug[col][j] = &aug[col][j] / &d;
            inv[col][j] = &inv[col][j] / &d;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for j in 0..n {
                    let v = &aug[r][j] - &(&f * &aug[col][j]);
                    aug[r][j] = v;
                    let v = &inv[r][j] - &(&f * &inv[col][j]);
                    inv[r][j] = v;
                }
            }
        }
    }
    inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ptn;

    fn p_of(p: Partition) -> SymExpr {
        SymExpr::basis_element(Basis::PowerSum, p)
    }

    fn m_of(p: Partition) -> SymExpr {
        SymExpr::basis_element(Basis::Monomial, p)
    }

    /// Brute-force oracle: expand a power sum product in `n` variables and
    /// read off monomial coefficients. Independent of the transition
    /// machinery under test.
    fn p_to_m_brute(lam: &Partition) -> BTreeMap<Partition, i64> {
        let n = lam.size() as usize;
        // exponent vectors -> coefficient
        let mut acc: HashMap<Vec<u32>, i64> = HashMap::new();
        acc.insert(vec![0; n], 1);
        for &part in lam.parts() {
            let mut next: HashMap<Vec<u32>, i64> = HashMap::new();
            for (expt, c) in &acc {
                for v in 0..n {
                    let mut e = expt.clone();
                    e[v] += part;
                    *next.entry(e).or_insert(0) += c;
                }
            }
            acc = next;
        }
        // the coefficient of m_mu is the coefficient of the single sorted
        // monomial x_1^{mu_1} x_2^{mu_2} ...
        let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
        for mu in partitions_of(lam.size()) {
            if mu.len() > n {
                continue;
            }
            let canonical: Vec<u32> = (0..n).map(|i| mu.part(i)).collect();
            if let Some(&c) = acc.get(&canonical) {
                if c != 0 {
                    out.insert(mu, c);
                }
            }
        }
        out
    }

    #[test]
    fn p_to_m_examples() {
        let ring = SymRing::new(8);
        let f = ring
            .change_basis(&p_of(ptn![1]), Basis::Monomial)
            .unwrap();
        assert_eq!(f, m_of(ptn![1]));

        let f = ring.change_basis(&p_of(ptn![2]), Basis::Monomial).unwrap();
        assert_eq!(f, m_of(ptn![2]));

        // p_{1,1} = m_2 + 2 m_{1,1}
        let f = ring
            .change_basis(&p_of(ptn![1, 1]), Basis::Monomial)
            .unwrap();
        assert_eq!(f.coeff(&ptn![2]), ParamRat::one());
        assert_eq!(
            f.coeff(&ptn![1, 1]),
            ParamRat::constant(Rat::from_integer(BigInt::from(2)))
        );
    }

    #[test]
    fn p_to_m_matches_brute_force() {
        let ring = SymRing::new(8);
        for n in 1..=5u32 {
            for lam in partitions_of(n) {
                let expect = p_to_m_brute(&lam);
                let got = ring
                    .change_basis(&p_of(lam.clone()), Basis::Monomial)
                    .unwrap();
                assert_eq!(got.terms().len(), expect.len(), "support for {}", lam);
                for (mu, c) in expect {
                    assert_eq!(
                        got.coeff(&mu),
                        ParamRat::constant(Rat::from_integer(BigInt::from(c))),
                        "coefficient of {} in p_{}",
                        mu,
                        lam
                    );
                }
            }
        }
    }

    #[test]
    fn round_trip_identity() {
        let ring = SymRing::new(10);
        for n in 0..=6u32 {
            for lam in partitions_of(n) {
                let m = m_of(lam.clone());
                let p = ring.change_basis(&m, Basis::PowerSum).unwrap();
                let back = ring.change_basis(&p, Basis::Monomial).unwrap();
                assert_eq!(back, m);
            }
        }
    }

    #[test]
    fn e_h_round_trips() {
        let ring = SymRing::new(8);
        for n in 1..=5u32 {
            for lam in partitions_of(n) {
                for basis in [Basis::Elementary, Basis::Homogeneous] {
                    let f = SymExpr::basis_element(basis, lam.clone());
                    let p = ring.change_basis(&f, Basis::PowerSum).unwrap();
                    let back = ring.change_basis(&p, basis).unwrap();
                    assert_eq!(back, f);
                }
            }
        }
    }

    #[test]
    fn e_and_h_small_values() {
        let ring = SymRing::new(8);
        // e_2 = m_{1,1}, h_2 = m_2 + m_{1,1}
        let e2 = ring
            .change_basis(
                &SymExpr::basis_element(Basis::Elementary, ptn![2]),
                Basis::Monomial,
            )
            .unwrap();
        assert_eq!(e2, m_of(ptn![1, 1]));
        let h2 = ring
            .change_basis(
                &SymExpr::basis_element(Basis::Homogeneous, ptn![2]),
                Basis::Monomial,
            )
            .unwrap();
        assert_eq!(h2.coeff(&ptn![2]), ParamRat::one());
        assert_eq!(h2.coeff(&ptn![1, 1]), ParamRat::one());
    }

    #[test]
    fn multiply_power_sums() {
        let ring = SymRing::new(8);
        let f = ring.multiply(&p_of(ptn![1]), &p_of(ptn![1])).unwrap();
        assert_eq!(f, p_of(ptn![1, 1]));
        let f = ring.multiply(&p_of(ptn![2]), &p_of(ptn![1])).unwrap();
        assert_eq!(f, p_of(ptn![2, 1]));
    }

    #[test]
    fn multiply_monomials() {
        let ring = SymRing::new(8);
        let prod = ring.multiply(&m_of(ptn![1]), &m_of(ptn![1])).unwrap();
        let in_m = ring.change_basis(&prod, Basis::Monomial).unwrap();
        assert_eq!(in_m.coeff(&ptn![2]), ParamRat::one());
        assert_eq!(
            in_m.coeff(&ptn![1, 1]),
            ParamRat::constant(Rat::from_integer(BigInt::from(2)))
        );
    }

    #[test]
    fn inner_product_values() {
        let ring = SymRing::new(8);
        let k = ParamRat::from_poly(ParamPoly::k());
        assert_eq!(
            ring.inner_product_k(&p_of(ptn![1]), &p_of(ptn![1])).unwrap(),
            k
        );
        // <p_{2,1}, p_{2,1}> = 2 k^2
        let got = ring
            .inner_product_k(&p_of(ptn![2, 1]), &p_of(ptn![2, 1]))
            .unwrap();
        assert_eq!(
            got,
            ParamRat::from_poly(ParamPoly::monomial(Rat::from_integer(BigInt::from(2)), 2))
        );
        let zero = ring
            .inner_product_k(&p_of(ptn![2]), &p_of(ptn![1, 1]))
            .unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn multiply_distributes_and_adds_degrees() {
        use crate::partition::partitions_of;
        let ring = SymRing::new(8);
        for lam in partitions_of(2) {
            for mu in partitions_of(2) {
                for rho in partitions_of(3) {
                    let f = m_of(lam.clone());
                    let g = m_of(mu.clone());
                    let h = m_of(rho.clone());
                    let sum = ring
                        .change_basis(&f, Basis::PowerSum)
                        .unwrap()
                        .add(&ring.change_basis(&g, Basis::PowerSum).unwrap())
                        .unwrap();
                    let lhs = ring.multiply(&sum, &h).unwrap();
                    let rhs = ring
                        .multiply(&f, &h)
                        .unwrap()
                        .add(&ring.multiply(&g, &h).unwrap())
                        .unwrap();
                    assert_eq!(lhs, rhs);
                    assert_eq!(lhs.degree(), 5);
                }
            }
        }
    }

    #[test]
    fn inner_product_symmetric_bilinear() {
        use crate::partition::partitions_of;
        let ring = SymRing::new(8);
        let k2 = ParamRat::constant(Rat::from_integer(BigInt::from(2)));
        for lam in partitions_of(3) {
            for mu in partitions_of(3) {
                let f = m_of(lam.clone());
                let g = m_of(mu.clone());
                let fg = ring.inner_product_k(&f, &g).unwrap();
                let gf = ring.inner_product_k(&g, &f).unwrap();
                assert_eq!(fg, gf);
                let scaled = ring.inner_product_k(&f.scale(&k2), &g).unwrap();
                assert_eq!(scaled, &k2 * &fg);
            }
        }
    }

    #[test]
    fn degree_cap_enforced() {
        let ring = SymRing::new(3);
        let err = ring.multiply(&p_of(ptn![2]), &p_of(ptn![2]));
        assert!(matches!(err, Err(Error::DegreeCapExceeded { .. })));
    }
}
