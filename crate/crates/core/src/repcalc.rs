//! Formal characters and tensor product multiplicities: Freudenthal weight
//! multiplicities, the Weyl dimension formula, tensor decomposition by the
//! Brauer-Klimyk alternating sum, symmetric and alternating square
//! multiplicities, and a Littlewood-Richardson tableau counter for type A.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::param::Rat;
use crate::partition::Partition;
use crate::rootsys::{RootSystem, Weight};

/// Weight multiplicities of one irreducible module, restricted to the
/// dominant chamber. The full character is the union of Weyl orbits.
#[derive(Debug, Clone)]
pub struct FormalCharacter {
    pub highest: Weight,
    pub dominant_mults: BTreeMap<Weight, u64>,
}

impl FormalCharacter {
    pub fn dimension(&self, sys: &RootSystem) -> BigInt {
        let mut total = BigInt::zero();
        for (w, m) in &self.dominant_mults {
            total += BigInt::from(sys.weyl_orbit(w).len() as u64) * BigInt::from(*m);
        }
        total
    }

    pub fn multiplicity(&self, sys: &RootSystem, w: &Weight) -> u64 {
        let dom = sys.dominant_representative(w);
        self.dominant_mults.get(&dom).copied().unwrap_or(0)
    }
}

/// Shared calculator for one root system; characters and expanded weight
/// diagrams are cached behind read-mostly locks.
pub struct RepCtx {
    sys: Arc<RootSystem>,
    chars: RwLock<HashMap<Weight, Arc<FormalCharacter>>>,
    diagrams: RwLock<HashMap<Weight, Arc<Vec<(Weight, u64)>>>>,
}

impl RepCtx {
    pub fn new(sys: Arc<RootSystem>) -> Self {
        RepCtx {
            sys,
            chars: RwLock::new(HashMap::new()),
            diagrams: RwLock::new(HashMap::new()),
        }
    }

    pub fn sys(&self) -> &RootSystem {
        &self.sys
    }

    fn check_dominant(&self, w: &Weight) -> Result<()> {
        if w.dim() != self.sys.rank() {
            return Err(Error::NonDominant(format!(
                "weight {} has wrong rank",
                w
            )));
        }
        if !w.is_dominant() {
            return Err(Error::NonDominant(w.to_string()));
        }
        Ok(())
    }

    /// Full weight multiplicity map of the irreducible module with the
    /// given highest weight, by Freudenthal's recursion.
    pub fn dominant_character(&self, lam: &Weight) -> Result<Arc<FormalCharacter>> {
        self.check_dominant(lam)?;
        if let Some(c) = self.chars.read().unwrap().get(lam) {
            return Ok(c.clone());
        }
        let sys = &*self.sys;
        let rank = sys.rank();
        let rho = sys.rho();

        // candidate dominant weights mu <= lam: mu = lam - A c with
        // 0 <= c <= A^{-1} lam componentwise
        let lam_root_coords: Vec<Rat> = {
            // rational simple-root coordinates of lam
            let a = crate::linalg::rmat_from_i64(
                &(0..rank)
                    .map(|i| (0..rank).map(|j| sys.cartan()[i][j]).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            );
            let b: Vec<Rat> = lam.0.iter().map(|&x| Rat::from_integer(BigInt::from(x))).collect();
            crate::linalg::solve(&a, &b).ok_or_else(|| Error::Internal("singular Cartan".into()))?
        };
        let bounds: Vec<i64> = lam_root_coords
            .iter()
            .map(|c| {
                let f = c.floor().to_integer();
                i64::try_from(f).unwrap_or(0).max(0)
            })
            .collect();

        let mut dominants: Vec<Weight> = Vec::new();
        let mut c = vec![0i64; rank];
        loop {
            let mut w = lam.clone();
            for (i, &ci) in c.iter().enumerate() {
                if ci != 0 {
                    for j in 0..rank {
                        w.0[j] -= ci * sys.cartan()[j][i];
                    }
                }
            }
            if w.is_dominant() {
                dominants.push(w);
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == rank {
                    break;
                }
                c[pos] += 1;
                if c[pos] <= bounds[pos] {
                    break;
                }
                c[pos] = 0;
                pos += 1;
            }
            if pos == rank {
                break;
            }
        }
        // sort by ascending height of lam - mu, so higher weights come first
        let height = |w: &Weight| -> i64 {
            sys.weight_to_root(&lam.sub(w))
                .map(|r| r.iter().sum())
                .unwrap_or(i64::MAX)
        };
        dominants.sort_by_key(|w| (height(w), w.clone()));

        let lam_rho = lam.add(&rho);
        let lam_norm = sys.weight_inner(&lam_rho, &lam_rho);
        let mut mults: BTreeMap<Weight, u64> = BTreeMap::new();
        for mu in dominants {
            if mu == *lam {
                mults.insert(mu, 1);
                continue;
            }
            let mu_rho = mu.add(&rho);
            let denom = &lam_norm - &sys.weight_inner(&mu_rho, &mu_rho);
            if denom.is_zero() {
                return Err(Error::Internal(format!(
                    "degenerate Freudenthal denominator at {}",
                    mu
                )));
            }
            let mut rhs = Rat::zero();
            for alpha in sys.positive_roots() {
                let alpha_w = sys.root_to_weight(alpha);
                let mut j = 1i64;
                loop {
                    let shifted = mu.add(&alpha_w.scale(j));
                    let dom = sys.dominant_representative(&shifted);
                    let Some(&m) = mults.get(&dom) else { break };
                    if m == 0 {
                        break;
                    }
                    rhs += sys.weight_root_inner(&shifted, alpha)
                        * Rat::from_integer(BigInt::from(m));
                    j += 1;
                }
            }
            let m = rhs * Rat::from_integer(BigInt::from(2)) / denom;
            if !m.is_integer() || m.is_negative() {
                return Err(Error::Internal(format!(
                    "Freudenthal produced non-integral multiplicity {} at {}",
                    m, mu
                )));
            }
            let m64 = i64::try_from(m.to_integer())
                .map_err(|_| Error::Internal("multiplicity overflow".into()))?;
            if m64 == 0 {
                return Err(Error::Internal(format!(
                    "dominant weight {} below {} has zero multiplicity",
                    mu, lam
                )));
            }
            mults.insert(mu, m64 as u64);
        }
        let ch = Arc::new(FormalCharacter {
            highest: lam.clone(),
            dominant_mults: mults,
        });
        let mut w = self.chars.write().unwrap();
        Ok(w.entry(lam.clone()).or_insert(ch).clone())
    }

    /// The full weight diagram as an explicit list of distinct weights with
    /// multiplicities.
    pub fn full_diagram(&self, lam: &Weight) -> Result<Arc<Vec<(Weight, u64)>>> {
        if let Some(d) = self.diagrams.read().unwrap().get(lam) {
            return Ok(d.clone());
        }
        let ch = self.dominant_character(lam)?;
        let mut out: Vec<(Weight, u64)> = Vec::new();
        for (w, m) in &ch.dominant_mults {
            for orbit_w in self.sys.weyl_orbit(w) {
                out.push((orbit_w, *m));
            }
        }
        out.sort();
        let d = Arc::new(out);
        let mut w = self.diagrams.write().unwrap();
        Ok(w.entry(lam.clone()).or_insert(d).clone())
    }

    /// Weyl dimension formula.
    pub fn weyl_dim(&self, lam: &Weight) -> Result<BigInt> {
        self.check_dominant(lam)?;
        let rho = self.sys.rho();
        let lam_rho = lam.add(&rho);
        let mut num = Rat::from_integer(BigInt::from(1));
        for alpha in self.sys.positive_roots() {
            let a = self.sys.weight_root_inner(&lam_rho, alpha);
            let b = self.sys.weight_root_inner(&rho, alpha);
            num *= a / b;
        }
        if !num.is_integer() {
            return Err(Error::Internal("non-integral Weyl dimension".into()));
        }
        Ok(num.to_integer())
    }

    /// Reflect `xi` into the dominant chamber; `None` when it lies on a
    /// wall. Returns the dominant representative and the sign of the Weyl
    /// element used.
    fn reflect_signed(&self, xi: &Weight) -> Option<(Weight, i64)> {
        let mut x = xi.clone();
        let mut sign = 1i64;
        loop {
            match x.0.iter().position(|&c| c < 0) {
                None => {
                    if x.0.contains(&0) {
                        return None;
                    }
                    return Some((x, sign));
                }
                Some(i) => {
                    x = self.sys.simple_reflection(i, &x);
                    sign = -sign;
                }
            }
        }
    }

    /// Multiplicity of `V(nu)` inside `V(lam) (x) V(mu)` by the alternating
    /// sum over the weight diagram of the smaller factor.
    pub fn tensor_multiplicity(&self, lam: &Weight, mu: &Weight, nu: &Weight) -> Result<i64> {
        self.check_dominant(lam)?;
        self.check_dominant(mu)?;
        self.check_dominant(nu)?;
        let (big, small) = if self.weyl_dim(lam)? >= self.weyl_dim(mu)? {
            (lam, mu)
        } else {
            (mu, lam)
        };
        let rho = self.sys.rho();
        let target = nu.add(&rho);
        let mut acc = 0i64;
        for (w, m) in self.full_diagram(small)?.iter() {
            let xi = big.add(w).add(&rho);
            if let Some((dom, sign)) = self.reflect_signed(&xi) {
                if dom == target {
                    acc += sign * (*m as i64);
                }
            }
        }
        if acc < 0 {
            return Err(Error::Internal(format!(
                "negative tensor multiplicity for {} in {} x {}",
                nu, lam, mu
            )));
        }
        Ok(acc)
    }

    /// Full decomposition of `V(lam) (x) V(mu)` as highest weight ->
    /// multiplicity.
    pub fn tensor_decompose(&self, lam: &Weight, mu: &Weight) -> Result<BTreeMap<Weight, i64>> {
        self.check_dominant(lam)?;
        self.check_dominant(mu)?;
        let (big, small) = if self.weyl_dim(lam)? >= self.weyl_dim(mu)? {
            (lam, mu)
        } else {
            (mu, lam)
        };
        let rho = self.sys.rho();
        let mut buckets: BTreeMap<Weight, i64> = BTreeMap::new();
        for (w, m) in self.full_diagram(small)?.iter() {
            let xi = big.add(w).add(&rho);
            if let Some((dom, sign)) = self.reflect_signed(&xi) {
                *buckets.entry(dom.sub(&rho)).or_insert(0) += sign * (*m as i64);
            }
        }
        buckets.retain(|_, v| *v != 0);
        for (nu, v) in &buckets {
            if *v < 0 {
                return Err(Error::Internal(format!(
                    "negative multiplicity at {} in {} x {}",
                    nu, lam, mu
                )));
            }
        }
        Ok(buckets)
    }

    /// Decompose a virtual Weyl-invariant character given as a weight
    /// multiset into irreducible multiplicities, and return the coefficient
    /// of `V(nu)`.
    fn racah_coefficient(&self, weights: &BTreeMap<Weight, i64>, nu: &Weight) -> Option<i64> {
        let rho = self.sys.rho();
        let target = nu.add(&rho);
        let mut acc = 0i64;
        for (w, c) in weights {
            let xi = w.add(&rho);
            if let Some((dom, sign)) = self.reflect_signed(&xi) {
                if dom == target {
                    acc += sign * c;
                }
            }
        }
        Some(acc)
    }

    fn square_character(&self, lam: &Weight, symmetric: bool) -> Result<BTreeMap<Weight, i64>> {
        let diagram = self.full_diagram(lam)?;
        let mut weights: BTreeMap<Weight, i64> = BTreeMap::new();
        for (i, (wi, mi)) in diagram.iter().enumerate() {
            // diagonal pairs
            let diag = if symmetric {
                (*mi as i64) * (*mi as i64 + 1) / 2
            } else {
                (*mi as i64) * (*mi as i64 - 1) / 2
            };
            if diag != 0 {
                *weights.entry(wi.add(wi)).or_insert(0) += diag;
            }
            for (wj, mj) in diagram.iter().skip(i + 1) {
                *weights.entry(wi.add(wj)).or_insert(0) += (*mi as i64) * (*mj as i64);
            }
        }
        Ok(weights)
    }

    /// Multiplicity of `V(nu)` in the symmetric square of `V(lam)`.
    pub fn sym2_multiplicity(&self, lam: &Weight, nu: &Weight) -> Result<i64> {
        self.check_dominant(lam)?;
        self.check_dominant(nu)?;
        let ch = self.square_character(lam, true)?;
        let m = self
            .racah_coefficient(&ch, nu)
            .ok_or_else(|| Error::Internal("square decomposition failed".into()))?;
        if m < 0 {
            return Err(Error::Internal("negative symmetric square multiplicity".into()));
        }
        Ok(m)
    }

    /// Multiplicity of `V(nu)` in the alternating square of `V(lam)`.
    pub fn alt2_multiplicity(&self, lam: &Weight, nu: &Weight) -> Result<i64> {
        self.check_dominant(lam)?;
        self.check_dominant(nu)?;
        let ch = self.square_character(lam, false)?;
        let m = self
            .racah_coefficient(&ch, nu)
            .ok_or_else(|| Error::Internal("square decomposition failed".into()))?;
        if m < 0 {
            return Err(Error::Internal("negative alternating square multiplicity".into()));
        }
        Ok(m)
    }
}

/// Dominant `SL(n)` weight attached to a partition with at most `n` rows:
/// consecutive part differences.
pub fn partition_to_sl_weight(p: &Partition, n: usize) -> Result<Weight> {
    if p.len() > n {
        return Err(Error::Precondition(format!(
            "partition {} has more than {} rows",
            p, n
        )));
    }
    Ok(Weight(
        (0..n - 1)
            .map(|i| p.part(i) as i64 - p.part(i + 1) as i64)
            .collect(),
    ))
}

/// Littlewood-Richardson coefficient by direct enumeration of LR skew
/// tableaux of shape `nu/lam` and content `mu`.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lam.size() + mu.size() != nu.size() || !nu.contains(lam) {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    // cells in reverse reading order: rows top to bottom, right to left
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for row in 0..nu.len() {
        let lo = lam.part(row) as usize;
        let hi = nu.part(row) as usize;
        for col in (lo..hi).rev() {
            cells.push((row, col));
        }
    }
    let mut filling: HashMap<(usize, usize), u32> = HashMap::new();
    let mut remaining: Vec<u32> = mu.parts().to_vec();
    let mut placed: Vec<u32> = vec![0; mu.len()];
    let mut count = 0u64;

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        lam: &Partition,
        filling: &mut HashMap<(usize, usize), u32>,
        remaining: &mut Vec<u32>,
        placed: &mut Vec<u32>,
        count: &mut u64,
    ) {
        if idx == cells.len() {
            *count += 1;
            return;
        }
        let (row, col) = cells[idx];
        for v in 1..=remaining.len() as u32 {
            let vi = (v - 1) as usize;
            if remaining[vi] == 0 {
                continue;
            }
            // lattice word: after placing v, #v <= #(v-1)
            if v > 1 && placed[vi] + 1 > placed[vi - 1] {
                continue;
            }
            // rows weakly increase left to right: right neighbor already filled
            if let Some(&right) = filling.get(&(row, col + 1)) {
                if v > right {
                    continue;
                }
            }
            // columns strictly increase top to bottom
            if row > 0 && col < lam.part(row - 1) as usize {
                // the cell above is part of lam, treated as smaller than all
            } else if row > 0 {
                if let Some(&above) = filling.get(&(row - 1, col)) {
                    if v <= above {
                        continue;
                    }
                } else {
                    // cell above exists in nu but is outside the skew shape
                    // only when it is inside lam, handled above
                }
            }
            filling.insert((row, col), v);
            remaining[vi] -= 1;
            placed[vi] += 1;
            rec(idx + 1, cells, lam, filling, remaining, placed, count);
            filling.remove(&(row, col));
            remaining[vi] += 1;
            placed[vi] -= 1;
        }
    }
    rec(
        0,
        &cells,
        lam,
        &mut filling,
        &mut remaining,
        &mut placed,
        &mut count,
    );
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ptn;
    use crate::rootsys::{parse_types, CartanType};

    fn ctx(s: &str) -> RepCtx {
        let sys = RootSystem::new(parse_types(s).unwrap()).unwrap();
        RepCtx::new(Arc::new(sys))
    }

    #[test]
    fn a1_three_dimensional() {
        let c = ctx("A1");
        let ch = c.dominant_character(&Weight(vec![2])).unwrap();
        assert_eq!(ch.dimension(c.sys()), BigInt::from(3));
        assert_eq!(ch.multiplicity(c.sys(), &Weight(vec![2])), 1);
        assert_eq!(ch.multiplicity(c.sys(), &Weight(vec![0])), 1);
        assert_eq!(ch.multiplicity(c.sys(), &Weight(vec![-2])), 1);
    }

    #[test]
    fn a2_adjoint() {
        let c = ctx("A2");
        let adj = Weight(vec![1, 1]);
        let ch = c.dominant_character(&adj).unwrap();
        assert_eq!(ch.dimension(c.sys()), BigInt::from(8));
        assert_eq!(ch.multiplicity(c.sys(), &Weight(vec![0, 0])), 2);
        assert_eq!(c.weyl_dim(&adj).unwrap(), BigInt::from(8));
    }

    #[test]
    fn d5_adjoint() {
        let c = ctx("D5");
        let theta = Weight(vec![0, 1, 0, 0, 0]);
        let ch = c.dominant_character(&theta).unwrap();
        assert_eq!(ch.dimension(c.sys()), BigInt::from(45));
        assert_eq!(ch.multiplicity(c.sys(), &Weight::zero(5)), 5);
        assert_eq!(c.weyl_dim(&theta).unwrap(), BigInt::from(45));
    }

    #[test]
    fn weyl_dims() {
        assert_eq!(ctx("A1").weyl_dim(&Weight(vec![3])).unwrap(), BigInt::from(4));
        assert_eq!(ctx("A2").weyl_dim(&Weight(vec![1, 0])).unwrap(), BigInt::from(3));
    }

    #[test]
    fn characters_weyl_invariant() {
        let c = ctx("B2");
        let ch = c.dominant_character(&Weight(vec![1, 1])).unwrap();
        let diagram = c.full_diagram(&Weight(vec![1, 1])).unwrap();
        for (w, m) in diagram.iter() {
            for i in 0..2 {
                let refl = c.sys().simple_reflection(i, w);
                assert_eq!(ch.multiplicity(c.sys(), &refl), *m);
            }
        }
        let total: BigInt = diagram
            .iter()
            .map(|(_, m)| BigInt::from(*m))
            .sum();
        assert_eq!(total, c.weyl_dim(&Weight(vec![1, 1])).unwrap());
    }

    #[test]
    fn clebsch_gordan() {
        let c = ctx("A1");
        let two = Weight(vec![2]);
        assert_eq!(c.tensor_multiplicity(&two, &two, &two).unwrap(), 1);
        assert_eq!(c.tensor_multiplicity(&two, &two, &Weight(vec![0])).unwrap(), 1);
        assert_eq!(c.tensor_multiplicity(&two, &two, &Weight(vec![4])).unwrap(), 1);
        assert_eq!(c.tensor_multiplicity(&two, &two, &Weight(vec![1])).unwrap(), 0);
    }

    #[test]
    fn a2_adjoint_square() {
        let c = ctx("A2");
        let adj = Weight(vec![1, 1]);
        assert_eq!(c.tensor_multiplicity(&adj, &adj, &adj).unwrap(), 2);
        // dimension check: sum over the decomposition
        let dec = c.tensor_decompose(&adj, &adj).unwrap();
        let mut total = BigInt::zero();
        for (nu, m) in dec {
            total += c.weyl_dim(&nu).unwrap() * BigInt::from(m);
        }
        assert_eq!(total, BigInt::from(64));
    }

    #[test]
    fn d5_adjoint_square() {
        let c = ctx("D5");
        let theta = Weight(vec![0, 1, 0, 0, 0]);
        assert_eq!(c.tensor_multiplicity(&theta, &theta, &theta).unwrap(), 1);
        assert_eq!(c.sym2_multiplicity(&theta, &theta).unwrap(), 0);
        assert_eq!(c.alt2_multiplicity(&theta, &theta).unwrap(), 1);
    }

    #[test]
    fn a4_adjoint_square() {
        let c = ctx("A4");
        let theta = Weight(vec![1, 0, 0, 1]);
        assert_eq!(c.tensor_multiplicity(&theta, &theta, &theta).unwrap(), 2);
        assert_eq!(c.sym2_multiplicity(&theta, &theta).unwrap(), 1);
        assert_eq!(c.alt2_multiplicity(&theta, &theta).unwrap(), 1);
    }

    #[test]
    fn squares_sum_to_tensor() {
        let c = ctx("B2");
        let lams = [Weight(vec![1, 0]), Weight(vec![0, 1]), Weight(vec![1, 1])];
        for lam in &lams {
            let dec = c.tensor_decompose(lam, lam).unwrap();
            for (nu, m) in dec {
                let s = c.sym2_multiplicity(lam, &nu).unwrap();
                let a = c.alt2_multiplicity(lam, &nu).unwrap();
                assert_eq!(s + a, m, "lam={} nu={}", lam, nu);
            }
        }
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&ptn![1], &ptn![1], &ptn![2]), 1);
        assert_eq!(lr_coefficient(&ptn![1], &ptn![1], &ptn![1, 1]), 1);
        assert_eq!(lr_coefficient(&ptn![2, 1], &ptn![2, 1], &ptn![3, 2, 1]), 2);
        assert_eq!(lr_coefficient(&ptn![1], &ptn![1], &ptn![3]), 0);
        assert_eq!(lr_coefficient(&ptn![2], &ptn![1, 1], &ptn![2, 1, 1]), 1);
        assert_eq!(lr_coefficient(&ptn![], &ptn![2, 1], &ptn![2, 1]), 1);
    }

    #[test]
    fn lr_matches_tensor_on_sl3() {
        let c = ctx("A2");
        let n = 3usize;
        let parts: Vec<Partition> = (0..=4u32)
            .flat_map(crate::partition::partitions_of)
            .filter(|p| p.len() <= n)
            .collect();
        for lam in &parts {
            for mu in &parts {
                if lam.size() + mu.size() > 4 {
                    continue;
                }
                let wl = partition_to_sl_weight(lam, n).unwrap();
                let wm = partition_to_sl_weight(mu, n).unwrap();
                for nu in crate::partition::partitions_of(lam.size() + mu.size()) {
                    if nu.len() > n {
                        continue;
                    }
                    let wn = partition_to_sl_weight(&nu, n).unwrap();
                    let t = c.tensor_multiplicity(&wl, &wm, &wn).unwrap();
                    let l = lr_coefficient(lam, mu, &nu) as i64;
                    assert_eq!(t, l, "lam={} mu={} nu={}", lam, mu, nu);
                }
            }
        }
    }

    #[test]
    fn type_parse_roundtrip() {
        let t = CartanType::parse("D5").unwrap();
        assert_eq!(t.to_string(), "D5");
    }
}
