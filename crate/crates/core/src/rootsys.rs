//! Root systems of the classical and exceptional series, with exact pairing
//! data. Roots are integer vectors in simple-root coordinates, weights are
//! integer vectors in fundamental-weight coordinates, and the bridge between
//! the two is the Cartan matrix together with its symmetrizer.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::param::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CartanType {
    pub series: Series,
    pub rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B => rank >= 2,
            Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => rank == 6 || rank == 7,
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(CartanType { series, rank })
        } else {
            Err(Error::UnsupportedType(format!(
                "{}{}",
                series_letter(series),
                rank
            )))
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() < 2 {
            return Err(Error::UnsupportedType(s.to_string()));
        }
        let (letter, rank) = s.split_at(1);
        let series = match letter {
            "A" => Series::A,
            "B" => Series::B,
            "C" => Series::C,
            "D" => Series::D,
            "E" => Series::E,
            "F" => Series::F,
            "G" => Series::G,
            _ => return Err(Error::UnsupportedType(s.to_string())),
        };
        let rank: usize = rank
            .parse()
            .map_err(|_| Error::UnsupportedType(s.to_string()))?;
        CartanType::new(series, rank)
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::E => match n {
                6 => 36,
                7 => 63,
                _ => unreachable!(),
            },
            Series::F => 24,
            Series::G => 6,
        }
    }
}

fn series_letter(s: Series) -> char {
    match s {
        Series::A => 'A',
        Series::B => 'B',
        Series::C => 'C',
        Series::D => 'D',
        Series::E => 'E',
        Series::F => 'F',
        Series::G => 'G',
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", series_letter(self.series), self.rank)
    }
}

pub fn format_types(types: &[CartanType]) -> String {
    if types.is_empty() {
        return "0".to_string();
    }
    types
        .iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join("x")
}

pub fn parse_types(s: &str) -> Result<Vec<CartanType>> {
    if s.trim() == "0" {
        return Ok(Vec::new());
    }
    s.split('x').map(CartanType::parse).collect()
}

/// A root in simple-root coordinates.
pub type Root = Vec<i64>;

/// A weight in fundamental-weight coordinates of the owning system.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, "]")
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

/// A (possibly reducible) root system with fixed base.
pub struct RootSystem {
    types: Vec<CartanType>,
    rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`
    cartan: Vec<Vec<i64>>,
    /// symmetrizer: `d[i] = (alpha_i, alpha_i)/2`, making `d[i]*cartan[i][j]` symmetric
    d: Vec<Rat>,
    positive_roots: Vec<Root>,
    root_set: HashSet<Root>,
    component_of: Vec<usize>,
    /// rational inverse of the Cartan matrix
    inv_cartan: Vec<Vec<Rat>>,
}

impl RootSystem {
    pub fn new(types: Vec<CartanType>) -> Result<Self> {
        let rank: usize = types.iter().map(|t| t.rank).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut d = vec![Rat::one(); rank];
        let mut component_of = vec![0usize; rank];
        let mut offset = 0;
        for (ci, t) in types.iter().enumerate() {
            let (block, dvals) = cartan_block(t);
            for i in 0..t.rank {
                component_of[offset + i] = ci;
                d[offset + i] = dvals[i].clone();
                for j in 0..t.rank {
                    cartan[offset + i][offset + j] = block[i][j];
                }
            }
            offset += t.rank;
        }
        let inv_cartan = invert_rational(&cartan);
        let mut sys = RootSystem {
            types,
            rank,
            cartan,
            d,
            positive_roots: Vec::new(),
            root_set: HashSet::new(),
            component_of,
            inv_cartan,
        };
        sys.generate_roots()?;
        Ok(sys)
    }

    pub fn simple(t: CartanType) -> Result<Self> {
        RootSystem::new(vec![t])
    }

    pub fn types(&self) -> &[CartanType] {
        &self.types
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.root_set.contains(r)
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let mut r = vec![0i64; self.rank];
        r[i] = 1;
        r
    }

    fn generate_roots(&mut self) -> Result<()> {
        let mut all: HashSet<Root> = HashSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..self.rank {
            let r = self.simple_root(i);
            all.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(r) = queue.pop_front() {
            for i in 0..self.rank {
                let pairing: i64 = (0..self.rank).map(|j| self.cartan[i][j] * r[j]).sum();
                let mut refl = r.clone();
                refl[i] -= pairing;
                if all.insert(refl.clone()) {
                    queue.push_back(refl);
                }
            }
        }
        let mut positives: Vec<Root> = all
            .iter()
            .filter(|r| r.iter().all(|&c| c >= 0) && r.iter().any(|&c| c != 0))
            .cloned()
            .collect();
        positives.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        let expected: usize = self.types.iter().map(|t| t.positive_root_count()).sum();
        if positives.len() != expected {
            return Err(Error::Internal(format!(
                "positive root count {} does not match expected {} for {}",
                positives.len(),
                expected,
                format_types(&self.types)
            )));
        }
        self.root_set = all;
        self.positive_roots = positives;
        Ok(())
    }

    /// Inner product of two vectors in simple-root coordinates.
    pub fn root_inner(&self, a: &Root, b: &Root) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b[j] == 0 || self.cartan[i][j] == 0 {
                    continue;
                }
                acc += &self.d[i]
                    * Rat::from_integer(BigInt::from(self.cartan[i][j]))
                    * Rat::from_integer(BigInt::from(a[i] * b[j]));
            }
        }
        acc
    }

    /// Fundamental-weight coordinates of a vector given in simple-root
    /// coordinates: the Cartan matrix applied to it.
    pub fn root_to_weight(&self, r: &Root) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * r[j]).sum())
                .collect(),
        )
    }

    /// Simple-root coordinates of a weight when it lies in the root lattice.
    pub fn weight_to_root(&self, w: &Weight) -> Option<Root> {
        let a: Vec<Vec<i64>> = (0..self.rank)
            .map(|j| (0..self.rank).map(|i| self.cartan[i][j]).collect())
            .collect();
        let coords = linalg::integer_coordinates(&a, &w.0)?;
        let mut out = Vec::with_capacity(self.rank);
        for c in coords {
            let v: i64 = i64::try_from(&c).ok()?;
            out.push(v);
        }
        Some(out)
    }

    /// Inner product of two weights in fundamental-weight coordinates.
    pub fn weight_inner(&self, a: &Weight, b: &Weight) -> Rat {
        // convert b to (rational) simple-root coordinates first
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            if a.0[i] == 0 {
                continue;
            }
            let mut bi = Rat::zero();
            for j in 0..self.rank {
                if b.0[j] != 0 {
                    bi += &self.inv_cartan[i][j] * Rat::from_integer(BigInt::from(b.0[j]));
                }
            }
            acc += &self.d[i] * Rat::from_integer(BigInt::from(a.0[i])) * bi;
        }
        acc
    }

    /// `(w, beta)` for a weight in fundamental-weight coordinates and a
    /// vector in simple-root coordinates.
    pub fn weight_root_inner(&self, w: &Weight, beta: &Root) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.rank {
            if w.0[i] == 0 || beta[i] == 0 {
                continue;
            }
            acc += &self.d[i] * Rat::from_integer(BigInt::from(w.0[i] * beta[i]));
        }
        acc
    }

    /// `<w, beta^vee> = 2 (w, beta) / (beta, beta)`, exact and integral for
    /// lattice weights and roots.
    pub fn pairing_with_coroot(&self, w: &Weight, beta: &Root) -> Result<i64> {
        let num = self.weight_root_inner(w, beta) * Rat::from_integer(BigInt::from(2));
        let den = self.root_inner(beta, beta);
        if den.is_zero() {
            return Err(Error::Internal("coroot of the zero vector".into()));
        }
        let q = num / den;
        if !q.is_integer() {
            return Err(Error::Internal(format!(
                "non-integral coroot pairing for {} and {:?}",
                w, beta
            )));
        }
        i64::try_from(q.to_integer())
            .map_err(|_| Error::Internal("coroot pairing overflow".into()))
    }

    /// Reflect a weight in the hyperplane of the `i`-th simple root.
    pub fn simple_reflection(&self, i: usize, w: &Weight) -> Weight {
        let c = w.0[i];
        if c == 0 {
            return w.clone();
        }
        Weight(
            (0..self.rank)
                .map(|j| w.0[j] - c * self.cartan[j][i])
                .collect(),
        )
    }

    /// Full Weyl group orbit of a weight.
    pub fn weyl_orbit(&self, w: &Weight) -> BTreeSet<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank {
                let y = self.simple_reflection(i, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Dominant representative of the Weyl orbit of `w`.
    pub fn dominant_representative(&self, w: &Weight) -> Weight {
        let mut x = w.clone();
        loop {
            match x.0.iter().position(|&c| c < 0) {
                None => return x,
                Some(i) => x = self.simple_reflection(i, &x),
            }
        }
    }

    /// The highest root, for an irreducible system.
    pub fn highest_root(&self) -> Result<Root> {
        if self.types.len() != 1 {
            return Err(Error::Precondition(
                "highest root requires an irreducible system".into(),
            ));
        }
        Ok(self
            .positive_roots
            .last()
            .expect("nonempty root system")
            .clone())
    }

    pub fn component_of_root(&self, r: &Root) -> usize {
        let i = r.iter().position(|&c| c != 0).expect("nonzero root");
        self.component_of[i]
    }

    /// Sum of the fundamental weights, in fundamental-weight coordinates.
    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    /// True when neither the sum nor the difference of the two roots is a
    /// root. A root is never strongly orthogonal to itself or its negative.
    pub fn strongly_orthogonal(&self, beta: &Root, gamma: &Root) -> Result<bool> {
        if !self.is_root(beta) || !self.is_root(gamma) {
            return Err(Error::Precondition("inputs must be roots".into()));
        }
        let neg: Root = gamma.iter().map(|c| -c).collect();
        if beta == gamma || *beta == neg {
            return Ok(false);
        }
        let sum: Root = beta.iter().zip(gamma).map(|(a, b)| a + b).collect();
        let diff: Root = beta.iter().zip(gamma).map(|(a, b)| a - b).collect();
        Ok(!self.is_root(&sum) && !self.is_root(&diff))
    }

    /// All unordered decompositions of `sigma` as a sum of two strongly
    /// orthogonal positive roots.
    pub fn strongly_orthogonal_decompositions(&self, sigma: &Root) -> Vec<(Root, Root)> {
        let mut out = Vec::new();
        for beta in &self.positive_roots {
            let gamma: Root = sigma.iter().zip(beta).map(|(s, b)| s - b).collect();
            if gamma.iter().any(|&c| c < 0) || gamma.iter().all(|&c| c == 0) {
                continue;
            }
            if !self.is_root(&gamma) {
                continue;
            }
            if beta > &gamma {
                continue; // each unordered pair once
            }
            if self
                .strongly_orthogonal(beta, &gamma)
                .expect("both are roots")
            {
                out.push((beta.clone(), gamma.clone()));
            }
        }
        out
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({})", format_types(&self.types))
    }
}

/// Cartan matrix of a simple type in Bourbaki numbering.
pub fn standard_cartan(t: &CartanType) -> Vec<Vec<i64>> {
    cartan_block(t).0
}

fn invert_rational(a: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    let m = linalg::rmat_from_i64(a);
    linalg::invert(&m).expect("Cartan matrix is invertible")
}

fn cartan_block(t: &CartanType) -> (Vec<Vec<i64>>, Vec<Rat>) {
    let n = t.rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>| {
        for i in 0..n - 1 {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    let mut d = vec![Rat::one(); n];
    match t.series {
        Series::A => {
            if n > 1 {
                chain(&mut a);
            }
        }
        Series::B => {
            chain(&mut a);
            // alpha_n short
            a[n - 1][n - 2] = -2;
            a[n - 2][n - 1] = -1;
            d[n - 1] = Rat::new(BigInt::one(), BigInt::from(2));
        }
        Series::C => {
            chain(&mut a);
            // alpha_n long
            a[n - 1][n - 2] = -1;
            a[n - 2][n - 1] = -2;
            d[n - 1] = Rat::from_integer(BigInt::from(2));
        }
        Series::D => {
            for i in 0..n - 2 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        Series::E => {
            let edges: &[(usize, usize)] = if n == 6 {
                &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
            } else {
                &[(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)]
            };
            for &(u, v) in edges {
                a[u - 1][v - 1] = -1;
                a[v - 1][u - 1] = -1;
            }
        }
        Series::F => {
            chain(&mut a);
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            a[2][1] = -2;
            a[1][2] = -1;
            d[2] = Rat::new(BigInt::one(), BigInt::from(2));
            d[3] = Rat::new(BigInt::one(), BigInt::from(2));
        }
        Series::G => {
            // alpha_1 short, alpha_2 long
            a[0][1] = -3;
            a[1][0] = -1;
            d[1] = Rat::from_integer(BigInt::from(3));
        }
    }
    (a, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::new(parse_types(s).unwrap()).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(sys("A2").positive_roots().len(), 3);
        assert_eq!(sys("B3").positive_roots().len(), 9);
        assert_eq!(sys("C4").positive_roots().len(), 16);
        assert_eq!(sys("D5").positive_roots().len(), 20);
        assert_eq!(sys("E6").positive_roots().len(), 36);
        assert_eq!(sys("E7").positive_roots().len(), 63);
        assert_eq!(sys("F4").positive_roots().len(), 24);
        assert_eq!(sys("G2").positive_roots().len(), 6);
        assert_eq!(sys("A1xC2").positive_roots().len(), 5);
    }

    #[test]
    fn reflections_preserve_roots() {
        for name in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let s = sys(name);
            for r in s.positive_roots() {
                for i in 0..s.rank() {
                    let w = s.root_to_weight(r);
                    let refl = s.simple_reflection(i, &w);
                    let back = s.weight_to_root(&refl).expect("still in root lattice");
                    assert!(
                        s.is_root(&back),
                        "reflection left the root system in {}",
                        name
                    );
                }
            }
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(sys("A2").highest_root().unwrap(), vec![1, 1]);
        assert_eq!(sys("G2").highest_root().unwrap(), vec![3, 2]);
        assert_eq!(sys("D5").highest_root().unwrap(), vec![1, 2, 2, 1, 1]);
        assert_eq!(sys("E6").highest_root().unwrap(), vec![1, 2, 2, 3, 2, 1]);
    }

    #[test]
    fn adjoint_weight_of_d5() {
        let s = sys("D5");
        let theta = s.highest_root().unwrap();
        assert_eq!(s.root_to_weight(&theta), Weight(vec![0, 1, 0, 0, 0]));
    }

    #[test]
    fn strongly_orthogonal_examples() {
        let a2 = sys("A2");
        let a = a2.simple_root(0);
        let b = a2.simple_root(1);
        assert!(!a2.strongly_orthogonal(&a, &b).unwrap());
        assert!(!a2.strongly_orthogonal(&a, &a).unwrap());

        let a3 = sys("A3");
        let alpha1 = a3.simple_root(0);
        let alpha3 = a3.simple_root(2);
        assert!(a3.strongly_orthogonal(&alpha1, &alpha3).unwrap());
        let adjacent = vec![0, 1, 1];
        assert!(!a3.strongly_orthogonal(&alpha1, &adjacent).unwrap());
        assert!(a3.strongly_orthogonal(&alpha1, &vec![1, 2, 1]).is_err());
    }

    #[test]
    fn strongly_orthogonal_decompositions_b3() {
        // 2 eps_1 = (eps_1 - eps_2) + (eps_1 + eps_2) and
        //           (eps_1 - eps_3) + (eps_1 + eps_3)
        let b3 = sys("B3");
        let sigma = vec![2, 2, 2];
        let decs = b3.strongly_orthogonal_decompositions(&sigma);
        assert_eq!(decs.len(), 2);
        for (beta, gamma) in &decs {
            let w = Weight(vec![1, 0, 0]); // omega_1
            let pb = b3.pairing_with_coroot(&w, beta).unwrap();
            let pg = b3.pairing_with_coroot(&w, gamma).unwrap();
            assert_eq!(pb, pg);
            assert_eq!(pb, 1);
        }
    }

    #[test]
    fn pairing_values() {
        let b2 = sys("B2");
        let w = Weight(vec![0, 1]);
        let alpha2 = b2.simple_root(1);
        assert_eq!(b2.pairing_with_coroot(&w, &alpha2).unwrap(), 1);
        // long root alpha_1 + 2 alpha_2 = eps_1 + eps_2
        let long = vec![1, 2];
        assert!(b2.is_root(&long));
        assert_eq!(
            b2.pairing_with_coroot(&Weight(vec![1, 0]), &long).unwrap(),
            1
        );
    }

    #[test]
    fn dominant_representative_terminates() {
        let d4 = sys("D4");
        let w = Weight(vec![-3, 2, -1, 0]);
        let dom = d4.dominant_representative(&w);
        assert!(dom.is_dominant());
        assert!(d4.weyl_orbit(&dom).contains(&w));
    }

    #[test]
    fn weyl_orbit_size() {
        let a2 = sys("A2");
        assert_eq!(a2.weyl_orbit(&Weight(vec![1, 1])).len(), 6);
        assert_eq!(a2.weyl_orbit(&Weight(vec![1, 0])).len(), 3);
    }
}
