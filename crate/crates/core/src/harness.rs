//! Scan harness: enumerate bounded weight triples, compare the product
//! oracle against the tensor/order predicate, scan the structure constants
//! for negative coefficients, run the isogeny suite and reproduce the
//! counterexample computation. Every run produces a machine readable
//! report; disagreements never abort a scan, they are collected as
//! replayable witnesses.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jack::JackRing;
use crate::partition::{partitions_of, Partition};
use crate::repcalc::RepCtx;
use crate::rootsys::{CartanType, RootSystem, Series, Weight};
use crate::sphdata::{
    conjecture_rhs, default_params, instantiate_case, jack_oracle_lhs, verify_isogeny,
    DictOrientation, IsogenyReport, SphericalPairCase,
};

/// Outcome of one weight triple.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TripleVerdict {
    pub case_id: String,
    pub params: BTreeMap<String, i64>,
    pub lam: Vec<i64>,
    pub mu: Vec<i64>,
    pub nu: Vec<i64>,
    /// `None` when no oracle is available for the case.
    pub lhs: Option<bool>,
    pub rhs_tensor: bool,
    pub rhs_order: bool,
    pub agree: Option<bool>,
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct ScanCounts {
    pub triples: u64,
    pub agreements: u64,
    pub disagreements: u64,
    pub lhs_unavailable: u64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct StanleyWitness {
    pub lam: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub constant: String,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CounterexampleCheck {
    pub name: String,
    pub expected: i64,
    pub got: i64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
#[serde(tag = "kind")]
pub enum ReportBody {
    ConjectureScan {
        counts: ScanCounts,
        witnesses: Vec<TripleVerdict>,
        #[serde(skip_serializing_if = "Option::is_none")]
        verdicts: Option<Vec<TripleVerdict>>,
    },
    StanleyScan {
        pairs: u64,
        constants: u64,
        violations: Vec<StanleyWitness>,
    },
    IsogenySuite {
        entries: Vec<IsogenyReport>,
        all_pass: bool,
    },
    Counterexample {
        checks: Vec<CounterexampleCheck>,
        all_pass: bool,
    },
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConfigEcho {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<u32>,
    pub dictionary: String,
    pub degree_cap: u32,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub config: ConfigEcho,
    #[serde(flatten)]
    pub body: ReportBody,
    pub wall_ms: u128,
}

impl RunReport {
    /// True when the run found nothing wrong; drives the exit status.
    pub fn ok(&self) -> bool {
        match &self.body {
            ReportBody::ConjectureScan { counts, .. } => counts.disagreements == 0,
            ReportBody::StanleyScan { violations, .. } => violations.is_empty(),
            ReportBody::IsogenySuite { all_pass, .. } => *all_pass,
            ReportBody::Counterexample { all_pass, .. } => *all_pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    /// Copy with the wall time zeroed, for bit-identity comparisons.
    pub fn normalized(&self) -> RunReport {
        let mut r = self.clone();
        r.wall_ms = 0;
        r
    }
}

fn dict_name(d: DictOrientation) -> String {
    match d {
        DictOrientation::Default => "default".to_string(),
        DictOrientation::Alt => "alt".to_string(),
    }
}

/// All triples `(lam, mu, nu)` of the case with `deg(lam) + deg(mu)` at
/// most the bound, `nu` in the monoid and dominant for the datum, within
/// the degree of the pair, and with `lam + mu - nu` in the ambient root
/// lattice. Deterministic order.
pub fn enumerate_triples(
    case: &SphericalPairCase,
    bound: i64,
) -> Result<Vec<(Vec<i64>, Vec<i64>, Vec<i64>)>> {
    let elements = case.monoid_elements(bound)?;
    let mut per_budget: BTreeMap<i64, Vec<Vec<i64>>> = BTreeMap::new();
    let mut out = Vec::new();
    for lam in &elements {
        let dl = case.degree(lam)?;
        for mu in &elements {
            let dm = case.degree(mu)?;
            if dl + dm > bound {
                continue;
            }
            let budget = dl + dm;
            let lam_fw = case.weight_fw(lam)?;
            let mu_fw = case.weight_fw(mu)?;
            if let std::collections::btree_map::Entry::Vacant(e) = per_budget.entry(budget) {
                e.insert(case.monoid_elements(budget)?);
            }
            for nu in &per_budget[&budget] {
                if !case.datum.is_dominant(nu) {
                    continue;
                }
                let nu_fw = case.weight_fw(nu)?;
                let diff = lam_fw.add(&mu_fw).sub(&nu_fw);
                if case.ambient.weight_to_root(&diff).is_none() {
                    continue;
                }
                out.push((lam.clone(), mu.clone(), nu.clone()));
            }
        }
    }
    Ok(out)
}

/// Compare the oracle against the tensor/order predicate on every bounded
/// triple of the case. Pairs are scanned in parallel; the verdict list is
/// independent of the worker count.
pub fn run_conjecture_check(
    ring: &JackRing,
    case: &Arc<SphericalPairCase>,
    bound: i64,
    record_all: bool,
    command: String,
) -> Result<RunReport> {
    let start = Instant::now();
    let triples = enumerate_triples(case, bound)?;
    let verdicts: Vec<TripleVerdict> = triples
        .par_iter()
        .map(|(lam, mu, nu)| -> Result<TripleVerdict> {
            let (rhs_tensor, rhs_order) = conjecture_rhs(case, lam, mu, nu)?;
            let lhs = match jack_oracle_lhs(ring, case, lam, mu, nu) {
                Ok(v) => Some(v),
                Err(Error::OracleUnavailable(_)) => None,
                Err(e) => return Err(e),
            };
            let agree = lhs.map(|l| l == (rhs_tensor && rhs_order));
            Ok(TripleVerdict {
                case_id: case.id.clone(),
                params: case.params.clone(),
                lam: lam.clone(),
                mu: mu.clone(),
                nu: nu.clone(),
                lhs,
                rhs_tensor,
                rhs_order,
                agree,
            })
        })
        .collect::<Result<_>>()?;

    let mut counts = ScanCounts {
        triples: verdicts.len() as u64,
        ..Default::default()
    };
    let mut witnesses = Vec::new();
    for v in &verdicts {
        match v.agree {
            Some(true) => counts.agreements += 1,
            Some(false) => {
                counts.disagreements += 1;
                witnesses.push(v.clone());
            }
            None => counts.lhs_unavailable += 1,
        }
    }
    Ok(RunReport {
        command,
        config: ConfigEcho {
            case: Some(case.id.clone()),
            params: case.params.clone(),
            bound: Some(bound),
            max_degree: None,
            dictionary: "default".to_string(),
            degree_cap: ring.cap(),
        },
        body: ReportBody::ConjectureScan {
            counts,
            witnesses,
            verdicts: if record_all { Some(verdicts) } else { None },
        },
        wall_ms: start.elapsed().as_millis(),
    })
}

/// Check integrality of every structure constant with `|lam| + |mu|` up to
/// the bound and report any negative coefficient as a witness.
pub fn run_stanley_scan(ring: &JackRing, max_degree: u32, command: String) -> Result<RunReport> {
    let start = Instant::now();
    let mut pairs: Vec<(Partition, Partition)> = Vec::new();
    for total in 0..=max_degree {
        for a in 0..=total / 2 {
            let b = total - a;
            for lam in partitions_of(a) {
                for mu in partitions_of(b) {
                    pairs.push((lam.clone(), mu.clone()));
                }
            }
        }
    }
    let results: Vec<(u64, Vec<StanleyWitness>)> = pairs
        .par_iter()
        .map(|(lam, mu)| -> Result<(u64, Vec<StanleyWitness>)> {
            let table = ring.structure_constants(lam, mu)?;
            let mut violations = Vec::new();
            for (nu, g) in table.iter() {
                if !g.has_integer_coeffs() {
                    return Err(Error::Internal(format!(
                        "non-integral structure constant g_({},{})^{} = {}",
                        lam, mu, nu, g
                    )));
                }
                if !g.has_nonneg_integer_coeffs() {
                    violations.push(StanleyWitness {
                        lam: lam.clone(),
                        mu: mu.clone(),
                        nu: nu.clone(),
                        constant: g.to_string(),
                    });
                }
            }
            Ok((table.len() as u64, violations))
        })
        .collect::<Result<_>>()?;
    let mut constants = 0u64;
    let mut violations = Vec::new();
    for (c, v) in results {
        constants += c;
        violations.extend(v);
    }
    Ok(RunReport {
        command,
        config: ConfigEcho {
            case: None,
            params: BTreeMap::new(),
            bound: None,
            max_degree: Some(max_degree),
            dictionary: "default".to_string(),
            degree_cap: ring.cap(),
        },
        body: ReportBody::StanleyScan {
            pairs: pairs.len() as u64,
            constants,
            violations,
        },
        wall_ms: start.elapsed().as_millis(),
    })
}

/// The default grid of cases with isogeny data.
pub fn isogeny_grid() -> Vec<(String, BTreeMap<String, i64>)> {
    let mut grid: Vec<(String, BTreeMap<String, i64>)> = Vec::new();
    let with_n = |id: &str, ns: &[i64]| -> Vec<(String, BTreeMap<String, i64>)> {
        ns.iter()
            .map(|&n| {
                let mut p = BTreeMap::new();
                p.insert("n".to_string(), n);
                (id.to_string(), p)
            })
            .collect()
    };
    grid.extend(with_n("Sph.A6", &[3, 4]));
    grid.extend(with_n("Sph.A8", &[2, 3, 4]));
    grid.extend(with_n("Sph.A10", &[2, 3, 4]));
    grid.push(("Sph.A12".to_string(), BTreeMap::new()));
    grid.push(("Sph.A13".to_string(), BTreeMap::new()));
    grid.push(("Sph.A14".to_string(), BTreeMap::new()));
    grid.push(("Sph.A16".to_string(), BTreeMap::new()));
    grid.extend(with_n("Sph.A17x", &[2, 3, 4]));
    for p in 3..=6 {
        let mut m = BTreeMap::new();
        m.insert("p".to_string(), p);
        grid.push(("ModelB".to_string(), m));
    }
    grid
}

/// Verify every case that factors through symmetric varieties, over the
/// default parameter grid.
pub fn run_isogeny_suite(command: String) -> Result<RunReport> {
    let start = Instant::now();
    let mut entries = Vec::new();
    for (id, params) in isogeny_grid() {
        let case = instantiate_case(&id, &params, DictOrientation::Default)?;
        entries.push(verify_isogeny(&case)?);
    }
    let all_pass = entries.iter().all(|e| e.pass);
    Ok(RunReport {
        command,
        config: ConfigEcho {
            case: None,
            params: BTreeMap::new(),
            bound: None,
            max_degree: None,
            dictionary: "default".to_string(),
            degree_cap: 0,
        },
        body: ReportBody::IsogenySuite { entries, all_pass },
        wall_ms: start.elapsed().as_millis(),
    })
}

/// Reproduce the character-level counterexample to the naive rule, and the
/// contrast case where the naive rule survives.
pub fn run_counterexample(command: String) -> Result<RunReport> {
    let start = Instant::now();
    let mut checks = Vec::new();
    let push = |name: &str, expected: i64, got: i64, checks: &mut Vec<CounterexampleCheck>| {
        checks.push(CounterexampleCheck {
            name: name.to_string(),
            expected,
            got,
            pass: expected == got,
        });
    };

    let adjoint_data = |types: Vec<CartanType>| -> Result<(RepCtx, Weight)> {
        let sys = Arc::new(RootSystem::new(types)?);
        let theta = sys.root_to_weight(&sys.highest_root()?);
        Ok((RepCtx::new(sys), theta))
    };

    // orthogonal Grassmannian side: the adjoint component occurs once in
    // the tensor square but not in the symmetric square, while the order
    // condition holds, so the naive rule admits a triple that the product
    // of spherical functions excludes
    {
        let (ctx, theta) = adjoint_data(vec![CartanType::new(Series::D, 5)?])?;
        push(
            "D5 adjoint tensor square multiplicity",
            1,
            ctx.tensor_multiplicity(&theta, &theta, &theta)?,
            &mut checks,
        );
        push(
            "D5 adjoint symmetric square multiplicity",
            0,
            ctx.sym2_multiplicity(&theta, &theta)?,
            &mut checks,
        );
        push(
            "D5 adjoint alternating square multiplicity",
            1,
            ctx.alt2_multiplicity(&theta, &theta)?,
            &mut checks,
        );
        let he4a = instantiate_case("He.4a", &{
            let mut m = BTreeMap::new();
            m.insert("p".to_string(), 2);
            m
        }, DictOrientation::Default)?;
        let theta_coords = [1, 0];
        push(
            "D5 order condition theta <= 2 theta",
            1,
            i64::from(case_order(&he4a, &theta_coords)?),
            &mut checks,
        );
    }

    // linear contrast case: multiplicity two, one copy symmetric, so the
    // product keeps the adjoint component
    {
        let (ctx, theta) = adjoint_data(vec![CartanType::new(Series::A, 4)?])?;
        push(
            "A4 adjoint tensor square multiplicity",
            2,
            ctx.tensor_multiplicity(&theta, &theta, &theta)?,
            &mut checks,
        );
        push(
            "A4 adjoint symmetric square multiplicity",
            1,
            ctx.sym2_multiplicity(&theta, &theta)?,
            &mut checks,
        );
    }

    // exceptional Hermitian case behaves like the orthogonal one
    {
        let (ctx, theta) = adjoint_data(vec![CartanType::new(Series::E, 6)?])?;
        push(
            "E6 adjoint tensor square multiplicity",
            1,
            ctx.tensor_multiplicity(&theta, &theta, &theta)?,
            &mut checks,
        );
        push(
            "E6 adjoint symmetric square multiplicity",
            0,
            ctx.sym2_multiplicity(&theta, &theta)?,
            &mut checks,
        );
    }

    let all_pass = checks.iter().all(|c| c.pass);
    Ok(RunReport {
        command,
        config: ConfigEcho {
            case: None,
            params: BTreeMap::new(),
            bound: None,
            max_degree: None,
            dictionary: "default".to_string(),
            degree_cap: 0,
        },
        body: ReportBody::Counterexample { checks, all_pass },
        wall_ms: start.elapsed().as_millis(),
    })
}

fn case_order(case: &SphericalPairCase, theta: &[i64]) -> Result<bool> {
    case.order_leq_x(theta, theta, theta)
}

/// Scan grid backing the default verification suite: cases whose scans are
/// consequences of the rank one product rule, then the open cases where a
/// disagreement would be a reportable discovery rather than a failure.
pub fn theorem_backed_grid() -> Vec<(String, BTreeMap<String, i64>)> {
    let mut grid: Vec<(String, BTreeMap<String, i64>)> = Vec::new();
    let n = |v: i64| {
        let mut m = BTreeMap::new();
        m.insert("n".to_string(), v);
        m
    };
    for v in 5..=8 {
        grid.push(("Sym.A4".to_string(), n(v)));
    }
    grid.push(("Sym.A1".to_string(), n(2)));
    grid.push(("Sph.A6".to_string(), n(3)));
    grid.push(("Sph.A6".to_string(), n(4)));
    grid.push(("Sph.A7".to_string(), n(3)));
    grid.push(("Sph.A7".to_string(), n(4)));
    grid.push(("Sph.A10".to_string(), n(2)));
    grid.push(("Sph.A10".to_string(), n(3)));
    grid.push(("Sph.A11".to_string(), n(3)));
    grid.push(("Sph.A11".to_string(), n(4)));
    grid.push(("Sph.A12".to_string(), BTreeMap::new()));
    grid.push(("Sph.A13".to_string(), BTreeMap::new()));
    grid.push(("Sph.A14".to_string(), BTreeMap::new()));
    grid.push(("Sph.A16".to_string(), BTreeMap::new()));
    grid.push(("Sph.A17x".to_string(), n(2)));
    grid.push(("Sph.A17x".to_string(), n(3)));
    grid
}

pub fn open_case_grid() -> Vec<(String, BTreeMap<String, i64>)> {
    let n = |v: i64| {
        let mut m = BTreeMap::new();
        m.insert("n".to_string(), v);
        m
    };
    vec![
        ("Sym.A1".to_string(), n(3)),
        ("Sym.A2".to_string(), n(3)),
        ("Sym.A3".to_string(), n(2)),
        ("Sym.A5".to_string(), BTreeMap::new()),
        ("Sph.A8".to_string(), n(2)),
    ]
}

/// Convenience entry point used by the command line: resolve a case with
/// defaults and run the scan.
pub fn check_pair(
    ring: &JackRing,
    id: &str,
    params: &BTreeMap<String, i64>,
    bound: i64,
    dict: DictOrientation,
    record_all: bool,
    command: String,
) -> Result<RunReport> {
    let mut full = default_params(id);
    for (k, v) in params {
        full.insert(k.clone(), *v);
    }
    let case = instantiate_case(id, &full, dict)?;
    let mut report = run_conjecture_check(ring, &case, bound, record_all, command)?;
    report.config.dictionary = dict_name(dict);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n_params(v: i64) -> BTreeMap<String, i64> {
        let mut m = BTreeMap::new();
        m.insert("n".to_string(), v);
        m
    }

    #[test]
    fn enumerate_bound_zero() {
        let case = instantiate_case("Sym.A1", &n_params(3), DictOrientation::Default).unwrap();
        let triples = enumerate_triples(&case, 0).unwrap();
        assert_eq!(triples, vec![(vec![0, 0], vec![0, 0], vec![0, 0])]);
    }

    #[test]
    fn enumerate_rank_one() {
        let case = instantiate_case("Sym.A1", &n_params(2), DictOrientation::Default).unwrap();
        let triples = enumerate_triples(&case, 2).unwrap();
        // lambda, mu range over 0, 2w1, 4w1
        let pairs: std::collections::BTreeSet<(Vec<i64>, Vec<i64>)> = triples
            .iter()
            .map(|(l, m, _)| (l.clone(), m.clone()))
            .collect();
        assert!(pairs.contains(&(vec![0], vec![0])));
        assert!(pairs.contains(&(vec![1], vec![1])));
        assert!(pairs.contains(&(vec![2], vec![0])));
        assert!(pairs.iter().all(|(l, m)| l[0] + m[0] <= 2));
    }

    #[test]
    fn rank_one_sphere_scan_clean() {
        let ring = JackRing::new(12);
        let case = instantiate_case("Sym.A4", &n_params(5), DictOrientation::Default).unwrap();
        let report = run_conjecture_check(&ring, &case, 6, false, "test".into()).unwrap();
        assert!(report.ok(), "witnesses: {:?}", report.body);
        match report.body {
            ReportBody::ConjectureScan { counts, .. } => {
                assert!(counts.triples > 0);
                assert_eq!(counts.disagreements, 0);
                assert_eq!(counts.lhs_unavailable, 0);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn spin_pair_scan_clean() {
        let ring = JackRing::new(12);
        let case = instantiate_case("Sph.A13", &BTreeMap::new(), DictOrientation::Default).unwrap();
        let report = run_conjecture_check(&ring, &case, 4, false, "test".into()).unwrap();
        assert!(report.ok());
    }

    #[test]
    fn stanley_scan_small() {
        let ring = JackRing::new(12);
        let report = run_stanley_scan(&ring, 2, "test".into()).unwrap();
        assert!(report.ok());
        match &report.body {
            ReportBody::StanleyScan { pairs, constants, violations } => {
                assert!(*pairs >= 4);
                assert!(*constants >= 4);
                assert!(violations.is_empty());
            }
            _ => unreachable!(),
        }
        // vacuous bound
        let report = run_stanley_scan(&ring, 0, "test".into()).unwrap();
        assert!(report.ok());
    }

    #[test]
    fn unavailable_oracle_reports_rhs_only() {
        let ring = JackRing::new(12);
        let mut params = BTreeMap::new();
        params.insert("p".to_string(), 3i64);
        let case = instantiate_case("ModelB", &params, DictOrientation::Default).unwrap();
        let report = run_conjecture_check(&ring, &case, 2, false, "test".into()).unwrap();
        match &report.body {
            ReportBody::ConjectureScan { counts, .. } => {
                assert_eq!(counts.disagreements, 0);
                assert_eq!(counts.agreements, 0);
                assert!(counts.lhs_unavailable > 0);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn counterexample_passes() {
        let report = run_counterexample("test".into()).unwrap();
        assert!(report.ok(), "{:?}", report.body);
    }

    #[test]
    fn reports_deterministic() {
        let ring = JackRing::new(12);
        let case = instantiate_case("Sph.A6", &n_params(3), DictOrientation::Default).unwrap();
        let a = run_conjecture_check(&ring, &case, 4, true, "test".into()).unwrap();
        let b = run_conjecture_check(&ring, &case, 4, true, "test".into()).unwrap();
        assert_eq!(a.normalized(), b.normalized());
        assert_eq!(
            serde_json::to_string(&a.normalized()).unwrap(),
            serde_json::to_string(&b.normalized()).unwrap()
        );
    }

    #[test]
    fn parallel_equals_serial() {
        let ring = JackRing::new(12);
        let case = instantiate_case("Sph.A6", &n_params(3), DictOrientation::Default).unwrap();
        let serial_pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap();
        let serial = serial_pool
            .install(|| run_conjecture_check(&ring, &case, 4, true, "test".into()))
            .unwrap();
        let parallel_pool = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap();
        let parallel = parallel_pool
            .install(|| run_conjecture_check(&ring, &case, 4, true, "test".into()))
            .unwrap();
        assert_eq!(serial.normalized(), parallel.normalized());
    }
}
