//! Constructors for the spherical pair cases, one per table row, at
//! arbitrary admissible parameters.
//!
//! Every constructor states the ambient group, the fundamental spherical
//! weights, the spherical roots and, where the case factors through
//! symmetric varieties, the projection matrices onto the factor cases. The
//! construction pipeline then derives the halved roots, the restricted
//! coroots and the based root datum, and cross-checks the recognized Cartan
//! type against the tables.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::datum::{build_delta_dagger, halve_dagger, restricted_coroot, BasedRootDatum};
use crate::error::{Error, Result};
use crate::linalg;
use crate::param::{rat, Rat};
use crate::repcalc::RepCtx;
use crate::rootsys::{parse_types, CartanType, Root, RootSystem, Weight};

use super::{IsogenyData, IsogenyFactor, Oracle, SphericalPairCase};

/// Orientation of the weight dictionary for the rank-two exceptional
/// symmetric case, where the assignment of the two generators to column
/// heights is not pinned down.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DictOrientation {
    Default,
    Alt,
}

pub fn case_ids() -> Vec<&'static str> {
    vec![
        "Sym.A1", "Sym.A2", "Sym.A3", "Sym.A4", "Sym.A5", "Sph.A6", "Sph.A7", "Sph.A8",
        "Sph.A9", "Sph.A10", "Sph.A11", "Sph.A12", "Sph.A13", "Sph.A14", "Sph.A15", "Sph.A16",
        "Sph.A17x", "He.1a", "He.1b", "He.2", "He.3", "He.4a", "He.4b", "He.5", "He.6",
        "He.1a'", "He.4a'", "He.5'", "ModelB",
    ]
}

/// Default parameters used by the harness when none are given.
pub fn default_params(id: &str) -> BTreeMap<String, i64> {
    let mut m = BTreeMap::new();
    match id {
        "Sym.A1" | "Sym.A2" => {
            m.insert("n".into(), 3);
        }
        "Sym.A3" | "Sph.A8" | "Sph.A9" | "Sph.A10" | "Sph.A17x" => {
            m.insert("n".into(), 2);
        }
        "Sym.A4" => {
            m.insert("n".into(), 7);
        }
        "Sph.A6" | "Sph.A7" | "Sph.A11" => {
            m.insert("n".into(), 3);
        }
        "He.1a" | "He.1a'" => {
            m.insert("p".into(), 2);
            m.insert("q".into(), 3);
        }
        "He.1b" | "He.4a" | "He.4a'" => {
            m.insert("p".into(), 2);
        }
        "He.2" => {
            m.insert("n".into(), 7);
        }
        "He.3" => {
            m.insert("p".into(), 3);
        }
        "He.4b" => {
            m.insert("p".into(), 3);
        }
        "ModelB" => {
            m.insert("p".into(), 4);
        }
        _ => {}
    }
    m
}

pub fn instantiate_case(
    id: &str,
    params: &BTreeMap<String, i64>,
    dict: DictOrientation,
) -> Result<Arc<SphericalPairCase>> {
    let get = |key: &str, min: i64| -> Result<i64> {
        let v = *params.get(key).ok_or_else(|| Error::ParamOutOfRange {
            case: id.to_string(),
            detail: format!("missing parameter {}", key),
        })?;
        if v < min {
            return Err(Error::ParamOutOfRange {
                case: id.to_string(),
                detail: format!("{} = {} < {}", key, v, min),
            });
        }
        Ok(v)
    };
    match id {
        "Sym.A1" => sym_a1(get("n", 2)?),
        "Sym.A2" => sym_a2(get("n", 2)?),
        "Sym.A3" => sym_a3(get("n", 2)?),
        "Sym.A4" => sym_a4(get("n", 5)?, 1),
        "Sym.A4t3" => sym_a4(8, 3),
        "Sym.A4t4" => sym_a4(8, 4),
        "Sym.A5" => sym_a5(dict),
        "Sph.A6" => sph_a6(get("n", 3)?),
        "Sph.A7" => sph_a7(get("n", 3)?),
        "Sph.A8" => sph_a8(get("n", 2)?, "Sph.A8"),
        "Sph.A9" => sph_a8(get("n", 2)?, "Sph.A9"),
        "Sph.A10" => sph_a10(get("n", 2)?),
        "Sph.A11" => sph_a11(get("n", 3)?),
        "Sph.A12" => sph_a12(),
        "Sph.A13" => sph_a13(),
        "Sph.A14" => sph_a14(),
        "Sph.A15" => sph_a15(),
        "Sph.A16" => sph_a16(),
        "Sph.A17x" => sph_a17x(get("n", 2)?),
        "He.1a" => {
            let p = get("p", 1)?;
            let q = get("q", p + 1)?;
            he_1a(p, q, false)
        }
        "He.1a'" => {
            let p = get("p", 1)?;
            let q = get("q", p + 1)?;
            he_1a(p, q, true)
        }
        "He.1b" => he_1b(get("p", 1)?),
        "He.2" => he_2(get("n", 7)?),
        "He.3" => he_3(get("p", 3)?),
        "He.4a" => he_4a(get("p", 1)?, false),
        "He.4a'" => he_4a(get("p", 1)?, true),
        "He.4b" => he_4b(get("p", 2)?),
        "He.5" => he_5(false),
        "He.5'" => he_5(true),
        "He.6" => he_6(),
        "ModelB" => model_b(get("p", 3)?),
        _ => Err(Error::UnknownCase(id.to_string())),
    }
}

// ---------------------------------------------------------------------
// construction pipeline

struct TableSpec {
    id: String,
    params: BTreeMap<String, i64>,
    label: String,
    ambient: Vec<CartanType>,
    gens: Vec<Weight>,
    free: Vec<bool>,
    delta_n: Vec<Root>,
    /// Normalized spherical roots as printed in the tables; `None` asserts
    /// that no root is halved.
    printed_delta_x: Option<Vec<Root>>,
    expected_rx: String,
    mult_m: Option<i64>,
    oracle: Oracle,
    isogeny: Option<IsogenyData>,
}

const ORBIT_CEILING: usize = 10_000_000;

fn build(spec: TableSpec) -> Result<Arc<SphericalPairCase>> {
    let ambient = Arc::new(RootSystem::new(spec.ambient)?);
    let rank = ambient.rank();
    for g in &spec.gens {
        if g.dim() != rank {
            return Err(Error::DataValidation(format!(
                "{}: generator dimension mismatch",
                spec.id
            )));
        }
    }
    let dagger = build_delta_dagger(&ambient, &spec.delta_n)?;
    let delta_x = halve_dagger(&spec.delta_n, &dagger);
    match &spec.printed_delta_x {
        Some(printed) => {
            if delta_x != *printed {
                return Err(Error::DataValidation(format!(
                    "{}: normalized roots {:?} do not match the table {:?}",
                    spec.id, delta_x, printed
                )));
            }
        }
        None => {
            if !dagger.is_empty() {
                return Err(Error::DataValidation(format!(
                    "{}: unexpected halving of {:?}",
                    spec.id, dagger
                )));
            }
        }
    }

    let gen_vecs: Vec<Vec<i64>> = spec.gens.iter().map(|w| w.0.clone()).collect();
    let to_gen = |root: &Root, what: &str| -> Result<Vec<i64>> {
        let w = ambient.root_to_weight(root);
        linalg::integer_coordinates(&gen_vecs, &w.0)
            .map(|v| {
                v.into_iter()
                    .map(|c| i64::try_from(c).expect("small coordinates"))
                    .collect()
            })
            .ok_or_else(|| {
                Error::DataValidation(format!(
                    "{}: {} {:?} is not in the weight lattice",
                    spec.id, what, root
                ))
            })
    };
    let base_gen: Vec<Vec<i64>> = delta_x
        .iter()
        .map(|s| to_gen(s, "normalized spherical root"))
        .collect::<Result<_>>()?;
    let delta_n_gen: Vec<Vec<i64>> = spec
        .delta_n
        .iter()
        .map(|s| to_gen(s, "spherical root"))
        .collect::<Result<_>>()?;
    let coroots_gen: Vec<Vec<i64>> = delta_x
        .iter()
        .map(|s| restricted_coroot(&ambient, s, &spec.gens).map(|(_, v)| v))
        .collect::<Result<_>>()?;

    finish_case(
        spec.id,
        spec.params,
        spec.label,
        ambient,
        spec.gens,
        spec.free,
        spec.delta_n,
        dagger,
        delta_x,
        base_gen,
        delta_n_gen,
        coroots_gen,
        spec.expected_rx,
        spec.mult_m,
        spec.oracle,
        spec.isogeny,
    )
}

/// Cases whose lattice carries directions invisible to the ambient weight
/// lattice (a central torus) specify their datum directly in generator
/// coordinates.
struct AbstractSpec {
    id: String,
    params: BTreeMap<String, i64>,
    label: String,
    rank: usize,
    free: Vec<bool>,
    base_gen: Vec<Vec<i64>>,
    coroots_gen: Vec<Vec<i64>>,
    expected_rx: String,
    oracle: Oracle,
}

fn build_abstract(spec: AbstractSpec) -> Result<Arc<SphericalPairCase>> {
    let ambient = Arc::new(RootSystem::new(Vec::new())?);
    let gens = vec![Weight(Vec::new()); spec.rank];
    let delta_n_gen = spec.base_gen.clone();
    finish_case(
        spec.id,
        spec.params,
        spec.label,
        ambient,
        gens,
        spec.free,
        Vec::new(),
        Vec::new(),
        Vec::new(),
        spec.base_gen,
        delta_n_gen,
        spec.coroots_gen,
        spec.expected_rx,
        None,
        spec.oracle,
        None,
    )
}

#[allow(clippy::too_many_arguments)]
fn finish_case(
    id: String,
    params: BTreeMap<String, i64>,
    label: String,
    ambient: Arc<RootSystem>,
    gens: Vec<Weight>,
    free: Vec<bool>,
    delta_n: Vec<Root>,
    dagger: Vec<usize>,
    delta_x: Vec<Root>,
    base_gen: Vec<Vec<i64>>,
    delta_n_gen: Vec<Vec<i64>>,
    coroots_gen: Vec<Vec<i64>>,
    expected_rx: String,
    mult_m: Option<i64>,
    oracle: Oracle,
    isogeny: Option<IsogenyData>,
) -> Result<Arc<SphericalPairCase>> {
    if free.len() != gens.len() {
        return Err(Error::DataValidation(format!(
            "{}: free-coordinate flags mismatch",
            id
        )));
    }
    // containment of the weight monoid in the dominant cone of the datum
    for (i, cov) in coroots_gen.iter().enumerate() {
        for (t, &v) in cov.iter().enumerate() {
            if v < 0 {
                return Err(Error::DataValidation(format!(
                    "{}: generator {} pairs negatively with spherical coroot {}",
                    id, t, i
                )));
            }
        }
    }
    let datum = BasedRootDatum::new(gens.len(), base_gen.clone(), coroots_gen.clone())?;
    let report = datum.verify(ORBIT_CEILING);
    if !report.pass {
        return Err(Error::DataValidation(format!(
            "{}: based root datum axioms fail: {:?}",
            id, report.witnesses
        )));
    }
    let mut recognized = datum.recognize()?;
    recognized.sort_by_key(|c| (c.ctype, c.nodes.clone()));
    let mut got: Vec<CartanType> = recognized.iter().map(|c| c.ctype).collect();
    let mut expect = parse_types(&expected_rx)?;
    got.sort();
    expect.sort();
    if got != expect {
        return Err(Error::DataValidation(format!(
            "{}: recognized type {:?} does not match table type {}",
            id, got, expected_rx
        )));
    }
    let rx_types: Vec<CartanType> = recognized.iter().map(|c| c.ctype).collect();
    let rx_ctx = RepCtx::new(Arc::new(RootSystem::new(rx_types)?));
    let jack_k = mult_m.map(|m| rat(2, m));
    Ok(Arc::new(SphericalPairCase {
        id,
        params,
        label,
        ambient,
        gens,
        free_coords: free,
        delta_n,
        dagger,
        delta_x,
        base_gen,
        delta_n_gen,
        coroots_gen,
        mult_m,
        jack_k,
        oracle,
        isogeny,
        datum,
        recognized,
        rx_ctx,
    }))
}

// ---------------------------------------------------------------------
// small vector builders (1-based indices, matching the tables)

fn fw(rank: usize, entries: &[(i64, i64)]) -> Weight {
    let mut v = vec![0i64; rank];
    for &(i, c) in entries {
        v[(i - 1) as usize] += c;
    }
    Weight(v)
}

fn sr(rank: usize, entries: &[(i64, i64)]) -> Root {
    let mut v = vec![0i64; rank];
    for &(i, c) in entries {
        v[(i - 1) as usize] += c;
    }
    v
}

/// `c * (alpha_from + ... + alpha_to)`, inclusive.
fn chain(rank: usize, from: i64, to: i64, c: i64) -> Root {
    let mut v = vec![0i64; rank];
    for i in from..=to {
        v[(i - 1) as usize] += c;
    }
    v
}

fn types(s: &str) -> Vec<CartanType> {
    parse_types(s).expect("valid type string")
}

fn no_params() -> BTreeMap<String, i64> {
    BTreeMap::new()
}

fn params_n(n: i64) -> BTreeMap<String, i64> {
    let mut m = BTreeMap::new();
    m.insert("n".into(), n);
    m
}

fn params_p(p: i64) -> BTreeMap<String, i64> {
    let mut m = BTreeMap::new();
    m.insert("p".into(), p);
    m
}

fn rank1_jack(k: Rat) -> Oracle {
    Oracle::TypeA {
        k,
        nvars: 2,
        heights: vec![1],
    }
}

// ---------------------------------------------------------------------
// symmetric cases with restricted root system of type A

fn sym_a1(n: i64) -> Result<Arc<SphericalPairCase>> {
    let r = (n - 1) as usize;
    let gens = (1..=r as i64).map(|i| fw(r, &[(i, 2)])).collect();
    let delta_n = (1..=r as i64).map(|i| sr(r, &[(i, 2)])).collect();
    let printed = if n == 2 {
        Some(vec![sr(r, &[(1, 1)])])
    } else {
        None
    };
    build(TableSpec {
        id: "Sym.A1".into(),
        params: params_n(n),
        label: format!("SL({})/SO({})", n, n),
        ambient: types(&format!("A{}", r)),
        gens,
        free: vec![true; r],
        delta_n,
        printed_delta_x: printed,
        expected_rx: format!("A{}", r),
        mult_m: Some(1),
        oracle: Oracle::TypeA {
            k: rat(2, 1),
            nvars: n as usize,
            heights: (1..=r as u32).collect(),
        },
        isogeny: None,
    })
}

fn sym_a2(n: i64) -> Result<Arc<SphericalPairCase>> {
    let r = (n - 1) as usize;
    let rank = 2 * r;
    let gens = (1..=r as i64)
        .map(|i| fw(rank, &[(i, 1), (i + r as i64, 1)]))
        .collect();
    let delta_n = (1..=r as i64)
        .map(|i| sr(rank, &[(i, 1), (i + r as i64, 1)]))
        .collect();
    build(TableSpec {
        id: "Sym.A2".into(),
        params: params_n(n),
        label: format!("SL({0})xSL({0}) / diag SL({0})", n),
        ambient: types(&format!("A{0}xA{0}", r)),
        gens,
        free: vec![true; r],
        delta_n,
        printed_delta_x: None,
        expected_rx: format!("A{}", r),
        mult_m: Some(2),
        oracle: Oracle::TypeA {
            k: rat(1, 1),
            nvars: n as usize,
            heights: (1..=r as u32).collect(),
        },
        isogeny: None,
    })
}

fn sym_a3(n: i64) -> Result<Arc<SphericalPairCase>> {
    let rank = (2 * n - 1) as usize;
    let r = (n - 1) as usize;
    let gens = (1..=r as i64).map(|i| fw(rank, &[(2 * i, 1)])).collect();
    let delta_n = (1..=r as i64)
        .map(|i| sr(rank, &[(2 * i - 1, 1), (2 * i, 2), (2 * i + 1, 1)]))
        .collect();
    build(TableSpec {
        id: "Sym.A3".into(),
        params: params_n(n),
        label: format!("SL({})/Sp({})", 2 * n, 2 * n),
        ambient: types(&format!("A{}", rank)),
        gens,
        free: vec![true; r],
        delta_n,
        printed_delta_x: None,
        expected_rx: format!("A{}", r),
        mult_m: Some(4),
        oracle: Oracle::TypeA {
            k: rat(1, 2),
            nvars: n as usize,
            heights: (1..=r as u32).collect(),
        },
        isogeny: None,
    })
}

/// The rank-one sphere case `Spin(n)/Spin(n-1)`. For the even 8-dimensional
/// case the two outer variants replace the vector node by a half-spin node;
/// they arise as factor cases of the triality pairs.
fn sym_a4(n: i64, node: i64) -> Result<Arc<SphericalPairCase>> {
    let (ambient, delta, rank) = if n % 2 == 1 {
        let p = ((n - 1) / 2) as usize;
        (format!("B{}", p), chain(p, 1, p as i64, 2), p)
    } else {
        let p = (n / 2) as usize;
        if p < 3 {
            return Err(Error::ParamOutOfRange {
                case: "Sym.A4".into(),
                detail: format!("n = {}", n),
            });
        }
        let d = match node {
            1 => {
                let mut d = chain(p, 1, p as i64 - 2, 2);
                d[p - 2] = 1;
                d[p - 1] = 1;
                d
            }
            3 if p == 4 => sr(p, &[(1, 1), (2, 2), (3, 2), (4, 1)]),
            4 if p == 4 => sr(p, &[(1, 1), (2, 2), (3, 1), (4, 2)]),
            _ => {
                return Err(Error::ParamOutOfRange {
                    case: "Sym.A4".into(),
                    detail: format!("node {} at n = {}", node, n),
                })
            }
        };
        (format!("D{}", p), d, p)
    };
    let id = match node {
        1 => "Sym.A4".to_string(),
        other => format!("Sym.A4t{}", other),
    };
    let m = n - 2;
    build(TableSpec {
        id,
        params: params_n(n),
        label: format!("Spin({})/Spin({})", n, n - 1),
        ambient: types(&ambient),
        gens: vec![fw(rank, &[(node, 1)])],
        free: vec![true],
        delta_n: vec![delta],
        printed_delta_x: None,
        expected_rx: "A1".into(),
        mult_m: Some(m),
        oracle: rank1_jack(rat(2, m)),
        isogeny: None,
    })
}

fn sym_a5(dict: DictOrientation) -> Result<Arc<SphericalPairCase>> {
    let heights = match dict {
        DictOrientation::Default => vec![1, 2],
        DictOrientation::Alt => vec![2, 1],
    };
    build(TableSpec {
        id: "Sym.A5".into(),
        params: no_params(),
        label: "E6/F4".into(),
        ambient: types("E6"),
        gens: vec![fw(6, &[(1, 1)]), fw(6, &[(6, 1)])],
        free: vec![true, true],
        delta_n: vec![
            sr(6, &[(1, 2), (2, 1), (3, 2), (4, 2), (5, 1)]),
            sr(6, &[(2, 1), (3, 1), (4, 2), (5, 2), (6, 2)]),
        ],
        printed_delta_x: None,
        expected_rx: "A2".into(),
        mult_m: Some(8),
        oracle: Oracle::TypeA {
            k: rat(1, 4),
            nvars: 3,
            heights,
        },
        isogeny: None,
    })
}

// ---------------------------------------------------------------------
// non-symmetric cases with spherical root system of type A

fn torus_case(id: &str, label: &str) -> Result<Arc<SphericalPairCase>> {
    build_abstract(AbstractSpec {
        id: id.into(),
        params: no_params(),
        label: label.into(),
        rank: 1,
        free: vec![false],
        base_gen: Vec::new(),
        coroots_gen: Vec::new(),
        expected_rx: "0".into(),
        oracle: Oracle::Torus,
    })
}

fn sph_a6(n: i64) -> Result<Arc<SphericalPairCase>> {
    let r = (n - 1) as usize;
    let sphere = sym_a4(2 * n, 1)?;
    let torus = torus_case("Z.A6", &format!("GL({0})/SL({0})", n - 1))?;
    let hat_m = vec![vec![1, 1]];
    let bar_m = vec![vec![-1, 1]];
    build(TableSpec {
        id: "Sph.A6".into(),
        params: params_n(n),
        label: format!("SL({})/SL({})", n, n - 1),
        ambient: types(&format!("A{}", r)),
        gens: vec![fw(r, &[(1, 1)]), fw(r, &[(r as i64, 1)])],
        free: vec![true, true],
        delta_n: vec![chain(r, 1, r as i64, 1)],
        printed_delta_x: None,
        expected_rx: "A1".into(),
        mult_m: None,
        oracle: Oracle::Product(vec![
            (hat_m.clone(), sphere.oracle.clone()),
            (bar_m.clone(), Oracle::Torus),
        ]),
        isogeny: Some(IsogenyData {
            hat: vec![IsogenyFactor {
                case: sphere,
                matrix: hat_m,
            }],
            bar: vec![IsogenyFactor {
                case: torus,
                matrix: bar_m,
            }],
        }),
    })
}

/// The normalizer companion of the sphere case: the invariant ring embeds
/// into the one of `SL(n)/SL(n-1)` along the diagonal of the two generators.
fn sph_a7(n: i64) -> Result<Arc<SphericalPairCase>> {
    let r = (n - 1) as usize;
    let companion = sph_a6(n)?;
    build(TableSpec {
        id: "Sph.A7".into(),
        params: params_n(n),
        label: format!("SL({})/GL({})", n, n - 1),
        ambient: types(&format!("A{}", r)),
        gens: vec![fw(r, &[(1, 1), (r as i64, 1)])],
        free: vec![true],
        delta_n: vec![chain(r, 1, r as i64, 1)],
        printed_delta_x: None,
        expected_rx: "A1".into(),
        mult_m: None,
        oracle: Oracle::Product(vec![(vec![vec![1], vec![1]], companion.oracle.clone())]),
        isogeny: None,
    })
}

/// The center-extended symplectic symmetric pair `GL(2n)/Sp(2n)`: the
/// subgroup factor of the odd model case. Its lattice carries a central
/// direction beyond the ambient `SL(2n)` weights, so the datum is given
/// directly in generator coordinates (generators `omega_2, ...,
/// omega_{2n-2}` and the determinant character).
fn z_a8(n: i64) -> Result<Arc<SphericalPairCase>> {
    let rank = n as usize;
    let mut base = Vec::new();
    for i in 1..rank {
        let mut v = vec![0i64; rank];
        v[i - 1] = 2;
        if i >= 2 {
            v[i - 2] = -1;
        }
        v[i] = -1;
        base.push(v);
    }
    let coroots = (0..rank - 1)
        .map(|i| {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            v
        })
        .collect();
    let a_part: Vec<Vec<i64>> = (0..rank - 1)
        .map(|i| {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            v
        })
        .collect();
    // the center of the extended group acts on the i-th generator with
    // twice the weight i, so products must add up along this functional
    let center: Vec<Vec<i64>> = vec![(1..=rank as i64).collect()];
    let mut free = vec![true; rank];
    free[rank - 1] = false;
    build_abstract(AbstractSpec {
        id: "Z.A8".into(),
        params: params_n(n),
        label: format!("GL({0})/Sp({0})", 2 * n),
        rank,
        free,
        base_gen: base,
        coroots_gen: coroots,
        expected_rx: format!("A{}", n - 1),
        oracle: Oracle::Product(vec![
            (
                a_part,
                Oracle::TypeA {
                    k: rat(1, 2),
                    nvars: n as usize,
                    heights: (1..n as u32).collect(),
                },
            ),
            (center, Oracle::Torus),
        ]),
    })
}

fn sph_a8(n: i64, id: &str) -> Result<Arc<SphericalPairCase>> {
    let rank = (2 * n) as usize;
    let overgroup = sym_a3(n + 1)?;
    let subgroup = z_a8(n)?;
    // phi_hat: omega'_{2i} coefficient a_{2i-1} + a_{2i}
    let hat_m: Vec<Vec<i64>> = (1..=n)
        .map(|i| {
            let mut row = vec![0i64; rank];
            row[(2 * i - 2) as usize] = 1;
            row[(2 * i - 1) as usize] = 1;
            row
        })
        .collect();
    // phi_bar: omega''_{2i} coefficient a_{2i} + a_{2i+1} for i < n, and
    // the center coefficient a_{2n} - sum of the odd coordinates
    let mut bar_m: Vec<Vec<i64>> = (1..n)
        .map(|i| {
            let mut row = vec![0i64; rank];
            row[(2 * i - 1) as usize] = 1;
            row[(2 * i) as usize] = 1;
            row
        })
        .collect();
    {
        let mut row = vec![0i64; rank];
        row[rank - 1] = 1;
        for i in 1..=n {
            row[(2 * i - 2) as usize] -= 1;
        }
        bar_m.push(row);
    }
    let label = if id == "Sph.A9" {
        format!("SL({})/GL(1)xSp({})", 2 * n + 1, 2 * n)
    } else {
        format!("SL({})/Sp({})", 2 * n + 1, 2 * n)
    };
    build(TableSpec {
        id: id.into(),
        params: params_n(n),
        label,
        ambient: types(&format!("A{}", rank)),
        gens: (1..=rank as i64).map(|i| fw(rank, &[(i, 1)])).collect(),
        free: vec![true; rank],
        delta_n: (1..rank as i64)
            .map(|i| sr(rank, &[(i, 1), (i + 1, 1)]))
            .collect(),
        printed_delta_x: None,
        expected_rx: format!("A{}xA{}", n, n - 1),
        mult_m: None,
        oracle: Oracle::Product(vec![
            (hat_m.clone(), overgroup.oracle.clone()),
            (bar_m.clone(), subgroup.oracle.clone()),
        ]),
        isogeny: Some(IsogenyData {
            hat: vec![IsogenyFactor {
                case: overgroup,
                matrix: hat_m,
            }],
            bar: vec![IsogenyFactor {
                case: subgroup,
                matrix: bar_m,
            }],
        }),
    })
}

fn sph_a10(n: i64) -> Result<Arc<SphericalPairCase>> {
    let rank = n as usize;
    let overgroup = sph_a7(2 * n)?;
    let legendre = sym_a1(2)?;
    let hat_m = vec![vec![1, 1]];
    let bar_m = vec![vec![1, 0]];
    let long = if n == 2 {
        sr(rank, &[(1, 1), (2, 1)])
    } else {
        let mut v = chain(rank, 2, n - 1, 2);
        v[0] = 1;
        v[rank - 1] = 1;
        v
    };
    build(TableSpec {
        id: "Sph.A10".into(),
        params: params_n(n),
        label: format!("Sp({})/GL(1)xSp({})", 2 * n, 2 * n - 2),
        ambient: types(&format!("C{}", rank)),
        gens: vec![fw(rank, &[(1, 2)]), fw(rank, &[(2, 1)])],
        free: vec![true, true],
        delta_n: vec![sr(rank, &[(1, 2)]), long.clone()],
        printed_delta_x: Some(vec![sr(rank, &[(1, 1)]), long]),
        expected_rx: "A1xA1".into(),
        mult_m: None,
        oracle: Oracle::Product(vec![
            (hat_m.clone(), overgroup.oracle.clone()),
            (bar_m.clone(), legendre.oracle.clone()),
        ]),
        isogeny: Some(IsogenyData {
            hat: vec![IsogenyFactor {
                case: overgroup,
                matrix: hat_m,
            }],
            bar: vec![IsogenyFactor {
                case: legendre,
                matrix: bar_m,
            }],
        }),
    })
}

/// Companion of the projective case: the weight monoid is the submonoid of
/// the one of `Sp(2n)/GL(1)xSp(2n-2)` generated by the second weight.
fn sph_a11(n: i64) -> Result<Arc<SphericalPairCase>> {
    let rank = n as usize;
    let companion = sph_a10(n)?;
    let long = if n == 2 {
        sr(rank, &[(1, 1), (2, 1)])
    } else {
        let mut v = chain(rank, 2, n - 1, 2);
        v[0] = 1;
        v[rank - 1] = 1;
        v
    };
    build(TableSpec {
        id: "Sph.A11".into(),
        params: params_n(n),
        label: format!("Sp({})/Sp(2)xSp({})", 2 * n, 2 * n - 2),
        ambient: types(&format!("C{}", rank)),
        gens: vec![fw(rank, &[(2, 1)])],
        free: vec![true],
        delta_n: vec![long],
        printed_delta_x: None,
        expected_rx: "A1".into(),
        mult_m: None,
        oracle: Oracle::Product(vec![(vec![vec![0], vec![1]], companion.oracle.clone())]),
        isogeny: None,
    })
}

fn sph_a12() -> Result<Arc<SphericalPairCase>> {
    let sphere = sym_a4(8, 1)?;
    let hat_m = vec![vec![1]];
    build(TableSpec {
        id: "Sph.A12".into(),
        params: no_params(),
        label: "Spin(7)/G2".into(),
        ambient: types("B3"),
        gens: vec![fw(3, &[(3, 1)])],
        free: vec![true],
        delta_n: vec![sr(3, &[(1, 1), (2, 2), (3, 3)])],
        printed_delta_x: None,
        expected_rx: "A1".into(),
        mult_m: None,
        oracle: Oracle::Product(vec![(hat_m.clone(), sphere.oracle.clone())]),
        isogeny: Some(IsogenyData {
            hat: vec![IsogenyFactor {
                case: sphere,
                matrix: hat_m,
            }],
            bar: Vec::new(),
        }),
    })
}

fn sph_a13() -> Result<Arc<SphericalPairCase>> {
    let big_sphere = sym_a4(16, 1)?;
    let spin_sphere = sym_a4(8, 4)?;
    let hat_m = vec![vec![2, 1]];
    let bar_m = vec![vec![0, 1]];
    build(TableSpec {
        id: "Sph.A13".into(),
        params: no_params(),
        label: "Spin(9)/Spin(7)".into(),
        ambient: types("B4"),
        gens: vec![fw(4, &[(1, 1)]), fw(4, &[(4, 1)])],
        free: vec![true, true],
        delta_n: vec![
            sr(4, &[(1, 1), (2, 1), (3, 1), (4, 1)]),
            sr(4, &[(2, 1), (3, 2), (4, 3)]),
        ],
        printed_delta_x: None,
        expected_rx: "A1xA1".into(),
        mult_m: None,
        oracle: Oracle::Product(vec![
            (hat_m.clone(), big_sphere.oracle.clone()),
            (bar_m.clone(), spin_sphere.oracle.clone()),
        ]),
        isogeny: Some(IsogenyData {
            hat: vec![IsogenyFactor {
                case: big_sphere,
                matrix: hat_m,
            }],
            bar: vec![IsogenyFactor {
                case: spin_sphere,
                matrix: bar_m,
            }],
        }),
    })
}

fn sph_a14() -> Result<Arc<SphericalPairCase>> {
    let vector_sphere = sym_a4(8, 1)?;
    let spin_sphere = sym_a4(8, 3)?;
    let g2_case = sph_a12()?;
    let hat1 = vec![vec![1, 0, 1]];
    let hat2 = vec![vec![0, 1, 1]];
    let bar_m = vec![vec![1, 1, 0]];
    build(TableSpec {
        id: "Sph.A14".into(),
        params: no_params(),
        label: "Spin(8)/G2".into(),
        ambient: types("D4"),
        gens: vec![fw(4, &[(1, 1)]), fw(4, &[(3, 1)]), fw(4, &[(4, 1)])],
        free: vec![true, true, true],
        delta_n: vec![
            sr(4, &[(1, 1), (2, 1), (3, 1)]),
            sr(4, &[(1, 1), (2, 1), (4, 1)]),
            sr(4, &[(2, 1), (3, 1), (4, 1)]),
        ],
        printed_delta_x: None,
        expected_rx: "A1xA1xA1".into(),
        mult_m: None,
        oracle: Oracle::Product(vec![
            (hat1.clone(), vector_sphere.oracle.clone()),
            (hat2.clone(), spin_sphere.oracle.clone()),
            (bar_m.clone(), g2_case.oracle.clone()),
        ]),
        isogeny: Some(IsogenyData {
            hat: vec![
                IsogenyFactor {
                    case: vector_sphere,
                    matrix: hat1,
                },
                IsogenyFactor {
                    case: spin_sphere,
                    matrix: hat2,
                },
            ],
            bar: vec![IsogenyFactor {
                case: g2_case,
                matrix: bar_m,
            }],
        }),
    })
}

/// The octonionic projective plane. The decomposition rule has no known
/// product-support oracle here; only the tensor/order side is evaluated.
fn sph_a15() -> Result<Arc<SphericalPairCase>> {
    build(TableSpec {
        id: "Sph.A15".into(),
        params: no_params(),
        label: "F4/Spin(9)".into(),
        ambient: types("F4"),
        gens: vec![fw(4, &[(4, 1)])],
        free: vec![true],
        delta_n: vec![sr(4, &[(1, 1), (2, 2), (3, 3), (4, 2)])],
        printed_delta_x: None,
        expected_rx: "A1".into(),
        mult_m: None,
        oracle: Oracle::Unavailable("the octonionic plane has no type A product oracle".into()),
        isogeny: None,
    })
}

fn sph_a16() -> Result<Arc<SphericalPairCase>> {
    let sphere = sym_a4(7, 1)?;
    let hat_m = vec![vec![1]];
    build(TableSpec {
        id: "Sph.A16".into(),
        params: no_params(),
        label: "G2/SL(3)".into(),
        ambient: types("G2"),
        gens: vec![fw(2, &[(1, 1)])],
        free: vec![true],
        delta_n: vec![sr(2, &[(1, 4), (2, 2)])],
        printed_delta_x: None,
        expected_rx: "A1".into(),
        mult_m: None,
        oracle: Oracle::Product(vec![(hat_m.clone(), sphere.oracle.clone())]),
        isogeny: Some(IsogenyData {
            hat: vec![IsogenyFactor {
                case: sphere,
                matrix: hat_m,
            }],
            bar: Vec::new(),
        }),
    })
}

/// The sphere for a product group: `Sp(2)xSp(2n)` acting on `S^{4n-1}`.
/// The first component contributes coordinate 0 of the ambient system.
fn sph_a17x(n: i64) -> Result<Arc<SphericalPairCase>> {
    let rank = (n + 1) as usize;
    let sphere = sym_a4(4 * n, 1)?;
    let pair = sym_a2(2)?;
    let hat_m = vec![vec![1, 2]];
    let bar_m = vec![vec![1, 0]];
    let long = if n == 2 {
        sr(rank, &[(2, 1), (3, 1)])
    } else {
        let mut v = chain(rank, 3, n, 2);
        v[1] = 1;
        v[rank - 1] = 1;
        v
    };
    build(TableSpec {
        id: "Sph.A17x".into(),
        params: params_n(n),
        label: format!("Sp(2)xSp({0}) / diag Sp(2) x Sp({1})", 2 * n, 2 * n - 2),
        ambient: types(&format!("A1xC{}", n)),
        gens: vec![fw(rank, &[(1, 1), (2, 1)]), fw(rank, &[(3, 1)])],
        free: vec![true, true],
        delta_n: vec![sr(rank, &[(1, 1), (2, 1)]), long],
        printed_delta_x: None,
        expected_rx: "A1xA1".into(),
        mult_m: None,
        oracle: Oracle::Product(vec![
            (hat_m.clone(), sphere.oracle.clone()),
            (bar_m.clone(), pair.oracle.clone()),
        ]),
        isogeny: Some(IsogenyData {
            hat: vec![IsogenyFactor {
                case: sphere,
                matrix: hat_m,
            }],
            bar: vec![IsogenyFactor {
                case: pair,
                matrix: bar_m,
            }],
        }),
    })
}

// ---------------------------------------------------------------------
// Levi cases: symmetric pairs of Hermitian type and their companions

fn he_1a(p: i64, q: i64, derived: bool) -> Result<Arc<SphericalPairCase>> {
    if q <= p {
        return Err(Error::ParamOutOfRange {
            case: "He.1a".into(),
            detail: format!("need q > p, got p={} q={}", p, q),
        });
    }
    let rank = (p + q - 1) as usize;
    let mut gens: Vec<Weight> = (1..p)
        .map(|i| fw(rank, &[(i, 1), (p + q - i, 1)]))
        .collect();
    if derived {
        gens.push(fw(rank, &[(p, 1)]));
        gens.push(fw(rank, &[(q, 1)]));
    } else {
        gens.push(fw(rank, &[(p, 1), (q, 1)]));
    }
    let mut delta_n: Vec<Root> = (1..p)
        .map(|i| sr(rank, &[(i, 1), (p + q - i, 1)]))
        .collect();
    delta_n.push(chain(rank, p, q, 1));
    let id = if derived { "He.1a'" } else { "He.1a" };
    let label = if derived {
        format!("SL({})/SL({})xSL({})", p + q, p, q)
    } else {
        format!("SL({})/S(GL({})xGL({}))", p + q, p, q)
    };
    let mut params = params_p(p);
    params.insert("q".into(), q);
    build(TableSpec {
        id: id.into(),
        params,
        label,
        ambient: types(&format!("A{}", rank)),
        gens: gens.clone(),
        free: vec![true; gens.len()],
        delta_n,
        printed_delta_x: None,
        expected_rx: if p == 1 {
            "A1".into()
        } else {
            format!("B{}", p)
        },
        mult_m: None,
        oracle: Oracle::Unavailable("no product oracle for the Hermitian side".into()),
        isogeny: None,
    })
}

fn he_1b(p: i64) -> Result<Arc<SphericalPairCase>> {
    let rank = (2 * p - 1) as usize;
    let mut gens: Vec<Weight> = (1..p)
        .map(|i| fw(rank, &[(i, 1), (2 * p - i, 1)]))
        .collect();
    gens.push(fw(rank, &[(p, 2)]));
    let mut delta_n: Vec<Root> = (1..p)
        .map(|i| sr(rank, &[(i, 1), (2 * p - i, 1)]))
        .collect();
    delta_n.push(sr(rank, &[(p, 2)]));
    let mut printed: Vec<Root> = (1..p)
        .map(|i| sr(rank, &[(i, 1), (2 * p - i, 1)]))
        .collect();
    printed.push(sr(rank, &[(p, 1)]));
    build(TableSpec {
        id: "He.1b".into(),
        params: params_p(p),
        label: format!("SL({})/S(GL({1})xGL({1}))", 2 * p, p),
        ambient: types(&format!("A{}", rank)),
        gens: gens.clone(),
        free: vec![true; gens.len()],
        delta_n,
        printed_delta_x: Some(printed),
        expected_rx: if p == 1 {
            "A1".into()
        } else {
            format!("B{}", p)
        },
        mult_m: None,
        oracle: Oracle::Unavailable("no product oracle for the Hermitian side".into()),
        isogeny: None,
    })
}

/// Requires `n >= 7`: below that the second fundamental weight is a spin
/// weight and the space coincides with a row of another family (the
/// symplectic projective case at n = 5, the linear one at n = 6).
fn he_2(n: i64) -> Result<Arc<SphericalPairCase>> {
    let (ambient, second, rank) = if n % 2 == 1 {
        let p = ((n - 1) / 2) as usize;
        (format!("B{}", p), chain(p, 2, p as i64, 2), p)
    } else {
        let p = (n / 2) as usize;
        if p < 3 {
            return Err(Error::ParamOutOfRange {
                case: "He.2".into(),
                detail: format!("n = {}", n),
            });
        }
        let mut v = chain(p, 2, p as i64 - 2, 2);
        v[p - 2] = 1;
        v[p - 1] = 1;
        (format!("D{}", p), v, p)
    };
    build(TableSpec {
        id: "He.2".into(),
        params: params_n(n),
        label: format!("Spin({})/Spin(2)xSpin({})", n, n - 2),
        ambient: types(&ambient),
        gens: vec![fw(rank, &[(1, 2)]), fw(rank, &[(2, 1)])],
        free: vec![true, true],
        delta_n: vec![sr(rank, &[(1, 2)]), second.clone()],
        printed_delta_x: Some(vec![sr(rank, &[(1, 1)]), second]),
        expected_rx: "B2".into(),
        mult_m: None,
        oracle: Oracle::Unavailable("no product oracle for the Hermitian side".into()),
        isogeny: None,
    })
}

fn he_3(p: i64) -> Result<Arc<SphericalPairCase>> {
    let rank = p as usize;
    let gens = (1..=p).map(|i| fw(rank, &[(i, 2)])).collect();
    let delta_n: Vec<Root> = (1..=p).map(|i| sr(rank, &[(i, 2)])).collect();
    let mut printed: Vec<Root> = (1..p).map(|i| sr(rank, &[(i, 2)])).collect();
    printed.push(sr(rank, &[(p, 1)]));
    build(TableSpec {
        id: "He.3".into(),
        params: params_p(p),
        label: format!("Sp({})/GL({})", 2 * p, p),
        ambient: types(&format!("C{}", rank)),
        gens,
        free: vec![true; rank],
        delta_n,
        printed_delta_x: Some(printed),
        expected_rx: format!("B{}", p),
        mult_m: None,
        oracle: Oracle::Unavailable("no product oracle for the Hermitian side".into()),
        isogeny: None,
    })
}

fn he_4a(p: i64, derived: bool) -> Result<Arc<SphericalPairCase>> {
    let rank = (2 * p + 1) as usize;
    let mut gens: Vec<Weight> = (1..p).map(|i| fw(rank, &[(2 * i, 1)])).collect();
    if derived {
        gens.push(fw(rank, &[(2 * p, 1)]));
        gens.push(fw(rank, &[(2 * p + 1, 1)]));
    } else {
        gens.push(fw(rank, &[(2 * p, 1), (2 * p + 1, 1)]));
    }
    let mut delta_n: Vec<Root> = (1..p)
        .map(|i| sr(rank, &[(2 * i - 1, 1), (2 * i, 2), (2 * i + 1, 1)]))
        .collect();
    delta_n.push(sr(rank, &[(2 * p - 1, 1), (2 * p, 1), (2 * p + 1, 1)]));
    let id = if derived { "He.4a'" } else { "He.4a" };
    let label = if derived {
        format!("Spin({})/SL({})", 4 * p + 2, 2 * p + 1)
    } else {
        format!("Spin({})/GL({})", 4 * p + 2, 2 * p + 1)
    };
    build(TableSpec {
        id: id.into(),
        params: params_p(p),
        label,
        ambient: types(&format!("D{}", rank)),
        gens: gens.clone(),
        free: vec![true; gens.len()],
        delta_n,
        printed_delta_x: None,
        expected_rx: if p == 1 {
            "A1".into()
        } else {
            format!("B{}", p)
        },
        mult_m: None,
        oracle: Oracle::Unavailable("no product oracle for the Hermitian side".into()),
        isogeny: None,
    })
}

fn he_4b(p: i64) -> Result<Arc<SphericalPairCase>> {
    let rank = (2 * p) as usize;
    let mut gens: Vec<Weight> = (1..p).map(|i| fw(rank, &[(2 * i, 1)])).collect();
    gens.push(fw(rank, &[(2 * p, 2)]));
    let mut delta_n: Vec<Root> = (1..p)
        .map(|i| sr(rank, &[(2 * i - 1, 1), (2 * i, 2), (2 * i + 1, 1)]))
        .collect();
    delta_n.push(sr(rank, &[(2 * p, 2)]));
    let mut printed: Vec<Root> = (1..p)
        .map(|i| sr(rank, &[(2 * i - 1, 1), (2 * i, 2), (2 * i + 1, 1)]))
        .collect();
    printed.push(sr(rank, &[(2 * p, 1)]));
    build(TableSpec {
        id: "He.4b".into(),
        params: params_p(p),
        label: format!("Spin({})/GL({})", 4 * p, 2 * p),
        ambient: types(&format!("D{}", rank)),
        gens: gens.clone(),
        free: vec![true; gens.len()],
        delta_n,
        printed_delta_x: Some(printed),
        expected_rx: format!("B{}", p),
        mult_m: None,
        oracle: Oracle::Unavailable("no product oracle for the Hermitian side".into()),
        isogeny: None,
    })
}

fn he_5(derived: bool) -> Result<Arc<SphericalPairCase>> {
    let gens = if derived {
        vec![fw(6, &[(1, 1)]), fw(6, &[(2, 1)]), fw(6, &[(6, 1)])]
    } else {
        vec![fw(6, &[(1, 1), (6, 1)]), fw(6, &[(2, 1)])]
    };
    let id = if derived { "He.5'" } else { "He.5" };
    let label = if derived { "E6/D5" } else { "E6/D5xC*" };
    build(TableSpec {
        id: id.into(),
        params: no_params(),
        label: label.into(),
        ambient: types("E6"),
        gens: gens.clone(),
        free: vec![true; gens.len()],
        delta_n: vec![
            sr(6, &[(1, 1), (3, 1), (4, 1), (5, 1), (6, 1)]),
            sr(6, &[(2, 2), (3, 1), (4, 2), (5, 1)]),
        ],
        printed_delta_x: None,
        expected_rx: "B2".into(),
        mult_m: None,
        oracle: Oracle::Unavailable("no product oracle for the Hermitian side".into()),
        isogeny: None,
    })
}

fn he_6() -> Result<Arc<SphericalPairCase>> {
    build(TableSpec {
        id: "He.6".into(),
        params: no_params(),
        label: "E7/E6xC*".into(),
        ambient: types("E7"),
        gens: vec![fw(7, &[(1, 1)]), fw(7, &[(6, 1)]), fw(7, &[(7, 2)])],
        free: vec![true, true, true],
        delta_n: vec![
            sr(7, &[(1, 2), (2, 1), (3, 2), (4, 2), (5, 1)]),
            sr(7, &[(2, 1), (3, 1), (4, 2), (5, 2), (6, 2)]),
            sr(7, &[(7, 2)]),
        ],
        printed_delta_x: Some(vec![
            sr(7, &[(1, 2), (2, 1), (3, 2), (4, 2), (5, 1)]),
            sr(7, &[(2, 1), (3, 1), (4, 2), (5, 2), (6, 2)]),
            sr(7, &[(7, 1)]),
        ]),
        expected_rx: "B3".into(),
        mult_m: None,
        oracle: Oracle::Unavailable("no product oracle for the Hermitian side".into()),
        isogeny: None,
    })
}

/// The model case `SO(2p+1)/GL(p)`: the spherical roots are of type B and
/// the case factors through two Hermitian symmetric varieties. The last
/// spherical root is stored doubled for odd `p`, where the subgroup has
/// index two in its normalizer, and undoubled for even `p`.
fn model_b(p: i64) -> Result<Arc<SphericalPairCase>> {
    let rank = p as usize;
    let even = p % 2 == 0;
    let n = p / 2;
    let mut gens: Vec<Weight> = (1..p).map(|i| fw(rank, &[(i, 1)])).collect();
    gens.push(fw(rank, &[(p, 2)]));
    let mut delta_n: Vec<Root> = (1..p)
        .map(|i| sr(rank, &[(i, 1), (i + 1, 1)]))
        .collect();
    let printed = if even {
        delta_n.push(sr(rank, &[(p, 1)]));
        None
    } else {
        delta_n.push(sr(rank, &[(p, 2)]));
        let mut v: Vec<Root> = (1..p)
            .map(|i| sr(rank, &[(i, 1), (i + 1, 1)]))
            .collect();
        v.push(sr(rank, &[(p, 1)]));
        Some(v)
    };
    let expected = if p == 3 {
        "A1xB2".to_string()
    } else if even {
        format!("B{0}xB{0}", n)
    } else {
        format!("B{}xB{}", n, n + 1)
    };

    // projections onto the two Hermitian factors, on generator coordinates
    let (over, sub, hat_m, bar_m) = if even {
        let over = he_4a(n, false)?;
        let sub = he_4b(n)?;
        let mut hat: Vec<Vec<i64>> = (1..n)
            .map(|i| {
                let mut row = vec![0i64; rank];
                row[(2 * i - 2) as usize] = 1;
                row[(2 * i - 1) as usize] = 1;
                row
            })
            .collect();
        {
            let mut row = vec![0i64; rank];
            row[rank - 2] = 1;
            row[rank - 1] = 1;
            hat.push(row);
        }
        let mut bar: Vec<Vec<i64>> = (1..n)
            .map(|i| {
                let mut row = vec![0i64; rank];
                row[(2 * i - 1) as usize] = 1;
                row[(2 * i) as usize] = 1;
                row
            })
            .collect();
        {
            let mut row = vec![0i64; rank];
            row[rank - 1] = 1;
            bar.push(row);
        }
        (over, sub, hat, bar)
    } else {
        let over = he_4b(n + 1)?;
        let sub = he_4a(n, false)?;
        let mut hat: Vec<Vec<i64>> = (1..=n)
            .map(|i| {
                let mut row = vec![0i64; rank];
                row[(2 * i - 2) as usize] = 1;
                row[(2 * i - 1) as usize] = 1;
                row
            })
            .collect();
        {
            let mut row = vec![0i64; rank];
            row[rank - 1] = 1;
            hat.push(row);
        }
        let mut bar: Vec<Vec<i64>> = (1..n)
            .map(|i| {
                let mut row = vec![0i64; rank];
                row[(2 * i - 1) as usize] = 1;
                row[(2 * i) as usize] = 1;
                row
            })
            .collect();
        {
            let mut row = vec![0i64; rank];
            row[(2 * n - 1) as usize] = 1;
            row[rank - 1] = 1;
            bar.push(row);
        }
        (over, sub, hat, bar)
    };

    build(TableSpec {
        id: "ModelB".into(),
        params: params_p(p),
        label: format!("SO({})/GL({})", 2 * p + 1, p),
        ambient: types(&format!("B{}", rank)),
        gens: gens.clone(),
        free: vec![true; gens.len()],
        delta_n,
        printed_delta_x: printed,
        expected_rx: expected,
        mult_m: None,
        oracle: Oracle::Unavailable("no product oracle for the type B side".into()),
        isogeny: Some(IsogenyData {
            hat: vec![IsogenyFactor {
                case: over,
                matrix: hat_m,
            }],
            bar: vec![IsogenyFactor {
                case: sub,
                matrix: bar_m,
            }],
        }),
    })
}
