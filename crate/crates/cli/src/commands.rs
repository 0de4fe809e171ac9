use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use sasaki_core::profiles::{
    check_conditions, check_extremal, csc_candidates, csc_roots, extremal_orbifold_f,
    ke_obstruction_check, scalar_curvature_oracle, theta_canonical, theta_smooth_extremal,
    ConditionReport, ConeLabels, ExtremalReport, FiberParam, Profile,
};
use sasaki_core::scalar::{fmt_rational, rat, Scalar};
use sasaki_core::topology::{
    bouquet, chern_class, class_to_fiber_param, deformation_dims, kahler_cone_member,
    pi1_structure, BouquetDescriptor, ComplexStructure, DeformationStructure, JoinData,
    Pi1Structure,
};
use sasaki_core::{Algebraic, AlgebraicRoot, ExactField, Rational};

use crate::args::{Cli, Command, FiberArg, Format, ProfileArgs, ProfileKind};
use crate::output::{csv, json, Outcome};

type CmdResult = Result<Outcome, String>;

pub fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::VerifyExtremal(args) => {
            json_only(cli.format, "verify-extremal")?;
            verify_extremal(args)
        }
        Command::Bouquet { k1, k2 } => {
            json_only(cli.format, "bouquet")?;
            cmd_bouquet(*k1, *k2)
        }
        Command::CscSearch { pmax, qmax } => {
            csc_search(*pmax, *qmax, cli.format.unwrap_or(Format::Csv))
        }
        Command::ProfileSample { profile, points } => {
            profile_sample(profile, *points, cli.format.unwrap_or(Format::Csv))
        }
        Command::Topology {
            k1,
            k2,
            n,
            structure,
        } => {
            json_only(cli.format, "topology")?;
            topology(*k1, *k2, *n, structure.as_deref())
        }
    }
}

fn json_only(format: Option<Format>, name: &str) -> Result<(), String> {
    match format {
        Some(Format::Csv) => Err(format!("{name} only supports --format json")),
        _ => Ok(()),
    }
}

fn core_err(e: sasaki_core::Error) -> String {
    e.to_string()
}

#[derive(Debug, Serialize)]
struct IntervalReport {
    lo: String,
    hi: String,
}

/// An algebraic number by its primitive integer minimal polynomial and an
/// isolating interval.
#[derive(Debug, Serialize)]
struct AlgebraicReport {
    minpoly: String,
    /// Integer coefficients, ascending powers.
    coefficients: Vec<String>,
    isolating: IntervalReport,
    approx: f64,
}

impl AlgebraicReport {
    fn new(root: &AlgebraicRoot) -> Self {
        Self {
            minpoly: root.minimal().to_string_in("r"),
            coefficients: root
                .minimal()
                .coeffs()
                .iter()
                .map(|c| c.numer().to_string())
                .collect(),
            isolating: IntervalReport {
                lo: fmt_rational(root.isolating().lo()),
                hi: fmt_rational(root.isolating().hi()),
            },
            approx: root.to_f64(),
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum ParamReport {
    Exact(String),
    Algebraic(AlgebraicReport),
}

enum Resolved {
    Exact(Profile<Rational>),
    Algebraic(Profile<Algebraic>),
}

fn build<T: ExactField>(labels: ConeLabels, r: T, kind: ProfileKind) -> Result<Profile<T>, String> {
    match kind {
        ProfileKind::Extremal => extremal_orbifold_f(labels, r).map_err(core_err),
        ProfileKind::Canonical => {
            let r = FiberParam::new(r).map_err(core_err)?;
            Ok(Profile::from_theta(labels, r, &theta_canonical(labels)))
        }
    }
}

fn resolve(args: &ProfileArgs) -> Result<(ParamReport, Resolved), String> {
    let labels = ConeLabels::new(args.p, args.q).map_err(core_err)?;
    match &args.r {
        FiberArg::Exact(r) => Ok((
            ParamReport::Exact(fmt_rational(r)),
            Resolved::Exact(build(labels, r.clone(), args.profile)?),
        )),
        FiberArg::Csc => {
            let root = csc_roots(labels).into_iter().next().ok_or_else(|| {
                format!(
                    "labels ({}, {}) have no CSC fiber parameter in (0, 1)",
                    args.p, args.q
                )
            })?;
            let r = Algebraic::generator(Arc::new(root.clone()));
            Ok((
                ParamReport::Algebraic(AlgebraicReport::new(&root)),
                Resolved::Algebraic(build(labels, r, args.profile)?),
            ))
        }
    }
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    p: u64,
    q: u64,
    r: ParamReport,
    profile: &'static str,
    smooth: bool,
    /// For `p = q = 1`: the profile equals the smooth extremal profile.
    #[serde(skip_serializing_if = "Option::is_none")]
    smooth_specialization: Option<bool>,
    conditions: ConditionReport,
    extremal: bool,
    extremal_checks: ExtremalReport,
    /// `None` when the profile is not extremal.
    ke_double_root: Option<bool>,
    csc: bool,
    /// Coefficients of `F`, ascending; absent when `F` is not a polynomial.
    #[serde(skip_serializing_if = "Option::is_none")]
    f_coefficients: Option<Vec<String>>,
    certified: bool,
}

fn verify_profile<T: ExactField>(
    prof: &Profile<T>,
    r: ParamReport,
    kind: ProfileKind,
) -> VerifyReport {
    let labels = prof.labels();
    let conditions = check_conditions(prof);
    let extremal_checks = check_extremal(prof);
    let extremal = extremal_checks.is_extremal();
    let smooth_specialization = (labels.is_smooth() && kind == ProfileKind::Extremal)
        .then(|| theta_smooth_extremal(prof.r().value().clone()).is_ok_and(|t| t == prof.theta()));
    VerifyReport {
        p: labels.p(),
        q: labels.q(),
        r,
        profile: match kind {
            ProfileKind::Extremal => "extremal",
            ProfileKind::Canonical => "canonical",
        },
        smooth: labels.is_smooth(),
        smooth_specialization,
        conditions,
        extremal,
        extremal_checks,
        ke_double_root: ke_obstruction_check(prof).ok(),
        csc: prof.is_csc(),
        f_coefficients: prof
            .f_poly()
            .map(|f| f.coeffs().iter().map(Scalar::describe).collect()),
        certified: conditions.all() && extremal && smooth_specialization != Some(false),
    }
}

fn verify_extremal(args: &ProfileArgs) -> CmdResult {
    let (r, resolved) = resolve(args)?;
    let report = match &resolved {
        Resolved::Exact(prof) => verify_profile(prof, r, args.profile),
        Resolved::Algebraic(prof) => verify_profile(prof, r, args.profile),
    };
    let body = json(&report);
    Ok(if report.certified {
        Outcome::Certified(body)
    } else {
        Outcome::Failed(body)
    })
}

#[derive(Debug, Serialize)]
struct BouquetReport {
    k1: u64,
    k2: u64,
    #[serde(flatten)]
    bouquet: BouquetDescriptor,
    two_dimensional: usize,
    one_dimensional: usize,
    chern: u64,
    pi1: String,
    pi1_structure: Pi1Structure,
}

fn cmd_bouquet(k1: u64, k2: u64) -> CmdResult {
    let join = JoinData::new(k1, k2).map_err(core_err)?;
    let b = bouquet(join);
    let pi1 = pi1_structure(join);
    Ok(Outcome::Certified(json(&BouquetReport {
        k1,
        k2,
        two_dimensional: b.two_dimensional(),
        one_dimensional: b.one_dimensional(),
        bouquet: b,
        chern: chern_class(join),
        pi1: pi1.summary(),
        pi1_structure: pi1,
    })))
}

#[derive(Debug, Serialize)]
struct CscRow {
    p: u64,
    q: u64,
    #[serde(flatten)]
    root: AlgebraicReport,
    in_unit_interval: bool,
}

fn csc_search(pmax: u64, qmax: u64, format: Format) -> CmdResult {
    if pmax == 0 || qmax == 0 {
        return Err("--pmax and --qmax must be at least 1".into());
    }
    let pairs: Vec<ConeLabels> = (1..=pmax)
        .flat_map(|p| (1..=qmax).filter_map(move |q| ConeLabels::new(p, q).ok()))
        .collect();
    let per_pair: Vec<Vec<CscRow>> = pairs
        .par_iter()
        .map(|&labels| {
            csc_candidates(labels)
                .map(|cands| {
                    cands
                        .into_iter()
                        .map(|c| CscRow {
                            p: labels.p(),
                            q: labels.q(),
                            root: AlgebraicReport::new(&c.root),
                            in_unit_interval: c.in_unit_interval,
                        })
                        .collect()
                })
                .map_err(core_err)
        })
        .collect::<Result<_, _>>()?;
    let rows: Vec<CscRow> = per_pair.into_iter().flatten().collect();
    Ok(Outcome::Certified(match format {
        Format::Json => json(&rows),
        Format::Csv => csv(
            &[
                "p",
                "q",
                "minpoly",
                "root_lo",
                "root_hi",
                "in_unit_interval",
            ],
            rows.iter().map(|row| {
                vec![
                    row.p.to_string(),
                    row.q.to_string(),
                    row.root.minpoly.clone(),
                    row.root.isolating.lo.clone(),
                    row.root.isolating.hi.clone(),
                    row.in_unit_interval.to_string(),
                ]
            }),
        ),
    }))
}

#[derive(Debug, Serialize)]
struct Sample {
    z: String,
    theta: f64,
    #[serde(rename = "F")]
    f: f64,
    /// `F(z)` exactly, when the fiber parameter is rational.
    #[serde(rename = "F_exact", skip_serializing_if = "Option::is_none")]
    f_exact: Option<String>,
    s_numeric: f64,
}

#[derive(Debug, Serialize)]
struct SampleReport {
    p: u64,
    q: u64,
    r: ParamReport,
    profile: &'static str,
    samples: Vec<Sample>,
}

/// `points` equally spaced rationals from `-7/8` to `7/8`.
fn sample_grid(points: usize) -> Vec<Rational> {
    let lo = rat(-7, 8);
    let step = rat(7, 4) / Rational::from_i64(points as i64 - 1);
    (0..points)
        .map(|i| &lo + &step * Rational::from_i64(i as i64))
        .collect()
}

fn sample_profile<T: ExactField>(
    prof: &Profile<T>,
    grid: &[Rational],
    exact: impl Fn(&T) -> Option<String>,
) -> Result<Vec<Sample>, String> {
    let curvature = scalar_curvature_oracle(prof, grid).map_err(core_err)?;
    let theta = prof.theta();
    grid.iter()
        .zip(curvature)
        .map(|(z, s)| {
            let zt = T::from_rational(z);
            let th = theta.eval(&zt).map_err(core_err)?;
            let f = prof.f().eval(&zt).map_err(core_err)?;
            Ok(Sample {
                z: fmt_rational(z),
                theta: th.to_f64(),
                f: f.to_f64(),
                f_exact: exact(&f),
                s_numeric: s.s,
            })
        })
        .collect()
}

fn profile_sample(args: &ProfileArgs, points: usize, format: Format) -> CmdResult {
    if !(8..=100_000).contains(&points) {
        return Err(format!("--points must lie in [8, 100000], got {points}"));
    }
    let (r, resolved) = resolve(args)?;
    let grid = sample_grid(points);
    let samples = match &resolved {
        Resolved::Exact(prof) => sample_profile(prof, &grid, |f| Some(fmt_rational(f)))?,
        Resolved::Algebraic(prof) => {
            sample_profile(prof, &grid, |f| f.as_rational().map(fmt_rational))?
        }
    };
    Ok(Outcome::Certified(match format {
        Format::Json => json(&SampleReport {
            p: args.p,
            q: args.q,
            r,
            profile: match args.profile {
                ProfileKind::Extremal => "extremal",
                ProfileKind::Canonical => "canonical",
            },
            samples,
        }),
        Format::Csv => csv(
            &["z", "theta", "F", "s_numeric"],
            grid.iter().zip(&samples).map(|(z, s)| {
                vec![
                    Scalar::to_f64(z).to_string(),
                    s.theta.to_string(),
                    s.f.to_string(),
                    s.s_numeric.to_string(),
                ]
            }),
        ),
    }))
}

#[derive(Debug, Serialize)]
struct Deformation {
    h0: u64,
    h1: u64,
}

#[derive(Debug, Serialize)]
struct TopologyReport {
    k1: u64,
    k2: u64,
    chern: u64,
    pi1: String,
    pi1_structure: Pi1Structure,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    structure: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    kahler: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    deformation: Option<Deformation>,
}

fn topology(k1: u64, k2: u64, n: Option<i64>, structure: Option<&str>) -> CmdResult {
    let join = JoinData::new(k1, k2).map_err(core_err)?;
    let deform: Option<DeformationStructure> =
        structure.map(|s| s.parse().map_err(core_err)).transpose()?;
    let complex = match (n, deform) {
        (Some(n), None) => Some(ComplexStructure::Split(n)),
        (Some(n), Some(DeformationStructure::Split(m))) if m as i64 == n => {
            Some(ComplexStructure::Split(n))
        }
        (Some(n), Some(d)) => {
            return Err(format!("--n {n} is inconsistent with --structure {d}"));
        }
        (None, Some(DeformationStructure::Split(m))) => Some(ComplexStructure::Split(m as i64)),
        (None, Some(DeformationStructure::NonSplit)) => Some(ComplexStructure::NonSplit),
        (None, Some(_)) => Some(ComplexStructure::S0Family),
        (None, None) => None,
    };
    let (ki1, ki2) = (k1 as i64, k2 as i64);
    let kahler = complex
        .map(|c| kahler_cone_member(ki1, ki2, c))
        .transpose()
        .map_err(core_err)?;
    let degree = match complex {
        Some(ComplexStructure::Split(n)) if n > 0 => Some(n),
        _ => None,
    };
    let r = match (kahler, degree) {
        (Some(true), Some(n)) => Some(fmt_rational(
            &class_to_fiber_param(ki1, ki2, n).map_err(core_err)?,
        )),
        _ => None,
    };
    let deformation = deform
        .map(|d| deformation_dims(d).map(|(h0, h1)| Deformation { h0, h1 }))
        .transpose()
        .map_err(core_err)?;
    let pi1 = pi1_structure(join);
    Ok(Outcome::Certified(json(&TopologyReport {
        k1,
        k2,
        chern: chern_class(join),
        pi1: pi1.summary(),
        pi1_structure: pi1,
        n,
        structure: deform.map(|d| d.to_string()),
        kahler,
        r,
        deformation,
    })))
}
