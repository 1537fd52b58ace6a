//! Standard bases over `K` driven by a highest corner found modulo a prime
//! ideal: probe, bound, truncated computation, dimension check, retry.

mod point;

use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use point::{
    choose_specialization, specialization_sequence, PointOverride, SpecializationPoint, POINT_RANGE,
    PRIME_SCHEDULE,
};

use crate::coeff::{
    clear_denominators, specialize_scalar, CoeffError, Coefficient, DomainSpec, Fp, ParamPoly, RatFunc, Scalar,
};
use crate::corner::{leading_ideal, HighestCorner, Staircase, TruncationBound};
use crate::mora::{reduce_basis, standard_basis_by_degree, standard_basis_raw, MoraError, StandardBasis, StdOptions};
use crate::par::par_map;
use crate::ring::{jacobian_ideal, IdealPresentation, PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemiStdError {
    #[error("the ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("no usable specialization after {0} retries")]
    ExhaustedRetries(usize),
    #[error("computation timed out")]
    Timeout,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

impl From<MoraError> for SemiStdError {
    fn from(e: MoraError) -> Self {
        match e {
            MoraError::Timeout => SemiStdError::Timeout,
            MoraError::NonFinite => SemiStdError::NotZeroDimensional,
        }
    }
}

/// Knobs for [`hc_std`].
#[derive(Clone, Debug)]
pub struct HcStdConfig {
    pub seed: u64,
    pub max_retries: usize,
    pub overrides: PointOverride,
    /// Skip the probe and compute without a static truncation bound. Terms
    /// below the corner of the partial leading ideal are still dropped, as
    /// they lie in the ideal; without that the normal form of an element of
    /// the ideal is an infinite series.
    pub no_truncate: bool,
    pub timeout: Option<Duration>,
    /// Number of probes computed ahead concurrently (1 = no speculation).
    pub speculative_probes: usize,
}

impl Default for HcStdConfig {
    fn default() -> Self {
        HcStdConfig {
            seed: 100,
            max_retries: 5,
            overrides: PointOverride::default(),
            no_truncate: false,
            timeout: None,
            speculative_probes: 1,
        }
    }
}

/// What happened at one specialization point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AttemptOutcome {
    Accepted,
    /// `d0 != dp`: the point was bad for this ideal.
    DimensionMismatch,
    /// The specialized ideal is not zero-dimensional.
    InfiniteDimension,
    /// Some coefficient could not be specialized.
    SpecializationFailed(String),
}

impl AttemptOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            AttemptOutcome::Accepted => "accepted",
            AttemptOutcome::DimensionMismatch => "dimension-mismatch",
            AttemptOutcome::InfiniteDimension => "infinite-dimension",
            AttemptOutcome::SpecializationFailed(_) => "specialization-failed",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AttemptRecord {
    pub point: SpecializationPoint,
    pub outcome: AttemptOutcome,
    pub dp: Option<u64>,
    pub d0: Option<u64>,
    pub hc: Option<HighestCorner>,
}

/// Wall-clock time per phase in milliseconds.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PhaseTimings {
    pub probe: f64,
    pub bound: f64,
    pub main: f64,
    pub verify: f64,
}

/// Full trace of one run.
#[derive(Clone, Debug)]
pub struct AlgorithmReport {
    pub ring: Arc<PolyRing>,
    pub domain: DomainSpec,
    pub basis: StandardBasis<Scalar>,
    pub staircase: Staircase,
    pub d0: u64,
    pub dp: Option<u64>,
    pub points_tried: Vec<AttemptRecord>,
    /// Corner from the accepted probe.
    pub hc: Option<HighestCorner>,
    /// Corner of the returned basis.
    pub hc0: HighestCorner,
    pub bound: TruncationBound,
    pub fallback: bool,
    pub timings: PhaseTimings,
}

impl AlgorithmReport {
    pub fn retries(&self) -> usize {
        self.points_tried.len().saturating_sub(1)
    }
}

/// Applies the specialization to every generator; zero images are dropped.
pub fn specialize_ideal(
    ideal: &IdealPresentation,
    pt: &SpecializationPoint,
) -> Result<IdealPresentation, CoeffError> {
    let domain = ideal.domain();
    let target = match (pt.prime, domain.characteristic()) {
        (Some(p), _) => DomainSpec::prime_field(p)?,
        (None, 0) => DomainSpec::rationals(),
        (None, p) => DomainSpec::prime_field(p)?,
    };
    let gens: Result<Vec<_>, CoeffError> = ideal
        .generators()
        .iter()
        .map(|g| g.try_map_coeffs(|c| specialize_scalar(c, pt)))
        .collect();
    Ok(IdealPresentation::new(target, ideal.ring().clone(), gens?))
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1000.0
}

fn to_fp_polys(ideal: &IdealPresentation) -> Vec<Polynomial<Fp>> {
    ideal
        .generators()
        .iter()
        .map(|g| {
            g.map_coeffs(|c| match c {
                Scalar::Modular(x) => *x,
                other => panic!("expected a prime-field scalar, got {other}"),
            })
        })
        .collect()
}

struct ProbeResult {
    staircase: Option<Staircase>,
    error: Option<String>,
    elapsed: f64,
}

fn probe(
    cleared: &IdealPresentation,
    pt: &SpecializationPoint,
    deadline: Option<Instant>,
) -> Result<ProbeResult, SemiStdError> {
    let start = Instant::now();
    let spec = match specialize_ideal(cleared, pt) {
        Ok(s) => s,
        Err(e) => {
            return Ok(ProbeResult {
                staircase: None,
                error: Some(e.to_string()),
                elapsed: ms(start),
            })
        }
    };
    let gens = to_fp_polys(&spec);
    let opts = StdOptions {
        bound: TruncationBound::NoBound,
        dynamic_corner: true,
        deadline,
    };
    let raw = standard_basis_by_degree(&gens, &opts)?;
    let staircase = if raw.is_empty() {
        // The zero ideal: no pure powers at all.
        Staircase::new(&[], cleared.ring().nvars(), cleared.ring().order())
    } else {
        leading_ideal(&raw)
    };
    Ok(ProbeResult {
        staircase: Some(staircase),
        error: None,
        elapsed: ms(start),
    })
}

/// Runs the whole algorithm for an ideal over `K`.
pub fn hc_std(ideal: &IdealPresentation, cfg: &HcStdConfig) -> Result<AlgorithmReport, SemiStdError> {
    let domain = ideal.domain().clone();
    cfg.overrides.validate(&domain)?;
    let deadline = cfg.timeout.map(|t| Instant::now() + t);
    let cleared = ideal.with_generators(clear_denominators(ideal.generators()));
    if cleared.generators().is_empty() {
        return Err(SemiStdError::NotZeroDimensional);
    }
    let ring = ideal.ring().clone();
    match (domain.characteristic(), domain.has_parameters()) {
        (0, false) => {
            let gens: Vec<Polynomial<BigInt>> = cleared
                .generators()
                .iter()
                .map(|g| g.map_coeffs(|c| c.as_integer().expect("cleared to integers")))
                .collect();
            engine(&cleared, &gens, cfg, deadline, |c: &BigRational| Scalar::Rational(c.clone()))
        }
        (0, true) => {
            let gens: Vec<Polynomial<ParamPoly<BigInt>>> = cleared
                .generators()
                .iter()
                .map(|g| {
                    g.map_coeffs(|c| match c {
                        Scalar::Function(f) => f.numer().clone(),
                        _ => unreachable!("domain has parameters"),
                    })
                })
                .collect();
            engine(&cleared, &gens, cfg, deadline, |c: &RatFunc<BigInt>| Scalar::Function(c.clone()))
        }
        (_, true) => {
            let gens: Vec<Polynomial<ParamPoly<Fp>>> = cleared
                .generators()
                .iter()
                .map(|g| {
                    g.map_coeffs(|c| match c {
                        Scalar::ModFunction(f) => f.numer().clone(),
                        _ => unreachable!("domain has parameters"),
                    })
                })
                .collect();
            engine(&cleared, &gens, cfg, deadline, |c: &RatFunc<Fp>| Scalar::ModFunction(c.clone()))
        }
        (_, false) => {
            // A prime field has a single prime ideal: compute directly.
            let gens = to_fp_polys(&cleared);
            let start = Instant::now();
            let opts = StdOptions {
                bound: TruncationBound::NoBound,
                dynamic_corner: true,
                deadline,
            };
            let raw = if cfg.no_truncate {
                standard_basis_raw(&gens, &opts)?
            } else {
                standard_basis_by_degree(&gens, &opts)?
            };
            finish(&ring, &domain, raw, deadline, start, Vec::new(), None, None, TruncationBound::NoBound, false, |c: &Fp| Scalar::Modular(*c), PhaseTimings::default())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn finish<C: Coefficient>(
    ring: &Arc<PolyRing>,
    domain: &DomainSpec,
    raw: Vec<Polynomial<C>>,
    deadline: Option<Instant>,
    main_start: Instant,
    points_tried: Vec<AttemptRecord>,
    dp: Option<u64>,
    hc: Option<HighestCorner>,
    bound: TruncationBound,
    fallback: bool,
    to_scalar: impl Fn(&C::Field) -> Scalar,
    mut timings: PhaseTimings,
) -> Result<AlgorithmReport, SemiStdError> {
    if raw.is_empty() {
        return Err(SemiStdError::NotZeroDimensional);
    }
    let verify = Instant::now();
    let staircase = leading_ideal(&raw);
    let d0 = staircase.vdim().ok_or(SemiStdError::NotZeroDimensional)?;
    let hc0 = staircase.highest_corner().map_err(|_| SemiStdError::NotZeroDimensional)?;
    timings.verify += ms(verify);
    let reduced = reduce_basis(&raw, deadline)?;
    let elements: Vec<Polynomial<Scalar>> = reduced.iter().map(|g| g.map_coeffs(&to_scalar)).collect();
    timings.main += ms(main_start);
    Ok(AlgorithmReport {
        ring: ring.clone(),
        domain: domain.clone(),
        basis: StandardBasis {
            elements,
            minimal: true,
            reduced: true,
            bound: bound.clone(),
        },
        staircase,
        d0,
        dp,
        points_tried,
        hc,
        hc0,
        bound,
        fallback,
        timings,
    })
}

fn engine<C: Coefficient>(
    cleared: &IdealPresentation,
    gens: &[Polynomial<C>],
    cfg: &HcStdConfig,
    deadline: Option<Instant>,
    to_scalar: impl Fn(&C::Field) -> Scalar,
) -> Result<AlgorithmReport, SemiStdError> {
    let ring = cleared.ring().clone();
    let domain = cleared.domain().clone();
    let mut timings = PhaseTimings::default();

    if cfg.no_truncate {
        let start = Instant::now();
        let opts = StdOptions {
            bound: TruncationBound::NoBound,
            dynamic_corner: true,
            deadline,
        };
        let raw = standard_basis_raw(gens, &opts)?;
        return finish(&ring, &domain, raw, deadline, start, Vec::new(), None, None, TruncationBound::NoBound, false, to_scalar, timings);
    }

    let total = cfg.max_retries + 1;
    let points = specialization_sequence(&domain, total, cfg.seed, &cfg.overrides);
    let ahead = cfg.speculative_probes.max(1);
    let mut records: Vec<AttemptRecord> = Vec::new();
    let mut next = 0;
    while next < total {
        let batch: Vec<SpecializationPoint> = points[next..total.min(next + ahead)].to_vec();
        next += batch.len();
        let probes = par_map(&batch, |pt| probe(cleared, pt, deadline));
        for (pt, res) in batch.into_iter().zip(probes) {
            let res = res?;
            timings.probe += res.elapsed;
            let Some(st) = res.staircase else {
                records.push(AttemptRecord {
                    point: pt,
                    outcome: AttemptOutcome::SpecializationFailed(res.error.unwrap_or_default()),
                    dp: None,
                    d0: None,
                    hc: None,
                });
                continue;
            };
            let bound_start = Instant::now();
            let Some(dp) = st.vdim() else {
                records.push(AttemptRecord {
                    point: pt,
                    outcome: AttemptOutcome::InfiniteDimension,
                    dp: None,
                    d0: None,
                    hc: None,
                });
                continue;
            };
            let hc = st.highest_corner().expect("zero-dimensional");
            let bound = st.truncation_bound(&hc);
            timings.bound += ms(bound_start);

            let main_start = Instant::now();
            let opts = StdOptions {
                bound: bound.clone(),
                dynamic_corner: true,
                deadline,
            };
            let raw = standard_basis_raw(gens, &opts)?;
            timings.main += ms(main_start);

            let verify = Instant::now();
            let d0 = if raw.is_empty() { None } else { leading_ideal(&raw).vdim() };
            timings.verify += ms(verify);
            if d0 == Some(dp) {
                records.push(AttemptRecord {
                    point: pt,
                    outcome: AttemptOutcome::Accepted,
                    dp: Some(dp),
                    d0,
                    hc: Some(hc),
                });
                let reduce_start = Instant::now();
                return finish(&ring, &domain, raw, deadline, reduce_start, records, Some(dp), Some(hc), bound, false, to_scalar, timings);
            }
            records.push(AttemptRecord {
                point: pt,
                outcome: AttemptOutcome::DimensionMismatch,
                dp: Some(dp),
                d0,
                hc: Some(hc),
            });
        }
    }

    // Every point failed: compute without truncation.
    let start = Instant::now();
    let opts = StdOptions {
        bound: TruncationBound::NoBound,
        dynamic_corner: true,
        deadline,
    };
    let raw = standard_basis_raw(gens, &opts)?;
    let dp = records.iter().rev().find_map(|r| r.dp);
    finish(&ring, &domain, raw, deadline, start, records, dp, None, TruncationBound::NoBound, true, to_scalar, timings)
}

/// Milnor number: dimension of the local algebra of the Jacobian ideal.
pub fn milnor(f: &Polynomial<Scalar>, domain: &DomainSpec, cfg: &HcStdConfig) -> Result<u64, SemiStdError> {
    Ok(hc_std(&jacobian_ideal(f, domain, false), cfg)?.d0)
}

/// Tjurina number: dimension of the local algebra of `<F, jacobian>`.
pub fn tjurina(f: &Polynomial<Scalar>, domain: &DomainSpec, cfg: &HcStdConfig) -> Result<u64, SemiStdError> {
    Ok(hc_std(&jacobian_ideal(f, domain, true), cfg)?.d0)
}
