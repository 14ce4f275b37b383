use std::collections::BTreeMap;

use log::debug;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::project::project_pi_r;
use crate::cartan::{CartanDatum, Cone, WeylWord};
use crate::error::{Error, Result, SweepBound};
use crate::io::cache::{fm_expand_cached, Cache};
use crate::qchar::{kr_highest_weight, kr_qchar_closed, w_normalized_qchar};
use crate::rings::{GradedSeries, Monomial, YMonomial};

/// Source of the q-characters `χ_q(L(M_k m))` along a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Fm,
    Closed,
}

/// Parameters of a projected-limit computation.
#[derive(Debug, Clone)]
pub struct LimitRequest {
    pub datum: CartanDatum,
    pub w: WeylWord,
    pub node: usize,
    pub m: YMonomial,
    pub height_cap: i64,
    pub k_max: usize,
    pub r_min: i64,
    pub window: usize,
    pub engine: Engine,
    /// Optional on-disk cache for the q-characters along the sweep.
    pub cache: Option<Cache>,
}

impl LimitRequest {
    pub fn new(
        datum: &CartanDatum,
        w: &WeylWord,
        node: usize,
        m: &YMonomial,
        height_cap: i64,
    ) -> Self {
        LimitRequest {
            datum: datum.clone(),
            w: w.clone(),
            node,
            m: m.clone(),
            height_cap,
            k_max: (height_cap as usize) * 3 + 12,
            r_min: -4 * height_cap - 12,
            window: 3,
            engine: Engine::Fm,
            cache: None,
        }
    }

    /// Width of the stability window over `R`; non-simply-laced types need
    /// one full `q_i`-period of extra room.
    pub fn r_window(&self) -> usize {
        let dmax = *self.datum.symmetrizers().iter().max().unwrap() as usize;
        self.window.max(2 * dmax + 1)
    }

    pub fn k_start(&self) -> usize {
        self.height_cap.max(0) as usize + 2
    }
}

/// One evaluated `(R, k)` truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepStep {
    pub r: i64,
    pub k: usize,
    pub fingerprint: String,
    pub terms: usize,
}

/// Outcome of the inner `k → ∞` sweep at fixed `R`.
#[derive(Debug, Clone)]
pub struct InnerLimit {
    pub r: i64,
    pub stable_from_k: usize,
    pub value: GradedSeries,
}

/// Result of a projected-limit sweep.
#[derive(Debug, Clone)]
pub struct LimitReport {
    pub converged: bool,
    pub stable_from_r: Option<i64>,
    pub inner: Vec<InnerLimit>,
    pub value: Option<GradedSeries>,
    pub sweep_log: Vec<SweepStep>,
}

impl LimitReport {
    pub fn log_text(&self) -> String {
        self.sweep_log
            .iter()
            .map(|s| format!("R={} k={} terms={} fp={}", s.r, s.k, s.terms, s.fingerprint))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Short content hash of a truncated series.
pub fn fingerprint(s: &GradedSeries) -> String {
    let digest = Sha256::digest(s.canonical_text().as_bytes());
    hex::encode(&digest[..8])
}

/// `χ_q^w(L(M_k m))` truncated at the height cap, memoized per `k`.
struct NormalizedCache<'a> {
    req: &'a LimitRequest,
    cone: Cone,
    by_k: BTreeMap<usize, GradedSeries>,
}

impl<'a> NormalizedCache<'a> {
    fn compute(req: &LimitRequest, cone: &Cone, k: usize) -> Result<GradedSeries> {
        let datum = &req.datum;
        let q = if req.engine == Engine::Closed && req.m.is_one() {
            kr_qchar_closed(datum, req.node, k, 0)?
        } else {
            let head = kr_highest_weight(datum, req.node, k, 0).mul(&req.m);
            fm_expand_cached(req.cache.as_ref(), datum, &head)?
        };
        let norm = w_normalized_qchar(datum, &q, &req.w)?;
        GradedSeries::from_poly(cone.clone(), req.height_cap, &norm)
    }

    fn ensure(&mut self, upto: usize) -> Result<()> {
        let missing: Vec<usize> = (self.req.k_start()..=upto)
            .filter(|k| !self.by_k.contains_key(k))
            .collect();
        let computed: Vec<(usize, Result<GradedSeries>)> = missing
            .par_iter()
            .map(|&k| (k, Self::compute(self.req, &self.cone, k)))
            .collect();
        for (k, s) in computed {
            self.by_k.insert(k, s?);
        }
        Ok(())
    }
}

fn all_equal<T: PartialEq>(v: &[T]) -> bool {
    v.windows(2).all(|p| p[0] == p[1])
}

/// Stabilization sweep realizing the projected limit `π^w_{q,∞}(m)`.
pub fn projected_limit(req: &LimitRequest) -> Result<LimitReport> {
    req.datum.check_node(req.node)?;
    if let Some(n) = req.m.max_node() {
        req.datum.check_node(n)?;
    }
    let cone = Cone::new(&req.datum, &req.w);
    let mut cache = NormalizedCache {
        req,
        cone: cone.clone(),
        by_k: BTreeMap::new(),
    };
    let window = req.window.max(1);
    let r_window = req.r_window();
    let mut report = LimitReport {
        converged: false,
        stable_from_r: None,
        inner: Vec::new(),
        value: None,
        sweep_log: Vec::new(),
    };
    let mut r = 0i64;
    loop {
        if r < req.r_min {
            return Err(Error::NoLimitDetected {
                bound: SweepBound::RMin(req.r_min),
                report: Box::new(report),
            });
        }
        let mut recent: Vec<(usize, String, GradedSeries)> = Vec::new();
        let mut k = req.k_start();
        let inner = loop {
            if k > req.k_max {
                return Err(Error::NoLimitDetected {
                    bound: SweepBound::KMax(req.k_max),
                    report: Box::new(report),
                });
            }
            cache.ensure((k + window - 1).min(req.k_max))?;
            let chi = &cache.by_k[&k];
            let projected = GradedSeries::from_poly(
                cone.clone(),
                req.height_cap,
                &project_pi_r(r, chi.poly()),
            )?;
            let fp = fingerprint(&projected);
            report.sweep_log.push(SweepStep {
                r,
                k,
                fingerprint: fp.clone(),
                terms: projected.len(),
            });
            recent.push((k, fp, projected));
            if recent.len() > window {
                recent.remove(0);
            }
            if recent.len() == window && all_equal(&recent.iter().map(|x| &x.1).collect::<Vec<_>>())
            {
                let (k0, _, value) = recent.swap_remove(0);
                break InnerLimit {
                    r,
                    stable_from_k: k0,
                    value,
                };
            }
            k += 1;
        };
        debug!("inner limit at R={r} stable from k={}", inner.stable_from_k);
        report.inner.push(inner);
        let n = report.inner.len();
        if n >= r_window {
            let tail = &report.inner[n - r_window..];
            if all_equal(&tail.iter().map(|x| &x.value).collect::<Vec<_>>()) {
                report.converged = true;
                report.stable_from_r = Some(tail[0].r);
                report.value = Some(tail[0].value.clone());
                return Ok(report);
            }
        }
        r -= 1;
    }
}
