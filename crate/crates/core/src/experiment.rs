//! Randomised dependence experiment over sampled tuples, and the catalog of
//! known Krull dimensions.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dependence::{
    monomial_cap, search_with_cap, AlgebraConfig, CertificateWire, DependenceVerdict, SubmonicCertificate,
};
use crate::error::{Error, Result};
use crate::monomial::monomials_up_to;
use crate::ordering::MonomialOrdering;
use crate::poly::Polynomial;
use crate::ring::{Elem, Ring};

/// Parameters of a sampling run. Elements are polynomials of total degree at
/// most `degree` with every coefficient uniform in `[-coeff_bound, coeff_bound]`,
/// resampled when zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub seed: u64,
    pub trials: usize,
    pub degree: u32,
    pub coeff_bound: u64,
    pub arity: usize,
    pub ordering: String,
    pub max_degree: u32,
    pub coeff_ring: String,
    pub ring: String,
}

impl Default for ExperimentSpec {
    fn default() -> Self {
        ExperimentSpec {
            seed: 42,
            trials: 1000,
            degree: 2,
            coeff_bound: 5,
            arity: 3,
            ordering: "grevlex".into(),
            max_degree: 6,
            coeff_ring: "ZZ".into(),
            ring: "Poly(ZZ; x)".into(),
        }
    }
}

/// A validated spec with its rings and ordering parsed.
#[derive(Clone, Debug)]
pub struct Plan {
    pub spec: ExperimentSpec,
    pub config: AlgebraConfig,
    pub ordering: MonomialOrdering,
}

impl ExperimentSpec {
    pub fn plan(&self) -> Result<Plan> {
        if self.trials == 0 || self.arity == 0 || self.coeff_bound == 0 {
            return Err(Error::Invalid("trials, arity and coefficient bound must be positive".into()));
        }
        if self.coeff_bound > i64::MAX as u64 {
            return Err(Error::Invalid("coefficient bound too large".into()));
        }
        let config = AlgebraConfig::new(self.coeff_ring.parse()?, self.ring.parse()?)?;
        if config.algebra().is_zero_ring() {
            return Err(Error::Invalid("cannot sample nonzero elements of the zero ring".into()));
        }
        let ordering = self.ordering.parse()?;
        Ok(Plan { spec: self.clone(), config, ordering })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrialOutcome {
    Dependent(Box<SubmonicCertificate>),
    NoRelationUpTo(u32),
    ResourceExceeded(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialRecord {
    pub index: usize,
    pub elements: Vec<Elem>,
    pub outcome: TrialOutcome,
    pub millis: u64,
}

impl TrialRecord {
    pub fn verdict(&self) -> &'static str {
        match self.outcome {
            TrialOutcome::Dependent(_) => "dependent",
            TrialOutcome::NoRelationUpTo(_) => "no_relation",
            TrialOutcome::ResourceExceeded(_) => "resource_exceeded",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentReport {
    pub spec: ExperimentSpec,
    pub trials: Vec<TrialRecord>,
    pub dependent: usize,
    pub no_relation: usize,
    pub resource_exceeded: usize,
}

/// Generator for trial `index`: the master seed selects the key, the trial
/// index the stream, so trials are independent of evaluation order.
pub fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn sample_element(rng: &mut ChaCha8Rng, algebra: &Ring, degree: u32, bound: u64) -> Result<Elem> {
    let b = bound as i64;
    loop {
        let e = match algebra.poly_ring() {
            Some(pr) => {
                let base = &pr.base;
                let terms = monomials_up_to(pr.vars.len(), degree)
                    .into_iter()
                    .map(|m| (m, base.from_int(&rng.gen_range(-b..=b).into())));
                algebra.elem_from_poly(Polynomial::from_terms(terms.collect::<Vec<_>>(), base))?
            }
            None => algebra.from_int(&rng.gen_range(-b..=b).into()),
        };
        if !algebra.is_zero(&e) {
            return Ok(e);
        }
    }
}

/// Sample and search trial `index` of a plan.
pub fn run_trial(plan: &Plan, index: usize) -> Result<TrialRecord> {
    let mut rng = trial_rng(plan.spec.seed, index);
    let algebra = plan.config.algebra();
    let elements = (0..plan.spec.arity)
        .map(|_| sample_element(&mut rng, algebra, plan.spec.degree, plan.spec.coeff_bound))
        .collect::<Result<Vec<_>>>()?;
    run_trial_on(plan, index, elements)
}

/// Search a trial with the given elements instead of sampled ones.
pub fn run_trial_on(plan: &Plan, index: usize, elements: Vec<Elem>) -> Result<TrialRecord> {
    let start = Instant::now();
    let outcome = match search_with_cap(&plan.config, &elements, &plan.ordering, plan.spec.max_degree, monomial_cap()) {
        Ok(DependenceVerdict::Dependent(c)) => TrialOutcome::Dependent(c),
        Ok(DependenceVerdict::NoRelationUpTo(d)) => TrialOutcome::NoRelationUpTo(d),
        Err(e @ Error::ResourceExceeded { .. }) => TrialOutcome::ResourceExceeded(e.to_string()),
        Err(e) => return Err(e),
    };
    let millis = start.elapsed().as_millis() as u64;
    Ok(TrialRecord { index, elements, outcome, millis })
}

pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentReport> {
    let plan = spec.plan()?;
    let trials = (0..spec.trials)
        .into_par_iter()
        .map(|i| run_trial(&plan, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentReport::new(spec.clone(), trials))
}

#[derive(Serialize, Deserialize)]
struct ReportWire {
    spec: ExperimentSpec,
    summary: SummaryWire,
    trials: Vec<TrialWire>,
}

#[derive(Serialize, Deserialize)]
struct SummaryWire {
    trials: usize,
    dependent: usize,
    no_relation: usize,
    resource_exceeded: usize,
    unresolved: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TrialWire {
    trial: usize,
    elements: Vec<String>,
    verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    certificate: Option<CertificateWire>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degree_bound: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    millis: Option<u64>,
}

impl ExperimentReport {
    pub fn new(spec: ExperimentSpec, trials: Vec<TrialRecord>) -> Self {
        let count = |v: &str| trials.iter().filter(|t| t.verdict() == v).count();
        ExperimentReport {
            dependent: count("dependent"),
            no_relation: count("no_relation"),
            resource_exceeded: count("resource_exceeded"),
            spec,
            trials,
        }
    }

    /// Trials with no relation up to the degree bound: candidate
    /// counterexamples, worth re-running at a higher bound.
    pub fn unresolved(&self) -> Vec<usize> {
        self.trials
            .iter()
            .filter(|t| matches!(t.outcome, TrialOutcome::NoRelationUpTo(_)))
            .map(|t| t.index)
            .collect()
    }

    pub fn all_certificates_verify(&self) -> bool {
        self.trials.iter().all(|t| match &t.outcome {
            TrialOutcome::Dependent(c) => c.check().is_ok(),
            _ => true,
        })
    }

    /// JSON report. Wall-clock times are included only on request, so that
    /// the default output depends on the spec alone.
    pub fn to_json(&self, timings: bool) -> String {
        let algebra = self.algebra_ring();
        let wire = ReportWire {
            spec: self.spec.clone(),
            summary: SummaryWire {
                trials: self.trials.len(),
                dependent: self.dependent,
                no_relation: self.no_relation,
                resource_exceeded: self.resource_exceeded,
                unresolved: self.unresolved(),
            },
            trials: self
                .trials
                .iter()
                .map(|t| {
                    let (certificate, degree_bound, detail) = match &t.outcome {
                        TrialOutcome::Dependent(c) => (Some(c.to_wire()), None, None),
                        TrialOutcome::NoRelationUpTo(d) => (None, Some(*d), None),
                        TrialOutcome::ResourceExceeded(why) => (None, None, Some(why.clone())),
                    };
                    TrialWire {
                        trial: t.index,
                        elements: t.elements.iter().map(|e| algebra.fmt_elem(e)).collect(),
                        verdict: t.verdict().into(),
                        certificate,
                        degree_bound,
                        detail,
                        millis: timings.then_some(t.millis),
                    }
                })
                .collect(),
        };
        serde_json::to_string_pretty(&wire).expect("report serializes")
    }

    /// Load a report, re-verifying every embedded certificate.
    pub fn from_json(text: &str) -> Result<Self> {
        let wire: ReportWire = serde_json::from_str(text)?;
        let algebra: Ring = wire.spec.ring.parse()?;
        let mut trials = Vec::with_capacity(wire.trials.len());
        for t in wire.trials {
            let elements = t.elements.iter().map(|e| algebra.parse_elem(e)).collect::<Result<Vec<_>>>()?;
            let outcome = match (t.verdict.as_str(), t.certificate, t.degree_bound, t.detail) {
                ("dependent", Some(c), _, _) => {
                    let cert = SubmonicCertificate::from_wire(c)?;
                    if let Err(why) = cert.check() {
                        return Err(Error::Invalid(format!("certificate of trial {} fails: {why}", t.trial)));
                    }
                    if cert.elements != elements {
                        return Err(Error::Invalid(format!("certificate of trial {} is for other elements", t.trial)));
                    }
                    TrialOutcome::Dependent(Box::new(cert))
                }
                ("no_relation", _, Some(d), _) => TrialOutcome::NoRelationUpTo(d),
                ("resource_exceeded", _, _, Some(why)) => TrialOutcome::ResourceExceeded(why),
                (v, ..) => return Err(Error::Invalid(format!("trial {}: malformed verdict `{v}`", t.trial))),
            };
            trials.push(TrialRecord { index: t.trial, elements, outcome, millis: t.millis.unwrap_or(0) });
        }
        let report = ExperimentReport::new(wire.spec, trials);
        let s = &wire.summary;
        if (s.trials, s.dependent, s.no_relation, s.resource_exceeded)
            != (report.trials.len(), report.dependent, report.no_relation, report.resource_exceeded)
        {
            return Err(Error::Invalid("summary counts disagree with the trials".into()));
        }
        Ok(report)
    }

    /// One line per trial: `trial,arity,verdict,cert_degree,millis`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("trial,arity,verdict,cert_degree,millis\n");
        for t in &self.trials {
            let degree = match &t.outcome {
                TrialOutcome::Dependent(c) => c.total_degree().to_string(),
                _ => String::new(),
            };
            out.push_str(&format!("{},{},{},{},{}\n", t.index, t.elements.len(), t.verdict(), degree, t.millis));
        }
        out
    }

    /// Human-readable summary, listing unresolved trials.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "trials: {}\ndependent: {}\nno relation up to degree {}: {}\nresource exceeded: {}\n",
            self.trials.len(),
            self.dependent,
            self.spec.max_degree,
            self.no_relation,
            self.resource_exceeded
        );
        let unresolved = self.unresolved();
        if !unresolved.is_empty() {
            let algebra = self.algebra_ring();
            out.push_str(&format!(
                "unresolved trials (re-run with a larger --maxdeg than {}):\n",
                self.spec.max_degree
            ));
            for t in self.trials.iter().filter(|t| unresolved.contains(&t.index)) {
                let elems: Vec<String> = t.elements.iter().map(|e| algebra.fmt_elem(e)).collect();
                out.push_str(&format!("  {}: {}\n", t.index, elems.join(", ")));
            }
        }
        out
    }

    fn algebra_ring(&self) -> Ring {
        self.spec.ring.parse().expect("spec ring was validated")
    }
}

/// Krull dimension of a ring in the catalog: `ZZ` has dimension 1, fields
/// and `Zmod(n)` dimension 0, a polynomial ring in `k` variables over `R`
/// has `dim R + k`, and quotients are measured by their staircase.
pub fn known_dim(ring: &Ring) -> Result<i64> {
    Ok(match ring {
        Ring::ZZ => 1,
        Ring::QQ | Ring::GF(_) | Ring::Zmod(_) => 0,
        Ring::Poly(pr) => known_dim(&pr.base)? + pr.vars.len() as i64,
        Ring::Quot(q) => q.basis.staircase_dimension()?,
    })
}
