use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::model::MinorModel;
use super::petersen::{k6_pattern, petersen_name, petersen_patterns};
use super::search::{MinorSearcher, PatternSet, SearchConfig};
use crate::error::MinorError;
use crate::graph::{Edge, Graph};
use crate::graph6;

/// A minor model together with the name of the pattern it realizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub pattern: String,
    pub model: MinorModel,
}

/// A non-edge whose addition creates the property under test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Augmentation {
    pub edge: Edge,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkingStatus {
    pub intrinsically_linked: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxnilStatus {
    pub maxnil: bool,
    /// Smallest non-edge whose addition leaves the graph linklessly
    /// embeddable, when there is one.
    pub nil_augmentation: Option<Edge>,
    /// One entry per non-edge checked before the verdict, in order.
    pub augmentations: Vec<Augmentation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K6Status {
    pub maximal: bool,
    pub k6_minor: Option<MinorModel>,
    /// Smallest non-edge whose addition creates no K6 minor.
    pub k6_free_augmentation: Option<Edge>,
    pub augmentations: Vec<Augmentation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub linking: LinkingStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maxnil: Option<MaxnilStatus>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k6_maximal: Option<K6Status>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn is_maxnil(&self) -> Option<bool> {
        self.maxnil.as_ref().map(|s| s.maxnil)
    }

    pub fn is_k6_maximal(&self) -> Option<bool> {
        self.k6_maximal.as_ref().map(|s| s.maximal)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Front end to the minor search: linking, K6 minors, and the
/// augmentation-based maximality checks. One decider shares its cache of
/// refuted pieces across all queries.
#[derive(Debug, Default)]
pub struct Decider {
    searcher: MinorSearcher,
    threads: usize,
}

impl Decider {
    pub fn new(config: SearchConfig) -> Self {
        Decider {
            searcher: MinorSearcher::new(config),
            threads: 1,
        }
    }

    /// Checks non-edge augmentations on `threads` worker threads. Reports
    /// do not depend on the thread count.
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn find_minor(&self, host: &Graph, pattern: &Graph) -> Result<Option<MinorModel>, MinorError> {
        if pattern.order() > host.order() || pattern.size() > host.size() {
            return Ok(None);
        }
        let pats = PatternSet::new(vec![pattern.clone()]);
        Ok(self.searcher.find(host, &pats)?.map(|(_, m)| m))
    }

    /// A Petersen-family minor of `g`, if there is one.
    pub fn intrinsic_link(&self, g: &Graph) -> Result<Option<Witness>, MinorError> {
        let pats = petersen_patterns();
        Ok(self.searcher.find(g, pats)?.map(|(i, model)| Witness {
            pattern: petersen_name(&pats.graphs()[i]),
            model,
        }))
    }

    pub fn k6_minor(&self, g: &Graph) -> Result<Option<MinorModel>, MinorError> {
        Ok(self.searcher.find(g, k6_pattern())?.map(|(_, m)| m))
    }

    fn k6_witness(&self, g: &Graph) -> Result<Option<Witness>, MinorError> {
        Ok(self.k6_minor(g)?.map(|model| Witness {
            pattern: "K6".into(),
            model,
        }))
    }

    /// Runs `test` on `g + e` for each non-edge `e` in lexicographic order
    /// and stops at the first augmentation without a witness.
    fn augment<F>(&self, g: &Graph, test: F) -> Result<(Vec<Augmentation>, Option<Edge>), MinorError>
    where
        F: Fn(&Graph) -> Result<Option<Witness>, MinorError> + Sync,
    {
        let non_edges = g.non_edges();
        let run = |&(a, b): &Edge| test(&g.add_edge(a, b).expect("non-edge"));
        let results: Vec<Result<Option<Witness>, MinorError>> = if self.threads > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.threads)
                .build()
                .expect("thread pool");
            pool.install(|| non_edges.par_iter().map(run).collect())
        } else {
            let mut out = Vec::new();
            for e in &non_edges {
                let r = run(e);
                let stop = !matches!(r, Ok(Some(_)));
                out.push(r);
                if stop {
                    break;
                }
            }
            out
        };
        let mut done = Vec::new();
        for (e, r) in non_edges.into_iter().zip(results) {
            match r? {
                Some(witness) => done.push(Augmentation { edge: e, witness }),
                None => return Ok((done, Some(e))),
            }
        }
        Ok((done, None))
    }

    fn base_report(&self, g: &Graph) -> Result<VerificationReport, MinorError> {
        let witness = self.intrinsic_link(g)?;
        Ok(VerificationReport {
            graph6: graph6::encode(g),
            n: g.order(),
            m: g.size(),
            linking: LinkingStatus {
                intrinsically_linked: witness.is_some(),
                witness,
            },
            maxnil: None,
            k6_maximal: None,
            elapsed: Duration::ZERO,
        })
    }

    pub fn linking_report(&self, g: &Graph) -> Result<VerificationReport, MinorError> {
        let start = Instant::now();
        let mut report = self.base_report(g)?;
        report.elapsed = start.elapsed();
        Ok(report)
    }

    /// Linking status plus maxnility: every non-edge augmentation must be
    /// intrinsically linked.
    pub fn maxnil_report(&self, g: &Graph) -> Result<VerificationReport, MinorError> {
        let start = Instant::now();
        let mut report = self.base_report(g)?;
        self.fill_maxnil(g, &mut report)?;
        report.elapsed = start.elapsed();
        Ok(report)
    }

    fn fill_maxnil(&self, g: &Graph, report: &mut VerificationReport) -> Result<(), MinorError> {
        report.maxnil = Some(if report.linking.intrinsically_linked {
            MaxnilStatus {
                maxnil: false,
                nil_augmentation: None,
                augmentations: Vec::new(),
            }
        } else {
            let (augmentations, failing) = self.augment(g, |h| self.intrinsic_link(h))?;
            MaxnilStatus {
                maxnil: failing.is_none(),
                nil_augmentation: failing,
                augmentations,
            }
        });
        Ok(())
    }

    /// Linking status plus maximality without a K6 minor.
    pub fn k6_maximal_report(&self, g: &Graph) -> Result<VerificationReport, MinorError> {
        let start = Instant::now();
        let mut report = self.base_report(g)?;
        self.fill_k6(g, &mut report)?;
        report.elapsed = start.elapsed();
        Ok(report)
    }

    fn fill_k6(&self, g: &Graph, report: &mut VerificationReport) -> Result<(), MinorError> {
        let own = self.k6_minor(g)?;
        report.k6_maximal = Some(if own.is_some() {
            K6Status {
                maximal: false,
                k6_minor: own,
                k6_free_augmentation: None,
                augmentations: Vec::new(),
            }
        } else {
            let (augmentations, failing) = self.augment(g, |h| self.k6_witness(h))?;
            K6Status {
                maximal: failing.is_none(),
                k6_minor: None,
                k6_free_augmentation: failing,
                augmentations,
            }
        });
        Ok(())
    }

    /// Every check at once.
    pub fn full_report(&self, g: &Graph) -> Result<VerificationReport, MinorError> {
        let start = Instant::now();
        let mut report = self.base_report(g)?;
        self.fill_maxnil(g, &mut report)?;
        self.fill_k6(g, &mut report)?;
        report.elapsed = start.elapsed();
        Ok(report)
    }
}

pub fn find_minor(host: &Graph, pattern: &Graph) -> Result<Option<MinorModel>, MinorError> {
    Decider::default().find_minor(host, pattern)
}

/// Whether `g` contains a Petersen-family minor, with a witness if so.
pub fn is_intrinsically_linked(g: &Graph) -> Result<(bool, Option<Witness>), MinorError> {
    let w = Decider::default().intrinsic_link(g)?;
    Ok((w.is_some(), w))
}

pub fn has_k6_minor(g: &Graph) -> Result<(bool, Option<MinorModel>), MinorError> {
    let m = Decider::default().k6_minor(g)?;
    Ok((m.is_some(), m))
}

pub fn is_maxnil(g: &Graph) -> Result<VerificationReport, MinorError> {
    Decider::default().maxnil_report(g)
}

pub fn is_maximal_k6_minor_free(g: &Graph) -> Result<VerificationReport, MinorError> {
    Decider::default().k6_maximal_report(g)
}
