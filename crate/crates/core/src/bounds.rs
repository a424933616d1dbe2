//! Edge-count bounds for maxnil graphs, compared exactly.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::graph::Graph;

fn as_text<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// Edge count of one graph against the known bounds: at most `4n - 10`
/// edges for any maxnil graph, at least `2n`, and the sparse target
/// `25n/12 - 1/4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsRow {
    pub label: String,
    pub n: usize,
    pub m: usize,
    #[serde(serialize_with = "as_text")]
    pub ratio: Ratio<i64>,
    pub mader: i64,
    pub aires: i64,
    #[serde(serialize_with = "as_text")]
    pub target: Ratio<i64>,
    /// Whether the graph is known to be maxnil; `None` when unchecked.
    pub certified: Option<bool>,
}

pub fn target_bound(n: usize) -> Ratio<i64> {
    Ratio::new(25 * n as i64, 12) - Ratio::new(1, 4)
}

impl BoundsRow {
    pub fn new(label: impl Into<String>, n: usize, m: usize, certified: Option<bool>) -> Self {
        let (ni, mi) = (n as i64, m as i64);
        BoundsRow {
            label: label.into(),
            n,
            m,
            ratio: if n == 0 {
                Ratio::from_integer(0)
            } else {
                Ratio::new(mi, ni)
            },
            mader: 4 * ni - 10,
            aires: 2 * ni,
            target: target_bound(n),
            certified,
        }
    }

    pub fn of_graph(label: impl Into<String>, g: &Graph, certified: Option<bool>) -> Self {
        BoundsRow::new(label, g.order(), g.size(), certified)
    }

    /// `m < 25n/12 - 1/4`.
    pub fn below_target(&self) -> bool {
        Ratio::from_integer(self.m as i64) < self.target
    }

    /// `2n <= m <= 4n - 10`.
    pub fn within_bounds(&self) -> bool {
        let m = self.m as i64;
        self.aires <= m && m <= self.mader
    }

    /// A certified maxnil graph on at least five vertices outside
    /// `2n <= m <= 4n - 10`.
    pub fn violation(&self) -> bool {
        self.certified == Some(true) && self.n >= 5 && !self.within_bounds()
    }
}

/// One row per labelled graph, in input order.
pub fn bounds_table<'a, I>(graphs: I) -> Vec<BoundsRow>
where
    I: IntoIterator<Item = (String, &'a Graph, Option<bool>)>,
{
    graphs
        .into_iter()
        .map(|(label, g, c)| BoundsRow::of_graph(label, g, c))
        .collect()
}
