use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("no edge {0}-{1}")]
    MissingEdge(usize, usize),
    #[error("no vertex {0}")]
    MissingVertex(usize),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("vertices {0}, {1}, {2} do not form a triangle")]
    NotATriangle(usize, usize, usize),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    WrongDegree { vertex: usize, degree: usize },
    #[error("neighbor partition does not cover the neighborhood of {0} exactly")]
    BadSplit(usize),
    #[error("vertex set is not connected")]
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {message}")]
pub struct Graph6Error {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error("search budget of {0} nodes exhausted: undecided")]
    Undecided(u64),
    #[error("host piece has {0} vertices; the search supports at most 64")]
    TooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliqueSumError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Minor(#[from] MinorError),
    #[error("clique order {0} outside 1..=5")]
    BadOrder(usize),
    #[error("identified vertices of the {side} summand do not induce a clique")]
    NotAClique { side: &'static str },
    #[error("vertex set {0:?} is not a clique")]
    CutNotClique(Vec<usize>),
    #[error("vertex set {0:?} does not disconnect the graph")]
    NotACut(Vec<usize>),
    #[error("vertex set {0:?} is not a minimal vertex cut of the sum")]
    NotMinimalCut(Vec<usize>),
    #[error("vertices {0:?} do not induce K4")]
    NotTetrahedral(Vec<usize>),
    #[error("summand {0} is not maxnil")]
    SummandNotMaxnil(usize),
    #[error("the sum has vertex connectivity {0}, expected 3")]
    Connectivity(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter {param} = {value} outside the supported range {range}")]
    OutOfRange {
        param: &'static str,
        value: usize,
        range: &'static str,
    },
    #[error("edge {0:?} chosen more than once")]
    RepeatedEdge((usize, usize)),
    #[error("edge {0:?} is not an edge of the base graph")]
    NotAnEdge((usize, usize)),
    #[error("transcription self-check failed for {graph}: {detail}")]
    SelfCheck { graph: &'static str, detail: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbedError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(usize, usize),
    #[error("rotation system does not match its host: {0}")]
    BadRotation(String),
    #[error("rotation system is not planar: V - E + F = {0} in some component")]
    NotPlanar(i64),
    #[error("{0:?} is not a cycle of the embedded graph")]
    NotACycle(Vec<usize>),
    #[error("more than {0} cycles: undecided")]
    TooManyCycles(usize),
    #[error("rotation text line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn messages() {
        assert_eq!(GraphError::MissingEdge(2, 5).to_string(), "no edge 2-5");
        let e = CliqueSumError::from(MinorError::Undecided(9));
        assert_eq!(e.to_string(), "search budget of 9 nodes exhausted: undecided");
        assert!(matches!(e, CliqueSumError::Minor(MinorError::Undecided(9))));
        let e = Graph6Error {
            offset: 3,
            message: "bad byte".into(),
        };
        assert_eq!(e.to_string(), "graph6 parse error at byte 3: bad byte");
    }
}
