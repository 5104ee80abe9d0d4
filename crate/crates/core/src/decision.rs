//! Three-valued decisions, search limits and certificates.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl From<bool> for Truth {
    fn from(b: bool) -> Self {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Heuristic,
}

/// How much search a decider may spend.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SearchLimit {
    /// Run to completion; never answers `Unknown`.
    #[default]
    Exact,
    /// Stop after this many search nodes and answer `Unknown` if undecided.
    Nodes(u64),
}

impl SearchLimit {
    pub(crate) fn method(self) -> Method {
        match self {
            SearchLimit::Exact => Method::Exact,
            SearchLimit::Nodes(_) => Method::Heuristic,
        }
    }
}

/// Raised internally when a node budget runs out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Exhausted;

/// Node counter shared by the search procedures.
#[derive(Debug)]
pub(crate) struct Budget {
    limit: SearchLimit,
    pub(crate) spent: u64,
}

impl Budget {
    pub(crate) fn new(limit: SearchLimit) -> Self {
        Budget { limit, spent: 0 }
    }

    pub(crate) fn tick(&mut self) -> Result<(), Exhausted> {
        self.spent += 1;
        match self.limit {
            SearchLimit::Nodes(n) if self.spent > n => Err(Exhausted),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub value: Truth,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<Certificate>,
    pub budget_spent: u64,
}

impl Decision {
    pub(crate) fn finish(
        outcome: Result<Option<Certificate>, Exhausted>,
        limit: SearchLimit,
        spent: u64,
    ) -> Self {
        let (value, certificate) = match outcome {
            Ok(Some(cert)) => (Truth::True, Some(cert)),
            Ok(None) => (Truth::False, None),
            Err(Exhausted) => (Truth::Unknown, None),
        };
        Decision {
            value,
            method: limit.method(),
            certificate,
            budget_spent: spent,
        }
    }

    pub fn is_true(&self) -> bool {
        self.value == Truth::True
    }

    pub fn is_false(&self) -> bool {
        self.value == Truth::False
    }

    /// `Some(bool)` when decided.
    pub fn known(&self) -> Option<bool> {
        match self.value {
            Truth::True => Some(true),
            Truth::False => Some(false),
            Truth::Unknown => None,
        }
    }
}

/// Binary tree of vertex choices; each leaf is a simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "kebab-case")]
pub enum VertexTree {
    Simplex {
        facet: Vec<String>,
    },
    Split {
        vertex: String,
        deletion: Box<VertexTree>,
        link: Box<VertexTree>,
    },
}

impl VertexTree {
    pub fn node_count(&self) -> usize {
        match self {
            VertexTree::Simplex { .. } => 1,
            VertexTree::Split { deletion, link, .. } => 1 + deletion.node_count() + link.node_count(),
        }
    }
}

/// Binary tree of variable choices for ideal decompositions `I = xJ + K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node", rename_all = "kebab-case")]
pub enum IdealTree {
    /// Zero ideal, unit ideal or a principal ideal.
    Base { generators: Vec<String> },
    Split {
        variable: String,
        colon: Box<IdealTree>,
        rest: Box<IdealTree>,
    },
}

/// One step `j` of a quotient order: the minimal generators of
/// `(f_1, …, f_{j-1}) : f_j` and the degree of that colon ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientStep {
    pub generator: String,
    pub colon: Vec<String>,
    pub colon_degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    SheddingTree { tree: VertexTree },
    DismissingTree { tree: VertexTree },
    ShellingOrder { facets: Vec<Vec<String>> },
    ScalingOrder { facets: Vec<Vec<String>> },
    DivisionTree { tree: IdealTree },
    SplittingTree { tree: IdealTree },
    LinearQuotientOrder { steps: Vec<QuotientStep> },
    DegreeQuotientOrder { steps: Vec<QuotientStep> },
    EliminationOrder { vertices: Vec<String> },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::SheddingTree { .. } => "shedding-tree",
            Certificate::DismissingTree { .. } => "dismissing-tree",
            Certificate::ShellingOrder { .. } => "shelling-order",
            Certificate::ScalingOrder { .. } => "scaling-order",
            Certificate::DivisionTree { .. } => "division-tree",
            Certificate::SplittingTree { .. } => "splitting-tree",
            Certificate::LinearQuotientOrder { .. } => "linear-quotient-order",
            Certificate::DegreeQuotientOrder { .. } => "degree-quotient-order",
            Certificate::EliminationOrder { .. } => "elimination-order",
        }
    }
}
