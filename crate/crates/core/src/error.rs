use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Param(String),

    #[error("malformed graph6 at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// `p(F)` is only defined for bipartite graphs.
    #[error("graph is not bipartite; odd cycle {cycle:?}")]
    NotBipartite { cycle: Vec<usize> },

    /// `γ(F)` is only defined for 3-chromatic graphs.
    #[error("graph has chromatic number {chi}, expected 3")]
    NotThreeChromatic { chi: usize },

    #[error("{what} budget exhausted (limit {limit})")]
    Budget { what: &'static str, limit: u64 },
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget { .. })
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Param(msg.into())
    }
}
