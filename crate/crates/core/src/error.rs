use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid tube: {0}")]
    InvalidTube(String),

    #[error("invalid tubing: {0}")]
    InvalidTubing(String),

    #[error("palette has {got} colors but a graph on {nodes} nodes needs {expected}")]
    PaletteSize { nodes: usize, got: usize, expected: usize },

    #[error("invalid color template: {0}")]
    InvalidTemplate(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("face limit of {limit} exceeded")]
    FaceLimit { limit: usize },

    /// A poset that does not have the shape an operation relies on.
    #[error("malformed poset: {0}")]
    Structure(String),
}

impl Error {
    /// True for the resource-guard errors (face and isomorphism size caps).
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::FaceLimit { .. })
    }
}
