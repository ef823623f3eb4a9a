use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid coordinate `{0}`")]
    Parse(String),
    #[error("collinear overlapping segments (general position violated)")]
    DegenerateOverlap,
    #[error("observer lies inside or on the convex hull")]
    ObserverInsideHull,
    #[error("convex hulls intersect")]
    HullsIntersect,
    #[error("angle ray endpoint coincides with its apex")]
    DegenerateAngle,
    #[error("pivot coincides with input point {0}")]
    PivotOnPoint(usize),
    #[error("points {0} and {1} are collinear with the pivot")]
    CollinearWithPivot(usize, usize),
    #[error("invalid blob pair: {0}")]
    InvalidBlobPair(String),
    #[error("gap from the last point of blob {0} to the next blob of its color is not below pi")]
    GapAngle(usize),
    #[error("repair exceeded its safety bound of {0} iterations")]
    NonTermination(usize),
    #[error("repair exchange found no admissible edge: {0}")]
    RepairStalled(String),
    #[error("invalid spanning path request: {0}")]
    PathRequest(String),
    #[error("pivot search exhausted: {0}")]
    PivotSearchExhausted(String),
    #[error("enumeration size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("input error: {0}")]
    Input(String),
    #[error("internal invariant violation: {0}")]
    InternalInvariantViolation(String),
}

impl Error {
    /// Errors caused by the caller's data rather than by this crate.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::Input(_)
                | Error::DegenerateOverlap
                | Error::SizeLimit(_)
                | Error::PathRequest(_)
        )
    }
}
