use alloc::boxed::Box;

/// Everything that can go wrong while measuring, descending or integrating.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeodesicError {
    /// The quadratic form of a segment is negative: the segment is faster than light.
    #[error("spacelike step: quadratic form {quadratic_form} < 0")]
    SpacelikeStep { quadratic_form: f64 },

    #[error("metric singular at r = {r} (schwarzschild radius {m})")]
    MetricSingularity { r: f64, m: f64 },

    #[error("three-point length is zero, no probe step can be derived")]
    ZeroLength,

    /// A middle-point probe of the deviation failed.
    #[error("probe F{}e{axis} failed: {source}", sign(.positive))]
    ProbeFailed {
        axis: usize,
        positive: bool,
        #[source]
        source: Box<GeodesicError>,
    },

    #[error("descent did not settle within {max_iters} moves")]
    DescentBudgetExceeded { max_iters: u64 },

    #[error("every candidate in the neighbourhood is spacelike")]
    NoTimelikeCandidate,

    #[error("coordinate {value} does not fit a 64-bit lattice index")]
    RangeOverflow { value: f64 },

    #[error("metric is not invertible (pivot {pivot})")]
    SingularMetricInversion { pivot: f64 },

    #[error("normalisation drifted to {drift} (tolerance {tolerance}) at s = {s}")]
    NormDrift { drift: f64, tolerance: f64, s: f64 },

    #[error("need at least two apsides of the same kind")]
    InsufficientApsides,

    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),

    #[error("step {step} failed: {source}")]
    StepFailed {
        step: usize,
        #[source]
        source: Box<GeodesicError>,
    },
}

impl GeodesicError {
    /// True when the root cause is a spacelike segment, looking through probe wrappers.
    pub fn is_spacelike(&self) -> bool {
        match self {
            GeodesicError::SpacelikeStep { .. } => true,
            GeodesicError::ProbeFailed { source, .. } | GeodesicError::StepFailed { source, .. } => {
                source.is_spacelike()
            }
            _ => false,
        }
    }

    /// Innermost error, with probe and step wrappers removed.
    pub fn root(&self) -> &GeodesicError {
        match self {
            GeodesicError::ProbeFailed { source, .. } | GeodesicError::StepFailed { source, .. } => {
                source.root()
            }
            other => other,
        }
    }
}

fn sign(positive: &bool) -> char {
    if *positive {
        '+'
    } else {
        '-'
    }
}

pub type Result<T> = core::result::Result<T, GeodesicError>;
