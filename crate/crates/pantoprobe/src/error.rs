//! Error types shared across the crate.

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by kinematics, statics, simulation, and design routines.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A parameter failed its basic validity check (positivity, range, ordering).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A joint angle left the supported elbow-up branch.
    #[error("joint angle {theta1} rad outside the admissible branch (0, {max} rad]")]
    OutOfBranch {
        /// Offending angle, radians.
        theta1: f64,
        /// Upper end of the branch, radians (pi/2).
        max: f64,
    },

    /// A requested endpoint height cannot be reached by the mechanism.
    #[error("height {height} m outside the reachable stroke (0, {max} m]{context}")]
    Unreachable {
        /// Offending height, meters.
        height: f64,
        /// Maximum reachable height, meters.
        max: f64,
        /// Extra context, e.g. which sweep entry failed.
        context: String,
    },

    /// Closed-form inverse kinematics only exists for equal link lengths.
    #[error("inverse kinematics requires equal link lengths (l1 = {l1} m, l2 = {l2} m)")]
    UnequalLinks {
        /// Lower link length, meters.
        l1: f64,
        /// Upper link length, meters.
        l2: f64,
    },

    /// A design request cannot be satisfied at all (e.g. zero input force
    /// with a nonzero force target).
    #[error("infeasible request: {0}")]
    Infeasible(String),

    /// A scenario or solver configuration is malformed.
    #[error("configuration error: {0}")]
    Config(String),

    /// A scenario document failed to parse.
    #[error("config parse error: {0}")]
    ConfigParse(String),
}

impl Error {
    pub(crate) fn out_of_branch(theta1: f64) -> Self {
        Error::OutOfBranch {
            theta1,
            max: std::f64::consts::FRAC_PI_2,
        }
    }

    pub(crate) fn unreachable(height: f64, max: f64) -> Self {
        Error::Unreachable {
            height,
            max,
            context: String::new(),
        }
    }
}
