//! Planar two-bar pantograph kinematics.
//!
//! The linkage is a lower bar of length `l1` hinged at the base and an upper
//! bar of length `l2` hinged at the elbow. `theta1` is the lower-bar angle
//! measured counterclockwise from the horizontal base line; `theta2` is the
//! relative elbow angle, so the upper bar sits at the absolute angle
//! `theta1 + theta2`. A 2:1 coupling between the joints enforces
//! `2*theta1 + theta2 = pi`, which pins the endpoint to a vertical line when
//! the bars have equal length and makes the force transmission ratio
//! configuration-independent (see [`crate::statics`]).
//!
//! All operations here are pure functions over plain value types. The
//! supported operating branch is the elbow-up range `theta1 in (0, pi/2]`;
//! the straight-line pose at `theta1 = 0` is a singularity the physical
//! mechanism never crosses.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::{Matrix2, Vector2};

use crate::error::{Error, Result};

/// Tolerance used by the `is_constrained` / `is_constraint_consistent`
/// predicates: tight enough to catch logic errors, loose enough for
/// accumulated floating-point error in long runs.
pub const CONSTRAINT_TOLERANCE: f64 = 1e-9;

/// Link lengths within this relative tolerance count as equal for the
/// closed-form inverse kinematics.
pub const EQUAL_LINK_TOLERANCE: f64 = 1e-12;

/// Geometric parameters of the pantograph.
///
/// `tip_offset` is a constant added to the linkage height to obtain the probe
/// tip height; it defaults to zero and only matters when relating simulated
/// heights to a physical probe.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PantographConfig {
    l1: f64,
    l2: f64,
    r: f64,
    tip_offset: f64,
}

impl PantographConfig {
    /// Validate and build a configuration from link lengths and lever arm.
    pub fn new(l1: f64, l2: f64, r: f64) -> Result<Self> {
        for (name, value) in [("l1", l1), ("l2", l2), ("r", r)] {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive and finite, got {value}"
                )));
            }
        }
        Ok(Self {
            l1,
            l2,
            r,
            tip_offset: 0.0,
        })
    }

    /// Set the constant probe-tip offset added on top of the linkage height.
    pub fn with_tip_offset(mut self, tip_offset: f64) -> Result<Self> {
        if !tip_offset.is_finite() || tip_offset < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "tip_offset must be nonnegative and finite, got {tip_offset}"
            )));
        }
        self.tip_offset = tip_offset;
        Ok(self)
    }

    /// Lower link length, meters.
    pub fn l1(&self) -> f64 {
        self.l1
    }

    /// Upper link length, meters.
    pub fn l2(&self) -> f64 {
        self.l2
    }

    /// Lever-arm length at the base joint, meters.
    pub fn r(&self) -> f64 {
        self.r
    }

    /// Probe-tip offset above the linkage endpoint, meters.
    pub fn tip_offset(&self) -> f64 {
        self.tip_offset
    }

    /// True when the links are equal within [`EQUAL_LINK_TOLERANCE`], i.e.
    /// the constrained endpoint moves on a vertical line.
    pub fn has_equal_links(&self) -> bool {
        (self.l1 - self.l2).abs() <= EQUAL_LINK_TOLERANCE * self.l1.max(self.l2)
    }

    /// Maximum linkage height, `l1 + l2` under the pantograph constraint
    /// (equal to `2*l1` for equal links).
    pub fn max_height(&self) -> f64 {
        self.l1 + self.l2
    }

    /// Maximum probe-tip height, linkage stroke plus tip offset.
    pub fn max_reach(&self) -> f64 {
        self.max_height() + self.tip_offset
    }

    /// Endpoint position for an arbitrary (unconstrained) joint state.
    pub fn forward_kinematics(&self, joints: JointState) -> EndpointState {
        let abs_upper = joints.theta1 + joints.theta2;
        EndpointState {
            x: self.l1 * joints.theta1.cos() + self.l2 * abs_upper.cos(),
            y: self.l1 * joints.theta1.sin() + self.l2 * abs_upper.sin(),
        }
    }

    /// Endpoint position with the pantograph constraint applied:
    /// `x = (l1 - l2) cos(theta1)`, `y = (l1 + l2) sin(theta1)`.
    pub fn constrained_fk(&self, theta1: f64) -> Result<EndpointState> {
        check_branch(theta1)?;
        Ok(EndpointState {
            x: (self.l1 - self.l2) * theta1.cos(),
            y: (self.l1 + self.l2) * theta1.sin(),
        })
    }

    /// Closed-form inverse kinematics on the vertical line.
    ///
    /// Only defined for equal links, where `y = 2*l1*sin(theta1)` inverts to
    /// `theta1 = asin(y / (2*l1))`. Heights outside `(0, 2*l1]` are
    /// unreachable.
    pub fn inverse_kinematics(&self, y: f64) -> Result<JointState> {
        if !self.has_equal_links() {
            return Err(Error::UnequalLinks {
                l1: self.l1,
                l2: self.l2,
            });
        }
        let max = self.max_height();
        if !y.is_finite() || y <= 0.0 || y > max {
            return Err(Error::unreachable(y, max));
        }
        // y <= 2*l1 guarantees the ratio rounds to at most 1.0.
        let theta1 = (y / max).asin();
        constrain(theta1)
    }

    /// Analytic Jacobian of [`Self::forward_kinematics`]:
    /// rows are (x, y), columns are (theta1, theta2), entries in m/rad.
    pub fn jacobian(&self, joints: JointState) -> Matrix2<f64> {
        let abs_upper = joints.theta1 + joints.theta2;
        let (s1, c1) = joints.theta1.sin_cos();
        let (s12, c12) = abs_upper.sin_cos();
        Matrix2::new(
            -self.l1 * s1 - self.l2 * s12,
            -self.l2 * s12,
            self.l1 * c1 + self.l2 * c12,
            self.l2 * c12,
        )
    }

    /// Joint and endpoint velocities under the pantograph constraint.
    ///
    /// The 2:1 coupling gives `omega2 = -2*omega1`; the endpoint velocity is
    /// the Jacobian applied to that joint rate. For equal links the
    /// horizontal component vanishes and `dy/dt = 2*l1*cos(theta1)*omega1`.
    pub fn constrained_velocity(
        &self,
        theta1: f64,
        omega1: f64,
    ) -> Result<(JointVelocity, Vector2<f64>)> {
        let joints = constrain(theta1)?;
        let velocity = JointVelocity {
            omega1,
            omega2: -2.0 * omega1,
        };
        let endpoint = self.jacobian(joints) * Vector2::new(velocity.omega1, velocity.omega2);
        Ok((velocity, endpoint))
    }
}

/// Joint angles of the two bars, radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointState {
    /// Lower-bar angle from the horizontal base line.
    pub theta1: f64,
    /// Relative elbow angle of the upper bar.
    pub theta2: f64,
}

impl JointState {
    /// True when the state satisfies the pantograph constraint
    /// `2*theta1 + theta2 = pi` within [`CONSTRAINT_TOLERANCE`].
    pub fn is_constrained(&self) -> bool {
        (2.0 * self.theta1 + self.theta2 - PI).abs() <= CONSTRAINT_TOLERANCE
    }
}

/// Joint angular rates, rad/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointVelocity {
    /// Rate of the base joint.
    pub omega1: f64,
    /// Rate of the elbow joint.
    pub omega2: f64,
}

impl JointVelocity {
    /// True when the rates satisfy the differentiated constraint
    /// `2*omega1 + omega2 = 0` within [`CONSTRAINT_TOLERANCE`].
    pub fn is_constraint_consistent(&self) -> bool {
        (2.0 * self.omega1 + self.omega2).abs() <= CONSTRAINT_TOLERANCE
    }
}

/// Endpoint position in the linkage plane, meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndpointState {
    /// Horizontal coordinate.
    pub x: f64,
    /// Vertical coordinate (height above the base axis).
    pub y: f64,
}

/// Reject angles outside the elbow-up operating branch `(0, pi/2]`.
pub(crate) fn check_branch(theta1: f64) -> Result<()> {
    if !theta1.is_finite() || theta1 <= 0.0 || theta1 > FRAC_PI_2 {
        return Err(Error::out_of_branch(theta1));
    }
    Ok(())
}

/// Apply the pantograph constraint: `theta2 = pi - 2*theta1`.
pub fn constrain(theta1: f64) -> Result<JointState> {
    check_branch(theta1)?;
    Ok(JointState {
        theta1,
        theta2: PI - 2.0 * theta1,
    })
}
