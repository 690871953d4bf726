//! Nondimensional Brusselator model: parameters, domain, homogeneous state,
//! and the operator decomposition (linear part plus quadratic and cubic
//! nonlinearity) that every downstream module works with.
//!
//! The deviation variables (v1, v2) measure the state relative to the
//! homogeneous solution (alpha, lambda/alpha). In those variables the
//! reaction nonlinearity is
//!
//! ```text
//! G(v) = ( (2 lambda / alpha) v1^2 + 2 alpha v1 v2 + v1^2 v2 ) * (1, -1)
//! ```
//!
//! and the remaining terms are linear with the per-mode matrices built in
//! [`crate::spectrum`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Two-component state or coefficient vector.
pub type Vec2 = [f64; 2];

fn require_positive(field: &'static str, value: f64) -> Result<()> {
    if !(value > 0.0) || !value.is_finite() {
        return Err(Error::Validation {
            field,
            message: format!("must be strictly positive and finite, got {value}"),
        });
    }
    Ok(())
}

/// Nondimensional model parameters.
///
/// All downstream formulas divide by `mu2`, `alpha`, or combinations of
/// them, so validation is eager: a value of this type is always usable.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct BrusselatorParams {
    mu1: f64,
    mu2: f64,
    alpha: f64,
    lambda: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
struct RawParams {
    mu1: f64,
    mu2: f64,
    alpha: f64,
    lambda: f64,
}

impl TryFrom<RawParams> for BrusselatorParams {
    type Error = Error;
    fn try_from(r: RawParams) -> Result<Self> {
        BrusselatorParams::new(r.mu1, r.mu2, r.alpha, r.lambda)
    }
}

impl From<BrusselatorParams> for RawParams {
    fn from(p: BrusselatorParams) -> Self {
        RawParams { mu1: p.mu1, mu2: p.mu2, alpha: p.alpha, lambda: p.lambda }
    }
}

impl BrusselatorParams {
    pub fn new(mu1: f64, mu2: f64, alpha: f64, lambda: f64) -> Result<Self> {
        require_positive("mu1", mu1)?;
        require_positive("mu2", mu2)?;
        require_positive("alpha", alpha)?;
        if !(lambda >= 0.0) || !lambda.is_finite() {
            return Err(Error::Validation {
                field: "lambda",
                message: format!("must be nonnegative and finite, got {lambda}"),
            });
        }
        Ok(Self { mu1, mu2, alpha, lambda })
    }

    pub fn mu1(&self) -> f64 {
        self.mu1
    }

    pub fn mu2(&self) -> f64 {
        self.mu2
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// Same parameters with the control value replaced.
    pub fn with_lambda(&self, lambda: f64) -> Result<Self> {
        Self::new(self.mu1, self.mu2, self.alpha, lambda)
    }

    /// The spatially constant steady state (alpha, lambda/alpha).
    pub fn homogeneous_state(&self) -> (f64, f64) {
        (self.alpha, self.lambda / self.alpha)
    }
}

/// Boundary condition applied on the whole boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryCondition {
    Dirichlet,
    Neumann,
}

/// Domain geometry: an interval or a rectangular box in dimension 2 or 3.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum DomainShape {
    Interval { length: f64 },
    Box { lengths: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DomainSpec {
    pub shape: DomainShape,
    pub bc: BoundaryCondition,
}

impl DomainSpec {
    pub fn interval(length: f64, bc: BoundaryCondition) -> Result<Self> {
        require_positive("length", length)?;
        Ok(Self { shape: DomainShape::Interval { length }, bc })
    }

    pub fn rectangular(lengths: Vec<f64>, bc: BoundaryCondition) -> Result<Self> {
        if lengths.len() < 2 || lengths.len() > 3 {
            return Err(Error::Validation {
                field: "lengths",
                message: format!("box dimension must be 2 or 3, got {}", lengths.len()),
            });
        }
        for &l in &lengths {
            require_positive("lengths", l)?;
        }
        Ok(Self { shape: DomainShape::Box { lengths }, bc })
    }

    pub fn dimension(&self) -> usize {
        match &self.shape {
            DomainShape::Interval { .. } => 1,
            DomainShape::Box { lengths } => lengths.len(),
        }
    }

    /// Axis lengths as a slice view (single element for intervals).
    pub fn lengths(&self) -> Vec<f64> {
        match &self.shape {
            DomainShape::Interval { length } => vec![*length],
            DomainShape::Box { lengths } => lengths.clone(),
        }
    }

    pub fn volume(&self) -> f64 {
        self.lengths().iter().product()
    }

    /// Interval length, or an error for boxes (simulation is 1D only).
    pub fn interval_length(&self) -> Result<f64> {
        match &self.shape {
            DomainShape::Interval { length } => Ok(*length),
            DomainShape::Box { .. } => {
                Err(Error::Unsupported("this operation requires a 1D interval domain".into()))
            }
        }
    }
}

/// Dimensional inputs: rate constants, diffusivities, reservoir
/// concentrations, and the length scale of the vessel.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PhysicalInputs {
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
    pub k4: f64,
    pub sigma1: f64,
    pub sigma2: f64,
    pub a: f64,
    pub b: f64,
    pub l: f64,
}

/// Scales dropped during nondimensionalization, reported for traceability.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionalScales {
    /// Unit of time in the scaled equations.
    pub time: f64,
    /// Unit of length in the scaled equations.
    pub length: f64,
}

/// Maps dimensional inputs to the nondimensional parameter set:
/// alpha = a (k1^2 k3 / k4^3)^{1/2}, lambda = b k2 / k4, mu_i = sigma_i / (l^2 k4).
pub fn nondimensionalize(raw: &PhysicalInputs) -> Result<(BrusselatorParams, DimensionalScales)> {
    for (field, value) in [
        ("k1", raw.k1),
        ("k2", raw.k2),
        ("k3", raw.k3),
        ("k4", raw.k4),
        ("sigma1", raw.sigma1),
        ("sigma2", raw.sigma2),
        ("a", raw.a),
        ("b", raw.b),
        ("l", raw.l),
    ] {
        require_positive(field, value)?;
    }
    let alpha = raw.a * (raw.k1 * raw.k1 * raw.k3 / raw.k4.powi(3)).sqrt();
    let lambda = raw.b * raw.k2 / raw.k4;
    let denom = raw.l * raw.l * raw.k4;
    let params = BrusselatorParams::new(raw.sigma1 / denom, raw.sigma2 / denom, alpha, lambda)?;
    Ok((params, DimensionalScales { time: 1.0 / raw.k4, length: raw.l }))
}

/// Full nonlinearity in deviation variables; components sum to zero.
pub fn nonlinearity(v1: f64, v2: f64, p: &BrusselatorParams) -> Vec2 {
    let g1 = (2.0 * p.lambda / p.alpha) * v1 * v1 + 2.0 * p.alpha * v1 * v2 + v1 * v1 * v2;
    [g1, -g1]
}

/// Bilinear part, in the ordered two-slot form the expansion formulas use:
/// G2(u, v) = 2 ((lambda/alpha) u1 v1 + alpha u1 v2) (1, -1).
///
/// Note the deliberate asymmetry: the second slot enters only through v1 in
/// the quadratic piece and only through v2 in the cross piece. The
/// symmetrized combination G2(u, v) + G2(v, u) is what appears in every
/// paired expansion term, and G2(v, v) reproduces the quadratic part of
/// [`nonlinearity`].
pub fn bilinear(u: Vec2, v: Vec2, p: &BrusselatorParams) -> Vec2 {
    let g = 2.0 * ((p.lambda / p.alpha) * u[0] * v[0] + p.alpha * u[0] * v[1]);
    [g, -g]
}

/// Trilinear part, symmetrized over its three slots; G3(v, v, v) = v1^2 v2 (1, -1).
pub fn trilinear(u: Vec2, v: Vec2, w: Vec2, p: &BrusselatorParams) -> Vec2 {
    let _ = p;
    let g = (u[0] * v[0] * w[1] + v[0] * w[0] * u[1] + w[0] * u[0] * v[1]) / 3.0;
    [g, -g]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn validation_names_the_field() {
        let err = BrusselatorParams::new(-1.0, 0.004, 2.0, 5.0).unwrap_err();
        assert!(err.to_string().contains("mu1"));
        let err = BrusselatorParams::new(0.002, 0.004, 2.0, -0.1).unwrap_err();
        assert!(err.to_string().contains("lambda"));
    }

    #[test]
    fn homogeneous_state_values() {
        let p = BrusselatorParams::new(0.002, 0.004, 2.0, 5.0).unwrap();
        assert_eq!(p.homogeneous_state(), (2.0, 2.5));
        let p = BrusselatorParams::new(0.002, 0.004, 1.0, 0.0).unwrap();
        assert_eq!(p.homogeneous_state(), (1.0, 0.0));
        let p = BrusselatorParams::new(0.002, 0.004, 3.0, 9.8).unwrap();
        let (u1, u2) = p.homogeneous_state();
        assert_eq!(u1, 3.0);
        assert_relative_eq!(u2, 9.8 / 3.0, max_relative = 1e-15);
    }

    #[test]
    fn scaling_identity_and_arithmetic() {
        let raw = PhysicalInputs {
            k1: 1.0,
            k2: 1.0,
            k3: 1.0,
            k4: 1.0,
            sigma1: 0.25,
            sigma2: 0.75,
            a: 1.5,
            b: 2.5,
            l: 1.0,
        };
        let (p, scales) = nondimensionalize(&raw).unwrap();
        assert_eq!(p.alpha(), 1.5);
        assert_eq!(p.lambda(), 2.5);
        assert_eq!(p.mu1(), 0.25);
        assert_eq!(p.mu2(), 0.75);
        assert_eq!(scales.time, 1.0);

        // alpha = a sqrt(k1^2 k3 / k4^3) and lambda = b k2 / k4
        let raw = PhysicalInputs { k1: 2.0, k3: 1.0, k4: 4.0, a: 8.0, b: 10.0, k2: 3.0, ..raw };
        let (p, _) = nondimensionalize(&raw).unwrap();
        assert_relative_eq!(p.alpha(), 8.0 * (4.0 / 64.0f64).sqrt(), max_relative = 1e-15);
        assert_relative_eq!(p.lambda(), 10.0 * 3.0 / 4.0, max_relative = 1e-15);
        let raw = PhysicalInputs { k2: 3.0, k4: 6.0, b: 10.0, ..raw };
        let (p, _) = nondimensionalize(&raw).unwrap();
        assert_relative_eq!(p.lambda(), 5.0, max_relative = 1e-15);
    }

    #[test]
    fn nonlinearity_components_cancel() {
        let p = BrusselatorParams::new(0.002, 0.004, 1.0, 1.0).unwrap();
        let g = nonlinearity(1.0, 0.0, &p);
        assert_eq!(g, [2.0, -2.0]);
        let g = nonlinearity(0.0, 0.0, &p);
        assert_eq!(g, [0.0, 0.0]);
        for (v1, v2) in [(0.3, -0.7), (1.9, 2.4), (-0.5, 0.1)] {
            let g = nonlinearity(v1, v2, &p);
            assert_eq!(g[0] + g[1], 0.0);
        }
    }

    #[test]
    fn jacobian_of_g_vanishes_at_zero() {
        let p = BrusselatorParams::new(0.002, 0.004, 2.0, 5.0).unwrap();
        let h = 1e-7;
        // finite differences of G at the origin
        for dir in [[h, 0.0], [0.0, h]] {
            let g = nonlinearity(dir[0], dir[1], &p);
            assert!(g[0].abs() / h < 1e-5, "linear leakage {g:?}");
        }
    }

    #[test]
    fn bilinear_matches_contract_vector() {
        let p = BrusselatorParams::new(0.002, 0.004, 1.0, 2.0).unwrap();
        let g = bilinear([1.0, 0.0], [0.0, 1.0], &p);
        assert_eq!(g, [2.0, -2.0]);
    }

    #[test]
    fn decomposition_reassembles_g() {
        let p = BrusselatorParams::new(0.002, 0.004, 2.3, 4.1).unwrap();
        for (v1, v2) in [(0.4, -0.2), (-1.1, 0.9), (0.05, 0.07)] {
            let v = [v1, v2];
            let direct = nonlinearity(v1, v2, &p);
            let b = bilinear(v, v, &p);
            let t = trilinear(v, v, v, &p);
            assert_relative_eq!(b[0] + t[0], direct[0], max_relative = 1e-14);
            assert_relative_eq!(b[1] + t[1], direct[1], max_relative = 1e-14);
        }
    }

    #[test]
    fn trilinear_is_symmetric() {
        let p = BrusselatorParams::new(0.002, 0.004, 2.0, 5.0).unwrap();
        let (u, v, w) = ([0.3, 1.2], [-0.8, 0.5], [2.0, -0.4]);
        let base = trilinear(u, v, w, &p);
        for perm in [
            trilinear(u, w, v, &p),
            trilinear(v, u, w, &p),
            trilinear(v, w, u, &p),
            trilinear(w, u, v, &p),
            trilinear(w, v, u, &p),
        ] {
            assert_relative_eq!(perm[0], base[0], max_relative = 1e-14);
        }
    }

    #[test]
    fn domain_validation() {
        assert!(DomainSpec::interval(4.0, BoundaryCondition::Neumann).is_ok());
        assert!(DomainSpec::interval(0.0, BoundaryCondition::Neumann).is_err());
        assert!(DomainSpec::rectangular(vec![1.0], BoundaryCondition::Dirichlet).is_err());
        assert!(DomainSpec::rectangular(vec![1.0, 2.0, 3.0, 4.0], BoundaryCondition::Dirichlet)
            .is_err());
        let d = DomainSpec::rectangular(vec![1.0, 2.0], BoundaryCondition::Dirichlet).unwrap();
        assert_eq!(d.dimension(), 2);
        assert_eq!(d.volume(), 2.0);
    }
}
