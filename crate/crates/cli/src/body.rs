//! JSON body descriptions and their conversion to geometry types.
//!
//! Schema (lengths are dimensionless; units are the caller's
//! convention):
//!
//! ```json
//! {"type":"fourier","a0":2.0,"cos":[0.1],"sin":[],"M":512}
//! {"type":"ellipse","a":1.0,"b":1.2,"M":512}
//! {"type":"hull","points":[[1,1],[-1,1],[-1,-1],[1,-1]],"M":512}
//! ```
//!
//! `M` is optional and defaults to 512.

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

use steklov_core::geometry::{body_from_ellipse, body_from_hull, StarBody2D};

fn default_quadrature() -> usize {
    steklov_core::eigensolver::DEFAULT_QUADRATURE
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum BodyDescription {
    Fourier {
        a0: f64,
        #[serde(default)]
        cos: Vec<f64>,
        #[serde(default)]
        sin: Vec<f64>,
        #[serde(rename = "M", default = "default_quadrature")]
        m: usize,
    },
    Ellipse {
        a: f64,
        b: f64,
        #[serde(rename = "M", default = "default_quadrature")]
        m: usize,
    },
    Hull {
        points: Vec<[f64; 2]>,
        #[serde(rename = "M", default = "default_quadrature")]
        m: usize,
    },
}

impl BodyDescription {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).context("invalid body JSON")
    }

    pub fn build(&self) -> Result<StarBody2D> {
        let body = match self {
            BodyDescription::Fourier { a0, cos, sin, m } => {
                StarBody2D::new(*a0, cos.clone(), sin.clone(), *m)?
            }
            BodyDescription::Ellipse { a, b, m } => body_from_ellipse(*a, *b, *m)?,
            BodyDescription::Hull { points, m } => body_from_hull(points, *m)?,
        };
        Ok(body)
    }
}
