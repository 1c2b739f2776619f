//! Asymptotic constants and expansions, generic over a [`Real`] backend:
//! `f64` or the ~32-digit [`DoubleDouble`].

mod bernoulli;
mod complex;
mod double_double;
mod expansion;
mod gamma;
mod lambert;
mod real;

use std::fmt;
use std::str::FromStr;

pub use bernoulli::{shared_bernoulli, BernoulliCache};
pub use double_double::DoubleDouble;
pub use expansion::{
    b_coeff, c_coeff, c_coeff_from_gammas, growth_constant, hardy_ramanujan_leading,
    predict_expected_subsum, predict_s_j_ratio, predict_s_ratio, ratio_envelope,
    two_thirds_power_floor, RatioEnvelope, TheoremConstants,
};
pub use gamma::{
    digamma, digamma_rational, gamma_mh_digamma, gamma_mh_gauss, gamma_mh_roots, GammaConstants,
    GammaMethod,
};
pub use lambert::{
    lambert_tau_asymptotic, lambert_tau_exact, tail_coefficient, SeriesEvaluation,
    DEFAULT_MAX_TERMS,
};
pub use real::{parse_decimal, Real};

/// Floating-point backend selector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Precision {
    Double,
    #[default]
    Extended,
}

impl Precision {
    pub fn name(self) -> &'static str {
        match self {
            Self::Double => f64::NAME,
            Self::Extended => DoubleDouble::NAME,
        }
    }

    pub fn tolerance(self) -> f64 {
        match self {
            Self::Double => f64::tolerance(),
            Self::Extended => DoubleDouble::tolerance().to_f64(),
        }
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Precision {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "double" => Ok(Self::Double),
            "extended" => Ok(Self::Extended),
            other => Err(crate::Error::InvalidArgument(format!(
                "unknown precision {other:?}; expected double or extended"
            ))),
        }
    }
}
