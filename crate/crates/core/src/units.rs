//! Physical unit model and resource metric selectors.

use serde::{Deserialize, Serialize};

/// Unit scales and physical constants for converting graph counts into
/// physical quantities. Densities are always derived, never stored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitSystem {
    /// Unit space-time volume, m^3*s.
    pub v_u: f64,
    /// Unit energy, J.
    pub e_u: f64,
    /// Unit space, m^3.
    pub s_u: f64,
    /// Unit mass, kg.
    pub m_u: f64,
    /// Speed of light, m/s.
    pub c: f64,
    /// Boltzmann constant, J/K.
    pub k: f64,
    /// Planck constant, J*s.
    pub h: f64,
}

pub const BOLTZMANN: f64 = 1.380_649e-23;
pub const PLANCK: f64 = 6.626_070_15e-34;
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

impl UnitSystem {
    /// Desk units: one graph element costs one unit of volume, energy,
    /// space and mass; constants keep their physical values.
    pub fn desk() -> Self {
        UnitSystem {
            v_u: 1.0,
            e_u: 1.0,
            s_u: 1.0,
            m_u: 1.0,
            c: SPEED_OF_LIGHT,
            k: BOLTZMANN,
            h: PLANCK,
        }
    }

    /// Energy density e_u / v_u.
    pub fn d_e(&self) -> f64 {
        self.e_u / self.v_u
    }

    /// Mass density m_u / s_u.
    pub fn d_m(&self) -> f64 {
        self.m_u / self.s_u
    }

    pub fn validate(&self) -> Result<(), String> {
        for (name, v) in [
            ("v_u", self.v_u),
            ("e_u", self.e_u),
            ("s_u", self.s_u),
            ("m_u", self.m_u),
            ("c", self.c),
            ("k", self.k),
            ("h", self.h),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(format!("unit {name} must be positive and finite, got {v}"));
            }
        }
        Ok(())
    }
}

impl Default for UnitSystem {
    fn default() -> Self {
        UnitSystem::desk()
    }
}

/// Which resource a budget or a search allowance is denominated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Metric {
    Time,
    Volume,
    Energy,
    TotalEnergy,
}

impl Metric {
    pub fn name(&self) -> &'static str {
        match self {
            Metric::Time => "time",
            Metric::Volume => "volume",
            Metric::Energy => "energy",
            Metric::TotalEnergy => "total-energy",
        }
    }
}

impl std::str::FromStr for Metric {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "time" => Ok(Metric::Time),
            "volume" => Ok(Metric::Volume),
            "energy" => Ok(Metric::Energy),
            "total-energy" | "total_energy" => Ok(Metric::TotalEnergy),
            other => Err(format!("unknown metric {other:?}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn densities_are_derived() {
        let mut u = UnitSystem::desk();
        u.e_u = 2.0;
        assert_eq!(u.d_e(), 2.0);
        u.m_u = 4.0;
        u.s_u = 2.0;
        assert_eq!(u.d_m(), 2.0);
    }

    #[test]
    fn validation_rejects_nonpositive() {
        let mut u = UnitSystem::desk();
        u.v_u = 0.0;
        assert!(u.validate().is_err());
    }

    #[test]
    fn metric_parse() {
        assert_eq!("time".parse::<Metric>().unwrap(), Metric::Time);
        assert_eq!(
            "total-energy".parse::<Metric>().unwrap(),
            Metric::TotalEnergy
        );
        assert!("joules".parse::<Metric>().is_err());
    }
}
