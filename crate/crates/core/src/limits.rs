//! Physical bounds on a mechanical computer: frequency against power,
//! step energy against step time, symbol volume and spacing against atomic
//! size, and the resulting frequency ceiling for a given alphabet size.

use std::f64::consts::PI;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LimitsError {
    #[error("domain error: {0}")]
    Domain(String),
}

/// SI constants used by every bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysicalConstants {
    /// Speed of light, m/s.
    pub c: f64,
    /// Planck constant, J·s.
    pub h: f64,
    /// Bohr (hydrogen) radius, m.
    pub a: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        PhysicalConstants { c: 299_792_458.0, h: 6.626_070_15e-34, a: 5.291_772_109_03e-11 }
    }
}

/// Frequency-symbol constant `c/a` as printed in the literature, s⁻¹.
pub const QUOTED_C_OVER_A: f64 = 5.655e18;

fn positive(name: &str, x: f64) -> Result<(), LimitsError> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(LimitsError::Domain(format!("{name} must be positive and finite, got {x}")))
    }
}

fn symbols(z: f64) -> Result<(), LimitsError> {
    if z >= 1.0 && z.is_finite() {
        Ok(())
    } else {
        Err(LimitsError::Domain(format!("symbol count must be at least 1, got {z}")))
    }
}

impl PhysicalConstants {
    /// `f_max = sqrt(2πW/h)` from `f² ≤ 2πW/h`.
    pub fn max_frequency_from_power(&self, watts: f64) -> Result<f64, LimitsError> {
        positive("power", watts)?;
        Ok((2.0 * PI * watts / self.h).sqrt())
    }

    /// Lower bound `h/(2π·Δt)` on the energy a step of duration `Δt` must use.
    pub fn min_step_energy(&self, dt: f64) -> Result<f64, LimitsError> {
        positive("step time", dt)?;
        Ok(self.h / (2.0 * PI * dt))
    }

    /// `(4/3)·π·a³·z`, m³.
    pub fn min_symbol_volume(&self, z: f64) -> Result<f64, LimitsError> {
        symbols(z)?;
        Ok(4.0 / 3.0 * PI * self.a.powi(3) * z)
    }

    /// `2a·z^(1/3)`, m.
    pub fn min_symbol_distance(&self, z: f64) -> Result<f64, LimitsError> {
        symbols(z)?;
        Ok(2.0 * self.a * z.cbrt())
    }

    /// `c / (2a·z^(1/3))`, steps per second.
    pub fn max_frequency_from_alphabet(&self, z: f64) -> Result<f64, LimitsError> {
        Ok(self.c / self.min_symbol_distance(z)?)
    }

    /// `½·(a/c)⁻¹`, the ceiling on `f·z^(1/3)`.
    pub fn frequency_symbol_ceiling(&self) -> f64 {
        0.5 * self.c / self.a
    }

    /// Whether `f·z^(1/3)` stays within the ceiling (relative slack `rel_tol`).
    pub fn bound_product(&self, f: f64, z: f64, rel_tol: f64) -> Result<BoundCheck, LimitsError> {
        symbols(z)?;
        let product = f * z.cbrt();
        let ceiling = self.frequency_symbol_ceiling();
        Ok(BoundCheck { product, ceiling, holds: product <= ceiling * (1.0 + rel_tol) })
    }

    /// Every bound for one configuration.
    pub fn report(&self, z: f64, watts: Option<f64>, dt: Option<f64>) -> Result<LimitsReport, LimitsError> {
        let f_alpha = self.max_frequency_from_alphabet(z)?;
        let ceiling = self.frequency_symbol_ceiling();
        let quoted = 0.5 * QUOTED_C_OVER_A;
        Ok(LimitsReport {
            constants: *self,
            symbols: z,
            min_symbol_volume: self.min_symbol_volume(z)?,
            min_symbol_distance: self.min_symbol_distance(z)?,
            max_frequency_from_alphabet: f_alpha,
            frequency_symbol_ceiling: ceiling,
            quoted_ceiling: quoted,
            ceiling_relative_gap: (ceiling - quoted).abs() / quoted,
            bound_product: self.bound_product(f_alpha, z, 1e-12)?,
            max_frequency_from_power: watts.map(|w| self.max_frequency_from_power(w)).transpose()?,
            min_step_energy: dt.map(|t| self.min_step_energy(t)).transpose()?,
            volume_reading: "V = (4/3)·π·a³·z, the trailing m³ read as a unit",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundCheck {
    pub product: f64,
    pub ceiling: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LimitsReport {
    pub constants: PhysicalConstants,
    pub symbols: f64,
    pub min_symbol_volume: f64,
    pub min_symbol_distance: f64,
    pub max_frequency_from_alphabet: f64,
    pub frequency_symbol_ceiling: f64,
    pub quoted_ceiling: f64,
    pub ceiling_relative_gap: f64,
    pub bound_product: BoundCheck,
    pub max_frequency_from_power: Option<f64>,
    pub min_step_energy: Option<f64>,
    pub volume_reading: &'static str,
}
