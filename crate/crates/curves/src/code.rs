//! Signed Gauss codes: the serialized form of a stable curve.
//!
//! A code is a cyclic sequence of crossing labels, each appearing exactly
//! twice with a single sign. The sign of a crossing is the orientation of
//! the pair (tangent at the earlier visit, tangent at the later visit),
//! where "earlier" is taken from the code's start position. Rotating the
//! start therefore flips the sign of every crossing whose visit order flips.

use crate::error::{CurveError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ambient {
    Sphere,
    Plane,
}

/// A signed Gauss code plus ambient data. The degenerate 0-crossing circle
/// is encoded by an empty visit list; on the plane it carries a winding
/// (+1 counterclockwise) instead of an outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedGaussCode {
    pub ambient: Ambient,
    /// Visit sequence as (label, sign) pairs; each label occurs twice with
    /// the same sign at both occurrences.
    pub visits: Vec<(u32, i8)>,
    /// Outer face index, required iff ambient is Plane and the code is
    /// non-degenerate.
    pub outer: Option<usize>,
    /// Winding of the degenerate circle (planar only).
    pub winding: Option<i8>,
}

impl SignedGaussCode {
    pub fn circle(ambient: Ambient, winding: Option<i8>) -> Self {
        SignedGaussCode {
            ambient,
            visits: Vec::new(),
            outer: None,
            winding,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.visits.is_empty()
    }

    pub fn crossings(&self) -> usize {
        self.visits.len() / 2
    }

    /// Local validity: every label twice, equal signs, legal winding data.
    pub fn validate_local(&self) -> Result<()> {
        if self.is_degenerate() {
            match self.ambient {
                Ambient::Plane => {
                    if !matches!(self.winding, Some(1) | Some(-1)) {
                        return Err(CurveError::MalformedCode(
                            "degenerate planar circle needs winding +1 or -1".into(),
                        ));
                    }
                }
                Ambient::Sphere => {
                    if self.winding.is_some() {
                        return Err(CurveError::MalformedCode(
                            "spherical circle carries no winding".into(),
                        ));
                    }
                }
            }
            if self.outer.is_some() {
                return Err(CurveError::MalformedCode(
                    "degenerate circle carries no outer face index".into(),
                ));
            }
            return Ok(());
        }
        if self.winding.is_some() {
            return Err(CurveError::MalformedCode(
                "winding is only for the degenerate circle".into(),
            ));
        }
        if self.visits.len() % 2 != 0 {
            return Err(CurveError::MalformedCode("odd code length".into()));
        }
        let mut seen: std::collections::BTreeMap<u32, Vec<i8>> = Default::default();
        for &(label, sign) in &self.visits {
            if sign != 1 && sign != -1 {
                return Err(CurveError::MalformedCode(format!(
                    "sign of crossing {label} must be +1 or -1"
                )));
            }
            seen.entry(label).or_default().push(sign);
        }
        for (label, signs) in &seen {
            if signs.len() != 2 {
                return Err(CurveError::MalformedCode(format!(
                    "label {label} occurs {} times, expected 2",
                    signs.len()
                )));
            }
            if signs[0] != signs[1] {
                return Err(CurveError::MalformedCode(format!(
                    "label {label} occurs with conflicting signs"
                )));
            }
        }
        if self.visits.len() != 2 * seen.len() {
            return Err(CurveError::MalformedCode("length mismatch".into()));
        }
        Ok(())
    }
}
