//! Deterministic constructors for every tessellation family used by the
//! toolkit.

pub mod closing;
pub mod fixtures;
pub mod solids;
pub mod torus;

pub use closing::{kagome_family_ball, regular_ball, schedule_triangulation};
pub use fixtures::{cairo_patch, corner_fixture, genus2_surface, penrose_patch};
pub use solids::{antiprism, platonic, prism, PlatonicSolid};
pub use torus::{torus_quotient, LatticeKind};

use crate::error::{Result, TessError};
use crate::surface::{Loaded, Patch};

/// Ball of combinatorial radius `radius` in one of the three flat lattices.
pub fn flat_lattice(kind: LatticeKind, radius: u32) -> Result<Patch> {
    let (p, q) = kind.pq();
    regular_ball(p, q, radius)
}

/// Ball of radius `radius` in the hyperbolic (or flat) `(p,q)`-regular
/// tessellation.
pub fn hyperbolic_ball(p: u32, q: u32, radius: u32) -> Result<Patch> {
    regular_ball(p, q, radius)
}

/// A fully described generator invocation, as used by the CLI and the
/// report machinery. Identical specs produce byte-identical files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    Platonic {
        name: PlatonicSolid,
    },
    Prism {
        p: u32,
    },
    Antiprism {
        p: u32,
    },
    Flat {
        kind: LatticeKind,
        radius: u32,
    },
    Torus {
        kind: LatticeKind,
        m: u32,
        n: u32,
    },
    Hyperbolic {
        p: u32,
        q: u32,
        radius: u32,
    },
    Kagome {
        polygon: u32,
        radius: u32,
    },
    /// Triangulation with the linear degree schedule `q_r = base + slope*r`.
    Schedule {
        base: u32,
        slope: u32,
        radius: u32,
    },
    Cairo,
    Penrose,
    Genus2,
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<Loaded> {
        Ok(match *self {
            GeneratorSpec::Platonic { name } => Loaded::Closed(platonic(name)?),
            GeneratorSpec::Prism { p } => Loaded::Closed(prism(p)?),
            GeneratorSpec::Antiprism { p } => Loaded::Closed(antiprism(p)?),
            GeneratorSpec::Flat { kind, radius } => Loaded::Patch(flat_lattice(kind, radius)?),
            GeneratorSpec::Torus { kind, m, n } => Loaded::Closed(torus_quotient(kind, m, n)?),
            GeneratorSpec::Hyperbolic { p, q, radius } => {
                Loaded::Patch(hyperbolic_ball(p, q, radius)?)
            }
            GeneratorSpec::Kagome { polygon, radius } => {
                Loaded::Patch(kagome_family_ball(polygon, radius)?)
            }
            GeneratorSpec::Schedule {
                base,
                slope,
                radius,
            } => {
                let qs = schedule_values(base, slope, radius);
                Loaded::Patch(schedule_triangulation(&qs, radius)?)
            }
            GeneratorSpec::Cairo => Loaded::Patch(cairo_patch()?),
            GeneratorSpec::Penrose => Loaded::Patch(penrose_patch()?),
            GeneratorSpec::Genus2 => Loaded::Closed(genus2_surface()?),
        })
    }

    pub fn describe(&self) -> String {
        match *self {
            GeneratorSpec::Platonic { name } => format!("platonic {}", name.name()),
            GeneratorSpec::Prism { p } => format!("prism p={p}"),
            GeneratorSpec::Antiprism { p } => format!("antiprism p={p}"),
            GeneratorSpec::Flat { kind, radius } => format!("flat {} R={radius}", kind.name()),
            GeneratorSpec::Torus { kind, m, n } => format!("torus {} {m}x{n}", kind.name()),
            GeneratorSpec::Hyperbolic { p, q, radius } => {
                format!("hyperbolic ({p},{q}) R={radius}")
            }
            GeneratorSpec::Kagome { polygon, radius } => format!("kagome {polygon}-gon R={radius}"),
            GeneratorSpec::Schedule {
                base,
                slope,
                radius,
            } => {
                format!("schedule {base}+{slope}r R={radius}")
            }
            GeneratorSpec::Cairo => "cairo fixture".into(),
            GeneratorSpec::Penrose => "penrose fixture".into(),
            GeneratorSpec::Genus2 => "genus-2 fixture".into(),
        }
    }
}

pub fn schedule_values(base: u32, slope: u32, radius: u32) -> Vec<u32> {
    (0..=radius.max(1)).map(|r| base + slope * r).collect()
}

/// Parses a linear schedule expression like `6+2r`, `7`, or `6+r`.
pub fn parse_schedule(expr: &str) -> Result<(u32, u32)> {
    let s: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || {
        TessError::BadSpec(format!(
            "cannot parse schedule `{expr}`; expected e.g. `6+2r`"
        ))
    };
    if let Some(rest) = s.strip_suffix('r') {
        let (base, slope) = match rest.rsplit_once('+') {
            Some((b, m)) => (b, m),
            None => ("", rest),
        };
        let slope: u32 = if slope.is_empty() {
            1
        } else {
            slope.parse().map_err(|_| bad())?
        };
        let base: u32 = if base.is_empty() {
            0
        } else {
            base.parse().map_err(|_| bad())?
        };
        Ok((base, slope))
    } else {
        Ok((s.parse().map_err(|_| bad())?, 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedule_parsing() {
        assert_eq!(parse_schedule("6+2r").unwrap(), (6, 2));
        assert_eq!(parse_schedule("6 + 2r").unwrap(), (6, 2));
        assert_eq!(parse_schedule("7").unwrap(), (7, 0));
        assert_eq!(parse_schedule("6+r").unwrap(), (6, 1));
        assert!(parse_schedule("r+6").is_err());
        assert!(parse_schedule("").is_err());
    }
}
