//! Normal forms for the Conley indices that occur, their reduced integer
//! homology, suspension and Spanier–Whitehead duality.
//!
//! Homology table (reduced, `k` copies):
//!
//! ```text
//! Sphere(V)                     ℤ in degree dim V
//! WedgeOverS0(k, V)  = Σ(∐ᵏ S(V))        ℤ^{k-1} in 1, ℤ^k in dim V
//! PinOrbitWedge(k)   = Σ(∐ᵏ Pin(2))      ℤ^{2k-1} in 1, ℤ^{2k} in 2
//! PinTorusWedge(k)   = Σ X_k             ℤ^{2k} in 3, ℤ^{2k+1} in 4
//! Complement(k, V, E) = V⁺ ∖ E           H̃_i = H̃^{dim V - 1 - i}(E)
//! ```
//!
//! `X_k` is S(ℍ) with k copies of S³ glued along each of the two circles of
//! Pin(2) ⊂ S(ℍ). With k = 0 every wedge is S⁰.

use std::fmt;

use super::homology::GradedHom;
use super::rep::{Group, VirtualRep};
use super::ConleyError;

/// What is removed from the one-point compactified ambient space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Removed {
    /// k disjoint circles
    Circles,
    /// k free Pin(2)-orbits, 2k circles
    Pin2Orbits,
    /// the compact X_k underlying PinTorusWedge(k)
    DFamily,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConleyDescriptor {
    Sphere(VirtualRep),
    WedgeOverS0 { copies: usize, cell: VirtualRep },
    PinOrbitWedge { copies: usize },
    PinTorusWedge { copies: usize },
    Complement { copies: usize, ambient: VirtualRep, removed: Removed },
    Suspended { base: Box<ConleyDescriptor>, by: VirtualRep },
}

use ConleyDescriptor::*;

/// Reduced homology of the compact set removed by a complement descriptor,
/// as cohomology ranks (degree, rank). Free in every case.
fn removed_cohomology(removed: Removed, k: usize) -> Vec<(usize, usize)> {
    match removed {
        Removed::Circles => vec![(0, k - 1), (1, k)],
        Removed::Pin2Orbits => vec![(0, 2 * k - 1), (1, 2 * k)],
        Removed::DFamily => vec![(2, 2 * k), (3, 2 * k + 1)],
    }
}

fn removed_dim(removed: Removed) -> i64 {
    match removed {
        Removed::Circles | Removed::Pin2Orbits => 1,
        Removed::DFamily => 3,
    }
}

impl ConleyDescriptor {
    pub fn s0(group: Group) -> Self {
        Sphere(VirtualRep::zero(group))
    }

    pub fn wedge(copies: usize) -> Self {
        WedgeOverS0 { copies, cell: VirtualRep::c(1) }
    }

    pub fn group(&self) -> Group {
        match self {
            Sphere(v) => v.group,
            WedgeOverS0 { cell, .. } => cell.group,
            PinOrbitWedge { .. } | PinTorusWedge { .. } => Group::Pin2,
            Complement { ambient, .. } => ambient.group,
            Suspended { base, .. } => base.group(),
        }
    }

    /// Number of wedge summands / removed pieces, if the form has one.
    pub fn copies(&self) -> Option<usize> {
        match self {
            Sphere(_) => None,
            WedgeOverS0 { copies, .. }
            | PinOrbitWedge { copies }
            | PinTorusWedge { copies }
            | Complement { copies, .. } => Some(*copies),
            Suspended { base, .. } => base.copies(),
        }
    }

    /// Same form with a different number of copies.
    pub fn with_copies(&self, k: usize) -> Self {
        match self {
            Sphere(_) => self.clone(),
            WedgeOverS0 { cell, .. } => WedgeOverS0 { copies: k, cell: *cell },
            PinOrbitWedge { .. } => PinOrbitWedge { copies: k },
            PinTorusWedge { .. } => PinTorusWedge { copies: k },
            Complement { ambient, removed, .. } => Complement { copies: k, ambient: *ambient, removed: *removed },
            Suspended { base, by } => Suspended { base: Box::new(base.with_copies(k)), by: *by },
        }
    }

    /// Strip suspensions, returning the core form and the total suspension.
    pub fn unsuspended(&self) -> (&ConleyDescriptor, VirtualRep) {
        match self {
            Suspended { base, by } => {
                let (core, inner) = base.unsuspended();
                (core, inner + *by)
            }
            other => (other, VirtualRep::zero(other.group())),
        }
    }

    /// Family label with the copy count written as `count` (∞ for a system).
    pub fn label(&self, count: Option<usize>) -> String {
        let k = count.map_or("∞".to_string(), |k| k.to_string());
        match self {
            Sphere(v) if v.is_zero() => "S⁰".to_string(),
            Sphere(v) => format!("({v})⁺"),
            WedgeOverS0 { cell, .. } if *cell == VirtualRep::c(1) => format!("⋁^{k} C⁺"),
            WedgeOverS0 { cell, .. } => format!("⋁^{k}_{{S⁰}} ({cell})⁺"),
            PinOrbitWedge { .. } => format!("Σ(∐^{k}Pin(2))"),
            PinTorusWedge { .. } => format!("Σ(S(ℍ)∨_{{Pin(2)}}⋁^{k}_{{Pin(2)}}(Z̃₂×S(ℍ)))"),
            Complement { ambient, removed, .. } => {
                let amb = if ambient.complex == 1 && ambient.real == 0 && ambient.twisted == 0 {
                    format!("{ambient}⁺")
                } else {
                    format!("({ambient})⁺")
                };
                match removed {
                    Removed::Circles => format!("{amb}∖⊔^{k}S¹"),
                    Removed::Pin2Orbits => format!("{amb}∖∐^{k}Pin(2)"),
                    Removed::DFamily => format!("{amb}∖D_{k}"),
                }
            }
            Suspended { base, by } => format!("Σ^{{{by}}}{}", base.label(count)),
        }
    }
}

impl fmt::Display for ConleyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.copies();
        write!(f, "{}", self.label(k.or(Some(0))))
    }
}

fn check_group(d: &ConleyDescriptor, v: &VirtualRep) -> Result<(), ConleyError> {
    if d.group() != v.group {
        return Err(ConleyError::Structure(format!(
            "representation of {} applied to a {} descriptor",
            v.group,
            d.group()
        )));
    }
    Ok(())
}

/// Reduced integer homology of the underlying space of `d`.
pub fn descriptor_homology(d: &ConleyDescriptor) -> Result<GradedHom, ConleyError> {
    match d {
        Sphere(v) => {
            if !v.is_admissible() {
                return Err(ConleyError::VirtualSuspension(v.to_string()));
            }
            Ok(GradedHom::from_free(&[(v.real_dim() as usize, 1)]))
        }
        WedgeOverS0 { copies: 0, .. } | PinOrbitWedge { copies: 0 } | PinTorusWedge { copies: 0 } => {
            Ok(GradedHom::from_free(&[(0, 1)]))
        }
        WedgeOverS0 { copies, cell } => {
            if !cell.is_admissible() || cell.real_dim() == 0 {
                return Err(ConleyError::Structure(format!("wedge cell {cell} must be a nonzero representation")));
            }
            let e = cell.real_dim() as usize;
            if e == 1 {
                // Σ of 2k points
                Ok(GradedHom::from_free(&[(1, 2 * copies - 1)]))
            } else {
                Ok(GradedHom::from_free(&[(1, copies - 1), (e, *copies)]))
            }
        }
        PinOrbitWedge { copies } => Ok(GradedHom::from_free(&[(1, 2 * copies - 1), (2, 2 * copies)])),
        PinTorusWedge { copies } => Ok(GradedHom::from_free(&[(3, 2 * copies), (4, 2 * copies + 1)])),
        Complement { copies, ambient, removed } => {
            if !ambient.is_admissible() {
                return Err(ConleyError::VirtualSuspension(ambient.to_string()));
            }
            let n = ambient.real_dim();
            if n < removed_dim(*removed) + 1 {
                return Err(ConleyError::Structure(format!("{ambient} too small to contain the removed set")));
            }
            let n = n as usize;
            if *copies == 0 {
                return Ok(GradedHom::from_free(&[(n, 1)]));
            }
            let entries: Vec<(usize, usize)> = removed_cohomology(*removed, *copies)
                .into_iter()
                .map(|(j, r)| (n - 1 - j, r))
                .collect();
            Ok(GradedHom::from_free(&entries))
        }
        Suspended { base, by } => {
            check_group(base, by)?;
            if !by.is_admissible() {
                return Err(ConleyError::VirtualSuspension(by.to_string()));
            }
            Ok(descriptor_homology(base)?.shift(by.real_dim() as usize))
        }
    }
}

/// Σ^E d, in normal form.
pub fn suspend(d: &ConleyDescriptor, e: VirtualRep) -> ConleyDescriptor {
    assert_eq!(d.group(), e.group, "suspension by a representation of another group");
    if e.is_zero() {
        return d.clone();
    }
    match d {
        Sphere(v) => Sphere(*v + e),
        Suspended { base, by } => {
            let total = *by + e;
            if total.is_zero() {
                (**base).clone()
            } else {
                Suspended { base: base.clone(), by: total }
            }
        }
        other => Suspended { base: Box::new(other.clone()), by: e },
    }
}

/// The `ambient`-dual of `d`.
pub fn spanier_whitehead_dual(d: &ConleyDescriptor, ambient: VirtualRep) -> Result<ConleyDescriptor, ConleyError> {
    let unsupported = || ConleyError::UnsupportedDual(format!("{d} in {ambient}"));
    if d.group() != ambient.group || !ambient.is_admissible() {
        return Err(unsupported());
    }
    match d {
        Sphere(v) => {
            let rest = ambient - *v;
            if rest.is_admissible() {
                Ok(Sphere(rest))
            } else {
                Err(unsupported())
            }
        }
        WedgeOverS0 { copies, cell } => {
            if *cell != VirtualRep::c(1) || ambient.complex < 2 {
                return Err(unsupported());
            }
            Ok(Complement { copies: *copies, ambient, removed: Removed::Circles })
        }
        PinOrbitWedge { copies } => {
            if ambient.complex < 1 {
                return Err(unsupported());
            }
            Ok(Complement { copies: *copies, ambient, removed: Removed::Pin2Orbits })
        }
        PinTorusWedge { copies } => {
            if ambient.complex < 2 {
                return Err(unsupported());
            }
            Ok(Complement { copies: *copies, ambient, removed: Removed::DFamily })
        }
        Complement { copies, ambient: own, removed } => {
            if *own != ambient {
                return Err(unsupported());
            }
            Ok(match removed {
                Removed::Circles => ConleyDescriptor::wedge(*copies),
                Removed::Pin2Orbits => PinOrbitWedge { copies: *copies },
                Removed::DFamily => PinTorusWedge { copies: *copies },
            })
        }
        Suspended { base, by } => {
            let rest = ambient - *by;
            if !rest.is_admissible() {
                return Err(unsupported());
            }
            spanier_whitehead_dual(base, rest)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_examples() {
        let h = descriptor_homology(&ConleyDescriptor::wedge(9)).unwrap();
        assert_eq!(h, GradedHom::from_free(&[(1, 8), (2, 9)]));
        let c = Complement { copies: 9, ambient: VirtualRep::c(2), removed: Removed::Circles };
        assert_eq!(descriptor_homology(&c).unwrap(), GradedHom::from_free(&[(2, 9), (3, 8)]));
        let s = Sphere(VirtualRep::real(Group::S1, 2) + VirtualRep::c(1));
        assert_eq!(descriptor_homology(&s).unwrap(), GradedHom::from_free(&[(4, 1)]));
    }

    #[test]
    fn suspension_normalizes() {
        let w = ConleyDescriptor::wedge(3);
        let up = suspend(&w, VirtualRep::c(1));
        assert_eq!(suspend(&up, VirtualRep::c(-1)), w);
        assert_eq!(
            suspend(&suspend(&w, VirtualRep::c(1)), VirtualRep::c(2)),
            suspend(&w, VirtualRep::c(3))
        );
        assert_eq!(suspend(&ConleyDescriptor::s0(Group::S1), VirtualRep::c(1)), Sphere(VirtualRep::c(1)));
        let virt = suspend(&w, VirtualRep::c(-1));
        assert!(matches!(descriptor_homology(&virt), Err(ConleyError::VirtualSuspension(_))));
    }

    #[test]
    fn duals() {
        let w = ConleyDescriptor::wedge(4);
        let d = spanier_whitehead_dual(&w, VirtualRep::c(2)).unwrap();
        assert_eq!(d, Complement { copies: 4, ambient: VirtualRep::c(2), removed: Removed::Circles });
        assert_eq!(spanier_whitehead_dual(&d, VirtualRep::c(2)).unwrap(), w);
        let v = VirtualRep::c(3);
        assert_eq!(spanier_whitehead_dual(&Sphere(v), v).unwrap(), ConleyDescriptor::s0(Group::S1));
        assert!(spanier_whitehead_dual(&w, VirtualRep::c(1)).is_err());
        assert!(spanier_whitehead_dual(&PinTorusWedge { copies: 2 }, VirtualRep::h(1)).is_err());
    }

    #[test]
    fn labels() {
        assert_eq!(ConleyDescriptor::wedge(3).label(None), "⋁^∞ C⁺");
        let c = Complement { copies: 3, ambient: VirtualRep::c(2), removed: Removed::Circles };
        assert_eq!(c.label(None), "(ℂ²)⁺∖⊔^∞S¹");
        assert_eq!(PinOrbitWedge { copies: 1 }.label(None), "Σ(∐^∞Pin(2))");
    }
}
