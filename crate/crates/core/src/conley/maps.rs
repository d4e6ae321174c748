//! Connecting maps between normal forms and their homology shadows.
//!
//! Homology bases are ordered copy by copy, so a summand inclusion
//! `k₁ → k₂` is the first-block identity in every degree. Restrictions of
//! complements `V⁺∖E_{k₂} → V⁺∖E_{k₁}` are Alexander dual to the inclusion
//! `E_{k₁} ⊂ E_{k₂}`, which again gives the first-block identity, now as a
//! surjection.

use super::descriptor::{descriptor_homology, ConleyDescriptor};
use super::homology::IntMatrix;
use super::ConleyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Identity,
    /// inclusion of the first wedge summands (attractor direction)
    Inclusion,
    /// inclusion of complements, forgetting removed pieces (repeller direction)
    Restriction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDescriptor {
    pub kind: MapKind,
    pub source: ConleyDescriptor,
    pub target: ConleyDescriptor,
}

fn is_wedge_like(d: &ConleyDescriptor) -> bool {
    matches!(
        d,
        ConleyDescriptor::WedgeOverS0 { .. } | ConleyDescriptor::PinOrbitWedge { .. } | ConleyDescriptor::PinTorusWedge { .. }
    )
}

/// The natural map between consecutive indices of an attractor or repeller
/// system.
pub fn attractor_map(from: &ConleyDescriptor, to: &ConleyDescriptor) -> Result<MapDescriptor, ConleyError> {
    let incompatible = || ConleyError::IncompatibleForms(format!("{from} → {to}"));
    if from == to {
        return Ok(MapDescriptor { kind: MapKind::Identity, source: from.clone(), target: to.clone() });
    }
    let (core_from, susp_from) = from.unsuspended();
    let (core_to, susp_to) = to.unsuspended();
    if susp_from != susp_to || core_from.with_copies(0) != core_to.with_copies(0) {
        return Err(incompatible());
    }
    let (Some(k_from), Some(k_to)) = (from.copies(), to.copies()) else {
        return Err(incompatible());
    };
    let kind = if is_wedge_like(core_from) && k_from <= k_to {
        MapKind::Inclusion
    } else if matches!(core_from, ConleyDescriptor::Complement { .. }) && k_from >= k_to {
        MapKind::Restriction
    } else {
        return Err(incompatible());
    };
    Ok(MapDescriptor { kind, source: from.clone(), target: to.clone() })
}

impl MapDescriptor {
    /// `next ∘ self`.
    pub fn then(&self, next: &MapDescriptor) -> Result<MapDescriptor, ConleyError> {
        if self.target != next.source {
            return Err(ConleyError::IncompatibleForms(format!(
                "cannot compose {} → {} with {} → {}",
                self.source, self.target, next.source, next.target
            )));
        }
        if self.kind == MapKind::Identity {
            return Ok(next.clone());
        }
        if next.kind == MapKind::Identity {
            return Ok(self.clone());
        }
        attractor_map(&self.source, &next.target)
    }

    /// Induced map on reduced homology in `degree`, rows indexed by the
    /// target basis.
    pub fn homology_map(&self, degree: usize) -> Result<IntMatrix, ConleyError> {
        let src = descriptor_homology(&self.source)?.betti(degree);
        let tgt = descriptor_homology(&self.target)?.betti(degree);
        let mut m = IntMatrix::zeros(tgt, src);
        for i in 0..src.min(tgt) {
            m.set(i, i, 1);
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conley::{Removed, VirtualRep};

    fn comp(k: usize) -> ConleyDescriptor {
        ConleyDescriptor::Complement { copies: k, ambient: VirtualRep::c(2), removed: Removed::Circles }
    }

    #[test]
    fn wedge_inclusion() {
        let f = attractor_map(&ConleyDescriptor::wedge(9), &ConleyDescriptor::wedge(25)).unwrap();
        assert_eq!(f.kind, MapKind::Inclusion);
        let h2 = f.homology_map(2).unwrap();
        assert_eq!((h2.rows, h2.cols), (25, 9));
        assert!(h2.is_split_injection());
        let id = attractor_map(&ConleyDescriptor::wedge(4), &ConleyDescriptor::wedge(4)).unwrap();
        assert_eq!(id.homology_map(2).unwrap(), IntMatrix::identity(4));
        assert!(attractor_map(&ConleyDescriptor::wedge(25), &ConleyDescriptor::wedge(9)).is_err());
    }

    #[test]
    fn complement_restriction() {
        let f = attractor_map(&comp(25), &comp(9)).unwrap();
        assert_eq!(f.kind, MapKind::Restriction);
        let h2 = f.homology_map(2).unwrap();
        assert_eq!((h2.rows, h2.cols), (9, 25));
        assert!(h2.is_split_surjection());
        assert!(attractor_map(&comp(9), &ConleyDescriptor::wedge(9)).is_err());
    }

    #[test]
    fn composition() {
        let a = attractor_map(&ConleyDescriptor::wedge(1), &ConleyDescriptor::wedge(9)).unwrap();
        let b = attractor_map(&ConleyDescriptor::wedge(9), &ConleyDescriptor::wedge(25)).unwrap();
        let ab = a.then(&b).unwrap();
        assert_eq!(ab.homology_map(2).unwrap(), b.homology_map(2).unwrap().mul(&a.homology_map(2).unwrap()));
        assert!(b.then(&a).is_err());
    }
}
