//! Ind- and pro-systems of triples `(A, m, n)`: a pointed space given by a
//! Conley descriptor, an even integer and a rational, with the
//! desuspension rule
//!
//! ```text
//! Σ^{−E}(A, m, n) = (Σ^{E^{S¹}} A, m + 2a, n + b)   for E = ℝ^a ⊕ ℂ^b
//! ```
//!
//! Systems are infinite, so objects and maps are generated by index rules
//! (indices start at 1) and materialized on demand.

mod assemble;

use std::sync::Arc;

use crate::conley::{attractor_map, descriptor_homology, ConleyDescriptor, ConleyError, Group, MapDescriptor, VirtualRep};
use crate::rat::Rat;

pub use assemble::{assemble_swf, AssemblyOptions, Flavor, Swf};

/// How many indices a subsystem rule is checked on when constructed.
pub const INDEX_CHECK_PREFIX: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SystemsError {
    #[error("m = {0} must be even")]
    OddM(i64),
    #[error("no morphism: n − n′ = {0} is not an integer")]
    EmptyMorphisms(Rat),
    #[error("map does not match the objects it connects")]
    MapMismatch,
    #[error("subsystem indices must be strictly increasing and start at 1 or later (fails at position {0})")]
    NonMonotone(usize),
    #[error("prefix must be at least 1")]
    EmptyPrefix,
    #[error(transparent)]
    Conley(#[from] ConleyError),
    #[error(transparent)]
    Spectral(#[from] crate::spectral::SpectralError),
    #[error(transparent)]
    Seifert(#[from] crate::seifert::SeifertError),
    #[error(transparent)]
    Grading(#[from] crate::grading::GradingError),
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("hypotheses of the Morse-Bott reducible theorem not met: {0}")]
    HypothesesNotMet(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CObject {
    pub descriptor: ConleyDescriptor,
    m: i64,
    pub n: Rat,
}

impl CObject {
    pub fn new(descriptor: ConleyDescriptor, m: i64, n: Rat) -> Result<Self, SystemsError> {
        if m % 2 != 0 {
            return Err(SystemsError::OddM(m));
        }
        Ok(CObject { descriptor, m, n })
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// `Σ^{−E}` applied to the triple; only the S¹-fixed real part of `E`
    /// touches the space.
    pub fn desuspend(&self, e: VirtualRep) -> CObject {
        let fixed = VirtualRep::real(e.group, e.real);
        CObject {
            descriptor: crate::conley::suspend(&self.descriptor, fixed),
            m: self.m + 2 * e.real,
            n: &self.n + Rat::from_integer(e.complex.into()),
        }
    }

    /// A morphism `self → other` realized by `map`; the morphism set is empty
    /// unless `n − n′` is an integer.
    pub fn morphism(&self, other: &CObject, map: &MapDescriptor) -> Result<(), SystemsError> {
        let diff = &self.n - &other.n;
        if !diff.is_integer() {
            return Err(SystemsError::EmptyMorphisms(diff));
        }
        if map.source != self.descriptor || map.target != other.descriptor {
            return Err(SystemsError::MapMismatch);
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// maps go index → index + 1
    Ind,
    /// maps go index + 1 → index
    Pro,
}

type ObjectRule = Arc<dyn Fn(usize) -> CObject + Send + Sync>;
type IndexRule = Arc<dyn Fn(usize) -> usize + Send + Sync>;

#[derive(Clone)]
pub struct SystemObject {
    direction: Direction,
    group: Group,
    objects: ObjectRule,
    /// position ↦ index in the underlying rule (identity unless reindexed)
    indices: IndexRule,
}

impl std::fmt::Debug for SystemObject {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SystemObject")
            .field("direction", &self.direction)
            .field("group", &self.group)
            .field("first", &self.object(1))
            .finish()
    }
}

impl SystemObject {
    pub fn new(direction: Direction, group: Group, objects: impl Fn(usize) -> CObject + Send + Sync + 'static) -> Self {
        SystemObject { direction, group, objects: Arc::new(objects), indices: Arc::new(|i| i) }
    }

    pub fn constant(direction: Direction, object: CObject) -> Self {
        let group = object.descriptor.group();
        Self::new(direction, group, move |_| object.clone())
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn object(&self, i: usize) -> CObject {
        (self.objects)((self.indices)(i))
    }

    pub fn materialize(&self, prefix: usize) -> Vec<CObject> {
        (1..=prefix).map(|i| self.object(i)).collect()
    }

    /// Connecting map at position `i`: `i → i+1` for ind, `i+1 → i` for pro.
    /// After reindexing this is the composite through the skipped indices.
    pub fn map(&self, i: usize) -> Result<MapDescriptor, SystemsError> {
        let (a, b) = ((self.indices)(i), (self.indices)(i + 1));
        let mut composite: Option<MapDescriptor> = None;
        for j in a..b {
            let (from, to) = match self.direction {
                Direction::Ind => ((self.objects)(j), (self.objects)(j + 1)),
                Direction::Pro => ((self.objects)(j + 1), (self.objects)(j)),
            };
            let step = attractor_map(&from.descriptor, &to.descriptor)?;
            from.morphism(&to, &step)?;
            composite = Some(match (composite, self.direction) {
                (None, _) => step,
                (Some(c), Direction::Ind) => c.then(&step)?,
                (Some(c), Direction::Pro) => step.then(&c)?,
            });
        }
        Ok(composite.expect("indices strictly increase"))
    }

    /// Uniform `n` if the first objects agree on it.
    pub fn n(&self) -> Rat {
        self.object(1).n
    }
}

/// Shift the `n` field of every object.
pub fn normalize(sys: &SystemObject, n_shift: &Rat) -> SystemObject {
    let inner = sys.objects.clone();
    let shift = n_shift.clone();
    SystemObject {
        direction: sys.direction,
        group: sys.group,
        objects: Arc::new(move |i| {
            let o = inner(i);
            CObject { n: &o.n + &shift, ..o }
        }),
        indices: sys.indices.clone(),
    }
}

/// Reindex along a strictly increasing rule `position ↦ index`.
pub fn subsystem(
    sys: &SystemObject,
    indices: impl Fn(usize) -> usize + Send + Sync + 'static,
) -> Result<SystemObject, SystemsError> {
    let mut prev = 0;
    for i in 1..=INDEX_CHECK_PREFIX {
        let j = indices(i);
        if j <= prev {
            return Err(SystemsError::NonMonotone(i));
        }
        prev = j;
    }
    let outer = sys.indices.clone();
    Ok(SystemObject {
        direction: sys.direction,
        group: sys.group,
        objects: sys.objects.clone(),
        indices: Arc::new(move |i| outer(indices(i))),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapPattern {
    Isomorphism,
    SplitInjection,
    SplitSurjection,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColimitProbe {
    pub direction: Direction,
    pub degree: usize,
    pub ranks: Vec<usize>,
    pub torsion: Vec<Vec<i64>>,
    pub maps: Vec<MapPattern>,
    /// Every probed map is an isomorphism, so the (co)limit is the last rank.
    pub stable: bool,
}

impl ColimitProbe {
    /// Rank of the (co)limit if it is visible in the prefix.
    pub fn limit_rank(&self) -> Option<usize> {
        if self.stable {
            self.ranks.last().copied()
        } else {
            None
        }
    }
}

/// Homology in one degree along the first `prefix` objects, with the shape
/// of each connecting map.
pub fn homology_colimit(sys: &SystemObject, degree: usize, prefix: usize) -> Result<ColimitProbe, SystemsError> {
    if prefix == 0 {
        return Err(SystemsError::EmptyPrefix);
    }
    let mut ranks = Vec::with_capacity(prefix);
    let mut torsion = Vec::with_capacity(prefix);
    for o in sys.materialize(prefix) {
        let h = descriptor_homology(&o.descriptor)?.degree(degree);
        ranks.push(h.betti);
        torsion.push(h.torsion);
    }
    let mut maps = Vec::new();
    for i in 1..prefix {
        let m = sys.map(i)?.homology_map(degree)?;
        let pattern = if m.rows == m.cols && m.is_split_injection() {
            MapPattern::Isomorphism
        } else if m.is_split_injection() {
            MapPattern::SplitInjection
        } else if m.is_split_surjection() {
            MapPattern::SplitSurjection
        } else {
            MapPattern::Other
        };
        maps.push(pattern);
    }
    let stable = maps.iter().all(|&p| p == MapPattern::Isomorphism);
    Ok(ColimitProbe { direction: sys.direction, degree, ranks, torsion, maps, stable })
}
