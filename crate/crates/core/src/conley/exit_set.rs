//! Exit sets of the isolating blocks for the linearized flow near a torus of
//! reducibles with jumping kernel.
//!
//! Inside the window `[-1/4 - m, 1/4 + m]^b` the Dirac family picks up one
//! extra negative direction on a small ball around each jump locus. The exit
//! set retracts onto the unit sphere of the always-negative part, with one
//! jump disc glued in per locus, which gives a wedge of cells over S⁰ after
//! suspending by the always-negative part. For Pin(2) the loci come in
//! ȷ-pairs, plus at most one ȷ-fixed locus.

use num_traits::Signed;

use super::descriptor::ConleyDescriptor;
use super::rep::{Group, VirtualRep};
use super::ConleyError;
use crate::rat::{int, rat, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExitSet {
    /// Normal form after removing the suspension by `glue`.
    pub descriptor: ConleyDescriptor,
    /// The always-negative part the descriptor was desuspended by.
    pub glue: VirtualRep,
    /// Negative eigenspace W⁻ at the reference point, removed by normalization.
    pub desuspension: VirtualRep,
}

impl ExitSet {
    /// Net desuspension of the stable index: W⁻ minus the glue.
    pub fn net_desuspension(&self) -> VirtualRep {
        self.desuspension - self.glue
    }
}

/// Lattice points of the window: `[-m, m]^b`, or `[1 - m, m]^b` when
/// `shifted` (the half-lattice centred window used for non-symmetric lifts).
pub fn window_loci(b: usize, m: i64, shifted: bool) -> Vec<Vec<Rat>> {
    let lo = if shifted { 1 - m } else { -m };
    let mut out: Vec<Vec<Rat>> = vec![Vec::new()];
    for _ in 0..b {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=m).map(move |x| {
                    let mut q = p.clone();
                    q.push(int(x));
                    q
                })
            })
            .collect();
    }
    out
}

fn check_balls(b: usize, window_m: i64, loci: &[Vec<Rat>], rho: &Rat) -> Result<(), ConleyError> {
    if !rho.is_positive() {
        return Err(ConleyError::Precondition(format!("ball radius {rho} must be positive")));
    }
    if window_m < 0 {
        return Err(ConleyError::Precondition(format!("window size {window_m} must be nonnegative")));
    }
    let edge = rat(1, 4) + int(window_m);
    for p in loci {
        if p.len() != b {
            return Err(ConleyError::Precondition(format!("locus of dimension {} in rank {b}", p.len())));
        }
        if p.iter().any(|x| x.abs() + rho > edge) {
            return Err(ConleyError::Precondition(format!(
                "ball of radius {rho} around {} leaves the window of size {window_m}",
                fmt_point(p)
            )));
        }
    }
    let four_rho_sq = int(4) * rho * rho;
    let two_rho = int(2) * rho;
    // sweep along the first coordinate; balls further apart there cannot meet
    let mut sorted: Vec<&Vec<Rat>> = loci.iter().collect();
    sorted.sort_by(|p, q| p.first().cmp(&q.first()));
    for (i, p) in sorted.iter().enumerate() {
        for q in &sorted[i + 1..] {
            if b > 0 && &q[0] - &p[0] > two_rho {
                break;
            }
            let dist_sq: Rat = p.iter().zip(q.iter()).map(|(x, y)| (x - y) * (x - y)).sum();
            if dist_sq <= four_rho_sq {
                return Err(ConleyError::Precondition(format!(
                    "balls of radius {rho} around {} and {} overlap",
                    fmt_point(p),
                    fmt_point(q)
                )));
            }
        }
    }
    Ok(())
}

fn fmt_point(p: &[Rat]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// S¹ exit set: k loci give `WedgeOverS0(k, ℂ)` with W⁻ = ℂ^{base_rank+1}.
pub fn exit_set_descriptor(
    b: usize,
    window_m: i64,
    jump_loci: &[Vec<Rat>],
    rho: &Rat,
    base_rank: i64,
) -> Result<ExitSet, ConleyError> {
    check_balls(b, window_m, jump_loci, rho)?;
    let glue = VirtualRep::c(base_rank);
    if jump_loci.is_empty() {
        return Ok(ExitSet { descriptor: ConleyDescriptor::s0(Group::S1), glue, desuspension: glue });
    }
    Ok(ExitSet {
        descriptor: ConleyDescriptor::wedge(jump_loci.len()),
        glue,
        desuspension: VirtualRep::c(base_rank + 1),
    })
}

/// Pin(2) exit set. `centre` is the fixed point of the ȷ-reflection in locus
/// coordinates; loci must be closed under `v ↦ 2·centre − v`. A fixed locus
/// contributes a full ℍ jump and the torus-wedge form, otherwise the loci pair
/// up into free Pin(2)-orbits. `base_rank` counts ℍ summands of the glue.
pub fn pin_exit_set_descriptor(
    b: usize,
    window_m: i64,
    jump_loci: &[Vec<Rat>],
    rho: &Rat,
    centre: &[Rat],
    base_rank: i64,
) -> Result<ExitSet, ConleyError> {
    check_balls(b, window_m, jump_loci, rho)?;
    if centre.len() != b {
        return Err(ConleyError::Precondition("reflection centre has the wrong dimension".into()));
    }
    let reflect = |p: &Vec<Rat>| -> Vec<Rat> { p.iter().zip(centre).map(|(x, c)| int(2) * c - x).collect() };
    let mut fixed = 0usize;
    for p in jump_loci {
        let r = reflect(p);
        if &r == p {
            fixed += 1;
        } else if !jump_loci.contains(&r) {
            return Err(ConleyError::Precondition(format!(
                "locus {} has no ȷ-partner in the window",
                fmt_point(p)
            )));
        }
    }
    let pairs = (jump_loci.len() - fixed) / 2;
    let glue = VirtualRep::h(base_rank);
    let (descriptor, jump) = match fixed {
        0 if pairs == 0 => (ConleyDescriptor::s0(Group::Pin2), 0),
        0 => (ConleyDescriptor::PinOrbitWedge { copies: pairs }, 0),
        1 => (ConleyDescriptor::PinTorusWedge { copies: pairs }, 1),
        _ => unreachable!("a reflection has at most one fixed lattice point"),
    };
    Ok(ExitSet { descriptor, glue, desuspension: VirtualRep::h(base_rank + jump) })
}
