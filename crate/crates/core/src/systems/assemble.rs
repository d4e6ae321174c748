//! From a manifold spec to its normalized spectrum invariant.
//!
//! Every case has the form `(system, 0, index)`. With `G = n + m(D, δ_r)` of
//! the reference operator, `s = −1` for flavor A and `+1` for flavor R:
//!
//! ```text
//! S¹      index = G + m(D, s·δ) + c
//! Pin(2)  index = (G + m(D, s·δ) + sf(θ₀ → θ_spin)) / 2 + h
//! ```
//!
//! where `c` (resp. `h`) is the net complex (resp. quaternionic)
//! desuspension of the exit set, and the spectral flow of `D − δ` moves the
//! grading from the reference connection to the spin connection. Without
//! jumping kernel the exit set is empty, the system is constant S⁰ and
//! `m(D, s·δ)` vanishes.

use num_traits::Zero;

use super::{normalize, CObject, Direction, SystemObject, SystemsError};
use crate::cli::ManifoldSpec;
use crate::conley::{
    exit_set_descriptor, pin_exit_set_descriptor, spanier_whitehead_dual, window_loci, ConleyDescriptor, Group,
    VirtualRep,
};
use crate::grading::{n_plus_m, symmetric_n};
use crate::rat::{int, rat, Rat};
use crate::seifert::{reducibility_check, OrbLineBundle, SeifertData, TorsionSpinC};
use crate::spectral::{kernel_dim, m_count, nil_block_kernel_locus, spectral_flow, AffineBranchFamily, PLPath, SpectralGap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    A,
    R,
}

impl Flavor {
    fn sign(self) -> i64 {
        match self {
            Flavor::A => -1,
            Flavor::R => 1,
        }
    }

    fn direction(self) -> Direction {
        match self {
            Flavor::A => Direction::Ind,
            Flavor::R => Direction::Pro,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssemblyOptions {
    /// Declared spectral gap of the unmodeled part, in family units.
    pub gap: Rat,
    /// Size of the shift δ applied to the Dirac family.
    pub shift: Rat,
}

impl Default for AssemblyOptions {
    fn default() -> Self {
        AssemblyOptions { gap: rat(1, 2), shift: rat(1, 20) }
    }
}

/// A normalized invariant `(system, 0, index)`. `index` is `None` when the
/// rational shift is not determined (unknown eta invariant).
#[derive(Clone, Debug)]
pub struct Swf {
    pub system: SystemObject,
    pub index: Option<Rat>,
    pub trail: Vec<String>,
}

struct Ctx {
    group: Group,
    flavor: Flavor,
    gap: SpectralGap,
    delta: Rat,
    trail: Vec<String>,
}

impl Ctx {
    fn note(&mut self, s: impl Into<String>) {
        self.trail.push(s.into());
    }
}

pub fn assemble_swf(spec: &ManifoldSpec, group: Group, flavor: Flavor, opts: &AssemblyOptions) -> Result<Swf, SystemsError> {
    let gap = SpectralGap::new(opts.gap.clone())?;
    let mut cx = Ctx { group, flavor, gap, delta: opts.shift.clone(), trail: Vec::new() };
    match spec {
        ManifoldSpec::S2xS1 => s2xs1(cx),
        ManifoldSpec::CircleBundle { g, d, q } => circle_bundle(cx, *g, *d, *q),
        ManifoldSpec::Nil { d, q, spin_lift } => {
            if *q == 0 && *d > 0 {
                nil_jumping(cx, *d, *spin_lift)
            } else {
                cx.note("nil manifold with q ≠ 0 is the genus-one circle bundle");
                circle_bundle(cx, 1, *d, *q)
            }
        }
        ManifoldSpec::FlatT2Bundle { order: 2, spin_lift } => flat_order_two(cx, *spin_lift),
        ManifoldSpec::FlatT2Bundle { order, .. } => {
            cx.note(format!("flat T²-bundle of order {order}: eta invariant not computed"));
            unspecified(cx)
        }
        ManifoldSpec::HantzscheWendt => {
            cx.note("Hantzsche-Wendt manifold: eta invariant not computed");
            unspecified(cx)
        }
        ManifoldSpec::SeifertGeneral { .. } => Err(SystemsError::Unsupported(
            "general Seifert data supports reducibility and grading queries only".into(),
        )),
    }
}

fn sphere_system(cx: Ctx, index: Rat) -> Result<Swf, SystemsError> {
    let s0 = CObject::new(ConleyDescriptor::s0(cx.group), 0, Rat::zero())?;
    let system = normalize(&SystemObject::constant(cx.flavor.direction(), s0), &index);
    Ok(Swf { system, index: Some(index), trail: cx.trail })
}

fn unspecified(cx: Ctx) -> Result<Swf, SystemsError> {
    let s0 = CObject::new(ConleyDescriptor::s0(cx.group), 0, Rat::zero())?;
    let system = SystemObject::constant(cx.flavor.direction(), s0);
    Ok(Swf { system, index: None, trail: cx.trail })
}

/// Reducible-only case: `(S⁰, 0, G)` for S¹ and `(S⁰, 0, G/2)` for Pin(2).
fn sphere_case(mut cx: Ctx, g_total: Rat) -> Result<Swf, SystemsError> {
    let index = match cx.group {
        Group::S1 => g_total,
        Group::Pin2 => {
            cx.note("Pin(2) normalization halves the grading");
            g_total / int(2)
        }
    };
    sphere_system(cx, index)
}

fn s2xs1(mut cx: Ctx) -> Result<Swf, SystemsError> {
    let fam = AffineBranchFamily::empty(1, "positive scalar curvature: no small eigenvalues");
    let theta = [Rat::zero()];
    let k = kernel_dim(&fam, &theta)?;
    let n = symmetric_n(k);
    let m = m_count(&fam, &cx.gap, &theta, &Rat::zero())?;
    cx.note(format!("grading.symmetric_n: orientation-reversing isometry, dim ker = {k}, n = {}", n.value));
    cx.note(format!("spectral.m_count at θ = 0, δ = 0: {m}"));
    cx.note("Morse-Bott reducible: only reducible critical points");
    sphere_case(cx, n.value + int(m))
}

fn circle_bundle(mut cx: Ctx, g: i64, d: i64, q: i64) -> Result<Swf, SystemsError> {
    if d <= 0 || g <= 0 || q < 0 || q >= d {
        return Err(SystemsError::Range(format!("circle bundle needs d > 0, g > 0 and 0 <= q < d, got g={g} d={d} q={q}")));
    }
    if cx.group == Group::Pin2 {
        return Err(SystemsError::Unsupported("Pin(2) invariants of circle bundles are not in the registry".into()));
    }
    let base = SeifertData::smooth(g)?;
    let n_bundle = OrbLineBundle::smooth(d);
    let class = TorsionSpinC::from_bundle(&base, &n_bundle, &OrbLineBundle::smooth(q))?;
    let r = reducibility_check(&base, &n_bundle, &class)?;
    cx.note(format!(
        "seifert.reducibility_check(g={g}, d={d}, q={q}): all_reducible={}, kernel_free={}",
        r.all_reducible, r.kernel_free
    ));
    if !(r.all_reducible && r.kernel_free) {
        return Err(SystemsError::HypothesesNotMet(format!(
            "circle bundle g={g}, d={d}, q={q} has {}",
            if r.all_reducible { "a Dirac kernel at the reducibles" } else { "irreducible critical points" }
        )));
    }
    let gm = n_plus_m(g, d, q, 0)?;
    cx.note(format!("grading.n_plus_m(g={g}, d={d}, q={q}, ker=0) = c(g,d,q) = {}", gm.value));
    cx.note("Morse-Bott reducible: only reducible critical points");
    sphere_case(cx, gm.value)
}

/// Data of a torus of reducibles with jumping kernel.
struct Jumping {
    fam: AffineBranchFamily,
    rank: usize,
    /// base grading `n + m(D, δ_r)` at the reference connection θ₀ = 0
    base: Rat,
    /// ball radius around each jump locus
    rho: Rat,
    /// parameter of the spin connection for each lift, and the ȷ-centre in locus coordinates
    spin_connection: fn(u8) -> Option<(Vec<Rat>, bool)>,
}

fn nil_spin(lift: u8) -> Option<(Vec<Rat>, bool)> {
    let h = rat(1, 2);
    let z = Rat::zero();
    match lift {
        0 => Some((vec![z.clone(), z], true)),
        1 => Some((vec![h, z], false)),
        2 => Some((vec![z, h], false)),
        3 => Some((vec![h.clone(), h], false)),
        _ => None,
    }
}

fn flat_spin(lift: u8) -> Option<(Vec<Rat>, bool)> {
    match lift {
        0 => Some((vec![rat(1, 4)], true)),
        1 => Some((vec![rat(3, 4)], false)),
        _ => None,
    }
}

fn nil_jumping(mut cx: Ctx, d: i64, lift: Option<u8>) -> Result<Swf, SystemsError> {
    let base = SeifertData::smooth(1)?;
    let n_bundle = OrbLineBundle::smooth(d);
    let class = TorsionSpinC::from_bundle(&base, &n_bundle, &OrbLineBundle::smooth(0))?;
    let r = reducibility_check(&base, &n_bundle, &class)?;
    cx.note(format!(
        "seifert.reducibility_check(g=1, d={d}, q=0): all_reducible={}, kernel_free={}",
        r.all_reducible, r.kernel_free
    ));
    if !r.all_reducible {
        return Err(SystemsError::HypothesesNotMet(format!("nil manifold d={d} has irreducible critical points")));
    }
    let fam = AffineBranchFamily::nil_blocks();
    let theta0 = [Rat::zero(), Rat::zero()];
    let k = kernel_dim(&fam, &theta0)?;
    let gm = n_plus_m(1, d, 0, k)?;
    cx.note(format!("spectral.kernel_dim at θ = 0: {k} (unit {})", fam.unit_note()));
    cx.note(format!("grading.n_plus_m(g=1, d={d}, q=0, ker={k}) = {}", gm.value));
    let rho = nil_block_kernel_locus(&cx.delta)?;
    let j = Jumping { fam, rank: 2, base: gm.value, rho, spin_connection: nil_spin };
    jumping(cx, j, lift)
}

fn flat_order_two(mut cx: Ctx, lift: Option<u8>) -> Result<Swf, SystemsError> {
    let fam = AffineBranchFamily::flat_order_two();
    let k = kernel_dim(&fam, &[Rat::zero()])?;
    let n = symmetric_n(k);
    cx.note("flat T²-bundle of order 2: deg N = 0, reducibles only by the Weitzenböck argument");
    cx.note(format!("spectral.kernel_dim at θ = 0: {k} (unit {})", fam.unit_note()));
    cx.note(format!("grading.symmetric_n(ker={k}) = {}", n.value));
    // branches have slope 2 in θ, so the kernel of D − δ sits δ/2 from the loci
    let rho = &cx.delta / int(2);
    let j = Jumping { fam, rank: 1, base: n.value, rho, spin_connection: flat_spin };
    jumping(cx, j, lift)
}

fn jumping(mut cx: Ctx, j: Jumping, lift: Option<u8>) -> Result<Swf, SystemsError> {
    let zero = vec![Rat::zero(); j.rank];
    let s = cx.flavor.sign();
    let corr = m_count(&j.fam, &cx.gap, &zero, &(&cx.delta * int(s)))?;
    cx.note(format!("spectral.m_count at θ = 0, δ = {}: {corr}", &cx.delta * int(s)));
    let graded = &j.base + int(corr);
    match cx.group {
        Group::S1 => {
            let (rank, rho) = (j.rank, j.rho.clone());
            let first = window_loci(rank, 1, false);
            let probe = exit_set_descriptor(rank, 1, &first, &rho, first.len() as i64)?;
            let net = probe.net_desuspension();
            cx.note(format!(
                "conley.exit_set_descriptor at window 1: {} loci, W⁻ = {}, net desuspension {net}",
                first.len(),
                probe.desuspension
            ));
            let index = graded + int(net.complex);
            let flavor = cx.flavor;
            let attractor = move |m: usize| {
                let loci = window_loci(rank, m as i64, false);
                exit_set_descriptor(rank, m as i64, &loci, &rho, loci.len() as i64)
                    .expect("window validated at index 1")
                    .descriptor
            };
            let system = match flavor {
                Flavor::A => SystemObject::new(Direction::Ind, Group::S1, move |m| {
                    CObject::new(attractor(m), 0, Rat::zero()).expect("m = 0")
                }),
                Flavor::R => {
                    let ambient = VirtualRep::c(2);
                    spanier_whitehead_dual(&attractor(1), ambient)?;
                    cx.note(format!("conley.spanier_whitehead_dual in {ambient}"));
                    SystemObject::new(Direction::Pro, Group::S1, move |m| {
                        let d = spanier_whitehead_dual(&attractor(m), ambient).expect("checked at index 1");
                        CObject::new(d, 0, Rat::zero()).expect("m = 0")
                    })
                }
            };
            let system = normalize(&system, &index);
            Ok(Swf { system, index: Some(index), trail: cx.trail })
        }
        Group::Pin2 => {
            let lift = lift.ok_or_else(|| SystemsError::Range("Pin(2) invariants need a spin_lift".into()))?;
            let (theta_spin, symmetric) = (j.spin_connection)(lift)
                .ok_or_else(|| SystemsError::Range(format!("spin_lift {lift} out of range for this family")))?;
            let path = PLPath::segment(zero.clone(), theta_spin.clone())?;
            let sf = spectral_flow(&j.fam, &cx.gap, &path, &cx.delta)?;
            let spin_txt: Vec<String> = theta_spin.iter().map(|x| x.to_string()).collect();
            cx.note(format!("spectral.spectral_flow of D − δ from θ = 0 to the spin connection ({}): {sf}", spin_txt.join(",")));
            let centre = if symmetric { zero.clone() } else { vec![rat(1, 2); j.rank] };
            let (rank, rho) = (j.rank, j.rho.clone());
            let pin_exit = move |m: usize| {
                let loci = window_loci(rank, m as i64, !symmetric);
                let pairs = (loci.len() / 2) as i64;
                pin_exit_set_descriptor(rank, m as i64, &loci, &rho, &centre, pairs)
            };
            let probe = pin_exit(1)?;
            let net = probe.net_desuspension();
            cx.note(format!(
                "conley.pin_exit_set_descriptor ({} lift): W⁻ = {}, net desuspension {net}",
                if symmetric { "symmetric" } else { "non-symmetric" },
                probe.desuspension
            ));
            cx.note("Pin(2) normalization halves the grading");
            let index = (graded + int(sf)) / int(2) + int(net.complex);
            let attractor = move |m: usize| pin_exit(m).expect("window validated at index 1").descriptor;
            let system = match cx.flavor {
                Flavor::A => SystemObject::new(Direction::Ind, Group::Pin2, move |m| {
                    CObject::new(attractor(m), 0, Rat::zero()).expect("m = 0")
                }),
                Flavor::R => {
                    let ambient = if symmetric { VirtualRep::h(2) } else { VirtualRep::h(1) };
                    spanier_whitehead_dual(&attractor(1), ambient)?;
                    cx.note(format!("conley.spanier_whitehead_dual in {ambient}"));
                    SystemObject::new(Direction::Pro, Group::Pin2, move |m| {
                        let d = spanier_whitehead_dual(&attractor(m), ambient).expect("checked at index 1");
                        CObject::new(d, 0, Rat::zero()).expect("m = 0")
                    })
                }
            };
            let system = normalize(&system, &index);
            Ok(Swf { system, index: Some(index), trail: cx.trail })
        }
    }
}
