//! Eigenvalue families of Dirac operators parametrized by flat connections
//! `θ ∈ ℚ^b`, with lattice-indexed modes `v ∈ ℤ^b`.
//!
//! Two branch shapes occur:
//!
//! ```text
//! affine   λ(θ, v) = c + a·θ + l·v          (flat T²-bundle, unit π = 1)
//! radial   λ(θ, v) = c + k·|θ + v|          (nil blocks, unit 2√π = 1)
//! ```
//!
//! The flat family is `−2(n + θ)` and `2n + 1 + 2θ`; the nil family is
//! `±|θ + v|`. A global positive unit never changes signs or crossings, so
//! everything is exact: radial values are compared by squaring.
//!
//! Everything outside the modeled branches is represented only by a
//! [`SpectralGap`]; shifts must stay strictly inside it.
//!
//! Spectral flow of `λ − shift` counts negative → nonnegative as +1 and
//! nonnegative → negative as −1, so a zero at the start counts as
//! nonnegative and a crossing exactly at the end counts.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::rat::{ceil_i64, floor_i64, int, Rat};

/// Upper bound on lattice points visited per template and query.
pub const ENUMERATION_CAP: u64 = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpectralError {
    #[error("|{value}| is not below the spectral gap {gap}")]
    GapViolation { value: Rat, gap: Rat },
    #[error("template '{0}' has unboundedly many modes in a bounded window")]
    Unbounded(String),
    #[error("template '{template}' vanishes identically on the segment {segment}")]
    Degenerate { template: String, segment: String },
    #[error("{0}")]
    Domain(String),
}

/// `constant + coefficient·√radicand`, radicand ≥ 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenvalue {
    pub constant: Rat,
    pub coefficient: Rat,
    pub radicand: Rat,
}

/// Sign of `p + q·√r`.
fn sign_surd(p: &Rat, q: &Rat, r: &Rat) -> Ordering {
    let sp = p.cmp(&Rat::zero());
    let sq = if r.is_zero() { Ordering::Equal } else { q.cmp(&Rat::zero()) };
    if sq == Ordering::Equal || sp == sq {
        return if sp == Ordering::Equal { sq } else { sp };
    }
    if sp == Ordering::Equal {
        return sq;
    }
    match (p * p).cmp(&(q * q * r)) {
        Ordering::Greater => sp,
        Ordering::Less => sq,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Sign of `d + a·√x + b·√y`.
fn sign_two_surds(d: &Rat, a: &Rat, x: &Rat, b: &Rat, y: &Rat) -> Ordering {
    let sa = sign_surd(d, a, x);
    let sb = if y.is_zero() { Ordering::Equal } else { b.cmp(&Rat::zero()) };
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal || sa == sb {
        return sb;
    }
    // compare (d + a√x)² with b²y
    let p = d * d + a * a * x - b * b * y;
    let q = int(2) * d * a;
    match sign_surd(&p, &q, x) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

impl Eigenvalue {
    pub fn rational(x: Rat) -> Self {
        Eigenvalue { constant: x, coefficient: Rat::zero(), radicand: Rat::zero() }
    }

    pub fn is_rational(&self) -> bool {
        self.coefficient.is_zero() || self.radicand.is_zero() || {
            let (n, d) = (self.radicand.numer(), self.radicand.denom());
            let rn = n.sqrt();
            let rd = d.sqrt();
            &(&rn * &rn) == n && &(&rd * &rd) == d
        }
    }

    /// Compare with a rational level.
    pub fn cmp_rat(&self, level: &Rat) -> Ordering {
        sign_surd(&(&self.constant - level), &self.coefficient, &self.radicand)
    }
}

impl Ord for Eigenvalue {
    fn cmp(&self, other: &Self) -> Ordering {
        sign_two_surds(
            &(&self.constant - &other.constant),
            &self.coefficient,
            &self.radicand,
            &-&other.coefficient,
            &other.radicand,
        )
    }
}

impl PartialOrd for Eigenvalue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Eigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficient.is_zero() || self.radicand.is_zero() {
            return write!(f, "{}", self.constant);
        }
        write!(f, "{} + {}·√{}", self.constant, self.coefficient, self.radicand)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BranchShape {
    Affine { constant: Rat, theta: Vec<Rat>, lattice: Vec<Rat> },
    Radial { constant: Rat, coefficient: Rat },
    /// A single eigenvalue, not indexed by the lattice.
    Exceptional { constant: Rat, theta: Vec<Rat> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchTemplate {
    pub label: String,
    pub shape: BranchShape,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineBranchFamily {
    rank: usize,
    templates: Vec<BranchTemplate>,
    unit_note: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralGap(Rat);

impl SpectralGap {
    pub fn new(gap: Rat) -> Result<Self, SpectralError> {
        if !gap.is_positive() {
            return Err(SpectralError::Domain(format!("spectral gap {gap} must be positive")));
        }
        Ok(SpectralGap(gap))
    }

    pub fn value(&self) -> &Rat {
        &self.0
    }

    fn admit(&self, x: &Rat) -> Result<(), SpectralError> {
        if x.abs() >= self.0 {
            return Err(SpectralError::GapViolation { value: x.clone(), gap: self.0.clone() });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLPath {
    waypoints: Vec<Vec<Rat>>,
}

impl PLPath {
    pub fn new(waypoints: Vec<Vec<Rat>>) -> Result<Self, SpectralError> {
        if waypoints.len() < 2 {
            return Err(SpectralError::Domain("a path needs at least two waypoints".into()));
        }
        let dim = waypoints[0].len();
        if waypoints.iter().any(|w| w.len() != dim) {
            return Err(SpectralError::Domain("waypoints of different dimensions".into()));
        }
        Ok(PLPath { waypoints })
    }

    /// Path in rank one through the given parameters.
    pub fn line(points: &[Rat]) -> Result<Self, SpectralError> {
        Self::new(points.iter().map(|p| vec![p.clone()]).collect())
    }

    pub fn segment(a: Vec<Rat>, b: Vec<Rat>) -> Result<Self, SpectralError> {
        Self::new(vec![a, b])
    }

    pub fn waypoints(&self) -> &[Vec<Rat>] {
        &self.waypoints
    }

    pub fn reversed(&self) -> Self {
        let mut w = self.waypoints.clone();
        w.reverse();
        PLPath { waypoints: w }
    }

    /// `self` followed by `next`; the end of one must be the start of the other.
    pub fn concat(&self, next: &PLPath) -> Result<Self, SpectralError> {
        if self.waypoints.last() != next.waypoints.first() {
            return Err(SpectralError::Domain("paths are not concatenable".into()));
        }
        let mut w = self.waypoints.clone();
        w.extend(next.waypoints[1..].iter().cloned());
        Ok(PLPath { waypoints: w })
    }
}

struct Mode {
    template: usize,
    v: Vec<i64>,
    value: Eigenvalue,
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl AffineBranchFamily {
    pub fn new(rank: usize, templates: Vec<BranchTemplate>, unit_note: &str) -> Result<Self, SpectralError> {
        for t in &templates {
            let ok = match &t.shape {
                BranchShape::Affine { theta, lattice, .. } => theta.len() == rank && lattice.len() == rank,
                BranchShape::Radial { coefficient, .. } => !coefficient.is_zero(),
                BranchShape::Exceptional { theta, .. } => theta.len() == rank,
            };
            if !ok || t.multiplicity == 0 {
                return Err(SpectralError::Domain(format!("malformed template '{}'", t.label)));
            }
        }
        Ok(AffineBranchFamily { rank, templates, unit_note: unit_note.to_string() })
    }

    /// Flat order-two T²-bundle: branches `−2(n + θ)` and `2n + 1 + 2θ`.
    pub fn flat_order_two() -> Self {
        let affine = |label: &str, c: i64, a: i64| BranchTemplate {
            label: label.to_string(),
            shape: BranchShape::Affine { constant: int(c), theta: vec![int(a)], lattice: vec![int(a)] },
            multiplicity: 1,
        };
        Self::new(1, vec![affine("-2(n+θ)", 0, -2), affine("2n+1+2θ", 1, 2)], "π = 1")
            .expect("well-formed")
    }

    /// Nil blocks on the spinor modes: `±|θ + v|`, `v ∈ ℤ²`.
    pub fn nil_blocks() -> Self {
        let radial = |label: &str, k: i64| BranchTemplate {
            label: label.to_string(),
            shape: BranchShape::Radial { constant: Rat::zero(), coefficient: int(k) },
            multiplicity: 1,
        };
        Self::new(2, vec![radial("+|θ+v|", 1), radial("-|θ+v|", -1)], "2√π = 1").expect("well-formed")
    }

    /// No modeled eigenvalues: the whole spectrum lies outside the gap.
    pub fn empty(rank: usize, unit_note: &str) -> Self {
        AffineBranchFamily { rank, templates: Vec::new(), unit_note: unit_note.to_string() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn templates(&self) -> &[BranchTemplate] {
        &self.templates
    }

    pub fn unit_note(&self) -> &str {
        &self.unit_note
    }

    /// Every coefficient multiplied by `s > 0`.
    pub fn scaled(&self, s: &Rat) -> Self {
        let sc = |v: &[Rat]| v.iter().map(|x| x * s).collect::<Vec<_>>();
        let templates = self
            .templates
            .iter()
            .map(|t| BranchTemplate {
                label: t.label.clone(),
                multiplicity: t.multiplicity,
                shape: match &t.shape {
                    BranchShape::Affine { constant, theta, lattice } => {
                        BranchShape::Affine { constant: constant * s, theta: sc(theta), lattice: sc(lattice) }
                    }
                    BranchShape::Radial { constant, coefficient } => {
                        BranchShape::Radial { constant: constant * s, coefficient: coefficient * s }
                    }
                    BranchShape::Exceptional { constant, theta } => {
                        BranchShape::Exceptional { constant: constant * s, theta: sc(theta) }
                    }
                },
            })
            .collect();
        AffineBranchFamily { rank: self.rank, templates, unit_note: format!("{} (scaled by {s})", self.unit_note) }
    }

    fn check_point(&self, theta: &[Rat]) -> Result<(), SpectralError> {
        if theta.len() != self.rank {
            return Err(SpectralError::Domain(format!(
                "parameter of dimension {} for a rank {} family",
                theta.len(),
                self.rank
            )));
        }
        Ok(())
    }

    fn value(&self, template: usize, theta: &[Rat], v: &[i64]) -> Eigenvalue {
        let vr: Vec<Rat> = v.iter().map(|&x| int(x)).collect();
        match &self.templates[template].shape {
            BranchShape::Affine { constant, theta: a, lattice } => {
                Eigenvalue::rational(constant + dot(a, theta) + dot(lattice, &vr))
            }
            BranchShape::Radial { constant, coefficient } => Eigenvalue {
                constant: constant.clone(),
                coefficient: coefficient.clone(),
                radicand: theta.iter().zip(&vr).map(|(t, x)| (t + x) * (t + x)).sum(),
            },
            BranchShape::Exceptional { constant, theta: a } => Eigenvalue::rational(constant + dot(a, theta)),
        }
    }

    /// All modes with value in `(lo, hi]`.
    fn modes(&self, theta: &[Rat], lo: &Rat, hi: &Rat) -> Result<Vec<Mode>, SpectralError> {
        self.check_point(theta)?;
        let mut out = Vec::new();
        for idx in 0..self.templates.len() {
            self.template_modes(idx, theta, lo, hi, &mut out)?;
        }
        Ok(out)
    }

    fn template_modes(
        &self,
        idx: usize,
        theta: &[Rat],
        lo: &Rat,
        hi: &Rat,
        out: &mut Vec<Mode>,
    ) -> Result<(), SpectralError> {
        if lo >= hi {
            return Ok(());
        }
        let inside = |e: &Eigenvalue| e.cmp_rat(lo) == Ordering::Greater && e.cmp_rat(hi) != Ordering::Greater;
        let t = &self.templates[idx];
        let unbounded = || SpectralError::Unbounded(t.label.clone());
        match &t.shape {
            BranchShape::Exceptional { .. } => {
                let e = self.value(idx, theta, &[]);
                if inside(&e) {
                    out.push(Mode { template: idx, v: Vec::new(), value: e });
                }
            }
            BranchShape::Affine { constant, theta: a, lattice } => {
                if self.rank != 1 || lattice[0].is_zero() {
                    return Err(unbounded());
                }
                let base = constant + dot(a, theta);
                let l = &lattice[0];
                let (vmin, vmax) = if l.is_positive() {
                    (floor_i64(&((lo - &base) / l)) + 1, floor_i64(&((hi - &base) / l)))
                } else {
                    (ceil_i64(&((hi - &base) / l)), ceil_i64(&((lo - &base) / l)) - 1)
                };
                if vmax >= vmin && (vmax - vmin) as u64 >= ENUMERATION_CAP {
                    return Err(unbounded());
                }
                for v in vmin..=vmax {
                    let e = self.value(idx, theta, &[v]);
                    debug_assert!(inside(&e));
                    out.push(Mode { template: idx, v: vec![v], value: e });
                }
            }
            BranchShape::Radial { constant, coefficient } => {
                let reach = std::cmp::max((lo - constant).abs(), (hi - constant).abs()) / coefficient.abs();
                let ranges: Vec<(i64, i64)> =
                    theta.iter().map(|t| (ceil_i64(&(-t - &reach)), floor_i64(&(-t + &reach)))).collect();
                let mut count: u64 = 1;
                for &(a, b) in &ranges {
                    count = count.saturating_mul((b - a + 1).max(0) as u64);
                }
                if count > ENUMERATION_CAP {
                    return Err(unbounded());
                }
                let mut points: Vec<Vec<i64>> = vec![Vec::new()];
                for &(a, b) in &ranges {
                    points = points
                        .into_iter()
                        .flat_map(|p| {
                            (a..=b).map(move |x| {
                                let mut q = p.clone();
                                q.push(x);
                                q
                            })
                        })
                        .collect();
                }
                for v in points {
                    let e = self.value(idx, theta, &v);
                    if inside(&e) {
                        out.push(Mode { template: idx, v, value: e });
                    }
                }
            }
        }
        Ok(())
    }

    /// `Σ_v [λ_q(v) ≥ level] − [λ_p(v) ≥ level]` for a radial template. Only
    /// modes on the near side of `level` contribute, so two finite counts do.
    fn radial_change(&self, idx: usize, p: &[Rat], q: &[Rat], level: &Rat) -> Result<i64, SpectralError> {
        let BranchShape::Radial { constant, coefficient } = &self.templates[idx].shape else {
            unreachable!("radial templates only");
        };
        let count = |x: &[Rat], lo: &Rat, hi: &Rat, below: bool| -> Result<i64, SpectralError> {
            let mut modes = Vec::new();
            self.template_modes(idx, x, lo, hi, &mut modes)?;
            Ok(modes.iter().filter(|m| (m.value.cmp_rat(level) == Ordering::Less) == below).count() as i64)
        };
        if coefficient.is_positive() {
            if level <= constant {
                return Ok(0);
            }
            let lo = constant - int(1);
            Ok(count(p, &lo, level, true)? - count(q, &lo, level, true)?)
        } else {
            if level > constant {
                return Ok(0);
            }
            let lo = level - int(1);
            Ok(count(q, &lo, constant, false)? - count(p, &lo, constant, false)?)
        }
    }

    /// Largest change of any lattice-indexed affine branch along the straight
    /// segment `p → q`.
    fn variation_bound(&self, p: &[Rat], q: &[Rat]) -> Rat {
        let step: Vec<Rat> = q.iter().zip(p).map(|(a, b)| a - b).collect();
        self.templates
            .iter()
            .map(|t| match &t.shape {
                BranchShape::Affine { theta, .. } | BranchShape::Exceptional { theta, .. } => {
                    dot(theta, &step).abs()
                }
                BranchShape::Radial { .. } => Rat::zero(),
            })
            .max()
            .unwrap_or_else(Rat::zero)
    }
}

/// All eigenvalues in `(lo, hi]` with multiplicity, sorted.
pub fn eigenvalues_in_window(
    fam: &AffineBranchFamily,
    theta: &[Rat],
    lo: &Rat,
    hi: &Rat,
) -> Result<Vec<Eigenvalue>, SpectralError> {
    let mut out = Vec::new();
    for m in fam.modes(theta, lo, hi)? {
        for _ in 0..fam.templates[m.template].multiplicity {
            out.push(m.value.clone());
        }
    }
    out.sort();
    Ok(out)
}

fn count_in(fam: &AffineBranchFamily, theta: &[Rat], lo: &Rat, hi: &Rat) -> Result<i64, SpectralError> {
    Ok(fam.modes(theta, lo, hi)?.iter().map(|m| fam.templates[m.template].multiplicity as i64).sum())
}

/// `m(L, δ)`: the number of eigenvalues in `(−δ, 0]` for δ ≥ 0, and minus the
/// number in `(0, −δ]` for δ < 0.
pub fn m_count(fam: &AffineBranchFamily, gap: &SpectralGap, theta: &[Rat], delta: &Rat) -> Result<i64, SpectralError> {
    gap.admit(delta)?;
    if delta.is_negative() {
        Ok(-count_in(fam, theta, &Rat::zero(), &-delta)?)
    } else {
        count_in(fam, theta, &-delta, &Rat::zero())
    }
}

/// Complex dimension of the kernel at `θ` (modeled branches only; the gap
/// excludes zero from the rest).
pub fn kernel_dim(fam: &AffineBranchFamily, theta: &[Rat]) -> Result<i64, SpectralError> {
    Ok(fam
        .modes(theta, &int(-1), &Rat::zero())?
        .iter()
        .filter(|m| m.value.cmp_rat(&Rat::zero()) == Ordering::Equal)
        .map(|m| fam.templates[m.template].multiplicity as i64)
        .sum())
}

/// Net spectral flow of `λ − shift` along `path`.
pub fn spectral_flow(
    fam: &AffineBranchFamily,
    gap: &SpectralGap,
    path: &PLPath,
    shift: &Rat,
) -> Result<i64, SpectralError> {
    gap.admit(shift)?;
    let mut total = 0i64;
    for seg in path.waypoints.windows(2) {
        let (p, q) = (&seg[0], &seg[1]);
        fam.check_point(p)?;
        if p == q {
            continue;
        }
        let reach = fam.variation_bound(p, q) + int(1);
        let lo = shift - &reach;
        let hi = shift + &reach;
        for (idx, t) in fam.templates.iter().enumerate() {
            if matches!(t.shape, BranchShape::Radial { .. }) {
                total += t.multiplicity as i64 * fam.radial_change(idx, p, q, shift)?;
                continue;
            }
            let mut modes = Vec::new();
            fam.template_modes(idx, p, &lo, &hi, &mut modes)?;
            for m in modes {
                let end = fam.value(idx, q, &m.v);
                if m.value == end && m.value.cmp_rat(shift) == Ordering::Equal {
                    let fmt = |x: &[Rat]| x.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",");
                    return Err(SpectralError::Degenerate {
                        template: t.label.clone(),
                        segment: format!("({}) → ({})", fmt(p), fmt(q)),
                    });
                }
                let before = m.value.cmp_rat(shift) != Ordering::Less;
                let after = end.cmp_rat(shift) != Ordering::Less;
                total += t.multiplicity as i64 * (after as i64 - before as i64);
            }
        }
    }
    Ok(total)
}

/// Radius of the sphere `|θ + v| = δ` where a nil block of `D − δ` has
/// kernel (unit 2√π = 1).
pub fn nil_block_kernel_locus(delta: &Rat) -> Result<Rat, SpectralError> {
    if !delta.is_positive() {
        return Err(SpectralError::Domain(format!("shift {delta} must be positive")));
    }
    Ok(delta.clone())
}
