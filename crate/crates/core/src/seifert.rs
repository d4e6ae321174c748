//! Orbifold line bundles over an oriented 2-orbifold with cone points of
//! multiplicities α₁, …, αₙ, and the torsion spin-c structures on the circle
//! bundle S(N).
//!
//! A bundle is `(b, β₁, …, βₙ)` with `0 ≤ βⱼ < αⱼ`. The group law carries:
//!
//! ```text
//! (b, β) ⊞ (b', β') = (b + b' + Σ ⌊(βⱼ + β'ⱼ)/αⱼ⌋, (βⱼ + β'ⱼ) mod αⱼ)
//! deg(b, β)         = b + Σ βⱼ/αⱼ
//! χ(Σ)              = 2 − 2g − Σ (1 − 1/αⱼ)
//! ```
//!
//! The Euler characteristic uses the standard orbifold sign, so −χ/2 = g − 1
//! on a smooth base. (The formula is sometimes printed with Σ(1/αⱼ − 1).)
//!
//! Torsion spin-c structures on S(N) correspond to Picᵗ(Σ)/ℤ[N], which is
//! finite exactly when deg N ≠ 0.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::conley::IntMatrix;
use crate::rat::{int, rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeifertError {
    #[error("invalid marking ({alpha}, {beta}): need alpha >= 2, 0 <= beta < alpha, gcd(alpha, beta) = 1")]
    Marking { alpha: i64, beta: i64 },
    #[error("genus must be nonnegative, got {0}")]
    Genus(i64),
    #[error("bundle has {got} beta entries but the base has {want} markings")]
    MarkingCount { got: usize, want: usize },
    #[error("beta entry {beta} out of range [0, {alpha})")]
    BetaRange { alpha: i64, beta: i64 },
    #[error("deg N = 0: the torsion spin-c classes form an infinite family")]
    DegreeZero,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertData {
    genus: i64,
    markings: Vec<(i64, i64)>,
}

impl SeifertData {
    pub fn new(genus: i64, markings: Vec<(i64, i64)>) -> Result<Self, SeifertError> {
        if genus < 0 {
            return Err(SeifertError::Genus(genus));
        }
        for &(alpha, beta) in &markings {
            if alpha < 2 || beta < 0 || beta >= alpha || num_integer::gcd(alpha, beta) != 1 {
                return Err(SeifertError::Marking { alpha, beta });
            }
        }
        Ok(SeifertData { genus, markings })
    }

    pub fn smooth(genus: i64) -> Result<Self, SeifertError> {
        Self::new(genus, Vec::new())
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn markings(&self) -> &[(i64, i64)] {
        &self.markings
    }

    pub fn alphas(&self) -> Vec<i64> {
        self.markings.iter().map(|&(a, _)| a).collect()
    }

    /// The bundle `(b, β)` with the Seifert invariants of the markings.
    pub fn bundle_with_markings(&self, b: i64) -> OrbLineBundle {
        OrbLineBundle { b, beta: self.markings.iter().map(|&(_, beta)| beta).collect() }
    }

    /// The bundle `(b, 0, …, 0)`.
    pub fn integral_bundle(&self, b: i64) -> OrbLineBundle {
        OrbLineBundle { b, beta: vec![0; self.markings.len()] }
    }

    pub fn check(&self, l: &OrbLineBundle) -> Result<(), SeifertError> {
        if l.beta.len() != self.markings.len() {
            return Err(SeifertError::MarkingCount { got: l.beta.len(), want: self.markings.len() });
        }
        for (&beta, &(alpha, _)) in l.beta.iter().zip(&self.markings) {
            if beta < 0 || beta >= alpha {
                return Err(SeifertError::BetaRange { alpha, beta });
            }
        }
        Ok(())
    }

    /// `a ⊞ b` with carrying.
    pub fn add(&self, a: &OrbLineBundle, b: &OrbLineBundle) -> Result<OrbLineBundle, SeifertError> {
        self.check(a)?;
        self.check(b)?;
        let mut carry = 0;
        let beta = a
            .beta
            .iter()
            .zip(&b.beta)
            .zip(self.alphas())
            .map(|((x, y), alpha)| {
                carry += (x + y).div_euclid(alpha);
                (x + y).rem_euclid(alpha)
            })
            .collect();
        Ok(OrbLineBundle { b: a.b + b.b + carry, beta })
    }

    /// `k·L` in closed form.
    pub fn multiple(&self, l: &OrbLineBundle, k: i64) -> Result<OrbLineBundle, SeifertError> {
        self.check(l)?;
        let mut b = k * l.b;
        let beta = l
            .beta
            .iter()
            .zip(self.alphas())
            .map(|(x, alpha)| {
                b += (k * x).div_euclid(alpha);
                (k * x).rem_euclid(alpha)
            })
            .collect();
        Ok(OrbLineBundle { b, beta })
    }

    pub fn negate(&self, l: &OrbLineBundle) -> Result<OrbLineBundle, SeifertError> {
        self.multiple(l, -1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbLineBundle {
    pub b: i64,
    pub beta: Vec<i64>,
}

impl OrbLineBundle {
    pub fn new(b: i64, beta: Vec<i64>) -> Self {
        OrbLineBundle { b, beta }
    }

    pub fn smooth(b: i64) -> Self {
        OrbLineBundle { b, beta: Vec::new() }
    }
}

pub fn orb_degree(base: &SeifertData, l: &OrbLineBundle) -> Result<Rat, SeifertError> {
    base.check(l)?;
    Ok(l.beta.iter().zip(base.alphas()).fold(int(l.b), |acc, (&beta, alpha)| acc + rat(beta, alpha)))
}

/// `lcm(α)·deg L` as an exact integer, with the lcm.
fn scaled_degree(base: &SeifertData, l: &OrbLineBundle) -> Result<(BigInt, BigInt), SeifertError> {
    base.check(l)?;
    let lcm = base.alphas().iter().fold(BigInt::one(), |acc, &a| acc.lcm(&BigInt::from(a)));
    let mut total = BigInt::from(l.b) * &lcm;
    for (&beta, alpha) in l.beta.iter().zip(base.alphas()) {
        total += BigInt::from(beta) * (&lcm / alpha);
    }
    Ok((total, lcm))
}

pub fn orb_euler(base: &SeifertData) -> Rat {
    base.alphas().iter().fold(int(2 - 2 * base.genus), |acc, &alpha| acc - (int(1) - rat(1, alpha)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupOrder {
    Finite(u64),
    Infinite,
}

/// Order of Picᵗ(Σ)/ℤ[N], from the Smith form of the presentation with
/// generators `e₀` (degree-one point bundle) and `eⱼ` (the bundles
/// `(0, …, 1, …, 0)`), relations `αⱼ eⱼ = e₀` and `N = 0`.
pub fn picard_quotient_order(base: &SeifertData, n: &OrbLineBundle) -> Result<GroupOrder, SeifertError> {
    base.check(n)?;
    let k = base.markings.len();
    let mut rows = Vec::with_capacity(k + 1);
    for (j, &(alpha, _)) in base.markings.iter().enumerate() {
        let mut row = vec![0; k + 1];
        row[0] = -1;
        row[j + 1] = alpha;
        rows.push(row);
    }
    let mut row = vec![n.b];
    row.extend(&n.beta);
    rows.push(row);
    let factors = IntMatrix::from_rows(&rows).invariant_factors();
    if factors.len() < k + 1 {
        return Ok(GroupOrder::Infinite);
    }
    Ok(GroupOrder::Finite(factors.iter().map(|&f| f as u64).product()))
}

/// A class in Picᵗ(Σ)/ℤ[N], stored by its canonical representative: the
/// unique bundle in the coset with degree in `[0, |deg N|)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionSpinC {
    representative: OrbLineBundle,
}

impl TorsionSpinC {
    pub fn from_bundle(base: &SeifertData, n: &OrbLineBundle, e: &OrbLineBundle) -> Result<Self, SeifertError> {
        let (dn, _) = scaled_degree(base, n)?;
        let (de, _) = scaled_degree(base, e)?;
        if dn.is_zero() {
            return Err(SeifertError::DegreeZero);
        }
        let (step, dstep) = if dn.is_positive() { (n.clone(), dn) } else { (base.negate(n)?, -dn) };
        // smallest k with deg E + k·|deg N| ≥ 0
        let k = (-de).div_ceil(&dstep).to_i64().expect("shift fits in i64");
        let shift = base.multiple(&step, k)?;
        Ok(TorsionSpinC { representative: base.add(e, &shift)? })
    }

    pub fn representative(&self) -> &OrbLineBundle {
        &self.representative
    }

    /// Reduced coordinates `(b, β₁, …, βₙ)` of the canonical representative.
    pub fn coordinates(&self) -> Vec<i64> {
        let mut v = vec![self.representative.b];
        v.extend(&self.representative.beta);
        v
    }
}

/// One class per coset, ordered by representative degree then coordinates.
pub fn enumerate_torsion_spinc(base: &SeifertData, n: &OrbLineBundle) -> Result<Vec<TorsionSpinC>, SeifertError> {
    let (dn, lcm) = scaled_degree(base, n)?;
    if dn.is_zero() {
        return Err(SeifertError::DegreeZero);
    }
    let width = dn.abs();
    let mut betas: Vec<Vec<i64>> = vec![Vec::new()];
    for alpha in base.alphas() {
        betas = betas
            .into_iter()
            .flat_map(|p| {
                (0..alpha).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    let mut keyed: Vec<(BigInt, TorsionSpinC)> = Vec::new();
    for beta in betas {
        let (frac, _) = scaled_degree(base, &OrbLineBundle::new(0, beta.clone()))?;
        // b ranges over integers with 0 ≤ b·lcm + frac < |deg N|·lcm
        let lo = (-&frac).div_ceil(&lcm).to_i64().expect("fits in i64");
        let hi = (&width - &frac).div_ceil(&lcm).to_i64().expect("fits in i64");
        for b in lo..hi {
            let key = BigInt::from(b) * &lcm + &frac;
            keyed.push((key, TorsionSpinC { representative: OrbLineBundle::new(b, beta.clone()) }));
        }
    }
    keyed.sort();
    Ok(keyed.into_iter().map(|(_, c)| c).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Reducibility {
    /// No bundle in the class has degree in [0, −χ/2).
    pub all_reducible: bool,
    /// No bundle in the class has degree exactly −χ/2.
    pub kernel_free: bool,
}

/// The degrees in the class of `e0` form the progression deg E₀ + deg N·ℤ;
/// test it against [0, −χ/2) and {−χ/2}.
pub fn reducibility_check(
    base: &SeifertData,
    n: &OrbLineBundle,
    e0: &TorsionSpinC,
) -> Result<Reducibility, SeifertError> {
    let dn = orb_degree(base, n)?.abs();
    if dn.is_zero() {
        return Err(SeifertError::DegreeZero);
    }
    let d0 = orb_degree(base, e0.representative())?;
    let top = -orb_euler(base) / int(2);
    // smallest progression element ≥ 0
    let k = crate::rat::ceil_i64(&(-&d0 / &dn));
    let first = &d0 + &dn * int(k);
    let all_reducible = first >= top;
    let kernel_free = !((&top - &d0) / &dn).is_integer();
    Ok(Reducibility { all_reducible, kernel_free })
}
