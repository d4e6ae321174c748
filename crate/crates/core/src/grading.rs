//! Rational grading arithmetic for circle bundles over a genus-g surface
//! with Euler number d, in the torsion spin-c class q.
//!
//! ```text
//! η(D̃)            = d/6 + (g−1−q)(d+g−1−q)/d
//! (1/24)∫p₁        = (d/12)(d²r⁴ − (2−2g)r²)
//! η_sign/8         = (d−3)/24 − (d/12)(d²r⁴ − (2−2g)r²)
//! c(g, d, q)       = (d−1)/8 + (g−1−q)(d+g−1−q)/(2d)
//! n + m(δ_r)       = c − (3/2)·dim ker
//! gr(a, b)         = ind(a) − ind(b) − 2·sf
//! edim             = gr − 2 − 2·#(μ, 0) − 2·#(0, μ′)
//! ```
//!
//! `r` is the fiber length of the adapted metric; the three terms combine to
//! an r-free constant.

use std::fmt;
use std::ops::Add;

use num_traits::Zero;

use crate::rat::{int, rat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradingError {
    #[error("parameters (g, d, q) = ({g}, {d}, {q}) out of range: need {need}")]
    Range { g: i64, d: i64, q: i64, need: &'static str },
    #[error("{0} is not a critical point of the cosine function")]
    NotCritical(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    EtaFormula,
    Symmetry,
    User,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::EtaFormula => write!(f, "eta-formula"),
            Provenance::Symmetry => write!(f, "symmetry"),
            Provenance::User => write!(f, "user"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingRational {
    pub value: Rat,
    pub provenance: Provenance,
}

/// Polynomial in r², coefficient `i` multiplies r^{2i}.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RPoly {
    coeffs: Vec<Rat>,
}

impl RPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RPoly { coeffs }
    }

    pub fn coefficient(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree in r², or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, r: &Rat) -> Rat {
        let r2 = r * r;
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * &r2 + c)
    }
}

impl Add for RPoly {
    type Output = RPoly;
    fn add(self, o: RPoly) -> RPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RPoly::new((0..n).map(|i| self.coefficient(i) + o.coefficient(i)).collect())
    }
}

fn check_gdq(g: i64, d: i64, q: i64) -> Result<(), GradingError> {
    if d <= 0 || g <= 0 || q < g || q >= d {
        return Err(GradingError::Range { g, d, q, need: "d > 0 and 0 < g <= q < d" });
    }
    Ok(())
}

fn quadratic_part(g: i64, d: i64, q: i64) -> Rat {
    rat((g - 1 - q) * (d + g - 1 - q), d)
}

pub fn eta_dirac_tilde(g: i64, d: i64, q: i64) -> Result<Rat, GradingError> {
    check_gdq(g, d, q)?;
    Ok(rat(d, 6) + quadratic_part(g, d, q))
}

pub fn p1_integral(g: i64, d: i64) -> RPoly {
    RPoly::new(vec![Rat::zero(), rat(-d * (2 - 2 * g), 12), rat(d * d * d, 12)])
}

pub fn eta_sign_over8(g: i64, d: i64) -> RPoly {
    RPoly::new(vec![rat(d - 3, 24), rat(d * (2 - 2 * g), 12), rat(-d * d * d, 12)])
}

/// `c(g, d, q)` without the range check; the kernel case q = g − 1 uses it.
pub fn c_formal(g: i64, d: i64, q: i64) -> Rat {
    assert!(d != 0, "c(g, d, q) needs d ≠ 0");
    rat(d - 1, 8) + quadratic_part(g, d, q) / int(2)
}

pub fn c_of_gdq(g: i64, d: i64, q: i64) -> Result<Rat, GradingError> {
    check_gdq(g, d, q)?;
    Ok(c_formal(g, d, q))
}

/// `n(Y, 𝔰_q, A₀, g) + m(D, δ_r)`. With a kernel of dimension k at the base
/// flat connection the APS boundary term and the count of the kernel below
/// the shift give `c − 3k/2`.
pub fn n_plus_m(g: i64, d: i64, q: i64, ker_dim: i64) -> Result<GradingRational, GradingError> {
    if d <= 0 || g <= 0 || q < 0 || q >= d || ker_dim < 0 {
        return Err(GradingError::Range { g, d, q, need: "d > 0, g > 0, 0 <= q < d, ker_dim >= 0" });
    }
    if ker_dim == 0 && q < g {
        return Err(GradingError::Range { g, d, q, need: "g <= q when the kernel is trivial" });
    }
    Ok(GradingRational { value: c_formal(g, d, q) - rat(3 * ker_dim, 2), provenance: Provenance::EtaFormula })
}

/// `n = −dim ker / 2` for manifolds with an orientation-reversing isometry
/// preserving the spin-c structure.
pub fn symmetric_n(ker_dim: i64) -> GradingRational {
    GradingRational { value: rat(-ker_dim, 2), provenance: Provenance::Symmetry }
}

pub fn relative_grading<P>(a: &P, b: &P, morse_index: impl Fn(&P) -> i64, sf: i64) -> i64 {
    morse_index(a) - morse_index(b) - 2 * sf
}

pub fn expected_dimension(gr: i64, count_neg: i64, count_pos: i64) -> i64 {
    gr - 2 - 2 * count_neg - 2 * count_pos
}

pub fn l_periodicity(pairings: &[i64]) -> u64 {
    pairings.iter().fold(0u64, |acc, &x| num_integer::gcd(acc, x.unsigned_abs()))
}

fn cos_two_pi(x: &Rat) -> Result<i64, GradingError> {
    if !crate::rat::is_half_integer(x) {
        return Err(GradingError::NotCritical(x.to_string()));
    }
    Ok(if x.is_integer() { 1 } else { -1 })
}

/// Morse index of `θ ↦ −Σ cos(2π·freq·θᵢ)` at a critical point: the number
/// of coordinates where `freq·θᵢ` is a half-odd integer.
pub fn cosine_morse_index(theta: &[Rat], freq: i64) -> Result<i64, GradingError> {
    let mut idx = 0;
    for t in theta {
        if cos_two_pi(&(t * int(freq)))? < 0 {
            idx += 1;
        }
    }
    Ok(idx)
}

/// Value of `−Σ cos(2π·freq·θᵢ)` at a critical point.
pub fn cosine_critical_value(theta: &[Rat], freq: i64) -> Result<i64, GradingError> {
    theta.iter().map(|t| cos_two_pi(&(t * int(freq))).map(|c| -c)).sum()
}
