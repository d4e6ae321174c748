//! Virtual representations of S¹ and Pin(2).

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Group {
    S1,
    Pin2,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::S1 => write!(f, "S1"),
            Group::Pin2 => write!(f, "Pin2"),
        }
    }
}

/// `real` copies of ℝ, `twisted` copies of ℝ̃ (Pin(2) only) and `complex`
/// copies of ℂ (S¹) or ℍ (Pin(2)). Negative counts are virtual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VirtualRep {
    pub group: Group,
    pub real: i64,
    pub twisted: i64,
    pub complex: i64,
}

impl VirtualRep {
    pub fn zero(group: Group) -> Self {
        VirtualRep { group, real: 0, twisted: 0, complex: 0 }
    }

    pub fn real(group: Group, a: i64) -> Self {
        VirtualRep { real: a, ..Self::zero(group) }
    }

    /// ℂ^b for S¹.
    pub fn c(b: i64) -> Self {
        VirtualRep { complex: b, ..Self::zero(Group::S1) }
    }

    /// ℍ^b for Pin(2).
    pub fn h(b: i64) -> Self {
        VirtualRep { complex: b, ..Self::zero(Group::Pin2) }
    }

    pub fn twisted(a: i64) -> Self {
        VirtualRep { twisted: a, ..Self::zero(Group::Pin2) }
    }

    pub fn is_zero(&self) -> bool {
        self.real == 0 && self.twisted == 0 && self.complex == 0
    }

    pub fn is_admissible(&self) -> bool {
        self.real >= 0 && self.twisted >= 0 && self.complex >= 0
    }

    /// Real dimension of one copy of the "complex" summand.
    pub fn cell_dim(&self) -> i64 {
        match self.group {
            Group::S1 => 2,
            Group::Pin2 => 4,
        }
    }

    pub fn real_dim(&self) -> i64 {
        self.real + self.twisted + self.cell_dim() * self.complex
    }

    fn same_group(&self, other: &Self) {
        assert_eq!(self.group, other.group, "representations of different groups");
    }
}

impl Add for VirtualRep {
    type Output = VirtualRep;
    fn add(self, o: VirtualRep) -> VirtualRep {
        self.same_group(&o);
        VirtualRep {
            group: self.group,
            real: self.real + o.real,
            twisted: self.twisted + o.twisted,
            complex: self.complex + o.complex,
        }
    }
}

impl Neg for VirtualRep {
    type Output = VirtualRep;
    fn neg(self) -> VirtualRep {
        VirtualRep { group: self.group, real: -self.real, twisted: -self.twisted, complex: -self.complex }
    }
}

impl Sub for VirtualRep {
    type Output = VirtualRep;
    fn sub(self, o: VirtualRep) -> VirtualRep {
        self + (-o)
    }
}

fn superscript(n: i64) -> String {
    n.to_string()
        .chars()
        .map(|c| match c {
            '-' => '⁻',
            '0' => '⁰',
            '1' => '¹',
            '2' => '²',
            '3' => '³',
            '4' => '⁴',
            '5' => '⁵',
            '6' => '⁶',
            '7' => '⁷',
            '8' => '⁸',
            _ => '⁹',
        })
        .collect()
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cell = match self.group {
            Group::S1 => "ℂ",
            Group::Pin2 => "ℍ",
        };
        let mut parts = Vec::new();
        for (count, name) in [(self.real, "ℝ"), (self.twisted, "ℝ̃"), (self.complex, cell)] {
            match count {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}{}", superscript(count))),
            }
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("⊕"))
        }
    }
}
