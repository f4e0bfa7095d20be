//! Fixed A₃ data: fundamental weights in the simple-root basis, the four
//! coweight twists, and the lattices P ⊃ L₁ ⊃ Q.
//!
//! Summation indices are the shifted coordinates m = (m₁, m₂, m₃) ∈ ℕ³ of
//! λ = m₁λ₁ + m₂λ₂ + m₃λ₃.  Every twist phase is a power of
//! χ(m) = i^{3m₁+2m₂+m₃}, so a twist is an element of ℤ/4.

use std::fmt;
use std::str::FromStr;

use a3z_exact::{rat, BigRational, Gaussian};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown {kind} label {got:?}")]
pub struct LabelError {
    pub kind: &'static str,
    pub got: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TwistLabel {
    Zero,
    Lam1,
    Lam2,
    Lam3,
}

impl TwistLabel {
    pub const ALL: [TwistLabel; 4] = [TwistLabel::Zero, TwistLabel::Lam1, TwistLabel::Lam2, TwistLabel::Lam3];

    /// Position in ℤ/4 (phase = χᵏ).
    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(k: i64) -> Self {
        Self::ALL[k.rem_euclid(4) as usize]
    }

    pub fn add(self, other: TwistLabel) -> Self {
        Self::from_index(self.index() as i64 + other.index() as i64)
    }

    /// lam1 ↔ lam3; the other two are fixed.
    pub fn conj(self) -> Self {
        Self::from_index(-(self.index() as i64))
    }

    pub fn as_str(self) -> &'static str {
        match self {
            TwistLabel::Zero => "zero",
            TwistLabel::Lam1 => "lam1",
            TwistLabel::Lam2 => "lam2",
            TwistLabel::Lam3 => "lam3",
        }
    }
}

impl fmt::Display for TwistLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TwistLabel {
    type Err = LabelError;
    fn from_str(s: &str) -> Result<Self, LabelError> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or(LabelError { kind: "twist", got: s.into() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LatticeLabel {
    P,
    L1,
    Q,
}

impl LatticeLabel {
    pub const ALL: [LatticeLabel; 3] = [LatticeLabel::P, LatticeLabel::L1, LatticeLabel::Q];

    pub fn group_name(self) -> &'static str {
        match self {
            LatticeLabel::P => "SU(4)",
            LatticeLabel::L1 => "SO(6)",
            LatticeLabel::Q => "PU(4)",
        }
    }

    /// Indicator of the lattice as a combination of characters χᵏ:
    /// 1_G(m) = Σ w_k χ(m)^k.
    pub fn character_weights(self) -> Vec<(TwistLabel, BigRational)> {
        use TwistLabel::*;
        match self {
            LatticeLabel::P => vec![(Zero, rat(1, 1))],
            LatticeLabel::L1 => vec![(Zero, rat(1, 2)), (Lam2, rat(1, 2))],
            LatticeLabel::Q => vec![
                (Zero, rat(1, 4)),
                (Lam1, rat(-1, 4)),
                (Lam2, rat(1, 4)),
                (Lam3, rat(-1, 4)),
            ],
        }
    }
}

impl fmt::Display for LatticeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for LatticeLabel {
    type Err = LabelError;
    fn from_str(s: &str) -> Result<Self, LabelError> {
        match s {
            "P" => Ok(LatticeLabel::P),
            "L1" => Ok(LatticeLabel::L1),
            "Q" => Ok(LatticeLabel::Q),
            _ => Err(LabelError { kind: "lattice", got: s.into() }),
        }
    }
}

/// Coordinates in the basis (α₁, α₂, α₃).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector {
    pub coords: [BigRational; 3],
}

impl WeightVector {
    pub fn new(c: [BigRational; 3]) -> Self {
        WeightVector { coords: c }
    }

    pub fn alpha(j: usize) -> Self {
        let mut c = [rat(0, 1), rat(0, 1), rat(0, 1)];
        c[j - 1] = rat(1, 1);
        WeightVector { coords: c }
    }

    /// Fundamental weight λⱼ.
    pub fn lambda(j: usize) -> Self {
        let c = match j {
            1 => [rat(3, 4), rat(1, 2), rat(1, 4)],
            2 => [rat(1, 2), rat(1, 1), rat(1, 2)],
            3 => [rat(1, 4), rat(1, 2), rat(3, 4)],
            _ => panic!("A3 has fundamental weights 1..=3, got {j}"),
        };
        WeightVector { coords: c }
    }

    pub fn rho() -> Self {
        Self::from_m([1, 1, 1])
    }

    /// m₁λ₁ + m₂λ₂ + m₃λ₃.
    pub fn from_m(m: [i64; 3]) -> Self {
        let mut c = [rat(0, 1), rat(0, 1), rat(0, 1)];
        for (j, mj) in m.iter().enumerate() {
            let l = Self::lambda(j + 1);
            for k in 0..3 {
                c[k] += &l.coords[k] * rat(*mj, 1);
            }
        }
        WeightVector { coords: c }
    }
}

/// ⟨λⱼ∨, w⟩: the j-th α-coordinate of w; zero twist pairs to 0.
pub fn pairing(coweight: TwistLabel, weight: &WeightVector) -> BigRational {
    match coweight.index() {
        0 => BigRational::zero(),
        j => weight.coords[j as usize - 1].clone(),
    }
}

/// Exponent e with χ(m) = iᵉ, e = 3m₁+2m₂+m₃ mod 4.
pub fn class_index(m: [i64; 3]) -> u8 {
    (3 * m[0] + 2 * m[1] + m[2]).rem_euclid(4) as u8
}

/// Exponent of i in the twist phase.
pub fn phase_exponent(twist: TwistLabel, m: [i64; 3]) -> u8 {
    (twist.index() * class_index(m)) % 4
}

pub fn twist_phase(twist: TwistLabel, m: [i64; 3]) -> Gaussian {
    Gaussian::i_pow(phase_exponent(twist, m) as i64)
}

/// The same phase recomputed as e^{2πi⟨y, Σ mⱼλⱼ⟩} from exact pairings.
pub fn twist_phase_from_pairing(twist: TwistLabel, m: [i64; 3]) -> Gaussian {
    let x = pairing(twist, &WeightVector::from_m(m));
    // x is a multiple of 1/4; e^{2πix} = i^{4x}
    let quarter = x * rat(4, 1);
    assert!(quarter.is_integer(), "pairing not in (1/4)Z");
    let k: i64 = quarter.to_integer().try_into().expect("small pairing");
    Gaussian::i_pow(k)
}

pub fn lattice_member(lattice: LatticeLabel, m: [i64; 3]) -> bool {
    match lattice {
        LatticeLabel::P => true,
        LatticeLabel::L1 => (m[0] - m[2]).rem_euclid(2) == 0,
        LatticeLabel::Q => (m[0] + 2 * m[1] + 3 * m[2]).rem_euclid(4) == 2,
    }
}

/// (s₁..s₆) ↦ (s₃,s₂,s₁,s₅,s₄,s₆) with lam1 ↔ lam3.
pub fn tuple_symmetry<T: Clone>(t: &[T; 6], twist: TwistLabel) -> ([T; 6], TwistLabel) {
    (mirror(t), twist.conj())
}

pub fn mirror<T: Clone>(t: &[T; 6]) -> [T; 6] {
    [t[2].clone(), t[1].clone(), t[0].clone(), t[4].clone(), t[3].clone(), t[5].clone()]
}
