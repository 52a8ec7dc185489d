//! Scalar differential invariants of `u` on an Einstein background.

use std::fmt;

/// Vector fields built from `u`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VecBase {
    /// `∇Δu`
    V1,
    /// `∇|∇u|²`
    V2,
    /// `∇u`
    V3,
    /// `∇Δ²u`
    V4,
}

/// Symmetric 2-tensors that act on vectors.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Tens {
    /// `∇²u`
    H,
    /// `∇²Δu`
    T,
}

impl VecBase {
    pub fn order(self) -> u32 {
        match self {
            VecBase::V1 | VecBase::V2 => 3,
            VecBase::V3 => 1,
            VecBase::V4 => 5,
        }
    }

    pub fn u_degree(self) -> u32 {
        match self {
            VecBase::V2 => 2,
            _ => 1,
        }
    }

    pub fn notation(self) -> &'static str {
        match self {
            VecBase::V1 => "∇Δu",
            VecBase::V2 => "∇|∇u|²",
            VecBase::V3 => "∇u",
            VecBase::V4 => "∇Δ²u",
        }
    }
}

impl Tens {
    pub fn order(self) -> u32 {
        match self {
            Tens::H => 2,
            Tens::T => 4,
        }
    }

    pub fn notation(self) -> &'static str {
        match self {
            Tens::H => "∇²u",
            Tens::T => "∇²Δu",
        }
    }
}

/// A polynomial variable of the jet algebra.
///
/// `G(1)..=G(12)` form the closed core, `G(13)..=G(15)` are aliases that
/// the rewrite rules eliminate, `U` is `u` itself (general case only) and the
/// last two variants are minted on demand when a contraction falls outside
/// the fixed tables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gen {
    /// Scalar curvature of the background.
    R,
    G(u8),
    U,
    /// `⟨left, M₁⋯M_k right⟩`, stored in a canonical orientation.
    Pairing { left: VecBase, mids: Vec<Tens>, right: VecBase },
    /// `|∇²Δu|²`
    HessLapSq,
}

pub const CORE_COUNT: u8 = 12;
pub const G13: u8 = 13;
pub const G14: u8 = 14;
pub const G15: u8 = 15;

impl Gen {
    pub fn g(i: u8) -> Gen {
        assert!((1..=15).contains(&i), "no generator g{i}");
        Gen::G(i)
    }

    /// Number of derivatives, with the curvature counting two.
    pub fn order(&self) -> u32 {
        match self {
            Gen::R => 2,
            Gen::U => 0,
            Gen::G(i) => match i {
                1 | 2 => 2,
                3 | 4 | 5 | 9 | 13 => 4,
                _ => 6,
            },
            Gen::Pairing { left, mids, right } => {
                left.order() + right.order() + mids.iter().map(|m| m.order()).sum::<u32>()
            }
            Gen::HessLapSq => 8,
        }
    }

    /// Degree of homogeneity under `u ↦ λu`.
    pub fn u_degree(&self) -> u32 {
        match self {
            Gen::R => 0,
            Gen::U => 1,
            Gen::G(i) => match i {
                1 | 9 => 1,
                4 | 6 | 12 => 3,
                8 => 4,
                _ => 2,
            },
            Gen::Pairing { left, mids, right } => left.u_degree() + right.u_degree() + mids.len() as u32,
            Gen::HessLapSq => 2,
        }
    }

    pub fn is_alias(&self) -> bool {
        matches!(self, Gen::G(i) if *i > CORE_COUNT)
    }

    pub fn is_minted(&self) -> bool {
        matches!(self, Gen::Pairing { .. } | Gen::HessLapSq)
    }

    /// Parses the short names used in transcriptions: `R`, `u`, `g1`…`g15`.
    pub fn from_name(name: &str) -> Option<Gen> {
        match name {
            "R" => Some(Gen::R),
            "u" => Some(Gen::U),
            _ => {
                let i: u8 = name.strip_prefix('g')?.parse().ok()?;
                (1..=15).contains(&i).then_some(Gen::G(i))
            }
        }
    }

    /// Rendering in the usual notation of Riemannian geometry.
    pub fn notation(&self) -> String {
        let s = match self {
            Gen::R => "Scal",
            Gen::U => "u",
            Gen::G(i) => match i {
                1 => "Δu",
                2 => "|∇u|²",
                3 => "|∇²u|²",
                4 => "(∇|∇u|²,∇u)",
                5 => "(∇Δu,∇u)",
                6 => "(∇Δu,∇|∇u|²)",
                7 => "|∇Δu|²",
                8 => "|∇|∇u|²|²",
                9 => "Δ²u",
                10 => "(∇Δ²u,∇u)",
                11 => "(∇²Δu,∇²u)",
                12 => "(∇²Δu,∇u⊗∇u)",
                13 => "Δ|∇u|²",
                14 => "(Δ̄dΔu,du)",
                15 => "(Δ̄du,dΔu)",
                _ => unreachable!(),
            },
            Gen::Pairing { left, mids, right } => {
                let chain: Vec<&str> = mids.iter().map(|m| m.notation()).collect();
                return format!("({},{}·{})", left.notation(), chain.join("·"), right.notation());
            }
            Gen::HessLapSq => "|∇²Δu|²",
        };
        s.to_string()
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::R => write!(f, "R"),
            Gen::U => write!(f, "u"),
            Gen::G(i) => write!(f, "g{i}"),
            other => write!(f, "{}", other.notation()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for i in 1..=15 {
            let g = Gen::from_name(&format!("g{i}")).unwrap();
            assert_eq!(g.to_string(), format!("g{i}"));
        }
        assert_eq!(Gen::from_name("g16"), None);
        assert_eq!(Gen::from_name("R"), Some(Gen::R));
    }

    #[test]
    fn aliases_match_their_rewrites_in_order() {
        // g13 -> g5, g3, R g2 (order 4); g14 -> g10, R g5 (order 6)
        assert_eq!(Gen::g(13).order(), Gen::g(5).order());
        assert_eq!(Gen::g(14).order(), Gen::g(10).order());
        assert_eq!(Gen::g(15).order(), Gen::g(7).order());
        assert_eq!(Gen::g(13).u_degree(), Gen::g(3).u_degree());
    }
}
