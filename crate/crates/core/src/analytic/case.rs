use crate::exact::Prime;

/// Residue class of `p` modulo 3, which selects the form of the expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `p ≡ 1 (mod 3)`: 1-periodic `ψ_j`, logarithmic term, `N`-dependent `f_0`.
    OneModThree,
    /// `p ≡ −1 (mod 3)`: 2-periodic `ψ_j`, constant `f_0`.
    MinusOneModThree,
    /// `p = 3`: only the main term and `Φ`.
    Three,
}

impl CaseTag {
    pub fn of(p: Prime) -> Self {
        match p.get() % 3 {
            0 => CaseTag::Three,
            1 => CaseTag::OneModThree,
            _ => CaseTag::MinusOneModThree,
        }
    }

    /// `u ∈ {±1}` with `p ≡ u (mod 3)`; undefined for `p = 3`.
    pub fn u(self) -> Option<i8> {
        match self {
            CaseTag::OneModThree => Some(1),
            CaseTag::MinusOneModThree => Some(-1),
            CaseTag::Three => None,
        }
    }

    /// Period of the `ψ_j` functions.
    pub fn psi_period(self) -> Option<f64> {
        match self {
            CaseTag::OneModThree => Some(1.0),
            CaseTag::MinusOneModThree => Some(2.0),
            CaseTag::Three => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CaseTag::OneModThree => "p=1mod3",
            CaseTag::MinusOneModThree => "p=-1mod3",
            CaseTag::Three => "p=3",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification() {
        let tag = |v| CaseTag::of(Prime::new(v).unwrap());
        assert_eq!(tag(3), CaseTag::Three);
        assert_eq!(tag(7), CaseTag::OneModThree);
        assert_eq!(tag(13), CaseTag::OneModThree);
        assert_eq!(tag(2), CaseTag::MinusOneModThree);
        assert_eq!(tag(11), CaseTag::MinusOneModThree);
        assert_eq!(tag(7).u(), Some(1));
        assert_eq!(tag(5).u(), Some(-1));
        assert_eq!(tag(3).u(), None);
    }
}
