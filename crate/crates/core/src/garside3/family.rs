use std::fmt;

use super::lambda::{conjugate_to_lambda, LambdaClass, LambdaRep};
use super::{GarsideError, NormalForm3};

/// The six closures whose homology is known outright.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NMember {
    Trivial,
    S1,
    S1Sq,
    S1S2,
    S1SqS2Sq,
    Delta,
}

impl NMember {
    pub const ALL: [NMember; 6] =
        [NMember::Trivial, NMember::S1, NMember::S1Sq, NMember::S1S2, NMember::S1SqS2Sq, NMember::Delta];

    pub fn word(self) -> &'static str {
        match self {
            NMember::Trivial => "",
            NMember::S1 => "s1",
            NMember::S1Sq => "s1^2",
            NMember::S1S2 => "s1 s2",
            NMember::S1SqS2Sq => "s1^2 s2^2",
            NMember::Delta => "s1 s2 s1",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    N(NMember),
    /// `s1^k`, `k >= 3`
    C1 { k: u64 },
    /// `s1^k s2^2`, `k >= 3`
    C2 { k: u64 },
    /// `s1^k1 s2^k2`, `k1 >= k2 >= 3`
    C3 { k1: u64, k2: u64 },
    /// summit infimum positive, not `Delta`
    C4a,
    /// summit infimum zero, at least four syllables
    C4b,
}

impl FamilyTag {
    pub fn is_n(self) -> bool {
        matches!(self, FamilyTag::N(_))
    }

    pub fn block_label(self) -> Option<char> {
        match self {
            FamilyTag::N(_) => None,
            FamilyTag::C1 { .. } => Some('W'),
            FamilyTag::C2 { .. } => Some('X'),
            FamilyTag::C3 { .. } => Some('Y'),
            FamilyTag::C4a | FamilyTag::C4b => Some('Z'),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::N(m) => {
                let name = match m {
                    NMember::Trivial => "1",
                    NMember::S1 => "s1",
                    NMember::S1Sq => "s1^2",
                    NMember::S1S2 => "s1 s2",
                    NMember::S1SqS2Sq => "s1^2 s2^2",
                    NMember::Delta => "D",
                };
                write!(f, "N({name})")
            }
            FamilyTag::C1 { k } => write!(f, "C1({k})"),
            FamilyTag::C2 { k } => write!(f, "C2({k})"),
            FamilyTag::C3 { k1, k2 } => write!(f, "C3({k1},{k2})"),
            FamilyTag::C4a => f.write_str("C4a"),
            FamilyTag::C4b => f.write_str("C4b"),
        }
    }
}

pub fn classify_family(nf: &NormalForm3) -> Result<FamilyTag, GarsideError> {
    classify_rep(&conjugate_to_lambda(nf))
}

pub(crate) fn classify_rep(r: &LambdaRep) -> Result<FamilyTag, GarsideError> {
    let p = r.rep.p();
    if p < 0 {
        return Err(GarsideError::NotPositive { summit_infimum: p });
    }
    if p > 0 {
        return Ok(if r.class == (LambdaClass::Lambda1 { p: 1 }) {
            FamilyTag::N(NMember::Delta)
        } else {
            FamilyTag::C4a
        });
    }
    Ok(match &r.class {
        LambdaClass::Lambda1 { .. } => FamilyTag::N(NMember::Trivial),
        LambdaClass::Lambda2 { k: 1, .. } => FamilyTag::N(NMember::S1),
        LambdaClass::Lambda2 { k: 2, .. } => FamilyTag::N(NMember::S1Sq),
        &LambdaClass::Lambda2 { k, .. } => FamilyTag::C1 { k },
        LambdaClass::Lambda3 { .. } => FamilyTag::N(NMember::S1S2),
        LambdaClass::Lambda4 { exponents, .. } if exponents.len() == 2 => {
            // s1^a s2^b is conjugate to s1^b s2^a
            let hi = exponents[0].max(exponents[1]);
            let lo = exponents[0].min(exponents[1]);
            match (hi, lo) {
                (2, 2) => FamilyTag::N(NMember::S1SqS2Sq),
                (k, 2) => FamilyTag::C2 { k },
                (k1, k2) => FamilyTag::C3 { k1, k2 },
            }
        }
        LambdaClass::Lambda4 { .. } => FamilyTag::C4b,
        LambdaClass::Lambda5 { .. } => unreachable!("odd Delta power with summit infimum 0"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braidword::{BraidWord, Letter};
    use crate::garside3::normal_form;
    use proptest::prelude::*;

    fn tag(s: &str) -> Result<FamilyTag, GarsideError> {
        classify_family(&normal_form(&BraidWord::parse(s, 3).unwrap()).unwrap())
    }

    #[test]
    fn known_tags() {
        assert_eq!(tag("").unwrap(), FamilyTag::N(NMember::Trivial));
        assert_eq!(tag("b").unwrap(), FamilyTag::N(NMember::S1));
        assert_eq!(tag("a b b").unwrap(), FamilyTag::N(NMember::Delta));
        assert_eq!(tag("b a").unwrap(), FamilyTag::N(NMember::S1S2));
        assert_eq!(tag("b b a a").unwrap(), FamilyTag::N(NMember::S1SqS2Sq));
        assert_eq!(tag("s1^5").unwrap(), FamilyTag::C1 { k: 5 });
        assert_eq!(tag("s1^2 s2^4").unwrap(), FamilyTag::C2 { k: 4 });
        assert_eq!(tag("s1^3 s2^4").unwrap(), FamilyTag::C3 { k1: 4, k2: 3 });
        assert_eq!(tag("s1^2 s2^2 s1^2 s2^2").unwrap(), FamilyTag::C4b);
        assert_eq!(tag("D a").unwrap(), FamilyTag::C4a);
        assert_eq!(tag("D D").unwrap(), FamilyTag::C4a);
        assert_eq!(tag("A"), Err(GarsideError::NotPositive { summit_infimum: -1 }));
        // s1 s2^-1 has summit infimum -1
        assert!(tag("a B").is_err());
    }

    fn arb_positive(max: usize) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec(1u32..3, 0..max)
            .prop_map(|v| BraidWord::new(3, v.into_iter().map(Letter::pos).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn tag_is_conjugation_invariant(w in arb_positive(20), cut in 0usize..21, flip in any::<bool>()) {
            let t = classify_family(&normal_form(&w).unwrap()).unwrap();
            // cyclic shift, optionally followed by the Delta swap s1 <-> s2
            let cut = cut.min(w.word_length());
            let mut letters: Vec<Letter> = w.letters()[cut..].iter().chain(&w.letters()[..cut]).copied().collect();
            if flip {
                for l in &mut letters {
                    l.gen = 3 - l.gen;
                }
            }
            let v = BraidWord::new(3, letters).unwrap();
            prop_assert_eq!(classify_family(&normal_form(&v).unwrap()).unwrap(), t);
        }
    }
}
