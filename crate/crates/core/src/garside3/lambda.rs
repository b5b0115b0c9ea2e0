//! Conjugating a normal form into one of five families of summit
//! representatives.
//!
//! | family | shape |
//! |--------|-------|
//! | `Lambda1` | `Delta^p` |
//! | `Lambda2` | `Delta^p s1^k`, `k >= 1` |
//! | `Lambda3` | `Delta^{2u} s1 s2` |
//! | `Lambda4` | `Delta^{2u} s1^{k1} s2^{k2} ... s2^{k_{2t}}`, all `k >= 2` |
//! | `Lambda5` | `Delta^{2u+1} s1^{k1} s2^{k2} ... s1^{k_{2t+1}}`, all `k >= 2` |
//!
//! Each reduction step is a conjugation `x b x^-1` by a short word `x` and
//! drops the tail length by three. The conjugator handed back satisfies
//! `c^-1 b c = rep`, so it is the inverse of the product of the `x`s.

use std::collections::VecDeque;

use super::{normal_form, NormalForm3};
use crate::braidword::{BraidWord, Letter};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LambdaClass {
    Lambda1 { p: i64 },
    Lambda2 { p: i64, k: u64 },
    Lambda3 { u: i64 },
    Lambda4 { u: i64, exponents: Vec<u64> },
    Lambda5 { u: i64, exponents: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaRep {
    pub class: LambdaClass,
    pub rep: NormalForm3,
    /// `c` with `c^-1 * input * c == rep`.
    pub conjugator: BraidWord,
}

struct Work {
    p: i64,
    first: u8,
    ks: VecDeque<u64>,
    n: u64,
    conj: Vec<Letter>,
}

impl Work {
    // record the step b -> x b x^-1
    fn conjugate_by(&mut self, x: &[u32]) {
        self.conj.extend(x.iter().rev().map(|&g| Letter::neg(g)));
    }

    fn sigma(&self, i: usize) -> u32 {
        if i % 2 == 1 {
            1
        } else {
            2
        }
    }

    fn replace(&mut self, nf: NormalForm3) {
        self.p = nf.p();
        self.first = nf.first_gen();
        self.n = nf.tail_length();
        self.ks = nf.exponents().iter().copied().collect();
    }

    fn finish(self, class: LambdaClass) -> LambdaRep {
        let rep = NormalForm3::new(self.p, self.first, self.ks.into_iter().collect())
            .expect("reduction keeps the normal form shape");
        LambdaRep { class, rep, conjugator: BraidWord::new(3, self.conj).expect("3-strand letters") }
    }
}

pub fn conjugate_to_lambda(nf: &NormalForm3) -> LambdaRep {
    let mut w = Work {
        p: nf.p(),
        first: nf.first_gen(),
        ks: nf.exponents().iter().copied().collect(),
        n: nf.tail_length(),
        conj: Vec::new(),
    };
    loop {
        if w.first == 2 {
            w.conjugate_by(&[1, 2, 1]);
            w.first = 1;
        }
        let m = w.ks.len();
        let p = w.p;
        match w.n {
            0 => return w.finish(LambdaClass::Lambda1 { p }),
            1 => return w.finish(LambdaClass::Lambda2 { p, k: 1 }),
            2 if m == 1 => return w.finish(LambdaClass::Lambda2 { p, k: 2 }),
            2 if p % 2 == 0 => return w.finish(LambdaClass::Lambda3 { u: p / 2 }),
            2 => {
                // Delta^p s1 s2 with p odd: s2 Delta^p = Delta^p s1
                w.conjugate_by(&[2]);
                w.ks = VecDeque::from([2]);
                return w.finish(LambdaClass::Lambda2 { p, k: 2 });
            }
            _ => {}
        }
        if m == 1 {
            let k = w.ks[0];
            return w.finish(LambdaClass::Lambda2 { p, k });
        }
        let k1 = w.ks[0];
        let km = w.ks[m - 1];
        if (m as i64 - p).rem_euclid(2) == 1 {
            // the last syllable commutes past Delta^p onto the first one
            let g = w.sigma(m);
            w.conjugate_by(&vec![g; km as usize]);
            w.ks.pop_back();
            w.ks[0] += km;
            return terminal(w);
        }
        if k1 > 1 && km > 1 {
            return terminal(w);
        }
        let x: Vec<u32> = if k1 == 1 { vec![w.sigma(m)] } else { vec![w.sigma(m - 1), w.sigma(m)] };
        let before = w.n;
        if m == 2 {
            // the two ends overlap, so let the automaton do the bookkeeping
            let beta = NormalForm3::new(p, 1, w.ks.iter().copied().collect()).unwrap().to_word();
            let xw = BraidWord::new(3, x.iter().map(|&g| Letter::pos(g)).collect()).unwrap();
            let next = normal_form(&xw.concat(&beta).concat(&xw.inverse())).unwrap();
            w.replace(next);
        } else if k1 == 1 {
            w.ks.pop_front();
            w.ks[0] -= 1;
            if km == 1 {
                w.ks.pop_back();
            } else {
                *w.ks.back_mut().unwrap() -= 1;
            }
            w.p += 1;
            w.first = 2;
            w.n -= 3;
        } else {
            w.ks[0] -= 1;
            w.ks.pop_back();
            *w.ks.back_mut().unwrap() -= 1;
            w.p += 1;
            w.n -= 3;
        }
        assert_eq!(w.n + 3, before, "conjugation step must shorten the tail by three");
        w.conjugate_by(&x);
    }
}

fn terminal(w: Work) -> LambdaRep {
    let p = w.p;
    let exponents: Vec<u64> = w.ks.iter().copied().collect();
    let class = if exponents.len() == 1 {
        LambdaClass::Lambda2 { p, k: exponents[0] }
    } else if p % 2 == 0 {
        LambdaClass::Lambda4 { u: p / 2, exponents }
    } else {
        LambdaClass::Lambda5 { u: (p - 1).div_euclid(2), exponents }
    };
    w.finish(class)
}

/// Infimum of the summit set, read off the family representative.
pub fn summit_infimum(nf: &NormalForm3) -> i64 {
    conjugate_to_lambda(nf).rep.p()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lam(s: &str) -> LambdaRep {
        conjugate_to_lambda(&normal_form(&BraidWord::parse(s, 3).unwrap()).unwrap())
    }

    fn check(input: &str, r: &LambdaRep) {
        let w = BraidWord::parse(input, 3).unwrap();
        let c = &r.conjugator;
        let moved = c.inverse().concat(&w).concat(c);
        assert_eq!(normal_form(&moved).unwrap(), r.rep, "input {input}");
    }

    #[test]
    fn small_cases() {
        let r = lam("D a b");
        assert_eq!(r.class, LambdaClass::Lambda2 { p: 1, k: 2 });
        assert_eq!(r.rep.render(), "(1; 2; first=1)");
        assert_eq!(r.conjugator.render(), "s2^-1");
        check("D a b", &r);

        let r = lam("a b b");
        assert_eq!(r.class, LambdaClass::Lambda1 { p: 1 });
        check("a b b", &r);

        let r = lam("a a b b a a b b");
        assert_eq!(r.class, LambdaClass::Lambda4 { u: 0, exponents: vec![2, 2, 2, 2] });

        let r = lam("b b b a a");
        assert_eq!(r.rep.render(), "(0; 3,2; first=1)");
        check("b b b a a", &r);
    }

    #[test]
    fn summit_infimum_of_negative_words() {
        assert_eq!(summit_infimum(&normal_form(&BraidWord::parse("A", 3).unwrap()).unwrap()), -1);
        // exponent sum 0 and not trivial
        assert_eq!(summit_infimum(&normal_form(&BraidWord::parse("A b", 3).unwrap()).unwrap()), -1);
        assert_eq!(summit_infimum(&normal_form(&BraidWord::parse("A b a a", 3).unwrap()).unwrap()), 0);
    }

    fn arb_word(max: usize, positive_bias: u32) -> impl Strategy<Value = BraidWord> {
        prop::collection::vec((1u32..3, 0u32..10), 0..max).prop_map(move |v| {
            let letters = v
                .into_iter()
                .map(|(g, r)| Letter { gen: g, inverse: r >= positive_bias })
                .collect();
            BraidWord::new(3, letters).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugator_conjugates(w in arb_word(40, 7)) {
            let r = conjugate_to_lambda(&normal_form(&w).unwrap());
            let moved = r.conjugator.inverse().concat(&w).concat(&r.conjugator);
            prop_assert_eq!(normal_form(&moved).unwrap(), r.rep);
        }

        #[test]
        fn summit_infimum_is_conjugation_invariant(w in arb_word(30, 8), c in arb_word(8, 5)) {
            let a = summit_infimum(&normal_form(&w).unwrap());
            let moved = c.inverse().concat(&w).concat(&c);
            prop_assert_eq!(summit_infimum(&normal_form(&moved).unwrap()), a);
        }

        #[test]
        fn summit_infimum_bounds_the_infimum(w in arb_word(40, 6)) {
            let nf = normal_form(&w).unwrap();
            prop_assert!(summit_infimum(&nf) >= nf.p());
        }
    }
}
