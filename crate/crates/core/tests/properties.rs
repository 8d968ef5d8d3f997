//! Randomized and exhaustive invariants of the word algebra.

use proptest::prelude::*;

use mzv_core::derivations::{cyclic_c, cyclic_c_bar, Derivation};
use mzv_core::parse::{parse_poly, parse_word};
use mzv_core::products::{harmonic, harmonic_words, shuffle, shuffle_words};
use mzv_core::qsym::{
    act, act_word, coproduct, exp_partial_t, sigma_t, sigma_t_exp, sigma_t_inverse,
};
use mzv_core::{Coeff, Letter, Poly, TruncatedSeries, Word};

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..=max).prop_map(|bits| {
        Word::from_letters(
            bits.into_iter()
                .map(|b| if b { Letter::Y } else { Letter::X })
                .collect(),
        )
    })
}

fn h1_word(max: usize) -> impl Strategy<Value = Word> {
    word(max).prop_map(|w| if w.in_h1() { w } else { w.concat(&Word::y()) })
}

fn poly(max: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((word(max), -5i64..=5, 1i64..=4), 0..4).prop_map(|terms| {
        let mut p = Poly::zero();
        for (w, n, d) in terms {
            p.add_term(w, Coeff::new(n.into(), d.into()));
        }
        p
    })
}

fn pw(w: &Word) -> Poly {
    Poly::from(w.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn tau_is_an_involutive_anti_automorphism(u in word(8), v in word(8)) {
        prop_assert_eq!(u.tau().tau(), u.clone());
        prop_assert_eq!(u.concat(&v).tau(), v.tau().concat(&u.tau()));
        prop_assert_eq!(u.tau().weight(), u.weight());
        prop_assert_eq!(u.tau().length(), u.colength());
    }

    #[test]
    fn tau_preserves_admissibility(u in word(9)) {
        prop_assert_eq!(u.tau().in_h0(), u.in_h0());
    }

    #[test]
    fn products_commute(u in word(5), v in word(5)) {
        prop_assert_eq!(shuffle_words(&u, &v), shuffle_words(&v, &u));
        prop_assert_eq!(harmonic_words(&u, &v), harmonic_words(&v, &u));
    }

    #[test]
    fn products_associate(u in word(3), v in word(3), w in word(3)) {
        let (u, v, w) = (pw(&u), pw(&v), pw(&w));
        prop_assert_eq!(shuffle(&shuffle(&u, &v), &w), shuffle(&u, &shuffle(&v, &w)));
        prop_assert_eq!(harmonic(&harmonic(&u, &v), &w), harmonic(&u, &harmonic(&v, &w)));
    }

    #[test]
    fn products_are_graded(u in word(5), v in word(5)) {
        let wt = u.weight() + v.weight();
        for p in [shuffle_words(&u, &v), harmonic_words(&u, &v)] {
            prop_assert!(p.is_zero() || p.weight() == Some(wt));
        }
        prop_assert!(shuffle_words(&u, &v).words().all(|w| w.length() == u.length() + v.length()));
    }

    #[test]
    fn admissible_words_close_under_products(u in h1_word(5), v in h1_word(5)) {
        let u = if u.in_h0() { u } else { Word::x().concat(&u) };
        let v = if v.in_h0() { v } else { Word::x().concat(&v) };
        prop_assert!(shuffle_words(&u, &v).in_h0());
        prop_assert!(harmonic_words(&u, &v).in_h0());
    }

    #[test]
    fn derivations_obey_leibniz(u in word(4), v in word(4), n in 1usize..=3) {
        for d in [Derivation::d(), Derivation::d_n(n).unwrap(), Derivation::ihara_kaneko(n).unwrap()] {
            let lhs = d.apply_word(&u.concat(&v));
            let rhs = &d.apply_word(&u) * &pw(&v) + &pw(&u) * &d.apply_word(&v);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn conjugate_is_tau_sandwich(u in word(6)) {
        let d = Derivation::d();
        prop_assert_eq!(d.conjugate().apply_word(&u), d.apply_word(&u.tau()).tau());
    }

    #[test]
    fn cyclic_c_is_a_trace(f in word(4), g in word(4)) {
        prop_assert_eq!(cyclic_c(&f.concat(&g)), cyclic_c(&g.concat(&f)));
        prop_assert_eq!(cyclic_c_bar(&f.concat(&g)), cyclic_c_bar(&g.concat(&f)));
        prop_assert_eq!(cyclic_c_bar(&f), cyclic_c(&f.tau()).tau());
    }

    #[test]
    fn action_is_bilinear(a in h1_word(3), b in h1_word(3), w in poly(4), s in -3i64..=3) {
        let s = Coeff::from_integer(s.into());
        let u = &pw(&a) + &pw(&b).scale(&s);
        let lhs = act(&u, &w).unwrap();
        let rhs = act(&pw(&a), &w).unwrap() + act(&pw(&b), &w).unwrap().scale(&s);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_is_multiplicative(u in h1_word(4), w1 in word(3), w2 in word(3)) {
        // u . (w1 w2) = sum over the coproduct of (u' . w1)(u'' . w2)
        let lhs = act_word(&u, &w1.concat(&w2)).unwrap();
        let mut rhs = Poly::zero();
        for ((a, b), c) in coproduct(&u).unwrap().terms() {
            let left = act_word(a, &w1).unwrap();
            let right = act_word(b, &w2).unwrap();
            rhs += &(&left * &right).scale(c);
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_parse_round_trip(p in poly(6)) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&json).unwrap(), p);
    }

    #[test]
    fn word_round_trips(w in h1_word(8)) {
        prop_assert_eq!(parse_word(&w.to_string()).unwrap(), w.clone());
        let c = w.to_composition().unwrap();
        prop_assert_eq!(c.to_word(), w.clone());
        prop_assert_eq!(parse_word(&c.to_string()).unwrap(), w);
    }

    #[test]
    fn sigma_inverse_round_trip(w in word(4)) {
        let s = sigma_t(&pw(&w), 4);
        let mut back = TruncatedSeries::zero(4);
        for (k, c) in s.coeffs().iter().enumerate() {
            let inv = sigma_t_inverse(c, 4 - k);
            for (j, d) in inv.coeffs().iter().enumerate() {
                back.add_to_coeff(k + j, d);
            }
        }
        prop_assert_eq!(back, TruncatedSeries::constant(pw(&w), 4));
    }
}

#[test]
fn coproduct_is_coassociative() {
    for n in 0..=8 {
        for w in Word::h1_of_weight(n) {
            // (D x 1) D and (1 x D) D both split w into three consecutive z-blocks.
            let mut left = Vec::new();
            for ((a, b), _) in coproduct(&w).unwrap().terms() {
                for ((a1, a2), _) in coproduct(a).unwrap().terms() {
                    left.push((a1.clone(), a2.clone(), b.clone()));
                }
            }
            let mut right = Vec::new();
            for ((a, b), _) in coproduct(&w).unwrap().terms() {
                for ((b1, b2), _) in coproduct(b).unwrap().terms() {
                    right.push((a.clone(), b1.clone(), b2.clone()));
                }
            }
            left.sort();
            right.sort();
            assert_eq!(left, right, "{w}");
        }
    }
}

#[test]
fn sigma_forms_agree() {
    let mut inputs = vec![Word::x(), Word::y()];
    inputs.extend(Word::all_up_to_weight(5));
    for w in inputs {
        assert_eq!(sigma_t(&pw(&w), 6), sigma_t_exp(&pw(&w), 6), "{w}");
    }
}

#[test]
fn exp_partial_is_multiplicative() {
    let words = Word::all_up_to_weight(5);
    for u in &words {
        for v in words.iter().filter(|v| u.weight() + v.weight() <= 5) {
            let lhs = exp_partial_t(&pw(&u.concat(v)), 5);
            let rhs = exp_partial_t(&pw(u), 5).mul(&exp_partial_t(&pw(v), 5));
            assert_eq!(lhs, rhs, "{u} {v}");
        }
    }
}

/// With `mu = (x + t y)^(n-1) - x^(n-1) - t^(n-1) y^(n-1)` and `t` counting
/// the letters `y`: `C(mu) = (n-1)(t x (x + t y)^(n-2) y - t^(n-1) x y^(n-1))`
/// and `C-bar(mu) = (n-1)(x (x + t y)^(n-2) y - x^(n-1) y)`.
#[test]
fn cyclic_derivations_on_binomial_powers() {
    for n in 2..=7usize {
        let order = n;
        let constant = |w: Word| TruncatedSeries::constant(pw(&w), order);
        let monomial = |k: usize, w: Word| {
            let mut s = TruncatedSeries::zero(order);
            s.add_to_coeff(k, &pw(&w));
            s
        };
        let base = constant(Word::x()).add(&monomial(1, Word::y()));
        let power = |k: usize| {
            (0..k).fold(TruncatedSeries::constant(Poly::one(), order), |acc, _| {
                acc.mul(&base)
            })
        };
        let full = power(n - 1);
        let mu = full
            .sub(&constant(Word::x_pow(n - 1)))
            .sub(&monomial(n - 1, Word::y_pow(n - 1)));
        let scale = Coeff::from_integer((n as i64 - 1).into());
        let inner = constant(Word::x())
            .mul(&power(n - 2))
            .mul(&constant(Word::y()));
        let t_inner = monomial(1, Word::empty()).mul(&inner);

        assert_eq!(
            full.map(|p| p.map_words(cyclic_c)),
            t_inner.scale(&scale),
            "C at n = {n}"
        );
        assert_eq!(
            full.map(|p| p.map_words(cyclic_c_bar)),
            inner.scale(&scale),
            "C-bar at n = {n}"
        );

        let c_mu = t_inner.sub(&monomial(n - 1, Word::x().concat(&Word::y_pow(n - 1))));
        assert_eq!(
            mu.map(|p| p.map_words(cyclic_c)),
            c_mu.scale(&scale),
            "C(mu) at n = {n}"
        );
        let cbar_mu = inner.sub(&constant(Word::x_pow(n - 1).concat(&Word::y())));
        assert_eq!(
            mu.map(|p| p.map_words(cyclic_c_bar)),
            cbar_mu.scale(&scale),
            "C-bar(mu) at n = {n}"
        );
    }
}
