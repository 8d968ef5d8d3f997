//! `H1` viewed as the Hopf algebra of quasi-symmetric functions, and its
//! action on `Q<x,y>`.
//!
//! The coproduct is deconcatenation in the `z`-letters. An `H1` word `u`
//! acts on a word `w` by `1 . w = w`, `u . x = 0`, `z_k . y = x^k y`
//! (other nonempty `u` kill `y`) and `u . (w1 w2) = sum (u' . w1)(u'' . w2)`.
//! Peeling one letter of `w` at a time, `u . w` is the sum over order
//! preserving placements of the `z`-letters of `u` onto distinct `y`s of `w`,
//! where `z_k` landing on a `y` turns it into `x^k y`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::derivations::Derivation;
use crate::error::{Error, Result};
use crate::poly::{Coeff, Poly, TensorPoly};
use crate::series::TruncatedSeries;
use crate::word::{Composition, Letter, Word};

/// Deconcatenation `Delta(z_{i1} ... z_{ik}) = sum_j z_{i1}..z_{ij} (x) z_{i(j+1)}..z_{ik}`.
pub fn coproduct(w: &Word) -> Result<TensorPoly> {
    if !w.in_h1() {
        return Err(Error::NotInH1(w.clone()));
    }
    let mut cuts = vec![0];
    cuts.extend(
        w.letters()
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == Letter::Y)
            .map(|(i, _)| i + 1),
    );
    let mut out = TensorPoly::zero();
    for cut in cuts {
        out.add_term(w.slice(0..cut), w.slice(cut..w.weight()), Coeff::one());
    }
    Ok(out)
}

struct Action<'a> {
    parts: &'a [u32],
    target: &'a [Letter],
    ys_after: Vec<usize>,
    memo: HashMap<(usize, usize), Poly>,
}

impl Action<'_> {
    /// `(z_{parts[i..]}) . target[j..]`
    fn run(&mut self, i: usize, j: usize) -> Poly {
        let remaining = self.parts.len() - i;
        if j == self.target.len() {
            return if remaining == 0 {
                Poly::one()
            } else {
                Poly::zero()
            };
        }
        if remaining > self.ys_after[j] {
            return Poly::zero();
        }
        if let Some(p) = self.memo.get(&(i, j)) {
            return p.clone();
        }
        let letter = self.target[j];
        let mut out = self
            .run(i, j + 1)
            .map_words(|w| Poly::from(Word::from_letters(vec![letter]).concat(w)));
        if letter == Letter::Y && remaining > 0 {
            // z_k on y gives x^k y = z_(k+1)
            let head = Word::z(self.parts[i] as usize + 1).expect("positive");
            out += &self
                .run(i + 1, j + 1)
                .map_words(|w| Poly::from(head.concat(w)));
        }
        self.memo.insert((i, j), out.clone());
        out
    }
}

/// `u . w` for an `H1` word `u`.
pub fn act_word(u: &Word, w: &Word) -> Result<Poly> {
    let comp = u.to_composition()?;
    let target = w.letters();
    let mut ys_after = vec![0; target.len() + 1];
    for j in (0..target.len()).rev() {
        ys_after[j] = ys_after[j + 1] + usize::from(target[j] == Letter::Y);
    }
    let mut action = Action {
        parts: comp.parts(),
        target,
        ys_after,
        memo: HashMap::new(),
    };
    Ok(action.run(0, 0))
}

/// Bilinear extension of [`act_word`].
pub fn act(u: &Poly, w: &Poly) -> Result<Poly> {
    let mut out = Poly::zero();
    for (a, ca) in u.terms() {
        for (b, cb) in w.terms() {
            out.add_scaled(&act_word(a, b)?, &(ca * cb));
        }
    }
    Ok(out)
}

/// Power sum `p_n = z_n`, `n >= 1`.
pub fn power_p(n: usize) -> Result<Poly> {
    Word::z(n).map(Poly::from)
}

/// Elementary `e_n = z_1^n = y^n`.
pub fn elementary_e(n: usize) -> Poly {
    Poly::from(Word::y_pow(n))
}

/// Complete `h_n`: the sum of the `z`-monomials of all compositions of `n`.
pub fn complete_h(n: usize) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    Composition::all_of_weight(n as u32)
        .into_iter()
        .map(|c| (c.to_word(), Coeff::one()))
        .collect()
}

fn act_h(k: usize, p: &Poly) -> Poly {
    act(&complete_h(k), p).expect("h_k lies in H1")
}

fn act_e(k: usize, p: &Poly) -> Poly {
    act(&elementary_e(k), p).expect("e_k lies in H1")
}

/// `H(t) . s` for a series `s`.
fn h_series_action(s: &TruncatedSeries) -> TruncatedSeries {
    let n = s.order();
    let mut out = TruncatedSeries::zero(n);
    for (j, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for k in 0..=n - j {
            out.add_to_coeff(j + k, &act_h(k, c));
        }
    }
    out
}

/// `E(-t) . s`, the inverse of `H(t) . s`.
fn e_neg_series_action(s: &TruncatedSeries) -> TruncatedSeries {
    let n = s.order();
    let mut out = TruncatedSeries::zero(n);
    for (j, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for k in 0..=n - j {
            let term = act_e(k, c);
            let term = if k % 2 == 1 { -term } else { term };
            out.add_to_coeff(j + k, &term);
        }
    }
    out
}

/// `sigma_t(w) = H(t) . w`; the coefficient of `t^k` is `h_k . w`.
pub fn sigma_t(w: &Poly, order: usize) -> TruncatedSeries {
    h_series_action(&TruncatedSeries::constant(w.clone(), order))
}

/// `sigma_t^-1(w) = E(-t) . w`.
pub fn sigma_t_inverse(w: &Poly, order: usize) -> TruncatedSeries {
    e_neg_series_action(&TruncatedSeries::constant(w.clone(), order))
}

/// `exp(delta)(w)` for `delta = sum_n t^n c_n d_n`, with `(n, c_n, d_n)`
/// given for `n >= 1`. Every application of `delta` raises the `t`-degree,
/// so at most `order` applications contribute.
pub fn exp_of_derivation_series(
    parts: &[(usize, Coeff, Derivation)],
    w: &Poly,
    order: usize,
) -> TruncatedSeries {
    let delta = |s: &TruncatedSeries| {
        let mut out = TruncatedSeries::zero(order);
        for (n, scale, d) in parts {
            for (j, c) in s.coeffs().iter().enumerate() {
                if j + n <= order && !c.is_zero() {
                    out.add_to_coeff(j + n, &d.apply(c).scale(scale));
                }
            }
        }
        out
    };
    let mut total = TruncatedSeries::constant(w.clone(), order);
    let mut power = total.clone();
    let mut factorial = BigInt::one();
    for m in 1..=order {
        power = delta(&power);
        if power.is_zero() {
            break;
        }
        factorial *= m;
        total = total.add(&power.scale(&Coeff::new(BigInt::one(), factorial.clone())));
    }
    total
}

fn reciprocal(n: usize) -> Coeff {
    Coeff::new(BigInt::one(), BigInt::from(n))
}

/// `sigma_t(w)` as `exp(sum_n D_n t^n / n)(w)`.
pub fn sigma_t_exp(w: &Poly, order: usize) -> TruncatedSeries {
    let parts: Vec<_> = (1..=order)
        .map(|n| (n, reciprocal(n), Derivation::d_n(n).expect("n >= 1")))
        .collect();
    exp_of_derivation_series(&parts, w, order)
}

/// `exp(d_t)(w)` with `d_t = sum_n t^n d_n / n` built from the
/// antisymmetric derivations `d_n(x) = x (x+y)^(n-1) y`.
pub fn exp_partial_t(w: &Poly, order: usize) -> TruncatedSeries {
    let parts: Vec<_> = (1..=order)
        .map(|n| {
            (
                n,
                reciprocal(n),
                Derivation::ihara_kaneko(n).expect("n >= 1"),
            )
        })
        .collect();
    exp_of_derivation_series(&parts, w, order)
}

/// `Phi(w) = sigma-bar_t sigma_t^-1 (w)` where `sigma-bar_t = tau sigma_t tau`.
pub fn phi_bar_sigma(w: &Poly, order: usize) -> TruncatedSeries {
    let inverse = sigma_t_inverse(w, order);
    h_series_action(&inverse.tau()).tau()
}

/// `x (1 - t y)^-1` truncated: the coefficient of `t^k` is `x y^k`.
pub fn x_geometric_y(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|k| Poly::from(Word::x().concat(&Word::y_pow(k))))
        .collect();
    TruncatedSeries::from_coeffs(coeffs, order)
}
