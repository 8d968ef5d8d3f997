//! Derivations of `Q<x,y>` and the cyclic derivation `C`.
//!
//! A [`Derivation`] is fixed by the images of the two letters and acts on a
//! word by the Leibniz rule. The cyclic derivation `C` (with `C(x) = 0` and
//! `(C(y), f) = x f y`) is exposed through its pairing `(C(w), f)` and its
//! canonical element `C(w) = (C(w), 1)`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Coeff, Poly};
use crate::word::{Composition, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    image_x: Poly,
    image_y: Poly,
}

impl Derivation {
    pub fn new(image_x: Poly, image_y: Poly) -> Derivation {
        Derivation { image_x, image_y }
    }

    /// `D`: `x -> 0`, `y -> xy`.
    pub fn d() -> Derivation {
        Derivation::d_n(1).expect("n = 1")
    }

    /// `D_n`: `x -> 0`, `y -> x^n y`.
    pub fn d_n(n: usize) -> Result<Derivation> {
        if n == 0 {
            return Err(Error::IndexOutOfRange { min: 1, got: 0 });
        }
        Ok(Derivation {
            image_x: Poly::zero(),
            image_y: Poly::from(Word::x_pow(n).concat(&Word::y())),
        })
    }

    /// The antisymmetric derivation `d_n` with `d_n(x) = x (x+y)^(n-1) y`
    /// and `d_n(y) = -d_n(x)`, so that `d_n(x + y) = 0`.
    pub fn ihara_kaneko(n: usize) -> Result<Derivation> {
        if n == 0 {
            return Err(Error::IndexOutOfRange { min: 1, got: 0 });
        }
        let image_x =
            &(&Poly::from(Word::x()) * &Poly::x_plus_y_pow(n - 1)) * &Poly::from(Word::y());
        let image_y = -&image_x;
        Ok(Derivation { image_x, image_y })
    }

    pub fn image_x(&self) -> &Poly {
        &self.image_x
    }

    pub fn image_y(&self) -> &Poly {
        &self.image_y
    }

    pub fn image(&self, letter: Letter) -> &Poly {
        match letter {
            Letter::X => &self.image_x,
            Letter::Y => &self.image_y,
        }
    }

    /// `|d(x)| - 1`, or `None` when the images are not homogeneous of a
    /// common weight (the zero derivation included).
    pub fn degree(&self) -> Option<usize> {
        let wx = self.image_x.weight();
        let wy = self.image_y.weight();
        match (wx, wy) {
            (Some(a), Some(b)) if a == b => a.checked_sub(1),
            (Some(a), None) if self.image_y.is_zero() => a.checked_sub(1),
            (None, Some(b)) if self.image_x.is_zero() => b.checked_sub(1),
            _ => None,
        }
    }

    pub fn apply_word(&self, w: &Word) -> Poly {
        let letters = w.letters();
        let mut out = Poly::zero();
        for (i, &l) in letters.iter().enumerate() {
            let img = self.image(l);
            if img.is_zero() {
                continue;
            }
            let prefix = w.slice(0..i);
            let suffix = w.slice(i + 1..letters.len());
            out += &img.map_words(|m| Poly::from(prefix.concat(m).concat(&suffix)));
        }
        out
    }

    pub fn apply(&self, p: &Poly) -> Poly {
        p.map_words(|w| self.apply_word(w))
    }

    /// `tau d tau`.
    pub fn conjugate(&self) -> Derivation {
        Derivation {
            image_x: self.image_y.tau(),
            image_y: self.image_x.tau(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.conjugate() == *self
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.conjugate() == self.scale(&-Coeff::one())
    }

    pub fn scale(&self, s: &Coeff) -> Derivation {
        Derivation {
            image_x: self.image_x.scale(s),
            image_y: self.image_y.scale(s),
        }
    }

    pub fn sub(&self, other: &Derivation) -> Derivation {
        Derivation {
            image_x: &self.image_x - &other.image_x,
            image_y: &self.image_y - &other.image_y,
        }
    }

    /// `[self, other] = self other - other self`.
    pub fn commutator(&self, other: &Derivation) -> Derivation {
        let on = |l: Letter| self.apply(other.image(l)) - other.apply(self.image(l));
        Derivation {
            image_x: on(Letter::X),
            image_y: on(Letter::Y),
        }
    }
}

/// The pairing `(C(w), f)`: the sum over the `y` letters `a_i` of
/// `w = a_1 ... a_k` of `x a_(i+1) ... a_k f a_1 ... a_(i-1) y`.
pub fn cyclic_c_pair(w: &Word, f: &Word) -> Poly {
    let letters = w.letters();
    let k = letters.len();
    let mut out = Poly::zero();
    for (i, &l) in letters.iter().enumerate() {
        if l == Letter::Y {
            let inner = w.slice(i + 1..k).concat(f).concat(&w.slice(0..i));
            out.add_term(Word::x().concat(&inner).concat(&Word::y()), Coeff::one());
        }
    }
    out
}

/// The canonical element `C(w) = (C(w), 1)`.
pub fn cyclic_c(w: &Word) -> Poly {
    cyclic_c_pair(w, &Word::empty())
}

pub fn cyclic_c_poly(p: &Poly) -> Poly {
    p.map_words(cyclic_c)
}

/// `(C-bar(w), f) = tau (C(tau w), tau f)`.
pub fn cyclic_c_bar_pair(w: &Word, f: &Word) -> Poly {
    cyclic_c_pair(&w.tau(), &f.tau()).tau()
}

pub fn cyclic_c_bar(w: &Word) -> Poly {
    cyclic_c_bar_pair(w, &Word::empty())
}

pub fn cyclic_c_bar_poly(p: &Poly) -> Poly {
    p.map_words(cyclic_c_bar)
}

fn z_monomial(parts: impl IntoIterator<Item = u32>) -> Word {
    Composition::new(parts.into_iter().collect())
        .expect("positive parts")
        .to_word()
}

/// `C(z_{i1} ... z_{il}) = sum_j z_{ij + 1} z_{i(j+1)} ... z_{il} z_{i1} ... z_{i(j-1)}`
/// computed on the composition.
pub fn cyclic_c_closed_form(c: &Composition) -> Poly {
    let parts = c.parts();
    let mut out = Poly::zero();
    for j in 0..parts.len() {
        let rotated = c.rotate(j);
        let mut bumped = rotated.parts().to_vec();
        bumped[0] += 1;
        out.add_term(z_monomial(bumped), Coeff::one());
    }
    out
}

/// `C-bar(z_{i1} ... z_{il}) = sum_{ij >= 2} sum_{q=0}^{ij-2}
/// z_{ij - q} z_{i(j+1)} ... z_{il} z_{i1} ... z_{i(j-1)} z_{q+1}`.
pub fn cyclic_c_bar_closed_form(c: &Composition) -> Poly {
    let parts = c.parts();
    let mut out = Poly::zero();
    for j in 0..parts.len() {
        let rotated = c.rotate(j);
        let head = rotated.parts()[0];
        for q in 0..head.saturating_sub(1) {
            let mut seq = rotated.parts().to_vec();
            seq[0] = head - q;
            seq.push(q + 1);
            out.add_term(z_monomial(seq), Coeff::one());
        }
    }
    out
}
