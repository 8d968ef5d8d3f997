//! The shuffle and harmonic (stuffle) products on `H`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::word::{Letter, Word};

fn prepend(prefix: &Word, p: &Poly) -> Poly {
    p.map_words(|w| Poly::from(prefix.concat(w)))
}

/// `u sh v` for words, by the recursion
/// `a w1 sh b w2 = a (w1 sh b w2) + b (a w1 sh w2)`.
pub fn shuffle_words(u: &Word, v: &Word) -> Poly {
    let (a, b) = (u.letters(), v.letters());
    let (m, n) = (a.len(), b.len());
    // table[i][j] = a[i..] sh b[j..], filled from the back.
    let mut table: Vec<Vec<Poly>> = vec![vec![Poly::zero(); n + 1]; m + 1];
    for i in (0..=m).rev() {
        for j in (0..=n).rev() {
            table[i][j] = if i == m {
                Poly::from(v.slice(j..n))
            } else if j == n {
                Poly::from(u.slice(i..m))
            } else {
                let left = prepend(&Word::from_letters(vec![a[i]]), &table[i + 1][j]);
                let right = prepend(&Word::from_letters(vec![b[j]]), &table[i][j + 1]);
                left + right
            };
        }
    }
    table.swap_remove(0).swap_remove(0)
}

pub fn shuffle(u: &Poly, v: &Poly) -> Poly {
    u.bilinear(v, shuffle_words)
}

/// First `z`-block of `w[start..]`: `(k, next)` where `w[start..next] = x^(k-1) y`.
/// `None` when the suffix has no `y`.
fn first_block(w: &[Letter], start: usize) -> Option<(usize, usize)> {
    w[start..]
        .iter()
        .position(|&l| l == Letter::Y)
        .map(|off| (off + 1, start + off + 1))
}

struct Harmonic<'a> {
    u: &'a Word,
    v: &'a Word,
    memo: HashMap<(usize, usize), Poly>,
}

impl Harmonic<'_> {
    fn suffix_product(&mut self, i: usize, j: usize) -> Poly {
        if let Some(p) = self.memo.get(&(i, j)) {
            return p.clone();
        }
        let (a, b) = (self.u.letters(), self.v.letters());
        let (m, n) = (a.len(), b.len());
        let rest_u = self.u.slice(i..m);
        let rest_v = self.v.slice(j..n);
        let out = match (first_block(a, i), first_block(b, j)) {
            // 1 * w = w * 1 = w and x^p * w = w x^p
            (None, _) => Poly::from(rest_v.concat(&rest_u)),
            (_, None) => Poly::from(rest_u.concat(&rest_v)),
            (Some((p, i1)), Some((q, j1))) => {
                let zp = Word::z(p).expect("p >= 1");
                let zq = Word::z(q).expect("q >= 1");
                let zpq = Word::z(p + q).expect("p + q >= 2");
                let t1 = prepend(&zp, &self.suffix_product(i1, j));
                let t2 = prepend(&zq, &self.suffix_product(i, j1));
                let t3 = prepend(&zpq, &self.suffix_product(i1, j1));
                t1 + t2 + t3
            }
        };
        self.memo.insert((i, j), out.clone());
        out
    }
}

/// `u * v` for words, following the three harmonic-product axioms literally.
pub fn harmonic_words(u: &Word, v: &Word) -> Poly {
    let mut h = Harmonic {
        u,
        v,
        memo: HashMap::new(),
    };
    h.suffix_product(0, 0)
}

pub fn harmonic(u: &Poly, v: &Poly) -> Poly {
    u.bilinear(v, harmonic_words)
}

/// `<u, v> = u sh v - u * v`, an element of the kernel of zeta.
pub fn double_shuffle(u: &Poly, v: &Poly) -> Result<Poly> {
    for p in [u, v] {
        if let Some(w) = p.words().find(|w| !w.in_h0()) {
            return Err(Error::NotAdmissibleWord(w.clone()));
        }
    }
    Ok(shuffle(u, v) - harmonic(u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_letters, parse_poly};

    fn w(s: &str) -> Word {
        parse_letters(s).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(
            shuffle_words(&w("y"), &w("xxx")),
            p("yxxx + xyxx + xxyx + xxxy")
        );
        assert_eq!(shuffle_words(&Word::empty(), &w("xyx")), p("xyx"));
        assert_eq!(shuffle_words(&w("xy"), &w("xy")), p("2 xyxy + 4 xxyy"));
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic_words(&w("y"), &w("y")), p("2 yy + xy"));
        assert_eq!(harmonic_words(&w("xx"), &w("y")), p("yxx"));
        assert_eq!(harmonic_words(&w("y"), &w("xx")), p("yxx"));
        assert_eq!(harmonic_words(&w("y"), &w("xy")), p("yxy + xyy + xxy"));
        assert_eq!(harmonic_words(&w("xy"), &w("xy")), p("2 xyxy + xxxy"));
        assert_eq!(harmonic_words(&w("yx"), &w("y")), p("2 yyx + xyx"));
    }

    #[test]
    fn double_shuffle_examples() {
        let ds = double_shuffle(&p("xy"), &p("xy")).unwrap();
        assert_eq!(ds, p("4 xxyy - xxxy"));
        assert!(double_shuffle(&Poly::one(), &p("xxy")).unwrap().is_zero());
        let (u, v) = (p("xy"), p("xxy + xyy"));
        assert_eq!(
            double_shuffle(&u, &v).unwrap(),
            double_shuffle(&v, &u).unwrap()
        );
        assert_eq!(
            double_shuffle(&p("y"), &p("xy")),
            Err(Error::NotAdmissibleWord(w("y")))
        );
    }
}
