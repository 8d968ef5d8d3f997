//! Exact rational linear combinations of words.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::word::Word;

pub type Coeff = BigRational;

/// An element of `H = Q<x,y>`: a finite map from words to nonzero rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Word, Coeff>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::from(Word::empty())
    }

    pub fn term(word: Word, coeff: Coeff) -> Poly {
        let mut p = Poly::zero();
        p.add_term(word, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> Coeff {
        self.terms.get(word).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, word: Word, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, scale: &Coeff) {
        if scale.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c * scale);
        }
    }

    pub fn scale(&self, s: &Coeff) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect(),
        }
    }

    /// Linear extension of a map on words.
    pub fn map_words<F>(&self, mut f: F) -> Poly
    where
        F: FnMut(&Word) -> Poly,
    {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }

    /// Bilinear extension of a map on pairs of words.
    pub fn bilinear<F>(&self, other: &Poly, mut f: F) -> Poly
    where
        F: FnMut(&Word, &Word) -> Poly,
    {
        let mut out = Poly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_scaled(&f(u, v), &(a * b));
            }
        }
        out
    }

    pub fn tau(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.tau(), c.clone()))
                .collect(),
        }
    }

    /// Common weight of all terms, or `None` for zero and mixed-weight polys.
    pub fn weight(&self) -> Option<usize> {
        let mut weights = self.terms.keys().map(Word::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn in_h0(&self) -> bool {
        self.terms.keys().all(Word::in_h0)
    }

    pub fn in_h1(&self) -> bool {
        self.terms.keys().all(Word::in_h1)
    }

    /// Terms whose word has exactly `length` occurrences of `y`.
    pub fn filter_length(&self, length: usize) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.length() == length)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Sum of `|c|` over all coefficients.
    pub fn abs_coeff_sum(&self) -> Coeff {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// Integer multiple with content 1 and positive leading coefficient.
    /// Two polys span the same line iff their normal forms agree.
    pub fn normalized(&self) -> Poly {
        let Some(lead) = self.terms.values().next() else {
            return Poly::zero();
        };
        let denom_lcm = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numer_gcd = self.terms.values().fold(BigInt::zero(), |acc, c| {
            acc.gcd(&(c.numer() * &denom_lcm / c.denom()))
        });
        let mut factor = Coeff::new(denom_lcm, numer_gcd);
        if lead.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// `(x + y)^n` expanded: the sum of all words of weight `n`.
    pub fn x_plus_y_pow(n: usize) -> Poly {
        Word::all_of_weight(n)
            .into_iter()
            .map(|w| (w, Coeff::one()))
            .collect()
    }
}

impl From<Word> for Poly {
    fn from(w: Word) -> Poly {
        Poly::term(w, Coeff::one())
    }
}

impl FromIterator<(Word, Coeff)> for Poly {
    fn from_iter<I: IntoIterator<Item = (Word, Coeff)>>(iter: I) -> Poly {
        let mut p = Poly::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        self += &rhs;
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        self -= &rhs;
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Concatenation product of `Q<x,y>`.
impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.bilinear(rhs, |u, v| Poly::from(u.concat(v)))
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

fn fmt_coeff_abs(c: &Coeff) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Text form: `xxy - 1/2 xyy + 3 xyxy`, or `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            if w.is_empty() {
                write!(f, "{}", fmt_coeff_abs(c))?;
            } else if c.abs().is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{} {w}", fmt_coeff_abs(c))?;
            }
        }
        Ok(())
    }
}

/// JSON integer when it fits in `i64`, decimal string otherwise.
fn int_json(n: &BigInt) -> serde_json::Value {
    match i64::try_from(n) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(n.to_string()),
    }
}

fn int_from_json<E: de::Error>(v: &serde_json::Value) -> Result<BigInt, E> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| E::custom("coefficient must be an integer")),
        serde_json::Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| E::custom(format!("bad integer `{s}`"))),
        _ => Err(E::custom("coefficient must be a number or string")),
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: String,
    num: serde_json::Value,
    den: serde_json::Value,
}

/// Encoded as a list of `{word, num, den}` objects in word order.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&TermJson {
                word: w.to_string(),
                num: int_json(c.numer()),
                den: int_json(c.denom()),
            })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Poly, D::Error> {
        let raw = Vec::<TermJson>::deserialize(deserializer)?;
        let mut p = Poly::zero();
        for t in raw {
            let word = crate::parse::parse_letters(&t.word).map_err(de::Error::custom)?;
            let den = int_from_json::<D::Error>(&t.den)?;
            if den.is_zero() {
                return Err(de::Error::custom("zero denominator"));
            }
            p.add_term(word, Coeff::new(int_from_json::<D::Error>(&t.num)?, den));
        }
        Ok(p)
    }
}

/// A rational combination of pure tensors `u (x) v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TensorPoly {
    terms: BTreeMap<(Word, Word), Coeff>,
}

impl TensorPoly {
    pub fn zero() -> TensorPoly {
        TensorPoly::default()
    }

    pub fn add_term(&mut self, left: Word, right: Word, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry((left, right)).or_insert_with(Coeff::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, left: &Word, right: &Word) -> Coeff {
        self.terms
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((u, v), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            if !c.abs().is_one() {
                write!(f, "{} ", fmt_coeff_abs(c))?;
            }
            write!(f, "{u}(x){v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_letters;

    fn p(s: &str) -> Poly {
        crate::parse::parse_poly(s).unwrap()
    }

    fn q(n: i64, d: i64) -> Coeff {
        Coeff::new(n.into(), d.into())
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&p("x") * &p("y"), p("xy"));
        assert!((&p("xy") + &p("-xy")).is_zero());
        let u = p("xy");
        let v = p("x");
        assert_eq!((&u * &v).tau(), &v.tau() * &u.tau());
        assert_eq!(p("x + y").scale(&q(1, 2)), p("1/2 x + 1/2 y"));
    }

    #[test]
    fn weight_of_mixed_poly() {
        assert_eq!(p("xy - yx").weight(), Some(2));
        assert_eq!(p("x + xy").weight(), None);
        assert_eq!(Poly::zero().weight(), None);
    }

    #[test]
    fn display_is_sorted_and_signed() {
        let poly = p("xyy - 3/2 xxy + 1");
        assert_eq!(poly.to_string(), "1 - 3/2 xxy + xyy");
        assert_eq!((-p("xy")).to_string(), "-xy");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let poly = p("xxy - 1/3 xyy");
        let json = serde_json::to_string(&poly).unwrap();
        assert_eq!(
            json,
            r#"[{"word":"xxy","num":1,"den":1},{"word":"xyy","num":-1,"den":3}]"#
        );
        let back: Poly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, poly);
    }

    #[test]
    fn normalization() {
        let a = p("-2/3 xxy + 4/3 xyy");
        assert_eq!(a.normalized(), p("xxy - 2 xyy"));
        assert_eq!(a.scale(&q(-7, 5)).normalized(), a.normalized());
    }

    #[test]
    fn x_plus_y_power() {
        let sq = &Poly::x_plus_y_pow(1) * &Poly::x_plus_y_pow(1);
        assert_eq!(sq, Poly::x_plus_y_pow(2));
        assert_eq!(Poly::x_plus_y_pow(0), Poly::one());
    }

    #[test]
    fn tensor_terms_cancel() {
        let mut t = TensorPoly::zero();
        let y = parse_letters("y").unwrap();
        t.add_term(Word::empty(), y.clone(), q(1, 1));
        t.add_term(Word::empty(), y, q(-1, 1));
        assert!(t.is_empty());
    }
}
