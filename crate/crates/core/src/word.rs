//! Words over the alphabet `{x, y}`, compositions, duality and cyclic classes.
//!
//! A [`Word`] is a monomial of the free algebra `Q<x,y>`. Words in `H1` (empty,
//! or ending in `y`) are in bijection with [`Composition`]s through
//! `z_k = x^(k-1) y`; words in `H0` (empty, or `x ... y`) correspond to
//! admissible compositions, the index sets of convergent multiple zeta values.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A monomial in the noncommuting letters `x` and `y`.
///
/// Words are ordered graded-lexicographically: shorter words first, then
/// letter by letter with `x < y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn x() -> Word {
        Word(vec![Letter::X])
    }

    pub fn y() -> Word {
        Word(vec![Letter::Y])
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// `x^n`.
    pub fn x_pow(n: usize) -> Word {
        Word(vec![Letter::X; n])
    }

    /// `y^n`.
    pub fn y_pow(n: usize) -> Word {
        Word(vec![Letter::Y; n])
    }

    /// The generator `z_k = x^(k-1) y` of `H1`.
    pub fn z(k: usize) -> Result<Word> {
        if k == 0 {
            return Err(Error::IndexOutOfRange { min: 1, got: 0 });
        }
        let mut letters = vec![Letter::X; k - 1];
        letters.push(Letter::Y);
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree `|w|`.
    pub fn weight(&self) -> usize {
        self.0.len()
    }

    /// Number of `y` letters, `l(w)`.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::Y).count()
    }

    /// Number of `x` letters.
    pub fn colength(&self) -> usize {
        self.weight() - self.length()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Subword `letters[range]`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// Duality anti-automorphism: reverse the word and exchange `x` with `y`.
    pub fn tau(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.swap()).collect())
    }

    /// Membership in `H1 = Q1 + Hy`.
    pub fn in_h1(&self) -> bool {
        self.0.last().is_none_or(|&l| l == Letter::Y)
    }

    /// Membership in `H0 = Q1 + xHy`.
    pub fn in_h0(&self) -> bool {
        matches!(
            (self.0.first(), self.0.last()),
            (None, None) | (Some(&Letter::X), Some(&Letter::Y))
        )
    }

    /// The z-letter indices of an `H1` word: `x^(k1-1)y ... x^(kl-1)y -> (k1, ..., kl)`.
    pub fn to_composition(&self) -> Result<Composition> {
        if !self.in_h1() {
            return Err(Error::NotInH1(self.clone()));
        }
        let mut parts = Vec::with_capacity(self.length());
        let mut run = 0u32;
        for &l in &self.0 {
            run += 1;
            if l == Letter::Y {
                parts.push(run);
                run = 0;
            }
        }
        Ok(Composition(parts))
    }

    /// True when the word is `y^m` for some `m >= 0`.
    pub fn is_power_of_y(&self) -> bool {
        self.0.iter().all(|&l| l == Letter::Y)
    }

    /// Every word of the given weight, in graded-lex order.
    pub fn all_of_weight(weight: usize) -> Vec<Word> {
        (0..1usize << weight)
            .map(|bits| {
                Word(
                    (0..weight)
                        .map(|i| {
                            if bits >> (weight - 1 - i) & 1 == 1 {
                                Letter::Y
                            } else {
                                Letter::X
                            }
                        })
                        .collect(),
                )
            })
            .collect()
    }

    /// Every word of weight at most `max_weight`.
    pub fn all_up_to_weight(max_weight: usize) -> Vec<Word> {
        (0..=max_weight).flat_map(Word::all_of_weight).collect()
    }

    /// Admissible words of the given weight (`x H y`), in graded-lex order.
    /// The unit is returned for weight 0.
    pub fn admissible_of_weight(weight: usize) -> Vec<Word> {
        match weight {
            0 => vec![Word::empty()],
            1 => Vec::new(),
            _ => Word::all_of_weight(weight - 2)
                .into_iter()
                .map(|mid| Word::x().concat(&mid).concat(&Word::y()))
                .collect(),
        }
    }

    /// Words of `H1` with the given weight.
    pub fn h1_of_weight(weight: usize) -> Vec<Word> {
        Word::all_of_weight(weight)
            .into_iter()
            .filter(Word::in_h1)
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

/// A finite sequence of positive integers `(k1, ..., kl)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Composition> {
        if let Some(pos) = parts.iter().position(|&k| k == 0) {
            return Err(Error::Parse {
                pos,
                msg: "composition parts must be positive".into(),
            });
        }
        Ok(Composition(parts))
    }

    pub fn empty() -> Composition {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts (the depth of the corresponding MZV).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_admissible(&self) -> bool {
        self.0.first().is_none_or(|&k| k > 1)
    }

    /// `x^(k1-1) y ... x^(kl-1) y`.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.weight() as usize);
        for &k in &self.0 {
            letters.extend(std::iter::repeat_n(Letter::X, k as usize - 1));
            letters.push(Letter::Y);
        }
        Word(letters)
    }

    /// Drops the first part.
    pub fn tail(&self) -> Composition {
        Composition(self.0.get(1..).unwrap_or(&[]).to_vec())
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// Rotation moving part `i` to the front.
    pub fn rotate(&self, i: usize) -> Composition {
        let mut parts = self.0.clone();
        parts.rotate_left(i);
        Composition(parts)
    }

    /// The dual sequence `Sigma^-1 C_n R_n Sigma (s)`.
    pub fn dual(&self) -> Result<Composition> {
        if self.is_empty() {
            return Err(Error::EmptyComposition("dual"));
        }
        if !self.is_admissible() {
            return Err(Error::NotAdmissible(self.clone()));
        }
        let n = self.weight();
        let sums = partial_sums(&self.0);
        let reflected: BTreeSet<u32> = sums.iter().map(|&a| n + 1 - a).collect();
        let complement: Vec<u32> = (1..=n).filter(|a| !reflected.contains(a)).collect();
        Ok(Composition(differences(&complement)))
    }

    /// The cyclic equivalence class of this composition.
    pub fn cyclic_class(&self) -> Result<CyclicClass> {
        if self.is_empty() {
            return Err(Error::EmptyComposition("cyclic class"));
        }
        let members: BTreeSet<Composition> = (0..self.len()).map(|i| self.rotate(i)).collect();
        let multiplicity = self.len() / members.len();
        let members: Vec<Composition> = members.into_iter().collect();
        Ok(CyclicClass {
            representative: members[0].clone(),
            members,
            multiplicity,
        })
    }

    /// Every composition of `n` (there are `2^(n-1)` for `n >= 1`), in
    /// lexicographic order of their words.
    pub fn all_of_weight(n: u32) -> Vec<Composition> {
        Word::h1_of_weight(n as usize)
            .into_iter()
            .map(|w| w.to_composition().expect("h1 word"))
            .collect()
    }
}

fn partial_sums(parts: &[u32]) -> Vec<u32> {
    parts
        .iter()
        .scan(0, |acc, &k| {
            *acc += k;
            Some(*acc)
        })
        .collect()
}

fn differences(increasing: &[u32]) -> Vec<u32> {
    let mut prev = 0;
    increasing
        .iter()
        .map(|&a| {
            let d = a - prev;
            prev = a;
            d
        })
        .collect()
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

/// An element of `Pi(n, l)`: all distinct rotations of a composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicClass {
    /// Lexicographically least rotation.
    pub representative: Composition,
    /// Distinct rotations in lexicographic order.
    pub members: Vec<Composition>,
    /// Largest `m` with `s = u^m`.
    pub multiplicity: usize,
}

impl CyclicClass {
    pub fn contains(&self, c: &Composition) -> bool {
        self.members.binary_search(c).is_ok()
    }

    pub fn weight(&self) -> u32 {
        self.representative.weight()
    }

    pub fn depth(&self) -> usize {
        self.representative.len()
    }

    /// The class of the dual of any admissible member.
    pub fn dual(&self) -> Result<CyclicClass> {
        let admissible = self
            .members
            .iter()
            .find(|c| c.is_admissible())
            .ok_or_else(|| Error::NotAdmissible(self.representative.clone()))?;
        admissible.dual()?.cyclic_class()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word(
            s.chars()
                .map(|c| if c == 'x' { Letter::X } else { Letter::Y })
                .collect(),
        )
    }

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn gradings() {
        let word = w("xxyxy");
        assert_eq!((word.weight(), word.length(), word.colength()), (5, 2, 3));
        assert_eq!((Word::empty().weight(), Word::empty().length()), (0, 0));
        let t = word.tau();
        assert_eq!(t, w("xyxyy"));
        assert_eq!((t.weight(), t.length()), (5, 3));
    }

    #[test]
    fn composition_word_conversion() {
        assert_eq!(c(&[2, 1]).to_word(), w("xyy"));
        assert_eq!(c(&[3]).to_word(), w("xxy"));
        assert_eq!(w("xyxyy").to_composition().unwrap(), c(&[2, 2, 1]));
        assert_eq!(
            Word::empty().to_composition().unwrap(),
            Composition::empty()
        );
        assert_eq!(w("xyx").to_composition(), Err(Error::NotInH1(w("xyx"))));
    }

    #[test]
    fn duals() {
        assert_eq!(c(&[3]).dual().unwrap(), c(&[2, 1]));
        assert_eq!(c(&[2, 3]).dual().unwrap(), c(&[2, 1, 2]));
        assert_eq!(c(&[2, 1]).dual().unwrap(), c(&[3]));
        assert!(matches!(c(&[1, 2]).dual(), Err(Error::NotAdmissible(_))));
        assert!(matches!(
            Composition::empty().dual(),
            Err(Error::EmptyComposition(_))
        ));
    }

    #[test]
    fn dual_class_example() {
        let class = c(&[2, 3]).cyclic_class().unwrap();
        assert_eq!(class.members, vec![c(&[2, 3]), c(&[3, 2])]);
        let dual = class.dual().unwrap();
        assert_eq!(
            dual.members,
            vec![c(&[1, 2, 2]), c(&[2, 1, 2]), c(&[2, 2, 1])]
        );
        assert_eq!(dual.weight(), 5);
        assert_eq!(dual.depth(), 3);
    }

    #[test]
    fn cyclic_classes() {
        let k = c(&[1, 1, 1]).cyclic_class().unwrap();
        assert_eq!((k.members.len(), k.multiplicity), (1, 3));
        let k = c(&[2, 1, 2, 1]).cyclic_class().unwrap();
        assert_eq!(k.members, vec![c(&[1, 2, 1, 2]), c(&[2, 1, 2, 1])]);
        assert_eq!(k.multiplicity, 2);
        assert_eq!(k.representative, c(&[1, 2, 1, 2]));
        assert!(Composition::empty().cyclic_class().is_err());
    }

    #[test]
    fn zero_part_rejected() {
        assert!(Composition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn graded_lex_order() {
        let mut words = vec![w("y"), w("xy"), w("x"), Word::empty(), w("yx")];
        words.sort();
        assert_eq!(words, vec![Word::empty(), w("x"), w("y"), w("xy"), w("yx")]);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Word::all_of_weight(4).len(), 16);
        assert_eq!(Word::admissible_of_weight(5).len(), 8);
        assert_eq!(Composition::all_of_weight(4).len(), 8);
        assert!(Word::admissible_of_weight(1).is_empty());
    }
}
