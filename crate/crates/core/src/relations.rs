//! Families of exact elements of `ker zeta`, and exact ranks of their spans.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::derivations::{cyclic_c, cyclic_c_bar, Derivation};
use crate::error::{Error, Result};
use crate::linalg::{coordinates, RowEchelon};
use crate::poly::Poly;
use crate::products::{double_shuffle, harmonic_words, shuffle_words};
use crate::qsym::{act, complete_h};
use crate::word::{Composition, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Duality,
    Derivation,
    #[serde(rename = "cyclic")]
    CyclicSum,
    #[serde(rename = "sum")]
    SumTheorem,
    Hoffman43,
    IharaKaneko,
    Ohno,
    DoubleShuffle,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Duality,
        Family::Derivation,
        Family::CyclicSum,
        Family::SumTheorem,
        Family::Hoffman43,
        Family::IharaKaneko,
        Family::Ohno,
        Family::DoubleShuffle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Duality => "duality",
            Family::Derivation => "derivation",
            Family::CyclicSum => "cyclic",
            Family::SumTheorem => "sum",
            Family::Hoffman43 => "hoffman43",
            Family::IharaKaneko => "ihara-kaneko",
            Family::Ohno => "ohno",
            Family::DoubleShuffle => "double-shuffle",
        }
    }

    /// Parses a comma-separated list; `all` expands to every family.
    pub fn parse_list(s: &str) -> Result<Vec<Family>> {
        let mut out = Vec::new();
        let mut pos = 0;
        for item in s.split(',') {
            let name = item.trim();
            if name == "all" {
                out.extend(Family::ALL);
            } else {
                out.push(name.parse().map_err(|_| Error::Parse {
                    pos,
                    msg: format!("unknown family `{name}`"),
                })?);
            }
            pos += item.len() + 1;
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("unknown family `{s}`"),
            })
    }
}

/// Where a relation came from.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub other: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub depth: Option<usize>,
}

impl Params {
    fn source(w: &Word) -> Params {
        Params {
            source: Some(w.to_string()),
            ..Params::default()
        }
    }

    fn with_n(mut self, n: usize) -> Params {
        self.n = Some(n);
        self
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(s) = &self.source {
            parts.push(format!("w={s}"));
        }
        if let Some(s) = &self.other {
            parts.push(format!("v={s}"));
        }
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        if let Some(l) = self.depth {
            parts.push(format!("l={l}"));
        }
        f.write_str(&parts.join(","))
    }
}

/// A weight-homogeneous combination of admissible words claimed to be
/// annihilated by zeta.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub family: Family,
    pub weight: usize,
    pub params: Params,
    pub element: Poly,
}

impl Relation {
    /// Checks homogeneity and admissible support (the unit excluded).
    pub fn new(family: Family, weight: usize, params: Params, element: Poly) -> Result<Relation> {
        let bad = |reason: String| Error::BadRelation {
            family: family.name(),
            reason,
        };
        if let Some(w) = element.words().find(|w| w.is_empty() || !w.in_h0()) {
            return Err(bad(format!("word `{w}` is not admissible")));
        }
        if !element.is_zero() && element.weight() != Some(weight) {
            return Err(bad(format!(
                "element is not homogeneous of weight {weight}"
            )));
        }
        Ok(Relation {
            family,
            weight,
            params,
            element,
        })
    }

    pub fn id(&self) -> String {
        format!("{}[{}]@{}", self.family, self.params, self.weight)
    }
}

pub fn duality_element(w: &Word) -> Poly {
    Poly::from(w.clone()) - Poly::from(w.tau())
}

/// `D(w) - D-bar(w)`.
pub fn derivation_element(w: &Word) -> Poly {
    let d = Derivation::d();
    let p = Poly::from(w.clone());
    d.apply(&p) - d.conjugate().apply(&p)
}

/// `C(w) - C-bar(w)`.
pub fn cyclic_sum_element(w: &Word) -> Poly {
    cyclic_c(w) - cyclic_c_bar(w)
}

/// `y sh w - y * w`.
pub fn hoffman43_element(w: &Word) -> Poly {
    shuffle_words(&Word::y(), w) - harmonic_words(&Word::y(), w)
}

pub fn ihara_kaneko_element(n: usize, w: &Word) -> Result<Poly> {
    Ok(Derivation::ihara_kaneko(n)?.apply(&Poly::from(w.clone())))
}

/// `h_n . tau(w) - h_n . w`.
pub fn ohno_element(n: usize, w: &Word) -> Poly {
    let h = complete_h(n);
    let a = act(&h, &Poly::from(w.tau())).expect("h_n lies in H1");
    let b = act(&h, &Poly::from(w.clone())).expect("h_n lies in H1");
    a - b
}

/// Sum of the admissible words of weight `n` with `l` letters `y`.
pub fn sum_of_depth(n: usize, l: usize) -> Poly {
    Word::admissible_of_weight(n)
        .into_iter()
        .filter(|w| w.length() == l)
        .map(Poly::from)
        .fold(Poly::zero(), |acc, p| acc + p)
}

/// Drops zero elements and elements proportional to an earlier one.
fn dedup(relations: Vec<Relation>) -> Vec<Relation> {
    let mut seen = HashSet::new();
    relations
        .into_iter()
        .filter(|r| !r.element.is_zero() && seen.insert(r.element.normalized()))
        .collect()
}

fn build<I>(family: Family, weight: usize, items: I) -> Result<Vec<Relation>>
where
    I: IntoIterator<Item = (Params, Poly)>,
{
    let rels = items
        .into_iter()
        .map(|(params, element)| Relation::new(family, weight, params, element))
        .collect::<Result<Vec<_>>>()?;
    Ok(dedup(rels))
}

pub fn gen_duality(weight: usize) -> Result<Vec<Relation>> {
    if weight < 2 {
        return Ok(Vec::new());
    }
    build(
        Family::Duality,
        weight,
        Word::admissible_of_weight(weight)
            .iter()
            .map(|w| (Params::source(w), duality_element(w))),
    )
}

pub fn gen_derivation(weight: usize) -> Result<Vec<Relation>> {
    if weight < 2 {
        return Ok(Vec::new());
    }
    build(
        Family::Derivation,
        weight,
        Word::admissible_of_weight(weight - 1)
            .iter()
            .map(|w| (Params::source(w), derivation_element(w))),
    )
}

/// One relation per cyclic class of `H1` words of weight `weight - 1`
/// that are not powers of `y`, from the least rotation of the class.
pub fn gen_cyclic_sum(weight: usize) -> Result<Vec<Relation>> {
    if weight < 2 {
        return Ok(Vec::new());
    }
    let reps: Vec<Composition> = Composition::all_of_weight(weight as u32 - 1)
        .into_iter()
        .filter(|c| c.parts().iter().any(|&k| k >= 2))
        .filter(|c| {
            c.cyclic_class()
                .map(|k| k.representative == *c)
                .unwrap_or(false)
        })
        .collect();
    build(
        Family::CyclicSum,
        weight,
        reps.iter().map(|c| {
            let w = c.to_word();
            (
                Params {
                    source: Some(c.to_string()),
                    ..Params::default()
                },
                cyclic_sum_element(&w),
            )
        }),
    )
}

/// `S(n, l) - S(n, l + 1)` for `1 <= l < n - 1`.
pub fn gen_sum_theorem(weight: usize) -> Result<Vec<Relation>> {
    if weight < 3 {
        return Ok(Vec::new());
    }
    build(
        Family::SumTheorem,
        weight,
        (1..weight - 1).map(|l| {
            (
                Params {
                    depth: Some(l),
                    ..Params::default()
                },
                sum_of_depth(weight, l) - sum_of_depth(weight, l + 1),
            )
        }),
    )
}

pub fn gen_ihara_kaneko(n: usize, weight: usize) -> Result<Vec<Relation>> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { min: 1, got: 0 });
    }
    if weight < n + 2 {
        return Ok(Vec::new());
    }
    let items = Word::admissible_of_weight(weight - n)
        .iter()
        .map(|w| Ok((Params::source(w).with_n(n), ihara_kaneko_element(n, w)?)))
        .collect::<Result<Vec<_>>>()?;
    build(Family::IharaKaneko, weight, items)
}

pub fn gen_ohno(n: usize, weight: usize) -> Result<Vec<Relation>> {
    if weight < n + 2 {
        return Ok(Vec::new());
    }
    build(
        Family::Ohno,
        weight,
        Word::admissible_of_weight(weight - n)
            .iter()
            .map(|w| (Params::source(w).with_n(n), ohno_element(n, w))),
    )
}

/// `u sh v - u * v` over unordered pairs of admissible words of total weight `weight`.
pub fn gen_double_shuffle(weight: usize) -> Result<Vec<Relation>> {
    let mut items = Vec::new();
    for a in 2..=weight / 2 {
        let b = weight - a;
        if b < 2 {
            continue;
        }
        let left = Word::admissible_of_weight(a);
        let right = Word::admissible_of_weight(b);
        for (i, u) in left.iter().enumerate() {
            for (j, v) in right.iter().enumerate() {
                if a == b && j < i {
                    continue;
                }
                let element = double_shuffle(&Poly::from(u.clone()), &Poly::from(v.clone()))?;
                let params = Params {
                    source: Some(u.to_string()),
                    other: Some(v.to_string()),
                    ..Params::default()
                };
                items.push((params, element));
            }
        }
    }
    build(Family::DoubleShuffle, weight, items)
}

pub fn gen_hoffman43(weight: usize) -> Result<Vec<Relation>> {
    if weight < 3 {
        return Ok(Vec::new());
    }
    build(
        Family::Hoffman43,
        weight,
        Word::admissible_of_weight(weight - 1)
            .iter()
            .map(|w| (Params::source(w), hoffman43_element(w))),
    )
}

/// Every relation of `family` at `weight`; the indexed families run over
/// every `n` that leaves an admissible source word.
pub fn generate(family: Family, weight: usize) -> Result<Vec<Relation>> {
    match family {
        Family::Duality => gen_duality(weight),
        Family::Derivation => gen_derivation(weight),
        Family::CyclicSum => gen_cyclic_sum(weight),
        Family::SumTheorem => gen_sum_theorem(weight),
        Family::Hoffman43 => gen_hoffman43(weight),
        Family::DoubleShuffle => gen_double_shuffle(weight),
        Family::IharaKaneko => {
            let mut all = Vec::new();
            for n in 1..=weight.saturating_sub(2) {
                all.extend(gen_ihara_kaneko(n, weight)?);
            }
            Ok(all)
        }
        Family::Ohno => {
            let mut all = Vec::new();
            for n in 0..=weight.saturating_sub(2) {
                all.extend(gen_ohno(n, weight)?);
            }
            Ok(all)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyRank {
    pub family: Family,
    pub relations: usize,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub weight: usize,
    pub basis: Vec<String>,
    pub families: Vec<FamilyRank>,
    pub rank: usize,
    pub nullity: usize,
}

/// Exact ranks of each family and of their union in the admissible-word
/// basis of the given weight.
pub fn rank_report(weight: usize, families: &[Family]) -> Result<RankReport> {
    let basis = Word::admissible_of_weight(weight);
    let mut union = RowEchelon::new(basis.len());
    let mut per_family = Vec::new();
    for &family in families {
        let rels = generate(family, weight)?;
        let mut own = RowEchelon::new(basis.len());
        for r in &rels {
            let v = coordinates(&r.element, &basis).expect("relations are admissible");
            own.insert(v.clone());
            union.insert(v);
        }
        per_family.push(FamilyRank {
            family,
            relations: rels.len(),
            rank: own.rank(),
        });
    }
    Ok(RankReport {
        weight,
        basis: basis.iter().map(Word::to_string).collect(),
        families: per_family,
        rank: union.rank(),
        nullity: basis.len() - union.rank(),
    })
}

/// Row echelon form of the span of the given relations at one weight.
pub fn span(relations: &[Relation], weight: usize) -> RowEchelon {
    let basis = Word::admissible_of_weight(weight);
    let mut ech = RowEchelon::new(basis.len());
    for r in relations {
        ech.insert(coordinates(&r.element, &basis).expect("relations are admissible"));
    }
    ech
}

/// Whether `p` (homogeneous of `weight`) lies in `span`.
pub fn span_contains(span: &RowEchelon, p: &Poly, weight: usize) -> bool {
    let basis = Word::admissible_of_weight(weight);
    coordinates(p, &basis).is_some_and(|v| span.contains(v))
}
