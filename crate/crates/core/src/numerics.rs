//! Truncated high-precision evaluation of multiple zeta values and of the
//! series `T` and `S`, and numerical verification of relations.
//!
//! `zeta(k1, ..., kl)` is summed over `N >= n1 > ... > nl >= 1` by a single
//! pass over `n` that keeps the partial sums of every suffix of every
//! requested composition. The remainder is bounded by comparing the inner
//! sums with powers of the harmonic numbers.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_traits::Signed;
use rug::ops::PowAssign;
use rug::{Assign, Float};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{Coeff, Poly};
use crate::relations::Relation;
use crate::word::{Composition, Word};

pub const DEFAULT_DIGITS: u32 = 30;
pub const DEFAULT_CUTOFF: u64 = 1_000_000;
pub const DEFAULT_ST_CUTOFF: u64 = 10_000;
pub const DEFAULT_SLACK: f64 = 10.0;

const GUARD_BITS: u32 = 16;

/// Bits needed for `digits` significant decimal digits, plus guard bits.
pub fn digits_to_bits(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
}

/// A truncated sum together with a bound on what was left out.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalResult {
    pub value: Float,
    pub truncation: u64,
    pub tail_bound: f64,
}

impl EvalResult {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// The value printed with `digits` significant digits.
    pub fn value_string(&self, digits: usize) -> String {
        self.value.to_string_radix(10, Some(digits))
    }
}

impl fmt::Display for EvalResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (f64::from(self.value.prec()) / std::f64::consts::LOG2_10) as usize;
        write!(
            f,
            "{} (N = {}, tail <= {:.3e})",
            self.value_string(digits.saturating_sub(5).max(1)),
            self.truncation,
            self.tail_bound
        )
    }
}

impl Serialize for EvalResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let digits = (f64::from(self.value.prec()) / std::f64::consts::LOG2_10) as usize;
        let mut st = s.serialize_struct("EvalResult", 3)?;
        st.serialize_field("value", &self.value_string(digits.saturating_sub(5).max(1)))?;
        st.serialize_field("truncation", &self.truncation)?;
        st.serialize_field("tail_bound", &self.tail_bound)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub residual: f64,
    pub threshold: f64,
    pub pass: bool,
}

impl VerifyReport {
    pub fn new(id: String, residual: f64, threshold: f64) -> VerifyReport {
        VerifyReport {
            id,
            residual,
            threshold,
            pass: residual.abs() <= threshold,
        }
    }
}

/// `ln(1/a!)` is not needed at these depths; `a!` fits in an `f64`.
fn factorial(a: usize) -> f64 {
    (1..=a).map(|i| i as f64).product()
}

/// Upper bound for `zeta(c) - sum_{n1 <= N}` with `c` admissible and
/// nonempty, at `prec` bits of working precision.
///
/// Each inner sum over `n1 > n2 > ... > nl >= 1` is at most
/// `H_(n1-1)^(l-1) / (l-1)!` and `H_(n-1) <= 1 + ln n`, so the remainder is
/// at most `sum_{n > N} (1 + ln n)^a n^-k / a!` with `a = l - 1`, `k = k1`.
/// That sum is bounded by the integral from `N` plus the largest term.
pub fn mzv_tail_bound(c: &Composition, n: u64, prec: u32) -> f64 {
    let k = f64::from(c.parts()[0]);
    let a = c.len() - 1;
    let big_n = n as f64;
    let u = 1.0 + big_n.ln();
    let ck = k - 1.0;
    // int_N^inf (1 + ln t)^a t^-k dt = N^(1-k) sum_j a!/(a-j)! u^(a-j) / (k-1)^(j+1)
    let integral: f64 = (0..=a)
        .map(|j| u.powi((a - j) as i32) / (factorial(a - j) * ck.powi(j as i32 + 1)))
        .sum::<f64>()
        * big_n.powf(-ck);
    // (1 + ln t)^a t^-k peaks at 1 + ln t = a / k.
    let t_peak = (a as f64 / k - 1.0).exp().max(big_n);
    let largest = (1.0 + t_peak.ln()).powi(a as i32) * t_peak.powf(-k) / factorial(a);
    let rounding =
        4.0 * big_n * (c.len() as f64 + 1.0) * 2f64.powi(-(prec as i32)) * u.powi(c.len() as i32);
    integral + largest + rounding
}

/// Which of the two series to evaluate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StSeries {
    /// `T(k1, ..., kl) = sum_{n1 > ... > nl > j >= 0} 1 / ((n1 - j) n1^k1 ... nl^kl)`.
    T(Composition),
    /// `S(k1, ..., kl, m)`: as `T` with `j > 0` and an extra `j^-m`.
    S(Composition, u32),
}

impl StSeries {
    pub fn composition(&self) -> &Composition {
        match self {
            StSeries::T(c) | StSeries::S(c, _) => c,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            StSeries::T(_) => "T",
            StSeries::S(..) => "S",
        }
    }

    fn args(&self) -> String {
        match self {
            StSeries::T(c) => c.to_string(),
            StSeries::S(c, m) => {
                let mut parts: Vec<String> = c.parts().iter().map(u32::to_string).collect();
                parts.push(m.to_string());
                format!("({})", parts.join(","))
            }
        }
    }

    /// Checks the boundedness condition: `T` needs some `ki > 1`, `S` needs
    /// some `ki > 1` or `m > 0`.
    pub fn check(&self) -> Result<()> {
        let c = self.composition();
        if c.is_empty() {
            return Err(Error::EmptyComposition(match self {
                StSeries::T(_) => "T series",
                StSeries::S(..) => "S series",
            }));
        }
        let big_part = c.parts().iter().any(|&k| k > 1);
        let ok = match self {
            StSeries::T(_) => big_part,
            StSeries::S(_, m) => big_part || *m > 0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Divergent {
                series: self.name(),
                args: self.args(),
                reason: match self {
                    StSeries::T(_) => "every part is 1",
                    StSeries::S(..) => "every part is 1 and the last exponent is 0",
                },
            })
        }
    }

    /// `k1 + ... + kl + 1`, plus `m` for `S`.
    pub fn weight(&self) -> u32 {
        match self {
            StSeries::T(c) => c.weight() + 1,
            StSeries::S(c, m) => c.weight() + m + 1,
        }
    }
}

impl fmt::Display for StSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.name(), self.args())
    }
}

/// Every suffix of every composition in `seeds`, the empty one included,
/// ordered longest first so that a suffix always precedes its own tail.
struct SuffixTable {
    comps: Vec<Composition>,
    index: HashMap<Composition, usize>,
    /// `tails[i]` is the index of `comps[i].tail()` (unused for the empty one).
    tails: Vec<usize>,
    empty: usize,
}

impl SuffixTable {
    fn new<'a>(seeds: impl IntoIterator<Item = &'a Composition>) -> SuffixTable {
        let mut all = BTreeSet::new();
        for c in seeds {
            let parts = c.parts();
            for i in 0..=parts.len() {
                all.insert(Composition::new(parts[i..].to_vec()).expect("positive parts"));
            }
        }
        all.insert(Composition::empty());
        let mut comps: Vec<Composition> = all.into_iter().collect();
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        let index: HashMap<Composition, usize> = comps
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        let tails = comps
            .iter()
            .map(|c| if c.is_empty() { 0 } else { index[&c.tail()] })
            .collect();
        let empty = index[&Composition::empty()];
        SuffixTable {
            comps,
            index,
            tails,
            empty,
        }
    }

    fn max_part(&self) -> usize {
        self.comps
            .iter()
            .flat_map(|c| c.parts().iter().copied())
            .max()
            .unwrap_or(1) as usize
    }
}

/// Converts an exact rational to a float at `prec` bits.
fn coeff_to_float(c: &Coeff, prec: u32) -> Float {
    let num = Float::with_val(prec, Float::parse(c.numer().to_string()).expect("integer"));
    let den = Float::with_val(prec, Float::parse(c.denom().to_string()).expect("integer"));
    num / den
}

/// Evaluates zeta values at a fixed working precision, remembering every
/// `(composition, N)` it has summed.
#[derive(Debug)]
pub struct Evaluator {
    digits: u32,
    prec: u32,
    memo: Mutex<HashMap<(Composition, u64), EvalResult>>,
}

impl Default for Evaluator {
    fn default() -> Evaluator {
        Evaluator::new(DEFAULT_DIGITS)
    }
}

impl Evaluator {
    pub fn new(digits: u32) -> Evaluator {
        let digits = digits.max(1);
        Evaluator {
            digits,
            prec: digits_to_bits(digits),
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn precision_bits(&self) -> u32 {
        self.prec
    }

    fn cached(&self, c: &Composition, n: u64) -> Option<EvalResult> {
        self.memo
            .lock()
            .expect("memo lock")
            .get(&(c.clone(), n))
            .cloned()
    }

    /// `zeta(c)` summed over `n1 <= n`.
    pub fn mzv(&self, c: &Composition, n: u64) -> Result<EvalResult> {
        Ok(self.mzv_batch(std::slice::from_ref(c), n)?.remove(0))
    }

    /// Evaluates several compositions in one pass, sharing common suffixes.
    pub fn mzv_batch(&self, cs: &[Composition], n: u64) -> Result<Vec<EvalResult>> {
        if let Some(bad) = cs.iter().find(|c| !c.is_admissible()) {
            return Err(Error::NotAdmissible(bad.clone()));
        }
        let missing: Vec<&Composition> = cs
            .iter()
            .filter(|c| !c.is_empty() && self.cached(c, n).is_none())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if !missing.is_empty() {
            let sums = self.partial_sums(&missing, n);
            let mut memo = self.memo.lock().expect("memo lock");
            for (c, value) in missing.into_iter().zip(sums) {
                let tail_bound = mzv_tail_bound(c, n, self.prec);
                memo.entry((c.clone(), n)).or_insert(EvalResult {
                    value,
                    truncation: n,
                    tail_bound,
                });
            }
        }
        Ok(cs
            .iter()
            .map(|c| {
                if c.is_empty() {
                    EvalResult {
                        value: Float::with_val(self.prec, 1),
                        truncation: n,
                        tail_bound: 0.0,
                    }
                } else {
                    self.cached(c, n).expect("just computed")
                }
            })
            .collect())
    }

    fn partial_sums(&self, cs: &[&Composition], n: u64) -> Vec<Float> {
        let table = SuffixTable::new(cs.iter().copied());
        let kmax = table.max_part();
        let prec = self.prec;
        let mut q: Vec<Float> = table.comps.iter().map(|_| Float::new(prec)).collect();
        q[table.empty] = Float::with_val(prec, 1);
        let mut pows: Vec<Float> = (0..=kmax).map(|_| Float::new(prec)).collect();
        for m in 1..=n {
            pows[1].assign(1);
            pows[1] /= m;
            for k in 2..=kmax {
                let (lo, hi) = pows.split_at_mut(k);
                hi[0].assign(&lo[k - 1] * &lo[1]);
            }
            // Longest suffixes first, so q[tail] still holds its value at m - 1.
            for i in 0..table.comps.len() {
                if i == table.empty {
                    continue;
                }
                let k = table.comps[i].parts()[0] as usize;
                let (head, rest) = q.split_at_mut(table.tails[i]);
                head[i] += &pows[k] * &rest[0];
            }
        }
        cs.iter().map(|c| q[table.index[*c]].clone()).collect()
    }

    /// `zeta(p)` for `p` supported on admissible words and the unit; the tail
    /// bounds are combined with the absolute values of the coefficients.
    pub fn zeta_of_poly(&self, p: &Poly, n: u64) -> Result<EvalResult> {
        let mut comps = Vec::with_capacity(p.len());
        for w in p.words() {
            if !w.in_h0() {
                return Err(Error::NotAdmissibleWord(w.clone()));
            }
            comps.push(w.to_composition()?);
        }
        let values = self.mzv_batch(&comps, n)?;
        let mut value = Float::with_val(self.prec, 0);
        let mut tail_bound = 0.0;
        for ((_, coeff), v) in p.terms().zip(&values) {
            value += coeff_to_float(coeff, self.prec) * &v.value;
            tail_bound += coeff.abs().to_f64_lossy() * v.tail_bound;
        }
        Ok(EvalResult {
            value,
            truncation: n,
            tail_bound,
        })
    }

    /// Checks `zeta(r) = 0` for each relation: passes when the residual is at
    /// most `slack` times the combined tail bound.
    pub fn verify(&self, relations: &[Relation], n: u64, slack: f64) -> Result<Vec<VerifyReport>> {
        let mut comps = BTreeSet::new();
        for r in relations {
            for w in r.element.words() {
                if w.in_h0() {
                    comps.insert(w.to_composition()?);
                }
            }
        }
        self.mzv_batch(&comps.into_iter().collect::<Vec<_>>(), n)?;
        relations
            .iter()
            .map(|r| {
                let e = self.zeta_of_poly(&r.element, n)?;
                Ok(VerifyReport::new(r.id(), e.to_f64(), slack * e.tail_bound))
            })
            .collect()
    }

    pub fn t_series(&self, c: &Composition, n: u64) -> Result<EvalResult> {
        Ok(self.st_batch(&[StSeries::T(c.clone())], n)?.remove(0))
    }

    pub fn s_series(&self, c: &Composition, m: u32, n: u64) -> Result<EvalResult> {
        Ok(self.st_batch(&[StSeries::S(c.clone(), m)], n)?.remove(0))
    }

    /// Evaluates `T` and `S` series with `n1 <= n`.
    ///
    /// For each `j`, `F_c(j) = sum_{n >= n1 > ... > nl > j} 1 / ((n1 - j) n1^k1 ... nl^kl)`
    /// is accumulated in `f64` (this is the `O(n^2)` part); the sums over `j`
    /// are taken at working precision. The remainder is estimated as twice
    /// the change between the cutoffs `n / 2` and `n`.
    pub fn st_batch(&self, series: &[StSeries], n: u64) -> Result<Vec<EvalResult>> {
        for s in series {
            s.check()?;
        }
        let heads: Vec<Composition> = series
            .iter()
            .map(|s| s.composition().clone())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let (full, half) = inner_st_sums(&heads, n as usize);
        let head_index: HashMap<&Composition, usize> =
            heads.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let prec = self.prec;
        let half_n = n / 2;
        Ok(series
            .iter()
            .map(|s| {
                let i = head_index[s.composition()];
                let (start, m) = match s {
                    StSeries::T(_) => (0, 0),
                    StSeries::S(_, m) => (1, *m),
                };
                let mut v = Float::with_val(prec, 0);
                let mut vh = Float::with_val(prec, 0);
                let mut weight = Float::new(prec);
                let mut term = Float::new(prec);
                for j in start..full[i].len() {
                    weight.assign(j.max(1));
                    weight.pow_assign(-(m as i32));
                    term.assign(&weight * full[i][j]);
                    v += &term;
                    if (j as u64) < half_n {
                        term.assign(&weight * half[i][j]);
                        vh += &term;
                    }
                }
                let change = Float::with_val(prec, &v - &vh).abs().to_f64();
                let rounding = v.to_f64().abs()
                    * (n as f64)
                    * f64::EPSILON
                    * (s.composition().len() as f64 + 2.0);
                EvalResult {
                    value: v,
                    truncation: n,
                    tail_bound: 2.0 * change + rounding,
                }
            })
            .collect())
    }
}

/// `F_c(j)` for `0 <= j < n` with `n1 <= n` and with `n1 <= n / 2`, for every
/// composition in `heads`.
fn inner_st_sums(heads: &[Composition], n: usize) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let tails: Vec<Composition> = heads.iter().map(Composition::tail).collect();
    let table = SuffixTable::new(&tails);
    let kmax = table.max_part().max(
        heads
            .iter()
            .map(|c| c.parts()[0] as usize)
            .max()
            .unwrap_or(1),
    );
    let inv: Vec<f64> = (0..=n)
        .map(|m| if m == 0 { 0.0 } else { 1.0 / m as f64 })
        .collect();
    let pow: Vec<Vec<f64>> = (0..=kmax)
        .map(|k| inv.iter().map(|&r| r.powi(k as i32)).collect())
        .collect();
    let head_parts: Vec<(usize, usize)> = heads
        .iter()
        .zip(&tails)
        .map(|(c, t)| (c.parts()[0] as usize, table.index[t]))
        .collect();
    let half_n = n / 2;
    let mut full = vec![vec![0.0; n]; heads.len()];
    let mut half = vec![vec![0.0; half_n]; heads.len()];
    let mut q = vec![0.0; table.comps.len()];
    let mut acc = vec![0.0; heads.len()];
    for j in 0..n {
        q.iter_mut().for_each(|v| *v = 0.0);
        q[table.empty] = 1.0;
        acc.iter_mut().for_each(|v| *v = 0.0);
        for m in j + 1..=n {
            // q[s] holds sum over m > n2 > ... > j of the suffix s.
            let gap = inv[m - j];
            for (a, &(k1, t)) in acc.iter_mut().zip(&head_parts) {
                *a += gap * pow[k1][m] * q[t];
            }
            if m == half_n {
                for (h, a) in half.iter_mut().zip(&acc) {
                    h[j] = *a;
                }
            }
            for i in 0..table.comps.len() {
                if i != table.empty {
                    let k = table.comps[i].parts()[0] as usize;
                    q[i] += pow[k][m] * q[table.tails[i]];
                }
            }
        }
        for (f, a) in full.iter_mut().zip(&acc) {
            f[j] = *a;
        }
    }
    (full, half)
}

/// `zeta(c)` at default precision.
pub fn mzv_eval(c: &Composition, n: u64) -> Result<EvalResult> {
    Evaluator::default().mzv(c, n)
}

/// `zeta(w)` for an admissible word at default precision.
pub fn mzv_eval_word(w: &Word, n: u64) -> Result<EvalResult> {
    if !w.in_h0() {
        return Err(Error::NotAdmissibleWord(w.clone()));
    }
    mzv_eval(&w.to_composition()?, n)
}

trait ToF64Lossy {
    fn to_f64_lossy(&self) -> f64;
}

impl ToF64Lossy for Coeff {
    fn to_f64_lossy(&self) -> f64 {
        let num: f64 = self.numer().to_string().parse().unwrap_or(f64::INFINITY);
        let den: f64 = self.denom().to_string().parse().unwrap_or(f64::INFINITY);
        num / den
    }
}
