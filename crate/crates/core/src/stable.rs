//! Stable and strongly stable sets of words.
//!
//! A stable set `L` is a set of non-empty words such that for every factor
//! `w_{i,j} ∈ L` other than `w` itself, `w ∈ L` exactly when the word with
//! that factor struck out is in `L`. A strongly stable set `S` contains `φ`
//! and satisfies the same rule for arbitrary subwords.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;

use crate::cache::WordCache;
use crate::element::ModuleElement;
use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Phrase, Word};

/// Default cap on word length for cut enumeration.
pub const DEFAULT_CUT_CAP: usize = 14;

type Predicate = Arc<dyn Fn(&Word) -> bool + Send + Sync>;

#[derive(Clone)]
enum Kind {
    AllNonEmpty,
    LetterCountZero(Letter),
    LetterCountDivisible(Letter, u64),
    GroupWeightZero(BTreeMap<Letter, Vec<i64>>),
    Intersection(Vec<StableSet>),
    Custom(String, Predicate),
}

/// A stable set of non-empty words.
///
/// Clones share one antipode memo table, so reuse a value rather than
/// rebuilding it when computing many antipodes.
#[derive(Clone)]
pub struct StableSet {
    kind: Kind,
    cap: usize,
    pub(crate) antipodes: Arc<WordCache<ModuleElement<Phrase>>>,
}

impl StableSet {
    fn from_kind(kind: Kind) -> Self {
        StableSet {
            kind,
            cap: DEFAULT_CUT_CAP,
            antipodes: Arc::default(),
        }
    }

    /// All non-empty words.
    pub fn all() -> Self {
        Self::from_kind(Kind::AllNonEmpty)
    }

    /// Non-empty words in which `letter` does not occur.
    pub fn letter_count_zero(letter: Letter) -> Self {
        Self::from_kind(Kind::LetterCountZero(letter))
    }

    /// Non-empty words in which `letter` occurs a multiple of `n` times.
    pub fn letter_count_divisible(letter: Letter, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::parse(0, "divisor must be at least 1"));
        }
        Ok(Self::from_kind(Kind::LetterCountDivisible(letter, n)))
    }

    /// Non-empty words whose total weight in `Z^d` vanishes. Letters missing
    /// from `weights` have weight zero.
    pub fn group_weight_zero(weights: BTreeMap<Letter, Vec<i64>>) -> Result<Self> {
        let mut dims = weights.values().map(Vec::len);
        if let Some(d) = dims.next() {
            if dims.any(|e| e != d) {
                return Err(Error::parse(0, "weight vectors must share one dimension"));
            }
        }
        Ok(Self::from_kind(Kind::GroupWeightZero(weights)))
    }

    pub fn intersection(sets: Vec<StableSet>) -> Self {
        Self::from_kind(Kind::Intersection(sets))
    }

    /// A user predicate, trusted to satisfy the stability condition. It is
    /// never evaluated on `φ`; use [`verify_stability`] to test it.
    pub fn custom(name: impl Into<String>, predicate: impl Fn(&Word) -> bool + Send + Sync + 'static) -> Self {
        Self::from_kind(Kind::Custom(name.into(), Arc::new(predicate)))
    }

    /// Sets the longest word that cut enumeration accepts.
    pub fn with_length_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn length_cap(&self) -> usize {
        self.cap
    }

    pub(crate) fn check_cap(&self, len: usize) -> Result<()> {
        if len > self.cap {
            Err(Error::LengthCapExceeded { len, cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn contains(&self, w: &Word) -> bool {
        !w.is_empty() && self.contains_nonempty(w)
    }

    fn contains_nonempty(&self, w: &Word) -> bool {
        match &self.kind {
            Kind::AllNonEmpty => true,
            Kind::LetterCountZero(a) => w.count(a) == 0,
            Kind::LetterCountDivisible(a, n) => w.count(a) as u64 % n == 0,
            Kind::GroupWeightZero(weights) => {
                let d = weights.values().next().map_or(0, Vec::len);
                let mut total = vec![0i128; d];
                for letter in w.letters() {
                    if let Some(v) = weights.get(letter) {
                        for (t, x) in total.iter_mut().zip(v) {
                            *t += i128::from(*x);
                        }
                    }
                }
                total.iter().all(|t| *t == 0)
            }
            Kind::Intersection(sets) => sets.iter().all(|s| s.contains_nonempty(w)),
            Kind::Custom(_, p) => p(w),
        }
    }
}

impl fmt::Display for StableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::AllNonEmpty => f.write_str("all"),
            Kind::LetterCountZero(a) => write!(f, "zero:{a}"),
            Kind::LetterCountDivisible(a, n) => write!(f, "divisible:{a}:{n}"),
            Kind::GroupWeightZero(weights) => {
                f.write_str("weight:")?;
                for (k, (a, v)) in weights.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    let coords: Vec<String> = v.iter().map(i64::to_string).collect();
                    write!(f, "{a}={}", coords.join(":"))?;
                }
                Ok(())
            }
            Kind::Intersection(sets) => {
                f.write_str("intersect:")?;
                for (k, s) in sets.iter().enumerate() {
                    if k > 0 {
                        f.write_str("&")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
            Kind::Custom(name, _) => write!(f, "custom:{name}"),
        }
    }
}

impl fmt::Debug for StableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StableSet({self})")
    }
}

/// Parses `all`, `zero:A`, `divisible:A:N`, `weight:A=1:0,B=0:1` and
/// `intersect:d1&d2&...`.
impl FromStr for StableSet {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_stable(text.trim())
    }
}

fn letter_at(token: &str, position: usize) -> Result<Letter> {
    Letter::new(token).map_err(|_| Error::parse(position, format!("invalid letter {token:?}")))
}

fn parse_stable(text: &str) -> Result<StableSet> {
    if text == "all" {
        return Ok(StableSet::all());
    }
    let Some((head, rest)) = text.split_once(':') else {
        return Err(Error::parse(0, format!("unknown stable set {text:?}")));
    };
    let offset = head.len() + 1;
    match head {
        "zero" => Ok(StableSet::letter_count_zero(letter_at(rest, offset)?)),
        "divisible" => {
            let (a, n) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::parse(offset, "expected divisible:<letter>:<N>"))?;
            let n: u64 = n
                .parse()
                .map_err(|_| Error::parse(offset + a.len() + 1, format!("invalid divisor {n:?}")))?;
            StableSet::letter_count_divisible(letter_at(a, offset)?, n)
        }
        "weight" => {
            let mut weights = BTreeMap::new();
            let mut pos = offset;
            for item in rest.split(',') {
                let (a, v) = item
                    .split_once('=')
                    .ok_or_else(|| Error::parse(pos, "expected <letter>=<w1>:<w2>..."))?;
                let coords = v
                    .split(':')
                    .map(|x| x.trim().parse::<i64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::parse(pos + a.len() + 1, format!("invalid weight {v:?}")))?;
                weights.insert(letter_at(a.trim(), pos)?, coords);
                pos += item.len() + 1;
            }
            StableSet::group_weight_zero(weights)
        }
        "intersect" => {
            let mut sets = Vec::new();
            let mut pos = offset;
            for part in rest.split('&') {
                let set = parse_stable(part.trim()).map_err(|e| match e {
                    Error::Parse { position, message } => Error::parse(pos + position, message),
                    other => other,
                })?;
                sets.push(set);
                pos += part.len() + 1;
            }
            Ok(StableSet::intersection(sets))
        }
        _ => Err(Error::parse(0, format!("unknown stable set {head:?}"))),
    }
}

#[derive(Clone)]
enum StrongKind {
    AllWords,
    Adjoin(StableSet),
    Custom(String, Predicate),
}

/// A strongly stable set of words; always contains `φ`.
#[derive(Clone)]
pub struct StronglyStableSet {
    kind: StrongKind,
}

impl StronglyStableSet {
    pub fn all() -> Self {
        StronglyStableSet {
            kind: StrongKind::AllWords,
        }
    }

    /// `L ∪ {φ}` for a stable set `L`.
    pub fn adjoin_empty(l: StableSet) -> Self {
        StronglyStableSet {
            kind: StrongKind::Adjoin(l),
        }
    }

    /// A user predicate; `φ` is always a member regardless of it.
    pub fn custom(name: impl Into<String>, predicate: impl Fn(&Word) -> bool + Send + Sync + 'static) -> Self {
        StronglyStableSet {
            kind: StrongKind::Custom(name.into(), Arc::new(predicate)),
        }
    }

    pub fn contains(&self, w: &Word) -> bool {
        if w.is_empty() {
            return true;
        }
        match &self.kind {
            StrongKind::AllWords => true,
            StrongKind::Adjoin(l) => l.contains(w),
            StrongKind::Custom(_, p) => p(w),
        }
    }
}

impl fmt::Display for StronglyStableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            StrongKind::AllWords => f.write_str("all"),
            StrongKind::Adjoin(l) => write!(f, "adjoin:{l}"),
            StrongKind::Custom(name, _) => write!(f, "custom:{name}"),
        }
    }
}

impl fmt::Debug for StronglyStableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StronglyStableSet({self})")
    }
}

/// Parses `all` or `adjoin:<stable set>`.
impl FromStr for StronglyStableSet {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "all" {
            return Ok(StronglyStableSet::all());
        }
        match text.strip_prefix("adjoin:") {
            Some(rest) => parse_stable(rest).map(StronglyStableSet::adjoin_empty).map_err(|e| match e {
                Error::Parse { position, message } => Error::parse(position + 7, message),
                other => other,
            }),
            None => Err(Error::parse(0, format!("unknown strongly stable set {text:?}"))),
        }
    }
}

/// A witness that a predicate breaks stability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StabilityViolation {
    /// The predicate accepts the empty word.
    ContainsEmpty,
    /// `w_{i,j}` is in the set but membership of `w` and of
    /// `w_{1,i} w_{j,m+1}` differ.
    Factor { word: Word, i: usize, j: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub max_len: usize,
    pub words_checked: usize,
    pub counterexample: Option<StabilityViolation>,
}

impl StabilityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Exhaustively checks the stability condition on all words over
/// `alphabet` of length at most `max_len`.
pub fn verify_stability(l: &StableSet, alphabet: &Alphabet, max_len: usize) -> StabilityReport {
    let words = alphabet.words_up_to(max_len);
    let raw = |w: &Word| l.contains_nonempty(w);
    let accepts_empty = match &l.kind {
        Kind::Custom(_, p) => p(&Word::empty()),
        _ => false,
    };
    let counterexample = if accepts_empty {
        Some(StabilityViolation::ContainsEmpty)
    } else {
        words.par_iter().find_map_first(|w| {
            let m = w.len();
            let inw = raw(w);
            for i in 1..=m {
                for j in i + 1..=m + 1 {
                    if (i, j) == (1, m + 1) || !raw(&w.slice(i, j)) {
                        continue;
                    }
                    let rest = w.strike(i, j);
                    if inw != raw(&rest) {
                        return Some(StabilityViolation::Factor { word: w.clone(), i, j });
                    }
                }
            }
            None
        })
    };
    StabilityReport {
        max_len,
        words_checked: words.len(),
        counterexample,
    }
}

/// A witness that a predicate breaks strong stability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrongViolation {
    /// `φ` is not a member.
    MissingEmpty,
    /// The subword of `word` at `positions` (1-based) is a member, but
    /// `word` and the word left after deleting it disagree on membership.
    Subword { word: Word, positions: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongStabilityReport {
    pub max_len: usize,
    pub words_checked: usize,
    pub counterexample: Option<StrongViolation>,
}

impl StrongStabilityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Splits `w` by a bit mask into the selected subword and the remainder.
pub(crate) fn split_by_mask(w: &Word, mask: u64) -> (Word, Word) {
    let mut sub = Vec::new();
    let mut rest = Vec::new();
    for (k, a) in w.letters().iter().enumerate() {
        if mask >> k & 1 == 1 {
            sub.push(a.clone());
        } else {
            rest.push(a.clone());
        }
    }
    (Word::from_letters(sub), Word::from_letters(rest))
}

/// Exhaustively checks strong stability over all words of length at most
/// `max_len` and all of their subwords, taken as index subsets.
pub fn verify_strong_stability(s: &StronglyStableSet, alphabet: &Alphabet, max_len: usize) -> StrongStabilityReport {
    let words = alphabet.words_up_to(max_len);
    let member = |w: &Word| -> bool {
        match &s.kind {
            StrongKind::Custom(_, p) => p(w),
            _ => s.contains(w),
        }
    };
    let counterexample = if !member(&Word::empty()) {
        Some(StrongViolation::MissingEmpty)
    } else {
        words.par_iter().find_map_first(|w| {
            let inw = member(w);
            (0..1u64 << w.len()).find_map(|mask| {
                let (sub, rest) = split_by_mask(w, mask);
                (member(&sub) && member(&rest) != inw).then(|| StrongViolation::Subword {
                    word: w.clone(),
                    positions: (0..w.len()).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect(),
                })
            })
        })
    };
    StrongStabilityReport {
        max_len,
        words_checked: words.len(),
        counterexample,
    }
}
