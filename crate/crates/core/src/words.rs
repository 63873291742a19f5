//! Letters, words and phrases, with their text syntax.
//!
//! A word is written as a juxtaposition of single-character letters (`ABA`)
//! or as comma-separated tokens when letters have several characters
//! (`Ab,Cd`). The empty word is `~`. A phrase is `(w1|w2|...|wk)` and the
//! empty phrase is `1`. Positions in parse errors are character offsets.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

const RESERVED: &[char] = &['|', '(', ')', ',', '~'];

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(Arc<str>);

impl Letter {
    pub fn new(symbol: &str) -> Result<Self> {
        if symbol.is_empty() || symbol.chars().any(|c| c.is_whitespace() || RESERVED.contains(&c)) {
            return Err(Error::InvalidLetter(symbol.to_string()));
        }
        Ok(Letter(Arc::from(symbol)))
    }

    pub fn symbol(&self) -> &str {
        &self.0
    }

    fn is_single_char(&self) -> bool {
        self.0.chars().nth(1).is_none()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A finite alphabet, kept sorted and free of duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet(Vec<Letter>);

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut v: Vec<Letter> = letters.into_iter().collect();
        v.sort();
        v.dedup();
        Alphabet(v)
    }

    /// `"ABC"` declares three one-character letters; `"Ab,Cd"` declares
    /// comma-separated tokens.
    pub fn parse(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        let letters = if spec.contains(',') {
            spec.split(',').map(|t| Letter::new(t.trim())).collect::<Result<Vec<_>>>()?
        } else {
            spec.chars()
                .map(|c| Letter::new(c.encode_utf8(&mut [0; 4])))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Alphabet::new(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, letter: &Letter) -> bool {
        self.0.binary_search(letter).is_ok()
    }

    pub fn letter(&self, symbol: &str) -> Option<&Letter> {
        self.0.iter().find(|l| l.symbol() == symbol)
    }

    fn has_multichar(&self) -> bool {
        self.0.iter().any(|l| !l.is_single_char())
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        parse_word_at(text, 0, Some(self))
    }

    pub fn parse_phrase(&self, text: &str) -> Result<Phrase> {
        parse_phrase_with(text, Some(self))
    }

    /// All words of length exactly `n`, in canonical order.
    pub fn words_of_length(&self, n: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..n {
            out = out
                .iter()
                .flat_map(|w| {
                    self.0.iter().map(move |a| {
                        let mut v = w.0.clone();
                        v.push(a.clone());
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }

    /// All words of length at most `max_len`, `φ` first, in canonical order.
    pub fn words_up_to(&self, max_len: usize) -> Vec<Word> {
        (0..=max_len).flat_map(|n| self.words_of_length(n)).collect()
    }
}

/// A finite sequence of letters; `φ` is the empty word.
///
/// Words are ordered by length first and then lexicographically, which is
/// the canonical order used for printing linear combinations.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The factor `w_{i,j} = w(i) ... w(j-1)` with 1-based indices,
    /// `1 <= i <= j <= len + 1`.
    pub fn factor(&self, i: usize, j: usize) -> Result<Word> {
        if i < 1 || i > j || j > self.len() + 1 {
            return Err(Error::IndexOutOfRange { i, j, len: self.len() });
        }
        Ok(self.slice(i, j))
    }

    /// Unchecked 1-based factor.
    pub(crate) fn slice(&self, i: usize, j: usize) -> Word {
        Word(self.0[i - 1..j - 1].to_vec())
    }

    /// `w_{1,i} w_{j,m+1}`: the word with the factor `w_{i,j}` struck out.
    pub(crate) fn strike(&self, i: usize, j: usize) -> Word {
        let mut v = Vec::with_capacity(self.len() - (j - i));
        v.extend_from_slice(&self.0[..i - 1]);
        v.extend_from_slice(&self.0[j - 1..]);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn count(&self, letter: &Letter) -> usize {
        self.0.iter().filter(|l| *l == letter).count()
    }

    pub fn map_letters(&self, map: &LetterMap) -> Result<Word> {
        self.0.iter().map(|l| map.apply(l)).collect::<Result<Vec<_>>>().map(Word)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("~");
        }
        let sep = if self.0.iter().all(Letter::is_single_char) { "" } else { "," };
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(sep)?;
            }
            f.write_str(l.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        parse_word_at(s, 0, None)
    }
}

/// Letters of `w` followed by letters of `x`.
pub fn concat_words(w: &Word, x: &Word) -> Word {
    w.concat(x)
}

/// 1-based factor `w_{i,j}`.
pub fn factor(w: &Word, i: usize, j: usize) -> Result<Word> {
    w.factor(i, j)
}

/// A finite sequence of words. The empty phrase `1` is the unit of
/// concatenation. A phrase is strict when none of its words is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Phrase(Vec<Word>);

impl Phrase {
    pub fn empty() -> Self {
        Phrase(Vec::new())
    }

    pub fn single(word: Word) -> Self {
        Phrase(vec![word])
    }

    pub fn from_words(words: Vec<Word>) -> Self {
        Phrase(words)
    }

    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn into_words(self) -> Vec<Word> {
        self.0
    }

    /// Number of words; this is the grading of the phrase algebra.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letter_count(&self) -> usize {
        self.0.iter().map(Word::len).sum()
    }

    pub fn is_strict(&self) -> bool {
        self.0.iter().all(|w| !w.is_empty())
    }

    pub fn concat(&self, other: &Phrase) -> Phrase {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Phrase(v)
    }

    pub fn map_letters(&self, map: &LetterMap) -> Result<Phrase> {
        self.0.iter().map(|w| w.map_letters(map)).collect::<Result<Vec<_>>>().map(Phrase)
    }
}

impl Ord for Phrase {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letter_count()
            .cmp(&other.letter_count())
            .then_with(|| self.len().cmp(&other.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Phrase {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Phrase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        f.write_str("(")?;
        for (k, w) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Phrase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Phrase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Phrase> {
        parse_phrase_with(s, None)
    }
}

/// Concatenation of word sequences.
pub fn phrase_product(p: &Phrase, q: &Phrase) -> Phrase {
    p.concat(q)
}

/// A letter-to-letter mapping, extended letter-wise to words and phrases.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LetterMap(BTreeMap<Letter, Letter>);

impl LetterMap {
    pub fn new(pairs: impl IntoIterator<Item = (Letter, Letter)>) -> Self {
        LetterMap(pairs.into_iter().collect())
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        Self::new(alphabet.letters().iter().map(|l| (l.clone(), l.clone())))
    }

    pub fn apply(&self, letter: &Letter) -> Result<Letter> {
        self.0
            .get(letter)
            .cloned()
            .ok_or_else(|| Error::UnmappedLetter(letter.to_string()))
    }
}

fn reserved_char(c: char) -> bool {
    c.is_whitespace() || RESERVED.contains(&c)
}

/// Parses a word whose first character sits at char offset `base` of the
/// whole input, so error positions refer to the original text.
pub(crate) fn parse_word_at(text: &str, base: usize, alphabet: Option<&Alphabet>) -> Result<Word> {
    let chars: Vec<char> = text.chars().collect();
    let lead = chars.iter().take_while(|c| c.is_whitespace()).count();
    let trail = chars.iter().rev().take_while(|c| c.is_whitespace()).count();
    if lead == chars.len() {
        return Err(Error::parse(base, "empty input; write the empty word as ~"));
    }
    let body = &chars[lead..chars.len() - trail];
    let start = base + lead;
    if body == ['~'] {
        return Ok(Word::empty());
    }
    let check = |letter: Letter, pos: usize| -> Result<Letter> {
        match alphabet {
            Some(a) if !a.contains(&letter) => {
                Err(Error::parse(pos, format!("letter {letter} is not in the declared alphabet")))
            }
            _ => Ok(letter),
        }
    };
    let mut letters = Vec::new();
    if body.contains(&',') {
        let mut pos = start;
        for token in body.split(|c| *c == ',') {
            let t: String = token.iter().collect();
            let trimmed = t.trim();
            let offset = pos + t.chars().take_while(|c| c.is_whitespace()).count();
            if trimmed.is_empty() {
                return Err(Error::parse(offset, "empty letter token"));
            }
            if let Some(k) = trimmed.chars().position(reserved_char) {
                return Err(Error::parse(offset + k, format!("reserved character in letter {trimmed:?}")));
            }
            letters.push(check(Letter::new(trimmed)?, offset)?);
            pos += token.len() + 1;
        }
    } else if let Some(a) = alphabet.filter(|a| a.has_multichar()) {
        let mut k = 0;
        while k < body.len() {
            let rest: String = body[k..].iter().collect();
            let best = a
                .letters()
                .iter()
                .filter(|l| rest.starts_with(l.symbol()))
                .max_by_key(|l| l.symbol().chars().count())
                .ok_or_else(|| Error::parse(start + k, "no letter of the declared alphabet starts here"))?;
            k += best.symbol().chars().count();
            letters.push(best.clone());
        }
    } else {
        for (k, c) in body.iter().enumerate() {
            if reserved_char(*c) {
                return Err(Error::parse(start + k, format!("unexpected character {c:?} in word")));
            }
            letters.push(check(Letter::new(c.encode_utf8(&mut [0; 4]))?, start + k)?);
        }
    }
    Ok(Word(letters))
}

pub(crate) fn parse_phrase_with(text: &str, alphabet: Option<&Alphabet>) -> Result<Phrase> {
    let chars: Vec<char> = text.chars().collect();
    let lead = chars.iter().take_while(|c| c.is_whitespace()).count();
    let trimmed = text.trim();
    if trimmed == "1" {
        return Ok(Phrase::empty());
    }
    if !trimmed.starts_with('(') {
        if let Some(k) = trimmed.chars().position(|c| c == ')' || c == '|') {
            return Err(Error::parse(lead + k, "phrase separators outside parentheses"));
        }
        return parse_word_at(text, 0, alphabet).map(Phrase::single);
    }
    let inner_chars: Vec<char> = trimmed.chars().collect();
    if inner_chars.last() != Some(&')') {
        return Err(Error::parse(lead + inner_chars.len(), "missing closing parenthesis"));
    }
    let inner = &inner_chars[1..inner_chars.len() - 1];
    if let Some(k) = inner.iter().position(|c| *c == '(' || *c == ')') {
        return Err(Error::parse(lead + 1 + k, "nested parentheses are not allowed in a phrase"));
    }
    let mut words = Vec::new();
    let mut pos = lead + 1;
    for part in inner.split(|c| *c == '|') {
        let s: String = part.iter().collect();
        words.push(parse_word_at(&s, pos, alphabet)?);
        pos += part.len() + 1;
    }
    Ok(Phrase(words))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Phrase {
        s.parse().unwrap()
    }

    #[test]
    fn enumeration_is_canonical() {
        let ab = Alphabet::parse("BA").unwrap();
        let words = ab.words_up_to(3);
        assert_eq!(words.len(), 15);
        assert!(words.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(words[0], Word::empty());
        assert_eq!(ab.words_of_length(2), vec![w("AA"), w("AB"), w("BA"), w("BB")]);
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factor(&w("ABA"), 1, 2).unwrap(), w("A"));
        assert_eq!(factor(&w("ABA"), 2, 2).unwrap(), Word::empty());
        assert_eq!(factor(&w("ABABB"), 2, 5).unwrap(), w("BAB"));
        assert_eq!(factor(&w("ABA"), 1, 4).unwrap(), w("ABA"));
    }

    #[test]
    fn factor_out_of_range() {
        assert!(matches!(factor(&w("ABA"), 0, 1), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(factor(&w("ABA"), 3, 2), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(factor(&w("ABA"), 2, 5), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn concatenation_examples() {
        assert_eq!(concat_words(&w("ABA"), &w("BB")), w("ABABB"));
        assert_eq!(concat_words(&Word::empty(), &w("AB")), w("AB"));
        assert_eq!(concat_words(&w("A"), &w("A")), w("AA"));
        assert_eq!(phrase_product(&p("(AB|C)"), &p("(D)")), p("(AB|C|D)"));
        assert_eq!(phrase_product(&Phrase::empty(), &p("(AB|C)")), p("(AB|C)"));
        assert_eq!(phrase_product(&p("(A)"), &p("(B)")), p("(A|B)"));
    }

    #[test]
    fn letter_maps() {
        let a = Letter::new("A").unwrap();
        let b = Letter::new("B").unwrap();
        let x = Letter::new("X").unwrap();
        let collapse = LetterMap::new([(a.clone(), x.clone()), (b.clone(), x.clone())]);
        assert_eq!(w("AB").map_letters(&collapse).unwrap(), w("XX"));
        let id = LetterMap::identity(&Alphabet::parse("AB").unwrap());
        assert_eq!(w("ABBA").map_letters(&id).unwrap(), w("ABBA"));
        let shift = LetterMap::new([(a, b)]);
        assert_eq!(p("(A|AA)").map_letters(&shift).unwrap(), p("(B|BB)"));
        assert_eq!(w("AC").map_letters(&shift), Err(Error::UnmappedLetter("C".into())));
    }

    #[test]
    fn rendering() {
        assert_eq!(Word::empty().to_string(), "~");
        assert_eq!(Phrase::empty().to_string(), "1");
        assert_eq!(p("(AB|~|C)").to_string(), "(AB|~|C)");
        assert_eq!(p("AB").to_string(), "(AB)");
        let multi = Alphabet::parse("Ab,Cd").unwrap();
        let word = multi.parse_word("AbCdAb").unwrap();
        assert_eq!(word.len(), 3);
        assert_eq!(word.to_string(), "Ab,Cd,Ab");
        assert_eq!("Ab,Cd,Ab".parse::<Word>().unwrap(), word);
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!("A B".parse::<Word>(), Err(Error::parse(1, "unexpected character ' ' in word")));
        match "(AB|C".parse::<Phrase>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        match "(AB|C)x".parse::<Phrase>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 7),
            other => panic!("unexpected {other:?}"),
        }
        match "(AB|C(D))".parse::<Phrase>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        match "(AB||C)".parse::<Phrase>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        let ab = Alphabet::parse("AB").unwrap();
        match ab.parse_word("ABC") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Letter::new("a|b").is_err());
        assert!(Letter::new("").is_err());
    }

    #[test]
    fn ordering_is_length_then_lexicographic() {
        let mut v = vec![w("B"), w("AA"), w("A"), Word::empty(), w("AB")];
        v.sort();
        assert_eq!(v, vec![Word::empty(), w("A"), w("B"), w("AA"), w("AB")]);
    }

    #[test]
    fn strictness() {
        assert!(p("(AB|C)").is_strict());
        assert!(!p("(AB|~)").is_strict());
        assert!(Phrase::empty().is_strict());
        assert_eq!(p("(AB|~|C)").letter_count(), 3);
        assert_eq!(p("(AB|~|C)").len(), 3);
    }
}
