//! Letters, finite words and prefix codes over the two-tier alphabet of the
//! Cantor space with `r` roots and `n` digits.
//!
//! A point of the space is an infinite word whose first letter is one of the
//! `r` dotted root letters `.0 .. .(r-1)` and whose remaining letters are
//! digits `0 .. n-1`. Finite words are either digit words (possibly empty) or
//! rooted words: one leading root letter followed by digits.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::WordError;

/// The pair `(n, r)` with `1 <= r < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    n: u32,
    r: u32,
}

impl Alphabet {
    pub fn new(n: u32, r: u32) -> Result<Self, WordError> {
        if n < 2 || r < 1 || r >= n {
            return Err(WordError::BadAlphabet { n, r });
        }
        Ok(Alphabet { n, r })
    }

    /// Number of digits.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of root letters.
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn contains(&self, letter: Letter) -> bool {
        match letter {
            Letter::Root(k) => k < self.r,
            Letter::Digit(d) => d < self.n,
        }
    }

    /// Checks that every letter of `word` belongs to this alphabet.
    pub fn check(&self, word: &Word) -> Result<(), WordError> {
        match word.letters().iter().find(|l| !self.contains(**l)) {
            Some(&letter) => Err(WordError::OutOfAlphabet { letter, n: self.n, r: self.r }),
            None => Ok(()),
        }
    }

    /// [`Word::relate`] after checking both words belong to the alphabet.
    pub fn relate(&self, a: &Word, b: &Word) -> Result<Relation, WordError> {
        self.check(a)?;
        self.check(b)?;
        Ok(a.relate(b))
    }

    pub fn roots(&self) -> impl Iterator<Item = Letter> {
        (0..self.r).map(Letter::Root)
    }

    pub fn digits(&self) -> impl Iterator<Item = Letter> {
        (0..self.n).map(Letter::Digit)
    }

    /// Parses a whitespace separated word and checks it against the alphabet.
    pub fn parse_word(&self, s: &str) -> Result<Word, WordError> {
        let w: Word = s.parse()?;
        self.check(&w)?;
        Ok(w)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} r={}", self.n, self.r)
    }
}

/// A root letter `.k` or a digit `d`.
///
/// The derived order puts every root letter before every digit, which is the
/// letter order used for shortlex comparison and canonical numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Root(u32),
    Digit(u32),
}

impl Letter {
    pub fn is_root(self) -> bool {
        matches!(self, Letter::Root(_))
    }

    pub fn is_digit(self) -> bool {
        matches!(self, Letter::Digit(_))
    }

    pub fn value(self) -> u32 {
        match self {
            Letter::Root(k) | Letter::Digit(k) => k,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Root(k) => write!(f, ".{k}"),
            Letter::Digit(d) => write!(f, "{d}"),
        }
    }
}

impl FromStr for Letter {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WordError::BadToken(s.to_string());
        if let Some(rest) = s.strip_prefix('.') {
            if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            rest.parse().map(Letter::Root).map_err(|_| bad())
        } else {
            if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            s.parse().map(Letter::Digit).map_err(|_| bad())
        }
    }
}

/// How two finite words sit in the prefix order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    /// The left word is a proper prefix of the right one.
    LeftPrefix,
    /// The right word is a proper prefix of the left one.
    RightPrefix,
    Incomparable,
}

/// A finite word. A root letter may only occur once, at position 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Result<Self, WordError> {
        if letters.iter().skip(1).any(|l| l.is_root()) {
            return Err(WordError::MisplacedRoot);
        }
        Ok(Word(letters))
    }

    pub fn digits<I: IntoIterator<Item = u32>>(ds: I) -> Self {
        Word(ds.into_iter().map(Letter::Digit).collect())
    }

    /// A rooted word `.root d0 d1 ...`.
    pub fn rooted<I: IntoIterator<Item = u32>>(root: u32, ds: I) -> Self {
        let mut v = vec![Letter::Root(root)];
        v.extend(ds.into_iter().map(Letter::Digit));
        Word(v)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
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

    pub fn is_rooted(&self) -> bool {
        self.0.first().is_some_and(|l| l.is_root())
    }

    /// True for words made only of digits, including the empty word.
    pub fn is_digit_word(&self) -> bool {
        self.0.iter().all(|l| l.is_digit())
    }

    /// Number of digit letters, i.e. the depth of the cone this word names.
    pub fn depth(&self) -> usize {
        self.0.iter().filter(|l| l.is_digit()).count()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Concatenation. Panics if `tail` starts with a root letter and `self`
    /// is nonempty, since the result would not be a word.
    pub fn concat(&self, tail: &Word) -> Word {
        assert!(
            self.is_empty() || tail.is_digit_word(),
            "cannot append {tail} to nonempty {self}"
        );
        let mut v = Vec::with_capacity(self.len() + tail.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&tail.0);
        Word(v)
    }

    pub fn push(&mut self, l: Letter) {
        assert!(self.0.is_empty() || l.is_digit(), "root letter after position 0");
        self.0.push(l);
    }

    pub fn pop(&mut self) -> Option<Letter> {
        self.0.pop()
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn relate(&self, other: &Word) -> Relation {
        let common = self.common_prefix_len(other);
        match (common == self.len(), common == other.len()) {
            (true, true) => Relation::Equal,
            (true, false) => Relation::LeftPrefix,
            (false, true) => Relation::RightPrefix,
            (false, false) => Relation::Incomparable,
        }
    }

    pub fn is_comparable(&self, other: &Word) -> bool {
        self.relate(other) != Relation::Incomparable
    }

    fn common_prefix_len(&self, other: &Word) -> usize {
        self.0.iter().zip(&other.0).take_while(|(a, b)| a == b).count()
    }

    /// Longest common prefix.
    pub fn common_prefix(&self, other: &Word) -> Word {
        Word(self.0[..self.common_prefix_len(other)].to_vec())
    }

    /// `self - prefix`: the word `t` with `prefix · t = self`.
    pub fn subtract(&self, prefix: &Word) -> Result<Word, WordError> {
        if !prefix.is_prefix_of(self) {
            return Err(WordError::NotAPrefix { prefix: prefix.clone(), word: self.clone() });
        }
        Ok(Word(self.0[prefix.len()..].to_vec()))
    }

    /// The first `len` letters (or the whole word if shorter).
    pub fn truncate_to(&self, len: usize) -> Word {
        Word(self.0[..len.min(self.len())].to_vec())
    }

    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    /// Whitespace separated tokens; `-` alone is the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens.is_empty() || tokens == ["-"] {
            return Ok(Word::empty());
        }
        let letters = tokens.iter().map(|t| t.parse()).collect::<Result<Vec<Letter>, _>>()?;
        Word::new(letters)
    }
}

/// Why a list of words fails to be a complete prefix code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeDefect {
    NotRooted { index: usize },
    OutOfAlphabet { index: usize },
    Comparable { first: usize, second: usize },
    /// The Kraft sum `sum n^-(depth)` differs from `r`; stored as
    /// `numerator / n^max_depth`.
    Incomplete { numerator: BigUint, denominator: BigUint, expected: u32 },
}

impl fmt::Display for CodeDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeDefect::NotRooted { index } => write!(f, "word {index} does not start with a root letter"),
            CodeDefect::OutOfAlphabet { index } => write!(f, "word {index} uses a letter outside the alphabet"),
            CodeDefect::Comparable { first, second } => {
                write!(f, "words {first} and {second} are comparable in the prefix order")
            }
            CodeDefect::Incomplete { numerator, denominator, expected } => write!(
                f,
                "Kraft sum is {numerator}/{denominator}, expected {expected}"
            ),
        }
    }
}

/// An ordered list of rooted words, intended to be a maximal antichain.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrefixCode(pub Vec<Word>);

impl PrefixCode {
    pub fn words(&self) -> &[Word] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The trivial code: one word per root letter.
    pub fn roots(a: Alphabet) -> Self {
        PrefixCode(a.roots().map(Word::letter).collect())
    }

    /// Checks the code is a pairwise incomparable set of rooted words whose
    /// cones cover the space, reporting the first defect found.
    pub fn validate(&self, a: Alphabet) -> Result<(), CodeDefect> {
        self.validate_counts(a.n(), a.r())
    }

    /// [`PrefixCode::validate`] for `n` digits and `r` roots without the
    /// `r < n` restriction of [`Alphabet`].
    pub fn validate_counts(&self, n: u32, r: u32) -> Result<(), CodeDefect> {
        for (index, w) in self.0.iter().enumerate() {
            if !w.is_rooted() {
                return Err(CodeDefect::NotRooted { index });
            }
            let inside = w.letters().iter().all(|l| match *l {
                Letter::Root(k) => k < r,
                Letter::Digit(d) => d < n,
            });
            if !inside {
                return Err(CodeDefect::OutOfAlphabet { index });
            }
        }
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                if self.0[i].is_comparable(&self.0[j]) {
                    return Err(CodeDefect::Comparable { first: i, second: j });
                }
            }
        }
        let max_depth = self.0.iter().map(Word::depth).max().unwrap_or(0);
        let base = BigUint::from(n);
        let denominator = base.pow(max_depth as u32);
        let numerator: BigUint =
            self.0.iter().map(|w| base.pow((max_depth - w.depth()) as u32)).sum();
        if numerator != &denominator * r {
            return Err(CodeDefect::Incomplete { numerator, denominator, expected: r });
        }
        Ok(())
    }

    pub fn is_valid(&self, a: Alphabet) -> bool {
        self.validate(a).is_ok()
    }
}

/// An eventually periodic point `u · v^ω`.
///
/// Always kept in normal form: `v` is primitive and the preperiod is as short
/// as possible, so structural equality is equality of points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EventuallyPeriodicPoint {
    preperiod: Word,
    period: Word,
}

impl EventuallyPeriodicPoint {
    pub fn new(preperiod: Word, period: Word) -> Result<Self, WordError> {
        if period.is_empty() {
            return Err(WordError::EmptyPeriod);
        }
        if !period.is_digit_word() {
            return Err(WordError::MisplacedRoot);
        }
        let mut p = EventuallyPeriodicPoint { preperiod, period };
        p.normalize();
        Ok(p)
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    fn normalize(&mut self) {
        let v = &self.period.0;
        let len = v.len();
        let p = (1..=len)
            .find(|&p| len.is_multiple_of(p) && (p..len).all(|i| v[i] == v[i - p]))
            .unwrap_or(len);
        self.period.0.truncate(p);
        while let (Some(a), Some(b)) = (self.preperiod.last(), self.period.last()) {
            if a != b {
                break;
            }
            self.preperiod.0.pop();
            self.period.0.rotate_right(1);
        }
    }

    /// The first `len` letters of the point.
    pub fn prefix(&self, len: usize) -> Word {
        let mut v: Vec<Letter> = self.preperiod.0.iter().take(len).copied().collect();
        let mut cycle = self.period.0.iter().cycle();
        while v.len() < len {
            v.push(*cycle.next().unwrap());
        }
        Word(v)
    }
}

impl fmt::Display for EventuallyPeriodicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.preperiod, self.period)
    }
}

impl FromStr for EventuallyPeriodicPoint {
    type Err = WordError;

    /// `u | v` with both sides in word token syntax.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (u, v) = s.split_once('|').ok_or_else(|| WordError::BadToken(s.to_string()))?;
        EventuallyPeriodicPoint::new(u.parse()?, v.parse()?)
    }
}
