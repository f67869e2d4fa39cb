use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// A generator or its inverse, packed as `2 * index + inverse`.
///
/// The derived order is the default letter order
/// `a_1 < a_1^-1 < a_2 < a_2^-1 < ...`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u16);

impl Letter {
    pub const fn new(index: usize, inverse: bool) -> Self {
        Letter((index as u16) << 1 | inverse as u16)
    }

    pub const fn gen(index: usize) -> Self {
        Self::new(index, false)
    }

    pub const fn inv(index: usize) -> Self {
        Self::new(index, true)
    }

    pub const fn from_code(code: u16) -> Self {
        Letter(code)
    }

    pub const fn code(self) -> u16 {
        self.0
    }

    pub const fn index(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub const fn is_inverse(self) -> bool {
        self.0 & 1 == 1
    }

    pub const fn inverse(self) -> Self {
        Letter(self.0 ^ 1)
    }

    /// All `2k` letters over `k` generators, in default order.
    pub fn alphabet(rank: usize) -> Vec<Letter> {
        (0..2 * rank as u16).map(Letter).collect()
    }

    pub fn from_char(c: char) -> Option<Self> {
        if c.is_ascii_lowercase() {
            Some(Letter::gen((c as u8 - b'a') as usize))
        } else if c.is_ascii_uppercase() {
            Some(Letter::inv((c as u8 - b'A') as usize))
        } else {
            None
        }
    }

    pub fn to_char(self) -> char {
        let base = if self.is_inverse() { b'A' } else { b'a' };
        (base + self.index() as u8) as char
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.index() < 26 {
            write!(f, "{}", self.to_char())
        } else {
            write!(f, "x{}{}", self.index(), if self.is_inverse() { "'" } else { "" })
        }
    }
}

/// An explicit total order on letters, given as a rank per letter code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterOrder {
    rank: Vec<usize>,
}

impl LetterOrder {
    /// The default order `a_1 < a_1^-1 < a_2 < ...`.
    pub fn standard(rank: usize) -> Self {
        Self { rank: (0..2 * rank).collect() }
    }

    /// Order given by listing letters from least to greatest. Must list every
    /// letter of the alphabet exactly once.
    pub fn from_sequence(letters: &[Letter]) -> Self {
        let mut rank = vec![usize::MAX; letters.len()];
        for (r, l) in letters.iter().enumerate() {
            let code = l.code() as usize;
            if code >= rank.len() {
                rank.resize(code + 1, usize::MAX);
            }
            rank[code] = r;
        }
        Self { rank }
    }

    pub fn rank(&self, l: Letter) -> usize {
        self.rank.get(l.code() as usize).copied().unwrap_or(usize::MAX)
    }

    pub fn compare(&self, x: Letter, y: Letter) -> Ordering {
        self.rank(x).cmp(&self.rank(y)).then(x.cmp(&y))
    }
}

/// A finite sequence of letters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Lowercase letters are generators, uppercase their inverses: `"aB"`.
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| Letter::from_char(c).ok_or_else(|| Error::Config(format!("bad letter {c:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Word)
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

    /// Rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        if self.is_empty() {
            return self.clone();
        }
        let mut v = self.0.clone();
        v.rotate_left(k % self.len());
        Word(v)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn power(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// Checks every letter against an alphabet of `rank` generators.
    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|l| l.index() >= rank) {
            Some(l) => Err(Error::InvalidLetter { index: l.index(), size: rank }),
            None => Ok(()),
        }
    }

    /// Least rotation under the default letter order.
    pub fn least_rotation(&self) -> Word {
        self.rotate(least_rotation_index(&self.0))
    }

    pub fn least_rotation_with(&self, order: &LetterOrder) -> Word {
        self.rotate(least_rotation_index_by(&self.0, |x, y| order.compare(*x, *y)))
    }

    pub fn is_primitive(&self) -> Result<bool> {
        is_primitive(&self.0)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{l:?}")?;
        }
        Ok(())
    }
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
pub fn least_rotation_index<T: Ord>(s: &[T]) -> usize {
    least_rotation_index_by(s, T::cmp)
}

pub fn least_rotation_index_by<T>(s: &[T], mut cmp: impl FnMut(&T, &T) -> Ordering) -> usize {
    let n = s.len();
    if n < 2 {
        return 0;
    }
    let at = |i: usize| &s[i % n];
    let mut fail = vec![-1isize; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = fail[j - k - 1];
        while i != -1 {
            let probe = at(k + i as usize + 1);
            match cmp(sj, probe) {
                Ordering::Equal => break,
                Ordering::Less => k = j - i as usize - 1,
                Ordering::Greater => {}
            }
            i = fail[i as usize];
        }
        if i == -1 && cmp(sj, at(k)) != Ordering::Equal {
            if cmp(sj, at(k)) == Ordering::Less {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k % n
}

/// True iff `s` is not a proper power `v^k`, `k > 1`.
///
/// Uses the smallest period from the prefix function: `s` is a proper power
/// exactly when that period divides `|s|` and is shorter than it.
pub fn is_primitive<T: Eq>(s: &[T]) -> Result<bool> {
    let n = s.len();
    if n == 0 {
        return Err(Error::EmptyWord);
    }
    let mut pi = vec![0usize; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    let period = n - pi[n - 1];
    Ok(period == n || !n.is_multiple_of(period))
}
