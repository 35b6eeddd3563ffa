//! Ternary Smirnov words (words with no two equal adjacent letters) over the
//! alphabet `{θ, α, β}`, counted by endpoints and letter multiplicities.
//!
//! Four independent routes to the same numbers live here:
//!
//! * [`smirnov_count_dp`]: exact dynamic programme, the ground truth;
//! * [`smirnov_enumerate`]: explicit generation, for small totals;
//! * [`series::gf_coefficient`]: coefficients of the rational generating
//!   functions for words starting with `θ`;
//! * [`closed::smirnov_count_closed`]: binomial closed forms.
//!
//! The closed forms agree with the other three for every word of length at
//! most 6 and undercount some longer words; see [`closed`].

use std::fmt;
use std::str::FromStr;

use crate::arith::{self, Count};
use crate::error::{Error, Result};

pub mod bijection;
pub mod closed;
pub mod series;

pub use bijection::{decode_pair, encode_pair};
pub use closed::smirnov_count_closed;
pub use series::{gf_coefficient, GfTable, TruncatedSeries};

/// Default cap on the total length accepted by [`smirnov_enumerate`].
pub const DEFAULT_ENUMERATION_CAP: usize = 14;

/// A letter of the three-letter alphabet.
///
/// Variants are declared in name order (`alpha < beta < theta`), which is
/// the order used for lexicographic enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Alpha,
    Beta,
    Theta,
}

impl Letter {
    /// All letters in `(θ, α, β)` order, matching [`LetterCounts`].
    pub const ALL: [Letter; 3] = [Letter::Theta, Letter::Alpha, Letter::Beta];

    /// Position in `(θ, α, β)` order.
    pub fn index(self) -> usize {
        match self {
            Letter::Theta => 0,
            Letter::Alpha => 1,
            Letter::Beta => 2,
        }
    }

    pub fn from_index(i: usize) -> Letter {
        Letter::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            Letter::Theta => "theta",
            Letter::Alpha => "alpha",
            Letter::Beta => "beta",
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Letter::Theta => 'θ',
            Letter::Alpha => 'α',
            Letter::Beta => 'β',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theta" | "θ" => Ok(Letter::Theta),
            "alpha" | "α" => Ok(Letter::Alpha),
            "beta" | "β" => Ok(Letter::Beta),
            other => Err(Error::Domain(format!(
                "unknown letter {other:?}; expected theta, alpha or beta"
            ))),
        }
    }
}

/// Multiplicities `(n_θ, n_α, n_β)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LetterCounts {
    pub theta: u32,
    pub alpha: u32,
    pub beta: u32,
}

impl LetterCounts {
    pub fn new(theta: u32, alpha: u32, beta: u32) -> Self {
        LetterCounts { theta, alpha, beta }
    }

    pub fn get(&self, letter: Letter) -> u32 {
        self.as_array()[letter.index()]
    }

    pub fn as_array(&self) -> [u32; 3] {
        [self.theta, self.alpha, self.beta]
    }

    pub fn from_array(a: [u32; 3]) -> Self {
        LetterCounts::new(a[0], a[1], a[2])
    }

    pub fn total(&self) -> u32 {
        self.theta + self.alpha + self.beta
    }

    /// All count triples with the given total, in `(θ, α, β)` lexicographic
    /// order.
    pub fn with_total(total: u32) -> impl Iterator<Item = LetterCounts> {
        (0..=total).flat_map(move |k| {
            (0..=total - k).map(move |i| LetterCounts::new(k, i, total - k - i))
        })
    }
}

impl fmt::Display for LetterCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.theta, self.alpha, self.beta)
    }
}

/// A non-empty word with no two equal adjacent letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SmirnovWord(Vec<Letter>);

impl SmirnovWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Domain("a Smirnov word is non-empty".into()));
        }
        if let Some(pos) = letters.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::Domain(format!(
                "letters {} and {} are both {}",
                pos + 1,
                pos + 2,
                letters[pos]
            )));
        }
        Ok(SmirnovWord(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> Letter {
        self.0[0]
    }

    pub fn last(&self) -> Letter {
        self.0[self.0.len() - 1]
    }

    pub fn counts(&self) -> LetterCounts {
        let mut c = [0u32; 3];
        for l in &self.0 {
            c[l.index()] += 1;
        }
        LetterCounts::from_array(c)
    }
}

impl fmt::Display for SmirnovWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for SmirnovWord {
    type Err = Error;

    /// Parses either Greek symbols (`θαβ`) or comma-separated names
    /// (`theta,alpha,beta`).
    fn from_str(s: &str) -> Result<Self> {
        let letters = if s.contains(',') {
            s.split(',').map(|p| p.trim().parse()).collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_string().parse())
                .collect::<Result<Vec<_>>>()?
        };
        SmirnovWord::new(letters)
    }
}

/// Run lengths attached to the letters of a word, grouped by letter: the
/// `r`-th part of `theta` is the length of the `r`-th `θ`-run, and so on.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CompositionTriple {
    pub theta: Vec<usize>,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl CompositionTriple {
    pub fn parts(&self, letter: Letter) -> &[usize] {
        match letter {
            Letter::Theta => &self.theta,
            Letter::Alpha => &self.alpha,
            Letter::Beta => &self.beta,
        }
    }

    pub fn parts_mut(&mut self, letter: Letter) -> &mut Vec<usize> {
        match letter {
            Letter::Theta => &mut self.theta,
            Letter::Alpha => &mut self.alpha,
            Letter::Beta => &mut self.beta,
        }
    }

    /// Number of parts per letter.
    pub fn arity(&self) -> LetterCounts {
        LetterCounts::new(
            self.theta.len() as u32,
            self.alpha.len() as u32,
            self.beta.len() as u32,
        )
    }

    /// Block sizes `(sum θ-parts, sum α-parts, sum β-parts)`.
    pub fn sums(&self) -> [usize; 3] {
        [
            self.theta.iter().sum(),
            self.alpha.iter().sum(),
            self.beta.iter().sum(),
        ]
    }
}

/// Number of compositions of `n` into `m` positive parts, `C(n-1, m-1)`,
/// zero unless `1 <= m <= n`.
pub fn composition_count(m: i64, n: i64) -> Result<Count> {
    if m < 1 || n < 1 {
        return Ok(0);
    }
    arith::binomial(n - 1, m - 1)
}

/// All compositions of `n` into `m` positive parts, in lexicographic order.
pub fn compositions(m: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m == 0 || m > n {
        return out;
    }
    let mut parts = vec![1usize; m];
    parts[m - 1] = n - (m - 1);
    loop {
        out.push(parts.clone());
        // Advance: find the rightmost position (excluding the last) that can
        // grow, i.e. whose suffix still has slack.
        let mut i = m - 1;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            let suffix: usize = parts[i + 1..].iter().sum();
            if suffix > m - 1 - i {
                parts[i] += 1;
                for p in parts.iter_mut().take(m - 1).skip(i + 1) {
                    *p = 1;
                }
                let head: usize = parts[..m - 1].iter().sum();
                parts[m - 1] = n - head;
                advanced = true;
                break;
            }
        }
        if !advanced {
            return out;
        }
    }
}

/// Exact number of Smirnov words that start with `start`, end with `end`
/// and have the given multiplicities.
///
/// Tabulates `W(c, l)`, the number of such words with counts `c` that start
/// with `start` and end with `l`, over all `c` below `counts`.
pub fn smirnov_count_dp(start: Letter, end: Letter, counts: LetterCounts) -> Result<Count> {
    if counts.total() == 0 || counts.get(start) == 0 || counts.get(end) == 0 {
        return Ok(0);
    }
    let [n0, n1, n2] = counts.as_array().map(|v| v as usize);
    let (d1, d2) = (n1 + 1, n2 + 1);
    let idx = |a: usize, b: usize, c: usize| (a * d1 + b) * d2 + c;
    let mut table = vec![[0 as Count; 3]; (n0 + 1) * d1 * d2];

    let s = start.index();
    for a in 0..=n0 {
        for b in 0..=n1 {
            for c in 0..=n2 {
                let cur = [a, b, c];
                let total = a + b + c;
                if total == 0 {
                    continue;
                }
                let mut cell = [0 as Count; 3];
                for (l, slot) in cell.iter_mut().enumerate() {
                    if cur[l] == 0 {
                        continue;
                    }
                    if total == 1 {
                        *slot = Count::from(l == s);
                        continue;
                    }
                    let mut prev = cur;
                    prev[l] -= 1;
                    let row = &table[idx(prev[0], prev[1], prev[2])];
                    let mut acc: Count = 0;
                    for (p, &v) in row.iter().enumerate() {
                        if p != l {
                            acc = arith::add(acc, v)?;
                        }
                    }
                    *slot = acc;
                }
                table[idx(a, b, c)] = cell;
            }
        }
    }
    Ok(table[idx(n0, n1, n2)][end.index()])
}

/// Every Smirnov word with the given multiplicities, in lexicographic order
/// (`alpha < beta < theta`). Errors if the total exceeds `cap`.
pub fn smirnov_enumerate_with_cap(counts: LetterCounts, cap: usize) -> Result<Vec<SmirnovWord>> {
    let total = counts.total() as usize;
    if total > cap {
        return Err(Error::ResourceLimit {
            what: "word length",
            requested: total,
            cap,
        });
    }
    let mut out = Vec::new();
    if total == 0 {
        return Ok(out);
    }
    let mut remaining = counts.as_array();
    let mut word = Vec::with_capacity(total);
    extend_words(&mut word, &mut remaining, total, &mut out);
    Ok(out)
}

/// [`smirnov_enumerate_with_cap`] with [`DEFAULT_ENUMERATION_CAP`].
pub fn smirnov_enumerate(counts: LetterCounts) -> Result<Vec<SmirnovWord>> {
    smirnov_enumerate_with_cap(counts, DEFAULT_ENUMERATION_CAP)
}

fn extend_words(
    word: &mut Vec<Letter>,
    remaining: &mut [u32; 3],
    total: usize,
    out: &mut Vec<SmirnovWord>,
) {
    if word.len() == total {
        out.push(SmirnovWord(word.clone()));
        return;
    }
    for letter in [Letter::Alpha, Letter::Beta, Letter::Theta] {
        let i = letter.index();
        if remaining[i] == 0 || word.last() == Some(&letter) {
            continue;
        }
        remaining[i] -= 1;
        word.push(letter);
        extend_words(word, remaining, total, out);
        word.pop();
        remaining[i] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    fn lc(k: u32, i: u32, j: u32) -> LetterCounts {
        LetterCounts::new(k, i, j)
    }

    #[test]
    fn composition_count_examples() {
        assert_eq!(composition_count(2, 4).unwrap(), 3);
        for n in 1..20 {
            assert_eq!(composition_count(1, n).unwrap(), 1);
        }
        assert_eq!(composition_count(5, 3).unwrap(), 0);
        assert_eq!(composition_count(0, 3).unwrap(), 0);
        assert_eq!(composition_count(0, 0).unwrap(), 0);
        assert_eq!(composition_count(-1, 3).unwrap(), 0);
    }

    #[test]
    fn compositions_enumerator() {
        assert_eq!(compositions(2, 4), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert!(compositions(5, 3).is_empty());
        assert!(compositions(0, 0).is_empty());
        for n in 1..=12usize {
            for m in 0..=n + 1 {
                let all = compositions(m, n);
                assert_eq!(all.len() as u128, composition_count(m as i64, n as i64).unwrap());
                assert!(all.windows(2).all(|w| w[0] < w[1]));
                assert!(all.iter().all(|c| c.len() == m && c.iter().sum::<usize>() == n));
            }
        }
    }

    #[test]
    fn dp_examples() {
        assert_eq!(smirnov_count_dp(Theta, Theta, lc(2, 1, 1)).unwrap(), 2);
        assert_eq!(smirnov_count_dp(Theta, Theta, lc(1, 0, 0)).unwrap(), 1);
        assert_eq!(smirnov_count_dp(Theta, Beta, lc(1, 1, 1)).unwrap(), 1);
        assert_eq!(smirnov_count_dp(Theta, Theta, lc(0, 0, 0)).unwrap(), 0);
        assert_eq!(smirnov_count_dp(Theta, Theta, lc(2, 0, 0)).unwrap(), 0);
    }

    #[test]
    fn enumerate_examples() {
        let words = smirnov_enumerate(lc(1, 1, 0)).unwrap();
        let shown: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(shown, vec!["αθ", "θα"]);
        assert!(smirnov_enumerate(lc(2, 0, 0)).unwrap().is_empty());
        assert_eq!(smirnov_enumerate(lc(1, 1, 1)).unwrap().len(), 6);
        let words = smirnov_enumerate(lc(2, 1, 1)).unwrap();
        let tt: Vec<String> = words
            .iter()
            .filter(|w| w.first() == Theta && w.last() == Theta)
            .map(|w| w.to_string())
            .collect();
        assert_eq!(tt, vec!["θαβθ", "θβαθ"]);
    }

    #[test]
    fn enumerate_respects_cap() {
        assert!(matches!(
            smirnov_enumerate(lc(5, 5, 5)),
            Err(Error::ResourceLimit { requested: 15, cap: 14, .. })
        ));
        assert_eq!(smirnov_enumerate_with_cap(lc(1, 1, 0), 1).unwrap_err(), Error::ResourceLimit {
            what: "word length",
            requested: 2,
            cap: 1
        });
    }

    #[test]
    fn dp_agrees_with_enumeration() {
        for total in 0..=10 {
            for counts in LetterCounts::with_total(total) {
                let words = smirnov_enumerate(counts).unwrap();
                for s in Letter::ALL {
                    for e in Letter::ALL {
                        let n = words.iter().filter(|w| w.first() == s && w.last() == e).count();
                        assert_eq!(smirnov_count_dp(s, e, counts).unwrap(), n as u128, "{s}{e}{counts}");
                    }
                }
            }
        }
    }

    #[test]
    fn word_validation_and_parsing() {
        assert!(SmirnovWord::new(vec![]).is_err());
        assert!(SmirnovWord::new(vec![Theta, Theta]).is_err());
        let w: SmirnovWord = "θαθβθ".parse().unwrap();
        assert_eq!(w.counts(), lc(3, 1, 1));
        let w2: SmirnovWord = "theta,alpha,theta,beta,theta".parse().unwrap();
        assert_eq!(w, w2);
        assert!("θθ".parse::<SmirnovWord>().is_err());
        assert!("gamma".parse::<Letter>().is_err());
    }
}
