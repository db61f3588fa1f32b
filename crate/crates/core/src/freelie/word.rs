//! Words over the two-letter alphabet `{E, F}` and the Lyndon words indexing
//! the basis of the free Lie algebra.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::LieError;

/// One of the two free generators. The alphabet order is `E < F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    E,
    F,
}

impl Generator {
    /// The other generator.
    pub fn swapped(self) -> Self {
        match self {
            Generator::E => Generator::F,
            Generator::F => Generator::E,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Generator::E => 'E',
            Generator::F => 'F',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'E' | 'e' => Some(Generator::E),
            'F' | 'f' => Some(Generator::F),
            _ => None,
        }
    }
}

/// Returns true if `letters` is strictly smaller than each of its proper
/// suffixes in lexicographic order.
pub fn is_lyndon(letters: &[Generator]) -> bool {
    !letters.is_empty() && (1..letters.len()).all(|k| letters < &letters[k..])
}

/// A Lyndon word over `{E, F}`.
///
/// The derived ordering is plain lexicographic order with a proper prefix
/// sorting before its extensions. The bracket algorithm depends on exactly
/// this order, so do not replace it with a degree-first order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LyndonWord {
    letters: Vec<Generator>,
}

impl LyndonWord {
    pub fn new(letters: Vec<Generator>) -> Result<Self, LieError> {
        if is_lyndon(&letters) {
            Ok(Self { letters })
        } else {
            Err(LieError::NotLyndon)
        }
    }

    pub(crate) fn new_unchecked(letters: Vec<Generator>) -> Self {
        debug_assert!(is_lyndon(&letters));
        Self { letters }
    }

    pub fn letter(g: Generator) -> Self {
        Self {
            letters: alloc::vec![g],
        }
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.letters.len()
    }

    /// `(number of E, number of F)`.
    pub fn bidegree(&self) -> (usize, usize) {
        let e = self.letters.iter().filter(|g| **g == Generator::E).count();
        (e, self.letters.len() - e)
    }

    /// Some(letter) for single-letter words.
    pub fn as_generator(&self) -> Option<Generator> {
        match self.letters.as_slice() {
            [g] => Some(*g),
            _ => None,
        }
    }

    /// Standard factorization `w = u v` where `v` is the longest proper
    /// suffix of `w` that is itself Lyndon. `None` for single letters.
    pub fn standard_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        if self.letters.len() < 2 {
            return None;
        }
        let split = (1..self.letters.len())
            .find(|&k| is_lyndon(&self.letters[k..]))
            .expect("the last letter is always a Lyndon suffix");
        Some((
            LyndonWord::new_unchecked(self.letters[..split].to_vec()),
            LyndonWord::new_unchecked(self.letters[split..].to_vec()),
        ))
    }

    /// Concatenation; the caller guarantees the result is Lyndon.
    pub(crate) fn concat(&self, other: &LyndonWord) -> LyndonWord {
        let mut letters = Vec::with_capacity(self.degree() + other.degree());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        LyndonWord::new_unchecked(letters)
    }

    /// The word with every letter swapped. Not Lyndon in general, so it is
    /// returned as raw letters.
    pub fn swapped_letters(&self) -> Vec<Generator> {
        self.letters.iter().map(|g| g.swapped()).collect()
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.letters {
            write!(f, "{}", g.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LyndonWord {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = s
            .chars()
            .map(|c| Generator::from_char(c).ok_or(LieError::Parse))
            .collect::<Result<Vec<_>, _>>()?;
        LyndonWord::new(letters)
    }
}

/// All Lyndon words of length `degree`, in lexicographic order.
///
/// Uses Duval's successor iteration, which visits the Lyndon words of length
/// at most `degree` in increasing order.
pub fn lyndon_basis(degree: usize) -> Result<Vec<LyndonWord>, LieError> {
    if degree == 0 {
        return Err(LieError::ZeroDegree);
    }
    let mut out = Vec::new();
    let mut w: Vec<Generator> = alloc::vec![Generator::E];
    loop {
        if w.len() == degree {
            out.push(LyndonWord::new_unchecked(w.clone()));
        }
        let m = w.len();
        while w.len() < degree {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&Generator::F) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last = Generator::F,
            None => break,
        }
    }
    Ok(out)
}

/// Lyndon words with exactly `e` letters `E` and `f` letters `F`, in
/// lexicographic order. Enumerates placements of the minority letter, so the
/// cost is polynomial when `min(e, f)` is small.
pub fn lyndon_words_with_bidegree(e: usize, f: usize) -> Vec<LyndonWord> {
    let n = e + f;
    if n == 0 {
        return Vec::new();
    }
    let (minority, count) = if f <= e {
        (Generator::F, f)
    } else {
        (Generator::E, e)
    };
    let majority = minority.swapped();
    let mut out = Vec::new();
    let mut positions: Vec<usize> = (0..count).collect();
    loop {
        let mut letters = alloc::vec![majority; n];
        for &p in &positions {
            letters[p] = minority;
        }
        if is_lyndon(&letters) {
            out.push(LyndonWord::new_unchecked(letters));
        }
        // advance to the next `count`-subset of 0..n
        let mut k = count;
        loop {
            if k == 0 {
                out.sort();
                return out;
            }
            k -= 1;
            if positions[k] < n - count + k {
                positions[k] += 1;
                for t in k + 1..count {
                    positions[t] = positions[t - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(s: &str) -> LyndonWord {
        s.parse().unwrap()
    }

    #[test]
    fn small_bases() {
        let d1: Vec<_> = lyndon_basis(1)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(d1, ["E", "F"]);
        let d2: Vec<_> = lyndon_basis(2)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(d2, ["EF"]);
        let d3: Vec<_> = lyndon_basis(3)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(d3, ["EEF", "EFF"]);
        assert!(lyndon_basis(0).is_err());
    }

    #[test]
    fn membership() {
        assert!(is_lyndon(&[Generator::E, Generator::E, Generator::F]));
        assert!(!is_lyndon(&[Generator::E, Generator::F, Generator::E]));
        assert!(!is_lyndon(&[Generator::E, Generator::E]));
        assert!("EFEFF".parse::<LyndonWord>().is_ok());
        assert!("EFEF".parse::<LyndonWord>().is_err());
    }

    #[test]
    fn standard_factorizations() {
        let (u, v) = w("EFF").standard_factorization().unwrap();
        assert_eq!((u.to_string(), v.to_string()), ("EF".into(), "F".into()));
        let (u, v) = w("EEF").standard_factorization().unwrap();
        assert_eq!((u.to_string(), v.to_string()), ("E".into(), "EF".into()));
        let (u, v) = w("EEFEF").standard_factorization().unwrap();
        assert_eq!((u.to_string(), v.to_string()), ("EEF".into(), "EF".into()));
        assert!(w("E").standard_factorization().is_none());
    }

    #[test]
    fn bidegree_restricted_matches_filter() {
        for n in 1..=12 {
            let all = lyndon_basis(n).unwrap();
            for e in 0..=n {
                let expected: Vec<_> = all
                    .iter()
                    .filter(|w| w.bidegree() == (e, n - e))
                    .cloned()
                    .collect();
                assert_eq!(
                    lyndon_words_with_bidegree(e, n - e),
                    expected,
                    "({e},{})",
                    n - e
                );
            }
        }
    }
}
