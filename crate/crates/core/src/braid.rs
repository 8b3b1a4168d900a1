//! Positive braid words and the word-level transformations.
//!
//! A word is stored as 1-based Artin generator indices over a fixed number of
//! strands. All operations return fresh words.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A positive braid word `a_{s_1} ... a_{s_l}` on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<u32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<u32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::ZeroStrands);
        }
        if let Some(&bad) = letters.iter().find(|&&k| k == 0 || k as usize >= strands) {
            return Err(Error::GeneratorOutOfRange {
                generator: bad as i64,
                strands,
            });
        }
        Ok(BraidWord { strands, letters })
    }

    /// The trivial braid on `strands` strands.
    pub fn trivial(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    /// Parses whitespace- or comma-separated tokens `a<k>` or bare `k`.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::ZeroStrands);
        }
        let mut letters = Vec::new();
        for token in text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            let digits = token
                .strip_prefix('a')
                .or_else(|| token.strip_prefix('A'))
                .unwrap_or(token);
            let k: i64 = digits
                .parse()
                .map_err(|_| Error::MalformedToken(token.to_string()))?;
            if k < 1 || k >= strands as i64 {
                return Err(Error::GeneratorOutOfRange {
                    generator: k,
                    strands,
                });
            }
            letters.push(k as u32);
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Occurrence count of each generator; index `k - 1` holds `#a_k`.
    pub fn generator_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.strands.saturating_sub(1)];
        for &k in &self.letters {
            counts[k as usize - 1] += 1;
        }
        counts
    }

    pub fn count_of(&self, generator: u32) -> usize {
        self.letters.iter().filter(|&&k| k == generator).count()
    }

    /// True when every generator `a_1 .. a_{b-1}` occurs at least once.
    pub fn uses_all_generators(&self) -> bool {
        self.generator_counts().iter().all(|&c| c > 0)
    }

    /// First Betti number of the closure: `l - b + c`, where `c` is one plus
    /// the number of unused generators.
    pub fn betti(&self) -> usize {
        let unused = self.generator_counts().iter().filter(|&&c| c == 0).count();
        self.letters.len() + 1 + unused - self.strands
    }

    pub fn permutation(&self) -> StrandPermutation {
        let mut image: Vec<usize> = (1..=self.strands).collect();
        // image[p - 1] tracks where the strand entering at position p sits.
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &k in &self.letters {
            let i = k as usize - 1;
            at.swap(i, i + 1);
        }
        for (pos, &strand) in at.iter().enumerate() {
            image[strand] = pos + 1;
        }
        StrandPermutation { image }
    }

    /// Number of link components of the closure.
    pub fn components(&self) -> usize {
        self.permutation().cycle_count()
    }

    /// For positive braids the closure is an unlink exactly when `b1 = 0`.
    pub fn is_unlink_closure(&self) -> bool {
        self.betti() == 0
    }

    /// Strand blocks `(first, last)` (1-based, inclusive) separated by unused
    /// generators.
    pub fn split_blocks(&self) -> Vec<(usize, usize)> {
        let counts = self.generator_counts();
        let mut blocks = Vec::new();
        let mut lo = 1;
        for (idx, &c) in counts.iter().enumerate() {
            if c == 0 {
                let k = idx + 1;
                blocks.push((lo, k));
                lo = k + 1;
            }
        }
        blocks.push((lo, self.strands));
        blocks
    }

    /// Splits the word at every unused generator. Each part is reindexed to
    /// start at `a_1`; the closure is the split union of the parts' closures.
    pub fn split_decompose(&self) -> Vec<BraidWord> {
        self.split_blocks()
            .into_iter()
            .map(|(lo, hi)| {
                let letters = self
                    .letters
                    .iter()
                    .filter(|&&k| (k as usize) >= lo && (k as usize) < hi)
                    .map(|&k| k - lo as u32 + 1)
                    .collect();
                BraidWord {
                    strands: hi - lo + 1,
                    letters,
                }
            })
            .collect()
    }

    /// Replaces every `a_3` by `a_1` in a 4-strand word.
    pub fn substitute_a3_to_a1(&self) -> Result<BraidWord> {
        self.require_strands(4)?;
        let letters = self
            .letters
            .iter()
            .map(|&k| if k == 3 { 1 } else { k })
            .collect();
        Ok(BraidWord {
            strands: 4,
            letters,
        })
    }

    /// Removes one letter; on the closure this is the smoothing of a crossing.
    pub fn delete_letter(&self, position: usize) -> Result<BraidWord> {
        if position >= self.letters.len() {
            return Err(Error::IndexOutOfRange {
                index: position,
                len: self.letters.len(),
            });
        }
        let mut letters = self.letters.clone();
        letters.remove(position);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// `Delta^count * self` with `Delta = a1 a2 a1` on three strands.
    pub fn prepend_half_twists(&self, count: usize) -> Result<BraidWord> {
        self.require_strands(3)?;
        let mut letters = Vec::with_capacity(3 * count + self.letters.len());
        for _ in 0..count {
            letters.extend_from_slice(&[1, 2, 1]);
        }
        letters.extend_from_slice(&self.letters);
        Ok(BraidWord {
            strands: 3,
            letters,
        })
    }

    /// For every generator `a_k` with `k = i (mod 4)`, keeps only its
    /// leftmost occurrence.
    pub fn appendix_smooth(&self, i: u32) -> Result<BraidWord> {
        if !(1..=4).contains(&i) {
            return Err(Error::PreconditionViolated("residue i must be in 1..=4"));
        }
        let mut seen = vec![false; self.strands];
        let letters = self
            .letters
            .iter()
            .copied()
            .filter(|&k| {
                if k % 4 != i % 4 {
                    return true;
                }
                !core::mem::replace(&mut seen[k as usize], true)
            })
            .collect();
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Cyclic rotation: the word starting at letter `shift`.
    pub fn rotate(&self, shift: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let s = shift % letters.len();
            letters.rotate_left(s);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// The symmetry `a_i -> a_{b-i}`.
    pub fn flip(&self) -> BraidWord {
        let b = self.strands as u32;
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&k| b - k).collect(),
        }
    }

    /// Smallest representative under cyclic rotation and flip.
    pub fn canonical_key(&self) -> CanonicalKey {
        let n = self.letters.len();
        let b = self.strands as u32;
        let mut best: (bool, usize) = (false, 0);
        let letter = |flipped: bool, shift: usize, idx: usize| -> u32 {
            let k = self.letters[(shift + idx) % n];
            if flipped {
                b - k
            } else {
                k
            }
        };
        for flipped in [false, true] {
            for shift in 0..n {
                if (flipped, shift) == (false, 0) {
                    continue;
                }
                let ord = (0..n)
                    .map(|idx| letter(flipped, shift, idx).cmp(&letter(best.0, best.1, idx)))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal);
                if ord == Ordering::Less {
                    best = (flipped, shift);
                }
            }
        }
        let letters = (0..n).map(|idx| letter(best.0, best.1, idx)).collect();
        CanonicalKey {
            strands: self.strands,
            letters,
        }
    }

    /// True when this word is the representative of its canonical class.
    pub fn is_canonical(&self) -> bool {
        self.canonical_key().letters == self.letters
    }

    fn require_strands(&self, expected: usize) -> Result<()> {
        if self.strands != expected {
            return Err(Error::WrongStrandCount {
                expected,
                found: self.strands,
            });
        }
        Ok(())
    }
}

impl fmt::Display for BraidWord {
    /// Compact form `B<b>:<k1>,<k2>,...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for (i, k) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let rest = s
            .strip_prefix('B')
            .or_else(|| s.strip_prefix('b'))
            .ok_or_else(|| Error::MalformedToken(s.to_string()))?;
        let (strands, letters) = rest
            .split_once(':')
            .ok_or_else(|| Error::MalformedToken(s.to_string()))?;
        let strands: usize = strands
            .trim()
            .parse()
            .map_err(|_| Error::MalformedToken(strands.to_string()))?;
        BraidWord::parse(letters, strands)
    }
}

/// Key identifying a word up to cyclic rotation and the flip symmetry.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    strands: usize,
    letters: Vec<u32>,
}

impl CanonicalKey {
    pub fn to_word(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.clone(),
        }
    }
}

/// Permutation of strand positions induced by a braid; `image[p-1]` is the
/// bottom position where the strand starting at top position `p` ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandPermutation {
    image: Vec<usize>,
}

impl StrandPermutation {
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.image[p] - 1;
            }
        }
        cycles
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(a1^2 a2^2)^(2n+1)` on 3 strands.
    Alpha,
    /// `a2 (a1^2 a2^2)^(2n+1)` on 3 strands.
    AlphaTilde,
    /// `(a1 a3 a2^2)^(2n+1)` on 4 strands.
    Beta,
    /// `a2 (a1 a3 a2^2)^(2n+1)` on 4 strands.
    BetaTilde,
    /// `(a1 ... a_{n-1})^m` on `n` strands, closing to `T(n, m)`.
    Torus,
}

impl Family {
    pub const EXAMPLES: [Family; 4] = [
        Family::Alpha,
        Family::AlphaTilde,
        Family::Beta,
        Family::BetaTilde,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Alpha => "alpha",
            Family::AlphaTilde => "alpha_tilde",
            Family::Beta => "beta",
            Family::BetaTilde => "beta_tilde",
            Family::Torus => "torus",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "alpha" => Ok(Family::Alpha),
            "alpha_tilde" => Ok(Family::AlphaTilde),
            "beta" => Ok(Family::Beta),
            "beta_tilde" => Ok(Family::BetaTilde),
            "torus" => Ok(Family::Torus),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A named family member; `m` is only meaningful for [`Family::Torus`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub m: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec { family, n, m: 1 }
    }

    pub fn torus(n: usize, m: usize) -> Self {
        FamilySpec {
            family: Family::Torus,
            n,
            m,
        }
    }

    pub fn strands(&self) -> usize {
        match self.family {
            Family::Alpha | Family::AlphaTilde => 3,
            Family::Beta | Family::BetaTilde => 4,
            Family::Torus => self.n,
        }
    }

    pub fn word(&self) -> Result<BraidWord> {
        if self.n == 0 || (self.family == Family::Torus && self.m == 0) {
            return Err(Error::InvalidFamilyIndex);
        }
        let reps = 2 * self.n + 1;
        let (prefix, block): (&[u32], Vec<u32>) = match self.family {
            Family::Alpha => (&[], vec![1, 1, 2, 2]),
            Family::AlphaTilde => (&[2], vec![1, 1, 2, 2]),
            Family::Beta => (&[], vec![1, 3, 2, 2]),
            Family::BetaTilde => (&[2], vec![1, 3, 2, 2]),
            Family::Torus => {
                let block: Vec<u32> = (1..self.n as u32).collect();
                let mut letters = Vec::with_capacity(block.len() * self.m);
                for _ in 0..self.m {
                    letters.extend_from_slice(&block);
                }
                return BraidWord::new(self.n, letters);
            }
        };
        let mut letters = prefix.to_vec();
        for _ in 0..reps {
            letters.extend_from_slice(&block);
        }
        BraidWord::new(self.strands(), letters)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `alpha:2`, `beta_tilde:1`, `torus:3,4`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, idx) = s
            .split_once(':')
            .ok_or_else(|| Error::MalformedToken(s.to_string()))?;
        let family: Family = name.trim().parse()?;
        let nums: Vec<usize> = idx
            .split(',')
            .map(|t| {
                t.trim()
                    .parse()
                    .map_err(|_| Error::MalformedToken(String::from(t)))
            })
            .collect::<Result<_>>()?;
        let spec = match (family, nums.as_slice()) {
            (Family::Torus, [n, m]) => FamilySpec::torus(*n, *m),
            (Family::Torus, _) => return Err(Error::MalformedToken(s.to_string())),
            (_, [n]) => FamilySpec::new(family, *n),
            _ => return Err(Error::MalformedToken(s.to_string())),
        };
        if spec.n == 0 || spec.m == 0 {
            return Err(Error::InvalidFamilyIndex);
        }
        Ok(spec)
    }
}
