//! Seeded sampling of words and matrices.

use braidsig_core::{BraidWord, IntMatrix};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform word of exactly `len` letters.
pub fn random_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let top = strands.max(2) as u32 - 1;
    let letters = (0..len).map(|_| rng.gen_range(1..=top)).collect();
    BraidWord::new(strands, letters).expect("letters in range")
}

/// Word using every generator at least once, length uniform in
/// `strands - 1 ..= max_len`.
pub fn random_word_using_all<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let top = strands as u32 - 1;
    let len = rng.gen_range(top as usize..=max_len.max(top as usize));
    let mut letters: Vec<u32> = (1..=top).collect();
    letters.extend((top as usize..len).map(|_| rng.gen_range(1..=top)));
    letters.shuffle(rng);
    BraidWord::new(strands, letters).expect("letters in range")
}

/// Symmetric matrix with entries uniform in `-bound..=bound`.
pub fn random_symmetric<R: Rng>(rng: &mut R, dim: usize, bound: i64) -> IntMatrix {
    let mut m = IntMatrix::square(dim);
    for r in 0..dim {
        for c in r..dim {
            let v = rng.gen_range(-bound..=bound);
            m.add_to(r, c, v);
            if r != c {
                m.add_to(c, r, v);
            }
        }
    }
    m
}
