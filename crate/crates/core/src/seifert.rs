//! Seifert matrix of the Bennequin surface of a positive braid closure.
//!
//! The surface is one disk per strand and one half-twisted band per letter.
//! Its first homology has a basis of "bricks": for each generator `a_k`, the
//! loop through the bands of two consecutive occurrences of `a_k` (linear
//! order, no wraparound). Pairings between bricks:
//!
//! - a brick with itself: `SELF_LINK`;
//! - consecutive bricks in one column: the lower brick links the upper once
//!   (`STACK_LINK`), the reverse pairing is zero;
//! - bricks in adjacent columns whose letter intervals interleave: the
//!   earlier-starting brick links the other; the sign depends on whether the
//!   left or the right column starts first;
//! - everything else: zero.

use alloc::vec::Vec;

use num_traits::Signed;

use crate::forms::{determinant, signature_triple};
use crate::report::{InvariantReport, Method};
use crate::{BraidWord, IntMatrix, Result};

const SELF_LINK: i64 = -1;
const STACK_LINK: i64 = 1;
/// Sign when the left-column brick starts first; the right-first case takes
/// the opposite sign.
const INTERLEAVE_LEFT_FIRST: i64 = -1;

/// A basis loop through occurrences `first` and `first + 1` of `a_column`;
/// `start`/`end` are the corresponding letter positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Brick {
    pub column: u32,
    pub ordinal: usize,
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    pub matrix: IntMatrix,
    pub basis: Vec<Brick>,
}

impl SeifertData {
    pub fn symmetrized(&self) -> IntMatrix {
        self.matrix.symmetrize().expect("Seifert matrix is square")
    }
}

pub fn bricks(word: &BraidWord) -> Vec<Brick> {
    let mut out = Vec::new();
    for k in 1..word.strands() as u32 {
        let positions: Vec<usize> = word
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, &g)| g == k)
            .map(|(i, _)| i)
            .collect();
        for (ordinal, pair) in positions.windows(2).enumerate() {
            out.push(Brick {
                column: k,
                ordinal,
                start: pair[0],
                end: pair[1],
            });
        }
    }
    out
}

fn linking(x: &Brick, y: &Brick) -> i64 {
    if x == y {
        return SELF_LINK;
    }
    if x.column == y.column {
        return if x.end == y.start { STACK_LINK } else { 0 };
    }
    if x.column.abs_diff(y.column) != 1 || x.start > y.start {
        return 0;
    }
    // x starts first; interleaving means y starts inside x and ends after it.
    if y.start < x.end && x.end < y.end {
        if x.column < y.column {
            INTERLEAVE_LEFT_FIRST
        } else {
            -INTERLEAVE_LEFT_FIRST
        }
    } else {
        0
    }
}

pub fn seifert_matrix(word: &BraidWord) -> SeifertData {
    let basis = bricks(word);
    let n = basis.len();
    let matrix = IntMatrix::from_fn(n, n, |r, c| linking(&basis[r], &basis[c]).into());
    SeifertData { matrix, basis }
}

pub fn signature_seifert(word: &BraidWord) -> Result<InvariantReport> {
    let data = seifert_matrix(word);
    let sym = data.symmetrized();
    let triple = signature_triple(&sym)?;
    Ok(InvariantReport {
        word: word.clone(),
        betti: word.betti(),
        signature: triple.signature(),
        determinant: determinant(&sym)?.abs(),
        nullity: triple.nullity(),
        components: word.components(),
        method: Method::Seifert,
    })
}
