use core::fmt;

use num_bigint::BigInt;

use crate::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Seifert,
    GordonLitherland,
    BothAgree,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Seifert => "seifert",
            Method::GordonLitherland => "gordon-litherland",
            Method::BothAgree => "both-agree",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Invariants of one closure as computed by one pipeline (or both).
///
/// For split closures `determinant` and `nullity` are those of the direct sum
/// of the per-part forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub word: BraidWord,
    pub betti: usize,
    pub signature: i64,
    /// Absolute value of the form's determinant.
    pub determinant: BigInt,
    pub nullity: usize,
    pub components: usize,
    pub method: Method,
}

impl InvariantReport {
    /// `-b1 <= sigma <= b1`.
    pub fn in_range(&self) -> bool {
        self.signature.unsigned_abs() as usize <= self.betti
    }

    pub fn is_knot(&self) -> bool {
        self.components == 1
    }

    /// `ceil(|sigma| / 2)`, a lower bound for the topological slice genus of
    /// a knot.
    pub fn slice_genus_lower_bound(&self) -> Option<u64> {
        self.is_knot()
            .then(|| self.signature.unsigned_abs().div_ceil(2))
    }
}
