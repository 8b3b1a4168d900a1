//! Goeritz matrix of the shaded checkerboard surface and the signature
//! `sigma(L) = sigma(G) - mu`.
//!
//! White regions index the matrix. A crossing whose two white corners are the
//! distinct regions `i` and `j` contributes `-eta` to `g_ij` and `g_ji` and
//! `+eta` to both diagonal entries, so every row of the full matrix sums to
//! zero. One region is then deleted.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::diagram::ColoredDiagram;
use crate::forms::{determinant, signature_triple};
use crate::report::{InvariantReport, Method};
use crate::{BraidWord, Error, IntMatrix, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoeritzData {
    pub matrix: IntMatrix,
    pub mu: i64,
    /// Face ids of the basis regions, in matrix order.
    pub region_labels: Vec<usize>,
    pub deleted_region: usize,
}

impl GoeritzData {
    /// `sigma(G) - mu`.
    pub fn signature(&self) -> Result<i64> {
        Ok(signature_triple(&self.matrix)?.signature() - self.mu)
    }
}

/// Full region matrix over all white faces, indexed by face id.
fn region_matrix(cd: &ColoredDiagram) -> IntMatrix {
    let n = cd.faces.len();
    let mut full = IntMatrix::square(n);
    for class in &cd.classes {
        let (i, j) = cd.white_corners(class.crossing);
        if i == j {
            continue;
        }
        full.add_to(i, i, class.eta);
        full.add_to(j, j, class.eta);
        full.add_to(i, j, -class.eta);
        full.add_to(j, i, -class.eta);
    }
    full
}

/// Default basis order: the white region enclosed by the innermost closure
/// arc (gap `b`, when white), the unbounded region, then the remaining white
/// regions by gap and bottom to top.
pub fn default_region_order(cd: &ColoredDiagram) -> Vec<usize> {
    let b = cd.diagram.strands();
    let white: Vec<usize> = cd.coloring.white_faces().collect();
    let mut order: Vec<usize> = Vec::with_capacity(white.len());
    order.extend(
        white
            .iter()
            .copied()
            .filter(|&f| cd.faces.faces[f].gap == b && b > 0),
    );
    order.push(cd.faces.unbounded);
    let rest: Vec<usize> = white
        .iter()
        .copied()
        .filter(|f| !order.contains(f))
        .collect();
    order.extend(rest);
    order
}

/// Goeritz data in the given region order with `deleted` removed.
pub fn goeritz_with_basis(
    cd: &ColoredDiagram,
    order: &[usize],
    deleted: usize,
) -> Result<GoeritzData> {
    for &f in order.iter().chain(core::iter::once(&deleted)) {
        if f >= cd.faces.len() {
            return Err(Error::NoSuchRegion(f));
        }
        if !cd.coloring.is_white(f) {
            return Err(Error::RegionNotWhite(f));
        }
    }
    let full = region_matrix(cd);
    let labels: Vec<usize> = order.iter().copied().filter(|&f| f != deleted).collect();
    Ok(GoeritzData {
        matrix: full.principal_submatrix(&labels),
        mu: cd.mu(),
        region_labels: labels,
        deleted_region: deleted,
    })
}

/// Goeritz data in the default order; deletes the unbounded region unless
/// another white face is given.
pub fn goeritz(cd: &ColoredDiagram, deleted: Option<usize>) -> Result<GoeritzData> {
    let deleted = deleted.unwrap_or(cd.faces.unbounded);
    goeritz_with_basis(cd, &default_region_order(cd), deleted)
}

/// Signature, |det| and nullity of one diagram without splitting it.
fn evaluate(cd: &ColoredDiagram, deleted: Option<usize>) -> Result<(i64, BigInt, usize)> {
    let g = goeritz(cd, deleted)?;
    let triple = signature_triple(&g.matrix)?;
    Ok((
        triple.signature() - g.mu,
        determinant(&g.matrix)?.abs(),
        triple.nullity(),
    ))
}

/// Gordon-Litherland signature of the closure. Split words are decomposed
/// and the parts' signatures summed.
pub fn signature_gl(word: &BraidWord) -> Result<InvariantReport> {
    let mut signature = 0;
    let mut det = BigInt::one();
    let mut nullity = 0;
    for part in word.split_decompose() {
        let cd = ColoredDiagram::new(&part)?;
        let (s, d, z) = evaluate(&cd, None)?;
        signature += s;
        det *= d;
        nullity += z;
    }
    Ok(InvariantReport {
        word: word.clone(),
        betti: word.betti(),
        signature,
        determinant: det,
        nullity,
        components: word.components(),
        method: Method::GordonLitherland,
    })
}

/// `sigma(G) - mu` on the whole (possibly split) diagram, for every choice of
/// deleted white region, in face order.
pub fn signature_per_deletion(word: &BraidWord) -> Result<Vec<(usize, i64)>> {
    let cd = ColoredDiagram::new(word)?;
    cd.coloring
        .white_faces()
        .map(|f| Ok((f, evaluate(&cd, Some(f))?.0)))
        .collect()
}

/// `sigma(G) - mu` on the whole diagram with the default deletion, without
/// splitting.
pub fn signature_gl_undivided(word: &BraidWord) -> Result<i64> {
    let cd = ColoredDiagram::new(word)?;
    Ok(evaluate(&cd, None)?.0)
}

/// How the Goeritz basis of a 4-braid diagram is matched to the one used in
/// the first-row argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum FirstRowBasis {
    /// Delete the unbounded region (gap 0). Order: gap-4 region, the gap-2
    /// region wrapping through the closure channel, the other gap-2 regions
    /// bottom to top. This is the closure redrawn with strands 1-2 closing
    /// over one side and 3-4 over the other, where the wrapping gap-2 region
    /// becomes the unbounded one.
    #[default]
    WrapAsUnbounded,
    /// Delete the wrapping gap-2 region. Order: gap-4 region, unbounded
    /// region, the other gap-2 regions bottom to top.
    UnboundedKept,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstRowReport {
    pub beta: BraidWord,
    pub alpha: BraidWord,
    pub g_beta: GoeritzData,
    pub g_alpha: GoeritzData,
    pub sigma_g_beta: i64,
    pub sigma_g_alpha: i64,
    /// Entries with both indices past the first row/column coincide.
    pub agree_submatrix: bool,
    /// `-sigma(G_beta) >= -sigma(G_alpha) - 1`.
    pub inequality_holds: bool,
    pub mu_equal: bool,
}

fn first_row_basis(cd: &ColoredDiagram, reading: FirstRowBasis) -> (Vec<usize>, usize) {
    let faces = &cd.faces.faces;
    let gap_faces = |g: usize| -> Vec<usize> {
        let mut v: Vec<usize> = faces.iter().filter(|f| f.gap == g).map(|f| f.id).collect();
        v.sort_by_key(|&f| faces[f].floor);
        v
    };
    let inner = gap_faces(4)[0];
    let middle = gap_faces(2);
    // The wrapping region sits above the last a2, so it sorts last.
    let wrap = *middle.last().expect("a2 is used");
    let rest = middle[..middle.len() - 1].iter().copied();
    let unbounded = cd.faces.unbounded;
    match reading {
        FirstRowBasis::WrapAsUnbounded => {
            let order = [inner, wrap].into_iter().chain(rest).collect();
            (order, unbounded)
        }
        FirstRowBasis::UnboundedKept => {
            let order = [inner, unbounded].into_iter().chain(rest).collect();
            (order, wrap)
        }
    }
}

/// Builds `G_beta` and `G_alpha` (`alpha` = `beta` with `a3 -> a1`) in matching
/// bases and compares them.
pub fn first_row_comparison(beta: &BraidWord, reading: FirstRowBasis) -> Result<FirstRowReport> {
    if beta.strands() != 4 {
        return Err(Error::WrongStrandCount {
            expected: 4,
            found: beta.strands(),
        });
    }
    if !beta.uses_all_generators() {
        return Err(Error::PreconditionViolated(
            "the word must use a1, a2 and a3",
        ));
    }
    let alpha = beta.substitute_a3_to_a1()?;
    let build = |word: &BraidWord| -> Result<GoeritzData> {
        let cd = ColoredDiagram::new(word)?;
        let (order, deleted) = first_row_basis(&cd, reading);
        goeritz_with_basis(&cd, &order, deleted)
    };
    let g_beta = build(beta)?;
    let g_alpha = build(&alpha)?;
    let n = g_beta.matrix.rows();
    let agree_submatrix = n == g_alpha.matrix.rows()
        && (1..n).all(|r| (1..n).all(|c| g_beta.matrix.get(r, c) == g_alpha.matrix.get(r, c)));
    let sigma_g_beta = signature_triple(&g_beta.matrix)?.signature();
    let sigma_g_alpha = signature_triple(&g_alpha.matrix)?.signature();
    Ok(FirstRowReport {
        beta: beta.clone(),
        alpha,
        mu_equal: g_beta.mu == g_alpha.mu,
        inequality_holds: -sigma_g_beta >= -sigma_g_alpha - 1,
        g_beta,
        g_alpha,
        sigma_g_beta,
        sigma_g_alpha,
        agree_submatrix,
    })
}

/// Region matrix rows for a word, for diagnostics.
pub fn full_region_matrix(word: &BraidWord) -> Result<(IntMatrix, Vec<usize>)> {
    let cd = ColoredDiagram::new(word)?;
    let white: Vec<usize> = cd.coloring.white_faces().collect();
    Ok((region_matrix(&cd).principal_submatrix(&white), white))
}
