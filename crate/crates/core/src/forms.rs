//! Exact inertia, determinant and nullity of integer matrices.
//!
//! [`signature_triple`] diagonalizes by congruence over the rationals.
//! [`sturm_inertia`] is an independent route through the characteristic
//! polynomial and Sturm sequences, kept for cross-checking at small sizes.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{sign_changes, Poly};
use crate::{Error, IntMatrix, Result};

/// Largest dimension accepted by [`sturm_inertia`].
pub const STURM_MAX_DIM: usize = 12;

/// Counts of positive, negative and zero eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SignatureTriple {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl SignatureTriple {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        SignatureTriple {
            positive,
            negative,
            zero,
        }
    }

    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn dim(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    pub fn nullity(&self) -> usize {
        self.zero
    }
}

/// Inertia by symmetric Gaussian elimination.
///
/// Pivots on the first nonzero diagonal entry. When every remaining diagonal
/// entry vanishes but some off-diagonal `m[i][j]` does not, the pair `(i, j)`
/// spans a hyperbolic plane, counted as one positive and one negative.
pub fn signature_triple(m: &IntMatrix) -> Result<SignatureTriple> {
    if !m.is_symmetric() {
        return Err(if m.is_square() {
            Error::NotSymmetric
        } else {
            Error::NotSquare
        });
    }
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| BigRational::from_integer(m.get(r, c).clone()))
                .collect()
        })
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut triple = SignatureTriple::default();

    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let p = active.remove(pos);
            let pivot = a[p][p].clone();
            if pivot.is_positive() {
                triple.positive += 1;
            } else {
                triple.negative += 1;
            }
            let col: Vec<BigRational> = active.iter().map(|&r| &a[r][p] / &pivot).collect();
            for (ri, &r) in active.iter().enumerate() {
                if col[ri].is_zero() {
                    continue;
                }
                for &c in &active {
                    let delta = &col[ri] * &a[p][c];
                    a[r][c] -= delta;
                }
            }
            continue;
        }
        let pair = active.iter().enumerate().find_map(|(ii, &i)| {
            active[ii + 1..]
                .iter()
                .find(|&&j| !a[i][j].is_zero())
                .map(|&j| (i, j))
        });
        let Some((i, j)) = pair else {
            triple.zero += active.len();
            break;
        };
        triple.positive += 1;
        triple.negative += 1;
        active.retain(|&r| r != i && r != j);
        let b = a[i][j].clone();
        // Schur complement against [[0, b], [b, 0]].
        let ri: Vec<BigRational> = active.iter().map(|&r| a[r][i].clone()).collect();
        let rj: Vec<BigRational> = active.iter().map(|&r| a[r][j].clone()).collect();
        for (x, &r) in active.iter().enumerate() {
            for (y, &c) in active.iter().enumerate() {
                if ri[x].is_zero() && rj[x].is_zero() {
                    break;
                }
                let delta = (&ri[x] * &rj[y] + &rj[x] * &ri[y]) / &b;
                a[r][c] -= delta;
            }
        }
    }
    Ok(triple)
}

/// Exact determinant by fraction-free (Bareiss) elimination. The empty matrix
/// has determinant 1.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    let n = m.rows();
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 {
        BigInt::one()
    } else {
        a[n - 1][n - 1].clone()
    };
    Ok(if negate { -det } else { det })
}

/// Characteristic polynomial `det(x I - m)` in ascending coefficients, by the
/// Faddeev-LeVerrier recursion (all divisions are exact).
pub fn characteristic_polynomial(m: &IntMatrix) -> Result<Vec<BigInt>> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    let n = m.rows();
    let mut coeffs = alloc::vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut mk = IntMatrix::square(n);
    for k in 1..=n {
        let mut next = m.mul(&mk);
        for i in 0..n {
            *next.get_mut(i, i) += &coeffs[n - k + 1];
        }
        mk = next;
        let am = m.mul(&mk);
        let trace: BigInt = (0..n).map(|i| am.get(i, i).clone()).sum();
        coeffs[n - k] = -trace / BigInt::from(k);
    }
    Ok(coeffs)
}

/// Inertia by Sturm root counting on the characteristic polynomial.
///
/// Roots of a real symmetric matrix's characteristic polynomial are all real,
/// so counting roots on each side of zero (with multiplicity, through the
/// chain of repeated gcds with the derivative) gives the inertia.
pub fn sturm_inertia(m: &IntMatrix) -> Result<SignatureTriple> {
    if !m.is_symmetric() {
        return Err(if m.is_square() {
            Error::NotSymmetric
        } else {
            Error::NotSquare
        });
    }
    if m.rows() > STURM_MAX_DIM {
        return Err(Error::DimensionTooLarge {
            dim: m.rows(),
            max: STURM_MAX_DIM,
        });
    }
    let charpoly = Poly::from_integers(&characteristic_polynomial(m)?);
    let zero = charpoly.valuation();
    let mut g = charpoly.shift_down(zero);
    let origin = BigRational::zero();
    let (mut positive, mut negative) = (0, 0);
    while g.degree().is_some_and(|d| d > 0) {
        let chain = g.sturm_chain();
        let at = |f: &dyn Fn(&Poly) -> Ordering| sign_changes(chain.iter().map(f));
        let v_neg_inf = at(&|p| p.sign_at_infinity(false));
        let v_zero = at(&|p| p.sign_at(&origin));
        let v_pos_inf = at(&|p| p.sign_at_infinity(true));
        negative += v_neg_inf - v_zero;
        positive += v_zero - v_pos_inf;
        g = g.gcd(&g.derivative());
    }
    Ok(SignatureTriple::new(positive, negative, zero))
}
