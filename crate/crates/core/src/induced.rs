//! Monomial-matrix model of the 8-dimensional Asai cube representation,
//! used as an independent oracle for the L-factor.
//!
//! The Weil group acts on `C² ⊗ C² ⊗ C²` through explicit matrices for a
//! Frobenius lift and (in the ramified case) a tame inertia generator `τ`
//! subject to `φ τ φ^{-1} = τ^q`. The L-factor is
//! `det(1 - Frobenius·T on inertia invariants)^{-1}` — computed here by
//! honest linear algebra over the exact coefficient field, never by quoting
//! the closed forms in [`crate::factors`].

use num::{BigRational, One, Zero};

use crate::shapes::{AsaiRepData, CubicShape};
use crate::symbolic::{LaurentRational, Var};

/// Result of the matrix-model computation.
#[derive(Clone, Debug)]
pub struct InducedRepOracle {
    /// Dimension of the inertia-invariant subspace of the 8-dimensional space.
    pub invariant_dimension: usize,
    /// Characteristic data: `det(1 - Frobenius·T | invariants)`.
    pub char_poly: LaurentRational,
    /// The L-factor, the reciprocal of `char_poly`.
    pub l_factor: LaurentRational,
}

type Matrix = Vec<Vec<LaurentRational>>;

fn zero_matrix(n: usize) -> Matrix {
    vec![vec![LaurentRational::zero(); n]; n]
}

/// Index a basis vector `e_{i} ⊗ e_{j} ⊗ e_{k}` of the tensor cube,
/// `i, j, k ∈ {0, 1}`.
fn idx(i: usize, j: usize, k: usize) -> usize {
    4 * i + 2 * j + k
}

fn bits(n: usize) -> (usize, usize, usize) {
    ((n >> 2) & 1, (n >> 1) & 1, n & 1)
}

/// Apply a linear map given on basis vectors: `columns[j]` is the image of
/// `e_j` as coefficient vector.
fn matrix_from_images(images: Vec<Vec<LaurentRational>>) -> Matrix {
    let n = images.len();
    let mut m = zero_matrix(n);
    for (j, col) in images.into_iter().enumerate() {
        for (i, c) in col.into_iter().enumerate() {
            m[i][j] = c;
        }
    }
    m
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = zero_matrix(n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = LaurentRational::zero();
            for (k, bk) in b.iter().enumerate() {
                if a[i][k].is_zero() || bk[j].is_zero() {
                    continue;
                }
                acc = acc.add(&a[i][k].mul(&bk[j]));
            }
            out[i][j] = acc;
        }
    }
    out
}

/// The two-by-two Satake matrix `diag(α, β)` applied to a basis index.
fn diag_apply(sd: &crate::shapes::SatakeData, bit: usize) -> LaurentRational {
    if bit == 0 {
        sd.alpha.clone()
    } else {
        sd.beta.clone()
    }
}

/// Frobenius and inertia matrices for the shape.
///
/// In each case the Frobenius is a signed-free monomial matrix; inertia is
/// trivial except for the tame cubic, where the tame generator acts by the
/// cyclic slot rotation. The tame Frobenius depends on `q mod 3`: slots are
/// fixed when `q ≡ 1` and swapped when `q ≡ 2`, matching `φ τ φ^{-1} = τ^q`.
fn asai_matrices(rep: &AsaiRepData, p: u64) -> (Matrix, Matrix) {
    let n = 8;
    let identity: Matrix = {
        let mut m = zero_matrix(n);
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = LaurentRational::one();
        }
        m
    };
    match rep.shape {
        CubicShape::Split => {
            let mut images = vec![vec![LaurentRational::zero(); n]; n];
            for src in 0..n {
                let (i, j, k) = bits(src);
                let c = diag_apply(&rep.factors[0], i)
                    .mul(&diag_apply(&rep.factors[1], j))
                    .mul(&diag_apply(&rep.factors[2], k));
                images[src][src] = c;
            }
            (matrix_from_images(images), identity)
        }
        CubicShape::QuadUnramTimesLine => {
            // Frobenius swaps the two quadratic slots after applying the
            // Satake matrix in the second: e_i⊗e_j⊗e_k -> e_j⊗(D1 e_i)⊗(D2 e_k)
            let mut images = vec![vec![LaurentRational::zero(); n]; n];
            for src in 0..n {
                let (i, j, k) = bits(src);
                let c = diag_apply(&rep.factors[0], i).mul(&diag_apply(&rep.factors[1], k));
                images[src][idx(j, i, k)] = c;
            }
            (matrix_from_images(images), identity)
        }
        CubicShape::CubicUnramField => {
            // e_i⊗e_j⊗e_k -> (D e_k)⊗e_i⊗e_j; the cube is D⊗D⊗D
            let mut images = vec![vec![LaurentRational::zero(); n]; n];
            for src in 0..n {
                let (i, j, k) = bits(src);
                let c = diag_apply(&rep.factors[0], k);
                images[src][idx(k, i, j)] = c;
            }
            (matrix_from_images(images), identity)
        }
        CubicShape::CubicTameRamified => {
            // inertia: pure cyclic slot rotation
            let mut tau_images = vec![vec![LaurentRational::zero(); n]; n];
            for src in 0..n {
                let (i, j, k) = bits(src);
                tau_images[src][idx(k, i, j)] = LaurentRational::one();
            }
            let tau = matrix_from_images(tau_images);
            let mut frob_images = vec![vec![LaurentRational::zero(); n]; n];
            let d = &rep.factors[0];
            if p % 3 == 1 {
                for src in 0..n {
                    let (i, j, k) = bits(src);
                    let c = diag_apply(d, i).mul(&diag_apply(d, j)).mul(&diag_apply(d, k));
                    frob_images[src][src] = c;
                }
            } else {
                // q ≡ 2 mod 3: conjugation by φ inverts τ; swap the last two slots
                for src in 0..n {
                    let (i, j, k) = bits(src);
                    let c = diag_apply(d, i).mul(&diag_apply(d, k)).mul(&diag_apply(d, j));
                    frob_images[src][idx(i, k, j)] = c;
                }
            }
            (matrix_from_images(frob_images), tau)
        }
    }
}

/// A kernel basis vector for `τ - 1` together with the free column it owns:
/// the vector has entry 1 in its own free column and 0 in every other free
/// column, so coordinates in this basis read off directly.
struct KernelVector {
    free_col: usize,
    entries: Vec<BigRational>,
}

/// Rational kernel basis of `M - 1` for a matrix `M` with constant entries,
/// by Gaussian elimination over the exact rationals.
fn invariant_basis(tau: &Matrix) -> Vec<KernelVector> {
    let n = tau.len();
    // rows of (tau - I) as rational vectors
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = tau[i][j]
                .as_monomial()
                .map(|(c, m)| {
                    assert!(m.is_one(), "inertia matrix must have constant entries");
                    c
                })
                .unwrap_or_else(BigRational::zero);
            if i == j {
                v -= BigRational::one();
            }
            row.push(v);
        }
        rows.push(row);
    }
    // reduced row echelon
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) {
            rows.swap(r, pr);
            let inv = BigRational::one() / rows[r][c].clone();
            for x in rows[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let f = rows[i][c].clone();
                    for j in 0..n {
                        let d = &rows[r][j] * &f;
                        rows[i][j] -= d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
    }
    // free columns give the kernel basis
    let mut basis = Vec::new();
    for c in 0..n {
        if pivots.contains(&c) {
            continue;
        }
        let mut v = vec![BigRational::zero(); n];
        v[c] = BigRational::one();
        for (pi, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[pi][c].clone();
        }
        basis.push(KernelVector {
            free_col: c,
            entries: v,
        });
    }
    basis
}

/// Express `frob` restricted to the span of `basis` in that basis. The
/// restriction is solved exactly; panics if the span is not stable.
fn restrict(frob: &Matrix, basis: &[KernelVector]) -> Matrix {
    let n = frob.len();
    let d = basis.len();
    let mut out = zero_matrix(d);
    for (bj, bvec) in basis.iter().enumerate() {
        // image of basis vector j
        let mut img = vec![LaurentRational::zero(); n];
        for (k, coef) in bvec.entries.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (i, img_i) in img.iter_mut().enumerate() {
                if !frob[i][k].is_zero() {
                    *img_i = img_i
                        .add(&frob[i][k].mul(&LaurentRational::constant(coef.clone())));
                }
            }
        }
        // the coordinate on basis vector i is the image entry at its free
        // column; subtract and demand a zero residual
        let mut residual = img;
        let mut coords = vec![LaurentRational::zero(); d];
        for (bi, bv) in basis.iter().enumerate() {
            let c = residual[bv.free_col].clone();
            if !c.is_zero() {
                for (k, bc) in bv.entries.iter().enumerate() {
                    if !bc.is_zero() {
                        residual[k] =
                            residual[k].sub(&c.mul(&LaurentRational::constant(bc.clone())));
                    }
                }
            }
            coords[bi] = c;
        }
        assert!(
            residual.iter().all(LaurentRational::is_zero),
            "Frobenius does not stabilize the inertia invariants"
        );
        for (bi, c) in coords.into_iter().enumerate() {
            out[bi][bj] = c;
        }
    }
    out
}

/// `det(1 - T·M)` by cofactor expansion; the matrices here are sparse enough
/// that the recursion is immediate.
fn det_one_minus_t(m: &Matrix) -> LaurentRational {
    let n = m.len();
    let t = LaurentRational::var(Var::T);
    let mut a = zero_matrix(n);
    for i in 0..n {
        for j in 0..n {
            let mt = m[i][j].mul(&t).neg();
            a[i][j] = if i == j {
                LaurentRational::one().add(&mt)
            } else {
                mt
            };
        }
    }
    det(&a, &(0..n).collect::<Vec<_>>(), &(0..n).collect::<Vec<_>>())
}

fn det(a: &Matrix, rows: &[usize], cols: &[usize]) -> LaurentRational {
    if rows.is_empty() {
        return LaurentRational::one();
    }
    let r = rows[0];
    let rest: Vec<usize> = rows[1..].to_vec();
    let mut acc = LaurentRational::zero();
    for (pos, &c) in cols.iter().enumerate() {
        if a[r][c].is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&x| x != c)
            .collect();
        let minor = det(a, &rest, &sub_cols);
        let term = a[r][c].mul(&minor);
        acc = if pos % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

/// Self-checks on the matrix model: `τ³ = 1` and `φ τ φ^{-1} = τ^{q mod 3}`.
fn check_group_relations(frob: &Matrix, tau: &Matrix, p: u64) {
    let n = tau.len();
    let identity: Matrix = {
        let mut m = zero_matrix(n);
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = LaurentRational::one();
        }
        m
    };
    let tau3 = mat_mul(&mat_mul(tau, tau), tau);
    assert_eq!(tau3, identity, "tame generator must have order dividing 3");
    // φ τ = τ^{q} φ
    let lhs = mat_mul(frob, tau);
    let mut tq = identity;
    for _ in 0..(p % 3) {
        tq = mat_mul(&tq, tau);
    }
    let rhs = mat_mul(&tq, frob);
    assert_eq!(lhs, rhs, "tame relation failed");
}

/// Build the explicit matrix model and compute inertia invariants and the
/// L-factor from the characteristic polynomial of Frobenius on them.
pub fn induced_rep_oracle(rep: &AsaiRepData, p: u64) -> InducedRepOracle {
    let (frob, tau) = asai_matrices(rep, p);
    check_group_relations(&frob, &tau, p);
    let basis = invariant_basis(&tau);
    let restricted = restrict(&frob, &basis);
    let char_poly = det_one_minus_t(&restricted);
    let l_factor = char_poly.inv().expect("char poly has constant term 1");
    InducedRepOracle {
        invariant_dimension: basis.len(),
        char_poly,
        l_factor,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::asai_cube_l;
    use crate::shapes::SatakeData;

    #[test]
    fn split_diagonal_case() {
        let rep = AsaiRepData::symbolic(CubicShape::Split);
        let o = induced_rep_oracle(&rep, 5);
        assert_eq!(o.invariant_dimension, 8);
        assert_eq!(o.l_factor, asai_cube_l(&rep));
    }

    #[test]
    fn cubic_unram_block_permutation() {
        let rep = AsaiRepData::symbolic(CubicShape::CubicUnramField);
        let o = induced_rep_oracle(&rep, 5);
        assert_eq!(o.invariant_dimension, 8);
        assert_eq!(o.l_factor, asai_cube_l(&rep));
    }

    #[test]
    fn tame_invariants_have_dimension_four() {
        let rep = AsaiRepData::symbolic(CubicShape::CubicTameRamified);
        for p in [5u64, 7] {
            // p = 7 ≡ 1 and p = 5 ≡ 2 mod 3 exercise both Frobenius actions
            let o = induced_rep_oracle(&rep, p);
            assert_eq!(o.invariant_dimension, 4);
            assert_eq!(o.l_factor, asai_cube_l(&rep), "p={}", p);
        }
    }

    #[test]
    fn quad_case_matches_closed_form() {
        let rep = AsaiRepData::symbolic(CubicShape::QuadUnramTimesLine);
        let o = induced_rep_oracle(&rep, 5);
        assert_eq!(o.invariant_dimension, 8);
        assert_eq!(o.l_factor, asai_cube_l(&rep));
    }

    #[test]
    fn numeric_satake_data() {
        let rep = AsaiRepData::new(
            CubicShape::CubicTameRamified,
            vec![SatakeData::from_rationals(
                BigRational::new(2.into(), 3.into()),
                BigRational::new(5.into(), 7.into()),
            )],
        );
        let o = induced_rep_oracle(&rep, 11);
        assert_eq!(o.l_factor, asai_cube_l(&rep));
    }
}
