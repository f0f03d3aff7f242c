//! Exact linear algebra over rationals: determinants, rank, characteristic
//! polynomials, Gram-Schmidt orthogonalization and linear solves. All inputs
//! are dense `Vec<Vec<BigRational>>` matrices; sizes here are tiny (desk
//! scale is n <= 12) so simplicity wins over asymptotics.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Error;

pub type QVec = Vec<BigRational>;
pub type QMatrix = Vec<QVec>;

pub fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[BigRational], b: &[BigRational]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[BigRational], c: &BigRational) -> QVec {
    a.iter().map(|x| x * c).collect()
}

pub fn is_zero_vec(a: &[BigRational]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn check_square(m: &QMatrix) -> Result<usize, Error> {
    let rows = m.len();
    for row in m {
        if row.len() != rows {
            return Err(Error::NotSquare {
                rows,
                cols: row.len(),
            });
        }
    }
    Ok(rows)
}

pub fn check_symmetric(m: &QMatrix) -> Result<usize, Error> {
    let n = check_square(m)?;
    for i in 0..n {
        for j in (i + 1)..n {
            if m[i][j] != m[j][i] {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }
    Ok(n)
}

/// Exact determinant by fraction Gaussian elimination with partial pivots.
pub fn det(m: &QMatrix) -> Result<BigRational, Error> {
    let n = check_square(m)?;
    let mut a = m.clone();
    let mut result = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero());
        let Some(pivot) = pivot else {
            return Ok(BigRational::zero());
        };
        if pivot != col {
            a.swap(pivot, col);
            result = -result;
        }
        let pv = a[col][col].clone();
        result *= &pv;
        for r in (col + 1)..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pv;
            for c in col..n {
                let adj = &a[col][c] * &factor;
                a[r][c] -= adj;
            }
        }
    }
    Ok(result)
}

/// Rank over the rationals (rows need not form a square matrix).
pub fn rank(rows: &[QVec]) -> usize {
    let mut a: Vec<QVec> = rows.to_vec();
    let ncols = a.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..a.len()).find(|&r| !a[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        a.swap(pivot, rank);
        let pv = a[rank][col].clone();
        for r in (rank + 1)..a.len() {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pv;
            for c in col..ncols {
                let adj = &a[rank][c] * &factor;
                a[r][c] -= adj;
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Characteristic polynomial of a square matrix, monic, returned as the
/// coefficient sequence `[1, c_1, ..., c_n]` of
/// `x^n + c_1 x^(n-1) + ... + c_n`, computed exactly by the trace recurrence
/// M_k = M (M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k.
pub fn char_poly(m: &QMatrix) -> Result<Vec<BigRational>, Error> {
    let n = check_square(m)?;
    let mut coeffs = vec![BigRational::one()];
    if n == 0 {
        return Ok(coeffs);
    }
    let mut mk = m.clone();
    for k in 1..=n {
        let trace: BigRational = (0..n).map(|i| mk[i][i].clone()).sum();
        let ck = -trace / BigRational::from_integer(k.into());
        coeffs.push(ck.clone());
        if k == n {
            break;
        }
        // mk <- m * (mk + ck I)
        let mut shifted = mk;
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] += &ck;
        }
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for l in 0..n {
                if m[i][l].is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = &m[i][l] * &shifted[l][j];
                    next[i][j] += prod;
                }
            }
        }
        mk = next;
    }
    Ok(coeffs)
}

/// Number of sign changes in a coefficient sequence, zeros skipped. For a
/// polynomial with all roots real this counts the positive roots with
/// multiplicity (Descartes' bound is attained).
pub fn sign_variations(coeffs: &[BigRational]) -> usize {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        let positive = c > &BigRational::zero();
        if let Some(prev) = last {
            if prev != positive {
                changes += 1;
            }
        }
        last = Some(positive);
    }
    changes
}

/// Gram-Schmidt without normalization: returns pairwise-orthogonal rational
/// vectors spanning the same space, dropping dependent inputs.
pub fn gram_schmidt(vectors: &[QVec]) -> Vec<QVec> {
    let mut basis: Vec<QVec> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for b in &basis {
            let coeff = dot(&w, b) / dot(b, b);
            w = sub(&w, &scale(b, &coeff));
        }
        if !is_zero_vec(&w) {
            basis.push(w);
        }
    }
    basis
}

/// Extends an orthogonal basis of a subspace to an orthogonal basis of the
/// full space; the returned vectors span the orthogonal complement.
pub fn orthogonal_complement(basis: &[QVec], dim: usize) -> Vec<QVec> {
    let mut all: Vec<QVec> = basis.to_vec();
    let mut complement = Vec::new();
    for i in 0..dim {
        let mut e = vec![BigRational::zero(); dim];
        e[i] = BigRational::one();
        let mut w = e;
        for b in &all {
            let coeff = dot(&w, b) / dot(b, b);
            w = sub(&w, &scale(b, &coeff));
        }
        if !is_zero_vec(&w) {
            all.push(w.clone());
            complement.push(w);
        }
    }
    complement
}

/// Solves A x = b exactly; errors on singular or non-square systems.
pub fn solve(a: &QMatrix, b: &[BigRational]) -> Result<QVec, Error> {
    let n = check_square(a)?;
    if b.len() != n {
        return Err(Error::invalid(
            "linear solve",
            format!("rhs length {} vs matrix size {n}", b.len()),
        ));
    }
    let mut m = a.clone();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(Error::SingularMatrix)?;
        m.swap(pivot, col);
        rhs.swap(pivot, col);
        let pv = m[col][col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pv;
            for c in col..n {
                let adj = &m[col][c] * &factor;
                m[r][c] -= adj;
            }
            let adj = &rhs[col] * &factor;
            rhs[r] -= adj;
        }
    }
    Ok((0..n).map(|i| &rhs[i] / &m[i][i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int_rational as q;

    fn mat(rows: &[&[i64]]) -> QMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect()
    }

    #[test]
    fn det_basics() {
        assert_eq!(det(&mat(&[&[1, 2], &[3, 4]])).unwrap(), q(-2));
        assert_eq!(det(&mat(&[&[1, 2], &[2, 4]])).unwrap(), q(0));
        assert_eq!(det(&mat(&[&[0, 1], &[1, 0]])).unwrap(), q(-1));
        assert_eq!(det(&Vec::new()).unwrap(), q(1));
    }

    #[test]
    fn rank_counts_independent_rows() {
        assert_eq!(rank(&mat(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]])), 2);
        assert_eq!(rank(&mat(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&mat(&[&[2, 4], &[1, 2]])), 1);
    }

    #[test]
    fn char_poly_of_companion_like_matrices() {
        // [[0,1],[1,0]] -> x^2 - 1
        let c = char_poly(&mat(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(c, vec![q(1), q(0), q(-1)]);
        // J - I in 4 variables -> (x-3)(x+1)^3 = x^4 - 6x^2 - 8x - 3
        let j = mat(&[&[0, 1, 1, 1], &[1, 0, 1, 1], &[1, 1, 0, 1], &[1, 1, 1, 0]]);
        let c = char_poly(&j).unwrap();
        assert_eq!(c, vec![q(1), q(0), q(-6), q(-8), q(-3)]);
    }

    #[test]
    fn sign_variation_counting() {
        assert_eq!(sign_variations(&[q(1), q(0), q(-6), q(-8), q(-3)]), 1);
        assert_eq!(sign_variations(&[q(1), q(-8), q(3)]), 2);
        assert_eq!(sign_variations(&[q(1)]), 0);
        assert_eq!(sign_variations(&[]), 0);
    }

    #[test]
    fn gram_schmidt_orthogonalizes() {
        let basis = gram_schmidt(&mat(&[&[1, 1, 0], &[1, 0, 0], &[2, 1, 0]]));
        assert_eq!(basis.len(), 2);
        assert!(dot(&basis[0], &basis[1]).is_zero());
        let comp = orthogonal_complement(&basis, 3);
        assert_eq!(comp.len(), 1);
        assert!(dot(&comp[0], &basis[0]).is_zero());
        assert!(dot(&comp[0], &basis[1]).is_zero());
    }

    #[test]
    fn solve_small_system() {
        let a = mat(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[q(5), q(10)]).unwrap();
        assert_eq!(x, vec![q(1), q(3)]);
        assert!(solve(&mat(&[&[1, 1], &[1, 1]]), &[q(1), q(2)]).is_err());
    }
}
