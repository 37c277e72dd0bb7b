//! Small exact linear algebra over Q and Z for rank-4 lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::quaternion::common_denominator;

pub(crate) type Vec4 = [BigRational; 4];
pub(crate) type Mat4 = [Vec4; 4];

pub(crate) fn determinant(m: &Mat4) -> BigRational {
    let mut a = m.clone();
    let mut det = BigRational::one();
    for col in 0..4 {
        let Some(pivot) = (col..4).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..4 {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..4 {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

pub(crate) fn inverse(m: &Mat4) -> Option<Mat4> {
    let mut a = m.clone();
    let mut inv: Mat4 = std::array::from_fn(|r| {
        std::array::from_fn(|c| if r == c { BigRational::one() } else { BigRational::zero() })
    });
    for col in 0..4 {
        let pivot = (col..4).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot, col);
        inv.swap(pivot, col);
        let p = a[col][col].clone();
        for c in 0..4 {
            a[col][c] /= &p;
            inv[col][c] /= &p;
        }
        for r in 0..4 {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..4 {
                let t = &f * &a[col][c];
                a[r][c] -= t;
                let t = &f * &inv[col][c];
                inv[r][c] -= t;
            }
        }
    }
    Some(inv)
}

/// Row vector times matrix.
pub(crate) fn vec_mul(v: &Vec4, m: &Mat4) -> Vec4 {
    std::array::from_fn(|c| {
        (0..4).fold(BigRational::zero(), |acc, r| acc + &v[r] * &m[r][c])
    })
}

/// Canonical (Hermite normal form) basis of the lattice spanned by `gens`, or
/// `None` if they do not span a rank-4 lattice. Two generating sets span the
/// same lattice iff their results are equal.
pub(crate) fn lattice_basis(gens: &[Vec4]) -> Option<Mat4> {
    let denom = common_denominator(gens.iter().flatten());
    let mut rows: Vec<[BigInt; 4]> = gens
        .iter()
        .map(|g| std::array::from_fn(|c| (&g[c] * &denom).to_integer()))
        .collect();

    let mut pivot_row = 0;
    for col in 0..4 {
        // Euclid on column `col` among rows pivot_row.. until one nonzero remains.
        loop {
            let nonzero: Vec<usize> = (pivot_row..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .collect();
            if nonzero.len() <= 1 {
                break;
            }
            let best = *nonzero
                .iter()
                .min_by_key(|&&r| rows[r][col].abs())
                .unwrap();
            for &r in &nonzero {
                if r == best {
                    continue;
                }
                let q = rows[r][col].div_floor(&rows[best][col]);
                for c in 0..4 {
                    let t = &q * &rows[best][c];
                    rows[r][c] -= t;
                }
            }
        }
        let found = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(pivot_row, found);
        if rows[pivot_row][col].is_negative() {
            for c in 0..4 {
                rows[pivot_row][c] = -rows[pivot_row][c].clone();
            }
        }
        for r in 0..pivot_row {
            let q = rows[r][col].div_floor(&rows[pivot_row][col]);
            if q.is_zero() {
                continue;
            }
            for c in 0..4 {
                let t = &q * &rows[pivot_row][c];
                rows[r][c] -= t;
            }
        }
        pivot_row += 1;
    }
    Some(std::array::from_fn(|r| {
        std::array::from_fn(|c| BigRational::new(rows[r][c].clone(), denom.clone()))
    }))
}
