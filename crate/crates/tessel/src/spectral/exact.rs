//! Exact linear algebra over the rationals, for ranks and kernels of the
//! small integer matrices that certify spectral statements.

use num_traits::Zero;

use crate::rat::Rational;

/// Row-reduces in place and returns the rank.
pub fn rational_rank(mat: &mut Vec<Vec<Rational>>) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = mat[rank][col].clone();
        for c in col..cols {
            mat[rank][c] = mat[rank][c].clone() / inv.clone();
        }
        for r in 0..rows {
            if r != rank && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in col..cols {
                    let sub = factor.clone() * mat[rank][c].clone();
                    mat[r][c] = mat[r][c].clone() - sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Kernel basis of the matrix (rows are equations over `ncols` unknowns).
pub fn rational_kernel(mut mat: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let _ = rational_rank(&mut mat);
    // Reduced row echelon form: read off pivot columns.
    let mut pivot_of_col = vec![None; ncols];
    for (r, row) in mat.iter().enumerate() {
        if let Some(c) = row.iter().position(|x| !x.is_zero()) {
            pivot_of_col[c] = Some(r);
        }
    }
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::from_integer(1.into());
        for c in 0..ncols {
            if let Some(r) = pivot_of_col[c] {
                v[c] = -mat[r][free].clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Multiplies rows by the common denominator so the vector becomes integer;
/// used to turn rational kernel vectors into integer certificates.
pub fn clear_denominators(v: &[Rational]) -> Vec<num_bigint::BigInt> {
    use num_integer::Integer;
    let mut lcm = num_bigint::BigInt::from(1);
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    #[test]
    fn rank_and_kernel_of_a_singular_matrix() {
        // Rows: x + y + z = 0, x + y + z = 0, x - z = 0.
        let m = vec![
            vec![int(1), int(1), int(1)],
            vec![int(1), int(1), int(1)],
            vec![int(1), int(0), int(-1)],
        ];
        let mut mm = m.clone();
        assert_eq!(rational_rank(&mut mm), 2);
        let kernel = rational_kernel(m.clone(), 3);
        assert_eq!(kernel.len(), 1);
        // Check the kernel vector satisfies all equations.
        for row in &m {
            let dot: Rational = row
                .iter()
                .zip(&kernel[0])
                .map(|(a, b)| a.clone() * b.clone())
                .sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn denominators_clear() {
        let v = vec![rat(1, 2), rat(-1, 3), int(1)];
        let ints = clear_denominators(&v);
        assert_eq!(ints, vec![3.into(), (-2).into(), 6.into()]);
    }
}
