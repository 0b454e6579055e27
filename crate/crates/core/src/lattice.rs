//! Exact linear algebra: Gaussian elimination over the rationals and
//! Hermite normal form machinery for integer lattices.

use crate::rat::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Solves `A x = b` exactly (rows of `a` are the equations). Returns one
/// solution with free variables set to zero, or `None` when inconsistent.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.len(), b.len());
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut pr = 0;
    for col in 0..cols {
        let Some(sel) = (pr..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pr, sel);
        let inv = Rat::one() / m[pr][col].clone();
        for v in m[pr].iter_mut() {
            *v *= inv.clone();
        }
        for r in 0..rows {
            if r != pr && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..=cols {
                    let delta = f.clone() * m[pr][c].clone();
                    m[r][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    for r in pr..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &col) in pivot_cols.iter().enumerate() {
        x[col] = m[r][cols].clone();
    }
    Some(x)
}

/// Basis of the rational kernel `{x : A x = 0}`.
pub fn kernel_rational(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut pivot_cols = Vec::new();
    let mut pr = 0;
    for col in 0..cols {
        let Some(sel) = (pr..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pr, sel);
        let inv = Rat::one() / m[pr][col].clone();
        for v in m[pr].iter_mut() {
            *v *= inv.clone();
        }
        for r in 0..rows {
            if r != pr && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..cols {
                    let delta = f.clone() * m[pr][c].clone();
                    m[r][c] -= delta;
                }
            }
        }
        pivot_cols.push(col);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_mod_floor(b);
    if r.magnitude() * 2u32 > b.magnitude().clone() {
        q + BigInt::one()
    } else {
        q
    }
}

/// Row-style Hermite normal form with transform: returns `(h, u)` where
/// `u` is unimodular, `u * m = h`, pivots are positive, entries above each
/// pivot are reduced into `[0, pivot)`, and zero rows sit at the bottom.
pub fn hnf_with_transform(m: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut h: Vec<Vec<BigInt>> = m.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut pr = 0;
    for col in 0..cols {
        if pr == rows {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for r in pr..rows {
                if !h[r][col].is_zero()
                    && best.is_none_or(|b| h[r][col].magnitude() < h[b][col].magnitude())
                {
                    best = Some(r);
                }
            }
            let Some(b) = best else { break };
            h.swap(pr, b);
            u.swap(pr, b);
            let mut done = true;
            for r in pr + 1..rows {
                if h[r][col].is_zero() {
                    continue;
                }
                let q = div_nearest(&h[r][col], &h[pr][col]);
                for c in 0..cols {
                    let delta = &q * &h[pr][c];
                    h[r][c] -= delta;
                }
                for c in 0..rows {
                    let delta = &q * &u[pr][c];
                    u[r][c] -= delta;
                }
                if !h[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[pr][col].is_zero() {
            continue;
        }
        if h[pr][col].is_negative() {
            for c in 0..cols {
                h[pr][c] = -h[pr][c].clone();
            }
            for c in 0..rows {
                u[pr][c] = -u[pr][c].clone();
            }
        }
        for r in 0..pr {
            let q = h[r][col].div_floor(&h[pr][col]);
            if q.is_zero() {
                continue;
            }
            for c in 0..cols {
                let delta = &q * &h[pr][c];
                h[r][c] -= delta;
            }
            for c in 0..rows {
                let delta = &q * &u[pr][c];
                u[r][c] -= delta;
            }
        }
        pr += 1;
    }
    (h, u)
}

/// Canonical Hermite basis of the lattice generated by the given rows,
/// with zero rows dropped.
pub fn hnf(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let (h, _) = hnf_with_transform(rows);
    h.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

/// Canonical basis of the integer kernel `{x in Z^cols : A x = 0}`.
pub fn kernel_integer(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    if cols == 0 {
        return Vec::new();
    }
    // Rows of the transpose are the columns of `a`; left-kernel rows of the
    // transpose are exactly the right-kernel vectors of `a`.
    let t: Vec<Vec<BigInt>> = (0..cols)
        .map(|c| (0..rows).map(|r| a[r][c].clone()).collect())
        .collect();
    let (h, u) = hnf_with_transform(&t);
    let mut kernel = Vec::new();
    for (hr, ur) in h.iter().zip(u.iter()) {
        if hr.iter().all(|x| x.is_zero()) {
            kernel.push(ur.clone());
        }
    }
    hnf(&kernel)
}

/// Canonical basis of `{m in Z^n : sum m_i c_i = 0 (mod modulus)}`.
pub fn kernel_mod(coeffs: &[BigInt], modulus: &BigInt) -> Vec<Vec<BigInt>> {
    assert!(!modulus.is_zero());
    let n = coeffs.len();
    let mut row = coeffs.to_vec();
    row.push(modulus.clone());
    let full = kernel_integer(&[row]);
    let projected: Vec<Vec<BigInt>> = full
        .into_iter()
        .map(|v| v[..n].to_vec())
        .collect();
    hnf(&projected)
}

/// Whether `v` lies in the lattice spanned by the Hermite basis `basis`.
pub fn lattice_contains(basis: &[Vec<BigInt>], v: &[BigInt]) -> bool {
    let mut w = v.to_vec();
    for row in basis {
        let Some(pc) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if w[pc].is_zero() {
            continue;
        }
        let (q, r) = w[pc].div_mod_floor(&row[pc]);
        if !r.is_zero() {
            return false;
        }
        for c in 0..w.len() {
            let delta = &q * &row[c];
            w[c] -= delta;
        }
    }
    w.iter().all(|x| x.is_zero())
}

/// Whether two Hermite bases span the same lattice.
pub fn same_lattice(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> bool {
    hnf(a) == hnf(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn bi(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn solve_square_system() {
        let a = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(3, 1), rat(1, 1)]];
        let b = vec![rat(5, 1), rat(5, 1)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(2, 1)]);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = vec![vec![rat(1, 1), rat(1, 1)], vec![rat(2, 1), rat(2, 1)]];
        assert!(solve(&a, &[rat(1, 1), rat(3, 1)]).is_none());
        assert!(solve(&a, &[rat(1, 1), rat(2, 1)]).is_some());
    }

    #[test]
    fn solve_overdetermined_consistent() {
        let a = vec![
            vec![rat(1, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1)],
            vec![rat(1, 1), rat(1, 1)],
        ];
        let b = vec![rat(2, 1), rat(3, 1), rat(5, 1)];
        assert_eq!(solve(&a, &b).unwrap(), vec![rat(2, 1), rat(3, 1)]);
    }

    #[test]
    fn rational_kernel() {
        let a = vec![vec![rat(1, 2), rat(1, 3)]];
        let k = kernel_rational(&a);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert!((v[0].clone() * rat(1, 2) + v[1].clone() * rat(1, 3)).is_zero());
    }

    #[test]
    fn hnf_canonical_form() {
        let rows = vec![bi(&[1, -1]), bi(&[0, 4])];
        let h = hnf(&rows);
        assert_eq!(h, vec![bi(&[1, 3]), bi(&[0, 4])]);
        let rows2 = vec![bi(&[1, 3]), bi(&[1, -1])];
        assert_eq!(hnf(&rows2), h);
        assert!(same_lattice(&rows, &rows2));
    }

    #[test]
    fn hnf_transform_is_consistent() {
        let m = vec![bi(&[6, 4, 2]), bi(&[4, 8, 0]), bi(&[2, 2, 2])];
        let (h, u) = hnf_with_transform(&m);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = BigInt::zero();
                for k in 0..3 {
                    acc += &u[i][k] * &m[k][j];
                }
                assert_eq!(acc, h[i][j]);
            }
        }
    }

    #[test]
    fn integer_kernel() {
        let a = vec![bi(&[2, -4])];
        let k = kernel_integer(&a);
        assert_eq!(k, vec![bi(&[2, 1])]);
        let a2 = vec![bi(&[1, 1, 1])];
        let k2 = kernel_integer(&a2);
        assert_eq!(k2.len(), 2);
        for v in &k2 {
            assert!((&v[0] + &v[1] + &v[2]).is_zero());
        }
    }

    #[test]
    fn kernel_modulo() {
        let k = kernel_mod(&bi(&[1, 1]), &BigInt::from(4));
        assert_eq!(k, vec![bi(&[1, 3]), bi(&[0, 4])]);
        assert!(lattice_contains(&k, &bi(&[1, -1])));
        assert!(lattice_contains(&k, &bi(&[2, 2])));
        assert!(!lattice_contains(&k, &bi(&[1, 0])));
        let k2 = kernel_mod(&bi(&[3, 2]), &BigInt::from(6));
        assert!(lattice_contains(&k2, &bi(&[2, 0])));
        assert!(lattice_contains(&k2, &bi(&[0, 3])));
        assert!(!lattice_contains(&k2, &bi(&[1, 0])));
        assert!(!lattice_contains(&k2, &bi(&[0, 1])));
    }

    #[test]
    fn lattice_membership_requires_exact_fit() {
        let basis = vec![bi(&[2, 1]), bi(&[0, 3])];
        assert!(lattice_contains(&basis, &bi(&[2, 4])));
        assert!(lattice_contains(&basis, &bi(&[4, 2])));
        assert!(!lattice_contains(&basis, &bi(&[1, 0])));
        assert!(!lattice_contains(&basis, &bi(&[0, 1])));
    }
}
