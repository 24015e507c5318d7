//! Small exact integer linear algebra (Bareiss elimination).

/// Determinant of a square matrix by fraction-free elimination.
pub(crate) fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for c in 0..k - 1 {
        if m[c][c] == 0 {
            let Some(p) = (c + 1..k).find(|&r| m[r][c] != 0) else {
                return 0;
            };
            m.swap(c, p);
            sign = -sign;
        }
        for r in c + 1..k {
            for j in c + 1..k {
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    sign * m[k - 1][k - 1]
}

/// Minor of `m` with row `r` and column `c` removed.
fn minor(m: &[Vec<i128>], r: usize, c: usize) -> Vec<Vec<i128>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != r)
        .map(|(_, row)| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
        .collect()
}

/// Adjugate: `adj(m) * m = det(m) * I`.
pub(crate) fn adjugate(m: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let k = m.len();
    let mut adj = vec![vec![0; k]; k];
    for (i, row) in adj.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            *x = s * det(minor(m, j, i));
        }
    }
    adj
}

/// Normal to the hyperplane spanned by `k-1` vectors in `Z^k`, by cofactor
/// expansion along a virtual first column. Zero when they are dependent.
pub(crate) fn normal(vectors: &[&[i64]]) -> Vec<i128> {
    let k = vectors.len() + 1;
    // rows = coordinates, columns = vectors
    let m: Vec<Vec<i128>> = (0..k).map(|r| vectors.iter().map(|v| v[r] as i128).collect()).collect();
    (0..k)
        .map(|r| {
            let rest: Vec<Vec<i128>> = m.iter().enumerate().filter(|&(i, _)| i != r).map(|(_, x)| x.clone()).collect();
            let s = if r % 2 == 0 { 1 } else { -1 };
            s * det(rest)
        })
        .collect()
}

pub(crate) fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants() {
        assert_eq!(det(vec![vec![2, 0], vec![0, 3]]), 6);
        assert_eq!(det(vec![vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(det(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]), 2);
        assert_eq!(det(vec![vec![1, 2], vec![2, 4]]), 0);
        assert_eq!(det(vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]), -1);
    }

    #[test]
    fn adjugate_identity() {
        let m = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        let a = adjugate(&m);
        for i in 0..3 {
            for j in 0..3 {
                let s: i128 = (0..3).map(|k| a[i][k] * m[k][j]).sum();
                assert_eq!(s, if i == j { 2 } else { 0 });
            }
        }
    }

    #[test]
    fn normals_are_orthogonal() {
        let u = [1i64, 1, 0, 1];
        let v = [0i64, 1, 1, 1];
        let w = [1i64, 0, 0, 0];
        let nrm = normal(&[&u, &v, &w]);
        for x in [&u, &v, &w] {
            assert_eq!(x.iter().zip(&nrm).map(|(&a, &b)| a as i128 * b).sum::<i128>(), 0);
        }
        assert!(nrm.iter().any(|&x| x != 0));
    }
}
