//! Exact integer determinants via fraction-free (Bareiss) elimination.

/// Determinant of a square integer matrix. The Bareiss recurrence keeps all
/// intermediates integral; `i128` is ample for the small ±1 matrices used here.
pub fn int_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    for row in &m {
        assert_eq!(row.len(), n, "determinant requires a square matrix");
    }
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_determinants() {
        assert_eq!(int_det(vec![]), 1);
        assert_eq!(int_det(vec![vec![7]]), 7);
        assert_eq!(int_det(vec![vec![1, 2], vec![3, 4]]), -2);
        assert_eq!(
            int_det(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]),
            -1
        );
        // singular
        assert_eq!(int_det(vec![vec![1, 2], vec![2, 4]]), 0);
    }

    #[test]
    fn vandermonde() {
        let pts: [i128; 4] = [1, 2, 3, 5];
        let m: Vec<Vec<i128>> = pts
            .iter()
            .map(|&x| (0..4).map(|e| x.pow(e)).collect())
            .collect();
        let mut expect = 1i128;
        for i in 0..4 {
            for j in 0..i {
                expect *= pts[i] - pts[j];
            }
        }
        assert_eq!(int_det(m), expect);
    }
}
