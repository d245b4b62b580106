//! Small fixtures shared by unit tests.

/// Cayley table of the symmetric group on three letters. Elements are the
/// permutations of `{0,1,2}` in a fixed order; `a * b` applies `a` then `b`.
pub(crate) fn s3_rows() -> Vec<Vec<usize>> {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]];
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    perms
        .iter()
        .map(|p| perms.iter().map(|q| idx([q[p[0]], q[p[1]], q[p[2]]])).collect())
        .collect()
}
