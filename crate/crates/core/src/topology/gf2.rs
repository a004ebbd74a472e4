//! Rank over the two-element field of sparse 0/1 matrices.

/// Rank of a `rows`-row matrix whose columns are sorted row-index lists.
///
/// Column reduction: each column is reduced by earlier columns until its
/// lowest (largest) row index is unclaimed or it vanishes.
pub fn rank(rows: usize, columns: Vec<Vec<u32>>) -> usize {
    let mut owner = vec![usize::MAX; rows];
    let mut reduced: Vec<Vec<u32>> = Vec::with_capacity(columns.len());
    let mut rank = 0;
    for mut col in columns {
        while let Some(&low) = col.last() {
            match owner[low as usize] {
                usize::MAX => break,
                j => col = symmetric_difference(&col, &reduced[j]),
            }
        }
        if let Some(&low) = col.last() {
            owner[low as usize] = reduced.len();
            rank += 1;
        }
        reduced.push(col);
    }
    rank
}

fn symmetric_difference(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
