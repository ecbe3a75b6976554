//! Bit-packed linear algebra over GF(2).

use crate::gray::BinaryWord;

/// Row rank over GF(2) by Gaussian elimination on packed rows.
pub fn rank_gf2(rows: &[BinaryWord]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let ncols = first.len();
    let mut mat: Vec<Vec<u64>> = rows.iter().map(|r| r.words().to_vec()).collect();
    let mut rank = 0;
    for col in 0..ncols {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..mat.len()).find(|&r| mat[r][w] & bit != 0) else {
            continue;
        };
        mat.swap(rank, pivot);
        let pivot_row = mat[rank].clone();
        for (r, row) in mat.iter_mut().enumerate() {
            if r != rank && row[w] & bit != 0 {
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
        if rank == mat.len() {
            break;
        }
    }
    rank
}

/// Visits every element of the row span, `2^k` words for `k` rows, in
/// Gray-code order so each step is a single row XOR. The callback gets the
/// coefficient mask and the word.
pub fn for_each_in_span(rows: &[BinaryWord], mut visit: impl FnMut(u64, &BinaryWord)) {
    assert!(rows.len() < 64, "span too large to enumerate");
    let len = rows.first().map_or(0, BinaryWord::len);
    let mut word = BinaryWord::zeros(len);
    let mut mask = 0u64;
    visit(mask, &word);
    for step in 1u64..1 << rows.len() {
        let flip = step.trailing_zeros() as usize;
        word.xor_assign(&rows[flip]);
        mask ^= 1 << flip;
        visit(mask, &word);
    }
}
