//! RSK row insertion; shape of the tableau pair.

use super::permutation::Permutation;

/// Common shape of the (P, Q) tableaux under RSK, as a weakly decreasing
/// partition of N. The first part is the LIS length.
pub fn rsk_shape(p: &Permutation) -> Vec<usize> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for &value in p.image() {
        let mut carry = value;
        let mut placed = false;
        for row in rows.iter_mut() {
            // Bump the leftmost entry strictly larger than the carry.
            let idx = row.partition_point(|&t| t <= carry);
            if idx == row.len() {
                row.push(carry);
                placed = true;
                break;
            }
            std::mem::swap(&mut carry, &mut row[idx]);
        }
        if !placed {
            rows.push(vec![carry]);
        }
    }
    rows.iter().map(|r| r.len()).collect()
}
