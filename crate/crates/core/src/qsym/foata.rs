//! Foata's second fundamental transformation and the `NS` map.

use crate::perm::Permutation;

/// Foata's bijection `Φ`, carrying the major index to the inversion number
/// and preserving the recoil composition.
///
/// Letters are appended one at a time. Before appending `a`, the word built
/// so far is cut after every letter greater than `a` if its last letter is
/// greater than `a`, otherwise after every letter smaller than `a`; each
/// block is rotated by moving its last letter to the front.
pub fn foata_phi(p: &Permutation) -> Permutation {
    let mut gamma: Vec<u8> = Vec::with_capacity(p.len());
    for &a in p.as_slice() {
        if let Some(&last) = gamma.last() {
            let cut_after_greater = last > a;
            let mut rotated = Vec::with_capacity(gamma.len() + 1);
            let mut start = 0;
            for (i, &x) in gamma.iter().enumerate() {
                if (x > a) == cut_after_greater {
                    let block = &gamma[start..=i];
                    rotated.push(block[block.len() - 1]);
                    rotated.extend_from_slice(&block[..block.len() - 1]);
                    start = i + 1;
                }
            }
            // the last letter always closes a block
            debug_assert_eq!(start, gamma.len());
            gamma = rotated;
        }
        gamma.push(a);
    }
    Permutation::from_vec_unchecked(gamma)
}

/// `NS(p) = Φ(p⁻¹)⁻¹`: preserves descents and sends `maj(p⁻¹)` to the
/// inversion number.
pub fn ns_map(p: &Permutation) -> Permutation {
    foata_phi(&p.inverse()).inverse()
}
