use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ranking::{Ocf, RankedModel};

/// Every ranked model over `width` worlds, each exactly once.
///
/// Canonical order: fewer blocks first; among models with the same number
/// of blocks, rank vectors `(rank(w0), rank(w1), …)` in lexicographic order.
/// The count is the ordered Bell number of `width`.
pub fn enumerate_ranked_models(width: usize, bound: usize) -> Result<Vec<RankedModel>> {
    if width == 0 {
        return Err(Error::EmptyUniverse);
    }
    if width > bound {
        return Err(Error::BoundExceeded { width, bound });
    }
    let mut models = Vec::new();
    let mut ranks = vec![0usize; width];
    for levels in 1..=width {
        ranks.fill(0);
        loop {
            if is_surjective(&ranks, levels) {
                models.push(RankedModel::from_ranks(&ranks)?);
            }
            if !increment(&mut ranks, levels) {
                break;
            }
        }
    }
    Ok(models)
}

fn is_surjective(ranks: &[usize], levels: usize) -> bool {
    let mut seen = 0u64;
    for &r in ranks {
        seen |= 1 << r;
    }
    seen.count_ones() as usize == levels
}

/// Odometer step over `[0, base)^n`, last position fastest.
fn increment(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// The order of [`enumerate_ranked_models`].
pub fn canonical_cmp(a: &RankedModel, b: &RankedModel) -> Ordering {
    a.num_blocks()
        .cmp(&b.num_blocks())
        .then_with(|| a.ranks().cmp(&b.ranks()))
}

/// Normalized OCFs with every value in `0..=max_value`, lexicographic by
/// value vector.
pub fn enumerate_normalized_ocfs(width: usize, max_value: u64, bound: usize) -> Result<Vec<Ocf>> {
    if width == 0 {
        return Err(Error::EmptyUniverse);
    }
    if width > bound {
        return Err(Error::BoundExceeded { width, bound });
    }
    let base = max_value as usize + 1;
    let mut digits = vec![0usize; width];
    let mut out = Vec::new();
    loop {
        if digits.contains(&0) {
            out.push(Ocf::new(digits.iter().map(|&d| d as u64).collect())?);
        }
        if !increment(&mut digits, base) {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_ranked_models(1, 6).unwrap().len(), 1);
        assert_eq!(enumerate_ranked_models(4, 6).unwrap().len(), 75);
        assert_eq!(enumerate_ranked_models(5, 6).unwrap().len(), 541);
        assert_eq!(
            enumerate_ranked_models(7, 6),
            Err(Error::BoundExceeded { width: 7, bound: 6 })
        );
    }

    #[test]
    fn canonical_order_is_sorted_and_unique() {
        let models = enumerate_ranked_models(4, 6).unwrap();
        for pair in models.windows(2) {
            assert_eq!(canonical_cmp(&pair[0], &pair[1]), Ordering::Less);
        }
        assert_eq!(models[0], RankedModel::flat(4).unwrap());
        assert_eq!(models[1].ranks(), [0, 0, 0, 1]);
    }

    #[test]
    fn ocf_enumeration() {
        let ocfs = enumerate_normalized_ocfs(4, 3, 6).unwrap();
        assert_eq!(ocfs.len(), 256 - 81);
        assert!(ocfs.iter().all(|k| k.values().contains(&0)));
    }
}
