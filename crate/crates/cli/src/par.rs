//! Coset counts fanned out over the rayon pool.

use rayon::prelude::*;

use metaplectic_core::oracle::CosetEnumerator;
use metaplectic_core::Result;

/// Blocks per worker; more blocks even out the pruned branches.
const BLOCKS_PER_THREAD: u64 = 8;

/// Same value as [`CosetEnumerator::count`]; blocks are summed, so the
/// result does not depend on scheduling.
pub fn count(e: &CosetEnumerator) -> Result<u64> {
    let outer = e.outer_size();
    let blocks = (rayon::current_num_threads() as u64 * BLOCKS_PER_THREAD).clamp(1, outer.max(1));
    let step = outer.div_ceil(blocks).max(1);
    (0..blocks)
        .into_par_iter()
        .map(|b| e.count_outer_range(b * step..(b + 1) * step))
        .try_reduce(|| 0, |a, b| Ok(a + b))
}
