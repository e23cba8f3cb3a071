//! Data-parallel execution with a fixed reduction order.
//!
//! Per-example work (gradients, losses, contribution dots) fans out over
//! rayon when the `parallel` feature is enabled and runs sequentially
//! otherwise. Reductions are chunked: chunk boundaries are fixed constants
//! chosen by the caller, each chunk accumulates sequentially in index
//! order, and chunk partials are combined in chunk order. Results are
//! therefore bit-identical for any worker count, including one.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `0..n`, returning results in index order.
pub fn par_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Chunked sum of per-item vector contributions into `out` (len `dim`).
///
/// `fill(range, acc)` must add the contributions of the items in `range`
/// into `acc` (len `dim`), iterating the range in increasing order. Chunk
/// partials are added into `out` in chunk order. `chunk` is part of the
/// numeric contract: changing it changes rounding, changing thread count
/// does not.
pub fn par_chunk_sum<F>(n: usize, chunk: usize, dim: usize, out: &mut [f64], fill: F)
where
    F: Fn(std::ops::Range<usize>, &mut [f64]) + Sync,
{
    assert!(chunk > 0 && out.len() == dim);
    let ranges: Vec<std::ops::Range<usize>> = (0..n)
        .step_by(chunk)
        .map(|s| s..(s + chunk).min(n))
        .collect();

    #[cfg(feature = "parallel")]
    let partials: Vec<Vec<f64>> = ranges
        .into_par_iter()
        .map(|r| {
            let mut acc = vec![0.0; dim];
            fill(r, &mut acc);
            acc
        })
        .collect();
    #[cfg(not(feature = "parallel"))]
    let partials: Vec<Vec<f64>> = ranges
        .into_iter()
        .map(|r| {
            let mut acc = vec![0.0; dim];
            fill(r, &mut acc);
            acc
        })
        .collect();

    for p in partials {
        for (o, v) in out.iter_mut().zip(p) {
            *o += v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn par_map_preserves_order() {
        let v = par_map(100, |i| i * i);
        assert_eq!(v[7], 49);
        assert_eq!(v.len(), 100);
    }

    #[test]
    fn chunk_sum_matches_sequential() {
        let xs: Vec<f64> = (0..1000).map(|i| (i as f64).sin()).collect();
        let mut out = vec![0.0; 1];
        par_chunk_sum(xs.len(), 64, 1, &mut out, |r, acc| {
            for i in r {
                acc[0] += xs[i];
            }
        });
        // same chunking, sequentially
        let mut expect = 0.0;
        for c in xs.chunks(64) {
            let mut p = 0.0;
            for x in c {
                p += x;
            }
            expect += p;
        }
        assert_eq!(out[0], expect);
    }
}
