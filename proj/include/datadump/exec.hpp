#pragma once

#include <cstdint>
#include <vector>

namespace datadump {

/// Execution mode for the data-parallel kernels.
///
/// Serial runs the exact same chunked computation on one thread. Because
/// partial results are produced per fixed-size chunk and folded in chunk
/// order, the result is independent of scheduling and thread count:
/// Serial and Parallel are bit-identical.
enum class ExecMode { Serial, Parallel };

namespace exec {

inline std::uint64_t chunk_count(std::uint64_t total, std::uint64_t chunk_size) {
  return total == 0 ? 0 : (total - 1) / chunk_size + 1;
}

/// Splits [0, total) into fixed chunks, maps per_chunk(lo, hi) over them
/// (possibly in parallel), and folds the partial results in chunk order.
template <typename Acc, typename PerChunk, typename Merge>
Acc chunked_reduce(std::uint64_t total, std::uint64_t chunk_size, ExecMode mode,
                   Acc init, PerChunk per_chunk, Merge merge) {
  const std::int64_t n_chunks = static_cast<std::int64_t>(chunk_count(total, chunk_size));
  if (n_chunks == 0) return init;
  std::vector<Acc> partial(static_cast<std::size_t>(n_chunks), init);

  auto body = [&](std::int64_t i) {
    const std::uint64_t lo = static_cast<std::uint64_t>(i) * chunk_size;
    const std::uint64_t hi = lo + chunk_size < total ? lo + chunk_size : total;
    partial[static_cast<std::size_t>(i)] = per_chunk(lo, hi);
  };

#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n_chunks; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < n_chunks; ++i) body(i);
  }
#else
  (void)mode;
  for (std::int64_t i = 0; i < n_chunks; ++i) body(i);
#endif

  Acc acc = init;
  for (std::int64_t i = 0; i < n_chunks; ++i)
    acc = merge(acc, partial[static_cast<std::size_t>(i)]);
  return acc;
}

/// Runs fn(i) for i in [0, n); iterations must be independent.
template <typename Fn>
void indexed_for(std::int64_t n, ExecMode mode, Fn fn) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
#else
  (void)mode;
#endif
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}

}  // namespace exec
}  // namespace datadump
