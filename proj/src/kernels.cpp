#include "sdc/kernels.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <stdexcept>
#include <type_traits>

#include "sweep.hpp"

namespace sdc::kernels {

namespace {

using detail::Packed;

bool words_lex_less(const word_t* a, const word_t* b, std::size_t nw) {
  for (std::size_t i = 0; i < nw; ++i) {
    if (const word_t diff = a[i] ^ b[i]; diff != 0) return (a[i] & (diff & (~diff + 1))) == 0;
  }
  return false;
}

}  // namespace

unsigned default_split_bits(std::size_t k, unsigned threads) {
  if (threads <= 1) return 0;
  // About eight chunks per thread keeps dynamic scheduling balanced.
  const unsigned want = static_cast<unsigned>(std::bit_width(std::bit_ceil(std::size_t{threads} * 8) - 1));
  return static_cast<unsigned>(std::min<std::size_t>(k, want));
}

namespace {

unsigned split_for(const Packed& p, const SweepConfig& cfg) {
  const unsigned g = cfg.split_bits ? *cfg.split_bits : default_split_bits(p.k, cfg.threads);
  if (g > p.k) throw std::invalid_argument("split_bits exceeds the basis dimension");
  if (g >= 63) throw std::invalid_argument("split_bits too large");
  return g;
}

int thread_count(const SweepConfig& cfg) { return static_cast<int>(std::max(1u, cfg.threads)); }

}  // namespace

std::size_t min_nonzero_weight(std::span<const BitVector> basis, const BitVector& offset, const SweepConfig& cfg) {
  const Packed p = detail::pack(basis, offset);
  const unsigned g = split_for(p, cfg);
  const std::size_t low = p.k - g;
  const long long chunks = 1LL << g;
  const int threads = thread_count(cfg);

  std::size_t best = std::numeric_limits<std::size_t>::max();
  detail::dispatch_width(p.nw, [&](auto width) {
    constexpr std::size_t NW = decltype(width)::value;
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1) reduction(min : best)
    for (long long c = 0; c < chunks; ++c) {
      std::size_t local = std::numeric_limits<std::size_t>::max();
      detail::sweep_chunk<NW>(p, low, static_cast<std::uint64_t>(c), [&](const word_t* w) {
        const std::size_t wt = detail::popcount_words<NW>(w, p.nw);
        if (wt != 0 && wt < local) local = wt;
      });
      best = std::min(best, local);
    }
  });
  return best == std::numeric_limits<std::size_t>::max() ? 0 : best;
}

std::vector<std::uint64_t> weight_histogram(std::span<const BitVector> basis, const BitVector& offset,
                                            const SweepConfig& cfg) {
  const Packed p = detail::pack(basis, offset);
  const unsigned g = split_for(p, cfg);
  const std::size_t low = p.k - g;
  const long long chunks = 1LL << g;
  const int threads = thread_count(cfg);

  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(chunks));
  detail::dispatch_width(p.nw, [&](auto width) {
    constexpr std::size_t NW = decltype(width)::value;
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
    for (long long c = 0; c < chunks; ++c) {
      std::vector<std::uint64_t> local(p.n + 1, 0);
      detail::sweep_chunk<NW>(p, low, static_cast<std::uint64_t>(c),
                              [&](const word_t* w) { ++local[detail::popcount_words<NW>(w, p.nw)]; });
      partial[static_cast<std::size_t>(c)] = std::move(local);
    }
  });

  std::vector<std::uint64_t> hist(p.n + 1, 0);
  for (const auto& h : partial)
    for (std::size_t w = 0; w <= p.n; ++w) hist[w] += h[w];
  return hist;
}

BitVector min_weight_word(std::span<const BitVector> basis, const BitVector& offset, const SweepConfig& cfg) {
  const Packed p = detail::pack(basis, offset);
  const unsigned g = split_for(p, cfg);
  const std::size_t low = p.k - g;
  const long long chunks = 1LL << g;
  const int threads = thread_count(cfg);

  struct Best {
    std::size_t weight = std::numeric_limits<std::size_t>::max();
    std::vector<word_t> word;
  };
  std::vector<Best> partial(static_cast<std::size_t>(chunks));

  detail::dispatch_width(p.nw, [&](auto width) {
    constexpr std::size_t NW = decltype(width)::value;
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
    for (long long c = 0; c < chunks; ++c) {
      Best local;
      local.word.assign(p.nw, 0);
      detail::sweep_chunk<NW>(p, low, static_cast<std::uint64_t>(c), [&](const word_t* w) {
        const std::size_t wt = detail::popcount_words<NW>(w, p.nw);
        if (wt < local.weight || (wt == local.weight && words_lex_less(w, local.word.data(), p.nw))) {
          local.weight = wt;
          std::copy(w, w + p.nw, local.word.begin());
        }
      });
      partial[static_cast<std::size_t>(c)] = std::move(local);
    }
  });

  const Best* best = &partial.front();
  for (const auto& b : partial)
    if (b.weight < best->weight ||
        (b.weight == best->weight && words_lex_less(b.word.data(), best->word.data(), p.nw)))
      best = &b;

  BitVector out(p.n);
  std::copy(best->word.begin(), best->word.end(), out.words().begin());
  return out;
}

}  // namespace sdc::kernels
