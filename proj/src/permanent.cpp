#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "sdke/determinantal.hpp"
#include "sdke/error.hpp"

namespace sdke {

namespace {

__extension__ using Wide = __int128;
__extension__ using UWide = unsigned __int128;

// Exact running sum: a 128-bit accumulator that spills into BigInt before it
// could overflow.
class Accumulator {
 public:
  void add(Wide term) {
    Wide next;
    if (__builtin_add_overflow(fast_, term, &next)) {
      flush();
      next = term;
    }
    fast_ = next;
  }
  void add(const BigInt& term) { slow_ += term; }

  BigInt total() {
    flush();
    return slow_;
  }

 private:
  void flush() {
    slow_ += to_big(fast_);
    fast_ = 0;
  }

  static BigInt to_big(Wide x) {
    const bool negative = x < 0;
    UWide mag = negative ? -static_cast<UWide>(x)
                                     : static_cast<UWide>(x);
    BigInt out = static_cast<std::uint64_t>(mag >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(mag);
    return negative ? BigInt(-out) : out;
  }

  Wide fast_ = 0;
  BigInt slow_ = 0;
};

struct Adjacency {
  std::size_t n;
  std::vector<std::uint8_t> cells;  // row-major
  std::uint8_t at(std::size_t i, std::size_t j) const { return cells[i * n + j]; }
};

Adjacency adjacency_of(const Graph& g) {
  Adjacency a{g.order(), std::vector<std::uint8_t>(g.order() * g.order(), 0)};
  for (const Edge& e : g.edges()) {
    a.cells[e.u * a.n + e.v] = 1;
    a.cells[e.v * a.n + e.u] = 1;
  }
  return a;
}

// Adds prod_i rowsum_i with the given sign, using 128-bit arithmetic when the
// product fits.
void add_term(const std::vector<int>& rowsum, bool negative, Accumulator& acc) {
  UWide prod = 1;
  for (std::size_t i = 0; i < rowsum.size(); ++i) {
    if (rowsum[i] == 0) return;
    if (__builtin_mul_overflow(prod, static_cast<UWide>(rowsum[i]),
                               &prod) ||
        prod > static_cast<UWide>(~Wide{0} >> 1)) {
      BigInt big = 1;
      for (int r : rowsum) big *= r;
      acc.add(negative ? BigInt(-big) : big);
      return;
    }
  }
  const Wide term = static_cast<Wide>(prod);
  acc.add(negative ? -term : term);
}

// Ryser terms for Gray-code indices [begin, end), begin >= 1.
BigInt ryser_range(const Adjacency& a, std::uint64_t begin, std::uint64_t end) {
  const std::size_t n = a.n;
  std::vector<int> rowsum(n, 0);
  std::uint64_t subset = begin ^ (begin >> 1);
  for (std::size_t j = 0; j < n; ++j) {
    if ((subset >> j) & 1U) {
      for (std::size_t i = 0; i < n; ++i) rowsum[i] += a.at(i, j);
    }
  }
  Accumulator acc;
  // Ryser: perm = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij
  add_term(rowsum, (std::popcount(subset) + n) % 2 == 1, acc);
  for (std::uint64_t k = begin + 1; k < end; ++k) {
    const int j = std::countr_zero(k);
    const bool entering = ((subset >> j) & 1U) == 0;
    subset ^= std::uint64_t{1} << j;
    for (std::size_t i = 0; i < n; ++i) {
      rowsum[i] += entering ? a.at(i, j) : -a.at(i, j);
    }
    add_term(rowsum, (std::popcount(subset) + n) % 2 == 1, acc);
  }
  return acc.total();
}

void require_ryser_bound(const Graph& g, std::size_t max_order) {
  if (g.order() > max_order || g.order() > 62) {
    throw LimitExceeded("permanent limited to " + std::to_string(max_order) +
                        " vertices; graph has " + std::to_string(g.order()));
  }
}

}  // namespace

BigInt perm_adjacency_serial(const Graph& g, std::size_t max_order) {
  require_ryser_bound(g, max_order);
  if (g.order() == 0) return 1;
  const Adjacency a = adjacency_of(g);
  return ryser_range(a, 1, std::uint64_t{1} << a.n);
}

BigInt perm_adjacency(const Graph& g, std::size_t max_order) {
  require_ryser_bound(g, max_order);
  if (g.order() < 12) return perm_adjacency_serial(g, max_order);

  const Adjacency a = adjacency_of(g);
  const std::uint64_t last = std::uint64_t{1} << a.n;
  constexpr std::int64_t kChunks = 256;
  const std::uint64_t width = (last - 1 + kChunks - 1) / kChunks;
  BigInt total = 0;
#pragma omp parallel
  {
    BigInt local = 0;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < kChunks; ++c) {
      const std::uint64_t begin = 1 + static_cast<std::uint64_t>(c) * width;
      const std::uint64_t end = std::min(last, begin + width);
      if (begin < end) local += ryser_range(a, begin, end);
    }
#pragma omp critical(sdke_ryser_merge)
    total += local;
  }
  return total;
}

}  // namespace sdke
