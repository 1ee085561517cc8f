#include "eo/orient.hpp"

#include <immintrin.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstring>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_map>

#include "eo/errors.hpp"

namespace eo {

const char* count_method_name(CountMethod m) {
  switch (m) {
    case CountMethod::brute: return "brute";
    case CountMethod::cycle_space: return "cycle_space";
    case CountMethod::frontier_dp: return "frontier_dp";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Walk Gray codes of the low `bits` edge directions over index range [a,b).
// Edge `bits` (if present) stays fixed at 0; callers double the result to
// account for the reversal involution. Counts balanced orientations.
std::uint64_t brute_range_scalar(const Graph& g, int bits, std::uint64_t a, std::uint64_t b) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<std::int32_t> imb(n, 0);
  std::uint64_t dir = a ^ (a >> 1);
  for (int i = 0; i < m; ++i) {
    bool fwd = i < bits && ((dir >> i) & 1);
    imb[g.edge(i).lo] += fwd ? 1 : -1;
    imb[g.edge(i).hi] += fwd ? -1 : 1;
  }
  int balanced = 0;
  for (int v = 0; v < n; ++v) balanced += (imb[v] == 0);

  std::vector<std::int32_t> elo(m), ehi(m);
  for (int i = 0; i < m; ++i) {
    elo[i] = g.edge(i).lo;
    ehi[i] = g.edge(i).hi;
  }

  std::uint64_t cnt = (balanced == n);
  for (std::uint64_t i = a + 1; i < b; ++i) {
    const int e = std::countr_zero(i);
    const std::uint64_t bit = std::uint64_t{1} << e;
    dir ^= bit;
    const std::int32_t d = (dir & bit) ? 2 : -2;
    const int lo = elo[e], hi = ehi[e];
    balanced -= (imb[lo] == 0);
    imb[lo] += d;
    balanced += (imb[lo] == 0);
    balanced -= (imb[hi] == 0);
    imb[hi] -= d;
    balanced += (imb[hi] == 0);
    cnt += (balanced == n);
  }
  return cnt;
}

#if defined(__x86_64__) || defined(__i386__)
// Same walk with the imbalance vector in one 32-lane int8 register.
__attribute__((target("avx2"))) std::uint64_t brute_range_avx2(const Graph& g, int bits,
                                                               std::uint64_t a, std::uint64_t b) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  alignas(32) std::int8_t buf[32] = {0};
  std::uint64_t dir = a ^ (a >> 1);
  for (int i = 0; i < m; ++i) {
    bool fwd = i < bits && ((dir >> i) & 1);
    buf[g.edge(i).lo] += fwd ? 1 : -1;
    buf[g.edge(i).hi] += fwd ? -1 : 1;
  }
  __m256i imb = _mm256_load_si256(reinterpret_cast<const __m256i*>(buf));
  const __m256i zero = _mm256_setzero_si256();

  // cur[e] is the delta edge e applies at its next flip; negated after use.
  // Edge 0 flips every second step and stays in a register.
  std::vector<std::int8_t> cur(32 * static_cast<std::size_t>(m), 0);
  for (int e = 0; e < m; ++e) {
    bool fwd_now = (dir >> e) & 1;  // next flip turns it the other way
    std::int8_t d = fwd_now ? -2 : 2;
    cur[32 * e + g.edge(e).lo] = d;
    cur[32 * e + g.edge(e).hi] = static_cast<std::int8_t>(-d);
  }
  __m256i d0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(cur.data()));

  const unsigned want = 0xffffffffu;
  std::uint64_t cnt =
      (static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(imb, zero))) == want);

#define EO_TEST_BALANCED() \
  cnt += (static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(imb, zero))) == want)
#define EO_STEP0()                  \
  do {                              \
    imb = _mm256_add_epi8(imb, d0); \
    d0 = _mm256_sub_epi8(zero, d0); \
    EO_TEST_BALANCED();             \
  } while (0)
#define EO_STEP_MEM(edge)                                                        \
  do {                                                                           \
    std::int8_t* p = cur.data() + 32 * static_cast<std::size_t>(edge);           \
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));         \
    imb = _mm256_add_epi8(imb, d);                                               \
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), _mm256_sub_epi8(zero, d)); \
    EO_TEST_BALANCED();                                                          \
  } while (0)

  std::uint64_t i = a + 1;
  if (i < b && (i & 1)) {
    EO_STEP0();
    ++i;
  }
  for (; i + 1 < b; i += 2) {
    EO_STEP_MEM(std::countr_zero(i));
    EO_STEP0();
  }
  if (i < b) EO_STEP_MEM(std::countr_zero(i));
#undef EO_TEST_BALANCED
#undef EO_STEP0
#undef EO_STEP_MEM
  return cnt;
}
#endif

std::uint64_t brute_range(const Graph& g, int bits, std::uint64_t a, std::uint64_t b) {
  if (a >= b) return 0;
#if defined(__x86_64__) || defined(__i386__)
  if (g.vertex_count() <= 32 && __builtin_cpu_supports("avx2"))
    return brute_range_avx2(g, bits, a, b);
#endif
  return brute_range_scalar(g, bits, a, b);
}

}  // namespace

CountResult count_eulerian_brute(const Graph& g, int cap, int threads) {
  auto t0 = Clock::now();
  const int m = g.edge_count();
  if (m > cap)
    fail(Errc::cap_exceeded,
         "brute: " + std::to_string(m) + " edges exceed cap " + std::to_string(cap));
  if (!g.is_eulerian()) return {Int(0), CountMethod::brute, ms_since(t0)};
  if (m == 0) return {Int(1), CountMethod::brute, ms_since(t0)};

  // Reversal is a fixed-point-free balance-preserving involution: fix the
  // last edge's direction and double.
  const int bits = m - 1;
  const std::uint64_t total = std::uint64_t{1} << bits;
  std::uint64_t balanced = 0;
  if (threads <= 1 || total < 1024) {
    balanced = brute_range(g, bits, 0, total);
  } else {
    int nt = std::min<std::uint64_t>(threads, 64);
    std::vector<std::uint64_t> part(nt, 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) {
      std::uint64_t a = total / nt * t + std::min<std::uint64_t>(t, total % nt);
      std::uint64_t b = a + total / nt + (static_cast<std::uint64_t>(t) < total % nt ? 1 : 0);
      pool.emplace_back([&, t, a, b] { part[t] = brute_range(g, bits, a, b); });
    }
    for (auto& th : pool) th.join();
    balanced = std::accumulate(part.begin(), part.end(), std::uint64_t{0});
  }
  Int value = Int(2) * Int(static_cast<unsigned long>(balanced));
  return {value, CountMethod::brute, ms_since(t0)};
}

std::vector<Orientation> enumerate_eulerian_orientations(const Graph& g, int cap) {
  const int m = g.edge_count();
  const int n = g.vertex_count();
  if (m > cap)
    fail(Errc::cap_exceeded,
         "enumerate: " + std::to_string(m) + " edges exceed cap " + std::to_string(cap));
  std::vector<Orientation> out;
  if (!g.is_eulerian()) return out;
  std::vector<int> imb(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(imb.begin(), imb.end(), 0);
    for (int i = 0; i < m; ++i) {
      bool fwd = (mask >> i) & 1;
      imb[g.edge(i).lo] += fwd ? 1 : -1;
      imb[g.edge(i).hi] += fwd ? -1 : 1;
    }
    if (std::all_of(imb.begin(), imb.end(), [](int x) { return x == 0; })) {
      EdgeSet bits(m);
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) bits.set(i);
      out.push_back({std::move(bits)});
    }
  }
  return out;
}

CountResult count_eulerian_frontier_dp(const Graph& g, const std::vector<int>* order,
                                       std::size_t state_bound) {
  auto t0 = Clock::now();
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (!g.is_eulerian()) fail(Errc::not_eulerian, "frontier dp needs all degrees even");
  if (m == 0) return {Int(1), CountMethod::frontier_dp, ms_since(t0)};

  std::vector<int> pos(n);
  if (order) {
    if (static_cast<int>(order->size()) != n) fail(Errc::param, "order must list every vertex");
    for (int i = 0; i < n; ++i) pos[(*order)[i]] = i;
  } else {
    std::iota(pos.begin(), pos.end(), 0);
  }

  std::vector<int> edge_order(m);
  std::iota(edge_order.begin(), edge_order.end(), 0);
  std::sort(edge_order.begin(), edge_order.end(), [&](int a, int b) {
    auto ka = std::minmax(pos[g.edge(a).lo], pos[g.edge(a).hi]);
    auto kb = std::minmax(pos[g.edge(b).lo], pos[g.edge(b).hi]);
    if (ka.second != kb.second) return ka.second < kb.second;
    if (ka.first != kb.first) return ka.first < kb.first;
    return a < b;
  });

  std::vector<int> remaining(n);
  for (int v = 0; v < n; ++v) remaining[v] = g.degree(v);

  // Key = imbalance per open vertex (chars biased by 64), in open-list order.
  std::vector<int> open;
  std::unordered_map<std::string, Int> state{{std::string(), Int(1)}};
  auto slot = [&open](int v) {
    return static_cast<std::size_t>(std::lower_bound(open.begin(), open.end(), v) - open.begin());
  };

  for (int ei : edge_order) {
    const int u = g.edge(ei).lo, v = g.edge(ei).hi;
    for (int w : {u, v}) {
      if (remaining[w] == g.degree(w) && g.degree(w) > 0) {
        auto it = std::lower_bound(open.begin(), open.end(), w);
        std::size_t at = static_cast<std::size_t>(it - open.begin());
        open.insert(it, w);
        std::unordered_map<std::string, Int> grown;
        grown.reserve(state.size());
        for (auto& [key, cnt] : state) {
          std::string k = key;
          k.insert(k.begin() + static_cast<std::ptrdiff_t>(at), char(64));
          grown.emplace(std::move(k), cnt);
        }
        state = std::move(grown);
      }
    }
    const std::size_t su = slot(u), sv = slot(v);
    --remaining[u];
    --remaining[v];
    const bool close_u = remaining[u] == 0, close_v = remaining[v] == 0;

    std::unordered_map<std::string, Int> next;
    next.reserve(2 * state.size());
    for (auto& [key, cnt] : state) {
      for (int d : {+1, -1}) {
        std::string k = key;
        k[su] = static_cast<char>(k[su] + d);
        k[sv] = static_cast<char>(k[sv] - d);
        if (std::abs(k[su] - 64) > remaining[u] || std::abs(k[sv] - 64) > remaining[v]) continue;
        if (close_u && k[su] != 64) continue;
        if (close_v && k[sv] != 64) continue;
        // erase higher slot first so the lower one stays valid
        if (close_u && close_v) {
          k.erase(k.begin() + static_cast<std::ptrdiff_t>(std::max(su, sv)));
          k.erase(k.begin() + static_cast<std::ptrdiff_t>(std::min(su, sv)));
        } else if (close_u) {
          k.erase(k.begin() + static_cast<std::ptrdiff_t>(su));
        } else if (close_v) {
          k.erase(k.begin() + static_cast<std::ptrdiff_t>(sv));
        }
        next[std::move(k)] += cnt;
      }
    }
    if (close_u && close_v) {
      open.erase(std::remove_if(open.begin(), open.end(), [&](int w) { return w == u || w == v; }),
                 open.end());
    } else if (close_u) {
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(su));
    } else if (close_v) {
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(sv));
    }
    if (next.size() > state_bound)
      fail(Errc::state_blowup, "frontier dp live states exceed bound");
    state = std::move(next);
    if (state.empty()) return {Int(0), CountMethod::frontier_dp, ms_since(t0)};
  }
  Int total = 0;
  for (auto& [key, cnt] : state) total += cnt;  // single empty key remains
  return {total, CountMethod::frontier_dp, ms_since(t0)};
}

namespace {

std::uint64_t pm_rec(const Graph& g, std::vector<bool>& matched, int from) {
  const int n = g.vertex_count();
  int u = from;
  while (u < n && matched[u]) ++u;
  if (u == n) return 1;
  std::uint64_t total = 0;
  matched[u] = true;
  for (int ei : g.incident(u)) {
    int w = g.edge(ei).lo == u ? g.edge(ei).hi : g.edge(ei).lo;
    if (matched[w]) continue;
    matched[w] = true;
    total += pm_rec(g, matched, u + 1);
    matched[w] = false;
  }
  matched[u] = false;
  return total;
}

}  // namespace

CountResult count_pm_brute(const Graph& g, int cap) {
  auto t0 = Clock::now();
  if (g.edge_count() > cap)
    fail(Errc::cap_exceeded,
         "pm: " + std::to_string(g.edge_count()) + " edges exceed cap " + std::to_string(cap));
  if (g.vertex_count() % 2 != 0) return {Int(0), CountMethod::brute, ms_since(t0)};
  std::vector<bool> matched(g.vertex_count(), false);
  Int value = Int(static_cast<unsigned long>(pm_rec(g, matched, 0)));
  return {value, CountMethod::brute, ms_since(t0)};
}

}  // namespace eo
