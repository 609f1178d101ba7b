#pragma once

// Reference implementations used only by the tests. They work from the
// defining formulas directly and share no code with the library kernels.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Edges = std::vector<std::pair<int, int>>;
using Bits = std::vector<int>;

inline bool connected(int n, const Edges& edges) {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        q.push(v);
      }
  }
  return count == n;
}

// Smallest k admitting a proper k-coloring, by trying every labeling.
inline int chromatic_number(int n, const Edges& edges) {
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> lab(n, 0);
    while (true) {
      bool ok = true;
      for (auto [u, v] : edges) ok = ok && lab[u] != lab[v];
      if (ok) return k;
      int i = 0;
      while (i < n && ++lab[i] == k) lab[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

// One representative per isomorphism class of connected graphs on n vertices.
inline std::vector<Edges> connected_graphs(int n) {
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  std::set<Edges> seen;
  std::vector<Edges> out;
  for (std::uint32_t mask = 0; mask < (1U << all.size()); ++mask) {
    Edges e;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1U) e.push_back(all[i]);
    if (!connected(n, e)) continue;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<Edges> canon;
    do {
      Edges r;
      for (auto [u, v] : e) r.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
      std::sort(r.begin(), r.end());
      if (!canon || r < *canon) canon = r;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(*canon).second) out.push_back(e);
  }
  return out;
}

// One-hot MGC energy straight from the Hamiltonian, variables laid out as
// x[v][c] = v*C + c, y[c] = n*C + c.
inline long long onehot_energy(int n, const Edges& edges, int C, long long a_oh, long long a_adj,
                               long long a_link, const Bits& x) {
  auto X = [&](int v, int c) { return x[v * C + c]; };
  auto Y = [&](int c) { return x[n * C + c]; };
  long long e = 0;
  for (int v = 0; v < n; ++v) {
    long long s = 1;
    for (int c = 0; c < C; ++c) s -= X(v, c);
    e += a_oh * s * s;
  }
  for (auto [u, v] : edges)
    for (int c = 0; c < C; ++c) e += a_adj * X(u, c) * X(v, c);
  for (int c = 0; c < C; ++c) e += Y(c);
  for (int v = 0; v < n; ++v)
    for (int c = 0; c < C; ++c) e += a_link * X(v, c) * (1 - Y(c));
  return e;
}

// Logarithmic MGC energy; bit k (0-based here) of v is x[v*L + k].
inline long long log_energy(int n, const Edges& edges, int L, const std::vector<long long>& P, long long A,
                            const Bits& x) {
  long long e = 0;
  for (auto [u, v] : edges) {
    bool same = true;
    for (int k = 0; k < L; ++k) same = same && x[u * L + k] == x[v * L + k];
    e += same ? A : 0;
  }
  for (int k = 0; k < L; ++k)
    for (int v = 0; v < n; ++v) e += P[k] * x[v * L + k];
  return e;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline Bits bits_of(std::uint64_t mask, int width) {
  Bits b(width);
  for (int i = 0; i < width; ++i) b[i] = static_cast<int>(mask >> i & 1U);
  return b;
}

// Minimum of f over {0,1}^width and the masks reaching it.
inline std::pair<long long, std::vector<std::uint64_t>> brute_min(int width,
                                                                   const std::function<long long(const Bits&)>& f) {
  long long best = 0;
  std::vector<std::uint64_t> arg;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << width); ++mask) {
    const long long e = f(bits_of(mask, width));
    if (arg.empty() || e < best) {
      best = e;
      arg.assign(1, mask);
    } else if (e == best) {
      arg.push_back(mask);
    }
  }
  return {best, arg};
}

// Walsh-Hadamard coefficients of f scaled by 2^width: entry S is
// sum_x f(x) (-1)^{|S & x|}, the coefficient of prod_{j in S} Z_j times 2^width.
inline std::vector<long long> walsh(std::vector<long long> f) {
  for (std::size_t h = 1; h < f.size(); h <<= 1)
    for (std::size_t i = 0; i < f.size(); i += h << 1)
      for (std::size_t j = i; j < i + h; ++j) {
        const long long a = f[j];
        const long long b = f[j + h];
        f[j] = a + b;
        f[j + h] = a - b;
      }
  return f;
}

// 2(k-1) CNOTs per nonzero k-local Z term, k >= 2.
inline std::size_t cnot_from_walsh(const std::vector<long long>& w) {
  std::size_t total = 0;
  for (std::size_t s = 0; s < w.size(); ++s) {
    const int k = __builtin_popcountll(s);
    if (k >= 2 && w[s] != 0) total += 2 * (k - 1);
  }
  return total;
}

struct Obs {
  double t;
  bool censored;
};

// Kaplan-Meier in doubles; returns (time, survival) at each event time.
inline std::vector<std::pair<double, double>> km_curve(std::vector<Obs> obs) {
  std::sort(obs.begin(), obs.end(), [](const Obs& a, const Obs& b) { return a.t < b.t; });
  std::vector<std::pair<double, double>> out;
  double s = 1.0;
  std::size_t i = 0;
  while (i < obs.size()) {
    const double t = obs[i].t;
    const double at_risk = static_cast<double>(obs.size() - i);
    double d = 0;
    while (i < obs.size() && obs[i].t == t) d += obs[i++].censored ? 0 : 1;
    if (d > 0) {
      s *= (at_risk - d) / at_risk;
      out.push_back({t, s});
    }
  }
  return out;
}

inline double sample_median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace oracle
