#pragma once

// Brute-force reference computations over small prime fields. Vectors of
// F_p^n are indexed by their base-p digits, subspaces are bitmasks over all
// p^n vectors (so p^n <= 64). Nothing here uses the library's linear algebra.

#include <cstdint>
#include <set>
#include <vector>

#include "baric/baric.hpp"

namespace oracle {

using Vec = std::vector<int>;
using Mask = std::uint64_t;

struct Table {
  int p = 2;
  int n = 1;
  std::vector<int> c;  // c[(i*n + j)*n + k]
  Vec w;

  int at(int i, int j, int k) const { return c[(i * n + j) * n + k]; }
};

inline int mod(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

inline Table table_of(const baric::Algebra& a, const baric::Vector& weight = {}) {
  Table t;
  t.p = static_cast<int>(a.field().p());
  t.n = static_cast<int>(a.dim());
  t.c.assign(t.n * t.n * t.n, 0);
  for (const auto& [tr, v] : a.constants()) {
    t.c[(tr.i * t.n + tr.j) * t.n + tr.k] = static_cast<int>(v.residue());
  }
  for (const auto& x : weight) t.w.push_back(static_cast<int>(x.residue()));
  return t;
}

inline Table table_of(const baric::BaricAlgebra& b) { return table_of(b.algebra(), b.weight().values()); }

inline int size(const Table& t) {
  int s = 1;
  for (int i = 0; i < t.n; ++i) s *= t.p;
  return s;
}

inline Vec decode(const Table& t, int index) {
  Vec v(t.n);
  for (int i = 0; i < t.n; ++i) {
    v[i] = index % t.p;
    index /= t.p;
  }
  return v;
}

inline int encode(const Table& t, const Vec& v) {
  int index = 0;
  for (int i = t.n - 1; i >= 0; --i) index = index * t.p + mod(v[i], t.p);
  return index;
}

inline Vec mul(const Table& t, const Vec& x, const Vec& y) {
  Vec z(t.n, 0);
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j)
      for (int k = 0; k < t.n; ++k) z[k] = mod(z[k] + 1LL * x[i] * y[j] * t.at(i, j, k), t.p);
  return z;
}

inline Vec lin(const Table& t, int a, const Vec& x, int b, const Vec& y) {
  Vec z(t.n);
  for (int i = 0; i < t.n; ++i) z[i] = mod(1LL * a * x[i] + 1LL * b * y[i], t.p);
  return z;
}

inline int eval(const Table& t, const Vec& w, const Vec& x) {
  long long s = 0;
  for (int i = 0; i < t.n; ++i) s += 1LL * w[i] * x[i];
  return mod(s, t.p);
}

inline Vec basis_vec(const Table& t, int i) {
  Vec e(t.n, 0);
  e[i] = 1;
  return e;
}

/// Every nonzero functional w with w(xy) = w(x)w(y) for all x, y (checked on all pairs).
inline std::vector<Vec> weights(const Table& t) {
  std::vector<Vec> out;
  const int total = size(t);
  for (int wi = 1; wi < total; ++wi) {
    const Vec w = decode(t, wi);
    bool ok = true;
    for (int xi = 0; xi < total && ok; ++xi)
      for (int yi = 0; yi < total && ok; ++yi) {
        const Vec x = decode(t, xi), y = decode(t, yi);
        ok = eval(t, w, mul(t, x, y)) == mod(1LL * eval(t, w, x) * eval(t, w, y), t.p);
      }
    if (ok) out.push_back(w);
  }
  return out;
}

inline bool has(Mask m, int index) { return (m >> index) & 1U; }

inline Mask add_vector(const Table& t, Mask s, const Vec& v) {
  Mask out = s;
  const int total = size(t);
  for (int si = 0; si < total; ++si) {
    if (!has(s, si)) continue;
    for (int a = 1; a < t.p; ++a) out |= Mask{1} << encode(t, lin(t, 1, decode(t, si), a, v));
  }
  return out;
}

inline Mask span_of(const Table& t, const std::vector<Vec>& vectors) {
  Mask s = 1;  // {0}
  for (const auto& v : vectors) s = add_vector(t, s, v);
  return s;
}

inline Mask span_of(const Table& t, const baric::Subspace& s) {
  std::vector<Vec> rows;
  for (const auto& v : s.basis_vectors()) {
    Vec r;
    for (const auto& x : v) r.push_back(static_cast<int>(x.residue()));
    rows.push_back(r);
  }
  return span_of(t, rows);
}

/// All subspaces, grown one vector at a time from {0}.
inline std::set<Mask> subspaces(const Table& t) {
  std::set<Mask> seen = {Mask{1}};
  std::vector<Mask> frontier = {Mask{1}};
  const int total = size(t);
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask s : frontier)
      for (int vi = 0; vi < total; ++vi) {
        if (has(s, vi)) continue;
        const Mask grown = add_vector(t, s, decode(t, vi));
        if (seen.insert(grown).second) next.push_back(grown);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline bool closed_under(const Table& t, Mask s, bool left, bool right) {
  const int total = size(t);
  for (int si = 0; si < total; ++si) {
    if (!has(s, si)) continue;
    const Vec x = decode(t, si);
    for (int ai = 0; ai < total; ++ai) {
      const Vec a = decode(t, ai);
      if (right && !has(s, encode(t, mul(t, x, a)))) return false;
      if (left && !has(s, encode(t, mul(t, a, x)))) return false;
    }
  }
  return true;
}

inline Mask kernel(const Table& t) {
  Mask k = 0;
  for (int xi = 0; xi < size(t); ++xi) {
    if (eval(t, t.w, decode(t, xi)) == 0) k |= Mask{1} << xi;
  }
  return k;
}

inline std::vector<Mask> two_sided_ideals_in(const Table& t, Mask within) {
  std::vector<Mask> out;
  for (Mask s : subspaces(t)) {
    if ((s & ~within) == 0 && closed_under(t, s, true, true)) out.push_back(s);
  }
  return out;
}

inline Mask sum(const Table& t, Mask a, Mask b) {
  Mask out = a;
  for (int bi = 0; bi < size(t); ++bi) {
    if (has(b, bi)) out = add_vector(t, out, decode(t, bi));
  }
  return out;
}

/// Ker = N1 (+) N2 for nonzero two-sided ideals N1, N2.
inline bool kernel_decomposable(const Table& t) {
  const Mask k = kernel(t);
  const auto ideals = two_sided_ideals_in(t, k);
  for (Mask a : ideals)
    for (Mask b : ideals) {
      if (a == 1 || b == 1) continue;
      if ((a & b) == 1 && sum(t, a, b) == k) return true;
    }
  return false;
}

inline std::vector<Vec> weight_one_idempotents(const Table& t) {
  std::vector<Vec> out;
  for (int xi = 0; xi < size(t); ++xi) {
    const Vec x = decode(t, xi);
    if (eval(t, t.w, x) == 1 && mul(t, x, x) == x) out.push_back(x);
  }
  return out;
}

inline int center_size(const Table& t) {
  int count = 0;
  for (int xi = 0; xi < size(t); ++xi) {
    const Vec x = decode(t, xi);
    bool central = true;
    for (int yi = 0; yi < size(t) && central; ++yi) {
      const Vec y = decode(t, yi);
      central = mul(t, x, y) == mul(t, y, x);
    }
    count += central;
  }
  return count;
}

/// Number of k-dimensional subspaces of F_p^n.
inline std::uint64_t gaussian_binomial(std::uint64_t p, int n, int k) {
  std::uint64_t num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (int e = 0; e < n - i; ++e) a *= p;
    for (int e = 0; e < i + 1; ++e) b *= p;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace oracle
