#pragma once

// Integer noncommutative polynomials in variables X_1..X_n truncated at a
// degree cap, stored sparsely. Coefficients are arbitrary-precision
// integers: conjugation by long words multiplies linking-style
// coefficients and silent overflow is not acceptable.
//
// A monomial X_{i1}...X_{ik} is packed into one 64-bit key: the top nibble
// holds the weight k, the following nibbles hold i1, i2, ... from most
// significant to least. Unsigned comparison of keys is therefore exactly
// (weight, lexicographic index) order. The packing caps both the variable
// count and the degree at 15, comfortably above anything the invariant
// computations reach.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "milnorkit/errors.hpp"

namespace milnorkit {

using Int = boost::multiprecision::cpp_int;

using MultiIndex = std::vector<int>;  // generator indices, weight = size

using Mono = std::uint64_t;

inline constexpr int kMaxVars = 15;
inline constexpr int kMaxDegreeCap = 15;
inline constexpr Mono kIndexMask = 0x0FFF'FFFF'FFFF'FFFFull;

inline constexpr Mono mono_one() { return 0; }

inline constexpr int mono_weight(Mono m) { return static_cast<int>(m >> 60); }

inline constexpr Mono mono_var(int i) {
  return (Mono{1} << 60) | (Mono(static_cast<unsigned>(i)) << 56);
}

// Concatenation; the combined weight must stay within the packing.
inline constexpr Mono mono_concat(Mono a, Mono b) {
  const int wa = mono_weight(a);
  const int wb = mono_weight(b);
  return (Mono(static_cast<unsigned>(wa + wb)) << 60) | (a & kIndexMask) |
         ((b & kIndexMask) >> (4 * wa));
}

inline MultiIndex mono_indices(Mono m) {
  MultiIndex out;
  const int w = mono_weight(m);
  out.reserve(w);
  for (int i = 0; i < w; ++i) {
    out.push_back(static_cast<int>((m >> (56 - 4 * i)) & 0xF));
  }
  return out;
}

inline Mono mono_pack(const MultiIndex& idx, int n_vars) {
  if (idx.size() > kMaxDegreeCap) {
    throw std::invalid_argument("multi-index weight exceeds packing limit 15");
  }
  Mono m = Mono(idx.size()) << 60;
  int shift = 56;
  for (int i : idx) {
    if (i < 1 || i > n_vars) {
      throw std::invalid_argument("multi-index entry " + std::to_string(i) +
                                  " outside 1.." + std::to_string(n_vars));
    }
    m |= Mono(static_cast<unsigned>(i)) << shift;
    shift -= 4;
  }
  return m;
}

class TruncatedSeries {
public:
  TruncatedSeries(int n_vars, int degree_cap)
      : n_vars_(n_vars), cap_(degree_cap) {
    if (n_vars < 1 || n_vars > kMaxVars) {
      throw std::invalid_argument("n_vars must be in 1..15");
    }
    if (degree_cap < 1 || degree_cap > kMaxDegreeCap) {
      throw std::invalid_argument("degree_cap must be in 1..15");
    }
  }

  static TruncatedSeries one(int n_vars, int degree_cap) {
    TruncatedSeries s(n_vars, degree_cap);
    s.terms_.emplace(mono_one(), 1);
    return s;
  }

  int n_vars() const { return n_vars_; }
  int degree_cap() const { return cap_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::unordered_map<Mono, Int>& terms() const { return terms_; }

  // Accumulates; discards overweight terms; keeps the map zero-free.
  void add_term(Mono m, const Int& c, const Guards& g = {}) {
    if (c == 0) return;
    if (mono_weight(m) > cap_) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else if (terms_.size() > g.max_series_terms) {
      throw ResourceError("series term guard exceeded (" +
                          std::to_string(g.max_series_terms) + " terms)");
    }
  }

  Int coefficient(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
  }

  bool is_one() const {
    return terms_.size() == 1 && coefficient(mono_one()) == 1;
  }

  // Smallest weight in 1..cap carrying a nonzero coefficient; 0 if none.
  int min_positive_weight() const {
    int best = 0;
    for (const auto& [m, c] : terms_) {
      const int w = mono_weight(m);
      if (w >= 1 && (best == 0 || w < best)) best = w;
    }
    return best;
  }

  std::vector<std::pair<Mono, Int>> sorted_terms() const {
    std::vector<std::pair<Mono, Int>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.n_vars_ == b.n_vars_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
  }

private:
  int n_vars_;
  int cap_;
  std::unordered_map<Mono, Int> terms_;
};

namespace detail {
inline void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.n_vars() != b.n_vars() || a.degree_cap() != b.degree_cap()) {
    throw std::invalid_argument("series operands disagree on n_vars or degree_cap");
  }
}
}  // namespace detail

inline TruncatedSeries series_one(int n_vars, int degree_cap) {
  return TruncatedSeries::one(n_vars, degree_cap);
}

inline TruncatedSeries series_add(const TruncatedSeries& a,
                                  const TruncatedSeries& b,
                                  const Guards& g = {}) {
  detail::require_compatible(a, b);
  TruncatedSeries out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c, g);
  return out;
}

inline TruncatedSeries series_negate(const TruncatedSeries& a) {
  TruncatedSeries out(a.n_vars(), a.degree_cap());
  for (const auto& [m, c] : a.terms()) out.add_term(m, -c);
  return out;
}

// Noncommutative product, truncating term-by-term: a pair of terms whose
// weights already exceed the cap is never materialized. Cost is
// O(terms(a) * terms(b)) in the worst case, but the per-weight bucketing
// skips every overweight pairing up front.
inline TruncatedSeries series_multiply(const TruncatedSeries& a,
                                       const TruncatedSeries& b,
                                       const Guards& g = {}) {
  detail::require_compatible(a, b);
  const int cap = a.degree_cap();

  std::vector<std::vector<std::pair<Mono, const Int*>>> by_weight(cap + 1);
  for (const auto& [m, c] : b.terms()) {
    by_weight[static_cast<std::size_t>(mono_weight(m))].emplace_back(m, &c);
  }

  TruncatedSeries out(a.n_vars(), cap);
  for (const auto& [ma, ca] : a.terms()) {
    const int wa = mono_weight(ma);
    for (int wb = 0; wb + wa <= cap; ++wb) {
      for (const auto& [mb, cb] : by_weight[static_cast<std::size_t>(wb)]) {
        out.add_term(mono_concat(ma, mb), ca * *cb, g);
      }
    }
  }
  return out;
}

// Multiplicative inverse of a series with constant term 1:
// (1 + u)^-1 = 1 - u + u^2 - ... truncated at the cap.
inline TruncatedSeries series_inverse(const TruncatedSeries& s,
                                      const Guards& g = {}) {
  if (s.coefficient(mono_one()) != 1) {
    throw std::invalid_argument("series_inverse requires constant term 1");
  }
  const int cap = s.degree_cap();
  TruncatedSeries u = s;  // u = s - 1
  u.add_term(mono_one(), -1);
  TruncatedSeries out = series_one(s.n_vars(), cap);
  TruncatedSeries p = series_one(s.n_vars(), cap);
  for (int k = 1; k <= cap; ++k) {
    p = series_multiply(p, u, g);
    if (p.term_count() == 0) break;
    out = series_add(out, k % 2 ? series_negate(p) : p, g);
  }
  return out;
}

// One line per term, "coeff i1 i2 ... ik", sorted by (weight,
// lexicographic indices); the constant term prints as "1 ." .
inline std::string series_serialize(const TruncatedSeries& s) {
  std::string out;
  for (const auto& [m, c] : s.sorted_terms()) {
    out += c.str();
    if (m == mono_one()) {
      out += " .";
    } else {
      for (int i : mono_indices(m)) {
        out += ' ';
        out += std::to_string(i);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace milnorkit
