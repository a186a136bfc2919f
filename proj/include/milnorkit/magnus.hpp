#pragma once

// The Magnus embedding of a free group into truncated integer power
// series: x_i maps to 1 + X_i and x_i^-1 to 1 - X_i + X_i^2 - X_i^3 + ...
// (all alternating powers up to the cap).
//
// Lower central series convention used throughout this library: a word w
// lies in F_q exactly when its Magnus coefficients of weights 1..q-1 all
// vanish. Under it a generator lies in F_1 only, [x1,x2] lies in F_2 and
// not F_3, and more generally a basic commutator of weight k has its first
// nonzero coefficient in weight k.

#include <optional>
#include <string>

#include "milnorkit/series.hpp"
#include "milnorkit/word.hpp"

namespace milnorkit {

inline TruncatedSeries generator_series(int n_vars, int degree_cap, Letter l) {
  if (l.gen > n_vars) {
    throw std::invalid_argument("generator index x" + std::to_string(l.gen) +
                                " out of range for n_vars=" + std::to_string(n_vars));
  }
  TruncatedSeries s = series_one(n_vars, degree_cap);
  if (l.sign > 0) {
    s.add_term(mono_var(l.gen), 1);
  } else {
    Mono m = mono_one();
    Int c = 1;
    for (int k = 1; k <= degree_cap; ++k) {
      m = mono_concat(m, mono_var(l.gen));
      c = -c;
      s.add_term(m, c);
    }
  }
  return s;
}

// Product of the generator series, in letter order. A monoid homomorphism
// from words to the series ring.
inline TruncatedSeries magnus_expand(const Word& w, int n_vars, int degree_cap,
                                     const Guards& g = {}) {
  TruncatedSeries acc = series_one(n_vars, degree_cap);
  for (const Letter& l : w.letters()) {
    acc = series_multiply(acc, generator_series(n_vars, degree_cap, l), g);
  }
  return acc;
}

// Convenience overload: the variable count is the largest index used.
inline TruncatedSeries magnus_expand(const Word& w, int degree_cap,
                                     const Guards& g = {}) {
  return magnus_expand(w, std::max(1, max_generator(w)), degree_cap, g);
}

// epsilon_I: the coefficient of X_{i1}...X_{ik}; 0 if absent.
inline Int coefficient(const TruncatedSeries& s, const MultiIndex& I) {
  if (static_cast<int>(I.size()) > s.degree_cap()) {
    throw std::invalid_argument("multi-index weight " + std::to_string(I.size()) +
                                " exceeds the series degree cap " +
                                std::to_string(s.degree_cap()));
  }
  return s.coefficient(mono_pack(I, s.n_vars()));
}

struct LcsDepthReport {
  Word word;
  int depth_cap = 0;
  // Smallest weight in 1..depth_cap with a nonzero Magnus coefficient;
  // empty means none was found ("min weight >= depth_cap").
  std::optional<int> min_nonzero_weight;

  std::string describe() const {
    if (min_nonzero_weight) {
      const int q = *min_nonzero_weight;
      return "min nonzero Magnus weight " + std::to_string(q) + ": word lies in F_" +
             std::to_string(q) + " and not in F_" + std::to_string(q + 1);
    }
    return "no nonzero Magnus coefficient up to weight " + std::to_string(depth_cap) +
           " (min nonzero weight >= " + std::to_string(depth_cap) + ")";
  }
};

inline LcsDepthReport lcs_min_weight(const Word& w, int depth_cap,
                                     const Guards& g = {}) {
  if (depth_cap < 2) throw std::invalid_argument("depth_cap must be >= 2");
  const int n_vars = std::max(1, max_generator(w));
  TruncatedSeries s = magnus_expand(w, n_vars, depth_cap, g);
  LcsDepthReport r{w, depth_cap, std::nullopt};
  if (const int mw = s.min_positive_weight(); mw > 0) r.min_nonzero_weight = mw;
  return r;
}

// Magnus' criterion under the convention above: w is in F_q iff all
// coefficients of weights 1..q-1 vanish.
inline bool in_lcs_term(const Word& w, int q, int depth_cap, const Guards& g = {}) {
  if (q > depth_cap) {
    throw std::invalid_argument("q=" + std::to_string(q) + " exceeds depth_cap=" +
                                std::to_string(depth_cap));
  }
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  if (q == 1) return true;
  const int n_vars = std::max(1, max_generator(w));
  return magnus_expand(w, n_vars, q - 1, g).is_one();
}

}  // namespace milnorkit
