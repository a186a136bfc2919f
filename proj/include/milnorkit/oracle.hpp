#pragma once

// Deliberately slow, independent checkers backing the test suites. They
// share only the Word and TruncatedSeries value types with the main
// kernels, so a bug in the fast paths cannot hide behind shared code.

#include <utility>
#include <vector>

#include "milnorkit/diagram.hpp"
#include "milnorkit/series.hpp"
#include "milnorkit/word.hpp"

namespace milnorkit::oracle {

// Full term-pair enumeration with post-hoc truncation. Must agree with
// series_multiply on every input.
inline TruncatedSeries naive_series_multiply(const TruncatedSeries& a,
                                             const TruncatedSeries& b,
                                             const Guards& g = {}) {
  if (a.n_vars() != b.n_vars() || a.degree_cap() != b.degree_cap()) {
    throw std::invalid_argument("series operands disagree on n_vars or degree_cap");
  }
  TruncatedSeries out(a.n_vars(), a.degree_cap());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (mono_weight(ma) + mono_weight(mb) > a.degree_cap()) continue;
      out.add_term(mono_concat(ma, mb), ca * cb, g);
    }
  }
  return out;
}

struct BasicCommutatorSet {
  int n_vars = 0;
  int max_weight = 0;
  std::vector<std::pair<Word, int>> elements;  // (word, construction weight)
};

// All left-normed iterated commutators [x_{i1}, x_{i2}, ..., x_{ik}] up to
// max_weight. Tuples with i1 == i2 collapse to the identity and are
// skipped; every emitted word has lower-central-series depth exactly its
// construction weight, which the tests check against the Magnus kernel in
// both directions.
inline BasicCommutatorSet generate_basic_commutators(int n_vars, int max_weight) {
  if (max_weight > 6) {
    throw ResourceError("basic commutator generation capped at weight 6");
  }
  if (n_vars < 1 || max_weight < 1) {
    throw std::invalid_argument("n_vars and max_weight must be >= 1");
  }
  BasicCommutatorSet set{n_vars, max_weight, {}};
  // weight-1 "commutators" are the generators themselves
  std::vector<std::pair<Word, int>> frontier;
  for (int i = 1; i <= n_vars; ++i) {
    Word xi{Letter{i, 1}};
    set.elements.emplace_back(xi, 1);
    frontier.emplace_back(xi, i);  // second = first generator index
  }
  for (int w = 2; w <= max_weight; ++w) {
    std::vector<std::pair<Word, int>> next;
    for (const auto& [c, first_gen] : frontier) {
      for (int j = 1; j <= n_vars; ++j) {
        if (w == 2 && j == first_gen) continue;  // [x_i, x_i] = 1
        Word cj = commutator(c, Word{Letter{j, 1}});
        set.elements.emplace_back(cj, w);
        next.emplace_back(cj, first_gen);
      }
    }
    frontier = std::move(next);
  }
  return set;
}

// Fixed-point substitution of the Wirtinger relations with no level
// schedule: plain in-place sweeps over the generators in label order, base
// meridians pinned. Rebuilds the longitude from the relations alone, so it
// shares no traversal code with the main engine. Agrees with
// reduce_longitude in all Magnus weights below min(level, max_steps).
inline Word oracle_longitude(const WirtingerPresentation& p, int component,
                             int max_steps, const Guards& g = {}) {
  if (p.relations.size() > 8) {
    throw std::invalid_argument("oracle_longitude accepts at most 8 crossings");
  }
  if (component < 1 || component + 1 > static_cast<int>(p.component_gen_range.size())) {
    throw std::invalid_argument("component index out of range");
  }
  const int n = p.n_generators;
  auto succ = [&](int a) {
    const auto [first, last] =
        p.component_gen_range[static_cast<std::size_t>(
            p.generator_component[static_cast<std::size_t>(a)])];
    return a == last ? first : a + 1;
  };

  std::vector<int> rel_by_under_out(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> rel_by_under_in(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> over_in_by_over_out(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const WirtingerRelation& R = p.relations[r];
    rel_by_under_out[static_cast<std::size_t>(R.under_out)] = static_cast<int>(r);
    rel_by_under_in[static_cast<std::size_t>(R.under_in)] = static_cast<int>(r);
    over_in_by_over_out[static_cast<std::size_t>(succ(R.over))] = R.over;
  }

  std::vector<Word> e(static_cast<std::size_t>(n) + 1);
  std::vector<char> pinned(static_cast<std::size_t>(n) + 1, 0);
  for (int a = 1; a <= n; ++a) {
    e[static_cast<std::size_t>(a)] =
        Word{Letter{p.generator_component[static_cast<std::size_t>(a)], 1}};
  }
  for (std::size_t c = 1; c < p.base_meridian.size(); ++c) {
    pinned[static_cast<std::size_t>(p.base_meridian[c])] = 1;
  }

  for (int step = 0; step < max_steps; ++step) {
    for (int a = 1; a <= n; ++a) {
      if (pinned[static_cast<std::size_t>(a)]) continue;
      if (const int r = rel_by_under_out[static_cast<std::size_t>(a)]; r >= 0) {
        const WirtingerRelation& R = p.relations[static_cast<std::size_t>(r)];
        const Word& over = e[static_cast<std::size_t>(R.over)];
        const Word by = R.sign > 0 ? over : invert(over);
        e[static_cast<std::size_t>(a)] =
            conjugate(e[static_cast<std::size_t>(R.under_in)], by, g);
      } else if (const int o = over_in_by_over_out[static_cast<std::size_t>(a)]; o > 0) {
        e[static_cast<std::size_t>(a)] = e[static_cast<std::size_t>(o)];
      }
    }
  }

  // longitude from the relations: over-meridians at the undercrossings in
  // traversal order (with the crossing sign, i.e. the negative of the
  // relation's conjugating exponent), then the self-writhe correction
  const auto [first, last] =
      p.component_gen_range[static_cast<std::size_t>(component)];
  Word out;
  long long self_writhe = 0;
  if (first >= 1) {
    for (int a = first; a <= last; ++a) {
      if (const int r = rel_by_under_in[static_cast<std::size_t>(a)]; r >= 0) {
        const WirtingerRelation& R = p.relations[static_cast<std::size_t>(r)];
        const Word& over = e[static_cast<std::size_t>(R.over)];
        const int letter_sign = -R.sign;
        out = multiply(out, letter_sign > 0 ? over : invert(over), g);
        if (p.generator_component[static_cast<std::size_t>(R.over)] == component) {
          self_writhe += letter_sign;
        }
      }
    }
  }
  for (long long k = 0, m = self_writhe >= 0 ? self_writhe : -self_writhe; k < m; ++k) {
    out.push_reduced({component, self_writhe > 0 ? -1 : 1}, g);
  }
  return out;
}

}  // namespace milnorkit::oracle
