#pragma once

// The nilpotent rewriting engine: expresses every arc generator, and hence
// every longitude, as a word in the base meridians x_1..x_n, correct
// modulo the q-th lower central series term.
//
// Level 1 sends each arc generator to its component's base meridian.
// Each further level walks every component from its base arc and rewrites
// across the passages: an undercrossing conjugates by the previous level's
// word for the incoming over-arc, an overcrossing just carries the word
// along. After q-1 such substitution rounds the map represents the arc
// generators in G/G_q: conjugator errors live in F_{q-1} and commutator
// juggling pushes them into F_q. The stabilization property tests pin the
// off-by-one empirically rather than by trusting this argument.
//
// The same recursion runs directly on Magnus series (a word-level
// conjugation becomes two truncated series multiplications). That route
// never materializes the exponentially long expansion words and is what
// the invariant tables use; the word route stays as the reference
// implementation and the two are tested against each other.

#include <optional>
#include <vector>

#include "milnorkit/diagram.hpp"
#include "milnorkit/magnus.hpp"
#include "milnorkit/series.hpp"
#include "milnorkit/word.hpp"

namespace milnorkit {

struct MeridianExpansion {
  int level = 1;
  std::vector<Word> per_arc;  // [1..n_generators], words in base meridians
};

namespace detail {

// relation index by the arc that terminates at the crossing's under slot
inline std::vector<int> under_in_index(const WirtingerPresentation& p) {
  std::vector<int> idx(static_cast<std::size_t>(p.n_generators) + 1, -1);
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    idx[static_cast<std::size_t>(p.relations[r].under_in)] = static_cast<int>(r);
  }
  return idx;
}

}  // namespace detail

inline MeridianExpansion expand_to_level(const WirtingerPresentation& p, int q,
                                         const Guards& g = {}) {
  if (q < 1) throw std::invalid_argument("expansion level must be >= 1");
  const std::vector<int> under_in = detail::under_in_index(p);

  MeridianExpansion e;
  e.level = q;
  e.per_arc.assign(static_cast<std::size_t>(p.n_generators) + 1, Word{});
  for (int a = 1; a <= p.n_generators; ++a) {
    e.per_arc[static_cast<std::size_t>(a)] =
        Word{Letter{p.generator_component[static_cast<std::size_t>(a)], 1}};
  }

  for (int lvl = 2; lvl <= q; ++lvl) {
    std::vector<Word> cur(static_cast<std::size_t>(p.n_generators) + 1);
    for (std::size_t comp = 1; comp < p.component_gen_range.size(); ++comp) {
      const auto [first, last] = p.component_gen_range[comp];
      if (first <= 0) continue;
      cur[static_cast<std::size_t>(first)] = Word{Letter{static_cast<int>(comp), 1}};
      for (int a = first; a < last; ++a) {
        const int rel = under_in[static_cast<std::size_t>(a)];
        if (rel < 0) {
          // overcrossing: the meridian is unchanged across the passage
          cur[static_cast<std::size_t>(a + 1)] = cur[static_cast<std::size_t>(a)];
        } else {
          const WirtingerRelation& R = p.relations[static_cast<std::size_t>(rel)];
          const Word& conj = e.per_arc[static_cast<std::size_t>(R.over)];
          const Word by = R.sign > 0 ? conj : invert(conj);
          cur[static_cast<std::size_t>(a + 1)] =
              conjugate(cur[static_cast<std::size_t>(a)], by, g);
        }
      }
    }
    e.per_arc = std::move(cur);
    e.level = lvl;
  }
  return e;
}

// Substitutes the level-q expansion into a longitude word and freely
// reduces; the result is a word in base meridians representing the
// longitude in G/G_q.
inline Word reduce_longitude(const WirtingerPresentation& p, const LongitudeWord& l,
                             int q, const Guards& g = {}) {
  if (q < 2) throw std::invalid_argument("reduce_longitude needs q >= 2");
  const MeridianExpansion e = expand_to_level(p, q, g);
  Word out;
  for (const Letter& letter : l.word.letters()) {
    const Word& w = e.per_arc[static_cast<std::size_t>(letter.gen)];
    out = multiply(out, letter.sign > 0 ? w : invert(w), g);
  }
  return out;
}

// ---- series route ----------------------------------------------------------

// Magnus images of the level-q expansion words, computed without ever
// forming the words themselves.
inline std::vector<TruncatedSeries> expand_series_to_level(
    const WirtingerPresentation& p, int q, int n_vars, int degree_cap,
    const Guards& g = {}) {
  if (q < 1) throw std::invalid_argument("expansion level must be >= 1");
  const std::vector<int> under_in = detail::under_in_index(p);

  auto base_series = [&](int comp) {
    return generator_series(n_vars, degree_cap, Letter{comp, 1});
  };
  std::vector<TruncatedSeries> prev;
  prev.assign(static_cast<std::size_t>(p.n_generators) + 1,
              TruncatedSeries(n_vars, degree_cap));
  for (int a = 1; a <= p.n_generators; ++a) {
    prev[static_cast<std::size_t>(a)] =
        base_series(p.generator_component[static_cast<std::size_t>(a)]);
  }

  for (int lvl = 2; lvl <= q; ++lvl) {
    std::vector<TruncatedSeries> cur(static_cast<std::size_t>(p.n_generators) + 1,
                                     TruncatedSeries(n_vars, degree_cap));
    std::vector<std::optional<TruncatedSeries>> inv_cache(
        static_cast<std::size_t>(p.n_generators) + 1);
    auto inverse_of = [&](int arc) -> const TruncatedSeries& {
      auto& slot = inv_cache[static_cast<std::size_t>(arc)];
      if (!slot) slot = series_inverse(prev[static_cast<std::size_t>(arc)], g);
      return *slot;
    };
    for (std::size_t comp = 1; comp < p.component_gen_range.size(); ++comp) {
      const auto [first, last] = p.component_gen_range[comp];
      if (first <= 0) continue;
      cur[static_cast<std::size_t>(first)] = base_series(static_cast<int>(comp));
      for (int a = first; a < last; ++a) {
        const int rel = under_in[static_cast<std::size_t>(a)];
        if (rel < 0) {
          cur[static_cast<std::size_t>(a + 1)] = cur[static_cast<std::size_t>(a)];
        } else {
          const WirtingerRelation& R = p.relations[static_cast<std::size_t>(rel)];
          const TruncatedSeries& s = prev[static_cast<std::size_t>(R.over)];
          const TruncatedSeries& si = inverse_of(R.over);
          const TruncatedSeries& left = R.sign > 0 ? s : si;
          const TruncatedSeries& right = R.sign > 0 ? si : s;
          cur[static_cast<std::size_t>(a + 1)] = series_multiply(
              series_multiply(left, cur[static_cast<std::size_t>(a)], g), right, g);
        }
      }
    }
    prev = std::move(cur);
  }
  return prev;
}

// Magnus image of reduce_longitude(p, l, q), via the series route.
inline TruncatedSeries longitude_series(const WirtingerPresentation& p,
                                        const LongitudeWord& l, int q, int n_vars,
                                        int degree_cap, const Guards& g = {}) {
  const std::vector<TruncatedSeries> arcs =
      expand_series_to_level(p, q, n_vars, degree_cap, g);
  std::vector<std::optional<TruncatedSeries>> inv_cache(arcs.size());
  TruncatedSeries out = series_one(n_vars, degree_cap);
  for (const Letter& letter : l.word.letters()) {
    const std::size_t a = static_cast<std::size_t>(letter.gen);
    if (letter.sign > 0) {
      out = series_multiply(out, arcs[a], g);
    } else {
      if (!inv_cache[a]) inv_cache[a] = series_inverse(arcs[a], g);
      out = series_multiply(out, *inv_cache[a], g);
    }
  }
  return out;
}

}  // namespace milnorkit
