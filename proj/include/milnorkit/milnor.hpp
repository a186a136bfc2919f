#pragma once

// Milnor mu-bar invariants of an ordered oriented link diagram, with their
// indeterminacy Delta, and the first non-vanishing weight up to a cap.
//
// mu_bar(i_1..i_k) is the Magnus coefficient eps_{(i_1..i_{k-1})} of the
// i_k-th longitude rewritten in base meridians at level k. Delta is the
// gcd, over all deletions of one index and all cyclic permutations of the
// remainder, of the lower invariants; gcd of an all-zero set is 0, and a
// residue class (v, m) contributes gcd(|v|, m). When Delta > 0 the value
// is normalized into [0, Delta).

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "milnorkit/chen.hpp"
#include "milnorkit/diagram.hpp"
#include "milnorkit/magnus.hpp"

namespace milnorkit {

struct MilnorValue {
  MultiIndex index;
  Int value = 0;
  Int modulus = 0;  // 0 means a well-defined integer

  bool nonzero() const { return value != 0; }
};

struct MilnorTable {
  std::string link;
  int weight_cap = 0;
  std::vector<MilnorValue> entries;  // sorted by (weight, lexicographic index)
  std::optional<int> first_nonvanishing;
};

namespace detail {

inline Int residue_content(const MilnorValue& v) {
  using boost::multiprecision::gcd;
  if (v.modulus == 0) return abs(v.value);
  return gcd(abs(v.value), v.modulus);
}

}  // namespace detail

// Shared computation context for one diagram: longitude series per
// (component, level) at a fixed coefficient cap, plus the memoized
// invariant values the Delta recursion revisits constantly.
class MilnorEngine {
public:
  MilnorEngine(const LinkDiagram& d, int weight_cap, const Guards& g = {})
      : diagram_(d), cap_(weight_cap), guards_(g) {
    if (weight_cap < 2) throw std::invalid_argument("weight_cap must be >= 2");
    if (weight_cap - 1 > kMaxDegreeCap) {
      throw std::invalid_argument("weight_cap exceeds the supported maximum " +
                                  std::to_string(kMaxDegreeCap + 1));
    }
    const int n = d.n_components();
    if (n < 1) throw std::invalid_argument("diagram has no components");
    if (n > kMaxVars) {
      throw std::invalid_argument("more than 15 components is unsupported");
    }
    presentation_ = d.wirtinger();
    longitudes_.reserve(static_cast<std::size_t>(n));
    for (int c = 1; c <= n; ++c) longitudes_.push_back(d.longitude_word(c, g));

    // One pass over the levels; keep only the longitude series per level.
    const int series_cap = std::max(1, weight_cap - 1);
    const std::vector<int> under_in = chen_index();
    std::vector<TruncatedSeries> arcs = expand_series_to_level(
        presentation_, 1, n, series_cap, g);
    store_longitudes(arcs);
    for (int lvl = 2; lvl <= weight_cap; ++lvl) {
      arcs = advance_level(arcs, under_in, series_cap);
      store_longitudes(arcs);
    }
  }

  const LinkDiagram& diagram() const { return diagram_; }
  int weight_cap() const { return cap_; }

  // eps_{(I_1..I_{k-1})} of the i_k-th longitude at expansion level `level`.
  Int raw_epsilon(const MultiIndex& I, int level) const {
    const MultiIndex head(I.begin(), I.end() - 1);
    return coefficient(series_at(I.back(), level), head);
  }

  const TruncatedSeries& series_at(int component, int level) const {
    return longitude_series_.at(static_cast<std::size_t>(level - 1))
        .at(static_cast<std::size_t>(component - 1));
  }

  const MilnorValue& value(const MultiIndex& I) {
    auto it = memo_.find(I);
    if (it != memo_.end()) return it->second;
    const int k = static_cast<int>(I.size());
    if (k < 2 || k > cap_) {
      throw std::invalid_argument("multi-index weight " + std::to_string(k) +
                                  " outside 2..weight_cap");
    }
    for (int i : I) {
      if (i < 1 || i > diagram_.n_components()) {
        throw std::invalid_argument("multi-index entry " + std::to_string(i) +
                                    " is not a component of the link");
      }
    }

    MilnorValue v;
    v.index = I;
    v.value = raw_epsilon(I, k);
    if (k > 2) {
      using boost::multiprecision::gcd;
      Int delta = 0;
      MultiIndex sub(static_cast<std::size_t>(k) - 1);
      for (int drop = 0; drop < k; ++drop) {
        std::size_t w = 0;
        for (int i = 0; i < k; ++i) {
          if (i != drop) sub[w++] = I[static_cast<std::size_t>(i)];
        }
        MultiIndex rot = sub;
        for (int r = 0; r + 1 < k; ++r) {
          delta = gcd(delta, detail::residue_content(value(rot)));
          std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        }
      }
      v.modulus = delta;
      if (delta > 0) {
        v.value %= delta;
        if (v.value < 0) v.value += delta;
      }
    }
    return memo_.emplace(I, std::move(v)).first->second;
  }

private:
  std::vector<int> chen_index() const { return detail::under_in_index(presentation_); }

  std::vector<TruncatedSeries> advance_level(const std::vector<TruncatedSeries>& prev,
                                             const std::vector<int>& under_in,
                                             int series_cap) {
    const WirtingerPresentation& p = presentation_;
    const int n_vars = diagram_.n_components();
    std::vector<TruncatedSeries> cur(prev.size(), TruncatedSeries(n_vars, series_cap));
    std::vector<std::optional<TruncatedSeries>> inv_cache(prev.size());
    auto inverse_of = [&](int arc) -> const TruncatedSeries& {
      auto& slot = inv_cache[static_cast<std::size_t>(arc)];
      if (!slot) slot = series_inverse(prev[static_cast<std::size_t>(arc)], guards_);
      return *slot;
    };
    for (std::size_t comp = 1; comp < p.component_gen_range.size(); ++comp) {
      const auto [first, last] = p.component_gen_range[comp];
      if (first <= 0) continue;
      cur[static_cast<std::size_t>(first)] =
          generator_series(n_vars, series_cap, Letter{static_cast<int>(comp), 1});
      for (int a = first; a < last; ++a) {
        const int rel = under_in[static_cast<std::size_t>(a)];
        if (rel < 0) {
          cur[static_cast<std::size_t>(a + 1)] = cur[static_cast<std::size_t>(a)];
        } else {
          const WirtingerRelation& R = p.relations[static_cast<std::size_t>(rel)];
          const TruncatedSeries& s = prev[static_cast<std::size_t>(R.over)];
          const TruncatedSeries& si = inverse_of(R.over);
          cur[static_cast<std::size_t>(a + 1)] = series_multiply(
              series_multiply(R.sign > 0 ? s : si, cur[static_cast<std::size_t>(a)],
                              guards_),
              R.sign > 0 ? si : s, guards_);
        }
      }
    }
    return cur;
  }

  void store_longitudes(const std::vector<TruncatedSeries>& arcs) {
    const int n_vars = diagram_.n_components();
    const int series_cap = std::max(1, cap_ - 1);
    std::vector<TruncatedSeries> row;
    std::vector<std::optional<TruncatedSeries>> inv_cache(arcs.size());
    row.reserve(longitudes_.size());
    for (const LongitudeWord& l : longitudes_) {
      TruncatedSeries out = series_one(n_vars, series_cap);
      for (const Letter& letter : l.word.letters()) {
        const std::size_t a = static_cast<std::size_t>(letter.gen);
        if (letter.sign > 0) {
          out = series_multiply(out, arcs[a], guards_);
        } else {
          if (!inv_cache[a]) inv_cache[a] = series_inverse(arcs[a], guards_);
          out = series_multiply(out, *inv_cache[a], guards_);
        }
      }
      row.push_back(std::move(out));
    }
    longitude_series_.push_back(std::move(row));
  }

  const LinkDiagram& diagram_;
  int cap_;
  Guards guards_;
  WirtingerPresentation presentation_;
  std::vector<LongitudeWord> longitudes_;
  std::vector<std::vector<TruncatedSeries>> longitude_series_;  // [level-1][comp-1]
  std::map<MultiIndex, MilnorValue> memo_;
};

// Single invariant with its indeterminacy.
inline MilnorValue mu_bar(const LinkDiagram& d, const MultiIndex& I, int weight_cap,
                          const Guards& g = {}) {
  const int k = static_cast<int>(I.size());
  if (k < 2 || k > weight_cap) {
    throw std::invalid_argument("multi-index weight must be in 2..weight_cap");
  }
  MilnorEngine engine(d, k, g);
  return engine.value(I);
}

namespace detail {
inline void check_index_budget(int n, int w, const Guards& g) {
  unsigned long long count = 1;
  for (int i = 0; i < w; ++i) {
    count *= static_cast<unsigned long long>(n);
    if (count > g.max_series_terms) {
      throw ResourceError("weight-" + std::to_string(w) + " invariant table needs " +
                          std::to_string(n) + "^" + std::to_string(w) +
                          " entries, over the term guard");
    }
  }
}
}  // namespace detail

// All invariants of weight 2..weight_cap, short-circuited at the first
// non-vanishing weight (that weight is always completed in full).
inline MilnorTable milnor_table(const LinkDiagram& d, int weight_cap,
                                const Guards& g = {}) {
  MilnorEngine engine(d, weight_cap, g);
  MilnorTable t;
  t.link = d.name();
  t.weight_cap = weight_cap;
  const int n = d.n_components();
  for (int w = 2; w <= weight_cap; ++w) {
    detail::check_index_budget(n, w, g);
    bool any_nonzero = false;
    MultiIndex I(static_cast<std::size_t>(w), 1);
    while (true) {
      const MilnorValue& v = engine.value(I);
      t.entries.push_back(v);
      any_nonzero = any_nonzero || v.nonzero();
      // lexicographic odometer over [1..n]^w
      int pos = w - 1;
      while (pos >= 0 && I[static_cast<std::size_t>(pos)] == n) {
        I[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++I[static_cast<std::size_t>(pos)];
    }
    if (any_nonzero) {
      t.first_nonvanishing = w;
      break;
    }
  }
  return t;
}

struct FirstNonvanishing {
  std::optional<int> weight;
  std::vector<MultiIndex> witnesses;  // all nonzero indices at that weight
};

inline FirstNonvanishing first_nonvanishing(const LinkDiagram& d, int weight_cap,
                                            const Guards& g = {}) {
  const MilnorTable t = milnor_table(d, weight_cap, g);
  FirstNonvanishing out;
  out.weight = t.first_nonvanishing;
  if (out.weight) {
    for (const MilnorValue& v : t.entries) {
      if (static_cast<int>(v.index.size()) == *out.weight && v.nonzero()) {
        out.witnesses.push_back(v.index);
      }
    }
  }
  return out;
}

inline nlohmann::json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

inline nlohmann::json table_to_json(const MilnorTable& t) {
  nlohmann::json j;
  j["first_nonvanishing"] =
      t.first_nonvanishing ? nlohmann::json(*t.first_nonvanishing) : nlohmann::json();
  j["entries"] = nlohmann::json::array();
  for (const MilnorValue& v : t.entries) {
    j["entries"].push_back({{"index", v.index},
                            {"value", int_to_json(v.value)},
                            {"modulus", int_to_json(v.modulus)}});
  }
  return j;
}

}  // namespace milnorkit
