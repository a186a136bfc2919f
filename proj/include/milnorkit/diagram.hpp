#pragma once

// Oriented link diagrams given as PD codes, and the combinatorial data
// derived from them: crossing signs, linking numbers, Wirtinger
// presentations and 0-framed longitudes.
//
// Conventions, fixed once and used everywhere:
//
//  * A crossing is a tuple [a, b, c, d] of arc labels listed in planar
//    order around the crossing starting at the incoming under-strand a;
//    the under-strand runs a -> c, the over-strand occupies slots b and d.
//  * Arcs are the diagram edges, cut at every passage (over and under), so
//    a C-crossing diagram has 2C arcs. Labels are exactly 1..2C and run
//    consecutively along each component in traversal order; component k
//    owns a contiguous label range. Components are ordered by their lowest
//    arc label; crossingless unknot components are counted separately and
//    sit after the arcful ones.
//  * The over-strand direction (b -> d or d -> b) is recovered from the
//    arc numbering: along a strand the outgoing arc at a passage is the
//    successor of the incoming one. Where both readings are cyclically
//    consistent the resolver propagates the global in/out matching, and
//    any crossings still ambiguous after propagation require an explicit
//    "over_dir" entry ("ascending" = over runs from the lower-numbered
//    over-arc to the higher, "descending" the reverse), keyed by 0-based
//    crossing index.
//  * Crossing sign: +1 when the over-strand enters at slot d, -1 when it
//    enters at slot b. This is the usual right-hand convention; the
//    positive Hopf link [[1,3,2,4],[3,1,4,2]] gets linking number +1.

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "milnorkit/errors.hpp"
#include "milnorkit/word.hpp"

namespace milnorkit {

struct Crossing {
  std::array<int, 4> slot{};  // [a, b, c, d]
  int over_in_slot = 3;       // 1 or 3

  int under_in() const { return slot[0]; }
  int under_out() const { return slot[2]; }
  int over_in() const { return slot[static_cast<std::size_t>(over_in_slot)]; }
  int over_out() const { return slot[static_cast<std::size_t>(4 - over_in_slot)]; }
  int sign() const { return over_in_slot == 3 ? 1 : -1; }
};

struct Component {
  int first_arc = 0;  // 0 means no arcs (crossingless unknot)
  int last_arc = -1;
  bool has_arcs() const { return first_arc >= 1; }
  int arc_count() const { return has_arcs() ? last_arc - first_arc + 1 : 0; }
};

// One conjugation relation per crossing:
//   gen(under_out) = gen(over)^sign gen(under_in) gen(over)^-sign
// where `over` is the incoming over-arc. With the meridian orientation
// used here the conjugating exponent is the negative of the crossing
// sign; the opposite pairing with the longitude convention below breaks
// the cyclic symmetry of the resulting Milnor invariants.
struct WirtingerRelation {
  int under_in = 0;
  int over = 0;
  int under_out = 0;
  int sign = 1;
};

struct WirtingerPresentation {
  int n_generators = 0;                  // one per arc, one per crossingless component
  std::vector<int> generator_component;  // [1..n_generators] -> component
  std::vector<WirtingerRelation> relations;
  std::vector<int> base_meridian;                       // [1..n_components] -> generator
  std::vector<std::pair<int, int>> component_gen_range;  // contiguous generator range
};

struct LongitudeWord {
  int component = 0;
  Word word;  // in arc generators; 0-framed by construction
};

class LinkDiagram {
public:
  LinkDiagram() = default;

  // --- construction ---------------------------------------------------

  static LinkDiagram from_json_doc(const nlohmann::json& j,
                              const std::vector<std::string>& extra_allowed_keys = {});

  static LinkDiagram parse_pd(const std::string& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return from_json_doc(j);
  }

  // Trusted path for programmatic construction: over-strand directions are
  // already resolved. Runs the full consistency validation.
  static LinkDiagram from_parts(std::string name, std::vector<Crossing> crossings,
                                std::vector<Component> components) {
    LinkDiagram d;
    d.name_ = std::move(name);
    d.crossings_ = std::move(crossings);
    d.components_ = std::move(components);
    d.finish_validate();
    return d;
  }

  // --- basic queries ----------------------------------------------------

  const std::string& name() const { return name_; }
  int n_components() const { return static_cast<int>(components_.size()); }
  int n_arcs() const { return n_arcs_; }
  int n_crossings() const { return static_cast<int>(crossings_.size()); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Component>& components() const { return components_; }

  int component_of_arc(int arc) const {
    require_arc(arc);
    return arc_comp_[static_cast<std::size_t>(arc)];
  }

  int succ_arc(int arc) const {
    require_arc(arc);
    const Component& c = components_[static_cast<std::size_t>(
        arc_comp_[static_cast<std::size_t>(arc)] - 1)];
    return arc == c.last_arc ? c.first_arc : arc + 1;
  }

  // crossing at which the arc ends (is the incoming under- or over-arc)
  int terminal_crossing(int arc) const {
    require_arc(arc);
    return terminal_crossing_[static_cast<std::size_t>(arc)];
  }

  int under_component(int crossing) const {
    return arc_comp_[static_cast<std::size_t>(
        crossings_[static_cast<std::size_t>(crossing)].under_in())];
  }
  int over_component(int crossing) const {
    return arc_comp_[static_cast<std::size_t>(
        crossings_[static_cast<std::size_t>(crossing)].over_in())];
  }

  // --- invariants of the diagram ---------------------------------------

  // Half the signed count of crossings between components i and j.
  long long linking_number(int i, int j) const {
    require_component(i);
    require_component(j);
    if (i == j) throw std::invalid_argument("linking_number requires i != j");
    long long sum = 0;
    for (int x = 0; x < n_crossings(); ++x) {
      const int cu = under_component(x), co = over_component(x);
      if ((cu == i && co == j) || (cu == j && co == i)) {
        sum += crossings_[static_cast<std::size_t>(x)].sign();
      }
    }
    if (sum % 2 != 0) {
      throw ParseError("signed crossing count between components " + std::to_string(i) +
                       " and " + std::to_string(j) +
                       " is odd; the PD code is not planar-realizable");
    }
    return sum / 2;
  }

  long long writhe(int i) const {
    require_component(i);
    long long sum = 0;
    for (int x = 0; x < n_crossings(); ++x) {
      if (under_component(x) == i && over_component(x) == i) {
        sum += crossings_[static_cast<std::size_t>(x)].sign();
      }
    }
    return sum;
  }

  // --- Wirtinger data -----------------------------------------------------

  WirtingerPresentation wirtinger() const {
    WirtingerPresentation p;
    p.n_generators = n_arcs_;
    p.generator_component.assign(static_cast<std::size_t>(n_arcs_) + 1, 0);
    for (int a = 1; a <= n_arcs_; ++a) {
      p.generator_component[static_cast<std::size_t>(a)] =
          arc_comp_[static_cast<std::size_t>(a)];
    }
    p.base_meridian.assign(static_cast<std::size_t>(n_components()) + 1, 0);
    p.component_gen_range.assign(static_cast<std::size_t>(n_components()) + 1, {0, -1});
    for (int c = 1; c <= n_components(); ++c) {
      const Component& comp = components_[static_cast<std::size_t>(c - 1)];
      if (comp.has_arcs()) {
        p.base_meridian[static_cast<std::size_t>(c)] = comp.first_arc;
        p.component_gen_range[static_cast<std::size_t>(c)] = {comp.first_arc,
                                                              comp.last_arc};
      } else {
        // crossingless unknot: a synthetic generator past the arc labels
        const int g = ++p.n_generators;
        p.generator_component.push_back(c);
        p.base_meridian[static_cast<std::size_t>(c)] = g;
        p.component_gen_range[static_cast<std::size_t>(c)] = {g, g};
      }
    }
    p.relations.reserve(crossings_.size());
    for (const Crossing& x : crossings_) {
      p.relations.push_back({x.under_in(), x.over_in(), x.under_out(), -x.sign()});
    }
    return p;
  }

  // Traverses component i once from its base arc; every undercrossing
  // contributes the incoming over-arc generator with the crossing sign,
  // and the accumulated self-writhe is cancelled against the base meridian
  // so the word is 0-framed.
  LongitudeWord longitude_word(int i, const Guards& g = {}) const {
    require_component(i);
    const Component& comp = components_[static_cast<std::size_t>(i - 1)];
    LongitudeWord l{i, Word{}};
    if (!comp.has_arcs()) return l;
    for (int arc = comp.first_arc; arc <= comp.last_arc; ++arc) {
      const int x = terminal_crossing_[static_cast<std::size_t>(arc)];
      const Crossing& cr = crossings_[static_cast<std::size_t>(x)];
      if (cr.under_in() == arc) {
        l.word.push_reduced({cr.over_in(), cr.sign()}, g);
      }
    }
    const long long w = writhe(i);
    for (long long k = 0, n = w >= 0 ? w : -w; k < n; ++k) {
      l.word.push_reduced({comp.first_arc, w > 0 ? -1 : 1}, g);
    }
    return l;
  }

  // --- derived diagrams -------------------------------------------------

  LinkDiagram sublink(const std::vector<int>& keep_components) const;
  LinkDiagram reorder_components(const std::vector<int>& new_order) const;
  static LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b,
                                    std::string name);

  nlohmann::json to_json() const;

private:
  void require_arc(int arc) const {
    if (arc < 1 || arc > n_arcs_) {
      throw std::invalid_argument("arc label " + std::to_string(arc) + " out of range");
    }
  }
  void require_component(int c) const {
    if (c < 1 || c > n_components()) {
      throw std::invalid_argument("component index " + std::to_string(c) +
                                  " out of range 1.." + std::to_string(n_components()));
    }
  }

  // Validates arcs/components/crossings coherence and builds the lookup
  // tables. Assumes over_in_slot is already set on every crossing.
  void finish_validate();

  std::string name_;
  std::vector<Crossing> crossings_;
  std::vector<Component> components_;
  int n_arcs_ = 0;
  std::vector<int> arc_comp_;           // [1..n_arcs] -> component
  std::vector<int> terminal_crossing_;  // [1..n_arcs] -> crossing where the arc ends
};

// ---------------------------------------------------------------------------
// implementation
// ---------------------------------------------------------------------------

inline void LinkDiagram::finish_validate() {
  const int n_cr = static_cast<int>(crossings_.size());
  n_arcs_ = 2 * n_cr;

  // every arc label in 1..2C, each exactly twice
  std::vector<int> occurrences(static_cast<std::size_t>(n_arcs_) + 1, 0);
  for (const Crossing& x : crossings_) {
    for (int s : x.slot) {
      if (s < 1 || s > n_arcs_) {
        throw ParseError("arc label " + std::to_string(s) +
                         " outside 1.." + std::to_string(n_arcs_) +
                         " (labels must be exactly 1..2C)");
      }
      ++occurrences[static_cast<std::size_t>(s)];
    }
    if (x.over_in_slot != 1 && x.over_in_slot != 3) {
      throw ParseError("internal: over_in_slot must be 1 or 3");
    }
  }
  for (int a = 1; a <= n_arcs_; ++a) {
    if (occurrences[static_cast<std::size_t>(a)] != 2) {
      throw ParseError("arc label " + std::to_string(a) + " occurs " +
                       std::to_string(occurrences[static_cast<std::size_t>(a)]) +
                       " times; every arc must occur exactly twice");
    }
  }

  // component ranges partition 1..2C; crossingless entries carry no arcs
  arc_comp_.assign(static_cast<std::size_t>(n_arcs_) + 1, 0);
  int expect = 1;
  for (std::size_t ci = 0; ci < components_.size(); ++ci) {
    const Component& c = components_[ci];
    if (!c.has_arcs()) continue;
    if (c.first_arc != expect || c.last_arc < c.first_arc) {
      throw ParseError("component arc ranges must partition 1.." +
                       std::to_string(n_arcs_) + " contiguously");
    }
    for (int a = c.first_arc; a <= c.last_arc; ++a) {
      arc_comp_[static_cast<std::size_t>(a)] = static_cast<int>(ci) + 1;
    }
    expect = c.last_arc + 1;
  }
  if (expect != n_arcs_ + 1) {
    throw ParseError("component arc ranges do not cover all arcs 1.." +
                     std::to_string(n_arcs_));
  }

  // under-strand consistency and the global in/out matching
  std::vector<char> in_used(static_cast<std::size_t>(n_arcs_) + 1, 0);
  std::vector<char> out_used(static_cast<std::size_t>(n_arcs_) + 1, 0);
  terminal_crossing_.assign(static_cast<std::size_t>(n_arcs_) + 1, -1);
  for (int xi = 0; xi < n_cr; ++xi) {
    const Crossing& x = crossings_[static_cast<std::size_t>(xi)];
    if (succ_arc(x.under_in()) != x.under_out()) {
      throw ParseError("crossing #" + std::to_string(xi) +
                       ": under-strand does not run from slot a to slot c along "
                       "the arc numbering");
    }
    if (succ_arc(x.over_in()) != x.over_out()) {
      throw ParseError("crossing #" + std::to_string(xi) +
                       ": over-strand direction is inconsistent with the arc numbering");
    }
    for (int arc : {x.under_in(), x.over_in()}) {
      if (in_used[static_cast<std::size_t>(arc)]++) {
        throw ParseError("arc " + std::to_string(arc) +
                         " terminates at two crossings; traversal is inconsistent");
      }
      terminal_crossing_[static_cast<std::size_t>(arc)] = xi;
    }
    for (int arc : {x.under_out(), x.over_out()}) {
      if (out_used[static_cast<std::size_t>(arc)]++) {
        throw ParseError("arc " + std::to_string(arc) +
                         " originates at two crossings; traversal is inconsistent");
      }
    }
  }
}

inline LinkDiagram LinkDiagram::from_json_doc(const nlohmann::json& j,
                                         const std::vector<std::string>& extra_allowed_keys) {
  if (!j.is_object()) throw ParseError("PD document must be a JSON object");
  static const std::vector<std::string> known = {
      "name", "crossings", "over_dir", "components", "zero_crossing_components"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(known.begin(), known.end(), it.key()) == known.end() &&
        std::find(extra_allowed_keys.begin(), extra_allowed_keys.end(), it.key()) ==
            extra_allowed_keys.end()) {
      throw ParseError("unknown key \"" + it.key() + "\" in PD document");
    }
  }

  LinkDiagram d;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
    d.name_ = j["name"].get<std::string>();
  }
  if (!j.contains("crossings") || !j["crossings"].is_array()) {
    throw ParseError("missing \"crossings\" array");
  }
  std::vector<std::array<int, 4>> tuples;
  for (const auto& t : j["crossings"]) {
    if (!t.is_array() || t.size() != 4) {
      throw ParseError("each crossing must be an array of 4 arc labels");
    }
    std::array<int, 4> tup{};
    for (int k = 0; k < 4; ++k) {
      if (!t[static_cast<std::size_t>(k)].is_number_integer()) {
        throw ParseError("crossing entries must be integers");
      }
      tup[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k)].get<int>();
    }
    tuples.push_back(tup);
  }
  const int n_cr = static_cast<int>(tuples.size());
  const int n_arcs = 2 * n_cr;

  // occurrence check first so the component inference can trust the labels
  {
    std::vector<int> occ(static_cast<std::size_t>(n_arcs) + 1, 0);
    for (const auto& t : tuples) {
      for (int s : t) {
        if (s < 1 || s > n_arcs) {
          throw ParseError("arc label " + std::to_string(s) + " outside 1.." +
                           std::to_string(n_arcs) + " (labels must be exactly 1..2C)");
        }
        if (++occ[static_cast<std::size_t>(s)] > 2) {
          throw ParseError("arc label " + std::to_string(s) +
                           " occurs more than twice");
        }
      }
    }
    for (int a = 1; a <= n_arcs; ++a) {
      if (occ[static_cast<std::size_t>(a)] != 2) {
        throw ParseError("arc label " + std::to_string(a) + " occurs " +
                         std::to_string(occ[static_cast<std::size_t>(a)]) +
                         " times; every arc must occur exactly twice");
      }
    }
  }

  // component ranges: validate against the passage structure, or infer
  // from it. Along a strand the two arcs of any passage are consecutive,
  // so consecutive-pair unions (with whole-range unions at wraps)
  // reconstruct the partition exactly.
  std::vector<int> parent(static_cast<std::size_t>(n_arcs) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  auto unite_range = [&](int lo, int hi) {
    for (int k = lo; k < hi; ++k) unite(k, k + 1);
  };
  for (const auto& t : tuples) {
    const int a = t[0], c = t[2];
    if (c == a + 1) {
      unite(a, c);
    } else if (c < a) {
      unite_range(c, a);
    }  // otherwise invalid; the traversal check reports it later
    const int b = t[1], dd = t[3];
    if (b != dd) {
      const int lo = std::min(b, dd), hi = std::max(b, dd);
      if (hi == lo + 1) {
        unite(lo, hi);
      } else {
        unite_range(lo, hi);
      }
    }
  }
  std::vector<Component> comps;
  for (int a = 1; a <= n_arcs;) {
    int b = a;
    while (b + 1 <= n_arcs && find(b + 1) == find(a)) ++b;
    comps.push_back({a, b});
    a = b + 1;
  }
  if (j.contains("components")) {
    if (!j["components"].is_array()) throw ParseError("\"components\" must be an array");
    std::vector<Component> given;
    for (const auto& r : j["components"]) {
      if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
          !r[1].is_number_integer()) {
        throw ParseError("each component must be [first_arc, last_arc]");
      }
      given.push_back({r[0].get<int>(), r[1].get<int>()});
    }
    if (given.size() != comps.size() ||
        !std::equal(given.begin(), given.end(), comps.begin(),
                    [](const Component& x, const Component& y) {
                      return x.first_arc == y.first_arc && x.last_arc == y.last_arc;
                    })) {
      throw ParseError("\"components\" does not match the traversal structure of the "
                       "crossing list");
    }
  }

  // resolve over-strand directions
  auto comp_of = [&](int arc) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (arc >= comps[i].first_arc && arc <= comps[i].last_arc) return static_cast<int>(i);
    }
    return -1;
  };
  auto succ = [&](int arc) {
    const Component& c = comps[static_cast<std::size_t>(comp_of(arc))];
    return arc == c.last_arc ? c.first_arc : arc + 1;
  };

  std::vector<char> in_used(static_cast<std::size_t>(n_arcs) + 1, 0);
  std::vector<char> out_used(static_cast<std::size_t>(n_arcs) + 1, 0);
  for (const auto& t : tuples) {
    if (succ(t[0]) != t[2]) {
      throw ParseError("under-strand of crossing [" + std::to_string(t[0]) + "," +
                       std::to_string(t[1]) + "," + std::to_string(t[2]) + "," +
                       std::to_string(t[3]) +
                       "] does not run a -> c along the arc numbering");
    }
    in_used[static_cast<std::size_t>(t[0])] = 1;
    out_used[static_cast<std::size_t>(t[2])] = 1;
  }

  std::vector<int> resolved(static_cast<std::size_t>(n_cr), 0);  // 0 pending, 1 or 3
  auto viable = [&](int xi, int slot) {
    const auto& t = tuples[static_cast<std::size_t>(xi)];
    const int in = t[static_cast<std::size_t>(slot)];
    const int out = t[static_cast<std::size_t>(4 - slot)];
    return succ(in) == out && !in_used[static_cast<std::size_t>(in)] &&
           !out_used[static_cast<std::size_t>(out)];
  };
  auto resolve = [&](int xi, int slot) {
    const auto& t = tuples[static_cast<std::size_t>(xi)];
    resolved[static_cast<std::size_t>(xi)] = slot;
    in_used[static_cast<std::size_t>(t[static_cast<std::size_t>(slot)])] = 1;
    out_used[static_cast<std::size_t>(t[static_cast<std::size_t>(4 - slot)])] = 1;
  };
  auto propagate = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int xi = 0; xi < n_cr; ++xi) {
        if (resolved[static_cast<std::size_t>(xi)]) continue;
        const bool vb = viable(xi, 1), vd = viable(xi, 3);
        if (!vb && !vd) {
          throw ParseError("crossing #" + std::to_string(xi) +
                           ": no consistent over-strand orientation exists");
        }
        if (vb != vd) {
          resolve(xi, vb ? 1 : 3);
          changed = true;
        }
      }
    }
  };
  propagate();
  if (j.contains("over_dir")) {
    if (!j["over_dir"].is_object()) {
      throw ParseError("\"over_dir\" must map crossing indices to "
                       "\"ascending\"/\"descending\"");
    }
    for (auto it = j["over_dir"].begin(); it != j["over_dir"].end(); ++it) {
      int xi = -1;
      try {
        xi = std::stoi(it.key());
      } catch (...) {
        throw ParseError("over_dir key \"" + it.key() + "\" is not a crossing index");
      }
      if (xi < 0 || xi >= n_cr) {
        throw ParseError("over_dir key " + std::to_string(xi) +
                         " out of range 0.." + std::to_string(n_cr - 1));
      }
      const std::string v = it.value().is_string() ? it.value().get<std::string>() : "";
      if (v != "ascending" && v != "descending") {
        throw ParseError("over_dir values must be \"ascending\" or \"descending\"");
      }
      const auto& t = tuples[static_cast<std::size_t>(xi)];
      const int lo_slot = t[1] < t[3] ? 1 : 3;
      const int want = v == "ascending" ? lo_slot : 4 - lo_slot;
      if (resolved[static_cast<std::size_t>(xi)]) {
        if (resolved[static_cast<std::size_t>(xi)] != want) {
          throw ParseError("over_dir for crossing #" + std::to_string(xi) +
                           " contradicts the forced over-strand orientation");
        }
        continue;
      }
      if (!viable(xi, want)) {
        throw ParseError("over_dir for crossing #" + std::to_string(xi) +
                         " is inconsistent with the diagram");
      }
      resolve(xi, want);
      propagate();
    }
  }
  for (int xi = 0; xi < n_cr; ++xi) {
    if (!resolved[static_cast<std::size_t>(xi)]) {
      throw ParseError("over-strand orientation of crossing #" + std::to_string(xi) +
                       " is ambiguous; add an \"over_dir\" entry for it");
    }
  }

  d.crossings_.reserve(tuples.size());
  for (int xi = 0; xi < n_cr; ++xi) {
    d.crossings_.push_back(
        Crossing{tuples[static_cast<std::size_t>(xi)], resolved[static_cast<std::size_t>(xi)]});
  }
  d.components_ = comps;
  if (j.contains("zero_crossing_components")) {
    if (!j["zero_crossing_components"].is_number_integer() ||
        j["zero_crossing_components"].get<int>() < 0) {
      throw ParseError("\"zero_crossing_components\" must be a non-negative integer");
    }
    for (int k = 0; k < j["zero_crossing_components"].get<int>(); ++k) {
      d.components_.push_back(Component{});
    }
  }
  d.finish_validate();
  return d;
}

inline nlohmann::json LinkDiagram::to_json() const {
  // The schema appends crossingless components after the arcful ones.
  int zero = 0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!components_[i].has_arcs()) {
      ++zero;
    } else if (zero > 0) {
      throw std::logic_error("cannot serialize: crossingless components must come last");
    }
  }
  nlohmann::json j;
  if (!name_.empty()) j["name"] = name_;
  j["crossings"] = nlohmann::json::array();
  for (const Crossing& x : crossings_) {
    j["crossings"].push_back({x.slot[0], x.slot[1], x.slot[2], x.slot[3]});
  }
  nlohmann::json comps = nlohmann::json::array();
  for (const Component& c : components_) {
    if (c.has_arcs()) comps.push_back({c.first_arc, c.last_arc});
  }
  j["components"] = comps;
  if (zero > 0) j["zero_crossing_components"] = zero;

  // find the crossings an over_dir-free parse cannot resolve
  nlohmann::json probe = j;
  nlohmann::json over_dir = nlohmann::json::object();
  for (int attempt = 0; attempt < n_crossings() + 1; ++attempt) {
    if (!over_dir.empty()) probe["over_dir"] = over_dir;
    try {
      LinkDiagram back = from_json_doc(probe);
      for (int xi = 0; xi < n_crossings(); ++xi) {
        if (back.crossings_[static_cast<std::size_t>(xi)].over_in_slot !=
            crossings_[static_cast<std::size_t>(xi)].over_in_slot) {
          throw std::logic_error("serialization round-trip changed an over-strand");
        }
      }
      if (!over_dir.empty()) j["over_dir"] = over_dir;
      return j;
    } catch (const ParseError& e) {
      const std::string msg = e.what();
      const auto pos = msg.find("crossing #");
      if (msg.find("ambiguous") == std::string::npos || pos == std::string::npos) throw;
      const int xi = std::stoi(msg.substr(pos + 10));
      const Crossing& x = crossings_[static_cast<std::size_t>(xi)];
      const bool asc = x.over_in() == std::min(x.slot[1], x.slot[3]);
      over_dir[std::to_string(xi)] = asc ? "ascending" : "descending";
    }
  }
  throw std::logic_error("serialization failed to stabilize over_dir");
}

inline LinkDiagram LinkDiagram::sublink(const std::vector<int>& keep_components) const {
  std::vector<char> keep(static_cast<std::size_t>(n_components()) + 1, 0);
  for (int c : keep_components) {
    require_component(c);
    keep[static_cast<std::size_t>(c)] = 1;
  }
  auto crossing_kept = [&](int xi) {
    return keep[static_cast<std::size_t>(under_component(xi))] &&
           keep[static_cast<std::size_t>(over_component(xi))];
  };

  // new arc labels: within each kept component, arcs merge across passages
  // at discarded crossings; a new arc ends at each kept passage.
  std::vector<int> arc_map(static_cast<std::size_t>(n_arcs_) + 1, 0);
  std::vector<Component> new_comps;
  int next = 0;
  for (int c = 1; c <= n_components(); ++c) {
    if (!keep[static_cast<std::size_t>(c)]) continue;
    const Component& comp = components_[static_cast<std::size_t>(c - 1)];
    if (!comp.has_arcs()) {
      new_comps.push_back(Component{});
      continue;
    }
    std::vector<int> kept_pos;  // old arcs whose terminal passage survives
    for (int a = comp.first_arc; a <= comp.last_arc; ++a) {
      if (crossing_kept(terminal_crossing_[static_cast<std::size_t>(a)])) {
        kept_pos.push_back(a);
      }
    }
    if (kept_pos.empty()) {
      new_comps.push_back(Component{});
      continue;
    }
    for (int a = comp.first_arc; a <= comp.last_arc; ++a) {
      auto it = std::lower_bound(kept_pos.begin(), kept_pos.end(), a);
      const int idx = it == kept_pos.end() ? 0 : static_cast<int>(it - kept_pos.begin());
      arc_map[static_cast<std::size_t>(a)] = next + idx + 1;
    }
    new_comps.push_back({next + 1, next + static_cast<int>(kept_pos.size())});
    next += static_cast<int>(kept_pos.size());
  }

  std::vector<Crossing> new_crossings;
  for (int xi = 0; xi < n_crossings(); ++xi) {
    if (!crossing_kept(xi)) continue;
    const Crossing& x = crossings_[static_cast<std::size_t>(xi)];
    Crossing nx = x;
    for (auto& s : nx.slot) s = arc_map[static_cast<std::size_t>(s)];
    new_crossings.push_back(nx);
  }
  return from_parts(name_ + "-sublink", std::move(new_crossings), std::move(new_comps));
}

inline LinkDiagram LinkDiagram::reorder_components(const std::vector<int>& new_order) const {
  if (static_cast<int>(new_order.size()) != n_components()) {
    throw std::invalid_argument("reorder_components needs a full permutation");
  }
  std::vector<char> seen(static_cast<std::size_t>(n_components()) + 1, 0);
  std::vector<int> arc_map(static_cast<std::size_t>(n_arcs_) + 1, 0);
  std::vector<Component> new_comps;
  int next = 0;
  for (int old_c : new_order) {
    require_component(old_c);
    if (seen[static_cast<std::size_t>(old_c)]++) {
      throw std::invalid_argument("reorder_components: duplicate component index");
    }
    const Component& comp = components_[static_cast<std::size_t>(old_c - 1)];
    if (!comp.has_arcs()) {
      new_comps.push_back(Component{});
      continue;
    }
    for (int a = comp.first_arc; a <= comp.last_arc; ++a) {
      arc_map[static_cast<std::size_t>(a)] = next + (a - comp.first_arc) + 1;
    }
    new_comps.push_back({next + 1, next + comp.arc_count()});
    next += comp.arc_count();
  }
  std::vector<Crossing> new_crossings = crossings_;
  for (Crossing& x : new_crossings) {
    for (auto& s : x.slot) s = arc_map[static_cast<std::size_t>(s)];
  }
  return from_parts(name_, std::move(new_crossings), std::move(new_comps));
}

inline LinkDiagram LinkDiagram::disjoint_union(const LinkDiagram& a, const LinkDiagram& b,
                                               std::string name) {
  std::vector<Crossing> crossings = a.crossings_;
  for (Crossing x : b.crossings_) {
    for (auto& s : x.slot) s += a.n_arcs_;
    crossings.push_back(x);
  }
  std::vector<Component> comps;
  std::vector<Component> zero;
  for (const Component& c : a.components_) {
    (c.has_arcs() ? comps : zero).push_back(c);
  }
  for (Component c : b.components_) {
    if (c.has_arcs()) {
      c.first_arc += a.n_arcs_;
      c.last_arc += a.n_arcs_;
      comps.push_back(c);
    } else {
      zero.push_back(c);
    }
  }
  comps.insert(comps.end(), zero.begin(), zero.end());
  return from_parts(std::move(name), std::move(crossings), std::move(comps));
}

}  // namespace milnorkit
