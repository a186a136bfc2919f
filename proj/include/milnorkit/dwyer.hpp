#pragma once

// Dwyer numbers of null-homologous knots presented by 0-surgery: a link
// (K, U_1..U_l) whose sublink U is an unlink, with 0-surgery on U turning
// K into a knot in the connected sum of l copies of S^1 x S^2. The Dwyer
// number D(K) equals the first non-vanishing Milnor weight of the
// presenting link; if nothing is found up to the cap, only the lower
// bound is reported, never a guessed value. Finite D also pins the depth
// of the 0-framed longitude (in G_{q-1} but not G_q) and the weight of
// the first possibly non-vanishing Massey product.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "milnorkit/bundled_links.hpp"
#include "milnorkit/diagram.hpp"
#include "milnorkit/milnor.hpp"

namespace milnorkit {

struct SurgeryPresentation {
  LinkDiagram diagram;         // components (K, U_1, ..., U_l) in order
  int knot_component = 1;      // always 1 in the file format
  std::vector<int> surgered;   // 2 .. l+1
  std::vector<int> framings;   // all zero
  bool unlink_assertion = false;

  static SurgeryPresentation parse(const std::string& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse(j);
  }

  static SurgeryPresentation parse(const nlohmann::json& j) {
    SurgeryPresentation s;
    s.diagram = LinkDiagram::from_json_doc(
        j, {"knot_component", "surgered", "framings", "unlink_assertion"});
    if (!j.contains("knot_component") || j["knot_component"] != 1) {
      throw ParseError("surgery presentations require \"knot_component\": 1");
    }
    const int n = s.diagram.n_components();
    if (n < 2) throw ParseError("a surgery presentation needs at least 2 components");
    if (!j.contains("surgered") || !j["surgered"].is_array()) {
      throw ParseError("missing \"surgered\" component list");
    }
    for (const auto& v : j["surgered"]) {
      if (!v.is_number_integer()) throw ParseError("\"surgered\" must list components");
      s.surgered.push_back(v.get<int>());
    }
    std::vector<int> expect;
    for (int c = 2; c <= n; ++c) expect.push_back(c);
    if (s.surgered != expect) {
      throw ParseError("\"surgered\" must be exactly [2.." + std::to_string(n) + "]");
    }
    if (!j.contains("framings") || !j["framings"].is_array() ||
        j["framings"].size() != s.surgered.size()) {
      throw ParseError("\"framings\" must list one framing per surgered component");
    }
    for (const auto& v : j["framings"]) {
      if (!v.is_number_integer() || v.get<int>() != 0) {
        throw ParseError("only 0-framed surgeries are supported");
      }
      s.framings.push_back(0);
    }
    if (!j.contains("unlink_assertion") || j["unlink_assertion"] != true) {
      throw ParseError("\"unlink_assertion\": true is required; the tool checks "
                       "necessary conditions but cannot certify unlinkedness");
    }
    s.unlink_assertion = true;
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json j = diagram.to_json();
    j["knot_component"] = 1;
    j["surgered"] = surgered;
    j["framings"] = framings;
    j["unlink_assertion"] = true;
    return j;
  }
};

struct ValidationReport {
  struct Item {
    std::string condition;
    bool pass = false;
    std::string detail;
  };
  std::vector<Item> items;

  bool ok() const {
    for (const Item& i : items) {
      if (!i.pass) return false;
    }
    return true;
  }
  std::string first_failure() const {
    for (const Item& i : items) {
      if (!i.pass) return i.condition;
    }
    return {};
  }
};

// Checks the hypotheses that are checkable: K null-homologous after
// surgery (lk(K, U_i) = 0), pairwise unlinked U, and all Milnor
// invariants of the sublink U vanishing up to the cap. Unlinkedness
// itself is accepted from the user's assertion.
inline ValidationReport validate_surgery(const SurgeryPresentation& s, int weight_cap,
                                         const Guards& g = {}) {
  ValidationReport r;
  const LinkDiagram& d = s.diagram;
  const int n = d.n_components();
  for (int i = 2; i <= n; ++i) {
    const long long lk = d.linking_number(1, i);
    r.items.push_back({"lk(K, U_" + std::to_string(i - 1) + ") = 0", lk == 0,
                       "lk = " + std::to_string(lk)});
  }
  for (int i = 2; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const long long lk = d.linking_number(i, j);
      r.items.push_back({"lk(U_" + std::to_string(i - 1) + ", U_" +
                             std::to_string(j - 1) + ") = 0",
                         lk == 0, "lk = " + std::to_string(lk)});
    }
  }
  if (n >= 3) {
    std::vector<int> keep;
    for (int c = 2; c <= n; ++c) keep.push_back(c);
    const LinkDiagram sub = d.sublink(keep);
    const MilnorTable t = milnor_table(sub, weight_cap, g);
    const bool pass = !t.first_nonvanishing.has_value();
    r.items.push_back(
        {"sublink (U_1..U_" + std::to_string(n - 1) +
             ") has vanishing Milnor invariants up to weight " +
             std::to_string(weight_cap),
         pass,
         pass ? "all zero"
              : "non-vanishing invariant at weight " +
                    std::to_string(*t.first_nonvanishing)});
  }
  r.items.push_back({"unlink assertion supplied", s.unlink_assertion, ""});
  return r;
}

struct DwyerReport {
  std::optional<int> dwyer_number;  // empty: only the lower bound is known
  int lower_bound = 0;              // = cap_used when dwyer_number is empty
  int cap_used = 0;
  std::vector<MultiIndex> witness;  // nonzero indices at the first weight
  std::string longitude_depth;
  std::optional<int> massey_weight;

  std::string headline() const {
    if (dwyer_number) return "D(K) = " + std::to_string(*dwyer_number);
    return "D(K) >= " + std::to_string(lower_bound) +
           " (no non-vanishing Milnor invariant up to the weight cap)";
  }
};

inline nlohmann::json report_to_json(const DwyerReport& r) {
  nlohmann::json j;
  j["dwyer_number"] = r.dwyer_number ? nlohmann::json(*r.dwyer_number) : nlohmann::json();
  j["lower_bound"] = r.lower_bound;
  j["cap_used"] = r.cap_used;
  j["witness"] = r.witness;
  j["longitude_depth"] = r.longitude_depth;
  j["massey_weight"] =
      r.massey_weight ? nlohmann::json(*r.massey_weight) : nlohmann::json();
  return j;
}

inline DwyerReport dwyer_number(const SurgeryPresentation& s, int weight_cap,
                                const Guards& g = {}) {
  const ValidationReport v = validate_surgery(s, weight_cap, g);
  if (!v.ok()) {
    throw HypothesisError("surgery hypothesis failed: " + v.first_failure());
  }
  MilnorEngine engine(s.diagram, weight_cap, g);
  DwyerReport r;
  r.cap_used = weight_cap;
  const int n = s.diagram.n_components();
  for (int w = 2; w <= weight_cap; ++w) {
    detail::check_index_budget(n, w, g);
    MultiIndex I(static_cast<std::size_t>(w), 1);
    bool any = false;
    while (true) {
      if (engine.value(I).nonzero()) {
        any = true;
        r.witness.push_back(I);
      }
      int pos = w - 1;
      while (pos >= 0 && I[static_cast<std::size_t>(pos)] == n) {
        I[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++I[static_cast<std::size_t>(pos)];
    }
    if (any) {
      r.dwyer_number = w;
      r.massey_weight = w;
      r.longitude_depth = "0-framed longitude of K lies in G_" + std::to_string(w - 1) +
                          " \\ G_" + std::to_string(w);
      // cross-check: the reduced longitude of K has Magnus depth w-1
      const int depth = engine.series_at(1, w).min_positive_weight();
      if (depth != w - 1) {
        throw std::logic_error("longitude depth cross-check failed: expected " +
                               std::to_string(w - 1) + ", computed " +
                               std::to_string(depth));
      }
      return r;
    }
  }
  r.lower_bound = weight_cap;
  r.longitude_depth = "0-framed longitude of K lies in G_" +
                      std::to_string(weight_cap - 1) + " (at least)";
  return r;
}

// ceil((q-1)/n): lower bound for the Dwyer number of an n-component
// link's knotification when its first nonzero Milnor invariant has
// weight q.
inline long long knotification_bound(long long n_components, long long first_weight) {
  if (n_components < 1 || first_weight < 2) {
    throw std::invalid_argument("knotification_bound needs n >= 1 and q >= 2");
  }
  return (first_weight - 1 + n_components - 1) / n_components;
}

// floor(r/(k+1)): an interior band sum with k bands has its first
// non-vanishing invariant in weight strictly greater than this.
inline long long band_sum_bound(long long first_weight, long long k_bands) {
  if (first_weight < 2 || k_bands < 1) {
    throw std::invalid_argument("band_sum_bound needs r >= 2 and k >= 1");
  }
  return first_weight / (k_bands + 1);
}

// Bundled surgery presentations of the knot family K_i (doubled
// commutator-realization links with 0-surgery on the unlink sublink);
// D(K_i) = 2i + 2.
inline SurgeryPresentation family_k(int i) {
  switch (i) {
    case 1: return SurgeryPresentation::parse(std::string(bundled::k_k1));
    case 2: return SurgeryPresentation::parse(std::string(bundled::k_k2));
    case 3: return SurgeryPresentation::parse(std::string(bundled::k_k3));
    default:
      throw std::invalid_argument("family_k is bundled for i in 1..3");
  }
}

}  // namespace milnorkit
