#pragma once

// Construction toolkit for the bundled example links: braid closures and
// the Whitehead / Bing doubling transforms. Used by the fixture generator
// and the test suites; not part of the library API.
//
// Everything is assembled at the level of "passages": a component is a
// cyclic sequence of (crossing, role) visits, and arc labels fall out of
// the visit order. Local over/under patterns and crossing signs for the
// clasp and hook regions were worked out in a fixed planar frame (cable
// strands horizontal, forward copy on y=0 heading east, return copy on
// y=1 heading west); the invariant computations downstream are the
// arbiter that the patterns are the intended ones.

#include <string>
#include <vector>

#include "milnorkit/diagram.hpp"

namespace milnorkit::linkgen {

struct PassageRef {
  int crossing = 0;
  bool under = true;
};

struct Assembly {
  std::vector<int> sign;                       // per crossing
  std::vector<std::vector<PassageRef>> comps;  // cyclic visit order

  LinkDiagram build(std::string name) const {
    const int n_cr = static_cast<int>(sign.size());
    struct Slots {
      int under_in = 0, under_out = 0, over_in = 0, over_out = 0;
      int seen_under = 0, seen_over = 0;
    };
    std::vector<Slots> slots(static_cast<std::size_t>(n_cr));
    std::vector<Component> components;
    int base = 0;
    for (const auto& comp : comps) {
      const int p = static_cast<int>(comp.size());
      if (p == 0) {
        components.push_back(Component{});
        continue;
      }
      for (int i = 0; i < p; ++i) {
        const PassageRef& q = comp[static_cast<std::size_t>(i)];
        const int out_arc = base + i + 1;
        const int in_arc = base + (i + p - 1) % p + 1;
        Slots& s = slots.at(static_cast<std::size_t>(q.crossing));
        if (q.under) {
          if (s.seen_under++) throw std::logic_error("crossing visited under twice+");
          s.under_in = in_arc;
          s.under_out = out_arc;
        } else {
          if (s.seen_over++) throw std::logic_error("crossing visited over twice+");
          s.over_in = in_arc;
          s.over_out = out_arc;
        }
      }
      components.push_back({base + 1, base + p});
      base += p;
    }
    std::vector<Crossing> crossings;
    crossings.reserve(static_cast<std::size_t>(n_cr));
    for (int x = 0; x < n_cr; ++x) {
      const Slots& s = slots[static_cast<std::size_t>(x)];
      if (s.seen_under != 1 || s.seen_over != 1) {
        throw std::logic_error("crossing " + std::to_string(x) +
                               " not visited exactly once over and once under");
      }
      Crossing cr;
      if (sign[static_cast<std::size_t>(x)] > 0) {
        cr.slot = {s.under_in, s.over_out, s.under_out, s.over_in};
        cr.over_in_slot = 3;
      } else {
        cr.slot = {s.under_in, s.over_in, s.under_out, s.over_out};
        cr.over_in_slot = 1;
      }
      crossings.push_back(cr);
    }
    return LinkDiagram::from_parts(std::move(name), std::move(crossings),
                                   std::move(components));
  }
};

// Closure of a braid word on n strands. Letters are +-j for the standard
// generators; a positive letter is a positive crossing (the strand coming
// from position j+1 passes over). Strands run downward, closure joins
// bottom position p back to top position p; components are ordered by
// their smallest starting position.
inline LinkDiagram braid_closure(int n_strands, const std::vector<int>& word,
                                 std::string name) {
  if (n_strands < 1) throw std::invalid_argument("braid needs >= 1 strand");
  std::vector<int> pos(static_cast<std::size_t>(n_strands));  // position -> strand
  for (int i = 0; i < n_strands; ++i) pos[static_cast<std::size_t>(i)] = i;

  std::vector<int> sign;
  std::vector<std::vector<PassageRef>> strand_passages(
      static_cast<std::size_t>(n_strands));
  for (std::size_t t = 0; t < word.size(); ++t) {
    const int letter = word[t];
    const int j = letter > 0 ? letter : -letter;
    if (j < 1 || j >= n_strands) {
      throw std::invalid_argument("braid letter " + std::to_string(letter) +
                                  " out of range");
    }
    const int left = pos[static_cast<std::size_t>(j - 1)];
    const int right = pos[static_cast<std::size_t>(j)];
    const int x = static_cast<int>(sign.size());
    sign.push_back(letter > 0 ? 1 : -1);
    // positive: right strand over; negative: left strand over
    const int over = letter > 0 ? right : left;
    const int under = letter > 0 ? left : right;
    strand_passages[static_cast<std::size_t>(over)].push_back({x, false});
    strand_passages[static_cast<std::size_t>(under)].push_back({x, true});
    std::swap(pos[static_cast<std::size_t>(j - 1)], pos[static_cast<std::size_t>(j)]);
  }

  // closure: the strand ending at bottom position p continues as strand p
  std::vector<int> next_strand(static_cast<std::size_t>(n_strands));
  for (int p = 0; p < n_strands; ++p) {
    next_strand[static_cast<std::size_t>(pos[static_cast<std::size_t>(p)])] = p;
  }
  Assembly a;
  a.sign = std::move(sign);
  std::vector<char> used(static_cast<std::size_t>(n_strands), 0);
  for (int s0 = 0; s0 < n_strands; ++s0) {
    if (used[static_cast<std::size_t>(s0)]) continue;
    std::vector<PassageRef> cycle;
    int s = s0;
    do {
      used[static_cast<std::size_t>(s)] = 1;
      const auto& ps = strand_passages[static_cast<std::size_t>(s)];
      cycle.insert(cycle.end(), ps.begin(), ps.end());
      s = next_strand[static_cast<std::size_t>(s)];
    } while (s != s0);
    if (cycle.empty()) {
      a.comps.push_back({});  // free strand: crossingless unknot
    } else {
      a.comps.push_back(std::move(cycle));
    }
  }
  return a.build(std::move(name));
}

// ---- braid word helpers ---------------------------------------------------

inline std::vector<int> braid_inverse(const std::vector<int>& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline std::vector<int> braid_reduce(const std::vector<int>& w) {
  std::vector<int> out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline std::vector<int> braid_concat(std::initializer_list<std::vector<int>> words) {
  std::vector<int> out;
  for (const auto& w : words) out.insert(out.end(), w.begin(), w.end());
  return braid_reduce(out);
}

inline std::vector<int> braid_commutator(const std::vector<int>& u,
                                         const std::vector<int>& v) {
  return braid_concat({u, v, braid_inverse(u), braid_inverse(v)});
}

// Pure braid generator A_{ij} (i < j): strand j lassos strand i.
inline std::vector<int> pure_braid_generator(int i, int j) {
  if (i < 1 || i >= j) throw std::invalid_argument("need 1 <= i < j");
  std::vector<int> w;
  for (int k = j - 1; k > i; --k) w.push_back(k);
  w.push_back(i);
  w.push_back(i);
  for (int k = i + 1; k <= j - 1; ++k) w.push_back(-k);
  return w;
}

// Closure of the left-normed pure braid commutator [[A_{1n}, A_{2n}],
// ..., A_{n-1,n}] on n strands. The last component's longitude is the
// left-normed commutator of the other meridians, so the closure has its
// first non-vanishing invariant mu(12...n) = +-1 in weight n; deleting
// strand n deletes every crossing, so the other components form a
// crossingless unlink. n = 3 gives the Borromean rings (the braid word is
// a conjugate of [sigma1^2, sigma2^2]).
inline LinkDiagram commutator_closure(int n, std::string name) {
  if (n < 3) throw std::invalid_argument("commutator_closure needs n >= 3");
  std::vector<int> w = pure_braid_generator(1, n);
  for (int i = 2; i < n; ++i) w = braid_commutator(w, pure_braid_generator(i, n));
  return braid_closure(n, w, std::move(name));
}

struct DoublingOptions {
  int clasp_sign = 1;  // sign of both clasp crossings
};

// Replaces component `target` by its untwisted Whitehead double: a single
// component following the cable forward and back with a self-clasp. The
// target must have no self-crossings, so its blackboard framing vanishes.
inline LinkDiagram double_component(const LinkDiagram& d, int target,
                                    std::string name, DoublingOptions opt = {}) {
  if (target < 1 || target > d.n_components()) {
    throw std::invalid_argument("target component out of range");
  }
  const Component& tc = d.components()[static_cast<std::size_t>(target - 1)];
  if (!tc.has_arcs()) throw std::invalid_argument("cannot double a crossingless unknot here");
  // no self-crossings: blackboard framing is 0, so the double is untwisted
  for (int x = 0; x < d.n_crossings(); ++x) {
    if (d.under_component(x) == target && d.over_component(x) == target) {
      throw std::invalid_argument("target component has self-crossings");
    }
  }

  // original passage lists per component
  std::vector<std::vector<PassageRef>> old_comps(
      static_cast<std::size_t>(d.n_components()));
  for (int c = 1; c <= d.n_components(); ++c) {
    const Component& comp = d.components()[static_cast<std::size_t>(c - 1)];
    if (!comp.has_arcs()) continue;
    for (int arc = comp.first_arc; arc <= comp.last_arc; ++arc) {
      const int x = d.terminal_crossing(arc);
      old_comps[static_cast<std::size_t>(c - 1)].push_back(
          {x, d.crossings()[static_cast<std::size_t>(x)].under_in() == arc});
    }
  }
  const auto& target_passages = old_comps[static_cast<std::size_t>(target - 1)];
  const int m = static_cast<int>(target_passages.size());

  // new crossing ids
  Assembly a;
  std::vector<int> keep_id(static_cast<std::size_t>(d.n_crossings()), -1);
  std::vector<int> f_id(static_cast<std::size_t>(d.n_crossings()), -1);
  std::vector<int> b_id(static_cast<std::size_t>(d.n_crossings()), -1);
  auto involves_target = [&](int x) {
    return d.under_component(x) == target || d.over_component(x) == target;
  };
  for (int x = 0; x < d.n_crossings(); ++x) {
    const int s = d.crossings()[static_cast<std::size_t>(x)].sign();
    if (involves_target(x)) {
      f_id[static_cast<std::size_t>(x)] = static_cast<int>(a.sign.size());
      a.sign.push_back(s);
      b_id[static_cast<std::size_t>(x)] = static_cast<int>(a.sign.size());
      a.sign.push_back(-s);
    } else {
      keep_id[static_cast<std::size_t>(x)] = static_cast<int>(a.sign.size());
      a.sign.push_back(s);
    }
  }
  // genuine clasp: roles and signs are geometrically tied
  const int clasp_bot = static_cast<int>(a.sign.size());
  a.sign.push_back(opt.clasp_sign);
  const int clasp_top = static_cast<int>(a.sign.size());
  a.sign.push_back(opt.clasp_sign);

  // Order in which the other strand meets the two cable copies. In the
  // cable frame (forward copy south, heading east): a strand crossing
  // over the cable northbound is a positive crossing and meets the
  // forward copy first.
  auto f_first = [&](int x) {
    const bool target_over = d.over_component(x) == target;
    const int s = d.crossings()[static_cast<std::size_t>(x)].sign();
    return target_over ? s > 0 : s < 0;
  };

  for (int c = 1; c <= d.n_components(); ++c) {
    if (c == target) {
      // pattern components in place of the target
      std::vector<PassageRef> fold;
      for (int i = 0; i < m; ++i) {
        fold.push_back({f_id[static_cast<std::size_t>(target_passages
                                                          [static_cast<std::size_t>(i)]
                                                              .crossing)],
                        target_passages[static_cast<std::size_t>(i)].under});
      }
      std::vector<PassageRef> w = std::move(fold);
      const bool ul_under_bot = opt.clasp_sign > 0;
      w.push_back({clasp_bot, ul_under_bot});
      w.push_back({clasp_top, !ul_under_bot});
      for (int i = m - 1; i >= 0; --i) {
        w.push_back({b_id[static_cast<std::size_t>(
                         target_passages[static_cast<std::size_t>(i)].crossing)],
                     target_passages[static_cast<std::size_t>(i)].under});
      }
      w.push_back({clasp_top, ul_under_bot});
      w.push_back({clasp_bot, !ul_under_bot});
      a.comps.push_back(std::move(w));
    } else {
      std::vector<PassageRef> nc;
      for (const PassageRef& q : old_comps[static_cast<std::size_t>(c - 1)]) {
        if (involves_target(q.crossing)) {
          const int xf = f_id[static_cast<std::size_t>(q.crossing)];
          const int xb = b_id[static_cast<std::size_t>(q.crossing)];
          if (f_first(q.crossing)) {
            nc.push_back({xf, q.under});
            nc.push_back({xb, q.under});
          } else {
            nc.push_back({xb, q.under});
            nc.push_back({xf, q.under});
          }
        } else {
          nc.push_back({keep_id[static_cast<std::size_t>(q.crossing)], q.under});
        }
      }
      a.comps.push_back(std::move(nc));
    }
  }
  return a.build(std::move(name));
}

}  // namespace milnorkit::linkgen
