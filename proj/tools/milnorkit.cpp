// milnorkit: Milnor invariants of links from PD codes, and Dwyer numbers
// of 0-surgery knot presentations.
//
// Exit codes: 0 success, 2 input error, 3 hypothesis failure, 4 resource
// guard tripped.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "milnorkit/dwyer.hpp"
#include "milnorkit/magnus.hpp"
#include "milnorkit/milnor.hpp"

using namespace milnorkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitResource = 4;

struct Common {
  int cap = 8;
  std::string format = "table";
  Guards guards;

  bool json() const { return format == "json"; }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read input file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string index_str(const MultiIndex& I) {
  std::string s = "(";
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(I[i]);
  }
  return s + ")";
}

void print_table(const MilnorTable& t, int weight_cap) {
  if (t.first_nonvanishing) {
    const int q = *t.first_nonvanishing;
    std::cout << "first non-vanishing weight: " << q << "\n";
    std::cout << "weight-" << q << " invariants:\n";
    for (const MilnorValue& v : t.entries) {
      if (static_cast<int>(v.index.size()) != q) continue;
      std::cout << "  mu" << index_str(v.index) << " = " << v.value;
      if (v.modulus != 0) std::cout << "  (mod " << v.modulus << ")";
      std::cout << "\n";
    }
  } else {
    std::cout << "all Milnor invariants vanish up to weight " << weight_cap << "\n";
  }
}

int cmd_magnus(const Common& c, const std::string& word_text, int n_vars, int cap) {
  const Word w = parse_word(word_text, n_vars, c.guards);
  const TruncatedSeries s = magnus_expand(w, n_vars, cap, c.guards);
  const LcsDepthReport rep = lcs_min_weight(w, cap, c.guards);
  if (c.json()) {
    nlohmann::json j;
    j["series"] = nlohmann::json::array();
    for (const auto& [m, coef] : s.sorted_terms()) {
      j["series"].push_back(
          {{"coeff", int_to_json(coef)}, {"index", mono_indices(m)}});
    }
    j["min_nonzero_weight"] = rep.min_nonzero_weight
                                  ? nlohmann::json(*rep.min_nonzero_weight)
                                  : nlohmann::json();
    j["cap"] = cap;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << series_serialize(s);
    std::cout << rep.describe() << "\n";
  }
  return kExitOk;
}

int cmd_mu(const Common& c, const std::string& input) {
  const LinkDiagram d = LinkDiagram::parse_pd(read_input(input));
  const MilnorTable t = milnor_table(d, c.cap, c.guards);
  if (c.json()) {
    std::cout << table_to_json(t).dump(2) << "\n";
  } else {
    if (!d.name().empty()) std::cout << "link: " << d.name() << "\n";
    print_table(t, c.cap);
  }
  return kExitOk;
}

int cmd_validate(const Common& c, const std::string& input) {
  const SurgeryPresentation s = SurgeryPresentation::parse(read_input(input));
  const ValidationReport r = validate_surgery(s, c.cap, c.guards);
  if (c.json()) {
    nlohmann::json j;
    j["ok"] = r.ok();
    j["conditions"] = nlohmann::json::array();
    for (const auto& item : r.items) {
      j["conditions"].push_back({{"condition", item.condition},
                                 {"pass", item.pass},
                                 {"detail", item.detail}});
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& item : r.items) {
      std::cout << (item.pass ? "PASS " : "FAIL ") << item.condition;
      if (!item.pass && !item.detail.empty()) std::cout << " [" << item.detail << "]";
      std::cout << "\n";
    }
  }
  return r.ok() ? kExitOk : kExitHypothesis;
}

int cmd_dwyer(const Common& c, const std::string& input) {
  const SurgeryPresentation s = SurgeryPresentation::parse(read_input(input));
  const DwyerReport r = dwyer_number(s, c.cap, c.guards);
  if (c.json()) {
    std::cout << report_to_json(r).dump(2) << "\n";
  } else {
    std::cout << r.headline() << "\n";
    std::cout << r.longitude_depth << "\n";
    if (r.massey_weight) {
      std::cout << "first possibly non-vanishing Massey product weight: "
                << *r.massey_weight << "\n";
    }
    if (!r.witness.empty()) {
      std::cout << "witnesses:";
      for (const MultiIndex& I : r.witness) std::cout << " mu" << index_str(I);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor invariants and Dwyer numbers of links"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  if (const char* env = std::getenv("MILNORKIT_CAP")) {
    try {
      common.cap = std::stoi(env);
    } catch (...) {
      std::cerr << "bad MILNORKIT_CAP value\n";
      return kExitInput;
    }
  }
  app.add_option("--cap", common.cap, "invariant weight cap")
      ->capture_default_str();
  app.add_option("--format", common.format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  app.add_option("--guard-terms", common.guards.max_series_terms,
                 "series term-count guard");
  app.add_option("--guard-letters", common.guards.max_word_letters,
                 "word length guard");

  std::string word_text;
  int n_vars = 2;
  int magnus_cap = 0;
  auto* magnus = app.add_subcommand("magnus", "Magnus expansion of a free-group word");
  magnus->add_option("--word", word_text, "word, e.g. \"x1 x2^-1\"")->required();
  magnus->add_option("--vars", n_vars, "number of generators")->required();
  magnus->add_option("--cap", magnus_cap, "expansion degree cap (defaults to --cap)");

  std::string mu_input;
  auto* mu = app.add_subcommand("mu", "Milnor invariant table of a PD diagram");
  mu->add_option("input", mu_input, "diagram JSON file, or - for stdin")->required();

  std::string dwyer_input;
  auto* dwyer = app.add_subcommand("dwyer", "Dwyer number of a surgery presentation");
  dwyer->add_option("input", dwyer_input, "surgery JSON file, or - for stdin")
      ->required();

  std::string validate_input;
  auto* validate =
      app.add_subcommand("validate", "check the hypotheses of a surgery presentation");
  validate->add_option("input", validate_input, "surgery JSON file, or - for stdin")
      ->required();

  std::vector<long long> knotify, bands;
  auto* bounds = app.add_subcommand("bounds", "knotification and band-sum bounds");
  auto* opt_knotify =
      bounds->add_option("--knotify", knotify,
                         "n q: D(knotification) >= ceil((q-1)/n)")
          ->expected(2);
  auto* opt_bands = bounds
                        ->add_option("--bands", bands,
                                     "r k: band sum first weight > floor(r/(k+1))")
                        ->expected(2);
  opt_knotify->excludes(opt_bands);

  CLI11_PARSE(app, argc, argv);

  try {
    if (common.cap < 2 || common.cap > kMaxDegreeCap) {
      throw std::invalid_argument("--cap must be in 2.." +
                                  std::to_string(kMaxDegreeCap));
    }
    if (common.guards.max_series_terms == 0 || common.guards.max_word_letters == 0) {
      throw std::invalid_argument("resource guards must be positive");
    }
    if (magnus->parsed()) {
      const int cap = magnus_cap > 0 ? magnus_cap : common.cap;
      if (cap < 2 || cap > kMaxDegreeCap) {
        throw std::invalid_argument("magnus cap must be in 2.." +
                                    std::to_string(kMaxDegreeCap));
      }
      if (n_vars < 1 || n_vars > kMaxVars) {
        throw std::invalid_argument("--vars must be in 1.." + std::to_string(kMaxVars));
      }
      return cmd_magnus(common, word_text, n_vars, cap);
    }
    if (mu->parsed()) return cmd_mu(common, mu_input);
    if (dwyer->parsed()) return cmd_dwyer(common, dwyer_input);
    if (validate->parsed()) return cmd_validate(common, validate_input);
    if (bounds->parsed()) {
      if (!knotify.empty()) {
        std::cout << "D(knotification) >= " << knotification_bound(knotify[0], knotify[1])
                  << "\n";
      } else if (!bands.empty()) {
        std::cout << "first non-vanishing weight > " << band_sum_bound(bands[0], bands[1])
                  << "\n";
      } else {
        std::cerr << "bounds: provide --knotify n q or --bands r k\n";
        return kExitInput;
      }
      return kExitOk;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitResource;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis failure: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
