// Regenerates the bundled link corpus under data/links/ and the embedded
// copies in include/milnorkit/bundled_links.hpp. The outputs are committed;
// this tool exists so the constructions stay reproducible.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "milnorkit/diagram.hpp"
#include "support/linkgen.hpp"

using namespace milnorkit;
using namespace milnorkit::linkgen;

namespace {

nlohmann::json surgery_doc(const LinkDiagram& d, int n_surgered) {
  nlohmann::json j = d.to_json();
  j["knot_component"] = 1;
  nlohmann::json surgered = nlohmann::json::array();
  nlohmann::json framings = nlohmann::json::array();
  for (int i = 0; i < n_surgered; ++i) {
    surgered.push_back(2 + i);
    framings.push_back(0);
  }
  j["surgered"] = surgered;
  j["framings"] = framings;
  j["unlink_assertion"] = true;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string out_dir = argc > 1 ? argv[1] : "data/links";
  const std::string header_path =
      argc > 2 ? argv[2] : "include/milnorkit/bundled_links.hpp";

  std::map<std::string, nlohmann::json> docs;

  docs["hopf"] = LinkDiagram::parse_pd(
                     R"({"name":"hopf","crossings":[[1,3,2,4],[3,1,4,2]]})")
                     .to_json();
  docs["hopf_alt"] = braid_closure(3, {1, 1, 2}, "hopf_alt").to_json();
  docs["unlink2"] = nlohmann::json{{"name", "unlink2"},
                                   {"crossings", nlohmann::json::array()},
                                   {"components", nlohmann::json::array()},
                                   {"zero_crossing_components", 2}};

  const LinkDiagram borromean =
      braid_closure(3, {1, -2, 1, -2, 1, -2}, "borromean");
  docs["borromean"] = borromean.to_json();
  docs["borromean_alt"] = commutator_closure(3, "borromean_alt").to_json();

  const LinkDiagram hopf =
      LinkDiagram::parse_pd(docs["hopf"].dump());
  const LinkDiagram whitehead = double_component(hopf, 2, "whitehead");
  docs["whitehead"] = whitehead.to_json();

  const LinkDiagram w3br = double_component(borromean, 3, "w3br");
  docs["w3br"] = w3br.to_json();

  const LinkDiagram c4 = commutator_closure(4, "c4");
  docs["c4"] = c4.to_json();

  // surgery presentations: the doubled component first, then the
  // 0-surgered unlink
  LinkDiagram k1d = whitehead.reorder_components({2, 1});
  nlohmann::json k1 = surgery_doc(k1d, 1);
  k1["name"] = "k1";
  docs["k1"] = k1;

  LinkDiagram k2d = w3br.reorder_components({3, 1, 2});
  nlohmann::json k2 = surgery_doc(k2d, 2);
  k2["name"] = "k2";
  docs["k2"] = k2;

  LinkDiagram k3base = double_component(c4, 4, "k3");
  LinkDiagram k3d = k3base.reorder_components({4, 1, 2, 3});
  nlohmann::json k3 = surgery_doc(k3d, 3);
  k3["name"] = "k3";
  docs["k3"] = k3;

  for (const auto& [name, doc] : docs) {
    const std::string path = out_dir + "/" + name + ".json";
    std::ofstream f(path);
    if (!f) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    f << doc.dump(2) << "\n";
    std::cout << "wrote " << path << "\n";
  }

  std::ofstream h(header_path);
  if (!h) {
    std::cerr << "cannot write " << header_path << "\n";
    return 1;
  }
  h << "#pragma once\n\n"
    << "// Generated by tools/fixturegen.cpp; do not edit by hand.\n"
    << "// JSON documents for the bundled example links, embedded so the\n"
    << "// library needs no data directory at runtime.\n\n"
    << "namespace milnorkit::bundled {\n\n";
  for (const auto& [name, doc] : docs) {
    h << "inline const char* k_" << name << " = R\"json(" << doc.dump()
      << ")json\";\n\n";
  }
  h << "}  // namespace milnorkit::bundled\n";
  std::cout << "wrote " << header_path << "\n";
  return 0;
}
