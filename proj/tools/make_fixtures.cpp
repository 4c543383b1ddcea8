// Writes the canonical distributions, the GHZ state and a few companions as
// JSON files into the directory given on the command line.

#include <filesystem>
#include <iostream>
#include <numbers>

#include "secmon/canonical.hpp"
#include "secmon/io.hpp"
#include "secmon/locc.hpp"
#include "secmon/quantum.hpp"

using namespace secmon;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  auto put = [&](const std::string& name, const io::json& j) {
    io::write_json((dir / (name + ".json")).string(), j);
  };

  put("p2ab", io::to_json(canonical::p2_ab()));
  put("p2bc", io::to_json(canonical::p2_bc()));
  put("p2ac", io::to_json(canonical::p2_ac()));
  put("p3", io::to_json(canonical::p3()));
  put("px", io::to_json(canonical::px()));
  put("p3p3", io::to_json(tensor(canonical::p3(), canonical::p3())));
  put("pxpx", io::to_json(tensor(canonical::px(), canonical::px())));
  put("product", io::to_json(canonical::uniform_bits({"A", "B", "C"})));

  // A correlated but generic tripartite distribution.
  put("p", io::to_json(JointDistribution(PartySet({"A", "B", "C"}, {2, 2, 2}),
                                         {0.25, 0.05, 0.05, 0.15, 0.1, 0.1, 0.05, 0.25})));

  put("ghz", io::to_json(ghz(3)));
  // |0> (x) |+> (x) |1>
  CVector amp = CVector::Zero(8);
  amp(1) = std::numbers::sqrt2 / 2.0;
  amp(3) = std::numbers::sqrt2 / 2.0;
  put("product_state", io::to_json(PureState(PartySet({"A", "B", "C"}, {2, 2, 2}), amp)));
  put("ghz_density", io::to_json(ghz(3).density()));

  for (const auto& p : builtin_protocols()) put("protocol_" + p.name, io::to_json(p));
  return 0;
}
