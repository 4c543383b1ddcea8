#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace secmon::cli {

struct Common {
  bool json = false;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

struct MonotoneArgs {
  std::string file;
  std::optional<std::string> monotone;  // s, t, mlambda
  double lambda = 0.5;
  std::optional<std::string> group;  // "A,B|C"
  bool all_five = false;
};

struct RunArgs {
  std::string dist;
  std::optional<std::string> protocol_file;
  std::optional<std::string> builtin;
  std::optional<std::string> expect;
};

struct QuantumArgs {
  std::optional<std::string> state;
  std::optional<std::string> measure;  // "z,x,y"
  bool monotone = false;
  std::optional<std::size_t> ghz_demo;
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::size_t> trials;
  std::optional<std::string> report;
  std::size_t max_parties = 4;
  std::size_t max_alphabet = 4;
  std::size_t max_dim = 64;
};

struct BoundArgs {
  std::string source;
  std::string target;
};

int cmd_monotone(const MonotoneArgs& a, const Common& c, std::ostream& out);
int cmd_run(const RunArgs& a, const Common& c, std::ostream& out);
int cmd_quantum(const QuantumArgs& a, const Common& c, std::ostream& out);
int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out);
int cmd_decompose(const std::string& file, const Common& c, std::ostream& out);
int cmd_bound(const BoundArgs& a, const Common& c, std::ostream& out);

}  // namespace secmon::cli
