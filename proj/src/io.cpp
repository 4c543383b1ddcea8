#include "secmon/io.hpp"

#include <complex>
#include <fstream>
#include <set>

#include "secmon/error.hpp"
#include "secmon/tolerance.hpp"

namespace secmon::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t as_index(const json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw ParseError(what + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

double as_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw ParseError(what + " must be a number");
  return j.get<double>();
}

std::vector<std::size_t> index_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(as_index(x, what + " entry"));
  return out;
}

std::vector<std::string> label_list(const json& j) {
  if (!j.is_array()) throw ParseError("'parties' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError("'parties' must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::complex<double> as_complex(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("complex entries must be [re, im]");
  return {as_number(j[0], "real part"), as_number(j[1], "imaginary part")};
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

PartySet parties_from(const json& j, const char* cards_key) {
  return PartySet(label_list(field(j, "parties")),
                  index_list(field(j, cards_key), std::string("'") + cards_key + "'"));
}

}  // namespace

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

void write_json(const std::string& path, const json& value) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << value.dump(2) << '\n';
}

JointDistribution distribution_from_json(const json& j) {
  auto ps = parties_from(j, "cardinalities");
  const auto& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("'entries' must be an array");
  std::vector<double> table(ps.total(), 0.0);
  std::set<std::size_t> seen;
  JointDistribution shape = JointDistribution::uniform(ps);
  for (const auto& e : entries) {
    const auto outcome = index_list(field(e, "outcome"), "'outcome'");
    if (outcome.size() != ps.size()) {
      throw ParseError("outcome has " + std::to_string(outcome.size()) + " symbols, expected " +
                       std::to_string(ps.size()));
    }
    for (std::size_t i = 0; i < outcome.size(); ++i) {
      if (outcome[i] >= ps.cardinality(i)) {
        throw ParseError("symbol " + std::to_string(outcome[i]) + " out of range for party '" +
                         ps.label(i) + "'");
      }
    }
    const auto index = shape.index_of(outcome);
    if (!seen.insert(index).second) throw ParseError("duplicate outcome in 'entries'");
    table[index] = as_number(field(e, "p"), "'p'");
  }
  return JointDistribution(std::move(ps), std::move(table));
}

json to_json(const JointDistribution& dist) {
  json entries = json::array();
  for (std::size_t i = 0; i < dist.table().size(); ++i) {
    if (dist.table()[i] == 0.0) continue;
    entries.push_back({{"outcome", dist.outcome_of(i)}, {"p", dist.table()[i]}});
  }
  return {{"parties", dist.parties().labels()},
          {"cardinalities", dist.parties().cardinalities()},
          {"entries", std::move(entries)}};
}

JointDistribution load_distribution(const std::string& path) {
  return distribution_from_json(read_json(path));
}

StochasticChannel channel_from_json(const json& j) {
  const auto in = as_index(field(j, "in"), "'in'");
  const auto out = as_index(field(j, "out"), "'out'");
  const auto& rows = field(j, "kernel");
  if (!rows.is_array() || rows.size() != in) {
    throw ParseError("'kernel' must have " + std::to_string(in) + " rows");
  }
  std::vector<double> k;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != out) {
      throw ParseError("each kernel row must have " + std::to_string(out) + " entries");
    }
    for (const auto& x : row) k.push_back(as_number(x, "kernel entry"));
  }
  return StochasticChannel(in, out, std::move(k));
}

json to_json(const StochasticChannel& ch) {
  json rows = json::array();
  for (std::size_t a = 0; a < ch.in_cardinality(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < ch.out_cardinality(); ++b) row.push_back(ch(a, b));
    rows.push_back(std::move(row));
  }
  return {{"in", ch.in_cardinality()}, {"out", ch.out_cardinality()}, {"kernel", std::move(rows)}};
}

Protocol protocol_from_json(const json& j) {
  Protocol p;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("'name' must be a string");
    p.name = j["name"].get<std::string>();
  }
  const auto& steps = field(j, "steps");
  if (!steps.is_array()) throw ParseError("'steps' must be an array");
  for (const auto& s : steps) {
    ProtocolStep step;
    const auto& kind = field(s, "kind");
    if (!kind.is_string()) throw ParseError("'kind' must be a string");
    step.kind = step_kind_from_string(kind.get<std::string>());
    const auto& party = field(s, "party");
    if (!party.is_string()) throw ParseError("'party' must be a string");
    step.party = party.get<std::string>();
    if (s.contains("given")) step.given = index_list(s["given"], "'given'");
    if (s.contains("channel") && s.contains("channels")) {
      throw ParseError("a step has either 'channel' or 'channels'");
    }
    if (s.contains("channel")) step.channels.push_back(channel_from_json(s["channel"]));
    if (s.contains("channels")) {
      if (!s["channels"].is_array()) throw ParseError("'channels' must be an array");
      for (const auto& c : s["channels"]) step.channels.push_back(channel_from_json(c));
    }
    p.steps.push_back(std::move(step));
  }
  if (j.contains("relabel")) {
    if (!j["relabel"].is_array()) throw ParseError("'relabel' must be an array");
    for (const auto& r : j["relabel"]) {
      const auto& party = field(r, "party");
      if (!party.is_string()) throw ParseError("relabel 'party' must be a string");
      p.relabel.push_back({party.get<std::string>(), index_list(field(r, "map"), "'map'"),
                           as_index(field(r, "out"), "'out'")});
    }
  }
  return p;
}

json to_json(const Protocol& protocol) {
  json steps = json::array();
  for (const auto& s : protocol.steps) {
    json step{{"kind", to_string(s.kind)}, {"party", s.party}};
    if (!s.given.empty()) {
      step["given"] = s.given;
      json chans = json::array();
      for (const auto& c : s.channels) chans.push_back(to_json(c));
      step["channels"] = std::move(chans);
    } else if (!s.channels.empty()) {
      step["channel"] = to_json(s.channels.front());
    }
    steps.push_back(std::move(step));
  }
  json out{{"name", protocol.name}, {"steps", std::move(steps)}};
  if (!protocol.relabel.empty()) {
    json maps = json::array();
    for (const auto& m : protocol.relabel) {
      maps.push_back({{"party", m.party}, {"map", m.map}, {"out", m.out}});
    }
    out["relabel"] = std::move(maps);
  }
  return out;
}

Protocol load_protocol(const std::string& path) { return protocol_from_json(read_json(path)); }

LoadedState state_from_json(const json& j) {
  auto ps = parties_from(j, "dims");
  if (ps.total() > tol::kMaxHilbertDim) {
    throw InstanceTooLarge("instance too large: Hilbert dimension above 2^12");
  }
  const auto d = static_cast<Eigen::Index>(ps.total());
  const bool has_matrix = j.contains("matrix");
  const bool has_amplitudes = j.contains("amplitudes");
  if (has_matrix == has_amplitudes) {
    throw ParseError("a state file needs exactly one of 'matrix' or 'amplitudes'");
  }
  if (has_amplitudes) {
    const auto& a = j["amplitudes"];
    if (!a.is_array() || a.size() != ps.total()) {
      throw ParseError("'amplitudes' must have " + std::to_string(ps.total()) + " entries");
    }
    CVector v(d);
    for (Eigen::Index i = 0; i < d; ++i) v(i) = as_complex(a[static_cast<std::size_t>(i)]);
    PureState psi(std::move(ps), std::move(v));
    auto rho = psi.density();
    return {std::move(rho), std::move(psi)};
  }
  const auto& m = j["matrix"];
  if (!m.is_array() || m.size() != ps.total()) {
    throw ParseError("'matrix' must have " + std::to_string(ps.total()) + " rows");
  }
  CMatrix mat(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const auto& row = m[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != ps.total()) {
      throw ParseError("each matrix row must have " + std::to_string(ps.total()) + " entries");
    }
    for (Eigen::Index c = 0; c < d; ++c) mat(r, c) = as_complex(row[static_cast<std::size_t>(c)]);
  }
  return {DensityMatrix(std::move(ps), std::move(mat)), std::nullopt};
}

json to_json(const DensityMatrix& rho) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < rho.matrix().rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < rho.matrix().cols(); ++c) row.push_back(complex_json(rho.matrix()(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"parties", rho.parties().labels()},
          {"dims", rho.parties().cardinalities()},
          {"matrix", std::move(rows)}};
}

json to_json(const PureState& psi) {
  json amps = json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) {
    amps.push_back(complex_json(psi.amplitudes()(i)));
  }
  return {{"parties", psi.parties().labels()},
          {"dims", psi.parties().cardinalities()},
          {"amplitudes", std::move(amps)}};
}

LoadedState load_state(const std::string& path) { return state_from_json(read_json(path)); }

json to_json(const verify::CheckReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"seed", f.seed},
                        {"description", f.description},
                        {"observed", f.observed},
                        {"bound", f.bound}});
  }
  return {{"check_name", report.check_name},
          {"trials", report.trials},
          {"failures", std::move(failures)},
          {"tolerance", report.tolerance},
          {"verdict", report.passed() ? "pass" : "fail"}};
}

json to_json(const std::vector<verify::CheckReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

}  // namespace secmon::io
