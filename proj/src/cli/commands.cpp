#include "commands.hpp"

#include <cmath>
#include <sstream>

#include <fmt/core.h>

#include "secmon/cli.hpp"
#include "secmon/error.hpp"
#include "secmon/io.hpp"
#include "secmon/locc.hpp"
#include "secmon/monotones.hpp"
#include "secmon/quantum.hpp"
#include "secmon/verify.hpp"

namespace secmon::cli {

namespace {

using io::json;

double snap(double v, double tol) { return std::abs(v) <= tol ? 0.0 : v; }

std::string fixed(double v, double tol) { return fmt::format("{:.6f}", snap(v, tol)); }

std::string integer_or_fixed(double v, double tol) {
  const double r = std::round(v);
  if (std::abs(v - r) <= tol) return fmt::format("{:.0f}", r == 0.0 ? 0.0 : r);
  return fixed(v, tol);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

// "A,B|C" -> {{A,B},{C}}
std::vector<std::vector<std::string>> parse_partition(const std::string& spec) {
  std::vector<std::vector<std::string>> blocks;
  for (const auto& block : split(spec, '|')) {
    auto labels = split(block, ',');
    if (block.empty() || std::any_of(labels.begin(), labels.end(),
                                     [](const std::string& l) { return l.empty(); })) {
      throw InvalidArgument("bad --group spec '" + spec + "' (expected e.g. A,B|C)");
    }
    blocks.push_back(std::move(labels));
  }
  return blocks;
}

std::string outcome_string(const std::vector<std::size_t>& outcome) {
  std::string s;
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(outcome[i]);
  }
  return s;
}

void print_distribution(const JointDistribution& d, double tol, std::ostream& out) {
  std::string header;
  for (const auto& l : d.parties().labels()) header += l + ' ';
  out << header << " p\n";
  for (std::size_t i = 0; i < d.table().size(); ++i) {
    if (d.table()[i] <= tol) continue;
    out << outcome_string(d.outcome_of(i)) << "  " << fixed(d.table()[i], tol) << '\n';
  }
}

void emit(const json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

}  // namespace

int cmd_monotone(const MonotoneArgs& a, const Common& c, std::ostream& out) {
  auto dist = io::load_distribution(a.file);
  if (a.group) dist = group(dist, parse_partition(*a.group));

  if (a.all_five) {
    const auto v = five_vector(dist).values();
    if (c.json) {
      emit({{"s2_a_bc", snap(v[0], c.tolerance)},
            {"s2_b_ac", snap(v[1], c.tolerance)},
            {"s2_c_ab", snap(v[2], c.tolerance)},
            {"s3", snap(v[3], c.tolerance)},
            {"t3", snap(v[4], c.tolerance)}},
           out);
    } else {
      out << fmt::format("{} {} {} {} {}\n", integer_or_fixed(v[0], c.tolerance),
                         integer_or_fixed(v[1], c.tolerance), integer_or_fixed(v[2], c.tolerance),
                         integer_or_fixed(v[3], c.tolerance), integer_or_fixed(v[4], c.tolerance));
    }
    return kOk;
  }

  if (a.monotone) {
    double v = 0.0;
    std::string name;
    if (*a.monotone == "s") {
      v = s_n(dist);
      name = "S_n";
    } else if (*a.monotone == "t") {
      v = t_n(dist);
      name = "T_n";
    } else if (*a.monotone == "mlambda") {
      v = m_lambda(dist, a.lambda);
      name = "M_lambda";
    } else {
      throw InvalidArgument("unknown monotone '" + *a.monotone + "' (expected s, t or mlambda)");
    }
    if (c.json) {
      json j{{"monotone", name}, {"value", snap(v, c.tolerance)}};
      if (name == "M_lambda") j["lambda"] = a.lambda;
      emit(j, out);
    } else {
      out << fixed(v, c.tolerance) << '\n';
    }
    return kOk;
  }

  const auto s = s_n(dist), t = t_n(dist);
  if (c.json) {
    emit({{"S_n", snap(s, c.tolerance)}, {"T_n", snap(t, c.tolerance)}}, out);
  } else {
    out << "S_n " << fixed(s, c.tolerance) << '\n' << "T_n " << fixed(t, c.tolerance) << '\n';
  }
  return kOk;
}

int cmd_run(const RunArgs& a, const Common& c, std::ostream& out) {
  if (a.builtin.has_value() == a.protocol_file.has_value()) {
    throw InvalidArgument("give either a protocol file or --builtin <name>");
  }
  const auto dist = io::load_distribution(a.dist);
  const auto protocol = a.builtin ? builtin_protocol(*a.builtin) : io::load_protocol(*a.protocol_file);
  std::optional<JointDistribution> target;
  if (a.expect) target = io::load_distribution(*a.expect);

  const auto ens = run_protocol(dist, protocol);
  const auto s = s_n_monotone(), t = t_n_monotone();
  const double s0 = s.eval(dist), t0 = t.eval(dist);
  const double s1 = ensemble_monotone(ens, s), t1 = ensemble_monotone(ens, t);
  std::optional<MatchReport> match;
  if (target) match = match_target(ens, protocol, *target);

  if (c.json) {
    json branches = json::array();
    for (const auto& m : ens.members()) {
      branches.push_back({{"weight", m.weight}, {"transcript", m.transcript}});
    }
    json j{{"protocol", protocol.name},
           {"branches", std::move(branches)},
           {"before", {{"S_n", snap(s0, c.tolerance)}, {"T_n", snap(t0, c.tolerance)}}},
           {"after", {{"S_n", snap(s1, c.tolerance)}, {"T_n", snap(t1, c.tolerance)}}}};
    if (match) {
      j["expect"] = {{"file", *a.expect},
                     {"max_distance", match->max_distance},
                     {"matches", match->matches}};
    }
    emit(j, out);
  } else {
    out << fmt::format("protocol {}: {} branch{}\n", protocol.name.empty() ? "(unnamed)" : protocol.name,
                       ens.size(), ens.size() == 1 ? "" : "es");
    out << "  weight    transcript\n";
    for (const auto& m : ens.members()) {
      out << "  " << fixed(m.weight, c.tolerance) << "  "
          << (m.transcript.empty() ? "-" : outcome_string(m.transcript)) << '\n';
    }
    out << "S_n " << fixed(s0, c.tolerance) << " -> " << fixed(s1, c.tolerance) << '\n';
    out << "T_n " << fixed(t0, c.tolerance) << " -> " << fixed(t1, c.tolerance) << '\n';
    if (match) {
      out << fmt::format("expect {}: max total-variation distance {:.3g}, {}\n", *a.expect,
                         match->max_distance, match->matches ? "match" : "no match");
    }
  }
  return match && !match->matches ? kVerification : kOk;
}

namespace {

int ghz_demo(std::size_t n, const Common& c, std::ostream& out) {
  const auto psi = ghz(n);
  const auto rho = psi.density();
  const double s = q_s_n(rho), t = q_t_n(rho);
  const std::vector<CMatrix> z(n, basis_z(2)), x(n, basis_x(2));
  const auto pz = measure_all(rho, z), px = measure_all(rho, x);
  const auto hz = sum_halving_bound(psi, pz), hx = sum_halving_bound(psi, px);
  const double half = (s + t) / 2.0;
  auto equality = [&](const SumHalving& h) { return std::abs(h.s_plus_t - half) <= c.tolerance; };

  if (c.json) {
    auto pair = [&](double a, double b) {
      return json{{"S_n", snap(a, c.tolerance)}, {"T_n", snap(b, c.tolerance)}};
    };
    auto halving = [&](const SumHalving& h) {
      return json{{"bound", h.bound}, {"s_plus_t", h.s_plus_t}, {"satisfied", h.satisfied},
                  {"equality", equality(h)}};
    };
    emit({{"parties", n},
          {"ghz", pair(s, t)},
          {"z_measured", pair(s_n(pz), t_n(pz))},
          {"x_measured", pair(s_n(px), t_n(px))},
          {"sum_halving_z", halving(hz)},
          {"sum_halving_x", halving(hx)}},
         out);
    return kOk;
  }
  const auto sn = fmt::format("S_{}", n), tn = fmt::format("T_{}", n);
  auto row = [&](const std::string& what, double a, double b) {
    out << fmt::format("{:<15} {} = {}  {} = {}\n", what, sn, fixed(a, c.tolerance), tn,
                       fixed(b, c.tolerance));
  };
  row(fmt::format("GHZ_{}", n), s, t);
  row("z measurement", s_n(pz), t_n(pz));
  row("x measurement", s_n(px), t_n(px));
  auto verdict = [&](const char* basis, const SumHalving& h) {
    out << fmt::format("{}: {} + {} = {} <= sum of local entropies {} (half of {}): {}{}\n",
                       basis, sn, tn, fixed(h.s_plus_t, c.tolerance), fixed(h.bound, c.tolerance),
                       fixed(s + t, c.tolerance), h.satisfied ? "satisfied" : "violated", equality(h) ? ", equality" : "");
  };
  verdict("z", hz);
  verdict("x", hx);
  return kOk;
}

}  // namespace

int cmd_quantum(const QuantumArgs& a, const Common& c, std::ostream& out) {
  if (a.ghz_demo) {
    if (a.state || a.measure || a.monotone) {
      throw InvalidArgument("--ghz-demo takes no state file, --measure or --monotone");
    }
    return ghz_demo(*a.ghz_demo, c, out);
  }
  if (!a.state) throw InvalidArgument("quantum needs a state file or --ghz-demo <n>");
  const auto loaded = io::load_state(*a.state);
  const auto& rho = loaded.rho;

  if (a.measure) {
    const auto names = split(*a.measure, ',');
    if (names.size() != rho.parties().size()) {
      throw InvalidArgument(fmt::format("--measure needs {} bases, got {}", rho.parties().size(),
                                        names.size()));
    }
    std::vector<CMatrix> bases;
    for (std::size_t i = 0; i < names.size(); ++i) {
      bases.push_back(basis_by_name(names[i], rho.parties().cardinality(i)));
    }
    const auto d = measure_all(rho, bases);
    if (c.json) {
      emit({{"distribution", io::to_json(d)},
            {"S_n", snap(s_n(d), c.tolerance)},
            {"T_n", snap(t_n(d), c.tolerance)}},
           out);
    } else {
      print_distribution(d, c.tolerance, out);
      out << "S_n " << fixed(s_n(d), c.tolerance) << '\n'
          << "T_n " << fixed(t_n(d), c.tolerance) << '\n';
    }
    if (!a.monotone) return kOk;
  }

  const double s = q_s_n(rho), t = q_t_n(rho);
  std::optional<double> local;
  if (loaded.pure) local = pure_state_monotone(*loaded.pure);
  if (c.json) {
    json j{{"S_n", snap(s, c.tolerance)}, {"T_n", snap(t, c.tolerance)}};
    if (local) j["sum_local_entropies"] = snap(*local, c.tolerance);
    emit(j, out);
  } else {
    out << "S_n " << fixed(s, c.tolerance) << '\n' << "T_n " << fixed(t, c.tolerance) << '\n';
    if (local) out << "sum_local_entropies " << fixed(*local, c.tolerance) << '\n';
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out) {
  std::vector<verify::Suite> suites;
  if (a.suite == "all") {
    suites = {verify::Suite::classical, verify::Suite::eve, verify::Suite::quantum};
  } else {
    suites = {verify::suite_from_string(a.suite)};
  }
  if (a.trials && *a.trials == 0) throw InvalidArgument("--trials must be >= 1");

  std::vector<std::pair<verify::Suite, verify::CheckReport>> all;
  for (const auto s : suites) {
    verify::SuiteOptions o;
    o.seed = c.seed;
    o.trials = a.trials.value_or(s == verify::Suite::classical ? 1000
                                 : s == verify::Suite::eve     ? 500
                                                               : 300);
    o.max_parties = a.max_parties;
    o.max_alphabet = a.max_alphabet;
    o.max_dim = a.max_dim;
    for (auto& r : verify::run_suite(s, o)) all.emplace_back(s, std::move(r));
  }
  std::vector<verify::CheckReport> reports;
  for (const auto& [s, r] : all) reports.push_back(r);
  const bool ok = verify::all_required_pass(reports);

  if (a.report) io::write_json(*a.report, io::to_json(reports));
  if (c.json) {
    emit(io::to_json(reports), out);
  } else {
    for (const auto& [s, r] : all) {
      out << fmt::format("{:<45} trials={:<5} failures={:<4} {}{}\n",
                         verify::to_string(s) + "/" + r.check_name, r.trials, r.failures.size(),
                         r.passed() ? "pass" : "fail", r.required ? "" : " (informational)");
    }
    out << "verdict: " << (ok ? "pass" : "fail") << '\n';
  }
  return ok ? kOk : kVerification;
}

int cmd_decompose(const std::string& file, const Common& c, std::ostream& out) {
  const auto dist = io::load_distribution(file);
  const auto q = venn(dist);
  const auto y = canonical_decomposition(dist);
  const auto tol = c.tolerance;
  if (c.json) {
    emit({{"venn", {{"r", snap(q.r, tol)}, {"s", snap(q.s, tol)}, {"t", snap(q.t, tol)},
                    {"u", snap(q.u, tol)}}},
          {"yields",
           {{"P2_AB", snap(y.y1, tol)}, {"P2_BC", snap(y.y2, tol)}, {"P2_AC", snap(y.y3, tol)},
            {"Px", snap(y.y4, tol)}, {"P3", snap(y.y5, tol)}}},
          {"feasible", y.feasible}},
         out);
  } else {
    out << fmt::format("r = {}  s = {}  t = {}  u = {}\n", fixed(q.r, tol), fixed(q.s, tol),
                       fixed(q.t, tol), fixed(q.u, tol));
    out << "y1 P2_AB " << fixed(y.y1, tol) << '\n'
        << "y2 P2_BC " << fixed(y.y2, tol) << '\n'
        << "y3 P2_AC " << fixed(y.y3, tol) << '\n'
        << "y4 Px    " << fixed(y.y4, tol) << '\n'
        << "y5 P3    " << fixed(y.y5, tol) << '\n'
        << "feasible " << (y.feasible ? "yes" : "no") << '\n';
  }
  return kOk;
}

int cmd_bound(const BoundArgs& a, const Common& c, std::ostream& out) {
  const auto src = io::load_distribution(a.source);
  const auto dst = io::load_distribution(a.target);
  const auto b = yield_bound(src, dst);
  if (c.json) {
    json ratios = json::object();
    for (const auto& [name, r] : b.ratios) ratios[name] = r;
    emit({{"bound", b.ratio}, {"limiting", b.limiting}, {"ratios", std::move(ratios)}}, out);
  } else {
    out << "bound " << fixed(b.ratio, c.tolerance) << " (limited by " << b.limiting << ")\n";
    for (const auto& [name, r] : b.ratios) out << "  " << name << ' ' << fixed(r, c.tolerance) << '\n';
  }
  return kOk;
}

}  // namespace secmon::cli
