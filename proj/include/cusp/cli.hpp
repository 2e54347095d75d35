#pragma once

// Command-line front end: argument parsing into a Command and dispatch to
// the library with text, JSON or CSV rendering. Kept in a header so tests can
// drive it in-process.

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cusp/arthur.hpp"
#include "cusp/cuspidality.hpp"
#include "cusp/error.hpp"
#include "cusp/notation.hpp"
#include "cusp/partition.hpp"
#include "cusp/satake.hpp"
#include "cusp/scan.hpp"
#include "cusp/small_rep.hpp"

namespace cusp::cli {

using Json = nlohmann::ordered_json;

enum class Verb { Dual, Analyze, Scan, Bounds, Satake, Small, Collapse };
enum class Format { Text, Json, Csv };

struct Command {
  Verb verb = Verb::Dual;
  std::string input;  // partition (dual, collapse) or parameter (analyze, bounds)
  FieldKind field = FieldKind::General;
  AssumptionSet assumptions;
  Format format = Format::Text;
  std::string template_text;
  std::vector<ScanRange> ranges;
  int n = 0;
  std::string group;
  std::string out;
  unsigned threads = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HelpRequested {
  std::string text;
};

struct RunResult {
  int exit_code = 0;
  std::string output;
  std::string error;
};

namespace detail {

inline FieldKind field_from(const std::string& s) {
  if (s == "totally-imaginary") return FieldKind::TotallyImaginary;
  if (s == "totally-real") return FieldKind::TotallyReal;
  return FieldKind::General;
}

inline Assumption assumption_from(const std::string& s) {
  if (s == "upbfc") return Assumption::UpbfcDominanceBound;
  if (s == "conj-j14-1") return Assumption::ConjJ14Part1;
  return Assumption::MoeglinConjecture;
}

inline Format format_from(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Text;
}

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + ' ' : s + std::string(width - s.size(), ' ');
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string firing_label(const Firing& f) {
  std::string s = to_string(f.rule);
  if (f.conditional_on) s += std::string("(if ") + to_string(*f.conditional_on) + ")";
  return s;
}

inline Json bounds_json(const BoundsReport& b) {
  Json j;
  j["N_a"] = b.n_a;
  j["N1"] = b.n1;
  j["N2"] = b.n2;
  j["N1_witness"] = render_partition(b.n1_witness);
  j["N2_witness"] = render_partition(b.n2_witness);
  return j;
}

inline Json verdict_json(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["n"] = v.n;
  j["p_psi"] = render_partition(v.p_psi);
  j["eta"] = render_partition(v.eta);
  j["bounds"] = bounds_json(v.bounds);
  Json firings = Json::array();
  for (const auto& f : v.firings) {
    Json fj;
    fj["rule"] = to_string(f.rule);
    fj["status"] = to_string(f.implies);
    fj["conditional_on"] = f.conditional_on ? Json(to_string(*f.conditional_on)) : Json(nullptr);
    firings.push_back(std::move(fj));
  }
  j["firings"] = std::move(firings);
  j["warnings"] = v.warnings;
  return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string render_dual(const Partition& p, Format format) {
  const BvDualTrace t = bv_dual_trace(p);
  const std::vector<std::pair<std::string, const Partition*>> rows = {
      {"p", &t.input},
      {"p^-", &t.decremented},
      {"(p^-)_Sp", &t.collapsed_decremented},
      {"((p^-)_Sp)^t", &t.via_collapse},
      {"p^t", &t.transposed},
      {"(p^t)^-", &t.transposed_decremented},
      {"((p^t)^-)_Sp", &t.via_transpose},
      {"eta", &t.eta},
  };
  if (format == Format::Json) {
    const char* keys[] = {"p", "p_minus", "p_minus_sp", "p_minus_sp_t", "p_t", "p_t_minus", "p_t_minus_sp", "eta"};
    Json j;
    for (std::size_t i = 0; i < rows.size(); ++i) j[keys[i]] = render_partition(*rows[i].second);
    return dump(j);
  }
  std::string out;
  for (const auto& [name, part] : rows) out += pad(name, 14) + render_partition(*part) + "\n";
  return out;
}

inline std::string render_collapse(const Partition& p, Format format) {
  const Partition c = symplectic_collapse(p);
  if (format == Format::Json) {
    Json j;
    j["input"] = render_partition(p);
    j["collapse"] = render_partition(c);
    j["input_symplectic"] = is_symplectic(p);
    return dump(j);
  }
  return pad("input", 10) + render_partition(p) + "\n" + pad("collapse", 10) + render_partition(c) + "\n";
}

inline std::string render_verdict_text(const ArthurParameter& psi, const Verdict& v,
                                       const AssumptionSet& active) {
  std::ostringstream os;
  os << pad("parameter", 12) << render_parameter(psi) << "\n";
  os << pad("n", 12) << v.n << "\n";
  os << pad("p_psi", 12) << render_partition(v.p_psi) << "\n";
  os << pad("eta", 12) << render_partition(v.eta) << "\n";
  os << pad("N_a", 12) << v.bounds.n_a << "\n";
  os << pad("N1", 12) << pad(std::to_string(v.bounds.n1), 6) << render_partition(v.bounds.n1_witness) << "\n";
  os << pad("N2", 12) << pad(std::to_string(v.bounds.n2), 6) << render_partition(v.bounds.n2_witness) << "\n";
  os << pad("status", 12) << to_string(v.status) << "\n";
  os << "firings\n";
  if (v.firings.empty()) os << "  (none)\n";
  for (const auto& f : v.firings) {
    os << "  " << pad(to_string(f.rule), 26) << pad(to_string(f.implies), 18);
    if (!f.conditional_on) {
      os << "unconditional";
    } else {
      os << "if " << to_string(*f.conditional_on)
         << (active.contains(*f.conditional_on) ? " (active)" : " (inactive)");
    }
    os << "\n";
  }
  for (const auto& w : v.warnings) os << "warning: " << w << "\n";
  return os.str();
}

inline std::string render_bounds(const ArthurParameter& psi, Format format) {
  const Partition dual = eta(psi);
  const BoundsReport b = bounds(psi, dual);
  if (format == Format::Json) {
    Json j;
    j["n"] = psi.n();
    j["p_psi"] = render_partition(p_psi(psi));
    j["eta"] = render_partition(dual);
    j["bounds"] = bounds_json(b);
    return dump(j);
  }
  std::ostringstream os;
  os << pad("parameter", 12) << render_parameter(psi) << "\n";
  os << pad("n", 12) << psi.n() << "\n";
  os << pad("eta", 12) << render_partition(dual) << "\n";
  os << pad("N_a", 12) << b.n_a << "\n";
  os << pad("N1", 12) << pad(std::to_string(b.n1), 6) << render_partition(b.n1_witness) << "\n";
  os << pad("N2", 12) << pad(std::to_string(b.n2), 6) << render_partition(b.n2_witness) << "\n";
  return os.str();
}

inline std::string render_scan(const Command& cmd) {
  const ParameterTemplate tmpl(cmd.template_text);
  const auto rows = scan(tmpl, cmd.ranges, cmd.field, cmd.assumptions, cmd.threads);

  auto status_of = [](const ScanRow& r) { return r.verdict ? std::string(to_string(r.verdict->status)) : "Invalid"; };
  auto rules_of = [](const ScanRow& r) {
    if (!r.verdict) return r.error;
    std::string s;
    for (const auto& f : r.verdict->firings) {
      if (!s.empty()) s += ';';
      s += firing_label(f);
    }
    return s;
  };

  if (cmd.format == Format::Json) {
    Json j;
    j["template"] = cmd.template_text;
    j["field"] = to_string(cmd.field);
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json rj;
      Json values;
      for (std::size_t a = 0; a < cmd.ranges.size(); ++a) values[cmd.ranges[a].name] = r.values[a];
      rj["values"] = std::move(values);
      rj["parameter"] = r.parameter_text;
      rj["status"] = status_of(r);
      if (r.verdict) {
        rj["verdict"] = verdict_json(*r.verdict);
      } else {
        rj["error"] = r.error;
      }
      arr.push_back(std::move(rj));
    }
    j["rows"] = std::move(arr);
    return dump(j);
  }

  std::ostringstream os;
  if (cmd.format == Format::Csv) {
    for (const auto& r : cmd.ranges) os << csv_field(r.name) << ',';
    os << "status,rules\n";
    for (const auto& r : rows) {
      for (int v : r.values) os << v << ',';
      os << status_of(r) << ',' << csv_field(rules_of(r)) << "\n";
    }
    return os.str();
  }
  for (const auto& r : cmd.ranges) os << pad(r.name, 6);
  os << pad("n", 6) << pad("status", 16) << "rules\n";
  for (const auto& r : rows) {
    for (int v : r.values) os << pad(std::to_string(v), 6);
    os << pad(r.verdict ? std::to_string(r.verdict->n) : "-", 6) << pad(status_of(r), 16) << rules_of(r) << "\n";
  }
  return os.str();
}

inline std::string render_satake(const Command& cmd) {
  const ThetaBound b = satake_exponent_bound(cmd.n, cmd.field);
  if (cmd.format == Format::Json) {
    Json j;
    j["theta"] = render_rational(b.theta);
    j["sharp"] = b.sharp;
    j["source"] = b.source;
    return dump(j);
  }
  return pad("theta", 8) + render_rational(b.theta) + "\n" + pad("sharp", 8) + (b.sharp ? "yes" : "no") + "\n" +
         pad("source", 8) + b.source + "\n";
}

inline std::string render_small(const Command& cmd) {
  const GroupFamily family = cmd.group == "sp" ? GroupFamily::C : cmd.group == "so-odd" ? GroupFamily::B : GroupFamily::D;
  Json j;
  j["group"] = cmd.group;
  j["n"] = cmd.n;
  j["nonsingular"] = render_partition(nonsingular_partition(family, cmd.n));
  j["expansion"] = render_partition(nonsingular_expansion(family, cmd.n));
  if (family == GroupFamily::C) {
    j["grs_minimal"] = render_partition(grs_minimal_partition(2 * cmd.n));
    j["hypercuspidal"] = to_string(hypercuspidal_existence(cmd.n, cmd.field));
  } else {
    const auto bound = conjectured_so_lower_bound(family, cmd.n);
    Json bj;
    bj["partition"] = render_partition(bound.partition);
    bj["conjectural"] = bound.conjectural;
    j["conjectured_lower_bound"] = std::move(bj);
  }
  if (cmd.format == Format::Json) return dump(j);

  std::ostringstream os;
  os << pad("group", 16) << cmd.group << "\n";
  os << pad("n", 16) << cmd.n << "\n";
  os << pad("nonsingular", 16) << j["nonsingular"].get<std::string>() << "\n";
  os << pad("expansion", 16) << j["expansion"].get<std::string>() << "\n";
  if (family == GroupFamily::C) {
    os << pad("grs-minimal", 16) << j["grs_minimal"].get<std::string>() << "\n";
    os << pad("hypercuspidal", 16) << j["hypercuspidal"].get<std::string>() << "\n";
  } else {
    os << pad("lower-bound", 16) << j["conjectured_lower_bound"]["partition"].get<std::string>()
       << " (conjectural)\n";
  }
  return os.str();
}

}  // namespace detail

/// Parses arguments (program name excluded). Throws UsageError on unknown
/// verbs, flags or values, and HelpRequested for --help.
inline Command parse_cli(const std::vector<std::string>& args) {
  CLI::App app{"Cuspidality criteria for Arthur packets of symplectic groups", "cuspcheck"};
  app.require_subcommand(1);

  Command cmd;
  std::string field = "general";
  std::vector<std::string> assumes;
  std::string format = "text";
  std::vector<std::string> ranges;

  const std::vector<std::string> fields = {"general", "totally-imaginary", "totally-real"};
  const std::vector<std::string> assumption_names = {"upbfc", "conj-j14-1", "moeglin"};
  const std::vector<std::string> formats = {"text", "json", "csv"};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", cmd.out, "Write output to FILE instead of standard output");
  };
  auto with_field = [&](CLI::App* sub) {
    sub->add_option("--field", field, "Ground field kind")->check(CLI::IsMember(fields));
  };
  auto with_assume = [&](CLI::App* sub) {
    sub->add_option("--assume", assumes, "Activate an assumption (repeatable)")
        ->check(CLI::IsMember(assumption_names))
        ->allow_extra_args(false);
  };

  auto* dual = app.add_subcommand("dual", "Barbasch-Vogan dual of an orthogonal partition of 2n+1");
  dual->add_option("partition", cmd.input, "Partition, e.g. \"7 2^2\"")->required();
  common(dual);

  auto* collapse = app.add_subcommand("collapse", "Symplectic collapse of a partition of even weight");
  collapse->add_option("partition", cmd.input, "Partition")->required();
  common(collapse);

  auto* analyze = app.add_subcommand("analyze", "Cuspidality verdict for an Arthur parameter");
  analyze->add_option("parameter", cmd.input, "Parameter, e.g. \"(1c,7)+(2s,2)\"")->required();
  common(analyze);
  with_field(analyze);
  with_assume(analyze);

  auto* bounds_cmd = app.add_subcommand("bounds", "The bounds N_a, N1 and N2 of an Arthur parameter");
  bounds_cmd->add_option("parameter", cmd.input, "Parameter")->required();
  common(bounds_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "Verdicts over a grid of template instantiations");
  scan_cmd->add_option("--template", cmd.template_text, "Template with $slots")->required();
  scan_cmd->add_option("--range", ranges, "NAME=START:STOP:STEP, inclusive (repeatable)")->allow_extra_args(false);
  scan_cmd->add_option("--threads", cmd.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  common(scan_cmd);
  with_field(scan_cmd);
  with_assume(scan_cmd);

  auto* satake = app.add_subcommand("satake", "Satake exponent bound for the cuspidal spectrum of Sp(2n)");
  satake->add_option("--n", cmd.n, "n")->required();
  common(satake);
  with_field(satake);

  auto* small = app.add_subcommand("small", "Small-representation data for Sp(2n), SO(2n+1) or SO(2n)");
  small->add_option("--group", cmd.group, "Group")->required()->check(CLI::IsMember({"sp", "so-odd", "so-even"}));
  small->add_option("--n", cmd.n, "n")->required();
  common(small);
  with_field(small);

  if (!args.empty() && !args.front().starts_with('-') && app.get_subcommand_no_throw(args.front()) == nullptr) {
    throw UsageError("unknown verb '" + args.front() + "'");
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const std::pair<CLI::App*, Verb> verbs[] = {
      {dual, Verb::Dual},     {collapse, Verb::Collapse}, {analyze, Verb::Analyze}, {bounds_cmd, Verb::Bounds},
      {scan_cmd, Verb::Scan}, {satake, Verb::Satake},     {small, Verb::Small},
  };
  for (const auto& [sub, verb] : verbs) {
    if (sub->parsed()) cmd.verb = verb;
  }
  cmd.field = detail::field_from(field);
  for (const auto& a : assumes) cmd.assumptions.insert(detail::assumption_from(a));
  cmd.format = detail::format_from(format);
  if (cmd.format == Format::Csv && cmd.verb != Verb::Scan) throw UsageError("--format csv applies to scan only");
  for (const auto& r : ranges) {
    try {
      cmd.ranges.push_back(parse_range(r));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if ((cmd.verb == Verb::Satake || cmd.verb == Verb::Small) && cmd.n < 1) throw UsageError("--n must be at least 1");
  return cmd;
}

/// Executes a parsed command. Library errors propagate.
inline std::string execute(const Command& cmd) {
  switch (cmd.verb) {
    case Verb::Dual: return detail::render_dual(parse_partition(cmd.input), cmd.format);
    case Verb::Collapse: return detail::render_collapse(parse_partition(cmd.input), cmd.format);
    case Verb::Analyze: {
      const ArthurParameter psi = parse_parameter(cmd.input);
      const Verdict v = verdict(psi, cmd.field, cmd.assumptions);
      return cmd.format == Format::Json ? detail::dump(detail::verdict_json(v))
                                        : detail::render_verdict_text(psi, v, cmd.assumptions);
    }
    case Verb::Bounds: return detail::render_bounds(parse_parameter(cmd.input), cmd.format);
    case Verb::Scan: return detail::render_scan(cmd);
    case Verb::Satake: return detail::render_satake(cmd);
    case Verb::Small: return detail::render_small(cmd);
  }
  return {};
}

/// Exit codes: 0 success, 2 input error, 3 internal invariant violation.
inline RunResult run(const Command& cmd) {
  RunResult r;
  try {
    r.output = execute(cmd);
  } catch (const Error& e) {
    const bool internal =
        e.kind() == ErrorKind::InternalInvariantViolation || e.kind() == ErrorKind::AmbiguousExpansion;
    r.exit_code = internal ? 3 : 2;
    r.error = e.what();
    r.output.clear();
    return r;
  }
  if (!cmd.out.empty()) {
    std::ofstream file(cmd.out, std::ios::binary);
    if (!file) {
      r.exit_code = 2;
      r.error = "cannot open " + cmd.out + " for writing";
      return r;
    }
    file << r.output;
    r.output.clear();
  }
  return r;
}

inline RunResult run_cli(const std::vector<std::string>& args) {
  try {
    return run(parse_cli(args));
  } catch (const HelpRequested& h) {
    return {0, h.text, {}};
  } catch (const UsageError& e) {
    return {2, {}, e.what()};
  }
}

}  // namespace cusp::cli
