#pragma once

// Grid evaluation of verdicts over a parameter template.

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cusp/cuspidality.hpp"
#include "cusp/notation.hpp"

namespace cusp {

/// Inclusive arithmetic range start, start+step, ..., <= stop.
struct ScanRange {
  std::string name;
  int start = 0;
  int stop = 0;
  int step = 1;

  std::vector<int> values() const {
    std::vector<int> out;
    for (long long v = start; v <= stop; v += step) out.push_back(static_cast<int>(v));
    return out;
  }
};

/// Parses "NAME=START:STOP:STEP" (STEP optional, default 1).
inline ScanRange parse_range(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw Error(ErrorKind::InvalidArgument, "range must look like NAME=START:STOP[:STEP]");
  }
  ScanRange r;
  r.name = std::string(text.substr(0, eq));
  std::vector<long long> nums;
  std::string_view rest = text.substr(eq + 1);
  while (true) {
    const auto colon = rest.find(':');
    const std::string piece(rest.substr(0, colon));
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size()) {
      throw Error(ErrorKind::InvalidArgument, "bad number '" + piece + "' in range " + std::string(text));
    }
    nums.push_back(v);
    if (colon == std::string_view::npos) break;
    rest = rest.substr(colon + 1);
  }
  if (nums.size() < 2 || nums.size() > 3) {
    throw Error(ErrorKind::InvalidArgument, "range must look like NAME=START:STOP[:STEP]");
  }
  r.start = static_cast<int>(nums[0]);
  r.stop = static_cast<int>(nums[1]);
  r.step = nums.size() == 3 ? static_cast<int>(nums[2]) : 1;
  if (r.step <= 0) throw Error(ErrorKind::InvalidArgument, "range step must be positive");
  return r;
}

struct ScanRow {
  std::vector<int> values;      // one per range, in range order
  std::string parameter_text;   // the instantiated template
  std::optional<Verdict> verdict;
  std::string error;            // validation failure when verdict is empty
};

/// Row-major over `ranges` (first range outermost). Cells whose
/// instantiation is not a valid parameter are kept with an error message.
/// The row order does not depend on `threads`.
inline std::vector<ScanRow> scan(const ParameterTemplate& tmpl, const std::vector<ScanRange>& ranges,
                                 FieldKind field, const AssumptionSet& assumptions,
                                 unsigned threads = 1) {
  std::set<std::string> names;
  for (const auto& r : ranges) {
    if (!names.insert(r.name).second) throw Error(ErrorKind::InvalidArgument, "range $" + r.name + " given twice");
    if (std::find(tmpl.slots().begin(), tmpl.slots().end(), r.name) == tmpl.slots().end()) {
      throw Error(ErrorKind::InvalidArgument, "range $" + r.name + " does not occur in the template");
    }
    if (r.step <= 0) throw Error(ErrorKind::InvalidArgument, "range step must be positive");
  }
  for (const auto& s : tmpl.slots()) {
    if (!names.count(s)) throw Error(ErrorKind::InvalidArgument, "template slot $" + s + " has no range");
  }

  std::vector<std::vector<int>> axes;
  std::size_t cells = ranges.empty() ? 0 : 1;
  for (const auto& r : ranges) {
    axes.push_back(r.values());
    cells *= axes.back().size();
  }
  if (ranges.empty() && tmpl.slots().empty()) cells = 1;

  std::vector<ScanRow> rows(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    std::size_t rem = c;
    rows[c].values.resize(axes.size());
    for (std::size_t a = axes.size(); a-- > 0;) {
      rows[c].values[a] = axes[a][rem % axes[a].size()];
      rem /= axes[a].size();
    }
  }

  auto evaluate = [&](ScanRow& row) {
    std::map<std::string, int> values;
    for (std::size_t a = 0; a < ranges.size(); ++a) values[ranges[a].name] = row.values[a];
    row.parameter_text = tmpl.instantiate(values);
    std::vector<SimpleParameter> summands;
    try {
      summands = parse_summands(row.parameter_text);
    } catch (const Error& e) {
      row.error = e.what();
      return;
    }
    auto checked = validate(std::move(summands));
    if (!checked.ok()) {
      row.error = checked.message();
      return;
    }
    row.verdict = verdict(*checked.parameter, field, assumptions);
  };

  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(cells, 1))));
  if (threads == 1) {
    for (auto& row : rows) evaluate(row);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) evaluate(rows[i]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace cusp
