#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "catri/identities.hpp"

namespace catri {

namespace {

struct Partial {
  std::uint64_t cells = 0;
  std::vector<Mismatch> mismatches;
};

// Enumerates the inner parameters (all but the first) in row-major order
// for a fixed outer value.
void sweep_outer_value(const IdentityDescriptor& identity,
                       const std::vector<IntRange>& ranges, std::int64_t outer,
                       const VerifyOptions& options, std::atomic<bool>& stop,
                       Partial& out) {
  const std::size_t dims = ranges.size();
  std::vector<std::int64_t> cell(dims);
  cell[0] = outer;
  for (std::size_t d = 1; d < dims; ++d) cell[d] = ranges[d].lo;

  while (true) {
    if (options.fail_fast && stop.load(std::memory_order_relaxed)) return;
    if (identity.admissible(cell, options.allow_outside_domain)) {
      ++out.cells;
      Rational lhs = identity.lhs(cell);
      Rational rhs = identity.rhs(cell);
      if (lhs != rhs) {
        out.mismatches.push_back(Mismatch{cell, std::move(lhs), std::move(rhs)});
        if (options.fail_fast) {
          stop = true;
          return;
        }
      }
    }
    // Odometer step, last parameter fastest.
    std::size_t d = dims;
    while (d > 1) {
      --d;
      if (cell[d] < ranges[d].hi) {
        ++cell[d];
        break;
      }
      cell[d] = ranges[d].lo;
      if (d == 1) return;
    }
    if (dims == 1) return;
  }
}

}  // namespace

RangeMap default_ranges(const IdentityDescriptor& identity, std::int64_t cap) {
  RangeMap ranges;
  for (const auto& p : identity.parameters) {
    std::int64_t hi = cap > 0 ? cap : p.default_cap;
    ranges[p.name] = IntRange{std::max(p.hard_min, p.hypothesis_min), hi};
  }
  return ranges;
}

IdentityDescriptor with_rhs_offset(IdentityDescriptor identity, Rational offset) {
  Evaluator base = identity.rhs;
  identity.rhs = [base = std::move(base), offset = std::move(offset)](Cell c) {
    return base(c) + offset;
  };
  return identity;
}

VerificationReport verify_identity(const IdentityDescriptor& identity,
                                   const RangeMap& ranges,
                                   const VerifyOptions& options) {
  const auto started = std::chrono::steady_clock::now();

  for (const auto& [name, range] : ranges) {
    if (identity.parameter_index(name) == std::string_view::npos) {
      throw UsageError(identity.id + " has no parameter '" + name + "'");
    }
  }

  VerificationReport report;
  report.identity = identity.id;
  report.constraint = options.allow_outside_domain ? "evaluation bounds only"
                                                   : identity.hypothesis_text;
  report.outside_hypotheses = options.allow_outside_domain;

  // Lower ends are clamped to the parameter bounds; the cells skipped that
  // way are inadmissible anyway.
  std::vector<IntRange> effective;
  for (const auto& p : identity.parameters) {
    auto it = ranges.find(p.name);
    if (it == ranges.end()) {
      throw UsageError(identity.id + ": no range given for parameter '" + p.name + "'");
    }
    report.parameter_names.push_back(p.name);
    report.ranges[p.name] = it->second;
    std::int64_t floor = options.allow_outside_domain
                             ? p.hard_min
                             : std::max(p.hard_min, p.hypothesis_min);
    IntRange r{std::max(it->second.lo, floor), it->second.hi};
    if (r.empty()) {
      throw UsageError(identity.id + ": empty admissible domain for '" + p.name +
                       "' in " + it->second.to_string() + " (" +
                       report.constraint + ")");
    }
    effective.push_back(r);
  }

  const auto outer_count = static_cast<std::size_t>(effective[0].size());
  std::vector<Partial> partials(outer_count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    while (true) {
      std::size_t task = next.fetch_add(1);
      if (task >= outer_count || (options.fail_fast && stop)) return;
      try {
        sweep_outer_value(identity, effective,
                          effective[0].lo + static_cast<std::int64_t>(task),
                          options, stop, partials[task]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
        return;
      }
    }
  };

  unsigned jobs = std::max(1u, options.jobs);
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, outer_count));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& part : partials) {
    report.cells += part.cells;
    for (auto& m : part.mismatches) report.mismatches.push_back(std::move(m));
  }
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const Mismatch& a, const Mismatch& b) { return a.cell < b.cell; });

  if (report.cells == 0 && !(options.fail_fast && stop)) {
    throw UsageError(identity.id + ": empty admissible domain (" +
                     report.constraint + ")");
  }

  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

VerificationReport verify_identity(std::string_view id, const RangeMap& ranges,
                                   const VerifyOptions& options) {
  return verify_identity(find_identity(id), ranges, options);
}

std::string report_to_json(const VerificationReport& report, bool include_timing) {
  using nlohmann::ordered_json;
  ordered_json ranges = ordered_json::object();
  for (const auto& name : report.parameter_names) {
    ranges[name] = report.ranges.at(name).to_string();
  }
  ordered_json mismatches = ordered_json::array();
  for (const auto& m : report.mismatches) {
    ordered_json assignment = ordered_json::object();
    for (std::size_t i = 0; i < m.cell.size(); ++i) {
      assignment[report.parameter_names[i]] = m.cell[i];
    }
    mismatches.push_back({{"assignment", assignment},
                          {"lhs", m.lhs.to_string()},
                          {"rhs", m.rhs.to_string()}});
  }
  ordered_json doc;
  doc["identity"] = report.identity;
  doc["domain"] = {{"ranges", ranges},
                   {"constraint", report.constraint},
                   {"outside_hypotheses", report.outside_hypotheses}};
  doc["cells"] = report.cells;
  doc["status"] = report.passed() ? "PASS" : "FAIL";
  doc["mismatches"] = std::move(mismatches);
  doc["elapsed_ms"] = include_timing ? ordered_json(report.elapsed_ms) : ordered_json(nullptr);
  return doc.dump();
}

}  // namespace catri
