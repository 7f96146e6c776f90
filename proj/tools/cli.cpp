#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "catri/conjectures.hpp"
#include "catri/errors.hpp"
#include "catri/exact.hpp"
#include "catri/identities.hpp"
#include "catri/numbers.hpp"
#include "catri/range.hpp"

namespace catri::cli {

namespace {

using nlohmann::ordered_json;

std::int64_t parse_int(const std::string& text, std::string_view what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw UsageError("invalid " + std::string(what) + " '" + text + "'");
  }
  return value;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("CATRI_JOBS"); env && *env) {
    auto jobs = parse_int(env, "CATRI_JOBS");
    if (jobs < 1) throw UsageError("CATRI_JOBS must be >= 1");
    return static_cast<unsigned>(jobs);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

unsigned resolve_jobs(std::optional<std::int64_t> flag) {
  if (!flag) return default_jobs();
  if (*flag < 1) throw UsageError("--jobs must be >= 1");
  return static_cast<unsigned>(*flag);
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> to_strings(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

// Left-aligned columns separated by two spaces.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

void check_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed) {
    if (format == a) return;
  }
  std::vector<std::string> names(allowed.begin(), allowed.end());
  throw UsageError("unsupported --format '" + format + "' (expected " + join(names, ", ") + ")");
}

// value ---------------------------------------------------------------------

struct ValueArgs {
  std::string name;
  std::vector<std::string> indices;
};

int cmd_value(const ValueArgs& a, std::ostream& out) {
  std::vector<std::int64_t> ix;
  for (const auto& s : a.indices) ix.push_back(parse_int(s, "index"));
  auto want = [&](std::size_t n, std::string_view usage) {
    if (ix.size() != n) {
      throw UsageError("value " + a.name + " expects " + std::string(usage));
    }
  };
  std::string name = a.name;
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (name == "c") {
    want(2, "<m> <k>");
    out << c_number(ix[0], ix[1]) << '\n';
  } else if (name == "b") {
    want(2, "<n> <k>");
    out << b_number(ix[0], ix[1]) << '\n';
  } else if (name == "a") {
    want(2, "<n> <k>");
    out << a_number(ix[0], ix[1]) << '\n';
  } else if (name == "catalan") {
    want(1, "<n>");
    out << catalan(ix[0]) << '\n';
  } else if (name == "gen-catalan") {
    want(2, "<k> <n>");
    out << gen_catalan(ix[0], ix[1]) << '\n';
  } else if (name == "seq-a") {
    want(1, "<n>");
    out << seq_a(ix[0]) << '\n';
  } else if (name == "seq-b") {
    want(1, "<n>");
    out << seq_b(ix[0]) << '\n';
  } else if (name == "binomial") {
    want(2, "<u> <v>");
    out << binomial(ix[0], ix[1]) << '\n';
  } else if (name == "harmonic") {
    want(1, "<n>");
    out << harmonic(ix[0]) << '\n';
  } else {
    throw UsageError("unknown value '" + a.name +
                     "' (expected c, b, a, catalan, gen-catalan, seq-a, seq-b, binomial, harmonic)");
  }
  return kExitPass;
}

// verify --------------------------------------------------------------------

struct VerifyArgs {
  std::string id;
  std::map<std::string, std::string> ranges;  // flag name -> text
  std::int64_t max = 0;
  std::string format = "plain-table";
  std::optional<std::int64_t> jobs;
  bool fail_fast = false;
  bool allow_outside = false;
  bool no_timing = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  check_format(a.format, {"plain-table", "json", "csv"});
  if (a.max < 0) throw UsageError("--max must be >= 0");
  VerifyOptions options;
  options.jobs = resolve_jobs(a.jobs);
  options.fail_fast = a.fail_fast;
  options.allow_outside_domain = a.allow_outside;

  RangeMap overrides;
  for (const auto& [name, text] : a.ranges) overrides[name] = IntRange::parse(text);

  std::vector<const IdentityDescriptor*> targets;
  const bool all = a.id == "all";
  if (all) {
    for (const auto& d : list_identities()) targets.push_back(&d);
  } else {
    targets.push_back(&find_identity(a.id));
  }

  std::vector<VerificationReport> reports;
  for (const auto* identity : targets) {
    RangeMap ranges = default_ranges(*identity, a.max);
    for (const auto& [name, range] : overrides) {
      if (identity->parameter_index(name) != std::string_view::npos) {
        ranges[name] = range;
      } else if (!all) {
        throw UsageError(identity->id + " has no parameter '" + name + "'");
      }
    }
    reports.push_back(verify_identity(*identity, ranges, options));
    if (a.format == "json") out << report_to_json(reports.back(), !a.no_timing) << '\n';
  }

  auto elapsed = [&](const VerificationReport& r) {
    if (a.no_timing) return std::string("-");
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(1);
    s << r.elapsed_ms;
    return s.str();
  };
  auto domain = [](const VerificationReport& r) {
    std::vector<std::string> parts;
    for (const auto& name : r.parameter_names) {
      parts.push_back(name + "=" + r.ranges.at(name).to_string());
    }
    return join(parts, " ");
  };

  if (a.format == "csv") {
    out << "identity,status,cells,mismatches,elapsed_ms\n";
    for (const auto& r : reports) {
      out << r.identity << ',' << (r.passed() ? "PASS" : "FAIL") << ',' << r.cells << ','
          << r.mismatches.size() << ',' << (a.no_timing ? "" : elapsed(r)) << '\n';
    }
  } else if (a.format == "plain-table") {
    std::vector<std::vector<std::string>> rows{
        {"identity", "status", "cells", "mismatches", "domain", "elapsed_ms"}};
    for (const auto& r : reports) {
      rows.push_back({r.identity, r.passed() ? "PASS" : "FAIL", std::to_string(r.cells),
                      std::to_string(r.mismatches.size()), domain(r), elapsed(r)});
    }
    print_table(out, rows);
    constexpr std::size_t kShown = 10;
    for (const auto& r : reports) {
      for (std::size_t i = 0; i < std::min(kShown, r.mismatches.size()); ++i) {
        const auto& m = r.mismatches[i];
        std::vector<std::string> at;
        for (std::size_t d = 0; d < m.cell.size(); ++d) {
          at.push_back(r.parameter_names[d] + "=" + std::to_string(m.cell[d]));
        }
        out << "mismatch " << r.identity << " at " << join(at, " ") << ": lhs=" << m.lhs
            << " rhs=" << m.rhs << '\n';
      }
      if (r.mismatches.size() > kShown) {
        out << "mismatch " << r.identity << ": " << r.mismatches.size() - kShown
            << " more\n";
      }
    }
  }

  bool passed = std::all_of(reports.begin(), reports.end(),
                            [](const VerificationReport& r) { return r.passed(); });
  return passed ? kExitPass : kExitMismatch;
}

// scan ----------------------------------------------------------------------

struct ScanArgs {
  std::string variant;
  std::optional<std::int64_t> p;
  std::optional<std::string> m;
  std::optional<std::string> n;
  std::optional<std::string> checkpoint;
  std::int64_t checkpoint_every = 0;
  std::optional<std::int64_t> jobs;
  std::optional<std::int64_t> stop_after;
  std::string divisor_offset = "0";
  bool no_timing = false;
  std::string format = "plain";
};

Conjecture parse_variant(const std::string& v) {
  if (v == "c-powers" || v == "c-cubes") return Conjecture::kDivisibilityC;
  if (v == "b-powers" || v == "b-cubes") return Conjecture::kDivisibilityB;
  if (v == "a-powers" || v == "a-cubes") return Conjecture::kDivisibilityA;
  if (v == "mixed" || v == "mixed-cube") return Conjecture::kMixedCube;
  throw UsageError("unknown scan variant '" + v +
                   "' (expected c-powers, b-powers, a-powers, mixed)");
}

RangeMap scan_domain(Conjecture c, const ScanArgs& a) {
  auto range = [](const std::optional<std::string>& text) {
    return text ? std::optional(IntRange::parse(*text)) : std::nullopt;
  };
  auto m = range(a.m);
  auto n = range(a.n);
  RangeMap domain;
  switch (c) {
    case Conjecture::kDivisibilityC:
      if (!m) throw UsageError("c-powers needs --m");
      domain["m"] = *m;
      domain["n"] = n ? *n : IntRange{1, m->hi - 1};
      break;
    case Conjecture::kDivisibilityB:
    case Conjecture::kDivisibilityA:
      if (!n) throw UsageError("this variant needs --n");
      if (m) throw UsageError("this variant has no parameter m");
      domain["n"] = *n;
      break;
    case Conjecture::kMixedCube:
      if (!m && !n) throw UsageError("mixed needs --n and/or --m");
      domain["n"] = n ? *n : *m;
      domain["m"] = m ? *m : *n;
      break;
  }
  return domain;
}

void print_cell(std::ostream& out, const ScanState& s, const ScanCell& cell) {
  auto names = s.parameter_names();
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < names.size(); ++i) {
    parts.push_back(names[i] + "=" + std::to_string(cell[i]));
  }
  out << join(parts, " ");
}

int cmd_scan(const ScanArgs& a, std::ostream& out) {
  check_format(a.format, {"plain", "json"});
  const Conjecture c = parse_variant(a.variant);
  if (is_divisibility(c)) {
    if (!a.p) throw UsageError("--p is required for divisibility scans");
  } else if (a.p) {
    throw UsageError("mixed scans take no exponent");
  }
  if (a.checkpoint_every < 0) throw UsageError("--checkpoint-every must be >= 0");
  if (a.stop_after && *a.stop_after < 0) throw UsageError("--stop-after must be >= 0");

  ScanOptions options;
  options.jobs = resolve_jobs(a.jobs);
  if (a.stop_after) options.stop_after = static_cast<std::uint64_t>(*a.stop_after);
  options.checkpoint_every = static_cast<std::uint64_t>(a.checkpoint_every);
  try {
    options.divisor_offset = BigInt::parse(a.divisor_offset);
  } catch (const DomainError&) {
    throw UsageError("invalid --divisor-offset '" + a.divisor_offset + "'");
  }
  if (!is_divisibility(c) && !options.divisor_offset.is_zero()) {
    throw UsageError("--divisor-offset applies to divisibility scans only");
  }
  const RangeMap domain = scan_domain(c, a);

  ScanState state;
  if (a.checkpoint) {
    options.checkpoint_path = std::filesystem::path(*a.checkpoint);
  }
  if (a.checkpoint && std::filesystem::exists(*a.checkpoint)) {
    ScanState saved = load_checkpoint(*a.checkpoint);
    if (saved.conjecture != c || saved.p != a.p || saved.domain != domain ||
        saved.divisor_offset != options.divisor_offset) {
      throw UsageError("checkpoint " + *a.checkpoint +
                       " was written by a scan with different parameters");
    }
    state = resume_scan(saved, options);
  } else if (is_divisibility(c)) {
    state = scan_divisibility(c, *a.p, domain, options);
  } else {
    state = scan_mixed_cube(domain, options);
  }

  if (a.format == "json") {
    out << scan_state_to_json(state, !a.no_timing) << '\n';
  } else {
    out << conjecture_id(state.conjecture);
    if (state.p) out << " p=" << *state.p;
    for (const auto& name : state.parameter_names()) {
      out << ' ' << name << '=' << state.domain.at(name).to_string();
    }
    if (!state.divisor_offset.is_zero()) out << " divisor_offset=" << state.divisor_offset;
    out << ": " << state.processed << " cells, " << state.counterexamples.size()
        << " counterexamples";
    if (state.complete()) {
      out << " (complete)";
    } else {
      out << " (stopped; next ";
      print_cell(out, state, *state.frontier);
      out << ')';
    }
    if (!a.no_timing) out << " in " << static_cast<std::int64_t>(state.elapsed_ms) << " ms";
    out << '\n';
    for (const auto& ce : state.counterexamples) {
      out << "counterexample ";
      print_cell(out, state, ce.cell);
      if (is_divisibility(state.conjecture)) {
        out << ": divisor=" << ce.divisor << " remainder=" << ce.remainder << '\n';
      } else {
        out << ": lhs=" << ce.lhs << " rhs=" << ce.rhs << '\n';
      }
    }
    for (const auto& cell : state.zero_divisor_cells) {
      out << "zero divisor at ";
      print_cell(out, state, cell);
      out << '\n';
    }
  }
  return state.counterexamples.empty() ? kExitPass : kExitMismatch;
}

// seq -----------------------------------------------------------------------

struct SeqArgs {
  std::string name;
  std::string start;
  std::string count;
  std::string format = "plain";
  std::optional<std::int64_t> row;
  std::optional<std::int64_t> k;
};

int cmd_seq(const SeqArgs& a, std::ostream& out) {
  check_format(a.format, {"plain", "csv", "oeis-bfile", "json", "plain-table"});
  SequenceSpec spec;
  try {
    spec.name = parse_sequence_name(a.name);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  spec.start = parse_int(a.start, "start");
  spec.count = parse_int(a.count, "count");
  if (spec.count < 1) throw UsageError("count must be >= 1");
  const bool is_row = spec.name == SequenceName::kCRow || spec.name == SequenceName::kBRow ||
                      spec.name == SequenceName::kARow;
  if (is_row) {
    if (!a.row) throw UsageError(a.name + " needs --row");
    spec.parameter = *a.row;
  } else if (a.row) {
    throw UsageError("--row applies to c-row, b-row and a-row only");
  }
  if (spec.name == SequenceName::kGenCatalan) {
    if (!a.k) throw UsageError("gen-catalan needs --k");
    spec.parameter = *a.k;
  } else if (a.k) {
    throw UsageError("--k applies to gen-catalan only");
  }

  auto values = to_strings(generate(spec));
  if (a.format == "plain") {
    out << join(values, " ") << '\n';
  } else if (a.format == "csv") {
    out << join(values, ",") << '\n';
  } else if (a.format == "oeis-bfile") {
    for (std::size_t i = 0; i < values.size(); ++i) {
      out << spec.start + static_cast<std::int64_t>(i) << ' ' << values[i] << '\n';
    }
  } else if (a.format == "plain-table") {
    std::vector<std::vector<std::string>> rows{{"index", "value"}};
    for (std::size_t i = 0; i < values.size(); ++i) {
      rows.push_back({std::to_string(spec.start + static_cast<std::int64_t>(i)), values[i]});
    }
    print_table(out, rows);
  } else {
    ordered_json doc;
    doc["sequence"] = a.name;
    if (is_row || spec.name == SequenceName::kGenCatalan) doc["parameter"] = spec.parameter;
    doc["start"] = spec.start;
    doc["values"] = values;
    out << doc.dump() << '\n';
  }
  return kExitPass;
}

// triangle ------------------------------------------------------------------

struct TriangleArgs {
  std::string name;
  std::string rows = "1..10";
  std::string format = "plain";
};

int cmd_triangle(const TriangleArgs& a, std::ostream& out) {
  check_format(a.format, {"plain", "csv", "json"});
  std::string name = a.name;
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  Triangle t;
  if (name == "c") {
    t = Triangle::kC;
  } else if (name == "b") {
    t = Triangle::kB;
  } else if (name == "a") {
    t = Triangle::kA;
  } else {
    throw UsageError("unknown triangle '" + a.name + "' (expected c, b, a)");
  }
  const IntRange rows = IntRange::parse(a.rows);
  if (rows.empty()) throw UsageError("empty --rows range");

  ordered_json doc;
  doc["triangle"] = triangle_name(t);
  doc["rows"] = ordered_json::array();
  for (auto r = rows.lo; r <= rows.hi; ++r) {
    std::shared_ptr<const TriangleRow> row;
    switch (t) {
      case Triangle::kC: row = c_row(r); break;
      case Triangle::kB: row = b_row(r); break;
      case Triangle::kA: row = a_row(r); break;
    }
    auto values = to_strings(row->values);
    std::int64_t first_column = row->first_column;
    // B(n,0) is zero by convention; printed rows start at k = 1.
    if (t == Triangle::kB) {
      values.erase(values.begin());
      first_column = 1;
    }
    if (a.format == "plain") {
      out << join(values, " ") << '\n';
    } else if (a.format == "csv") {
      out << r << ',' << join(values, ",") << '\n';
    } else {
      doc["rows"].push_back(
          {{"index", r}, {"first_column", first_column}, {"values", values}});
    }
  }
  if (a.format == "json") out << doc.dump() << '\n';
  return kExitPass;
}

// list ----------------------------------------------------------------------

int cmd_list(const std::string& format, std::ostream& out) {
  check_format(format, {"plain-table", "json"});
  if (format == "json") {
    ordered_json doc = ordered_json::array();
    for (const auto& d : list_identities()) {
      ordered_json params = ordered_json::array();
      for (const auto& p : d.parameters) {
        params.push_back({{"name", p.name},
                          {"min", std::max(p.hard_min, p.hypothesis_min)},
                          {"default_cap", p.default_cap}});
      }
      doc.push_back({{"id", d.id},
                     {"statement", d.statement},
                     {"parameters", params},
                     {"hypotheses", d.hypothesis_text},
                     {"anchor", d.anchor}});
    }
    out << doc.dump() << '\n';
    return kExitPass;
  }
  std::vector<std::vector<std::string>> rows{{"id", "hypotheses", "statement"}};
  for (const auto& d : list_identities()) rows.push_back({d.id, d.hypothesis_text, d.statement});
  print_table(out, rows);
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact arithmetic on Catalan triangles: values, identity sweeps and conjecture scans",
               "catri"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "catri 0.1.0");

  ValueArgs value;
  auto* value_cmd = app.add_subcommand("value", "Print one exact value");
  value_cmd->add_option("name", value.name,
                        "c | b | a | catalan | gen-catalan | seq-a | seq-b | binomial | harmonic")
      ->required();
  value_cmd->add_option("indices", value.indices, "Indices, e.g. `value c 6 2`");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Sweep one identity (or all) exactly");
  verify_cmd->add_option("id", verify.id, "Identity id or `all`")->required();
  for (const char* p : {"m", "n", "k", "i"}) {
    verify_cmd->add_option_function<std::string>(
        std::string("--") + p, [&verify, p](const std::string& s) { verify.ranges[p] = s; },
        std::string("Range a..b for parameter ") + p);
  }
  verify_cmd->add_option("--max", verify.max,
                         "Upper bound for parameters without an explicit range (0: per-identity default)");
  verify_cmd->add_option("--format", verify.format, "plain-table | json | csv");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (default: CATRI_JOBS or all cores)");
  verify_cmd->add_flag("--fail-fast", verify.fail_fast, "Stop at the first mismatch");
  verify_cmd->add_flag("--allow-outside-domain", verify.allow_outside,
                       "Also sweep cells outside the stated hypotheses");
  verify_cmd->add_flag("--no-timing", verify.no_timing, "Suppress elapsed time");

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Search a conjecture for counterexamples");
  scan_cmd->add_option("variant", scan.variant, "c-powers | b-powers | a-powers | mixed")
      ->required();
  scan_cmd->add_option("--p", scan.p, "Odd exponent (divisibility variants)");
  scan_cmd->add_option("--m", scan.m, "Range a..b for m");
  scan_cmd->add_option("--n", scan.n, "Range a..b for n");
  scan_cmd->add_option("--checkpoint", scan.checkpoint, "Checkpoint file; resumed when present");
  scan_cmd->add_option("--checkpoint-every", scan.checkpoint_every,
                       "Save every N cells (0: only at the end)");
  scan_cmd->add_option("--jobs", scan.jobs, "Worker threads (default: CATRI_JOBS or all cores)");
  scan_cmd->add_option("--stop-after", scan.stop_after, "Stop after N cells in this run");
  scan_cmd->add_option("--divisor-offset", scan.divisor_offset,
                       "Add this to the claimed divisor (self-test of the scanner)");
  scan_cmd->add_flag("--no-timing", scan.no_timing, "Suppress elapsed time");
  scan_cmd->add_option("--format", scan.format, "plain | json");

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print a slice of a sequence or triangle row");
  seq_cmd->add_option("name", seq.name, "catalan | gen-catalan | a | b | c-row | b-row | a-row")
      ->required();
  seq_cmd->add_option("start", seq.start, "First index")->required();
  seq_cmd->add_option("count", seq.count, "Number of terms")->required();
  seq_cmd->add_option("--format", seq.format, "plain | csv | oeis-bfile | json | plain-table");
  seq_cmd->add_option("--row", seq.row, "Row index for c-row, b-row, a-row");
  seq_cmd->add_option("--k", seq.k, "k for gen-catalan");

  TriangleArgs tri;
  auto* tri_cmd = app.add_subcommand("triangle", "Print rows of a triangle");
  tri_cmd->add_option("name", tri.name, "c | b | a")->required();
  tri_cmd->add_option("--rows", tri.rows, "Row range a..b (default 1..10)");
  tri_cmd->add_option("--format", tri.format, "plain | csv | json");

  std::string list_format = "plain-table";
  auto* list_cmd = app.add_subcommand("list", "List registered identities");
  list_cmd->add_option("--format", list_format, "plain-table | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*value_cmd) return cmd_value(value, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*scan_cmd) return cmd_scan(scan, out);
    if (*seq_cmd) return cmd_seq(seq, out);
    if (*tri_cmd) return cmd_triangle(tri, out);
    if (*list_cmd) return cmd_list(list_format, out);
  } catch (const UnknownIdentityError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    // Domain, usage, I/O and corrupt-checkpoint errors are all bad input.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace catri::cli
