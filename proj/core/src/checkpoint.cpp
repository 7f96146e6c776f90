#include <fstream>
#include <sstream>
#include <system_error>

#include <nlohmann/json.hpp>

#include "catri/conjectures.hpp"

namespace catri {

namespace {

using nlohmann::ordered_json;

ordered_json cell_json(const std::vector<std::string>& names, const ScanCell& cell) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = cell[i];
  return out;
}

ScanCell cell_from_json(const std::vector<std::string>& names, const ordered_json& j) {
  ScanCell cell;
  for (const auto& name : names) cell.push_back(j.at(name).get<std::int64_t>());
  return cell;
}

}  // namespace

std::string scan_state_to_json(const ScanState& state, bool include_timing) {
  const auto names = state.parameter_names();
  ordered_json domain = ordered_json::object();
  for (const auto& name : names) domain[name] = state.domain.at(name).to_string();

  ordered_json ces = ordered_json::array();
  for (const auto& ce : state.counterexamples) {
    ordered_json entry;
    entry["cell"] = cell_json(names, ce.cell);
    if (is_divisibility(state.conjecture)) {
      entry["dividend"] = ce.dividend.to_string();
      entry["divisor"] = ce.divisor.to_string();
      entry["remainder"] = ce.remainder.to_string();
    } else {
      entry["lhs"] = ce.lhs.to_string();
      entry["rhs"] = ce.rhs.to_string();
    }
    ces.push_back(std::move(entry));
  }
  ordered_json zeros = ordered_json::array();
  for (const auto& cell : state.zero_divisor_cells) zeros.push_back(cell_json(names, cell));

  ordered_json doc;
  doc["version"] = kCheckpointVersion;
  doc["conjecture_id"] = conjecture_id(state.conjecture);
  doc["p"] = state.p ? ordered_json(*state.p) : ordered_json(nullptr);
  doc["domain"] = std::move(domain);
  doc["divisor_offset"] = state.divisor_offset.to_string();
  doc["frontier"] = state.frontier ? cell_json(names, *state.frontier) : ordered_json(nullptr);
  doc["processed"] = state.processed;
  doc["complete"] = state.complete();
  doc["counterexamples"] = std::move(ces);
  doc["zero_divisor_cells"] = std::move(zeros);
  doc["elapsed_ms"] = include_timing ? ordered_json(state.elapsed_ms) : ordered_json(nullptr);
  return doc.dump();
}

ScanState scan_state_from_json(std::string_view text) {
  try {
    auto doc = ordered_json::parse(text);
    if (!doc.is_object()) throw IntegrityError("checkpoint is not a JSON object");
    if (doc.at("version").get<int>() != kCheckpointVersion) {
      throw IntegrityError("unsupported checkpoint version " + doc.at("version").dump());
    }
    ScanState state;
    state.conjecture = parse_conjecture_id(doc.at("conjecture_id").get<std::string>());
    if (!doc.at("p").is_null()) state.p = doc.at("p").get<std::int64_t>();
    const auto names = state.parameter_names();
    for (const auto& name : names) {
      state.domain[name] = IntRange::parse(doc.at("domain").at(name).get<std::string>());
    }
    state.divisor_offset = BigInt::parse(doc.at("divisor_offset").get<std::string>());
    if (!doc.at("frontier").is_null()) state.frontier = cell_from_json(names, doc.at("frontier"));
    state.processed = doc.at("processed").get<std::uint64_t>();
    for (const auto& entry : doc.at("counterexamples")) {
      Counterexample ce;
      ce.cell = cell_from_json(names, entry.at("cell"));
      if (is_divisibility(state.conjecture)) {
        ce.dividend = BigInt::parse(entry.at("dividend").get<std::string>());
        ce.divisor = BigInt::parse(entry.at("divisor").get<std::string>());
        ce.remainder = BigInt::parse(entry.at("remainder").get<std::string>());
      } else {
        ce.lhs = Rational::parse(entry.at("lhs").get<std::string>());
        ce.rhs = Rational::parse(entry.at("rhs").get<std::string>());
      }
      state.counterexamples.push_back(std::move(ce));
    }
    for (const auto& cell : doc.at("zero_divisor_cells")) {
      state.zero_divisor_cells.push_back(cell_from_json(names, cell));
    }
    const auto& elapsed = doc.at("elapsed_ms");
    state.elapsed_ms = elapsed.is_null() ? 0.0 : elapsed.get<double>();
    return state;
  } catch (const IntegrityError&) {
    throw;
  } catch (const std::exception& e) {
    throw IntegrityError(std::string("corrupt checkpoint: ") + e.what());
  }
}

void save_checkpoint(const ScanState& state, const std::filesystem::path& path) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write checkpoint " + tmp.string());
    out << scan_state_to_json(state) << '\n';
    out.flush();
    if (!out) throw IoError("failed writing checkpoint " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot replace checkpoint " + path.string() + ": " + ec.message());
}

ScanState load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read checkpoint " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return scan_state_from_json(buffer.str());
}

}  // namespace catri
