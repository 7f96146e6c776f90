#include "catri/conjectures.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "catri/numbers.hpp"

namespace catri {

namespace {

BigInt power_sum(const TriangleRow& row, std::int64_t from, std::int64_t to,
                 unsigned p) {
  BigInt s(0);
  for (std::int64_t k = from; k <= to; ++k) s += pow(row.at(k), p);
  return s;
}

unsigned checked_exponent(std::int64_t p) {
  if (p < 1 || p % 2 == 0) {
    throw UsageError("exponent p must be an odd integer >= 1, got " + std::to_string(p));
  }
  return static_cast<unsigned>(p);
}

bool admissible(Conjecture c, const ScanCell& cell) {
  switch (c) {
    case Conjecture::kDivisibilityC: return cell[0] > cell[1] && cell[1] >= 1;
    case Conjecture::kDivisibilityB:
    case Conjecture::kDivisibilityA: return cell[0] >= 1;
    case Conjecture::kMixedCube: return cell[0] >= 1 && cell[1] >= 1;
  }
  return false;
}

// All admissible cells of the domain, in scan order.
std::vector<ScanCell> enumerate_cells(const ScanState& state) {
  std::vector<IntRange> ranges;
  for (const auto& name : state.parameter_names()) {
    auto it = state.domain.find(name);
    if (it == state.domain.end()) {
      throw UsageError(std::string(conjecture_id(state.conjecture)) +
                       " scan needs a range for '" + name + "'");
    }
    ranges.push_back(it->second);
  }
  std::vector<ScanCell> cells;
  if (std::any_of(ranges.begin(), ranges.end(), [](const IntRange& r) { return r.empty(); })) {
    return cells;
  }
  ScanCell cell(ranges.size());
  for (std::size_t d = 0; d < ranges.size(); ++d) cell[d] = ranges[d].lo;
  while (true) {
    if (admissible(state.conjecture, cell)) cells.push_back(cell);
    std::size_t d = ranges.size();
    while (d > 0) {
      --d;
      if (cell[d] < ranges[d].hi) {
        ++cell[d];
        break;
      }
      cell[d] = ranges[d].lo;
      if (d == 0) return cells;
    }
  }
}

struct CellOutcome {
  bool zero_divisor = false;
  std::optional<Counterexample> counterexample;
};

CellOutcome evaluate_cell(const ScanState& state, const ScanCell& cell) {
  CellOutcome out;
  if (state.conjecture == Conjecture::kMixedCube) {
    auto r = check_mixed_cube(cell[1], cell[0]);
    if (!r.equal) {
      Counterexample ce;
      ce.cell = cell;
      ce.lhs = std::move(r.lhs);
      ce.rhs = std::move(r.rhs);
      out.counterexample = std::move(ce);
    }
    return out;
  }
  auto claim = divisibility_claim(state.conjecture, *state.p, cell, state.divisor_offset);
  if (claim.divisor.is_zero()) {
    out.zero_divisor = true;
    return out;
  }
  BigInt rem = remainder(claim.dividend, claim.divisor);
  if (!rem.is_zero()) {
    Counterexample ce;
    ce.cell = cell;
    ce.dividend = std::move(claim.dividend);
    ce.divisor = std::move(claim.divisor);
    ce.remainder = std::move(rem);
    out.counterexample = std::move(ce);
  }
  return out;
}

// Evaluates cells[first, last) with `jobs` workers; outcomes keep cell order.
std::vector<CellOutcome> evaluate_batch(const ScanState& state,
                                        const std::vector<ScanCell>& cells,
                                        std::size_t first, std::size_t last,
                                        unsigned jobs) {
  std::vector<CellOutcome> outcomes(last - first);
  std::atomic<std::size_t> next{first};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= last) return;
      try {
        outcomes[i - first] = evaluate_cell(state, cells[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  jobs = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), last - first));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return outcomes;
}

ScanState run_scan(ScanState state, const ScanOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const double prior_ms = state.elapsed_ms;
  auto cells = enumerate_cells(state);

  std::size_t position = 0;
  if (state.frontier) {
    auto it = std::lower_bound(cells.begin(), cells.end(), *state.frontier);
    if (it == cells.end() || *it != *state.frontier) {
      throw IntegrityError("checkpoint frontier is not a cell of its domain");
    }
    position = static_cast<std::size_t>(it - cells.begin());
  } else {
    position = cells.size();
  }

  std::size_t end = cells.size();
  if (options.stop_after) {
    end = std::min<std::size_t>(end, position + *options.stop_after);
  }

  auto stamp = [&] {
    state.elapsed_ms = prior_ms + std::chrono::duration<double, std::milli>(
                                      std::chrono::steady_clock::now() - started)
                                      .count();
  };

  const unsigned jobs = std::max(1u, options.jobs);
  const std::size_t batch = std::max<std::size_t>(64, std::size_t{jobs} * 16);
  std::uint64_t since_save = 0;
  while (position < end) {
    std::size_t stop = std::min(end, position + batch);
    if (options.checkpoint_path && options.checkpoint_every > 0) {
      stop = std::min<std::size_t>(stop, position + (options.checkpoint_every - since_save));
    }
    auto outcomes = evaluate_batch(state, cells, position, stop, jobs);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i].zero_divisor) state.zero_divisor_cells.push_back(cells[position + i]);
      if (outcomes[i].counterexample) {
        state.counterexamples.push_back(std::move(*outcomes[i].counterexample));
      }
    }
    state.processed += stop - position;
    since_save += stop - position;
    position = stop;
    state.frontier = position < cells.size() ? std::optional(cells[position]) : std::nullopt;
    if (options.checkpoint_path && options.checkpoint_every > 0 &&
        since_save >= options.checkpoint_every) {
      stamp();
      save_checkpoint(state, *options.checkpoint_path);
      since_save = 0;
    }
  }

  stamp();
  if (options.checkpoint_path) save_checkpoint(state, *options.checkpoint_path);
  return state;
}

ScanState fresh_state(Conjecture c, std::optional<std::int64_t> p,
                      const RangeMap& domain, const BigInt& offset) {
  ScanState state;
  state.conjecture = c;
  state.p = p;
  state.divisor_offset = offset;
  for (const auto& name : state.parameter_names()) {
    auto it = domain.find(name);
    if (it == domain.end()) {
      throw UsageError(std::string(conjecture_id(c)) + " scan needs a range for '" +
                       name + "'");
    }
    state.domain[name] = it->second;
  }
  for (const auto& [name, range] : domain) {
    if (!state.domain.contains(name)) {
      throw UsageError(std::string(conjecture_id(c)) + " scan has no parameter '" +
                       name + "'");
    }
  }
  auto cells = enumerate_cells(state);
  if (cells.empty()) {
    throw UsageError(std::string(conjecture_id(c)) + ": empty scan domain");
  }
  state.frontier = cells.front();
  return state;
}

}  // namespace

std::string_view conjecture_id(Conjecture c) {
  switch (c) {
    case Conjecture::kDivisibilityC: return "divisibility-C";
    case Conjecture::kDivisibilityB: return "divisibility-B";
    case Conjecture::kDivisibilityA: return "divisibility-A";
    case Conjecture::kMixedCube: return "mixed-cube";
  }
  return "?";
}

Conjecture parse_conjecture_id(std::string_view id) {
  for (auto c : {Conjecture::kDivisibilityC, Conjecture::kDivisibilityB,
                 Conjecture::kDivisibilityA, Conjecture::kMixedCube}) {
    if (conjecture_id(c) == id) return c;
  }
  throw IntegrityError("unknown conjecture id '" + std::string(id) + "'");
}

bool is_divisibility(Conjecture c) { return c != Conjecture::kMixedCube; }

std::vector<std::string> ScanState::parameter_names() const {
  switch (conjecture) {
    case Conjecture::kDivisibilityC:
    case Conjecture::kMixedCube: return {"m", "n"};
    case Conjecture::kDivisibilityB:
    case Conjecture::kDivisibilityA: return {"n"};
  }
  return {};
}

bool same_outcome(const ScanState& a, const ScanState& b) {
  return a.conjecture == b.conjecture && a.p == b.p && a.domain == b.domain &&
         a.divisor_offset == b.divisor_offset && a.frontier == b.frontier &&
         a.processed == b.processed && a.counterexamples == b.counterexamples &&
         a.zero_divisor_cells == b.zero_divisor_cells;
}

DivisibilityClaim divisibility_claim(Conjecture variant, std::int64_t p,
                                     const ScanCell& cell,
                                     const BigInt& divisor_offset) {
  const unsigned exponent = checked_exponent(p);
  DivisibilityClaim claim;
  switch (variant) {
    case Conjecture::kDivisibilityC: {
      const std::int64_t m = cell.at(0), n = cell.at(1);
      if (!(m > n && n >= 1)) {
        throw DomainError("C divisibility needs m > n >= 1");
      }
      claim.dividend = power_sum(*c_row(m), 0, n, exponent);
      claim.divisor = binomial(m - 1, n);
      break;
    }
    case Conjecture::kDivisibilityB: {
      const std::int64_t n = cell.at(0);
      if (n < 1) throw DomainError("B divisibility needs n >= 1");
      claim.dividend = power_sum(*b_row(n), 1, n, exponent);
      claim.divisor = exact_div(BigInt(n + 1) * catalan(n), BigInt(2));
      break;
    }
    case Conjecture::kDivisibilityA: {
      const std::int64_t n = cell.at(0);
      if (n < 1) throw DomainError("A divisibility needs n >= 1");
      claim.dividend = power_sum(*a_row(n), 1, n + 1, exponent);
      claim.divisor = BigInt(n + 1) * catalan(n);
      break;
    }
    case Conjecture::kMixedCube:
      throw UsageError("mixed-cube is not a divisibility conjecture");
  }
  claim.divisor += divisor_offset;
  return claim;
}

MixedCubeResult check_mixed_cube(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw DomainError("mixed cube needs n, m >= 1");
  const std::int64_t r = std::min(n, m);
  const std::int64_t s = std::max(n, m);

  auto bn = b_row(n);
  auto bm = b_row(m);
  BigInt lhs(0);
  for (std::int64_t k = 1; k <= r; ++k) lhs += bn->at(k) * bn->at(k) * bm->at(k);

  BigInt inner(0);
  for (std::int64_t j = 0; j <= r - 1; ++j) inner += binomial(s + j, s) * binomial(n + j, n - 1);
  Rational bracket =
      Rational(1) - Rational(BigInt(n + 2 * m) * inner,
                             BigInt(r) * binomial(n + m, n) * binomial(n + r, n));
  BigInt central_n = binomial(2 * n, n);
  Rational rhs = Rational(central_n * central_n * binomial(2 * m, m), BigInt(2)) * bracket;

  MixedCubeResult result{Rational(lhs), std::move(rhs), false};
  result.equal = result.lhs == result.rhs;
  return result;
}

ScanState scan_divisibility(Conjecture variant, std::int64_t p, const RangeMap& domain,
                            const ScanOptions& options) {
  if (!is_divisibility(variant)) {
    throw UsageError("scan_divisibility needs a divisibility variant");
  }
  checked_exponent(p);
  return run_scan(fresh_state(variant, p, domain, options.divisor_offset), options);
}

ScanState scan_mixed_cube(const RangeMap& domain, const ScanOptions& options) {
  return run_scan(fresh_state(Conjecture::kMixedCube, std::nullopt, domain, BigInt(0)),
                  options);
}

ScanState resume_scan(const ScanState& state, const ScanOptions& options) {
  if (is_divisibility(state.conjecture)) {
    if (!state.p) throw IntegrityError("divisibility checkpoint without exponent");
    checked_exponent(*state.p);
  }
  return run_scan(state, options);
}

bool reverify(const ScanState& state, const Counterexample& ce) {
  if (state.conjecture == Conjecture::kMixedCube) {
    auto r = check_mixed_cube(ce.cell.at(1), ce.cell.at(0));
    return !r.equal && r.lhs == ce.lhs && r.rhs == ce.rhs;
  }
  auto claim = divisibility_claim(state.conjecture, state.p.value(), ce.cell,
                                  state.divisor_offset);
  if (claim.divisor.is_zero()) return false;
  BigInt rem = remainder(claim.dividend, claim.divisor);
  return !rem.is_zero() && claim.dividend == ce.dividend &&
         claim.divisor == ce.divisor && rem == ce.remainder;
}

}  // namespace catri
