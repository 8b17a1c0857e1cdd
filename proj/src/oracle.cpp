#include "sinrcap/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "sinrcap/errors.hpp"

namespace sinrcap {

namespace {

// Lexicographic combination walk: runs fn on index subsets of {0..m-1} of
// fixed size c, in increasing lexicographic order, until fn returns true.
template <typename Fn>
bool for_each_combination(std::size_t m, std::size_t c, Fn&& fn) {
  std::vector<std::size_t> idx(c);
  for (std::size_t i = 0; i < c; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = c;
    while (i > 0 && idx[i - 1] == m - c + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < c; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

OracleResult opt_fixed(const Instance& inst, const PowerAssignment& p,
                       SignalStrength delta, std::size_t cap) {
  if (!(delta.delta >= 1.0))
    throw std::invalid_argument("opt_fixed: signal strength must be at least 1");
  if (inst.n() > cap)
    throw CapExceededError("opt_fixed: " + std::to_string(inst.n()) +
                           " links exceed the exhaustive-search cap of " +
                           std::to_string(cap));
  LinkTerms t = link_terms(p, inst);
  std::vector<int> ids;
  for (int v : inst.all_ids())
    if (!t.weak[v]) ids.push_back(v);

  OracleResult res;
  const std::size_t m = ids.size();
  if (m == 0) return res;

  AffectanceMatrix table = build_matrix(ids, p, inst);
  const Matrix& a = table.entries;
  const double budget = (1.0 / delta.delta) * (1.0 + kFeasibilityRelTol);
  std::vector<char> pair_bad(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      pair_bad[i * m + j] = a.at(i, j) > budget || a.at(j, i) > budget;

  std::unordered_map<std::uint32_t, bool> memo;
  auto feasible = [&](const std::vector<std::size_t>& idx) {
    std::uint32_t mask = 0;
    for (std::size_t i : idx) mask |= std::uint32_t{1} << i;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    ++res.evaluated;
    bool ok = true;
    for (std::size_t i = 0; i < idx.size() && ok; ++i) {
      double sum = 0.0;
      for (std::size_t j : idx) sum += a.at(idx[i], j);
      ok = sum <= budget;
    }
    memo.emplace(mask, ok);
    return ok;
  };

  for (std::size_t c = m; c >= 1; --c) {
    bool found = for_each_combination(m, c, [&](const std::vector<std::size_t>& idx) {
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
          if (pair_bad[idx[i] * m + idx[j]]) return false;
      if (!feasible(idx)) return false;
      res.opt = c;
      res.witness.clear();
      for (std::size_t i : idx) res.witness.push_back(ids[i]);
      return true;
    });
    if (found) break;
  }
  return res;
}

OracleResult opt_pc(const Instance& inst, std::size_t cap) {
  if (inst.n() > cap)
    throw CapExceededError("opt_pc: " + std::to_string(inst.n()) +
                           " links exceed the exhaustive-search cap of " +
                           std::to_string(cap));
  OracleResult res;
  const std::vector<int> ids = inst.all_ids();
  const std::size_t m = ids.size();
  if (m == 0) return res;

  Matrix a = power_control_matrix(ids, inst);
  const double gate = (1.0 + kFeasibilityRelTol) * (1.0 + kFeasibilityRelTol);
  std::vector<char> pair_bad(m * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      // A two-link set is power-controllable iff the product of its two
      // cross entries is at most 1 (its spectral radius is the square root).
      pair_bad[i * m + j] = a.at(i, j) * a.at(j, i) > gate;

  std::unordered_map<std::uint32_t, bool> memo;
  std::vector<int> subset;
  auto feasible = [&](const std::vector<std::size_t>& idx) {
    std::uint32_t mask = 0;
    for (std::size_t i : idx) mask |= std::uint32_t{1} << i;
    if (auto it = memo.find(mask); it != memo.end()) {
      if (!it->second) return false;
    }
    subset.clear();
    for (std::size_t i : idx) subset.push_back(ids[i]);
    ++res.evaluated;
    PcFeasibility f = pc_feasible_oracle(subset, inst);
    memo.emplace(mask, f.feasible);
    if (f.feasible) {
      res.opt = idx.size();
      res.witness = subset;
      res.certificate = std::move(f.certificate);
    }
    return f.feasible;
  };

  for (std::size_t c = m; c >= 1; --c) {
    bool found = for_each_combination(m, c, [&](const std::vector<std::size_t>& idx) {
      for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
          if (pair_bad[idx[i] * m + idx[j]]) return false;
      return feasible(idx);
    });
    if (found) break;
  }
  return res;
}

MinScheduleResult min_schedule(const Instance& inst, const PowerAssignment& p,
                               std::size_t cap) {
  if (inst.n() > cap)
    throw CapExceededError("min_schedule: " + std::to_string(inst.n()) +
                           " links exceed the partition-search cap of " +
                           std::to_string(cap));
  MinScheduleResult res;
  const std::size_t n = inst.n();
  if (n == 0) return res;
  LinkTerms t = link_terms(p, inst);
  for (std::size_t v = 0; v < n; ++v)
    if (t.weak[v])
      throw WeakLinkError(static_cast<int>(v),
                          "min_schedule: link " + std::to_string(v) +
                              " is weak and can never be scheduled");

  const std::vector<int> ids = inst.all_ids();
  AffectanceMatrix table = build_matrix(ids, p, inst);
  const Matrix& a = table.entries;
  const double budget = 1.0 + kFeasibilityRelTol;
  const std::size_t full = std::size_t{1} << n;

  std::vector<char> feasible(full, 0);
  feasible[0] = 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      double sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (mask >> j & 1) sum += a.at(i, j);
      ok = sum <= budget;
    }
    feasible[mask] = ok;
  }

  constexpr std::size_t kInf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dp(full, kInf);
  std::vector<std::size_t> choice(full, 0);
  dp[0] = 0;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::size_t low = mask & (~mask + 1);
    for (std::size_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
      if (!(sub & low) || !feasible[sub]) continue;
      std::size_t rest = dp[mask ^ sub];
      if (rest != kInf && rest + 1 < dp[mask]) {
        dp[mask] = rest + 1;
        choice[mask] = sub;
      }
    }
  }

  res.slots = dp[full - 1];
  for (std::size_t mask = full - 1; mask != 0; mask ^= choice[mask]) {
    std::vector<int> slot;
    for (std::size_t i = 0; i < n; ++i)
      if (choice[mask] >> i & 1) slot.push_back(ids[i]);
    res.witness.push_back(std::move(slot));
  }
  std::reverse(res.witness.begin(), res.witness.end());
  return res;
}

}  // namespace sinrcap
