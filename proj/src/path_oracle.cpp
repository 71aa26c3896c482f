#include "path_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "combinatorics.hpp"

namespace kdyck {

namespace {

// up[l] / down[l]: paths with the current number of up-steps ending at level
// l whose final step is an up / a down. The empty path is neither and is
// handled separately.
struct DpRows {
  std::vector<BigInt> up;
  std::vector<BigInt> down;
};

// Fills rows for u = 0..n_up; levels range over [0, k*n_up].
DpRows run_dp(int k, long n_up) {
  const std::size_t levels = static_cast<std::size_t>(k) * static_cast<std::size_t>(n_up) + 1;
  DpRows prev{std::vector<BigInt>(levels), std::vector<BigInt>(levels)};
  for (long u = 1; u <= n_up; ++u) {
    DpRows cur{std::vector<BigInt>(levels), std::vector<BigInt>(levels)};
    // appending an up-step to any path (or to the empty path when u == 1)
    for (long l = k; l <= k * u; ++l) {
      const std::size_t below = static_cast<std::size_t>(l - k);
      cur.up[static_cast<std::size_t>(l)] = prev.up[below] + prev.down[below];
      if (u == 1 && l == k) cur.up[static_cast<std::size_t>(l)] += 1;
    }
    // appending a down-step; sweep downward so higher levels are final
    for (long l = k * u - 1; l >= 0; --l) {
      const std::size_t above = static_cast<std::size_t>(l + 1);
      cur.down[static_cast<std::size_t>(l)] = cur.up[above] + cur.down[above];
    }
    prev = std::move(cur);
  }
  return prev;
}

}  // namespace

BigInt count_paths(const PathSpec& spec) {
  return count_paths(spec.k, spec.n_up, spec.end_level, spec.require_last_up);
}

BigInt count_paths(int k, long n_up, long end_level, bool require_last_up) {
  require_k(k);
  if (n_up < 0 || end_level < 0) return 0;
  if (end_level > k * n_up) return 0;
  if (n_up == 0) return (end_level == 0 && !require_last_up) ? 1 : 0;
  const DpRows rows = run_dp(k, n_up);
  const std::size_t l = static_cast<std::size_t>(end_level);
  return require_last_up ? rows.up[l] : rows.up[l] + rows.down[l];
}

void enumerate_paths(int k, long n_up, const std::function<void(const std::string&)>& visit) {
  require_k(k);
  if (n_up < 0) throw std::invalid_argument("enumerate_paths: n_up must be >= 0");
  const long total_steps = (static_cast<long>(k) + 1) * n_up;
  if (total_steps > kEnumerationStepLimit) {
    throw std::invalid_argument("enumerate_paths: (k+1)*n_up exceeds the step limit of " +
                                std::to_string(kEnumerationStepLimit));
  }
  std::string path(static_cast<std::size_t>(total_steps), ' ');
  // 'U' is tried before 'D' at every position, so emission is lexicographic
  auto rec = [&](auto&& self, long pos, long level, long ups) -> void {
    if (pos == total_steps) {
      visit(path);
      return;
    }
    if (ups < n_up) {
      path[static_cast<std::size_t>(pos)] = 'U';
      self(self, pos + 1, level + k, ups + 1);
    }
    if (level > 0) {
      path[static_cast<std::size_t>(pos)] = 'D';
      self(self, pos + 1, level - 1, ups);
    }
  };
  rec(rec, 0, 0, 0);
}

std::vector<std::string> enumerate_paths(int k, long n_up) {
  std::vector<std::string> out;
  enumerate_paths(k, n_up, [&](const std::string& p) { out.push_back(p); });
  return out;
}

BigInt last_downrun_total_oracle(int k, long m) {
  require_k(k);
  if (m < 0) return 0;
  if (m == 0) return 0;
  const DpRows rows = run_dp(k, m);
  BigInt total = 0;
  for (long j = 0; j <= k * m; ++j) total += j * rows.up[static_cast<std::size_t>(j)];
  return total;
}

BigInt last_downrun_total_exhaustive(int k, long m) {
  BigInt total = 0;
  enumerate_paths(k, m, [&](const std::string& p) {
    long run = 0;
    for (auto it = p.rbegin(); it != p.rend() && *it == 'D'; ++it) ++run;
    total += run;
  });
  return total;
}

BigInt paths_from_level(int k, long start_level, long slices) {
  require_k(k);
  if (start_level < 0 || slices < 0) return 0;
  // g[l] = ways to finish from level l with the remaining number of slices
  const long max_level = start_level + slices * k;
  std::vector<BigInt> g(static_cast<std::size_t>(max_level) + 1);
  g[0] = 1;
  for (long s = 1; s <= slices; ++s) {
    // one slice from level l: up to l+k, then down to any level in [0, l+k]
    std::vector<BigInt> prefix(g.size() + 1);
    for (std::size_t i = 0; i < g.size(); ++i) prefix[i + 1] = prefix[i] + g[i];
    std::vector<BigInt> next(g.size());
    for (long l = 0; l + s * k <= max_level; ++l) {
      const long top = l + k;
      next[static_cast<std::size_t>(l)] =
          prefix[static_cast<std::size_t>(std::min(top, static_cast<long>(g.size()) - 1)) + 1];
    }
    g = std::move(next);
  }
  return start_level < static_cast<long>(g.size()) ? g[static_cast<std::size_t>(start_level)] : BigInt(0);
}

BigInt first_downrun_total_oracle(int k, long m) {
  require_k(k);
  if (m < 0) return 0;
  BigInt total = 0;
  for (long i = 0; i <= k; ++i) total += i * paths_from_level(k, k - i, m);
  return total;
}

BigInt first_downrun_total_exhaustive(int k, long m) {
  BigInt total = 0;
  enumerate_paths(k, m + 1, [&](const std::string& p) {
    long run = 0;
    for (std::size_t i = 1; i < p.size() && p[i] == 'D'; ++i) ++run;
    total += run;
  });
  return total;
}

StatLedger tabulate_last_up_counts(int k, long n_max) {
  require_k(k);
  if (n_max < 0) throw std::invalid_argument("tabulate_last_up_counts: n_max must be >= 0");
  StatLedger ledger;
  ledger.k = k;
  ledger.n_max = n_max;
  ledger.counts.resize(static_cast<std::size_t>(n_max) + 1);
  ledger.row_totals.resize(static_cast<std::size_t>(n_max) + 1);
  ledger.weighted_totals.resize(static_cast<std::size_t>(n_max) + 1);
  for (long n = 0; n <= n_max; ++n) {
    auto& row = ledger.counts[static_cast<std::size_t>(n)];
    row.resize(static_cast<std::size_t>(k * n) + 1);
    if (n == 0) continue;
    const DpRows rows = run_dp(k, n);
    for (long j = 0; j <= k * n; ++j) {
      row[static_cast<std::size_t>(j)] = rows.up[static_cast<std::size_t>(j)];
      ledger.row_totals[static_cast<std::size_t>(n)] += row[static_cast<std::size_t>(j)];
      ledger.weighted_totals[static_cast<std::size_t>(n)] += j * row[static_cast<std::size_t>(j)];
    }
  }
  return ledger;
}

}  // namespace kdyck
