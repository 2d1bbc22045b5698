#include "naples/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "naples/core.hpp"
#include "naples/enumeration.hpp"
#include "naples/fibers.hpp"
#include "naples/format.hpp"
#include "naples/oracle.hpp"
#include "naples/paths.hpp"
#include "naples/permutations.hpp"
#include "naples/qstats.hpp"

namespace naples {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

namespace {

struct Table1Row {
  int n;
  int k;
  const char* latex;
};

// Known area_k distributions for n <= 5, 0 <= k < n.
constexpr Table1Row kTable1[] = {
    {1, 0, "1"},
    {2, 0, "q+2"},
    {2, 1, "2q+2"},
    {3, 0, "q^3+3q^2+6q+6"},
    {3, 1, "2q^3+7q^2+9q+6"},
    {3, 2, "3q^3+9q^2+9q+6"},
    {4, 0, "q^6+4q^5+10q^4+20q^3+30q^2+36q+24"},
    {4, 1, "2q^6+9q^5+24q^4+41q^3+53q^2+50q+24"},
    {4, 2, "3q^6+13q^5+34q^4+58q^3+60q^2+48q+24"},
    {4, 3, "4q^6+16q^5+40q^4+64q^3+60q^2+48q+24"},
    {5, 0, "q^{10}+5q^9+15q^8+35q^7+70q^6+120q^5+180q^4+240q^3+270q^2+240q+120"},
    {5, 1, "2q^{10}+11q^9+35q^8+84q^7+165q^6+263q^5+361q^4+429q^3+435q^2+320q+120"},
    {5, 2, "3q^{10}+16q^9+50q^8+121q^7+238q^6+384q^5+502q^4+529q^3+462q^2+306q+120"},
    {5, 3, "4q^{10}+21q^9+65q^8+155q^7+295q^6+464q^5+576q^4+550q^3+450q^2+300q+120"},
    {5, 4, "5q^{10}+25q^9+75q^8+175q^7+325q^6+500q^5+600q^4+550q^3+450q^2+300q+120"},
};

// Known fiber-size histograms over S_n for n <= 5.
const std::map<int, std::vector<std::pair<long long, long long>>> kFiberGfReference = {
    {1, {{1, 1}}},
    {2, {{1, 1}, {2, 1}}},
    {3, {{1, 1}, {2, 3}, {3, 1}, {6, 1}}},
    {4, {{1, 1}, {2, 6}, {3, 4}, {4, 4}, {6, 4}, {8, 3}, {12, 1}, {24, 1}}},
    {5,
     {{1, 1},
      {2, 10},
      {3, 10},
      {4, 20},
      {5, 1},
      {6, 20},
      {8, 15},
      {10, 6},
      {12, 15},
      {15, 4},
      {20, 4},
      {24, 5},
      {30, 4},
      {40, 3},
      {60, 1},
      {120, 1}}},
};

class Runner {
 public:
  VerificationReport release() { return std::move(report_); }

  void run(const std::string& name, const std::string& params,
           const std::function<std::string()>& check) {
    CheckResult result;
    result.name = name;
    result.params = params;
    const auto start = std::chrono::steady_clock::now();
    result.counterexample = check();
    result.passed = result.counterexample.empty();
    const auto stop = std::chrono::steady_clock::now();
    result.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    report_.checks.push_back(std::move(result));
  }

 private:
  VerificationReport report_;
};

std::string describe(int n, int k, const std::string& what) {
  std::ostringstream os;
  os << "n=" << n << " k=" << k << ": " << what;
  return os.str();
}

// Weakly decreasing tuples in [n]^n, lexicographically ascending.
void for_each_decreasing(int n, const std::function<void(const ParkingPreference&)>& visit) {
  std::vector<int> t(static_cast<size_t>(n));
  std::function<void(int, int)> extend = [&](int position, int bound) {
    if (position == n) {
      visit(ParkingPreference(t));
      return;
    }
    for (int v = 1; v <= bound; ++v) {
      t[static_cast<size_t>(position)] = v;
      extend(position + 1, v);
    }
  };
  extend(0, n);
}

std::string check_fiber_members_vs_oracle(int n_max, int threads) {
  // Exact set equality against the materialized oracle while the n^n space
  // is small. Beyond n = 6 the grouped oracle no longer fits comfortably in
  // memory, so the check streams instead: every constructed member must
  // simulate back to sigma and the member count must equal the fiber size;
  // completeness follows because the fiber sizes also sum to the
  // independently recursed total (checked separately).
  for (int n = 1; n <= std::min(n_max, 6); ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      const NaplesParameter kk(k);
      auto groups = oracle_fibers(n, kk);
      std::string failure;
      for_each_permutation(n, [&](const std::vector<int>& one_line) {
        if (!failure.empty()) return;
        const Permutation sigma(one_line);
        const auto members = fiber_members(sigma, kk).to_vector();
        auto it = groups.find(sigma);
        const std::vector<ParkingPreference> expected =
            it == groups.end() ? std::vector<ParkingPreference>{} : it->second;
        if (members != expected) {
          std::ostringstream os;
          os << "sigma=" << sigma << " constructive fiber differs from oracle";
          failure = describe(n, k, os.str());
          return;
        }
        if (fiber_size(sigma, kk) != BigInt(expected.size())) {
          std::ostringstream os;
          os << "sigma=" << sigma << " fiber_size differs from oracle count";
          failure = describe(n, k, os.str());
        }
      });
      if (!failure.empty()) return failure;
    }
  }
  for (int n = 7; n <= n_max; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      const NaplesParameter kk(k);
      struct Tally {
        BigInt members = 0;
        std::string failure;
      };
      Tally tally = reduce_over_permutations<Tally>(
          n, threads, Tally{},
          [&kk](Tally& acc, const std::vector<int>& one_line) {
            if (!acc.failure.empty()) return;
            const Permutation sigma(one_line);
            BigInt count = 0;
            for (const ParkingPreference& p : fiber_members(sigma, kk)) {
              auto outcome = phi_k(p, kk);
              if (!outcome || *outcome != sigma) {
                std::ostringstream os;
                os << "sigma=" << sigma << " member " << p << " does not park to sigma";
                acc.failure = os.str();
                return;
              }
              ++count;
            }
            if (count != fiber_size(sigma, kk)) {
              std::ostringstream os;
              os << "sigma=" << sigma << " member count differs from fiber_size";
              acc.failure = os.str();
              return;
            }
            acc.members += count;
          },
          [](Tally& acc, Tally&& partial) {
            if (acc.failure.empty() && !partial.failure.empty()) {
              acc.failure = std::move(partial.failure);
            }
            acc.members += partial.members;
          });
      if (!tally.failure.empty()) return describe(n, k, tally.failure);
      if (tally.members != count_npf_recursive(n, kk)) {
        return describe(n, k, "fiber sizes do not sum to the recursed total");
      }
    }
  }
  return {};
}

std::string check_permsum_vs_recursive(int n_max, int threads) {
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      const NaplesParameter kk(k);
      const BigInt by_sum = count_npf_permsum(n, kk, threads);
      const BigInt by_recursion = count_npf_recursive(n, kk);
      if (by_sum != by_recursion) {
        return describe(n, k, "permutation sum " + by_sum.str() + " != recursion " +
                                  by_recursion.str());
      }
      if (k == 0 && by_sum != count_pf_closed(n)) {
        return describe(n, k, "k=0 sum differs from (n+1)^(n-1)");
      }
      if (k == n - 1) {
        BigInt nn = 1;
        for (int i = 0; i < n; ++i) nn *= n;
        if (by_sum != nn) return describe(n, k, "k=n-1 sum differs from n^n");
      }
    }
  }
  return {};
}

std::string check_gf_recursions(int n_max, int threads, bool logarithmic) {
  for (int n = 1; n <= n_max; ++n) {
    const IndexedSeries direct = fiber_gf_direct(n, threads);
    const IndexedSeries recursed = logarithmic ? log_gf(n) : fiber_gf_recursive(n);
    if (direct != recursed) {
      return describe(n, 0, "recomputed series differs from direct histogram");
    }
  }
  return {};
}

std::string check_fiber_area_poly_vs_histogram(int n_max, int /*threads*/) {
  for (int n = 1; n <= std::min(n_max, 6); ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      const NaplesParameter kk(k);
      std::string failure;
      for_each_permutation(n, [&](const std::vector<int>& one_line) {
        if (!failure.empty()) return;
        const Permutation sigma(one_line);
        QPolynomial histogram;
        for (const ParkingPreference& p : fiber_members(sigma, kk)) {
          const auto stat = area_k(p, kk);
          std::vector<BigInt> mono(static_cast<size_t>(stat) + 1);
          mono.back() = 1;
          histogram += QPolynomial(std::move(mono));
        }
        if (histogram != fiber_area_poly(sigma, kk)) {
          std::ostringstream os;
          os << "sigma=" << sigma << " area histogram differs from q-product";
          failure = describe(n, k, os.str());
        }
      });
      if (!failure.empty()) return failure;
    }
  }
  return {};
}

std::string check_decreasing_vs_simulation(int n_max, int /*threads*/) {
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      const NaplesParameter kk(k);
      std::string failure;
      for_each_decreasing(n, [&](const ParkingPreference& pref) {
        if (!failure.empty()) return;
        if (decreasing_npf_check(pref, kk) != is_naples_pf(pref, kk)) {
          std::ostringstream os;
          os << "pref=" << pref << " height bound disagrees with simulation";
          failure = describe(n, k, os.str());
        }
      });
      if (!failure.empty()) return failure;
    }
  }
  return {};
}

// Every labeled path weakly below y = n - x, by extending partial paths
// column by column; labelings distribute 1..n over the south runs with each
// run increasing.
void for_each_labeled_dyck(int n, const std::function<void(const LatticePath&)>& visit) {
  std::vector<int> south_runs(static_cast<size_t>(n), 0);
  std::function<void(int, int)> recurse_runs = [&](int column, int placed) {
    if (column == n) {
      if (placed != n) return;
      // Distribute labels over runs: choose which labels land in each run.
      std::vector<int> unused(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) unused[static_cast<size_t>(i)] = i + 1;
      std::vector<std::vector<int>> assignment(static_cast<size_t>(n));
      std::function<void(int)> recurse_labels = [&](int col) {
        if (col == n) {
          LatticePath path;
          for (int c = 0; c < n; ++c) {
            for (int label : assignment[static_cast<size_t>(c)]) {
              path.steps.push_back(Step::South);
              path.labels.push_back(label);
            }
            path.steps.push_back(Step::East);
          }
          visit(path);
          return;
        }
        const int run = south_runs[static_cast<size_t>(col)];
        // Choose `run` labels from `unused`, used in increasing order.
        std::vector<int> pool = unused;
        std::vector<int> chosen;
        std::function<void(size_t)> choose = [&](size_t start) {
          if (static_cast<int>(chosen.size()) == run) {
            assignment[static_cast<size_t>(col)] = chosen;
            std::vector<int> remaining;
            for (int v : pool) {
              if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) {
                remaining.push_back(v);
              }
            }
            std::swap(unused, remaining);
            recurse_labels(col + 1);
            std::swap(unused, remaining);
            return;
          }
          for (size_t i = start; i < pool.size(); ++i) {
            chosen.push_back(pool[i]);
            choose(i + 1);
            chosen.pop_back();
          }
        };
        choose(0);
      };
      recurse_labels(0);
      return;
    }
    // Placing u souths in this column keeps the path below the boundary iff
    // the running total reaches column+1.
    for (int u = std::max(0, column + 1 - placed); placed + u <= n; ++u) {
      south_runs[static_cast<size_t>(column)] = u;
      recurse_runs(column + 1, placed + u);
    }
    south_runs[static_cast<size_t>(column)] = 0;
  };
  recurse_runs(0, 0);
}

std::string check_dyck_round_trip(int n_max, int /*threads*/) {
  for (int n = 1; n <= std::min(n_max, 6); ++n) {
    auto groups = oracle_fibers(n, NaplesParameter(0));
    for (const auto& [sigma, members] : groups) {
      for (const ParkingPreference& p : members) {
        const LatticePath path = pf_to_labeled_dyck(p);
        if (!within_k_boundary(path, 0)) {
          return describe(n, 0, "path escapes the y = n - x boundary");
        }
        if (labeled_dyck_to_pf(path) != p) {
          std::ostringstream os;
          os << "pref=" << p << " does not survive the round trip";
          return describe(n, 0, os.str());
        }
      }
    }
  }
  for (int n = 1; n <= std::min(n_max, 5); ++n) {
    std::string failure;
    for_each_labeled_dyck(n, [&](const LatticePath& path) {
      if (!failure.empty()) return;
      const ParkingPreference p = labeled_dyck_to_pf(path);
      if (pf_to_labeled_dyck(p) != path) {
        failure = describe(n, 0, "labeled path does not survive the reverse round trip");
      }
    });
    if (!failure.empty()) return failure;
  }
  return {};
}

std::string check_table1(int n_max, int threads) {
  for (const Table1Row& row : kTable1) {
    if (row.n > n_max) continue;
    const QPolynomial dist = area_distribution(row.n, NaplesParameter(row.k), threads);
    if (latex_polynomial(dist) != row.latex) {
      return describe(row.n, row.k,
                      "distribution " + latex_polynomial(dist) + " != " + row.latex);
    }
  }
  return {};
}

std::string check_fiber_gf_golden(int n_max, int threads) {
  for (const auto& [n, reference] : kFiberGfReference) {
    if (n > n_max) continue;
    IndexedSeries expected;
    for (const auto& [index, coeff] : reference) expected.add_term(index, coeff);
    if (fiber_gf_direct(n, threads) != expected) {
      return describe(n, 0, "fiber-size histogram differs from the reference series");
    }
  }
  return {};
}

}  // namespace

VerificationReport verify(int n_max, int threads) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (n_max > 8) throw ResourceLimit("verification is capped at n_max = 8");

  Runner runner;
  const std::string all_nk = "1<=n<=" + std::to_string(n_max) + ", 0<=k<=n-1";

  runner.run("fiber_members_vs_oracle", all_nk,
             [&] { return check_fiber_members_vs_oracle(n_max, threads); });
  runner.run("permsum_vs_recursive", all_nk,
             [&] { return check_permsum_vs_recursive(n_max, threads); });
  runner.run("coeff_recursion_vs_direct", "1<=n<=" + std::to_string(n_max),
             [&] { return check_gf_recursions(n_max, threads, false); });
  runner.run("log_gf_vs_direct", "1<=n<=" + std::to_string(n_max),
             [&] { return check_gf_recursions(n_max, threads, true); });
  runner.run("fiber_area_poly_vs_histogram",
             "1<=n<=" + std::to_string(std::min(n_max, 6)) + ", 0<=k<=n-1",
             [&] { return check_fiber_area_poly_vs_histogram(n_max, threads); });
  runner.run("decreasing_check_vs_simulation", all_nk,
             [&] { return check_decreasing_vs_simulation(n_max, threads); });
  runner.run("dyck_round_trip", "1<=n<=" + std::to_string(std::min(n_max, 6)),
             [&] { return check_dyck_round_trip(n_max, threads); });
  runner.run("table1_rows", "n<=" + std::to_string(std::min(n_max, 5)) + ", k<n",
             [&] { return check_table1(n_max, threads); });
  runner.run("fiber_gf_golden", "n<=" + std::to_string(std::min(n_max, 5)),
             [&] { return check_fiber_gf_golden(n_max, threads); });
  return runner.release();
}

}  // namespace naples
