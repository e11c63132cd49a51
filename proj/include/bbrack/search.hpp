// Exhaustive enumeration of all brackets on a finite biquandle over a
// finite ring.
//
// The key pruning lever is δ-stratification: the consistency axiom couples
// every cell pair (A[x][y], B[x][y]) through one global δ, so candidates
// factor by δ.  For each δ the unit pairs (a, b) with −a·b⁻¹−a⁻¹·b = δ are
// precomputed once; cells are then assigned by backtracking — diagonal
// cells first (they must agree on a common unit w, fixed by the first
// cell), then off-diagonal cells in row-major order — and each
// Yang-Baxter triple is checked as soon as the last cell it touches is
// assigned.
#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "bbrack/bracket.hpp"

namespace bbrack {

struct SearchOptions {
  long long pair_bound = 1 << 20;  // max entries in the unit-pair table
  long long limit = -1;            // stop after this many results (<0: all)
  bool dedup = false;
  int threads = 0;  // 0 = auto (BBRACK_THREADS, else hardware)
};

struct SearchReport {
  std::string biquandle_name;
  std::string ring_spec;
  std::vector<Bracket> found;  // canonical (lexicographic [A|B]) order
  // Filled when dedup was requested: indices into `found`, grouped by
  // scalar/C-transform equivalence, each class ascending, classes ordered
  // by representative (their first member).
  std::vector<std::vector<size_t>> classes;
  unsigned long long candidates = 0;  // partial assignments explored
  double elapsed_seconds = 0.0;
};

namespace detail {

struct SearchPlan {
  int n = 0;
  std::vector<std::pair<int, int>> cells;  // assignment order
  // Triples to check after the cell at each depth is assigned (every cell
  // the triple touches has assignment order <= that depth).
  std::vector<std::vector<std::array<int, 3>>> triples_by_depth;
};

inline SearchPlan make_search_plan(const Biquandle& bq) {
  SearchPlan plan;
  const int n = bq.n();
  plan.n = n;
  for (int x = 0; x < n; ++x) plan.cells.push_back({x, x});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y) plan.cells.push_back({x, y});
  std::vector<int> depth_of(n * n, -1);
  for (size_t d = 0; d < plan.cells.size(); ++d)
    depth_of[plan.cells[d].first * n + plan.cells[d].second] =
        static_cast<int>(d);
  plan.triples_by_depth.assign(plan.cells.size(), {});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int last = 0;
        for (const auto& idx :
             {yb_lhs_idx(bq, x, y, z), yb_rhs_idx(bq, x, y, z)})
          for (const auto& [i, j] : idx)
            last = std::max(last, depth_of[i * n + j]);
        plan.triples_by_depth[last].push_back({x, y, z});
      }
  return plan;
}

struct StratumSearcher {
  const Ring& R;
  const Biquandle& bq;
  const SearchPlan& plan;
  const std::vector<std::pair<Elem, Elem>>& pairs;  // for this δ
  Elem delta;
  long long limit;
  Matrix A, B;
  Elem w;
  std::vector<Bracket> out;
  unsigned long long nodes = 0;

  StratumSearcher(const Ring& r, const Biquandle& b, const SearchPlan& p,
                  const std::vector<std::pair<Elem, Elem>>& pr, Elem d,
                  long long lim)
      : R(r), bq(b), plan(p), pairs(pr), delta(std::move(d)), limit(lim) {
    A.assign(p.n, std::vector<Elem>(p.n, R.zero()));
    B.assign(p.n, std::vector<Elem>(p.n, R.zero()));
    w = R.zero();
  }

  bool done() const {
    return limit >= 0 && static_cast<long long>(out.size()) >= limit;
  }

  void run() { descend(0); }

  void descend(size_t depth) {
    if (done()) return;
    if (depth == plan.cells.size()) {
      Bracket br(R, bq, A, B);
      if (!verify_bracket(br)) out.push_back(std::move(br));
      return;
    }
    auto [x, y] = plan.cells[depth];
    for (const auto& [a, b] : pairs) {
      if (done()) return;
      ++nodes;
      if (x == y) {
        Elem wc = R.add(R.mul(delta, a), b);
        if (!R.is_unit(wc)) continue;
        if (depth == 0)
          w = wc;
        else if (!(wc == w))
          continue;
        if (!(R.add(R.mul(delta, R.inv(a)), R.inv(b)) == R.inv(wc))) continue;
      }
      A[x][y] = a;
      B[x][y] = b;
      bool ok = true;
      for (const auto& t : plan.triples_by_depth[depth])
        if (yb_check_triple(R, bq, A, B, delta, t[0], t[1], t[2])) {
          ok = false;
          break;
        }
      if (ok) descend(depth + 1);
    }
  }
};

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BBRACK_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace detail

inline std::vector<std::vector<size_t>> dedup_equivalence(
    const std::vector<Bracket>& brackets, const Biquandle& bq, const Ring& R);

inline SearchReport search_brackets(const Biquandle& bq, const Ring& R,
                                    const SearchOptions& opts = {}) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Elem> units = R.units();  // throws Infinite for Laurent
  long long table_size =
      static_cast<long long>(units.size()) * static_cast<long long>(units.size());
  if (table_size > opts.pair_bound)
    throw Error("RingTooLarge",
                "RingTooLarge: unit pair table would have " +
                    std::to_string(table_size) + " entries (bound " +
                    std::to_string(opts.pair_bound) + ")");

  // Group unit pairs by their δ; strata ordered canonically.
  std::map<long long, std::pair<Elem, std::vector<std::pair<Elem, Elem>>>>
      strata;
  for (const Elem& a : units)
    for (const Elem& b : units) {
      Elem d = R.sub(R.neg(R.mul(a, R.inv(b))), R.mul(R.inv(a), b));
      auto& slot = strata[d.code];
      slot.first = d;
      slot.second.push_back({a, b});
    }

  detail::SearchPlan plan = detail::make_search_plan(bq);
  SearchReport report;
  report.biquandle_name = bq.name();
  report.ring_spec = R.spec_string();

  std::vector<const std::pair<Elem, std::vector<std::pair<Elem, Elem>>>*>
      stratum_list;
  for (auto& [code, slot] : strata) stratum_list.push_back(&slot);

  int threads = detail::resolve_threads(opts.threads);
  if (opts.limit >= 0) threads = 1;  // early stop must stay deterministic
  threads = std::min<int>(threads, static_cast<int>(stratum_list.size()));

  if (threads <= 1) {
    for (auto* slot : stratum_list) {
      long long remaining =
          opts.limit < 0
              ? -1
              : opts.limit - static_cast<long long>(report.found.size());
      if (opts.limit >= 0 && remaining <= 0) break;
      detail::StratumSearcher s(R, bq, plan, slot->second, slot->first,
                                remaining);
      s.run();
      report.candidates += s.nodes;
      for (auto& br : s.out) report.found.push_back(std::move(br));
    }
  } else {
    std::vector<std::vector<Bracket>> results(stratum_list.size());
    std::atomic<size_t> next{0};
    std::atomic<unsigned long long> nodes{0};
    auto worker = [&] {
      for (size_t i = next.fetch_add(1); i < stratum_list.size();
           i = next.fetch_add(1)) {
        detail::StratumSearcher s(R, bq, plan, stratum_list[i]->second,
                                  stratum_list[i]->first, -1);
        s.run();
        nodes += s.nodes;
        results[i] = std::move(s.out);
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    report.candidates = nodes.load();
    for (auto& chunk : results)
      for (auto& br : chunk) report.found.push_back(std::move(br));
  }

  std::sort(report.found.begin(), report.found.end(),
            [](const Bracket& p, const Bracket& q) {
              return p.encode() < q.encode();
            });

  if (opts.dedup) report.classes = dedup_equivalence(report.found, bq, R);

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

// Partition a canonical-sorted bracket list into scalar/C-transform
// equivalence classes.  Class representative = least member present.
inline std::vector<std::vector<size_t>> dedup_equivalence(
    const std::vector<Bracket>& brackets, const Biquandle& bq, const Ring& R) {
  std::map<std::vector<long long>, size_t> index_of;
  for (size_t i = 0; i < brackets.size(); ++i)
    index_of[brackets[i].encode()] = i;
  std::vector<Elem> units = R.units();
  const int n = bq.n();
  std::vector<std::vector<size_t>> classes;
  std::vector<bool> claimed(brackets.size(), false);
  for (size_t i = 0; i < brackets.size(); ++i) {
    if (claimed[i]) continue;
    std::vector<size_t> members;
    // Orbit under (α, C): α·γ_C(x,y)·A etc.; odometer over C ∈ units^n.
    std::vector<size_t> cidx(n, 0);
    std::vector<Elem> C(n, R.one());
    while (true) {
      for (int k = 0; k < n; ++k) C[k] = units[cidx[k]];
      for (const Elem& alpha : units) {
        Bracket tr = scalar_transform(c_transform(brackets[i], C), alpha);
        auto it = index_of.find(tr.encode());
        if (it != index_of.end() && !claimed[it->second]) {
          claimed[it->second] = true;
          members.push_back(it->second);
        }
      }
      int k = n - 1;
      while (k >= 0 && ++cidx[k] == units.size()) cidx[k--] = 0;
      if (k < 0) break;
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

}  // namespace bbrack
