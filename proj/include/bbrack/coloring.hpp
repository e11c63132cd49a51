// Biquandle colorings of an oriented diagram: assignments of biquandle
// elements to semiarcs satisfying the crossing relations, plus one free
// color per zero-crossing unknot component.
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "bbrack/biquandle.hpp"
#include "bbrack/diagram.hpp"

namespace bbrack {

struct Coloring {
  std::map<int, int> edge_color;  // semiarc label -> element (0-based)
  std::vector<int> ucolors;       // zero-crossing unknot components
};

namespace detail {

// Fixpoint propagation over crossings; col is indexed by position in the
// sorted edge list, -1 meaning unset.  Returns false on contradiction.
inline bool color_propagate(const Biquandle& bq, const Diagram& dia,
                            std::vector<int>& col,
                            const std::map<int, int>& idx) {
  auto get = [&](int e) { return col[idx.at(e)]; };
  // -1 contradiction, 0 already set, 1 newly assigned
  auto put = [&](int e, int v) -> int {
    int& slot = col[idx.at(e)];
    if (slot < 0) {
      slot = v;
      return 1;
    }
    return slot == v ? 0 : -1;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int ci = 0; ci < dia.crossing_count(); ++ci) {
      auto [ui, oi, uo, oo] = dia.roles(ci);
      int s = dia.sign(ci);
      if (get(ui) >= 0 && get(oi) >= 0) {
        auto [u2, o2] = bq.cross_fwd(s, get(ui), get(oi));
        int r1 = put(uo, u2);
        if (r1 < 0) return false;
        int r2 = put(oo, o2);
        if (r2 < 0) return false;
        changed = changed || r1 > 0 || r2 > 0;
      } else if (get(uo) >= 0 && get(oo) >= 0) {
        auto [u1, o1] = bq.cross_bwd(s, get(uo), get(oo));
        int r1 = put(ui, u1);
        if (r1 < 0) return false;
        int r2 = put(oi, o1);
        if (r2 < 0) return false;
        changed = changed || r1 > 0 || r2 > 0;
      }
    }
  }
  return true;
}

inline void color_search(const Biquandle& bq, const Diagram& dia,
                         const std::vector<int>& col,
                         const std::map<int, int>& idx,
                         std::vector<std::vector<int>>& out) {
  auto it = std::find(col.begin(), col.end(), -1);
  if (it == col.end()) {
    auto get = [&](int e) { return col[idx.at(e)]; };
    for (int ci = 0; ci < dia.crossing_count(); ++ci) {
      auto [ui, oi, uo, oo] = dia.roles(ci);
      if (!bq.cross_ok(dia.sign(ci), get(ui), get(oi), get(uo), get(oo)))
        return;
    }
    out.push_back(col);
    return;
  }
  size_t pos = static_cast<size_t>(it - col.begin());
  for (int v = 0; v < bq.n(); ++v) {
    std::vector<int> next = col;
    next[pos] = v;
    if (color_propagate(bq, dia, next, idx)) color_search(bq, dia, next, idx, out);
  }
}

}  // namespace detail

// All colorings, ordered by (colors in ascending semiarc order, ucolors).
inline std::vector<Coloring> colorings(const Biquandle& bq,
                                       const Diagram& dia) {
  const auto& edges = dia.edges();
  std::map<int, int> idx;
  for (size_t i = 0; i < edges.size(); ++i) idx[edges[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> base;
  std::vector<int> col(edges.size(), -1);
  detail::color_search(bq, dia, col, idx, base);
  std::sort(base.begin(), base.end());

  const int nU = dia.unknot_components();
  long long ucount = 1;
  for (int i = 0; i < nU; ++i) ucount *= bq.n();
  std::vector<Coloring> result;
  result.reserve(base.size() * static_cast<size_t>(ucount));
  for (const auto& b : base) {
    for (long long k = 0; k < ucount; ++k) {
      Coloring c;
      for (size_t i = 0; i < edges.size(); ++i) c.edge_color[edges[i]] = b[i];
      c.ucolors.assign(nU, 0);
      long long t = k;
      for (int i = nU - 1; i >= 0; --i) {
        c.ucolors[i] = static_cast<int>(t % bq.n());
        t /= bq.n();
      }
      result.push_back(std::move(c));
    }
  }
  return result;
}

inline long long counting_invariant(const Biquandle& bq, const Diagram& dia) {
  return static_cast<long long>(colorings(bq, dia).size());
}

}  // namespace bbrack
