// Kauffman-style state sum for colored diagrams: every crossing is smoothed
// in one of two ways (oriented or disoriented); a state contributes the
// product of its crossing coefficients times δ^(number of circles); the sum
// over all 2^c states times w^(negative − positive crossings) is the value
// of the coloring, and the multiset of values over all colorings is the
// invariant.
//
// Coefficients: a positive crossing colored with under-in x and over-out y
// contributes A[x][y] (oriented smoothing) or B[x][y] (disoriented); a
// negative crossing with under-out x and over-in y contributes A[x][y]⁻¹
// (oriented) or B[x][y]⁻¹ (disoriented).  The oriented smoothing pairs the
// PD ports {(a,b),(c,d)} at a positive crossing and {(a,d),(b,c)} at a
// negative one; the disoriented smoothing uses the other pairing.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "bbrack/bracket.hpp"
#include "bbrack/coloring.hpp"
#include "bbrack/diagram.hpp"

namespace bbrack {

struct InvariantValue {
  Ring ring;
  // (value, multiplicity) in canonical ring order, multiplicities > 0.
  std::vector<std::pair<Elem, long long>> values;
  long long count = 0;  // total multiplicity = number of colorings
};

namespace detail {

struct CircleCounter {
  const Diagram& dia;
  std::map<int, int> eidx;
  explicit CircleCounter(const Diagram& d) : dia(d) {
    const auto& edges = d.edges();
    for (size_t i = 0; i < edges.size(); ++i)
      eidx[edges[i]] = static_cast<int>(i);
  }
  // choices[ci]: 0 = oriented smoothing, 1 = disoriented.
  int count(const std::vector<int>& choices) const {
    const size_t m = eidx.size();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int i) {
      while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
      }
      return i;
    };
    for (int ci = 0; ci < dia.crossing_count(); ++ci) {
      auto [a, b, c, d] = dia.crossings()[ci];
      bool oriented = choices[ci] == 0;
      bool first_pairing = (dia.sign(ci) > 0) == oriented;
      auto unite = [&](int p, int q) {
        int rp = find(eidx.at(p)), rq = find(eidx.at(q));
        if (rp != rq) parent[rp] = rq;
      };
      if (first_pairing) {  // {(a,b),(c,d)}
        unite(a, b);
        unite(c, d);
      } else {  // {(a,d),(b,c)}
        unite(a, d);
        unite(b, c);
      }
    }
    int circles = 0;
    for (size_t i = 0; i < m; ++i) circles += find(static_cast<int>(i)) == static_cast<int>(i);
    return circles + dia.unknot_components();
  }
};

}  // namespace detail

// Circle count of one smoothing state (0-crossing components included).
inline int state_circles(const Diagram& dia, const std::vector<int>& choices) {
  if (static_cast<int>(choices.size()) != dia.crossing_count())
    throw Error("ShapeMismatch",
                "ShapeMismatch: one smoothing choice per crossing required");
  return detail::CircleCounter(dia).count(choices);
}

// Value of one coloring under a bracket.
inline Elem beta_value(const Diagram& dia, const Bracket& br,
                       const Coloring& f) {
  const Ring& R = br.ring();
  const Biquandle& bq = br.bq();
  const int n = bq.n();
  const int c = dia.crossing_count();

  auto mismatch = [](const std::string& why) -> Error {
    return Error("ColoringMismatch", "ColoringMismatch: " + why);
  };
  for (int e : dia.edges()) {
    auto it = f.edge_color.find(e);
    if (it == f.edge_color.end())
      throw mismatch("semiarc " + std::to_string(e) + " is uncolored");
    if (it->second < 0 || it->second >= n)
      throw mismatch("color out of range at semiarc " + std::to_string(e));
  }
  if (static_cast<int>(f.ucolors.size()) != dia.unknot_components())
    throw mismatch("expected " + std::to_string(dia.unknot_components()) +
                   " free-loop colors");
  for (int v : f.ucolors)
    if (v < 0 || v >= n) throw mismatch("free-loop color out of range");
  auto color = [&](int e) { return f.edge_color.at(e); };
  for (int ci = 0; ci < c; ++ci) {
    auto [ui, oi, uo, oo] = dia.roles(ci);
    if (!bq.cross_ok(dia.sign(ci), color(ui), color(oi), color(uo), color(oo)))
      throw mismatch("crossing relation fails at crossing " +
                     std::to_string(ci + 1));
  }

  detail::CircleCounter circles(dia);
  std::vector<int> choices(c, 0);
  Elem total = R.zero();
  for (unsigned long long state = 0; state < (1ull << c); ++state) {
    Elem coef = R.one();
    for (int ci = 0; ci < c; ++ci) {
      choices[ci] = static_cast<int>((state >> ci) & 1);
      bool oriented = choices[ci] == 0;
      auto [ui, oi, uo, oo] = dia.roles(ci);
      if (dia.sign(ci) > 0) {
        int x = color(ui), y = color(oo);
        coef = R.mul(coef, oriented ? br.a(x, y) : br.b(x, y));
      } else {
        int x = color(uo), y = color(oi);
        coef = R.mul(coef, oriented ? br.ainv(x, y) : br.binv(x, y));
      }
    }
    Elem term = R.mul(coef, R.pow(br.delta(), circles.count(choices)));
    total = R.add(total, term);
  }
  return R.mul(R.pow(br.w(), dia.negative_count() - dia.positive_count()),
               total);
}

// Multiset of beta values over all colorings.
inline InvariantValue invariant(const Diagram& dia, const Bracket& br) {
  std::vector<Elem> vals;
  for (const Coloring& f : colorings(br.bq(), dia))
    vals.push_back(beta_value(dia, br, f));
  const Ring& R = br.ring();
  std::sort(vals.begin(), vals.end(),
            [&](const Elem& a, const Elem& b) { return R.less(a, b); });
  InvariantValue out{R, {}, static_cast<long long>(vals.size())};
  for (const Elem& v : vals) {
    if (!out.values.empty() && out.values.back().first == v)
      ++out.values.back().second;
    else
      out.values.push_back({v, 1});
  }
  return out;
}

// Formal polynomial in u with ring-element exponents: value r with
// multiplicity m prints as "mu^r"; exponent 1 prints "u", exponent 0
// contributes the bare multiplicity, composite exponents are braced.
inline std::string polynomial_string(const InvariantValue& v) {
  if (v.values.empty()) return "0";
  std::string out;
  for (const auto& [e, m] : v.values) {
    std::string fmt = v.ring.format(e);
    std::string term;
    if (fmt == "0") {
      term = std::to_string(m);
    } else {
      std::string u;
      if (fmt == "1")
        u = "u";
      else if (fmt.find('+') != std::string::npos ||
               fmt.find('-') != std::string::npos)
        u = "u^{" + fmt + "}";
      else
        u = "u^" + fmt;
      term = (m == 1 ? "" : std::to_string(m)) + u;
    }
    out += (out.empty() ? "" : "+") + term;
  }
  return out;
}

// Expanded multiset, e.g. "{3,3,4,4}".
inline std::string multiset_string(const InvariantValue& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [e, m] : v.values)
    for (long long i = 0; i < m; ++i) {
      if (!first) out += ",";
      out += v.ring.format(e);
      first = false;
    }
  return out + "}";
}

// Grouped multiset, e.g. "{2×1+t, 2×t+t^2}".
inline std::string compressed_multiset_string(const InvariantValue& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [e, m] : v.values) {
    if (!first) out += ", ";
    out += std::to_string(m) + "×" + v.ring.format(e);
    first = false;
  }
  return out + "}";
}

// Specialization u = 1 (every ring element maps to 1): the total
// multiplicity, i.e. the counting invariant.
inline long long evaluate_at_u1(const InvariantValue& v) { return v.count; }

}  // namespace bbrack
