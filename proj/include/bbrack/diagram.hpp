// Oriented classical link diagrams from PD codes.
//
// A crossing X[a,b,c,d] lists its four semiarc labels counterclockwise
// starting from the incoming under-strand; the under-strand runs a -> c.
// The crossing is positive when the over-strand enters at d (so its role
// tuple (under-in, over-in, under-out, over-out) is (a,d,c,b)) and negative
// when it enters at b (roles (a,b,c,d)).  Zero-crossing unknot components
// are written as standalone `U` tokens.
#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "bbrack/catalog_data.hpp"
#include "bbrack/ring.hpp"

namespace bbrack {

class Diagram {
 public:
  using Crossing = std::array<int, 4>;

  explicit Diagram(std::vector<Crossing> crossings, int nU = 0)
      : crossings_(std::move(crossings)), nU_(nU) {
    orient();
  }

  static Diagram parse(const std::string& text) {
    std::vector<Crossing> crossings;
    int nU = 0;
    size_t i = 0;
    auto skip = [&] {
      while (i < text.size() &&
             (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' ||
              text[i] == '\r'))
        ++i;
    };
    auto fail = [&](const std::string& what) -> void {
      throw Error("MalformedPD", "MalformedPD: " + what + " at position " +
                                     std::to_string(i));
    };
    skip();
    while (i < text.size()) {
      if (text[i] == 'U') {
        ++i;
        ++nU;
        skip();
        continue;
      }
      if (text[i] == 'V')
        throw Error("VirtualUnsupported",
                    "VirtualUnsupported: virtual crossings are not supported");
      if (text[i] != 'X') fail("expected 'X[' or 'U'");
      ++i;
      if (i >= text.size() || text[i] != '[') fail("expected '['");
      ++i;
      Crossing cr{};
      for (int slot = 0; slot < 4; ++slot) {
        skip();
        size_t start = i;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
          ++i;
        if (i == start) fail("expected semiarc label");
        cr[slot] = std::stoi(text.substr(start, i - start));
        skip();
        if (slot < 3) {
          if (i >= text.size() || text[i] != ',') fail("expected ','");
          ++i;
        }
      }
      if (i >= text.size() || text[i] != ']') fail("expected ']'");
      ++i;
      crossings.push_back(cr);
      skip();
    }
    return Diagram(std::move(crossings), nU);
  }

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int unknot_components() const { return nU_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  int sign(int ci) const { return sign_[ci]; }
  int writhe() const {
    int w = 0;
    for (int s : sign_) w += s;
    return w;
  }
  int positive_count() const {
    int p = 0;
    for (int s : sign_) p += s > 0;
    return p;
  }
  int negative_count() const { return crossing_count() - positive_count(); }
  int component_count() const {
    return static_cast<int>(comps_.size()) + nU_;
  }
  const std::vector<std::vector<int>>& components() const { return comps_; }
  // All semiarc labels in ascending order.
  const std::vector<int>& edges() const { return edges_; }

  // Role tuple (under-in, over-in, under-out, over-out) of crossing ci.
  std::array<int, 4> roles(int ci) const {
    auto [a, b, c, d] = crossings_[ci];
    if (sign_[ci] > 0) return {a, d, c, b};
    return {a, b, c, d};
  }

  // Successor of a semiarc along its component, in orientation order.
  int succ(int edge) const { return succ_.at(edge); }

  Diagram mirror() const {
    std::vector<Crossing> out;
    out.reserve(crossings_.size());
    for (int ci = 0; ci < crossing_count(); ++ci) {
      auto [a, b, c, d] = crossings_[ci];
      // Swap over/under: restart the counterclockwise listing at the
      // incoming over-strand, which becomes the incoming under-strand.
      if (sign_[ci] > 0)
        out.push_back({d, a, b, c});
      else
        out.push_back({b, c, d, a});
    }
    return Diagram(std::move(out), nU_);
  }

  std::string pd_string() const {
    std::string s;
    for (auto& [a, b, c, d] : crossings_) {
      if (!s.empty()) s += " ";
      s += "X[" + std::to_string(a) + "," + std::to_string(b) + "," +
           std::to_string(c) + "," + std::to_string(d) + "]";
    }
    for (int i = 0; i < nU_; ++i) s += (s.empty() ? "U" : " U");
    return s;
  }

  static Diagram catalog_lookup(const std::string& name) {
    for (auto& e : kCatalog)
      if (e.name == name) return parse(std::string(e.pd));
    throw Error("UnknownName",
                "UnknownName: no catalog entry named '" + name + "'");
  }

  static std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (auto& e : kCatalog) out.emplace_back(e.name);
    return out;
  }

 private:
  std::vector<Crossing> crossings_;
  int nU_ = 0;
  std::vector<int> sign_;
  std::vector<int> edges_;
  std::map<int, int> succ_;
  std::vector<std::vector<int>> comps_;

  // Infer in/out roles for every (crossing, slot), derive signs, successor
  // links and components.  Slots a..d are 0..3; a is always in, c out.
  void orient() {
    const int C = crossing_count();
    std::map<int, std::vector<std::pair<int, int>>> occ;  // edge -> (ci,slot)
    for (int ci = 0; ci < C; ++ci)
      for (int slot = 0; slot < 4; ++slot)
        occ[crossings_[ci][slot]].push_back({ci, slot});
    for (auto& [e, lst] : occ)
      if (lst.size() != 2)
        throw Error("InconsistentPD",
                    "InconsistentPD: semiarc " + std::to_string(e) +
                        " appears " + std::to_string(lst.size()) +
                        " times (expected 2)");
    // role: 0 unknown, 1 in, 2 out
    std::vector<std::array<int, 4>> role(C, {0, 0, 0, 0});
    auto setrole = [&](int ci, int slot, int r) {
      if (role[ci][slot] != 0) {
        if (role[ci][slot] != r)
          throw Error("InconsistentPD",
                      "InconsistentPD: conflicting orientation at crossing " +
                          std::to_string(ci + 1));
        return false;
      }
      role[ci][slot] = r;
      return true;
    };
    for (int ci = 0; ci < C; ++ci) {
      setrole(ci, 0, 1);
      setrole(ci, 2, 2);
    }
    auto propagate = [&] {
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto& [e, lst] : occ) {
          int r0 = role[lst[0].first][lst[0].second];
          int r1 = role[lst[1].first][lst[1].second];
          if (r0 && !r1)
            changed |= setrole(lst[1].first, lst[1].second, r0 == 2 ? 1 : 2);
          else if (r1 && !r0)
            changed |= setrole(lst[0].first, lst[0].second, r1 == 2 ? 1 : 2);
          else if (r0 && r1 && r0 == r1)
            throw Error("InconsistentPD",
                        "InconsistentPD: conflicting orientation at crossing " +
                            std::to_string(lst[1].first + 1));
        }
        for (int ci = 0; ci < C; ++ci) {
          int rb = role[ci][1], rd = role[ci][3];
          if (rb && !rd)
            changed |= setrole(ci, 3, rb == 2 ? 1 : 2);
          else if (rd && !rb)
            changed |= setrole(ci, 1, rd == 2 ? 1 : 2);
          else if (rb && rd && rb == rd)
            throw Error("InconsistentPD",
                        "InconsistentPD: conflicting orientation at crossing " +
                            std::to_string(ci + 1));
        }
      }
    };
    propagate();
    // Residual ambiguity (components passing only over): the smallest
    // pending semiarc is declared 'in' at its first occurrence.
    while (true) {
      int pending = -1;
      for (auto& [e, lst] : occ)
        if (role[lst[0].first][lst[0].second] == 0 &&
            role[lst[1].first][lst[1].second] == 0) {
          pending = e;
          break;  // occ is sorted by edge label
        }
      if (pending < 0) break;
      setrole(occ[pending][0].first, occ[pending][0].second, 1);
      propagate();
    }
    sign_.assign(C, 0);
    succ_.clear();
    for (int ci = 0; ci < C; ++ci) {
      auto [a, b, c, d] = crossings_[ci];
      succ_[a] = c;
      if (role[ci][3] == 1) {
        sign_[ci] = +1;
        succ_[d] = b;
      } else {
        sign_[ci] = -1;
        succ_[b] = d;
      }
    }
    edges_.clear();
    for (auto& [e, lst] : occ) edges_.push_back(e);
    comps_.clear();
    std::vector<int> seen;
    for (int e : edges_) {
      if (std::find(seen.begin(), seen.end(), e) != seen.end()) continue;
      std::vector<int> comp{e};
      seen.push_back(e);
      for (int f = succ_[e]; f != e; f = succ_[f]) {
        comp.push_back(f);
        seen.push_back(f);
      }
      comps_.push_back(std::move(comp));
    }
  }
};

}  // namespace bbrack
