// Finite biquandles as operation tables, with axiom verification and the
// standard constructions (constant action, Alexander, dihedral quandle).
//
// Tables are 0-indexed internally and 1-indexed in all text I/O:
// under[x][y] = x <| y (the color of a strand passing under y),
// over[x][y]  = x <|bar y (the color of a strand passing over y).
//
// The crossing relation is the sideways map S(x, y) = (y <|bar x, x <| y)
// applied across the crossing: at a positive crossing
// S(under-in, over-out) = (over-in, under-out); at a negative crossing
// S(under-out, over-in) = (over-out, under-in).
#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bbrack/ring.hpp"

namespace bbrack {

class Biquandle {
 public:
  Biquandle(std::vector<std::vector<int>> under,
            std::vector<std::vector<int>> over, std::string name = "")
      : n_(static_cast<int>(under.size())),
        under_(std::move(under)),
        over_(std::move(over)),
        name_(std::move(name)) {
    if (static_cast<int>(over_.size()) != n_)
      throw Error("AxiomViolation",
                  "AxiomViolation: under and over tables differ in size");
    for (auto* tab : {&under_, &over_})
      for (auto& row : *tab) {
        if (static_cast<int>(row.size()) != n_)
          throw Error("AxiomViolation",
                      "AxiomViolation: table row of wrong length");
        for (int v : row)
          if (v < 0 || v >= n_)
            throw Error("AxiomViolation",
                        "AxiomViolation: table entry out of range 1.." +
                            std::to_string(n_));
      }
    build_inverses();
  }

  int n() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }
  int under(int x, int y) const { return under_[x][y]; }
  int over(int x, int y) const { return over_[x][y]; }
  const std::vector<std::vector<int>>& under_table() const { return under_; }
  const std::vector<std::vector<int>>& over_table() const { return over_; }

  bool operator==(const Biquandle& o) const {
    return under_ == o.under_ && over_ == o.over_;
  }

  // Sideways map S(x, y) = (y <|bar x, x <| y).
  std::pair<int, int> S(int x, int y) const {
    return {over_[y][x], under_[x][y]};
  }

  // Crossing relation at the given sign for the semiarc colors
  // (under-in, over-in, under-out, over-out).
  bool cross_ok(int sign, int ui, int oi, int uo, int oo) const {
    if (sign > 0) return S(ui, oo) == std::make_pair(oi, uo);
    return S(uo, oi) == std::make_pair(oo, ui);
  }

  // (under-out, over-out) from the input colors.
  std::pair<int, int> cross_fwd(int sign, int ui, int oi) const {
    if (sign > 0) {
      int oo = ainv_[ui][oi];  // solve oo <|bar ui = oi
      return {under_[ui][oo], oo};
    }
    int uo = binv_[oi][ui];  // solve uo <| oi = ui
    return {uo, over_[oi][uo]};
  }

  // (under-in, over-in) from the output colors.
  std::pair<int, int> cross_bwd(int sign, int uo, int oo) const {
    if (sign > 0) {
      int ui = binv_[oo][uo];  // solve ui <| oo = uo
      return {ui, over_[oo][ui]};
    }
    int oi = ainv_[uo][oo];  // solve oi <|bar uo = oo
    return {under_[uo][oi], oi};
  }

  // Axiom check; returns a violation description or nullopt when valid.
  std::optional<std::string> verify() const {
    for (int x = 0; x < n_; ++x)
      if (under_[x][x] != over_[x][x])
        return "axiom i at x=" + std::to_string(x + 1);
    for (int y = 0; y < n_; ++y) {
      std::vector<int> seen_u(n_, 0), seen_o(n_, 0);
      for (int x = 0; x < n_; ++x) {
        seen_u[under_[x][y]]++;
        seen_o[over_[x][y]]++;
      }
      for (int v = 0; v < n_; ++v) {
        if (seen_u[v] != 1)
          return "axiom ii: beta_" + std::to_string(y + 1) +
                 " not a bijection";
        if (seen_o[v] != 1)
          return "axiom ii: alpha_" + std::to_string(y + 1) +
                 " not a bijection";
      }
    }
    {
      std::vector<int> seen(n_ * n_, 0);
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
          auto [a, b] = S(x, y);
          seen[a * n_ + b]++;
        }
      for (int v : seen)
        if (v != 1) return "axiom ii: S not invertible";
    }
    // Axiom iii (exchange laws): both sides of the all-positive third
    // Reidemeister move must transport every color triple identically.
    auto step = [&](std::array<int, 3> state, int i) {
      int o = state[i], u = state[i + 1];  // left strand goes over
      auto [uo, oo] = cross_fwd(+1, u, o);
      state[i] = uo;
      state[i + 1] = oo;
      return state;
    };
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z) {
          std::array<int, 3> t{x, y, z};
          auto lhs = step(step(step(t, 0), 1), 0);
          auto rhs = step(step(step(t, 1), 0), 1);
          if (lhs != rhs)
            for (int k = 0; k < 3; ++k)
              if (lhs[k] != rhs[k])
                return "axiom iii." + std::to_string(k + 1) + " at (" +
                       std::to_string(x + 1) + "," + std::to_string(y + 1) +
                       "," + std::to_string(z + 1) + ")";
        }
    return std::nullopt;
  }

  // True when x <|bar y = x for all x, y (quandle presented as a biquandle).
  bool is_quandle() const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (over_[x][y] != x) return false;
    return true;
  }

  // ------------------------------------------------------------- file I/O
  // Format: n lines, each with 2n space-separated integers in 1..n; the left
  // n columns are the under table, the right n the over table.
  static Biquandle parse_text(const std::string& text, std::string name = "") {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      std::istringstream ls(line);
      std::vector<int> row;
      long long v;
      while (ls >> v) row.push_back(static_cast<int>(v));
      rows.push_back(std::move(row));
    }
    int n = static_cast<int>(rows.size());
    if (n == 0)
      throw Error("AxiomViolation", "AxiomViolation: empty biquandle table");
    std::vector<std::vector<int>> under(n, std::vector<int>(n)),
        over(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
      if (static_cast<int>(rows[x].size()) != 2 * n)
        throw Error("AxiomViolation",
                    "AxiomViolation: row " + std::to_string(x + 1) + " has " +
                        std::to_string(rows[x].size()) + " entries, expected " +
                        std::to_string(2 * n));
      for (int y = 0; y < n; ++y) {
        under[x][y] = rows[x][y] - 1;
        over[x][y] = rows[x][n + y] - 1;
      }
    }
    return Biquandle(std::move(under), std::move(over), std::move(name));
  }

  std::string to_text() const {
    std::string out;
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y)
        out += (y ? " " : "") + std::to_string(under_[x][y] + 1);
      for (int y = 0; y < n_; ++y)
        out += " " + std::to_string(over_[x][y] + 1);
      out += "\n";
    }
    return out;
  }

  // --------------------------------------------------------- constructors
  // x <| y = x <|bar y = sigma(x) for a permutation sigma (0-indexed).
  static Biquandle const_action(int n, const std::vector<int>& sigma) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) t[x][y] = sigma[x];
    return Biquandle(t, t, "ca" + std::to_string(n));
  }

  // Dihedral quandle: x <| y = 2y - x mod n, x <|bar y = x.
  static Biquandle dihedral(int n) {
    std::vector<std::vector<int>> under(n, std::vector<int>(n)),
        over(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        under[x][y] = ((2 * y - x) % n + n) % n;
        over[x][y] = x;
      }
    return Biquandle(under, over, "dihedral" + std::to_string(n));
  }

  // Alexander biquandle on Z_n: x <| y = tx + (r^-1 - t)y, x <|bar y = r^-1 x,
  // with elements named 1..n (n standing for the class of 0), so index p
  // holds the residue p+1 mod n and the printed table matches that naming.
  static Biquandle alexander(int n, long long t, long long r) {
    Ring zn = Ring::modular(n);
    if (!zn.is_unit(zn.from_int(t)))
      throw Error("NonUnit", "NonUnit: t=" + std::to_string(t) +
                                 " is not a unit of Z" + std::to_string(n));
    if (!zn.is_unit(zn.from_int(r)))
      throw Error("NonUnit", "NonUnit: r=" + std::to_string(r) +
                                 " is not a unit of Z" + std::to_string(n));
    long long rinv = zn.inv(zn.from_int(r)).code;
    auto val = [n](int p) { return (p + 1) % n; };
    auto pos = [n](long long res) {
      return static_cast<int>(((res - 1) % n + n) % n);
    };
    std::vector<std::vector<int>> under(n, std::vector<int>(n)),
        over(n, std::vector<int>(n));
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        long long u = ((t * val(p) + (rinv - t) * val(q)) % n + n) % n;
        under[p][q] = pos(u);
        over[p][q] = pos(((rinv * val(p)) % n + n) % n);
      }
    return Biquandle(under, over,
                     "alexander-z" + std::to_string(n) + "-t" +
                         std::to_string(t) + "-r" + std::to_string(r));
  }

  // Trivial quandle: x <| y = x <|bar y = x.
  static Biquandle trivial(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) t[x][y] = x;
    return Biquandle(t, t, "t" + std::to_string(n));
  }

  static Biquandle one_element() { return trivial(1); }

 private:
  int n_;
  std::vector<std::vector<int>> under_, over_;
  std::string name_;
  // ainv[y][v] = x with over[x][y] == v; binv[y][v] = x with under[x][y] == v.
  std::vector<std::vector<int>> ainv_, binv_;

  void build_inverses() {
    ainv_.assign(n_, std::vector<int>(n_, 0));
    binv_.assign(n_, std::vector<int>(n_, 0));
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        ainv_[y][over_[x][y]] = x;
        binv_[y][under_[x][y]] = x;
      }
  }
};

}  // namespace bbrack
