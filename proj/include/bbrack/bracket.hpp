// Biquandle brackets: pairs of n×n unit matrices (A, B) over a commutative
// ring, together with the derived smoothing weight δ and writhe factor w,
// satisfying the skein axioms that make the colored state sum an invariant.
//
// Axioms, for all x, y, z (◁ = under-action, ◁̄ = over-action):
//   (i)  δ·A[x][x] + B[x][x] = w  and  δ·A[x][x]⁻¹ + B[x][x]⁻¹ = w⁻¹
//   (ii) δ = −A[x][y]·B[x][y]⁻¹ − A[x][y]⁻¹·B[x][y]   (one common value)
//   (iii) five equations per triple; writing the left-hand slot indices
//        (x,y), (y,z), (x◁y, z◁̄y) and right-hand slot indices
//        (x,z), (y◁̄x, z◁̄x), (x◁z, y◁z):
//        1. AAA = AAA          2. ABB = BBA          3. BAB = BAB
//        4. AAB = ABA + AAB' + δ·ABB + BBB
//        5. BAA + ABA' + δ·BBA + BBB = BAA
//        (primes mark the mixed B placement; see yb_table below.)
#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bbrack/biquandle.hpp"
#include "bbrack/ring.hpp"

namespace bbrack {

using Matrix = std::vector<std::vector<Elem>>;

namespace detail {

inline void check_square(const Matrix& M, int n, const char* label) {
  if (static_cast<int>(M.size()) != n)
    throw Error("ShapeMismatch", std::string("ShapeMismatch: ") + label +
                                     " must have " + std::to_string(n) +
                                     " rows");
  for (auto& row : M)
    if (static_cast<int>(row.size()) != n)
      throw Error("ShapeMismatch", std::string("ShapeMismatch: ") + label +
                                       " must have " + std::to_string(n) +
                                       " columns per row");
}

}  // namespace detail

class Bracket {
 public:
  Bracket(Ring ring, Biquandle bq, Matrix A, Matrix B, std::string name = "")
      : ring_(std::move(ring)),
        bq_(std::move(bq)),
        A_(std::move(A)),
        B_(std::move(B)),
        name_(std::move(name)) {
    const int n = bq_.n();
    detail::check_square(A_, n, "A");
    detail::check_square(B_, n, "B");
    Ainv_.assign(n, std::vector<Elem>(n));
    Binv_.assign(n, std::vector<Elem>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Ainv_[x][y] = ring_.inv(A_[x][y]);
        Binv_[x][y] = ring_.inv(B_[x][y]);
      }
    delta_ = ring_.sub(ring_.neg(ring_.mul(A_[0][0], Binv_[0][0])),
                       ring_.mul(Ainv_[0][0], B_[0][0]));
    w_ = ring_.add(ring_.mul(delta_, A_[0][0]), B_[0][0]);
  }

  const Ring& ring() const { return ring_; }
  const Biquandle& bq() const { return bq_; }
  const std::string& name() const { return name_; }
  void set_name(std::string nm) { name_ = std::move(nm); }
  int n() const { return bq_.n(); }
  const Matrix& A() const { return A_; }
  const Matrix& B() const { return B_; }
  const Elem& a(int x, int y) const { return A_[x][y]; }
  const Elem& b(int x, int y) const { return B_[x][y]; }
  const Elem& ainv(int x, int y) const { return Ainv_[x][y]; }
  const Elem& binv(int x, int y) const { return Binv_[x][y]; }
  const Elem& delta() const { return delta_; }
  const Elem& w() const { return w_; }

  // Row-major [A-row | B-row] code listing; finite rings only.  The
  // canonical order on brackets is lexicographic on this encoding.
  std::vector<long long> encode() const {
    std::vector<long long> out;
    out.reserve(2 * A_.size() * A_.size());
    for (size_t x = 0; x < A_.size(); ++x) {
      for (auto& v : A_[x]) out.push_back(v.code);
      for (auto& v : B_[x]) out.push_back(v.code);
    }
    return out;
  }

 private:
  Ring ring_;
  Biquandle bq_;
  Matrix A_, B_, Ainv_, Binv_;
  Elem delta_, w_;
  std::string name_;
};

namespace detail {

struct YBTerm {
  bool with_delta;
  std::array<int, 3> which;  // per slot: 0 picks A, 1 picks B
};
struct YBEquation {
  std::vector<YBTerm> lhs, rhs;
};

inline const std::array<YBEquation, 5>& yb_table() {
  static const std::array<YBEquation, 5> table = {{
      {{{false, {0, 0, 0}}}, {{false, {0, 0, 0}}}},
      {{{false, {0, 1, 1}}}, {{false, {1, 1, 0}}}},
      {{{false, {1, 0, 1}}}, {{false, {1, 0, 1}}}},
      {{{false, {0, 0, 1}}},
       {{false, {0, 1, 0}},
        {false, {0, 0, 1}},
        {true, {0, 1, 1}},
        {false, {1, 1, 1}}}},
      {{{false, {1, 0, 0}},
        {false, {0, 1, 0}},
        {true, {1, 1, 0}},
        {false, {1, 1, 1}}},
       {{false, {1, 0, 0}}}},
  }};
  return table;
}

using SlotIdx = std::array<std::pair<int, int>, 3>;

inline SlotIdx yb_lhs_idx(const Biquandle& bq, int x, int y, int z) {
  return {{{x, y}, {y, z}, {bq.under(x, y), bq.over(z, y)}}};
}
inline SlotIdx yb_rhs_idx(const Biquandle& bq, int x, int y, int z) {
  return {{{x, z},
           {bq.over(y, x), bq.over(z, x)},
           {bq.under(x, z), bq.under(y, z)}}};
}

inline Elem yb_eval_side(const Ring& R, const std::vector<YBTerm>& terms,
                         const SlotIdx& idx, const Matrix& A, const Matrix& B,
                         const Elem& delta) {
  Elem total = R.zero();
  for (const auto& t : terms) {
    Elem prod = R.one();
    for (int s = 0; s < 3; ++s) {
      auto [i, j] = idx[s];
      prod = R.mul(prod, t.which[s] == 0 ? A[i][j] : B[i][j]);
    }
    if (t.with_delta) prod = R.mul(prod, delta);
    total = R.add(total, prod);
  }
  return total;
}

// 0 if all five equations hold at (x,y,z), else the first failing equation.
inline int yb_check_triple(const Ring& R, const Biquandle& bq, const Matrix& A,
                           const Matrix& B, const Elem& delta, int x, int y,
                           int z) {
  SlotIdx li = yb_lhs_idx(bq, x, y, z);
  SlotIdx ri = yb_rhs_idx(bq, x, y, z);
  const auto& table = yb_table();
  for (int eq = 0; eq < 5; ++eq) {
    Elem l = yb_eval_side(R, table[eq].lhs, li, A, B, delta);
    Elem r = yb_eval_side(R, table[eq].rhs, ri, A, B, delta);
    if (!(l == r)) return eq + 1;
  }
  return 0;
}

}  // namespace detail

// Full axiom check on raw candidate matrices.  Returns std::nullopt when
// (A, B) defines a bracket, else a description of the first failure in
// the order: unit entries, axiom (ii), axiom (i), axiom (iii).
inline std::optional<std::string> verify_bracket(const Ring& R,
                                                 const Biquandle& bq,
                                                 const Matrix& A,
                                                 const Matrix& B) {
  const int n = bq.n();
  detail::check_square(A, n, "A");
  detail::check_square(B, n, "B");
  for (const Matrix* M : {&A, &B})
    for (auto& row : *M)
      for (auto& v : row)
        if (!R.is_unit(v)) return "NonUnit";
  Elem delta = R.sub(R.neg(R.mul(A[0][0], R.inv(B[0][0]))),
                     R.mul(R.inv(A[0][0]), B[0][0]));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Elem dxy = R.sub(R.neg(R.mul(A[x][y], R.inv(B[x][y]))),
                       R.mul(R.inv(A[x][y]), B[x][y]));
      if (!(dxy == delta))
        return "DeltaInconsistent at (" + std::to_string(x + 1) + "," +
               std::to_string(y + 1) + ")";
    }
  Elem w = R.add(R.mul(delta, A[0][0]), B[0][0]);
  if (!R.is_unit(w)) return "KinkCondition (w not a unit)";
  Elem winv = R.inv(w);
  for (int x = 0; x < n; ++x) {
    if (!(R.add(R.mul(delta, A[x][x]), B[x][x]) == w))
      return "KinkCondition at x=" + std::to_string(x + 1);
    if (!(R.add(R.mul(delta, R.inv(A[x][x])), R.inv(B[x][x])) == winv))
      return "KinkCondition (inverse) at x=" + std::to_string(x + 1);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int eq = detail::yb_check_triple(R, bq, A, B, delta, x, y, z);
        if (eq)
          return "YangBaxter eq " + std::to_string(eq) + " at (" +
                 std::to_string(x + 1) + "," + std::to_string(y + 1) + "," +
                 std::to_string(z + 1) + ")";
      }
  return std::nullopt;
}

inline std::optional<std::string> verify_bracket(const Bracket& br) {
  return verify_bracket(br.ring(), br.bq(), br.A(), br.B());
}

// Construct and fully validate; throws InvalidBracket carrying the
// verify_bracket failure description.
inline Bracket make_bracket(const Ring& R, const Biquandle& bq,
                            const Matrix& A, const Matrix& B,
                            std::string name = "") {
  if (auto fail = verify_bracket(R, bq, A, B))
    throw Error("InvalidBracket", "InvalidBracket: " + *fail);
  return Bracket(R, bq, A, B, std::move(name));
}

// Four necessary conditions for quandle brackets; not sufficient.
// Returns std::nullopt on pass, else the first violated condition.
inline std::optional<std::string> mixed_cocycle_check(const Ring& R,
                                                      const Biquandle& bq,
                                                      const Matrix& A,
                                                      const Matrix& B) {
  if (!bq.is_quandle())
    throw Error("NotQuandle",
                "NotQuandle: mixed cocycle conditions require a quandle");
  const int n = bq.n();
  detail::check_square(A, n, "A");
  detail::check_square(B, n, "B");
  auto at = [&](int x, int y, int z) {
    return " at (" + std::to_string(x + 1) + "," + std::to_string(y + 1) +
           "," + std::to_string(z + 1) + ")";
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int xy = bq.under(x, y), xz = bq.under(x, z), yz = bq.under(y, z);
        if (!(R.mul(A[x][y], A[xy][z]) == R.mul(A[x][z], A[xz][yz])))
          return "(i)" + at(x, y, z);
        if (!(R.mul(A[x][y], B[xy][z]) == R.mul(B[x][z], A[xz][yz])))
          return "(ii)" + at(x, y, z);
        if (!(R.mul(B[x][y], A[xy][z]) == R.mul(A[x][z], B[xz][yz])))
          return "(iii)" + at(x, y, z);
        if (!(R.mul(B[x][y], B[xy][z]) == R.mul(B[x][z], B[xz][yz])))
          return "(iv)" + at(x, y, z);
      }
  return std::nullopt;
}

inline std::optional<std::string> mixed_cocycle_check(const Bracket& br) {
  return mixed_cocycle_check(br.ring(), br.bq(), br.A(), br.B());
}

// ------------------------------------------------------------ constructors

// One-element biquandle over the Laurent ring with A=[A], B=[A^-1];
// delta = -A^2-A^-2 and w = -A^3 follow from the derivation rules.
inline Bracket kauffman_bracket_spec() {
  Ring R = Ring::laurent();
  Biquandle one = Biquandle::one_element();
  Matrix A = {{R.parse("A")}};
  Matrix B = {{R.parse("A^-1")}};
  return Bracket(R, one, A, B, "kauffman");
}

// A == t and B == t^-1 everywhere; delta = -t^2-t^-2, w = -t^3.
inline Bracket constant_bracket(const Ring& R, const Biquandle& bq,
                                const Elem& t) {
  const int n = bq.n();
  Matrix A(n, std::vector<Elem>(n, t));
  Matrix B(n, std::vector<Elem>(n, R.inv(t)));
  return Bracket(R, bq, A, B, "const-t" + R.format(t));
}

namespace detail {

// gamma(x,y) = C(x)·C(y)^-1·C(x◁y)^-1·C(y◁̄x); gamma(x,x) = 1.
inline Elem coboundary_gamma(const Ring& R, const Biquandle& bq,
                             const std::vector<Elem>& C, int x, int y) {
  Elem g = R.mul(C[x], R.inv(C[y]));
  g = R.mul(g, R.inv(C[bq.under(x, y)]));
  return R.mul(g, C[bq.over(y, x)]);
}

inline void check_unit_vector(const Ring& R, const std::vector<Elem>& C,
                              int n) {
  if (static_cast<int>(C.size()) != n)
    throw Error("ShapeMismatch", "ShapeMismatch: C must have " +
                                     std::to_string(n) + " entries");
  for (auto& v : C)
    if (!R.is_unit(v))
      throw Error("NonUnit", "NonUnit: C entries must be units");
}

}  // namespace detail

// A = B = the coboundary of C; always a bracket with delta = -2, w = -1.
inline Bracket coboundary_bracket(const Ring& R, const Biquandle& bq,
                                  const std::vector<Elem>& C) {
  const int n = bq.n();
  detail::check_unit_vector(R, C, n);
  Matrix A(n, std::vector<Elem>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      A[x][y] = detail::coboundary_gamma(R, bq, C, x, y);
  return Bracket(R, bq, A, A, "coboundary");
}

// A = B = psi where psi is a unit-valued 2-cocycle: psi(x,x) = 1 and
// psi(x,y)·psi(y,z)·psi(x◁y,z◁̄y) = psi(x,z)·psi(y◁̄x,z◁̄x)·psi(x◁z,y◁z).
inline Bracket cocycle_bracket(const Ring& R, const Biquandle& bq,
                               const Matrix& psi) {
  const int n = bq.n();
  detail::check_square(psi, n, "psi");
  for (auto& row : psi)
    for (auto& v : row)
      if (!R.is_unit(v))
        throw Error("NonUnit", "NonUnit: psi entries must be units");
  for (int x = 0; x < n; ++x)
    if (!(psi[x][x] == R.one()))
      throw Error("NotCocycle", "NotCocycle: psi(x,x) != 1 at x=" +
                                    std::to_string(x + 1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        auto li = detail::yb_lhs_idx(bq, x, y, z);
        auto ri = detail::yb_rhs_idx(bq, x, y, z);
        Elem l = R.one(), r = R.one();
        for (int s = 0; s < 3; ++s) {
          l = R.mul(l, psi[li[s].first][li[s].second]);
          r = R.mul(r, psi[ri[s].first][ri[s].second]);
        }
        if (!(l == r))
          throw Error("NotCocycle",
                      "NotCocycle: cocycle condition fails at (" +
                          std::to_string(x + 1) + "," + std::to_string(y + 1) +
                          "," + std::to_string(z + 1) + ")");
      }
  return Bracket(R, bq, psi, psi, "cocycle");
}

// ------------------------------------------------------------- transforms

// (alpha·A, alpha·B): same delta, w scales by alpha.
inline Bracket scalar_transform(const Bracket& br, const Elem& alpha) {
  const Ring& R = br.ring();
  if (!R.is_unit(alpha))
    throw Error("NonUnit", "NonUnit: alpha must be a unit");
  const int n = br.n();
  Matrix A(n, std::vector<Elem>(n)), B(n, std::vector<Elem>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      A[x][y] = R.mul(alpha, br.a(x, y));
      B[x][y] = R.mul(alpha, br.b(x, y));
    }
  return Bracket(R, br.bq(), A, B, br.name());
}

// Entrywise multiplication of A and B by the coboundary of C.
inline Bracket c_transform(const Bracket& br, const std::vector<Elem>& C) {
  const Ring& R = br.ring();
  const int n = br.n();
  detail::check_unit_vector(R, C, n);
  Matrix A(n, std::vector<Elem>(n)), B(n, std::vector<Elem>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Elem g = detail::coboundary_gamma(R, br.bq(), C, x, y);
      A[x][y] = R.mul(g, br.a(x, y));
      B[x][y] = R.mul(g, br.b(x, y));
    }
  return Bracket(R, br.bq(), A, B, br.name());
}

// -------------------------------------------------------------- R-matrices

inline Matrix mat_identity(const Ring& R, int m) {
  Matrix I(m, std::vector<Elem>(m, R.zero()));
  for (int i = 0; i < m; ++i) I[i][i] = R.one();
  return I;
}

inline Matrix mat_mul(const Ring& R, const Matrix& P, const Matrix& Q) {
  const int m = static_cast<int>(P.size());
  const int k = static_cast<int>(Q.size());
  const int l = static_cast<int>(Q[0].size());
  Matrix out(m, std::vector<Elem>(l, R.zero()));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) {
      if (R.is_zero(P[i][j])) continue;
      for (int c = 0; c < l; ++c)
        out[i][c] = R.add(out[i][c], R.mul(P[i][j], Q[j][c]));
    }
  return out;
}

inline Matrix kron(const Ring& R, const Matrix& P, const Matrix& Q) {
  const int pm = static_cast<int>(P.size());
  const int pn = static_cast<int>(P[0].size());
  const int qm = static_cast<int>(Q.size());
  const int qn = static_cast<int>(Q[0].size());
  Matrix out(pm * qm, std::vector<Elem>(pn * qn, R.zero()));
  for (int i = 0; i < pm; ++i)
    for (int j = 0; j < pn; ++j)
      for (int a = 0; a < qm; ++a)
        for (int b = 0; b < qn; ++b)
          out[i * qm + a][j * qn + b] = R.mul(P[i][j], Q[a][b]);
  return out;
}

struct RMatrices {
  Matrix I;             // 2×2 identity
  std::vector<Elem> N;  // row 4-vector (0, A11, -B11, 0)
  std::vector<Elem> U;  // column 4-vector (0, -B11^-1, A11^-1, 0)
  std::vector<std::vector<Matrix>> X;  // X[x][y] is 4×4
};

// Colored R-matrix family: X[x][y] acts on the 2-strand space with the
// A-smoothing on the diagonal and the B-smoothing on the antidiagonal
// block, corner entry A[x][y] - A[x][y]·B[x][y]^2.
inline RMatrices to_rmatrices(const Bracket& br) {
  const Ring& R = br.ring();
  const int n = br.n();
  RMatrices out;
  out.I = mat_identity(R, 2);
  Elem z = R.zero();
  out.N = {z, br.a(0, 0), R.neg(br.b(0, 0)), z};
  out.U = {z, R.neg(br.binv(0, 0)), br.ainv(0, 0), z};
  out.X.assign(n, std::vector<Matrix>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Elem& a = br.a(x, y);
      const Elem& b = br.b(x, y);
      Elem corner = R.sub(a, R.mul(a, R.mul(b, b)));
      out.X[x][y] = {{a, z, z, z},
                     {z, z, b, z},
                     {z, b, corner, z},
                     {z, z, z, a}};
    }
  return out;
}

// True iff M satisfies the uncolored Yang-Baxter equation
// (M⊗I)(I⊗M)(M⊗I) = (I⊗M)(M⊗I)(I⊗M), where M acts on V⊗V and the
// identity on one strand; M must be k²×k² for k = dim V.
inline bool is_classical_rmatrix(const Ring& R, const Matrix& M) {
  const int m = static_cast<int>(M.size());
  detail::check_square(M, m, "M");
  int k = 0;
  while ((k + 1) * (k + 1) <= m) ++k;
  if (k * k != m)
    throw Error("ShapeMismatch",
                "ShapeMismatch: matrix side must be a perfect square");
  Matrix I = mat_identity(R, k);
  Matrix MI = kron(R, M, I);
  Matrix IM = kron(R, I, M);
  Matrix lhs = mat_mul(R, mat_mul(R, MI, IM), MI);
  Matrix rhs = mat_mul(R, mat_mul(R, IM, MI), IM);
  return lhs == rhs;
}

// ------------------------------------------------------------ file format

// Bracket file: a `ring: <spec>` header, an optional `biquandle: <name>`
// header, then n lines of 2n element strings (the n×2n block [A|B]).
struct BracketFile {
  Ring ring;
  std::string biquandle_name;  // empty when the header is absent
  Matrix A, B;
};

inline BracketFile parse_bracket_text(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      size_t a = line.find_first_not_of(" \t\r");
      if (a == std::string::npos) continue;
      size_t b = line.find_last_not_of(" \t\r");
      line = line.substr(a, b - a + 1);
      if (line.empty() || line[0] == '#') continue;
      lines.push_back(line);
    }
  }
  if (lines.empty() || lines[0].rfind("ring:", 0) != 0)
    throw Error("ParseError",
                "ParseError: bracket file must start with 'ring: <spec>'");
  auto strip = [](std::string s) {
    size_t a = s.find_first_not_of(" \t");
    return a == std::string::npos ? std::string() : s.substr(a);
  };
  BracketFile out{Ring::parse_spec(strip(lines[0].substr(5))), "", {}, {}};
  size_t row0 = 1;
  if (lines.size() > 1 && lines[1].rfind("biquandle:", 0) == 0) {
    out.biquandle_name = strip(lines[1].substr(10));
    row0 = 2;
  }
  const int n = static_cast<int>(lines.size() - row0);
  if (n <= 0) throw Error("ParseError", "ParseError: bracket file has no rows");
  for (size_t li = row0; li < lines.size(); ++li) {
    std::istringstream row(lines[li]);
    std::vector<Elem> vals;
    std::string tok;
    while (row >> tok) vals.push_back(out.ring.parse(tok));
    if (static_cast<int>(vals.size()) != 2 * n)
      throw Error("ParseError",
                  "ParseError: bracket row " + std::to_string(li - row0 + 1) +
                      " has " + std::to_string(vals.size()) +
                      " entries (expected " + std::to_string(2 * n) + ")");
    out.A.emplace_back(vals.begin(), vals.begin() + n);
    out.B.emplace_back(vals.begin() + n, vals.end());
  }
  return out;
}

inline std::string bracket_to_text(const Bracket& br,
                                   bool with_biquandle_name = true) {
  std::string s = "ring: " + br.ring().spec_string() + "\n";
  if (with_biquandle_name && !br.bq().name().empty())
    s += "biquandle: " + br.bq().name() + "\n";
  for (int x = 0; x < br.n(); ++x) {
    std::string row;
    for (int y = 0; y < br.n(); ++y)
      row += (row.empty() ? "" : " ") + br.ring().format(br.a(x, y));
    for (int y = 0; y < br.n(); ++y) row += " " + br.ring().format(br.b(x, y));
    s += row + "\n";
  }
  return s;
}

// --------------------------------------------------------------- built-ins

inline Biquandle builtin_biquandle(const std::string& name) {
  if (name == "ca2") {
    Biquandle b = Biquandle::const_action(2, {1, 0});
    b.set_name("ca2");
    return b;
  }
  if (name == "dihedral3") {
    Biquandle b = Biquandle::dihedral(3);
    b.set_name("dihedral3");
    return b;
  }
  if (name == "alexander-z5-t2-r4") {
    Biquandle b = Biquandle::alexander(5, 2, 4);
    b.set_name("alexander-z5-t2-r4");
    return b;
  }
  throw Error("UnknownName",
              "UnknownName: no built-in biquandle named '" + name + "'");
}

inline std::vector<std::string> builtin_biquandle_names() {
  return {"ca2", "dihedral3", "alexander-z5-t2-r4"};
}

namespace detail {

inline Matrix codes_to_matrix(const Ring& R,
                              const std::vector<std::vector<long long>>& M) {
  Matrix out;
  for (auto& row : M) {
    std::vector<Elem> r;
    for (long long c : row) r.push_back(R.from_code(c));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

inline Bracket builtin_bracket(const std::string& name) {
  if (name == "ex1") {
    Ring R = Ring::modular(5);
    return Bracket(R, builtin_biquandle("ca2"),
                   detail::codes_to_matrix(R, {{1, 3}, {4, 1}}),
                   detail::codes_to_matrix(R, {{4, 2}, {1, 4}}), "ex1");
  }
  if (name == "f8") {
    Ring R = Ring::parse_spec("GF(2^3;1+t+t^3)");
    return Bracket(R, builtin_biquandle("ca2"),
                   detail::codes_to_matrix(R, {{1, 3}, {5, 1}}),
                   detail::codes_to_matrix(R, {{2, 6}, {1, 2}}), "f8");
  }
  if (name == "z11-dihedral") {
    Ring R = Ring::modular(11);
    return Bracket(R, builtin_biquandle("dihedral3"),
                   detail::codes_to_matrix(R, {{1, 7, 7}, {1, 1, 8}, {1, 8, 1}}),
                   detail::codes_to_matrix(R, {{7, 5, 5}, {7, 7, 1}, {7, 1, 7}}),
                   "z11-dihedral");
  }
  throw Error("UnknownName",
              "UnknownName: no built-in bracket named '" + name + "'");
}

inline std::vector<std::string> builtin_bracket_names() {
  return {"ex1", "f8", "z11-dihedral"};
}

}  // namespace bbrack
