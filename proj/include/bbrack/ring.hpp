// Commutative coefficient rings for bracket invariants: Z/n, Galois fields
// GF(p^k) presented by an explicit irreducible polynomial, and the Laurent
// ring Z[A, A^-1].  Elements of finite rings are stored as canonical integer
// codes (Galois codes are base-p digit strings read from the constant term
// up); Laurent elements are sparse term lists sorted by exponent.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace bbrack {

// Domain error with a stable machine-readable kind; the message always
// begins with the kind so CLI output is self-describing.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// One ring element.  Finite rings use `code`; the Laurent ring uses `lp`
// (ascending exponents, no zero coefficients).  Within a fixed ring the
// unused field is always default, so default comparison is consistent.
struct Elem {
  long long code = 0;
  std::vector<std::pair<long long, long long>> lp;
  friend bool operator==(const Elem&, const Elem&) = default;
  friend auto operator<=>(const Elem&, const Elem&) = default;
};

class Ring {
 public:
  enum class Kind { Modular, Galois, Laurent };

  static Ring modular(long long n) {
    if (n < 2) throw Error("ParseError", "ParseError: modulus must be >= 2");
    Ring r;
    r.kind_ = Kind::Modular;
    r.n_ = n;
    r.size_ = n;
    r.spec_ = "Z" + std::to_string(n);
    r.build_tables();
    return r;
  }

  // f: coefficient vector of length k+1, ascending exponents, over Z_p.
  static Ring galois(long long p, int k, std::vector<long long> f) {
    Ring r;
    r.kind_ = Kind::Galois;
    r.p_ = p;
    r.k_ = k;
    if (p < 2 || !is_prime(p))
      throw Error("ParseError",
                  "ParseError: GF characteristic " + std::to_string(p) +
                      " is not prime");
    if (k < 1) throw Error("ParseError", "ParseError: GF degree must be >= 1");
    for (auto& c : f) c = ((c % p) + p) % p;
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    if (static_cast<int>(f.size()) != k + 1 || f.back() != 1)
      throw Error("ParseError",
                  "ParseError: GF modulus polynomial must be monic of degree " +
                      std::to_string(k));
    r.f_ = f;
    r.size_ = 1;
    for (int i = 0; i < k; ++i) r.size_ *= p;
    if (!r.irreducible())
      throw Error("ParseError",
                  "ParseError: GF modulus polynomial is reducible");
    r.spec_ = "GF(" + std::to_string(p) + "^" + std::to_string(k) + ";" +
              r.format_poly(f) + ")";
    r.build_tables();
    return r;
  }

  static Ring laurent() {
    Ring r;
    r.kind_ = Kind::Laurent;
    r.spec_ = "Laurent";
    return r;
  }

  // Spec strings: "Zn" (e.g. "Z5"), "GF(p^k;f)" (e.g. "GF(2^3;1+t+t^3)"),
  // "Laurent".
  static Ring parse_spec(const std::string& s) {
    if (s == "Laurent") return laurent();
    if (s.size() > 1 && s[0] == 'Z' &&
        s.find_first_not_of("0123456789", 1) == std::string::npos)
      return modular(std::stoll(s.substr(1)));
    if (s.rfind("GF(", 0) == 0 && s.back() == ')') {
      std::string body = s.substr(3, s.size() - 4);
      auto caret = body.find('^');
      auto semi = body.find(';');
      if (caret == std::string::npos || semi == std::string::npos ||
          caret > semi)
        throw Error("ParseError",
                    "ParseError: expected GF(p^k;f), got '" + s + "'");
      long long p = std::stoll(body.substr(0, caret));
      int k = std::stoi(body.substr(caret + 1, semi - caret - 1));
      std::vector<long long> f =
          parse_poly_text(body.substr(semi + 1), 't', false);
      return galois(p, k, f);
    }
    throw Error("ParseError", "ParseError: unknown ring spec '" + s + "'");
  }

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ != Kind::Laurent; }
  long long size() const { return size_; }
  const std::string& spec_string() const { return spec_; }
  bool operator==(const Ring& o) const { return spec_ == o.spec_; }
  bool operator!=(const Ring& o) const { return spec_ != o.spec_; }

  Elem zero() const { return Elem{}; }
  Elem one() const { return from_int(1); }

  Elem from_code(long long c) const {
    Elem e;
    e.code = c;
    return e;
  }

  Elem from_int(long long v) const {
    if (kind_ == Kind::Laurent) {
      Elem e;
      if (v != 0) e.lp.push_back({0, v});
      return e;
    }
    if (kind_ == Kind::Modular) return from_code(((v % n_) + n_) % n_);
    long long c = ((v % p_) + p_) % p_;
    return from_code(c);
  }

  Elem add(const Elem& a, const Elem& b) const {
    if (kind_ == Kind::Laurent) return laurent_add(a, b, 1);
    return from_code(add_code(a.code, b.code));
  }
  Elem sub(const Elem& a, const Elem& b) const {
    if (kind_ == Kind::Laurent) return laurent_add(a, b, -1);
    return from_code(sub_code(a.code, b.code));
  }
  Elem neg(const Elem& a) const { return sub(zero(), a); }
  Elem mul(const Elem& a, const Elem& b) const {
    if (kind_ == Kind::Laurent) {
      Elem r;
      for (auto& [ea, ca] : a.lp)
        for (auto& [eb, cb] : b.lp) {
          Elem t;
          t.lp.push_back({ea + eb, ca * cb});
          r = laurent_add(r, t, 1);
        }
      return r;
    }
    return from_code(mul_code(a.code, b.code));
  }

  bool is_zero(const Elem& a) const {
    return kind_ == Kind::Laurent ? a.lp.empty() : a.code == 0;
  }

  bool is_unit(const Elem& a) const {
    if (kind_ == Kind::Laurent)
      return a.lp.size() == 1 &&
             (a.lp[0].second == 1 || a.lp[0].second == -1);
    return inv_code(a.code) >= 0;
  }

  Elem inv(const Elem& a) const {
    if (kind_ == Kind::Laurent) {
      if (!is_unit(a))
        throw Error("NonUnit", "NonUnit: " + format(a) +
                                   " is not a unit of " + spec_);
      Elem r;
      r.lp.push_back({-a.lp[0].first, a.lp[0].second});
      return r;
    }
    long long c = inv_code(a.code);
    if (c < 0)
      throw Error("NonUnit",
                  "NonUnit: " + format(a) + " is not a unit of " + spec_);
    return from_code(c);
  }

  Elem pow(const Elem& a, long long e) const {
    Elem base = a;
    if (e < 0) {
      base = inv(a);
      e = -e;
    }
    Elem r = one();
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // All units in canonical order.  Laurent has infinitely many.
  std::vector<Elem> units() const {
    if (kind_ == Kind::Laurent)
      throw Error("Infinite",
                  "Infinite: the Laurent ring has infinitely many units");
    std::vector<Elem> out;
    for (long long c = 0; c < size_; ++c)
      if (inv_code(c) >= 0) out.push_back(from_code(c));
    return out;
  }

  // Canonical total order used for all deterministic output.
  bool less(const Elem& a, const Elem& b) const {
    if (kind_ == Kind::Laurent) return a.lp < b.lp;
    return a.code < b.code;
  }

  // ------------------------------------------------------------ fast path
  long long add_code(long long a, long long b) const {
    if (kind_ == Kind::Modular) return (a + b) % n_;
    long long r = 0, mul = 1;
    for (int i = 0; i < k_; ++i) {
      r += ((a + b) % p_) * mul;
      a /= p_;
      b /= p_;
      mul *= p_;
    }
    return r;
  }
  long long sub_code(long long a, long long b) const {
    if (kind_ == Kind::Modular) return ((a - b) % n_ + n_) % n_;
    long long r = 0, mul = 1;
    for (int i = 0; i < k_; ++i) {
      r += (((a - b) % p_ + p_) % p_) * mul;
      a /= p_;
      b /= p_;
      mul *= p_;
    }
    return r;
  }
  long long neg_code(long long a) const { return sub_code(0, a); }
  long long mul_code(long long a, long long b) const {
    if (!mulTab_.empty()) return mulTab_[a * size_ + b];
    return mul_code_slow(a, b);
  }
  // -1 when the code is not a unit.
  long long inv_code(long long a) const {
    if (!invTab_.empty()) return invTab_[a];
    return inv_code_slow(a);
  }

  // --------------------------------------------------------- parse/format
  Elem parse(const std::string& text) const {
    char var = kind_ == Kind::Laurent ? 'A' : 't';
    bool allow_neg_exp = kind_ == Kind::Laurent;
    std::vector<long long> coeffs;  // index = exponent + offset (laurent)
    if (kind_ == Kind::Laurent) {
      auto terms = parse_poly_terms(text, var, allow_neg_exp);
      Elem e;
      for (auto& [exp, c] : terms)
        if (c != 0) e.lp.push_back({exp, c});
      std::sort(e.lp.begin(), e.lp.end());
      return e;
    }
    auto terms = parse_poly_terms(text, var, allow_neg_exp);
    if (kind_ == Kind::Modular) {
      long long v = 0;
      for (auto& [exp, c] : terms) {
        if (exp != 0)
          throw Error("ParseError",
                      "ParseError: variable not allowed in " + spec_);
        v += c;
      }
      return from_int(v);
    }
    // Galois: reduce the polynomial mod (f, p).
    std::vector<long long> poly(1, 0);
    for (auto& [exp, c] : terms) {
      if (static_cast<size_t>(exp) >= poly.size()) poly.resize(exp + 1, 0);
      poly[exp] += c;
    }
    poly = poly_mod(poly);
    return from_code(poly_to_code(poly));
  }

  std::string format(const Elem& a) const {
    if (kind_ == Kind::Modular) return std::to_string(a.code);
    if (kind_ == Kind::Galois) return format_poly(code_to_poly(a.code));
    // Laurent: descending exponents, e.g. "-A^2-A^-2".
    if (a.lp.empty()) return "0";
    std::string out;
    for (auto it = a.lp.rbegin(); it != a.lp.rend(); ++it) {
      auto [exp, c] = *it;
      std::string term;
      std::string mag;
      long long ac = c < 0 ? -c : c;
      if (exp == 0)
        mag = std::to_string(ac);
      else {
        if (ac != 1) mag = std::to_string(ac);
        mag += "A";
        if (exp != 1) mag += "^" + std::to_string(exp);
      }
      if (c < 0)
        term = "-" + mag;
      else
        term = out.empty() ? mag : "+" + mag;
      out += term;
    }
    return out;
  }

 private:
  Kind kind_ = Kind::Modular;
  long long n_ = 0;            // modular modulus
  long long p_ = 0;            // galois characteristic
  int k_ = 0;                  // galois degree
  std::vector<long long> f_;   // galois modulus polynomial (ascending)
  long long size_ = 0;         // 0 for laurent
  std::string spec_;
  std::vector<long long> mulTab_, invTab_;

  static bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  void build_tables() {
    if (size_ <= 0 || size_ > 4096) return;
    mulTab_.resize(size_ * size_);
    for (long long a = 0; a < size_; ++a)
      for (long long b = 0; b < size_; ++b)
        mulTab_[a * size_ + b] = mul_code_slow(a, b);
    invTab_.assign(size_, -1);
    for (long long a = 0; a < size_; ++a)
      for (long long b = 0; b < size_; ++b)
        if (mulTab_[a * size_ + b] == 1) {
          invTab_[a] = b;
          break;
        }
  }

  long long mul_code_slow(long long a, long long b) const {
    if (kind_ == Kind::Modular) return (a * b) % n_;
    auto pa = code_to_poly(a), pb = code_to_poly(b);
    std::vector<long long> prod(pa.size() + pb.size() - 1, 0);
    for (size_t i = 0; i < pa.size(); ++i)
      for (size_t j = 0; j < pb.size(); ++j)
        prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    return poly_to_code(poly_mod(prod));
  }

  long long inv_code_slow(long long a) const {
    if (kind_ == Kind::Modular) {
      long long g = std::gcd(a, n_);
      if (a == 0 || g != 1) return -1;
      // extended Euclid
      long long r0 = n_, r1 = a % n_, s0 = 0, s1 = 1;
      while (r1 != 0) {
        long long q = r0 / r1;
        std::tie(r0, r1) = std::make_tuple(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_tuple(s1, s0 - q * s1);
      }
      return ((s0 % n_) + n_) % n_;
    }
    if (a == 0) return -1;
    for (long long b = 1; b < size_; ++b)
      if (mul_code_slow(a, b) == 1) return b;
    return -1;
  }

  // ------------------------------------------------------ galois helpers
  std::vector<long long> code_to_poly(long long c) const {
    std::vector<long long> out(k_ == 0 ? 1 : k_, 0);
    for (int i = 0; i < k_; ++i) {
      out[i] = c % p_;
      c /= p_;
    }
    return out;
  }
  long long poly_to_code(const std::vector<long long>& poly) const {
    long long c = 0, mul = 1;
    for (int i = 0; i < k_; ++i) {
      long long d = i < static_cast<int>(poly.size()) ? poly[i] : 0;
      c += (((d % p_) + p_) % p_) * mul;
      mul *= p_;
    }
    return c;
  }
  // Reduce mod p and then mod f_.
  std::vector<long long> poly_mod(std::vector<long long> poly) const {
    for (auto& c : poly) c = ((c % p_) + p_) % p_;
    while (static_cast<int>(poly.size()) > k_) {
      long long lead = poly.back();
      size_t deg = poly.size() - 1;
      if (lead != 0)
        for (int i = 0; i <= k_; ++i) {
          auto& t = poly[deg - k_ + i];
          t = ((t - lead * f_[i]) % p_ + p_) % p_;
        }
      poly.pop_back();
    }
    while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
    return poly;
  }

  // Trial division by every monic polynomial of degree 1..k/2.
  bool irreducible() const {
    for (int d = 1; 2 * d <= k_; ++d) {
      long long count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (long long idx = 0; idx < count; ++idx) {
        std::vector<long long> g(d + 1, 0);
        long long t = idx;
        for (int i = 0; i < d; ++i) {
          g[i] = t % p_;
          t /= p_;
        }
        g[d] = 1;
        if (poly_divides(g, f_)) return false;
      }
    }
    return true;
  }
  bool poly_divides(const std::vector<long long>& g,
                    std::vector<long long> h) const {
    // remainder of h by monic g over Z_p; divides iff remainder is zero
    int dg = static_cast<int>(g.size()) - 1;
    while (static_cast<int>(h.size()) - 1 >= dg) {
      long long lead = h.back();
      size_t deg = h.size() - 1;
      if (lead != 0)
        for (int i = 0; i <= dg; ++i) {
          auto& t = h[deg - dg + i];
          t = ((t - lead * g[i]) % p_ + p_) % p_;
        }
      h.pop_back();
      if (h.empty()) break;
    }
    for (long long c : h)
      if (c % p_ != 0) return false;
    return true;
  }

  std::string format_poly(const std::vector<long long>& poly) const {
    std::string out;
    for (size_t i = 0; i < poly.size(); ++i) {
      long long c = poly[i];
      if (c == 0) continue;
      std::string term;
      if (i == 0)
        term = std::to_string(c);
      else {
        if (c != 1) term = std::to_string(c);
        term += "t";
        if (i != 1) term += "^" + std::to_string(i);
      }
      if (!out.empty()) out += "+";
      out += term;
    }
    return out.empty() ? "0" : out;
  }

  Elem laurent_add(const Elem& a, const Elem& b, long long sgn) const {
    Elem r;
    size_t i = 0, j = 0;
    while (i < a.lp.size() || j < b.lp.size()) {
      long long exp, c;
      if (j >= b.lp.size() ||
          (i < a.lp.size() && a.lp[i].first < b.lp[j].first)) {
        exp = a.lp[i].first;
        c = a.lp[i].second;
        ++i;
      } else if (i >= a.lp.size() || b.lp[j].first < a.lp[i].first) {
        exp = b.lp[j].first;
        c = sgn * b.lp[j].second;
        ++j;
      } else {
        exp = a.lp[i].first;
        c = a.lp[i].second + sgn * b.lp[j].second;
        ++i;
        ++j;
      }
      if (c != 0) r.lp.push_back({exp, c});
    }
    return r;
  }

  // ------------------------------------------------- polynomial text form
  // Grammar: expr := ['-'] term (('+'|'-') term)*
  //          term := INT ['*'] [VAR ['^' ['-'] INT]] | VAR ['^' ['-'] INT]
  static std::vector<std::pair<long long, long long>> parse_poly_terms(
      const std::string& s, char var, bool allow_neg_exp) {
    std::vector<std::pair<long long, long long>> terms;
    size_t i = 0;
    auto skip = [&] {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    };
    auto fail = [&](const std::string& what) -> void {
      throw Error("ParseError", "ParseError: " + what + " at position " +
                                    std::to_string(i) + " in '" + s + "'");
    };
    auto read_int = [&]() -> long long {
      size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      if (i == start) fail("expected integer");
      return std::stoll(s.substr(start, i - start));
    };
    skip();
    if (i == s.size()) fail("empty element");
    bool first = true;
    while (true) {
      skip();
      long long sign = 1;
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      long long coeff = 1;
      bool saw_any = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coeff = read_int();
        saw_any = true;
        skip();
        if (i < s.size() && s[i] == '*') {
          ++i;
          skip();
        }
      }
      long long exp = 0;
      if (i < s.size() && s[i] == var) {
        ++i;
        exp = 1;
        saw_any = true;
        skip();
        if (i < s.size() && s[i] == '^') {
          ++i;
          skip();
          long long esign = 1;
          if (i < s.size() && s[i] == '-') {
            if (!allow_neg_exp) fail("negative exponent not allowed");
            esign = -1;
            ++i;
          }
          exp = esign * read_int();
        }
      }
      if (!saw_any) fail("expected term");
      terms.push_back({exp, sign * coeff});
      skip();
      first = false;
      if (i == s.size()) break;
      if (s[i] != '+' && s[i] != '-') fail("unexpected character");
    }
    return terms;
  }

  // Raw polynomial (ascending coefficients) from text; used for GF moduli.
  static std::vector<long long> parse_poly_text(const std::string& s, char var,
                                                bool allow_neg_exp) {
    auto terms = parse_poly_terms(s, var, allow_neg_exp);
    std::vector<long long> out(1, 0);
    for (auto& [exp, c] : terms) {
      if (exp < 0)
        throw Error("ParseError", "ParseError: negative exponent in '" + s + "'");
      if (static_cast<size_t>(exp) >= out.size()) out.resize(exp + 1, 0);
      out[exp] += c;
    }
    return out;
  }
};

}  // namespace bbrack
