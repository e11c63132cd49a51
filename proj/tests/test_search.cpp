// Tests for exhaustive bracket search: completeness against a frozen
// enumeration, ordering, limits, threading, and equivalence classes.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "bbrack/search.hpp"
#include "oracles.hpp"

using bbrack::Biquandle;
using bbrack::Bracket;
using bbrack::Error;
using bbrack::Ring;
using bbrack::SearchOptions;
using bbrack::SearchReport;
using Catch::Matchers::StartsWith;

namespace {
using Tuple10 = std::array<long long, 10>;

// A-matrix-major entry order plus delta and w, matching the frozen table.
Tuple10 row_of(const Bracket& br) {
  Tuple10 t{};
  int i = 0;
  for (int x = 0; x < br.n(); ++x)
    for (int y = 0; y < br.n(); ++y) t[i++] = br.a(x, y).code;
  for (int x = 0; x < br.n(); ++x)
    for (int y = 0; y < br.n(); ++y) t[i++] = br.b(x, y).code;
  t[8] = br.delta().code;
  t[9] = br.w().code;
  return t;
}
}  // namespace

TEST_CASE("full search over Z5 with the constant-action biquandle",
          "[search]") {
  Biquandle ca2 = bbrack::builtin_biquandle("ca2");
  Ring Z5 = Ring::modular(5);
  SearchReport rep = bbrack::search_brackets(ca2, Z5, {});

  CHECK(rep.biquandle_name == "ca2");
  CHECK(rep.ring_spec == "Z5");
  CHECK(rep.candidates >= rep.found.size());
  REQUIRE(rep.found.size() == oracle::kSearchZ5Ca2.size());

  SECTION("results are sorted by their canonical encoding") {
    for (size_t i = 1; i < rep.found.size(); ++i)
      CHECK(rep.found[i - 1].encode() < rep.found[i].encode());
  }
  SECTION("every found structure passes full verification") {
    for (const auto& br : rep.found)
      CHECK(bbrack::verify_bracket(br) == std::nullopt);
  }
  SECTION("the result set matches the frozen enumeration exactly") {
    std::set<Tuple10> got, want;
    for (const auto& br : rep.found) got.insert(row_of(br));
    for (const auto& row : oracle::kSearchZ5Ca2) {
      Tuple10 t{};
      for (int i = 0; i < 10; ++i) t[i] = row[i];
      want.insert(t);
    }
    CHECK(got == want);
  }
  SECTION("the displayed Z5 bracket is found") {
    std::vector<long long> ex1 = bbrack::builtin_bracket("ex1").encode();
    bool present = std::any_of(rep.found.begin(), rep.found.end(),
                               [&](const Bracket& b) {
                                 return b.encode() == ex1;
                               });
    CHECK(present);
  }
}

TEST_CASE("search limits and threading", "[search]") {
  Biquandle ca2 = bbrack::builtin_biquandle("ca2");
  Ring Z5 = Ring::modular(5);

  SearchOptions all;
  SearchReport full = bbrack::search_brackets(ca2, Z5, all);

  SECTION("limit returns a prefix-sized subset") {
    SearchOptions opts;
    opts.limit = 10;
    SearchReport rep = bbrack::search_brackets(ca2, Z5, opts);
    REQUIRE(rep.found.size() == 10);
    std::set<std::vector<long long>> universe;
    for (const auto& br : full.found) universe.insert(br.encode());
    for (const auto& br : rep.found) {
      CHECK(universe.count(br.encode()) == 1);
      CHECK(bbrack::verify_bracket(br) == std::nullopt);
    }
    for (size_t i = 1; i < rep.found.size(); ++i)
      CHECK(rep.found[i - 1].encode() < rep.found[i].encode());
  }
  SECTION("thread count does not change the result") {
    SearchOptions opts;
    opts.threads = 2;
    SearchReport rep = bbrack::search_brackets(ca2, Z5, opts);
    REQUIRE(rep.found.size() == full.found.size());
    for (size_t i = 0; i < rep.found.size(); ++i)
      CHECK(rep.found[i].encode() == full.found[i].encode());
  }
  SECTION("pair bound guards against oversized unit tables") {
    SearchOptions opts;
    opts.pair_bound = 10;
    CHECK_THROWS_MATCHES(bbrack::search_brackets(ca2, Z5, opts), Error,
                         Catch::Matchers::MessageMatches(
                             StartsWith("RingTooLarge")));
  }
  SECTION("infinite rings cannot be searched") {
    CHECK_THROWS_MATCHES(bbrack::search_brackets(ca2, Ring::laurent(), {}),
                         Error,
                         Catch::Matchers::MessageMatches(
                             StartsWith("Infinite")));
  }
}

TEST_CASE("equivalence classes under scalar and C transforms", "[search]") {
  Biquandle ca2 = bbrack::builtin_biquandle("ca2");
  Ring Z5 = Ring::modular(5);
  SearchOptions opts;
  opts.dedup = true;
  SearchReport rep = bbrack::search_brackets(ca2, Z5, opts);
  REQUIRE_FALSE(rep.classes.empty());

  SECTION("classes partition the found list") {
    std::vector<char> seen(rep.found.size(), 0);
    for (const auto& cls : rep.classes) {
      REQUIRE_FALSE(cls.empty());
      for (size_t i = 1; i < cls.size(); ++i) CHECK(cls[i - 1] < cls[i]);
      for (size_t idx : cls) {
        REQUIRE(idx < seen.size());
        CHECK_FALSE(seen[idx]);
        seen[idx] = 1;
      }
    }
    CHECK(std::count(seen.begin(), seen.end(), 1) ==
          static_cast<long>(seen.size()));
    for (size_t i = 1; i < rep.classes.size(); ++i)
      CHECK(rep.classes[i - 1].front() < rep.classes[i].front());
  }
  SECTION("transforms stay inside their class") {
    const Ring& R = Z5;
    std::map<std::vector<long long>, size_t> class_of;
    for (size_t ci = 0; ci < rep.classes.size(); ++ci)
      for (size_t idx : rep.classes[ci])
        class_of[rep.found[idx].encode()] = ci;
    const Bracket& first = rep.found[rep.classes[0].front()];
    for (long long alpha : {1, 2, 3, 4})
      for (long long c0 : {1, 2})
        for (long long c1 : {1, 3}) {
          Bracket tr = bbrack::scalar_transform(
              bbrack::c_transform(first,
                                  {R.from_code(c0), R.from_code(c1)}),
              R.from_code(alpha));
          REQUIRE(class_of.count(tr.encode()) == 1);
          CHECK(class_of[tr.encode()] == 0);
        }
  }
}

TEST_CASE("search over GF(8) finds the displayed bracket", "[search]") {
  Biquandle ca2 = bbrack::builtin_biquandle("ca2");
  Ring R = Ring::parse_spec("GF(2^3;1+t+t^3)");
  SearchReport rep = bbrack::search_brackets(ca2, R, {});
  std::vector<long long> f8 = bbrack::builtin_bracket("f8").encode();
  bool present = false;
  for (const auto& br : rep.found) {
    CHECK(bbrack::verify_bracket(br) == std::nullopt);
    if (br.encode() == f8) present = true;
  }
  CHECK(present);
}
