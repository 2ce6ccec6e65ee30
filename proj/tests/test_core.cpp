#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "svtab/json_io.hpp"
#include "svtab/multipoly.hpp"
#include "svtab/partition.hpp"
#include "svtab/path.hpp"
#include "svtab/permutation.hpp"
#include "svtab/qpoly.hpp"
#include "svtab/tseries.hpp"

using namespace svtab;

TEST_SUITE("core") {

TEST_CASE("partition basics") {
  const Partition p = Partition::parse("3,1");
  CHECK(p.size() == 4);
  CHECK(p.length() == 2);
  CHECK(p[5] == 0);
  CHECK(p.conjugate() == Partition::parse("2,1,1"));
  CHECK(Partition::two_row(3, 0) == Partition::parse("3"));
  CHECK(Partition::rectangle(2, 4).to_string() == "4,4");
  CHECK_ERRC(Partition::parse("1,3"), Errc::InvalidArgument);
  CHECK(partitions_of(6).size() == 11);
}

TEST_CASE("skew shape cells are row-major") {
  const SkewShape s(Partition::parse("2,2"), Partition::parse("1"));
  CHECK(s.size() == 3);
  const auto cells = s.cells();
  REQUIRE(cells.size() == 3);
  CHECK(cells[0] == Cell{0, 1});
  CHECK(cells[1] == Cell{1, 0});
  CHECK(cells[2] == Cell{1, 1});
}

TEST_CASE("validate_svsyt examples") {
  const auto t = tab({{{1, 2}, {3, 4, 6}, {7}, {10}}, {{5, 8}, {9}, {11, 12}, {13, 14}}});
  CHECK(t.k() == 6);
  CHECK(t.entry_count() == 14);
  CHECK(tab({{{1}}, {{2}}}).k() == 0);
  CHECK_ERRC(tab({{{2}}, {{1}}}), Errc::OrderViolation);
  CHECK_ERRC(tab({{{1}, {}}, {{2}}}), Errc::EmptyCell);
  CHECK_ERRC(tab({{{1}, {4}}, {{2}}}), Errc::NotAPartitionOfRange);
  CHECK_ERRC(validate_svsyt({{{1}, {2}}}, SkewShape(Partition::parse("3"))), Errc::ShapeMismatch);
}

TEST_CASE("validation is idempotent") {
  for (const auto& rows : oracle::svsyt({3, 2}, 2)) {
    const auto t = validate_svsyt(rows, SkewShape(Partition::parse("3,2")));
    CHECK(validate_svsyt(t.rows(), t.shape()) == t);
  }
}

TEST_CASE("tableau text and json") {
  const auto t = tab({{{1, 2}, {3}}, {{4}}});
  CHECK(t.to_string() == "[{1,2},{3} / {4}]");
  const Json j = tableau_to_json(t);
  CHECK(j.dump() == R"({"outer":[2,1],"inner":[],"rows":[[[1,2],[3]],[[4]]]})");
  CHECK(tableau_from_json(j) == t);
  CHECK(parse_tableau(R"({"rows":[[[1,2],[3]],[[4]]]})") == t);
  CHECK_ERRC(parse_tableau("{"), Errc::ParseError);
}

TEST_CASE("permutation") {
  CHECK(Permutation::parse("3 1 2").avoids_321());
  CHECK(!Permutation::parse("3 2 1").avoids_321());
  CHECK_ERRC(Permutation::parse("1 1"), Errc::InvalidArgument);
  for (int m = 1; m <= 7; ++m) {
    std::vector<int> w(m);
    std::iota(w.begin(), w.end(), 1);
    do {
      CHECK(Permutation(w).avoids_321() == oracle::avoids_321(w));
    } while (std::next_permutation(w.begin(), w.end()));
  }
}

TEST_CASE("path family tags") {
  const auto all = [](std::initializer_list<PathFamily> fs) {
    FamilyTags t;
    for (auto f : fs) t.set(f);
    return t;
  };
  using enum PathFamily;
  CHECK(path_family(ColoredPath::parse("UuDUUDD")) == all({motz, motzE, motzT, motzET, ballotlike}));
  CHECK(path_family(ColoredPath::parse("UD")) == all({motz, motzE, motzT, motzET, ballotlike}));
  CHECK(path_family(ColoredPath::parse("uU")) == FamilyTags{});
  CHECK(path_family(ColoredPath::parse("Ud")) == FamilyTags{});
  CHECK(path_family(ColoredPath::parse("Uu")) == all({ballotlike}));
  CHECK(path_family(ColoredPath::parse("uUD")) == all({motz, motzT}));
  CHECK_ERRC(ColoredPath::parse("D"), Errc::InvalidArgument);
  CHECK_ERRC(ColoredPath::parse("Ux"), Errc::ParseError);
}

TEST_CASE("path family tags agree with an independent checker, n <= 8") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& w : oracle::all_words(n)) {
      if (!oracle::tags(w).path) continue;
      const FamilyTags t = path_family(ColoredPath::parse(w));
      CHECK(t.has(PathFamily::motz) == oracle::in_motz(w));
      CHECK(t.has(PathFamily::motzE) == oracle::in_motzE(w));
      CHECK(t.has(PathFamily::motzT) == oracle::in_motzT(w));
      CHECK(t.has(PathFamily::motzET) == oracle::in_motzET(w));
      CHECK(t.has(PathFamily::ballotlike) == oracle::in_ballotlike(w, oracle::tags(w).end));
    }
  }
}

TEST_CASE("qpoly arithmetic") {
  const QPoly a = QPoly::monomial(2) + QPoly(1);
  const QPoly b = QPoly::monomial(1) - QPoly(3);
  CHECK((a * b).to_string() == "q^3 - 3q^2 + q - 3");
  CHECK((a * b).divide_exact(b) == a);
  CHECK_ERRC((a * b + QPoly(1)).divide_exact(b), Errc::DivisionNotExact);
  CHECK(QPoly().to_csv() == "0");
  CHECK(q_binomial(4, 2).to_csv() == "1,1,2,1,1");
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto want = oracle::q_binomial(n, k);
      const QPoly qb = q_binomial(n, k);
      const auto& got = qb.coeffs();
      REQUIRE(got.size() == want.size());
      for (std::size_t j = 0; j < want.size(); ++j) CHECK(got[j] == want[j]);
    }
  }
}

TEST_CASE("multipoly parse and print") {
  const MultiPoly p = MultiPoly::parse("U(d^2+ud+2UD+u^2)D");
  CHECK(p.to_string() == "2U^2D^2 + UDu^2 + UDud + UDd^2");
  CHECK(MultiPoly::parse(p.to_string()) == p);
  CHECK(MultiPoly::parse("-3 + u*d").to_string() == "ud - 3");
  CHECK(p.derivative(Marker::U).eval_ones() == Integer(7));
  CHECK(p.swapped(Marker::u, Marker::d) == p);
  CHECK_ERRC(MultiPoly::parse("U+"), Errc::ParseError);
}

namespace {

MultiPoly random_poly(std::mt19937& rng) {
  MultiPoly p;
  const int terms = rng() % 4;
  for (int t = 0; t < terms; ++t) {
    Exponent e{};
    for (auto& x : e) x = rng() % 3;
    p += MultiPoly::monomial(e, Integer(static_cast<int>(rng() % 7) - 3));
  }
  return p;
}

TSeries random_series(std::mt19937& rng, int order) {
  TSeries s(order);
  for (int j = 0; j <= order; ++j) s[j] = random_poly(rng);
  return s;
}

}  // namespace

TEST_CASE("ring axioms on random operands") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MultiPoly());
  }
  for (int trial = 0; trial < 50; ++trial) {
    const TSeries a = random_series(rng, 5), b = random_series(rng, 5), c = random_series(rng, 5);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
  for (int trial = 0; trial < 100; ++trial) {
    QPoly a, b, c;
    for (int j = 0; j < 4; ++j) {
      a = a + QPoly(static_cast<int>(rng() % 5) - 2).shifted(j);
      b = b + QPoly(static_cast<int>(rng() % 5) - 2).shifted(j);
      c = c + QPoly(static_cast<int>(rng() % 5) - 2).shifted(j);
    }
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("series inverse and square root") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    TSeries a = random_series(rng, 6);
    a[0] = MultiPoly(1);
    CHECK(a * a.inverse() == TSeries::constant(6, MultiPoly(1)));
    const TSeries sq = a * a;
    CHECK(sq.sqrt() == a);
  }
  TSeries bad(3);
  bad[0] = MultiPoly(2);
  CHECK_ERRC(bad.inverse(), Errc::NonInvertibleDenominator);
}

}  // TEST_SUITE
