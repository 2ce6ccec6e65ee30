#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "svtab/biject.hpp"
#include "svtab/enumerate.hpp"
#include "svtab/stats.hpp"

using namespace svtab;

TEST_SUITE("biject") {

TEST_CASE("alpha worked examples") {
  const auto t = tab({{{1, 2}, {3, 4, 6}, {7}, {10}}, {{5, 8}, {9}, {11, 12}, {13, 14}}});
  CHECK(alpha(t).to_string() == "1 5 8 2 3 4 9 6 11 12 7 13 10");
  CHECK(alpha(tab({{{1}}, {{2}}})).to_string() == "1");
  CHECK(alpha(tab({{{1, 2}}, {{3}}})).to_string() == "1 2");
  CHECK(alpha(tab({{{1}}, {{2, 3}}})).to_string() == "2 1");
  CHECK_ERRC(alpha(tab({{{1}, {2}}, {{3}}})), Errc::ShapeNotTwoRowRectangular);
}

TEST_CASE("alpha_inv worked examples") {
  CHECK(alpha_inv(Permutation::parse("3 5 1 2 7 8 4 10 11 6 9")) ==
        tab({{{1}, {2, 4}, {6}, {9}}, {{3, 5}, {7, 8}, {10, 11}, {12}}}));
  CHECK(alpha_inv(Permutation::parse("1")) == tab({{{1}}, {{2}}}));
  CHECK(alpha_inv(Permutation::parse("2 1")) == tab({{{1}}, {{2, 3}}}));
  CHECK_ERRC(alpha_inv(Permutation::parse("3 2 1")), Errc::Not321Avoiding);
}

TEST_CASE("alpha is a bijection carrying minima to the top row and valleys to columns, n <= 10") {
  for (int n = 2; n <= 10; ++n) {
    std::set<std::vector<int>> image;
    for_each_two_row_union(n, [&](const SetValuedTableau& t) {
      const Permutation pi = alpha(t);
      REQUIRE(oracle::avoids_321(pi.word()));
      CHECK(alpha_inv(pi) == t);
      // right-to-left minima by direct scan
      std::vector<int> minima;
      int low = 1 << 30;
      for (auto it = pi.word().rbegin(); it != pi.word().rend(); ++it) {
        if (*it < low) minima.push_back(low = *it);
      }
      std::sort(minima.begin(), minima.end());
      CHECK(minima == t.row_entries(0));
      CHECK(oracle::inner_valleys(pi.word()) == t.shape().outer()[0] - 1);
      image.insert(pi.word());
    });
    CHECK(image.size() == oracle::catalan(n - 1));
  }
}

TEST_CASE("beta on two worked tableaux") {
  const auto left = tab({{{1, 2}, {4}, {5}}, {{3}, {6}, {7}}});
  const auto right = tab({{{1}, {4}, {5, 7}}, {{2, 3}, {6}, {8, 9}}});
  CHECK(beta(left).to_string() == "UuDUUDD");
  CHECK(beta(right).to_string() == "UDdUUDuDd");
  CHECK(beta(tab({{{1}}, {{2}}})).to_string() == "UD");
  CHECK(beta_inv(ColoredPath::parse("UuDUUDD")) == left);
  CHECK(beta_inv(ColoredPath::parse("UDdUUDuDd")) == right);
  CHECK(beta_inv(ColoredPath::parse("UD")) == tab({{{1}}, {{2}}}));
  CHECK_ERRC(beta_inv(ColoredPath::parse("uUD")), Errc::NotInMotzET);
}

TEST_CASE("beta_inv on motzET(4) covers (b,k) = (1,2) and (2,0)") {
  std::set<std::pair<int, int>> bk;
  std::set<SetValuedTableau> seen;
  for (const auto& p : gen_paths(PathFamily::motzET, 4)) {
    const auto t = beta_inv(p);
    CHECK(beta(t) == p);
    seen.insert(t);
    bk.insert({t.shape().outer()[0], t.k()});
  }
  CHECK(seen.size() == 5);
  CHECK(bk == std::set<std::pair<int, int>>{{1, 2}, {2, 0}});
}

TEST_CASE("beta roundtrip and step rule, n <= 10") {
  for (int n = 2; n <= 10; ++n) {
    for_each_two_row_union(n, [&](const SetValuedTableau& t) {
      const ColoredPath p = beta(t);
      CHECK(oracle::in_motzET(p.to_string()));
      CHECK(p.count(Step::u) + p.count(Step::d) == t.k());
      CHECK(beta_inv(p) == t);
    });
  }
}

TEST_CASE("ballotlike form of beta") {
  for (int n = 0; n <= 7; ++n) {
    for (int i = 0; i <= n; ++i) {
      for_each_ballot_tableau(n, i, [&](const SetValuedTableau& t) {
        const ColoredPath p = beta_two_row(t);
        CHECK(oracle::in_ballotlike(p.to_string(), i));
        CHECK(beta_inv_ballotlike(p) == t);
      });
    }
  }
}

TEST_CASE("phi examples") {
  CHECK(phi(ColoredPath::parse("UUDD")).to_string() == "UdD");
  CHECK(phi(ColoredPath::parse("UuDd")).to_string() == "UDd");
  std::vector<std::string> image;
  for (const auto& p : gen_paths(PathFamily::motzET, 4)) image.push_back(phi(p).to_string());
  CHECK(image == std::vector<std::string>{"UdD", "dUD", "ddd", "UDd", "UuD"});
  CHECK(phi_inv(ColoredPath::parse("d")).to_string() == "UD");
  CHECK(phi_inv(ColoredPath::parse("UdD")).to_string() == "UUDD");
  CHECK(phi_inv(ColoredPath::parse("uuu")).to_string() == "uuuu");
  CHECK(phi(ColoredPath::parse("uuuu")).to_string() == "uuu");
  CHECK_ERRC(phi(ColoredPath::parse("UdD")), Errc::NotInMotzT);
}

TEST_CASE("phi images and the U+u count, n <= 9") {
  for (int n = 1; n <= 9; ++n) {
    std::vector<std::string> all, et;
    for (const auto& p : gen_paths(PathFamily::motzT, n)) {
      const ColoredPath q = phi(p);
      CHECK(q.count(Step::U) + q.count(Step::u) + 1 == p.count(Step::U) + p.count(Step::u));
      CHECK(phi_inv(q) == p);
      all.push_back(q.to_string());
      if (oracle::in_motzET(p.to_string())) et.push_back(q.to_string());
    }
    std::sort(all.begin(), all.end());
    std::sort(et.begin(), et.end());
    auto motz = oracle::paths(n - 1, oracle::in_motz);
    auto motz_e = oracle::paths(n - 1, oracle::in_motzE);
    std::sort(motz.begin(), motz.end());
    std::sort(motz_e.begin(), motz_e.end());
    CHECK(all == motz);
    if (n >= 2) CHECK(et == motz_e);
  }
}

TEST_CASE("decompose: the 3x4 example with k = 4") {
  const auto s = tab({{{1}, {2}, {7}, {8}},
                      {{3}, {4, 5}, {11}, {13}},
                      {{6, 9, 10}, {12}, {14, 15}, {16}}});
  const TableauTriple tr = decompose(s);
  CHECK(tr.cuts == std::vector<int>{4, 7, 7, 11});
  CHECK(tr.picks == std::vector<Cell>{{1, 1}, {2, 0}, {2, 0}, {2, 2}});
  CHECK(chain_shapes(tr) == std::vector<Partition>{Partition::parse("2,2"), Partition::parse("4,2,1"),
                                                   Partition::parse("4,2,1"), Partition::parse("4,4,3")});
  CHECK(tr.T == tab({{{1}, {2}, {6}, {7}}, {{3}, {4}, {8}, {10}}, {{5}, {9}, {11}, {12}}}));
  CHECK(compose(tr) == s);
}

TEST_CASE("decompose small cases") {
  const auto s = tab({{{1, 2}}, {{3}}});
  const TableauTriple tr = decompose(s);
  CHECK(tr.T == tab({{{1}}, {{2}}}));
  CHECK(tr.cuts == std::vector<int>{1});
  CHECK(tr.picks == std::vector<Cell>{{0, 0}});
  const auto syt = tab({{{1}, {2}}, {{3}}});
  CHECK(decompose(syt).T == syt);
  CHECK(decompose(syt).cuts.empty());
}

TEST_CASE("compose rejects a pick outside the maximal elements") {
  TableauTriple tr{tab({{{1}, {2}}, {{3}}}), {2}, {{0, 0}}};
  CHECK_ERRC(compose(tr), Errc::InvalidPick);
}

TEST_CASE("compose . decompose = id, |lambda|+k <= 8, <= 3 rows") {
  for (int size = 1; size <= 8; ++size) {
    for (const Partition& lambda : partitions_of(size)) {
      if (lambda.length() > 3) continue;
      for (int k = 0; size + k <= 8; ++k) {
        for_each_svsyt(lambda, k, [&](const SetValuedTableau& t) {
          const TableauTriple tr = decompose(t);
          CHECK(tr.T.is_standard());
          CHECK(std::is_sorted(tr.cuts.begin(), tr.cuts.end()));
          CHECK(compose(tr) == t);
        });
      }
    }
  }
}

TEST_CASE("rotate_complement") {
  const auto t = tab({{{1}, {3}}, {{2}}});
  const SetValuedTableau r = rotate_complement(t);
  CHECK(r.shape() == SkewShape(Partition::parse("2,2"), Partition::parse("1")));
  CHECK(r.to_string() == "[_,{2} / {1},{3}]");
  CHECK(rotate_complement(r) == t);
  CHECK_ERRC(rotate_complement(tab({{{1}, {2}}, {{3}, {4}}})), Errc::ShapeMismatch);
  for (int n = 3; n <= 8; ++n) {
    oracle::u64 count = 0;
    for (int b = 0; 2 * b + 1 <= n; ++b) {
      for_each_svsyt(Partition::two_row(b + 1, b), n - 1 - 2 * b, [&](const SetValuedTableau& s) {
        ++count;
        CHECK(rotate_complement(rotate_complement(s)) == s);
      });
    }
    CHECK(count == oracle::catalan(n) - oracle::catalan(n - 1));
  }
}

}  // TEST_SUITE
