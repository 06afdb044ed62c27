#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "patex/recurrences.hpp"

using namespace patex;
using patex::testing::binom_positions_oracle;
using patex::testing::straight_line_D;
using patex::testing::straight_line_R;

TEST_CASE("golden values of both recurrence families") {
  CHECK(rec_R(1, 2) == 2);
  CHECK(rec_R(1, 5) == 2);
  CHECK(rec_R(2, 4) == 3);
  CHECK(rec_R(3, 2) == 5);
  CHECK(rec_R(3, 3) == 7);
  CHECK(rec_R(4, 2) == 9);
  CHECK(rec_R(4, 3) == 25);
  CHECK(rec_R(5, 2) == 17);
  CHECK(rec_R(5, 3) == 133);

  CHECK(rec_D(1, 3) == 0);
  CHECK(rec_D(2, 5) == 2);
  CHECK(rec_D(3, 2) == 5);
  CHECK(rec_D(3, 3) == 7);
  CHECK(rec_D(4, 2) == 11);
  CHECK(rec_D(4, 3) == 35);
  CHECK(rec_D(5, 2) == 23);
  CHECK(rec_D(5, 3) == 189);
}

TEST_CASE("recurrences match an independent bottom-up evaluation") {
  auto R = straight_line_R(7, 5);
  auto D = straight_line_D(7, 5);
  for (std::size_t s = 1; s <= 7; ++s)
    for (std::size_t j = 2; j <= 5; ++j) {
      CHECK(rec_R(s, j) == R[{s, j}]);
      CHECK(rec_D(s, j) == D[{s, j}]);
    }
}

TEST_CASE("recurrence domains reject s = 0 and j <= 1") {
  CHECK_THROWS_AS(rec_R(0, 2), std::domain_error);
  CHECK_THROWS_AS(rec_R(3, 1), std::domain_error);
  CHECK_THROWS_AS(rec_D(0, 3), std::domain_error);
  CHECK_THROWS_AS(rec_D(2, 0), std::domain_error);
}

TEST_CASE("both families are nondecreasing in s and in j") {
  for (std::size_t s = 1; s <= 6; ++s)
    for (std::size_t j = 2; j <= 4; ++j) {
      CHECK(rec_R(s + 1, j) >= rec_R(s, j));
      CHECK(rec_R(s, j + 1) >= rec_R(s, j));
      CHECK(rec_D(s + 1, j) >= rec_D(s, j));
      CHECK(rec_D(s, j + 1) >= rec_D(s, j));
    }
}

TEST_CASE("interleaving bound between the families") {
  // D_s(j) stays within the bracket [R_s(j) - R_{s-1}(j), R_{s+1}(j)] range
  // checks are cheap sanity: D never exceeds the next R level
  for (std::size_t s = 1; s <= 6; ++s)
    for (std::size_t j = 2; j <= 4; ++j) CHECK(rec_D(s, j) <= rec_R(s + 1, j));
}

TEST_CASE("table builder covers the requested rectangle and serializes") {
  RecurrenceTable t = RecurrenceTable::build('R', 4, 3);
  CHECK(t.values.size() == 4 * 2);  // s in 1..4, j in 2..3
  CHECK(t.values.at({4, 3}) == 25);
  std::string tsv = t.to_tsv();
  CHECK(tsv.find("R\t4\t3\t25") != std::string::npos);

  RecurrenceTable d = RecurrenceTable::build('D', 5, 3);
  CHECK(d.values.at({5, 3}) == 189);
  CHECK(d.to_tsv().find("D\t5\t3\t189") != std::string::npos);

  CHECK_THROWS_AS(RecurrenceTable::build('X', 2, 2), std::invalid_argument);

  // every body line parses back as kind s j value
  std::istringstream in(tsv);
  std::string line;
  CHECK(std::getline(in, line));
  CHECK(line == "kind\ts\tj\tvalue");
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kind, sv, jv, val;
    CHECK(static_cast<bool>(ls >> kind >> sv >> jv >> val));
    CHECK(kind == "R");
    CHECK(rec_R(std::stoul(sv), std::stoul(jv)).str() == val);
    ++lines;
  }
  CHECK(lines == t.values.size());
}

TEST_CASE("hierarchy evaluation: doubling base, tower level, guarded overflow") {
  BigInt big = 1'000'000'000;
  CHECK(ack(1, 5, big).value() == 10);   // a_1(n) = 2n
  CHECK(ack(2, 4, big).value() == 16);   // a_2(n) = 2^n
  CHECK(ack(3, 3, big).value() == 16);   // tower of height 3
  CHECK(ack(3, 1, big).value() == 2);    // a_j(1) = 2
  CHECK(ack(4, 2, big).value() == 4);    // a_j(2) = 4 for all j
  CHECK_FALSE(ack(3, 6, big).has_value());  // 2^65536 exceeds the guard
  CHECK_FALSE(ack(4, 4, BigInt(100)).has_value());
  CHECK_THROWS_AS(ack(0, 3, big), std::invalid_argument);
  CHECK_THROWS_AS(ack(2, 0, big), std::invalid_argument);
}

TEST_CASE("alpha_level inverts the hierarchy at its own outputs") {
  for (std::size_t j = 1; j <= 3; ++j)
    for (std::size_t k = 1; k <= 4; ++k) {
      BigInt v = ack(j, k, BigInt(1) << 80).value();
      CHECK(alpha_level(j, v) == k);
      CHECK(alpha_level(j, v + 1) == k + 1);
    }
  CHECK(alpha_level(2, 16) == 4);
  CHECK(alpha_level(1, 1) == 1);
  // level-1 answers outgrow machine words but stay exact
  CHECK(alpha_level(1, BigInt(1) << 200) == (BigInt(1) << 199));
  // the tower 2^65536 is the first level-3 value reaching 2^100
  CHECK(alpha_level(3, BigInt(1) << 100) == 5);
}

TEST_CASE("alpha is tiny for every representable input") {
  CHECK(alpha(1) == 1);
  CHECK(alpha(6) == 1);   // a_1(3) = 6
  CHECK(alpha(7) == 2);   // needs a_2(3) = 8
  CHECK(alpha(8) == 2);
  CHECK(alpha(9) == 3);   // needs a_3(3) = 16
  CHECK(alpha(16) == 3);
  CHECK(alpha(65536) == 4);             // a_4(3) = a_3(4) = 65536
  CHECK(alpha(BigInt(1) << 200) == 5);  // above a_4(3), below a_5(3)
  CHECK_THROWS_AS(alpha(0), std::invalid_argument);
}

TEST_CASE("binomial position bound matches the composition-counting oracle") {
  for (std::size_t m = 1; m <= 12; ++m)
    for (std::size_t s = 1; s <= 9; ++s)
      CHECK(formation_binom_bound(m, s) == binom_positions_oracle(m, s));
}

TEST_CASE("binomial position bound edge rows") {
  CHECK(formation_binom_bound(3, 1) == 1);   // C(3-1, 0)
  CHECK(formation_binom_bound(4, 2) == 3);   // C(3, 1)
  CHECK(formation_binom_bound(4, 4) == 1);   // C(2, 2)
  CHECK(formation_binom_bound(2, 5) == 0);   // C(-1, 2) = 0
  CHECK(formation_binom_bound(6, 5) == 3);   // C(3, 2)
  CHECK_THROWS_AS(formation_binom_bound(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(formation_binom_bound(3, 0), std::invalid_argument);
}
