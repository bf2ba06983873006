#include <doctest.h>

#include <cmath>

#include "nextclosure/cxt.hpp"
#include "nextclosure/random_context.hpp"

using namespace nextclosure;

namespace {
const char* kIdentity = "B\n\n2\n2\n\ng0\ng1\nm0\nm1\nX.\n.X\n";

std::size_t error_line(const std::string& text) {
  try {
    parse_cxt(text);
  } catch (const CxtParseError& e) {
    return e.line();
  }
  return 0;
}
}  // namespace

TEST_CASE("parse_cxt reads the identity context") {
  const auto k = parse_cxt(kIdentity);
  CHECK(k.objects() == std::vector<std::string>{"g0", "g1"});
  CHECK(k.attributes() == std::vector<std::string>{"m0", "m1"});
  CHECK(k.incident(0, 0));
  CHECK_FALSE(k.incident(0, 1));
  CHECK(k.incident(1, 1));
  CHECK(write_cxt(k) == kIdentity);
}

TEST_CASE("parse_cxt name line is optional") {
  CHECK(parse_cxt("B\nmy context\n2\n2\n\ng0\ng1\nm0\nm1\nX.\n.X\n") == parse_cxt(kIdentity));
  CHECK(parse_cxt("B\n2\n2\n\ng0\ng1\nm0\nm1\nX.\n.X\n") == parse_cxt(kIdentity));
  CHECK(parse_cxt("B\r\n\r\n2\r\n2\r\n\r\ng0\r\ng1\r\nm0\r\nm1\r\nX.\r\n.X\r\n") == parse_cxt(kIdentity));
}

TEST_CASE("parse_cxt errors carry line numbers") {
  CHECK(error_line("C\n\n1\n1\n\ng\nm\nX\n") == 1);
  CHECK(error_line("") == 1);
  CHECK(error_line("B\n\n2\n2\n\ng0\ng1\nm0\nm1\nXX.\n.X\n") == 10);
  CHECK(error_line("B\n\n2\n2\n\ng0\ng1\nm0\nm1\nX.\n.x\n") == 11);
  CHECK(error_line("B\n\n2\n2\n\ng0\ng1\nm0\nm1\nX.\n") == 11);
  CHECK(error_line("B\n\nx\n2\n\n") == 3);
  CHECK(error_line("B\n\n2\n2\n\ng0\ng1\nm0\nm1\nX.\n.X\ngarbage\n") == 12);
  CHECK(error_line("B\n\n1\n1\nnot blank\ng\nm\nX\n") == 5);
  CHECK_THROWS_AS(parse_cxt("B\n\n2\n1\n\ng\ng\nm\nX\nX\n"), CxtParseError);
  CHECK_NOTHROW(parse_cxt(std::string(kIdentity) + "\n\n"));
}

TEST_CASE("write_cxt handles empty dimensions") {
  const FormalContext no_attrs({"g0", "g1"}, {}, {BitSet(0), BitSet(0)});
  const auto text = write_cxt(no_attrs);
  CHECK(text == "B\n\n2\n0\n\ng0\ng1\n\n\n");
  CHECK(parse_cxt(text) == no_attrs);
  const FormalContext nothing;
  CHECK(parse_cxt(write_cxt(nothing)) == nothing);
}

TEST_CASE("round trip on random contexts") {
  SplitMix64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto k = random_context(rng.below(12), rng.below(12), 0.5, rng.next());
    const auto text = write_cxt(k);
    CHECK(parse_cxt(text) == k);
    CHECK(write_cxt(parse_cxt(text)) == text);
  }
}

TEST_CASE("splitmix64 reference values") {
  // First outputs for seed 0 / 1234567 from the reference splitmix64.c.
  SplitMix64 zero(0);
  CHECK(zero.next() == 0xE220A8397B1DCDAFULL);
  CHECK(zero.next() == 0x6E789E6AA1B965F4ULL);
  SplitMix64 r(1234567);
  CHECK(r.next() == 6457827717110365317ULL);
  CHECK(r.next() == 3203168211198807973ULL);
}

TEST_CASE("random_context") {
  CHECK(random_context(9, 7, 0.4, 42) == random_context(9, 7, 0.4, 42));
  CHECK_FALSE(random_context(9, 7, 0.4, 42) == random_context(9, 7, 0.4, 43));
  const auto empty = random_context(5, 5, 0.0, 1);
  const auto full = random_context(5, 5, 1.0, 1);
  for (std::size_t g = 0; g < 5; ++g) {
    CHECK(empty.row(g).none());
    CHECK(full.row(g).all());
  }
  CHECK_THROWS_AS(random_context(2, 2, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_context(2, 2, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_context(2, 2, std::nan(""), 1), std::invalid_argument);

  // Cell (g, m) uses draw number g * attributes + m.
  SplitMix64 rng(77);
  const auto k = random_context(3, 4, 0.5, 77);
  for (std::size_t g = 0; g < 3; ++g)
    for (std::size_t m = 0; m < 4; ++m) CHECK(k.incident(g, m) == (rng.next() < (1ULL << 63)));
}
