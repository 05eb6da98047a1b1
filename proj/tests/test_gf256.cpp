#include <doctest.h>

#include <vector>

#include "uarnc/gf256.hpp"

using namespace uarnc;

namespace {

// Shift-and-reduce multiplication modulo x^8 + x^4 + x^3 + x + 1.
unsigned peasant(unsigned a, unsigned b) {
  unsigned r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    if (a & 0x100) a ^= 0x11B;
    b >>= 1;
  }
  return r;
}

}  // namespace

TEST_CASE("add is xor") {
  CHECK(gf::add(0x57, 0x83) == 0xD4);
  for (unsigned a = 0; a < 256; ++a) {
    CHECK(gf::add(a, a) == 0);
    CHECK(gf::add(a, 0) == a);
  }
}

TEST_CASE("mul matches the shift-and-reduce oracle on every pair") {
  CHECK(gf::mul(0x57, 0x83) == 0xC1);
  int mismatches = 0;
  for (unsigned a = 0; a < 256; ++a) {
    CHECK(gf::mul(a, 1) == a);
    CHECK(gf::mul(a, 0) == 0);
    for (unsigned b = 0; b < 256; ++b)
      if (gf::mul(a, b) != peasant(a, b)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("inverse and division") {
  for (unsigned a = 1; a < 256; ++a) {
    CHECK(gf::mul(a, gf::inv(a)) == 1);
    for (unsigned b = 1; b < 256; b += 17) CHECK(gf::mul(gf::div(a, b), b) == a);
  }
  CHECK(gf::div(0, 9) == 0);
}

TEST_CASE("field axioms hold on a sampled lattice") {
  for (unsigned a = 0; a < 256; a += 7)
    for (unsigned b = 0; b < 256; b += 11)
      for (unsigned c = 0; c < 256; c += 13) {
        CHECK(gf::mul(a, gf::mul(b, c)) == gf::mul(gf::mul(a, b), c));
        CHECK(gf::mul(a, gf::add(b, c)) == gf::add(gf::mul(a, b), gf::mul(a, c)));
        CHECK(gf::mul(a, b) == gf::mul(b, a));
      }
}

TEST_CASE("axpy and scale agree with scalar arithmetic") {
  std::vector<gf::Element> dst(256), src(256);
  for (unsigned i = 0; i < 256; ++i) {
    dst[i] = static_cast<gf::Element>(i);
    src[i] = static_cast<gf::Element>(255 - i);
  }
  auto expected = dst;
  for (unsigned i = 0; i < 256; ++i) expected[i] ^= peasant(0x1D, src[i]);
  gf::axpy(dst, 0x1D, src);
  CHECK(dst == expected);

  auto scaled = src;
  gf::scale(scaled, 0xA7);
  for (unsigned i = 0; i < 256; ++i) CHECK(scaled[i] == peasant(0xA7, src[i]));
}
