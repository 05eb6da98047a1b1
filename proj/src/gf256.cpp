#include "uarnc/gf256.hpp"

#include <array>

namespace uarnc::gf {

namespace {

struct Tables {
  std::array<Element, 512> exp{};
  std::array<int, 256> log{};
};

// 0x03 generates the multiplicative group modulo 0x11B.
constexpr Tables make_tables() {
  Tables t;
  unsigned x = 1;
  for (int i = 0; i < 255; ++i) {
    t.exp[i] = static_cast<Element>(x);
    t.log[x] = i;
    unsigned x2 = x << 1;
    if (x2 & 0x100) x2 ^= kPolynomial;
    x ^= x2;  // x * 3 = x * 2 + x
  }
  for (int i = 255; i < 512; ++i) t.exp[i] = t.exp[i - 255];
  return t;
}

constexpr Tables kTables = make_tables();

}  // namespace

Element mul(Element a, Element b) noexcept {
  if (a == 0 || b == 0) return 0;
  return kTables.exp[kTables.log[a] + kTables.log[b]];
}

Element inv(Element a) noexcept {
  if (a == 0) return 0;
  return kTables.exp[255 - kTables.log[a]];
}

Element div(Element a, Element b) noexcept {
  if (a == 0 || b == 0) return 0;
  return kTables.exp[kTables.log[a] + 255 - kTables.log[b]];
}

void axpy(std::span<Element> dst, Element c, std::span<const Element> src) noexcept {
  if (c == 0) return;
  const int lc = kTables.log[c];
  const std::size_t n = dst.size() < src.size() ? dst.size() : src.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (src[i] != 0) dst[i] ^= kTables.exp[lc + kTables.log[src[i]]];
  }
}

void scale(std::span<Element> v, Element c) noexcept {
  if (c == 1) return;
  for (auto& e : v) e = mul(e, c);
}

}  // namespace uarnc::gf
