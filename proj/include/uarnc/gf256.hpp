#pragma once

#include <cstdint>
#include <span>

// GF(2^8) with reduction polynomial x^8 + x^4 + x^3 + x + 1 (0x11B).

namespace uarnc::gf {

using Element = std::uint8_t;

inline constexpr unsigned kPolynomial = 0x11B;

constexpr Element add(Element a, Element b) noexcept {
  return static_cast<Element>(a ^ b);
}

Element mul(Element a, Element b) noexcept;
/// Multiplicative inverse; inv(0) is 0 by convention (callers never divide by 0).
Element inv(Element a) noexcept;
Element div(Element a, Element b) noexcept;

/// dst[i] ^= c * src[i]
void axpy(std::span<Element> dst, Element c, std::span<const Element> src) noexcept;
/// v[i] = c * v[i]
void scale(std::span<Element> v, Element c) noexcept;

}  // namespace uarnc::gf
