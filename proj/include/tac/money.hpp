#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace tac {

// All money is integer cents. Dollar quantities from the game rules are
// exact in this representation.
using Money = std::int64_t;

constexpr Money kCent = 1;
constexpr Money kDollar = 100;

// Sentinel for goods that cannot be bought (closed auctions, unpriced).
constexpr Money kUnbuyable = std::numeric_limits<Money>::max();

constexpr Money dollars(std::int64_t d) { return d * kDollar; }

// "12.34" / "$12.34" / "1234c" / "inf" -> cents.
Money parse_money(const std::string& text);

// cents -> "12.34" (no currency symbol); kUnbuyable -> "inf".
std::string format_money(Money cents);

}  // namespace tac
