#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tac/goods.hpp"
#include "tac/money.hpp"
#include "tac/rng.hpp"

namespace tac {

// One client's randomly drawn demand: ideal arrival day (1-4), ideal
// departure day (2-5, after arrival), grand-hotel premium, and a value for
// each entertainment type.
struct ClientPreference {
  int ideal_arrival = 1;
  int ideal_departure = 2;
  Money hotel_value = 0;                  // GHV, cents
  std::array<Money, 3> ent_value{0, 0, 0};  // EV by EntType, cents

  Money ent(EntType t) const { return ent_value[static_cast<int>(t)]; }
};

// Per-good inventory. Quantities are never negative.
struct Holdings {
  std::array<int, kNumGoods> qty{};

  int count(GoodId g) const { return qty[good_index(g)]; }
  void add(GoodId g, int n) { qty[good_index(g)] += n; }
  bool remove(GoodId g, int n) {
    int& q = qty[good_index(g)];
    if (q < n) return false;
    q -= n;
    return true;
  }
  int total() const {
    int t = 0;
    for (int q : qty) t += q;
    return t;
  }
};

struct TicketAward {
  int day;
  EntType type;

  friend bool operator==(const TicketAward&, const TicketAward&) = default;
};

// What one client ends up with: either nothing, or a travel package plus
// at most one ticket per day and per type, all inside the stay.
struct ClientAssignment {
  std::optional<TravelPackage> package;
  std::vector<TicketAward> tickets;
};

// Structural validity of the assignment itself (day window, one per day,
// one per type, no tickets without a package).
bool assignment_valid(const ClientAssignment& a);

// Whether `budget` covers the assignment's flights, hotel nights and
// tickets. Does not mutate the budget.
bool feasible(const ClientAssignment& a, const Holdings& budget);

// The scoring formula: 0 without a package, otherwise
// 1000 - 100*(|AD-IAD| + |DD-IDD|) + GHV[if BGH] + sum of assigned EVs.
Money client_utility(const ClientPreference& pref, const ClientAssignment& a);

// Package part of the utility only (no tickets). Always positive.
Money package_utility(const ClientPreference& pref, const TravelPackage& p);

// Draws the 8 clients of one agent. (IAD, IDD) is uniform over the 10
// ordered day pairs; GHV uniform on [$50, $150]; each EV uniform on
// [$0, $200]; everything independent.
std::array<ClientPreference, kNumClients> generate_clients(Rng& rng);

// Random entertainment endowment: `count` tickets uniform over the 12
// ticket goods, with replacement.
Holdings generate_endowment(Rng& rng, int count);

}  // namespace tac
