#include "tac/clients.hpp"

#include <cstdlib>

namespace tac {

bool assignment_valid(const ClientAssignment& a) {
  if (!a.package) return a.tickets.empty();
  const TravelPackage& p = *a.package;
  if (p.arrival < 1 || p.arrival > 4 || p.departure < 2 || p.departure > 5 ||
      p.arrival >= p.departure) {
    return false;
  }
  bool day_used[6] = {};
  bool type_used[3] = {};
  for (const TicketAward& t : a.tickets) {
    if (t.day < p.arrival || t.day >= p.departure) return false;
    if (day_used[t.day] || type_used[static_cast<int>(t.type)]) return false;
    day_used[t.day] = true;
    type_used[static_cast<int>(t.type)] = true;
  }
  return true;
}

bool feasible(const ClientAssignment& a, const Holdings& budget) {
  if (!assignment_valid(a)) return false;
  if (!a.package) return true;
  Holdings need;
  for_each_package_good(*a.package, [&](GoodId g) { need.add(g, 1); });
  for (const TicketAward& t : a.tickets) need.add(ent_good(t.type, t.day), 1);
  for (int i = 0; i < kNumGoods; ++i) {
    if (need.qty[i] > budget.qty[i]) return false;
  }
  return true;
}

Money package_utility(const ClientPreference& pref, const TravelPackage& p) {
  Money penalty = dollars(100) * (std::abs(p.arrival - pref.ideal_arrival) +
                                  std::abs(p.departure - pref.ideal_departure));
  Money bonus = p.hotel == Hotel::BGH ? pref.hotel_value : 0;
  return dollars(1000) - penalty + bonus;
}

Money client_utility(const ClientPreference& pref, const ClientAssignment& a) {
  if (!a.package) return 0;
  Money u = package_utility(pref, *a.package);
  for (const TicketAward& t : a.tickets) u += pref.ent(t.type);
  return u;
}

std::array<ClientPreference, kNumClients> generate_clients(Rng& rng) {
  std::array<ClientPreference, kNumClients> out;
  for (auto& c : out) {
    // The 10 ordered (IAD, IDD) pairs with IAD < IDD, drawn uniformly.
    int pair = static_cast<int>(rng.uniform_int(0, 9));
    for (int ad = 1, k = 0; ad <= 4; ++ad) {
      for (int dd = ad + 1; dd <= 5; ++dd, ++k) {
        if (k == pair) {
          c.ideal_arrival = ad;
          c.ideal_departure = dd;
        }
      }
    }
    c.hotel_value = dollars(rng.uniform_int(50, 150));
    for (auto& ev : c.ent_value) ev = dollars(rng.uniform_int(0, 200));
  }
  return out;
}

Holdings generate_endowment(Rng& rng, int count) {
  Holdings h;
  for (int i = 0; i < count; ++i) {
    h.add(ent_from_index(static_cast<int>(rng.uniform_int(0, kNumEntGoods - 1))), 1);
  }
  return h;
}

}  // namespace tac
