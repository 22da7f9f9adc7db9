#include "oracles.hpp"

#include <algorithm>
#include <array>

namespace tac::testing {

namespace {

struct Enumerator {
  const AllocationProblem& p;
  int C;
  std::vector<int> pkg_choice;  // -1 none, else package index
  Money best = 0;

  explicit Enumerator(const AllocationProblem& prob)
      : p(prob), C(prob.num_clients()), pkg_choice(C, -1) {}

  // Best total EV: hand out tickets client by client, trying every valid
  // selection (distinct days inside the stay, distinct types, stock left).
  Money best_ticket_value(int c, std::array<int, 12>& stock) {
    if (c >= C) return 0;
    Money best_ev = best_ticket_value(c + 1, stock);  // client takes none
    if (pkg_choice[c] < 0) return best_ev;
    TravelPackage pkg = package_from_index(pkg_choice[c]);

    std::vector<std::pair<int, int>> picks;  // (day, type)
    auto dfs = [&](auto&& self, int day, unsigned type_mask, Money ev) -> void {
      if (day >= pkg.departure) {
        if (!picks.empty()) {
          Money rest = best_ticket_value(c + 1, stock);
          best_ev = std::max(best_ev, ev + rest);
        }
        return;
      }
      self(self, day + 1, type_mask, ev);
      for (int t = 0; t < 3; ++t) {
        if (type_mask & (1u << t)) continue;
        int e = ent_index(ent_good(static_cast<EntType>(t), day));
        if (stock[e] == 0) continue;
        --stock[e];
        picks.push_back({day, t});
        self(self, day + 1, type_mask | (1u << t),
             ev + p.ticket_value(c, static_cast<EntType>(t)));
        picks.pop_back();
        ++stock[e];
      }
    };
    dfs(dfs, pkg.arrival, 0, 0);
    return best_ev;
  }

  void try_combo() {
    std::array<int, 16> usage{};
    Money value = 0;
    for (int c = 0; c < C; ++c) {
      if (pkg_choice[c] < 0) continue;
      value += p.package_value[c][pkg_choice[c]];
      TravelPackage pkg = package_from_index(pkg_choice[c]);
      for_each_package_good(pkg, [&](GoodId g) { ++usage[good_index(g)]; });
    }
    for (int rd = 0; rd < 16; ++rd) {
      int need = usage[rd] - p.owned_travel[rd];
      if (need <= 0) continue;
      if (p.price[rd] == kUnbuyable) return;  // combo infeasible
      value -= p.price[rd] * need;
    }
    std::array<int, 12> stock = p.owned_tickets;
    value += best_ticket_value(0, stock);
    best = std::max(best, value);
  }

  void run(int c) {
    if (c == C) {
      try_combo();
      return;
    }
    pkg_choice[c] = -1;
    run(c + 1);
    for (int f = 0; f < kNumPackages; ++f) {
      if (p.is_barred(c, f)) continue;
      pkg_choice[c] = f;
      run(c + 1);
    }
    pkg_choice[c] = -1;
  }
};

}  // namespace

Money exhaustive_best_value(const AllocationProblem& p) {
  Enumerator e(p);
  e.run(0);
  return e.best;
}

HotelClear brute_force_hotel_clear(const std::vector<HotelAuction::UnitBid>& bids) {
  std::vector<HotelAuction::UnitBid> sorted = bids;
  std::sort(sorted.begin(), sorted.end(),
            [](const HotelAuction::UnitBid& a, const HotelAuction::UnitBid& b) {
              if (a.price != b.price) return a.price > b.price;
              return a.arrival_seq < b.arrival_seq;
            });
  HotelClear out;
  std::size_t take = std::min<std::size_t>(sorted.size(), kHotelRooms);
  out.price = sorted.size() >= kHotelRooms ? sorted[kHotelRooms - 1].price : 0;
  for (std::size_t i = 0; i < take; ++i) {
    auto it = std::find_if(out.winners.begin(), out.winners.end(),
                           [&](const auto& w) { return w.first == sorted[i].agent; });
    if (it == out.winners.end()) {
      out.winners.push_back({sorted[i].agent, 1});
    } else {
      ++it->second;
    }
  }
  return out;
}

AllocationProblem random_small_problem(Rng& rng) {
  int clients = static_cast<int>(rng.uniform_int(1, 3));
  std::vector<ClientPreference> prefs(clients);
  for (auto& pr : prefs) {
    pr.ideal_arrival = static_cast<int>(rng.uniform_int(1, 2));
    pr.ideal_departure = static_cast<int>(rng.uniform_int(pr.ideal_arrival + 1, 3));
    pr.hotel_value = dollars(rng.uniform_int(50, 150));
    for (auto& ev : pr.ent_value) ev = dollars(rng.uniform_int(0, 200));
  }
  AllocationProblem p = AllocationProblem::from_prefs(std::move(prefs));

  // Goods within the 3-day horizon: inflight 1-2, outflight 2-3, hotel
  // nights 1-2. Everything else stays unbuyable and unowned, which bars
  // the longer packages.
  std::vector<int> live;
  for (GoodId g : {GoodId{GoodKind::Inflight, 1}, GoodId{GoodKind::Inflight, 2},
                   GoodId{GoodKind::Outflight, 2}, GoodId{GoodKind::Outflight, 3},
                   GoodId{GoodKind::HotelBGH, 1}, GoodId{GoodKind::HotelBGH, 2},
                   GoodId{GoodKind::HotelLFI, 1}, GoodId{GoodKind::HotelLFI, 2}}) {
    live.push_back(good_index(g));
  }
  for (int rd : live) {
    p.owned_travel[rd] = static_cast<int>(rng.uniform_int(0, 2));
    switch (rng.uniform_int(0, 3)) {
      case 0:
        p.price[rd] = kUnbuyable;
        break;
      case 1:
        p.price[rd] = dollars(rng.uniform_int(0, 80));
        break;
      default:
        p.price[rd] = dollars(rng.uniform_int(80, 500));
        break;
    }
  }
  int tickets = static_cast<int>(rng.uniform_int(0, 4));
  for (int i = 0; i < tickets; ++i) {
    int t = static_cast<int>(rng.uniform_int(0, 2));
    int day = static_cast<int>(rng.uniform_int(1, 2));
    p.owned_tickets[ent_index(ent_good(static_cast<EntType>(t), day))] += 1;
  }
  return p;
}

AllocationProblem random_full_problem(Rng& rng) {
  std::vector<ClientPreference> prefs(kNumClients);
  {
    Rng sub(rng.next_u64());
    auto gen = generate_clients(sub);
    std::copy(gen.begin(), gen.end(), prefs.begin());
  }
  AllocationProblem p = AllocationProblem::from_prefs(std::move(prefs));
  for (int rd = 0; rd < 16; ++rd) {
    GoodId g = good_from_index(rd);
    if (is_flight(g)) {
      p.owned_travel[rd] = static_cast<int>(rng.uniform_int(0, 2));
      p.price[rd] = dollars(rng.uniform_int(150, 600));
    } else {
      p.owned_travel[rd] = static_cast<int>(rng.uniform_int(0, 3));
      // Occasionally closed with nothing more to buy.
      p.price[rd] = rng.uniform_int(0, 9) == 0 ? kUnbuyable : dollars(rng.uniform_int(0, 400));
    }
  }
  for (int i = 0; i < 12; ++i) {
    p.owned_tickets[static_cast<int>(rng.uniform_int(0, 11))] += 1;
  }
  return p;
}

}  // namespace tac::testing
