#include "doctest.h"
#include "tac/clients.hpp"

using namespace tac;

namespace {

// Game 3070 preference table (client index 0-based here).
const std::array<ClientPreference, 8>& game3070_prefs() {
  static const std::array<ClientPreference, 8> prefs = {{
      {2, 5, dollars(73), {dollars(175), dollars(34), dollars(24)}},
      {1, 3, dollars(125), {dollars(113), dollars(124), dollars(57)}},
      {4, 5, dollars(73), {dollars(157), dollars(12), dollars(177)}},
      {1, 2, dollars(102), {dollars(50), dollars(67), dollars(49)}},
      {1, 3, dollars(75), {dollars(12), dollars(135), dollars(110)}},
      {2, 4, dollars(86), {dollars(197), dollars(8), dollars(59)}},
      {1, 5, dollars(90), {dollars(56), dollars(197), dollars(162)}},
      {1, 3, dollars(50), {dollars(79), dollars(92), dollars(136)}},
  }};
  return prefs;
}

// Matching allocations and the utilities they earned.
struct Alloc {
  int ad, dd;
  Hotel hotel;
  std::vector<TicketAward> tickets;
  Money utility;
};

const std::vector<Alloc>& game3070_allocs() {
  static const std::vector<Alloc> allocs = {
      {2, 5, Hotel::LFI, {{4, EntType::Baseball}}, dollars(1175)},
      {1, 2, Hotel::BGH, {{1, EntType::Baseball}}, dollars(1138)},
      {3, 5, Hotel::LFI, {{3, EntType::Theater}, {4, EntType::Baseball}}, dollars(1234)},
      {1, 2, Hotel::BGH, {}, dollars(1102)},
      {1, 2, Hotel::BGH, {{1, EntType::Symphony}}, dollars(1110)},
      {2, 3, Hotel::BGH, {{2, EntType::Baseball}}, dollars(1183)},
      {1, 5, Hotel::LFI,
       {{2, EntType::Symphony}, {3, EntType::Baseball}, {4, EntType::Theater}},
       dollars(1415)},
      {1, 2, Hotel::BGH, {{1, EntType::Theater}}, dollars(1086)},
  };
  return allocs;
}

}  // namespace

TEST_CASE("utilities reproduce the game 3070 rows exactly") {
  Money sum = 0;
  for (int c = 0; c < 8; ++c) {
    const Alloc& a = game3070_allocs()[c];
    ClientAssignment assign;
    assign.package = TravelPackage{a.ad, a.dd, a.hotel};
    assign.tickets = a.tickets;
    REQUIRE(assignment_valid(assign));
    Money u = client_utility(game3070_prefs()[c], assign);
    CHECK(u == a.utility);
    sum += u;
  }
  CHECK(sum == dollars(9443));
}

TEST_CASE("utility corner cases") {
  ClientPreference pref{2, 4, dollars(80), {dollars(10), dollars(20), dollars(30)}};
  ClientAssignment none;
  CHECK(client_utility(pref, none) == 0);

  ClientAssignment exact;
  exact.package = TravelPackage{2, 4, Hotel::LFI};
  CHECK(client_utility(pref, exact) == dollars(1000));

  ClientAssignment bgh = exact;
  bgh.package->hotel = Hotel::BGH;
  CHECK(client_utility(pref, bgh) == dollars(1080));
}

TEST_CASE("assignment validity rules") {
  ClientAssignment a;
  a.package = TravelPackage{1, 3, Hotel::BGH};
  a.tickets = {{1, EntType::Baseball}, {2, EntType::Symphony}};
  CHECK(assignment_valid(a));

  a.tickets = {{3, EntType::Baseball}};  // day not within [AD, DD)
  CHECK_FALSE(assignment_valid(a));
  a.tickets = {{1, EntType::Baseball}, {1, EntType::Symphony}};  // same day
  CHECK_FALSE(assignment_valid(a));
  a.tickets = {{1, EntType::Baseball}, {2, EntType::Baseball}};  // same type
  CHECK_FALSE(assignment_valid(a));

  ClientAssignment bare;
  bare.tickets = {{1, EntType::Baseball}};  // ticket without a package
  CHECK_FALSE(assignment_valid(bare));
}

TEST_CASE("feasibility against a holdings budget") {
  Holdings h;
  h.add({GoodKind::Inflight, 1}, 1);
  h.add({GoodKind::Outflight, 3}, 1);
  h.add({GoodKind::HotelBGH, 1}, 1);
  h.add({GoodKind::HotelBGH, 2}, 1);

  ClientAssignment a;
  a.package = TravelPackage{1, 3, Hotel::BGH};
  CHECK(feasible(a, h));

  Holdings missing = h;
  missing.remove({GoodKind::HotelBGH, 2}, 1);
  CHECK_FALSE(feasible(a, missing));

  // One night in each hotel does not make a package; nights must match.
  Holdings mixed;
  mixed.add({GoodKind::Inflight, 1}, 1);
  mixed.add({GoodKind::Outflight, 3}, 1);
  mixed.add({GoodKind::HotelBGH, 1}, 1);
  mixed.add({GoodKind::HotelLFI, 2}, 1);
  CHECK_FALSE(feasible(a, mixed));
  ClientAssignment lfi = a;
  lfi.package->hotel = Hotel::LFI;
  CHECK_FALSE(feasible(lfi, mixed));
}

TEST_CASE("client generation: determinism and ranges") {
  Rng a(1234), b(1234);
  auto ca = generate_clients(a);
  auto cb = generate_clients(b);
  for (int i = 0; i < kNumClients; ++i) {
    CHECK(ca[i].ideal_arrival == cb[i].ideal_arrival);
    CHECK(ca[i].ideal_departure == cb[i].ideal_departure);
    CHECK(ca[i].hotel_value == cb[i].hotel_value);
    CHECK(ca[i].ent_value == cb[i].ent_value);
    CHECK(ca[i].ideal_arrival >= 1);
    CHECK(ca[i].ideal_arrival <= 4);
    CHECK(ca[i].ideal_departure >= 2);
    CHECK(ca[i].ideal_departure <= 5);
    CHECK(ca[i].ideal_arrival < ca[i].ideal_departure);
  }
}

TEST_CASE("client generation: GHV mean near 100 over many draws") {
  Rng r(5);
  std::int64_t total = 0;
  int n = 0;
  for (int k = 0; k < 1250; ++k) {  // 10000 clients
    for (const auto& c : generate_clients(r)) {
      total += c.hotel_value;
      ++n;
    }
  }
  double mean = static_cast<double>(total) / n / kDollar;
  CHECK(mean >= 98.0);
  CHECK(mean <= 102.0);
}

TEST_CASE("day pairs cover all 10 options roughly uniformly") {
  Rng r(6);
  std::array<int, 25> counts{};
  const int kDraws = 2500;  // 20000 clients
  for (int k = 0; k < kDraws; ++k) {
    for (const auto& c : generate_clients(r)) {
      ++counts[(c.ideal_arrival - 1) * 5 + (c.ideal_departure - 1)];
    }
  }
  int nonzero = 0;
  for (int ad = 1; ad <= 4; ++ad) {
    for (int dd = 2; dd <= 5; ++dd) {
      int n = counts[(ad - 1) * 5 + (dd - 1)];
      if (ad >= dd) {
        CHECK(n == 0);
      } else {
        ++nonzero;
        CHECK(n > 1600);  // expected 2000 each
        CHECK(n < 2400);
      }
    }
  }
  CHECK(nonzero == 10);
}

TEST_CASE("endowment: size, determinism, rough uniformity") {
  Rng a(9), b(9);
  Holdings ha = generate_endowment(a, 12);
  Holdings hb = generate_endowment(b, 12);
  CHECK(ha.qty == hb.qty);
  CHECK(ha.total() == 12);
  for (int i = 0; i < 16; ++i) CHECK(ha.qty[i] == 0);  // only tickets

  // Across many agents the per-good total behaves like Binomial(n, 1/12).
  Rng r(10);
  std::array<int, kNumGoods> sums{};
  const int kAgents = 960;  // 11520 tickets, expected 960 per ticket good
  for (int k = 0; k < kAgents; ++k) {
    Holdings h = generate_endowment(r, 12);
    for (int i = 0; i < kNumGoods; ++i) sums[i] += h.qty[i];
  }
  for (int e = 0; e < kNumEntGoods; ++e) {
    int n = sums[good_index(ent_from_index(e))];
    CHECK(n > 800);
    CHECK(n < 1120);
  }
}
