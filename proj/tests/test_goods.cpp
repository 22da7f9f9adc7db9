#include "doctest.h"
#include "tac/goods.hpp"
#include "tac/money.hpp"

using namespace tac;

TEST_CASE("exactly 28 goods, index round-trips") {
  int flights = 0, hotels = 0, ents = 0;
  for (int i = 0; i < kNumGoods; ++i) {
    GoodId g = good_from_index(i);
    CHECK(good_is_valid(g));
    CHECK(good_index(g) == i);
    if (is_flight(g)) ++flights;
    if (is_hotel(g)) ++hotels;
    if (is_ent(g)) ++ents;
  }
  CHECK(flights == 8);
  CHECK(hotels == 8);
  CHECK(ents == 12);
}

TEST_CASE("day ranges enforced") {
  CHECK(good_is_valid({GoodKind::Inflight, 1}));
  CHECK(good_is_valid({GoodKind::Inflight, 4}));
  CHECK_FALSE(good_is_valid({GoodKind::Inflight, 5}));
  CHECK_FALSE(good_is_valid({GoodKind::Outflight, 1}));
  CHECK(good_is_valid({GoodKind::Outflight, 5}));
  CHECK_FALSE(good_is_valid({GoodKind::HotelBGH, 5}));
  CHECK_FALSE(good_is_valid({GoodKind::EntTheater, 0}));
}

TEST_CASE("good codes round-trip") {
  for (int i = 0; i < kNumGoods; ++i) {
    GoodId g = good_from_index(i);
    auto back = good_from_code(good_code(g));
    REQUIRE(back.has_value());
    CHECK(*back == g);
  }
  CHECK_FALSE(good_from_code("in5").has_value());
  CHECK_FALSE(good_from_code("out1").has_value());
  CHECK_FALSE(good_from_code("xyz").has_value());
}

TEST_CASE("exactly 20 travel packages, index round-trips") {
  for (int i = 0; i < kNumPackages; ++i) {
    TravelPackage p = package_from_index(i);
    CHECK(p.arrival >= 1);
    CHECK(p.arrival < p.departure);
    CHECK(p.departure <= 5);
    CHECK(package_index(p) == i);
  }
}

TEST_CASE("package goods: one in, one out, one room per night") {
  TravelPackage p{2, 5, Hotel::LFI};
  int in = 0, out = 0, rooms = 0;
  for_each_package_good(p, [&](GoodId g) {
    if (g.kind == GoodKind::Inflight) {
      ++in;
      CHECK(g.day == 2);
    } else if (g.kind == GoodKind::Outflight) {
      ++out;
      CHECK(g.day == 5);
    } else {
      CHECK(g.kind == GoodKind::HotelLFI);
      ++rooms;
    }
  });
  CHECK(in == 1);
  CHECK(out == 1);
  CHECK(rooms == 3);
}

TEST_CASE("money parse and format") {
  CHECK(parse_money("12.34") == 1234);
  CHECK(parse_money("$150") == 15000);
  CHECK(parse_money("99c") == 99);
  CHECK(parse_money("inf") == kUnbuyable);
  CHECK(format_money(1234) == "12.34");
  CHECK(format_money(15000) == "150");
  CHECK(format_money(-205) == "-2.05");
  CHECK(format_money(kUnbuyable) == "inf");
}
