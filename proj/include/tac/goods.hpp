#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace tac {

// The 28 tradable goods: 8 flights, 8 hotel room-nights, 12 entertainment
// ticket types. Days are 1-based travel days in the common 5-day window.
enum class GoodKind : std::uint8_t {
  Inflight,    // days 1..4
  Outflight,   // days 2..5
  HotelBGH,    // days 1..4
  HotelLFI,    // days 1..4
  EntBaseball, // days 1..4
  EntSymphony, // days 1..4
  EntTheater,  // days 1..4
};

enum class Hotel : std::uint8_t { BGH, LFI };
enum class EntType : std::uint8_t { Baseball, Symphony, Theater };

constexpr int kNumGoods = 28;
constexpr int kNumHotelGoods = 8;
constexpr int kNumEntGoods = 12;
constexpr int kNumClients = 8;
constexpr int kNumAgents = 8;
constexpr int kHotelRooms = 16;

struct GoodId {
  GoodKind kind;
  int day;  // 1-based

  friend bool operator==(const GoodId&, const GoodId&) = default;
};

bool good_is_valid(GoodId g);
bool is_flight(GoodId g);
bool is_hotel(GoodId g);
bool is_ent(GoodId g);

// Canonical dense index 0..27: inflights, outflights, BGH, LFI, baseball,
// symphony, theater; each block ordered by day.
int good_index(GoodId g);
GoodId good_from_index(int idx);

// Hotel goods also carry a dense index 0..7 (BGH 1..4 then LFI 1..4), and
// entertainment goods 0..11 (baseball, symphony, theater by day).
int hotel_index(GoodId g);
GoodId hotel_from_index(int idx);
int ent_index(GoodId g);
GoodId ent_from_index(int idx);

EntType ent_type(GoodId g);
GoodId ent_good(EntType t, int day);

// Short stable codes used in transcripts, dumps and configs:
// in1..in4, out2..out5, bgh1..bgh4, lfi1..lfi4, bb1..bb4, sy1..sy4, th1..th4.
std::string good_code(GoodId g);
std::optional<GoodId> good_from_code(const std::string& code);

// A feasible travel itinerary shape: arrive day AD, depart day DD > AD,
// stay every night AD <= d < DD in one hotel. There are exactly 20.
struct TravelPackage {
  int arrival;    // 1..4
  int departure;  // 2..5, > arrival
  Hotel hotel;

  friend bool operator==(const TravelPackage&, const TravelPackage&) = default;
};

constexpr int kNumPackages = 20;
int package_index(const TravelPackage& p);
TravelPackage package_from_index(int idx);

// Goods a package consumes: one inflight, one outflight, one room per night.
// Visitor receives each GoodId once.
template <typename Fn>
void for_each_package_good(const TravelPackage& p, Fn&& fn) {
  fn(GoodId{GoodKind::Inflight, p.arrival});
  fn(GoodId{GoodKind::Outflight, p.departure});
  GoodKind h = p.hotel == Hotel::BGH ? GoodKind::HotelBGH : GoodKind::HotelLFI;
  for (int d = p.arrival; d < p.departure; ++d) fn(GoodId{h, d});
}

std::string hotel_name(Hotel h);
std::string ent_type_name(EntType t);

}  // namespace tac
