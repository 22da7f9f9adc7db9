#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tac/goods.hpp"
#include "tac/money.hpp"
#include "tac/rng.hpp"

namespace tac {

constexpr Money kFlightFloor = dollars(150);
constexpr Money kFlightCeil = dollars(600);
constexpr Money kFlightPerturbMax = dollars(10);

inline const std::string kMarketParty = "MARKET";

struct Quote {
  GoodId good{GoodKind::Inflight, 1};
  std::optional<Money> bid;
  std::optional<Money> ask;
  bool closed = false;
  std::optional<Money> close_price;
  int tick = 0;
};

struct Transaction {
  GoodId good{GoodKind::Inflight, 1};
  std::string buyer;   // agent name or MARKET
  std::string seller;  // agent name or MARKET
  Money price = 0;
  int qty = 1;
  int tick = 0;
};

enum class BidResult : std::uint8_t {
  Accepted,
  BidTooLow,
  AuctionClosed,
  InsufficientHoldings,
  UnknownOrder,
  NoTrade,
};

std::string bid_result_name(BidResult r);

// --- Flights -----------------------------------------------------------
//
// Posted-price auction with unlimited supply. The ask follows a seeded
// random walk, clamped to [$150, $600]; bids at or above the ask clear
// immediately at the ask.
class FlightAuction {
 public:
  FlightAuction(GoodId good, Money initial_ask, std::uint64_t seed,
                bool dollar_steps = false);

  GoodId good() const { return good_; }
  Money ask() const { return ask_; }

  // One scheduled perturbation: draws the step from the auction's stream.
  void tick_perturb();

  // Deterministic core of the walk, exposed for tests.
  void apply_delta(Money delta);

  // Returns the number of units cleared (0 if bid below ask). Clears at
  // the current ask regardless of how much higher the bid is.
  int buy(Money bid_price, int qty) const;

 private:
  GoodId good_;
  Money ask_;
  Rng rng_;
  bool dollar_steps_;  // draw whole-dollar steps instead of cents
};

// --- Hotels ------------------------------------------------------------
//
// 16th-price ascending (English) auction, 16 rooms. Unit bids accumulate;
// nothing is withdrawn; everything clears at close at the 16th-highest
// unit price (0 if fewer than 16 unit bids exist).
class HotelAuction {
 public:
  explicit HotelAuction(GoodId good) : good_(good) {}

  struct UnitBid {
    std::string agent;
    Money price;
    std::int64_t arrival_seq;
  };

  struct Win {
    std::string agent;
    int rooms;
  };

  GoodId good() const { return good_; }
  bool closed() const { return closed_; }
  Money close_price() const { return close_price_; }
  int last_activity() const { return last_activity_; }
  const std::vector<UnitBid>& bids() const { return bids_; }

  // Current ask: the price the 16th room would fetch right now.
  Money ask() const;

  // qty unit bids at `price`. Rejected unless price exceeds the current
  // ask and the auction is open.
  BidResult submit(const std::string& agent, Money price, int qty, int tick);

  // Winners if the auction were to close immediately; ties at the margin
  // go to the earliest arrival. Used both by close() and by agent views.
  std::vector<Win> hypothetical_winners() const;
  int winning_units(const std::string& agent) const;

  // Closes the auction and returns the (winner, rooms, price) clears.
  // All winners pay the 16th-highest unit price.
  std::vector<Transaction> close(int tick);

 private:
  GoodId good_;
  std::vector<UnitBid> bids_;
  std::int64_t next_arrival_ = 0;
  int last_activity_ = 0;
  bool closed_ = false;
  Money close_price_ = 0;
};

// --- Entertainment -----------------------------------------------------
//
// Continuous double auction. Crossing orders trade immediately at the
// standing order's price; the residual rests in the book. An agent's
// incoming order never matches its own resting orders.
class EntOrderBook {
 public:
  explicit EntOrderBook(GoodId good) : good_(good) {}

  enum class Side : std::uint8_t { Buy, Sell };

  struct Order {
    std::int64_t id;
    std::string agent;
    Side side;
    Money price;
    int qty_open;
    std::int64_t arrival_seq;
  };

  struct SubmitOutcome {
    BidResult result = BidResult::Accepted;
    std::vector<Transaction> trades;
    std::optional<std::int64_t> resting_order;  // id if residual rests
    std::vector<std::int64_t> cancelled_own;    // own far-side orders removed
  };

  GoodId good() const { return good_; }
  std::optional<Money> best_bid() const;
  std::optional<Money> best_ask() const;
  const std::vector<Order>& buy_orders() const { return buys_; }
  const std::vector<Order>& sell_orders() const { return sells_; }

  // `holdings` is the submitting agent's current ticket count for this
  // good; sells beyond holdings net of the agent's resting sells are
  // rejected.
  SubmitOutcome submit(const std::string& agent, Side side, Money price,
                       int qty, int holdings, int tick,
                       std::int64_t order_id);

  BidResult withdraw(const std::string& agent, std::int64_t order_id);

  int resting_sell_qty(const std::string& agent) const;
  std::vector<Order> orders_of(const std::string& agent) const;

 private:
  GoodId good_;
  std::vector<Order> buys_;   // kept sorted: price desc, arrival asc
  std::vector<Order> sells_;  // kept sorted: price asc, arrival asc
  std::int64_t next_arrival_ = 0;
};

}  // namespace tac
