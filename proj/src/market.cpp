#include "tac/market.hpp"

#include <algorithm>
#include <stdexcept>

namespace tac {

std::string bid_result_name(BidResult r) {
  switch (r) {
    case BidResult::Accepted:
      return "accepted";
    case BidResult::BidTooLow:
      return "bid_too_low";
    case BidResult::AuctionClosed:
      return "auction_closed";
    case BidResult::InsufficientHoldings:
      return "insufficient_holdings";
    case BidResult::UnknownOrder:
      return "unknown_order";
    case BidResult::NoTrade:
      return "no_trade";
  }
  return "?";
}

// --- FlightAuction -----------------------------------------------------

FlightAuction::FlightAuction(GoodId good, Money initial_ask, std::uint64_t seed,
                             bool dollar_steps)
    : good_(good), ask_(initial_ask), rng_(seed), dollar_steps_(dollar_steps) {
  if (!is_flight(good)) throw std::invalid_argument("flight auction on non-flight good");
  ask_ = std::clamp(ask_, kFlightFloor, kFlightCeil);
}

void FlightAuction::tick_perturb() {
  Money delta;
  if (dollar_steps_) {
    delta = dollars(rng_.uniform_int(-10, 10));
  } else {
    delta = rng_.uniform_int(-kFlightPerturbMax, kFlightPerturbMax);
  }
  apply_delta(delta);
}

void FlightAuction::apply_delta(Money delta) {
  ask_ = std::clamp(ask_ + delta, kFlightFloor, kFlightCeil);
}

int FlightAuction::buy(Money bid_price, int qty) const {
  if (qty < 1) return 0;
  return bid_price >= ask_ ? qty : 0;
}

// --- HotelAuction ------------------------------------------------------

Money HotelAuction::ask() const {
  if (bids_.size() < static_cast<std::size_t>(kHotelRooms)) return 0;
  std::vector<Money> prices;
  prices.reserve(bids_.size());
  for (const auto& b : bids_) prices.push_back(b.price);
  std::nth_element(prices.begin(), prices.begin() + (kHotelRooms - 1), prices.end(),
                   std::greater<Money>());
  return prices[kHotelRooms - 1];
}

BidResult HotelAuction::submit(const std::string& agent, Money price, int qty, int tick) {
  if (closed_) return BidResult::AuctionClosed;
  if (qty < 1) return BidResult::BidTooLow;
  if (price <= ask()) return BidResult::BidTooLow;
  for (int i = 0; i < qty; ++i) {
    bids_.push_back(UnitBid{agent, price, next_arrival_++});
  }
  last_activity_ = tick;
  return BidResult::Accepted;
}

std::vector<HotelAuction::Win> HotelAuction::hypothetical_winners() const {
  std::vector<const UnitBid*> sorted;
  sorted.reserve(bids_.size());
  for (const auto& b : bids_) sorted.push_back(&b);
  std::sort(sorted.begin(), sorted.end(), [](const UnitBid* a, const UnitBid* b) {
    if (a->price != b->price) return a->price > b->price;
    return a->arrival_seq < b->arrival_seq;
  });
  std::size_t take = std::min<std::size_t>(sorted.size(), kHotelRooms);
  std::vector<Win> wins;
  for (std::size_t i = 0; i < take; ++i) {
    const UnitBid* b = sorted[i];
    auto it = std::find_if(wins.begin(), wins.end(),
                           [&](const Win& w) { return w.agent == b->agent; });
    if (it == wins.end()) {
      wins.push_back(Win{b->agent, 1});
    } else {
      ++it->rooms;
    }
  }
  return wins;
}

int HotelAuction::winning_units(const std::string& agent) const {
  for (const auto& w : hypothetical_winners()) {
    if (w.agent == agent) return w.rooms;
  }
  return 0;
}

std::vector<Transaction> HotelAuction::close(int tick) {
  if (closed_) throw std::logic_error("hotel auction closed twice: " + good_code(good_));
  closed_ = true;
  close_price_ = ask();  // 16th-highest unit price, 0 when underbid
  std::vector<Transaction> out;
  for (const auto& w : hypothetical_winners()) {
    out.push_back(Transaction{good_, w.agent, kMarketParty, close_price_, w.rooms, tick});
  }
  return out;
}

// --- EntOrderBook ------------------------------------------------------

std::optional<Money> EntOrderBook::best_bid() const {
  if (buys_.empty()) return std::nullopt;
  return buys_.front().price;
}

std::optional<Money> EntOrderBook::best_ask() const {
  if (sells_.empty()) return std::nullopt;
  return sells_.front().price;
}

int EntOrderBook::resting_sell_qty(const std::string& agent) const {
  int total = 0;
  for (const auto& o : sells_) {
    if (o.agent == agent) total += o.qty_open;
  }
  return total;
}

std::vector<EntOrderBook::Order> EntOrderBook::orders_of(const std::string& agent) const {
  std::vector<Order> out;
  for (const auto& o : buys_) {
    if (o.agent == agent) out.push_back(o);
  }
  for (const auto& o : sells_) {
    if (o.agent == agent) out.push_back(o);
  }
  return out;
}

namespace {

void insert_sorted(std::vector<EntOrderBook::Order>& book, EntOrderBook::Order o,
                   bool is_buy) {
  auto better = [is_buy](const EntOrderBook::Order& a, const EntOrderBook::Order& b) {
    if (a.price != b.price) return is_buy ? a.price > b.price : a.price < b.price;
    return a.arrival_seq < b.arrival_seq;
  };
  auto it = std::upper_bound(book.begin(), book.end(), o, better);
  book.insert(it, std::move(o));
}

}  // namespace

EntOrderBook::SubmitOutcome EntOrderBook::submit(const std::string& agent, Side side,
                                                 Money price, int qty, int holdings,
                                                 int tick, std::int64_t order_id) {
  SubmitOutcome out;
  if (qty < 1) {
    out.result = BidResult::NoTrade;
    return out;
  }
  if (side == Side::Sell && qty + resting_sell_qty(agent) > holdings) {
    out.result = BidResult::InsufficientHoldings;
    return out;
  }

  auto& contra = side == Side::Buy ? sells_ : buys_;
  auto crosses = [&](const Order& o) {
    return side == Side::Buy ? o.price <= price : o.price >= price;
  };

  int remaining = qty;
  std::size_t i = 0;
  while (remaining > 0 && i < contra.size()) {
    Order& o = contra[i];
    if (!crosses(o)) break;  // books are price-ordered, nothing further crosses
    if (o.agent == agent) {
      ++i;  // never match own resting orders
      continue;
    }
    int fill = std::min(remaining, o.qty_open);
    Transaction t;
    t.good = good_;
    t.buyer = side == Side::Buy ? agent : o.agent;
    t.seller = side == Side::Buy ? o.agent : agent;
    t.price = o.price;  // standing order's price
    t.qty = fill;
    t.tick = tick;
    out.trades.push_back(t);
    o.qty_open -= fill;
    remaining -= fill;
    if (o.qty_open == 0) {
      contra.erase(contra.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }

  if (remaining > 0) {
    // The residual rests. Own far-side orders it would cross are removed
    // first so the book never shows a crossed market.
    for (std::size_t j = 0; j < contra.size();) {
      if (contra[j].agent == agent && crosses(contra[j])) {
        out.cancelled_own.push_back(contra[j].id);
        contra.erase(contra.begin() + static_cast<std::ptrdiff_t>(j));
      } else {
        ++j;
      }
    }
    Order o{order_id, agent, side, price, remaining, next_arrival_++};
    insert_sorted(side == Side::Buy ? buys_ : sells_, o, side == Side::Buy);
    out.resting_order = order_id;
  }
  return out;
}

BidResult EntOrderBook::withdraw(const std::string& agent, std::int64_t order_id) {
  for (auto* book : {&buys_, &sells_}) {
    for (std::size_t i = 0; i < book->size(); ++i) {
      if ((*book)[i].id == order_id) {
        if ((*book)[i].agent != agent) return BidResult::UnknownOrder;
        book->erase(book->begin() + static_cast<std::ptrdiff_t>(i));
        return BidResult::Accepted;
      }
    }
  }
  return BidResult::UnknownOrder;
}

}  // namespace tac
