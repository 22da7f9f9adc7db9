#include "tac/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "tac/lp.hpp"
#include "tac/rng.hpp"

namespace tac {

namespace {

constexpr double kIntTol = 1e-6;

// Which travel goods (dense index 0..15) a package uses.
const std::array<std::vector<int>, kNumPackages>& package_goods() {
  static const auto table = [] {
    std::array<std::vector<int>, kNumPackages> t;
    for (int f = 0; f < kNumPackages; ++f) {
      TravelPackage p = package_from_index(f);
      for_each_package_good(p, [&](GoodId g) { t[f].push_back(good_index(g)); });
    }
    return t;
  }();
  return table;
}

bool package_covers_day(int f, int day) {
  TravelPackage p = package_from_index(f);
  return p.arrival <= day && day < p.departure;
}

double x_frac(double v) { return v - std::round(v); }

}  // namespace

AllocationProblem AllocationProblem::from_prefs(std::vector<ClientPreference> prefs) {
  AllocationProblem p;
  p.prefs = std::move(prefs);
  p.package_value.resize(p.prefs.size());
  p.barred.assign(p.prefs.size(), {});
  for (std::size_t c = 0; c < p.prefs.size(); ++c) {
    for (int f = 0; f < kNumPackages; ++f) {
      p.package_value[c][f] = package_utility(p.prefs[c], package_from_index(f));
    }
  }
  p.price.fill(kUnbuyable);
  return p;
}

// ---------------------------------------------------------------------
// LP model of a (possibly partially fixed) problem.
// ---------------------------------------------------------------------

namespace {

struct Fixings {
  // -1 free, 0 or 1 fixed. Indexed c*20+f and c*12+e.
  std::vector<signed char> pkg;
  std::vector<signed char> ticket;

  explicit Fixings(int clients)
      : pkg(static_cast<std::size_t>(clients) * kNumPackages, -1),
        ticket(static_cast<std::size_t>(clients) * kNumEntGoods, -1) {}
};

struct IlpModel {
  bool infeasible = false;
  LpProblem lp;
  double obj_const = 0;
  // Variable maps (-1: not modeled / fixed).
  std::vector<int> pkg_var;
  std::vector<int> ticket_var;
  std::array<int, 16> buy_var{};
  std::array<int, 12> supply_row{};
};

// Builds the LP relaxation with fixed variables substituted into the
// right-hand sides. Variables fixed to zero (or dominated: zero-value or
// zero-supply tickets) are simply not modeled.
IlpModel build_model(const AllocationProblem& p, const Fixings& fix) {
  const int C = p.num_clients();
  IlpModel m;
  m.pkg_var.assign(static_cast<std::size_t>(C) * kNumPackages, -1);
  m.ticket_var.assign(static_cast<std::size_t>(C) * kNumEntGoods, -1);
  m.buy_var.fill(-1);
  m.supply_row.fill(-1);

  auto pk = [&](int c, int f) { return static_cast<std::size_t>(c) * kNumPackages + f; };
  auto tk = [&](int c, int e) { return static_cast<std::size_t>(c) * kNumEntGoods + e; };

  int nv = 0;
  std::vector<double> obj;
  for (int c = 0; c < C; ++c) {
    for (int f = 0; f < kNumPackages; ++f) {
      if (p.is_barred(c, f)) continue;
      signed char fx = fix.pkg[pk(c, f)];
      if (fx == 0) continue;
      if (fx == 1) {
        m.obj_const += static_cast<double>(p.package_value[c][f]);
        continue;
      }
      m.pkg_var[pk(c, f)] = nv++;
      obj.push_back(static_cast<double>(p.package_value[c][f]));
    }
  }
  for (int c = 0; c < C; ++c) {
    for (int e = 0; e < kNumEntGoods; ++e) {
      Money val = p.ticket_value(c, ent_type(ent_from_index(e)));
      signed char fx = fix.ticket[tk(c, e)];
      if (fx == 0) continue;
      if (fx == 1) {
        m.obj_const += static_cast<double>(val);
        continue;
      }
      if (val == 0) continue;
      if (p.owned_tickets[e] == 0 && !p.model_zero_supply_tickets) continue;
      m.ticket_var[tk(c, e)] = nv++;
      obj.push_back(static_cast<double>(val));
    }
  }
  for (int rd = 0; rd < 16; ++rd) {
    if (p.price[rd] == kUnbuyable) continue;
    m.buy_var[rd] = nv++;
    obj.push_back(-static_cast<double>(p.price[rd]));
  }
  m.lp.num_vars = nv;
  m.lp.objective = std::move(obj);

  auto add_row = [&](LpRow row) { m.lp.rows.push_back(std::move(row)); };

  // One package per client.
  for (int c = 0; c < C; ++c) {
    LpRow row;
    row.rhs = 1;
    for (int f = 0; f < kNumPackages; ++f) {
      if (fix.pkg[pk(c, f)] == 1) row.rhs -= 1;
      int v = m.pkg_var[pk(c, f)];
      if (v >= 0) row.coeffs.push_back({v, 1.0});
    }
    if (row.rhs < 0) {
      m.infeasible = true;
      return m;
    }
    if (!row.coeffs.empty()) add_row(std::move(row));
  }

  // Travel resource capacity: demand <= owned + bought.
  for (int rd = 0; rd < 16; ++rd) {
    LpRow row;
    row.rhs = p.owned_travel[rd];
    for (int c = 0; c < C; ++c) {
      for (int f = 0; f < kNumPackages; ++f) {
        const auto& goods = package_goods()[f];
        if (std::find(goods.begin(), goods.end(), rd) == goods.end()) continue;
        if (fix.pkg[pk(c, f)] == 1) row.rhs -= 1;
        int v = m.pkg_var[pk(c, f)];
        if (v >= 0) row.coeffs.push_back({v, 1.0});
      }
    }
    if (m.buy_var[rd] >= 0) row.coeffs.push_back({m.buy_var[rd], -1.0});
    if (row.rhs < 0 && m.buy_var[rd] < 0) {
      m.infeasible = true;
      return m;
    }
    // A row with rhs >= C can never bind (each client uses at most one
    // unit of any travel good).
    if (!row.coeffs.empty() && row.rhs < C) add_row(std::move(row));
  }

  // Ticket supply.
  for (int e = 0; e < kNumEntGoods; ++e) {
    LpRow row;
    row.rhs = p.owned_tickets[e];
    for (int c = 0; c < C; ++c) {
      if (fix.ticket[tk(c, e)] == 1) row.rhs -= 1;
      int v = m.ticket_var[tk(c, e)];
      if (v >= 0) row.coeffs.push_back({v, 1.0});
    }
    if (row.rhs < 0) {
      m.infeasible = true;
      return m;
    }
    if (!row.coeffs.empty()) {
      m.supply_row[e] = static_cast<int>(m.lp.rows.size());
      add_row(std::move(row));
    }
  }

  // A ticket needs a package covering its day.
  for (int c = 0; c < C; ++c) {
    for (int e = 0; e < kNumEntGoods; ++e) {
      int day = ent_from_index(e).day;
      double cover_fixed = 0;
      for (int f = 0; f < kNumPackages; ++f) {
        if (fix.pkg[pk(c, f)] == 1 && package_covers_day(f, day)) cover_fixed += 1;
      }
      signed char fe = fix.ticket[tk(c, e)];
      int v = m.ticket_var[tk(c, e)];
      if (fe == 1) {
        // 1 - (covering packages) <= 0 must stay satisfiable.
        LpRow row;
        row.rhs = cover_fixed - 1;
        for (int f = 0; f < kNumPackages; ++f) {
          int pv = m.pkg_var[pk(c, f)];
          if (pv >= 0 && package_covers_day(f, day)) row.coeffs.push_back({pv, -1.0});
        }
        if (row.coeffs.empty()) {
          if (row.rhs < 0) {
            m.infeasible = true;
            return m;
          }
        } else {
          add_row(std::move(row));
        }
        continue;
      }
      if (v < 0) continue;
      LpRow row;
      row.rhs = cover_fixed;
      row.coeffs.push_back({v, 1.0});
      for (int f = 0; f < kNumPackages; ++f) {
        int pv = m.pkg_var[pk(c, f)];
        if (pv >= 0 && package_covers_day(f, day)) row.coeffs.push_back({pv, -1.0});
      }
      if (cover_fixed < 1) add_row(std::move(row));
    }
  }

  // One ticket per day per client.
  for (int c = 0; c < C; ++c) {
    for (int day = 1; day <= 4; ++day) {
      LpRow row;
      row.rhs = 1;
      for (int t = 0; t < 3; ++t) {
        int e = ent_index(ent_good(static_cast<EntType>(t), day));
        if (fix.ticket[tk(c, e)] == 1) row.rhs -= 1;
        int v = m.ticket_var[tk(c, e)];
        if (v >= 0) row.coeffs.push_back({v, 1.0});
      }
      if (row.rhs < 0) {
        m.infeasible = true;
        return m;
      }
      if (!row.coeffs.empty()) add_row(std::move(row));
    }
  }

  // One ticket of each type per client.
  for (int c = 0; c < C; ++c) {
    for (int t = 0; t < 3; ++t) {
      LpRow row;
      row.rhs = 1;
      for (int day = 1; day <= 4; ++day) {
        int e = ent_index(ent_good(static_cast<EntType>(t), day));
        if (fix.ticket[tk(c, e)] == 1) row.rhs -= 1;
        int v = m.ticket_var[tk(c, e)];
        if (v >= 0) row.coeffs.push_back({v, 1.0});
      }
      if (row.rhs < 0) {
        m.infeasible = true;
        return m;
      }
      if (!row.coeffs.empty()) add_row(std::move(row));
    }
  }

  return m;
}

// Reconstructs the integer solution at a leaf (all package/ticket values
// fixed or integral in the LP), recomputing purchases and value exactly.
std::optional<AllocationSolution> extract_leaf(const AllocationProblem& p,
                                               const Fixings& fix, const IlpModel& m,
                                               const std::vector<double>& x) {
  const int C = p.num_clients();
  AllocationSolution s;
  s.status = AllocationSolution::Status::Optimal;
  s.assignment.resize(C);

  auto pk = [&](int c, int f) { return static_cast<std::size_t>(c) * kNumPackages + f; };
  auto tk = [&](int c, int e) { return static_cast<std::size_t>(c) * kNumEntGoods + e; };

  std::array<int, 16> usage{};
  Money value = 0;
  for (int c = 0; c < C; ++c) {
    for (int f = 0; f < kNumPackages; ++f) {
      bool take = fix.pkg[pk(c, f)] == 1;
      int v = m.pkg_var[pk(c, f)];
      if (v >= 0 && x[v] > 1.0 - kIntTol) take = true;
      if (!take) continue;
      if (s.assignment[c].package) return std::nullopt;
      s.assignment[c].package = package_from_index(f);
      value += p.package_value[c][f];
      for (int rd : package_goods()[f]) ++usage[rd];
    }
    for (int e = 0; e < kNumEntGoods; ++e) {
      bool take = fix.ticket[tk(c, e)] == 1;
      int v = m.ticket_var[tk(c, e)];
      if (v >= 0 && x[v] > 1.0 - kIntTol) take = true;
      if (!take) continue;
      GoodId g = ent_from_index(e);
      s.assignment[c].tickets.push_back({g.day, ent_type(g)});
      value += p.ticket_value(c, ent_type(g));
    }
    std::sort(s.assignment[c].tickets.begin(), s.assignment[c].tickets.end(),
              [](const TicketAward& a, const TicketAward& b) {
                return a.day != b.day ? a.day < b.day : a.type < b.type;
              });
  }
  for (int rd = 0; rd < 16; ++rd) {
    int buy = usage[rd] - p.owned_travel[rd];
    if (buy <= 0) continue;
    if (p.price[rd] == kUnbuyable) return std::nullopt;
    s.purchases[rd] = buy;
    value -= p.price[rd] * buy;
  }
  s.value = value;
  if (check_solution(p, s)) return std::nullopt;
  return s;
}

// Deterministic order among equal-value optima: package choices first,
// then ticket lists, client by client.
std::vector<int> solution_key(const AllocationSolution& s) {
  std::vector<int> key;
  for (const auto& a : s.assignment) {
    key.push_back(a.package ? package_index(*a.package) : kNumPackages);
    key.push_back(static_cast<int>(a.tickets.size()));
    for (const auto& t : a.tickets) key.push_back(t.day * 4 + static_cast<int>(t.type));
  }
  return key;
}

}  // namespace

std::optional<AllocationSolution> solve_exact(const AllocationProblem& p,
                                              std::uint64_t node_budget,
                                              Money value_floor) {
  const int C = p.num_clients();

  AllocationSolution best;
  best.assignment.resize(C);
  best.value = 0;
  Money best_value = std::max<Money>(0, value_floor);
  bool have_solution = value_floor <= 0;  // empty solution achieves 0
  std::vector<int> best_key = solution_key(best);

  std::uint64_t nodes = 0;
  int pivots = 0;
  bool root = true;
  bool root_seen = false;
  double root_lp = 0;
  std::array<double, 12> root_duals{};

  std::deque<Fixings> stack;
  stack.emplace_back(C);

  auto pk = [&](int c, int f) { return static_cast<std::size_t>(c) * kNumPackages + f; };
  auto tk = [&](int c, int e) { return static_cast<std::size_t>(c) * kNumEntGoods + e; };

  while (!stack.empty()) {
    Fixings fix = std::move(stack.back());
    stack.pop_back();
    if (++nodes > node_budget) return std::nullopt;

    IlpModel m = build_model(p, fix);
    bool is_root = root;
    root = false;
    if (m.infeasible) continue;

    LpSolution lp = lp_maximize(m.lp);
    pivots += lp.pivots;
    if (lp.status == LpStatus::Infeasible) continue;
    if (lp.status != LpStatus::Optimal) return std::nullopt;

    if (is_root) {
      root_seen = true;
      root_lp = lp.value + m.obj_const;
      for (int e = 0; e < kNumEntGoods; ++e) {
        root_duals[e] = m.supply_row[e] >= 0 ? lp.duals[m.supply_row[e]] : 0.0;
      }
    }

    Money bound = static_cast<Money>(std::floor(lp.value + m.obj_const + 1e-6));
    if (bound <= best_value) continue;

    // Most fractional free variable; packages branch before tickets.
    int branch_c = -1, branch_i = -1;
    bool branch_pkg = true;
    double best_frac = kIntTol;
    for (int c = 0; c < C; ++c) {
      for (int f = 0; f < kNumPackages; ++f) {
        int v = m.pkg_var[pk(c, f)];
        if (v < 0) continue;
        double frac = std::fabs(x_frac(lp.x[v]));
        if (frac > best_frac) {
          best_frac = frac;
          branch_c = c;
          branch_i = f;
        }
      }
    }
    if (branch_c < 0) {
      best_frac = kIntTol;
      for (int c = 0; c < C; ++c) {
        for (int e = 0; e < kNumEntGoods; ++e) {
          int v = m.ticket_var[tk(c, e)];
          if (v < 0) continue;
          double frac = std::fabs(x_frac(lp.x[v]));
          if (frac > best_frac) {
            best_frac = frac;
            branch_c = c;
            branch_i = e;
            branch_pkg = false;
          }
        }
      }
    }

    if (branch_c < 0) {
      auto leaf = extract_leaf(p, fix, m, lp.x);
      if (!leaf) continue;
      std::vector<int> key = solution_key(*leaf);
      if (leaf->value > best_value ||
          (leaf->value == best_value && (!have_solution || key < best_key))) {
        best_value = leaf->value;
        best = std::move(*leaf);
        best_key = std::move(key);
        have_solution = true;
      }
      continue;
    }

    Fixings zero = fix;
    Fixings one = std::move(fix);
    if (branch_pkg) {
      zero.pkg[pk(branch_c, branch_i)] = 0;
      one.pkg[pk(branch_c, branch_i)] = 1;
    } else {
      zero.ticket[tk(branch_c, branch_i)] = 0;
      one.ticket[tk(branch_c, branch_i)] = 1;
    }
    stack.push_back(std::move(zero));
    stack.push_back(std::move(one));  // explored first
  }

  best.value = best_value;
  best.at_floor = !have_solution;
  best.nodes = nodes;
  best.lp_pivots = pivots;
  best.has_root_lp = root_seen;
  best.root_lp_value = root_lp;
  best.ticket_supply_dual = root_duals;
  best.status = AllocationSolution::Status::Optimal;
  return best;
}

// ---------------------------------------------------------------------
// Greedy
// ---------------------------------------------------------------------

namespace {

struct GreedyPick {
  Money total = 0;
  int pkg = -1;
  std::vector<TicketAward> tickets;
  Money cost = 0;
};

// Exhaustive best (package, tickets) for one client against the remaining
// stock; tickets enumerate every injective type-to-day choice in span.
GreedyPick best_for_client(const AllocationProblem& p, int c,
                           const std::array<int, 16>& travel_left,
                           const std::array<int, 12>& tickets_left) {
  GreedyPick best;
  for (int f = 0; f < kNumPackages; ++f) {
    if (p.is_barred(c, f)) continue;
    Money cost = 0;
    bool ok = true;
    std::array<int, 16> used{};
    for (int rd : package_goods()[f]) {
      if (travel_left[rd] - used[rd] > 0) {
        ++used[rd];
      } else if (p.price[rd] != kUnbuyable) {
        cost += p.price[rd];
      } else {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    TravelPackage pkg = package_from_index(f);
    // DFS over days in the stay: each takes no ticket or one available
    // type not used yet.
    Money best_ev = 0;
    std::vector<TicketAward> best_tickets;
    std::vector<TicketAward> cur;
    auto dfs = [&](auto&& self, int day, unsigned type_mask, Money ev) -> void {
      if (day >= pkg.departure) {
        if (ev > best_ev) {
          best_ev = ev;
          best_tickets = cur;
        }
        return;
      }
      self(self, day + 1, type_mask, ev);
      for (int t = 0; t < 3; ++t) {
        if (type_mask & (1u << t)) continue;
        Money val = p.ticket_value(c, static_cast<EntType>(t));
        if (val == 0) continue;
        int e = ent_index(ent_good(static_cast<EntType>(t), day));
        if (tickets_left[e] == 0) continue;
        cur.push_back({day, static_cast<EntType>(t)});
        self(self, day + 1, type_mask | (1u << t), ev + val);
        cur.pop_back();
      }
    };
    dfs(dfs, pkg.arrival, 0, 0);

    Money total = p.package_value[c][f] - cost + best_ev;
    if (total > best.total) {
      best.total = total;
      best.pkg = f;
      best.tickets = std::move(best_tickets);
      best.cost = cost;
    }
  }
  return best;
}

}  // namespace

AllocationSolution greedy_one_ordering(const AllocationProblem& p,
                                       const std::vector<std::size_t>& order) {
  const int C = p.num_clients();
  AllocationSolution s;
  s.status = AllocationSolution::Status::Heuristic;
  s.assignment.resize(C);
  std::array<int, 16> travel_left = p.owned_travel;
  std::array<int, 12> tickets_left = p.owned_tickets;

  for (std::size_t c : order) {
    GreedyPick pick = best_for_client(p, static_cast<int>(c), travel_left, tickets_left);
    if (pick.pkg < 0 || pick.total <= 0) continue;
    s.value += pick.total;
    s.assignment[c].package = package_from_index(pick.pkg);
    for (int rd : package_goods()[pick.pkg]) {
      if (travel_left[rd] > 0) {
        --travel_left[rd];
      } else {
        ++s.purchases[rd];
      }
    }
    for (const TicketAward& t : pick.tickets) {
      --tickets_left[ent_index(ent_good(t.type, t.day))];
    }
    s.assignment[c].tickets = std::move(pick.tickets);
    std::sort(s.assignment[c].tickets.begin(), s.assignment[c].tickets.end(),
              [](const TicketAward& a, const TicketAward& b) {
                return a.day != b.day ? a.day < b.day : a.type < b.type;
              });
  }
  return s;
}

AllocationSolution solve_greedy(const AllocationProblem& p, int orderings,
                                std::uint64_t seed) {
  Rng rng(seed);
  AllocationSolution best;
  best.status = AllocationSolution::Status::Heuristic;
  best.assignment.resize(p.num_clients());
  bool first = true;
  for (int k = 0; k < orderings; ++k) {
    auto order = rng.permutation(static_cast<std::size_t>(p.num_clients()));
    AllocationSolution s = greedy_one_ordering(p, order);
    if (first || s.value > best.value) {
      best = std::move(s);
      first = false;
    }
  }
  return best;
}

AllocationSolution solve_adaptive(const AllocationProblem& p, AdaptiveState& state) {
  if (!state.demoted) {
    auto exact = solve_exact(p, state.node_budget);
    if (exact) return *exact;
    state.demoted = true;
  }
  return solve_greedy(p, state.greedy_orderings, state.greedy_seed);
}

AllocationProblem strip_purchases(const AllocationProblem& p) {
  AllocationProblem q = p;
  q.price.fill(kUnbuyable);
  q.model_zero_supply_tickets = false;
  return q;
}

AllocationSolution final_allocation(const AllocationProblem& p, AdaptiveState& state) {
  return solve_adaptive(strip_purchases(p), state);
}

// ---------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------

std::optional<std::string> check_solution(const AllocationProblem& p,
                                          const AllocationSolution& s) {
  const int C = p.num_clients();
  if (static_cast<int>(s.assignment.size()) != C) return "wrong assignment count";

  std::array<int, 16> usage{};
  std::array<int, 12> ticket_usage{};
  Money value = 0;

  for (int c = 0; c < C; ++c) {
    const ClientAssignment& a = s.assignment[c];
    if (!assignment_valid(a)) return "invalid assignment for client " + std::to_string(c);
    if (!a.package) continue;
    int f = package_index(*a.package);
    if (p.is_barred(c, f)) return "barred package for client " + std::to_string(c);
    value += p.package_value[c][f];
    for (int rd : package_goods()[f]) ++usage[rd];
    for (const TicketAward& t : a.tickets) {
      ++ticket_usage[ent_index(ent_good(t.type, t.day))];
      value += p.ticket_value(c, t.type);
    }
  }

  for (int rd = 0; rd < 16; ++rd) {
    if (s.purchases[rd] < 0) return "negative purchase";
    if (s.purchases[rd] > 0 && p.price[rd] == kUnbuyable) return "bought unbuyable good";
    if (usage[rd] > p.owned_travel[rd] + s.purchases[rd]) {
      return "over-used travel good " + good_code(good_from_index(rd));
    }
    if (s.purchases[rd] > 0) value -= p.price[rd] * s.purchases[rd];
  }
  for (int e = 0; e < kNumEntGoods; ++e) {
    if (ticket_usage[e] > p.owned_tickets[e]) {
      return "over-used ticket " + good_code(ent_from_index(e));
    }
  }
  if (value != s.value) {
    return "value mismatch: stated " + std::to_string(s.value) + " recomputed " +
           std::to_string(value);
  }
  return std::nullopt;
}

}  // namespace tac
