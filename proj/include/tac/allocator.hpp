#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tac/clients.hpp"
#include "tac/goods.hpp"
#include "tac/money.hpp"

namespace tac {

// The allocation integer program: which travel package (if any) each
// client gets, which owned tickets go to whom, and how many of each
// flight/hotel good to buy at the quoted effective prices. Maximizes
// total client utility minus purchase cost.
struct AllocationProblem {
  std::vector<ClientPreference> prefs;
  // u_P(c, f): package-only utility, cents. Always > 0.
  std::vector<std::array<Money, kNumPackages>> package_value;
  // Owned flight/hotel units, dense good_index 0..15.
  std::array<int, 16> owned_travel{};
  // Effective unit prices for flight/hotel goods; kUnbuyable forbids
  // purchase entirely (closed auction with nothing owned).
  std::array<Money, 16> price{};
  // Owned entertainment tickets by ent_index 0..11.
  std::array<int, 12> owned_tickets{};
  // Packages a client may not take (used for marginal-value queries).
  std::vector<std::array<bool, kNumPackages>> barred;
  // Keep ticket variables in the relaxation even for goods with zero
  // supply, so their supply rows carry shadow prices. The optimum is the
  // same either way; bidding code turns this on to price one-more-ticket
  // queries cheaply.
  bool model_zero_supply_tickets = false;

  int num_clients() const { return static_cast<int>(prefs.size()); }
  Money ticket_value(int c, EntType t) const { return prefs[c].ent(t); }
  bool is_barred(int c, int f) const { return !barred.empty() && barred[c][f]; }

  static AllocationProblem from_prefs(std::vector<ClientPreference> prefs);
};

struct AllocationSolution {
  enum class Status { Optimal, Heuristic };
  Status status = Status::Optimal;
  Money value = 0;
  std::vector<ClientAssignment> assignment;  // per client
  std::array<int, 16> purchases{};           // units bought per travel good

  // Search metadata (exact path only).
  std::uint64_t nodes = 0;
  int lp_pivots = 0;
  bool has_root_lp = false;
  double root_lp_value = 0;
  std::array<double, 12> ticket_supply_dual{};  // shadow price per ent good
  bool at_floor = false;  // nothing above the caller's floor was found
};

// Exact solve via branch and bound on the LP relaxation. `node_budget`
// bounds the number of search nodes; exceeding it yields nullopt
// (timeout). `value_floor`, when >= 0, is a known-achievable objective
// value: subtrees that cannot beat it are pruned, and if nothing beats it
// the result reports exactly that value with `at_floor` set.
std::optional<AllocationSolution> solve_exact(const AllocationProblem& p,
                                              std::uint64_t node_budget = 1u << 20,
                                              Money value_floor = -1);

// Greedy over `orderings` seeded random client orderings; each client in
// turn takes its best feasible (package, tickets, purchases) given what
// is left. Returns the best ordering's result.
AllocationSolution solve_greedy(const AllocationProblem& p, int orderings,
                                std::uint64_t seed);

// Single fixed ordering (exposed for tests of ordering sensitivity).
AllocationSolution greedy_one_ordering(const AllocationProblem& p,
                                       const std::vector<std::size_t>& order);

// Tracks the in-game demotion of the exact solver. Once any solve blows
// the budget, the rest of the game uses the greedy path.
struct AdaptiveState {
  bool demoted = false;
  std::uint64_t node_budget = 12000;  // ~6 simulated seconds of search
  int greedy_orderings = 100;
  std::uint64_t greedy_seed = 0;
};

AllocationSolution solve_adaptive(const AllocationProblem& p, AdaptiveState& state);

// End-of-game allocation: nothing is buyable, owned goods only.
AllocationProblem strip_purchases(const AllocationProblem& p);
AllocationSolution final_allocation(const AllocationProblem& p, AdaptiveState& state);

// Recomputes the objective and checks every constraint family. Returns an
// error description, or nullopt when the solution is consistent.
std::optional<std::string> check_solution(const AllocationProblem& p,
                                          const AllocationSolution& s);

// Line-oriented dump format (see README): prefs, owned goods, prices.
void write_problem(std::ostream& out, const AllocationProblem& p);
AllocationProblem read_problem(std::istream& in);
void write_solution(std::ostream& out, const AllocationSolution& s);

}  // namespace tac
