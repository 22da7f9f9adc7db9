#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tac/allocator.hpp"

namespace tac {

void write_problem(std::ostream& out, const AllocationProblem& p) {
  out << "clients " << p.num_clients() << "\n";
  for (int c = 0; c < p.num_clients(); ++c) {
    const ClientPreference& pr = p.prefs[c];
    out << "pref " << c << " " << pr.ideal_arrival << " " << pr.ideal_departure << " "
        << pr.hotel_value << " " << pr.ent_value[0] << " " << pr.ent_value[1] << " "
        << pr.ent_value[2] << "\n";
  }
  for (int rd = 0; rd < 16; ++rd) {
    if (p.owned_travel[rd] != 0) {
      out << "owned " << good_code(good_from_index(rd)) << " " << p.owned_travel[rd] << "\n";
    }
  }
  for (int e = 0; e < kNumEntGoods; ++e) {
    if (p.owned_tickets[e] != 0) {
      out << "owned " << good_code(ent_from_index(e)) << " " << p.owned_tickets[e] << "\n";
    }
  }
  for (int rd = 0; rd < 16; ++rd) {
    out << "price " << good_code(good_from_index(rd)) << " ";
    if (p.price[rd] == kUnbuyable) {
      out << "inf";
    } else {
      out << p.price[rd];
    }
    out << "\n";
  }
  for (int c = 0; c < p.num_clients(); ++c) {
    for (int f = 0; f < kNumPackages; ++f) {
      if (p.is_barred(c, f)) out << "barred " << c << " " << f << "\n";
    }
  }
  out << "end\n";
}

AllocationProblem read_problem(std::istream& in) {
  std::vector<ClientPreference> prefs;
  struct Pending {
    std::array<int, 16> owned_travel{};
    std::array<int, 12> owned_tickets{};
    std::array<Money, 16> price{};
    std::vector<std::pair<int, int>> barred;
  } pend;
  pend.price.fill(kUnbuyable);

  int declared = -1;
  std::string line;
  bool done = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "clients") {
      ls >> declared;
    } else if (word == "pref") {
      int c;
      ClientPreference pr;
      ls >> c >> pr.ideal_arrival >> pr.ideal_departure >> pr.hotel_value >>
          pr.ent_value[0] >> pr.ent_value[1] >> pr.ent_value[2];
      if (!ls) throw std::runtime_error("bad pref line: " + line);
      if (static_cast<int>(prefs.size()) != c) throw std::runtime_error("prefs out of order");
      prefs.push_back(pr);
    } else if (word == "owned") {
      std::string code;
      int qty;
      ls >> code >> qty;
      auto g = good_from_code(code);
      if (!g || !ls) throw std::runtime_error("bad owned line: " + line);
      if (is_ent(*g)) {
        pend.owned_tickets[ent_index(*g)] += qty;
      } else {
        pend.owned_travel[good_index(*g)] += qty;
      }
    } else if (word == "price") {
      std::string code, val;
      ls >> code >> val;
      auto g = good_from_code(code);
      if (!g || is_ent(*g) || !ls) throw std::runtime_error("bad price line: " + line);
      pend.price[good_index(*g)] = val == "inf" ? kUnbuyable : std::stoll(val);
    } else if (word == "barred") {
      int c, f;
      ls >> c >> f;
      if (!ls) throw std::runtime_error("bad barred line: " + line);
      pend.barred.push_back({c, f});
    } else if (word == "end") {
      done = true;
      break;
    } else {
      throw std::runtime_error("unknown problem line: " + line);
    }
  }
  if (!done) throw std::runtime_error("problem dump truncated (missing 'end')");
  if (declared >= 0 && declared != static_cast<int>(prefs.size())) {
    throw std::runtime_error("client count mismatch");
  }
  AllocationProblem p = AllocationProblem::from_prefs(std::move(prefs));
  p.owned_travel = pend.owned_travel;
  p.owned_tickets = pend.owned_tickets;
  p.price = pend.price;
  for (auto [c, f] : pend.barred) {
    if (c < 0 || c >= p.num_clients() || f < 0 || f >= kNumPackages) {
      throw std::runtime_error("barred index out of range");
    }
    p.barred[c][f] = true;
  }
  return p;
}

void write_solution(std::ostream& out, const AllocationSolution& s) {
  out << "status "
      << (s.status == AllocationSolution::Status::Optimal ? "optimal" : "heuristic") << "\n";
  for (std::size_t c = 0; c < s.assignment.size(); ++c) {
    const ClientAssignment& a = s.assignment[c];
    if (!a.package) {
      out << "assign " << c << " none\n";
      continue;
    }
    out << "assign " << c << " " << a.package->arrival << " " << a.package->departure << " "
        << hotel_name(a.package->hotel);
    for (const TicketAward& t : a.tickets) {
      out << " " << good_code(ent_good(t.type, t.day));
    }
    out << "\n";
  }
  for (int rd = 0; rd < 16; ++rd) {
    if (s.purchases[rd] > 0) {
      out << "buy " << good_code(good_from_index(rd)) << " " << s.purchases[rd] << "\n";
    }
  }
  out << "value " << s.value << "\n";
}

}  // namespace tac
