#include "tac/goods.hpp"

#include <stdexcept>

namespace tac {

bool good_is_valid(GoodId g) {
  switch (g.kind) {
    case GoodKind::Inflight:
      return g.day >= 1 && g.day <= 4;
    case GoodKind::Outflight:
      return g.day >= 2 && g.day <= 5;
    default:
      return g.day >= 1 && g.day <= 4;
  }
}

bool is_flight(GoodId g) {
  return g.kind == GoodKind::Inflight || g.kind == GoodKind::Outflight;
}

bool is_hotel(GoodId g) {
  return g.kind == GoodKind::HotelBGH || g.kind == GoodKind::HotelLFI;
}

bool is_ent(GoodId g) {
  return g.kind == GoodKind::EntBaseball || g.kind == GoodKind::EntSymphony ||
         g.kind == GoodKind::EntTheater;
}

int good_index(GoodId g) {
  switch (g.kind) {
    case GoodKind::Inflight:
      return g.day - 1;
    case GoodKind::Outflight:
      return 4 + (g.day - 2);
    case GoodKind::HotelBGH:
      return 8 + (g.day - 1);
    case GoodKind::HotelLFI:
      return 12 + (g.day - 1);
    case GoodKind::EntBaseball:
      return 16 + (g.day - 1);
    case GoodKind::EntSymphony:
      return 20 + (g.day - 1);
    case GoodKind::EntTheater:
      return 24 + (g.day - 1);
  }
  throw std::logic_error("bad good kind");
}

GoodId good_from_index(int idx) {
  if (idx < 0 || idx >= kNumGoods) throw std::out_of_range("good index");
  if (idx < 4) return {GoodKind::Inflight, idx + 1};
  if (idx < 8) return {GoodKind::Outflight, idx - 4 + 2};
  if (idx < 12) return {GoodKind::HotelBGH, idx - 8 + 1};
  if (idx < 16) return {GoodKind::HotelLFI, idx - 12 + 1};
  if (idx < 20) return {GoodKind::EntBaseball, idx - 16 + 1};
  if (idx < 24) return {GoodKind::EntSymphony, idx - 20 + 1};
  return {GoodKind::EntTheater, idx - 24 + 1};
}

int hotel_index(GoodId g) {
  if (g.kind == GoodKind::HotelBGH) return g.day - 1;
  if (g.kind == GoodKind::HotelLFI) return 4 + (g.day - 1);
  throw std::logic_error("not a hotel good");
}

GoodId hotel_from_index(int idx) {
  if (idx < 0 || idx >= kNumHotelGoods) throw std::out_of_range("hotel index");
  return idx < 4 ? GoodId{GoodKind::HotelBGH, idx + 1}
                 : GoodId{GoodKind::HotelLFI, idx - 4 + 1};
}

int ent_index(GoodId g) {
  switch (g.kind) {
    case GoodKind::EntBaseball:
      return g.day - 1;
    case GoodKind::EntSymphony:
      return 4 + (g.day - 1);
    case GoodKind::EntTheater:
      return 8 + (g.day - 1);
    default:
      throw std::logic_error("not an entertainment good");
  }
}

GoodId ent_from_index(int idx) {
  if (idx < 0 || idx >= kNumEntGoods) throw std::out_of_range("ent index");
  if (idx < 4) return {GoodKind::EntBaseball, idx + 1};
  if (idx < 8) return {GoodKind::EntSymphony, idx - 4 + 1};
  return {GoodKind::EntTheater, idx - 8 + 1};
}

EntType ent_type(GoodId g) {
  switch (g.kind) {
    case GoodKind::EntBaseball:
      return EntType::Baseball;
    case GoodKind::EntSymphony:
      return EntType::Symphony;
    case GoodKind::EntTheater:
      return EntType::Theater;
    default:
      throw std::logic_error("not an entertainment good");
  }
}

GoodId ent_good(EntType t, int day) {
  switch (t) {
    case EntType::Baseball:
      return {GoodKind::EntBaseball, day};
    case EntType::Symphony:
      return {GoodKind::EntSymphony, day};
    case EntType::Theater:
      return {GoodKind::EntTheater, day};
  }
  throw std::logic_error("bad ent type");
}

std::string good_code(GoodId g) {
  switch (g.kind) {
    case GoodKind::Inflight:
      return "in" + std::to_string(g.day);
    case GoodKind::Outflight:
      return "out" + std::to_string(g.day);
    case GoodKind::HotelBGH:
      return "bgh" + std::to_string(g.day);
    case GoodKind::HotelLFI:
      return "lfi" + std::to_string(g.day);
    case GoodKind::EntBaseball:
      return "bb" + std::to_string(g.day);
    case GoodKind::EntSymphony:
      return "sy" + std::to_string(g.day);
    case GoodKind::EntTheater:
      return "th" + std::to_string(g.day);
  }
  throw std::logic_error("bad good kind");
}

std::optional<GoodId> good_from_code(const std::string& code) {
  auto split = [&](std::size_t n) -> std::optional<int> {
    if (code.size() != n + 1) return std::nullopt;
    char c = code[n];
    if (c < '1' || c > '5') return std::nullopt;
    return c - '0';
  };
  GoodId g;
  if (code.rfind("in", 0) == 0) {
    auto d = split(2);
    if (!d) return std::nullopt;
    g = {GoodKind::Inflight, *d};
  } else if (code.rfind("out", 0) == 0) {
    auto d = split(3);
    if (!d) return std::nullopt;
    g = {GoodKind::Outflight, *d};
  } else if (code.rfind("bgh", 0) == 0) {
    auto d = split(3);
    if (!d) return std::nullopt;
    g = {GoodKind::HotelBGH, *d};
  } else if (code.rfind("lfi", 0) == 0) {
    auto d = split(3);
    if (!d) return std::nullopt;
    g = {GoodKind::HotelLFI, *d};
  } else if (code.rfind("bb", 0) == 0) {
    auto d = split(2);
    if (!d) return std::nullopt;
    g = {GoodKind::EntBaseball, *d};
  } else if (code.rfind("sy", 0) == 0) {
    auto d = split(2);
    if (!d) return std::nullopt;
    g = {GoodKind::EntSymphony, *d};
  } else if (code.rfind("th", 0) == 0) {
    auto d = split(2);
    if (!d) return std::nullopt;
    g = {GoodKind::EntTheater, *d};
  } else {
    return std::nullopt;
  }
  if (!good_is_valid(g)) return std::nullopt;
  return g;
}

int package_index(const TravelPackage& p) {
  // (AD, DD) pairs in lexicographic order, each with BGH then LFI.
  int pair = 0;
  for (int ad = 1; ad <= 4; ++ad) {
    for (int dd = ad + 1; dd <= 5; ++dd) {
      if (ad == p.arrival && dd == p.departure) {
        return pair * 2 + (p.hotel == Hotel::LFI ? 1 : 0);
      }
      ++pair;
    }
  }
  throw std::logic_error("bad travel package");
}

TravelPackage package_from_index(int idx) {
  if (idx < 0 || idx >= kNumPackages) throw std::out_of_range("package index");
  int pair = idx / 2;
  for (int ad = 1; ad <= 4; ++ad) {
    for (int dd = ad + 1; dd <= 5; ++dd) {
      if (pair == 0) return {ad, dd, idx % 2 == 0 ? Hotel::BGH : Hotel::LFI};
      --pair;
    }
  }
  throw std::logic_error("unreachable");
}

std::string hotel_name(Hotel h) { return h == Hotel::BGH ? "BGH" : "LFI"; }

std::string ent_type_name(EntType t) {
  switch (t) {
    case EntType::Baseball:
      return "baseball";
    case EntType::Symphony:
      return "symphony";
    case EntType::Theater:
      return "theater";
  }
  return "?";
}

}  // namespace tac
