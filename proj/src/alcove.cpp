#include "gsp4/alcove.hpp"

#include <algorithm>
#include <set>

namespace gsp4 {

namespace {

int interior_alcove(Int x, Int y, Int p) {
  if (x > y && y > 0 && x + y < p) return 0;
  if (x + y > p && y < x && x < p) return 1;
  if (x - y < p && p < x && x + y < 2 * p) return 2;
  if (y < p && x + y > 2 * p && x - y < p) return 3;
  return -1;
}

std::pair<Int, Int> reflect_xy(int i, Int x, Int y, Int p) {
  switch (i) {
    case 0: return {p - y, p - x};
    case 1: return {2 * p - x, y};
    case 2: return {2 * p - y, 2 * p - x};
    default: fail(errc::bad_request, "wall index must be 0, 1 or 2");
  }
}

Weight with_xy(Int x, Int y, const Weight& like) { return Weight(x - 2, y - 1, like.c); }

// breadth-first closure under upward reflections, in (x,y) coordinates
std::set<std::pair<Int, Int>> up_closure(Int x, Int y, Int p) {
  std::set<std::pair<Int, Int>> seen = {{x, y}};
  std::vector<std::pair<Int, Int>> todo = {{x, y}};
  while (!todo.empty()) {
    auto [u, v] = todo.back();
    todo.pop_back();
    for (int i : alcove_closures(u, v, p)) {
      if (i >= 3) continue;
      auto r = reflect_xy(i, u, v, p);
      if (seen.insert(r).second) todo.push_back(r);
    }
  }
  return seen;
}

}  // namespace

std::vector<int> alcove_closures(Int x, Int y, Int p) {
  std::vector<int> out;
  if (x >= y && y >= 0 && x + y <= p) out.push_back(0);
  if (x + y >= p && y <= x && x <= p) out.push_back(1);
  if (x - y <= p && p <= x && x + y <= 2 * p) out.push_back(2);
  if (y <= p && x + y >= 2 * p && x - y <= p) out.push_back(3);
  return out;
}

std::string AlcovePosition::label() const {
  if (kind == Kind::interior) return "C" + std::to_string(alcove);
  if (kind == Kind::outside) return "outside";
  std::string s = "wall:";
  for (size_t i = 0; i < walls.size(); ++i) {
    if (i) s += ",";
    s += walls[i];
  }
  return s;
}

AlcovePosition classify(const Weight& lam, Int p) {
  auto [x, y] = alcove_xy(lam);
  AlcovePosition pos;
  pos.closures = alcove_closures(x, y, p);
  if (pos.closures.empty()) {
    pos.kind = AlcovePosition::Kind::outside;
    return pos;
  }
  if (int i = interior_alcove(x, y, p); i >= 0) {
    pos.kind = AlcovePosition::Kind::interior;
    pos.alcove = i;
    return pos;
  }
  pos.kind = AlcovePosition::Kind::wall;
  if (x == y) pos.walls.push_back("x=y");
  if (y == 0) pos.walls.push_back("y=0");
  if (x + y == p) pos.walls.push_back("x+y=p");
  if (x == p) pos.walls.push_back("x=p");
  if (x + y == 2 * p) pos.walls.push_back("x+y=2p");
  if (x - y == p) pos.walls.push_back("x-y=p");
  if (y == p) pos.walls.push_back("y=p");
  return pos;
}

Weight wall_reflect(int i, const Weight& lam, Int p) {
  auto [x, y] = alcove_xy(lam);
  auto [rx, ry] = reflect_xy(i, x, y, p);
  return with_xy(rx, ry, lam);
}

bool up_leq(const Weight& lam, const Weight& mu, Int p) {
  auto [x, y] = alcove_xy(lam);
  auto [mx, my] = alcove_xy(mu);
  if (alcove_closures(x, y, p).empty())
    fail(errc::outside_alcove_region, lam.str() + " is outside the alcove region");
  if (alcove_closures(mx, my, p).empty())
    fail(errc::outside_alcove_region, mu.str() + " is outside the alcove region");
  if (lam.c != mu.c) return false;
  return up_closure(x, y, p).count({mx, my}) != 0;
}

Weight up_transport(const Weight& lam, int j, Int p) {
  if (j < 0 || j > 3) fail(errc::bad_request, "target alcove must be 0..3");
  auto [x, y] = alcove_xy(lam);
  auto closures = alcove_closures(x, y, p);
  if (closures.empty())
    fail(errc::outside_alcove_region, lam.str() + " is outside the alcove region");
  if (j < closures.front())
    fail(errc::target_below_source,
         "cannot transport " + lam.str() + " down to C" + std::to_string(j));
  std::vector<std::pair<Int, Int>> hits;
  for (const auto& q : up_closure(x, y, p)) {
    auto cl = alcove_closures(q.first, q.second, p);
    if (std::find(cl.begin(), cl.end(), j) != cl.end()) hits.push_back(q);
  }
  if (hits.size() != 1)
    fail(errc::bad_request, "transport of " + lam.str() + " to C" + std::to_string(j) +
                                " is not unique (" + std::to_string(hits.size()) + " hits)");
  return with_xy(hits[0].first, hits[0].second, lam);
}

std::vector<Weight> up_set(const Weight& lam, Int p) {
  auto [x, y] = alcove_xy(lam);
  if (alcove_closures(x, y, p).empty())
    fail(errc::outside_alcove_region, lam.str() + " is outside the alcove region");
  std::vector<Weight> out;
  for (const auto& q : up_closure(x, y, p)) out.push_back(with_xy(q.first, q.second, lam));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gsp4
