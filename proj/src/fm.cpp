#include "flatcert/fm.hpp"

#include <algorithm>
#include <map>

namespace flatcert {

namespace {

enum class Fate { Keep, Drop, Infeasible };

// Range of the row's affine part over the box, for variables >= first.
Fate classify(const Row3& r, const Box3& box, int first) {
  Rational lo = r.c[0], hi = r.c[0];
  for (int k = first; k < 3; ++k) {
    const Rational& a = r.c[k + 1];
    if (a > 0) {
      lo += a * box.lo[k];
      hi += a * box.hi[k];
    } else if (a < 0) {
      lo += a * box.hi[k];
      hi += a * box.lo[k];
    }
  }
  if (r.strict ? lo > 0 : lo >= 0) return Fate::Drop;
  if (r.strict ? hi <= 0 : hi < 0) return Fate::Infeasible;
  return Fate::Keep;
}

void normalize(Row3& r) {
  for (int k = 1; k < 4; ++k) {
    if (r.c[k] != 0) {
      Rational s = abs_q(r.c[k]);
      for (auto& x : r.c) x /= s;
      return;
    }
  }
}

struct CoefLess {
  bool operator()(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) const {
    return a < b;
  }
};

// Keeps the tightest row per direction; returns false on a violated constant row.
bool tidy(std::vector<Row3>& rows, const Box3& box, int first) {
  std::map<std::array<Rational, 3>, Row3, CoefLess> best;
  for (auto& r : rows) {
    bool has_var = false;
    for (int k = 1; k < 4; ++k) has_var = has_var || r.c[k] != 0;
    if (!has_var) {
      if (r.strict ? r.c[0] <= 0 : r.c[0] < 0) return false;
      continue;
    }
    switch (classify(r, box, first)) {
      case Fate::Drop: continue;
      case Fate::Infeasible: return false;
      case Fate::Keep: break;
    }
    normalize(r);
    std::array<Rational, 3> key{r.c[1], r.c[2], r.c[3]};
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(key, r);
    } else {
      Row3& b = it->second;
      // smaller constant is tighter; at equal constants strict wins
      if (r.c[0] < b.c[0] || (r.c[0] == b.c[0] && r.strict)) b = r;
    }
  }
  rows.clear();
  for (auto& [k, r] : best) rows.push_back(r);
  return true;
}

}  // namespace

bool fm_feasible(const std::vector<Row3>& input, const Box3& box) {
  for (int k = 0; k < 3; ++k)
    if (box.lo[k] > box.hi[k]) return false;
  std::vector<Row3> rows = input;
  if (!tidy(rows, box, 0)) return false;
  for (int k = 0; k < 3; ++k) {
    const int col = k + 1;
    // the box bounds on x_k take part in the elimination
    std::vector<Row3> pos{Row3{{-box.lo[k], 0, 0, 0}, false}}, neg{Row3{{box.hi[k], 0, 0, 0}, false}};
    pos[0].c[col] = 1;
    neg[0].c[col] = -1;
    std::vector<Row3> next;
    for (auto& r : rows) {
      if (r.c[col] > 0)
        pos.push_back(r);
      else if (r.c[col] < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Rational wp = -n.c[col], wn = p.c[col];
        Row3 m;
        for (int j = 0; j < 4; ++j) m.c[j] = wp * p.c[j] + wn * n.c[j];
        m.c[col] = 0;
        m.strict = p.strict || n.strict;
        next.push_back(std::move(m));
      }
    rows = std::move(next);
    if (!tidy(rows, box, k + 1)) return false;
  }
  return true;
}

}  // namespace flatcert
