#include "charbound/weights.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace charbound::weights {

const char* rs_name(RSType t) {
  switch (t) {
    case RSType::A1: return "A1";
    case RSType::A2: return "A2";
    case RSType::A3: return "A3";
    case RSType::C2: return "C2";
  }
  return "?";
}

namespace {

// Simple roots expressed in fundamental-weight coordinates (columns of the
// Cartan matrix).  For C2 the first simple root is long, so the second
// fundamental weight is the minuscule one.
std::vector<Weight> simple_roots_for(RSType t) {
  switch (t) {
    case RSType::A1: return {{2}};
    case RSType::A2: return {{2, -1}, {-1, 2}};
    case RSType::A3: return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    case RSType::C2: return {{2, -2}, {-1, 2}};
  }
  throw std::logic_error("simple_roots_for");
}

constexpr std::size_t expected_weyl_size(RSType t) {
  switch (t) {
    case RSType::A1: return 2;
    case RSType::A2: return 6;
    case RSType::A3: return 24;
    case RSType::C2: return 8;
  }
  return 0;
}

}  // namespace

RootSystem::RootSystem(RSType type) : type_(type) {
  roots_ = simple_roots_for(type);
  rank_ = static_cast<int>(roots_.size());
  const int r = rank_;

  // reflection matrices s_i = I - alpha_i * e_i^T
  std::vector<std::array<int, 9>> gens;
  for (int i = 0; i < r; ++i) {
    std::array<int, 9> m{};
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) m[j * r + k] = (j == k) - (k == i) * roots_[i][j];
    gens.push_back(m);
  }
  auto mul = [r](const std::array<int, 9>& a, const std::array<int, 9>& b) {
    std::array<int, 9> c{};
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        int s = 0;
        for (int k = 0; k < r; ++k) s += a[i * r + k] * b[k * r + j];
        c[i * r + j] = s;
      }
    return c;
  };
  std::array<int, 9> id{};
  for (int i = 0; i < r; ++i) id[i * r + i] = 1;
  std::set<std::array<int, 9>> seen{id};
  std::queue<std::array<int, 9>> todo;
  todo.push(id);
  while (!todo.empty()) {
    auto w = todo.front();
    todo.pop();
    for (const auto& g : gens) {
      auto x = mul(g, w);
      if (seen.insert(x).second) todo.push(x);
    }
  }
  weyl_.assign(seen.begin(), seen.end());
  if (weyl_.size() != expected_weyl_size(type))
    throw std::logic_error("RootSystem: Weyl group closure has wrong order");

  // adjugate and determinant of the matrix whose columns are the simple
  // roots, for expanding weights in the root basis
  long m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) m[i][j] = roots_[j][i];
  if (r == 1) {
    det_ = m[0][0];
    adj_[0][0] = 1;
  } else if (r == 2) {
    det_ = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    adj_[0][0] = m[1][1];
    adj_[0][1] = -m[0][1];
    adj_[1][0] = -m[1][0];
    adj_[1][1] = m[0][0];
  } else {
    auto co = [&](int i, int j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      if (r0 > r1) std::swap(r0, r1);
      if (c0 > c1) std::swap(c0, c1);
      long minor = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
      return ((i + j) % 2 == 0) ? minor : -minor;
    };
    det_ = m[0][0] * co(0, 0) + m[0][1] * co(0, 1) + m[0][2] * co(0, 2);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) adj_[i][j] = co(j, i);
  }
}

const RootSystem& RootSystem::get(RSType type) {
  static const RootSystem a1(RSType::A1), a2(RSType::A2), a3(RSType::A3), c2(RSType::C2);
  switch (type) {
    case RSType::A1: return a1;
    case RSType::A2: return a2;
    case RSType::A3: return a3;
    case RSType::C2: return c2;
  }
  throw std::logic_error("RootSystem::get");
}

Weight RootSystem::apply(std::size_t w, const Weight& v) const {
  const auto& m = weyl_[w];
  Weight out(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    int s = 0;
    for (int k = 0; k < rank_; ++k) s += m[i * rank_ + k] * v[k];
    out[i] = s;
  }
  return out;
}

bool RootSystem::dominant(const Weight& v) const {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

Weight RootSystem::dominant_rep(const Weight& v) const {
  Weight cur = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < rank_; ++i) {
      if (cur[i] < 0) {
        int c = cur[i];
        for (int j = 0; j < rank_; ++j) cur[j] -= c * roots_[i][j];
        changed = true;
      }
    }
  }
  return cur;
}

bool RootSystem::root_coords(const Weight& v, std::vector<Int>* coeffs) const {
  std::vector<long> num(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    long s = 0;
    for (int j = 0; j < rank_; ++j) s += adj_[i][j] * v[j];
    num[i] = s;
  }
  for (int i = 0; i < rank_; ++i) {
    if (num[i] % det_ != 0) return false;
    long c = num[i] / det_;
    if (c < 0) return false;
    if (coeffs) (*coeffs)[i] = c;
  }
  return true;
}

std::int64_t weyl_orbit_size(const RootSystem& rs, const Weight& w) {
  if (!rs.dominant(w)) throw std::invalid_argument("weyl_orbit_size: weight not dominant");
  std::size_t stab = 0;
  for (std::size_t i = 0; i < rs.weyl_size(); ++i)
    if (rs.apply(i, w) == w) ++stab;
  return static_cast<std::int64_t>(rs.weyl_size() / stab);
}

namespace {

// BFS over the full weight set of V(lambda): mu belongs iff its dominant
// representative is subdominant to lambda.  Simple-root steps stay inside
// the set, so the traversal reaches every weight.
std::set<Weight> weight_set(const RootSystem& rs, const Weight& lambda) {
  if (!rs.dominant(lambda)) throw std::invalid_argument("weights: lambda not dominant");
  std::set<Weight> seen;
  std::queue<Weight> todo;
  seen.insert(lambda);
  todo.push(lambda);
  while (!todo.empty()) {
    Weight mu = todo.front();
    todo.pop();
    for (const auto& alpha : rs.simple_roots()) {
      Weight nu(mu);
      for (int j = 0; j < rs.rank(); ++j) nu[j] -= alpha[j];
      if (seen.count(nu)) continue;
      Weight diff(rs.rank());
      Weight dom = rs.dominant_rep(nu);
      for (int j = 0; j < rs.rank(); ++j) diff[j] = lambda[j] - dom[j];
      if (!rs.root_coords(diff)) continue;
      seen.insert(nu);
      todo.push(nu);
    }
  }
  return seen;
}

}  // namespace

std::vector<std::pair<Weight, std::int64_t>> subdominant_weights(const RootSystem& rs,
                                                                 const Weight& lambda) {
  auto all = weight_set(rs, lambda);
  std::vector<std::pair<Weight, std::int64_t>> out;
  for (const auto& mu : all)
    if (rs.dominant(mu)) out.emplace_back(mu, weyl_orbit_size(rs, mu));
  auto height = [&](const Weight& w) {
    std::vector<Int> c(rs.rank());
    Weight diff(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) diff[j] = lambda[j] - w[j];
    rs.root_coords(diff, &c);
    Int h = 0;
    for (const auto& x : c) h += x;
    return h;
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    Int ha = height(a.first), hb = height(b.first);
    if (ha != hb) return ha < hb;
    return a.first < b.first;
  });
  return out;
}

Int premet_bound(const RootSystem& rs, const Weight& lambda) {
  return Int(weight_set(rs, lambda).size());
}

std::int64_t weight_count(RSType type, const Weight& lambda) {
  for (int x : lambda)
    if (x < 0) throw std::invalid_argument("weight_count: lambda not dominant");
  switch (type) {
    case RSType::A1:
      return lambda[0] + 1;
    case RSType::A2: {
      std::int64_t a = lambda[0], b = lambda[1];
      return (a * a + b * b + 4 * a * b + 3 * a + 3 * b + 2) / 2;
    }
    case RSType::C2: {
      std::int64_t a = lambda[0], b = lambda[1];
      return 2 * a * a + 4 * a * b + b * b + 2 * a + 2 * b + 1;
    }
    case RSType::A3: {
      // lattice-point count of the A3 weight polytope: a single cubic by
      // McMullen's theorem for Minkowski sums of the three hypersimplices
      std::int64_t a = lambda[0], b = lambda[1], c = lambda[2];
      std::int64_t v = 6 + 11 * c + 6 * c * c + c * c * c + 14 * b + 24 * b * c +
                       6 * b * c * c + 12 * b * b + 12 * b * b * c + 4 * b * b * b +
                       11 * a + 18 * a * c + 9 * a * c * c + 24 * a * b +
                       36 * a * b * c + 12 * a * b * b + 6 * a * a + 9 * a * a * c +
                       6 * a * a * b + a * a * a;
      return v / 6;
    }
  }
  throw std::logic_error("weight_count");
}

int central_character(CCFamily family, const Weight& lambda, int q_sign) {
  if (q_sign != 1 && q_sign != -1)
    throw std::invalid_argument("central_character: q_sign must be +-1");
  switch (family) {
    case CCFamily::A2:
      return ((lambda[0] + 2 * lambda[1]) % 3 + 3) % 3;
    case CCFamily::A3:
      return ((lambda[0] + 2 * lambda[1] + 3 * lambda[2]) % 4 + 4) % 4;
    case CCFamily::C2:
      return ((lambda[1]) % 2 + 2) % 2;
  }
  throw std::invalid_argument("central_character: unsupported family");
}

}  // namespace charbound::weights
