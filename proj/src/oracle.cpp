#include "charbound/oracle.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>

#include "charbound/lie_registry.hpp"
#include "charbound/regclasses.hpp"

namespace charbound::oracle {

namespace {

/// Finite field with multiplication/addition tables; prime fields use
/// plain modular arithmetic, q = 4, 8, 9 fixed polynomial bases.
struct Field {
  int q, p;
  std::vector<std::uint8_t> add, mul;

  int at_add(int a, int b) const { return add[a * q + b]; }
  int at_mul(int a, int b) const { return mul[a * q + b]; }

  explicit Field(const PrimePower& pp) : q(static_cast<int>(pp.value)), p(static_cast<int>(pp.p)) {
    add.resize(q * q);
    mul.resize(q * q);
    if (pp.f == 1) {
      for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
          add[a * q + b] = static_cast<std::uint8_t>((a + b) % q);
          mul[a * q + b] = static_cast<std::uint8_t>((a * b) % q);
        }
      return;
    }
    // polynomial basis: digits base p, reduction by a fixed irreducible
    // x^k = red(x)
    int k = pp.f;
    std::vector<int> red;
    if (q == 4) red = {1, 1};        // x^2 = x + 1
    else if (q == 8) red = {1, 1, 0}; // x^3 = x + 1
    else if (q == 9) red = {2, 0};    // x^2 = 2
    else throw std::invalid_argument("Field: unsupported non-prime q");
    auto digits = [&](int a) {
      std::vector<int> d(k);
      for (int i = 0; i < k; ++i) {
        d[i] = a % p;
        a /= p;
      }
      return d;
    };
    auto code = [&](const std::vector<int>& d) {
      int a = 0;
      for (int i = k - 1; i >= 0; --i) a = a * p + d[i];
      return a;
    };
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<int> s(k);
        for (int i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
        add[a * q + b] = static_cast<std::uint8_t>(code(s));
        std::vector<int> prod(2 * k - 1, 0);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (int d = 2 * k - 2; d >= k; --d) {
          int c = prod[d];
          if (c == 0) continue;
          prod[d] = 0;
          for (int i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + c * red[i]) % p;
        }
        prod.resize(k);
        mul[a * q + b] = static_cast<std::uint8_t>(code(prod));
      }
  }

  int neg(int a) const {
    for (int b = 0; b < q; ++b)
      if (at_add(a, b) == 0) return b;
    throw std::logic_error("Field: no negative");
  }
};

Mat mat_mul(const Field& F, const Mat& x, const Mat& y) {
  auto mm = [&](int a, int b, int c, int d) { return F.at_add(F.at_mul(a, b), F.at_mul(c, d)); };
  return {static_cast<std::uint8_t>(mm(x[0], y[0], x[1], y[2])),
          static_cast<std::uint8_t>(mm(x[0], y[1], x[1], y[3])),
          static_cast<std::uint8_t>(mm(x[2], y[0], x[3], y[2])),
          static_cast<std::uint8_t>(mm(x[2], y[1], x[3], y[3]))};
}

Mat mat_inv(const Field& F, const Mat& x) {
  // det = 1, so the inverse is the adjugate
  return {x[3], static_cast<std::uint8_t>(F.neg(x[1])), static_cast<std::uint8_t>(F.neg(x[2])),
          x[0]};
}

int mat_code(int q, const Mat& m) { return ((m[0] * q + m[1]) * q + m[2]) * q + m[3]; }

}  // namespace

SmallGroup enumerate(const PrimePower& q) {
  if (q.value > 11) throw std::invalid_argument("enumerate: q > 11 refused (size guard)");
  Field F(q);
  const int qq = F.q;
  SmallGroup g{q, {}, {}};
  for (int a = 0; a < qq; ++a)
    for (int b = 0; b < qq; ++b)
      for (int c = 0; c < qq; ++c)
        for (int d = 0; d < qq; ++d) {
          int det = F.at_add(F.at_mul(a, d), F.neg(F.at_mul(b, c)));
          if (det == 1)
            g.elements.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                  static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)});
        }
  const std::int64_t n = g.order();
  if (n != static_cast<std::int64_t>(qq) * (qq * qq - 1))
    throw std::logic_error("enumerate: |SL2(q)| != q(q^2-1)");

  std::vector<std::int64_t> index(qq * qq * qq * qq, -1);
  for (std::int64_t i = 0; i < n; ++i) index[mat_code(qq, g.elements[i])] = i;

  std::vector<char> assigned(n, 0);
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    // conjugation orbit of element i
    std::vector<std::int64_t> orbit{i};
    assigned[i] = 1;
    for (std::size_t h = 0; h < orbit.size(); ++h) {
      const Mat& x = g.elements[orbit[h]];
      for (std::int64_t gi = 0; gi < n; ++gi) {
        Mat y = mat_mul(F, mat_mul(F, g.elements[gi], x), mat_inv(F, g.elements[gi]));
        std::int64_t yi = index[mat_code(qq, y)];
        if (!assigned[yi]) {
          assigned[yi] = 1;
          orbit.push_back(yi);
        }
      }
    }
    // centralizer counted directly as a cross-check on |class| * |C| = |G|
    const Mat& rep = g.elements[i];
    std::int64_t cent = 0;
    for (std::int64_t gi = 0; gi < n; ++gi)
      if (mat_mul(F, g.elements[gi], rep) == mat_mul(F, rep, g.elements[gi])) ++cent;
    if (cent * static_cast<std::int64_t>(orbit.size()) != n)
      throw std::logic_error("enumerate: class size times centralizer != |G|");
    g.classes.push_back({i, static_cast<std::int64_t>(orbit.size()), cent});
    total += static_cast<std::int64_t>(orbit.size());
  }
  if (total != n) throw std::logic_error("enumerate: class equation violated");
  return g;
}

int regular_ss_classes(const SmallGroup& g) {
  int count = 0;
  for (const auto& c : g.classes)
    if (c.centralizer % g.q.p != 0) ++count;
  return count;
}

TorusSplit compare_with_tables(const SmallGroup& g) {
  const std::int64_t q = g.q.value;
  if (q < 4) throw std::invalid_argument("compare_with_tables: q >= 4 (quasi-simple range)");
  TorusSplit ts;
  for (const auto& c : g.classes) {
    if (c.centralizer % g.q.p == 0) continue;
    if (c.centralizer == q - 1)
      ++ts.count_q_minus_1;
    else if (c.centralizer == q + 1)
      ++ts.count_q_plus_1;
    else
      throw std::logic_error("compare_with_tables: regular centralizer is not a torus order");
  }
  lie::GroupSpec spec(lie::Family::A, 2, g.q);
  for (const auto& entry : lie::torus_entries(spec)) {
    auto rb = regclasses::nreg_lower_bound(spec, entry);
    if (entry.order == q + 1) ts.bound_q_plus_1 = rb.bound;
    if (entry.order == q - 1) ts.bound_q_minus_1 = rb.bound;
  }
  ts.counts_ok =
      ts.count_q_minus_1 >= ts.bound_q_minus_1 && ts.count_q_plus_1 >= ts.bound_q_plus_1;
  auto split = exactnum::p_part_split(Int(g.order()), Int(g.q.p));
  ts.pprime_ok = split.second == q * q - 1;
  return ts;
}

}  // namespace charbound::oracle
