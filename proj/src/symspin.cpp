#include "charbound/symspin.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace charbound::symspin {

StrictPartition::StrictPartition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("StrictPartition: parts must be positive");
    if (i > 0 && parts[i] >= parts[i - 1])
      throw std::invalid_argument("StrictPartition: parts must strictly decrease");
  }
}

int StrictPartition::n() const {
  int s = 0;
  for (int x : parts) s += x;
  return s;
}

std::string StrictPartition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

SpinFamilyIndex::SpinFamilyIndex(int l_) : l(l_) {
  if (l < 1) throw std::invalid_argument("SpinFamilyIndex: l >= 1");
  if (p1().n() != n1() || p2().n() != n2())
    throw std::logic_error("SpinFamilyIndex: staircase sums are off");
}

StrictPartition SpinFamilyIndex::p1() const {
  std::vector<int> parts;
  for (int a = 4 * l - 3; a >= 1; a -= 4) parts.push_back(a);
  return StrictPartition(parts);
}

StrictPartition SpinFamilyIndex::p2() const {
  std::vector<int> parts;
  for (int a = 4 * l - 1; a >= 3; a -= 4) parts.push_back(a);
  return StrictPartition(parts);
}

const Int& factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: n < 0");
  // deque: growth never moves existing entries, so returned references
  // stay valid after the lock is released
  static std::deque<Int> table{1};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= n) table.push_back(table.back() * Int(table.size()));
  return table[n];
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return exact_div(factorial(n), factorial(k) * factorial(n - k));
}

Int odd_part_factorial(int n) {
  Int f = factorial(n);
  return f >> lsb(f);
}

Int spin_degree(const StrictPartition& lambda) {
  const auto& parts = lambda.parts;
  const int n = lambda.n(), m = lambda.m();
  Int num = factorial(n) << ((n - m) / 2);
  Int den = 1;
  for (int x : parts) den *= factorial(x);
  Int dnum = 1, dden = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      dnum *= parts[i] - parts[j];
      dden *= parts[i] + parts[j];
    }
  Int q, r;
  divide_qr(num * dnum, den * dden, q, r);
  if (r != 0 || q <= 0) throw std::logic_error("spin_degree: non-integral result");
  return q;
}

Int spin_family_degree(int l, int family) {
  SpinFamilyIndex idx(l);
  if (family == 1) return spin_degree(idx.p1());
  if (family == 2) return spin_degree(idx.p2());
  throw std::invalid_argument("spin_family_degree: family must be 1 or 2");
}

std::pair<Int, Int> ratio_identity_sides(int l, int family) {
  if (l < 1) throw std::invalid_argument("ratio_identity_sides: l >= 1");
  if (family == 1) {
    Int lhs = spin_family_degree(l + 1, 1) * binomial(4 * l - 1, 2 * l);
    Int rhs = spin_family_degree(l, 1) * (Int(1) << (4 * l - 1)) *
              binomial(SpinFamilyIndex(l + 1).n1(), 4 * l + 1);
    return {lhs, rhs};
  }
  if (family == 2) {
    Int lhs = spin_family_degree(l + 1, 2) * binomial(4 * l + 1, 2 * l + 1);
    Int rhs = spin_family_degree(l, 2) * (Int(1) << (4 * l + 1)) *
              binomial(SpinFamilyIndex(l + 1).n2(), 4 * l + 3);
    return {lhs, rhs};
  }
  throw std::invalid_argument("ratio_identity_sides: family must be 1 or 2");
}

bool ratio_identity_check(int l, int family) {
  auto [lhs, rhs] = ratio_identity_sides(l, family);
  return lhs == rhs;
}

std::pair<bool, bool> star_inequality(int l) {
  SpinFamilyIndex idx(l);
  Int d1 = spin_family_degree(l, 1);
  Int d2 = spin_family_degree(l, 2);
  bool first = d1 * d1 >= odd_part_factorial(idx.n2() - 1);
  bool second = d2 * d2 >= odd_part_factorial(SpinFamilyIndex(l + 1).n1() - 1);
  return {first, second};
}

void for_each_strict_partition(int n, const std::function<void(const StrictPartition&)>& fn) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int cap) {
    if (rest == 0) {
      fn(StrictPartition(cur));
      return;
    }
    for (int a = std::min(rest, cap); a >= 1; --a) {
      // the remaining parts are distinct and < a, so they sum to at most
      // a(a-1)/2
      if (static_cast<long long>(a) * (a - 1) / 2 < rest - a) break;
      cur.push_back(a);
      rec(rest - a, a - 1);
      cur.pop_back();
    }
  };
  rec(n, n);
}

CoverageReport coverage_check(int n) {
  if (n < 5 || n >= 120) throw std::invalid_argument("coverage_check: need 5 <= n < 120");
  // Pass 1: locate the maximum via long-double logs (headroom ~1e-10 while
  // the filter keeps everything within 1e-6), pass 2: exact arithmetic on
  // the surviving candidates.
  std::vector<long double> lf(n + 1);
  for (int i = 0; i <= n; ++i) lf[i] = lgammal(i + 1.0L);
  auto log_degree = [&](const StrictPartition& sp) {
    const auto& p = sp.parts;
    int m = sp.m();
    long double v = ((n - m) / 2) * logl(2.0L) + lf[n];
    for (int x : p) v -= lf[x];
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) v += logl(p[i] - p[j]) - logl(p[i] + p[j]);
    return v;
  };
  long double best = -1e30L;
  for_each_strict_partition(n, [&](const StrictPartition& sp) {
    best = std::max(best, log_degree(sp));
  });
  std::vector<std::vector<int>> candidates;
  for_each_strict_partition(n, [&](const StrictPartition& sp) {
    if (log_degree(sp) >= best - 1e-6L) candidates.push_back(sp.parts);
  });
  CoverageReport rep;
  rep.n = n;
  rep.max_degree = 0;
  for (const auto& parts : candidates) {
    Int d = spin_degree(StrictPartition(parts));
    if (d > rep.max_degree) {
      rep.max_degree = d;
      rep.witness = parts;
    }
  }
  rep.target = odd_part_factorial(n);
  rep.pass = rep.max_degree * rep.max_degree >= rep.target;
  return rep;
}

}  // namespace charbound::symspin
