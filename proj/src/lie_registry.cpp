#include "charbound/lie_registry.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace charbound::lie {

using exactnum::cyclo_eval;
using exactnum::p_part_split;

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::TwoA: return "2A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::TwoD: return "2D";
    case Family::ThreeD4: return "3D4";
    case Family::TwoB2: return "2B2";
    case Family::TwoG2: return "2G2";
    case Family::TwoF4: return "2F4";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::TwoE6: return "2E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

bool family_twisted_field(Family f) {
  return f == Family::TwoB2 || f == Family::TwoG2 || f == Family::TwoF4;
}

namespace {

bool is_classical(Family f) {
  switch (f) {
    case Family::A:
    case Family::TwoA:
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::TwoD:
      return true;
    default:
      return false;
  }
}

void validate(Family f, int n, const PrimePower& q) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("GroupSpec: ") + what);
  };
  switch (f) {
    case Family::A: need(n >= 2, "A needs n >= 2"); break;
    case Family::TwoA: need(n >= 3, "2A needs n >= 3"); break;
    case Family::B:
    case Family::C: need(n >= 2, "B/C need n >= 2"); break;
    case Family::D:
    case Family::TwoD: need(n >= 4, "D/2D need n >= 4"); break;
    case Family::TwoB2:
      need(q.p == 2 && q.f % 2 == 1 && q.value >= 8, "2B2 needs Q = 2^(2f+1) >= 8");
      break;
    case Family::TwoG2:
      need(q.p == 3 && q.f % 2 == 1 && q.value >= 27, "2G2 needs Q = 3^(2f+1) >= 27");
      break;
    case Family::TwoF4:
      need(q.p == 2 && q.f % 2 == 1, "2F4 needs Q = 2^(2f+1)");
      break;
    default: break;
  }
}

}  // namespace

GroupSpec::GroupSpec(Family f, int n_, PrimePower q_) : family(f), n(n_), q(q_) {
  validate(f, n_, q_);
}

GroupSpec::GroupSpec(Family f, PrimePower q_) : family(f), n(0), q(q_) {
  if (is_classical(f)) throw std::invalid_argument("GroupSpec: classical family needs a rank");
  validate(f, 0, q_);
}

int GroupSpec::rank() const {
  switch (family) {
    case Family::A:
    case Family::TwoA: return n - 1;
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::TwoD: return n;
    case Family::ThreeD4:
    case Family::TwoF4:
    case Family::F4: return 4;
    case Family::TwoB2:
    case Family::TwoG2:
    case Family::G2: return 2;
    case Family::E6:
    case Family::TwoE6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
  }
  return 0;
}

std::string GroupSpec::name() const {
  std::ostringstream os;
  bool even_q = q.p == 2;
  switch (family) {
    case Family::A: os << "SL" << n << "(" << q.value << ")"; break;
    case Family::TwoA: os << "SU" << n << "(" << q.value << ")"; break;
    case Family::B:
      if (even_q)
        os << "Sp" << 2 * n << "(" << q.value << ")";
      else
        os << "Spin" << 2 * n + 1 << "(" << q.value << ")";
      break;
    case Family::C: os << "Sp" << 2 * n << "(" << q.value << ")"; break;
    case Family::D:
      os << (even_q ? "O" : "Spin") << 2 * n << "+(" << q.value << ")";
      break;
    case Family::TwoD:
      os << (even_q ? "O" : "Spin") << 2 * n << "-(" << q.value << ")";
      break;
    default: os << family_name(family) << "(" << q.value << ")"; break;
  }
  return os.str();
}

Int CycloProduct::evaluate(const Int& q) const {
  Int v = ipow(q, q_exponent);
  for (const auto& inst : instances) v *= inst.value;
  return v;
}

namespace {

// Appends the cyclotomic factorization of q^k - 1.
void add_minus(std::map<int, int>& m, int k) {
  for (int d = 1; d <= k; ++d)
    if (k % d == 0) m[d]++;
}

// Appends the cyclotomic factorization of q^k + 1 (divisors of 2k not
// dividing k).
void add_plus(std::map<int, int>& m, int k) {
  for (int d = 1; d <= 2 * k; ++d)
    if ((2 * k) % d == 0 && k % d != 0) m[d]++;
}

}  // namespace

CycloProduct order_product(const GroupSpec& spec) {
  CycloProduct cp;
  const Int q = spec.q.value;
  std::map<int, int> m;
  const int n = spec.n;
  switch (spec.family) {
    case Family::A:
      cp.q_exponent = n * (n - 1) / 2;
      for (int i = 2; i <= n; ++i) add_minus(m, i);
      break;
    case Family::TwoA:
      cp.q_exponent = n * (n - 1) / 2;
      for (int i = 2; i <= n; ++i)
        (i % 2 == 0) ? add_minus(m, i) : add_plus(m, i);
      break;
    case Family::B:
    case Family::C:
      cp.q_exponent = n * n;
      for (int i = 1; i <= n; ++i) add_minus(m, 2 * i);
      break;
    case Family::D:
      cp.q_exponent = n * (n - 1);
      add_minus(m, n);
      for (int i = 1; i <= n - 1; ++i) add_minus(m, 2 * i);
      break;
    case Family::TwoD:
      cp.q_exponent = n * (n - 1);
      add_plus(m, n);
      for (int i = 1; i <= n - 1; ++i) add_minus(m, 2 * i);
      break;
    case Family::ThreeD4:
      cp.q_exponent = 12;
      m = {{1, 2}, {2, 2}, {3, 2}, {6, 2}, {12, 1}};
      break;
    case Family::G2:
      cp.q_exponent = 6;
      m = {{1, 2}, {2, 2}, {3, 1}, {6, 1}};
      break;
    case Family::F4:
      cp.q_exponent = 24;
      for (int d : {2, 6, 8, 12}) add_minus(m, d);
      break;
    case Family::E6:
      cp.q_exponent = 36;
      for (int d : {2, 5, 6, 8, 9, 12}) add_minus(m, d);
      break;
    case Family::TwoE6:
      cp.q_exponent = 36;
      for (int d : {2, 6, 8, 12}) add_minus(m, d);
      for (int d : {5, 9}) add_plus(m, d);
      break;
    case Family::E7:
      cp.q_exponent = 63;
      for (int d : {2, 6, 8, 10, 12, 14, 18}) add_minus(m, d);
      break;
    case Family::E8:
      cp.q_exponent = 120;
      for (int d : {2, 8, 12, 14, 18, 20, 24, 30}) add_minus(m, d);
      break;
    case Family::TwoB2: {
      // |2B2(Q)| = Q^2 (Q-1)(Q^2+1), with Q^2+1 = Phi8' * Phi8'' and
      // sqrt(2Q) = 2^{(f+1)/2} exact since Q = 2^f with f odd.
      cp.q_exponent = 2;
      Int r = ipow(Int(2), static_cast<unsigned long>((spec.q.f + 1) / 2));
      cp.factors = {{1, 1}};
      cp.instances.push_back({"Phi1", 1, q - 1});
      cp.instances.push_back({"Phi8'", 0, q - r + 1});
      cp.instances.push_back({"Phi8''", 0, q + r + 1});
      return cp;
    }
    case Family::TwoG2: {
      // |2G2(Q)| = Q^3 (Q-1)(Q+1) Phi12' Phi12'', Phi12'* = Q -+ sqrt(3Q) + 1
      cp.q_exponent = 3;
      Int r = ipow(Int(3), static_cast<unsigned long>((spec.q.f + 1) / 2));
      cp.factors = {{1, 1}, {2, 1}};
      cp.instances.push_back({"Phi1", 1, q - 1});
      cp.instances.push_back({"Phi2", 2, q + 1});
      cp.instances.push_back({"Phi12'", 0, q - r + 1});
      cp.instances.push_back({"Phi12''", 0, q + r + 1});
      return cp;
    }
    case Family::TwoF4: {
      // |2F4(Q)| = Q^12 (Q-1)(Q^3+1)(Q^4-1)(Q^6+1); the Q^2+1 pieces split
      // as Phi8'Phi8'' and the Q^4-Q^2+1 piece as Phi24'Phi24''.
      cp.q_exponent = 12;
      Int r = ipow(Int(2), static_cast<unsigned long>((spec.q.f + 1) / 2));
      cp.factors = {{1, 2}, {2, 2}, {6, 1}};
      cp.instances.push_back({"Phi1", 1, q - 1});
      cp.instances.push_back({"Phi1", 1, q - 1});
      cp.instances.push_back({"Phi2", 2, q + 1});
      cp.instances.push_back({"Phi2", 2, q + 1});
      cp.instances.push_back({"Phi6", 6, q * q - q + 1});
      cp.instances.push_back({"Phi8'", 0, q - r + 1});
      cp.instances.push_back({"Phi8''", 0, q + r + 1});
      cp.instances.push_back({"Phi8'", 0, q - r + 1});
      cp.instances.push_back({"Phi8''", 0, q + r + 1});
      cp.instances.push_back({"Phi24'", 0, q * q + q + 1 - r * (q + 1)});
      cp.instances.push_back({"Phi24''", 0, q * q + q + 1 + r * (q + 1)});
      return cp;
    }
  }
  cp.factors = m;
  for (const auto& [d, mult] : m) {
    Int v = cyclo_eval(d, q);
    for (int i = 0; i < mult; ++i)
      cp.instances.push_back({"Phi" + std::to_string(d), d, v});
  }
  return cp;
}

Int order(const GroupSpec& spec) {
  return order_product(spec).evaluate(Int(spec.q.value));
}

Int center_order(const GroupSpec& spec) {
  const Int q = spec.q.value;
  const int n = spec.n;
  switch (spec.family) {
    case Family::A: return gcd(Int(n), q - 1);
    case Family::TwoA: return gcd(Int(n), q + 1);
    case Family::B:
    case Family::C: return gcd(Int(2), q - 1);
    case Family::D: return gcd(Int(4), ipow(q, n) - 1);
    case Family::TwoD: return gcd(Int(4), ipow(q, n) + 1);
    case Family::E6: return gcd(Int(3), q - 1);
    case Family::TwoE6: return gcd(Int(3), q + 1);
    case Family::E7: return gcd(Int(2), q - 1);
    default: return 1;
  }
}

Int weyl_order(const GroupSpec& spec) {
  auto fact = [](int k) {
    Int r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
  };
  const int n = spec.n;
  switch (spec.family) {
    case Family::A:
    case Family::TwoA: return fact(n);
    case Family::B:
    case Family::C: return ipow(Int(2), n) * fact(n);
    case Family::D:
    case Family::TwoD: return ipow(Int(2), n - 1) * fact(n);
    case Family::ThreeD4: return 192;
    case Family::TwoB2: return 8;
    case Family::G2:
    case Family::TwoG2: return 12;
    case Family::F4:
    case Family::TwoF4: return 1152;
    case Family::E6:
    case Family::TwoE6: return 51840;
    case Family::E7: return 2903040;
    case Family::E8: return 696729600;
  }
  throw std::logic_error("weyl_order: unreachable");
}

namespace {

TorusEntry mk(int row, std::string oexpr, Int order, int e, Int idx,
              std::string bexpr, Rat bound, bool noncyc = false) {
  TorusEntry t;
  t.row = row;
  t.order_expr = std::move(oexpr);
  t.order = std::move(order);
  t.e = e;
  t.normalizer_index = std::move(idx);
  t.bound_expr = std::move(bexpr);
  t.bound = std::move(bound);
  t.noncyclic_image = noncyc;
  return t;
}

}  // namespace

std::vector<TorusEntry> torus_entries(const GroupSpec& spec) {
  const Int q = spec.q.value;
  const int n = spec.n;
  auto qp = [&](int k) { return ipow(q, k); };
  std::vector<TorusEntry> out;
  switch (spec.family) {
    case Family::A:
      if (n == 2) {
        out.push_back(mk(1, "q+1", q + 1, 2, 2, "(q-1)/2", Rat(q - 1, 2)));
        out.push_back(mk(2, "q-1", q - 1, 1, 2, "(q-3)/2", Rat(q - 3, 2)));
      } else {
        Int t1 = exact_div(qp(n) - 1, q - 1);
        out.push_back(mk(1, "(q^n-1)/(q-1)", t1, n, n, "|T|/(n+1)", Rat(t1, n + 1)));
        Int t2 = qp(n - 1) - 1;
        out.push_back(mk(2, "q^(n-1)-1", t2, n - 1, n - 1, "|T|/n", Rat(t2, n)));
      }
      break;
    case Family::TwoA:
      if (n % 2 == 1) {
        Int t1 = exact_div(qp(n) + 1, q + 1);
        out.push_back(mk(1, "(q^n+1)/(q+1)", t1, 2 * n, n, "2|T|/(2n+1)",
                         Rat(2 * t1, 2 * n + 1)));
        Int t2 = qp(n - 1) - 1;
        out.push_back(mk(2, "q^(n-1)-1", t2, n - 1, n - 1, "|T|/n", Rat(t2, n)));
      } else {
        Int t1 = qp(n - 1) + 1;
        out.push_back(mk(1, "q^(n-1)+1", t1, 2 * n - 2, n - 1, "2|T|/(2n-1)",
                         Rat(2 * t1, 2 * n - 1)));
        Int t2 = exact_div(qp(n) - 1, q + 1);
        out.push_back(mk(2, "(q^n-1)/(q+1)", t2, n, n, "|T|/(n+1)", Rat(t2, n + 1)));
      }
      break;
    case Family::B:
    case Family::C: {
      Int t1 = qp(n) + 1;
      out.push_back(mk(1, "q^n+1", t1, 2 * n, 2 * n, "|T|/(2n+1)", Rat(t1, 2 * n + 1)));
      if (n == 2) {
        Int t2 = q * q - 1;
        out.push_back(mk(2, "q^2-1", t2, 2, 4, "(q-1)(q-2)/4", Rat((q - 1) * (q - 2), 4)));
      } else if (n % 2 == 0) {
        Int t2 = (qp(n - 1) - 1) * (q + 1);
        out.push_back(mk(3, "(q^(n-1)-1)(q+1)", t2, n - 1, 4 * n - 4,
                         "(q^(n-1)-1)(q-1)/(4n)", Rat((qp(n - 1) - 1) * (q - 1), 4 * n)));
      } else {
        Int t2 = qp(n) - 1;
        out.push_back(mk(4, "q^n-1", t2, n, 2 * n, "|T|/(2n+2)", Rat(t2, 2 * n + 2)));
      }
      break;
    }
    case Family::D: {
      Int t1 = (qp(n - 1) + 1) * (q + 1);
      out.push_back(mk(1, "(q^(n-1)+1)(q+1)", t1, 2 * n - 2, 2 * n - 2, "|T|/(2n-1)",
                       Rat(t1, 2 * n - 1), true));
      if (n % 2 == 0) {
        Int t2 = (qp(n - 1) - 1) * (q - 1);
        out.push_back(mk(2, "(q^(n-1)-1)(q-1)", t2, n - 1, 2 * n - 2, "|T|/(2n)",
                         Rat(t2, 2 * n), true));
      } else {
        Int t2 = qp(n) - 1;
        out.push_back(mk(3, "q^n-1", t2, n, n, "|T|/(n+1)", Rat(t2, n + 1)));
      }
      break;
    }
    case Family::TwoD: {
      Int t1 = qp(n) + 1;
      out.push_back(mk(1, "q^n+1", t1, 2 * n, n, "2|T|/(2n+1)", Rat(2 * t1, 2 * n + 1)));
      Int t2 = (qp(n - 1) + 1) * (q - 1);
      out.push_back(mk(2, "(q^(n-1)+1)(q-1)", t2, 2 * n - 2, 2 * n - 2, "|T|/(2n-1)",
                       Rat(t2, 2 * n - 1)));
      break;
    }
    case Family::TwoB2: {
      Int r = ipow(Int(2), static_cast<unsigned long>((spec.q.f + 1) / 2));
      Int t = q + r + 1;
      out.push_back(mk(1, "Phi8''", t, 0, 4, "(|T|-1)/4", Rat(t - 1, 4)));
      break;
    }
    case Family::TwoG2: {
      Int r = ipow(Int(3), static_cast<unsigned long>((spec.q.f + 1) / 2));
      Int t = q + r + 1;
      out.push_back(mk(1, "Phi12''", t, 0, 6, "(|T|-1)/6", Rat(t - 1, 6)));
      break;
    }
    case Family::G2: {
      if (q % 3 == 1) {
        Int t = cyclo_eval(6, q);
        out.push_back(mk(1, "Phi6", t, 6, 6, "(|T|-1)/6", Rat(t - 1, 6)));
      } else {
        Int t = cyclo_eval(3, q);
        out.push_back(mk(2, "Phi3", t, 3, 6, "(|T|-1)/6", Rat(t - 1, 6)));
      }
      break;
    }
    case Family::ThreeD4: {
      Int t = cyclo_eval(12, q);
      out.push_back(mk(1, "Phi12", t, 12, 4, "(|T|-1)/4", Rat(t - 1, 4)));
      break;
    }
    case Family::TwoF4: {
      if (q.convert_to<std::int64_t>() < 8)
        throw unsupported_error("torus_entries: 2F4(2) is outside the tables");
      Int r = ipow(Int(2), static_cast<unsigned long>((spec.q.f + 1) / 2));
      Int t = q * q + q + 1 + r * (q + 1);
      out.push_back(mk(1, "Phi24''", t, 0, 12, "(|T|-1)/12", Rat(t - 1, 12)));
      break;
    }
    case Family::F4: {
      Int t = cyclo_eval(12, q);
      out.push_back(mk(1, "Phi12", t, 12, 12, "(|T|-1)/12", Rat(t - 1, 12)));
      break;
    }
    case Family::E6: {
      Int t = cyclo_eval(9, q);
      Int z = gcd(Int(3), q - 1);
      out.push_back(mk(1, "Phi9", t, 9, 9, "(|T|-(3,q-1))/9", Rat(t - z, 9)));
      break;
    }
    case Family::TwoE6: {
      Int t = cyclo_eval(18, q);
      Int z = gcd(Int(3), q + 1);
      out.push_back(mk(1, "Phi18", t, 18, 9, "(|T|-(3,q+1))/9", Rat(t - z, 9)));
      break;
    }
    case Family::E7: {
      Int t1 = qp(7) + 1;
      out.push_back(mk(1, "Phi2*Phi14", t1, 14, 14, "(q^7-q)/14", Rat(qp(7) - q, 14)));
      Int t2 = qp(7) - 1;
      out.push_back(mk(2, "Phi1*Phi7", t2, 7, 14, "(q^7-q)/14", Rat(qp(7) - q, 14)));
      break;
    }
    case Family::E8: {
      Int t = cyclo_eval(24, q);
      out.push_back(mk(1, "Phi24", t, 24, 24, "(|T|-1)/24", Rat(t - 1, 24)));
      break;
    }
  }
  return out;
}

bool sylow_cyclic(const GroupSpec& spec, const Int& p) {
  if (!exactnum::is_prime(p)) throw std::invalid_argument("sylow_cyclic: p not prime");
  if (Int(spec.q.p) == p) throw std::invalid_argument("sylow_cyclic: p is the defining prime");
  Int total = p_part_split(order(spec), p).first;
  if (total == 1) return true;
  for (const auto& inst : order_product(spec).instances) {
    if (p_part_split(inst.value, p).first == total) return true;
  }
  return false;
}

bool is_quasi_simple(const GroupSpec& spec) {
  const std::int64_t q = spec.q.value;
  switch (spec.family) {
    case Family::A: return !(spec.n == 2 && (q == 2 || q == 3));
    case Family::TwoA: return !(spec.n == 3 && q == 2);
    case Family::B:
    case Family::C: return !(spec.n == 2 && q == 2);
    case Family::G2: return q != 2;
    case Family::TwoF4: return q != 2;
    default: return true;
  }
}

bool is_table_exception(const GroupSpec& spec) {
  const std::int64_t q = spec.q.value;
  switch (spec.family) {
    case Family::TwoA: return (spec.n == 4 && q == 2) || (spec.n == 3 && q == 3);
    case Family::B:
    case Family::C: return (spec.n == 2 || spec.n == 3) && q == 2;
    case Family::D:
    case Family::TwoD: return spec.n == 4 && q == 2;
    default: return false;
  }
}

std::vector<GroupSpec> all_specs(int rank_max, std::int64_t q_max, bool classical_only) {
  std::vector<GroupSpec> out;
  auto qs = exactnum::prime_powers_upto(q_max);
  auto add_classical = [&](Family f, int n_min) {
    for (int n = n_min; ; ++n) {
      GroupSpec probe(f, n, PrimePower(2, 1));
      if (probe.rank() > rank_max) break;
      for (const auto& q : qs) out.emplace_back(f, n, q);
    }
  };
  if (rank_max >= 1) add_classical(Family::A, 2);
  if (rank_max >= 2) add_classical(Family::TwoA, 3);
  if (rank_max >= 2) add_classical(Family::B, 2);
  if (rank_max >= 2) add_classical(Family::C, 2);
  if (rank_max >= 4) add_classical(Family::D, 4);
  if (rank_max >= 4) add_classical(Family::TwoD, 4);
  if (classical_only) return out;
  auto add_exceptional = [&](Family f, int rank, auto&& admits) {
    if (rank > rank_max) return;
    for (const auto& q : qs)
      if (admits(q)) out.emplace_back(f, q);
  };
  auto any_q = [](const PrimePower&) { return true; };
  add_exceptional(Family::ThreeD4, 4, any_q);
  add_exceptional(Family::TwoB2, 2, [](const PrimePower& q) {
    return q.p == 2 && q.f % 2 == 1 && q.value >= 8;
  });
  add_exceptional(Family::TwoG2, 2, [](const PrimePower& q) {
    return q.p == 3 && q.f % 2 == 1 && q.value >= 27;
  });
  add_exceptional(Family::TwoF4, 4, [](const PrimePower& q) {
    return q.p == 2 && q.f % 2 == 1 && q.value >= 8;
  });
  add_exceptional(Family::G2, 2, any_q);
  add_exceptional(Family::F4, 4, any_q);
  add_exceptional(Family::E6, 6, any_q);
  add_exceptional(Family::TwoE6, 6, any_q);
  add_exceptional(Family::E7, 7, any_q);
  add_exceptional(Family::E8, 8, any_q);
  return out;
}

}  // namespace charbound::lie
