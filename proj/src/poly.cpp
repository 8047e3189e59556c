#include "gridhfk/poly.hpp"

#include <sstream>

#include "gridhfk/error.hpp"

namespace gridhfk {

LaurentF2 LaurentF2::monomial(int exponent) {
  LaurentF2 p;
  p.terms_.insert(exponent);
  return p;
}

LaurentF2 LaurentF2::one_plus_inverse_power(int k) {
  LaurentF2 p = one();
  const LaurentF2 factor = one() + monomial(-1);
  for (int i = 0; i < k; ++i) p = p * factor;
  return p;
}

void LaurentF2::toggle(int exponent) {
  if (!terms_.erase(exponent)) terms_.insert(exponent);
}

LaurentF2 LaurentF2::operator+(const LaurentF2& other) const {
  LaurentF2 out = *this;
  for (int e : other.terms_) out.toggle(e);
  return out;
}

LaurentF2 LaurentF2::operator*(const LaurentF2& other) const {
  LaurentF2 out;
  for (int a : terms_) {
    for (int b : other.terms_) out.toggle(a + b);
  }
  return out;
}

std::optional<LaurentF2> LaurentF2::divide_by_one_plus_inverse(int k) const {
  LaurentF2 current = *this;
  for (int step = 0; step < k; ++step) {
    // Peel off the top term: p = q (1 + T^-1).
    LaurentF2 quotient;
    LaurentF2 rest = current;
    while (!rest.is_zero()) {
      const int top = *rest.terms_.rbegin();
      quotient.toggle(top);
      rest.toggle(top);
      rest.toggle(top - 1);
      if (!rest.is_zero() && *rest.terms_.begin() < *current.terms_.begin() - 1) return std::nullopt;
    }
    current = quotient;
  }
  return current;
}

bool LaurentF2::is_symmetric() const {
  for (int e : terms_) {
    if (!terms_.count(-e)) return false;
  }
  return true;
}

std::string LaurentF2::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    const int e = *it;
    if (e == 0) {
      out << '1';
    } else if (e == 1) {
      out << 'T';
    } else {
      out << "T^" << e;
    }
  }
  return out.str();
}

long long total_rank(const RankTable& table) {
  long long sum = 0;
  for (const auto& [g, r] : table) sum += r;
  return sum;
}

void drop_zeros(RankTable& table) {
  std::erase_if(table, [](const auto& kv) { return kv.second == 0; });
}

std::string format_poincare(const RankTable& table) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, r] : table) {
    if (r == 0) continue;
    if (!first) out << " + ";
    first = false;
    const bool unit = g.maslov == 0 && g.alexander == 0;
    if (r != 1 || unit) out << r;
    if (g.maslov == 1) out << 'q';
    if (g.maslov != 0 && g.maslov != 1) out << "q^" << g.maslov;
    if (g.alexander == 1) out << 't';
    if (g.alexander != 0 && g.alexander != 1) out << "t^" << g.alexander;
  }
  return first ? "0" : out.str();
}

RankTable multiply_by_v(const RankTable& table, int k) {
  RankTable current = table;
  for (int step = 0; step < k; ++step) {
    RankTable next;
    for (const auto& [g, r] : current) {
      next[g] += r;
      next[{g.maslov - 1, g.alexander - 1}] += r;
    }
    current = std::move(next);
  }
  drop_zeros(current);
  return current;
}

RankTable divide_by_v(const RankTable& table, int k) {
  RankTable current = table;
  drop_zeros(current);
  for (int step = 0; step < k; ++step) {
    RankTable rest = current;
    RankTable quotient;
    // Highest Alexander grading first: its coefficient must come from the
    // quotient term itself, the q^-1 t^-1 shift only reaches lower gradings.
    while (!rest.empty()) {
      auto top = std::prev(rest.end());
      const Bigrading g = top->first;
      const long long r = top->second;
      rest.erase(top);
      if (r < 0) throw GridError(ErrorKind::DivisionInexact, "negative quotient coefficient");
      quotient[g] += r;
      const Bigrading low{g.maslov - 1, g.alexander - 1};
      rest[low] -= r;
      if (rest[low] == 0) rest.erase(low);
      if (!rest.empty() && rest.begin()->first.alexander < current.begin()->first.alexander - 1) {
        throw GridError(ErrorKind::DivisionInexact, "remainder after dividing by (1 + q^-1 t^-1)");
      }
    }
    drop_zeros(quotient);
    current = std::move(quotient);
  }
  return current;
}

RankTable tensor(const RankTable& a, const RankTable& b) {
  RankTable out;
  for (const auto& [ga, ra] : a) {
    for (const auto& [gb, rb] : b) out[ga + gb] += ra * rb;
  }
  drop_zeros(out);
  return out;
}

LaurentF2 euler_mod2(const RankTable& table) {
  LaurentF2 p;
  for (const auto& [g, r] : table) {
    if (r % 2 != 0) p.toggle(g.alexander);
  }
  return p;
}

RankTable alexander_flip(const RankTable& table) {
  RankTable out;
  for (const auto& [g, r] : table) out[{g.maslov - 2 * g.alexander, -g.alexander}] += r;
  drop_zeros(out);
  return out;
}

}  // namespace gridhfk
