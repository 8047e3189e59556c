#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "gridhfk/complex.hpp"

namespace gridhfk {

// Laurent polynomial in T over F2, stored as its set of exponents.
class LaurentF2 {
 public:
  LaurentF2() = default;
  static LaurentF2 monomial(int exponent);
  static LaurentF2 one() { return monomial(0); }
  // (1 + T^-1)^k, the mod 2 reduction of (1 - T^-1)^k.
  static LaurentF2 one_plus_inverse_power(int k);

  void toggle(int exponent);
  bool coefficient(int exponent) const { return terms_.count(exponent) != 0; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::set<int>& exponents() const noexcept { return terms_; }

  LaurentF2 operator+(const LaurentF2& other) const;
  LaurentF2 operator*(const LaurentF2& other) const;
  friend bool operator==(const LaurentF2&, const LaurentF2&) = default;

  // Exact quotient by (1 + T^-1)^k, or nullopt if the division leaves a remainder.
  std::optional<LaurentF2> divide_by_one_plus_inverse(int k) const;
  bool is_symmetric() const;

  // Highest exponent first, e.g. "T + 1 + T^-1"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  std::set<int> terms_;
};

// Ranks (or generator counts) per bigrading, ordered by (A, M).
using RankTable = std::map<Bigrading, long long>;

long long total_rank(const RankTable& table);
void drop_zeros(RankTable& table);

// Poincare polynomial in q (Maslov) and t (Alexander), terms in (A, M) order,
// e.g. "q^-1t^-1 + 1".
std::string format_poincare(const RankTable& table);

// Multiplies by (1 + q^-1 t^-1)^k.
RankTable multiply_by_v(const RankTable& table, int k);

// Exact quotient by (1 + q^-1 t^-1)^k with non-negative coefficients; throws
// DivisionInexact otherwise.
RankTable divide_by_v(const RankTable& table, int k);

// Bigraded tensor product of two rank tables.
RankTable tensor(const RankTable& a, const RankTable& b);

// sum (-1)^M rank T^A, reduced mod 2.
LaurentF2 euler_mod2(const RankTable& table);

// The rank table with (M, A) -> (M - 2A, -A): the symmetry of knot Floer
// homology of a knot.
RankTable alexander_flip(const RankTable& table);

}  // namespace gridhfk
