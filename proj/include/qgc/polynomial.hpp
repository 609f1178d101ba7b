#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "qgc/int128.hpp"

namespace qgc {

using VarId = std::uint32_t;

// Sorted, duplicate-free variable set. The empty monomial is the constant.
using Monomial = std::vector<VarId>;

using Assignment = std::vector<std::uint8_t>;

// Multilinear pseudo-Boolean polynomial with exact integer coefficients.
//
// Canonical form: monomials are sorted and deduplicated (x*x = x is applied
// on insertion) and zero coefficients are never stored, so two polynomials
// are equal as functions on {0,1}^N iff their term maps are equal.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Int>;

  Polynomial() = default;

  static Polynomial constant(Int c);
  static Polynomial variable(VarId v, Int coeff = 1);
  // 1 - x
  static Polynomial negated_variable(VarId v);
  // 2ab - a - b + 1, which is 1 iff a == b.
  static Polynomial xnor(VarId a, VarId b);

  // Adds coeff * prod(vars); vars need not be sorted or unique.
  void add_term(std::span<const VarId> vars, Int coeff);
  void add_term(std::initializer_list<VarId> vars, Int coeff) {
    add_term(std::span<const VarId>(vars.begin(), vars.size()), coeff);
  }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Int constant_term() const;
  Int coefficient(const Monomial& m) const;

  std::size_t degree() const;
  // One past the largest variable id referenced; 0 for constants.
  std::size_t variable_span() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(Int scale);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Int s) { return a *= s; }
  friend Polynomial operator*(Int s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial&) const = default;

 private:
  TermMap terms_;
};

// p + c*q in canonical form.
Polynomial add_scaled(const Polynomial& p, const Polynomial& q, Int c);

// Throws Error(Dimension) when the assignment does not cover p.
Int evaluate(const Polynomial& p, std::span<const std::uint8_t> assignment);

}  // namespace qgc
