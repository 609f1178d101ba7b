#include "qgc/polynomial.hpp"

#include <algorithm>

#include "qgc/errors.hpp"

namespace qgc {

namespace {

void accumulate(Polynomial::TermMap& terms, Monomial m, Int coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(std::move(m), coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms.erase(it);
  }
}

Monomial merge(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Polynomial Polynomial::constant(Int c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::variable(VarId v, Int coeff) {
  Polynomial p;
  p.add_term({v}, coeff);
  return p;
}

Polynomial Polynomial::negated_variable(VarId v) {
  Polynomial p;
  p.add_term({}, 1);
  p.add_term({v}, -1);
  return p;
}

Polynomial Polynomial::xnor(VarId a, VarId b) {
  Polynomial p;
  p.add_term({a, b}, 2);
  p.add_term({a}, -1);
  p.add_term({b}, -1);
  p.add_term({}, 1);
  return p;
}

void Polynomial::add_term(std::span<const VarId> vars, Int coeff) {
  Monomial m(vars.begin(), vars.end());
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  accumulate(terms_, std::move(m), coeff);
}

Int Polynomial::constant_term() const { return coefficient({}); }

Int Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Int{0} : it->second;
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

std::size_t Polynomial::variable_span() const {
  std::size_t span = 0;
  for (const auto& [m, c] : terms_)
    if (!m.empty()) span = std::max<std::size_t>(span, m.back() + 1);
  return span;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) accumulate(terms_, m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) accumulate(terms_, m, checked_mul(c, -1));
  return *this;
}

Polynomial& Polynomial::operator*=(Int scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c = checked_mul(c, scale);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) accumulate(out.terms_, merge(ma, mb), checked_mul(ca, cb));
  return out;
}

Polynomial add_scaled(const Polynomial& p, const Polynomial& q, Int c) {
  Polynomial out = p;
  if (c == 0) return out;
  out += q * c;
  return out;
}

Int evaluate(const Polynomial& p, std::span<const std::uint8_t> assignment) {
  if (assignment.size() < p.variable_span()) {
    fail(ErrorKind::Dimension, "assignment has " + std::to_string(assignment.size()) +
                                   " bits but the polynomial references " +
                                   std::to_string(p.variable_span()) + " variables");
  }
  Int energy = 0;
  for (const auto& [m, c] : p.terms()) {
    bool on = true;
    for (VarId v : m) {
      if (!assignment[v]) {
        on = false;
        break;
      }
    }
    if (on) energy = checked_add(energy, c);
  }
  return energy;
}

}  // namespace qgc
