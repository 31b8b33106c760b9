#include "glat/polyvec.hpp"

#include <numeric>

#include "glat/errors.hpp"

namespace glat {

Polynomial Polynomial::constant(int vars, const Rat& c) {
  Polynomial p(vars);
  p.add_term(std::vector<int>(vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int vars, int i) {
  GLAT_CHECK(i >= 0 && i < vars, "variable index out of range");
  Polynomial p(vars);
  std::vector<int> e(vars, 0);
  e[i] = 1;
  p.add_term(e, Rat(1));
  return p;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Polynomial::add_term(const std::vector<int>& exps, const Rat& c) {
  GLAT_CHECK(static_cast<int>(exps.size()) == vars_, "exponent vector size");
  if (c == 0) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  GLAT_CHECK(vars_ == o.vars_, "variable count mismatch");
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  GLAT_CHECK(vars_ == o.vars_, "variable count mismatch");
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  GLAT_CHECK(vars_ == o.vars_, "variable count mismatch");
  Polynomial out(vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(vars_);
      for (int i = 0; i < vars_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  return out;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial out(vars_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.add_term(e, coeff * c);
  return out;
}

Polynomial Polynomial::derivative(int var) const {
  GLAT_CHECK(var >= 0 && var < vars_, "variable index out of range");
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::vector<int> e2 = e;
    e2[var] -= 1;
    out.add_term(e2, c * e[var]);
  }
  return out;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
  GLAT_CHECK(static_cast<int>(point.size()) == vars_, "point size mismatch");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < vars_; ++i)
      for (int p = 0; p < e[i]; ++p) term *= point[i];
    acc += term;
  }
  return acc;
}

PolyVectorField field_bracket(const PolyVectorField& x, const PolyVectorField& y) {
  if (x.vars != y.vars) throw InputError("field_bracket: variable count mismatch");
  const int m = x.vars;
  PolyVectorField out;
  out.vars = m;
  out.components.assign(m, Polynomial(m));
  for (int i = 0; i < m; ++i) {
    Polynomial acc(m);
    for (int j = 0; j < m; ++j) {
      if (!x.components[j].is_zero()) acc = acc + x.components[j] * y.components[i].derivative(j);
      if (!y.components[j].is_zero()) acc = acc - y.components[j] * x.components[i].derivative(j);
    }
    out.components[i] = std::move(acc);
  }
  return out;
}

std::vector<Rat> evaluate_field(const PolyVectorField& f, const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != f.vars) throw InputError("point dimension mismatch");
  std::vector<Rat> out(f.vars);
  for (int i = 0; i < f.vars; ++i) out[i] = f.components[i].evaluate(point);
  return out;
}

}  // namespace glat
