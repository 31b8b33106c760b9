#pragma once

#include <map>
#include <vector>

#include "glat/rational.hpp"

namespace glat {

/// Sparse multivariate polynomial over Q; terms are exponent-vector -> coeff.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(int vars) : vars_(vars) {}
  static Polynomial constant(int vars, const Rat& c);
  static Polynomial variable(int vars, int i);

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  void add_term(const std::vector<int>& exps, const Rat& c);
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rat& c) const;
  bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  Polynomial derivative(int var) const;
  Rat evaluate(const std::vector<Rat>& point) const;

private:
  int vars_ = 0;
  std::map<std::vector<int>, Rat> terms_;
};

/// Vector field on R^m with polynomial coefficients.
struct PolyVectorField {
  int vars = 0;
  std::vector<Polynomial> components;  // size == vars

  bool is_zero() const {
    for (const auto& p : components)
      if (!p.is_zero()) return false;
    return true;
  }
};

/// [x, y] = x . dy - y . dx, exact on the polynomial coefficients.
/// Throws InputError on a variable-count mismatch.
PolyVectorField field_bracket(const PolyVectorField& x, const PolyVectorField& y);

std::vector<Rat> evaluate_field(const PolyVectorField& f, const std::vector<Rat>& point);

}  // namespace glat
