#pragma once

#include <functional>
#include <memory>
#include <string>

#include "sschur/superalgebra.hpp"

namespace sschur {

struct DegreeShift {
  int total = 0;
  int fermionic = 0;
  friend bool operator==(const DegreeShift&, const DegreeShift&) = default;
};

enum class Parity { Even, Odd };

// A linear map on SuperPolynomials that shifts bidegree by a fixed amount.
// Composition is lazy: compose() chains the stored functions.
class LinearOperator {
 public:
  using Fn = std::function<SuperPolynomial(const SuperPolynomial&)>;

  LinearOperator(std::string name, DegreeShift shift, Fn fn);

  SuperPolynomial operator()(const SuperPolynomial& f) const { return fn_(f); }
  const std::string& name() const { return name_; }
  DegreeShift shift() const { return shift_; }
  Parity parity() const { return (shift_.fermionic % 2 == 0) ? Parity::Even : Parity::Odd; }

  static LinearOperator identity();

 private:
  std::string name_;
  DegreeShift shift_;
  Fn fn_;
};

// (a o b)(f) = a(b(f)).
LinearOperator compose(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator*(const LinearOperator& a, const LinearOperator& b);
// Both summands must share a degree shift.
LinearOperator operator+(const LinearOperator& a, const LinearOperator& b);
LinearOperator operator-(const LinearOperator& a, const LinearOperator& b);
LinearOperator scaled(const Rational& c, const LinearOperator& a);

// Left multiplication by a homogeneous polynomial.
LinearOperator multiplication_by(const SuperPolynomial& g, const std::string& name);
// (-1)^(fermionic degree) of the input.
LinearOperator parity_operator();

// Adjoint of T with respect to the scalar product, computed on each input
// block from T's action on the monomial basis of the source block. Block data
// is memoized inside the returned operator and shared by its copies.
LinearOperator gram_adjoint(const LinearOperator& T, Execution exec = Execution::Parallel);

// True when A(b) == B(b) for every basis monomial b of every block with
// total degree <= max_total and fermionic degree <= max_fermionic.
bool agree_on_blocks(const LinearOperator& A, const LinearOperator& B, int max_total, int max_fermionic,
                     std::string* counterexample = nullptr);

}  // namespace sschur
