#include "sschur/linear_operator.hpp"

#include <map>
#include <mutex>

#include "sschur/error.hpp"
#include "sschur/text_format.hpp"

namespace sschur {

LinearOperator::LinearOperator(std::string name, DegreeShift shift, Fn fn)
    : name_(std::move(name)), shift_(shift), fn_(std::move(fn)) {}

LinearOperator LinearOperator::identity() {
  return LinearOperator("id", {0, 0}, [](const SuperPolynomial& f) { return f; });
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  return LinearOperator(a.name() + " " + b.name(),
                        {a.shift().total + b.shift().total, a.shift().fermionic + b.shift().fermionic},
                        [a, b](const SuperPolynomial& f) { return a(b(f)); });
}

LinearOperator operator*(const LinearOperator& a, const LinearOperator& b) { return compose(a, b); }

LinearOperator operator+(const LinearOperator& a, const LinearOperator& b) {
  if (!(a.shift() == b.shift())) throw Error("cannot add operators with different degree shifts");
  return LinearOperator("(" + a.name() + " + " + b.name() + ")", a.shift(),
                        [a, b](const SuperPolynomial& f) { return a(f) + b(f); });
}

LinearOperator operator-(const LinearOperator& a, const LinearOperator& b) {
  if (!(a.shift() == b.shift())) throw Error("cannot subtract operators with different degree shifts");
  return LinearOperator("(" + a.name() + " - " + b.name() + ")", a.shift(),
                        [a, b](const SuperPolynomial& f) { return a(f) - b(f); });
}

LinearOperator scaled(const Rational& c, const LinearOperator& a) {
  return LinearOperator(to_string(c) + "*" + a.name(), a.shift(),
                        [c, a](const SuperPolynomial& f) { return c * a(f); });
}

LinearOperator multiplication_by(const SuperPolynomial& g, const std::string& name) {
  const auto degrees = g.bidegrees();
  if (degrees.size() > 1) throw Error("multiplication operator needs a homogeneous factor");
  const Bidegree d = degrees.empty() ? Bidegree{0, 0} : degrees.front();
  return LinearOperator(name, {d.total, d.fermionic}, [g](const SuperPolynomial& f) { return multiply(g, f); });
}

LinearOperator parity_operator() { return LinearOperator("P", {0, 0}, parity_twist); }

namespace {

using AdjointBlock = std::map<SuperMonomial, SuperPolynomial>;

struct AdjointCache {
  std::mutex mutex;
  std::map<Bidegree, std::shared_ptr<const AdjointBlock>> blocks;
};

std::shared_ptr<const AdjointBlock> build_block(const LinearOperator& T, Bidegree source, Bidegree target,
                                                Execution exec) {
  const std::vector<SuperMonomial> basis = monomial_basis(source);
  std::vector<SuperPolynomial> images(basis.size());
  for_each_index(basis.size(), exec, [&](std::size_t i) { images[i] = T(SuperPolynomial(basis[i], 1)); });
  auto block = std::make_shared<AdjointBlock>();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Rational wa = monomial_weight(basis[i]);
    if (wa == 0) throw SingularGram("zero Gram entry");
    for (const auto& [b, coeff] : images[i].terms()) {
      if (b.bidegree() != target) throw Error("operator " + T.name() + " is not homogeneous of its declared shift");
      (*block)[b].add_term(basis[i], coeff * monomial_weight(b) / wa);
    }
  }
  return block;
}

}  // namespace

LinearOperator gram_adjoint(const LinearOperator& T, Execution exec) {
  auto cache = std::make_shared<AdjointCache>();
  const DegreeShift s = T.shift();
  auto fn = [T, cache, s, exec](const SuperPolynomial& g) {
    SuperPolynomial out;
    for (const Bidegree target : g.bidegrees()) {
      const Bidegree source{target.total - s.total, target.fermionic - s.fermionic};
      if (source.total < 0 || source.fermionic < 0) continue;
      std::shared_ptr<const AdjointBlock> block;
      {
        std::lock_guard<std::mutex> lock(cache->mutex);
        auto it = cache->blocks.find(source);
        if (it != cache->blocks.end()) block = it->second;
      }
      if (!block) {
        block = build_block(T, source, target, exec);
        std::lock_guard<std::mutex> lock(cache->mutex);
        cache->blocks.emplace(source, block);
      }
      for (const auto& [m, c] : g.terms()) {
        if (m.bidegree() != target) continue;
        auto it = block->find(m);
        if (it != block->end()) out += c * it->second;
      }
    }
    return out;
  };
  return LinearOperator(T.name() + "^perp", {-s.total, -s.fermionic}, fn);
}

bool agree_on_blocks(const LinearOperator& A, const LinearOperator& B, int max_total, int max_fermionic,
                     std::string* counterexample) {
  for (int n = 0; n <= max_total; ++n)
    for (int m = 0; m <= max_fermionic; ++m)
      for (const auto& mono : monomial_basis({n, m})) {
        const SuperPolynomial f(mono, 1);
        if (A(f) != B(f)) {
          if (counterexample)
            *counterexample = A.name() + " vs " + B.name() + " differ on " + to_string(f) + ": " +
                              to_string(A(f)) + " != " + to_string(B(f));
          return false;
        }
      }
  return true;
}

}  // namespace sschur
