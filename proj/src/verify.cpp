#include "sschur/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "sschur/bases.hpp"
#include "sschur/error.hpp"
#include "sschur/pieri.hpp"
#include "sschur/text_format.hpp"

namespace sschur {
namespace {

using Clock = std::chrono::steady_clock;
using SP = SuperPolynomial;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Check {
 public:
  explicit Check(std::string name, bool informational = false) : start_(Clock::now()) {
    result_.name = std::move(name);
    result_.informational = informational;
  }

  // describe() runs only for the first failure.
  bool expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.count;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
    return ok;
  }

  CheckResult finish() {
    result_.seconds = seconds_since(start_);
    return result_;
  }

 private:
  Clock::time_point start_;
  CheckResult result_;
};

class Suite {
 public:
  explicit Suite(std::string name) : start_(Clock::now()) { report_.suite = std::move(name); }
  void add(Check& c) { report_.checks.push_back(c.finish()); }
  SuiteReport finish() {
    report_.seconds = seconds_since(start_);
    return report_;
  }

 private:
  Clock::time_point start_;
  SuiteReport report_;
};

std::string show(const SP& f) { return to_string(f); }

std::vector<SuperPartition> superpartitions_up_to(const VerifyBounds& b) {
  std::vector<SuperPartition> out;
  for (int n = 0; n <= b.max_total; ++n)
    for (int m = 0; m <= b.max_fermionic; ++m)
      for (auto& sp : enumerate_superpartitions(n, m)) out.push_back(std::move(sp));
  return out;
}

std::vector<SuperMonomial> monomials_up_to(const VerifyBounds& b) {
  std::vector<SuperMonomial> out;
  for (int n = 0; n <= b.max_total; ++n)
    for (int m = 0; m <= b.max_fermionic; ++m)
      for (const auto& mono : monomial_basis({n, m})) out.push_back(mono);
  return out;
}

SP monomial_poly(const SuperMonomial& m) {
  SP f;
  f.add_term(m, Rational(1));
  return f;
}

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }
int binom2(int m) { return m * (m - 1) / 2; }

SuperPartition make_sp(std::vector<int> a, std::vector<int> s) { return SuperPartition(std::move(a), std::move(s)); }

std::vector<int> ones(int r) { return std::vector<int>(r, 1); }

std::string family_prefix(SchurType t) {
  switch (t) {
    case SchurType::I:
      return "B";
    case SchurType::Istar:
      return "C";
    case SchurType::II:
      return "Bbar";
    case SchurType::IIstar:
      return "Cbar";
  }
  return "?";
}

const SchurType kFamilies[] = {SchurType::I, SchurType::Istar, SchurType::II, SchurType::IIstar};

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.informational && !c.passed) return false;
  return true;
}

const CheckResult* SuiteReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.informational && !c.passed) return &c;
  return nullptr;
}

SuiteReport verify_examples(SchurTable& table) {
  Suite suite("examples");
  const SP one = SP::one();

  Check classical("classical B3 B1 . 1 = h3 s_(1) - h4 = s_(3,1)");
  {
    const SP built = bernstein_C(3, 0)(bernstein_C(1, 0)(one));
    const SP formula = homogeneous(3) * homogeneous(1) - homogeneous(4);
    const SP& s31 = table.get(SchurType::I, make_sp({}, {3, 1}));
    classical.expect(built == formula, [&] { return "B3 B1 . 1 = " + show(built); });
    classical.expect(s31 == formula, [&] { return "s_(;3,1) = " + show(s31); });
  }
  suite.add(classical);

  Check s03("s_(0;3) in power sums");
  {
    const SP expected = parse_polynomial("-1 t4 | 1 t1*x3 | 1 t1*x1*x2 | 1/6 t1*x1^3");
    const SP& got = table.get(SchurType::I, make_sp({0}, {3}));
    s03.expect(got == expected, [&] { return "s_(0;3) = " + show(got); });
    s03.expect(to_string(got) == "-1 t4 | 1 t1*x3 | 1 t1*x1*x2 | 1/6 t1*x1^3",
               [&] { return "rendered as " + to_string(got); });
  }
  suite.add(s03);

  Check b31("B3^1 s_(0;3) = s_(3,0;3)");
  {
    const SP& s = table.get(SchurType::I, make_sp({0}, {3}));
    const SP target = table.get(SchurType::I, make_sp({3, 0}, {3}));
    const SP applied = bernstein_B(3, 1)(s);
    b31.expect(applied == target, [&] { return "B3^1 s_(0;3) = " + show(applied); });
    const SP lowered = e_perp(1)(s);
    const SP expected_lowered = table.get(SchurType::I, make_sp({2}, {})) + table.get(SchurType::I, make_sp({0}, {2}));
    b31.expect(lowered == expected_lowered, [&] { return "e1^perp s_(0;3) = " + show(lowered); });
    for (int r = 2; r <= 3; ++r) {
      const SP higher = e_perp(r)(s);
      b31.expect(higher.terms().empty(), [&] { return "e" + std::to_string(r) + "^perp s_(0;3) = " + show(higher); });
    }
    const SP bookkeeping = SP::theta(4) * s - SP::theta(5) * expected_lowered;
    b31.expect(bookkeeping == target, [&] { return "theta4 s - theta5 (s_(2;) + s_(0;2)) = " + show(bookkeeping); });
  }
  suite.add(b31);

  Check c21("C2^1 s_(1) = htilde2 s_(1) - theta1 h3 = htilde2 h1 - htilde0 h3");
  {
    const SP s1 = table.get(SchurType::Istar, make_sp({}, {1}));
    const SP applied = bernstein_C(2, 1)(s1);
    const SP first = homogeneous_tilde(2) * s1 - SP::theta(1) * homogeneous(3);
    const SP second = homogeneous_tilde(2) * homogeneous(1) - homogeneous_tilde(0) * homogeneous(3);
    const SP& target = table.get(SchurType::Istar, make_sp({2}, {1}));
    c21.expect(applied == first, [&] { return "C2^1 s_(1) = " + show(applied); });
    c21.expect(first == second, [&] { return "htilde2 s_(1) - theta1 h3 = " + show(first); });
    c21.expect(applied == target, [&] { return "s*_(2;1) = " + show(target); });
  }
  suite.add(c21);

  Check c30("C3^0 s*_(1;3) = s*_(1;3,3)");
  {
    const SP applied = bernstein_C(3, 0)(table.get(SchurType::Istar, make_sp({1}, {3})));
    const SP& target = table.get(SchurType::Istar, make_sp({1}, {3, 3}));
    c30.expect(applied == target, [&] { return "C3^0 s*_(1;3) = " + show(applied); });
    const Expansion e = table.expand(applied, SchurType::Istar);
    c30.expect(e == Expansion{{make_sp({1}, {3, 3}), Rational(1)}}, [&] { return "expansion " + to_string(e); });
  }
  suite.add(c30);

  Check conj("conjugate (8,6,3,2,0;5,3) = (6,5,3,1,0;6,3,2,1)");
  {
    const SuperPartition got = conjugate(make_sp({8, 6, 3, 2, 0}, {5, 3}));
    conj.expect(got == make_sp({6, 5, 3, 1, 0}, {6, 3, 2, 1}), [&] { return to_display_string(got); });
  }
  suite.add(conj);
  return suite.finish();
}

SuiteReport verify_row_column_forms(int max_r, SchurTable& table) {
  Suite suite("table1");
  struct Row {
    SchurType family;
    std::function<SP(int)> col[4];
  };
  auto e = [](int r) { return elementary(r); };
  auto h = [](int r) { return homogeneous(r); };
  const Row rows[] = {
      {SchurType::I, {[](int r) { return elementary_tilde(r); }, [](int r) { return SP::theta(r + 1); }, e, h}},
      {SchurType::Istar,
       {[](int r) { return elementary_tilde(0) * elementary(r); }, [](int r) { return homogeneous_tilde(r); }, e, h}},
      {SchurType::II,
       {[](int r) { return elementary_tilde(r); }, [](int r) { return homogeneous_tilde(0) * homogeneous(r); }, e, h}},
      {SchurType::IIstar,
       {[](int r) { return Rational(sign_pow(r)) * SP::theta(r + 1); }, [](int r) { return homogeneous_tilde(r); }, e,
        h}},
  };
  const char* column_names[] = {"(0;1^r)", "(r;)", "(;1^r)", "(;r)"};
  auto shape = [](int column, int r) {
    switch (column) {
      case 0:
        return make_sp({0}, ones(r));
      case 1:
        return make_sp({r}, {});
      case 2:
        return make_sp({}, ones(r));
      default:
        return r == 0 ? SuperPartition() : make_sp({}, {r});
    }
  };
  for (const Row& row : rows) {
    for (int column = 0; column < 4; ++column) {
      Check check(to_string(row.family) + " " + column_names[column]);
      for (int r = 0; r <= max_r; ++r) {
        const SuperPartition sp = shape(column, r);
        const SP& got = table.get(row.family, sp);
        const SP want = row.col[column](r);
        check.expect(got == want, [&] {
          return to_string(row.family) + to_display_string(sp) + " = " + show(got) + ", expected " + show(want);
        });
      }
      suite.add(check);
    }
  }
  return suite.finish();
}

SuiteReport verify_orthogonality(const VerifyBounds& bounds, SchurTable& table) {
  Suite suite("orthogonality");
  for (const auto& [a, b] : {std::pair{SchurType::I, SchurType::Istar}, std::pair{SchurType::II, SchurType::IIstar}}) {
    Check check("<" + to_string(a) + ", " + to_string(b) + "> = delta");
    for (int n = 0; n <= bounds.max_total; ++n)
      for (int m = 0; m <= bounds.max_fermionic; ++m) {
        table.populate_block(a, {n, m});
        table.populate_block(b, {n, m});
        const auto members = enumerate_superpartitions(n, m);
        std::vector<Rational> gram(members.size() * members.size());
        for_each_index(gram.size(), Execution::Parallel, [&](std::size_t k) {
          gram[k] = scalar_product(table.get(a, members[k / members.size()]), table.get(b, members[k % members.size()]));
        });
        for (std::size_t k = 0; k < gram.size(); ++k) {
          const std::size_t i = k / members.size(), j = k % members.size();
          check.expect(gram[k] == (i == j ? 1 : 0), [&] {
            return "<" + to_display_string(members[i]) + ", " + to_display_string(members[j]) +
                   "> = " + to_string(gram[k]);
          });
        }
      }
    suite.add(check);
  }
  return suite.finish();
}

SuiteReport verify_creation(const VerifyBounds& bounds, SchurTable& table, int extra_modes) {
  Suite suite("creation");
  const auto all = superpartitions_up_to(bounds);
  for (SchurType t : kFamilies) {
    Check strings(to_string(t) + " operator strings");
    for (const auto& sp : all) {
      if (sp.empty()) continue;
      std::string text;
      for (const auto& [n, eps] : mode_string(sp))
        text += (text.empty() ? "" : " ") + family_prefix(t) + std::to_string(n) + "^" + std::to_string(eps);
      const SP built = parse_operator_string(text)(SP::one());
      strings.expect(built == table.get(t, sp), [&] { return text + " . 1 differs from " + to_display_string(sp); });
    }
    suite.add(strings);

    Check single(to_string(t) + " single modes add one row");
    for (const auto& sp : all) {
      const Partition star = sp.star(), circled = sp.circled();
      const int first = circled.empty() ? 0 : circled.front();
      for (int n = first; n <= first + extra_modes; ++n)
        for (int eps = 0; eps <= 1; ++eps) {
          if (n + eps == 0) continue;  // B_0^(0) . 1 = 1 adds no row
          Partition new_star = star, new_circled = circled;
          new_star.insert(new_star.begin(), n);
          new_circled.insert(new_circled.begin(), n + eps);
          while (!new_star.empty() && new_star.back() == 0) new_star.pop_back();
          const SuperPartition target = SuperPartition::from_diagrams(new_star, new_circled);
          const SP applied = schur_mode(t, n, eps)(table.get(t, sp));
          const Expansion e = table.expand(applied, t);
          single.expect(e == Expansion{{target, Rational(1)}}, [&] {
            return family_prefix(t) + std::to_string(n) + "^" + std::to_string(eps) + " on " + to_display_string(sp) +
                   " gives " + to_string(e);
          });
        }
    }
    suite.add(single);
  }
  return suite.finish();
}

SuiteReport verify_pieri(const VerifyBounds& bounds, SchurTable& table, int max_r) {
  Suite suite("pieri");
  const auto all = superpartitions_up_to(bounds);
  for (PieriRule rule : {PieriRule::ElementaryOnS, PieriRule::ThetaOnS, PieriRule::HomogeneousOnSStar,
                         PieriRule::ElementaryOnSStar}) {
    Check check(to_string(rule) + " rule matches the product");
    for (const auto& sp : all)
      for (int r = 0; r <= max_r; ++r) {
        const SignedExpansion rule_terms = pieri(rule, r, sp);
        const Expansion got = to_expansion(rule_terms);
        const Expansion want = oracle_product(rule_generator(rule, r), sp, rule_family(rule), table);
        check.expect(got == want, [&] {
          return to_string(rule) + " r=" + std::to_string(r) + " on " + to_display_string(sp) + ": rule gives {" +
                 to_string(got) + "}, product gives {" + to_string(want) + "}";
        });
        const int shift = rule == PieriRule::ThetaOnS ? 1 : 0;
        for (const auto& [omega, c] : rule_terms)
          check.expect((c == 1 || c == -1) && omega.fermionic_degree() == sp.fermionic_degree() + shift, [&] {
            return to_string(rule) + " r=" + std::to_string(r) + " on " + to_display_string(sp) + ": term " +
                   to_display_string(omega) + " with coefficient " + std::to_string(c);
          });
      }
    suite.add(check);
  }
  Check circle("strip_first_circle undoes add_first_circle");
  for (const auto& sp : all) {
    const auto added = add_first_circle(sp);
    if (!added) continue;
    const auto back = strip_first_circle(*added);
    circle.expect(back && *back == sp, [&] { return to_display_string(sp); });
    const SP lowered = partial_e_tilde(0)(table.get(SchurType::I, *added));
    circle.expect(lowered == table.get(SchurType::I, sp),
                  [&] { return "de0 s_" + to_display_string(*added) + " = " + show(lowered); });
  }
  for (const auto& sp : all) {
    if (strip_first_circle(sp)) continue;
    const SP lowered = partial_e_tilde(0)(table.get(SchurType::I, sp));
    circle.expect(lowered.terms().empty(), [&] { return "de0 s_" + to_display_string(sp) + " = " + show(lowered); });
  }
  suite.add(circle);
  return suite.finish();
}

SuiteReport verify_dualities(const VerifyBounds& bounds, SchurTable& table) {
  Suite suite("dualities");
  const auto monomials = monomials_up_to(bounds);
  Check omega2("omega^2 = id"), rho2("rho^2 = id");
  for (const auto& mono : monomials) {
    const SP f = monomial_poly(mono);
    const SP w = omega(omega(f));
    omega2.expect(w == f, [&] { return to_string(mono) + " -> " + show(w); });
    const SP r = rho(rho(f));
    rho2.expect(r == f, [&] { return to_string(mono) + " -> " + show(r); });
  }
  suite.add(omega2);
  suite.add(rho2);

  const auto all = superpartitions_up_to(bounds);
  Check star_omega("s*_L = omega(sbar_L')");
  Check barstar_omega("sbar*_L = omega(s_L')");
  Check rho_check("rho(s_L) = (-1)^binom(m,2) s_L'");
  Check phi_check("phi(s_L) = sbar*_L");
  Check phi_perp_check("phi^perp(sbar_L) = s*_L");
  Check star_signed("s*_L = (-1)^binom(m,2) omega(sbar_L')", true);
  Check barstar_signed("sbar*_L = (-1)^binom(m,2) omega(s_L')", true);
  for (const auto& sp : all) {
    const SuperPartition conj = conjugate(sp);
    const Rational sigma(sign_pow(binom2(sp.fermionic_degree())));
    const SP& s = table.get(SchurType::I, sp);
    const SP& s_star = table.get(SchurType::Istar, sp);
    const SP& s_bar = table.get(SchurType::II, sp);
    const SP& s_bar_star = table.get(SchurType::IIstar, sp);
    const SP omega_bar_conj = omega(table.get(SchurType::II, conj));
    const SP omega_conj = omega(table.get(SchurType::I, conj));
    const std::string where = to_display_string(sp);
    star_omega.expect(s_star == omega_bar_conj, [&] { return where; });
    barstar_omega.expect(s_bar_star == omega_conj, [&] { return where; });
    star_signed.expect(s_star == sigma * omega_bar_conj, [&] { return where; });
    barstar_signed.expect(s_bar_star == sigma * omega_conj, [&] { return where; });
    rho_check.expect(rho(s) == sigma * table.get(SchurType::I, conj), [&] { return where; });
    phi_check.expect(phi(s) == s_bar_star, [&] { return where; });
    phi_perp_check.expect(phi_perp(s_bar) == s_star, [&] { return where; });
  }
  for (Check* c : {&star_omega, &barstar_omega, &rho_check, &phi_check, &phi_perp_check, &star_signed, &barstar_signed})
    suite.add(*c);
  return suite.finish();
}

SuiteReport verify_exchange_relations(const VerifyBounds& bounds, int max_index) {
  Suite suite("appendixA");
  const SP zero;
  auto e = [](int n) { return elementary(n); };
  auto h = [](int n) { return homogeneous(n); };
  auto et = [](int n) { return elementary_tilde(n); };
  auto ht = [](int n) { return homogeneous_tilde(n); };
  auto x = [](int k) { return SP::x(k); };

  Check derivatives("generator derivatives");
  auto same = [&](const SP& got, const SP& want, const std::string& what) {
    derivatives.expect(got == want, [&] { return what + " = " + show(got) + ", expected " + show(want); });
  };
  for (int m = 1; m <= max_index; ++m)
    for (int n = 0; n <= max_index; ++n) {
      const std::string mn = std::to_string(m) + "," + std::to_string(n);
      const Rational s(sign_pow(m - 1));
      same(partial_x(m, e(n)), s * e(n - m), "dx e " + mn);
      same(partial_x(m, et(n)), s * et(n - m), "dx etilde " + mn);
      same(partial_theta(m, e(n)), zero, "dtheta e " + mn);
      same(partial_theta(m, et(n)), s * e(n - m + 1), "dtheta etilde " + mn);
      same(partial_x(m, h(n)), h(n - m), "dx h " + mn);
      same(partial_x(m, ht(n)), ht(n - m), "dx htilde " + mn);
      same(partial_theta(m, h(n)), zero, "dtheta h " + mn);
      same(partial_theta(m, ht(n)), h(n - m + 1), "dtheta htilde " + mn);
    }
  for (int m = 0; m <= max_index; ++m) {
    const LinearOperator d = partial_e_tilde(m);
    for (int n = 0; n <= max_index; ++n) {
      const std::string mn = std::to_string(m) + "," + std::to_string(n);
      if (n >= 1) same(d(x(n)), zero, "de x " + mn);
      same(d(h(n)), zero, "de h " + mn);
      same(d(e(n)), zero, "de e " + mn);
      same(d(SP::theta(n + 1)), Rational(sign_pow(m)) * h(n - m), "de theta " + mn);
      same(d(et(n)), m == n ? SP::one() : zero, "de etilde " + mn);
    }
  }
  suite.add(derivatives);

  const auto monomials = monomials_up_to(bounds);

  Check fast_path("de_r^perp closed form equals the scalar-product adjoint");
  for (int r = 0; r <= std::min(max_index, 3); ++r) {
    const LinearOperator gram = gram_adjoint(partial_e_tilde(r));
    const LinearOperator closed = partial_e_tilde_perp(r);
    for (const auto& mono : monomials) {
      const SP f = monomial_poly(mono);
      fast_path.expect(gram(f) == closed(f), [&] { return "r=" + std::to_string(r) + " on " + to_string(mono); });
    }
  }
  suite.add(fast_path);

  // Adjoints of multiplication, per generator and index, under both conventions.
  struct Adjoints {
    std::map<int, LinearOperator> formal, gram;
  };
  std::map<char, Adjoints> adj;
  const std::map<char, std::function<SP(int)>> generators = {{'e', e}, {'h', h}, {'E', et}, {'H', ht}};
  const std::map<char, std::string> generator_names = {{'e', "e"}, {'h', "h"}, {'E', "etilde"}, {'H', "htilde"}};
  // The htilde-htilde relation reaches index max_index + 1.
  for (const auto& [key, gen] : generators)
    for (int k = 0; k <= max_index + 1; ++k) {
      const std::string name = generator_names.at(key) + std::to_string(k);
      adj[key].formal.emplace(k, formal_adjoint(gen(k), name));
      adj[key].gram.emplace(k, element_adjoint(gen(k), name));
    }
  auto perp = [&](char key, bool gram, int k, const SP& f) -> SP {
    if (k < 0) return SP();
    auto& table = gram ? adj[key].gram : adj[key].formal;
    return table.at(k)(f);
  };

  Check bridge("scalar-product adjoint = parity twist after the formal adjoint on odd generators");
  for (const auto& [key, gen] : generators) {
    const bool odd = key == 'E' || key == 'H';
    for (int k = 0; k <= max_index; ++k)
      for (const auto& mono : monomials) {
        const SP f = monomial_poly(mono);
        const SP formal = perp(key, false, k, f);
        bridge.expect(perp(key, true, k, f) == (odd ? parity_twist(formal) : formal), [&] {
          return generator_names.at(key) + std::to_string(k) + "^perp on " + to_string(mono);
        });
      }
  }
  suite.add(bridge);

  // lhs/rhs of each exchange relation at (m, n) on f. `gram` picks the
  // adjoint; `translated` uses the scalar-product form of relations 4 and 8.
  using Relation = std::function<std::pair<SP, SP>(int, int, const SP&, bool, bool)>;
  auto sum_r = [](int limit, const std::function<SP(int)>& term) {
    SP out;
    for (int r = 0; r <= limit; ++r) out += term(r);
    return out;
  };
  const std::vector<std::pair<std::string, Relation>> relations = {
      {"e_m^perp h_n",
       [&](int m, int n, const SP& f, bool g, bool) {
         return std::pair{perp('e', g, m, h(n) * f), h(n) * perp('e', g, m, f) + h(n - 1) * perp('e', g, m - 1, f)};
       }},
      {"etilde_m^perp h_n",
       [&](int m, int n, const SP& f, bool g, bool) {
         return std::pair{perp('E', g, m, h(n) * f), h(n) * perp('E', g, m, f) + h(n - 1) * perp('E', g, m - 1, f)};
       }},
      {"e_m^perp htilde_n",
       [&](int m, int n, const SP& f, bool g, bool) {
         return std::pair{perp('e', g, m, ht(n) * f),
                          ht(n) * perp('e', g, m, f) + ht(n - 1) * perp('e', g, m - 1, f)};
       }},
      {"etilde_m^perp htilde_n",
       [&](int m, int n, const SP& f, bool g, bool translated) {
         const SP lhs = perp('E', g, m, ht(n) * f);
         const SP pair = ht(n) * perp('E', g, m, f) + ht(n - 1) * perp('E', g, m - 1, f);
         if (translated) return std::pair{lhs, pair + h(n) * perp('e', g, m, parity_twist(f))};
         return std::pair{lhs, h(n) * perp('e', g, m, f) - pair};
       }},
      {"h_m^perp h_n",
       [&](int m, int n, const SP& f, bool g, bool) {
         return std::pair{perp('h', g, m, h(n) * f),
                          sum_r(m, [&](int r) { return h(n - r) * perp('h', g, m - r, f); })};
       }},
      {"h_m^perp htilde_n",
       [&](int m, int n, const SP& f, bool g, bool) {
         return std::pair{perp('h', g, m, ht(n) * f),
                          sum_r(m, [&](int r) { return ht(n - r) * perp('h', g, m - r, f); })};
       }},
      {"htilde_m^perp h_n",
       [&](int m, int n, const SP& f, bool g, bool) {
         return std::pair{perp('H', g, m, h(n) * f),
                          sum_r(m, [&](int r) { return h(n - r) * perp('H', g, m - r, f); })};
       }},
      {"htilde_m^perp htilde_n",
       [&](int m, int n, const SP& f, bool g, bool translated) {
         const SP lhs = perp('H', g, m, ht(n) * f);
         if (translated)
           return std::pair{lhs, sum_r(m + 1, [&](int r) {
                              return ht(n - r) * perp('H', g, m - r, f) +
                                     Rational(r) * h(n - r + 1) * perp('h', g, m - r + 1, parity_twist(f));
                            })};
         return std::pair{lhs, sum_r(m + 1, [&](int r) {
                            return Rational(r) * h(n - r + 1) * perp('h', g, m - r + 1, f) -
                                   ht(n - r) * perp('H', g, m - r, f);
                          })};
       }},
  };

  auto run_relations = [&](const std::string& label, bool gram, bool translated, bool informational,
                           const std::vector<int>& which) {
    for (int idx : which) {
      const auto& [name, relation] = relations[idx];
      Check check(name + " (" + label + ")", informational);
      for (int m = 0; m <= max_index; ++m)
        for (int n = 0; n <= max_index; ++n)
          for (const auto& mono : monomials) {
            const auto [lhs, rhs] = relation(m, n, monomial_poly(mono), gram, translated);
            check.expect(lhs == rhs, [&] {
              return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " on " + to_string(mono) + ": " +
                     show(lhs) + " vs " + show(rhs);
            });
          }
      suite.add(check);
    }
  };
  run_relations("formal adjoint", false, false, false, {0, 1, 2, 3, 4, 5, 6, 7});
  run_relations("scalar-product adjoint", true, true, false, {0, 1, 2, 3, 4, 5, 6, 7});
  run_relations("scalar-product adjoint, untranslated", true, false, true, {3, 7});
  return suite.finish();
}

std::string to_string(OddModeSign sign) {
  switch (sign) {
    case OddModeSign::Plus:
      return "plus";
    case OddModeSign::Minus:
      return "minus";
    case OddModeSign::InputParity:
      return "input-parity";
    case OddModeSign::MinusInputParity:
      return "minus-input-parity";
  }
  return "?";
}

bool strips_to_one(SchurType family, const SuperPartition& sp, OddModeSign sign, SchurTable& table) {
  const bool use_k = family == SchurType::Istar;
  if (!use_k && family != SchurType::I) throw Error("row stripping is defined on the I and Istar families");
  SP f = table.get(family, sp);
  for (const auto& [n, eps] : mode_string(conjugate(sp))) f = use_k ? mode_K(-n, eps, sign)(f) : mode_L(-n, eps, sign)(f);
  return Rational(sign_pow(sp.total_degree())) * f == SP::one();
}

SuiteReport verify_negative_modes(const VerifyBounds& bounds, SchurTable& table) {
  Suite suite("negative-modes");
  const NegativeModeSigns signs = negative_mode_signs();
  const auto all = superpartitions_up_to(bounds);
  Check l_check("L strings reduce s_L to (-1)^|L|");
  Check k_check("K strings reduce s*_L to (-1)^|L|");
  for (const auto& sp : all) {
    l_check.expect(strips_to_one(SchurType::I, sp, signs.l_odd, table), [&] { return to_display_string(sp); });
    k_check.expect(strips_to_one(SchurType::Istar, sp, signs.k_odd, table), [&] { return to_display_string(sp); });
  }
  suite.add(l_check);
  suite.add(k_check);
  return suite.finish();
}

std::vector<SignCandidateScore> calibrate_negative_mode_signs(const VerifyBounds& bounds, SchurTable& table) {
  std::vector<SignCandidateScore> out;
  const auto all = superpartitions_up_to(bounds);
  for (OddModeSign sign :
       {OddModeSign::Plus, OddModeSign::Minus, OddModeSign::InputParity, OddModeSign::MinusInputParity}) {
    SignCandidateScore score{sign};
    for (const auto& sp : all) {
      ++score.total;
      score.k_passed += strips_to_one(SchurType::Istar, sp, sign, table);
      score.l_passed += strips_to_one(SchurType::I, sp, sign, table);
    }
    out.push_back(score);
  }
  return out;
}

SuiteReport verify_recurrence(const VerifyBounds& bounds, int max_r) {
  Suite suite("recurrence");
  Check check("(e_{r+1} + sum_s (-1)^s h_s e_{r+1-s}) s*_L = 0 through the rules");
  for (const auto& sp : superpartitions_up_to(bounds))
    for (int r = 0; r <= max_r; ++r) {
      const SignedExpansion base{{sp, 1}};
      SignedExpansion total = apply_rule(PieriRule::ElementaryOnSStar, r + 1, base);
      for (int s = 1; s <= r + 1; ++s) {
        const auto term = apply_rule(PieriRule::HomogeneousOnSStar, s,
                                     apply_rule(PieriRule::ElementaryOnSStar, r + 1 - s, base));
        for (const auto& [omega, c] : term) {
          int& v = total[omega];
          v += sign_pow(s) * c;
          if (v == 0) total.erase(omega);
        }
      }
      check.expect(total.empty(), [&] {
        return "r=" + std::to_string(r) + " on " + to_display_string(sp) + ": " + to_string(to_expansion(total));
      });
    }
  suite.add(check);
  return suite.finish();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"examples",  "table1",     "orthogonality",  "creation",  "pieri",
                                                 "dualities", "appendixA", "negative-modes", "recurrence"};
  return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const VerifyBounds& bounds, SchurTable& table) {
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& n : suite_names()) {
      auto part = run_suite(n, bounds, table);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (name == "examples") return {verify_examples(table)};
  if (name == "table1") return {verify_row_column_forms(bounds.max_total, table)};
  if (name == "orthogonality") return {verify_orthogonality(bounds, table)};
  if (name == "creation") return {verify_creation(bounds, table)};
  if (name == "pieri") return {verify_pieri(bounds, table)};
  if (name == "dualities") return {verify_dualities(bounds, table)};
  if (name == "appendixA") return {verify_exchange_relations(bounds, 6)};
  if (name == "negative-modes") return {verify_negative_modes(bounds, table)};
  if (name == "recurrence") return {verify_recurrence(bounds)};
  throw ParseError(0, "unknown suite '" + name + "'");
}

void to_json(nlohmann::json& j, const CheckResult& c) {
  j = {{"name", c.name},
       {"status", c.passed ? "PASS" : "FAIL"},
       {"informational", c.informational},
       {"count", c.count},
       {"seconds", c.seconds}};
  if (!c.passed) j["counterexample"] = c.counterexample;
}

void to_json(nlohmann::json& j, const SuiteReport& r) {
  j = {{"suite", r.suite}, {"status", r.passed() ? "PASS" : "FAIL"}, {"seconds", r.seconds}, {"checks", r.checks}};
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  for (const auto& c : r.checks) {
    out << (c.informational ? (c.passed ? "info " : "INFO ") : (c.passed ? "PASS " : "FAIL ")) << r.suite << ": "
        << c.name << " (" << c.count << " checks, " << c.seconds << " s)\n";
    if (!c.passed) out << "     first counterexample: " << c.counterexample << "\n";
  }
  out << (r.passed() ? "PASS" : "FAIL") << " suite " << r.suite << " (" << r.seconds << " s)\n";
  return out.str();
}

}  // namespace sschur
