#include <gtest/gtest.h>

#include <regex>

#include "crnt/dynamics/expression.hpp"
#include "crnt/dynamics/ode.hpp"
#include "crnt/network_io.hpp"
#include "testing.hpp"

using namespace crnt;
using namespace crnt::dyn;
using namespace crnt::testing;

namespace {

std::string fixture(const std::string& name) { return read_text_file(std::string(CRNT_NETWORKS_DIR) + "/" + name); }

Polynomial random_poly(Rng& rng, std::size_t vars) {
  Polynomial p(vars);
  std::size_t terms = uniform(rng, 0, 4);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(vars);
    for (auto& x : e) x = static_cast<std::uint32_t>(uniform(rng, 0, 2));
    p.add_term(e, Rational(uniform_ll(rng, -5, 5), uniform_ll(rng, 1, 3)));
  }
  return p;
}

ParamCheck check(const std::string& crn, const std::string& param_text) {
  ReactionNetwork net = parse_network(fixture(crn));
  return check_parametrization(net, parse_parametrization(param_text, net.m(), net.r()));
}

// Every way of replacing one k<i> occurrence by a different rate index.
std::vector<std::string> kappa_perturbations(const std::string& text, std::size_t reactions) {
  std::vector<std::string> out;
  std::regex kappa(R"(\bk(\d+)\b)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), kappa); it != std::sregex_iterator(); ++it) {
    std::size_t orig = std::stoul((*it)[1]);
    for (std::size_t alt = 1; alt <= reactions; ++alt) {
      if (alt == orig) continue;
      std::string t = text;
      t.replace(static_cast<std::size_t>(it->position()), static_cast<std::size_t>(it->length()), "k" + std::to_string(alt));
      out.push_back(t);
    }
  }
  return out;
}

}  // namespace

TEST(PolynomialProperty, RingLaws) {
  Rng rng(71);
  for (int it = 0; it < 300; ++it) {
    std::size_t v = uniform(rng, 1, 3);
    Polynomial a = random_poly(rng, v), b = random_poly(rng, v), c = random_poly(rng, v);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) - b, a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a.pow(3), a * a * a);
    auto pt = random_point(rng, v);
    ASSERT_EQ((a * b + c).evaluate(pt), a.evaluate(pt) * b.evaluate(pt) + c.evaluate(pt));
  }
}

TEST(Polynomial, Printing) {
  SymbolTable s(2, 2, 0);
  Polynomial p = Polynomial::variable(4, s.k(0)) * Polynomial::variable(4, s.x(0)).pow(2);
  p *= Rational(-2);
  p += Polynomial::variable(4, s.k(1)) * Polynomial::variable(4, s.x(1));
  EXPECT_EQ(p.str(s), "-2*x1^2*k1 + x2*k2");
  EXPECT_EQ(Polynomial(4).str(s), "0");
}

TEST(Expression, PrecedenceAndPowers) {
  SymbolTable s(0, 3, 1);
  auto f = parse_expression("k1 + 2*k2^2 - (k3 - t1)/2", s);
  std::vector<Rational> pt{Rational(1), Rational(2), Rational(3), Rational(5)};
  EXPECT_EQ(f.evaluate(pt), Rational(1) + Rational(8) - Rational(-2, 2));
  auto g = parse_expression("-k1/(k2+k3)*t1", s);
  EXPECT_EQ(g.evaluate(pt), Rational(-5, 5));
}

TEST(Expression, Errors) {
  SymbolTable s(0, 2, 0);
  EXPECT_THROW(parse_expression("k3", s), std::invalid_argument);
  EXPECT_THROW(parse_expression("k1 +", s), std::invalid_argument);
  EXPECT_THROW(parse_expression("k1/(k2-k2)", s), std::invalid_argument);
  EXPECT_THROW(parse_expression("(k1", s), std::invalid_argument);
  try {
    parse_expression("k1 $ k2", s);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("column 4"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_parametrization("x1 = k1\nx1 = k2\n", 1, 2), ParseError);
  EXPECT_THROW(parse_parametrization("x2 = k1\n", 1, 2), ParseError);
  EXPECT_THROW(parse_parametrization("x1 = k1\n", 2, 2), ParseError);
}

TEST(Ode, MassActionMatchesDirectEvaluation) {
  Rng rng(72);
  for (int it = 0; it < 100; ++it) {
    ReactionNetwork net = random_network(rng, 3, 6);
    OdeSystem sys = mas_rhs(net);
    ASSERT_TRUE(kappa_linear(sys));
    auto x = random_point(rng, net.m()), k = random_point(rng, net.r());
    ASSERT_EQ(eval_rhs(sys, x, k), mas_point(net, x, k));
  }
}

TEST(Ode, ShippedTranslationsAreEquivalent) {
  for (auto [crn, js] : {std::pair{"network1.crn", "network3.gcrn.json"}, {"lv.crn", "lv-translation.gcrn.json"},
                         {"pfk.crn", "pfk25.gcrn.json"}, {"example34.crn", "example34-translation.gcrn.json"}}) {
    ReactionNetwork net = parse_network(fixture(crn));
    SplitTranslation t = translation_from_json(net, fixture(js));
    EXPECT_TRUE(dynamically_equivalent(mas_rhs(net), gmas_rhs(t)).equivalent) << crn;
  }
}

TEST(Ode, PerturbedCopyIsNotEquivalent) {
  ReactionNetwork net = parse_network(fixture("lv.crn"));
  SplitTranslation t = translation_from_json(net, fixture("lv-translation.gcrn.json"));
  t.network.stoich[2].set(1, Rational(2));  // X2 -> 2 X2 at vertex 3
  Equivalence eq = dynamically_equivalent(mas_rhs(net), gmas_rhs(t));
  EXPECT_FALSE(eq.equivalent);
  ASSERT_TRUE(eq.first_difference());
  EXPECT_FALSE(eq.diff[*eq.first_difference()].is_zero());
}

TEST(Ode, SymbolMismatchThrows) {
  ReactionNetwork a = parse_network("r1: A -> B\n");
  ReactionNetwork b = parse_network("r1: A -> B\nr2: B -> A\n");
  EXPECT_THROW(dynamically_equivalent(mas_rhs(a), mas_rhs(b)), std::invalid_argument);
}

TEST(Param, ShippedParametrizationsVanish) {
  EXPECT_TRUE(check("network1.crn", fixture("param2.txt")).ok);
  EXPECT_TRUE(check("pfk.crn", fixture("pfk-full-param.txt")).ok);
  EXPECT_TRUE(check("pfk.crn", fixture("pfk-param26.txt")).ok);
}

TEST(Param, UnsquaredFormIsNotASteadyState) {
  ParamCheck c = check("network1.crn", fixture("param2-unsquared.txt"));
  EXPECT_FALSE(c.ok);
}

TEST(Param, PowerMustDivideSourceExponent) {
  ReactionNetwork net = parse_network("r1: A -> 2 B\nr2: B -> A\n");
  auto p = parse_parametrization("x1 = k2\nx2^2 = k1\n", 2, 2);
  EXPECT_THROW(check_parametrization(net, p), std::invalid_argument);
}

TEST(ParamProperty, EveryKappaPerturbationFails) {
  for (auto [crn, file, r] : {std::tuple{"network1.crn", "param2.txt", 6}, {"pfk.crn", "pfk-full-param.txt", 9}}) {
    auto variants = kappa_perturbations(fixture(file), static_cast<std::size_t>(r));
    ASSERT_GT(variants.size(), 50u);
    for (auto& v : variants) {
      ParamCheck c = check(crn, v);
      ASSERT_FALSE(c.ok) << v;
      bool any = false;
      for (auto& p : c.residuals) any = any || !p.is_zero();
      ASSERT_TRUE(any);
    }
  }
}

// The symbolic check agrees with exact evaluation of the mass-action field.
TEST(ParamProperty, NumericOracleOnPfk) {
  Rng rng(73);
  ReactionNetwork net = parse_network(fixture("pfk.crn"));
  Parametrization p = parse_parametrization(fixture("pfk-full-param.txt"), net.m(), net.r());
  for (int it = 0; it < 50; ++it) {
    auto k = random_point(rng, net.r()), t = random_point(rng, 2);
    std::vector<Rational> pt(p.symbols.size());
    for (std::size_t i = 0; i < net.r(); ++i) pt[p.symbols.k(i)] = k[i];
    for (std::size_t i = 0; i < 2; ++i) pt[p.symbols.t(i)] = t[i];
    std::vector<Rational> x;
    for (auto& f : p.x) x.push_back(f.evaluate(pt));
    for (auto& v : mas_point(net, x, k)) ASSERT_TRUE(v.is_zero());
  }
}
