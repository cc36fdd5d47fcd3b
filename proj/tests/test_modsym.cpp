#include "wronsk/heilbronn.hpp"
#include "wronsk/modsym.hpp"

#include <doctest.h>

#include <random>

using namespace wronsk;

namespace {

SymbolVector relation_row(const PresentedSpace& space, int r) {
  SymbolVector w(space.level());
  for (const auto& [g, c] : space.relations().row(r)) {
    const SymbolKey k = space.generator(g);
    w.add(k.mono, k.u, k.v, c);
  }
  return w;
}

SymbolVector random_symbol(const PresentedSpace& space, std::mt19937& rng, int terms = 6) {
  std::uniform_int_distribution<int> gen(0, space.generator_count() - 1), coef(-5, 5);
  SymbolVector w(space.level());
  for (int t = 0; t < terms; ++t) {
    const SymbolKey k = space.generator(gen(rng));
    w.add(k.mono, k.u, k.v, Rational(coef(rng), 3));
  }
  return w;
}

}  // namespace

TEST_SUITE("modsym") {

TEST_CASE("symbol vectors") {
  SymbolVector w(5);
  w.add(Monomial::XY, 6, -4, 2);
  CHECK(w.terms().at({Monomial::XY, 1, 1}) == 2);
  w.add(Monomial::XY, 1, 1, -2);
  CHECK(w.empty());
  CHECK_THROWS_AS(SymbolVector(6).add(Monomial::X2, 2, 4, 1), std::invalid_argument);
  CHECK_FALSE(SymbolVector(6).add_admissible(Monomial::X2, 3, 3, 1));
  CHECK_THROWS_AS(symbol(Monomial::XY, 1, 2, 5) + symbol(Monomial::XY, 1, 2, 7), LevelMismatch);
  SymbolVector p(7);
  p.add_poly({1, 2, 3}, 1, 2);
  CHECK(p == symbol(Monomial::X2, 1, 2, 7) + Rational(2) * symbol(Monomial::XY, 1, 2, 7) +
                 Rational(3) * symbol(Monomial::Y2, 1, 2, 7));
  CHECK(parse_monomial("y2") == Monomial::Y2);
  CHECK(std::string(monomial_name(Monomial::XY)) == "xy");
}

TEST_CASE("presented space basics") {
  CHECK_THROWS_AS(PresentedSpace(1), LevelTooSmall);
  const PresentedSpace s5(5);
  CHECK(s5.generator_count() == 72);
  CHECK(s5.dim() == 6);
  CHECK(PresentedSpace(7).dim() == 12);
  CHECK(PresentedSpace(11).dim() == 30);
  CHECK(PresentedSpace(13).dim() == 42);

  std::mt19937 rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto [u, v] = s5.pairs()[std::uniform_int_distribution<int>(0, 23)(rng)];
    const SymbolVector r = symbol(Monomial::X2, u, v, 5) + symbol(Monomial::Y2, v, -u, 5);
    CHECK(s5.coordinates(r).isZero());
  }
  for (int r = 0; r < s5.relations().rows(); ++r) CHECK(s5.coordinates(relation_row(s5, r)).isZero());
  for (int k = 0; k < s5.dim(); ++k) {
    VectorQ e = VectorQ::Zero(s5.dim());
    e[k] = 1;
    CHECK(s5.coordinates(s5.basis_symbol(k)) == e);
    CHECK(s5.coordinates(s5.lift(e)) == e);
  }
  const SymbolVector w = random_symbol(s5, rng);
  CHECK(s5.coordinates(s5.lift(s5.coordinates(w))) == s5.coordinates(w));
}

TEST_CASE("cusps") {
  CHECK(cusps(5).size() == 4);
  CHECK(cusps(7).size() == 6);
  CHECK(cusps(11).size() == 10);
  CHECK(cusps(13).size() == 12);
  const auto c5 = cusps(5);
  CHECK(std::find(c5.begin(), c5.end(), CuspClass{5, 0, 1}) != c5.end());
  CHECK(std::find(c5.begin(), c5.end(), CuspClass{5, 0, 2}) != c5.end());
  CHECK(std::find(c5.begin(), c5.end(), CuspClass{5, 1, 0}) != c5.end());
  CHECK(std::find(c5.begin(), c5.end(), CuspClass{5, 2, 0}) != c5.end());
  for (int l : {6, 8, 9, 12}) {
    for (long a = 0; a < l; ++a)
      for (long b = 0; b < l; ++b)
        if (gcd(gcd(a, b), l) == 1) CHECK(canonical_cusp(a, b, l) == canonical_cusp(-a, -b, l));
  }
}

TEST_CASE("cusp evaluation") {
  for (int l : {5, 7}) {
    const PresentedSpace s(l);
    for (const auto& c : cusps(l)) {
      CHECK(cusp_eval(c, symbol(Monomial::XY, 1, 2, l)) == 0);
      for (int r = 0; r < s.relations().rows(); ++r) CHECK(cusp_eval(c, relation_row(s, r)) == 0);
    }
  }
  const CuspClass c{7, 2, 1};
  CHECK(cusp_eval(c, symbol(Monomial::X2, 2, 1, 7)) == 1);
  CHECK_THROWS_AS(cusp_eval(CuspClass{5, 1, 0}, symbol(Monomial::X2, 1, 0, 7)), LevelMismatch);
}

TEST_CASE("cuspidal subspace and xy span") {
  for (int l : {5, 7, 11, 13}) {
    const ModularSymbols ms(l);
    for (auto [u, v] : ms.space().pairs()) {
      CHECK(ms.cuspidal().contains(ms.space().coordinates(symbol(Monomial::XY, u, v, l))));
    }
    CHECK(subspace_equal(ms.xy().span(), ms.cuspidal()));
    CHECK(ms.cuspidal().dim() == ms.space().dim() - static_cast<int>(ms.cusp_list().size()));
  }
  const ModularSymbols ms5(5);
  CHECK_FALSE(ms5.cuspidal().contains(ms5.space().coordinates(symbol(Monomial::X2, 1, 0, 5))));
  CHECK_THROWS_AS(ms5.xy().reduce(symbol(Monomial::X2, 1, 0, 5)), NotCuspidal);
}

TEST_CASE("involution") {
  std::mt19937 rng(9);
  const PresentedSpace s(7);
  for (int t = 0; t < 50; ++t) {
    const SymbolVector w = random_symbol(s, rng);
    CHECK(involution_i(involution_i(w)) == w);
    CHECK(symmetrize(w, Sign::Plus) + symmetrize(w, Sign::Minus) == w);
  }
  CHECK(involution_i(symbol(Monomial::XY, 1, 2, 7)) == Rational(-1) * symbol(Monomial::XY, -1, 2, 7));
  for (int l : {5, 7}) {
    const PresentedSpace sp(l);
    for (int r = 0; r < sp.relations().rows(); ++r) {
      CHECK(sp.coordinates(involution_i(relation_row(sp, r))).isZero());
    }
  }
}

TEST_CASE("plus and minus parts") {
  const int expected[] = {1, 3, 10, 15};
  int idx = 0;
  for (int l : {5, 7, 11, 13}) {
    const ModularSymbols ms(l);
    CHECK(ms.plus().dim() == expected[idx]);
    CHECK(ms.minus().dim() == expected[idx]);
    ++idx;
    CHECK(subspace_intersection(ms.plus(), ms.minus()).dim() == 0);
    CHECK(subspace_equal(subspace_sum(ms.plus(), ms.minus()), ms.cuspidal()));
    for (const auto& v : ms.plus().basis_vectors()) CHECK(ms.involution() * v == v);
    for (const auto& v : ms.minus().basis_vectors()) CHECK(ms.involution() * v == -v);
  }
}

TEST_CASE("xy identities in the plus part") {
  for (int l : {5, 7, 11}) {
    const PresentedSpace s(l);
    const auto plus = [&](long u, long v) {
      return s.coordinates(symmetrize(symbol(Monomial::XY, u, v, l), Sign::Plus));
    };
    for (auto [u, v] : s.pairs()) {
      CHECK(plus(u, v) == -plus(-u, v));
      CHECK(plus(u, v) == -plus(v, u));
    }
  }
}

TEST_CASE("xy reduction") {
  const ModularSymbols ms(5);
  const auto image = [&](const XYCoefficients& c) {
    SymbolVector w(5);
    for (const auto& [uv, x] : c) w.add(Monomial::XY, uv.first, uv.second, x);
    return ms.space().coordinates(w);
  };
  const SymbolVector a = symbol(Monomial::XY, 1, 2, 5);
  CHECK(image(ms.xy().reduce(a)) == ms.space().coordinates(a));
  CHECK(ms.xy().reduce(SymbolVector(5)).empty());
  for (auto [u, v] : ms.space().pairs()) {
    if (!admissible(u, u + v, 5)) continue;
    const SymbolVector lhs = symbol(Monomial::X2, u, u + v, 5) - symbol(Monomial::X2, u, v, 5);
    SymbolVector rhs = symbol(Monomial::XY, v, -u - v, 5) - symbol(Monomial::XY, -u - v, u, 5);
    rhs -= symbol(Monomial::XY, u, v, 5);
    CHECK(image(ms.xy().reduce(lhs)) == ms.space().coordinates(rhs));
  }
  for (const auto& rel : ms.xy().relations()) CHECK(ms.space().coordinates(rel).isZero());
}

TEST_CASE("extra relations vanish in the quotient") {
  CHECK(PresentedSpace(5).coordinates(extra_relation(1, 1, 5)).isZero());
  CHECK(PresentedSpace(7).coordinates(extra_relation(2, 3, 7)).isZero());
  for (int l : {5, 6, 7, 8, 9, 10, 11, 12, 13}) {
    const PresentedSpace s(l);
    for (auto [u, v] : s.pairs()) {
      CHECK(s.coordinates(extra_relation(u, v, l)).isZero());
      CHECK(s.coordinates(symbol(Monomial::XY, u, v, l) - symbol(Monomial::XY, v, -u, l)).isZero());
    }
  }
}

TEST_CASE("diamond operators") {
  std::mt19937 rng(4);
  for (int l : {5, 7}) {
    const PresentedSpace s(l);
    const SymbolVector w = random_symbol(s, rng);
    CHECK(diamond(1, w) == w);
    for (long j = 1; j < l; ++j) {
      for (long k = 1; k < l; ++k) CHECK(diamond(j, diamond(k, w)) == diamond(j * k, w));
      for (int r = 0; r < s.relations().rows(); ++r) {
        CHECK(s.coordinates(diamond(j, relation_row(s, r))).isZero());
      }
      CHECK(involution_i(diamond(j, w)) == diamond(j, involution_i(w)));
    }
  }
  CHECK_THROWS_AS(diamond(2, symbol(Monomial::XY, 1, 1, 6)), NotAUnit);
}

}
