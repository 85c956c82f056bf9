#include "ifscheck/errors.hpp"
#include "ifscheck/segments.hpp"

#include <doctest.h>

using namespace ifscheck;

namespace {

DigitStream c2(const char* text) { return DigitStream::parse(Alphabet::C2, text); }
RatPoint pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

}  // namespace

TEST_CASE("ell_x and ell_z_clipped") {
  CHECK(ell_x(rat(1, 5)) == SlopeFourSegment(pt(rat(1, 5), 0), pt(rat(9, 20), 1)));
  CHECK(ell_x(rat(1, 2)) == SlopeFourSegment(pt(rat(1, 2), 0), pt(rat(3, 4), 1)));
  CHECK(ell_x(0) == SlopeFourSegment(pt(0, 0), pt(rat(1, 4), 1)));
  CHECK_THROWS_AS(ell_x(rat(4, 5)), InputError);
  CHECK_THROWS_AS(ell_x(rat(-1, 5)), InputError);

  CHECK(ell_z_clipped(0) == SlopeFourSegment(pt(0, 0), pt(rat(1, 4), 1)));
  CHECK(ell_z_clipped(rat(1, 5)) == SlopeFourSegment(pt(0, rat(1, 5)), pt(rat(1, 5), 1)));
  const auto s = ell_z_clipped(rat(1, 7));
  for (const auto& p : {s.base(), s.top()}) CHECK(p.y == Rational(4) * p.x + rat(1, 7));
  CHECK_THROWS_AS(ell_z_clipped(rat(1, 4)), InputError);
}

TEST_CASE("slope-4 validation") {
  CHECK_THROWS_AS(SlopeFourSegment(pt(0, 0), pt(1, 1)), InputError);
  CHECK_THROWS_AS(SlopeFourSegment(pt(rat(1, 4), 1), pt(0, 0)), InputError);
  CHECK(ell_x(rat(1, 5)).band_coordinate() == rat(1, 5));
  CHECK(apply(paper_ifs().map(3), ell_x(rat(1, 2))) ==
        SlopeFourSegment(pt(rat(1, 12), rat(1, 3)), pt(rat(1, 8), rat(1, 2))));
}

TEST_CASE("segments_chain on the E pieces") {
  const Ifs& phi = paper_ifs();
  const auto l = ell_x(rat(1, 2)).segment();
  CHECK(segments_chain(apply(phi.map(3), l), apply(phi.map(4), l)));
}

TEST_CASE("E examples") {
  CHECK(E(c2("|0")) == SlopeFourSegment(pt(rat(1, 12), rat(1, 3)), pt(rat(1, 4), 1)));
  CHECK(E(c2("|1")) == SlopeFourSegment(pt(rat(1, 30), rat(1, 3)), pt(rat(1, 5), 1)));
  const auto e = E(c2("01|1"));
  CHECK(e.top() - e.base() == pt(rat(1, 6), rat(2, 3)));
}

TEST_CASE("L examples") {
  const auto l0 = L(0, c2("|0"));
  CHECK(l0.base() == pt(rat(1, 72), rat(1, 18)));
  CHECK(l0.top() == pt(rat(1, 12), rat(1, 3)));
  const auto l1 = L(1, c2("|1"));
  CHECK(l1.base() == pt(rat(1, 180), rat(2, 9)));
  CHECK(l1.top() == pt(rat(1, 30), rat(1, 3)));
  std::mt19937_64 rng(1);
  for (int k = 0; k < 50; ++k) {
    const DigitStream z = random_stream(Alphabet::C2, rng);
    CHECK(L(1, z).base().y == rat(2, 9));
    CHECK(L(0, z).base().y == rat(1, 18));
    CHECK(L(0, z).top().y == rat(1, 3));
  }
  CHECK_THROWS_AS(L(2, c2("|0")), InputError);
}

TEST_CASE("union route equals closed forms") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 100; ++k) {
    const DigitStream z = random_stream(Alphabet::C2, rng);
    CHECK(chain_union(e_pieces(z)) == e_closed_form(z));
    CHECK(chain_union(l_pieces(0, z)) == l_closed_form(0, z));
    CHECK(chain_union(l_pieces(1, z)) == l_closed_form(1, z));
    CHECK(e_pieces(z).size() == 4);
  }
}

TEST_CASE("chain_union rejects gaps and bends") {
  const SlopeFourSegment a(pt(0, 0), pt(rat(1, 4), 1));
  const SlopeFourSegment b(pt(rat(1, 2), 2), pt(rat(3, 4), 3));
  CHECK_THROWS_AS(chain_union({a, b}), ConsistencyError);
  CHECK_THROWS_AS(chain_union({}), ConsistencyError);
  const SlopeFourSegment c(pt(rat(1, 4), 1), pt(rat(1, 2), 2));
  CHECK(chain_union({a, c}) == SlopeFourSegment(pt(0, 0), pt(rat(1, 2), 2)));
}

TEST_CASE("verify_lemma2 on examples and random streams") {
  const Report zero = verify_lemma2(c2("|0"));
  CHECK(zero.passed());
  // For x(z) = 1/2 the i = 3 chain point is φ_3(3/4, 1) = (1/8, 1/2).
  CHECK(std::any_of(zero.checks.begin(), zero.checks.end(),
                    [](const Check& c) { return c.lhs == "(1/8, 1/2)" && c.rhs == "(1/8, 1/2)"; }));
  CHECK(verify_lemma2(c2("|1")).passed());
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) CHECK(verify_lemma2(random_stream(Alphabet::C2, rng)).passed());
}

TEST_CASE("decomposition of the line through (0, z)") {
  const auto d = decompose_ell_z(c2("|0"), 3);
  CHECK(d.head == SlopeFourSegment(pt(rat(1, 12), rat(1, 3)), pt(rat(1, 4), 1)));
  REQUIRE(d.chain.size() == 3);
  CHECK(d.chain[0] == SlopeFourSegment(pt(rat(1, 72), rat(1, 18)), pt(rat(1, 12), rat(1, 3))));
  CHECK(d.chain[1] == SlopeFourSegment(pt(rat(1, 432), rat(1, 108)), pt(rat(1, 72), rat(1, 18))));
  CHECK(d.coverage_low() == rat(1, 648));
  CHECK(d.anchor == pt(0, 0));
  CHECK(verify_line_membership(d).passed());

  std::mt19937_64 rng(12);
  for (int k = 0; k < 30; ++k) {
    const DigitStream z = random_stream(Alphabet::C2, rng);
    const auto dz = decompose_ell_z(z, 12);
    const Rational zv = stream_value(z);
    CHECK(dz.head.top() == ell_z_clipped(zv).top());
    CHECK(dz.head.base() == dz.chain[0].top());
    for (std::size_t n = 0; n + 1 < dz.chain.size(); ++n) CHECK(dz.chain[n].base() == dz.chain[n + 1].top());
    CHECK(dz.coverage_low() - zv <= inverse_power_of_six(12));
    CHECK(dz.coverage_low() >= zv);
    CHECK(verify_line_membership(dz).passed());
  }
  CHECK_THROWS_AS(decompose_ell_z(c2("|0"), 0), InputError);
}

TEST_CASE("chain decomposition identities") {
  CHECK(verify_fact1(c2("|0")).passed());
  CHECK(verify_fact1(c2("|1")).passed());
  CHECK(verify_fact1(c2("0|1")).passed());
  CHECK(verify_fact1(c2("1|0")).passed());
  CHECK(verify_fact2(c2("|0"), 1).passed());
  CHECK(verify_fact2(c2("|1"), 5).passed());

  const Report f3 = verify_fact3(c2("|0"), 1);
  CHECK(f3.passed());
  CHECK(std::any_of(f3.checks.begin(), f3.checks.end(), [](const Check& c) { return c.lhs == "1/72"; }));
  CHECK(std::any_of(f3.checks.begin(), f3.checks.end(), [](const Check& c) { return c.lhs == "1/18"; }));
  CHECK(verify_fact3(c2("|0"), 4).passed());
  CHECK(verify_fact3(c2("|1"), 10).passed());

  std::mt19937_64 rng(77);
  for (int k = 0; k < 100; ++k) {
    const DigitStream z = random_stream(Alphabet::C2, rng);
    CHECK(verify_fact1(z).passed());
    for (int n = 1; n <= 20; ++n) CHECK(verify_fact2(z, n).passed());
    for (int n = 1; n <= 12; n += 3) CHECK(verify_fact3(z, n).passed());
  }
}
