#include "ifscheck/segments.hpp"

#include "ifscheck/errors.hpp"

namespace ifscheck {

namespace {

const Similitude& phi(int letter) { return paper_ifs().map(letter); }

bool pieces_chain(const std::vector<SlopeFourSegment>& pieces) {
  for (std::size_t k = 0; k + 1 < pieces.size(); ++k) {
    if (!segments_chain(pieces[k].segment(), pieces[k + 1].segment())) return false;
    if (pieces[k].top() != pieces[k + 1].base()) return false;
  }
  return !pieces.empty();
}

void require_c2(const DigitStream& z, const char* what) {
  if (z.alphabet() != Alphabet::C2) throw InputError(std::string(what) + ": expected a C2 stream");
}

// φ_{z_1⋯z_k}(p) for the C2 letters of z.
RatPoint along(const DigitStream& z, std::size_t k, const RatPoint& p) {
  return apply(word_map(paper_ifs(), c2_word(z, k)), p);
}

// Piece n of the decomposition (n >= 1).
SlopeFourSegment chain_piece(const DigitStream& z, std::size_t n) {
  const auto l = L(z.label(n), shift(z, n - 1));
  return apply(word_map(paper_ifs(), c2_word(z, n - 1)), l);
}

}  // namespace

SlopeFourSegment::SlopeFourSegment(RatPoint base, RatPoint top) : base_(std::move(base)), top_(std::move(top)) {
  if (!(top_.y > base_.y)) throw InputError("slope-4 segment: top must lie above base");
  if ((top_.x - base_.x) * 4 != top_.y - base_.y) {
    throw InputError("slope-4 segment: " + base_.to_string() + " to " + top_.to_string() + " is not slope 4");
  }
}

SlopeFourSegment apply(const Similitude& f, const SlopeFourSegment& s) {
  return SlopeFourSegment(apply(f, s.base()), apply(f, s.top()));
}

SlopeFourSegment ell_x(const Rational& x) {
  if (x.sign() < 0 || x > rat(3, 4)) throw InputError("ell_x: x must lie in [0, 3/4], got " + x.to_string());
  return SlopeFourSegment({x, 0}, {x + rat(1, 4), 1});
}

SlopeFourSegment ell_z_clipped(const Rational& z) {
  if (z.sign() < 0 || z > rat(1, 5)) throw InputError("ell_z_clipped: z must lie in [0, 1/5], got " + z.to_string());
  return SlopeFourSegment({0, z}, {(Rational(1) - z) / 4, 1});
}

Rational x_value(const DigitStream& z) { return stream_value(x_of_z(z)); }

std::vector<SlopeFourSegment> e_pieces(const DigitStream& z) {
  require_c2(z, "E");
  const auto base = ell_x(x_value(z));
  std::vector<SlopeFourSegment> out;
  for (int i = 3; i <= 6; ++i) out.push_back(apply(phi(i), base));
  return out;
}

std::vector<SlopeFourSegment> l_pieces(int i, const DigitStream& z) {
  require_c2(z, "L");
  const DigitStream tail = shift(z);
  if (i == 0) {
    return {apply(phi(1), E(tail)), apply(phi(2), ell_x(x_value(tail) / 6 + rat(1, 6)))};
  }
  if (i == 1) return {apply(phi(2), E(tail))};
  throw InputError("L: index must be 0 or 1");
}

SlopeFourSegment chain_union(const std::vector<SlopeFourSegment>& pieces) {
  if (!pieces_chain(pieces)) throw ConsistencyError("chain_union: pieces do not chain end to end");
  return SlopeFourSegment(pieces.front().base(), pieces.back().top());
}

SlopeFourSegment e_closed_form(const DigitStream& z) {
  const Rational x = x_value(z);
  return SlopeFourSegment({x / 6, rat(1, 3)}, {x / 6 + rat(1, 6), 1});
}

SlopeFourSegment l_closed_form(int i, const DigitStream& z) {
  if (i != 0 && i != 1) throw InputError("L: index must be 0 or 1");
  const Rational xs = x_value(shift(z));
  return SlopeFourSegment({xs / 36, rat(i, 6) + rat(1, 18)}, {xs / 36 - rat(i, 24) + rat(5, 72), rat(1, 3)});
}

SlopeFourSegment E(const DigitStream& z) {
  auto from_union = chain_union(e_pieces(z));
  if (from_union != e_closed_form(z)) {
    throw ConsistencyError("E: union endpoints disagree with closed form for z=" + z.to_string());
  }
  return from_union;
}

SlopeFourSegment L(int i, const DigitStream& z) {
  auto from_union = chain_union(l_pieces(i, z));
  if (from_union != l_closed_form(i, z)) {
    throw ConsistencyError("L: union endpoints disagree with closed form for i=" + std::to_string(i) +
                           ", z=" + z.to_string());
  }
  return from_union;
}

Report verify_lemma2(const DigitStream& z) {
  require_c2(z, "verify_lemma2");
  Report report{"shared endpoints z=" + z.to_string(), {}};
  const Rational x = x_value(z);
  const Rational xs = x_value(shift(z));

  for (int i = 3; i <= 5; ++i) {
    const RatPoint shared{x / 6 + rat(i, 24) - rat(1, 12), rat(i, 6)};
    const auto n = std::to_string(i);
    report.add(check_equal("phi_" + n + "(x+1/4, 1)", apply(phi(i), RatPoint{x + rat(1, 4), 1}), shared));
    report.add(check_equal("phi_" + std::to_string(i + 1) + "(x, 0)", apply(phi(i + 1), RatPoint{x, 0}), shared));
  }
  const RatPoint junction{xs / 36 + rat(1, 36), rat(1, 6)};
  report.add(check_equal("phi_2(x(sz)/6+1/6, 0)", apply(phi(2), RatPoint{xs / 6 + rat(1, 6), 0}), junction));
  report.add(check_equal("phi_1 phi_6(x(sz)+1/4, 1)",
                         apply(phi(1), apply(phi(6), RatPoint{xs + rat(1, 4), 1})), junction));

  const auto compare_routes = [&](const std::string& name, const std::vector<SlopeFourSegment>& pieces,
                                  const SlopeFourSegment& closed) {
    const bool chained = pieces_chain(pieces);
    report.add(check_true(name + " pieces chain", chained, std::to_string(pieces.size()) + " pieces"));
    if (!chained) return;
    report.add(check_equal(name + " base (union vs closed form)", pieces.front().base(), closed.base()));
    report.add(check_equal(name + " top (union vs closed form)", pieces.back().top(), closed.top()));
  };
  compare_routes("E_z", e_pieces(z), e_closed_form(z));
  compare_routes("L_0(z)", l_pieces(0, z), l_closed_form(0, z));
  compare_routes("L_1(z)", l_pieces(1, z), l_closed_form(1, z));
  return report;
}

Decomposition decompose_ell_z(const DigitStream& z, int N) {
  require_c2(z, "decompose_ell_z");
  if (N < 1) throw InputError("decompose_ell_z: depth must be at least 1");
  const Rational zv = stream_value(z);
  Decomposition d{RatPoint{0, zv}, E(z), {}, zv};
  d.chain.reserve(static_cast<std::size_t>(N));
  for (std::size_t n = 1; n <= static_cast<std::size_t>(N); ++n) {
    auto piece = chain_piece(z, n);
    const RatPoint& above = d.chain.empty() ? d.head.base() : d.chain.back().base();
    if (piece.top() != above) {
      throw ConsistencyError("decompose_ell_z: piece " + std::to_string(n) + " does not meet its predecessor");
    }
    d.chain.push_back(std::move(piece));
  }
  if (!verify_line_membership(d).passed()) {
    throw ConsistencyError("decompose_ell_z: a piece leaves the line y = 4x + z");
  }
  return d;
}

Report verify_fact1(const DigitStream& z) {
  require_c2(z, "verify_fact1");
  Report report{"fact1 z=" + z.to_string(), {}};
  const Rational x = x_value(z);
  const Rational xs = x_value(shift(z));
  const Rational z1 = z.digit(1);
  report.add(check_equal("x(z)/6 - (x(sz)/36 - z_1/24 + 5/72)", x / 6 - (xs / 36 - z1 / 24 + rat(5, 72)), 0));
  report.add(check_equal("heights E_z.base.y vs L_{z_1}(z).top.y", e_closed_form(z).base().y,
                         l_closed_form(z.label(1), z).top().y));
  report.add(check_equal("E_z.base vs L_{z_1}(z).top", E(z).base(), L(z.label(1), z).top()));
  return report;
}

Report verify_fact2(const DigitStream& z, int n) {
  require_c2(z, "verify_fact2");
  if (n < 1) throw InputError("verify_fact2: n must be at least 1");
  const auto un = static_cast<std::size_t>(n);
  const auto p = static_cast<unsigned>(n);
  Report report{"fact2 z=" + z.to_string() + " n=" + std::to_string(n), {}};

  const Rational zn = z.digit(un);
  const Rational zn1 = z.digit(un + 1);
  const RatPoint origin_prev = along(z, un - 1, {0, 0});
  const RatPoint origin = along(z, un, {0, 0});
  const Rational s1 = inverse_power_of_six(p + 1);
  const Rational s2 = inverse_power_of_six(p + 2);
  const Rational sn = inverse_power_of_six(p);

  const RatPoint former_closed =
      RatPoint{x_value(shift(z, un)) * s1, zn * sn + sn / 3} + origin_prev;
  const RatPoint latter_closed =
      RatPoint{x_value(shift(z, un + 1)) * s2 - zn1 * s1 / 4 + s2 * rat(5, 2), sn / 3} + origin;
  const RatPoint former_direct = chain_piece(z, un).base();
  const RatPoint latter_direct = chain_piece(z, un + 1).top();

  report.add(check_equal("origin step phi_{z1..zn}(0,0) - phi_{z1..z(n-1)}(0,0)", origin - origin_prev,
                         RatPoint{0, zn * sn}));
  report.add(check_equal("former endpoint (word map vs closed form)", former_direct, former_closed));
  report.add(check_equal("latter endpoint (word map vs closed form)", latter_direct, latter_closed));
  report.add(check_equal("x difference", former_closed.x - latter_closed.x, 0));
  report.add(check_equal("y difference", former_closed.y - latter_closed.y, 0));
  return report;
}

Report verify_fact3(const DigitStream& z, int N) {
  require_c2(z, "verify_fact3");
  if (N < 1) throw InputError("verify_fact3: N must be at least 1");
  const auto uN = static_cast<std::size_t>(N);
  Report report{"fact3 z=" + z.to_string() + " N=" + std::to_string(N), {}};
  const RatPoint end = chain_piece(z, uN).base();
  const RatPoint target{0, stream_value(z)};
  const Rational bound = inverse_power_of_six(static_cast<unsigned>(N));
  report.add(check_at_most("|dx| of dangling endpoint " + end.to_string(), abs(end.x - target.x), bound));
  report.add(check_at_most("|dy| of dangling endpoint", abs(end.y - target.y), bound));
  return report;
}

Report verify_line_membership(const Decomposition& d) {
  Report report{"line y = 4x + z, z=" + d.z.to_string(), {}};
  const auto on_line = [&](const std::string& name, const RatPoint& p) {
    report.add(check_equal(name, p.y, p.x * 4 + d.z));
  };
  on_line("anchor", d.anchor);
  on_line("E_z base", d.head.base());
  on_line("E_z top", d.head.top());
  for (std::size_t k = 0; k < d.chain.size(); ++k) {
    on_line("piece " + std::to_string(k + 1) + " base", d.chain[k].base());
    on_line("piece " + std::to_string(k + 1) + " top", d.chain[k].top());
  }
  return report;
}

}  // namespace ifscheck
