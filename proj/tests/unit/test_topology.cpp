#include "ifscheck/errors.hpp"
#include "ifscheck/segments.hpp"
#include "ifscheck/topology.hpp"
#include "ifscheck/union_find.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace ifscheck;

namespace {

const Ifs& phi() { return paper_ifs(); }
RatPoint pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

// Systems small enough for the all-pairs oracle at depth 2.
std::vector<Ifs> small_systems() {
  return {paper_ifs(), grid_ifs(3),
          homogeneous_ifs(rat(1, 3), {pt(0, 0), pt(rat(2, 3), 0)}),
          homogeneous_ifs(rat(1, 3), {pt(0, 0), pt(rat(2, 3), rat(2, 3)), pt(rat(1, 3), 0), pt(0, rat(2, 3))}),
          homogeneous_ifs(rat(2, 5), {pt(0, 0), pt(rat(3, 5), rat(1, 5)), pt(rat(1, 5), rat(3, 5))})};
}

}  // namespace

TEST_CASE("disjoint sets") {
  DisjointSets ds(6);
  CHECK(ds.set_count() == 6);
  CHECK(ds.unite(0, 1));
  CHECK(ds.unite(2, 3));
  CHECK_FALSE(ds.unite(1, 0));
  CHECK(ds.unite(1, 3));
  CHECK(ds.find(0) == ds.find(2));
  CHECK(ds.find(4) != ds.find(0));
  CHECK(ds.set_count() == 3);
  CHECK(ds.size() == 6);
}

TEST_CASE("lattice frame scale and exactness") {
  const LatticeFrame f(phi(), 2);
  CHECK(f.scale() == 24 * 36);
  CHECK(f.exact(rat(5, 24)) == 5 * 36);
  CHECK_THROWS_AS(f.exact(rat(1, 7)), InputError);
  CHECK(f.to_rational(LatticeRect{36, 0, 60, 24}) == RatRect(rat(1, 24), 0, rat(5, 72), rat(1, 36)));
  CHECK(f.word(24 * 3 + 6) == Word{{4, 7}});
  const auto in = f.inner(rat(1, 1000), rat(1, 7));
  CHECK(in.lo == 1);
  CHECK(in.hi == 123);
  CHECK_THROWS_AS(LatticeFrame(phi(), 30), InputError);
  CHECK_THROWS_AS(LatticeFrame(phi(), -1), InputError);
}

TEST_CASE("lattice cells equal the rational cells") {
  for (const auto& ifs : small_systems()) {
    for (int n = 0; n <= 2; ++n) {
      const LatticeFrame frame(ifs, n);
      const auto lat = lattice_cells(ifs, frame);
      const auto rat_cells = cells(ifs, n);
      REQUIRE(lat.size() == rat_cells.size());
      for (std::size_t i = 0; i < lat.size(); ++i) {
        CHECK(frame.word(lat[i].code) == rat_cells[i].word);
        CHECK(frame.to_rational(lat[i].rect) == rat_cells[i].rect);
      }
    }
  }
}

TEST_CASE("graph edges and labels agree with the all-pairs BFS oracle") {
  for (const auto& ifs : small_systems()) {
    for (int n = 0; n <= 2; ++n) {
      const CellGraph g = build_cell_graph(ifs, n);
      const auto rc = cells(ifs, n);
      const auto expected = oracle::bfs_components(rc);
      CHECK(g.component_count() == expected.count);
      CHECK(g.labels() == expected.labels);
      CHECK(g.edges() == oracle::touching_pairs(rc));
      for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.cell(i) == rc[i]);
    }
  }
}

TEST_CASE("neighbors are symmetric") {
  const CellGraph g = build_cell_graph(phi(), 2);
  std::size_t degree_sum = 0;
  for (std::size_t u = 0; u < g.size(); ++u) {
    degree_sum += g.neighbors(u).size();
    for (auto v : g.neighbors(u)) {
      const auto back = g.neighbors(v);
      CHECK(std::find(back.begin(), back.end(), u) != back.end());
    }
  }
  CHECK(degree_sum == 2 * g.edge_count());
}

TEST_CASE("component counts") {
  const CellGraph g0 = build_cell_graph(phi(), 0);
  CHECK(g0.size() == 1);
  CHECK(g0.edge_count() == 0);
  CHECK(g0.component_count() == 1);
  // Union-find oracle over the printed rectangles: the four columns form
  // three blocks, since only the first two columns touch at level 1.
  const std::vector<std::size_t> golden = {1, 3, 11, 109};
  for (int n = 0; n <= 3; ++n) CHECK(component_count(phi(), n) == golden[static_cast<std::size_t>(n)]);
  for (int n = 0; n <= 3; ++n) CHECK(component_count(grid_ifs(6), n) == 1);
  const Ifs pair = homogeneous_ifs(rat(1, 3), {pt(0, 0), pt(rat(2, 3), 0)});
  CHECK(component_count(pair, 0) == 1);
  for (int n = 1; n <= 4; ++n) CHECK(component_count(pair, n) == (std::size_t{1} << n));
  const Ifs diagonal = homogeneous_ifs(rat(1, 3), {pt(0, 0), pt(rat(2, 3), rat(2, 3))});
  CHECK(component_count(diagonal, 1) == 2);
  CHECK_THROWS_AS(build_cell_graph(phi(), 3, 1000), CapExceeded);
}

TEST_CASE("component counts never decrease") {
  for (const auto& ifs : small_systems()) {
    std::size_t previous = 0;
    for (int n = 0; n <= 3; ++n) {
      const std::size_t c = component_count(ifs, n);
      CHECK(c >= previous);
      previous = c;
    }
  }
}

TEST_CASE("edge list export") {
  const CellGraph g = build_cell_graph(phi(), 1);
  std::ostringstream os;
  write_edge_list(os, g);
  const std::string text = os.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(g.edge_count()));
  CHECK(text.rfind("1 2\n", 0) == 0);
  CHECK(text.find("1 7\n") != std::string::npos);
}

TEST_CASE("strip validation and band contact") {
  CHECK_THROWS_AS(Strip(rat(1, 2), rat(1, 2)), InputError);
  const Strip s(rat(1, 3), rat(3, 8));
  CHECK(band_meets_rect(s, RatRect(rat(1, 3), 0, rat(1, 2), rat(1, 6))));
  CHECK_FALSE(band_meets_rect(s, RatRect(rat(1, 2), 0, 1, rat(1, 4))));
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> u(-24, 48);
  for (int k = 0; k < 300; ++k) {
    int a = u(rng), b = u(rng), c = u(rng), d = u(rng), e = u(rng), f = u(rng);
    if (a == b || c == d || e == f) continue;
    const RatRect r(rat(std::min(a, b), 24), rat(std::min(c, d), 24), rat(std::max(a, b), 24),
                    rat(std::max(c, d), 24));
    const Strip t(rat(std::min(e, f), 24), rat(std::max(e, f), 24));
    CHECK(band_meets_rect(t, r) == oracle::band_meets(t.c_low(), t.c_high(), r));
  }
}

TEST_CASE("strip_is_vacant matches the exhaustive band oracle") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> u(-48, 240);
  for (const auto& ifs : small_systems()) {
    for (int k = 0; k < 12; ++k) {
      int a = u(rng), b = u(rng);
      if (a == b) continue;
      const Strip s(rat(std::min(a, b), 192), rat(std::max(a, b), 192));
      for (int m = 0; m <= 2; ++m) {
        CHECK(strip_is_vacant(ifs, s, m) == oracle::band_vacant(ifs, s.c_low(), s.c_high(), m));
      }
    }
  }
  CHECK_FALSE(strip_is_vacant(phi(), Strip(-1, 2), 0));
}

TEST_CASE("find_vacant_strip") {
  const auto found = find_vacant_strip(phi(), rat(1, 4), rat(9, 20), 4);
  REQUIRE(found);
  CHECK(found->depth == 1);
  CHECK(found->gap_low == rat(1, 3));
  CHECK(found->gap_high == rat(3, 8));
  CHECK(found->strip == Strip(rat(11, 32), rat(35, 96)));
  for (int m = found->depth; m <= found->depth + 2; ++m) CHECK(strip_is_vacant(phi(), found->strip, m));
  CHECK(oracle::band_vacant(phi(), found->strip.c_low(), found->strip.c_high(), found->depth));

  const auto outside = find_vacant_strip(phi(), 2, 3, 4);
  REQUIRE(outside);
  CHECK(outside->depth == 0);
  CHECK(outside->strip == Strip(2, 3));

  CHECK_FALSE(find_vacant_strip(grid_ifs(6), rat(-1, 5), rat(9, 10), 3));
  CHECK_FALSE(find_vacant_strip(grid_ifs(6), 0, rat(1, 2), 3));
  CHECK_THROWS_AS(find_vacant_strip(phi(), rat(1, 2), rat(1, 4), 3), InputError);
}

TEST_CASE("strips separate component labels") {
  const auto found = find_vacant_strip(phi(), rat(1, 4), rat(9, 20), 4);
  REQUIRE(found);
  for (int m = found->depth; m <= found->depth + 1; ++m) {
    const CellGraph g = build_cell_graph(phi(), m);
    const auto left = g.labels_meeting(ell_x(rat(1, 5)).segment());
    const auto right = g.labels_meeting(ell_x(rat(1, 2)).segment());
    REQUIRE_FALSE(left.empty());
    REQUIRE_FALSE(right.empty());
    std::vector<std::uint32_t> common;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(common));
    CHECK(common.empty());
  }
}

TEST_CASE("component of the right side") {
  const CellGraph g1 = build_cell_graph(phi(), 1);
  const auto label1 = component_of_right_side(g1, phi());
  for (int k = 19; k <= 24; ++k) CHECK(g1.label(static_cast<std::size_t>(k - 1)) == label1);

  const CellGraph g2 = build_cell_graph(phi(), 2);
  const auto label2 = component_of_right_side(g2, phi());
  for (int a = 19; a <= 24; ++a) {
    for (int b = 19; b <= 24; ++b) CHECK(g2.label(static_cast<std::size_t>((a - 1) * 24 + (b - 1))) == label2);
  }
  CHECK(component_of_right_side(phi(), 2) == label2);
  CHECK(component_of_right_side(grid_ifs(6), 2) == 0);
  CHECK(right_side(phi(), Word{{1}}).p() == pt(rat(1, 6), 0));
  CHECK(right_side(phi(), Word{{1}}).q() == pt(rat(1, 6), rat(1, 6)));

  // A right side met by no cell, or by two components, is a premise failure.
  const Ifs left_only = homogeneous_ifs(rat(1, 3), {pt(0, 0)});
  CHECK_THROWS_AS(component_of_right_side(left_only, 1), PremiseError);
  const Ifs split = homogeneous_ifs(rat(1, 3), {pt(rat(2, 3), 0), pt(rat(2, 3), rat(2, 3))});
  CHECK_THROWS_AS(component_of_right_side(split, 1), PremiseError);
}

TEST_CASE("local connectivity probe") {
  const RatPoint p{rat(263, 1440), rat(7, 72)};
  CHECK(apply(word_map(phi(), Word{{7, 4}}), pt(rat(13, 40), rat(1, 2))) == p);
  const auto r3 = local_connectivity_probe(phi(), p, rat(1, 216), 3, Word{{1}});
  CHECK(r3.window_cells == 9);
  CHECK(r3.anchored_cells == 9);
  CHECK(r3.local_component_count == 3);
  const auto r4 = local_connectivity_probe(phi(), p, rat(1, 216), 4, Word{{1}});
  CHECK(r4.window_cells == 75);
  CHECK(r4.local_component_count == 7);

  // With the literal right side as anchor the window lies in other components.
  CHECK(local_connectivity_probe(phi(), p, rat(1, 216), 3).anchored_cells == 0);

  for (int n = 0; n <= 2; ++n) {
    CHECK(local_connectivity_probe(grid_ifs(6), pt(rat(1, 2), rat(1, 2)), rat(1, 10), n).local_component_count == 1);
  }
  const auto far = local_connectivity_probe(phi(), pt(5, 5), rat(1, 100), 2);
  CHECK(far.window_cells == 0);
  CHECK(far.local_component_count == 0);
  CHECK_THROWS_AS(local_connectivity_probe(phi(), p, 0, 2), InputError);
}

TEST_CASE("probe agrees with a rational oracle") {
  // Anchor component from the BFS oracle, window cells filtered exactly, local
  // components by BFS on the survivors.
  const RatPoint p{rat(263, 1440), rat(7, 72)};
  const Rational r = rat(1, 216);
  for (int n = 2; n <= 3; ++n) {
    const auto all = cells(phi(), n);
    const auto global = oracle::bfs_components(all);
    const RatSegment anchor_side({rat(1, 6), 0}, {rat(1, 6), rat(1, 6)});
    std::set<std::uint32_t> anchor_labels;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (segment_meets_rect(anchor_side, all[i].rect)) anchor_labels.insert(global.labels[i]);
    }
    REQUIRE(anchor_labels.size() == 1);
    const RatRect window = RatRect::around(p, r);
    std::vector<Cell> kept;
    std::size_t in_window = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!oracle::closed_meet(all[i].rect, window)) continue;
      ++in_window;
      if (global.labels[i] == *anchor_labels.begin()) kept.push_back(all[i]);
    }
    const auto result = local_connectivity_probe(phi(), p, r, n, Word{{1}});
    CHECK(result.window_cells == in_window);
    CHECK(result.anchored_cells == kept.size());
    CHECK(result.local_component_count == oracle::bfs_components(kept).count);
  }
}
