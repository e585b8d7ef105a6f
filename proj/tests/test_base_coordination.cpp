#include <algorithm>
#include <deque>
#include <vector>

#include "bapp/base_coordination.hpp"
#include "bapp/errors.hpp"
#include "bapp/planner.hpp"
#include "doctest.h"

using namespace bapp;

namespace {

// Cells of the mask that can be reached from the base through the mask.
std::size_t reachable_in_mask(const GridDims& g, CellIndex base, const CellMask& mask) {
  std::vector<char> seen(g.cell_count(), 0);
  std::deque<CellIndex> queue{base};
  seen[base] = 1;
  std::size_t count = 0;
  while (!queue.empty()) {
    const CellIndex at = queue.front();
    queue.pop_front();
    ++count;
    for (CellIndex nb : neighbors(at, g, mask)) {
      if (!seen[nb]) {
        seen[nb] = 1;
        queue.push_back(nb);
      }
    }
  }
  return count;
}

}  // namespace

TEST_CASE("radial partition covers the grid without overlap") {
  const GridDims g(20, 20);
  for (int n : {1, 3, 5, 7, 8, 15}) {
    const auto part = radial_partition(BasePose{g.center()}, g, n);
    REQUIRE(part.assignment.size() == g.cell_count());
    for (int s : part.assignment) {
      CHECK(s >= 0);
      CHECK(s < n);
    }
    const auto sizes = part.sector_sizes();
    std::size_t total = 0;
    for (auto sz : sizes) {
      CHECK(sz > 0);
      total += sz;
    }
    CHECK(total == g.cell_count());
  }
}

TEST_CASE("single sector holds everything") {
  const GridDims g(4, 5);
  const auto part = radial_partition(BasePose{3}, g, 1);
  CHECK(part.mask_for(0).allowed_count(g.cell_count()) == g.cell_count());
  CHECK(part.hub_radius == 0);
}

TEST_CASE("sector angles") {
  const GridDims g(5, 5);
  const auto part = radial_partition(BasePose{g.center()}, g, 4);
  // x along columns, y along rows
  CHECK(part.assignment[g.index(2, 4)] == 0);
  CHECK(part.assignment[g.index(4, 2)] == 1);
  CHECK(part.assignment[g.index(2, 0)] == 2);
  CHECK(part.assignment[g.index(0, 2)] == 3);
}

TEST_CASE("hub radius and connected sector masks") {
  const GridDims g(20, 20);
  for (auto [n, hub] : {std::pair{1, 0}, std::pair{3, 0}, std::pair{5, 0}, std::pair{7, 0}, std::pair{8, 0},
                        std::pair{15, 2}}) {
    const auto part = radial_partition(BasePose{g.center()}, g, n);
    CHECK(part.hub_radius == hub);
    for (int s = 0; s < n; ++s) {
      const auto mask = part.mask_for(s);
      CHECK(mask.allows(g.center()));
      CHECK(reachable_in_mask(g, g.center(), mask) == mask.allowed_count(g.cell_count()));
    }
  }
  // corner base: a quarter plane splits cleanly
  const auto corner = radial_partition(BasePose{0}, g, 3);
  for (int s = 0; s < 3; ++s) {
    const auto mask = corner.mask_for(s);
    CHECK(reachable_in_mask(g, 0, mask) == mask.allowed_count(g.cell_count()));
  }
}

TEST_CASE("partition errors") {
  const GridDims g(3, 3);
  CHECK_THROWS_AS(radial_partition(BasePose{4}, g, 0), InvalidParameter);
  CHECK_THROWS_AS(radial_partition(BasePose{9}, g, 2), OutOfBounds);
}

TEST_CASE("regional entropy examples") {
  const GridDims g(5, 5);
  const auto part = radial_partition(BasePose{g.center()}, g, 2);
  RelocationPolicy pol;
  pol.explore_radius = 10.0;
  CHECK(regional_entropy(init_uniform(g), g.center(), pol, part).score == doctest::Approx(1.0));
  CHECK(regional_entropy(BeliefMap(g, std::vector<double>(25, 0.0)), g.center(), pol, part).score == 0.0);

  // sector 0 is resolved, sector 1 is not
  std::vector<double> probs(25, 0.5);
  for (CellIndex c = 0; c < 25; ++c) {
    if (part.assignment[c] == 0) {
      probs[c] = 0.0;
    }
  }
  const auto r = regional_entropy(BeliefMap(g, probs), g.center(), pol, part);
  CHECK(r.sector_means[0] == 0.0);
  CHECK(r.sector_means[1] == doctest::Approx(1.0));
  CHECK(r.score == doctest::Approx(0.5));

  // a radius below one sees the candidate cell only
  pol.explore_radius = 0.5;
  const auto tiny = regional_entropy(init_uniform(g), g.center(), pol, part);
  CHECK(tiny.score == doctest::Approx(0.5));
  CHECK_THROWS_AS(regional_entropy(init_uniform(g), 25, pol, part), OutOfBounds);
}

TEST_CASE("safe reachability") {
  const GridDims g(3, 3);
  // wall down the middle column
  BeliefMap walled(g, {0.0, 0.9, 0.0, 0.0, 0.9, 0.0, 0.0, 0.9, 0.0});
  CHECK_FALSE(is_reachable_safely(walled, 0, 2, 0.3));
  CHECK(is_reachable_safely(walled, 0, 6, 0.3));
  // diagonal gap is enough
  BeliefMap gap(g, {0.0, 0.9, 0.0, 0.0, 0.9, 0.0, 0.0, 0.1, 0.0});
  CHECK(is_reachable_safely(gap, 0, 2, 0.3));
  // both ends must be safe
  BeliefMap end(g, {0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  CHECK_FALSE(is_reachable_safely(end, 0, 2, 0.3));
  CHECK_FALSE(is_reachable_safely(end, 2, 0, 0.3));
  CHECK(is_reachable_safely(end, 0, 0, 0.3));
  CHECK_THROWS_AS(is_reachable_safely(end, 0, 9, 0.3), OutOfBounds);
}

TEST_CASE("base site selection") {
  const GridDims g(9, 9);
  RelocationPolicy pol;
  pol.search_radius = 2.0;
  pol.explore_radius = 3.0;
  const BasePose base{g.center()};

  // nothing safe nearby except the base: stay
  std::vector<double> probs(81, 0.5);
  probs[base.cell] = 0.0;
  CHECK(select_base_site(BeliefMap(g, probs), base, pol, 3) == base);

  // safe corridor to the east, unknown region beyond it
  for (int c = 4; c <= 6; ++c) {
    probs[g.index(4, c)] = 0.0;
  }
  for (int r = 0; r < 9; ++r) {
    for (int c = 0; c < 4; ++c) {
      probs[g.index(r, c)] = 0.0;
    }
  }
  probs[base.cell] = 0.0;
  const BeliefMap b(g, probs);
  const auto moved = select_base_site(b, base, pol, 3);
  CHECK(moved.cell == g.index(4, 6));
  CHECK(b[moved.cell] < pol.safety_threshold);
  CHECK(is_reachable_safely(b, base.cell, moved.cell, pol.safety_threshold));

  // every candidate ever chosen is safe, reachable and within the search box
  for (int k = 0; k < 20; ++k) {
    std::vector<double> q(81);
    for (CellIndex c = 0; c < 81; ++c) {
      q[c] = static_cast<double>((c * 37 + static_cast<CellIndex>(k) * 11) % 100) / 100.0;
    }
    q[base.cell] = 0.0;
    const BeliefMap bk(g, q);
    const auto site = select_base_site(bk, base, pol, 5);
    CHECK(bk[site.cell] < pol.safety_threshold);
    CHECK(is_reachable_safely(bk, base.cell, site.cell, pol.safety_threshold));
    CHECK(std::abs(g.row(site.cell) - 4) <= 2);
    CHECK(std::abs(g.col(site.cell) - 4) <= 2);
  }
}

TEST_CASE("relocation policy validation") {
  RelocationPolicy pol;
  CHECK_NOTHROW(pol.validate());
  pol.safety_threshold = 1.0;
  CHECK_THROWS_AS(pol.validate(), ConfigError);
  pol = RelocationPolicy{};
  pol.cadence = 0;
  CHECK_THROWS_AS(pol.validate(), ConfigError);
  pol = RelocationPolicy{};
  pol.explore_radius = 0.0;
  CHECK_THROWS_AS(pol.validate(), ConfigError);
}
