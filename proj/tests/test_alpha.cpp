#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "hdepth/alpha.hpp"
#include "hdepth/graph.hpp"
#include "test_oracles.hpp"

using namespace hdepth;

namespace {

AlphaVector from_longs(int n, std::vector<long> vals) {
  AlphaVector a{n, {}};
  for (long v : vals) a.values.emplace_back(v);
  return a;
}

void check_equal(const AlphaVector& got, const AlphaVector& want) {
  REQUIRE(got.n == want.n);
  for (int j = 0; j <= got.n; ++j) {
    INFO("j = " << j);
    REQUIRE(got.values[static_cast<std::size_t>(j)] == want.values[static_cast<std::size_t>(j)]);
  }
}

}  // namespace

TEST_CASE("brute force matches hand-enumerated small modules") {
  check_equal(alpha_bruteforce(ModuleSpec::quotient(path_graph(3))), from_longs(3, {1, 3, 1, 0}));
  check_equal(alpha_bruteforce(ModuleSpec::ideal(path_graph(2))), from_longs(2, {0, 0, 1}));

  const auto rel = alpha_bruteforce(ModuleSpec::relative(cycle_graph(6), path_graph(6)));
  CHECK(rel.values[2] == 1L);  // x1x6 only
  CHECK(rel.values[3] == 2L);  // x1x3x6 and x1x4x6
}

TEST_CASE("brute force agrees with an independent recursive enumeration") {
  const std::vector<Graph> graphs = {path_graph(7),
                                     cycle_graph(8),
                                     star_graph(5),
                                     generalized_star_graph({2, 3, 1}),
                                     double_broom_graph(2, 4, 3),
                                     Graph::from_edges(6, {{0, 1}, {2, 3}})};
  for (const auto& g : graphs) {
    const auto counts = testing::naive_independent_set_counts(g);
    const auto quot = alpha_bruteforce(ModuleSpec::quotient(g));
    for (int j = 0; j <= g.n; ++j) {
      REQUIRE(quot.values[static_cast<std::size_t>(j)] == counts[static_cast<std::size_t>(j)]);
    }
  }
}

TEST_CASE("brute force capacity cap") {
  const Graph big = Graph::from_edges(27, {{0, 1}});
  CHECK_THROWS_AS(alpha_bruteforce(ModuleSpec::quotient(big)), CapacityError);
}

TEST_CASE("brute force is worker-count independent") {
  const auto spec = ModuleSpec::ideal(double_broom_graph(5, 10, 5));  // 20 vertices
  check_equal(alpha_bruteforce(spec, 1), alpha_bruteforce(spec, 4));
}

TEST_CASE("tree DP matches the oracle on trees") {
  check_equal(alpha_tree_dp(path_graph(4), ModuleKind::Quotient), from_longs(4, {1, 4, 3, 0, 0}));
  check_equal(alpha_tree_dp(star_graph(3), ModuleKind::Quotient), from_longs(4, {1, 4, 3, 1, 0}));

  const auto ideal = alpha_tree_dp(double_broom_graph(1, 2, 1), ModuleKind::Ideal);
  CHECK(ideal.values[0] == 0L);
  CHECK(ideal.values[1] == 0L);
  CHECK(ideal.values[2] == 3L);  // the three generators
  check_equal(ideal, alpha_bruteforce(ModuleSpec::ideal(double_broom_graph(1, 2, 1))));
}

TEST_CASE("tree DP rejects cyclic graphs") {
  CHECK_THROWS_AS(alpha_tree_dp(cycle_graph(5), ModuleKind::Quotient), EngineError);
}

TEST_CASE("closed path alpha") {
  check_equal(alpha_path_closed(4, ModuleKind::Quotient), from_longs(4, {1, 4, 3, 0, 0}));
  check_equal(alpha_path_closed(4, ModuleKind::Ideal), from_longs(4, {0, 0, 3, 4, 1}));
  CHECK(alpha_path_closed(9, ModuleKind::Quotient).values[3] == 35L);  // C(7,3)
  CHECK_THROWS_AS(alpha_path_closed(1, ModuleKind::Quotient), ParameterError);
}

TEST_CASE("closed cycle alpha") {
  CHECK(alpha_cycle_closed(5, ModuleKind::Quotient).values[2] == 5L);
  CHECK(alpha_cycle_closed(4, ModuleKind::Quotient).values[2] == 2L);
  CHECK(alpha_cycle_closed(6, ModuleKind::Quotient).values[6] == 0L);
  CHECK(alpha_cycle_closed(6, ModuleKind::Quotient).values[0] == 1L);
  CHECK_THROWS_AS(alpha_cycle_closed(2, ModuleKind::Quotient), ParameterError);
}

TEST_CASE("closed relative cycle/path alpha") {
  const auto a6 = alpha_cycle_mod_path(6);
  CHECK(a6.values[2] == 1L);
  CHECK(a6.values[3] == 2L);
  for (int n = 6; n <= 14; ++n) {
    const auto a = alpha_cycle_mod_path(n);
    CHECK(a.values[0] == 0L);
    CHECK(a.values[1] == 0L);
    CHECK(a.values[static_cast<std::size_t>(n - 1)] == 0L);
    CHECK(a.values[static_cast<std::size_t>(n)] == 0L);
    // shifted path quotient on n-4 variables
    const auto small = alpha_path_closed(n - 4, ModuleKind::Quotient);
    for (int j = 2; j <= n - 2; ++j) {
      REQUIRE(a.values[static_cast<std::size_t>(j)] == small.values[static_cast<std::size_t>(j - 2)]);
    }
  }
  CHECK_THROWS_AS(alpha_cycle_mod_path(5), ParameterError);
}

TEST_CASE("closed double star ideal alpha") {
  CHECK(alpha_double_star_ideal(2, 2).values[2] == 5L);
  CHECK(alpha_double_star_ideal(1, 1).values[2] == 3L);
  CHECK(alpha_double_star_ideal(3, 2).values[7] == 1L);  // the all-variables monomial
  CHECK_THROWS_AS(alpha_double_star_ideal(0, 2), ParameterError);
}

TEST_CASE("double star closed counts diverge from the graph alpha in middle degrees") {
  // The closed form agrees with enumeration at j <= 2 and j = N, but drops
  // mixed-support monomials in between; these values pin the divergence.
  for (auto [n1, n2] : {std::pair{1, 1}, {2, 2}, {3, 2}}) {
    const auto closed = alpha_double_star_ideal(n1, n2);
    const auto brute = alpha_bruteforce(ModuleSpec::ideal(double_broom_graph(n1, 2, n2)));
    const int nvars = n1 + n2 + 2;
    CHECK(closed.values[2] == brute.values[2]);
    CHECK(closed.values[static_cast<std::size_t>(nvars)] ==
          brute.values[static_cast<std::size_t>(nvars)]);
  }
  CHECK(alpha_double_star_ideal(1, 1).values[3] == 2L);
  CHECK(alpha_bruteforce(ModuleSpec::ideal(double_broom_graph(1, 2, 1))).values[3] == 4L);
  CHECK(alpha_double_star_ideal(2, 2).values[3] == 6L);
  CHECK(alpha_bruteforce(ModuleSpec::ideal(double_broom_graph(2, 2, 2))).values[3] == 14L);
}

TEST_CASE("closed star ideal alpha") {
  const auto a = alpha_star_ideal(3);
  CHECK(a.values[0] == 0L);
  CHECK(a.values[1] == 0L);
  CHECK(a.values[2] == 3L);
  CHECK(a.values[4] == 1L);
  CHECK_THROWS_AS(alpha_star_ideal(0), ParameterError);
}

TEST_CASE("engine agreement across all families up to 20 vertices") {
  struct Instance {
    Graph g;
    std::optional<AlphaVector> closed_quotient;
    std::optional<AlphaVector> closed_ideal;
  };
  std::vector<Instance> instances;
  for (int n = 2; n <= 20; ++n) {
    instances.push_back({path_graph(n), alpha_path_closed(n, ModuleKind::Quotient),
                         alpha_path_closed(n, ModuleKind::Ideal)});
  }
  for (int n = 1; n <= 17; ++n) {
    instances.push_back({star_graph(n), std::nullopt, alpha_star_ideal(n)});
  }
  for (int n1 = 1; n1 <= 4; ++n1) {
    for (int n2 = n1; n2 <= 4; ++n2) {
      instances.push_back({double_broom_graph(n1, 2, n2), std::nullopt, std::nullopt});
    }
  }
  instances.push_back({generalized_star_graph({3, 3, 3}), std::nullopt, std::nullopt});
  instances.push_back({generalized_star_graph({1, 2, 4}), std::nullopt, std::nullopt});
  instances.push_back({double_broom_graph(3, 5, 4), std::nullopt, std::nullopt});

  for (const auto& inst : instances) {
    INFO("graph with n = " << inst.g.n << ", edges = " << inst.g.edges.size());
    const auto brute_q = alpha_bruteforce(ModuleSpec::quotient(inst.g));
    const auto brute_i = alpha_bruteforce(ModuleSpec::ideal(inst.g));
    check_equal(alpha_tree_dp(inst.g, ModuleKind::Quotient), brute_q);
    check_equal(alpha_tree_dp(inst.g, ModuleKind::Ideal), brute_i);
    if (inst.closed_quotient) check_equal(*inst.closed_quotient, brute_q);
    if (inst.closed_ideal) check_equal(*inst.closed_ideal, brute_i);
    check_equal(complement_alpha(brute_q), brute_i);
  }

  for (int n = 3; n <= 20; ++n) {
    const auto brute_q = alpha_bruteforce(ModuleSpec::quotient(cycle_graph(n)));
    const auto brute_i = alpha_bruteforce(ModuleSpec::ideal(cycle_graph(n)));
    check_equal(alpha_cycle_closed(n, ModuleKind::Quotient), brute_q);
    check_equal(alpha_cycle_closed(n, ModuleKind::Ideal), brute_i);
    check_equal(complement_alpha(brute_q), brute_i);
  }
  for (int n = 6; n <= 20; ++n) {
    check_equal(alpha_cycle_mod_path(n),
                alpha_bruteforce(ModuleSpec::relative(cycle_graph(n), path_graph(n))));
  }
}

TEST_CASE("relative alpha equals the quotient difference") {
  for (int n = 3; n <= 20; ++n) {
    const auto rel = alpha_bruteforce(ModuleSpec::relative(cycle_graph(n), path_graph(n)));
    const auto qp = n <= 20 ? alpha_path_closed(n, ModuleKind::Quotient)
                            : alpha_bruteforce(ModuleSpec::quotient(path_graph(n)));
    const auto qc = alpha_cycle_closed(n, ModuleKind::Quotient);
    for (int j = 0; j <= n; ++j) {
      REQUIRE(rel.values[static_cast<std::size_t>(j)] ==
              qp.values[static_cast<std::size_t>(j)] - qc.values[static_cast<std::size_t>(j)]);
    }
  }
}

TEST_CASE("quotient alpha sums to the Fibonacci independent-set count for paths") {
  for (int n = 2; n <= 60; ++n) {
    CHECK(alpha_path_closed(n, ModuleKind::Quotient).sum() == testing::fibonacci(n + 2));
    if (n <= 24) {
      CHECK(alpha_tree_dp(path_graph(n), ModuleKind::Quotient).sum() == testing::fibonacci(n + 2));
    }
  }
}

TEST_CASE("alpha invariants: boundary entries") {
  for (int n = 2; n <= 12; ++n) {
    const auto q = alpha_bruteforce(ModuleSpec::quotient(path_graph(n)));
    CHECK(q.values[0] == 1L);
    CHECK(q.values[1] == static_cast<long>(n));
    const auto i = alpha_bruteforce(ModuleSpec::ideal(path_graph(n)));
    CHECK(i.values[0] == 0L);
    CHECK(i.values[1] == 0L);
    CHECK(i.values[static_cast<std::size_t>(n)] == 1L);
    for (const auto& v : q.values) CHECK(v >= 0L);
  }
}

TEST_CASE("module spec validation") {
  CHECK_THROWS_AS(ModuleSpec::relative(cycle_graph(5), path_graph(6)), ParameterError);
  CHECK_THROWS_AS(ModuleSpec::relative(path_graph(5), cycle_graph(5)), ParameterError);
  CHECK_THROWS_AS(ModuleSpec::relative(path_graph(5), path_graph(5)), ParameterError);
}

TEST_CASE("engine dispatch prefers closed, then tree, then brute") {
  const FamilySpec pf = PathSpec{8};
  const auto via_auto = compute_alpha(ModuleSpec::quotient(path_graph(8)), pf);
  check_equal(via_auto, alpha_path_closed(8, ModuleKind::Quotient));

  // No closed form for brooms: falls to the tree DP even past the 2^n cap.
  const Graph broom = double_broom_graph(10, 20, 10);
  const auto via_tree = compute_alpha(ModuleSpec::quotient(broom), std::nullopt);
  CHECK(via_tree.n == 40);

  // Cyclic custom graph beyond the cap has no engine.
  const auto cyc27 = [] {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 27; ++i) e.emplace_back(i, (i + 1) % 27);
    return Graph::from_edges(27, e);
  }();
  CHECK_THROWS_AS(compute_alpha(ModuleSpec::quotient(cyc27), std::nullopt), CapacityError);
}
