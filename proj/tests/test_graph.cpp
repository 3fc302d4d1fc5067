#include <doctest.h>

#include <map>
#include <numeric>
#include <set>
#include <random>
#include <sstream>

#include "coauth/error.hpp"
#include "coauth/graph.hpp"
#include "coauth/graph_metrics.hpp"
#include "support.hpp"

using namespace coauth;
using test::Dense;
using test::paper;

TEST_CASE("build_graph clique expansion") {
  SUBCASE("one paper of three authors is a triangle") {
    const std::vector<BiblioRecord> recs{paper("1", {"A, X", "B, X", "C, X"})};
    const auto g = build_graph(recs);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    for (const auto& e : g.edges()) CHECK(e.weight == 1);
  }
  SUBCASE("repeated pair accumulates weight") {
    const std::vector<BiblioRecord> recs{paper("1", {"A, X", "B, X"}), paper("2", {"B, X", "A, X"})};
    const auto g = build_graph(recs);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges()[0] == WeightedEdge{0, 1, 2});
  }
  SUBCASE("solo paper adds an isolated vertex") {
    const std::vector<BiblioRecord> recs{paper("1", {"A, X", "B, X"}), paper("2", {"Z, X"})};
    const auto g = build_graph(recs);
    CHECK(g.vertex_count() == 3);
    CHECK(g.degree(*g.find(AuthorKey("Z, X"))) == 0);
    CHECK(g.paper_count() == 2);
    CHECK(g.authorship_count() == 3);
  }
}

TEST_CASE("build_graph weights equal pair co-occurrence counts") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const auto recs = test::random_corpus(rng, 10, 8, 2000, 2001);
    std::map<std::pair<std::string, std::string>, std::uint32_t> pairs;
    std::size_t expected_weight = 0;
    for (const auto& r : recs) {
      for (std::size_t i = 0; i < r.authors.size(); ++i) {
        for (std::size_t j = 0; j < r.authors.size(); ++j) {
          if (r.authors[i] < r.authors[j]) ++pairs[{r.authors[i], r.authors[j]}];
        }
      }
      expected_weight += r.authors.size() * (r.authors.size() - 1) / 2;
    }
    const auto g = build_graph(recs);
    std::map<std::pair<std::string, std::string>, std::uint32_t> got;
    std::size_t weight_sum = 0;
    for (const auto& e : g.edges()) {
      got[{g.key(e.a).str(), g.key(e.b).str()}] = e.weight;
      weight_sum += e.weight;
    }
    CHECK(got == pairs);
    CHECK(weight_sum == expected_weight);

    std::size_t degree_sum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      degree_sum += g.degree(v);
      for (VertexId w : g.neighbors(v)) {
        const auto back = g.neighbors(w);
        CHECK(std::find(back.begin(), back.end(), v) != back.end());
        CHECK(w != v);
      }
    }
    CHECK(degree_sum == 2 * g.edge_count());

    auto shuffled = recs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(build_graph(shuffled) == g);
  }
}

TEST_CASE("edge list export is sorted and deterministic") {
  const std::vector<BiblioRecord> recs{paper("1", {"C, X", "A, X"}), paper("2", {"B, X", "A, X"}),
                                       paper("3", {"B, X", "A, X"}), paper("4", {"Q, X"})};
  std::ostringstream edges;
  std::ostringstream isolated;
  write_edge_list(edges, build_graph(recs));
  write_isolated_vertices(isolated, build_graph(recs));
  CHECK(edges.str() == "A, X\tB, X\t2\nA, X\tC, X\t1\n");
  CHECK(isolated.str() == "Q, X\n");
}

TEST_CASE("connected_components") {
  SUBCASE("two disjoint edges") {
    Dense d(4);
    d.link(0, 1);
    d.link(2, 3);
    const auto parts = connected_components(d.graph());
    CHECK(parts.sizes == std::vector<std::size_t>{2, 2});
    CHECK(parts.assignment == std::vector<std::uint32_t>{0, 0, 1, 1});
  }
  SUBCASE("empty graph") {
    const auto parts = connected_components(CoauthGraph{});
    CHECK(parts.count() == 0);
    CHECK(parts.assignment.empty());
  }
  SUBCASE("ids ordered by size") {
    Dense d(6);
    d.link(0, 1);
    d.link(3, 4);
    d.link(4, 5);
    const auto parts = connected_components(d.graph());
    CHECK(parts.sizes == std::vector<std::size_t>{3, 2, 1});
    CHECK(parts.assignment[3] == 0);
    CHECK(parts.assignment[0] == 1);
    CHECK(parts.assignment[2] == 2);
  }
}

TEST_CASE("connected_components agrees with label propagation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Dense d(30);
    std::uniform_int_distribution<std::size_t> v(0, 29);
    for (int e = 0; e < 18; ++e) {
      const auto a = v(rng), b = v(rng);
      if (a != b) d.link(a, b);
    }
    std::vector<std::size_t> label(30);
    std::iota(label.begin(), label.end(), 0);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t a = 0; a < 30; ++a)
        for (std::size_t b = 0; b < 30; ++b)
          if (d.adj[a][b] && label[b] < label[a]) {
            label[a] = label[b];
            changed = true;
          }
    }
    const auto parts = connected_components(d.graph());
    std::size_t total = 0;
    for (auto s : parts.sizes) total += s;
    CHECK(total == 30);
    for (std::size_t a = 0; a < 30; ++a)
      for (std::size_t b = 0; b < 30; ++b)
        CHECK((label[a] == label[b]) == (parts.assignment[a] == parts.assignment[b]));
    for (std::size_t i = 1; i < parts.count(); ++i) CHECK(parts.sizes[i - 1] >= parts.sizes[i]);
  }
}

TEST_CASE("largest_component") {
  CHECK(largest_component(test::path_graph(5).graph()).ratio == 1.0);

  Dense d(10);
  d.link(0, 1);
  d.link(1, 2);
  d.link(0, 2);
  const auto lc = largest_component(d.graph());
  CHECK(lc.graph.vertex_count() == 3);
  CHECK(lc.graph.edge_count() == 3);
  CHECK(lc.ratio == doctest::Approx(0.3));

  CHECK_THROWS_AS(largest_component(CoauthGraph{}), DomainError);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const auto recs = test::random_corpus(rng, 15, 25, 2000, 2000, 3);
    const auto g = build_graph(recs);
    const auto big = largest_component(g);
    const auto parts = connected_components(g);
    CHECK(big.graph.vertex_count() == parts.sizes[0]);
    CHECK(big.ratio > 0.0);
    CHECK(big.ratio <= 1.0);
    // Papers inside the component are recovered exactly.
    std::size_t papers = 0, incidences = 0;
    for (const auto& r : recs) {
      if (big.graph.find(AuthorKey(r.authors[0]))) {
        ++papers;
        incidences += r.authors.size();
      }
    }
    CHECK(big.graph.paper_count() == papers);
    CHECK(big.graph.authorship_count() == incidences);
  }
}

TEST_CASE("shortest_path_lengths") {
  const auto path = test::path_graph(3).graph();
  const auto d = shortest_path_lengths(path, AuthorKey(test::vertex_name(0)));
  CHECK(d == std::map<VertexId, std::uint32_t>{{0, 0}, {1, 1}, {2, 2}});

  Dense split(5);
  split.link(0, 1);
  split.link(2, 3);
  split.link(3, 4);
  CHECK(shortest_path_lengths(split.graph(), VertexId{0}).size() == 2);

  CHECK_THROWS_AS(shortest_path_lengths(path, AuthorKey("NOBODY, X")), DomainError);
  CHECK_THROWS_AS(shortest_path_lengths(path, VertexId{9}), DomainError);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto dense = test::random_dense(rng, 12, 12);
    const auto fw = test::floyd_warshall(dense);
    const auto g = dense.graph();
    for (VertexId s = 0; s < 12; ++s) {
      const auto got = shortest_path_lengths(g, s);
      for (VertexId t = 0; t < 12; ++t) {
        if (fw[s][t] >= test::kInf) {
          CHECK(got.count(t) == 0);
        } else {
          CHECK(got.at(t) == static_cast<std::uint32_t>(fw[s][t]));
        }
      }
    }
  }
}

TEST_CASE("mean_distance closed forms") {
  CHECK(mean_distance(test::complete_graph(4).graph()) == 1.0);
  CHECK(mean_distance(test::path_graph(3).graph()) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  for (std::size_t n = 2; n < 30; ++n) {
    CHECK(mean_distance(test::path_graph(n).graph()) ==
          doctest::Approx((static_cast<double>(n) + 1.0) / 3.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(mean_distance(Dense(3).graph()), DomainError);
  CHECK_THROWS_AS(mean_distance(CoauthGraph{}), DomainError);
}

TEST_CASE("clustering_coefficient") {
  CHECK(clustering_coefficient(test::complete_graph(3).graph()) == 1.0);
  CHECK(clustering_coefficient(test::complete_graph(7).graph()) == 1.0);
  CHECK(clustering_coefficient(test::path_graph(3).graph()) == 0.0);
  CHECK(clustering_coefficient(Dense(4).graph()) == 0.0);

  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const auto d = test::random_dense(rng, 15, 15);
    const auto local = test::clustering_by_pairs(d);
    double expected = 0.0;
    for (double c : local) expected += c;
    if (!local.empty()) expected /= static_cast<double>(local.size());
    const double got = clustering_coefficient(d.graph());
    CHECK(std::fabs(got - expected) <= 1e-12);
    CHECK(got >= 0.0);
    CHECK(got <= 1.0);
  }
}

TEST_CASE("summary_stats") {
  SUBCASE("one two-author paper") {
    const std::vector<BiblioRecord> recs{paper("1", {"A, X", "B, X"})};
    const auto s = summary_stats(recs, build_graph(recs));
    CHECK(s.papers_per_author == 1.0);
    CHECK(s.authors_per_paper == 2.0);
    CHECK(s.avg_collaborators == 1.0);
    CHECK(s.largest_component_ratio == 1.0);
    CHECK(s.mean_distance == 1.0);
  }
  SUBCASE("two papers, one solo") {
    const std::vector<BiblioRecord> recs{paper("1", {"A, X", "B, X"}), paper("2", {"A, X"})};
    const auto s = summary_stats(recs, build_graph(recs));
    CHECK(s.authors_per_paper == 1.5);
    CHECK(s.papers_per_author == 1.5);
    CHECK(s.avg_collaborators == 1.0);
  }
  SUBCASE("zero papers") {
    CHECK_THROWS_AS(summary_stats({}, CoauthGraph{}), DomainError);
  }
  SUBCASE("matches an independent tally") {
    std::mt19937_64 rng(31);
    const auto recs = test::random_corpus(rng, 20, 14, 2000, 2005);
    const auto s = summary_stats(recs, build_graph(recs));
    std::set<std::string> authors;
    std::map<std::string, std::set<std::string>> collaborators;
    std::size_t incidences = 0;
    for (const auto& r : recs) {
      incidences += r.authors.size();
      for (const auto& a : r.authors) {
        authors.insert(a);
        for (const auto& b : r.authors)
          if (a != b) collaborators[a].insert(b);
      }
    }
    double degree_sum = 0;
    for (const auto& [a, c] : collaborators) degree_sum += static_cast<double>(c.size());
    CHECK(s.papers == 20);
    CHECK(s.authors == authors.size());
    CHECK(s.papers_per_author == doctest::Approx(static_cast<double>(incidences) / authors.size()));
    CHECK(s.authors_per_paper == doctest::Approx(static_cast<double>(incidences) / 20.0));
    CHECK(s.avg_collaborators == doctest::Approx(degree_sum / authors.size()));
  }
}
