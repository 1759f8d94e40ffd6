#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "threshold_spectra/errors.hpp"
#include "threshold_spectra/graph.hpp"

namespace ts = threshold_spectra;

namespace {

ts::ThresholdGraph graph(std::string_view text) { return ts::normalize(ts::parse_sequence(text)); }

/// Degrees straight from the edge rule: i < j adjacent iff bit j is one.
/// Works on the raw sequence and shares no code with the library.
std::vector<int> brute_force_degrees(const std::string& bits) {
  const auto n = bits.size();
  std::vector<int> degree(n, 0);
  for (std::size_t j = 1; j < n; ++j) {
    if (bits[j] != '1') continue;
    for (std::size_t i = 0; i < j; ++i) {
      ++degree[i];
      ++degree[j];
    }
  }
  return degree;
}

std::vector<std::size_t> row_lengths(const std::string& diagram) {
  std::vector<std::size_t> lengths;
  std::istringstream in(diagram);
  std::string line;
  while (std::getline(in, line)) {
    lengths.push_back(static_cast<std::size_t>(std::count(line.begin(), line.end(), ts::kFerrersGlyph)));
  }
  return lengths;
}

}  // namespace

TEST_CASE("block degrees of the worked example") {
  const ts::DegreeProfile p = ts::block_degrees(graph("001101010111"));
  CHECK(p.block_degrees == std::vector<int>{7, 8, 5, 9, 4, 10, 3, 11});
  CHECK(p.edge_count == 47);
  CHECK(p.degree_sequence == std::vector<int>{3, 4, 5, 7, 7, 8, 8, 9, 10, 11, 11, 11});
}

TEST_CASE("block degrees of complete graphs and the star") {
  for (int n = 1; n <= 9; ++n) {
    const ts::DegreeProfile p = ts::block_degrees(ts::ThresholdGraph::from_blocks({{1, n}}));
    CHECK(p.block_degrees == std::vector<int>{n - 1});
    CHECK(p.edge_count == n * (n - 1) / 2);
  }
  const ts::DegreeProfile star = ts::block_degrees(graph("0001"));
  CHECK(star.block_degrees == std::vector<int>{1, 3});
  CHECK(star.degree_sequence == std::vector<int>{1, 1, 1, 3});
  CHECK(star.edge_count == 3);
}

TEST_CASE("is_edge follows the later vertex's block") {
  const ts::ThresholdGraph k2 = graph("11");
  CHECK(ts::is_edge(k2, 1, 2));
  CHECK(ts::is_edge(k2, 2, 1));
  const ts::ThresholdGraph empty = graph("000");
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) CHECK_FALSE(ts::is_edge(empty, i, j));
  }
  const ts::ThresholdGraph ex = graph("001101010111");
  CHECK(ts::is_edge(ex, 1, 12));
  CHECK_FALSE(ts::is_edge(ex, 1, 2));
  CHECK_FALSE(ts::is_edge(ex, 3, 5));
  CHECK(ts::is_edge(ex, 5, 6));

  CHECK_THROWS_AS(ts::is_edge(ex, 3, 3), ts::InputError);
  CHECK_THROWS_AS(ts::is_edge(ex, 0, 3), ts::InputError);
  CHECK_THROWS_AS(ts::is_edge(ex, 1, 13), ts::InputError);
}

TEST_CASE("complement flips block bits") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(ts::complement(ts::ThresholdGraph::from_blocks({{1, n}})) ==
          ts::ThresholdGraph::from_blocks({{0, n}}));
  }
  const ts::ThresholdGraph ex = graph("001101010111");
  const ts::ThresholdGraph bar = ts::complement(ex);
  CHECK(bar.blocks() ==
        std::vector<ts::Block>{{1, 2}, {0, 2}, {1, 1}, {0, 1}, {1, 1}, {0, 1}, {1, 1}, {0, 3}});
  CHECK(ts::block_degrees(bar).block_degrees == std::vector<int>{4, 3, 6, 2, 7, 1, 8, 0});
}

TEST_CASE("enumeration counts and order") {
  CHECK_THROWS_AS(ts::enumeration_size(0), ts::InputError);
  CHECK(ts::enumeration_size(1) == 1);
  CHECK(ts::enumeration_size(4) == 8);

  std::vector<ts::ThresholdGraph> two(ts::GraphEnumeration(2).begin(), ts::GraphEnumeration(2).end());
  REQUIRE(two.size() == 2);
  CHECK(two[0].blocks() == std::vector<ts::Block>{{0, 2}});
  CHECK(two[1].blocks() == std::vector<ts::Block>{{1, 2}});

  const ts::GraphEnumeration twelve(12);
  CHECK(twelve.size() == 2048);
  const ts::ThresholdGraph ex = graph("001101010111");
  CHECK(std::count(twelve.begin(), twelve.end(), ex) == 1);
  // counter = bits 2..n read big-endian
  CHECK(ts::graph_at(12, 0b01101010111) == ex);

  const ts::GraphEnumeration one(1);
  REQUIRE(one.size() == 1);
  CHECK((*one.begin()).vertex_count() == 1);

  CHECK_THROWS_AS(ts::GraphEnumeration(4, 3, 9), ts::InputError);
  CHECK_THROWS_AS(ts::graph_at(4, 8), ts::InputError);
}

TEST_CASE("enumeration visits every threshold graph exactly once") {
  for (int n = 1; n <= 12; ++n) {
    std::set<std::string> seen;
    for (const ts::ThresholdGraph& g : ts::GraphEnumeration(n)) {
      CHECK(g.vertex_count() == n);
      seen.insert(ts::to_bit_string(g));
    }
    CHECK(seen.size() == ts::enumeration_size(n));
  }
  // partitioned ranges concatenate to the whole
  std::vector<std::string> whole;
  std::vector<std::string> pieces;
  for (const auto& g : ts::GraphEnumeration(9)) whole.push_back(ts::to_bit_string(g));
  const std::pair<std::uint64_t, std::uint64_t> ranges[] = {{0, 100}, {100, 101}, {101, 200}, {200, 256}};
  for (const auto& [first, last] : ranges) {
    for (const auto& g : ts::GraphEnumeration(9, first, last)) pieces.push_back(ts::to_bit_string(g));
  }
  CHECK(whole == pieces);
}

TEST_CASE("degrees agree with brute force on every graph up to 10 vertices") {
  for (int n = 1; n <= 10; ++n) {
    for (const ts::ThresholdGraph& g : ts::GraphEnumeration(n)) {
      const ts::DegreeProfile p = ts::block_degrees(g);
      const std::string bits = ts::to_bit_string(g);
      const std::vector<int> by_vertex = brute_force_degrees(bits);

      // each vertex's block degree equals its brute-force degree
      for (int v = 1; v <= n; ++v) {
        CHECK(p.block_degrees[static_cast<std::size_t>(g.block_of(v) - 1)] ==
              by_vertex[static_cast<std::size_t>(v - 1)]);
      }
      std::vector<int> sorted = by_vertex;
      std::sort(sorted.begin(), sorted.end());
      CHECK(p.degree_sequence == sorted);

      long long edges = 0;
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) edges += ts::is_edge(g, i, j) ? 1 : 0;
      }
      CHECK(p.edge_count == edges);
      long long degree_sum = 0;
      for (int d : p.degree_sequence) degree_sum += d;
      CHECK(degree_sum % 2 == 0);
      CHECK(degree_sum == 2 * edges);
    }
  }
}

TEST_CASE("complement is an involution with complementary block degrees") {
  for (int n = 1; n <= 10; ++n) {
    for (const ts::ThresholdGraph& g : ts::GraphEnumeration(n)) {
      const ts::ThresholdGraph bar = ts::complement(g);
      CHECK(ts::complement(bar) == g);
      const auto p = ts::block_degrees(g).block_degrees;
      const auto pbar = ts::block_degrees(bar).block_degrees;
      REQUIRE(p.size() == pbar.size());
      for (std::size_t k = 0; k < p.size(); ++k) CHECK(pbar[k] == n - 1 - p[k]);
    }
  }
}

TEST_CASE("block degrees are ordered by block type") {
  for (int n = 2; n <= 12; ++n) {
    for (const ts::ThresholdGraph& g : ts::GraphEnumeration(n)) {
      const auto p = ts::block_degrees(g).block_degrees;
      int last_zero = -1;
      int last_one = -1;
      for (int k = 1; k <= g.block_count(); ++k) {
        const int pk = p[static_cast<std::size_t>(k - 1)];
        if (g.block(k).bit == 0) {
          if (last_zero >= 0) CHECK(pk < last_zero);
          last_zero = pk;
        } else {
          if (last_one >= 0) CHECK(pk > last_one);
          last_one = pk;
        }
      }
      if (g.block_count() >= 2) {
        const int b1 = g.block(1).bit;
        CHECK(p[static_cast<std::size_t>(b1)] <= p[static_cast<std::size_t>(1 - b1)] - 1);
      }
    }
  }
}

TEST_CASE("ferrers rows") {
  CHECK(ts::ferrers(graph("111")) == "b1 | ##\nb1 | ##\nb1 | ##\n");
  CHECK(row_lengths(ts::ferrers(graph("0001"))) == std::vector<std::size_t>{3, 1, 1, 1});
  CHECK(row_lengths(ts::ferrers(graph("0111"))) == std::vector<std::size_t>{3, 3, 3, 3});
  CHECK(ts::ferrers(graph("1")) == "b1 |\n");

  const std::string ex = ts::ferrers(graph("001101010111"));
  CHECK(row_lengths(ex) == std::vector<std::size_t>{11, 11, 11, 10, 9, 8, 8, 7, 7, 5, 4, 3});
  CHECK(ex.rfind("b8 | ###########\nb8 | ###########\nb8 | ###########\nb6 | ##########\n", 0) == 0);
  CHECK(ex.find("b7 | ###\n") == ex.size() - 9);
}
