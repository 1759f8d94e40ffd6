#pragma once

#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "threshold_spectra/sequence.hpp"

namespace threshold_spectra {

struct DegreeProfile {
  /// p_k, one per block.
  std::vector<int> block_degrees;
  /// d_1 <= ... <= d_n.
  std::vector<int> degree_sequence;
  long long edge_count = 0;
};

/// Block degrees from the closed form, expanded and sorted.
DegreeProfile block_degrees(const ThresholdGraph& g);

/// Adjacency of two distinct 1-based vertices, in either order.
bool is_edge(const ThresholdGraph& g, int i, int j);

/// Flips every block bit. Alternation and the first-block size carry over.
ThresholdGraph complement(const ThresholdGraph& g);

/// Graphs per vertex count: 2^{n-1} for n >= 2, one for n = 1.
std::uint64_t enumeration_size(int n);

/// The graph at position `counter` of the enumeration on n vertices. Bits
/// 2..n are the big-endian binary digits of `counter`; bit 1 copies bit 2.
ThresholdGraph graph_at(int n, std::uint64_t counter);

/// Every threshold graph on n vertices, each exactly once, in counter order.
/// A sub-range [first, last) of counters can be taken for partitioned sweeps.
class GraphEnumeration {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ThresholdGraph;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = ThresholdGraph;

    iterator() = default;
    iterator(int n, std::uint64_t counter) : n_(n), counter_(counter) {}

    ThresholdGraph operator*() const { return graph_at(n_, counter_); }
    std::uint64_t counter() const noexcept { return counter_; }
    iterator& operator++() {
      ++counter_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++counter_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.counter_ == b.counter_;
    }

   private:
    int n_ = 0;
    std::uint64_t counter_ = 0;
  };

  explicit GraphEnumeration(int n);
  GraphEnumeration(int n, std::uint64_t first, std::uint64_t last);

  iterator begin() const { return {n_, first_}; }
  iterator end() const { return {n_, last_}; }
  std::uint64_t size() const noexcept { return last_ - first_; }
  int vertex_count() const noexcept { return n_; }

 private:
  int n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

/// Glyph used for one box of the Ferrers diagram.
inline constexpr char kFerrersGlyph = '#';

/// One row per vertex in descending degree order. Each row is a gutter
/// naming the vertex's block ("b8"), a '|' separator and d boxes:
///
///     b8 | ###########
///
std::string ferrers(const ThresholdGraph& g);

}  // namespace threshold_spectra
