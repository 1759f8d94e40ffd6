#include "threshold_spectra/graph.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "threshold_spectra/errors.hpp"

namespace threshold_spectra {

DegreeProfile block_degrees(const ThresholdGraph& g) {
  const int r = g.block_count();
  DegreeProfile profile;
  profile.block_degrees.resize(static_cast<std::size_t>(r));

  // ones_after = sum_{h > k} b_h q_h, walked from the last block down
  int ones_after = 0;
  for (int k = r; k >= 1; --k) {
    const Block& b = g.block(k);
    profile.block_degrees[static_cast<std::size_t>(k - 1)] =
        b.bit == 0 ? ones_after : g.prefix(k) - 1 + ones_after;
    ones_after += b.bit * b.count;
  }

  profile.degree_sequence.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int k = 1; k <= r; ++k) {
    profile.degree_sequence.insert(profile.degree_sequence.end(),
                                   static_cast<std::size_t>(g.block(k).count),
                                   profile.block_degrees[static_cast<std::size_t>(k - 1)]);
  }
  std::sort(profile.degree_sequence.begin(), profile.degree_sequence.end());

  const long long degree_sum = std::accumulate(profile.degree_sequence.begin(),
                                               profile.degree_sequence.end(), 0LL);
  profile.edge_count = degree_sum / 2;
  return profile;
}

bool is_edge(const ThresholdGraph& g, int i, int j) {
  const int n = g.vertex_count();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw InputError("vertex pair (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") out of range 1.." + std::to_string(n));
  }
  if (i == j) throw InputError("vertex pair (" + std::to_string(i) + ", " + std::to_string(j) + ") is a loop");
  return g.block(g.block_of(std::max(i, j))).bit == 1;
}

ThresholdGraph complement(const ThresholdGraph& g) {
  std::vector<Block> flipped = g.blocks();
  for (Block& b : flipped) b.bit = 1 - b.bit;
  return ThresholdGraph::from_blocks(std::move(flipped));
}

std::uint64_t enumeration_size(int n) {
  if (n < 1) throw InputError("vertex count must be at least 1");
  if (n > 63) throw InputError("vertex count too large to enumerate");
  return n == 1 ? 1 : std::uint64_t{1} << (n - 1);
}

ThresholdGraph graph_at(int n, std::uint64_t counter) {
  if (counter >= enumeration_size(n)) {
    throw InputError("enumeration counter " + std::to_string(counter) + " out of range");
  }
  RawSequence seq;
  seq.bits.resize(static_cast<std::size_t>(n));
  for (int j = 2; j <= n; ++j) {
    seq.bits[static_cast<std::size_t>(j - 1)] = static_cast<std::uint8_t>((counter >> (n - j)) & 1U);
  }
  return normalize(seq);
}

GraphEnumeration::GraphEnumeration(int n) : GraphEnumeration(n, 0, enumeration_size(n)) {}

GraphEnumeration::GraphEnumeration(int n, std::uint64_t first, std::uint64_t last)
    : n_(n), first_(first), last_(last) {
  if (first > last || last > enumeration_size(n)) {
    throw InputError("enumeration range [" + std::to_string(first) + ", " + std::to_string(last) +
                     ") invalid for n = " + std::to_string(n));
  }
}

std::string ferrers(const ThresholdGraph& g) {
  const DegreeProfile profile = block_degrees(g);

  // (degree, block) per vertex
  std::vector<std::pair<int, int>> rows;
  rows.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int k = 1; k <= g.block_count(); ++k) {
    for (int v = 0; v < g.block(k).count; ++v) {
      rows.emplace_back(profile.block_degrees[static_cast<std::size_t>(k - 1)], k);
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });

  const std::size_t gutter = 1 + std::to_string(g.block_count()).size();
  std::string out;
  for (const auto& [degree, block] : rows) {
    std::string label = "b" + std::to_string(block);
    label.resize(gutter, ' ');
    out += label;
    out += " |";
    if (degree > 0) {
      out += ' ';
      out.append(static_cast<std::size_t>(degree), kFerrersGlyph);
    }
    out += '\n';
  }
  return out;
}

}  // namespace threshold_spectra
