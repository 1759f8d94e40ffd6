#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace threshold_spectra {

/// Creation sequence before normalization. Bit i says whether vertex i+1
/// was added isolated (0) or dominating (1).
struct RawSequence {
  std::vector<std::uint8_t> bits;

  std::size_t size() const noexcept { return bits.size(); }
  friend bool operator==(const RawSequence&, const RawSequence&) = default;
};

/// Maximal run of equal bits: `count` vertices added with digit `bit`.
struct Block {
  int bit = 0;
  int count = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Threshold graph in normalized block form b_1^{q_1} ... b_r^{q_r}.
///
/// Invariants: bits alternate between consecutive blocks, and the first
/// block has at least two vertices unless the graph has a single vertex.
/// Values are immutable; the only ways in are normalize() and from_blocks().
class ThresholdGraph {
 public:
  /// Validates the invariants and throws InputError if they do not hold.
  static ThresholdGraph from_blocks(std::vector<Block> blocks);

  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  const Block& block(int k) const { return blocks_.at(static_cast<std::size_t>(k - 1)); }

  /// r, the number of blocks.
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  /// n, the number of vertices.
  int vertex_count() const noexcept { return n_; }
  /// k̄, the number of ones in the creation sequence.
  int ones() const noexcept { return kbar_; }
  /// Zero blocks; equals (r - b_r - b_1 + 1) / 2 under alternation.
  int zero_block_count() const noexcept;

  /// n_k = q_1 + ... + q_k, with n_0 = 0. `k` is in [0, r].
  int prefix(int k) const { return prefix_.at(static_cast<std::size_t>(k)); }
  /// 1-based block index containing the 1-based vertex `v`.
  int block_of(int vertex) const;

  friend bool operator==(const ThresholdGraph& a, const ThresholdGraph& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  explicit ThresholdGraph(std::vector<Block> blocks);

  std::vector<Block> blocks_;
  std::vector<int> prefix_;
  int n_ = 0;
  int kbar_ = 0;
};

/// Plain bit-string form: "0011". Positions in errors are 1-based.
RawSequence parse_raw(std::string_view text);

/// Run-length form: comma-separated "b^q" tokens, "b" alone meaning b^1.
RawSequence parse_run_length(std::string_view text);

/// Accepts either form; run-length is detected by a ',' or '^'.
RawSequence parse_sequence(std::string_view text);

/// Overwrites the first bit with the second and run-length encodes.
ThresholdGraph normalize(const RawSequence& seq);

/// Creation sequence of a normalized graph (first bit equal to the second).
RawSequence expand(const ThresholdGraph& g);

std::string to_bit_string(const ThresholdGraph& g);
/// "0^2,1^2,0,1,0,1,0,1^3"
std::string to_run_length_string(const ThresholdGraph& g);

}  // namespace threshold_spectra
