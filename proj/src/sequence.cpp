#include "threshold_spectra/sequence.hpp"

#include <algorithm>
#include <charconv>

#include "threshold_spectra/errors.hpp"

namespace threshold_spectra {

namespace {

// Far beyond anything a dense eigensolver can handle; keeps run-length
// input like "1^999999999" from allocating gigabytes.
constexpr std::size_t kMaxVertices = std::size_t{1} << 20;

std::string quote_char(char c) {
  if (c >= 0x20 && c < 0x7f) return std::string("'") + c + "'";
  return "byte " + std::to_string(static_cast<unsigned char>(c));
}

}  // namespace

ThresholdGraph::ThresholdGraph(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  prefix_.reserve(blocks_.size() + 1);
  prefix_.push_back(0);
  for (const Block& b : blocks_) {
    n_ += b.count;
    kbar_ += b.bit * b.count;
    prefix_.push_back(n_);
  }
}

ThresholdGraph ThresholdGraph::from_blocks(std::vector<Block> blocks) {
  if (blocks.empty()) throw InputError("threshold graph needs at least one block");
  long long total = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Block& b = blocks[k];
    if (b.bit != 0 && b.bit != 1) {
      throw InputError("block " + std::to_string(k + 1) + " has bit " + std::to_string(b.bit));
    }
    if (b.count < 1) {
      throw InputError("block " + std::to_string(k + 1) + " has non-positive size");
    }
    if (k > 0 && blocks[k - 1].bit == b.bit) {
      throw InputError("blocks " + std::to_string(k) + " and " + std::to_string(k + 1) +
                       " do not alternate");
    }
    total += b.count;
  }
  if (total > static_cast<long long>(kMaxVertices)) throw InputError("too many vertices");
  if (total >= 2 && blocks.front().count < 2) {
    throw InputError("first block must hold at least two vertices");
  }
  return ThresholdGraph(std::move(blocks));
}

int ThresholdGraph::zero_block_count() const noexcept {
  return static_cast<int>(
      std::count_if(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.bit == 0; }));
}

int ThresholdGraph::block_of(int vertex) const {
  if (vertex < 1 || vertex > n_) {
    throw InputError("vertex " + std::to_string(vertex) + " out of range 1.." + std::to_string(n_));
  }
  // first k with n_k >= vertex
  auto it = std::lower_bound(prefix_.begin() + 1, prefix_.end(), vertex);
  return static_cast<int>(it - prefix_.begin());
}

RawSequence parse_raw(std::string_view text) {
  if (text.empty()) throw InputError("empty sequence", 0);
  if (text.size() > kMaxVertices) throw InputError("sequence too long", kMaxVertices + 1);
  RawSequence seq;
  seq.bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw InputError("illegal character " + quote_char(c) + " at position " +
                           std::to_string(i + 1),
                       i + 1);
    }
    seq.bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return seq;
}

RawSequence parse_run_length(std::string_view text) {
  if (text.empty()) throw InputError("empty sequence", 0);
  RawSequence seq;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = text.substr(start, end - start);
    const std::size_t pos = start + 1;
    if (token.empty()) throw InputError("empty token at position " + std::to_string(pos), pos);
    if (token[0] != '0' && token[0] != '1') {
      throw InputError("illegal character " + quote_char(token[0]) + " at position " +
                           std::to_string(pos),
                       pos);
    }
    const auto bit = static_cast<std::uint8_t>(token[0] - '0');
    std::size_t count = 1;
    if (token.size() > 1) {
      if (token[1] != '^') {
        throw InputError("expected '^' at position " + std::to_string(pos + 1), pos + 1);
      }
      const std::string_view digits = token.substr(2);
      if (digits.empty()) {
        throw InputError("missing repetition count at position " + std::to_string(pos + 2), pos + 2);
      }
      const auto* first = digits.data();
      const auto* last = digits.data() + digits.size();
      auto [ptr, ec] = std::from_chars(first, last, count);
      if (ec == std::errc::result_out_of_range) {
        throw InputError("repetition count too large at position " + std::to_string(pos + 2),
                         pos + 2);
      }
      if (ec != std::errc{} || ptr != last) {
        const std::size_t bad = pos + 2 + static_cast<std::size_t>(ptr - first);
        const char c = ptr != last ? *ptr : digits.front();
        throw InputError("illegal character " + quote_char(c) + " at position " +
                             std::to_string(bad),
                         bad);
      }
      if (count == 0) {
        throw InputError("repetition count must be positive at position " + std::to_string(pos + 2),
                         pos + 2);
      }
    }
    if (count > kMaxVertices - seq.bits.size()) throw InputError("sequence too long", pos);
    seq.bits.insert(seq.bits.end(), count, bit);
    start = end + 1;
  }
  return seq;
}

RawSequence parse_sequence(std::string_view text) {
  if (text.find_first_of(",^") != std::string_view::npos) return parse_run_length(text);
  return parse_raw(text);
}

ThresholdGraph normalize(const RawSequence& seq) {
  if (seq.bits.empty()) throw InputError("empty sequence", 0);
  std::vector<std::uint8_t> bits = seq.bits;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw InputError("bit " + std::to_string(i + 1) + " is not 0 or 1", i + 1);
  }
  if (bits.size() >= 2) bits[0] = bits[1];

  std::vector<Block> blocks;
  for (std::uint8_t b : bits) {
    if (!blocks.empty() && blocks.back().bit == b) {
      ++blocks.back().count;
    } else {
      blocks.push_back({b, 1});
    }
  }
  return ThresholdGraph::from_blocks(std::move(blocks));
}

RawSequence expand(const ThresholdGraph& g) {
  RawSequence seq;
  seq.bits.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (const Block& b : g.blocks()) {
    seq.bits.insert(seq.bits.end(), static_cast<std::size_t>(b.count),
                    static_cast<std::uint8_t>(b.bit));
  }
  return seq;
}

std::string to_bit_string(const ThresholdGraph& g) {
  std::string out;
  out.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (const Block& b : g.blocks()) out.append(static_cast<std::size_t>(b.count), b.bit ? '1' : '0');
  return out;
}

std::string to_run_length_string(const ThresholdGraph& g) {
  std::string out;
  for (const Block& b : g.blocks()) {
    if (!out.empty()) out += ',';
    out += b.bit ? '1' : '0';
    if (b.count > 1) out += '^' + std::to_string(b.count);
  }
  return out;
}

}  // namespace threshold_spectra
