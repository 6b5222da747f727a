#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace biplane {

/// Disjoint sets whose members carry a bit relative to their set. Toggling a
/// root flips the bit of every member at once, which is how a whole purple
/// face swaps chord colours in constant time.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(std::size_t n = 0) { resize(n); }

  void resize(std::size_t n) {
    const std::size_t old = parent_.size();
    parent_.resize(n);
    rank_.resize(n, 0);
    bit_.resize(n, 0);
    std::iota(parent_.begin() + static_cast<std::ptrdiff_t>(old), parent_.end(), old);
  }
  std::size_t size() const { return parent_.size(); }

  /// Root of x's set.
  std::size_t find(std::size_t x) { return locate(x).first; }

  /// Absolute bit of x.
  int parity(std::size_t x) {
    auto [root, rel] = locate(x);
    return rel ^ bit_[root];
  }

  /// Flips the bit of every member of x's set.
  void toggle(std::size_t x) { bit_[find(x)] ^= 1; }

  /// Merges the sets of x and y so that parity(x) ^ parity(y) == differ.
  /// If they are already joined nothing changes. Otherwise the members of
  /// whichever set ends up below the other may have their bits flipped.
  void unite(std::size_t x, std::size_t y, int differ) {
    auto [rx, px] = locate(x);
    auto [ry, py] = locate(y);
    if (rx == ry) return;
    if (rank_[rx] < rank_[ry]) {
      std::swap(rx, ry);
      std::swap(px, py);
    }
    // y's old root hangs below x's: parity(y) becomes py ^ bit_[ry] ^ bit_[rx].
    parent_[ry] = rx;
    bit_[ry] = static_cast<std::uint8_t>(px ^ py ^ differ);
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
  }

 private:
  // (root, bit of x relative to the root's own bit)
  std::pair<std::size_t, int> locate(std::size_t x) {
    std::size_t root = x;
    int rel = 0;
    while (parent_[root] != root) {
      rel ^= bit_[root];
      root = parent_[root];
    }
    // Compress: every node on the path points straight at the root.
    int acc = rel;
    while (parent_[x] != root && x != root) {
      const std::size_t up = parent_[x];
      const int own = bit_[x];
      parent_[x] = root;
      bit_[x] = static_cast<std::uint8_t>(acc);
      acc ^= own;
      x = up;
    }
    return {root, rel};
  }

  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
  std::vector<std::uint8_t> bit_;  // relative to parent; a root's bit is absolute
};

}  // namespace biplane
