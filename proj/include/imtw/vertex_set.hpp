#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "imtw/error.hpp"

namespace imtw {

using Vertex = int;

/// Subset of the vertex range 0..universe-1 with bitset semantics.
///
/// Binary set operations require both operands to share the same universe.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  VertexSet(std::size_t universe, const std::vector<Vertex> &members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < universe_ &&
           ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  void insert(Vertex v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  /// Lowest member, or -1 when empty.
  Vertex first() const { return next(0); }

  /// Lowest member >= from, or -1.
  Vertex next(Vertex from) const {
    if (from < 0) from = 0;
    std::size_t wi = static_cast<std::size_t>(from) >> 6;
    if (wi >= words_.size()) return -1;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) return static_cast<Vertex>(wi * 64 + std::countr_zero(w));
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <typename F> void for_each(F &&f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        f(static_cast<Vertex>(wi * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  bool is_subset_of(const VertexSet &o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet &o) const {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet &operator|=(const VertexSet &o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet &operator&=(const VertexSet &o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet &operator-=(const VertexSet &o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

  VertexSet complement() const {
    VertexSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  friend bool operator==(const VertexSet &a, const VertexSet &b) = default;

  /// Compares sorted member lists lexicographically (lowest index first).
  friend bool lex_less(const VertexSet &a, const VertexSet &b) {
    auto ma = a.members(), mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
  }

  /// Low 64 bits; only meaningful when universe() <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

private:
  void check(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= universe_)
      throw InvalidArgument("vertex " + std::to_string(v) + " outside range 0.." +
                            std::to_string(static_cast<long long>(universe_) - 1));
  }
  void same_universe(const VertexSet &o) const {
    if (o.universe_ != universe_) throw InvalidArgument("vertex sets over different universes");
  }
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace imtw
