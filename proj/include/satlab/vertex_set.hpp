#ifndef SATLAB_VERTEX_SET_HPP
#define SATLAB_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace satlab {

inline constexpr int kMaxVertices = 512;

/// Fixed-width set of vertex ids in [0, kMaxVertices).
class VertexSet {
public:
  static constexpr int kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;

  /// {0, ..., n-1}
  static VertexSet prefix(int n) {
    VertexSet s;
    for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return s;
  }

  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_)
      c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w != 0)
        return false;
    return true;
  }

  /// Smallest member, or -1 if empty.
  int first() const {
    for (int w = 0; w < kWords; ++w)
      if (words_[w] != 0)
        return w * 64 + std::countr_zero(words_[w]);
    return -1;
  }

  template <class F> void for_each(F &&f) const {
    for (int w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  /// Members strictly greater than v.
  VertexSet above(int v) const {
    VertexSet s = *this;
    int w = v >> 6;
    for (int i = 0; i < w; ++i)
      s.words_[i] = 0;
    int b = v & 63;
    s.words_[w] &= b == 63 ? 0 : ~std::uint64_t{0} << (b + 1);
    return s;
  }

  VertexSet &operator&=(const VertexSet &o) {
    for (int i = 0; i < kWords; ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet &operator|=(const VertexSet &o) {
    for (int i = 0; i < kWords; ++i)
      words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet &operator-=(const VertexSet &o) {
    for (int i = 0; i < kWords; ++i)
      words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

  friend bool operator==(const VertexSet &, const VertexSet &) = default;

  std::size_t hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  const std::array<std::uint64_t, kWords> &words() const { return words_; }

private:
  std::array<std::uint64_t, kWords> words_{};
};

} // namespace satlab

template <> struct std::hash<satlab::VertexSet> {
  std::size_t operator()(const satlab::VertexSet &s) const noexcept { return s.hash(); }
};

#endif
