#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tetra/error.hpp"

namespace tetra {

using Point = std::uint32_t;

/// A permutation of {0, ..., n-1}, stored as its image list.
///
/// Products follow the left-to-right convention: `(a * b)[x] == b[a[x]]`,
/// i.e. `a` is applied first. Conjugation `g ^ x` is `x⁻¹·g·x`.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
      if (p >= images_.size() || seen[p])
        throw InvalidParameter("image list is not a bijection");
      seen[p] = true;
    }
  }

  static Perm identity(std::size_t n) {
    Perm p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), Point{0});
    return p;
  }

  /// Parses cycle notation such as `(0 1 2)(3 4)` on a domain of size n.
  static Perm from_cycles(std::size_t n, std::string_view text) {
    Perm p = identity(n);
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ','))
        ++i;
    };
    std::vector<bool> used(n, false);
    while (true) {
      skip_ws();
      if (i >= text.size()) break;
      if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
      ++i;
      std::vector<Point> cycle;
      while (true) {
        skip_ws();
        if (i >= text.size()) throw ParseError("unterminated cycle");
        if (text[i] == ')') {
          ++i;
          break;
        }
        std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (start == i) throw ParseError("expected integer in cycle");
        Point v = static_cast<Point>(std::stoul(std::string(text.substr(start, i - start))));
        if (v >= n) throw IndexOutOfRange("cycle entry " + std::to_string(v) + " >= " + std::to_string(n));
        if (used[v]) throw ParseError("point repeated in cycle notation");
        used[v] = true;
        cycle.push_back(v);
      }
      for (std::size_t k = 0; k < cycle.size(); ++k)
        p.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    return p;
  }

  /// Parses either `perm n: i0 i1 ...` or cycle notation (needs n).
  static Perm parse(std::string_view text, std::size_t n_hint = 0) {
    auto pos = text.find("perm");
    if (pos == std::string_view::npos) return from_cycles(n_hint, text);
    std::istringstream in{std::string(text.substr(pos + 4))};
    std::size_t n = 0;
    char colon = 0;
    if (!(in >> n >> colon) || colon != ':') throw ParseError("malformed 'perm n:' header");
    std::vector<Point> img(n);
    for (std::size_t k = 0; k < n; ++k)
      if (!(in >> img[k])) throw ParseError("permutation image list too short");
    return Perm(std::move(img));
  }

  std::size_t size() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  Perm inverse() const {
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
  }

  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw DomainMismatch("perm product on different domains");
    Perm r;
    r.images_.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
    return r;
  }

  /// x⁻¹ · g · x
  friend Perm operator^(const Perm& g, const Perm& x) { return x.inverse() * g * x; }

  Perm pow(long long e) const {
    Perm base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Perm r = identity(size());
    while (k > 0) {
      if (k & 1U) r = r * base;
      base = base * base;
      k >>= 1U;
    }
    return r;
  }

  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(size(), false);
    for (Point i = 0; i < size(); ++i) {
      if (seen[i] || images_[i] == i) continue;
      std::vector<Point> c;
      for (Point j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        c.push_back(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::uint64_t order() const {
    std::uint64_t r = 1;
    for (const auto& c : cycles()) r = std::lcm(r, static_cast<std::uint64_t>(c.size()));
    return r;
  }

  /// Restriction to the points [first, first+count), which must be invariant;
  /// the result acts on {0, ..., count-1}.
  Perm restricted(std::size_t first, std::size_t count) const {
    std::vector<Point> img(count);
    for (std::size_t i = 0; i < count; ++i) {
      Point v = images_[first + i];
      if (v < first || v >= first + count) throw DomainMismatch("restriction range is not invariant");
      img[i] = static_cast<Point>(v - first);
    }
    Perm r;
    r.images_ = std::move(img);
    return r;
  }

  /// `perm n: i0 i1 ...`
  std::string to_string() const {
    std::string s = "perm " + std::to_string(size()) + ":";
    for (Point p : images_) s += " " + std::to_string(p);
    return s;
  }

  std::string to_cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
      s += "(";
      for (std::size_t k = 0; k < c.size(); ++k) s += (k ? " " : "") + std::to_string(c[k]);
      s += ")";
    }
    return s;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Point v : p.images()) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace tetra
