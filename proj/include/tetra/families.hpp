#pragma once

// Named graph families with frozen vertex and edge numbering.
//
//   CompleteGraph(n)      vertex i; edges {i,j}, i<j, in lexicographic order
//   Circulant(n, S)       vertex i; edge i·|S|+k = {i, i+S[k]}
//   Wreath(n)             (i,j) -> 2i+j; edges 4i..4i+3 = a_i, b_i, c_i, d_i
//   RoseWindow(n,a,r)     A_i -> i, B_i -> n+i; edges 4i..4i+3 = rim A_iA_{i+1},
//                         in-spoke A_iB_i, out-spoke B_iA_{i+a}, hub B_iB_{i+r}
//   PX(n,k)               (i,s) -> i·2^k+s, s a k-bit string read high bit first;
//                         edge 2v+j' = {(i,s), (i+1, (s<<1 mod 2^k) | j')}
//   Torus44(var, b, c)    Z^2 modulo a translation lattice, vertices numbered by
//                         Hermite-normal-form residues; edges 2v = v+(1,0), 2v+1 = v+(0,1)
//   DoubledCycle(n)       vertex i; edges 2i, 2i+1 = {i, i+1}
//   Dipole(k)             two vertices, k parallel edges
//   CycleProduct(m,n)     (i,j) -> i·n+j; edges 2v = (i,j+1), 2v+1 = (i+1,j)
//   LineGraphOf(X)        vertex = edge id of X; edges in lexicographic order
//   Petersen              outer 0..4, inner 5..9; outer cycle, spokes, pentagram
//   Heawood               cycle 0..13 (edge i = {i,i+1}), then chords 0-5, 2-7,
//                         4-9, 6-11, 8-13, 10-1, 12-3
//   DW(n)                 DW(n,3): (i,j) -> 3i+j, (i,j)~(i+1,l) iff j != l
//   SddOf(X)              the subdivided double of X, uncoloured

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "tetra/error.hpp"
#include "tetra/multigraph.hpp"
#include "tetra/perm.hpp"

namespace tetra {

struct FamilySpec;
using FamilyPtr = std::shared_ptr<const FamilySpec>;

struct CompleteGraph { std::size_t n = 0; };
struct Circulant { std::size_t n = 0; std::vector<long long> connections; };
struct Wreath { std::size_t n = 0; };
struct RoseWindow { std::size_t n = 0; long long a = 0; long long r = 0; };
struct PX { std::size_t n = 0; std::size_t k = 0; };
struct DoubledCycle { std::size_t n = 0; };
struct Dipole { std::size_t multiplicity = 0; };
enum class TorusVariant { standard, bracket, angle };
struct Torus44 { TorusVariant variant = TorusVariant::standard; long long b = 0; long long c = 0; };
struct CycleProduct { std::size_t m = 0; std::size_t n = 0; };
struct LineGraphOf { FamilyPtr inner; };
struct Petersen {};
struct Heawood {};
struct DW { std::size_t n = 0; };
struct SddOf { FamilyPtr inner; };

struct FamilySpec {
  std::variant<CompleteGraph, Circulant, Wreath, RoseWindow, PX, DoubledCycle, Dipole, Torus44, CycleProduct,
               LineGraphOf, Petersen, Heawood, DW, SddOf>
      value;
};

template <class T>
FamilySpec family(T t) {
  return FamilySpec{std::move(t)};
}

inline FamilyPtr family_ptr(FamilySpec s) { return std::make_shared<const FamilySpec>(std::move(s)); }

namespace detail {

inline long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

inline Multigraph checked_simple(Multigraph g, const std::string& what) {
  if (!g.is_simple()) throw InvalidParameter(what + " is not simple for these parameters");
  return g;
}

/// Z^2 / <t1, t2> with Hermite normal form rows (h11, h12), (0, h22).
struct TorusLattice {
  long long h11 = 0, h12 = 0, h22 = 0;

  TorusLattice(long long a, long long b, long long c, long long d) {
    // row-reduce [[a,b],[c,d]] by extended Euclid on the first column
    while (c != 0) {
      long long q = a / c;
      a -= q * c;
      b -= q * d;
      std::swap(a, c);
      std::swap(b, d);
    }
    if (a < 0) {
      a = -a;
      b = -b;
    }
    if (d < 0) d = -d;
    if (a == 0 || d == 0) throw InvalidParameter("translations do not span a lattice of finite index");
    h11 = a;
    h22 = d;
    h12 = mod(b, d);
  }

  std::size_t size() const { return static_cast<std::size_t>(h11 * h22); }

  Point index(long long x, long long y) const {
    long long k = x >= 0 ? x / h11 : -((-x + h11 - 1) / h11);
    long long xr = x - k * h11;
    long long yr = mod(y - k * h12, h22);
    return static_cast<Point>(xr * h22 + yr);
  }

  std::pair<long long, long long> coords(Point v) const { return {static_cast<long long>(v) / h22, static_cast<long long>(v) % h22}; }
};

}  // namespace detail

inline Multigraph make_family(const FamilySpec& spec);

namespace detail {

inline Multigraph build(const CompleteGraph& s) {
  if (s.n < 1) throw InvalidParameter("CompleteGraph needs n >= 1");
  std::vector<Edge> es;
  for (Point i = 0; i < s.n; ++i)
    for (Point j = i + 1; j < s.n; ++j) es.push_back({i, j});
  return Multigraph(s.n, std::move(es));
}

inline Multigraph build(const Circulant& s) {
  auto n = static_cast<long long>(s.n);
  if (n < 3) throw InvalidParameter("Circulant needs n >= 3");
  std::vector<long long> seen;
  for (long long a : s.connections) {
    long long r = mod(a, n);
    if (r == 0) throw InvalidParameter("Circulant connection element must be nonzero mod n");
    if (mod(2 * r, n) == 0) throw InvalidParameter("Circulant connection element n/2 would give a perfect matching");
    for (long long t : seen)
      if (t == r || t == mod(-r, n)) throw InvalidParameter("Circulant connection elements must satisfy a != ±b mod n");
    seen.push_back(r);
  }
  std::vector<Edge> es;
  for (long long i = 0; i < n; ++i)
    for (long long r : seen) es.push_back({static_cast<Point>(i), static_cast<Point>(mod(i + r, n))});
  return Multigraph(s.n, std::move(es));
}

inline Multigraph build(const Wreath& s) {
  if (s.n < 3) throw InvalidParameter("Wreath needs n >= 3");
  auto v = [&](std::size_t i, int j) { return static_cast<Point>(2 * (i % s.n) + static_cast<std::size_t>(j)); };
  std::vector<Edge> es;
  for (std::size_t i = 0; i < s.n; ++i) {
    es.push_back({v(i, 0), v(i + 1, 0)});
    es.push_back({v(i, 0), v(i + 1, 1)});
    es.push_back({v(i, 1), v(i + 1, 1)});
    es.push_back({v(i, 1), v(i + 1, 0)});
  }
  return Multigraph(2 * s.n, std::move(es));
}

inline Multigraph build(const RoseWindow& s) {
  auto n = static_cast<long long>(s.n);
  if (n < 3) throw InvalidParameter("RoseWindow needs n >= 3");
  if (mod(s.a, n) == 0) throw InvalidParameter("RoseWindow needs a != 0 mod n");
  if (mod(s.r, n) == 0 || mod(2 * s.r, n) == 0) throw InvalidParameter("RoseWindow needs r, 2r != 0 mod n");
  auto A = [&](long long i) { return static_cast<Point>(mod(i, n)); };
  auto B = [&](long long i) { return static_cast<Point>(n + mod(i, n)); };
  std::vector<Edge> es;
  for (long long i = 0; i < n; ++i) {
    es.push_back({A(i), A(i + 1)});
    es.push_back({A(i), B(i)});
    es.push_back({B(i), A(i + s.a)});
    es.push_back({B(i), B(i + s.r)});
  }
  return checked_simple(Multigraph(2 * s.n, std::move(es)), "RoseWindow");
}

inline Multigraph build(const PX& s) {
  if (s.n < 3) throw InvalidParameter("PX needs n >= 3");
  if (s.k < 1 || s.k > 16) throw InvalidParameter("PX needs 1 <= k <= 16");
  std::size_t width = std::size_t{1} << s.k;
  std::size_t mask = width - 1;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t x = 0; x < width; ++x)
      for (std::size_t j = 0; j < 2; ++j) {
        std::size_t y = ((x << 1) & mask) | j;
        es.push_back({static_cast<Point>(i * width + x), static_cast<Point>(((i + 1) % s.n) * width + y)});
      }
  return Multigraph(s.n * width, std::move(es));
}

inline Multigraph build(const DoubledCycle& s) {
  if (s.n < 2) throw InvalidParameter("DoubledCycle needs n >= 2");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < s.n; ++i) {
    Edge e{static_cast<Point>(i), static_cast<Point>((i + 1) % s.n)};
    es.push_back(e);
    es.push_back(e);
  }
  return Multigraph(s.n, std::move(es));
}

inline Multigraph build(const Dipole& s) {
  if (s.multiplicity < 1) throw InvalidParameter("Dipole needs multiplicity >= 1");
  return Multigraph(2, std::vector<Edge>(s.multiplicity, Edge{0, 1}));
}

inline Multigraph build(const Torus44& s) {
  long long a = 0, b = 0, c = 0, d = 0;
  switch (s.variant) {
    case TorusVariant::standard: a = s.b, b = s.c, c = -s.c, d = s.b; break;
    case TorusVariant::bracket: a = s.b, b = s.b, c = -s.c, d = s.c; break;
    case TorusVariant::angle: a = s.b, b = s.c, c = s.c, d = s.b; break;
  }
  TorusLattice lat(a, b, c, d);
  std::vector<Edge> es;
  for (Point v = 0; v < lat.size(); ++v) {
    auto [x, y] = lat.coords(v);
    Point right = lat.index(x + 1, y);
    Point up = lat.index(x, y + 1);
    if (right == v || up == v) throw InvalidParameter("Torus44 quotient has loops for these parameters");
    es.push_back({v, right});
    es.push_back({v, up});
  }
  Multigraph g(lat.size(), std::move(es));
  if (!g.is_simple() || !g.is_regular(4)) throw InvalidParameter("Torus44 quotient is not a simple 4-valent graph");
  return g;
}

inline Multigraph build(const CycleProduct& s) {
  if (s.m < 3 || s.n < 3) throw InvalidParameter("CycleProduct needs m, n >= 3");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < s.m; ++i)
    for (std::size_t j = 0; j < s.n; ++j) {
      auto v = static_cast<Point>(i * s.n + j);
      es.push_back({v, static_cast<Point>(i * s.n + (j + 1) % s.n)});
      es.push_back({v, static_cast<Point>(((i + 1) % s.m) * s.n + j)});
    }
  return Multigraph(s.m * s.n, std::move(es));
}

inline Multigraph line_graph(const Multigraph& x) {
  std::vector<Edge> es;
  for (EdgeId e = 0; e < x.edge_count(); ++e)
    for (EdgeId f = e + 1; f < x.edge_count(); ++f)
      if (x.adjacent_edges(e, f)) es.push_back({e, f});
  return Multigraph(x.edge_count(), std::move(es));
}

inline Multigraph build(const LineGraphOf& s) {
  if (!s.inner) throw InvalidParameter("LineGraphOf needs an inner family");
  Multigraph x = make_family(*s.inner);
  if (!x.is_simple()) throw InvalidParameter("LineGraphOf needs a simple inner graph");
  return line_graph(x);
}

inline Multigraph build(const Petersen&) {
  std::vector<Edge> es;
  for (Point i = 0; i < 5; ++i) es.push_back({i, static_cast<Point>((i + 1) % 5)});
  for (Point i = 0; i < 5; ++i) es.push_back({i, static_cast<Point>(i + 5)});
  for (Point i = 0; i < 5; ++i) es.push_back({static_cast<Point>(i + 5), static_cast<Point>((i + 2) % 5 + 5)});
  return Multigraph(10, std::move(es));
}

inline Multigraph build(const Heawood&) {
  std::vector<Edge> es;
  for (Point i = 0; i < 14; ++i) es.push_back({i, static_cast<Point>((i + 1) % 14)});
  for (Point i = 0; i < 14; i += 2) es.push_back({i, static_cast<Point>((i + 5) % 14)});
  return Multigraph(14, std::move(es));
}

inline Multigraph build(const DW& s) {
  if (s.n < 3) throw InvalidParameter("DW needs n >= 3");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t l = 0; l < 3; ++l)
        if (j != l) es.push_back({static_cast<Point>(3 * i + j), static_cast<Point>(3 * ((i + 1) % s.n) + l)});
  return Multigraph(3 * s.n, std::move(es));
}

inline Multigraph build(const SddOf& s) {
  if (!s.inner) throw InvalidParameter("SddOf needs an inner family");
  return sdd(make_family(*s.inner)).graph;
}

}  // namespace detail

inline Multigraph make_family(const FamilySpec& spec) {
  return std::visit([](const auto& s) { return detail::build(s); }, spec.value);
}

// ---------------------------------------------------------------------------
// Shorthand names

inline std::string family_name(const FamilySpec& spec);

namespace detail {

inline std::string name_of(const CompleteGraph& s) { return "K" + std::to_string(s.n); }
inline std::string name_of(const Circulant& s) {
  std::string out = "C" + std::to_string(s.n) + "(";
  for (std::size_t i = 0; i < s.connections.size(); ++i) out += (i ? "," : "") + std::to_string(s.connections[i]);
  return out + ")";
}
inline std::string name_of(const Wreath& s) { return "W(" + std::to_string(s.n) + ",2)"; }
inline std::string name_of(const RoseWindow& s) {
  return "R" + std::to_string(s.n) + "(" + std::to_string(s.a) + "," + std::to_string(s.r) + ")";
}
inline std::string name_of(const PX& s) { return "PX(" + std::to_string(s.n) + "," + std::to_string(s.k) + ")"; }
inline std::string name_of(const DoubledCycle& s) { return "DC" + std::to_string(s.n); }
inline std::string name_of(const Dipole& s) { return "DIP" + std::to_string(s.multiplicity); }
inline std::string name_of(const Torus44& s) {
  std::string inner = std::to_string(s.b) + "," + std::to_string(s.c);
  switch (s.variant) {
    case TorusVariant::standard: return "T44{" + inner + "}";
    case TorusVariant::bracket: return "T44[" + inner + "]";
    case TorusVariant::angle: return "T44<" + inner + ">";
  }
  return "";
}
inline std::string name_of(const CycleProduct& s) { return "C" + std::to_string(s.m) + "xC" + std::to_string(s.n); }
inline std::string name_of(const LineGraphOf& s) { return "L(" + family_name(*s.inner) + ")"; }
inline std::string name_of(const Petersen&) { return "Petersen"; }
inline std::string name_of(const Heawood&) { return "Heawood"; }
inline std::string name_of(const DW& s) { return "DW(" + std::to_string(s.n) + ",3)"; }
inline std::string name_of(const SddOf& s) { return "SDD(" + family_name(*s.inner) + ")"; }

class FamilyParser {
 public:
  explicit FamilyParser(std::string text) : s_(std::move(text)) {}

  FamilySpec parse_all() {
    FamilySpec f = parse();
    skip_ws();
    if (i_ != s_.size()) fail("trailing characters");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("family '" + s_ + "': " + why + " at position " + std::to_string(i_));
  }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(const std::string& tok) {
    skip_ws();
    if (s_.compare(i_, tok.size(), tok) == 0) {
      i_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!accept(tok)) fail("expected '" + tok + "'");
  }
  bool peek_digit() {
    skip_ws();
    return i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-');
  }
  long long integer() {
    skip_ws();
    std::size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_ || (i_ - start == 1 && s_[start] == '-')) fail("expected integer");
    return std::stoll(s_.substr(start, i_ - start));
  }
  std::size_t natural() {
    long long v = integer();
    if (v < 0) fail("expected non-negative integer");
    return static_cast<std::size_t>(v);
  }
  std::pair<long long, long long> pair_in(const std::string& open, const std::string& close) {
    expect(open);
    long long a = integer();
    expect(",");
    long long b = integer();
    expect(close);
    return {a, b};
  }

  FamilySpec parse() {
    skip_ws();
    if (accept("SDD(")) {
      FamilySpec inner = parse();
      expect(")");
      return family(SddOf{family_ptr(std::move(inner))});
    }
    if (accept("L(")) {
      FamilySpec inner = parse();
      expect(")");
      return family(LineGraphOf{family_ptr(std::move(inner))});
    }
    if (accept("Petersen")) return family(Petersen{});
    if (accept("Heawood")) return family(Heawood{});
    if (accept("PX(")) {
      std::size_t n = natural();
      expect(",");
      std::size_t k = natural();
      expect(")");
      return family(PX{n, k});
    }
    if (accept("DW(")) {
      std::size_t n = natural();
      expect(",");
      if (natural() != 3) fail("only DW(n,3) is supported");
      expect(")");
      return family(DW{n});
    }
    if (accept("DIP")) return family(Dipole{natural()});
    if (accept("DC")) return family(DoubledCycle{natural()});
    if (accept("T44")) {
      skip_ws();
      if (i_ < s_.size() && s_[i_] == '{') {
        auto [b, c] = pair_in("{", "}");
        return family(Torus44{TorusVariant::standard, b, c});
      }
      if (i_ < s_.size() && s_[i_] == '[') {
        auto [b, c] = pair_in("[", "]");
        return family(Torus44{TorusVariant::bracket, b, c});
      }
      auto [b, c] = pair_in("<", ">");
      return family(Torus44{TorusVariant::angle, b, c});
    }
    if (accept("W(")) {
      std::size_t n = natural();
      expect(",");
      if (natural() != 2) fail("only W(n,2) is supported");
      expect(")");
      return family(Wreath{n});
    }
    if (accept("K")) return family(CompleteGraph{natural()});
    if (accept("R")) {
      std::size_t n = natural();
      auto [a, r] = pair_in("(", ")");
      return family(RoseWindow{n, a, r});
    }
    if (accept("C")) {
      std::size_t n = natural();
      if (accept("xC")) return family(CycleProduct{n, natural()});
      expect("(");
      std::vector<long long> conn{integer()};
      while (accept(",")) conn.push_back(integer());
      expect(")");
      return family(Circulant{n, std::move(conn)});
    }
    fail("unknown family");
  }

  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline std::string family_name(const FamilySpec& spec) {
  return std::visit([](const auto& s) { return detail::name_of(s); }, spec.value);
}

/// Parses shorthand such as `K5`, `C10(1,3)`, `W(6,2)`, `R10(4,1)`, `PX(5,2)`,
/// `T44[3,4]`, `T44<7,3>`, `T44{3,0}`, `DC6`, `DIP4`, `C3xC3`, `L(Petersen)`,
/// `Heawood`, `DW(3,3)`, `SDD(K5)`.
inline FamilySpec parse_family(const std::string& text) { return detail::FamilyParser(text).parse_all(); }

inline Multigraph make_family(const std::string& text) { return make_family(parse_family(text)); }

// ---------------------------------------------------------------------------
// Wreath graph labels and generators

/// Edge labels and the standard generators ρ, μ, τ_i of Aut(W(n,2)), as
/// permutations of vertices ⊎ edges.
struct WreathLabels {
  std::size_t n = 0;
  Multigraph graph;

  explicit WreathLabels(std::size_t n_) : n(n_), graph(make_family(family(Wreath{n_}))) {}

  static Point vertex(std::size_t n, long long i, int j) {
    return static_cast<Point>(2 * detail::mod(i, static_cast<long long>(n)) + j);
  }
  EdgeId a(long long i) const { return static_cast<EdgeId>(4 * detail::mod(i, static_cast<long long>(n)) + 0); }
  EdgeId b(long long i) const { return static_cast<EdgeId>(4 * detail::mod(i, static_cast<long long>(n)) + 1); }
  EdgeId c(long long i) const { return static_cast<EdgeId>(4 * detail::mod(i, static_cast<long long>(n)) + 2); }
  EdgeId d(long long i) const { return static_cast<EdgeId>(4 * detail::mod(i, static_cast<long long>(n)) + 3); }
  std::vector<EdgeId> class_c(long long i) const { return {a(i), b(i), c(i), d(i)}; }

  Perm rho() const {
    return from_vertex_map([&](long long i, int j) { return vertex(n, i + 1, j); });
  }
  Perm mu() const {
    return from_vertex_map([&](long long i, int j) { return vertex(n, -i, j); });
  }
  Perm tau(long long k) const {
    long long kk = detail::mod(k, static_cast<long long>(n));
    return from_vertex_map([&](long long i, int j) { return vertex(n, i, i == kk ? 1 - j : j); });
  }
  /// Product τ_{k0} τ_{k0+step} ... over the listed indices.
  Perm tau_product(const std::vector<long long>& ks) const {
    Perm p = Perm::identity(graph.domain_size());
    for (long long k : ks) p = p * tau(k);
    return p;
  }
  /// Edge-point of an edge id in the vertices ⊎ edges domain.
  Point edge_point(EdgeId e) const { return graph.edge_point(e); }

 private:
  template <class F>
  Perm from_vertex_map(F f) const {
    std::vector<Point> img(2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (int j = 0; j < 2; ++j) img[vertex(n, static_cast<long long>(i), j)] = f(static_cast<long long>(i), j);
    return graph.lift_vertex_perm(Perm(std::move(img)));
  }
};

}  // namespace tetra
