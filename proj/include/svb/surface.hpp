#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "svb/braid_word.hpp"
#include "svb/errors.hpp"

namespace svb {

enum class VertexKind : std::uint8_t { Crossing, BoundaryCircle };

inline int euler_weight(VertexKind k) noexcept { return k == VertexKind::Crossing ? 1 : 0; }

// Half-edge structure of the thickened diagram. rotation[h] is the next
// half-edge counterclockwise around the vertex of h, pairing[h] the other half
// of h's edge.
class RibbonGraph {
 public:
  RibbonGraph(std::vector<int> rotation, std::vector<int> pairing, std::vector<int> vertex_of,
              std::vector<VertexKind> vertex_kind)
      : rotation_(std::move(rotation)),
        pairing_(std::move(pairing)),
        vertex_of_(std::move(vertex_of)),
        vertex_kind_(std::move(vertex_kind)) {
    validate();
  }

  std::size_t half_edge_count() const noexcept { return rotation_.size(); }
  std::size_t edge_count() const noexcept { return pairing_.size() / 2; }
  std::size_t vertex_count() const noexcept { return vertex_kind_.size(); }
  const std::vector<int>& rotation() const noexcept { return rotation_; }
  const std::vector<int>& pairing() const noexcept { return pairing_; }
  const std::vector<int>& vertex_of() const noexcept { return vertex_of_; }
  const std::vector<VertexKind>& vertex_kind() const noexcept { return vertex_kind_; }

  std::size_t crossing_count() const noexcept {
    std::size_t c = 0;
    for (auto k : vertex_kind_) c += k == VertexKind::Crossing;
    return c;
  }

 private:
  void validate() const {
    const std::size_t h = rotation_.size();
    if (pairing_.size() != h || vertex_of_.size() != h) throw DomainError("ribbon graph arrays differ in size");
    std::vector<char> seen(h, 0);
    for (std::size_t x = 0; x < h; ++x) {
      const int r = rotation_[x], p = pairing_[x], v = vertex_of_[x];
      if (r < 0 || static_cast<std::size_t>(r) >= h || p < 0 || static_cast<std::size_t>(p) >= h) {
        throw DomainError("ribbon graph index out of range");
      }
      if (v < 0 || static_cast<std::size_t>(v) >= vertex_kind_.size()) throw DomainError("bad vertex index");
      if (seen[static_cast<std::size_t>(r)]++) throw DomainError("rotation is not a permutation");
      if (p == static_cast<int>(x) || pairing_[static_cast<std::size_t>(p)] != static_cast<int>(x)) {
        throw DomainError("pairing is not a fixed-point-free involution");
      }
      if (vertex_of_[static_cast<std::size_t>(r)] != v) throw DomainError("rotation leaves its vertex");
    }
    std::size_t circles = 0;
    for (auto k : vertex_kind_) circles += k == VertexKind::BoundaryCircle;
    if (circles != 2) throw DomainError("ribbon graph needs exactly two boundary circles");
  }

  std::vector<int> rotation_;
  std::vector<int> pairing_;
  std::vector<int> vertex_of_;
  std::vector<VertexKind> vertex_kind_;
};

namespace detail {

class RibbonBuilder {
 public:
  int add_vertex(VertexKind kind, std::size_t degree) {
    const int v = static_cast<int>(kind_.size());
    kind_.push_back(kind);
    const int first = static_cast<int>(rotation_.size());
    for (std::size_t k = 0; k < degree; ++k) {
      const int h = first + static_cast<int>(k);
      rotation_.push_back(k + 1 == degree ? first : h + 1);
      pairing_.push_back(-1);
      vertex_of_.push_back(v);
    }
    return first;
  }

  void join(int a, int b) {
    pairing_[static_cast<std::size_t>(a)] = b;
    pairing_[static_cast<std::size_t>(b)] = a;
  }

  RibbonGraph build() && {
    return RibbonGraph(std::move(rotation_), std::move(pairing_), std::move(vertex_of_), std::move(kind_));
  }

 private:
  std::vector<int> rotation_, pairing_, vertex_of_;
  std::vector<VertexKind> kind_;
};

}  // namespace detail

// The diagram is drawn left to right with slot 1 on top. Each circle's
// half-edges are created in counterclockwise order: bottom to top on the left
// circle, top to bottom on the right one. A crossing's four half-edges go
// counterclockwise from the upper-right: out_upper, in_upper, in_lower,
// out_lower. Virtual letters swap the two loose strand ends and add nothing.
inline RibbonGraph ribbon_of_braid(std::size_t n, std::span<const Generator> letters) {
  if (n < 1) throw DomainError("strand count must be positive");
  detail::RibbonBuilder b;
  const int left = b.add_vertex(VertexKind::BoundaryCircle, n);
  std::vector<int> loose(n);
  for (std::size_t k = 0; k < n; ++k) loose[k] = left + static_cast<int>(n - 1 - k);

  for (const auto& g : letters) {
    const auto i = static_cast<std::size_t>(g.index - 1);
    if (g.index < 1 || i + 1 >= n) throw IndexError("generator " + to_string(g) + " out of range");
    if (g.is_virtual()) {
      std::swap(loose[i], loose[i + 1]);
      continue;
    }
    const int c = b.add_vertex(VertexKind::Crossing, 4);
    b.join(loose[i], c + 1);
    b.join(loose[i + 1], c + 2);
    loose[i] = c;
    loose[i + 1] = c + 3;
  }

  const int right = b.add_vertex(VertexKind::BoundaryCircle, n);
  for (std::size_t k = 0; k < n; ++k) b.join(loose[k], right + static_cast<int>(k));
  return std::move(b).build();
}

inline RibbonGraph ribbon_of_braid(const BraidWord& w) { return ribbon_of_braid(w.strand_count(), w.letters()); }

namespace detail {

inline std::size_t count_orbits(std::size_t size, const auto& step) {
  std::vector<char> seen(size, 0);
  std::size_t orbits = 0;
  for (std::size_t start = 0; start < size; ++start) {
    if (seen[start]) continue;
    ++orbits;
    for (std::size_t h = start; !seen[h]; h = step(h)) seen[h] = 1;
  }
  return orbits;
}

}  // namespace detail

// Boundary circuits of the thickened graph: the face cycles of rotation∘pairing,
// plus the free inner circle of each of the two annuli.
inline std::size_t boundary_components(const RibbonGraph& r) {
  const auto& rot = r.rotation();
  const auto& pair = r.pairing();
  const std::size_t faces = detail::count_orbits(r.half_edge_count(), [&](std::size_t h) {
    return static_cast<std::size_t>(rot[static_cast<std::size_t>(pair[h])]);
  });
  return faces + 2;
}

// Σ vertex weights − #edges, from the stored vertex kinds.
inline long long euler_by_weights(const RibbonGraph& r) {
  long long chi = 0;
  for (auto k : r.vertex_kind()) chi += euler_weight(k);
  return chi - static_cast<long long>(r.edge_count());
}

// Same count recovered from the permutations alone: vertices are rotation
// cycles, edges are pairing cycles, and all vertices but the two annuli are
// disks.
inline long long euler_by_traversal(const RibbonGraph& r) {
  const auto& rot = r.rotation();
  const auto& pair = r.pairing();
  const std::size_t h = r.half_edge_count();
  const auto vertices = static_cast<long long>(
      detail::count_orbits(h, [&](std::size_t x) { return static_cast<std::size_t>(rot[x]); }));
  const auto edges = static_cast<long long>(
      detail::count_orbits(h, [&](std::size_t x) { return static_cast<std::size_t>(pair[x]); }));
  return (vertices - 2) - edges;
}

struct SurfaceSummary {
  long long euler = 0;
  std::size_t boundaries = 0;
  long long genus = 0;

  friend bool operator==(const SurfaceSummary&, const SurfaceSummary&) = default;
};

inline SurfaceSummary surface_summary(const RibbonGraph& r) {
  SurfaceSummary s;
  s.euler = euler_by_weights(r);
  if (euler_by_traversal(r) != s.euler) throw Error("internal: Euler characteristic routes disagree");
  s.boundaries = boundary_components(r);
  const long long capped = s.euler + static_cast<long long>(s.boundaries) - 2;
  if (capped % 2 != 0) throw Error("internal: capped Euler characteristic is odd");
  s.genus = -capped / 2;
  if (s.genus < 0) throw Error("internal: negative genus");
  return s;
}

inline SurfaceSummary surface_summary(const BraidWord& w) { return surface_summary(ribbon_of_braid(w)); }

inline long long genus(const BraidWord& w) { return surface_summary(w).genus; }

}  // namespace svb
