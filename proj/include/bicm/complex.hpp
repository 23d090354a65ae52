#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bicm/ideal.hpp"
#include "bicm/masks.hpp"

namespace bicm {

/// Hard cap for the subset scans below; everything in this header is exact
/// and exponential in n, sized for desk-scale verification.
inline constexpr int kMaxComplexVars = 24;

/// Simplicial complex on {0, ..., n-1}, stored as its facet antichain.
/// No facets at all = the empty complex (no faces); the single facet {} =
/// the complex whose only face is the empty set.
struct SimplicialComplex {
  int n = 0;
  std::vector<std::uint32_t> facets;

  bool is_empty_complex() const { return facets.empty(); }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

/// Keeps the maximal faces only and orders them canonically.
inline SimplicialComplex make_complex(int n, std::vector<std::uint32_t> faces) {
  if (n < 1 || n > kMaxVertices) throw std::domain_error("vertex count must be between 1 and 32");
  for (std::uint32_t f : faces)
    if (f & ~full_vertex_mask(n)) throw std::domain_error("face uses a vertex beyond n");
  std::sort(faces.begin(), faces.end(),
            [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) > std::popcount(b); });
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t f : faces) {
    bool covered = false;
    for (std::uint32_t kept : maximal)
      if ((f & kept) == f) {
        covered = true;
        break;
      }
    if (!covered) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end(), lex_mask_less);
  return SimplicialComplex{n, std::move(maximal)};
}

inline SimplicialComplex full_simplex(int n) { return make_complex(n, {full_vertex_mask(n)}); }

inline SimplicialComplex empty_complex(int n) { return make_complex(n, {}); }

inline SimplicialComplex irrelevant_complex(int n) { return make_complex(n, {0}); }

inline bool is_face(const SimplicialComplex& c, std::uint32_t sigma) {
  for (std::uint32_t f : c.facets)
    if ((sigma & f) == sigma) return true;
  return false;
}

/// -2 for the empty complex, -1 for {∅}, otherwise max facet size minus one.
inline int complex_dim(const SimplicialComplex& c) {
  if (c.facets.empty()) return -2;
  int d = -1;
  for (std::uint32_t f : c.facets) d = std::max(d, std::popcount(f) - 1);
  return d;
}

/// Every face (including the empty one), sorted by (size, lex).
inline std::vector<std::uint32_t> all_faces(const SimplicialComplex& c) {
  for (std::uint32_t f : c.facets)
    if (std::popcount(f) > kMaxComplexVars)
      throw std::domain_error("face enumeration too large for this facet size");
  std::vector<std::uint32_t> faces;
  for (std::uint32_t f : c.facets) {
    // iterate the subsets of each facet
    std::uint32_t sub = f;
    while (true) {
      faces.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::sort(faces.begin(), faces.end(), lex_mask_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

/// Restriction to the vertex set sigma: faces of c contained in sigma.
inline SimplicialComplex restrict_to(const SimplicialComplex& c, std::uint32_t sigma) {
  std::vector<std::uint32_t> faces;
  faces.reserve(c.facets.size());
  for (std::uint32_t f : c.facets) faces.push_back(f & sigma);
  return make_complex(c.n, std::move(faces));
}

/// link(F) = {G : G disjoint from F, G u F a face}.  Its facets are the
/// facets of c containing F, with F removed.
inline SimplicialComplex link_of(const SimplicialComplex& c, std::uint32_t face) {
  if (!is_face(c, face)) throw std::domain_error("link requires a face of the complex");
  std::vector<std::uint32_t> faces;
  for (std::uint32_t f : c.facets)
    if ((face & f) == face) faces.push_back(f & ~face);
  return make_complex(c.n, std::move(faces));
}

/// Stanley-Reisner complex of a proper ideal: the faces are the subsets of
/// [n] containing no generator.  The zero ideal gives the full simplex.
inline SimplicialComplex stanley_reisner(const SquarefreeIdeal& ideal) {
  if (ideal.is_unit()) throw std::domain_error("the unit ideal has no Stanley-Reisner complex");
  if (ideal.is_zero()) return full_simplex(ideal.n);
  if (ideal.n > kMaxComplexVars)
    throw std::domain_error("Stanley-Reisner scan limited to n <= 24");
  std::vector<std::uint32_t> facets;
  const std::uint32_t full = full_vertex_mask(ideal.n);
  // A strict superset of sigma always has a larger mask value, so scanning
  // downward meets every maximal face before anything it contains.
  for (std::uint32_t sigma = full;; --sigma) {
    bool face = true;
    for (Monomial g : ideal.gens)
      if (monomial_divides(g, sigma)) {
        face = false;
        break;
      }
    if (face) {
      bool covered = false;
      for (std::uint32_t kept : facets)
        if ((sigma & kept) == sigma) {
          covered = true;
          break;
        }
      if (!covered) facets.push_back(sigma);
    }
    if (sigma == 0) break;
  }
  std::sort(facets.begin(), facets.end(), lex_mask_less);
  return SimplicialComplex{ideal.n, std::move(facets)};
}

/// Alexander dual: generated by the complements of the facets of the
/// Stanley-Reisner complex.  An involution on proper nonzero ideals.
inline SquarefreeIdeal alexander_dual(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw std::domain_error("Alexander dual requires a nonzero proper ideal");
  SimplicialComplex delta = stanley_reisner(ideal);
  std::vector<Monomial> gens;
  const std::uint32_t full = full_vertex_mask(ideal.n);
  for (std::uint32_t f : delta.facets) gens.push_back(full & ~f);
  return make_ideal(ideal.n, std::move(gens));
}

}  // namespace bicm
