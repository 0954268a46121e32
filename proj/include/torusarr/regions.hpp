#pragma once

#include "torusarr/arrangement.hpp"
#include "torusarr/feasibility.hpp"
#include "torusarr/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace torusarr::regions {

/// One preimage component normal·x = rhs of a subtorus that meets the closed unit cube.
struct Sheet {
  std::size_t torus = 0; // index into the arrangement
  IntVec normal;
  Rational rhs;          // offset + shift
  Int shift;

  friend bool operator==(const Sheet&, const Sheet&) = default;
};

/// All sheets normal·x = offset + k meeting [0,1]^d, in increasing k.
std::vector<Sheet> lift_hyperplanes(const Subtorus& s, std::size_t dim, std::size_t torus_index = 0);

/// Total sheet count of an arrangement without building anything.
std::size_t sheet_count(const Arrangement& arr);

struct BuildOptions {
  std::size_t max_sheets = 64;
};

enum class Gluing {
  Indexed,    // match wall facets by vertex sets, confirm each match with relative_dim_is
  Exhaustive, // test every pair of wall-touching cells with relative_dim_is
};

/// Bounding inequality side·(normal·x - rhs) >= 0 of a cell, referring to a plane of the
/// complex: planes 2i and 2i+1 are the cube walls x_i = 0 and x_i = 1, plane 2d + j is sheet j.
struct CellConstraint {
  std::uint32_t plane;
  std::int8_t side;
};

struct CellVertex {
  RatVec point;
  std::vector<std::uint32_t> active; // sorted planes of the cell's constraints through the point
};

struct Cell {
  std::vector<CellConstraint> constraints;
  std::vector<CellVertex> vertices;
  std::vector<std::int8_t> signs; // side of every sheet, +1 or -1
  RatVec witness;                 // interior point
};

/// Open cells of the unit cube cut by every sheet, plus their gluing across opposite walls.
struct CellComplex {
  std::size_t dim = 0;
  std::vector<Sheet> sheets;
  std::vector<Cell> cells;
  std::vector<bool> blocked_axes;       // wall x_i ∈ ℤ lies in the arrangement
  std::vector<std::size_t> component;   // region label per cell, labels in order of first cell
  std::size_t region_count = 0;

  IntVec plane_normal(std::uint32_t plane) const;
  Rational plane_rhs(std::uint32_t plane) const;

  /// Open cell: strict on sheets, non-strict on cube walls.
  HPolytope polytope(std::size_t cell) const;
};

/// Throws ResourceLimit when the sheet count exceeds the cap. Cells come out unglued: each one
/// is its own component.
CellComplex build_cells(const Arrangement& arr, const BuildOptions& opts = {});

/// Unions cells across opposite cube walls and relabels components.
void glue(CellComplex& complex, const Arrangement& arr, Gluing strategy = Gluing::Indexed);

/// Full pipeline; returns the glued complex.
CellComplex decompose(const Arrangement& arr, const BuildOptions& opts = {}, Gluing strategy = Gluing::Indexed);

/// Number of connected components of the complement of the arrangement in T^d.
std::size_t count_regions(const Arrangement& arr, const BuildOptions& opts = {});

/// One interior point per region, coordinates in [0,1).
std::vector<RatVec> region_witnesses(const Arrangement& arr, const BuildOptions& opts = {});
std::vector<RatVec> region_witnesses(const CellComplex& complex);

} // namespace torusarr::regions
