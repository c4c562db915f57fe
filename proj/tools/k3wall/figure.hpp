/* SPDX-License-Identifier: Apache-2.0
 *
 * figure.hpp -- deterministic SVG 1.1 figures.
 *
 *   triangle  the triangle o z1 z2 with the maximizing chains of the plain and
 *             refined searches (all three drawn as closed polygon paths) and
 *             one marker per lattice point;
 *   grey      the parabola y = p x^2, the grey region o p_u q p_v o', and the
 *             holes of the roots near it;
 *   holes     the parabola and the holes of all roots with s <= hole_smax
 *             projecting into the window around the grey region.
 *
 * Geometry is exact; coordinates are rounded to three decimals only when the
 * SVG text is written.
 */
#ifndef K3WALL_TOOLS_FIGURE_HPP
#define K3WALL_TOOLS_FIGURE_HPP

#include <cstdint>
#include <string>

#include "k3wall/plane.hpp"

namespace k3wall::cli {

enum class FigureKind { Triangle, Grey, Holes };

struct FigureOptions {
  std::int64_t hole_smax = 40;
  /* Triangles with more lattice points are drawn without chains or markers. */
  std::size_t max_lattice_points = 20000;
  double budget_sec = 600.0;
};

std::string render_figure(const Surface& X, FigureKind kind, const FigureOptions& opt = {});

}  // namespace k3wall::cli

#endif  // K3WALL_TOOLS_FIGURE_HPP
