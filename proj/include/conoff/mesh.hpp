#pragma once

#include "conoff/conics.hpp"
#include "conoff/curve.hpp"

#include <array>
#include <string>
#include <vector>

namespace conoff {

struct MeshSpec {
  ConicSpec ellipse;
  /// Ascending, each in (0, r_crit).
  std::vector<double> offsets;
  /// Descending, each in (-a, a).
  std::vector<double> y_stations;
};

/// Throws SpecError when the spec breaks one of the rules above.
void validate(const MeshSpec& spec);

/// Row-major node matrix with quadrilateral connectivity.
///
/// Rows run from the outermost parallel line inwards: outer offsets in
/// descending order, the ellipse, inner offsets in ascending order. Columns
/// go counterclockwise: the x < 0 station points from top to bottom, the
/// bottom point on the y-axis, the x > 0 station points from bottom to top,
/// and the top point on the y-axis last. Node (row, col) has index
/// row * cols + col. Elements wrap around from the last column to the first.
struct Mesh {
  int rows = 0;
  int cols = 0;
  /// Signed offset of each row; positive is outward.
  std::vector<double> row_offsets;
  std::vector<Point2> nodes;
  /// Counterclockwise corners.
  std::vector<std::array<int, 4>> quad4;
  /// Corners counterclockwise, then the four edge midpoints, then the center.
  std::vector<std::array<int, 9>> quad9;

  friend bool operator==(const Mesh&, const Mesh&) = default;
};

/// Exact rational for the shortest decimal that round-trips v, so 0.2 maps
/// to 1/5.
BigRational decimal_rational(double v);

/// Builds the node matrix. Each layer node starts at distance |r| along the
/// station normal and is refined by Newton's method on the layer polynomial
/// restricted to that line. Throws RootRefineError after 50 iterations
/// without convergence.
Mesh generate_mesh(const MeshSpec& spec);

/// JSON text with 17 significant digits per coordinate.
std::string mesh_to_json(const Mesh& mesh);
Mesh mesh_from_json(const std::string& text);
void export_mesh(const Mesh& mesh, const std::string& path);
Mesh load_mesh(const std::string& path);

/// Rows as closed loops and columns as open polylines, plus nodes as markers.
std::string mesh_svg(const Mesh& mesh);

}  // namespace conoff
