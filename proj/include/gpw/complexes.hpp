#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gpw/group_spec.hpp"

namespace gpw {

using Count = boost::multiprecision::cpp_int;

/// Coordinate range of one direction: the integers lo..hi, or Z/q when
/// cyclic is nonzero (then lo = 0, hi = q - 1).
struct CoordRange {
  long long lo = 0;
  long long hi = 0;
  std::size_t cyclic = 0;

  std::size_t values() const { return static_cast<std::size_t>(hi - lo + 1); }
  /// Unit edges along this coordinate.
  std::size_t steps() const { return cyclic ? cyclic : values() - 1; }

  friend bool operator==(const CoordRange&, const CoordRange&) = default;
};

using Box = std::vector<CoordRange>;
using Point = std::vector<long long>;

/// One cube given by its corners: corners[c] is the vertex at corner c,
/// where bit i of c says whether the corner is at the far end of axes[i].
struct AbstractCube {
  std::vector<std::size_t> corners;
  std::vector<std::size_t> axes;  // graph vertices labelling the directions

  friend bool operator==(const AbstractCube&, const AbstractCube&) = default;
  friend auto operator<=>(const AbstractCube&, const AbstractCube&) = default;
};

/// A cube complex whose edges are labelled by vertices of a graph.
///
/// Lattice complexes have a unit k-cube at every point p of a box for every
/// k-clique D of the graph whose steps from p stay in the box (cyclic
/// coordinates wrap). They are stored implicitly. Explicit complexes hold
/// a face-closed list of cubes over abstract vertices.
class CubeComplex {
 public:
  static CubeComplex lattice(SpecPtr spec, Box box);
  /// Adds every face of the given cubes.
  static CubeComplex explicit_cells(SpecPtr spec, std::size_t vertex_count, std::vector<AbstractCube> cubes,
                                    std::vector<std::string> vertex_names = {});
  /// Explicit cubes on integer lattice points: base point plus a set of
  /// directions; coordinates do not wrap.
  static CubeComplex from_lattice_cubes(SpecPtr spec, const std::vector<std::pair<Point, VertexMask>>& cubes);

  const SpecPtr& spec() const { return spec_; }
  const GroupSpec& group() const { return *spec_; }
  bool is_lattice() const { return lattice_; }
  const Box& box() const { return box_; }
  const std::vector<AbstractCube>& cubes() const { return cubes_; }

  Count vertex_count() const;
  /// Only defined when the vertex count fits in memory.
  std::size_t vertex_count_small() const;
  std::string vertex_name(std::size_t v) const;

  /// Lattice complexes only.
  Point point_of(std::size_t v) const;
  std::optional<std::size_t> vertex_at(const Point& p) const;
  bool contains_point(const Point& p) const;
  bool contains_cube(const Point& base, VertexMask directions) const;
  /// Every cube (base point, directions) in lexicographic base order.
  std::vector<std::pair<Point, VertexMask>> lattice_cubes() const;

 private:
  CubeComplex() = default;

  SpecPtr spec_;
  bool lattice_ = false;
  Box box_;
  std::size_t explicit_vertices_ = 0;
  std::vector<AbstractCube> cubes_;
  std::vector<std::string> names_;
};

/// Z_0: finite-order coordinates range over 0..m-1, infinite-order ones over
/// their window; a missing window defaults to [0, L] with L the largest
/// finite order present (2 if none).
CubeComplex build_Z0(const SpecPtr& spec, const std::vector<std::optional<CoordRange>>& windows = {});
/// Finite model of Z_f: infinite-order coordinates are cyclic of size q
/// (q >= 3, a q-fold cover of each circle factor).
CubeComplex build_Zf(const SpecPtr& spec, std::size_t q);

/// Number of k-cells for k = 0..top dimension.
std::vector<Count> cell_counts(const CubeComplex& x);
Count euler_characteristic(const CubeComplex& x);

struct SignedDirection {
  std::size_t vertex = 0;
  bool positive = true;

  friend bool operator==(const SignedDirection&, const SignedDirection&) = default;
  friend auto operator<=>(const SignedDirection&, const SignedDirection&) = default;
};

/// Vertex link: one vertex per half-edge at the base vertex, labelled by
/// its signed direction, and one simplex per cube corner there. At most 64
/// link vertices.
struct LinkComplex {
  std::vector<SignedDirection> vertices;
  /// Corner sets of the incident cubes, one entry per cube (dimension >= 1).
  std::vector<std::uint64_t> corners;

  bool is_simplex(std::uint64_t set) const;
  /// Pairs of link vertices spanning an edge.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::string str(const SimpleGraph& g) const;
};

LinkComplex vertex_link(const CubeComplex& x, std::size_t vertex);
LinkComplex vertex_link(const CubeComplex& x, const Point& p);

/// Every clique of the 1-skeleton spans a simplex.
bool is_flag(const LinkComplex& link);

struct NpcReport {
  bool npc = true;
  std::optional<std::size_t> offending_vertex;
};
NpcReport check_npc(const CubeComplex& x);
bool is_npc(const CubeComplex& x);

/// Link of the single vertex of the Salvetti complex: vertices v+ and v-,
/// and a simplex for every clique of the graph with a sign per vertex.
LinkComplex salvetti_link(const SimpleGraph& g);

/// Checks that the direction labelling of a link into the Salvetti link is
/// simplicial, injective and has full image. Returns the failures found.
std::vector<std::string> check_link_map(const LinkComplex& link, const SimpleGraph& g);

struct SpecialReport {
  bool special = true;
  std::size_t vertices_checked = 0;
  std::vector<std::string> failures;  // "<vertex>: <reason>"
};
SpecialReport check_special_map(const CubeComplex& x);

/// Every vertex link is one cycle of half-edges with each half-edge in
/// exactly two squares, and there are no cubes above dimension 2.
bool is_closed_surface(const CubeComplex& x);

/// The small link is a subcomplex of the big one (matched by labels) and
/// every simplex of the big one on vertices of the small one lies in it.
bool is_full_subcomplex(const LinkComplex& small, const LinkComplex& big);

// Complex file: the spec lines, then per-direction ranges
//   range <v> <lo> <hi>
//   cyclic <v> <q>
// or explicit cubes instead of ranges
//   cube <c1,c2,...> <v1,v2,...|->
void write_complex(std::ostream& out, const CubeComplex& x, bool dump_cells = false);
CubeComplex read_complex(std::istream& in);
CubeComplex parse_complex(const std::string& text);

/// "V=.. E=.. F=.. C3=.. chi=.. npc=yes|no special=yes|no surface=yes|no"
std::string stats_line(const CubeComplex& x);

}  // namespace gpw
