#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "btlab/localfield.hpp"

namespace btlab {

// Vertex of the Bruhat-Tits tree of PGL_2(F) in Iwasawa coordinates:
// level m and a horocycle coordinate u in F / pi^m O_F.  The base vertex
// x_+ is (0,0) and x_- = (-1,0); u is stored reduced mod pi^m with digits
// down to a session denominator bound.
struct Vertex {
  int m = 0;
  FElem u;  // digits on [lo, m), exact

  Vertex() = default;
  Vertex(int level, FElem coord);

  static Vertex base_plus(const LocalField* K);   // x_+
  static Vertex base_minus(const LocalField* K);  // x_-

  const LocalField* field() const { return u.field(); }
  bool operator==(const Vertex& o) const;
  bool operator<(const Vertex& o) const { return key() < o.key(); }
  std::string key() const;
};

struct Edge {
  Vertex a, b;  // unordered; stored with a.key() < b.key()
  Edge() = default;
  Edge(Vertex x, Vertex y);
  bool operator==(const Edge& o) const { return a == o.a && b == o.b; }
  bool operator<(const Edge& o) const { return key() < o.key(); }
  std::string key() const { return a.key() + "|" + b.key(); }
};

int distance(const Vertex& x, const Vertex& y);
std::vector<Vertex> neighbors(const Vertex& v, int denom_bound);
Vertex parent_vertex(const Vertex& v, int denom_bound);
std::vector<Vertex> children_vertices(const Vertex& v, int denom_bound);

// halftree X_+ (plus) contains exactly the vertices with m >= 0 and
// integral coordinate; everything else lies in X_-
enum class Halftree { plus, minus };
Halftree halftree_of(const Vertex& v);

// head of an oriented edge: the endpoint farther from the distinguished
// end (the one of larger level)
Vertex oriented_head(const Edge& e);
Vertex oriented_tail(const Edge& e);

// 2x2 matrix over F with nonzero determinant, entries carried exactly on
// digit windows
class GMatrix {
 public:
  GMatrix() = default;
  GMatrix(FElem a, FElem b, FElem c, FElem d);

  static GMatrix identity(const LocalField* K, int prec);
  static GMatrix upper(const FElem& b);               // n(b)
  static GMatrix lower(const FElem& c);               // unipotent lower
  static GMatrix diag(const FElem& a, const FElem& d);
  static GMatrix t_power(const LocalField* K, int m, int prec);  // diag(pi,1)^m
  static GMatrix weyl(const LocalField* K, int prec);  // antidiag(1,1)

  const LocalField* field() const { return a_.field(); }
  const FElem& a() const { return a_; }
  const FElem& b() const { return b_; }
  const FElem& c() const { return c_; }
  const FElem& d() const { return d_; }

  GMatrix mul(const GMatrix& o) const;
  GMatrix inverse() const;
  FElem det() const;
  int det_valuation() const;

  Vertex act(const Vertex& v) const;
  Edge act(const Edge& e) const;

  std::string to_string() const;

 private:
  FElem a_, b_, c_, d_;
};

// Finite window of the tree: either the symmetric ball Z^(D)(sigma) or the
// forward ball of depth D below a base vertex.  Vertices carry stable ids.
class TreeWindow {
 public:
  enum class Mode { symmetric, forward };

  // symmetric: all vertices within distance D of sigma = {x_+, x_-}
  static TreeWindow symmetric(const LocalField* K, int D, int denom_bound);
  // forward: Z_+^(D)(root) -- root and its forward descendants to depth D
  static TreeWindow forward(const LocalField* K, const Vertex& root, int D,
                            int denom_bound);

  Mode mode() const { return mode_; }
  int depth() const { return D_; }
  int denom_bound() const { return B_; }
  const LocalField* field() const { return K_; }

  int size() const { return static_cast<int>(verts_.size()); }
  const Vertex& vertex(int id) const { return verts_[id]; }
  std::optional<int> id_of(const Vertex& v) const;
  int require_id(const Vertex& v) const;

  // distance to the window base: min over sigma endpoints (symmetric) or
  // distance to root (forward)
  int shell(int id) const { return shell_[id]; }
  int parent(int id) const { return parent_[id]; }  // -1 at the base
  const std::vector<int>& children(int id) const { return children_[id]; }
  const std::vector<int>& adjacency(int id) const { return adj_[id]; }

  const std::vector<Edge>& edges() const { return edges_; }
  int edge_id(const Edge& e) const;
  const std::vector<std::pair<int, int>>& edge_endpoints() const {
    return edge_vids_;
  }

  // all vertex ids within distance r of the given vertex (in the window)
  std::vector<int> ball_ids(int id, int r) const;
  std::vector<int> ball_ids_edge(int eid, int r) const;
  // forward ball: descendants within distance r (id included)
  std::vector<int> forward_ball_ids(int id, int r) const;

  // whether the ball of radius r around the simplex stays in the window
  bool ball_inside_vertex(int id, int r) const;
  bool ball_inside_edge(int eid, int r) const;

  const Vertex& base_plus() const { return xplus_; }
  const Vertex& base_minus() const { return xminus_; }

 private:
  TreeWindow() = default;
  void index_edges();

  Mode mode_ = Mode::symmetric;
  int D_ = 0;
  int B_ = 0;
  const LocalField* K_ = nullptr;
  Vertex xplus_, xminus_;
  std::vector<Vertex> verts_;
  std::map<std::string, int> ids_;
  std::vector<int> shell_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
  std::map<std::string, int> edge_ids_;
  std::vector<std::pair<int, int>> edge_vids_;
};

}  // namespace btlab
