#include "btlab/tree.hpp"

#include <algorithm>
#include <deque>

namespace btlab {

namespace {

// canonical coordinate: digits on [lo, m) with lowest digit nonzero, or the
// empty window at m for zero
FElem canonical_coord(const FElem& u, int m) {
  FElem t = u.hi() >= m ? u.truncate(m) : u;
  if (t.hi() < m)
    throw PrecisionError("vertex: coordinate not known modulo pi^m");
  auto v = t.valuation_opt();
  if (!v) return FElem(t.field(), m, {});
  std::vector<uint8_t> d;
  for (int e = *v; e < m; ++e) d.push_back(t.digit_at(e));
  return FElem(t.field(), *v, std::move(d));
}

}  // namespace

Vertex::Vertex(int level, FElem coord) : m(level), u(canonical_coord(coord, level)) {}

Vertex Vertex::base_plus(const LocalField* K) {
  return Vertex(0, FElem::zero(K, 0));
}

Vertex Vertex::base_minus(const LocalField* K) {
  return Vertex(-1, FElem::zero(K, 0));
}

bool Vertex::operator==(const Vertex& o) const {
  return m == o.m && u.lo() == o.u.lo() &&
         u.hi() == o.u.hi() && key() == o.key();
}

std::string Vertex::key() const {
  std::string s = std::to_string(m) + "(";
  s += std::to_string(u.lo());
  s += ":";
  for (int e = u.lo(); e < u.hi(); ++e) s += std::to_string(u.digit_at(e)) + ",";
  return s + ")";
}

Edge::Edge(Vertex x, Vertex y) {
  if (distance(x, y) != 1) throw Error("edge: endpoints not adjacent");
  if (x.key() < y.key()) {
    a = std::move(x);
    b = std::move(y);
  } else {
    a = std::move(y);
    b = std::move(x);
  }
}

int distance(const Vertex& x, const Vertex& y) {
  const int mcap = std::min(x.m, y.m);
  FElem diff = x.u.truncate(std::min(x.u.hi(), mcap))
                   .sub(y.u.truncate(std::min(y.u.hi(), mcap)));
  auto v = diff.valuation_opt();
  int ell = v ? std::min(*v, mcap) : mcap;
  return (x.m - ell) + (y.m - ell);
}

Vertex parent_vertex(const Vertex& v, int denom_bound) {
  if (v.m - 1 < -denom_bound - 1)
    throw Error("tree: level window exceeded (parent)");
  return Vertex(v.m - 1, v.u);
}

std::vector<Vertex> children_vertices(const Vertex& v, int denom_bound) {
  if (v.m < -denom_bound)
    throw Error("tree: denominator bound exceeded (children)");
  const LocalField* K = v.field();
  std::vector<Vertex> out;
  for (int c = 0; c < K->q(); ++c) {
    FElem add = FElem::pi_pow(K, v.m, v.m + 1, static_cast<uint8_t>(c));
    FElem uu = FElem(K, v.u.lo(), {});
    // widen u to precision m+1 before adding the new digit
    std::vector<uint8_t> d;
    for (int e = v.u.lo(); e < v.m + 1; ++e)
      d.push_back(e < v.u.hi() ? v.u.digit_at(e) : 0);
    FElem wide(K, v.u.lo(), std::move(d));
    out.push_back(Vertex(v.m + 1, wide.add(add)));
  }
  return out;
}

std::vector<Vertex> neighbors(const Vertex& v, int denom_bound) {
  std::vector<Vertex> out;
  out.push_back(parent_vertex(v, denom_bound));
  for (auto& c : children_vertices(v, denom_bound)) out.push_back(std::move(c));
  return out;
}

Halftree halftree_of(const Vertex& v) {
  if (v.m < 0) return Halftree::minus;
  auto val = v.u.valuation_opt();
  if (val && *val < 0) return Halftree::minus;
  return Halftree::plus;
}

Vertex oriented_head(const Edge& e) { return e.a.m > e.b.m ? e.a : e.b; }
Vertex oriented_tail(const Edge& e) { return e.a.m > e.b.m ? e.b : e.a; }

// -------------------------------------------------------------- GMatrix

GMatrix::GMatrix(FElem a, FElem b, FElem c, FElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

GMatrix GMatrix::identity(const LocalField* K, int prec) {
  return GMatrix(FElem::from_int(K, 1, prec), FElem::zero(K, prec),
                 FElem::zero(K, prec), FElem::from_int(K, 1, prec));
}

GMatrix GMatrix::upper(const FElem& b) {
  const LocalField* K = b.field();
  const int prec = b.hi();
  return GMatrix(FElem::from_int(K, 1, prec), b, FElem::zero(K, prec),
                 FElem::from_int(K, 1, prec));
}

GMatrix GMatrix::lower(const FElem& c) {
  const LocalField* K = c.field();
  const int prec = c.hi();
  return GMatrix(FElem::from_int(K, 1, prec), FElem::zero(K, prec), c,
                 FElem::from_int(K, 1, prec));
}

GMatrix GMatrix::diag(const FElem& a, const FElem& d) {
  const LocalField* K = a.field();
  const int prec = std::min(a.hi(), d.hi());
  return GMatrix(a, FElem::zero(K, prec), FElem::zero(K, prec), d);
}

GMatrix GMatrix::t_power(const LocalField* K, int m, int prec) {
  return diag(FElem::pi_pow(K, m, m + prec), FElem::from_int(K, 1, prec));
}

GMatrix GMatrix::weyl(const LocalField* K, int prec) {
  return GMatrix(FElem::zero(K, prec), FElem::from_int(K, 1, prec),
                 FElem::from_int(K, 1, prec), FElem::zero(K, prec));
}

GMatrix GMatrix::mul(const GMatrix& o) const {
  return GMatrix(a_.mul(o.a_).add(b_.mul(o.c_)), a_.mul(o.b_).add(b_.mul(o.d_)),
                 c_.mul(o.a_).add(d_.mul(o.c_)), c_.mul(o.b_).add(d_.mul(o.d_)));
}

FElem GMatrix::det() const { return a_.mul(d_).sub(b_.mul(c_)); }

int GMatrix::det_valuation() const { return det().valuation(); }

GMatrix GMatrix::inverse() const {
  FElem dt = det();
  return GMatrix(d_.div(dt), b_.neg().div(dt), c_.neg().div(dt), a_.div(dt));
}

Vertex GMatrix::act(const Vertex& v) const {
  const LocalField* K = field();
  // lattice columns (a pi^m + 0, c pi^m) and (a u + b, c u + d)
  const int m = v.m;
  const int prec = std::min({a_.hi(), b_.hi(), c_.hi(), d_.hi()});
  FElem pim = FElem::pi_pow(K, m, m + prec);
  // widen u so products keep enough digits
  FElem u = v.u;
  if (u.hi() < m + prec) {
    std::vector<uint8_t> d;
    for (int e = u.lo(); e < u.hi(); ++e) d.push_back(u.digit_at(e));
    u = FElem(K, u.lo(), std::move(d));
    // digits above u.hi() are genuinely known: the coordinate is exact mod pi^m
    // and the vertex only depends on u mod pi^m, so extend by zeros
    std::vector<uint8_t> dd;
    for (int e = u.lo(); e < m + prec; ++e)
      dd.push_back(e < u.hi() ? u.digit_at(e) : 0);
    u = FElem(K, u.lo(), std::move(dd));
  }
  FElem alpha1 = a_.mul(pim), beta1 = c_.mul(pim);
  FElem alpha2 = a_.mul(u).add(b_), beta2 = c_.mul(u).add(d_);
  auto vb1 = beta1.valuation_opt(), vb2 = beta2.valuation_opt();
  if (!vb1 && !vb2) throw PrecisionError("gmatrix: singular to precision");
  bool swap = false;
  if (!vb2)
    swap = true;
  else if (vb1 && *vb1 < *vb2)
    swap = true;
  if (swap) {
    std::swap(alpha1, alpha2);
    std::swap(beta1, beta2);
  }
  // clear the bottom-left entry: col1 -= col2 * (beta1/beta2); exact zero
  FElem qd = beta1.div(beta2);
  FElem alpha1p = alpha1.sub(alpha2.mul(qd));
  const int mp = alpha1p.valuation() - beta2.valuation();
  FElem up = alpha2.div(beta2);
  if (up.hi() < mp)
    throw PrecisionError("gmatrix: insufficient precision for image vertex");
  return Vertex(mp, up);
}

Edge GMatrix::act(const Edge& e) const { return Edge(act(e.a), act(e.b)); }

std::string GMatrix::to_string() const {
  return "[" + a_.to_string() + " " + b_.to_string() + "; " + c_.to_string() +
         " " + d_.to_string() + "]";
}

// ----------------------------------------------------------- TreeWindow

TreeWindow TreeWindow::symmetric(const LocalField* K, int D, int denom_bound) {
  TreeWindow W;
  W.mode_ = Mode::symmetric;
  W.D_ = D;
  W.B_ = denom_bound;
  W.K_ = K;
  W.xplus_ = Vertex::base_plus(K);
  W.xminus_ = Vertex::base_minus(K);
  std::deque<int> queue;
  auto push = [&](const Vertex& v, int shell, int par) {
    const auto k = v.key();
    if (W.ids_.count(k)) return W.ids_[k];
    const int id = static_cast<int>(W.verts_.size());
    W.ids_[k] = id;
    W.verts_.push_back(v);
    W.shell_.push_back(shell);
    W.parent_.push_back(par);
    W.children_.emplace_back();
    W.adj_.emplace_back();
    queue.push_back(id);
    return id;
  };
  push(W.xplus_, 0, -1);
  push(W.xminus_, 0, -1);
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    if (W.shell_[id] >= D) continue;
    const Vertex v = W.verts_[id];
    for (const Vertex& nb : neighbors(v, denom_bound)) {
      const auto k = nb.key();
      auto it = W.ids_.find(k);
      int nid;
      if (it == W.ids_.end()) {
        nid = push(nb, W.shell_[id] + 1, id);
        W.children_[id].push_back(nid);
      } else {
        nid = it->second;
      }
    }
  }
  for (int id = 0; id < W.size(); ++id) {
    const Vertex v = W.verts_[id];
    for (const Vertex& nb : neighbors(v, denom_bound)) {
      auto it = W.ids_.find(nb.key());
      if (it != W.ids_.end()) W.adj_[id].push_back(it->second);
    }
    std::sort(W.adj_[id].begin(), W.adj_[id].end());
    std::sort(W.children_[id].begin(), W.children_[id].end());
  }
  W.index_edges();
  return W;
}

TreeWindow TreeWindow::forward(const LocalField* K, const Vertex& root, int D,
                               int denom_bound) {
  TreeWindow W;
  W.mode_ = Mode::forward;
  W.D_ = D;
  W.B_ = denom_bound;
  W.K_ = K;
  W.xplus_ = Vertex::base_plus(K);
  W.xminus_ = Vertex::base_minus(K);
  std::deque<int> queue;
  auto push = [&](const Vertex& v, int shell, int par) {
    const auto k = v.key();
    const int id = static_cast<int>(W.verts_.size());
    W.ids_[k] = id;
    W.verts_.push_back(v);
    W.shell_.push_back(shell);
    W.parent_.push_back(par);
    W.children_.emplace_back();
    W.adj_.emplace_back();
    queue.push_back(id);
    return id;
  };
  push(root, 0, -1);
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    if (W.shell_[id] >= D) continue;
    for (const Vertex& ch : children_vertices(W.verts_[id], denom_bound)) {
      const int nid = push(ch, W.shell_[id] + 1, id);
      W.children_[id].push_back(nid);
    }
  }
  for (int id = 0; id < W.size(); ++id) {
    if (W.parent_[id] >= 0) W.adj_[id].push_back(W.parent_[id]);
    for (int c : W.children_[id]) W.adj_[id].push_back(c);
    std::sort(W.adj_[id].begin(), W.adj_[id].end());
  }
  W.index_edges();
  return W;
}

void TreeWindow::index_edges() {
  for (int id = 0; id < size(); ++id)
    for (int nb : adj_[id]) {
      if (nb <= id) continue;
      Edge e(verts_[id], verts_[nb]);
      if (edge_ids_.count(e.key())) continue;
      edge_ids_[e.key()] = static_cast<int>(edges_.size());
      edges_.push_back(e);
      edge_vids_.push_back({id, nb});
    }
}

std::optional<int> TreeWindow::id_of(const Vertex& v) const {
  auto it = ids_.find(v.key());
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

int TreeWindow::require_id(const Vertex& v) const {
  auto id = id_of(v);
  if (!id) throw Error("window: vertex outside window: " + v.key());
  return *id;
}

int TreeWindow::edge_id(const Edge& e) const {
  auto it = edge_ids_.find(e.key());
  if (it == edge_ids_.end()) throw Error("window: edge outside window");
  return it->second;
}

std::vector<int> TreeWindow::ball_ids(int id, int r) const {
  std::vector<int> dist(size(), -1);
  std::deque<int> q{id};
  dist[id] = 0;
  std::vector<int> out{id};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (dist[x] >= r) continue;
    for (int nb : adj_[x])
      if (dist[nb] < 0) {
        dist[nb] = dist[x] + 1;
        out.push_back(nb);
        q.push_back(nb);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> TreeWindow::ball_ids_edge(int eid, int r) const {
  auto [x, y] = edge_vids_[eid];
  auto bx = ball_ids(x, r), by = ball_ids(y, r);
  std::vector<int> out;
  std::set_union(bx.begin(), bx.end(), by.begin(), by.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<int> TreeWindow::forward_ball_ids(int id, int r) const {
  std::vector<int> out{id};
  std::deque<std::pair<int, int>> q{{id, 0}};
  while (!q.empty()) {
    auto [x, d] = q.front();
    q.pop_front();
    if (d >= r) continue;
    for (int c : children_[x]) {
      out.push_back(c);
      q.push_back({c, d + 1});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool TreeWindow::ball_inside_vertex(int id, int r) const {
  return shell_[id] + r <= D_;
}

bool TreeWindow::ball_inside_edge(int eid, int r) const {
  auto [x, y] = edge_vids_[eid];
  return std::max(shell_[x], shell_[y]) + r <= D_;
}

}  // namespace btlab
