#include "tamehall/quiver.hpp"

#include <algorithm>
#include <boost/rational.hpp>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

namespace tamehall {

// ---------------------------------------------------------------------------
// DimVector

int DimVector::total() const noexcept { return std::accumulate(v_.begin(), v_.end(), 0); }

int DimVector::max() const noexcept { return v_.empty() ? 0 : *std::max_element(v_.begin(), v_.end()); }

bool DimVector::is_zero() const noexcept {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

bool DimVector::nonnegative() const noexcept {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x >= 0; });
}

bool DimVector::leq(const DimVector& o) const noexcept {
  for (int i = 0; i < size(); ++i)
    if (v_[i] > o.v_[i]) return false;
  return true;
}

DimVector DimVector::operator+(const DimVector& o) const {
  DimVector r = *this;
  for (int i = 0; i < size(); ++i) r.v_[i] += o.v_[i];
  return r;
}

DimVector DimVector::operator-(const DimVector& o) const {
  DimVector r = *this;
  for (int i = 0; i < size(); ++i) r.v_[i] -= o.v_[i];
  return r;
}

DimVector DimVector::operator*(int s) const {
  DimVector r = *this;
  for (auto& x : r.v_) x *= s;
  return r;
}

std::string DimVector::str() const {
  std::string s = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v_[i]);
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const DimVector& x) { return os << x.str(); }

// ---------------------------------------------------------------------------
// Quiver

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows, std::string label)
    : n_(vertex_count), arrows_(std::move(arrows)), label_(std::move(label)) {
  using C = QuiverError::Code;
  if (n_ < 1) throw QuiverError(C::VertexRange, "a quiver needs at least one vertex");
  in_.assign(n_, {});
  out_.assign(n_, {});
  for (int a = 0; a < arrow_count(); ++a) {
    const auto [s, t] = arrows_[a];
    if (s < 0 || s >= n_ || t < 0 || t >= n_)
      throw QuiverError(C::VertexRange, "arrow endpoint out of range");
    if (s == t) throw QuiverError(C::Loop, "loop at vertex " + std::to_string(s + 1));
    out_[s].push_back(a);
    in_[t].push_back(a);
  }

  // Kahn's algorithm: every vertex gets removed iff there is no directed cycle.
  std::vector<int> indegree(n_);
  for (int v = 0; v < n_; ++v) indegree[v] = static_cast<int>(in_[v].size());
  std::deque<int> ready;
  for (int v = 0; v < n_; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  int removed = 0;
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop_front();
    ++removed;
    for (int a : out_[v])
      if (--indegree[arrows_[a].target] == 0) ready.push_back(arrows_[a].target);
  }
  if (removed != n_) throw QuiverError(C::Cycle, "quiver has a directed cycle");

  std::vector<bool> seen(n_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : neighbours(v))
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n_) throw QuiverError(C::Disconnected, "underlying graph is not connected");
}

bool Quiver::is_sink(int v) const { return out_.at(v).empty(); }
bool Quiver::is_source(int v) const { return in_.at(v).empty(); }

std::vector<int> Quiver::sinks() const {
  std::vector<int> s;
  for (int v = 0; v < n_; ++v)
    if (is_sink(v)) s.push_back(v);
  return s;
}

int Quiver::edge_multiplicity(int a, int b) const {
  int m = 0;
  for (const auto& arr : arrows_)
    if ((arr.source == a && arr.target == b) || (arr.source == b && arr.target == a)) ++m;
  return m;
}

std::vector<int> Quiver::neighbours(int v) const {
  std::vector<int> nb;
  for (int a : out_[v]) nb.push_back(arrows_[a].target);
  for (int a : in_[v]) nb.push_back(arrows_[a].source);
  std::sort(nb.begin(), nb.end());
  nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  return nb;
}

// ---------------------------------------------------------------------------
// Text format and presets

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<int> to_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

struct TreeSpec {
  int n;
  std::vector<std::pair<int, int>> edges;  // 0-based
  int sink;
};

TreeSpec path_with_branch(int path_len, int attach_at, int extra) {
  // path 0..path_len-1, plus `extra` as a single vertex attached at `attach_at`
  TreeSpec t{path_len + (extra ? 1 : 0), {}, 0};
  for (int v = 0; v + 1 < path_len; ++v) t.edges.emplace_back(v, v + 1);
  if (extra) t.edges.emplace_back(attach_at, path_len);
  return t;
}

Quiver tree_toward(const TreeSpec& t, std::string label) {
  // Orient each edge from the endpoint farther from the sink to the nearer one.
  std::vector<std::vector<int>> adj(t.n);
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> dist(t.n, -1);
  std::deque<int> queue{t.sink};
  dist[t.sink] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  std::vector<Arrow> arrows;
  for (auto [a, b] : t.edges) arrows.push_back(dist[a] > dist[b] ? Arrow{a, b} : Arrow{b, a});
  return Quiver(t.n, std::move(arrows), std::move(label));
}

TreeSpec preset_tree(std::string_view name) {
  using C = QuiverError::Code;
  const auto colon = name.find(':');
  const std::string_view head = name.substr(0, colon);
  std::optional<int> param;
  if (colon != std::string_view::npos) {
    param = to_int(name.substr(colon + 1));
    if (!param) throw QuiverError(C::Syntax, "bad preset parameter in '" + std::string(name) + "'");
  }
  if (head == "dtilde") {
    if (!param || *param < 4) throw QuiverError(C::Syntax, "dtilde:<n> needs n >= 4");
    const int n = *param;
    if (n == 4) return TreeSpec{5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}, 4};
    // leaves 1,2 on vertex 3; path 3..n-1; leaves n, n+1 on vertex n-1 (1-based)
    TreeSpec t{n + 1, {{0, 2}, {1, 2}}, 2};
    for (int v = 2; v < n - 2; ++v) t.edges.emplace_back(v, v + 1);
    t.edges.emplace_back(n - 2, n - 1);
    t.edges.emplace_back(n - 2, n);
    return t;
  }
  if (head == "e6tilde" && !param) return TreeSpec{7, {{0, 1}, {1, 6}, {2, 3}, {3, 6}, {4, 5}, {5, 6}}, 6};
  if (head == "e7tilde" && !param) {
    TreeSpec t = path_with_branch(7, 3, 1);
    t.sink = 3;
    return t;
  }
  if (head == "e8tilde" && !param) {
    TreeSpec t = path_with_branch(8, 5, 1);
    t.sink = 5;
    return t;
  }
  if (head == "a") {
    if (!param || *param < 1) throw QuiverError(C::Syntax, "a:<n> needs n >= 1");
    TreeSpec t = path_with_branch(*param, 0, 0);
    t.sink = *param - 1;
    return t;
  }
  if (head == "d") {
    if (!param || *param < 4) throw QuiverError(C::Syntax, "d:<n> needs n >= 4");
    TreeSpec t{*param, {{0, 2}, {1, 2}}, 2};
    for (int v = 2; v + 1 < *param; ++v) t.edges.emplace_back(v, v + 1);
    return t;
  }
  if (head == "e") {
    if (!param || *param < 6 || *param > 8) throw QuiverError(C::Syntax, "e:<n> needs n in {6,7,8}");
    TreeSpec t = path_with_branch(*param - 1, 2, 1);
    t.sink = 2;
    return t;
  }
  throw QuiverError(C::Syntax, "unknown preset '" + std::string(name) + "'");
}

}  // namespace

Quiver parse_quiver(std::string_view text) {
  using C = QuiverError::Code;
  std::optional<int> n;
  std::vector<std::pair<std::pair<int, int>, int>> raw;  // (s,t), line
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto tok = split_ws(line);
    if (tok[0] == "vertices") {
      if (tok.size() != 2) throw QuiverError(C::Syntax, "expected 'vertices <n>'", line_no);
      if (n) throw QuiverError(C::Syntax, "duplicate 'vertices' line", line_no);
      n = to_int(tok[1]);
      if (!n || *n < 1) throw QuiverError(C::Syntax, "vertex count must be a positive integer", line_no);
    } else if (tok[0] == "arrow") {
      if (tok.size() != 3) throw QuiverError(C::Syntax, "expected 'arrow <s> <t>'", line_no);
      auto s = to_int(tok[1]);
      auto t = to_int(tok[2]);
      if (!s || !t) throw QuiverError(C::Syntax, "arrow endpoints must be integers", line_no);
      raw.push_back({{*s, *t}, line_no});
    } else {
      throw QuiverError(C::Syntax, "unknown directive '" + std::string(tok[0]) + "'", line_no);
    }
    if (end == text.size()) break;
  }
  if (!n) throw QuiverError(C::Syntax, "missing 'vertices <n>' line");
  std::vector<Arrow> arrows;
  for (const auto& [st, ln] : raw) {
    const auto [s, t] = st;
    if (s < 1 || s > *n || t < 1 || t > *n) throw QuiverError(C::VertexRange, "arrow endpoint out of range", ln);
    if (s == t) throw QuiverError(C::Loop, "loop at vertex " + std::to_string(s), ln);
    arrows.push_back({s - 1, t - 1});
  }
  return Quiver(*n, std::move(arrows));
}

std::string format_quiver(const Quiver& q) {
  std::ostringstream os;
  if (!q.label().empty()) os << "# " << q.label() << "\n";
  os << "vertices " << q.vertex_count() << "\n";
  for (const auto& a : q.arrows()) os << "arrow " << a.source + 1 << " " << a.target + 1 << "\n";
  return os.str();
}

Quiver preset_quiver(std::string_view name) {
  if (name == "kronecker") return Quiver(2, {{0, 1}, {0, 1}}, "kronecker");
  return tree_toward(preset_tree(name), std::string(name));
}

int preset_sink(std::string_view name) {
  if (name == "kronecker") return 1;
  return preset_tree(name).sink;
}

Quiver orient_toward(const Quiver& tree, int sink) {
  // Parallel arrows are allowed (Kronecker); the underlying simple graph must be a tree.
  int distinct_edges = 0;
  for (int v = 0; v < tree.vertex_count(); ++v) distinct_edges += static_cast<int>(tree.neighbours(v).size());
  if (distinct_edges / 2 != tree.vertex_count() - 1)
    throw QuiverError(QuiverError::Code::NotTree, "reorientation needs a tree");
  if (sink < 0 || sink >= tree.vertex_count()) throw QuiverError(QuiverError::Code::VertexRange, "sink out of range");
  TreeSpec t{tree.vertex_count(), {}, sink};
  for (const auto& a : tree.arrows()) t.edges.emplace_back(a.source, a.target);
  return tree_toward(t, tree.label());
}

// ---------------------------------------------------------------------------
// Classification

bool GraphClass::affine() const noexcept {
  return kind == GraphKind::AffineA || kind == GraphKind::AffineD || kind == GraphKind::AffineE6 ||
         kind == GraphKind::AffineE7 || kind == GraphKind::AffineE8;
}

bool GraphClass::dynkin() const noexcept {
  return kind == GraphKind::A || kind == GraphKind::D || kind == GraphKind::E6 || kind == GraphKind::E7 ||
         kind == GraphKind::E8;
}

std::string GraphClass::name() const {
  switch (kind) {
    case GraphKind::AffineA: return "A~" + std::to_string(rank);
    case GraphKind::AffineD: return "D~" + std::to_string(rank);
    case GraphKind::AffineE6: return "E~6";
    case GraphKind::AffineE7: return "E~7";
    case GraphKind::AffineE8: return "E~8";
    case GraphKind::A: return "A_" + std::to_string(rank);
    case GraphKind::D: return "D_" + std::to_string(rank);
    case GraphKind::E6: return "E_6";
    case GraphKind::E7: return "E_7";
    case GraphKind::E8: return "E_8";
    case GraphKind::Other: return "other";
  }
  return "other";
}

GraphClass classify_graph(const Quiver& q) {
  const int n = q.vertex_count();
  const int m = q.arrow_count();
  std::vector<int> degree(n, 0);
  for (const auto& a : q.arrows()) {
    ++degree[a.source];
    ++degree[a.target];
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (q.edge_multiplicity(a, b) > 1)
        return (n == 2 && m == 2) ? GraphClass{GraphKind::AffineA, 1} : GraphClass{};

  if (m == n) {
    if (std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; })) return {GraphKind::AffineA, n - 1};
    return {};
  }
  if (m != n - 1) return {};

  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (degree[v] > 4) return {};
    if (degree[v] >= 3) branch.push_back(v);
  }
  if (branch.empty()) return {GraphKind::A, n};
  if (branch.size() == 1 && degree[branch[0]] == 4) {
    return n == 5 ? GraphClass{GraphKind::AffineD, 4} : GraphClass{};
  }
  if (branch.size() == 1) {
    const int c = branch[0];
    std::vector<int> arms;
    for (int start : q.neighbours(c)) {
      int len = 1, prev = c, cur = start;
      while (degree[cur] == 2) {
        for (int w : q.neighbours(cur))
          if (w != prev) {
            prev = cur;
            cur = w;
            break;
          }
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    const int a = arms[0], b = arms[1], d = arms[2];
    if (a == 1 && b == 1) return {GraphKind::D, d + 3};
    if (a == 1 && b == 2 && d == 2) return {GraphKind::E6, 6};
    if (a == 1 && b == 2 && d == 3) return {GraphKind::E7, 7};
    if (a == 1 && b == 2 && d == 4) return {GraphKind::E8, 8};
    if (a == 2 && b == 2 && d == 2) return {GraphKind::AffineE6, 6};
    if (a == 1 && b == 3 && d == 3) return {GraphKind::AffineE7, 7};
    if (a == 1 && b == 2 && d == 5) return {GraphKind::AffineE8, 8};
    return {};
  }
  if (branch.size() == 2 && degree[branch[0]] == 3 && degree[branch[1]] == 3) {
    for (int c : branch) {
      int leaves = 0;
      for (int w : q.neighbours(c))
        if (degree[w] == 1) ++leaves;
      if (leaves != 2) return {};
    }
    return {GraphKind::AffineD, n - 1};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Forms and roots

int euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  if (a.size() != q.vertex_count() || b.size() != q.vertex_count())
    throw InvalidInput("dimension vector length does not match the quiver");
  int v = 0;
  for (int i = 0; i < a.size(); ++i) v += a[i] * b[i];
  for (const auto& arr : q.arrows()) v -= a[arr.source] * b[arr.target];
  return v;
}

int tits_form(const Quiver& q, const DimVector& a) { return euler_form(q, a, a); }

DimVector radical_delta(const Quiver& q) {
  if (!classify_graph(q).affine())
    throw QuiverError(QuiverError::Code::NotAffine, "radical vector requested for a non-affine quiver");
  using R = boost::rational<std::int64_t>;
  const int n = q.vertex_count();
  std::vector<std::vector<R>> s(n, std::vector<R>(n, R(0)));
  for (int i = 0; i < n; ++i) s[i][i] = 2;
  for (const auto& a : q.arrows()) {
    s[a.source][a.target] -= 1;
    s[a.target][a.source] -= 1;
  }
  // Reduced row echelon form over Q.
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < n && row < n; ++c) {
    int p = row;
    while (p < n && s[p][c].numerator() == 0) ++p;
    if (p == n) continue;
    std::swap(s[p], s[row]);
    const R inv = R(1) / s[row][c];
    for (auto& x : s[row]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || s[r][c].numerator() == 0) continue;
      const R f = s[r][c];
      for (int k = 0; k < n; ++k) s[r][k] -= f * s[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  if (static_cast<int>(pivots.size()) != n - 1)
    throw QuiverError(QuiverError::Code::NotAffine, "symmetrized Euler matrix does not have a one-dimensional kernel");
  int free = 0;
  while (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) ++free;
  std::vector<R> v(n, R(0));
  v[free] = 1;
  for (int r = 0; r < static_cast<int>(pivots.size()); ++r) v[pivots[r]] = -s[r][free];
  std::int64_t lcm = 1;
  for (const auto& x : v) lcm = std::lcm(lcm, x.denominator());
  std::int64_t g = 0;
  std::vector<std::int64_t> ints(n);
  for (int i = 0; i < n; ++i) {
    ints[i] = (v[i] * lcm).numerator();
    g = std::gcd(g, ints[i] < 0 ? -ints[i] : ints[i]);
  }
  DimVector delta(n);
  const int sign = ints[free] < 0 ? -1 : 1;
  for (int i = 0; i < n; ++i) delta[i] = static_cast<int>(sign * ints[i] / g);
  for (int i = 0; i < n; ++i)
    if (delta[i] <= 0) throw QuiverError(QuiverError::Code::NotAffine, "radical vector is not sincere");
  return delta;
}

int defect(const Quiver& q, const DimVector& x) { return euler_form(q, radical_delta(q), x); }

std::vector<RealRoot> positive_real_roots(const Quiver& q, const DimVector& bound) {
  const int n = q.vertex_count();
  if (bound.size() != n || !bound.nonnegative()) throw InvalidInput("root bound must be a nonnegative vector");
  std::optional<DimVector> delta;
  if (classify_graph(q).affine()) delta = radical_delta(q);
  std::vector<RealRoot> roots;
  DimVector x(n);
  while (true) {
    int i = n - 1;
    while (i >= 0 && x[i] == bound[i]) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
    if (tits_form(q, x) == 1) {
      RealRoot r{x, std::nullopt};
      if (delta) r.defect = euler_form(q, *delta, x);
      roots.push_back(std::move(r));
    }
  }
  return roots;
}

// ---------------------------------------------------------------------------
// Reflections

Quiver sigma_reverse(const Quiver& q, int v) {
  if (v < 0 || v >= q.vertex_count()) throw QuiverError(QuiverError::Code::VertexRange, "vertex out of range");
  std::vector<Arrow> arrows = q.arrows();
  for (auto& a : arrows)
    if (a.source == v || a.target == v) std::swap(a.source, a.target);
  return Quiver(q.vertex_count(), std::move(arrows), q.label());
}

std::vector<int> admissible_sink_order(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> order;
  std::vector<bool> used(n, false);
  // Track outgoing-arrow counts under successive reversals instead of rebuilding quivers.
  std::vector<Arrow> arrows = q.arrows();
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (used[v]) continue;
      bool sink = true;
      for (const auto& a : arrows)
        if (a.source == v) {
          sink = false;
          break;
        }
      if (sink) pick = v;
    }
    order.push_back(pick);
    used[pick] = true;
    for (auto& a : arrows)
      if (a.source == pick || a.target == pick) std::swap(a.source, a.target);
  }
  return order;
}

Quiver apply_sink_word(const Quiver& q, const std::vector<int>& word) {
  Quiver cur = q;
  for (int v : word) {
    if (!cur.is_sink(v))
      throw QuiverError(QuiverError::Code::NotSink, "vertex " + std::to_string(v + 1) + " is not a sink");
    cur = sigma_reverse(cur, v);
  }
  return cur;
}

std::vector<int> sink_sequence_to(const Quiver& q, int sink) {
  using C = QuiverError::Code;
  if (!q.is_tree()) throw QuiverError(C::NotTree, "sink sequences are defined for trees");
  if (sink < 0 || sink >= q.vertex_count()) throw QuiverError(C::VertexRange, "vertex out of range");
  if (!q.is_sink(sink)) throw QuiverError(C::NotSink, "vertex " + std::to_string(sink + 1) + " is not a sink");
  const int n = q.vertex_count();
  std::vector<int> dist(n, -1);
  std::deque<int> queue{sink};
  dist[sink] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : q.neighbours(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }

  std::vector<int> word;
  Quiver cur = q;
  while (true) {
    int bad = -1;
    for (int a = 0; a < cur.arrow_count() && bad < 0; ++a)
      if (dist[cur.arrows()[a].target] > dist[cur.arrows()[a].source]) bad = a;
    if (bad < 0) break;
    // The far side of the wrong edge: vertices whose path to the sink passes through its head.
    const int head = cur.arrows()[bad].target;
    const int tail = cur.arrows()[bad].source;
    std::vector<bool> in_part(n, false);
    std::vector<int> stack{head};
    in_part[head] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : cur.neighbours(v))
        if (w != tail && !in_part[w]) {
          in_part[w] = true;
          stack.push_back(w);
        }
    }
    int remaining = static_cast<int>(std::count(in_part.begin(), in_part.end(), true));
    while (remaining > 0) {
      int pick = -1;
      for (int v = 0; v < n && pick < 0; ++v)
        if (in_part[v] && cur.is_sink(v)) pick = v;
      word.push_back(pick);
      in_part[pick] = false;
      --remaining;
      cur = sigma_reverse(cur, pick);
    }
  }
  return word;
}

DimVector reflect_dimvec(const Quiver& q, int v, const DimVector& x) {
  if (x.size() != q.vertex_count()) throw InvalidInput("dimension vector length does not match the quiver");
  if (v < 0 || v >= q.vertex_count()) throw QuiverError(QuiverError::Code::VertexRange, "vertex out of range");
  DimVector y = x;
  int s = -x[v];
  for (const auto& a : q.arrows()) {
    if (a.source == v) s += x[a.target];
    if (a.target == v) s += x[a.source];
  }
  y[v] = s;
  return y;
}

SimpleReduction reflect_to_simple(const Quiver& q, const DimVector& x) {
  if (tits_form(q, x) != 1 || !x.nonnegative() || x.is_zero())
    throw InvalidInput("reflect_to_simple needs a positive real root, got " + x.str());
  const int n = q.vertex_count();
  // Dynkin quivers: every root is preprojective; the Coxeter number bounds the sweeps.
  const bool affine = classify_graph(q).affine();
  const DimVector delta = affine ? radical_delta(q) : DimVector(n);
  if (affine && euler_form(q, delta, x) >= 0) throw InvalidInput(x.str() + " is not a preprojective root (defect >= 0)");
  const long bound = static_cast<long>(n) * (x.total() + (affine ? delta.total() : 30));
  const auto order = admissible_sink_order(q);

  auto unit_at = [](const DimVector& y) {
    int where = -1;
    for (int i = 0; i < y.size(); ++i) {
      if (y[i] == 0) continue;
      if (y[i] != 1 || where >= 0) return -1;
      where = i;
    }
    return where;
  };

  SimpleReduction out{-1, {}, q};
  DimVector y = x;
  for (long step = 0;; ++step) {
    if (int u = unit_at(y); u >= 0 && out.final_quiver.is_sink(u)) {
      out.vertex = u;
      if (affine && delta[u] != -euler_form(q, delta, x))
        throw VerificationFailure("reflect_to_simple ended at a vertex whose delta entry differs from -defect");
      return out;
    }
    if (step >= bound) break;
    const int v = order[step % n];
    y = reflect_dimvec(q, v, y);
    out.word.push_back(v);
    out.final_quiver = sigma_reverse(out.final_quiver, v);
    if (!y.nonnegative()) throw InvalidInput(x.str() + " is not a preprojective root");
  }
  throw InvalidInput(x.str() + " did not reach a simple projective within " + std::to_string(bound) + " reflections");
}

// ---------------------------------------------------------------------------
// Integer matrices

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m{n, std::vector<std::int64_t>(static_cast<std::size_t>(n) * n, 0)};
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix m{n, std::vector<std::int64_t>(static_cast<std::size_t>(n) * n, 0)};
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k)
      for (int c = 0; c < n; ++c) m(r, c) += (*this)(r, k) * o(k, c);
  return m;
}

DimVector IntMatrix::apply(const DimVector& x) const {
  DimVector y(n);
  for (int r = 0; r < n; ++r) {
    std::int64_t s = 0;
    for (int c = 0; c < n; ++c) s += (*this)(r, c) * x[c];
    y[r] = static_cast<int>(s);
  }
  return y;
}

IntMatrix cartan_matrix(const Quiver& q) {
  const int n = q.vertex_count();
  IntMatrix c = IntMatrix::identity(n);
  // Topological order: sources first.
  std::vector<int> order = admissible_sink_order(q);
  std::reverse(order.begin(), order.end());
  for (int j = 0; j < n; ++j) {
    std::vector<std::int64_t> paths(n, 0);
    paths[j] = 1;
    for (int v : order)
      for (int a : q.out_arrows(v)) paths[q.arrows()[a].target] += paths[v];
    for (int i = 0; i < n; ++i) c(i, j) = paths[i];
  }
  return c;
}

IntMatrix reflection_matrix(const Quiver& q, int v) {
  const int n = q.vertex_count();
  IntMatrix r = IntMatrix::identity(n);
  r(v, v) = -1;
  for (int w = 0; w < n; ++w)
    if (w != v) r(v, w) = q.edge_multiplicity(v, w);
  return r;
}

IntMatrix coxeter_matrix(const Quiver& q) {
  IntMatrix phi = IntMatrix::identity(q.vertex_count());
  for (int v : admissible_sink_order(q)) phi = reflection_matrix(q, v) * phi;
  return phi;
}

IntMatrix coxeter_matrix_inverse(const Quiver& q) {
  IntMatrix phi = IntMatrix::identity(q.vertex_count());
  for (int v : admissible_sink_order(q)) phi = phi * reflection_matrix(q, v);
  return phi;
}

}  // namespace tamehall
