#include "qha/linalg.hpp"

#include <sstream>

namespace qha {

bool CoordVector::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

bool CoordVector::operator==(const CoordVector& o) const {
  if (dim() != o.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

CoordVector& CoordVector::operator+=(const CoordVector& o) {
  if (dim() != o.dim()) throw DimensionMismatch("vector dims differ");
  for (std::size_t i = 0; i < dim(); ++i) c_[i] += o.c_[i];
  return *this;
}

CoordVector& CoordVector::operator-=(const CoordVector& o) {
  if (dim() != o.dim()) throw DimensionMismatch("vector dims differ");
  for (std::size_t i = 0; i < dim(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CoordVector& CoordVector::operator*=(const Scalar& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

std::vector<std::pair<std::size_t, Scalar>> CoordVector::terms() const {
  std::vector<std::pair<std::size_t, Scalar>> t;
  for (std::size_t i = 0; i < dim(); ++i)
    if (!c_[i].is_zero()) t.emplace_back(i, c_[i]);
  return t;
}

std::string CoordVector::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dim(); ++i) os << (i ? ", " : "") << c_[i].to_string();
  os << "]";
  return os.str();
}

LinearMap LinearMap::identity(Field f, std::size_t n) {
  LinearMap m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

LinearMap LinearMap::from_columns(Field f, std::size_t dst, const std::vector<CoordVector>& cols) {
  LinearMap m(f, dst, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].dim() != dst) throw DimensionMismatch("column dim differs from dst_dim");
    for (std::size_t r = 0; r < dst; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

CoordVector LinearMap::apply(const CoordVector& x) const {
  if (x.dim() != src_) throw DimensionMismatch("apply: vector dim != src_dim");
  CoordVector y(field_, dst_);
  for (const auto& [c, v] : x.terms())
    for (std::size_t r = 0; r < dst_; ++r) y[r] += at(r, c) * v;
  return y;
}

CoordVector LinearMap::column(std::size_t c) const {
  CoordVector y(field_, dst_);
  for (std::size_t r = 0; r < dst_; ++r) y[r] = at(r, c);
  return y;
}

LinearMap LinearMap::compose(const LinearMap& g) const {
  if (g.dst_dim() != src_) throw DimensionMismatch("compose: inner dims differ");
  LinearMap h(field_, dst_, g.src_dim());
  for (std::size_t r = 0; r < dst_; ++r)
    for (std::size_t k = 0; k < src_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < g.src_dim(); ++c) h.at(r, c) += at(r, k) * g.at(k, c);
    }
  return h;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
  if (dst_ != o.dst_ || src_ != o.src_) throw DimensionMismatch("map shapes differ");
  LinearMap m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
  return m;
}

bool LinearMap::operator==(const LinearMap& o) const {
  if (dst_ != o.dst_ || src_ != o.src_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

bool LinearMap::is_zero() const {
  for (const auto& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

std::string LinearMap::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < dst_; ++r) {
    os << (r ? "; " : "[");
    for (std::size_t c = 0; c < src_; ++c) os << (c ? " " : "") << at(r, c).to_string();
  }
  os << "]";
  return os.str();
}

namespace {

// Leftmost-pivot reduced row echelon form, in place. Returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < ncols && pr < rows.size(); ++pc) {
    std::size_t sel = pr;
    while (sel < rows.size() && rows[sel][pc].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pr], rows[sel]);
    Scalar inv = rows[pr][pc].inverse();
    for (auto& x : rows[pr]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pr || rows[r][pc].is_zero()) continue;
      Scalar f = rows[r][pc];
      for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= f * rows[pr][c];
    }
    pivots.push_back(pc);
    ++pr;
  }
  return pivots;
}

} // namespace

std::optional<CoordVector> solve_linear(const LinearMap& map, const CoordVector& rhs) {
  if (rhs.dim() != map.dst_dim()) throw DimensionMismatch("solve_linear: rhs dim != dst_dim");
  const Field f = map.field();
  const std::size_t n = map.src_dim(), m = map.dst_dim();
  std::vector<std::vector<Scalar>> rows(m, std::vector<Scalar>(n + 1, Scalar::zero(f)));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = map.at(r, c);
    rows[r][n] = rhs[r];
  }
  auto pivots = rref(rows, n);
  // inconsistent iff some row is (0 ... 0 | nonzero)
  for (std::size_t r = pivots.size(); r < m; ++r)
    if (!rows[r][n].is_zero()) return std::nullopt;
  CoordVector x(f, n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][n];
  return x;
}

std::vector<CoordVector> image_basis(const LinearMap& map) {
  const Field f = map.field();
  const std::size_t n = map.src_dim(), m = map.dst_dim();
  // Row-reduce the transpose: canonical basis of the column space.
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(m, Scalar::zero(f)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < m; ++c) rows[r][c] = map.at(c, r);
  auto pivots = rref(rows, m);
  std::vector<CoordVector> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i)
    basis.emplace_back(f, std::vector<Scalar>(rows[i].begin(), rows[i].end()));
  return basis;
}

std::size_t rank(const LinearMap& map) { return image_basis(map).size(); }

std::optional<LinearMap> invert_map(const LinearMap& map) {
  if (map.src_dim() != map.dst_dim()) return std::nullopt;
  const Field f = map.field();
  const std::size_t n = map.src_dim();
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(2 * n, Scalar::zero(f)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = map.at(r, c);
    rows[r][n + r] = Scalar::one(f);
  }
  auto pivots = rref(rows, n);
  if (pivots.size() != n) return std::nullopt;
  LinearMap inv(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rows[r][n + c];
  return inv;
}

LinearMap kron(const LinearMap& f, const LinearMap& g) {
  if (!(f.field() == g.field())) throw FieldError("kron: mixed fields");
  LinearMap h(f.field(), f.dst_dim() * g.dst_dim(), f.src_dim() * g.src_dim());
  for (std::size_t rf = 0; rf < f.dst_dim(); ++rf)
    for (std::size_t cf = 0; cf < f.src_dim(); ++cf) {
      const Scalar& a = f.at(rf, cf);
      if (a.is_zero()) continue;
      for (std::size_t rg = 0; rg < g.dst_dim(); ++rg)
        for (std::size_t cg = 0; cg < g.src_dim(); ++cg)
          h.at(rf * g.dst_dim() + rg, cf * g.src_dim() + cg) = a * g.at(rg, cg);
    }
  return h;
}

CoordVector kron(const CoordVector& u, const CoordVector& v) {
  CoordVector w(u.field(), u.dim() * v.dim());
  for (const auto& [i, a] : u.terms())
    for (const auto& [j, b] : v.terms()) w[i * v.dim() + j] = a * b;
  return w;
}

std::vector<std::size_t> split_index(std::size_t flat, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = flat % dims[k];
    flat /= dims[k];
  }
  return idx;
}

std::size_t flatten_index(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + idx[k];
  return flat;
}

} // namespace qha
