#include "qha/algebra.hpp"

#include <sstream>

namespace qha {

namespace {

std::vector<AlgebraPtr> flat_legs(const AlgebraPtr& a) {
  if (a->factors().empty()) return {a};
  std::vector<AlgebraPtr> out;
  for (const auto& f : a->factors()) {
    auto sub = flat_legs(f);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

} // namespace

AlgebraPtr BasedAlgebra::make(Field f, std::vector<std::string> labels, const std::vector<MultTriple>& mult,
                              CoordVector unit) {
  auto a = std::make_shared<BasedAlgebra>();
  a->field_ = f;
  a->dim_ = labels.size();
  if (a->dim_ == 0) throw DimensionMismatch("algebra dimension must be positive");
  a->labels_ = std::move(labels);
  if (unit.dim() != a->dim_) throw DimensionMismatch("unit dim != algebra dim");
  a->unit_ = std::move(unit);
  a->mult_.assign(a->dim_, std::vector<SparseVec>(a->dim_));
  for (const auto& t : mult) {
    if (t.i >= a->dim_ || t.j >= a->dim_ || t.k >= a->dim_)
      throw DimensionMismatch("structure constant index out of range");
    if (!t.c.is_zero()) a->mult_[t.i][t.j].emplace_back(t.k, t.c);
  }
  return a;
}

AlgebraPtr BasedAlgebra::ground(Field f) {
  CoordVector u(f, 1);
  u[0] = Scalar::one(f);
  return make(f, {"1"}, {{0, 0, 0, Scalar::one(f)}}, u);
}

SparseVec BasedAlgebra::basis_product(std::size_t i, std::size_t j) const {
  if (factors_.empty()) return mult_[i][j];
  // legwise product, left factor major
  const auto& A = factors_[0];
  const auto& B = factors_[1];
  const std::size_t nb = B->dim();
  SparseVec pa = A->basis_product(i / nb, j / nb);
  SparseVec pb = B->basis_product(i % nb, j % nb);
  SparseVec out;
  out.reserve(pa.size() * pb.size());
  for (const auto& [ka, ca] : pa)
    for (const auto& [kb, cb] : pb) out.emplace_back(ka * nb + kb, ca * cb);
  return out;
}

std::vector<MultTriple> BasedAlgebra::triples() const {
  std::vector<MultTriple> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (const auto& [k, c] : basis_product(i, j)) out.push_back({i, j, k, c});
  return out;
}

bool BasedAlgebra::same_as(const BasedAlgebra& o) const {
  return this == &o || (dim_ == o.dim_ && field_ == o.field_ && unit_ == o.unit_);
}

AlgebraPtr tensor_algebra(AlgebraPtr a, AlgebraPtr b) {
  if (!(a->field() == b->field())) throw FieldError("tensor_algebra: mixed fields");
  auto t = std::make_shared<BasedAlgebra>();
  t->field_ = a->field();
  t->dim_ = a->dim() * b->dim();
  t->labels_.reserve(t->dim_);
  for (const auto& la : a->basis_labels())
    for (const auto& lb : b->basis_labels()) t->labels_.push_back(la + "⊗" + lb);
  t->unit_ = kron(a->unit(), b->unit());
  t->factors_ = {std::move(a), std::move(b)};
  return t;
}

AlgebraPtr tensor_power(AlgebraPtr a, std::size_t k) {
  if (k == 0) return BasedAlgebra::ground(a->field());
  AlgebraPtr t = a;
  for (std::size_t i = 1; i < k; ++i) t = tensor_algebra(t, a);
  return t;
}

AlgebraElement::AlgebraElement(AlgebraPtr alg, CoordVector coords) : alg_(std::move(alg)), coords_(std::move(coords)) {
  if (coords_.dim() != alg_->dim()) throw DimensionMismatch("element coords dim != algebra dim");
}

AlgebraElement AlgebraElement::zero(AlgebraPtr alg) {
  CoordVector c(alg->field(), alg->dim());
  return AlgebraElement(std::move(alg), std::move(c));
}

AlgebraElement AlgebraElement::basis(AlgebraPtr alg, std::size_t i) {
  CoordVector c(alg->field(), alg->dim());
  c[i] = Scalar::one(alg->field());
  return AlgebraElement(std::move(alg), std::move(c));
}

AlgebraElement AlgebraElement::unit(AlgebraPtr alg) {
  CoordVector c = alg->unit();
  return AlgebraElement(std::move(alg), std::move(c));
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (!alg_->same_as(*o.alg_)) throw DimensionMismatch("algebra mismatch in addition");
  coords_ += o.coords_;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (!alg_->same_as(*o.alg_)) throw DimensionMismatch("algebra mismatch in subtraction");
  coords_ -= o.coords_;
  return *this;
}

std::string AlgebraElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : coords_.terms()) {
    os << (first ? "" : " + ") << c.to_string() << "·" << alg_->basis_labels()[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (!x.algebra()->same_as(*y.algebra())) throw DimensionMismatch("algebra mismatch in multiply");
  const auto& alg = x.algebra();
  CoordVector out(alg->field(), alg->dim());
  for (const auto& [i, ci] : x.coords().terms())
    for (const auto& [j, cj] : y.coords().terms()) {
      Scalar c = ci * cj;
      for (const auto& [k, ck] : alg->basis_product(i, j)) out[k] += c * ck;
    }
  return AlgebraElement(alg, std::move(out));
}

AlgebraElement tensor_elem(AlgebraPtr target, const AlgebraElement& x, const AlgebraElement& y) {
  return AlgebraElement(std::move(target), kron(x.coords(), y.coords()));
}

LinearMap left_mult_matrix(const AlgebraElement& x) {
  const auto& alg = x.algebra();
  LinearMap m(alg->field(), alg->dim(), alg->dim());
  for (const auto& [i, ci] : x.coords().terms())
    for (std::size_t j = 0; j < alg->dim(); ++j)
      for (const auto& [k, ck] : alg->basis_product(i, j)) m.at(k, j) += ci * ck;
  return m;
}

VerificationReport verify_associative_unital(const BasedAlgebra& a) {
  VerificationReport rep;
  AlgebraPtr self(&a, [](const BasedAlgebra*) {}); // non-owning view
  const std::size_t n = a.dim();
  auto elem = [&](std::size_t i) { return AlgebraElement::basis(self, i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      AlgebraElement eij = multiply(elem(i), elem(j));
      for (std::size_t k = 0; k < n; ++k) {
        AlgebraElement lhs = multiply(eij, elem(k));
        AlgebraElement rhs = multiply(elem(i), multiply(elem(j), elem(k)));
        if (lhs != rhs)
          rep.add("associativity", "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", k=" + std::to_string(k) + ")",
                  lhs.coords().to_string(), rhs.coords().to_string());
      }
    }
  AlgebraElement one = AlgebraElement::unit(self);
  for (std::size_t i = 0; i < n; ++i) {
    AlgebraElement ei = elem(i);
    AlgebraElement l = multiply(one, ei), r = multiply(ei, one);
    if (l != ei) rep.add("unit-left", "(i=" + std::to_string(i) + ")", l.coords().to_string(), ei.coords().to_string());
    if (r != ei) rep.add("unit-right", "(i=" + std::to_string(i) + ")", r.coords().to_string(), ei.coords().to_string());
  }
  return rep;
}

std::optional<AlgebraElement> invert_element(const AlgebraElement& x) {
  const auto& alg = x.algebra();
  LinearMap lx = left_mult_matrix(x);
  auto sol = solve_linear(lx, alg->unit());
  if (!sol) return std::nullopt;
  AlgebraElement y(alg, *sol);
  if (multiply(y, x).coords() != alg->unit()) return std::nullopt;
  if (multiply(x, y).coords() != alg->unit()) return std::nullopt;
  return y;
}

VerificationReport check_algebra_morphism(const LinearMap& f, const BasedAlgebra& a, const BasedAlgebra& b) {
  if (f.src_dim() != a.dim() || f.dst_dim() != b.dim())
    throw DimensionMismatch("check_algebra_morphism: shape mismatch");
  VerificationReport rep;
  AlgebraPtr pa(&a, [](const BasedAlgebra*) {});
  AlgebraPtr pb(&b, [](const BasedAlgebra*) {});
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      CoordVector lhs(b.field(), b.dim());
      for (const auto& [k, c] : a.basis_product(i, j)) lhs += c * f.column(k);
      AlgebraElement rhs = multiply(AlgebraElement(pb, f.column(i)), AlgebraElement(pb, f.column(j)));
      if (lhs != rhs.coords())
        rep.add("algebra-morphism", "(i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")", lhs.to_string(),
                rhs.coords().to_string());
    }
  CoordVector f1 = f.apply(a.unit());
  if (f1 != b.unit()) rep.add("algebra-morphism-unit", "(1)", f1.to_string(), b.unit().to_string());
  return rep;
}

std::vector<std::size_t> leg_dims(const BasedAlgebra& a) {
  AlgebraPtr self(&a, [](const BasedAlgebra*) {});
  std::vector<std::size_t> dims;
  for (const auto& l : flat_legs(self)) dims.push_back(l->dim());
  return dims;
}

AlgebraElement embed(const AlgebraElement& x, std::size_t at, AlgebraPtr target) {
  auto tlegs = flat_legs(target);
  auto xlegs = flat_legs(x.algebra());
  if (at + xlegs.size() > tlegs.size()) throw DimensionMismatch("embed: legs out of range");
  for (std::size_t k = 0; k < xlegs.size(); ++k)
    if (xlegs[k]->dim() != tlegs[at + k]->dim()) throw DimensionMismatch("embed: leg dims differ");
  CoordVector c(target->field(), 1);
  c[0] = Scalar::one(target->field());
  for (std::size_t k = 0; k < at; ++k) c = kron(c, tlegs[k]->unit());
  c = kron(c, x.coords());
  for (std::size_t k = at + xlegs.size(); k < tlegs.size(); ++k) c = kron(c, tlegs[k]->unit());
  return AlgebraElement(std::move(target), std::move(c));
}

AlgebraElement apply_map(AlgebraPtr target, const LinearMap& f, const AlgebraElement& x) {
  return AlgebraElement(std::move(target), f.apply(x.coords()));
}

} // namespace qha
