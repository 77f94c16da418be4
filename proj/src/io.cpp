#include "qha/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qha::io {

using nlohmann::json;

namespace {

constexpr const char* kSchemaVersion = "1";

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": invalid syntax: " + e.what());
  }
  if (!j.is_object()) throw ParseError(path + ": top level must be an object");
  return j;
}

void check_keys(const json& j, const std::vector<std::string>& allowed, const std::string& ctx) {
  for (const auto& [key, _] : j.items()) {
    bool ok = false;
    for (const auto& a : allowed) ok |= (key == a);
    if (!ok) throw ParseError(ctx + ": unknown key \"" + key + "\"");
  }
  for (const auto& a : allowed)
    if (a != "field" && a != "phi_inv" && !j.contains(a)) throw ParseError(ctx + ": missing key \"" + a + "\"");
}

void check_header(const json& j, const std::string& ctx, const std::string& kind) {
  if (!j.contains("schema_version") || !j["schema_version"].is_string() || j["schema_version"] != kSchemaVersion)
    throw ParseError(ctx + ": schema_version must be the string \"" + kSchemaVersion + "\"");
  if (!j.contains("kind") || !j["kind"].is_string() || j["kind"] != kind)
    throw ParseError(ctx + ": expected kind \"" + kind + "\"");
}

Field field_of(const json& j, Field fallback, const std::string& ctx) {
  if (!j.contains("field")) return fallback;
  if (!j["field"].is_string()) throw ParseError(ctx + ": field must be a string");
  try {
    return Field::parse(j["field"].get<std::string>());
  } catch (const FieldError& e) {
    throw ParseError(ctx + ": " + e.what());
  }
}

Int int_from_json(const json& j, const std::string& ctx) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      throw ParseError(ctx + ": malformed integer string");
    }
  }
  throw ParseError(ctx + ": expected an integer (or integer string)");
}

json int_to_json(const Int& v) {
  using boost::multiprecision::abs;
  if (abs(v) <= Int(std::numeric_limits<long long>::max())) return v.convert_to<long long>();
  return v.str();
}

Scalar scalar_from_json(const json& j, Field f, const std::string& ctx) {
  if (f.is_rational()) {
    if (!j.is_array() || j.size() != 2) throw ParseError(ctx + ": rational scalar must be [numerator, denominator]");
    Int num = int_from_json(j[0], ctx), den = int_from_json(j[1], ctx);
    if (den == 0) throw ParseError(ctx + ": zero denominator");
    return Scalar(f, num, den);
  }
  Int r = int_from_json(j, ctx);
  return Scalar(f, r);
}

json scalar_to_json(const Scalar& s) {
  if (s.field().is_rational()) return json::array({int_to_json(s.numerator()), int_to_json(s.denominator())});
  return int_to_json(s.numerator());
}

CoordVector vector_from_json(const json& j, Field f, std::size_t dim, const std::string& ctx) {
  if (!j.is_array() || j.size() != dim)
    throw ParseError(ctx + ": expected a dense vector of length " + std::to_string(dim));
  CoordVector v(f, dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = scalar_from_json(j[i], f, ctx);
  return v;
}

json vector_to_json(const CoordVector& v) {
  json j = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) j.push_back(scalar_to_json(v[i]));
  return j;
}

LinearMap matrix_from_json(const json& j, Field f, std::size_t dst, std::size_t src, const std::string& ctx) {
  if (!j.is_array() || j.size() != dst)
    throw ParseError(ctx + ": expected a matrix with " + std::to_string(dst) + " rows");
  LinearMap m(f, dst, src);
  for (std::size_t r = 0; r < dst; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != src)
      throw ParseError(ctx + ": row " + std::to_string(r) + " must have " + std::to_string(src) + " entries");
    for (std::size_t c = 0; c < src; ++c) m.at(r, c) = scalar_from_json(row[c], f, ctx);
  }
  return m;
}

json matrix_to_json(const LinearMap& m) {
  json j = json::array();
  for (std::size_t r = 0; r < m.dst_dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.src_dim(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
    j.push_back(row);
  }
  return j;
}

std::size_t index_from_json(const json& j, std::size_t bound, const std::string& ctx) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(ctx + ": indices must be non-negative integers");
  auto i = static_cast<std::size_t>(j.get<long long>());
  if (i >= bound) throw ParseError(ctx + ": index " + std::to_string(i) + " out of range (dim " + std::to_string(bound) + ")");
  return i;
}

std::vector<MultTriple> triples_from_json(const json& j, Field f, std::size_t dim, const std::string& ctx) {
  if (!j.is_array()) throw ParseError(ctx + ": structure constants must be an array of triples");
  const std::size_t width = f.is_rational() ? 5 : 4;
  std::vector<MultTriple> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != width)
      throw ParseError(ctx + ": each structure constant must be [i, j, k, value...] with " + std::to_string(width) +
                       " entries");
    MultTriple mt;
    mt.i = index_from_json(t[0], dim, ctx);
    mt.j = index_from_json(t[1], dim, ctx);
    mt.k = index_from_json(t[2], dim, ctx);
    mt.c = f.is_rational() ? scalar_from_json(json::array({t[3], t[4]}), f, ctx) : scalar_from_json(t[3], f, ctx);
    out.push_back(mt);
  }
  return out;
}

json triples_to_json(const std::vector<MultTriple>& ts, Field f) {
  json j = json::array();
  for (const auto& t : ts) {
    json row = json::array({t.i, t.j, t.k});
    if (f.is_rational()) {
      row.push_back(int_to_json(t.c.numerator()));
      row.push_back(int_to_json(t.c.denominator()));
    } else {
      row.push_back(int_to_json(t.c.numerator()));
    }
    j.push_back(row);
  }
  return j;
}

CoordVector sparse_from_json(const json& j, Field f, std::size_t dim, const std::string& ctx) {
  if (!j.is_array()) throw ParseError(ctx + ": sparse coordinates must be an array");
  const std::size_t width = f.is_rational() ? 3 : 2;
  CoordVector v(f, dim);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != width)
      throw ParseError(ctx + ": each sparse coordinate must be [index, value...] with " + std::to_string(width) +
                       " entries");
    std::size_t i = index_from_json(t[0], dim, ctx);
    v[i] += f.is_rational() ? scalar_from_json(json::array({t[1], t[2]}), f, ctx) : scalar_from_json(t[1], f, ctx);
  }
  return v;
}

json sparse_to_json(const CoordVector& v) {
  json j = json::array();
  for (const auto& [i, c] : v.terms()) {
    json row = json::array({i});
    if (v.field().is_rational()) {
      row.push_back(int_to_json(c.numerator()));
      row.push_back(int_to_json(c.denominator()));
    } else {
      row.push_back(int_to_json(c.numerator()));
    }
    j.push_back(row);
  }
  return j;
}

std::size_t dim_from_json(const json& j, const std::string& ctx) {
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0)
    throw ParseError(ctx + ": dim must be a positive integer");
  return static_cast<std::size_t>(j["dim"].get<long long>());
}

std::vector<std::string> labels_from_json(const json& j, std::size_t dim, const std::string& ctx) {
  if (!j.is_array() || j.size() != dim) throw ParseError(ctx + ": labels must list one string per basis element");
  std::vector<std::string> out;
  for (const auto& l : j) {
    if (!l.is_string()) throw ParseError(ctx + ": labels must be strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open for writing");
  out << j.dump(2) << '\n';
}

json header(FileKind kind, Field f) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind_name(kind);
  j["field"] = f.to_string();
  return j;
}

void check_hopf_match(const json& j, const HopfPtr& H, const std::string& ctx) {
  if (!j["hopf_dim"].is_number_integer() ||
      static_cast<std::size_t>(j["hopf_dim"].get<long long>()) != H->dim())
    throw ParseError(ctx + ": hopf_dim does not match the supplied quasi-Hopf algebra (dim " +
                     std::to_string(H->dim()) + ")");
}

} // namespace

std::string kind_name(FileKind k) {
  switch (k) {
    case FileKind::Algebra: return "algebra";
    case FileKind::QuasiHopf: return "quasi_hopf";
    case FileKind::ModuleAlgebra: return "module_algebra";
    case FileKind::ComoduleAlgebra: return "comodule_algebra";
    case FileKind::Morphism: return "morphism";
  }
  throw ParseError("unreachable kind");
}

FileKind read_kind(const std::string& path) {
  json j = parse_file(path);
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError(path + ": missing kind");
  const std::string k = j["kind"].get<std::string>();
  for (FileKind fk : {FileKind::Algebra, FileKind::QuasiHopf, FileKind::ModuleAlgebra, FileKind::ComoduleAlgebra,
                      FileKind::Morphism})
    if (k == kind_name(fk)) return fk;
  throw ParseError(path + ": unknown kind \"" + k + "\"");
}

Field read_field(const std::string& path, Field fallback) {
  return field_of(parse_file(path), fallback, path);
}

AlgebraPtr load_algebra(const std::string& path, Field fallback) {
  json j = parse_file(path);
  check_header(j, path, "algebra");
  check_keys(j, {"schema_version", "kind", "field", "dim", "labels", "unit", "mult"}, path);
  Field f = field_of(j, fallback, path);
  std::size_t dim = dim_from_json(j, path);
  return BasedAlgebra::make(f, labels_from_json(j["labels"], dim, path), triples_from_json(j["mult"], f, dim, path),
                            vector_from_json(j["unit"], f, dim, path));
}

HopfPtr load_quasi_hopf(const std::string& path, Field fallback) {
  json j = parse_file(path);
  check_header(j, path, "quasi_hopf");
  check_keys(j,
             {"schema_version", "kind", "field", "dim", "labels", "unit", "mult", "comul", "counit", "antipode", "phi",
              "phi_inv", "alpha", "beta"},
             path);
  Field f = field_of(j, fallback, path);
  std::size_t n = dim_from_json(j, path);
  AlgebraPtr H = BasedAlgebra::make(f, labels_from_json(j["labels"], n, path), triples_from_json(j["mult"], f, n, path),
                                    vector_from_json(j["unit"], f, n, path));
  std::optional<CoordVector> phi_inv;
  if (j.contains("phi_inv")) phi_inv = sparse_from_json(j["phi_inv"], f, n * n * n, path);
  return make_quasi_hopf(H, matrix_from_json(j["comul"], f, n * n, n, path), matrix_from_json(j["counit"], f, 1, n, path),
                         sparse_from_json(j["phi"], f, n * n * n, path), phi_inv,
                         matrix_from_json(j["antipode"], f, n, n, path), vector_from_json(j["alpha"], f, n, path),
                         vector_from_json(j["beta"], f, n, path));
}

ModuleAlgebra load_module_algebra(const std::string& path, HopfPtr H) {
  json j = parse_file(path);
  check_header(j, path, "module_algebra");
  check_keys(j, {"schema_version", "kind", "field", "hopf_dim", "dim", "labels", "unit", "mult", "action"}, path);
  Field f = field_of(j, H->field(), path);
  if (f != H->field()) throw ParseError(path + ": field does not match the supplied quasi-Hopf algebra");
  check_hopf_match(j, H, path);
  ModuleAlgebra ma;
  ma.H = H;
  ma.dim = dim_from_json(j, path);
  ma.labels = labels_from_json(j["labels"], ma.dim, path);
  ma.unit = vector_from_json(j["unit"], f, ma.dim, path);
  ma.mult = matrix_from_json(j["mult"], f, ma.dim, ma.dim * ma.dim, path);
  ma.action = matrix_from_json(j["action"], f, ma.dim, H->dim() * ma.dim, path);
  return ma;
}

ComoduleAlgebra load_comodule_algebra(const std::string& path, HopfPtr H) {
  json j = parse_file(path);
  check_header(j, path, "comodule_algebra");
  check_keys(j,
             {"schema_version", "kind", "field", "hopf_dim", "dim", "labels", "unit", "mult", "coaction", "phi_rho",
              "phi_rho_inv"},
             path);
  Field f = field_of(j, H->field(), path);
  if (f != H->field()) throw ParseError(path + ": field does not match the supplied quasi-Hopf algebra");
  check_hopf_match(j, H, path);
  std::size_t dim = dim_from_json(j, path), n = H->dim();
  AlgebraPtr B = BasedAlgebra::make(f, labels_from_json(j["labels"], dim, path),
                                    triples_from_json(j["mult"], f, dim, path), vector_from_json(j["unit"], f, dim, path));
  return make_comodule_algebra(H, B, matrix_from_json(j["coaction"], f, dim * n, dim, path),
                               sparse_from_json(j["phi_rho"], f, dim * n * n, path),
                               sparse_from_json(j["phi_rho_inv"], f, dim * n * n, path));
}

LinearMap load_morphism(const std::string& path, Field fallback) {
  json j = parse_file(path);
  check_header(j, path, "morphism");
  check_keys(j, {"schema_version", "kind", "field", "src_dim", "dst_dim", "matrix"}, path);
  Field f = field_of(j, fallback, path);
  if (!j["src_dim"].is_number_integer() || !j["dst_dim"].is_number_integer() || j["src_dim"].get<long long>() <= 0 ||
      j["dst_dim"].get<long long>() <= 0)
    throw ParseError(path + ": src_dim and dst_dim must be positive integers");
  auto src = static_cast<std::size_t>(j["src_dim"].get<long long>());
  auto dst = static_cast<std::size_t>(j["dst_dim"].get<long long>());
  return matrix_from_json(j["matrix"], f, dst, src, path);
}

void save_algebra(const std::string& path, const BasedAlgebra& a) {
  json j = header(FileKind::Algebra, a.field());
  j["dim"] = a.dim();
  j["labels"] = a.basis_labels();
  j["unit"] = vector_to_json(a.unit());
  j["mult"] = triples_to_json(a.triples(), a.field());
  write_file(path, j);
}

void save_quasi_hopf(const std::string& path, const QuasiHopfAlgebra& hq) {
  json j = header(FileKind::QuasiHopf, hq.field());
  j["dim"] = hq.dim();
  j["labels"] = hq.H()->basis_labels();
  j["unit"] = vector_to_json(hq.H()->unit());
  j["mult"] = triples_to_json(hq.H()->triples(), hq.field());
  j["comul"] = matrix_to_json(hq.base.comul);
  j["counit"] = matrix_to_json(hq.base.counit);
  j["antipode"] = matrix_to_json(hq.antipode);
  j["phi"] = sparse_to_json(hq.base.phi.coords());
  j["phi_inv"] = sparse_to_json(hq.base.phi_inv.coords());
  j["alpha"] = vector_to_json(hq.alpha.coords());
  j["beta"] = vector_to_json(hq.beta.coords());
  write_file(path, j);
}

void save_module_algebra(const std::string& path, const ModuleAlgebra& ma) {
  json j = header(FileKind::ModuleAlgebra, ma.H->field());
  j["hopf_dim"] = ma.H->dim();
  j["dim"] = ma.dim;
  j["labels"] = ma.labels;
  j["unit"] = vector_to_json(ma.unit);
  j["mult"] = matrix_to_json(ma.mult);
  j["action"] = matrix_to_json(ma.action);
  write_file(path, j);
}

void save_comodule_algebra(const std::string& path, const ComoduleAlgebra& ca) {
  json j = header(FileKind::ComoduleAlgebra, ca.H->field());
  j["hopf_dim"] = ca.H->dim();
  j["dim"] = ca.B->dim();
  j["labels"] = ca.B->basis_labels();
  j["unit"] = vector_to_json(ca.B->unit());
  j["mult"] = triples_to_json(ca.B->triples(), ca.H->field());
  j["coaction"] = matrix_to_json(ca.coaction);
  j["phi_rho"] = sparse_to_json(ca.phi_rho.coords());
  j["phi_rho_inv"] = sparse_to_json(ca.phi_rho_inv.coords());
  write_file(path, j);
}

void save_morphism(const std::string& path, const LinearMap& f) {
  json j = header(FileKind::Morphism, f.field());
  j["src_dim"] = f.src_dim();
  j["dst_dim"] = f.dst_dim();
  j["matrix"] = matrix_to_json(f);
  write_file(path, j);
}

std::string RunReport::to_json() const {
  json checks_j = json::array();
  for (const auto& c : checks) {
    json wj = json::array();
    for (const auto& w : c.witnesses)
      wj.push_back({{"axiom", w.axiom}, {"witness", w.witness}, {"lhs", w.lhs}, {"rhs", w.rhs}});
    checks_j.push_back({{"id", c.id}, {"result", c.passed ? "pass" : "fail"}, {"witnesses", wj}});
  }
  json timings_j = json::object();
  for (const auto& [id, us] : timings_us) timings_j[id] = us;
  json j{{"status", passed() ? "pass" : "fail"}, {"checks", checks_j}, {"timings_us", timings_j}};
  return j.dump(2) + "\n";
}

std::string RunReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "[pass] " : "[FAIL] ") << c.id << '\n';
    for (const auto& w : c.witnesses)
      os << "       " << w.axiom << " at " << w.witness << ": lhs=" << w.lhs << " rhs=" << w.rhs << '\n';
  }
  os << (passed() ? "status: pass" : "status: fail") << '\n';
  return os.str();
}

} // namespace qha::io
