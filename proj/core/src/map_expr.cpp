#include "schwarz/map_expr.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <variant>

#include "schwarz/error.hpp"
#include "schwarz/json_io.hpp"

namespace schwarz::holo {

namespace {

struct Coordinate { Eigen::Index index; bool conjugate; };
struct Constant { ComplexVector value; };
struct Linear { ComplexMatrix matrix; };
struct Sum { MapExpr a, b; };
struct Product { MapExpr a, b; };
struct Scale { Complex factor; MapExpr a; };
struct Power { int k; MapExpr a; };
struct Moebius { Complex a, rotation; MapExpr arg; };
struct Reciprocal { MapExpr arg; };
struct Compose { MapExpr outer, inner; };
struct Tuple { std::vector<MapExpr> parts; };

}  // namespace

struct Node {
  using Kind = std::variant<Coordinate, Constant, Linear, Sum, Product, Scale, Power, Moebius,
                            Reciprocal, Compose, Tuple>;
  Kind kind;
  Eigen::Index in_dim;
  Eigen::Index out_dim;
  bool holomorphic;
  bool polynomial;
};

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::DimensionMismatch, message);
}

void require_params(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::BadParams, message);
}

Complex ipow(Complex w, int k) {
  Complex r = 1.0;
  Complex base = w;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

ComplexVector evaluate(const Node& node, const ComplexVector& z, std::vector<Complex>* dens);

ComplexVector evaluate(const MapExpr& f, const ComplexVector& z, std::vector<Complex>* dens) {
  return evaluate(f.node(), z, dens);
}

ComplexVector evaluate(const Node& node, const ComplexVector& z, std::vector<Complex>* dens) {
  return std::visit(
      overloaded{
          [&](const Coordinate& c) -> ComplexVector {
            ComplexVector out(1);
            out[0] = c.conjugate ? std::conj(z[c.index]) : z[c.index];
            return out;
          },
          [&](const Constant& c) -> ComplexVector { return c.value; },
          [&](const Linear& l) -> ComplexVector { return l.matrix * z; },
          [&](const Sum& s) -> ComplexVector { return evaluate(s.a, z, dens) + evaluate(s.b, z, dens); },
          [&](const Product& p) -> ComplexVector {
            ComplexVector a = evaluate(p.a, z, dens);
            ComplexVector b = evaluate(p.b, z, dens);
            if (a.size() == 1 && b.size() != 1) return a[0] * b;
            if (b.size() == 1 && a.size() != 1) return b[0] * a;
            return a.cwiseProduct(b);
          },
          [&](const Scale& s) -> ComplexVector { return s.factor * evaluate(s.a, z, dens); },
          [&](const Power& p) -> ComplexVector {
            ComplexVector a = evaluate(p.a, z, dens);
            for (Eigen::Index j = 0; j < a.size(); ++j) a[j] = ipow(a[j], p.k);
            return a;
          },
          [&](const Moebius& m) -> ComplexVector {
            ComplexVector w = evaluate(m.arg, z, dens);
            for (Eigen::Index j = 0; j < w.size(); ++j) {
              const Complex den = 1.0 - std::conj(m.a) * w[j];
              if (dens) dens->push_back(den);
              if (std::abs(den) < kPoleThreshold) throw Error(ErrorKind::PoleHit, "Moebius denominator vanishes");
              w[j] = m.rotation * (w[j] - m.a) / den;
            }
            return w;
          },
          [&](const Reciprocal& r) -> ComplexVector {
            ComplexVector w = evaluate(r.arg, z, dens);
            for (Eigen::Index j = 0; j < w.size(); ++j) {
              if (dens) dens->push_back(w[j]);
              if (std::abs(w[j]) < kPoleThreshold) throw Error(ErrorKind::PoleHit, "reciprocal of zero");
              w[j] = 1.0 / w[j];
            }
            return w;
          },
          [&](const Compose& c) -> ComplexVector { return evaluate(c.outer, evaluate(c.inner, z, dens), dens); },
          [&](const Tuple& t) -> ComplexVector {
            ComplexVector out(node.out_dim);
            Eigen::Index at = 0;
            for (const auto& part : t.parts) {
              ComplexVector v = evaluate(part, z, dens);
              out.segment(at, v.size()) = v;
              at += v.size();
            }
            return out;
          },
      },
      node.kind);
}

}  // namespace

MapExpr MapExpr::coordinate(Eigen::Index index, Eigen::Index in_dim) {
  require(in_dim >= 1 && index >= 0 && index < in_dim, "coordinate index out of range");
  return MapExpr(std::make_shared<const Node>(Node{Coordinate{index, false}, in_dim, 1, true, true}));
}

MapExpr MapExpr::conj_coordinate(Eigen::Index index, Eigen::Index in_dim) {
  require(in_dim >= 1 && index >= 0 && index < in_dim, "coordinate index out of range");
  return MapExpr(std::make_shared<const Node>(Node{Coordinate{index, true}, in_dim, 1, false, true}));
}

MapExpr MapExpr::constant(ComplexVector value, Eigen::Index in_dim) {
  require(in_dim >= 1 && value.size() >= 1, "constant needs positive dimensions");
  require_finite(value, "constant");
  const auto out = value.size();
  return MapExpr(std::make_shared<const Node>(Node{Constant{std::move(value)}, in_dim, out, true, true}));
}

MapExpr MapExpr::identity(Eigen::Index n) { return linear(ComplexMatrix::Identity(n, n)); }

MapExpr MapExpr::linear(ComplexMatrix matrix) {
  require(matrix.rows() >= 1 && matrix.cols() >= 1, "linear map needs a non-empty matrix");
  require_params(matrix.allFinite(), "linear map matrix must be finite");
  const auto in = matrix.cols();
  const auto out = matrix.rows();
  return MapExpr(std::make_shared<const Node>(Node{Linear{std::move(matrix)}, in, out, true, true}));
}

MapExpr MapExpr::sum(MapExpr a, MapExpr b) {
  require(a.in_dim() == b.in_dim() && a.out_dim() == b.out_dim(), "sum operands differ in shape");
  const Node n{Sum{a, b}, a.in_dim(), a.out_dim(), a.is_holomorphic() && b.is_holomorphic(),
               a.is_polynomial() && b.is_polynomial()};
  return MapExpr(std::make_shared<const Node>(n));
}

MapExpr MapExpr::product(MapExpr a, MapExpr b) {
  require(a.in_dim() == b.in_dim(), "product operands differ in input dimension");
  require(a.out_dim() == b.out_dim() || a.out_dim() == 1 || b.out_dim() == 1,
          "product operands differ in output dimension");
  const Node n{Product{a, b}, a.in_dim(), std::max(a.out_dim(), b.out_dim()),
               a.is_holomorphic() && b.is_holomorphic(), a.is_polynomial() && b.is_polynomial()};
  return MapExpr(std::make_shared<const Node>(n));
}

MapExpr MapExpr::scale(Complex factor, MapExpr a) {
  require_params(std::isfinite(factor.real()) && std::isfinite(factor.imag()), "scale factor must be finite");
  const Node n{Scale{factor, a}, a.in_dim(), a.out_dim(), a.is_holomorphic(), a.is_polynomial()};
  return MapExpr(std::make_shared<const Node>(n));
}

MapExpr MapExpr::power(MapExpr a, int k) {
  require_params(k >= 0, "power exponent must be >= 0");
  const Node n{Power{k, a}, a.in_dim(), a.out_dim(), a.is_holomorphic(), a.is_polynomial()};
  return MapExpr(std::make_shared<const Node>(n));
}

MapExpr MapExpr::moebius(Complex a, Complex rotation, MapExpr arg) {
  require_params(std::abs(a) < 1.0, "Moebius parameter must satisfy |a| < 1");
  require_params(std::abs(std::abs(rotation) - 1.0) <= 1e-12, "Moebius rotation must be unimodular");
  const Node n{Moebius{a, rotation, arg}, arg.in_dim(), arg.out_dim(), arg.is_holomorphic(), false};
  return MapExpr(std::make_shared<const Node>(n));
}

MapExpr MapExpr::reciprocal(MapExpr arg) {
  const Node n{Reciprocal{arg}, arg.in_dim(), arg.out_dim(), arg.is_holomorphic(), false};
  return MapExpr(std::make_shared<const Node>(n));
}

MapExpr MapExpr::compose(MapExpr outer, MapExpr inner) {
  require(outer.in_dim() == inner.out_dim(), "composition: outer input " + std::to_string(outer.in_dim()) +
                                                 " != inner output " + std::to_string(inner.out_dim()));
  const Node n{Compose{outer, inner}, inner.in_dim(), outer.out_dim(),
               outer.is_holomorphic() && inner.is_holomorphic(), outer.is_polynomial() && inner.is_polynomial()};
  return MapExpr(std::make_shared<const Node>(n));
}

MapExpr MapExpr::tuple(std::vector<MapExpr> parts) {
  require(!parts.empty(), "tuple needs at least one part");
  const auto in = parts.front().in_dim();
  Eigen::Index out = 0;
  bool holo = true;
  bool poly = true;
  for (const auto& p : parts) {
    require(p.in_dim() == in, "tuple parts differ in input dimension");
    out += p.out_dim();
    holo = holo && p.is_holomorphic();
    poly = poly && p.is_polynomial();
  }
  return MapExpr(std::make_shared<const Node>(Node{Tuple{std::move(parts)}, in, out, holo, poly}));
}

Eigen::Index MapExpr::in_dim() const noexcept { return node_->in_dim; }
Eigen::Index MapExpr::out_dim() const noexcept { return node_->out_dim; }
bool MapExpr::is_holomorphic() const noexcept { return node_->holomorphic; }
bool MapExpr::is_polynomial() const noexcept { return node_->polynomial; }

ComplexVector MapExpr::operator()(const ComplexVector& z) const {
  if (z.size() != in_dim()) {
    throw Error(ErrorKind::DimensionMismatch, "map expects input dimension " + std::to_string(in_dim()) +
                                                  ", got " + std::to_string(z.size()));
  }
  return evaluate(*node_, z, nullptr);
}

ComplexVector MapExpr::eval_traced(const ComplexVector& z, std::vector<Complex>& denominators) const {
  if (z.size() != in_dim()) throw Error(ErrorKind::DimensionMismatch, "map input dimension mismatch");
  return evaluate(*node_, z, &denominators);
}

ComplexVector eval(const MapExpr& f, const ComplexVector& z) { return f(z); }

double pole_clearance(const MapExpr& f, const ComplexVector& z) {
  if (f.is_polynomial()) return std::numeric_limits<double>::infinity();
  std::vector<Complex> d0;
  f.eval_traced(z, d0);
  const double h = 1e-6;
  const auto n = z.size();
  // Squared gradient magnitude of each denominator over the 2n real directions.
  std::vector<double> grad2(d0.size(), 0.0);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (const Complex dir : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
      ComplexVector zp = z;
      ComplexVector zm = z;
      zp[j] += h * dir;
      zm[j] -= h * dir;
      std::vector<Complex> dp, dm;
      try {
        f.eval_traced(zp, dp);
        f.eval_traced(zm, dm);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::PoleHit) return 0.0;
        throw;
      }
      for (std::size_t k = 0; k < d0.size(); ++k) grad2[k] += std::norm((dp[k] - dm[k]) / (2.0 * h));
    }
  }
  double clearance = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < d0.size(); ++k) {
    // Holomorphic denominators have |grad| counted twice (x and y directions).
    const double g = std::sqrt(grad2[k] / 2.0);
    if (g > 0.0) clearance = std::min(clearance, std::abs(d0[k]) / g);
  }
  return clearance;
}

// ---------------------------------------------------------------- JSON ----

nlohmann::json MapExpr::to_json() const {
  using nlohmann::json;
  return std::visit(
      overloaded{
          [&](const Coordinate& c) -> json {
            return {{"node", c.conjugate ? "conj_coordinate" : "coordinate"}, {"index", c.index}, {"dim", in_dim()}};
          },
          [&](const Constant& c) -> json {
            return {{"node", "constant"}, {"value", json_io::to_json(c.value)}, {"dim", in_dim()}};
          },
          [&](const Linear& l) -> json { return {{"node", "linear"}, {"matrix", json_io::to_json(l.matrix)}}; },
          [&](const Sum& s) -> json { return {{"node", "sum"}, {"args", {s.a.to_json(), s.b.to_json()}}}; },
          [&](const Product& p) -> json { return {{"node", "product"}, {"args", {p.a.to_json(), p.b.to_json()}}}; },
          [&](const Scale& s) -> json {
            return {{"node", "scale"}, {"factor", json_io::to_json(s.factor)}, {"arg", s.a.to_json()}};
          },
          [&](const Power& p) -> json { return {{"node", "power"}, {"exponent", p.k}, {"arg", p.a.to_json()}}; },
          [&](const Moebius& m) -> json {
            return {{"node", "moebius"},
                    {"a", json_io::to_json(m.a)},
                    {"rotation", json_io::to_json(m.rotation)},
                    {"arg", m.arg.to_json()}};
          },
          [&](const Reciprocal& r) -> json { return {{"node", "reciprocal"}, {"arg", r.arg.to_json()}}; },
          [&](const Compose& c) -> json {
            return {{"node", "compose"}, {"outer", c.outer.to_json()}, {"inner", c.inner.to_json()}};
          },
          [&](const Tuple& t) -> json {
            json parts = json::array();
            for (const auto& p : t.parts) parts.push_back(p.to_json());
            return {{"node", "tuple"}, {"parts", parts}};
          },
      },
      node_->kind);
}

MapExpr MapExpr::from_json(const nlohmann::json& j, const std::string& path) {
  using json_io::member;
  using json_io::schema_error;
  if (!j.is_object()) schema_error(path, "map node must be an object");
  const auto& tag = member(j, "node", path);
  if (!tag.is_string()) schema_error(path + "/node", "node tag must be a string");
  const std::string kind = tag.get<std::string>();

  auto sub = [&](const char* key) { return from_json(member(j, key, path), path + "/" + key); };
  auto index_dim = [&]() {
    const auto idx = json_io::integer_from(member(j, "index", path), path + "/index");
    const auto dim = json_io::integer_from(member(j, "dim", path), path + "/dim");
    if (dim < 1 || idx < 0 || idx >= dim) schema_error(path + "/index", "index out of range for dim");
    return std::pair<Eigen::Index, Eigen::Index>(idx, dim);
  };
  auto pair_args = [&]() {
    const auto& args = member(j, "args", path);
    if (!args.is_array() || args.size() != 2) schema_error(path + "/args", "expected two operands");
    return std::pair<MapExpr, MapExpr>(from_json(args[0], path + "/args/0"), from_json(args[1], path + "/args/1"));
  };

  try {
    if (kind == "coordinate") {
      auto [i, d] = index_dim();
      return coordinate(i, d);
    }
    if (kind == "conj_coordinate") {
      auto [i, d] = index_dim();
      return conj_coordinate(i, d);
    }
    if (kind == "constant") {
      const auto dim = json_io::integer_from(member(j, "dim", path), path + "/dim");
      return constant(json_io::vector_from(member(j, "value", path), path + "/value"), dim);
    }
    if (kind == "linear") return linear(json_io::matrix_from(member(j, "matrix", path), path + "/matrix"));
    if (kind == "sum") {
      auto [a, b] = pair_args();
      return sum(a, b);
    }
    if (kind == "product") {
      auto [a, b] = pair_args();
      return product(a, b);
    }
    if (kind == "scale") {
      return scale(json_io::complex_from(member(j, "factor", path), path + "/factor"), sub("arg"));
    }
    if (kind == "power") {
      const auto k = json_io::integer_from(member(j, "exponent", path), path + "/exponent");
      return power(sub("arg"), static_cast<int>(k));
    }
    if (kind == "moebius") {
      return moebius(json_io::complex_from(member(j, "a", path), path + "/a"),
                     json_io::complex_from(member(j, "rotation", path), path + "/rotation"), sub("arg"));
    }
    if (kind == "reciprocal") return reciprocal(sub("arg"));
    if (kind == "compose") return compose(sub("outer"), sub("inner"));
    if (kind == "tuple") {
      const auto& parts = member(j, "parts", path);
      if (!parts.is_array() || parts.empty()) schema_error(path + "/parts", "expected a non-empty array");
      std::vector<MapExpr> out;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        out.push_back(from_json(parts[k], path + "/parts/" + std::to_string(k)));
      }
      return tuple(std::move(out));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SchemaError) throw;
    schema_error(path, e.what());
  }
  schema_error(path + "/node", "unknown node kind '" + kind + "'");
}

}  // namespace schwarz::holo
