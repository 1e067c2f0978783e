#include "schwarz/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "schwarz/error.hpp"
#include "schwarz/json_io.hpp"

namespace schwarz::holo::gallery {

namespace {

void check(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::BadParams, message);
}

MapExpr coord(Eigen::Index j, Eigen::Index n) { return MapExpr::coordinate(j, n); }

MapExpr zero_scalar(Eigen::Index n) { return MapExpr::constant(ComplexVector::Zero(1), n); }

// z A-factor of the disk extremals: z (z + c) / (1 + c z), c = d / (1 - |a|^2).
MapExpr extremal_a_factor(double c) {
  const MapExpr z = coord(0, 1);
  if (c >= 1.0 - 1e-15) return z;  // (z + 1) / (1 + z) = 1
  if (c == 0.0) return MapExpr::power(z, 2);
  return MapExpr::product(z, MapExpr::moebius(-c, 1.0, z));
}

ComplexMatrix column(const ComplexVector& b) {
  ComplexMatrix m(b.size(), 1);
  m.col(0) = b;
  return m;
}

}  // namespace

MapExpr identity(Eigen::Index n) {
  check(n >= 1, "dimension must be >= 1");
  return MapExpr::identity(n);
}

MapExpr scaled_identity(Eigen::Index n, Complex t) {
  check(n >= 1, "dimension must be >= 1");
  check(std::abs(t) <= 1.0, "scale must satisfy |t| <= 1");
  return MapExpr::scale(t, MapExpr::identity(n));
}

MapExpr square_first(Eigen::Index n) {
  check(n >= 1, "dimension must be >= 1");
  std::vector<MapExpr> parts{MapExpr::power(coord(0, n), 2)};
  for (Eigen::Index j = 1; j < n; ++j) parts.push_back(coord(j, n));
  return MapExpr::tuple(std::move(parts));
}

MapExpr first_times_last(Eigen::Index n) {
  check(n >= 1, "dimension must be >= 1");
  std::vector<MapExpr> parts{MapExpr::product(coord(0, n), coord(n - 1, n))};
  for (Eigen::Index j = 1; j < n; ++j) parts.push_back(coord(j, n));
  return MapExpr::tuple(std::move(parts));
}

MapExpr power_slice(Eigen::Index n, int k) {
  check(n >= 1, "dimension must be >= 1");
  check(k >= 1, "power must be >= 1");
  std::vector<MapExpr> parts{MapExpr::power(coord(0, n), k)};
  for (Eigen::Index j = 1; j < n; ++j) parts.push_back(zero_scalar(n));
  return MapExpr::tuple(std::move(parts));
}

MapExpr diagonal_power(const std::vector<int>& powers, const std::vector<double>& phases) {
  check(!powers.empty() && powers.size() == phases.size(), "powers and phases must be non-empty and equal length");
  const auto n = static_cast<Eigen::Index>(powers.size());
  std::vector<MapExpr> parts;
  for (Eigen::Index j = 0; j < n; ++j) {
    check(powers[j] >= 1, "powers must be >= 1");
    parts.push_back(MapExpr::scale(std::polar(1.0, phases[j]), MapExpr::power(coord(j, n), powers[j])));
  }
  return MapExpr::tuple(std::move(parts));
}

MapExpr diagonal_blaschke(const ComplexVector& zeros) {
  const auto n = zeros.size();
  check(n >= 1, "need at least one zero");
  std::vector<MapExpr> parts;
  for (Eigen::Index j = 0; j < n; ++j) {
    check(std::abs(zeros[j]) < 1.0, "Blaschke zeros must lie in the disk");
    parts.push_back(MapExpr::product(coord(j, n), MapExpr::moebius(zeros[j], 1.0, coord(j, n))));
  }
  return MapExpr::tuple(std::move(parts));
}

MapExpr unitary(const ComplexMatrix& U) {
  check(U.rows() == U.cols() && U.rows() >= 1, "unitary matrix must be square");
  const double defect = (U.adjoint() * U - ComplexMatrix::Identity(U.rows(), U.cols())).cwiseAbs().maxCoeff();
  check(defect <= 1e-10, "matrix is not unitary");
  return MapExpr::linear(U);
}

MapExpr disk_moebius(Complex a, Complex rotation) { return MapExpr::moebius(a, rotation, coord(0, 1)); }

MapExpr zhu_extremal(Complex a, double d) {
  const double s = 1.0 - std::norm(a);
  check(std::abs(a) < 1.0, "f(0) must lie in the disk");
  check(d >= 0.0 && d <= s + 1e-15, "need 0 <= |f'(0)| <= 1 - |f(0)|^2");
  const double c = std::min(d / s, 1.0);
  const Complex beta = (1.0 - a) / (1.0 - std::conj(a));
  // (w + a) / (1 + conj(a) w) is the Moebius map with parameter -a.
  return MapExpr::moebius(-a, 1.0, MapExpr::scale(beta, extremal_a_factor(c)));
}

MapExpr kalaj_extremal(const ComplexVector& b, double a, double d, const lp::Exponent& p) {
  check(std::abs(lp::norm_p(b, p) - 1.0) <= 1e-9, "b must lie on the unit sphere");
  check(a >= 0.0 && a < 1.0, "need 0 <= ||f(0)|| < 1");
  const double s = 1.0 - a * a;
  check(d >= 0.0 && d <= s + 1e-15, "need 0 <= ||f'(0)|| <= 1 - ||f(0)||^2");
  const double c = std::min(d / s, 1.0);
  const MapExpr scalar = MapExpr::moebius(-a, 1.0, extremal_a_factor(c));
  return MapExpr::compose(MapExpr::linear(column(b)), scalar);
}

MapExpr ball_automorphism(const ComplexVector& a) {
  const auto n = a.size();
  const double aa = a.squaredNorm();
  check(n >= 1 && aa < 1.0, "automorphism parameter must lie in the Euclidean ball");
  if (aa == 0.0) return MapExpr::scale(-1.0, MapExpr::identity(n));
  const ComplexMatrix P = a * a.adjoint() / aa;
  const ComplexMatrix Q = ComplexMatrix::Identity(n, n) - P;
  const double sa = std::sqrt(1.0 - aa);
  const MapExpr numerator = MapExpr::sum(MapExpr::constant(a, n), MapExpr::linear(-P - sa * Q));
  ComplexVector one(1);
  one[0] = 1.0;
  const MapExpr denominator = MapExpr::sum(MapExpr::constant(one, n), MapExpr::linear(-a.adjoint()));
  return MapExpr::product(MapExpr::reciprocal(denominator), numerator);
}

ComplexMatrix unitary_mapping(const ComplexVector& w, const ComplexVector& z) {
  check(w.size() == z.size(), "vectors differ in dimension");
  check(std::abs(w.norm() - 1.0) <= 1e-9 && std::abs(z.norm() - 1.0) <= 1e-9, "vectors must be unit");
  const auto n = w.size();
  const Complex zw = z.dot(w);  // z^* w
  const Complex phase = std::abs(zw) > 0.0 ? std::conj(zw) / std::abs(zw) : Complex(1.0);
  const ComplexVector wp = phase * w;  // z^* wp is real and >= 0
  const ComplexVector v = wp - z;
  ComplexMatrix H = ComplexMatrix::Identity(n, n);
  const double vv = v.squaredNorm();
  if (vv > 1e-30) H -= 2.0 * v * v.adjoint() / vv;
  return phase * H;
}

MapExpr ball_automorphism_fixing(const ComplexVector& a, const ComplexVector& z0) {
  check(std::abs(z0.norm() - 1.0) <= 1e-9, "fixed point must lie on the unit sphere");
  const MapExpr phi = ball_automorphism(a);
  ComplexVector w = phi(z0);
  w /= w.norm();
  return MapExpr::compose(MapExpr::linear(unitary_mapping(w, z0)), phi);
}

MapExpr blaschke_tuple(const ComplexVector& zeros, const ComplexVector& rotations) {
  check(zeros.size() >= 1 && zeros.size() == rotations.size(), "zeros and rotations must match");
  const auto m = zeros.size();
  std::vector<MapExpr> parts;
  for (Eigen::Index i = 0; i < m; ++i) parts.push_back(MapExpr::moebius(zeros[i], rotations[i], coord(i, m)));
  return MapExpr::tuple(std::move(parts));
}

MapExpr slice_product(Eigen::Index n, const ComplexVector& zeros, const ComplexVector& rotations) {
  check(n >= 1, "dimension must be >= 1");
  const auto m = zeros.size();
  ComplexMatrix proj = ComplexMatrix::Zero(m, n + m);
  proj.rightCols(m) = ComplexMatrix::Identity(m, m);
  return MapExpr::compose(blaschke_tuple(zeros, rotations), MapExpr::linear(proj));
}

MapExpr slice_mixed(Eigen::Index n, Eigen::Index m) {
  check(n >= 1 && m >= 1, "dimensions must be >= 1");
  const auto dim = n + m;
  std::vector<MapExpr> parts;
  for (Eigen::Index i = 0; i < m; ++i) {
    const MapExpr w = coord(n + i, dim);
    parts.push_back(
        MapExpr::scale(0.5, MapExpr::sum(w, MapExpr::product(coord(0, dim), MapExpr::power(w, 2)))));
  }
  return MapExpr::tuple(std::move(parts));
}

MapExpr conjugate_map(Eigen::Index n) {
  check(n >= 1, "dimension must be >= 1");
  std::vector<MapExpr> parts;
  for (Eigen::Index j = 0; j < n; ++j) parts.push_back(MapExpr::conj_coordinate(j, n));
  return MapExpr::tuple(std::move(parts));
}

MapExpr harmonic_shear(Eigen::Index n, Complex c) {
  check(std::abs(c) <= 1.0, "shear coefficient must satisfy |c| <= 1");
  return MapExpr::scale(1.0 / (1.0 + std::abs(c)),
                        MapExpr::sum(identity(n), MapExpr::scale(c, conjugate_map(n))));
}

MapExpr pluriharmonic_blend(const ComplexVector& z0, const ComplexVector& w0, double s, double t,
                            bool quadratic) {
  check(z0.size() == w0.size(), "z0 and w0 must share a dimension");
  check(s > 0.0 && s <= 1.0 && t >= 0.0 && t <= 1.0, "need 0 < s <= 1 and 0 <= t <= 1");
  const auto n = z0.size();
  const ComplexMatrix U = unitary_mapping(z0, w0);
  const ComplexMatrix V = unitary_mapping(z0, w0.conjugate());
  MapExpr h = MapExpr::linear(U);
  if (quadratic) {
    const ComplexMatrix R = unitary_mapping(ComplexVector::Unit(n, 0), z0);
    h = MapExpr::compose(MapExpr::linear(U * R), MapExpr::compose(square_first(n), MapExpr::linear(R.adjoint())));
  }
  const MapExpr anti = MapExpr::compose(MapExpr::linear(V.conjugate()), conjugate_map(n));
  const MapExpr blend = MapExpr::sum(MapExpr::scale(s * t, h), MapExpr::scale(s * (1.0 - t), anti));
  if (s == 1.0) return blend;
  return MapExpr::sum(blend, MapExpr::constant((1.0 - s) * w0, n));
}

MapExpr modulus_squared(Eigen::Index n) {
  check(n >= 1, "dimension must be >= 1");
  return MapExpr::product(coord(0, n), MapExpr::conj_coordinate(0, n));
}

// ------------------------------------------------------------ registry ----

namespace {

using nlohmann::json;
using Builder = std::function<MapExpr(const json&, const std::string&)>;

struct Entry {
  std::string params;
  std::string description;
  Builder build;
};

Eigen::Index dim_param(const json& p, const std::string& path, const char* key = "n") {
  const auto v = json_io::integer_from(json_io::member(p, key, path), path + "/" + key);
  if (v < 1 || v > 64) json_io::schema_error(path + "/" + key, "dimension must be in [1, 64]");
  return static_cast<Eigen::Index>(v);
}

double num_param(const json& p, const std::string& path, const char* key) {
  return json_io::number_from(json_io::member(p, key, path), path + "/" + key);
}

template <typename T>
T opt(const json& p, const char* key, T fallback) {
  if (!p.is_object() || !p.contains(key)) return fallback;
  return p.at(key).get<T>();
}

Complex complex_param(const json& p, const std::string& path, const char* key) {
  return json_io::complex_from(json_io::member(p, key, path), path + "/" + key);
}

ComplexVector vector_param(const json& p, const std::string& path, const char* key) {
  return json_io::vector_from(json_io::member(p, key, path), path + "/" + key);
}

ComplexVector ones_like(Eigen::Index m) { return ComplexVector::Constant(m, Complex(1.0)); }

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> r = [] {
    std::map<std::string, Entry> m;
    m["identity"] = {"n", "z -> z", [](const json& p, const std::string& path) {
                       return identity(dim_param(p, path));
                     }};
    m["scaled_identity"] = {"n, t (complex, |t| <= 1)", "z -> t z",
                            [](const json& p, const std::string& path) {
                              return scaled_identity(dim_param(p, path), complex_param(p, path, "t"));
                            }};
    m["square_first"] = {"n", "(z1^2, z2, ..., zn); the polydisk counterexample map",
                    [](const json& p, const std::string& path) { return square_first(dim_param(p, path)); }};
    m["first_times_last"] = {"n", "(z1 zn, z2, ..., zn); fixes e2..en but is not the identity",
                        [](const json& p, const std::string& path) { return first_times_last(dim_param(p, path)); }};
    m["power_slice"] = {"n, k (default 2)", "(z1^k, 0, ..., 0)", [](const json& p, const std::string& path) {
                          return power_slice(dim_param(p, path), opt<int>(p, "k", 2));
                        }};
    m["diagonal_power"] = {"powers [int], phases [real]", "(exp(i phase_j) z_j^k_j)",
                           [](const json& p, const std::string& path) {
                             const auto& pw = json_io::member(p, "powers", path);
                             const auto& ph = json_io::member(p, "phases", path);
                             if (!pw.is_array() || !ph.is_array()) {
                               json_io::schema_error(path, "powers and phases must be arrays");
                             }
                             return diagonal_power(pw.get<std::vector<int>>(), ph.get<std::vector<double>>());
                           }};
    m["diagonal_blaschke"] = {"zeros [complex]", "(z_j (z_j - a_j) / (1 - conj(a_j) z_j))",
                              [](const json& p, const std::string& path) {
                                return diagonal_blaschke(vector_param(p, path, "zeros"));
                              }};
    m["unitary"] = {"matrix [[complex]]", "z -> U z", [](const json& p, const std::string& path) {
                      return unitary(json_io::matrix_from(json_io::member(p, "matrix", path), path + "/matrix"));
                    }};
    m["disk_moebius"] = {"a (complex), rotation (complex, default 1)", "rotation (z - a) / (1 - conj(a) z)",
                         [](const json& p, const std::string& path) {
                           const Complex rot = p.contains("rotation") ? complex_param(p, path, "rotation") : 1.0;
                           return disk_moebius(complex_param(p, path, "a"), rot);
                         }};
    m["zhu_extremal"] = {"a (complex f(0)), d (|f'(0)|)", "sharp extremal of the disk boundary estimate",
                         [](const json& p, const std::string& path) {
                           return zhu_extremal(complex_param(p, path, "a"), num_param(p, path, "d"));
                         }};
    m["kalaj_extremal"] = {"b [complex] on the unit sphere, a, d, p", "sharp extremal D -> B_p^n",
                           [](const json& p, const std::string& path) {
                             const auto& pj = json_io::member(p, "p", path);
                             const lp::Exponent e = pj.is_string() ? lp::parse_exponent(pj.get<std::string>())
                                                                   : lp::Exponent::finite(pj.get<double>());
                             return kalaj_extremal(vector_param(p, path, "b"), num_param(p, path, "a"),
                                                   num_param(p, path, "d"), e);
                           }};
    m["ball_automorphism"] = {"a [complex] in the Euclidean ball", "involution exchanging a and 0",
                              [](const json& p, const std::string& path) {
                                return ball_automorphism(vector_param(p, path, "a"));
                              }};
    m["ball_automorphism_fixing"] = {"a [complex], z0 [complex] unit", "U o phi_a fixing z0",
                                     [](const json& p, const std::string& path) {
                                       return ball_automorphism_fixing(vector_param(p, path, "a"),
                                                                       vector_param(p, path, "z0"));
                                     }};
    m["blaschke_tuple"] = {"zeros [complex], rotations [complex] (default 1)", "componentwise disk automorphisms",
                           [](const json& p, const std::string& path) {
                             const ComplexVector z = vector_param(p, path, "zeros");
                             const ComplexVector r =
                                 p.contains("rotations") ? vector_param(p, path, "rotations") : ones_like(z.size());
                             return blaschke_tuple(z, r);
                           }};
    m["slice_product"] = {"n, zeros [complex], rotations [complex] (default 1)", "f(z, w) = phi(w) on C^n x C^m",
                          [](const json& p, const std::string& path) {
                            const ComplexVector z = vector_param(p, path, "zeros");
                            const ComplexVector r =
                                p.contains("rotations") ? vector_param(p, path, "rotations") : ones_like(z.size());
                            return slice_product(dim_param(p, path), z, r);
                          }};
    m["slice_mixed"] = {"n, m", "f_i(z, w) = (w_i + z1 w_i^2) / 2", [](const json& p, const std::string& path) {
                          return slice_mixed(dim_param(p, path), dim_param(p, path, "m"));
                        }};
    m["conjugate"] = {"n", "z -> conj(z) (antiholomorphic)", [](const json& p, const std::string& path) {
                        return conjugate_map(dim_param(p, path));
                      }};
    m["harmonic_shear"] = {"n, c (complex, |c| <= 1)", "(z + c conj(z)) / (1 + |c|)",
                           [](const json& p, const std::string& path) {
                             return harmonic_shear(dim_param(p, path), complex_param(p, path, "c"));
                           }};
    m["pluriharmonic_blend"] = {"z0 [complex], w0 [complex], s, t, quadratic (bool, default false)",
                                "s (t h(z) + (1 - t) conj(V z)) + (1 - s) w0 with f(z0) = w0",
                                [](const json& p, const std::string& path) {
                                  return pluriharmonic_blend(vector_param(p, path, "z0"), vector_param(p, path, "w0"),
                                                             num_param(p, path, "s"), num_param(p, path, "t"),
                                                             opt<bool>(p, "quadratic", false));
                                }};
    m["modulus_squared"] = {"n", "|z1|^2 (not pluriharmonic)", [](const json& p, const std::string& path) {
                              return modulus_squared(dim_param(p, path));
                            }};
    return m;
  }();
  return r;
}

}  // namespace

std::vector<EntryInfo> list() {
  std::vector<EntryInfo> out;
  for (const auto& [name, e] : registry()) out.push_back({name, e.params, e.description});
  return out;
}

MapExpr build(const std::string& name, const nlohmann::json& params, const std::string& path) {
  const auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) json_io::schema_error(path + "/gallery", "unknown gallery map '" + name + "'");
  try {
    return it->second.build(params, path + "/params");
  } catch (const nlohmann::json::exception& e) {
    json_io::schema_error(path + "/params", e.what());
  }
}

}  // namespace schwarz::holo::gallery
