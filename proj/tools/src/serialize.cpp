#include "swanson/cli/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

namespace swanson::cli {
namespace {

// NaN has no JSON literal; it is stored as null.
json number(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

double number_from(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

std::vector<double> numbers_from(const json& j) {
  std::vector<double> v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(number_from(x));
  return v;
}

json complexes(const std::vector<Complex>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(complex_to_json(z));
  return a;
}

std::vector<Complex> complexes_from(const json& j) {
  std::vector<Complex> v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(complex_from_json(x));
  return v;
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  const Index n = static_cast<Index>(j.size());
  const Index cols = n == 0 ? 0 : static_cast<Index>(j.at(0).size());
  CMatrix m(n, cols);
  for (Index i = 0; i < n; ++i) {
    if (static_cast<Index>(j.at(i).size()) != cols) throw std::invalid_argument("ragged matrix in JSON");
    for (Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(j.at(i).at(k));
  }
  return m;
}

json vector_to_json(const CVector& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(complex_to_json(v(i)));
  return a;
}

CVector vector_from_json(const json& j) {
  CVector v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = complex_from_json(j.at(i));
  return v;
}

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace

json complex_to_json(Complex z) { return json::array({number(z.real()), number(z.imag())}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex number must be [re, im]");
  return {number_from(j[0]), number_from(j[1])};
}

void to_json(json& j, const ConvergedEigenvalue& v) {
  j = json{{"value", complex_to_json(v.value)}, {"error_estimate", number(v.error_estimate)}};
}

void from_json(const json& j, ConvergedEigenvalue& v) {
  v.value = complex_from_json(j.at("value"));
  v.error_estimate = number_from(j.at("error_estimate"));
}

void to_json(json& j, const BoundaryPoint& p) { j = json::array({number(p.x), number(p.y)}); }

void from_json(const json& j, BoundaryPoint& p) {
  p.x = number_from(j.at(0));
  p.y = number_from(j.at(1));
}

void to_json(json& j, const NumericalRangeBoundary& b) {
  j = json{{"gamma", b.gamma},
           {"dim_used", b.dim_used},
           {"thetas", numbers(b.thetas)},
           {"support_values", numbers(b.support_values)},
           {"support_estimates", numbers(b.support_estimates)},
           {"boundary_points", b.boundary_points}};
}

void from_json(const json& j, NumericalRangeBoundary& b) {
  b.gamma = j.at("gamma").get<double>();
  b.dim_used = j.at("dim_used").get<Index>();
  b.thetas = numbers_from(j.at("thetas"));
  b.support_values = numbers_from(j.at("support_values"));
  b.support_estimates = numbers_from(j.at("support_estimates"));
  b.boundary_points = j.at("boundary_points").get<std::vector<BoundaryPoint>>();
}

void to_json(json& j, const HyperbolaComparison& h) {
  json rows = json::array();
  for (const auto& r : h.rows) {
    rows.push_back({{"theta", number(r.theta)},
                    {"printed_support", number(r.printed_support)},
                    {"numeric_support", number(r.numeric_support)},
                    {"difference", number(r.difference)}});
  }
  json disc = json::array();
  for (const auto& d : h.discrepancies) {
    disc.push_back({{"name", d.name},
                    {"description", d.description},
                    {"printed", number(d.printed)},
                    {"numeric", number(d.numeric)},
                    {"residual", number(d.residual)}});
  }
  j = json{{"gamma", h.gamma},
           {"degenerate", h.degenerate},
           {"printed_vertex", number(h.printed_vertex)},
           {"lowest_eigenvalue", number(h.lowest_eigenvalue)},
           {"rows", rows},
           {"discrepancies", disc}};
}

void from_json(const json& j, HyperbolaComparison& h) {
  h.gamma = j.at("gamma").get<double>();
  h.degenerate = j.at("degenerate").get<bool>();
  h.printed_vertex = number_from(j.at("printed_vertex"));
  h.lowest_eigenvalue = number_from(j.at("lowest_eigenvalue"));
  h.rows.clear();
  for (const auto& r : j.at("rows")) {
    h.rows.push_back({number_from(r.at("theta")), number_from(r.at("printed_support")),
                      number_from(r.at("numeric_support")), number_from(r.at("difference"))});
  }
  h.discrepancies.clear();
  for (const auto& d : j.at("discrepancies")) {
    h.discrepancies.push_back({d.at("name").get<std::string>(), d.at("description").get<std::string>(),
                               number_from(d.at("printed")), number_from(d.at("numeric")),
                               number_from(d.at("residual"))});
  }
}

void to_json(json& j, const PseudospectrumGrid& g) {
  j = json{{"gamma", g.gamma},
           {"dim_used", g.dim_used},
           {"re_range", {g.re_range.lo, g.re_range.hi}},
           {"im_range", {g.im_range.lo, g.im_range.hi}},
           {"resolution", g.resolution},
           {"layout", "row-major over (im, re)"},
           {"sigma_min", numbers(g.sigma_min)}};
}

void from_json(const json& j, PseudospectrumGrid& g) {
  g.gamma = j.at("gamma").get<double>();
  g.dim_used = j.at("dim_used").get<Index>();
  g.re_range = {j.at("re_range").at(0).get<double>(), j.at("re_range").at(1).get<double>()};
  g.im_range = {j.at("im_range").at(0).get<double>(), j.at("im_range").at(1).get<double>()};
  g.resolution = j.at("resolution").get<int>();
  g.sigma_min = numbers_from(j.at("sigma_min"));
  if (g.sigma_min.size() != static_cast<std::size_t>(g.resolution) * g.resolution) {
    throw std::invalid_argument("sigma_min size does not match resolution^2");
  }
}

void to_json(json& j, const SpectrumResult& r) {
  j = json{{"eigenvalues", r.eigenvalues}, {"closed_form", numbers(r.closed_form)}};
}

void from_json(const json& j, SpectrumResult& r) {
  r.eigenvalues = j.at("eigenvalues").get<std::vector<ConvergedEigenvalue>>();
  r.closed_form = numbers_from(j.at("closed_form"));
}

void to_json(json& j, const NumrangeResult& r) {
  j = json{{"boundary", r.boundary},
           {"tangency", r.tangency},
           {"eigenvalues", complexes(r.eigenvalues)},
           {"hyperbola", r.hyperbola}};
}

void from_json(const json& j, NumrangeResult& r) {
  r.boundary = j.at("boundary").get<NumericalRangeBoundary>();
  r.tangency = j.at("tangency").get<std::vector<BoundaryPoint>>();
  r.eigenvalues = complexes_from(j.at("eigenvalues"));
  r.hyperbola = j.at("hyperbola").get<HyperbolaComparison>();
}

void to_json(json& j, const CompressResult& r) {
  j = json{{"n_modes", r.n_modes},
           {"lambdas", numbers(r.lambdas)},
           {"q_inv", matrix_to_json(r.q_inv)},
           {"q", matrix_to_json(r.q)},
           {"h_hat", matrix_to_json(r.h_hat)},
           {"pseudo_hermiticity_residual", number(r.pseudo_hermiticity_residual)}};
}

void from_json(const json& j, CompressResult& r) {
  r.n_modes = j.at("n_modes").get<int>();
  r.lambdas = numbers_from(j.at("lambdas"));
  r.q_inv = matrix_from_json(j.at("q_inv"));
  r.q = matrix_from_json(j.at("q"));
  r.h_hat = matrix_from_json(j.at("h_hat"));
  r.pseudo_hermiticity_residual = number_from(j.at("pseudo_hermiticity_residual"));
}

void to_json(json& j, const EvolveResult& r) {
  json coeffs = json::array();
  for (const auto& c : r.trace.coeffs_t) coeffs.push_back(vector_to_json(c));
  j = json{{"n_modes", r.n_modes},
           {"c0", complexes(r.c0)},
           {"times", numbers(r.trace.times)},
           {"phys_norms", numbers(r.trace.phys_norms)},
           {"std_norms", numbers(r.trace.std_norms)},
           {"coeffs_t", coeffs}};
}

void from_json(const json& j, EvolveResult& r) {
  r.n_modes = j.at("n_modes").get<int>();
  r.c0 = complexes_from(j.at("c0"));
  r.trace.times = numbers_from(j.at("times"));
  r.trace.phys_norms = numbers_from(j.at("phys_norms"));
  r.trace.std_norms = numbers_from(j.at("std_norms"));
  r.trace.coeffs_t.clear();
  for (const auto& c : j.at("coeffs_t")) r.trace.coeffs_t.push_back(vector_from_json(c));
}

void to_json(json& j, const Check& c) {
  j = json{{"name", c.name},
           {"computed", number(c.computed)},
           {"expected", number(c.expected)},
           {"expected_source", to_string(c.source)},
           {"residual", number(c.residual)},
           {"tolerance", number(c.tolerance)},
           {"bound", to_string(c.bound)},
           {"status", to_string(c.status)},
           {"note", c.note}};
}

void from_json(const json& j, Check& c) {
  c.name = j.at("name").get<std::string>();
  c.computed = number_from(j.at("computed"));
  c.expected = number_from(j.at("expected"));
  c.source = expected_source_from_string(j.at("expected_source").get<std::string>());
  c.residual = number_from(j.at("residual"));
  c.tolerance = number_from(j.at("tolerance"));
  c.bound = bound_from_string(j.at("bound").get<std::string>());
  c.status = check_status_from_string(j.at("status").get<std::string>());
  c.note = j.at("note").get<std::string>();
}

void to_json(json& j, const VerificationReport& r) {
  j = json{{"gamma", r.gamma},
           {"summary",
            {{"pass", r.count(CheckStatus::pass)},
             {"fail", r.count(CheckStatus::fail)},
             {"paper-discrepancy", r.count(CheckStatus::paper_discrepancy)}}},
           {"checks", r.checks}};
}

void from_json(const json& j, VerificationReport& r) {
  r.gamma = j.at("gamma").get<double>();
  r.checks = j.at("checks").get<std::vector<Check>>();
}

json envelope(const json& config, const json& data) {
  return json{{"schema", kSchema}, {"config", config}, {"data", data}};
}

const json& payload(const json& doc) {
  if (!doc.contains("schema") || doc.at("schema") != kSchema) {
    throw std::invalid_argument(std::string("document schema is not ") + kSchema);
  }
  return doc.at("data");
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string spectrum_csv(const SpectrumResult& r) {
  std::ostringstream os;
  os << "index,re,im,error_estimate,closed_form\n";
  for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
    const auto& e = r.eigenvalues[k];
    os << k << ',' << fmt(e.value.real()) << ',' << fmt(e.value.imag()) << ',' << fmt(e.error_estimate) << ','
       << fmt(k < r.closed_form.size() ? r.closed_form[k] : std::nan("")) << '\n';
  }
  return os.str();
}

std::string pseudospectrum_csv(const PseudospectrumGrid& g) {
  std::ostringstream os;
  os << "re,im,sigma_min\n";
  for (int iy = 0; iy < g.resolution; ++iy) {
    for (int ix = 0; ix < g.resolution; ++ix) {
      os << fmt(g.re_at(ix)) << ',' << fmt(g.im_at(iy)) << ',' << fmt(g.at(ix, iy)) << '\n';
    }
  }
  return os.str();
}

std::string numrange_csv(const NumrangeResult& r) {
  std::ostringstream os;
  os << "theta,support,x,y\n";
  const auto& b = r.boundary;
  for (std::size_t k = 0; k < b.thetas.size(); ++k) {
    os << fmt(b.thetas[k]) << ',' << fmt(b.support_values[k]) << ',' << fmt(r.tangency[k].x) << ','
       << fmt(r.tangency[k].y) << '\n';
  }
  return os.str();
}

std::string evolve_csv(const EvolveResult& r) {
  std::ostringstream os;
  os << "t,phys_norm,std_norm\n";
  for (std::size_t k = 0; k < r.trace.times.size(); ++k) {
    os << fmt(r.trace.times[k]) << ',' << fmt(r.trace.phys_norms[k]) << ',' << fmt(r.trace.std_norms[k]) << '\n';
  }
  return os.str();
}

std::string verification_csv(const VerificationReport& r) {
  std::ostringstream os;
  os << "name,expected_source,status,computed,expected,residual,tolerance,bound\n";
  for (const auto& c : r.checks) {
    os << c.name << ',' << to_string(c.source) << ',' << to_string(c.status) << ',' << fmt(c.computed) << ','
       << fmt(c.expected) << ',' << fmt(c.residual) << ',' << fmt(c.tolerance) << ',' << to_string(c.bound) << '\n';
  }
  return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  namespace fs = std::filesystem;
  if (path.empty()) throw std::runtime_error("empty output path");
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  if (!fs::is_directory(dir)) throw std::runtime_error("cannot write " + path.string() + ": no such directory");
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write failed for " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignore;
    fs::remove(tmp, ignore);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::vector<BoundaryPoint> tangency_points(const NumericalRangeBoundary& b) {
  const auto& p = b.boundary_points;
  std::vector<BoundaryPoint> out;
  const std::size_t n = b.thetas.size();
  if (n == 0 || p.size() + 1 != n) return out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0) {
      out.push_back(p.front());
    } else if (k + 1 == n) {
      out.push_back(p.back());
    } else {
      out.push_back({0.5 * (p[k - 1].x + p[k].x), 0.5 * (p[k - 1].y + p[k].y)});
    }
  }
  return out;
}

}  // namespace swanson::cli
