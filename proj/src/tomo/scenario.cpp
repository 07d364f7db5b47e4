// Copyright 2026 The Tomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "tomo/scenario.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "tomo/canonical.hpp"
#include "tomo/cv_tomography.hpp"
#include "tomo/oscillator.hpp"
#include "tomo/output.hpp"
#include "tomo/quadrature.hpp"
#include "tomo/spin_tomography.hpp"
#include "tomo/verify.hpp"

namespace tomo {

using json = nlohmann::json;

namespace {

constexpr const char* kSchema = "tomo-scenario/1";

const std::vector<std::string> kKinds = {"spin-tomogram", "spin-reconstruct", "evolve", "energies",
                                         "transform",     "cv-tomogram",      "wigner", "verify"};

// ---- field access with path diagnostics -----------------------------------

[[noreturn]] void bad_field(const std::string& where, const std::string& what) {
  fail(ErrorKind::Parse, "field '" + where + "': " + what);
}

const json& field(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) bad_field(where + "." + key, "missing");
  return *it;
}

const json* optional(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

void allow_only(const json& obj, const std::set<std::string>& keys, const std::string& where) {
  if (!obj.is_object()) bad_field(where, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!keys.count(it.key())) bad_field(where + "." + it.key(), "unknown field");
  }
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) bad_field(where, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad_field(where, "not finite");
  return v;
}

int integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad_field(where, "expected an integer");
  return j.get<int>();
}

std::string text(const json& j, const std::string& where) {
  if (!j.is_string()) bad_field(where, "expected a string");
  return j.get<std::string>();
}

Complex complex(const json& j, const std::string& where) {
  if (j.is_number()) return {number(j, where), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0], where + "[0]"), number(j[1], where + "[1]")};
  bad_field(where, "expected a number or [re, im]");
}

CVector cvector(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) bad_field(where, "expected a non-empty array");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

CMatrix cmatrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) bad_field(where, "expected an array of rows");
  const std::size_t n = j.size();
  CMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const std::string rw = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != n) bad_field(rw, "expected a row of length " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex(j[r][c], rw + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

RMatrix rmatrix(const json& j, const std::string& where) {
  const CMatrix m = cmatrix(j, where);
  if (m.imag().cwiseAbs().maxCoeff() != 0.0) bad_field(where, "expected real entries");
  return m.real();
}

Grid1D grid(const json* j, const std::string& where, Grid1D fallback) {
  if (!j) return fallback;
  allow_only(*j, {"min", "max", "n"}, where);
  return Grid1D(number(field(*j, "min", where), where + ".min"), number(field(*j, "max", where), where + ".max"),
                integer(field(*j, "n", where), where + ".n"));
}

// ---- JSON encoders ---------------------------------------------------------

json encode(Complex c) { return json::array({c.real(), c.imag()}); }

json encode(const CVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(encode(v(i)));
  return a;
}

json encode(const CMatrix& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(encode(CVector(m.row(r).transpose())));
  return a;
}

json encode(const Grid1D& g) { return {{"min", g.min()}, {"max", g.max()}, {"n", g.size()}}; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string plain(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// ---- state parsing ---------------------------------------------------------

DensityMatrix spin_state(const json& j, const std::string& where) {
  allow_only(j, {"spinor", "density", "mixture"}, where);
  if (j.size() != 1) bad_field(where, "expected exactly one of spinor, density, mixture");
  if (auto* s = optional(j, "spinor")) return pure_density(Spinor{cvector(*s, where + ".spinor")}, true);
  if (auto* d = optional(j, "density")) {
    DensityMatrix rho{cmatrix(*d, where + ".density")};
    validate_density(rho, 1e-9);
    return rho;
  }
  const json& m = field(j, "mixture", where);
  const std::string mw = where + ".mixture";
  allow_only(m, {"weights", "spinors"}, mw);
  const json& w = field(m, "weights", mw);
  const json& s = field(m, "spinors", mw);
  if (!w.is_array() || !s.is_array() || w.size() != s.size() || w.empty()) {
    bad_field(mw, "weights and spinors must be arrays of equal, nonzero length");
  }
  MixedEnsemble e;
  for (std::size_t i = 0; i < w.size(); ++i) {
    e.weights.push_back(number(w[i], mw + ".weights[" + std::to_string(i) + "]"));
    Spinor psi{cvector(s[i], mw + ".spinors[" + std::to_string(i) + "]")};
    const double n2 = psi.norm_squared();
    if (!(n2 > 0.0)) fail(ErrorKind::Validation, "mixture spinor " + std::to_string(i) + " is zero");
    psi.amplitudes /= std::sqrt(n2);
    e.states.push_back(psi);
  }
  return mixed_density(e);
}

HalfInt check_spin(const json& params, const DensityMatrix& rho) {
  const HalfInt j = rho.spin();
  if (auto* jj = optional(params, "j")) {
    const double v = number(*jj, "params.j");
    if (std::abs(v - j.value()) > 1e-12) {
      fail(ErrorKind::Validation, "params.j = " + plain(v) + " does not match a state of dimension " +
                                      std::to_string(rho.size()));
    }
  }
  return j;
}

int band_limit(const json& params, HalfInt j) {
  const int fallback = j.twice() + 1;
  auto* b = optional(params, "band_limit");
  const int l = b ? integer(*b, "params.band_limit") : fallback;
  if (l < 1) fail(ErrorKind::Validation, "band_limit must be at least 1");
  return l;
}

struct CvState {
  WaveFunction1D psi;
  std::string label;
  bool gaussian = false;  // coherent family with closed-form tomogram
  double q0 = 0.0, p0 = 0.0;
};

CvState cv_state(const json& j, const Grid1D& g) {
  const std::string where = "params.state";
  allow_only(j, {"hermite", "coherent", "superposition"}, where);
  if (j.size() != 1) bad_field(where, "expected exactly one of hermite, coherent, superposition");
  CvState s;
  if (auto* h = optional(j, "hermite")) {
    const int n = integer(*h, where + ".hermite");
    if (n < 0 || n > 200) fail(ErrorKind::Validation, "hermite index must lie in [0, 200]");
    s.psi = hermite_function(n, g);
    s.label = "hermite " + std::to_string(n);
    s.gaussian = (n == 0);
  } else if (auto* c = optional(j, "coherent")) {
    allow_only(*c, {"q0", "p0"}, where + ".coherent");
    s.q0 = number(field(*c, "q0", where + ".coherent"), where + ".coherent.q0");
    s.p0 = number(field(*c, "p0", where + ".coherent"), where + ".coherent.p0");
    s.psi = coherent_state(s.q0, s.p0, g);
    s.label = "coherent";
    s.gaussian = true;
  } else {
    const CVector coef = cvector(field(j, "superposition", where), where + ".superposition");
    s.psi = hermite_superposition(std::vector<Complex>(coef.data(), coef.data() + coef.size()), g);
    s.label = "superposition";
  }
  s.psi.require_normalized();
  return s;
}

// ---- plans -----------------------------------------------------------------

struct Result {
  std::vector<OutputFile> files;
  std::string summary;
  int status = 0;
};

struct Target {
  std::string path;
  std::string format;
};

using Plan = std::function<Result(const Target&)>;

Plan plan_spin_tomogram(const json& p) {
  allow_only(p, {"j", "state", "band_limit"}, "params");
  const DensityMatrix rho = spin_state(field(p, "state", "params"), "params.state");
  const HalfInt j = check_spin(p, rho);
  const int l = band_limit(p, j);
  return [rho, j, l](const Target& t) {
    const SpinTomogram tom = tomogram(rho, sphere_quadrature(l));
    const int d = tom.dimension();
    double norm = 0.0, low = 1e300;
    for (std::size_t n = 0; n < tom.directions.size(); ++n) {
      double sum = 0.0;
      for (int m = 0; m < d; ++m) {
        const double w = tom.values[n * static_cast<std::size_t>(d) + static_cast<std::size_t>(m)];
        sum += w;
        low = std::min(low, w);
      }
      norm = std::max(norm, std::abs(sum - 1.0));
    }
    Result r;
    if (t.format == "csv") {
      CsvWriter csv({"phi", "theta", "m", "w"});
      for (std::size_t n = 0; n < tom.directions.size(); ++n) {
        for (int m = 0; m < d; ++m) {
          csv.row({tom.directions[n].phi, tom.directions[n].theta, basis_projection(j, m).value(),
                   tom.values[n * static_cast<std::size_t>(d) + static_cast<std::size_t>(m)]});
        }
      }
      r.files.push_back({t.path, csv.str()});
    } else {
      json doc = {{"schema", "tomo-spin-tomogram/1"}, {"j", j.value()}, {"band_limit", l}};
      json dirs = json::array(), vals = json::array();
      for (std::size_t n = 0; n < tom.directions.size(); ++n) {
        dirs.push_back({tom.directions[n].phi, tom.directions[n].theta, tom.weights[n]});
        json row = json::array();
        for (int m = 0; m < d; ++m) row.push_back(tom.values[n * static_cast<std::size_t>(d) + static_cast<std::size_t>(m)]);
        vals.push_back(row);
      }
      doc["directions"] = dirs;
      doc["values"] = vals;
      r.files.push_back({t.path, dump(doc)});
    }
    r.summary = "spin-tomogram: j=" + plain(j.value()) + " directions=" + std::to_string(tom.directions.size()) +
                " max|sum w - 1|=" + sci(norm) + " min w=" + sci(low);
    return r;
  };
}

SpinTomogram read_tomogram(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open tomogram file " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
  const std::string w = "tomogram";
  if (!doc.is_object() || doc.value("schema", "") != "tomo-spin-tomogram/1") {
    bad_field(w, "expected schema tomo-spin-tomogram/1");
  }
  SpinTomogram tom;
  tom.spin = HalfInt::from_double(number(field(doc, "j", w), w + ".j"));
  tom.band_limit = integer(field(doc, "band_limit", w), w + ".band_limit");
  const json& dirs = field(doc, "directions", w);
  const json& vals = field(doc, "values", w);
  if (!dirs.is_array() || !vals.is_array() || dirs.size() != vals.size()) {
    bad_field(w, "directions and values must be arrays of equal length");
  }
  const std::size_t d = static_cast<std::size_t>(tom.dimension());
  for (std::size_t n = 0; n < dirs.size(); ++n) {
    const std::string dw = w + ".directions[" + std::to_string(n) + "]";
    if (!dirs[n].is_array() || dirs[n].size() != 3) bad_field(dw, "expected [phi, theta, weight]");
    tom.directions.push_back({number(dirs[n][0], dw), number(dirs[n][1], dw)});
    tom.weights.push_back(number(dirs[n][2], dw));
    const std::string vw = w + ".values[" + std::to_string(n) + "]";
    if (!vals[n].is_array() || vals[n].size() != d) bad_field(vw, "expected " + std::to_string(d) + " values");
    for (std::size_t m = 0; m < d; ++m) tom.values.push_back(number(vals[n][m], vw));
  }
  return tom;
}

Plan plan_spin_reconstruct(const json& p, const std::string& base_dir) {
  allow_only(p, {"j", "state", "band_limit", "tomogram"}, "params");
  const json* state = optional(p, "state");
  const json* file = optional(p, "tomogram");
  if ((state == nullptr) == (file == nullptr)) bad_field("params", "expected exactly one of state, tomogram");
  SpinTomogram tom;
  std::optional<DensityMatrix> truth;
  if (state) {
    truth = spin_state(*state, "params.state");
    const HalfInt j = check_spin(p, *truth);
    tom = tomogram(*truth, sphere_quadrature(band_limit(p, j)));
  } else {
    std::filesystem::path path = text(*file, "params.tomogram");
    if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
    tom = read_tomogram(path.string());
  }
  return [tom, truth](const Target& t) {
    const Reconstruction rec = reconstruct(tom);
    const CMatrix& rho = rec.rho.entries;
    Result r;
    const double err = truth ? max_abs(rho - truth->entries) : 0.0;
    if (t.format == "csv") {
      CsvWriter csv({"row", "col", "re", "im"});
      for (Eigen::Index a = 0; a < rho.rows(); ++a) {
        for (Eigen::Index b = 0; b < rho.cols(); ++b) {
          csv.row({static_cast<double>(a), static_cast<double>(b), rho(a, b).real(), rho(a, b).imag()});
        }
      }
      r.files.push_back({t.path, csv.str()});
    } else {
      json doc = {{"schema", "tomo-density/1"}, {"j", tom.spin.value()}, {"rho", encode(rho)},
                  {"asymmetry", rec.asymmetry}};
      if (truth) doc["max_error"] = err;
      r.files.push_back({t.path, dump(doc)});
    }
    r.summary = "spin-reconstruct: j=" + plain(tom.spin.value()) + " dim=" + std::to_string(rho.rows()) +
                " asymmetry=" + sci(rec.asymmetry);
    if (truth) r.summary += " max_error=" + sci(err);
    return r;
  };
}

HermitianHamiltonian hamiltonian(const json& p) {
  return HermitianHamiltonian::make(cmatrix(field(p, "hamiltonian", "params"), "params.hamiltonian"));
}

Plan plan_evolve(const json& p) {
  allow_only(p, {"hamiltonian", "psi0", "phase_point", "t_max", "steps"}, "params");
  const HermitianHamiltonian H = hamiltonian(p);
  const json* psi = optional(p, "psi0");
  const json* point = optional(p, "phase_point");
  if ((psi == nullptr) == (point == nullptr)) bad_field("params", "expected exactly one of psi0, phase_point");
  Spinor psi0;
  if (psi) {
    psi0 = Spinor{cvector(*psi, "params.psi0")};
  } else {
    allow_only(*point, {"p", "x"}, "params.phase_point");
    const CVector pp = cvector(field(*point, "p", "params.phase_point"), "params.phase_point.p");
    const CVector xx = cvector(field(*point, "x", "params.phase_point"), "params.phase_point.x");
    if (pp.size() != xx.size()) bad_field("params.phase_point", "p and x lengths differ");
    psi0 = phase_to_spinor(PhaseSpacePoint::from_px(pp.real(), xx.real()));
  }
  if (psi0.size() != H.size()) {
    fail(ErrorKind::Validation, "initial state has " + std::to_string(psi0.size()) + " components, H is " +
                                    std::to_string(H.size()) + "x" + std::to_string(H.size()));
  }
  const double t_max = number(field(p, "t_max", "params"), "params.t_max");
  const int steps = optional(p, "steps") ? integer(p["steps"], "params.steps") : 100;
  if (steps < 1) fail(ErrorKind::Validation, "steps must be at least 1");

  return [H, psi0, t_max, steps](const Target& t) {
    const FlowMatrix A = build_A(build_B(H));
    const PhaseSpacePoint q0 = spinor_to_phase(psi0);
    const Eigen::Index n = H.size();
    std::vector<std::string> cols{"t"};
    for (Eigen::Index k = 1; k <= n; ++k) cols.push_back("re_psi_" + std::to_string(k));
    for (Eigen::Index k = 1; k <= n; ++k) cols.push_back("im_psi_" + std::to_string(k));
    for (Eigen::Index k = 1; k <= n; ++k) cols.push_back("p_" + std::to_string(k));
    for (Eigen::Index k = 1; k <= n; ++k) cols.push_back("x_" + std::to_string(k));
    cols.push_back("residual");
    CsvWriter csv(cols);
    json jt = json::array(), jpsi = json::array(), jp = json::array(), jx = json::array(), jr = json::array();
    double worst = 0.0;
    for (int s = 0; s <= steps; ++s) {
      const double time = t_max * s / steps;
      const Spinor psi = evolve_quantum(H, psi0, time);
      const PhaseSpacePoint q = evolve_classical(A, q0, time);
      const double res = (spinor_to_phase(psi).coordinates() - q.coordinates()).cwiseAbs().maxCoeff();
      worst = std::max(worst, res);
      std::vector<double> row{time};
      for (Eigen::Index k = 0; k < n; ++k) row.push_back(psi.amplitudes(k).real());
      for (Eigen::Index k = 0; k < n; ++k) row.push_back(psi.amplitudes(k).imag());
      for (Eigen::Index k = 0; k < n; ++k) row.push_back(q.p()(k));
      for (Eigen::Index k = 0; k < n; ++k) row.push_back(q.x()(k));
      row.push_back(res);
      csv.row(row);
      jt.push_back(time);
      jpsi.push_back(encode(psi.amplitudes));
      jp.push_back(std::vector<double>(q.p().data(), q.p().data() + n));
      jx.push_back(std::vector<double>(q.x().data(), q.x().data() + n));
      jr.push_back(res);
    }
    Result r;
    if (t.format == "csv") {
      r.files.push_back({t.path, csv.str()});
    } else {
      r.files.push_back({t.path, dump({{"schema", "tomo-trajectory/1"}, {"t", jt}, {"psi", jpsi}, {"p", jp},
                                       {"x", jx}, {"residual", jr}})});
    }
    r.summary = "evolve: N=" + std::to_string(n) + " steps=" + std::to_string(steps) + " t_max=" + plain(t_max) +
                " max_residual=" + sci(worst);
    return r;
  };
}

Plan plan_energies(const json& p) {
  allow_only(p, {"hamiltonian"}, "params");
  const HermitianHamiltonian H = hamiltonian(p);
  return [H](const Target& t) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(H.entries);
    const RVector e = es.eigenvalues();
    const std::vector<double> freq = normal_mode_frequencies(build_A(build_B(H)));
    std::vector<double> mag;
    for (Eigen::Index k = 0; k < e.size(); ++k) mag.push_back(std::abs(e(k)));
    std::sort(mag.begin(), mag.end());
    double mismatch = 0.0;
    for (std::size_t k = 0; k < mag.size(); ++k) mismatch = std::max(mismatch, std::abs(mag[k] - freq[k]));
    Result r;
    json doc = {{"schema", "tomo-energies/1"},
                {"energies", std::vector<double>(e.data(), e.data() + e.size())},
                {"mode_frequencies", freq},
                {"mode_mismatch", mismatch}};
    if (H.size() == 2) {
      const auto tl = two_level_energies(H.entries(0, 0).real(), H.entries(0, 1), H.entries(1, 1).real());
      doc["two_level"] = {{"upper", tl.upper}, {"lower", tl.lower}};
    }
    if (t.format == "csv") {
      CsvWriter csv({"index", "energy", "mode_frequency"});
      for (Eigen::Index k = 0; k < e.size(); ++k) {
        csv.row({static_cast<double>(k), e(k), freq[static_cast<std::size_t>(k)]});
      }
      r.files.push_back({t.path, csv.str()});
    } else {
      r.files.push_back({t.path, dump(doc)});
    }
    std::string spec;
    for (Eigen::Index k = 0; k < e.size(); ++k) spec += (k ? "," : "") + plain(e(k));
    r.summary = "energies: N=" + std::to_string(e.size()) + " spectrum=[" + spec + "] max|freq - |E||=" + sci(mismatch);
    return r;
  };
}

Plan plan_transform(const json& p) {
  allow_only(p, {"symplectic", "generator", "point", "psi"}, "params");
  const int given = (optional(p, "symplectic") ? 1 : 0) + (optional(p, "generator") ? 1 : 0) + (optional(p, "point") ? 1 : 0);
  if (given != 1) bad_field("params", "expected exactly one of symplectic, generator, point");
  RMatrix lambda;
  BogolyubovPair uv;
  if (auto* s = optional(p, "symplectic")) {
    const RMatrix m = rmatrix(*s, "params.symplectic");
    if (m.rows() % 2) fail(ErrorKind::Validation, "symplectic matrix must have even size");
    const SymplecticMatrix sm = validate_symplectic(m);
    lambda = sm.matrix();
    uv = uv_from_symplectic(sm);
  } else if (auto* g = optional(p, "generator")) {
    const RMatrix s = rmatrix(*g, "params.generator");
    if (s.rows() % 2) fail(ErrorKind::Validation, "generator must have even size");
    if (max_abs(s - s.transpose()) > 1e-12) fail(ErrorKind::Validation, "generator not symmetric");
    const SymplecticMatrix sm = validate_symplectic(symplectic_from_generator(s));
    lambda = sm.matrix();
    uv = uv_from_symplectic(sm);
  } else {
    const RMatrix l1 = rmatrix(p["point"], "params.point");
    uv = point_transform_uv(l1);
    const Eigen::Index n = l1.rows();
    lambda = RMatrix::Zero(2 * n, 2 * n);
    lambda.topLeftCorner(n, n) = l1;
    lambda.bottomRightCorner(n, n) = l1.inverse().transpose();
  }
  const Spinor psi{cvector(field(p, "psi", "params"), "params.psi")};
  if (psi.size() != uv.u.rows()) {
    fail(ErrorKind::Validation, "psi has " + std::to_string(psi.size()) + " components, transform acts on " +
                                    std::to_string(uv.u.rows()) + " modes");
  }
  return [lambda, uv, psi](const Target& t) {
    const Spinor out = transform_spinor(uv, psi);
    const RVector q = lambda * spinor_to_phase(psi).coordinates();
    const double diagram = (phase_to_spinor(PhaseSpacePoint(q)).amplitudes - out.amplitudes).cwiseAbs().maxCoeff();
    const auto res = bogolyubov_residuals(uv);
    const CMatrix rho = transform_density(uv, pure_density(psi, false), conjugate_moment(psi));
    Result r;
    if (t.format == "csv") {
      CsvWriter csv({"k", "re_psi", "im_psi", "re_psi_out", "im_psi_out"});
      for (Eigen::Index k = 0; k < psi.size(); ++k) {
        csv.row({static_cast<double>(k), psi.amplitudes(k).real(), psi.amplitudes(k).imag(),
                 out.amplitudes(k).real(), out.amplitudes(k).imag()});
      }
      r.files.push_back({t.path, csv.str()});
    } else {
      json doc = {{"schema", "tomo-transform/1"},
                  {"u", encode(uv.u)},
                  {"v", encode(uv.v)},
                  {"psi_out", encode(out.amplitudes)},
                  {"rho_out", encode(rho)},
                  {"norm_squared_out", out.norm_squared()},
                  {"residuals", {{"unitarity", res.unitarity}, {"symmetry", res.symmetry}, {"diagram", diagram}}}};
      r.files.push_back({t.path, dump(doc)});
    }
    r.summary = "transform: N=" + std::to_string(psi.size()) + " |psi'|^2=" + plain(out.norm_squared()) +
                " unitarity=" + sci(res.unitarity) + " symmetry=" + sci(res.symmetry) + " diagram=" + sci(diagram);
    return r;
  };
}

const Grid1D kDefaultY(-8.0, 8.0, 512);
const Grid1D kDefaultP(-6.0, 6.0, 256);

void sidecar(Result& r, const Target& t, const json& meta, const std::string& csv, const json& arrays) {
  if (t.format == "csv") {
    r.files.push_back({t.path, csv});
    r.files.push_back({t.path + ".json", dump(meta)});
  } else {
    json doc = meta;
    doc.update(arrays);
    r.files.push_back({t.path, dump(doc)});
  }
}

Plan plan_cv_tomogram(const json& p) {
  allow_only(p, {"state", "grid", "x_grid", "p_grid", "mu", "nu", "route"}, "params");
  const Grid1D y = grid(optional(p, "grid"), "params.grid", kDefaultY);
  const Grid1D x = grid(optional(p, "x_grid"), "params.x_grid", y);
  const Grid1D pg = grid(optional(p, "p_grid"), "params.p_grid", kDefaultP);
  const CvState state = cv_state(field(p, "state", "params"), y);
  const TomographyAxis axis = TomographyAxis::make(number(field(p, "mu", "params"), "params.mu"),
                                                   number(field(p, "nu", "params"), "params.nu"));
  const std::string route = optional(p, "route") ? text(p["route"], "params.route") : "wavefunction";
  if (route != "wavefunction" && route != "density" && route != "wigner") {
    bad_field("params.route", "expected wavefunction, density or wigner");
  }
  return [y, x, pg, state, axis, route](const Target& t) {
    std::vector<double> w;
    if (route == "wavefunction") {
      w = tomogram_wavefunction(state.psi, axis, x);
    } else if (route == "density") {
      w = tomogram_density(DensityGrid::from_wavefunction(state.psi), axis, x);
    } else {
      w = tomogram_from_wigner(wigner_from_density(DensityGrid::from_wavefunction(state.psi), pg), axis, x);
    }
    double low = 1e300, analytic = 0.0;
    CsvWriter csv({"X", "w"});
    std::vector<double> xs;
    for (int i = 0; i < x.size(); ++i) {
      const double wi = w[static_cast<std::size_t>(i)];
      csv.row({x.point(i), wi});
      xs.push_back(x.point(i));
      low = std::min(low, wi);
      if (state.gaussian) analytic = std::max(analytic, std::abs(wi - coherent_tomogram(x.point(i), axis, state.q0, state.p0)));
    }
    const double integral = trapezoid(x, w);
    json meta = {{"schema", "tomo-cv-tomogram/1"}, {"state", state.label}, {"route", route},
                 {"axis", {{"mu", axis.mu}, {"nu", axis.nu}}}, {"grid", encode(y)}, {"x_grid", encode(x)},
                 {"integral", integral}, {"min_w", low}};
    if (route == "wigner") meta["p_grid"] = encode(pg);
    if (state.gaussian) meta["analytic_max_error"] = analytic;
    Result r;
    sidecar(r, t, meta, csv.str(), {{"X", xs}, {"w", w}});
    r.summary = "cv-tomogram: route=" + route + " axis=(" + plain(axis.mu) + ", " + plain(axis.nu) +
                ") points=" + std::to_string(x.size()) + " integral=" + plain(integral) + " min w=" + sci(low);
    if (state.gaussian) r.summary += " analytic_error=" + sci(analytic);
    return r;
  };
}

Plan plan_wigner(const json& p) {
  allow_only(p, {"state", "grid", "p_grid", "q_stride"}, "params");
  const Grid1D y = grid(optional(p, "grid"), "params.grid", kDefaultY);
  const Grid1D pg = grid(optional(p, "p_grid"), "params.p_grid", kDefaultP);
  const CvState state = cv_state(field(p, "state", "params"), y);
  const int stride = optional(p, "q_stride") ? integer(p["q_stride"], "params.q_stride") : 4;
  if (stride < 1) fail(ErrorKind::Validation, "q_stride must be at least 1");
  return [state, pg, stride](const Target& t) {
    const WignerGrid w = wigner_from_density(DensityGrid::from_wavefunction(state.psi), pg);
    CsvWriter csv({"q", "p", "W"});
    json qs = json::array(), vals = json::array();
    for (int i = 0; i < w.qgrid.size(); i += stride) {
      qs.push_back(w.qgrid.point(i));
      json row = json::array();
      for (int k = 0; k < w.pgrid.size(); ++k) {
        csv.row({w.qgrid.point(i), w.pgrid.point(k), w.values(i, k)});
        row.push_back(w.values(i, k));
      }
      vals.push_back(row);
    }
    json ps = json::array();
    for (int k = 0; k < w.pgrid.size(); ++k) ps.push_back(w.pgrid.point(k));
    const double norm = w.normalization();
    json meta = {{"schema", "tomo-wigner/1"}, {"state", state.label}, {"q_grid", encode(w.qgrid)},
                 {"p_grid", encode(w.pgrid)}, {"q_stride", stride}, {"normalization", norm},
                 {"imag_residual", w.imag_residual}};
    Result r;
    sidecar(r, t, meta, csv.str(), {{"q", qs}, {"p", ps}, {"W", vals}});
    r.summary = "wigner: q=" + std::to_string(w.qgrid.size()) + " p=" + std::to_string(w.pgrid.size()) +
                " normalization=" + plain(norm) + " imag_residual=" + sci(w.imag_residual);
    return r;
  };
}

Plan plan_verify(const json& p) {
  allow_only(p, {"seed"}, "params");
  const std::uint64_t seed = optional(p, "seed") ? static_cast<std::uint64_t>(integer(p["seed"], "params.seed")) : 20260401;
  return [seed](const Target& t) {
    const auto checks = run_self_checks(seed);
    Result r;
    int failed = 0;
    std::string csv = "check,passed,metric,tolerance\n";
    json list = json::array();
    for (const auto& c : checks) {
      if (!c.passed) ++failed;
      csv += c.name + "," + (c.passed ? "1" : "0") + "," + format_double(c.metric) + "," + format_double(c.tolerance) + "\n";
      list.push_back({{"check", c.name}, {"passed", c.passed}, {"metric", c.metric}, {"tolerance", c.tolerance}});
    }
    if (!t.path.empty()) {
      r.files.push_back({t.path, t.format == "csv" ? csv : dump({{"schema", "tomo-verify/1"}, {"checks", list}})});
    }
    r.summary = "verify: " + std::to_string(checks.size() - static_cast<std::size_t>(failed)) + "/" +
                std::to_string(checks.size()) + " checks passed";
    for (const auto& c : checks) {
      if (!c.passed) r.summary += "; FAILED " + c.name + " (" + sci(c.metric) + " > " + sci(c.tolerance) + ")";
    }
    r.status = failed ? exit_code(ErrorKind::Internal) : 0;
    return r;
  };
}

}  // namespace

struct Scenario::Impl {
  json doc;
  std::string base_dir;
  std::string kind;
  Target target;
  Plan plan;

  void prepare() {
    if (!doc.is_object()) bad_field("<root>", "expected an object");
    allow_only(doc, {"schema", "kind", "params", "output"}, "<root>");
    const std::string schema = text(field(doc, "schema", "<root>"), "schema");
    if (schema != kSchema) bad_field("schema", "unsupported '" + schema + "', expected '" + kSchema + "'");
    kind = text(field(doc, "kind", "<root>"), "kind");
    if (std::find(kKinds.begin(), kKinds.end(), kind) == kKinds.end()) bad_field("kind", "unknown kind '" + kind + "'");
    if (!doc.contains("params")) doc["params"] = json::object();
    const json& p = doc["params"];
    if (!p.is_object()) bad_field("params", "expected an object");

    target = {};
    if (auto* out = optional(doc, "output")) {
      allow_only(*out, {"path", "format"}, "output");
      if (auto* path = optional(*out, "path")) target.path = text(*path, "output.path");
      if (auto* fmt = optional(*out, "format")) target.format = text(*fmt, "output.format");
    }
    if (target.format.empty()) target.format = "csv";
    if (target.format != "csv" && target.format != "json") bad_field("output.format", "expected csv or json");
    if (target.path.empty() && kind != "verify") bad_field("output.path", "missing");

    if (kind == "spin-tomogram") plan = plan_spin_tomogram(p);
    else if (kind == "spin-reconstruct") plan = plan_spin_reconstruct(p, base_dir);
    else if (kind == "evolve") plan = plan_evolve(p);
    else if (kind == "energies") plan = plan_energies(p);
    else if (kind == "transform") plan = plan_transform(p);
    else if (kind == "cv-tomogram") plan = plan_cv_tomogram(p);
    else if (kind == "wigner") plan = plan_wigner(p);
    else plan = plan_verify(p);
  }

  // Validates an edited document; on failure restores `saved` and rethrows.
  void reprepare(const json& saved) {
    try {
      prepare();
    } catch (...) {
      doc = saved;
      prepare();
      throw;
    }
  }
};

Scenario::Scenario(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
Scenario::Scenario(Scenario&&) noexcept = default;
Scenario& Scenario::operator=(Scenario&&) noexcept = default;
Scenario::~Scenario() = default;

Scenario Scenario::parse(const std::string& source, const std::string& base_dir) {
  auto impl = std::make_unique<Impl>();
  try {
    impl->doc = json::parse(source);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < source.size(); ++i) {
      if (source[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorKind::Parse, "JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  impl->base_dir = base_dir;
  impl->prepare();
  return Scenario(std::move(impl));
}

Scenario Scenario::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot open scenario file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), std::filesystem::path(path).parent_path().string());
}

const std::string& Scenario::kind() const { return impl_->kind; }

void Scenario::set(const std::string& key, const std::string& value) {
  if (key.empty()) fail(ErrorKind::Parse, "empty override key");
  json v;
  try {
    v = json::parse(value);
  } catch (const json::parse_error&) {
    v = value;
  }
  if (v.is_object() || v.is_array()) fail(ErrorKind::Parse, "override for '" + key + "' must be a scalar");
  const json saved = impl_->doc;
  json edited = saved;
  json* node = &edited["params"];
  std::string rest = key;
  for (std::size_t dot; (dot = rest.find('.')) != std::string::npos; rest = rest.substr(dot + 1)) {
    node = &(*node)[rest.substr(0, dot)];
    if (node->is_null()) *node = json::object();
    if (!node->is_object()) fail(ErrorKind::Parse, "override path '" + key + "' crosses a non-object field");
  }
  json& leaf = (*node)[rest];
  if (leaf.is_object() || leaf.is_array()) fail(ErrorKind::Parse, "field 'params." + key + "' is not scalar");
  leaf = v;
  impl_->doc = std::move(edited);
  impl_->reprepare(saved);
}

void Scenario::set_output(const std::string& path, const std::string& format) {
  const json saved = impl_->doc;
  json& out = impl_->doc["output"];
  if (!out.is_object()) out = json::object();
  if (!path.empty()) out["path"] = path;
  if (!format.empty()) out["format"] = format;
  impl_->reprepare(saved);
}

Scenario::Outcome Scenario::execute() const {
  Result r = impl_->plan(impl_->target);
  write_atomic(r.files);
  Outcome o;
  o.status = r.status;
  o.summary = r.summary;
  for (const auto& f : r.files) o.paths.push_back(f.path);
  return o;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Validation: return 3;
    case ErrorKind::Domain: return 3;
    case ErrorKind::Numerical: return 4;
    case ErrorKind::Internal: return 5;
  }
  return 5;
}

}  // namespace tomo
