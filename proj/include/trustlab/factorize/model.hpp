#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trustlab/io.hpp"
#include "trustlab/matrix.hpp"

namespace trustlab {

enum class ModelKind { matrix, cp3 };

// Matrix-kind prediction form: symmetric-factor U H U^T (MF, hTrust, sTrust,
// SETTrust) or bilinear U H^T with per-user target rows (Zheng).
enum class MatrixForm { sym_uhut, bilinear };

// Which sign of (degree x prediction) a hinge regularizer penalizes.
// penalize_positive realizes max{0,y}^2, penalize_negative realizes min{0,y}^2.
enum class HingeDir { penalize_positive, penalize_negative };

// One of the pluggable regularizers. Strengths stay in the spec that built
// them; the solver reads whatever its kind needs.
struct RegularizerSpec {
  enum class Kind { none, homophily, status, context_indicator, set, td, personality };

  Kind kind = Kind::none;
  double lambda = 0.0;  // homophily / status / set / td strength
  double beta = 0.0;    // personality strength
  double eta = 0.0;     // context-indicator weight on other-context edges

  Matrix zeta;                    // homophily: pairwise similarity, n x n
  bool printed_homophily = false; // use the raw +lambda*Tr(U^T zeta U) form
  std::vector<double> ranks;      // status: PageRank score per user
  Matrix indicator_other;         // context_indicator: 1 iff edge in another context
  Matrix degrees;                 // set: SET degree per ordered pair
  Tensor3 degrees3;               // td / personality: degree per (i,j,c)
  HingeDir hinge = HingeDir::penalize_negative;

  static RegularizerSpec none() { return {}; }

  static RegularizerSpec homophily(Matrix zeta, double lambda, bool printed_form = false) {
    RegularizerSpec r;
    r.kind = Kind::homophily;
    r.zeta = std::move(zeta);
    r.lambda = lambda;
    r.printed_homophily = printed_form;
    return r;
  }

  static RegularizerSpec status(std::vector<double> ranks, double lambda) {
    RegularizerSpec r;
    r.kind = Kind::status;
    r.ranks = std::move(ranks);
    r.lambda = lambda;
    r.hinge = HingeDir::penalize_positive;  // penalizes status violations
    return r;
  }

  static RegularizerSpec context_indicator(Matrix other_context_edges, double eta) {
    RegularizerSpec r;
    r.kind = Kind::context_indicator;
    r.indicator_other = std::move(other_context_edges);
    r.eta = eta;
    return r;
  }

  // Default direction penalizes predicted trust where the degree is negative
  // (benefit below cost). The printed formula's direction — which, with
  // non-negative predictions, punishes the *positive*-degree pairs instead —
  // stays available for comparison via `dir`.
  static RegularizerSpec set(Matrix degrees, double lambda,
                             HingeDir dir = HingeDir::penalize_negative) {
    RegularizerSpec r;
    r.kind = Kind::set;
    r.degrees = std::move(degrees);
    r.lambda = lambda;
    r.hinge = dir;
    return r;
  }

  static RegularizerSpec td(Tensor3 degrees, double lambda,
                            HingeDir dir = HingeDir::penalize_negative) {
    RegularizerSpec r;
    r.kind = Kind::td;
    r.degrees3 = std::move(degrees);
    r.lambda = lambda;
    r.hinge = dir;
    return r;
  }

  // Builds the per-slice weight (V_ip + V_jp) * SV_ij from the trait matrix
  // V (n x 5) and the trait-similarity matrix SV (n x n).
  static RegularizerSpec personality(const Matrix& v, const Matrix& sv, double beta,
                                     bool source_only = false,
                                     HingeDir dir = HingeDir::penalize_negative) {
    RegularizerSpec r;
    r.kind = Kind::personality;
    r.beta = beta;
    r.hinge = dir;
    const int n = v.rows();
    r.degrees3 = Tensor3(n, n, 5, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int p = 0; p < 5; ++p) {
          const double vij = source_only ? v(i, p) : v(i, p) + v(j, p);
          r.degrees3(i, j, p) = vij * sv(i, j);
        }
      }
    return r;
  }

  // Strength actually applied to the hinge weight for tensor kinds.
  double strength() const { return kind == Kind::personality ? beta : lambda; }
};

struct FitDiagnostics {
  std::vector<double> trace;  // objective at init and after every factor step
  int iterations = 0;         // full update sweeps performed
  bool converged = false;
};

struct FactorModel {
  ModelKind kind = ModelKind::matrix;
  MatrixForm form = MatrixForm::sym_uhut;
  int n = 0, f = 0, k = 1;
  Matrix U, H;         // matrix kind (H is f x f for sym_uhut, n x f for bilinear)
  Matrix U1, U2, C;    // cp3 kind (U1, U2: n x f, C: k x f)
  double alpha = 0.0, lambda = 0.0, beta = 0.0, eta = 0.0;
  std::uint64_t seed = 0;
  FitDiagnostics diag;
};

inline Matrix predict_scores_matrix(const FactorModel& m) {
  if (m.kind != ModelKind::matrix)
    throw std::invalid_argument("predict_scores_matrix: not a matrix model");
  if (m.form == MatrixForm::sym_uhut) return matmul_nt(matmul(m.U, m.H), m.U);
  return matmul_nt(m.U, m.H);
}

inline Tensor3 predict_scores_cp3(const FactorModel& m) {
  if (m.kind != ModelKind::cp3)
    throw std::invalid_argument("predict_scores_cp3: not a cp3 model");
  const int n1 = m.U1.rows(), n2 = m.U2.rows(), k = m.C.rows(), f = m.f;
  Tensor3 g(n1, n2, k, 0.0);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      for (int c = 0; c < k; ++c) {
        double s = 0.0;
        for (int r = 0; r < f; ++r) s += m.U1(i, r) * m.U2(j, r) * m.C(c, r);
        g(i, j, c) = s;
      }
  return g;
}

namespace detail {

inline void write_factor(std::string& out, const char* name, const Matrix& m) {
  out += std::string("factor ") + name + " " + std::to_string(m.rows()) + " " +
         std::to_string(m.cols()) + "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out += (j ? " " : "") + fmt_g17(m(i, j));
    out += "\n";
  }
}

}  // namespace detail

// Decimal-text serialization; %.17g values make the reload exact, so a
// reloaded model reproduces predict scores bit-for-bit.
inline void save_model(const std::string& path, const FactorModel& m) {
  std::string out = "trustlab-model v1\n";
  out += std::string("kind ") + (m.kind == ModelKind::matrix ? "matrix" : "cp3") + "\n";
  out += std::string("form ") + (m.form == MatrixForm::sym_uhut ? "sym" : "bilinear") + "\n";
  out += "n " + std::to_string(m.n) + " f " + std::to_string(m.f) + " k " +
         std::to_string(m.k) + "\n";
  out += "alpha " + fmt_g17(m.alpha) + " lambda " + fmt_g17(m.lambda) + " beta " +
         fmt_g17(m.beta) + " eta " + fmt_g17(m.eta) + "\n";
  out += "seed " + std::to_string(m.seed) + "\n";
  out += "iterations " + std::to_string(m.diag.iterations) + " converged " +
         std::to_string(m.diag.converged ? 1 : 0) + "\n";
  if (m.kind == ModelKind::matrix) {
    detail::write_factor(out, "U", m.U);
    detail::write_factor(out, "H", m.H);
  } else {
    detail::write_factor(out, "U1", m.U1);
    detail::write_factor(out, "U2", m.U2);
    detail::write_factor(out, "C", m.C);
  }
  out += "end\n";
  write_file_atomic(path, out);
}

inline FactorModel load_model(const std::string& path) {
  auto lines = read_lines(path);
  std::size_t at = 0;
  auto next = [&]() -> std::string {
    if (at >= lines.size()) throw std::runtime_error(path + ": truncated model file");
    return lines[at++];
  };
  if (next() != "trustlab-model v1") throw std::runtime_error(path + ": not a model file");
  FactorModel m;
  {
    std::istringstream ss(next());
    std::string tag, v;
    ss >> tag >> v;
    m.kind = v == "matrix" ? ModelKind::matrix : ModelKind::cp3;
  }
  {
    std::istringstream ss(next());
    std::string tag, v;
    ss >> tag >> v;
    m.form = v == "sym" ? MatrixForm::sym_uhut : MatrixForm::bilinear;
  }
  {
    std::istringstream ss(next());
    std::string t1, t2, t3;
    ss >> t1 >> m.n >> t2 >> m.f >> t3 >> m.k;
  }
  {
    std::istringstream ss(next());
    std::string t;
    ss >> t >> m.alpha >> t >> m.lambda >> t >> m.beta >> t >> m.eta;
  }
  {
    std::istringstream ss(next());
    std::string t;
    ss >> t >> m.seed;
  }
  {
    std::istringstream ss(next());
    std::string t;
    int conv = 0;
    ss >> t >> m.diag.iterations >> t >> conv;
    m.diag.converged = conv != 0;
  }
  while (true) {
    std::string line = next();
    if (line == "end") break;
    std::istringstream ss(line);
    std::string tag, name;
    int rows = 0, cols = 0;
    ss >> tag >> name >> rows >> cols;
    if (tag != "factor") throw std::runtime_error(path + ": expected factor header, got: " + line);
    Matrix f(rows, cols);
    for (int i = 0; i < rows; ++i) {
      std::istringstream row(next());
      for (int j = 0; j < cols; ++j)
        if (!(row >> f(i, j))) throw std::runtime_error(path + ": short factor row");
    }
    if (name == "U") m.U = std::move(f);
    else if (name == "H") m.H = std::move(f);
    else if (name == "U1") m.U1 = std::move(f);
    else if (name == "U2") m.U2 = std::move(f);
    else if (name == "C") m.C = std::move(f);
    else throw std::runtime_error(path + ": unknown factor '" + name + "'");
  }
  return m;
}

}  // namespace trustlab
