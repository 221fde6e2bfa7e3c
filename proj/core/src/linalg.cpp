#include "gsr/linalg.hpp"

#include "gsr/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gsr::linalg {

double asymmetry(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.transpose()).cwiseAbs().maxCoeff();
}

void require_symmetric(const Matrix& m, double tol, std::string_view what) {
  if (m.rows() != m.cols()) {
    throw Error(Errc::DimensionMismatch, std::string(what) + " is not square");
  }
  if (m.size() == 0) return;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (asymmetry(m) > tol * scale) {
    throw Error(Errc::NotSymmetric, std::string(what) + " is not symmetric");
  }
}

double min_eigenvalue(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

void require_psd(const Matrix& m, double tol, std::string_view what) {
  if (m.size() == 0) return;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double norm = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
  if (ev(0) < -tol * std::max(1.0, norm)) {
    throw Error(Errc::NotPSD, std::string(what) + " has a negative eigenvalue",
                ev(0));
  }
}

Matrix pinv_symmetric(const Matrix& a, double rel_tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  const Vector& ev = es.eigenvalues();
  const double cutoff = rel_tol * ev.cwiseAbs().maxCoeff();
  Vector inv(ev.size());
  for (Index i = 0; i < ev.size(); ++i) {
    inv(i) = std::abs(ev(i)) > cutoff ? 1.0 / ev(i) : 0.0;
  }
  const Matrix& u = es.eigenvectors();
  return u * inv.asDiagonal() * u.transpose();
}

Vector solve_symmetric(const Matrix& a, const Vector& b, double pinv_tol) {
  if (a.rows() != a.cols() || a.rows() != b.size()) {
    throw Error(Errc::DimensionMismatch, "solve_symmetric: shape mismatch");
  }
  Eigen::LDLT<Matrix> ldlt(a);
  if (ldlt.info() == Eigen::Success && ldlt.rcond() > pinv_tol) {
    return ldlt.solve(b);
  }
  return pinv_symmetric(a, pinv_tol) * b;
}

Matrix sqrt_psd(const Matrix& a, double clamp) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  Vector ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  for (Index i = 0; i < ev.size(); ++i) {
    if (ev(i) < -clamp * scale) {
      throw Error(Errc::NotPSD, "sqrt_psd: matrix has a negative eigenvalue", ev(i));
    }
    ev(i) = ev(i) > 0.0 ? std::sqrt(ev(i)) : 0.0;
  }
  const Matrix& u = es.eigenvectors();
  return u * ev.asDiagonal() * u.transpose();
}

Matrix pinv_sqrt_psd(const Matrix& a, double rel_tol) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  const Vector& ev = es.eigenvalues();
  const double cutoff = rel_tol * std::max(0.0, ev.maxCoeff());
  Vector inv(ev.size());
  for (Index i = 0; i < ev.size(); ++i) {
    inv(i) = ev(i) > cutoff && ev(i) > 0.0 ? 1.0 / std::sqrt(ev(i)) : 0.0;
  }
  const Matrix& u = es.eigenvectors();
  return u * inv.asDiagonal() * u.transpose();
}

Matrix principal(const Matrix& m, std::span<const Index> idx) {
  const Index s = static_cast<Index>(idx.size());
  Matrix out(s, s);
  for (Index j = 0; j < s; ++j)
    for (Index i = 0; i < s; ++i) out(i, j) = m(idx[i], idx[j]);
  return out;
}

Matrix columns(const Matrix& m, std::span<const Index> idx) {
  Matrix out(m.rows(), static_cast<Index>(idx.size()));
  for (std::size_t j = 0; j < idx.size(); ++j) out.col(static_cast<Index>(j)) = m.col(idx[j]);
  return out;
}

Vector scatter(std::span<const Index> idx, const Vector& v, Index n) {
  Vector out = Vector::Zero(n);
  for (std::size_t s = 0; s < idx.size(); ++s) out(idx[s]) = v(static_cast<Index>(s));
  return out;
}

Vector gather(const Vector& v, std::span<const Index> idx) {
  Vector out(static_cast<Index>(idx.size()));
  for (std::size_t s = 0; s < idx.size(); ++s) out(static_cast<Index>(s)) = v(idx[s]);
  return out;
}

double condition_psd(const Matrix& m) {
  if (m.size() == 0) return 1.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  const double lo = ev(0);
  const double hi = ev(ev.size() - 1);
  if (lo <= 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

}  // namespace gsr::linalg
