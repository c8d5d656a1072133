#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <complex>
#include <set>

#include "qtak/decomposer.hpp"
#include "qtak/error.hpp"
#include "qtak/kernels.hpp"

namespace qtak {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexMatrix = Eigen::MatrixXcd;

// Distinct right translations restricted to the orbit.
std::vector<const Permutation*> distinct_translations(const OrbitAction& action) {
  std::vector<const Permutation*> out;
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& r : action.restricted_maps) {
    if (seen.insert(r.images()).second) out.push_back(&r);
  }
  return out;
}

// p = (deg/|G|) sum_g chi(g) M(g), where M(g) e_b = e_{g(b)}.
RowMatrix projector(const OrbitAction& action, const CharacterTable& table, std::size_t irrep) {
  const std::size_t m = action.size();
  RowMatrix p = RowMatrix::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  const double scale = table.irreps()[irrep].degree() / static_cast<double>(action.inn.order());
  for (std::size_t e = 0; e < action.inn.order(); ++e) {
    const double chi = table.value(irrep, table.class_index(action.identification.labels[e]));
    if (chi == 0.0) continue;
    const Permutation& g = action.inn.element(e);
    for (std::size_t b = 0; b < m; ++b) p(g(b), static_cast<Eigen::Index>(b)) += scale * chi;
  }
  return p;
}

template <class Matrix>
std::int64_t numerical_rank(const Matrix& a, double threshold) {
  Eigen::BDCSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  std::int64_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) rank += s(i) > threshold;
  return rank;
}

// Y = M(r) p: row a of p moves to row r(a).
template <class Matrix>
Matrix permute_rows(const Permutation& r, const Matrix& p) {
  Matrix y(p.rows(), p.cols());
  for (Eigen::Index a = 0; a < p.rows(); ++a) y.row(r(static_cast<std::size_t>(a))) = p.row(a);
  return y;
}

OrbitVerification verify_real(const OrbitAction& action, const CharacterTable& table,
                              const std::vector<std::int64_t>& d, const Tolerances& tol) {
  const auto& k = kernels::active();
  const std::size_t m = action.size();
  const auto n = static_cast<Eigen::Index>(m);
  OrbitVerification out;
  RowMatrix sum = RowMatrix::Zero(n, n);
  RowMatrix product(n, n);
  const auto translations = distinct_translations(action);
  for (std::size_t i = 0; i < table.irreps().size(); ++i) {
    const RowMatrix p = projector(action, table, i);
    sum += p;
    k.gemm(p.data(), p.data(), product.data(), m);
    out.idempotent_residual = std::max(out.idempotent_residual, k.max_abs_diff(product.data(), p.data(), m * m));
    out.ranks.push_back(numerical_rank(p, tol.rank));
    out.expected_ranks.push_back(table.irreps()[i].degree() * d[i]);
    for (const Permutation* r : translations) {
      const RowMatrix y = permute_rows(*r, p);
      k.gemm(p.data(), y.data(), product.data(), m);
      out.closure_residual = std::max(out.closure_residual, k.max_abs_diff(y.data(), product.data(), m * m));
    }
  }
  const RowMatrix identity = RowMatrix::Identity(n, n);
  out.completeness_residual = k.max_abs_diff(sum.data(), identity.data(), m * m);
  return out;
}

OrbitVerification verify_complex(const OrbitAction& action, const CharacterTable& table,
                                 const std::vector<std::int64_t>& d, const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(action.size());
  OrbitVerification out;
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  const auto translations = distinct_translations(action);
  for (std::size_t i = 0; i < table.irreps().size(); ++i) {
    const ComplexMatrix p = projector(action, table, i).cast<std::complex<double>>();
    sum += p;
    out.idempotent_residual =
        std::max(out.idempotent_residual, (p * p - p).cwiseAbs().maxCoeff());
    out.ranks.push_back(numerical_rank(p, tol.rank));
    out.expected_ranks.push_back(table.irreps()[i].degree() * d[i]);
    for (const Permutation* r : translations) {
      const ComplexMatrix y = permute_rows(*r, p);
      out.closure_residual = std::max(out.closure_residual, (y - p * y).cwiseAbs().maxCoeff());
    }
  }
  out.completeness_residual = (sum - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  return out;
}

}  // namespace

VerificationRecord verify_right_ideals(const Decomposition& dec, Field field, const Tolerances& tol) {
  const auto& report = dec.report;
  if (dec.actions.size() != report.orbits.size()) {
    throw StructuralError("decomposition report does not match its orbit actions");
  }
  VerificationRecord rec;
  rec.field = field;
  for (std::size_t o = 0; o < dec.actions.size(); ++o) {
    const auto& action = dec.actions[o];
    const auto& d = report.orbits[o].multiplicities;
    OrbitVerification v = field == Field::real ? verify_real(action, report.table, d, tol)
                                               : verify_complex(action, report.table, d, tol);
    rec.idempotent_residual = std::max(rec.idempotent_residual, v.idempotent_residual);
    rec.completeness_residual = std::max(rec.completeness_residual, v.completeness_residual);
    rec.closure_residual = std::max(rec.closure_residual, v.closure_residual);
    rec.ranks_match = rec.ranks_match && v.ranks == v.expected_ranks;
    rec.orbits.push_back(std::move(v));
  }
  return rec;
}

}  // namespace qtak
