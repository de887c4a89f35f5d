#include "ssbjt/phasebook.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "ssbjt/errors.hpp"

namespace ssbjt {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Sylvester construction; n must be 1, 2 or 4 here.
Eigen::MatrixXd hadamard_phases(int n) {
  Eigen::MatrixXi h(1, 1);
  h(0, 0) = 1;
  while (h.rows() < n) {
    Eigen::MatrixXi next(2 * h.rows(), 2 * h.cols());
    next << h, h, h, -h;
    h = std::move(next);
  }
  return (h.array() < 0).cast<double>() * kPi;
}

void sort_rows_lexicographic(Eigen::MatrixXd& m) {
  std::vector<int> order(m.rows());
  for (int i = 0; i < m.rows(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&m](int a, int b) {
    for (int c = 0; c < m.cols(); ++c) {
      if (m(a, c) != m(b, c)) return m(a, c) < m(b, c);
    }
    return false;
  });
  Eigen::MatrixXd sorted(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) sorted.row(i) = m.row(order[i]);
  m = std::move(sorted);
}

}  // namespace

BeamCodebook dft_codebook(int n) {
  if (n < 1) throw InvalidValueError("n", "codebook size must be >= 1");
  BeamCodebook beams(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      const double phase = 2.0 * kPi * k * m / n;
      beams(k, m) = std::polar(scale, phase);
    }
  }
  return beams;
}

Eigen::MatrixXcd PhaseBook::amplitude_rows() const {
  return phases.unaryExpr(
      [](double theta) { return std::polar(1.0, theta); });
}

PhaseBook make_phase_book(int b) {
  if (b < 1) throw InvalidValueError("b", "phase book order must be >= 1");
  PhaseBook book;
  if (b <= 4 && is_power_of_two(b)) {
    book.phases = hadamard_phases(b);
  } else {
    // DFT rows: theta at BS j in row r is 2 pi r j / b. Unit-modulus and
    // mutually orthogonal for any order, with the first column zero.
    book.phases.resize(b, b);
    for (int r = 0; r < b; ++r)
      for (int j = 0; j < b; ++j)
        book.phases(r, j) = std::fmod(2.0 * kPi * r * j / b, 2.0 * kPi);
  }
  sort_rows_lexicographic(book.phases);
  return book;
}

double phase_book_orthogonality_error(const PhaseBook& book) {
  const Eigen::MatrixXcd rows = book.amplitude_rows();
  const Eigen::MatrixXcd gram = rows * rows.adjoint();
  const Eigen::MatrixXcd target = Eigen::MatrixXcd::Identity(
                                      book.rows(), book.rows()) *
                                  static_cast<double>(book.width());
  return (gram - target).cwiseAbs().maxCoeff();
}

}  // namespace ssbjt
