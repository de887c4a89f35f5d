#pragma once

#include <Eigen/Dense>

namespace ssbjt {

/// Columns are unit-norm DFT beams; beam m entry k = e^{i 2 pi k m / n} / sqrt(n).
using BeamCodebook = Eigen::MatrixXcd;

BeamCodebook dft_codebook(int n);

/// Ordered set of per-BS phase tuples. Row r gives the phase applied at
/// each BS during repetition r; the unit-modulus amplitude rows e^{i theta}
/// are mutually orthogonal, so cross terms cancel when the receiver sums
/// the repetitions. First column is always zero (reference BS).
struct PhaseBook {
  Eigen::MatrixXd phases;  // rows x B, radians

  int rows() const { return static_cast<int>(phases.rows()); }
  int width() const { return static_cast<int>(phases.cols()); }
  Eigen::MatrixXcd amplitude_rows() const;
};

/// Order-b complementary phase set: Hadamard phase patterns for b in
/// {1, 2, 4}, DFT rows otherwise. Rows sorted lexicographically.
PhaseBook make_phase_book(int b);

/// Max |Gram - b*I| of the amplitude rows; zero for a complementary set.
double phase_book_orthogonality_error(const PhaseBook& book);

}  // namespace ssbjt
