#pragma once

#include <string>
#include <vector>

#include "mld/polynomial.hpp"

namespace mld {

/// Dense matrix of polynomials over one ring, with optional row labels.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t cols) : ring_(std::move(ring)), cols_(cols) {}

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<Polynomial>& row(std::size_t i) const { return rows_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  /// Throws InvalidArgument on a length mismatch, RingMismatch on a foreign entry.
  void append_row(std::vector<Polynomial> entries, std::string label = {});

 private:
  RingPtr ring_;
  std::size_t cols_;
  std::vector<std::vector<Polynomial>> rows_;
  std::vector<std::string> labels_;
};

/// Row i is the gradient of gens[i].
PolyMatrix jacobian(const RingPtr& ring, const std::vector<Polynomial>& gens);

/// All k x k minors, enumerated by row set then column set, both in
/// lexicographic order. Each minor is a cofactor expansion; minors are
/// computed in parallel with OpenMP. k = 0 yields the single minor 1.
/// Throws InvalidArgument unless k <= min(rows, cols).
std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k);

/// Single-threaded reference for minors(); same output.
std::vector<Polynomial> minors_serial(const PolyMatrix& m, std::size_t k);

/// Determinant of a square matrix.
Polynomial determinant(const PolyMatrix& m);

/// k-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace mld
