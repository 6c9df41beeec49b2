#include "mld/matrix.hpp"

#include "mld/errors.hpp"

namespace mld {

void PolyMatrix::append_row(std::vector<Polynomial> entries, std::string label) {
  if (entries.size() != cols_) throw InvalidArgument("matrix row has the wrong length");
  for (auto& e : entries) {
    if (!e.ring()) {
      e = Polynomial(ring_);
    } else if (!e.ring()->same_variables(*ring_)) {
      throw RingMismatch("matrix entry from a different ring");
    } else {
      e = e.in_ring(ring_);
    }
  }
  rows_.push_back(std::move(entries));
  labels_.push_back(std::move(label));
}

PolyMatrix jacobian(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  PolyMatrix m(ring, ring->size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    m.append_row(gradient(gens[i].in_ring(ring)), "grad g" + std::to_string(i + 1));
  }
  return m;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

// Laplace expansion along the first remaining row.
Polynomial cofactor_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                        std::size_t first, std::vector<std::size_t>& cols) {
  if (first == rows.size()) return Polynomial::constant(m.ring(), 1);
  if (first + 1 == rows.size()) return m.at(rows[first], cols[0]);
  Polynomial acc(m.ring());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Polynomial& a = m.at(rows[first], cols[j]);
    if (a.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t l = 0; l < cols.size(); ++l) {
      if (l != j) rest.push_back(cols[l]);
    }
    Polynomial sub = cofactor_det(m, rows, first + 1, rest);
    if (sub.is_zero()) continue;
    if (j % 2 == 0) {
      acc += a * sub;
    } else {
      acc -= a * sub;
    }
  }
  return acc;
}

struct MinorJobs {
  std::vector<std::vector<std::size_t>> row_sets;
  std::vector<std::vector<std::size_t>> col_sets;
};

MinorJobs plan(const PolyMatrix& m, std::size_t k) {
  if (k > m.rows() || k > m.cols()) {
    throw InvalidArgument("minor size " + std::to_string(k) + " exceeds the matrix dimensions");
  }
  return {subsets(m.rows(), k), subsets(m.cols(), k)};
}

}  // namespace

std::vector<Polynomial> minors_serial(const PolyMatrix& m, std::size_t k) {
  const MinorJobs jobs = plan(m, k);
  std::vector<Polynomial> out;
  out.reserve(jobs.row_sets.size() * jobs.col_sets.size());
  for (const auto& r : jobs.row_sets) {
    for (auto c : jobs.col_sets) out.push_back(cofactor_det(m, r, 0, c));
  }
  return out;
}

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k) {
  const MinorJobs jobs = plan(m, k);
  const std::size_t nc = jobs.col_sets.size();
  const auto total = static_cast<std::ptrdiff_t>(jobs.row_sets.size() * nc);
  std::vector<Polynomial> out(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
    const auto u = static_cast<std::size_t>(idx);
    auto cols = jobs.col_sets[u % nc];
    out[u] = cofactor_det(m, jobs.row_sets[u / nc], 0, cols);
  }
  return out;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("determinant of a non-square matrix");
  std::vector<std::size_t> rows(m.rows());
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = cols[i] = i;
  return cofactor_det(m, rows, 0, cols);
}

}  // namespace mld
