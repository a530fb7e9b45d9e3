#include "ppair/hyperplane.hpp"

#include <sstream>

namespace ppair {

namespace {

using Matrix = std::vector<std::vector<std::uint32_t>>;

// Row-reduces [M | I] over F_q. Returns the rank of M; when it is full, inv
// receives M^{-1}.
unsigned gauss_jordan(const BaseField& fq, Matrix M, Matrix* inv) {
  const std::size_t rows = M.size();
  const std::size_t cols = rows ? M[0].size() : 0;
  Matrix I(rows, std::vector<std::uint32_t>(rows, 0));
  for (std::size_t i = 0; i < rows; ++i) I[i][i] = 1;
  unsigned rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && M[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(M[pivot], M[rank]);
    std::swap(I[pivot], I[rank]);
    const std::uint32_t s = fq.inv(M[rank][col]);
    for (std::size_t j = 0; j < cols; ++j) M[rank][j] = fq.mul(M[rank][j], s);
    for (std::size_t j = 0; j < rows; ++j) I[rank][j] = fq.mul(I[rank][j], s);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || M[r][col] == 0) continue;
      const std::uint32_t f = M[r][col];
      for (std::size_t j = 0; j < cols; ++j) M[r][j] = fq.sub(M[r][j], fq.mul(f, M[rank][j]));
      for (std::size_t j = 0; j < rows; ++j) I[r][j] = fq.sub(I[r][j], fq.mul(f, I[rank][j]));
    }
    ++rank;
  }
  if (inv && rank == rows && rows == cols) *inv = I;
  return rank;
}

// Column i holds the coefficients of elements[i].
Matrix basis_matrix(const FieldContext& ctx, const std::vector<FieldElement>& elements) {
  Matrix M(ctx.m(), std::vector<std::uint32_t>(elements.size(), 0));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (unsigned r = 0; r < ctx.m(); ++r) M[r][i] = elements[i].c[r];
  }
  return M;
}

}  // namespace

unsigned rank_over_base(const FieldContext& ctx, const std::vector<FieldElement>& elements) {
  if (elements.empty()) return 0;
  return gauss_jordan(ctx.base(), basis_matrix(ctx, elements), nullptr);
}

HyperplaneSystem::HyperplaneSystem(FieldPtr ctx, Coordinates constants, std::optional<std::vector<FieldElement>> basis)
    : ctx_(std::move(ctx)), constants_(std::move(constants)) {
  const unsigned m = ctx_->m();
  if (constants_.size() != m) {
    throw InputError("expected " + std::to_string(m) + " hyperplane constants, got " + std::to_string(constants_.size()));
  }
  for (std::uint32_t c : constants_) {
    if (c >= ctx_->q()) throw InputError("hyperplane constant " + std::to_string(c) + " is not an element of F_q");
  }
  if (basis) {
    basis_ = *basis;
    if (basis_.size() != m) throw InputError("basis must have exactly m elements");
    for (const auto& b : basis_) {
      for (unsigned r = m; r < kMaxExtDegree; ++r) {
        if (b.c[r]) throw InputError("basis element has too many coefficients");
      }
    }
  } else {
    for (unsigned i = 0; i < m; ++i) {
      FieldElement b;
      b.c[i] = 1;
      basis_.push_back(b);
    }
  }
  polynomial_basis_ = true;
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned r = 0; r < m; ++r) {
      if (basis_[i].c[r] != (r == i ? 1u : 0u)) polynomial_basis_ = false;
    }
  }
  const unsigned rank = gauss_jordan(ctx_->base(), basis_matrix(*ctx_, basis_), &inverse_);
  if (rank != m) {
    throw InputError("basis is linearly dependent over F_q: rank " + std::to_string(rank) + " < m = " + std::to_string(m));
  }
}

Coordinates HyperplaneSystem::coordinates(const FieldElement& a) const {
  const unsigned m = this->m();
  Coordinates out(m, 0);
  if (polynomial_basis_) {
    for (unsigned i = 0; i < m; ++i) out[i] = a.c[i];
    return out;
  }
  const BaseField& fq = ctx_->base();
  for (unsigned i = 0; i < m; ++i) {
    std::uint32_t acc = 0;
    for (unsigned r = 0; r < m; ++r) acc = fq.add(acc, fq.mul(inverse_[i][r], a.c[r]));
    out[i] = acc;
  }
  return out;
}

FieldElement HyperplaneSystem::combine(const Coordinates& coords) const {
  if (coords.size() != m()) throw InputError("coordinate vector has wrong length");
  FieldElement out;
  for (unsigned i = 0; i < m(); ++i) out = ctx_->add(out, ctx_->scalar_mul(coords[i], basis_[i]));
  return out;
}

bool HyperplaneSystem::in_avoiding_set(const FieldElement& a) const {
  const Coordinates co = coordinates(a);
  for (unsigned j = 0; j < m(); ++j) {
    if (co[j] == constants_[j]) return false;
  }
  return true;
}

bool HyperplaneSystem::in_hyperplane(const FieldElement& a, unsigned j) const {
  if (j >= m()) throw InputError("hyperplane index out of range");
  return coordinates(a)[j] == constants_[j];
}

std::uint64_t HyperplaneSystem::avoiding_size() const {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < m(); ++i) n *= ctx_->q() - 1;
  return n;
}

std::vector<std::uint32_t> HyperplaneSystem::first_coordinate_values() const { return avoiding_values()[0]; }

std::vector<std::vector<std::uint32_t>> HyperplaneSystem::avoiding_values() const {
  std::vector<std::vector<std::uint32_t>> values(m());
  for (unsigned i = 0; i < m(); ++i) {
    for (std::uint32_t v = 0; v < ctx_->q(); ++v) {
      if (v != constants_[i]) values[i].push_back(v);
    }
  }
  return values;
}

std::vector<FieldElement> HyperplaneSystem::enumerate_avoiding(std::uint64_t budget) const {
  std::vector<FieldElement> out;
  out.reserve(avoiding_size() <= budget ? avoiding_size() : 0);
  for_each_avoiding([&](const FieldElement& a) { out.push_back(a); }, budget);
  return out;
}

std::string HyperplaneSystem::describe() const {
  std::ostringstream os;
  os << "basis=";
  for (unsigned i = 0; i < m(); ++i) os << (i ? ";" : "") << ctx_->to_string(basis_[i]);
  os << " constants=[";
  for (unsigned i = 0; i < m(); ++i) os << (i ? "," : "") << constants_[i];
  os << "]";
  return os.str();
}

}  // namespace ppair
