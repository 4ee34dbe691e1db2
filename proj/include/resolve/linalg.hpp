#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "resolve/complex.hpp"

namespace resolve {

/// Coefficient field: the rationals or GF(p) for a prime p < 2^31.
class FieldSpec {
public:
    FieldSpec() = default;
    static FieldSpec rationals() { return FieldSpec(); }
    /// Throws DomainError unless p is prime and below 2^31.
    static FieldSpec prime(std::uint64_t p);
    /// Accepts `rat` or `gf:<p>`.
    static FieldSpec parse(std::string_view text);

    bool is_rational() const noexcept { return p_ == 0; }
    /// 0 for the rationals.
    std::uint64_t characteristic() const noexcept { return p_; }
    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;

private:
    std::uint64_t p_ = 0;
};

/// Sparse integer matrix; entries are read over whichever field rank() is
/// given. Zero entries are never stored.
class ExactMatrix {
public:
    using Entry = std::pair<std::uint32_t, std::int64_t>;  // (column, value)

    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    /// Adds value to entry (row, col); an entry that cancels to zero is erased.
    void add(std::size_t row, std::size_t col, std::int64_t value);
    std::int64_t at(std::size_t row, std::size_t col) const;
    /// Nonzero entries of one row, sorted by column.
    std::span<const Entry> row(std::size_t r) const { return rows_.at(r); }
    std::size_t nonzeros() const noexcept;

    static ExactMatrix identity(std::size_t n);

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> rows_;
};

/// Rank over the given field. Over the rationals this runs fraction-free
/// sparse elimination, in 64-bit arithmetic while it fits and GMP otherwise.
std::size_t rank(const ExactMatrix& a, const FieldSpec& field);

/// Reduced homology dimensions of a simplicial complex, indexed by
/// topological degree -1 .. max dimension (face order minus one).
struct ReducedHomology {
    std::vector<std::size_t> dims;  // dims[0] is degree -1

    std::size_t at(int degree) const;
    bool is_zero() const noexcept;
    std::optional<int> first_nonzero_degree() const noexcept;
};

/// Boundary matrix of faces of order s (rows) onto faces of order s-1
/// (columns), with the orientation signs. Rows and columns follow the
/// complex's canonical face order. Requires s >= 1.
ExactMatrix boundary_matrix(const SimplicialComplex& complex, std::size_t order);

ReducedHomology reduced_homology_dims(const SimplicialComplex& complex, const FieldSpec& field);

bool is_acyclic(const SimplicialComplex& complex, const FieldSpec& field);

}  // namespace resolve
