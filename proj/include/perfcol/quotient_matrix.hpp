#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "perfcol/graphs.hpp"
#include "perfcol/numeric.hpp"

namespace perfcol {

/// k x k non-negative integer matrix (s_ij) of a perfect coloring.
using QuotientMatrix = DenseMatrix<BigInt>;

QuotientMatrix make_quotient(std::initializer_list<std::initializer_list<long long>> rows);

/// InputError unless square, non-empty and non-negative.
void validate_quotient(const QuotientMatrix& s);

/// InputError unless every row sums to the given degree.
void validate_row_sums(const QuotientMatrix& s, const BigInt& degree);

bool is_tridiagonal(const QuotientMatrix& s);

/// Equal sizes and entries (Eigen's operator== requires equal sizes).
bool same_quotient(const QuotientMatrix& a, const QuotientMatrix& b);

/// {"k": int, "rows": [[int,...],...]}.  Entries that do not fit in 64 bits
/// are written as decimal strings and accepted back in that form.
nlohmann::json quotient_to_json(const QuotientMatrix& s);
QuotientMatrix quotient_from_json(const nlohmann::json& j);

std::string format_quotient(const QuotientMatrix& s);

}  // namespace perfcol
