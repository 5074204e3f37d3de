#include "perfcol/quotient_matrix.hpp"

#include <limits>

#include "perfcol/errors.hpp"

namespace perfcol {

namespace {

BigInt entry_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? BigInt(v.get<std::uint64_t>()) : BigInt(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    BigRational r = parse_fraction(v.get<std::string>());
    if (!is_integer(r)) throw InputError("quotient matrix entry must be an integer: " + v.get<std::string>());
    return numerator_of(r);
  }
  throw InputError("quotient matrix entry must be an integer, got " + v.dump());
}

nlohmann::json entry_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

}  // namespace

QuotientMatrix make_quotient(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto k = static_cast<Eigen::Index>(rows.size());
  QuotientMatrix s(k, k);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != k) throw InputError("quotient matrix must be square");
    Eigen::Index j = 0;
    for (long long v : row) s(i, j++) = v;
    ++i;
  }
  validate_quotient(s);
  return s;
}

void validate_quotient(const QuotientMatrix& s) {
  if (s.rows() == 0 || s.rows() != s.cols()) throw InputError("quotient matrix must be square and non-empty");
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    for (Eigen::Index j = 0; j < s.cols(); ++j) {
      if (s(i, j) < 0) throw InputError("quotient matrix entries must be non-negative");
    }
  }
}

void validate_row_sums(const QuotientMatrix& s, const BigInt& degree) {
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    const BigInt sum = s.row(i).sum();
    if (sum != degree) {
      throw InputError("row " + std::to_string(i) + " of the quotient matrix sums to " + sum.str() +
                       ", graph degree is " + degree.str());
    }
  }
}

bool is_tridiagonal(const QuotientMatrix& s) {
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    for (Eigen::Index j = 0; j < s.cols(); ++j) {
      if ((i - j > 1 || j - i > 1) && s(i, j) != 0) return false;
    }
  }
  return true;
}

nlohmann::json quotient_to_json(const QuotientMatrix& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < s.cols(); ++j) row.push_back(entry_to_json(s(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"k", s.rows()}, {"rows", std::move(rows)}};
}

QuotientMatrix quotient_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("rows")) {
    throw InputError("quotient matrix JSON needs fields \"k\" and \"rows\"");
  }
  if (!j.at("k").is_number_integer() || j.at("k").get<std::int64_t>() < 1) {
    throw InputError("quotient matrix \"k\" must be a positive integer");
  }
  const auto k = j.at("k").get<Eigen::Index>();
  const auto& rows = j.at("rows");
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != k) {
    throw InputError("quotient matrix \"rows\" must hold k rows");
  }
  QuotientMatrix s(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != k) {
      throw InputError("quotient matrix row " + std::to_string(i) + " must hold k entries");
    }
    for (Eigen::Index c = 0; c < k; ++c) s(i, c) = entry_from_json(row.at(c));
  }
  validate_quotient(s);
  return s;
}

std::string format_quotient(const QuotientMatrix& s) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    out += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < s.cols(); ++j) {
      if (j) out += ",";
      out += s(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

bool same_quotient(const QuotientMatrix& a, const QuotientMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

}  // namespace perfcol
